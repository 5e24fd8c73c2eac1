#include "pmalcev/scalar.hpp"

#include <regex>

#include "pmalcev/errors.hpp"

namespace pmalcev {

Scalar parse_scalar(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?\d+(/\d+)?$)");
  if (!std::regex_match(text, pattern)) {
    throw ParseError("invalid rational literal \"" + text + "\"");
  }
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (den.find_first_not_of('0') == std::string::npos) {
      throw ParseError("zero denominator in \"" + text + "\"");
    }
  }
  return text.front() == '+' ? Scalar(text.substr(1)) : Scalar(text);
}

std::string format_scalar(const Scalar& value) {
  return value.str();
}

}  // namespace pmalcev
