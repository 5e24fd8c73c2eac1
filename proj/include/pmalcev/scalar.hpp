#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pmalcev {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; there is no floating point anywhere in the library.
using Scalar = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Rejects zero denominators and anything that
/// is not a plain integer fraction.
Scalar parse_scalar(const std::string& text);

/// Canonical form: "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);

}  // namespace pmalcev
