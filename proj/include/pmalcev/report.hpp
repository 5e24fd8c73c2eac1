#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pmalcev {

enum class Status { Pass, Fail, Error };

/// Outcome of a structural check. A failing report always carries the first
/// offending basis tuple (lexicographically smallest) plus the formatted
/// defect values so the failure can be re-evaluated independently.
struct CheckReport {
  Status status = Status::Pass;
  std::vector<std::size_t> witness;
  std::vector<std::string> defect;
  std::vector<std::string> notes;

  bool passed() const { return status == Status::Pass; }

  static CheckReport pass() { return {}; }

  static CheckReport pass_with_note(std::string note) {
    CheckReport r;
    r.notes.push_back(std::move(note));
    return r;
  }

  static CheckReport fail(std::vector<std::size_t> witness,
                          std::vector<std::string> defect,
                          std::string note = {}) {
    CheckReport r;
    r.status = Status::Fail;
    r.witness = std::move(witness);
    r.defect = std::move(defect);
    if (!note.empty()) r.notes.push_back(std::move(note));
    return r;
  }

  static CheckReport error(std::string note) {
    CheckReport r;
    r.status = Status::Error;
    r.notes.push_back(std::move(note));
    return r;
  }
};

}  // namespace pmalcev
