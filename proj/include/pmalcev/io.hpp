#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pmalcev/structures.hpp"

namespace pmalcev {

/// One batch command: a name from the command table, input specs (either
/// "fixture:NAME", "regular:ALG", "dual-regular:ALG", "commutator:ALG" or a
/// file path), and the option values.
struct Job {
  std::string cmd;
  std::vector<std::string> inputs;
  bool witness = false;
  unsigned kmax = 3;
  std::vector<Scalar> t_samples = {0, 1, -1, 2, 3};
};

/// A parsed input file. kind is one of algebra, bimodule, map, tensor2,
/// structure, deformation, job; 1-based indices in files, 0-based in memory.
struct Document {
  std::string kind;
  std::string name;
  std::variant<std::monostate, Algebra, Bimodule, Matrix, ONStructure,
               DeformationData, Job>
      payload;
};

/// Parses a document from text. Throws ParseError (with line/column for
/// syntax errors) and DimensionError for ragged matrices or tensors.
Document parse(const std::string& text);

/// Serializes to the canonical text form; parse and serialize round-trip
/// exactly (rationals canonicalize to lowest terms).
std::string serialize(const Document& doc);

std::vector<std::string> fixture_names();

/// Returns the named built-in document; throws ParseError on unknown names.
Document load_fixture(const std::string& name);

struct JobResult {
  int exit_code = 0;  // 0 pass, 1 fail, 2 usage or parse error
  std::string output;
};

/// Runs one command and returns its deterministic report stream.
JobResult run_job(const Job& job);

}  // namespace pmalcev
