#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pmalcev/errors.hpp"
#include "pmalcev/io.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_pmalcev, m) {
  m.doc() =
      "Exact checker for structure-constant algebras, module actions, "
      "operator identities and Yang-Baxter solutions";

  m.def("fixtures", &pmalcev::fixture_names,
        "Names of the built-in example documents");

  m.def(
      "fixture",
      [](const std::string& name) {
        return pmalcev::serialize(pmalcev::load_fixture(name));
      },
      py::arg("name"), "Serialized form of a built-in document");

  m.def(
      "run",
      [](const std::string& cmd, const std::vector<std::string>& inputs,
         bool witness, unsigned kmax,
         const std::optional<std::vector<std::string>>& t_samples) {
        pmalcev::Job job;
        job.cmd = cmd;
        job.inputs = inputs;
        job.witness = witness;
        job.kmax = kmax;
        if (t_samples) {
          job.t_samples.clear();
          for (const auto& s : *t_samples)
            job.t_samples.push_back(pmalcev::parse_scalar(s));
        }
        const pmalcev::JobResult result = pmalcev::run_job(job);
        return py::make_tuple(result.exit_code, result.output);
      },
      py::arg("cmd"), py::arg("inputs") = std::vector<std::string>{},
      py::arg("witness") = false, py::arg("kmax") = 3u,
      py::arg("t_samples") = std::nullopt,
      "Run one command; returns (exit_code, report_text)");
}
