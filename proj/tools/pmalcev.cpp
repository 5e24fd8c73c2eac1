#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmalcev/errors.hpp"
#include "pmalcev/io.hpp"

namespace {

struct CommandSpec {
  const char* name;
  const char* help;
  int arity;  // number of positional input specs
};

constexpr CommandSpec kCommands[] = {
    {"check-algebra", "Verify the ten-term defining identity. Input: ALGEBRA", 1},
    {"check-malcev", "Verify antisymmetry and the Malcev identity. Input: ALGEBRA", 1},
    {"check-bimodule", "Verify the four action identities. Input: BIMODULE", 1},
    {"build-semidirect", "Print the semi-direct product algebra. Input: BIMODULE", 1},
    {"build-dual", "Print the dual bimodule. Input: BIMODULE", 1},
    {"check-operator", "Verify the O-operator identity. Inputs: MAP BIMODULE", 2},
    {"check-rota-baxter", "Verify the Rota-Baxter identity. Inputs: ALGEBRA MAP", 2},
    {"induced-product", "Print the product induced on the module. Inputs: MAP BIMODULE", 2},
    {"check-compat", "Verify operator compatibility. Inputs: MAP1 MAP2 BIMODULE", 3},
    {"check-nijenhuis", "Verify the Nijenhuis identity. Inputs: ALGEBRA MAP", 2},
    {"check-pair", "Verify the Nijenhuis-pair conditions. Inputs: N S BIMODULE", 3},
    {"check-dual-pair", "Verify the dual-pair conditions. Inputs: N S BIMODULE", 3},
    {"deform", "Print the deformation data of a pair. Inputs: N S BIMODULE", 3},
    {"check-deformation", "Verify a deformation at the sample points. Inputs: BIMODULE DEFORMATION", 2},
    {"lift", "Print the ambient algebra and lifted tensor. Inputs: MAP BIMODULE", 2},
    {"cybe-check", "Verify that the Yang-Baxter residual vanishes. Inputs: ALGEBRA TENSOR2", 2},
    {"theorem11", "Solution versus operator characterization. Inputs: ALGEBRA TENSOR2", 2},
    {"theorem12", "Operator versus lifted-solution characterization. Inputs: MAP BIMODULE", 2},
    {"bilinear-equiv", "Three bilinear-form equivalences for invertible maps. Inputs: ALGEBRA MAP", 2},
    {"check-on-structure", "Verify the structure-triple conditions. Input: STRUCTURE", 1},
    {"hierarchy", "Operator hierarchy up to --kmax. Input: STRUCTURE", 1},
    {"check-rn", "Verify an r-N structure two ways. Inputs: ALGEBRA TENSOR2 MAP", 3},
    {"check-hessian", "Verify a pseudo-Hessian form two ways. Inputs: ALGEBRA MAP", 2},
    {"check-bn", "Verify a B-N structure two ways. Inputs: ALGEBRA B N", 3},
    {"list-fixtures", "List the built-in fixtures", 0},
};

bool parse_samples(const std::string& text, std::vector<pmalcev::Scalar>& out) {
  out.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(pmalcev::parse_scalar(item));
    } catch (const pmalcev::ParseError&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for structure-constant algebras, their module "
               "actions, operator identities and Yang-Baxter solutions"};
  app.require_subcommand(1);
  app.fallthrough();

  bool witness = false;
  unsigned kmax = 3;
  std::string t_samples;
  std::string fixture;
  app.add_flag("--witness", witness, "Print the first failing tuple");
  app.add_option("--kmax", kmax, "Hierarchy depth (default 3)");
  app.add_option("--t-samples", t_samples,
                 "Comma-separated rational sample points, e.g. \"0,1,-1,2,3\"");
  app.add_option("--fixture", fixture,
                 "Use the named fixture as the sole input");

  std::vector<std::vector<std::string>> args(std::size(kCommands));
  for (std::size_t i = 0; i < std::size(kCommands); ++i) {
    CLI::App* sub = app.add_subcommand(kCommands[i].name, kCommands[i].help);
    if (kCommands[i].arity > 0)
      sub->add_option("inputs", args[i], "Input specs: fixture:NAME, "
                                         "regular:SPEC, dual-regular:SPEC, "
                                         "commutator:SPEC, or a file path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  pmalcev::Job job;
  job.witness = witness;
  job.kmax = kmax;
  if (!t_samples.empty() && !parse_samples(t_samples, job.t_samples)) {
    std::cerr << "error: --t-samples must be a comma-separated list of "
                 "rationals\n";
    return 2;
  }

  for (std::size_t i = 0; i < std::size(kCommands); ++i) {
    if (app.got_subcommand(kCommands[i].name)) {
      job.cmd = kCommands[i].name;
      job.inputs = args[i];
      if (!fixture.empty()) job.inputs.push_back("fixture:" + fixture);
      if (job.inputs.size() != static_cast<std::size_t>(kCommands[i].arity)) {
        std::cerr << "error: " << job.cmd << " expects "
                  << kCommands[i].arity << " input(s)\n";
        return 2;
      }
      break;
    }
  }

  pmalcev::JobResult result = pmalcev::run_job(job);
  std::cout << result.output;
  return result.exit_code;
}
