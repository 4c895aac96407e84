// semimod: conductors, syzygies and duals of semimodules over <alpha, beta>.
//
// Exit codes: 0 success, 1 usage or validation error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semimod/semimod.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerificationFailed = 2;

int run_analyze(semimod::Value alpha, semimod::Value beta, const std::vector<semimod::Value>& gens,
                bool json) {
  const semimod::SemigroupPair s(alpha, beta);
  const auto report = semimod::analyze(s, gens);
  if (json) std::cout << semimod::to_json(report).dump(2) << '\n';
  else std::cout << semimod::to_text(report);
  return report.all_passed() ? kOk : kVerificationFailed;
}

int run_enumerate(semimod::Value alpha, semimod::Value beta, bool count_only, bool json) {
  const semimod::SemigroupPair s(alpha, beta);
  const auto lean_sets = semimod::enumerate_semimodules(s);
  if (json) {
    semimod::Json j;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["count"] = lean_sets.size();
    if (!count_only) j["lean_sets"] = lean_sets;
    std::cout << j.dump(2) << '\n';
  } else if (count_only) {
    std::cout << lean_sets.size() << '\n';
  } else {
    for (const auto& lean : lean_sets) std::cout << semimod::detail::bracket(lean) << '\n';
  }
  return kOk;
}

int run_verify(semimod::Value max_sum, bool json) {
  const auto reports = semimod::sweep_verify(max_sum);
  if (json) std::cout << semimod::to_json(reports).dump(2) << '\n';
  else std::cout << semimod::to_text(reports);
  for (const auto& r : reports) {
    if (!r.violations.empty()) return kVerificationFailed;
  }
  return kOk;
}

int run_render(semimod::Value alpha, semimod::Value beta, const std::vector<semimod::Value>& gens,
               const std::string& format, const std::string& out_path) {
  const semimod::SemigroupPair s(alpha, beta);
  const auto fmt = semimod::parse_format(format);
  const semimod::Semimodule d(s, gens);
  const std::string doc = semimod::render(s, semimod::lean_to_path(s, d.generators()), fmt);
  if (out_path.empty()) {
    std::cout << doc;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << doc)) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conductors, syzygies, Apery sets and duals of semimodules over <alpha,beta>"};
  app.require_subcommand(1);

  semimod::Value alpha = 0, beta = 0, max_sum = 0;
  std::vector<semimod::Value> gens;
  bool json = false, count_only = false;
  std::string format, out_path;

  auto* analyze = app.add_subcommand("analyze", "Full report for one semimodule");
  analyze->add_option("--alpha", alpha, "Smaller semigroup generator")->required();
  analyze->add_option("--beta", beta, "Larger semigroup generator")->required();
  analyze->add_option("--gens", gens, "Semimodule generators, comma separated")
      ->required()
      ->delimiter(',');
  analyze->add_flag("--json", json, "Emit JSON");

  auto* enumerate = app.add_subcommand("enumerate", "List every lean set of <alpha,beta>");
  enumerate->add_option("--alpha", alpha)->required();
  enumerate->add_option("--beta", beta)->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of lean sets");
  enumerate->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Exhaustively check every semimodule of small pairs");
  verify->add_option("--max-sum", max_sum, "Largest alpha+beta to sweep")->required();
  verify->add_flag("--json", json, "Emit JSON");

  auto* render = app.add_subcommand("render", "Draw the lattice path of a semimodule");
  render->add_option("--alpha", alpha)->required();
  render->add_option("--beta", beta)->required();
  render->add_option("--gens", gens)->required()->delimiter(',');
  render->add_option("--format", format, "ascii, svg or tikz")->required();
  render->add_option("--out", out_path, "Write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) return run_analyze(alpha, beta, gens, json);
    if (*enumerate) return run_enumerate(alpha, beta, count_only, json);
    if (*verify) return run_verify(max_sum, json);
    if (*render) return run_render(alpha, beta, gens, format, out_path);
  } catch (const semimod::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const semimod::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}
