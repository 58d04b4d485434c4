// qchan: inspect quantum channels given by Kraus operators.
//
//   qchan analyze  (FILE | --builtin NAME) [--rank-tol T] [--check-tol T] [--timing]
//   qchan tensor   SOURCE SOURCE [-o FILE]
//   qchan dual     SOURCE [-o FILE]
//   qchan choi     SOURCE [-o FILE]
//   qchan counterexample [--json]
//   qchan version
//
// A SOURCE is a ChannelDocument path or `builtin:NAME` (eps3, eps4, id:d,
// depol:d, fourier:d, shift:d, clock:d, x, y, z, h).
//
// Exit codes: 0 success, 1 counterexample self-check failed, 2 input error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qchan/catalog.hpp"
#include "qchan/choi.hpp"
#include "qchan/document.hpp"
#include "qchan/extremal.hpp"

namespace {

using namespace qchan;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;

constexpr std::string_view kBuiltinPrefix = "builtin:";

ChannelDocument resolve(const std::string& source) {
  if (source.starts_with(kBuiltinPrefix)) {
    NamedChannel ch = builtin(std::string_view(source).substr(kBuiltinPrefix.size()));
    return {ch.name, ch.provenance, std::move(ch.kraus)};
  }
  return load_channel(source);
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << dump(j);
}

std::string label(const ChannelDocument& doc, const std::string& fallback) {
  return doc.name.value_or(fallback);
}

std::string dual_name(const std::string& name) {
  constexpr std::string_view suffix = "^dagger";
  if (name.ends_with(suffix)) return name.substr(0, name.size() - suffix.size());
  return name + std::string(suffix);
}

int run_counterexample(bool as_json, const TolerancePolicy& tol) {
  const NamedChannel factors[] = {epsilon3(), epsilon4()};
  bool ok = true;
  Json reports = Json::array();

  for (const auto& f : factors) {
    const ExtremalityReport rep = analyze(f.kraus, tol);
    const bool extreme = rep.extreme_ucpt() == Verdict::True;
    ok = ok && extreme;
    if (as_json) {
      Json r = report_to_json(rep, tol);
      r["name"] = f.name;
      reports.push_back(std::move(r));
    } else {
      std::printf("factor %-5s dim %zu  CR %zu  extreme UCPT: %s\n", f.name.c_str(), rep.dim_in,
                  rep.choi_rank, extreme ? "yes" : "NO");
    }
  }

  for (const auto& a : factors) {
    for (const auto& b : factors) {
      const KrausSet product = tensor(a.kraus, b.kraus);
      const ExtremalityReport rep = analyze(product, tol);
      const double coarse = std::sqrt(2.0) * static_cast<double>(rep.dim_in);
      const bool shortcut = tensor_nonextremality_check(a.kraus, b.kraus, tol);
      const bool non_extreme = rep.channel_class.ucpt && rep.extreme_ucpt() == Verdict::False;
      ok = ok && non_extreme && shortcut;
      const std::string name = a.name + "(x)" + b.name;
      if (as_json) {
        Json r = report_to_json(rep, tol);
        r["name"] = name;
        r["shortcut_applies"] = shortcut;
        reports.push_back(std::move(r));
      } else {
        std::printf("%-10s dim %3zu  CR %2zu %s sqrt2*dim %.4f  shortcut %s  extreme UCPT: %s (%s)\n",
                    name.c_str(), rep.dim_in, rep.choi_rank,
                    static_cast<double>(rep.choi_rank) > coarse ? ">" : "<=", coarse,
                    shortcut ? "yes" : "no", non_extreme ? "no" : "YES",
                    std::string(to_string(rep.ucpt.path)).c_str());
      }
    }
  }

  if (as_json) {
    std::cout << dump(reports);
  } else {
    std::printf("%s\n", ok ? "all four products are non-extreme; both factors are extreme"
                           : "SELF-CHECK FAILED");
  }
  return ok ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kraus-operator channel analysis: membership and extremality in CPT, UCP, UCPT"};
  app.require_subcommand(1);

  TolerancePolicy tol;
  app.add_option("--rank-tol", tol.rel_rank_tol, "relative eigenvalue cutoff for numerical rank")
      ->capture_default_str();
  app.add_option("--check-tol", tol.abs_check_tol, "max-norm tolerance for identity checks")
      ->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "report class membership and extremality");
  std::string analyze_file;
  std::string analyze_builtin;
  bool timing = false;
  auto* file_opt = analyze_cmd->add_option("file", analyze_file, "ChannelDocument JSON");
  auto* builtin_opt = analyze_cmd->add_option("--builtin", analyze_builtin, "built-in channel name");
  file_opt->excludes(builtin_opt);
  analyze_cmd->add_flag("--timing", timing, "include elapsed time in the report");

  auto* tensor_cmd = app.add_subcommand("tensor", "write the tensor product of two channels");
  std::vector<std::string> tensor_sources;
  std::string tensor_out;
  tensor_cmd->add_option("sources", tensor_sources, "two channel sources")->required()->expected(2);
  tensor_cmd->add_option("-o,--out", tensor_out, "output path (default: stdout)");

  auto* dual_cmd = app.add_subcommand("dual", "write the dual (adjoint) channel");
  std::string dual_source;
  std::string dual_out;
  dual_cmd->add_option("source", dual_source, "channel source")->required();
  dual_cmd->add_option("-o,--out", dual_out, "output path (default: stdout)");

  auto* choi_cmd = app.add_subcommand("choi", "dump the Choi matrix");
  std::string choi_source;
  std::string choi_out;
  choi_cmd->add_option("source", choi_source, "channel source")->required();
  choi_cmd->add_option("-o,--out", choi_out, "output path (default: stdout)");

  auto* cex_cmd = app.add_subcommand("counterexample",
                                     "check that eps_n (x) eps_m is not extreme for n, m in {3, 4}");
  bool cex_json = false;
  cex_cmd->add_flag("--json", cex_json, "emit the reports as a JSON array");

  auto* version_cmd = app.add_subcommand("version", "print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    tol.validate();
    if (*version_cmd) {
      std::cout << "qchan " << kToolVersion << " (channel format " << kFormatVersion << ")\n";
      return kExitOk;
    }
    if (*analyze_cmd) {
      if (analyze_file.empty() && analyze_builtin.empty()) {
        throw InputError("analyze needs a file or --builtin NAME");
      }
      const ChannelDocument doc = analyze_builtin.empty()
                                      ? load_channel(analyze_file)
                                      : resolve(std::string(kBuiltinPrefix) + analyze_builtin);
      const auto start = std::chrono::steady_clock::now();
      const ExtremalityReport rep = analyze(doc.kraus, tol);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      Json j = report_to_json(rep, tol, timing ? std::optional(elapsed.count()) : std::nullopt);
      if (doc.name) j["name"] = *doc.name;
      std::cout << dump(j);
      return kExitOk;
    }
    if (*tensor_cmd) {
      const ChannelDocument a = resolve(tensor_sources[0]);
      const ChannelDocument b = resolve(tensor_sources[1]);
      ChannelDocument out{label(a, "a") + "(x)" + label(b, "b"), std::nullopt,
                          tensor(a.kraus, b.kraus)};
      emit(to_json(out), tensor_out);
      return kExitOk;
    }
    if (*dual_cmd) {
      const ChannelDocument a = resolve(dual_source);
      ChannelDocument out{a.name ? std::optional(dual_name(*a.name)) : std::nullopt, std::nullopt,
                          dual(a.kraus)};
      emit(to_json(out), dual_out);
      return kExitOk;
    }
    if (*choi_cmd) {
      emit(choi_to_json(choi_of(resolve(choi_source).kraus)), choi_out);
      return kExitOk;
    }
    if (*cex_cmd) return run_counterexample(cex_json, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qchan: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
