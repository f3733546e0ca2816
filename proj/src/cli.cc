// Copyright 2026 The locol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locol/cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>

#include "locol/certificate.h"
#include "locol/constructions.h"
#include "locol/formulas.h"
#include "locol/random_instances.h"
#include "locol/segments.h"
#include "locol/solver.h"

namespace locol::cli {
namespace {

Mode RequireMode(const std::string& name) {
  auto mode = ParseMode(name);
  if (!mode) throw CLI::ValidationError("--mode", "expected locating or nl");
  return *mode;
}

// ---- gen -------------------------------------------------------------------

int Gen(const std::string& spec_text, const std::string& mode_text,
        std::ostream& out) {
  const GraphSpec spec = ParseGraphSpec(spec_text);
  Mode mode = Mode::kNeighborLocating;
  if (!mode_text.empty()) {
    mode = RequireMode(mode_text);
  } else if (spec.as<JoinSpec>() || spec.as<FriendshipSpec>()) {
    mode = Mode::kLocating;
  }
  const Certificate cert = Certify(spec, OptimalColoring(spec), mode);
  out << FormatCertificate(cert) << '\n';
  return cert.valid ? kOk : kInvalid;
}

// ---- verify ----------------------------------------------------------------

int VerifyInline(const std::string& spec_text, const std::string& colors,
                 const std::string& mode_text, std::ostream& out) {
  const Certificate cert = Certify(ParseGraphSpec(spec_text),
                                   Coloring(ParseColorList(colors)),
                                   RequireMode(mode_text));
  out << FormatCertificate(cert) << '\n';
  return cert.valid ? kOk : kInvalid;
}

int VerifyStream(std::istream& records, std::ostream& out, std::ostream& err) {
  int status = kOk;
  std::string line;
  int line_no = 0;
  while (std::getline(records, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Certificate claimed = ParseCertificate(line);
    const Certificate actual = Recheck(claimed);
    out << FormatCertificate(actual) << '\n';
    if (!(actual == claimed)) {
      err << "line " << line_no << ": recorded verdict or witness does not "
          << "match the recomputed one\n";
      status = kInvalid;
    }
    if (!actual.valid) status = kInvalid;
  }
  return status;
}

// ---- solve -----------------------------------------------------------------

int Solve(const std::string& spec_text, const std::string& mode_text,
          const SearchConfig& cfg, std::ostream& out) {
  const GraphSpec spec = ParseGraphSpec(spec_text);
  const Mode mode = RequireMode(mode_text);
  const SolveResult r = MinColorsExact(BuildGraph(spec), mode, cfg);
  out << "spec=" << ToString(spec) << " mode=" << ModeName(mode);
  switch (r.status) {
    case SolveResult::Status::kSolved:
      out << " status=solved value=" << r.value
          << " colors=" << FormatColorList(r.witness->colors());
      break;
    case SolveResult::Status::kExceededBudget:
      out << " status=exceeded-budget";
      break;
    case SolveResult::Status::kInconclusive:
      out << " status=inconclusive";
      break;
  }
  out << " refuted=" << r.largest_refuted << " nodes=" << r.nodes_explored
      << " search=" << r.search_mode << '\n';
  switch (r.status) {
    case SolveResult::Status::kSolved: return kOk;
    case SolveResult::Status::kExceededBudget: return kInvalid;
    case SolveResult::Status::kInconclusive: return kInconclusive;
  }
  return kInternal;
}

// ---- formula ---------------------------------------------------------------

int Formula(const std::string& spec_text,
            const std::vector<std::string>& join_specs,
            const std::string& mode_text, std::ostream& out) {
  FormulaResult r;
  if (!join_specs.empty()) {
    const Mode mode = mode_text.empty() ? Mode::kLocating : RequireMode(mode_text);
    const GraphSpec joined = GraphSpec::Join(ParseGraphSpec(join_specs[0]),
                                             ParseGraphSpec(join_specs[1]));
    r = FormulaFor(joined, mode);
  } else {
    if (mode_text.empty()) throw CLI::ValidationError("--mode", "required with --graph");
    r = FormulaFor(ParseGraphSpec(spec_text), RequireMode(mode_text));
  }
  out << "value=" << r.value << " mode=" << ModeName(r.mode)
      << " provenance=" << r.provenance << '\n';
  return kOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
  std::optional<int> from;
  std::optional<int> to;
  std::uint64_t seed = 1;
  int samples = 200;
};

struct SweepLine {
  std::string range;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool seeded = false;

  void Record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

SweepLine SweepRange(int from, int to,
                     const std::function<bool(int)>& check) {
  SweepLine line;
  line.range = std::to_string(from) + ".." + std::to_string(to);
  for (int n = from; n <= to; ++n) {
    bool ok = false;
    try {
      ok = check(n);
    } catch (const std::exception&) {
      ok = false;
    }
    line.Record(ok, "n=" + std::to_string(n));
  }
  return line;
}

SweepLine RunSweep(const std::string& name, const SweepOptions& o) {
  if (name == "paths") {
    return SweepRange(o.from.value_or(2), o.to.value_or(300), [](int n) {
      const ColoringSeq seq = PathColoring(n);
      return seq.palette_size() == ChiL2Path(n) &&
             IsNeighborLocating(MakePath(n), seq.ToColoring()).valid;
    });
  }
  if (name == "cycles") {
    return SweepRange(o.from.value_or(3), o.to.value_or(300), [](int n) {
      const ColoringSeq seq = CycleColoring(n);
      return seq.palette_size() == ChiL2Cycle(n) &&
             IsNeighborLocating(MakeCycle(n), seq.ToColoring()).valid;
    });
  }
  if (name == "oracle-paths") {
    return SweepRange(o.from.value_or(2), o.to.value_or(12), [](int n) {
      const SolveResult r = MinColorsExact(MakePath(n), Mode::kNeighborLocating);
      return r.status == SolveResult::Status::kSolved && r.value == ChiL2Path(n);
    });
  }
  if (name == "oracle-cycles") {
    return SweepRange(o.from.value_or(3), o.to.value_or(12), [](int n) {
      const SolveResult r = MinColorsExact(MakeCycle(n), Mode::kNeighborLocating);
      return r.status == SolveResult::Status::kSolved && r.value == ChiL2Cycle(n);
    });
  }
  Rng rng(o.seed);
  SweepLine line;
  line.seeded = true;
  line.range = "samples=" + std::to_string(o.samples);
  if (name == "equivalence") {
    std::uniform_int_distribution<int> order(2, 8);
    for (int s = 0; s < o.samples; ++s) {
      const Graph g = RandomDiameterTwoGraph(rng, order(rng));
      for (int c = 0; c < 20; ++c) {
        const Coloring f = RandomProperColoring(rng, g, g.order());
        line.Record(IsLocating(g, f).valid == IsNeighborLocating(g, f).valid,
                    "sample " + std::to_string(s));
      }
    }
    return line;
  }
  if (name == "segments") {
    std::uniform_int_distribution<int> order(3, 15);
    std::uniform_int_distribution<int> palette(3, 5);
    for (int s = 0; s < o.samples; ++s) {
      const Topology topo = s % 2 ? Topology::kCycle : Topology::kPath;
      const int n = order(rng);
      const auto seq = RandomProperSequence(rng, n, palette(rng), topo);
      const Graph g = topo == Topology::kPath ? MakePath(n) : MakeCycle(n);
      line.Record(IsNeighborLocating(g, Coloring(seq)).valid ==
                      AllSegmentsUnique(seq, topo),
                  "sample " + std::to_string(s));
    }
    return line;
  }
  throw CLI::ValidationError("--check", "unknown check '" + name + "'");
}

int Sweep(const std::vector<std::string>& checks, const SweepOptions& options,
          std::ostream& out) {
  static const std::vector<std::string> kAll{
      "paths", "cycles", "oracle-paths", "oracle-cycles", "equivalence",
      "segments"};
  int status = kOk;
  for (const std::string& name : checks.empty() ? kAll : checks) {
    const SweepLine line = RunSweep(name, options);
    out << "check=" << name << ' ' << line.range << " cases=" << line.cases
        << " failures=" << line.failures
        << " result=" << (line.failures ? "fail" : "pass");
    if (line.seeded) out << " seed=" << options.seed;
    if (line.failures) out << " first=" << line.first_failure;
    out << '\n';
    if (line.failures) status = kInvalid;
  }
  return status;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Locating and neighbor-locating colorings of graphs", "locol"};
  app.require_subcommand(1, 1);

  std::string spec, mode, colors, file;
  std::vector<std::string> join_specs;

  auto* gen = app.add_subcommand("gen", "Emit a certificate for the constructed optimal coloring");
  gen->add_option("spec", spec, "Graph spec, e.g. path:9")->required();
  gen->add_option("--mode", mode, "locating or nl (default: nl; locating for joins)");

  auto* verify = app.add_subcommand("verify", "Re-check a coloring or certificate records");
  auto* verify_graph = verify->add_option("--graph", spec, "Graph spec");
  verify->add_option("--colors", colors, "Comma-separated 1-based colors in vertex order")
      ->needs(verify_graph);
  verify->add_option("--mode", mode, "locating or nl");
  verify->add_option("--file", file, "Certificate records, one per line ('-' for stdin)")
      ->excludes(verify_graph);

  SearchConfig cfg;
  bool no_prune = false;
  bool no_symmetry = false;
  std::uint64_t node_limit = 0;
  auto* solve = app.add_subcommand("solve", "Exact minimum number of colors by search");
  solve->add_option("--graph", spec, "Graph spec")->required();
  solve->add_option("--mode", mode, "locating or nl")->required();
  solve->add_option("--max-k", cfg.max_k, "Largest color count to try");
  auto* limit_opt = solve->add_option("--node-limit", node_limit, "Search-tree node budget");
  solve->add_flag("--no-prune", no_prune, "Disable segment and class-size pruning");
  solve->add_flag("--no-symmetry", no_symmetry, "Disable first-occurrence symmetry breaking");

  auto* formula = app.add_subcommand("formula", "Closed-form chromatic numbers");
  auto* formula_graph = formula->add_option("--graph", spec, "Graph spec");
  formula->add_option("--join", join_specs, "Two specs whose join is evaluated")
      ->expected(2)
      ->excludes(formula_graph);
  formula->add_option("--mode", mode, "locating or nl");

  std::vector<std::string> checks;
  SweepOptions sweep_options;
  auto* sweep = app.add_subcommand("sweep", "Range and property checks with a pass/fail table");
  sweep->add_option("--check", checks,
                    "paths, cycles, oracle-paths, oracle-cycles, equivalence, segments");
  sweep->add_option("--from", sweep_options.from, "First n for range checks");
  sweep->add_option("--to", sweep_options.to, "Last n for range checks");
  sweep->add_option("--seed", sweep_options.seed, "Seed for randomized checks");
  sweep->add_option("--samples", sweep_options.samples, "Samples for randomized checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return Gen(spec, mode, out);
    if (*verify) {
      if (!file.empty()) {
        if (file == "-") return VerifyStream(in, out, err);
        std::ifstream records(file);
        if (!records) {
          err << "cannot open " << file << '\n';
          return kUsage;
        }
        return VerifyStream(records, out, err);
      }
      if (spec.empty() || colors.empty() || mode.empty()) {
        err << "verify needs --graph, --colors and --mode, or --file\n";
        return kUsage;
      }
      return VerifyInline(spec, colors, mode, out);
    }
    if (*solve) {
      if (*limit_opt) cfg.node_limit = node_limit;
      cfg.segment_pruning = !no_prune;
      cfg.symmetry_breaking = !no_symmetry;
      return Solve(spec, mode, cfg, out);
    }
    if (*formula) {
      if (spec.empty() && join_specs.empty()) {
        err << "formula needs --graph or --join\n";
        return kUsage;
      }
      return Formula(spec, join_specs, mode, out);
    }
    if (*sweep) return Sweep(checks, sweep_options, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Spec syntax, coloring shape, certificate syntax and precondition
    // errors all derive from invalid_argument.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace locol::cli
