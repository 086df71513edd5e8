#include "lramsey/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lramsey/bounds.hpp"
#include "lramsey/cnf.hpp"
#include "lramsey/construct.hpp"
#include "lramsey/errors.hpp"
#include "lramsey/grid.hpp"
#include "lramsey/solver.hpp"

namespace lramsey::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StrategyFlags {
  std::optional<int> fix_first;
  std::string fix_first_two;
  std::optional<int> fix_right_column;
  std::vector<std::string> fix_reverse_diag;
  std::string triangle_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--fix-first", fix_first, "Fix cell (1,1) to color C");
    cmd->add_option("--fix-first-two", fix_first_two, "Fix cells (1,1) and (1,2) to colors A,B");
    cmd->add_option("--fix-right-column", fix_right_column, "Fix column n to color C");
    cmd->add_option("--fix-reverse-diag", fix_reverse_diag, "Fix reverse diagonal D to color C (D:C)")
        ->take_all();
    cmd->add_option("--triangle-file", triangle_file, "Grid file whose lower triangle is fixed");
  }

  std::vector<SymmetryStrategy> build() const {
    std::vector<SymmetryStrategy> out;
    if (fix_first) out.push_back(FixFirst{*fix_first});
    if (!fix_first_two.empty()) {
      int a = 0;
      int b = 0;
      char sep = 0;
      std::istringstream in(fix_first_two);
      if (!(in >> a >> sep >> b) || sep != ',' || !in.eof()) throw UsageError("--fix-first-two expects A,B");
      out.push_back(FixFirstTwo{a, b});
    }
    if (fix_right_column) out.push_back(FixRightColumn{*fix_right_column});
    if (!fix_reverse_diag.empty()) {
      FixReverseDiagonals diags;
      for (const auto& spec : fix_reverse_diag) {
        int d = 0;
        int c = 0;
        char sep = 0;
        std::istringstream in(spec);
        if (!(in >> d >> sep >> c) || sep != ':' || !in.eof()) throw UsageError("--fix-reverse-diag expects D:C");
        diags.diagonals.emplace_back(d, c);
      }
      out.push_back(std::move(diags));
    }
    if (!triangle_file.empty()) out.push_back(LowerTriangle{read_grid_file(triangle_file)});
    return out;
  }
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

int verify(const std::string& path, std::ostream& out, std::ostream& err) {
  GridColoring g;
  try {
    g = read_grid_file(path);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return 2;
  }
  const auto mono = find_mono_ls(g);
  if (mono.empty()) {
    out << "L-free\n";
    return 0;
  }
  for (const auto& l : mono) out << l.r << " " << l.c << " " << l.t << "\n";
  out << mono.size() << " monochromatic L" << (mono.size() == 1 ? "" : "s") << "\n";
  return 1;
}

struct BoundsFlags {
  std::string method;
  std::optional<int> c;
  bool trace = false;
  bool all_c = false;
  bool discrepancy = false;
  std::string format = "table";
  std::string rounding = "both";
  std::string cap_rule = "2(b-1)";
  int golomb_shift = 0;
  std::string golomb_cap = "2*b_k";
  std::int64_t start = 100;
};

int bounds(const BoundsFlags& f, std::ostream& out) {
  const auto method = parse_bound_method(f.method);
  if (!method) throw UsageError("unknown method " + f.method);
  const ScanOptions scan{f.start};
  const bool kv = f.format == "kv";
  auto print = [&](const BoundReport& r) {
    out << (kv ? format_report_key_values(r, f.trace) : format_report_table(r, f.trace));
  };
  const bool needs_c = *method == BoundMethod::kPartition772 || *method == BoundMethod::kGolomb493;
  if (needs_c && !f.c && !f.all_c) throw UsageError(std::string(to_string(*method)) + " needs --c");
  if (f.all_c && *method != BoundMethod::kGolomb493) throw UsageError("--all-c applies to golomb493 only");

  switch (*method) {
    case BoundMethod::kNaive2593: {
      if (f.rounding == "real" || f.rounding == "both") print(prove_naive(NaiveRounding::kRealValued, scan));
      if (f.rounding == "both") out << "\n";
      if (f.rounding == "ceiling" || f.rounding == "both") print(prove_naive(NaiveRounding::kCeilingPigeonhole, scan));
      return 0;
    }
    case BoundMethod::kIntervals1804:
      print(prove_intervals(scan));
      return 0;
    case BoundMethod::kNonadjacent1573:
      print(prove_nonadjacent(scan));
      return 0;
    case BoundMethod::kPartition772: {
      const CapRule rule = f.cap_rule == "2b-1" ? CapRule::kTwoBMinusOne : CapRule::kTwoBMinusTwo;
      print(prove_partition(*f.c, rule, scan));
      if (f.discrepancy) out << "\n" << partition_discrepancy(*f.c).to_key_values();
      return 0;
    }
    case BoundMethod::kGolomb493: {
      const GolombReading reading{f.golomb_shift, f.golomb_cap == "2*(b_k-1)" ? GolombCapRule::kTwiceOrderMinusOne
                                                                             : GolombCapRule::kTwiceOrder};
      if (f.all_c) {
        for (const auto& r : prove_golomb_all(reading, scan)) {
          out << (kv ? "c=" : "c = ") << *r.c << (kv ? " n_result=" : "  n = ") << r.n_result << "\n";
        }
      } else {
        print(prove_golomb(*f.c, reading, scan));
        if (f.discrepancy) out << "\n" << golomb_discrepancy(*f.c).to_key_values();
      }
      return 0;
    }
  }
  return 0;
}

struct SolveFlags {
  int n = 0;
  int k = 3;
  std::string engine = "internal";
  std::string solver;
  double timeout = 3600;
  int prefix_cells = 0;
  int workers = 1;
  std::int64_t node_limit = 100'000'000;
  std::string output;
  StrategyFlags strategies;
};

int solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  EngineConfig cfg;
  cfg.strategies = f.strategies.build();
  cfg.internal.node_limit = f.node_limit;
  if (f.engine == "external") {
    cfg.engine = Engine::kExternal;
    cfg.external.command = f.solver;
    if (cfg.external.command.empty()) {
      if (const char* env = std::getenv("LRAMSEY_SOLVER")) cfg.external.command = env;
    }
    if (cfg.external.command.empty()) throw UsageError("external engine needs --solver or LRAMSEY_SOLVER");
    cfg.external.timeout_seconds = f.timeout;
  } else if (!f.solver.empty()) {
    throw UsageError("--solver conflicts with --engine internal");
  }

  SolveOutcome outcome;
  try {
    outcome = solve_partitioned(f.n, f.k, f.prefix_cells, f.workers, cfg);
  } catch (const IntegrityError& e) {
    err << "solve: " << e.what() << "\n";
    return kExitVerification;
  }
  out << to_string(outcome.status) << "\n";
  out << "nodes " << outcome.stats.nodes << "\n";
  out << "backtracks " << outcome.stats.backtracks << "\n";
  if (outcome.stats.conflicts) out << "conflicts " << *outcome.stats.conflicts << "\n";
  if (!outcome.diagnostic.empty()) err << "solve: " << outcome.diagnostic << "\n";
  switch (outcome.status) {
    case SolveStatus::kSat:
      emit(f.output, serialize_grid(*outcome.witness), out);
      return 0;
    case SolveStatus::kUnsat:
      return 1;
    case SolveStatus::kUnknown:
      return 2;
  }
  return 2;
}

struct DecodeFlags {
  int n = 0;
  int k = 3;
  std::string input;
  std::string output;
  bool no_verify = false;
  bool triangle = false;
};

int decode(const DecodeFlags& f, std::ostream& out, std::ostream& err) {
  SolverOutput parsed;
  try {
    parsed = parse_solver_output(slurp(f.input));
  } catch (const ParseError& e) {
    err << "decode: " << e.what() << "\n";
    return 2;
  }
  if (!parsed.status) {
    err << "decode: no status line in solver output\n";
    return 2;
  }
  if (*parsed.status != SolveStatus::kSat) {
    out << to_string(*parsed.status) << "\n";
    return 1;
  }
  const VarMap map(f.n, f.k);
  GridColoring g;
  try {
    g = f.triangle ? decode_triangle_model(map, parsed.model) : decode_model(map, parsed.model);
  } catch (const ModelError& e) {
    err << "decode: " << e.what() << "\n";
    return kExitVerification;
  }
  if (!f.no_verify) {
    const auto bad = f.triangle ? find_mono_ls_in_triangle(g) : find_mono_ls(g);
    if (!bad.empty()) {
      err << "decode: grid has " << bad.size() << " monochromatic Ls, first at (" << bad[0].r << ", " << bad[0].c
          << ", " << bad[0].t << ")\n";
      return kExitVerification;
    }
  }
  emit(f.output, serialize_grid(g), out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tools for monochromatic-L avoidance on k-colored integer grids", "lramsey"};
  app.require_subcommand(1);

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a grid file for monochromatic Ls");
  verify_cmd->add_option("grid", verify_path, "Grid file")->required();

  BoundsFlags bf;
  auto* bounds_cmd = app.add_subcommand("bounds", "Run an upper-bound prover");
  bounds_cmd->add_option("method", bf.method, "naive2593 | intervals1804 | nonadjacent1573 | partition772 | golomb493")
      ->required();
  bounds_cmd->add_option("--c", bf.c, "Span bound (partition772, golomb493)");
  bounds_cmd->add_flag("--trace", bf.trace, "Print every step of the scan");
  bounds_cmd->add_flag("--all-c", bf.all_c, "golomb493: scan c = 5..19");
  bounds_cmd->add_flag("--discrepancy", bf.discrepancy, "Print the reading-by-reading comparison with the published bound");
  bounds_cmd->add_option("--format", bf.format)->check(CLI::IsMember({"table", "kv"}));
  bounds_cmd->add_option("--rounding", bf.rounding)->check(CLI::IsMember({"real", "ceiling", "both"}));
  bounds_cmd->add_option("--cap-rule", bf.cap_rule)->check(CLI::IsMember({"2(b-1)", "2b-1"}));
  bounds_cmd->add_option("--golomb-shift", bf.golomb_shift, "Read blue_array[n - k + shift]")
      ->check(CLI::Range(-1, 1));
  bounds_cmd->add_option("--golomb-cap", bf.golomb_cap)->check(CLI::IsMember({"2*b_k", "2*(b_k-1)"}));
  bounds_cmd->add_option("--start", bf.start, "Scan begins at start + 1")->check(CLI::NonNegativeNumber);

  int enc_n = 0;
  int enc_k = 3;
  bool enc_triangle = false;
  std::string enc_out;
  StrategyFlags enc_strategies;
  auto* encode_cmd = app.add_subcommand("encode", "Write the DIMACS CNF for an n x n grid");
  encode_cmd->add_option("--n", enc_n)->required()->check(CLI::Range(1, 4096));
  encode_cmd->add_option("--k", enc_k)->check(CLI::Range(1, 256));
  encode_cmd->add_flag("--triangle", enc_triangle, "Encode only the lower triangle");
  encode_cmd->add_option("-o,--output", enc_out);
  enc_strategies.add_to(encode_cmd);

  DecodeFlags df;
  auto* decode_cmd = app.add_subcommand("decode", "Turn solver output into a grid file");
  decode_cmd->add_option("--n", df.n)->required()->check(CLI::Range(1, 4096));
  decode_cmd->add_option("--k", df.k)->check(CLI::Range(1, 256));
  decode_cmd->add_option("-i,--input", df.input, "Solver output (default stdin)");
  decode_cmd->add_option("-o,--output", df.output);
  decode_cmd->add_flag("--no-verify", df.no_verify);
  decode_cmd->add_flag("--triangle", df.triangle);

  SolveFlags sf;
  auto* solve_cmd = app.add_subcommand("solve", "Search for an L-free coloring");
  solve_cmd->add_option("--n", sf.n)->required()->check(CLI::Range(1, 4096));
  solve_cmd->add_option("--k", sf.k)->check(CLI::Range(1, 256));
  solve_cmd->add_option("--engine", sf.engine)->check(CLI::IsMember({"internal", "external"}));
  solve_cmd->add_option("--solver", sf.solver, "External solver command ({cnf} is the CNF path)");
  solve_cmd->add_option("--timeout", sf.timeout, "External solver timeout in seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--prefix-cells", sf.prefix_cells)->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--workers", sf.workers)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-limit", sf.node_limit)->check(CLI::PositiveNumber);
  solve_cmd->add_option("-o,--output", sf.output, "Witness grid file");
  sf.strategies.add_to(solve_cmd);

  int vdw_k = 3;
  bool vdw_base = false;
  std::string vdw_out;
  auto* construct_cmd = app.add_subcommand("construct", "Build lower-bound witnesses");
  construct_cmd->require_subcommand(1);
  auto* vdw_cmd = construct_cmd->add_subcommand("vdw", "Paint reverse diagonals with a 3-AP-free coloring");
  vdw_cmd->add_option("--k", vdw_k)->check(CLI::Range(1, 256));
  vdw_cmd->add_option("-o,--output", vdw_out);
  vdw_cmd->add_flag("--base", vdw_base, "Print the AP-free base sequence");

  int enum_n = 0;
  bool enum_count = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the Ls of an n x n grid as r c t");
  enumerate_cmd->add_option("--n", enum_n)->required()->check(CLI::Range(1, 4096));
  enumerate_cmd->add_flag("--count", enum_count);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return verify(verify_path, out, err);
    if (bounds_cmd->parsed()) return bounds(bf, out);
    if (encode_cmd->parsed()) {
      if (enc_triangle && !enc_strategies.build().empty()) throw UsageError("--triangle takes no strategy flags");
      const auto strategies = enc_strategies.build();
      const CnfInstance inst = enc_triangle ? encode_triangle(enc_n, enc_k) : encode(enc_n, enc_k, strategies);
      emit(enc_out, write_dimacs(inst), out);
      return 0;
    }
    if (decode_cmd->parsed()) return decode(df, out, err);
    if (solve_cmd->parsed()) return solve(sf, out, err);
    if (vdw_cmd->parsed()) {
      const VdwWitness w = build_vdw_witness(vdw_k);
      err << "W(" << vdw_k << ", 3) = " << w.w << ", side " << w.side << "\n";
      if (vdw_base) {
        for (std::size_t i = 0; i < w.base.colors.size(); ++i) {
          out << (i ? " " : "") << static_cast<int>(w.base.colors[i]);
        }
        out << "\n";
      }
      emit(vdw_out, serialize_grid(w.grid), out);
      return 0;
    }
    if (enumerate_cmd->parsed()) {
      if (enum_count) {
        out << l_count(enum_n) << "\n";
      } else {
        for (const auto& l : enumerate_ls(enum_n)) out << l.r << " " << l.c << " " << l.t << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IntegrityError& e) {
    err << "verification: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return kExitUsage;
}

}  // namespace lramsey::cli
