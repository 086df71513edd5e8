#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lramsey/cnf.hpp"
#include "lramsey/grid.hpp"

namespace lramsey {

enum class SolveStatus { kSat, kUnsat, kUnknown };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t backtracks = 0;
  std::optional<std::int64_t> conflicts;  // reported by an external solver
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<GridColoring> witness;  // present iff SAT, always L-free
  SolveStats stats;
  std::string diagnostic;
};

struct InternalOptions {
  std::int64_t node_limit = 100'000'000;
};

// Complete backtracking over cells in row-major order, colors ascending.
// After each assignment only the Ls whose lower-right point is the new cell
// are checked.
SolveOutcome solve_internal(int n, int k, std::span<const SymmetryStrategy> strategies = {},
                            InternalOptions options = {});
SolveOutcome solve_internal_fixed(int n, int k, std::span<const FixedCell> fixed,
                                  InternalOptions options = {});

struct ExternalSolverConfig {
  // Run through /bin/sh. "{cnf}" is replaced by the CNF path; without it the
  // path is appended as the last argument.
  std::string command;
  double timeout_seconds = 3600;
  std::filesystem::path workdir = std::filesystem::temp_directory_path();

  void validate() const;
};

// What a SAT-competition style solver printed.
struct SolverOutput {
  std::optional<SolveStatus> status;  // from the "s" line
  std::vector<int> model;             // "v" literals, without the closing 0
  std::optional<std::int64_t> conflicts;
};

SolverOutput parse_solver_output(std::string_view text);

// Runs the solver on inst. A SAT answer is decoded through map and checked for
// monochromatic Ls; a bad model throws IntegrityError instead of returning SAT.
// Process failures, timeouts and unreadable output give UNKNOWN.
SolveOutcome solve_external(const ExternalSolverConfig& cfg, const CnfInstance& inst, const VarMap& map);

enum class Engine { kInternal, kExternal };

struct EngineConfig {
  Engine engine = Engine::kInternal;
  InternalOptions internal;
  ExternalSolverConfig external;
  std::vector<SymmetryStrategy> strategies;
};

// Splits on every coloring of the first prefix_cells row-major cells and
// solves each cube on up to `workers` threads. The lowest SAT cube wins; UNSAT
// needs every cube UNSAT.
SolveOutcome solve_partitioned(int n, int k, int prefix_cells, int workers, const EngineConfig& cfg);

}  // namespace lramsey
