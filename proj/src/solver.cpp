#include "lramsey/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "lramsey/errors.hpp"

namespace lramsey {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSat: return "SATISFIABLE";
    case SolveStatus::kUnsat: return "UNSATISFIABLE";
    case SolveStatus::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

class Backtracker {
 public:
  Backtracker(int n, int k, std::vector<int> fixed, std::int64_t node_limit)
      : n_(n), k_(k), fixed_(std::move(fixed)), cells_(static_cast<std::size_t>(n) * n, 0),
        node_limit_(node_limit) {}

  SolveOutcome run() {
    SolveOutcome out;
    const bool found = search(0);
    out.stats.nodes = nodes_;
    out.stats.backtracks = backtracks_;
    if (found) {
      GridColoring g(n_, k_, cells_);
      if (!is_l_free(g)) throw IntegrityError("internal search produced a grid with a monochromatic L");
      out.status = SolveStatus::kSat;
      out.witness = std::move(g);
    } else if (exhausted_) {
      out.status = SolveStatus::kUnknown;
      out.diagnostic = "node limit of " + std::to_string(node_limit_) + " reached";
    } else {
      out.status = SolveStatus::kUnsat;
    }
    return out;
  }

 private:
  // Ls ending at cell idx: (r - t, c - t), (r, c - t), (r, c).
  bool consistent(int idx) const {
    const int r = idx / n_;
    const int c = idx % n_;
    const Color color = cells_[idx];
    for (int t = 1; t <= std::min(r, c); ++t) {
      if (cells_[idx - t] == color && cells_[idx - t * n_ - t] == color) return false;
    }
    return true;
  }

  bool search(int idx) {
    if (idx == n_ * n_) return true;
    const int lo = fixed_[idx] >= 0 ? fixed_[idx] : 0;
    const int hi = fixed_[idx] >= 0 ? fixed_[idx] + 1 : k_;
    for (int color = lo; color < hi; ++color) {
      if (++nodes_ > node_limit_) {
        exhausted_ = true;
        return false;
      }
      cells_[idx] = static_cast<Color>(color);
      if (consistent(idx) && search(idx + 1)) return true;
      if (exhausted_) return false;
    }
    ++backtracks_;
    return false;
  }

  int n_;
  int k_;
  std::vector<int> fixed_;
  std::vector<Color> cells_;
  std::int64_t node_limit_;
  std::int64_t nodes_ = 0;
  std::int64_t backtracks_ = 0;
  bool exhausted_ = false;
};

// Cell colors pinned by fixed, -1 where free. Returns nullopt on a clash.
std::optional<std::vector<int>> pin(int n, std::span<const FixedCell> fixed) {
  std::vector<int> out(static_cast<std::size_t>(n) * n, -1);
  for (const auto& f : fixed) {
    if (f.r < 1 || f.r > n || f.c < 1 || f.c > n) throw ConfigError("fixed cell outside the grid");
    int& slot = out[static_cast<std::size_t>(f.r - 1) * n + (f.c - 1)];
    if (slot >= 0 && slot != f.color) return std::nullopt;
    slot = f.color;
  }
  return out;
}

}  // namespace

SolveOutcome solve_internal_fixed(int n, int k, std::span<const FixedCell> fixed, InternalOptions options) {
  if (n < 1 || k < 1 || k > GridColoring::kMaxColors) throw DomainError("solve needs n >= 1 and 1 <= k <= 256");
  for (const auto& f : fixed) {
    if (f.color < 0 || f.color >= k) throw ConfigError("fixed color outside [0, k)");
  }
  auto pinned = pin(n, fixed);
  if (!pinned) {
    SolveOutcome out;
    out.status = SolveStatus::kUnsat;
    out.diagnostic = "fixed cells clash";
    return out;
  }
  return Backtracker(n, k, std::move(*pinned), options.node_limit).run();
}

SolveOutcome solve_internal(int n, int k, std::span<const SymmetryStrategy> strategies, InternalOptions options) {
  const auto fixed = fixed_cells(n, k, strategies);
  return solve_internal_fixed(n, k, fixed, options);
}

SolveOutcome solve_partitioned(int n, int k, int prefix_cells, int workers, const EngineConfig& cfg) {
  if (n < 1 || k < 1) throw DomainError("solve needs n >= 1 and k >= 1");
  if (prefix_cells < 0 || prefix_cells > n * n) throw DomainError("prefix_cells must be in [0, n^2]");
  if (workers < 1) throw DomainError("workers must be >= 1");
  if (cfg.engine == Engine::kExternal) cfg.external.validate();

  std::int64_t cube_count = 1;
  for (int i = 0; i < prefix_cells; ++i) {
    cube_count *= k;
    if (cube_count > 10'000'000) throw DomainError("too many cubes");
  }

  const auto base_fixed = fixed_cells(n, k, cfg.strategies);
  const VarMap map(n, k);
  CnfInstance base_cnf;
  if (cfg.engine == Engine::kExternal) base_cnf = encode(n, k, cfg.strategies);

  auto cube_cells = [&](std::int64_t index) {
    std::vector<FixedCell> cells;
    for (int i = prefix_cells - 1; i >= 0; --i) {
      cells.push_back({i / n + 1, i % n + 1, static_cast<int>(index % k)});
      index /= k;
    }
    std::reverse(cells.begin(), cells.end());
    return cells;
  };

  auto solve_cube = [&](std::int64_t index) -> SolveOutcome {
    const auto cube = cube_cells(index);
    std::vector<FixedCell> all = base_fixed;
    all.insert(all.end(), cube.begin(), cube.end());
    if (!pin(n, all)) {
      SolveOutcome out;
      out.status = SolveStatus::kUnsat;
      out.diagnostic = "cube contradicts fixed cells";
      return out;
    }
    if (cfg.engine == Engine::kInternal) return solve_internal_fixed(n, k, all, cfg.internal);
    CnfInstance inst = base_cnf;
    append_units(inst, map, cube);
    return solve_external(cfg.external, inst, map);
  };

  std::vector<std::optional<SolveOutcome>> results(static_cast<std::size_t>(cube_count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cube_count));
  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> first_sat{std::numeric_limits<std::int64_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= cube_count) return;
      if (i > first_sat.load()) continue;  // a lower cube already answered SAT
      try {
        results[i] = solve_cube(i);
        if (results[i]->status == SolveStatus::kSat) {
          std::int64_t seen = first_sat.load();
          while (i < seen && !first_sat.compare_exchange_weak(seen, i)) {
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::int64_t>(workers, cube_count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SolveOutcome out;
  out.status = SolveStatus::kUnsat;
  bool unknown = false;
  for (std::int64_t i = 0; i < cube_count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (!results[i]) continue;
    auto& r = *results[i];
    out.stats.nodes += r.stats.nodes;
    out.stats.backtracks += r.stats.backtracks;
    if (r.stats.conflicts) out.stats.conflicts = out.stats.conflicts.value_or(0) + *r.stats.conflicts;
    if (r.status == SolveStatus::kSat && out.status != SolveStatus::kSat) {
      out.status = SolveStatus::kSat;
      out.witness = std::move(r.witness);
      out.diagnostic = "cube " + std::to_string(i) + " of " + std::to_string(cube_count);
    } else if (r.status == SolveStatus::kUnknown && !unknown) {
      unknown = true;
      if (out.status != SolveStatus::kSat) out.diagnostic = "cube " + std::to_string(i) + ": " + r.diagnostic;
    }
  }
  if (out.status != SolveStatus::kSat && unknown) out.status = SolveStatus::kUnknown;
  return out;
}

}  // namespace lramsey
