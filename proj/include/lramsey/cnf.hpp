#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lramsey/grid.hpp"

namespace lramsey {

using Clause = std::vector<int>;

struct CnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

// Variable for "cell (r, c) has color": (color + 1) + k(c - 1) + kn(r - 1).
class VarMap {
 public:
  struct Cell {
    int r = 0;
    int c = 0;
    int color = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  VarMap(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int num_vars() const { return k_ * n_ * n_; }

  int var(int r, int c, int color) const;
  Cell cell(int var) const;

 private:
  int n_;
  int k_;
};

// Symmetry-breaking options. Each only adds unit clauses to the base encoding.
struct FixFirst {
  int color = 0;
};
struct FixFirstTwo {
  int color_a = 0;
  int color_b = 1;
};
struct FixRightColumn {
  int color = 0;
};
struct FixReverseDiagonals {
  std::vector<std::pair<int, int>> diagonals;  // (reverse diagonal index, color)
};
// Fixes every cell on or below the main diagonal to the given grid's colors.
struct LowerTriangle {
  GridColoring triangle;
};

using SymmetryStrategy =
    std::variant<FixFirst, FixFirstTwo, FixRightColumn, FixReverseDiagonals, LowerTriangle>;

struct FixedCell {
  int r = 0;
  int c = 0;
  int color = 0;

  friend bool operator==(const FixedCell&, const FixedCell&) = default;
};

// Cells pinned by the strategies, in strategy order, each cell once.
// Throws ConfigError when two strategies disagree on a cell.
std::vector<FixedCell> fixed_cells(int n, int k, std::span<const SymmetryStrategy> strategies);

// Exactly-one clauses per cell (row-major), then one clause per (L, color)
// in enumerate_ls order, then one unit clause per fixed cell.
CnfInstance encode(int n, int k, std::span<const SymmetryStrategy> strategies = {});

// Only the cells with r >= c and the Ls lying entirely among them.
CnfInstance encode_triangle(int n, int k);

void append_units(CnfInstance& inst, const VarMap& map, std::span<const FixedCell> cells);

std::string write_dimacs(const CnfInstance& inst);
CnfInstance parse_dimacs(std::string_view text);

// Literals describing g: +var for the cell's color, -var otherwise.
std::vector<int> model_of(const GridColoring& g);

// Throws ModelError unless every cell has exactly one positive color literal.
GridColoring decode_model(const VarMap& map, std::span<const int> model);

// As decode_model over the cells with r >= c; cells above the diagonal get color 0.
GridColoring decode_triangle_model(const VarMap& map, std::span<const int> model);

// Ls whose points all satisfy r >= c.
std::vector<LTriple> find_mono_ls_in_triangle(const GridColoring& g);

}  // namespace lramsey
