#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lramsey/grid.hpp"

namespace lramsey {

// Colors of positions 1..length with no monochromatic i, i + t, i + 2t.
struct ApFreeColoring {
  int length = 0;
  int r_colors = 0;
  std::vector<Color> colors;  // colors[p - 1] is the color of position p

  Color at(int p) const { return colors.at(static_cast<std::size_t>(p - 1)); }
};

bool is_ap_free(const ApFreeColoring& coloring);

struct ApSearchOptions {
  std::int64_t node_limit = 10'000'000;
};

// Complete backtracking, positions left to right, colors ascending. A new
// color is only opened once all lower ones are in use, so the first coloring
// found is the lexicographically least up to relabeling. Returns nullopt when
// no coloring exists; throws CapabilityError at the node limit.
std::optional<ApFreeColoring> find_ap_free(int r_colors, int length, ApSearchOptions options = {});

// Least W such that every r-coloring of 1..W has a monochromatic 3-term AP,
// found by growing the length until find_ap_free fails.
int van_der_waerden_3(int r_colors, ApSearchOptions options = {});

struct VdwWitness {
  int k_colors = 0;
  int w = 0;     // W(k, 3)
  int side = 0;  // floor(W / 2)
  GridColoring grid;
  ApFreeColoring base;
};

// Paints reverse diagonal d of the floor(W/2) square with base color c_d.
// The result is checked L-free before it is returned.
VdwWitness build_vdw_witness(int k_colors, ApSearchOptions options = {});

GridColoring paint_reverse_diagonals(int side, const ApFreeColoring& base);

}  // namespace lramsey
