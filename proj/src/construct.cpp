#include "lramsey/construct.hpp"

#include <algorithm>

#include "lramsey/errors.hpp"

namespace lramsey {

bool is_ap_free(const ApFreeColoring& coloring) {
  const int len = coloring.length;
  if (static_cast<int>(coloring.colors.size()) != len) return false;
  for (int i = 1; i <= len; ++i) {
    for (int t = 1; i + 2 * t <= len; ++t) {
      if (coloring.at(i) == coloring.at(i + t) && coloring.at(i) == coloring.at(i + 2 * t)) return false;
    }
  }
  return true;
}

namespace {

class ApSearch {
 public:
  ApSearch(int r, int length, std::int64_t limit) : r_(r), len_(length), limit_(limit), colors_(length, 0) {}

  bool run() { return extend(0, 0); }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  // Position p (0-based) closes the progressions p - 2t, p - t, p.
  bool fits(int p) const {
    const Color color = colors_[p];
    for (int t = 1; 2 * t <= p; ++t) {
      if (colors_[p - t] == color && colors_[p - 2 * t] == color) return false;
    }
    return true;
  }

  bool extend(int p, int used) {
    if (p == len_) return true;
    const int top = std::min(r_, used + 1);
    for (int color = 0; color < top; ++color) {
      if (++nodes_ > limit_) {
        throw CapabilityError("3-AP-free search for r = " + std::to_string(r_) + ", length " +
                              std::to_string(len_) + " exceeded " + std::to_string(limit_) + " nodes");
      }
      colors_[p] = static_cast<Color>(color);
      if (fits(p) && extend(p + 1, std::max(used, color + 1))) return true;
    }
    return false;
  }

  int r_;
  int len_;
  std::int64_t limit_;
  std::int64_t nodes_ = 0;
  std::vector<Color> colors_;
};

}  // namespace

std::optional<ApFreeColoring> find_ap_free(int r_colors, int length, ApSearchOptions options) {
  if (r_colors < 1 || r_colors > GridColoring::kMaxColors) throw DomainError("r_colors must be in [1, 256]");
  if (length < 1) throw DomainError("length must be >= 1");
  ApSearch search(r_colors, length, options.node_limit);
  if (!search.run()) return std::nullopt;
  return ApFreeColoring{length, r_colors, search.colors()};
}

int van_der_waerden_3(int r_colors, ApSearchOptions options) {
  int length = 1;
  while (find_ap_free(r_colors, length, options)) ++length;
  return length;
}

GridColoring paint_reverse_diagonals(int side, const ApFreeColoring& base) {
  if (side < 1) throw DomainError("side must be >= 1");
  if (base.length < 2 * side - 1) throw DomainError("base coloring is shorter than the diagonal count");
  GridColoring g(side, base.r_colors);
  for (int i = 1; i <= side; ++i) {
    for (int j = 1; j <= side; ++j) g.set(i, j, base.at(reverse_diagonal_of(i, j, side)));
  }
  return g;
}

VdwWitness build_vdw_witness(int k_colors, ApSearchOptions options) {
  VdwWitness out;
  out.k_colors = k_colors;
  out.w = van_der_waerden_3(k_colors, options);
  out.side = out.w / 2;
  if (out.side < 1) throw CapabilityError("W(k, 3) too small for a grid");
  auto base = find_ap_free(k_colors, out.w - 1, options);
  if (!base) throw CapabilityError("no AP-free coloring of length W - 1");
  out.base = std::move(*base);
  out.grid = paint_reverse_diagonals(out.side, out.base);
  if (!is_l_free(out.grid)) throw IntegrityError("diagonal-painted grid has a monochromatic L");
  return out;
}

}  // namespace lramsey
