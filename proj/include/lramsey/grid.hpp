#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lramsey {

using Color = std::uint8_t;

// One "L": the points (r, c), (r + t, c) and (r + t, c + t), 1-based.
struct LTriple {
  int r = 0;
  int c = 0;
  int t = 0;

  friend auto operator<=>(const LTriple&, const LTriple&) = default;
};

// An n x n grid colored with k colors. Rows run top to bottom and columns
// left to right, both indexed from 1.
class GridColoring {
 public:
  static constexpr int kMaxSide = 1 << 16;
  static constexpr int kMaxColors = 256;

  GridColoring() = default;
  // All cells start at color 0.
  GridColoring(int n, int k);
  GridColoring(int n, int k, std::vector<Color> cells);

  int n() const { return n_; }
  int k() const { return k_; }

  Color at(int r, int c) const { return cells_[index(r, c)]; }
  void set(int r, int c, Color color);

  // Row-major, 0-based storage.
  std::span<const Color> cells() const { return cells_; }

  friend bool operator==(const GridColoring&, const GridColoring&) = default;

 private:
  std::size_t index(int r, int c) const;

  int n_ = 0;
  int k_ = 0;
  std::vector<Color> cells_;
};

// Number of Ls in an n x n grid: sum of m^2 for m < n.
std::int64_t l_count(int n);

// Every L of an n x n grid in lexicographic (r, c, t) order.
std::vector<LTriple> enumerate_ls(int n);

// The Ls whose three points share a color, in (r, c, t) order.
std::vector<LTriple> find_mono_ls(const GridColoring& g);

bool is_l_free(const GridColoring& g);

// Reflection across the anti-diagonal: out(i, j) = in(n + 1 - j, n + 1 - i).
GridColoring anti_transpose(const GridColoring& g);

// Image of an L of g under anti_transpose; always an L of the reflected grid.
LTriple anti_transpose(const LTriple& l, int n);

// Relabels colors: out(i, j) = perm[in(i, j)]. perm must be a permutation of 0..k-1.
GridColoring permute_colors(const GridColoring& g, std::span<const int> perm);

GridColoring parse_grid(std::string_view text);
std::string serialize_grid(const GridColoring& g);

GridColoring read_grid_file(const std::string& path);
void write_grid_file(const std::string& path, const GridColoring& g);

// Diagonals. Subdiagonal S_k holds (k + 1, 1), (k + 2, 2), ...; reverse
// diagonal d holds the points with i + j - 1 = d.
struct DiagonalId {
  enum class Kind { kMain, kSubBelow, kReverse };

  Kind kind = Kind::kMain;
  int index = 0;  // offset k for kSubBelow, d for kReverse

  friend bool operator==(const DiagonalId&, const DiagonalId&) = default;
};

int subdiagonal_length(int n, int k);
int reverse_diagonal_of(int i, int j, int n);
int reverse_diagonal_count(int n);

}  // namespace lramsey
