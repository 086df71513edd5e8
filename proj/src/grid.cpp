#include "lramsey/grid.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lramsey/errors.hpp"

namespace lramsey {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed-header";
    case ParseErrorKind::kColorOutOfRange: return "color-out-of-range";
    case ParseErrorKind::kRaggedRows: return "ragged-rows";
    case ParseErrorKind::kMissingHeader: return "missing-header";
    case ParseErrorKind::kLiteralOutOfRange: return "literal-out-of-range";
    case ParseErrorKind::kClauseCountMismatch: return "clause-count-mismatch";
    case ParseErrorKind::kUnterminatedClause: return "unterminated-clause";
    case ParseErrorKind::kBadToken: return "bad-token";
    case ParseErrorKind::kSolverOutput: return "solver-output";
  }
  return "unknown";
}

namespace {

void check_shape(int n, int k) {
  if (n < 1 || n > GridColoring::kMaxSide) {
    throw DomainError("grid side must be in [1, 65536], got " + std::to_string(n));
  }
  if (k < 1 || k > GridColoring::kMaxColors) {
    throw DomainError("color count must be in [1, 256], got " + std::to_string(k));
  }
}

}  // namespace

GridColoring::GridColoring(int n, int k) : n_(n), k_(k) {
  check_shape(n, k);
  cells_.assign(static_cast<std::size_t>(n) * n, 0);
}

GridColoring::GridColoring(int n, int k, std::vector<Color> cells)
    : n_(n), k_(k), cells_(std::move(cells)) {
  check_shape(n, k);
  if (cells_.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("grid needs n^2 cells");
  }
  for (Color v : cells_) {
    if (v >= k) throw DomainError("cell color " + std::to_string(v) + " outside [0, k)");
  }
}

std::size_t GridColoring::index(int r, int c) const {
  if (r < 1 || r > n_ || c < 1 || c > n_) {
    throw DomainError("cell (" + std::to_string(r) + ", " + std::to_string(c) +
                      ") outside the grid");
  }
  return static_cast<std::size_t>(r - 1) * n_ + (c - 1);
}

void GridColoring::set(int r, int c, Color color) {
  if (color >= k_) throw DomainError("color outside [0, k)");
  cells_[index(r, c)] = color;
}

std::int64_t l_count(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const std::int64_t m = n;
  return (m - 1) * m * (2 * m - 1) / 6;
}

std::vector<LTriple> enumerate_ls(int n) {
  std::vector<LTriple> out;
  out.reserve(static_cast<std::size_t>(l_count(n)));
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c < n; ++c) {
      const int max_t = n - std::max(r, c);
      for (int t = 1; t <= max_t; ++t) out.push_back({r, c, t});
    }
  }
  return out;
}

std::vector<LTriple> find_mono_ls(const GridColoring& g) {
  std::vector<LTriple> out;
  const int n = g.n();
  const auto cells = g.cells();
  const auto at = [&](int r, int c) { return cells[static_cast<std::size_t>(r - 1) * n + (c - 1)]; };
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c < n; ++c) {
      const Color top = at(r, c);
      const int max_t = n - std::max(r, c);
      for (int t = 1; t <= max_t; ++t) {
        if (at(r + t, c) == top && at(r + t, c + t) == top) out.push_back({r, c, t});
      }
    }
  }
  return out;
}

bool is_l_free(const GridColoring& g) { return find_mono_ls(g).empty(); }

GridColoring anti_transpose(const GridColoring& g) {
  const int n = g.n();
  GridColoring out(n, g.k());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.set(i, j, g.at(n + 1 - j, n + 1 - i));
  }
  return out;
}

LTriple anti_transpose(const LTriple& l, int n) {
  return {n + 1 - l.c - l.t, n + 1 - l.r - l.t, l.t};
}

GridColoring permute_colors(const GridColoring& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.k()) throw DomainError("permutation size must equal k");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.k() || seen[p]) throw DomainError("not a permutation of 0..k-1");
    seen[p] = true;
  }
  std::vector<Color> cells(g.cells().begin(), g.cells().end());
  for (Color& v : cells) v = static_cast<Color>(perm[v]);
  return GridColoring(g.n(), g.k(), std::move(cells));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& value) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

GridColoring parse_grid(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.front() == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw ParseError(ParseErrorKind::kMalformedHeader, "empty grid file");

  const auto& header = lines.front();
  long long n = 0;
  long long k = 0;
  if (header.size() != 2 || !to_int(header[0], n) || !to_int(header[1], k) || n < 1 ||
      n > GridColoring::kMaxSide || k < 1 || k > GridColoring::kMaxColors) {
    throw ParseError(ParseErrorKind::kMalformedHeader, "grid header must be \"n k\"");
  }
  if (static_cast<long long>(lines.size()) - 1 != n) {
    throw ParseError(ParseErrorKind::kRaggedRows, "expected " + std::to_string(n) + " rows, found " +
                                                      std::to_string(lines.size() - 1));
  }
  std::vector<Color> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (static_cast<long long>(lines[row].size()) != n) {
      throw ParseError(ParseErrorKind::kRaggedRows,
                       "row " + std::to_string(row) + " has " + std::to_string(lines[row].size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (auto tok : lines[row]) {
      long long v = 0;
      if (!to_int(tok, v)) {
        throw ParseError(ParseErrorKind::kBadToken, "not an integer: " + std::string(tok));
      }
      if (v < 0 || v >= k) {
        throw ParseError(ParseErrorKind::kColorOutOfRange,
                         "color " + std::to_string(v) + " outside [0, " + std::to_string(k) + ")");
      }
      cells.push_back(static_cast<Color>(v));
    }
  }
  return GridColoring(static_cast<int>(n), static_cast<int>(k), std::move(cells));
}

std::string serialize_grid(const GridColoring& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.k()) + "\n";
  const auto cells = g.cells();
  for (int r = 0; r < g.n(); ++r) {
    for (int c = 0; c < g.n(); ++c) {
      if (c) out += ' ';
      out += std::to_string(cells[static_cast<std::size_t>(r) * g.n() + c]);
    }
    out += '\n';
  }
  return out;
}

GridColoring read_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid(ss.str());
}

void write_grid_file(const std::string& path, const GridColoring& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_grid(g);
}

int subdiagonal_length(int n, int k) {
  if (k < 0 || k >= n) throw DomainError("subdiagonal offset outside [0, n)");
  return n - k;
}

int reverse_diagonal_of(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("point outside the grid");
  return i + j - 1;
}

int reverse_diagonal_count(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  return 2 * n - 1;
}

}  // namespace lramsey
