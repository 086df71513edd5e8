#include "lramsey/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "lramsey/errors.hpp"

namespace lramsey {

VarMap::VarMap(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw DomainError("VarMap needs n >= 1 and k >= 1");
  if (static_cast<long long>(k) * n * n > 2'000'000'000LL) throw DomainError("too many variables");
}

int VarMap::var(int r, int c, int color) const {
  if (r < 1 || r > n_ || c < 1 || c > n_ || color < 0 || color >= k_) {
    throw DomainError("var_id argument out of range");
  }
  return (color + 1) + k_ * (c - 1) + k_ * n_ * (r - 1);
}

VarMap::Cell VarMap::cell(int var) const {
  if (var < 1 || var > num_vars()) throw DomainError("variable out of range");
  const int v = var - 1;
  return {v / (k_ * n_) + 1, (v / k_) % n_ + 1, v % k_};
}

namespace {

void exactly_one(CnfInstance& inst, const VarMap& map, int r, int c) {
  Clause some;
  for (int color = 0; color < map.k(); ++color) some.push_back(map.var(r, c, color));
  inst.clauses.push_back(std::move(some));
  for (int a = 0; a < map.k(); ++a) {
    for (int b = a + 1; b < map.k(); ++b) {
      inst.clauses.push_back({-map.var(r, c, a), -map.var(r, c, b)});
    }
  }
}

void no_mono_l(CnfInstance& inst, const VarMap& map, const LTriple& l) {
  for (int color = 0; color < map.k(); ++color) {
    inst.clauses.push_back({-map.var(l.r, l.c, color), -map.var(l.r + l.t, l.c, color),
                            -map.var(l.r + l.t, l.c + l.t, color)});
  }
}

void check_color(int color, int k) {
  if (color < 0 || color >= k) {
    throw ConfigError("fixed color " + std::to_string(color) + " outside [0, " + std::to_string(k) + ")");
  }
}

}  // namespace

std::vector<FixedCell> fixed_cells(int n, int k, std::span<const SymmetryStrategy> strategies) {
  std::vector<FixedCell> out;
  std::map<std::pair<int, int>, int> seen;
  auto fix = [&](int r, int c, int color) {
    check_color(color, k);
    auto [it, inserted] = seen.emplace(std::pair{r, c}, color);
    if (!inserted) {
      if (it->second != color) {
        throw ConfigError("cell (" + std::to_string(r) + ", " + std::to_string(c) +
                          ") fixed to both " + std::to_string(it->second) + " and " +
                          std::to_string(color));
      }
      return;
    }
    out.push_back({r, c, color});
  };

  for (const auto& strategy : strategies) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, FixFirst>) {
            fix(1, 1, s.color);
          } else if constexpr (std::is_same_v<T, FixFirstTwo>) {
            if (n < 2) throw ConfigError("fix-first-two needs n >= 2");
            fix(1, 1, s.color_a);
            fix(1, 2, s.color_b);
          } else if constexpr (std::is_same_v<T, FixRightColumn>) {
            for (int r = 1; r <= n; ++r) fix(r, n, s.color);
          } else if constexpr (std::is_same_v<T, FixReverseDiagonals>) {
            for (auto [d, color] : s.diagonals) {
              if (d < 1 || d > 2 * n - 1) {
                throw ConfigError("reverse diagonal " + std::to_string(d) + " outside [1, " +
                                  std::to_string(2 * n - 1) + "]");
              }
              // Points with i + j - 1 = d, top row first.
              for (int i = std::max(1, d + 1 - n); i <= std::min(n, d); ++i) fix(i, d + 1 - i, color);
            }
          } else {
            const GridColoring& tri = s.triangle;
            if (tri.n() != n || tri.k() != k) throw ConfigError("triangle grid must be n x n with k colors");
            if (auto bad = find_mono_ls_in_triangle(tri); !bad.empty()) {
              throw ConfigError("triangle coloring has a monochromatic L at (" + std::to_string(bad[0].r) +
                                ", " + std::to_string(bad[0].c) + ", " + std::to_string(bad[0].t) + ")");
            }
            for (int r = 1; r <= n; ++r) {
              for (int c = 1; c <= r; ++c) fix(r, c, tri.at(r, c));
            }
          }
        },
        strategy);
  }
  return out;
}

void append_units(CnfInstance& inst, const VarMap& map, std::span<const FixedCell> cells) {
  for (const auto& f : cells) inst.clauses.push_back({map.var(f.r, f.c, f.color)});
}

CnfInstance encode(int n, int k, std::span<const SymmetryStrategy> strategies) {
  const VarMap map(n, k);
  const auto fixed = fixed_cells(n, k, strategies);
  CnfInstance inst;
  inst.num_vars = map.num_vars();
  inst.clauses.reserve(static_cast<std::size_t>(n) * n * (1 + k * (k - 1) / 2) +
                       static_cast<std::size_t>(l_count(n)) * k + fixed.size());
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) exactly_one(inst, map, r, c);
  }
  for (const auto& l : enumerate_ls(n)) no_mono_l(inst, map, l);
  append_units(inst, map, fixed);
  return inst;
}

CnfInstance encode_triangle(int n, int k) {
  const VarMap map(n, k);
  CnfInstance inst;
  inst.num_vars = map.num_vars();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= r; ++c) exactly_one(inst, map, r, c);
  }
  for (const auto& l : enumerate_ls(n)) {
    if (l.r >= l.c) no_mono_l(inst, map, l);
  }
  return inst;
}

std::string write_dimacs(const CnfInstance& inst) {
  std::string out = "p cnf " + std::to_string(inst.num_vars) + " " + std::to_string(inst.clauses.size()) + "\n";
  char buf[16];
  for (const auto& clause : inst.clauses) {
    for (int lit : clause) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, lit);
      out.append(buf, end);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance inst;
  bool have_header = false;
  long long declared = 0;
  Clause current;
  bool open_clause = false;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.front() == 'c') continue;
    if (line.front() == '%') break;
    if (line.front() == 'p') {
      if (have_header) throw ParseError(ParseErrorKind::kMalformedHeader, "duplicate problem line");
      char fmt[8] = {};
      long long vars = -1;
      long long clauses = -1;
      const std::string header(line);
      int consumed = 0;
      if (std::sscanf(header.c_str(), "p %7s %lld %lld %n", fmt, &vars, &clauses, &consumed) != 3 ||
          std::string_view(fmt) != "cnf" || vars < 0 || clauses < 0 || vars > 2'000'000'000LL ||
          header.find_first_not_of(" \t", consumed) != std::string::npos) {
        throw ParseError(ParseErrorKind::kMalformedHeader, "bad problem line: " + header);
      }
      inst.num_vars = static_cast<int>(vars);
      declared = clauses;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(ParseErrorKind::kMissingHeader, "clause before \"p cnf\" line");

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = line.find_first_of(" \t", i);
      if (j == std::string_view::npos) j = line.size();
      const std::string_view tok = line.substr(i, j - i);
      i = j;
      long long lit = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(ParseErrorKind::kBadToken, "not a literal: " + std::string(tok));
      }
      if (lit == 0) {
        inst.clauses.push_back(std::move(current));
        current.clear();
        open_clause = false;
        continue;
      }
      if (lit > inst.num_vars || -lit > inst.num_vars) {
        throw ParseError(ParseErrorKind::kLiteralOutOfRange,
                         "literal " + std::to_string(lit) + " exceeds " + std::to_string(inst.num_vars) + " variables");
      }
      current.push_back(static_cast<int>(lit));
      open_clause = true;
    }
  }
  if (!have_header) throw ParseError(ParseErrorKind::kMissingHeader, "no \"p cnf\" line");
  if (open_clause) throw ParseError(ParseErrorKind::kUnterminatedClause, "last clause lacks its 0");
  if (static_cast<long long>(inst.clauses.size()) != declared) {
    throw ParseError(ParseErrorKind::kClauseCountMismatch,
                     "header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(inst.clauses.size()));
  }
  return inst;
}

std::vector<int> model_of(const GridColoring& g) {
  const VarMap map(g.n(), g.k());
  std::vector<int> model;
  model.reserve(map.num_vars());
  for (int r = 1; r <= g.n(); ++r) {
    for (int c = 1; c <= g.n(); ++c) {
      for (int color = 0; color < g.k(); ++color) {
        const int v = map.var(r, c, color);
        model.push_back(g.at(r, c) == color ? v : -v);
      }
    }
  }
  return model;
}

namespace {

GridColoring decode_cells(const VarMap& map, std::span<const int> model, bool lower_only) {
  const int n = map.n();
  std::vector<int> color(static_cast<std::size_t>(n) * n, -1);
  for (int lit : model) {
    if (lit <= 0) continue;
    if (lit > map.num_vars()) throw ModelError("model literal " + std::to_string(lit) + " beyond the variable range");
    const auto cell = map.cell(lit);
    if (lower_only && cell.r < cell.c) continue;
    int& slot = color[static_cast<std::size_t>(cell.r - 1) * n + (cell.c - 1)];
    if (slot >= 0 && slot != cell.color) {
      throw ModelError("cell (" + std::to_string(cell.r) + ", " + std::to_string(cell.c) +
                       ") has colors " + std::to_string(slot) + " and " + std::to_string(cell.color));
    }
    slot = cell.color;
  }
  GridColoring g(n, map.k());
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const int v = color[static_cast<std::size_t>(r - 1) * n + (c - 1)];
      if (v < 0) {
        if (lower_only && r < c) continue;
        throw ModelError("cell (" + std::to_string(r) + ", " + std::to_string(c) + ") has no color");
      }
      g.set(r, c, static_cast<Color>(v));
    }
  }
  return g;
}

}  // namespace

GridColoring decode_model(const VarMap& map, std::span<const int> model) {
  return decode_cells(map, model, false);
}

GridColoring decode_triangle_model(const VarMap& map, std::span<const int> model) {
  return decode_cells(map, model, true);
}

std::vector<LTriple> find_mono_ls_in_triangle(const GridColoring& g) {
  std::vector<LTriple> out;
  for (const auto& l : find_mono_ls(g)) {
    if (l.r >= l.c) out.push_back(l);
  }
  return out;
}

}  // namespace lramsey
