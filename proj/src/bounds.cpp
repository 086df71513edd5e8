#include "lramsey/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lramsey/errors.hpp"

namespace lramsey {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

std::int64_t isqrt(std::int64_t x) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

template <typename Step>
BoundReport scan_until(BoundMethod method, const ScanOptions& scan, Step step) {
  if (scan.start < 0 || scan.limit <= scan.start) throw DomainError("bad scan range");
  BoundReport report;
  report.method = method;
  for (std::int64_t n = scan.start + 1; n <= scan.limit; ++n) {
    report.trace.push_back(step(n));
    if (report.trace.back().contradiction) {
      report.n_result = n;
      return report;
    }
  }
  throw CapabilityError(std::string(to_string(method)) + ": no contradiction up to n = " +
                        std::to_string(scan.limit));
}

// Consecutive-interval packing shared by the 1804 and 1573 arguments.
StepTrace pack_uniform(std::int64_t n, std::int64_t intervals) {
  StepTrace s;
  s.n = n;
  s.n_star = ceil_div(n, 3);
  s.b = blue_cap(n);
  s.intervals = intervals;
  const std::int64_t cap = 2 * (s.b - 1);
  s.q = intervals / cap;
  s.r = intervals % cap;
  s.sum = cap * choose2(s.q) + s.q * s.r;
  return s;
}

}  // namespace

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kNaive2593: return "naive2593";
    case BoundMethod::kIntervals1804: return "intervals1804";
    case BoundMethod::kNonadjacent1573: return "nonadjacent1573";
    case BoundMethod::kPartition772: return "partition772";
    case BoundMethod::kGolomb493: return "golomb493";
  }
  return "?";
}

std::optional<BoundMethod> parse_bound_method(std::string_view name) {
  for (auto m : {BoundMethod::kNaive2593, BoundMethod::kIntervals1804, BoundMethod::kNonadjacent1573,
                 BoundMethod::kPartition772, BoundMethod::kGolomb493}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::int64_t published_bound(BoundMethod method) {
  switch (method) {
    case BoundMethod::kNaive2593: return 2593;
    case BoundMethod::kIntervals1804: return 1804;
    case BoundMethod::kNonadjacent1573: return 1573;
    case BoundMethod::kPartition772: return 772;
    case BoundMethod::kGolomb493: return 493;
  }
  return 0;
}

const char* to_string(NaiveRounding rounding) {
  return rounding == NaiveRounding::kRealValued ? "real-valued" : "ceiling-pigeonhole";
}

const char* to_string(CapRule rule) {
  return rule == CapRule::kTwoBMinusTwo ? "2(b-1)" : "2b-1";
}

const char* to_string(GolombCapRule rule) {
  return rule == GolombCapRule::kTwiceOrder ? "2*b_k" : "2*(b_k-1)";
}

const StepTrace* BoundReport::step_at(std::int64_t n) const {
  for (const auto& s : trace) {
    if (s.n == n) return &s;
  }
  return nullptr;
}

std::int64_t blue_cap(std::int64_t n) {
  if (n < 3) throw DomainError("blue_cap needs n >= 3");
  // b(b - 1) > 2n - 4  <=>  (2b - 1)^2 > 8n - 15.
  const std::int64_t s = isqrt(8 * n - 15);
  return (s + 1) / 2 + 1;
}

StepTrace naive_step(std::int64_t n, NaiveRounding rounding) {
  if (n < 3) throw DomainError("naive prover needs n >= 3");
  StepTrace s;
  s.n = n;
  s.n_star = ceil_div(n, 3);
  s.space = n - 2;
  if (rounding == NaiveRounding::kCeilingPigeonhole) {
    const std::int64_t forced = choose2(s.n_star);
    const std::int64_t per_diagonal = ceil_div(forced, n - 1);
    s.b = ceil_div(per_diagonal, 2);
    s.intervals = forced;
    s.sum = choose2(s.b);
    s.contradiction = s.sum > s.space;
    return s;
  }
  // b = C(n/3, 2) / (2(n - 1)) = n(n - 3) / (36(n - 1)); test b(b - 1) > 2(n - 2) exactly.
  using i128 = __int128;
  const i128 num = static_cast<i128>(n) * (n - 3);
  const i128 den = static_cast<i128>(36) * (n - 1);
  s.intervals = static_cast<std::int64_t>(num / 18);  // floor of C(n/3, 2)
  s.b = static_cast<std::int64_t>(num / den);
  s.contradiction = num * (num - den) > 2 * static_cast<i128>(n - 2) * den * den;
  s.sum = static_cast<std::int64_t>(num * (num - den) / (2 * den * den));  // floor of C(b, 2)
  return s;
}

BoundReport prove_naive(NaiveRounding rounding, ScanOptions scan) {
  auto report = scan_until(BoundMethod::kNaive2593, scan,
                           [rounding](std::int64_t n) { return naive_step(n, rounding); });
  report.settings = {{"rounding", to_string(rounding)}};
  return report;
}

StepTrace intervals_step(std::int64_t n) {
  if (n < 3) throw DomainError("interval prover needs n >= 3");
  StepTrace s = pack_uniform(n, ceil_div(n, 3) - 1);
  s.sum += s.n_star;
  s.space = n;
  s.contradiction = s.sum > s.space;
  return s;
}

BoundReport prove_intervals(ScanOptions scan) {
  return scan_until(BoundMethod::kIntervals1804, scan, intervals_step);
}

StepTrace nonadjacent_step(std::int64_t n) {
  if (n < 3) throw DomainError("interval prover needs n >= 3");
  const std::int64_t n_star = ceil_div(n, 3);
  const std::int64_t intervals = (n_star - 1) + (n_star - 1) / 2;
  StepTrace s = pack_uniform(n, intervals);
  s.sum += intervals + 2;
  s.space = 2 * n;
  s.contradiction = s.sum > s.space;
  return s;
}

BoundReport prove_nonadjacent(ScanOptions scan) {
  return scan_until(BoundMethod::kNonadjacent1573, scan, nonadjacent_step);
}

Packing pack_min_sum(std::span<const IntervalGroup> groups, std::int64_t cap) {
  if (cap <= 0) throw DomainError("packing capacity must be positive");
  std::vector<IntervalGroup> sorted(groups.begin(), groups.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.min_length < b.min_length; });
  std::int64_t total = 0;
  for (const auto& g : sorted) {
    if (g.count < 0 || g.min_length < 0) throw DomainError("negative interval group");
    total += g.count;
  }

  Packing p;
  std::int64_t pool = 0;
  std::int64_t placed = 0;
  std::size_t next = 0;
  std::int64_t length = 0;
  while (placed < total) {
    while (next < sorted.size() && sorted[next].min_length <= length) pool += sorted[next++].count;
    if (pool == 0) {
      length = sorted[next].min_length;
      continue;
    }
    const std::int64_t take = std::min(cap, pool);
    p.sum += take * length;
    if (take == cap) ++p.full_levels;
    pool -= take;
    placed += take;
    ++length;
  }
  p.remainder = total - p.full_levels * cap;
  return p;
}

StepTrace partition_step(std::int64_t n, int c, CapRule rule) {
  if (c < 1) throw DomainError("span bound c must be >= 1");
  if (n < 3) throw DomainError("partition prover needs n >= 3");
  StepTrace s;
  s.n = n;
  s.n_star = ceil_div(n, 3);
  s.b = blue_cap(n);
  const std::int64_t cap = rule == CapRule::kTwoBMinusTwo ? 2 * (s.b - 1) : 2 * s.b - 1;
  // a_{i,i+j} spans j gaps and j - 1 red points, so it is at least j - 1.
  std::vector<IntervalGroup> groups;
  for (int j = 1; j <= c; ++j) {
    const std::int64_t count = std::max<std::int64_t>(s.n_star - j, 0);
    groups.push_back({count, j - 1});
    s.intervals += count;
  }
  const Packing p = pack_min_sum(groups, cap);
  s.q = p.full_levels;
  s.r = p.remainder;
  s.sum = p.sum + static_cast<std::int64_t>(c) * s.n_star;
  s.space = n * c * (c + 1) / 2;
  s.contradiction = s.sum > s.space;
  return s;
}

BoundReport prove_partition(int c, CapRule rule, ScanOptions scan) {
  if (c < 1) throw DomainError("span bound c must be >= 1");
  auto report = scan_until(BoundMethod::kPartition772, scan,
                           [c, rule](std::int64_t n) { return partition_step(n, c, rule); });
  report.c = c;
  report.settings = {{"cap_rule", to_string(rule)}};
  return report;
}

}  // namespace lramsey
