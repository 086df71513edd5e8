#include <algorithm>
#include <future>

#include "lramsey/bounds.hpp"
#include "lramsey/errors.hpp"

namespace lramsey {

std::int64_t cap_for_length(const GolombTable& table, std::int64_t len) {
  if (len < 0 || len > GolombTable::kMaxLength) {
    throw OutOfTableError("Golomb table covers lengths 0.." + std::to_string(GolombTable::kMaxLength) +
                          ", got " + std::to_string(len));
  }
  std::int64_t order = 0;
  for (std::int64_t entry : table.lengths_plus_one()) {
    if (entry >= len) break;
    ++order;
  }
  return order;
}

std::string describe(const GolombReading& reading) {
  std::string index = "n-k";
  if (reading.index_shift > 0) index += "+" + std::to_string(reading.index_shift);
  if (reading.index_shift < 0) index += std::to_string(reading.index_shift);
  return "index=" + index + ",cap=" + to_string(reading.cap_rule);
}

StepTrace golomb_step(std::int64_t n, int c, GolombReading reading) {
  if (c < 1) throw DomainError("span bound c must be >= 1");
  const GolombTable table;
  const std::int64_t cc = c;
  StepTrace s;
  s.n = n;
  s.n_star = (n + 2) / 3;
  s.space = n * cc * (cc + 1) / 2;
  std::int64_t intvls = cc * s.n_star - cc * (cc + 1) / 2;
  s.intervals = intvls;
  // The pseudocode writes "ints"; it is the interval count just computed.
  s.sum = cc * (cc + 1) * (cc + 2) / 6 + cc * (cc - 1) * (cc + 1) / 6 + intvls;
  s.b = cap_for_length(table, n - 1 + reading.index_shift);
  for (std::int64_t k = 1; intvls > 0; ++k) {
    const std::int64_t order = cap_for_length(table, n - k + reading.index_shift);
    const std::int64_t cap =
        std::max<std::int64_t>(reading.cap_rule == GolombCapRule::kTwiceOrder ? 2 * order : 2 * (order - 1), 0);
    if (cap > intvls) {
      s.sum += intvls * (k - 1);
      s.r = intvls;
      intvls = 0;
    } else {
      s.sum += cap * (k - 1);
      intvls -= cap;
      if (cap > 0) ++s.q;
    }
  }
  s.contradiction = s.sum >= s.space;
  return s;
}

BoundReport prove_golomb(int c, GolombReading reading, ScanOptions scan) {
  if (c < kGolombMinC || c > kGolombMaxC) {
    throw DomainError("Golomb prover scans c in [5, 19], got " + std::to_string(c));
  }
  if (reading.index_shift < -1 || reading.index_shift > 1) {
    throw DomainError("Golomb index shift must be -1, 0 or 1");
  }
  if (scan.start < 0 || scan.limit <= scan.start) throw DomainError("bad scan range");
  BoundReport report;
  report.method = BoundMethod::kGolomb493;
  report.c = c;
  report.settings = {{"index", describe(reading)}, {"sum_term", "intvls"}};
  for (std::int64_t n = scan.start + 1; n <= scan.limit; ++n) {
    report.trace.push_back(golomb_step(n, c, reading));
    if (report.trace.back().contradiction) {
      report.n_result = n;
      return report;
    }
  }
  throw CapabilityError("golomb493: no contradiction up to n = " + std::to_string(scan.limit));
}

std::vector<BoundReport> prove_golomb_all(GolombReading reading, ScanOptions scan) {
  std::vector<std::future<BoundReport>> pending;
  for (int c = kGolombMinC; c <= kGolombMaxC; ++c) {
    pending.push_back(std::async(std::launch::async, [=] { return prove_golomb(c, reading, scan); }));
  }
  std::vector<BoundReport> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace lramsey
