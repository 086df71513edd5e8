#pragma once

// Executable versions of the pigeonhole arguments bounding R_3(L) from above.
// Every prover scans n upward and stops at the first n whose contradiction
// predicate holds; the full scan is kept as a trace.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lramsey {

enum class BoundMethod {
  kNaive2593,
  kIntervals1804,
  kNonadjacent1573,
  kPartition772,
  kGolomb493,
};

const char* to_string(BoundMethod method);
std::optional<BoundMethod> parse_bound_method(std::string_view name);

// The bound each argument was published with.
std::int64_t published_bound(BoundMethod method);

enum class NaiveRounding { kRealValued, kCeilingPigeonhole };

// Per-value multiplicity cap in the partition argument.
enum class CapRule { kTwoBMinusTwo, kTwoBMinusOne };

// Capacity of subdiagonal k in the Golomb argument, from its ruler order b_k.
enum class GolombCapRule { kTwiceOrder, kTwiceOrderMinusOne };

const char* to_string(NaiveRounding rounding);
const char* to_string(CapRule rule);
const char* to_string(GolombCapRule rule);

struct StepTrace {
  std::int64_t n = 0;
  std::int64_t n_star = 0;     // ceil(n / 3), red points on the main diagonal
  std::int64_t b = 0;          // blue cap (first subdiagonal for the Golomb method)
  std::int64_t intervals = 0;  // intervals being packed
  std::int64_t q = 0;          // length levels packed at full capacity
  std::int64_t r = 0;          // intervals left over after the full levels
  std::int64_t sum = 0;        // minimized occupied space
  std::int64_t space = 0;      // available space
  bool contradiction = false;

  friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

struct ScanOptions {
  // Provers evaluate start + 1, start + 2, ...
  std::int64_t start = 100;
  std::int64_t limit = 1'000'000;
};

struct BoundReport {
  BoundMethod method = BoundMethod::kIntervals1804;
  std::optional<int> c;
  std::int64_t n_result = 0;
  std::vector<StepTrace> trace;
  // Which knobs ran, as key/value pairs in a fixed order.
  std::vector<std::pair<std::string, std::string>> settings;

  const StepTrace& final_step() const { return trace.back(); }
  const StepTrace* step_at(std::int64_t n) const;
};

// Least b with b(b - 1) / 2 > n - 2, i.e. ceil(sqrt(2n - 15/4) + 1/2).
std::int64_t blue_cap(std::int64_t n);

StepTrace naive_step(std::int64_t n, NaiveRounding rounding);
BoundReport prove_naive(NaiveRounding rounding, ScanOptions scan = {});

StepTrace intervals_step(std::int64_t n);
BoundReport prove_intervals(ScanOptions scan = {});

StepTrace nonadjacent_step(std::int64_t n);
BoundReport prove_nonadjacent(ScanOptions scan = {});

// Intervals that all share a lower bound on their length.
struct IntervalGroup {
  std::int64_t count = 0;
  std::int64_t min_length = 0;
};

struct Packing {
  std::int64_t sum = 0;
  std::int64_t full_levels = 0;
  std::int64_t remainder = 0;
};

// Minimum total length of the intervals when at most `cap` of them may share
// a length. Lengths are handed out in ascending order, each level filled to
// capacity before moving on.
Packing pack_min_sum(std::span<const IntervalGroup> groups, std::int64_t cap);

StepTrace partition_step(std::int64_t n, int c, CapRule rule);
BoundReport prove_partition(int c, CapRule rule = CapRule::kTwoBMinusTwo, ScanOptions scan = {});

// One plus the optimal Golomb ruler length, for orders 0..28.
struct GolombTable {
  static constexpr std::array<std::int64_t, 29> kLengthsPlusOne = {
      0,   1,   2,   4,   7,   12,  18,  26,  35,  45,  56,  73,  86,  107, 128,
      152, 178, 200, 217, 247, 284, 334, 357, 373, 426, 481, 493, 554, 586};
  static constexpr std::int64_t kMaxLength = 585;

  std::span<const std::int64_t> lengths_plus_one() const { return kLengthsPlusOne; }
};

// blue_array[len] from the Golomb prover: the number of table entries
// strictly below len. Valid for 0 <= len <= 585.
std::int64_t cap_for_length(const GolombTable& table, std::int64_t len);

// The Golomb prover reads blue_array[n - k + index_shift]. Shift 0 with
// capacity 2 * b_k is the literal pseudocode.
struct GolombReading {
  int index_shift = 0;
  GolombCapRule cap_rule = GolombCapRule::kTwiceOrder;

  friend bool operator==(const GolombReading&, const GolombReading&) = default;
};

std::string describe(const GolombReading& reading);

inline constexpr int kGolombMinC = 5;
inline constexpr int kGolombMaxC = 19;

StepTrace golomb_step(std::int64_t n, int c, GolombReading reading = {});
BoundReport prove_golomb(int c, GolombReading reading = {}, ScanOptions scan = {});

// prove_golomb for every c in [5, 19], ascending c. Values of c run concurrently.
std::vector<BoundReport> prove_golomb_all(GolombReading reading = {}, ScanOptions scan = {});

// Where a prover disagrees with the published bound, under every reading of
// the ambiguous steps.
struct ReadingOutcome {
  std::string reading;
  std::int64_t n_result = 0;
  bool reproduces_target = false;
  StepTrace at_target;  // the step evaluated at n = target
};

struct DiscrepancyReport {
  BoundMethod method = BoundMethod::kGolomb493;
  int c = 0;
  std::int64_t target = 0;
  std::vector<ReadingOutcome> readings;  // default reading first

  bool default_reproduces() const { return readings.front().reproduces_target; }
  // First n where the default reading and the target disagree on the predicate.
  std::int64_t divergent_n() const;
  std::string to_key_values() const;
};

DiscrepancyReport partition_discrepancy(int c = 12, std::int64_t target = 772);
DiscrepancyReport golomb_discrepancy(int c = 12, std::int64_t target = 493);

std::string format_report_table(const BoundReport& report, bool full_trace);
std::string format_report_key_values(const BoundReport& report, bool full_trace);

}  // namespace lramsey
