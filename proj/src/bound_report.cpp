#include <iomanip>
#include <sstream>

#include "lramsey/bounds.hpp"
#include "lramsey/errors.hpp"

namespace lramsey {

namespace {

void write_step_kv(std::ostream& out, const StepTrace& s) {
  out << "step n=" << s.n << " n_star=" << s.n_star << " b=" << s.b << " intervals=" << s.intervals
      << " q=" << s.q << " r=" << s.r << " sum=" << s.sum << " space=" << s.space
      << " contradiction=" << (s.contradiction ? 1 : 0) << "\n";
}

void write_step_row(std::ostream& out, const StepTrace& s) {
  out << std::setw(7) << s.n << std::setw(7) << s.n_star << std::setw(5) << s.b << std::setw(10)
      << s.intervals << std::setw(5) << s.q << std::setw(5) << s.r << std::setw(9) << s.sum
      << std::setw(9) << s.space << "  " << (s.contradiction ? "yes" : "no") << "\n";
}

template <typename Prove>
ReadingOutcome evaluate(std::string name, std::int64_t target, Prove prove, StepTrace at_target) {
  ReadingOutcome out;
  out.reading = std::move(name);
  out.at_target = at_target;
  try {
    out.n_result = prove();
  } catch (const std::exception&) {
    out.n_result = -1;
  }
  out.reproduces_target = out.n_result == target;
  return out;
}

}  // namespace

std::int64_t DiscrepancyReport::divergent_n() const {
  const std::int64_t got = readings.front().n_result;
  if (got < 0) return target;
  return std::min(got, target);
}

std::string DiscrepancyReport::to_key_values() const {
  std::ostringstream out;
  out << "method=" << to_string(method) << "\n";
  out << "c=" << c << "\n";
  out << "target=" << target << "\n";
  out << "reproduced_by_default=" << (default_reproduces() ? "true" : "false") << "\n";
  out << "divergent_n=" << divergent_n() << "\n";
  for (std::size_t i = 0; i < readings.size(); ++i) {
    const auto& r = readings[i];
    const std::string key = "reading." + std::to_string(i) + ".";
    out << key << "name=" << r.reading << "\n";
    out << key << "n_result=" << r.n_result << "\n";
    out << key << "reproduces_target=" << (r.reproduces_target ? "true" : "false") << "\n";
    out << key << "at_target.sum=" << r.at_target.sum << "\n";
    out << key << "at_target.space=" << r.at_target.space << "\n";
    out << key << "at_target.contradiction=" << (r.at_target.contradiction ? "true" : "false") << "\n";
  }
  return out.str();
}

DiscrepancyReport partition_discrepancy(int c, std::int64_t target) {
  DiscrepancyReport report;
  report.method = BoundMethod::kPartition772;
  report.c = c;
  report.target = target;
  for (CapRule rule : {CapRule::kTwoBMinusTwo, CapRule::kTwoBMinusOne}) {
    report.readings.push_back(evaluate(
        std::string("cap=") + to_string(rule), target,
        [&] { return prove_partition(c, rule).n_result; }, partition_step(target, c, rule)));
  }
  return report;
}

DiscrepancyReport golomb_discrepancy(int c, std::int64_t target) {
  DiscrepancyReport report;
  report.method = BoundMethod::kGolomb493;
  report.c = c;
  report.target = target;
  for (int shift : {0, -1, 1}) {
    for (GolombCapRule rule : {GolombCapRule::kTwiceOrder, GolombCapRule::kTwiceOrderMinusOne}) {
      const GolombReading reading{shift, rule};
      report.readings.push_back(evaluate(
          describe(reading), target, [&] { return prove_golomb(c, reading).n_result; },
          golomb_step(target, c, reading)));
    }
  }
  return report;
}

std::string format_report_table(const BoundReport& report, bool full_trace) {
  std::ostringstream out;
  out << "method: " << to_string(report.method) << "\n";
  if (report.c) out << "c: " << *report.c << "\n";
  for (const auto& [key, value] : report.settings) out << key << ": " << value << "\n";
  out << "n = " << report.n_result << "\n";
  const std::int64_t published = published_bound(report.method);
  out << "published bound: " << published
      << (published == report.n_result ? " (reproduced)" : " (not reproduced)") << "\n";
  out << "      n     n*    b intervals    q    r      sum    space  contradiction\n";
  if (full_trace) {
    for (const auto& s : report.trace) write_step_row(out, s);
  } else {
    write_step_row(out, report.final_step());
  }
  return out.str();
}

std::string format_report_key_values(const BoundReport& report, bool full_trace) {
  std::ostringstream out;
  out << "method=" << to_string(report.method) << "\n";
  if (report.c) out << "c=" << *report.c << "\n";
  for (const auto& [key, value] : report.settings) out << "setting." << key << "=" << value << "\n";
  out << "n_result=" << report.n_result << "\n";
  out << "published_bound=" << published_bound(report.method) << "\n";
  if (full_trace) {
    for (const auto& s : report.trace) write_step_kv(out, s);
  } else {
    write_step_kv(out, report.final_step());
  }
  return out.str();
}

}  // namespace lramsey
