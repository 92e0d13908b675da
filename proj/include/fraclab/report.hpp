#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace fraclab {

struct ReportRow {
  double param = 0.0;
  double value = 0.0;
  double aux1 = 0.0;
  double aux2 = 0.0;
};

/// Rows of a parameter sweep with the verdict reached against a frozen tolerance.
struct ConvergenceReport {
  std::string check_id;
  std::vector<ReportRow> rows;
  double fitted_slope = std::numeric_limits<double>::quiet_NaN();
  double limit_estimate = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

/// One inequality or identity instance: lhs against rhs.
struct CheckResult {
  std::string check_id;
  double param = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double aux = 0.0;
  bool passed = false;
  std::string anchor;
};

/// lhs / rhs with 0/0 read as 0.
double safe_ratio(double lhs, double rhs);

/// Least-squares slope of log(value) against log(param) over rows with
/// positive entries; NaN with fewer than two usable rows.
double loglog_slope(const std::vector<ReportRow>& rows);

/// True when each value is at most (1 + jitter) times its predecessor.
bool monotone_decreasing(const std::vector<ReportRow>& rows, double jitter);

/// Ordered collection of reports and checks with the CSV report format
///   check_id,param,value,aux1,aux2,verdict
/// followed by a closing SUITE,<passed>/<total> line. Sweep reports add a
/// `limit` row carrying limit estimate, fitted slope and tolerance; check
/// results are written as (param, lhs, rhs, ratio).
class Report {
 public:
  void add(ConvergenceReport r) { sweeps_.push_back(std::move(r)); order_.push_back({true, sweeps_.size() - 1}); }
  void add(CheckResult c) { checks_.push_back(std::move(c)); order_.push_back({false, checks_.size() - 1}); }
  void add(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs) add(c);
  }
  /// A check that crashed: recorded as a failing diagnostic row.
  void add_failure(const std::string& check_id, const std::string& message);

  int passed() const;
  int total() const { return static_cast<int>(order_.size()); }
  bool all_passed() const { return passed() == total(); }

  const std::vector<ConvergenceReport>& sweeps() const { return sweeps_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void write_csv(std::ostream& out, bool with_summary = true) const;
  /// One human-readable line per entry.
  void write_summary(std::ostream& out) const;

 private:
  struct Entry {
    bool sweep;
    std::size_t index;
  };
  std::vector<ConvergenceReport> sweeps_;
  std::vector<CheckResult> checks_;
  std::vector<Entry> order_;
};

/// Two-column "param value" text for plotting.
void write_dat(std::ostream& out, const ConvergenceReport& r);

}  // namespace fraclab
