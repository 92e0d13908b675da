#include "fraclab/report.hpp"

#include <cmath>
#include <ostream>

#include "fraclab/field_io.hpp"

namespace fraclab {

double safe_ratio(double lhs, double rhs) {
  if (lhs == 0.0 && rhs == 0.0) return 0.0;
  return lhs / rhs;
}

double loglog_slope(const std::vector<ReportRow>& rows) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const auto& r : rows) {
    if (!(r.param > 0.0 && r.value > 0.0)) continue;
    const double x = std::log(r.param), y = std::log(r.value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (count * sxy - sx * sy) / denom;
}

bool monotone_decreasing(const std::vector<ReportRow>& rows, double jitter) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].value > (1.0 + jitter) * rows[i - 1].value) return false;
  return true;
}

void Report::add_failure(const std::string& check_id, const std::string& message) {
  CheckResult c;
  c.check_id = check_id;
  c.lhs = c.rhs = c.ratio = std::numeric_limits<double>::quiet_NaN();
  c.passed = false;
  c.anchor = "error: " + message;
  add(std::move(c));
}

int Report::passed() const {
  int p = 0;
  for (const auto& e : order_) p += e.sweep ? sweeps_[e.index].passed : checks_[e.index].passed;
  return p;
}

namespace {

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

void Report::write_csv(std::ostream& out, bool with_summary) const {
  out << "check_id,param,value,aux1,aux2,verdict\n";
  for (const auto& e : order_) {
    if (e.sweep) {
      const auto& r = sweeps_[e.index];
      for (const auto& row : r.rows)
        out << r.check_id << ',' << format_real(row.param) << ',' << format_real(row.value) << ','
            << format_real(row.aux1) << ',' << format_real(row.aux2) << ',' << verdict(r.passed) << '\n';
      out << r.check_id << ",limit," << format_real(r.limit_estimate) << ',' << format_real(r.fitted_slope) << ','
          << format_real(r.tolerance) << ',' << verdict(r.passed) << '\n';
    } else {
      const auto& c = checks_[e.index];
      out << c.check_id << ',' << format_real(c.param) << ',' << format_real(c.lhs) << ',' << format_real(c.rhs)
          << ',' << format_real(c.ratio) << ',' << verdict(c.passed) << '\n';
    }
  }
  if (with_summary) out << "SUITE," << passed() << '/' << total() << '\n';
}

void Report::write_summary(std::ostream& out) const {
  for (const auto& e : order_) {
    if (e.sweep) {
      const auto& r = sweeps_[e.index];
      out << (r.passed ? "PASS " : "FAIL ") << r.check_id << "  limit=" << format_real(r.limit_estimate);
      if (!std::isnan(r.fitted_slope)) out << " slope=" << format_real(r.fitted_slope);
      if (!r.note.empty()) out << "  (" << r.note << ')';
      out << '\n';
    } else {
      const auto& c = checks_[e.index];
      out << (c.passed ? "PASS " : "FAIL ") << c.check_id << "  param=" << format_real(c.param)
          << " lhs=" << format_real(c.lhs) << " rhs=" << format_real(c.rhs);
      if (!c.anchor.empty()) out << "  (" << c.anchor << ')';
      out << '\n';
    }
  }
}

void write_dat(std::ostream& out, const ConvergenceReport& r) {
  out << "# " << r.check_id << '\n';
  for (const auto& row : r.rows) out << format_real(row.param) << ' ' << format_real(row.value) << '\n';
}

}  // namespace fraclab
