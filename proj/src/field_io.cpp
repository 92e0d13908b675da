#include "fraclab/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fraclab {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_header(std::ostream& os, const Grid& g) {
  os << "# " << g.dim() << ',' << format_real(g.half_width()) << ',' << g.points() << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

}  // namespace

void write_field_csv(std::ostream& os, const ScalarField& f) {
  write_header(os, f.grid());
  for (std::size_t i = 0; i < f.grid().size(); ++i) os << i << ',' << format_real(f[i]) << '\n';
}

void write_field_csv(std::ostream& os, const VectorField& f) {
  write_header(os, f.grid());
  const auto& v = f.values();
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    os << i;
    for (Eigen::Index j = 0; j < v.cols(); ++j) os << ',' << format_real(v(i, j));
    os << '\n';
  }
}

void write_field_csv(const std::string& path, const ScalarField& f) {
  auto os = open_out(path);
  write_field_csv(os, f);
}

void write_field_csv(const std::string& path, const VectorField& f) {
  auto os = open_out(path);
  write_field_csv(os, f);
}

ScalarField read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.size() < 2 || line[0] != '#') throw DomainError("field CSV: missing header");
  int n = 0, points = 0;
  double half_width = 0.0;
  {
    std::string body = line.substr(1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream hs(body);
    if (!(hs >> n >> half_width >> points)) throw DomainError("field CSV: malformed header");
  }
  Grid grid(n, half_width, points);
  ScalarField f(grid, "file");
  std::size_t count = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    if (c1 == std::string::npos) throw DomainError("field CSV: malformed row");
    const auto c2 = line.find(',', c1 + 1);
    const std::size_t idx = std::stoul(line.substr(0, c1));
    if (idx >= grid.size()) throw DomainError("field CSV: index out of range");
    f[idx] = std::stod(line.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
    ++count;
  }
  if (count != grid.size()) throw DomainError("field CSV: row count does not match header");
  return f;
}

ScalarField read_field_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return read_field_csv(is);
}

}  // namespace fraclab
