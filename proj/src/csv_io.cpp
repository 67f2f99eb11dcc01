#include "dunkl/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("CSV line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

SampleTable read_sample_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CSV: empty input");
  const auto header = split_fields(line);
  const bool with_deriv = header.size() == 5;
  if (!(header.size() == 3 && header[0] == "x" && header[1] == "re" && header[2] == "im") &&
      !(with_deriv && header[0] == "x" && header[1] == "re" && header[2] == "im" &&
        header[3] == "dre" && header[4] == "dim")) {
    throw std::runtime_error("CSV: header must be x,re,im or x,re,im,dre,dim");
  }
  SampleTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = split_fields(line);
    if (f.size() != header.size()) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": wrong field count");
    }
    table.x.push_back(parse_number(f[0], line_no));
    table.values.emplace_back(parse_number(f[1], line_no), parse_number(f[2], line_no));
    if (with_deriv) {
      table.derivative.emplace_back(parse_number(f[3], line_no), parse_number(f[4], line_no));
    }
  }
  if (table.x.empty()) throw std::runtime_error("CSV: no data rows");
  return table;
}

SampleTable read_sample_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_sample_table(in);
}

SampledFunction bind_to_grid(const SampleTable& table, GridPtr grid, double tol) {
  if (table.x.size() != grid->size()) {
    throw GridMismatch("CSV has " + std::to_string(table.x.size()) + " rows, grid has " +
                       std::to_string(grid->size()) + " nodes");
  }
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    if (std::abs(table.x[i] - grid->node(i)) > tol * std::max(1.0, std::abs(grid->node(i)))) {
      throw GridMismatch("CSV abscissa " + std::to_string(i) + " does not match the grid");
    }
  }
  if (table.derivative.empty()) return SampledFunction(std::move(grid), table.values);
  return SampledFunction(std::move(grid), table.values, table.derivative);
}

void write_sampled_function(std::ostream& out, const SampledFunction& f) {
  const bool deriv = f.has_derivative();
  out << (deriv ? "x,re,im,dre,dim\n" : "x,re,im\n");
  out << std::setprecision(17);
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << f.grid().node(i) << ',' << f.value(i).real() << ',' << f.value(i).imag();
    if (deriv) out << ',' << f.derivative()[i].real() << ',' << f.derivative()[i].imag();
    out << '\n';
  }
}

void write_sampled_function(const std::filesystem::path& path, const SampledFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_sampled_function(out, f);
}

}  // namespace dunkl
