#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace dunkl::cli {

Check upper_bound(std::string id, std::string ref, double measured, double tolerance) {
  return Check{std::move(id), std::move(ref), measured, tolerance, measured <= tolerance};
}

Check lower_bound(std::string id, std::string ref, double measured, double tolerance) {
  return Check{std::move(id), std::move(ref), measured, tolerance, measured >= tolerance};
}

std::size_t Report::pass_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

std::size_t Report::fail_count() const { return checks.size() - pass_count(); }

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

void write_json(std::ostream& out, const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json row;
    row["id"] = c.id;
    row["paper_ref"] = c.paper_ref;
    // JSON has no NaN; a non-finite measurement is reported as null
    if (std::isfinite(c.measured)) {
      row["measured"] = c.measured;
    } else {
      row["measured"] = nullptr;
    }
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    j["checks"].push_back(row);
  }
  j["pass_count"] = r.pass_count();
  j["fail_count"] = r.fail_count();
  out << j.dump(2) << '\n';
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

void write_csv(std::ostream& out, const Report& r) {
  out << "id,paper_ref,measured,tolerance,pass\n" << std::setprecision(17);
  for (const auto& c : r.checks) {
    out << csv_field(c.id) << ',' << csv_field(c.paper_ref) << ',' << c.measured << ',' << c.tolerance << ','
        << (c.pass ? "true" : "false") << '\n';
  }
}

void write_report_files(const std::filesystem::path& json_path, const Report& r) {
  if (json_path.has_parent_path()) std::filesystem::create_directories(json_path.parent_path());
  std::ofstream j(json_path);
  if (!j) throw std::runtime_error("cannot write " + json_path.string());
  write_json(j, r);
  std::filesystem::path csv_path = json_path;
  csv_path.replace_extension(".csv");
  std::ofstream c(csv_path);
  if (!c) throw std::runtime_error("cannot write " + csv_path.string());
  write_csv(c, r);
}

void write_summary(std::ostream& out, const Report& r) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.id.size());
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << c.id << std::right
        << "  measured " << std::scientific << std::setprecision(3) << c.measured << "  tol " << c.tolerance
        << std::defaultfloat << '\n';
  }
  out << r.suite << ": " << r.pass_count() << " passed, " << r.fail_count() << " failed\n";
}

}  // namespace dunkl::cli
