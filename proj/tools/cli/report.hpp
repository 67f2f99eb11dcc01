#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl::cli {

/// One identity check. For an expected-failure check `pass` means the
/// failure was reproduced (measured >= tolerance).
struct Check {
  std::string id;
  std::string paper_ref;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// measured <= tolerance, NaN failing.
Check upper_bound(std::string id, std::string ref, double measured, double tolerance);
/// measured >= tolerance; used where a violation must be observed.
Check lower_bound(std::string id, std::string ref, double measured, double tolerance);

struct Report {
  std::string suite;
  std::vector<Check> checks;

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  /// Rows ordered by check id.
  void sort();
  void append(const Report& other);
};

void write_json(std::ostream& out, const Report& r);
/// Header id,paper_ref,measured,tolerance,pass.
void write_csv(std::ostream& out, const Report& r);
/// JSON at path, CSV next to it with extension .csv.
void write_report_files(const std::filesystem::path& json_path, const Report& r);
/// One aligned line per check.
void write_summary(std::ostream& out, const Report& r);

}  // namespace dunkl::cli
