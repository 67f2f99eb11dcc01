// csv_compare a.csv b.csv tol: exit 0 when both sample files share abscissae
// and max |a - b| <= tol.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "dunkl/csv_io.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::fprintf(stderr, "usage: csv_compare a.csv b.csv tol\n");
    return 2;
  }
  try {
    const auto a = dunkl::read_sample_table(std::filesystem::path(argv[1]));
    const auto b = dunkl::read_sample_table(std::filesystem::path(argv[2]));
    const double tol = std::atof(argv[3]);
    if (a.x.size() != b.x.size()) {
      std::fprintf(stderr, "row counts differ: %zu vs %zu\n", a.x.size(), b.x.size());
      return 1;
    }
    double err = 0.0;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
      if (std::abs(a.x[i] - b.x[i]) > 1e-12) {
        std::fprintf(stderr, "abscissa %zu differs\n", i);
        return 1;
      }
      err = std::max(err, std::abs(a.values[i] - b.values[i]));
    }
    std::printf("max_abs_diff %.3e tol %.1e\n", err, tol);
    return err <= tol ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
