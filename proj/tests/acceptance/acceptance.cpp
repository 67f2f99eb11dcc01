// One line per acceptance criterion. Tolerances are pinned here and do not
// follow the configuration file.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/suites.hpp"
#include "dunkl/threads.hpp"

namespace {

using dunkl::cli::Check;
using dunkl::cli::Config;

enum class Bound { kUpper, kLower, kBelowOne };

struct Part {
  std::string suite;
  std::string group;
  std::string prefix;  // checks whose id starts with this
  double tolerance;
  Bound bound = Bound::kUpper;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Part> parts;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {1, "Plancherel identity, 4 test functions, gamma in {0, 0.5, 1.2}",
       {{"plancherel", "identity", "plancherel.identity.", 1e-6}}},
      {2, "Gaussian eigenfunction for |lambda| <= 4",
       {{"plancherel", "gaussian_eigen", "plancherel.gaussian_eigen.", 1e-6}}},
      {3, "product formula at lambda = 1.3, gamma = 0.5; printed sign breaks T^0 = id by >= 0.1",
       {{"translation", "product_formula", "translation.product_formula.", 1e-8},
        {"translation", "printed_sign", "translation.printed_sign_breaks_identity", 0.1, Bound::kLower}}},
      {4, "Sonine transform maps e_alpha to e_beta",
       {{"sonine", "kernel_reproduction", "sonine.kernel_reproduction.", 1e-6}}},
      {5, "transmutation, duality, mixed convolution, intertwining, factorization",
       {{"sonine", "transmutation", "sonine.transmutation.", 1e-6},
        {"sonine", "duality", "sonine.duality.", 1e-6},
        {"sonine", "mixed_convolution", "sonine.mixed_convolution.", 1e-5},
        {"sonine", "convolution_intertwining", "sonine.convolution_intertwining.", 1e-5},
        {"sonine", "operator_intertwining", "sonine.operator_intertwining.", 1e-5},
        {"sonine", "factorization", "sonine.factorization.", 1e-5}}},
      {6, "F(G) = K at window (0.5, 4)", {{"calderon", "kernel_spectrum", "calderon.transform_of_G", 1e-6}}},
      {7, "Calderon convergence: strictly decreasing, final window (0.1, 16) <= 1e-2",
       {{"calderon", "convergence", "calderon.strictly_decreasing", 1.0, Bound::kBelowOne},
        {"calderon", "convergence", "calderon.final_window_error", 1e-2}}},
      {8, "transported spectrum on 0.2 <= |lambda| <= 4; ratio m_0.5 / m_1.5 = 9",
       {{"inversion", "spectrum", "inversion.transported_spectrum", 1e-5},
        {"inversion", "spectrum", "inversion.plancherel_ratio", 1e-14}}},
      {9, "commutation identity at a in {0.5, 1, 2}", {{"inversion", "commutation", "inversion.commutation", 1e-5}}},
      {10, "inversion from tX f at window (0.1, 16); non-increasing over nested windows",
       {{"inversion", "round_trip", "inversion.round_trip", 5e-2},
        {"inversion", "round_trip", "inversion.non_increasing", 1.0}}},
  };
  return table;
}

bool judge(const Check& c, const Part& p) {
  switch (p.bound) {
    case Bound::kUpper:
      return c.measured <= p.tolerance;
    case Bound::kLower:
      return c.measured >= p.tolerance;
    case Bound::kBelowOne:
      return c.measured < p.tolerance;
  }
  return false;
}

bool run(const Criterion& cr, const Config& cfg) {
  bool ok = true;
  std::string detail;
  for (const Part& p : cr.parts) {
    std::size_t matched = 0;
    for (const Check& c : dunkl::cli::run_group(p.suite, p.group, cfg)) {
      if (c.id.rfind(p.prefix, 0) != 0) continue;
      ++matched;
      const bool pass = judge(c, p);
      ok = ok && pass;
      char buf[256];
      std::snprintf(buf, sizeof buf, "\n    %s %-48s measured %.3e  tol %.1e", pass ? "ok  " : "FAIL", c.id.c_str(),
                    c.measured, p.tolerance);
      detail += buf;
    }
    if (matched == 0) {
      ok = false;
      detail += "\n    FAIL no checks matched " + p.prefix;
    }
  }
  std::printf("C%-2d %s  %s%s\n", cr.number, ok ? "PASS" : "FAIL", cr.title.c_str(), detail.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run one criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  try {
    dunkl::configure_threads_from_env();
    const Config cfg;
    bool all = true;
    for (const auto& cr : criteria()) {
      if (only != 0 && cr.number != only) continue;
      all = run(cr, cfg) && all;
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return EXIT_FAILURE;
  }
}
