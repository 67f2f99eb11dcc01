#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {
namespace {

struct JacobiValues {
  double p;     // P_n
  double prev;  // P_{n-1}
};

JacobiValues jacobi_eval(int n, double a, double b, double x) {
  double p0 = 1.0;
  if (n == 0) return {p0, 0.0};
  double p1 = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
    const double a3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double p2 = (a2 * p1 - a3 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

double jacobi_derivative(int n, double a, double b, double x, const JacobiValues& v) {
  const double c = 2.0 * n + a + b;
  return (n * ((a - b) - c * x) * v.p + 2.0 * (n + a) * (n + b) * v.prev) / (c * (1.0 - x * x));
}

std::vector<double> golub_welsch_nodes(int n, double a, double b) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    double beta = 0.0;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  std::vector<double> nodes(n);
  if (n == 1) {
    nodes[0] = diag(0);
    return nodes;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  for (int i = 0; i < n; ++i) nodes[i] = solver.eigenvalues()(i);
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n <= 0) throw std::invalid_argument("gauss_jacobi: order must be positive");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  }
  QuadratureRule rule;
  rule.nodes = golub_welsch_nodes(n, a, b);
  rule.weights.resize(n);
  const double log_c = (a + b + 1.0) * std::numbers::ln2 + std::lgamma(n + a + 1.0) +
                       std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) -
                       std::lgamma(n + 1.0);
  const double c = std::exp(log_c);
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      const JacobiValues v = jacobi_eval(n, a, b, x);
      const double dx = v.p / jacobi_derivative(n, a, b, x, v);
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const JacobiValues v = jacobi_eval(n, a, b, x);
    const double d = jacobi_derivative(n, a, b, x, v);
    rule.nodes[i] = x;
    rule.weights[i] = c / ((1.0 - x * x) * d * d);
  }
  if (a == b) {
    for (int i = 0; i < n / 2; ++i) {
      const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
      const double w = 0.5 * (rule.weights[n - 1 - i] + rule.weights[i]);
      rule.nodes[i] = -x;
      rule.nodes[n - 1 - i] = x;
      rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

QuadratureRule affine_map(const QuadratureRule& rule, double lo, double hi) {
  QuadratureRule out;
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  out.nodes.reserve(rule.nodes.size());
  out.weights.reserve(rule.weights.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * rule.nodes[i]);
    out.weights.push_back(half * rule.weights[i]);
  }
  return out;
}

WeightedGrid::WeightedGrid(std::vector<double> nodes, std::vector<double> weights,
                           double radius, RuleKind kind, int panels, int order,
                           double exponent)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      radius_(radius),
      kind_(kind),
      panels_(panels),
      order_(order),
      exponent_(exponent) {
  if (nodes_.size() != weights_.size() || nodes_.empty()) {
    throw std::invalid_argument("WeightedGrid: nodes and weights must be nonempty and aligned");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(weights_[i] > 0.0)) throw std::invalid_argument("WeightedGrid: weights must be positive");
    if (std::abs(nodes_[i]) > radius_) throw std::invalid_argument("WeightedGrid: node outside domain");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw std::invalid_argument("WeightedGrid: nodes must increase strictly");
    }
  }
  if (kind_ == RuleKind::kCompositeLegendre) {
    ref_nodes_ = gauss_legendre(order_).nodes;
    bary_.resize(order_);
    for (int j = 0; j < order_; ++j) {
      double prod = 1.0;
      for (int k = 0; k < order_; ++k) {
        if (k != j) prod *= ref_nodes_[j] - ref_nodes_[k];
      }
      bary_[j] = 1.0 / prod;
    }
    const double scale = *std::max_element(bary_.begin(), bary_.end(),
                                           [](double p, double q) { return std::abs(p) < std::abs(q); });
    for (double& w : bary_) w /= std::abs(scale);
  }
}

bool WeightedGrid::symmetric() const {
  const std::size_t n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes_[i] != -nodes_[n - 1 - i] || weights_[i] != weights_[n - 1 - i]) return false;
  }
  return true;
}

bool WeightedGrid::splits_at_zero() const {
  return kind_ == RuleKind::kCompositeLegendre && panels_ % 2 == 0;
}

bool WeightedGrid::same_nodes(const WeightedGrid& other, double tol) const {
  if (this == &other) return true;
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(nodes_[i] - other.nodes_[i]) > tol * std::max(1.0, std::abs(nodes_[i]))) {
      return false;
    }
  }
  return true;
}

GridPtr make_grid(double radius, int panels, int order) {
  if (!(radius > 0.0) || !std::isfinite(radius) || panels <= 0 || order <= 0) {
    throw std::invalid_argument("make_grid: R, panels and order must be positive");
  }
  const QuadratureRule ref = gauss_legendre(order);
  const double h = 2.0 * radius / panels;
  const std::size_t n = static_cast<std::size_t>(panels) * order;
  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(n);
  weights.reserve(n);
  for (int p = 0; p < panels; ++p) {
    const double c = -radius + (p + 0.5) * h;
    for (int j = 0; j < order; ++j) {
      nodes.push_back(c + 0.5 * h * ref.nodes[j]);
      weights.push_back(0.5 * h * ref.weights[j]);
    }
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (nodes[n - 1 - i] - nodes[i]);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[n - 1 - i] = weights[i];
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
  return std::make_shared<const WeightedGrid>(std::move(nodes), std::move(weights), radius,
                                              RuleKind::kCompositeLegendre, panels, order, 0.0);
}

GridPtr make_jacobi_grid(double exponent, int order) {
  if (!(exponent > -1.0)) throw std::invalid_argument("make_jacobi_grid: exponent must exceed -1");
  QuadratureRule rule = gauss_jacobi(order, exponent, exponent);
  return std::make_shared<const WeightedGrid>(std::move(rule.nodes), std::move(rule.weights), 1.0,
                                              RuleKind::kJacobi, 1, order, exponent);
}

}  // namespace dunkl
