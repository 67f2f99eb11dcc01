#pragma once

#include <memory>
#include <span>
#include <vector>

namespace dunkl {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule on (-1, 1) for the weight (1-t)^a (1+t)^b, a, b > -1.
/// Golub-Welsch start, Newton-polished nodes, weights from the derivative formula.
QuadratureRule gauss_jacobi(int n, double a, double b);

QuadratureRule gauss_legendre(int n);

/// Maps a rule on (-1, 1) to (lo, hi), scaling weights by (hi - lo)/2 only.
/// Any endpoint-weight normalization is left to the caller.
QuadratureRule affine_map(const QuadratureRule& rule, double lo, double hi);

enum class RuleKind { kCompositeLegendre, kJacobi };

/// Nodes and weights over [-R, R]. Composite grids keep their panel
/// structure so sampled functions can be interpolated panel by panel.
class WeightedGrid {
 public:
  WeightedGrid(std::vector<double> nodes, std::vector<double> weights, double radius,
               RuleKind kind, int panels, int order, double exponent);

  std::size_t size() const { return nodes_.size(); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  double radius() const { return radius_; }
  RuleKind kind() const { return kind_; }
  int panels() const { return panels_; }
  int order() const { return order_; }
  double exponent() const { return exponent_; }
  double panel_width() const { return 2.0 * radius_ / panels_; }

  /// Node set closed under negation with equal weights.
  bool symmetric() const;
  /// Index of the node -x_i; requires symmetric().
  std::size_t mirror(std::size_t i) const { return nodes_.size() - 1 - i; }
  /// Whether 0 is a panel boundary, so the positive nodes form a rule on [0, R].
  bool splits_at_zero() const;

  /// Same nodes, within tolerance.
  bool same_nodes(const WeightedGrid& other, double tol = 1e-12) const;

  /// Barycentric data of the reference panel (composite grids only).
  std::span<const double> reference_nodes() const { return ref_nodes_; }
  std::span<const double> barycentric_weights() const { return bary_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double radius_;
  RuleKind kind_;
  int panels_;
  int order_;
  double exponent_;
  std::vector<double> ref_nodes_;
  std::vector<double> bary_;
};

using GridPtr = std::shared_ptr<const WeightedGrid>;

/// Composite Gauss-Legendre grid on [-R, R].
GridPtr make_grid(double radius, int panels, int order);

/// Gauss-Jacobi rule on (-1, 1) for the weight (1 - t^2)^exponent.
GridPtr make_jacobi_grid(double exponent, int order);

}  // namespace dunkl
