#ifndef EBF_MATRIXFIELD_HPP
#define EBF_MATRIXFIELD_HPP

#include <functional>
#include <memory>
#include <vector>

#include "ebf/exec.hpp"
#include "ebf/geometry.hpp"
#include "ebf/types.hpp"

namespace ebf {

inline constexpr double kDefaultNormalTol = 1e-9;
inline constexpr double kDefaultGapTol = 1e-6;

/// A matrix-valued field over a meshed domain.  `eval` must be a pure,
/// deterministic map from domain points to n x n complex matrices.
struct MatrixField {
  int n = 0;
  std::shared_ptr<const Domain> domain;
  std::function<Mat(const DomainPoint&)> eval;
};

/// Evaluate the field at every domain node.  Throws EvalError naming the
/// node if any entry is non-finite.
std::vector<Mat> sample_nodes(const MatrixField& f,
                              exec::Mode mode = exec::default_mode());

struct ValidationReport {
  double normality_residual = 0.0;  // max_n |[A,A*]|_2 / (1 + |A|_F^2)
  double min_gap = 0.0;             // min_n min_{i!=j} |lambda_i - lambda_j|
  bool normal_ok = false;
  bool multiplicity_free = false;
  double tol_normal = kDefaultNormalTol;
  double tol_gap = kDefaultGapTol;
};

/// Commutator residual sweep; passes iff the max relative residual <= tol.
ValidationReport check_normal(const MatrixField& f,
                              double tol = kDefaultNormalTol,
                              exec::Mode mode = exec::default_mode());

/// Eigenvalue-gap sweep; passes iff the min gap over all nodes > gap_tol.
ValidationReport check_multiplicity_free(const MatrixField& f,
                                         double gap_tol = kDefaultGapTol,
                                         exec::Mode mode = exec::default_mode());

/// Both checks on one sampling pass.
ValidationReport validate_field(const MatrixField& f,
                                double tol_normal = kDefaultNormalTol,
                                double gap_tol = kDefaultGapTol,
                                exec::Mode mode = exec::default_mode());

/// Same, over precomputed node samples.
ValidationReport validate_samples(const std::vector<Mat>& samples, int n,
                                  double tol_normal, double gap_tol,
                                  exec::Mode mode = exec::default_mode());

/// Pointwise characteristic polynomial det(A - lambda I), stored expanded in
/// powers of lambda with leading coefficient (-1)^n:
///   det(A - lambda I) = (-1)^n lambda^n + sum_k coeff[node*n + k] lambda^k.
struct CharPolyField {
  int n = 0;
  std::shared_ptr<const Domain> domain;
  std::vector<cd> coeff;

  cd eval(std::size_t node, cd lambda) const;
  /// tr A at a node, recovered from the lambda^(n-1) coefficient.
  cd trace(std::size_t node) const;
  /// det A at a node (the constant coefficient).
  cd determinant(std::size_t node) const;
};

/// Coefficients by exact expansion (Faddeev-LeVerrier) for n <= 4, by
/// product over computed eigenvalues above that.
CharPolyField char_poly(const MatrixField& f,
                        exec::Mode mode = exec::default_mode());

/// max over nodes and coefficients of |a_k - b_k|.
double max_coeff_distance(const CharPolyField& a, const CharPolyField& b);

}  // namespace ebf

#endif
