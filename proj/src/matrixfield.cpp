#include "ebf/matrixfield.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "ebf/spectral.hpp"

namespace ebf {

std::vector<Mat> sample_nodes(const MatrixField& f, exec::Mode mode) {
  const std::size_t count = f.domain->node_count();
  std::vector<Mat> samples(count);
  std::vector<char> finite(count, 1);
  exec::for_each_index(mode, static_cast<std::ptrdiff_t>(count), [&](std::size_t i) {
    Mat m = f.eval(f.domain->node_point(i));
    if (!m.allFinite()) finite[i] = 0;
    samples[i] = std::move(m);
  });
  for (std::size_t i = 0; i < count; ++i)
    if (!finite[i])
      throw EvalError("matrix field evaluation produced non-finite entries at node " +
                      std::to_string(i));
  return samples;
}

namespace {

double commutator_residual(const Mat& a) {
  const Mat comm = a * a.adjoint() - a.adjoint() * a;  // Hermitian
  Eigen::SelfAdjointEigenSolver<Mat> es(comm, Eigen::EigenvaluesOnly);
  const double norm2 = es.eigenvalues().cwiseAbs().maxCoeff();
  return norm2 / (1.0 + a.squaredNorm());
}

double node_min_gap(const Mat& a) {
  const Vec values = eigen_normal(a).values;
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < values.size(); ++i)
    for (int j = i + 1; j < values.size(); ++j)
      gap = std::min(gap, std::abs(values[i] - values[j]));
  return gap;
}

}  // namespace

ValidationReport validate_samples(const std::vector<Mat>& samples, int n,
                                  double tol_normal, double gap_tol,
                                  exec::Mode mode) {
  ValidationReport rep;
  rep.tol_normal = tol_normal;
  rep.tol_gap = gap_tol;

  std::vector<double> residual(samples.size());
  std::vector<double> gap(samples.size());
  exec::for_each_index(mode, static_cast<std::ptrdiff_t>(samples.size()),
                       [&](std::size_t i) {
                         residual[i] = commutator_residual(samples[i]);
                         gap[i] = n > 1 ? node_min_gap(samples[i])
                                        : std::numeric_limits<double>::infinity();
                       });
  // Fixed-order reductions keep serial and parallel runs bit-identical.
  rep.normality_residual = 0.0;
  rep.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    rep.normality_residual = std::max(rep.normality_residual, residual[i]);
    rep.min_gap = std::min(rep.min_gap, gap[i]);
  }
  rep.normal_ok = rep.normality_residual <= tol_normal;
  rep.multiplicity_free = rep.min_gap > gap_tol;
  return rep;
}

ValidationReport check_normal(const MatrixField& f, double tol, exec::Mode mode) {
  return validate_samples(sample_nodes(f, mode), f.n, tol, kDefaultGapTol, mode);
}

ValidationReport check_multiplicity_free(const MatrixField& f, double gap_tol,
                                         exec::Mode mode) {
  return validate_samples(sample_nodes(f, mode), f.n, kDefaultNormalTol, gap_tol, mode);
}

ValidationReport validate_field(const MatrixField& f, double tol_normal,
                                double gap_tol, exec::Mode mode) {
  return validate_samples(sample_nodes(f, mode), f.n, tol_normal, gap_tol, mode);
}

cd CharPolyField::eval(std::size_t node, cd lambda) const {
  cd acc = (n % 2 == 0) ? cd(1, 0) : cd(-1, 0);  // leading (-1)^n
  for (int k = n - 1; k >= 0; --k) acc = acc * lambda + coeff[node * n + k];
  return acc;
}

cd CharPolyField::trace(std::size_t node) const {
  // coefficient of lambda^(n-1) equals (-1)^(n-1) * tr A.
  const cd c = coeff[node * n + (n - 1)];
  return (n % 2 == 0) ? -c : c;
}

cd CharPolyField::determinant(std::size_t node) const { return coeff[node * n]; }

namespace {

// Faddeev-LeVerrier coefficients of det(lambda I - A), then flipped by
// (-1)^n into the det(A - lambda I) normalization.
void charpoly_exact(const Mat& a, cd* out) {
  const int n = static_cast<int>(a.rows());
  Mat m = Mat::Identity(n, n);
  std::vector<cd> q(n);  // q[k] multiplies lambda^k in det(lambda I - A)
  cd qk;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) m = (a * m + qk * Mat::Identity(n, n)).eval();
    qk = -(a * m).trace() / static_cast<double>(k);
    q[n - k] = qk;
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  for (int k = 0; k < n; ++k) out[k] = sign * q[k];
}

void charpoly_from_eigenvalues(const Mat& a, cd* out) {
  const int n = static_cast<int>(a.rows());
  const Vec roots = eigen_normal(a).values;
  // prod_i (lambda_i - lambda), expanded lowest degree first.
  std::vector<cd> poly(n + 1, cd(0, 0));
  poly[0] = cd(1, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k >= 1; --k) poly[k] = roots[i] * poly[k] - poly[k - 1];
    poly[0] *= roots[i];
  }
  for (int k = 0; k < n; ++k) out[k] = poly[k];
}

}  // namespace

CharPolyField char_poly(const MatrixField& f, exec::Mode mode) {
  const std::vector<Mat> samples = sample_nodes(f, mode);
  CharPolyField cp;
  cp.n = f.n;
  cp.domain = f.domain;
  cp.coeff.resize(samples.size() * f.n);
  exec::for_each_index(mode, static_cast<std::ptrdiff_t>(samples.size()),
                       [&](std::size_t i) {
                         if (f.n <= 4)
                           charpoly_exact(samples[i], cp.coeff.data() + i * f.n);
                         else
                           charpoly_from_eigenvalues(samples[i],
                                                     cp.coeff.data() + i * f.n);
                       });
  return cp;
}

double max_coeff_distance(const CharPolyField& a, const CharPolyField& b) {
  if (a.n != b.n || a.coeff.size() != b.coeff.size())
    throw PreconditionError("max_coeff_distance: mismatched characteristic polynomial fields");
  double d = 0.0;
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    d = std::max(d, std::abs(a.coeff[i] - b.coeff[i]));
  return d;
}

}  // namespace ebf
