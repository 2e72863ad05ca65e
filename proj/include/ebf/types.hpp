#ifndef EBF_TYPES_HPP
#define EBF_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace ebf {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The caller violated a contract: bad sizes, infeasible parameters,
/// mismatched domains, inputs outside the documented setting.
struct PreconditionError : Error {
  using Error::Error;
};

/// A field evaluation produced non-finite entries.
struct EvalError : Error {
  using Error::Error;
};

/// The mesh cannot resolve the requested quantity at this resolution.
/// Retrying on a finer grid is the documented remedy.
struct UnderResolvedError : Error {
  using Error::Error;
};

/// An eigensolve failed its residual contract.
struct SolverError : Error {
  using Error::Error;
};

}  // namespace ebf

#endif
