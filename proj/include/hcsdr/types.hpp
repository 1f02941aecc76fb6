#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcsdr {

using Eigen::Index;

// Error hierarchy. The CLI maps DataError to exit code 2 and
// NumericError to exit code 3.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class DataError : public Error {
  using Error::Error;
};
class NumericError : public Error {
  using Error::Error;
};

class NonFiniteError : public DataError {
  using DataError::DataError;
};
class TooFewRowsError : public DataError {
  using DataError::DataError;
};
class TooFewColsError : public DataError {
  using DataError::DataError;
};
class ShapeMismatchError : public DataError {
  using DataError::DataError;
};
class LengthMismatchError : public DataError {
  using DataError::DataError;
};
class DimensionMismatchError : public DataError {
  using DataError::DataError;
};
class EmptySliceError : public DataError {
  using DataError::DataError;
};
class UnknownModelError : public DataError {
  using DataError::DataError;
};
class ParseError : public DataError {
  using DataError::DataError;
};
class DomainError : public NumericError {
  using NumericError::NumericError;
};
class SingularCovarianceError : public NumericError {
  using NumericError::NumericError;
};

/// Seed plumbing for Monte-Carlo work: every random stream is derived
/// from (master_seed, replication_index) plus a purpose tag, so
/// replications are order-independent and reproducible.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t replication_index = 0;
};

/// A point on the unit sphere of R^p. The constructor renormalizes any
/// input with Euclidean norm in [1e-8, 1e8] and rejects the rest, so a
/// constructed value always satisfies | ||coords|| - 1 | <= 1e-10.
class UnitDirection {
 public:
  explicit UnitDirection(Eigen::VectorXd coords);

  const Eigen::VectorXd& coords() const noexcept { return coords_; }
  Eigen::Index dim() const noexcept { return coords_.size(); }
  double dot(const UnitDirection& other) const;

 private:
  Eigen::VectorXd coords_;
};

/// Flips the sign so the first coordinate with |v_i| > 1e-12 is positive.
/// Makes eigenvector-based directions deterministic.
UnitDirection canonical_sign(UnitDirection v);

/// Angle tuple of length p-1 parametrizing the unit sphere of R^p.
/// Canonical ranges are [0, pi] for all but the last angle and [0, 2*pi)
/// for the last; conversions accept arbitrary real angles and wrap.
struct SphereAngles {
  Eigen::VectorXd phi;

  Eigen::Index dim() const noexcept { return phi.size() + 1; }
};

/// A regression sample: predictor matrix with one observation per row
/// paired with a response vector. Construct through validate_dataset.
class Dataset {
 public:
  const Eigen::MatrixXd& x() const noexcept { return x_; }
  const Eigen::VectorXd& y() const noexcept { return y_; }
  Eigen::Index n() const noexcept { return x_.rows(); }
  Eigen::Index p() const noexcept { return x_.cols(); }

  friend Dataset validate_dataset(Eigen::MatrixXd x, Eigen::VectorXd y);

 private:
  Dataset(Eigen::MatrixXd x, Eigen::VectorXd y)
      : x_(std::move(x)), y_(std::move(y)) {}

  Eigen::MatrixXd x_;
  Eigen::VectorXd y_;
};

/// Checks shapes (n >= 3, p >= 2, matching lengths) and finiteness.
/// Throws ShapeMismatchError, TooFewRowsError, TooFewColsError or
/// NonFiniteError.
Dataset validate_dataset(Eigen::MatrixXd x, Eigen::VectorXd y);

/// Output of the two-stage sphere optimization.
struct FitResult {
  UnitDirection direction;
  double hellinger = 0.0;          // objective at `direction`
  double bhattacharyya = 1.0;      // clamped affinity at `direction`
  double bhattacharyya_raw = 1.0;  // unclamped value, for diagnostics
  std::string initializer;
  long evaluations = 0;  // true objective evaluations (cache misses)
  std::vector<std::pair<std::string, double>> stage_trace;
};

}  // namespace hcsdr
