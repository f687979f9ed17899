#pragma once

#include <Eigen/Dense>

#include "dmk/ideal.hpp"

namespace dmk {

/// Rectangular matrix of polynomials over a common variable count.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
  PolyMatrix(int rows, int cols, int nvars);

  static PolyMatrix identity(int n, int nvars);
  static PolyMatrix zero(int rows, int cols, int nvars) {
    return PolyMatrix(rows, cols, nvars);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  Poly& at(int r, int c) { return entries_[r * cols_ + c]; }
  const Poly& at(int r, int c) const { return entries_[r * cols_ + c]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  bool operator==(const PolyMatrix& o) const;

  PolyMatrix transpose() const;

  /// Entrywise substitution of variables. `out_vars` pins the result's
  /// variable count when args is empty.
  PolyMatrix compose(const std::vector<Poly>& args, int out_vars = -1) const;

  /// Entrywise normal form mod I.
  PolyMatrix reduce(const Ideal& I) const;

  /// True iff every entry lies in I.
  bool all_in(const Ideal& I) const;

  /// Exact evaluation at a rational point.
  std::vector<std::vector<Scalar>> eval(const std::vector<Scalar>& pt) const;
  /// Floating evaluation.
  Eigen::MatrixXd eval(const std::vector<double>& pt) const;

 private:
  int rows_, cols_, nvars_;
  std::vector<Poly> entries_;
};

/// k x n Jacobian of a list of k polynomials in n variables.
PolyMatrix jacobian(const std::vector<Poly>& s, int nvars);

/// Rank of an exact rational matrix (Gaussian elimination).
int rank_exact(const std::vector<std::vector<Scalar>>& m);

/// Rank with pivot tolerance for floating matrices.
int rank_float(const Eigen::MatrixXd& m, double tol = 1e-9);

/// Horizontal and vertical stacking.
PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace dmk
