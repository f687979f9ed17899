#include "dmk/matrix.hpp"

namespace dmk {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<size_t>(rows) * cols, Poly(nvars)) {}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly(nvars, Scalar(1));
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
  PolyMatrix r(rows_, o.cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Poly acc(nvars_);
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::compose(const std::vector<Poly>& args, int out_vars) const {
  if (!args.empty()) out_vars = args[0].nvars();
  if (out_vars < 0) out_vars = 0;
  PolyMatrix r(rows_, cols_, out_vars);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).compose(args, out_vars);
  return r;
}

PolyMatrix PolyMatrix::reduce(const Ideal& I) const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = normal_form(at(i, j), I);
  return r;
}

bool PolyMatrix::all_in(const Ideal& I) const {
  for (const Poly& p : entries_)
    if (!ideal_member(p, I)) return false;
  return true;
}

std::vector<std::vector<Scalar>> PolyMatrix::eval(const std::vector<Scalar>& pt) const {
  std::vector<std::vector<Scalar>> r(rows_, std::vector<Scalar>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i][j] = at(i, j).eval(pt);
  return r;
}

Eigen::MatrixXd PolyMatrix::eval(const std::vector<double>& pt) const {
  Eigen::MatrixXd r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = at(i, j).eval(pt);
  return r;
}

PolyMatrix jacobian(const std::vector<Poly>& s, int nvars) {
  PolyMatrix r(static_cast<int>(s.size()), nvars, nvars);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].nvars() != nvars) throw DimensionError("jacobian entry variable count mismatch");
    for (int j = 0; j < nvars; ++j) r.at(static_cast<int>(i), j) = s[i].derivative(j);
  }
  return r;
}

int rank_exact(const std::vector<std::vector<Scalar>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  std::vector<std::vector<Scalar>> a = m;
  int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Scalar f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

int rank_float(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  PolyMatrix r(a.rows(), a.cols() + b.cols(), a.nvars());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  PolyMatrix r(a.rows() + b.rows(), a.cols(), a.nvars());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

}  // namespace dmk
