#include "modsym/matrix.hpp"

#include <sstream>

#include "modsym/errors.hpp"

namespace modsym {

Matrix::Matrix(int order, int rows, int cols)
    : order_(order), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, CycloNum(order)) {}

Matrix Matrix::identity(int order, int n) {
  Matrix m(order, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycloNum::integer(order, 1);
  return m;
}

Matrix Matrix::diagonal(int order, std::span<const RootOfUnity> diag) {
  const int n = static_cast<int>(diag.size());
  Matrix m(order, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[i].to_cyclo(order);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(order_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const CycloNum& c) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = v * c;
  return out;
}

Matrix Matrix::times_root(std::int64_t e) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = v.times_root(e);
  return out;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const CycloNum& v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.order_ != b.order_) throw DomainError("matrix product: field order mismatch");
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  Matrix out(a.order_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const CycloNum& y = b(k, j);
        if (y.is_zero()) continue;
        out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.order_ != b.order_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DomainError("matrix sum: shape or order mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.order_ != b.order_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DomainError("matrix difference: shape or order mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.order_ == b.order_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::serialize(std::string& out) const {
  for (const auto& v : data_) v.serialize(out);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix galois_apply(std::int64_t a, const Matrix& m) {
  Matrix out(m.order(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = galois_apply(a, m(i, j));
  return out;
}

Matrix promote(const Matrix& m, int order) {
  Matrix out(order, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = promote(m(i, j), order);
  return out;
}

Matrix demote(const Matrix& m, int d) {
  Matrix out(d, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = demote(m(i, j), d);
  return out;
}

Matrix diag_times(std::span<const RootOfUnity> t, const Matrix& m) {
  if (static_cast<int>(t.size()) != m.rows()) throw DomainError("diagonal product: shape mismatch");
  Matrix out = m;
  for (int i = 0; i < m.rows(); ++i) {
    const std::int64_t e = t[i].with_order(m.order()).exponent();
    if (e == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).times_root(e);
  }
  return out;
}

Matrix times_diag(const Matrix& m, std::span<const RootOfUnity> t) {
  if (static_cast<int>(t.size()) != m.cols()) throw DomainError("diagonal product: shape mismatch");
  Matrix out = m;
  for (int j = 0; j < m.cols(); ++j) {
    const std::int64_t e = t[j].with_order(m.order()).exponent();
    if (e == 0) continue;
    for (int i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).times_root(e);
  }
  return out;
}

std::vector<RootOfUnity> diag_pow(std::span<const RootOfUnity> t, std::int64_t k) {
  std::vector<RootOfUnity> out;
  out.reserve(t.size());
  for (const auto& r : t) out.push_back(r.pow(k));
  return out;
}

Matrix permutation_matrix(int order, std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  Matrix m(order, n, n);
  for (int i = 0; i < n; ++i) m(i, perm[i]) = CycloNum::integer(order, 1);
  return m;
}

}  // namespace modsym
