#pragma once

// Dense square-or-rectangular matrices over one cyclotomic field, plus the
// diagonal root-of-unity matrices that appear as T-matrices.

#include <span>
#include <string>
#include <vector>

#include "modsym/cyclo.hpp"

namespace modsym {

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix over Q(zeta_order).
  Matrix(int order, int rows, int cols);

  static Matrix identity(int order, int n);
  static Matrix diagonal(int order, std::span<const RootOfUnity> diag);

  int order() const { return order_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycloNum& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const CycloNum& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix scaled(const CycloNum& c) const;
  /// Multiplies every entry by zeta_order^e.
  Matrix times_root(std::int64_t e) const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  void serialize(std::string& out) const;
  std::string to_string() const;

 private:
  int order_ = 1;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycloNum> data_;
};

/// Entrywise sigma_a.
Matrix galois_apply(std::int64_t a, const Matrix& m);
Matrix promote(const Matrix& m, int order);
/// Entrywise demote; throws DomainError when some entry is outside Q(zeta_d).
Matrix demote(const Matrix& m, int d);

/// diag(t) * m: row i scaled by t_i.
Matrix diag_times(std::span<const RootOfUnity> t, const Matrix& m);
/// m * diag(t): column j scaled by t_j.
Matrix times_diag(const Matrix& m, std::span<const RootOfUnity> t);

/// Entrywise power of a diagonal.
std::vector<RootOfUnity> diag_pow(std::span<const RootOfUnity> t, std::int64_t k);

/// 0/1 permutation matrix with ones at (i, perm[i]).
Matrix permutation_matrix(int order, std::span<const int> perm);

}  // namespace modsym
