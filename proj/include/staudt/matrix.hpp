#pragma once

#include "staudt/numeric.hpp"

#include <array>
#include <vector>

namespace staudt {

struct Mat3 {
  std::array<std::array<Rat, 3>, 3> m{};

  static Mat3 identity();
  static Mat3 zero() { return Mat3{}; }

  Mat3 operator*(const Mat3& o) const;
  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  Mat3 operator*(const Rat& s) const;
  bool operator==(const Mat3& o) const { return m == o.m; }

  Rat det() const;
  Mat3 inverse() const;  // throws on det 0
  Mat3 transpose() const;
  std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const;
  bool is_scalar() const;
  std::string str() const;
};

/// 3x3 matrix up to scalar. Canonical form scales the first nonzero entry in
/// row-major order to 1; a primitive integer representative (first nonzero
/// entry positive) is kept alongside for hashing and closure enumeration.
class ProjMat {
public:
  ProjMat() : ProjMat(Mat3::identity()) {}
  explicit ProjMat(const Mat3& a);  // throws on zero or singular matrices

  const Mat3& canonical() const { return canon_; }
  const std::array<Int, 9>& primitive() const { return prim_; }

  ProjMat operator*(const ProjMat& o) const { return ProjMat(canon_ * o.canon_); }
  ProjMat inverse() const { return ProjMat(canon_.inverse()); }
  bool operator==(const ProjMat& o) const { return prim_ == o.prim_; }
  bool operator!=(const ProjMat& o) const { return !(*this == o); }
  bool is_identity() const;  // projectively scalar

  std::string str() const { return canon_.str(); }

private:
  Mat3 canon_;
  std::array<Int, 9> prim_;
};

struct ProjMatHash {
  size_t operator()(const ProjMat& p) const;
};

/// Dense exact matrix used for rank/kernel computations.
class QMatrix {
public:
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }
  void append_row(const std::vector<Rat>& row);

  int rank() const;
  /// Basis of the null space Ax = 0.
  std::vector<std::vector<Rat>> kernel_basis() const;
  /// Least-structure solve of Ax = b; false when inconsistent.
  bool solve(const std::vector<Rat>& b, std::vector<Rat>* x) const;

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

} // namespace staudt
