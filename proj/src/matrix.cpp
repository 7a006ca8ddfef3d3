#include "staudt/matrix.hpp"

#include <sstream>

namespace staudt {

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s(0);
      for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
  return r;
}

Mat3 Mat3::operator*(const Rat& s) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
  return r;
}

Rat Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::inverse() const {
  Rat d = det();
  if (d == 0) throw StructureError("inverse of a singular matrix");
  Mat3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      adj.m[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return adj * (Rat(1) / d);
}

Mat3 Mat3::transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

std::array<Rat, 3> Mat3::apply(const std::array<Rat, 3>& v) const {
  std::array<Rat, 3> r{Rat(0), Rat(0), Rat(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
  return r;
}

bool Mat3::is_scalar() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && m[i][j] != 0) return false;
  return m[0][0] == m[1][1] && m[1][1] == m[2][2];
}

std::string Mat3::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < 3; ++j) {
      if (j) os << " ";
      os << to_string(m[i][j]);
    }
  }
  os << "]";
  return os.str();
}

ProjMat::ProjMat(const Mat3& a) {
  if (a.det() == 0) throw StructureError("projective matrix must be invertible");
  // primitive integer representative
  Int lcm(1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int d = a.m[i][j].get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
  std::array<Int, 9> v;
  Int g(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat q = a.m[i][j] * Rat(lcm);
      v[i * 3 + j] = q.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i * 3 + j].get_mpz_t());
    }
  for (auto& x : v) x /= g;
  for (auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  prim_ = v;
  // canonical rational form: first nonzero entry 1
  Rat lead(0);
  for (auto& x : v)
    if (x != 0) { lead = Rat(x); break; }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) canon_.m[i][j] = Rat(v[i * 3 + j]) / lead;
}

bool ProjMat::is_identity() const { return canon_ == Mat3::identity(); }

size_t ProjMatHash::operator()(const ProjMat& p) const {
  size_t h = 1469598103934665603ull;
  for (auto& x : p.primitive()) {
    long v = mpz_fits_slong_p(x.get_mpz_t()) ? x.get_si() : (long)mpz_get_ui(x.get_mpz_t());
    h = (h ^ (size_t)v) * 1099511628211ull;
  }
  return h;
}

void QMatrix::append_row(const std::vector<Rat>& row) {
  if ((int)row.size() != cols_) throw StructureError("row width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

// row echelon over Q; returns pivot columns
std::vector<int> eliminate(std::vector<Rat>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[p * cols + j]);
    Rat inv = Rat(1) / a[r * cols + c];
    for (int j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = a[i * cols + c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

int QMatrix::rank() const {
  std::vector<Rat> a = a_;
  return (int)eliminate(a, rows_, cols_).size();
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
  std::vector<Rat> a = a_;
  std::vector<int> pivots = eliminate(a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r * cols_ + fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool QMatrix::solve(const std::vector<Rat>& b, std::vector<Rat>* x) const {
  if ((int)b.size() != rows_) throw StructureError("rhs size mismatch");
  int cols = cols_ + 1;
  std::vector<Rat> a(rows_ * cols);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) a[i * cols + j] = a_[i * cols_ + j];
    a[i * cols + cols_] = b[i];
  }
  std::vector<int> pivots = eliminate(a, rows_, cols);
  for (int c : pivots)
    if (c == cols_) return false;  // pivot in the augmented column
  if (x) {
    x->assign(cols_, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) (*x)[pivots[r]] = a[r * cols + cols_];
  }
  return true;
}

} // namespace staudt
