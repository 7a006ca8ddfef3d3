#pragma once

#include "staudt/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace staudt {

/// Sparse multivariate polynomial with integer coefficients.
/// Terms are kept sorted in descending lexicographic exponent order with no
/// zero coefficients, so representations are unique.
class Poly {
public:
  using Exps = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Int& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero exponent vector), 0 if absent.
  Int constant_term() const;

  const std::vector<std::pair<Exps, Int>>& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(const std::vector<Rat>& xs) const;

  /// GCD of all coefficients (non-negative); 0 for the zero polynomial.
  Int content() const;
  Poly divide_by_int(const Int& d) const;  // exact, throws if not
  /// Sign of the leading (lex-greatest) coefficient; 0 for zero.
  int lead_sign() const;

  std::string str(const std::vector<std::string>& names) const;

  /// Inserts a term, combining with an existing monomial; drops zeros.
  void add_term(const Exps& e, const Int& c);

private:
  int nvars_;
  std::vector<std::pair<Exps, Int>> terms_;
  void normalize();
};

/// Polynomial GCD over Z[x_1..x_n], primitive PRS. Result has non-negative
/// leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact division; throws StructureError if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Reduced fraction of integer polynomials: gcd(num, den) == 1 (including
/// integer content) and den has positive leading coefficient.
class RatFunc {
public:
  RatFunc() : num_(0), den_(Poly::constant(0, 1)) {}
  RatFunc(Poly num, Poly den);  // reduces
  static RatFunc from_poly(Poly p);
  static RatFunc constant(int nvars, const Rat& q);
  static RatFunc variable(int nvars, int index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;  // throws NonUnit on zero
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  Rat eval(const std::vector<Rat>& xs) const;  // throws on zero denominator
  std::string str(const std::vector<std::string>& names) const;

private:
  Poly num_, den_;
};

} // namespace staudt
