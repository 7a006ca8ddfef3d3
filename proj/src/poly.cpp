#include "staudt/poly.hpp"

#include <algorithm>
#include <sstream>

namespace staudt {

namespace {

// Descending lex order on exponent vectors.
bool exp_less(const Poly::Exps& a, const Poly::Exps& b) { return a > b; }

Poly::Exps exp_add(const Poly::Exps& a, const Poly::Exps& b) {
  Poly::Exps r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

} // namespace

Poly Poly::constant(int nvars, const Int& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Exps(nvars, 0), c});
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Exps e(nvars, 0);
  e.at(index) = 1;
  p.terms_.push_back({e, Int(1)});
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].first == Exps(nvars_, 0);
}

Int Poly::constant_term() const {
  for (auto& [e, c] : terms_)
    if (e == Exps(nvars_, 0)) return c;
  return Int(0);
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Poly::add_term(const Exps& e, const Int& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const std::pair<Exps, Int>& t, const Exps& k) { return exp_less(t.first, k); });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {e, c});
  }
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](auto& a, auto& b) { return exp_less(a.first, b.first); });
  std::vector<std::pair<Exps, Int>> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DescriptorMismatch("polynomial arity mismatch");
  Poly r(nvars_);
  r.terms_ = terms_;
  for (auto& [e, c] : o.terms_) r.terms_.push_back({e, c});
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(nvars_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DescriptorMismatch("polynomial arity mismatch");
  Poly r(nvars_);
  std::map<Exps, Int, std::greater<Exps>> acc;
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) acc[exp_add(ea, eb)] += ca * cb;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, c});
  return r;
}

Rat Poly::eval(const std::vector<Rat>& xs) const {
  if ((int)xs.size() != nvars_) throw DescriptorMismatch("evaluation arity mismatch");
  Rat acc(0);
  for (auto& [e, c] : terms_) {
    Rat t(c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= xs[i];
    acc += t;
  }
  return acc;
}

Int Poly::content() const {
  Int g(0);
  for (auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::divide_by_int(const Int& d) const {
  if (d == 0) throw StructureError("division by zero content");
  Poly r(nvars_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.second.get_mpz_t(), d.get_mpz_t()))
      throw StructureError("inexact integer division in polynomial");
    t.second /= d;
  }
  return r;
}

int Poly::lead_sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.front().second);
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool have_var = false;
    for (int v : e) have_var |= v > 0;
    if (a != 1 || !have_var) os << a.get_str();
    bool printed = a != 1 || !have_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

// Views a polynomial as univariate in `var` with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& p, int var) {
  int d = p.degree_in(var);
  std::vector<Poly> cs(d + 1, Poly(p.nvars()));
  for (auto& [e, c] : p.terms()) {
    Poly::Exps e2 = e;
    int k = e2[var];
    e2[var] = 0;
    cs[k].add_term(e2, c);
  }
  return cs;
}

int top_var(const Poly& a, const Poly& b) {
  int n = a.nvars();
  for (int v = n - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

// Content of p as a univariate polynomial in `var` (gcd of its Poly coefficients).
Poly content_in(const Poly& p, int var) {
  Poly g(p.nvars());
  for (auto& c : coeffs_in(p, var)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable `var`. Each round multiplies a by
// the leading coefficient of b and kills the top power, so the degree in
// `var` strictly drops.
Poly prem(Poly a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lb = coeffs_in(b, var)[db];
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Poly la = coeffs_in(a, var)[da];
    Poly shift(a.nvars());
    Poly::Exps e(a.nvars(), 0);
    e[var] = da - db;
    shift.add_term(e, Int(1));
    a = a * lb - b * (la * shift);
  }
  return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw DescriptorMismatch("gcd arity mismatch");
  if (a.is_zero()) {
    Poly r = b;
    if (r.lead_sign() < 0) r = -r;
    return r;
  }
  if (b.is_zero()) {
    Poly r = a;
    if (r.lead_sign() < 0) r = -r;
    return r;
  }
  int var = top_var(a, b);
  if (var < 0) {
    Int g;
    Int ca = a.constant_term(), cb = b.constant_term();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly::constant(a.nvars(), g);
  }
  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly cg = poly_gcd(ca, cb);
  Poly pa = poly_divexact(a, ca), pb = poly_divexact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  // primitive PRS
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, var);
    pa = pb;
    if (r.is_zero()) { pb = r; break; }
    Poly c = content_in(r, var);
    pb = poly_divexact(r, c);
  }
  Poly g = cg * pa;
  if (g.lead_sign() < 0) g = -g;
  return g;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw StructureError("polynomial division by zero");
  Poly rem = a;
  Poly q(a.nvars());
  if (rem.is_zero()) return q;
  // long division in descending lex order; works because lex leading term of
  // a product is the product of lex leading terms
  while (!rem.is_zero()) {
    auto& lt = rem.terms().front();
    auto& lb = b.terms().front();
    Poly::Exps e(rem.nvars());
    for (int i = 0; i < rem.nvars(); ++i) {
      e[i] = lt.first[i] - lb.first[i];
      if (e[i] < 0) throw StructureError("inexact polynomial division");
    }
    if (!mpz_divisible_p(lt.second.get_mpz_t(), lb.second.get_mpz_t()))
      throw StructureError("inexact polynomial division");
    Int c = lt.second / lb.second;
    Poly m(rem.nvars());
    m.add_term(e, c);
    q = q + m;
    rem = rem - m * b;
  }
  return q;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw StructureError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), 1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  num_ = poly_divexact(num_, g);
  den_ = poly_divexact(den_, g);
  if (den_.lead_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::from_poly(Poly p) {
  int n = p.nvars();
  return RatFunc(std::move(p), Poly::constant(n, 1));
}

RatFunc RatFunc::constant(int nvars, const Rat& q) {
  return RatFunc(Poly::constant(nvars, q.get_num()), Poly::constant(nvars, q.get_den()));
}

RatFunc RatFunc::variable(int nvars, int index) {
  return RatFunc::from_poly(Poly::variable(nvars, index));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw NonUnit("inverse of zero rational function");
  return RatFunc(den_, num_);
}

Rat RatFunc::eval(const std::vector<Rat>& xs) const {
  Rat d = den_.eval(xs);
  if (d == 0) throw StructureError("denominator vanishes at evaluation point");
  return num_.eval(xs) / d;
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.str(names);
  std::string n = num_.str(names), d = den_.str(names);
  auto wrap = [](const std::string& s) {
    return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(d);
}

} // namespace staudt
