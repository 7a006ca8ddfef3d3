#include "staudt/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace staudt {

std::string RingDescriptor::str() const {
  switch (kind) {
    case RingKind::Rationals: return "Q";
    case RingKind::FunctionField: {
      std::string s = "Q(";
      for (size_t i = 0; i < variables.size(); ++i) {
        if (i) s += ",";
        s += variables[i];
      }
      return s + ")";
    }
    case RingKind::Truncated:
      return "Q[" + variables[0] + "]/(" + variables[0] + "^" +
             std::to_string(truncation_order + 1) + ")";
  }
  return "?";
}

RingPtr ring_q() {
  static RingPtr r = std::make_shared<RingDescriptor>();
  return r;
}

RingPtr ring_function_field(std::vector<std::string> vars) {
  std::set<std::string> uniq(vars.begin(), vars.end());
  if (uniq.size() != vars.size()) throw StructureError("duplicate ring variable names");
  if (vars.empty()) throw StructureError("function field needs at least one variable");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::FunctionField;
  d->variables = std::move(vars);
  return d;
}

RingPtr ring_truncated(int m, std::string var) {
  if (m < 1) throw StructureError("truncation order must be >= 1");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::Truncated;
  d->variables = {std::move(var)};
  d->truncation_order = m;
  return d;
}

namespace {

std::vector<Rat> trim_trunc(std::vector<Rat> c, int m) {
  c.resize(m + 1, Rat(0));
  for (auto& q : c) q.canonicalize();
  return c;
}

} // namespace

RingElement::RingElement(RingPtr ring, Rat q) : ring_(std::move(ring)), datum_(std::move(q)) {
  if (ring_->kind != RingKind::Rationals)
    throw DescriptorMismatch("rational datum in non-rational ring");
  std::get<Rat>(datum_).canonicalize();
}

RingElement::RingElement(RingPtr ring, RatFunc f) : ring_(std::move(ring)), datum_(std::move(f)) {
  if (ring_->kind != RingKind::FunctionField)
    throw DescriptorMismatch("function datum in non-function ring");
  if (std::get<RatFunc>(datum_).nvars() != (int)ring_->variables.size())
    throw DescriptorMismatch("function arity does not match ring variables");
}

RingElement::RingElement(RingPtr ring, std::vector<Rat> c) : ring_(std::move(ring)) {
  if (ring_->kind != RingKind::Truncated)
    throw DescriptorMismatch("coefficient datum in non-truncated ring");
  datum_ = trim_trunc(std::move(c), ring_->truncation_order);
}

RingElement RingElement::zero(const RingPtr& r) { return from_rational(r, Rat(0)); }
RingElement RingElement::one(const RingPtr& r) { return from_rational(r, Rat(1)); }

RingElement RingElement::from_rational(const RingPtr& r, const Rat& q) {
  switch (r->kind) {
    case RingKind::Rationals: return RingElement(r, q);
    case RingKind::FunctionField:
      return RingElement(r, RatFunc::constant((int)r->variables.size(), q));
    case RingKind::Truncated: {
      std::vector<Rat> c(r->truncation_order + 1, Rat(0));
      c[0] = q;
      return RingElement(r, std::move(c));
    }
  }
  throw StructureError("bad ring kind");
}

RingElement RingElement::variable(const RingPtr& r, const std::string& name) {
  if (r->kind == RingKind::FunctionField) {
    auto it = std::find(r->variables.begin(), r->variables.end(), name);
    if (it == r->variables.end()) throw StructureError("no such ring variable: " + name);
    return RingElement(r, RatFunc::variable((int)r->variables.size(),
                                            (int)(it - r->variables.begin())));
  }
  if (r->kind == RingKind::Truncated) {
    if (name != r->variables[0]) throw StructureError("no such ring variable: " + name);
    std::vector<Rat> c(r->truncation_order + 1, Rat(0));
    c[1] = Rat(1);
    return RingElement(r, std::move(c));
  }
  throw StructureError("the rationals have no variables");
}

void RingElement::check_same(const RingElement& o) const {
  if (!same_ring(ring_, o.ring_))
    throw DescriptorMismatch("ring descriptor mismatch: " + ring_->str() + " vs " + o.ring_->str());
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  switch (ring_->kind) {
    case RingKind::Rationals: return RingElement(ring_, rational() + o.rational());
    case RingKind::FunctionField: return RingElement(ring_, func() + o.func());
    case RingKind::Truncated: {
      auto a = trunc_coeffs(), b = o.trunc_coeffs();
      for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      return RingElement(ring_, std::move(a));
    }
  }
  throw StructureError("bad ring kind");
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
  switch (ring_->kind) {
    case RingKind::Rationals: return RingElement(ring_, -rational());
    case RingKind::FunctionField: return RingElement(ring_, -func());
    case RingKind::Truncated: {
      auto a = trunc_coeffs();
      for (auto& x : a) x = -x;
      return RingElement(ring_, std::move(a));
    }
  }
  throw StructureError("bad ring kind");
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  switch (ring_->kind) {
    case RingKind::Rationals: return RingElement(ring_, rational() * o.rational());
    case RingKind::FunctionField: return RingElement(ring_, func() * o.func());
    case RingKind::Truncated: {
      int m = ring_->truncation_order;
      const auto& a = trunc_coeffs();
      const auto& b = o.trunc_coeffs();
      std::vector<Rat> c(m + 1, Rat(0));
      for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) c[i + j] += a[i] * b[j];
      return RingElement(ring_, std::move(c));
    }
  }
  throw StructureError("bad ring kind");
}

bool RingElement::operator==(const RingElement& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return datum_ == o.datum_;
}

bool RingElement::is_zero() const {
  switch (ring_->kind) {
    case RingKind::Rationals: return rational() == 0;
    case RingKind::FunctionField: return func().is_zero();
    case RingKind::Truncated: {
      for (auto& c : trunc_coeffs())
        if (c != 0) return false;
      return true;
    }
  }
  return false;
}

bool RingElement::is_one() const { return *this == one(ring_); }

bool RingElement::is_unit() const {
  switch (ring_->kind) {
    case RingKind::Rationals: return rational() != 0;
    case RingKind::FunctionField: return !func().is_zero();
    case RingKind::Truncated: return trunc_coeffs()[0] != 0;
  }
  return false;
}

RingElement RingElement::unit_inverse() const {
  if (!is_unit()) throw NonUnit("unit_inverse of a non-unit: " + str());
  switch (ring_->kind) {
    case RingKind::Rationals: return RingElement(ring_, Rat(1) / rational());
    case RingKind::FunctionField: return RingElement(ring_, func().inverse());
    case RingKind::Truncated: {
      // power-series inversion mod t^(m+1)
      int m = ring_->truncation_order;
      const auto& a = trunc_coeffs();
      std::vector<Rat> b(m + 1, Rat(0));
      b[0] = Rat(1) / a[0];
      for (int k = 1; k <= m; ++k) {
        Rat s(0);
        for (int i = 1; i <= k; ++i) s += a[i] * b[k - i];
        b[k] = -s / a[0];
      }
      return RingElement(ring_, std::move(b));
    }
  }
  throw StructureError("bad ring kind");
}

const Rat& RingElement::rational() const { return std::get<Rat>(datum_); }
const RatFunc& RingElement::func() const { return std::get<RatFunc>(datum_); }
const std::vector<Rat>& RingElement::trunc_coeffs() const {
  return std::get<std::vector<Rat>>(datum_);
}

RingElement RingElement::specialize(const std::map<std::string, Rat>& values) const {
  if (ring_->kind == RingKind::Rationals) return *this;
  if (ring_->kind != RingKind::FunctionField)
    throw StructureError("specialize is only defined on function fields");
  std::vector<Rat> xs;
  for (auto& v : ring_->variables) {
    auto it = values.find(v);
    if (it == values.end()) throw StructureError("specialize: missing value for " + v);
    xs.push_back(it->second);
  }
  return RingElement(ring_q(), func().eval(xs));
}

std::string RingElement::str() const {
  switch (ring_->kind) {
    case RingKind::Rationals: return to_string(rational());
    case RingKind::FunctionField: return func().str(ring_->variables);
    case RingKind::Truncated: {
      const auto& c = trunc_coeffs();
      const std::string& t = ring_->variables[0];
      std::ostringstream os;
      bool first = true;
      for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rat a = c[k];
        if (first) {
          if (a < 0) { os << "-"; a = -a; }
        } else {
          os << (a < 0 ? "-" : "+");
          if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
          os << to_string(a);
        } else {
          if (a != 1) os << to_string(a) << "*";
          os << t;
          if (k > 1) os << "^" << k;
        }
      }
      if (first) return "0";
      return os.str();
    }
  }
  return "?";
}

RingElement arith(const std::string& op, const RingElement& a, const RingElement& b) {
  if (op == "add") return a + b;
  if (op == "sub") return a - b;
  if (op == "mul") return a * b;
  if (op == "neg") return -a;
  throw StructureError("unknown arithmetic op: " + op);
}

namespace {

// tiny tokenizer for truncated-ring literals like "1+2t-3/2*t^2"
struct TruncParser {
  const std::string& s;
  size_t i = 0;
  explicit TruncParser(const std::string& str) : s(str) {}
  void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool eof() { skip(); return i >= s.size(); }
  char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
};

} // namespace

RingElement parse_element(const RingPtr& r, const std::string& text) {
  std::string t = text;
  // trim
  while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
  while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
  if (t.empty()) throw ParseError("empty ring element");
  switch (r->kind) {
    case RingKind::Rationals: return RingElement(r, parse_rat(t));
    case RingKind::FunctionField: {
      auto it = std::find(r->variables.begin(), r->variables.end(), t);
      if (it != r->variables.end()) return RingElement::variable(r, t);
      return RingElement::from_rational(r, parse_rat(t));
    }
    case RingKind::Truncated: {
      const std::string& tv = r->variables[0];
      std::vector<Rat> coeffs(r->truncation_order + 1, Rat(0));
      TruncParser p(t);
      while (!p.eof()) {
        int sign = 1;
        if (p.peek() == '+') { ++p.i; }
        else if (p.peek() == '-') { sign = -1; ++p.i; }
        p.skip();
        Rat c(1);
        bool have_coeff = false;
        size_t start = p.i;
        while (p.i < p.s.size() &&
               (std::isdigit((unsigned char)p.s[p.i]) || p.s[p.i] == '/'))
          ++p.i;
        if (p.i > start) {
          c = parse_rat(p.s.substr(start, p.i - start));
          have_coeff = true;
        }
        if (p.peek() == '*') ++p.i;
        int power = 0;
        if (!p.eof() && p.s.compare(p.i, tv.size(), tv) == 0) {
          p.i += tv.size();
          power = 1;
          if (p.peek() == '^') {
            ++p.i;
            p.skip();
            size_t ps = p.i;
            while (p.i < p.s.size() && std::isdigit((unsigned char)p.s[p.i])) ++p.i;
            if (p.i == ps) throw ParseError("missing exponent in: " + t);
            power = std::stoi(p.s.substr(ps, p.i - ps));
          }
        } else if (!have_coeff) {
          throw ParseError("bad truncated-ring literal: " + t);
        }
        if (power <= r->truncation_order) coeffs[power] += sign * c;
      }
      return RingElement(r, std::move(coeffs));
    }
  }
  throw StructureError("bad ring kind");
}

} // namespace staudt
