#pragma once

#include "staudt/poly.hpp"

#include <map>
#include <memory>
#include <variant>
#include <vector>

namespace staudt {

enum class RingKind { Rationals, FunctionField, Truncated };

/// One of: Q, Q(a,b,...), Q[t]/(t^(m+1)).
struct RingDescriptor {
  RingKind kind = RingKind::Rationals;
  std::vector<std::string> variables;  // FunctionField generators; Truncated: {t}
  int truncation_order = 0;            // m >= 1, Truncated only

  bool operator==(const RingDescriptor& o) const {
    return kind == o.kind && variables == o.variables &&
           truncation_order == o.truncation_order;
  }
  std::string str() const;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr ring_q();
RingPtr ring_function_field(std::vector<std::string> vars);
RingPtr ring_truncated(int m, std::string var = "t");

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return *a == *b; }

/// Immutable exact element of one of the three ring kinds. Values are kept
/// canonical: reduced fractions, reduced rational functions, truncated
/// coefficient lists of length exactly m+1.
class RingElement {
public:
  RingElement() : ring_(ring_q()), datum_(Rat(0)) {}
  RingElement(RingPtr ring, Rat q);
  RingElement(RingPtr ring, RatFunc f);
  RingElement(RingPtr ring, std::vector<Rat> trunc_coeffs);

  static RingElement zero(const RingPtr& r);
  static RingElement one(const RingPtr& r);
  static RingElement from_rational(const RingPtr& r, const Rat& q);
  static RingElement from_int(const RingPtr& r, long v) {
    return from_rational(r, Rat(v));
  }
  /// FunctionField generator by name, or the Truncated variable t.
  static RingElement variable(const RingPtr& r, const std::string& name);

  const RingPtr& ring() const { return ring_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  RingElement unit_inverse() const;  // throws NonUnit

  /// Rationals only.
  const Rat& rational() const;
  const RatFunc& func() const;
  const std::vector<Rat>& trunc_coeffs() const;

  /// Substitutes rationals for every function-field variable (identity on Q).
  RingElement specialize(const std::map<std::string, Rat>& values) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::variant<Rat, RatFunc, std::vector<Rat>> datum_;
  void check_same(const RingElement& o) const;
};

RingElement arith(const std::string& op, const RingElement& a, const RingElement& b);

/// Parses an element: rationals "p/q"; function field: a variable name or a
/// rational; truncated: sums of c*t^k terms like "1+2t-t^2".
RingElement parse_element(const RingPtr& r, const std::string& text);

} // namespace staudt
