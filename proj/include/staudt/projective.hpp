#pragma once

#include "staudt/ring.hpp"

#include <array>

namespace staudt {

using Triple = std::array<RingElement, 3>;

/// Projective point [x:y:z] with a free rank-1 representative: at least one
/// coordinate is a unit, and the first unit coordinate in scan order is 1.
struct ProjPoint {
  Triple c;
  const RingPtr& ring() const { return c[0].ring(); }
  bool operator==(const ProjPoint& o) const { return c == o.c; }
  std::string str() const;
};

struct ProjLine {
  Triple c;
  const RingPtr& ring() const { return c[0].ring(); }
  bool operator==(const ProjLine& o) const { return c == o.c; }
  std::string str() const;
};

/// Scales so the first unit coordinate equals 1; throws DependentElements if
/// no coordinate is a unit (not a free rank-1 representative).
Triple canonical_triple(Triple t);

ProjPoint make_point(RingElement x, RingElement y, RingElement z);
ProjLine make_line(RingElement a, RingElement b, RingElement g);
ProjPoint make_point_q(long x, long y, long z);  // over Q
ProjLine make_line_q(long a, long b, long g);

ProjLine dual(const ProjPoint& p);
ProjPoint dual(const ProjLine& l);

/// Line through two points, via the cross product; requires the cross-product
/// independence test (some coordinate of u1 x u2 a unit).
ProjLine join(const ProjPoint& p1, const ProjPoint& p2);
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

bool incident(const ProjPoint& p, const ProjLine& l);

/// x^2+y^2+z^2 != 0. Rationals / function fields only.
bool is_anisotropic(const ProjPoint& p);
bool is_anisotropic(const ProjLine& l);

enum class AffineTag { Finite, ZeroInf, InfZero, InfInf, GenericInfinite };

struct AffinePoint {
  AffineTag tag = AffineTag::Finite;
  RingElement x, y;  // Finite only
  std::string str() const;
};

AffinePoint affine_of(const ProjPoint& p);
ProjPoint point_of_affine(const RingElement& x, const RingElement& y);
ProjPoint point_of_tag(const RingPtr& r, AffineTag tag);

/// Substitution morphism applied coordinatewise (function field -> Q).
ProjPoint specialize(const ProjPoint& p, const std::map<std::string, Rat>& values);
ProjLine specialize(const ProjLine& l, const std::map<std::string, Rat>& values);

} // namespace staudt
