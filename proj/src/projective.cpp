#include "staudt/projective.hpp"

namespace staudt {

Triple canonical_triple(Triple t) {
  for (int i = 0; i < 3; ++i) {
    if (t[i].is_unit()) {
      RingElement inv = t[i].unit_inverse();
      for (int j = 0; j < 3; ++j) t[j] = t[j] * inv;
      return t;
    }
  }
  throw DependentElements("no unit coordinate in homogeneous triple [" + t[0].str() +
                          ":" + t[1].str() + ":" + t[2].str() + "]");
}

ProjPoint make_point(RingElement x, RingElement y, RingElement z) {
  return ProjPoint{canonical_triple({std::move(x), std::move(y), std::move(z)})};
}
ProjLine make_line(RingElement a, RingElement b, RingElement g) {
  return ProjLine{canonical_triple({std::move(a), std::move(b), std::move(g)})};
}

ProjPoint make_point_q(long x, long y, long z) {
  auto r = ring_q();
  return make_point(RingElement::from_int(r, x), RingElement::from_int(r, y),
                    RingElement::from_int(r, z));
}
ProjLine make_line_q(long a, long b, long g) {
  auto r = ring_q();
  return make_line(RingElement::from_int(r, a), RingElement::from_int(r, b),
                   RingElement::from_int(r, g));
}

ProjLine dual(const ProjPoint& p) { return ProjLine{p.c}; }
ProjPoint dual(const ProjLine& l) { return ProjPoint{l.c}; }

namespace {

Triple cross(const Triple& u, const Triple& v) {
  return {u[1] * v[2] - u[2] * v[1],
          u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

RingElement dot(const Triple& u, const Triple& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

bool has_unit(const Triple& t) {
  return t[0].is_unit() || t[1].is_unit() || t[2].is_unit();
}

} // namespace

ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
  Triple x = cross(p1.c, p2.c);
  if (!has_unit(x))
    throw DependentElements("cross-product test failed joining " + p1.str() + " and " + p2.str());
  return ProjLine{canonical_triple(std::move(x))};
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  Triple x = cross(l1.c, l2.c);
  if (!has_unit(x))
    throw DependentElements("cross-product test failed meeting " + l1.str() + " and " + l2.str());
  return ProjPoint{canonical_triple(std::move(x))};
}

bool incident(const ProjPoint& p, const ProjLine& l) { return dot(p.c, l.c).is_zero(); }

namespace {
bool triple_anisotropic(const Triple& t) {
  auto k = t[0].ring()->kind;
  if (k == RingKind::Truncated)
    throw StructureError("anisotropy test unsupported over truncated rings");
  return !dot(t, t).is_zero();
}
} // namespace

bool is_anisotropic(const ProjPoint& p) { return triple_anisotropic(p.c); }
bool is_anisotropic(const ProjLine& l) { return triple_anisotropic(l.c); }

AffinePoint affine_of(const ProjPoint& p) {
  const RingPtr& r = p.ring();
  const RingElement &x = p.c[0], &y = p.c[1], &z = p.c[2];
  if (z.is_unit()) {
    RingElement zi = z.unit_inverse();
    return AffinePoint{AffineTag::Finite, x * zi, y * zi};
  }
  RingElement zero = RingElement::zero(r), one = RingElement::one(r);
  if (x == zero && y == one && z == zero) return AffinePoint{AffineTag::ZeroInf, zero, zero};
  if (x == one && y == zero && z == zero) return AffinePoint{AffineTag::InfZero, zero, zero};
  if (x == one && y == one && z == zero) return AffinePoint{AffineTag::InfInf, zero, zero};
  return AffinePoint{AffineTag::GenericInfinite, zero, zero};
}

ProjPoint point_of_affine(const RingElement& x, const RingElement& y) {
  return make_point(x, y, RingElement::one(x.ring()));
}

ProjPoint point_of_tag(const RingPtr& r, AffineTag tag) {
  auto e = [&](long x, long y, long z) {
    return make_point(RingElement::from_int(r, x), RingElement::from_int(r, y),
                      RingElement::from_int(r, z));
  };
  switch (tag) {
    case AffineTag::ZeroInf: return e(0, 1, 0);
    case AffineTag::InfZero: return e(1, 0, 0);
    case AffineTag::InfInf: return e(1, 1, 0);
    default: throw StructureError("no canonical point for this affine tag");
  }
}

std::string ProjPoint::str() const {
  return "[" + c[0].str() + ":" + c[1].str() + ":" + c[2].str() + "]";
}
std::string ProjLine::str() const {
  return "[" + c[0].str() + ":" + c[1].str() + ":" + c[2].str() + "]";
}

std::string AffinePoint::str() const {
  switch (tag) {
    case AffineTag::Finite: return "(" + x.str() + "," + y.str() + ")";
    case AffineTag::ZeroInf: return "(0,inf)";
    case AffineTag::InfZero: return "(inf,0)";
    case AffineTag::InfInf: return "(inf,inf)";
    case AffineTag::GenericInfinite: return "(infinite)";
  }
  return "?";
}

namespace {
Triple specialize_triple(const Triple& t, const std::map<std::string, Rat>& values) {
  return {t[0].specialize(values), t[1].specialize(values), t[2].specialize(values)};
}
} // namespace

ProjPoint specialize(const ProjPoint& p, const std::map<std::string, Rat>& values) {
  return ProjPoint{canonical_triple(specialize_triple(p.c, values))};
}
ProjLine specialize(const ProjLine& l, const std::map<std::string, Rat>& values) {
  return ProjLine{canonical_triple(specialize_triple(l.c, values))};
}

} // namespace staudt
