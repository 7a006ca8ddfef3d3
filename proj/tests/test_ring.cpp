#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staudt/ring.hpp"

#include <random>

using namespace staudt;

namespace {

RingElement q(const RingPtr& r, const std::string& s) { return parse_element(r, s); }

// uniform small rationals, shared by the property checks below
struct Rng {
  std::mt19937_64 g{20240817};
  Rat rat() {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    return Rat(num(g), den(g));
  }
  RingElement elem(const RingPtr& r) {
    switch (r->kind) {
      case RingKind::Rationals: return RingElement(r, rat());
      case RingKind::FunctionField: {
        // random small polynomial in the generators
        RingElement acc = RingElement::from_rational(r, rat());
        for (auto& v : r->variables) {
          RingElement x = RingElement::variable(r, v);
          acc = acc + RingElement::from_rational(r, rat()) * x +
                RingElement::from_rational(r, rat()) * x * x;
        }
        return acc;
      }
      case RingKind::Truncated: {
        std::vector<Rat> c(r->truncation_order + 1);
        for (auto& x : c) x = rat();
        return RingElement(r, std::move(c));
      }
    }
    throw StructureError("unreachable");
  }
};

} // namespace

TEST_CASE("rational arithmetic is exact") {
  auto r = ring_q();
  CHECK(arith("add", q(r, "2/3"), q(r, "1/6")) == q(r, "5/6"));
  CHECK(arith("sub", q(r, "1"), q(r, "1/3")) == q(r, "2/3"));
  CHECK(arith("mul", q(r, "-3/4"), q(r, "8/9")) == q(r, "-2/3"));
  CHECK(arith("neg", q(r, "7"), q(r, "0")) == q(r, "-7"));
}

TEST_CASE("descriptor mismatch is an error") {
  auto r = ring_q();
  auto t = ring_truncated(2);
  CHECK_THROWS_AS(RingElement::one(r) + RingElement::one(t), DescriptorMismatch);
}

TEST_CASE("truncated ring kills t^(m+1) exactly") {
  auto r = ring_truncated(2);
  RingElement t = RingElement::variable(r, "t");
  RingElement one = RingElement::one(r);
  CHECK((one + t) * (one + t) == parse_element(r, "1+2t+t^2"));
  CHECK(t * t * t == RingElement::zero(r));
  CHECK((t * t) * (t * t) == RingElement::zero(r));
}

TEST_CASE("units: rationals and nilpotents") {
  auto r = ring_q();
  CHECK_FALSE(RingElement::zero(r).is_unit());
  CHECK(q(r, "-5/7").is_unit());

  auto t3 = ring_truncated(3);
  RingElement t = RingElement::variable(t3, "t");
  CHECK_FALSE((t + t * t).is_unit());  // constant term 0
  CHECK_THROWS_AS((t + t * t).unit_inverse(), NonUnit);
}

TEST_CASE("truncated inversion at m=1: 1+t -> 1-t, verified by multiplying back") {
  auto r = ring_truncated(1);
  RingElement u = parse_element(r, "1+t");
  RingElement inv = u.unit_inverse();
  CHECK(inv == parse_element(r, "1-t"));
  CHECK(u * inv == RingElement::one(r));
}

TEST_CASE("function field commutativity") {
  auto r = ring_function_field({"a", "b"});
  RingElement a = RingElement::variable(r, "a");
  RingElement b = RingElement::variable(r, "b");
  CHECK(a * b - b * a == RingElement::zero(r));
  CHECK((a * b).str() == "a*b");
}

TEST_CASE("function field division reduces to lowest terms") {
  auto r = ring_function_field({"a", "b"});
  RingElement a = RingElement::variable(r, "a");
  RingElement b = RingElement::variable(r, "b");
  RingElement one = RingElement::one(r);
  // (a^2 - b^2)/(a - b) = a + b
  RingElement num = a * a - b * b;
  RingElement den = a - b;
  CHECK(num * den.unit_inverse() == a + b);
  // inverse roundtrip
  RingElement x = a * b - one;
  CHECK(x * x.unit_inverse() == one);
}

TEST_CASE("ring axioms hold on random elements") {
  Rng rng;
  for (RingPtr r : {ring_q(), ring_function_field({"a", "b"}), ring_truncated(3)}) {
    for (int i = 0; i < 25; ++i) {
      RingElement a = rng.elem(r), b = rng.elem(r), c = rng.elem(r);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (a.is_unit()) CHECK(a.unit_inverse() * a == RingElement::one(r));
    }
  }
}

TEST_CASE("specialization is a ring morphism") {
  auto f = ring_function_field({"a", "b"});
  Rng rng;
  std::map<std::string, Rat> at{{"a", Rat(3, 2)}, {"b", Rat(-5)}};
  for (int i = 0; i < 20; ++i) {
    RingElement x = rng.elem(f), y = rng.elem(f);
    CHECK((x + y).specialize(at) == x.specialize(at) + y.specialize(at));
    CHECK((x * y).specialize(at) == x.specialize(at) * y.specialize(at));
  }
}

TEST_CASE("element parsing round-trips") {
  auto t2 = ring_truncated(2);
  for (auto s : {"0", "1", "-1", "1+2*t", "1/2-3*t+t^2", "-t^2"}) {
    RingElement e = parse_element(t2, s);
    CHECK(parse_element(t2, e.str()) == e);
  }
  auto r = ring_q();
  for (auto s : {"0", "-17", "22/7"}) {
    RingElement e = parse_element(r, s);
    CHECK(parse_element(r, e.str()) == e);
  }
}
