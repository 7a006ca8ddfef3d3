#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staudt/geometrize.hpp"
#include "staudt/represent.hpp"

#include <random>

using namespace staudt;

namespace {

Mat3 mat(std::initializer_list<long> xs) {
  Mat3 m;
  auto it = xs.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.m[i][j] = Rat(*it++);
  return m;
}

Representation alg_triangle(PresKind kind = PresKind::Shephard) {
  BasedArrangement t = standard_triangle();
  Realization phi = standard_realization(ring_q());
  return alg(phi, t, build_lambda(t), kind);
}

} // namespace

TEST_CASE("involution about a basis point is diag(1,1,-1)") {
  ProjMat m = involution_about_point(make_point_q(0, 0, 1));
  CHECK(m == ProjMat(mat({1, 0, 0, 0, 1, 0, 0, 0, -1})));
  CHECK_THROWS(involution_about_point(ProjPoint{canonical_triple(
      {RingElement::one(ring_truncated(1)), RingElement::zero(ring_truncated(1)),
       RingElement::zero(ring_truncated(1))})}));
}

TEST_CASE("involution about [1:1:1]: square is scalar and v maps to -v") {
  ProjPoint p = make_point_q(1, 1, 1);
  ProjMat m = involution_about_point(p);
  // oracle: direct matrix computation; eta(v)^2 = phi^2 I and eta(v)v = -phi v
  CHECK(ProjMat(m.canonical() * m.canonical()).is_identity());
  auto v = m.canonical().apply({Rat(1), Rat(1), Rat(1)});
  CHECK(v[0] == v[1]);
  CHECK(v[1] == v[2]);
  CHECK(v[0] != 0);
  CHECK(neutral_fixed_point(m) == p);
}

TEST_CASE("zeta/eta inverse pair on random rational points") {
  std::mt19937_64 g(5);
  std::uniform_int_distribution<int> d(-9, 9);
  int done = 0;
  while (done < 30) {
    long x = d(g), y = d(g), z = d(g);
    if (x == 0 && y == 0 && z == 0) continue;
    ProjPoint p = make_point_q(x, y, z);
    ProjMat m = involution_about_point(p);
    CHECK(ProjMat(m.canonical() * m.canonical()).is_identity());
    CHECK(neutral_fixed_point(m) == p);
    // the fixed line of the involution is the dual: every point on p-perp fixed
    ++done;
  }
}

TEST_CASE("eta is O(3)-equivariant on sampled rational orthogonal elements") {
  // rational orthogonal-up-to-scalar elements: products of eta's and the
  // coordinate rotation
  std::vector<ProjMat> pool{involution_about_point(make_point_q(1, 0, 1)),
                            involution_about_point(make_point_q(0, 1, 1)),
                            order3_rotation(),
                            involution_about_point(make_point_q(1, -1, 0))};
  std::mt19937_64 rg(17);
  std::uniform_int_distribution<int> pick(0, (int)pool.size() - 1);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int i = 0; i < 25; ++i) {
    ProjMat gmat = pool[pick(rg)] * pool[pick(rg)];
    long x = d(rg), y = d(rg), z = d(rg);
    if (x == 0 && y == 0 && z == 0) continue;
    ProjPoint v = make_point_q(x, y, z);
    auto gv = gmat.canonical().apply({v.c[0].rational(), v.c[1].rational(),
                                      v.c[2].rational()});
    auto r = ring_q();
    ProjPoint gvp = make_point(RingElement(r, gv[0]), RingElement(r, gv[1]),
                               RingElement(r, gv[2]));
    ProjMat lhs = involution_about_point(gvp);
    ProjMat rhs = ProjMat(gmat.canonical() * involution_about_point(v).canonical() *
                          gmat.canonical().inverse());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("order-3 rotation: cube is identity, v00 -> vx, fixes [1:1:1]") {
  ProjMat p = order3_rotation();
  CHECK(ProjMat(p.canonical() * p.canonical() * p.canonical()).is_identity());
  CHECK_FALSE(p.is_identity());
  CHECK_FALSE(ProjMat(p.canonical() * p.canonical()).is_identity());
  auto img = p.canonical().apply({Rat(0), Rat(0), Rat(1)});
  CHECK(img == std::array<Rat, 3>{Rat(1), Rat(0), Rat(0)});  // [0:0:1] -> [1:0:0]
  auto fix = p.canonical().apply({Rat(1), Rat(1), Rat(1)});
  CHECK(fix == std::array<Rat, 3>{Rat(1), Rat(1), Rat(1)});
  CHECK(projective_order(p) == 3);
}

TEST_CASE("alg(phi_T) satisfies every Shephard relation of G^s_T") {
  Representation rep = alg_triangle();
  CHECK(rep.images.size() == 9);
  for (auto& r : verify_relations(rep)) CHECK_MESSAGE(r.ok, r.tag);
  // pullback to the Artin presentation also passes
  Representation repa = alg_triangle(PresKind::Artin);
  CHECK(all_relations_hold(repa));
}

TEST_CASE("alg(phi_T): the projective orders of the distinguished products") {
  Representation rep = alg_triangle();
  CHECK(projective_order(rep.image("v00") * rep.image("v11"), 12) == 3);
  CHECK(projective_order(rep.image("v00") * rep.image("v10"), 12) == 4);
  CHECK(projective_order(ProjMat(), 12) == 1);
  CHECK(is_nondegenerate(rep, build_lambda(standard_triangle())));
}

TEST_CASE("alg(phi_T) closure: the octahedral group of order 24 on Sigma") {
  // The closure is the full octahedral rotation group S_4 (order 24): the
  // generators beyond the four distinguished points act as odd permutations
  // of the invariant set Sigma = {(1,1),(-1,1),(-1,-1),(1,-1)}, e.g. g_v10
  // swaps (1,1) and (1,-1). The order-4 element g_v00 g_v10 already rules
  // out an image of order 12 (A_4 has no order-4 elements).
  Representation rep = alg_triangle();
  auto n = group_closure(rep, 100);
  REQUIRE(n.has_value());
  CHECK(*n == 24);
  // the four distinguished generators alone do generate A_4
  Representation sub = rep;
  sub.pres.generators = {"v00", "vx", "vy", "v11"};
  CHECK(group_closure(sub, 100) == 12);
  // the invariant set: images permute Sigma
  std::vector<ProjPoint> sigma{make_point_q(1, 1, 1), make_point_q(-1, 1, 1),
                               make_point_q(-1, -1, 1), make_point_q(1, -1, 1)};
  for (auto& [g, m] : rep.images) {
    for (auto& s : sigma) {
      auto v = m.canonical().apply({s.c[0].rational(), s.c[1].rational(),
                                    s.c[2].rational()});
      auto r = ring_q();
      ProjPoint img = make_point(RingElement(r, v[0]), RingElement(r, v[1]),
                                 RingElement(r, v[2]));
      bool in_sigma = false;
      for (auto& t : sigma) in_sigma |= t == img;
      CHECK(in_sigma);
    }
  }
}

TEST_CASE("single involution closure and centralizer") {
  LabelledGraph g;
  g.add_vertex("a", 2);
  Representation rep;
  rep.pres = shephard_presentation(g);
  rep.images.emplace("a", involution_about_point(make_point_q(0, 0, 1)));
  CHECK(group_closure(rep, 10) == 2);
  CHECK(centralizer_dim(rep) == 1);
}

TEST_CASE("centralizer dims: alg(phi_T) trivial; trivial rep is all of so(3)") {
  CHECK(centralizer_dim(alg_triangle()) == 0);
  LabelledGraph g;
  g.add_vertex("a", 2);
  g.add_vertex("b", 2);
  g.add_edge("a", "b", 2);
  Representation triv;
  triv.pres = shephard_presentation(g);
  triv.images.emplace("a", ProjMat());
  triv.images.emplace("b", ProjMat());
  CHECK(centralizer_dim(triv) == 3);
}

TEST_CASE("commuting/anticommuting criteria both directions on rational data") {
  std::mt19937_64 rg(23);
  std::uniform_int_distribution<int> d(-5, 5);
  int done = 0;
  while (done < 40) {
    long a1 = d(rg), a2 = d(rg), a3 = d(rg), b1 = d(rg), b2 = d(rg), b3 = d(rg);
    if ((a1 == 0 && a2 == 0 && a3 == 0) || (b1 == 0 && b2 == 0 && b3 == 0)) continue;
    ProjPoint p = make_point_q(a1, a2, a3), q = make_point_q(b1, b2, b3);
    if (p == q) continue;
    ProjMat mp = involution_about_point(p), mq = involution_about_point(q);
    // (mp mq)^2 = 1 iff each neutral point lies on the other's fixed line
    bool commute = ProjMat(
        (mp.canonical() * mq.canonical()) * (mp.canonical() * mq.canonical()))
        .is_identity();
    bool dual_incidence = incident(p, dual(q)) && incident(q, dual(p));
    // for distinct involutions both p-on-q-perp and q-on-p-perp coincide
    CHECK(incident(p, dual(q)) == incident(q, dual(p)));
    CHECK(commute == dual_incidence);
    ++done;
  }
}

TEST_CASE("verify_relations flags a deliberately wrong image") {
  Representation rep = alg_triangle();
  rep.images.at("v10") = involution_about_point(make_point_q(2, 0, 1));
  bool some_failure = false;
  for (auto& r : verify_relations(rep)) some_failure |= !r.ok;
  CHECK(some_failure);
}

TEST_CASE("commuting involutions about (0,0) and (inf,0): (ab)^2 = 1") {
  ProjMat a = involution_about_point(make_point_q(0, 0, 1));
  ProjMat b = involution_about_point(make_point_q(1, 0, 0));
  CHECK(projective_order(a * b, 4) == 2);

  // involution about (0,1) and reflection in L_y anticommute ((0,1) lies on
  // L_y): (cd)^2 = 1 with c != d
  ProjMat c = involution_about_point(make_point_q(0, 1, 1));
  ProjMat d = reflection_in_line(make_line_q(1, 0, 0));
  CHECK(c != d);
  CHECK(projective_order(c * d, 4) == 2);

  // the involution about (1,0) does NOT anticommute with the reflection in
  // L_y: (1,0) is off L_y at spherical distance pi/4, so the product has
  // order 4 (matrix product oracle)
  ProjMat e = involution_about_point(make_point_q(1, 0, 1));
  CHECK(projective_order(e * d, 8) == 4);
}

TEST_CASE("alg of a propagated C_M realization is nondegenerate") {
  FunctionalArrangement cm = gadget_mul();
  Realization psi = propagate(cm, {RingElement::from_int(ring_q(), 2),
                                   RingElement::from_int(ring_q(), 3)});
  LabelledGraph lam = build_lambda(cm.marked.based);
  Representation rep = alg(psi, cm.marked.based, lam);
  CHECK(all_relations_hold(rep));
  CHECK(is_nondegenerate(rep, lam));
}

TEST_CASE("omega flip inverts only the order-3 generator and still satisfies") {
  Representation rep = alg_triangle();
  Representation flipped = omega_flip(rep);
  CHECK(flipped.image("v11") == rep.image("v11").inverse());
  CHECK(flipped.image("v00") == rep.image("v00"));
  CHECK(all_relations_hold(flipped));
}

TEST_CASE("alg(geo(0)) of a constant-free system has finite image") {
  CompiledSystem cs = compile_system(parse_system("((x1*x1)*(x1*x1))*x1 = 0"));
  Realization r0 = geo(cs, {RingElement::zero(ring_q())});
  LabelledGraph lam = build_lambda(cs.arr);
  Representation rep = alg(r0, cs.arr, lam);
  CHECK(all_relations_hold(rep));
  auto n = group_closure(rep, 5000);
  REQUIRE(n.has_value());
  CHECK(*n >= 24);
}

TEST_CASE("stability: phi_T stable; collapsed and collinear configurations not") {
  Realization phi = standard_realization(ring_q());
  CHECK(is_stable(phi));

  // all points at the origin
  Realization collapsed = phi;
  for (auto& [n, p] : collapsed.points) p = make_point_q(0, 0, 1);
  CHECK_FALSE(is_stable(collapsed));

  // W on the common line y = x
  Realization collinear = phi;
  collinear.points.at("v00") = make_point_q(0, 0, 1);
  collinear.points.at("vx") = make_point_q(1, 1, 1);
  collinear.points.at("vy") = make_point_q(2, 2, 1);
  collinear.points.at("v11") = make_point_q(3, 3, 1);
  CHECK_FALSE(is_stable(collinear));
}

TEST_CASE("projective equality absorbs scalars; primitive rep is canonical") {
  Mat3 a = mat({2, 0, 0, 0, 2, 0, 0, 0, -2});
  Mat3 b = mat({-1, 0, 0, 0, -1, 0, 0, 0, 1});
  CHECK(ProjMat(a) == ProjMat(b));
  CHECK(ProjMat(a).primitive() == std::array<Int, 9>{1, 0, 0, 0, 1, 0, 0, 0, -1});
}
