#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staudt/jsonio.hpp"

using namespace staudt;

TEST_CASE("functional arrangement JSON round-trips losslessly") {
  for (auto fa : {gadget_mul(), gadget_add(), gadget_sub(), gadget_const(1),
                  gadget_const(-1), compile_poly(parse_system("x1*x2 - 1 = 0").slps[0])}) {
    json j = to_json(fa);
    FunctionalArrangement back = functional_from_json(j);
    CHECK(back.arr() == fa.arr());
    CHECK(back.marked.based.base == fa.marked.based.base);
    CHECK(back.marked.inputs == fa.marked.inputs);
    CHECK(back.marked.outputs == fa.marked.outputs);
    CHECK(to_json(back) == j);
    CHECK(j.at("schema") == "staudt/arrangement/1");
  }
}

TEST_CASE("homogeneous triples serialize as exact-rational strings") {
  Realization phi = standard_realization(ring_q());
  json j = to_json(phi);
  CHECK(j["points"]["v11"] == json::array({"1", "1", "1"}));
  CHECK(j["lines"]["ld"] == json::array({"1", "-1", "0"}));
  Realization back = realization_from_json(j);
  CHECK(back.points == phi.points);
  CHECK(back.lines == phi.lines);
}

TEST_CASE("realizations over Q and truncated rings round-trip") {
  FunctionalArrangement cm = gadget_mul();
  {
    Realization psi = propagate(cm, {parse_element(ring_q(), "-1"),
                                     parse_element(ring_q(), "2/3")});
    Realization back = realization_from_json(to_json(psi));
    CHECK(back.points == psi.points);
    CHECK(back.lines == psi.lines);
  }
  {
    auto r = ring_truncated(2);
    Realization psi = propagate(cm, {parse_element(r, "t"), parse_element(r, "1+t")});
    Realization back = realization_from_json(to_json(psi));
    CHECK(back.points == psi.points);
    CHECK(back.lines == psi.lines);
  }
}

TEST_CASE("graph and presentation JSON round-trips") {
  LabelledGraph g = build_lambda(standard_triangle());
  LabelledGraph back = graph_from_json(to_json(g));
  CHECK(back.vertices() == g.vertices());
  CHECK(back.edges() == g.edges());

  for (auto p : {artin_presentation(g), shephard_presentation(g),
                 coxeter_presentation(g)}) {
    Presentation pb = presentation_from_json(to_json(p));
    CHECK(pb.kind == p.kind);
    CHECK(pb.generators == p.generators);
    CHECK(pb.torsion == p.torsion);
    REQUIRE(pb.relations.size() == p.relations.size());
    for (size_t i = 0; i < p.relations.size(); ++i) {
      CHECK(pb.relations[i].lhs.syls == p.relations[i].lhs.syls);
      CHECK(pb.relations[i].rhs.syls == p.relations[i].rhs.syls);
    }
  }
}

TEST_CASE("representation JSON round-trips and re-verifies") {
  BasedArrangement t = standard_triangle();
  Realization phi = standard_realization(ring_q());
  LabelledGraph lam = build_lambda(t);
  Representation rep = alg(phi, t, lam);
  json j = to_json(rep);
  Representation back = representation_from_json(j);
  CHECK(back.images.size() == rep.images.size());
  for (auto& [g, m] : rep.images) CHECK(back.image(g) == m);
  CHECK(all_relations_hold(back));
  // matrices as 3x3 arrays of exact-rational strings
  CHECK(j["images"]["v00"].is_array());
  CHECK(j["images"]["v00"].size() == 3);
}

TEST_CASE("verification reports serialize") {
  BasedArrangement t = standard_triangle();
  Representation rep = alg(standard_realization(ring_q()), t, build_lambda(t));
  json j = to_json(verify_relations(rep));
  REQUIRE(j.is_array());
  for (auto& e : j) CHECK(e.at("status") == "ok");
}

TEST_CASE("ring descriptors round-trip") {
  for (auto r : {ring_q(), ring_function_field({"a", "b"}), ring_truncated(4)}) {
    RingPtr back = ring_from_json(to_json(r));
    CHECK(*back == *r);
  }
}
