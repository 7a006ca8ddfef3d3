#include "staudt/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace staudt {

void FunctionalArrangement::validate() const {
  marked.validate();
  const Arrangement& a = arr();
  std::set<std::string> defined;
  for (auto& r : schedule) {
    if (!a.has_element(r.target))
      throw StructureError("schedule targets unknown element " + r.target);
    if (defined.count(r.target))
      throw StructureError("element " + r.target + " has two rules");
    switch (r.kind) {
      case PropagationRule::Kind::Input:
        if (r.input_index < 0 || r.input_index >= (int)marked.inputs.size() ||
            marked.inputs[r.input_index] != r.target)
          throw StructureError("input rule inconsistent with marking at " + r.target);
        break;
      case PropagationRule::Kind::Base:
        if (marked.based.of(r.arg1) != r.target)
          throw StructureError("base rule on non-base element " + r.target);
        break;
      case PropagationRule::Kind::Join:
        if (!a.has_line(r.target)) throw StructureError("join target must be a line: " + r.target);
        if (!defined.count(r.arg1) || !defined.count(r.arg2))
          throw StructureError("join arguments do not precede " + r.target);
        if (!a.has_point(r.arg1) || !a.has_point(r.arg2))
          throw StructureError("join arguments must be points at " + r.target);
        break;
      case PropagationRule::Kind::Meet:
        if (!a.has_point(r.target)) throw StructureError("meet target must be a point: " + r.target);
        if (!defined.count(r.arg1) || !defined.count(r.arg2))
          throw StructureError("meet arguments do not precede " + r.target);
        if (!a.has_line(r.arg1) || !a.has_line(r.arg2))
          throw StructureError("meet arguments must be lines at " + r.target);
        break;
    }
    defined.insert(r.target);
  }
  for (auto& p : a.points())
    if (!defined.count(p)) throw StructureError("UncoveredElement: " + p);
  for (auto& l : a.lines())
    if (!defined.count(l)) throw StructureError("UncoveredElement: " + l);
}

const ProjPoint& Realization::point(const std::string& n) const {
  auto it = points.find(n);
  if (it == points.end()) throw StructureError("realization misses point " + n);
  return it->second;
}
const ProjLine& Realization::line(const std::string& n) const {
  auto it = lines.find(n);
  if (it == lines.end()) throw StructureError("realization misses line " + n);
  return it->second;
}

Triple standard_triple(const RingPtr& r, const std::string& t) {
  auto e = [&](long x, long y, long z) -> Triple {
    return {RingElement::from_int(r, x), RingElement::from_int(r, y),
            RingElement::from_int(r, z)};
  };
  if (t == "v00") return e(0, 0, 1);
  if (t == "vx") return e(1, 0, 0);
  if (t == "vy") return e(0, 1, 0);
  if (t == "v10") return e(1, 0, 1);
  if (t == "v01") return e(0, 1, 1);
  if (t == "v11") return e(1, 1, 1);
  if (t == "lx") return e(0, 1, 0);
  if (t == "ly") return e(1, 0, 0);
  if (t == "linf") return e(0, 0, 1);
  if (t == "ld") return e(1, -1, 0);
  if (t == "ly1") return e(1, 0, -1);
  if (t == "lx1") return e(0, 1, -1);
  throw StructureError("not a triangle element: " + t);
}

Realization standard_realization(const RingPtr& r) {
  Realization psi;
  psi.ring = r;
  for (auto& p : triangle_point_names())
    psi.points.emplace(p, ProjPoint{canonical_triple(standard_triple(r, p))});
  for (auto& l : triangle_line_names())
    psi.lines.emplace(l, ProjLine{canonical_triple(standard_triple(r, l))});
  return psi;
}

std::vector<std::pair<std::string, std::string>> violated_incidences(const Arrangement& a,
                                                                     const Realization& psi) {
  std::vector<std::pair<std::string, std::string>> bad;
  for (auto& [p, l] : a.incidences())
    if (!incident(psi.point(p), psi.line(l))) bad.push_back({p, l});
  return bad;
}

bool is_based_realization(const BasedArrangement& a, const Realization& psi) {
  for (auto& p : triangle_point_names()) {
    ProjPoint want{canonical_triple(standard_triple(psi.ring, p))};
    if (!(psi.point(a.of(p)) == want)) return false;
  }
  for (auto& l : triangle_line_names()) {
    ProjLine want{canonical_triple(standard_triple(psi.ring, l))};
    if (!(psi.line(a.of(l)) == want)) return false;
  }
  return true;
}

namespace {

struct GadgetBuilder {
  FunctionalArrangement fa;

  GadgetBuilder() {
    fa.marked.based = standard_triangle();
    for (auto& p : triangle_point_names()) fa.schedule.push_back(PropagationRule::base(p));
    for (auto& l : triangle_line_names()) fa.schedule.push_back(PropagationRule::base(l));
  }
  Arrangement& arr() { return fa.marked.based.arr; }
  void input(const std::string& n) {
    arr().add_point(n);
    arr().add_incidence(n, "lx");
    fa.marked.inputs.push_back(n);
    fa.schedule.push_back(PropagationRule::input(n, (int)fa.marked.inputs.size() - 1));
  }
  void join(const std::string& l, const std::string& p1, const std::string& p2) {
    arr().add_line(l);
    arr().add_incidence(p1, l);
    arr().add_incidence(p2, l);
    fa.schedule.push_back(PropagationRule::join_rule(l, p1, p2));
  }
  void meet(const std::string& p, const std::string& l1, const std::string& l2) {
    arr().add_point(p);
    arr().add_incidence(p, l1);
    arr().add_incidence(p, l2);
    fa.schedule.push_back(PropagationRule::meet_rule(p, l1, l2));
  }
  FunctionalArrangement done(std::vector<std::string> outputs) {
    fa.marked.outputs = std::move(outputs);
    fa.validate();
    return fa;
  }
};

} // namespace

FunctionalArrangement gadget_mul() {
  GadgetBuilder b;
  b.input("v1");
  b.input("v2");
  b.join("l1", "v1", "vy");
  b.meet("v", "l1", "ld");
  b.join("l2", "v11", "v2");
  b.meet("u", "l2", "linf");
  b.join("m1", "u", "v");
  b.meet("w1", "m1", "lx");
  b.arr().add_incidence("w1", "lx");
  return b.done({"w1"});
}

FunctionalArrangement gadget_add() {
  GadgetBuilder b;
  b.input("v1");
  b.input("v2");
  b.join("l3", "v1", "vy");
  b.meet("p", "l3", "lx1");
  b.join("l1", "v2", "v01");
  b.meet("u", "l1", "linf");
  b.join("l2", "p", "u");
  b.meet("w1", "l2", "lx");
  b.arr().add_incidence("w1", "lx");
  return b.done({"w1"});
}

FunctionalArrangement gadget_sub() {
  // the C_A arrangement with the roles of v2 and w1 reversed:
  // inputs (minuend w1, subtrahend v1), output v2 = w1 - v1
  GadgetBuilder b;
  b.input("w1");
  b.input("v1");
  b.join("l3", "v1", "vy");
  b.meet("p", "l3", "lx1");
  b.join("l2", "w1", "p");
  b.meet("u", "l2", "linf");
  b.join("l1", "u", "v01");
  b.meet("v2", "l1", "lx");
  b.arr().add_incidence("v2", "lx");
  return b.done({"v2"});
}

FunctionalArrangement gadget_const(int sign) {
  if (sign != 1 && sign != -1) throw StructureError("gadget_const needs sign +1 or -1");
  GadgetBuilder b;
  b.input("v1");
  b.join("l1", "v1", "vy");  // any vertical line; keeps the input admissible
  if (sign < 0) {
    b.meet("ud", "ld", "linf");
    b.join("m1", "v01", "ud");
    b.meet("w1", "m1", "lx");
    b.arr().add_incidence("w1", "lx");
    return b.done({"w1"});
  }
  b.meet("w1", "ly1", "lx");
  b.arr().add_incidence("w1", "lx");
  return b.done({"w1"});
}

FunctionalArrangement triangle_functional() {
  GadgetBuilder b;
  return b.done({});
}

namespace {

std::string fresh_prefix(const Arrangement& a) {
  for (int k = 1;; ++k) {
    std::string pre = "g" + std::to_string(k) + ".";
    bool clash = false;
    for (auto& p : a.points())
      if (p.rfind(pre, 0) == 0) clash = true;
    for (auto& l : a.lines())
      if (l.rfind(pre, 0) == 0) clash = true;
    if (!clash) return pre;
  }
}

} // namespace

FunctionalArrangement compose(const FunctionalArrangement& f, const FunctionalArrangement& g,
                              int input_index) {
  if (g.marked.outputs.size() != 1)
    throw StructureError("compose: g must have exactly one output");
  if (input_index < 1 || input_index > (int)f.marked.inputs.size())
    throw StructureError("compose: input index out of range");

  const std::string replaced = f.marked.inputs[input_index - 1];
  std::string prefix = fresh_prefix(f.arr());

  std::set<std::string> t_names(triangle_point_names().begin(), triangle_point_names().end());
  for (auto& l : triangle_line_names()) t_names.insert(l);

  auto g_name = [&](const std::string& n) {
    // assumes g's base is the identity embedding, as for all shipped gadgets
    return t_names.count(n) ? n : prefix + n;
  };
  const std::string out_name = g_name(g.marked.outputs[0]);

  FunctionalArrangement r;
  r.marked.based.base = f.marked.based.base;
  Arrangement& arr = r.marked.based.arr;

  auto f_name = [&](const std::string& n) { return n == replaced ? out_name : n; };

  // elements: g's first (prefixed), then f's with `replaced` dropped
  for (auto& p : g.arr().points()) arr.add_point(g_name(p));
  for (auto& l : g.arr().lines()) arr.add_line(g_name(l));
  for (auto& p : f.arr().points()) {
    if (p == replaced) continue;
    if (!arr.has_element(f_name(p))) arr.add_point(f_name(p));
  }
  for (auto& l : f.arr().lines())
    if (!arr.has_element(f_name(l))) arr.add_line(f_name(l));
  for (auto& [p, l] : g.arr().incidences()) arr.add_incidence(g_name(p), g_name(l));
  for (auto& [p, l] : f.arr().incidences()) arr.add_incidence(f_name(p), f_name(l));

  // inputs: g's inputs first, then f's remaining inputs
  for (auto& v : g.marked.inputs) r.marked.inputs.push_back(g_name(v));
  for (auto& v : f.marked.inputs)
    if (v != replaced) r.marked.inputs.push_back(v);
  for (auto& w : f.marked.outputs) r.marked.outputs.push_back(f_name(w));

  // schedule: bases once, then inputs in the new order, then g's rules, then f's
  for (auto& p : triangle_point_names()) r.schedule.push_back(PropagationRule::base(p));
  for (auto& l : triangle_line_names()) r.schedule.push_back(PropagationRule::base(l));
  for (size_t i = 0; i < r.marked.inputs.size(); ++i)
    r.schedule.push_back(PropagationRule::input(r.marked.inputs[i], (int)i));
  for (auto& rule : g.schedule) {
    if (rule.kind == PropagationRule::Kind::Base || rule.kind == PropagationRule::Kind::Input)
      continue;
    PropagationRule nr = rule;
    nr.target = g_name(rule.target);
    nr.arg1 = g_name(rule.arg1);
    nr.arg2 = g_name(rule.arg2);
    r.schedule.push_back(nr);
  }
  for (auto& rule : f.schedule) {
    if (rule.kind == PropagationRule::Kind::Base || rule.kind == PropagationRule::Kind::Input)
      continue;
    PropagationRule nr = rule;
    nr.target = f_name(rule.target);
    nr.arg1 = f_name(rule.arg1);
    nr.arg2 = f_name(rule.arg2);
    r.schedule.push_back(nr);
  }
  r.validate();
  return r;
}

FunctionalArrangement identify_inputs(const FunctionalArrangement& f, int i, int j) {
  if (i == j) return f;
  if (i < 1 || j < 1 || i > (int)f.marked.inputs.size() || j > (int)f.marked.inputs.size())
    throw StructureError("identify_inputs: index out of range");
  const std::string keep = f.marked.inputs[i - 1];
  const std::string drop = f.marked.inputs[j - 1];

  FunctionalArrangement r = f;
  r.marked.based.arr.merge_elements(drop, keep);
  r.marked.inputs.erase(std::find(r.marked.inputs.begin(), r.marked.inputs.end(), drop));
  for (auto& w : r.marked.outputs)
    if (w == drop) w = keep;

  std::vector<PropagationRule> sched;
  for (auto& rule : r.schedule) {
    if (rule.target == drop) continue;  // its input rule
    PropagationRule nr = rule;
    if (nr.arg1 == drop) nr.arg1 = keep;
    if (nr.arg2 == drop) nr.arg2 = keep;
    if (nr.kind == PropagationRule::Kind::Input) {
      auto it = std::find(r.marked.inputs.begin(), r.marked.inputs.end(), nr.target);
      nr.input_index = (int)(it - r.marked.inputs.begin());
    }
    sched.push_back(nr);
  }
  r.schedule = std::move(sched);
  r.validate();
  return r;
}

Realization run_schedule(const std::vector<PropagationRule>& schedule,
                         const std::vector<RingElement>& inputs, const RingPtr& ring) {
  Realization psi;
  psi.ring = ring;
  RingElement zero = RingElement::zero(ring), one = RingElement::one(ring);
  for (auto& r : schedule) {
    switch (r.kind) {
      case PropagationRule::Kind::Base: {
        Triple t = canonical_triple(standard_triple(ring, r.arg1));
        auto& pts = triangle_point_names();
        bool is_pt = std::find(pts.begin(), pts.end(), r.arg1) != pts.end();
        if (is_pt) psi.points.emplace(r.target, ProjPoint{t});
        else psi.lines.emplace(r.target, ProjLine{t});
        break;
      }
      case PropagationRule::Kind::Input: {
        const RingElement& z = inputs.at(r.input_index);
        psi.points.emplace(r.target, make_point(z, zero, one));
        break;
      }
      case PropagationRule::Kind::Join: {
        try {
          psi.lines.emplace(r.target, join(psi.point(r.arg1), psi.point(r.arg2)));
        } catch (const DependentElements& e) {
          throw DependentElements(std::string(e.what()) + " (rule for " + r.target + ")");
        }
        break;
      }
      case PropagationRule::Kind::Meet: {
        try {
          psi.points.emplace(r.target, meet(psi.line(r.arg1), psi.line(r.arg2)));
        } catch (const DependentElements& e) {
          throw DependentElements(std::string(e.what()) + " (rule for " + r.target + ")");
        }
        break;
      }
    }
  }
  return psi;
}

Realization propagate(const FunctionalArrangement& fa, const std::vector<RingElement>& inputs,
                      const RingPtr& ring) {
  if (inputs.size() != fa.marked.inputs.size())
    throw StructureError("propagate: expected " + std::to_string(fa.marked.inputs.size()) +
                         " inputs, got " + std::to_string(inputs.size()));
  for (auto& x : inputs)
    if (!same_ring(x.ring(), ring)) throw DescriptorMismatch("propagate: mixed input rings");
  Realization psi = run_schedule(fa.schedule, inputs, ring);
  auto bad = violated_incidences(fa.arr(), psi);
  if (!bad.empty())
    throw IncidenceViolation("incidence (" + bad[0].first + "," + bad[0].second +
                             ") violated after propagation");
  return psi;
}

Realization propagate(const FunctionalArrangement& fa, const std::vector<RingElement>& inputs) {
  RingPtr ring = inputs.empty() ? ring_q() : inputs[0].ring();
  return propagate(fa, inputs, ring);
}

namespace {

RingElement affine_x(const ProjPoint& p, const std::string& name) {
  if (!p.c[2].is_unit())
    throw InfiniteMarkedPoint("marked point " + name + " lies on L_inf: " + p.str());
  return p.c[0] * p.c[2].unit_inverse();
}

} // namespace

std::vector<RingElement> project_inputs(const FunctionalArrangement& fa, const Realization& r) {
  std::vector<RingElement> xs;
  for (auto& v : fa.marked.inputs) xs.push_back(affine_x(r.point(v), v));
  return xs;
}

std::vector<RingElement> read_outputs(const FunctionalArrangement& fa, const Realization& r) {
  std::vector<RingElement> ys;
  for (auto& w : fa.marked.outputs) ys.push_back(affine_x(r.point(w), w));
  return ys;
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  os << (ok ? "PASS" : "FAIL");
  for (auto& f : failures) os << "\n  " << f;
  if (ok && !symbolic_outputs.empty()) {
    os << "; outputs:";
    for (auto& y : symbolic_outputs) os << " " << y.str();
  }
  return os.str();
}

VerifyReport verify_functional(const FunctionalArrangement& fa) {
  VerifyReport rep;
  try {
    fa.validate();
  } catch (const Error& e) {
    rep.failures.push_back(e.what());
    return rep;
  }
  size_t n = fa.marked.inputs.size();
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  RingPtr field = n ? ring_function_field(names) : ring_q();
  std::vector<RingElement> xs;
  for (auto& nm : names) xs.push_back(RingElement::variable(field, nm));

  Realization psi;
  try {
    psi = run_schedule(fa.schedule, xs, field);
  } catch (const DependentElements& e) {
    rep.failures.push_back(std::string("generic propagation failed: ") + e.what());
    return rep;
  }
  for (auto& [p, l] : violated_incidences(fa.arr(), psi))
    rep.failures.push_back("incidence (" + p + "," + l + ") fails at the generic point");
  // outputs must stay finite whenever the inputs are finite
  for (auto& w : fa.marked.outputs) {
    const ProjPoint& pw = psi.point(w);
    if (!pw.c[2].is_unit())
      rep.failures.push_back("output " + w + " is not finite at the generic point");
  }
  // the input projection must recover the generic input values
  try {
    auto back = project_inputs(fa, psi);
    for (size_t i = 0; i < n; ++i)
      if (!(back[i] == xs[i]))
        rep.failures.push_back("Pi does not invert propagation at input " + fa.marked.inputs[i]);
  } catch (const InfiniteMarkedPoint& e) {
    rep.failures.push_back(e.what());
  }
  if (rep.failures.empty()) {
    rep.ok = true;
    try {
      rep.symbolic_outputs = read_outputs(fa, psi);
    } catch (const InfiniteMarkedPoint&) {
    }
  }
  return rep;
}

} // namespace staudt
