#include "staudt/geometrize.hpp"

#include <algorithm>
#include <set>

namespace staudt {

namespace {

// Instantiates gadget copies per SLP node into one arrangement over shared
// input points x1..xn. Copy K's non-triangle elements become "gK.<name>";
// copy inputs are spliced onto the feeding element.
struct SystemBuilder {
  FunctionalArrangement fa;
  int next_copy = 1;

  explicit SystemBuilder(int nvars) {
    fa.marked.based = standard_triangle();
    for (auto& p : triangle_point_names()) fa.schedule.push_back(PropagationRule::base(p));
    for (auto& l : triangle_line_names()) fa.schedule.push_back(PropagationRule::base(l));
    for (int i = 0; i < nvars; ++i) add_input();
  }

  Arrangement& arr() { return fa.marked.based.arr; }

  void add_input() {
    std::string n = "x" + std::to_string(fa.marked.inputs.size() + 1);
    arr().add_point(n);
    arr().add_incidence(n, "lx");
    fa.marked.inputs.push_back(n);
    fa.schedule.push_back(PropagationRule::input(n, (int)fa.marked.inputs.size() - 1));
  }

  /// Splices one gadget copy whose inputs are fed by existing elements;
  /// returns the name of the copy's output point.
  std::string instantiate(const FunctionalArrangement& g, const std::vector<std::string>& feeds) {
    if (feeds.size() != g.marked.inputs.size())
      throw StructureError("gadget arity mismatch during compilation");
    std::string prefix = "g" + std::to_string(next_copy++) + ".";
    std::set<std::string> t_names(triangle_point_names().begin(), triangle_point_names().end());
    for (auto& l : triangle_line_names()) t_names.insert(l);

    std::map<std::string, std::string> rename;
    for (size_t i = 0; i < feeds.size(); ++i) rename[g.marked.inputs[i]] = feeds[i];
    auto name_of = [&](const std::string& n) {
      auto it = rename.find(n);
      if (it != rename.end()) return it->second;
      if (t_names.count(n)) return n;
      return prefix + n;
    };
    for (auto& p : g.arr().points())
      if (!arr().has_element(name_of(p))) arr().add_point(name_of(p));
    for (auto& l : g.arr().lines())
      if (!arr().has_element(name_of(l))) arr().add_line(name_of(l));
    for (auto& [p, l] : g.arr().incidences()) arr().add_incidence(name_of(p), name_of(l));
    for (auto& rule : g.schedule) {
      if (rule.kind == PropagationRule::Kind::Base || rule.kind == PropagationRule::Kind::Input)
        continue;
      PropagationRule nr = rule;
      nr.target = name_of(rule.target);
      nr.arg1 = name_of(rule.arg1);
      nr.arg2 = name_of(rule.arg2);
      fa.schedule.push_back(nr);
    }
    return name_of(g.marked.outputs.at(0));
  }

  std::string compile_nodes(const Slp& slp) {
    static const FunctionalArrangement cm = gadget_mul();
    static const FunctionalArrangement ca = gadget_add();
    static const FunctionalArrangement cd = gadget_sub();
    static const FunctionalArrangement cp = gadget_const(1);
    static const FunctionalArrangement cn = gadget_const(-1);
    if (fa.marked.inputs.empty()) add_input();  // constant gadgets need a feed
    std::vector<std::string> val(slp.nodes.size());
    for (size_t i = 0; i < slp.nodes.size(); ++i) {
      const SlpNode& n = slp.nodes[i];
      switch (n.op) {
        case SlpNode::Op::Var: val[i] = fa.marked.inputs.at(n.var); break;
        case SlpNode::Op::One: val[i] = instantiate(cp, {fa.marked.inputs[0]}); break;
        case SlpNode::Op::NegOne: val[i] = instantiate(cn, {fa.marked.inputs[0]}); break;
        case SlpNode::Op::Add: val[i] = instantiate(ca, {val[n.a], val[n.b]}); break;
        case SlpNode::Op::Sub: val[i] = instantiate(cd, {val[n.a], val[n.b]}); break;
        case SlpNode::Op::Mul: val[i] = instantiate(cm, {val[n.a], val[n.b]}); break;
      }
    }
    return val[slp.root];
  }
};

// A bare input as an equation root would be identified with v00 later; route
// it through x*1 so the output stays a gadget point.
Slp wrap_bare_root(const Slp& slp) {
  const SlpNode& r = slp.nodes[slp.root];
  if (r.op != SlpNode::Op::Var) return slp;
  Slp w = slp;
  w.nodes.push_back({SlpNode::Op::One, -1, -1, -1});
  w.nodes.push_back({SlpNode::Op::Mul, slp.root, (int)w.nodes.size() - 1, -1});
  w.root = (int)w.nodes.size() - 1;
  return w;
}

} // namespace

FunctionalArrangement compile_poly(const Slp& slp) {
  slp.validate();
  SystemBuilder b(slp.nvars);
  std::string out = b.compile_nodes(slp);
  b.fa.marked.outputs = {out};
  b.fa.validate();
  return b.fa;
}

FunctionalArrangement CompiledSystem::as_functional() const {
  FunctionalArrangement fa;
  fa.marked.based = arr;
  fa.marked.inputs = inputs;
  fa.schedule = schedule;
  return fa;
}

CompiledSystem compile_system(const PolySystem& sys) {
  SystemBuilder b(sys.nvars);
  std::vector<std::string> outs;
  for (auto& slp : sys.slps) {
    slp.validate();
    outs.push_back(b.compile_nodes(wrap_bare_root(slp)));
  }
  // identify each output with v00, dropping its rule and marking
  for (auto& w : outs) {
    b.arr().merge_elements(w, "v00");
    std::vector<PropagationRule> sched;
    for (auto& r : b.fa.schedule)
      if (r.target != w) sched.push_back(r);
    b.fa.schedule = std::move(sched);
  }
  CompiledSystem cs;
  cs.arr = b.fa.marked.based;
  cs.inputs = b.fa.marked.inputs;
  cs.schedule = b.fa.schedule;
  cs.system = sys;
  cs.merged_outputs = outs;
  cs.as_functional().validate();
  return cs;
}

CandidateRealization realize_candidate(const CompiledSystem& cs,
                                       const std::vector<RingElement>& x) {
  if (x.size() != cs.inputs.size())
    throw StructureError("expected " + std::to_string(cs.inputs.size()) + " input values");
  RingPtr ring = x.empty() ? ring_q() : x[0].ring();
  CandidateRealization out{run_schedule(cs.schedule, x, ring), {}};
  out.violations = violated_incidences(cs.arr.arr, out.realization);
  return out;
}

Realization geo(const CompiledSystem& cs, const std::vector<RingElement>& x) {
  RingPtr ring = x.empty() ? ring_q() : x[0].ring();
  for (size_t k = 0; k < cs.system.slps.size(); ++k) {
    std::vector<RingElement> xs = x;
    xs.resize(std::max<size_t>(cs.system.nvars, x.size()), RingElement::zero(ring));
    RingElement v = eval_slp(cs.system.slps[k], xs);
    if (!v.is_zero())
      throw NotASolution("equation " + std::to_string(k + 1) + " evaluates to " + v.str());
  }
  CandidateRealization cr = realize_candidate(cs, x);
  if (!cr.violations.empty())
    throw IncidenceViolation("incidence (" + cr.violations[0].first + "," +
                             cr.violations[0].second + ") violated by a checked solution");
  return cr.realization;
}

std::vector<RingElement> tau(const CompiledSystem& cs, const Realization& r) {
  if (!is_based_realization(cs.arr, r))
    throw StructureError("tau: realization is not based");
  std::vector<RingElement> xs;
  for (auto& v : cs.inputs) {
    const ProjPoint& p = r.point(v);
    if (!p.c[2].is_unit())
      throw InfiniteMarkedPoint("input " + v + " lies on L_inf");
    xs.push_back(p.c[0] * p.c[2].unit_inverse());
  }
  return xs;
}

bool check_zero_fiber(const BasedArrangement& a, const Realization& r) {
  std::set<std::string> t_image;
  for (auto& [k, v] : a.base) t_image.insert(v);
  const RingPtr& ring = r.ring;
  std::vector<ProjLine> special_lines = {
      ProjLine{canonical_triple(standard_triple(ring, "lx"))},
      ProjLine{canonical_triple(standard_triple(ring, "ly"))},
      ProjLine{canonical_triple(standard_triple(ring, "ld"))}};
  std::vector<ProjPoint> special_points = {
      ProjPoint{canonical_triple(standard_triple(ring, "v00"))},
      point_of_tag(ring, AffineTag::ZeroInf),
      point_of_tag(ring, AffineTag::InfZero),
      point_of_tag(ring, AffineTag::InfInf)};
  for (auto& l : a.arr.lines()) {
    if (t_image.count(l)) continue;
    const ProjLine& L = r.line(l);
    if (std::none_of(special_lines.begin(), special_lines.end(),
                     [&](const ProjLine& s) { return s == L; }))
      return false;
  }
  for (auto& p : a.arr.points()) {
    if (t_image.count(p)) continue;
    const ProjPoint& P = r.point(p);
    if (std::none_of(special_points.begin(), special_points.end(),
                     [&](const ProjPoint& s) { return s == P; }))
      return false;
  }
  return true;
}

} // namespace staudt
