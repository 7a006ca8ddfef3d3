#include "staudt/jsonio.hpp"

namespace staudt {

namespace {

json triple_json(const Triple& t) {
  return json::array({t[0].str(), t[1].str(), t[2].str()});
}

Triple triple_from_json(const RingPtr& r, const json& j) {
  return {parse_element(r, j.at(0).get<std::string>()),
          parse_element(r, j.at(1).get<std::string>()),
          parse_element(r, j.at(2).get<std::string>())};
}

} // namespace

json to_json(const RingPtr& r) {
  json j;
  switch (r->kind) {
    case RingKind::Rationals: j["kind"] = "q"; break;
    case RingKind::FunctionField:
      j["kind"] = "func";
      j["vars"] = r->variables;
      break;
    case RingKind::Truncated:
      j["kind"] = "trunc";
      j["var"] = r->variables[0];
      j["m"] = r->truncation_order;
      break;
  }
  return j;
}

RingPtr ring_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "q") return ring_q();
  if (kind == "func") return ring_function_field(j.at("vars").get<std::vector<std::string>>());
  if (kind == "trunc")
    return ring_truncated(j.at("m").get<int>(), j.value("var", std::string("t")));
  throw ParseError("unknown ring kind: " + kind);
}

json to_json(const Arrangement& a) {
  json j;
  j["schema"] = "staudt/arrangement/1";
  j["points"] = a.points();
  j["lines"] = a.lines();
  json inc = json::array();
  for (auto& [p, l] : a.incidences()) inc.push_back(json::array({p, l}));
  j["incidences"] = inc;
  return j;
}

json to_json(const BasedArrangement& a) {
  json j = to_json(a.arr);
  j["base"] = a.base;
  return j;
}

json to_json(const MarkedArrangement& a) {
  json j = to_json(a.based);
  j["inputs"] = a.inputs;
  j["outputs"] = a.outputs;
  return j;
}

json to_json(const FunctionalArrangement& fa) {
  json j = to_json(fa.marked);
  json sched = json::array();
  for (auto& r : fa.schedule) {
    json e;
    e["target"] = r.target;
    switch (r.kind) {
      case PropagationRule::Kind::Input:
        e["rule"] = "input";
        e["index"] = r.input_index;
        break;
      case PropagationRule::Kind::Base:
        e["rule"] = "base";
        e["args"] = json::array({r.arg1});
        break;
      case PropagationRule::Kind::Join:
        e["rule"] = "join";
        e["args"] = json::array({r.arg1, r.arg2});
        break;
      case PropagationRule::Kind::Meet:
        e["rule"] = "meet";
        e["args"] = json::array({r.arg1, r.arg2});
        break;
    }
    sched.push_back(e);
  }
  j["schedule"] = sched;
  return j;
}

FunctionalArrangement functional_from_json(const json& j) {
  FunctionalArrangement fa;
  Arrangement& a = fa.marked.based.arr;
  for (auto& p : j.at("points")) a.add_point(p.get<std::string>());
  for (auto& l : j.at("lines")) a.add_line(l.get<std::string>());
  for (auto& inc : j.at("incidences"))
    a.add_incidence(inc.at(0).get<std::string>(), inc.at(1).get<std::string>());
  fa.marked.based.base = j.at("base").get<std::map<std::string, std::string>>();
  if (j.contains("inputs")) fa.marked.inputs = j.at("inputs").get<std::vector<std::string>>();
  if (j.contains("outputs")) fa.marked.outputs = j.at("outputs").get<std::vector<std::string>>();
  if (j.contains("schedule")) {
    for (auto& e : j.at("schedule")) {
      std::string rule = e.at("rule").get<std::string>();
      std::string target = e.at("target").get<std::string>();
      if (rule == "input")
        fa.schedule.push_back(PropagationRule::input(target, e.at("index").get<int>()));
      else if (rule == "base")
        fa.schedule.push_back(PropagationRule::base(target, e.at("args").at(0).get<std::string>()));
      else if (rule == "join")
        fa.schedule.push_back(PropagationRule::join_rule(target, e.at("args").at(0).get<std::string>(),
                                                         e.at("args").at(1).get<std::string>()));
      else if (rule == "meet")
        fa.schedule.push_back(PropagationRule::meet_rule(target, e.at("args").at(0).get<std::string>(),
                                                         e.at("args").at(1).get<std::string>()));
      else
        throw ParseError("unknown schedule rule: " + rule);
    }
    fa.validate();
  }
  return fa;
}

json to_json(const Realization& r) {
  json j;
  j["schema"] = "staudt/realization/1";
  j["ring"] = to_json(r.ring);
  json pts = json::object(), lns = json::object();
  for (auto& [n, p] : r.points) pts[n] = triple_json(p.c);
  for (auto& [n, l] : r.lines) lns[n] = triple_json(l.c);
  j["points"] = pts;
  j["lines"] = lns;
  return j;
}

Realization realization_from_json(const json& j) {
  Realization r;
  r.ring = ring_from_json(j.at("ring"));
  for (auto& [n, t] : j.at("points").items())
    r.points.emplace(n, ProjPoint{canonical_triple(triple_from_json(r.ring, t))});
  for (auto& [n, t] : j.at("lines").items())
    r.lines.emplace(n, ProjLine{canonical_triple(triple_from_json(r.ring, t))});
  return r;
}

json to_json(const LabelledGraph& g) {
  json j;
  j["schema"] = "staudt/graph/1";
  json vs = json::array();
  for (auto& v : g.vertices())
    vs.push_back(json{{"name", v}, {"label", g.vertex_label(v)}});
  j["vertices"] = vs;
  json es = json::array();
  for (auto& [a, b, l] : g.edges()) es.push_back(json{{"a", a}, {"b", b}, {"label", l}});
  j["edges"] = es;
  return j;
}

LabelledGraph graph_from_json(const json& j) {
  LabelledGraph g;
  for (auto& v : j.at("vertices"))
    g.add_vertex(v.at("name").get<std::string>(), v.at("label").get<int>());
  for (auto& e : j.at("edges"))
    g.add_edge(e.at("a").get<std::string>(), e.at("b").get<std::string>(),
               e.at("label").get<int>());
  return g;
}

json to_json(const Word& w) {
  json a = json::array();
  for (auto& [g, e] : w.syls) a.push_back(json::array({g, e}));
  return a;
}

namespace {
Word word_from_json(const json& j) {
  Word w;
  for (auto& s : j) w.append(s.at(0).get<std::string>(), s.at(1).get<int>());
  return w;
}

std::string kind_name(PresKind k) {
  switch (k) {
    case PresKind::Coxeter: return "coxeter";
    case PresKind::Artin: return "artin";
    case PresKind::Shephard: return "shephard";
    case PresKind::ExtendedArtin: return "extended_artin";
  }
  return "?";
}

PresKind kind_of(const std::string& s) {
  if (s == "coxeter") return PresKind::Coxeter;
  if (s == "artin") return PresKind::Artin;
  if (s == "shephard") return PresKind::Shephard;
  if (s == "extended_artin") return PresKind::ExtendedArtin;
  throw ParseError("unknown presentation kind: " + s);
}
} // namespace

json to_json(const Presentation& p) {
  json j;
  j["schema"] = "staudt/presentation/1";
  j["kind"] = kind_name(p.kind);
  j["generators"] = p.generators;
  json rels = json::array();
  for (auto& r : p.relations)
    rels.push_back(json{{"tag", r.tag}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  j["relations"] = rels;
  json tor = json::array();
  for (auto& [g, k] : p.torsion) tor.push_back(json::array({g, k}));
  j["torsion"] = tor;
  return j;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.kind = kind_of(j.at("kind").get<std::string>());
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (auto& r : j.at("relations"))
    p.relations.push_back({word_from_json(r.at("lhs")), word_from_json(r.at("rhs")),
                           r.at("tag").get<std::string>()});
  for (auto& t : j.at("torsion"))
    p.torsion.push_back({t.at(0).get<std::string>(), t.at(1).get<int>()});
  return p;
}

json to_json(const MalcevPresentation& p) {
  json j;
  j["schema"] = "staudt/malcev/1";
  j["generators"] = p.generators;
  json com = json::array(), idn = json::array();
  for (auto& [a, b] : p.commuting) com.push_back(json::array({a, b}));
  for (auto& [a, b] : p.identified) idn.push_back(json::array({a, b}));
  j["commuting"] = com;
  j["identified"] = idn;
  return j;
}

json to_json(const ProjMat& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int jx = 0; jx < 3; ++jx) row.push_back(to_string(m.canonical().m[i][jx]));
    rows.push_back(row);
  }
  return rows;
}

ProjMat projmat_from_json(const json& j) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int jx = 0; jx < 3; ++jx) m.m[i][jx] = parse_rat(j.at(i).at(jx).get<std::string>());
  return ProjMat(m);
}

json to_json(const Representation& rep) {
  json j;
  j["schema"] = "staudt/representation/1";
  j["presentation"] = to_json(rep.pres);
  json imgs = json::object();
  for (auto& [g, m] : rep.images) imgs[g] = to_json(m);
  j["images"] = imgs;
  return j;
}

Representation representation_from_json(const json& j) {
  Representation rep;
  rep.pres = presentation_from_json(j.at("presentation"));
  for (auto& [g, m] : j.at("images").items()) rep.images.emplace(g, projmat_from_json(m));
  return rep;
}

json to_json(const std::vector<RelationReport>& reports) {
  json arr = json::array();
  for (auto& r : reports) arr.push_back(json{{"relation", r.tag}, {"status", r.ok ? "ok" : "fail"}});
  return arr;
}

json to_json(const CohomologyDims& d) {
  return json{{"h0", d.h0}, {"z1", d.z1}, {"b1", d.b1}, {"h1", d.h1}};
}

} // namespace staudt
