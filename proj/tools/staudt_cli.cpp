// staudt: compile polynomial systems into projective incidence arrangements,
// realize them over exact rings, emit the associated group presentations and
// verify rigidity/stability by exact linear algebra.

#include "staudt/jsonio.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace staudt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << text;
  }
}

RingPtr parse_ring_flag(const std::string& spec) {
  if (spec.empty() || spec == "q") return ring_q();
  if (spec.rfind("func(", 0) == 0 && spec.back() == ')') {
    std::vector<std::string> vars;
    std::string body = spec.substr(5, spec.size() - 6);
    size_t start = 0;
    while (start <= body.size()) {
      size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      std::string v = body.substr(start, comma - start);
      if (!v.empty()) vars.push_back(v);
      start = comma + 1;
    }
    return ring_function_field(vars);
  }
  if (spec.rfind("trunc(", 0) == 0 && spec.back() == ')')
    return ring_truncated(std::stoi(spec.substr(6, spec.size() - 7)));
  throw ParseError("bad --ring (use q, func(a,b,...), trunc(m)): " + spec);
}

std::vector<RingElement> parse_at(const RingPtr& ring, const std::string& at) {
  std::vector<RingElement> xs;
  if (at.empty()) return xs;
  size_t start = 0;
  while (start <= at.size()) {
    size_t comma = at.find(',', start);
    if (comma == std::string::npos) comma = at.size();
    xs.push_back(parse_element(ring, at.substr(start, comma - start)));
    start = comma + 1;
  }
  return xs;
}

/// Builtin gadget names or a JSON file path.
FunctionalArrangement load_arrangement(const std::string& name) {
  if (name == "cm" || name == "mul") return gadget_mul();
  if (name == "ca" || name == "add") return gadget_add();
  if (name == "cd" || name == "sub") return gadget_sub();
  if (name == "cplus") return gadget_const(1);
  if (name == "cminus") return gadget_const(-1);
  if (name == "triangle") return triangle_functional();
  return functional_from_json(json::parse(slurp(name)));
}

std::string read_system_arg(const std::string& arg) {
  // looks like a file when it exists on disk; otherwise inline text
  std::ifstream probe(arg);
  if (probe.good()) return slurp(arg);
  return arg;
}

int cmd_compile(const std::string& sys_text, const std::string& out) {
  CompiledSystem cs = compile_system(parse_system(read_system_arg(sys_text)));
  json j = to_json(cs.as_functional());
  j["identified_outputs"] = cs.merged_outputs;
  emit(out, j.dump(2));
  const Arrangement& a = cs.arr.arr;
  std::cerr << "points: " << a.points().size() << "  lines: " << a.lines().size()
            << "  incidences: " << a.incidences().size()
            << "  inputs: " << cs.inputs.size()
            << "  admissible: " << (is_admissible(a) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_realize(const std::string& arr_name, const std::string& ring_spec,
                const std::string& at, const std::string& out) {
  FunctionalArrangement fa = load_arrangement(arr_name);
  RingPtr ring = parse_ring_flag(ring_spec);
  Realization psi = propagate(fa, parse_at(ring, at), ring);
  emit(out, to_json(psi).dump(2));
  return kExitOk;
}

int cmd_verify_gadget(const std::string& arr_name, const std::string& out) {
  FunctionalArrangement fa = load_arrangement(arr_name);
  VerifyReport r = verify_functional(fa);
  json j;
  j["schema"] = "staudt/verify-report/1";
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  json outs = json::array();
  for (auto& y : r.symbolic_outputs) outs.push_back(y.str());
  j["outputs"] = outs;
  emit(out, j.dump(2));
  return r.ok ? kExitOk : kExitVerification;
}

int cmd_groups(const std::string& arr_name, const std::string& kind,
               const std::string& format, const std::string& out) {
  FunctionalArrangement fa = load_arrangement(arr_name);
  LabelledGraph lam = build_lambda(fa.marked.based);
  if (format == "dot") {
    emit(out, to_dot(lam));
    return kExitOk;
  }
  if (kind == "malcev") {
    MalcevPresentation p = malcev_presentation(lam);
    emit(out, format == "text" ? to_text(p) : to_json(p).dump(2));
    return kExitOk;
  }
  Presentation p;
  if (kind == "artin") p = artin_presentation(lam);
  else if (kind == "coxeter") p = coxeter_presentation(lam);
  else if (kind == "shephard") p = shephard_presentation(lam);
  else if (kind == "extended") p = extended_artin_presentation(lam);
  else throw ParseError("bad --kind: " + kind);
  if (format == "text") emit(out, to_text(p));
  else {
    json j = to_json(p);
    j["graph"] = to_json(lam);
    emit(out, j.dump(2));
  }
  return kExitOk;
}

int cmd_alg(const std::string& arr_name, const std::string& at, const std::string& kind,
            const std::string& out) {
  FunctionalArrangement fa = load_arrangement(arr_name);
  Realization psi = propagate(fa, parse_at(ring_q(), at), ring_q());
  LabelledGraph lam = build_lambda(fa.marked.based);
  PresKind k = kind == "artin" ? PresKind::Artin
              : kind == "coxeter" ? PresKind::Coxeter
                                  : PresKind::Shephard;
  Representation rep = alg(psi, fa.marked.based, lam, k);
  json j = to_json(rep);
  j["graph"] = to_json(lam);
  emit(out, j.dump(2));
  return kExitOk;
}

int cmd_verify_rep(const std::string& rep_file, const std::string& out) {
  Representation rep = representation_from_json(json::parse(slurp(rep_file)));
  auto reports = verify_relations(rep);
  bool ok = true;
  for (auto& r : reports) ok &= r.ok;
  json j;
  j["schema"] = "staudt/verify-report/1";
  j["ok"] = ok;
  j["relations"] = to_json(reports);
  emit(out, j.dump(2));
  return ok ? kExitOk : kExitVerification;
}

int cmd_closure(const std::string& name, const std::string& at, long cap,
                const std::string& out) {
  Representation rep;
  json parsed;
  bool is_rep_file = false;
  {
    std::ifstream probe(name);
    if (probe.good()) {
      parsed = json::parse(slurp(name));
      is_rep_file = parsed.contains("images");
    }
  }
  if (is_rep_file) {
    rep = representation_from_json(parsed);
  } else {
    FunctionalArrangement fa = load_arrangement(name);
    Realization psi = propagate(fa, parse_at(ring_q(), at), ring_q());
    rep = alg(psi, fa.marked.based, build_lambda(fa.marked.based));
  }
  auto n = group_closure(rep, cap);
  if (!n) {
    emit(out, json{{"schema", "staudt/closure-report/1"}, {"cap", cap}, {"finite_within_cap", false}}.dump(2));
    return kExitVerification;
  }
  emit(out, json{{"schema", "staudt/closure-report/1"}, {"order", *n}}.dump(2));
  std::cout << *n << "\n";
  return kExitOk;
}

int cmd_rigidity(const std::string& rep_file, const std::string& out) {
  Representation rep = representation_from_json(json::parse(slurp(rep_file)));
  CohomologyDims d = h0_h1_dims(rep.pres, rep);
  json j = to_json(d);
  j["schema"] = "staudt/rigidity-report/1";
  emit(out, j.dump(2));
  return d.h1 == 0 ? kExitOk : kExitVerification;
}

int cmd_stability(const std::string& realization_file, const std::string& out) {
  Realization psi = realization_from_json(json::parse(slurp(realization_file)));
  bool st = is_stable(psi);
  emit(out, json{{"schema", "staudt/stability-report/1"}, {"stable", st}}.dump(2));
  return st ? kExitOk : kExitVerification;
}

int cmd_tangent(const std::string& sys_text, int m, int samples, unsigned long seed,
                const std::string& out) {
  if (m < 1) throw ParseError("--m must be >= 1");
  CompiledSystem cs = compile_system(parse_system(read_system_arg(sys_text)));
  RingPtr ring = ring_truncated(m);
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  int solutions = 0, roundtrips = 0, rejected = 0;
  for (int i = 0; i < samples; ++i) {
    std::vector<RingElement> x;
    for (size_t k = 0; k < cs.inputs.size(); ++k) {
      std::vector<Rat> c(m + 1);
      for (auto& q : c) q = coeff(g);
      x.push_back(RingElement(ring, std::move(c)));
    }
    bool is_sol = true;
    for (auto& slp : cs.system.slps) is_sol &= eval_slp(slp, x).is_zero();
    auto cand = realize_candidate(cs, x);
    if (is_sol != cand.violations.empty()) {
      emit(out, json{{"ok", false}, {"at_sample", i}}.dump(2));
      return kExitVerification;
    }
    if (is_sol) {
      ++solutions;
      if (tau(cs, cand.realization) == x) ++roundtrips;
    } else {
      ++rejected;
    }
  }
  json j{{"schema", "staudt/tangent-report/1"},
         {"ok", solutions == roundtrips},
         {"m", m},
         {"samples", samples},
         {"solutions", solutions},
         {"roundtrips", roundtrips},
         {"rejected_nonsolutions", rejected}};
  emit(out, j.dump(2));
  return solutions == roundtrips ? kExitOk : kExitVerification;
}

int cmd_homogeneity(const std::string& sys_text, const std::string& weights_csv,
                    const std::string& out) {
  PolySystem sys = parse_system(read_system_arg(sys_text));
  std::vector<int> weights;
  size_t start = 0;
  while (start <= weights_csv.size() && !weights_csv.empty()) {
    size_t comma = weights_csv.find(',', start);
    if (comma == std::string::npos) comma = weights_csv.size();
    weights.push_back(std::stoi(weights_csv.substr(start, comma - start)));
    start = comma + 1;
  }
  std::vector<Poly> polys;
  for (auto& slp : sys.slps) polys.push_back(expand_slp(slp));
  auto us = is_weighted_homogeneous(polys, weights);
  json j;
  j["schema"] = "staudt/homogeneity-report/1";
  j["weighted_homogeneous"] = us.has_value();
  if (us) j["relation_weights"] = *us;
  emit(out, j.dump(2));
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact projective-arrangement toolkit"};
  app.require_subcommand(1);

  std::string sys_text, arr_name, at, ring_spec = "q", outfile, format = "json";
  std::string kind = "shephard", rep_file, realization_file, weights;
  long cap = 100000;
  int m = 1, samples = 20;
  unsigned long seed = 1;

  auto* compile = app.add_subcommand("compile", "compile a polynomial system to an arrangement");
  compile->add_option("system", sys_text, "system text or file")->required();
  compile->add_option("--out", outfile);

  auto* realize = app.add_subcommand("realize", "propagate an arrangement at input values");
  realize->add_option("arrangement", arr_name, "builtin (cm|ca|cd|cplus|cminus|triangle) or JSON file")->required();
  realize->add_option("--ring", ring_spec, "q | func(a,b,...) | trunc(m)");
  realize->add_option("--at", at, "comma-separated input values");
  realize->add_option("--out", outfile);

  auto* vg = app.add_subcommand("verify-gadget", "check the functional-arrangement axioms symbolically");
  vg->add_option("arrangement", arr_name)->required();
  vg->add_option("--out", outfile);

  auto* groups = app.add_subcommand("groups", "labelled graph and group presentations");
  groups->add_option("arrangement", arr_name)->required();
  groups->add_option("--kind", kind, "artin|coxeter|shephard|extended|malcev");
  groups->add_option("--format", format, "json|dot|text");
  groups->add_option("--out", outfile);

  auto* algc = app.add_subcommand("alg", "algebraize a realization into 3x3 projective matrices");
  algc->add_option("arrangement", arr_name)->required();
  algc->add_option("--at", at, "rational input values");
  algc->add_option("--kind", kind, "artin|coxeter|shephard");
  algc->add_option("--out", outfile);

  auto* vr = app.add_subcommand("verify-rep", "verify every relation of a representation");
  vr->add_option("representation", rep_file)->required();
  vr->add_option("--out", outfile);

  auto* clo = app.add_subcommand("closure", "enumerate the projective matrix group generated by the images");
  clo->add_option("input", arr_name, "representation JSON, builtin, or arrangement file")->required();
  clo->add_option("--at", at, "rational inputs when algebraizing an arrangement");
  clo->add_option("--cap", cap);
  clo->add_option("--out", outfile);

  auto* rig = app.add_subcommand("rigidity", "H^0/Z^1/B^1/H^1 of a representation");
  rig->add_option("representation", rep_file)->required();
  rig->add_option("--out", outfile);

  auto* stab = app.add_subcommand("stability", "Mumford stability of a realization");
  stab->add_option("realization", realization_file)->required();
  stab->add_option("--out", outfile);

  auto* tan = app.add_subcommand("tangent", "truncated-ring tangent-space bijection check");
  tan->add_option("system", sys_text)->required();
  tan->add_option("--m", m, "truncation order");
  tan->add_option("--samples", samples);
  tan->add_option("--seed", seed);
  tan->add_option("--out", outfile);

  auto* hom = app.add_subcommand("homogeneity", "weighted-homogeneity test");
  hom->add_option("system", sys_text)->required();
  hom->add_option("--weights", weights, "comma-separated positive integers")->required();
  hom->add_option("--out", outfile);

  try {
    app.parse(argc, argv);
    if (*compile) return cmd_compile(sys_text, outfile);
    if (*realize) return cmd_realize(arr_name, ring_spec, at, outfile);
    if (*vg) return cmd_verify_gadget(arr_name, outfile);
    if (*groups) return cmd_groups(arr_name, kind, format, outfile);
    if (*algc) return cmd_alg(arr_name, at, kind, outfile);
    if (*vr) return cmd_verify_rep(rep_file, outfile);
    if (*clo) return cmd_closure(arr_name, at, cap, outfile);
    if (*rig) return cmd_rigidity(rep_file, outfile);
    if (*stab) return cmd_stability(realization_file, outfile);
    if (*tan) return cmd_tangent(sys_text, m, samples, seed, outfile);
    if (*hom) return cmd_homogeneity(sys_text, weights, outfile);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
