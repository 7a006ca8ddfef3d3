#include "staudt/presentation.hpp"

#include <sstream>

namespace staudt {

Word Word::alternating(const std::string& g, const std::string& h, int count) {
  Word w;
  for (int i = 0; i < count; ++i) w.append(i % 2 == 0 ? g : h, 1);
  return w;
}

Word& Word::append(const std::string& g, int e) {
  if (e == 0) return *this;
  if (!syls.empty() && syls.back().first == g) {
    syls.back().second += e;
    if (syls.back().second == 0) syls.pop_back();
    return *this;
  }
  syls.push_back({g, e});
  return *this;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  for (auto& [g, e] : o.syls) w.append(g, e);
  return w;
}

std::string Word::str() const {
  if (syls.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < syls.size(); ++i) {
    if (i) os << " ";
    os << syls[i].first;
    if (syls[i].second != 1) os << "^" << syls[i].second;
  }
  return os.str();
}

namespace {

std::string edge_tag(const std::string& a, const std::string& b, int l) {
  return "artin[" + a + "," + b + "]:" + std::to_string(l);
}

} // namespace

Presentation artin_presentation(const LabelledGraph& g) {
  Presentation p;
  p.kind = PresKind::Artin;
  p.generators = g.vertices();
  for (auto& [a, b, l] : g.edges())
    p.relations.push_back({Word::alternating(a, b, l), Word::alternating(b, a, l),
                           edge_tag(a, b, l)});
  return p;
}

Presentation coxeter_presentation(const LabelledGraph& g) {
  Presentation p;
  p.kind = PresKind::Coxeter;
  p.generators = g.vertices();
  for (auto& [a, b, l] : g.edges())
    p.relations.push_back({Word::alternating(a, b, 2 * l), Word::empty(),
                           "coxeter[" + a + "," + b + "]:" + std::to_string(l)});
  for (auto& v : g.vertices()) p.torsion.push_back({v, 2});
  return p;
}

Presentation shephard_presentation(const LabelledGraph& g) {
  Presentation p = artin_presentation(g);
  p.kind = PresKind::Shephard;
  bool any = false;
  for (auto& v : g.vertices()) {
    int d = g.vertex_label(v);
    if (d >= 2) {
      p.torsion.push_back({v, d});
      any = true;
    }
  }
  if (!any) throw StructureError("shephard presentation needs vertex labels");
  return p;
}

Presentation extended_artin_presentation(const LabelledGraph& g) {
  Presentation p;
  p.kind = PresKind::ExtendedArtin;
  const auto& vs = g.vertices();
  int m = (int)vs.size();
  auto tau = [&](int i) { return "tau_" + vs[i]; };
  for (auto& v : vs) p.generators.push_back(v);
  for (int i = 0; i < m; ++i) p.generators.push_back(tau(i));

  // Artin relations between the g's
  for (auto& [a, b, l] : g.edges()) {
    if (l != 2 && l != 4)
      throw StructureError("extended Artin groups support edge labels 2 and 4 only, got " +
                           std::to_string(l));
    p.relations.push_back({Word::alternating(a, b, l), Word::alternating(b, a, l),
                           edge_tag(a, b, l)});
  }
  // Z^m is free abelian
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      p.relations.push_back({Word::gen(tau(i)) * Word::gen(tau(j)),
                             Word::gen(tau(j)) * Word::gen(tau(i)),
                             "lattice[" + tau(i) + "," + tau(j) + "]"});

  // generalized Cartan matrix: diagonal 2; label 2 -> 0/0; label 4 -> -1/-2
  // for i<j; no edge -> -2/-2
  auto cartan = [&](int i, int j) -> int {
    if (i == j) return 2;
    auto l = g.edge_label(vs[i], vs[j]);
    if (!l) return -2;
    if (*l == 2) return 0;
    return i < j ? -1 : -2;  // label 4
  };
  // relation moving g_i past tau_j, driven by n_{ji}
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      int nji = cartan(j, i);
      Word lhs = Word::gen(vs[i]) * Word::gen(tau(j));
      Word rhs;
      if ((-nji) % 2 == 0) {
        int r = (-nji) / 2;
        rhs = Word::gen(tau(j)) * Word::power(tau(i), r) * Word::gen(vs[i]) *
              Word::power(tau(i), -r);
      } else {
        int r = (-nji - 1) / 2;
        rhs = Word::gen(tau(j)) * Word::power(tau(i), r + 1) * Word::gen(vs[i], -1) *
              Word::power(tau(i), -r);
      }
      p.relations.push_back({lhs, rhs, "extended[" + vs[i] + "," + tau(j) + "]"});
    }
  }
  return p;
}

MalcevPresentation malcev_presentation(const LabelledGraph& g) {
  MalcevPresentation p;
  p.generators = g.vertices();
  for (auto& [a, b, l] : g.edges()) {
    if (l % 2 == 0) p.commuting.push_back({a, b});
    else p.identified.push_back({a, b});
  }
  return p;
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  switch (p.kind) {
    case PresKind::Coxeter: os << "# coxeter\n"; break;
    case PresKind::Artin: os << "# artin\n"; break;
    case PresKind::Shephard: os << "# shephard\n"; break;
    case PresKind::ExtendedArtin: os << "# extended-artin\n"; break;
  }
  for (auto& gname : p.generators) os << "gen " << gname << "\n";
  for (auto& [gname, k] : p.torsion) os << "ord " << gname << " " << k << "\n";
  for (auto& r : p.relations) {
    // artin-form relations print as graph data, others as explicit words
    if (r.tag.rfind("artin[", 0) == 0 || r.tag.rfind("coxeter[", 0) == 0) {
      auto comma = r.tag.find(','), open = r.tag.find('['), close = r.tag.find(']');
      os << "artin " << r.tag.substr(open + 1, comma - open - 1) << " "
         << r.tag.substr(comma + 1, close - comma - 1) << " "
         << r.tag.substr(r.tag.find(':') + 1) << "\n";
    } else {
      os << "rel " << r.lhs.str() << " = " << r.rhs.str() << "\n";
    }
  }
  return os.str();
}

std::string to_text(const MalcevPresentation& p) {
  std::ostringstream os;
  os << "# malcev\n";
  for (auto& gname : p.generators) os << "gen " << gname << "\n";
  for (auto& [a, b] : p.commuting) os << "rel [" << a << ", " << b << "] = 0\n";
  for (auto& [a, b] : p.identified) os << "rel " << a << " = " << b << "\n";
  return os.str();
}

} // namespace staudt
