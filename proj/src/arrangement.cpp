#include "staudt/arrangement.hpp"

#include <algorithm>

namespace staudt {

void Arrangement::add_point(const std::string& n) {
  if (has_element(n)) throw StructureError("duplicate element name: " + n);
  points_.push_back(n);
  point_set_.insert(n);
}

void Arrangement::add_line(const std::string& n) {
  if (has_element(n)) throw StructureError("duplicate element name: " + n);
  lines_.push_back(n);
  line_set_.insert(n);
}

void Arrangement::add_incidence(const std::string& p, const std::string& l) {
  if (!has_point(p)) throw StructureError("incidence references unknown point: " + p);
  if (!has_line(l)) throw StructureError("incidence references unknown line: " + l);
  if (incidence_set_.insert({p, l}).second) incidences_.push_back({p, l});
}

bool Arrangement::incident(const std::string& p, const std::string& l) const {
  return incidence_set_.count({p, l});
}

int Arrangement::degree(const std::string& elem) const {
  int d = 0;
  for (auto& [p, l] : incidences_)
    if (p == elem || l == elem) ++d;
  return d;
}

void Arrangement::merge_elements(const std::string& from, const std::string& to) {
  if (from == to) return;
  bool fp = has_point(from), tp = has_point(to);
  if (!has_element(from) || !has_element(to))
    throw StructureError("merge of unknown element: " + from + " / " + to);
  if (fp != tp)
    throw StructureError("sort clash merging point with line: " + from + " ~ " + to);
  auto& names = fp ? points_ : lines_;
  auto& set = fp ? point_set_ : line_set_;
  names.erase(std::find(names.begin(), names.end(), from));
  set.erase(from);
  std::vector<std::pair<std::string, std::string>> inc = std::move(incidences_);
  incidences_.clear();
  incidence_set_.clear();
  for (auto& [p, l] : inc) {
    std::string np = p == from ? to : p;
    std::string nl = l == from ? to : l;
    if (incidence_set_.insert({np, nl}).second) incidences_.push_back({np, nl});
  }
}

bool is_admissible(const Arrangement& a) {
  for (auto& p : a.points())
    if (a.degree(p) < 2) return false;
  for (auto& l : a.lines())
    if (a.degree(l) < 2) return false;
  return true;
}

void check_monomorphism(const Arrangement& from, const Arrangement& to, const Morphism& m) {
  std::set<std::string> image;
  for (auto& p : from.points()) {
    auto it = m.map.find(p);
    if (it == m.map.end()) throw StructureError("morphism misses point " + p);
    if (!to.has_point(it->second))
      throw StructureError("morphism sends point " + p + " to non-point " + it->second);
    if (!image.insert(it->second).second)
      throw StructureError("morphism not injective at " + it->second);
  }
  for (auto& l : from.lines()) {
    auto it = m.map.find(l);
    if (it == m.map.end()) throw StructureError("morphism misses line " + l);
    if (!to.has_line(it->second))
      throw StructureError("morphism sends line " + l + " to non-line " + it->second);
    if (!image.insert(it->second).second)
      throw StructureError("morphism not injective at " + it->second);
  }
  for (auto& [p, l] : from.incidences())
    if (!to.incident(m.map.at(p), m.map.at(l)))
      throw StructureError("morphism does not preserve incidence (" + p + "," + l + ")");
}

Arrangement fiber_sum(const Arrangement& a, const Arrangement& b, const Arrangement& c,
                      const Morphism& phi, const Morphism& psi) {
  check_monomorphism(c, a, phi);
  check_monomorphism(c, b, psi);
  // b-element -> merged name
  std::map<std::string, std::string> rename;
  for (auto& e : c.points()) {
    bool ap = a.has_point(phi.map.at(e));
    bool bp = b.has_point(psi.map.at(e));
    if (ap != bp) throw StructureError("sort clash identifying " + e);
    rename[psi.map.at(e)] = phi.map.at(e);
  }
  for (auto& e : c.lines()) rename[psi.map.at(e)] = phi.map.at(e);

  Arrangement r = a;
  auto target = [&](const std::string& be) {
    auto it = rename.find(be);
    return it == rename.end() ? be : it->second;
  };
  for (auto& p : b.points()) {
    if (rename.count(p)) continue;
    if (r.has_element(p))
      throw StructureError("name collision in fiber sum: " + p);
    r.add_point(p);
  }
  for (auto& l : b.lines()) {
    if (rename.count(l)) continue;
    if (r.has_element(l))
      throw StructureError("name collision in fiber sum: " + l);
    r.add_line(l);
  }
  for (auto& [p, l] : b.incidences()) r.add_incidence(target(p), target(l));
  return r;
}

const std::string& BasedArrangement::of(const std::string& t_elem) const {
  auto it = base.find(t_elem);
  if (it == base.end()) throw StructureError("base map misses " + t_elem);
  return it->second;
}

void BasedArrangement::validate() const {
  Arrangement t = standard_triangle().arr;
  Morphism m{base};
  check_monomorphism(t, arr, m);
}

BasedArrangement standard_triangle() {
  Arrangement t;
  for (auto& p : triangle_point_names()) t.add_point(p);
  for (auto& l : triangle_line_names()) t.add_line(l);
  const std::pair<const char*, const char*> inc[] = {
      {"v00", "lx"},  {"v01", "ly"},  {"vx", "lx"},   {"vx", "linf"},
      {"vy", "ly"},   {"vy", "linf"}, {"v11", "ld"},  {"v00", "ld"},
      {"v00", "ly"},  {"v10", "ly1"}, {"v01", "lx1"}, {"v10", "lx"},
      {"vy", "ly1"},  {"vx", "lx1"},  {"v11", "ly1"}, {"v11", "lx1"}};
  for (auto& [p, l] : inc) t.add_incidence(p, l);
  BasedArrangement b{std::move(t), {}};
  for (auto& p : triangle_point_names()) b.base[p] = p;
  for (auto& l : triangle_line_names()) b.base[l] = l;
  return b;
}

BasedArrangement join_based(const BasedArrangement& a, const BasedArrangement& b,
                            const Arrangement& c, const Morphism& phi, const Morphism& psi) {
  // extend C by the standard triangle, phi/psi by the base maps
  Arrangement tc = standard_triangle().arr;
  Morphism phi2{a.base}, psi2{b.base};
  for (auto& p : c.points()) {
    if (tc.has_element(p)) throw StructureError("identification set overlaps T names: " + p);
    tc.add_point(p);
    phi2.map[p] = phi.map.at(p);
    psi2.map[p] = psi.map.at(p);
  }
  for (auto& l : c.lines()) {
    if (tc.has_element(l)) throw StructureError("identification set overlaps T names: " + l);
    tc.add_line(l);
    phi2.map[l] = phi.map.at(l);
    psi2.map[l] = psi.map.at(l);
  }
  for (auto& [p, l] : c.incidences()) tc.add_incidence(p, l);
  BasedArrangement r{fiber_sum(a.arr, b.arr, tc, phi2, psi2), a.base};
  return r;
}

BasedArrangement point_join(const BasedArrangement& a, const BasedArrangement& b,
                            const std::string& ea, const std::string& eb) {
  Arrangement c;
  c.add_point("c");
  Morphism phi, psi;
  phi.map["c"] = ea;
  psi.map["c"] = eb;
  return join_based(a, b, c, phi, psi);
}

void MarkedArrangement::validate() const {
  based.validate();
  const std::string& lx = based.of("lx");
  std::set<std::string> t_image;
  for (auto& [k, v] : based.base) t_image.insert(v);
  for (auto& v : inputs) {
    if (!based.arr.incident(v, lx))
      throw StructureError("input point " + v + " not on l_x");
    if (t_image.count(v)) throw StructureError("input point " + v + " lies in T");
  }
  for (auto& w : outputs)
    if (!based.arr.incident(w, lx))
      throw StructureError("output point " + w + " not on l_x");
}

} // namespace staudt
