#include "staudt/graphs.hpp"

#include <sstream>

namespace staudt {

int LabelledGraph::add_vertex(const std::string& name, int label) {
  if (index_.count(name)) throw StructureError("duplicate vertex " + name);
  if (label == 1 || label < 0) throw StructureError("vertex label must be 0 or >= 2");
  index_[name] = (int)vertices_.size();
  vertices_.push_back(name);
  labels_.push_back(label);
  return (int)vertices_.size() - 1;
}

std::pair<int, int> LabelledGraph::key(const std::string& a, const std::string& b) const {
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end())
    throw StructureError("edge references unknown vertex " + a + " or " + b);
  if (ia->second == ib->second) throw StructureError("loop edge at " + a);
  return {std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
}

void LabelledGraph::add_edge(const std::string& a, const std::string& b, int label) {
  if (label < 2) throw StructureError("edge label must be >= 2");
  edges_.emplace(key(a, b), label);  // keeps the first label if present
}

void LabelledGraph::set_edge_label(const std::string& a, const std::string& b, int label) {
  if (label < 2) throw StructureError("edge label must be >= 2");
  edges_[key(a, b)] = label;
}

int LabelledGraph::vertex_label(const std::string& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw StructureError("unknown vertex " + v);
  return labels_[it->second];
}

std::optional<int> LabelledGraph::edge_label(const std::string& a, const std::string& b) const {
  auto it = edges_.find(key(a, b));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::tuple<std::string, std::string, int>> LabelledGraph::edges() const {
  std::vector<std::tuple<std::string, std::string, int>> out;
  for (auto& [k, l] : edges_) out.push_back({vertices_[k.first], vertices_[k.second], l});
  return out;
}

LabelledGraph build_lambda(const BasedArrangement& a) {
  a.validate();
  const std::string v00 = a.of("v00"), vx = a.of("vx"), vy = a.of("vy");
  const std::string v10 = a.of("v10"), v01 = a.of("v01"), v11 = a.of("v11");
  const std::string lx = a.of("lx"), ly = a.of("ly"), linf = a.of("linf");

  // the three identifications: lines l_inf, l_y, l_x fold onto v00, vx, vy
  std::map<std::string, std::string> vertex_of;
  for (auto& p : a.arr.points()) vertex_of[p] = p;
  for (auto& l : a.arr.lines()) vertex_of[l] = l;
  vertex_of[linf] = v00;
  vertex_of[ly] = vx;
  vertex_of[lx] = vy;

  LabelledGraph g;
  for (auto& p : a.arr.points()) g.add_vertex(p, p == v11 ? 3 : 2);
  for (auto& l : a.arr.lines())
    if (l != lx && l != ly && l != linf) g.add_vertex(l, 2);

  for (auto& [p, l] : a.arr.incidences()) {
    const std::string &va = vertex_of.at(p), &vb = vertex_of.at(l);
    if (va == vb)
      throw StructureError("incidence (" + p + "," + l +
                           ") collapses to a loop under the base identifications");
    g.add_edge(va, vb, 2);
  }
  g.add_edge(v10, v00, 2);
  g.add_edge(v01, v00, 2);
  g.add_edge(v11, v00, 2);

  // labelling rule on the post-identification graph
  for (auto& [x, y, l] : g.edges()) {
    bool has11 = x == v11 || y == v11;
    bool has00 = x == v00 || y == v00;
    if (has11 && has00) g.set_edge_label(x, y, 6);
    else if (has11) g.set_edge_label(x, y, 4);
    else if (has00 && (x == v10 || y == v10 || x == v01 || y == v01))
      g.set_edge_label(x, y, 4);
    else g.set_edge_label(x, y, 2);
  }
  return g;
}

std::string to_dot(const LabelledGraph& g) {
  std::ostringstream os;
  os << "graph lambda {\n";
  for (auto& v : g.vertices()) {
    os << "  \"" << v << "\"";
    int l = g.vertex_label(v);
    if (l) os << " [label=\"" << v << " (" << l << ")\"]";
    os << ";\n";
  }
  for (auto& [a, b, l] : g.edges())
    os << "  \"" << a << "\" -- \"" << b << "\" [label=\"" << l << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace staudt
