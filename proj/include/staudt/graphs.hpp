#pragma once

#include "staudt/arrangement.hpp"

#include <optional>

namespace staudt {

/// Simple labelled graph: edge labels >= 2, vertex labels in {0,2,3,...}
/// (0 = unlabelled / infinite order).
class LabelledGraph {
public:
  int add_vertex(const std::string& name, int label = 0);
  void add_edge(const std::string& a, const std::string& b, int label);
  void set_edge_label(const std::string& a, const std::string& b, int label);

  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex_label(const std::string& v) const;
  bool has_vertex(const std::string& v) const { return index_.count(v); }
  std::optional<int> edge_label(const std::string& a, const std::string& b) const;
  /// Edges as (a, b, label) with a before b in vertex order.
  std::vector<std::tuple<std::string, std::string, int>> edges() const;
  size_t edge_count() const { return edges_.size(); }

private:
  std::vector<std::string> vertices_;
  std::map<std::string, int> index_;
  std::vector<int> labels_;
  std::map<std::pair<int, int>, int> edges_;
  std::pair<int, int> key(const std::string& a, const std::string& b) const;
};

/// The graph Lambda of a based arrangement: v00 ~ l_inf, vx ~ l_y, vy ~ l_x,
/// edges from the incidences plus [v10,v00], [v01,v00], [v11,v00]; labels
/// 6 on [v11,v00], 4 on the other added edges and all edges at v11, 2
/// elsewhere; vertex labels 3 at v11, 2 elsewhere.
LabelledGraph build_lambda(const BasedArrangement& a);

std::string to_dot(const LabelledGraph& g);

} // namespace staudt
