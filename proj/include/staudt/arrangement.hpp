#pragma once

#include "staudt/numeric.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace staudt {

/// Bipartite point-line incidence structure. Element names are unique across
/// both sorts; incidences are stored in insertion order without duplicates.
class Arrangement {
public:
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::string>& lines() const { return lines_; }
  const std::vector<std::pair<std::string, std::string>>& incidences() const {
    return incidences_;
  }

  bool has_point(const std::string& n) const { return point_set_.count(n); }
  bool has_line(const std::string& n) const { return line_set_.count(n); }
  bool has_element(const std::string& n) const { return has_point(n) || has_line(n); }

  void add_point(const std::string& n);
  void add_line(const std::string& n);
  void add_incidence(const std::string& p, const std::string& l);  // dedups
  bool incident(const std::string& p, const std::string& l) const;

  int degree(const std::string& elem) const;

  /// Renames `from` into `to` (same sort, both present), merging incidences.
  void merge_elements(const std::string& from, const std::string& to);

  bool operator==(const Arrangement& o) const {
    return points_ == o.points_ && lines_ == o.lines_ && incidences_ == o.incidences_;
  }

private:
  std::vector<std::string> points_, lines_;
  std::set<std::string> point_set_, line_set_;
  std::vector<std::pair<std::string, std::string>> incidences_;
  std::set<std::pair<std::string, std::string>> incidence_set_;
};

/// Admissibility: every element incident to at least two distinct elements.
bool is_admissible(const Arrangement& a);

/// Sort- and incidence-preserving injective map.
struct Morphism {
  std::map<std::string, std::string> map;
};

void check_monomorphism(const Arrangement& from, const Arrangement& to, const Morphism& m);

/// Disjoint union of A and B with phi(c) and psi(c) identified for c in C.
/// The merged element keeps its A-side name. Non-identified name collisions
/// between A and B are an error (instantiate with fresh prefixes first).
Arrangement fiber_sum(const Arrangement& a, const Arrangement& b, const Arrangement& c,
                      const Morphism& phi, const Morphism& psi);

inline const std::vector<std::string>& triangle_point_names() {
  static const std::vector<std::string> v{"v00", "vx", "vy", "v10", "v01", "v11"};
  return v;
}
inline const std::vector<std::string>& triangle_line_names() {
  static const std::vector<std::string> v{"lx", "ly", "linf", "ld", "ly1", "lx1"};
  return v;
}

struct BasedArrangement {
  Arrangement arr;
  /// canonical embedding: standard-triangle element name -> element of arr
  std::map<std::string, std::string> base;

  const std::string& of(const std::string& t_elem) const;
  void validate() const;
};

/// The 6-point, 6-line triangle with complete bisectors and its 16 incidences.
BasedArrangement standard_triangle();

/// A x_{T u C} B: identifies the two base triangles elementwise plus phi/psi.
BasedArrangement join_based(const BasedArrangement& a, const BasedArrangement& b,
                            const Arrangement& c, const Morphism& phi, const Morphism& psi);

/// A *_{ea=eb} B for a single identified point.
BasedArrangement point_join(const BasedArrangement& a, const BasedArrangement& b,
                            const std::string& ea, const std::string& eb);

struct MarkedArrangement {
  BasedArrangement based;
  std::vector<std::string> inputs;   // nu, points on l_x, disjoint from T
  std::vector<std::string> outputs;  // mu, points on l_x
  void validate() const;
};

} // namespace staudt
