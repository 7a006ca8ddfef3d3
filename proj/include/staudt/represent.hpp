#pragma once

#include "staudt/gadgets.hpp"
#include "staudt/matrix.hpp"
#include "staudt/presentation.hpp"

#include <optional>

namespace staudt {

/// eta(v) = phi(v) I - 2 v v^T: the projective involution whose neutral
/// (isolated) fixed point is [v] and whose fixed line is v-perp, pointwise.
/// Requires an anisotropic rational point.
ProjMat involution_about_point(const ProjPoint& p);
ProjMat reflection_in_line(const ProjLine& l);

/// The order-3 rotation about (1,1) chosen by alg: the cyclic coordinate
/// permutation e1 -> e2 -> e3 -> e1, which maps psi(v00) to psi(vx).
ProjMat order3_rotation();

/// Neutral fixed point of a projective involution (the zeta inverse of eta).
ProjPoint neutral_fixed_point(const ProjMat& m);

struct Representation {
  Presentation pres;
  std::map<std::string, ProjMat> images;
  const ProjMat& image(const std::string& g) const;
  ProjMat eval(const Word& w) const;
};

/// Algebraization: points (except v11) map to the involution about their
/// realization, lines to the reflection in theirs, v11 to the order-3
/// rotation. The realization must be based, rational and anisotropic.
Representation alg(const Realization& psi, const BasedArrangement& a, const LabelledGraph& lambda,
                   PresKind kind = PresKind::Shephard);

/// rho_-: inverts the image of v11, fixing every other generator.
Representation omega_flip(const Representation& rep, const std::string& v11_vertex = "v11");

struct RelationReport {
  std::string tag;
  bool ok;
};
std::vector<RelationReport> verify_relations(const Representation& rep);
bool all_relations_hold(const Representation& rep);

/// Least k <= bound with M^k scalar.
std::optional<int> projective_order(const ProjMat& m, int bound = 12);

/// Generator images nontrivial; edge products of exactly the prescribed
/// orders: eps(e) if both vertex labels are 2, eps(e)/2 otherwise.
bool is_nondegenerate(const Representation& rep, const LabelledGraph& lambda);

/// Breadth-first closure of the generator images; absent when it exceeds cap.
std::optional<long> group_closure(const Representation& rep, long cap);

/// dim of {X in so(3) : [X, rho(g)] = 0 for all generators} (= dim H^0).
int centralizer_dim(const Representation& rep);

/// Mumford stability for the weighted quotient: no three of the four
/// distinguished triangle points
/// {v00, vx, vy, v11} collinear. Keys default to the canonical names.
bool is_stable(const Realization& psi,
               const std::array<std::string, 4>& w_names = {"v00", "vx", "vy", "v11"});

} // namespace staudt
