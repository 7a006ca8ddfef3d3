#pragma once

#include "staudt/gadgets.hpp"
#include "staudt/slp.hpp"

namespace staudt {

/// A^f: one gadget copy per DAG node, inputs x1..xn shared by name.
FunctionalArrangement compile_poly(const Slp& slp);

/// A^Sigma: per-equation functional arrangements over shared input points,
/// with every output point identified with v00 (forcing the value 0).
/// Identified outputs are dropped from the marking; their rules become
/// incidences on v00 checked at realization time.
struct CompiledSystem {
  BasedArrangement arr;
  std::vector<std::string> inputs;  // x1..xn
  std::vector<PropagationRule> schedule;
  PolySystem system;
  /// pre-merge names of the per-equation output points, all now = v00
  std::vector<std::string> merged_outputs;

  FunctionalArrangement as_functional() const;  // empty output marking
};

CompiledSystem compile_system(const PolySystem& sys);

struct CandidateRealization {
  Realization realization;
  std::vector<std::pair<std::string, std::string>> violations;
};

/// Propagates without the solution precheck; solutions of the system are
/// exactly the inputs with no violated incidences.
CandidateRealization realize_candidate(const CompiledSystem& cs,
                                       const std::vector<RingElement>& x);

/// geo = tau^{-1}: checks F(x) = 0 by SLP evaluation, then propagates and
/// verifies every incidence. Throws NotASolution.
Realization geo(const CompiledSystem& cs, const std::vector<RingElement>& x);

/// tau: input projection of a finite based realization.
std::vector<RingElement> tau(const CompiledSystem& cs, const Realization& r);

/// Zero-fiber test for constant-free systems: every non-T line realizes to
/// one of L_x, L_y, L_d
/// and every non-T point to one of (0,0), (0,inf), (inf,0), (inf,inf).
bool check_zero_fiber(const BasedArrangement& a, const Realization& r);

} // namespace staudt
