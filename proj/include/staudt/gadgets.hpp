#pragma once

#include "staudt/arrangement.hpp"
#include "staudt/projective.hpp"

#include <optional>

namespace staudt {

struct PropagationRule {
  enum class Kind { Input, Base, Join, Meet };
  Kind kind;
  std::string target;
  int input_index = -1;     // Input: 0-based position in the marking
  std::string arg1, arg2;   // Join: points; Meet: lines

  static PropagationRule input(std::string target, int index) {
    return {Kind::Input, std::move(target), index, "", ""};
  }
  /// Base rule pinning `target` to phi_T of the triangle element `t_elem`
  /// (arg1); t_elem defaults to the target name itself.
  static PropagationRule base(std::string target, std::string t_elem = "") {
    if (t_elem.empty()) t_elem = target;
    return {Kind::Base, std::move(target), -1, std::move(t_elem), ""};
  }
  static PropagationRule join_rule(std::string target, std::string a, std::string b) {
    return {Kind::Join, std::move(target), -1, std::move(a), std::move(b)};
  }
  static PropagationRule meet_rule(std::string target, std::string a, std::string b) {
    return {Kind::Meet, std::move(target), -1, std::move(a), std::move(b)};
  }
};

struct FunctionalArrangement {
  MarkedArrangement marked;
  std::vector<PropagationRule> schedule;  // covers every element exactly once

  const Arrangement& arr() const { return marked.based.arr; }
  /// Checks coverage, ordering (arguments precede targets) and sort of targets.
  void validate() const;
};

/// Assignment of homogeneous coordinates to every element over one ring.
struct Realization {
  RingPtr ring;
  std::map<std::string, ProjPoint> points;
  std::map<std::string, ProjLine> lines;

  const ProjPoint& point(const std::string& n) const;
  const ProjLine& line(const std::string& n) const;
};

/// The standard realization phi_T of the triangle element named by t_elem.
Triple standard_triple(const RingPtr& r, const std::string& t_elem);
/// phi_T on all of T (keys are canonical triangle names).
Realization standard_realization(const RingPtr& r);

/// Checks every incidence of `a` under `psi`; returns the violating pairs.
std::vector<std::pair<std::string, std::string>> violated_incidences(const Arrangement& a,
                                                                     const Realization& psi);
/// True when the canonical embedding carries phi_T.
bool is_based_realization(const BasedArrangement& a, const Realization& psi);

// The von Staudt gadgets. Inputs/outputs sit on l_x; every schedule step
// passes the cross-product test over any commutative ring.
FunctionalArrangement gadget_mul();           // (a,b) -> ab
FunctionalArrangement gadget_add();           // (a,b) -> a+b
FunctionalArrangement gadget_sub();           // (x,y) -> x-y, inputs (minuend, subtrahend)
FunctionalArrangement gadget_const(int sign); // +1 -> f(z)=1, -1 -> f(z)=-1
/// The triangle itself as a schedule-only arrangement (no markings).
FunctionalArrangement triangle_functional();

/// A^h = A^f *_{p_k == w0} A^g defining h = f(..., g(x), ...) where k is the
/// 1-based index of the f-input replaced by g's single output. Inputs of the
/// result: g's inputs, then f's remaining inputs.
FunctionalArrangement compose(const FunctionalArrangement& f, const FunctionalArrangement& g,
                              int input_index);

/// Identifies input j into input i (1-based), shrinking the marking.
FunctionalArrangement identify_inputs(const FunctionalArrangement& f, int i, int j);

/// Runs a schedule over the inputs' ring; used by propagate and the system
/// geometrizer. Does not verify incidences.
Realization run_schedule(const std::vector<PropagationRule>& schedule,
                         const std::vector<RingElement>& inputs, const RingPtr& ring);

/// Pi^{-1}: executes the schedule at the given input values and verifies all
/// incidences. Throws DependentElements / IncidenceViolation.
Realization propagate(const FunctionalArrangement& fa, const std::vector<RingElement>& inputs);
Realization propagate(const FunctionalArrangement& fa, const std::vector<RingElement>& inputs,
                      const RingPtr& ring);  // for empty input lists

/// Pi: affine x-coordinates of the input points. Throws InfiniteMarkedPoint.
std::vector<RingElement> project_inputs(const FunctionalArrangement& fa, const Realization& r);
/// Delta: affine x-coordinates of the output points.
std::vector<RingElement> read_outputs(const FunctionalArrangement& fa, const Realization& r);

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::vector<RingElement> symbolic_outputs;  // over Q(x1..xn) when propagation succeeded
  std::string str() const;
};

/// Propagates symbolically over Q(x1..xn) and checks, at the generic point,
/// that all incidences hold, that finite inputs give finite outputs, and
/// that the input projection inverts the propagation; also checks schedule
/// coverage.
VerifyReport verify_functional(const FunctionalArrangement& fa);

} // namespace staudt
