#pragma once

#include "staudt/poly.hpp"
#include "staudt/ring.hpp"

#include <optional>
#include <vector>

namespace staudt {

/// Straight-line program node. Children precede parents in the node list.
struct SlpNode {
  enum class Op { Var, One, NegOne, Add, Sub, Mul };
  Op op;
  int a = -1, b = -1;  // operand node indices
  int var = -1;        // Var only, 0-based
};

/// One polynomial as a DAG; the node order is a topological order.
struct Slp {
  std::vector<SlpNode> nodes;
  int root = -1;
  int nvars = 0;
  void validate() const;
};

struct PolySystem {
  std::vector<Slp> slps;
  int nvars = 0;
};

/// Grammar: equations 'expr = 0' separated by ';'.
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := 'x'INT | INT | '(' expr ')' | '-' factor.
/// Parenthesization is preserved; integer literals >= 2 expand by
/// double-and-add over one/neg_one; the literal 0 is rejected.
PolySystem parse_system(const std::string& text);

RingElement eval_slp(const Slp& slp, const std::vector<RingElement>& xs);

/// Expands the DAG into a dense polynomial (integer coefficients).
Poly expand_slp(const Slp& slp);

/// Weight of each polynomial when all are weighted-homogeneous for the given
/// positive weights, i.e. f(t^{w_1} x_1, ...) = t^{u} f(x); absent otherwise.
std::optional<std::vector<long>> is_weighted_homogeneous(const std::vector<Poly>& polys,
                                                         const std::vector<int>& weights);

} // namespace staudt
