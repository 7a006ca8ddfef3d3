#pragma once

#include "staudt/represent.hpp"

namespace staudt {

/// Element of so(3) stored as the antisymmetric matrix [[0,a,b],[-a,0,c],[-b,-c,0]].
struct So3 {
  Rat a, b, c;
  Mat3 matrix() const;
  static So3 from_matrix(const Mat3& m);  // checks antisymmetry
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
};

/// Ad(rho(g)) X = M X M^{-1}; well defined on projective classes and
/// preserves antisymmetry for scalar-orthogonal representatives.
So3 ad(const ProjMat& m, const So3& x);

/// Twisted cocycle: one so(3) value per generator, extended by
/// xi(uv) = xi(u) + Ad(rho(u)) xi(v), xi(g^-1) = -Ad(rho(g))^-1 xi(g).
struct Cocycle {
  std::map<std::string, So3> values;
};

/// Value of the extension on a word.
So3 evaluate_cocycle(const Representation& rep, const Cocycle& xi, const Word& w);

bool is_cocycle(const Presentation& pres, const Representation& rep, const Cocycle& xi);

/// delta-theta: g -> Ad(rho(g)) theta - theta.
Cocycle coboundary(const Representation& rep, const So3& theta);

/// Exact basis of Z^1(pres, ad rho). Requires verify_relations to pass.
std::vector<Cocycle> cocycle_space(const Presentation& pres, const Representation& rep);

struct CohomologyDims {
  int h0, z1, b1, h1;
};

/// h0 = centralizer dim, b1 = 3 - h0, h1 = z1 - b1.
CohomologyDims h0_h1_dims(const Presentation& pres, const Representation& rep);

/// True when xi restricted to the listed generators is a coboundary:
/// exists theta with xi(g) = Ad(rho(g)) theta - theta for each listed g.
bool restrict_is_coboundary(const Presentation& pres, const Representation& rep,
                            const Cocycle& xi, const std::vector<std::string>& subgens);

} // namespace staudt
