#include "staudt/represent.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace staudt {

namespace {

std::array<Rat, 3> rational_vector(const Triple& t, const std::string& what) {
  if (t[0].ring()->kind != RingKind::Rationals)
    throw StructureError(what + " requires rational coordinates");
  return {t[0].rational(), t[1].rational(), t[2].rational()};
}

ProjMat eta(const std::array<Rat, 3>& v, const std::string& what) {
  Rat phi = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (phi == 0) throw StructureError(what + ": isotropic vector");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.m[i][j] = -2 * v[i] * v[j];
    m.m[i][i] += phi;
  }
  return ProjMat(m);
}

} // namespace

ProjMat involution_about_point(const ProjPoint& p) {
  return eta(rational_vector(p.c, "involution_about_point"), "involution_about_point");
}

ProjMat reflection_in_line(const ProjLine& l) {
  return eta(rational_vector(l.c, "reflection_in_line"), "reflection_in_line");
}

ProjMat order3_rotation() {
  Mat3 m;
  m.m[1][0] = 1;  // e1 -> e2
  m.m[2][1] = 1;  // e2 -> e3
  m.m[0][2] = 1;  // e3 -> e1
  return ProjMat(m);
}

ProjPoint neutral_fixed_point(const ProjMat& m) {
  // for an involution eta(v), the -phi eigenspace is spanned by v: recover it
  // as a column of M - lambda I where lambda is the repeated eigenvalue
  const Mat3& a = m.canonical();
  if (!ProjMat(a * a).is_identity())
    throw StructureError("neutral_fixed_point expects a projective involution");
  // trace(eta) = 3phi - 2phi = phi; with canonical scaling eta = s(phi I - 2vv^T),
  // the line eigenvalue is s*phi = trace(a); subtracting it isolates v
  Rat lam = a.m[0][0] + a.m[1][1] + a.m[2][2];
  Mat3 d = a - Mat3::identity() * lam;
  auto r = ring_q();
  for (int j = 0; j < 3; ++j) {
    std::array<Rat, 3> col{d.m[0][j], d.m[1][j], d.m[2][j]};
    if (col[0] != 0 || col[1] != 0 || col[2] != 0)
      return make_point(RingElement(r, col[0]), RingElement(r, col[1]),
                        RingElement(r, col[2]));
  }
  throw StructureError("neutral_fixed_point: degenerate involution");
}

const ProjMat& Representation::image(const std::string& g) const {
  auto it = images.find(g);
  if (it == images.end()) throw StructureError("representation misses generator " + g);
  return it->second;
}

ProjMat Representation::eval(const Word& w) const {
  ProjMat acc;  // identity
  for (auto& [g, e] : w.syls) {
    const ProjMat& m = image(g);
    ProjMat p = e > 0 ? m : m.inverse();
    for (int k = 0; k < std::abs(e); ++k) acc = acc * p;
  }
  return acc;
}

Representation alg(const Realization& psi, const BasedArrangement& a, const LabelledGraph& lambda,
                   PresKind kind) {
  if (psi.ring->kind != RingKind::Rationals)
    throw StructureError("alg is restricted to rational realizations");
  if (!is_based_realization(a, psi)) throw StructureError("alg requires a based realization");
  for (auto& [n, p] : psi.points)
    if (!is_anisotropic(p)) throw StructureError("isotropic point " + n);
  for (auto& [n, l] : psi.lines)
    if (!is_anisotropic(l)) throw StructureError("isotropic line " + n);

  Representation rep;
  switch (kind) {
    case PresKind::Shephard: rep.pres = shephard_presentation(lambda); break;
    case PresKind::Artin: rep.pres = artin_presentation(lambda); break;
    case PresKind::Coxeter: rep.pres = coxeter_presentation(lambda); break;
    default: throw StructureError("alg emits coxeter/artin/shephard representations");
  }
  const std::string v11 = a.of("v11");
  for (auto& v : lambda.vertices()) {
    if (v == v11) {
      rep.images.emplace(v, order3_rotation());
    } else if (psi.points.count(v)) {
      rep.images.emplace(v, involution_about_point(psi.point(v)));
    } else {
      rep.images.emplace(v, reflection_in_line(psi.line(v)));
    }
  }
  return rep;
}

Representation omega_flip(const Representation& rep, const std::string& v11_vertex) {
  Representation r = rep;
  auto it = r.images.find(v11_vertex);
  if (it == r.images.end()) throw StructureError("omega_flip: no generator " + v11_vertex);
  it->second = it->second.inverse();
  return r;
}

std::vector<RelationReport> verify_relations(const Representation& rep) {
  std::vector<RelationReport> out;
  for (auto& rel : rep.pres.relations) {
    bool ok = rep.eval(rel.lhs) == rep.eval(rel.rhs);
    out.push_back({rel.tag, ok});
  }
  for (auto& [g, k] : rep.pres.torsion) {
    bool ok = rep.eval(Word::power(g, k)).is_identity();
    out.push_back({"ord[" + g + "]:" + std::to_string(k), ok});
  }
  return out;
}

bool all_relations_hold(const Representation& rep) {
  for (auto& r : verify_relations(rep))
    if (!r.ok) return false;
  return true;
}

std::optional<int> projective_order(const ProjMat& m, int bound) {
  if (bound < 1) throw StructureError("order bound must be >= 1");
  ProjMat acc = m;
  for (int k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

bool is_nondegenerate(const Representation& rep, const LabelledGraph& lambda) {
  for (auto& v : lambda.vertices())
    if (rep.image(v).is_identity()) return false;
  for (auto& [a, b, eps] : lambda.edges()) {
    int da = lambda.vertex_label(a), db = lambda.vertex_label(b);
    int want = (da == 2 && db == 2) ? eps : eps / 2;
    auto ord = projective_order(rep.image(a) * rep.image(b), std::max(want + 1, 12));
    if (!ord || *ord != want) return false;
  }
  return true;
}

std::optional<long> group_closure(const Representation& rep, long cap) {
  if (cap < 1) throw StructureError("cap must be >= 1");
  std::vector<ProjMat> gens;
  for (auto& g : rep.pres.generators) gens.push_back(rep.image(g));
  std::unordered_set<ProjMat, ProjMatHash> seen;
  std::vector<ProjMat> queue{ProjMat()};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    ProjMat m = queue.back();
    queue.pop_back();
    for (auto& g : gens) {
      ProjMat n = m * g;
      if (seen.insert(n).second) {
        if ((long)seen.size() > cap) return std::nullopt;
        queue.push_back(n);
      }
    }
  }
  return (long)seen.size();
}

int centralizer_dim(const Representation& rep) {
  // so(3) coordinates (a,b,c) <-> [[0,a,b],[-a,0,c],[-b,-c,0]]
  auto antisym = [](const Rat& a, const Rat& b, const Rat& c) {
    Mat3 x;
    x.m[0][1] = a; x.m[0][2] = b; x.m[1][2] = c;
    x.m[1][0] = -a; x.m[2][0] = -b; x.m[2][1] = -c;
    return x;
  };
  std::array<Mat3, 3> basis = {antisym(1, 0, 0), antisym(0, 1, 0), antisym(0, 0, 1)};
  QMatrix sys(0, 3);
  for (auto& g : rep.pres.generators) {
    const Mat3& m = rep.image(g).canonical();
    std::array<Mat3, 3> comm;
    for (int k = 0; k < 3; ++k) comm[k] = m * basis[k] - basis[k] * m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::vector<Rat> row(3);
        for (int k = 0; k < 3; ++k) row[k] = comm[k].m[i][j];
        sys.append_row(row);
      }
  }
  return 3 - sys.rank();
}

bool is_stable(const Realization& psi, const std::array<std::string, 4>& w_names) {
  std::array<std::array<Rat, 3>, 4> w;
  for (int i = 0; i < 4; ++i)
    w[i] = rational_vector(psi.point(w_names[i]).c, "is_stable");
  for (int drop = 0; drop < 4; ++drop) {
    Mat3 m;
    int r = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == drop) continue;
      for (int j = 0; j < 3; ++j) m.m[r][j] = w[i][j];
      ++r;
    }
    if (m.det() == 0) return false;
  }
  return true;
}

} // namespace staudt
