#include "staudt/deform.hpp"

namespace staudt {

Mat3 So3::matrix() const {
  Mat3 x;
  x.m[0][1] = a; x.m[0][2] = b; x.m[1][2] = c;
  x.m[1][0] = -a; x.m[2][0] = -b; x.m[2][1] = -c;
  return x;
}

So3 So3::from_matrix(const Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    if (m.m[i][i] != 0) throw StructureError("matrix is not antisymmetric");
    for (int j = i + 1; j < 3; ++j)
      if (m.m[i][j] != -m.m[j][i]) throw StructureError("matrix is not antisymmetric");
  }
  return So3{m.m[0][1], m.m[0][2], m.m[1][2]};
}

So3 ad(const ProjMat& m, const So3& x) {
  const Mat3& a = m.canonical();
  return So3::from_matrix(a * x.matrix() * a.inverse());
}

namespace {

// Ad as a 3x3 rational matrix in the (a,b,c) coordinates.
Mat3 ad_matrix(const ProjMat& m) {
  Mat3 out;
  for (int k = 0; k < 3; ++k) {
    So3 e{Rat(k == 0), Rat(k == 1), Rat(k == 2)};
    So3 img = ad(m, e);
    out.m[0][k] = img.a;
    out.m[1][k] = img.b;
    out.m[2][k] = img.c;
  }
  return out;
}

struct WordOperator {
  // xi(word) = sum_g L_g xi(g): one 3x3 block per generator
  std::map<std::string, Mat3> blocks;

  void add(const std::string& g, const Mat3& coef) {
    auto it = blocks.find(g);
    if (it == blocks.end()) blocks.emplace(g, coef);
    else it->second = it->second + coef;
  }
};

// Accumulates the linear operator of the extension rule along a word.
WordOperator word_operator(const Representation& rep, const Word& w) {
  WordOperator op;
  Mat3 prefix = Mat3::identity();  // Ad of the processed prefix
  for (auto& [g, e] : w.syls) {
    Mat3 adg = ad_matrix(rep.image(g));
    Mat3 adginv = ad_matrix(rep.image(g).inverse());
    int reps = std::abs(e);
    for (int k = 0; k < reps; ++k) {
      if (e > 0) {
        op.add(g, prefix);
        prefix = prefix * adg;
      } else {
        // xi(g^-1) = -Ad(g^-1) xi(g)
        op.add(g, (prefix * adginv) * Rat(-1));
        prefix = prefix * adginv;
      }
    }
  }
  return op;
}

std::array<Rat, 3> apply_block(const Mat3& m, const So3& x) {
  return m.apply({x.a, x.b, x.c});
}

} // namespace

So3 evaluate_cocycle(const Representation& rep, const Cocycle& xi, const Word& w) {
  WordOperator op = word_operator(rep, w);
  So3 acc{Rat(0), Rat(0), Rat(0)};
  for (auto& [g, coef] : op.blocks) {
    auto it = xi.values.find(g);
    if (it == xi.values.end()) throw StructureError("cocycle misses generator " + g);
    auto v = apply_block(coef, it->second);
    acc.a += v[0];
    acc.b += v[1];
    acc.c += v[2];
  }
  return acc;
}

bool is_cocycle(const Presentation& pres, const Representation& rep, const Cocycle& xi) {
  for (auto& rel : pres.relations) {
    So3 l = evaluate_cocycle(rep, xi, rel.lhs);
    So3 r = evaluate_cocycle(rep, xi, rel.rhs);
    if (!(l.a == r.a && l.b == r.b && l.c == r.c)) return false;
  }
  for (auto& [g, k] : pres.torsion)
    if (!evaluate_cocycle(rep, xi, Word::power(g, k)).is_zero()) return false;
  return true;
}

Cocycle coboundary(const Representation& rep, const So3& theta) {
  Cocycle xi;
  for (auto& g : rep.pres.generators) {
    So3 t = ad(rep.image(g), theta);
    xi.values[g] = So3{t.a - theta.a, t.b - theta.b, t.c - theta.c};
  }
  return xi;
}

namespace {

int gen_index(const std::vector<std::string>& gens, const std::string& g) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == g) return (int)i;
  throw StructureError("relation references unknown generator " + g);
}

// 3 rows per relation over unknowns (xi(g))_g stacked as 3 each.
QMatrix relation_system(const Presentation& pres, const Representation& rep) {
  int n = (int)pres.generators.size();
  QMatrix sys(0, 3 * n);
  auto emit = [&](const std::map<std::string, Mat3>& blocks) {
    for (int r = 0; r < 3; ++r) {
      std::vector<Rat> row(3 * n, Rat(0));
      for (auto& [g, m] : blocks) {
        int gi = gen_index(pres.generators, g);
        for (int c = 0; c < 3; ++c) row[3 * gi + c] = m.m[r][c];
      }
      sys.append_row(row);
    }
  };
  for (auto& rel : pres.relations) {
    WordOperator l = word_operator(rep, rel.lhs);
    WordOperator r = word_operator(rep, rel.rhs);
    std::map<std::string, Mat3> diff = l.blocks;
    for (auto& [g, m] : r.blocks) {
      auto it = diff.find(g);
      if (it == diff.end()) diff.emplace(g, m * Rat(-1));
      else it->second = it->second - m;
    }
    emit(diff);
  }
  for (auto& [g, k] : pres.torsion)
    emit(word_operator(rep, Word::power(g, k)).blocks);
  return sys;
}

} // namespace

std::vector<Cocycle> cocycle_space(const Presentation& pres, const Representation& rep) {
  for (auto& rel : pres.relations)
    if (!(rep.eval(rel.lhs) == rep.eval(rel.rhs)))
      throw StructureError("representation violates relation " + rel.tag);
  for (auto& [g, k] : pres.torsion)
    if (!rep.eval(Word::power(g, k)).is_identity())
      throw StructureError("representation violates torsion at " + g);

  QMatrix sys = relation_system(pres, rep);
  auto basis = sys.kernel_basis();
  std::vector<Cocycle> out;
  for (auto& v : basis) {
    Cocycle xi;
    for (size_t i = 0; i < pres.generators.size(); ++i)
      xi.values[pres.generators[i]] = So3{v[3 * i], v[3 * i + 1], v[3 * i + 2]};
    out.push_back(std::move(xi));
  }
  return out;
}

CohomologyDims h0_h1_dims(const Presentation& pres, const Representation& rep) {
  Representation r = rep;
  r.pres = pres;
  int z1 = (int)cocycle_space(pres, rep).size();
  int h0 = centralizer_dim(r);
  int b1 = 3 - h0;
  return CohomologyDims{h0, z1, b1, z1 - b1};
}

bool restrict_is_coboundary(const Presentation& pres, const Representation& rep,
                            const Cocycle& xi, const std::vector<std::string>& subgens) {
  if (!is_cocycle(pres, rep, xi)) throw StructureError("xi is not a cocycle");
  QMatrix sys(0, 3);
  std::vector<Rat> rhs;
  for (auto& g : subgens) {
    Mat3 m = ad_matrix(rep.image(g)) - Mat3::identity();
    auto it = xi.values.find(g);
    if (it == xi.values.end()) throw StructureError("cocycle misses generator " + g);
    for (int r = 0; r < 3; ++r) {
      std::vector<Rat> row{m.m[r][0], m.m[r][1], m.m[r][2]};
      sys.append_row(row);
    }
    rhs.push_back(it->second.a);
    rhs.push_back(it->second.b);
    rhs.push_back(it->second.c);
  }
  return sys.solve(rhs, nullptr);
}

} // namespace staudt
