#pragma once

#include "staudt/graphs.hpp"

namespace staudt {

/// Group word as (generator, exponent) syllables, exponent != 0.
struct Word {
  std::vector<std::pair<std::string, int>> syls;

  static Word empty() { return {}; }
  static Word gen(const std::string& g, int e = 1) { return {{{g, e}}}; }
  /// g h g h ... with `count` letters.
  static Word alternating(const std::string& g, const std::string& h, int count);
  static Word power(const std::string& g, int k) { return {{{g, k}}}; }

  Word& append(const std::string& g, int e);
  Word operator*(const Word& o) const;
  std::string str() const;
};

struct Relation {
  Word lhs, rhs;
  std::string tag;  // e.g. "artin[v,w]:4"
};

enum class PresKind { Coxeter, Artin, Shephard, ExtendedArtin };

struct Presentation {
  PresKind kind = PresKind::Artin;
  std::vector<std::string> generators;
  std::vector<Relation> relations;               // pairs of words
  std::vector<std::pair<std::string, int>> torsion;  // g^k = 1
};

Presentation artin_presentation(const LabelledGraph& g);
Presentation coxeter_presentation(const LabelledGraph& g);
Presentation shephard_presentation(const LabelledGraph& g);
/// Requires every edge label in {2, 4} (no edge = infinity); labels 3 and 6
/// have no Cartan entries here and raise an error.
Presentation extended_artin_presentation(const LabelledGraph& g);

/// Quadratic Lie-algebra presentation: [X_i, X_j] = 0 for finite even edge labels,
/// X_i = X_j for finite odd ones.
struct MalcevPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> commuting;
  std::vector<std::pair<std::string, std::string>> identified;
};

MalcevPresentation malcev_presentation(const LabelledGraph& g);

std::string to_text(const Presentation& p);
std::string to_text(const MalcevPresentation& p);

} // namespace staudt
