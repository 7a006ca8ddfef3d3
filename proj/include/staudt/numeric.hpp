#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace staudt {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DescriptorMismatch : Error { using Error::Error; };
struct NonUnit : Error { using Error::Error; };
struct DependentElements : Error { using Error::Error; };
struct IncidenceViolation : Error { using Error::Error; };
struct NotASolution : Error { using Error::Error; };
struct InfiniteMarkedPoint : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct StructureError : Error { using Error::Error; };

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q" with arbitrary precision.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

} // namespace staudt
