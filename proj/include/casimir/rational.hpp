#ifndef CASIMIR_RATIONAL_HPP
#define CASIMIR_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <string>
#include <string_view>

#include "casimir/errors.hpp"

namespace Eigen {

// Exact rational scalar for Eigen containers. All arithmetic is exact;
// epsilon and dummy_precision are zero so nothing is ever rounded away.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace casimir {

using Rational = mpq_class;
using BigInt = mpz_class;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using SparseRationalMatrix = Eigen::SparseMatrix<Rational>;

/// Renders a rational in canonical form: "p/q" with q > 0, "p" when q = 1.
inline std::string rational_to_string(const Rational& x) { return x.get_str(); }

/// Parses "p" or "p/q"; the result is canonicalized (gcd reduced, q > 0).
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (c != '-' && c != '/' && (c < '0' || c > '9')) {
      throw ParseError("bad character in rational literal '" + std::string(text) + "'");
    }
  }
  Rational x;
  if (x.set_str(std::string(text), 10) != 0) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  if (x.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  x.canonicalize();
  return x;
}

/// Drops stored exact zeros from a sparse matrix in place.
inline void prune_zeros(SparseRationalMatrix& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
}

}  // namespace casimir

#endif  // CASIMIR_RATIONAL_HPP
