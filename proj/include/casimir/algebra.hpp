#ifndef CASIMIR_ALGEBRA_HPP
#define CASIMIR_ALGEBRA_HPP

#include <vector>

#include "casimir/errors.hpp"
#include "casimir/weights.hpp"

namespace casimir {

/// The gl(m/n) truncation: generator indices run -m+1..n, with parity <i> = 0
/// for i <= 0 and 1 for i >= 1. gl(m/inf) exists only as a computation
/// strategy over stabilized truncations, never as a signature.
struct AlgebraSignature {
  int m = 1;
  int n = 0;

  AlgebraSignature() = default;
  AlgebraSignature(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 0) throw InternalError("bad signature gl(" + std::to_string(m) + "/" + std::to_string(n) + ")");
  }

  int min_index() const { return -m + 1; }
  int max_index() const { return n; }
  int index_count() const { return m + n; }
  bool contains(int i) const { return i >= min_index() && i <= max_index(); }

  /// Parity of an index; the index must not fall below -m+1.
  int grading(int i) const {
    if (i < min_index()) {
      throw IndexBelowRange("index " + std::to_string(i) + " in gl(" + std::to_string(m) + "/" +
                            std::to_string(n) + ")");
    }
    return index_grading(i);
  }

  /// Parity of the generator E_ij.
  int generator_parity(int i, int j) const { return (grading(i) + grading(j)) % 2; }

  // Internal 0-based position of an index (storage offset m-1).
  int to_pos(int i) const { return i + m - 1; }
  int to_index(int pos) const { return pos - m + 1; }

  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) = default;
};

/// One term of a formal integer combination of generators E_ij.
struct GeneratorTerm {
  long coeff;
  int i;
  int j;
  friend bool operator==(const GeneratorTerm&, const GeneratorTerm&) = default;
};

/// The right-hand side of the supercommutator relation
///   [[E_ij, E_kl]] = d_jk E_il - (-1)^{(<i>+<j>)(<k>+<l>)} d_il E_kj
/// as a formal combination (zero, one, or two terms; like terms merged).
std::vector<GeneratorTerm> structure_supercommutator(const AlgebraSignature& sig, int i, int j,
                                                     int k, int l);

}  // namespace casimir

#endif  // CASIMIR_ALGEBRA_HPP
