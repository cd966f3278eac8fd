#ifndef CASIMIR_LINALG_HPP
#define CASIMIR_LINALG_HPP

#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

/// Reduced row echelon form over the rationals. Forward elimination is
/// fraction-free (Bareiss) on denominator-cleared integer rows, with the
/// pivot row in each column chosen by minimal numerator bit size; back
/// substitution then produces the canonical RREF. Column order is never
/// permuted, so the result (and everything derived from it) is deterministic.
struct Rref {
  RationalMatrix mat;       // rank-many reduced rows
  std::vector<int> pivots;  // pivot column of each row, strictly increasing
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(const RationalMatrix& a);

/// Canonical basis of {x : a x = 0}, one column per free column of `a`:
/// the vector for free column f has x[f] = 1 and x[p_r] = -rref(r, f).
RationalMatrix kernel_basis(const RationalMatrix& a);

/// Incrementally maintained row span in reduced echelon form, for
/// saturation-style closures.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient_dim) : n_(ambient_dim) {}

  /// Adds a vector; returns true when the span grew.
  bool add(RationalVector v);

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return n_; }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces a copy of v by the current rows and reports whether it vanished.
  bool contains(const RationalVector& v) const;

  /// Coordinates of v in the current row basis (rows are reduced, so these
  /// are just the pivot components); throws if v lies outside the span.
  RationalVector coordinates(const RationalVector& v) const;

 private:
  void reduce(RationalVector& v) const;
  int n_;
  std::vector<RationalVector> rows_;
  std::vector<int> pivots_;
};

}  // namespace casimir

#endif  // CASIMIR_LINALG_HPP
