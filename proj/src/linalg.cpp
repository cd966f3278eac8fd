#include "casimir/linalg.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

// Bits in |x|; 0 for x == 0. Pivot selection key.
size_t bit_size(const BigInt& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

IntMatrix clear_denominators(const RationalMatrix& a) {
  IntMatrix b(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den().get_mpz_t());
    }
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      Rational scaled = a(r, c) * Rational(l);
      b(r, c) = scaled.get_num();  // denominator is 1 by construction
    }
  }
  return b;
}

}  // namespace

Rref rref(const RationalMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  IntMatrix m = clear_denominators(a);

  std::vector<int> pivots;
  BigInt prev = 1;
  Eigen::Index cursor = 0;
  for (Eigen::Index col = 0; col < cols && cursor < rows; ++col) {
    Eigen::Index best = -1;
    size_t best_bits = 0;
    for (Eigen::Index r = cursor; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      size_t bits = bit_size(m(r, col));
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    if (best != cursor) m.row(cursor).swap(m.row(best));
    const BigInt pivot = m(cursor, col);
    for (Eigen::Index r = cursor + 1; r < rows; ++r) {
      const BigInt factor = m(r, col);
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        BigInt t = m(r, c) * pivot - factor * m(cursor, c);
        mpz_divexact(m(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(r, col) = 0;
    }
    for (Eigen::Index c = 0; c < col; ++c) m(cursor, c) = 0;
    prev = pivot;
    pivots.push_back(static_cast<int>(col));
    ++cursor;
  }

  const int rank = static_cast<int>(pivots.size());
  RationalMatrix red(rank, cols);
  for (int r = 0; r < rank; ++r) {
    Rational inv = Rational(1) / Rational(m(r, pivots[r]));
    for (Eigen::Index c = 0; c < cols; ++c) red(r, c) = Rational(m(r, c)) * inv;
  }
  // Back substitution to the canonical reduced form.
  for (int r = rank - 1; r >= 0; --r) {
    for (int above = 0; above < r; ++above) {
      Rational factor = red(above, pivots[r]);
      if (factor == 0) continue;
      for (Eigen::Index c = pivots[r]; c < cols; ++c) {
        red(above, c) -= factor * red(r, c);
      }
    }
  }
  return Rref{std::move(red), std::move(pivots)};
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
  Rref r = rref(a);
  const Eigen::Index cols = a.cols();
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (p < r.pivots.size() && r.pivots[p] == c) {
        ++p;
      } else {
        free_cols.push_back(static_cast<int>(c));
      }
    }
  }
  RationalMatrix k(cols, static_cast<Eigen::Index>(free_cols.size()));
  k.setConstant(Rational(0));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], static_cast<Eigen::Index>(j)) = 1;
    for (int row = 0; row < r.rank(); ++row) {
      k(r.pivots[row], static_cast<Eigen::Index>(j)) = -r.mat(row, free_cols[j]);
    }
  }
  return k;
}

void SpanBuilder::reduce(RationalVector& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v(pivots_[r]);
    if (c == 0) continue;
    v -= c * rows_[r];
  }
}

bool SpanBuilder::add(RationalVector v) {
  if (v.size() != n_) throw ShapeMismatch("span vector has wrong length");
  reduce(v);
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) return false;
  v /= v(lead);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = rows_[r](lead);
    if (c != 0) rows_[r] -= c * v;
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(lead));
  size_t at = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, static_cast<int>(lead));
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

bool SpanBuilder::contains(const RationalVector& v) const {
  RationalVector w = v;
  reduce(w);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) != 0) return false;
  }
  return true;
}

RationalVector SpanBuilder::coordinates(const RationalVector& v) const {
  RationalVector c(static_cast<Eigen::Index>(rows_.size()));
  for (size_t r = 0; r < rows_.size(); ++r) c(static_cast<Eigen::Index>(r)) = v(pivots_[r]);
  RationalVector rebuilt = RationalVector::Constant(n_, Rational(0));
  for (size_t r = 0; r < rows_.size(); ++r) rebuilt += c(static_cast<Eigen::Index>(r)) * rows_[r];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (rebuilt(i) != v(i)) throw InternalError("vector lies outside the span");
  }
  return c;
}

}  // namespace casimir
