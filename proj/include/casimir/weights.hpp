#ifndef CASIMIR_WEIGHTS_HPP
#define CASIMIR_WEIGHTS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

/// Parity of an index: 0 for i <= 0, 1 for i >= 1.
inline int index_grading(int i) { return i <= 0 ? 0 : 1; }

/// A finitely supported integer weight of gl(m/n) (or gl(m/inf)), indexed
/// from -m+1 upward. Entries are stored sparsely with no explicit zeros, so
/// two weights are equal iff their stored maps are identical. Values may be
/// negative (the type doubles as a formal weight difference, e.g. operator
/// weight shifts); module weights built through `make` are non-negative.
///
/// Ordering is graded-lexicographic: first by total degree, then entry by
/// entry from index -m+1 upward with the larger entry sorting first. Under
/// this order the highest weight of a cyclic highest-weight module is the
/// first weight of its module.
class Weight {
 public:
  /// The zero weight for signature m.
  explicit Weight(int m);

  /// Builds a module weight from the paper's two blocks: `nonpos` lists
  /// entries at indices -m+1..0 in order, `pos` lists indices 1..k.
  /// Entries must be non-negative; dominance (entry(i) >= entry(i+1) for
  /// every i != 0) is required unless `relaxed` is set.
  static Weight make(int m, const std::vector<long>& nonpos, const std::vector<long>& pos,
                     bool relaxed = false);

  /// epsilon_i: the weight with a single entry 1 at `index`.
  static Weight unit(int m, int index);

  /// Parses the textual form "a_{-m+1},...,a_0;b_1,...,b_k" (m inferred from
  /// the left block). Same validation as `make`.
  static Weight parse(std::string_view text, bool relaxed = false);

  int m() const { return m_; }
  int min_index() const { return -m_ + 1; }
  long entry(int index) const;
  /// Largest positive index with a non-zero entry; 0 if none.
  int k() const;
  /// Largest index with a non-zero entry; min_index()-1 for the zero weight.
  int support_bound() const;
  /// Sum of all entries.
  long degree() const;
  const std::vector<std::pair<int, long>>& support() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  bool all_nonnegative() const;
  bool is_dominant() const;
  /// Membership in D_n^+: all entries non-negative integers and dominant.
  bool in_Dn_plus() const { return all_nonnegative() && is_dominant(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.m_ == b.m_ && a.entries_ == b.entries_;
  }
  /// Graded-lex comparison; requires equal m.
  static int compare(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b) { return compare(a, b) < 0; }

  /// "2,1;3,1" style rendering (non-positive block always m entries long).
  std::string str() const;

 private:
  void set_entry(int index, long value);
  int m_;
  std::vector<std::pair<int, long>> entries_;  // sorted by index, no zeros
};

/// The bilinear form: sum over i <= 0 of a_i b_i minus sum over i >= 1 of
/// a_i b_i. Both weights must share m.
Rational bilinear(const Weight& a, const Weight& b);

/// (lambda, lambda + 2 rho) evaluated in closed form,
/// sum_i [(-1)^{<i>} l_i (l_i + 1 - 2i) - 2m l_i];
/// rho itself has infinite support and is never materialized.
Rational pairing_with_2rho(const Weight& lambda);

}  // namespace casimir

#endif  // CASIMIR_WEIGHTS_HPP
