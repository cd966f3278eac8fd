#ifndef CASIMIR_SUPERSPACE_HPP
#define CASIMIR_SUPERSPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/weights.hpp"

namespace casimir {

// Sign convention for tensor actions, used throughout this module and
// everything built on top of it:
//
//     (x (x) y)(v (x) w) = (-1)^{|y||v|} (x v) (x) (y w).
//
// The comultiplication Delta(E_ij) = E_ij (x) 1 + 1 (x) E_ij therefore acts
// on the second slot with the Koszul sign (-1)^{|E_ij||v|} past an odd first
// factor v. This is the unique convention under which Delta is a morphism of
// superalgebras; all tensor-product representations and the tensor-realized
// characteristic matrix depend on it.

/// One basis vector: a distinct id (tuple of factor indices), a parity, and a
/// weight.
struct BasisLabel {
  std::vector<int> id;
  int parity = 0;
  Weight weight;

  BasisLabel(std::vector<int> id_, int parity_, Weight weight_)
      : id(std::move(id_)), parity(parity_), weight(std::move(weight_)) {}
};

/// An ordered graded basis. The ordering is graded-lex on weights with ties
/// broken by id, which keeps equal-weight vectors contiguous and makes every
/// construction deterministic.
struct GradedSpace {
  std::vector<BasisLabel> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  /// Contiguous [begin, end) ranges of equal weight.
  std::vector<std::pair<int, int>> weight_blocks() const;

  /// Positions whose label weight equals w.
  std::vector<int> positions_of_weight(const Weight& w) const;

  static bool label_less(const BasisLabel& a, const BasisLabel& b);
};

using SpaceRef = std::shared_ptr<const GradedSpace>;

/// Builds a space from labels, sorting them into canonical order.
SpaceRef make_space(std::vector<BasisLabel> labels);

bool same_space(const SpaceRef& a, const SpaceRef& b);

/// An exact-rational sparse linear map between graded spaces, homogeneous of
/// a fixed parity and weight shift: every non-zero entry connects basis
/// vectors whose parities differ by `parity` and whose weights differ by
/// `weight_shift`. No exact zeros are stored.
class SparseOperator {
 public:
  SparseOperator(SpaceRef domain, SpaceRef codomain, int parity, Weight weight_shift,
                 SparseRationalMatrix entries);

  static SparseOperator zero(SpaceRef domain, SpaceRef codomain, int parity, Weight weight_shift);
  static SparseOperator identity(const SpaceRef& space);

  const SpaceRef& domain() const { return domain_; }
  const SpaceRef& codomain() const { return codomain_; }
  int parity() const { return parity_; }
  const Weight& weight_shift() const { return shift_; }
  const SparseRationalMatrix& matrix() const { return mat_; }

  bool is_zero() const { return mat_.nonZeros() == 0; }
  /// The exact scalar c with *this == c * identity, if the operator is a
  /// scalar multiple of the identity on a single space.
  std::optional<Rational> scalar_value() const;

  RationalVector apply(const RationalVector& v) const;

  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator scaled(const Rational& c) const;
  /// this - c * identity (square operators only).
  SparseOperator minus_scalar(const Rational& c) const;

  friend bool operator==(const SparseOperator& a, const SparseOperator& b);

 private:
  SpaceRef domain_;
  SpaceRef codomain_;
  int parity_;
  Weight shift_;
  SparseRationalMatrix mat_;
};

/// X after Y (matrix product X*Y); parities add mod 2, weight shifts add.
SparseOperator compose(const SparseOperator& x, const SparseOperator& y);

/// The supercommutator XY - (-1)^{|X||Y|} YX of square operators on one space.
SparseOperator supercommutator(const SparseOperator& x, const SparseOperator& y);

/// An ordered two-factor tensor space with its position table.
struct TensorPair {
  SpaceRef left;
  SpaceRef right;
  SpaceRef space;
  std::vector<int> pos;  // pos[a * right->dim() + b]

  int position(int a, int b) const { return pos[static_cast<size_t>(a) * right->dim() + b]; }
};

TensorPair make_tensor_pair(SpaceRef left, SpaceRef right);

/// Lifts an endomorphism X of one factor to the tensor space: slot 1 acts as
/// X (x) 1 with no sign, slot 2 as 1 (x) X with the Koszul sign
/// (-1)^{|X| |v|} past each first-slot basis vector v.
SparseOperator tensor_lift(const SparseOperator& x, int slot, const TensorPair& t);

}  // namespace casimir

#endif  // CASIMIR_SUPERSPACE_HPP
