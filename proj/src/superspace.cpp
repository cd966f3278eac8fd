#include "casimir/superspace.hpp"

#include <algorithm>
#include <cassert>

#include "casimir/errors.hpp"

namespace casimir {

bool GradedSpace::label_less(const BasisLabel& a, const BasisLabel& b) {
  int c = Weight::compare(a.weight, b.weight);
  if (c != 0) return c < 0;
  return a.id < b.id;
}

std::vector<std::pair<int, int>> GradedSpace::weight_blocks() const {
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int i = 1; i <= dim(); ++i) {
    if (i == dim() || !(basis[i].weight == basis[start].weight)) {
      blocks.emplace_back(start, i);
      start = i;
    }
  }
  return blocks;
}

std::vector<int> GradedSpace::positions_of_weight(const Weight& w) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (basis[i].weight == w) out.push_back(i);
  }
  return out;
}

SpaceRef make_space(std::vector<BasisLabel> labels) {
  std::sort(labels.begin(), labels.end(), GradedSpace::label_less);
  for (size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1].id == labels[i].id) throw InternalError("duplicate basis label");
  }
  auto space = std::make_shared<GradedSpace>();
  space->basis = std::move(labels);
  return space;
}

bool same_space(const SpaceRef& a, const SpaceRef& b) {
  if (a == b) return true;
  if (!a || !b || a->dim() != b->dim()) return false;
  for (int i = 0; i < a->dim(); ++i) {
    const auto& x = a->basis[i];
    const auto& y = b->basis[i];
    if (x.id != y.id || x.parity != y.parity || !(x.weight == y.weight)) return false;
  }
  return true;
}

SparseOperator::SparseOperator(SpaceRef domain, SpaceRef codomain, int parity, Weight weight_shift,
                               SparseRationalMatrix entries)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      parity_(parity % 2),
      shift_(std::move(weight_shift)),
      mat_(std::move(entries)) {
  if (mat_.rows() != codomain_->dim() || mat_.cols() != domain_->dim()) {
    throw ShapeMismatch("operator matrix is " + std::to_string(mat_.rows()) + "x" +
                        std::to_string(mat_.cols()) + " for spaces " +
                        std::to_string(codomain_->dim()) + "x" + std::to_string(domain_->dim()));
  }
  prune_zeros(mat_);
  mat_.makeCompressed();
#ifndef NDEBUG
  for (int col = 0; col < mat_.outerSize(); ++col) {
    for (SparseRationalMatrix::InnerIterator it(mat_, col); it; ++it) {
      const auto& from = domain_->basis[it.col()];
      const auto& to = codomain_->basis[it.row()];
      assert(to.parity == (from.parity + parity_) % 2);
      assert(to.weight == from.weight + shift_);
    }
  }
#endif
}

SparseOperator SparseOperator::zero(SpaceRef domain, SpaceRef codomain, int parity,
                                    Weight weight_shift) {
  SparseRationalMatrix m(codomain->dim(), domain->dim());
  return SparseOperator(std::move(domain), std::move(codomain), parity, std::move(weight_shift),
                        std::move(m));
}

SparseOperator SparseOperator::identity(const SpaceRef& space) {
  SparseRationalMatrix m(space->dim(), space->dim());
  m.setIdentity();
  int m_sig = space->dim() > 0 ? space->basis[0].weight.m() : 1;
  return SparseOperator(space, space, 0, Weight(m_sig), std::move(m));
}

std::optional<Rational> SparseOperator::scalar_value() const {
  if (!same_space(domain_, codomain_)) return std::nullopt;
  Rational c = 0;
  int diag_count = 0;
  for (int col = 0; col < mat_.outerSize(); ++col) {
    for (SparseRationalMatrix::InnerIterator it(mat_, col); it; ++it) {
      if (it.row() != it.col()) return std::nullopt;
      if (diag_count == 0) {
        c = it.value();
      } else if (it.value() != c) {
        return std::nullopt;
      }
      ++diag_count;
    }
  }
  if (diag_count == 0) return Rational(0);
  if (diag_count != domain_->dim()) return std::nullopt;
  return c;
}

RationalVector SparseOperator::apply(const RationalVector& v) const {
  if (v.size() != domain_->dim()) throw ShapeMismatch("vector length does not match domain");
  return mat_ * v;
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  if (!same_space(domain_, o.domain_) || !same_space(codomain_, o.codomain_)) {
    throw ShapeMismatch("adding operators on different spaces");
  }
  if (!is_zero() && !o.is_zero() && (parity_ != o.parity_ || !(shift_ == o.shift_))) {
    throw ShapeMismatch("adding operators of different parity or weight shift");
  }
  int parity = is_zero() ? o.parity_ : parity_;
  Weight shift = is_zero() ? o.shift_ : shift_;
  SparseRationalMatrix sum = mat_ + o.mat_;
  return SparseOperator(domain_, codomain_, parity, shift, std::move(sum));
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  return *this + o.scaled(-1);
}

SparseOperator SparseOperator::scaled(const Rational& c) const {
  if (c == 0) return zero(domain_, codomain_, parity_, shift_);
  SparseRationalMatrix m = mat_ * c;
  return SparseOperator(domain_, codomain_, parity_, shift_, std::move(m));
}

SparseOperator SparseOperator::minus_scalar(const Rational& c) const {
  if (!same_space(domain_, codomain_)) throw ShapeMismatch("minus_scalar needs a square operator");
  return *this - identity(domain_).scaled(c);
}

bool operator==(const SparseOperator& a, const SparseOperator& b) {
  if (!same_space(a.domain_, b.domain_) || !same_space(a.codomain_, b.codomain_)) return false;
  SparseRationalMatrix diff = a.mat_ - b.mat_;
  prune_zeros(diff);
  return diff.nonZeros() == 0;
}

SparseOperator compose(const SparseOperator& x, const SparseOperator& y) {
  if (!same_space(y.codomain(), x.domain())) {
    throw ShapeMismatch("compose: Y codomain does not match X domain");
  }
  SparseRationalMatrix prod = x.matrix() * y.matrix();
  return SparseOperator(y.domain(), x.codomain(), x.parity() + y.parity(),
                        x.weight_shift() + y.weight_shift(), std::move(prod));
}

SparseOperator supercommutator(const SparseOperator& x, const SparseOperator& y) {
  if (!same_space(x.domain(), x.codomain()) || !same_space(y.domain(), y.codomain()) ||
      !same_space(x.domain(), y.domain())) {
    throw ShapeMismatch("supercommutator needs square operators on one space");
  }
  SparseOperator xy = compose(x, y);
  SparseOperator yx = compose(y, x);
  if ((x.parity() * y.parity()) % 2 == 1) return xy + yx;
  return xy - yx;
}

TensorPair make_tensor_pair(SpaceRef left, SpaceRef right) {
  const int dl = left->dim();
  const int dr = right->dim();
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<size_t>(dl) * dr);
  for (int a = 0; a < dl; ++a) {
    for (int b = 0; b < dr; ++b) {
      std::vector<int> id = left->basis[a].id;
      id.insert(id.end(), right->basis[b].id.begin(), right->basis[b].id.end());
      labels.emplace_back(std::move(id), (left->basis[a].parity + right->basis[b].parity) % 2,
                          left->basis[a].weight + right->basis[b].weight);
    }
  }
  TensorPair t;
  t.left = std::move(left);
  t.right = std::move(right);
  t.space = make_space(std::move(labels));
  // Recover the (a, b) -> position table from the ids.
  t.pos.assign(static_cast<size_t>(dl) * dr, -1);
  std::vector<std::pair<std::vector<int>, int>> by_id;
  by_id.reserve(t.space->dim());
  for (int p = 0; p < t.space->dim(); ++p) by_id.emplace_back(t.space->basis[p].id, p);
  std::sort(by_id.begin(), by_id.end());
  for (int a = 0; a < dl; ++a) {
    for (int b = 0; b < dr; ++b) {
      std::vector<int> id = t.left->basis[a].id;
      id.insert(id.end(), t.right->basis[b].id.begin(), t.right->basis[b].id.end());
      auto it = std::lower_bound(by_id.begin(), by_id.end(), id,
                                 [](const auto& e, const std::vector<int>& key) { return e.first < key; });
      if (it == by_id.end() || it->first != id) throw InternalError("tensor position lookup failed");
      t.pos[static_cast<size_t>(a) * dr + b] = it->second;
    }
  }
  return t;
}

SparseOperator tensor_lift(const SparseOperator& x, int slot, const TensorPair& t) {
  if (slot != 1 && slot != 2) throw SlotMismatch("slot must be 1 or 2");
  const SpaceRef& factor = slot == 1 ? t.left : t.right;
  if (!same_space(x.domain(), x.codomain())) {
    throw SlotMismatch("tensor_lift expects an endomorphism of the factor");
  }
  if (!same_space(x.domain(), factor)) {
    throw SlotMismatch("operator domain does not match the tensor factor at the slot");
  }
  std::vector<Eigen::Triplet<Rational>> trips;
  trips.reserve(static_cast<size_t>(x.matrix().nonZeros()) *
                (slot == 1 ? t.right->dim() : t.left->dim()));
  for (int col = 0; col < x.matrix().outerSize(); ++col) {
    for (SparseRationalMatrix::InnerIterator it(x.matrix(), col); it; ++it) {
      const int r = static_cast<int>(it.row());
      const int c = static_cast<int>(it.col());
      if (slot == 1) {
        for (int b = 0; b < t.right->dim(); ++b) {
          trips.emplace_back(t.position(r, b), t.position(c, b), it.value());
        }
      } else {
        for (int a = 0; a < t.left->dim(); ++a) {
          Rational v = it.value();
          if (x.parity() == 1 && t.left->basis[a].parity == 1) v = -v;
          trips.emplace_back(t.position(a, r), t.position(a, c), std::move(v));
        }
      }
    }
  }
  SparseRationalMatrix m(t.space->dim(), t.space->dim());
  m.setFromTriplets(trips.begin(), trips.end());
  return SparseOperator(t.space, t.space, x.parity(), x.weight_shift(), std::move(m));
}

}  // namespace casimir
