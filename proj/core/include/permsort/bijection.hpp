#pragma once

#include <optional>

#include "permsort/operators.hpp"
#include "permsort/permutation.hpp"
#include "permsort/tree.hpp"

namespace permsort {

/// A value map x -> map(x) on [n]. Composition with a permutation acts on
/// values only: (lambda o theta)(i) = lambda(theta(i)).
class Relabeling {
 public:
  Relabeling() = default;
  explicit Relabeling(Permutation map) : map_(std::move(map)) {}

  int operator()(int value) const { return map_[static_cast<std::size_t>(value) - 1]; }
  const Permutation& map() const noexcept { return map_; }
  int size() const noexcept { return map_.size(); }

  Permutation apply(const Permutation& perm) const { return compose(map_, perm); }

  /// nullopt when the relabelled tree is no longer decreasing.
  std::optional<DecreasingTree> apply(const DecreasingTree& tree) const {
    return relabel(tree, map_);
  }

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  Permutation map_;
};

/// The bijection Av(231) -> Av(132): P(e) = e and
/// P(a (+) (1 (-) b)) = (P(a) (+) 1) (-) P(b).
/// Throws PreconditionError if `perm` contains 231.
Permutation apply_P(const Permutation& perm);

/// Inverse of apply_P. Throws PreconditionError if `perm` contains 132.
Permutation apply_P_inverse(const Permutation& perm);

/// lambda with apply_P(perm) = lambda o perm.
Relabeling lambda_of(const Permutation& perm);

/// Phi_A(theta) = lambda_{A(theta)} o theta. Throws PreconditionError when
/// A(theta) contains 231, i.e. theta is not sorted by S o A.
Permutation phi(const OperatorExpr& op, const Permutation& theta);

}  // namespace permsort
