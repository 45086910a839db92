#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permsort/budget.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

enum class Op : char { S = 'S', R = 'R' };

/// A composition of S (stack sorting) and R (reversal), stored as the word
/// written in functional notation: the LEFTMOST letter is applied LAST.
/// "SRS" therefore means theta -> S(R(S(theta))). The empty word is the
/// identity operator.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  explicit OperatorExpr(std::vector<Op> word) : word_(std::move(word)) {}

  /// Accepts S/R tokens, optionally separated by "∘", "o" or whitespace.
  /// "", "id" and "I" are the identity. Throws ParseError with the byte
  /// offset of the first unknown token.
  static OperatorExpr parse(std::string_view text);

  const std::vector<Op>& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }

  /// (this o inner): apply `inner` first.
  OperatorExpr then_after(const OperatorExpr& inner) const;

  /// R o this.
  OperatorExpr with_reversal() const;

  /// Same operator with adjacent R R pairs cancelled.
  OperatorExpr reduced() const;

  /// A = A0 o S, checked on the reduced word.
  bool ends_with_S() const;

  /// A = B0 o S o R o S^k with k >= 1, checked on the reduced word.
  bool has_SR_before_trailing_S() const;

  /// Compact form, e.g. "SRS"; the identity is "id".
  std::string to_string() const;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  std::vector<Op> word_;
};

/// Every word over {S, R} of length exactly `length`, in lexicographic order
/// of letters (R < S).
std::vector<OperatorExpr> all_words(std::size_t length);

Permutation apply(const OperatorExpr& op, const Permutation& perm);

/// All theta of size n with apply(op, theta) == target, sorted. Computed
/// letter by letter from the outermost operator inwards, with R^{-1} = R and
/// S^{-1} from decreasing trees; never by scanning n! permutations.
std::vector<Permutation> preimages(const OperatorExpr& op, const Permutation& target, int n,
                                   Budget* budget = nullptr);

/// True iff `perm` lies in the image of `op`.
bool in_image(const OperatorExpr& op, const Permutation& perm);

}  // namespace permsort
