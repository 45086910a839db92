#include "permsort/operators.hpp"

#include <algorithm>
#include <set>

#include "permsort/tree.hpp"

namespace permsort {

OperatorExpr OperatorExpr::parse(std::string_view text) {
  std::vector<Op> word;
  std::size_t i = 0;
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed == "id" || trimmed == "I") return {};

  static constexpr std::string_view kCompose = "\xE2\x88\x98";  // "∘"
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'S' || c == 's') {
      word.push_back(Op::S);
      ++i;
    } else if (c == 'R' || c == 'r') {
      word.push_back(Op::R);
      ++i;
    } else if (c == ' ' || c == '\t' || c == 'o') {
      ++i;
    } else if (text.substr(i, kCompose.size()) == kCompose) {
      i += kCompose.size();
    } else {
      throw ParseError("unknown operator token '" + std::string(1, c) + "'", i);
    }
  }
  return OperatorExpr(std::move(word));
}

OperatorExpr OperatorExpr::then_after(const OperatorExpr& inner) const {
  auto w = word_;
  w.insert(w.end(), inner.word_.begin(), inner.word_.end());
  return OperatorExpr(std::move(w));
}

OperatorExpr OperatorExpr::with_reversal() const {
  return OperatorExpr({Op::R}).then_after(*this);
}

OperatorExpr OperatorExpr::reduced() const {
  std::vector<Op> w;
  for (Op op : word_) {
    if (op == Op::R && !w.empty() && w.back() == Op::R) {
      w.pop_back();
    } else {
      w.push_back(op);
    }
  }
  return OperatorExpr(std::move(w));
}

bool OperatorExpr::ends_with_S() const {
  const auto w = reduced().word_;
  return !w.empty() && w.back() == Op::S;
}

bool OperatorExpr::has_SR_before_trailing_S() const {
  const auto w = reduced().word_;
  auto i = w.size();
  while (i > 0 && w[i - 1] == Op::S) --i;
  if (i == w.size()) return false;  // k >= 1 trailing S letters needed
  return i >= 2 && w[i - 1] == Op::R && w[i - 2] == Op::S;
}

std::string OperatorExpr::to_string() const {
  if (word_.empty()) return "id";
  std::string s;
  for (Op op : word_) s += static_cast<char>(op);
  return s;
}

std::vector<OperatorExpr> all_words(std::size_t length) {
  std::vector<OperatorExpr> out;
  const std::size_t count = std::size_t{1} << length;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Op> w(length);
    for (std::size_t i = 0; i < length; ++i) {
      w[i] = (mask >> (length - 1 - i)) & 1U ? Op::S : Op::R;
    }
    out.emplace_back(std::move(w));
  }
  return out;
}

Permutation apply(const OperatorExpr& op, const Permutation& perm) {
  Permutation out = perm;
  const auto& w = op.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out = *it == Op::S ? apply_S(out) : reverse(out);
  }
  return out;
}

std::vector<Permutation> preimages(const OperatorExpr& op, const Permutation& target, int n,
                                   Budget* budget) {
  if (target.size() != n) return {};
  std::set<Permutation> current{target};
  for (Op letter : op.word()) {
    std::set<Permutation> next;
    for (const auto& p : current) {
      if (letter == Op::R) {
        next.insert(reverse(p));
      } else {
        for (auto& q : preimages_S(p, budget)) next.insert(std::move(q));
      }
    }
    if (budget) budget->charge(next.size());
    current = std::move(next);
    if (current.empty()) break;
  }
  return {current.begin(), current.end()};
}

bool in_image(const OperatorExpr& op, const Permutation& perm) {
  const auto& w = op.word();
  if (w.empty()) return true;
  // Only the outermost S constrains membership directly; peel leading R's.
  std::size_t first_s = 0;
  while (first_s < w.size() && w[first_s] == Op::R) ++first_s;
  if (first_s == w.size()) return true;
  Permutation p = first_s % 2 ? reverse(perm) : perm;
  if (!is_stack_sorting_image(p)) return false;
  return !preimages(op, perm, perm.size()).empty();
}

}  // namespace permsort
