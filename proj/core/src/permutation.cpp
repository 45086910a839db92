#include "permsort/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permsort {

namespace {

void validate_one_line(const std::vector<int>& values) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InvalidPermutation("value " + std::to_string(v) + " outside 1.." +
                               std::to_string(n));
    }
    if (seen[v]) throw InvalidPermutation("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate_one_line(values_);
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

Permutation Permutation::standardize(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && values[order[rank]] == values[order[rank - 1]]) {
      throw InvalidPermutation("duplicate value " + std::to_string(values[order[rank]]) +
                               " cannot be standardized");
    }
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  Permutation p;
  p.values_ = std::move(out);
  return p;
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(values_.size() + 1, -1);
  for (std::size_t i = 0; i < values_.size(); ++i) pos[values_[i]] = static_cast<int>(i);
  return pos;
}

Permutation reverse(const Permutation& perm) {
  std::vector<int> v(perm.begin(), perm.end());
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> v(alpha.begin(), alpha.end());
  v.reserve(alpha.values().size() + beta.values().size());
  for (int x : beta) v.push_back(x + alpha.size());
  return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> v;
  v.reserve(alpha.values().size() + beta.values().size());
  for (int x : alpha) v.push_back(x + beta.size());
  v.insert(v.end(), beta.begin(), beta.end());
  return Permutation(std::move(v));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw InvalidPermutation("cannot compose permutations of sizes " +
                             std::to_string(outer.size()) + " and " +
                             std::to_string(inner.size()));
  }
  std::vector<int> v;
  v.reserve(inner.values().size());
  for (int x : inner) v.push_back(outer[x - 1]);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& perm) {
  std::vector<int> v(perm.values().size());
  for (int i = 0; i < perm.size(); ++i) v[perm[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n'; };
  while (i < text.size() && is_sep(text[i])) ++i;
  const auto rest = text.substr(i);
  if (rest == "e" || rest == "\xCE\xB5") return {};  // "ε" in UTF-8
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    int value = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && !is_sep(*ptr))) {
      throw InvalidPermutation("cannot read an integer at position " + std::to_string(i) +
                               " of \"" + std::string(text) + "\"");
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation::standardize(values);
}

std::string to_string(const Permutation& perm) {
  if (perm.empty()) return "e";
  std::ostringstream os;
  for (int i = 0; i < perm.size(); ++i) {
    if (i) os << ' ';
    os << perm[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) {
  return os << to_string(perm);
}

}  // namespace permsort
