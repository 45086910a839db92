#include "permsort/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permsort {

struct TreeAccess {
  static DecreasingTree with_root(int root) {
    DecreasingTree t;
    t.root_ = root;
    t.left_.assign(static_cast<std::size_t>(root) + 1, 0);
    t.right_.assign(static_cast<std::size_t>(root) + 1, 0);
    t.parent_.assign(static_cast<std::size_t>(root) + 1, 0);
    return t;
  }
  static std::vector<int>& left(DecreasingTree& t) { return t.left_; }
  static std::vector<int>& right(DecreasingTree& t) { return t.right_; }
  static std::vector<int>& parent(DecreasingTree& t) { return t.parent_; }
  static int& size(DecreasingTree& t) { return t.size_; }

  static void copy_into(DecreasingTree& dst, const DecreasingTree& src) {
    for (int v = 1; v <= src.root_; ++v) {
      if (!src.has(v)) continue;
      if (dst.has(v)) throw std::invalid_argument("label " + std::to_string(v) + " repeated");
      dst.left_[v] = src.left_[v];
      dst.right_[v] = src.right_[v];
      dst.parent_[v] = src.parent_[v];
    }
  }
};

namespace {

void in_order_rec(const DecreasingTree& t, int v, std::vector<int>& out) {
  if (v == 0) return;
  in_order_rec(t, t.left(v), out);
  out.push_back(v);
  in_order_rec(t, t.right(v), out);
}

void post_order_rec(const DecreasingTree& t, int v, std::vector<int>& out) {
  if (v == 0) return;
  post_order_rec(t, t.left(v), out);
  post_order_rec(t, t.right(v), out);
  out.push_back(v);
}

void shape_rec(const DecreasingTree& t, int v, std::string& out) {
  if (v == 0) {
    out += '0';
    return;
  }
  out += '1';
  shape_rec(t, t.left(v), out);
  shape_rec(t, t.right(v), out);
}

void stack_sort_rec(std::span<const int> in, std::vector<int>& out) {
  if (in.empty()) return;
  const auto max_it = std::max_element(in.begin(), in.end());
  const auto m = static_cast<std::size_t>(max_it - in.begin());
  stack_sort_rec(in.subspan(0, m), out);
  stack_sort_rec(in.subspan(m + 1), out);
  out.push_back(*max_it);
}

int leftmost_below(const DecreasingTree& t, int v) {
  while (t.left(v) != 0) v = t.left(v);
  return v;
}

// Memoized enumeration of decreasing trees over spans [i, j) of a post-order
// word.
class PostorderForest {
 public:
  PostorderForest(std::span<const int> word, Budget* budget)
      : word_(word), n_(word.size()), budget_(budget), memo_((n_ + 1) * (n_ + 1)),
        done_((n_ + 1) * (n_ + 1), false) {}

  const std::vector<DecreasingTree>& trees(std::size_t i, std::size_t j) {
    const auto key = i * (n_ + 1) + j;
    if (done_[key]) return memo_[key];
    std::vector<DecreasingTree> out;
    if (i == j) {
      out.emplace_back();
    } else {
      const int root = word_[j - 1];
      const bool root_is_max =
          std::all_of(word_.begin() + static_cast<std::ptrdiff_t>(i),
                      word_.begin() + static_cast<std::ptrdiff_t>(j - 1),
                      [&](int x) { return x < root; });
      if (root_is_max) {
        for (std::size_t split = i; split <= j - 1; ++split) {
          const auto& lefts = trees(i, split);
          if (lefts.empty()) continue;
          const auto& rights = trees(split, j - 1);
          for (const auto& l : lefts) {
            for (const auto& r : rights) out.push_back(DecreasingTree::node(root, l, r));
          }
          if (budget_) budget_->charge(lefts.size() * rights.size());
        }
      }
    }
    done_[key] = true;
    memo_[key] = std::move(out);
    return memo_[key];
  }

 private:
  std::span<const int> word_;
  std::size_t n_;
  Budget* budget_;
  std::vector<std::vector<DecreasingTree>> memo_;
  std::vector<bool> done_;
};

Permutation checked_word(std::vector<int> word) {
  // Trees built from permutations carry labels 1..n; anything else is a
  // caller error reported by the Permutation constructor.
  return Permutation(std::move(word));
}

}  // namespace

DecreasingTree DecreasingTree::leaf(int label) { return node(label, {}, {}); }

DecreasingTree DecreasingTree::node(int label, const DecreasingTree& left,
                                    const DecreasingTree& right) {
  if (label < 1) throw std::invalid_argument("tree labels must be positive");
  if (left.root_ >= label || right.root_ >= label) {
    throw std::invalid_argument("child label not below parent " + std::to_string(label));
  }
  auto t = TreeAccess::with_root(label);
  // Link the left root first so copy_into sees it when checking repeats.
  TreeAccess::copy_into(t, left);
  t.left_[label] = left.root_;
  if (left.root_) t.parent_[left.root_] = label;
  TreeAccess::copy_into(t, right);
  t.right_[label] = right.root_;
  if (right.root_) t.parent_[right.root_] = label;
  t.size_ = 1 + left.size_ + right.size_;
  return t;
}

bool DecreasingTree::has(int label) const noexcept {
  if (label < 1 || label > root_) return false;
  return label == root_ || parent_[label] != 0;
}

std::vector<int> DecreasingTree::labels() const { return in_order_word(*this); }

DecreasingTree tin(const Permutation& perm) {
  if (perm.empty()) return {};
  // Cartesian tree by a stack of the current right spine.
  const int n = perm.size();
  auto t = TreeAccess::with_root(n);
  auto& left = TreeAccess::left(t);
  auto& right = TreeAccess::right(t);
  auto& parent = TreeAccess::parent(t);
  std::vector<int> spine;
  for (int v : perm) {
    int last = 0;
    while (!spine.empty() && spine.back() < v) {
      last = spine.back();
      spine.pop_back();
    }
    left[v] = last;
    if (last) parent[last] = v;
    if (!spine.empty()) {
      right[spine.back()] = v;
      parent[v] = spine.back();
    }
    spine.push_back(v);
  }
  TreeAccess::size(t) = n;
  return t;
}

std::vector<int> in_order_word(const DecreasingTree& tree) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(tree.size()));
  in_order_rec(tree, tree.root(), out);
  return out;
}

std::vector<int> post_order_word(const DecreasingTree& tree) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(tree.size()));
  post_order_rec(tree, tree.root(), out);
  return out;
}

Permutation in_order(const DecreasingTree& tree) { return checked_word(in_order_word(tree)); }

Permutation post_order(const DecreasingTree& tree) { return checked_word(post_order_word(tree)); }

Permutation apply_S(const Permutation& perm) { return post_order(tin(perm)); }

Permutation apply_S_recursive(const Permutation& perm) {
  std::vector<int> out;
  out.reserve(perm.values().size());
  stack_sort_rec(perm.values(), out);
  return Permutation(std::move(out));
}

TreeShape shape(const DecreasingTree& tree) {
  std::string code;
  shape_rec(tree, tree.root(), code);
  return TreeShape(std::move(code));
}

bool is_canonical(const DecreasingTree& tree) {
  for (int z = 1; z <= tree.root(); ++z) {
    if (!tree.has(z)) continue;
    const int x = tree.left(z);
    if (x == 0) continue;
    const int r = tree.right(z);
    if (r == 0) return false;
    if (leftmost_below(tree, r) >= x) return false;
  }
  return true;
}

std::vector<DecreasingTree> trees_with_postorder(const Permutation& tau, Budget* budget) {
  PostorderForest forest(tau.values(), budget);
  return forest.trees(0, tau.values().size());
}

bool is_stack_sorting_image(const Permutation& tau) {
  // ok[i][j]: span [i, j) is the post-order of some decreasing tree.
  const auto n = tau.values().size();
  std::vector<std::vector<char>> ok(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) ok[i][i] = 1;
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      const int root = tau[j - 1];
      bool root_is_max = true;
      for (std::size_t k = i; k + 1 < j; ++k) root_is_max = root_is_max && tau[k] < root;
      if (!root_is_max) continue;
      for (std::size_t split = i; split <= j - 1 && !ok[i][j]; ++split) {
        ok[i][j] = ok[i][split] && ok[split][j - 1];
      }
    }
  }
  return ok[0][n] != 0;
}

std::optional<DecreasingTree> canonical_tree(const Permutation& tau) {
  std::optional<DecreasingTree> found;
  for (auto& t : trees_with_postorder(tau)) {
    if (!is_canonical(t)) continue;
    if (found) {
      throw std::logic_error("more than one canonical tree for " + to_string(tau));
    }
    found = std::move(t);
  }
  return found;
}

std::vector<DecreasingTree> star_moves(const DecreasingTree& tree) {
  std::vector<DecreasingTree> out;
  for (int z = 1; z <= tree.root(); ++z) {
    if (!tree.has(z) || tree.left(z) != 0) continue;
    const int r = tree.right(z);
    for (int y = r; y != 0; y = tree.left(y)) {
      DecreasingTree moved = tree;
      auto& left = TreeAccess::left(moved);
      auto& right = TreeAccess::right(moved);
      auto& parent = TreeAccess::parent(moved);
      if (y == r) {
        right[z] = 0;
      } else {
        left[parent[y]] = 0;
      }
      left[z] = y;
      parent[y] = z;
      out.push_back(std::move(moved));
    }
  }
  return out;
}

std::vector<DecreasingTree> star_expansions(const DecreasingTree& tree) {
  if (!is_canonical(tree)) throw PreconditionError("star_expansions needs a canonical tree");
  std::set<DecreasingTree> seen{tree};
  std::deque<DecreasingTree> queue{tree};
  while (!queue.empty()) {
    const auto current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : star_moves(current)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> preimages_S(const Permutation& tau, Budget* budget) {
  std::vector<Permutation> out;
  for (const auto& t : trees_with_postorder(tau, budget)) out.push_back(in_order(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DecreasingTree> relabel(const DecreasingTree& tree, const Permutation& map) {
  if (tree.empty()) return DecreasingTree{};
  if (tree.root() > map.size()) {
    throw std::invalid_argument("relabeling map is smaller than the tree labels");
  }
  // Rebuild bottom-up so that DecreasingTree::node checks the order.
  auto build = [&](auto&& self, int v) -> std::optional<DecreasingTree> {
    if (v == 0) return DecreasingTree{};
    auto l = self(self, tree.left(v));
    auto r = self(self, tree.right(v));
    if (!l || !r) return std::nullopt;
    const int label = map[static_cast<std::size_t>(v) - 1];
    if (l->root() >= label || r->root() >= label) return std::nullopt;
    return DecreasingTree::node(label, *l, *r);
  };
  return build(build, tree.root());
}

std::string to_dot(const DecreasingTree& tree, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  node [shape=circle];\n";
  auto emit = [&](auto&& self, int v) -> void {
    if (v == 0) return;
    os << "  " << v << ";\n";
    const int l = tree.left(v);
    const int r = tree.right(v);
    if (l == 0 && r == 0) return;
    if (l != 0) {
      os << "  " << v << " -> " << l << ";\n";
    } else {
      os << "  nil" << v << "L [style=invis];\n";
      os << "  " << v << " -> nil" << v << "L [style=invis];\n";
    }
    if (r != 0) {
      os << "  " << v << " -> " << r << ";\n";
    } else {
      os << "  nil" << v << "R [style=invis];\n";
      os << "  " << v << " -> nil" << v << "R [style=invis];\n";
    }
    self(self, l);
    self(self, r);
  };
  emit(emit, tree.root());
  os << "}\n";
  return os.str();
}

}  // namespace permsort
