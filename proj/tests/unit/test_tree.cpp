#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "permsort/patterns.hpp"
#include "permsort/tree.hpp"

using permsort::DecreasingTree;
using permsort::Permutation;

namespace {

DecreasingTree leaf(int v) { return DecreasingTree::leaf(v); }
DecreasingTree node(int v, const DecreasingTree& l, const DecreasingTree& r) {
  return DecreasingTree::node(v, l, r);
}
const DecreasingTree none;

// Canonical tree of tau = 5 1 8 2 3 6 4 7 9 as drawn in the worked example.
DecreasingTree example_canonical() {
  return node(9, node(8, leaf(5), leaf(1)),
              node(7, node(6, none, node(3, none, leaf(2))), leaf(4)));
}

// The four other trees with the same post-order.
std::vector<DecreasingTree> example_noncanonical() {
  const auto left = node(8, leaf(5), leaf(1));
  return {
      node(9, left, node(7, node(6, leaf(2), leaf(3)), leaf(4))),
      node(9, left, node(7, node(6, none, node(3, leaf(2), none)), leaf(4))),
      node(9, left, node(7, node(6, node(3, none, leaf(2)), none), leaf(4))),
      node(9, left, node(7, node(6, node(3, leaf(2), none), none), leaf(4))),
  };
}

bool is_decreasing(const DecreasingTree& t) {
  for (int v : t.labels()) {
    if (t.left(v) >= v || t.right(v) >= v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("node construction enforces the decreasing property") {
  CHECK_THROWS_AS(node(2, leaf(3), none), std::invalid_argument);
  CHECK_THROWS_AS(node(5, leaf(3), leaf(3)), std::invalid_argument);
  CHECK_THROWS_AS(node(5, node(4, leaf(3), none), leaf(3)), std::invalid_argument);
  CHECK_THROWS_AS(leaf(0), std::invalid_argument);
}

TEST_CASE("tin") {
  CHECK(permsort::tin(Permutation{}).empty());

  // root 9; 5 with children 1 and 4; 4 has left child 3 whose right child
  // is 2; right of 9 is 8, whose right child 7 has left child 6.
  const auto t = permsort::tin(Permutation{1, 5, 3, 2, 4, 9, 8, 6, 7});
  CHECK(t == node(9, node(5, leaf(1), node(4, node(3, none, leaf(2)), none)),
                  node(8, none, node(7, leaf(6), none))));

  CHECK(permsort::tin(Permutation{1, 2, 3}) == node(3, node(2, leaf(1), none), none));
}

TEST_CASE("readings") {
  CHECK(permsort::in_order(DecreasingTree{}) == Permutation{});
  CHECK(permsort::post_order(DecreasingTree{}) == Permutation{});
  CHECK(permsort::in_order(example_canonical()) == Permutation{5, 8, 1, 9, 6, 3, 2, 7, 4});
  CHECK(permsort::post_order(example_canonical()) == Permutation{5, 1, 8, 2, 3, 6, 4, 7, 9});
  CHECK(permsort::post_order(permsort::tin(Permutation{6, 1, 3, 2, 7, 5, 4})) ==
        Permutation{1, 2, 3, 6, 4, 5, 7});
}

TEST_CASE("in_order inverts tin and tin is decreasing") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : permsort::enumerate(n)) {
      const auto t = permsort::tin(p);
      REQUIRE(permsort::in_order(t) == p);
      REQUIRE(is_decreasing(t));
      REQUIRE(t.size() == n);
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v(14);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation p(v);
    CHECK(permsort::in_order(permsort::tin(p)) == p);
  }
}

TEST_CASE("apply_S") {
  CHECK(permsort::apply_S(Permutation{6, 1, 3, 2, 7, 5, 4}) == Permutation{1, 2, 3, 6, 4, 5, 7});
  CHECK(permsort::apply_S(Permutation{}) == Permutation{});
}

TEST_CASE("both S routes and the push/pop procedure agree") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : permsort::enumerate(n)) {
      const auto s = permsort::apply_S(p);
      REQUIRE(s == permsort::apply_S_recursive(p));
      if (n <= 7) REQUIRE(s == oracle::stack_sort(p));
    }
  }
}

TEST_CASE("S sorts exactly the 231-avoiders") {
  const Permutation p231{2, 3, 1};
  for (int n = 0; n <= 8; ++n) {
    const auto id = Permutation::identity(n);
    for (const auto& p : permsort::enumerate(n)) {
      REQUIRE((permsort::apply_S(p) == id) == !permsort::contains(p, p231));
    }
  }
}

TEST_CASE("is_canonical") {
  CHECK(permsort::is_canonical(example_canonical()));
  for (const auto& t : example_noncanonical()) {
    CHECK(permsort::post_order(t) == Permutation{5, 1, 8, 2, 3, 6, 4, 7, 9});
    CHECK_FALSE(permsort::is_canonical(t));
  }
  CHECK(permsort::is_canonical(leaf(1)));
  CHECK(permsort::is_canonical(DecreasingTree{}));
}

TEST_CASE("trees_with_postorder") {
  const Permutation tau{5, 1, 8, 2, 3, 6, 4, 7, 9};
  auto trees = permsort::trees_with_postorder(tau);
  CHECK(trees.size() == 5);
  std::set<DecreasingTree> got(trees.begin(), trees.end());
  std::set<DecreasingTree> want{example_canonical()};
  for (const auto& t : example_noncanonical()) want.insert(t);
  CHECK(got == want);

  CHECK(permsort::trees_with_postorder(Permutation{2, 1}).empty());
  CHECK_FALSE(permsort::is_stack_sorting_image(Permutation{2, 1}));

  // Post-order identity: count matches the brute-force preimage scan.
  for (int n = 1; n <= 7; ++n) {
    const auto id = Permutation::identity(n);
    CHECK(permsort::trees_with_postorder(id).size() == oracle::preimages_by_scan("S", id).size());
  }
}

TEST_CASE("image-of-S membership agrees with the forest and with scanning") {
  for (int n = 0; n <= 7; ++n) {
    std::set<Permutation> image;
    for (const auto& p : oracle::all_perms(n)) image.insert(oracle::stack_sort(p));
    for (const auto& tau : oracle::all_perms(n)) {
      const bool in = image.count(tau) > 0;
      REQUIRE(permsort::is_stack_sorting_image(tau) == in);
      REQUIRE(permsort::trees_with_postorder(tau).empty() == !in);
    }
  }
}

TEST_CASE("budget stops runaway enumeration") {
  permsort::Budget budget(100);
  CHECK_THROWS_AS(permsort::trees_with_postorder(Permutation::identity(10), &budget),
                  permsort::BudgetExceeded);
}

TEST_CASE("canonical_tree") {
  CHECK(permsort::canonical_tree(Permutation{5, 1, 8, 2, 3, 6, 4, 7, 9}) == example_canonical());

  const auto swapped = permsort::canonical_tree(Permutation{4, 1, 7, 2, 3, 6, 5, 8, 9});
  REQUIRE(swapped);
  CHECK(*swapped == node(9, node(7, leaf(4), leaf(1)),
                         node(8, node(6, none, node(3, none, leaf(2))), leaf(5))));
  CHECK(permsort::shape(*swapped) == permsort::shape(example_canonical()));

  CHECK(permsort::canonical_tree(Permutation{1}) == leaf(1));
  CHECK_FALSE(permsort::canonical_tree(Permutation{2, 1}));
}

TEST_CASE("exactly one canonical tree per image element") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& tau : permsort::enumerate(n)) {
      const auto trees = permsort::trees_with_postorder(tau);
      if (trees.empty()) continue;
      const auto canon = std::count_if(trees.begin(), trees.end(),
                                       [](const auto& t) { return permsort::is_canonical(t); });
      REQUIRE(canon == 1);
    }
  }
}

TEST_CASE("star_expansions") {
  const auto all = permsort::star_expansions(example_canonical());
  CHECK(all.size() == 5);
  CHECK(std::find(all.begin(), all.end(), example_canonical()) != all.end());
  for (const auto& t : example_noncanonical()) {
    CHECK(std::find(all.begin(), all.end(), t) != all.end());
  }

  CHECK(permsort::star_expansions(leaf(1)) == std::vector<DecreasingTree>{leaf(1)});
  CHECK_THROWS_AS(permsort::star_expansions(example_noncanonical().front()),
                  permsort::PreconditionError);
}

TEST_CASE("star moves preserve the post-order reading") {
  const auto tau = permsort::post_order(example_canonical());
  for (const auto& t : permsort::star_moves(example_canonical())) {
    CHECK(permsort::post_order(t) == tau);
  }
}

TEST_CASE("preimages_S") {
  const auto pre = permsort::preimages_S(Permutation{5, 1, 8, 2, 3, 6, 4, 7, 9});
  REQUIRE(pre.size() == 5);
  CHECK(std::is_sorted(pre.begin(), pre.end()));
  const Permutation most_inverted{5, 8, 1, 9, 6, 3, 2, 7, 4};
  CHECK(std::find(pre.begin(), pre.end(), most_inverted) != pre.end());
  CHECK(permsort::preimages_S(Permutation{4, 1, 7, 2, 3, 6, 5, 8, 9}).size() == 5);
}

TEST_CASE("preimages_S equals the factorial scan") {
  for (int n = 0; n <= 8; ++n) {
    std::map<Permutation, std::vector<Permutation>> fibers;
    for (const auto& theta : permsort::enumerate(n)) fibers[permsort::apply_S(theta)].push_back(theta);
    for (const auto& tau : permsort::enumerate(n)) {
      const auto it = fibers.find(tau);
      const auto expected = it == fibers.end() ? std::vector<Permutation>{} : it->second;
      REQUIRE(permsort::preimages_S(tau) == expected);
    }
  }
}

TEST_CASE("fiber size depends only on the canonical tree shape") {
  for (int n = 1; n <= 8; ++n) {
    std::map<permsort::TreeShape, std::size_t> count_by_shape;
    for (const auto& tau : permsort::enumerate(n)) {
      const auto trees = permsort::trees_with_postorder(tau);
      if (trees.empty()) continue;
      const auto canon = permsort::canonical_tree(tau);
      REQUIRE(canon);
      const auto [it, fresh] = count_by_shape.emplace(permsort::shape(*canon), trees.size());
      if (!fresh) REQUIRE(it->second == trees.size());
    }
  }
}

TEST_CASE("post-order of any tree lies in the image of S") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> v(9);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const auto t = permsort::tin(Permutation(v));
    CHECK_FALSE(permsort::preimages_S(permsort::post_order(t)).empty());
  }
}

TEST_CASE("shape") {
  CHECK(permsort::shape(DecreasingTree{}).empty());
  CHECK(permsort::shape(leaf(1)).code() == "100");
  CHECK(permsort::shape(permsort::tin(Permutation{2, 1})).code() == "10100");
  CHECK(permsort::shape(permsort::tin(Permutation{1, 2})).code() == "11000");
}

TEST_CASE("relabel") {
  const auto t = permsort::tin(Permutation{1, 3, 2});
  CHECK(permsort::relabel(t, Permutation{2, 1, 3}) == permsort::tin(Permutation{2, 3, 1}));
  // Swapping 3 and 2 puts a larger label below a smaller one.
  CHECK_FALSE(permsort::relabel(t, Permutation{1, 3, 2}).has_value());
}

TEST_CASE("DOT output") {
  const auto dot = permsort::to_dot(permsort::tin(Permutation{1}), "t");
  CHECK(dot.find("digraph \"t\"") != std::string::npos);
  CHECK(dot.find("  1;\n") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  const auto canon = permsort::to_dot(example_canonical());
  // 6 has only a right child: an invisible placeholder marks the left side,
  // and left edges precede right edges.
  CHECK(canon.find("6 -> nil6L [style=invis]") != std::string::npos);
  CHECK(canon.find("9 -> 8") < canon.find("9 -> 7"));
  CHECK(canon.find("3 -> 2") != std::string::npos);
}
