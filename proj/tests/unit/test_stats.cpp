#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "permsort/patterns.hpp"
#include "permsort/stats.hpp"
#include "permsort/tree.hpp"

using permsort::Permutation;

TEST_CASE("identity and decreasing permutations") {
  for (int n = 1; n <= 8; ++n) {
    const auto id = Permutation::identity(n);
    const auto sv = permsort::stats(id);
    CHECK(sv.zeil == 1);
    CHECK(sv.rzeil == n);
    CHECK(sv.updown_word == std::string(static_cast<std::size_t>(n - 1), 'u'));
    CHECK(sv.lr_maxima_positions.size() == static_cast<std::size_t>(n));
    CHECK(sv.rl_maxima_positions == std::vector<int>{n});

    const auto dec = reverse(id);
    CHECK(permsort::zeil(dec) == n);
    CHECK(permsort::rzeil(dec) == 1);
  }
}

TEST_CASE("empty permutation") {
  const auto sv = permsort::stats(Permutation{});
  CHECK(sv.zeil == 0);
  CHECK(sv.rzeil == 0);
  CHECK(sv.updown_word.empty());
  CHECK(sv.lr_maxima_positions.empty());
}

TEST_CASE("worked example 1 5 3 2 4 9 8 6 7") {
  const auto sv = permsort::stats(Permutation{1, 5, 3, 2, 4, 9, 8, 6, 7});
  CHECK(sv.updown_word == "udduuddu");
  // 9, 8 and 7 exceed everything to their right.
  CHECK(sv.rl_maxima_positions == std::vector<int>{6, 7, 9});
  CHECK(sv.lr_maxima_positions == std::vector<int>{1, 2, 6});
  CHECK(sv.descent_set == std::vector<int>{2, 3, 6, 7});
  CHECK(sv.major_index == 18);
  CHECK(sv.peak_count == 2);
  CHECK(sv.inversions == 9);
  CHECK(sv.zeil == 3);
  CHECK(sv.rzeil == 1);
}

TEST_CASE("statistics agree with definition-level oracles") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : oracle::all_perms(n)) {
      const auto sv = permsort::stats(p);
      REQUIRE(sv.rl_maxima_positions == oracle::rl_maxima(p));
      REQUIRE(sv.lr_maxima_positions == oracle::lr_maxima(p));
      REQUIRE(sv.zeil == oracle::zeil(p));
      REQUIRE(sv.rzeil == oracle::rzeil(p));
      int maj = 0;
      for (std::size_t i = 0; i < sv.updown_word.size(); ++i) {
        if (sv.updown_word[i] == 'd') maj += static_cast<int>(i) + 1;
      }
      REQUIRE(sv.major_index == maj);
      if (n >= 1) {
        CHECK(sv.zeil >= 1);
        CHECK(sv.zeil <= n);
      }
    }
  }
}

TEST_CASE("in-order tree shape determines maxima positions and up-down word") {
  for (int n = 0; n <= 8; ++n) {
    std::map<permsort::TreeShape, permsort::StatVector> by_shape;
    for (const auto& p : permsort::enumerate(n)) {
      const auto sv = permsort::stats(p);
      const auto [it, fresh] = by_shape.emplace(permsort::shape(permsort::tin(p)), sv);
      if (fresh) continue;
      REQUIRE(it->second.lr_maxima_positions == sv.lr_maxima_positions);
      REQUIRE(it->second.rl_maxima_positions == sv.rl_maxima_positions);
      REQUIRE(it->second.updown_word == sv.updown_word);
    }
  }
}

TEST_CASE("stat_key") {
  const auto sv = permsort::stats(Permutation{2, 1, 3});
  CHECK(permsort::stat_key(sv, "descent_set") == "{1}");
  CHECK(permsort::stat_key(sv, "updown_word") == "w:du");
  CHECK_THROWS_AS(permsort::stat_key(sv, "nope"), std::invalid_argument);
  for (const auto& name : permsort::stat_names()) CHECK_NOTHROW(permsort::stat_key(sv, name));
}
