#include <doctest.h>

#include <set>
#include <vector>

#include "test_util.hpp"
#include "trn/cycles.hpp"
#include "trn/error.hpp"
#include "trn/gen.hpp"
#include "trn/structure.hpp"

using trn::Cycle;
using trn::Tournament;

TEST_CASE("canonical rotation puts the smallest vertex first") {
  CHECK(Cycle::canonical({4, 1, 7}).verts == std::vector<int>{1, 7, 4});
  CHECK(Cycle::canonical({0, 5, 3}).verts == std::vector<int>{0, 5, 3});
  CHECK(Cycle::canonical({9, 2}).verts == std::vector<int>{2, 9});
}

TEST_CASE("cycle validity") {
  const Tournament t = oracle::three_cycle();
  CHECK(trn::is_valid_cycle(t, Cycle{{0, 1, 2}}));
  CHECK(trn::is_valid_cycle(t, Cycle{{1, 2, 0}}));   // any rotation
  CHECK_FALSE(trn::is_valid_cycle(t, Cycle{{0, 2, 1}}));  // wrong direction
  CHECK_FALSE(trn::is_valid_cycle(t, Cycle{{0, 1}}));     // too short
  CHECK_FALSE(trn::is_valid_cycle(t, Cycle{{0, 1, 1}}));  // repeat
  CHECK_FALSE(trn::is_valid_cycle(t, Cycle{{0, 1, 3}}));  // out of range
}

TEST_CASE("three_cycle_through on the three-cycle itself") {
  const Tournament t = oracle::three_cycle();
  for (int v = 0; v < 3; ++v) {
    const Cycle c = trn::three_cycle_through(t, v);
    CHECK(c.verts == std::vector<int>{0, 1, 2});
  }
  CHECK_THROWS_AS(trn::three_cycle_through(oracle::make(3), 0), trn::Error);
  CHECK_THROWS_AS(trn::three_cycle_through(t, 5), trn::Error);
}

TEST_CASE("moon_cycle argument validation") {
  const Tournament t = trn::paley(7);
  CHECK_THROWS_AS(trn::moon_cycle(t, -1, 3), trn::Error);
  CHECK_THROWS_AS(trn::moon_cycle(t, 0, 2), trn::Error);
  CHECK_THROWS_AS(trn::moon_cycle(t, 0, 8), trn::Error);
  CHECK_THROWS_AS(trn::moon_cycle(oracle::make(5), 0, 3), trn::Error);
  try {
    trn::moon_cycle(oracle::make(5), 0, 3);
    CHECK(false);
  } catch (const trn::Error& e) {
    CHECK(e.code() == trn::Errc::not_strongly_connected);
  }
}

TEST_CASE("moon_cycle covers every vertex and length on strong instances") {
  int covered = 0;
  for (int i = 0; i < 30; ++i) {
    const int n = 3 + static_cast<int>(trn::derive_seed(31, i) % 30);
    const Tournament t = trn::random_tournament(n, trn::derive_seed(32, i));
    if (!trn::is_strongly_connected(t)) continue;
    ++covered;
    for (int v = 0; v < n; ++v) {
      for (int len = 3; len <= n; ++len) {
        const Cycle c = trn::moon_cycle(t, v, len);
        CHECK(c.length() == len);
        CHECK(trn::is_valid_cycle(t, c));
        CHECK(std::count(c.verts.begin(), c.verts.end(), v) == 1);
        // Canonical rotation: smallest vertex leads.
        CHECK(c.verts[0] == *std::min_element(c.verts.begin(), c.verts.end()));
      }
    }
  }
  CHECK(covered > 10);  // the sample really exercised strong instances
}

TEST_CASE("moon_cycle on a regular instance with multiple words per row") {
  const Tournament t = trn::random_min_outdegree(70, 30, 99);
  REQUIRE(trn::is_strongly_connected(t));
  for (int len = 3; len <= 70; len += 13) {
    const Cycle c = trn::moon_cycle(t, 42, len);
    CHECK(trn::is_valid_cycle(t, c));
    CHECK(c.length() == len);
    CHECK(std::count(c.verts.begin(), c.verts.end(), 42) == 1);
  }
}

TEST_CASE("enumerate_cycles matches the naive oracle exhaustively") {
  for (int n = 3; n <= 5; ++n) {
    trn::enumerate_all(n, [&](const Tournament& t) {
      const auto expected = oracle::all_cycles(t, 3, n);
      const std::vector<Cycle> got = trn::enumerate_cycles(t, 3, n);
      std::set<std::vector<int>> got_set;
      for (const Cycle& c : got) {
        CHECK(trn::is_valid_cycle(t, c));
        CHECK(got_set.insert(c.verts).second);  // emitted exactly once
      }
      CHECK(got_set == expected);
      return true;
    });
  }
}

TEST_CASE("enumerate_cycles matches the naive oracle on random instances") {
  for (int i = 0; i < 8; ++i) {
    const Tournament t = trn::random_tournament(8, trn::derive_seed(41, i));
    for (int min_len = 3; min_len <= 5; ++min_len) {
      for (int max_len = min_len; max_len <= 8; max_len += 2) {
        const auto expected = oracle::all_cycles(t, min_len, max_len);
        std::set<std::vector<int>> got;
        trn::for_each_cycle(t, min_len, max_len, [&](const std::vector<int>& c) {
          CHECK(got.insert(c).second);
          return true;
        });
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("cycle counts match the subset-DP oracle") {
  for (int i = 0; i < 4; ++i) {
    const Tournament t = trn::random_tournament(9, trn::derive_seed(51, i));
    const std::vector<long> expected = oracle::cycle_counts_by_length(t);
    std::vector<long> got(10, 0);
    trn::for_each_cycle(t, 3, 9, [&](const std::vector<int>& c) {
      ++got[c.size()];
      return true;
    });
    for (int len = 3; len <= 9; ++len) {
      CHECK(got[len] == expected[len]);
    }
    CHECK(got[3] == oracle::three_cycle_count_by_degrees(t));
  }
}

TEST_CASE("for_each_cycle emission is lexicographic and stoppable") {
  const Tournament t = trn::paley(7);
  std::vector<std::vector<int>> order;
  trn::for_each_cycle(t, 3, 7, [&](const std::vector<int>& c) {
    order.push_back(c);
    return true;
  });
  CHECK(std::is_sorted(order.begin(), order.end()));
  REQUIRE(order.size() > 3);

  long seen = 0;
  trn::for_each_cycle(t, 3, 7, [&](const std::vector<int>&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);

  CHECK_THROWS_AS(trn::enumerate_cycles(t, 2, 7), trn::Error);
  CHECK_THROWS_AS(trn::enumerate_cycles(t, 3, 8), trn::Error);
  CHECK_THROWS_AS(trn::enumerate_cycles(t, 5, 4), trn::Error);
}
