#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "toptypes/matching.hpp"

using toptypes::BipartiteMatcher;

namespace {

// Largest matching by trying every subset of edges.
std::size_t brute_matching(std::size_t left, std::size_t right, const std::vector<std::pair<int, int>>& edges) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::set<int> us, vs;
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      ok = us.insert(edges[e].first).second && vs.insert(edges[e].second).second;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  (void)left;
  (void)right;
  return best;
}

}  // namespace

TEST_CASE("perfect matching on a crossing graph") {
  BipartiteMatcher m(3, 3);
  m.add_edge(0, 0);
  m.add_edge(0, 1);
  m.add_edge(1, 0);
  m.add_edge(2, 1);
  m.add_edge(2, 2);
  CHECK(m.solve() == 3);
  std::set<int> used;
  for (std::size_t u = 0; u < 3; ++u) {
    int v = m.mate_of_left(u);
    REQUIRE(v != BipartiteMatcher::kUnmatched);
    CHECK(m.mate_of_right(static_cast<std::size_t>(v)) == static_cast<int>(u));
    used.insert(v);
  }
  CHECK(used.size() == 3);
}

TEST_CASE("empty sides") {
  BipartiteMatcher none(0, 4);
  CHECK(none.solve() == 0);
  BipartiteMatcher isolated(2, 2);
  CHECK(isolated.solve() == 0);
  CHECK_THROWS(isolated.add_edge(2, 0));
}

TEST_CASE("matching size equals exhaustive optimum on random graphs") {
  std::mt19937 rng(17);
  for (int round = 0; round < 400; ++round) {
    std::size_t left = 1 + rng() % 5;
    std::size_t right = 1 + rng() % 5;
    std::vector<std::pair<int, int>> edges;
    BipartiteMatcher m(left, right);
    for (std::size_t u = 0; u < left; ++u)
      for (std::size_t v = 0; v < right; ++v)
        if (rng() % 3 == 0 && edges.size() < 14) {
          edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
          m.add_edge(u, v);
        }
    CHECK(m.solve() == brute_matching(left, right, edges));
  }
}
