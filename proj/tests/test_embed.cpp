#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toptypes/embed.hpp"
#include "toptypes/error.hpp"
#include "toptypes/family.hpp"

using namespace toptypes;
using namespace toptypes::testing;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }

const RootedTree kSingle = parse_tree("()");
const RootedTree kCherry = parse_tree("(()())");
const RootedTree kPath3 = parse_tree("((()))");

void check_sound(const RootedTree& guest, const RootedTree& host, const EmbedDecision& d) {
  if (d.embeds()) CHECK(validate_witness(guest, host, *d.witness));
}

}  // namespace

TEST_CASE("rooted_minor examples") {
  for (const auto& host : {kSingle, kCherry, kPath3, ball(O("w"), 4).tree}) {
    auto d = rooted_minor(kSingle, host);
    REQUIRE(d.embeds());
    check_sound(kSingle, host, d);
  }

  CHECK_FALSE(rooted_minor(kCherry, kPath3).embeds());
  CHECK_FALSE(brute_force_minor(kCherry, kPath3, EmbedMode::Rooted));

  auto comb = ball(O("2"), 4).tree;
  auto spine = rooted_minor(kPath3, comb);
  REQUIRE(spine.embeds());
  check_sound(kPath3, comb, spine);

  // Two branching children below one vertex; T_2 only branches along its spine.
  auto guest = ball(O("3"), 2).tree;
  CHECK_FALSE(rooted_minor(guest, ball(O("2"), 12).tree).embeds());
  CHECK_FALSE(brute_force_minor(guest, ball(O("2"), 2).tree, EmbedMode::Rooted));
}

TEST_CASE("guest root may land below the host root") {
  auto host = parse_tree("((()()))");  // a cherry hanging below a new root
  auto d = rooted_minor(kCherry, host);
  REQUIRE(d.embeds());
  CHECK(d.witness->map[0] == 1);
  check_sound(kCherry, host, d);
}

TEST_CASE("free_minor examples") {
  for (const auto& t : {kSingle, kCherry, kPath3, ball(O("3"), 3).tree}) {
    auto d = free_minor(t, t);
    REQUIRE(d.embeds());
    check_sound(t, t, d);
  }
  auto star3 = star_tree(3);
  auto p3 = free_minor(path_tree(3), star3);
  REQUIRE(p3.embeds());
  check_sound(path_tree(3), star3, p3);
  CHECK(brute_force_minor(path_tree(3), star3, EmbedMode::Free));

  CHECK_FALSE(free_minor(path_tree(4), star3).embeds());
  CHECK_FALSE(brute_force_minor(path_tree(4), star3, EmbedMode::Free));

  // As free trees a cherry is a 3-path, so it fits into a ray.
  CHECK(free_minor(kCherry, kPath3).embeds());
  CHECK_FALSE(rooted_minor(kCherry, kPath3).embeds());
}

TEST_CASE("brute force oracle") {
  CHECK_FALSE(brute_force_minor(kCherry, kPath3, EmbedMode::Rooted));
  CHECK(brute_force_minor(parse_tree("(())"), kCherry, EmbedMode::Rooted));
  CHECK_FALSE(brute_force_minor(path_tree(4), star_tree(3), EmbedMode::Free));
  CHECK_THROWS_AS(brute_force_minor(path_tree(9), path_tree(3), EmbedMode::Rooted), DomainError);
  CHECK_THROWS_AS(brute_force_minor(path_tree(3), path_tree(9), EmbedMode::Free), DomainError);
}

TEST_CASE("validate_witness") {
  auto t = ball(O("w"), 4).tree;
  EmbeddingWitness identity;
  for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) identity.map.push_back(v);
  CHECK(validate_witness(t, t, identity));

  // Cherry root to the bottom of the path, leaves above it.
  CHECK_FALSE(validate_witness(kCherry, kPath3, {EmbedMode::Rooted, {2, 0, 1}}));
  // Order-preserving but merges the two leaves' branches: meet violated.
  CHECK_FALSE(validate_witness(kCherry, kPath3, {EmbedMode::Rooted, {0, 1, 2}}));
  CHECK_FALSE(validate_witness(kCherry, kCherry, {EmbedMode::Rooted, {0, 1, 1}}));
  CHECK(validate_witness(kCherry, kPath3, {EmbedMode::Free, {1, 0, 2}}));

  CHECK_THROWS_AS(validate_witness(kCherry, kPath3, {EmbedMode::Rooted, {0, 1}}), DomainError);
  CHECK_THROWS_AS(validate_witness(kCherry, kPath3, {EmbedMode::Rooted, {0, 1, 3}}), DomainError);
}

TEST_CASE("empty trees are rejected") {
  RootedTree empty;
  CHECK_THROWS_AS(rooted_minor(empty, kCherry), DomainError);
  CHECK_THROWS_AS(free_minor(kCherry, empty), DomainError);
}

TEST_CASE("rooted and free decisions match the oracle up to five vertices") {
  auto trees = all_rooted_trees(5);
  for (const auto& g : trees) {
    for (const auto& h : trees) {
      auto rooted = rooted_minor(g, h);
      CHECK(rooted.embeds() == brute_force_minor(g, h, EmbedMode::Rooted));
      check_sound(g, h, rooted);
      auto free = free_minor(g, h);
      CHECK(free.embeds() == brute_force_minor(g, h, EmbedMode::Free));
      check_sound(g, h, free);
    }
  }
}

TEST_CASE("decisions ignore child order") {
  std::mt19937 rng(23);
  for (int k = 0; k < 150; ++k) {
    auto g = random_tree(1 + rng() % 8, rng);
    auto h = random_tree(1 + rng() % 14, rng);
    bool rooted = rooted_minor(g, h).embeds();
    bool free = free_minor(g, h).embeds();
    auto g2 = shuffle_ids(g, rng);
    auto h2 = shuffle_ids(h, rng);
    CHECK(rooted_minor(g2, h2).embeds() == rooted);
    CHECK(free_minor(g2, h2).embeds() == free);
  }
}

TEST_CASE("rooted_minor is reflexive and transitive on family balls") {
  std::vector<RootedTree> corpus;
  for (const char* a : {"1", "2", "3", "4", "w", "w+1", "w*2", "w^2"})
    for (std::uint64_t d = 0; d <= 4; ++d) corpus.push_back(ball(O(a), d).tree);

  for (const auto& t : corpus) {
    auto d = rooted_minor(t, t);
    REQUIRE(d.embeds());
    check_sound(t, t, d);
  }
  std::mt19937 rng(29);
  int chains = 0;
  for (int k = 0; k < 500; ++k) {
    const auto& a = corpus[rng() % corpus.size()];
    const auto& b = corpus[rng() % corpus.size()];
    const auto& c = corpus[rng() % corpus.size()];
    if (rooted_minor(a, b).embeds() && rooted_minor(b, c).embeds()) {
      ++chains;
      CHECK(rooted_minor(a, c).embeds());
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("horizon search against infinite family trees") {
  auto ray_hit = horizon_family_minor(path_tree(5), O("1"), 8);
  REQUIRE(ray_hit.embeds());
  CHECK(validate_address_witness(path_tree(5), O("1"), *ray_hit.witness));

  auto miss = horizon_family_minor(kCherry, O("1"), 32);
  CHECK_FALSE(miss.embeds());
  CHECK(miss.horizon == 32);
  CHECK_FALSE(rooted_minor(kCherry, ball(O("1"), 40).tree).embeds());

  // Finite balls of T_{w+1} fit into T_w.
  auto guest = ball(O("w+1"), 3).tree;
  auto hit = horizon_family_minor(guest, O("w"), 32);
  REQUIRE(hit.embeds());
  CHECK(validate_address_witness(guest, O("w"), *hit.witness));
  std::uint64_t deepest = 0;
  for (const auto& a : *hit.witness) deepest = std::max(deepest, a.depth());
  auto host = ball(O("w"), deepest);
  EmbeddingWitness concrete;
  for (const auto& a : *hit.witness) concrete.map.push_back(host.find(a));
  CHECK(validate_witness(guest, host.tree, concrete));

  CHECK_THROWS_AS(horizon_family_minor(kCherry, O("0"), 4), DomainError);
  CHECK_THROWS_AS(horizon_family_minor(kCherry, O("2"), 0), DomainError);
}

TEST_CASE("horizon search is monotone in the horizon") {
  std::vector<std::pair<RootedTree, Ordinal>> cases = {
      {ball(O("2"), 3).tree, O("2")}, {ball(O("3"), 3).tree, O("w")}, {ball(O("w"), 3).tree, O("w+1")},
      {ball(O("4"), 2).tree, O("3")}, {path_tree(6), O("1")}};
  for (const auto& [guest, alpha] : cases) {
    bool seen = false;
    for (std::uint64_t h = 1; h <= 12; ++h) {
      auto d = horizon_family_minor(guest, alpha, h);
      if (seen) CHECK(d.embeds());
      if (d.embeds()) CHECK(validate_address_witness(guest, alpha, *d.witness));
      seen = seen || d.embeds();
    }
  }
}

TEST_CASE("witness json") {
  CHECK(witness_to_json(EmbeddingWitness{EmbedMode::Rooted, {3, 1}}) == "[[0,3],[1,1]]");
  CHECK(witness_to_json(std::vector<VertexAddress>{parse_address("1"), parse_address("2,1")}) ==
        R"([[0,"1"],[1,"2,1"]])");
}
