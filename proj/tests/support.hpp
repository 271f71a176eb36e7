#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toptypes/certify.hpp"
#include "toptypes/tree.hpp"

namespace toptypes::testing {

// One representative per isomorphism class of rooted trees with
// 1..max_vertices vertices, grown by attaching a leaf anywhere.
inline std::vector<RootedTree> all_rooted_trees(std::size_t max_vertices) {
  std::vector<RootedTree> out;
  std::vector<RootedTree> layer{RootedTree::from_parents({kNoParent})};
  out.push_back(layer.front());
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::set<std::string> seen;
    std::vector<RootedTree> next;
    for (const auto& t : layer) {
      for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) {
        auto parent = t.parents();
        parent.push_back(v);
        auto grown = RootedTree::from_parents(parent);
        if (seen.insert(canonical_form(grown)).second) next.push_back(grown);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Same tree with vertex ids shuffled (which also shuffles child order).
inline RootedTree shuffle_ids(const RootedTree& t, std::mt19937& rng) {
  std::vector<VertexId> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<VertexId> parent(t.size());
  std::vector<std::string> labels(t.has_labels() ? t.size() : 0);
  for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) {
    VertexId p = t.parent(v);
    parent[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
        p == kNoParent ? kNoParent : perm[static_cast<std::size_t>(p)];
    if (t.has_labels()) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = t.label(v);
  }
  return RootedTree::from_parents(std::move(parent), std::move(labels));
}

// Uniform random recursive tree on n vertices.
inline RootedTree random_tree(std::size_t n, std::mt19937& rng) {
  std::vector<VertexId> parent(n, kNoParent);
  for (std::size_t v = 1; v < n; ++v)
    parent[v] = std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(v - 1))(rng);
  return RootedTree::from_parents(std::move(parent));
}

inline RootedTree path_tree(std::size_t n) {
  std::vector<VertexId> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<VertexId>(v) - 1;
  return RootedTree::from_parents(std::move(parent));
}

// Center 0 with `leaves` leaf children.
inline RootedTree star_tree(std::size_t leaves) {
  std::vector<VertexId> parent(leaves + 1, 0);
  parent[0] = kNoParent;
  return RootedTree::from_parents(std::move(parent));
}

// Changes exactly one ordinal field, index or rule tag of a random node.
// Returns a description of the change.
inline std::string mutate_certificate(Certificate& root, std::mt19937& rng) {
  std::vector<Certificate*> nodes{&root};
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (auto& child : nodes[k]->children) nodes.push_back(&child);
  Certificate& c = *nodes[rng() % nodes.size()];

  static const std::vector<Ordinal> pool = [] {
    std::vector<Ordinal> out;
    for (const char* t : {"0", "1", "2", "3", "4", "5", "6", "w", "w+1", "w+2", "w+3", "w*2", "w*2+1", "w*3", "w^2",
                          "w^2+1", "w^2+w", "w^w", "w^w+1"})
      out.push_back(parse_ordinal(t));
    return out;
  }();
  auto other_ordinal = [&](const Ordinal& current) {
    for (;;) {
      const Ordinal& pick = pool[rng() % pool.size()];
      if (pick != current) return pick;
    }
  };

  int field = static_cast<int>(rng() % (c.rule == CertRule::Limit ? 4 : 3));
  std::string where = rule_name(c.rule) + " (" + format_ordinal(c.beta) + ", " + format_ordinal(c.alpha) + ")";
  switch (field) {
    case 0: {
      auto old = c.rule;
      while (c.rule == old) c.rule = static_cast<CertRule>(rng() % 4);
      return where + ": rule -> " + rule_name(c.rule);
    }
    case 1:
      c.beta = other_ordinal(c.beta);
      return where + ": beta -> " + format_ordinal(c.beta);
    case 2:
      c.alpha = other_ordinal(c.alpha);
      return where + ": alpha -> " + format_ordinal(c.alpha);
    default: {
      std::uint64_t old = c.index;
      while (c.index == old) c.index = rng() % (old + 6);
      return where + ": index -> " + std::to_string(c.index);
    }
  }
}

}  // namespace toptypes::testing
