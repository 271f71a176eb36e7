#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toptypes/ordinal.hpp"
#include "toptypes/tree.hpp"

namespace toptypes {

// Symbolic coordinate of a vertex of the infinite tree T_alpha.
//
// [i1, i2, ..., ik]: go to spine vertex v_i1; if more components follow,
// enter the branch attached at v_i1 (its root is that branch's v_1) and
// continue with [i2, ..., ik] inside the branch. Components are 1-based.
struct VertexAddress {
  std::vector<std::uint64_t> path;

  // Graph distance from the root of T_alpha: sum of components minus one.
  std::uint64_t depth() const;

  friend auto operator<=>(const VertexAddress&, const VertexAddress&) = default;
};

// "2,3,1"
VertexAddress parse_address(std::string_view text);
std::string format_address(const VertexAddress& a);

// Ordinal indexing the branch attached at spine vertex v_i of T_alpha;
// nullopt for the ray T_1. Successor alpha = d+1 gives d at every i, limit
// alpha gives fund_seq(alpha, i).
std::optional<Ordinal> branch_ordinal(const Ordinal& alpha, std::uint64_t i);

// Finite truncation of T_alpha: every vertex within distance `radius` of the root.
struct FamilyBall {
  RootedTree tree;  // labels are formatted addresses
  std::vector<VertexAddress> addresses;  // indexed by vertex id

  // Vertex id of an address, or kNoParent when the address is not in the ball.
  VertexId find(const VertexAddress& a) const;

  std::map<VertexAddress, VertexId> index;
};

FamilyBall ball(const Ordinal& alpha, std::uint64_t radius);

bool address_valid(const Ordinal& alpha, const VertexAddress& addr);

// Tree-order infimum of two addresses in the same T_alpha.
VertexAddress address_meet(const VertexAddress& a, const VertexAddress& b);
// a lies on the root-to-b path.
bool address_leq(const VertexAddress& a, const VertexAddress& b);

// Canonical embedding T_alpha -> T_beta for alpha <= beta, applied to one
// address: successor steps route through the branch at v_1, limit steps
// through the branch at v_j for the least j with alpha <= fund_seq(beta, j).
VertexAddress family_embed_map(const Ordinal& alpha, const Ordinal& beta, const VertexAddress& addr);

}  // namespace toptypes
