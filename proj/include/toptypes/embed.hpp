#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toptypes/family.hpp"
#include "toptypes/ordinal.hpp"
#include "toptypes/tree.hpp"

namespace toptypes {

enum class EmbedMode { Rooted, Free };

// Vertex map guest -> host, indexed by guest vertex id.
//
// Rooted mode: injective, a <= b iff map[a] <= map[b], and
// map[meet(a, b)] == meet(map[a], map[b]). The guest root may land anywhere.
// Free mode: the same conditions after rerooting the host at map[guest root].
struct EmbeddingWitness {
  EmbedMode mode = EmbedMode::Rooted;
  std::vector<VertexId> map;
};

struct EmbedDecision {
  std::optional<EmbeddingWitness> witness;  // engaged iff the guest embeds

  bool embeds() const noexcept { return witness.has_value(); }
  explicit operator bool() const noexcept { return embeds(); }
};

// Exact rooted topological-minor test by subtree-class dynamic programming
// with a bipartite matching over children at each (guest, host) pair.
EmbedDecision rooted_minor(const RootedTree& guest, const RootedTree& host);

// Exact free (unrooted) topological-minor test: the guest, rooted at its
// stored root, must embed with its root at some host vertex u into the host
// rerooted at u.
EmbedDecision free_minor(const RootedTree& guest, const RootedTree& host);

// Exhaustive search over injective vertex maps; both trees at most
// kBruteForceLimit vertices. Rooted mode checks order and meet preservation;
// free mode checks the subdivision definition directly (guest edges become
// internally disjoint host paths avoiding other image vertices).
inline constexpr std::size_t kBruteForceLimit = 8;
bool brute_force_minor(const RootedTree& guest, const RootedTree& host, EmbedMode mode);

// Throws DomainError if the map is not total or has out-of-range ids.
bool validate_witness(const RootedTree& guest, const RootedTree& host, const EmbeddingWitness& w);

// Semi-decision of "guest embeds into the infinite T_alpha", searching only
// host vertices whose address components are all <= horizon.
struct HorizonDecision {
  std::uint64_t horizon = 0;
  std::optional<std::vector<VertexAddress>> witness;  // engaged iff Embeds

  bool embeds() const noexcept { return witness.has_value(); }
};

HorizonDecision horizon_family_minor(const RootedTree& guest, const Ordinal& alpha, std::uint64_t horizon);

// Address-level witness check inside T_alpha: valid addresses, injective,
// order-preserving both ways and meet-preserving.
bool validate_address_witness(const RootedTree& guest, const Ordinal& alpha, const std::vector<VertexAddress>& map);

// [[guest, host], ...] with host ids or address strings.
std::string witness_to_json(const EmbeddingWitness& w);
std::string witness_to_json(const std::vector<VertexAddress>& map);

}  // namespace toptypes
