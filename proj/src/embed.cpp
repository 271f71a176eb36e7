#include "toptypes/embed.hpp"

#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "toptypes/error.hpp"
#include "toptypes/matching.hpp"

namespace toptypes {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

// Embeddability between subtree classes of one SubtreeClasses interner.
//   within(a, b): class a embeds somewhere inside class b
//   at(a, b):     class a embeds with its root sent to the root of b
class ClassEmbedder {
 public:
  explicit ClassEmbedder(const SubtreeClasses& classes) : classes_(classes) {}

  bool at(int a, int b) {
    auto key = pack(a, b);
    if (auto it = at_.find(key); it != at_.end()) return it->second;
    bool result = compute_at(a, b);
    at_.emplace(key, result);
    return result;
  }

  bool within(int a, int b) {
    auto key = pack(a, b);
    if (auto it = within_.find(key); it != within_.end()) return it->second;
    bool result = false;
    if (fits_size(a, b)) {
      result = at(a, b);
      const auto& kids = classes_.children(b);
      for (std::size_t k = 0; !result && k < kids.size(); ++k) {
        if (k > 0 && kids[k] == kids[k - 1]) continue;
        result = within(a, kids[k]);
      }
    }
    within_.emplace(key, result);
    return result;
  }

 private:
  static std::uint64_t pack(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  bool fits_size(int a, int b) const {
    return classes_.vertex_count(a) <= classes_.vertex_count(b) && classes_.height(a) <= classes_.height(b);
  }

  bool compute_at(int a, int b) {
    const auto& ka = classes_.children(a);
    const auto& kb = classes_.children(b);
    if (ka.empty()) return true;
    if (ka.size() > kb.size() || !fits_size(a, b)) return false;
    BipartiteMatcher matcher(ka.size(), kb.size());
    for (std::size_t x = 0; x < ka.size(); ++x)
      for (std::size_t y = 0; y < kb.size(); ++y)
        if (within(ka[x], kb[y])) matcher.add_edge(x, y);
    return matcher.solve() == ka.size();
  }

  const SubtreeClasses& classes_;
  std::unordered_map<std::uint64_t, bool> at_;
  std::unordered_map<std::uint64_t, bool> within_;
};

// Turns positive class-level decisions into a concrete vertex map.
class WitnessBuilder {
 public:
  WitnessBuilder(const RootedTree& guest, const std::vector<int>& guest_cls, const RootedTree& host,
                 const std::vector<int>& host_cls, ClassEmbedder& engine)
      : guest_(guest), gcls_(guest_cls), host_(host), hcls_(host_cls), engine_(engine), map_(guest.size(), kNoParent) {}

  // Requires within(class of t, class of u).
  VertexId descend(VertexId t, VertexId u) {
    while (!engine_.at(gcls_[idx(t)], hcls_[idx(u)])) {
      VertexId next = kNoParent;
      for (VertexId c : host_.children(u)) {
        if (engine_.within(gcls_[idx(t)], hcls_[idx(c)])) {
          next = c;
          break;
        }
      }
      if (next == kNoParent) throw std::logic_error("witness descent lost its target");
      u = next;
    }
    return u;
  }

  // Requires at(class of t, class of u).
  void place(VertexId t, VertexId u) {
    map_[idx(t)] = u;
    auto kt = guest_.children(t);
    auto ku = host_.children(u);
    if (kt.empty()) return;
    BipartiteMatcher matcher(kt.size(), ku.size());
    for (std::size_t x = 0; x < kt.size(); ++x)
      for (std::size_t y = 0; y < ku.size(); ++y)
        if (engine_.within(gcls_[idx(kt[x])], hcls_[idx(ku[y])])) matcher.add_edge(x, y);
    if (matcher.solve() != kt.size()) throw std::logic_error("witness matching is not saturating");
    for (std::size_t x = 0; x < kt.size(); ++x) {
      VertexId target = ku[static_cast<std::size_t>(matcher.mate_of_left(x))];
      place(kt[x], descend(kt[x], target));
    }
  }

  std::vector<VertexId> take() { return std::move(map_); }

 private:
  const RootedTree& guest_;
  const std::vector<int>& gcls_;
  const RootedTree& host_;
  const std::vector<int>& hcls_;
  ClassEmbedder& engine_;
  std::vector<VertexId> map_;
};

void require_nonempty(const RootedTree& guest, const RootedTree& host) {
  if (guest.empty() || host.empty()) throw DomainError("embedding needs non-empty trees");
}

// Class of the host rooted at each vertex, via a rerooting pass.
std::vector<int> classes_at_every_root(const RootedTree& host, const std::vector<int>& down, SubtreeClasses& classes) {
  const std::size_t n = host.size();
  std::vector<int> up(n, -1);  // component on the parent side of v, rooted at parent(v)
  std::vector<int> full(n, -1);
  for (VertexId u : host.preorder()) {
    std::vector<int> around;
    for (VertexId c : host.children(u)) around.push_back(down[idx(c)]);
    if (u != host.root()) around.push_back(up[idx(u)]);
    full[idx(u)] = classes.intern(around);

    auto kids = host.children(u);
    for (std::size_t k = 0; k < kids.size(); ++k) {
      std::vector<int> rest;
      rest.reserve(around.size());
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (j != k) rest.push_back(down[idx(kids[j])]);
      if (u != host.root()) rest.push_back(up[idx(u)]);
      up[idx(kids[k])] = classes.intern(std::move(rest));
    }
  }
  return full;
}

bool pairwise_structure_preserved(const RootedTree& guest, const RootedTree& host, const std::vector<VertexId>& map) {
  const auto n = static_cast<VertexId>(guest.size());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      VertexId fa = map[idx(a)];
      VertexId fb = map[idx(b)];
      if (guest.is_ancestor(a, b) != host.is_ancestor(fa, fb)) return false;
      if (a < b && map[idx(guest.meet(a, b))] != host.meet(fa, fb)) return false;
    }
  }
  return true;
}

// Exhaustive rooted search: guest vertices assigned in preorder, so every
// meet of an assigned pair is already assigned.
class RootedBruteForce {
 public:
  RootedBruteForce(const RootedTree& guest, const RootedTree& host)
      : guest_(guest), host_(host), order_(guest.preorder()), map_(guest.size(), kNoParent), used_(host.size(), false) {}

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    VertexId x = order_[k];
    for (VertexId y = 0; y < static_cast<VertexId>(host_.size()); ++y) {
      if (used_[idx(y)] || !consistent(k, x, y)) continue;
      used_[idx(y)] = true;
      map_[idx(x)] = y;
      if (extend(k + 1)) return true;
      map_[idx(x)] = kNoParent;
      used_[idx(y)] = false;
    }
    return false;
  }

  bool consistent(std::size_t k, VertexId x, VertexId y) const {
    for (std::size_t j = 0; j < k; ++j) {
      VertexId z = order_[j];
      VertexId fz = map_[idx(z)];
      if (guest_.is_ancestor(z, x) != host_.is_ancestor(fz, y)) return false;
      if (guest_.is_ancestor(x, z) != host_.is_ancestor(y, fz)) return false;
      if (map_[idx(guest_.meet(x, z))] != host_.meet(y, fz)) return false;
    }
    return true;
  }

  const RootedTree& guest_;
  const RootedTree& host_;
  const std::vector<VertexId>& order_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

// Exhaustive free search against the subdivision definition. Each guest edge
// (parent, child) becomes the unique host path between the two images; all
// path interiors and images must be pairwise disjoint.
class FreeBruteForce {
 public:
  FreeBruteForce(const RootedTree& guest, const RootedTree& host)
      : guest_(guest), host_(host), order_(guest.preorder()), map_(guest.size(), kNoParent), used_(host.size(), 0) {}

  bool run() { return extend(0); }

 private:
  std::vector<VertexId> interior(VertexId a, VertexId b) const {
    VertexId m = host_.meet(a, b);
    std::vector<VertexId> out;
    for (VertexId v = a; v != m; v = host_.parent(v))
      if (v != a) out.push_back(v);
    for (VertexId v = b; v != m; v = host_.parent(v))
      if (v != b) out.push_back(v);
    if (m != a && m != b) out.push_back(m);
    return out;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    VertexId x = order_[k];
    for (VertexId y = 0; y < static_cast<VertexId>(host_.size()); ++y) {
      if (used_[idx(y)]) continue;
      std::vector<VertexId> path;
      if (x != guest_.root()) {
        path = interior(map_[idx(guest_.parent(x))], y);
        bool clash = false;
        for (VertexId v : path) clash = clash || used_[idx(v)] || v == y;
        if (clash) continue;
      }
      map_[idx(x)] = y;
      used_[idx(y)] = 1;
      for (VertexId v : path) used_[idx(v)] = 1;
      if (extend(k + 1)) return true;
      for (VertexId v : path) used_[idx(v)] = 0;
      used_[idx(y)] = 0;
      map_[idx(x)] = kNoParent;
    }
    return false;
  }

  const RootedTree& guest_;
  const RootedTree& host_;
  const std::vector<VertexId>& order_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
};

// Symbolic search inside T_alpha. A host position is spine vertex v_index of
// a copy of T_gamma; its subtree depends only on (gamma, index).
class HorizonSearch {
 public:
  HorizonSearch(const SubtreeClasses& classes, std::uint64_t horizon) : classes_(classes), horizon_(horizon) {}

  struct Position {
    Ordinal gamma;
    std::uint64_t index;
  };

  std::vector<Position> host_children(const Position& p) const {
    std::vector<Position> out;
    if (p.index + 1 <= horizon_) out.push_back({p.gamma, p.index + 1});
    if (auto b = branch_ordinal(p.gamma, p.index)) out.push_back({std::move(*b), 1});
    return out;
  }

  bool at(int a, const Position& p) {
    auto key = std::make_tuple(a, p.gamma, p.index);
    if (auto it = at_.find(key); it != at_.end()) return it->second;
    bool result = compute_at(a, p);
    at_.emplace(std::move(key), result);
    return result;
  }

  bool within(int a, const Position& p) {
    auto key = std::make_tuple(a, p.gamma, p.index);
    if (auto it = within_.find(key); it != within_.end()) return it->second;
    bool result = at(a, p);
    if (!result)
      for (const auto& c : host_children(p))
        if ((result = within(a, c))) break;
    within_.emplace(std::move(key), result);
    return result;
  }

  // Child address: next spine vertex replaces the last component, a branch
  // root appends 1.
  static VertexAddress child_address(const VertexAddress& addr, const Position& parent, const Position& child) {
    VertexAddress out = addr;
    if (child.index == parent.index + 1 && child.gamma == parent.gamma) out.path.back() = child.index;
    else out.path.push_back(1);
    return out;
  }

  void place(const RootedTree& guest, const std::vector<int>& gcls, VertexId t, const Position& p,
             const VertexAddress& addr, std::vector<VertexAddress>& map) {
    map[idx(t)] = addr;
    auto kt = guest.children(t);
    if (kt.empty()) return;
    auto kp = host_children(p);
    BipartiteMatcher matcher(kt.size(), kp.size());
    for (std::size_t x = 0; x < kt.size(); ++x)
      for (std::size_t y = 0; y < kp.size(); ++y)
        if (within(gcls[idx(kt[x])], kp[y])) matcher.add_edge(x, y);
    if (matcher.solve() != kt.size()) throw std::logic_error("horizon witness matching is not saturating");
    for (std::size_t x = 0; x < kt.size(); ++x) {
      const Position& target = kp[static_cast<std::size_t>(matcher.mate_of_left(x))];
      auto [pos, a] = descend(gcls[idx(kt[x])], target, child_address(addr, p, target));
      place(guest, gcls, kt[x], pos, a, map);
    }
  }

  std::pair<Position, VertexAddress> descend(int a, Position p, VertexAddress addr) {
    while (!at(a, p)) {
      bool moved = false;
      for (auto& c : host_children(p)) {
        if (within(a, c)) {
          addr = child_address(addr, p, c);
          p = std::move(c);
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("horizon witness descent lost its target");
    }
    return {std::move(p), std::move(addr)};
  }

 private:
  bool compute_at(int a, const Position& p) {
    const auto& ka = classes_.children(a);
    if (ka.empty()) return true;
    auto kp = host_children(p);
    if (ka.size() > kp.size()) return false;
    BipartiteMatcher matcher(ka.size(), kp.size());
    for (std::size_t x = 0; x < ka.size(); ++x)
      for (std::size_t y = 0; y < kp.size(); ++y)
        if (within(ka[x], kp[y])) matcher.add_edge(x, y);
    return matcher.solve() == ka.size();
  }

  using Key = std::tuple<int, Ordinal, std::uint64_t>;
  const SubtreeClasses& classes_;
  std::uint64_t horizon_;
  std::map<Key, bool> at_;
  std::map<Key, bool> within_;
};

}  // namespace

EmbedDecision rooted_minor(const RootedTree& guest, const RootedTree& host) {
  require_nonempty(guest, host);
  SubtreeClasses classes;
  auto gcls = classes.classify(guest);
  auto hcls = classes.classify(host);
  ClassEmbedder engine(classes);
  EmbedDecision decision;
  if (!engine.within(gcls[idx(guest.root())], hcls[idx(host.root())])) return decision;

  WitnessBuilder builder(guest, gcls, host, hcls, engine);
  builder.place(guest.root(), builder.descend(guest.root(), host.root()));
  decision.witness = EmbeddingWitness{EmbedMode::Rooted, builder.take()};
  return decision;
}

EmbedDecision free_minor(const RootedTree& guest, const RootedTree& host) {
  require_nonempty(guest, host);
  EmbedDecision decision;
  if (guest.size() > host.size()) return decision;

  SubtreeClasses classes;
  auto gcls = classes.classify(guest);
  auto down = classes.classify(host);
  auto full = classes_at_every_root(host, down, classes);
  ClassEmbedder engine(classes);
  const int groot = gcls[idx(guest.root())];
  for (VertexId u : host.preorder()) {
    if (!engine.at(groot, full[idx(u)])) continue;
    RootedTree rerooted = host.reroot(u);
    auto rcls = classes.classify(rerooted);
    WitnessBuilder builder(guest, gcls, rerooted, rcls, engine);
    builder.place(guest.root(), u);
    decision.witness = EmbeddingWitness{EmbedMode::Free, builder.take()};
    return decision;
  }
  return decision;
}

bool brute_force_minor(const RootedTree& guest, const RootedTree& host, EmbedMode mode) {
  require_nonempty(guest, host);
  if (guest.size() > kBruteForceLimit || host.size() > kBruteForceLimit)
    throw DomainError("brute-force oracle is limited to trees with at most " + std::to_string(kBruteForceLimit) +
                      " vertices");
  if (guest.size() > host.size()) return false;
  if (mode == EmbedMode::Rooted) return RootedBruteForce(guest, host).run();
  return FreeBruteForce(guest, host).run();
}

bool validate_witness(const RootedTree& guest, const RootedTree& host, const EmbeddingWitness& w) {
  if (w.map.size() != guest.size()) throw DomainError("witness map is not total on the guest");
  for (VertexId v : w.map)
    if (v < 0 || idx(v) >= host.size()) throw DomainError("witness host id " + std::to_string(v) + " out of range");

  std::set<VertexId> image(w.map.begin(), w.map.end());
  if (image.size() != w.map.size()) return false;

  const VertexId root_image = w.map[idx(guest.root())];
  if (w.mode == EmbedMode::Free) {
    RootedTree rerooted = host.reroot(root_image);
    return pairwise_structure_preserved(guest, rerooted, w.map);
  }
  for (VertexId v : w.map)
    if (!host.is_ancestor(root_image, v)) return false;
  return pairwise_structure_preserved(guest, host, w.map);
}

HorizonDecision horizon_family_minor(const RootedTree& guest, const Ordinal& alpha, std::uint64_t horizon) {
  if (alpha.is_zero()) throw DomainError("family index must be >= 1");
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  if (guest.empty()) throw DomainError("embedding needs a non-empty guest");

  SubtreeClasses classes;
  auto gcls = classes.classify(guest);
  HorizonSearch search(classes, horizon);
  HorizonDecision decision;
  decision.horizon = horizon;
  const int groot = gcls[idx(guest.root())];
  HorizonSearch::Position start{alpha, 1};
  if (!search.within(groot, start)) return decision;

  auto [pos, addr] = search.descend(groot, start, VertexAddress{{1}});
  std::vector<VertexAddress> map(guest.size());
  search.place(guest, gcls, guest.root(), pos, addr, map);
  decision.witness = std::move(map);
  return decision;
}

bool validate_address_witness(const RootedTree& guest, const Ordinal& alpha, const std::vector<VertexAddress>& map) {
  if (map.size() != guest.size()) throw DomainError("witness map is not total on the guest");
  for (const auto& a : map)
    if (!address_valid(alpha, a)) return false;
  std::set<VertexAddress> image(map.begin(), map.end());
  if (image.size() != map.size()) return false;
  const auto n = static_cast<VertexId>(guest.size());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (guest.is_ancestor(a, b) != address_leq(map[idx(a)], map[idx(b)])) return false;
      if (a < b && map[idx(guest.meet(a, b))] != address_meet(map[idx(a)], map[idx(b)])) return false;
    }
  }
  return true;
}

std::string witness_to_json(const EmbeddingWitness& w) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v = 0; v < w.map.size(); ++v) out.push_back({v, w.map[v]});
  return out.dump();
}

std::string witness_to_json(const std::vector<VertexAddress>& map) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v = 0; v < map.size(); ++v) out.push_back({v, format_address(map[v])});
  return out.dump();
}

}  // namespace toptypes
