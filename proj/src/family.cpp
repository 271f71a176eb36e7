#include "toptypes/family.hpp"

#include <algorithm>
#include <charconv>

#include "toptypes/error.hpp"

namespace toptypes {

namespace {

void require_positive(const Ordinal& alpha) {
  if (alpha.is_zero()) throw DomainError("family index must be >= 1 (T_0 is undefined)");
}

void require_well_formed(const VertexAddress& a) {
  if (a.path.empty()) throw DomainError("vertex address must be non-empty");
  for (auto c : a.path)
    if (c == 0) throw DomainError("vertex address components are 1-based");
}

struct BallBuilder {
  std::vector<VertexId> parent;
  std::vector<VertexAddress> addresses;

  VertexId add(VertexId up, VertexAddress addr) {
    parent.push_back(up);
    addresses.push_back(std::move(addr));
    return static_cast<VertexId>(parent.size() - 1);
  }

  // Spine v_1..v_{radius+1} of T_gamma hanging below `attach`, then the
  // branch balls. `prefix` is the address of the enclosing branch.
  void grow(const Ordinal& gamma, std::uint64_t radius, VertexAddress& prefix, VertexId attach) {
    std::vector<VertexId> spine;
    spine.reserve(radius + 1);
    for (std::uint64_t i = 1; i <= radius + 1; ++i) {
      prefix.path.push_back(i);
      spine.push_back(add(spine.empty() ? attach : spine.back(), prefix));
      prefix.path.pop_back();
    }
    for (std::uint64_t i = 1; i <= radius; ++i) {
      auto b = branch_ordinal(gamma, i);
      if (!b) break;
      prefix.path.push_back(i);
      grow(*b, radius - i, prefix, spine[i - 1]);
      prefix.path.pop_back();
    }
  }
};

}  // namespace

std::uint64_t VertexAddress::depth() const {
  std::uint64_t sum = 0;
  for (auto c : path) sum += c;
  return sum == 0 ? 0 : sum - 1;
}

VertexAddress parse_address(std::string_view text) {
  VertexAddress a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto part = text.substr(pos, end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw ParseError("address '" + std::string(text) + "': expected comma-separated positive integers");
    if (value == 0) throw ParseError("address '" + std::string(text) + "': components are 1-based");
    a.path.push_back(value);
    pos = end + 1;
  }
  return a;
}

std::string format_address(const VertexAddress& a) {
  std::string out;
  for (std::size_t k = 0; k < a.path.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(a.path[k]);
  }
  return out;
}

std::optional<Ordinal> branch_ordinal(const Ordinal& alpha, std::uint64_t i) {
  require_positive(alpha);
  if (i == 0) throw DomainError("spine index must be >= 1");
  switch (classify(alpha)) {
    case OrdinalKind::Limit:
      return fund_seq(alpha, i);
    case OrdinalKind::Successor: {
      auto d = predecessor(alpha);
      if (d.is_zero()) return std::nullopt;
      return d;
    }
    case OrdinalKind::Zero:
      break;
  }
  return std::nullopt;
}

VertexId FamilyBall::find(const VertexAddress& a) const {
  auto it = index.find(a);
  return it == index.end() ? kNoParent : it->second;
}

FamilyBall ball(const Ordinal& alpha, std::uint64_t radius) {
  require_positive(alpha);
  BallBuilder builder;
  VertexAddress prefix;
  builder.grow(alpha, radius, prefix, kNoParent);

  FamilyBall out;
  std::vector<std::string> labels;
  labels.reserve(builder.addresses.size());
  for (std::size_t v = 0; v < builder.addresses.size(); ++v) {
    labels.push_back(format_address(builder.addresses[v]));
    out.index.emplace(builder.addresses[v], static_cast<VertexId>(v));
  }
  out.tree = RootedTree::from_parents(std::move(builder.parent), std::move(labels));
  out.addresses = std::move(builder.addresses);
  return out;
}

bool address_valid(const Ordinal& alpha, const VertexAddress& addr) {
  require_positive(alpha);
  if (addr.path.empty()) return false;
  Ordinal gamma = alpha;
  for (std::size_t k = 0; k < addr.path.size(); ++k) {
    if (addr.path[k] == 0) return false;
    if (k + 1 == addr.path.size()) break;
    auto b = branch_ordinal(gamma, addr.path[k]);
    if (!b) return false;
    gamma = std::move(*b);
  }
  return true;
}

VertexAddress address_meet(const VertexAddress& a, const VertexAddress& b) {
  require_well_formed(a);
  require_well_formed(b);
  const auto& x = a.path;
  const auto& y = b.path;
  std::size_t t = 0;
  while (t < x.size() && t < y.size() && x[t] == y[t]) ++t;
  if (t == x.size()) return a;
  if (t == y.size()) return b;
  VertexAddress m;
  m.path.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(t));
  m.path.push_back(std::min(x[t], y[t]));
  return m;
}

bool address_leq(const VertexAddress& a, const VertexAddress& b) { return address_meet(a, b) == a; }

VertexAddress family_embed_map(const Ordinal& alpha, const Ordinal& beta, const VertexAddress& addr) {
  require_positive(alpha);
  if (beta < alpha)
    throw DomainError("family_embed_map needs alpha <= beta, got " + format_ordinal(alpha) + " > " + format_ordinal(beta));
  if (!address_valid(alpha, addr))
    throw DomainError("address " + format_address(addr) + " is not a vertex of T_" + format_ordinal(alpha));

  VertexAddress out;
  Ordinal gamma = beta;
  while (gamma != alpha) {
    if (classify(gamma) == OrdinalKind::Successor) {
      out.path.push_back(1);
      gamma = predecessor(gamma);
    } else {
      auto j = fund_seq_index_reaching(gamma, alpha);
      out.path.push_back(j);
      gamma = fund_seq(gamma, j);
    }
  }
  out.path.insert(out.path.end(), addr.path.begin(), addr.path.end());
  return out;
}

}  // namespace toptypes
