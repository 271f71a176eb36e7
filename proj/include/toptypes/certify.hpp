#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toptypes/ordinal.hpp"

namespace toptypes {

// Proof rules for "T_beta does not embed into T_alpha" (alpha < beta).
//
//   Base        (2, 1): a comb does not embed into a ray.
//   Reduce      beta = d + 1 with alpha < d; premise (d, alpha), because
//               T_d sits inside T_beta.
//   Limit       beta limit, index j with alpha < fund_seq(beta, j); premise
//               (fund_seq(beta, j), alpha), because that tree is a branch of
//               T_beta.
//   Pigeonhole  beta = alpha + 1. Premise: T_alpha embeds into no branch of
//               T_alpha. For alpha = d + 1 that is the single pair
//               (alpha, d); for limit alpha it is the family
//               (alpha, fund_seq(alpha, i)) over all i >= 1, so the node is
//               schematic and its instances are generated on demand.
enum class CertRule { Base, Reduce, Limit, Pigeonhole };

struct Certificate {
  CertRule rule = CertRule::Base;
  Ordinal beta;
  Ordinal alpha;
  std::uint64_t index = 0;     // Limit only
  bool schematic = false;      // Pigeonhole over a limit alpha
  std::uint64_t instance = 0;  // > 0 on an expanded instance of a schematic parent
  std::vector<Certificate> children;
};

std::string rule_name(CertRule r);

// Throws DomainError unless 1 <= alpha < beta.
Certificate certify_nonembed(const Ordinal& beta, const Ordinal& alpha);

struct CheckOptions {
  std::uint64_t instances = 8;  // schematic instances checked per node
  std::size_t max_depth = 512;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::size_t> failing_node;  // child indices from the root
  std::string reason;
};

CheckReport check_certificate(const Certificate& c, const CheckOptions& options = {});

// Concrete sub-certificate for instance i of the schematic node reached by
// `node_path` (child indices from the root). Throws DomainError if that node
// is not schematic.
Certificate expand_schematic(const Certificate& root, std::span<const std::size_t> node_path, std::uint64_t i);

// Replaces the children of every schematic node with instances 1..k, recursively.
void expand_all_schematic(Certificate& c, std::uint64_t k);

// Longest root-to-leaf chain of explicit nodes.
std::size_t certificate_depth(const Certificate& c);
std::size_t certificate_size(const Certificate& c);

std::string certificate_to_json(const Certificate& c, int indent = -1);
Certificate certificate_from_json(const std::string& text);

}  // namespace toptypes
