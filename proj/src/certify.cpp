#include "toptypes/certify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <json.hpp>

#include "toptypes/error.hpp"

namespace toptypes {

namespace {

const Ordinal& one() {
  static const Ordinal value = Ordinal::natural(1);
  return value;
}

const Ordinal& two() {
  static const Ordinal value = Ordinal::natural(2);
  return value;
}

std::string pair_text(const Ordinal& beta, const Ordinal& alpha) {
  return "(" + format_ordinal(beta) + ", " + format_ordinal(alpha) + ")";
}

Certificate instance_of(const Ordinal& alpha, std::uint64_t i) {
  Certificate c = certify_nonembed(alpha, fund_seq(alpha, i));
  c.instance = i;
  return c;
}

class Checker {
 public:
  explicit Checker(const CheckOptions& options) : options_(options) {}

  CheckReport run(const Certificate& c) {
    std::vector<std::size_t> path;
    check(c, path, 0);
    return report_;
  }

 private:
  bool fail(const std::vector<std::size_t>& path, const Certificate& c, const std::string& why) {
    if (report_.ok) {
      report_.ok = false;
      report_.failing_node = path;
      report_.reason = rule_name(c.rule) + " " + pair_text(c.beta, c.alpha) + ": " + why;
    }
    return false;
  }

  bool expect_child(const std::vector<std::size_t>& path, const Certificate& c, const Ordinal& beta,
                    const Ordinal& alpha) {
    if (c.children.size() != 1) return fail(path, c, "expected exactly one premise");
    const auto& k = c.children[0];
    if (k.instance != 0) return fail(path, c, "premise must not be a schematic instance");
    if (k.beta != beta || k.alpha != alpha)
      return fail(path, c, "premise proves " + pair_text(k.beta, k.alpha) + ", needed " + pair_text(beta, alpha));
    return true;
  }

  bool check(const Certificate& c, std::vector<std::size_t>& path, std::size_t depth) {
    if (depth > options_.max_depth) return fail(path, c, "depth bound exceeded");
    if (c.alpha.is_zero()) return fail(path, c, "alpha must be >= 1");
    if (!(c.alpha < c.beta)) return fail(path, c, "alpha must be below beta");
    if (c.rule != CertRule::Limit && c.index != 0) return fail(path, c, "index is only meaningful on limit nodes");
    if (c.rule != CertRule::Pigeonhole && c.schematic) return fail(path, c, "only pigeonhole nodes can be schematic");

    switch (c.rule) {
      case CertRule::Base:
        if (c.beta != two() || c.alpha != one()) return fail(path, c, "base covers only (2, 1)");
        if (!c.children.empty()) return fail(path, c, "base has no premises");
        return true;

      case CertRule::Reduce: {
        if (classify(c.beta) != OrdinalKind::Successor) return fail(path, c, "beta must be a successor");
        Ordinal d = predecessor(c.beta);
        if (!(c.alpha < d)) return fail(path, c, "alpha must be below predecessor(beta)");
        if (!expect_child(path, c, d, c.alpha)) return false;
        return descend(c, 0, path, depth);
      }

      case CertRule::Limit: {
        if (classify(c.beta) != OrdinalKind::Limit) return fail(path, c, "beta must be a limit");
        if (c.index == 0) return fail(path, c, "limit index must be >= 1");
        Ordinal branch = fund_seq(c.beta, c.index);
        if (!(c.alpha < branch)) return fail(path, c, "fund_seq(beta, j) must exceed alpha");
        if (!expect_child(path, c, branch, c.alpha)) return false;
        return descend(c, 0, path, depth);
      }

      case CertRule::Pigeonhole: {
        if (classify(c.beta) != OrdinalKind::Successor || predecessor(c.beta) != c.alpha)
          return fail(path, c, "beta must equal alpha + 1");
        if (c.alpha == one()) return fail(path, c, "(2, 1) is the base case");
        if (classify(c.alpha) == OrdinalKind::Successor) {
          if (c.schematic) return fail(path, c, "successor alpha needs a concrete premise");
          if (!expect_child(path, c, c.alpha, predecessor(c.alpha))) return false;
          return descend(c, 0, path, depth);
        }
        if (!c.schematic) return fail(path, c, "limit alpha needs a schematic premise");
        std::set<std::uint64_t> seen;
        for (std::size_t k = 0; k < c.children.size(); ++k) {
          const auto& inst = c.children[k];
          if (inst.instance == 0) return fail(path, c, "schematic premise child lacks an instance number");
          if (!seen.insert(inst.instance).second) return fail(path, c, "duplicate schematic instance");
          Ordinal branch = fund_seq(c.alpha, inst.instance);
          if (inst.beta != c.alpha || inst.alpha != branch)
            return fail(path, c,
                        "instance " + std::to_string(inst.instance) + " proves " + pair_text(inst.beta, inst.alpha) +
                            ", needed " + pair_text(c.alpha, branch));
          if (!descend(c, k, path, depth)) return false;
        }
        for (std::uint64_t i = 1; i <= options_.instances; ++i) {
          if (seen.count(i)) continue;
          if (!generated_holds(c.alpha, fund_seq(c.alpha, i), depth))
            return fail(path, c, "generated instance " + std::to_string(i) + " does not check");
        }
        return true;
      }
    }
    return fail(path, c, "unknown rule");
  }

  bool descend(const Certificate& c, std::size_t k, std::vector<std::size_t>& path, std::size_t depth) {
    path.push_back(k);
    bool ok = check(c.children[k], path, depth + 1);
    path.pop_back();
    return ok;
  }

  // Instances produced by the generator are checked once per pair.
  bool generated_holds(const Ordinal& beta, const Ordinal& alpha, std::size_t depth) {
    auto key = std::make_pair(beta, alpha);
    if (proven_.count(key)) return true;
    Certificate sub = certify_nonembed(beta, alpha);
    Checker inner(options_);
    inner.proven_ = std::move(proven_);
    std::vector<std::size_t> path;
    bool ok = inner.check(sub, path, depth + 1);
    proven_ = std::move(inner.proven_);
    if (ok) proven_.insert(std::move(key));
    return ok;
  }

  const CheckOptions& options_;
  CheckReport report_;
  std::set<std::pair<Ordinal, Ordinal>> proven_;
};

const Certificate* locate(const Certificate& c, std::span<const std::size_t> path) {
  const Certificate* node = &c;
  for (auto k : path) {
    if (k >= node->children.size()) throw DomainError("certificate node path out of range");
    node = &node->children[k];
  }
  return node;
}

CertRule rule_from_name(const std::string& name) {
  if (name == "base") return CertRule::Base;
  if (name == "reduce") return CertRule::Reduce;
  if (name == "limit") return CertRule::Limit;
  if (name == "pigeonhole") return CertRule::Pigeonhole;
  throw ParseError("certificate json: unknown rule '" + name + "'");
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json node;
  node["rule"] = rule_name(c.rule);
  node["pair"] = {format_ordinal(c.beta), format_ordinal(c.alpha)};
  if (c.rule == CertRule::Limit) node["index"] = c.index;
  if (c.instance != 0) node["instance"] = c.instance;
  node["schematic"] = c.schematic;
  node["children"] = nlohmann::json::array();
  for (const auto& k : c.children) node["children"].push_back(to_json(k));
  return node;
}

Certificate from_json(const nlohmann::json& node) {
  if (!node.is_object()) throw ParseError("certificate json: node must be an object");
  for (const char* field : {"rule", "pair", "children", "schematic"})
    if (!node.contains(field)) throw ParseError(std::string("certificate json: missing field \"") + field + "\"");
  const auto& pair = node["pair"];
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
    throw ParseError("certificate json: \"pair\" must be two ordinal strings");
  if (!node["children"].is_array()) throw ParseError("certificate json: \"children\" must be an array");

  Certificate c;
  c.rule = rule_from_name(node["rule"].get<std::string>());
  c.beta = parse_ordinal(pair[0].get<std::string>());
  c.alpha = parse_ordinal(pair[1].get<std::string>());
  c.schematic = node["schematic"].get<bool>();
  if (node.contains("index")) c.index = node["index"].get<std::uint64_t>();
  if (node.contains("instance")) c.instance = node["instance"].get<std::uint64_t>();
  for (const auto& k : node["children"]) c.children.push_back(from_json(k));
  return c;
}

}  // namespace

std::string rule_name(CertRule r) {
  switch (r) {
    case CertRule::Base: return "base";
    case CertRule::Reduce: return "reduce";
    case CertRule::Limit: return "limit";
    case CertRule::Pigeonhole: return "pigeonhole";
  }
  return "?";
}

Certificate certify_nonembed(const Ordinal& beta, const Ordinal& alpha) {
  if (alpha.is_zero()) throw DomainError("certify_nonembed needs alpha >= 1");
  if (!(alpha < beta)) throw DomainError("certify_nonembed needs alpha < beta, got " + pair_text(beta, alpha));

  Certificate c;
  c.beta = beta;
  c.alpha = alpha;
  if (beta == two() && alpha == one()) {
    c.rule = CertRule::Base;
    return c;
  }
  if (classify(beta) == OrdinalKind::Limit) {
    c.rule = CertRule::Limit;
    c.index = fund_seq_index_reaching(beta, successor(alpha));
    c.children.push_back(certify_nonembed(fund_seq(beta, c.index), alpha));
    return c;
  }
  Ordinal d = predecessor(beta);
  if (alpha < d) {
    c.rule = CertRule::Reduce;
    c.children.push_back(certify_nonembed(d, alpha));
    return c;
  }
  c.rule = CertRule::Pigeonhole;
  if (classify(alpha) == OrdinalKind::Successor) {
    c.children.push_back(certify_nonembed(alpha, predecessor(alpha)));
  } else {
    c.schematic = true;
  }
  return c;
}

CheckReport check_certificate(const Certificate& c, const CheckOptions& options) { return Checker(options).run(c); }

Certificate expand_schematic(const Certificate& root, std::span<const std::size_t> node_path, std::uint64_t i) {
  const Certificate* node = locate(root, node_path);
  if (!node->schematic) throw DomainError("certificate node is not schematic");
  if (i == 0) throw DomainError("schematic instances are numbered from 1");
  return instance_of(node->alpha, i);
}

void expand_all_schematic(Certificate& c, std::uint64_t k) {
  if (c.schematic) {
    c.children.clear();
    for (std::uint64_t i = 1; i <= k; ++i) c.children.push_back(instance_of(c.alpha, i));
  }
  for (auto& child : c.children) expand_all_schematic(child, k);
}

std::size_t certificate_depth(const Certificate& c) {
  std::size_t deepest = 0;
  for (const auto& k : c.children) deepest = std::max(deepest, certificate_depth(k));
  return deepest + 1;
}

std::size_t certificate_size(const Certificate& c) {
  std::size_t total = 1;
  for (const auto& k : c.children) total += certificate_size(k);
  return total;
}

std::string certificate_to_json(const Certificate& c, int indent) { return to_json(c).dump(indent); }

Certificate certificate_from_json(const std::string& text) {
  try {
    return from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate json: ") + e.what());
  }
}

}  // namespace toptypes
