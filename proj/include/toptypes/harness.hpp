#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toptypes/certify.hpp"
#include "toptypes/ordinal.hpp"

namespace toptypes {

// {1, 2, 3, 4, 5, w, w+1, w+2, w*2, w*2+1, w^2, w^2+w, w^w}
std::vector<Ordinal> default_corpus();

// Ordinals separated by commas or whitespace.
std::vector<Ordinal> parse_corpus(const std::string& text);

// Counts witnesses that were produced and checked with validate_witness.
struct WitnessTally {
  std::uint64_t produced = 0;
  std::uint64_t valid = 0;
};

// Least D <= max_host_radius with ball(alpha, guest_radius) rooted-embedding
// into ball(beta, D). Every D below the result was tried and failed.
std::optional<std::uint64_t> min_host_radius(const Ordinal& alpha, const Ordinal& beta, std::uint64_t guest_radius,
                                             std::uint64_t max_host_radius, WitnessTally* tally = nullptr);

// Least d <= max_guest_radius such that ball(beta, d) does not embed into
// ball(alpha, host_radius) (rooted or free).
std::optional<std::uint64_t> refutation_radius(const Ordinal& beta, const Ordinal& alpha,
                                               std::uint64_t max_guest_radius, std::uint64_t host_radius,
                                               bool free_mode = false, WitnessTally* tally = nullptr);

struct VerifyConfig {
  std::vector<Ordinal> corpus = default_corpus();
  std::uint64_t guest_radius = 4;
  std::uint64_t max_host_radius = 12;
  std::uint64_t certificate_instances = 8;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct PairRecord {
  Ordinal alpha;
  Ordinal beta;
  std::optional<std::uint64_t> positive;       // min host radius
  std::optional<std::uint64_t> negative;       // rooted refutation radius
  std::optional<std::uint64_t> free_negative;  // free refutation radius
  bool certificate_ok = false;
  std::string certificate_reason;
  std::size_t certificate_depth = 0;
  WitnessTally witnesses;
  double positive_ms = 0;
  double negative_ms = 0;
  double certificate_ms = 0;
};

struct Report {
  VerifyConfig config;
  std::vector<PairRecord> records;  // one per alpha < beta in the corpus
  double elapsed_ms = 0;
};

Report run_verify(const VerifyConfig& config);
std::string report_to_json(const Report& report, int indent = 2);

}  // namespace toptypes
