#include "toptypes/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "toptypes/embed.hpp"
#include "toptypes/error.hpp"
#include "toptypes/family.hpp"

namespace toptypes {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void tally_witness(WitnessTally* tally, const RootedTree& guest, const RootedTree& host, const EmbedDecision& d) {
  if (!tally || !d.embeds()) return;
  ++tally->produced;
  if (validate_witness(guest, host, *d.witness)) ++tally->valid;
}

PairRecord evaluate_pair(const Ordinal& alpha, const Ordinal& beta, const VerifyConfig& config) {
  PairRecord r;
  r.alpha = alpha;
  r.beta = beta;

  auto t0 = Clock::now();
  r.positive = min_host_radius(alpha, beta, config.guest_radius, config.max_host_radius, &r.witnesses);
  r.positive_ms = ms_since(t0);

  t0 = Clock::now();
  r.negative = refutation_radius(beta, alpha, config.guest_radius, config.max_host_radius, false, &r.witnesses);
  // A free refutation is also a rooted one, so it cannot come earlier.
  if (r.negative)
    r.free_negative = refutation_radius(beta, alpha, config.guest_radius, config.max_host_radius, true, &r.witnesses);
  r.negative_ms = ms_since(t0);

  t0 = Clock::now();
  Certificate cert = certify_nonembed(beta, alpha);
  CheckOptions options;
  options.instances = config.certificate_instances;
  auto check = check_certificate(cert, options);
  r.certificate_ok = check.ok;
  r.certificate_reason = check.reason;
  r.certificate_depth = certificate_depth(cert);
  r.certificate_ms = ms_since(t0);
  return r;
}

nlohmann::json radius_field(const std::optional<std::uint64_t>& value, const char* found, const char* missing,
                            std::uint64_t bound) {
  nlohmann::json out;
  if (value) out[found] = *value;
  else out[missing] = bound;
  return out;
}

}  // namespace

std::vector<Ordinal> default_corpus() {
  return parse_corpus("1,2,3,4,5,w,w+1,w+2,w*2,w*2+1,w^2,w^2+w,w^w");
}

std::vector<Ordinal> parse_corpus(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<Ordinal> out;
  for (std::string token; in >> token;) {
    Ordinal a = parse_ordinal(token);
    if (a.is_zero()) throw DomainError("corpus ordinals must be >= 1");
    out.push_back(std::move(a));
  }
  if (out.empty()) throw ParseError("corpus is empty");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::uint64_t> min_host_radius(const Ordinal& alpha, const Ordinal& beta, std::uint64_t guest_radius,
                                             std::uint64_t max_host_radius, WitnessTally* tally) {
  RootedTree guest = ball(alpha, guest_radius).tree;
  for (std::uint64_t d = 0; d <= max_host_radius; ++d) {
    RootedTree host = ball(beta, d).tree;
    auto decision = rooted_minor(guest, host);
    tally_witness(tally, guest, host, decision);
    if (decision.embeds()) return d;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> refutation_radius(const Ordinal& beta, const Ordinal& alpha,
                                               std::uint64_t max_guest_radius, std::uint64_t host_radius,
                                               bool free_mode, WitnessTally* tally) {
  RootedTree host = ball(alpha, host_radius).tree;
  for (std::uint64_t d = 0; d <= max_guest_radius; ++d) {
    RootedTree guest = ball(beta, d).tree;
    auto decision = free_mode ? free_minor(guest, host) : rooted_minor(guest, host);
    tally_witness(tally, guest, host, decision);
    if (!decision.embeds()) return d;
  }
  return std::nullopt;
}

Report run_verify(const VerifyConfig& config) {
  if (config.guest_radius < 1) throw DomainError("guest radius must be >= 1");
  if (config.max_host_radius < config.guest_radius) throw DomainError("max host radius must be >= guest radius");
  for (const auto& a : config.corpus)
    if (a.is_zero()) throw DomainError("corpus ordinals must be >= 1");

  auto start = Clock::now();
  Report report;
  report.config = config;
  std::vector<Ordinal> corpus = config.corpus;
  std::sort(corpus.begin(), corpus.end());
  corpus.erase(std::unique(corpus.begin(), corpus.end()), corpus.end());
  report.config.corpus = corpus;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) pairs.emplace_back(i, j);
  report.records.resize(pairs.size());

  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, pairs.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) {
          if (failed) return;
          try {
            auto [i, j] = pairs[k];
            report.records[k] = evaluate_pair(corpus[i], corpus[j], config);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  report.elapsed_ms = ms_since(start);
  return report;
}

std::string report_to_json(const Report& report, int indent) {
  nlohmann::json doc;
  doc["corpus"] = nlohmann::json::array();
  for (const auto& a : report.config.corpus) doc["corpus"].push_back(format_ordinal(a));
  doc["guest_radius"] = report.config.guest_radius;
  doc["max_host_radius"] = report.config.max_host_radius;
  doc["certificate_instances"] = report.config.certificate_instances;
  doc["records"] = nlohmann::json::array();
  const auto d = report.config.guest_radius;
  const auto dmax = report.config.max_host_radius;
  for (const auto& r : report.records) {
    nlohmann::json rec;
    rec["alpha"] = format_ordinal(r.alpha);
    rec["beta"] = format_ordinal(r.beta);
    rec["positive"] = radius_field(r.positive, "min_host_radius", "not_found_up_to", dmax);
    rec["negative"] = radius_field(r.negative, "refutation_radius", "no_finite_refutation_up_to", d);
    rec["negative"]["host_radius"] = dmax;
    if (r.negative) {
      rec["free_negative"] = radius_field(r.free_negative, "refutation_radius", "no_finite_refutation_up_to", d);
      rec["free_negative"]["host_radius"] = dmax;
    } else {
      rec["free_negative"] = {{"skipped", "no rooted refutation"}};
    }
    rec["certificate"] = {{"ok", r.certificate_ok}, {"depth", r.certificate_depth}};
    if (!r.certificate_ok) rec["certificate"]["reason"] = r.certificate_reason;
    rec["witnesses"] = {{"produced", r.witnesses.produced}, {"valid", r.witnesses.valid}};
    rec["timings_ms"] = {{"positive", r.positive_ms}, {"negative", r.negative_ms}, {"certificate", r.certificate_ms}};
    doc["records"].push_back(std::move(rec));
  }
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump(indent);
}

}  // namespace toptypes
