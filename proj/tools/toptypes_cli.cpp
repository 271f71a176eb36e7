// toptypes: build family balls, decide tree embeddings, emit certificates
// and run the verification sweep.
//
// Exit codes: 0 success / embeds, 1 negative answer or failed self-check,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toptypes/certify.hpp"
#include "toptypes/embed.hpp"
#include "toptypes/error.hpp"
#include "toptypes/family.hpp"
#include "toptypes/harness.hpp"
#include "toptypes/ordinal.hpp"
#include "toptypes/tree.hpp"

namespace {

using namespace toptypes;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Ordinal family_index(const std::string& text) {
  Ordinal a = parse_ordinal(text);
  if (a.is_zero()) throw DomainError("family index must be >= 1");
  return a;
}

const char* ordering_symbol(std::strong_ordering c) {
  if (c < 0) return "<";
  if (c > 0) return ">";
  return "=";
}

const char* kind_name(OrdinalKind k) {
  switch (k) {
    case OrdinalKind::Zero: return "zero";
    case OrdinalKind::Successor: return "successor";
    case OrdinalKind::Limit: return "limit";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfinite tree family: construction, embedding and certificates"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Emit the radius-r ball of T_alpha");
  std::string build_alpha;
  std::int64_t build_radius = 0;
  std::string build_format = "text";
  std::string build_out;
  build->add_option("--alpha", build_alpha, "Family index (ordinal notation)")->required();
  build->add_option("--radius", build_radius, "Ball radius")->required();
  build->add_option("--format", build_format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
  build->add_option("--out", build_out, "Output file (default stdout)");

  // embed
  auto* embed = app.add_subcommand("embed", "Decide whether GUEST is a topological minor of HOST");
  std::string guest_file, host_file, embed_mode = "rooted";
  bool want_witness = false;
  embed->add_option("guest", guest_file, "Guest tree file (parenthesis or JSON)")->required();
  embed->add_option("host", host_file, "Host tree file (parenthesis or JSON)")->required();
  embed->add_option("--mode", embed_mode, "rooted | free")->check(CLI::IsMember({"rooted", "free"}));
  embed->add_flag("--witness", want_witness, "Print the validated witness as JSON");

  // family-embed
  auto* fam = app.add_subcommand("family-embed", "Image of an address of T_alpha under the canonical map into T_beta");
  std::string fam_alpha, fam_beta, fam_addr;
  fam->add_option("--alpha", fam_alpha)->required();
  fam->add_option("--beta", fam_beta)->required();
  fam->add_option("--addr", fam_addr, "Comma-separated address, e.g. 2,3,1")->required();

  // certify
  auto* cert = app.add_subcommand("certify", "Certificate that T_beta does not embed into T_alpha");
  std::string cert_alpha, cert_beta;
  std::uint64_t cert_expand = 0;
  std::uint64_t cert_instances = 8;
  cert->add_option("--alpha", cert_alpha)->required();
  cert->add_option("--beta", cert_beta)->required();
  cert->add_option("--expand", cert_expand, "Expand schematic nodes to this many instances");
  cert->add_option("--instances", cert_instances, "Schematic instances checked per node");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the desk-scale sweep over all pairs of a corpus");
  std::string corpus_text, corpus_file, report_out;
  std::uint64_t guest_radius = 4, max_host_radius = 12, verify_instances = 8;
  unsigned jobs = 0;
  verify->add_option("--corpus", corpus_text, "Ordinals separated by commas");
  verify->add_option("--corpus-file", corpus_file, "File with one ordinal per line");
  verify->add_option("--d", guest_radius, "Guest radius");
  verify->add_option("--dmax", max_host_radius, "Host radius cap");
  verify->add_option("--instances", verify_instances, "Schematic instances checked per certificate node");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  verify->add_option("--out", report_out, "Report path (default stdout)");

  // ordinal
  auto* ord = app.add_subcommand("ordinal", "Ordinal utilities");
  ord->require_subcommand(1);
  std::string ord_a, ord_b;
  std::uint64_t ord_i = 1;
  auto* ord_format = ord->add_subcommand("format", "Parse and print in canonical notation");
  ord_format->add_option("a", ord_a)->required();
  auto* ord_compare = ord->add_subcommand("compare", "Print <, = or >");
  ord_compare->add_option("a", ord_a)->required();
  ord_compare->add_option("b", ord_b)->required();
  auto* ord_classify = ord->add_subcommand("classify", "zero | successor | limit");
  ord_classify->add_option("a", ord_a)->required();
  auto* ord_fundseq = ord->add_subcommand("fundseq", "i-th element of the fundamental sequence");
  ord_fundseq->add_option("a", ord_a)->required();
  ord_fundseq->add_option("i", ord_i)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      if (build_radius < 0) throw DomainError("radius must be >= 0");
      auto b = ball(family_index(build_alpha), static_cast<std::uint64_t>(build_radius));
      std::string text;
      if (build_format == "text") text = serialize_tree(b.tree);
      else if (build_format == "json") text = tree_to_json(b.tree);
      else text = to_dot(b.tree);
      write_output(build_out, text);
      return 0;
    }

    if (*embed) {
      RootedTree guest = parse_tree_any(read_file(guest_file));
      RootedTree host = parse_tree_any(read_file(host_file));
      auto decision = embed_mode == "free" ? free_minor(guest, host) : rooted_minor(guest, host);
      if (!decision.embeds()) {
        std::cout << "not embeddable\n";
        return kExitNegative;
      }
      if (!validate_witness(guest, host, *decision.witness)) {
        std::cerr << "internal error: witness failed validation\n";
        return kExitUsage;
      }
      std::cout << (want_witness ? witness_to_json(*decision.witness) : std::string("embeds")) << '\n';
      return 0;
    }

    if (*fam) {
      auto image = family_embed_map(family_index(fam_alpha), family_index(fam_beta), parse_address(fam_addr));
      std::cout << format_address(image) << '\n';
      return 0;
    }

    if (*cert) {
      Certificate c = certify_nonembed(family_index(cert_beta), family_index(cert_alpha));
      expand_all_schematic(c, cert_expand);
      CheckOptions options;
      options.instances = cert_instances;
      auto check = check_certificate(c, options);
      if (!check.ok) {
        std::cerr << "certificate self-check failed: " << check.reason << '\n';
        return kExitNegative;
      }
      std::cout << certificate_to_json(c, 2) << '\n';
      return 0;
    }

    if (*verify) {
      VerifyConfig config;
      if (!corpus_file.empty()) config.corpus = parse_corpus(read_file(corpus_file));
      else if (!corpus_text.empty()) config.corpus = parse_corpus(corpus_text);
      config.guest_radius = guest_radius;
      config.max_host_radius = max_host_radius;
      config.certificate_instances = verify_instances;
      config.jobs = jobs;
      Report report = run_verify(config);
      write_output(report_out, report_to_json(report));
      bool all_certified = true;
      for (const auto& r : report.records) all_certified = all_certified && r.certificate_ok;
      return all_certified ? 0 : kExitNegative;
    }

    if (*ord) {
      Ordinal a = parse_ordinal(ord_a);
      if (*ord_format) std::cout << format_ordinal(a) << '\n';
      else if (*ord_compare) std::cout << ordering_symbol(compare(a, parse_ordinal(ord_b))) << '\n';
      else if (*ord_classify) std::cout << kind_name(classify(a)) << '\n';
      else if (*ord_fundseq) std::cout << format_ordinal(fund_seq(a, ord_i)) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
