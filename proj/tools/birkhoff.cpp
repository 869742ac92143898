#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "birkhoff/geometry.hpp"
#include "birkhoff/serialize.hpp"

using namespace birkhoff;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string field = "rational";
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned samples = 8;
  std::string output = "text";
  std::string out_file;
};

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_file);
  out << text;
}

unsigned default_bound(const std::string& pair_text) {
  // Largest part mentioned; 1 when both sides are empty.
  unsigned best = 1;
  unsigned long cur = 0;
  for (char c : pair_text) {
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + static_cast<unsigned long>(c - '0');
      if (cur > 1000000) cur = 1000000;
    } else {
      best = std::max(best, static_cast<unsigned>(cur));
      cur = 0;
    }
  }
  return std::max(best, static_cast<unsigned>(cur));
}

int run_decompose(const std::string& pair_text, unsigned m, const CommonOptions& opts) {
  if (m == 0) m = default_bound(pair_text);
  PartitionPair pr = parse_pair(pair_text, m);
  CanonicalDecomposition dec = canonical_decomposition(pr.p, pr.q);
  if (opts.output == "dot") {
    emit(opts, matching_dot(pr.p, pr.q, dec.matching));
  } else if (opts.output == "json") {
    Json out;
    out["pair"] = pr.str();
    out["m"] = m;
    Json summands = Json::array();
    for (const PartitionPair& s : dec.summands) summands.push_back(s.str());
    out["summands"] = std::move(summands);
    emit(opts, dump_json(out));
  } else {
    std::string text;
    for (const PartitionPair& s : dec.summands) text += s.str() + "\n";
    emit(opts, text);
  }
  return kExitOk;
}

template <class K>
int run_module(const PartitionPair& pr, const CommonOptions& opts) {
  AModule<K> mod = build_canonical_module<K>(pr.p, pr.q);
  Json out = amodule_json(mod);
  out["gorenstein_projective"] = is_gorenstein_projective(mod);
  emit(opts, dump_json(out));
  return kExitOk;
}

template <class K>
int run_hom_ext(bool ext, const PartitionPair& a, const PartitionPair& b,
                const CommonOptions& opts) {
  AModule<K> ma = build_canonical_module<K>(a.p, a.q);
  AModule<K> mb = build_canonical_module<K>(b.p, b.q);
  std::size_t ab = ext ? ext1_dim(ma, mb) : hom_dim(ma, mb);
  std::size_t ba = ext ? ext1_dim(mb, ma) : hom_dim(mb, ma);
  const char* what = ext ? "ext" : "hom";
  if (opts.output == "json") {
    Json out;
    out["pair_a"] = a.str();
    out["pair_b"] = b.str();
    out["m"] = ma.m;
    out["field"] = FieldTraits<K>::name;
    if constexpr (FieldTraits<K>::prime) out["prime"] = Fp::modulus();
    out[std::string(what) + "_ab"] = ab;
    out[std::string(what) + "_ba"] = ba;
    emit(opts, dump_json(out));
  } else {
    emit(opts, std::string(what) + "(a,b) = " + std::to_string(ab) + "\n" + what + "(b,a) = " +
                   std::to_string(ba) + "\n");
  }
  return kExitOk;
}

int run_verify(unsigned m, unsigned d0, unsigned d1, const CommonOptions& opts,
               unsigned iso_attempts) {
  VerifyConfig config;
  config.prime = opts.prime;
  config.seed = opts.seed;
  config.samples = opts.samples;
  config.iso_attempts = iso_attempts;
  IrreducibilityCertificate cert = verify_irreducibility(m, d0, d1, config);
  if (opts.output == "dot") {
    emit(opts, degeneration_dot(cert));
  } else if (opts.output == "json") {
    emit(opts, dump_json(certificate_json(cert)));
  } else {
    std::string text = "variety m=" + std::to_string(m) + " d0=" + std::to_string(d0) +
                       " d1=" + std::to_string(d1) + "\nmaximal pair: (" + cert.maximal.str() +
                       ")\n";
    for (const StratumRecord& r : cert.strata) {
      text += "  (" + r.report.pair.str() + ") stratum=" +
              std::to_string(r.report.stratum_dimension) + " orbit=" +
              std::to_string(r.report.orbit_dimension) +
              (r.report.dense_in_stratum ? " dense" : " NOT-DENSE") +
              (r.hom_order_ok ? "" : " hom-order-FAIL") +
              (r.reached_maximal ? " reaches-max" : " unreached") + " samples=" +
              std::to_string(r.samples_isomorphic) + "/" + std::to_string(r.samples_total) + "\n";
    }
    text += std::string("verdict: ") + (cert.verdict ? "true" : "false") + "\n";
    emit(opts, text);
  }
  return cert.verdict ? kExitOk : kExitVerdictFalse;
}

int run_sweep_cmd(unsigned m_max, unsigned d_max, const CommonOptions& opts) {
  SweepConfig config;
  config.seed = opts.seed;
  SweepSummary summary = run_sweep(m_max, d_max, config);
  if (opts.output == "json") {
    emit(opts, dump_json(sweep_json(summary)));
  } else {
    std::string text;
    for (const CheckResult& c : summary.checks)
      text += c.name + ": " + std::to_string(c.cases - c.failures) + "/" + std::to_string(c.cases) +
              (c.failures ? " FAIL" : " ok") + "\n";
    text += std::string("all passed: ") + (summary.all_passed() ? "true" : "false") + "\n";
    emit(opts, text);
  }
  return summary.all_passed() ? kExitOk : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics and exact linear algebra of Birkhoff module varieties"};
  app.require_subcommand(1);

  CommonOptions opts;
  unsigned m = 0, d0 = 0, d1 = 0, m_max = 2, d_max = 3, iso_attempts = 32;
  std::string pair_text, pair_b_text;

  auto add_common = [&](CLI::App* cmd, bool with_field) {
    cmd->add_option("--output", opts.output, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--out-file", opts.out_file, "write output to a file instead of stdout");
    if (with_field) {
      cmd->add_option("--field", opts.field, "scalar field: rational or prime")
          ->check(CLI::IsMember({"rational", "prime"}));
      cmd->add_option("--prime", opts.prime, "odd prime modulus for --field prime");
    }
  };

  CLI::App* decompose = app.add_subcommand("decompose", "canonical decomposition of a pair");
  decompose->add_option("pair", pair_text, "partition pair \"p1,p2,...|q1,q2,...\"")->required();
  decompose->add_option("--m", m, "bound on parts (default: the largest part)");
  add_common(decompose, false);

  CLI::App* module_cmd = app.add_subcommand("module", "canonical module of a pair as JSON");
  module_cmd->add_option("pair", pair_text)->required();
  module_cmd->add_option("--m", m, "bound on parts")->required();
  add_common(module_cmd, true);

  CLI::App* hom_cmd = app.add_subcommand("hom", "Hom dimensions between canonical modules");
  hom_cmd->add_option("pair_a", pair_text)->required();
  hom_cmd->add_option("pair_b", pair_b_text)->required();
  hom_cmd->add_option("--m", m)->required();
  add_common(hom_cmd, true);

  CLI::App* ext_cmd = app.add_subcommand("ext", "Ext^1 dimensions between canonical modules");
  ext_cmd->add_option("pair_a", pair_text)->required();
  ext_cmd->add_option("pair_b", pair_b_text)->required();
  ext_cmd->add_option("--m", m)->required();
  add_common(ext_cmd, true);

  CLI::App* verify = app.add_subcommand("verify", "irreducibility certificate for one variety");
  verify->add_option("--m", m)->required();
  verify->add_option("--d0", d0)->required();
  verify->add_option("--d1", d1)->required();
  verify->add_option("--seed", opts.seed, "base seed for stratum sampling");
  verify->add_option("--samples", opts.samples, "samples per stratum");
  verify->add_option("--prime", opts.prime, "sampling prime");
  verify->add_option("--iso-attempts", iso_attempts, "random attempts per isomorphism check");
  add_common(verify, false);

  CLI::App* sweep = app.add_subcommand("sweep", "property sweep over a grid of varieties");
  sweep->add_option("--m-max", m_max)->required();
  sweep->add_option("--d-max", d_max)->required();
  sweep->add_option("--seed", opts.seed);
  add_common(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose->parsed()) return run_decompose(pair_text, m, opts);

    const bool prime_field = opts.field == "prime";
    if (prime_field) Fp::set_modulus(opts.prime);

    if (module_cmd->parsed()) {
      PartitionPair pr = parse_pair(pair_text, m);
      return prime_field ? run_module<Fp>(pr, opts) : run_module<Rational>(pr, opts);
    }
    if (hom_cmd->parsed() || ext_cmd->parsed()) {
      PartitionPair a = parse_pair(pair_text, m);
      PartitionPair b = parse_pair(pair_b_text, m);
      bool ext = ext_cmd->parsed();
      return prime_field ? run_hom_ext<Fp>(ext, a, b, opts) : run_hom_ext<Rational>(ext, a, b, opts);
    }
    if (verify->parsed()) return run_verify(m, d0, d1, opts, iso_attempts);
    if (sweep->parsed()) return run_sweep_cmd(m_max, d_max, opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdictFalse;
  }
  return kExitUsage;
}
