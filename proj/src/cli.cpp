#include "dirmix/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dirmix/characterize.hpp"
#include "dirmix/distribution.hpp"
#include "dirmix/errors.hpp"
#include "dirmix/mixture.hpp"
#include "dirmix/montecarlo.hpp"
#include "dirmix/serialize.hpp"

namespace dirmix::cli {

namespace {

using nlohmann::json;

// Bad flag value discovered after CLI11 parsing; the message names the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "human";
  std::string path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "output format: json, csv or human")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->envname("DIRMIX_FORMAT")
      ->capture_default_str();
  cmd->add_option("--output", opts.path, "write output to this file instead of standard output");
}

DistributionSpec spec_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_spec(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<Rational> rational_list_flag(const std::string& flag, const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(rational_flag(flag, item));
  if (values.empty()) throw UsageError(flag + ": expected a comma-separated list of rationals");
  return values;
}

std::uint64_t seed_flag(const std::string& text) {
  try {
    std::size_t used = 0;
    std::uint64_t value = 0;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      value = std::stoull(text.substr(2), &used, 16);
      used += 2;
    } else {
      value = std::stoull(text, &used, 10);
    }
    if (used != text.size() || text.front() == '-') throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw UsageError("--seed: expected a decimal or 0x-prefixed hexadecimal integer, got '" + text + "'");
  }
}

void emit(const OutputOptions& opts, const std::string& text, std::ostream& out) {
  if (opts.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.path, std::ios::binary);
  if (!file) throw UsageError("--output: cannot open '" + opts.path + "' for writing");
  file << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---- moments --------------------------------------------------------------

struct MomentsOptions {
  OutputOptions output;
  std::string dist;
  unsigned n = 0;
  std::string dirichlet;
  unsigned max_order = kDefaultMaxOrder;
};

int run_moments(const MomentsOptions& o, std::ostream& out) {
  const DistributionSpec spec = spec_flag("--dist", o.dist);
  std::optional<DirichletParams> params;
  if (!o.dirichlet.empty()) {
    auto values = rational_list_flag("--dirichlet", o.dirichlet);
    if (values.size() != o.n) {
      throw UsageError("--dirichlet: expected " + std::to_string(o.n) + " parameters, got " +
                       std::to_string(values.size()));
    }
    try {
      params.emplace(std::move(values));
    } catch (const ContractViolation& e) {
      throw UsageError(std::string("--dirichlet: ") + e.what());
    }
  }
  MomentSequence seq = [&] {
    if (!params) return s_moments(spec, o.n, o.max_order);
    const std::vector<DistributionSpec> specs(o.n, spec);
    return s_moments_general(specs, *params, o.max_order);
  }();

  std::ostringstream text;
  if (o.output.format == "json") {
    json doc = {{"schema", io::kSchemaVersion}, {"dist", to_string(spec)}, {"n", o.n}};
    if (params) {
      json a = json::array();
      for (const auto& v : params->values()) a.push_back(v.str());
      doc["dirichlet"] = std::move(a);
    }
    doc["support"] = {seq.support().lo.str(), seq.support().hi.str()};
    json decimals = json::array();
    json exact = json::array();
    for (const auto& m : seq.moments()) {
      exact.push_back(m.str());
      decimals.push_back(m.to_double());
    }
    doc["moments"] = std::move(exact);
    doc["moments_decimal"] = std::move(decimals);
    text << dump(doc);
  } else if (o.output.format == "csv") {
    text << "r,exact,decimal\n";
    for (unsigned r = 0; r < seq.size(); ++r) {
      text << r << ',' << seq[r].str() << ',' << io::decimal(seq[r].to_double()) << '\n';
    }
  } else {
    text << "E(S_n^r) for n = " << o.n << ", X_i ~ " << to_string(spec) << "\n";
    text << std::left << std::setw(4) << "r" << std::setw(40) << "exact" << "decimal\n";
    for (unsigned r = 0; r < seq.size(); ++r) {
      text << std::setw(4) << r << std::setw(40) << seq[r].str() << io::decimal(seq[r].to_double()) << '\n';
    }
  }
  emit(o.output, text.str(), out);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  OutputOptions output;
  unsigned n = 2;
  unsigned max_order = kDefaultMaxOrder;
  std::string a_list;
  std::string a = "1";
  std::string alpha;
  std::string target;
};

int emit_verification(const VerificationResult& result, const OutputOptions& opts, std::ostream& out) {
  std::ostringstream text;
  if (opts.format == "json") {
    text << dump(io::to_json(result));
  } else if (opts.format == "csv") {
    text << "claim,n,first_order,last_order,status,order,lhs,rhs\n";
    text << result.claim << ',' << result.n << ',' << result.orders.first << ',' << result.orders.last
         << ',' << (result.passed() ? "pass" : "fail") << ',';
    if (result.counterexample) {
      text << result.counterexample->order << ',' << result.counterexample->lhs.str() << ','
           << result.counterexample->rhs.str();
    } else {
      text << ",,";
    }
    text << '\n';
  } else {
    text << result.claim << " (n = " << result.n;
    for (const auto& [key, value] : result.params) text << ", " << key << " = " << value;
    text << ") orders " << result.orders.first << ".." << result.orders.last << ": "
         << (result.passed() ? "PASS" : "FAIL") << '\n';
    if (result.counterexample) {
      text << "  first mismatch at order " << result.counterexample->order << ": lhs "
           << result.counterexample->lhs.str() << " != rhs " << result.counterexample->rhs.str() << '\n';
    }
  }
  emit(opts, text.str(), out);
  return result.passed() ? kExitOk : kExitCheckFailed;
}

int run_verify(const std::string& claim, const VerifyOptions& o, std::ostream& out) {
  if (claim == "lemma1") {
    return emit_verification(verify_lemma1(o.n, {1, o.max_order}), o.output, out);
  }
  if (claim == "lemma2") {
    std::optional<DirichletParams> params;
    try {
      params.emplace(rational_list_flag("--a", o.a_list));
    } catch (const ContractViolation& e) {
      throw UsageError(std::string("--a: ") + e.what());
    }
    return emit_verification(verify_lemma2(*params, {1, o.max_order}), o.output, out);
  }
  const Rational a = rational_flag("--a", o.a);
  if (a <= 0) throw UsageError("--a: half-width must be positive");
  if (claim == "theorem1") {
    std::optional<DistributionSpec> target;
    if (!o.target.empty()) target = spec_flag("--target", o.target);
    return emit_verification(verify_theorem1(o.n, o.max_order, a, target), o.output, out);
  }
  const Rational alpha = rational_flag("--alpha", o.alpha);
  if (alpha <= 0 || alpha >= 1) throw UsageError("--alpha: must lie strictly between 0 and 1");
  return emit_verification(verify_theorem2(o.n, alpha, o.max_order, a), o.output, out);
}

// ---- recover --------------------------------------------------------------

struct RecoverOptions {
  OutputOptions output;
  unsigned n = 2;
  std::string target;
  std::string moments_file;
  bool identify = false;
  unsigned max_order = kDefaultMaxOrder;
};

MomentSequence load_moments_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("--moments-file: cannot open '" + path + "'");
  try {
    return io::moment_sequence_from_json(json::parse(file));
  } catch (const json::exception& e) {
    throw UsageError("--moments-file: " + std::string(e.what()));
  } catch (const ParseError& e) {
    throw UsageError("--moments-file: " + std::string(e.what()));
  }
}

int run_recover(const RecoverOptions& o, std::ostream& out) {
  if (o.target.empty() == o.moments_file.empty()) {
    throw UsageError("--target/--moments-file: give exactly one source of S_n moments");
  }
  MomentSequence s_seq = !o.target.empty() ? moments(spec_flag("--target", o.target), o.max_order)
                                           : load_moments_file(o.moments_file);
  if (s_seq.max_order() > o.max_order) s_seq = s_seq.truncated(o.max_order + 1);
  const MomentSequence recovered = recover_x_moments(s_seq, o.n);

  std::optional<IdentificationReport> report;
  if (o.identify) report = identify(recovered, default_candidate_grid(), o.max_order);

  std::ostringstream text;
  if (o.output.format == "json") {
    json doc = {{"schema", io::kSchemaVersion}, {"n", o.n}, {"s_moments", io::to_json(s_seq)},
                {"recovered", io::to_json(recovered)}};
    if (report) doc["identification"] = io::to_json(*report);
    text << dump(doc);
  } else if (o.output.format == "csv") {
    text << "r,s_moment,x_moment,x_decimal\n";
    for (unsigned r = 0; r < recovered.size(); ++r) {
      text << r << ',' << s_seq[r].str() << ',' << recovered[r].str() << ','
           << io::decimal(recovered[r].to_double()) << '\n';
    }
    if (report) {
      text << "\ncandidate,match,mismatch_order\n";
      for (const auto& c : report->candidates) {
        text << to_string(c.spec) << ',' << (c.matched() ? "yes" : "no") << ',';
        if (c.mismatch) text << c.mismatch->order;
        text << '\n';
      }
    }
  } else {
    text << "Recovered E(X^r) for n = " << o.n << " on [" << recovered.support().lo.str() << ", "
         << recovered.support().hi.str() << "]\n";
    text << std::left << std::setw(4) << "r" << std::setw(32) << "E(S_n^r)" << std::setw(32) << "E(X^r)"
         << "decimal\n";
    for (unsigned r = 0; r < recovered.size(); ++r) {
      text << std::setw(4) << r << std::setw(32) << s_seq[r].str() << std::setw(32) << recovered[r].str()
           << io::decimal(recovered[r].to_double()) << '\n';
    }
    if (report) {
      text << "\nHausdorff check through order " << report->validity.order << ": "
           << (report->validity.valid ? "PASS" : "FAIL");
      if (report->validity.violation) {
        text << " (j = " << report->validity.violation->first << ", k = " << report->validity.violation->second
             << ")";
      }
      text << "\n\n" << std::setw(28) << "candidate" << "result\n";
      for (const auto& c : report->candidates) {
        text << std::setw(28) << to_string(c.spec);
        if (c.matched()) {
          text << "match through order " << report->checked_order << '\n';
        } else {
          text << "differs at order " << c.mismatch->order << '\n';
        }
      }
      text << "\nmatches: " << report->matches.size() << '\n';
      for (const auto& m : report->matches) text << "  " << to_string(m) << '\n';
    }
  }
  emit(o.output, text.str(), out);
  if (report && (!report->validity.valid || report->matches.empty())) return kExitCheckFailed;
  return kExitOk;
}

// ---- simulate -------------------------------------------------------------

struct SimulateOptions {
  OutputOptions output;
  std::string dist;
  unsigned n = 0;
  std::size_t samples = 1000000;
  std::string seed;
  unsigned threads = 0;
};

int run_simulate(const SimulateOptions& o, std::ostream& out) {
  const DistributionSpec spec = spec_flag("--dist", o.dist);
  const std::uint64_t seed = o.seed.empty() ? kGoldenSeed : seed_flag(o.seed);
  SimulationOptions options;
  options.threads = o.threads;
  const SimReport report = simulate(spec, o.n, o.samples, seed, options);

  std::ostringstream text;
  if (o.output.format == "json") {
    text << dump(io::to_json(report));
  } else if (o.output.format == "csv") {
    text << io::to_csv(report);
  } else {
    text << "S_n for n = " << report.n << ", X_i ~ " << to_string(report.spec) << ", N = " << report.samples
         << ", seed = " << report.seed << '\n';
    if (report.target) {
      text << "KS vs " << to_string(*report.target) << ": D = " << io::decimal(*report.ks_statistic)
           << ", 1% critical = " << io::decimal(report.ks_critical_1pct) << "  "
           << (report.ks_passed() ? "PASS" : "FAIL") << '\n';
    } else {
      text << "no closed-form target law; moment checks only\n";
    }
    text << std::left << std::setw(4) << "r" << std::setw(26) << "exact" << std::setw(26) << "empirical"
         << std::setw(26) << "tolerance" << "status\n";
    for (const auto& m : report.moments) {
      text << std::setw(4) << m.order << std::setw(26) << io::decimal(m.exact.to_double()) << std::setw(26)
           << io::decimal(m.empirical) << std::setw(26) << io::decimal(m.tolerance)
           << (m.passed() ? "PASS" : "FAIL") << '\n';
    }
    text << "verdict: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  emit(o.output, text.str(), out);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

// ---- density-table --------------------------------------------------------

struct DensityOptions {
  OutputOptions output;
  std::string dist;
  unsigned points = 201;
};

int run_density_table(const DensityOptions& o, std::ostream& out) {
  const DistributionSpec spec = spec_flag("--dist", o.dist);
  if (spec.is<PointMass>()) throw UsageError("--dist: a point mass has no density table");
  const Interval s = support(spec);
  const double lo = s.lo.to_double();
  const double width = s.width().to_double();
  std::vector<double> xs(o.points);
  for (unsigned i = 0; i < o.points; ++i) {
    xs[i] = lo + width * (static_cast<double>(i) + 1.0) / (static_cast<double>(o.points) + 1.0);
  }

  std::ostringstream text;
  if (o.output.format == "json") {
    json rows = json::array();
    for (double x : xs) rows.push_back({{"x", x}, {"pdf", density(spec, x)}, {"cdf", cdf(spec, x)}});
    text << dump({{"schema", io::kSchemaVersion}, {"dist", to_string(spec)}, {"rows", std::move(rows)}});
  } else {
    text << "x,pdf,cdf\n";
    for (double x : xs) {
      text << io::decimal(x) << ',' << io::decimal(density(spec, x)) << ',' << io::decimal(cdf(spec, x)) << '\n';
    }
  }
  emit(o.output, text.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of Dirichlet-weighted sums S_n = R_1 X_1 + ... + R_n X_n", "dirmix"};
  app.require_subcommand(1);

  std::function<int()> action;
  const char* kN = "number of summands n in S_n = R_1 X_1 + ... + R_n X_n";
  const char* kMaxOrder = "highest moment order r to compute or compare";

  MomentsOptions mo;
  auto* moments_cmd = app.add_subcommand("moments", "exact table of E(S_n^r), r = 0..max-order");
  moments_cmd->add_option("--dist", mo.dist, "law of each X_i, e.g. arcsin:1 or beta:1/2,3/2,-1,2")->required();
  moments_cmd->add_option("--n", mo.n, kN)->required()->check(CLI::PositiveNumber);
  moments_cmd->add_option("--dirichlet", mo.dirichlet,
                          "comma-separated Dirichlet parameters a_1..a_n of R (default all ones: uniform spacings)");
  moments_cmd->add_option("--max-order", mo.max_order, kMaxOrder)->capture_default_str();
  add_output_flags(moments_cmd, mo.output);
  moments_cmd->callback([&] { action = [&] { return run_moments(mo, out); }; });

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "exact checks of the moment identities");
  verify_cmd->require_subcommand(1);

  auto* lemma1 = verify_cmd->add_subcommand(
      "lemma1", "sum of multinomial(r; i) prod (1/2)_{i_j} over compositions equals (n/2)_r");
  lemma1->add_option("--n", vo.n, "number of factors n in the composition sum")->required()->check(CLI::PositiveNumber);
  lemma1->add_option("--max-order", vo.max_order, "check orders r = 1..max-order")->capture_default_str();
  add_output_flags(lemma1, vo.output);
  lemma1->callback([&] { action = [&] { return run_verify("lemma1", vo, out); }; });

  auto* lemma2 = verify_cmd->add_subcommand(
      "lemma2", "sum of multinomial(r; i) prod (a_j)_{i_j} over compositions equals (a_1+...+a_n)_r");
  lemma2->add_option("--a", vo.a_list, "comma-separated positive parameters a_1..a_n (Dirichlet-multinomial)")
      ->required();
  lemma2->add_option("--max-order", vo.max_order, "check orders r = 1..max-order")->capture_default_str();
  add_output_flags(lemma2, vo.output);
  lemma2->callback([&] { action = [&] { return run_verify("lemma2", vo, out); }; });

  auto* theorem1 = verify_cmd->add_subcommand(
      "theorem1", "iid arcsin(-a, a) summands give a power semicircle S_n with lambda = (n-1)/2");
  theorem1->add_option("--n", vo.n, kN)->required()->check(CLI::Range(2u, 1000u));
  theorem1->add_option("--max-order", vo.max_order, kMaxOrder)->capture_default_str();
  theorem1->add_option("--a", vo.a, "half-width a of the support (-a, a)")->capture_default_str();
  theorem1->add_option("--target", vo.target,
                       "override the predicted law of S_n (negative controls), e.g. psc:2,1");
  add_output_flags(theorem1, vo.output);
  theorem1->callback([&] { action = [&] { return run_verify("theorem1", vo, out); }; });

  auto* theorem2 = verify_cmd->add_subcommand(
      "theorem2", "iid generalized arcsin(alpha) summands give S_n ~ Beta(n alpha, n(1-alpha), -a, 2a)");
  theorem2->add_option("--n", vo.n, kN)->required()->check(CLI::Range(2u, 1000u));
  theorem2->add_option("--alpha", vo.alpha, "shape alpha in (0, 1) of the generalized arcsin law")->required();
  theorem2->add_option("--max-order", vo.max_order, kMaxOrder)->capture_default_str();
  theorem2->add_option("--a", vo.a, "half-width a of the support (-a, a)")->capture_default_str();
  add_output_flags(theorem2, vo.output);
  theorem2->callback([&] { action = [&] { return run_verify("theorem2", vo, out); }; });

  RecoverOptions ro;
  auto* recover_cmd = app.add_subcommand(
      "recover", "recover E(X^r) of a common summand law from E(S_n^r), optionally identify it");
  recover_cmd->add_option("--n", ro.n, kN)->required()->check(CLI::Range(2u, 1000u));
  recover_cmd->add_option("--target", ro.target, "law of S_n whose exact moments are inverted, e.g. beta:1/2,3/2,-1,2");
  recover_cmd->add_option("--moments-file", ro.moments_file,
                          "JSON file {\"support\": [lo, hi], \"moments\": [\"1\", \"1/2\", ...]} of S_n moments");
  recover_cmd->add_flag("--identify", ro.identify,
                        "validate the recovered sequence (Hausdorff) and match it against the catalog grid");
  recover_cmd->add_option("--max-order", ro.max_order, kMaxOrder)->capture_default_str();
  add_output_flags(recover_cmd, ro.output);
  recover_cmd->callback([&] { action = [&] { return run_recover(ro, out); }; });

  SimulateOptions so;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo check of S_n: spacings weights, KS test and empirical moments");
  simulate_cmd->add_option("--dist", so.dist, "law of each X_i, e.g. arcsin:1")->required();
  simulate_cmd->add_option("--n", so.n, kN)->required()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--samples", so.samples, "number N of simulated S_n values (>= 1000)")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 40))
      ->capture_default_str();
  simulate_cmd->add_option("--seed", so.seed, "64-bit seed, decimal or 0x-prefixed hex (default: golden seed)");
  simulate_cmd->add_option("--threads", so.threads, "worker threads (0 = all cores); does not change results")
      ->capture_default_str();
  add_output_flags(simulate_cmd, so.output);
  simulate_cmd->callback([&] { action = [&] { return run_simulate(so, out); }; });

  DensityOptions dopt;
  dopt.output.format = "csv";
  auto* density_cmd = app.add_subcommand("density-table", "x, pdf, cdf table over the open support for plotting");
  density_cmd->add_option("--dist", dopt.dist, "catalog law, e.g. psc:1,1")->required();
  density_cmd->add_option("--points", dopt.points, "number of interior grid points")
      ->check(CLI::Range(1u, 10000000u))
      ->capture_default_str();
  density_cmd->add_option("--format", dopt.output.format, "output format: csv or json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  density_cmd->add_option("--output", dopt.output.path, "write output to this file instead of standard output");
  density_cmd->callback([&] { action = [&] { return run_density_table(dopt, out); }; });

  std::vector<const char*> argv{"dirmix"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedOperation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dirmix::cli
