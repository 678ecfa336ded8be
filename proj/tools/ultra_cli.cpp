#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ultra/error.hpp"
#include "ultra/harness.hpp"
#include "ultra/orthopoly.hpp"

using namespace ultra;
using namespace ultra::harness;

namespace {

struct Flags {
  std::vector<double> alphas, betas;
  double alpha_min = 0, alpha_max = 0, beta_min = 0, beta_max = 0, step = 1;
  int deg_cap = 0, trials = 0, m_max = 0;
  std::uint64_t seed = 1;
  std::string precision, out, format = "json";
  double tol = 0, boundary_tol = 0, root_bound = 0;
  bool timing = false;
};

CampaignConfig build_config(Campaign c, const Flags& f, const CLI::App& app) {
  CampaignConfig cfg = CampaignConfig::defaults(c);
  const auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--alpha")) cfg.alphas = f.alphas;
  if (given("--beta")) cfg.betas = f.betas;
  // an explicit range replaces a default list
  if (given("--alpha-min") || given("--alpha-max")) {
    if (!given("--alpha")) cfg.alphas.clear();
    if (given("--alpha-min")) cfg.alpha_min = f.alpha_min;
    if (given("--alpha-max")) cfg.alpha_max = f.alpha_max;
  }
  if (given("--beta-min") || given("--beta-max")) {
    if (!given("--beta")) cfg.betas.clear();
    if (given("--beta-min")) cfg.beta_min = f.beta_min;
    if (given("--beta-max")) cfg.beta_max = f.beta_max;
  }
  if (given("--step")) cfg.step = f.step;
  if (given("--deg-cap")) cfg.deg_cap = f.deg_cap;
  if (given("--trials")) cfg.trials = f.trials;
  if (given("--m-max")) cfg.m_max = f.m_max;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--precision")) cfg.precision = PrecisionPolicy::parse(f.precision);
  if (given("--tol")) cfg.tol = f.tol;
  if (given("--boundary-tol")) cfg.boundary_tol = f.boundary_tol;
  if (given("--root-bound")) cfg.root_bound = f.root_bound;
  cfg.timing = f.timing;
  cfg.out = f.out;
  cfg.format = format_from_string(f.format);
  return cfg;
}

std::string param_key(const CaseRecord& r) {
  std::string k;
  for (const auto& [name, v] : r.parameters)
    if (name == "alpha" || name == "beta") k += (k.empty() ? "" : " ") + name + "=" + format_number(v);
  return k;
}

void print_tables(const CampaignReport& rep) {
  if (rep.config.campaign == Campaign::Question31 || rep.config.campaign == Campaign::Conjecture32) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> table;
    std::vector<std::string> order;
    for (const auto& r : rep.records) {
      const auto key = param_key(r);
      if (!table.count(key)) order.push_back(key);
      auto& [cases, bad] = table[key];
      ++cases;
      if (r.status == CaseStatus::Violation) ++bad;
    }
    std::cerr << "parameters               cases  violations\n";
    for (const auto& k : order) {
      char line[128];
      std::snprintf(line, sizeof line, "%-24s %6zu %11zu\n", k.c_str(), table[k].first, table[k].second);
      std::cerr << line;
    }
  } else if (rep.config.campaign == Campaign::SsrExplore) {
    for (const auto& r : rep.records)
      std::cerr << r.input << "  " << r.classification << "  " << r.detail << (r.exploratory ? "  (exploratory)" : "")
                << "\n";
  }
}

int run(Campaign c, const Flags& f, const CLI::App& app) {
  const CampaignConfig cfg = build_config(c, f, app);
  const CampaignReport rep = run_campaign(cfg);
  if (cfg.out.empty()) {
    std::cout << (cfg.format == ReportFormat::Json ? report_to_json(rep) : report_to_csv(rep));
  } else {
    emit_report(rep, cfg.format, cfg.out);
  }
  print_tables(rep);
  const auto& s = rep.summary;
  std::cerr << to_string(c) << ": cases=" << s.cases << " passes=" << s.passes << " violations=" << s.violations
            << " indeterminates=" << s.indeterminates << " asserted_violations=" << s.asserted_violations << "\n";
  return s.asserted_violations > 0 ? 2 : 0;
}

int selftest() {
  bool ok = true;
  const std::vector<double> xs = {-0.9, -0.35, 0.0, 0.4, 0.85};
  std::cout << "G2 Taylor coefficient form\n";
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    const auto chk = g2_coefficient_check(a, 12, xs);
    std::printf("  alpha=%-4g 2k+2a+1 err=%.3e  2k+a+1 err=%.3e  supported=%s\n", a, chk.err_2k_2a_1, chk.err_2k_a_1,
                chk.supported.c_str());
    ok = ok && chk.err_2k_2a_1 <= 1e-9;
  }
  std::cout << "norm constant h_k for alpha=beta (quadrature vs closed forms)\n";
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    double err_closed = 0.0;
    double err_printed = 0.0;
    for (unsigned k = 0; k <= 10; ++k) {
      const double q = quad_inner_product(k, k, a, a);
      err_closed = std::max(err_closed, std::abs(q - ortho_constant(k, a, a).h) / q);
      err_printed = std::max(err_printed, std::abs(q - printed_ultra_norm(k, a)) / q);
    }
    std::printf("  alpha=%-4g 2^{1+2a} form rel err=%.3e  2^{1+a} printed form rel err=%.3e\n", a, err_closed,
                err_printed);
    ok = ok && err_closed <= 1e-8;
  }
  CampaignConfig cfg = CampaignConfig::defaults(Campaign::Theorem12);
  cfg.trials = 20;
  const auto rep = run_campaign(cfg);
  std::cout << "theorem12 smoke run: " << rep.summary.passes << "/" << rep.summary.cases << " pass\n";
  ok = ok && rep.summary.passes == rep.summary.cases;
  std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-preserving polynomial transforms: campaigns and checks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file mirroring the flags");

  Flags f;
  app.add_option("--alpha", f.alphas, "Explicit alpha values");
  app.add_option("--beta", f.betas, "Explicit beta values (ssr: UltraKernel exponents)");
  app.add_option("--alpha-min", f.alpha_min);
  app.add_option("--alpha-max", f.alpha_max);
  app.add_option("--beta-min", f.beta_min);
  app.add_option("--beta-max", f.beta_max);
  app.add_option("--step", f.step, "Grid step");
  app.add_option("--deg-cap", f.deg_cap, "Degree cap (n+m cap for boundary inputs)");
  app.add_option("--trials", f.trials, "Random inputs per parameter point");
  app.add_option("--seed", f.seed);
  app.add_option("--precision", f.precision, "double or extended:<bits>");
  app.add_option("--out", f.out, "Report path (stdout when omitted)");
  app.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", f.tol, "Open-interval tolerance");
  app.add_option("--boundary-tol", f.boundary_tol, "Closed-interval tolerance");
  app.add_option("--root-bound", f.root_bound, "Random roots drawn from (-b, b)");
  app.add_option("--m-max", f.m_max, "Largest minor order for ssr");
  app.add_flag("--timing", f.timing, "Record wall times and the real timestamp");

  std::map<CLI::App*, Campaign> campaigns;
  for (auto c : {Campaign::Theorem12, Campaign::Conjecture32, Campaign::Question31, Campaign::SsrExplore,
                 Campaign::BiorthoEquiv})
    campaigns[app.add_subcommand(to_string(c))->fallthrough()] = c;
  auto* self = app.add_subcommand("selftest", "Resolve the coefficient and norm questions numerically");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (self->parsed()) return selftest();
    for (const auto& [sub, c] : campaigns)
      if (sub->parsed()) return run(c, f, app);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
