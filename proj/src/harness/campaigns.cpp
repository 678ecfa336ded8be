#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <sstream>

#include "ultra/biortho.hpp"
#include "ultra/error.hpp"
#include "ultra/harness.hpp"
#include "ultra/polycore.hpp"
#include "ultra/random.hpp"
#include "ultra/signreg.hpp"
#include "ultra/transforms.hpp"

namespace ultra::harness {
namespace {

/// Minimum root gap for inputs whose roots serve as biorthogonality nodes.
constexpr double kNodeSeparation = 0.01;
/// Largest coefficient deviation accepted by the equivalence check.
constexpr double kEquivalenceTolerance = 1e-6;
/// Node-orthogonality residual bound, relative to the largest moment.
constexpr double kResidualTolerance = 1e-8;

/// Either (x-1)^n (x+1)^m or the monic polynomial with the given roots.
struct InputPoly {
  int n = -1;
  int m = -1;
  std::vector<double> roots;

  std::string describe() const {
    if (n >= 0) return "(x-1)^" + std::to_string(n) + "(x+1)^" + std::to_string(m);
    std::string s = "prod(x-r) r=[";
    for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? "," : "") + format_number(roots[i]);
    return s + "]";
  }
  int degree() const { return n >= 0 ? n + m : static_cast<int>(roots.size()); }
};

template <class T>
BasicPoly<T> build(const InputPoly& in) {
  std::vector<T> r;
  if (in.n >= 0) {
    r.assign(static_cast<std::size_t>(in.n), T(1));
    r.insert(r.end(), static_cast<std::size_t>(in.m), T(-1));
  } else {
    for (double v : in.roots) r.push_back(T(v));
  }
  return BasicPoly<T>::from_roots(std::span<const T>(r));
}

std::vector<Complex> transformed_roots(const TransformKind& kind, const InputPoly& in, const PrecisionPolicy& policy) {
  const TransformSpec spec{kind, 30};
  if (policy.is_extended()) {
    ScopedPrecision guard(policy.bits);
    return poly_roots(apply_transform(spec, build<Extended>(in)), policy);
  }
  return poly_roots(apply_transform(spec, build<double>(in)), policy);
}

std::vector<double> random_roots(Rng& rng, int degree, double bound, double min_sep) {
  std::vector<double> r(static_cast<std::size_t>(degree));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (double& v : r) v = rng.uniform(-bound, bound);
    std::sort(r.begin(), r.end());
    bool ok = true;
    for (std::size_t i = 1; i < r.size() && ok; ++i) ok = r[i] - r[i - 1] >= min_sep;
    if (ok) return r;
  }
  fail(ErrorCode::BadParameter, "cannot place roots with the requested separation");
}

bool is_nonnegative_integer(double v) { return v >= 0.0 && v == std::floor(v); }

std::string current_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Runs one case body, stamping index and wall time. Library errors inside a
/// case become indeterminate records carrying the message.
class Runner {
 public:
  explicit Runner(const CampaignConfig& cfg) {
    cfg.validate();
    report_.config = cfg;
    if (cfg.timing) report_.timestamp = current_timestamp();
  }

  void add(std::vector<std::pair<std::string, double>> params, bool exploratory,
           const std::function<void(CaseRecord&, Rng&)>& body) {
    CaseRecord rec;
    rec.index = report_.records.size();
    rec.parameters = std::move(params);
    rec.exploratory = exploratory;
    rec.min_boundary_distance = std::numeric_limits<double>::infinity();
    Rng rng(derive_seed(report_.config.seed, rec.index));
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(rec, rng);
    } catch (const Error& e) {
      rec.status = CaseStatus::Indeterminate;
      rec.classification = "Error";
      rec.detail = e.what();
    }
    if (report_.config.timing)
      rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.records.push_back(std::move(rec));
  }

  CampaignReport finish() {
    report_.summarize();
    return std::move(report_);
  }

 private:
  CampaignReport report_;
};

/// Open-interval verdict: inside passes, boundary contact is reported as
/// indeterminate, anything else is a violation.
void open_interval_verdict(CaseRecord& rec, const RootReport& rep) {
  rec.classification = to_string(rep.classification);
  rec.min_boundary_distance = rep.min_boundary_distance;
  switch (rep.classification) {
    case RootClass::AllStrictlyInside: rec.status = CaseStatus::Pass; break;
    case RootClass::SomeOnBoundary:
      rec.status = CaseStatus::Indeterminate;
      rec.detail = "boundary_distance=" + format_number(rep.min_boundary_distance);
      break;
    default:
      rec.status = CaseStatus::Violation;
      rec.detail = "max_abs_imag=" + format_number(rep.max_abs_imag);
      break;
  }
}

void closed_interval_verdict(CaseRecord& rec, const RootReport& rep) {
  rec.classification = to_string(rep.classification);
  rec.min_boundary_distance = rep.min_boundary_distance;
  rec.status = rep.in_closed_interval() ? CaseStatus::Pass : CaseStatus::Violation;
  rec.detail = "interior=" + std::to_string(rep.inside) + " boundary=" + std::to_string(rep.on_boundary) +
               " outside=" + std::to_string(rep.outside) + " non_real=" + std::to_string(rep.non_real) +
               " max_abs_imag=" + format_number(rep.max_abs_imag);
}

std::size_t boundary_family_size(int cap) { return static_cast<std::size_t>(cap) * (cap + 3) / 2; }

/// (x-1)^n (x+1)^m with 1 <= n + m <= cap plus `trials` random interior
/// inputs of degree < 10, for every (alpha, beta) in the grid.
CampaignReport run_jacobi_family(const CampaignConfig& cfg, bool factorial) {
  Runner run(cfg);
  const PrecisionPolicy& pol = cfg.precision;
  for (double a : cfg.alpha_grid()) {
    for (double b : cfg.beta_grid()) {
      const TransformKind kind = factorial ? TransformKind{JacobiFactorialQ31{a, b}} : TransformKind{JacobiConj32{a, b}};
      const bool exploratory =
          factorial ? (a < 0.0 || b < 0.0) : !(is_nonnegative_integer(a) && is_nonnegative_integer(b));
      for (int d = 1; d <= cfg.deg_cap; ++d) {
        for (int n = d; n >= 0; --n) {
          const InputPoly in{n, d - n, {}};
          run.add({{"alpha", a}, {"beta", b}, {"n", n}, {"m", d - n}}, exploratory, [&](CaseRecord& rec, Rng&) {
            rec.input = in.describe();
            const auto roots = transformed_roots(kind, in, pol);
            if (factorial) {
              const auto rep = classify_roots(roots, Interval::real_line(), cfg.boundary_tol);
              rec.classification = rep.classification == RootClass::AllStrictlyInside ? "RealRooted" : "SomeNonReal";
              rec.status = rep.classification == RootClass::AllStrictlyInside ? CaseStatus::Pass : CaseStatus::Violation;
              rec.detail = "max_abs_imag=" + format_number(rep.max_abs_imag);
            } else {
              closed_interval_verdict(rec, classify_roots(roots, Interval::unit(), cfg.boundary_tol));
            }
          });
        }
      }
      for (int t = 0; t < cfg.trials; ++t) {
        run.add({{"alpha", a}, {"beta", b}, {"trial", t}}, exploratory, [&](CaseRecord& rec, Rng& rng) {
          const int degree = rng.uniform_int(1, std::min(9, cfg.deg_cap));
          const InputPoly in{-1, -1, random_roots(rng, degree, cfg.root_bound, 0.0)};
          rec.input = in.describe();
          const auto roots = transformed_roots(kind, in, pol);
          if (factorial) {
            const auto rep = classify_roots(roots, Interval::real_line(), cfg.boundary_tol);
            rec.classification = rep.classification == RootClass::AllStrictlyInside ? "RealRooted" : "SomeNonReal";
            rec.status = rep.classification == RootClass::AllStrictlyInside ? CaseStatus::Pass : CaseStatus::Violation;
            rec.detail = "max_abs_imag=" + format_number(rep.max_abs_imag);
          } else {
            open_interval_verdict(rec, classify_roots(roots, Interval::unit(), cfg.tol));
          }
        });
      }
    }
  }
  return run.finish();
}

std::vector<double> range_grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + 1e-9 * step) break;
    g.push_back(v);
  }
  return g;
}

void ssr_verdict(CaseRecord& rec, const SsrReport& rep, bool require_stp) {
  rec.classification = to_string(rep.verdict);
  std::ostringstream os;
  os << "signs=" << rep.sign_pattern();
  double worst_indeterminate = 0.0;
  for (const auto& l : rep.levels) {
    os << " m" << l.m << "(+" << l.positives << ",-" << l.negatives << ",?" << l.indeterminates << ")";
    worst_indeterminate = std::max(worst_indeterminate, l.max_indeterminate_ratio);
  }
  os << " max_indeterminate_ratio=" << format_number(worst_indeterminate);
  rec.detail = os.str();
  switch (rep.verdict) {
    case SsrVerdict::ConsistentSTP: rec.status = CaseStatus::Pass; break;
    case SsrVerdict::ConsistentSSR: rec.status = require_stp ? CaseStatus::Violation : CaseStatus::Pass; break;
    case SsrVerdict::ViolationFound: rec.status = CaseStatus::Violation; break;
    case SsrVerdict::Inconclusive: rec.status = CaseStatus::Indeterminate; break;
  }
}

std::vector<double> ssr_ultra_exponents(const CampaignConfig& cfg) {
  return cfg.betas.empty() ? CampaignConfig::defaults(Campaign::SsrExplore).betas : cfg.betas;
}

}  // namespace

CampaignReport run_theorem12_campaign(const CampaignConfig& cfg) {
  Runner run(cfg);
  for (double a : cfg.alpha_grid()) {
    for (int t = 0; t < cfg.trials; ++t) {
      run.add({{"alpha", a}, {"trial", t}}, false, [&](CaseRecord& rec, Rng& rng) {
        const int degree = rng.uniform_int(1, cfg.deg_cap);
        const InputPoly in{-1, -1, random_roots(rng, degree, cfg.root_bound, 0.0)};
        rec.input = in.describe();
        const auto roots = transformed_roots(UltraTheorem12{a}, in, cfg.precision);
        open_interval_verdict(rec, classify_roots(roots, Interval::unit(), cfg.tol));
      });
    }
  }
  return run.finish();
}

CampaignReport run_conjecture32_campaign(const CampaignConfig& cfg) { return run_jacobi_family(cfg, false); }

CampaignReport run_question31_campaign(const CampaignConfig& cfg) { return run_jacobi_family(cfg, true); }

CampaignReport run_ssr_explore(const CampaignConfig& cfg) {
  Runner run(cfg);
  for (double beta : ssr_ultra_exponents(cfg)) {
    run.add({{"beta", beta}}, !(beta > 0.0), [&](CaseRecord& rec, Rng&) {
      const auto k = KernelSpec::ultra(beta);
      rec.input = k.describe();
      ssr_verdict(rec, ssr_scan(k, cfg.m_max, cfg.trials, cfg.seed, cfg.precision), beta > 0.0);
    });
  }
  for (double a : range_grid(cfg.alpha_min, cfg.alpha_max, cfg.step)) {
    for (double b : range_grid(cfg.beta_min, cfg.beta_max, cfg.step)) {
      run.add({{"alpha", a}, {"beta", b}}, true, [&](CaseRecord& rec, Rng&) {
        const auto k = KernelSpec::jacobi_genfun(a, b);
        rec.input = k.describe();
        ssr_verdict(rec, ssr_scan(k, cfg.m_max, cfg.trials, cfg.seed, cfg.precision), false);
      });
    }
  }
  return run.finish();
}

CampaignReport run_biortho_equiv_campaign(const CampaignConfig& cfg) {
  Runner run(cfg);
  const auto alphas = cfg.alpha_grid();
  for (double a : alphas) {
    for (int t = 0; t < cfg.trials; ++t) {
      run.add({{"alpha", a}, {"trial", t}}, false, [&](CaseRecord& rec, Rng& rng) {
        const int degree = rng.uniform_int(1, cfg.deg_cap);
        const InputPoly in{-1, -1, random_roots(rng, degree, cfg.root_bound, kNodeSeparation)};
        rec.input = "equivalence " + in.describe();
        const double dev = transform_equivalence_check(build<double>(in), a, cfg.precision);
        rec.classification = dev <= kEquivalenceTolerance ? "Equivalent" : "Deviates";
        rec.status = dev <= kEquivalenceTolerance ? CaseStatus::Pass : CaseStatus::Violation;
        rec.detail = "deviation=" + format_number(dev);
      });
    }
  }
  for (double a : alphas) {
    for (int t = 0; t < cfg.trials; ++t) {
      run.add({{"alpha", a}, {"trial", t}}, false, [&](CaseRecord& rec, Rng& rng) {
        const int m = rng.uniform_int(1, std::min(5, cfg.deg_cap));
        const auto nodes = random_roots(rng, m, cfg.root_bound, kNodeSeparation);
        std::string desc = "zeros nodes=[";
        for (std::size_t i = 0; i < nodes.size(); ++i) desc += (i ? "," : "") + format_number(nodes[i]);
        rec.input = desc + "]";
        PrecisionPolicy pol = cfg.precision;
        pol.tau_root = cfg.tol;
        const auto sys = biorthogonal_poly(ultraspherical_biortho_kernel(a), nodes, Interval::unit(), pol);
        const auto res = orthogonality_residuals(sys);
        double worst = 0.0;
        double moment_scale = 0.0;
        for (double r : res) worst = std::max(worst, std::abs(r));
        for (const auto& row : sys.moment_matrix)
          for (double v : row) moment_scale = std::max(moment_scale, std::abs(v));
        if (!(worst <= kResidualTolerance * moment_scale)) {
          rec.status = CaseStatus::Indeterminate;
          rec.classification = "ResidualTooLarge";
          rec.detail = "max_residual=" + format_number(worst);
          return;
        }
        const auto rep = zeros_in_interval_check(sys, pol);
        open_interval_verdict(rec, rep);
        if (rec.status == CaseStatus::Pass && !(rep.min_pairwise_separation > cfg.tol)) {
          rec.status = CaseStatus::Violation;
          rec.detail = "zeros not distinct";
        } else if (rec.detail.empty()) {
          rec.detail = "min_pairwise_separation=" + format_number(rep.min_pairwise_separation);
        }
      });
    }
  }
  return run.finish();
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  switch (cfg.campaign) {
    case Campaign::Theorem12: return run_theorem12_campaign(cfg);
    case Campaign::Conjecture32: return run_conjecture32_campaign(cfg);
    case Campaign::Question31: return run_question31_campaign(cfg);
    case Campaign::SsrExplore: return run_ssr_explore(cfg);
    case Campaign::BiorthoEquiv: return run_biortho_equiv_campaign(cfg);
  }
  fail(ErrorCode::BadParameter, "unknown campaign");
}

std::size_t predicted_case_count(const CampaignConfig& cfg) {
  const auto trials = static_cast<std::size_t>(cfg.trials);
  switch (cfg.campaign) {
    case Campaign::Theorem12: return cfg.alpha_grid().size() * trials;
    case Campaign::Conjecture32:
    case Campaign::Question31:
      return cfg.alpha_grid().size() * cfg.beta_grid().size() * (boundary_family_size(cfg.deg_cap) + trials);
    case Campaign::SsrExplore:
      return ssr_ultra_exponents(cfg).size() + range_grid(cfg.alpha_min, cfg.alpha_max, cfg.step).size() *
                                                    range_grid(cfg.beta_min, cfg.beta_max, cfg.step).size();
    case Campaign::BiorthoEquiv: return 2 * cfg.alpha_grid().size() * trials;
  }
  return 0;
}

}  // namespace ultra::harness
