#include "trineq/suite.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <thread>

#include "trineq/evaluate.hpp"
#include "trineq/reference_cases.hpp"
#include "trineq/sampling.hpp"

namespace trineq {

std::vector<double> default_nu_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 10; ++k) g.push_back(k / 10.0);
  return g;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 10; ++k) g.push_back(k / 10.0);
  return g;
}

void RunConfig::validate() const {
  if (samples < 0) throw DomainError("samples must be nonnegative");
  if (dims.empty()) throw DomainError("at least one dimension is required");
  for (Index n : dims) {
    if (n < 2 || n > 6) throw DomainError("dims must lie in {2,...,6}, got " + std::to_string(n));
  }
  for (double v : nu_grid) {
    if (!(v > 0.0 && v <= 1.0)) throw DomainError("nu grid values must lie in (0,1]");
  }
  for (double a : alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("alpha grid values must lie in [0,1]");
  }
  if (nu_grid.empty() || alpha_grid.empty()) throw DomainError("parameter grids must be nonempty");
  if (rel_tol && !(*rel_tol > 0.0)) throw DomainError("tolerance override must be positive");
}

namespace {

using I = InequalityId;

GapReport error_report(InequalityId id, const std::exception& e) {
  GapReport r;
  r.id = id;
  r.holds = false;
  r.gap = std::numeric_limits<double>::quiet_NaN();
  r.note = std::string("error: ") + e.what();
  return r;
}

double ratio(const GapReport& r) { return r.gap / r.tolerance; }

// Keeps the report with the smallest gap/tolerance ratio.
struct Worst {
  std::optional<GapReport> best;

  void offer(GapReport r) {
    if (!best || ratio(r) < ratio(*best)) best = std::move(r);
  }
};

GapReport run_variational(const VariationalReport& v) {
  GapReport r = v.dominance;
  if (!v.maximizer_matches) r.holds = false;
  r.detail.push_back({"maximizer_error", v.maximizer_error});
  return r;
}

// Worst report over the grid for one random sample.
GapReport sample_case(InequalityId id, const RunConfig& cfg, Index n, SplitMix64& rng) {
  Worst w;
  switch (id) {
    case I::prop22_upper:
    case I::cmp_upper_bounds:
    case I::furuta_upper_chain: {
      const HermMatrix x = random_pd(n, 1.0, rng);
      const HermMatrix y = random_pd(n, 1.0, rng);
      for (double v : cfg.nu_grid) {
        const Deformation nu(v);
        if (id == I::prop22_upper) {
          w.offer(gap_prop22(x, y, nu));
        } else if (id == I::cmp_upper_bounds) {
          w.offer(gap_cmp_upper(x, y, nu));
        } else {
          if (spectral_bounds(x, y).degenerate) {
            GapReport r = make_geq_report(id, 0.0, 0.0);
            r.applicable = false;
            r.note = "not applicable: h <= 1 + 1e-9";
            return r;
          }
          auto [lower, upper] = gap_furuta_chain(x, y, nu);
          w.offer(std::move(lower));
          w.offer(std::move(upper));
        }
      }
      break;
    }
    case I::prop23_audenaert_upper:
    case I::prop31_peierls_bogoliubov:
    case I::lemma33_golden_thompson: {
      const HermMatrix x = random_psd(n, 1.0, rng);
      const HermMatrix y = random_psd(n, 1.0, rng);
      for (double v : cfg.nu_grid) {
        const Deformation nu(v);
        if (id == I::prop23_audenaert_upper) w.offer(gap_prop23(x, y, nu));
        else if (id == I::prop31_peierls_bogoliubov) w.offer(gap_prop31(x, y, nu));
        else w.offer(gap_lemma33(x, y, nu));
      }
      break;
    }
    case I::audenaert_raw: {
      const HermMatrix a = random_psd(n, 1.0, rng);
      const HermMatrix b = random_psd(n, 1.0, rng);
      for (double s : cfg.alpha_grid) w.offer(gap_audenaert(a, b, s));
      break;
    }
    case I::thm32_lower:
    case I::op_lb_matrix:
    case I::cmp_lower_bounds: {
      const HermMatrix p1 = random_psd(n, 1.0, rng);
      const HermMatrix p2 = random_psd(n, 1.0, rng);
      const HermMatrix y = HermMatrix::identity(n) + p1;
      const HermMatrix x = y + p2;
      for (double v : cfg.nu_grid) {
        const Deformation nu(v);
        if (id == I::thm32_lower) w.offer(gap_thm32(x, y, nu));
        else if (id == I::op_lb_matrix) w.offer(gap_op_lb_matrix(x, y, nu));
        else w.offer(gap_cmp_lower(x, y, nu));
      }
      break;
    }
    case I::lemma34_variational_i: {
      const HermMatrix a = random_psd(n, 1.0, rng);
      const HermMatrix y = random_pd(n, 1.0, rng);
      const double d = 0.5 + 1.5 * rng.uniform();
      const std::uint64_t cand_seed = rng.next();
      for (double v : cfg.nu_grid) {
        w.offer(run_variational(
            check_variational_i(a, y, d, Deformation(v), cfg.variational_candidates, cand_seed)));
      }
      break;
    }
    case I::lemma34_variational_ii: {
      const HermMatrix a0 = 0.5 * random_psd(n, 1.0, rng);
      const HermMatrix b = random_psd(n, 1.0, rng);
      const HermMatrix x_free = random_pd(n, 1.0, rng);
      const bool constructed = rng.uniform() < 0.5;
      const std::uint64_t cand_seed = rng.next();
      for (double v : cfg.nu_grid) {
        const Deformation nu(v);
        const HermMatrix x = constructed ? exp_nu_op(a0 + b, nu) : x_free;
        w.offer(run_variational(
            check_variational_ii(x, b, nu, cfg.variational_candidates, cand_seed)));
      }
      break;
    }
    default: {
      const DensityMatrix rho = random_density(n, rng);
      const Observable a = random_observable(n, 1.0, rng);
      const Observable b = random_observable(n, 1.0, rng);
      if (id == I::thm42_fg) {
        for (double al : cfg.alpha_grid) {
          for (const auto& [f, g] : builtin_monotonic_pairs(al)) w.offer(gap_thm42(rho, a, b, f, g));
        }
      } else if (id == I::cor43_k) {
        for (double al : cfg.alpha_grid) w.offer(gap_cor43(rho, a, b, al));
      } else if (id == I::yanagi_u_alpha || id == I::wyd_corr_bound_alpha) {
        for (double al : cfg.alpha_grid) w.offer(gap_uncertainty(id, rho, a, b, al));
      } else {
        w.offer(gap_uncertainty(id, rho, a, b));
      }
      break;
    }
  }
  return std::move(*w.best);
}

// Inputs where the displayed inequality is an identity or reduces to a
// trivially true statement.
std::vector<std::pair<std::string, CaseInputs>> trivial_cases(InequalityId id) {
  const HermMatrix x0 = HermMatrix::from_rows({{2, 1}, {1, 3}});
  std::vector<std::pair<std::string, CaseInputs>> out;
  CaseInputs in;
  in.nu = 0.5;
  in.alpha = 0.5;
  in.samples = 20;
  switch (id) {
    case I::lemma33_golden_thompson:
      in.set("x", x0);
      in.set("y", HermMatrix::zero(2));
      out.emplace_back("trivial_y_zero", in);
      break;
    case I::audenaert_raw:
      in.s = 0.5;
      in.set("a", x0);
      in.set("b", x0);
      out.emplace_back("trivial_equal", in);
      break;
    case I::lemma34_variational_i:
      in.d = 2.0;
      in.set("a", HermMatrix::zero(2));
      in.set("y", x0);
      out.emplace_back("trivial_a_zero", in);
      break;
    case I::lemma34_variational_ii:
      in.set("x", x0);
      in.set("b", ln_nu_op(x0, Deformation(0.5)));
      out.emplace_back("trivial_b_ln_x", in);
      break;
    default:
      if (is_uncertainty_id(id) || id == I::thm42_fg || id == I::cor43_k) {
        CaseInputs cex = reference_inputs("cex41");
        cex.alpha = 0.5;
        CaseInputs same = cex;
        same.set("b", cex.matrix("a"));
        out.emplace_back("trivial_a_equals_b", same);
        if (id != I::ul_wy_known_false) out.emplace_back("cex41_inputs", cex);
      } else {
        in.set("x", x0);
        in.set("y", x0);
        out.emplace_back("trivial_equal", in);
        if (id == I::thm32_lower) out.emplace_back("remark_I_i_inputs", reference_inputs("remark_I_i"));
      }
      break;
  }
  return out;
}

void apply_override(GapReport& r, const RunConfig& cfg) {
  if (!cfg.rel_tol || r.note.rfind("error:", 0) == 0) return;
  retolerance(r, *cfg.rel_tol);
  if (r.note == "maximizer value differs from closed form") r.holds = false;
}

}  // namespace

std::vector<GapReport> run_suite_for(InequalityId id, const RunConfig& cfg) {
  cfg.validate();
  std::vector<GapReport> out;

  if (cfg.include_reference_cases) {
    for (const auto& c : reference_cases()) {
      if (c.id != id) continue;
      try {
        out.push_back(reproduce(c.name).report);
      } catch (const std::exception& e) {
        out.push_back(error_report(id, e));
        out.back().provenance.case_name = std::string(c.name);
      }
    }
  }

  if (cfg.include_trivial_cases) {
    for (auto& [name, in] : trivial_cases(id)) {
      GapReport r;
      try {
        r = evaluate_gap(id, in);
      } catch (const std::exception& e) {
        r = error_report(id, e);
      }
      r.provenance.case_name = name;
      r.expectation = Expectation::holds;
      out.push_back(std::move(r));
    }
  }

  const std::uint64_t id_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(id));
  for (int k = 0; k < cfg.samples; ++k) {
    const std::uint64_t sub = derive_seed(id_seed, static_cast<std::uint64_t>(k));
    const Index n = cfg.dims[static_cast<std::size_t>(k) % cfg.dims.size()];
    SplitMix64 rng(sub);
    GapReport r;
    try {
      r = sample_case(id, cfg, n, rng);
    } catch (const std::exception& e) {
      r = error_report(id, e);
    }
    r.id = id;
    r.provenance.case_name = "random#" + std::to_string(k);
    r.provenance.seed = sub;
    r.provenance.dim = n;
    r.expectation = is_proved(id) ? Expectation::holds : Expectation::none;
    out.push_back(std::move(r));
  }

  for (auto& r : out) apply_override(r, cfg);
  return out;
}

std::vector<GapReport> run_suite(const RunConfig& cfg) {
  cfg.validate();
  std::vector<InequalityId> ids = cfg.ids;
  if (ids.empty()) ids.assign(all_inequalities().begin(), all_inequalities().end());

  std::vector<std::vector<GapReport>> per_id(ids.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(ids.size())));
  if (workers == 1) {
    for (std::size_t j = 0; j < ids.size(); ++j) per_id[j] = run_suite_for(ids[j], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < ids.size(); j = next++) per_id[j] = run_suite_for(ids[j], cfg);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<GapReport> out;
  for (auto& v : per_id) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

SuiteSummary summarize(std::span<const GapReport> reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.reports;
    const bool error = r.note.rfind("error:", 0) == 0;
    if (error) ++s.errors;
    if (!r.applicable) ++s.not_applicable;
    else if (!r.holds) ++s.violations;
    if (r.unexpected()) ++s.unexpected;
  }
  return s;
}

}  // namespace trineq
