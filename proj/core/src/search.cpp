#include "trineq/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace trineq {

namespace {

using I = InequalityId;

enum class Layout { psd_pair, pd_pair, density_pair, chain, uncertainty };

Layout layout_for(InequalityId id, SampleKind requested) {
  if (is_uncertainty_id(id) || id == I::thm42_fg || id == I::cor43_k) return Layout::uncertainty;
  if (requested == SampleKind::unit_trace_pair) return Layout::density_pair;
  if (requested == SampleKind::loewner_chain) return Layout::chain;
  switch (id) {
    case I::thm32_lower:
    case I::op_lb_matrix:
    case I::cmp_lower_bounds:
      return Layout::chain;
    default:
      break;
  }
  if (requested == SampleKind::psd) return Layout::psd_pair;
  if (requested == SampleKind::pd) return Layout::pd_pair;
  switch (id) {
    case I::prop22_upper:
    case I::furuta_upper_chain:
    case I::cmp_upper_bounds:
      return Layout::pd_pair;
    default:
      return Layout::psd_pair;
  }
}

struct Candidate {
  std::vector<Matrix> factors;
  std::size_t nu_idx = 0;
  std::size_t alpha_idx = 0;
};

class Searcher {
 public:
  Searcher(InequalityId id, const SampleSpec& spec, const SearchParams& params)
      : id_(id), n_(spec.dim), scale_(spec.scale), layout_(layout_for(id, spec.kind)), params_(params) {
    if (params_.nu_grid.empty()) params_.nu_grid = {0.5};
    if (params_.alpha_grid.empty()) params_.alpha_grid = {0.5};
    cap_ = 4.0 * static_cast<double>(n_);
  }

  SearchRecord run(std::uint64_t seed, std::size_t budget) {
    SplitMix64 rng(seed);
    const std::size_t restart_after =
        params_.restart_after > 0 ? params_.restart_after : std::max<std::size_t>(100, budget / 20);

    SearchRecord rec;
    rec.id = id_;
    rec.seed = seed;
    rec.best_gap = std::numeric_limits<double>::infinity();
    rec.best_history.reserve(budget);

    Candidate current;
    double current_gap = std::numeric_limits<double>::infinity();
    std::size_t stale = 0;

    for (std::size_t k = 0; k < budget; ++k) {
      const bool fresh = k == 0 || stale >= restart_after;
      Candidate cand;
      if (fresh) {
        cand = random_candidate(rng);
        current_gap = std::numeric_limits<double>::infinity();
        stale = 0;
      } else {
        const double sigma =
            budget > 1 ? 0.5 * std::pow(0.02, static_cast<double>(k) / static_cast<double>(budget - 1)) : 0.5;
        cand = perturb(current, sigma, rng);
      }

      CaseInputs inputs = build(cand);
      const std::optional<double> gap = try_gap(inputs);
      ++rec.evaluations;

      if (gap && *gap < current_gap) {
        current = std::move(cand);
        current_gap = *gap;
        stale = 0;
        if (*gap < rec.best_gap) {
          rec.best_gap = *gap;
          rec.best_inputs = std::move(inputs);
        }
      } else {
        ++stale;
        if (fresh && !gap) stale = restart_after;  // unusable restart point: draw again
      }
      rec.best_history.push_back(rec.best_gap);
    }
    return rec;
  }

 private:
  std::size_t factor_count() const { return layout_ == Layout::uncertainty ? 3 : 2; }

  Candidate random_candidate(SplitMix64& rng) const {
    Candidate c;
    for (std::size_t j = 0; j < factor_count(); ++j) c.factors.push_back(complex_gaussian(n_, n_, rng));
    c.nu_idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(params_.nu_grid.size()));
    c.alpha_idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(params_.alpha_grid.size()));
    return c;
  }

  Candidate perturb(const Candidate& base, double sigma, SplitMix64& rng) const {
    Candidate c = base;
    const bool grid_move = (params_.nu_grid.size() > 1 || params_.alpha_grid.size() > 1) && rng.uniform() < 0.25;
    if (grid_move) {
      c.nu_idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(params_.nu_grid.size()));
      c.alpha_idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(params_.alpha_grid.size()));
      return c;
    }
    const std::size_t which = static_cast<std::size_t>(rng.uniform() * static_cast<double>(c.factors.size()));
    Matrix& g = c.factors[which];
    const double s = sigma * std::sqrt(0.5);
    for (Index j = 0; j < n_; ++j) {
      for (Index k = 0; k < n_; ++k) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        g(j, k) *= Complex(1.0 + s * re, s * im);
      }
    }
    const double norm = g.norm();
    if (norm > cap_) g *= cap_ / norm;
    return c;
  }

  CaseInputs build(const Candidate& c) const {
    CaseInputs in;
    in.nu = params_.nu_grid[c.nu_idx];
    in.alpha = params_.alpha_grid[c.alpha_idx];
    if (id_ == I::audenaert_raw) in.s = in.alpha;
    in.f = params_.f;
    in.g = params_.g;
    const std::string first = id_ == I::audenaert_raw ? "a" : "x";
    const std::string second = id_ == I::audenaert_raw ? "b" : "y";
    switch (layout_) {
      case Layout::psd_pair:
        in.set(first, psd_from_factor(c.factors[0], scale_));
        in.set(second, psd_from_factor(c.factors[1], scale_));
        break;
      case Layout::pd_pair:
        in.set(first, pd_from_factor(c.factors[0], scale_));
        in.set(second, pd_from_factor(c.factors[1], scale_));
        break;
      case Layout::density_pair:
        in.set(first, density_from_factor(c.factors[0]).matrix());
        in.set(second, density_from_factor(c.factors[1]).matrix());
        break;
      case Layout::chain: {
        const HermMatrix y = HermMatrix::identity(n_) + psd_from_factor(c.factors[0], scale_);
        in.set(first, y + psd_from_factor(c.factors[1], scale_));
        in.set(second, y);
        break;
      }
      case Layout::uncertainty:
        in.set("rho", density_from_factor(c.factors[0]).matrix());
        in.set("a", observable_from_factor(c.factors[1], scale_));
        in.set("b", observable_from_factor(c.factors[2], scale_));
        break;
    }
    return in;
  }

  std::optional<double> try_gap(const CaseInputs& in) const {
    try {
      const double gap = evaluate_gap(id_, in).gap;
      if (std::isfinite(gap)) return gap;
    } catch (const Error&) {
    }
    return std::nullopt;
  }

  InequalityId id_;
  Index n_;
  double scale_;
  Layout layout_;
  SearchParams params_;
  double cap_ = 0.0;
};

}  // namespace

SearchRecord minimize_gap(InequalityId id, const SampleSpec& spec, std::size_t budget,
                          const SearchParams& params) {
  if (budget < 1) throw DomainError("search budget must be at least 1");
  if (id == I::lemma34_variational_i || id == I::lemma34_variational_ii) {
    throw DomainError(std::string(to_string(id)) + " is a maximization check and cannot be searched");
  }
  if (spec.dim < 2) throw DomainError("search dimension must be at least 2");
  if (!(spec.scale > 0.0)) throw DomainError("search scale must be positive");
  for (double v : params.nu_grid) (void)Deformation(v);
  for (double a : params.alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("alpha grid values must lie in [0,1]");
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(params.workers, static_cast<unsigned>(budget)));
  if (workers == 1) return Searcher(id, spec, params).run(spec.seed, budget);

  std::vector<SearchRecord> records(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t share = budget / workers + (w < budget % workers ? 1 : 0);
    pool.emplace_back([&, w, share] {
      records[w] = Searcher(id, spec, params).run(derive_seed(spec.seed, w), share);
    });
  }
  for (auto& t : pool) t.join();

  std::size_t best = 0;
  std::size_t total = 0;
  for (std::size_t w = 0; w < records.size(); ++w) {
    total += records[w].evaluations;
    const auto& r = records[w];
    const auto& b = records[best];
    if (r.best_gap < b.best_gap || (r.best_gap == b.best_gap && r.seed < b.seed)) best = w;
  }
  SearchRecord out = std::move(records[best]);
  out.evaluations = total;
  return out;
}

double replay(const SearchRecord& record) { return evaluate_gap(record.id, record.best_inputs).gap; }

}  // namespace trineq
