#include "trineq/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace trineq {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  return r * std::cos(t);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (stream * 0xD1B54A32D192ED03ULL));
  return g.next();
}

Matrix complex_gaussian(Index rows, Index cols, SplitMix64& rng) {
  Matrix g(rows, cols);
  const double s = std::sqrt(0.5);
  for (Index j = 0; j < rows; ++j) {
    for (Index k = 0; k < cols; ++k) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(j, k) = Complex(s * re, s * im);
    }
  }
  return g;
}

HermMatrix psd_from_factor(const Matrix& g, double scale) {
  return HermMatrix::hermitian_part((scale / static_cast<double>(g.rows())) * (g * g.adjoint()));
}

HermMatrix pd_from_factor(const Matrix& g, double scale) {
  return psd_from_factor(g, scale) + (kPdShift * scale) * HermMatrix::identity(g.rows());
}

DensityMatrix density_from_factor(const Matrix& g) {
  const HermMatrix p = psd_from_factor(g, 1.0) + kDensityShift * HermMatrix::identity(g.rows());
  return DensityMatrix((1.0 / p.trace()) * p);
}

HermMatrix observable_from_factor(const Matrix& g, double scale) {
  return HermMatrix::hermitian_part(scale * g);
}

HermMatrix random_psd(Index n, double scale, SplitMix64& rng) {
  return psd_from_factor(complex_gaussian(n, n, rng), scale);
}

HermMatrix random_pd(Index n, double scale, SplitMix64& rng) {
  return pd_from_factor(complex_gaussian(n, n, rng), scale);
}

DensityMatrix random_density(Index n, SplitMix64& rng) {
  return density_from_factor(complex_gaussian(n, n, rng));
}

Observable random_observable(Index n, double scale, SplitMix64& rng) {
  return Observable(observable_from_factor(complex_gaussian(n, n, rng), scale));
}

namespace {

constexpr std::array<std::pair<SampleKind, std::string_view>, 6> kKindNames{{
    {SampleKind::psd, "psd"},
    {SampleKind::pd, "pd"},
    {SampleKind::density, "density"},
    {SampleKind::observable, "observable"},
    {SampleKind::loewner_chain, "loewner_chain"},
    {SampleKind::unit_trace_pair, "unit_trace_pair"},
}};

}  // namespace

std::string_view to_string(SampleKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

std::optional<SampleKind> parse_sample_kind(std::string_view text) {
  for (const auto& [kind, name] : kKindNames) {
    if (name == text) return kind;
  }
  return std::nullopt;
}

std::vector<HermMatrix> sample(const SampleSpec& spec) {
  if (spec.dim < 2) throw DomainError("sample: dim must be at least 2");
  if (!(spec.scale > 0.0)) throw DomainError("sample: scale must be positive");
  SplitMix64 rng(spec.seed);
  const Index n = spec.dim;
  switch (spec.kind) {
    case SampleKind::psd:
      return {random_psd(n, spec.scale, rng)};
    case SampleKind::pd:
      return {random_pd(n, spec.scale, rng)};
    case SampleKind::density:
      return {random_density(n, rng).matrix()};
    case SampleKind::observable:
      return {random_observable(n, spec.scale, rng).matrix()};
    case SampleKind::loewner_chain: {
      const HermMatrix p1 = random_psd(n, spec.scale, rng);
      const HermMatrix p2 = random_psd(n, spec.scale, rng);
      const HermMatrix y = HermMatrix::identity(n) + p1;
      return {y + p2, y};
    }
    case SampleKind::unit_trace_pair: {
      const DensityMatrix x = random_density(n, rng);
      const DensityMatrix y = random_density(n, rng);
      return {x.matrix(), y.matrix()};
    }
  }
  return {};
}

}  // namespace trineq
