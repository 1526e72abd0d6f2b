#pragma once

// Seeded random matrix generation.
//
// Generator: splitmix64.
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// uniform() = (next() >> 11) * 2^-53 in [0, 1).
// gaussian(): Box-Muller on two uniforms u1, u2 with u1 replaced by 1 - u1 so
// the log argument lies in (0, 1]; the cosine value is returned first and the
// sine value cached for the next call.
// Complex Gaussian entries are (g_re + i g_im) / sqrt(2), row-major.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trineq/matrix.hpp"
#include "trineq/quantities.hpp"

namespace trineq {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();
  double gaussian();

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

// Independent stream seed: the first output of splitmix64 seeded with
// seed ^ (stream * 0xD1B54A32D192ED03).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

Matrix complex_gaussian(Index rows, Index cols, SplitMix64& rng);

// Builders from a square factor G; the search perturbs G and rebuilds.
inline constexpr double kPdShift = 1e-3;       // pd: psd + kPdShift * scale * I
inline constexpr double kDensityShift = 1e-6;  // density: (G G*/n + shift I) normalized
HermMatrix psd_from_factor(const Matrix& g, double scale);      // scale * G G* / n
HermMatrix pd_from_factor(const Matrix& g, double scale);
DensityMatrix density_from_factor(const Matrix& g);
HermMatrix observable_from_factor(const Matrix& g, double scale);  // scale * (G + G*) / 2

HermMatrix random_psd(Index n, double scale, SplitMix64& rng);
HermMatrix random_pd(Index n, double scale, SplitMix64& rng);
DensityMatrix random_density(Index n, SplitMix64& rng);
Observable random_observable(Index n, double scale, SplitMix64& rng);

enum class SampleKind { psd, pd, density, observable, loewner_chain, unit_trace_pair };
std::string_view to_string(SampleKind k);
std::optional<SampleKind> parse_sample_kind(std::string_view text);

struct SampleSpec {
  Index dim = 2;
  SampleKind kind = SampleKind::psd;
  double scale = 1.0;
  std::uint64_t seed = 0;
};

// psd, pd, density, observable: one matrix.
// loewner_chain: {X, Y} with Y = I + P1, X = Y + P2 (so I <= Y <= X).
// unit_trace_pair: two density matrices {X, Y}.
std::vector<HermMatrix> sample(const SampleSpec& spec);

}  // namespace trineq
