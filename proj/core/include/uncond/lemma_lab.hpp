#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "uncond/enumeration.hpp"
#include "uncond/family.hpp"
#include "uncond/seqspace.hpp"
#include "uncond/unconditionality.hpp"

namespace uncond {

inline constexpr double kPi = 3.141592653589793;

using RatioWitness = std::variant<std::vector<double>, std::vector<std::complex<double>>, Family>;

struct RatioReport {
  double ratio = 0.0;
  RatioWitness witness;
  /// The lemma's constant (2, 4, or the configured K_G bound).
  double bound = 0.0;
  double slack = 0.0;  // bound - ratio
  bool certified = false;
  /// Sharp constant when it is known to be smaller than `bound`.
  std::optional<double> sharp_bound;
  /// Set when ratio exceeds bound + kNumEps on an input meeting the lemma's
  /// hypotheses.
  bool critical_finding = false;
};

/// max over F of |sum_F x_k|, from the nonnegative/negative split.
double real_subset_max(std::span<const double> x) noexcept;

/// sum |x_k| / max_F |sum_F x_k|, bound 2. Throws DomainError on all-zero input.
RatioReport real_subset_ratio(std::span<const double> x);

/// max_F |sum_F z_k| by Gray-code enumeration of all 2^n subsets.
double complex_subset_max_exhaustive(std::span<const std::complex<double>> z);

/// max_F |sum_F z_k| over open half-plane cuts, one per arc between the 2n
/// critical directions. O(n^2).
double complex_subset_max_half_plane(std::span<const std::complex<double>> z);

/// sum |z_k| / max_F |sum_F z_k|, bound 4 with pi as the sharp constant.
/// Exhaustive (certified) when n <= opts.max_exhaustive, otherwise the
/// half-plane maximum (uncertified).
RatioReport complex_subset_ratio(std::span<const std::complex<double>> z,
                                 const EnumerationOptions& opts = {});

/// sum_k ||x_k||_2 / max over signs of ||sum_k s_k x_k||_1; a lower bound on K_G.
RatioReport grothendieck_ratio(const Family& fam, double kg_upper = kGrothendieckUpper,
                               const EnumerationOptions& opts = {});

/// Seeded search for large Grothendieck ratios with sign-flip refinement.
/// Restart i depends only on (seed, i). Throws DomainError for budget 0.
RatioReport grothendieck_search(std::size_t n, std::size_t dim, std::uint64_t budget,
                                std::uint64_t seed, double kg_upper = kGrothendieckUpper,
                                const EnumerationOptions& opts = {});

struct SandwichSlack {
  /// 1 - ||v||_q / ||v||_p
  double lower;
  /// 1 - ||v||_p / (n^{1/p-1/q} ||v||_q)
  double upper;
};

/// Relative slack of both sides of the l_p / l_q sandwich; zero vectors give 0.
SandwichSlack sandwich_slack(const FinSeq& v, const Exponent& p, const Exponent& q);

struct SandwichPairStats {
  Exponent p;
  Exponent q;
  std::uint64_t trials = 0;
  std::uint64_t lower_violations = 0;
  std::uint64_t upper_violations = 0;
  double min_lower_slack = 1.0;
  double min_upper_slack = 1.0;
};

struct SandwichReport {
  std::vector<SandwichPairStats> pairs;
  std::uint64_t total_violations = 0;
};

/// norm_sandwich_check on `trials` Gaussian vectors per (dim, pair).
SandwichReport sandwich_sweep(std::span<const std::size_t> dims,
                              std::span<const std::pair<Exponent, Exponent>> p_q_pairs,
                              std::uint64_t trials, std::uint64_t seed);

}  // namespace uncond
