#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "uncond/enumeration.hpp"
#include "uncond/family.hpp"
#include "uncond/seqspace.hpp"

namespace uncond {

/// Configured upper bound on the real Grothendieck constant. Exceeds every
/// published bound, so checks against it are conservative.
inline constexpr double kGrothendieckUpper = 1.8;

struct Exhaustive {};
struct Randomized {
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};
using SubsetMode = std::variant<Exhaustive, Randomized>;

std::string mode_name(const SubsetMode& mode);

struct SubsetMaxResult {
  double value = 0.0;
  /// Bit k set means x_k is in the maximizing subset (or has sign -1 for
  /// sign_max_norm).
  std::uint64_t argmax_subset = 0;
  /// True iff every mask was enumerated.
  bool certified = false;
};

/// max over F of ||sum_{k in F} x_k||_q.
///
/// Exhaustive walks all 2^n subsets in Gray order and throws DomainError when
/// n exceeds opts.max_exhaustive. Randomized runs `budget` random restarts,
/// each followed by single-flip hill climbing, and returns a lower bound.
SubsetMaxResult subset_max_norm(const Family& fam, const Exponent& q, const SubsetMode& mode,
                                const EnumerationOptions& opts = {});

/// max over sign vectors s of ||sum_k s_k x_k||_q, exhaustive only.
SubsetMaxResult sign_max_norm(const Family& fam, const Exponent& q,
                              const EnumerationOptions& opts = {});

struct QuotientResult {
  double numerator = 0.0;
  double denominator = 0.0;
  double quotient = 0.0;
  bool certified = false;
  std::uint64_t subset_bitmask = 0;
  std::string mode;
  std::optional<std::uint64_t> seed;
};

/// ||sum a_k x_k||_r / (max_k ||a_k||_p * max_F ||sum_F x_k||_q).
///
/// Any constant C in the unconditionality inequality satisfies C >= quotient.
/// Throws DomainError on size mismatch, an invalid triple, or a zero
/// denominator ("degenerate family").
QuotientResult unconditionality_quotient(const Family& a, const Family& x, const ExponentTriple& t,
                                         const SubsetMode& mode, const EnumerationOptions& opts = {});

struct SearchResult {
  QuotientResult best;
  Family a;
  Family x;
  std::uint64_t restarts = 0;
};

/// Seeded random search for large quotients over families of n vectors in
/// dimension dim. Restarts alternate {-1,0,1} lattice draws and standard
/// normal draws, then refine by coordinate perturbation. Restart i depends
/// only on (seed, i), so a larger budget never lowers the result.
SearchResult quotient_lower_bound_search(const ExponentTriple& t, std::size_t n, std::size_t dim,
                                         std::uint64_t budget, std::uint64_t seed,
                                         const EnumerationOptions& opts = {});

/// ||sum a_k x_k||_q <= 2 K max_k ||a_k||_2 max_F ||sum_F x_k||_q (1 + kNumEps)
/// for multiplication l_2 x l_q -> l_q, whose expansion operator has norm 1.
bool main1_bound_check(const Family& a, const Family& x, const Exponent& q, double K,
                       const EnumerationOptions& opts = {});

}  // namespace uncond
