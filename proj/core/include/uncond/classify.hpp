#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "uncond/seqspace.hpp"
#include "uncond/unconditionality.hpp"
#include "uncond/witness.hpp"

namespace uncond {

enum class Verdict { Preserves, NotPreserves, Unknown, NotApplicable };

enum class Clause {
  RInfinite,      // r = inf
  SmallPQLeR,     // p in [1,2] and q <= r
  RLessThanQ,     // r < q
  StrictHadamard, // 1/2 + 1/r > 1/p + 1/min(2,q)
  HolderInvalid,
  Open,
};

std::string_view to_string(Verdict v) noexcept;
/// Citation tag used in JSON/CSV output.
std::string_view to_string(Clause c) noexcept;

struct Classification {
  Verdict verdict;
  Clause clause;
  /// Smallest |boundary function| in reciprocal space over the clause
  /// hyperplanes.
  double margin;
};

/// Decision table for coordinatewise multiplication l_p x l_q -> l_r.
/// Throws InconsistencyError if a preserving and a non-preserving clause
/// both fire.
Classification classify(const ExponentTriple& t);

struct AxisRange {
  double lo = 1.0;
  double hi = 1.0;
  bool include_infinity = false;
};

/// Lattice values lo, lo+step, ..., <= hi, then inf if requested.
/// Throws DomainError unless step > 0 and finite values lie in [1, 64].
std::vector<Exponent> axis_values(const AxisRange& range, double step);

struct GridRecord {
  ExponentTriple triple;
  Classification result;
};

/// classify on the (p, q) lattice at fixed r, p-major.
std::vector<GridRecord> region_grid(const Exponent& r, const AxisRange& p_range,
                                    const AxisRange& q_range, double step, unsigned threads = 1);

struct HadamardEvidence {
  double C;
  int n;
  double certified_ratio_log2;
  /// The required n exceeds the witness cap; n and the ratio are then the
  /// analytic values and nothing was materialized.
  bool beyond_desk_scale = false;
};

struct TailEvidence {
  double B;
  std::uint64_t N;
  double partial_r_norm;
  double tail_q_bound;
  /// The partial sums grow like (ln N)^{1/r}; reaching B needs more terms
  /// than the desk-scale cap.
  bool beyond_desk_scale = false;
};

struct CrossValidationOptions {
  std::size_t search_n = 4;
  std::size_t search_dim = 4;
  EnumerationOptions enumeration;
};

struct CrossValidationReport {
  ExponentTriple triple;
  Classification classification;
  std::vector<HadamardEvidence> hadamard;
  std::vector<TailEvidence> tail;
  std::optional<QuotientResult> search;
};

/// Backs classify(t) with constructions: Hadamard witnesses for C in
/// {1, 10, 100} on the strict clause, tail witnesses for B in {2, 5} when
/// r < q, and a seeded quotient search otherwise. Throws DomainError for an
/// invalid triple and InconsistencyError if a witness cannot be built.
CrossValidationReport cross_validate(const ExponentTriple& t, std::uint64_t budget, std::uint64_t seed,
                                     const CrossValidationOptions& opts = {});

}  // namespace uncond
