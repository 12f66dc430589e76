#include "uncond/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uncond/errors.hpp"

namespace uncond {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Preserves: return "Preserves";
    case Verdict::NotPreserves: return "NotPreserves";
    case Verdict::Unknown: return "Unknown";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string_view to_string(Clause c) noexcept {
  switch (c) {
    case Clause::RInfinite: return "T1.4-1-rInf";
    case Clause::SmallPQLeR: return "T1.4-1-pLe2qLeR";
    case Clause::RLessThanQ: return "T1.4-2-rLtQ";
    case Clause::StrictHadamard: return "T1.4-2-strict";
    case Clause::HolderInvalid: return "HolderInvalid";
    case Clause::Open: return "Open";
  }
  return "?";
}

Classification classify(const ExponentTriple& t) {
  const double ip = t.p.reciprocal();
  const double iq = t.q.reciprocal();
  const double ir = t.r.reciprocal();
  const double iq2 = std::max(0.5, iq);

  const double holder = ip + iq - ir;
  const double strict = 0.5 + ir - ip - iq2;
  const double margin =
      std::min({std::abs(holder), std::abs(ip - 0.5), std::abs(iq - ir), std::abs(strict)});

  if (holder < -kCmpEps) return {Verdict::NotApplicable, Clause::HolderInvalid, margin};

  // p <= 2 and q <= r, compared in reciprocal space.
  const bool r_infinite = t.r.is_infinite();
  const bool small_p = ip >= 0.5 - kCmpEps;
  const bool q_le_r = iq >= ir - kCmpEps;
  const bool r_lt_q = ir > iq + kCmpEps;
  const bool strict_fires = strict > kCmpEps;

  const bool preserves = r_infinite || (small_p && q_le_r);
  const bool not_preserves = r_lt_q || strict_fires;
  if (preserves && not_preserves) {
    throw InconsistencyError("classify " + t.to_string() + ": preserving and non-preserving clauses both fire");
  }

  if (r_infinite) return {Verdict::Preserves, Clause::RInfinite, margin};
  if (preserves) return {Verdict::Preserves, Clause::SmallPQLeR, margin};
  if (r_lt_q) return {Verdict::NotPreserves, Clause::RLessThanQ, margin};
  if (strict_fires) return {Verdict::NotPreserves, Clause::StrictHadamard, margin};
  return {Verdict::Unknown, Clause::Open, margin};
}

std::vector<Exponent> axis_values(const AxisRange& range, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("grid step must be > 0");
  std::vector<Exponent> out;
  if (range.lo <= range.hi) {
    if (range.lo < 1.0 || range.hi > 64.0) throw DomainError("grid ranges must lie within [1, 64]");
    // Index-based to avoid drift from repeated addition.
    const auto count = static_cast<std::size_t>(std::floor((range.hi - range.lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(Exponent::finite(range.lo + static_cast<double>(i) * step));
    }
  }
  if (range.include_infinity) out.push_back(Exponent::infinity());
  return out;
}

std::vector<GridRecord> region_grid(const Exponent& r, const AxisRange& p_range, const AxisRange& q_range,
                                    double step, unsigned threads) {
  const auto ps = axis_values(p_range, step);
  const auto qs = axis_values(q_range, step);
  std::vector<GridRecord> grid(ps.size() * qs.size(),
                               GridRecord{{r, r, r}, {Verdict::Unknown, Clause::Open, 0.0}});
  parallel_for(grid.size(), threads, [&](std::size_t idx) {
    const ExponentTriple t{ps[idx / qs.size()], qs[idx % qs.size()], r};
    grid[idx] = {t, classify(t)};
  });
  return grid;
}

namespace {

HadamardEvidence analytic_hadamard_evidence(const ExponentTriple& t, double C) {
  const double gain = 0.5 + t.r.reciprocal() - t.p.reciprocal() - std::max(0.5, t.q.reciprocal());
  const double n = std::min(std::floor(std::log2(C) / gain) + 1.0, double{std::numeric_limits<int>::max()});
  return {C, static_cast<int>(n), n * gain, true};
}

}  // namespace

CrossValidationReport cross_validate(const ExponentTriple& t, std::uint64_t budget, std::uint64_t seed,
                                     const CrossValidationOptions& opts) {
  if (!t.holder_valid()) throw DomainError("triple " + t.to_string() + " violates 1/r <= 1/p + 1/q");

  CrossValidationReport rep{t, classify(t), {}, {}, std::nullopt};
  const Clause clause = rep.classification.clause;

  if (clause == Clause::StrictHadamard) {
    for (double C : {1.0, 10.0, 100.0}) {
      WitnessReport w;
      try {
        w = hadamard_witness(t, C, opts.enumeration);
      } catch (const ScaleLimitError&) {
        rep.hadamard.push_back(analytic_hadamard_evidence(t, C));
        continue;
      } catch (const DomainError& e) {
        throw InconsistencyError("classifier says NotPreserves but the Hadamard witness failed: " +
                                 std::string(e.what()));
      }
      if (!(w.certified_ratio_log2 > std::log2(C))) {
        throw InconsistencyError("Hadamard witness does not exceed C");
      }
      rep.hadamard.push_back({C, w.n, w.certified_ratio_log2, false});
    }
  } else if (clause == Clause::RLessThanQ) {
    for (double B : {2.0, 5.0}) {
      TailWitness w;
      try {
        w = tail_witness(t.q, t.r, B);
      } catch (const ScaleLimitError&) {
        rep.tail.push_back({B, 0, 0.0, 0.0, true});
        continue;
      } catch (const DomainError& e) {
        throw InconsistencyError("classifier says NotPreserves but the tail witness failed: " +
                                 std::string(e.what()));
      }
      rep.tail.push_back({B, w.N, w.partial_r_norm, w.tail_q_bound, false});
    }
  } else {
    rep.search = quotient_lower_bound_search(t, opts.search_n, opts.search_dim, budget, seed, opts.enumeration).best;
  }
  return rep;
}

}  // namespace uncond
