#include "uncond/unconditionality.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "uncond/action.hpp"
#include "uncond/errors.hpp"

namespace uncond {

namespace {

constexpr std::size_t kMaxMaskBits = 63;

void require_exhaustive_size(std::size_t n, const EnumerationOptions& opts, const char* what) {
  if (n > opts.max_exhaustive || n > kMaxMaskBits) {
    throw DomainError(std::string(what) + ": exhaustive enumeration of " + std::to_string(n) +
                      " vectors exceeds the cap of " + std::to_string(opts.max_exhaustive) +
                      "; use Randomized mode");
  }
}

class SubsetClimber {
 public:
  SubsetClimber(const Family& fam, const Exponent& q) : fam_(fam), q_(q), sum_(fam.ambient_len()) {}

  double reset(std::uint64_t mask) {
    mask_ = mask;
    std::ranges::fill(sum_, 0.0);
    for (std::size_t k = 0; k < fam_.size(); ++k) {
      if ((mask >> k) & 1u) add(k, 1.0, sum_);
    }
    value_ = norm(sum_, q_);
    return value_;
  }

  // Best-improvement single flips until no flip increases the norm.
  double climb() {
    std::vector<double> trial(sum_.size());
    for (;;) {
      double best_value = value_;
      std::size_t best_k = fam_.size();
      for (std::size_t k = 0; k < fam_.size(); ++k) {
        trial = sum_;
        add(k, ((mask_ >> k) & 1u) ? -1.0 : 1.0, trial);
        const double v = norm(trial, q_);
        if (v > best_value) {
          best_value = v;
          best_k = k;
        }
      }
      if (best_k == fam_.size()) return value_;
      add(best_k, ((mask_ >> best_k) & 1u) ? -1.0 : 1.0, sum_);
      mask_ ^= std::uint64_t{1} << best_k;
      value_ = best_value;
    }
  }

  std::uint64_t mask() const noexcept { return mask_; }

 private:
  void add(std::size_t k, double coeff, std::vector<double>& into) const {
    const auto xk = fam_[k].entries();
    for (std::size_t j = 0; j < into.size(); ++j) into[j] += coeff * xk[j];
  }

  const Family& fam_;
  Exponent q_;
  std::vector<double> sum_;
  std::uint64_t mask_ = 0;
  double value_ = 0.0;
};

SubsetMaxResult randomized_subset_max(const Family& fam, const Exponent& q, const Randomized& mode) {
  if (mode.budget == 0) throw DomainError("empty budget");
  if (fam.size() > kMaxMaskBits) throw DomainError("family too large for a 63-bit subset mask");

  const std::uint64_t full = fam.size() == 0 ? 0 : (~std::uint64_t{0} >> (64 - fam.size()));
  SubsetClimber climber(fam, q);
  SubsetMaxResult best{0.0, 0, false};
  for (std::uint64_t i = 0; i < mode.budget; ++i) {
    std::mt19937_64 rng(derive_seed(mode.seed, i));
    climber.reset(rng() & full);
    const double v = climber.climb();
    if (v > best.value) best = {v, climber.mask(), false};
  }
  return best;
}

void check_pair(const Family& a, const Family& x) {
  if (a.size() != x.size()) throw DomainError("a- and x-families must have the same size");
  if (a.ambient_len() != x.ambient_len()) throw DomainError("a- and x-families must share an ambient length");
}

FinSeq product_sum(const Family& a, const Family& x) {
  std::vector<double> total(a.ambient_len(), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const FinSeq prod = multiply(a[k], x[k]);
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += prod[j];
  }
  return FinSeq(std::move(total));
}

double max_norm(const Family& fam, const Exponent& p) {
  double m = 0.0;
  for (const auto& v : fam) m = std::max(m, norm(v, p));
  return m;
}

}  // namespace

std::string mode_name(const SubsetMode& mode) {
  return std::holds_alternative<Exhaustive>(mode) ? "exhaustive" : "random";
}

SubsetMaxResult subset_max_norm(const Family& fam, const Exponent& q, const SubsetMode& mode,
                                const EnumerationOptions& opts) {
  if (const auto* rnd = std::get_if<Randomized>(&mode)) return randomized_subset_max(fam, q, *rnd);
  require_exhaustive_size(fam.size(), opts, "subset_max_norm");
  const GrayMax g = gray_max_norm(fam, q, SumKind::Subset, opts.threads);
  return {g.value, g.mask, true};
}

SubsetMaxResult sign_max_norm(const Family& fam, const Exponent& q, const EnumerationOptions& opts) {
  require_exhaustive_size(fam.size(), opts, "sign_max_norm");
  const GrayMax g = gray_max_norm(fam, q, SumKind::Sign, opts.threads);
  return {g.value, g.mask, true};
}

QuotientResult unconditionality_quotient(const Family& a, const Family& x, const ExponentTriple& t,
                                         const SubsetMode& mode, const EnumerationOptions& opts) {
  check_pair(a, x);
  if (!t.holder_valid()) throw DomainError("triple " + t.to_string() + " violates 1/r <= 1/p + 1/q");

  const double numerator = norm(product_sum(a, x), t.r);
  const SubsetMaxResult sm = subset_max_norm(x, t.q, mode, opts);
  const double denominator = max_norm(a, t.p) * sm.value;
  if (!(denominator > 0.0)) throw DomainError("degenerate family");

  QuotientResult out;
  out.numerator = numerator;
  out.denominator = denominator;
  out.quotient = numerator / denominator;
  out.certified = sm.certified;
  out.subset_bitmask = sm.argmax_subset;
  out.mode = mode_name(mode);
  if (const auto* rnd = std::get_if<Randomized>(&mode)) out.seed = rnd->seed;
  return out;
}

namespace {

struct Candidate {
  std::vector<std::vector<double>> a;
  std::vector<std::vector<double>> x;
};

double candidate_quotient(const Candidate& c, const ExponentTriple& t, const EnumerationOptions& opts,
                          QuotientResult* out = nullptr) {
  const Family a = Family::from_rows(c.a);
  const Family x = Family::from_rows(c.x);
  if (a.all_zero() || x.all_zero()) return 0.0;
  const QuotientResult q = unconditionality_quotient(a, x, t, Exhaustive{}, opts);
  if (out) *out = q;
  return q.quotient;
}

}  // namespace

SearchResult quotient_lower_bound_search(const ExponentTriple& t, std::size_t n, std::size_t dim,
                                         std::uint64_t budget, std::uint64_t seed,
                                         const EnumerationOptions& opts) {
  if (budget == 0) throw DomainError("empty budget");
  if (n == 0 || dim == 0) throw DomainError("search needs n >= 1 and dim >= 1");
  if (!t.holder_valid()) throw DomainError("triple " + t.to_string() + " violates 1/r <= 1/p + 1/q");
  require_exhaustive_size(n, opts, "quotient_lower_bound_search");

  const std::size_t proposals = std::min<std::size_t>(4 * n * dim, 64);
  Candidate best_candidate;
  double best_value = -1.0;

  for (std::uint64_t i = 0; i < budget; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    const bool lattice = (i % 2 == 0);
    std::uniform_int_distribution<int> tri(-1, 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&] { return lattice ? static_cast<double>(tri(rng)) : gauss(rng); };

    Candidate c{std::vector<std::vector<double>>(n, std::vector<double>(dim)),
                std::vector<std::vector<double>>(n, std::vector<double>(dim))};
    for (auto& row : c.a) std::ranges::generate(row, draw);
    for (auto& row : c.x) std::ranges::generate(row, draw);
    double value = candidate_quotient(c, t, opts);

    std::uniform_int_distribution<std::size_t> pick_k(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_j(0, dim - 1);
    std::normal_distribution<double> nudge(0.0, 0.5);
    for (std::size_t s = 0; s < proposals; ++s) {
      const bool in_a = (rng() & 1u) != 0;
      const std::size_t k = pick_k(rng);
      const std::size_t j = pick_j(rng);
      double& slot = in_a ? c.a[k][j] : c.x[k][j];
      const double old = slot;
      if (lattice) {
        const int shift = 1 + static_cast<int>(rng() & 1u);
        slot = static_cast<double>((static_cast<int>(old) + 1 + shift) % 3 - 1);
      } else {
        slot = old + nudge(rng);
      }
      const double v = candidate_quotient(c, t, opts);
      if (v > value) {
        value = v;
      } else {
        slot = old;
      }
    }

    if (value > best_value) {
      best_value = value;
      best_candidate = std::move(c);
    }
  }

  SearchResult out;
  out.restarts = budget;
  if (best_value > 0.0) {
    candidate_quotient(best_candidate, t, opts, &out.best);
    out.a = Family::from_rows(best_candidate.a);
    out.x = Family::from_rows(best_candidate.x);
  } else {
    out.best.mode = mode_name(Exhaustive{});
    out.best.certified = true;
  }
  out.best.seed = seed;
  return out;
}

bool main1_bound_check(const Family& a, const Family& x, const Exponent& q, double K,
                       const EnumerationOptions& opts) {
  check_pair(a, x);
  const double lhs = norm(product_sum(a, x), q);
  const double rhs =
      2.0 * K * max_norm(a, Exponent::finite(2.0)) * subset_max_norm(x, q, Exhaustive{}, opts).value;
  return lhs <= rhs * (1.0 + kNumEps);
}

}  // namespace uncond
