#include "uncond/lemma_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "uncond/errors.hpp"

namespace uncond {

namespace {

RatioReport make_report(double ratio, RatioWitness witness, double bound, bool certified) {
  RatioReport rep;
  rep.ratio = ratio;
  rep.witness = std::move(witness);
  rep.bound = bound;
  rep.slack = bound - ratio;
  rep.certified = certified;
  rep.critical_finding = ratio > bound + kNumEps;
  return rep;
}

}  // namespace

double real_subset_max(std::span<const double> x) noexcept {
  double positive = 0.0;
  double negative = 0.0;
  for (double v : x) {
    if (v >= 0.0) {
      positive += v;
    } else {
      negative -= v;
    }
  }
  return std::max(positive, negative);
}

RatioReport real_subset_ratio(std::span<const double> x) {
  double total = 0.0;
  for (double v : x) total += std::abs(v);
  const double best = real_subset_max(x);
  if (!(best > 0.0)) throw DomainError("degenerate input: all entries are zero");
  return make_report(total / best, std::vector<double>(x.begin(), x.end()), 2.0, true);
}

double complex_subset_max_exhaustive(std::span<const std::complex<double>> z) {
  if (z.size() > 63) throw DomainError("complex subset enumeration is limited to 63 terms");
  const std::uint64_t total = std::uint64_t{1} << z.size();
  std::complex<double> sum{0.0, 0.0};
  std::uint64_t mask = 0;
  double best = 0.0;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto k = static_cast<std::size_t>(std::countr_zero(i));
    mask ^= std::uint64_t{1} << k;
    sum += ((mask >> k) & 1u) ? z[k] : -z[k];
    best = std::max(best, std::abs(sum));
  }
  return best;
}

double complex_subset_max_half_plane(std::span<const std::complex<double>> z) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> cuts;
  cuts.reserve(2 * z.size());
  for (const auto& w : z) {
    if (w == std::complex<double>{}) continue;
    const double phi = std::arg(w);
    for (double c : {phi + 0.5 * std::numbers::pi, phi - 0.5 * std::numbers::pi}) {
      cuts.push_back(c - two_pi * std::floor(c / two_pi));
    }
  }
  if (cuts.empty()) return 0.0;
  std::ranges::sort(cuts);

  double best = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double next = (i + 1 < cuts.size()) ? cuts[i + 1] : cuts.front() + two_pi;
    const std::complex<double> dir = std::polar(1.0, 0.5 * (cuts[i] + next));
    std::complex<double> sum{0.0, 0.0};
    for (const auto& w : z) {
      if ((std::conj(dir) * w).real() > 0.0) sum += w;
    }
    best = std::max(best, std::abs(sum));
  }
  return best;
}

RatioReport complex_subset_ratio(std::span<const std::complex<double>> z, const EnumerationOptions& opts) {
  double total = 0.0;
  for (const auto& w : z) total += std::abs(w);
  if (!(total > 0.0)) throw DomainError("degenerate input: all entries are zero");

  const bool exact = z.size() <= opts.max_exhaustive;
  const double best = exact ? complex_subset_max_exhaustive(z) : complex_subset_max_half_plane(z);
  RatioReport rep =
      make_report(total / best, std::vector<std::complex<double>>(z.begin(), z.end()), 4.0, exact);
  rep.sharp_bound = kPi;
  return rep;
}

RatioReport grothendieck_ratio(const Family& fam, double kg_upper, const EnumerationOptions& opts) {
  if (fam.all_zero()) throw DomainError("degenerate input: all vectors are zero");
  double total = 0.0;
  for (const auto& v : fam) total += norm(v, Exponent::finite(2.0));
  const SubsetMaxResult sm = sign_max_norm(fam, Exponent::finite(1.0), opts);
  return make_report(total / sm.value, fam, kg_upper, true);
}

RatioReport grothendieck_search(std::size_t n, std::size_t dim, std::uint64_t budget, std::uint64_t seed,
                                double kg_upper, const EnumerationOptions& opts) {
  if (budget == 0) throw DomainError("empty budget");
  if (n == 0 || dim == 0) throw DomainError("search needs n >= 1 and dim >= 1");
  if (n > opts.max_exhaustive) throw DomainError("grothendieck search: n exceeds the exhaustive cap");

  auto ratio_of = [&](const std::vector<std::vector<double>>& rows) {
    const Family fam = Family::from_rows(rows);
    return fam.all_zero() ? 0.0 : grothendieck_ratio(fam, kg_upper, opts).ratio;
  };

  const std::size_t proposals = std::min<std::size_t>(4 * n * dim, 64);
  std::vector<std::vector<double>> best_rows;
  double best = -1.0;
  for (std::uint64_t i = 0; i < budget; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    const bool lattice = (i % 2 == 0);
    std::uniform_int_distribution<int> tri(-1, 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
    for (auto& row : rows) {
      std::ranges::generate(row, [&] { return lattice ? static_cast<double>(tri(rng)) : gauss(rng); });
    }
    double value = ratio_of(rows);

    std::uniform_int_distribution<std::size_t> pick_k(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_j(0, dim - 1);
    for (std::size_t s = 0; s < proposals; ++s) {
      double& slot = rows[pick_k(rng)][pick_j(rng)];
      const double old = slot;
      if (lattice && old == 0.0) {
        slot = (rng() & 1u) ? 1.0 : -1.0;
      } else {
        slot = -old;
      }
      const double v = ratio_of(rows);
      if (v > value) {
        value = v;
      } else {
        slot = old;
      }
    }
    if (value > best) {
      best = value;
      best_rows = std::move(rows);
    }
  }

  if (best <= 0.0) {
    RatioReport rep = make_report(0.0, Family(std::vector<FinSeq>(n, FinSeq::zeros(dim))), kg_upper, true);
    return rep;
  }
  return grothendieck_ratio(Family::from_rows(best_rows), kg_upper, opts);
}

SandwichSlack sandwich_slack(const FinSeq& v, const Exponent& p, const Exponent& q) {
  const double np = norm(v, p);
  const double nq = norm(v, q);
  if (np == 0.0) return {0.0, 0.0};
  const double factor = std::pow(static_cast<double>(v.ambient_len()), p.reciprocal() - q.reciprocal());
  return {1.0 - nq / np, 1.0 - np / (factor * nq)};
}

SandwichReport sandwich_sweep(std::span<const std::size_t> dims,
                              std::span<const std::pair<Exponent, Exponent>> p_q_pairs, std::uint64_t trials,
                              std::uint64_t seed) {
  SandwichReport rep;
  for (std::size_t pi = 0; pi < p_q_pairs.size(); ++pi) {
    const auto& [p, q] = p_q_pairs[pi];
    if (q.is_infinite() || p.is_infinite() || p.value() > q.value()) {
      throw DomainError("sandwich pairs need 1 <= p <= q < inf");
    }
    SandwichPairStats stats{p, q};
    for (std::size_t di = 0; di < dims.size(); ++di) {
      if (dims[di] == 0) throw DomainError("sandwich dims must be >= 1");
      std::mt19937_64 rng(derive_seed(seed, pi * dims.size() + di));
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::vector<double> buf(dims[di]);
      for (std::uint64_t t = 0; t < trials; ++t) {
        std::ranges::generate(buf, [&] { return gauss(rng); });
        const FinSeq v(buf);
        const SandwichCheck check = norm_sandwich_check(v, p, q);
        const SandwichSlack slack = sandwich_slack(v, p, q);
        ++stats.trials;
        if (!check.lower_ok) ++stats.lower_violations;
        if (!check.upper_ok) ++stats.upper_violations;
        stats.min_lower_slack = std::min(stats.min_lower_slack, slack.lower);
        stats.min_upper_slack = std::min(stats.min_upper_slack, slack.upper);
      }
    }
    rep.total_violations += stats.lower_violations + stats.upper_violations;
    rep.pairs.push_back(stats);
  }
  return rep;
}

}  // namespace uncond
