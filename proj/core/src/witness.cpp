#include "uncond/witness.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "uncond/errors.hpp"
#include "uncond/unconditionality.hpp"

namespace uncond {

HadamardMatrix::HadamardMatrix(int log_size, std::vector<std::int8_t> entries)
    : log_size_(log_size), entries_(std::move(entries)) {
  if (log_size_ < 0 || log_size_ > kMaxSylvesterLog) {
    throw DomainError("Hadamard order must be 2^n with 0 <= n <= " + std::to_string(kMaxSylvesterLog));
  }
  if (entries_.size() != order() * order()) throw DomainError("Hadamard entry count must be 4^n");
  for (auto e : entries_) {
    if (e != 1 && e != -1) throw DomainError("Hadamard entries must be +1 or -1");
  }
}

namespace {

// Popcount of a ^ b summed over `words` words; cloned for CPUs with a
// popcount instruction.
#if defined(__GNUC__) && defined(__x86_64__) && !defined(__clang__)
[[gnu::target_clones("popcnt", "default")]]
#endif
std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  return total;
}

}  // namespace

bool HadamardMatrix::rows_orthogonal() const {
  // Two +-1 rows of length N are orthogonal iff their sign patterns differ in
  // exactly N/2 positions.
  const std::size_t n = order();
  if (n == 1) return true;
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> signs(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) < 0) signs[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (2 * xor_popcount(&signs[i * words], &signs[k * words], words) != n) return false;
    }
  }
  return true;
}

Family HadamardMatrix::rows_as_family() const {
  std::vector<FinSeq> rows;
  rows.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) {
    const auto r = row(i);
    rows.emplace_back(std::vector<double>(r.begin(), r.end()));
  }
  return Family(std::move(rows), order());
}

std::vector<std::uint8_t> HadamardMatrix::pack_bits() const {
  std::vector<std::uint8_t> out((entries_.size() + 7) / 8, 0);
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
    if (entries_[idx] < 0) out[idx / 8] |= static_cast<std::uint8_t>(1u << (idx % 8));
  }
  return out;
}

HadamardMatrix HadamardMatrix::unpack_bits(int log_size, std::span<const std::uint8_t> bits) {
  if (log_size < 0 || log_size > kMaxSylvesterLog) throw DomainError("bit-packed Hadamard: bad order");
  const std::size_t count = std::size_t{1} << (2 * log_size);
  if (bits.size() != (count + 7) / 8) throw DomainError("bit-packed Hadamard: wrong byte count");
  std::vector<std::int8_t> entries(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    entries[idx] = ((bits[idx / 8] >> (idx % 8)) & 1u) ? std::int8_t{-1} : std::int8_t{1};
  }
  return HadamardMatrix(log_size, std::move(entries));
}

HadamardMatrix sylvester(int n) {
  if (n < 0 || n > kMaxSylvesterLog) {
    throw DomainError("sylvester: n must be in [0, " + std::to_string(kMaxSylvesterLog) + "]");
  }
  std::vector<std::int8_t> h{1};
  std::size_t m = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<std::int8_t> next(4 * m * m);
    const std::size_t w = 2 * m;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::int8_t s = h[i * m + j];
        next[i * w + j] = s;
        next[i * w + j + m] = s;
        next[(i + m) * w + j] = s;
        next[(i + m) * w + j + m] = static_cast<std::int8_t>(-s);
      }
    }
    h = std::move(next);
    m = w;
  }
  HadamardMatrix out(n, std::move(h));
  if (!out.rows_orthogonal()) throw InconsistencyError("sylvester: rows not orthogonal");
  return out;
}

WitnessReport hadamard_witness(const ExponentTriple& t, double C, const EnumerationOptions& opts) {
  if (!t.holder_valid()) throw DomainError("triple " + t.to_string() + " violates 1/r <= 1/p + 1/q");
  if (t.r.is_infinite()) throw DomainError("hadamard witness requires r < inf");
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("hadamard witness requires a finite C > 0");

  const double inv_p = t.p.reciprocal();
  const double inv_r = t.r.reciprocal();
  const double inv_q2 = std::max(0.5, t.q.reciprocal());  // 1 / min(2, q)
  if (!(0.5 + inv_r - inv_p - inv_q2 > kCmpEps)) throw DomainError("second-clause condition not satisfied");

  const double log2_c = std::log2(C);
  auto certifies = [&](int n) {
    const double lhs = n * (1.0 + inv_r);
    const double rhs = log2_c + n * (inv_p + 0.5 + inv_q2);
    return lhs - rhs > kCmpEps;
  };

  int n = 1;
  while (n <= kMaxWitnessLog && !certifies(n)) ++n;
  if (n > kMaxWitnessLog) throw ScaleLimitError("C too large for desk scale");

  WitnessReport rep;
  rep.triple = t;
  rep.C = C;
  rep.n = n;
  rep.family_size = std::uint64_t{1} << n;
  rep.log2_numerator = n * (1.0 + inv_r);
  rep.log2_max_a_norm = n * inv_p;
  rep.log2_denominator_bound = n * (inv_p + 0.5 + inv_q2);
  rep.certified_ratio_log2 = rep.log2_numerator - rep.log2_denominator_bound;
  rep.minimality_checked = (n == 1) || !certifies(n - 1);
  if (!rep.minimality_checked) throw InconsistencyError("hadamard witness: n is not minimal");

  if (n <= kMaxSylvesterLog) {
    const HadamardMatrix h = sylvester(n);
    const std::size_t order = h.order();
    // sum_k a_k x_k with a_k = x_k = row k is the constant 2^n vector.
    for (std::size_t j = 0; j < order; ++j) {
      std::int64_t col = 0;
      for (std::size_t k = 0; k < order; ++k) col += h.at(k, j) * h.at(k, j);
      if (col != static_cast<std::int64_t>(order)) {
        throw InconsistencyError("hadamard witness: product sum is not constant 2^n");
      }
    }
    rep.materialized = true;

    if (order <= opts.max_exhaustive) {
      const Family fam = h.rows_as_family();
      const QuotientResult q = unconditionality_quotient(fam, fam, t, Exhaustive{}, opts);
      if (q.quotient < std::exp2(rep.certified_ratio_log2) - kNumEps) {
        throw InconsistencyError("hadamard witness: exhaustive quotient below the certified bound");
      }
      rep.exhaustive_quotient = q.quotient;
    }
  }
  return rep;
}

double power_tail_sum(std::uint64_t N, double s) {
  if (!(s > 1.0)) throw DomainError("power tail sum requires s > 1");
  constexpr std::uint64_t kExplicit = 32;
  const double K = static_cast<double>(N + kExplicit + 1);

  // Euler-Maclaurin remainder for sum_{n >= K} n^{-s}.
  double tail = std::pow(K, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(K, -s) + s * std::pow(K, -s - 1.0) / 12.0 -
                s * (s + 1.0) * (s + 2.0) * std::pow(K, -s - 3.0) / 720.0 +
                s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(K, -s - 5.0) / 30240.0;
  for (std::uint64_t n = N + kExplicit; n > N; --n) tail += std::pow(static_cast<double>(n), -s);
  return tail;
}

TailWitness tail_witness(const Exponent& q, const Exponent& r, double B) {
  if (r.is_infinite() || !(q.is_infinite() || r.value() < q.value())) {
    throw DomainError("tail witness requires r < q");
  }
  if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("tail witness requires a finite B > 0");

  constexpr std::uint64_t kMaxTerms = 100'000'000;
  const double rv = r.value();
  // H_N < ln N + gamma + 1/(2N), so targets above this are out of reach.
  constexpr double kEulerGamma = 0.5772156649015329;
  const double reachable = std::log(static_cast<double>(kMaxTerms)) + kEulerGamma + 0.5 / kMaxTerms;
  if (std::pow(B, rv) > reachable * (1.0 + 1e-9)) throw ScaleLimitError("B too large for desk scale");

  double harmonic = 0.0;
  std::uint64_t N = 0;
  double partial = 0.0;
  while (partial < B) {
    if (N == kMaxTerms) throw ScaleLimitError("B too large for desk scale");
    ++N;
    harmonic += 1.0 / static_cast<double>(N);
    partial = std::pow(harmonic, 1.0 / rv);
  }

  TailWitness w;
  w.N = N;
  w.partial_r_norm = partial;
  if (q.is_infinite()) {
    w.tail_q_bound = std::pow(static_cast<double>(N + 1), -1.0 / rv);
  } else {
    w.tail_q_bound = std::pow(power_tail_sum(N, q.value() / rv), 1.0 / q.value());
  }
  return w;
}

}  // namespace uncond
