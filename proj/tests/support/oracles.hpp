#pragma once

// Test-only reference implementations. Each recomputes its quantity from
// scratch, independent of the incremental library code paths.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "uncond/family.hpp"
#include "uncond/seqspace.hpp"

namespace uncond::testing {

using Rows = std::vector<std::vector<double>>;

/// Plain l_p norm without scaling: (sum |v|^p)^(1/p), or max |v|.
inline double plain_norm(const std::vector<double>& v, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
  }
  double s = 0.0;
  for (double e : v) s += std::pow(std::abs(e), p);
  return std::pow(s, 1.0 / p);
}

inline double as_double(const Exponent& e) {
  return e.is_infinite() ? std::numeric_limits<double>::infinity() : e.value();
}

struct NaiveMax {
  double value = 0.0;
  std::uint64_t mask = 0;
};

/// Visits masks in Gray order, rebuilding each sum from scratch; first
/// maximum wins, with values within a relative 1e-12 counted as ties. sign=true treats bit=1 as coefficient -1, otherwise bit=1
/// means membership.
inline NaiveMax naive_gray_max(const Family& fam, const Exponent& q, bool sign) {
  const std::size_t n = fam.size();
  NaiveMax best{-1.0, 0};
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const std::uint64_t mask = i ^ (i >> 1);
    std::vector<double> sum(fam.ambient_len(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const bool bit = (mask >> k) & 1u;
      const double c = sign ? (bit ? -1.0 : 1.0) : (bit ? 1.0 : 0.0);
      if (c == 0.0) continue;
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += c * fam[k][j];
    }
    const double v = norm(sum, q);
    if (best.value < 0.0 || v > best.value * (1.0 + 1e-12)) best = {v, mask};
  }
  return best;
}

/// Max over subsets in plain binary order, using the unscaled norm.
inline double brute_subset_max(const Rows& rows, double q) {
  double best = 0.0;
  const std::size_t n = rows.size();
  const std::size_t dim = n ? rows[0].size() : 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<double> sum(dim, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if ((m >> k) & 1u) {
        for (std::size_t j = 0; j < dim; ++j) sum[j] += rows[k][j];
      }
    }
    best = std::max(best, plain_norm(sum, q));
  }
  return best;
}

inline double brute_sign_max_l1(const Rows& rows) {
  double best = 0.0;
  const std::size_t n = rows.size();
  const std::size_t dim = n ? rows[0].size() : 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<double> sum(dim, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double c = ((m >> k) & 1u) ? -1.0 : 1.0;
      for (std::size_t j = 0; j < dim; ++j) sum[j] += c * rows[k][j];
    }
    best = std::max(best, plain_norm(sum, 1.0));
  }
  return best;
}

/// Quotient computed entirely from plain loops.
inline double brute_quotient(const Rows& a, const Rows& x, double p, double q, double r) {
  const std::size_t dim = a.empty() ? 0 : a[0].size();
  std::vector<double> prod(dim, 0.0);
  double max_a = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t j = 0; j < dim; ++j) prod[j] += a[k][j] * x[k][j];
    max_a = std::max(max_a, plain_norm(a[k], p));
  }
  return plain_norm(prod, r) / (max_a * brute_subset_max(x, q));
}

inline double brute_complex_subset_max(const std::vector<std::complex<double>>& z) {
  double best = 0.0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << z.size()); ++m) {
    std::complex<double> s{};
    for (std::size_t k = 0; k < z.size(); ++k) {
      if ((m >> k) & 1u) s += z[k];
    }
    best = std::max(best, std::abs(s));
  }
  return best;
}

/// Max over contiguous arcs of the angularly sorted points. Every open
/// half-plane cut is such an arc, so this bounds the half-plane scan from
/// above and matches the true maximum.
inline double arc_scan_complex_max(std::vector<std::complex<double>> z) {
  std::erase(z, std::complex<double>{});
  std::ranges::sort(z, {}, [](const std::complex<double>& w) { return std::arg(w); });
  const std::size_t n = z.size();
  double best = 0.0;
  for (std::size_t start = 0; start < n; ++start) {
    std::complex<double> s{};
    for (std::size_t len = 1; len <= n; ++len) {
      s += z[(start + len - 1) % n];
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

inline std::vector<std::complex<double>> roots_of_unity(std::size_t n) {
  std::vector<std::complex<double>> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return out;
}

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int lattice() { return std::uniform_int_distribution<int>(-1, 1)(rng_); }
  /// Dyadic values k/4 with |k| <= 8: sums are exact in binary64.
  double dyadic() { return std::uniform_int_distribution<int>(-8, 8)(rng_) / 4.0; }

  std::vector<double> vec(std::size_t dim) {
    std::vector<double> v(dim);
    const int style = static_cast<int>(size(0, 2));
    for (auto& e : v) {
      if (style == 0) {
        e = gaussian();
      } else if (style == 1) {
        e = lattice();
      } else {
        e = uniform(-3.0, 3.0);
      }
    }
    return v;
  }

  Rows rows(std::size_t n, std::size_t dim) {
    Rows out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(vec(dim));
    return out;
  }

  Rows dyadic_rows(std::size_t n, std::size_t dim) {
    Rows out(n, std::vector<double>(dim));
    for (auto& r : out) {
      for (auto& e : r) e = dyadic();
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace uncond::testing
