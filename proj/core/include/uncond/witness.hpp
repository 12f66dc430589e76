#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uncond/enumeration.hpp"
#include "uncond/family.hpp"
#include "uncond/seqspace.hpp"

namespace uncond {

inline constexpr int kMaxSylvesterLog = 12;
inline constexpr int kMaxWitnessLog = 40;

/// 2^n x 2^n matrix with +-1 entries and mutually orthogonal rows.
class HadamardMatrix {
 public:
  /// Throws DomainError unless every entry is +-1 and entries.size() == 4^n.
  HadamardMatrix(int log_size, std::vector<std::int8_t> entries);

  int log_size() const noexcept { return log_size_; }
  std::size_t order() const noexcept { return std::size_t{1} << log_size_; }
  int at(std::size_t i, std::size_t j) const { return entries_[i * order() + j]; }
  std::span<const std::int8_t> row(std::size_t i) const {
    return std::span<const std::int8_t>(entries_).subspan(i * order(), order());
  }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }

  /// Exact integer check of sum_j s_ij s_kj == 0 for all i != k.
  bool rows_orthogonal() const;

  /// Rows as a family of real vectors of ambient length 2^n.
  Family rows_as_family() const;

  /// Row-major, one bit per entry, LSB first within each byte, bit = 1 for -1.
  std::vector<std::uint8_t> pack_bits() const;
  static HadamardMatrix unpack_bits(int log_size, std::span<const std::uint8_t> bits);

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  int log_size_;
  std::vector<std::int8_t> entries_;
};

/// Sylvester matrix of order 2^n by repeated doubling [[H, H], [H, -H]].
/// Requires 0 <= n <= 12.
HadamardMatrix sylvester(int n);

struct WitnessReport {
  ExponentTriple triple{Exponent::infinity(), Exponent::infinity(), Exponent::infinity()};
  double C = 0.0;
  int n = 0;
  std::uint64_t family_size = 0;
  double log2_numerator = 0.0;          // n (1 + 1/r)
  double log2_max_a_norm = 0.0;         // n / p
  double log2_denominator_bound = 0.0;  // n (1/p + 1/2 + 1/q'')
  double certified_ratio_log2 = 0.0;    // log2_numerator - log2_denominator_bound
  std::optional<double> exhaustive_quotient;
  bool minimality_checked = false;
  /// True when the family was built and its product checked in integers.
  bool materialized = false;
};

/// Smallest n >= 1 whose Sylvester family of order 2^n certifies a
/// quotient above C for l_p x l_q -> l_r. Requires a Hoelder-valid triple with
/// r < inf and 1/2 + 1/r > 1/p + 1/min(2,q) by more than kCmpEps, and C > 0.
WitnessReport hadamard_witness(const ExponentTriple& t, double C, const EnumerationOptions& opts = {});

struct TailWitness {
  std::uint64_t N = 0;
  double partial_r_norm = 0.0;
  double tail_q_bound = 0.0;
};

/// For x(n) = n^{-1/r}, n >= 1: the smallest N with
/// ||sum_{n<=N} x(n) e_n||_r >= B, and the l_q norm of the remaining tail.
/// Requires 1 <= r < q and B > 0.
TailWitness tail_witness(const Exponent& q, const Exponent& r, double B);

/// sum_{n>N} n^{-s} for s > 1 (explicit terms plus Euler-Maclaurin remainder).
double power_tail_sum(std::uint64_t N, double s);

}  // namespace uncond
