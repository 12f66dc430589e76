#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uncond {

/// Tolerance for exponent and reciprocal comparisons.
inline constexpr double kCmpEps = 1e-12;
/// Relative tolerance for norm inequalities.
inline constexpr double kNumEps = 1e-9;

/// Extended exponent in [1, inf]. Infinity is a distinct state, never a
/// floating-point infinity, and its reciprocal is exactly 0.
class Exponent {
 public:
  /// Throws DomainError unless v is finite and v >= 1.
  static Exponent finite(double v);
  static Exponent infinity() noexcept { return Exponent{}; }

  /// Accepts a decimal literal or "inf".
  static Exponent parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws DomainError for infinity.
  double value() const;
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Shortest round-trip decimal, or "inf".
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() = default;
  explicit Exponent(double v) : infinite_(false), value_(v) {}

  bool infinite_ = true;
  double value_ = 0.0;
};

Exponent dual_exponent(const Exponent& p);

struct ExponentTriple {
  Exponent p;
  Exponent q;
  Exponent r;

  /// 1/p + 1/q - 1/r; nonnegative (up to kCmpEps) for valid triples.
  double holder_slack() const noexcept {
    return p.reciprocal() + q.reciprocal() - r.reciprocal();
  }
  bool holder_valid() const noexcept { return holder_slack() >= -kCmpEps; }

  std::string to_string() const;
};

/// Finitely supported real sequence. Coordinates beyond size() are zero.
class FinSeq {
 public:
  FinSeq() = default;
  /// Throws DomainError on a non-finite entry.
  explicit FinSeq(std::vector<double> entries);
  FinSeq(std::initializer_list<double> entries);

  static FinSeq zeros(std::size_t len) { return FinSeq(std::vector<double>(len, 0.0)); }
  /// Standard unit vector e_index in a space of length len.
  static FinSeq unit(std::size_t len, std::size_t index);

  std::size_t ambient_len() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }
  double operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<double>& vector() const noexcept { return entries_; }

  friend bool operator==(const FinSeq&, const FinSeq&) = default;

 private:
  std::vector<double> entries_;
};

/// l_p norm of a finite vector. Finite p is evaluated with max-entry scaling
/// so large p does not overflow.
double norm(std::span<const double> v, const Exponent& p);
inline double norm(const FinSeq& v, const Exponent& p) { return norm(v.entries(), p); }

struct SandwichCheck {
  bool lower_ok;
  bool upper_ok;
};

/// Checks ||v||_q <= ||v||_p <= n^{1/p-1/q} ||v||_q with n = ambient length.
/// Requires 1 <= p <= q < inf and n >= 1; throws DomainError otherwise.
SandwichCheck norm_sandwich_check(const FinSeq& v, const Exponent& p, const Exponent& q);

}  // namespace uncond
