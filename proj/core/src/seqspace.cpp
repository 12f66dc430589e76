#include "uncond/seqspace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "uncond/errors.hpp"

namespace uncond {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

Exponent Exponent::finite(double v) {
  if (!std::isfinite(v) || v < 1.0) {
    throw DomainError("exponent must be a finite number >= 1 or \"inf\", got " + shortest(v));
  }
  return Exponent(v);
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") return infinity();
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("cannot parse exponent \"" + std::string(text) + "\"");
  }
  return finite(v);
}

double Exponent::value() const {
  if (infinite_) throw DomainError("infinite exponent has no finite value");
  return value_;
}

std::string Exponent::to_string() const { return infinite_ ? "inf" : shortest(value_); }

Exponent dual_exponent(const Exponent& p) {
  if (p.is_infinite()) return Exponent::finite(1.0);
  const double v = p.value();
  if (v == 1.0) return Exponent::infinity();
  return Exponent::finite(v / (v - 1.0));
}

std::string ExponentTriple::to_string() const {
  return "(" + p.to_string() + "," + q.to_string() + "," + r.to_string() + ")";
}

FinSeq::FinSeq(std::vector<double> entries) : entries_(std::move(entries)) {
  for (double e : entries_) {
    if (!std::isfinite(e)) throw DomainError("sequence entries must be finite");
  }
}

FinSeq::FinSeq(std::initializer_list<double> entries) : FinSeq(std::vector<double>(entries)) {}

FinSeq FinSeq::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw DomainError("unit vector index out of range");
  std::vector<double> e(len, 0.0);
  e[index] = 1.0;
  return FinSeq(std::move(e));
}

double norm(std::span<const double> v, const Exponent& p) {
  double peak = 0.0;
  for (double e : v) peak = std::max(peak, std::abs(e));
  if (p.is_infinite() || peak == 0.0) return peak;

  const double pv = p.value();
  if (pv == 1.0) {
    double s = 0.0;
    for (double e : v) s += std::abs(e);
    return s;
  }
  double s = 0.0;
  if (pv == 2.0) {
    for (double e : v) {
      const double t = e / peak;
      s += t * t;
    }
    return peak * std::sqrt(s);
  }
  for (double e : v) s += std::pow(std::abs(e) / peak, pv);
  return peak * std::pow(s, 1.0 / pv);
}

SandwichCheck norm_sandwich_check(const FinSeq& v, const Exponent& p, const Exponent& q) {
  if (q.is_infinite()) throw DomainError("sandwich check requires q < inf");
  if (p.is_infinite() || p.value() > q.value()) throw DomainError("sandwich check requires p <= q");
  const std::size_t n = v.ambient_len();
  if (n == 0) throw DomainError("sandwich check requires ambient length >= 1");

  const double np = norm(v, p);
  const double nq = norm(v, q);
  const double factor = std::pow(static_cast<double>(n), p.reciprocal() - q.reciprocal());
  return {nq <= np * (1.0 + kNumEps), np <= factor * nq * (1.0 + kNumEps)};
}

}  // namespace uncond
