#pragma once

#include "uncond/seqspace.hpp"

namespace uncond {

/// Coordinatewise product (a(k) x(k))_k. Throws DomainError on length mismatch.
FinSeq multiply(const FinSeq& a, const FinSeq& x);

/// Coordinatewise multiplication l_p x l_q -> l_r. Only Hoelder-valid triples
/// can be constructed.
class MultiplicationAction {
 public:
  explicit MultiplicationAction(const ExponentTriple& triple);

  const ExponentTriple& triple() const noexcept { return triple_; }
  FinSeq apply(const FinSeq& a, const FinSeq& x) const { return multiply(a, x); }

  /// ||a x||_r <= ||a||_p ||x||_q (1 + kNumEps).
  bool holder_bound_check(const FinSeq& a, const FinSeq& x) const;

 private:
  ExponentTriple triple_;
};

/// Free-function form; throws DomainError if t is not Hoelder-valid.
bool holder_bound_check(const FinSeq& a, const FinSeq& x, const ExponentTriple& t);

}  // namespace uncond
