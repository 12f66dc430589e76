#include "uncond/action.hpp"

#include <algorithm>
#include <vector>

#include "uncond/errors.hpp"

namespace uncond {

FinSeq multiply(const FinSeq& a, const FinSeq& x) {
  if (a.ambient_len() != x.ambient_len()) {
    throw DomainError("multiply: ambient lengths differ (" + std::to_string(a.ambient_len()) + " vs " +
                      std::to_string(x.ambient_len()) + ")");
  }
  std::vector<double> out(a.ambient_len());
  std::ranges::transform(a.entries(), x.entries(), out.begin(), [](double u, double v) { return u * v; });
  return FinSeq(std::move(out));
}

MultiplicationAction::MultiplicationAction(const ExponentTriple& triple) : triple_(triple) {
  if (!triple_.holder_valid()) {
    throw DomainError("triple " + triple_.to_string() + " violates 1/r <= 1/p + 1/q");
  }
}

bool MultiplicationAction::holder_bound_check(const FinSeq& a, const FinSeq& x) const {
  const double lhs = norm(multiply(a, x), triple_.r);
  return lhs <= norm(a, triple_.p) * norm(x, triple_.q) * (1.0 + kNumEps);
}

bool holder_bound_check(const FinSeq& a, const FinSeq& x, const ExponentTriple& t) {
  return MultiplicationAction(t).holder_bound_check(a, x);
}

}  // namespace uncond
