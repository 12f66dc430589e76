#include "uncond/family.hpp"

#include <algorithm>

#include "uncond/errors.hpp"

namespace uncond {

Family::Family(std::vector<FinSeq> vectors) : vectors_(std::move(vectors)) {
  if (!vectors_.empty()) ambient_len_ = vectors_.front().ambient_len();
  for (const auto& v : vectors_) {
    if (v.ambient_len() != ambient_len_) throw DomainError("family vectors must share one ambient length");
  }
}

Family::Family(std::vector<FinSeq> vectors, std::size_t ambient_len)
    : vectors_(std::move(vectors)), ambient_len_(ambient_len) {
  for (const auto& v : vectors_) {
    if (v.ambient_len() != ambient_len_) throw DomainError("family vectors must share one ambient length");
  }
}

Family Family::from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<FinSeq> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) vs.emplace_back(r);
  return Family(std::move(vs));
}

bool Family::all_zero() const noexcept {
  return std::ranges::all_of(vectors_, [](const FinSeq& v) {
    return std::ranges::all_of(v.entries(), [](double e) { return e == 0.0; });
  });
}

}  // namespace uncond
