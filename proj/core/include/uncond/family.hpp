#pragma once

#include <cstddef>
#include <vector>

#include "uncond/seqspace.hpp"

namespace uncond {

/// Ordered finite series x_0, ..., x_{n-1} sharing one ambient length.
class Family {
 public:
  Family() = default;
  /// Throws DomainError if the vectors disagree on ambient length.
  explicit Family(std::vector<FinSeq> vectors);
  /// An empty family with an explicit ambient length.
  Family(std::vector<FinSeq> vectors, std::size_t ambient_len);

  static Family from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  std::size_t ambient_len() const noexcept { return ambient_len_; }

  const FinSeq& operator[](std::size_t k) const { return vectors_[k]; }
  const std::vector<FinSeq>& vectors() const noexcept { return vectors_; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  /// True when every entry of every vector is zero (or the family is empty).
  bool all_zero() const noexcept;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::vector<FinSeq> vectors_;
  std::size_t ambient_len_ = 0;
};

}  // namespace uncond
