#include "uncond/enumeration.hpp"

#include <bit>
#include <vector>

namespace uncond {

namespace {

// Walks Gray indices [begin, end). The running sum for the first mask is
// built from scratch, then each step applies one update.
GrayMax walk_range(const Family& fam, const Exponent& q, SumKind kind, std::uint64_t begin,
                   std::uint64_t end) {
  const std::size_t dim = fam.ambient_len();
  std::vector<double> sum(dim, 0.0);

  std::uint64_t mask = gray_code(begin);
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const bool bit = (mask >> k) & 1u;
    double coeff = 0.0;
    if (kind == SumKind::Subset) {
      coeff = bit ? 1.0 : 0.0;
    } else {
      coeff = bit ? -1.0 : 1.0;
    }
    if (coeff == 0.0) continue;
    const auto xk = fam[k].entries();
    for (std::size_t j = 0; j < dim; ++j) sum[j] += coeff * xk[j];
  }

  GrayMax best{norm(sum, q), mask, begin};
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const auto k = static_cast<std::size_t>(std::countr_zero(i));
    mask ^= std::uint64_t{1} << k;
    const bool now_set = (mask >> k) & 1u;
    double coeff = 0.0;
    if (kind == SumKind::Subset) {
      coeff = now_set ? 1.0 : -1.0;
    } else {
      coeff = now_set ? -2.0 : 2.0;
    }
    const auto xk = fam[k].entries();
    for (std::size_t j = 0; j < dim; ++j) sum[j] += coeff * xk[j];

    const double value = norm(sum, q);
    if (beats(value, best.value)) best = {value, mask, i};
  }
  return best;
}

}  // namespace

GrayMax gray_max_norm(const Family& fam, const Exponent& q, SumKind kind, unsigned threads) {
  const auto n = static_cast<unsigned>(fam.size());
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned chunk_bits = n < kChunkBits ? n : kChunkBits;
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const std::uint64_t chunks = total / chunk;

  std::vector<GrayMax> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    partial[c] = walk_range(fam, q, kind, c * chunk, (c + 1) * chunk);
  });

  GrayMax best = partial.front();
  for (std::size_t c = 1; c < partial.size(); ++c) {
    if (beats(partial[c].value, best.value)) best = partial[c];
  }
  return best;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace uncond
