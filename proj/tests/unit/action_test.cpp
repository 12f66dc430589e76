#include <gtest/gtest.h>

#include "oracles.hpp"
#include "uncond/action.hpp"
#include "uncond/errors.hpp"

namespace uncond {
namespace {

using testing::Gen;
Exponent E(double v) { return Exponent::finite(v); }
const Exponent kInf = Exponent::infinity();

TEST(MultiplyTest, Examples) {
  EXPECT_EQ(multiply(FinSeq{1, 2}, FinSeq{3, 4}), (FinSeq{3, 8}));
  EXPECT_EQ(multiply(FinSeq{0, 0}, FinSeq{-7, 2.5}), (FinSeq{0, 0}));
  EXPECT_EQ(multiply(FinSeq{1, -1}, FinSeq{1, -1}), (FinSeq{1, 1}));
}

TEST(MultiplyTest, LengthMismatch) {
  EXPECT_THROW(multiply(FinSeq{1, 2}, FinSeq{1}), DomainError);
  EXPECT_THROW(holder_bound_check(FinSeq{1}, FinSeq{1, 2}, {E(2), E(2), E(1)}), DomainError);
}

TEST(ActionTest, RejectsInvalidTripleAtConstruction) {
  EXPECT_THROW(MultiplicationAction({E(3), E(3), E(1)}), DomainError);
  EXPECT_NO_THROW(MultiplicationAction({E(2), E(2), E(1)}));
}

TEST(HolderBoundTest, Examples) {
  EXPECT_TRUE(holder_bound_check(FinSeq{1, 1}, FinSeq{1, 1}, {E(2), E(2), E(1)}));
  EXPECT_TRUE(holder_bound_check(FinSeq{0, 0, 0}, FinSeq{5, -2, 1}, {E(1), E(1), E(3)}));
}

TEST(HolderBoundProperty, HoldsOnRandomValidTriples) {
  Gen gen(77);
  const MultiplicationAction inf_one({kInf, E(1), E(1)});
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = gen.size(1, 16);
    const FinSeq a(gen.vec(n));
    const FinSeq x(gen.vec(n));
    EXPECT_TRUE(inf_one.holder_bound_check(a, x));

    const double p = gen.uniform(1.0, 8.0);
    const double q = gen.uniform(1.0, 8.0);
    // r with 1/r anywhere in [0, min(1, 1/p + 1/q)]
    const double inv_r = gen.uniform(0.0, std::min(1.0, 1.0 / p + 1.0 / q));
    const Exponent r = inv_r < 1e-3 ? kInf : E(1.0 / inv_r);
    EXPECT_TRUE(holder_bound_check(a, x, {E(p), E(q), r}));
  }
}

TEST(MultiplyProperty, Bilinear) {
  Gen gen(78);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = gen.size(1, 12);
    const FinSeq a(gen.vec(n)), b(gen.vec(n)), x(gen.vec(n));
    const double alpha = gen.gaussian(), beta = gen.gaussian();
    std::vector<double> comb(n);
    for (std::size_t j = 0; j < n; ++j) comb[j] = alpha * a[j] + beta * b[j];
    const FinSeq lhs = multiply(FinSeq(comb), x);
    const FinSeq pa = multiply(a, x), pb = multiply(b, x);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(lhs[j], alpha * pa[j] + beta * pb[j], kNumEps);
    }
  }
}

}  // namespace
}  // namespace uncond
