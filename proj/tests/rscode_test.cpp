#include "rsi/rscode.hpp"

#include <gtest/gtest.h>

#include "rsi/error.hpp"
#include "rsi/random.hpp"
#include "test_util.hpp"

using rsi::Code;
using rsi::Fe;
using rsi::Matrix;
using rsi::Poly;
using rsi::Word;
using rsi::testing::fes;
using rsi::testing::toy_code;
using rsi::testing::word;

TEST(Code, Parameters) {
  const Code c = toy_code();
  EXPECT_EQ(c.n(), 6u);
  EXPECT_EQ(c.k(), 2u);
  EXPECT_EQ(c.redundancy(), 4u);
  EXPECT_EQ(c.min_distance(), 5u);
  EXPECT_EQ(c.tau(), 2u);
  EXPECT_EQ(c.point(2), Fe{4});
  EXPECT_EQ(Code::make(7, 5).tau(), 0u);
  EXPECT_THROW(Code::make(7, 0), rsi::InvalidCode);
  EXPECT_THROW(Code::make(7, 6), rsi::InvalidCode);
  EXPECT_THROW(Code::make(9, 2), rsi::InvalidField);
  EXPECT_THROW(Code::make(7, 2, Fe{2}), rsi::InvalidField);
}

TEST(Code, GeneratorAndParityMatrices) {
  const Code c = toy_code();
  EXPECT_EQ(generator_matrix(c), (Matrix{{1, 1, 1, 1, 1, 1}, {1, 5, 4, 6, 2, 3}}));
  EXPECT_EQ(parity_matrix(c), (Matrix{{1, 5, 4, 6, 2, 3},
                                      {1, 4, 2, 1, 4, 2},
                                      {1, 6, 1, 6, 1, 6},
                                      {1, 2, 4, 1, 2, 4}}));
}

TEST(Code, Encode) {
  const Code c = toy_code();
  EXPECT_EQ(encode(c, fes({1, 1})), word("265034"));
  EXPECT_EQ(encode(c, fes({0, 2})), word("231546"));
  EXPECT_EQ(encode(c, fes({5, 6})), word("401632"));
  EXPECT_THROW(encode(c, fes({1, 1, 1})), rsi::LengthMismatch);
}

TEST(Code, Syndromes) {
  const Code c = toy_code();
  EXPECT_EQ(syndromes(c, word("421632")).values, fes({3, 1, 5, 4}));
  EXPECT_EQ(syndromes(c, word("025606")).values, fes({0, 1, 5, 5}));
  EXPECT_TRUE(syndromes(c, word("342650")).all_zero());
  EXPECT_TRUE(syndromes(c, word("265034")).all_zero());
  EXPECT_EQ(syndromes(c, word("342650")).size(), 4u);
  EXPECT_THROW(syndromes(c, word("34265")), rsi::LengthMismatch);
}

TEST(Code, Interpolate) {
  const Code c = toy_code();
  EXPECT_EQ(interpolate(c, word("421632")), Poly({3, 0, 3, 2, 6, 4}));
  EXPECT_EQ(interpolate(c, word("025606")), Poly({2, 2, 2, 2, 6, 0}));
  EXPECT_EQ(interpolate(c, word("540120")), Poly({2, 4, 3, 5, 5}));
  EXPECT_EQ(interpolate(c, word("401632")), Poly({5, 6}));
  EXPECT_TRUE(interpolate(c, word("000000")).is_zero());
}

TEST(Code, LagrangeBasis) {
  const Code c = toy_code();
  EXPECT_EQ(lagrange_basis(c, 0), Poly({6, 6, 6, 6, 6, 6}));
  EXPECT_EQ(lagrange_basis(c, 1), Poly({6, 4, 5, 1, 3, 2}));
  EXPECT_THROW(lagrange_basis(c, 6), rsi::PositionOutOfRange);
}

TEST(Code, Membership) {
  const Code c = toy_code();
  EXPECT_TRUE(is_codeword(c, word("342650")));
  EXPECT_TRUE(is_codeword_by_degree(c, word("342650")));
  EXPECT_FALSE(is_codeword(c, word("421632")));
  EXPECT_FALSE(is_codeword_by_degree(c, word("421632")));
  EXPECT_FALSE(is_codeword(c, word("025606")));
}

// Encode-by-G, evaluation of the message polynomial, zero syndromes and the
// degree test all describe the same code.
TEST(CodeProperty, FourDefinitionsAgree) {
  for (std::uint32_t q : {5u, 7u, 11u, 13u, 17u}) {
    rsi::Rng rng(q);
    for (std::size_t k = 1; k < q - 1; ++k) {
      const Code c = Code::make(q, k);
      const Matrix h = parity_matrix(c);
      const int trials = k == 2 ? 1000 : 60;
      for (int i = 0; i < trials; ++i) {
        const Word m = random_message(rng, c);
        const Word cw = encode(c, m);
        ASSERT_EQ(cw, evaluate(c, Poly(m)));
        ASSERT_TRUE(multiply(h, cw, c.field()) == Word(c.redundancy(), Fe{0}));
        ASSERT_TRUE(is_codeword(c, cw));
        ASSERT_TRUE(is_codeword_by_degree(c, cw));

        Word u = cw;
        const Word e = random_error(rng, c, 1 + rng.below(c.n()));
        for (std::size_t j = 0; j < c.n(); ++j) u[j] = c.field().add(u[j], e[j]);
        ASSERT_EQ(is_codeword(c, u), is_codeword_by_degree(c, u));
      }
    }
  }
}

TEST(CodeProperty, InterpolateRoundTrip) {
  for (std::uint32_t q : {7u, 13u, 16u, 17u, 256u}) {
    rsi::Rng rng(q + 1);
    const std::size_t k = q / 3;
    const Code c = Code::make(q, k);
    for (int i = 0; i < 200; ++i) {
      const Word cw = encode(c, random_message(rng, c));
      const Poly p = interpolate(c, cw);
      ASSERT_TRUE(p.is_zero() || *p.degree() < k);
      ASSERT_EQ(evaluate(c, p), cw);

      Word u(c.n());
      for (Fe& x : u) x = Fe{static_cast<std::uint32_t>(rng.below(q))};
      ASSERT_EQ(evaluate(c, interpolate(c, u)), u);
    }
  }
}

TEST(CodeProperty, LagrangeClosedFormMatchesProduct) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 11u, 13u, 16u, 17u}) {
    const Code c = Code::make(q, 1);
    const auto& f = c.field();
    for (std::size_t i = 0; i < c.n(); ++i) {
      // prod_{j != i} (x - a_j) / (a_i - a_j)
      Poly prod{1};
      for (std::size_t j = 0; j < c.n(); ++j) {
        if (j == i) continue;
        const Fe denom = f.inv(f.sub(c.point(i), c.point(j)));
        prod = mul(prod, Poly(std::vector<Fe>{f.mul(f.neg(c.point(j)), denom), denom}), f);
      }
      ASSERT_EQ(lagrange_basis(c, i), prod) << "q=" << q << " i=" << i;
    }
  }
}

TEST(CodeProperty, ReconstructionFromBasis) {
  for (std::uint32_t q : {7u, 11u, 16u}) {
    const Code c = Code::make(q, 2);
    const auto& f = c.field();
    rsi::Rng rng(q * 3);
    for (int t = 0; t < 200; ++t) {
      Word u(c.n());
      for (Fe& x : u) x = Fe{static_cast<std::uint32_t>(rng.below(q))};
      Poly sum;
      for (std::size_t i = 0; i < c.n(); ++i) sum = add(sum, scale(lagrange_basis(c, i), u[i], f), f);
      ASSERT_EQ(sum, interpolate(c, u));
    }
  }
}
