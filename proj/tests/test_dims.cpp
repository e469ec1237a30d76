#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "hplus/dims.hpp"
#include "hplus/error.hpp"

using namespace hplus;

namespace {

std::string data(const char* name) { return std::string(HPLUS_TEST_DATA) + "/" + name; }

IntPolynomial poly(std::vector<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(v);
}

// A_l(2 cosh θ) = sinh((l+1)θ) / sinh θ
double closed_form_A(std::size_t l, double t) {
  double th = std::acosh(t / 2);
  return std::sinh((l + 1) * th) / std::sinh(th);
}

}  // namespace

TEST(Dims, ChebyshevSmall) {
  EXPECT_EQ(chebyshev_A(0), poly({1}));
  EXPECT_EQ(chebyshev_A(1), poly({0, 1}));
  EXPECT_EQ(chebyshev_A(2), poly({-1, 0, 1}));
  EXPECT_EQ(chebyshev_A(3), poly({0, -2, 0, 1}));
  EXPECT_EQ(chebyshev_A(4), poly({1, 0, -3, 0, 1}));
  EXPECT_EQ(chebyshev_A(4).to_string(), "X^4 - 3X^2 + 1");
}

TEST(Dims, ChebyshevRecurrence) {
  auto X = IntPolynomial::monomial(1, 1);
  for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(X * chebyshev_A(k), chebyshev_A(k + 1) + chebyshev_A(k - 1));
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_EQ(chebyshev_A(k).is_even(), k % 2 == 0);
}

TEST(Dims, ChebyshevValues) {
  for (double t : {2.5, 3.0, std::sqrt(5.0)})
    for (std::size_t l = 0; l <= 30; ++l) {
      double expect = closed_form_A(l, t);
      EXPECT_NEAR(chebyshev_A_value(l, t) / expect, 1.0, 1e-9);
      EXPECT_NEAR(chebyshev_A(l).evaluate(t) / expect, 1.0, 1e-9);
    }
  // at t = 2 the values are l + 1
  for (std::size_t l = 0; l <= 20; ++l) EXPECT_DOUBLE_EQ(chebyshev_A_value(l, 2.0), static_cast<double>(l + 1));
}

TEST(Dims, PolynomialArithmetic) {
  auto p = poly({1, 2});
  auto q = poly({-1, 0, 3});
  EXPECT_EQ(p * q, poly({-1, -2, 3, 6}));
  EXPECT_EQ(p - p, IntPolynomial());
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(q.evaluate(BigInt(2)), 11);
  EXPECT_EQ(poly({-1, 0, 1}).even_substitute(), poly({-1, 1}));
}

TEST(Dims, CharacterPolynomials) {
  auto g = Group::cyclic(3);
  auto c1 = character_polynomial(g, to_mprime(g, parse_word(g, "[1]")));
  EXPECT_EQ(c1.Q, poly({0, 0, 1}));
  EXPECT_EQ(c1.P, poly({0, 1}));
  auto ce = character_polynomial(g, to_mprime(g, parse_word(g, "[e]")));
  EXPECT_EQ(ce.P, poly({-1, 1}));
  auto c0 = character_polynomial(g, to_mprime(g, Word{}));
  EXPECT_EQ(c0.P, poly({1}));
  MPrimeWord odd;
  odd.exponents = {3};
  EXPECT_THROW(character_polynomial(g, odd), InvalidArgument);
}

TEST(Dims, Dimensions) {
  auto g = Group::cyclic(2);
  for (std::uint64_t N : {1u, 4u, 5u, 12u}) {
    EXPECT_EQ(dimension(g, parse_word(g, "[1]"), N), N);
    EXPECT_EQ(dimension(g, parse_word(g, "[0]"), N), BigInt(N) - 1);
  }
  EXPECT_EQ(dimension(g, parse_word(g, "[0,0]"), 5), 11);
  // dim ω(e)^2 = dim ω(e,e) + dim ω(e) + 1
  EXPECT_EQ(4 * 4, 11 + 4 + 1);
  // huge N stays exact: exponents 1,2,2,2,2,2,1 give N (N-1)^5
  const BigInt n = 1000000007;
  auto big = dimension(g, parse_word(g, "[1,1,1,1,1,1]"), 1000000007);
  EXPECT_EQ(big, n * (n - 1) * (n - 1) * (n - 1) * (n - 1) * (n - 1));
  auto alt = dimension(Group::cyclic(3), parse_word(Group::cyclic(3), "[1,2,1,2]"), 1000000007);
  EXPECT_EQ(alt, n * (n - 1) * (n - 1) * (n - 1));
}

TEST(Dims, DimensionsNonnegativeOnS3) {
  auto g = Group::load_table(data("s3.json"));
  for (const auto& w : words_up_to(g.enumerate(), 3))
    for (std::uint64_t N : {4u, 5u, 6u}) EXPECT_GE(dimension(g, w, N), 0);
}

TEST(Dims, MultiplierExamples) {
  auto g = Group::cyclic(3);
  for (const auto& w : words_up_to(g.enumerate(), 3)) EXPECT_EQ(multiplier_eigenvalue(g, w, 7.0, 7), 1.0);
  EXPECT_NEAR(multiplier_eigenvalue(g, parse_word(g, "[1]"), 4.5, 6), 4.5 / 6, 1e-12);
  EXPECT_NEAR(multiplier_eigenvalue(g, parse_word(g, "[e]"), 4.0, 5), 0.75, 1e-12);
  EXPECT_NEAR(multiplier_eigenvalue(g, parse_word(g, "[1,2]"), 2.0, 4), 2.0 / 12, 1e-12);
  EXPECT_EQ(multiplier_eigenvalue(g, parse_word(g, "[1,2]"), 1.0, 4), 0.0);
  EXPECT_THROW(check_multiplier_range(3.9, 5), InvalidArgument);
  EXPECT_THROW(check_multiplier_range(5.5, 5), InvalidArgument);
  EXPECT_THROW(check_multiplier_range(4.5, 4), InvalidArgument);
  EXPECT_THROW(check_multiplier_range(2.0, 3), InvalidArgument);
  EXPECT_NO_THROW(check_multiplier_range(0.0, 4));
}

TEST(Dims, Ball) {
  auto g = Group::cyclic(2);
  EXPECT_EQ(ball(g, 0).size(), 1u);
  EXPECT_EQ(ball(g, 1).size(), 1u);
  EXPECT_EQ(ball(g, 2).size(), 3u);
  std::size_t prev = 0;
  for (std::uint64_t R = 0; R <= 10; ++R) {
    auto b = ball(g, R);
    EXPECT_GE(b.size(), prev);
    prev = b.size();
    for (const auto& w : b) EXPECT_LE(L_length(g, w), R);
  }
  EXPECT_EQ(prev, 63u);
  EXPECT_THROW(ball(Group::integers(), 2), InvalidArgument);
  EXPECT_THROW(ball(g, 40, 1000), ResourceCap);
}

TEST(Dims, DecayMatchesBruteForce) {
  for (std::int64_t s : {2, 3}) {
    auto g = Group::cyclic(s);
    for (std::uint64_t N : {5u, 6u}) {
      const double x = 4.0;
      auto rows = decay_profile(g, x, N, 12);
      std::map<std::uint64_t, std::pair<std::uint64_t, double>> brute;
      for (const auto& w : ball(g, 12)) {
        auto& slot = brute[L_length(g, w)];
        ++slot.first;
        slot.second = std::max(slot.second, std::fabs(multiplier_eigenvalue(g, w, x, N)));
      }
      ASSERT_EQ(rows.size(), brute.size());
      for (const auto& row : rows) {
        EXPECT_EQ(row.R % 2, 0u);
        EXPECT_EQ(row.shell_size, brute[row.R].first);
        EXPECT_NEAR(row.max_abs_c, brute[row.R].second, 1e-12);
      }
    }
  }
}

TEST(Dims, DecayZ2) {
  auto rows = decay_profile(Group::cyclic(2), 4.0, 5, 60);
  EXPECT_DOUBLE_EQ(rows[0].max_abs_c, 1.0);
  EXPECT_NEAR(rows[1].max_abs_c, 0.8, 1e-12);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].max_abs_c, 1.0);
  EXPECT_LT(rows.back().max_abs_c, 1e-3);
  EXPECT_THROW(decay_profile(Group::cyclic(2), 5.0, 5, 10), InvalidArgument);
}
