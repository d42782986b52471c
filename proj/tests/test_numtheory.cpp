#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "pretzelfill/numtheory.hpp"

using namespace pretzelfill;

namespace {

// Möbius function by linear sieve; mu(n) != 0 exactly when n is squarefree.
std::vector<int> mobius_sieve(int limit) {
  std::vector<int> mu(limit + 1, 1), primes;
  std::vector<bool> composite(limit + 1, false);
  mu[0] = 0;
  for (int i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      if (static_cast<long long>(p) * i > limit) break;
      composite[p * i] = true;
      if (i % p == 0) {
        mu[p * i] = 0;
        break;
      }
      mu[p * i] = -mu[i];
    }
  }
  return mu;
}

}  // namespace

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(15));
  EXPECT_FALSE(is_squarefree(9));
  EXPECT_FALSE(is_squarefree(16));
  EXPECT_TRUE(is_squarefree(1));
  EXPECT_TRUE(is_squarefree(2));
  EXPECT_FALSE(is_squarefree(4));
  EXPECT_TRUE(is_squarefree(1000003LL * 1000033LL));
  EXPECT_FALSE(is_squarefree(2LL * 1000003LL * 1000003LL));
  EXPECT_THROW(is_squarefree(0), invalid_input);
  EXPECT_THROW(is_squarefree(-6), invalid_input);
}

TEST(Squarefree, AgreesWithMobiusSieve) {
  constexpr int kLimit = 1'000'000;
  const auto mu = mobius_sieve(kLimit);
  for (int n = 1; n <= kLimit; ++n) ASSERT_EQ(is_squarefree(n), mu[n] != 0) << n;
}

TEST(LargestSquarefree, Examples) {
  EXPECT_EQ(largest_squarefree_in({11, 17}), 15);
  EXPECT_EQ(largest_squarefree_in({9, 16}), 15);
  EXPECT_EQ(largest_squarefree_in({48, 50}), std::nullopt);
  EXPECT_EQ(largest_squarefree_in({-3, 1}), std::nullopt);
  EXPECT_THROW(IntegerInterval(5, 5), invalid_input);
}

TEST(LargestSquarefree, SoundOnAllShortWindows) {
  const auto mu = mobius_sieve(5000);
  for (std::int64_t lo = 1; lo < 4990; ++lo) {
    for (std::int64_t len = 1; len <= 6; ++len) {
      const IntegerInterval w(lo, lo + len);
      const auto s = largest_squarefree_in(w);
      if (s) {
        ASSERT_TRUE(w.contains(*s));
        ASSERT_NE(mu[*s], 0);
        for (auto x = *s + 1; x < w.upper; ++x) ASSERT_EQ(mu[x], 0);
      } else {
        for (auto x = w.lower; x < w.upper; ++x) ASSERT_EQ(mu[x], 0);
      }
    }
  }
}
