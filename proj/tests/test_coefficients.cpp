#include <gtest/gtest.h>

#include <functional>

#include "compound/coefficients.hpp"

using namespace compound;

namespace {

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

// outer/inner is a horizontal strip iff inner interlaces outer
bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner) || outer.length() > inner.length() + 1) return false;
  for (int i = 0; i + 1 < outer.length(); ++i) {
    if (outer[i + 1] > inner[i]) return false;
  }
  return true;
}

// K_{νμ} as the number of horizontal-strip chains ∅ ⊂ ... ⊂ ν of sizes μ_1, μ_2, ...
long kostka_by_strips(const Partition& nu, const Partition& mu) {
  std::function<long(const Partition&, int)> count = [&](const Partition& shape, int step) -> long {
    if (step == mu.length()) return shape == nu ? 1 : 0;
    long total = 0;
    for (const auto& next : generate_partitions(shape.weight() + mu[step])) {
      if (contains(nu, next) && horizontal_strip(next, shape)) total += count(next, step + 1);
    }
    return total;
  };
  return count(Partition{}, 0);
}

}  // namespace

TEST(Green, Examples) {
  EXPECT_EQ(green_function(Partition{1}, Partition{1}), 1);
  EXPECT_EQ(green_function(Partition{2}, Partition{1, 1}), 1);
  EXPECT_EQ(green_function(Partition{}, Partition{}), 1);
  EXPECT_THROW(green_function(Partition{2}, Partition{1}), std::invalid_argument);
  EXPECT_THROW(green_function(Partition{2}, Partition{2}), std::invalid_argument);
}

TEST(Green, OneRowIsConstant) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& sigma : generate_partitions(n, PartitionFilter::odd)) EXPECT_EQ(green_function(Partition{n}, sigma), 1);
  }
}

TEST(SpinCharacter, Examples) {
  EXPECT_EQ(spin_character(Partition{1}, Partition{1}), 1);
  EXPECT_EQ(spin_character(Partition{2}, Partition{1, 1}), 1);
  EXPECT_EQ(spin_character(Partition{3}, Partition{3}), 1);
}

TEST(SpinCharacter, BasicSpinDegree) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(spin_character(Partition{n}, Partition(std::vector<int>(n, 1))), pow2((n - 1) / 2)) << n;
  }
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(littlewood_richardson(Partition{2, 1}, Partition{}, Partition{2, 1}), 1);
  EXPECT_EQ(littlewood_richardson(Partition{2, 1}, Partition{}, Partition{3}), 0);
  EXPECT_EQ(littlewood_richardson(Partition{2}, Partition{1}, Partition{2, 1}), 1);
  EXPECT_EQ(littlewood_richardson(Partition{2}, Partition{2}, Partition{2, 2}), 1);
  EXPECT_EQ(littlewood_richardson(Partition{2}, Partition{2}, Partition{3, 1}), 1);
  EXPECT_EQ(littlewood_richardson(Partition{2}, Partition{2}, Partition{2, 1, 1}), 0);
  EXPECT_EQ(littlewood_richardson(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
  EXPECT_THROW(littlewood_richardson(Partition{1}, Partition{1}, Partition{3}), std::invalid_argument);
}

TEST(LittlewoodRichardson, Symmetries) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (const auto& nu : generate_partitions(a)) {
        for (const auto& xi : generate_partitions(b)) {
          for (const auto& lambda : generate_partitions(a + b)) {
            Integer c = littlewood_richardson(nu, xi, lambda);
            EXPECT_GE(c, 0);
            EXPECT_EQ(c, littlewood_richardson(xi, nu, lambda));
            EXPECT_EQ(c, littlewood_richardson(nu.conjugate(), xi.conjugate(), lambda.conjugate()));
            if (!contains(lambda, nu)) {
              EXPECT_EQ(c, 0);
            }
          }
        }
      }
    }
  }
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka(Partition{2, 1}, Partition{1, 1, 1}), 2);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      EXPECT_EQ(kostka(mu, mu), 1);
      EXPECT_EQ(kostka(Partition{n}, mu), 1);
    }
  }
}

TEST(Kostka, MatchesTableauEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& nu : generate_partitions(n)) {
      for (const auto& mu : generate_partitions(n)) EXPECT_EQ(kostka(nu, mu), kostka_by_strips(nu, mu));
    }
  }
}

TEST(Stembridge, Examples) {
  EXPECT_EQ(stembridge_g(Partition{}, Partition{}), 1);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(stembridge_g(Partition{n}, Partition{n}), 1);
  // P_(2,1) = S_(2,1)
  EXPECT_EQ(stembridge_g(Partition{2, 1}, Partition{2, 1}), 1);
  EXPECT_EQ(stembridge_g(Partition{2, 1}, Partition{3}), 0);
  EXPECT_EQ(stembridge_g(Partition{2, 1}, Partition{1, 1, 1}), 0);
  // P_(3) = S_(3) + S_(2,1) + S_(1,1,1)
  EXPECT_EQ(stembridge_g(Partition{3}, Partition{1, 1, 1}), 1);
}

TEST(Stembridge, GammaRowsCloseAndAreNonnegativeIntegers) {
  for (int n = 1; n <= 9; ++n) {
    auto strict = generate_partitions(n, PartitionFilter::strict);
    for (const auto& lambda : generate_partitions(n)) {
      auto row = stembridge_gamma_row(lambda);
      ASSERT_EQ(row.size(), strict.size());
      for (std::size_t j = 0; j < row.size(); ++j) {
        EXPECT_EQ(row[j].get_den(), 1);
        EXPECT_GE(row[j], 0);
        EXPECT_EQ(row[j], Rational(stembridge_g(strict[j], lambda)));
      }
    }
  }
}
