#include <gtest/gtest.h>

#include <set>

#include "compound/abacus.hpp"
#include "compound/golden.hpp"
#include "compound/schur.hpp"
#include "compound/coefficients.hpp"

using namespace compound;

namespace {

// Strips λ to its h-core by elementary moves: drop even parts, lower an odd
// part by 4 when the target is free, or drop the pair {3, 1}.
Partition core_by_moves(const Partition& lambda) {
  std::set<int> parts;
  for (int v : lambda.parts()) {
    if (v % 2) parts.insert(v);
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (int v : parts) {
      if (v > 4 && !parts.count(v - 4)) {
        parts.erase(v);
        parts.insert(v - 4);
        moved = true;
        break;
      }
    }
    if (!moved && parts.count(1) && parts.count(3)) {
      parts.erase(1);
      parts.erase(3);
      moved = true;
    }
  }
  return Partition::from_unsorted({parts.begin(), parts.end()});
}

}  // namespace

TEST(HAbacus, WorkedExample) {
  golden::AbacusFixture f;
  auto d = h_abacus_decompose(f.lambda);
  EXPECT_EQ(d.core, f.core);
  EXPECT_EQ(d.shifted0, f.shifted0);
  EXPECT_EQ(d.quotient1, f.quotient1);
  EXPECT_EQ(d.charge, f.charge);
  EXPECT_EQ(h_abacus_compose(f.core, f.shifted0, f.quotient1), f.lambda);
}

TEST(HAbacus, TrivialCases) {
  auto d = h_abacus_decompose(Partition{});
  EXPECT_TRUE(d.core.empty() && d.shifted0.empty() && d.quotient1.empty());
  EXPECT_EQ(d.charge, 0);
  EXPECT_EQ(h_abacus_compose(Partition{}, Partition{}, Partition{}), Partition{});
  EXPECT_EQ(h_abacus_compose(Partition{}, Partition{1}, Partition{}), Partition{2});
  EXPECT_THROW(h_abacus_decompose(Partition{2, 2}), std::invalid_argument);
  EXPECT_THROW(h_abacus_compose(Partition{5}, Partition{}, Partition{}), std::invalid_argument);
}

TEST(HAbacus, CoresByCharge) {
  EXPECT_EQ(h_core_of_charge(0), Partition{});
  EXPECT_EQ(h_core_of_charge(1), Partition{1});
  EXPECT_EQ(h_core_of_charge(2), (Partition{5, 1}));
  EXPECT_EQ(h_core_of_charge(-1), Partition{3});
  EXPECT_EQ(h_core_of_charge(-3), (Partition{11, 7, 3}));
  for (int m = -6; m <= 6; ++m) {
    EXPECT_EQ(charge_of_h_core(h_core_of_charge(m)), m);
    EXPECT_EQ(core_by_moves(h_core_of_charge(m)), h_core_of_charge(m)) << "cores admit no moves";
  }
}

TEST(HAbacus, CoreMatchesMoveSimulation) {
  for (int n = 0; n <= 24; ++n) {
    for (const auto& lambda : generate_partitions(n, PartitionFilter::strict)) {
      EXPECT_EQ(h_abacus_decompose(lambda).core, core_by_moves(lambda)) << lambda.to_string();
    }
  }
}

TEST(HAbacus, RoundTripWeightAndInjectivity) {
  for (int n = 0; n <= 22; ++n) {
    std::set<std::tuple<Partition, Partition, Partition>> seen;
    for (const auto& lambda : generate_partitions(n, PartitionFilter::strict)) {
      auto d = h_abacus_decompose(lambda);
      EXPECT_TRUE(d.shifted0.is_strict());
      EXPECT_EQ(n, d.core.weight() + 2 * d.shifted0.weight() + 4 * d.quotient1.weight());
      EXPECT_EQ(h_abacus_compose(d), lambda);
      EXPECT_TRUE(seen.insert({d.core, d.shifted0, d.quotient1}).second);
    }
  }
}

TEST(HAbacus, ComposeIsSurjectiveOntoSmallTriples) {
  // every (core, strict s0, q1) of bounded size arises from a strict partition
  for (int m = -2; m <= 2; ++m) {
    for (int a = 0; a <= 5; ++a) {
      for (int b = 0; b <= 3; ++b) {
        for (const auto& s0 : generate_partitions(a, PartitionFilter::strict)) {
          for (const auto& q1 : generate_partitions(b)) {
            auto lambda = h_abacus_compose(h_core_of_charge(m), s0, q1);
            EXPECT_TRUE(lambda.is_strict());
            auto d = h_abacus_decompose(lambda);
            EXPECT_EQ(d.charge, m);
            EXPECT_EQ(d.shifted0, s0);
            EXPECT_EQ(d.quotient1, q1);
          }
        }
      }
    }
  }
}

TEST(TwoQuotient, EmptyAndOneBox) {
  auto e = two_core_quotient(Partition{});
  EXPECT_TRUE(e.core2.empty() && e.q0.empty() && e.q1.empty());
  EXPECT_EQ(e.sign, 1);
  auto two = two_core_quotient(Partition{2});
  auto one_one = two_core_quotient(Partition{1, 1});
  EXPECT_TRUE(two.core2.empty() && one_one.core2.empty());
  EXPECT_EQ(two.q0.weight() + two.q1.weight(), 1);
  EXPECT_EQ(one_one.q0.weight() + one_one.q1.weight(), 1);
  EXPECT_NE(two.q0, one_one.q0);
  // S_(1)(y²) = p_2 = S_(2) - S_(1,1)
  EXPECT_EQ(two.sign, 1);
  EXPECT_EQ(one_one.sign, -1);
}

TEST(TwoQuotient, WeightIdentityAndStaircaseCores) {
  for (int n = 0; n <= 14; ++n) {
    for (const auto& xi : generate_partitions(n)) {
      auto q = two_core_quotient(xi);
      EXPECT_EQ(n, q.core2.weight() + 2 * (q.q0.weight() + q.q1.weight()));
      for (int i = 0; i < q.core2.length(); ++i) EXPECT_EQ(q.core2[i], q.core2.length() - i);
    }
  }
}

TEST(TwoQuotient, IndependentOfEvenPadding) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& xi : generate_partitions(n)) {
      auto base = two_core_quotient(xi);
      int start = xi.length() + xi.length() % 2;
      for (int pad = start; pad <= start + 6; pad += 2) EXPECT_EQ(two_core_quotient(xi, pad), base);
    }
  }
  EXPECT_THROW(two_core_quotient(Partition{2, 1}, 3), std::invalid_argument);
  EXPECT_THROW(two_core_quotient(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(TwoQuotient, SignsReproducePlethysticSquare) {
  for (int m = 0; m <= 4; ++m) {
    for (const auto& mu : generate_partitions(m)) {
      SymFunc rhs;
      for (const auto& xi : generate_partitions(2 * m)) {
        auto q = two_core_quotient(xi);
        if (!q.core2.empty()) continue;
        rhs += schur(xi) * Rational(q.sign * littlewood_richardson(q.q0, q.q1, mu));
      }
      EXPECT_EQ(rhs, sub_square(schur(mu))) << mu.to_string();
    }
  }
}
