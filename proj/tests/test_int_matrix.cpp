#include <gtest/gtest.h>

#include <algorithm>

#include "compound/int_matrix.hpp"

using namespace compound;

namespace {

IntRows rows(std::initializer_list<std::initializer_list<long>> init) {
  IntRows m;
  for (auto r : init) {
    std::vector<Integer> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(row);
  }
  return m;
}

// Permutation-expansion determinant, for small matrices.
Integer leibniz(const IntRows& m) {
  std::vector<int> perm(m.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  Integer total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    Integer term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Small deterministic matrices: entries from a linear congruential sequence.
IntRows pseudo_random(std::size_t k, unsigned seed) {
  IntRows m(k, std::vector<Integer>(k));
  for (auto& row : m) {
    for (auto& e : row) {
      seed = seed * 1103515245u + 12345u;
      e = static_cast<long>((seed >> 16) % 9) - 4;
    }
  }
  return m;
}

}  // namespace

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(IntRows{}), 1);
  EXPECT_EQ(determinant(identity_rows(4)), 1);
  EXPECT_EQ(determinant(rows({{3, 1}, {1, 1}})), 2);
  EXPECT_EQ(determinant(rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(rows({{1, 2}, {2, 4}})), 0);
  EXPECT_THROW(determinant(rows({{1, 2}})), std::invalid_argument);
}

TEST(Determinant, AgreesWithLeibniz) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (unsigned seed = 0; seed < 20; ++seed) {
      auto m = pseudo_random(k, seed + 100 * static_cast<unsigned>(k));
      EXPECT_EQ(determinant(m), leibniz(m));
    }
  }
}

TEST(SolveExact, RecoversRationalSolutions) {
  auto a = rows({{2, 1}, {1, 3}});
  auto b = rows({{1, 0}, {0, 1}});
  auto x = solve_exact(a, b);
  EXPECT_EQ(x[0][0], Rational(3, 5));
  EXPECT_EQ(x[0][1], Rational(-1, 5));
  EXPECT_EQ(x[1][0], Rational(-1, 5));
  EXPECT_EQ(x[1][1], Rational(2, 5));
  EXPECT_THROW(solve_exact(rows({{1, 2}, {2, 4}}), rows({{1}, {1}})), InvariantViolation);
}

TEST(SolveExact, ResidualIsZero) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (unsigned seed = 0; seed < 10; ++seed) {
      auto a = pseudo_random(k, seed * 7 + 1);
      if (determinant(a) == 0) continue;
      auto b = pseudo_random(k, seed * 13 + 5);
      auto x = solve_exact(a, b);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
          Rational s = 0;
          for (std::size_t j = 0; j < k; ++j) s += Rational(a[i][j]) * x[j][c];
          EXPECT_EQ(s, Rational(b[i][c]));
        }
      }
    }
  }
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(identity_rows(3)), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(rows({{3, 1}, {1, 1}})), (std::vector<Integer>{1, 2}));
  EXPECT_EQ(smith_normal_form(rows({{4, 2}, {2, 3}})), (std::vector<Integer>{1, 8}));
  EXPECT_EQ(smith_normal_form(rows({{2, 0}, {0, 3}})), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(rows({{2, 4}, {4, 8}})), (std::vector<Integer>{2, 0}));
}

TEST(SmithNormalForm, DivisibilityChainAndDeterminant) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (unsigned seed = 0; seed < 20; ++seed) {
      auto m = pseudo_random(k, seed * 31 + static_cast<unsigned>(k));
      auto d = smith_normal_form(m);
      ASSERT_EQ(d.size(), k);
      Integer prod = 1;
      for (std::size_t i = 0; i < k; ++i) {
        prod *= d[i];
        EXPECT_GE(d[i], 0);
        if (i + 1 < k && d[i] != 0) {
          EXPECT_EQ(d[i + 1] % d[i], 0);
        }
      }
      EXPECT_EQ(prod, abs(determinant(m)));
      // first divisor is the gcd of all entries
      Integer g = 0;
      for (const auto& row : m)
        for (const auto& e : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
      EXPECT_EQ(d[0], g);
    }
  }
}

TEST(LabeledMatrix, TransposeMultiplySubmatrix) {
  LabeledIntMatrix m;
  m.n = 2;
  m.row_labels = {Partition{2}, Partition{1, 1}};
  m.col_labels = {PartitionPair{{2}, {}}, PartitionPair{{}, {1}}};
  m.entries = rows({{1, 2}, {3, 4}});
  m.check_shape();
  auto t = transpose(m);
  EXPECT_EQ(t.row_labels, m.col_labels);
  EXPECT_EQ(t.entries, rows({{1, 3}, {2, 4}}));
  auto p = multiply(t, m);
  EXPECT_EQ(p.entries, rows({{10, 14}, {14, 20}}));
  auto s = submatrix(m, {1}, {0});
  EXPECT_EQ(s.entries, rows({{3}}));
  EXPECT_EQ(label_to_string(s.row_labels[0]), "(1,1)");
  EXPECT_THROW(smith_normal_form(submatrix(m, {0, 1}, {0})), std::invalid_argument);
  EXPECT_THROW(multiply(m, submatrix(m, {0}, {0, 1})), std::invalid_argument);
}
