#pragma once

// Transcribed worked examples. Versioned: bump kGoldenVersion on any edit.

#include <vector>

#include "compound/int_matrix.hpp"
#include "compound/partition.hpp"

namespace compound::golden {

inline constexpr int kGoldenVersion = 1;

struct MatrixFixture {
  int n;
  const char* name;
  std::vector<Label> rows;
  std::vector<Label> cols;
  std::vector<std::vector<long>> entries;

  LabeledIntMatrix to_matrix() const {
    LabeledIntMatrix m;
    m.n = n;
    m.row_labels = rows;
    m.col_labels = cols;
    for (const auto& r : entries) {
      std::vector<Integer> row;
      for (long v : r) row.emplace_back(v);
      m.entries.push_back(std::move(row));
    }
    return m;
  }
};

inline PartitionPair pp(Partition a, Partition b) { return {std::move(a), std::move(b)}; }

inline std::vector<Label> a3_cols() { return {pp({3}, {}), pp({2, 1}, {}), pp({1}, {1})}; }
inline std::vector<Label> a4_cols() {
  return {pp({4}, {}), pp({3, 1}, {}), pp({}, {2}), pp({}, {1, 1}), pp({2}, {1})};
}

/// A_1, the seed case S_(1)(x,x) = 2p_1 = W_(1).
inline MatrixFixture A1() { return {1, "A_1", {Partition{1}}, {pp({1}, {})}, {{1}}}; }

/// Reference A_3.
inline MatrixFixture A3() {
  return {3, "A_3", {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}, a3_cols(),
          {{1, 0, 1}, {1, 1, 0}, {1, 0, -1}}};
}

/// Reference A_4.
inline MatrixFixture A4() {
  return {4,
          "A_4",
          {Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{1, 1, 1, 1}, Partition{2, 1, 1}},
          a4_cols(),
          {{1, 0, 1, 0, 1}, {1, 1, -1, 0, 1}, {0, 1, 1, 1, 0}, {1, 0, 0, 1, -1}, {1, 1, 0, -1, -1}}};
}

/// Reference ᵗA_3 A_3.
inline MatrixFixture AtA3() { return {3, "tA_3 A_3", a3_cols(), a3_cols(), {{3, 1, 0}, {1, 1, 0}, {0, 0, 2}}}; }

/// Reference ᵗA_4 A_4.
inline MatrixFixture AtA4() {
  return {4,
          "tA_4 A_4",
          a4_cols(),
          a4_cols(),
          {{4, 2, 0, 0, 0}, {2, 3, 0, 0, 0}, {0, 0, 3, 1, 0}, {0, 0, 1, 3, 0}, {0, 0, 0, 0, 4}}};
}

/// Reference values k_1 .. k_8.
inline const std::vector<long>& k_table() {
  static const std::vector<long> k{0, 1, 1, 4, 5, 11, 15, 28};
  return k;
}

/// The bijection examples on λ = (5^3 4^4 2^7 1).
struct BijectionFixture {
  Partition lambda{5, 5, 5, 4, 4, 4, 4, 2, 2, 2, 2, 2, 2, 2, 1};
  Partition r{5, 2, 1};
  Partition d{5, 4, 4, 2, 2, 2};
  Partition o{5, 5, 5, 1};
  Partition e{2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1};
  Partition glaisher_in{8, 6, 4, 3, 1};
  Partition glaisher_out{3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
};

/// The h-abacus example λ = (11,10,5,3,2) ↦ ((3); (5,1), (3,1)).
struct AbacusFixture {
  Partition lambda{11, 10, 5, 3, 2};
  Partition core{3};
  Partition shifted0{5, 1};
  Partition quotient1{3, 1};
  int charge = -1;  // runner-2 beads {5}, runner-3 beads {3, 11}
};

}  // namespace compound::golden
