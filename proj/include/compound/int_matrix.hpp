#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "compound/numeric.hpp"
#include "compound/partition.hpp"

namespace compound {

/// A matrix row/column label: a partition λ or a pair (μ^r, μ^d).
using Label = std::variant<Partition, PartitionPair>;

inline std::string label_to_string(const Label& label) {
  return std::visit([](const auto& l) { return l.to_string(); }, label);
}

using IntRows = std::vector<std::vector<Integer>>;

/// Exact integer matrix with labelled rows and columns.
struct LabeledIntMatrix {
  int n = 0;  // weight the matrix belongs to
  std::vector<Label> row_labels;
  std::vector<Label> col_labels;
  IntRows entries;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return col_labels.size(); }
  const Integer& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
  Integer& at(std::size_t i, std::size_t j) { return entries.at(i).at(j); }

  void check_shape() const {
    if (entries.size() != row_labels.size()) throw std::logic_error("row label count mismatch");
    for (const auto& row : entries) {
      if (row.size() != col_labels.size()) throw std::logic_error("column label count mismatch");
    }
  }

  friend bool operator==(const LabeledIntMatrix&, const LabeledIntMatrix&) = default;
};

inline IntRows identity_rows(std::size_t k) {
  IntRows m(k, std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

inline LabeledIntMatrix transpose(const LabeledIntMatrix& m) {
  LabeledIntMatrix t;
  t.n = m.n;
  t.row_labels = m.col_labels;
  t.col_labels = m.row_labels;
  t.entries.assign(m.cols(), std::vector<Integer>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.entries[j][i] = m.entries[i][j];
  }
  return t;
}

inline LabeledIntMatrix multiply(const LabeledIntMatrix& a, const LabeledIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  LabeledIntMatrix c;
  c.n = a.n;
  c.row_labels = a.row_labels;
  c.col_labels = b.col_labels;
  c.entries.assign(a.rows(), std::vector<Integer>(b.cols(), 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.entries[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  }
  return c;
}

/// Rows `row_idx` and columns `col_idx` of m, labels carried along.
inline LabeledIntMatrix submatrix(const LabeledIntMatrix& m, const std::vector<std::size_t>& row_idx,
                                  const std::vector<std::size_t>& col_idx) {
  LabeledIntMatrix s;
  s.n = m.n;
  for (auto i : row_idx) s.row_labels.push_back(m.row_labels.at(i));
  for (auto j : col_idx) s.col_labels.push_back(m.col_labels.at(j));
  for (auto i : row_idx) {
    std::vector<Integer> row;
    for (auto j : col_idx) row.push_back(m.at(i, j));
    s.entries.push_back(std::move(row));
  }
  return s;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntRows m) {
  const std::size_t k = m.size();
  for (const auto& row : m) {
    if (row.size() != k) throw std::invalid_argument("determinant: matrix not square");
  }
  if (k == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t pivot = p;
    while (pivot < k && m[pivot][p] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != p) {
      std::swap(m[pivot], m[p]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        Integer v = m[p][p] * m[i][j] - m[i][p] * m[p][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][p] = 0;
    }
    prev = m[p][p];
  }
  return sign > 0 ? Integer(m[k - 1][k - 1]) : Integer(-m[k - 1][k - 1]);
}

inline Integer determinant(const LabeledIntMatrix& m) { return determinant(m.entries); }

/// Solves A·X = B exactly (A square, B with any number of columns) using
/// Bareiss forward elimination and rational back-substitution. Throws
/// InvariantViolation if A is singular.
inline std::vector<std::vector<Rational>> solve_exact(const IntRows& a, const IntRows& b) {
  const std::size_t k = a.size();
  if (b.size() != k) throw std::invalid_argument("solve_exact: row counts differ");
  const std::size_t rhs = k ? b[0].size() : 0;
  IntRows m(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i].size() != k || b[i].size() != rhs) throw std::invalid_argument("solve_exact: ragged input");
    m[i] = a[i];
    m[i].insert(m[i].end(), b[i].begin(), b[i].end());
  }
  const std::size_t width = k + rhs;
  Integer prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t pivot = p;
    while (pivot < k && m[pivot][p] == 0) ++pivot;
    if (pivot == k) throw InvariantViolation("solve_exact: singular system");
    std::swap(m[pivot], m[p]);
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < width; ++j) {
        Integer v = m[p][p] * m[i][j] - m[i][p] * m[p][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][p] = 0;
    }
    prev = m[p][p];
  }
  std::vector<std::vector<Rational>> x(k, std::vector<Rational>(rhs));
  for (std::size_t c = 0; c < rhs; ++c) {
    for (std::size_t ii = k; ii-- > 0;) {
      Rational acc(m[ii][k + c]);
      for (std::size_t j = ii + 1; j < k; ++j) acc -= Rational(m[ii][j]) * x[j][c];
      acc /= Rational(m[ii][ii]);
      x[ii][c] = acc;
    }
  }
  return x;
}

/// Diagonal d_1 | d_2 | ... of the Smith normal form (all d_i >= 0), by
/// repeated row/column reduction around a minimal-magnitude pivot.
inline std::vector<Integer> smith_normal_form(IntRows m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> d;
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        d.resize(diag, 0);
        return d;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and retry
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    d.push_back(abs(m[t][t]));
  }
  return d;
}

inline std::vector<Integer> smith_normal_form(const LabeledIntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("smith_normal_form: matrix not square");
  return smith_normal_form(m.entries);
}

}  // namespace compound
