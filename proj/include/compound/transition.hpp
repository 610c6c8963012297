#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "compound/abacus.hpp"
#include "compound/basis.hpp"
#include "compound/bijections.hpp"
#include "compound/coefficients.hpp"
#include "compound/int_matrix.hpp"
#include "compound/schur.hpp"

namespace compound {

/// Label layout of the transition matrices.
///  - canonical: rows in decreasing lexicographic order; column pairs (μ^r, μ^d)
///    by n0 = |μ^r| descending, then μ^r and μ^d decreasing lexicographically.
///  - paper: column pairs with the principal block (n0 = n) first, then the
///    remaining blocks by n0 ascending; rows are φ^{-1} of the columns. This
///    reproduces the reference layouts of A_3 and A_4 in golden.hpp.
enum class LabelOrder { canonical, paper };

inline std::vector<PartitionPair> column_pairs(int n, LabelOrder order = LabelOrder::canonical) {
  std::vector<PartitionPair> pairs;
  for (const auto& mu : generate_partitions(n)) pairs.push_back(phi(mu));
  auto key = [&](const PartitionPair& p) {
    const int n0 = p.first.weight();
    if (order == LabelOrder::canonical) return std::make_tuple(0, -n0);
    return std::make_tuple(n0 == n ? 0 : 1, n0);
  };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const PartitionPair& a, const PartitionPair& b) {
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  return pairs;
}

inline std::vector<Partition> row_partitions(int n, LabelOrder order = LabelOrder::canonical) {
  if (order == LabelOrder::canonical) return generate_partitions(n);
  std::vector<Partition> rows;
  for (const auto& p : column_pairs(n, order)) rows.push_back(phi_inverse(p));
  return rows;
}

namespace detail {

inline void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

inline LabeledIntMatrix labelled_shell(int n, const std::vector<Partition>& rows,
                                       const std::vector<PartitionPair>& cols) {
  LabeledIntMatrix m;
  m.n = n;
  m.row_labels.assign(rows.begin(), rows.end());
  m.col_labels.assign(cols.begin(), cols.end());
  m.entries.assign(rows.size(), std::vector<Integer>(cols.size(), 0));
  return m;
}

// z_ρ·[p_ρ]f for ρ ⊢ n; integral for every function fed in here.
inline std::vector<Integer> scaled_coordinates(const SymFunc& f, const std::vector<Partition>& keys,
                                               const char* what) {
  std::vector<Integer> v;
  v.reserve(keys.size());
  for (const auto& rho : keys) v.push_back(to_integer(f.coefficient(rho) * Rational(z_factor(rho)), what));
  return v;
}

}  // namespace detail

/// A_n, defined by S_λ(x,x) = Σ_μ a_{λμ} W_μ(x), found by solving the linear
/// system in z-scaled power-sum coordinates. Throws InvariantViolation if any
/// entry is non-integral.
inline LabeledIntMatrix build_A(int n, LabelOrder order = LabelOrder::canonical) {
  detail::require_positive(n, "build_A");
  const auto rows = row_partitions(n, order);
  const auto cols = column_pairs(n, order);
  const auto coords = generate_partitions(n);

  IntRows w(coords.size(), std::vector<Integer>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto v = detail::scaled_coordinates(W_basis(phi_inverse(cols[j])), coords, "build_A");
    for (std::size_t i = 0; i < coords.size(); ++i) w[i][j] = std::move(v[i]);
  }
  IntRows s(coords.size(), std::vector<Integer>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    auto v = detail::scaled_coordinates(sub_double(schur(rows[j])), coords, "build_A");
    for (std::size_t i = 0; i < coords.size(); ++i) s[i][j] = std::move(v[i]);
  }
  auto x = solve_exact(w, s);  // x[μ][λ] = a_{λμ}

  auto a = detail::labelled_shell(n, rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!is_integral(x[j][i])) {
        throw InvariantViolation("build_A: a_{" + rows[i].to_string() + "," + cols[j].to_string() +
                                 "} = " + x[j][i].get_str() + " is not an integer");
      }
      a.entries[i][j] = x[j][i].get_num();
    }
  }
  return a;
}

/// A_n through the duality a_{λμ} = ⟨V_μ, S_λ⟩.
inline LabeledIntMatrix build_A_by_duality(int n, LabelOrder order = LabelOrder::canonical) {
  detail::require_positive(n, "build_A_by_duality");
  const auto rows = row_partitions(n, order);
  const auto cols = column_pairs(n, order);
  auto a = detail::labelled_shell(n, rows, cols);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const SymFunc v = V_basis(phi_inverse(cols[j]));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      a.entries[i][j] = to_integer(inner(v, schur(rows[i])), "build_A_by_duality");
    }
  }
  return a;
}

/// A_n assembled as a_{λμ} = Σ_{ν,ξ} δ(ξ) g_{μ^r ν} c^λ_{νξ} c^{μ^d}_{ξ[0],ξ[1]}
/// from Stembridge coefficients, Littlewood–Richardson coefficients and
/// 2-quotients.
inline LabeledIntMatrix build_A_combinatorial(int n, LabelOrder order = LabelOrder::canonical) {
  detail::require_positive(n, "build_A_combinatorial");
  const auto rows = row_partitions(n, order);
  const auto cols = column_pairs(n, order);
  auto a = detail::labelled_shell(n, rows, cols);

  // per block (n0, n1): a_{λ,(r,d)} = Σ_{ν ⊢ n0} Σ_{ξ ⊢ 2 n1} g_{rν} t_{dξ} c^λ_{νξ}
  std::map<std::pair<int, int>, std::vector<std::size_t>> block_cols;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    block_cols[{cols[j].first.weight(), cols[j].second.weight()}].push_back(j);
  }
  for (const auto& [block, col_idx] : block_cols) {
    const auto [n0, n1] = block;
    const auto nus = generate_partitions(n0);
    const auto xis = generate_partitions(2 * n1);
    std::vector<TwoQuotient> quotients;
    for (const auto& xi : xis) quotients.push_back(two_core_quotient(xi));

    // c^λ_{νξ} for every row λ
    std::vector<std::vector<std::vector<Integer>>> lr(nus.size(),
                                                       std::vector<std::vector<Integer>>(xis.size()));
    for (std::size_t u = 0; u < nus.size(); ++u) {
      for (std::size_t x = 0; x < xis.size(); ++x) {
        if (!quotients[x].core2.empty()) continue;
        const SymFunc prod = schur(nus[u]) * schur(xis[x]);
        for (const auto& lambda : rows) lr[u][x].push_back(to_integer(inner(prod, schur(lambda)), "lr"));
      }
    }
    for (std::size_t j : col_idx) {
      const auto& [r, d] = cols[j];
      std::vector<Integer> g;
      for (const auto& nu : nus) g.push_back(stembridge_g(r, nu));
      std::vector<Integer> t;
      for (std::size_t x = 0; x < xis.size(); ++x) {
        const auto& q = quotients[x];
        if (!q.core2.empty()) {
          t.emplace_back(0);
          continue;
        }
        Integer c = littlewood_richardson(q.q0, q.q1, d);
        t.push_back(q.sign * c);
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Integer sum = 0;
        for (std::size_t u = 0; u < nus.size(); ++u) {
          if (g[u] == 0) continue;
          for (std::size_t x = 0; x < xis.size(); ++x) {
            if (t[x] == 0) continue;
            sum += g[u] * t[x] * lr[u][x][i];
          }
        }
        a.entries[i][j] = sum;
      }
    }
  }
  return a;
}

/// Γ_n: the |P_n| × |SP_n| matrix of coefficients γ_{λμ} in the Q-expansion of
/// the 2-reduced Schur functions. Columns are labelled (μ, ∅) as in A_n.
inline LabeledIntMatrix build_Gamma(int n, LabelOrder order = LabelOrder::canonical) {
  detail::require_positive(n, "build_Gamma");
  const auto rows = row_partitions(n, order);
  const auto strict = generate_partitions(n, PartitionFilter::strict);
  std::vector<PartitionPair> cols;
  for (const auto& p : column_pairs(n, order)) {
    if (p.second.empty()) cols.push_back(p);
  }
  auto m = detail::labelled_shell(n, rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto gamma = stembridge_gamma_row(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto pos = std::find(strict.begin(), strict.end(), cols[j].first) - strict.begin();
      m.entries[i][j] = to_integer(gamma[static_cast<std::size_t>(pos)], "build_Gamma");
    }
  }
  return m;
}

/// G_n = ᵗΓ_n Γ_n.
inline LabeledIntMatrix gram_G(int n, LabelOrder order = LabelOrder::canonical) {
  auto gamma = build_Gamma(n, order);
  return multiply(transpose(gamma), gamma);
}

/// ᵗA_n A_n, labelled by pairs on both sides.
inline LabeledIntMatrix cartan_like(int n, LabelOrder order = LabelOrder::canonical) {
  auto a = build_A(n, order);
  return multiply(transpose(a), a);
}

inline std::pair<int, int> block_key(const Label& label) {
  const auto& p = std::get<PartitionPair>(label);
  return {p.first.weight(), p.second.weight()};
}

struct OffBlockEntry {
  Label row;
  Label col;
  Integer value;
};

/// Nonzero entries of a pair-labelled square matrix whose row and column lie
/// in different (n0, n1) classes.
inline std::vector<OffBlockEntry> off_block_entries(const LabeledIntMatrix& m) {
  std::vector<OffBlockEntry> bad;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.entries[i][j] != 0 && block_key(m.row_labels[i]) != block_key(m.col_labels[j])) {
        bad.push_back({m.row_labels[i], m.col_labels[j], m.entries[i][j]});
      }
    }
  }
  return bad;
}

/// Splits a pair-labelled square matrix into its diagonal (n0, n1) blocks.
/// Throws InvariantViolation naming the first nonzero off-block entry.
inline std::map<std::pair<int, int>, LabeledIntMatrix> split_blocks(const LabeledIntMatrix& m) {
  if (auto bad = off_block_entries(m); !bad.empty()) {
    throw InvariantViolation("off-block entry at (" + label_to_string(bad.front().row) + ", " +
                             label_to_string(bad.front().col) + ") = " + bad.front().value.get_str());
  }
  std::map<std::pair<int, int>, std::vector<std::size_t>> idx;
  for (std::size_t i = 0; i < m.rows(); ++i) idx[block_key(m.row_labels[i])].push_back(i);
  std::map<std::pair<int, int>, LabeledIntMatrix> out;
  for (const auto& [key, members] : idx) out.emplace(key, submatrix(m, members, members));
  return out;
}

/// Diagonal blocks B_{n0,n1} of ᵗA_n A_n.
inline std::map<std::pair<int, int>, LabeledIntMatrix> blocks(int n, LabelOrder order = LabelOrder::canonical) {
  return split_blocks(cartan_like(n, order));
}

/// Both expressions Σ ℓ(λ^e) and Σ (ℓ(\tilde{λ^r}) - ℓ(λ^r)) over P_n.
inline std::pair<long, long> k_value_formulas(int n) {
  long via_even = 0, via_glaisher = 0;
  for (const auto& lambda : generate_partitions(n)) {
    via_even += psi(lambda).second.length();
    const auto r = phi(lambda).first;
    via_glaisher += glaisher(r).length() - r.length();
  }
  return {via_even, via_glaisher};
}

/// k_n, the exponent in |det A_n| = 2^{k_n}; throws if the two formulas disagree.
inline long k_value(int n) {
  detail::require_positive(n, "k_value");
  auto [a, b] = k_value_formulas(n);
  if (a != b) {
    throw InvariantViolation("k_value: formulas disagree at n=" + std::to_string(n) + ": " +
                             std::to_string(a) + " vs " + std::to_string(b));
  }
  return a;
}

}  // namespace compound
