#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "compound/memo.hpp"
#include "compound/partition.hpp"
#include "compound/symfunc.hpp"

namespace compound {

namespace detail {

// Σ_{ρ ⊢ r, filtered} weight(ρ)/z_ρ · p_ρ
template <class Weight>
SymFunc power_sum_generating_coefficient(int r, PartitionFilter filter, Weight weight) {
  SymFunc out;
  for (const auto& rho : generate_partitions(r, filter)) {
    out.add_term(rho, weight(rho) / Rational(z_factor(rho)));
  }
  return out;
}

inline GuardedMemo<std::pair<char, int>, SymFunc>& generator_memo() {
  static GuardedMemo<std::pair<char, int>, SymFunc> memo;
  return memo;
}

}  // namespace detail

/// h_r = Σ_{ρ ⊢ r} z_ρ^{-1} p_ρ.
inline SymFunc complete_h(int r) {
  if (r < 0) return {};
  return detail::generator_memo().get_or_compute({'h', r}, [r] {
    return detail::power_sum_generating_coefficient(r, PartitionFilter::all,
                                                    [](const Partition&) { return Rational(1); });
  });
}

/// e_r = Σ_{ρ ⊢ r} (-1)^{r-ℓ(ρ)} z_ρ^{-1} p_ρ.
inline SymFunc elementary_e(int r) {
  if (r < 0) return {};
  return detail::generator_memo().get_or_compute({'e', r}, [r] {
    return detail::power_sum_generating_coefficient(r, PartitionFilter::all, [r](const Partition& rho) {
      return Rational((r - rho.length()) % 2 ? -1 : 1);
    });
  });
}

/// q_r: coefficient of u^r in ∏(1+x_i u)/(1-x_i u) = exp(2 Σ_{k odd} p_k u^k / k),
/// i.e. Σ_{ρ ⊢ r odd} 2^{ℓ(ρ)} z_ρ^{-1} p_ρ.
inline SymFunc q_gen(int r) {
  if (r < 0) return {};
  return detail::generator_memo().get_or_compute({'q', r}, [r] {
    return detail::power_sum_generating_coefficient(
        r, PartitionFilter::odd, [](const Partition& rho) { return Rational(pow2(rho.length())); });
  });
}

/// Product h_{μ1} h_{μ2} ...
inline SymFunc complete_h_product(const Partition& mu) {
  SymFunc out = SymFunc::one();
  for (int p : mu.parts()) out = out * complete_h(p);
  return out;
}

// ---------------------------------------------------------------------------
// Schur functions (Jacobi–Trudi) and symmetric-group characters (Murnaghan–Nakayama)
// ---------------------------------------------------------------------------

namespace detail {

// det(gen(a_i - i + j)) by Laplace expansion along rows, memoized over the set
// of unused columns.
template <class Gen>
SymFunc jacobi_trudi(const std::vector<int>& a, Gen gen) {
  const int len = static_cast<int>(a.size());
  if (len == 0) return SymFunc::one();
  if (len > 20) throw std::invalid_argument("jacobi_trudi: partition too long");
  std::vector<SymFunc> table(std::size_t{1} << len);
  std::vector<bool> done(table.size(), false);
  // minor(mask): determinant of rows [len - popcount(mask), len) on columns in mask
  auto minor = [&](auto&& self, std::uint32_t mask) -> const SymFunc& {
    if (done[mask]) return table[mask];
    SymFunc acc;
    if (mask == 0) {
      acc = SymFunc::one();
    } else {
      const int row = len - __builtin_popcount(mask);
      int sign = 1;
      for (int col = 0; col < len; ++col) {
        if (!(mask & (1u << col))) continue;
        SymFunc entry = gen(a[static_cast<std::size_t>(row)] - row + col);
        if (!entry.is_zero()) {
          SymFunc term = entry * self(self, mask & ~(1u << col));
          if (sign > 0) acc += term;
          else acc -= term;
        }
        sign = -sign;
      }
    }
    done[mask] = true;
    table[mask] = std::move(acc);
    return table[mask];
  };
  return minor(minor, (1u << len) - 1);
}

inline GuardedMemo<Partition, SymFunc>& schur_memo() {
  static GuardedMemo<Partition, SymFunc> memo;
  return memo;
}

inline GuardedMemo<std::pair<Partition, Partition>, Integer>& character_memo() {
  static GuardedMemo<std::pair<Partition, Partition>, Integer> memo;
  return memo;
}

inline Integer mn_character(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  return character_memo().get_or_compute({lambda, rho}, [&]() -> Integer {
    const int r = rho[0];
    Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const int count = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + count - 1 - i;
    Integer total = 0;
    for (int i = 0; i < count; ++i) {
      const int b = beta[static_cast<std::size_t>(i)];
      const int target = b - r;
      if (target < 0) continue;
      // beads strictly between target and b give the leg length
      int between = 0;
      bool blocked = false;
      for (int x : beta) {
        if (x == target) blocked = true;
        if (x > target && x < b) ++between;
      }
      if (blocked) continue;
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts;
      for (int k = 0; k < count; ++k) parts.push_back(moved[static_cast<std::size_t>(k)] - (count - 1 - k));
      Integer sub = mn_character(Partition::from_unsorted(std::move(parts)), rest);
      if (between % 2) total -= sub;
      else total += sub;
    }
    return total;
  });
}

}  // namespace detail

/// χ^λ_ρ via the Murnaghan–Nakayama rule.
inline Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight()) throw std::invalid_argument("character: weights differ");
  return detail::mn_character(lambda, rho);
}

/// S_λ in p-coordinates via Jacobi–Trudi: det(h_{λ_i-i+j}), or the dual form
/// det(e_{λ'_i-i+j}) when the conjugate is shorter.
inline SymFunc schur(const Partition& lambda) {
  return detail::schur_memo().get_or_compute(lambda, [&] {
    const Partition conj = lambda.conjugate();
    if (lambda.length() <= conj.length()) return detail::jacobi_trudi(lambda.parts(), complete_h);
    return detail::jacobi_trudi(conj.parts(), elementary_e);
  });
}

/// S_λ assembled from Murnaghan–Nakayama characters: Σ_ρ z_ρ^{-1} χ^λ_ρ p_ρ.
inline SymFunc schur_from_characters(const Partition& lambda) {
  SymFunc out;
  for (const auto& rho : generate_partitions(lambda.weight())) {
    out.add_term(rho, Rational(character(lambda, rho)) / Rational(z_factor(rho)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schur Q- and P-functions
// ---------------------------------------------------------------------------

namespace detail {

inline GuardedMemo<Partition, SymFunc>& schur_q_memo() {
  static GuardedMemo<Partition, SymFunc> memo;
  return memo;
}

// Q_{(a,b)} = q_a q_b + 2 Σ_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}, with Q_{(a,0)} = q_a.
inline SymFunc schur_q_two_row(int a, int b) {
  SymFunc out = q_gen(a) * q_gen(b);
  for (int i = 1; i <= b; ++i) {
    SymFunc term = q_gen(a + i) * q_gen(b - i) * Rational(2);
    if (i % 2) out -= term;
    else out += term;
  }
  return out;
}

}  // namespace detail

/// Schur's Q-function, by Pfaffian expansion along the first part over the
/// pairs (λ_1, λ_j), padding to even length with a zero part.
inline SymFunc schur_Q(const Partition& lambda) {
  if (!lambda.is_strict()) throw std::invalid_argument("schur_Q: partition must be strict");
  return detail::schur_q_memo().get_or_compute(lambda, [&] {
    const auto& parts = lambda.parts();
    if (parts.empty()) return SymFunc::one();
    if (parts.size() == 1) return q_gen(parts[0]);
    if (parts.size() == 2) return detail::schur_q_two_row(parts[0], parts[1]);
    std::vector<int> padded = parts;
    if (padded.size() % 2) padded.push_back(0);
    SymFunc out;
    for (std::size_t j = 1; j < padded.size(); ++j) {
      std::vector<int> rest;
      for (std::size_t k = 1; k < padded.size(); ++k) {
        if (k != j && padded[k] > 0) rest.push_back(padded[k]);
      }
      SymFunc term = detail::schur_q_two_row(padded[0], padded[j]) * schur_Q(Partition(std::move(rest)));
      // (-1)^j with 1-based column index j+1
      if (j % 2) out += term;
      else out -= term;
    }
    return out;
  });
}

/// P_λ = 2^{-ℓ(λ)} Q_λ.
inline SymFunc schur_P(const Partition& lambda) {
  return schur_Q(lambda) * Rational(Integer(1), pow2(lambda.length()));
}

}  // namespace compound
