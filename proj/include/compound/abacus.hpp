#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "compound/partition.hpp"

namespace compound {

// ---------------------------------------------------------------------------
// h-abacus of a strict partition.
//
// Three runners: runner 1 holds the even numbers 2,4,6,..., runner 2 the
// numbers ≡ 1 (mod 4), runner 3 the numbers ≡ 3 (mod 4). A strict λ places one
// bead on each of its parts. Runners 2 and 3 are read as one Maya diagram:
// runner 3 from infinity down to 3 (bead = vacancy), then runner 2 from 1
// upwards (bead = occupied). Slot j >= 0 is runner-2 value 4j+1, slot j < 0 is
// runner-3 value 4(-1-j)+3.
// ---------------------------------------------------------------------------

struct AbacusDecomposition {
  Partition core;       // λ^{hc}, always of the form Δ^h(±m)
  Partition shifted0;   // λ^h[0], strict
  Partition quotient1;  // λ^h[1]
  int charge = 0;       // m(λ)

  friend bool operator==(const AbacusDecomposition&, const AbacusDecomposition&) = default;
};

/// Δ^h(m) = (4m-3, ..., 5, 1) for m >= 0 and Δ^h(-m) = (4m-1, ..., 7, 3).
inline Partition h_core_of_charge(int charge) {
  std::vector<int> parts;
  if (charge >= 0) {
    for (int v = 4 * charge - 3; v >= 1; v -= 4) parts.push_back(v);
  } else {
    for (int v = -4 * charge - 1; v >= 3; v -= 4) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

/// Inverse of h_core_of_charge; throws if `core` is not in HC.
inline int charge_of_h_core(const Partition& core) {
  if (core.empty()) return 0;
  int m = core[0] % 4 == 1 ? (core[0] + 3) / 4 : (core[0] + 1) / 4;
  int charge = core[0] % 4 == 1 ? m : -m;
  if (core[0] % 4 == 1 || core[0] % 4 == 3) {
    if (h_core_of_charge(charge) == core) return charge;
  }
  throw std::invalid_argument("partition " + core.to_string() + " is not an h-core");
}

inline AbacusDecomposition h_abacus_decompose(const Partition& lambda) {
  if (!lambda.is_strict()) throw std::invalid_argument("h_abacus_decompose: partition must be strict");
  std::vector<int> halves;
  std::set<int> runner2_slots, runner3_slots;
  for (int v : lambda.parts()) {
    if (v % 2 == 0) halves.push_back(v / 2);
    else if (v % 4 == 1) runner2_slots.insert((v - 1) / 4);
    else runner3_slots.insert(-1 - (v - 3) / 4);
  }
  AbacusDecomposition out;
  out.shifted0 = Partition(std::move(halves));
  out.charge = static_cast<int>(runner2_slots.size()) - static_cast<int>(runner3_slots.size());
  out.core = h_core_of_charge(out.charge);

  // Slots left of `lo` are all occupied; slots right of `hi` all vacant.
  const int lo = runner3_slots.empty() ? -1 : *runner3_slots.begin();
  const int hi = runner2_slots.empty() ? 0 : *runner2_slots.rbegin();
  auto occupied = [&](int j) { return j >= 0 ? runner2_slots.count(j) > 0 : runner3_slots.count(j) == 0; };
  std::vector<int> parts;
  int vacancies = 0;
  for (int j = lo; j <= hi; ++j) {
    if (occupied(j)) {
      if (vacancies > 0) parts.push_back(vacancies);
    } else {
      ++vacancies;
    }
  }
  std::reverse(parts.begin(), parts.end());
  out.quotient1 = Partition(std::move(parts));
  return out;
}

inline Partition h_abacus_compose(const Partition& core, const Partition& shifted0,
                                  const Partition& quotient1) {
  const int m = charge_of_h_core(core);
  if (!shifted0.is_strict()) throw std::invalid_argument("h_abacus_compose: shifted part must be strict");
  std::vector<int> parts;
  for (int p : shifted0.parts()) parts.push_back(2 * p);

  // i-th rightmost occupied slot is m - i + q_i; beyond `depth` every slot is occupied.
  const int depth = quotient1.length() + std::abs(m) + 2;
  std::set<int> occ;
  for (int i = 1; i <= depth; ++i) {
    int q = i <= quotient1.length() ? quotient1[static_cast<std::size_t>(i - 1)] : 0;
    occ.insert(m - i + q);
  }
  for (int j = m - depth; j <= std::max(*occ.rbegin(), -1); ++j) {
    bool filled = occ.count(j) > 0;
    if (j >= 0 && filled) parts.push_back(4 * j + 1);
    if (j < 0 && !filled) parts.push_back(4 * (-1 - j) + 3);
  }
  return Partition::from_unsorted(std::move(parts));
}

inline Partition h_abacus_compose(const AbacusDecomposition& d) {
  return h_abacus_compose(d.core, d.shifted0, d.quotient1);
}

// ---------------------------------------------------------------------------
// Classical 2-core / 2-quotient.
// ---------------------------------------------------------------------------

struct TwoQuotient {
  Partition core2;  // staircase (k, k-1, ..., 1) or empty
  Partition q0;     // from the even beta-numbers
  Partition q1;     // from the odd beta-numbers
  int sign = 1;     // δ(ξ) ∈ {+1, -1}

  friend bool operator==(const TwoQuotient&, const TwoQuotient&) = default;
};

namespace detail {

inline std::vector<int> beta_set(const Partition& xi, int count) {
  std::vector<int> beta(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int part = i < xi.length() ? xi[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + count - 1 - i;
  }
  return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int count = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < count; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (count - 1 - i));
  return Partition::from_unsorted(std::move(parts));
}

// Parity of sorting a decreasing beta-set into (evens decreasing, odds decreasing):
// one inversion per pair x > y with x odd and y even.
inline int evens_first_sign(const std::vector<int>& beta_desc) {
  long inversions = 0;
  long odds_seen = 0;
  for (int b : beta_desc) {
    if (b % 2) ++odds_seen;
    else inversions += odds_seen;
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace detail

/// 2-core, 2-quotient and 2-sign of ξ. The beta-set is padded to an even count
/// `pad` (default: smallest even count >= ℓ(ξ)). The sign is the evens-first
/// sorting sign of ξ's beta-set divided by that of its 2-core at the same
/// padding, which makes it independent of `pad`.
inline TwoQuotient two_core_quotient(const Partition& xi, int pad = -1) {
  int count = pad < 0 ? xi.length() + (xi.length() % 2) : pad;
  if (count % 2 || count < xi.length()) {
    throw std::invalid_argument("two_core_quotient: padding must be even and at least the length");
  }
  auto beta = detail::beta_set(xi, count);
  std::vector<int> even_pos, odd_pos;
  for (int b : beta) (b % 2 ? odd_pos : even_pos).push_back(b / 2);
  // each runner's positions are the beta-numbers of its quotient partition
  TwoQuotient out;
  out.q0 = detail::partition_from_beta(even_pos);
  out.q1 = detail::partition_from_beta(odd_pos);

  std::vector<int> core_beta;
  for (int i = 0; i < static_cast<int>(even_pos.size()); ++i) core_beta.push_back(2 * i);
  for (int i = 0; i < static_cast<int>(odd_pos.size()); ++i) core_beta.push_back(2 * i + 1);
  std::sort(core_beta.begin(), core_beta.end(), std::greater<>());
  out.core2 = detail::partition_from_beta(core_beta);
  out.sign = detail::evens_first_sign(beta) * detail::evens_first_sign(core_beta);
  return out;
}

}  // namespace compound
