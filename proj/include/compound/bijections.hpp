#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "compound/partition.hpp"

namespace compound {

/// Splits λ by multiplicity parity: m_i(λ^r) = m_i(λ) mod 2, m_i(λ^d) = ⌊m_i(λ)/2⌋.
/// λ^r is strict and |λ| = |λ^r| + 2|λ^d|.
inline PartitionPair phi(const Partition& lambda) {
  std::map<int, int> r, d;
  for (auto [part, m] : lambda.multiplicities()) {
    if (m % 2) r[part] = 1;
    if (m / 2) d[part] = m / 2;
  }
  return {Partition::from_multiplicities(r), Partition::from_multiplicities(d)};
}

inline Partition phi_inverse(const Partition& r, const Partition& d) {
  if (!r.is_strict()) throw std::invalid_argument("phi_inverse: first component must be strict");
  auto mult = d.multiplicities();
  for (auto& [part, m] : mult) m *= 2;
  for (int p : r.parts()) ++mult[p];
  return Partition::from_multiplicities(mult);
}

inline Partition phi_inverse(const PartitionPair& rd) { return phi_inverse(rd.first, rd.second); }

/// Splits λ by part parity: λ^o keeps the odd parts, λ^e halves the even parts.
inline PartitionPair psi(const Partition& lambda) {
  std::vector<int> odd, half;
  for (int p : lambda.parts()) {
    if (p % 2) odd.push_back(p);
    else half.push_back(p / 2);
  }
  return {Partition(std::move(odd)), Partition(std::move(half))};
}

inline Partition psi_inverse(const Partition& o, const Partition& e) {
  if (!o.is_odd()) throw std::invalid_argument("psi_inverse: first component must be odd");
  return o.merged(e.scaled(2));
}

/// Glaisher's bijection from strict to odd partitions of the same weight: a part
/// 2^p·q (q odd) contributes 2^p copies of q.
inline Partition glaisher(const Partition& lambda) {
  if (!lambda.is_strict()) throw std::invalid_argument("glaisher: partition must be strict");
  std::map<int, int> mult;
  for (int p : lambda.parts()) {
    int copies = 1;
    while (p % 2 == 0) {
      p /= 2;
      copies *= 2;
    }
    mult[p] += copies;
  }
  return Partition::from_multiplicities(mult);
}

/// Inverse Glaisher map: merges equal parts pairwise until all parts are distinct.
inline Partition glaisher_inverse(const Partition& odd) {
  if (!odd.is_odd()) throw std::invalid_argument("glaisher_inverse: partition must be odd");
  std::vector<int> parts;
  for (auto [q, m] : odd.multiplicities()) {
    // binary digits of m select the parts q·2^k
    for (int k = 0; m; ++k, m >>= 1) {
      if (m & 1) parts.push_back(q << k);
    }
  }
  return Partition::from_unsorted(std::move(parts));
}

/// The class P_{n0,n1}: n0 = |λ^r|, n1 = |λ^d|.
inline std::pair<int, int> phi_class(const Partition& lambda) {
  auto [r, d] = phi(lambda);
  return {r.weight(), d.weight()};
}

}  // namespace compound
