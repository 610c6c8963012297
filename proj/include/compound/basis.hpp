#pragma once

#include "compound/bijections.hpp"
#include "compound/schur.hpp"
#include "compound/symfunc.hpp"

namespace compound {

/// Compound basis element W_λ = Q_{λ^r}(x) · S_{λ^d}(x²).
inline SymFunc W_basis(const Partition& lambda) {
  auto [r, d] = phi(lambda);
  return schur_Q(r) * sub_square(schur(d));
}

/// V_λ = P_{λ^r}(x) · S_{λ^d}(x²) = 2^{-ℓ(λ^r)} W_λ; dual to W under ⟨,⟩_{-1}.
inline SymFunc V_basis(const Partition& lambda) {
  auto [r, d] = phi(lambda);
  return schur_P(r) * sub_square(schur(d));
}

/// W̃_{(r,ν)} = Q_r(x,x) · S_ν(x²), the compound function with the Q factor
/// in the t-scaled convention.
inline SymFunc W_tilde(const Partition& r, const Partition& nu) {
  return sub_double(schur_Q(r)) * sub_square(schur(nu));
}

/// Q'_λ = Q_{λ^r}(2t) h_{λ^d}(t'), realized in x-coordinates as
/// Q_{λ^r}(x,x) · h_{λ^d}(x²).
inline SymFunc q_prime(const Partition& lambda) {
  auto [r, d] = phi(lambda);
  return sub_double(schur_Q(r)) * sub_square(complete_h_product(d));
}

}  // namespace compound
