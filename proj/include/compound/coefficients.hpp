#pragma once

#include <stdexcept>
#include <vector>

#include "compound/schur.hpp"
#include "compound/symfunc.hpp"

namespace compound {

/// Green function X^λ_σ, defined by Q_λ = Σ_σ 2^{ℓ(σ)} z_σ^{-1} X^λ_σ p_σ.
inline Integer green_function(const Partition& lambda, const Partition& sigma) {
  if (lambda.weight() != sigma.weight()) throw std::invalid_argument("green_function: weights differ");
  if (!lambda.is_strict()) throw std::invalid_argument("green_function: λ must be strict");
  if (!sigma.is_odd()) throw std::invalid_argument("green_function: σ must be odd");
  Rational x = schur_Q(lambda).coefficient(sigma) * Rational(z_factor(sigma)) / Rational(pow2(sigma.length()));
  return to_integer(x, "green_function");
}

/// Spin character ζ^λ_ρ, unwound from the coefficient of t^m/m! in Q_λ(t) under
/// p_j = ½ j t_j, which equals 2^{(ℓ(λ)-ℓ(ρ)+ε)/2} ζ^λ_ρ with ε ≡ ℓ(λ)-ℓ(ρ) (mod 2).
inline Integer spin_character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight()) throw std::invalid_argument("spin_character: weights differ");
  if (!lambda.is_strict()) throw std::invalid_argument("spin_character: λ must be strict");
  if (!rho.is_odd()) throw std::invalid_argument("spin_character: ρ must be odd");
  const int diff = lambda.length() - rho.length();
  const int eps = diff % 2 == 0 ? 0 : 1;
  // coefficient of ∏ t_j^{m_j}/m_j!  =  c_ρ · z_ρ · 2^{-ℓ(ρ)}
  Rational scaled = schur_Q(lambda).coefficient(rho) * Rational(z_factor(rho)) / Rational(pow2(rho.length()));
  scaled *= pow2_signed(-(diff + eps) / 2);
  return to_integer(scaled, "spin_character");
}

/// c^λ_{νξ} = ⟨S_ν S_ξ, S_λ⟩.
inline Integer littlewood_richardson(const Partition& nu, const Partition& xi, const Partition& lambda) {
  if (nu.weight() + xi.weight() != lambda.weight()) {
    throw std::invalid_argument("littlewood_richardson: weights do not add up");
  }
  return to_integer(inner(schur(nu) * schur(xi), schur(lambda)), "littlewood_richardson");
}

/// Stembridge coefficient g_{μν} = ⟨P_μ, S_ν⟩, the multiplicity of S_ν in P_μ.
inline Integer stembridge_g(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) throw std::invalid_argument("stembridge_g: weights differ");
  return to_integer(inner(schur_P(mu), schur(nu)), "stembridge_g");
}

/// Kostka number K_{νμ} = ⟨h_μ, S_ν⟩.
inline Integer kostka(const Partition& nu, const Partition& mu) {
  if (nu.weight() != mu.weight()) throw std::invalid_argument("kostka: weights differ");
  return to_integer(inner(complete_h_product(mu), schur(nu)), "kostka");
}

/// The 2-reduced Schur function in the Q-side variables: S_λ(t)|_{t_even=0}
/// rewritten under p_j = ½ j t_j, which is (x,x)-substitution after projection.
inline SymFunc reduced_schur_q_coordinates(const Partition& lambda) {
  return sub_double(reduce2(schur(lambda)));
}

/// Coefficients γ_{λμ} (μ strict, in generate_partitions order) of the
/// expansion of the 2-reduced Schur function in Q-functions. Each coefficient
/// is read off by pairing with P_μ under ⟨,⟩_{-1}; the expansion is then
/// re-assembled and must reproduce the function exactly.
inline std::vector<Rational> stembridge_gamma_row(const Partition& lambda) {
  const auto strict = generate_partitions(lambda.weight(), PartitionFilter::strict);
  SymFunc remainder = reduced_schur_q_coordinates(lambda);
  std::vector<Rational> gamma(strict.size());
  for (std::size_t j = 0; j < strict.size(); ++j) {
    gamma[j] = inner(remainder, schur_P(strict[j]), InnerProductKind::minus_one);
  }
  for (std::size_t j = 0; j < strict.size(); ++j) remainder -= schur_Q(strict[j]) * gamma[j];
  if (!remainder.is_zero()) {
    throw InvariantViolation("stembridge_gamma_row: reduced Schur function not in the Q-span for " +
                             lambda.to_string());
  }
  return gamma;
}

}  // namespace compound
