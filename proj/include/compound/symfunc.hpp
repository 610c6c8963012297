#pragma once

#include <map>
#include <string>
#include <utility>

#include "compound/numeric.hpp"
#include "compound/partition.hpp"

namespace compound {

/// A symmetric function as a finite rational combination of power-sum
/// monomials p_ρ = p_{ρ1} p_{ρ2} ... in the x-variables. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  SymFunc() = default;
  explicit SymFunc(Rational constant) {
    if (constant != 0) terms_.emplace(Partition{}, std::move(constant));
  }

  static SymFunc one() { return SymFunc(Rational(1)); }

  /// The single-term function c·p_ρ.
  static SymFunc monomial(Partition rho, Rational c = 1) {
    SymFunc f;
    if (c != 0) f.terms_.emplace(std::move(rho), std::move(c));
    return f;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Partition& rho, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(rho, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Degree-n component.
  SymFunc homogeneous_part(int n) const {
    SymFunc out;
    for (const auto& [rho, c] : terms_) {
      if (rho.weight() == n) out.terms_.emplace(rho, c);
    }
    return out;
  }

  /// True iff every key has weight n (the zero function is homogeneous of any degree).
  bool is_homogeneous(int n) const {
    for (const auto& [rho, c] : terms_) {
      if (rho.weight() != n) return false;
    }
    return true;
  }

  SymFunc& operator+=(const SymFunc& g) {
    for (const auto& [rho, c] : g.terms_) add_term(rho, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& g) {
    for (const auto& [rho, c] : g.terms_) add_term(rho, -c);
    return *this;
  }
  SymFunc& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [rho, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
  friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
  friend SymFunc operator-(SymFunc f) { return f *= Rational(-1); }
  friend SymFunc operator*(SymFunc f, const Rational& s) { return f *= s; }
  friend SymFunc operator*(const Rational& s, SymFunc f) { return f *= s; }

  friend SymFunc operator*(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    for (const auto& [a, ca] : f.terms_) {
      for (const auto& [b, cb] : g.terms_) out.add_term(a.merged(b), ca * cb);
    }
    return out;
  }

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  /// Applies the algebra endomorphism p_r ↦ scale(r)·p_{stretch·r}.
  template <class ScaleFn>
  SymFunc substitute(int stretch, ScaleFn scale) const {
    SymFunc out;
    for (const auto& [rho, c] : terms_) {
      Rational coeff = c;
      for (int r : rho.parts()) coeff *= scale(r);
      out.add_term(rho.scaled(stretch), coeff);
    }
    return out;
  }

  /// Human-readable form in the p-basis, e.g. "1/3 p1^3 - 1/3 p3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // largest keys first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [rho, c] = *it;
      Rational mag = abs(c);
      if (s.empty()) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      std::string mono;
      for (auto [part, m] : rho.multiplicities()) {
        std::string f = "p" + std::to_string(part) + (m > 1 ? "^" + std::to_string(m) : "");
        mono = mono.empty() ? f : f + " " + mono;
      }
      if (mono.empty()) s += mag.get_str();
      else if (mag == 1) s += mono;
      else s += mag.get_str() + " " + mono;
    }
    return s;
  }

 private:
  Terms terms_;
};

inline SymFunc p_monomial(const Partition& rho) { return SymFunc::monomial(rho); }

/// f(x,x): p_r ↦ 2 p_r.
inline SymFunc sub_double(const SymFunc& f) {
  return f.substitute(1, [](int) { return Rational(2); });
}

/// f(x²): p_r ↦ p_{2r}.
inline SymFunc sub_square(const SymFunc& f) {
  return f.substitute(2, [](int) { return Rational(1); });
}

/// Projection onto odd power sums: drops every key with an even part.
inline SymFunc reduce2(const SymFunc& f) {
  SymFunc out;
  for (const auto& [rho, c] : f.terms()) {
    if (rho.is_odd()) out.add_term(rho, c);
  }
  return out;
}

enum class InnerProductKind {
  hall,       // ⟨p_ρ, p_σ⟩ = z_ρ δ_ρσ
  minus_one,  // ⟨p_ρ, p_σ⟩ = 2^{-ℓ(ρ)} z_ρ δ_ρσ
};

inline Rational pairing_weight(const Partition& rho, InnerProductKind kind) {
  Rational w(z_factor(rho));
  if (kind == InnerProductKind::minus_one) w /= Rational(pow2(rho.length()));
  return w;
}

inline Rational inner(const SymFunc& f, const SymFunc& g, InnerProductKind kind = InnerProductKind::hall) {
  const SymFunc& small = f.size() <= g.size() ? f : g;
  const SymFunc& large = f.size() <= g.size() ? g : f;
  Rational sum = 0;
  for (const auto& [rho, c] : small.terms()) {
    auto it = large.terms().find(rho);
    if (it != large.terms().end()) sum += c * it->second * pairing_weight(rho, kind);
  }
  return sum;
}

}  // namespace compound
