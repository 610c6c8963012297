#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compound/numeric.hpp"

namespace compound {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zero parts.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// Builds a partition from (part, multiplicity) pairs; zero multiplicities are skipped.
  static Partition from_multiplicities(const std::map<int, int>& mult) {
    std::vector<int> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
      if (it->second < 0) throw std::invalid_argument("negative multiplicity");
      parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  bool is_strict() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
  }

  bool is_odd() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
  }

  bool has_even_part() const noexcept { return !is_odd(); }

  Partition conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(c));
  }

  /// Multiset union of parts.
  Partition merged(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<>());
    Partition r;
    r.parts_ = std::move(out);
    return r;
  }

  /// Every part multiplied by k (k >= 1).
  Partition scaled(int k) const {
    Partition r = *this;
    for (int& p : r.parts_) p *= k;
    return r;
  }

  /// "(5,2,1)"; the empty partition prints as "()".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  /// Exponent notation, e.g. "5^3,4^4,2^7,1"; empty partition prints as "".
  std::string to_exponent_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (!s.empty()) s += ',';
      s += std::to_string(parts_[i]);
      if (j - i > 1) s += '^' + std::to_string(j - i);
      i = j;
    }
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An ordered pair of partitions, e.g. (λ^r, λ^d).
struct PartitionPair {
  Partition first;
  Partition second;

  std::string to_string() const {
    auto show = [](const Partition& p) { return p.empty() ? std::string("()") : p.to_string(); };
    return "(" + show(first) + "," + show(second) + ")";
  }

  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

enum class PartitionFilter { all, strict, odd };

namespace detail {

inline void generate_rec(int remaining, int max_part, PartitionFilter filter, std::vector<int>& cur,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (filter == PartitionFilter::odd && p % 2 == 0) continue;
    cur.push_back(p);
    int next_max = filter == PartitionFilter::strict ? p - 1 : p;
    generate_rec(remaining - p, next_max, filter, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of n passing the filter, in decreasing lexicographic order:
/// (n) first, (1^n) last. This order is a linear extension of dominance
/// (μ dominates λ implies μ comes no later than λ).
inline std::vector<Partition> generate_partitions(int n,
                                                  PartitionFilter filter = PartitionFilter::all) {
  if (n < 0) throw std::invalid_argument("generate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::generate_rec(n, n, filter, cur, out);
  return out;
}

/// True iff λ ≤ μ in dominance order (every prefix sum of μ is at least that of λ).
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("dominance_leq: partitions of different weights");
  }
  int sl = 0, sm = 0;
  const std::size_t len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sl += i < lambda.parts().size() ? lambda[i] : 0;
    sm += i < mu.parts().size() ? mu[i] : 0;
    if (sl > sm) return false;
  }
  return true;
}

/// z_ρ = ∏ i^{m_i} m_i!, the centralizer order of a permutation of cycle type ρ.
inline Integer z_factor(const Partition& rho) {
  Integer z = 1;
  for (auto [part, m] : rho.multiplicities()) {
    Integer ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= ip * factorial(m);
  }
  return z;
}

/// Parses "5^3,4^4,2^7,1", "5,2,1", "[5,2,1]" or "(5,2,1)". The strings "", "()",
/// "[]" and "0" denote the empty partition. Parts may be given in any order.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  }
  if (s.empty() || s == "0") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("parse_partition: empty token in '" + s + "'");
    std::size_t caret = tok.find('^');
    int part = 0, mult = 1;
    try {
      std::size_t used = 0;
      part = std::stoi(tok.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument("");
      if (caret != std::string::npos) {
        std::string m = tok.substr(caret + 1);
        mult = std::stoi(m, &used);
        if (used != m.size()) throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_partition: malformed token '" + tok + "'");
    }
    if (part < 0 || mult < 0) throw std::invalid_argument("parse_partition: negative value");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace compound
