#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "compound/abacus.hpp"
#include "compound/basis.hpp"
#include "compound/bijections.hpp"
#include "compound/coefficients.hpp"
#include "compound/golden.hpp"
#include "compound/serialize.hpp"
#include "compound/transition.hpp"

namespace compound {

enum class Status { pass, fail };

struct VerificationReport {
  std::string claim_id;
  int n = 0;
  Status status = Status::pass;
  Json details = Json::object();  // on failure carries a non-empty "counterexample"
  double elapsed_ms = 0;

  bool passed() const noexcept { return status == Status::pass; }

  Json to_json() const {
    return {{"claim_id", claim_id},
            {"n", n},
            {"status", status == Status::pass ? "pass" : "fail"},
            {"details", details},
            {"elapsed_ms", elapsed_ms}};
  }

  /// One JSON document per line, without the nondeterministic timing field.
  std::string deterministic_line() const {
    Json j = to_json();
    j.erase("elapsed_ms");
    return j.dump();
  }
};

/// Result of a single check before timing and bookkeeping are attached.
struct Outcome {
  bool pass = true;
  Json details = Json::object();

  static Outcome ok(Json info = Json::object()) { return {true, std::move(info)}; }
  static Outcome fail(Json counterexample, Json info = Json::object()) {
    if (counterexample.is_null() || counterexample.empty()) counterexample = "unspecified failure";
    info["counterexample"] = std::move(counterexample);
    return {false, std::move(info)};
  }
};

/// First mismatches between two labelled matrices (labels, shape and entries);
/// nullopt when equal.
inline std::optional<Json> compare_matrices(const LabeledIntMatrix& expected, const LabeledIntMatrix& actual,
                                            std::size_t limit = 8) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    return Json{{"kind", "shape"},
                {"expected", {expected.rows(), expected.cols()}},
                {"actual", {actual.rows(), actual.cols()}}};
  }
  Json diffs = Json::array();
  for (std::size_t i = 0; i < expected.rows(); ++i) {
    if (expected.row_labels[i] != actual.row_labels[i]) {
      diffs.push_back({{"kind", "row_label"}, {"index", i}, {"expected", to_json(expected.row_labels[i])},
                       {"actual", to_json(actual.row_labels[i])}});
    }
  }
  for (std::size_t j = 0; j < expected.cols(); ++j) {
    if (expected.col_labels[j] != actual.col_labels[j]) {
      diffs.push_back({{"kind", "col_label"}, {"index", j}, {"expected", to_json(expected.col_labels[j])},
                       {"actual", to_json(actual.col_labels[j])}});
    }
  }
  for (std::size_t i = 0; i < expected.rows() && diffs.size() < limit; ++i) {
    for (std::size_t j = 0; j < expected.cols() && diffs.size() < limit; ++j) {
      if (expected.entries[i][j] != actual.entries[i][j]) {
        diffs.push_back({{"kind", "entry"},
                         {"row", to_json(actual.row_labels[i])},
                         {"col", to_json(actual.col_labels[j])},
                         {"expected", expected.entries[i][j].get_str()},
                         {"actual", actual.entries[i][j].get_str()}});
      }
    }
  }
  if (diffs.empty()) return std::nullopt;
  return diffs;
}

namespace checks {

inline Json symfunc_diff(const SymFunc& expected, const SymFunc& actual) {
  SymFunc diff = actual - expected;
  Json out = Json::array();
  for (const auto& [rho, c] : diff.terms()) {
    out.push_back({{"key", to_json(rho)}, {"expected", expected.coefficient(rho).get_str()},
                   {"actual", actual.coefficient(rho).get_str()}});
    if (out.size() >= 8) break;
  }
  return out;
}

inline long length_sum(const std::vector<Partition>& parts, const std::function<long(const Partition&)>& f) {
  long s = 0;
  for (const auto& p : parts) s += f(p);
  return s;
}

inline Outcome length_sum_identities(int n) {
  const auto all = generate_partitions(n);
  auto l = [](const Partition& p) { return static_cast<long>(p.length()); };
  auto lr = [&](const Partition& p) { return l(phi(p).first); };
  auto ld = [&](const Partition& p) { return l(phi(p).second); };
  auto lo = [&](const Partition& p) { return l(psi(p).first); };
  auto le = [&](const Partition& p) { return l(psi(p).second); };
  auto lg = [&](const Partition& p) { return l(glaisher(phi(p).first)); };

  Json failures = Json::array();
  auto expect_equal = [&](const std::string& what, const std::vector<long>& values) {
    if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
      failures.push_back({{"identity", what}, {"values", values}});
    }
  };
  auto sums = [&](const std::vector<Partition>& set, auto... fns) {
    return std::vector<long>{length_sum(set, fns)...};
  };

  auto total_length = [&](const Partition& p) { return l(p); };
  auto rd = [&](const Partition& p) { return lr(p) + 2 * ld(p); };
  auto oe = [&](const Partition& p) { return lo(p) + le(p); };
  auto ge = [&](const Partition& p) { return lg(p) + le(p); };
  auto twice_d = [&](const Partition& p) { return 2 * ld(p); };
  auto twice_e = [&](const Partition& p) { return 2 * le(p); };
  auto oe_minus_r = [&](const Partition& p) { return lo(p) + le(p) - lr(p); };
  auto ge_minus_r = [&](const Partition& p) { return lg(p) + le(p) - lr(p); };

  expect_equal("sum l = sum(l(r)+2l(d)) = sum(l(o)+l(e)) = sum(l(glaisher(r))+l(e)) over P_n",
               sums(all, total_length, rd, oe, ge));
  expect_equal("sum 2l(d) = sum 2l(e) = sum(l(o)+l(e)-l(r)) = sum(l(glaisher(r))+l(e)-l(r)) over P_n",
               sums(all, twice_d, twice_e, oe_minus_r, ge_minus_r));

  std::map<std::pair<int, int>, std::vector<Partition>> classes;
  for (const auto& p : all) classes[phi_class(p)].push_back(p);
  for (const auto& [key, members] : classes) {
    const std::string cls = " over P_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
    expect_equal("sum l = sum(l(r)+2l(d)) = sum(l(o)+l(e))" + cls, sums(members, total_length, rd, oe));
    expect_equal("sum 2l(d) = sum(l(o)+l(e)-l(r))" + cls, sums(members, twice_d, oe_minus_r));
  }
  if (!failures.empty()) return Outcome::fail(failures);
  return Outcome::ok({{"partitions", all.size()}, {"classes", classes.size()}});
}

using Tensor = std::map<std::pair<Partition, Partition>, Rational>;

inline void add_tensor(Tensor& t, const SymFunc& f, const SymFunc& g, const Rational& scale = 1) {
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      auto& slot = t[{a, b}];
      slot += scale * ca * cb;
    }
  }
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

inline Json tensor_diff(const Tensor& expected, const Tensor& actual) {
  Json out = Json::array();
  std::set<std::pair<Partition, Partition>> keys;
  for (const auto& [k, v] : expected) keys.insert(k);
  for (const auto& [k, v] : actual) keys.insert(k);
  for (const auto& k : keys) {
    auto e = expected.count(k) ? expected.at(k) : Rational(0);
    auto a = actual.count(k) ? actual.at(k) : Rational(0);
    if (e != a) {
      out.push_back({{"x_key", to_json(k.first)}, {"y_key", to_json(k.second)}, {"expected", e.get_str()},
                     {"actual", a.get_str()}});
      if (out.size() >= 8) break;
    }
  }
  return out;
}

// Degree-(n,n) component of ∏ 1/(1 - x_i y_j)^2 three ways.
inline Outcome cauchy_kernel(int n) {
  Tensor compound_side, schur_side, kernel;
  for (const auto& lambda : generate_partitions(n)) {
    add_tensor(compound_side, W_basis(lambda), V_basis(lambda));
    add_tensor(schur_side, sub_double(schur(lambda)), schur(lambda));
  }
  for (const auto& rho : generate_partitions(n)) {
    kernel[{rho, rho}] = Rational(pow2(rho.length())) / Rational(z_factor(rho));
  }
  if (compound_side != kernel) return Outcome::fail({{"sum W(x)V(y) vs kernel", tensor_diff(kernel, compound_side)}});
  if (schur_side != kernel) return Outcome::fail({{"sum S(x,x)S(y) vs kernel", tensor_diff(kernel, schur_side)}});
  return Outcome::ok({{"terms", kernel.size()}});
}

inline Outcome duality_pairing(int n) {
  const auto parts = generate_partitions(n);
  std::vector<SymFunc> w, v;
  for (const auto& p : parts) {
    w.push_back(W_basis(p));
    v.push_back(V_basis(p));
  }
  Json bad = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Rational got = inner(w[i], v[j], InnerProductKind::minus_one);
      if (got != Rational(i == j ? 1 : 0)) {
        bad.push_back({{"W", to_json(parts[i])}, {"V", to_json(parts[j])}, {"value", got.get_str()}});
      }
    }
  }
  if (!bad.empty()) return Outcome::fail(bad);
  return Outcome::ok({{"gram_size", parts.size()}});
}

inline Outcome integrality_and_routes(int n, int route_cap) {
  const auto a = build_A(n);  // throws on a non-integral entry
  Json info = {{"size", a.rows()}, {"integral", true}};
  if (n <= route_cap) {
    if (auto diff = compare_matrices(a, build_A_combinatorial(n))) {
      return Outcome::fail({{"route", "combinatorial"}, {"diff", *diff}});
    }
    if (auto diff = compare_matrices(a, build_A_by_duality(n))) {
      return Outcome::fail({{"route", "duality"}, {"diff", *diff}});
    }
    info["routes_agree"] = true;
  }
  return Outcome::ok(info);
}

inline Outcome elementary_divisors(int n) {
  auto snf = smith_normal_form(gram_G(n));
  std::vector<Integer> expected;
  for (const auto& lambda : generate_partitions(n, PartitionFilter::strict)) {
    expected.push_back(pow2(glaisher(lambda).length() - lambda.length()));
  }
  std::sort(snf.begin(), snf.end());
  std::sort(expected.begin(), expected.end());
  Json got = Json::array(), want = Json::array();
  for (const auto& d : snf) got.push_back(d.get_str());
  for (const auto& d : expected) want.push_back(d.get_str());
  if (snf != expected) return Outcome::fail({{"expected", want}, {"actual", got}});
  return Outcome::ok({{"elementary_divisors", got}});
}

inline Outcome determinant_power(int n) {
  const long k = k_value(n);
  const Integer det = determinant(build_A(n));
  Json info = {{"k", k}, {"det", det.get_str()}};
  if (abs(det) != pow2(k)) return Outcome::fail({{"det", det.get_str()}, {"expected_abs", pow2(k).get_str()}}, info);
  return Outcome::ok(info);
}

inline long block_exponent(int n0, int n1) {
  long e = 0;
  for (const auto& lambda : generate_partitions(n0 + 2 * n1)) {
    auto [r, d] = phi(lambda);
    if (r.weight() != n0) continue;
    e += glaisher(r).length() + d.length() - r.length();
  }
  return e;
}

inline Outcome block_structure(int n) {
  const auto ata = cartan_like(n);
  if (auto bad = off_block_entries(ata); !bad.empty()) {
    Json cx = Json::array();
    for (const auto& e : bad) {
      cx.push_back({{"row", to_json(e.row)}, {"col", to_json(e.col)}, {"value", e.value.get_str()}});
    }
    return Outcome::fail({{"off_block_entries", cx}});
  }
  Json info = Json::array();
  for (const auto& [key, block] : split_blocks(ata)) {
    const Integer det = determinant(block);
    const long e = block_exponent(key.first, key.second);
    info.push_back({{"n0", key.first}, {"n1", key.second}, {"det", det.get_str()}, {"exponent", e}});
    if (abs(det) != pow2(e)) {
      return Outcome::fail({{"block", {key.first, key.second}}, {"det", det.get_str()}, {"expected_abs", pow2(e).get_str()}});
    }
    if (key.second == 0) {
      if (auto diff = compare_matrices(gram_G(n), block)) return Outcome::fail({{"principal_block_vs_G", *diff}});
      long principal = 0;
      for (const auto& lambda : generate_partitions(n, PartitionFilter::strict)) {
        principal += glaisher(lambda).length() - lambda.length();
      }
      if (abs(det) != pow2(principal)) {
        return Outcome::fail({{"principal_det", det.get_str()}, {"expected_abs", pow2(principal).get_str()}});
      }
    }
  }
  return Outcome::ok({{"blocks", info}});
}

inline Outcome entrywise_inner_products(int n) {
  const auto ata = cartan_like(n);
  Json bad = Json::array();
  for (std::size_t i = 0; i < ata.rows(); ++i) {
    const auto& [ri, di] = std::get<PartitionPair>(ata.row_labels[i]);
    for (std::size_t j = 0; j < ata.cols(); ++j) {
      const auto& [rj, dj] = std::get<PartitionPair>(ata.col_labels[j]);
      Rational value = inner(schur_P(ri), schur_P(rj)) * inner(sub_square(schur(di)), sub_square(schur(dj)));
      if (value != Rational(ata.entries[i][j])) {
        bad.push_back({{"row", to_json(ata.row_labels[i])}, {"col", to_json(ata.col_labels[j])},
                       {"matrix", ata.entries[i][j].get_str()}, {"inner_products", value.get_str()}});
      }
    }
  }
  if (!bad.empty()) return Outcome::fail(bad);
  return Outcome::ok({{"size", ata.rows()}});
}

// p_σ p_{2ρ} = Σ_{λ ∈ P_{n0,n1}} 2^{-ℓ(λ^r)} X^{λ^r}_σ χ^{λ^d}_ρ W_λ
inline Outcome frobenius(int n) {
  std::size_t checked = 0;
  for (int n1 = 0; 2 * n1 <= n; ++n1) {
    const int n0 = n - 2 * n1;
    std::vector<Partition> members;
    for (const auto& lambda : generate_partitions(n)) {
      if (phi(lambda).first.weight() == n0) members.push_back(lambda);
    }
    for (const auto& sigma : generate_partitions(n0, PartitionFilter::odd)) {
      for (const auto& rho : generate_partitions(n1)) {
        SymFunc rhs;
        for (const auto& lambda : members) {
          auto [r, d] = phi(lambda);
          Rational c = Rational(green_function(r, sigma) * character(d, rho)) / Rational(pow2(r.length()));
          rhs += W_basis(lambda) * c;
        }
        const SymFunc lhs = p_monomial(sigma.merged(rho.scaled(2)));
        ++checked;
        if (rhs != lhs) {
          return Outcome::fail({{"sigma", to_json(sigma)}, {"rho", to_json(rho)}, {"diff", symfunc_diff(lhs, rhs)}});
        }
      }
    }
  }
  return Outcome::ok({{"pairs_checked", checked}});
}

inline Outcome eta_correspondence(int n) {
  std::set<PartitionPair> images;
  for (const auto& lambda : generate_partitions(2 * n, PartitionFilter::strict)) {
    const auto dec = h_abacus_decompose(lambda);
    if (!dec.core.empty()) continue;
    PartitionPair image{dec.shifted0, dec.quotient1};
    if (dec.charge != 0 || dec.shifted0.weight() + 2 * dec.quotient1.weight() != n || !dec.shifted0.is_strict()) {
      return Outcome::fail({{"lambda", to_json(lambda)}, {"image", to_json(image)}, {"charge", dec.charge}});
    }
    if (!images.insert(image).second) {
      return Outcome::fail({{"lambda", to_json(lambda)}, {"duplicate_image", to_json(image)}});
    }
  }
  std::size_t target = 0;
  for (int n1 = 0; 2 * n1 <= n; ++n1) {
    target += generate_partitions(n - 2 * n1, PartitionFilter::strict).size() * generate_partitions(n1).size();
  }
  if (images.size() != target) {
    return Outcome::fail({{"core_free_count", images.size()}, {"pair_count", target}});
  }
  return Outcome::ok({{"count", target}});
}

inline Outcome habacus_bijection(int n) {
  std::set<std::tuple<Partition, Partition, Partition>> seen;
  const auto strict = generate_partitions(n, PartitionFilter::strict);
  for (const auto& lambda : strict) {
    const auto d = h_abacus_decompose(lambda);
    Json where = {{"lambda", to_json(lambda)}, {"core", to_json(d.core)}, {"shifted0", to_json(d.shifted0)},
                  {"quotient1", to_json(d.quotient1)}, {"charge", d.charge}};
    if (lambda.weight() != d.core.weight() + 2 * (d.shifted0.weight() + 2 * d.quotient1.weight())) {
      return Outcome::fail({{"weight_identity", where}});
    }
    if (h_abacus_compose(d) != lambda) return Outcome::fail({{"round_trip", where}});
    if (!seen.insert({d.core, d.shifted0, d.quotient1}).second) return Outcome::fail({{"not_injective", where}});
  }
  return Outcome::ok({{"strict_partitions", strict.size()}});
}

inline Outcome stembridge_structure(int n) {
  const auto gamma = build_Gamma(n);
  const auto a = build_A(n);
  Json bad = Json::array();
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    const auto& lambda = std::get<Partition>(gamma.row_labels[i]);
    for (std::size_t j = 0; j < gamma.cols(); ++j) {
      const auto& mu = std::get<PartitionPair>(gamma.col_labels[j]).first;
      const Integer& g = gamma.entries[i][j];
      auto report = [&](const char* what) {
        bad.push_back({{"property", what}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"value", g.get_str()}});
      };
      if (g < 0) report("nonnegative");
      if (g != 0 && !dominance_leq(lambda, mu)) report("zero unless mu dominates lambda");
      if (lambda == mu && g != 1) report("unit diagonal");
      if (stembridge_g(mu, lambda) != g) report("g_{mu lambda} = gamma_{lambda mu}");
      auto col = std::find(a.col_labels.begin(), a.col_labels.end(), gamma.col_labels[j]) - a.col_labels.begin();
      if (a.entries[i][static_cast<std::size_t>(col)] != g) report("equals the (mu, empty) column of A_n");
    }
  }
  if (!bad.empty()) return Outcome::fail(bad);
  return Outcome::ok({{"rows", gamma.rows()}, {"cols", gamma.cols()}});
}

inline Outcome qprime_kostka(int n) {
  for (const auto& lambda : generate_partitions(n)) {
    auto [r, d] = phi(lambda);
    const SymFunc qp = q_prime(lambda);
    if (lambda.is_strict() && qp != sub_double(schur_Q(lambda))) {
      return Outcome::fail({{"lambda", to_json(lambda)}, {"identity", "Q'_mu = Q_mu(x,x)"}});
    }
    SymFunc expansion;
    for (const auto& nu : generate_partitions(d.weight())) {
      expansion += W_tilde(r, nu) * Rational(kostka(nu, d));
    }
    if (expansion != qp) {
      return Outcome::fail({{"lambda", to_json(lambda)}, {"identity", "Q'_lambda = sum_nu K W~"},
                            {"diff", symfunc_diff(qp, expansion)}});
    }
  }
  return Outcome::ok();
}

// S_μ(y²) = Σ_ξ δ(ξ) c^μ_{ξ[0],ξ[1]} S_ξ(y) for every μ ⊢ m.
inline Outcome two_sign_oracle(int m) {
  const auto xis = generate_partitions(2 * m);
  std::vector<TwoQuotient> quotients;
  for (const auto& xi : xis) quotients.push_back(two_core_quotient(xi));
  for (const auto& mu : generate_partitions(m)) {
    SymFunc rhs;
    for (std::size_t k = 0; k < xis.size(); ++k) {
      const auto& q = quotients[k];
      if (!q.core2.empty()) continue;
      Integer c = littlewood_richardson(q.q0, q.q1, mu);
      if (c != 0) rhs += schur(xis[k]) * Rational(q.sign * c);
    }
    const SymFunc lhs = sub_square(schur(mu));
    if (lhs != rhs) return Outcome::fail({{"mu", to_json(mu)}, {"diff", symfunc_diff(lhs, rhs)}});
  }
  return Outcome::ok();
}

inline Outcome golden_matrices(int n) {
  std::optional<golden::MatrixFixture> a, ata;
  if (n == 1) a = golden::A1();
  if (n == 3) a = golden::A3(), ata = golden::AtA3();
  if (n == 4) a = golden::A4(), ata = golden::AtA4();
  if (!a) return Outcome::fail({{"reason", "no fixture at this n"}});
  if (auto diff = compare_matrices(a->to_matrix(), build_A(n, LabelOrder::paper))) {
    return Outcome::fail({{"fixture", a->name}, {"diff", *diff}});
  }
  if (ata) {
    if (auto diff = compare_matrices(ata->to_matrix(), cartan_like(n, LabelOrder::paper))) {
      return Outcome::fail({{"fixture", ata->name}, {"diff", *diff}});
    }
  }
  return Outcome::ok({{"fixture_version", golden::kGoldenVersion}});
}

inline Outcome k_table(int n) {
  const auto [a, b] = k_value_formulas(n);
  const long expected = golden::k_table().at(static_cast<std::size_t>(n - 1));
  if (a != b || a != expected) {
    return Outcome::fail({{"sum_l_even", a}, {"sum_glaisher", b}, {"table", expected}});
  }
  return Outcome::ok({{"k", a}});
}

}  // namespace checks

/// Per-claim upper bounds on n. Keys are claim ids plus "thm-4.3/route" (cap
/// for the combinatorial and duality cross-routes inside thm-4.3).
struct VerifyConfig {
  std::map<std::string, int> caps = {
      {"prop-3.1", 14},        {"prop-4.1", 8},         {"cor-4.2", 8},
      {"thm-4.3", 10},         {"thm-4.3/route", 8},    {"thm-4.5-via-formula", 10},
      {"thm-4.6", 10},         {"thm-4.8", 8},          {"prop-4.9", 8},
      {"frobenius", 8},        {"eta-correspondence", 10}, {"stembridge-structure", 10},
      {"qprime-kostka", 8},    {"two-sign-oracle", 5},  {"golden-matrices", 4},
      {"k-table", 8},          {"habacus-bijection", 20},
  };

  int cap(const std::string& id) const {
    auto it = caps.find(id);
    if (it == caps.end()) throw std::invalid_argument("no cap configured for claim '" + id + "'");
    return it->second;
  }

  /// Overrides caps from a JSON object {"claim-id": cap, ...}.
  void merge(const Json& j) {
    for (const auto& [key, value] : j.items()) caps[key] = value.get<int>();
  }
};

namespace detail {

struct Claim {
  std::string id;
  std::function<Outcome(int, const VerifyConfig&)> run;
  std::function<bool(int)> in_domain = [](int n) { return n >= 1; };
};

inline const std::vector<Claim>& claims() {
  using namespace checks;
  static const std::vector<Claim> table = {
      {"cor-4.2", [](int n, const VerifyConfig&) { return duality_pairing(n); }},
      {"eta-correspondence", [](int n, const VerifyConfig&) { return eta_correspondence(n); }},
      {"frobenius", [](int n, const VerifyConfig&) { return frobenius(n); }},
      {"golden-matrices", [](int n, const VerifyConfig&) { return golden_matrices(n); },
       [](int n) { return n == 1 || n == 3 || n == 4; }},
      {"habacus-bijection", [](int n, const VerifyConfig&) { return habacus_bijection(n); }},
      {"k-table", [](int n, const VerifyConfig&) { return k_table(n); },
       [](int n) { return n >= 1 && n <= static_cast<int>(golden::k_table().size()); }},
      {"prop-3.1", [](int n, const VerifyConfig&) { return length_sum_identities(n); }},
      {"prop-4.1", [](int n, const VerifyConfig&) { return cauchy_kernel(n); }},
      {"prop-4.9", [](int n, const VerifyConfig&) { return entrywise_inner_products(n); }},
      {"qprime-kostka", [](int n, const VerifyConfig&) { return qprime_kostka(n); }},
      {"stembridge-structure", [](int n, const VerifyConfig&) { return stembridge_structure(n); }},
      {"thm-4.3", [](int n, const VerifyConfig& c) { return integrality_and_routes(n, c.cap("thm-4.3/route")); }},
      {"thm-4.5-via-formula", [](int n, const VerifyConfig&) { return elementary_divisors(n); }},
      {"thm-4.6", [](int n, const VerifyConfig&) { return determinant_power(n); }},
      {"thm-4.8", [](int n, const VerifyConfig&) { return block_structure(n); }},
      {"two-sign-oracle", [](int n, const VerifyConfig&) { return two_sign_oracle(n); }},
  };
  return table;
}

inline const Claim& find_claim(const std::string& id) {
  for (const auto& c : claims()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown claim id '" + id + "'");
}

}  // namespace detail

inline std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : detail::claims()) ids.push_back(c.id);
  return ids;
}

/// Runs one claim at weight n. Throws std::invalid_argument for an unknown
/// claim or an n outside the claim's domain or configured cap.
inline VerificationReport check(const std::string& claim_id, int n, const VerifyConfig& config = {}) {
  const auto& claim = detail::find_claim(claim_id);
  if (!claim.in_domain(n) || n > config.cap(claim_id)) {
    throw std::invalid_argument("n=" + std::to_string(n) + " outside the configured range of '" + claim_id + "'");
  }
  VerificationReport report;
  report.claim_id = claim_id;
  report.n = n;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = claim.run(n, config);
  } catch (const std::exception& e) {
    outcome = Outcome::fail({{"exception", e.what()}});
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.status = outcome.pass ? Status::pass : Status::fail;
  report.details = std::move(outcome.details);
  return report;
}

/// Every feasible (claim, n) with n <= max_n, optionally restricted to
/// `only`; results sorted by (claim_id, n) whatever the worker count.
inline std::vector<VerificationReport> check_all(int max_n, int jobs = 1, const VerifyConfig& config = {},
                                                 const std::vector<std::string>& only = {}) {
  if (max_n < 1) throw std::invalid_argument("check_all: max_n must be positive");
  for (const auto& id : only) detail::find_claim(id);
  std::vector<std::pair<std::string, int>> tasks;
  for (const auto& claim : detail::claims()) {
    if (!only.empty() && std::find(only.begin(), only.end(), claim.id) == only.end()) continue;
    const int top = std::min(max_n, config.cap(claim.id));
    for (int n = 1; n <= top; ++n) {
      if (claim.in_domain(n)) tasks.emplace_back(claim.id, n);
    }
  }
  std::vector<VerificationReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      reports[i] = check(tasks[i].first, tasks[i].second, config);
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.claim_id, a.n) < std::tie(b.claim_id, b.n);
  });
  return reports;
}

}  // namespace compound
