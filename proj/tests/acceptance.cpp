// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "compound/compound.hpp"

using namespace compound;

namespace {

struct Verdict {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
  void require_report(const VerificationReport& r) {
    require(r.passed(), r.claim_id + " n=" + std::to_string(r.n) + " " + r.details.dump());
  }
  void require_range(const std::string& claim, int lo, int hi) {
    for (int n = lo; n <= hi && pass; ++n) require_report(check(claim, n));
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no runtime bound
  std::function<void(Verdict&)> body;
};

void matrices_equal(Verdict& v, const LabeledIntMatrix& expected, const LabeledIntMatrix& actual, const char* name) {
  auto diff = compare_matrices(expected, actual);
  v.require(!diff, std::string(name) + " " + (diff ? diff->dump() : ""));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden A_3, A_4 (reference label order)", 1.0,
       [](Verdict& v) {
         matrices_equal(v, golden::A3().to_matrix(), build_A(3, LabelOrder::paper), "A_3");
         matrices_equal(v, golden::A4().to_matrix(), build_A(4, LabelOrder::paper), "A_4");
       }},
      {2, "golden tA_3 A_3, tA_4 A_4", 1.0,
       [](Verdict& v) {
         matrices_equal(v, golden::AtA3().to_matrix(), cartan_like(3, LabelOrder::paper), "tA_3 A_3");
         matrices_equal(v, golden::AtA4().to_matrix(), cartan_like(4, LabelOrder::paper), "tA_4 A_4");
       }},
      {3, "k_n table for n = 1..8, both formulas", 5.0,
       [](Verdict& v) {
         for (int n = 1; n <= 8; ++n) {
           auto [a, b] = k_value_formulas(n);
           long want = golden::k_table()[n - 1];
           v.require(a == want && b == want, "k_" + std::to_string(n) + ": " + std::to_string(a) + " / " +
                                                 std::to_string(b) + " vs " + std::to_string(want));
         }
       }},
      {4, "|det A_n| = 2^{k_n} for n <= 10", 120.0, [](Verdict& v) { v.require_range("thm-4.6", 1, 10); }},
      {5, "A_n integral for n <= 10, combinatorial route equal for n <= 8", 0,
       [](Verdict& v) {
         VerifyConfig c;
         v.require(c.cap("thm-4.3/route") >= 8, "route cap below 8");
         v.require_range("thm-4.3", 1, 10);
       }},
      {6, "<W,V>_{-1} = identity and Cauchy kernel expansions for n <= 8", 0,
       [](Verdict& v) {
         v.require_range("cor-4.2", 1, 8);
         v.require_range("prop-4.1", 1, 8);
       }},
      {7, "SNF(G_n) = {2^{l(glaisher)-l}} for n <= 10", 0,
       [](Verdict& v) { v.require_range("thm-4.5-via-formula", 1, 10); }},
      {8, "block determinants and block-diagonality of tA_n A_n for n <= 8", 0,
       [](Verdict& v) { v.require_range("thm-4.8", 1, 8); }},
      {9, "length-sum identities for n <= 14, global and per class", 0,
       [](Verdict& v) { v.require_range("prop-3.1", 1, 14); }},
      {10, "h-abacus round trip (n <= 20), correspondence counts (n <= 10), worked example", 0,
       [](Verdict& v) {
         v.require_range("habacus-bijection", 1, 20);
         v.require_range("eta-correspondence", 1, 10);
         golden::AbacusFixture f;
         auto d = h_abacus_decompose(f.lambda);
         v.require(d.core == f.core && d.shifted0 == f.shifted0 && d.quotient1 == f.quotient1,
                   "worked example decomposes to " + d.core.to_string() + "; " + d.shifted0.to_string() + ", " +
                       d.quotient1.to_string());
       }},
      {11, "Stembridge structure, 2-sign oracle, Frobenius, entry-wise tA A, Q' identities", 0,
       [](Verdict& v) {
         v.require_range("stembridge-structure", 1, 10);
         v.require_range("two-sign-oracle", 1, 5);
         v.require_range("frobenius", 1, 8);
         v.require_range("prop-4.9", 1, 8);
         v.require_range("qprime-kostka", 1, 8);
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0) v.require(secs < c.limit_s, "runtime " + std::to_string(secs) + " s over limit");
    failures += !v.pass;
    std::printf("[%s] criterion %2d: %s (%.3f s%s)%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "",
                v.pass ? "" : " -- ", v.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
