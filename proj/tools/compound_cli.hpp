#pragma once

// Command implementations for the `compound` executable, kept in a header so
// the test suite can drive them in-process.

#include <openssl/sha.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "compound/compound.hpp"

namespace compound::cli {

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  std::string hex;
  char buf[3];
  for (unsigned char b : digest) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    hex += buf;
  }
  return hex;
}

/// Content-addressed store of serialized matrices. A file is named by the
/// hash of its key and holds {key, checksum, payload}; entries whose key or
/// checksum do not match are ignored and rewritten.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("COMPOUND_CACHE_DIR"); env && *env) return env;
    return ".compound-cache";
  }

  static std::string key(const std::string& kind, int n, LabelOrder order) {
    return kind + "/n=" + std::to_string(n) + "/order=" + (order == LabelOrder::paper ? "paper" : "canonical") +
           "/v=" + std::to_string(golden::kGoldenVersion);
  }

  std::filesystem::path path_for(const std::string& key) const { return dir_ / (sha256_hex(key) + ".json"); }

  std::optional<LabeledIntMatrix> load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
      Json entry = Json::parse(in);
      const std::string payload = entry.at("payload").get<std::string>();
      if (entry.at("key").get<std::string>() != key || entry.at("checksum").get<std::string>() != sha256_hex(payload)) {
        return std::nullopt;
      }
      return matrix_from_json(Json::parse(payload));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const LabeledIntMatrix& m) const {
    std::filesystem::create_directories(dir_);
    const std::string payload = to_json(m).dump();
    Json entry = {{"key", key}, {"checksum", sha256_hex(payload)}, {"payload", payload}};
    const auto target = path_for(key);
    const auto tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << entry.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path dir_;
};

/// Fills the Schur memo for all λ ⊢ n using `jobs` threads.
inline void warm_schur(int n, int jobs) {
  if (jobs <= 1) return;
  const auto parts = generate_partitions(n);
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < parts.size();) schur(parts[i]);
    });
  }
}

inline LabeledIntMatrix compute_matrix(const std::string& kind, int n, LabelOrder order) {
  if (kind == "A") return build_A(n, order);
  if (kind == "Gamma") return build_Gamma(n, order);
  if (kind == "G") return gram_G(n, order);
  if (kind == "AtA") return cartan_like(n, order);
  throw std::invalid_argument("unknown matrix kind '" + kind + "' (expected A, Gamma, G, AtA or block)");
}

inline LabeledIntMatrix obtain_matrix(const std::string& kind, int n, LabelOrder order,
                                      const std::optional<MatrixCache>& cache) {
  if (!cache) return compute_matrix(kind, n, order);
  const auto key = MatrixCache::key(kind, n, order);
  if (auto hit = cache->load(key)) return *hit;
  auto m = compute_matrix(kind, n, order);
  cache->store(key, m);
  return m;
}

inline std::string emit_matrix(const LabeledIntMatrix& m, const std::string& format, const Json* extra = nullptr) {
  if (format == "csv") return to_csv(m);
  if (format == "latex") return to_latex(m);
  Json j = to_json(m);
  if (extra) j["blocks"] = *extra;
  return j.dump() + "\n";
}

inline LabelOrder parse_order(const std::string& s) {
  if (s == "canonical") return LabelOrder::canonical;
  if (s == "paper") return LabelOrder::paper;
  throw std::invalid_argument("unknown order '" + s + "' (expected canonical or paper)");
}

inline Json decompose(const std::string& map, const Partition& lambda) {
  Json out = {{"map", map}, {"input", to_json(lambda)}};
  if (map == "phi") {
    out["image"] = to_json(phi(lambda));
  } else if (map == "psi") {
    out["image"] = to_json(psi(lambda));
  } else if (map == "glaisher") {
    out["image"] = to_json(glaisher(lambda));
  } else if (map == "glaisher-inverse") {
    out["image"] = to_json(glaisher_inverse(lambda));
  } else if (map == "habacus") {
    const auto d = h_abacus_decompose(lambda);
    out["core"] = to_json(d.core);
    out["shifted0"] = to_json(d.shifted0);
    out["quotient1"] = to_json(d.quotient1);
    out["charge"] = d.charge;
  } else if (map == "2quot") {
    const auto q = two_core_quotient(lambda);
    out["core"] = to_json(q.core2);
    out["q0"] = to_json(q.q0);
    out["q1"] = to_json(q.q1);
    out["sign"] = q.sign;
  } else {
    throw std::invalid_argument("unknown map '" + map + "' (expected phi, psi, glaisher, glaisher-inverse, habacus or 2quot)");
  }
  return out;
}

inline SymFunc expand(const std::string& family, const Partition& lambda) {
  if (family == "p") return p_monomial(lambda);
  if (family == "h") return complete_h_product(lambda);
  if (family == "S") return schur(lambda);
  if (family == "Q") return schur_Q(lambda);
  if (family == "P") return schur_P(lambda);
  if (family == "W") return W_basis(lambda);
  if (family == "V") return V_basis(lambda);
  if (family == "Qprime") return q_prime(lambda);
  throw std::invalid_argument("unknown family '" + family + "' (expected p, h, S, Q, P, W, V or Qprime)");
}

/// Runs the command line; returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compound basis of symmetric functions: transition matrices, bijections, verification"};
  app.require_subcommand(1);

  std::string order_name = "canonical", format = "json", expand_format = "text", vars = "x";
  int n = 0, jobs = 1, max_n = 8;
  bool use_cache = false;

  auto* matrix = app.add_subcommand("matrix", "emit A, Gamma, G, AtA or one diagonal block of AtA");
  std::string kind;
  std::vector<int> block;
  matrix->add_option("kind", kind, "A | Gamma | G | AtA | block")->required();
  matrix->add_option("--n", n, "weight")->required();
  matrix->add_option("--block", block, "n0 n1 (kind=block)")->expected(2);
  matrix->add_option("--format", format, "json | csv | latex");
  matrix->add_option("--order", order_name, "canonical | paper");
  matrix->add_flag("--cache", use_cache, "reuse matrices from the cache directory");
  matrix->add_option("--jobs", jobs, "worker threads");

  auto* decomp = app.add_subcommand("decompose", "apply a partition bijection");
  std::string map, partition_text;
  decomp->add_option("map", map, "phi | psi | glaisher | glaisher-inverse | habacus | 2quot")->required();
  decomp->add_option("partition", partition_text, "e.g. 5^3,4^4,2^7,1")->required();

  auto* verify = app.add_subcommand("verify", "check claims; exit 0 iff all pass");
  std::vector<std::string> claims;
  std::string caps_file;
  verify->add_option("claims", claims, "claim ids or 'all'");
  verify->add_option("--max-n", max_n, "largest weight");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--caps", caps_file, "JSON object of per-claim caps")->check(CLI::ExistingFile);

  auto* exp = app.add_subcommand("expand", "print a symmetric function in power sums");
  std::string family;
  exp->add_option("family", family, "p | h | S | Q | P | W | V | Qprime")->required();
  exp->add_option("partition", partition_text, "e.g. 2,1")->required();
  exp->add_option("--vars", vars, "x | t-schur | t-q");
  exp->add_option("--format", expand_format, "text | json");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*matrix) {
      const auto order = parse_order(order_name);
      if (format != "json" && format != "csv" && format != "latex") {
        throw std::invalid_argument("unknown format '" + format + "' (expected json, csv or latex)");
      }
      std::optional<MatrixCache> cache;
      if (use_cache) cache.emplace(MatrixCache::default_dir());
      if (n >= 1) warm_schur(n, jobs);
      if (kind == "block") {
        if (block.size() != 2) throw std::invalid_argument("kind=block needs --block n0 n1");
        if (block[0] < 0 || block[1] < 0 || block[0] + 2 * block[1] != n) {
          throw std::invalid_argument("invalid block (" + std::to_string(block[0]) + "," + std::to_string(block[1]) +
                                      "): need n0 + 2 n1 = n with n0, n1 >= 0");
        }
        auto parts = split_blocks(obtain_matrix("AtA", n, order, cache));
        auto it = parts.find({block[0], block[1]});
        if (it == parts.end()) throw std::invalid_argument("block is empty at this n");
        out << emit_matrix(it->second, format);
      } else {
        const auto m = obtain_matrix(kind, n, order, cache);
        if (kind == "AtA" && format == "json") {
          const Json blocks_json = block_annotation(m);
          out << emit_matrix(m, format, &blocks_json);
        } else {
          out << emit_matrix(m, format);
        }
      }
      return 0;
    }
    if (*decomp) {
      out << decompose(map, parse_partition(partition_text)).dump() << '\n';
      return 0;
    }
    if (*exp) {
      const SymFunc f = expand(family, parse_partition(partition_text));
      const auto convention = parse_var_convention(vars);
      if (expand_format == "json") {
        out << to_json(to_display(f, convention)).dump() << '\n';
      } else if (expand_format == "text") {
        out << to_text(f, convention) << '\n';
      } else {
        throw std::invalid_argument("unknown format '" + expand_format + "' (expected text or json)");
      }
      return 0;
    }
    if (*verify) {
      VerifyConfig config;
      if (!caps_file.empty()) {
        std::ifstream in(caps_file);
        config.merge(Json::parse(in));
      }
      if (std::find(claims.begin(), claims.end(), "all") != claims.end()) claims.clear();
      bool ok = true;
      for (const auto& report : check_all(max_n, jobs, config, claims)) {
        out << report.to_json().dump() << '\n';
        ok = ok && report.passed();
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace compound::cli
