#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "compound/int_matrix.hpp"
#include "compound/partition.hpp"
#include "compound/symfunc.hpp"
#include "compound/transition.hpp"

namespace compound {

using Json = nlohmann::ordered_json;

// ---- partitions and labels -------------------------------------------------

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

inline Json to_json(const PartitionPair& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

inline Json to_json(const Label& label) {
  return std::visit([](const auto& l) { return to_json(l); }, label);
}

/// A label is a flat integer array (partition) or an array of two arrays (pair).
inline Label label_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("label JSON must be an array");
  if (j.size() == 2 && j[0].is_array() && j[1].is_array()) {
    return PartitionPair{partition_from_json(j[0]), partition_from_json(j[1])};
  }
  return partition_from_json(j);
}

// ---- symmetric functions ----------------------------------------------------

/// Coordinates a SymFunc is displayed in. `x` is the native power-sum form;
/// the t-conventions substitute p_j = j t_j (Schur side) or p_j = ½ j t_j
/// (Q side) and list coefficients of the monomials t_ρ = t_{ρ1} t_{ρ2} ...
enum class VarConvention { x, t_schur, t_q };

inline VarConvention parse_var_convention(const std::string& s) {
  if (s == "x") return VarConvention::x;
  if (s == "t-schur") return VarConvention::t_schur;
  if (s == "t-q") return VarConvention::t_q;
  throw std::invalid_argument("unknown variable convention '" + s + "' (expected x, t-schur or t-q)");
}

inline SymFunc to_display(const SymFunc& f, VarConvention vars) {
  if (vars == VarConvention::x) return f;
  const bool half = vars == VarConvention::t_q;
  return f.substitute(1, [half](int j) { return half ? Rational(j, 2) : Rational(j); });
}

inline Json to_json(const SymFunc& f) {
  Json out = Json::array();
  for (const auto& [rho, c] : f.terms()) {
    out.push_back({{"key", to_json(rho)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return out;
}

inline SymFunc symfunc_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("SymFunc JSON must be an array");
  SymFunc f;
  for (const auto& term : j) {
    Rational c(Integer(term.at("num").get<std::string>()), Integer(term.at("den").get<std::string>()));
    c.canonicalize();
    f.add_term(partition_from_json(term.at("key")), c);
  }
  return f;
}

/// Text form; in t-conventions the monomials are printed as t-variables.
inline std::string to_text(const SymFunc& f, VarConvention vars) {
  std::string s = to_display(f, vars).to_string();
  if (vars == VarConvention::x) return s;
  for (auto& ch : s) {
    if (ch == 'p') ch = 't';
  }
  return s;
}

// ---- matrices ---------------------------------------------------------------

inline Json to_json(const LabeledIntMatrix& m) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const auto& l : m.row_labels) rows.push_back(to_json(l));
  for (const auto& l : m.col_labels) cols.push_back(to_json(l));
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    entries.push_back(std::move(r));
  }
  return {{"n", m.n}, {"row_labels", rows}, {"col_labels", cols}, {"entries", entries}};
}

inline LabeledIntMatrix matrix_from_json(const Json& j) {
  LabeledIntMatrix m;
  m.n = j.at("n").get<int>();
  for (const auto& l : j.at("row_labels")) m.row_labels.push_back(label_from_json(l));
  for (const auto& l : j.at("col_labels")) m.col_labels.push_back(label_from_json(l));
  for (const auto& row : j.at("entries")) {
    std::vector<Integer> r;
    for (const auto& e : row) r.emplace_back(e.get<std::string>());
    m.entries.push_back(std::move(r));
  }
  m.check_shape();
  return m;
}

/// Annotates a pair-labelled square matrix with its (n0, n1) diagonal blocks.
inline Json block_annotation(const LabeledIntMatrix& m) {
  Json out = Json::array();
  for (const auto& [key, block] : split_blocks(m)) {
    Json labels = Json::array();
    for (const auto& l : block.row_labels) labels.push_back(to_json(l));
    out.push_back({{"n0", key.first}, {"n1", key.second}, {"labels", labels},
                   {"det", determinant(block).get_str()}});
  }
  return out;
}

/// Entries only, one row per line.
inline std::string to_csv(const LabeledIntMatrix& m) {
  std::string s;
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ',';
      s += row[j].get_str();
    }
    s += '\n';
  }
  return s;
}

/// Compact partition notation: 21^2 for (2,1,1); comma-separated when a part exceeds 9.
inline std::string latex_partition(const Partition& p) {
  if (p.empty()) return "\\emptyset";
  const bool wide = p.largest() > 9;
  std::string s;
  for (std::size_t i = 0; i < p.parts().size();) {
    std::size_t j = i;
    while (j < p.parts().size() && p[j] == p[i]) ++j;
    if (wide && !s.empty()) s += ',';
    s += std::to_string(p[i]);
    if (const std::string e = std::to_string(j - i); j - i > 1) s += e.size() > 1 ? "^{" + e + "}" : "^" + e;
    i = j;
  }
  return s;
}

inline std::string latex_label(const Label& label) {
  if (const auto* p = std::get_if<Partition>(&label)) return "(" + latex_partition(*p) + ")";
  const auto& pair = std::get<PartitionPair>(label);
  return "(" + latex_partition(pair.first) + "," + latex_partition(pair.second) + ")";
}

inline std::string to_latex(const LabeledIntMatrix& m) {
  std::ostringstream os;
  os << "\\bordermatrix{\n  ";
  for (const auto& c : m.col_labels) os << " & " << latex_label(c);
  os << " \\cr\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  " << latex_label(m.row_labels[i]);
    for (const auto& e : m.entries[i]) os << " & " << e.get_str();
    os << (i + 1 < m.rows() ? "\\cr\n" : "}\n");
  }
  if (m.rows() == 0) os << "}\n";
  return os.str();
}

}  // namespace compound
