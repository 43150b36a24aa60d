#pragma once

// JSON and text formats. Exact numbers go out as JSON integers when they fit
// in 64 bits and as strings ("-3", "7/2") otherwise; both forms are read back.

#include "pbwdegen/core.hpp"
#include "pbwdegen/degrees.hpp"
#include "pbwdegen/fflv.hpp"
#include "pbwdegen/ideals.hpp"
#include "pbwdegen/tableaux.hpp"
#include "pbwdegen/tropical.hpp"
#include "pbwdegen/weights.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace pbwdegen::io {

using nlohmann::json;

inline json exact(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline json exact(const Rational& q) {
  if (q.get_den() == 1) return exact(Integer(q.get_num()));
  return q.get_str();
}

inline Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidInput("expected an integer or a rational string, got " + v.dump());
}

inline Integer integer_from_json(const json& v) {
  const Rational q = rational_from_json(v);
  if (q.get_den() != 1) throw InvalidInput("expected an integer, got " + v.dump());
  return Integer(q.get_num());
}

inline int int_from_json(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return v.get<int>();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(origin + ": malformed JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Weight systems.

inline json to_json(const WeightSystem& A) {
  json a = json::object();
  for (const auto& [i, j] : all_pairs(A.n())) a[pair_key(i, j)] = exact(A.at(i, j));
  return json{{"n", A.n()}, {"a", a}};
}

inline WeightSystem weights_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("a")) {
    throw InvalidInput("weight system JSON needs keys \"n\" and \"a\"");
  }
  const int n = int_from_json(doc.at("n"), "n");
  if (n < 2) throw InvalidInput("weight system needs n >= 2");
  const json& a = doc.at("a");
  if (!a.is_object()) throw InvalidInput("\"a\" must be an object");
  WeightSystem A(n);
  std::set<RootPair> seen;
  for (const auto& [key, v] : a.items()) {
    const RootPair p = parse_pair_key(key, n);
    if (!seen.insert(p).second) throw InvalidInput("duplicate pair " + key);
    A.set(p.i, p.j, integer_from_json(v));
  }
  if (seen.size() != pair_count(n)) {
    throw InvalidInput("weight system needs all " + std::to_string(pair_count(n)) + " entries a_{i,j}");
  }
  return A;
}

/// Number triangle, one row per difference j-i: row r lists a_{1,1+r}, ...,
/// a_{n-r,n}, indented by r-1 columns.
template <class Entry>
std::string triangle_text(int n, Entry entry) {
  std::vector<std::vector<std::string>> rows;
  std::size_t width = 1;
  for (int r = 1; r < n; ++r) {
    std::vector<std::string> row;
    for (int i = 1; i + r <= n; ++i) {
      row.push_back(entry(i, i + r));
      width = std::max(width, row.back().size());
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << std::string(r * (width + 1) / 2, ' ');
    for (std::size_t t = 0; t < rows[r].size(); ++t) {
      if (t) os << ' ';
      os << std::setw(static_cast<int>(width)) << rows[r][t];
    }
    os << '\n';
  }
  return os.str();
}

inline std::string to_text(const WeightSystem& A) {
  return triangle_text(A.n(), [&](int i, int j) { return A.at(i, j).get_str(); });
}

/// Inverse of to_text: whitespace-separated integers, row r holding n-r entries.
inline WeightSystem weights_from_text(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<Integer> row;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      row.push_back(parse_integer(tok));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInput("empty weight triangle");
  const int n = static_cast<int>(rows.front().size()) + 1;
  if (static_cast<int>(rows.size()) != n - 1) throw InvalidInput("weight triangle needs n-1 rows");
  WeightSystem A(n);
  for (int r = 1; r < n; ++r) {
    if (static_cast<int>(rows[r - 1].size()) != n - r) {
      throw InvalidInput("weight triangle row " + std::to_string(r) + " needs " + std::to_string(n - r) + " entries");
    }
    for (int i = 1; i + r <= n; ++i) A.set(i, i + r, rows[r - 1][static_cast<std::size_t>(i - 1)]);
  }
  return A;
}

/// JSON object or text triangle, by the first non-blank character.
inline WeightSystem weights_from_string(const std::string& text, const std::string& origin) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return weights_from_json(parse_json(text, origin));
  return weights_from_text(text);
}

inline json to_json(const FaceSignature& sig) {
  json b = json::array();
  for (const auto& [i, j] : sig.tight_b) b.push_back({i, j});
  return json{{"tight_a", sig.tight_a}, {"tight_b", b}};
}

// ---------------------------------------------------------------------------
// Gradings, patterns, tableaux.

inline json to_json(const GradingVector& g) {
  json out = json::object();
  for (const auto& [I, v] : g.values()) out[I.key()] = exact(v);
  return out;
}

inline json to_json(const TrianglePattern& T) {
  json t = json::object();
  for (const auto& [i, j] : all_pairs(T.n())) t[pair_key(i, j)] = T.at(i, j);
  return json{{"n", T.n()}, {"t", t}};
}

inline TrianglePattern pattern_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("t")) {
    throw InvalidInput("pattern JSON needs keys \"n\" and \"t\"");
  }
  const int n = int_from_json(doc.at("n"), "n");
  TrianglePattern T(n);
  for (const auto& [key, v] : doc.at("t").items()) {
    const RootPair p = parse_pair_key(key, n);
    T.set(p.i, p.j, int_from_json(v, "pattern entry"));
  }
  return T;
}

inline std::string to_text(const TrianglePattern& T) {
  return triangle_text(T.n(), [&](int i, int j) { return std::to_string(T.at(i, j)); });
}

inline json to_json(const DominantWeight& w) { return json{{"n", w.n()}, {"coeffs", w.coeffs()}}; }

inline json to_json(const PBWTableau& Y) {
  return json{{"n", Y.n()}, {"shape", Y.shape().coeffs()}, {"columns", Y.columns()}};
}

inline PBWTableau tableau_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("shape") || !doc.contains("columns")) {
    throw InvalidInput("tableau JSON needs keys \"n\", \"shape\" and \"columns\"");
  }
  try {
    const int n = int_from_json(doc.at("n"), "n");
    return PBWTableau(DominantWeight(n, doc.at("shape").get<std::vector<int>>()),
                      doc.at("columns").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed tableau: ") + e.what());
  }
}

inline std::string to_text(const PBWTableau& Y) {
  std::ostringstream os;
  const auto& cols = Y.columns();
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols.size() && r < cols[c].size(); ++c) os << (c ? " " : "") << cols[c][r];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomials in Plücker variables.

inline json to_json(const Monomial& m) {
  json out = json::array();
  for (const auto& I : m.factors()) out.push_back(I.elems());
  return out;
}

inline json to_json(const Polynomial& f) {
  json out = json::array();
  for (const auto& [m, c] : f) out.push_back(json{{"coeff", exact(c)}, {"monomial", to_json(m)}});
  return out;
}

inline Polynomial polynomial_from_json(const json& doc, int n) {
  if (!doc.is_array()) throw InvalidInput("polynomial JSON must be a list of terms");
  Polynomial f;
  for (const auto& term : doc) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial")) {
      throw InvalidInput("polynomial term needs \"coeff\" and \"monomial\"");
    }
    std::vector<PlueckerIndex> factors;
    try {
      for (const auto& e : term.at("monomial")) factors.emplace_back(n, e.get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("malformed monomial: ") + e.what());
    }
    auto [it, ins] = f.try_emplace(Monomial(std::move(factors)), 0);
    it->second += rational_from_json(term.at("coeff"));
    if (sgn(it->second) == 0) f.erase(it);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Tropical points: {"n": n, "s": {...}} or a bare map over index keys, in
// which case n is recovered from the 2^n - 2 entries.

inline json to_json(const TropicalPoint& s) {
  json m = json::object();
  for (const auto& [I, v] : s.values()) m[I.key()] = exact(v);
  return json{{"n", s.n()}, {"s", m}};
}

inline TropicalPoint point_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("tropical point JSON must be an object");
  int n = 0;
  const json* map = &doc;
  if (doc.contains("s")) {
    if (!doc.contains("n")) throw InvalidInput("tropical point with \"s\" also needs \"n\"");
    n = int_from_json(doc.at("n"), "n");
    map = &doc.at("s");
  } else {
    for (int m = 2; m <= 30; ++m)
      if (doc.size() == (std::size_t{1} << m) - 2) n = m;
    if (n == 0) throw InvalidInput("tropical point needs 2^n - 2 coordinates");
  }
  TropicalPoint s(n);
  std::set<PlueckerIndex> seen;
  for (const auto& [key, v] : map->items()) {
    PlueckerIndex I = parse_index_key(key, n);
    if (!seen.insert(I).second) throw InvalidInput("duplicate coordinate " + key);
    s.set(I, rational_from_json(v));
  }
  if (seen.size() != s.values().size()) throw InvalidInput("tropical point is missing coordinates");
  return s;
}

}  // namespace pbwdegen::io
