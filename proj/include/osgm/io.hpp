#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "osgm/aomoto.hpp"
#include "osgm/arrangement.hpp"
#include "osgm/error.hpp"
#include "osgm/gauss_manin.hpp"
#include "osgm/matrix.hpp"
#include "osgm/orlik_solomon.hpp"
#include "osgm/polynomial.hpp"
#include "osgm/rational.hpp"
#include "osgm/subset.hpp"

namespace osgm::io {

using json = nlohmann::json;

inline json to_json(const Rational& x) { return x.get_str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  throw ValidationError("expected a rational string, got " + j.dump());
}

inline json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coefficient", c.get_str()}, {"exponents", e}});
  return terms;
}

/// nvars is used when the record list is empty.
inline Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw ValidationError("polynomial must be an array of term records");
  Polynomial p(nvars);
  for (const auto& t : j) {
    auto e = t.at("exponents").get<Exponents>();
    if (e.size() != nvars) throw ValidationError("exponent vector has wrong length");
    p.add_term(e, rational_from_json(t.at("coefficient")));
  }
  return p;
}

inline json to_json(Subset s) { return s.elements(); }
inline Subset subset_from_json(const json& j) { return Subset::from_elements(j.get<std::vector<int>>()); }

template <class C>
json to_json(const Combination<C>& x) {
  json out = json::array();
  for (const auto& [s, c] : x) out.push_back({{"monomial", s.elements()}, {"coeff", to_json(c)}});
  return out;
}

inline Combination<Rational> rational_element_from_json(const json& j) {
  Combination<Rational> x;
  for (const auto& t : j) accumulate(x, subset_from_json(t.at("monomial")), rational_from_json(t.at("coeff")));
  return x;
}

inline Combination<Polynomial> polynomial_element_from_json(const json& j, std::size_t nvars) {
  Combination<Polynomial> x;
  for (const auto& t : j) accumulate(x, subset_from_json(t.at("monomial")), polynomial_from_json(t.at("coeff"), nvars));
  return x;
}

template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (const auto& x : m.row(i)) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline RationalMatrix rational_matrix_from_json(const json& j) {
  std::size_t cols = j.empty() ? 0 : j[0].size();
  RationalMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != cols) throw ValidationError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

inline PolynomialMatrix polynomial_matrix_from_json(const json& j, std::size_t nvars) {
  std::size_t cols = j.empty() ? 0 : j[0].size();
  PolynomialMatrix m(j.size(), cols, Polynomial(nvars));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != cols) throw ValidationError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = polynomial_from_json(j[i][k], nvars);
  }
  return m;
}

/// { "ell": int, "n": int, "rows": [["b0", ..., "bell"], ...] }
inline json to_json(const Arrangement& a) {
  json rows = json::array();
  for (const auto& r : a.rows()) {
    json jr = json::array();
    for (const auto& x : r) jr.push_back(x.get_str());
    rows.push_back(std::move(jr));
  }
  return {{"ell", a.ell()}, {"n", a.n()}, {"rows", rows}};
}

inline Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("arrangement must be a JSON object");
  for (const char* key : {"ell", "n", "rows"}) {
    if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  }
  if (!j["ell"].is_number_integer()) throw ValidationError("field 'ell' must be an integer");
  if (!j["n"].is_number_integer()) throw ValidationError("field 'n' must be an integer");
  if (!j["rows"].is_array()) throw ValidationError("field 'rows' must be an array");
  int ell = j["ell"].get<int>();
  int n = j["n"].get<int>();
  if (static_cast<int>(j["rows"].size()) != n) {
    throw ValidationError("field 'n' is " + std::to_string(n) + " but 'rows' has " + std::to_string(j["rows"].size()) +
                          " entries");
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    const auto& jr = j["rows"][i];
    if (!jr.is_array()) throw ValidationError("row " + std::to_string(i + 1) + ": not an array");
    Vector r;
    for (std::size_t k = 0; k < jr.size(); ++k) {
      try {
        r.push_back(rational_from_json(jr[k]));
      } catch (const ValidationError& e) {
        throw ValidationError("row " + std::to_string(i + 1) + ", entry " + std::to_string(k) + ": " + e.what());
      }
    }
    rows.push_back(std::move(r));
  }
  return Arrangement(ell, std::move(rows));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline Arrangement read_arrangement(const std::string& path) {
  try {
    return arrangement_from_json(read_json_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

/// "a/b,c/d,..." (blanks allowed around entries).
inline Weights parse_weights(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw ValidationError("empty weight list");
  return Weights(std::move(v));
}

inline json to_json(const Weights& w) {
  json a = json::array();
  for (const auto& x : w.values()) a.push_back(x.get_str());
  return {{"weights", a}};
}

/// { "weights": ["1/2", ...] }
inline Weights weights_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array()) {
    throw ValidationError("weights file must be an object with a 'weights' array");
  }
  std::vector<Rational> v;
  for (const auto& x : j["weights"]) v.push_back(rational_from_json(x));
  return Weights(std::move(v));
}

/// Coordinates on an nbc basis as an element of A(T).
inline Combination<Rational> as_element(const Vector& coords, const std::vector<Subset>& basis) {
  Combination<Rational> x;
  for (std::size_t i = 0; i < coords.size(); ++i) accumulate(x, basis.at(i), coords[i]);
  return x;
}

inline Vector as_coordinates(const Combination<Rational>& x, const std::vector<Subset>& basis) {
  Vector v(basis.size(), Rational(0));
  for (const auto& [s, c] : x) {
    auto it = std::find(basis.begin(), basis.end(), s);
    if (it == basis.end()) throw ValidationError("monomial " + s.to_string() + " is not a basis element");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

/// Per degree: { "dim": int, "representatives": [OSElement] }.
inline json to_json(const CohomologyData& h, const AomotoComplex& complex) {
  json out = json::array();
  for (const auto& d : h.degrees) {
    json reps = json::array();
    for (const auto& r : d.representatives) reps.push_back(to_json(as_element(r, complex.basis(d.degree))));
    out.push_back({{"degree", d.degree}, {"dim", d.dim()}, {"representatives", reps}});
  }
  return out;
}

/// Representatives per degree, as coordinates on the nbc basis.
inline std::vector<std::vector<Vector>> representatives_from_json(const json& j, const AomotoComplex& complex) {
  std::vector<std::vector<Vector>> out;
  for (const auto& d : j) {
    int q = d.at("degree").get<int>();
    std::vector<Vector> reps;
    for (const auto& r : d.at("representatives")) reps.push_back(as_coordinates(rational_element_from_json(r), complex.basis(q)));
    if (reps.size() != d.at("dim").get<std::size_t>()) throw ValidationError("dim does not match representative count");
    out.push_back(std::move(reps));
  }
  return out;
}

/// Per degree: { "degree": q, "basis": [[...]], "matrix": [[poly]] }.
inline json to_json(const ChainEndomorphism& e) {
  json out = json::array();
  for (int q = 0; q <= e.ell; ++q) {
    json basis = json::array();
    for (Subset s : e.bases[q]) basis.push_back(s.elements());
    out.push_back({{"degree", q}, {"basis", basis}, {"matrix", to_json(e.blocks[q])}});
  }
  return out;
}

inline ChainEndomorphism endomorphism_from_json(const json& j, int n) {
  ChainEndomorphism e;
  e.n = n;
  e.ell = static_cast<int>(j.size()) - 1;
  for (const auto& d : j) {
    std::vector<Subset> basis;
    for (const auto& s : d.at("basis")) basis.push_back(subset_from_json(s));
    e.bases.push_back(std::move(basis));
    e.blocks.push_back(polynomial_matrix_from_json(d.at("matrix"), static_cast<std::size_t>(n)));
  }
  return e;
}

inline json to_json(const SpectrumReport& r) {
  json j = {{"lambda_S", r.lambda_s.get_str()}, {"d0", r.d0}, {"dS", r.ds}, {"verified", r.verified}};
  if (!r.applicable) j["note"] = "spectrum theorem inapplicable: lambda_S = 0";
  return j;
}

inline SpectrumReport spectrum_report_from_json(const json& j) {
  SpectrumReport r;
  r.lambda_s = rational_from_json(j.at("lambda_S"));
  r.d0 = j.at("d0").get<long long>();
  r.ds = j.at("dS").get<long long>();
  r.verified = j.at("verified").get<bool>();
  r.applicable = !j.contains("note");
  return r;
}

}  // namespace osgm::io
