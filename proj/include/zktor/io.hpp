#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zktor/complexes.hpp"
#include "zktor/lambda.hpp"
#include "zktor/moment_angle.hpp"
#include "zktor/poincare.hpp"
#include "zktor/vertex_set.hpp"

namespace zktor {

/// Raised for malformed input documents; the message carries enough position
/// information to point at the offending element.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed problem input: the vertex count, the complement or the complex
/// (exactly one of the two was present), and optionally a monomial generator
/// system for resolution sweeps.
struct InputDocument {
  int m = 0;
  std::optional<SimplicialComplement> complement;
  std::optional<SimplicialComplex> complex;
  std::optional<GeneratorSystem> generators;

  /// The complement, deriving it from the facet form when necessary.
  SimplicialComplement as_complement() const {
    if (complement) return *complement;
    return complement_from_complex(*complex);
  }

  /// The complex, deriving it from the complement when necessary.
  SimplicialComplex as_complex() const {
    if (complex) return *complex;
    return complex_from_complement(*complement);
  }
};

namespace detail {

inline std::vector<int> int_list(const nlohmann::json& j,
                                 const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be a list");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError(where + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline VertexSet vertex_set(const nlohmann::json& j, int m,
                            const std::string& where) {
  std::vector<int> members = int_list(j, where);
  for (int v : members)
    if (v < 1 || v > m)
      throw ParseError(where + ": vertex " + std::to_string(v) +
                       " outside 1.." + std::to_string(m));
  try {
    return VertexSet::from_members(m, members);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace detail

inline InputDocument parse_input_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("input document must be an object");
  if (!j.contains("m") || !j.at("m").is_number_integer())
    throw ParseError("input document needs an integer \"m\"");
  InputDocument doc;
  doc.m = j.at("m").get<int>();
  if (doc.m < 0 || doc.m > 64)
    throw ParseError("\"m\" must be between 0 and 64");

  bool has_complement = j.contains("complement");
  bool has_facets = j.contains("facets");
  if (has_complement == has_facets)
    throw ParseError(
        "input document needs exactly one of \"complement\" or \"facets\"");

  if (has_complement) {
    const auto& arr = j.at("complement");
    if (!arr.is_array()) throw ParseError("\"complement\" must be a list");
    std::vector<VertexSet> gens;
    for (std::size_t i = 0; i < arr.size(); ++i)
      gens.push_back(detail::vertex_set(
          arr[i], doc.m, "complement[" + std::to_string(i) + "]"));
    doc.complement = SimplicialComplement(doc.m, std::move(gens));
  } else {
    const auto& arr = j.at("facets");
    if (!arr.is_array()) throw ParseError("\"facets\" must be a list");
    std::vector<VertexSet> facets;
    for (std::size_t i = 0; i < arr.size(); ++i)
      facets.push_back(detail::vertex_set(
          arr[i], doc.m, "facets[" + std::to_string(i) + "]"));
    doc.complex = SimplicialComplex(doc.m, std::move(facets));
  }

  if (j.contains("generators")) {
    const auto& arr = j.at("generators");
    if (!arr.is_array()) throw ParseError("\"generators\" must be a list");
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::vector<int> e = detail::int_list(
          arr[i], "generators[" + std::to_string(i) + "]");
      if (static_cast<int>(e.size()) != doc.m)
        throw ParseError("generators[" + std::to_string(i) + "] must have " +
                         std::to_string(doc.m) + " exponents");
      for (int x : e)
        if (x < 0)
          throw ParseError("generators[" + std::to_string(i) +
                           "]: exponents must be nonnegative");
      gens.push_back(ExponentVector(std::move(e)));
    }
    try {
      doc.generators = GeneratorSystem(doc.m, std::move(gens));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("generators: ") + e.what());
    }
  }
  return doc;
}

/// {"pairs": [{"X": [...], "A": [...]}, ...]}, one record per vertex; each
/// list holds the ascending coefficients of the reduced-cohomology series.
inline PairFamily parse_pairs_document(const nlohmann::json& j, int m) {
  if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array())
    throw ParseError("pairs document needs a \"pairs\" list");
  const auto& arr = j.at("pairs");
  if (static_cast<int>(arr.size()) != m)
    throw ParseError("pairs document has " + std::to_string(arr.size()) +
                     " records, expected one per vertex (" +
                     std::to_string(m) + ")");
  std::vector<PoincarePolynomial> X, A;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& rec = arr[i];
    if (!rec.is_object() || !rec.contains("X") || !rec.contains("A"))
      throw ParseError("pairs[" + std::to_string(i) +
                       "] needs \"X\" and \"A\" coefficient lists");
    auto poly = [&](const char* key) {
      std::vector<int> c = detail::int_list(
          rec.at(key), "pairs[" + std::to_string(i) + "]." + key);
      std::vector<long long> coeffs(c.begin(), c.end());
      for (long long x : coeffs)
        if (x < 0)
          throw ParseError("pairs[" + std::to_string(i) + "]." + key +
                           ": coefficients must be nonnegative");
      return PoincarePolynomial(std::move(coeffs));
    };
    X.push_back(poly("X"));
    A.push_back(poly("A"));
  }
  return PairFamily(std::move(X), std::move(A));
}

inline nlohmann::json to_json(const VertexSet& s) {
  return nlohmann::json(s.members());
}

inline nlohmann::json to_json(const PoincarePolynomial& p, char var = 'x') {
  return nlohmann::json{{"coefficients", p.coefficients()},
                        {"text", p.to_string(var)}};
}

inline nlohmann::json to_json(const BettiTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, dim] : table.entries)
    rows.push_back({{"q", key.q}, {"sigma", to_json(key.sigma)}, {"dim", dim}});
  return nlohmann::json{{"field", table.field.name()},
                        {"entries", rows},
                        {"total", table.total()}};
}

inline nlohmann::json to_json(const SimplicialComplement& P) {
  nlohmann::json gens = nlohmann::json::array();
  for (const VertexSet& g : P.generators()) gens.push_back(to_json(g));
  return nlohmann::json{{"m", P.ambient()}, {"complement", gens}};
}

inline nlohmann::json to_json(const MASeriesReport& report, char var = 't') {
  nlohmann::json ledger = nlohmann::json::array();
  for (const MAContribution& c : report.ledger)
    ledger.push_back({{"omega", to_json(c.omega)},
                      {"sigma", to_json(c.sigma)},
                      {"q", c.q},
                      {"dim", c.dim},
                      {"added", to_json(c.added, var)}});
  return nlohmann::json{{"series", to_json(report.total, var)},
                        {"total_betti", report.total_betti},
                        {"unit_term", report.unit_term},
                        {"ledger", ledger},
                        {"hypotheses", report.hypotheses}};
}

}  // namespace zktor
