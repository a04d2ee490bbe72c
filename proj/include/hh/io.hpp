#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/chain_complex.hpp"
#include "hh/harmonic.hpp"
#include "hh/homology.hpp"

namespace hh {

using json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Int json_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw parse_error("bad integer literal in " + where);
    }
  }
  throw parse_error("expected integer (number or decimal string) in " + where);
}

}  // namespace detail

// JSON chain-complex format:
// {"dims": d, "cells": {"0": [...], ...}, "boundary": {"1": [[i, j, v], ...],
//  ...}, "augmented": true} with sparse (row, col, value) triples.
inline ChainComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("cells"))
    throw parse_error("chain complex JSON needs dims and cells");
  int d = j.at("dims").get<int>();
  if (d < 0) throw parse_error("dims must be nonnegative");
  std::vector<std::vector<std::string>> cells(d + 1);
  for (int i = 0; i <= d; ++i) {
    std::string key = std::to_string(i);
    if (!j.at("cells").contains(key)) throw parse_error("missing cells[" + key + "]");
    for (const auto& lbl : j.at("cells").at(key)) cells[i].push_back(lbl.get<std::string>());
  }
  std::vector<IntMatrix> boundaries;
  for (int i = 1; i <= d; ++i) {
    IntMatrix b(cells[i - 1].size(), cells[i].size());
    std::string key = std::to_string(i);
    if (j.contains("boundary") && j.at("boundary").contains(key)) {
      for (const auto& triple : j.at("boundary").at(key)) {
        if (!triple.is_array() || triple.size() != 3)
          throw parse_error("boundary triples must be [row, col, value]");
        int r = triple[0].get<int>(), c = triple[1].get<int>();
        if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= b.rows() ||
            static_cast<std::size_t>(c) >= b.cols())
          throw parse_error("boundary triple out of range in dim " + key);
        b(r, c) = detail::json_int(triple[2], "boundary[" + key + "]");
      }
    }
    boundaries.push_back(std::move(b));
  }
  bool augmented = j.value("augmented", true);
  return ChainComplex(std::move(cells), std::move(boundaries), augmented);
}

// Canonical serialization: integers as decimal strings, triples row-major.
inline json complex_to_json(const ChainComplex& x) {
  json j;
  j["dims"] = x.top_dim();
  json cells = json::object();
  for (int i = 0; i <= x.top_dim(); ++i) cells[std::to_string(i)] = x.cells(i);
  j["cells"] = cells;
  json boundary = json::object();
  for (int i = 1; i <= x.top_dim(); ++i) {
    json triples = json::array();
    IntMatrix b = x.boundary(i);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b(r, c) != 0)
          triples.push_back(json::array(
              {static_cast<int>(r), static_cast<int>(c), b(r, c).str()}));
    boundary[std::to_string(i)] = triples;
  }
  j["boundary"] = boundary;
  j["augmented"] = x.augmented();
  return j;
}

// Simplicial facet text: one facet per line, whitespace-separated vertex
// names, '#' starts a comment.
inline ChainComplex complex_from_facets(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> facet;
    std::string tok;
    while (ls >> tok) facet.push_back(tok);
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw parse_error("facet file contains no facets");
  return from_simplicial(facets);
}

inline ChainComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw parse_error(std::string("JSON parse failure: ") + e.what());
    }
    return complex_from_json(j);
  }
  return complex_from_facets(in);
}

inline json int_vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

inline json homology_to_json(const HomologySummary& h) {
  json j;
  j["dim"] = h.dim;
  j["rank"] = h.rank;
  j["torsion"] = int_vec_to_json(h.torsion);
  j["order"] = h.finite ? json(h.order.str()) : json("infinite");
  return j;
}

inline json certificate_to_json(const HarmonicCertificate& c) {
  json j;
  j["dim"] = c.dim;
  j["ok"] = c.ok;
  j["lambda"] = int_vec_to_json(c.lambda);
  j["lambda_star"] = int_vec_to_json(c.lambda_star);
  j["k_i"] = c.k_below.str();
  j["k_dual_i"] = c.k_above.str();
  j["h_below"] = c.h_below.str();
  j["h_above"] = c.h_above.str();
  j["sum_w_squared"] = c.sum_w_squared.str();
  j["sum_c_squared"] = c.sum_c_squared.str();
  j["normal_sign"] = c.normal_sign;
  json res = json::object();
  for (const auto& [name, r] : c.identity_residuals) {
    res[name] = json::array({boost::multiprecision::numerator(r).str(),
                             boost::multiprecision::denominator(r).str()});
  }
  j["identity_residuals"] = res;
  j["basis_fingerprint"] = c.basis_fingerprint;
  return j;
}

// Chain coefficients "1,-2,0" -> integer vector.
inline IntVec parse_chain(const std::string& text, std::size_t expected_len) {
  IntVec v;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw parse_error("empty chain coefficient");
    try {
      v.push_back(Int(tok.substr(a, b - a + 1)));
    } catch (const std::exception&) {
      throw parse_error("bad chain coefficient '" + tok + "'");
    }
  }
  if (v.size() != expected_len)
    throw parse_error("chain has " + std::to_string(v.size()) + " coefficients, complex needs " +
                      std::to_string(expected_len));
  return v;
}

// Graphviz rendering of a graph complex with the harmonic cycle as edge
// labels.  Display output only.
inline std::string to_dot(const ChainComplex& x, const IntVec& lambda) {
  IntMatrix b = x.boundary(1);
  std::ostringstream out;
  out << "digraph harmonic {\n";
  for (std::size_t v = 0; v < x.num_cells(0); ++v)
    out << "  n" << v << " [label=\"" << x.cells(0)[v] << "\"];\n";
  for (std::size_t c = 0; c < b.cols(); ++c) {
    int tail = -1, head = -1;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (b(r, c) == -1) tail = static_cast<int>(r);
      if (b(r, c) == 1) head = static_cast<int>(r);
    }
    if (tail < 0 && head < 0 && x.num_cells(0) == 1) tail = head = 0;  // loop on the only vertex
    if (tail < 0 || head < 0) continue;
    out << "  n" << tail << " -> n" << head << " [label=\"" << x.cells(1)[c] << ": "
        << (c < lambda.size() ? lambda[c].str() : std::string("0")) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hh
