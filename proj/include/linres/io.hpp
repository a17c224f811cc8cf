#pragma once

// JSON and string formats shared by the CLI and tests. Every vertex, variable and
// position index in JSON is 1-based.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "linres/betti.hpp"
#include "linres/binomial.hpp"
#include "linres/chordal.hpp"
#include "linres/errors.hpp"
#include "linres/graph.hpp"
#include "linres/monomial.hpp"
#include "linres/quotients.hpp"
#include "linres/rees.hpp"

namespace linres::io {

using nlohmann::json;

/// An ideal together with the names of its variables.
struct NamedIdeal {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
};

/// Parses "abd", "a^2b", "x1*x2^3" or "x1x2": tokens are matched longest-name-first,
/// '*' separators and spaces are skipped, and "^k" raises the preceding variable.
inline Monomial parse_monomial(std::string_view text, const std::vector<std::string>& variables) {
  std::vector<int> e(variables.size(), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    std::size_t best = variables.size(), best_len = 0;
    for (std::size_t v = 0; v < variables.size(); ++v) {
      const auto& name = variables[v];
      if (name.size() > best_len && text.substr(pos, name.size()) == name) {
        best = v;
        best_len = name.size();
      }
    }
    if (best == variables.size())
      throw InputError("cannot parse monomial '" + std::string(text) + "' at offset " + std::to_string(pos));
    pos += best_len;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw InputError("missing exponent after '^' in '" + std::string(text) + "'");
      power = std::stoi(std::string(text.substr(start, pos - start)));
    }
    e[best] += power;
  }
  return Monomial(std::move(e));
}

/// Juxtaposition when every name is one character ("a^2b"), otherwise '*'-joined.
inline std::string format_monomial(std::span<const int> exps, const std::vector<std::string>& variables) {
  const bool short_names =
      std::all_of(variables.begin(), variables.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!out.empty() && !short_names) out += '*';
    out += variables.at(v);
    if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
  }
  return out.empty() ? "1" : out;
}
inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  return format_monomial(m.exponents(), variables);
}

inline std::vector<std::string> default_variables(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

inline NamedIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw InputError("ideal JSON needs \"variables\" and \"generators\"");
  NamedIdeal out;
  try {
    out.variables = j.at("variables").get<std::vector<std::string>>();
  } catch (const json::exception&) {
    throw InputError("\"variables\" must be a list of strings");
  }
  std::set<std::string> distinct(out.variables.begin(), out.variables.end());
  if (distinct.size() != out.variables.size()) throw InputError("duplicate variable names");
  for (const auto& v : out.variables)
    if (v.empty() || v.find_first_of("*^ ") != std::string::npos) throw InputError("bad variable name '" + v + "'");
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw InputError("generators must be strings");
    gens.push_back(parse_monomial(g.get<std::string>(), out.variables));
  }
  out.ideal = minimal_generators(std::move(gens), out.variables.size());
  return out;
}

inline json ideal_to_json(const MonomialIdeal& I, const std::vector<std::string>& variables) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(format_monomial(g, variables));
  return {{"variables", variables}, {"generators", gens}};
}

inline json ideal_to_json(const NamedIdeal& I) { return ideal_to_json(I.ideal, I.variables); }

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw InputError("graph JSON needs \"n\"");
  const auto n = j.at("n").get<long long>();
  if (n < 0) throw InputError("graph JSON: negative n");
  const bool loops = j.contains("loops") && !j.at("loops").empty();
  Graph g(static_cast<std::size_t>(n), loops);
  auto vertex = [&](const json& v) {
    const auto x = v.get<long long>();
    if (x < 1 || x > n) throw InputError("graph JSON: vertex out of range");
    return static_cast<std::size_t>(x - 1);
  };
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: edges must be pairs");
      const auto a = vertex(e[0]), b = vertex(e[1]);
      if (a == b) throw InputError("graph JSON: use \"loops\" for loops");
      g.add_edge(a, b);
    }
  if (j.contains("loops"))
    for (const auto& v : j.at("loops")) {
      const auto a = vertex(v);
      g.add_edge(a, a);
    }
  return g;
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array(), loops = json::array();
  for (auto [a, b] : g.edges()) {
    if (a == b) {
      loops.push_back(a + 1);
    } else {
      edges.push_back({a + 1, b + 1});
    }
  }
  return {{"n", g.num_vertices()}, {"edges", edges}, {"loops", loops}};
}

inline json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

inline json complex_to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facets()) facets.push_back(one_based(f));
  return facets;
}

inline json chordality_to_json(const ChordalityVerdict& v) {
  json out{{"chordal", v.chordal}};
  if (v.chordal) {
    out["peo"] = one_based(v.peo);
  } else {
    out["chordless_cycle"] = one_based(v.chordless_cycle);
  }
  return out;
}

inline json condition_to_json(const ConditionCheck& c) {
  json out{{"holds", c.holds}};
  if (c.witness) out["witness"] = {(*c.witness)[0] + 1, (*c.witness)[1] + 1, (*c.witness)[2] + 1};
  return out;
}

/// Accepts "Q", "QQ", "GF:p", "GF(p)", "GFp" (case-insensitive prefix).
inline FieldSpec parse_field(std::string s) {
  std::string up;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "Q" || up == "QQ") return FieldSpec::rationals();
  if (up.rfind("GF", 0) == 0) {
    std::string digits;
    for (char c : up.substr(2))
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
      } else if (c != ':' && c != '(' && c != ')') {
        throw InputError("cannot parse field '" + s + "'");
      }
    if (digits.empty() || digits.size() > 9) throw InputError("cannot parse field '" + s + "'");
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw InputError("cannot parse field '" + s + "'");
}

inline json betti_to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [ij, b] : t.entries) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
  json out{{"field", t.field.name()}, {"entries", entries}, {"complete", t.complete}};
  const auto r = t.regularity();
  out["regularity"] = r ? json(*r) : json(nullptr);
  if (t.generator_degree && t.complete) {
    out["linear"] = t.linear();
  } else {
    out["linear"] = nullptr;
  }
  return out;
}

inline BettiTable betti_from_json(const json& j) {
  BettiTable t;
  t.field = parse_field(j.at("field").get<std::string>());
  t.complete = j.value("complete", true);
  for (const auto& e : j.at("entries"))
    t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<std::size_t>();
  return t;
}

inline json order_to_json(const MonomialIdeal& I, const GeneratorOrder& order,
                          const std::vector<std::string>& variables) {
  json out = json::array();
  for (auto g : order.seq) out.push_back(format_monomial(I.generators()[g], variables));
  return out;
}

/// Names of the Rees presentation ring: the ideal's variables, then y[a,b] per edge.
inline std::vector<std::string> rees_variable_names(const ReesRing& ring, const std::vector<std::string>& variables) {
  std::vector<std::string> names(variables.begin(), variables.begin() + static_cast<std::ptrdiff_t>(ring.n()));
  for (auto [a, b] : ring.y_edges()) names.push_back("y[" + variables[a] + "," + variables[b] + "]");
  return names;
}

inline json rees_monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

inline json binomials_to_json(const ReesRing& ring, const std::vector<Binomial>& gb,
                              const std::vector<std::string>& variables) {
  const auto names = rees_variable_names(ring, variables);
  json out = json::array();
  for (const auto& f : gb)
    out.push_back({{"plus", rees_monomial(f.plus, names)},
                   {"minus", rees_monomial(f.minus, names)},
                   {"deg_x", ring.deg_x(f.plus)},
                   {"deg_y", ring.deg_y(f.plus)}});
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace linres::io
