#pragma once

// Report builders behind the CLI subcommands. Each returns a JSON document; analyze()
// additionally cross-checks every implication the theory provides and lists any
// violation under "falsifications".

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linres/betti.hpp"
#include "linres/chordal.hpp"
#include "linres/errors.hpp"
#include "linres/io.hpp"
#include "linres/monomial.hpp"
#include "linres/quotients.hpp"
#include "linres/rees.hpp"

namespace linres {

using nlohmann::json;

struct AnalyzeOptions {
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
  int max_power = 3;
  std::optional<std::size_t> walk_bound;  // enables the Graver cross-check
  bool timings = false;
  std::size_t lq_node_budget = 1'000'000;
  BettiOptions betti;
};

namespace detail {

class Stopwatch {
public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

/// {"old name": "new name"} for a relabeling; relabeled ideals use x1..xn.
inline json labeling_to_json(const std::vector<std::string>& names, const VertexLabeling& l) {
  json out = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = "x" + std::to_string(l.new_index[i] + 1);
  return out;
}

}  // namespace detail

inline json betti_report(const io::NamedIdeal& in, const std::vector<FieldSpec>& fields, const BettiOptions& opt = {}) {
  json tables = json::array();
  for (auto f : fields) tables.push_back(io::betti_to_json(koszul_betti(in.ideal, f, opt)));
  return {{"input", io::ideal_to_json(in)}, {"tables", tables}};
}

inline json power_report(const io::NamedIdeal& in, const std::vector<FieldSpec>& fields, int max_k,
                         bool timings, const BettiOptions& opt = {}) {
  json out{{"input", io::ideal_to_json(in)}, {"max_power", max_k}, {"fields", json::array()}};
  for (auto f : fields) {
    json powers = json::array();
    for (const auto& v : powers_linear_report(in.ideal, f, max_k, opt)) {
      json p{{"k", v.k}, {"generators", v.num_generators}, {"linear", v.linear}, {"regularity", v.regularity}};
      if (timings) p["elapsed_ms"] = v.elapsed_ms;
      powers.push_back(p);
    }
    out["fields"].push_back({{"field", f.name()}, {"powers", powers}});
  }
  return out;
}

/// Chordality, clique complex, leaf order and free vertices of a simple graph.
inline json chordal_graph_report(const Graph& g) {
  const auto v = is_chordal(g);
  json out{{"graph", io::graph_to_json(g)}, {"chordality", io::chordality_to_json(v)}};
  if (!v.chordal) return out;
  const auto delta = clique_complex(g, v.peo);
  out["clique_complex"] = io::complex_to_json(delta);
  const auto lo = leaf_order(delta);
  if (!lo) throw FalsificationError("clique complex of a chordal graph has no leaf order");
  json order = json::array();
  for (auto f : lo->order) order.push_back(io::one_based(delta.facets()[f]));
  out["leaf_order"] = order;
  json freev = json::array();
  for (std::size_t f = 0; f < delta.size(); ++f) freev.push_back(io::one_based(free_vertices(delta, f)));
  out["free_vertices"] = freev;
  return out;
}

/// For a quadratic ideal: chordality of the complement of graph(J), plus the Dirac labeling.
inline json chordal_ideal_report(const io::NamedIdeal& in) {
  const auto split = squarefree_part(in.ideal);
  json out{{"input", io::ideal_to_json(in)},
           {"complement_of_squarefree_part", chordal_graph_report(complement(simple_part(graph_of_ideal(split.squarefree))))}};
  const auto pol = polarize(in.ideal);
  out["polarized_complement_chordal"] = is_chordal(complement(simple_part(graph_of_ideal(pol)))).chordal;
  if (out["complement_of_squarefree_part"]["chordality"]["chordal"].get<bool>()) {
    const auto dirac = dirac_labeling(graph_of_ideal(in.ideal));
    out["dirac_labeling"] = detail::labeling_to_json(in.variables, dirac.labeling);
  }
  return out;
}

struct GroebnerRun {
  ReesRing ring;
  std::vector<Binomial> gb;
  XDegreeCheck xcheck;
};

inline GroebnerRun rees_groebner(const MonomialIdeal& I, ReesOrder order = ReesOrder::paper_lex) {
  ReesRing ring(I);
  auto gb = reduced_groebner(toric_ideal_gens(ring), term_order(ring, order));
  auto x = x_degree_check(ring, gb);
  return {std::move(ring), std::move(gb), x};
}

inline json groebner_report(const io::NamedIdeal& in, bool dirac, std::optional<std::size_t> walk_bound,
                            ReesOrder order = ReesOrder::paper_lex, int hilbert_bound = 3) {
  MonomialIdeal I = in.ideal;
  std::vector<std::string> names = in.variables;
  json out{{"input", io::ideal_to_json(in)}, {"order", rees_order_name(order)}};
  if (dirac) {
    const auto d = dirac_labeling(graph_of_ideal(I));
    I = relabel(I, d.labeling.new_index);
    names = io::default_variables(I.num_vars());
    out["labeling"] = detail::labeling_to_json(in.variables, d.labeling);
    out["relabeled"] = io::ideal_to_json(I, names);
  }
  const auto run = rees_groebner(I, order);
  out["omega"] = io::graph_to_json(run.ring.omega());
  out["groebner_basis"] = io::binomials_to_json(run.ring, run.gb, names);
  out["x_degree"] = {{"holds", run.xcheck.holds}, {"max_deg_x", run.xcheck.max_deg_x}};
  if (run.xcheck.witness) out["x_degree"]["witness"] = *run.xcheck.witness + 1;
  const auto h = hilbert_agreement(run.ring, run.gb, hilbert_bound);
  out["hilbert_check"] = {{"agrees", h.agrees}, {"bound", hilbert_bound}, {"quotient", h.quotient}, {"semigroup", h.semigroup}};
  if (walk_bound) {
    const auto c = graver_vs_groebner_crosscheck(run.ring, run.gb, *walk_bound);
    out["graver_crosscheck"] = {{"agrees", c.agrees},
                                {"bound_sufficient", c.bound_sufficient},
                                {"walks", c.num_walks},
                                {"length_bound", c.length_bound}};
  }
  return out;
}

inline json walks_report(const io::NamedIdeal& in, std::optional<std::size_t> bound) {
  const ReesRing ring(in.ideal);
  const std::size_t b = bound.value_or(default_walk_bound(ring));
  const auto w = enumerate_primitive_even_walks(ring, b);
  const auto names = io::rees_variable_names(ring, in.variables);
  json walks = json::array();
  for (std::size_t t = 0; t < w.walks.size(); ++t) {
    const auto& f = w.binomials[t];
    walks.push_back({{"walk", io::one_based(w.walks[t].vertices)},
                     {"plus", io::rees_monomial(f.plus, names)},
                     {"minus", io::rees_monomial(f.minus, names)},
                     {"deg_x", ring.deg_x(f.plus)}});
  }
  return {{"input", io::ideal_to_json(in)},
          {"omega", io::graph_to_json(ring.omega())},
          {"length_bound", b},
          {"max_length_found", w.max_length_found},
          {"walks", walks}};
}

inline json quotients_report(const io::NamedIdeal& in, std::size_t node_budget) {
  json out{{"input", io::ideal_to_json(in)}};
  const auto found = find_lq_order(in.ideal, node_budget);
  out["search"] = {{"status", detail::status_name(found.status)}, {"nodes", found.nodes}};
  if (found.order) out["search"]["order"] = io::order_to_json(in.ideal, *found.order, in.variables);
  if (in.ideal.degree() == 2) {
    try {
      const auto c = construct_lq_order(in.ideal);
      const auto q = condition_q(in.ideal, c.order);
      out["constructed"] = {{"order", io::order_to_json(in.ideal, c.order, in.variables)},
                            {"condition_q", q.holds},
                            {"linear_quotients", has_linear_quotients(in.ideal, c.order).holds}};
      json bottom = json::array();
      for (auto s : c.bottom_squares) bottom.push_back(io::format_monomial(in.ideal.generators()[s], in.variables));
      out["constructed"]["bottom_squares"] = bottom;
    } catch (const PreconditionError& e) {
      out["constructed"] = {{"error", e.what()}, {"witness", e.witness()}};
    }
  }
  return out;
}

/// Full pipeline. Degree-2 ideals go through graph, complement, chordality, Dirac
/// labeling, (*), (**), the constructed order, Betti tables, powers and the Rees
/// Groebner basis; other degrees get Betti tables, powers and the order search.
inline json analyze(const io::NamedIdeal& in, const AnalyzeOptions& opt) {
  const MonomialIdeal& I = in.ideal;
  if (I.is_zero()) throw InputError("analyze: zero ideal");
  if (!I.is_equigenerated()) throw InputError("analyze: ideal is not equigenerated");
  const int d = *I.degree();

  detail::Stopwatch clock;
  json timings = json::object();
  json report{{"input", io::ideal_to_json(in)}, {"degree", d}};
  json falsifications = json::array();
  auto falsify = [&](const std::string& what) { falsifications.push_back(what); };

  // Betti tables and powers per field
  json fields = json::array();
  std::vector<bool> linear_by_field;
  std::vector<bool> powers_all_linear;
  for (auto f : opt.fields) {
    const auto table = koszul_betti(I, f, opt.betti);
    const auto powers = powers_linear_report(I, f, opt.max_power, opt.betti);
    json p = json::array();
    bool all = true;
    for (const auto& v : powers) {
      p.push_back({{"k", v.k}, {"generators", v.num_generators}, {"linear", v.linear}, {"regularity", v.regularity}});
      all = all && v.linear;
    }
    linear_by_field.push_back(table.linear());
    powers_all_linear.push_back(all);
    fields.push_back({{"field", f.name()}, {"betti", io::betti_to_json(table)}, {"powers", p}});
  }
  report["fields"] = fields;
  timings["betti_and_powers_ms"] = clock.lap_ms();

  const auto search = find_lq_order(I, opt.lq_node_budget);
  report["lq_search"] = {{"status", detail::status_name(search.status)}, {"nodes", search.nodes}};
  if (search.order) report["lq_search"]["order"] = io::order_to_json(I, *search.order, in.variables);
  timings["lq_search_ms"] = clock.lap_ms();

  for (std::size_t t = 0; t < opt.fields.size(); ++t) {
    if (search.status == SearchStatus::found && !linear_by_field[t])
      falsify("linear quotients found but the resolution over " + opt.fields[t].name() + " is not linear");
  }

  if (d != 2) {
    report["quadratic_pipeline"] = {{"skipped", true},
                                    {"reason", "chordality, Dirac labeling, (*)/(**) and the Rees Groebner basis "
                                               "apply to ideals generated in degree 2 only"}};
    report["falsifications"] = falsifications;
    if (opt.timings) report["timings"] = timings;
    return report;
  }

  // Quadratic pipeline
  json q;
  const auto split = squarefree_part(I);
  const Graph g = graph_of_ideal(I);
  const Graph gj = simple_part(graph_of_ideal(split.squarefree));
  const auto comp = complement(gj);
  const auto chord = is_chordal(comp);
  q["graph"] = io::graph_to_json(g);
  q["complement"] = io::graph_to_json(comp);
  q["chordality"] = io::chordality_to_json(chord);
  q["squares"] = io::one_based(split.squares);
  const bool froberg = is_chordal(complement(simple_part(graph_of_ideal(polarize(I))))).chordal;
  q["polarized_complement_chordal"] = froberg;

  for (std::size_t t = 0; t < opt.fields.size(); ++t)
    if (linear_by_field[t] != froberg)
      falsify("linearity over " + opt.fields[t].name() + " disagrees with chordality of the polarized complement");

  const bool linear = linear_by_field.empty() ? froberg : linear_by_field.front();
  if (linear && search.status == SearchStatus::none) falsify("linear resolution but no linear-quotients order exists");
  if (linear && !chord.chordal) falsify("linear resolution but the squarefree part has non-chordal complement");

  std::optional<MonomialIdeal> relabeled;
  std::vector<std::string> names = in.variables;
  if (chord.chordal) {
    const auto fv = check_free_vertex_squares(I);
    q["free_vertex_squares"] = {{"holds", fv.holds}};
    if (!fv.holds) q["free_vertex_squares"]["witness"] = fv.witness;
    if (linear && !fv.holds) falsify("linear resolution but a square is not a free vertex of its own facet");

    const auto dirac = dirac_labeling(g);
    q["dirac"] = {{"complex", io::complex_to_json(dirac.complex)},
                  {"leaf_order", io::one_based(dirac.leaf_order.order)},
                  {"labeling", detail::labeling_to_json(in.variables, dirac.labeling)}};
    relabeled = relabel(I, dirac.labeling.new_index);
    names = io::default_variables(I.num_vars());
    q["relabeled"] = io::ideal_to_json(*relabeled, names);

    const auto star = check_star(*relabeled);
    const auto star2 = check_star_star(*relabeled);
    q["star"] = io::condition_to_json(star);
    q["star_star"] = io::condition_to_json(star2);
    if (!star.holds) falsify("Dirac relabeling does not satisfy (*)");
    if (linear && !star2.holds) falsify("linear resolution but (**) fails after Dirac relabeling");

    if (star.holds && star2.holds) {
      const auto c = construct_lq_order(*relabeled);
      const auto cq = condition_q(*relabeled, c.order);
      const auto lq = has_linear_quotients(*relabeled, c.order);
      json bottom = json::array();
      for (auto s : c.bottom_squares) bottom.push_back(io::format_monomial(relabeled->generators()[s], names));
      q["constructed_order"] = {{"order", io::order_to_json(*relabeled, c.order, names)},
                                {"condition_q", cq.holds},
                                {"linear_quotients", lq.holds},
                                {"bottom_squares", bottom}};
      if (!cq.holds) falsify("constructed order violates condition (q)");
      if (cq.holds && !lq.holds) falsify("condition (q) holds but linear quotients fail");
      if (lq.holds && !linear) falsify("constructed order has linear quotients but the resolution is not linear");
    }
  }
  timings["quadratic_checks_ms"] = clock.lap_ms();

  // Rees ring
  const MonomialIdeal& target = relabeled ? *relabeled : I;
  const auto run = rees_groebner(target);
  json rees{{"order", "paper-lex"},
            {"ideal", io::ideal_to_json(target, names)},
            {"groebner_basis_size", run.gb.size()},
            {"groebner_basis", io::binomials_to_json(run.ring, run.gb, names)},
            {"x_degree", {{"holds", run.xcheck.holds}, {"max_deg_x", run.xcheck.max_deg_x}}}};
  if (run.xcheck.witness) rees["x_degree"]["witness"] = *run.xcheck.witness + 1;
  const bool conditions = check_star(target).holds && check_star_star(target).holds;
  bool some_order_linear_in_x = run.xcheck.holds;
  if (!run.xcheck.holds) {
    const auto alt = rees_groebner(target, ReesOrder::squares_first);
    rees["squares_first"] = {{"order", rees_order_name(ReesOrder::squares_first)},
                             {"groebner_basis_size", alt.gb.size()},
                             {"x_degree", {{"holds", alt.xcheck.holds}, {"max_deg_x", alt.xcheck.max_deg_x}}}};
    some_order_linear_in_x = alt.xcheck.holds;
  }
  if (conditions && !some_order_linear_in_x)
    falsify("(*) and (**) hold but no tested lex order gives a Groebner basis with deg_x <= 1");
  if (some_order_linear_in_x)
    for (std::size_t t = 0; t < opt.fields.size(); ++t)
      if (!powers_all_linear[t])
        falsify("Groebner basis is linear in x but some power is not linear over " + opt.fields[t].name());
  if (opt.walk_bound) {
    const auto c = graver_vs_groebner_crosscheck(run.ring, run.gb, *opt.walk_bound);
    rees["graver_crosscheck"] = {{"agrees", c.agrees},
                                 {"bound_sufficient", c.bound_sufficient},
                                 {"walks", c.num_walks},
                                 {"length_bound", c.length_bound}};
  }
  q["rees"] = rees;
  timings["rees_ms"] = clock.lap_ms();

  for (std::size_t t = 0; t < opt.fields.size(); ++t)
    if (linear_by_field[t] && !powers_all_linear[t])
      falsify("linear resolution but some power up to " + std::to_string(opt.max_power) + " is not linear over " +
              opt.fields[t].name());

  report["quadratic_pipeline"] = q;
  report["falsifications"] = falsifications;
  if (opt.timings) report["timings"] = timings;
  return report;
}

}  // namespace linres
