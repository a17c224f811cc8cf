// linres: command-line front end for the linres library.
//
// Exit codes: 0 success, 1 resource limit, 2 input or precondition error,
// 3 internal consistency violation.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linres/linres.hpp"

namespace {

using nlohmann::json;

constexpr int kExitResource = 1;
constexpr int kExitInput = 2;
constexpr int kExitFalsified = 3;

struct Options {
  std::string input;
  std::vector<std::string> fields;
  int max_power = 3;
  std::optional<std::size_t> walk_bound;
  std::string order = "paper-lex";
  bool json_out = false;
  bool timings = false;
  std::uint64_t seed = 1;
  std::size_t random_count = 0;
  std::size_t random_vars = 5;
  bool dirac = false;
  std::size_t lq_budget = 1'000'000;
};

std::vector<linres::FieldSpec> parse_fields(const std::vector<std::string>& raw) {
  std::vector<linres::FieldSpec> out;
  for (const auto& f : raw) out.push_back(linres::io::parse_field(f));
  if (out.empty()) out = {linres::FieldSpec::rationals(), linres::FieldSpec::prime(2)};
  return out;
}

linres::io::NamedIdeal load_ideal(const std::string& path) {
  if (path.empty()) throw linres::InputError("missing input file");
  return linres::io::ideal_from_json(linres::io::read_json_file(path));
}

std::string yes_no(const json& b) {
  if (b.is_null()) return "unknown";
  return b.get<bool>() ? "yes" : "no";
}

std::string join(const json& arr, const std::string& sep = ", ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

std::string mapping(const json& obj) {
  std::string out;
  for (const auto& [from, to] : obj.items()) {
    if (!out.empty()) out += ", ";
    out += from + " -> " + to.get<std::string>();
  }
  return out;
}

void print_betti(std::ostream& os, const json& table) {
  std::map<int, std::map<int, std::size_t>> rows;  // j - i -> i -> beta
  int max_i = 0;
  for (const auto& e : table["entries"]) {
    const int i = e["i"], j = e["j"];
    rows[j - i][i] = e["beta"];
    max_i = std::max(max_i, i);
  }
  os << "  Betti table over " << table["field"].get<std::string>() << ":\n       ";
  for (int i = 0; i <= max_i; ++i) os << std::setw(6) << i;
  os << '\n';
  for (const auto& [shift, row] : rows) {
    os << "  " << std::setw(4) << shift << ":";
    for (int i = 0; i <= max_i; ++i) {
      const auto it = row.find(i);
      os << std::setw(6) << (it == row.end() ? std::string("-") : std::to_string(it->second));
    }
    os << '\n';
  }
  os << "  linear: " << yes_no(table["linear"]) << ", regularity: "
     << (table["regularity"].is_null() ? std::string("unknown") : table["regularity"].dump())
     << (table["complete"].get<bool>() ? "" : " (incomplete)") << '\n';
}

void print_ideal(std::ostream& os, const json& ideal) {
  os << "ideal: (" << join(ideal["generators"]) << ") in " << ideal["variables"].size() << " variables\n";
}

void print_powers(std::ostream& os, const json& powers) {
  for (const auto& p : powers)
    os << "    k=" << p["k"] << ": " << p["generators"] << " generators, linear " << yes_no(p["linear"])
       << ", reg " << p["regularity"] << '\n';
}

void print_analysis(std::ostream& os, const json& r) {
  print_ideal(os, r["input"]);
  os << "degree: " << r["degree"] << '\n';
  for (const auto& f : r["fields"]) {
    print_betti(os, f["betti"]);
    os << "  powers over " << f["betti"]["field"].get<std::string>() << ":\n";
    print_powers(os, f["powers"]);
  }
  os << "linear-quotients search: " << r["lq_search"]["status"].get<std::string>();
  if (r["lq_search"].contains("order")) os << " (" << join(r["lq_search"]["order"]) << ")";
  os << '\n';
  const auto& q = r["quadratic_pipeline"];
  if (q.contains("skipped")) {
    os << "quadratic pipeline skipped: " << q["reason"].get<std::string>() << '\n';
  } else {
    const auto& c = q["chordality"];
    os << "complement of the squarefree part chordal: " << yes_no(c["chordal"]);
    if (c.contains("chordless_cycle")) os << " (chordless cycle " << join(c["chordless_cycle"]) << ")";
    os << '\n';
    if (q.contains("free_vertex_squares"))
      os << "squares at free vertices: " << yes_no(q["free_vertex_squares"]["holds"]) << '\n';
    if (q.contains("dirac")) {
      os << "Dirac labeling: " << mapping(q["dirac"]["labeling"]) << '\n';
      os << "relabeled ideal: (" << join(q["relabeled"]["generators"]) << ")\n";
      os << "condition (*): " << yes_no(q["star"]["holds"]);
      if (q["star"].contains("witness")) os << " witness " << q["star"]["witness"].dump();
      os << "\ncondition (**): " << yes_no(q["star_star"]["holds"]);
      if (q["star_star"].contains("witness")) os << " witness " << q["star_star"]["witness"].dump();
      os << '\n';
    }
    if (q.contains("constructed_order"))
      os << "constructed order: " << join(q["constructed_order"]["order"]) << " (condition (q) "
         << yes_no(q["constructed_order"]["condition_q"]) << ")\n";
    const auto& rees = q["rees"];
    os << "Rees Groebner basis (" << rees["order"].get<std::string>() << "): " << rees["groebner_basis_size"]
       << " elements, max deg_x " << rees["x_degree"]["max_deg_x"] << '\n';
    if (rees.contains("squares_first"))
      os << "Rees Groebner basis (squares-first): " << rees["squares_first"]["groebner_basis_size"]
         << " elements, max deg_x " << rees["squares_first"]["x_degree"]["max_deg_x"] << '\n';
    if (rees.contains("graver_crosscheck"))
      os << "walk cross-check: agrees " << yes_no(rees["graver_crosscheck"]["agrees"]) << ", bound sufficient "
         << yes_no(rees["graver_crosscheck"]["bound_sufficient"]) << '\n';
  }
  if (r["falsifications"].empty()) {
    os << "consistency: all checks agree\n";
  } else {
    for (const auto& f : r["falsifications"]) os << "FALSIFIED: " << f.get<std::string>() << '\n';
  }
  if (r.contains("timings")) os << "timings: " << r["timings"].dump() << '\n';
}

void emit(const Options& opt, const json& report, void (*human)(std::ostream&, const json&)) {
  if (opt.json_out) {
    std::cout << report.dump(2) << '\n';
  } else {
    human(std::cout, report);
  }
}

linres::io::NamedIdeal random_quadratic_ideal(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<linres::Monomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!coin(rng)) continue;
      auto m = linres::Monomial::variable(n, i) * linres::Monomial::variable(n, j);
      gens.push_back(std::move(m));
    }
  if (gens.empty()) gens.push_back(linres::Monomial::variable(n, 0) * linres::Monomial::variable(n, n - 1));
  auto vars = linres::io::default_variables(n);
  return {vars, linres::minimal_generators(std::move(gens), n)};
}

int run_analyze(const Options& opt) {
  linres::AnalyzeOptions a;
  a.fields = parse_fields(opt.fields);
  a.max_power = opt.max_power;
  a.walk_bound = opt.walk_bound;
  a.timings = opt.timings;
  a.lq_node_budget = opt.lq_budget;
  if (opt.random_count == 0) {
    const auto report = linres::analyze(load_ideal(opt.input), a);
    emit(opt, report, print_analysis);
    return report["falsifications"].empty() ? 0 : kExitFalsified;
  }
  if (opt.random_vars < 2) throw linres::InputError("--vars must be at least 2");
  std::mt19937_64 rng(opt.seed);
  json all = json::array();
  bool falsified = false;
  for (std::size_t r = 0; r < opt.random_count; ++r) {
    const auto report = linres::analyze(random_quadratic_ideal(rng, opt.random_vars), a);
    falsified = falsified || !report["falsifications"].empty();
    if (opt.json_out) {
      all.push_back(report);
    } else {
      std::cout << "--- random ideal " << r + 1 << " (seed " << opt.seed << ") ---\n";
      print_analysis(std::cout, report);
    }
  }
  if (opt.json_out) std::cout << json{{"seed", opt.seed}, {"reports", all}}.dump(2) << '\n';
  return falsified ? kExitFalsified : 0;
}

void print_betti_report(std::ostream& os, const json& r) {
  print_ideal(os, r["input"]);
  for (const auto& t : r["tables"]) print_betti(os, t);
}

void print_power_report(std::ostream& os, const json& r) {
  print_ideal(os, r["input"]);
  for (const auto& f : r["fields"]) {
    os << "  powers over " << f["field"].get<std::string>() << ":\n";
    print_powers(os, f["powers"]);
  }
}

void print_chordal_graph(std::ostream& os, const json& r) {
  const auto& c = r["chordality"];
  os << "graph on " << r["graph"]["n"] << " vertices, " << r["graph"]["edges"].size() << " edges\n";
  os << "chordal: " << yes_no(c["chordal"]) << '\n';
  if (c.contains("chordless_cycle")) os << "chordless cycle: " << join(c["chordless_cycle"]) << '\n';
  if (c.contains("peo")) os << "perfect elimination ordering: " << join(c["peo"]) << '\n';
  if (r.contains("clique_complex")) {
    os << "maximal cliques:";
    for (const auto& f : r["clique_complex"]) os << " {" << join(f, ",") << "}";
    os << "\nleaf order:";
    for (const auto& f : r["leaf_order"]) os << " {" << join(f, ",") << "}";
    os << '\n';
  }
}

void print_chordal_ideal(std::ostream& os, const json& r) {
  print_ideal(os, r["input"]);
  print_chordal_graph(os, r["complement_of_squarefree_part"]);
  os << "complement of the polarization chordal: " << yes_no(r["polarized_complement_chordal"]) << '\n';
  if (r.contains("dirac_labeling")) os << "Dirac labeling: " << mapping(r["dirac_labeling"]) << '\n';
}

void print_groebner(std::ostream& os, const json& r) {
  print_ideal(os, r.contains("relabeled") ? r["relabeled"] : r["input"]);
  os << "reduced Groebner basis of the Rees ideal (" << r["order"].get<std::string>() << "), "
     << r["groebner_basis"].size() << " elements:\n";
  for (const auto& f : r["groebner_basis"])
    os << "  " << f["plus"].get<std::string>() << " - " << f["minus"].get<std::string>() << "   [deg_x " << f["deg_x"]
       << "]\n";
  os << "deg_x <= 1: " << yes_no(r["x_degree"]["holds"]) << '\n';
  os << "Hilbert function check up to degree " << r["hilbert_check"]["bound"] << ": "
     << yes_no(r["hilbert_check"]["agrees"]) << '\n';
  if (r.contains("graver_crosscheck"))
    os << "walk cross-check: agrees " << yes_no(r["graver_crosscheck"]["agrees"]) << ", bound sufficient "
       << yes_no(r["graver_crosscheck"]["bound_sufficient"]) << '\n';
}

void print_quotients(std::ostream& os, const json& r) {
  print_ideal(os, r["input"]);
  os << "search: " << r["search"]["status"].get<std::string>() << " after " << r["search"]["nodes"] << " nodes";
  if (r["search"].contains("order")) os << ": " << join(r["search"]["order"]);
  os << '\n';
  if (r.contains("constructed")) {
    const auto& c = r["constructed"];
    if (c.contains("error")) {
      os << "construction refused: " << c["error"].get<std::string>() << " " << c["witness"].dump() << '\n';
    } else {
      os << "constructed order: " << join(c["order"]) << "\ncondition (q): " << yes_no(c["condition_q"])
         << ", linear quotients: " << yes_no(c["linear_quotients"]) << '\n';
    }
  }
}

void print_walks(std::ostream& os, const json& r) {
  print_ideal(os, r["input"]);
  os << r["walks"].size() << " primitive even closed walks up to length " << r["length_bound"] << ":\n";
  for (const auto& w : r["walks"])
    os << "  (" << join(w["walk"], ",") << ")  " << w["plus"].get<std::string>() << " - "
       << w["minus"].get<std::string>() << '\n';
}

int dispatch(const std::string& cmd, const Options& opt) {
  using namespace linres;
  if (cmd == "analyze") return run_analyze(opt);
  if (cmd == "betti") {
    emit(opt, betti_report(load_ideal(opt.input), parse_fields(opt.fields)), print_betti_report);
  } else if (cmd == "power") {
    emit(opt, power_report(load_ideal(opt.input), parse_fields(opt.fields), opt.max_power, opt.timings),
         print_power_report);
  } else if (cmd == "chordal") {
    const auto j = io::read_json_file(opt.input);
    if (j.contains("n")) {
      emit(opt, chordal_graph_report(io::graph_from_json(j)), print_chordal_graph);
    } else {
      emit(opt, chordal_ideal_report(io::ideal_from_json(j)), print_chordal_ideal);
    }
  } else if (cmd == "groebner") {
    emit(opt, groebner_report(load_ideal(opt.input), opt.dirac, opt.walk_bound, parse_rees_order(opt.order)),
         print_groebner);
  } else if (cmd == "quotients") {
    emit(opt, quotients_report(load_ideal(opt.input), opt.lq_budget), print_quotients);
  } else if (cmd == "walks") {
    emit(opt, walks_report(load_ideal(opt.input), opt.walk_bound), print_walks);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear resolutions of monomial ideals: Betti tables, chordality, linear quotients and Rees algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", opt.input, "JSON file with the ideal (or graph)");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", opt.json_out, "Print the report as JSON");
    sub->add_flag("--timings", opt.timings, "Include wall-clock timings");
  };
  auto add_fields = [&](CLI::App* sub) {
    sub->add_option("--field", opt.fields, "Coefficient field: Q or GF:p (repeatable, comma separated)")
        ->delimiter(',');
  };

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline and cross-check every implication");
  add_common(analyze, false);
  add_fields(analyze);
  analyze->add_option("--max-power", opt.max_power, "Largest power k to test")->check(CLI::Range(1, 10));
  analyze->add_option("--walk-bound", opt.walk_bound, "Cross-check the Groebner basis against walks up to N");
  analyze->add_option("--random", opt.random_count, "Analyze N random quadratic ideals instead of a file");
  analyze->add_option("--vars", opt.random_vars, "Number of variables for --random")->check(CLI::Range(2, 8));
  analyze->add_option("--seed", opt.seed, "Seed for --random");
  analyze->add_option("--lq-budget", opt.lq_budget, "Node budget for the linear-quotients search");

  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  add_common(betti, true);
  add_fields(betti);

  auto* power = app.add_subcommand("power", "Linearity of I^k for k up to a bound");
  add_common(power, true);
  add_fields(power);
  power->add_option("max_power", opt.max_power, "Largest power k")->check(CLI::Range(1, 10));
  power->add_option("--max-power", opt.max_power, "Largest power k")->check(CLI::Range(1, 10));

  auto* chordal = app.add_subcommand("chordal", "Chordality of a graph, or of the complement of an ideal's graph");
  add_common(chordal, true);

  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of the Rees ideal");
  add_common(groebner, true);
  groebner->add_option("--order", opt.order, "Term order")->check(CLI::IsMember({"paper-lex", "squares-first"}));
  groebner->add_flag("--dirac", opt.dirac, "Relabel by the Dirac labeling first");
  groebner->add_option("--walk-bound", opt.walk_bound, "Cross-check against walks up to N");

  auto* quotients = app.add_subcommand("quotients", "Linear-quotients orders");
  add_common(quotients, true);
  quotients->add_option("--lq-budget", opt.lq_budget, "Node budget for the search");

  auto* walks = app.add_subcommand("walks", "Primitive even closed walks of the Rees graph");
  add_common(walks, true);
  walks->add_option("--walk-bound", opt.walk_bound, "Maximum walk length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "analyze" && opt.random_count == 0 && opt.input.empty()) {
    std::cerr << "error: analyze needs an input file or --random N\n";
    return kExitInput;
  }
  try {
    return dispatch(cmd, opt);
  } catch (const linres::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n" << e.witness().dump() << '\n';
    return kExitInput;
  } catch (const linres::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const linres::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const linres::FalsificationError& e) {
    std::cerr << "FALSIFIED: " << e.what() << "\n" << e.detail().dump() << '\n';
    return kExitFalsified;
  }
}
