// Command-line front end: reads a complement / facet JSON document and
// prints Tor tables, product tables, polyhedral-product series, link
// cohomology, compressions, and randomized verification results.
//
// Exit codes: 0 success, 1 a verification suite found a discrepancy,
// 2 usage or input-parsing problems.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zktor/zktor.hpp"

namespace {

using nlohmann::json;
using namespace zktor;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

InputDocument load_input(const std::string& path) {
  try {
    return parse_input_document(load_json(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

VertexSet parse_omega(const std::vector<int>& raw, int m) {
  try {
    return VertexSet::from_members(m, raw);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--omega: ") + e.what());
  }
}

void print_betti(std::ostream& os, const BettiTable& table) {
  os << "field: " << table.field.name() << "\n";
  os << "poincare: " << table.poincare().to_string() << "\n";
  os << "total: " << table.total() << "\n";
  for (const auto& [key, dim] : table.entries)
    os << "q=" << key.q << " sigma=" << key.sigma.to_string()
       << " dim=" << dim << "\n";
}

int cmd_tor(const std::string& file, const FieldSpec& spec, bool as_json) {
  SimplicialComplement P = load_input(file).as_complement();
  BettiTable table = with_field(
      spec, [&](auto field) { return bigraded_betti(P, field); });
  if (as_json) {
    json out = to_json(table);
    out["poincare"] = to_json(table.poincare());
    std::cout << out.dump(2) << "\n";
  } else {
    print_betti(std::cout, table);
  }
  return 0;
}

int cmd_product(const std::string& file, const FieldSpec& spec,
                bool as_json) {
  SimplicialComplement P = load_input(file).as_complement();
  json out;
  std::ostringstream text;
  with_field(spec, [&](auto field) {
    auto table = tor_product_table(P, field);
    json classes = json::array();
    for (const TorClass& c : table.classes)
      classes.push_back({{"q", c.q},
                         {"sigma", to_json(c.sigma)},
                         {"index", c.index},
                         {"label", c.label}});
    json products = json::array();
    text << "field: " << field.spec().name() << "\n";
    text << "classes: " << table.class_count() << "\n";
    for (std::size_t c = 0; c < table.classes.size(); ++c)
      text << "  [" << c << "] q=" << table.classes[c].q
           << " sigma=" << table.classes[c].sigma.to_string() << "\n";
    text << "nonzero products of positive-degree classes:\n";
    bool any = false;
    for (const auto& [pair, coords] : table.products) {
      bool nonzero = false;
      json jc = json::array();
      for (const auto& x : coords) {
        if (!field.is_zero(x)) nonzero = true;
        jc.push_back(field.to_string(x));
      }
      products.push_back({{"left", pair.first},
                          {"right", pair.second},
                          {"coordinates", jc}});
      const TorClass& a = table.classes[static_cast<std::size_t>(pair.first)];
      const TorClass& b = table.classes[static_cast<std::size_t>(pair.second)];
      if (nonzero && a.q > 0 && b.q > 0) {
        any = true;
        text << "  [" << pair.first << "]*[" << pair.second << "] -> (q="
             << a.q + b.q << ", sigma="
             << a.sigma.unite(b.sigma).to_string() << ") coords=[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (i) text << ",";
          text << field.to_string(coords[i]);
        }
        text << "]\n";
      }
    }
    if (!any) text << "  (none)\n";
    out = json{{"field", field.spec().name()},
               {"classes", classes},
               {"products", products}};
  });
  if (as_json) std::cout << out.dump(2) << "\n";
  else std::cout << text.str();
  return 0;
}

int cmd_series(const std::string& file, const FieldSpec& spec, bool as_json,
               bool s2s1) {
  SimplicialComplement P = load_input(file).as_complement();
  PoincarePolynomial series = with_field(spec, [&](auto field) {
    return s2s1 ? s2s1_series(P, field) : zk_series(P, field);
  });
  if (as_json) {
    std::cout << json{{"field", spec.name()},
                      {"series", to_json(series, 't')},
                      {"total", series.sum()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "field: " << spec.name() << "\n"
              << "series: " << series.to_string('t') << "\n"
              << "total: " << series.sum() << "\n";
  }
  return 0;
}

int cmd_ma(const std::string& file, const std::string& pairs_file,
           const FieldSpec& spec, bool as_json, bool all_omega) {
  InputDocument doc = load_input(file);
  SimplicialComplement P = doc.as_complement();
  PairFamily pairs;
  try {
    pairs = parse_pairs_document(load_json(pairs_file), P.ambient());
  } catch (const ParseError& e) {
    throw UsageError(pairs_file + ": " + e.what());
  }
  MASeriesReport report = with_field(spec, [&](auto field) {
    return ma_poincare(P, pairs, field, all_omega);
  });
  if (as_json) {
    json out = to_json(report);
    out["field"] = spec.name();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "field: " << spec.name() << "\n"
              << "series: " << report.total.to_string('t') << "\n"
              << "total: " << report.total_betti << "\n"
              << "contributions: " << report.ledger.size() << "\n"
              << "note: " << report.hypotheses << "\n";
  }
  return 0;
}

int cmd_link(const std::string& file, const std::vector<int>& omega_raw,
             const FieldSpec& spec, bool as_json) {
  InputDocument doc = load_input(file);
  SimplicialComplement P = doc.as_complement();
  VertexSet omega = parse_omega(omega_raw, P.ambient());
  std::map<int, long> dims = with_field(
      spec, [&](auto field) { return link_cohomology(P, omega, field); });
  if (as_json) {
    json rows = json::array();
    for (const auto& [degree, dim] : dims)
      rows.push_back({{"degree", degree}, {"dim", dim}});
    std::cout << json{{"field", spec.name()},
                      {"omega", to_json(omega)},
                      {"link_cohomology", rows}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "field: " << spec.name() << "\n"
              << "omega: " << omega.to_string() << "\n";
    if (dims.empty()) std::cout << "reduced cohomology: 0\n";
    for (const auto& [degree, dim] : dims)
      std::cout << "H^" << degree << " dim=" << dim << "\n";
  }
  return 0;
}

int cmd_compress(const std::string& file, const std::vector<int>& omega_raw,
                 bool as_json) {
  SimplicialComplement P = load_input(file).as_complement();
  VertexSet omega = parse_omega(omega_raw, P.ambient());
  SimplicialComplement E = compress(P, omega);
  if (as_json) {
    std::cout << to_json(E).dump(2) << "\n";
  } else {
    std::cout << "m: " << E.ambient() << "\n";
    for (int i = 1; i <= E.k(); ++i)
      std::cout << "generator " << i << ": " << E.generator(i).to_string()
                << "\n";
    if (E.has_empty_generator())
      std::cout << "note: an empty generator is present (omega was not a "
                   "face); every Tor entry of this complement vanishes\n";
  }
  return 0;
}

int report_suite(const SuiteReport& rep) {
  if (rep.ok()) {
    std::cout << rep.name << ": OK " << rep.trials << "/" << rep.trials
              << "\n";
    return 0;
  }
  std::cout << rep.name << ": FAILED " << rep.failures << "/" << rep.trials
            << "\n";
  for (const std::string& msg : rep.messages) std::cout << "  " << msg << "\n";
  return 1;
}

int cmd_verify_taylor_file(const std::string& file, const FieldSpec& spec) {
  InputDocument doc = load_input(file);
  if (!doc.generators)
    throw UsageError(file +
                     ": document has no \"generators\" list to sweep");
  const GeneratorSystem& sys = *doc.generators;
  return with_field(spec, [&](auto field) {
    int checked = 0, bad = 0;
    for (const ExponentVector& b : multidegrees_upto(sys.exponent_cap())) {
      ++checked;
      if (!verify_exactness(sys, b, field).passed()) {
        ++bad;
        std::cout << "exactness fails at b=" << b.to_string() << "\n";
      }
    }
    if (bad == 0) {
      std::cout << "taylor exactness (" << spec.name() << "): OK " << checked
                << " multidegrees\n";
      return 0;
    }
    std::cout << "taylor exactness (" << spec.name() << "): FAILED " << bad
              << "/" << checked << "\n";
    return 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Tor tables of face rings from complement presentations, with "
      "resolution/cohomology cross-checks and polyhedral-product series"};
  app.require_subcommand(1);

  std::string field_text = "rational";
  app.add_option("--field", field_text,
                 "coefficient field: rational or gf:p (p prime, p < 2^31)")
      ->capture_default_str();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of plain text");

  std::string input_file, pairs_file;
  std::vector<int> omega;
  bool all_omega = false;

  CLI::App* tor = app.add_subcommand("tor", "bigraded Tor table and series");
  tor->add_option("input", input_file, "input JSON document")->required();

  CLI::App* product =
      app.add_subcommand("product", "Tor algebra multiplication table");
  product->add_option("input", input_file, "input JSON document")->required();

  CLI::App* ma = app.add_subcommand(
      "ma", "cohomology series of a polyhedral product from (X,A) pairs");
  ma->add_option("input", input_file, "input JSON document")->required();
  ma->add_option("--pairs", pairs_file, "pairs JSON document")->required();
  ma->add_flag("--all-omega", all_omega,
               "sweep all vertex subsets, not just faces");

  CLI::App* zk = app.add_subcommand(
      "zk", "cohomology series of the moment-angle complex (D^2,S^1)");
  zk->add_option("input", input_file, "input JSON document")->required();

  CLI::App* s2s1 =
      app.add_subcommand("s2s1", "cohomology series of the (S^2,S^1) product");
  s2s1->add_option("input", input_file, "input JSON document")->required();

  CLI::App* link_cmd =
      app.add_subcommand("link", "reduced cohomology of a link");
  link_cmd->add_option("input", input_file, "input JSON document")->required();
  link_cmd->add_option("--omega", omega, "face, e.g. --omega 1,2")
      ->required()
      ->delimiter(',');

  CLI::App* compress_cmd = app.add_subcommand(
      "compress", "remove the vertices of omega from every generator");
  compress_cmd->add_option("input", input_file, "input JSON document")
      ->required();
  compress_cmd->add_option("--omega", omega, "vertex list, e.g. --omega 1,2")
      ->required()
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "randomized verification");
  verify->require_subcommand(1);
  int trials = -1, m_max = 8;
  std::uint64_t seed = 1;
  std::string verify_input;
  CLI::App* v_hochster = verify->add_subcommand(
      "hochster", "quotient-complex route vs subcomplex cohomology");
  CLI::App* v_taylor = verify->add_subcommand(
      "taylor", "multidegree-slice exactness of the Taylor complex");
  v_taylor->add_option("input", verify_input,
                       "optional document with a \"generators\" list");
  CLI::App* v_equiv = verify->add_subcommand(
      "equiv", "invariance under presentation changes");
  for (CLI::App* v : {v_hochster, v_taylor, v_equiv}) {
    v->add_option("--trials", trials, "number of random instances");
    v->add_option("--seed", seed, "random seed")->capture_default_str();
  }
  v_hochster->add_option("--m", m_max, "max vertex count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    FieldSpec spec = FieldSpec::parse(field_text);
    if (tor->parsed()) return cmd_tor(input_file, spec, as_json);
    if (product->parsed()) return cmd_product(input_file, spec, as_json);
    if (ma->parsed())
      return cmd_ma(input_file, pairs_file, spec, as_json, all_omega);
    if (zk->parsed()) return cmd_series(input_file, spec, as_json, false);
    if (s2s1->parsed()) return cmd_series(input_file, spec, as_json, true);
    if (link_cmd->parsed()) return cmd_link(input_file, omega, spec, as_json);
    if (compress_cmd->parsed())
      return cmd_compress(input_file, omega, as_json);
    if (verify->parsed()) {
      if (v_hochster->parsed())
        return with_field(spec, [&](auto field) {
          return report_suite(
              hochster_suite(m_max, trials < 0 ? 200 : trials, seed, field));
        });
      if (v_taylor->parsed()) {
        if (!verify_input.empty())
          return cmd_verify_taylor_file(verify_input, spec);
        return with_field(spec, [&](auto field) {
          return report_suite(
              taylor_suite(trials < 0 ? 100 : trials, seed, field));
        });
      }
      if (v_equiv->parsed())
        return with_field(spec, [&](auto field) {
          return report_suite(
              equivalence_suite(trials < 0 ? 100 : trials, seed, field));
        });
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
