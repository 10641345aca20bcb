#include "balcx/cli.hpp"

#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "balcx/errors.hpp"
#include "balcx/fixtures.hpp"
#include "balcx/report.hpp"

namespace balcx {

namespace {

struct Settings {
  unsigned jobs = 1;
  std::optional<std::uint64_t> characteristic;
  std::string source;
  std::string second_source;
  std::optional<int> n;
  std::optional<int> vertex;
  int vertices = 5;
  int max_part = 64;
  bool pretty = false;
  std::string fixture_name;
  std::vector<std::uint64_t> chars{0, 2, 3, 5};
};

FieldSpec field_of(const Settings& s, const Json& doc) {
  if (s.characteristic) return FieldSpec(*s.characteristic);
  if (auto it = doc.find("char"); it != doc.end() && it->is_number_unsigned()) {
    return FieldSpec(it->get<std::uint64_t>());
  }
  return FieldSpec{};
}

SolverOptions solver_options(const Settings& s) {
  auto options = SolverOptions::from_environment();
  options.jobs = s.jobs;
  return options;
}

EnumerationOptions enumeration_options(const Settings& s) {
  auto options = EnumerationOptions::from_environment();
  options.jobs = s.jobs;
  return options;
}

DivisorClass class_of_document(const Json& doc) {
  if (doc.contains("simplices")) return divisor_class_of(complex_from_json(doc));
  return divisor_class_from_json(doc);
}

Json verdict_json(const BalanceVerdict& v) {
  Json out = to_json(v);
  out.erase("basis");
  return out;
}

Json hypertree_list(const std::vector<Hypertree>& trees) {
  Json list = Json::array();
  for (const auto& h : trees) {
    Json entry = to_json(h);
    entry["minimal_degree"] = minimal_degree(h);
    list.push_back(std::move(entry));
  }
  return list;
}

Json error_object(const char* type, const std::string& message) {
  return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced complexes, divisor classes and hypertrees with exact arithmetic", "balcx"};
  app.require_subcommand(1);
  Settings s;
  std::function<Json()> action;
  app.add_option("--jobs", s.jobs, "Worker threads for searches; output does not depend on it")
      ->check(CLI::Range(1U, 256U));

  auto add_char = [&s](CLI::App* cmd) {
    cmd->add_option("--char", s.characteristic, "Field characteristic: 0 or a prime");
  };
  auto add_source = [&s](CLI::App* cmd, const char* what) {
    cmd->add_option("source", s.source, what)->required();
  };

  auto* balance = app.add_subcommand("balance", "Decide balanceability of a complex");
  add_char(balance);
  add_source(balance, "Complex JSON (file, - or fixtures://NAME)");
  balance->callback([&] {
    action = [&] {
      const Json doc = load_document(s.source);
      return verdict_json(decide_balanceable(complex_from_json(doc), field_of(s, doc), solver_options(s)));
    };
  });

  auto* minimal = app.add_subcommand("minimal", "Decide minimality of a complex");
  add_char(minimal);
  add_source(minimal, "Complex JSON");
  minimal->callback([&] {
    action = [&] {
      const Json doc = load_document(s.source);
      const Complex complex = complex_from_json(doc);
      const FieldSpec field = field_of(s, doc);
      const auto verdict = decide_balanceable(complex, field, solver_options(s));
      Json out = verdict_json(verdict);
      out["minimal"] = is_minimal(complex, field);
      return out;
    };
  });

  auto* classify = app.add_subcommand("classify", "Match a graph against the minimal patterns");
  add_char(classify);
  add_source(classify, "1-complex JSON");
  classify->callback([&] {
    action = [&] {
      const Json doc = load_document(s.source);
      const Complex graph = complex_from_json(doc);
      const FieldSpec field = field_of(s, doc);
      const auto verdict = decide_balanceable(graph, field, solver_options(s));
      Json out = to_json(classify_graph(graph, field));
      out["char"] = field.characteristic();
      out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
      return out;
    };
  });

  auto* cls = app.add_subcommand("class", "Divisor class of a complex");
  add_source(cls, "Complex JSON");
  cls->add_option("--n", s.n, "Number of marked points (default: the document's n)");
  cls->callback([&] {
    action = [&] {
      Complex complex = complex_from_json(load_document(s.source));
      if (s.n) complex = complex.with_n(*s.n);
      return to_json(divisor_class_of(complex));
    };
  });

  auto* pairing = app.add_subcommand("pair", "Intersection number of a curve and a divisor class");
  pairing->add_option("curve", s.source, "Curve class JSON")->required();
  pairing->add_option("divisor", s.second_source, "Divisor class or complex JSON")->required();
  pairing->callback([&] {
    action = [&] {
      const CurveClass curve = curve_class_from_json(load_document(s.source));
      return Json{{"value", pair(curve, class_of_document(load_document(s.second_source)))}};
    };
  });

  auto* invariance = app.add_subcommand("invariance", "Additive-group invariance of a weighted complex");
  add_char(invariance);
  add_source(invariance, "Weighted complex JSON");
  invariance->callback([&] {
    action = [&] {
      const Json doc = load_document(s.source);
      const auto wc = weighted_complex_from_json(doc, field_of(s, doc));
      Json out = invariance_report(laurent_of(wc));
      out["balanced"] = is_balanced(wc);
      return out;
    };
  });

  auto* clear = app.add_subcommand("clear", "Clear denominators into a Cox-ring element");
  add_char(clear);
  add_source(clear, "Weighted complex JSON");
  clear->add_flag("--pretty", s.pretty, "Add a plain-text rendering");
  clear->callback([&] {
    action = [&] {
      const Json doc = load_document(s.source);
      const auto f = laurent_of(weighted_complex_from_json(doc, field_of(s, doc)));
      const auto g = clear_denominators(f);
      Json out = to_json(g);
      if (s.pretty) {
        out["laurent"] = pretty(f);
        out["pretty"] = pretty(g);
      }
      return out;
    };
  });

  auto* hypertree = app.add_subcommand("hypertree", "Hypertree axioms, degrees and enumeration");
  hypertree->require_subcommand(1);
  auto* check = hypertree->add_subcommand("check", "Check the hypertree axioms");
  add_source(check, "Hypertree JSON");
  check->callback([&] {
    action = [&] {
      const auto verdict = check_axioms(hypertree_from_json(load_document(s.source)));
      return Json{{"passes", verdict.passes},
                  {"first_violated", verdict.first_violated ? Json(*verdict.first_violated) : Json(nullptr)},
                  {"violated", verdict.violated},
                  {"message", verdict.message}};
    };
  });
  auto* degree = hypertree->add_subcommand("degree", "Degree at a vertex, or outside the vertex set");
  add_source(degree, "Hypertree JSON");
  degree->add_option("--vertex", s.vertex, "Vertex label; omit for a point outside");
  degree->callback([&] {
    action = [&] {
      const Hypertree h = hypertree_from_json(load_document(s.source));
      return Json{{"degree", hypertree_degree(h, s.vertex)}, {"minimal_degree", minimal_degree(h)}};
    };
  });
  auto add_enumerate = [&](CLI::App* cmd) {
    cmd->add_option("--n", s.n, "Number of vertices")->required();
    cmd->add_option("--max-part", s.max_part, "Largest part size")->check(CLI::PositiveNumber);
    cmd->callback([&] {
      action = [&] {
        const auto trees = enumerate_hypertrees(*s.n, s.max_part, enumeration_options(s));
        return Json{{"n", *s.n}, {"count", trees.size()}, {"hypertrees", hypertree_list(trees)}};
      };
    });
  };
  add_enumerate(hypertree->add_subcommand("enumerate", "Hypertrees up to isomorphism"));
  add_enumerate(app.add_subcommand("enumerate-hypertrees", "Hypertrees up to isomorphism"));

  auto* enum_minimal = app.add_subcommand("enumerate-minimal", "Minimal graphs up to isomorphism");
  enum_minimal->add_option("--vertices", s.vertices, "Maximum vertex count")->required();
  add_char(enum_minimal);
  enum_minimal->callback([&] {
    action = [&] {
      const FieldSpec field(s.characteristic.value_or(0));
      Json graphs = Json::array();
      for (const auto& graph : enumerate_minimal_graphs(s.vertices, field, enumeration_options(s))) {
        Json entry = to_json(graph);
        entry["shape"] = to_json(classify_graph(graph, field));
        const auto verdict = decide_balanceable(graph, field, solver_options(s));
        entry["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
        graphs.push_back(std::move(entry));
      }
      return Json{{"vertices", s.vertices},
                  {"char", field.characteristic()},
                  {"count", graphs.size()},
                  {"graphs", std::move(graphs)}};
    };
  });

  auto* fixtures = app.add_subcommand("fixtures", "List embedded fixtures or print one");
  fixtures->add_option("name", s.fixture_name, "Fixture name");
  fixtures->callback([&] {
    action = [&] {
      if (s.fixture_name.empty()) return Json{{"version", kFixtureVersion}, {"fixtures", fixture_names()}};
      return fixture(s.fixture_name);
    };
  });

  auto* report = app.add_subcommand("report", "Aggregate reports");
  report->require_subcommand(1);
  auto* sweep = report->add_subcommand("char-sweep", "Balanceability across characteristics");
  add_source(sweep, "Complex JSON");
  sweep->add_option("--chars", s.chars, "Characteristics to test")->delimiter(',');
  sweep->callback([&] {
    action = [&] {
      return char_sweep_report(complex_from_json(load_document(s.source)), s.chars, solver_options(s));
    };
  });
  auto* catalogue = report->add_subcommand("catalogue", "Minimal graphs against the pattern classification");
  catalogue->add_option("--vertices", s.vertices, "Maximum vertex count")->required();
  add_char(catalogue);
  catalogue->callback([&] {
    action = [&] {
      return catalogue_report(s.vertices, FieldSpec(s.characteristic.value_or(0)), enumeration_options(s));
    };
  });

  std::vector<const char*> argv{"balcx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    out << action().dump() << '\n';
    return 0;
  } catch (const BudgetExceeded& e) {
    out << error_object("budget", e.what()).dump() << '\n';
  } catch (const DomainError& e) {
    out << error_object("domain", e.what()).dump() << '\n';
  } catch (const Json::exception& e) {
    out << error_object("json", e.what()).dump() << '\n';
  }
  return 1;
}

}  // namespace balcx
