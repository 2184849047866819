#include "cclosed/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cclosed/classify.hpp"
#include "cclosed/enumerate.hpp"
#include "cclosed/error.hpp"
#include "cclosed/expr.hpp"
#include "cclosed/lemma_suite.hpp"
#include "cclosed/power.hpp"
#include "cclosed/quotients.hpp"
#include "cclosed/semigroup.hpp"
#include "cclosed/table_io.hpp"

namespace cclosed::cli {

  using json = nlohmann::json;

  namespace {

    json to_json(Subset const& s) {
      return s.members();
    }

    json to_json(CayleyTable const& t) {
      json rows = json::array();
      for (element_type x = 0; x < t.size(); ++x) {
        auto const r = t.row(x);
        rows.push_back(std::vector<element_type>(r.begin(), r.end()));
      }
      return rows;
    }

    json to_json(Predicate const& p) {
      return {{"value", p.value}, {"witness", p.witness}};
    }

    std::string join(std::vector<element_type> const& xs, char const* sep) {
      std::ostringstream os;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i == 0 ? "" : sep) << xs[i];
      }
      return os.str();
    }

    std::vector<element_type> parse_elements(std::string const& text,
                                             std::size_t        n) {
      std::vector<element_type> out;
      std::stringstream         ss(text);
      std::string               item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) {
          continue;
        }
        std::size_t pos   = 0;
        unsigned long value = 0;
        try {
          value = std::stoul(item, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos != item.size() || value >= n) {
          throw ArgumentError("bad element '" + item + "'");
        }
        out.push_back(static_cast<element_type>(value));
      }
      return out;
    }

    std::vector<std::pair<element_type, element_type>>
    parse_pairs(std::string const& text, std::size_t n) {
      std::vector<std::pair<element_type, element_type>> out;
      std::stringstream                                  ss(text);
      std::string                                        item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) {
          continue;
        }
        auto const colon = item.find(':');
        if (colon == std::string::npos) {
          throw ArgumentError("bad pair '" + item + "', expected X:Y");
        }
        auto const x = parse_elements(item.substr(0, colon), n);
        auto const y = parse_elements(item.substr(colon + 1), n);
        if (x.size() != 1 || y.size() != 1) {
          throw ArgumentError("bad pair '" + item + "', expected X:Y");
        }
        out.emplace_back(x[0], y[0]);
      }
      return out;
    }

    std::string blocks_to_string(Congruence const& c) {
      std::ostringstream os;
      bool               first = true;
      for (auto const& b : c.blocks()) {
        os << (first ? "" : ",") << '{' << join(b, ",") << '}';
        first = false;
      }
      return os.str();
    }

    //////////////////////////////////////////////////////////////////////
    // Commands
    //////////////////////////////////////////////////////////////////////

    int cmd_validate(std::string const& path, bool as_json, std::ostream& out) {
      auto const t = read_table_file(path, Associativity::skip);
      auto const r = validate(t);
      if (as_json) {
        json j{{"size", t.size()},
               {"associative", r.associative},
               {"commutative", r.commutative}};
        j["associativity_witness"] = r.associativity_witness
                                         ? json(*r.associativity_witness)
                                         : json(nullptr);
        j["commutativity_witness"] = r.commutativity_witness
                                         ? json(*r.commutativity_witness)
                                         : json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << "size: " << t.size() << '\n';
        out << "associative: " << (r.associative ? "yes" : "no");
        if (r.associativity_witness) {
          auto const& w = *r.associativity_witness;
          out << " (witness " << w[0] << "," << w[1] << "," << w[2] << ")";
        }
        out << '\n';
        out << "commutative: " << (r.commutative ? "yes" : "no");
        if (r.commutativity_witness) {
          auto const& w = *r.commutativity_witness;
          out << " (witness " << w[0] << "," << w[1] << ")";
        }
        out << '\n';
      }
      return r.associative ? success : findings;
    }

    int cmd_analyze(std::string const& path, bool as_json, std::ostream& out) {
      auto const t      = read_table_file(path);
      auto const report = validate(t);
      auto const e      = idempotents(t);
      auto const es     = e.members();

      // covering pairs of the natural order on E
      std::vector<std::pair<element_type, element_type>> hasse;
      for (auto a : es) {
        for (auto b : es) {
          if (a == b || !natural_le(t, a, b)) {
            continue;
          }
          bool covered = true;
          for (auto c : es) {
            if (c != a && c != b && natural_le(t, a, c) && natural_le(t, c, b)) {
              covered = false;
              break;
            }
          }
          if (covered) {
            hasse.emplace_back(a, b);
          }
        }
      }

      std::vector<Subset> h_classes;
      Subset              seen(t.size());
      for (element_type x = 0; x < t.size(); ++x) {
        if (!seen.contains(x)) {
          auto h = h_class(t, x);
          for (auto y : h.members()) {
            seen.insert(y);
          }
          h_classes.push_back(std::move(h));
        }
      }

      std::optional<std::vector<element_type>> pi;
      std::string                              pi_error;
      try {
        pi = pi_map(t);
      } catch (PreconditionError const& err) {
        pi_error = err.what();
      }
      auto const z     = center(t);
      auto const h     = clifford_part(t);
      auto const chain = max_chain_length(t);

      if (as_json) {
        json j{{"size", t.size()},
               {"commutative", report.commutative},
               {"idempotents", to_json(e)},
               {"center", to_json(z)},
               {"clifford_part", to_json(h)},
               {"max_chain", {{"length", chain.length}, {"witness", to_json(chain.witness)}}},
               {"subgroup_exponent", subgroup_exponent(t)}};
        j["hasse"] = json::array();
        for (auto const& [a, b] : hasse) {
          j["hasse"].push_back({a, b});
        }
        j["h_classes"] = json::array();
        for (auto const& c : h_classes) {
          j["h_classes"].push_back(to_json(c));
        }
        j["pi"] = pi ? json(*pi) : json(nullptr);
        if (!pi) {
          j["pi_error"] = pi_error;
        }
        j["monogenic"] = json::array();
        for (element_type x = 0; x < t.size(); ++x) {
          auto const m = monogenic_data(t, x);
          j["monogenic"].push_back(
              {{"element", x}, {"index", m.index}, {"period", m.period}, {"pi", m.pi}});
        }
        out << j.dump(2) << '\n';
        return success;
      }

      out << "size: " << t.size() << '\n';
      out << "commutative: " << (report.commutative ? "yes" : "no") << '\n';
      out << "idempotents E: " << e.to_string() << '\n';
      out << "natural order on E (covering pairs e < f):";
      if (hasse.empty()) {
        out << " none";
      }
      for (auto const& [a, b] : hasse) {
        out << ' ' << a << '<' << b;
      }
      out << '\n';
      out << "H-classes:";
      for (auto const& c : h_classes) {
        out << ' ' << c.to_string();
      }
      out << '\n';
      out << "Clifford part H: " << h.to_string() << '\n';
      out << "center Z: " << z.to_string() << '\n';
      if (pi) {
        out << "pi:";
        for (element_type x = 0; x < t.size(); ++x) {
          out << ' ' << x << "->" << (*pi)[x];
        }
        out << '\n';
      } else {
        out << "pi: undefined (" << pi_error << ")\n";
      }
      out << "longest chain: " << chain.length << ' ' << chain.witness.to_string()
          << '\n';
      out << "subgroup exponent: " << subgroup_exponent(t) << '\n';
      out << "powers (index, period):";
      for (element_type x = 0; x < t.size(); ++x) {
        auto const m = monogenic_data(t, x);
        out << ' ' << x << ":(" << m.index << ',' << m.period << ')';
      }
      out << '\n';
      return success;
    }

    int cmd_classify(std::string const& input,
                     bool               as_json,
                     std::ostream&      out,
                     std::ostream&      err) {
      auto const first = input.find_first_not_of(" \t\r\n");
      std::optional<Descriptor> d;
      if (first != std::string::npos && input[first] == '(') {
        d = parse_descriptor(input);
      } else {
        auto const t = read_table_file(input);
        auto const r = validate(t);
        if (!r.commutative) {
          auto const& w = *r.commutativity_witness;
          err << "classify: " << input << " is not commutative (" << w[0] << "*"
              << w[1] << " != " << w[1] << "*" << w[0]
              << "); closedness is characterized for commutative semigroups "
                 "only, and the group criterion fails without commutativity\n";
          return usage_error;
        }
        d = Descriptor::finite_table(t, input);
      }
      auto const v = classify(*d);
      if (as_json) {
        auto const& p = v.profile;
        json        j{{"descriptor", render(*d)},
               {"c_closed", v.c_closed},
               {"ideally_closed", v.ideally_closed},
               {"projectively_closed", v.projectively_closed},
               {"c_closed_citation", v.c_closed_citation},
               {"ideal_citation", v.ideal_citation}};
        j["cardinality"] = p.cardinality.is_finite() ? json(*p.cardinality.finite)
                                                     : json("countably-infinite");
        j["profile"] = {{"periodic", to_json(p.periodic)},
                        {"chain_finite", to_json(p.chain_finite)},
                        {"subgroups_bounded", to_json(p.subgroups_bounded)},
                        {"almost_clifford", to_json(p.almost_clifford)},
                        {"clifford", p.clifford},
                        {"has_singleton_square", to_json(p.has_singleton_square)}};
        j["profile"]["exponent"] = p.exponent ? json(*p.exponent) : json(nullptr);
        j["failing_condition"]
            = v.failing_condition ? json{{"name", v.failing_condition->name},
                                         {"witness", v.failing_condition->witness}}
                                  : json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << "descriptor: " << render(*d) << '\n' << explain(v);
      }
      return success;
    }

    int cmd_quotient(std::string const& path,
                     std::string const& ideal_text,
                     std::string const& pairs_text,
                     bool               as_json,
                     std::ostream&      out) {
      auto const t = read_table_file(path);
      Quotient   q{t, {}};
      std::vector<std::string> comments;
      std::optional<Congruence> congruence;
      if (!ideal_text.empty()) {
        auto const elements = parse_elements(ideal_text, t.size());
        auto const ideal    = Subset::of(t.size(), elements);
        q                   = rees_quotient(t, ideal);
        comments.push_back("Rees quotient by the ideal " + ideal.to_string());
      } else {
        congruence = congruence_closure(t, parse_pairs(pairs_text, t.size()));
        q          = quotient_by_congruence(t, *congruence);
        comments.push_back("quotient by the congruence "
                           + blocks_to_string(*congruence));
      }
      if (as_json) {
        json j{{"table", to_json(q.table)}, {"projection", q.projection}};
        if (congruence) {
          j["classes"] = congruence->blocks();
        }
        out << j.dump(2) << '\n';
        return success;
      }
      comments.push_back("projection: " + join(q.projection, " "));
      out << render_table(q.table, comments);
      return success;
    }

    int cmd_power(std::string const& path, bool as_json, std::ostream& out) {
      auto const t = read_table_file(path);
      auto const p = power_semigroup(t);
      if (as_json) {
        json subsets = json::array();
        for (element_type i = 0; i < p.table().size(); ++i) {
          subsets.push_back(to_json(p.subset(i)));
        }
        out << json{{"elements", subsets}, {"table", to_json(p.table())}}.dump(2)
            << '\n';
        return success;
      }
      std::vector<std::string> comments{"power semigroup of nonempty subsets"};
      for (element_type i = 0; i < p.table().size(); ++i) {
        comments.push_back(std::to_string(i) + " = " + p.subset(i).to_string());
      }
      out << render_table(p.table(), comments);
      return success;
    }

    int cmd_enumerate(std::size_t        order,
                      bool               up_to_iso,
                      std::string const& dir,
                      bool               as_json,
                      std::ostream&      out) {
      auto const tables = enumerate_commutative(
          order, up_to_iso ? UpTo::isomorphism : UpTo::labelled);
      if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        for (std::size_t k = 0; k < tables.size(); ++k) {
          std::ostringstream name;
          name << "order" << order << '-' << std::setw(6) << std::setfill('0')
               << k << ".tbl";
          write_table_file((std::filesystem::path(dir) / name.str()).string(),
                           tables[k],
                           {"commutative semigroup of order " + std::to_string(order)
                            + ", number " + std::to_string(k)});
        }
      }
      if (as_json) {
        json j{{"order", order}, {"up_to_iso", up_to_iso}, {"count", tables.size()}};
        j["tables"] = json::array();
        for (auto const& t : tables) {
          j["tables"].push_back(to_json(t));
        }
        out << j.dump(2) << '\n';
        return success;
      }
      out << "# " << tables.size() << " commutative semigroups of order " << order
          << (up_to_iso ? " up to isomorphism" : "") << '\n';
      if (dir.empty()) {
        for (std::size_t k = 0; k < tables.size(); ++k) {
          out << '\n' << render_table(tables[k], {"table " + std::to_string(k)});
        }
      } else {
        out << "# written to " << dir << '\n';
      }
      return success;
    }

    int cmd_suite(std::size_t        max_order,
                  bool               up_to_iso,
                  std::string const& dir,
                  bool               as_json,
                  std::ostream&      out) {
      if (max_order < 1 || max_order > max_enumeration_order) {
        throw ArgumentError("--max-order must be between 1 and "
                            + std::to_string(max_enumeration_order));
      }
      json        orders = json::array();
      std::size_t failures = 0;
      std::ostringstream text;
      for (std::size_t n = 1; n <= max_order; ++n) {
        auto const tables = enumerate_commutative(
            n, up_to_iso ? UpTo::isomorphism : UpTo::labelled);
        auto const reports = kernels::run_suite_parallel(tables);
        std::size_t order_failures = 0;
        json        failed         = json::array();
        for (std::size_t k = 0; k < tables.size(); ++k) {
          if (reports[k].all_passed()) {
            continue;
          }
          ++order_failures;
          std::vector<std::string> comments{"lemma suite counterexample"};
          for (auto const& p : reports[k].properties) {
            if (!p.passed) {
              comments.push_back(p.name + ": " + p.counterexample);
              text << "FAIL order " << n << " table " << k << ": " << p.name
                   << " (" << p.counterexample << ")\n";
            }
          }
          std::filesystem::create_directories(dir);
          auto const file = (std::filesystem::path(dir)
                             / ("order" + std::to_string(n) + "-"
                                + std::to_string(k) + ".tbl"))
                                .string();
          write_table_file(file, tables[k], comments);
          failed.push_back({{"index", k}, {"failures", reports[k].failures()}, {"file", file}});
        }
        failures += order_failures;
        text << "order " << n << ": " << tables.size() << " tables, "
             << order_failures << " with failures\n";
        orders.push_back({{"order", n},
                          {"tables", tables.size()},
                          {"failed", failed}});
      }
      if (as_json) {
        out << json{{"orders", orders}, {"all_passed", failures == 0}}.dump(2)
            << '\n';
      } else {
        out << text.str();
        out << (failures == 0 ? "all properties hold\n"
                              : std::to_string(failures)
                                    + " tables with failures; counterexamples in "
                                    + dir + "\n");
      }
      return failures == 0 ? success : findings;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closedness classification of commutative semigroups", "cclosed"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string path, input, ideal, pairs, dir;
    std::size_t order = 0;
    bool        up_to_iso = false;

    auto* validate_cmd = app.add_subcommand("validate", "check associativity and commutativity");
    validate_cmd->add_option("file", path, "table file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "idempotents, H-classes, pi, center");
    analyze_cmd->add_option("file", path, "table file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "closedness verdicts");
    classify_cmd->add_option("input", input, "descriptor expression or table file")
        ->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "Rees or congruence quotient");
    quotient_cmd->add_option("file", path, "table file")->required();
    auto* ideal_opt = quotient_cmd->add_option("--ideal", ideal, "comma-separated ideal elements");
    auto* pairs_opt = quotient_cmd->add_option("--pairs", pairs, "generating pairs X:Y,...");
    ideal_opt->excludes(pairs_opt);

    auto* power_cmd = app.add_subcommand("power", "power semigroup of nonempty subsets");
    power_cmd->add_option("file", path, "table file")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all commutative semigroups of an order");
    enumerate_cmd->add_option("--order", order, "order (1-5)")->required();
    enumerate_cmd->add_flag("--up-to-iso", up_to_iso, "one table per isomorphism class");
    enumerate_cmd->add_option("--out", dir, "write a corpus of table files here");

    auto* suite_cmd = app.add_subcommand("suite", "run the lemma suite on every table up to an order");
    suite_cmd->add_option("--max-order", order, "largest order (1-5)")->required();
    suite_cmd->add_flag("--up-to-iso", up_to_iso, "one table per isomorphism class");
    std::string counterexample_dir = "suite-counterexamples";
    suite_cmd->add_option("--counterexamples", counterexample_dir,
                          "directory for counterexample tables");

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    std::vector<std::string> argv_storage{"cclosed"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_storage) {
      argv.push_back(a.c_str());
    }

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "cclosed: " << e.what() << '\n';
      return usage_error;
    }

    try {
      if (validate_cmd->parsed()) {
        return cmd_validate(path, as_json, out);
      }
      if (analyze_cmd->parsed()) {
        return cmd_analyze(path, as_json, out);
      }
      if (classify_cmd->parsed()) {
        return cmd_classify(input, as_json, out, err);
      }
      if (quotient_cmd->parsed()) {
        if (ideal_opt->count() == 0 && pairs_opt->count() == 0) {
          err << "cclosed: quotient needs --ideal or --pairs\n";
          return usage_error;
        }
        return cmd_quotient(path, ideal, pairs, as_json, out);
      }
      if (power_cmd->parsed()) {
        return cmd_power(path, as_json, out);
      }
      if (enumerate_cmd->parsed()) {
        return cmd_enumerate(order, up_to_iso, dir, as_json, out);
      }
      if (suite_cmd->parsed()) {
        return cmd_suite(order, up_to_iso, counterexample_dir, as_json, out);
      }
    } catch (Error const& e) {
      err << "cclosed: " << e.what() << '\n';
      return usage_error;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "cclosed: " << e.what() << '\n';
      return usage_error;
    }
    return usage_error;
  }

}  // namespace cclosed::cli
