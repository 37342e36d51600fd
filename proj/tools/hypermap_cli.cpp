#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypermaps/hypermaps.hpp"
#include "json.hpp"

namespace hm = hypermaps;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;
constexpr int exit_invalid = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string render(const hm::Hypermap& h, bool json) {
  return json ? hm::to_json(h).dump(2) + "\n" : hm::to_text(h);
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::size_t value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-' || value == 0) {
    throw UsageError(what + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

std::vector<std::size_t> parse_type(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_count(item, "type entry"));
  if (out.size() != 3) throw UsageError("type must be three comma-separated integers, got '" + text + "'");
  return out;
}

hm::Hypermap build(const std::string& family, const std::vector<std::string>& params) {
  const auto param = [&](const char* what) {
    if (params.size() != 1) throw UsageError(family + " takes exactly one parameter (" + what + ")");
    return params.front();
  };
  if (family == "Dn") return hm::build_dihedral(parse_count(param("n"), "n"));
  if (family == "Pn") return hm::build_prism(parse_count(param("n"), "n"));
  if (family == "Mk") return hm::build_mk(parse_count(param("k"), "k"));
  if (family == "from-type") {
    const auto t = parse_type(param("l,m,n"));
    return hm::regular_from_type(t[0], t[1], t[2]);
  }
  if (family == "from-presentation") {
    return hm::regular_from_presentation(hm::Presentation::parse(param("relators")));
  }
  if (family == "named") return hm::build_named(param("name"));
  if (auto p = hm::parse_platonic(family)) {
    if (!params.empty()) throw UsageError(family + " takes no parameters");
    return hm::build_platonic(*p);
  }
  throw UsageError("unknown family '" + family + "'");
}

hm::Hypermap transform(const std::string& op, const hm::Hypermap& h, const std::string& sigma) {
  if (op == "wal") return hm::walsh(h);
  if (op == "pin") return hm::pin(h);
  if (op == "unwal") return hm::unwalsh(h);
  if (op == "unpin") return hm::unpin(h);
  if (op == "dual") {
    if (sigma.empty()) throw UsageError("dual requires --sigma");
    return hm::dual(h, hm::Sigma::parse(sigma));
  }
  throw UsageError("unknown transform '" + op + "'");
}

int report_rows(const std::vector<hm::VerificationRow>& rows, bool json, const std::string& output) {
  std::ostringstream out;
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json r{{"table", row.table}, {"row", row.row}, {"construction", row.construction},
                       {"status", row.match() ? "match" : "mismatch"}};
      r["n"] = row.n ? nlohmann::json(*row.n) : nlohmann::json();
      for (const auto& f : row.fields) r["fields"][f.name] = {{"expected", f.expected}, {"computed", f.computed}};
      j.push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
  } else {
    std::size_t matched = 0;
    for (const auto& row : rows) {
      out << (row.match() ? "match    " : "MISMATCH ") << row.label() << '\n';
      for (const auto& f : row.fields) {
        if (!f.match()) out << "    " << f.name << ": expected " << f.expected << ", computed " << f.computed << '\n';
      }
      matched += row.match() ? 1 : 0;
    }
    out << matched << "/" << rows.size() << " rows match\n";
  }
  write_output(output, out.str());
  return hm::all_match(rows) ? exit_ok : exit_mismatch;
}

int report_oracle(const hm::OracleReport& report, bool json, const std::string& output) {
  std::ostringstream out;
  if (json) {
    nlohmann::json j;
    for (const auto& s : report.sizes) {
      j["sizes"].push_back({{"flags", s.flags},
                            {"raw_triples", s.raw_triples},
                            {"transitive_triples", s.transitive_triples},
                            {"classes", s.classes},
                            {"classes_second_pass", s.classes_second_pass},
                            {"spherical", s.spherical},
                            {"spherical_uniform", s.spherical_uniform},
                            {"spherical_bipartite", s.spherical_bipartite},
                            {"spherical_bipartite_uniform", s.spherical_bipartite_uniform}});
    }
    j["uniform_counterexamples"] = report.uniform_counterexamples;
    j["bipartite_counterexamples"] = report.bipartite_counterexamples;
    j["unmatched_bipartite"] = report.unmatched_bipartite;
    j["passed"] = report.passed();
    out << j.dump(2) << '\n';
  } else {
    out << "flags  triples  transitive  classes  second-pass  spherical  uniform  bipartite  bip-uniform\n";
    for (const auto& s : report.sizes) {
      out << s.flags << "  " << s.raw_triples << "  " << s.transitive_triples << "  " << s.classes << "  "
          << s.classes_second_pass << "  " << s.spherical << "  " << s.spherical_uniform << "  "
          << s.spherical_bipartite << "  " << s.spherical_bipartite_uniform << '\n';
    }
    for (const auto& c : report.uniform_counterexamples) out << "uniform but not regular: " << c << '\n';
    for (const auto& c : report.bipartite_counterexamples) out << "bipartite-uniform but not bipartite-regular: " << c << '\n';
    for (const auto& c : report.unmatched_bipartite) out << "bipartite but neither Wal nor Pin: " << c << '\n';
    out << (report.passed() ? "passed" : "FAILED") << '\n';
  }
  write_output(output, out.str());
  return report.passed() ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypermap constructions, analysis and table verification"};
  app.require_subcommand(1);

  std::string output;
  bool json = false;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", output, "Output path (default stdout)");
    sub->add_flag("--json", json, "Emit JSON");
  };

  std::string family;
  std::vector<std::string> params;
  auto* build_cmd = app.add_subcommand("build", "Build a named hypermap family");
  build_cmd->add_option("family", family, "Dn, Pn, T, C, O, D, I, Mk, from-type, from-presentation, named")
      ->required();
  build_cmd->add_option("params", params, "Family parameter (n, k, l,m,n or relators)");
  common(build_cmd);

  std::string op;
  std::string input;
  std::string sigma;
  auto* transform_cmd = app.add_subcommand("transform", "Apply wal, pin, unwal, unpin or dual");
  transform_cmd->add_option("op", op, "wal, pin, unwal, unpin, dual")->required();
  transform_cmd->add_option("input", input, "Hypermap document ('-' for stdin)")->required();
  transform_cmd->add_option("--sigma", sigma, "Permutation of {0,1,2} for dual, e.g. 02");
  common(transform_cmd);

  bool table = false;
  std::size_t max_order = hm::AnalysisOptions{}.max_monodromy_order;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report the invariants of a hypermap");
  analyze_cmd->add_option("input", input, "Hypermap document ('-' for stdin)")->required();
  analyze_cmd->add_flag("--table", table, "Human-readable table");
  analyze_cmd->add_option("--max-order", max_order, "Limit on |Mon| for quotient computations");
  common(analyze_cmd);

  std::size_t n_max = 6;
  std::size_t k_max = 8;
  std::size_t max_flags = 8;
  auto* t2_cmd = app.add_subcommand("verify-table2", "Check the bipartite-regular spherical table");
  t2_cmd->add_option("--n-max", n_max, "Largest family parameter")->check(CLI::PositiveNumber);
  common(t2_cmd);
  auto* t3_cmd = app.add_subcommand("verify-table3", "Check closure covers, cores and irregularity");
  t3_cmd->add_option("--n-max", n_max, "Largest family parameter")->check(CLI::PositiveNumber);
  common(t3_cmd);
  auto* mk_cmd = app.add_subcommand("verify-mk", "Check the irregularity indices of Pin(M_k), Wal(M_k)");
  mk_cmd->add_option("--k-max", k_max, "Largest k")->check(CLI::PositiveNumber);
  common(mk_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive check of small spherical hypermaps");
  oracle_cmd->add_option("--max-flags", max_flags, "Largest flag count (at most 8)")->check(CLI::Range(2, 8));
  common(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (build_cmd->parsed()) {
      write_output(output, render(build(family, params), json));
    } else if (transform_cmd->parsed()) {
      const auto h = hm::parse_document(read_input(input));
      write_output(output, render(transform(op, h, sigma), json));
    } else if (analyze_cmd->parsed()) {
      const auto h = hm::parse_document(read_input(input));
      const auto report = hm::analyze(h, {max_order});
      if (json) {
        write_output(output, hm::to_json(report).dump(2) + "\n");
      } else {
        write_output(output, table ? hm::to_table(report) : hm::to_text(report));
      }
    } else if (t2_cmd->parsed()) {
      return report_rows(hm::verify_table2(n_max), json, output);
    } else if (t3_cmd->parsed()) {
      return report_rows(hm::verify_table3(n_max), json, output);
    } else if (mk_cmd->parsed()) {
      return report_rows(hm::verify_theorem_mk(k_max), json, output);
    } else if (oracle_cmd->parsed()) {
      return report_oracle(hm::brute_oracle(max_flags), json, output);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const hm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_ok;
}
