// Command-line front end: classification table, catalog verification and
// ad-hoc lattice/matrix queries. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torlat/catalog.hpp"
#include "torlat/classification.hpp"
#include "torlat/isometry.hpp"
#include "torlat/json_io.hpp"
#include "torlat/lattice.hpp"
#include "torlat/wedge.hpp"

namespace {

using namespace torlat;

std::vector<ClassificationRow> collect_rows(std::optional<int> p) {
  std::vector<ClassificationRow> rows;
  for (int prime : {2, 3, 5}) {
    if (p && *p != prime) continue;
    for (auto& row : enumerate_table(prime)) rows.push_back(row);
  }
  return rows;
}

void print_text_table(const std::vector<ClassificationRow>& rows,
                      std::ostream& os) {
  os << " p | r | dim | a | T(G_sigma)\n";
  os << "---+---+-----+---+-----------\n";
  for (const auto& row : rows) {
    os << " " << row.p << " | " << row.r << " | " << row.dim << "   | "
       << row.a << " | " << row.lattice_name << "\n";
  }
}

int run_table(std::optional<int> p, const std::string& format) {
  if (p && *p != 2 && *p != 3 && *p != 5) {
    std::cerr << "error: supported primes are 2, 3 and 5\n";
    return 2;
  }
  auto rows = collect_rows(p);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) j.push_back(row_to_json(row));
    std::cout << j.dump(2) << "\n";
  } else {
    print_text_table(rows, std::cout);
  }
  return 0;
}

void print_report(const VerificationReport& report) {
  std::cout << (report.overall ? "PASS " : "FAIL ") << report.example << "\n";
  for (const auto& c : report.checks) {
    std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.check
              << ": expected " << c.expected << ", computed " << c.computed
              << "\n";
  }
}

int run_verify(const std::string& name, bool all, const std::string& format) {
  std::vector<VerificationReport> reports;
  if (all) {
    for (const auto& rec : catalog()) reports.push_back(verify_example(rec.name));
  } else {
    if (name.empty()) {
      std::cerr << "error: give an example name or --all\n";
      return 2;
    }
    try {
      reports.push_back(verify_example(name));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  bool ok = true;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
      j.push_back(report_to_json(r));
      ok = ok && r.overall;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      print_report(r);
      ok = ok && r.overall;
    }
  }
  return ok ? 0 : 1;
}

int run_lattice_info(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "error: " << path << " is not valid JSON\n";
    return 2;
  }
  IntMatrix m = matrix_from_json(j);
  if (!m.is_symmetric()) {
    std::cerr << "error: gram matrix is not symmetric\n";
    return 2;
  }
  Lattice l(m);
  auto [plus, minus] = l.signature();
  DiscriminantData d = discriminant(l);
  std::cout << "rank " << l.rank() << ", signature (" << plus << "," << minus
            << "), det " << l.det().get_str() << ", "
            << (l.is_even() ? "even" : "odd") << "\n";
  std::cout << "invariant factors:";
  if (d.invariant_factors.empty()) std::cout << " none (unimodular)";
  for (const auto& f : d.invariant_factors) std::cout << " " << f.get_str();
  std::cout << "\n";
  bool elementary = !d.invariant_factors.empty();
  for (const auto& f : d.invariant_factors)
    if (f != d.invariant_factors.front()) elementary = false;
  if (elementary && detail::is_prime(d.invariant_factors.front())) {
    std::cout << d.invariant_factors.front().get_str() << "-elementary, a = "
              << d.length_a << "\n";
    if (d.invariant_factors.front() == 2 && l.is_even())
      std::cout << "delta = " << delta_invariant(l) << "\n";
  }
  std::cout << "fingerprint: " << genus_fingerprint(l).to_string() << "\n";
  return 0;
}

int run_wedge(const std::string& path, bool fixed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "error: " << path << " is not valid JSON\n";
    return 2;
  }
  IntMatrix g = matrix_from_json(j);
  if (g.rows() != 4 || g.cols() != 4) {
    std::cerr << "error: wedge expects a 4x4 matrix\n";
    return 2;
  }
  Int d = det(g);
  if (d != 1 && d != -1) {
    std::cerr << "error: matrix must have determinant +-1\n";
    return 2;
  }
  H2Action action = wedge_square(g);
  std::cout << "Lambda^2 g =\n" << action.phi.to_string() << "\n";
  std::cout << "order on H^1: " << action.order_h1
            << ", order on H^2: " << action.order_h2 << "\n";
  if (d == 1) {
    Sublattice t = invariant_lattice(action);
    std::cout << "invariant lattice rank " << t.lattice.rank() << ", gram =\n"
              << t.lattice.gram.to_string() << "\n";
    std::cout << "fingerprint: " << genus_fingerprint(t.lattice).to_string()
              << "\n";
  } else {
    std::cout << "determinant -1: anti-isometry of the wedge pairing, no "
                 "invariant lattice computed\n";
  }
  if (fixed) {
    if (has_finite_fixed_locus(g))
      std::cout << "fixed points: " << fixed_point_count(g).get_str() << "\n";
    else
      std::cout << "fixed locus: positive-dimensional\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-theoretic invariants of prime-order automorphisms "
               "of complex 2-tori"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "print the classification table");
  std::optional<int> table_p;
  std::string table_format = "text";
  table->add_option("--p", table_p, "restrict to one prime (2, 3 or 5)");
  table->add_option("--format", table_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "verify catalog examples");
  std::string verify_name;
  bool verify_all = false;
  std::string verify_format = "text";
  verify->add_option("name", verify_name, "catalog example name");
  verify->add_flag("--all", verify_all, "verify every example");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* info = app.add_subcommand("lattice-info",
                                  "invariants of a gram matrix file");
  std::string info_path;
  info->add_option("file", info_path, "JSON gram matrix")->required();

  auto* wedge = app.add_subcommand("wedge",
                                   "induced action on second cohomology");
  std::string wedge_path;
  bool wedge_fixed = false;
  wedge->add_option("file", wedge_path, "JSON 4x4 matrix")->required();
  wedge->add_flag("--fixed", wedge_fixed, "also report the fixed locus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) return run_table(table_p, table_format);
    if (verify->parsed()) return run_verify(verify_name, verify_all,
                                            verify_format);
    if (info->parsed()) return run_lattice_info(info_path);
    if (wedge->parsed()) return run_wedge(wedge_path, wedge_fixed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
