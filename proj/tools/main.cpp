// Command-line front end: exact invariants of the monomial ideal attached to
// the independent sets of a graph, plus brute-force verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indideal/errors.hpp"
#include "indideal/graph.hpp"
#include "indideal/ideal.hpp"
#include "indideal/indep.hpp"
#include "indideal/invariants.hpp"
#include "indideal/json_writer.hpp"
#include "indideal/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct GraphSource {
  std::string family;
  std::string edges_path;

  indideal::Graph load() const {
    if (!family.empty())
      return indideal::build_family(indideal::parse_family_spec(family));
    std::ifstream in(edges_path);
    if (!in) throw indideal::ParseError("cannot open '" + edges_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return indideal::parse_edge_list(text.str());
  }
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
  auto* group = cmd->add_option_group("input", "graph source");
  group->add_option("--family", src.family,
                    "family spec: path:N, cycle:N, cyclepow:N:D, centipede:N, complete:N");
  group->add_option("--edges", src.edges_path, "edge-list file");
  group->require_option(1);
}

std::string join_bigints(const std::vector<indideal::BigInt>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ' ';
    out += x.str();
  }
  return out;
}

int cmd_poly(const GraphSource& src, const std::string& format) {
  auto g = src.load();
  auto poly = indideal::independence_polynomial(g);
  if (format == "plain") {
    std::cout << "coeffs: " << join_bigints(poly.coeffs) << "\n";
    std::cout << "alpha: " << poly.alpha() << "\n";
    return kExitOk;
  }
  indideal::Json coeffs = indideal::Json::array();
  for (const auto& c : poly.coeffs) coeffs.push_back(indideal::Json::number(c));
  indideal::Json out = indideal::Json::object();
  out.set("coeffs", std::move(coeffs));
  out.set("alpha", indideal::Json::number(poly.alpha()));
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_invariants(const GraphSource& src, const std::string& format) {
  auto g = src.load();
  auto report = indideal::build_invariant_report(g);
  if (format == "plain") {
    std::cout << "betti: " << join_bigints(report.betti) << "\n";
    std::cout << "projdim_quotient: " << report.projdim_quotient << "\n";
    std::cout << "regularity: " << report.regularity << "\n";
    std::cout << "krull_dim: " << report.krull_dim << "\n";
    std::cout << "cohen_macaulay: " << (report.cohen_macaulay ? "true" : "false") << "\n";
    std::cout << "primes:";
    for (const auto& p : report.primes) {
      auto names = p.variable_names();
      std::cout << " (" << names[0] << "," << names[1] << ")";
    }
    std::cout << "\n";
    std::cout << "dual_gens:";
    for (const auto& m : report.dual_gens) std::cout << " " << m.render();
    std::cout << "\n";
    std::cout << "dual_linear_resolution: "
              << indideal::ternary_name(report.dual_linear_resolution) << "\n";
    return kExitOk;
  }
  std::cout << indideal::invariant_report_json(report).dump() << "\n";
  return kExitOk;
}

int cmd_generators(const GraphSource& src, const std::string& format,
                   std::uint64_t max_gens) {
  auto g = src.load();
  // count first: the polynomial is cheap even when enumeration would not be
  auto total = indideal::independence_polynomial(g).total();
  if (total > max_gens)
    throw indideal::SizeError("generator count " + total.str() + " exceeds --max-gens " +
                              std::to_string(max_gens));
  auto [ideal, order] = indideal::ideal_of_independent_sets(g);
  auto sizes = indideal::set_sizes(order);
  if (format == "plain") {
    for (std::size_t i = 0; i < order.size(); ++i)
      std::cout << order[i].monomial.render() << " " << sizes[i] << "\n";
    return kExitOk;
  }
  indideal::Json gens = indideal::Json::array();
  for (const auto& e : order.entries())
    gens.push_back(indideal::Json::string(e.monomial.render()));
  indideal::Json size_arr = indideal::Json::array();
  for (auto s : sizes) size_arr.push_back(indideal::Json::number(s));
  indideal::Json out = indideal::Json::object();
  out.set("generators", std::move(gens));
  out.set("set_sizes", std::move(size_arr));
  std::cout << out.dump() << "\n";
  return kExitOk;
}

struct CheckOutcome {
  std::string name;
  std::string status;  // pass | fail | undecided | skipped: over cap
  long long elapsed_ms = 0;
};

CheckOutcome run_check(const std::string& name, std::size_t instance_size,
                       std::size_t cap, const std::function<std::string()>& body) {
  CheckOutcome out{name, "", 0};
  if (instance_size > cap) {
    out.status = "skipped: over cap";
    return out;
  }
  auto start = std::chrono::steady_clock::now();
  out.status = body();
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

std::string check_quotients(const indideal::Graph& g, unsigned threads) {
  auto [ideal, order] = indideal::ideal_of_independent_sets(g);
  return indideal::verify_linear_quotients(order, threads).passed() ? "pass" : "fail";
}

std::string check_primdec(const indideal::Graph& g) {
  auto ideal = indideal::ideal_of_independent_sets(g).ideal;
  auto primes = indideal::primary_decomposition(g);
  std::size_t n = g.vertex_count();
  auto intersect_all = [&](std::size_t skip) {
    indideal::MonomialIdeal acc = indideal::MonomialIdeal::unit(n);
    for (std::size_t c = 0; c < primes.size(); ++c)
      if (c != skip) acc = indideal::intersect_ideals(acc, indideal::component_ideal(primes[c], n));
    return acc;
  };
  auto full = intersect_all(primes.size());
  if (!(full == ideal)) return "fail";
  for (std::size_t c = 0; c < primes.size(); ++c)
    if (intersect_all(c) == ideal) return "fail";  // component not necessary
  return "pass";
}

std::string check_betti(const indideal::Graph& g, unsigned threads) {
  auto poly = indideal::independence_polynomial(g);
  auto expected = indideal::betti_numbers(poly);
  indideal::BettiOracleOptions opts;
  opts.threads = threads;
  auto table = indideal::betti_table_oracle(indideal::ideal_of_independent_sets(g).ideal, opts);
  if (table.totals() != expected) return "fail";
  std::size_t n = g.vertex_count();
  for (const auto& [ij, v] : table.entries)
    if (v != 0 && ij.second != n + ij.first) return "fail";  // linear strand only
  return "pass";
}

std::string check_dual(const indideal::Graph& g) {
  auto status = indideal::dual_has_linear_resolution(g);
  if (status == indideal::Ternary::undecided) return "undecided";
  bool linear = status == indideal::Ternary::yes;
  return linear == indideal::is_cohen_macaulay(g) ? "pass" : "fail";
}

int cmd_verify(const GraphSource& src, const std::string& format,
               const std::string& checks_csv, std::size_t max_vertices_override,
               unsigned threads) {
  auto g = src.load();
  std::vector<std::string> selected;
  std::stringstream ss(checks_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok != "quotients" && tok != "primdec" && tok != "betti" && tok != "dual")
      throw indideal::ArgumentError("unknown check '" + tok + "'");
    selected.push_back(tok);
  }
  if (selected.empty())
    selected = {"quotients", "primdec", "betti", "dual"};

  std::size_t n = g.vertex_count();
  std::size_t quotients_cap = max_vertices_override ? max_vertices_override : 14;
  std::size_t primdec_cap = max_vertices_override ? max_vertices_override : 5;
  constexpr std::size_t kBettiVarCap = 12;

  std::vector<CheckOutcome> outcomes;
  for (const auto& name : selected) {
    if (name == "quotients")
      outcomes.push_back(run_check(name, n, quotients_cap,
                                   [&] { return check_quotients(g, threads); }));
    else if (name == "primdec")
      outcomes.push_back(run_check(name, n, primdec_cap, [&] { return check_primdec(g); }));
    else if (name == "betti")
      outcomes.push_back(run_check(name, 2 * n, kBettiVarCap,
                                   [&] { return check_betti(g, threads); }));
    else
      outcomes.push_back(run_check(name, 0, 1, [&] { return check_dual(g); }));
  }

  bool failed = false;
  for (const auto& o : outcomes) failed |= o.status == "fail";

  if (format == "plain") {
    for (const auto& o : outcomes)
      std::cout << o.name << ": " << o.status << " (" << o.elapsed_ms << " ms)\n";
  } else {
    indideal::Json arr = indideal::Json::array();
    for (const auto& o : outcomes) {
      indideal::Json entry = indideal::Json::object();
      entry.set("name", indideal::Json::string(o.name));
      entry.set("status", indideal::Json::string(o.status));
      entry.set("elapsed_ms", indideal::Json::number(static_cast<long long>(o.elapsed_ms)));
      arr.push_back(std::move(entry));
    }
    indideal::Json out = indideal::Json::object();
    out.set("checks", std::move(arr));
    out.set("all_passed", indideal::Json::boolean(!failed));
    std::cout << out.dump() << "\n";
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of monomial ideals of independent sets"};
  app.require_subcommand(1);

  std::string format = "json";
  GraphSource poly_src, inv_src, gen_src, verify_src;

  auto* poly = app.add_subcommand("poly", "independence polynomial coefficients");
  add_source_options(poly, poly_src);
  poly->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

  auto* inv = app.add_subcommand("invariants", "full invariant report");
  add_source_options(inv, inv_src);
  inv->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

  std::uint64_t max_gens = std::uint64_t{1} << 20;
  auto* gen = app.add_subcommand("generators", "ideal generators in canonical order");
  add_source_options(gen, gen_src);
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));
  gen->add_option("--max-gens", max_gens, "refuse graphs with more independent sets");

  std::string checks = "quotients,primdec,betti,dual";
  std::size_t max_verify_vertices = 0;
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify", "run brute-force oracle checks");
  add_source_options(verify, verify_src);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));
  verify->add_option("--checks", checks, "subset of quotients,primdec,betti,dual");
  verify->add_option("--max-verify-vertices", max_verify_vertices,
                     "override the per-check vertex caps");
  verify->add_option("--threads", threads, "worker threads for parallel checks");

  try {
    app.parse(argc, argv);
    if (poly->parsed()) return cmd_poly(poly_src, format);
    if (inv->parsed()) return cmd_invariants(inv_src, format);
    if (gen->parsed()) return cmd_generators(gen_src, format, max_gens);
    return cmd_verify(verify_src, format, checks, max_verify_vertices, threads);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kExitInputError;
  } catch (const indideal::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
