#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simpdim/barycentric.hpp"
#include "simpdim/complex.hpp"
#include "simpdim/dimension.hpp"
#include "simpdim/experiments.hpp"
#include "simpdim/genfun.hpp"
#include "simpdim/io.hpp"
#include "simpdim/rational.hpp"
#include "simpdim/verify.hpp"

namespace {

using namespace simpdim;
using nlohmann::json;

json fv_json(const FVector& fv) {
  json arr = json::array();
  for (const Int& c : fv.counts) {
    if (c.fits_slong_p() && sizeof(long) == 8)
      arr.push_back((std::int64_t)c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

std::string first_token(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = text.find_first_of(" \t\r\n", a);
  return text.substr(a, b == std::string::npos ? std::string::npos : b - a);
}

struct Loaded {
  Complex complex;
  std::optional<Graph> graph;  // set when the input was a graph format
};

Loaded load_input(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  Loaded out;
  if (format == "json") {
    out.complex = complex_from_json(text);
  } else if (format == "edgelist") {
    out.graph = graph_from_edge_list(text);
    out.complex = whitney_complex(*out.graph);
  } else if (format == "graph6") {
    out.graph = graph_from_graph6(first_token(text));
    out.complex = whitney_complex(*out.graph);
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
  return out;
}

// exact rational plus an optional fixed-point rendering
void put_rat(json& obj, const std::string& key, const Rat& r, int decimal) {
  obj[key] = rat_str(r);
  if (decimal > 0) obj[key + "_decimal"] = decimal_str(r, decimal);
}

int cmd_analyze(const std::string& in, const std::string& format,
                bool graph_dim, int decimal) {
  Loaded l = load_input(in, format);
  const Complex& G = l.complex;
  FVector fv = f_vector(G);
  GenPoly f = gen_poly(fv);
  json rep;
  rep["f_vector"] = fv_json(fv);
  rep["f_at_1"] = rat_str(eval(f, Rat(1)));
  rep["f_at_minus_1"] = rat_str(eval(f, Rat(-1)));
  rep["euler_characteristic"] = euler_characteristic(G).get_str();
  rep["genus"] = genus(fv).get_str();
  rep["dim_max"] = dim_max(G);
  rep["max_plus"] = dim_max(G) + 1;
  put_rat(rep, "dim_inductive", dim_inductive(G), decimal);
  put_rat(rep, "dim_ind_plus", Rat(dim_inductive(G) + 1), decimal);
  if (graph_dim) {
    Graph g = l.graph ? *l.graph : one_skeleton(G);
    put_rat(rep, "graph_dim_inductive", dim_inductive_graph(g), decimal);
    put_rat(rep, "graph_dim_ind_plus", Rat(dim_inductive_graph(g) + 1),
            decimal);
  }
  put_rat(rep, "dim_avg_plus", dim_avg_plus(fv), decimal);
  put_rat(rep, "dim_avg", dim_avg(fv), decimal);
  put_rat(rep, "var_plus", variance_plus(fv), decimal);
  put_rat(rep, "delta", delta(G), decimal);
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_join(const std::string& a, const std::string& b,
             const std::string& format, int decimal) {
  Complex A = load_input(a, format).complex;
  Complex B = load_input(b, format).complex;
  Complex J = join(A, B);
  json out = json::parse(complex_to_json(J));
  put_rat(out, "dim_avg_plus", dim_avg_plus(J), decimal);
  put_rat(out, "dim_avg_plus_left", dim_avg_plus(A), decimal);
  put_rat(out, "dim_avg_plus_right", dim_avg_plus(B), decimal);
  put_rat(out, "dim_ind_plus", Rat(dim_inductive(J) + 1), decimal);
  out["genus"] = genus(f_vector(J)).get_str();
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_refine(const std::string& in, const std::string& format, int steps,
               bool fvector_only, int decimal) {
  Complex G = load_input(in, format).complex;
  json out;
  json trail = json::array();
  if (fvector_only) {
    FVector fv = f_vector(G);
    for (int s = 0; s <= steps; ++s) {
      json row;
      row["step"] = s;
      row["f_vector"] = fv_json(fv);
      put_rat(row, "dim_avg_plus", dim_avg_plus(fv), decimal);
      trail.push_back(std::move(row));
      if (s < steps) fv = refine_fvector(fv);
    }
    out["mode"] = "fvector";
  } else {
    Complex cur = G;
    for (int s = 0; s <= steps; ++s) {
      json row;
      row["step"] = s;
      row["f_vector"] = fv_json(f_vector(cur));
      put_rat(row, "dim_avg_plus", dim_avg_plus(cur), decimal);
      trail.push_back(std::move(row));
      if (s < steps) cur = refine(cur);
    }
    out["mode"] = "explicit";
    out["faces"] = json::parse(complex_to_json(cur))["faces"];
  }
  out["steps"] = std::move(trail);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_constants(int max_d, bool csv, int profile_d, int decimal) {
  int digits = decimal > 0 ? decimal : 12;
  if (profile_d >= 0) {
    // exact entries at large d run to thousands of digits; plot data
    // carries the decimal rendering only
    std::vector<Rat> w = pf_eigenvector(profile_d);
    if (csv) {
      std::cout << csv_row({"index", "probability"});
      for (std::size_t i = 0; i < w.size(); ++i)
        std::cout << csv_row(
            {std::to_string(i + 1), decimal_str(w[i], digits)});
    } else {
      json arr = json::array();
      for (std::size_t i = 0; i < w.size(); ++i) {
        json row;
        row["index"] = i + 1;
        row["probability"] = decimal_str(w[i], digits);
        arr.push_back(std::move(row));
      }
      std::cout << arr.dump(2) << "\n";
    }
    return 0;
  }
  const char* caveat =
      "d=0: the formula value is 1, but refinement is the identity on "
      "0-dimensional complexes, whose mean cardinality stays n/(n+1); the "
      "contraction argument behind the limit needs d >= 1";
  if (csv) {
    std::cout << "# " << caveat << "\n";
    std::cout << csv_row({"d", "C_d", "C_d_decimal", "digits_num",
                          "digits_den", "C_d_over_d"});
  }
  json arr = json::array();
  for (int d = 0; d <= max_d; ++d) {
    Rat c = limit_constant(d);
    std::string over_d = d > 0 ? decimal_str(Rat(c / d), digits) : "";
    if (csv) {
      std::cout << csv_row({std::to_string(d), rat_str(c),
                            decimal_str(c, digits),
                            std::to_string(digit_count(c.get_num())),
                            std::to_string(digit_count(c.get_den())),
                            over_d});
    } else {
      json row;
      row["d"] = d;
      row["C_d"] = rat_str(c);
      row["C_d_decimal"] = decimal_str(c, digits);
      row["digits_num"] = digit_count(c.get_num());
      row["digits_den"] = digit_count(c.get_den());
      if (d > 0) row["C_d_over_d"] = over_d;
      if (d == 0) row["note"] = caveat;
      arr.push_back(std::move(row));
    }
  }
  if (!csv) std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_survey(int n, const std::string& grid, int samples,
               std::uint64_t seed, int threads, int decimal) {
  int digits = decimal > 0 ? decimal : 6;
  std::size_t c1 = grid.find(':');
  std::size_t c2 = grid.rfind(':');
  if (c1 == std::string::npos || c2 == c1)
    throw std::invalid_argument("p-grid must be a:b:steps");
  Rat from = rat_parse(grid.substr(0, c1));
  Rat to = rat_parse(grid.substr(c1 + 1, c2 - c1 - 1));
  int steps = std::stoi(grid.substr(c2 + 1));
  auto rows = er_survey(n, from, to, steps, samples, seed, threads);
  std::cout << csv_row({"p", "mean_delta_exact", "mean_delta_decimal",
                        "samples"});
  for (const SurveyRow& r : rows)
    std::cout << csv_row({rat_str(r.p), rat_str(r.mean_delta),
                          decimal_str(r.mean_delta, digits),
                          std::to_string(r.samples)});
  return 0;
}

int cmd_enumerate(int n, const std::string& maximize, bool graph6_list,
                  int threads, int decimal) {
  if (maximize != "delta")
    throw std::invalid_argument("only --maximize delta is supported");
  DeltaMaxResult r = delta_max(n, threads);
  json out;
  out["n"] = n;
  put_rat(out, "max_delta", r.value, decimal);
  out["maximizer_count"] = r.maximizer_masks.size();
  json first;
  first["graph6"] = graph_to_graph6(r.first_maximizer);
  first["f_vector"] = fv_json(f_vector(whitney_complex(r.first_maximizer)));
  json edges = json::array();
  for (auto [u, v] : r.first_maximizer.edges())
    edges.push_back(json::array({u, v}));
  first["edges"] = std::move(edges);
  out["first_maximizer"] = std::move(first);
  if (graph6_list) {
    json all = json::array();
    for (std::uint64_t m : r.maximizer_masks)
      all.push_back(graph_to_graph6(graph_from_edge_mask(n, m)));
    out["maximizers_graph6"] = std::move(all);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_trajectory(const std::string& in, const std::string& format,
                   int steps, bool log_gap, int decimal) {
  int digits = decimal > 0 ? decimal : 6;
  Complex G = load_input(in, format).complex;
  int d = dim_max(G);
  Rat limit = d >= 0 ? limit_constant(d) : Rat(0);
  std::vector<std::string> header = {"step", "dim_avg_plus",
                                     "dim_avg_plus_decimal", "var_plus"};
  if (log_gap) header.push_back("log_gap");
  std::cout << csv_row(header);
  FVector fv = f_vector(G);
  for (int s = 0; s <= steps; ++s) {
    Rat v = dim_avg_plus(fv);
    std::vector<std::string> row = {std::to_string(s), rat_str(v),
                                    decimal_str(v, digits),
                                    rat_str(variance_plus(fv))};
    if (log_gap) {
      Rat gap = Rat(limit - v);
      row.push_back(gap == 0 ? "-inf" : std::to_string(log_abs(gap)));
    }
    std::cout << csv_row(row);
    fv = refine_fvector(fv);
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool deep, int count,
               std::uint64_t seed) {
  std::vector<Check> checks;
  if (suite == "paper-values")
    checks = verify_reference_values(deep);
  else if (suite == "invariants")
    checks = verify_invariants(count, seed);
  else if (suite == "oracle")
    checks = verify_oracle();
  else
    throw std::invalid_argument("unknown suite: " + suite);
  json failures = json::array();
  for (const Check& c : checks) {
    if (c.pass) {
      std::cout << "PASS " << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    } else {
      std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
      json f;
      f["name"] = c.name;
      f["detail"] = c.detail;
      failures.push_back(std::move(f));
    }
  }
  json summary;
  summary["suite"] = suite;
  summary["total"] = checks.size();
  summary["failed"] = failures.size();
  summary["failures"] = std::move(failures);
  std::cout << summary.dump() << "\n";
  return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact dimension arithmetic for finite abstract simplicial complexes"};
  app.require_subcommand(1);
  int decimal = 0;
  int threads = 1;
  app.add_option("--decimal", decimal,
                 "also render rationals as fixed-point decimals with this "
                 "many digits")
      ->check(CLI::Range(0, 1 << 20));
  app.add_option("--threads", threads,
                 "worker threads where supported; never changes results")
      ->check(CLI::PositiveNumber);

  std::string in, format = "json", a_path, b_path;
  bool graph_dim = false;

  auto* analyze = app.add_subcommand("analyze", "full report for one input");
  analyze->add_option("--in", in, "input file")->required();
  analyze->add_option("--format", format, "json|edgelist|graph6")
      ->check(CLI::IsMember({"json", "edgelist", "graph6"}));
  analyze->add_flag("--graph-dim", graph_dim,
                    "also compute graph-level inductive dimension");

  auto* join_cmd = app.add_subcommand("join", "join of two complexes");
  join_cmd->add_option("a", a_path, "left input")->required();
  join_cmd->add_option("b", b_path, "right input")->required();
  join_cmd->add_option("--format", format, "json|edgelist|graph6")
      ->check(CLI::IsMember({"json", "edgelist", "graph6"}));

  int steps = 1;
  bool mode_explicit = false, mode_fvector = false;
  auto* refine_cmd =
      app.add_subcommand("refine", "iterated Barycentric refinement");
  refine_cmd->add_option("--in", in, "input file")->required();
  refine_cmd->add_option("--format", format, "json|edgelist|graph6")
      ->check(CLI::IsMember({"json", "edgelist", "graph6"}));
  refine_cmd->add_option("--steps", steps, "refinement steps")
      ->check(CLI::NonNegativeNumber)
      ->required();
  auto* fe = refine_cmd->add_flag("--explicit", mode_explicit,
                                  "materialize the order complexes (default)");
  refine_cmd->add_flag("--fvector", mode_fvector,
                       "operator arithmetic on f-vectors only")
      ->excludes(fe);

  int max_d = 10, profile_d = -1;
  bool csv = false;
  auto* constants =
      app.add_subcommand("constants", "refinement limit constants C_d");
  constants->add_option("--max-d", max_d, "table rows for d = 0..D")
      ->check(CLI::Range(0, 100000));
  constants->add_flag("--csv", csv, "CSV instead of JSON");
  constants->add_option("--profile", profile_d,
                        "emit the eigenvector profile for this d instead")
      ->check(CLI::NonNegativeNumber);

  int n = 0, samples = 100;
  std::uint64_t seed = 0;
  std::string p_grid;
  auto* survey =
      app.add_subcommand("survey", "Monte-Carlo margin survey over G(n,p)");
  survey->add_option("--n", n, "vertex count")->required();
  survey->add_option("--p-grid", p_grid, "a:b:steps inclusive grid")
      ->required();
  survey->add_option("--samples", samples, "samples per grid point")
      ->check(CLI::PositiveNumber);
  survey->add_option("--seed", seed, "RNG seed");

  std::string maximize = "delta";
  bool graph6_list = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "exhaustive search over labeled graphs");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_option("--maximize", maximize, "objective (delta)");
  enumerate->add_flag("--graph6", graph6_list,
                      "list every maximizer in graph6 form");

  bool log_gap = false;
  auto* trajectory = app.add_subcommand(
      "trajectory", "mean cardinality along repeated refinement");
  trajectory->add_option("--in", in, "input file")->required();
  trajectory->add_option("--format", format, "json|edgelist|graph6")
      ->check(CLI::IsMember({"json", "edgelist", "graph6"}));
  trajectory->add_option("--steps", steps, "refinement steps")
      ->check(CLI::NonNegativeNumber)
      ->required();
  trajectory->add_flag("--log-gap", log_gap,
                       "natural log of the gap to the limit constant");

  std::string suite;
  bool deep = false;
  int count = 500;
  std::uint64_t vseed = 7;
  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("--suite", suite, "paper-values|invariants|oracle")
      ->required()
      ->check(CLI::IsMember({"paper-values", "invariants", "oracle"}));
  verify->add_flag("--deep", deep,
                   "include the d = 500 limit constant (minutes)");
  verify->add_option("--count", count, "random complexes for invariants")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vseed, "seed for invariants");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(in, format, graph_dim, decimal);
    if (join_cmd->parsed()) return cmd_join(a_path, b_path, format, decimal);
    if (refine_cmd->parsed())
      return cmd_refine(in, format, steps, mode_fvector, decimal);
    if (constants->parsed())
      return cmd_constants(max_d, csv, profile_d, decimal);
    if (survey->parsed())
      return cmd_survey(n, p_grid, samples, seed, threads, decimal);
    if (enumerate->parsed())
      return cmd_enumerate(n, maximize, graph6_list, threads, decimal);
    if (trajectory->parsed())
      return cmd_trajectory(in, format, steps, log_gap, decimal);
    if (verify->parsed()) return cmd_verify(suite, deep, count, vseed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
