// zsschur: compute zero-sum generalized Schur constants, evaluate the
// closed-form values and bounds, verify certificates, reproduce value
// tables, and test single-equation regularity.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zsschur/certificates.hpp"
#include "zsschur/formulas.hpp"
#include "zsschur/json.hpp"
#include "zsschur/oracle.hpp"
#include "zsschur/rado.hpp"
#include "zsschur/version.hpp"

using namespace zsschur;
using nlohmann::json;

namespace {

struct GlobalFlags {
  bool json_output = false;
  int threads = 0;  // 0: pick hardware concurrency
  int t_max = 0;    // 0: default cap 4*k*r
  bool force = false;

  int resolved_threads() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  SearchOptions search_options() const {
    SearchOptions opts;
    opts.threads = resolved_threads();
    opts.force = force;
    return opts;
  }
};

std::string join_command_line(int argc, char** argv) {
  std::string line;
  for (int i = 0; i < argc; ++i) {
    if (i) line += ' ';
    line += argv[i];
  }
  return line;
}

std::string g_command_line;

void emit_manifest(const GlobalFlags& flags, const std::string& command,
                   const json& inputs, const json& result,
                   long long elapsed_ms) {
  json manifest{{"command", command},
                {"command_line", g_command_line},
                {"params", inputs},
                {"version", kVersion},
                {"threads", flags.resolved_threads()},
                {"elapsed_ms", elapsed_ms},
                {"result", result}};
  std::cout << manifest.dump(2) << "\n";
}

std::string format_colors(const Coloring& chi) {
  std::string out;
  for (int i = 0; i < chi.t; ++i) {
    if (i) out += ' ';
    out += std::to_string(int{chi.colors[static_cast<std::size_t>(i)]});
  }
  return out;
}

std::string format_entries(const std::vector<int>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries[i]);
  }
  return out;
}

// ----- compute --------------------------------------------------------

int run_compute(const GlobalFlags& flags, const SchurParams& params) {
  params.validate();
  const int t_max = flags.t_max > 0 ? flags.t_max : default_t_max(params);
  const SearchResult result =
      compute_schur_number(params, t_max, flags.search_options());

  if (flags.json_output) {
    emit_manifest(flags, "compute", json(params), json(result),
                  result.elapsed_ms);
  } else {
    if (result.value) {
      std::cout << "S" << to_string(params) << " = " << *result.value << "\n";
      if (result.certificate)
        std::cout << "certificate on [1, " << result.certificate->t
                  << "]: " << format_colors(*result.certificate) << "\n";
      else
        std::cout << "value 1: every coloring of [1,1] admits a solution\n";
    } else {
      std::cout << "S" << to_string(params) << " not found up to t_max="
                << t_max << "\n";
      if (result.certificate)
        std::cout << "blocking coloring of [1, " << result.certificate->t
                  << "]: " << format_colors(*result.certificate) << "\n";
    }
    std::cout << "search: t_max=" << t_max << ", threads="
              << flags.resolved_threads() << ", " << result.elapsed_ms
              << " ms\n";
  }
  return result.value ? 0 : 2;
}

// ----- formula --------------------------------------------------------

FormulaValue evaluate_formula(const std::string& theorem, int k, int r, int v,
                              int m) {
  if (theorem == "thm-k") return value_thm_k(k, r);
  if (theorem == "thm-2") return upper_thm_2(k);
  if (theorem == "thm-v-upper") return upper_thm_v(k, v);
  if (theorem == "thm-general") return value_thm_general(k);
  if (theorem == "thm-more") return value_thm_more(k, r, v);
  if (theorem == "prior-rk") return value_prior_rk(k, r);
  if (theorem == "trivial-km1") return value_trivial_km1(m);
  if (theorem == "metz-lower" || theorem == "metz-upper") {
    const MetzBounds bounds = bounds_metz(k, r);
    const auto& side = theorem == "metz-lower" ? bounds.lower : bounds.upper;
    if (!side)
      throw HypothesisError("hypothesis violated: no " +
                            theorem.substr(5) +
                            " bound is quoted for these parameters");
    return *side;
  }
  throw HypothesisError("unknown theorem tag: " + theorem);
}

int run_formula(const GlobalFlags& flags, const std::string& theorem, int k,
                int r, int v, int m) {
  const auto start = std::chrono::steady_clock::now();
  const FormulaValue value = evaluate_formula(theorem, k, r, v, m);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (flags.json_output) {
    json inputs{{"theorem", theorem}};
    if (k) inputs["k"] = k;
    if (r) inputs["r"] = r;
    if (v) inputs["v"] = v;
    if (m) inputs["m"] = m;
    emit_manifest(flags, "formula", inputs, json(value), elapsed);
  } else {
    std::cout << value.source << " value = " << value.value << " ["
              << to_string(value.kind) << "]\n";
    if (!value.aux.empty()) {
      std::cout << "aux:";
      for (const auto& [key, val] : value.aux)
        std::cout << ' ' << key << '=' << val;
      std::cout << "\n";
    }
  }
  return 0;
}

// ----- verify-cert ----------------------------------------------------

int run_verify_cert(const GlobalFlags& flags, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what()
              << "\n";
    return 1;
  }
  const Certificate cert = doc.get<Certificate>();

  const auto start = std::chrono::steady_clock::now();
  const bool pass = verify_certificate(cert);
  std::optional<Witness> witness;
  if (!pass && cert.coloring)
    witness = exists_zero_sum_solution(build_equation(cert.params),
                                       *cert.coloring, cert.params.r);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  if (flags.json_output) {
    json result{{"pass", pass}, {"witness", nullptr}};
    if (witness) result["witness"] = *witness;
    emit_manifest(flags, "verify-cert", json{{"file", path}}, result, elapsed);
  } else {
    std::cout << "certificate " << to_string(cert.params) << " source="
              << cert.source << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (witness)
      std::cout << "zero-sum witness: " << format_entries(witness->entries)
                << "\n";
  }
  return pass ? 0 : 1;
}

// ----- table ----------------------------------------------------------

struct GridPoint {
  int k = 0, r = 0, v = 0;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int x = lo; x <= hi; ++x) values.push_back(x);
    return values;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
  return values;
}

// Grid syntaxes: "(8,2,2),(12,3,1)" tuples of (k,r) or (k,r,v), and
// "r2:k4,6,8" for a fixed modulus with a k list.
std::vector<GridPoint> parse_grid(const std::string& text,
                                  const std::string& theorem) {
  std::vector<GridPoint> points;
  if (text.empty()) return points;
  if (text[0] == '(') {
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto open = text.find('(', pos);
      if (open == std::string::npos) break;
      const auto close = text.find(')', open);
      if (close == std::string::npos)
        throw InvalidParams("unbalanced parenthesis in grid: " + text);
      const auto fields = parse_int_list(text.substr(open + 1, close - open - 1));
      GridPoint point;
      if (fields.size() == 3) {
        point.k = fields[0];
        point.r = fields[1];
        point.v = fields[2];
      } else if (fields.size() == 2) {
        point.k = fields[0];
        if (theorem == "thm-v-upper") {  // (k, v); the modulus is fixed at 2
          point.r = 2;
          point.v = fields[1];
        } else {
          point.r = fields[1];
        }
      } else {
        throw InvalidParams("grid tuples need 2 or 3 fields: " + text);
      }
      points.push_back(point);
      pos = close + 1;
    }
    return points;
  }
  if (text[0] == 'r') {
    const auto colon = text.find(":k");
    if (colon == std::string::npos)
      throw InvalidParams("expected rR:kA,B,... in grid: " + text);
    const int r = std::stoi(text.substr(1, colon - 1));
    for (int k : parse_int_list(text.substr(colon + 2)))
      points.push_back({k, r, 0});
    return points;
  }
  throw InvalidParams("unrecognized grid syntax: " + text);
}

int run_table(const GlobalFlags& flags, const std::string& theorem,
              const std::string& k_range, const std::string& grid_text,
              int r_flag, int v_flag, const std::string& compare,
              const std::string& format) {
  const bool want_formula = compare == "formula" || compare == "both";
  const bool want_oracle = compare == "oracle" || compare == "both";

  std::vector<GridPoint> points = parse_grid(grid_text, theorem);
  if (!k_range.empty()) {
    const int r_default = theorem == "thm-more" ? r_flag : 2;
    for (int k : parse_int_list(k_range))
      points.push_back({k, r_flag > 0 ? r_flag : r_default,
                        v_flag > 0 ? v_flag : (theorem == "thm-general" ? 1 : 0)});
  }
  if (points.empty())
    throw InvalidParams("table needs --k or --grid to define the points");

  const auto start = std::chrono::steady_clock::now();
  json rows = json::array();
  bool warned = false;
  for (const GridPoint& point : points) {
    json row{{"k", point.k},          {"r", point.r},
             {"m", nullptr},          {"ell", nullptr},
             {"eps", nullptr},        {"v", point.v},
             {"theorem", theorem},    {"kind", nullptr},
             {"formula_value", nullptr}, {"oracle_value", nullptr},
             {"match", nullptr},      {"status", "ok"}};
    try {
      const FormulaValue formula =
          evaluate_formula(theorem, point.k, point.r, point.v, 2);
      row["kind"] = to_string(formula.kind);
      if (want_formula) row["formula_value"] = formula.value;
      SchurParams params =
          formula.params
              ? *formula.params
              : params_for_source(theorem, point.k, point.r, point.v);
      row["m"] = params.m;
      row["ell"] = params.ell;
      row["eps"] = params.eps;
      row["v"] = params.v;
      if (want_oracle) {
        const int t_max = flags.t_max > 0 ? flags.t_max : default_t_max(params);
        const SearchResult result =
            compute_schur_number(params, t_max, flags.search_options());
        if (result.value) row["oracle_value"] = *result.value;
        if (compare == "both" && result.value) {
          bool match = false;
          switch (formula.kind) {
            case FormulaKind::Exact: match = *result.value == formula.value; break;
            case FormulaKind::UpperBound: match = *result.value <= formula.value; break;
            case FormulaKind::LowerBound: match = *result.value >= formula.value; break;
          }
          row["match"] = match;
        } else if (compare == "both") {
          row["match"] = false;  // search exhausted below the formula value
        }
      }
    } catch (const HypothesisError& e) {
      // Explicitly listed points keep a row; ranges drop silent misses.
      if (!k_range.empty()) continue;
      row["status"] = std::string("hypothesis-error: ") + e.what();
    } catch (const BudgetExceeded&) {
      row["status"] = "skipped";
      if (!warned) {
        std::cerr << "warning: some rows skipped over the enumeration budget "
                     "(re-run with --force)\n";
        warned = true;
      }
    }
    rows.push_back(std::move(row));
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  if (flags.json_output || format == "json") {
    json inputs{{"theorem", theorem}, {"compare", compare},
                {"grid", grid_text},  {"k", k_range},
                {"format", format}};
    emit_manifest(flags, "table", inputs, json{{"rows", rows}}, elapsed);
  } else {
    std::cout << "k,r,m,ell,eps,v,theorem,kind,formula_value,oracle_value,"
                 "match,status\n";
    for (const auto& row : rows) {
      const auto cell = [&](const char* key) -> std::string {
        const auto& value = row.at(key);
        if (value.is_null()) return "";
        if (value.is_string()) return value.get<std::string>();
        return value.dump();
      };
      std::cout << cell("k") << ',' << cell("r") << ',' << cell("m") << ','
                << cell("ell") << ',' << cell("eps") << ',' << cell("v") << ','
                << cell("theorem") << ',' << cell("kind") << ','
                << cell("formula_value") << ',' << cell("oracle_value") << ','
                << cell("match") << ',' << cell("status") << "\n";
    }
  }
  return 0;
}

// ----- rado -----------------------------------------------------------

int run_rado(const GlobalFlags& flags, const std::string& coeff_text) {
  std::vector<long long> coeffs;
  std::stringstream ss(coeff_text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));

  const auto start = std::chrono::steady_clock::now();
  const auto subset = zero_sum_subset(coeffs);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  if (flags.json_output) {
    json result{{"coeffs", coeffs},
                {"regular", subset.has_value()},
                {"subset_indices", nullptr},
                {"subset_values", nullptr}};
    if (subset) {
      result["subset_indices"] = *subset;
      json values = json::array();
      for (std::size_t i : *subset) values.push_back(coeffs[i]);
      result["subset_values"] = values;
    }
    emit_manifest(flags, "rado", json{{"coeffs", coeffs}}, result, elapsed);
  } else {
    if (subset) {
      std::cout << "regular; zero-sum subset:";
      for (std::size_t i : *subset) std::cout << ' ' << coeffs[i];
      std::cout << "\n";
    } else {
      std::cout << "not regular: no nonempty subset of the coefficients sums "
                   "to zero\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_command_line = join_command_line(argc, argv);

  CLI::App app{"zero-sum generalized Schur number toolkit"};
  app.set_version_flag("--version", std::string("zsschur ") + kVersion);
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json_output,
               "emit a JSON run manifest instead of text");
  app.add_option("--threads", flags.threads,
                 "worker threads for coloring scans (default: hardware)");
  app.add_option("--t-max", flags.t_max,
                 "search cap on t (default: 4*k*r)");
  app.add_flag("--force", flags.force,
               "search past the enumeration budget");

  // compute
  auto* compute = app.add_subcommand(
      "compute", "exact constant by exhaustive coloring search");
  compute->fallthrough();
  SchurParams params;
  params.m = 2;
  params.ell = 1;
  params.eps = 1;
  compute->add_option("--k", params.k, "number of variables")->required();
  compute->add_option("--r", params.r, "zero-sum modulus")->required();
  compute->add_option("--m", params.m, "number of colors (default 2)");
  compute->add_option("--ell", params.ell, "last coefficient (default 1)");
  compute->add_option("--eps", params.eps, "epsilon, 0 or 1 (default 1)");
  compute->add_option("--v", params.v, "block parameter (default 0)");

  // formula
  auto* formula = app.add_subcommand(
      "formula", "evaluate one closed-form value or bound");
  formula->fallthrough();
  std::string theorem;
  int fk = 0, fr = 0, fv = 0, fm = 0;
  formula->add_option("--theorem", theorem,
                      "thm-k|thm-2|thm-v-upper|thm-general|thm-more|"
                      "prior-rk|metz-lower|metz-upper|trivial-km1")
      ->required();
  formula->add_option("--k", fk, "number of variables");
  formula->add_option("--r", fr, "zero-sum modulus");
  formula->add_option("--v", fv, "block parameter");
  formula->add_option("--m", fm, "number of colors (trivial-km1)");

  // verify-cert
  auto* verify = app.add_subcommand(
      "verify-cert", "check a certificate coloring from a JSON file");
  verify->fallthrough();
  std::string cert_path;
  verify->add_option("file", cert_path, "certificate JSON file")->required();

  // table
  auto* table = app.add_subcommand(
      "table", "tabulate formula and oracle values over a grid");
  table->fallthrough();
  std::string table_theorem, k_range, grid_text;
  std::string compare = "formula", format = "csv";
  int tr = 0, tv = 0;
  table->add_option("--theorem", table_theorem, "theorem tag")->required();
  table->add_option("--k", k_range, "k values: 6..16 or 4,6,8");
  table->add_option("--r", tr, "fixed modulus for --k lists");
  table->add_option("--v", tv, "fixed block parameter for --k lists");
  table->add_option("--grid", grid_text,
                    "points: (k,r,v),(k,r,v),... or rR:kA,B,...");
  table->add_option("--compare", compare, "formula|oracle|both");
  table->add_option("--format", format, "csv|json");

  // rado
  auto* rado = app.add_subcommand(
      "rado", "single-equation regularity of a coefficient vector");
  rado->fallthrough();
  std::string coeff_text;
  rado->add_option("--coeffs", coeff_text, "comma-separated integers")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(flags, params);
    if (formula->parsed()) return run_formula(flags, theorem, fk, fr, fv, fm);
    if (verify->parsed()) return run_verify_cert(flags, cert_path);
    if (table->parsed())
      return run_table(flags, table_theorem, k_range, grid_text, tr, tv,
                       compare, format);
    if (rado->parsed()) return run_rado(flags, coeff_text);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
