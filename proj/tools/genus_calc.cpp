// Command-line surface for the lambda-transfer calculus: descriptor
// validation, parameter translation, transfer evaluation, cohomology
// reports, the integer-lattice oracle, the property suite and grid sweeps.
//
// Exit codes: 0 success, 1 property/oracle failure, 2 validation failure,
// 3 hypothesis violation, 4 I/O or schema error.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "genus/generators.hpp"
#include "genus/lattice_cohomology.hpp"
#include "genus/property_suite.hpp"
#include "genus/serialization.hpp"
#include "genus/tower.hpp"

namespace {

using namespace genus;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitSchema = 4;

long thread_budget() {
  if (const char* env = std::getenv("GENUS_CALC_THREADS")) {
    const long n = std::atol(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<long>(hw);
}

// Runs f(i) for i in [0, n) on up to `threads` workers; results must be
// written into caller-owned slots so output stays in input order.
template <class F>
void parallel_for(long n, long threads, F&& f) {
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (long t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& th : pool) th.join();
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw SchemaError("cannot open output file: " + output_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const std::string& input, const std::string& output,
                 const std::string& format) {
  ExtensionDescriptor d = load_descriptor(input);
  ValidationReport report = validate(d);
  if (format == "csv") {
    std::ostringstream csv;
    csv << "severity,rule,message\r\n";
    for (const auto& issue : report.errors)
      csv << "error," << csv_quote(issue.rule) << "," << csv_quote(issue.message) << "\r\n";
    for (const auto& issue : report.warnings)
      csv << "warning," << csv_quote(issue.rule) << "," << csv_quote(issue.message) << "\r\n";
    emit(csv.str(), output);
  } else {
    Json j;
    j["schema"] = kSchemaTag;
    j["report"] = validation_report_to_json(report);
    emit(dump(j), output);
  }
  return report.ok() ? kExitOk : kExitValidation;
}

int cmd_translate(const std::string& input, const std::string& output,
                  const std::vector<std::string>& s, const std::vector<std::string>& t) {
  ExtensionDescriptor d = load_descriptor(input);
  ValidationReport report = validate(d);
  if (!report.ok()) {
    Json j;
    j["schema"] = kSchemaTag;
    j["report"] = validation_report_to_json(report);
    emit(dump(j), output);
    return kExitValidation;
  }
  TranslateResult lambda = translate_lambda(d);
  StTranslateResult st = translate_st(d, s, t);
  Json j;
  j["schema"] = kSchemaTag;
  j["hypotheses"] = hypotheses_block(d);
  j["lambda_ell_classes"] = delta_character_to_json(lambda.lambda_ell_classes);
  j["lambda_infinitesimal"] = delta_character_to_json(lambda.lambda_infinitesimal);
  j["st"] = Json{{"S", s},
                 {"T", t},
                 {"plain", delta_character_to_json(st.plain)},
                 {"ell_decomposed", delta_character_to_json(st.ell_decomposed)},
                 {"ell_ramified", delta_character_to_json(st.ell_ramified)}};
  j["warnings"] = lambda.warnings;
  emit(dump(j), output);
  return kExitOk;
}

int cmd_transfer(const std::string& input, const std::string& output, bool verbose,
                 bool with_trace) {
  ExtensionDescriptor d = load_descriptor(input);
  ValidationReport report = validate(d);
  if (!report.ok()) {
    Json j;
    j["schema"] = kSchemaTag;
    j["report"] = validation_report_to_json(report);
    emit(dump(j), output);
    return kExitValidation;
  }

  TransferResult full = transfer_character(d);
  ProjectionResult proj = project_g_character(full.chi, d);
  TransferResult tilde = transfer_character_ell_decomposed(d);
  ProjectionResult tilde_proj = project_g_character(tilde.chi, d);

  const long long kida = kida_lambda(d);
  const long long kuzmin = kuzmin_lambda(d);

  Json j;
  j["schema"] = kSchemaTag;
  j["hypotheses"] = hypotheses_block(d);
  j["chi_L"] = dg_character_to_json(full.chi);
  j["lambda_L"] = delta_character_to_json(full.lambda_upper);
  j["lambda_L_degree"] = proj.g_character.degree();
  j["g_character"] = g_character_to_json(proj.g_character);
  j["omega_weight"] = proj.omega_weight;
  j["kida_lambda"] = kida;
  j["wingberg_lambda"] = wingberg_lambda(d);
  j["chi_tilde_L"] = dg_character_to_json(tilde.chi);
  j["lambda_tilde_L_degree"] = tilde_proj.g_character.degree();
  j["kuzmin_lambda"] = kuzmin;
  j["lambda_tilde_derived"] = !d.lambda_tilde_K.has_value();
  // The two degree computations for the ell-decomposed invariants can
  // legitimately diverge when ell-places ramify; report, never reconcile.
  j["degree_check"] =
      Json{{"kida_equals_projection", kida == proj.g_character.degree()},
           {"kuzmin_equals_tilde_projection", kuzmin == tilde_proj.g_character.degree()}};
  if (verbose) {
    Json pairings = Json::array();
    for (const auto& pc : proj.place_pairings)
      pairings.push_back(Json{{"place", pc.place},
                              {"bare_pairing", pc.full},
                              {"imaginary_pairing", pc.imaginary}});
    j["place_pairings"] = std::move(pairings);
    // Variant of the rho-sum with the bare place characters instead of
    // their imaginary parts.
    DGCharacter bare = dg_combine(d.lambda_K - omega_character(d.delta_group), reg(d.g)) +
                       dg_combine(omega_character(d.delta_group), unit_g(d.g));
    for (const auto& p : d.places) {
      if (p.above_ell || !place_ramified(p)) continue;
      bare = bare + dg_combine(chi_of_place(d, p), induce_aug_from(d.g, p.g_dec_exp));
    }
    j["chi_L_bare_variant"] = dg_character_to_json(bare);
  }
  std::vector<std::string> warnings = full.warnings;
  warnings.insert(warnings.end(), tilde.warnings.begin(), tilde.warnings.end());
  warnings.insert(warnings.end(), proj.notes.begin(), proj.notes.end());
  j["warnings"] = warnings;

  if (d.g.m >= 1) {
    ChainResult chain = transfer_chain(d);
    Json trace = Json::array();
    for (const auto& level : chain.trace)
      trace.push_back(Json{{"level", level.level},
                           {"lambda", delta_character_to_json(level.lambda)}});
    j["chain"] = Json{{"lambda_top", chain.lambda_top}, {"trace", std::move(trace)}};
    if (with_trace) {
      Json steps = Json::array();
      for (const auto& step : chain.steps) {
        Json places = Json::array();
        for (const auto& sp : step.places)
          places.push_back(Json{{"name", sp.datum.name},
                                {"above_ell", sp.datum.above_ell},
                                {"g_dec_exp", sp.datum.g_dec_exp},
                                {"count", sp.count}});
        steps.push_back(Json{{"level", step.level}, {"derived_places", std::move(places)}});
      }
      j["chain"]["steps"] = std::move(steps);
    }
  }
  emit(dump(j), output);
  return kExitOk;
}

int cmd_cohomology(const std::string& input, const std::string& output) {
  ExtensionDescriptor d = load_descriptor(input);
  ValidationReport report = validate(d);
  if (!report.ok()) {
    Json j;
    j["schema"] = kSchemaTag;
    j["report"] = validation_report_to_json(report);
    emit(dump(j), output);
    return kExitValidation;
  }
  CohomologyReport r = cohomology_report(d);
  emit(dump(cohomology_report_to_json(r, d)), output);
  return kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& output, long ell, long max_rank,
               long cases, std::uint64_t seed) {
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw SchemaError("cannot open input file: " + input);
    Json lj;
    try {
      in >> lj;
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
    GLattice lat = lattice_from_json(lj);
    Json j;
    j["schema"] = kSchemaTag;
    j["cohomology"] = cohomology_result_to_json(cohomology(lat));
    j["fixed_rank"] = fixed_rank(lat);
    j["fixed_dims_chain"] = fixed_dims_chain(lat);
    if (lat.k <= 1) {
      Decomposition dec = recover_decomposition(lat);
      j["decomposition"] = Json{{"alpha", dec.alpha}, {"beta", dec.beta}, {"gamma", dec.gamma}};
      j["character"] = g_character_to_json(character_of(lat));
    }
    emit(dump(j), output);
    return kExitOk;
  }

  Rng rng(seed);
  long recovered = 0;
  for (long i = 0; i < cases; ++i) {
    long alpha = 0, beta = 0, gamma = 0;
    while (alpha + beta + gamma == 0) {
      const long budget = max_rank;
      alpha = rng.below(budget / ell + 1);
      beta = rng.below((budget - alpha * ell) / (ell - 1) + 1);
      gamma = rng.below(budget - alpha * ell - beta * (ell - 1) + 1);
    }
    GLattice hidden = disguise(canonical_lattice(ell, alpha, beta, gamma), rng.next());
    Decomposition dec = recover_decomposition(hidden);
    const GCharacter chi = character_of(hidden);
    if (dec == Decomposition{alpha, beta, gamma} && chi.degree() == hidden.rank() &&
        *cohomology(hidden).herbrand_q == gamma - beta &&
        divisible_character_of(hidden) == chi)
      ++recovered;
  }
  Json j;
  j["schema"] = kSchemaTag;
  j["ell"] = ell;
  j["max_rank"] = max_rank;
  j["cases"] = cases;
  j["recovered"] = recovered;
  j["seed"] = seed;
  emit(dump(j), output);
  std::cerr << recovered << "/" << cases << " decomposition recoveries\n";
  return recovered == cases ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& output, long cases, std::uint64_t seed) {
  const auto results = run_property_suite(seed, cases);
  std::ostringstream text;
  bool all_pass = true;
  for (const auto& r : results) {
    text << (r.pass ? "PASS" : "FAIL") << " " << r.id << " (" << r.cases << " cases)";
    if (!r.note.empty()) text << ": " << r.note;
    text << "\n";
    all_pass = all_pass && r.pass;
  }
  emit(text.str(), output);
  return all_pass ? kExitOk : kExitFailure;
}

struct SweepRow {
  std::string id;
  long long lambda_k = 0, lambda_l = 0, lambda_tilde_l = 0;
  int delta = 0, delta_prime = 0;
  std::string duality_case;
};

int cmd_sweep(const std::string& output, std::vector<long> ells, std::vector<int> ms,
              int max_places, long long lambda_max) {
  // Grid over Delta = Z/2 descriptors with tame split places; every j-tuple
  // over 0..m for up to max_places places.
  struct Case {
    long ell;
    int m;
    std::vector<int> js;
    long long lambda;
  };
  std::vector<Case> grid;
  for (long ell : ells)
    for (int m : ms) {
      // Nondecreasing j-tuples of length 0..max_places with entries in 0..m.
      std::vector<std::vector<int>> frontier{{}};
      std::vector<std::vector<int>> tuples{{}};
      for (int count = 1; count <= max_places; ++count) {
        std::vector<std::vector<int>> next;
        for (const auto& base : frontier)
          for (int j = base.empty() ? 0 : base.back(); j <= m; ++j) {
            auto expanded = base;
            expanded.push_back(j);
            next.push_back(std::move(expanded));
          }
        tuples.insert(tuples.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
      // lambda_K runs from the omega weight (1 for the Z/2 group used here)
      // upward; smaller values cannot come from genuine class-group data.
      for (long long lambda = 1; lambda <= 1 + lambda_max; ++lambda)
        for (const auto& t : tuples) grid.push_back({ell, m, t, lambda});
    }

  std::vector<SweepRow> rows(grid.size());
  parallel_for(static_cast<long>(grid.size()), thread_budget(), [&](long i) {
    const Case& c = grid[i];
    ExtensionDescriptor d;
    d.delta_group.ell = c.ell;
    d.delta_group.divisors = {2};
    d.delta_group.tau_bar = {1};
    d.delta_group.omega = {1};
    d.g = CyclicGroupSpec{c.ell, c.m};
    d.lambda_K = c.lambda * omega_character(d.delta_group);
    d.mu_zero = true;
    std::ostringstream id;
    id << "L" << c.ell << "_m" << c.m << "_lam" << c.lambda << "_j(";
    for (size_t t = 0; t < c.js.size(); ++t) {
      PlaceDatum p;
      p.name = "p" + std::to_string(t);
      p.above_ell = false;
      p.g_dec_exp = c.js[t];
      d.places.push_back(std::move(p));
      if (t) id << ",";
      id << c.js[t];
    }
    id << ")";

    SweepRow row;
    row.id = id.str();
    row.lambda_k = c.lambda;
    row.lambda_l = kida_lambda(d);
    row.lambda_tilde_l = kuzmin_lambda(d);
    if (c.m == 1 && resolved_delta(d)) {
      CohomologyReport r = cohomology_report(d);
      row.delta = r.delta;
      row.delta_prime = r.delta_prime;
      row.duality_case = duality_case_name(r.duality_case);
    } else {
      row.delta = resolved_delta(d).value_or(-1);
      row.delta_prime = -1;
      row.duality_case = "";
    }
    rows[i] = std::move(row);
  });

  std::ostringstream csv;
  csv << "descriptor-id,lambda_K,lambda_L,lambda_tilde_L,delta,delta-prime,duality-case\r\n";
  for (const auto& row : rows) {
    csv << csv_quote(row.id) << "," << row.lambda_k << "," << row.lambda_l << ","
        << row.lambda_tilde_l << "," << row.delta << "," << row.delta_prime << ","
        << csv_quote(row.duality_case) << "\r\n";
  }
  emit(csv.str(), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-invariant transfer calculus for cyclotomic towers"};
  app.require_subcommand(1);

  std::string input, output;
  std::uint64_t seed = 20260101;
  long cases = 200;

  std::string format = "json";
  auto* validate_cmd = app.add_subcommand("validate", "check a descriptor against the schema rules");
  validate_cmd->add_option("input", input, "descriptor JSON file")->required();
  validate_cmd->add_option("-o,--output", output, "write the report to a file");
  validate_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> s_names, t_names;
  auto* translate_cmd =
      app.add_subcommand("translate", "evaluate the lambda parameter translations");
  translate_cmd->add_option("input", input, "descriptor JSON file")->required();
  translate_cmd->add_option("-o,--output", output, "write the result to a file");
  translate_cmd->add_option("--S", s_names, "ramified-set place names")->delimiter(',');
  translate_cmd->add_option("--T", t_names, "decomposed-set place names")->delimiter(',');

  bool verbose = false;
  bool with_trace = false;
  auto* transfer_cmd = app.add_subcommand("transfer", "evaluate the transfer identities");
  transfer_cmd->add_option("input", input, "descriptor JSON file")->required();
  transfer_cmd->add_option("-o,--output", output, "write the result to a file");
  transfer_cmd->add_flag("-v,--verbose", verbose, "include pairing details and the bare variant");
  transfer_cmd->add_flag("--trace", with_trace, "include per-step derived places in the chain");

  auto* cohomology_cmd =
      app.add_subcommand("cohomology", "cohomology character report (order-ell regime)");
  cohomology_cmd->add_option("input", input, "descriptor JSON file")->required();
  cohomology_cmd->add_option("-o,--output", output, "write the report to a file");

  long ell = 3, max_rank = 12;
  auto* oracle_cmd = app.add_subcommand("oracle", "integer-lattice decomposition oracle");
  oracle_cmd->add_option("--input", input, "analyze one lattice JSON file");
  oracle_cmd->add_option("-o,--output", output, "write the result to a file");
  oracle_cmd->add_option("--ell", ell, "prime for random verification runs");
  oracle_cmd->add_option("--max-rank", max_rank, "rank budget for random lattices");
  oracle_cmd->add_option("--cases", cases, "number of random lattices");
  oracle_cmd->add_option("--seed", seed, "RNG seed");

  auto* verify_cmd = app.add_subcommand("verify", "run the module property suites");
  verify_cmd->add_option("-o,--output", output, "write the report to a file");
  verify_cmd->add_option("--cases", cases, "cases per invariant");
  verify_cmd->add_option("--seed", seed, "RNG seed");

  std::vector<long> sweep_ells{3};
  std::vector<int> sweep_ms{1, 2};
  int sweep_places = 2;
  long long sweep_lambda = 2;
  auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep of lambda transfers to CSV");
  sweep_cmd->add_option("-o,--output", output, "write the CSV to a file");
  sweep_cmd->add_option("--ell", sweep_ells, "primes")->delimiter(',');
  sweep_cmd->add_option("--m", sweep_ms, "tower exponents")->delimiter(',');
  sweep_cmd->add_option("--max-places", sweep_places, "maximum number of places");
  sweep_cmd->add_option("--lambda-max", sweep_lambda, "lambda_K range 0..lambda-max");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(input, output, format);
    if (translate_cmd->parsed()) return cmd_translate(input, output, s_names, t_names);
    if (transfer_cmd->parsed()) return cmd_transfer(input, output, verbose, with_trace);
    if (cohomology_cmd->parsed()) return cmd_cohomology(input, output);
    if (oracle_cmd->parsed()) return cmd_oracle(input, output, ell, max_rank, cases, seed);
    if (verify_cmd->parsed()) return cmd_verify(output, cases, seed);
    if (sweep_cmd->parsed())
      return cmd_sweep(output, sweep_ells, sweep_ms, sweep_places, sweep_lambda);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
