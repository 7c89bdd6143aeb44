#include "genus/serialization.hpp"

#include <fstream>
#include <sstream>

namespace genus {

namespace {

void check_keys(const Json& j, const char* what, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known) throw SchemaError(std::string(what) + ": unknown key '" + item.key() + "'");
  }
}

const Json& require(const Json& j, const char* what, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

long get_long(const Json& j, const char* what, const char* key) {
  const Json& v = require(j, what, key);
  if (!v.is_number_integer())
    throw SchemaError(std::string(what) + ": key '" + key + "' must be an integer");
  return v.get<long>();
}

std::vector<long> get_long_vector(const Json& v, const char* what) {
  if (!v.is_array()) throw SchemaError(std::string(what) + ": expected an array of integers");
  std::vector<long> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      throw SchemaError(std::string(what) + ": expected an array of integers");
    out.push_back(x.get<long>());
  }
  return out;
}

std::vector<long> parse_tuple_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')')
    throw SchemaError("coefficient key must look like '(a,b,...)', got '" + key + "'");
  std::vector<long> exps;
  std::string body = key.substr(1, key.size() - 2);
  std::istringstream in(body);
  std::string part;
  while (std::getline(in, part, ',')) {
    size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(part, &pos);
    } catch (const std::exception&) {
      throw SchemaError("bad exponent '" + part + "' in key '" + key + "'");
    }
    if (pos != part.size())
      throw SchemaError("bad exponent '" + part + "' in key '" + key + "'");
    exps.push_back(value);
  }
  if (exps.empty()) throw SchemaError("empty coefficient key '" + key + "'");
  return exps;
}

}  // namespace

Json delta_group_to_json(const DeltaGroup& g) {
  Json j;
  j["ell"] = g.ell;
  j["elementary_divisors"] = g.divisors;
  j["tau_bar"] = g.tau_bar;
  j["omega"] = g.omega;
  j["delta_prime_gens"] = g.delta_prime_gens;
  return j;
}

DeltaGroup delta_group_from_json(const Json& j) {
  check_keys(j, "delta_group",
             {"ell", "elementary_divisors", "tau_bar", "omega", "delta_prime_gens"});
  DeltaGroup g;
  g.ell = get_long(j, "delta_group", "ell");
  g.divisors = get_long_vector(require(j, "delta_group", "elementary_divisors"),
                               "delta_group.elementary_divisors");
  g.tau_bar = get_long_vector(require(j, "delta_group", "tau_bar"), "delta_group.tau_bar");
  g.omega = get_long_vector(require(j, "delta_group", "omega"), "delta_group.omega");
  const Json& gens = require(j, "delta_group", "delta_prime_gens");
  if (!gens.is_array()) throw SchemaError("delta_prime_gens must be an array");
  for (const auto& gen : gens)
    g.delta_prime_gens.push_back(get_long_vector(gen, "delta_group.delta_prime_gens"));
  return g;
}

Json delta_character_to_json(const DeltaCharacter& chi) {
  Json coeffs = Json::object();
  for (long i = 0; i < chi.group.order(); ++i)
    if (chi.coeffs[i] != 0)
      coeffs[exponent_tuple_key(chi.group.exps_of(i))] = chi.coeffs[i];
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

DeltaCharacter delta_character_from_json(const Json& j, const DeltaGroup& group) {
  check_keys(j, "character", {"coeffs"});
  const Json& coeffs = require(j, "character", "coeffs");
  if (!coeffs.is_object()) throw SchemaError("character coeffs must be an object");
  DeltaCharacter chi = zero_character(group);
  for (const auto& item : coeffs.items()) {
    const auto exps = parse_tuple_key(item.key());
    if (static_cast<long>(exps.size()) != group.rank())
      throw SchemaError("coefficient key '" + item.key() +
                        "' does not match the group's divisor count");
    if (!item.value().is_number_integer())
      throw SchemaError("coefficient of '" + item.key() + "' must be an integer");
    chi.coeffs[group.index_of(exps)] += item.value().get<long long>();
  }
  return chi;
}

Json g_character_to_json(const GCharacter& chi) {
  Json j;
  j["ell"] = chi.spec.ell;
  j["m"] = chi.spec.m;
  j["coeffs"] = chi.coeffs;
  return j;
}

GCharacter g_character_from_json(const Json& j) {
  check_keys(j, "g_character", {"ell", "m", "coeffs"});
  CyclicGroupSpec spec{get_long(j, "g_character", "ell"),
                       static_cast<int>(get_long(j, "g_character", "m"))};
  const Json& coeffs = require(j, "g_character", "coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != spec.m + 1)
    throw SchemaError("g_character coeffs must be an array of length m+1");
  GCharacter chi = zero_g(spec);
  for (int i = 0; i <= spec.m; ++i) {
    if (!coeffs[i].is_number_integer())
      throw SchemaError("g_character coeffs must be integers");
    chi.coeffs[i] = coeffs[i].get<long long>();
  }
  return chi;
}

Json dg_character_to_json(const DGCharacter& x) {
  Json rows = Json::object();
  for (long r = 0; r < x.delta_group.order(); ++r) {
    bool nonzero = false;
    for (int i = 0; i <= x.spec.m; ++i)
      if (x.at(r, i) != 0) nonzero = true;
    if (!nonzero) continue;
    std::vector<long long> row(x.spec.m + 1);
    for (int i = 0; i <= x.spec.m; ++i) row[i] = x.at(r, i);
    rows[exponent_tuple_key(x.delta_group.exps_of(r))] = row;
  }
  Json j;
  j["ell"] = x.spec.ell;
  j["m"] = x.spec.m;
  j["rows"] = std::move(rows);
  return j;
}

Json lattice_to_json(const GLattice& lattice) {
  Json sigma = Json::array();
  for (int i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < lattice.rank(); ++j)
      row.push_back(static_cast<long long>(lattice.sigma(i, j)));
    sigma.push_back(std::move(row));
  }
  Json j;
  j["ell"] = lattice.ell;
  j["k"] = lattice.k;
  j["rank"] = lattice.rank();
  j["sigma"] = std::move(sigma);
  return j;
}

GLattice lattice_from_json(const Json& j) {
  check_keys(j, "lattice", {"ell", "k", "rank", "sigma"});
  const long ell = get_long(j, "lattice", "ell");
  const int k = static_cast<int>(get_long(j, "lattice", "k"));
  const int rank = static_cast<int>(get_long(j, "lattice", "rank"));
  const Json& sigma_json = require(j, "lattice", "sigma");
  if (!sigma_json.is_array() || static_cast<int>(sigma_json.size()) != rank)
    throw SchemaError("lattice sigma must be a rank x rank integer matrix");
  IntMat sigma(rank, rank);
  for (int i = 0; i < rank; ++i) {
    if (!sigma_json[i].is_array() || static_cast<int>(sigma_json[i].size()) != rank)
      throw SchemaError("lattice sigma must be a rank x rank integer matrix");
    for (int c = 0; c < rank; ++c) {
      if (!sigma_json[i][c].is_number_integer())
        throw SchemaError("lattice sigma entries must be integers");
      sigma(i, c) = sigma_json[i][c].get<long long>();
    }
  }
  try {
    return make_lattice(ell, k, std::move(sigma));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("lattice: ") + e.what());
  }
}

Json cohomology_result_to_json(const CohomologyResult& r) {
  Json j;
  j["h1_invariant_factors"] = r.h1_invariant_factors;
  j["h2_invariant_factors"] = r.h2_invariant_factors;
  if (r.herbrand_q) {
    j["h1_dim"] = *r.h1_dim;
    j["h2_dim"] = *r.h2_dim;
    j["herbrand_q"] = *r.herbrand_q;
  }
  return j;
}

Json descriptor_to_json(const ExtensionDescriptor& d) {
  Json j;
  j["schema"] = kSchemaTag;
  j["delta_group"] = delta_group_to_json(d.delta_group);
  j["g"] = Json{{"ell", d.g.ell}, {"m", d.g.m}};
  j["lambda_K"] = delta_character_to_json(d.lambda_K);
  if (d.lambda_tilde_K) j["lambda_tilde_K"] = delta_character_to_json(*d.lambda_tilde_K);
  if (d.delta_flag) j["delta_flag"] = *d.delta_flag;
  j["mu_zero"] = d.mu_zero;
  Json places = Json::array();
  for (const auto& p : d.places) {
    Json pj;
    pj["name"] = p.name;
    pj["above_ell"] = p.above_ell;
    pj["delta_dec"] = p.dec_gens;
    pj["g_dec_exp"] = p.g_dec_exp;
    places.push_back(std::move(pj));
  }
  j["places"] = std::move(places);
  return j;
}

ExtensionDescriptor descriptor_from_json(const Json& j) {
  check_keys(j, "descriptor",
             {"schema", "delta_group", "g", "lambda_K", "lambda_tilde_K", "delta_flag",
              "mu_zero", "places"});
  const Json& schema = require(j, "descriptor", "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchemaTag)
    throw SchemaError(std::string("descriptor schema must be '") + kSchemaTag + "'");

  ExtensionDescriptor d;
  d.delta_group = delta_group_from_json(require(j, "descriptor", "delta_group"));

  const Json& g = require(j, "descriptor", "g");
  check_keys(g, "g", {"ell", "m"});
  d.g = CyclicGroupSpec{get_long(g, "g", "ell"), static_cast<int>(get_long(g, "g", "m"))};

  d.lambda_K = delta_character_from_json(require(j, "descriptor", "lambda_K"), d.delta_group);
  if (j.contains("lambda_tilde_K"))
    d.lambda_tilde_K = delta_character_from_json(j.at("lambda_tilde_K"), d.delta_group);
  if (j.contains("delta_flag")) {
    if (!j.at("delta_flag").is_number_integer())
      throw SchemaError("delta_flag must be an integer");
    d.delta_flag = j.at("delta_flag").get<int>();
  }
  const Json& mu = require(j, "descriptor", "mu_zero");
  if (!mu.is_boolean()) throw SchemaError("mu_zero must be a boolean");
  d.mu_zero = mu.get<bool>();

  const Json& places = require(j, "descriptor", "places");
  if (!places.is_array()) throw SchemaError("places must be an array");
  for (const auto& pj : places) {
    check_keys(pj, "place", {"name", "above_ell", "delta_dec", "g_dec_exp"});
    PlaceDatum p;
    const Json& name = require(pj, "place", "name");
    if (!name.is_string()) throw SchemaError("place name must be a string");
    p.name = name.get<std::string>();
    const Json& above = require(pj, "place", "above_ell");
    if (!above.is_boolean()) throw SchemaError("above_ell must be a boolean");
    p.above_ell = above.get<bool>();
    const Json& gens = require(pj, "place", "delta_dec");
    if (!gens.is_array()) throw SchemaError("delta_dec must be an array of exponent tuples");
    for (const auto& gen : gens) p.dec_gens.push_back(get_long_vector(gen, "place.delta_dec"));
    p.g_dec_exp = static_cast<int>(get_long(pj, "place", "g_dec_exp"));
    d.places.push_back(std::move(p));
  }
  return d;
}

ExtensionDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("JSON parse error in " + path + ": " + e.what());
  }
  return descriptor_from_json(j);
}

Json hypotheses_block(const ExtensionDescriptor& d) {
  Json j;
  j["mu_zero"] = d.mu_zero;
  j["leopoldt"] = "assumed";
  j["gross_kuzmin"] = "assumed";
  return j;
}

Json validation_report_to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  Json errors = Json::array();
  for (const auto& issue : r.errors)
    errors.push_back(Json{{"rule", issue.rule}, {"message", issue.message}});
  j["errors"] = std::move(errors);
  Json warnings = Json::array();
  for (const auto& issue : r.warnings)
    warnings.push_back(Json{{"rule", issue.rule}, {"message", issue.message}});
  j["warnings"] = std::move(warnings);
  if (r.resolved_delta)
    j["resolved_delta"] = *r.resolved_delta;
  else
    j["resolved_delta"] = nullptr;
  return j;
}

Json cohomology_report_to_json(const CohomologyReport& r, const ExtensionDescriptor& d) {
  Json j;
  j["schema"] = kSchemaTag;
  j["hypotheses"] = hypotheses_block(d);
  j["delta"] = r.delta;
  j["delta_prime"] = r.delta_prime;
  j["h1_cl"] = delta_character_to_json(r.h1_cl);
  j["h2_cl"] = delta_character_to_json(r.h2_cl);
  j["h1_c"] = delta_character_to_json(r.h1_c);
  j["h2_c"] = delta_character_to_json(r.h2_c);
  j["q_cl"] = delta_character_to_json(r.q_cl);
  j["q_c"] = delta_character_to_json(r.q_c);
  j["duality"] = Json{{"case", duality_case_name(r.duality_case)},
                      {"identity_holds", r.duality_identity},
                      {"conditional", r.duality_conditional}};
  j["warnings"] = r.warnings;
  return j;
}

std::string csv_quote(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace genus
