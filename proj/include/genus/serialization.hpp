#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "genus/genus_engine.hpp"
#include "genus/lattice_cohomology.hpp"
#include "genus/tower.hpp"

namespace genus {

// Schema version tag carried by every descriptor and every emitted record.
inline constexpr const char* kSchemaTag = "genus-calc/1";

using Json = nlohmann::ordered_json;

// Malformed input: missing/unknown keys, wrong types, bad schema tag.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json delta_group_to_json(const DeltaGroup& g);
DeltaGroup delta_group_from_json(const Json& j);

// Sparse coefficient map keyed by exponent tuples, e.g. {"coeffs":{"(1,0)":2}}.
Json delta_character_to_json(const DeltaCharacter& chi);
DeltaCharacter delta_character_from_json(const Json& j, const DeltaGroup& group);

Json g_character_to_json(const GCharacter& chi);
GCharacter g_character_from_json(const Json& j);

Json dg_character_to_json(const DGCharacter& x);

Json lattice_to_json(const GLattice& lattice);
GLattice lattice_from_json(const Json& j);

Json cohomology_result_to_json(const CohomologyResult& r);

Json descriptor_to_json(const ExtensionDescriptor& d);
// Strict: rejects a missing schema tag and any unknown key at any level.
ExtensionDescriptor descriptor_from_json(const Json& j);
ExtensionDescriptor load_descriptor(const std::string& path);

Json hypotheses_block(const ExtensionDescriptor& d);
Json validation_report_to_json(const ValidationReport& r);
Json cohomology_report_to_json(const CohomologyReport& r, const ExtensionDescriptor& d);

// RFC 4180 field quoting.
std::string csv_quote(const std::string& field);

}  // namespace genus
