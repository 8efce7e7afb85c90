#pragma once

#include <string>

#include "json.hpp"

#include "detspace/subspace.hpp"

namespace detspace {

using Json = nlohmann::ordered_json;

// {"p": characteristic, "k": degree, "modulus": [ints]} with the modulus
// omitted for prime fields. Tower fields are not serializable; subspace files
// always carry a prime field or a one-step extension.
Json field_to_json(const FieldPtr& f);
FieldPtr json_to_field(const Json& j);

// {"field": {...}, "n": int (or "rows"/"cols"), "basis": [[row-major ints]]}
Json subspace_to_json(const MatSubspace& sub);
MatSubspace json_to_subspace(const Json& j);

MatSubspace read_subspace(const std::string& path);
void write_subspace(const std::string& path, const MatSubspace& sub);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace detspace
