#pragma once

#include "autbound/catalog/registry.hpp"

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace autbound {

using Json = nlohmann::json;

/// `{ "conductor": m, "dimension": N, "generators": [[[entry, ...], ...], ...] }`
Json group_to_json(const std::vector<CycloMatrix>& generators);
/// Throws MalformedInput.
std::vector<CycloMatrix> group_from_json(const Json& j);

/// `{ "conductor": m, "nvars": N, "degree": d, "terms": [{"exponents": [...], "coeff": "..."}] }`
Json poly_to_json(const HomogPoly& f);
/// Throws MalformedInput.
HomogPoly poly_from_json(const Json& j);

Json example_to_json(const ExampleRecord& r);
ExampleRecord example_from_json(const Json& j);

/// A registry file is an array of example records, an object with an
/// "examples" array, or a single example record.
std::vector<ExampleRecord> registry_from_json(const Json& j);

/// Reads and parses a JSON file; throws MalformedInput on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace autbound
