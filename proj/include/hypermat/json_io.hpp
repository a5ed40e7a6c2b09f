#pragma once

#include <string>

#include <json.hpp>

#include "hypermat/hmatroid.hpp"

namespace hypermat {

// Insertion-ordered so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hypermat/1";

// Parse failures throw InvalidInput naming the source and the JSON pointer
// of the offending value.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

Json hyperfield_to_json(const Hyperfield& h);
Hyperfield hyperfield_from_json(const Json& j, const std::string& where = "");
// Raw tables of a {"kind": "table"} object, not yet validated.
FiniteTable table_from_json(const Json& j, const std::string& where = "");

// "0", or {"r": residue, "g": [grade]} with r omitted for Krasner residues
// and g omitted for rank 0.
Json element_to_json(const Hyperfield& h, const HElement& x);
HElement element_from_json(const Hyperfield& h, const Json& j, const std::string& where = "");

Json vector_to_json(const Hyperfield& h, const HVector& v);
HVector vector_from_json(const Hyperfield& h, const Json& j, std::size_t size,
                         const std::string& where = "");

Json hmatroid_to_json(const HMatroid& m);
HMatroid hmatroid_from_json(const Json& j);
// Circuits as written, without checking that they form a matroid.
CircuitSignature signature_from_json(const Json& j);

// {"ground": [...], "circuits": [["1","2"], ...]}
Json classical_to_json(const ClassicalMatroid& m);
ClassicalMatroid classical_from_json(const Json& j);

}  // namespace hypermat
