#pragma once

#include "leibniz/algebra.hpp"

#include <json.hpp>

namespace leibniz {

// Algebra file schema: {"name"?, "field": "Q" | {"GF": p}, "dim": n,
// "basis"?: [labels], "products": [{"left", "right", "value"}]} with 1-based
// basis indices, full-length value vectors, and omitted products meaning 0.
// Rationals serialize as decimal strings ("3", "-1/2"); prime-field entries
// as plain integers.
nlohmann::ordered_json algebra_to_json(const LeibnizAlgebra& L);
LeibnizAlgebra algebra_from_json(const nlohmann::ordered_json& j);

// Pretty file with trailing newline; parse failures throw InputError.
void write_algebra_file(const LeibnizAlgebra& L, const std::string& path);
LeibnizAlgebra read_algebra_file(const std::string& path);

nlohmann::ordered_json field_to_json(const Field& F);
Field field_from_json(const nlohmann::ordered_json& j);
// Command-line field descriptor: "Q" or "GF:p".
Field parse_field_flag(const std::string& text);

// FNV-1a 64 over the compact canonical serialization, "fnv1a:" + 16 hex
// digits. Identical algebras digest identically regardless of file layout.
std::string algebra_digest(const LeibnizAlgebra& L);
std::string fnv1a_hex(const std::string& bytes);

} // namespace leibniz
