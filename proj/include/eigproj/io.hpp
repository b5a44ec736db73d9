#pragma once

// JSON formats for categories, modules, posets, generator specs and
// verdicts.
//
//   category: {"objects": [id], "morphisms": [{"id", "src", "tgt"}],
//              "identities": {object: morphism}, "compose": [[g, f, g∘f]]}
//   module:   {"category_digest", "field": {"p"}, "dims": {object: n},
//              "action": {morphism: [[row], ...]}}
//   poset:    {"elements": [id], "relations": [[a, b], ...]}  (a <= b)
//   spec:     {"groups": [group], "arrows": [{"source", "target", "biset"}]}
//
// Structural problems raise Error(Malformed).

#include <filesystem>
#include <string>

#include "json.hpp"

#include "eigproj/category.hpp"
#include "eigproj/cmodule.hpp"
#include "eigproj/freegen.hpp"
#include "eigproj/gorenstein.hpp"
#include "eigproj/poset.hpp"

namespace eigproj {

using Json = nlohmann::ordered_json;

/// Parses a file; Malformed on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

CategoryData category_data_from_json(const Json& j);
Json category_to_json(const FiniteCategory& cat);
FiniteCategory category_from_json(const Json& j);

/// "sha256:<hex>" of the canonical category JSON: objects and morphisms in
/// input order, identities keyed by object in input order, compose sorted.
std::string category_digest(const FiniteCategory& cat);

/// Throws Precondition when the digest names another category.
CModule module_from_json(const Json& j, CategoryPtr cat);
Json module_to_json(const CModule& m);

FinitePoset poset_from_json(const Json& j);
/// Covering relations only.
Json poset_to_json(const FinitePoset& p);

FreeEISpec spec_from_json(const Json& j);
Json spec_to_json(const FreeEISpec& spec);

Json to_json(const GprojVerdict& v);
Json to_json(const GptVerdict& v);
Json to_json(const std::vector<Violation>& violations);

}  // namespace eigproj
