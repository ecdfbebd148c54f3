#pragma once

#include "ftop/collapse.hpp"
#include "ftop/complex.hpp"
#include "ftop/cover.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/homology.hpp"
#include "ftop/persistence.hpp"
#include "ftop/poset.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace ftop::io {

using Json = nlohmann::json;

/// Parse errors and missing files surface as InvalidInput naming the path.
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& doc);

// Posets: {"elements": [...], "relations": [[a, b], ...]}; the writer emits
// the Hasse diagram with elements sorted.
Poset poset_from_json(const Json& doc);
Json to_json(const Poset& poset);

// Complexes: {"facets": [[...], ...]}.
SimplicialComplex complex_from_json(const Json& doc);
Json to_json(const SimplicialComplex& complex);
bool looks_like_complex(const Json& doc);

/// {"source": name, "target": name, "direction": "right", "pairs": [...]},
/// with the posets looked up by name.
Relation relation_from_json(const Json& doc, const std::map<std::string, Poset>& spaces);
Json to_json(const Relation& relation, const std::string& source, const std::string& target);

/**
 * Cylinder spec: {"spaces": [{"name": "X0", ...poset...} | {"name": "X0",
 * "file": "x0.json"}], "relations": [...relation...]}. Files are resolved
 * against `base`.
 */
CylinderSpec cylinder_spec_from_json(const Json& doc, const std::filesystem::path& base = {});

/**
 * Cover: {"parent": <poset or complex object> | "file.json", "members":
 * [{"name": ..., "facets": [...]} | {"name": ..., "elements": [...]}]}.
 */
Cover cover_from_json(const Json& doc, const std::filesystem::path& base = {});
Json to_json(const Cover& cover);

// Certificates: {"steps": [{"kind": "down-weak", "element": "z"},
// {"kind": "free-pair", "face": [...], "coface": [...]}]}.
CollapseCertificate certificate_from_json(const Json& doc);
Json to_json(const CollapseCertificate& certificate);

/// [{"degree": k, "betti": b, "torsion": [...]}, ...], every degree up to the top.
Json to_json(const HomologyResult& result);
/// Both H_0 conventions for a non-empty complex.
Json homology_report(const SimplicialComplex& complex);

/// One JSON object per line: {"degree": k, "birth": t, "death": t | null}.
std::string persistence_lines(const PersistenceDiagram& diagram);
Json to_json(const Bar& bar);

Json to_json(const TriStateResult& result);
Json to_json(const CollapseReport& report);
Json to_json(const IntermediateReport& report);
Json to_json(const ChainReport& report);
Json to_json(const CoverClassification& classification);
Json to_json(const NerveReport& report);
Json to_json(const TruncationReport& report);
Json to_json(const RelationNerveReport& report);

}  // namespace ftop::io
