#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tubealg/cohomology.hpp"
#include "tubealg/monomial.hpp"
#include "tubealg/representation.hpp"

namespace tubealg {

using Json = nlohmann::ordered_json;

// All loaders throw InputError on malformed payloads.

Json load_json_file(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

// {"type":"table","order":n,"mult":[[...]],"names":[...]} or
// {"type":"perm","degree":d,"generators":[[...]]}
GroupTable group_from_json(const Json& j);
// Raw table of a "table" payload, unvalidated (for verify-group).
std::vector<std::vector<Elem>> raw_table_from_json(const Json& j);
Json group_to_json(const GroupTable& g);

// {"modulus": N, "values": [k...]} flat row-major, entry k meaning k/N.
Cocycle3 cocycle_from_json(const Json& j, std::size_t group_order);
Json cocycle_to_json(const Cocycle3& c);
Json cochain_to_json(const Cochain2& c);

// {"group": <payload or path>, "H": [...], "K": [...], "cocycle": <payload or path>}
// Relative paths resolve against base_dir.
BHSetup bh_from_json(const Json& j, const std::filesystem::path& base_dir);

// {"dimension": d, "matrices": {label: [[re,im], ...]}}, row-major; labels
// as produced by alg.label. Missing labels are rejected.
Representation rep_from_json(const Json& j, const MonomialAlgebra& alg);
Json rep_to_json(const Representation& rep, const MonomialAlgebra& alg);

// One entry per nonzero basis product:
// {"left": [...], "right": [...], "scalar": "k/N", "result": [...]}
Json structure_dump(const MonomialAlgebra& alg);
// Integer tuple of a label string such as "(1,0,1)" or "[3]".
std::vector<std::int64_t> label_tuple(const std::string& label);

Json check_to_json(const std::string& name, const CheckResult& r);

// 64-bit FNV-1a, lower-case hex.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace tubealg
