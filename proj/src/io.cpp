#include "tubealg/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

Json resolve(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return load_json_file(p);
    }
    return j;
}

std::vector<Elem> elements_field(const Json& j, const char* key, std::size_t n) {
    auto v = field<std::vector<std::int64_t>>(j, key);
    std::vector<Elem> out;
    for (auto x : v) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw InputError(std::string(key) + " element out of range", {x});
        out.push_back(static_cast<Elem>(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::vector<std::vector<Elem>> raw_table_from_json(const Json& j) {
    if (field<std::string>(j, "type") != "table") throw InputError("expected a \"table\" group payload");
    const auto rows = field<std::vector<std::vector<std::int64_t>>>(j, "mult");
    if (j.contains("order") && field<std::size_t>(j, "order") != rows.size())
        throw InputError("order does not match the table", {w(field<std::size_t>(j, "order")), w(rows.size())});
    std::vector<std::vector<Elem>> out;
    for (const auto& r : rows) {
        std::vector<Elem> row;
        for (auto x : r) {
            if (x < 0) throw InputError("negative table entry", {x});
            row.push_back(static_cast<Elem>(x));
        }
        out.push_back(std::move(row));
    }
    return out;
}

GroupTable group_from_json(const Json& j) {
    const auto type = field<std::string>(j, "type");
    if (type == "table") {
        std::vector<std::string> names;
        if (j.contains("names")) names = field<std::vector<std::string>>(j, "names");
        return GroupTable::from_table(raw_table_from_json(j), names);
    }
    if (type == "perm") {
        const auto degree = field<std::size_t>(j, "degree");
        const auto gens = field<std::vector<Permutation>>(j, "generators");
        return group_from_permutations(degree, gens);
    }
    throw InputError("unknown group type \"" + type + "\"");
}

Json group_to_json(const GroupTable& g) {
    Json j;
    j["type"] = "table";
    j["order"] = g.order();
    j["mult"] = g.table();
    if (!g.names().empty()) j["names"] = g.names();
    return j;
}

Cocycle3 cocycle_from_json(const Json& j, std::size_t n) {
    const auto modulus = field<std::int64_t>(j, "modulus");
    if (modulus < 1) throw InputError("modulus must be positive", {modulus});
    const auto values = field<std::vector<std::int64_t>>(j, "values");
    if (values.size() != n * n * n) throw InputError("cocycle needs n^3 values", {w(values.size()), w(n * n * n)});
    Cocycle3 c = Cocycle3::trivial(n);
    for (std::size_t i = 0; i < values.size(); ++i) c.values[i] = Phase(values[i], modulus);
    return c;
}

Json cocycle_to_json(const Cocycle3& c) {
    const std::int64_t m = c.modulus();
    std::vector<std::int64_t> vals;
    vals.reserve(c.values.size());
    for (const auto& p : c.values) vals.push_back(p.num() * (m / p.den()));
    Json j;
    j["modulus"] = m;
    j["values"] = vals;
    return j;
}

Json cochain_to_json(const Cochain2& c) {
    std::int64_t m = 1;
    for (const auto& p : c.values) m = std::lcm(m, p.den());
    std::vector<std::int64_t> vals;
    for (const auto& p : c.values) vals.push_back(p.num() * (m / p.den()));
    Json j;
    j["modulus"] = m;
    j["values"] = vals;
    return j;
}

BHSetup bh_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw InputError("BH setup must be an object");
    BHSetup s;
    s.group = group_from_json(resolve(field<Json>(j, "group"), base_dir));
    const std::size_t n = s.group.order();
    s.h = elements_field(j, "H", n);
    s.k = elements_field(j, "K", n);
    s.omega = cocycle_from_json(resolve(field<Json>(j, "cocycle"), base_dir), n);
    return s;
}

Representation rep_from_json(const Json& j, const MonomialAlgebra& alg) {
    const auto d = field<std::size_t>(j, "dimension");
    const Json mats = field<Json>(j, "matrices");
    if (!mats.is_object()) throw InputError("\"matrices\" must be an object");
    Representation rep;
    rep.dimension = d;
    std::size_t used = 0;
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const std::string key = alg.label(i);
        if (!mats.contains(key)) throw InputError("representation is missing label " + key, {w(i)});
        ++used;
        const auto entries = mats.at(key);
        if (!entries.is_array() || entries.size() != d * d)
            throw InputError("matrix for " + key + " needs d^2 entries", {w(i)});
        std::vector<Eigen::Triplet<Complex>> trip;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const auto& e = entries[k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw InputError("matrix entries are [re, im] pairs", {w(i), w(k)});
            const Complex z(e[0].get<double>(), e[1].get<double>());
            if (z != Complex(0)) trip.emplace_back(static_cast<int>(k / d), static_cast<int>(k % d), z);
        }
        SMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        m.setFromTriplets(trip.begin(), trip.end());
        rep.matrices.push_back(std::move(m));
    }
    if (used != mats.size()) throw InputError("representation has labels outside the algebra");
    return rep;
}

Json rep_to_json(const Representation& rep, const MonomialAlgebra& alg) {
    Json mats = Json::object();
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const CMatrix m(rep.matrices[i]);
        Json entries = Json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
        mats[alg.label(i)] = std::move(entries);
    }
    Json j;
    j["dimension"] = rep.dimension;
    j["matrices"] = std::move(mats);
    return j;
}

std::vector<std::int64_t> label_tuple(const std::string& label) {
    std::vector<std::int64_t> out;
    std::int64_t cur = 0;
    bool in_num = false;
    for (char ch : label) {
        if (ch >= '0' && ch <= '9') {
            cur = cur * 10 + (ch - '0');
            in_num = true;
        } else if (in_num) {
            out.push_back(cur);
            cur = 0;
            in_num = false;
        }
    }
    if (in_num) out.push_back(cur);
    return out;
}

Json structure_dump(const MonomialAlgebra& alg) {
    Json out = Json::array();
    for (const auto& e : structure_constants(alg)) {
        Json j;
        j["left"] = label_tuple(alg.label(e.left));
        j["right"] = label_tuple(alg.label(e.right));
        j["scalar"] = e.result.coeff.str();
        j["result"] = label_tuple(alg.label(e.result.index));
        out.push_back(std::move(j));
    }
    return out;
}

Json check_to_json(const std::string& name, const CheckResult& r) {
    Json j;
    j["name"] = name;
    j["passed"] = r.passed;
    j["cases"] = r.cases;
    if (!r.passed) {
        j["relation"] = r.relation;
        j["witness"] = r.witness;
        if (!r.detail.empty()) j["detail"] = r.detail;
    }
    return j;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace tubealg
