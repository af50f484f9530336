#pragma once

// Deterministic exports (structure constants, Killing form, roots,
// basis) and the optional on-disk table cache. Identical inputs produce
// byte-identical files: ordering is fixed everywhere and no timestamps
// or timings are written.

#include "e8alg/json_io.hpp"
#include "e8alg/killing.hpp"
#include "e8alg/roots.hpp"
#include "e8alg/structure_table.hpp"
#include "e8alg/version.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>

namespace e8alg {

inline Json table_to_json(const StructureTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back(Json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", to_string(e.c)}});
    return Json{{"algebra", algebra_name(t.algebra)},
                {"dim", t.dim},
                {"basis", t.basis_labels},
                {"entries", std::move(entries)}};
}

inline StructureTable table_from_json(const Json& j) {
    StructureTable t;
    t.algebra = parse_algebra(j.at("algebra").get<std::string>());
    t.dim = j.at("dim").get<int>();
    if (t.dim != algebra_dim(t.algebra))
        throw DecodeError("table dim does not match algebra");
    t.basis_labels = j.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(t.basis_labels.size()) != t.dim)
        throw DecodeError("basis label count does not match dim");
    for (const auto& e : j.at("entries")) {
        TableEntry entry;
        entry.i = e.at("i").get<std::int32_t>();
        entry.j = e.at("j").get<std::int32_t>();
        entry.k = e.at("k").get<std::int32_t>();
        entry.c = parse_rational(e.at("c").get<std::string>());
        if (entry.i < 0 || entry.i >= entry.j || entry.j >= t.dim || entry.k < 0 ||
            entry.k >= t.dim || entry.c.is_zero())
            throw DecodeError("invalid table entry");
        t.entries.push_back(std::move(entry));
    }
    return t;
}

/// CSV with the same columns as the JSON entries.
inline std::string table_to_csv(const StructureTable& t) {
    std::ostringstream out;
    out << "i,j,k,c\n";
    for (const auto& e : t.entries)
        out << e.i << ',' << e.j << ',' << e.k << ',' << to_string(e.c) << '\n';
    return out.str();
}

/// Dense CSV of rationals, one matrix row per line.
inline std::string matrix_to_csv(const MatQ& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << to_string(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

inline Json roots_to_json(const RootDatum& rd) {
    Json roots = Json::array();
    for (const auto& r : rd.roots) {
        Json coords = Json::array();
        for (const auto& c : r) coords.push_back(to_string(c));
        roots.push_back(std::move(coords));
    }
    Json census = Json::object();
    for (const auto& [ratio, count] : rd.pairing_census)
        census[std::to_string(ratio)] = count;
    return Json{{"algebra", "e8"},
                {"cartan_indices", rd.cartan_indices},
                {"cartan_labels", rd.cartan_labels},
                {"root_count", rd.roots.size()},
                {"roots", std::move(roots)},
                {"common_norm_sq", to_string(rd.common_norm_sq)},
                {"pairing_census", std::move(census)},
                {"max_round_residual", rd.max_round_residual},
                {"max_eigen_residual", rd.max_eigen_residual}};
}

inline Json basis_to_json(const StructureTable& t) {
    return Json{{"algebra", algebra_name(t.algebra)},
                {"dim", t.dim},
                {"basis", t.basis_labels}};
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

// ---- optional structure-table cache -------------------------------------

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Cache file name, keyed by the generator version and the algebra.
inline std::string cache_file_name(AlgebraId id) {
    std::ostringstream name;
    name << "sc-" << algebra_name(id) << '-' << std::hex
         << fnv1a64(std::string(kGeneratorVersion) + ':' + algebra_name(id)) << ".json";
    return name.str();
}

/// Builds the table, or loads/stores it under $E8_CACHE_DIR when set.
/// Cache misses fall back to building; cache write failures are ignored
/// (the cache is an optimization, not a source of truth).
inline StructureTable cached_structure_table(AlgebraId id) {
    const char* dir = std::getenv("E8_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return build_structure_table(id);
    const std::filesystem::path path = std::filesystem::path(dir) / cache_file_name(id);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        if (in) {
            try {
                return table_from_json(Json::parse(in));
            } catch (const std::exception&) {
                // unreadable cache entry; rebuild below
            }
        }
    }
    StructureTable t = build_structure_table(id);
    try {
        std::filesystem::create_directories(path.parent_path());
        write_file(path, dump_json(table_to_json(t)));
    } catch (const std::exception&) {
    }
    return t;
}

/// Process-memoized, cache-aware table access. Built (or loaded) once
/// per process, read-only thereafter.
inline const StructureTable& table_for(AlgebraId id) {
    static std::mutex mu;
    static std::map<AlgebraId, std::unique_ptr<const StructureTable>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = tables[id];
    if (!slot) slot = std::make_unique<const StructureTable>(cached_structure_table(id));
    return *slot;
}

} // namespace e8alg
