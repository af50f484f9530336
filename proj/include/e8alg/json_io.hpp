#pragma once

// JSON encodings of the domain types. Rationals are always strings
// ("p" or "p/q"), never floats, so values survive round-trips exactly.
//
//   Octonion:   ["0","1/2",...] (8 entries, coefficient of e_i at index i)
//   Skew8:      8x8 array of rational strings; skewness is validated
//   OctOct:     8x8 array of rational strings
//   SoPair:     {"P": Skew8, "Q": Skew8}
//   F4Element:  {"A": Skew8, "u": Octonion, "v": ..., "w": ...}
//   E8Element:  {"P": Skew8, "Q": Skew8, "u": OctOct, "v": ..., "w": ...}
//   So16:       {"P": Skew8, "Q": Skew8, "X": OctOct}

#include "e8alg/e8.hpp"
#include "e8alg/f4.hpp"
#include "e8alg/octoct.hpp"
#include "e8alg/verify.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace e8alg {

using Json = nlohmann::json;

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

namespace jsonio {

inline Json encode(const Rational& r) { return to_string(r); }

inline Rational decode_rational(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw DecodeError(where + ": rationals must be strings like \"p\" or \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const FormatError& e) {
        throw DecodeError(where + ": " + e.what());
    }
}

inline Json encode(const Octonion& o) {
    Json j = Json::array();
    for (int i = 0; i < 8; ++i) j.push_back(encode(o.c[static_cast<std::size_t>(i)]));
    return j;
}

inline Octonion decode_octonion(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 8)
        throw DecodeError(where + ": an octonion is an array of 8 rational strings");
    Octonion o;
    for (int i = 0; i < 8; ++i)
        o.c[static_cast<std::size_t>(i)] =
            decode_rational(j[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    return o;
}

inline Json encode_mat8(const Mat8& m) {
    Json j = Json::array();
    for (int i = 0; i < 8; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 8; ++k) row.push_back(encode(m.a[i][k]));
        j.push_back(std::move(row));
    }
    return j;
}

inline Mat8 decode_mat8(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 8)
        throw DecodeError(where + ": expected an 8x8 array of rational strings");
    Mat8 m;
    for (int i = 0; i < 8; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != 8)
            throw DecodeError(where + ": row " + std::to_string(i) + " must have 8 entries");
        for (int k = 0; k < 8; ++k)
            m.a[i][k] = decode_rational(row[static_cast<std::size_t>(k)],
                                        where + "[" + std::to_string(i) + "][" +
                                            std::to_string(k) + "]");
    }
    return m;
}

inline Json encode(const Skew8& s) { return encode_mat8(s.m); }

inline Skew8 decode_skew8(const Json& j, const std::string& where) {
    Mat8 m = decode_mat8(j, where);
    if (!m.is_skew()) throw DecodeError("matrix " + where + " is not skew-symmetric");
    return Skew8(std::move(m));
}

inline Json encode(const OctOct& x) { return encode_mat8(x.m); }

inline OctOct decode_octoct(const Json& j, const std::string& where) {
    return OctOct(decode_mat8(j, where));
}

inline Json encode(const SoPair& a) {
    return Json{{"P", encode(a.p)}, {"Q", encode(a.q)}};
}

inline const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name))
        throw DecodeError(where + ": missing field \"" + name + "\"");
    return j.at(name);
}

inline SoPair decode_so_pair(const Json& j, const std::string& where) {
    return {decode_skew8(field(j, "P", where), "P"), decode_skew8(field(j, "Q", where), "Q")};
}

inline Json encode(const F4Element& x) {
    return Json{{"A", encode(x.a)},
                {"u", encode(x.u)},
                {"v", encode(x.v)},
                {"w", encode(x.w)}};
}

inline F4Element decode_f4(const Json& j, const std::string& where = "element") {
    return {decode_skew8(field(j, "A", where), "A"), decode_octonion(field(j, "u", where), "u"),
            decode_octonion(field(j, "v", where), "v"),
            decode_octonion(field(j, "w", where), "w")};
}

inline Json encode(const E8Element& x) {
    return Json{{"P", encode(x.a.p)},
                {"Q", encode(x.a.q)},
                {"u", encode(x.u)},
                {"v", encode(x.v)},
                {"w", encode(x.w)}};
}

inline E8Element decode_e8(const Json& j, const std::string& where = "element") {
    E8Element x;
    x.a.p = decode_skew8(field(j, "P", where), "P");
    x.a.q = decode_skew8(field(j, "Q", where), "Q");
    x.u = decode_octoct(field(j, "u", where), "u");
    x.v = decode_octoct(field(j, "v", where), "v");
    x.w = decode_octoct(field(j, "w", where), "w");
    return x;
}

inline Json encode(const So16Element& x) {
    return Json{{"P", encode(x.a.p)}, {"Q", encode(x.a.q)}, {"X", encode(x.x)}};
}

inline So16Element decode_so16(const Json& j, const std::string& where = "element") {
    So16Element x;
    x.a.p = decode_skew8(field(j, "P", where), "P");
    x.a.q = decode_skew8(field(j, "Q", where), "Q");
    x.x = decode_octoct(field(j, "X", where), "X");
    return x;
}

/// Serialized report. Wall time deliberately stays out: command output
/// must be byte-identical across runs; timing goes to stderr.
inline Json encode(const VerificationReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(Json{{"indices", f.indices}, {"detail", f.detail}});
    return Json{{"check", r.check},   {"algebra", r.algebra}, {"mode", r.mode},
                {"cases", r.cases},   {"passed", r.passed()}, {"failures", failures},
                {"notes", r.notes}};
}

} // namespace jsonio
} // namespace e8alg
