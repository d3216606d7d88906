#pragma once

#include "bundle.hpp"
#include "parse.hpp"

#include "json.hpp"

namespace ribbon {

using json = nlohmann::json;

// ---------------------------------------------------------------- output

inline json to_json(const Jet& u) {
    json coeffs = json::array();
    for (const RatFunc& c : u.coeffs()) coeffs.push_back(ratfunc_to_string(c));
    return json{{"n", u.order()}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const Automorphism& f) {
    return json{{"n", f.n()}, {"mu", to_json(f.mu())}, {"nu", to_json(f.nu())}};
}

inline json to_json(const Derivation& D) {
    return json{{"n", D.n()}, {"a", to_json(D.a())}, {"b", to_json(D.b())}};
}

inline json to_json(const Cover& c) {
    json opens = json::object();
    for (const auto& [label, pts] : c.opens()) {
        json arr = json::array();
        for (const Rat& p : pts) arr.push_back(rat_to_string(p));
        opens[label] = std::move(arr);
    }
    return json{{"opens", std::move(opens)}};
}

inline std::string pair_key_string(const PairKey& k) { return k.first + "|" + k.second; }

inline json to_json(const Cocycle& c) {
    json entries = json::object();
    for (const auto& [key, g] : c.entries()) entries[pair_key_string(key)] = to_json(g);
    return json{{"n", c.n()}, {"cover", to_json(c.cover())}, {"entries", std::move(entries)}};
}

inline json to_json(const Cochain0& h) {
    json entries = json::object();
    for (const auto& [label, g] : h.entries()) entries[label] = to_json(g);
    return json{{"cover", to_json(h.cover())}, {"entries", std::move(entries)}};
}

inline json to_json(const KernelClass& u) {
    json entries = json::object();
    for (const auto& [key, tb] : u.entries())
        entries[pair_key_string(key)] = json{{"theta", ratfunc_to_string(tb.first)},
                                             {"beta", ratfunc_to_string(tb.second)}};
    return json{{"n", u.n()}, {"entries", std::move(entries)}};
}

inline json to_json(const LineCocycle& L) {
    json entries = json::object();
    for (const auto& [key, s] : L.entries()) entries[pair_key_string(key)] = ratfunc_to_string(s);
    return json{{"cover", to_json(L.cover())}, {"entries", std::move(entries)}};
}

inline json to_json(const Mat2& m) {
    return json::array({json::array({to_json(m.m00), to_json(m.m01)}),
                        json::array({to_json(m.m10), to_json(m.m11)})});
}

inline json to_json(const MatrixJetCocycle& M) {
    json entries = json::object();
    for (const auto& [key, m] : M.entries()) entries[pair_key_string(key)] = to_json(m);
    return json{{"n", M.order()}, {"cover", to_json(M.cover())}, {"entries", std::move(entries)}};
}

inline json to_json(const VerifyReport& r) {
    json failures = json::array();
    for (const TripleFailure& f : r.failures)
        failures.push_back(json{{"triple", json::array({f.triple[0], f.triple[1], f.triple[2]})},
                                {"residual", to_json(f.residual)}});
    json irregular = json::array();
    for (const PairKey& k : r.irregular) irregular.push_back(json::array({k.first, k.second}));
    return json{{"pass", r.pass}, {"failures", std::move(failures)},
                {"irregular", std::move(irregular)}};
}

inline json to_json(const MatrixVerifyReport& r) {
    json failures = json::array();
    for (const MatrixTripleFailure& f : r.failures)
        failures.push_back(json{{"triple", json::array({f.triple[0], f.triple[1], f.triple[2]})},
                                {"residual", to_json(f.residual)}});
    json singular = json::array();
    for (const PairKey& k : r.singular) singular.push_back(json::array({k.first, k.second}));
    return json{{"pass", r.pass}, {"failures", std::move(failures)},
                {"singular", std::move(singular)}};
}

inline json to_json(const ProlReport& r) {
    json failures = json::array();
    for (const PairFailure& f : r.failures)
        failures.push_back(json{{"pair", json::array({f.pair.first, f.pair.second})},
                                {"residual", to_json(f.residual)}});
    return json{{"pass", r.pass}, {"failures", std::move(failures)}};
}

inline json obstruction_to_json(const std::map<std::array<std::string, 3>, ObstructionEntry>& m) {
    json entries = json::object();
    for (const auto& [tr, e] : m)
        entries[tr[0] + "|" + tr[1] + "|" + tr[2]] =
            json{{"gamma", to_json(e.gamma)}, {"theta", ratfunc_to_string(e.theta)},
                 {"beta", ratfunc_to_string(e.beta)}};
    return json{{"entries", std::move(entries)}};
}

// ---------------------------------------------------------------- input

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(errc::parse_error, "expected an object", path);
    auto it = j.find(key);
    if (it == j.end()) fail(errc::parse_error, std::string("missing field '") + key + "'", path);
    return *it;
}

inline void only_keys(const json& j, std::initializer_list<const char*> keys,
                      const std::string& path) {
    if (!j.is_object()) fail(errc::parse_error, "expected an object", path);
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : keys)
            if (key == k) known = true;
        if (!known) fail(errc::parse_error, "unknown field '" + key + "'", path);
    }
}

inline int int_member(const json& j, const char* key, const std::string& path) {
    const json& v = member(j, key, path);
    if (!v.is_number_integer())
        fail(errc::parse_error, std::string("field '") + key + "' must be an integer", path);
    long long x = v.get<long long>();
    if (x < -1000000 || x > 1000000)
        fail(errc::parse_error, std::string("field '") + key + "' out of range", path);
    return static_cast<int>(x);
}

inline std::string string_at(const json& v, const std::string& path) {
    if (!v.is_string()) fail(errc::parse_error, "expected a string", path);
    return v.get<std::string>();
}

inline RatFunc ratfunc_at(const json& v, const std::string& path) {
    std::string s = string_at(v, path);
    try {
        return parse_ratfunc(s);
    } catch (const error& e) {
        fail(e.code(), e.what(), path + " " + e.location());
    }
}

inline Rat rat_at(const json& v, const std::string& path) {
    std::string s = string_at(v, path);
    try {
        return rat_from_string(s);
    } catch (const error& e) {
        fail(e.code(), e.what(), path);
    }
}

// "U0|U1" -> ordered pair; schema requires i<j
inline PairKey pair_key_at(const std::string& key, const std::string& path) {
    std::size_t bar = key.find('|');
    if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
        fail(errc::parse_error, "entry key must be 'i|j'", path);
    std::string i = key.substr(0, bar), j = key.substr(bar + 1);
    if (i.empty() || j.empty() || !(i < j))
        fail(errc::parse_error, "entry key must name two opens with i<j", path);
    return {i, j};
}

} // namespace detail

inline Jet jet_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"n", "coeffs"}, path);
    int n = detail::int_member(j, "n", path);
    if (n < 0) fail(errc::parse_error, "n must be nonnegative", path);
    const json& arr = detail::member(j, "coeffs", path);
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        fail(errc::parse_error, "coeffs must be an array of length n", path);
    std::vector<RatFunc> cs;
    cs.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k)
        cs.push_back(detail::ratfunc_at(arr[k], path + ".coeffs[" + std::to_string(k) + "]"));
    return Jet(n, std::move(cs));
}

inline Automorphism aut_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"n", "mu", "nu"}, path);
    int n = detail::int_member(j, "n", path);
    Jet mu = jet_from_json(detail::member(j, "mu", path), path + ".mu");
    Jet nu = jet_from_json(detail::member(j, "nu", path), path + ".nu");
    return Automorphism(n, std::move(mu), std::move(nu));
}

inline Derivation der_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"n", "a", "b"}, path);
    int n = detail::int_member(j, "n", path);
    Jet a = jet_from_json(detail::member(j, "a", path), path + ".a");
    Jet b = jet_from_json(detail::member(j, "b", path), path + ".b");
    return Derivation(n, std::move(a), std::move(b));
}

inline Cover cover_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"opens"}, path);
    const json& opens = detail::member(j, "opens", path);
    if (!opens.is_object() || opens.empty())
        fail(errc::parse_error, "opens must be a non-empty object", path);
    std::map<std::string, std::set<Rat>> out;
    for (const auto& [label, pts] : opens.items()) {
        std::string p = path + ".opens." + label;
        if (label.empty() || label.find('|') != std::string::npos)
            fail(errc::parse_error, "bad open label", p);
        if (!pts.is_array()) fail(errc::parse_error, "excluded points must be an array", p);
        std::set<Rat> set;
        for (std::size_t k = 0; k < pts.size(); ++k)
            set.insert(detail::rat_at(pts[k], p + "[" + std::to_string(k) + "]"));
        out.emplace(label, std::move(set));
    }
    return Cover(std::move(out));
}

inline Cocycle cocycle_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"n", "cover", "entries"}, path);
    int n = detail::int_member(j, "n", path);
    Cover cover = cover_from_json(detail::member(j, "cover", path), path + ".cover");
    const json& entries = detail::member(j, "entries", path);
    if (!entries.is_object()) fail(errc::parse_error, "entries must be an object", path);
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, val] : entries.items()) {
        std::string p = path + ".entries." + key;
        out.emplace(detail::pair_key_at(key, p), aut_from_json(val, p));
    }
    return Cocycle(n, std::move(cover), std::move(out));
}

inline Cochain0 cochain_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"cover", "entries"}, path);
    Cover cover = cover_from_json(detail::member(j, "cover", path), path + ".cover");
    const json& entries = detail::member(j, "entries", path);
    if (!entries.is_object()) fail(errc::parse_error, "entries must be an object", path);
    std::map<std::string, Automorphism> out;
    for (const auto& [key, val] : entries.items())
        out.emplace(key, aut_from_json(val, path + ".entries." + key));
    return Cochain0(std::move(cover), std::move(out));
}

inline KernelClass kernel_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"n", "entries"}, path);
    int n = detail::int_member(j, "n", path);
    const json& entries = detail::member(j, "entries", path);
    if (!entries.is_object()) fail(errc::parse_error, "entries must be an object", path);
    std::map<PairKey, std::pair<RatFunc, RatFunc>> out;
    for (const auto& [key, val] : entries.items()) {
        std::string p = path + ".entries." + key;
        detail::only_keys(val, {"theta", "beta"}, p);
        RatFunc theta = detail::ratfunc_at(detail::member(val, "theta", p), p + ".theta");
        RatFunc beta = detail::ratfunc_at(detail::member(val, "beta", p), p + ".beta");
        out.emplace(detail::pair_key_at(key, p), std::pair<RatFunc, RatFunc>{theta, beta});
    }
    return KernelClass(n, std::move(out));
}

inline LineCocycle line_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"cover", "entries"}, path);
    Cover cover = cover_from_json(detail::member(j, "cover", path), path + ".cover");
    const json& entries = detail::member(j, "entries", path);
    if (!entries.is_object()) fail(errc::parse_error, "entries must be an object", path);
    std::map<PairKey, RatFunc> out;
    for (const auto& [key, val] : entries.items()) {
        std::string p = path + ".entries." + key;
        out.emplace(detail::pair_key_at(key, p), detail::ratfunc_at(val, p));
    }
    return LineCocycle(std::move(cover), std::move(out));
}

inline Mat2 mat2_from_json(const json& j, const std::string& path = "$") {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(errc::parse_error, "expected a 2x2 array", path);
    return Mat2{jet_from_json(j[0][0], path + "[0][0]"), jet_from_json(j[0][1], path + "[0][1]"),
                jet_from_json(j[1][0], path + "[1][0]"), jet_from_json(j[1][1], path + "[1][1]")};
}

inline MatrixJetCocycle matrix_cocycle_from_json(const json& j, const std::string& path = "$") {
    detail::only_keys(j, {"n", "cover", "entries"}, path);
    int n = detail::int_member(j, "n", path);
    Cover cover = cover_from_json(detail::member(j, "cover", path), path + ".cover");
    const json& entries = detail::member(j, "entries", path);
    if (!entries.is_object()) fail(errc::parse_error, "entries must be an object", path);
    std::map<PairKey, Mat2> out;
    for (const auto& [key, val] : entries.items()) {
        std::string p = path + ".entries." + key;
        out.emplace(detail::pair_key_at(key, p), mat2_from_json(val, p));
    }
    return MatrixJetCocycle(n, std::move(cover), std::move(out));
}

} // namespace ribbon
