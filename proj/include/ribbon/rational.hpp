#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace ribbon {

// Exact arbitrary-precision rationals. Always normalized by the backend
// (coprime numerator/denominator, positive denominator).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!digits_ok(s)) fail(errc::parse_error, "bad integer literal '" + s + "'");
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_ok(num) || !digits_ok(den)) fail(errc::parse_error, "bad rational literal '" + s + "'");
        Int d(den);
        if (d == 0) fail(errc::division_by_zero, "zero denominator in rational literal '" + s + "'");
        return Rat(Int(num), d);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad rational literal '" + s + "'");
    }
}

} // namespace ribbon
