#pragma once

#include "ratfunc.hpp"

namespace ribbon {

// Element of A_m = K[t]/(t^m): exactly m coefficients in K, ascending powers
// of t. Order 0 (the zero ring) is legal; it appears as the b part of a
// derivation when n = 2.
class Jet {
public:
    Jet() = default;
    explicit Jet(int order) {
        if (order < 0) fail(errc::order_too_small, "negative jet order");
        c_.assign(static_cast<std::size_t>(order), RatFunc());
    }
    Jet(int order, std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
        if (order < 0) fail(errc::order_too_small, "negative jet order");
        if (static_cast<int>(c_.size()) != order)
            fail(errc::order_mismatch, "coefficient count does not match jet order");
    }

    static Jet constant(const RatFunc& v, int order) {
        if (order < 1) fail(errc::order_too_small, "constant jet needs order >= 1");
        Jet u(order);
        u.c_[0] = v;
        return u;
    }
    static Jet one(int order) { return constant(RatFunc(Rat(1)), order); }

    int order() const { return static_cast<int>(c_.size()); }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_unit() const { return order() >= 1 && !c_[0].is_zero(); }

    const RatFunc& coeff(int k) const {
        range_check(k);
        return c_[static_cast<std::size_t>(k)];
    }
    RatFunc& coeff(int k) {
        range_check(k);
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<RatFunc>& coeffs() const { return c_; }

    friend Jet operator+(const Jet& a, const Jet& b) {
        same_order(a, b);
        Jet r = a;
        for (int k = 0; k < r.order(); ++k) r.c_[static_cast<std::size_t>(k)] += b.coeff(k);
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        same_order(a, b);
        Jet r = a;
        for (int k = 0; k < r.order(); ++k) r.c_[static_cast<std::size_t>(k)] -= b.coeff(k);
        return r;
    }
    Jet operator-() const {
        Jet r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        same_order(a, b);
        Jet r(a.order());
        for (int i = 0; i < a.order(); ++i)
            for (int j = 0; j + i < a.order(); ++j)
                r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        return r;
    }
    friend Jet operator*(const RatFunc& s, const Jet& a) {
        Jet r = a;
        for (auto& c : r.c_) c = s * c;
        return r;
    }
    friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

private:
    static void same_order(const Jet& a, const Jet& b) {
        if (a.order() != b.order())
            fail(errc::order_mismatch, "jet orders differ");
    }
    void range_check(int k) const {
        if (k < 0 || k >= order())
            fail(errc::internal_invariant, "jet coefficient index out of range");
    }

    std::vector<RatFunc> c_;
};

// multiplicative inverse in A_m; needs a unit
inline Jet invert(const Jet& u) {
    if (!u.is_unit()) fail(errc::non_unit, "jet is not a unit");
    int m = u.order();
    Jet v(m);
    v.coeff(0) = RatFunc(Rat(1)) / u.coeff(0);
    for (int k = 1; k < m; ++k) {
        RatFunc s;
        for (int i = 1; i <= k; ++i) s += u.coeff(i) * v.coeff(k - i);
        v.coeff(k) = -s / u.coeff(0);
    }
    return v;
}

inline Jet truncate(const Jet& u, int m) {
    if (m < 0 || m > u.order())
        fail(errc::order_mismatch, "truncation order out of range");
    Jet r(m);
    for (int k = 0; k < m; ++k) r.coeff(k) = u.coeff(k);
    return r;
}

inline Jet extend(const Jet& u, int m) {
    if (m < u.order()) fail(errc::order_mismatch, "extension would shrink the jet");
    Jet r(m);
    for (int k = 0; k < u.order(); ++k) r.coeff(k) = u.coeff(k);
    return r;
}

// coefficientwise d/dx, same order
inline Jet dx(const Jet& u) {
    Jet r(u.order());
    for (int k = 0; k < u.order(); ++k) r.coeff(k) = u.coeff(k).derivative();
    return r;
}

// d/dt : A_m -> A_{m-1}
inline Jet dt(const Jet& u) {
    if (u.order() < 2) fail(errc::order_too_small, "d/dt needs order at least 2");
    Jet r(u.order() - 1);
    for (int k = 1; k < u.order(); ++k) r.coeff(k - 1) = RatFunc(Rat(k)) * u.coeff(k);
    return r;
}

// t d/dt, same order (an actual endomorphism of A_m)
inline Jet t_dt(const Jet& u) {
    Jet r(u.order());
    for (int k = 1; k < u.order(); ++k) r.coeff(k) = RatFunc(Rat(k)) * u.coeff(k);
    return r;
}

// multiplication by t^k inside A_m: top coefficients fall off
inline Jet shift_t(const Jet& u, int k = 1) {
    if (k < 0) fail(errc::precondition_violated, "negative t shift");
    Jet r(u.order());
    for (int j = 0; j + k < u.order(); ++j) r.coeff(j + k) = u.coeff(j);
    return r;
}

// exact multiplication by t: A_m -> A_{m+1}, nothing lost
inline Jet times_t(const Jet& u) {
    Jet r(u.order() + 1);
    for (int k = 0; k < u.order(); ++k) r.coeff(k + 1) = u.coeff(k);
    return r;
}

// exact division by t: needs zero constant term
inline Jet div_t(const Jet& u) {
    if (u.order() < 1) fail(errc::order_too_small, "division by t needs order at least 1");
    if (!u.coeff(0).is_zero())
        fail(errc::precondition_violated, "division by t needs zero constant term");
    Jet r(u.order() - 1);
    for (int k = 1; k < u.order(); ++k) r.coeff(k - 1) = u.coeff(k);
    return r;
}

// evaluate f in K at a jet argument (Horner on numerator and denominator)
inline Jet substitute(const RatFunc& f, const Jet& X) {
    if (X.order() < 1) fail(errc::order_too_small, "substitution target has order 0");
    int m = X.order();
    auto horner = [&](const Poly& p) {
        Jet acc(m);
        for (int k = p.degree(); k >= 0; --k)
            acc = acc * X + Jet::constant(RatFunc(p.coeff(k)), m);
        return acc;
    };
    Jet num = horner(f.num());
    Jet den = horner(f.den());
    if (!den.is_unit())
        fail(errc::non_unit, "denominator is not a unit after substitution");
    return num * invert(den);
}

inline std::string jet_to_string(const Jet& u) {
    std::string out;
    for (int k = 0; k < u.order(); ++k) {
        const RatFunc& c = u.coeff(k);
        if (c.is_zero()) continue;
        std::string s = ratfunc_to_string(c);
        std::string tp = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string piece;
        if (k == 0) {
            piece = s;
        } else if (s == "1") {
            piece = tp;
        } else if (s == "-1") {
            piece = "-" + tp;
        } else {
            bool atomic = s.find(' ') == std::string::npos && s.find('/') == std::string::npos;
            piece = (atomic ? s : "(" + s + ")") + "*" + tp;
        }
        if (!out.empty()) out += " + ";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

} // namespace ribbon
