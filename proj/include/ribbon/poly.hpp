#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ribbon {

// Univariate polynomial over the rationals. Stored as integer coefficients
// over one common positive denominator, with gcd(content, den) = 1 and no
// trailing zero: a unique representation that keeps the inner loops in
// integer arithmetic instead of normalizing a rational per operation.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) {
            c_.push_back(rat_num(c));
            den_ = rat_den(c);
        }
    }

    static Poly from_coeffs(const std::vector<Rat>& rc) {
        Int l = 1;
        for (const Rat& c : rc) {
            Int d = rat_den(c);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        Poly p;
        p.den_ = l;
        p.c_.reserve(rc.size());
        for (const Rat& c : rc) p.c_.push_back(rat_num(c) * (l / rat_den(c)));
        p.normalize();
        return p;
    }

    static Poly x() {
        Poly p;
        p.c_ = {Int(0), Int(1)};
        return p;
    }

    // degree of zero is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
        return Rat(c_[static_cast<std::size_t>(k)], den_);
    }
    std::vector<Rat> coeffs() const {
        std::vector<Rat> out;
        out.reserve(c_.size());
        for (const Int& v : c_) out.emplace_back(v, den_);
        return out;
    }

    Rat leading() const { return is_zero() ? Rat(0) : Rat(c_.back(), den_); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Int g = boost::multiprecision::gcd(a.den_, b.den_);
        Int fa = b.den_ / g, fb = a.den_ / g;
        Poly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i] * fa;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i] * fb;
        r.den_ = a.den_ * fa;
        r.normalize();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Int g = boost::multiprecision::gcd(a.den_, b.den_);
        Int fa = b.den_ / g, fb = a.den_ / g;
        Poly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i] * fa;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i] * fb;
        r.den_ = a.den_ * fa;
        r.normalize();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        if (s == 0 || p.is_zero()) return Poly();
        Poly r = p;
        Int n = rat_num(s);
        for (auto& v : r.c_) v *= n;
        r.den_ *= rat_den(s);
        r.normalize();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.den_ == b.den_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // euclidean division; divisor must be nonzero. Fraction-free inside:
    // lb^s a = q b + r over the integers, unscaled at the end.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
        if (a.c_.size() < b.c_.size()) return {Poly(), a};
        const Int lb = b.c_.back();
        std::vector<Int> R = a.c_;
        std::vector<Int> Q(a.c_.size() - b.c_.size() + 1, Int(0));
        Int scale = 1;
        while (R.size() >= b.c_.size()) {
            Int c = R.back();
            std::size_t off = R.size() - b.c_.size();
            for (auto& v : R) v *= lb;
            for (auto& v : Q) v *= lb;
            Q[off] += c;
            for (std::size_t j = 0; j < b.c_.size(); ++j) R[off + j] -= c * b.c_[j];
            while (!R.empty() && R.back() == 0) R.pop_back();
            scale *= lb;
        }
        Poly q, r;
        q.c_ = std::move(Q);
        for (auto& v : q.c_) v *= b.den_;
        q.den_ = scale * a.den_;
        q.normalize();
        r.c_ = std::move(R);
        r.den_ = scale * a.den_;
        r.normalize();
        return {q, r};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        Poly r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = Int(k) * c_[k];
        r.den_ = den_;
        r.normalize();
        return r;
    }

    Rat eval(const Rat& p) const {
        Rat v(0);
        for (std::size_t k = c_.size(); k-- > 0;) v = v * p + Rat(c_[k]);
        return v / Rat(den_);
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        Poly r;
        r.c_ = c_;
        if (r.c_.back() < 0)
            for (auto& v : r.c_) v = -v;
        r.den_ = boost::multiprecision::abs(c_.back());
        r.normalize();
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r{Rat(1)}, base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.empty()) {
            den_ = 1;
            return;
        }
        Int g = den_;
        for (const Int& v : c_) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) break;
        }
        if (g > 1) {
            for (auto& v : c_) v /= g;
            den_ /= g;
        }
    }

    friend Poly poly_gcd(const Poly& a, const Poly& b);
    friend Poly poly_exact_div(const Poly& a, const Poly& b);

    std::vector<Int> c_;
    Int den_{1};
};

namespace detail {

inline Int int_content(const std::vector<Int>& c) {
    Int g = 0;
    for (const Int& v : c) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

inline void make_primitive(std::vector<Int>& c) {
    Int g = int_content(c);
    if (g > 1)
        for (auto& v : c) v /= g;
    if (!c.empty() && c.back() < 0)
        for (auto& v : c) v = -v;
}

} // namespace detail

namespace detail {

// pseudo-remainder scaled by exactly lb^(deg A - deg B + 1)
inline std::vector<Int> int_prem(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> R = a;
    const Int lb = b.back();
    int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (R.size() >= b.size()) {
        Int c = R.back();
        std::size_t off = R.size() - b.size();
        for (auto& v : R) v *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) R[off + j] -= c * b[j];
        while (!R.empty() && R.back() == 0) R.pop_back();
        --e;
    }
    if (e > 0) {
        Int f = 1;
        for (int i = 0; i < e; ++i) f *= lb;
        for (auto& v : R) v *= f;
    }
    return R;
}

} // namespace detail

// monic gcd over the rationals, by the subresultant remainder sequence over
// the integers: coefficient growth stays linear without content scans
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> A = a.c_, B = b.c_;
    detail::make_primitive(A);
    detail::make_primitive(B);
    if (A.size() < B.size()) std::swap(A, B);
    Int g = 1, h = 1;
    while (true) {
        int d = static_cast<int>(A.size()) - static_cast<int>(B.size());
        std::vector<Int> R = detail::int_prem(A, B);
        if (R.empty()) break;
        A = std::move(B);
        B = std::move(R);
        Int div = g;
        for (int i = 0; i < d; ++i) div *= h;
        for (auto& v : B) v /= div;
        g = A.back();
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            Int num = 1;
            for (int i = 0; i < d; ++i) num *= g;
            Int den = 1;
            for (int i = 0; i < d - 1; ++i) den *= h;
            h = num / den;
        }
    }
    Poly r;
    r.c_ = std::move(B);
    detail::make_primitive(r.c_);
    return r.monic();
}

// quotient of an exact division. By the Gauss lemma the primitive parts
// divide over the integers, so this runs without any denominator scaling;
// the content moves across as a single rational factor.
inline Poly poly_exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (a.is_zero()) return Poly();
    std::vector<Int> A = a.c_, B = b.c_;
    Int ca = detail::int_content(A), cb = detail::int_content(B);
    for (auto& v : A) v /= ca;
    for (auto& v : B) v /= cb;
    std::vector<Int> Q(A.size() >= B.size() ? A.size() - B.size() + 1 : 0, Int(0));
    const Int lb = B.back();
    while (A.size() >= B.size()) {
        if (A.back() % lb != 0) fail(errc::internal_invariant, "inexact polynomial division");
        std::size_t off = A.size() - B.size();
        Int c = A.back() / lb;
        Q[off] = c;
        for (std::size_t j = 0; j < B.size(); ++j) A[off + j] -= c * B[j];
        while (!A.empty() && A.back() == 0) A.pop_back();
    }
    if (!A.empty()) fail(errc::internal_invariant, "inexact polynomial division");
    Poly q;
    q.c_ = std::move(Q);
    for (auto& v : q.c_) v *= ca * b.den_;
    q.den_ = a.den_ * cb;
    q.normalize();
    return q;
}

inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mag = rat_to_string(a);
        if (k == 0) {
            out += mag;
        } else {
            if (a != 1) out += mag + "*";
            out += "x";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace ribbon
