#pragma once

#include <set>
#include <string>

#include "poly.hpp"

namespace ribbon {

// Rational function num/den over the rationals, kept canonical: coprime,
// monic denominator, and zero stored as 0/1. This is the base field K of
// every ring in the library.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly(Rat(1))) {}
    RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly(Rat(1))) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly(Rat(1))) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::division_by_zero, "zero denominator");
        canonicalize();
    }

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // sums and products keep operands reduced, so cancellation happens on the
    // small cross gcds instead of the full products
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_constant()) {
            Poly t = a.num_ * b.den_ + b.num_ * a.den_;
            if (t.is_zero()) return RatFunc();
            return raw(std::move(t), a.den_ * b.den_);
        }
        Poly ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
        Poly t = a.num_ * bd + b.num_ * ad;
        if (t.is_zero()) return RatFunc();
        Poly h = poly_gcd(t, g);
        if (h.is_constant()) return raw(std::move(t), ad * b.den_);
        return raw(exact_div(t, h), ad * exact_div(b.den_, h));
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        return raw(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                   exact_div(a.den_, g2) * exact_div(b.den_, g1));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) fail(errc::division_by_zero, "division by zero in K");
        return a * raw(b.den_, b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        // quotient rule, pre-cancelled by gcd(t, den) so the constructor only
        // sees what little is left to reduce
        Poly t = num_.derivative() * den_ - num_ * den_.derivative();
        if (t.is_zero()) return RatFunc();
        Poly e = poly_gcd(t, den_);
        if (e.is_constant()) return RatFunc(std::move(t), den_ * den_);
        return RatFunc(exact_div(t, e), exact_div(den_, e) * den_);
    }

    RatFunc pow(unsigned e) const {
        // reduced fractions stay reduced under powers
        RatFunc r;
        r.num_ = num_.pow(e);
        r.den_ = den_.pow(e);
        return r;
    }

    // order of vanishing at x = p: multiplicity in num minus multiplicity in
    // den. Requires a nonzero function.
    int order_at(const Rat& p) const {
        if (is_zero())
            fail(errc::precondition_violated, "order of the zero function is undefined");
        return root_mult(num_, p) - root_mult(den_, p);
    }

    bool regular_at(const Rat& p) const { return is_zero() || order_at(p) >= 0; }

    bool regular_on(const std::set<Rat>& excluded) const {
        if (is_zero()) return true;
        // strip the excluded linear factors from the reduced denominator;
        // whatever is left is a pole somewhere in the open (possibly at a
        // non-rational point, which the excluded set can never cover)
        Poly d = den_;
        for (const Rat& p : excluded) {
            Poly lin = Poly::x() - Poly(p);
            for (;;) {
                auto [q, r] = divmod(d, lin);
                if (!r.is_zero()) break;
                d = q;
            }
        }
        return d.is_constant();
    }

    Rat eval(const Rat& p) const {
        Rat d = den_.eval(p);
        if (d == 0) fail(errc::division_by_zero, "evaluation at a pole");
        return num_.eval(p) / d;
    }

private:
    // caller guarantees coprime parts and a nonzero denominator
    static RatFunc raw(Poly num, Poly den) {
        RatFunc r;
        if (num.is_zero()) return r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        Rat lead = r.den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            r.num_ = inv * r.num_;
            r.den_ = inv * r.den_;
        }
        return r;
    }

    static Poly exact_div(const Poly& a, const Poly& b) { return poly_exact_div(a, b); }

    static int root_mult(const Poly& f, const Rat& p) {
        Poly lin = Poly::x() - Poly(p);
        Poly g = f;
        int m = 0;
        for (;;) {
            auto [q, r] = divmod(g, lin);
            if (!r.is_zero()) break;
            g = q;
            ++m;
        }
        return m;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_, den_;
};

inline std::string ratfunc_to_string(const RatFunc& f) {
    if (f.is_polynomial()) return poly_to_string(f.num());
    return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

} // namespace ribbon
