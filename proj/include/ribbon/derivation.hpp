#pragma once

#include "aut.hpp"

namespace ribbon {

// Derivation D = a t d/dx + b t^2 d/dt of A_n, the Lie algebra side of the
// unipotent part of the automorphism group. a has order n-1 and b order n-2;
// at n = 2 the b part is the empty jet.
class Derivation {
public:
    Derivation(int n, Jet a, Jet b) : n_(n), a_(std::move(a)), b_(std::move(b)) {
        if (n_ < 2) fail(errc::order_too_small, "derivation needs n >= 2");
        if (a_.order() != n_ - 1) fail(errc::order_mismatch, "a must have order n-1");
        if (b_.order() != n_ - 2) fail(errc::order_mismatch, "b must have order n-2");
    }

    int n() const { return n_; }
    const Jet& a() const { return a_; }
    const Jet& b() const { return b_; }

    friend bool operator==(const Derivation& p, const Derivation& q) {
        return p.n_ == q.n_ && p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend bool operator!=(const Derivation& p, const Derivation& q) { return !(p == q); }

private:
    int n_;
    Jet a_, b_;
};

inline Jet der_apply(const Derivation& D, const Jet& u) {
    int n = D.n();
    if (u.order() != n) fail(errc::order_mismatch, "jet order does not match n");
    Jet ah = extend(D.a(), n);
    Jet bh = extend(D.b(), n);
    return ah * shift_t(dx(u)) + bh * shift_t(t_dt(u));
}

// exp(D), computed from its action on the generators x and t; D is nilpotent
// so the series stops at k = n-1
inline Automorphism der_exp(const Derivation& D) {
    int n = D.n();
    Jet xj = Jet::constant(RatFunc::x(), n);
    Jet tj(n);
    tj.coeff(1) = RatFunc(Rat(1));
    Jet sx(n), st(n);
    Jet vx = xj, vt = tj;
    Rat invfact(1);
    for (int k = 1; k < n; ++k) {
        vx = der_apply(D, vx);
        vt = der_apply(D, vt);
        invfact /= k;
        sx = sx + RatFunc(invfact) * vx;
        st = st + RatFunc(invfact) * vt;
    }
    return Automorphism(n, div_t(sx), Jet::one(n - 1) + div_t(st));
}

// inverse of der_exp on the subgroup nu_0 = 1, by matching coefficients one
// t power at a time; the 1/2 correction is the first BCH term showing up in
// the mixed mu coefficient
inline Derivation der_log(const Automorphism& f) {
    int n = f.n();
    if (xi(f) != RatFunc(Rat(1)))
        fail(errc::character_not_one, "logarithm needs xi(f) = 1");
    Jet a(n - 1), b(n - 2);
    a.coeff(0) = f.mu().coeff(0);
    for (int m = 1; m < n - 1; ++m) {
        Automorphism E = der_exp(Derivation(n, a, b));
        b.coeff(m - 1) = f.nu().coeff(m) - E.nu().coeff(m);
        a.coeff(m) = f.mu().coeff(m) - E.mu().coeff(m) -
                     RatFunc(Rat(1, 2)) * a.coeff(0) * b.coeff(m - 1);
    }
    Derivation D(n, a, b);
    if (der_exp(D) != f) fail(errc::internal_invariant, "logarithm does not exponentiate back");
    return D;
}

// Baker-Campbell-Hausdorff product: star(D1, D2) = log(exp(D1) exp(D2))
inline Derivation der_star(const Derivation& D1, const Derivation& D2) {
    if (D1.n() != D2.n()) fail(errc::order_mismatch, "star across different n");
    return der_log(compose(der_exp(D1), der_exp(D2)));
}

// automorphism generated by the vector field a d/dx transported along
// x |-> x + mu t: psi = phi_{gamma, nu} with
//   gamma = mu sum_k 1/(k+1)! D^k(a) (mu t)^k,  D = a d/dx on K
inline Automorphism der_rebase(const RatFunc& a, const Jet& mu, const Jet& nu) {
    if (mu.order() != nu.order()) fail(errc::order_mismatch, "mu and nu orders differ");
    int m = mu.order();
    if (m < 1) fail(errc::order_too_small, "rebase needs n >= 2");
    Jet mt = shift_t(extend(truncate(mu, m - 1), m));
    Jet out(m);
    Jet pw = Jet::one(m);
    RatFunc dka = a;
    Rat invfact(1);
    for (int k = 0; k < m; ++k) {
        if (k > 0) {
            dka = a * dka.derivative();
            pw = pw * mt;
            invfact /= (k + 1);
        }
        out = out + (RatFunc(invfact) * dka) * pw;
    }
    return Automorphism(m + 1, mu * out, nu);
}

} // namespace ribbon
