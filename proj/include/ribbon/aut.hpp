#pragma once

#include <utility>

#include "jet.hpp"

namespace ribbon {

// Automorphism of A_n over K, n >= 2, determined by the images
//   x |-> x + mu t,   t |-> nu t
// with mu, nu jets of order n-1 and nu a unit. mu t and nu t are computed in
// A_n, so order n-1 is exactly the data that matters.
class Automorphism {
public:
    Automorphism(int n, Jet mu, Jet nu) : n_(n), mu_(std::move(mu)), nu_(std::move(nu)) {
        if (n_ < 2) fail(errc::order_too_small, "automorphism needs n >= 2");
        if (mu_.order() != n_ - 1 || nu_.order() != n_ - 1)
            fail(errc::order_mismatch, "automorphism parameters must have order n-1");
        if (!nu_.is_unit()) fail(errc::non_unit, "nu must be a unit");
    }

    int n() const { return n_; }
    const Jet& mu() const { return mu_; }
    const Jet& nu() const { return nu_; }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.n_ == b.n_ && a.mu_ == b.mu_ && a.nu_ == b.nu_;
    }
    friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }

private:
    int n_;
    Jet mu_, nu_;
};

inline Automorphism identity_aut(int n) {
    if (n < 2) fail(errc::order_too_small, "automorphism needs n >= 2");
    return Automorphism(n, Jet(n - 1), Jet::one(n - 1));
}

namespace detail {

// image of the scalar f under x |-> x + mu t, at order m:
// sum_j (1/j!) f^{(j)} (mu t)^j
inline Jet taylor_image(const Jet& mu, const RatFunc& f, int m) {
    Jet mt = shift_t(extend(truncate(mu, m - 1), m));
    Jet out = Jet::constant(f, m);
    Jet pw = Jet::one(m);
    RatFunc d = f;
    Rat invfact(1);
    for (int j = 1; j < m; ++j) {
        d = d.derivative();
        pw = pw * mt;
        invfact /= j;
        out = out + (RatFunc(invfact) * d) * pw;
    }
    return out;
}

} // namespace detail

// apply f to a jet of order m <= n; parameters are truncated to order m-1,
// which is exactly how the automorphism acts on the quotient A_m
inline Jet apply_mod(const Automorphism& f, const Jet& u, int m) {
    if (m < 0 || m > f.n()) fail(errc::order_mismatch, "application order out of range");
    if (u.order() != m) fail(errc::order_mismatch, "jet order does not match application order");
    if (m == 0) return Jet();
    Jet nt = shift_t(extend(truncate(f.nu(), m - 1), m));
    Jet out(m);
    Jet pw = Jet::one(m);
    for (int k = 0; k < m; ++k) {
        out = out + detail::taylor_image(f.mu(), u.coeff(k), m) * pw;
        pw = pw * nt;
    }
    return out;
}

inline Jet apply(const Automorphism& f, const Jet& u) {
    if (u.order() != f.n()) fail(errc::order_mismatch, "jet order does not match n");
    return apply_mod(f, u, f.n());
}

// g after f: (compose(g, f))(u) = g(f(u))
inline Automorphism compose(const Automorphism& g, const Automorphism& f) {
    if (g.n() != f.n()) fail(errc::order_mismatch, "composition across different n");
    int m = g.n() - 1;
    Jet mu2 = g.mu() + g.nu() * apply_mod(g, f.mu(), m);
    Jet nu2 = g.nu() * apply_mod(g, f.nu(), m);
    return Automorphism(g.n(), mu2, nu2);
}

// unique w of order m with apply_mod(f, w, m) == v, solved by ascending
// powers of t: the r-th coefficient of the image depends on w_0..w_r and the
// dependence on w_r is multiplication by nu_0^r
inline Jet solve(const Automorphism& f, const Jet& v) {
    int m = v.order();
    if (m > f.n()) fail(errc::order_mismatch, "solve order exceeds n");
    const RatFunc& nu0 = f.nu().coeff(0);
    Jet w(m);
    for (int r = 0; r < m; ++r) {
        Jet part = apply_mod(f, w, m);
        w.coeff(r) = (v.coeff(r) - part.coeff(r)) / nu0.pow(static_cast<unsigned>(r));
    }
    return w;
}

inline Automorphism invert(const Automorphism& f) {
    Jet nuinv = invert(f.nu());
    Jet mi = solve(f, -(f.mu() * nuinv));
    Jet ni = solve(f, nuinv);
    return Automorphism(f.n(), mi, ni);
}

// restriction along A_n ->> A_{n-1}
inline Automorphism rho(const Automorphism& f) {
    if (f.n() < 3) fail(errc::order_too_small, "restriction needs n >= 3");
    return Automorphism(f.n() - 1, truncate(f.mu(), f.n() - 2), truncate(f.nu(), f.n() - 2));
}

// the character f |-> nu_0
inline RatFunc xi(const Automorphism& f) { return f.nu().coeff(0); }

// kernel of rho: lambda_{theta,beta} with mu = theta t^{n-2}, nu = 1 + beta t^{n-2}
inline Automorphism kernel_element(int n, const RatFunc& theta, const RatFunc& beta) {
    if (n < 3) fail(errc::order_too_small, "kernel elements need n >= 3");
    Jet mu(n - 1), nu = Jet::one(n - 1);
    mu.coeff(n - 2) = theta;
    nu.coeff(n - 2) = beta;
    return Automorphism(n, mu, nu);
}

// inverse of kernel_element; rejects anything outside ker rho
inline std::pair<RatFunc, RatFunc> kernel_extract(const Automorphism& f) {
    int n = f.n();
    if (n < 3) fail(errc::order_too_small, "kernel elements need n >= 3");
    for (int k = 0; k < n - 2; ++k)
        if (!f.mu().coeff(k).is_zero())
            fail(errc::kernel_membership, "mu is not a multiple of t^(n-2)");
    if (f.nu().coeff(0) != RatFunc(Rat(1)))
        fail(errc::kernel_membership, "nu does not reduce to 1");
    for (int k = 1; k < n - 2; ++k)
        if (!f.nu().coeff(k).is_zero())
            fail(errc::kernel_membership, "nu - 1 is not a multiple of t^(n-2)");
    return {f.mu().coeff(n - 2), f.nu().coeff(n - 2)};
}

// closed form for g . lambda_{theta,beta} . g^{-1}, cross-checked against the
// composition it is supposed to shortcut
inline std::pair<RatFunc, RatFunc> kernel_conjugate(const Automorphism& g, const RatFunc& theta,
                                                    const RatFunc& beta) {
    int n = g.n();
    if (n < 3) fail(errc::order_too_small, "kernel elements need n >= 3");
    RatFunc nu0 = g.nu().coeff(0);
    RatFunc mu0 = g.mu().coeff(0);
    RatFunc c = nu0.pow(static_cast<unsigned>(n - 2));
    RatFunc tp = c * (nu0 * theta - mu0 * beta);
    RatFunc bp = c * beta;
    Automorphism direct = compose(g, compose(kernel_element(n, theta, beta), invert(g)));
    if (direct != kernel_element(n, tp, bp))
        fail(errc::internal_invariant, "kernel conjugation closed form mismatch");
    return {tp, bp};
}

// the two chain rule identities for the action on 1-jets of curves, checked
// at order n-1; returns false on the first mismatch
inline bool partials_check(const Automorphism& f, const Jet& u) {
    int n = f.n();
    if (u.order() != n) fail(errc::order_mismatch, "jet order does not match n");
    Jet fu = apply(f, u);
    Jet fdx = truncate(apply(f, dx(u)), n - 1);
    Jet fdt = apply_mod(f, dt(u), n - 1);
    Jet lhs1 = truncate(dx(fu), n - 1);
    Jet rhs1 = (Jet::one(n - 1) + shift_t(dx(f.mu()))) * fdx + shift_t(dx(f.nu())) * fdt;
    if (lhs1 != rhs1) return false;
    Jet lhs2 = dt(fu);
    Jet rhs2 = (f.mu() + t_dt(f.mu())) * fdx + (f.nu() + t_dt(f.nu())) * fdt;
    return lhs2 == rhs2;
}

} // namespace ribbon
