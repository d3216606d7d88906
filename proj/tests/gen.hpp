#pragma once

// deterministic random data for the property tests; everything small enough
// that exact arithmetic stays fast

#include <cstdint>
#include <random>

#include "ribbon/ribbon.hpp"

namespace gen {

using namespace ribbon;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng_);
    }
    bool flip() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 eng_;
};

inline Rat rat(Rng& rng, int span = 9, int maxden = 4) {
    return Rat(rng.uniform(-span, span), rng.uniform(1, maxden));
}

inline Rat rat_nonzero(Rng& rng, int span = 9, int maxden = 4) {
    Rat r = rat(rng, span, maxden);
    return r == 0 ? Rat(1) : r;
}

inline Poly poly(Rng& rng, int maxdeg = 2) {
    int deg = rng.uniform(0, maxdeg);
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = rat(rng, 4, 3);
    return Poly::from_coeffs(std::move(c));
}

inline Poly poly_nonzero(Rng& rng, int maxdeg = 2) {
    Poly p = poly(rng, maxdeg);
    return p.is_zero() ? Poly(Rat(1)) : p;
}

inline RatFunc ratfunc(Rng& rng, int maxdeg = 2) {
    return RatFunc(poly(rng, maxdeg), poly_nonzero(rng, 1));
}

inline RatFunc ratfunc_nonzero(Rng& rng, int maxdeg = 2) {
    RatFunc f = ratfunc(rng, maxdeg);
    return f.is_zero() ? RatFunc(Rat(1)) : f;
}

inline Jet jet(Rng& rng, int order, int maxdeg = 2) {
    std::vector<RatFunc> c(static_cast<std::size_t>(order));
    for (auto& v : c) v = ratfunc(rng, maxdeg);
    return Jet(order, std::move(c));
}

inline Jet unit_jet(Rng& rng, int order, int maxdeg = 2) {
    Jet u = jet(rng, order, maxdeg);
    if (u.coeff(0).is_zero()) u.coeff(0) = ratfunc_nonzero(rng, maxdeg);
    return u;
}

inline Automorphism aut(Rng& rng, int n, int maxdeg = 2) {
    return Automorphism(n, jet(rng, n - 1, maxdeg), unit_jet(rng, n - 1, maxdeg));
}

inline Derivation der(Rng& rng, int n, int maxdeg = 2) {
    return Derivation(n, jet(rng, n - 1, maxdeg), jet(rng, n - 2, maxdeg));
}

// rational function regular on the complement of `excluded`: a polynomial
// plus pole terms located inside the excluded set
inline RatFunc regular_on(Rng& rng, const std::set<Rat>& excluded, int maxdeg = 2) {
    RatFunc f(poly(rng, maxdeg));
    for (const Rat& p : excluded) {
        if (!rng.flip()) continue;
        Poly lin = Poly::x() - Poly(p);
        f += RatFunc(Poly(rat(rng, 3, 2)), lin.pow(static_cast<unsigned>(rng.uniform(1, 2))));
    }
    return f;
}

// unit of the coordinate ring of the open: c (x-p1)^e1 (x-p2)^e2 ...
inline RatFunc unit_on(Rng& rng, const std::set<Rat>& excluded) {
    Poly num(rat_nonzero(rng, 5, 2));
    Poly den(Rat(1));
    for (const Rat& p : excluded) {
        if (!rng.flip()) continue;
        Poly f = (Poly::x() - Poly(p)).pow(static_cast<unsigned>(rng.uniform(1, 2)));
        if (rng.flip())
            num = num * f;
        else
            den = den * f;
    }
    return RatFunc(num, den);
}

// jet with coefficients regular on the open
inline Jet regular_jet(Rng& rng, const std::set<Rat>& excluded, int order) {
    std::vector<RatFunc> c(static_cast<std::size_t>(order));
    for (auto& v : c) v = regular_on(rng, excluded);
    return Jet(order, std::move(c));
}

// automorphism that is a section of G_n over the open: coefficients regular,
// nu_0 a unit there
inline Automorphism section_on(Rng& rng, const std::set<Rat>& excluded, int n) {
    Jet mu = regular_jet(rng, excluded, n - 1);
    Jet nu = regular_jet(rng, excluded, n - 1);
    nu.coeff(0) = unit_on(rng, excluded);
    return Automorphism(n, mu, nu);
}

inline Cover cover3(int a = 0, int b = 1, int c = 2) {
    return Cover({{"U0", {Rat(a)}}, {"U1", {Rat(b)}}, {"U2", {Rat(c)}}});
}

inline Cover cover2() { return Cover({{"U0", {Rat(0)}}, {"U1", {Rat(1)}}}); }

// multiplicative coboundary s_ij = f_i / f_j with f_i a unit on U_i
inline LineCocycle line_cocycle(Rng& rng, const Cover& cov) {
    std::map<std::string, RatFunc> f;
    for (const std::string& label : cov.labels()) f.emplace(label, unit_on(rng, cov.excluded(label)));
    std::map<PairKey, RatFunc> entries;
    for (const PairKey& key : cover_pairs(cov))
        entries.emplace(key, f.at(key.first) / f.at(key.second));
    return LineCocycle(cov, std::move(entries));
}

inline Cochain0 cochain(Rng& rng, const Cover& cov, int n) {
    std::map<std::string, Automorphism> entries;
    for (const std::string& label : cov.labels())
        entries.emplace(label, section_on(rng, cov.excluded(label), n));
    return Cochain0(cov, std::move(entries));
}

// random genuine cocycle: a coboundary twist of e_n(L)
inline Cocycle cocycle(Rng& rng, const Cover& cov, int n) {
    Cocycle base = trivial_cocycle(line_cocycle(rng, cov), n);
    return cocycle_twist(base, cochain(rng, cov, n));
}

// kernel class satisfying the twisted cocycle condition: the coboundary of a
// kernel-valued 0-cochain transported onto g
inline KernelClass liftable_kernel_class(Rng& rng, const Cocycle& g) {
    int n = g.n();
    std::map<std::string, Automorphism> kappa;
    for (const std::string& label : g.cover().labels()) {
        const std::set<Rat>& excl = g.cover().excluded(label);
        kappa.emplace(label, kernel_element(n, regular_on(rng, excl), regular_on(rng, excl)));
    }
    std::map<PairKey, std::pair<RatFunc, RatFunc>> entries;
    for (const auto& [key, gij] : g.entries()) {
        Automorphism lifted =
            compose(kappa.at(key.first), compose(gij, invert(kappa.at(key.second))));
        entries.emplace(key, kernel_extract(compose(lifted, invert(gij))));
    }
    return KernelClass(n, std::move(entries));
}

// arbitrary kernel class, no cocycle condition intended
inline KernelClass kernel_class(Rng& rng, const Cocycle& g) {
    std::map<PairKey, std::pair<RatFunc, RatFunc>> entries;
    for (const PairKey& key : cover_pairs(g.cover())) {
        std::set<Rat> excl = g.cover().pair_excluded(key.first, key.second);
        entries.emplace(key,
                        std::pair<RatFunc, RatFunc>{regular_on(rng, excl), regular_on(rng, excl)});
    }
    return KernelClass(g.n(), std::move(entries));
}

} // namespace gen
