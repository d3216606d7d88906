#pragma once

#include "cover.hpp"
#include "derivation.hpp"

namespace ribbon {

namespace detail {

// an automorphism is a section of the group sheaf over an open when every
// parameter coefficient is regular there and nu_0 is a unit of the
// coordinate ring, i.e. 1/nu_0 is regular there as well
inline bool aut_regular_on(const Automorphism& f, const std::set<Rat>& excluded) {
    for (const RatFunc& c : f.mu().coeffs())
        if (!c.regular_on(excluded)) return false;
    for (const RatFunc& c : f.nu().coeffs())
        if (!c.regular_on(excluded)) return false;
    return (RatFunc(Rat(1)) / f.nu().coeff(0)).regular_on(excluded);
}

} // namespace detail

// 1-cochain with values in G_n: one automorphism per i<j pair, with g_ji
// derived as the inverse and g_ii as the identity. The cocycle condition is
// not assumed; cocycle_verify decides it.
class Cocycle {
public:
    Cocycle(int n, Cover cover, std::map<PairKey, Automorphism> entries)
        : n_(n), cover_(std::move(cover)), entries_(std::move(entries)) {
        if (n_ < 2) fail(errc::order_too_small, "cocycle needs n >= 2");
        for (const auto& [key, g] : entries_) {
            if (!(key.first < key.second))
                fail(errc::cover_mismatch, "entry key not in i<j order");
            if (!cover_.has(key.first) || !cover_.has(key.second))
                fail(errc::cover_mismatch, "entry on opens outside the cover");
            if (g.n() != n_) fail(errc::order_mismatch, "entry order does not match n");
        }
        for (const PairKey& key : cover_pairs(cover_))
            if (entries_.count(key) == 0)
                fail(errc::cover_mismatch, "missing entry for pair " + key.first + "|" + key.second);
    }

    int n() const { return n_; }
    const Cover& cover() const { return cover_; }
    const std::map<PairKey, Automorphism>& entries() const { return entries_; }

    // g_ij for arbitrary distinct labels; the j<i direction is the inverse
    Automorphism entry(const std::string& i, const std::string& j) const {
        if (i == j) return identity_aut(n_);
        const Automorphism& g = entries_.at(make_pair_key(i, j));
        return i < j ? g : invert(g);
    }

private:
    int n_;
    Cover cover_;
    std::map<PairKey, Automorphism> entries_;
};

// 0-cochain: one automorphism per open
class Cochain0 {
public:
    Cochain0(Cover cover, std::map<std::string, Automorphism> entries)
        : cover_(std::move(cover)), entries_(std::move(entries)) {
        for (const auto& [label, g] : entries_) {
            (void)g;
            if (!cover_.has(label)) fail(errc::cover_mismatch, "entry on an open outside the cover");
        }
        for (const std::string& label : cover_.labels())
            if (entries_.count(label) == 0)
                fail(errc::cover_mismatch, "missing entry for open " + label);
    }

    const Cover& cover() const { return cover_; }
    const std::map<std::string, Automorphism>& entries() const { return entries_; }
    const Automorphism& entry(const std::string& i) const { return entries_.at(i); }

private:
    Cover cover_;
    std::map<std::string, Automorphism> entries_;
};

// class in the kernel sheaf of rho: a pair (theta, beta) per i<j pair. The
// cover is supplied by whichever cocycle the class is used with.
class KernelClass {
public:
    KernelClass(int n, std::map<PairKey, std::pair<RatFunc, RatFunc>> entries)
        : n_(n), entries_(std::move(entries)) {
        if (n_ < 3) fail(errc::order_too_small, "kernel classes need n >= 3");
        for (const auto& [key, v] : entries_) {
            (void)v;
            if (!(key.first < key.second))
                fail(errc::cover_mismatch, "entry key not in i<j order");
        }
    }

    int n() const { return n_; }
    const std::map<PairKey, std::pair<RatFunc, RatFunc>>& entries() const { return entries_; }

private:
    int n_;
    std::map<PairKey, std::pair<RatFunc, RatFunc>> entries_;
};

// multiplicative cocycle with values in K^*, the Picard-side data
class LineCocycle {
public:
    LineCocycle(Cover cover, std::map<PairKey, RatFunc> entries)
        : cover_(std::move(cover)), entries_(std::move(entries)) {
        for (const auto& [key, s] : entries_) {
            if (!(key.first < key.second))
                fail(errc::cover_mismatch, "entry key not in i<j order");
            if (!cover_.has(key.first) || !cover_.has(key.second))
                fail(errc::cover_mismatch, "entry on opens outside the cover");
            if (s.is_zero()) fail(errc::non_unit, "line cocycle entry is zero");
        }
        for (const PairKey& key : cover_pairs(cover_))
            if (entries_.count(key) == 0)
                fail(errc::cover_mismatch, "missing entry for pair " + key.first + "|" + key.second);
    }

    const Cover& cover() const { return cover_; }
    const std::map<PairKey, RatFunc>& entries() const { return entries_; }

private:
    Cover cover_;
    std::map<PairKey, RatFunc> entries_;
};

struct TripleFailure {
    std::array<std::string, 3> triple;
    Automorphism residual;
};

struct VerifyReport {
    bool pass = true;
    std::vector<TripleFailure> failures;
    std::vector<PairKey> irregular;
};

// decide the cocycle condition g_ij g_jk = g_ik on every triple, and check
// that every entry is a genuine section over its intersection
inline VerifyReport cocycle_verify(const Cocycle& c) {
    VerifyReport rep;
    for (const auto& [key, g] : c.entries())
        if (!detail::aut_regular_on(g, c.cover().pair_excluded(key.first, key.second)))
            rep.irregular.push_back(key);
    for (const auto& tr : cover_triples(c.cover())) {
        Automorphism residual =
            compose(invert(c.entry(tr[0], tr[2])),
                    compose(c.entry(tr[0], tr[1]), c.entry(tr[1], tr[2])));
        if (residual != identity_aut(c.n())) rep.failures.push_back({tr, residual});
    }
    rep.pass = rep.failures.empty() && rep.irregular.empty();
    return rep;
}

// g'_ij = h_i g_ij h_j^{-1}
inline Cocycle cocycle_twist(const Cocycle& c, const Cochain0& h) {
    if (c.cover() != h.cover()) fail(errc::cover_mismatch, "twist across different covers");
    for (const auto& [label, g] : h.entries()) {
        if (g.n() != c.n()) fail(errc::order_mismatch, "cochain order does not match cocycle");
        if (!detail::aut_regular_on(g, c.cover().excluded(label)))
            fail(errc::regularity_violation, "cochain entry irregular on " + label);
    }
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, g] : c.entries()) {
        Automorphism tw = compose(h.entry(key.first), compose(g, invert(h.entry(key.second))));
        if (!detail::aut_regular_on(tw, c.cover().pair_excluded(key.first, key.second)))
            fail(errc::regularity_violation,
                 "twisted entry irregular on " + key.first + "|" + key.second);
        out.emplace(key, tw);
    }
    return Cocycle(c.n(), c.cover(), std::move(out));
}

// e_n(L): the image of a line cocycle under s |-> phi_{0,s}
inline Cocycle trivial_cocycle(const LineCocycle& L, int n) {
    if (n < 2) fail(errc::order_too_small, "cocycle needs n >= 2");
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, s] : L.entries())
        out.emplace(key, Automorphism(n, Jet(n - 1), Jet::constant(s, n - 1)));
    return Cocycle(n, L.cover(), std::move(out));
}

inline LineCocycle cocycle_xi(const Cocycle& c) {
    std::map<PairKey, RatFunc> out;
    for (const auto& [key, g] : c.entries()) out.emplace(key, xi(g));
    return LineCocycle(c.cover(), std::move(out));
}

inline Cocycle cocycle_rho(const Cocycle& c) {
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, g] : c.entries()) out.emplace(key, rho(g));
    return Cocycle(c.n() - 1, c.cover(), std::move(out));
}

inline std::map<PairKey, Automorphism> kernel_embed(const KernelClass& u) {
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, tb] : u.entries())
        out.emplace(key, kernel_element(u.n(), tb.first, tb.second));
    return out;
}

namespace detail {

inline void require_same_shape(const Cocycle& g, const KernelClass& u) {
    if (u.n() != g.n()) fail(errc::order_mismatch, "kernel class order does not match cocycle");
    std::vector<PairKey> pairs = cover_pairs(g.cover());
    if (u.entries().size() != pairs.size())
        fail(errc::cover_mismatch, "kernel class does not match the cover's pairs");
    for (const PairKey& key : pairs) {
        auto it = u.entries().find(key);
        if (it == u.entries().end())
            fail(errc::cover_mismatch, "kernel class missing pair " + key.first + "|" + key.second);
        std::set<Rat> excl = g.cover().pair_excluded(key.first, key.second);
        if (!it->second.first.regular_on(excl) || !it->second.second.regular_on(excl))
            fail(errc::regularity_violation,
                 "kernel entry irregular on " + key.first + "|" + key.second);
    }
}

} // namespace detail

// the lift g-bar_ij = lambda_{theta_ij beta_ij} . g_ij, together with the
// verification report of the result: the lift is a cocycle exactly when u
// satisfies the twisted cocycle condition
inline std::pair<Cocycle, VerifyReport> cocycle_lift(const Cocycle& g, const KernelClass& u) {
    detail::require_same_shape(g, u);
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, gij] : g.entries()) {
        const auto& tb = u.entries().at(key);
        out.emplace(key, compose(kernel_element(g.n(), tb.first, tb.second), gij));
    }
    Cocycle lifted(g.n(), g.cover(), std::move(out));
    VerifyReport rep = cocycle_verify(lifted);
    return {lifted, rep};
}

struct ObstructionEntry {
    Automorphism gamma;
    RatFunc theta, beta;
};

// gamma_ijk = g_ij g_jk g_ki for a family of lifts whose rho-images form a
// cocycle; each gamma lies in ker rho and is returned with its coordinates
inline std::map<std::array<std::string, 3>, ObstructionEntry> obstruction(const Cocycle& c) {
    if (c.n() < 3) fail(errc::order_too_small, "obstruction needs n >= 3");
    if (!cocycle_verify(cocycle_rho(c)).pass)
        fail(errc::precondition_violated, "rho-images do not form a cocycle");
    std::map<std::array<std::string, 3>, ObstructionEntry> out;
    for (const auto& tr : cover_triples(c.cover())) {
        Automorphism gamma =
            compose(c.entry(tr[0], tr[1]), compose(c.entry(tr[1], tr[2]), c.entry(tr[2], tr[0])));
        std::pair<RatFunc, RatFunc> tb;
        try {
            tb = kernel_extract(gamma);
        } catch (const error&) {
            fail(errc::internal_invariant, "obstruction entry escaped the kernel");
        }
        out.emplace(tr, ObstructionEntry{gamma, tb.first, tb.second});
    }
    return out;
}

// elementary modification at a point P seen by exactly one open: compose the
// i0 row with A = phi_{mu,(x-P)^q nu}
inline Cocycle blowup(const Cocycle& c, const std::string& i0, const Rat& P, int q, const Jet& mu,
                      const Jet& nu) {
    if (!c.cover().has(i0)) fail(errc::cover_mismatch, "unknown open '" + i0 + "'");
    if (q < 1) fail(errc::precondition_violated, "q must be positive");
    if (!c.cover().contains_point(i0, P))
        fail(errc::point_position, "P must lie in the blown-up open");
    for (const std::string& j : c.cover().labels())
        if (j != i0 && c.cover().contains_point(j, P))
            fail(errc::point_position, "P must be excluded from every other open");
    RatFunc factor = (RatFunc::x() - RatFunc(P)).pow(static_cast<unsigned>(q));
    Automorphism A(c.n(), mu, factor * nu);
    Automorphism Ainv = invert(A);
    std::map<PairKey, Automorphism> out;
    for (const auto& [key, g] : c.entries()) {
        if (key.first == i0)
            out.emplace(key, compose(A, g));
        else if (key.second == i0)
            out.emplace(key, compose(g, Ainv));
        else
            out.emplace(key, g);
    }
    return Cocycle(c.n(), c.cover(), std::move(out));
}

// conjugation chi = A psi A^{-1} with A = phi_{mu,(x-P)^q nu}: when psi is
// regular at P and mu vanishes at P, so is chi. The vanishing of mu is what
// keeps (1 + mu t/(x-P))^q regular, which the factorization
// A = phi_{mu,nu'} . phi_{0,(x-P)^q} rests on; without it the conjugate
// genuinely acquires poles at P. Under these hypotheses the regularity of
// the output is a theorem, so a failure there is an internal defect, not an
// input error.
inline Automorphism conj_regular(const Rat& P, int q, const Jet& mu, const Jet& nu,
                                 const Automorphism& psi) {
    if (q < 1) fail(errc::precondition_violated, "q must be positive");
    auto regular_at = [&](const Jet& u) {
        for (const RatFunc& c : u.coeffs())
            if (!(c.is_zero() || c.order_at(P) >= 0)) return false;
        return true;
    };
    if (!regular_at(psi.mu()) || !regular_at(psi.nu()))
        fail(errc::precondition_violated, "psi is not regular at P");
    if (psi.nu().coeff(0).order_at(P) != 0)
        fail(errc::precondition_violated, "xi(psi) is not a unit at P");
    if (!regular_at(mu) || !regular_at(nu))
        fail(errc::precondition_violated, "A parameters are not regular at P");
    for (const RatFunc& c : mu.coeffs())
        if (!(c.is_zero() || c.order_at(P) >= 1))
            fail(errc::precondition_violated, "mu must vanish at P");
    if (nu.coeff(0).order_at(P) != 0)
        fail(errc::precondition_violated, "nu is not a unit at P");
    RatFunc factor = (RatFunc::x() - RatFunc(P)).pow(static_cast<unsigned>(q));
    Automorphism A(psi.n(), mu, factor * nu);
    Automorphism chi = compose(A, compose(psi, invert(A)));
    if (!regular_at(chi.mu()) || !regular_at(chi.nu()) || chi.nu().coeff(0).order_at(P) != 0)
        fail(errc::internal_invariant, "conjugate lost regularity at P");
    return chi;
}

// action of a global family psi (constant character delta) on kernel
// classes over the cocycle g
inline KernelClass h1_action(const Cochain0& psi, const Cocycle& g, const KernelClass& u) {
    if (psi.cover() != g.cover()) fail(errc::cover_mismatch, "cochain cover does not match");
    detail::require_same_shape(g, u);
    int n = g.n();
    const RatFunc* delta = nullptr;
    for (const auto& [label, p] : psi.entries()) {
        (void)label;
        if (p.n() != n) fail(errc::order_mismatch, "cochain order does not match");
        if (delta == nullptr)
            delta = &p.nu().coeff(0);
        else if (xi(p) != *delta)
            fail(errc::precondition_violated, "character values of psi differ");
    }
    if (!delta->is_constant())
        fail(errc::precondition_violated, "character of psi is not constant");
    RatFunc d = *delta;
    RatFunc dn1 = d.pow(static_cast<unsigned>(n - 1));
    RatFunc dn2 = d.pow(static_cast<unsigned>(n - 2));
    std::map<PairKey, std::pair<RatFunc, RatFunc>> out;
    for (const auto& [key, gij] : g.entries()) {
        const Automorphism& pi = psi.entry(key.first);
        const Automorphism& pj = psi.entry(key.second);
        Automorphism comm = compose(pi, compose(gij, compose(invert(pj), invert(gij))));
        std::pair<RatFunc, RatFunc> vw = kernel_extract(comm);
        const auto& tb = u.entries().at(key);
        RatFunc theta2 = dn1 * tb.first - pi.mu().coeff(0) * dn2 * tb.second + vw.first;
        RatFunc beta2 = dn2 * tb.second + vw.second;
        Automorphism direct =
            compose(pi, compose(kernel_element(n, tb.first, tb.second),
                                compose(gij, compose(invert(pj), invert(gij)))));
        if (direct != kernel_element(n, theta2, beta2))
            fail(errc::internal_invariant, "action formula disagrees with the composite");
        out.emplace(key, std::pair<RatFunc, RatFunc>{theta2, beta2});
    }
    return KernelClass(n, std::move(out));
}

// the group law on the nu-parameters of the mu = 0 subgroup:
// (nu' * nu)(t) = nu(x, nu' t) nu'
inline Jet split_law(const Jet& nup, const Jet& nu) {
    if (nup.order() != nu.order()) fail(errc::order_mismatch, "jet orders differ");
    if (!nup.is_unit() || !nu.is_unit()) fail(errc::non_unit, "split law needs unit jets");
    int m = nu.order();
    Jet nt = shift_t(nup);
    Jet out(m);
    Jet pw = Jet::one(m);
    for (int k = 0; k < m; ++k) {
        out = out + nu.coeff(k) * pw;
        pw = pw * nt;
    }
    return out * nup;
}

} // namespace ribbon
