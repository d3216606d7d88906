#pragma once

#include "cocycle.hpp"

namespace ribbon {

// 2x2 matrix of jets, row-major, basis order (d/dx, t d/dt) throughout
struct Mat2 {
    Jet m00, m01, m10, m11;

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
    }
    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
    }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }
};

inline Mat2 mat2_identity(int order) {
    return {Jet::one(order), Jet(order), Jet(order), Jet::one(order)};
}

inline Jet mat2_det(const Mat2& m) { return m.m00 * m.m11 - m.m01 * m.m10; }

inline Mat2 mat2_invert(const Mat2& m) {
    Jet d = mat2_det(m);
    if (!d.is_unit()) fail(errc::non_unit, "matrix determinant is not a unit");
    Jet di = invert(d);
    return {di * m.m11, -(di * m.m01), -(di * m.m10), di * m.m00};
}

// transition matrices of a rank-2 jet bundle over a cover
class MatrixJetCocycle {
public:
    MatrixJetCocycle(int order, Cover cover, std::map<PairKey, Mat2> entries)
        : order_(order), cover_(std::move(cover)), entries_(std::move(entries)) {
        if (order_ < 1) fail(errc::order_too_small, "matrix entries need order >= 1");
        for (const auto& [key, m] : entries_) {
            if (!(key.first < key.second))
                fail(errc::cover_mismatch, "entry key not in i<j order");
            if (!cover_.has(key.first) || !cover_.has(key.second))
                fail(errc::cover_mismatch, "entry on opens outside the cover");
            if (m.m00.order() != order_ || m.m01.order() != order_ || m.m10.order() != order_ ||
                m.m11.order() != order_)
                fail(errc::order_mismatch, "matrix entry order does not match");
        }
        for (const PairKey& key : cover_pairs(cover_))
            if (entries_.count(key) == 0)
                fail(errc::cover_mismatch, "missing entry for pair " + key.first + "|" + key.second);
    }

    int order() const { return order_; }
    const Cover& cover() const { return cover_; }
    const std::map<PairKey, Mat2>& entries() const { return entries_; }

    Mat2 entry(const std::string& i, const std::string& j) const {
        if (i == j) return mat2_identity(order_);
        const Mat2& m = entries_.at(make_pair_key(i, j));
        return i < j ? m : mat2_invert(m);
    }

private:
    int order_;
    Cover cover_;
    std::map<PairKey, Mat2> entries_;
};

struct MatrixTripleFailure {
    std::array<std::string, 3> triple;
    Mat2 residual;
};

struct MatrixVerifyReport {
    bool pass = true;
    std::vector<MatrixTripleFailure> failures;
    std::vector<PairKey> singular;
};

inline MatrixVerifyReport matrix_cocycle_verify(const MatrixJetCocycle& M) {
    MatrixVerifyReport rep;
    for (const auto& [key, m] : M.entries())
        if (!mat2_det(m).is_unit()) rep.singular.push_back(key);
    if (rep.singular.empty()) {
        Mat2 id = mat2_identity(M.order());
        for (const auto& tr : cover_triples(M.cover())) {
            Mat2 residual =
                mat2_invert(M.entry(tr[0], tr[2])) * (M.entry(tr[0], tr[1]) * M.entry(tr[1], tr[2]));
            if (residual != id) rep.failures.push_back({tr, residual});
        }
    }
    rep.pass = rep.failures.empty() && rep.singular.empty();
    return rep;
}

// transition matrices of T_C + O_C twisted by a G_2 cocycle:
// ((nu^{n-1}, -nu^{n-2} mu), (0, nu^{n-2})), function-valued
inline MatrixJetCocycle e2_matrix_cocycle(const Cocycle& c, int n) {
    if (c.n() != 2) fail(errc::order_mismatch, "base cocycle must live in G_2");
    if (n < 3) fail(errc::order_too_small, "target order must be at least 3");
    std::map<PairKey, Mat2> out;
    for (const auto& [key, g] : c.entries()) {
        RatFunc mu = g.mu().coeff(0);
        RatFunc nu = g.nu().coeff(0);
        RatFunc p2 = nu.pow(static_cast<unsigned>(n - 2));
        out.emplace(key, Mat2{Jet::constant(p2 * nu, 1), Jet::constant(-(p2 * mu), 1), Jet(1),
                              Jet::constant(p2, 1)});
    }
    return MatrixJetCocycle(1, c.cover(), std::move(out));
}

// matrix of Delta(D) = g . D . g^{-1} on (d/dx, t d/dt), columns = images.
// The d/dx row carries jets of order n, the t d/dt row jets of order n-1,
// matching what the two coordinates of a derivation determine.
inline Mat2 delta_matrix(const Automorphism& g) {
    int n = g.n();
    Automorphism gi = invert(g);
    const Jet& mup = gi.mu();
    const Jet& nup = gi.nu();
    // jet_dt of an order-1 jet is the empty jet; reproduce that shape here
    // so the formulas specialize to n = 2
    auto dt0 = [](const Jet& u) { return u.order() >= 2 ? dt(u) : Jet(); };
    Jet nu2 = truncate(g.nu() * g.nu(), n - 2);
    Jet A = Jet::one(n) + times_t(apply_mod(g, dx(mup), n - 1) * g.nu());
    Jet B = g.nu() * apply_mod(g, dx(nup), n - 1);
    Jet C = times_t(times_t(apply_mod(g, dt0(mup), n - 2) * nu2) - g.mu());
    Jet D = Jet::one(n - 1) + times_t(apply_mod(g, dt0(nup), n - 2) * nu2);
    return {A, C, B, D};
}

// the recollement matrix of the restricted tangent bundle, built from
// g^{-1} = phi_{mu' nu'}; entries at order n-1
inline Mat2 tangent_restricted_matrix(const Automorphism& g) {
    int n = g.n();
    if (n < 3) fail(errc::order_too_small, "tangent matrix needs n >= 3");
    Automorphism gi = invert(g);
    const Jet& mup = gi.mu();
    const Jet& nup = gi.nu();
    return {Jet::one(n - 1) + shift_t(dx(mup)), mup + t_dt(mup), shift_t(dx(nup)),
            nup + t_dt(nup)};
}

struct PairFailure {
    PairKey pair;
    Mat2 residual;
};

struct ProlReport {
    bool pass = true;
    std::vector<PairFailure> failures;
};

// the matrix identity behind lifting: for g-bar = lift of g by u, the
// tangent matrices change only in the second column,
//   B-bar = B - (n-1) theta/nu_0^{n-1} t^{n-2},
//   D-bar = D - (n-1) beta/nu_0^{n-1} t^{n-2},
// checked on every ordered pair
inline ProlReport prol_check(const Cocycle& g, const KernelClass& u) {
    int n = g.n();
    if (n < 3) fail(errc::order_too_small, "tangent matrices need n >= 3");
    auto [lifted, rep] = cocycle_lift(g, u);
    if (!rep.pass) fail(errc::precondition_violated, "lifted cochain is not a cocycle");
    ProlReport out;
    RatFunc nm1(Rat(n - 1));
    std::vector<std::string> ls = g.cover().labels();
    for (const std::string& i : ls)
        for (const std::string& j : ls) {
            if (i == j) continue;
            Automorphism gij = g.entry(i, j);
            Automorphism bij = lifted.entry(i, j);
            auto tb = kernel_extract(compose(bij, invert(gij)));
            Mat2 M = tangent_restricted_matrix(gij);
            Mat2 Mb = tangent_restricted_matrix(bij);
            RatFunc c = nm1 / xi(gij).pow(static_cast<unsigned>(n - 1));
            Jet shift(n - 1);
            Mat2 expected = M;
            shift.coeff(n - 2) = c * tb.first;
            expected.m01 = expected.m01 - shift;
            shift.coeff(n - 2) = c * tb.second;
            expected.m11 = expected.m11 - shift;
            if (Mb != expected) out.failures.push_back({{i, j}, Mb - expected});
        }
    out.pass = out.failures.empty();
    return out;
}

} // namespace ribbon
