#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "ribbon/ribbon.hpp"
#include "testutil.hpp"

using namespace ribbon;

namespace {

RatFunc rf(const std::string& s) { return parse_ratfunc(s); }

Automorphism scale_aut(int n, const RatFunc& s) {
    return Automorphism(n, Jet(n - 1), Jet::constant(s, n - 1));
}

// e_n of the constant line cocycle (2, 6, 3) on the standard three-open cover
Cocycle const_cocycle(int n) {
    std::map<PairKey, RatFunc> entries{{{"U0", "U1"}, rf("2")},
                                       {{"U0", "U2"}, rf("6")},
                                       {{"U1", "U2"}, rf("3")}};
    return trivial_cocycle(LineCocycle(gen::cover3(), std::move(entries)), n);
}

} // namespace

TEST_CASE("cover basics") {
    Cover c = gen::cover3();
    CHECK(c.labels() == std::vector<std::string>{"U0", "U1", "U2"});
    CHECK(c.excluded("U1") == std::set<Rat>{Rat(1)});
    CHECK(c.pair_excluded("U0", "U2") == std::set<Rat>{Rat(0), Rat(2)});
    CHECK(c.contains_point("U0", Rat(7)));
    CHECK_FALSE(c.contains_point("U0", Rat(0)));
    CHECK_THROWS_MATCHES(c.excluded("U9"), error, error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(Cover(std::map<std::string, std::set<Rat>>{}), error,
                         error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(Cover(std::map<std::string, std::set<Rat>>{{"a|b", {}}}), error,
                         error_code(errc::cover_mismatch));

    CHECK(make_pair_key("U2", "U0") == PairKey{"U0", "U2"});
    CHECK_THROWS_MATCHES(make_pair_key("U0", "U0"), error, error_code(errc::cover_mismatch));
    CHECK(cover_pairs(c).size() == 3);
    CHECK(cover_triples(c) ==
          std::vector<std::array<std::string, 3>>{{"U0", "U1", "U2"}});
    CHECK(cover_triples(gen::cover2()).empty());
}

TEST_CASE("cocycle construction and entry lookup") {
    Cover cov = gen::cover2();
    Automorphism g = scale_aut(2, rf("2"));
    CHECK_THROWS_MATCHES(Cocycle(1, cov, {}), error, error_code(errc::order_too_small));
    CHECK_THROWS_MATCHES(Cocycle(2, cov, {{{"U1", "U0"}, g}}), error,
                         error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(Cocycle(2, cov, {{{"U0", "U9"}, g}}), error,
                         error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(Cocycle(2, cov, {}), error, error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(Cocycle(3, cov, {{{"U0", "U1"}, g}}), error,
                         error_code(errc::order_mismatch));

    Cocycle c(2, cov, {{{"U0", "U1"}, g}});
    CHECK(c.entry("U0", "U1") == g);
    CHECK(c.entry("U1", "U0") == invert(g));
    CHECK(c.entry("U0", "U0") == identity_aut(2));
}

TEST_CASE("verify accepts a genuine cocycle") {
    for (int n : {2, 3, 4}) {
        VerifyReport rep = cocycle_verify(const_cocycle(n));
        CHECK(rep.pass);
        CHECK(rep.failures.empty());
        CHECK(rep.irregular.empty());
    }
    gen::Rng rng(601);
    for (int i = 0; i < 15; ++i) {
        int n = rng.uniform(2, 4);
        CHECK(cocycle_verify(gen::cocycle(rng, gen::cover3(), n)).pass);
    }
}

TEST_CASE("verify reports a broken triple") {
    Cover cov = gen::cover3();
    std::map<PairKey, Automorphism> entries{{{"U0", "U1"}, identity_aut(2)},
                                            {{"U1", "U2"}, identity_aut(2)},
                                            {{"U0", "U2"}, scale_aut(2, rf("2"))}};
    VerifyReport rep = cocycle_verify(Cocycle(2, cov, std::move(entries)));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].triple == std::array<std::string, 3>{"U0", "U1", "U2"});
    CHECK(rep.failures[0].residual == scale_aut(2, rf("1/2")));
    CHECK(rep.irregular.empty());
}

TEST_CASE("verify reports an irregular entry") {
    Cover cov = gen::cover3();
    Automorphism bad(2, Jet::constant(rf("(1)/(x - 4)"), 1), Jet::one(1));
    std::map<PairKey, Automorphism> entries{{{"U0", "U1"}, bad},
                                            {{"U1", "U2"}, identity_aut(2)},
                                            {{"U0", "U2"}, identity_aut(2)}};
    VerifyReport rep = cocycle_verify(Cocycle(2, cov, std::move(entries)));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.irregular.size() == 1);
    CHECK(rep.irregular[0] == PairKey{"U0", "U1"});

    // a pole sitting inside the excluded set is fine
    Automorphism ok(2, Jet::constant(rf("(1)/(x - 1)"), 1), Jet::one(1));
    std::map<PairKey, Automorphism> entries2{{{"U0", "U1"}, ok},
                                             {{"U1", "U2"}, invert(ok)},
                                             {{"U0", "U2"}, identity_aut(2)}};
    CHECK(cocycle_verify(Cocycle(2, cov, std::move(entries2))).irregular.empty());
}

TEST_CASE("twist worked example") {
    Cocycle c = const_cocycle(2);
    std::map<std::string, Automorphism> h{{"U0", scale_aut(2, rf("5"))},
                                          {"U1", identity_aut(2)},
                                          {"U2", identity_aut(2)}};
    Cocycle tw = cocycle_twist(c, Cochain0(gen::cover3(), std::move(h)));
    CHECK(tw.entry("U0", "U1") == scale_aut(2, rf("10")));
    CHECK(tw.entry("U0", "U2") == scale_aut(2, rf("30")));
    CHECK(tw.entry("U1", "U2") == scale_aut(2, rf("3")));
}

TEST_CASE("twist preserves the cocycle condition") {
    gen::Rng rng(602);
    for (int i = 0; i < 20; ++i) {
        int n = rng.uniform(2, 4);
        Cover cov = gen::cover3();
        Cocycle c = gen::cocycle(rng, cov, n);
        Cocycle tw = cocycle_twist(c, gen::cochain(rng, cov, n));
        CHECK(cocycle_verify(tw).pass);
    }
}

TEST_CASE("twist rejects bad cochains") {
    Cocycle c = const_cocycle(2);
    std::map<std::string, Automorphism> h{
        {"U0", Automorphism(2, Jet::constant(rf("(1)/(x - 4)"), 1), Jet::one(1))},
        {"U1", identity_aut(2)},
        {"U2", identity_aut(2)}};
    CHECK_THROWS_MATCHES(cocycle_twist(c, Cochain0(gen::cover3(), std::move(h))), error,
                         error_code(errc::regularity_violation));
    gen::Rng rng(603);
    CHECK_THROWS_MATCHES(cocycle_twist(c, gen::cochain(rng, gen::cover2(), 2)), error,
                         error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(cocycle_twist(c, gen::cochain(rng, gen::cover3(), 3)), error,
                         error_code(errc::order_mismatch));
}

TEST_CASE("trivial cocycle, xi and rho") {
    gen::Rng rng(604);
    for (int i = 0; i < 10; ++i) {
        int n = rng.uniform(3, 5);
        Cover cov = gen::cover3();
        LineCocycle L = gen::line_cocycle(rng, cov);
        Cocycle c = trivial_cocycle(L, n);
        for (const auto& [key, g] : c.entries()) {
            CHECK(g.mu().is_zero());
            CHECK(g.nu() == Jet::constant(L.entries().at(key), n - 1));
        }
        // xi recovers the line cocycle, rho drops one order
        CHECK(cocycle_xi(c).entries() == L.entries());
        CHECK(cocycle_rho(c).entries() == trivial_cocycle(L, n - 1).entries());
    }
}

TEST_CASE("xi and rho of a genuine cocycle") {
    gen::Rng rng(605);
    for (int i = 0; i < 12; ++i) {
        int n = rng.uniform(3, 4);
        Cocycle c = gen::cocycle(rng, gen::cover3(), n);
        LineCocycle L = cocycle_xi(c);
        CHECK(L.entries().at({"U0", "U1"}) * L.entries().at({"U1", "U2"}) ==
              L.entries().at({"U0", "U2"}));
        CHECK(cocycle_verify(cocycle_rho(c)).pass);
    }
    CHECK_THROWS_MATCHES(cocycle_rho(const_cocycle(2)), error, error_code(errc::order_too_small));
}

TEST_CASE("kernel class shape checks") {
    CHECK_THROWS_MATCHES(KernelClass(2, {}), error, error_code(errc::order_too_small));
    CHECK_THROWS_MATCHES(KernelClass(3, {{{"U1", "U0"}, {rf("1"), rf("0")}}}), error,
                         error_code(errc::cover_mismatch));
    gen::Rng rng(606);
    Cocycle g = gen::cocycle(rng, gen::cover3(), 3);
    KernelClass u = gen::kernel_class(rng, g);
    std::map<PairKey, Automorphism> em = kernel_embed(u);
    for (const auto& [key, tb] : u.entries())
        CHECK(em.at(key) == kernel_element(3, tb.first, tb.second));
}

TEST_CASE("lift by zero reproduces the cocycle") {
    gen::Rng rng(607);
    for (int i = 0; i < 8; ++i) {
        int n = rng.uniform(3, 4);
        Cocycle g = gen::cocycle(rng, gen::cover3(), n);
        std::map<PairKey, std::pair<RatFunc, RatFunc>> zeros;
        for (const PairKey& key : cover_pairs(g.cover()))
            zeros.emplace(key, std::pair<RatFunc, RatFunc>{RatFunc(), RatFunc()});
        auto [lifted, rep] = cocycle_lift(g, KernelClass(n, std::move(zeros)));
        CHECK(lifted.entries() == g.entries());
        CHECK(rep.pass);
    }
}

TEST_CASE("lift of a coboundary class is a cocycle") {
    gen::Rng rng(608);
    for (int i = 0; i < 10; ++i) {
        int n = rng.uniform(3, 5);
        Cocycle g = gen::cocycle(rng, gen::cover3(), n);
        KernelClass u = gen::liftable_kernel_class(rng, g);
        auto [lifted, rep] = cocycle_lift(g, u);
        CHECK(rep.pass);
        CHECK(cocycle_rho(lifted).entries() == cocycle_rho(g).entries());
    }
}

TEST_CASE("lift over two opens never obstructs") {
    gen::Rng rng(609);
    for (int i = 0; i < 10; ++i) {
        Cocycle g = gen::cocycle(rng, gen::cover2(), 3);
        auto [lifted, rep] = cocycle_lift(g, gen::kernel_class(rng, g));
        CHECK(rep.pass);
    }
}

TEST_CASE("lift failure names the triple") {
    gen::Rng rng(610);
    Cocycle g = gen::cocycle(rng, gen::cover3(), 3);
    auto [lifted, rep] = cocycle_lift(g, gen::kernel_class(rng, g));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].triple == std::array<std::string, 3>{"U0", "U1", "U2"});

    std::map<PairKey, std::pair<RatFunc, RatFunc>> two;
    two.emplace(PairKey{"U0", "U1"}, std::pair<RatFunc, RatFunc>{rf("1"), rf("0")});
    CHECK_THROWS_MATCHES(cocycle_lift(g, KernelClass(3, std::move(two))), error,
                         error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(cocycle_lift(g, gen::kernel_class(rng, gen::cocycle(rng, gen::cover3(), 4))),
                         error, error_code(errc::order_mismatch));
}

TEST_CASE("lift rejects irregular kernel data") {
    gen::Rng rng(611);
    Cocycle g = gen::cocycle(rng, gen::cover3(), 3);
    std::map<PairKey, std::pair<RatFunc, RatFunc>> bad;
    for (const PairKey& key : cover_pairs(g.cover()))
        bad.emplace(key, std::pair<RatFunc, RatFunc>{rf("(1)/(x - 4)"), RatFunc()});
    CHECK_THROWS_MATCHES(cocycle_lift(g, KernelClass(3, std::move(bad))), error,
                         error_code(errc::regularity_violation));
}

TEST_CASE("obstruction of a genuine cocycle is the identity") {
    gen::Rng rng(612);
    for (int i = 0; i < 8; ++i) {
        int n = rng.uniform(3, 5);
        Cocycle g = gen::cocycle(rng, gen::cover3(), n);
        auto obs = obstruction(g);
        REQUIRE(obs.size() == 1);
        for (const auto& [tr, e] : obs) {
            CHECK(e.gamma == identity_aut(n));
            CHECK(e.theta.is_zero());
            CHECK(e.beta.is_zero());
        }
    }
}

TEST_CASE("obstruction of a broken lift lands in the kernel") {
    gen::Rng rng(613);
    for (int i = 0; i < 6; ++i) {
        Cocycle g = gen::cocycle(rng, gen::cover3(), 3);
        auto [lifted, rep] = cocycle_lift(g, gen::kernel_class(rng, g));
        auto obs = obstruction(lifted);
        bool trivial = true;
        for (const auto& [tr, e] : obs) {
            CHECK(e.gamma == kernel_element(3, e.theta, e.beta));
            if (!e.theta.is_zero() || !e.beta.is_zero()) trivial = false;
        }
        CHECK(trivial == rep.pass);
    }
}

TEST_CASE("obstruction preconditions") {
    Cover cov = gen::cover3();
    std::map<PairKey, Automorphism> entries{{{"U0", "U1"}, identity_aut(3)},
                                            {{"U1", "U2"}, identity_aut(3)},
                                            {{"U0", "U2"}, scale_aut(3, rf("2"))}};
    CHECK_THROWS_MATCHES(obstruction(Cocycle(3, cov, std::move(entries))), error,
                         error_code(errc::precondition_violated));
    CHECK_THROWS_MATCHES(obstruction(const_cocycle(2)), error, error_code(errc::order_too_small));
}

TEST_CASE("blowup worked example") {
    Cover cov = gen::cover2();
    std::map<PairKey, Automorphism> entries{{{"U0", "U1"}, identity_aut(3)}};
    Cocycle c(3, cov, std::move(entries));
    for (int q : {1, 2}) {
        Cocycle b = blowup(c, "U1", Rat(0), q, Jet(2), Jet::one(2));
        RatFunc xq = RatFunc::x().pow(static_cast<unsigned>(q));
        CHECK(b.entry("U1", "U0") == scale_aut(3, xq));
        CHECK(cocycle_verify(b).pass);
    }
}

TEST_CASE("blowup placement errors") {
    Cover cov = gen::cover2();
    std::map<PairKey, Automorphism> entries{{{"U0", "U1"}, identity_aut(3)}};
    Cocycle c(3, cov, std::move(entries));
    CHECK_THROWS_MATCHES(blowup(c, "U9", Rat(0), 1, Jet(2), Jet::one(2)), error,
                         error_code(errc::cover_mismatch));
    CHECK_THROWS_MATCHES(blowup(c, "U1", Rat(0), 0, Jet(2), Jet::one(2)), error,
                         error_code(errc::precondition_violated));
    // P outside the blown-up open
    CHECK_THROWS_MATCHES(blowup(c, "U1", Rat(1), 1, Jet(2), Jet::one(2)), error,
                         error_code(errc::point_position));
    // P visible from another open
    CHECK_THROWS_MATCHES(blowup(c, "U1", Rat(5), 1, Jet(2), Jet::one(2)), error,
                         error_code(errc::point_position));
}

TEST_CASE("blowup commutes with xi and rho") {
    Cover cov({{"U0", {Rat(5)}}, {"U1", {Rat(0)}}, {"U2", {Rat(0), Rat(1)}}});
    gen::Rng rng(614);
    for (int i = 0; i < 10; ++i) {
        int n = rng.uniform(3, 4);
        Cocycle c = gen::cocycle(rng, cov, n);
        int q = rng.uniform(1, 2);
        Jet mu = gen::jet(rng, n - 1);
        Jet nu = gen::unit_jet(rng, n - 1);
        Cocycle b = blowup(c, "U0", Rat(0), q, mu, nu);

        RatFunc f = RatFunc::x().pow(static_cast<unsigned>(q)) * nu.coeff(0);
        LineCocycle lx = cocycle_xi(c);
        std::map<PairKey, RatFunc> expect;
        for (const auto& [key, s] : lx.entries()) {
            if (key.first == "U0")
                expect.emplace(key, f * s);
            else if (key.second == "U0")
                expect.emplace(key, s / f);
            else
                expect.emplace(key, s);
        }
        CHECK(cocycle_xi(b).entries() == expect);

        Cocycle rb = blowup(cocycle_rho(c), "U0", Rat(0), q, truncate(mu, n - 2),
                            truncate(nu, n - 2));
        CHECK(cocycle_rho(b).entries() == rb.entries());
    }
}

TEST_CASE("conjugation by a blowup frame preserves regularity") {
    Automorphism psi(3, Jet::one(2), Jet::one(2));
    Automorphism chi = conj_regular(Rat(0), 1, Jet(2), Jet::one(2), psi);
    CHECK(chi == Automorphism(3, Jet::constant(rf("x"), 2),
                              Jet(2, {rf("1"), rf("-1")})));

    gen::Rng rng(615);
    for (int i = 0; i < 25; ++i) {
        int n = rng.uniform(2, 4);
        Rat P(rng.uniform(0, 2));
        std::set<Rat> away{P + 1};
        int q = rng.uniform(1, 2);
        Jet mu = (RatFunc::x() - RatFunc(P)) * gen::regular_jet(rng, away, n - 1);
        Jet nu = gen::regular_jet(rng, away, n - 1);
        nu.coeff(0) = gen::unit_on(rng, away);
        Automorphism f = gen::section_on(rng, away, n);
        Automorphism chi2 = conj_regular(P, q, mu, nu, f);
        for (const RatFunc& c : chi2.mu().coeffs())
            CHECK((c.is_zero() || c.order_at(P) >= 0));
        for (const RatFunc& c : chi2.nu().coeffs())
            CHECK((c.is_zero() || c.order_at(P) >= 0));
        CHECK(chi2.nu().coeff(0).order_at(P) == 0);
    }
}

TEST_CASE("conj_regular preconditions") {
    Automorphism pole(3, Jet::constant(rf("(1)/(x)"), 2), Jet::one(2));
    CHECK_THROWS_MATCHES(conj_regular(Rat(0), 1, Jet(2), Jet::one(2), pole), error,
                         error_code(errc::precondition_violated));
    Automorphism vanish(3, Jet(2), Jet::constant(rf("x"), 2));
    CHECK_THROWS_MATCHES(conj_regular(Rat(0), 1, Jet(2), Jet::one(2), vanish), error,
                         error_code(errc::precondition_violated));
    Automorphism ok(3, Jet::one(2), Jet::one(2));
    CHECK_THROWS_MATCHES(conj_regular(Rat(0), 0, Jet(2), Jet::one(2), ok), error,
                         error_code(errc::precondition_violated));
    CHECK_THROWS_MATCHES(conj_regular(Rat(0), 1, Jet(2), Jet::constant(rf("x"), 2), ok), error,
                         error_code(errc::precondition_violated));
    // the frame's mu has to vanish at P, or the conjugate can acquire poles
    CHECK_THROWS_MATCHES(conj_regular(Rat(0), 1, Jet::one(2), Jet::one(2), ok), error,
                         error_code(errc::precondition_violated));
}

TEST_CASE("kernel action by a constant scaling family") {
    gen::Rng rng(616);
    Cocycle g = const_cocycle(3);
    KernelClass u = gen::kernel_class(rng, g);

    std::map<std::string, Automorphism> ident;
    for (const std::string& label : g.cover().labels()) ident.emplace(label, identity_aut(3));
    KernelClass fixed = h1_action(Cochain0(g.cover(), std::move(ident)), g, u);
    CHECK(fixed.entries() == u.entries());

    std::map<std::string, Automorphism> sc;
    for (const std::string& label : g.cover().labels()) sc.emplace(label, scale_aut(3, rf("3")));
    KernelClass acted = h1_action(Cochain0(g.cover(), std::move(sc)), g, u);
    for (const auto& [key, tb] : u.entries()) {
        CHECK(acted.entries().at(key).first == rf("9") * tb.first);
        CHECK(acted.entries().at(key).second == rf("3") * tb.second);
    }
}

TEST_CASE("kernel action by a rebased vector field") {
    gen::Rng rng(617);
    Cover cov = gen::cover2();
    RatFunc s = RatFunc::x();
    std::map<PairKey, Automorphism> entries{{{"U0", "U1"}, scale_aut(3, s)}};
    Cocycle g(3, cov, std::move(entries));

    for (int i = 0; i < 10; ++i) {
        RatFunc a = gen::ratfunc_nonzero(rng, 1);
        RatFunc m = gen::ratfunc_nonzero(rng, 1);
        Jet mj = Jet::constant(m, 2);
        Automorphism p0 = der_rebase(a, mj, Jet::one(2));
        Automorphism p1 = der_rebase(a / s, mj, Jet::one(2));

        Automorphism comm = compose(p0, compose(g.entry("U0", "U1"),
                                                compose(invert(p1), invert(g.entry("U0", "U1")))));
        auto vw = kernel_extract(comm);
        RatFunc slog = s.derivative() / s;
        CHECK(vw.first == RatFunc(Rat(-1, 2)) * a * a * slog * m * m);
        CHECK(vw.second == a * slog * m);

        KernelClass u = gen::kernel_class(rng, g);
        std::map<std::string, Automorphism> fam{{"U0", p0}, {"U1", p1}};
        KernelClass acted = h1_action(Cochain0(cov, std::move(fam)), g, u);
        const auto& tb = u.entries().at({"U0", "U1"});
        CHECK(acted.entries().at({"U0", "U1"}).first ==
              tb.first - p0.mu().coeff(0) * tb.second + vw.first);
        CHECK(acted.entries().at({"U0", "U1"}).second == tb.second + vw.second);
    }
}

TEST_CASE("kernel action preconditions") {
    gen::Rng rng(618);
    Cocycle g = const_cocycle(3);
    KernelClass u = gen::kernel_class(rng, g);
    std::map<std::string, Automorphism> mixed{{"U0", scale_aut(3, rf("3"))},
                                              {"U1", scale_aut(3, rf("2"))},
                                              {"U2", scale_aut(3, rf("3"))}};
    CHECK_THROWS_MATCHES(h1_action(Cochain0(g.cover(), std::move(mixed)), g, u), error,
                         error_code(errc::precondition_violated));
    std::map<std::string, Automorphism> nonconst{{"U0", scale_aut(3, rf("x"))},
                                                 {"U1", scale_aut(3, rf("x"))},
                                                 {"U2", scale_aut(3, rf("x"))}};
    CHECK_THROWS_MATCHES(h1_action(Cochain0(g.cover(), std::move(nonconst)), g, u), error,
                         error_code(errc::precondition_violated));
}

TEST_CASE("split law") {
    Jet nup = Jet::constant(rf("2"), 2);
    Jet nu(2, {rf("1"), rf("1")});
    CHECK(split_law(nup, nu) == Jet(2, {rf("2"), rf("4")}));

    gen::Rng rng(619);
    for (int i = 0; i < 30; ++i) {
        int n = rng.uniform(2, 5);
        Jet a = gen::unit_jet(rng, n - 1);
        Jet b = gen::unit_jet(rng, n - 1);
        Automorphism prod = compose(Automorphism(n, Jet(n - 1), a), Automorphism(n, Jet(n - 1), b));
        CHECK(prod.mu().is_zero());
        CHECK(prod.nu() == split_law(a, b));
    }
    CHECK_THROWS_MATCHES(split_law(Jet::one(2), Jet::one(3)), error,
                         error_code(errc::order_mismatch));
    CHECK_THROWS_MATCHES(split_law(Jet(2), Jet::one(2)), error, error_code(errc::non_unit));
}
