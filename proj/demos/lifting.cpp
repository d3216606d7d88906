// Cech cocycles with automorphism values: twisting, lifting, obstructions.

#include <cstdio>
#include <string>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

namespace {

RatFunc rf(const std::string& s) { return parse_ratfunc(s); }

void show_line(const char* name, const LineCocycle& L) {
    std::printf("%s:", name);
    for (const auto& [key, s] : L.entries())
        std::printf("  %s|%s -> %s", key.first.c_str(), key.second.c_str(),
                    ratfunc_to_string(s).c_str());
    std::printf("\n");
}

} // namespace

int main() {
    // three opens; U0 is allowed poles at 0, U1 at 1, U2 at 2
    Cover cov({{"U0", {Rat(0)}}, {"U1", {Rat(1)}}, {"U2", {Rat(2)}}});

    // a line cocycle (here a coboundary: 2*3 = 6) and its induced cocycle in G_2
    LineCocycle L(cov, {{{"U0", "U1"}, rf("2")}, {{"U0", "U2"}, rf("6")}, {{"U1", "U2"}, rf("3")}});
    Cocycle c = trivial_cocycle(L, 2);
    std::printf("induced G_2 cocycle verifies: %s\n", cocycle_verify(c).pass ? "yes" : "no");
    show_line("its xi", cocycle_xi(c));

    // twisting by a 0-cochain preserves the cocycle condition and shifts xi
    Cochain0 tw(cov, {{"U0", Automorphism(2, Jet(1), Jet::constant(rf("x"), 1))},
                      {"U1", identity_aut(2)},
                      {"U2", identity_aut(2)}});
    Cocycle ct = cocycle_twist(c, tw);
    std::printf("\ntwisted cocycle verifies: %s\n", cocycle_verify(ct).pass ? "yes" : "no");
    show_line("twisted xi", cocycle_xi(ct));

    // lifting to G_3: compose each entry with a kernel element kappa(theta, beta)
    Cocycle c3 = trivial_cocycle(L, 3);
    KernelClass zero(3, {{{"U0", "U1"}, {rf("0"), rf("0")}},
                         {{"U0", "U2"}, {rf("0"), rf("0")}},
                         {{"U1", "U2"}, {rf("0"), rf("0")}}});
    auto [lifted, rep] = cocycle_lift(c3, zero);
    std::printf("\nlift along the zero class verifies: %s\n", rep.pass ? "yes" : "no");
    std::printf("its obstruction entries are all trivial: %s\n",
                obstruction(lifted).begin()->second.gamma == identity_aut(3) ? "yes" : "no");

    // a class that is not a lift of anything: the cocycle condition breaks
    KernelClass bad(3, {{{"U0", "U1"}, {rf("1"), rf("0")}},
                        {{"U0", "U2"}, {rf("0"), rf("0")}},
                        {{"U1", "U2"}, {rf("0"), rf("0")}}});
    auto [broken, rep2] = cocycle_lift(c3, bad);
    std::printf("\nlift along theta_01 = 1 verifies: %s", rep2.pass ? "yes" : "no");
    if (!rep2.failures.empty()) {
        const auto& f = rep2.failures.front();
        std::printf("  (residual on %s,%s,%s has theta = %s)",
                    f.triple[0].c_str(), f.triple[1].c_str(), f.triple[2].c_str(),
                    ratfunc_to_string(kernel_extract(f.residual).first).c_str());
    }
    std::printf("\n");

    // an elementary modification at a point only U0 sees rescales one row of xi
    Cover bcov({{"U0", {Rat(5)}}, {"U1", {Rat(0)}}, {"U2", {Rat(0), Rat(1)}}});
    LineCocycle BL(bcov,
                   {{{"U0", "U1"}, rf("2")}, {{"U0", "U2"}, rf("6")}, {{"U1", "U2"}, rf("3")}});
    Cocycle base = trivial_cocycle(BL, 3);
    Cocycle blown = blowup(base, "U0", Rat(0), 1, Jet(2), Jet::one(2));
    std::printf("\nafter a first-order modification of U0 at the point 0:\n");
    show_line("xi before", cocycle_xi(base));
    show_line("xi after ", cocycle_xi(blown));
    return 0;
}
