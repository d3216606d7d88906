// Rank-2 matrix pictures: the derivative frame, its restriction, and e2.

#include <cstdio>
#include <string>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

namespace {

RatFunc rf(const std::string& s) { return parse_ratfunc(s); }

std::string show(const Jet& u) {
    std::string out;
    for (int k = 0; k < u.order(); ++k) {
        if (u.coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = ratfunc_to_string(u.coeff(k));
        if (k > 0 && c.find_first_of("+- ") != std::string::npos) c = "(" + c + ")";
        std::string tpart = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
        if (tpart.empty()) out += c;
        else out += c == "1" ? tpart : c + "*" + tpart;
    }
    return out.empty() ? "0" : out;
}

void show_mat(const char* name, const Mat2& M) {
    std::printf("%s:\n  [ %s , %s ]\n  [ %s , %s ]\n", name, show(M.m00).c_str(),
                show(M.m01).c_str(), show(M.m10).c_str(), show(M.m11).c_str());
}

} // namespace

int main() {
    // how g transports the derivations d/dx and t d/dt (columns are images)
    Automorphism g(3, Jet(2, {rf("x^2"), rf("0")}), Jet(2, {rf("x"), rf("0")}));
    show_mat("delta(g)", delta_matrix(g));

    // the same picture one order down, through the inverse substitution
    show_mat("\ntangent restriction", tangent_restricted_matrix(g));

    // a G_2 cocycle embeds in rank 2 via [[nu^2, -nu*mu], [0, nu]] at n = 3
    Cover cov({{"U0", {Rat(0)}}, {"U1", {Rat(1)}}, {"U2", {Rat(2)}}});
    LineCocycle L(cov, {{{"U0", "U1"}, rf("2")}, {{"U0", "U2"}, rf("6")}, {{"U1", "U2"}, rf("3")}});
    Cocycle c = trivial_cocycle(L, 2);
    MatrixJetCocycle E = e2_matrix_cocycle(c, 3);
    std::printf("\n");
    show_mat("e2 entry on U0|U1", E.entry("U0", "U1"));
    std::printf("matrix cocycle condition: %s\n",
                matrix_cocycle_verify(E).pass ? "holds" : "fails");

    // the restriction matrix is exactly the chain rule for d/dx and d/dt
    Automorphism gi = invert(g);
    Jet u(3, {rf("x"), rf("x^2"), rf("1")});
    Mat2 M = tangent_restricted_matrix(g);
    Jet fdx = truncate(apply(gi, dx(u)), 2);
    Jet fdt = apply_mod(gi, dt(u), 2);
    bool dxok = truncate(dx(apply(gi, u)), 2) == M.m00 * fdx + M.m10 * fdt;
    bool dtok = dt(apply(gi, u)) == M.m01 * fdx + M.m11 * fdt;
    std::printf("\nchain rule across the substitution: d/dx %s, d/dt %s\n",
                dxok ? "holds" : "fails", dtok ? "holds" : "fails");
    return 0;
}
