// A walk through the substitution group of K[t]/(t^n), K = Q(x).

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

void show_aut(const char* name, const Automorphism& f) {
    Jet fx = Jet::constant(RatFunc::x(), f.n()) + shift_t(extend(f.mu(), f.n()));
    Jet ft = shift_t(extend(f.nu(), f.n()));
    std::printf("  %s(x) = %s\n  %s(t) = %s\n", name, show(fx).c_str(), name, show(ft).c_str());
}

} // namespace

int main() {
    // an automorphism of K[t]/(t^3) is a pair (mu, nu) of 2-jets, nu(0) a unit
    Automorphism f(3, Jet(2, {rf("x"), rf("1")}), Jet(2, {rf("2"), rf("x")}));
    std::printf("f sends\n");
    show_aut("f", f);

    Jet u(3, {rf("x^2"), rf("x"), rf("1")});
    std::printf("\nu        = %s\nf(u)     = %s\n", show(u).c_str(), show(apply(f, u)).c_str());

    Automorphism g(3, Jet(2, {rf("0"), rf("x + 1")}), Jet(2, {rf("1"), rf("0")}));
    std::printf("\ng sends\n");
    show_aut("g", g);
    std::printf("g . f sends\n");
    show_aut("gf", compose(g, f));

    Automorphism fi = invert(f);
    std::printf("\nf^-1 sends\n");
    show_aut("fi", fi);
    bool round = apply(fi, apply(f, u)) == u;
    std::printf("f^-1(f(u)) == u: %s\n", round ? "yes" : "no");

    std::printf("\nxi(f)  = %s          (action on t mod t^2)\n", ratfunc_to_string(xi(f)).c_str());
    std::printf("rho(f) sends            (image in the n = 2 group)\n");
    show_aut("rho f", rho(f));

    // exp and log identify the unipotent part with pairs of derivation coefficients
    Automorphism h(3, Jet(2, {rf("x"), rf("0")}), Jet(2, {rf("1"), rf("1")}));
    Derivation D = der_log(h);
    std::printf("\nh has xi = 1, so h = exp(D) with\n  D.a = [%s, %s]\n  D.b = [%s]\n",
                ratfunc_to_string(D.a().coeff(0)).c_str(),
                ratfunc_to_string(D.a().coeff(1)).c_str(),
                ratfunc_to_string(D.b().coeff(0)).c_str());
    std::printf("exp(log h) == h: %s\n", der_exp(D) == h ? "yes" : "no");

    // the kernel of rho is parametrized by pairs (theta, beta); conjugation is linear
    auto [tp, bp] = kernel_conjugate(f, rf("1"), rf("x"));
    std::printf("\nconjugating the kernel element (theta, beta) = (1, x) by f gives\n"
                "  (%s, %s)\n",
                ratfunc_to_string(tp).c_str(), ratfunc_to_string(bp).c_str());
    return 0;
}
