#include "ribbon/ribbon.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ribbon;

namespace {

struct Io {
    std::string input;
    std::string output;
    bool pretty = false;
};

json read_payload(const Io& io) {
    std::string text;
    if (io.input.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(io.input);
        if (!in) fail(errc::parse_error, "cannot open input file", io.input);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, "input is not valid JSON", "$");
    return j;
}

void write_payload(const Io& io, const json& j) {
    std::string text = io.pretty ? j.dump(2) : j.dump();
    text.push_back('\n');
    if (io.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(io.output);
    if (!out) fail(errc::parse_error, "cannot open output file", io.output);
    out << text;
}

int exit_for(errc c) {
    if (c == errc::parse_error) return 2;
    if (c == errc::internal_invariant) return 4;
    return 3;
}

using Handler = std::function<json(const json&)>;

// field accessors that keep the error location rooted at the payload
const json& field(const json& j, const char* key) { return detail::member(j, key, "$"); }

RatFunc ratfunc_field(const json& j, const char* key) {
    return detail::ratfunc_at(field(j, key), std::string("$.") + key);
}

json aut_apply(const json& j) {
    detail::only_keys(j, {"aut", "jet"}, "$");
    Automorphism f = aut_from_json(field(j, "aut"), "$.aut");
    Jet u = jet_from_json(field(j, "jet"), "$.jet");
    return to_json(apply(f, u));
}

json aut_compose(const json& j) {
    detail::only_keys(j, {"outer", "inner"}, "$");
    Automorphism g = aut_from_json(field(j, "outer"), "$.outer");
    Automorphism f = aut_from_json(field(j, "inner"), "$.inner");
    return to_json(compose(g, f));
}

json aut_invert(const json& j) {
    detail::only_keys(j, {"aut"}, "$");
    return to_json(invert(aut_from_json(field(j, "aut"), "$.aut")));
}

json aut_rho(const json& j) {
    detail::only_keys(j, {"aut"}, "$");
    return to_json(rho(aut_from_json(field(j, "aut"), "$.aut")));
}

json aut_xi(const json& j) {
    detail::only_keys(j, {"aut"}, "$");
    return json{{"xi", ratfunc_to_string(xi(aut_from_json(field(j, "aut"), "$.aut")))}};
}

json aut_exp(const json& j) {
    detail::only_keys(j, {"derivation"}, "$");
    return to_json(der_exp(der_from_json(field(j, "derivation"), "$.derivation")));
}

json aut_log(const json& j) {
    detail::only_keys(j, {"aut"}, "$");
    return to_json(der_log(aut_from_json(field(j, "aut"), "$.aut")));
}

json aut_star(const json& j) {
    detail::only_keys(j, {"outer", "inner"}, "$");
    Derivation a = der_from_json(field(j, "outer"), "$.outer");
    Derivation b = der_from_json(field(j, "inner"), "$.inner");
    return to_json(der_star(a, b));
}

json cocycle_verify_cmd(const json& j) {
    detail::only_keys(j, {"cocycle"}, "$");
    return to_json(cocycle_verify(cocycle_from_json(field(j, "cocycle"), "$.cocycle")));
}

json cocycle_twist_cmd(const json& j) {
    detail::only_keys(j, {"cocycle", "cochain"}, "$");
    Cocycle c = cocycle_from_json(field(j, "cocycle"), "$.cocycle");
    Cochain0 h = cochain_from_json(field(j, "cochain"), "$.cochain");
    return to_json(cocycle_twist(c, h));
}

json cocycle_trivial_cmd(const json& j) {
    detail::only_keys(j, {"line", "n"}, "$");
    LineCocycle L = line_from_json(field(j, "line"), "$.line");
    return to_json(trivial_cocycle(L, detail::int_member(j, "n", "$")));
}

json cocycle_xi_cmd(const json& j) {
    detail::only_keys(j, {"cocycle"}, "$");
    return to_json(cocycle_xi(cocycle_from_json(field(j, "cocycle"), "$.cocycle")));
}

json cocycle_rho_cmd(const json& j) {
    detail::only_keys(j, {"cocycle"}, "$");
    return to_json(cocycle_rho(cocycle_from_json(field(j, "cocycle"), "$.cocycle")));
}

json cocycle_lift_cmd(const json& j) {
    detail::only_keys(j, {"cocycle", "kernel"}, "$");
    Cocycle g = cocycle_from_json(field(j, "cocycle"), "$.cocycle");
    KernelClass u = kernel_from_json(field(j, "kernel"), "$.kernel");
    auto [lifted, rep] = cocycle_lift(g, u);
    return json{{"cocycle", to_json(lifted)}, {"report", to_json(rep)}};
}

json cocycle_obstruction_cmd(const json& j) {
    detail::only_keys(j, {"cocycle"}, "$");
    return obstruction_to_json(obstruction(cocycle_from_json(field(j, "cocycle"), "$.cocycle")));
}

json cocycle_blowup_cmd(const json& j) {
    detail::only_keys(j, {"cocycle", "center", "point", "q", "mu", "nu"}, "$");
    Cocycle c = cocycle_from_json(field(j, "cocycle"), "$.cocycle");
    std::string i0 = detail::string_at(field(j, "center"), "$.center");
    Rat P = detail::rat_at(field(j, "point"), "$.point");
    int q = detail::int_member(j, "q", "$");
    Jet mu = jet_from_json(field(j, "mu"), "$.mu");
    Jet nu = jet_from_json(field(j, "nu"), "$.nu");
    return to_json(blowup(c, i0, P, q, mu, nu));
}

json bundle_e2(const json& j) {
    detail::only_keys(j, {"cocycle", "n"}, "$");
    Cocycle c = cocycle_from_json(field(j, "cocycle"), "$.cocycle");
    return to_json(e2_matrix_cocycle(c, detail::int_member(j, "n", "$")));
}

json bundle_delta(const json& j) {
    detail::only_keys(j, {"aut"}, "$");
    return to_json(delta_matrix(aut_from_json(field(j, "aut"), "$.aut")));
}

json bundle_tangent(const json& j) {
    detail::only_keys(j, {"aut"}, "$");
    return to_json(tangent_restricted_matrix(aut_from_json(field(j, "aut"), "$.aut")));
}

json bundle_prolcheck(const json& j) {
    detail::only_keys(j, {"cocycle", "kernel"}, "$");
    Cocycle g = cocycle_from_json(field(j, "cocycle"), "$.cocycle");
    KernelClass u = kernel_from_json(field(j, "kernel"), "$.kernel");
    return to_json(prol_check(g, u));
}

json kernel_conjugate_cmd(const json& j) {
    detail::only_keys(j, {"aut", "theta", "beta"}, "$");
    Automorphism g = aut_from_json(field(j, "aut"), "$.aut");
    auto [theta, beta] = kernel_conjugate(g, ratfunc_field(j, "theta"), ratfunc_field(j, "beta"));
    return json{{"theta", ratfunc_to_string(theta)}, {"beta", ratfunc_to_string(beta)}};
}

json kernel_action_cmd(const json& j) {
    detail::only_keys(j, {"cochain", "cocycle", "kernel"}, "$");
    Cochain0 psi = cochain_from_json(field(j, "cochain"), "$.cochain");
    Cocycle g = cocycle_from_json(field(j, "cocycle"), "$.cocycle");
    KernelClass u = kernel_from_json(field(j, "kernel"), "$.kernel");
    return to_json(h1_action(psi, g, u));
}

json split_law_cmd(const json& j) {
    detail::only_keys(j, {"nu_prime", "nu"}, "$");
    Jet nup = jet_from_json(field(j, "nu_prime"), "$.nu_prime");
    Jet nu = jet_from_json(field(j, "nu"), "$.nu");
    return to_json(split_law(nup, nu));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact automorphisms of truncated power-series rings and their Cech cocycles"};
    app.set_version_flag("--version", "ribbon 0.1.0");
    app.require_subcommand(1);

    Io io;
    Handler selected;

    auto group = [&](const char* name, const char* desc) {
        CLI::App* g = app.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    };
    auto leaf = [&](CLI::App* parent, const char* name, const char* desc, Handler fn) {
        CLI::App* cmd = parent->add_subcommand(name, desc);
        cmd->add_option("--input", io.input, "JSON payload file (default: stdin)");
        cmd->add_option("--output", io.output, "result file (default: stdout)");
        cmd->add_flag("--pretty", io.pretty, "indent the JSON output");
        cmd->callback([&selected, fn] { selected = fn; });
    };

    CLI::App* aut = group("aut", "automorphisms of A_n");
    leaf(aut, "apply", "apply an automorphism to a jet: {aut, jet}", aut_apply);
    leaf(aut, "compose", "compose two automorphisms, outer after inner: {outer, inner}",
         aut_compose);
    leaf(aut, "invert", "invert an automorphism: {aut}", aut_invert);
    leaf(aut, "rho", "restrict along A_n ->> A_{n-1}: {aut}", aut_rho);
    leaf(aut, "xi", "the character nu_0: {aut}", aut_xi);
    leaf(aut, "exp", "exponential of a derivation: {derivation}", aut_exp);
    leaf(aut, "log", "logarithm of an automorphism with xi = 1: {aut}", aut_log);
    leaf(aut, "star", "product of derivations through exp: {outer, inner}", aut_star);

    CLI::App* coc = group("cocycle", "Cech cocycles of automorphisms");
    leaf(coc, "verify", "cocycle condition and regularity report: {cocycle}", cocycle_verify_cmd);
    leaf(coc, "twist", "conjugate by a 0-cochain: {cocycle, cochain}", cocycle_twist_cmd);
    leaf(coc, "trivial", "embed a line cocycle as phi_{0,s}: {line, n}", cocycle_trivial_cmd);
    leaf(coc, "xi", "entrywise character: {cocycle}", cocycle_xi_cmd);
    leaf(coc, "rho", "entrywise restriction: {cocycle}", cocycle_rho_cmd);
    leaf(coc, "lift", "lift by a kernel class, with report: {cocycle, kernel}", cocycle_lift_cmd);
    leaf(coc, "obstruction", "triple obstruction classes: {cocycle}", cocycle_obstruction_cmd);
    leaf(coc, "blowup", "blow up at a point of one open: {cocycle, center, point, q, mu, nu}",
         cocycle_blowup_cmd);

    CLI::App* bun = group("bundle", "rank-2 matrix cocycles and tangent matrices");
    leaf(bun, "e2", "matrix cocycle of T_C + O_C twisted by a G_2 cocycle: {cocycle, n}",
         bundle_e2);
    leaf(bun, "delta", "conjugation matrix on (d/dx, t d/dt): {aut}", bundle_delta);
    leaf(bun, "tangent", "restricted tangent recollement matrix: {aut}", bundle_tangent);
    leaf(bun, "prolcheck", "tangent-matrix shift identity for a lift: {cocycle, kernel}",
         bundle_prolcheck);

    CLI::App* ker = group("kernel", "the kernel of rho and its actions");
    leaf(ker, "conjugate", "conjugation closed form: {aut, theta, beta}", kernel_conjugate_cmd);
    leaf(ker, "action", "0-cochain action on kernel classes: {cochain, cocycle, kernel}",
         kernel_action_cmd);

    CLI::App* spl = group("split", "split automorphisms");
    leaf(spl, "law", "group law on the nu side: {nu_prime, nu}", split_law_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json err{{"error", json{{"code", "parse-error"},
                                {"message", e.what()},
                                {"location", "argv"}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        write_payload(io, selected(read_payload(io)));
    } catch (const error& e) {
        json err{{"error", json{{"code", errc_name(e.code())},
                                {"message", e.what()},
                                {"location", e.location()}}}};
        std::cerr << err.dump() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        json err{{"error", json{{"code", errc_name(errc::internal_invariant)},
                                {"message", e.what()},
                                {"location", ""}}}};
        std::cerr << err.dump() << "\n";
        return 4;
    }
    return 0;
}
