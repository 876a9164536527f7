// Command-line front end. Subcommands: enumerate, straighten, transfer,
// pipeline, operator, verify, member, hilbert. All output is deterministic;
// exit codes: 0 success / verified-true, 1 verified-false or non-membership,
// 2 usage error, 3 operator condition failed.

#include "binform/membership.hpp"
#include "binform/serialize.hpp"
#include "binform/symring.hpp"
#include "binform/transfer.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace binform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCondition = 3;

struct Options {
    int n = 0;
    long long p = 0;
    int max_degree = 1;
    int l = 1;
    std::string format = "text";
    std::string input;
    std::vector<std::string> gens;
    std::string bracket_text;
};

bool valid_char(long long p) { return p == 0 || is_prime(p); }

Covariant load_covariant(const std::string& path) {
    return covariant_from_json(load_json(path));
}

int cmd_enumerate(const Options& opt) {
    auto gens = enumerate_generators(opt.n);
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& g : gens) arr.push_back(bracket_monomial_to_json(g));
        std::cout << arr.dump(2) << "\n";
    } else if (opt.format == "dot") {
        for (const auto& g : gens) std::cout << bracket_to_dot(g);
    } else {
        for (const auto& g : gens)
            std::cout << g.str() << "   order " << g.order() << ", degree "
                      << *g.regularity_degree() << "\n";
    }
    return kExitOk;
}

int cmd_straighten(const Options& opt) {
    BracketMonomial m = parse_bracket_monomial(opt.n, opt.bracket_text);
    BracketPoly s = straighten(m, opt.p);
    if (opt.format == "json") std::cout << bracket_poly_to_json(s).dump(2) << "\n";
    else std::cout << s.str() << "\n";
    return kExitOk;
}

int cmd_transfer(const Options& opt) {
    BracketMonomial m = parse_bracket_monomial(opt.n, opt.bracket_text);
    auto degree = m.regularity_degree();
    if (!degree) {
        std::cerr << "error: bracket monomial is not regular\n";
        return kExitUsage;
    }
    SymResult sym = symmetrize(m, opt.p);
    if (sym.zero_orbit_sum) {
        if (opt.format == "json") {
            Json j;
            j["zero_orbit_sum"] = true;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "orbit sum is identically zero (ZeroOrbitSum)\n";
        }
        return kExitOk;
    }
    Transfer tr(opt.n, opt.p);
    Poly rootpoly = expand(straighten(sym.poly), tr.root_ring());
    Poly c = tr.to_coefficients(rootpoly, *degree, m.order());
    Covariant cov = certify(c, tr.form_spec());
    if (opt.format == "json") std::cout << covariant_to_json(cov).dump(2) << "\n";
    else
        std::cout << "degree " << cov.degree << ", order " << cov.order << ", weight "
                  << cov.weight << "\n" << cov.poly.str() << "\n";
    return kExitOk;
}

int cmd_pipeline(const Options& opt) {
    PipelineResult res = separating_pipeline(opt.n, opt.p, opt.max_degree);
    if (opt.format == "json") {
        std::cout << pipeline_to_json(res).dump(2) << "\n";
    } else {
        std::cout << "bracket generators:";
        for (const auto& g : res.generators) std::cout << " " << g.str();
        std::cout << "\nfixed-space dimensions per (degree, order):\n";
        for (const auto& [grade, dim] : res.fixed_dims)
            std::cout << "  (" << grade.first << ", " << grade.second << "): " << dim << "\n";
        std::cout << "minimal generators (" << res.minimal.size() << "):\n";
        for (const auto& e : res.minimal)
            std::cout << "c[" << e.cov.order << "," << e.cov.degree << "] = "
                      << e.cov.poly.str() << "\n";
    }
    return kExitOk;
}

int cmd_operator(const Options& opt) {
    FormSpec spec = make_form_spec(opt.n, opt.p);
    Covariant q;
    if (opt.input.empty()) {
        q = certify(binary_form(spec), spec);
    } else {
        q = load_covariant(opt.input);
        if (q.spec.n != opt.n || q.spec.p != opt.p) {
            std::cerr << "error: covariant file does not match --n/--char\n";
            return kExitUsage;
        }
        spec = q.spec;
    }
    try {
        OperatorResult r = rovetta_operator(q, opt.l, spec);
        if (opt.format == "json") {
            Json j = covariant_to_json(r.cov);
            if (r.is_zero) {
                j = Json();
                j["n"] = spec.n;
                j["p"] = spec.p;
                j["zero"] = true;
            }
            if (r.boundary) j["boundary"] = true;
            std::cout << j.dump(2) << "\n";
        } else {
            if (r.is_zero) std::cout << "0 (the zero covariant)\n";
            else
                std::cout << "degree " << r.cov.degree << ", order " << r.cov.order
                          << ", weight " << r.cov.weight << "\n" << r.cov.poly.str() << "\n";
            if (r.boundary) std::cout << "note: l = m0/2 boundary case\n";
        }
        return kExitOk;
    } catch (const condition_failed& e) {
        std::cerr << "ConditionFailed: " << e.what() << "\n";
        return kExitCondition;
    }
}

int cmd_verify(const Options& opt) {
    // lenient load: verify must be able to reject candidates that are not
    // even torus-covariant, so the stored (d, m, w) are not enforced here
    Json j = load_json(opt.input);
    FormSpec spec = make_form_spec(j.at("n").get<int>(), j.at("p").get<long long>());
    Poly poly = poly_from_json(j.at("poly")).substitute({}, spec.ring);
    Verdict v = is_covariant(poly, spec);
    if (opt.format == "json") {
        std::cout << verdict_to_json(v).dump(2) << "\n";
    } else if (v.ok && poly.is_zero()) {
        std::cout << "covariant: true (the zero polynomial)\n";
    } else if (v.ok) {
        std::cout << "covariant: true (degree " << degree_of(poly, spec) << ", order "
                  << order_of(poly, spec) << ", weight " << weight_of(poly, spec) << ")\n";
    } else {
        std::cout << "covariant: false\nresidual: " << v.residual.str() << "\n";
    }
    return v.ok ? kExitOk : kExitNegative;
}

int cmd_member(const Options& opt) {
    Covariant target = load_covariant(opt.input);
    std::vector<Covariant> gens;
    for (const auto& path : opt.gens) gens.push_back(load_covariant(path));
    for (const auto& g : gens)
        if (!same_ring(g.spec.ring, target.spec.ring))
            throw std::invalid_argument("generator ring differs from the target ring");
    Membership m = in_algebra(target, gens);
    if (opt.format == "json") {
        std::cout << membership_to_json(m).dump(2) << "\n";
    } else if (m.yes) {
        std::cout << "member: yes\ncertificate: ";
        bool first = true;
        for (const auto& term : m.certificate) {
            if (!first) std::cout << " + ";
            first = false;
            std::cout << term.coeff.str();
            for (const auto& [g, e] : term.powers) {
                std::cout << "*g" << g;
                if (e > 1) std::cout << "^" << e;
            }
        }
        std::cout << "\n";
    } else {
        std::cout << "member: no (slice dim " << m.slice_dim << ", augmented rank " << m.rank
                  << ")\n";
    }
    return m.yes ? kExitOk : kExitNegative;
}

int cmd_hilbert(const Options& opt) {
    Covariant c = load_covariant(opt.input);
    HilbertReport r = hilbert_conditions(c.poly, c.spec);
    if (opt.format == "json") {
        Json j;
        j["isobaric_ok"] = r.isobaric_ok;
        j["D_ok"] = r.d_ok;
        j["Delta_ok"] = r.delta_ok;
        j["applicable"] = r.applicable;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "isobaric: " << (r.isobaric_ok ? "ok" : "FAIL")
                  << "\nD-condition: " << (r.d_ok ? "ok" : "FAIL")
                  << "\nDelta-condition: " << (r.delta_ok ? "ok" : "FAIL")
                  << "\napplicable (p = 0 or p > nd + m): " << (r.applicable ? "yes" : "no")
                  << "\n";
        if (!r.applicable)
            std::cout << "note: the conditions make no covariance claim here\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"covariants of binary forms in small characteristic"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        if (needs_n) cmd->add_option("--n", opt.n, "form degree / point count")->required();
        cmd->add_option("--char", opt.p, "field characteristic (0 or prime)");
        cmd->add_option("--format", opt.format, "text | json")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "bracket generator system");
    add_common(enumerate, true);

    CLI::App* straighten_cmd = app.add_subcommand("straighten", "syzygy normal form");
    add_common(straighten_cmd, true);
    straighten_cmd->add_option("monomial", opt.bracket_text, "bracket monomial, e.g. [13][24]")
        ->required();

    CLI::App* transfer_cmd =
        app.add_subcommand("transfer", "symmetrize and express in the form coefficients");
    add_common(transfer_cmd, true);
    transfer_cmd->add_option("monomial", opt.bracket_text, "regular bracket monomial")
        ->required();

    CLI::App* pipeline = app.add_subcommand("pipeline", "separating-set computation");
    add_common(pipeline, true);
    pipeline->add_option("--max-degree", opt.max_degree, "degree bound")->required();

    CLI::App* op = app.add_subcommand("operator", "the z^-l d^l/dx^l covariant operator");
    add_common(op, true);
    op->add_option("--l", opt.l, "derivative order")->required();
    op->add_option("--in", opt.input, "covariant JSON file (default: the form f)");

    CLI::App* verify = app.add_subcommand("verify", "exact SL2-covariance check");
    verify->add_option("--in", opt.input, "covariant JSON file")->required();
    verify->add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* member = app.add_subcommand("member", "graded algebra membership");
    member->add_option("--in", opt.input, "target covariant JSON file")->required();
    member->add_option("--gens", opt.gens, "generator covariant JSON file (repeatable)")
        ->required();
    member->add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert differential conditions");
    hilbert->add_option("--in", opt.input, "covariant JSON file")->required();
    hilbert->add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(enumerate) || app.got_subcommand(straighten_cmd) ||
            app.got_subcommand(transfer_cmd) || app.got_subcommand(pipeline) ||
            app.got_subcommand(op)) {
            if (opt.n < (app.got_subcommand(op) || app.got_subcommand(pipeline) ? 1 : 2)) {
                std::cerr << "error: --n out of range\n";
                return kExitUsage;
            }
            if (!valid_char(opt.p)) {
                std::cerr << "error: --char must be 0 or prime\n";
                return kExitUsage;
            }
            if (app.got_subcommand(pipeline) && opt.max_degree < 0) {
                std::cerr << "error: --max-degree must be >= 0\n";
                return kExitUsage;
            }
        }
        if (app.got_subcommand(enumerate)) return cmd_enumerate(opt);
        if (app.got_subcommand(straighten_cmd)) return cmd_straighten(opt);
        if (app.got_subcommand(transfer_cmd)) return cmd_transfer(opt);
        if (app.got_subcommand(pipeline)) return cmd_pipeline(opt);
        if (app.got_subcommand(op)) return cmd_operator(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(member)) return cmd_member(opt);
        if (app.got_subcommand(hilbert)) return cmd_hilbert(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
