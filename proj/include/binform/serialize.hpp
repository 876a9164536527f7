#pragma once

// JSON forms. Poly: {"ring": [names...], "char": p, "terms": [{"c": str,
// "e": [ints]}...]} with terms in canonical (grevlex-descending) order.
// Covariant: {"n", "p", "d", "m", "w", "poly"}. Bracket monomial:
// {"n", "sign", "edges": [{"i", "j": int|"u", "m"}...]}.

#include "binform/bracket.hpp"
#include "binform/covariant.hpp"
#include "binform/membership.hpp"
#include "binform/symring.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace binform {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const Poly& p) {
    Json j;
    j["ring"] = p.ring()->names();
    j["char"] = p.ring()->characteristic();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["c"] = c.str();
        t["e"] = e;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Poly poly_from_json(const Json& j) {
    std::vector<std::string> names = j.at("ring").get<std::vector<std::string>>();
    long long p = j.value("char", 0LL);
    Ring ring = make_ring(std::move(names), p);
    std::vector<Poly::Term> terms;
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("e").get<ExpVec>();
        terms.push_back({std::move(e), Scalar::parse(p, t.at("c").get<std::string>())});
    }
    return Poly::from_terms(ring, std::move(terms));
}

inline Json covariant_to_json(const Covariant& c) {
    Json j;
    j["n"] = c.spec.n;
    j["p"] = c.spec.p;
    j["d"] = c.degree;
    j["m"] = c.order;
    j["w"] = c.weight;
    j["poly"] = poly_to_json(c.poly);
    return j;
}

inline Covariant covariant_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    long long p = j.at("p").get<long long>();
    FormSpec spec = make_form_spec(n, p);
    Poly raw = poly_from_json(j.at("poly"));
    // remap into the canonical form ring by variable name
    std::map<int, Poly> bind;
    Poly poly = raw.substitute(bind, spec.ring);
    Covariant c = certify(poly, spec);
    if (j.contains("d") && j.at("d").get<int>() != c.degree)
        throw std::invalid_argument("covariant file: stored degree disagrees with the polynomial");
    if (j.contains("m") && j.at("m").get<int>() != c.order)
        throw std::invalid_argument("covariant file: stored order disagrees with the polynomial");
    if (j.contains("w") && j.at("w").get<long long>() != c.weight)
        throw std::invalid_argument("covariant file: stored weight disagrees with the polynomial");
    return c;
}

inline Json bracket_monomial_to_json(const BracketMonomial& m) {
    Json j;
    j["n"] = m.n();
    j["sign"] = m.sign();
    Json edges = Json::array();
    for (const auto& [e, mult] : m.edges()) {
        Json je;
        je["i"] = e.i;
        if (e.is_u()) je["j"] = "u";
        else je["j"] = e.j;
        je["m"] = mult;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j;
}

inline BracketMonomial bracket_monomial_from_json(const Json& j) {
    BracketMonomial m(j.at("n").get<int>(), j.value("sign", 1));
    for (const auto& je : j.at("edges")) {
        int i = je.at("i").get<int>();
        int jj = je.at("j").is_string() ? 0 : je.at("j").get<int>();
        m.multiply_edge(i, jj, je.value("m", 1));
    }
    return m;
}

inline Json bracket_poly_to_json(const BracketPoly& bp) {
    Json j;
    j["n"] = bp.n();
    j["char"] = bp.characteristic();
    Json terms = Json::array();
    for (const auto& [m, c] : bp.terms()) {
        Json t;
        t["c"] = c.str();
        t["monomial"] = bracket_monomial_to_json(m);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["covariant"] = v.ok;
    if (!v.ok) j["residual"] = poly_to_json(v.residual);
    return j;
}

inline Json membership_to_json(const Membership& m) {
    Json j;
    if (m.yes) {
        j["yes"] = true;
        Json expr = Json::array();
        for (const auto& term : m.certificate) {
            Json t;
            t["coeff"] = term.coeff.str();
            Json powers = Json::array();
            for (const auto& [g, e] : term.powers) {
                Json pw;
                pw["gen"] = g;
                pw["exp"] = e;
                powers.push_back(std::move(pw));
            }
            t["powers"] = std::move(powers);
            expr.push_back(std::move(t));
        }
        j["expression"] = std::move(expr);
    } else {
        j["no"] = true;
        j["slice_dim"] = m.slice_dim;
        j["rank"] = m.rank;
    }
    return j;
}

inline Json pipeline_to_json(const PipelineResult& r) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(g.str());
    j["bracket_generators"] = std::move(gens);
    Json dims = Json::array();
    for (const auto& [grade, dim] : r.fixed_dims) {
        Json d;
        d["degree"] = grade.first;
        d["order"] = grade.second;
        d["dim"] = dim;
        dims.push_back(std::move(d));
    }
    j["fixed_space_dims"] = std::move(dims);
    Json mins = Json::array();
    for (const auto& entry : r.minimal) {
        Json e;
        e["covariant"] = covariant_to_json(entry.cov);
        e["brackets"] = entry.brackets.str();
        e["fixed_vector"] = entry.xpoly;
        mins.push_back(std::move(e));
    }
    j["generators"] = std::move(mins);
    return j;
}

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

inline void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace binform
