#pragma once

// Graded algebra-membership certificates and operator-saturation sweeps.
// Membership is per-slice exact linear algebra: candidate monomials in the
// generators are enumerated by matching a-degree (polynomial equality takes
// care of the order grading), the system is solved exactly, and a "no" is a
// proof by rank.

#include "binform/covariant.hpp"
#include "binform/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace binform {

struct CertTerm {
    Scalar coeff;
    std::vector<std::pair<int, int>> powers;   // (generator index, exponent), exponent >= 1
};

struct Membership {
    bool yes = false;
    std::vector<CertTerm> certificate;   // expands exactly to the target when yes
    int slice_dim = 0;                   // dim of the span of candidate monomials
    int rank = 0;                        // rank of the augmented system
    std::vector<ExpVec> candidates;      // exponent vectors over the generators
    std::vector<Poly> candidate_polys;
};

namespace detail {

inline void degree_matched_monomials_rec(const std::vector<Covariant>& gens, size_t k,
                                         int degree_left, ExpVec& cur,
                                         std::vector<ExpVec>& out) {
    if (k == gens.size()) {
        if (degree_left == 0) out.push_back(cur);
        return;
    }
    int dmax = degree_left / gens[k].degree;
    for (int e = 0; e <= dmax; ++e) {
        cur[k] = static_cast<unsigned>(e);
        degree_matched_monomials_rec(gens, k + 1, degree_left - e * gens[k].degree, cur, out);
    }
    cur[k] = 0;
}

inline std::vector<ExpVec> degree_matched_monomials(const std::vector<Covariant>& gens,
                                                    int degree) {
    for (const auto& g : gens)
        if (g.degree < 1)
            throw std::invalid_argument("membership generators must have a-degree >= 1");
    std::vector<ExpVec> out;
    ExpVec cur(gens.size(), 0);
    degree_matched_monomials_rec(gens, 0, degree, cur, out);
    return out;
}

inline Poly product_of(const std::vector<Covariant>& gens, const ExpVec& expo) {
    Poly prod;
    bool started = false;
    for (size_t k = 0; k < gens.size(); ++k) {
        if (!expo[k]) continue;
        Poly part = gens[k].poly.pow(expo[k]);
        prod = started ? prod * part : part;
        started = true;
    }
    if (!started) throw std::logic_error("empty generator monomial");
    return prod;
}

} // namespace detail

// Decides target in k[gens] at the target's a-degree. A "yes" comes with a
// certificate whose expansion equals the target exactly; a "no" carries the
// rank data of the inconsistent system.
inline Membership in_algebra(const Covariant& target, const std::vector<Covariant>& gens) {
    long long p = target.spec.p;
    Membership res;
    res.candidates = detail::degree_matched_monomials(gens, target.degree);
    std::map<ExpVec, size_t> support;
    for (const auto& expo : res.candidates) {
        Poly prod = detail::product_of(gens, expo);
        for (const auto& [e, c] : prod.terms()) support.emplace(e, support.size());
        res.candidate_polys.push_back(std::move(prod));
    }
    for (const auto& [e, c] : target.poly.terms()) support.emplace(e, support.size());

    Mat a = zero_matrix(support.size(), res.candidate_polys.size(), p);
    for (size_t col = 0; col < res.candidate_polys.size(); ++col)
        for (const auto& [e, c] : res.candidate_polys[col].terms())
            a[support.at(e)][col] = c;
    Row b(support.size(), Scalar::zero(p));
    for (const auto& [e, c] : target.poly.terms()) b[support.at(e)] = c;

    res.slice_dim = static_cast<int>(rank(a));
    Mat aug = a;
    for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    res.rank = static_cast<int>(rank(std::move(aug)));

    auto sol = solve(a, b, p);
    if (!sol) {
        res.yes = false;
        return res;
    }
    res.yes = true;
    for (size_t k = 0; k < sol->size(); ++k) {
        if ((*sol)[k].is_zero()) continue;
        CertTerm term;
        term.coeff = (*sol)[k];
        for (size_t g = 0; g < gens.size(); ++g)
            if (res.candidates[k][g])
                term.powers.push_back({static_cast<int>(g),
                                       static_cast<int>(res.candidates[k][g])});
        res.certificate.push_back(std::move(term));
    }
    return res;
}

inline Poly expand_certificate(const Membership& m, const std::vector<Covariant>& gens,
                               const Ring& ring) {
    Poly out = Poly::zero(ring);
    for (const auto& term : m.certificate) {
        Poly prod = Poly::constant(ring, term.coeff);
        for (const auto& [g, e] : term.powers)
            prod = prod * gens[g].poly.pow(static_cast<unsigned>(e));
        out = out + prod;
    }
    return out;
}

// a basis of the (degree, order)-graded slice of k[gens]
inline std::vector<Covariant> algebra_slice(const std::vector<Covariant>& gens, int degree,
                                            int order) {
    long long p = gens.empty() ? 0 : gens[0].spec.p;
    std::vector<Covariant> basis;
    if (gens.empty()) return basis;
    SpanBasis span(p);
    std::map<ExpVec, size_t> support;
    std::vector<Poly> polys;
    for (const auto& expo : detail::degree_matched_monomials(gens, degree)) {
        int m = 0;
        for (size_t k = 0; k < gens.size(); ++k) m += static_cast<int>(expo[k]) * gens[k].order;
        if (m != order) continue;
        polys.push_back(detail::product_of(gens, expo));
        for (const auto& [e, c] : polys.back().terms()) support.emplace(e, support.size());
    }
    for (const auto& poly : polys) {
        Row v(support.size(), Scalar::zero(p));
        for (const auto& [e, c] : poly.terms()) v[support.at(e)] = c;
        if (span.insert(std::move(v)))
            basis.push_back(Covariant{gens[0].spec, poly, degree, order,
                                      (static_cast<long long>(gens[0].spec.n) * degree - order) / 2});
    }
    return basis;
}

// Applies the operator to a basis of every (degree <= max_degree) graded
// slice of k[gens] (the operator is linear, so slice images are spanned by
// basis images) and returns the nonzero covariants outside the algebra.
inline std::vector<Covariant> operator_closure_step(const std::vector<Covariant>& gens,
                                                    long long p, int l_max, int max_degree) {
    if (p <= 0) throw std::invalid_argument("operator closure needs positive characteristic");
    std::vector<Covariant> found;
    if (gens.empty()) return found;
    const FormSpec& spec = gens[0].spec;

    // reachable grades
    std::map<std::pair<int, int>, bool> grades;
    std::function<void(size_t, int, int)> mark = [&](size_t k, int d, int m) {
        if (d > max_degree) return;
        if (d >= 1) grades[{d, m}] = true;
        if (k == gens.size()) return;
        mark(k + 1, d, m);
        mark(k, d + gens[k].degree, m + gens[k].order);
    };
    mark(0, 0, 0);

    for (const auto& [grade, unused] : grades) {
        auto [d, m] = grade;
        (void)unused;
        std::vector<Covariant> slice = algebra_slice(gens, d, m);
        for (const Covariant& q : slice) {
            for (int l = 1; l <= l_max && l < p && 2 * l <= q.order; ++l) {
                if ((q.order - l + 1) % p != 0) continue;
                OperatorResult r = rovetta_operator(q, l, spec);
                if (r.is_zero) continue;
                Covariant cand = r.cov;
                // outside the algebra (and the previously found images)?
                std::vector<Covariant> check = gens;
                for (const auto& f : found) check.push_back(f);
                if (!in_algebra(cand, check).yes) {
                    cand.poly = cand.poly.normalized_leading();
                    found.push_back(std::move(cand));
                }
            }
        }
    }
    return found;
}

// the char-3 quartic data the c_{0,6} unreachability argument needs
struct QuarticChar3Fixtures {
    Covariant c01;   // a2
    Covariant c41;   // f
    Covariant c43;
    Covariant c63;
    Covariant c06;   // the degree-6 invariant
};

struct UnreachabilityReport {
    std::vector<std::pair<int, int>> forced;   // (m, l) pairs satisfying the constraints
    int slice_dim = 0;                         // dim of the degree-6 order-4 slice
    int image_rank = 0;                        // rank of the operator images
    bool c06_in_image_span = false;
    bool candidate1_matches = false;           // operator on c01^5 c41 gives c06?
    bool candidate2_matches = false;           // operator on c01^3 c43 gives c06?
    Poly image1, image2;
};

// Reproduces the paper's c_{0,6} analysis: the (m, l) solver forces (4, 2);
// operator images of the whole degree-6 order-4 slice of
// k[c01, c41, c43, c63] never span c06; the two explicit candidates fail.
inline UnreachabilityReport unreachability_check_c06(const QuarticChar3Fixtures& fx,
                                                     int m_bound = 12) {
    const FormSpec& spec = fx.c01.spec;
    if (spec.p != 3 || spec.n != 4)
        throw std::invalid_argument("c06 unreachability is a char-3 quartic statement");
    UnreachabilityReport rep;
    // order-0 degree-6 target: need m - 2l = 0, 1 <= l <= m/2, l < 3, 3 | (m - l + 1)
    for (int m = 0; m <= m_bound; ++m)
        for (int l = 1; 2 * l <= m && l < 3; ++l)
            if (m - 2 * l == 0 && (m - l + 1) % 3 == 0) rep.forced.push_back({m, l});

    std::vector<Covariant> gens = {fx.c01, fx.c41, fx.c43, fx.c63};
    std::vector<Covariant> slice = algebra_slice(gens, 6, 4);
    rep.slice_dim = static_cast<int>(slice.size());

    std::map<ExpVec, size_t> support;
    std::vector<Poly> images;
    for (const Covariant& q : slice) {
        OperatorResult r = rovetta_operator(q, 2, spec);
        if (r.is_zero) continue;
        for (const auto& [e, c] : r.cov.poly.terms()) support.emplace(e, support.size());
        images.push_back(r.cov.poly);
    }
    for (const auto& [e, c] : fx.c06.poly.terms()) support.emplace(e, support.size());
    SpanBasis span(spec.p);
    auto coords = [&](const Poly& poly) {
        Row v(support.size(), Scalar::zero(spec.p));
        for (const auto& [e, c] : poly.terms()) v[support.at(e)] = c;
        return v;
    };
    for (const Poly& img : images)
        if (span.insert(coords(img))) ++rep.image_rank;
    rep.c06_in_image_span = span.contains(coords(fx.c06.poly));

    Covariant cand1 = cov_mul(cov_mul(fx.c01, fx.c01), fx.c01);
    cand1 = cov_mul(cov_mul(cand1, fx.c01), fx.c01);
    cand1 = cov_mul(cand1, fx.c41);   // c01^5 c41
    Covariant cand2 = cov_mul(cov_mul(fx.c01, fx.c01), cov_mul(fx.c01, fx.c43));   // c01^3 c43
    OperatorResult r1 = rovetta_operator(cand1, 2, spec);
    OperatorResult r2 = rovetta_operator(cand2, 2, spec);
    rep.image1 = r1.cov.poly;
    rep.image2 = r2.cov.poly;
    rep.candidate1_matches = proportional(r1.cov.poly, fx.c06.poly);
    rep.candidate2_matches = proportional(r2.cov.poly, fx.c06.poly);
    return rep;
}

} // namespace binform
