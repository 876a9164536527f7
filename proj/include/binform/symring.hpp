#pragma once

// The section-1.3 pipeline: the linear S_n action on the bracket
// generators, fixed subspaces degree by degree (the modular-safe substitute
// for Reynolds averaging), minimal algebra generators, and the end-to-end
// separating-set computation.

#include "binform/bracket.hpp"
#include "binform/linalg.hpp"
#include "binform/transfer.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace binform {

struct not_linear : std::runtime_error {
    explicit not_linear(const std::string& what) : std::runtime_error(what) {}
};

struct LinearAction {
    int n = 0;
    long long p = 0;
    Ring xring;                          // x1..xt
    std::vector<BracketMonomial> gens;   // b_1..b_t
    std::vector<int> gen_order;          // x,z-order of each generator
    Mat sigma;                           // row i = image of b_i under (1 2 ... n)
    Mat tau;                             // row i = image of b_i under (1 2)
};

namespace detail {

inline Row express_in_generators(const BracketPoly& bp,
                                 const std::vector<BracketMonomial>& gens, long long p) {
    Row coeffs(gens.size(), Scalar::zero(p));
    for (const auto& [mono, c] : bp.terms()) {
        bool found = false;
        for (size_t j = 0; j < gens.size(); ++j) {
            if (mono == gens[j]) {
                coeffs[j] = c;
                found = true;
                break;
            }
        }
        if (!found)
            throw not_linear("permuted generator straightens outside the linear span: " +
                             mono.str());
    }
    return coeffs;
}

} // namespace detail

// permute point labels in each generator, straighten, and express the result
// as a linear combination of the generators
inline LinearAction action_matrices(int n, const std::vector<BracketMonomial>& gens,
                                    long long p) {
    LinearAction act;
    act.n = n;
    act.p = p;
    act.gens = gens;
    std::vector<std::string> names;
    for (size_t i = 1; i <= gens.size(); ++i) names.push_back("x" + std::to_string(i));
    act.xring = make_ring(std::move(names), p);
    for (const auto& g : gens) act.gen_order.push_back(g.order());

    std::vector<int> sigma(n + 1), tau(n + 1);
    for (int i = 1; i <= n; ++i) { sigma[i] = i % n + 1; tau[i] = i; }
    tau[1] = 2; tau[2] = 1;

    auto matrix_of = [&](const std::vector<int>& perm) {
        Mat m;
        for (const auto& g : gens) {
            BracketPoly img = straighten(BracketPoly::from(g.permuted(perm), p));
            m.push_back(detail::express_in_generators(img, gens, p));
        }
        return m;
    };
    act.sigma = matrix_of(sigma);
    act.tau = matrix_of(tau);
    return act;
}

struct GradedBasis {
    int degree = 0;   // a-degree (= regularity degree of the image)
    int order = 0;    // x,z-order of the image
    std::vector<Poly> basis;              // fixed vectors, polynomials in x1..xt
};

namespace detail {

inline void monomials_of_degree_rec(int t, int i, int left, ExpVec& cur,
                                    std::vector<ExpVec>& out) {
    if (i == t - 1) {
        cur[i] = static_cast<unsigned>(left);
        out.push_back(cur);
        cur[i] = 0;
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[i] = static_cast<unsigned>(e);
        monomials_of_degree_rec(t, i + 1, left - e, cur, out);
        cur[i] = 0;
    }
}

inline std::vector<ExpVec> monomials_of_degree(int t, int degree) {
    std::vector<ExpVec> out;
    if (t == 0) return out;
    ExpVec cur(t, 0);
    monomials_of_degree_rec(t, 0, degree, cur, out);
    return out;
}

// matrix of P -> P(A x) on the span of `monos`, columns indexed by input
// monomial; the action preserves the order grading, so images stay inside
inline Mat induced_matrix(const LinearAction& act, const Mat& a,
                          const std::vector<ExpVec>& monos,
                          const std::map<ExpVec, size_t>& index) {
    long long p = act.p;
    size_t t = act.gens.size();
    std::vector<Poly> lin;
    lin.reserve(t);
    for (size_t i = 0; i < t; ++i) {
        Poly li = Poly::zero(act.xring);
        for (size_t j = 0; j < t; ++j)
            if (!a[i][j].is_zero())
                li = li + Poly::variable(act.xring, static_cast<int>(j)).scaled(a[i][j]);
        lin.push_back(std::move(li));
    }
    Mat m = zero_matrix(monos.size(), monos.size(), p);
    for (size_t c = 0; c < monos.size(); ++c) {
        Poly img = Poly::constant(act.xring, 1);
        for (size_t i = 0; i < t; ++i)
            if (monos[c][i]) img = img * lin[i].pow(monos[c][i]);
        for (const auto& [e, s] : img.terms()) {
            auto it = index.find(e);
            if (it == index.end())
                throw std::logic_error("induced action left the graded block");
            m[it->second][c] = s;
        }
    }
    return m;
}

} // namespace detail

// basis of the S_n-fixed subspace of the degree-D homogeneous polynomials in
// x1..xt, split by the order grading: joint kernel of rho(sigma) - I and
// rho(tau) - I on each block
inline std::vector<GradedBasis> fixed_space(const LinearAction& act, int degree) {
    long long p = act.p;
    int t = static_cast<int>(act.gens.size());
    std::map<int, std::vector<ExpVec>> blocks;
    for (auto& mono : detail::monomials_of_degree(t, degree)) {
        int order = 0;
        for (int i = 0; i < t; ++i) order += act.gen_order[i] * static_cast<int>(mono[i]);
        blocks[order].push_back(std::move(mono));
    }
    std::vector<GradedBasis> out;
    for (auto& [order, monos] : blocks) {
        std::map<ExpVec, size_t> index;
        for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
        Mat ms = detail::induced_matrix(act, act.sigma, monos, index);
        Mat mt = detail::induced_matrix(act, act.tau, monos, index);
        size_t dim = monos.size();
        Mat stacked = zero_matrix(2 * dim, dim, p);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                stacked[i][j] = ms[i][j];
                stacked[dim + i][j] = mt[i][j];
            }
        for (size_t i = 0; i < dim; ++i) {
            stacked[i][i] -= Scalar::one(p);
            stacked[dim + i][i] -= Scalar::one(p);
        }
        GradedBasis gb;
        gb.degree = degree;
        gb.order = order;
        for (const Row& v : kernel(std::move(stacked), p)) {
            Poly poly = Poly::zero(act.xring);
            for (size_t i = 0; i < dim; ++i)
                if (!v[i].is_zero())
                    poly = poly + Poly::monomial(act.xring, monos[i], v[i]);
            gb.basis.push_back(std::move(poly));
        }
        if (!gb.basis.empty()) out.push_back(std::move(gb));
    }
    return out;
}

struct PipelineEntry {
    Covariant cov;              // leading coefficient normalized to 1
    BracketPoly brackets;       // the straightened bracket expression, for audit
    std::string xpoly;          // the fixed vector in x1..xt
};

struct PipelineResult {
    std::vector<BracketMonomial> generators;
    LinearAction action;
    std::map<std::pair<int, int>, int> fixed_dims;   // (degree, order) -> dim
    std::vector<PipelineEntry> minimal;
};

namespace detail {

struct GradedCandidate {
    int degree;
    int order;
    Poly cov;                // normalized
    BracketPoly brackets;
    std::string xpoly;
    GradedCandidate(int d, int m, Poly c, BracketPoly b, std::string x)
        : degree(d), order(m), cov(std::move(c)), brackets(std::move(b)), xpoly(std::move(x)) {}
};

} // namespace detail

// Minimal algebra generators: greedy in (a-degree, order) lex order; a
// candidate is kept iff it lies outside the span of all products of
// already-selected generators at its grade. Deterministic tie-break by
// canonical term order.
inline std::vector<PipelineEntry>
minimal_generators_graded(std::vector<detail::GradedCandidate> candidates, long long p) {
    std::sort(candidates.begin(), candidates.end(),
              [](const detail::GradedCandidate& a, const detail::GradedCandidate& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  if (a.order != b.order) return a.order < b.order;
                  return poly_less(a.cov, b.cov);
              });
    struct Selected {
        int degree;
        int order;
        Poly poly;
    };
    std::vector<Selected> chosen;
    std::vector<PipelineEntry> out;

    for (size_t i = 0; i < candidates.size();) {
        size_t j = i;
        while (j < candidates.size() && candidates[j].degree == candidates[i].degree &&
               candidates[j].order == candidates[i].order)
            ++j;
        int d = candidates[i].degree, m = candidates[i].order;

        // span of products of chosen generators landing at grade (d, m);
        // multi-factor products have every factor at strictly smaller degree
        std::map<ExpVec, size_t> support;
        std::vector<Poly> span_polys;
        std::vector<unsigned> expo(chosen.size(), 0);
        auto expand_product = [&]() {
            Poly prod;
            bool started = false;
            for (size_t k = 0; k < chosen.size(); ++k)
                for (unsigned c = 0; c < expo[k]; ++c) {
                    prod = started ? prod * chosen[k].poly : chosen[k].poly;
                    started = true;
                }
            if (started) span_polys.push_back(std::move(prod));
        };
        std::function<void(size_t, int, int)> walk = [&](size_t k, int dl, int ml) {
            if (dl == 0) {
                if (ml == 0) expand_product();
                return;
            }
            if (k == chosen.size()) return;
            int dmax = dl / std::max(1, chosen[k].degree);
            for (int e = 0; e <= dmax; ++e) {
                if (e * chosen[k].order > ml) break;
                expo[k] = static_cast<unsigned>(e);
                walk(k + 1, dl - e * chosen[k].degree, ml - e * chosen[k].order);
            }
            expo[k] = 0;
        };
        walk(0, d, m);

        SpanBasis span(p);
        for (const Poly& sp : span_polys)
            for (const auto& [e, c] : sp.terms()) support.emplace(e, support.size());
        for (size_t c = i; c < j; ++c)
            for (const auto& [e, s] : candidates[c].cov.terms())
                support.emplace(e, support.size());
        auto coords = [&](const Poly& poly) {
            Row v(support.size(), Scalar::zero(p));
            for (const auto& [e, c] : poly.terms()) v[support.at(e)] = c;
            return v;
        };
        for (const Poly& sp : span_polys) span.insert(coords(sp));

        for (size_t c = i; c < j; ++c) {
            if (span.insert(coords(candidates[c].cov))) {
                PipelineEntry entry;
                entry.cov.poly = candidates[c].cov;
                entry.cov.degree = d;
                entry.cov.order = m;
                entry.brackets = candidates[c].brackets;
                entry.xpoly = candidates[c].xpoly;
                out.push_back(std::move(entry));
                chosen.push_back({d, m, candidates[c].cov});
            }
        }
        i = j;
    }
    return out;
}

// enumerate_generators -> action_matrices -> fixed_space (degrees <= bound)
// -> substitute generators -> straighten -> to_coefficients ->
// minimal_generators, with every output certified
inline PipelineResult separating_pipeline(int n, long long p, int degree_bound) {
    PipelineResult res;
    res.generators = enumerate_generators(n);
    res.action = action_matrices(n, res.generators, p);
    Transfer transfer(n, p);
    const Ring& root = transfer.root_ring();

    std::map<ExpVec, BracketPoly> straightened_cache;
    std::map<ExpVec, Poly> expanded_cache;
    auto bracket_product = [&](const ExpVec& mono) -> const BracketPoly& {
        auto it = straightened_cache.find(mono);
        if (it != straightened_cache.end()) return it->second;
        BracketMonomial prod(n, 1);
        for (size_t i = 0; i < mono.size(); ++i)
            for (unsigned c = 0; c < mono[i]; ++c)
                prod = prod * res.generators[i];
        return straightened_cache.emplace(mono, straighten(BracketPoly::from(prod, p)))
            .first->second;
    };
    auto expanded_product = [&](const ExpVec& mono) -> const Poly& {
        auto it = expanded_cache.find(mono);
        if (it != expanded_cache.end()) return it->second;
        return expanded_cache.emplace(mono, expand(bracket_product(mono), root)).first->second;
    };

    std::vector<detail::GradedCandidate> candidates;
    for (int deg = 1; deg <= degree_bound; ++deg) {
        for (const GradedBasis& gb : fixed_space(res.action, deg)) {
            res.fixed_dims[{gb.degree, gb.order}] = static_cast<int>(gb.basis.size());
            for (const Poly& xvec : gb.basis) {
                BracketPoly brackets(n, p);
                Poly rootpoly = Poly::zero(root);
                for (const auto& [e, c] : xvec.terms()) {
                    for (const auto& [mono, mc] : bracket_product(e).terms())
                        brackets.add(mono, mc * c);
                    rootpoly = rootpoly + expanded_product(e).scaled(c);
                }
                if (rootpoly.is_zero()) continue;   // fixed vector inside the syzygy ideal
                Poly cov = transfer.to_coefficients(rootpoly, gb.degree, gb.order);
                candidates.emplace_back(gb.degree, gb.order, cov.normalized_leading(),
                                        std::move(brackets), xvec.str());
            }
        }
    }

    res.minimal = minimal_generators_graded(std::move(candidates), p);
    FormSpec spec = transfer.form_spec();
    for (auto& entry : res.minimal) {
        Covariant cert = certify(entry.cov.poly, spec);
        entry.cov = cert;
    }
    return res;
}

// convenience wrapper matching the spec's minimal_generators(bases) shape:
// input polynomials with certified grades, output the minimal subset
inline std::vector<Poly> minimal_generators(const std::vector<Covariant>& graded, long long p) {
    std::vector<detail::GradedCandidate> cands;
    for (const auto& c : graded)
        cands.emplace_back(c.degree, c.order, c.poly.normalized_leading(),
                           BracketPoly(2, p), std::string());
    std::vector<Poly> out;
    for (auto& e : minimal_generators_graded(std::move(cands), p)) out.push_back(e.cov.poly);
    return out;
}

} // namespace binform
