#pragma once

// The Psi correspondence: symmetrization of bracket polynomials over S_n
// and the inverse transfer expressing symmetric regular root polynomials as
// covariants in the form coefficients a_0..a_n.
//
// Psi is implemented through the product form f = prod (mu_i x - nu_i z):
// Psi(a_k) is the x^k z^(n-k) coefficient of the expanded product, so the
// convention is self-consistent by construction.

#include "binform/bracket.hpp"
#include "binform/covariant.hpp"
#include "binform/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace binform {

struct no_solution : std::runtime_error {
    no_solution() : std::runtime_error(
        "polynomial is not a Psi-image (non-regular or non-symmetric input)") {}
};

struct SymResult {
    BracketPoly poly;
    bool zero_orbit_sum = false;   // nonzero input, identically zero orbit sum
};

// full orbit sum over S_n; each permuted monomial is sign-normalized
inline SymResult symmetrize(const BracketPoly& b) {
    BracketPoly out(b.n(), b.characteristic());
    std::vector<int> base(b.n());
    std::iota(base.begin(), base.end(), 1);
    std::vector<int> perm(b.n() + 1, 0);
    std::vector<int> img = base;
    std::sort(img.begin(), img.end());
    do {
        for (int i = 1; i <= b.n(); ++i) perm[i] = img[i - 1];
        for (const auto& [m, c] : b.terms()) out.add(m.permuted(perm), c);
    } while (std::next_permutation(img.begin(), img.end()));
    return {out, out.is_zero() && !b.is_zero()};
}

inline SymResult symmetrize(const BracketMonomial& m, long long p) {
    return symmetrize(BracketPoly::from(m, p));
}

// invariance under the generators (1 2) and (1 2 ... n) implies symmetry
inline bool is_symmetric(const Poly& p, int n) {
    const Ring& root = p.ring();
    auto permute_vars = [&](const std::vector<int>& perm) {
        std::map<int, Poly> bind;
        for (int i = 1; i <= n; ++i) {
            bind[i - 1] = Poly::variable(root, perm[i] - 1);            // mu_i
            bind[n + i - 1] = Poly::variable(root, n + perm[i] - 1);    // nu_i
        }
        return p.substitute(bind, root);
    };
    std::vector<int> tau(n + 1), sigma(n + 1);
    for (int i = 1; i <= n; ++i) tau[i] = sigma[i] = i;
    if (n >= 2) {
        tau[1] = 2; tau[2] = 1;
        for (int i = 1; i < n; ++i) sigma[i] = i + 1;
        sigma[n] = 1;
    }
    return permute_vars(tau) == p && permute_vars(sigma) == p;
}

// a-monomials of fixed degree and weight, as exponent vectors rho_0..rho_n
inline void isobaric_monomials_rec(int n, int i, int degree_left, long long weight_left,
                                   std::vector<unsigned>& cur,
                                   std::vector<std::vector<unsigned>>& out) {
    if (i == n) {
        if (weight_left == static_cast<long long>(n) * degree_left) {
            cur[n] = static_cast<unsigned>(degree_left);
            out.push_back(cur);
            cur[n] = 0;
        }
        return;
    }
    for (int r = 0; r <= degree_left; ++r) {
        long long w = weight_left - static_cast<long long>(i) * r;
        if (w < 0) break;
        if (w > static_cast<long long>(n) * (degree_left - r)) continue;
        cur[i] = static_cast<unsigned>(r);
        isobaric_monomials_rec(n, i + 1, degree_left - r, w, cur, out);
        cur[i] = 0;
    }
}

inline std::vector<std::vector<unsigned>> isobaric_monomials(int n, int degree, long long weight) {
    std::vector<std::vector<unsigned>> out;
    if (weight < 0 || weight > static_cast<long long>(n) * degree) return out;
    std::vector<unsigned> cur(n + 1, 0);
    isobaric_monomials_rec(n, 0, degree, weight, cur, out);
    return out;
}

class Transfer {
public:
    Transfer(int n, long long p)
        : n_(n), p_(p), root_(make_root_ring(n, p)), spec_(make_form_spec(n, p)) {
        Poly prod = Poly::constant(root_, 1);
        Poly xv = Poly::variable(root_, "x");
        Poly zv = Poly::variable(root_, "z");
        for (int i = 1; i <= n; ++i) {
            Poly mu = Poly::variable(root_, i - 1);
            Poly nu = Poly::variable(root_, n + i - 1);
            prod = prod * (mu * xv - nu * zv);
        }
        psi_a_.reserve(n + 1);
        for (int k = 0; k <= n; ++k)
            psi_a_.push_back(prod.coeff_of2(root_->index_of("x"), k,
                                            root_->index_of("z"), n - k));
    }

    const Ring& root_ring() const { return root_; }
    const FormSpec& form_spec() const { return spec_; }
    const Poly& psi_a(int k) const { return psi_a_.at(k); }

    // Psi of a polynomial in a_0..a_n, x, z (x, z pass through)
    Poly psi(const Poly& c) const {
        if (!same_ring(c.ring(), spec_.ring)) throw ring_mismatch();
        Poly out = Poly::zero(root_);
        int xi = root_->index_of("x"), zi = root_->index_of("z");
        for (const auto& [e, coeff] : c.terms()) {
            if (e[spec_.t()]) throw std::invalid_argument("Psi input must not involve t");
            Poly term = Poly::constant(root_, coeff);
            for (int k = 0; k <= n_; ++k)
                if (e[spec_.a(k)]) term = term * psi_image_of_power(k, e[spec_.a(k)]);
            ExpVec xz(root_->size(), 0);
            xz[xi] = e[spec_.x()];
            xz[zi] = e[spec_.z()];
            out = out + term * Poly::monomial(root_, xz, Scalar::one(p_));
        }
        return out;
    }

    // the unique C with Psi(C) = p, for p symmetric regular of degree d and
    // x,z-degree r; throws no_solution when p is not in the image
    Poly to_coefficients(const Poly& rootpoly, int d, int r) {
        if (!same_ring(rootpoly.ring(), root_)) throw ring_mismatch();
        if (rootpoly.is_zero()) return Poly::zero(spec_.ring);
        int xi = root_->index_of("x"), zi = root_->index_of("z");
        if (rootpoly.homogeneous_degree_in({xi, zi}) != std::optional<unsigned>(r))
            throw no_solution();
        Poly out = Poly::zero(spec_.ring);
        for (int i = 0; i <= r; ++i) {
            Poly slice = rootpoly.coeff_of2(xi, i, zi, r - i);
            if (slice.is_zero()) continue;
            // the mu-degree of an isobaric Psi-image equals its weight
            long long w = mu_degree(slice);
            if (w < 0) throw no_solution();   // mixed mu-degrees in one slice
            Row coeffs = solve_slice(d, w, slice);
            const auto& cands = system(d, w).monomials;
            for (size_t k = 0; k < cands.size(); ++k) {
                if (coeffs[k].is_zero()) continue;
                ExpVec e(spec_.ring->size(), 0);
                for (int j = 0; j <= n_; ++j) e[spec_.a(j)] = cands[k][j];
                e[spec_.x()] = i;
                e[spec_.z()] = r - i;
                out = out + Poly::monomial(spec_.ring, e, coeffs[k]);
            }
        }
        return out;
    }

private:
    struct Prepared {
        std::vector<std::vector<unsigned>> monomials;   // candidate a-exponents
        std::vector<Poly> images;                       // Psi images (mu,nu only)
        std::map<ExpVec, size_t> rows;                  // union support
        std::vector<size_t> pivot_rows;
        Mat small;                                      // pivot-row restriction
    };

    const Poly& psi_image_of_power(int k, unsigned e) const {
        auto& cache = psi_pow_[k];
        if (cache.empty()) cache.push_back(Poly::constant(root_, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * psi_a_[k]);
        return cache[e];
    }

    long long mu_degree(const Poly& slice) const {
        std::optional<unsigned> deg;
        for (const auto& [e, c] : slice.terms()) {
            unsigned d = 0;
            for (int i = 0; i < n_; ++i) d += e[i];
            if (!deg) deg = d;
            else if (*deg != d) return -1;
        }
        return deg ? static_cast<long long>(*deg) : -1;
    }

    const Prepared& system(int d, long long w) {
        auto key = std::make_pair(d, w);
        auto it = systems_.find(key);
        if (it != systems_.end()) return it->second;
        Prepared prep;
        prep.monomials = isobaric_monomials(n_, d, w);
        for (const auto& mono : prep.monomials) {
            Poly img = Poly::constant(root_, 1);
            for (int k = 0; k <= n_; ++k)
                if (mono[k]) img = img * psi_image_of_power(k, mono[k]);
            for (const auto& [e, c] : img.terms())
                prep.rows.emplace(e, 0);
            prep.images.push_back(std::move(img));
        }
        size_t idx = 0;
        for (auto& [e, r] : prep.rows) r = idx++;
        // pick a row subset of full column rank: pivot columns of the transpose
        Mat tr = zero_matrix(prep.images.size(), prep.rows.size(), p_);
        for (size_t c = 0; c < prep.images.size(); ++c)
            for (const auto& [e, s] : prep.images[c].terms())
                tr[c][prep.rows.at(e)] = s;
        Mat tr_copy = tr;
        prep.pivot_rows = rref(tr_copy);
        prep.small = zero_matrix(prep.pivot_rows.size(), prep.images.size(), p_);
        for (size_t r = 0; r < prep.pivot_rows.size(); ++r)
            for (size_t c = 0; c < prep.images.size(); ++c)
                prep.small[r][c] = tr[c][prep.pivot_rows[r]];
        return systems_.emplace(key, std::move(prep)).first->second;
    }

    Row solve_slice(int d, long long w, const Poly& slice) {
        const Prepared& prep = system(d, w);
        if (prep.monomials.empty()) throw no_solution();
        // right-hand side restricted to the pivot rows
        Row rhs(prep.pivot_rows.size(), Scalar::zero(p_));
        std::map<size_t, Scalar> full_rhs;
        for (const auto& [e, c] : slice.terms()) {
            auto it = prep.rows.find(e);
            if (it == prep.rows.end()) throw no_solution();   // support outside the image
            full_rhs.emplace(it->second, c);
        }
        for (size_t r = 0; r < prep.pivot_rows.size(); ++r) {
            auto it = full_rhs.find(prep.pivot_rows[r]);
            if (it != full_rhs.end()) rhs[r] = it->second;
        }
        auto sol = solve(prep.small, rhs, p_);
        if (!sol) throw no_solution();
        // exact verification over the full support
        Poly recon = Poly::zero(root_);
        for (size_t c = 0; c < prep.images.size(); ++c)
            if (!(*sol)[c].is_zero()) recon = recon + prep.images[c].scaled((*sol)[c]);
        if (recon != slice) throw no_solution();
        return *sol;
    }

    int n_;
    long long p_;
    Ring root_;
    FormSpec spec_;
    std::vector<Poly> psi_a_;
    mutable std::map<int, std::vector<Poly>> psi_pow_;
    std::map<std::pair<int, long long>, Prepared> systems_;
};

} // namespace binform
