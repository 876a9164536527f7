#pragma once

// Covariants of a binary form in coefficient space. SL2-covariance is
// verified through the torus/unipotent decomposition: the torus part via
// Lemma-1 weight bookkeeping (isobaric slices, nd - 2w = m), the two
// unipotent families via polynomial identities in one symbolic parameter t.

#include "binform/poly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace binform {

struct condition_failed : std::domain_error {
    explicit condition_failed(const std::string& what) : std::domain_error(what) {}
};

struct non_isobaric : std::domain_error {
    non_isobaric() : std::domain_error("x,z-slice is not isobaric") {}
};

// the coefficient ring of a degree-n form: a0..an, x, z and a spare
// unipotent parameter t (the paper's mu, renamed to avoid the root variables)
struct FormSpec {
    int n = 0;
    long long p = 0;
    Ring ring;

    int a(int i) const { return i; }
    int x() const { return n + 1; }
    int z() const { return n + 2; }
    int t() const { return n + 3; }
};

inline FormSpec make_form_spec(int n, long long p) {
    if (n < 1) throw std::invalid_argument("form degree must be >= 1");
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("x");
    names.push_back("z");
    names.push_back("t");
    return FormSpec{n, p, make_ring(std::move(names), p)};
}

// f = sum a_i x^i z^(n-i)
inline Poly binary_form(const FormSpec& s) {
    Poly f = Poly::zero(s.ring);
    for (int i = 0; i <= s.n; ++i) {
        ExpVec e(s.ring->size(), 0);
        e[s.a(i)] = 1;
        e[s.x()] = i;
        e[s.z()] = s.n - i;
        f = f + Poly::monomial(s.ring, e, Scalar::one(s.p));
    }
    return f;
}

enum class Unipotent { upper, lower };   // x -> x + t z  /  z -> t x + z

// a'_i(a, t): coefficients of f after the unipotent substitution,
// recollected on x^i z^(n-i)
inline std::vector<Poly> transformed_coefficients(const FormSpec& s, Unipotent kind) {
    Poly f = binary_form(s);
    std::map<int, Poly> bind;
    Poly xv = Poly::variable(s.ring, s.x());
    Poly zv = Poly::variable(s.ring, s.z());
    Poly tv = Poly::variable(s.ring, s.t());
    if (kind == Unipotent::upper) bind[s.x()] = xv + tv * zv;
    else                          bind[s.z()] = tv * xv + zv;
    Poly g = f.substitute(bind, s.ring);
    std::vector<Poly> out;
    out.reserve(s.n + 1);
    for (int i = 0; i <= s.n; ++i)
        out.push_back(g.coeff_of2(s.x(), i, s.z(), s.n - i));
    return out;
}

inline std::vector<int> a_vars(const FormSpec& s) {
    std::vector<int> v(s.n + 1);
    for (int i = 0; i <= s.n; ++i) v[i] = s.a(i);
    return v;
}

inline unsigned require_homogeneous(const Poly& c, const std::vector<int>& vars,
                                    const char* what) {
    auto d = c.homogeneous_degree_in(vars);
    if (!d) throw std::invalid_argument(std::string("candidate is not homogeneous in ") + what);
    return *d;
}

// weight of an isobaric a-polynomial: sum i * rho_i, uniform over terms
inline long long isobaric_weight(const Poly& c, const FormSpec& s) {
    std::optional<long long> w;
    for (const auto& [e, coeff] : c.terms()) {
        long long tw = 0;
        for (int i = 0; i <= s.n; ++i) tw += static_cast<long long>(i) * e[s.a(i)];
        if (!w) w = tw;
        else if (*w != tw) throw non_isobaric();
    }
    if (!w) throw std::domain_error("zero polynomial has no weight");
    return *w;
}

inline unsigned degree_of(const Poly& c, const FormSpec& s) {
    return require_homogeneous(c, a_vars(s), "the coefficients a_i");
}
inline unsigned order_of(const Poly& c, const FormSpec& s) {
    return require_homogeneous(c, {s.x(), s.z()}, "x, z");
}

// weight of the z^m slice; every nonzero slice C_i must have weight w + i
inline long long weight_of(const Poly& c, const FormSpec& s) {
    unsigned m = order_of(c, s);
    std::optional<long long> w;
    for (unsigned i = 0; i <= m; ++i) {
        Poly slice = c.coeff_of2(s.x(), i, s.z(), m - i);
        if (slice.is_zero()) continue;
        long long wi = isobaric_weight(slice, s) - i;
        if (!w) w = wi;
        else if (*w != wi) throw non_isobaric();
    }
    if (!w) throw std::domain_error("zero polynomial has no weight");
    return *w;
}

struct Covariant {
    FormSpec spec;
    Poly poly;
    int degree = 0;   // d: total degree in the a_i
    int order = 0;    // m: total degree in x, z
    long long weight = 0;
};

// certify the (d, m, w) triple, enforcing the Lemma-1 torus bookkeeping
inline Covariant certify(const Poly& c, const FormSpec& s) {
    if (c.is_zero()) throw std::domain_error("cannot certify the zero polynomial");
    int d = static_cast<int>(degree_of(c, s));
    int m = static_cast<int>(order_of(c, s));
    long long w = weight_of(c, s);
    if (static_cast<long long>(s.n) * d - 2 * w != m)
        throw std::domain_error("nd - 2w != m: not torus-covariant");
    return Covariant{s, c, d, m, w};
}

inline Covariant cov_mul(const Covariant& a, const Covariant& b) {
    if (!same_ring(a.spec.ring, b.spec.ring)) throw ring_mismatch();
    return Covariant{a.spec, a.poly * b.poly, a.degree + b.degree, a.order + b.order,
                     a.weight + b.weight};
}

struct Verdict {
    bool ok = false;
    Poly residual;   // zero when ok
};

namespace detail {

inline bool torus_conditions(const Poly& c, const FormSpec& s, unsigned d, unsigned m) {
    std::optional<long long> w;
    for (unsigned i = 0; i <= m; ++i) {
        Poly slice = c.coeff_of2(s.x(), i, s.z(), m - i);
        if (slice.is_zero()) continue;
        long long wi;
        try {
            wi = isobaric_weight(slice, s);
        } catch (const non_isobaric&) {
            return false;
        }
        if (!w) w = wi - i;
        else if (*w != wi - i) return false;
    }
    return w && static_cast<long long>(s.n) * d - 2 * *w == static_cast<long long>(m);
}

// C(a'(t), phi_t^{-1}(x, z)) - C(a, x, z) for one unipotent family
inline Poly unipotent_residual(const Poly& c, const FormSpec& s, Unipotent kind) {
    std::vector<Poly> aprime = transformed_coefficients(s, kind);
    std::map<int, Poly> bind;
    for (int i = 0; i <= s.n; ++i) bind[s.a(i)] = aprime[i];
    Poly xv = Poly::variable(s.ring, s.x());
    Poly zv = Poly::variable(s.ring, s.z());
    Poly tv = Poly::variable(s.ring, s.t());
    if (kind == Unipotent::upper) bind[s.x()] = xv - tv * zv;
    else                          bind[s.z()] = zv - tv * xv;
    return c.substitute(bind, s.ring) - c;
}

} // namespace detail

// exact SL2-covariance check; no randomized specialization anywhere
inline Verdict is_covariant(const Poly& c, const FormSpec& s) {
    if (c.is_zero()) return {true, Poly::zero(s.ring)};
    if (c.degree_in(s.t()) != 0)
        throw std::invalid_argument("candidate must not involve the parameter t");
    unsigned d = degree_of(c, s);
    unsigned m = order_of(c, s);
    Poly upper = detail::unipotent_residual(c, s, Unipotent::upper);
    if (!upper.is_zero()) return {false, upper};
    Poly lower = detail::unipotent_residual(c, s, Unipotent::lower);
    if (!lower.is_zero()) return {false, lower};
    if (!detail::torus_conditions(c, s, d, m)) return {false, Poly::zero(s.ring)};
    return {true, Poly::zero(s.ring)};
}

// Delta = sum_{i=1}^n i a_i d/d a_{i-1}
inline Poly hilbert_delta(const Poly& c, const FormSpec& s) {
    Poly out = Poly::zero(s.ring);
    for (int i = 1; i <= s.n; ++i)
        out = out + Poly::variable(s.ring, s.a(i)).scaled(Scalar::of_int(s.p, i)) *
                        c.partial(s.a(i - 1));
    return out;
}

// D = sum_{i=0}^{n-1} (n-i) a_i d/d a_{i+1}
inline Poly hilbert_D(const Poly& c, const FormSpec& s) {
    Poly out = Poly::zero(s.ring);
    for (int i = 0; i < s.n; ++i)
        out = out + Poly::variable(s.ring, s.a(i)).scaled(Scalar::of_int(s.p, s.n - i)) *
                        c.partial(s.a(i + 1));
    return out;
}

struct HilbertReport {
    bool isobaric_ok = false;
    bool d_ok = false;
    bool delta_ok = false;
    bool applicable = false;   // p == 0 or p > nd + m
    bool all_ok() const { return isobaric_ok && d_ok && delta_ok; }
};

// the three Theorem-2 conditions plus the applicability predicate; makes
// no covariance claim when applicable is false
inline HilbertReport hilbert_conditions(const Poly& c, const FormSpec& s) {
    HilbertReport r;
    unsigned d = degree_of(c, s);
    unsigned m = order_of(c, s);
    r.isobaric_ok = detail::torus_conditions(c, s, d, m);
    r.d_ok = hilbert_D(c, s) == Poly::variable(s.ring, s.x()) * c.partial(s.z());
    r.delta_ok = hilbert_delta(c, s) == Poly::variable(s.ring, s.z()) * c.partial(s.x());
    r.applicable = s.p == 0 || s.p > static_cast<long long>(s.n) * d + m;
    return r;
}

struct OperatorResult {
    Covariant cov;          // order m0 - 2l, degree d0, weight w0 + l
    bool is_zero = false;
    bool boundary = false;  // l == m0/2, the reading the octavic application forces
};

// C = (1/z^l) d^l Q / dx^l, a covariant exactly when p | (m0 - l + 1).
// The congruence is checked before dividing; NotDivisible afterwards would
// mean a bug, since the proof forces p | i!/l! on the offending range.
inline OperatorResult rovetta_operator(const Covariant& q, int l, const FormSpec& s) {
    if (s.p <= 0) throw std::invalid_argument("the operator needs positive characteristic");
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    if (l >= s.p) throw std::invalid_argument("l must be smaller than p");
    if (2 * l > q.order) throw std::invalid_argument("l must be at most m0/2");
    if ((q.order - l + 1) % s.p != 0)
        throw condition_failed("p does not divide m0 - l + 1 (m0 = " +
                               std::to_string(q.order) + ", l = " + std::to_string(l) + ")");
    Poly derived = q.poly.partial(s.x(), static_cast<unsigned>(l));
    Poly c = derived.divide_out(s.z(), static_cast<unsigned>(l));
    OperatorResult res;
    res.boundary = (2 * l == q.order);
    res.is_zero = c.is_zero();
    res.cov = Covariant{s, c, q.degree, q.order - 2 * l, q.weight + l};
    return res;
}

} // namespace binform
