#pragma once

// Exact multivariate polynomials. Terms are kept sorted in descending
// graded-reverse-lexicographic order with respect to the ring's variable
// order; that order is also the canonical serialization order. Values are
// immutable after construction and every operation is a pure function.

#include "binform/ring.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binform {

using ExpVec = std::vector<unsigned>;

struct not_divisible : std::domain_error {
    not_divisible() : std::domain_error("polynomial is not divisible by the requested power") {}
};

inline unsigned expvec_degree(const ExpVec& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

// a > b in grevlex: larger total degree, or equal degree and the last
// nonzero entry of a - b is negative.
inline bool grevlex_greater(const ExpVec& a, const ExpVec& b) {
    unsigned da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da > db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct GrevlexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grevlex_greater(a, b); }
};

class Poly {
public:
    using Term = std::pair<ExpVec, Scalar>;

    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly zero(const Ring& ring) { return Poly(ring); }

    static Poly constant(const Ring& ring, const Scalar& c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_.push_back({ExpVec(ring->size(), 0), p.checked(c)});
        return p;
    }
    static Poly constant(const Ring& ring, long long c) {
        return constant(ring, Scalar::of_int(ring->characteristic(), c));
    }

    static Poly variable(const Ring& ring, int index, unsigned power = 1) {
        ExpVec e(ring->size(), 0);
        e.at(index) = power;
        return monomial(ring, e, Scalar::one(ring->characteristic()));
    }
    static Poly variable(const Ring& ring, const std::string& name, unsigned power = 1) {
        int i = ring->index_of(name);
        if (i < 0) throw std::invalid_argument("no such variable: " + name);
        return variable(ring, i, power);
    }

    static Poly monomial(const Ring& ring, const ExpVec& e, const Scalar& c) {
        Poly p(ring);
        if (static_cast<int>(e.size()) != ring->size())
            throw std::invalid_argument("exponent vector length mismatch");
        if (!c.is_zero()) p.terms_.push_back({e, p.checked(c)});
        return p;
    }

    static Poly from_terms(const Ring& ring, std::vector<Term> terms) {
        std::map<ExpVec, Scalar, GrevlexGreater> acc;
        for (auto& [e, c] : terms) {
            if (static_cast<int>(e.size()) != ring->size())
                throw std::invalid_argument("exponent vector length mismatch");
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, c);
            else it->second += c;
        }
        return collect(ring, acc);
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.front();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.match(b);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const auto& ta = a.terms_[i];
            const auto& tb = b.terms_[j];
            if (ta.first == tb.first) {
                Scalar c = ta.second + tb.second;
                if (!c.is_zero()) out.push_back({ta.first, c});
                ++i; ++j;
            } else if (grevlex_greater(ta.first, tb.first)) {
                out.push_back(ta); ++i;
            } else {
                out.push_back(tb); ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
        Poly r(a.ring_ ? a.ring_ : b.ring_);
        r.terms_ = std::move(out);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.push_back({e, -c});
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.match(b);
        std::map<ExpVec, Scalar, GrevlexGreater> acc;
        ExpVec e(a.ring_ ? a.ring_->size() : 0, 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                Scalar c = ca * cb;
                auto it = acc.find(e);
                if (it == acc.end()) {
                    if (!c.is_zero()) acc.emplace(e, c);
                } else {
                    it->second += c;
                }
            }
        }
        return collect(a.ring_ ? a.ring_ : b.ring_, acc);
    }

    Poly scaled(const Scalar& c) const {
        if (c.is_zero()) return Poly(ring_);
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, tc] : terms_) r.terms_.push_back({e, checked(c) * tc});
        return r;
    }

    Poly pow(unsigned k) const {
        Poly r = constant(ring_, Scalar::one(characteristic()));
        Poly base = *this;
        while (k) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    // l-fold formal partial derivative; the falling-factorial coefficient is
    // accumulated factor by factor in the field, never via factorial inversion.
    Poly partial(int var, unsigned l = 1) const {
        Poly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[var] < l) continue;
            Scalar f = c;
            for (unsigned j = 0; j < l; ++j)
                f *= Scalar::of_int(characteristic(), static_cast<long long>(e[var] - j));
            if (f.is_zero()) continue;
            ExpVec ne = e;
            ne[var] -= l;
            r.terms_.push_back({std::move(ne), f});
        }
        // term order is preserved by lowering one variable uniformly only
        // within equal-degree ties, so re-sort to stay canonical
        return from_terms(ring_, std::move(r.terms_));
    }

    // q with q * v^l == *this, or throws not_divisible
    Poly divide_out(int var, unsigned l) const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            if (e[var] < l) throw not_divisible();
            ExpVec ne = e;
            ne[var] -= l;
            r.terms_.push_back({std::move(ne), c});
        }
        return from_terms(ring_, std::move(r.terms_));
    }

    // simultaneous substitution; unbound variables map to the target-ring
    // variable of the same name
    Poly substitute(const std::map<int, Poly>& bindings, const Ring& target) const {
        for (const auto& [v, img] : bindings) {
            if (v < 0 || v >= ring_->size())
                throw std::invalid_argument("binding for variable outside the ring");
            if (!same_ring(img.ring(), target)) throw ring_mismatch();
        }
        std::vector<Poly> images(ring_->size());
        for (int v = 0; v < ring_->size(); ++v) {
            auto it = bindings.find(v);
            if (it != bindings.end()) {
                images[v] = it->second;
            } else {
                int tv = target->index_of(ring_->name(v));
                if (tv < 0)
                    throw std::invalid_argument("variable " + ring_->name(v) +
                                                " missing from substitution target ring");
                images[v] = Poly::variable(target, tv);
            }
        }
        // incremental power cache per variable
        std::vector<std::vector<Poly>> powers(ring_->size());
        auto power_of = [&](int v, unsigned e) -> const Poly& {
            auto& cache = powers[v];
            if (cache.empty())
                cache.push_back(Poly::constant(target, Scalar::one(target->characteristic())));
            while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
            return cache[e];
        };
        Poly acc = Poly::zero(target);
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(target, project(c, target->characteristic()));
            for (int v = 0; v < ring_->size(); ++v)
                if (e[v]) t = t * power_of(v, e[v]);
            acc = acc + t;
        }
        return acc;
    }
    Poly substitute(const std::map<int, Poly>& bindings) const {
        Ring target = bindings.empty() ? ring_ : bindings.begin()->second.ring();
        return substitute(bindings, target);
    }

    // weighted-homogeneous components; the values over all keys sum to *this
    std::map<long long, Poly> grade(const std::vector<long long>& weights) const {
        if (static_cast<int>(weights.size()) != ring_->size())
            throw std::invalid_argument("weight vector length mismatch");
        std::map<long long, std::vector<Term>> parts;
        for (const auto& t : terms_) {
            long long w = 0;
            for (int v = 0; v < ring_->size(); ++v) w += weights[v] * t.first[v];
            parts[w].push_back(t);
        }
        std::map<long long, Poly> out;
        for (auto& [w, ts] : parts) {
            Poly p(ring_);
            p.terms_ = std::move(ts);   // subsequence of a sorted list stays sorted
            out.emplace(w, std::move(p));
        }
        return out;
    }

    // terms whose exponent of `var` equals k, with that exponent zeroed
    Poly coeff_of(int var, unsigned k) const {
        Poly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            ExpVec ne = e;
            ne[var] = 0;
            r.terms_.push_back({std::move(ne), c});
        }
        return from_terms(ring_, std::move(r.terms_));
    }
    Poly coeff_of2(int v1, unsigned k1, int v2, unsigned k2) const {
        Poly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[v1] != k1 || e[v2] != k2) continue;
            ExpVec ne = e;
            ne[v1] = 0;
            ne[v2] = 0;
            r.terms_.push_back({std::move(ne), c});
        }
        return from_terms(ring_, std::move(r.terms_));
    }

    long long characteristic() const { return ring_ ? ring_->characteristic() : 0; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, expvec_degree(e));
        return d;
    }
    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    // degree in a subset of variables; nullopt if terms disagree (inhomogeneous)
    std::optional<unsigned> homogeneous_degree_in(const std::vector<int>& vars) const {
        std::optional<unsigned> deg;
        for (const auto& [e, c] : terms_) {
            unsigned d = 0;
            for (int v : vars) d += e[v];
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg;
    }

    Poly normalized_leading() const {
        if (is_zero()) return *this;
        return scaled(leading_term().second.inverse());
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.match(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // deterministic total order for tie-breaks: leading terms first
    friend bool poly_less(const Poly& a, const Poly& b) {
        size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            if (a.terms_[i].first != b.terms_[i].first)
                return grevlex_greater(b.terms_[i].first, a.terms_[i].first);
            if (a.terms_[i].second != b.terms_[i].second)
                return a.terms_[i].second < b.terms_[i].second;
        }
        return a.terms_.size() < b.terms_.size();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::string mono;
            for (int v = 0; v < ring_->size(); ++v) {
                if (!e[v]) continue;
                if (!mono.empty()) mono += '*';
                mono += ring_->name(v);
                if (e[v] > 1) mono += '^' + std::to_string(e[v]);
            }
            if (mono.empty()) os << c.str();
            else if (c.is_one()) os << mono;
            else os << c.str() << '*' << mono;
        }
        return os.str();
    }

private:
    static Poly collect(const Ring& ring, std::map<ExpVec, Scalar, GrevlexGreater>& acc) {
        Poly r(ring);
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({e, c});
        return r;
    }

    static Scalar project(const Scalar& c, long long p) {
        if (c.characteristic() == p) return c;
        throw field_mismatch();
    }

    Scalar checked(const Scalar& c) const {
        if (c.characteristic() != characteristic()) throw field_mismatch();
        return c;
    }

    void match(const Poly& b) const {
        if (!ring_ || !b.ring_) return;   // default-constructed zero is neutral
        if (!same_ring(ring_, b.ring_)) throw ring_mismatch();
    }

    Ring ring_;
    std::vector<Term> terms_;   // grevlex descending, no zero coefficients
};

// true when q == c * p for one nonzero scalar c (both nonzero, or both zero)
inline bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.term_count() != b.term_count()) return false;
    Scalar ratio = b.leading_term().second / a.leading_term().second;
    for (size_t i = 0; i < a.term_count(); ++i) {
        if (a.terms()[i].first != b.terms()[i].first) return false;
        if (a.terms()[i].second * ratio != b.terms()[i].second) return false;
    }
    return true;
}

// Parses the canonical text form: terms joined by " + ", each term
// "coeff*v1^e1*..." with unit coefficients and zero exponents elided.
inline Poly parse_poly(const Ring& ring, const std::string& text) {
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\n");
        size_t e = s.find_last_not_of(" \t\n");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string body = trim(text);
    if (body == "0" || body.empty()) return Poly::zero(ring);
    std::vector<Poly::Term> terms;
    size_t pos = 0;
    while (pos != std::string::npos) {
        size_t next = body.find(" + ", pos);
        std::string term = trim(next == std::string::npos ? body.substr(pos)
                                                          : body.substr(pos, next - pos));
        pos = next == std::string::npos ? next : next + 3;
        if (term.empty()) continue;
        Scalar coeff = Scalar::one(ring->characteristic());
        ExpVec e(ring->size(), 0);
        size_t tp = 0;
        bool first_factor = true;
        while (tp != std::string::npos && tp < term.size()) {
            size_t star = term.find('*', tp);
            std::string tok = star == std::string::npos ? term.substr(tp)
                                                        : term.substr(tp, star - tp);
            tp = star == std::string::npos ? star : star + 1;
            if (tok.empty()) continue;
            if (first_factor && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-')) {
                coeff = Scalar::parse(ring->characteristic(), tok);
            } else {
                unsigned power = 1;
                std::string name = tok;
                if (auto caret = tok.find('^'); caret != std::string::npos) {
                    name = tok.substr(0, caret);
                    power = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
                }
                int v = ring->index_of(name);
                if (v < 0) throw std::invalid_argument("unknown variable in polynomial: " + name);
                e[v] += power;
            }
            first_factor = false;
        }
        terms.push_back({std::move(e), coeff});
    }
    return Poly::from_terms(ring, std::move(terms));
}

} // namespace binform
