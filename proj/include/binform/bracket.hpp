#pragma once

// Bracket monomials on n points viewed as multigraphs on the vertices
// 1..n plus u. Provides the generator enumeration (valence, crossing,
// parity and irreducibility pruning), syzygy straightening to the
// non-crossing normal form, and expansion into the root variables.
//
// Geometry convention: the vertices 1..n and then u sit in this order on a
// convex polygon; edges (i,j) and (k,l) cross iff i < k < j < l after
// mapping u to n+1.

#include "binform/linalg.hpp"
#include "binform/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace binform {

struct not_regular : std::domain_error {
    not_regular() : std::domain_error("bracket monomial is not regular") {}
};

struct BracketEdge {
    int i = 0;      // 1..n
    int j = 0;      // 1..n for a point-point edge, 0 for the u vertex
    bool is_u() const { return j == 0; }

    friend bool operator==(const BracketEdge& a, const BracketEdge& b) {
        return a.i == b.i && a.j == b.j;
    }
    // u-edges sort before point-point edges (the canonical edge list)
    friend bool operator<(const BracketEdge& a, const BracketEdge& b) {
        return std::tuple(a.is_u() ? 0 : 1, a.i, a.j) <
               std::tuple(b.is_u() ? 0 : 1, b.i, b.j);
    }
};

// display / crossing order: endpoints (i, j) with u mapped past n
inline std::pair<int, int> edge_span(const BracketEdge& e, int n) {
    return {e.i, e.is_u() ? n + 1 : e.j};
}

inline bool edges_cross(const BracketEdge& a, const BracketEdge& b, int n) {
    auto [a1, a2] = edge_span(a, n);
    auto [b1, b2] = edge_span(b, n);
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    if (a1 > b1) { std::swap(a1, b1); std::swap(a2, b2); }
    return b1 < a2 && a2 < b2;
}

class BracketMonomial {
public:
    BracketMonomial(int n, int sign = 1) : n_(n), sign_(sign) {
        if (n < 2) throw std::invalid_argument("bracket monomials need n >= 2");
    }

    // [ji] = -[ij] is applied here; multiplicity m of a flipped edge
    // contributes (-1)^m
    void multiply_edge(int i, int j, int mult = 1) {
        if (mult == 0) return;
        BracketEdge e;
        if (j == 0) {
            e = {i, 0};
        } else {
            if (i == j) throw std::invalid_argument("bracket [ii] is zero");
            if (i > j) {
                std::swap(i, j);
                if (mult % 2) sign_ = -sign_;
            }
            e = {i, j};
        }
        if (e.i < 1 || e.i > n_ || e.j > n_)
            throw std::invalid_argument("edge endpoint outside 1..n");
        for (auto& [edge, m] : edges_)
            if (edge == e) { m += mult; return; }
        edges_.push_back({e, mult});
        std::sort(edges_.begin(), edges_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    int n() const { return n_; }
    int sign() const { return sign_; }
    void set_sign(int s) { sign_ = s; }
    const std::vector<std::pair<BracketEdge, int>>& edges() const { return edges_; }

    int order() const {
        int r = 0;
        for (const auto& [e, m] : edges_)
            if (e.is_u()) r += m;
        return r;
    }
    int edge_total() const {
        int r = 0;
        for (const auto& [e, m] : edges_) r += m;
        return r;
    }

    std::vector<int> valences() const {
        std::vector<int> v(n_ + 1, 0);
        for (const auto& [e, m] : edges_) {
            v[e.i] += m;
            if (!e.is_u()) v[e.j] += m;
        }
        return v;
    }

    // the common valence d of Definition 1, when it exists
    std::optional<int> regularity_degree() const {
        auto v = valences();
        for (int i = 2; i <= n_; ++i)
            if (v[i] != v[1]) return std::nullopt;
        return v[1];
    }

    bool has_crossing() const {
        for (size_t a = 0; a < edges_.size(); ++a)
            for (size_t b = a + 1; b < edges_.size(); ++b)
                if (edges_cross(edges_[a].first, edges_[b].first, n_)) return true;
        return false;
    }

    // edges expanded by multiplicity in canonical (u-first) order
    std::vector<std::tuple<int, int, int>> key() const {
        std::vector<std::tuple<int, int, int>> k;
        for (const auto& [e, m] : edges_)
            for (int c = 0; c < m; ++c) k.push_back({e.is_u() ? 0 : 1, e.i, e.j});
        return k;
    }

    friend bool operator==(const BracketMonomial& a, const BracketMonomial& b) {
        return a.n_ == b.n_ && a.sign_ == b.sign_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const BracketMonomial& a, const BracketMonomial& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        auto ka = a.key(), kb = b.key();
        if (ka != kb) return ka < kb;
        return a.sign_ < b.sign_;
    }

    BracketMonomial abs() const {
        BracketMonomial m = *this;
        m.sign_ = 1;
        return m;
    }

    BracketMonomial permuted(const std::vector<int>& perm) const {
        BracketMonomial out(n_, sign_);
        for (const auto& [e, m] : edges_)
            out.multiply_edge(perm.at(e.i), e.is_u() ? 0 : perm.at(e.j), m);
        return out;
    }

    friend BracketMonomial operator*(const BracketMonomial& a, const BracketMonomial& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("bracket product needs equal n");
        BracketMonomial out = a;
        out.sign_ *= b.sign_;
        for (const auto& [e, m] : b.edges_) out.multiply_edge(e.i, e.j, m);
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        if (sign_ < 0) os << '-';
        if (edges_.empty()) { os << "1"; return os.str(); }
        auto display = edges_;
        std::sort(display.begin(), display.end(), [&](const auto& a, const auto& b) {
            return edge_span(a.first, n_) < edge_span(b.first, n_);
        });
        for (const auto& [e, m] : display) {
            os << '[';
            if (e.i > 9) os << e.i << ','; else os << e.i;
            if (e.is_u()) os << 'u';
            else if (e.j > 9) os << e.j;
            else os << e.j;
            os << ']';
            if (m > 1) os << '^' << m;
        }
        return os.str();
    }

private:
    int n_;
    int sign_;
    std::vector<std::pair<BracketEdge, int>> edges_;   // canonical order, mult >= 1
};

// Formal linear combination of same-n monomials; stored monomials have
// sign +1 (signs folded into the coefficients), no zero coefficients.
class BracketPoly {
public:
    BracketPoly() : n_(2), p_(0) {}
    BracketPoly(int n, long long p) : n_(n), p_(p) {}

    static BracketPoly from(const BracketMonomial& m, long long p) {
        BracketPoly bp(m.n(), p);
        bp.add(m, Scalar::one(p));
        return bp;
    }

    void add(const BracketMonomial& m, const Scalar& c) {
        if (m.n() != n_) throw std::invalid_argument("bracket poly term has wrong n");
        Scalar eff = m.sign() < 0 ? -c : c;
        if (eff.is_zero()) return;
        auto key = m.abs();
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), eff);
        } else {
            it->second += eff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int n() const { return n_; }
    long long characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BracketMonomial, Scalar>& terms() const { return terms_; }

    friend BracketPoly operator+(const BracketPoly& a, const BracketPoly& b) {
        BracketPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add(m, c);
        return out;
    }

    BracketPoly scaled(const Scalar& s) const {
        BracketPoly out(n_, p_);
        for (const auto& [m, c] : terms_) out.add(m, c * s);
        return out;
    }

    friend bool operator==(const BracketPoly& a, const BracketPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (!c.is_one()) os << c.str() << '*';
            os << m.str();
        }
        return os.str();
    }

private:
    int n_;
    long long p_;
    std::map<BracketMonomial, Scalar> terms_;
};

namespace detail {

// lexicographically-least crossing pair in the plain (u-last) edge order
inline std::optional<std::pair<BracketEdge, BracketEdge>>
least_crossing(const BracketMonomial& m) {
    std::vector<BracketEdge> es;
    for (const auto& [e, mult] : m.edges()) es.push_back(e);
    std::sort(es.begin(), es.end(), [&](const BracketEdge& a, const BracketEdge& b) {
        return edge_span(a, m.n()) < edge_span(b, m.n());
    });
    for (size_t a = 0; a < es.size(); ++a)
        for (size_t b = a + 1; b < es.size(); ++b)
            if (edges_cross(es[a], es[b], m.n())) return std::make_pair(es[a], es[b]);
    return std::nullopt;
}

inline BracketMonomial without_pair(const BracketMonomial& m, const BracketEdge& e1,
                                    const BracketEdge& e2) {
    BracketMonomial out(m.n(), 1);
    for (const auto& [e, mult] : m.edges()) {
        int keep = mult - (e == e1 ? 1 : 0) - (e == e2 ? 1 : 0);
        if (keep > 0) out.multiply_edge(e.i, e.j, keep);
        if (keep < 0) throw std::logic_error("straighten removed a missing edge");
    }
    return out;
}

} // namespace detail

// Normal form with no crossing edge pair in any monomial. Each rewrite
// applies a Proposition-1 syzygy to the least crossing pair and strictly
// decreases the total crossing count, so this terminates; the normal forms
// (non-crossing monomials) are a basis, so the result is rewrite-order
// independent.
inline BracketPoly straighten(const BracketPoly& in) {
    BracketPoly out(in.n(), in.characteristic());
    std::vector<std::pair<BracketMonomial, Scalar>> work(in.terms().begin(), in.terms().end());
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        auto pair = detail::least_crossing(m);
        if (!pair) {
            out.add(m, c);
            continue;
        }
        auto [e1, e2] = *pair;
        auto [i, k] = edge_span(e1, in.n());
        auto [j, l] = edge_span(e2, in.n());
        // crossing guarantees i < j < k < l with l possibly the u slot
        BracketMonomial rest = detail::without_pair(m, e1, e2);
        BracketMonomial t1 = rest, t2 = rest;
        bool u2 = e2.is_u();
        t1.multiply_edge(i, j);
        t1.multiply_edge(k, u2 ? 0 : l);
        t2.multiply_edge(i, u2 ? 0 : l);
        t2.multiply_edge(j, k);
        work.push_back({t1, c});
        work.push_back({t2, c});
    }
    return out;
}

inline BracketPoly straighten(const BracketMonomial& m, long long p) {
    return straighten(BracketPoly::from(m, p));
}

// root ring for n points: mu1..mun, nu1..nun, x, z
inline Ring make_root_ring(int n, long long p) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("mu" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("nu" + std::to_string(i));
    names.push_back("x");
    names.push_back("z");
    return make_ring(std::move(names), p);
}

inline Poly expand(const BracketEdge& e, const Ring& root, int n) {
    Poly mu = Poly::variable(root, e.i - 1);
    Poly nu = Poly::variable(root, n + e.i - 1);
    if (e.is_u())
        return mu * Poly::variable(root, "x") - nu * Poly::variable(root, "z");
    Poly muj = Poly::variable(root, e.j - 1);
    Poly nuj = Poly::variable(root, n + e.j - 1);
    return mu * nuj - nu * muj;
}

inline Poly expand(const BracketMonomial& m, const Ring& root) {
    Poly out = Poly::constant(root, m.sign());
    for (const auto& [e, mult] : m.edges())
        out = out * expand(e, root, m.n()).pow(mult);
    return out;
}

inline Poly expand(const BracketPoly& bp, const Ring& root) {
    Poly out = Poly::zero(root);
    for (const auto& [m, c] : bp.terms())
        out = out + expand(m, root).scaled(c);
    return out;
}

// Definition 1: reducible iff the edge multiset splits into two regular
// sub-multisets of regularity degree >= 1. Exhaustive over sub-multisets.
inline bool is_reducible(const BracketMonomial& m) {
    auto d = m.regularity_degree();
    if (!d) throw not_regular();
    if (*d < 2) return false;
    const auto& es = m.edges();
    std::vector<int> pick(es.size(), 0);
    auto regular_part = [&](void) -> bool {
        std::vector<int> v(m.n() + 1, 0);
        bool any = false;
        for (size_t k = 0; k < es.size(); ++k) {
            if (!pick[k]) continue;
            any = true;
            v[es[k].first.i] += pick[k];
            if (!es[k].first.is_u()) v[es[k].first.j] += pick[k];
        }
        if (!any) return false;
        for (int i = 2; i <= m.n(); ++i)
            if (v[i] != v[1]) return false;
        return v[1] >= 1 && v[1] <= *d - 1;
    };
    // walk all proper sub-multiplicity vectors
    while (true) {
        size_t k = 0;
        while (k < pick.size() && pick[k] == es[k].second) pick[k++] = 0;
        if (k == pick.size()) return false;
        ++pick[k];
        if (regular_part()) return true;
    }
}

inline bool is_reducible(const BracketMonomial& m, const std::vector<BracketMonomial>&) {
    return is_reducible(m);
}

namespace detail {

struct EnumState {
    int n;
    int d;
    std::vector<BracketEdge> universe;
    std::vector<int> mult;
    std::vector<int> val;       // 1..n
    int uval = 0;
    std::vector<BracketMonomial>* out = nullptr;
};

inline void enumerate_rec(EnumState& st, size_t idx) {
    if (idx == st.universe.size()) {
        for (int i = 1; i <= st.n; ++i)
            if (st.val[i] != st.d) return;
        if (st.uval > 2 * st.n) return;                    // Point 5
        if (st.n % 2 == 0 && st.uval % 2 != 0) return;     // Point 5, n even
        BracketMonomial m(st.n, 1);
        for (size_t k = 0; k < st.universe.size(); ++k)
            if (st.mult[k]) m.multiply_edge(st.universe[k].i, st.universe[k].j, st.mult[k]);
        if (m.edge_total() == 0) return;
        if (is_reducible(m)) return;                       // Point 3, monomial products
        st.out->push_back(std::move(m));
        return;
    }
    const BracketEdge& e = st.universe[idx];
    int cap = st.d - st.val[e.i];
    if (!e.is_u()) cap = std::min(cap, st.d - st.val[e.j]);
    else cap = std::min(cap, 2 * st.n - st.uval);
    for (int m = 0; m <= cap; ++m) {
        if (m > 0) {
            bool crosses = false;                           // Point 4
            for (size_t k = 0; k < idx && !crosses; ++k)
                if (st.mult[k] && edges_cross(e, st.universe[k], st.n)) crosses = true;
            if (crosses) break;
            st.val[e.i] += 1;
            if (!e.is_u()) st.val[e.j] += 1; else st.uval += 1;
        }
        st.mult[idx] = m;
        // point e.i can only gain valence from edges at or after this block
        bool feasible = true;
        if (idx + 1 == st.universe.size() || st.universe[idx + 1].i != e.i) {
            // last edge touching min-endpoint e.i as its block
            if (e.is_u() && st.val[e.i] != st.d) feasible = false;
        }
        if (feasible) enumerate_rec(st, idx + 1);
    }
    // undo
    int placed = st.mult[idx];
    st.val[e.i] -= placed;
    if (!e.is_u()) st.val[e.j] -= placed; else st.uval -= placed;
    st.mult[idx] = 0;
}

} // namespace detail

// The generator system of B_reg(n) per Points 1-5: regular of degree <= 2
// (Kempe), non-crossing, u-edges capped at 2n with even parity for even n,
// ordered by (order, regularity degree, canonical edge list). Point 3 is
// applied in two stages: the Definition-1 split test during the walk, then
// grade-by-grade elimination of candidates lying in the subalgebra generated
// by the output so far (exact linear algebra on the root expansions over Q -
// the generator system is characteristic-independent).
inline std::vector<BracketMonomial> enumerate_generators(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_generators needs n >= 2");
    std::vector<BracketMonomial> cand;
    for (int d = 1; d <= 2; ++d) {
        detail::EnumState st;
        st.n = n;
        st.d = d;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) st.universe.push_back({i, j});
            st.universe.push_back({i, 0});
        }
        st.mult.assign(st.universe.size(), 0);
        st.val.assign(n + 1, 0);
        st.out = &cand;
        detail::enumerate_rec(st, 0);
    }
    std::sort(cand.begin(), cand.end(), [](const BracketMonomial& a, const BracketMonomial& b) {
        auto ka = std::tuple(a.order(), *a.regularity_degree(), a.key());
        auto kb = std::tuple(b.order(), *b.regularity_degree(), b.key());
        return ka < kb;
    });

    Ring root = make_root_ring(n, 0);
    std::vector<BracketMonomial> out;
    std::vector<std::pair<int, int>> out_grade;   // (degree, order)
    std::vector<Poly> out_expanded;
    size_t i = 0;
    while (i < cand.size()) {
        int r = cand[i].order();
        int d = *cand[i].regularity_degree();
        size_t j = i;
        while (j < cand.size() && cand[j].order() == r && *cand[j].regularity_degree() == d)
            ++j;
        // span of products of already-selected generators at grade (d, r)
        std::map<ExpVec, size_t> support;
        std::vector<Poly> span_polys;
        std::vector<size_t> stack;
        std::function<void(size_t, int, int)> products = [&](size_t k, int dl, int rl) {
            if (dl == 0) {
                if (rl == 0 && !stack.empty()) {
                    Poly prod = out_expanded[stack[0]];
                    for (size_t s = 1; s < stack.size(); ++s)
                        prod = prod * out_expanded[stack[s]];
                    span_polys.push_back(std::move(prod));
                }
                return;
            }
            if (k == out.size()) return;
            products(k + 1, dl, rl);
            if (out_grade[k].first <= dl && out_grade[k].second <= rl) {
                stack.push_back(k);
                products(k, dl - out_grade[k].first, rl - out_grade[k].second);
                stack.pop_back();
            }
        };
        products(0, d, r);
        std::vector<Poly> cand_expanded;
        for (size_t c = i; c < j; ++c) {
            cand_expanded.push_back(expand(cand[c], root));
            for (const auto& [e, s] : cand_expanded.back().terms())
                support.emplace(e, support.size());
        }
        for (const Poly& sp : span_polys)
            for (const auto& [e, s] : sp.terms()) support.emplace(e, support.size());
        auto coords = [&](const Poly& poly) {
            Row v(support.size(), Scalar::zero(0));
            for (const auto& [e, c] : poly.terms()) v[support.at(e)] = c;
            return v;
        };
        SpanBasis span(0);
        for (const Poly& sp : span_polys) span.insert(coords(sp));
        for (size_t c = i; c < j; ++c) {
            if (span.insert(coords(cand_expanded[c - i]))) {
                out.push_back(cand[c]);
                out_grade.push_back({d, r});
                out_expanded.push_back(cand_expanded[c - i]);
            }
        }
        i = j;
    }
    return out;
}

// "[12][34]", "[1u]^2[23]", optional leading '-'; commas allowed for
// two-digit points: "[10,12]"
inline BracketMonomial parse_bracket_monomial(int n, const std::string& text) {
    BracketMonomial m(n, 1);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos < text.size() && text[pos] == '-') { m.set_sign(-1); ++pos; }
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '[') throw std::invalid_argument("expected '[' in bracket monomial");
        ++pos;
        size_t close = text.find(']', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("expected ']' in bracket monomial");
        std::string inner = text.substr(pos, close - pos);
        pos = close + 1;
        auto to_vertex = [](const std::string& tok) -> int {
            if (tok == "u" || tok == "U") return 0;
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw std::invalid_argument("expected vertex in bracket: '" + tok + "'");
            return std::stoi(tok);
        };
        int a, b;
        if (auto comma = inner.find(','); comma != std::string::npos) {
            a = to_vertex(inner.substr(0, comma));
            b = to_vertex(inner.substr(comma + 1));
        } else {
            // single-character vertices: "[12]", "[1u]"
            if (inner.size() != 2)
                throw std::invalid_argument("bracket needs two vertices: [" + inner + "]");
            a = to_vertex(inner.substr(0, 1));
            b = to_vertex(inner.substr(1, 1));
        }
        int mult = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            mult = std::stoi(text.substr(start, pos - start));
        }
        if (a == 0) std::swap(a, b);   // [u1] means [1u]
        m.multiply_edge(a, b, mult);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty bracket monomial");
    return m;
}

inline std::string bracket_to_dot(const BracketMonomial& m) {
    std::ostringstream os;
    os << "graph bracket {\n  layout=circo;\n";
    for (int i = 1; i <= m.n(); ++i) os << "  v" << i << " [label=\"" << i << "\"];\n";
    os << "  u [shape=doublecircle];\n";
    for (const auto& [e, mult] : m.edges()) {
        os << "  v" << e.i << " -- " << (e.is_u() ? std::string("u") : "v" + std::to_string(e.j));
        if (mult > 1) os << " [label=\"" << mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace binform
