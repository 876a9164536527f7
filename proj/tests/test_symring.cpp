#include "binform/symring.hpp"
#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binform;

namespace {

Mat to_mat(const std::vector<std::vector<long long>>& rows, long long p) {
    Mat m;
    for (const auto& r : rows) {
        Row row;
        for (long long v : r) row.push_back(Scalar::of_int(p, v));
        m.push_back(std::move(row));
    }
    return m;
}

using oracle::fixed_dim;
using oracle::reynolds_dim;

} // namespace

TEST_CASE("S4 action matrices equal the Example-2 table") {
    auto gens = enumerate_generators(4);
    for (long long p : {0LL, 3LL}) {
        LinearAction act = action_matrices(4, gens, p);
        // rows: images of t0, t1, u0, u1, u2, f
        Mat sigma = to_mat({{0, -1, 0, 0, 0, 0},
                            {-1, 0, 0, 0, 0, 0},
                            {0, 0, -1, -1, -1, 0},
                            {0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 1}}, p);
        Mat tau = to_mat({{-1, 0, 0, 0, 0, 0},
                          {1, 1, 0, 0, 0, 0},
                          {0, 0, 1, 0, 0, 0},
                          {0, 0, 0, 1, 1, 0},
                          {0, 0, 0, 0, -1, 0},
                          {0, 0, 0, 0, 0, 1}}, p);
        CHECK(act.sigma == sigma);
        CHECK(act.tau == tau);
    }
}

TEST_CASE("action matrices satisfy the S_n presentation") {
    for (int n : {3, 4, 5}) {
        auto gens = enumerate_generators(n);
        LinearAction act = action_matrices(n, gens, 0);
        size_t t = gens.size();
        Mat id = identity_matrix(t, 0);
        Mat s = act.sigma;
        Mat power = id;
        for (int k = 0; k < n; ++k) power = mat_mul(power, s);
        CHECK(power == id);                                  // sigma^n = 1
        CHECK(mat_mul(act.tau, act.tau) == id);              // tau^2 = 1
        Mat st = mat_mul(act.sigma, act.tau);
        Mat stp = id;
        for (int k = 0; k < n - 1; ++k) stp = mat_mul(stp, st);
        CHECK(stp == id);                                    // (sigma tau)^(n-1) = 1
    }
}

TEST_CASE("fixed spaces of the quartic action") {
    auto gens = enumerate_generators(4);

    // char 0, degree 2, order 0: contains the t0^2 + t0 t1 + t1^2 direction
    LinearAction act0 = action_matrices(4, gens, 0);
    auto fs2 = fixed_space(act0, 2);
    bool found = false;
    for (const auto& gb : fs2) {
        if (gb.order != 0) continue;
        Poly target = parse_poly(act0.xring, "x1^2 + x1*x2 + x2^2");
        std::map<ExpVec, size_t> support;
        for (const auto& b : gb.basis)
            for (const auto& [e, c] : b.terms()) support.emplace(e, support.size());
        for (const auto& [e, c] : target.terms()) support.emplace(e, support.size());
        SpanBasis span(0);
        auto coords = [&](const Poly& q) {
            Row v(support.size(), Scalar::zero(0));
            for (const auto& [e, c] : q.terms()) v[support.at(e)] = c;
            return v;
        };
        for (const auto& b : gb.basis) span.insert(coords(b));
        found = span.contains(coords(target));
    }
    CHECK(found);

    // degree 0 is the constants
    LinearAction act3 = action_matrices(4, gens, 3);
    auto fs0 = fixed_space(act3, 0);
    REQUIRE(fs0.size() == 1);
    CHECK(fs0[0].basis.size() == 1);
    CHECK(fs0[0].basis[0].total_degree() == 0);

    // char 3, degree 1: the t0 - t1 vector (the preimage of a2) appears
    auto fs1 = fixed_space(act3, 1);
    bool has_t0_minus_t1 = false, has_f = false;
    for (const auto& gb : fs1)
        for (const auto& b : gb.basis) {
            if (proportional(b, parse_poly(act3.xring, "x1 + 2*x2"))) has_t0_minus_t1 = true;
            if (proportional(b, parse_poly(act3.xring, "x6"))) has_f = true;
        }
    CHECK(has_t0_minus_t1);
    CHECK(has_f);
    // and in char 0 the degree-1 fixed space is only f
    auto fs1q = fixed_space(act0, 1);
    REQUIRE(fs1q.size() == 1);
    CHECK(fs1q[0].order == 4);
    CHECK(fs1q[0].basis.size() == 1);
}

TEST_CASE("Reynolds averaging agrees with fixed spaces when p does not divide n!") {
    auto gens = enumerate_generators(4);
    for (long long p : {0LL, 5LL, 7LL}) {
        LinearAction act = action_matrices(4, gens, p);
        for (int degree = 1; degree <= 3; ++degree)
            for (int order = 0; order <= 4 * degree; order += 2)
                CHECK(fixed_dim(act, degree, order) == reynolds_dim(act, degree, order));
    }
}

TEST_CASE("pipeline for the binary quadratic") {
    PipelineResult res = separating_pipeline(2, 0, 2);
    REQUIRE(res.minimal.size() == 2);
    const FormSpec& s = res.minimal[0].cov.spec;
    Poly f = binary_form(s);
    Poly disc = parse_poly(s.ring, "a1^2 + -4*a0*a2");
    bool saw_f = false, saw_disc = false;
    for (const auto& e : res.minimal) {
        if (proportional(e.cov.poly, f)) saw_f = true;
        if (proportional(e.cov.poly, disc)) saw_disc = true;
        CHECK(is_covariant(e.cov.poly, s).ok);
    }
    CHECK(saw_f);
    CHECK(saw_disc);
}

TEST_CASE("pipeline reproduces the char-0 quartic list up to scalars") {
    PipelineResult res = separating_pipeline(4, 0, 3);
    const FormSpec s = make_form_spec(4, 0);
    std::vector<Poly> expected = {
        parse_poly(s.ring, "a2^2 + -3*a1*a3 + 12*a4*a0"),
        parse_poly(s.ring, "-27/2*a1^2*a4 + 9/2*a1*a2*a3 + -1*a2^3 + 36*a2*a4*a0 + "
                           "-27/2*a3^2*a0"),
        binary_form(s),
        parse_poly(s.ring, "a1^2*z^4 + -8/3*a2*a0*z^4 + 4/3*a1*a2*x*z^3 + -8*a3*a0*x*z^3 + "
                           "4/3*a2^2*x^2*z^2 + -2*a1*a3*x^2*z^2 + -16*a4*a0*x^2*z^2 + "
                           "4/3*a2*a3*x^3*z + -8*a1*a4*x^3*z + a3^2*x^4 + -8/3*a2*a4*x^4"),
        parse_poly(s.ring, "a1^3*z^6 + -4*a1*a0*a2*z^6 + 8*a0^2*a3*z^6 + "
                           "2*a1^2*a2*x*z^5 + 4*a0*a1*a3*x*z^5 + -8*a0*a2^2*x*z^5 + "
                           "32*a0^2*a4*x*z^5 + "
                           "5*a1^2*a3*x^2*z^4 + 40*a0*a1*a4*x^2*z^4 + -20*a0*a2*a3*x^2*z^4 + "
                           "20*a1^2*a4*x^3*z^3 + -20*a0*a3^2*x^3*z^3 + "
                           "20*a1*a2*a4*x^4*z^2 + -5*a1*a3^2*x^4*z^2 + -40*a0*a3*a4*x^4*z^2 + "
                           "8*a2^2*a4*x^5*z + -4*a1*a3*a4*x^5*z + -2*a2*a3^2*x^5*z + "
                           "-32*a0*a4^2*x^5*z + "
                           "4*a2*a3*a4*x^6 + -8*a1*a4^2*x^6 + -1*a3^3*x^6")};
    REQUIRE(res.minimal.size() == expected.size());
    for (const Poly& want : expected) {
        bool seen = false;
        for (const auto& e : res.minimal)
            if (proportional(e.cov.poly, want)) seen = true;
        CHECK(seen);
    }
    for (const auto& e : res.minimal) {
        CHECK(is_covariant(e.cov.poly, e.cov.spec).ok);
        CHECK(e.cov.poly.leading_term().second.is_one());
    }
}

TEST_CASE("char-3 pipeline to degree 2 already contains a2") {
    PipelineResult res = separating_pipeline(4, 3, 2);
    const FormSpec s = make_form_spec(4, 3);
    bool saw_a2 = false;
    for (const auto& e : res.minimal) {
        CHECK(is_covariant(e.cov.poly, s).ok);
        if (proportional(e.cov.poly, parse_poly(s.ring, "a2"))) saw_a2 = true;
    }
    CHECK(saw_a2);
    CHECK(res.fixed_dims.at({1, 0}) == 1);
}

TEST_CASE("NotLinear fires on a truncated generator list") {
    auto gens = enumerate_generators(4);
    gens.pop_back();   // drop f
    gens.erase(gens.begin());   // drop t0: tau(t1) = t0 + t1 leaves the span
    CHECK_THROWS_AS(action_matrices(4, gens, 0), not_linear);
}

TEST_CASE("minimal_generators drops products") {
    FormSpec s = make_form_spec(2, 0);
    Covariant disc = certify(parse_poly(s.ring, "a1^2 + -4*a0*a2"), s);
    Covariant disc2 = certify(disc.poly * disc.poly, s);
    auto out = minimal_generators({disc, disc2}, 0);
    REQUIRE(out.size() == 1);
    CHECK(proportional(out[0], disc.poly));
}
