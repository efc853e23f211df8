#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f0/gpoly.hpp"

#include <random>

using namespace f0::gpoly;
using f0::qlinalg::Rational;

namespace {

GeneratorSetPtr gens244() { return make_generators({"x1", "x2", "x3"}, {2, 4, 4}); }

Polynomial random_poly(GeneratorSetPtr g, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> cdist(-5, 5);
    Polynomial p(g);
    for (int d = 0; d <= max_deg; d += 2) {
        for (const auto& m : monomials_of_degree(*g, d)) {
            int c = cdist(rng);
            if (rng() % 3 == 0 && c != 0) p.add_term(m, Rational(c));
        }
    }
    return p;
}

// Number of monomials of weighted degree d, via the product of geometric
// series — an oracle independent of the recursive enumeration.
long series_count(const std::vector<int>& degrees, int d) {
    std::vector<long> coeff(d + 1, 0);
    coeff[0] = 1;
    for (int w : degrees) {
        // multiply by 1/(1-t^w): prefix sums with stride w
        for (int i = w; i <= d; ++i) coeff[i] += coeff[i - w];
    }
    return coeff[d];
}

} // namespace

TEST_CASE("generator set validation") {
    CHECK_THROWS(make_generators({"x"}, {3}));        // odd degree
    CHECK_THROWS(make_generators({"x"}, {0}));        // below 2
    CHECK_THROWS(make_generators({"x", "y"}, {4, 2})); // decreasing
    CHECK_THROWS(make_generators({"x", "x"}, {2, 2})); // duplicate name
    CHECK_NOTHROW(make_generators({"x", "y"}, {2, 2}));
}

TEST_CASE("monomials_of_degree (2,4,4) slice at 6") {
    auto g = gens244();
    auto ms = monomials_of_degree(*g, 6);
    REQUIRE(ms.size() == 3);
    // Ascending lex on exponent vectors: (1,0,1), (1,1,0), (3,0,0).
    CHECK(ms[0].exponents == std::vector<int>{1, 0, 1});
    CHECK(ms[1].exponents == std::vector<int>{1, 1, 0});
    CHECK(ms[2].exponents == std::vector<int>{3, 0, 0});
    // Every degree-6 monomial here is divisible by x1.
    for (const auto& m : ms) CHECK(m.exponents[0] >= 1);
}

TEST_CASE("monomials_of_degree trivial and window cases") {
    auto g = gens244();
    auto ms0 = monomials_of_degree(*g, 0);
    REQUIRE(ms0.size() == 1);
    CHECK(ms0[0].total_exponent() == 0);

    auto ms10 = monomials_of_degree(*g, 10);
    CHECK(ms10.size() == 6);
    for (const auto& m : ms10) CHECK(m.exponents[0] >= 1); // all divisible by x1

    CHECK_THROWS(monomials_of_degree(*g, -2));
    CHECK_THROWS(monomials_of_degree(*g, 3));
}

TEST_CASE("monomial counts match generating-series oracle") {
    std::vector<std::vector<int>> gsets = {{2}, {2, 2}, {2, 4, 4}, {4, 6}, {2, 2, 4, 6}};
    for (const auto& degs : gsets) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < degs.size(); ++i) names.push_back("x" + std::to_string(i + 1));
        auto g = make_generators(names, degs);
        for (int d = 0; d <= 20; d += 2) {
            CHECK(static_cast<long>(monomials_of_degree(*g, d).size()) == series_count(degs, d));
        }
    }
}

TEST_CASE("poly_mul basics") {
    auto g = make_generators({"x1", "x2"}, {2, 2});
    auto p = parse_polynomial("1*x1^1 + 1*x2^1", g);
    auto q = parse_polynomial("1*x1^1 - 1*x2^1", g);
    auto one = parse_polynomial("1", g);
    CHECK(poly_mul(p, one) == p);
    CHECK(poly_mul(p, q) == parse_polynomial("1*x1^2 - 1*x2^2", g));

    auto other = make_generators({"z"}, {2});
    CHECK_THROWS(poly_mul(p, Polynomial::zero(other)));
}

TEST_CASE("poly_mul matches naive convolution on random inputs, commutes, associates") {
    auto g = gens244();
    std::mt19937 rng(99123);
    for (int t = 0; t < 15; ++t) {
        auto p = random_poly(g, 8, rng);
        auto q = random_poly(g, 8, rng);
        auto r = random_poly(g, 6, rng);
        auto pq = poly_mul(p, q);
        // Naive double-loop oracle, accumulated in a plain map.
        std::map<std::vector<int>, Rational> acc;
        for (const auto& [ea, ca] : p.terms())
            for (const auto& [eb, cb] : q.terms()) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                acc[e] += ca * cb;
            }
        for (auto it = acc.begin(); it != acc.end();)
            it = it->second.is_zero() ? acc.erase(it) : std::next(it);
        CHECK(pq.terms() == acc);
        CHECK(pq == poly_mul(q, p));
        CHECK(poly_mul(pq, r) == poly_mul(p, poly_mul(q, r)));
    }
}

TEST_CASE("partial derivative basics and Leibniz") {
    auto g = gens244();
    CHECK(partial_derivative(parse_polynomial("1*x1^3", g), 0) ==
          parse_polynomial("3*x1^2", g));
    CHECK(partial_derivative(parse_polynomial("1*x2^2", g), 0).is_zero());
    CHECK(partial_derivative(parse_polynomial("1*x1^1*x2^1", g), 1) ==
          parse_polynomial("1*x1^1", g));
    CHECK_THROWS(partial_derivative(parse_polynomial("1*x1^1", g), 5));

    std::mt19937 rng(5150);
    for (int t = 0; t < 10; ++t) {
        auto p = random_poly(g, 8, rng);
        auto q = random_poly(g, 8, rng);
        for (std::size_t i = 0; i < 3; ++i) {
            auto lhs = partial_derivative(poly_mul(p, q), i);
            auto rhs = poly_mul(partial_derivative(p, i), q) +
                       poly_mul(p, partial_derivative(q, i));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("homogeneity tracking") {
    auto g = gens244();
    auto p = parse_polynomial("1*x1^2 + 1*x2^1", g); // both degree 4
    int d = -1;
    CHECK(p.is_homogeneous(&d));
    CHECK(d == 4);
    auto q = parse_polynomial("1*x1^1 + 1*x2^1", g); // degrees 2 and 4
    CHECK_FALSE(q.is_homogeneous());

    CHECK_NOTHROW(parse_polynomial("1*x1^2 + 1*x2^1", g, 4));
    CHECK_THROWS(parse_polynomial("1*x1^1 + 1*x2^1", g, 4));
    CHECK_THROWS(parse_polynomial("1*x2^3 + 1*x2^2", g, 12)); // inhomogeneous, 12 vs 8
}

TEST_CASE("parse round-trips and tolerates whitespace") {
    auto g = make_generators({"x1", "x2"}, {4, 6});
    auto p = parse_polynomial("1*x1^3 + 1*x2^2", g);
    CHECK(to_string(p) == "1*x1^3 + 1*x2^2");
    CHECK(parse_polynomial("  1 * x1 ^ 3+1*  x2^2 ", g) == p);
    CHECK(parse_polynomial("x1^3 + x2^2", g) == p); // implicit unit coefficients
    CHECK(parse_polynomial("-3/2*x1^1*x2^1", g).terms().begin()->second == Rational(-3, 2));
    CHECK(parse_polynomial(to_string(p), g) == p);

    CHECK_THROWS(parse_polynomial("", g));
    CHECK_THROWS(parse_polynomial("1*zz^2", g));
    CHECK_THROWS(parse_polynomial("1*x1^2 1*x2^2", g));
    CHECK_THROWS(parse_polynomial("1/0*x1^2", g));
}

TEST_CASE("cancellation drops terms") {
    auto g = make_generators({"x1"}, {2});
    auto p = parse_polynomial("2*x1^2 - 2*x1^2", g);
    CHECK(p.is_zero());
    CHECK(to_string(p) == "0");
}
