#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f0/pure_model.hpp"

#include <random>
#include <sstream>

using namespace f0::model;
using f0::gpoly::make_generators;
using f0::gpoly::parse_polynomial;
using f0::qlinalg::QMatrix;

namespace {

DegreeTuple tuple_of(std::vector<int> display) { return DegreeTuple::from_display(display); }

// Q[x1:4, x2:6] with dy1 = x1*x2 (deg 10), dy2 = x1^3 + x2^2 (deg 12).
PureModel model_4_6_9_11() {
    auto g = make_generators({"x1", "x2"}, {4, 6});
    return PureModel(g, {9, 11},
                     {parse_polynomial("1*x1*x2", g, 10),
                      parse_polynomial("1*x1^3 + 1*x2^2", g, 12)});
}

// Complex projective 6-space: Q[x:2]/(x^7).
PureModel model_cp6() {
    auto g = make_generators({"x"}, {2});
    return PureModel(g, {13}, {parse_polynomial("1*x^7", g, 14)});
}

// Quaternionic projective 3-space: Q[x:4]/(x^4).
PureModel model_hp3() {
    auto g = make_generators({"x"}, {4});
    return PureModel(g, {15}, {parse_polynomial("1*x^4", g, 16)});
}

// Two degree-6 generators; du' = u^2 + k*v^2, dv' = u*v.
PureModel model_6_6_11_11(int k) {
    auto g = make_generators({"u", "v"}, {6, 6});
    std::string du = "1*u^2";
    if (k != 0) du += " + " + std::to_string(k) + "*v^2";
    return PureModel(g, {11, 11},
                     {parse_polynomial(du, g, 12), parse_polynomial("1*u*v", g, 12)});
}

// Series oracle: multiply the numerator by the geometric expansion of every
// 1/(1-t^{2a}) out to a fixed horizon; independent of the long-division code.
std::vector<long long> expand_series(const DegreeTuple& t, int horizon) {
    std::vector<long long> c(horizon + 1, 0);
    c[0] = 1;
    for (int b : t.b) {
        std::vector<long long> next(horizon + 1, 0);
        for (int i = 0; i <= horizon; ++i) {
            next[i] += c[i];
            if (i + 2 * b <= horizon) next[i + 2 * b] -= c[i];
        }
        c = std::move(next);
    }
    for (int a : t.a)
        for (int i = 2 * a; i <= horizon; ++i) c[i] += c[i - 2 * a];
    return c;
}

} // namespace

TEST_CASE("degree tuple validation and display") {
    CHECK_THROWS(DegreeTuple({2}, {3}));        // b < 2a
    CHECK_THROWS(DegreeTuple({2, 1}, {4, 4}));  // a not nondecreasing
    CHECK_THROWS(DegreeTuple({1, 1}, {3, 2}));  // b not nondecreasing
    CHECK_THROWS(DegreeTuple({0}, {2}));        // a below 1
    CHECK_THROWS(DegreeTuple({1, 1}, {2}));     // length mismatch

    DegreeTuple t({2, 3}, {5, 6});
    CHECK(t.k() == 2);
    CHECK(t.formal_dimension() == 12);
    CHECK(t.display_degrees() == std::vector<int>{4, 6, 9, 11});
    CHECK(t.display() == "(4,6,9,11)");
    CHECK(DegreeTuple::from_display({4, 6, 9, 11}) == t);
    CHECK(DegreeTuple::from_display({9, 4, 11, 6}) == t); // order-insensitive
    CHECK(DegreeTuple().display() == "()");
}

TEST_CASE("degree tuple ordering is by length then lex") {
    DegreeTuple s = tuple_of({2, 3});
    DegreeTuple t = tuple_of({4, 6, 9, 11});
    DegreeTuple u = tuple_of({4, 6, 11, 13});
    CHECK(s < t);
    CHECK(t < u);
    CHECK_FALSE(t < t);
}

TEST_CASE("euler characteristic on known tuples") {
    CHECK(euler_characteristic(tuple_of({6, 11})) == Rational(2));
    CHECK(euler_characteristic(tuple_of({2, 2, 3, 5})) == Rational(6));
    CHECK(euler_characteristic(DegreeTuple()) == Rational(1));
    CHECK(euler_characteristic(tuple_of({4, 6, 9, 11})) == Rational(5));
    CHECK(euler_characteristic(tuple_of({2, 4, 4, 5, 7, 9})) == Rational(15));
    // A non-integral value: a=(2), b=(5) gives 5/2.
    CHECK(euler_characteristic(DegreeTuple({2}, {5})) == Rational(5, 2));
    CHECK_FALSE(euler_characteristic(DegreeTuple({2}, {5})).is_integer());
}

TEST_CASE("poincare series: polynomial cases") {
    auto s = poincare_series(tuple_of({2, 7}));
    REQUIRE(s.is_polynomial);
    CHECK(s.coefficients == std::vector<long long>{1, 0, 1, 0, 1, 0, 1});
    CHECK(s.coefficient_sum() == 4);
    CHECK(s.all_nonnegative());

    auto q = poincare_series(tuple_of({4, 6, 9, 11}));
    REQUIRE(q.is_polynomial);
    std::vector<long long> want(13, 0);
    want[0] = want[4] = want[6] = want[8] = want[12] = 1;
    CHECK(q.coefficients == want);
    CHECK(q.coefficient_sum() == 5);

    auto e = poincare_series(DegreeTuple());
    REQUIRE(e.is_polynomial);
    CHECK(e.coefficients == std::vector<long long>{1});
}

TEST_CASE("poincare series: non-polynomial quotient is reported") {
    auto s = poincare_series(tuple_of({2, 4, 4, 5, 7, 9}));
    CHECK_FALSE(s.is_polynomial);
    CHECK(s.coefficients.empty());
}

TEST_CASE("poincare series matches the geometric-expansion oracle") {
    std::vector<DegreeTuple> ts = {
        tuple_of({2, 3}),          tuple_of({4, 7}),
        tuple_of({2, 2, 3, 3}),    tuple_of({4, 6, 9, 11}),
        tuple_of({4, 6, 11, 13}),  tuple_of({2, 4, 6, 5, 9, 11}),
        tuple_of({6, 6, 11, 11}),  tuple_of({4, 4, 6, 7, 9, 11}),
        tuple_of({2, 2, 4, 6, 3, 3, 9, 11}),
    };
    for (const auto& t : ts) {
        auto s = poincare_series(t);
        REQUIRE(s.is_polynomial);
        const int n = t.formal_dimension();
        const int horizon = n + 40;
        auto oracle = expand_series(t, horizon);
        REQUIRE(static_cast<int>(s.coefficients.size()) <= horizon + 1);
        for (int d = 0; d <= horizon; ++d) {
            long long got = d < static_cast<int>(s.coefficients.size()) ? s.coefficients[d] : 0;
            CHECK(got == oracle[d]);
        }
        // Polynomial quotients end exactly at the formal dimension.
        CHECK(static_cast<int>(s.coefficients.size()) - 1 == n);
        CHECK(s.coefficients[n] == 1);
        CHECK(euler_characteristic(t) == Rational(static_cast<long>(s.coefficient_sum())));
    }
    // Non-polynomial detection agrees with a nonzero high-degree tail.
    auto bad = tuple_of({2, 4, 4, 5, 7, 9});
    auto tail = expand_series(bad, bad.formal_dimension() + 40);
    bool tail_nonzero = false;
    for (int d = bad.formal_dimension() + 1; d < static_cast<int>(tail.size()); ++d)
        if (tail[d] != 0) tail_nonzero = true;
    CHECK(tail_nonzero);
    CHECK_FALSE(poincare_series(bad).is_polynomial);
}

TEST_CASE("pure model validation") {
    auto g = make_generators({"x1", "x2"}, {4, 6});
    // Wrong differential degree: deg(x1^2) = 8, but y of degree 9 needs 10.
    CHECK_THROWS(PureModel(g, {9, 11}, {parse_polynomial("1*x1^2", g), Polynomial::zero(g)}));
    // Even "odd" degree rejected.
    CHECK_THROWS(PureModel(g, {8, 11}, {Polynomial::zero(g), Polynomial::zero(g)}));
    // Count mismatch rejected.
    CHECK_THROWS(PureModel(g, {9}, {Polynomial::zero(g)}));

    auto m = model_4_6_9_11();
    CHECK(m.k() == 2);
    CHECK(m.formal_dimension() == 12);
    CHECK(m.tuple() == tuple_of({4, 6, 9, 11}));
    CHECK(m.is_minimal());
}

TEST_CASE("minimality detects linear differential terms") {
    auto g = make_generators({"x1", "x2"}, {2, 4});
    // dy = x2 has a total-exponent-1 term: quotient is fine but not minimal.
    PureModel m(g, {3, 7}, {parse_polynomial("1*x2", g, 4), parse_polynomial("1*x2^2", g, 8)});
    CHECK_FALSE(m.is_minimal());
    PureModel ok(g, {3, 7},
                 {parse_polynomial("1*x1^2", g, 4), parse_polynomial("1*x2^2", g, 8)});
    CHECK(ok.is_minimal());
}

TEST_CASE("cohomology of complex projective 6-space") {
    auto c = cohomology(model_cp6(), 12);
    CHECK(c.formal_dimension() == 12);
    for (int d = 0; d <= 12; d += 2) {
        CHECK(c.dim(d) == 1);
        CHECK(c.dim(d + 1) == 0);
    }
    CHECK(c.basis(6)[0].exponents == std::vector<int>{3});
    CHECK(c.betti() == std::vector<long long>{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(poincare_duality_check(c));
}

TEST_CASE("cohomology of the (4,6,9,11) model matches its series") {
    auto m = model_4_6_9_11();
    auto c = cohomology(m, 12);
    auto s = poincare_series(m.tuple());
    REQUIRE(s.is_polynomial);
    auto b = c.betti();
    REQUIRE(b.size() == s.coefficients.size());
    for (std::size_t d = 0; d < b.size(); ++d) CHECK(b[d] == s.coefficients[d]);
    CHECK(poincare_duality_check(c));
    // Degree 10 is killed exactly by the first relation x1*x2.
    CHECK(c.dim(10) == 0);
}

TEST_CASE("monomial and generic elimination backends agree") {
    auto g = make_generators({"x1", "x2"}, {2, 4});
    // Same ideal two ways: x1^4 = x1 * x1^3 lies in (x1^3), so appending it
    // to the second relation changes the presentation but not the quotient.
    CohomologyPresentation mono(g, {parse_polynomial("1*x1^3", g),
                                    parse_polynomial("1*x2^2", g)},
                                16);
    CohomologyPresentation generic(g, {parse_polynomial("1*x1^3", g),
                                       parse_polynomial("1*x2^2 + 1*x1^4", g)},
                                   16);
    for (int d = 0; d <= 16; d += 2) CHECK(mono.dim(d) == generic.dim(d));
    // Normal forms agree as functionals: same coordinates in possibly
    // different bases is too strong, but dimension-1 degrees pin them down.
    for (int d : {0, 2, 4, 6, 8}) {
        if (mono.dim(d) != 1) continue;
        auto p = mono.basis_element(d, 0);
        CHECK(mono.normal_form(p) == generic.normal_form(p));
    }
}

TEST_CASE("overdetermined single-monomial relation sets") {
    // Q[x:2, y:6]/(x^2, x*y, y^2): three relations, two generators.
    auto g = make_generators({"x", "y"}, {2, 6});
    CohomologyPresentation c(g,
                             {parse_polynomial("1*x^2", g), parse_polynomial("1*x*y", g),
                              parse_polynomial("1*y^2", g)},
                             12);
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(2) == 1);
    CHECK(c.dim(4) == 0);
    CHECK(c.dim(6) == 1);
    CHECK(c.dim(8) == 0);
    CHECK(c.dim(12) == 0);
}

TEST_CASE("normal form reduces against the relation ideal") {
    auto m = model_6_6_11_11(1);
    auto c = cohomology(m, 12);
    REQUIRE(c.dim(12) == 1);
    auto g = m.gens;
    // u^2 + v^2 is a relation, so v^2 = -u^2 in the quotient.
    auto vv = parse_polynomial("1*v^2", g, 12);
    auto uu = parse_polynomial("1*u^2", g, 12);
    auto uv = parse_polynomial("1*u*v", g, 12);
    auto nf_vv = c.normal_form(vv);
    auto nf_uu = c.normal_form(uu);
    CHECK(nf_vv.size() == 1);
    CHECK(nf_vv[0] == -nf_uu[0]);
    CHECK(c.normal_form(uv)[0].is_zero());
    // Zero polynomial needs an explicit degree; inhomogeneous input rejected.
    CHECK_THROWS(c.normal_form(Polynomial::zero(g)));
    CHECK(c.normal_form(Polynomial::zero(g), 12) == std::vector<Rational>{Rational(0)});
}

TEST_CASE("finite-dimensionality verdicts") {
    CHECK(is_finite_dimensional(model_4_6_9_11()).pass);
    CHECK(is_finite_dimensional(model_cp6()).pass);
    CHECK(is_finite_dimensional(model_hp3()).pass);
    CHECK(is_finite_dimensional(model_6_6_11_11(1)).pass);

    auto k0 = is_finite_dimensional(model_6_6_11_11(0));
    CHECK_FALSE(k0.pass);
    CHECK(k0.detail.find("degree") != std::string::npos);

    // A zero differential leaves a polynomial direction alive.
    auto g = make_generators({"x1", "x2"}, {4, 6});
    PureModel z(g, {9, 11}, {Polynomial::zero(g), parse_polynomial("1*x1^3 + 1*x2^2", g, 12)});
    CHECK_FALSE(is_finite_dimensional(z).pass);
}

TEST_CASE("window check catches survival above the formal dimension") {
    // Q[u:6, v:6] with relations (u^2, u*v): v^m survives for every m, and
    // the first witness inside the inspection window is degree 18.
    auto bad = is_finite_dimensional(model_6_6_11_11(0));
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("18") != std::string::npos);
}

TEST_CASE("poincare duality check rejects asymmetric quotients") {
    auto g = make_generators({"x", "y"}, {2, 2});
    // Q[x,y]/(x^2) in degrees 0..4 has betti 1,2,2 at 0,2,4.
    CohomologyPresentation c(g, {parse_polynomial("1*x^2", g)}, 4, 4);
    CHECK(c.dim(4) == 2);
    CHECK_FALSE(poincare_duality_check(c));
}

TEST_CASE("signature of symmetric rational matrices") {
    auto diag = [](std::vector<int> d) {
        QMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = Rational(d[i]);
        return m;
    };
    CHECK(signature_of_symmetric(diag({2, -3, 5})) == 1);
    CHECK(signature_of_symmetric(diag({1, 1, 1})) == 3);
    CHECK(signature_of_symmetric(diag({0, 0})) == 0);
    CHECK(signature_of_symmetric(QMatrix(0, 0)) == 0);

    QMatrix hyp(2, 2);
    hyp.at(0, 1) = Rational(1);
    hyp.at(1, 0) = Rational(1);
    CHECK(signature_of_symmetric(hyp) == 0);

    QMatrix mixed(3, 3);
    mixed.at(0, 1) = Rational(5);
    mixed.at(1, 0) = Rational(5);
    mixed.at(2, 2) = Rational(7);
    CHECK(signature_of_symmetric(mixed) == 1);

    QMatrix posdef(2, 2);
    posdef.at(0, 0) = Rational(2);
    posdef.at(0, 1) = posdef.at(1, 0) = Rational(1);
    posdef.at(1, 1) = Rational(2);
    CHECK(signature_of_symmetric(posdef) == 2);

    QMatrix indef(2, 2);
    indef.at(0, 0) = Rational(1);
    indef.at(0, 1) = indef.at(1, 0) = Rational(2);
    indef.at(1, 1) = Rational(1); // det = -3 < 0
    CHECK(signature_of_symmetric(indef) == 0);

    QMatrix nonsym(2, 2);
    nonsym.at(0, 1) = Rational(1);
    CHECK_THROWS(signature_of_symmetric(nonsym));
    CHECK_THROWS(signature_of_symmetric(QMatrix(2, 3)));
}

TEST_CASE("signature is a congruence invariant") {
    // S = A^T D A with unipotent A has the signature of D.
    std::mt19937 rng(20260825);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> diag(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        std::vector<int> d(n);
        int expected = 0;
        for (auto& x : d) {
            x = diag(rng);
            expected += (x > 0) - (x < 0);
        }
        QMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            a.at(i, i) = Rational(1);
            for (std::size_t j = i + 1; j < n; ++j) a.at(i, j) = Rational(entry(rng));
        }
        QMatrix s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (std::size_t t = 0; t < n; ++t)
                    acc += a.at(t, i) * Rational(d[t]) * a.at(t, j);
                s.at(i, j) = acc;
            }
        CHECK(signature_of_symmetric(s) == expected);
    }
}

TEST_CASE("intersection form of projective spaces") {
    auto cp6 = intersection_form(model_cp6());
    REQUIRE(cp6.gram.rows() == 1);
    CHECK(cp6.gram.at(0, 0) == Rational(1));
    CHECK(cp6.signature == 1);

    // Middle degree 6 of the x:4 truncated algebra is empty.
    auto hp3 = intersection_form(model_hp3());
    CHECK(hp3.gram.rows() == 0);
    CHECK(hp3.signature == 0);
}

TEST_CASE("intersection form of the two-generator degree-6 model") {
    auto f = intersection_form(model_6_6_11_11(1));
    REQUIRE(f.gram.rows() == 2);
    // Basis in degree 6 is (v, u); top class u^2 with v^2 = -u^2.
    CHECK(f.gram.at(0, 0) == Rational(-1));
    CHECK(f.gram.at(1, 1) == Rational(1));
    CHECK(f.gram.at(0, 1) == Rational(0));
    CHECK(f.signature == 0);
}

TEST_CASE("intersection form rejects unsuitable models") {
    // Formal dimension 12 required mod 4; a dimension-10 model is rejected.
    auto g = make_generators({"x"}, {2});
    PureModel cp5(g, {11}, {parse_polynomial("1*x^6", g, 12)});
    CHECK(cp5.formal_dimension() == 10);
    CHECK_THROWS(intersection_form(cp5));
    // Infinite-dimensional quotient rejected.
    CHECK_THROWS(intersection_form(model_6_6_11_11(0)));
}

TEST_CASE("model text round-trip") {
    for (const auto& m :
         {model_4_6_9_11(), model_cp6(), model_hp3(), model_6_6_11_11(1)}) {
        auto parsed = parse_model_text(model_to_text(m));
        CHECK(parsed.tuple() == m.tuple());
        CHECK(parsed.odd_degrees == m.odd_degrees);
        REQUIRE(parsed.k() == m.k());
        for (std::size_t i = 0; i < m.k(); ++i)
            CHECK(f0::gpoly::to_string(parsed.differentials[i]) ==
                  f0::gpoly::to_string(m.differentials[i]));
    }
}

TEST_CASE("model text accepts comments and quoted differentials") {
    const std::string text = R"(# two generators
even_generators:
  - {name: x1, degree: 4}
  - {name: x2, degree: 6}
odd_generators:
  - {name: y1, degree: 9, differential: "1*x1*x2"}   # pairing term
  - {name: y2, degree: 11, differential: "1*x1^3 + 1*x2^2"}
)";
    auto m = parse_model_text(text);
    CHECK(m.tuple() == tuple_of({4, 6, 9, 11}));
    CHECK(is_finite_dimensional(m).pass);
}

TEST_CASE("model text errors cite the offending line") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_model_text(text);
            return std::string("(no error)");
        } catch (const std::exception& e) {
            std::string w = e.what();
            return w.find(needle) != std::string::npos ? std::string("ok") : w;
        }
    };
    CHECK(fails_with("even_generators:\n  - {name: x1}\n", "line 2") == "ok");
    CHECK(fails_with("even_generators:\n  - {degree: 4}\n", "missing field 'name'") == "ok");
    CHECK(fails_with("even_generators:\n  - {name: x1, degree: four}\n", "not an integer") ==
          "ok");
    CHECK(fails_with("- {name: x1, degree: 4}\n", "before any section") == "ok");
    CHECK(fails_with("even_generators:\n  - {name: x1, degree: 4, degree: 6}\n",
                     "duplicate field") == "ok");
    // Inhomogeneous differential rejected with its line number.
    const std::string inhom = R"(even_generators:
  - {name: x1, degree: 4}
  - {name: x2, degree: 6}
odd_generators:
  - {name: y1, degree: 11, differential: "1*x2^3 + 1*x2^2"}
)";
    CHECK(fails_with(inhom, "line 5") == "ok");
    // Unknown generator name inside a differential.
    const std::string unknown = R"(even_generators:
  - {name: x1, degree: 4}
odd_generators:
  - {name: y1, degree: 11, differential: "1*z^3"}
)";
    CHECK(fails_with(unknown, "line 4") == "ok");
}

TEST_CASE("bare presentation files parse into quotient data") {
    const std::string text = R"(# truncated wedge-style quotient
even_generators:
  - {name: x, degree: 2}
  - {name: y, degree: 6}
relations:
  - {poly: "1*x^2"}
  - {poly: "1*x*y"}
  - {poly: "1*y^2"}
)";
    CHECK(text_is_presentation(text));
    CHECK_FALSE(text_is_presentation("even_generators:\nodd_generators:\n"));
    auto data = parse_presentation_text(text);
    REQUIRE(data.gens->size() == 2);
    CHECK(data.relations.size() == 3);
    CHECK(data.max_degree == 12); // largest relation degree
    CohomologyPresentation c(data.gens, data.relations, data.max_degree);
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(2) == 1);
    CHECK(c.dim(4) == 0);
    CHECK(c.dim(6) == 1);
    CHECK(c.dim(8) == 0);

    // Explicit max_degree wins over the computed default.
    auto wide = parse_presentation_text(text + "max_degree: 20\n");
    CHECK(wide.max_degree == 20);

    auto fails_with = [](const std::string& body, const std::string& needle) {
        try {
            parse_presentation_text(body);
            return std::string("(no error)");
        } catch (const std::exception& e) {
            std::string w = e.what();
            return w.find(needle) != std::string::npos ? std::string("ok") : w;
        }
    };
    CHECK(fails_with("relations:\n  - {poly: \"1*x^2\"}\n", "no even_generators") == "ok");
    CHECK(fails_with("even_generators:\n  - {name: x, degree: 2}\nrelations:\n  - {poly: \"1*x^2 + 1*x\"}\n",
                     "homogeneous") == "ok");
    CHECK(fails_with("even_generators:\n  - {name: x, degree: 2}\nrelations:\n  - {degree: 4}\n",
                     "missing field 'poly'") == "ok");
    CHECK(fails_with("even_generators:\n  - {name: x, degree: 2}\nmax_degree: -3\n",
                     "max_degree must be positive") == "ok");
}
