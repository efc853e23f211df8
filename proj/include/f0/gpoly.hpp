#pragma once
// Sparse multivariate polynomials over Q in even-degree weighted variables,
// with degreewise monomial enumeration. Only the even (polynomial) part of the
// graded algebra is modeled; the odd generators never appear inside products.

#include "f0/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace f0::gpoly {

using qlinalg::Rational;

// Ordered even-degree generators x_1..x_k with nondecreasing degrees.
struct GeneratorSet {
    std::vector<std::string> names;
    std::vector<int> degrees; // each even, >= 2, nondecreasing

    GeneratorSet() = default;
    GeneratorSet(std::vector<std::string> names_, std::vector<int> degrees_);

    std::size_t size() const { return names.size(); }
    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.names == b.names && a.degrees == b.degrees;
    }
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<std::string> names, std::vector<int> degrees);

// Exponent vector, one entry per generator.
struct Monomial {
    std::vector<int> exponents;

    int weighted_degree(const GeneratorSet& gens) const;
    int total_exponent() const;
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
};

// All monomials of the given weighted degree, ascending lexicographic on
// exponent vectors. Empty when none exist.
std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, int d);

class Polynomial {
public:
    explicit Polynomial(GeneratorSetPtr gens) : gens_(std::move(gens)) {}
    Polynomial(GeneratorSetPtr gens, std::optional<int> declared_degree)
        : gens_(std::move(gens)), declared_degree_(declared_degree) {}

    static Polynomial zero(GeneratorSetPtr gens) { return Polynomial(std::move(gens)); }
    static Polynomial monomial(GeneratorSetPtr gens, Monomial m, Rational coeff);

    const GeneratorSet& gens() const { return *gens_; }
    GeneratorSetPtr gens_ptr() const { return gens_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    std::optional<int> declared_degree() const { return declared_degree_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Adds c * m, dropping the term if the sum cancels. Enforces the declared
    // degree when one is set.
    void add_term(const Monomial& m, const Rational& c);

    // Checks all stored terms share one weighted degree; returns it (0 for the
    // zero polynomial).
    bool is_homogeneous(int* degree_out = nullptr) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    Polynomial scaled(const Rational& c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.gens() == b.gens() && a.terms_ == b.terms_;
    }

private:
    GeneratorSetPtr gens_;
    std::map<std::vector<int>, Rational> terms_; // exponent vector -> nonzero coeff
    std::optional<int> declared_degree_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial partial_derivative(const Polynomial& p, std::size_t gen_index);

// Text form: sum of terms "c*x1^e1*x2^e2" with integer or rational c, e.g.
// "1*x1^3 + 1*x2^2". Whitespace-insensitive. Factors may omit "^e" (exponent
// 1) and a bare coefficient term is a constant. A declared degree, when given,
// rejects inhomogeneous input.
Polynomial parse_polynomial(const std::string& text, GeneratorSetPtr gens,
                            std::optional<int> declared_degree = std::nullopt);

// Canonical rendering of the same form; "0" for the zero polynomial. Terms in
// the deterministic monomial order; every coefficient and exponent explicit.
std::string to_string(const Polynomial& p);

} // namespace f0::gpoly
