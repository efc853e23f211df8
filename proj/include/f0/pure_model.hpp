#pragma once
// Pure models with positive Euler characteristic: even closed generators x_i,
// odd generators y_i whose differentials are homogeneous polynomials in the
// x_i. Cohomology of the quotient by the differential ideal is computed
// degreewise by exact linear algebra; quotients by single-monomial relation
// sets take a combinatorial shortcut (divisibility filtering) that avoids
// materializing large elimination problems.

#include "f0/gpoly.hpp"
#include "f0/qmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace f0::model {

using gpoly::GeneratorSet;
using gpoly::GeneratorSetPtr;
using gpoly::Monomial;
using gpoly::Polynomial;
using qlinalg::QMatrix;
using qlinalg::Rational;

// Exponent data (a_1..a_k; b_1..b_k): even generator degrees 2a_i, odd
// generator degrees 2b_i - 1, differential degrees 2b_i.
struct DegreeTuple {
    std::vector<int> a; // nondecreasing, a_1 >= 1
    std::vector<int> b; // nondecreasing, b_i >= 2 a_i

    DegreeTuple() = default;
    DegreeTuple(std::vector<int> a_, std::vector<int> b_);

    std::size_t k() const { return a.size(); }
    int formal_dimension() const;

    // Degree list (2a_1,...,2a_k, 2b_1-1,...,2b_k-1).
    std::vector<int> display_degrees() const;
    std::string display() const; // e.g. "(4,6,9,11)"

    // Inverse of display_degrees: even entries -> a, odd entries -> b.
    static DegreeTuple from_display(const std::vector<int>& degrees);

    friend bool operator==(const DegreeTuple& x, const DegreeTuple& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const DegreeTuple& x, const DegreeTuple& y) {
        if (x.k() != y.k()) return x.k() < y.k();
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

// chi = prod b_i / a_i, exact.
Rational euler_characteristic(const DegreeTuple& t);

struct SeriesResult {
    bool is_polynomial;
    std::vector<long long> coefficients; // index = degree; empty when not polynomial

    long long coefficient_sum() const;
    bool all_nonnegative() const;
};

// prod (1 - t^{2b_i}) / prod (1 - t^{2a_i}) by exact long division.
SeriesResult poincare_series(const DegreeTuple& t);

struct PureModel {
    GeneratorSetPtr gens;               // even generators, degrees 2a_i
    std::vector<int> odd_degrees;       // 2b_i - 1
    std::vector<Polynomial> differentials; // differentials[i] homogeneous of degree 2b_i

    PureModel() = default;
    PureModel(GeneratorSetPtr gens_, std::vector<int> odd_degrees_,
              std::vector<Polynomial> differentials_);

    std::size_t k() const { return odd_degrees.size(); }
    int formal_dimension() const;
    DegreeTuple tuple() const;
    // True when every differential term has total exponent >= 2 (no linear
    // terms), i.e. the generator degrees really are homotopy degrees.
    bool is_minimal() const;
};

// Degreewise basis/normal-form data for Q[x_1..x_k]/(relations), computed
// lazily per degree and cached. Not synchronized; share across threads only
// after pre-touching the degrees you need.
class CohomologyPresentation {
public:
    CohomologyPresentation(GeneratorSetPtr gens, std::vector<Polynomial> relations,
                           int max_degree,
                           std::optional<int> formal_dimension = std::nullopt);

    const GeneratorSet& gens() const { return *gens_; }
    GeneratorSetPtr gens_ptr() const { return gens_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    int max_degree() const { return max_degree_; }

    // Formal dimension if provided at construction, else the top nonzero
    // degree <= max_degree (computed on first use).
    int formal_dimension() const;

    std::size_t dim(int degree) const;                  // 0 for odd/negative degrees
    const std::vector<Monomial>& basis(int degree) const;
    Polynomial basis_element(int degree, std::size_t index) const;

    // Coordinates of a homogeneous polynomial in the degree-d quotient basis.
    std::vector<Rational> normal_form(const Polynomial& p, int degree) const;
    std::vector<Rational> normal_form(const Polynomial& p) const; // degree inferred

    // b_0..b_n (n = formal_dimension()).
    std::vector<long long> betti() const;

private:
    struct Slice {
        std::vector<Monomial> all;               // full monomial slice, lex order
        std::map<std::vector<int>, std::size_t> col_of;
        std::vector<std::size_t> basis_cols;     // non-pivot columns
        std::vector<Monomial> basis_monomials;   // all[c] for c in basis_cols
        QMatrix reduced;                          // rref of the ideal slice (generic path)
        std::vector<std::size_t> pivots;
    };
    const Slice& slice(int degree) const;

    GeneratorSetPtr gens_;
    std::vector<Polynomial> relations_;
    std::vector<int> relation_degrees_;
    int max_degree_;
    mutable std::optional<int> formal_dimension_;
    bool monomial_backend_; // all relations single-term
    mutable std::map<int, Slice> cache_;
};

// Presentation of the quotient by the differential ideal, degrees 0..max_degree.
CohomologyPresentation cohomology(const PureModel& m, int max_degree);

struct FiniteVerdict {
    bool pass;
    std::string detail; // which window degree failed / confirmation note
};

// PASS iff the quotient vanishes in every even degree in (n, n+W] and is
// nonzero in degree n, where W = max even generator degree. Sound because any
// monomial above the window factors as x_i * (monomial of degree > n), so
// vanishing on a width-W window propagates to all higher degrees.
FiniteVerdict is_finite_dimensional(const PureModel& m);

// b_n = 1 and b_d = b_{n-d} for all d.
bool poincare_duality_check(const CohomologyPresentation& c);

struct IntersectionForm {
    QMatrix gram; // middle-degree Gram matrix w.r.t. the quotient basis
    int signature;
};

// Middle-degree pairing (u,v) -> coefficient of the top class in u*v.
// Requires a PASS model with formal dimension divisible by 4.
IntersectionForm intersection_form(const PureModel& m);

// Signature of a symmetric rational matrix by congruence diagonalization
// (symmetric elimination; zero diagonal handled by the hyperbolic 2x2 split).
int signature_of_symmetric(const QMatrix& a);

// --- model files -----------------------------------------------------------
// Text format:
//   even_generators:
//     - {name: x1, degree: 4}
//   odd_generators:
//     - {name: y1, degree: 11, differential: "1*x1^3"}
// '#' starts a comment. Parse errors cite line and field.
PureModel parse_model_text(const std::string& text);
PureModel parse_model_file(const std::string& path);
std::string model_to_text(const PureModel& m);

// A bare graded-quotient presentation, for files that give the even
// generators and relation polynomials directly instead of a pure model:
//   even_generators:
//     - {name: x, degree: 2}
//   relations:
//     - {poly: "1*x^2"}
//   max_degree: 12          # optional; defaults to the largest degree present
struct PresentationData {
    gpoly::GeneratorSetPtr gens;
    std::vector<gpoly::Polynomial> relations;
    int max_degree = 0;
};
PresentationData parse_presentation_text(const std::string& text);
PresentationData parse_presentation_file(const std::string& path);

// True if the text declares a 'relations:' section (bare presentation) rather
// than an 'odd_generators:' section (pure model).
bool text_is_presentation(const std::string& text);

} // namespace f0::model
