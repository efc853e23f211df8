#pragma once
// Negative-degree derivations on finite graded quotient algebras: the linear
// solver for derivation spaces, fibration-splitting detection on pure models,
// and the certification pipeline (derivation-free, or split and recurse).

#include "f0/pure_model.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace f0::halperin {

using gpoly::Polynomial;
using model::CohomologyPresentation;
using model::PureModel;
using qlinalg::Rational;

// A derivation of negative even degree, recorded by its generator images:
// images[i] = coordinates of delta(x_i) in the quotient basis of degree
// deg(x_i) + degree. The slot is empty when that degree has no basis or is
// excluded (negative, or zero unless include_degree_zero was set).
struct Derivation {
    int degree = 0;
    std::vector<std::vector<Rational>> images;
};

struct DerivationSpaceOptions {
    std::vector<std::size_t> fixed_zero; // generator indices pinned to zero
    // Keep degree-0 target slots as unknowns instead of excluding them; used
    // to verify that solutions never place anything in degree 0.
    bool include_degree_zero = false;
};

// Basis of the space of degree-d derivations compatible with all relations:
// unknowns are quotient-basis coordinates of each delta(x_i); one constraint
// block per relation g_j, requiring sum_i dg_j/dx_i * delta(x_i) to reduce
// to zero. Throws if d >= 0 or d is odd.
std::vector<Derivation> derivation_space(const CohomologyPresentation& c, int d,
                                         const DerivationSpaceOptions& opts = {});

// Same system with the listed generators' images pinned to zero.
std::vector<Derivation> restricted_derivation_space(const CohomologyPresentation& c, int d,
                                                    std::vector<std::size_t> fixed_zero);

// Even degrees d with -(W-2) <= d <= -2 where W is the largest generator
// degree: the only degrees where an image can land in positive cohomology.
std::vector<int> admissible_degrees(const CohomologyPresentation& c);

// Polynomial representative of delta(x_i).
Polynomial image_polynomial(const CohomologyPresentation& c, const Derivation& der,
                            std::size_t i);

// delta(p) for a polynomial p, via formal partial derivatives of a
// representative; not reduced to normal form.
Polynomial apply_derivation(const CohomologyPresentation& c, const Derivation& der,
                            const Polynomial& p);

// Smallest l < k such that the first l differentials only involve the first
// l even generators; nullopt when no proper prefix closes up.
std::optional<std::size_t> splits_as_fibration(const PureModel& m);

// Sub-models of a split: base keeps generators/odd slots 1..l with their
// differentials; fiber keeps the rest with the base variables set to zero in
// the differentials (which may degenerate to zero polynomials).
PureModel base_model(const PureModel& m, std::size_t l);
PureModel fiber_model(const PureModel& m, std::size_t l);

struct HalperinCertificate {
    enum class Verdict { DerivationFree, SplitsAsFibration, Inconclusive };

    Verdict verdict = Verdict::Inconclusive;
    std::map<int, std::size_t> space_dimensions; // admissible degree -> solution dim
    std::string note;                            // extra detail for Inconclusive

    // SplitsAsFibration only.
    std::size_t split_index = 0;
    std::shared_ptr<HalperinCertificate> base;
    std::shared_ptr<HalperinCertificate> fiber;

    // Inconclusive with an explicit nonzero derivation.
    std::optional<Derivation> witness;
    std::vector<std::string> witness_images; // "delta(x_i) = <polynomial>" lines

    // DerivationFree, or a split whose two halves are both certified.
    bool certified() const;
};

// Derivation-space scan over all admissible degrees; all zero ->
// DerivationFree, otherwise Inconclusive with a witness. No splitting.
HalperinCertificate presentation_check(const CohomologyPresentation& c);

// Full pipeline for a finite-dimensional pure model: derivation-free check
// first, then fibration splitting with recursion on base and fiber. Throws
// on models that fail the finite-dimensionality check.
HalperinCertificate halperin_check(const PureModel& m);

// Multi-line rendering: verdict, per-degree dimensions, witness images,
// nested base/fiber certificates indented.
std::string certificate_to_text(const HalperinCertificate& cert, int indent = 0);

} // namespace f0::halperin
