#include "f0/halperin.hpp"

#include <algorithm>
#include <sstream>

namespace f0::halperin {

using gpoly::Monomial;
using gpoly::partial_derivative;
using gpoly::poly_mul;
using qlinalg::QMatrix;
using qlinalg::kernel_basis;

namespace {

struct SlotLayout {
    std::vector<int> target_degree;   // deg(x_i) + d
    std::vector<std::size_t> offset;  // first unknown index per generator
    std::vector<std::size_t> count;   // unknowns per generator (0 = image pinned/empty)
    std::size_t total = 0;
};

SlotLayout layout_unknowns(const CohomologyPresentation& c, int d,
                           const DerivationSpaceOptions& opts) {
    const auto& degrees = c.gens().degrees;
    SlotLayout out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const int target = degrees[i] + d;
        const bool pinned = std::find(opts.fixed_zero.begin(), opts.fixed_zero.end(), i) !=
                            opts.fixed_zero.end();
        std::size_t n = 0;
        if (!pinned) {
            if (target > 0)
                n = c.dim(target);
            else if (target == 0 && opts.include_degree_zero)
                n = c.dim(0);
        }
        out.target_degree.push_back(target);
        out.offset.push_back(out.total);
        out.count.push_back(n);
        out.total += n;
    }
    return out;
}

} // namespace

std::vector<Derivation> derivation_space(const CohomologyPresentation& c, int d,
                                         const DerivationSpaceOptions& opts) {
    if (d >= 0 || d % 2 != 0)
        throw std::invalid_argument("derivation_space: degree must be negative and even");
    const std::size_t k = c.gens().size();
    const SlotLayout slots = layout_unknowns(c, d, opts);
    if (slots.total == 0) return {};

    std::vector<std::vector<Rational>> rows;
    for (const auto& g : c.relations()) {
        int relation_degree = 0;
        g.is_homogeneous(&relation_degree);
        const int cd = relation_degree + d;
        if (cd < 0 || cd % 2 != 0) continue;
        const std::size_t nrows = c.dim(cd);
        if (nrows == 0) continue;
        std::vector<std::vector<Rational>> block(
            nrows, std::vector<Rational>(slots.total, Rational(0)));
        for (std::size_t i = 0; i < k; ++i) {
            if (slots.count[i] == 0) continue;
            const Polynomial dg = partial_derivative(g, i);
            if (dg.is_zero()) continue;
            for (std::size_t m = 0; m < slots.count[i]; ++m) {
                const Polynomial e = c.basis_element(slots.target_degree[i], m);
                const auto nf = c.normal_form(poly_mul(dg, e), cd);
                for (std::size_t r = 0; r < nrows; ++r) block[r][slots.offset[i] + m] = nf[r];
            }
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }

    QMatrix a(rows.size(), slots.total);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t cidx = 0; cidx < slots.total; ++cidx) a.at(r, cidx) = rows[r][cidx];

    std::vector<Derivation> out;
    for (const auto& v : kernel_basis(a)) {
        Derivation der;
        der.degree = d;
        der.images.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            der.images[i].assign(v.begin() + slots.offset[i],
                                 v.begin() + slots.offset[i] + slots.count[i]);
        out.push_back(std::move(der));
    }
    return out;
}

std::vector<Derivation> restricted_derivation_space(const CohomologyPresentation& c, int d,
                                                    std::vector<std::size_t> fixed_zero) {
    DerivationSpaceOptions opts;
    opts.fixed_zero = std::move(fixed_zero);
    return derivation_space(c, d, opts);
}

std::vector<int> admissible_degrees(const CohomologyPresentation& c) {
    const auto& degrees = c.gens().degrees;
    const int w = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    std::vector<int> out;
    for (int d = -2; d >= -(w - 2); d -= 2) out.push_back(d);
    return out;
}

Polynomial image_polynomial(const CohomologyPresentation& c, const Derivation& der,
                            std::size_t i) {
    const int target = c.gens().degrees[i] + der.degree;
    Polynomial p = Polynomial::zero(c.gens_ptr());
    if (i >= der.images.size()) return p;
    for (std::size_t m = 0; m < der.images[i].size(); ++m) {
        if (der.images[i][m].is_zero()) continue;
        p += c.basis_element(target, m).scaled(der.images[i][m]);
    }
    return p;
}

Polynomial apply_derivation(const CohomologyPresentation& c, const Derivation& der,
                            const Polynomial& p) {
    Polynomial out = Polynomial::zero(c.gens_ptr());
    for (std::size_t i = 0; i < c.gens().size(); ++i) {
        const Polynomial dp = partial_derivative(p, i);
        if (dp.is_zero()) continue;
        const Polynomial img = image_polynomial(c, der, i);
        if (img.is_zero()) continue;
        out += poly_mul(dp, img);
    }
    return out;
}

// --------------------------------------------------------------------------
// Splitting

std::optional<std::size_t> splits_as_fibration(const PureModel& m) {
    const std::size_t k = m.k();
    for (std::size_t l = 1; l < k; ++l) {
        bool closed = true;
        for (std::size_t j = 0; j < l && closed; ++j)
            for (const auto& [exps, coeff] : m.differentials[j].terms()) {
                (void)coeff;
                for (std::size_t i = l; i < k; ++i)
                    if (exps[i] != 0) {
                        closed = false;
                        break;
                    }
                if (!closed) break;
            }
        if (closed) return l;
    }
    return std::nullopt;
}

namespace {

gpoly::GeneratorSetPtr sub_generators(const PureModel& m, std::size_t from, std::size_t to) {
    std::vector<std::string> names(m.gens->names.begin() + from, m.gens->names.begin() + to);
    std::vector<int> degrees(m.gens->degrees.begin() + from, m.gens->degrees.begin() + to);
    return gpoly::make_generators(std::move(names), std::move(degrees));
}

} // namespace

PureModel base_model(const PureModel& m, std::size_t l) {
    if (l < 1 || l >= m.k()) throw std::invalid_argument("base_model: split index out of range");
    auto gens = sub_generators(m, 0, l);
    std::vector<int> odd(m.odd_degrees.begin(), m.odd_degrees.begin() + l);
    std::vector<Polynomial> diffs;
    for (std::size_t j = 0; j < l; ++j) {
        Polynomial p(gens, m.odd_degrees[j] + 1);
        for (const auto& [exps, coeff] : m.differentials[j].terms()) {
            for (std::size_t i = l; i < m.k(); ++i)
                if (exps[i] != 0)
                    throw std::invalid_argument(
                        "base_model: differential leaves the base subalgebra");
            p.add_term(Monomial{std::vector<int>(exps.begin(), exps.begin() + l)}, coeff);
        }
        diffs.push_back(std::move(p));
    }
    return PureModel(gens, std::move(odd), std::move(diffs));
}

PureModel fiber_model(const PureModel& m, std::size_t l) {
    if (l < 1 || l >= m.k())
        throw std::invalid_argument("fiber_model: split index out of range");
    auto gens = sub_generators(m, l, m.k());
    std::vector<int> odd(m.odd_degrees.begin() + l, m.odd_degrees.end());
    std::vector<Polynomial> diffs;
    for (std::size_t j = l; j < m.k(); ++j) {
        Polynomial p(gens, m.odd_degrees[j] + 1);
        for (const auto& [exps, coeff] : m.differentials[j].terms()) {
            bool touches_base = false;
            for (std::size_t i = 0; i < l; ++i)
                if (exps[i] != 0) {
                    touches_base = true;
                    break;
                }
            if (touches_base) continue; // base variables set to zero
            p.add_term(Monomial{std::vector<int>(exps.begin() + l, exps.end())}, coeff);
        }
        diffs.push_back(std::move(p));
    }
    return PureModel(gens, std::move(odd), std::move(diffs));
}

// --------------------------------------------------------------------------
// Certification

bool HalperinCertificate::certified() const {
    switch (verdict) {
        case Verdict::DerivationFree:
            return true;
        case Verdict::SplitsAsFibration:
            return base && fiber && base->certified() && fiber->certified();
        case Verdict::Inconclusive:
            return false;
    }
    return false;
}

HalperinCertificate presentation_check(const CohomologyPresentation& c) {
    HalperinCertificate cert;
    std::optional<Derivation> witness;
    for (int d : admissible_degrees(c)) {
        auto basis = derivation_space(c, d);
        cert.space_dimensions[d] = basis.size();
        if (!basis.empty() && !witness) witness = std::move(basis.front());
    }
    if (!witness) {
        cert.verdict = HalperinCertificate::Verdict::DerivationFree;
        return cert;
    }
    cert.verdict = HalperinCertificate::Verdict::Inconclusive;
    cert.witness = witness;
    cert.note = "nonzero derivation space in degree " + std::to_string(witness->degree);
    for (std::size_t i = 0; i < c.gens().size(); ++i)
        cert.witness_images.push_back("delta(" + c.gens().names[i] + ") = " +
                                      gpoly::to_string(image_polynomial(c, *witness, i)));
    return cert;
}

HalperinCertificate halperin_check(const PureModel& m) {
    const auto fin = model::is_finite_dimensional(m);
    if (!fin.pass)
        throw std::invalid_argument("halperin_check: model is not finite-dimensional (" +
                                    fin.detail + ")");
    int max_degree = m.formal_dimension();
    for (int od : m.odd_degrees) max_degree = std::max(max_degree, od + 1);
    CohomologyPresentation c(m.gens, m.differentials, max_degree, m.formal_dimension());

    HalperinCertificate scan = presentation_check(c);
    if (scan.verdict == HalperinCertificate::Verdict::DerivationFree) return scan;

    if (auto l = splits_as_fibration(m)) {
        PureModel base = base_model(m, *l);
        PureModel fiber = fiber_model(m, *l);
        if (!model::is_finite_dimensional(base).pass) {
            scan.note += "; split at " + std::to_string(*l) +
                         " has an infinite-dimensional base";
            return scan;
        }
        if (!model::is_finite_dimensional(fiber).pass) {
            scan.note += "; split at " + std::to_string(*l) +
                         " has an infinite-dimensional fiber";
            return scan;
        }
        HalperinCertificate out;
        out.verdict = HalperinCertificate::Verdict::SplitsAsFibration;
        out.space_dimensions = scan.space_dimensions;
        out.split_index = *l;
        out.base = std::make_shared<HalperinCertificate>(halperin_check(base));
        out.fiber = std::make_shared<HalperinCertificate>(halperin_check(fiber));
        return out;
    }
    return scan;
}

std::string certificate_to_text(const HalperinCertificate& cert, int indent) {
    const std::string pad(indent, ' ');
    std::ostringstream os;
    switch (cert.verdict) {
        case HalperinCertificate::Verdict::DerivationFree:
            os << pad << "verdict: DerivationFree\n";
            break;
        case HalperinCertificate::Verdict::SplitsAsFibration:
            os << pad << "verdict: SplitsAsFibration\n";
            break;
        case HalperinCertificate::Verdict::Inconclusive:
            os << pad << "verdict: Inconclusive\n";
            break;
    }
    if (!cert.space_dimensions.empty()) {
        os << pad << "derivation space dimensions:";
        // Scan from -2 downward (map iterates ascending, i.e. most negative first).
        for (auto it = cert.space_dimensions.rbegin(); it != cert.space_dimensions.rend(); ++it)
            os << " [" << it->first << "]=" << it->second;
        os << "\n";
    }
    if (!cert.note.empty()) os << pad << "note: " << cert.note << "\n";
    if (cert.witness) {
        os << pad << "witness derivation of degree " << cert.witness->degree << ":\n";
        for (const auto& line : cert.witness_images) os << pad << "  " << line << "\n";
    }
    if (cert.verdict == HalperinCertificate::Verdict::SplitsAsFibration) {
        os << pad << "split index: " << cert.split_index << "\n";
        os << pad << "base:\n" << certificate_to_text(*cert.base, indent + 2);
        os << pad << "fiber:\n" << certificate_to_text(*cert.fiber, indent + 2);
    }
    return os.str();
}

} // namespace f0::halperin
