#include "f0/pure_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace f0::model {

// --------------------------------------------------------------------------
// DegreeTuple

DegreeTuple::DegreeTuple(std::vector<int> a_, std::vector<int> b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size())
        throw std::invalid_argument("DegreeTuple: a and b must have equal length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1) throw std::invalid_argument("DegreeTuple: a_i must be >= 1");
        if (i > 0 && a[i] < a[i - 1])
            throw std::invalid_argument("DegreeTuple: a must be nondecreasing");
        if (i > 0 && b[i] < b[i - 1])
            throw std::invalid_argument("DegreeTuple: b must be nondecreasing");
        if (b[i] < 2 * a[i])
            throw std::invalid_argument("DegreeTuple: requires b_i >= 2 a_i");
    }
}

int DegreeTuple::formal_dimension() const {
    int n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += 2 * (b[i] - a[i]);
    return n;
}

std::vector<int> DegreeTuple::display_degrees() const {
    std::vector<int> out;
    out.reserve(2 * a.size());
    for (int x : a) out.push_back(2 * x);
    for (int x : b) out.push_back(2 * x - 1);
    return out;
}

std::string DegreeTuple::display() const {
    std::ostringstream os;
    os << "(";
    const auto d = display_degrees();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    os << ")";
    return os.str();
}

DegreeTuple DegreeTuple::from_display(const std::vector<int>& degrees) {
    std::vector<int> a, b;
    for (int d : degrees) {
        if (d % 2 == 0) {
            if (d < 2) throw std::invalid_argument("DegreeTuple: even degree < 2");
            a.push_back(d / 2);
        } else {
            b.push_back((d + 1) / 2);
        }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return DegreeTuple(std::move(a), std::move(b));
}

Rational euler_characteristic(const DegreeTuple& t) {
    Rational chi(1);
    for (std::size_t i = 0; i < t.k(); ++i) chi *= Rational(t.b[i], t.a[i]);
    return chi;
}

long long SeriesResult::coefficient_sum() const {
    long long s = 0;
    for (long long c : coefficients) s += c;
    return s;
}

bool SeriesResult::all_nonnegative() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](long long c) { return c >= 0; });
}

SeriesResult poincare_series(const DegreeTuple& t) {
    // Numerator prod (1 - t^{2b_i}).
    std::vector<long long> num{1};
    for (int bi : t.b) {
        std::vector<long long> next(num.size() + 2 * bi, 0);
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i] += num[i];
            next[i + 2 * bi] -= num[i];
        }
        num = std::move(next);
    }
    // Divide by each (1 - t^{2a_i}); f/(1-t^m) as a power series is the
    // stride-m prefix sum, and the division is exact iff the top m series
    // coefficients vanish.
    for (int ai : t.a) {
        const int m = 2 * ai;
        const int deg = static_cast<int>(num.size()) - 1;
        std::vector<long long> series(num.size(), 0);
        for (int j = 0; j <= deg; ++j)
            series[j] = num[j] + (j >= m ? series[j - m] : 0);
        for (int j = std::max(0, deg - m + 1); j <= deg; ++j)
            if (series[j] != 0) return {false, {}};
        series.resize(std::max(1, static_cast<int>(num.size()) - m));
        num = std::move(series);
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return {true, std::move(num)};
}

// --------------------------------------------------------------------------
// PureModel

PureModel::PureModel(GeneratorSetPtr gens_, std::vector<int> odd_degrees_,
                     std::vector<Polynomial> differentials_)
    : gens(std::move(gens_)),
      odd_degrees(std::move(odd_degrees_)),
      differentials(std::move(differentials_)) {
    if (odd_degrees.size() != gens->size() || differentials.size() != gens->size())
        throw std::invalid_argument(
            "PureModel: need equally many even generators, odd generators, differentials");
    for (std::size_t i = 0; i < odd_degrees.size(); ++i) {
        if (odd_degrees[i] % 2 == 0 || odd_degrees[i] < 3)
            throw std::invalid_argument("PureModel: odd generator degree must be odd and >= 3");
        if (i > 0 && odd_degrees[i] < odd_degrees[i - 1])
            throw std::invalid_argument("PureModel: odd degrees must be nondecreasing");
        if (!(differentials[i].gens() == *gens))
            throw std::invalid_argument("PureModel: differential over wrong generator set");
        int d = 0;
        if (!differentials[i].is_homogeneous(&d))
            throw std::invalid_argument("PureModel: differential " + std::to_string(i + 1) +
                                        " is not homogeneous");
        if (!differentials[i].is_zero() && d != odd_degrees[i] + 1)
            throw std::invalid_argument("PureModel: differential " + std::to_string(i + 1) +
                                        " has degree " + std::to_string(d) + ", expected " +
                                        std::to_string(odd_degrees[i] + 1));
    }
}

int PureModel::formal_dimension() const {
    int n = 0;
    for (std::size_t i = 0; i < k(); ++i) n += odd_degrees[i] + 1 - gens->degrees[i];
    return n;
}

DegreeTuple PureModel::tuple() const {
    std::vector<int> a, b;
    for (int d : gens->degrees) a.push_back(d / 2);
    for (int d : odd_degrees) b.push_back((d + 1) / 2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return DegreeTuple(std::move(a), std::move(b));
}

bool PureModel::is_minimal() const {
    for (const auto& diff : differentials)
        for (const auto& [exps, coeff] : diff.terms()) {
            (void)coeff;
            if (Monomial{exps}.total_exponent() < 2) return false;
        }
    return true;
}

// --------------------------------------------------------------------------
// CohomologyPresentation

CohomologyPresentation::CohomologyPresentation(GeneratorSetPtr gens,
                                               std::vector<Polynomial> relations,
                                               int max_degree,
                                               std::optional<int> formal_dimension)
    : gens_(std::move(gens)),
      relations_(std::move(relations)),
      max_degree_(max_degree),
      formal_dimension_(formal_dimension) {
    if (max_degree_ < 0) throw std::invalid_argument("CohomologyPresentation: negative bound");
    // Zero relations generate nothing; drop them so the quotient is unchanged.
    std::erase_if(relations_, [](const Polynomial& r) { return r.is_zero(); });
    monomial_backend_ = true;
    for (auto& r : relations_) {
        if (!(r.gens() == *gens_))
            throw std::invalid_argument("CohomologyPresentation: relation over wrong generators");
        int d = 0;
        if (!r.is_homogeneous(&d) || d < 2)
            throw std::invalid_argument(
                "CohomologyPresentation: relations must be homogeneous of degree >= 2");
        relation_degrees_.push_back(d);
        if (r.term_count() != 1) monomial_backend_ = false;
    }
}

const CohomologyPresentation::Slice& CohomologyPresentation::slice(int degree) const {
    if (degree < 0 || degree > max_degree_ || degree % 2 != 0)
        throw std::out_of_range("CohomologyPresentation: degree " + std::to_string(degree) +
                                " outside computed range");
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;

    Slice s;
    s.all = gpoly::monomials_of_degree(*gens_, degree);
    for (std::size_t c = 0; c < s.all.size(); ++c) s.col_of.emplace(s.all[c].exponents, c);

    if (monomial_backend_) {
        // Quotient basis = monomials divisible by no relation monomial.
        for (std::size_t c = 0; c < s.all.size(); ++c) {
            bool in_ideal = false;
            for (const auto& r : relations_) {
                const auto& rexp = r.terms().begin()->first;
                bool divides = true;
                for (std::size_t i = 0; i < rexp.size(); ++i)
                    if (s.all[c].exponents[i] < rexp[i]) { divides = false; break; }
                if (divides) { in_ideal = true; break; }
            }
            if (!in_ideal) s.basis_cols.push_back(c);
        }
    } else {
        // Rows: m * relation_j over all monomials m of complementary degree.
        std::vector<std::vector<Rational>> rows;
        for (std::size_t j = 0; j < relations_.size(); ++j) {
            const int cd = degree - relation_degrees_[j];
            if (cd < 0 || cd % 2 != 0) continue;
            for (const auto& m : gpoly::monomials_of_degree(*gens_, cd)) {
                std::vector<Rational> row(s.all.size());
                for (const auto& [rexp, coeff] : relations_[j].terms()) {
                    std::vector<int> e(rexp.size());
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rexp[i] + m.exponents[i];
                    row[s.col_of.at(e)] = coeff;
                }
                rows.push_back(std::move(row));
            }
        }
        QMatrix mat(rows.size(), s.all.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < s.all.size(); ++c) mat.at(r, c) = rows[r][c];
        auto rr = qlinalg::rref(mat);
        s.reduced = std::move(rr.matrix);
        s.pivots = std::move(rr.pivot_cols);
        std::vector<bool> is_pivot(s.all.size(), false);
        for (std::size_t p : s.pivots) is_pivot[p] = true;
        for (std::size_t c = 0; c < s.all.size(); ++c)
            if (!is_pivot[c]) s.basis_cols.push_back(c);
    }
    s.basis_monomials.reserve(s.basis_cols.size());
    for (std::size_t c : s.basis_cols) s.basis_monomials.push_back(s.all[c]);
    return cache_.emplace(degree, std::move(s)).first->second;
}

int CohomologyPresentation::formal_dimension() const {
    if (!formal_dimension_) {
        int top = 0;
        for (int d = 0; d <= max_degree_; d += 2)
            if (dim(d) > 0) top = d;
        formal_dimension_ = top;
    }
    return *formal_dimension_;
}

std::size_t CohomologyPresentation::dim(int degree) const {
    if (degree < 0 || degree % 2 != 0) return 0;
    return slice(degree).basis_cols.size();
}

const std::vector<Monomial>& CohomologyPresentation::basis(int degree) const {
    static const std::vector<Monomial> kEmpty;
    if (degree < 0 || degree % 2 != 0) return kEmpty;
    return slice(degree).basis_monomials;
}

Polynomial CohomologyPresentation::basis_element(int degree, std::size_t index) const {
    const auto& bs = basis(degree);
    if (index >= bs.size()) throw std::out_of_range("basis_element: index out of range");
    return Polynomial::monomial(gens_, bs[index], Rational(1));
}

std::vector<Rational> CohomologyPresentation::normal_form(const Polynomial& p,
                                                          int degree) const {
    if (!(p.gens() == *gens_))
        throw std::invalid_argument("normal_form: wrong generator set");
    int d = 0;
    if (!p.is_homogeneous(&d))
        throw std::invalid_argument("normal_form: polynomial not homogeneous");
    if (!p.is_zero() && d != degree)
        throw std::invalid_argument("normal_form: degree mismatch");
    const Slice& s = slice(degree);
    std::vector<Rational> vec(s.all.size());
    for (const auto& [exps, coeff] : p.terms()) vec[s.col_of.at(exps)] = coeff;

    if (monomial_backend_) {
        std::vector<Rational> out;
        out.reserve(s.basis_cols.size());
        for (std::size_t c : s.basis_cols) out.push_back(vec[c]);
        return out;
    }
    // Subtract pivot rows (each has a unit leading entry at its pivot column).
    for (std::size_t i = 0; i < s.pivots.size(); ++i) {
        const std::size_t pc = s.pivots[i];
        if (vec[pc].is_zero()) continue;
        const Rational f = vec[pc];
        for (std::size_t c = 0; c < vec.size(); ++c) {
            if (!s.reduced.at(i, c).is_zero()) vec[c] -= f * s.reduced.at(i, c);
        }
    }
    std::vector<Rational> out;
    out.reserve(s.basis_cols.size());
    for (std::size_t c : s.basis_cols) out.push_back(vec[c]);
    return out;
}

std::vector<Rational> CohomologyPresentation::normal_form(const Polynomial& p) const {
    int d = 0;
    if (!p.is_homogeneous(&d))
        throw std::invalid_argument("normal_form: polynomial not homogeneous");
    if (p.is_zero())
        throw std::invalid_argument("normal_form: zero polynomial needs an explicit degree");
    return normal_form(p, d);
}

std::vector<long long> CohomologyPresentation::betti() const {
    const int n = formal_dimension();
    std::vector<long long> out(n + 1, 0);
    for (int d = 0; d <= n; d += 2) out[d] = static_cast<long long>(dim(d));
    return out;
}

CohomologyPresentation cohomology(const PureModel& m, int max_degree) {
    return CohomologyPresentation(m.gens, m.differentials, max_degree,
                                  m.formal_dimension());
}

// --------------------------------------------------------------------------
// Finite-dimensionality, duality, intersection form

FiniteVerdict is_finite_dimensional(const PureModel& m) {
    for (std::size_t i = 0; i < m.k(); ++i)
        if (m.differentials[i].is_zero())
            return {false, "differential " + std::to_string(i + 1) +
                               " is zero, so the quotient has a free polynomial direction"};
    const int n = m.formal_dimension();
    const int w = m.gens->degrees.empty()
                      ? 0
                      : *std::max_element(m.gens->degrees.begin(), m.gens->degrees.end());
    CohomologyPresentation c(m.gens, m.differentials, n + w, n);
    if (c.dim(n) == 0)
        return {false, "quotient vanishes in the formal dimension " + std::to_string(n)};
    for (int d = n + 2; d <= n + w; d += 2) {
        if (c.dim(d) != 0)
            return {false, "quotient nonzero in degree " + std::to_string(d) +
                               " above the formal dimension"};
    }
    return {true, "window (" + std::to_string(n) + ", " + std::to_string(n + w) + "] clear"};
}

bool poincare_duality_check(const CohomologyPresentation& c) {
    const int n = c.formal_dimension();
    const auto b = c.betti();
    if (b[n] != 1) return false;
    for (int d = 0; d <= n; ++d)
        if (b[d] != b[n - d]) return false;
    return true;
}

int signature_of_symmetric(const QMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("signature: matrix not square");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(a.at(i, j) == a.at(j, i)))
                throw std::invalid_argument("signature: matrix not symmetric");
    QMatrix m = a;
    std::vector<std::size_t> act(n);
    for (std::size_t i = 0; i < n; ++i) act[i] = i;
    int sig = 0;
    while (!act.empty()) {
        // Prefer a nonzero diagonal entry.
        std::size_t di = act.size();
        for (std::size_t ii = 0; ii < act.size(); ++ii)
            if (!m.at(act[ii], act[ii]).is_zero()) { di = ii; break; }
        if (di != act.size()) {
            const std::size_t i = act[di];
            const Rational piv = m.at(i, i);
            sig += piv.sign();
            act.erase(act.begin() + di);
            for (std::size_t p : act)
                for (std::size_t q : act)
                    m.at(p, q) -= m.at(i, p) * m.at(i, q) / piv;
            continue;
        }
        // All-zero diagonal: find a nonzero off-diagonal pair (hyperbolic,
        // contributes +1 and -1), or stop if the remaining block is zero.
        std::size_t bi = act.size(), bj = act.size();
        for (std::size_t ii = 0; ii < act.size() && bi == act.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < act.size(); ++jj)
                if (!m.at(act[ii], act[jj]).is_zero()) { bi = ii; bj = jj; break; }
        if (bi == act.size()) break; // remaining form is zero
        const std::size_t i = act[bi], j = act[bj];
        const Rational c = m.at(i, j);
        act.erase(act.begin() + bj);
        act.erase(act.begin() + bi);
        for (std::size_t p : act)
            for (std::size_t q : act)
                m.at(p, q) -= (m.at(p, j) * m.at(q, i) + m.at(p, i) * m.at(q, j)) / c;
        // +1 and -1 cancel in the signature.
    }
    return sig;
}

IntersectionForm intersection_form(const PureModel& m) {
    const int n = m.formal_dimension();
    if (n % 4 != 0)
        throw std::invalid_argument("intersection_form: formal dimension " + std::to_string(n) +
                                    " not divisible by 4");
    const auto verdict = is_finite_dimensional(m);
    if (!verdict.pass)
        throw std::invalid_argument("intersection_form: model is not finite-dimensional (" +
                                    verdict.detail + ")");
    CohomologyPresentation c = cohomology(m, n);
    if (c.dim(n) != 1)
        throw std::invalid_argument("intersection_form: top degree is not one-dimensional");
    const int mid = n / 2;
    const std::size_t r = c.dim(mid);
    QMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            const auto prod = gpoly::poly_mul(c.basis_element(mid, i), c.basis_element(mid, j));
            const auto nf = c.normal_form(prod, n);
            gram.at(i, j) = nf[0];
            gram.at(j, i) = nf[0];
        }
    }
    return {gram, signature_of_symmetric(gram)};
}

// --------------------------------------------------------------------------
// Model files

namespace {

[[noreturn]] void parse_fail(int line, const std::string& why) {
    throw std::invalid_argument("model parse error, line " + std::to_string(line) + ": " + why);
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Parses one "- {key: value, key: value}" entry; values may be quoted.
std::map<std::string, std::string> parse_entry(const std::string& body, int line) {
    std::map<std::string, std::string> out;
    std::string s = strip(body);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        parse_fail(line, "expected '- {key: value, ...}'");
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    bool quoted = false;
    std::string cur;
    for (char ch : s) {
        if (ch == '"') quoted = !quoted;
        if (ch == ',' && !quoted) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) parse_fail(line, "unterminated quote");
    parts.push_back(cur);
    for (const auto& part : parts) {
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos) parse_fail(line, "expected 'key: value' in entry");
        std::string key = strip(part.substr(0, colon));
        std::string val = strip(part.substr(colon + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        if (key.empty()) parse_fail(line, "empty field name");
        if (out.count(key)) parse_fail(line, "duplicate field '" + key + "'");
        out[key] = val;
    }
    return out;
}

int parse_int_field(const std::map<std::string, std::string>& entry, const std::string& key,
                    int line) {
    auto it = entry.find(key);
    if (it == entry.end()) parse_fail(line, "missing field '" + key + "'");
    try {
        std::size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        parse_fail(line, "field '" + key + "' is not an integer: '" + it->second + "'");
    }
}

std::string require_field(const std::map<std::string, std::string>& entry,
                          const std::string& key, int line) {
    auto it = entry.find(key);
    if (it == entry.end()) parse_fail(line, "missing field '" + key + "'");
    return it->second;
}

// Removes a '#' comment that starts outside quotes.
std::string strip_comment(const std::string& raw) {
    bool quoted = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '"') quoted = !quoted;
        if (raw[i] == '#' && !quoted) return raw.substr(0, i);
    }
    return raw;
}

} // namespace

PureModel parse_model_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    enum class Section { None, Even, Odd } section = Section::None;
    std::vector<std::string> even_names;
    std::vector<int> even_degrees;
    struct OddEntry {
        std::string name;
        int degree;
        std::string differential;
        int line;
    };
    std::vector<OddEntry> odds;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        if (line == "even_generators:") {
            section = Section::Even;
            continue;
        }
        if (line == "odd_generators:") {
            section = Section::Odd;
            continue;
        }
        if (line.rfind("- ", 0) != 0)
            parse_fail(lineno, "expected a section header or '- {...}' entry");
        if (section == Section::None)
            parse_fail(lineno, "entry before any section header");
        auto entry = parse_entry(line.substr(2), lineno);
        if (section == Section::Even) {
            even_names.push_back(require_field(entry, "name", lineno));
            even_degrees.push_back(parse_int_field(entry, "degree", lineno));
        } else {
            odds.push_back({require_field(entry, "name", lineno),
                            parse_int_field(entry, "degree", lineno),
                            require_field(entry, "differential", lineno), lineno});
        }
    }
    if (even_names.empty()) throw std::invalid_argument("model parse error: no even_generators");
    GeneratorSetPtr gens;
    try {
        gens = gpoly::make_generators(even_names, even_degrees);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("model parse error: ") + e.what());
    }
    std::vector<int> odd_degrees;
    std::vector<Polynomial> diffs;
    for (const auto& o : odds) {
        odd_degrees.push_back(o.degree);
        try {
            diffs.push_back(gpoly::parse_polynomial(o.differential, gens, o.degree + 1));
        } catch (const std::exception& e) {
            parse_fail(o.line, "field 'differential' of " + o.name + ": " + e.what());
        }
    }
    try {
        return PureModel(gens, std::move(odd_degrees), std::move(diffs));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("model parse error: ") + e.what());
    }
}

PureModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model_text(ss.str());
}

PresentationData parse_presentation_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    enum class Section { None, Even, Relations } section = Section::None;
    std::vector<std::string> even_names;
    std::vector<int> even_degrees;
    struct RelEntry {
        std::string poly;
        int line;
    };
    std::vector<RelEntry> rels;
    int declared_max = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        if (line == "even_generators:") {
            section = Section::Even;
            continue;
        }
        if (line == "relations:") {
            section = Section::Relations;
            continue;
        }
        if (line.rfind("max_degree:", 0) == 0) {
            declared_max = parse_int_field({{"max_degree", strip(line.substr(11))}},
                                           "max_degree", lineno);
            if (declared_max <= 0) parse_fail(lineno, "max_degree must be positive");
            continue;
        }
        if (line.rfind("- ", 0) != 0)
            parse_fail(lineno, "expected a section header or '- {...}' entry");
        if (section == Section::None)
            parse_fail(lineno, "entry before any section header");
        auto entry = parse_entry(line.substr(2), lineno);
        if (section == Section::Even) {
            even_names.push_back(require_field(entry, "name", lineno));
            even_degrees.push_back(parse_int_field(entry, "degree", lineno));
        } else {
            rels.push_back({require_field(entry, "poly", lineno), lineno});
        }
    }
    if (even_names.empty())
        throw std::invalid_argument("presentation parse error: no even_generators");
    PresentationData data;
    try {
        data.gens = gpoly::make_generators(even_names, even_degrees);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("presentation parse error: ") + e.what());
    }
    int max_degree = *std::max_element(even_degrees.begin(), even_degrees.end());
    for (const auto& r : rels) {
        Polynomial p = Polynomial::zero(data.gens);
        try {
            p = gpoly::parse_polynomial(r.poly, data.gens);
        } catch (const std::exception& e) {
            parse_fail(r.line, std::string("field 'poly': ") + e.what());
        }
        int degree = 0;
        if (p.is_zero() || !p.is_homogeneous(&degree))
            parse_fail(r.line, "relation must be nonzero and homogeneous");
        max_degree = std::max(max_degree, degree);
        data.relations.push_back(std::move(p));
    }
    data.max_degree = declared_max > 0 ? declared_max : max_degree;
    return data;
}

PresentationData parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open presentation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation_text(ss.str());
}

bool text_is_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw))
        if (strip(strip_comment(raw)) == "relations:") return true;
    return false;
}

std::string model_to_text(const PureModel& m) {
    std::ostringstream os;
    os << "even_generators:\n";
    for (std::size_t i = 0; i < m.gens->size(); ++i)
        os << "  - {name: " << m.gens->names[i] << ", degree: " << m.gens->degrees[i] << "}\n";
    os << "odd_generators:\n";
    for (std::size_t i = 0; i < m.k(); ++i)
        os << "  - {name: y" << (i + 1) << ", degree: " << m.odd_degrees[i]
           << ", differential: \"" << gpoly::to_string(m.differentials[i]) << "\"}\n";
    return os.str();
}

} // namespace f0::model
