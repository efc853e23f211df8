#include "f0/gpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace f0::gpoly {

GeneratorSet::GeneratorSet(std::vector<std::string> names_, std::vector<int> degrees_)
    : names(std::move(names_)), degrees(std::move(degrees_)) {
    if (names.size() != degrees.size())
        throw std::invalid_argument("GeneratorSet: names/degrees length mismatch");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 2 || degrees[i] % 2 != 0)
            throw std::invalid_argument("GeneratorSet: degree of " + names[i] +
                                        " must be even and >= 2");
        if (i > 0 && degrees[i] < degrees[i - 1])
            throw std::invalid_argument("GeneratorSet: degrees must be nondecreasing");
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("GeneratorSet: duplicate name " + names[i]);
}

GeneratorSetPtr make_generators(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<const GeneratorSet>(std::move(names), std::move(degrees));
}

int Monomial::weighted_degree(const GeneratorSet& gens) const {
    int d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * gens.degrees[i];
    return d;
}

int Monomial::total_exponent() const {
    int t = 0;
    for (int e : exponents) t += e;
    return t;
}

namespace {

void enumerate_rec(const GeneratorSet& gens, std::size_t i, int remaining,
                   std::vector<int>& cur, std::vector<Monomial>& out) {
    if (i + 1 == gens.size()) {
        if (remaining % gens.degrees[i] == 0) {
            cur[i] = remaining / gens.degrees[i];
            out.push_back(Monomial{cur});
            cur[i] = 0;
        }
        return;
    }
    for (int e = 0; e * gens.degrees[i] <= remaining; ++e) {
        cur[i] = e;
        enumerate_rec(gens, i + 1, remaining - e * gens.degrees[i], cur, out);
    }
    cur[i] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const GeneratorSet& gens, int d) {
    if (d < 0 || d % 2 != 0)
        throw std::invalid_argument("monomials_of_degree: degree must be even and >= 0");
    std::vector<Monomial> out;
    if (gens.size() == 0) {
        if (d == 0) out.push_back(Monomial{{}});
        return out;
    }
    std::vector<int> cur(gens.size(), 0);
    enumerate_rec(gens, 0, d, cur, out);
    return out; // recursion emits ascending lex on exponent vectors
}

Polynomial Polynomial::monomial(GeneratorSetPtr gens, Monomial m, Rational coeff) {
    Polynomial p(std::move(gens));
    p.add_term(m, coeff);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.exponents.size() != gens_->size())
        throw std::invalid_argument("Polynomial: exponent vector length mismatch");
    if (declared_degree_ && m.weighted_degree(*gens_) != *declared_degree_)
        throw std::invalid_argument("Polynomial: term degree " +
                                    std::to_string(m.weighted_degree(*gens_)) +
                                    " violates declared degree " +
                                    std::to_string(*declared_degree_));
    auto it = terms_.find(m.exponents);
    if (it == terms_.end()) {
        terms_.emplace(m.exponents, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_homogeneous(int* degree_out) const {
    int d = 0;
    bool first = true;
    for (const auto& [expvec, coeff] : terms_) {
        (void)coeff;
        int td = Monomial{expvec}.weighted_degree(*gens_);
        if (first) {
            d = td;
            first = false;
        } else if (td != d) {
            return false;
        }
    }
    if (degree_out) *degree_out = d;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!(gens() == o.gens())) throw std::invalid_argument("Polynomial: generator-set mismatch");
    for (const auto& [expvec, coeff] : o.terms_) add_term(Monomial{expvec}, coeff);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!(gens() == o.gens())) throw std::invalid_argument("Polynomial: generator-set mismatch");
    for (const auto& [expvec, coeff] : o.terms_) add_term(Monomial{expvec}, -coeff);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(gens_);
    if (c.is_zero()) return out;
    for (const auto& [expvec, coeff] : terms_) out.terms_.emplace(expvec, coeff * c);
    return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (!(p.gens() == q.gens())) throw std::invalid_argument("poly_mul: generator-set mismatch");
    Polynomial out(p.gens_ptr());
    const std::size_t k = p.gens().size();
    for (const auto& [ea, ca] : p.terms()) {
        for (const auto& [eb, cb] : q.terms()) {
            std::vector<int> e(k);
            for (std::size_t i = 0; i < k; ++i) e[i] = ea[i] + eb[i];
            out.add_term(Monomial{std::move(e)}, ca * cb);
        }
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t gen_index) {
    if (gen_index >= p.gens().size())
        throw std::out_of_range("partial_derivative: generator index out of range");
    Polynomial out(p.gens_ptr());
    for (const auto& [expvec, coeff] : p.terms()) {
        if (expvec[gen_index] == 0) continue;
        std::vector<int> e = expvec;
        const int n = e[gen_index];
        e[gen_index] = n - 1;
        out.add_term(Monomial{std::move(e)}, coeff * Rational(n));
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + why);
    }
    std::string integer_token() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return s.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected generator name");
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, GeneratorSetPtr gens,
                            std::optional<int> declared_degree) {
    Polynomial out(gens, declared_degree);
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("polynomial parse error: empty input");
    bool first = true;
    while (!p.eof()) {
        Rational sign(1);
        char c = p.peek();
        if (c == '+' || c == '-') {
            ++p.pos;
            if (c == '-') sign = Rational(-1);
        } else if (!first) {
            p.fail("expected '+' or '-' between terms");
        }
        first = false;

        // Coefficient: integer or integer/integer; may be absent when the term
        // starts directly with a generator name.
        Rational coeff = sign;
        std::vector<int> exps(gens->size(), 0);
        bool saw_factor = false;
        char nxt = p.peek();
        if (std::isdigit(static_cast<unsigned char>(nxt))) {
            std::string num = p.integer_token();
            std::string den = "1";
            if (p.peek() == '/') {
                ++p.pos;
                den = p.integer_token();
            }
            coeff = sign * Rational(qlinalg::Integer(num), qlinalg::Integer(den));
            saw_factor = true;
        }
        while (true) {
            char sep = p.peek();
            if (sep == '*') {
                ++p.pos;
            } else if (saw_factor) {
                break; // end of term
            }
            std::string name = p.identifier();
            std::size_t idx = gens->size();
            for (std::size_t i = 0; i < gens->size(); ++i)
                if (gens->names[i] == name) { idx = i; break; }
            if (idx == gens->size()) p.fail("unknown generator '" + name + "'");
            int e = 1;
            if (p.peek() == '^') {
                ++p.pos;
                std::string et = p.integer_token();
                e = std::stoi(et);
                if (e < 0) p.fail("negative exponent");
            }
            exps[idx] += e;
            saw_factor = true;
        }
        out.add_term(Monomial{std::move(exps)}, coeff);
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lex so x1-leading terms print first, e.g. "1*x1^3 + 1*x2^2".
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [expvec, coeff] = *it;
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        os << c.str();
        for (std::size_t i = 0; i < expvec.size(); ++i) {
            if (expvec[i] > 0) os << "*" << p.gens().names[i] << "^" << expvec[i];
        }
    }
    return os.str();
}

} // namespace f0::gpoly
