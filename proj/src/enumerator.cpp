#include "f0/enumerator.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace f0::enumerator {

using gpoly::Monomial;
using gpoly::Polynomial;
using gpoly::make_generators;
using gpoly::monomials_of_degree;
using gpoly::parse_polynomial;

// --------------------------------------------------------------------------
// Candidate generation

std::vector<DegreeTuple> structural_candidates(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("structural_candidates: dimension must be even and >= 2");
    const int half = n / 2; // sum of (b_i - a_i)
    std::vector<DegreeTuple> out;

    std::vector<int> a, b;
    // With b_i >= 2 a_i every pair needs b_i - a_i >= a_i, so sum(a) <= half.
    std::function<void(std::size_t, int, int)> rec_b =
        [&](std::size_t i, int prev, int rem) {
            if (i == a.size()) {
                if (rem == 0) out.emplace_back(a, b);
                return;
            }
            const int lo = std::max(prev, 2 * a[i]);
            for (int bi = lo; bi <= rem; ++bi) {
                int need = 0; // cheapest completion: each later b_j >= max(bi, 2 a_j)
                for (std::size_t j = i + 1; j < a.size(); ++j)
                    need += std::max(bi, 2 * a[j]);
                if (need > rem - bi) {
                    if (bi > lo) break; // need grows with bi
                    continue;
                }
                b[i] = bi;
                rec_b(i + 1, bi, rem - bi);
            }
        };
    std::function<void()> rec_a = [&]() {
        const int s = std::accumulate(a.begin(), a.end(), 0);
        b.assign(a.size(), 0);
        rec_b(0, 2, half + s); // sum(b) = half + sum(a)
        if (s < half) {
            for (int nxt = a.back(); nxt + s <= half; ++nxt) {
                a.push_back(nxt);
                rec_a();
                a.pop_back();
            }
        }
    };
    for (int first = 1; first <= half; ++first) {
        a.assign(1, first);
        rec_a();
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------------------
// Minimality filter

namespace {

// Is target a sum of at least two weights (repetition allowed)?
bool decomposably_representable(int target, const std::vector<int>& weights) {
    if (target < 0) return false;
    std::vector<std::array<bool, 3>> reach(target + 1, {false, false, false});
    reach[0][0] = true;
    for (int s = 0; s <= target; ++s)
        for (int p = 0; p <= 2; ++p) {
            if (!reach[s][p]) continue;
            for (int w : weights)
                if (s + w <= target) reach[s + w][std::min(p + 1, 2)] = true;
        }
    return reach[target][2];
}

// First weight set violating the cover condition (as even degrees), if any.
std::optional<std::vector<int>> cover_violation(const DegreeTuple& t) {
    std::vector<int> distinct(t.a);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const std::size_t m = distinct.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> weights;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) weights.push_back(2 * distinct[i]);
        std::size_t generators_in_s = 0;
        for (int ai : t.a)
            if (std::find(weights.begin(), weights.end(), 2 * ai) != weights.end())
                ++generators_in_s;
        std::size_t covered = 0;
        for (int bi : t.b)
            if (decomposably_representable(2 * bi, weights)) ++covered;
        if (covered < generators_in_s) return weights;
    }
    return std::nullopt;
}

} // namespace

bool decomposable_cover_condition(const DegreeTuple& t) {
    return !cover_violation(t).has_value();
}

// --------------------------------------------------------------------------
// Witness construction

std::optional<std::vector<std::size_t>> divisibility_matching(const DegreeTuple& t) {
    const std::size_t k = t.k();
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (t.b[j] % t.a[i] == 0 && t.b[j] / t.a[i] >= 2) adj[i].push_back(j);

    std::vector<int> odd_matched_to(k, -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment =
        [&](std::size_t i, std::vector<char>& visited) {
            for (std::size_t j : adj[i]) {
                if (visited[j]) continue;
                visited[j] = 1;
                if (odd_matched_to[j] < 0 ||
                    augment(static_cast<std::size_t>(odd_matched_to[j]), visited)) {
                    odd_matched_to[j] = static_cast<int>(i);
                    return true;
                }
            }
            return false;
        };
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<char> visited(k, 0);
        if (!augment(i, visited)) return std::nullopt;
    }
    std::vector<std::size_t> out(k);
    for (std::size_t j = 0; j < k; ++j) out[odd_matched_to[j]] = j;
    return out;
}

namespace {

gpoly::GeneratorSetPtr tuple_generators(const DegreeTuple& t) {
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < t.k(); ++i) {
        names.push_back("x" + std::to_string(i + 1));
        degrees.push_back(2 * t.a[i]);
    }
    return make_generators(std::move(names), std::move(degrees));
}

std::vector<int> tuple_odd_degrees(const DegreeTuple& t) {
    std::vector<int> odd;
    for (int bi : t.b) odd.push_back(2 * bi - 1);
    return odd;
}

// Explicit differentials for the six tuples with no divisibility matching.
const std::map<std::string, std::vector<std::string>>& explicit_differentials() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"(4,6,9,11)", {"1*x1*x2", "1*x1^3 + 1*x2^2"}},
        {"(4,6,11,13)", {"1*x1^3 + 1*x2^2", "1*x1^2*x2"}},
        {"(2,4,6,3,9,11)", {"1*x1^2", "1*x2*x3", "1*x2^3 + 1*x3^2"}},
        {"(2,4,6,5,9,11)", {"1*x1^3", "1*x2*x3", "1*x2^3 + 1*x3^2"}},
        {"(2,2,4,6,3,3,9,11)", {"1*x1^2", "1*x2^2", "1*x3*x4", "1*x3^3 + 1*x4^2"}},
        {"(4,4,6,7,9,11)", {"1*x1^2", "1*x2*x3", "1*x2^3 + 1*x3^2"}},
    };
    return table;
}

} // namespace

std::optional<PureModel> preferred_witness(const DegreeTuple& t) {
    const auto& named = explicit_differentials();
    if (auto it = named.find(t.display()); it != named.end()) {
        auto gens = tuple_generators(t);
        auto odd = tuple_odd_degrees(t);
        std::vector<Polynomial> diffs;
        for (std::size_t j = 0; j < t.k(); ++j)
            diffs.push_back(parse_polynomial(it->second[j], gens, odd[j] + 1));
        return PureModel(gens, std::move(odd), std::move(diffs));
    }
    if (auto matching = divisibility_matching(t)) {
        auto gens = tuple_generators(t);
        auto odd = tuple_odd_degrees(t);
        std::vector<Polynomial> diffs(t.k(), Polynomial::zero(gens));
        for (std::size_t i = 0; i < t.k(); ++i) {
            const std::size_t j = (*matching)[i];
            Monomial m{std::vector<int>(t.k(), 0)};
            m.exponents[i] = t.b[j] / t.a[i];
            diffs[j] = Polynomial::monomial(gens, m, Rational(1));
        }
        return PureModel(gens, std::move(odd), std::move(diffs));
    }
    return std::nullopt;
}

std::uint64_t tuple_seed(const DegreeTuple& t, std::uint64_t global_seed) {
    std::uint64_t h = 14695981039346656037ull; // FNV-1a offset basis
    for (char c : t.display()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h ^ global_seed;
}

std::optional<PureModel> construct_witness(const DegreeTuple& t, int attempts,
                                          std::uint64_t seed) {
    if (auto w = preferred_witness(t)) {
        if (model::is_finite_dimensional(*w).pass) return w;
    }
    auto gens = tuple_generators(t);
    const auto odd = tuple_odd_degrees(t);
    std::vector<std::vector<Monomial>> pools(t.k());
    for (std::size_t j = 0; j < t.k(); ++j)
        for (const auto& m : monomials_of_degree(*gens, 2 * t.b[j]))
            if (m.total_exponent() >= 2) pools[j].push_back(m);

    std::mt19937_64 rng(tuple_seed(t, seed));
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<Polynomial> diffs;
        for (std::size_t j = 0; j < t.k(); ++j) {
            Polynomial p(gens, 2 * t.b[j]);
            for (const auto& m : pools[j]) {
                const int c = coeff(rng);
                if (c != 0) p.add_term(m, Rational(c));
            }
            if (p.is_zero() && !pools[j].empty()) p.add_term(pools[j].back(), Rational(1));
            diffs.push_back(std::move(p));
        }
        PureModel candidate(gens, odd, std::move(diffs));
        if (model::is_finite_dimensional(candidate).pass) return candidate;
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Enumeration with staged filters

std::vector<TupleRecord> enumerate_tuples(int n, const EnumerationOptions& opts) {
    std::vector<TupleRecord> out;
    for (auto& t : structural_candidates(n)) {
        TupleRecord rec;
        rec.tuple = t;
        rec.chi = model::euler_characteristic(t);
        if (!rec.chi.is_integer() || rec.chi.sign() <= 0) {
            rec.status = TupleStatus::Rejected;
            rec.rejection_reason = "chi: " + rec.chi.str() + " is not a positive integer";
            out.push_back(std::move(rec));
            continue;
        }
        rec.series = model::poincare_series(t);
        if (!rec.series.is_polynomial) {
            rec.status = TupleStatus::Rejected;
            rec.rejection_reason = "series: quotient series is not a polynomial";
            out.push_back(std::move(rec));
            continue;
        }
        if (!rec.series.all_nonnegative()) {
            rec.status = TupleStatus::Rejected;
            rec.rejection_reason = "series: quotient series has a negative coefficient";
            out.push_back(std::move(rec));
            continue;
        }
        if (auto violation = cover_violation(t)) {
            std::ostringstream reason;
            reason << "minimality: no decomposable differential degrees for weight set {";
            for (std::size_t i = 0; i < violation->size(); ++i)
                reason << (i ? "," : "") << (*violation)[i];
            reason << "}";
            rec.status = TupleStatus::Rejected;
            rec.rejection_reason = reason.str();
            out.push_back(std::move(rec));
            continue;
        }
        rec.status = TupleStatus::NecessaryFiltersPassed;
        if (opts.mode == EnumerationMode::Construct) {
            rec.witness_seed = tuple_seed(t, opts.seed);
            rec.witness = construct_witness(t, opts.attempts, opts.seed);
            if (rec.witness) rec.status = TupleStatus::RealizableConfirmed;
        }
        out.push_back(std::move(rec));
    }
    return out; // structural_candidates is already canonically ordered
}

// --------------------------------------------------------------------------
// Golden tables

namespace {

[[noreturn]] void golden_fail(const std::string& path, int line, const std::string& why) {
    throw std::invalid_argument("golden file " + path + ", line " + std::to_string(line) +
                                ": " + why);
}

} // namespace

std::vector<GoldenRow> parse_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open golden file: " + path);
    std::vector<GoldenRow> rows;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        if (line.front() != '{' || line.back() != '}')
            golden_fail(path, lineno, "expected '{tuple: [..], chi: N}'");

        const auto tuple_key = line.find("tuple:");
        const auto lb = line.find('[', tuple_key == std::string::npos ? 0 : tuple_key);
        const auto rb = line.find(']', lb == std::string::npos ? 0 : lb);
        if (tuple_key == std::string::npos || lb == std::string::npos || rb == std::string::npos)
            golden_fail(path, lineno, "missing tuple list");
        std::vector<int> degrees;
        std::istringstream nums(line.substr(lb + 1, rb - lb - 1));
        std::string item;
        while (std::getline(nums, item, ',')) {
            try {
                degrees.push_back(std::stoi(item));
            } catch (...) {
                golden_fail(path, lineno, "bad degree entry '" + item + "'");
            }
        }
        if (degrees.empty()) golden_fail(path, lineno, "empty tuple");

        const auto chi_key = line.find("chi:", rb);
        if (chi_key == std::string::npos) golden_fail(path, lineno, "missing chi field");
        long long chi = 0;
        try {
            std::size_t used = 0;
            std::string chi_text = line.substr(chi_key + 4);
            while (!chi_text.empty() && (chi_text.back() == '}' || chi_text.back() == ' '))
                chi_text.pop_back();
            chi = std::stoll(chi_text, &used);
        } catch (...) {
            golden_fail(path, lineno, "bad chi value");
        }

        try {
            rows.push_back({DegreeTuple::from_display(degrees), chi});
        } catch (const std::exception& e) {
            golden_fail(path, lineno, e.what());
        }
    }
    return rows;
}

TableReport verify_tables(const std::string& golden_dir) {
    TableReport report;
    for (int dim = 2; dim <= 16; dim += 2) {
        std::ostringstream name;
        name << golden_dir << "/dim" << (dim < 10 ? "0" : "") << dim << ".txt";
        const auto golden = parse_golden_file(name.str());

        std::map<DegreeTuple, long long> golden_chi;
        for (const auto& row : golden) {
            if (row.tuple.formal_dimension() != dim)
                throw std::invalid_argument("golden file " + name.str() + ": tuple " +
                                            row.tuple.display() + " has formal dimension " +
                                            std::to_string(row.tuple.formal_dimension()));
            golden_chi[row.tuple] = row.chi;
        }

        std::map<DegreeTuple, Rational> enumerated;
        for (const auto& rec : enumerate_tuples(dim))
            if (rec.status != TupleStatus::Rejected) enumerated[rec.tuple] = rec.chi;

        DimensionReport dr;
        dr.dim = dim;
        for (const auto& [t, chi] : golden_chi) {
            auto it = enumerated.find(t);
            if (it == enumerated.end()) {
                dr.missing.push_back(t);
            } else if (!(it->second == Rational(static_cast<long>(chi)))) {
                dr.chi_mismatches.push_back(t.display() + ": enumerated " + it->second.str() +
                                            ", golden " + std::to_string(chi));
            } else {
                ++dr.matched;
            }
        }
        for (const auto& [t, chi] : enumerated)
            if (!golden_chi.count(t)) dr.extra.push_back(t);
        report.dims.push_back(std::move(dr));
    }
    return report;
}

} // namespace f0::enumerator
