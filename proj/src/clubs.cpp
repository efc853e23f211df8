#include "f0/clubs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace f0::clubs {

namespace {

[[noreturn]] void club_fail(const std::string& message) {
    throw std::invalid_argument("clubs: " + message);
}

} // namespace

Club::Club(unsigned character) : character_(character) {
    if (character == 0 || character > 7)
        club_fail("club character must be a nonzero element of Z_2^3, got " +
                  std::to_string(character));
    std::size_t next = 0;
    for (unsigned g = 1; g <= 7; ++g)
        if (dot(character_, g) == 1) members_[next++] = g;
    if (next != members_.size())
        throw std::logic_error("clubs: character " + std::to_string(character) +
                               " does not cut out 4 members");
}

bool Club::contains(unsigned g) const {
    return g != 0 && g <= 7 && dot(character_, g) == 1;
}

std::vector<Club> all_clubs() {
    std::vector<Club> out;
    out.reserve(7);
    for (unsigned u = 1; u <= 7; ++u) out.emplace_back(u);
    return out;
}

std::vector<unsigned> club_intersection(const Club& c1, const Club& c2) {
    std::vector<unsigned> out;
    for (unsigned g : c1.members())
        if (c2.contains(g)) out.push_back(g);
    return out;
}

PairClass classify_pair(const Club& c1, const Club& c2) {
    if (c1 == c2) return PairClass::Equal;
    const auto common = club_intersection(c1, c2);
    if (common.size() != 2)
        throw std::logic_error("clubs: distinct clubs met in " +
                               std::to_string(common.size()) + " members");
    return PairClass::TwoCommon;
}

TripleClass classify_triple(const Club& c1, const Club& c2, const Club& c3) {
    if (c1 == c2 || c1 == c3 || c2 == c3)
        club_fail("classify_triple requires pairwise distinct clubs");
    const auto i12 = club_intersection(c1, c2);
    const auto i13 = club_intersection(c1, c3);
    const auto i23 = club_intersection(c2, c3);

    std::set<unsigned> pairwise;
    pairwise.insert(i12.begin(), i12.end());
    pairwise.insert(i13.begin(), i13.end());
    pairwise.insert(i23.begin(), i23.end());
    const bool disjoint_two_sets = i12.size() == 2 && i13.size() == 2 && i23.size() == 2 &&
                                   pairwise.size() == 6;
    if (disjoint_two_sets) return TripleClass::TypeI;

    std::set<unsigned> members;
    for (const Club* c : {&c1, &c2, &c3})
        members.insert(c->members().begin(), c->members().end());
    if (members.size() != 7)
        throw std::logic_error("clubs: non-TypeI triple covers only " +
                               std::to_string(members.size()) + " involutions");
    return TripleClass::TypeII;
}

std::pair<long long, long long> double_count_identity(const FixedPointConfig& cfg) {
    const long long lhs = 4LL * static_cast<long long>(cfg.points.size());
    long long rhs = 0;
    for (unsigned iota = 1; iota <= 7; ++iota)
        for (const Club& c : cfg.points)
            if (c.contains(iota)) ++rhs;
    return {lhs, rhs};
}

int WeightMap::weight(unsigned iota) const {
    int total = 0;
    for (unsigned c : columns) total += dot(iota, c);
    return total;
}

std::vector<int> WeightMap::profile() const {
    std::vector<int> out;
    const unsigned top = (1u << r) - 1;
    out.reserve(top);
    for (unsigned iota = 1; iota <= top; ++iota) out.push_back(weight(iota));
    std::sort(out.begin(), out.end());
    return out;
}

RigidityRequirement rigidity_requirement(int dim) {
    switch (dim) {
    case 12: return {12, 3, 6, 3};
    case 14: return {14, 4, 7, 3};
    case 16: return {16, 4, 8, 4};
    default: club_fail("rigidity is implemented for dimensions 12, 14, 16 only, got " +
                       std::to_string(dim));
    }
}

namespace {

struct RigidityScanner {
    int m;
    int min_weight;
    unsigned top; // largest column value, 2^r - 1
    std::vector<int> weights; // indexed by involution 1..top
    std::vector<unsigned> columns;
    long long scanned = 0;
    long long admissible = 0;
    std::set<std::vector<int>> profiles;

    void add_column(unsigned c, int sign) {
        for (unsigned iota = 1; iota <= top; ++iota) weights[iota] += sign * dot(iota, c);
    }

    void recurse(unsigned lo) {
        if (columns.size() == static_cast<std::size_t>(m)) {
            ++scanned;
            for (unsigned iota = 1; iota <= top; ++iota)
                if (weights[iota] < min_weight) return;
            ++admissible;
            std::vector<int> profile(weights.begin() + 1, weights.end());
            std::sort(profile.begin(), profile.end());
            profiles.insert(std::move(profile));
            return;
        }
        for (unsigned c = lo; c <= top; ++c) {
            columns.push_back(c);
            add_column(c, +1);
            recurse(c);
            add_column(c, -1);
            columns.pop_back();
        }
    }
};

} // namespace

RigidityReport rigidity_scan(int dim) {
    const auto req = rigidity_requirement(dim);
    RigidityScanner scanner;
    scanner.m = req.m;
    scanner.min_weight = req.min_weight;
    scanner.top = (1u << req.r) - 1;
    scanner.weights.assign(scanner.top + 1, 0);
    scanner.recurse(1);

    RigidityReport report;
    report.requirement = req;
    report.multisets_scanned = scanner.scanned;
    report.admissible = scanner.admissible;
    report.profiles.assign(scanner.profiles.begin(), scanner.profiles.end());
    return report;
}

std::vector<std::vector<int>> rigidity_profiles(int dim) { return rigidity_scan(dim).profiles; }

} // namespace f0::clubs
