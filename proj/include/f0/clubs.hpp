#pragma once

// Combinatorics of "clubs" in Z_2^3 and rigid weight profiles of Z_2^r
// isotropy maps (r in {3,4}).
//
// A club is the 4-element complement of an index-2 subgroup of Z_2^3 inside
// the 7 nonzero elements: equivalently, {g != 0 : <u,g> = 1} for a nonzero
// character u, where <.,.> is the bitwise dot product over F_2.  Clubs are
// closed under triple products.  A weight map records, for a multiset of
// nonzero columns in Z_2^r, how many columns each nonzero involution
// "detects" (pairs odd with); fixed-point codimensions are twice the weight.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace f0::clubs {

// Parity of the F_2 dot product of two bit masks.
inline int dot(unsigned a, unsigned b) { return __builtin_parity(a & b); }

class Club {
public:
    // The club {g != 0 : <character, g> = 1}; character must be in 1..7.
    explicit Club(unsigned character);

    unsigned character() const { return character_; }
    const std::array<unsigned, 4>& members() const { return members_; }
    bool contains(unsigned g) const;

    bool operator==(const Club& other) const { return character_ == other.character_; }
    bool operator!=(const Club& other) const { return !(*this == other); }
    bool operator<(const Club& other) const { return character_ < other.character_; }

private:
    unsigned character_;
    std::array<unsigned, 4> members_; // ascending
};

// The 7 clubs of Z_2^3, ordered by character.
std::vector<Club> all_clubs();

enum class PairClass { Equal, TwoCommon };
enum class TripleClass { TypeI, TypeII };

// Ascending list of common members.
std::vector<unsigned> club_intersection(const Club& c1, const Club& c2);

// Equal iff identical; otherwise the intersection has exactly 2 members
// (any other size throws, and is unreachable for valid clubs).
PairClass classify_pair(const Club& c1, const Club& c2);

// For pairwise distinct clubs: TypeI iff the three pairwise intersections
// are disjoint 2-sets covering 6 involutions; TypeII otherwise, in which
// case the union of the three clubs covers all 7 nonzero involutions
// (violations throw, and are unreachable for valid clubs).
// Throws std::invalid_argument if the clubs are not pairwise distinct.
TripleClass classify_triple(const Club& c1, const Club& c2, const Club& c3);

// One club per abstract fixed point.
struct FixedPointConfig {
    std::vector<Club> points;
};

// Both sides of the fixed-point double count:
//   lhs = 4 * #points, rhs = sum over the 7 nonzero involutions i of
//   #{points p : i is a member of the club at p}.
std::pair<long long, long long> double_count_identity(const FixedPointConfig& cfg);

// Multiset of m nonzero columns in Z_2^r.
struct WeightMap {
    int r = 3;
    std::vector<unsigned> columns; // each in 1..2^r-1

    // #{columns c : <iota, c> = 1}.
    int weight(unsigned iota) const;
    // Weights of all 2^r - 1 nonzero involutions, sorted ascending.
    std::vector<int> profile() const;
};

// Rank, column count, and minimum admissible weight for a supported
// dimension (12, 14, or 16); throws on any other dimension.
struct RigidityRequirement {
    int dim = 0;
    int r = 0;
    int m = 0;
    int min_weight = 0;
};
RigidityRequirement rigidity_requirement(int dim);

struct RigidityReport {
    RigidityRequirement requirement;
    long long multisets_scanned = 0; // column multisets examined
    long long admissible = 0;        // those meeting the weight floor
    std::vector<std::vector<int>> profiles; // distinct sorted profiles, ascending order
};

// Enumerate every multiset of m nonzero columns in Z_2^r whose weight map
// keeps all nonzero involutions at or above the minimum weight; collect the
// distinct sorted weight profiles.
RigidityReport rigidity_scan(int dim);

// Just the distinct profiles from rigidity_scan.
std::vector<std::vector<int>> rigidity_profiles(int dim);

} // namespace f0::clubs
