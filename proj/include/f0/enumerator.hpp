#pragma once
// Candidate degree tuples in a fixed formal dimension, staged realizability
// filtering (integral Euler characteristic, polynomial quotient series with
// nonnegative coefficients, decomposable-cover minimality), witness model
// construction, and comparison against the shipped golden tables.

#include "f0/pure_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace f0::enumerator {

using model::DegreeTuple;
using model::PureModel;
using model::Rational;
using model::SeriesResult;

enum class EnumerationMode { Necessary, Construct };

enum class TupleStatus { RealizableConfirmed, NecessaryFiltersPassed, Rejected };

struct TupleRecord {
    DegreeTuple tuple;
    Rational chi;
    SeriesResult series;              // meaningful once the chi stage passed
    TupleStatus status = TupleStatus::Rejected;
    std::string rejection_reason;     // empty unless Rejected; prefixed by the stage
    std::optional<PureModel> witness; // Construct mode, confirmed tuples only
    std::uint64_t witness_seed = 0;   // per-tuple stream seed used by the search
};

struct EnumerationOptions {
    EnumerationMode mode = EnumerationMode::Necessary;
    int attempts = 100;
    std::uint64_t seed = 1;
};

// All tuples with the structural constraints (nondecreasing halves, b_i >=
// 2 a_i) and formal dimension n, canonically ordered; no filters applied.
std::vector<DegreeTuple> structural_candidates(int n);

// Every structural candidate with its filter verdict, canonically ordered.
// Construct mode additionally runs the witness search on each survivor.
std::vector<TupleRecord> enumerate_tuples(int n, const EnumerationOptions& opts = {});

// For every nonempty set S of distinct even-generator degrees, the number of
// differential degrees 2 b_j expressible as a sum of at least two degrees
// from S (with repetition) must be at least the number of generators whose
// degree lies in S; otherwise some differentials have no decomposable terms
// in the variables they would need to cut down.
bool decomposable_cover_condition(const DegreeTuple& t);

// Pairing of even slots to odd slots such that b_j is a multiple >= 2 of
// a_i; gives the product-of-truncated-algebras witness dy_j = x_i^(b_j/a_i).
// Index i of the result is the odd slot matched to even slot i.
std::optional<std::vector<std::size_t>> divisibility_matching(const DegreeTuple& t);

// Hand-built model for the six tuples with no divisibility matching, else
// the product model from the matching; nullopt when neither applies.
std::optional<PureModel> preferred_witness(const DegreeTuple& t);

// Per-tuple seed: global seed XOR FNV-1a hash of the display string, so the
// stream is independent of enumeration or thread order.
std::uint64_t tuple_seed(const DegreeTuple& t, std::uint64_t global_seed);

// Preferred witness first, then seeded random homogeneous differentials with
// decomposable terms and integer coefficients in [-3,3]; returns the first
// model passing the finite-dimensionality check. Absence is inconclusive.
std::optional<PureModel> construct_witness(const DegreeTuple& t, int attempts,
                                          std::uint64_t seed);

// --- golden tables ---------------------------------------------------------
// Golden files: dim02.txt .. dim16.txt, rows "{tuple: [4,6,9,11], chi: 5}",
// '#' comments allowed.
struct GoldenRow {
    DegreeTuple tuple;
    long long chi;
};

std::vector<GoldenRow> parse_golden_file(const std::string& path);

struct DimensionReport {
    int dim = 0;
    std::size_t matched = 0;
    std::vector<DegreeTuple> missing;            // golden but not enumerated
    std::vector<DegreeTuple> extra;              // enumerated but not golden
    std::vector<std::string> chi_mismatches;     // "(...): enumerated X, golden Y"
    bool ok() const { return missing.empty() && extra.empty() && chi_mismatches.empty(); }
};

struct TableReport {
    std::vector<DimensionReport> dims;
    bool ok() const {
        for (const auto& d : dims)
            if (!d.ok()) return false;
        return true;
    }
};

// Set comparison of the filter survivors against the golden rows for every
// even dimension 2..16. Throws on missing or unreadable golden files.
TableReport verify_tables(const std::string& golden_dir);

} // namespace f0::enumerator
