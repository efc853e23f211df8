// f0tool: command-line front end for the exact-arithmetic engine.
//
//   f0tool enumerate --dim N [--format json|csv|md] [--mode necessary|construct]
//                    [--seed S] [--attempts A]
//   f0tool verify-tables [--golden-dir DIR] [--format text|json]
//   f0tool halperin (MODEL-FILE | --tables-all) [--format text|json]
//   f0tool clubs (verify-all [--seed S] | rigidity --dim N | census)
//                [--format text|json]
//
// Exit codes: 0 success, 1 verification mismatch, 2 input/usage error.
// Output on stdout is byte-identical for identical (command, seed) across
// runs and thread counts; --timing reports elapsed time on stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include "f0/clubs.hpp"
#include "f0/enumerator.hpp"
#include "f0/halperin.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace f0;

namespace {

std::vector<int> display_ints(const model::DegreeTuple& t) {
    std::vector<int> out;
    for (int ai : t.a) out.push_back(2 * ai);
    for (int bi : t.b) out.push_back(2 * bi - 1);
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string verdict_name(halperin::HalperinCertificate::Verdict v) {
    using Verdict = halperin::HalperinCertificate::Verdict;
    switch (v) {
    case Verdict::DerivationFree: return "DerivationFree";
    case Verdict::SplitsAsFibration: return "SplitsAsFibration";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string involution_name(unsigned g) {
    static const char* names[] = {"0",         "rho",     "sigma",        "rho*sigma",
                                  "tau",       "rho*tau", "sigma*tau",    "rho*sigma*tau"};
    return g <= 7 ? names[g] : std::to_string(g);
}

std::string default_golden_dir() {
    if (const char* env = std::getenv("F0_GOLDEN_DIR")) return env;
    return std::string(F0_DATA_DIR) + "/goldens";
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(int dim, const std::string& format, const std::string& mode_name,
                  std::uint64_t seed, int attempts) {
    if (dim < 2 || dim > 16 || dim % 2 != 0) {
        std::cerr << "enumerate: --dim must be an even integer in [2,16], got " << dim << "\n";
        return 2;
    }
    if (attempts < 1) {
        std::cerr << "enumerate: --attempts must be positive\n";
        return 2;
    }
    const bool construct = mode_name == "construct";
    enumerator::EnumerationOptions opts;
    opts.mode = construct ? enumerator::EnumerationMode::Construct
                          : enumerator::EnumerationMode::Necessary;
    opts.seed = seed;
    opts.attempts = attempts;
    const auto records = enumerator::enumerate_tuples(dim, opts);
    std::vector<const enumerator::TupleRecord*> rows;
    for (const auto& r : records)
        if (r.status != enumerator::TupleStatus::Rejected) rows.push_back(&r);

    auto witness_text = [](const enumerator::TupleRecord& r) {
        std::string out;
        for (std::size_t i = 0; i < r.witness->differentials.size(); ++i) {
            if (i) out += "; ";
            out += "dy" + std::to_string(i + 1) + " = " +
                   gpoly::to_string(r.witness->differentials[i]);
        }
        return out;
    };

    if (format == "json") {
        json out;
        out["command"] = "enumerate";
        out["dim"] = dim;
        out["mode"] = mode_name;
        out["candidates"] = records.size();
        out["count"] = rows.size();
        if (construct) {
            out["seed"] = seed;
            out["attempts"] = attempts;
        }
        json jrows = json::array();
        for (const auto* r : rows) {
            json jr;
            jr["tuple"] = display_ints(r->tuple);
            jr["display"] = r->tuple.display();
            jr["chi"] = r->chi.str();
            if (construct) {
                if (r->witness.has_value()) {
                    json diffs = json::array();
                    for (const auto& p : r->witness->differentials)
                        diffs.push_back(gpoly::to_string(p));
                    jr["witness"] = diffs;
                    jr["witness_seed"] = r->witness_seed;
                } else {
                    jr["unconfirmed"] = true;
                }
            }
            jrows.push_back(jr);
        }
        out["rows"] = jrows;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        if (construct) std::cout << "# seed: " << seed << "\n";
        std::cout << (construct ? "tuple,chi,witness" : "tuple,chi") << "\n";
        for (const auto* r : rows) {
            std::cout << csv_quote(r->tuple.display()) << "," << r->chi.str();
            if (construct)
                std::cout << ","
                          << (r->witness.has_value() ? csv_quote(witness_text(*r))
                                                     : std::string("unconfirmed"));
            std::cout << "\n";
        }
    } else { // md
        if (construct) std::cout << "seed: " << seed << "\n\n";
        std::cout << (construct ? "| tuple | chi | witness |\n| --- | --- | --- |\n"
                                : "| tuple | chi |\n| --- | --- |\n");
        for (const auto* r : rows) {
            std::cout << "| " << r->tuple.display() << " | " << r->chi.str() << " |";
            if (construct)
                std::cout << " "
                          << (r->witness.has_value() ? witness_text(*r)
                                                     : std::string("unconfirmed"))
                          << " |";
            std::cout << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify-tables

int run_verify_tables(std::string dir, const std::string& format) {
    if (dir.empty()) dir = default_golden_dir();
    enumerator::TableReport report;
    try {
        report = enumerator::verify_tables(dir);
    } catch (const std::exception& e) {
        std::cerr << "verify-tables: " << e.what() << "\n";
        return 2;
    }
    std::size_t total = 0;
    for (const auto& d : report.dims) total += d.matched;

    if (format == "json") {
        json out;
        out["command"] = "verify-tables";
        out["golden_dir"] = dir;
        json dims = json::array();
        for (const auto& d : report.dims) {
            json jd;
            jd["dim"] = d.dim;
            jd["matched"] = d.matched;
            json missing = json::array(), extra = json::array();
            for (const auto& t : d.missing) missing.push_back(t.display());
            for (const auto& t : d.extra) extra.push_back(t.display());
            jd["missing"] = missing;
            jd["extra"] = extra;
            jd["chi_mismatches"] = d.chi_mismatches;
            jd["ok"] = d.ok();
            dims.push_back(jd);
        }
        out["dims"] = dims;
        out["total_matched"] = total;
        out["ok"] = report.ok();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: verify-tables\n";
        std::cout << "golden dir: " << dir << "\n";
        for (const auto& d : report.dims) {
            std::cout << "dim " << d.dim << ": " << d.matched << " matched";
            if (!d.ok()) std::cout << " [MISMATCH]";
            std::cout << "\n";
            for (const auto& t : d.missing) std::cout << "  missing: " << t.display() << "\n";
            for (const auto& t : d.extra) std::cout << "  extra: " << t.display() << "\n";
            for (const auto& s : d.chi_mismatches) std::cout << "  chi mismatch: " << s << "\n";
        }
        std::cout << (report.ok() ? "result: all " + std::to_string(total) + " tuples match"
                                  : "result: MISMATCH")
                  << "\n";
    }
    return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// halperin

json certificate_to_json(const halperin::HalperinCertificate& cert) {
    json j;
    j["verdict"] = verdict_name(cert.verdict);
    json dims = json::object();
    for (const auto& [d, n] : cert.space_dimensions) dims[std::to_string(d)] = n;
    j["space_dimensions"] = dims;
    if (!cert.note.empty()) j["note"] = cert.note;
    if (cert.witness.has_value()) {
        j["witness_degree"] = cert.witness->degree;
        j["witness_images"] = cert.witness_images;
    }
    if (cert.verdict == halperin::HalperinCertificate::Verdict::SplitsAsFibration) {
        j["split_index"] = cert.split_index;
        if (cert.base) j["base"] = certificate_to_json(*cert.base);
        if (cert.fiber) j["fiber"] = certificate_to_json(*cert.fiber);
    }
    j["certified"] = cert.certified();
    return j;
}

int run_halperin_file(const std::string& file, const std::string& format) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "halperin: cannot open '" << file << "'\n";
        return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();

    halperin::HalperinCertificate cert;
    std::string subject;
    try {
        if (model::text_is_presentation(text)) {
            auto data = model::parse_presentation_text(text);
            model::CohomologyPresentation c(data.gens, data.relations, data.max_degree);
            subject = "presentation with " + std::to_string(data.gens->size()) +
                      " generators, " + std::to_string(data.relations.size()) + " relations";
            cert = halperin::presentation_check(c);
        } else {
            auto m = model::parse_model_text(text);
            subject = "model " + m.tuple().display();
            try {
                cert = halperin::halperin_check(m);
            } catch (const std::exception& e) {
                // Well-formed input that fails verification.
                if (format == "json") {
                    json out;
                    out["command"] = "halperin";
                    out["file"] = file;
                    out["subject"] = subject;
                    out["error"] = e.what();
                    out["certified"] = false;
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "command: halperin\nsubject: " << subject << "\n"
                              << "FAIL: " << e.what() << "\n";
                }
                return 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "halperin: " << e.what() << "\n";
        return 2;
    }

    if (format == "json") {
        json out;
        out["command"] = "halperin";
        out["file"] = file;
        out["subject"] = subject;
        out["certificate"] = certificate_to_json(cert);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: halperin\nsubject: " << subject << "\n"
                  << halperin::certificate_to_text(cert);
    }
    return cert.certified() ? 0 : 1;
}

int run_halperin_tables(const std::string& format) {
    using Verdict = halperin::HalperinCertificate::Verdict;
    struct DimSummary {
        int dim;
        std::size_t certified = 0, derivation_free = 0, split = 0;
    };
    std::vector<DimSummary> summaries;
    std::vector<std::string> failures;
    std::size_t total = 0;
    for (int dim = 2; dim <= 16; dim += 2) {
        DimSummary s{dim};
        for (const auto& r : enumerator::enumerate_tuples(dim)) {
            if (r.status == enumerator::TupleStatus::Rejected) continue;
            ++total;
            auto m = enumerator::preferred_witness(r.tuple);
            if (!m.has_value()) {
                failures.push_back(r.tuple.display() + ": no representative model");
                continue;
            }
            auto cert = halperin::halperin_check(*m);
            if (!cert.certified()) {
                failures.push_back(r.tuple.display() + ": " + verdict_name(cert.verdict) +
                                   (cert.note.empty() ? "" : " (" + cert.note + ")"));
                continue;
            }
            ++s.certified;
            if (cert.verdict == Verdict::DerivationFree) ++s.derivation_free;
            if (cert.verdict == Verdict::SplitsAsFibration) ++s.split;
        }
        summaries.push_back(s);
    }
    const bool ok = failures.empty();

    if (format == "json") {
        json out;
        out["command"] = "halperin --tables-all";
        json dims = json::array();
        for (const auto& s : summaries) {
            json jd;
            jd["dim"] = s.dim;
            jd["certified"] = s.certified;
            jd["derivation_free"] = s.derivation_free;
            jd["split"] = s.split;
            dims.push_back(jd);
        }
        out["dims"] = dims;
        out["total"] = total;
        out["failures"] = failures;
        out["ok"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: halperin --tables-all\n";
        for (const auto& s : summaries)
            std::cout << "dim " << s.dim << ": " << s.certified
                      << " certified (derivation-free " << s.derivation_free << ", split "
                      << s.split << ")\n";
        for (const auto& f : failures) std::cout << "uncertified: " << f << "\n";
        std::cout << (ok ? "result: all " + std::to_string(total) + " models certified"
                         : "result: UNCERTIFIED MODELS")
                  << "\n";
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// clubs

int run_clubs_verify(std::uint64_t seed, const std::string& format) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    const auto clubs = clubs::all_clubs();

    {
        std::set<std::set<unsigned>> distinct;
        bool ok = clubs.size() == 7;
        for (const auto& c : clubs) {
            ok = ok && c.members().size() == 4;
            distinct.insert({c.members().begin(), c.members().end()});
        }
        ok = ok && distinct.size() == 7;
        checks.push_back({"seven distinct clubs of four members", ok, "clubs: 7"});
    }
    {
        bool ok = true;
        for (const auto& c : clubs)
            for (unsigned a : c.members())
                for (unsigned b : c.members())
                    for (unsigned d : c.members()) ok = ok && c.contains(a ^ b ^ d);
        checks.push_back({"triple product closure", ok, "member triples: 448"});
    }
    {
        bool ok = true;
        int pairs = 0;
        for (std::size_t i = 0; i < clubs.size(); ++i)
            for (std::size_t j = i + 1; j < clubs.size(); ++j) {
                ok = ok &&
                     clubs::classify_pair(clubs[i], clubs[j]) == clubs::PairClass::TwoCommon &&
                     clubs::club_intersection(clubs[i], clubs[j]).size() == 2;
                ++pairs;
            }
        ok = ok && pairs == 21;
        checks.push_back({"distinct pairs share exactly two members", ok, "pairs: 21"});
    }
    {
        bool ok = true;
        int type1 = 0, type2 = 0;
        for (std::size_t i = 0; i < clubs.size(); ++i)
            for (std::size_t j = i + 1; j < clubs.size(); ++j)
                for (std::size_t k = j + 1; k < clubs.size(); ++k) {
                    auto cls = clubs::classify_triple(clubs[i], clubs[j], clubs[k]);
                    if (cls == clubs::TripleClass::TypeI) {
                        ++type1;
                    } else {
                        ++type2;
                        std::set<unsigned> covered;
                        for (const auto* c : {&clubs[i], &clubs[j], &clubs[k]})
                            covered.insert(c->members().begin(), c->members().end());
                        ok = ok && covered.size() == 7;
                    }
                }
        ok = ok && type1 == 7 && type2 == 28;
        checks.push_back(
            {"triples classify as TypeI or TypeII with full TypeII coverage", ok,
             "TypeI: 7, TypeII: 28"});
    }
    {
        bool ok = true;
        long long configs = 1; // empty config
        {
            auto [lhs, rhs] = clubs::double_count_identity({});
            ok = ok && lhs == 0 && rhs == 0;
        }
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<std::size_t> idx(n, 0);
            while (true) {
                clubs::FixedPointConfig cfg;
                for (std::size_t p : idx) cfg.points.push_back(clubs[p]);
                auto [lhs, rhs] = clubs::double_count_identity(cfg);
                ok = ok && lhs == 4LL * static_cast<long long>(n) && lhs == rhs;
                ++configs;
                std::size_t pos = 0;
                while (pos < n && idx[pos] == clubs.size() - 1) idx[pos++] = 0;
                if (pos == n) break;
                ++idx[pos];
            }
        }
        ok = ok && configs == 1 + 7 + 49 + 343;
        checks.push_back({"double count identity, all configs up to 3 points", ok,
                          "configs: 400"});
    }
    {
        bool ok = true;
        std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
        for (int trial = 0; trial < 1000; ++trial) {
            clubs::FixedPointConfig cfg;
            const std::size_t n = rng() % 51;
            for (std::size_t p = 0; p < n; ++p)
                cfg.points.push_back(clubs[rng() % clubs.size()]);
            auto [lhs, rhs] = clubs::double_count_identity(cfg);
            ok = ok && lhs == 4LL * static_cast<long long>(n) && lhs == rhs;
        }
        checks.push_back({"double count identity, seeded random corpus", ok, "configs: 1000"});
    }
    {
        // Every multiset of 6 nonzero columns in Z_2^3 has total weight 4*6.
        bool ok = true;
        long long maps = 0;
        std::vector<unsigned> cols;
        auto rec = [&](auto&& self, unsigned lo) -> void {
            if (cols.size() == 6) {
                clubs::WeightMap w{3, cols};
                long long totalw = 0;
                for (int v : w.profile()) totalw += v;
                ok = ok && totalw == 24;
                ++maps;
                return;
            }
            for (unsigned c = lo; c <= 7; ++c) {
                cols.push_back(c);
                self(self, c);
                cols.pop_back();
            }
        };
        rec(rec, 1);
        ok = ok && maps == 924;
        checks.push_back({"dimension-12 weight totals equal 4 x columns", ok, "maps: 924"});
    }
    {
        bool ok = true;
        std::vector<int> p12{3, 3, 3, 3, 4, 4, 4};
        std::vector<int> p14(7, 3);
        p14.insert(p14.end(), 7, 4);
        p14.push_back(7);
        std::vector<int> p16(14, 4);
        p16.push_back(8);
        const std::vector<std::pair<int, std::vector<int>>> expected{
            {12, p12}, {14, p14}, {16, p16}};
        for (const auto& [dim, profile] : expected) {
            auto found = clubs::rigidity_profiles(dim);
            ok = ok && found.size() == 1 && found[0] == profile;
        }
        checks.push_back({"unique rigidity profiles in dimensions 12, 14, 16", ok,
                          "profiles: 1 each"});
    }

    bool all_ok = true;
    for (const auto& c : checks) all_ok = all_ok && c.pass;

    if (format == "json") {
        json out;
        out["command"] = "clubs verify-all";
        out["seed"] = seed;
        json jchecks = json::array();
        for (const auto& c : checks) {
            json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            jchecks.push_back(jc);
        }
        out["checks"] = jchecks;
        out["ok"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: clubs verify-all\nseed: " << seed << "\n";
        std::size_t passed = 0;
        for (const auto& c : checks) {
            std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " (" << c.detail
                      << ")\n";
            if (c.pass) ++passed;
        }
        std::cout << "result: " << passed << "/" << checks.size() << " checks passed\n";
    }
    return all_ok ? 0 : 1;
}

int run_clubs_rigidity(int dim, const std::string& format) {
    clubs::RigidityReport report;
    try {
        report = clubs::rigidity_scan(dim);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (format == "json") {
        json out;
        out["command"] = "clubs rigidity";
        out["dim"] = dim;
        out["r"] = report.requirement.r;
        out["columns"] = report.requirement.m;
        out["min_weight"] = report.requirement.min_weight;
        out["multisets_scanned"] = report.multisets_scanned;
        out["admissible"] = report.admissible;
        out["profiles"] = report.profiles;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: clubs rigidity --dim " << dim << "\n";
        std::cout << "requirement: r=" << report.requirement.r
                  << ", columns=" << report.requirement.m
                  << ", min weight=" << report.requirement.min_weight << "\n";
        std::cout << "multisets scanned: " << report.multisets_scanned << "\n";
        std::cout << "admissible: " << report.admissible << "\n";
        std::cout << "profiles: " << report.profiles.size() << "\n";
        for (std::size_t i = 0; i < report.profiles.size(); ++i) {
            std::cout << "profile " << (i + 1) << ":";
            for (int w : report.profiles[i]) std::cout << " " << w;
            std::cout << "\n";
        }
    }
    return 0;
}

int run_clubs_census(const std::string& format) {
    const auto clubs = clubs::all_clubs();
    if (format == "json") {
        json out;
        out["command"] = "clubs census";
        json jclubs = json::array();
        for (const auto& c : clubs) {
            json jc;
            jc["character"] = c.character();
            jc["members"] = std::vector<unsigned>(c.members().begin(), c.members().end());
            jclubs.push_back(jc);
        }
        out["clubs"] = jclubs;
        json triples = json::array();
        int type1 = 0, type2 = 0;
        for (std::size_t i = 0; i < clubs.size(); ++i)
            for (std::size_t j = i + 1; j < clubs.size(); ++j)
                for (std::size_t k = j + 1; k < clubs.size(); ++k) {
                    auto cls = clubs::classify_triple(clubs[i], clubs[j], clubs[k]);
                    (cls == clubs::TripleClass::TypeI ? type1 : type2)++;
                    json jt;
                    jt["clubs"] = {clubs[i].character(), clubs[j].character(),
                                   clubs[k].character()};
                    jt["class"] =
                        cls == clubs::TripleClass::TypeI ? "TypeI" : "TypeII";
                    triples.push_back(jt);
                }
        out["triples"] = triples;
        out["counts"] = {{"TypeI", type1}, {"TypeII", type2}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: clubs census\n";
        for (const auto& c : clubs) {
            std::cout << "club " << c.character() << ": {";
            for (std::size_t i = 0; i < c.members().size(); ++i)
                std::cout << (i ? ", " : "") << involution_name(c.members()[i]);
            std::cout << "}\n";
        }
        int type1 = 0, type2 = 0;
        for (std::size_t i = 0; i < clubs.size(); ++i)
            for (std::size_t j = i + 1; j < clubs.size(); ++j)
                for (std::size_t k = j + 1; k < clubs.size(); ++k) {
                    auto cls = clubs::classify_triple(clubs[i], clubs[j], clubs[k]);
                    (cls == clubs::TripleClass::TypeI ? type1 : type2)++;
                    std::cout << "(" << clubs[i].character() << "," << clubs[j].character()
                              << "," << clubs[k].character() << "): "
                              << (cls == clubs::TripleClass::TypeI ? "TypeI" : "TypeII")
                              << "\n";
                }
        std::cout << "TypeI: " << type1 << ", TypeII: " << type2 << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for positively elliptic rational homotopy data"};
    app.require_subcommand(1);
    int threads = 1;
    bool timing = false;
    app.add_option("--threads", threads, "worker thread bound (results are identical for any value)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "report elapsed time on stderr");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "degree tuples in one formal dimension");
    cmd_enum->fallthrough();
    int enum_dim = 0;
    std::string enum_format = "json", enum_mode = "necessary";
    std::uint64_t enum_seed = 1;
    int enum_attempts = 100;
    cmd_enum->add_option("--dim", enum_dim, "formal dimension (even, 2..16)")->required();
    cmd_enum->add_option("--format", enum_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd_enum->add_option("--mode", enum_mode, "filter only, or also construct witnesses")
        ->check(CLI::IsMember({"necessary", "construct"}));
    cmd_enum->add_option("--seed", enum_seed, "witness search seed");
    cmd_enum->add_option("--attempts", enum_attempts, "witness attempts per tuple");

    // verify-tables
    auto* cmd_verify = app.add_subcommand("verify-tables", "compare against golden tables");
    cmd_verify->fallthrough();
    std::string verify_dir, verify_format = "text";
    cmd_verify->add_option("--golden-dir", verify_dir,
                           "golden directory (default: F0_GOLDEN_DIR or shipped tables)");
    cmd_verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // halperin
    auto* cmd_hal = app.add_subcommand("halperin", "derivation certificates");
    cmd_hal->fallthrough();
    std::string hal_file, hal_format = "text";
    bool hal_tables = false;
    cmd_hal->add_option("file", hal_file, "model or presentation file");
    cmd_hal->add_flag("--tables-all", hal_tables, "certify a model for every table tuple");
    cmd_hal->add_option("--format", hal_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // clubs
    auto* cmd_clubs = app.add_subcommand("clubs", "involution club combinatorics");
    cmd_clubs->fallthrough();
    cmd_clubs->require_subcommand(1);
    auto* clubs_verify = cmd_clubs->add_subcommand("verify-all", "run every club invariant");
    clubs_verify->fallthrough();
    std::uint64_t clubs_seed = 20260825;
    std::string clubs_format = "text";
    clubs_verify->add_option("--seed", clubs_seed, "random corpus seed");
    auto* clubs_rigidity = cmd_clubs->add_subcommand("rigidity", "weight profiles for a dimension");
    clubs_rigidity->fallthrough();
    int clubs_dim = 0;
    clubs_rigidity->add_option("--dim", clubs_dim, "dimension (12, 14, or 16)")->required();
    auto* clubs_census = cmd_clubs->add_subcommand("census", "clubs and triple classification");
    clubs_census->fallthrough();
    cmd_clubs->add_option("--format", clubs_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (cmd_enum->parsed()) {
            rc = run_enumerate(enum_dim, enum_format, enum_mode, enum_seed, enum_attempts);
        } else if (cmd_verify->parsed()) {
            rc = run_verify_tables(verify_dir, verify_format);
        } else if (cmd_hal->parsed()) {
            if (hal_tables == !hal_file.empty()) {
                std::cerr << "halperin: give exactly one of a model file or --tables-all\n";
                rc = 2;
            } else {
                rc = hal_tables ? run_halperin_tables(hal_format)
                                : run_halperin_file(hal_file, hal_format);
            }
        } else if (cmd_clubs->parsed()) {
            if (clubs_verify->parsed()) rc = run_clubs_verify(clubs_seed, clubs_format);
            else if (clubs_rigidity->parsed()) rc = run_clubs_rigidity(clubs_dim, clubs_format);
            else rc = run_clubs_census(clubs_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "f0tool: " << e.what() << "\n";
        rc = 2;
    }
    if (timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "elapsed_ms: " << ms << "\n";
    }
    return rc;
}
