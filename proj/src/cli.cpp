#include "k0cat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "k0cat/abelian.hpp"
#include "k0cat/errors.hpp"
#include "k0cat/higher.hpp"
#include "k0cat/io.hpp"
#include "k0cat/polygon.hpp"
#include "k0cat/reference_data.hpp"

namespace k0cat::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

// --- formatting helpers -----------------------------------------------

// "157-147+146": nonzero terms sorted by label descending, coefficients
// of magnitude one implicit, others written as k*label.
std::string expand_over_labels(const std::vector<std::string>& labels,
                               const IntVec& v) {
    std::vector<std::pair<std::string, Int>> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) terms.emplace_back(labels[i], v[i]);
    }
    if (terms.empty()) return "0";
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, coeff] : terms) {
        const bool neg = coeff < 0;
        if (neg) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        const Int mag = neg ? Int(-coeff) : coeff;
        if (mag != 1) os << mag << '*';
        os << label;
        first = false;
    }
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

IntVec row_to_vec(const std::array<int, 6>& coeffs) {
    IntVec v;
    for (int c : coeffs) v.emplace_back(c);
    return v;
}

bool same_invariants(const GroupInvariants& a, const GroupInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

// --- subcommand bodies -------------------------------------------------

int run_polygon(int p, int q, const std::string& angulation,
                const std::string& format, std::ostream& out) {
    const polygon::PolygonParams par = polygon::make_params(p, q);
    const polygon::Angulation t = angulation == "fan"
                                      ? polygon::fan_angulation(par)
                                      : io::read_angulation_file(angulation, par);
    const GroupInvariants inv = polygon::k0_polygon(t);
    if (format == "json") {
        out << io::invariants_to_json(inv).dump() << "\n";
    } else {
        out << "model: polygon p=" << par.p << " q=" << par.q << " (n=" << par.n
            << ")\n"
            << "angulation: " << angulation << " (" << t.diagonals.size()
            << " diagonals)\n"
            << "K0 = " << to_string(inv) << "\n";
    }
    return 0;
}

int run_higher(int p, int d, const std::string& tilting,
               const std::string& method, const std::string& format,
               std::ostream& out) {
    const higher::HigherParams par = higher::make_params(p, d);
    std::optional<GroupInvariants> via_ar, via_theta;
    if (method == "ar" || method == "both") via_ar = higher::k0_higher_ar(par);
    if (method == "theta" || method == "both") {
        const higher::TiltingSet t = tilting == "default"
                                         ? higher::default_tilting(par)
                                         : io::read_tilting_file(tilting, par);
        via_theta = higher::k0_higher_theta(t);
    }

    if (format == "json") {
        if (method == "both") {
            nlohmann::json j;
            j["agreement"] = same_invariants(*via_ar, *via_theta);
            j["ar"] = io::invariants_to_json(*via_ar);
            j["theta"] = io::invariants_to_json(*via_theta);
            out << j.dump() << "\n";
        } else {
            out << io::invariants_to_json(via_ar ? *via_ar : *via_theta).dump()
                << "\n";
        }
        return 0;
    }

    out << "model: higher p=" << par.p << " d=" << par.d << " (z=" << par.z
        << ")\n";
    if (via_theta) out << "tilting: " << tilting << "\n";
    if (via_ar) out << "K0 (ar route) = " << to_string(*via_ar) << "\n";
    if (via_theta) out << "K0 (theta route) = " << to_string(*via_theta) << "\n";
    if (via_ar && via_theta) {
        out << "agreement: " << (same_invariants(*via_ar, *via_theta) ? "yes" : "NO")
            << "\n";
    }
    return 0;
}

int run_tables(const std::string& which, int p, int d, std::ostream& out) {
    const higher::HigherParams par = higher::make_params(p, d);
    const higher::TiltingSet t = higher::default_tilting(par);
    std::vector<std::string> labels;
    for (const higher::HIndec& s : t.summands) labels.push_back(display(par, s));

    if (which == "index") {
        out << "object,index\n";
        for (const higher::HIndec& s : higher::enumerate_indecs(par)) {
            out << csv_field(display(par, s)) << ","
                << csv_field(expand_over_labels(labels, higher::index_higher(t, s)))
                << "\n";
        }
    } else {
        out << "simple,theta\n";
        for (const higher::HIndec& s : t.summands) {
            out << csv_field(display(par, s)) << ","
                << csv_field(expand_over_labels(labels, higher::theta_of_simple(t, s)))
                << "\n";
        }
    }
    return 0;
}

// --- verify-paper ------------------------------------------------------

std::string check_index_table() {
    const higher::HigherParams par = higher::make_params(3, 2);
    const higher::TiltingSet t = higher::default_tilting(par);
    const std::vector<higher::HIndec> objs = higher::enumerate_indecs(par);
    if (objs.size() != refdata::kIndexTable.size()) {
        return "expected " + std::to_string(refdata::kIndexTable.size()) +
               " objects, found " + std::to_string(objs.size());
    }
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const std::string label = display(par, objs[i]);
        if (label != refdata::kIndexTable[i].object) {
            return "object order mismatch at row " + std::to_string(i + 1);
        }
        if (higher::index_higher(t, objs[i]) != row_to_vec(refdata::kIndexTable[i].coeffs)) {
            return "index of " + label + " differs";
        }
    }
    return {};
}

std::string check_theta_span() {
    const higher::TiltingSet t = higher::default_tilting(higher::make_params(3, 2));
    const std::vector<IntVec> rels = higher::theta_relations(t);
    const std::vector<IntVec> basis = hermite_row_basis(rels, 6);

    std::vector<IntVec> generators;
    for (const auto& row : refdata::kRelationGenerators) {
        generators.push_back(row_to_vec(row));
        if (!subgroup_contains(basis, generators.back())) {
            return "published generator " + std::to_string(generators.size()) +
                   " lies outside the relation subgroup";
        }
    }
    std::vector<IntVec> images;
    for (const auto& row : refdata::kSimpleImages) {
        images.push_back(row_to_vec(row.coeffs));
        if (!subgroup_contains(basis, images.back())) {
            return std::string("published image of the simple at ") + row.simple +
                   " lies outside the relation subgroup";
        }
    }
    if (!subgroup_equal(rels, generators, 6)) {
        return "published generators span a different subgroup";
    }
    if (!subgroup_equal(rels, images, 6)) {
        return "published simple images span a different subgroup";
    }
    return {};
}

std::string check_quotient_identifications() {
    const higher::HigherParams par = higher::make_params(3, 2);
    const higher::TiltingSet t = higher::default_tilting(par);
    const std::vector<IntVec> rels = higher::theta_relations(t);
    const std::vector<IntVec> basis = hermite_row_basis(rels, 6);

    std::vector<std::string> labels;
    for (const higher::HIndec& s : t.summands) labels.push_back(display(par, s));
    const auto slot = [&](const char* label) {
        return static_cast<std::size_t>(
            std::find(labels.begin(), labels.end(), label) - labels.begin());
    };
    const auto difference_vanishes = [&](const char* a, const char* b) {
        IntVec v(6, 0);
        v[slot(a)] += 1;
        v[slot(b)] -= 1;
        return subgroup_contains(basis, v);
    };

    for (const auto& cls : {refdata::kClassA, refdata::kClassB}) {
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (!difference_vanishes(cls[0], cls[i])) {
                return std::string(cls[0]) + " and " + cls[i] +
                       " are not identified in the quotient";
            }
        }
    }
    if (difference_vanishes(refdata::kClassA[0], refdata::kClassB[0])) {
        return "the two classes collapse to one";
    }

    // The two class images form a basis: adding both unit vectors to the
    // relations must kill the whole group.
    std::vector<IntVec> extended = rels;
    IntVec ea(6, 0), eb(6, 0);
    ea[slot(refdata::kClassA[0])] = 1;
    eb[slot(refdata::kClassB[0])] = 1;
    extended.push_back(ea);
    extended.push_back(eb);
    const GroupInvariants inv = quotient_invariants(6, extended);
    if (inv.free_rank != 0 || !inv.torsion.empty()) {
        return "class images do not form a basis (residue " + to_string(inv) + ")";
    }
    return {};
}

std::string check_headline_group() {
    const higher::HigherParams par = higher::make_params(3, 2);
    const GroupInvariants via_ar = higher::k0_higher_ar(par);
    const GroupInvariants via_theta =
        higher::k0_higher_theta(higher::default_tilting(par));
    if (via_ar.free_rank != 2 || !via_ar.torsion.empty()) {
        return "almost-split route gave " + to_string(via_ar);
    }
    if (!same_invariants(via_ar, via_theta)) {
        return "theta route gave " + to_string(via_theta);
    }
    return {};
}

std::string check_polygon_parity() {
    for (int q : {3, 5}) {
        for (int p = 2; p <= 6; ++p) {
            const polygon::PolygonParams par = polygon::make_params(p, q);
            const GroupInvariants inv = polygon::k0_polygon(polygon::fan_angulation(par));
            const std::size_t expect = (p % 2 == 1) ? 1 : 0;
            if (inv.free_rank != expect || !inv.torsion.empty()) {
                return "p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                       " gave " + to_string(inv);
            }
        }
    }
    return {};
}

std::string check_snf_random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng));
        const std::size_t cols = static_cast<std::size_t>(dim(rng));
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
        }
        const SnfResult r = smith_normal_form(m);
        const auto fail = [&](const std::string& what) {
            return "trial " + std::to_string(trial) + ": " + what;
        };
        if (mat_mul(mat_mul(r.u, m), r.v) != r.d) return fail("U*M*V != D");
        Int du = determinant(r.u);
        Int dv = determinant(r.v);
        if (du != 1 && du != -1) return fail("U is not unimodular");
        if (dv != 1 && dv != -1) return fail("V is not unimodular");
        Int prev = 0;
        for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (j != k && r.d.at(k, j) != 0) return fail("D is not diagonal");
            }
            const Int cur = r.d.at(k, k);
            if (cur < 0) return fail("negative diagonal entry");
            if (prev == 0 && cur != 0 && k > 0) return fail("zero before nonzero");
            if (prev != 0 && cur % prev != 0) return fail("divisibility chain broken");
            prev = cur;
        }
    }
    return {};
}

int run_verify(std::uint64_t seed, std::ostream& out) {
    out << "seed: " << seed << "\n";
    const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
        {"index-table", check_index_table},
        {"theta-span", check_theta_span},
        {"quotient-identifications", check_quotient_identifications},
        {"headline-group", check_headline_group},
        {"polygon-parity", check_polygon_parity},
        {"snf-random", [seed] { return check_snf_random(seed); }},
    };
    std::size_t passed = 0;
    for (const auto& [name, fn] : checks) {
        std::string detail;
        try {
            detail = fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (detail.empty()) {
            ++passed;
            out << "ok - " << name << "\n";
        } else {
            out << "FAIL - " << name << ": " << detail << "\n";
        }
    }
    out << "verify-paper: " << passed << "/" << checks.size() << " checks passed\n";
    return passed == checks.size() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact K0 invariants of two combinatorial models"};
    app.name("k0cat");
    app.require_subcommand(1);

    int pp = 0, pq = 0;
    std::string angulation = "fan", pformat = "text";
    CLI::App* poly = app.add_subcommand(
        "polygon-k0", "K0 of the polygon model over a chosen angulation");
    poly->add_option("--p", pp, "model rank")->required();
    poly->add_option("--q", pq, "gap parameter (at least 2)")->required();
    poly->add_option("--angulation", angulation, "'fan' or a JSON angulation file")
        ->capture_default_str();
    poly->add_option("--format", pformat, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int hp = 0, hd = 0;
    std::string tilting = "default", method = "both", hformat = "text";
    CLI::App* high = app.add_subcommand(
        "higher-k0", "K0 of the higher model along one or both routes");
    high->add_option("--p", hp, "model rank")->required();
    high->add_option("--d", hd, "model dimension")->required();
    high->add_option("--tilting", tilting, "'default' or a JSON tilting file")
        ->capture_default_str();
    high->add_option("--method", method, "ar, theta, or both")
        ->check(CLI::IsMember({"ar", "theta", "both"}))
        ->capture_default_str();
    high->add_option("--format", hformat, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int tp = 0, td = 0;
    std::string which;
    CLI::App* tables = app.add_subcommand(
        "tables", "CSV tables of the higher model over the default tilting set");
    tables->add_option("table", which, "index or theta")
        ->required()
        ->check(CLI::IsMember({"index", "theta"}));
    tables->add_option("--p", tp, "model rank")->required();
    tables->add_option("--d", td, "model dimension")->required();

    std::uint64_t seed = kDefaultSeed;
    CLI::App* verify = app.add_subcommand(
        "verify-paper", "reproduce the frozen reference results and report per check");
    verify->add_option("--seed", seed, "seed for the randomized checks")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed()) return run_polygon(pp, pq, angulation, pformat, out);
        if (high->parsed()) return run_higher(hp, hd, tilting, method, hformat, out);
        if (tables->parsed()) return run_tables(which, tp, td, out);
        if (verify->parsed()) {
            if (const char* env = std::getenv("K0CAT_SEED")) {
                std::size_t used = 0;
                const std::string text(env);
                unsigned long long v = 0;
                try {
                    v = std::stoull(text, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != text.size() || text.empty()) {
                    throw ValidationError("K0CAT_SEED is not a number: " + text);
                }
                seed = v;
            }
            return run_verify(seed, out);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelScopeError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace k0cat::cli
