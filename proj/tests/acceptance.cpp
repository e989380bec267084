// Acceptance run: one PASS/FAIL line per criterion.
//
// Expected numbers here are the published ones, typed in independently of
// the catalog. Exit status is 0 when the set of failing criteria equals the
// --expect-fail set (empty by default).

#include "autbound/bounds/bound_calculus.hpp"
#include "autbound/catalog/registry.hpp"
#include "autbound/catalog/verify.hpp"
#include "autbound/error.hpp"
#include "autbound/invariants/invariants.hpp"
#include "autbound/poly/action.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace autbound;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

struct Orders {
    const char* id;
    long linf, scalar, linx;
};

std::string triple(const GroupSummary& s)
{
    return "(" + s.order.get_str() + ", " + s.scalar_order.get_str() + ", " + s.pgl_order.get_str() + ")";
}

bool matches(const GroupSummary& s, const Orders& o)
{
    return s.order == o.linf && s.scalar_order == o.scalar && s.pgl_order == o.linx && s.primes.size() == 2;
}

GeneratedGroup named(const std::string& id) { return GeneratedGroup(find_group(id).generators); }

Result table2()
{
    std::ifstream in(std::string(AUTBOUND_TEST_DATA_DIR) + "/exceptional_partitions.csv");
    std::string line;
    std::getline(in, line);
    const auto rows = enumerate_exceptional(2, 26);
    int matched = 0, total = 0;
    std::string first_bad;
    for (std::size_t i = 0; std::getline(in, line); ++i, ++total) {
        std::stringstream ss(line);
        std::string index, n, blocks, max_d, ratio;
        std::getline(ss, index, ',');
        std::getline(ss, n, ',');
        std::getline(ss, blocks, ',');
        std::getline(ss, max_d, ',');
        std::getline(ss, ratio, ',');
        std::vector<int> b;
        std::stringstream bs(blocks);
        for (int v; bs >> v;) b.push_back(v);
        const bool ok = i < rows.size() && rows[i].n == std::stoi(n) && rows[i].partition.blocks() == b
                        && rows[i].max_d == std::stoi(max_d) && within_one_unit(ratio, rows[i].ratio_text);
        if (ok) ++matched;
        else if (first_bad.empty()) first_bad = " first mismatch at row " + index;
    }
    return {total == 80 && rows.size() == 80 && matched == 80,
            std::to_string(rows.size()) + " rows, " + std::to_string(matched) + "/80 match" + first_bad};
}

Result xi_values()
{
    const std::vector<std::pair<int, Integer>> table = {
        {2, 60},      {3, 360},        {4, 25920},    {5, 25920}, {6, 6531840}, {7, 1451520}, {8, 348364800},
        {9, 4199040}, {12, Integer("448345497600")}};
    std::set<int> special;
    int bad = 0;
    for (const auto& [n, v] : table) {
        special.insert(n);
        if (xi(n) != v) ++bad;
    }
    for (int n = 1; n <= 40; ++n) {
        if (special.count(n)) continue;
        if (xi(n) != (n == 1 ? Integer(1) : factorial(n + 1))) ++bad;
    }
    return {bad == 0, "9 table values and (N+1)! for the other N <= 40, " + std::to_string(bad) + " mismatches"};
}

Result highdim()
{
    int held = 0;
    for (int n = 27; n <= 40; ++n) held += verify_no_exceptional(n).holds ? 1 : 0;
    return {held == 14, std::to_string(held) + "/14 of N = 27..40 hold"};
}

Result tier1_orders()
{
    const Orders expected[] = {{"ex-1-4", 672, 4, 168},        {"ex-1-6", 2160, 6, 360},
                               {"ex-1-6-2", 1296, 6, 216},     {"ex-2-4", 7680, 4, 1920},
                               {"ex-2-6", 41472, 6, 6912},     {"ex-2-12", 1036800, 12, 86400}};
    std::string detail;
    bool all = true;
    for (const auto& o : expected) {
        GeneratedGroup g(find_example(o.id).generators);
        const GroupSummary closure = group_order(g, {}, Strategy::closure);
        const GroupSummary bsgs = group_order(g, {}, Strategy::bsgs);
        const bool ok = matches(closure, o) && matches(bsgs, o);
        all = all && ok;
        detail += std::string(detail.empty() ? "" : "; ") + o.id + " " + triple(closure) + (ok ? "" : " MISMATCH");
    }
    return {all, detail + "; closure and Schreier-Sims agree at two primes each"};
}

Result large_orders()
{
    const Orders e46{"ex-4-6", 39191040, 6, 6531840};
    const Orders e412{"ex-4-12", 2239488000, 12, 186624000};
    const GroupSummary a = group_order(GeneratedGroup(find_example(e46.id).generators));
    std::string detail = std::string("ex-4-6 ") + triple(a) + " [" + to_string(a.tier) + "]";
    bool ok = matches(a, e46);
    try {
        const GroupSummary b = group_order(GeneratedGroup(find_example(e412.id).generators), {}, Strategy::bsgs);
        detail += std::string("; ex-4-12 ") + triple(b) + " [" + to_string(b.tier) + ", primes "
                  + std::to_string(b.primes.at(0)) + "," + std::to_string(b.primes.at(1)) + "]";
        ok = ok && matches(b, e412);
    } catch (const BudgetExceeded&) {
        // Degraded form: order skipped, the remaining checks must pass.
        VerifyOptions options;
        const auto report = verify_example(find_example(e412.id), options);
        bool rest = true;
        for (const auto& c : report.checks) rest = rest && c.status != CheckStatus::fail;
        detail += "; ex-4-12 order check SKIPPED (Schreier-Sims budget exceeded), remaining checks "
                  + std::string(rest ? "pass" : "fail");
        ok = ok && rest;
    }
    return {ok, detail};
}

Result invariance()
{
    std::string detail;
    bool all = true;
    for (const char* id : {"ex-1-4", "ex-1-6-2", "ex-2-4", "ex-2-6", "ex-2-12", "ex-4-6", "ex-4-12"}) {
        const ExampleRecord r = find_example(id);
        auto gens = r.generators;
        // The catalog corrects the fifth quartic generator; check the one as printed.
        if (r.id == "ex-2-4") gens[4] = quartic_printed_m5();
        const bool ok = is_invariant(gens, *r.polynomial);
        all = all && ok;
        if (!ok) detail += std::string(detail.empty() ? "" : "; ") + id + " not invariant under printed generators";
    }
    const ExampleRecord wiman = find_example("ex-1-6");
    const bool wiman_false = !is_invariant(wiman.generators, *wiman.polynomial);
    const Integer dim = invariant_dimension(GeneratedGroup(wiman.generators), 6);
    all = all && wiman_false && dim == 1;
    detail += std::string(detail.empty() ? "" : "; ") + "Wiman sextic vs printed generators: "
              + (wiman_false ? "false" : "true") + ", invariant sextics " + dim.get_str();
    return {all, detail};
}

Result invariant_degrees(bool extended)
{
    std::string detail;
    bool all = true;
    auto expect = [&](const std::string& label, long got, long want) {
        all = all && got == want;
        detail += std::string(detail.empty() ? "" : ", ") + label + " " + std::to_string(got)
                  + (got == want ? "" : " (want " + std::to_string(want) + ")");
    };
    expect("2.A5", smallest_semiinvariant_degree(named("2.A5")), 12);
    expect("2.S4", smallest_semiinvariant_degree(named("2.S4")), 6);
    expect("2.A4", smallest_semiinvariant_degree(named("2.A4")), 4);
    expect("Valentiner", smallest_semiinvariant_degree(named("valentiner")), 6);
    const GeneratedGroup klein = named("klein");
    const int k1 = smallest_semiinvariant_degree(klein);
    expect("Klein", k1, 4);
    const auto m = molien_series(derived_subgroup(klein), 12);
    int k2 = 0;
    for (int k = k1 + 1; k <= 12 && k2 == 0; ++k) {
        if (m.coefficients[k] > 0) k2 = k;
    }
    expect("Klein next", k2, 6);
    expect("A5 (3-dim)", smallest_semiinvariant_degree(named("A5-3dim")), 2);
    const Integer v6 = invariant_dimension(derived_subgroup(named("valentiner")), 6);
    expect("Valentiner sextics", v6.get_si(), 1);
    if (extended) {
        const auto reports = verify_external(std::string(AUTBOUND_DATA_DIR) + "/external");
        for (const auto& r : reports) {
            all = all && r.outcome() == Outcome::pass;
            detail += ", " + r.id + " " + to_string(r.outcome());
        }
    } else {
        detail += "; extended profile not requested";
    }
    return {all, detail};
}

Result lattice_bounds()
{
    int bad = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= 12; ++d) {
            if (diagonal_stabilizer(HomogPoly::fermat(n, d)).order != ipow(Integer(d), static_cast<unsigned>(n))) ++bad;
        }
    }
    int catalog = 0;
    for (const auto& r : exceptional_examples()) {
        const HomogPoly& f = *r.polynomial;
        const Integer cap = ipow(Integer(r.d), static_cast<unsigned>(r.n + 2));
        const auto s = diagonal_stabilizer(f);
        const auto minor = exponent_minor_bound(f);
        if (s.order > cap || minor.determinant <= 0 || minor.determinant > cap) ++bad;
        ++catalog;
    }
    return {bad == 0, "Fermat N <= 6, d <= 12 and " + std::to_string(catalog) + " catalog polynomials, "
                          + std::to_string(bad) + " violations"};
}

Result properties(const std::string& binary)
{
    const std::string cmd = "\"" + binary + "\" --minimal > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return {rc == 0, "field axioms, reduction homomorphism, action composition, Molien/Reynolds, concatenation "
                     "inequality; seeded suite exit status "
                         + std::to_string(rc)};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<int> expect_fail;
    std::string profile = "core";
    std::string props = AUTBOUND_PROPERTIES_BIN;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit 0 iff exactly these fail");
    app.add_option("--profile", profile)->check(CLI::IsMember({"core", "extended"}));
    app.add_option("--properties-binary", props);
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"exceptional partition table", table2},
        {"Xi values", xi_values},
        {"no exceptional partitions for 27 <= N <= 40", highdim},
        {"tier-1 group orders", tier1_orders},
        {"large group orders", large_orders},
        {"invariance of printed polynomials", invariance},
        {"smallest invariant degrees", [&] { return invariant_degrees(profile == "extended"); }},
        {"lattice bounds", lattice_bounds},
        {"property suites", [&] { return properties(props); }},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!r.pass) failed.insert(static_cast<int>(i + 1));
        std::cout << (r.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << r.detail << " ("
                  << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (failed != expected) {
        std::cout << "failing set differs from the expected set\n";
        return 1;
    }
    return 0;
}
