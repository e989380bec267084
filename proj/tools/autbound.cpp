// Command-line front end: bound calculus, group orders, polynomial checks,
// Molien series and the example verification sweep.

#include "autbound/bounds/bound_calculus.hpp"
#include "autbound/catalog/io.hpp"
#include "autbound/catalog/verify.hpp"
#include "autbound/error.hpp"
#include "autbound/exact/literal.hpp"
#include "autbound/invariants/invariants.hpp"
#include "autbound/poly/action.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>

using namespace autbound;

namespace {

struct Globals {
    bool json = false;
    bool csv = false;
    std::uint64_t max_elements = GroupCaps{}.max_elements;
    std::uint64_t memory_budget_mb = GroupCaps{}.memory_budget_mb;
    bool tier3 = false;
    std::uint64_t seed = 1;
    std::string profile = "core";
};

GroupCaps caps_of(const Globals& g)
{
    GroupCaps caps;
    caps.max_elements = g.max_elements;
    caps.memory_budget_mb = g.memory_budget_mb;
    caps.seed = g.seed;
    return caps;
}

// Example files carry the group and polynomial under their own keys.
Json section(const Json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

Json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json report_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", to_string(c.status)},
                          {"note", c.note}});
    }
    return {{"id", r.id}, {"outcome", to_string(r.outcome())}, {"tier", r.tier}, {"seconds", r.seconds},
            {"checks", checks}};
}

void print_report(const VerificationReport& r)
{
    std::cout << r.id << ": " << to_string(r.outcome());
    if (!r.tier.empty()) std::cout << " [" << r.tier << "]";
    std::cout << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
    for (const auto& c : r.checks) {
        std::cout << "  " << std::left << std::setw(24) << c.name << std::setw(8) << to_string(c.status)
                  << " expected " << c.expected << ", computed " << c.computed;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << '\n';
    }
}

int emit_reports(const std::vector<VerificationReport>& reports, const Globals& g)
{
    if (g.json) {
        Json out = Json::array();
        for (const auto& r : reports) out.push_back(report_json(r));
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& r : reports) print_report(r);
    }
    return exit_code(reports);
}

std::string summary_text(const GroupSummary& s)
{
    std::string primes;
    for (auto p : s.primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
    std::string out = "order " + s.order.get_str() + "\nscalar order " + s.scalar_order.get_str() + "\npgl order " +
                      s.pgl_order.get_str();
    if (s.center_order) out += "\ncenter order " + s.center_order->get_str();
    return out + "\ntier " + to_string(s.tier) + "\nprimes " + primes + "\n";
}

int run_table2(int n_min, int n_max, std::string format, const Globals& g)
{
    if (g.json) format = "json";
    if (g.csv) format = "csv";
    const auto rows = enumerate_exceptional(n_min, n_max);
    if (format == "json") {
        Json out = Json::array();
        for (const auto& r : rows) {
            out.push_back({{"index", r.index},
                           {"N", r.n},
                           {"partition", r.partition.to_list()},
                           {"max_d", r.max_d},
                           {"ratio", r.ratio_text}});
        }
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "index,N,partition,max_d,ratio\n";
        for (const auto& r : rows) {
            std::cout << r.index << ',' << r.n << ",\"" << r.partition.to_list() << "\"," << r.max_d << ','
                      << r.ratio_text << '\n';
        }
    } else {
        for (const auto& r : rows) {
            std::cout << std::setw(3) << r.index << "  N=" << std::setw(2) << r.n << "  " << std::left << std::setw(18)
                      << r.partition.to_string() << std::right << " d<=" << std::setw(2) << r.max_d << "  "
                      << r.ratio_text << '\n';
        }
    }
    return 0;
}

int run_group_order(const std::string& file, const std::string& strategy, std::uint32_t prime, const Globals& g)
{
    GeneratedGroup group(group_from_json(section(read_json_file(file), "group")));
    Strategy s = Strategy::automatic;
    if (strategy == "closure") s = Strategy::closure;
    if (strategy == "bsgs") s = Strategy::bsgs;
    GroupSummary summary = group_order(group, caps_of(g), s, prime);
    if (g.json) {
        Json out = {{"order", integer_json(summary.order)},
                    {"scalar_order", integer_json(summary.scalar_order)},
                    {"pgl_order", integer_json(summary.pgl_order)},
                    {"tier", to_string(summary.tier)},
                    {"primes", summary.primes}};
        if (summary.center_order) out["center_order"] = integer_json(*summary.center_order);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << summary_text(summary);
    }
    return 0;
}

int run_poly_check(const std::string& file, const std::string& group_file, bool semi, const Globals& g)
{
    HomogPoly f = poly_from_json(section(read_json_file(file), "polynomial"));
    auto gens = group_from_json(section(read_json_file(group_file), "group"));
    Json out;
    bool ok = false;
    if (semi) {
        auto chi = semi_invariant_character(gens, f);
        ok = chi.has_value();
        out["semi_invariant"] = ok;
        if (chi) {
            Json values = Json::array();
            for (const auto& c : *chi) values.push_back(format_literal(c, std::max(1, c.conductor())));
            out["character"] = values;
        }
    } else {
        ok = is_invariant(gens, f);
        out["invariant"] = ok;
    }
    if (g.json) {
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (semi ? "semi-invariant: " : "invariant: ") << (ok ? "true" : "false") << '\n';
        if (out.contains("character")) {
            for (const auto& c : out["character"]) std::cout << "  chi = " << c.get<std::string>() << '\n';
        }
    }
    return ok ? 0 : 1;
}

int run_diag_stab(const std::string& file, const Globals& g)
{
    HomogPoly f = poly_from_json(section(read_json_file(file), "polynomial"));
    DiagonalStabilizer s = diagonal_stabilizer(f);
    Json divisors = Json::array();
    for (const auto& d : s.elementary_divisors) divisors.push_back(integer_json(d));
    Json out = {{"order", integer_json(s.order)}, {"elementary_divisors", divisors}};
    try {
        MinorReport m = exponent_minor_bound(f);
        out["minor_determinant"] = integer_json(m.determinant);
        out["minor_bound"] = integer_json(m.bound);
        out["minor_ok"] = m.ok;
    } catch (const PreconditionViolation&) {
        out["minor_determinant"] = nullptr;
    }
    if (g.json) {
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "order " << s.order.get_str() << "\nelementary divisors";
        for (const auto& d : s.elementary_divisors) std::cout << ' ' << d.get_str();
        std::cout << '\n';
        if (!out["minor_determinant"].is_null()) {
            std::cout << "witness minor det " << out["minor_determinant"].dump() << " <= " << out["minor_bound"].dump()
                      << (out["minor_ok"].get<bool>() ? "" : " VIOLATED") << '\n';
        }
    }
    return 0;
}

int run_smooth(const std::string& file, const Globals& g)
{
    HomogPoly f = poly_from_json(section(read_json_file(file), "polynomial"));
    SmoothnessReport s = smoothness_necessary(f);
    if (g.json) {
        Json vars = Json::array();
        for (const auto& v : s.variables) {
            vars.push_back({{"variable", v.variable}, {"witness", v.witness ? Json(*v.witness) : Json(nullptr)}});
        }
        std::cout << Json{{"pass", s.pass}, {"variables", vars}}.dump(2) << '\n';
    } else {
        for (const auto& v : s.variables) {
            std::cout << "x" << v.variable << ": ";
            if (v.witness) {
                for (std::size_t i = 0; i < v.witness->size(); ++i) std::cout << (i ? "," : "") << (*v.witness)[i];
                std::cout << '\n';
            } else {
                std::cout << "no witness\n";
            }
        }
        std::cout << (s.pass ? "pass" : "fail") << '\n';
    }
    return s.pass ? 0 : 1;
}

int run_molien(const std::string& file, int max_degree, bool semi, int basis_degree, const Globals& g)
{
    GeneratedGroup group(group_from_json(section(read_json_file(file), "group")));
    if (semi) group = derived_subgroup(group, caps_of(g));
    if (basis_degree >= 0) {
        auto basis = reynolds_basis(group, basis_degree, caps_of(g));
        Json out = Json::array();
        for (const auto& f : basis) out.push_back(poly_to_json(f));
        if (g.json) {
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << basis.size() << " invariant(s) of degree " << basis_degree << '\n';
            for (const auto& f : basis) std::cout << "  " << f.to_string() << '\n';
        }
        return 0;
    }
    MolienPrefix m = molien_series(group, max_degree, caps_of(g));
    if (g.json) {
        Json coeffs = Json::array();
        for (const auto& c : m.coefficients) coeffs.push_back(integer_json(c));
        std::cout << Json{{"group_order", integer_json(m.group_order)}, {"coefficients", coeffs}}.dump(2) << '\n';
    } else {
        std::cout << "group order " << m.group_order.get_str() << '\n';
        for (std::size_t k = 0; k < m.coefficients.size(); ++k) {
            std::cout << "  degree " << k << ": " << m.coefficients[k].get_str() << '\n';
        }
    }
    return 0;
}

int run_export(const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir / "groups");
    for (const auto& r : exceptional_examples()) write_json_file(dir / (r.id + ".json"), example_to_json(r));
    for (const auto& gr : named_groups()) {
        Json j = group_to_json(gr.generators);
        j["id"] = gr.id;
        j["notes"] = gr.notes;
        write_json_file(dir / "groups" / (gr.id + ".json"), j);
    }
    std::cout << "wrote " << exceptional_examples().size() << " examples and " << named_groups().size()
              << " groups to " << dir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks of automorphism bounds for hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--max-elements", g.max_elements, "closure element cap");
    app.add_option("--memory-budget-mb", g.memory_budget_mb, "memory budget for compact closure and Schreier-Sims");
    app.add_flag("--tier3", g.tier3, "run order checks that need Schreier-Sims at scale");
    app.add_option("--seed", g.seed, "seed for randomized steps");
    app.add_option("--profile", g.profile, "core or extended")->check(CLI::IsMember({"core", "extended"}));

    int n_min = 2, n_max = 26;
    std::string format = "text";
    auto* table2 = app.add_subcommand("table2", "exceptional partitions");
    table2->add_option("--n-min", n_min);
    table2->add_option("--n-max", n_max);
    table2->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
    table2->add_flag("--csv", g.csv);

    int xi_n = 0;
    auto* xi_cmd = app.add_subcommand("xi", "maximum index of the center in a primitive group");
    xi_cmd->add_option("N", xi_n)->required();

    std::string partition_text;
    int degree = 3;
    auto* bound = app.add_subcommand("bound", "B(partition, d)");
    bound->add_option("--partition", partition_text)->required();
    bound->add_option("--degree", degree);

    int hd_max = 40;
    auto* highdim = app.add_subcommand("highdim", "no exceptional partitions for N >= 27");
    highdim->add_option("--n-max", hd_max);

    std::string file, group_file, strategy = "auto";
    std::uint32_t prime = 0;
    auto* order = app.add_subcommand("group-order", "order of a generated matrix group");
    order->add_option("FILE", file)->required();
    order->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "closure", "bsgs"}));
    order->add_option("--prime", prime);

    bool semi = false;
    auto* poly_check = app.add_subcommand("poly-check", "invariance of a polynomial under generators");
    poly_check->add_option("FILE", file)->required();
    poly_check->add_option("--group", group_file)->required();
    poly_check->add_flag("--semi", semi);

    auto* diag = app.add_subcommand("diag-stab", "diagonal stabilizer of a polynomial");
    diag->add_option("FILE", file)->required();

    auto* smooth = app.add_subcommand("smooth-necessary", "monomial conditions necessary for smoothness");
    smooth->add_option("FILE", file)->required();

    int max_degree = 24, basis_degree = -1;
    auto* molien = app.add_subcommand("molien", "Molien series prefix");
    molien->add_option("GFILE", file)->required();
    molien->add_option("--max-degree", max_degree);
    molien->add_flag("--semi", semi, "use the derived subgroup");
    molien->add_option("--basis", basis_degree, "print a basis of invariants of this degree");

    std::string id;
    auto* verify = app.add_subcommand("verify-example", "verify one catalog example");
    verify->add_option("ID", id, "example id, or fermat-N-D")->required();

    std::string registry;
    FermatGrid grid;
    std::string external_dir = std::string(AUTBOUND_DATA_DIR) + "/external";
    auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every catalog example and a Fermat grid");
    verify_all_cmd->add_option("--registry", registry, "registry JSON replacing the built-in examples");
    verify_all_cmd->add_option("--fermat-n-max", grid.n_max);
    verify_all_cmd->add_option("--fermat-d-max", grid.d_max);
    verify_all_cmd->add_option("--external-dir", external_dir);

    auto* consistency = app.add_subcommand("bound-consistency", "expected orders against the bound calculus");
    consistency->add_option("ID", id)->required();

    std::string export_dir = std::string(AUTBOUND_DATA_DIR) + "/catalog";
    auto* export_cmd = app.add_subcommand("catalog-export", "write the built-in catalog as JSON files");
    export_cmd->add_option("DIR", export_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table2) return run_table2(n_min, n_max, format, g);
        if (*xi_cmd) {
            std::cout << xi(xi_n).get_str() << '\n';
            return 0;
        }
        if (*bound) {
            const Partition pi = Partition::parse(partition_text);
            const Integer b = bound_B(pi, degree);
            const Integer f = bound_B(Partition::ones(pi.size()), degree);
            if (g.json) {
                std::cout << Json{{"partition", pi.to_string()}, {"degree", degree}, {"bound", integer_json(b)},
                                  {"fermat", integer_json(f)}, {"exceptional", b >= f && !pi.is_fermat()}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << "B" << pi.to_string() << " at d=" << degree << ": " << b.get_str() << "\nFermat "
                          << f.get_str() << '\n';
            }
            return 0;
        }
        if (*highdim) {
            bool all = true;
            Json out = Json::array();
            for (int n = 27; n <= hd_max; ++n) {
                HighdimReport r = verify_no_exceptional(n);
                all = all && r.holds;
                out.push_back({{"N", n}, {"holds", r.holds}, {"best", r.best.to_string()},
                               {"best_ratio", render_sig3(r.best_ratio)}});
                if (!g.json) {
                    std::cout << "N=" << n << (r.holds ? " holds" : " FAILS") << "  runner-up " << r.best.to_string()
                              << " ratio " << render_sig3(r.best_ratio) << '\n';
                }
            }
            if (g.json) std::cout << out.dump(2) << '\n';
            return all ? 0 : 1;
        }
        if (*order) return run_group_order(file, strategy, prime, g);
        if (*poly_check) return run_poly_check(file, group_file, semi, g);
        if (*diag) return run_diag_stab(file, g);
        if (*smooth) return run_smooth(file, g);
        if (*molien) return run_molien(file, max_degree, semi, basis_degree, g);
        VerifyOptions options{caps_of(g), g.tier3};
        if (*verify) return emit_reports({verify_example(id, options)}, g);
        if (*verify_all_cmd) {
            const auto examples = registry.empty() ? exceptional_examples() : registry_from_json(read_json_file(registry));
            if (!registry.empty()) grid.n_max = 0;
            auto reports = verify_all(examples, options, grid);
            if (g.profile == "extended") {
                for (auto& r : verify_external(external_dir, options)) reports.push_back(std::move(r));
            }
            return emit_reports(reports, g);
        }
        if (*consistency) return emit_reports({bound_consistency(find_example(id))}, g);
        if (*export_cmd) return run_export(export_dir);
    } catch (const MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << '\n';
        return 2;
    } catch (const UnknownId& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const FaithfulnessSuspect& e) {
        std::cerr << "faithfulness suspect: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
