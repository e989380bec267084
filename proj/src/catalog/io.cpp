#include "autbound/catalog/io.hpp"

#include "autbound/error.hpp"
#include "autbound/exact/literal.hpp"

#include <fstream>
#include <numeric>

namespace autbound {

namespace {

template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("bad field '") + key + "': " + e.what());
    }
}

int positive_field(const Json& j, const char* key)
{
    const int v = field<int>(j, key);
    if (v < 1) throw MalformedInput(std::string("field '") + key + "' must be positive");
    return v;
}

Integer integer_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0) throw MalformedInput(std::string("bad integer in '") + key + "'");
        return out;
    }
    throw MalformedInput(std::string("field '") + key + "' must be an integer");
}

Json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

}  // namespace

Json group_to_json(const std::vector<CycloMatrix>& generators)
{
    if (generators.empty()) throw InvalidInput("empty generator list");
    int m = 1;
    for (const auto& g : generators) m = std::lcm(m, matrix_conductor(g));
    Json gens = Json::array();
    for (const auto& g : generators) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index k = 0; k < g.cols(); ++k) row.push_back(format_literal(g(i, k), m));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    return {{"conductor", m}, {"dimension", generators.front().rows()}, {"generators", std::move(gens)}};
}

std::vector<CycloMatrix> group_from_json(const Json& j)
{
    const int m = positive_field(j, "conductor");
    const int n = positive_field(j, "dimension");
    const Json gens = field<Json>(j, "generators");
    if (!gens.is_array() || gens.empty()) throw MalformedInput("'generators' must be a non-empty array");
    std::vector<CycloMatrix> out;
    for (const auto& g : gens) {
        if (!g.is_array() || static_cast<int>(g.size()) != n) throw MalformedInput("generator must have N rows");
        CycloMatrix mat(n, n);
        for (int i = 0; i < n; ++i) {
            if (!g[i].is_array() || static_cast<int>(g[i].size()) != n) throw MalformedInput("row must have N entries");
            for (int k = 0; k < n; ++k) {
                if (!g[i][k].is_string()) throw MalformedInput("matrix entries must be literal strings");
                mat(i, k) = parse_literal(g[i][k].get<std::string>(), m);
            }
        }
        out.push_back(std::move(mat));
    }
    return out;
}

Json poly_to_json(const HomogPoly& f)
{
    const int m = f.conductor();
    Json terms = Json::array();
    for (const auto& [mono, c] : f.terms()) terms.push_back({{"exponents", mono}, {"coeff", format_literal(c, m)}});
    return {{"conductor", m}, {"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

HomogPoly poly_from_json(const Json& j)
{
    const int m = positive_field(j, "conductor");
    const int n = positive_field(j, "nvars");
    const int d = field<int>(j, "degree");
    if (d < 0) throw MalformedInput("degree must be non-negative");
    const Json terms = field<Json>(j, "terms");
    if (!terms.is_array() || terms.empty()) throw MalformedInput("'terms' must be a non-empty array");
    HomogPoly f(n, d);
    for (const auto& t : terms) {
        const auto e = field<std::vector<int>>(t, "exponents");
        const auto c = field<std::string>(t, "coeff");
        try {
            f.add_term(e, parse_literal(c, m));
        } catch (const InvalidInput& err) {
            throw MalformedInput(err.what());
        }
    }
    if (f.is_zero()) throw MalformedInput("polynomial has no nonzero terms");
    return f;
}

Json example_to_json(const ExampleRecord& r)
{
    Json j = {
        {"id", r.id},
        {"n", r.n},
        {"d", r.d},
        {"expected",
         {{"linf_order", integer_json(r.expected.linf_order)},
          {"scalar_order", integer_json(r.expected.scalar_order)},
          {"linx_order", integer_json(r.expected.linx_order)}}},
        {"block_sizes", r.block_sizes},
        {"printed_invariance", r.printed_invariance},
        {"needs_tier3", r.needs_tier3},
        {"notes", r.notes},
        {"group", group_to_json(r.generators)},
    };
    if (r.polynomial) j["polynomial"] = poly_to_json(*r.polynomial);
    return j;
}

ExampleRecord example_from_json(const Json& j)
{
    ExampleRecord r;
    r.id = field<std::string>(j, "id");
    r.n = field<int>(j, "n");
    r.d = field<int>(j, "d");
    const Json e = field<Json>(j, "expected");
    r.expected.linf_order = integer_field(e, "linf_order");
    r.expected.scalar_order = integer_field(e, "scalar_order");
    r.expected.linx_order = integer_field(e, "linx_order");
    if (r.expected.linf_order != r.expected.scalar_order * r.expected.linx_order) {
        throw MalformedInput(r.id + ": linf_order must equal scalar_order * linx_order");
    }
    r.block_sizes = field<std::vector<int>>(j, "block_sizes");
    r.printed_invariance = j.value("printed_invariance", true);
    r.needs_tier3 = j.value("needs_tier3", false);
    r.notes = j.value("notes", std::string());
    r.generators = group_from_json(field<Json>(j, "group"));
    if (j.contains("polynomial")) {
        r.polynomial = poly_from_json(j.at("polynomial"));
        if (r.polynomial->degree() != r.d || r.polynomial->nvars() != r.n + 2) {
            throw MalformedInput(r.id + ": polynomial shape does not match n and d");
        }
    }
    return r;
}

std::vector<ExampleRecord> registry_from_json(const Json& j)
{
    if (j.is_object() && j.contains("id")) return {example_from_json(j)};
    const Json list = j.is_array() ? j : field<Json>(j, "examples");
    if (!list.is_array()) throw MalformedInput("registry must be an array of examples");
    std::vector<ExampleRecord> out;
    for (const auto& e : list) out.push_back(example_from_json(e));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace autbound
