#include "autbound/catalog/registry.hpp"

#include "autbound/error.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace autbound {

namespace {

using Rows = std::vector<std::vector<Cyclotomic>>;

Cyclotomic z(int m, long k = 1) { return Cyclotomic::root_of_unity(m, k); }

CycloMatrix mat(const Rows& rows)
{
    CycloMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

HomogPoly poly(int nvars, int degree, const std::vector<std::pair<Monomial, Cyclotomic>>& terms)
{
    return HomogPoly::from_terms(nvars, degree, terms);
}

Integer integer(const char* s) { return Integer(s); }

const Cyclotomic& tau()
{
    static const Cyclotomic t = golden_ratio();
    return t;
}

CycloMatrix wiman_m4()
{
    const Cyclotomic half = make_rational(1, 2);
    const Cyclotomic ti = tau().inverse();
    return scale(mat({{1, ti, -tau()}, {ti, tau(), 1}, {tau(), -1, ti}}), half);
}

std::vector<CycloMatrix> klein_generators()
{
    const Cyclotomic i = z(4);
    auto e = [](long k) { return z(7, k); };
    const Cyclotomic alpha = sqrt_minus7().inverse();
    const Cyclotomic a = e(1) - e(6), b = e(2) - e(5), c = e(4) - e(3);
    return {
        scale(diagonal_matrix({e(4), e(2), e(1)}), i),
        mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
        scale(mat({{a, b, c}, {b, c, a}, {c, a, b}}), alpha),
    };
}

std::vector<CycloMatrix> valentiner_generators()
{
    return {
        diagonal_matrix({1, -1, 1}),
        mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
        mat({{1, 0, 0}, {0, 0, z(3, 2)}, {0, -z(3), 0}}),
        wiman_m4(),
    };
}

// Generators of a 2-dimensional group with 2.A5 modulo scalars.
CycloMatrix icosahedral_t(const Cyclotomic& e)
{
    const Cyclotomic s = sqrt5().inverse();
    const Cyclotomic e2 = pow(e, 2), e3 = pow(e, 3), e4 = pow(e, 4);
    return scale(mat({{-e + e4, e2 - e3}, {e2 - e3, e - e4}}), s);
}

std::vector<CycloMatrix> ex_2_6_blocks()
{
    const Cyclotomic i = z(4);
    const Cyclotomic half = make_rational(1, 2);
    return {
        scale(mat({{1 + i, 1 + i}, {-1 + i, 1 - i}}), half),
        mat({{0, 1}, {-1, 0}}),
        diagonal_matrix({z(24), z(24, 19)}),
    };
}

std::vector<CycloMatrix> ex_2_12_blocks()
{
    return {
        diagonal_matrix({z(60), z(60, 49)}),
        icosahedral_t(z(60, 12)),
    };
}

// Every block-diagonal combination of `blocks` over r slots, then the given
// block permutations.
std::vector<CycloMatrix> wreath_generators(const std::vector<CycloMatrix>& blocks, int r,
                                           const std::vector<std::vector<int>>& perms)
{
    std::vector<CycloMatrix> out;
    const int k = static_cast<int>(blocks.size());
    int total = 1;
    for (int s = 0; s < r; ++s) total *= k;
    for (int code = 0; code < total; ++code) {
        std::vector<CycloMatrix> parts;
        for (int s = 0, c = code; s < r; ++s, c /= k) parts.push_back(blocks[c % k]);
        std::reverse(parts.begin(), parts.end());
        out.push_back(block_diagonal(parts));
    }
    for (const auto& p : perms) out.push_back(block_permutation_matrix(p, static_cast<int>(blocks.front().rows())));
    return out;
}

// x0 x1 (x0^10 + 11 x0^5 x1^5 - x1^10) on variables (2b, 2b+1).
void add_dodecic_block(std::vector<std::pair<Monomial, Cyclotomic>>& terms, int nvars, int b)
{
    auto m = [&](int e0, int e1) {
        Monomial mono(nvars, 0);
        mono[2 * b] = e0;
        mono[2 * b + 1] = e1;
        return mono;
    };
    terms.emplace_back(m(11, 1), 1);
    terms.emplace_back(m(6, 6), 11);
    terms.emplace_back(m(1, 11), -1);
}

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

HomogPoly pair_sum_poly(int nvars, int d, int pair_exp, const Cyclotomic& pair_coeff)
{
    HomogPoly f = HomogPoly::fermat(nvars, d);
    for (int i = 0; i < nvars; ++i) {
        for (int j = i + 1; j < nvars; ++j) {
            Monomial m(nvars, 0);
            m[i] = pair_exp;
            m[j] = pair_exp;
            f.add_term(m, pair_coeff);
        }
    }
    return f;
}

std::vector<ExampleRecord> build_examples()
{
    std::vector<ExampleRecord> out;

    {
        ExampleRecord r;
        r.id = "ex-1-4";
        r.n = 1;
        r.d = 4;
        r.generators = klein_generators();
        r.polynomial = poly(3, 4, {{mono({3, 1, 0}), 1}, {mono({0, 3, 1}), 1}, {mono({1, 0, 3}), 1}});
        r.expected = {672, 4, 168};
        r.block_sizes = {3};
        r.notes = "Klein quartic; Lin(X) = PSL2(7)";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-1-6";
        r.n = 1;
        r.d = 6;
        r.generators = valentiner_generators();
        r.polynomial = poly(3, 6,
                            {{mono({3, 3, 0}), 10},
                             {mono({5, 0, 1}), 9},
                             {mono({0, 5, 1}), 9},
                             {mono({2, 2, 2}), -45},
                             {mono({1, 1, 4}), -135},
                             {mono({0, 0, 6}), 27}});
        r.expected = {2160, 6, 360};
        r.block_sizes = {3};
        r.printed_invariance = false;
        r.notes = "Wiman sextic; Lin(X) = A6; generators in other coordinates, fourth generator with corrected first row";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-1-6-2";
        r.n = 1;
        r.d = 6;
        const Cyclotomic w = z(3);
        const Cyclotomic w2 = z(3, 2);
        r.generators = {
            diagonal_matrix({1, w, w2}),
            mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
            scale(mat({{1, 1, 1}, {1, w, w2}, {1, w2, w}}), i_sqrt3().inverse()),
            diagonal_matrix({z(6), z(6), z(6, 5)}),
        };
        r.polynomial = pair_sum_poly(3, 6, 3, -10);
        r.expected = {1296, 6, 216};
        r.block_sizes = {3};
        r.notes = "Lin(X) = Hessian group of order 216";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-2-4";
        r.n = 2;
        r.d = 4;
        const Cyclotomic i = z(4);
        r.generators = {
            mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
            mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
            diagonal_matrix({1, -1, -1, 1}),
            diagonal_matrix({1, 1, -1, -1}),
            scale(mat({{-i, 0, 0, i}, {0, 1, 1, 0}, {i, 0, 0, i}, {0, 1, -1, 0}}), (1 + i) * make_rational(1, 2)),
            diagonal_matrix({1, 1, 1, -1}),
        };
        r.polynomial = pair_sum_poly(4, 4, 2, -6);
        r.expected = {7680, 4, 1920};
        r.block_sizes = {4};
        r.notes = "Lin(X) extension of S5 by mu2^4; fifth generator with rows 3 and 4 multiplied by i";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-2-6";
        r.n = 2;
        r.d = 6;
        r.generators = wreath_generators(ex_2_6_blocks(), 2, {{1, 0}});
        r.polynomial =
            poly(4, 6, {{mono({5, 1, 0, 0}), 1}, {mono({1, 5, 0, 0}), -1}, {mono({0, 0, 5, 1}), 1}, {mono({0, 0, 1, 5}), -1}});
        r.expected = {41472, 6, 6912};
        r.block_sizes = {2, 2};
        r.notes = "wreath product of mu6.S4 with S2, modulo center";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-2-12";
        r.n = 2;
        r.d = 12;
        r.generators = wreath_generators(ex_2_12_blocks(), 2, {{1, 0}});
        std::vector<std::pair<Monomial, Cyclotomic>> terms;
        add_dodecic_block(terms, 4, 0);
        add_dodecic_block(terms, 4, 1);
        r.polynomial = poly(4, 12, terms);
        r.expected = {1036800, 12, 86400};
        r.block_sizes = {2, 2};
        r.notes = "wreath product of mu12.A5 with S2, modulo center";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-4-6";
        r.n = 4;
        r.d = 6;
        CycloMatrix reflection = identity<Cyclotomic>(6);
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) reflection(a, b) -= Cyclotomic(make_rational(1, 3));
        }
        r.generators = {
            permutation_matrix({1, 0, 2, 3, 4, 5}),
            permutation_matrix({1, 2, 3, 4, 5, 0}),
            diagonal_matrix({z(3), z(3, 2), 1, 1, 1, 1}),
            reflection,
        };
        HomogPoly f = pair_sum_poly(6, 6, 3, -10);
        f.add_term(mono({1, 1, 1, 1, 1, 1}), -180);
        r.polynomial = f;
        r.expected = {39191040, 6, 6531840};
        r.block_sizes = {6};
        r.notes = "Todd sextic; Lin(X) extension of PSU4(3) by mu2";
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex-4-12";
        r.n = 4;
        r.d = 12;
        r.generators = wreath_generators(ex_2_12_blocks(), 3, {{1, 0, 2}, {2, 0, 1}});
        std::vector<std::pair<Monomial, Cyclotomic>> terms;
        for (int b = 0; b < 3; ++b) add_dodecic_block(terms, 6, b);
        r.polynomial = poly(6, 12, terms);
        r.expected = {integer("2239488000"), 12, integer("186624000")};
        r.block_sizes = {2, 2, 2};
        r.needs_tier3 = true;
        r.notes = "wreath product of mu12.A5 with S3, modulo center";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<GroupRecord> build_groups()
{
    const Cyclotomic i = z(4);
    const Cyclotomic half = make_rational(1, 2);
    const CycloMatrix q_i = diagonal_matrix({i, -i});
    const CycloMatrix q_j = mat({{0, 1}, {-1, 0}});
    const CycloMatrix order3 = scale(mat({{1 + i, 1 + i}, {-1 + i, 1 - i}}), half);
    const Cyclotomic e = z(5);

    std::vector<GroupRecord> out;
    out.push_back({"2.A4", {q_i, q_j, order3}, "binary tetrahedral, order 24"});
    out.push_back({"2.A5", {diagonal_matrix({pow(e, 3), pow(e, 2)}), icosahedral_t(e)}, "binary icosahedral, order 120"});
    out.push_back({"2.S4", {q_i, q_j, order3, diagonal_matrix({z(8), z(8, 7)})}, "binary octahedral, order 48"});
    out.push_back({"A5-3dim",
                   {diagonal_matrix({1, -1, -1}), mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), wiman_m4()},
                   "rotation icosahedral group"});
    out.push_back({"Q8", {q_i, q_j}, "quaternion group"});
    out.push_back({"klein", klein_generators(), "ex-1-4 generators, order 672"});
    out.push_back({"minus-identity", {scalar_matrix(2, -1)}, "<-I2>"});
    out.push_back({"valentiner", valentiner_generators(), "ex-1-6 generators, order 2160"});
    return out;
}

}  // namespace

Partition ExampleRecord::partition() const { return Partition(block_sizes); }

const std::vector<ExampleRecord>& exceptional_examples()
{
    static const std::vector<ExampleRecord> examples = build_examples();
    return examples;
}

ExampleRecord fermat_example(int n, int d)
{
    if (n < 0 || d < 1 || n + 2 > 8) throw InvalidInput("fermat example needs 0 <= n <= 6 and d >= 1");
    const int N = n + 2;
    ExampleRecord r;
    r.id = "fermat-" + std::to_string(n) + "-" + std::to_string(d);
    r.n = n;
    r.d = d;
    std::vector<Cyclotomic> diag(N, Cyclotomic(1));
    diag[0] = z(d);
    r.generators.push_back(diagonal_matrix(diag));
    std::vector<int> swap(N), cycle(N);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int j = 0; j < N; ++j) cycle[j] = (j + 1) % N;
    r.generators.push_back(permutation_matrix(swap));
    if (N > 2) r.generators.push_back(permutation_matrix(cycle));
    r.polynomial = HomogPoly::fermat(N, d);
    const Integer fact = factorial(static_cast<unsigned>(N));
    r.expected.linf_order = fact * ipow(Integer(d), static_cast<unsigned>(N));
    r.expected.scalar_order = d;
    r.expected.linx_order = fact * ipow(Integer(d), static_cast<unsigned>(N - 1));
    r.block_sizes.assign(N, 1);
    r.notes = "Fermat hypersurface";
    return r;
}

ExampleRecord find_example(const std::string& id)
{
    for (const auto& r : exceptional_examples()) {
        if (r.id == id) return r;
    }
    int n = 0, d = 0;
    char tail = 0;
    if (std::sscanf(id.c_str(), "fermat-%d-%d%c", &n, &d, &tail) == 2) return fermat_example(n, d);
    throw UnknownId("unknown example '" + id + "'");
}

const std::vector<GroupRecord>& named_groups()
{
    static const std::vector<GroupRecord> groups = build_groups();
    return groups;
}

const GroupRecord& find_group(const std::string& id)
{
    for (const auto& g : named_groups()) {
        if (g.id == id) return g;
    }
    throw UnknownId("unknown group '" + id + "'");
}

CycloMatrix wiman_printed_m4()
{
    const Cyclotomic half = make_rational(1, 2);
    const Cyclotomic ti = tau().inverse();
    return scale(mat({{1, tau(), ti}, {ti, tau(), 1}, {tau(), -1, ti}}), half);
}

CycloMatrix quartic_printed_m5()
{
    const Cyclotomic i = z(4);
    return scale(mat({{-i, 0, 0, i}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, -i, i, 0}}), (1 + i) * make_rational(1, 2));
}

}  // namespace autbound
