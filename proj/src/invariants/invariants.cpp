#include "autbound/invariants/invariants.hpp"

#include "autbound/error.hpp"
#include "autbound/exact/modular.hpp"
#include "autbound/groups/closure.hpp"
#include "autbound/poly/action.hpp"

#include <unordered_map>

namespace autbound {

namespace {

struct PolyHash {
    std::size_t operator()(const std::vector<Cyclotomic>& v) const
    {
        std::size_t h = 0;
        for (const auto& c : v) h = mix64(h ^ c.hash());
        return h;
    }
};

Integer binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Closure modulo a prime that does not divide the group order.
struct CoprimeClosure {
    ReductionMap map;
    std::optional<ModpSpace> space;
    std::optional<ModpClosure> closure;
};

void build_coprime_closure(const GeneratedGroup& g, const GroupCaps& caps, CoprimeClosure& out)
{
    ReductionMap map = g.reduction_map();
    for (;;) {
        out.space.emplace(g.dimension(), map);
        std::vector<std::vector<std::uint32_t>> gens;
        for (const auto& m : g.generators()) gens.push_back(out.space->reduce(m));
        out.closure.emplace(*out.space, std::move(gens), caps.max_elements);
        if (out.closure->size() % map.prime != 0) {
            out.map = map;
            return;
        }
        map = g.reduction_map(std::uint64_t{map.prime} + 1);
    }
}

// Monomials of each degree with an index and the multiply-by-x_v table.
struct MonomialTables {
    std::vector<std::vector<Monomial>> monos;
    // up[j][t * n + v] = index in degree j+1 of monos[j][t] * x_v
    std::vector<std::vector<std::uint32_t>> up;
    // down[j][c] = (first variable i of monos[j][c], index of monos[j][c] / x_i)
    std::vector<std::vector<std::pair<int, std::uint32_t>>> down;
};

MonomialTables monomial_tables(int n, int max_degree)
{
    MonomialTables t;
    std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(max_degree + 1);
    auto key = [](const Monomial& m) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < m.size(); ++i) k = k * 257 + static_cast<std::uint64_t>(m[i]);
        return k;
    };
    for (int j = 0; j <= max_degree; ++j) {
        t.monos.push_back(monomials_of_degree(n, j));
        for (std::uint32_t i = 0; i < t.monos[j].size(); ++i) index[j].emplace(key(t.monos[j][i]), i);
    }
    for (int j = 0; j < max_degree; ++j) {
        std::vector<std::uint32_t> up(t.monos[j].size() * n);
        for (std::size_t i = 0; i < t.monos[j].size(); ++i) {
            for (int v = 0; v < n; ++v) {
                Monomial m = t.monos[j][i];
                ++m[v];
                up[i * n + v] = index[j + 1].at(key(m));
            }
        }
        t.up.push_back(std::move(up));
    }
    t.down.resize(max_degree + 1);
    for (int j = 1; j <= max_degree; ++j) {
        t.down[j].resize(t.monos[j].size());
        for (std::size_t c = 0; c < t.monos[j].size(); ++c) {
            Monomial m = t.monos[j][c];
            int i = 0;
            while (m[i] == 0) ++i;
            --m[i];
            t.down[j][c] = {i, index[j - 1].at(key(m))};
        }
    }
    return t;
}

// Adds rho_k(a) (columns = images of monomials, substitution x_i -> sum_j a_ij x_j)
// into sums[k] for every k <= max_degree.
void accumulate_sym_powers(const std::uint32_t* a, int n, std::uint32_t p, const MonomialTables& t,
                           std::vector<std::vector<std::uint32_t>>& sums)
{
    const int max_degree = static_cast<int>(t.monos.size()) - 1;
    // images[j] is M_j x M_j, column c = image of monomial c
    std::vector<std::vector<std::uint64_t>> images(max_degree + 1);
    images[0] = {1};
    sums[0][0] = static_cast<std::uint32_t>((sums[0][0] + 1) % p);
    for (int j = 1; j <= max_degree; ++j) {
        const std::size_t mj = t.monos[j].size();
        const std::size_t mprev = t.monos[j - 1].size();
        images[j].assign(mj * mj, 0);
        for (std::size_t c = 0; c < mj; ++c) {
            const auto [i, rc] = t.down[j][c];
            const std::uint64_t* prev = images[j - 1].data() + rc * mprev;
            std::uint64_t* out = images[j].data() + c * mj;
            for (std::size_t r = 0; r < mprev; ++r) {
                if (prev[r] == 0) continue;
                for (int v = 0; v < n; ++v) {
                    const std::uint64_t coeff = a[i * n + v];
                    if (coeff == 0) continue;
                    std::uint64_t& slot = out[t.up[j - 1][r * n + v]];
                    slot = (slot + prev[r] * coeff) % p;
                }
            }
        }
        auto& s = sums[j];
        for (std::size_t c = 0; c < mj; ++c) {
            for (std::size_t r = 0; r < mj; ++r) {
                s[r * mj + c] = static_cast<std::uint32_t>((s[r * mj + c] + images[j][c * mj + r]) % p);
            }
        }
    }
}

// Pivot columns of a row-major rows x cols matrix over F_p.
std::vector<std::size_t> pivot_columns(std::vector<std::uint32_t> m, std::size_t rows, std::size_t cols, std::uint32_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(m[sel * cols + k], m[r * cols + k]);
        const std::uint64_t inv = modp::inv(m[r * cols + c], p);
        for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = static_cast<std::uint32_t>(m[r * cols + k] * inv % p);
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || m[q * cols + c] == 0) continue;
            const std::uint64_t f = m[q * cols + c];
            for (std::size_t k = 0; k < cols; ++k) {
                m[q * cols + k] = static_cast<std::uint32_t>((m[q * cols + k] + (p - f) * m[r * cols + k]) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<std::uint32_t>> reynolds_sums(const GeneratedGroup& g, int max_degree, const GroupCaps& caps,
                                                      std::uint64_t workspace_cap, CoprimeClosure& cc,
                                                      MonomialTables& tables)
{
    if (max_degree < 0) throw InvalidInput("degree must be non-negative");
    const int n = g.dimension();
    std::uint64_t workspace = 0;
    for (int j = 0; j <= max_degree; ++j) {
        const Integer m = binomial(n + j - 1, j);
        workspace += to_u64(m * m);
        if (workspace > workspace_cap) throw CapExceeded("Reynolds workspace exceeds cap");
    }
    build_coprime_closure(g, caps, cc);
    tables = monomial_tables(n, max_degree);
    std::vector<std::vector<std::uint32_t>> sums(max_degree + 1);
    for (int j = 0; j <= max_degree; ++j) sums[j].assign(tables.monos[j].size() * tables.monos[j].size(), 0);
    for (std::size_t e = 0; e < cc.closure->size(); ++e) {
        accumulate_sym_powers(cc.closure->element(e), n, cc.map.prime, tables, sums);
    }
    return sums;
}

}  // namespace

MolienPrefix molien_series(const GeneratedGroup& g, int max_degree, const GroupCaps& caps)
{
    if (max_degree < 0) throw InvalidInput("degree must be non-negative");
    const std::vector<CycloMatrix> elements = exact_elements(g, caps);
    std::unordered_map<std::vector<Cyclotomic>, std::uint64_t, PolyHash> classes;
    for (const auto& e : elements) ++classes[charpoly(e)];

    std::vector<Cyclotomic> total(max_degree + 1, Cyclotomic(0));
    for (const auto& [c, count] : classes) {
        std::vector<Cyclotomic> s(max_degree + 1, Cyclotomic(0));
        s[0] = 1;
        const int n = static_cast<int>(c.size()) - 1;
        for (int k = 1; k <= max_degree; ++k) {
            Cyclotomic acc(0);
            for (int j = 1; j <= std::min(k, n); ++j) {
                if (!c[j].is_zero() && !s[k - j].is_zero()) acc -= c[j] * s[k - j];
            }
            s[k] = acc;
        }
        const Cyclotomic weight(Integer(static_cast<unsigned long>(count)));
        for (int k = 0; k <= max_degree; ++k) total[k] += weight * s[k];
    }
    MolienPrefix out;
    out.group_order = static_cast<unsigned long>(elements.size());
    for (int k = 0; k <= max_degree; ++k) {
        Cyclotomic avg = total[k] / Cyclotomic(out.group_order);
        if (!avg.is_rational()) throw FaithfulnessSuspect("Molien coefficient " + std::to_string(k) + " is irrational");
        Rational r = avg.to_rational();
        if (r.get_den() != 1 || r < 0) {
            throw FaithfulnessSuspect("Molien coefficient " + std::to_string(k) + " is " + to_string(r));
        }
        out.coefficients.push_back(r.get_num());
    }
    return out;
}

Integer invariant_dimension(const GeneratedGroup& g, int k, const GroupCaps& caps)
{
    return molien_series(g, k, caps).coefficients.at(k);
}

std::vector<int> reynolds_ranks(const GeneratedGroup& g, int max_degree, const GroupCaps& caps,
                                std::uint64_t workspace_cap)
{
    CoprimeClosure cc;
    MonomialTables tables;
    auto sums = reynolds_sums(g, max_degree, caps, workspace_cap, cc, tables);
    std::vector<int> ranks;
    for (int j = 0; j <= max_degree; ++j) {
        const std::size_t m = tables.monos[j].size();
        ranks.push_back(static_cast<int>(pivot_columns(sums[j], m, m, cc.map.prime).size()));
    }
    return ranks;
}

std::vector<HomogPoly> reynolds_basis(const GeneratedGroup& g, int k, const GroupCaps& caps,
                                      std::uint64_t workspace_cap)
{
    CoprimeClosure cc;
    MonomialTables tables;
    auto sums = reynolds_sums(g, k, caps, workspace_cap, cc, tables);
    const std::size_t m = tables.monos[k].size();
    if (static_cast<std::uint64_t>(cc.closure->size()) * m > workspace_cap) {
        throw CapExceeded("Reynolds basis workspace exceeds cap");
    }
    const auto pivots = pivot_columns(sums[k], m, m, cc.map.prime);
    const std::vector<CycloMatrix> elements = exact_elements(g, caps);
    const Cyclotomic scale_by = Cyclotomic(make_rational(1, 1)) / Cyclotomic(Integer(static_cast<unsigned long>(elements.size())));
    std::vector<HomogPoly> basis;
    for (std::size_t c : pivots) {
        HomogPoly mono(g.dimension(), k);
        mono.add_term(tables.monos[k][c], Cyclotomic(1));
        HomogPoly acc(g.dimension(), k);
        for (const auto& e : elements) acc = acc + substitute(e, mono);
        basis.push_back(acc.scaled(scale_by));
    }
    return basis;
}

int smallest_invariant_degree(const GeneratedGroup& g, int cap, const GroupCaps& caps)
{
    const MolienPrefix m = molien_series(g, cap, caps);
    for (int k = 1; k <= cap; ++k) {
        if (m.coefficients[k] > 0) return k;
    }
    throw NoneFound("no invariant of degree <= " + std::to_string(cap));
}

int smallest_semiinvariant_degree(const GeneratedGroup& g, int cap, const GroupCaps& caps)
{
    return smallest_invariant_degree(derived_subgroup(g, caps), cap, caps);
}

}  // namespace autbound
