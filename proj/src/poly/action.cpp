#include "autbound/poly/action.hpp"

#include "autbound/error.hpp"
#include "autbound/linalg/smith.hpp"

#include <bit>
#include <random>
#include <unordered_map>

namespace autbound {

namespace {

// Exponent vectors packed 8 bits per variable.
using Packed = std::uint64_t;
using Sparse = std::unordered_map<Packed, Cyclotomic>;

constexpr int kMaxVars = 8;

Monomial unpack(Packed p, int n)
{
    Monomial m(n);
    for (int i = 0; i < n; ++i) m[i] = static_cast<int>((p >> (8 * i)) & 0xff);
    return m;
}

Sparse product(const Sparse& a, const Sparse& b)
{
    Sparse out;
    out.reserve(a.size() * b.size());
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            auto [it, inserted] = out.try_emplace(ka + kb, va * vb);
            if (!inserted) it->second += va * vb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

void check_shape(const CycloMatrix& a, const HomogPoly& f)
{
    if (a.rows() != f.nvars() || a.cols() != f.nvars()) {
        throw DimensionMismatch("matrix size " + std::to_string(a.rows()) + " does not match " +
                                std::to_string(f.nvars()) + " variables");
    }
    if (f.nvars() > kMaxVars || f.degree() > 255) {
        throw InvalidInput("substitution supports at most 8 variables and degree 255");
    }
}

}  // namespace

HomogPoly substitute(const CycloMatrix& a, const HomogPoly& f)
{
    check_shape(a, f);
    const int n = f.nvars();
    // powers[i][e] = (row i of a . x)^e
    std::vector<std::vector<Sparse>> powers(n);
    auto power = [&](int i, int e) -> const Sparse& {
        auto& list = powers[i];
        if (list.empty()) {
            Sparse one;
            one.emplace(0, Cyclotomic(1));
            list.push_back(std::move(one));
        }
        while (static_cast<int>(list.size()) <= e) {
            Sparse linear;
            for (int j = 0; j < n; ++j) {
                if (!a(i, j).is_zero()) linear.emplace(Packed{1} << (8 * j), a(i, j));
            }
            list.push_back(product(list.back(), linear));
        }
        return list[e];
    };

    Sparse acc;
    for (const auto& [mono, coeff] : f.terms()) {
        Sparse term;
        term.emplace(0, coeff);
        for (int i = 0; i < n; ++i) {
            if (mono[i] > 0) term = product(term, power(i, mono[i]));
        }
        for (auto& [k, v] : term) {
            auto [it, inserted] = acc.try_emplace(k, v);
            if (!inserted) it->second += v;
        }
    }
    HomogPoly out(n, f.degree());
    for (const auto& [k, v] : acc) {
        if (!v.is_zero()) out.add_term(unpack(k, n), v);
    }
    return out;
}

HomogPoly act(const CycloMatrix& g, const HomogPoly& f)
{
    check_shape(g, f);
    return substitute(inverse(g), f);
}

bool is_invariant(const std::vector<CycloMatrix>& gens, const HomogPoly& f)
{
    for (const auto& g : gens) {
        if (act(g, f) != f) return false;
    }
    return true;
}

std::optional<std::vector<Cyclotomic>> semi_invariant_character(const std::vector<CycloMatrix>& gens,
                                                                const HomogPoly& f)
{
    if (f.is_zero()) throw InvalidInput("zero polynomial has no character");
    std::vector<Cyclotomic> chi;
    const auto& [lead, lead_coeff] = *f.terms().begin();
    for (const auto& g : gens) {
        HomogPoly h = act(g, f);
        Cyclotomic c = h.coefficient(lead) / lead_coeff;
        if (c.is_zero() || h != f.scaled(c)) return std::nullopt;
        chi.push_back(c);
    }
    return chi;
}

SmoothnessReport smoothness_necessary(const HomogPoly& f)
{
    const int n = f.nvars();
    const int d = f.degree();
    SmoothnessReport report;
    report.pass = true;
    for (int j = 0; j < n; ++j) {
        VariableWitness w{j, std::nullopt};
        Monomial m(n, 0);
        m[j] = d;
        if (f.terms().count(m)) {
            w.witness = m;
        } else if (d >= 1) {
            for (int k = 0; k < n && !w.witness; ++k) {
                if (k == j) continue;
                Monomial mk(n, 0);
                mk[j] = d - 1;
                mk[k] = 1;
                if (f.terms().count(mk)) w.witness = mk;
            }
        }
        report.pass = report.pass && w.witness.has_value();
        report.variables.push_back(std::move(w));
    }
    return report;
}

bool avoids_variables(const HomogPoly& f, int k)
{
    const int n = f.nvars();
    if (k < 1 || k >= n) throw PreconditionViolation("avoids_variables needs 1 <= k < nvars");
    std::vector<std::uint32_t> supports;
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t s = 0;
        for (int i = 0; i < n; ++i) {
            if (m[i] > 0) s |= 1u << i;
        }
        supports.push_back(s);
    }
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        if (std::popcount(subset) != k) continue;
        bool found = false;
        for (auto s : supports) {
            if ((s & subset) == 0) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

DiagonalStabilizer lattice_torsion(const IntMatrix& rows)
{
    const auto n = rows.cols();
    SmithForm snf = smith_normal_form(rows);
    if (snf.rank < n) {
        throw RankDeficient("exponent lattice has rank " + std::to_string(snf.rank) + " < " + std::to_string(n));
    }
    DiagonalStabilizer out;
    out.order = 1;
    for (Eigen::Index i = 0; i < n; ++i) {
        out.elementary_divisors.push_back(snf.diagonal[i]);
        out.order *= snf.diagonal[i];
    }
    return out;
}

IntMatrix exponent_matrix(const HomogPoly& f)
{
    IntMatrix m(static_cast<Eigen::Index>(f.terms().size()), f.nvars());
    Eigen::Index r = 0;
    for (const auto& [mono, c] : f.terms()) {
        for (int j = 0; j < f.nvars(); ++j) m(r, j) = mono[j];
        ++r;
    }
    return m;
}

DiagonalStabilizer diagonal_stabilizer(const HomogPoly& f)
{
    if (f.is_zero()) throw InvalidInput("zero polynomial");
    return lattice_torsion(exponent_matrix(f));
}

MinorReport exponent_minor_bound(const HomogPoly& f)
{
    const int n = f.nvars();
    SmoothnessReport s = smoothness_necessary(f);
    MinorReport report;
    report.minor = IntMatrix(n, n);
    for (const auto& w : s.variables) {
        if (!w.witness) throw PreconditionViolation("no witness monomial for x" + std::to_string(w.variable));
        for (int j = 0; j < n; ++j) report.minor(w.variable, j) = (*w.witness)[j];
    }
    report.determinant = bareiss_determinant(report.minor);
    report.bound = ipow(Integer(f.degree()), static_cast<unsigned>(n));
    report.ok = report.determinant > 0 && report.determinant <= report.bound;
    return report;
}

HomogPoly collapse_blocks(const HomogPoly& f, const std::vector<int>& block_sizes,
                          const std::vector<Cyclotomic>& constants)
{
    const int n = f.nvars();
    int total = 0;
    for (int b : block_sizes) {
        if (b < 1) throw InvalidInput("block sizes must be positive");
        total += b;
    }
    if (total != n || static_cast<int>(constants.size()) != n) {
        throw DimensionMismatch("block sizes and constants must cover every variable");
    }
    std::vector<int> block_of;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) block_of.insert(block_of.end(), block_sizes[b], static_cast<int>(b));
    const int r = static_cast<int>(block_sizes.size());
    HomogPoly out(r, f.degree());
    for (const auto& [mono, coeff] : f.terms()) {
        Monomial m(r, 0);
        Cyclotomic c = coeff;
        for (int j = 0; j < n; ++j) {
            if (mono[j] == 0) continue;
            m[block_of[j]] += mono[j];
            c *= pow(constants[j], mono[j]);
        }
        out.add_term(m, c);
    }
    return out;
}

BlockCollapseReport block_scalar_stabilizer(const HomogPoly& f, const std::vector<int>& block_sizes,
                                            std::uint64_t seed, int draws)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, 50);
    std::bernoulli_distribution sign(0.5);
    BlockCollapseReport report;
    for (int t = 0; t < draws; ++t) {
        ++report.draws;
        std::vector<Cyclotomic> constants;
        for (int j = 0; j < f.nvars(); ++j) constants.emplace_back(sign(rng) ? -dist(rng) : dist(rng));
        HomogPoly h = collapse_blocks(f, block_sizes, constants);
        if (h.is_zero() || !smoothness_necessary(h).pass) continue;
        report.good_draw = t;
        report.stabilizer = diagonal_stabilizer(h);
        report.collapsed = std::move(h);
        break;
    }
    return report;
}

}  // namespace autbound
