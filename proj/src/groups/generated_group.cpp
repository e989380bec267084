#include "autbound/groups/generated_group.hpp"

#include "autbound/error.hpp"
#include "autbound/groups/closure.hpp"
#include "autbound/groups/schreier_sims.hpp"

#include <numeric>
#include <set>
#include <unordered_map>

namespace autbound {

GeneratedGroup::GeneratedGroup(std::vector<CycloMatrix> generators)
{
    if (generators.empty()) throw InvalidInput("a group needs at least one generator");
    dimension_ = static_cast<int>(generators[0].rows());
    if (dimension_ < 1) throw InvalidInput("generators must be non-empty matrices");
    for (const auto& g : generators) {
        if (g.rows() != dimension_ || g.cols() != dimension_) {
            throw DimensionMismatch("generators must be square of equal size");
        }
        conductor_ = std::lcm(conductor_, matrix_conductor(g));
    }
    for (const auto& g : generators) {
        CycloMatrix lifted = lift_matrix(g, conductor_);
        if (is_zero_value(determinant(lifted))) throw InvalidInput("generator is singular");
        generators_.push_back(std::move(lifted));
    }
}

int GeneratedGroup::root_order() const { return std::lcm(2, conductor_); }

ReductionMap GeneratedGroup::reduction_map(std::uint64_t lower_bound) const
{
    ReductionMap map = find_reduction_prime(root_order(), std::max<std::uint64_t>(lower_bound, 3));
    for (;;) {
        try {
            ModpSpace space(dimension_, map);
            for (const auto& g : generators_) (void)space.reduce(g);
            return map;
        } catch (const NonInvertibleDenominator&) {
            map = next_reduction_prime(map);
        }
    }
}

std::string to_string(Tier tier)
{
    switch (tier) {
    case Tier::closure:
        return "closure";
    case Tier::compact:
        return "compact-closure";
    case Tier::bsgs:
        return "schreier-sims";
    }
    return "?";
}

namespace {

std::vector<std::vector<std::uint32_t>> reduce_all(const GeneratedGroup& g, const ModpSpace& space)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& m : g.generators()) out.push_back(space.reduce(m));
    return out;
}

std::uint32_t check_map(const GeneratedGroup& g, const ReductionMap& map)
{
    if (map.conductor % g.root_order() != 0) {
        throw InvalidInput("reduction map conductor must be a multiple of " + std::to_string(g.root_order()));
    }
    if (map.prime < 3) throw InvalidInput("reduction prime must be odd");
    return map.prime;
}

Integer count_scalars_bsgs(const ModpBsgs& bsgs, const ModpSpace& space, int root_order)
{
    // candidates: the roots of unity of the coefficient field
    const ReductionMap& map = space.map();
    const int step = map.conductor / root_order;
    Integer count = 0;
    for (int k = 0; k < root_order; ++k) {
        if (bsgs.contains(space.scalar(map.root_powers[k * step]))) ++count;
    }
    return count;
}

}  // namespace

void check_generator_orders(const GeneratedGroup& g, const ReductionMap& map)
{
    ModpSpace space(g.dimension(), map);
    const auto id = space.identity();
    for (const auto& m : g.generators()) {
        auto r = space.reduce(m);
        auto acc = r;
        long k = 1;
        while (acc != id) {
            acc = space.mul(acc, r);
            if (++k > 10'000'000) throw NonFiniteOrder("generator order search cap reached");
        }
        if (!equal(matrix_power(m, k), identity<Cyclotomic>(g.dimension()))) {
            throw NonFiniteOrder("generator has infinite order (g^" + std::to_string(k)
                                 + " is the identity modulo " + std::to_string(map.prime) + " only)");
        }
    }
}

GroupSummary closure_order(const GeneratedGroup& g, const ReductionMap& map, const GroupCaps& caps)
{
    check_map(g, map);
    ModpSpace space(g.dimension(), map);
    auto gens = reduce_all(g, space);
    ModpClosure closure(space, gens, caps.max_elements);
    std::uint64_t scalars = 0, central = 0;
    std::vector<std::uint32_t> left(space.size()), right(space.size());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        const auto* e = closure.element(i);
        if (space.scalar_value(e)) ++scalars;
        bool commutes = true;
        for (const auto& s : gens) {
            space.mul(e, s.data(), left.data());
            space.mul(s.data(), e, right.data());
            if (left != right) {
                commutes = false;
                break;
            }
        }
        if (commutes) ++central;
    }
    GroupSummary out;
    out.order = static_cast<unsigned long>(closure.size());
    out.scalar_order = static_cast<unsigned long>(scalars);
    out.pgl_order = out.order / out.scalar_order;
    out.center_order = Integer(static_cast<unsigned long>(central));
    out.tier = Tier::closure;
    out.primes = {map.prime};
    return out;
}

namespace {

struct Fingerprint {
    std::uint64_t a = 0, b = 0;
};

class FingerprintSet {
public:
    explicit FingerprintSet(std::uint64_t budget_bytes) : budget_(budget_bytes) { resize(1 << 16); }

    bool insert(Fingerprint f)
    {
        if (f.a == 0) f.a = 1;
        for (std::uint64_t h = f.a & mask_;; h = (h + 1) & mask_) {
            auto& s = slots_[h];
            if (s.a == 0) {
                s = f;
                if (++count_ * 10 > slots_.size() * 7) resize(slots_.size() * 2);
                return true;
            }
            if (s.a == f.a && s.b == f.b) return false;
        }
    }

    [[nodiscard]] std::uint64_t size() const { return count_; }
    [[nodiscard]] std::uint64_t bytes() const { return slots_.size() * sizeof(Fingerprint); }

private:
    void resize(std::uint64_t n)
    {
        if (n * sizeof(Fingerprint) > budget_) throw BudgetExceeded("fingerprint table exceeds the memory budget");
        std::vector<Fingerprint> old;
        old.swap(slots_);
        slots_.assign(n, Fingerprint{});
        mask_ = n - 1;
        for (const auto& f : old) {
            if (f.a == 0) continue;
            std::uint64_t h = f.a & mask_;
            while (slots_[h].a != 0) h = (h + 1) & mask_;
            slots_[h] = f;
        }
    }

    std::vector<Fingerprint> slots_;
    std::uint64_t mask_ = 0;
    std::uint64_t count_ = 0;
    std::uint64_t budget_;
};

Fingerprint fingerprint(const std::uint32_t* a, int size)
{
    std::uint64_t h1 = 0x243f6a8885a308d3ULL, h2 = 0x13198a2e03707344ULL;
    for (int i = 0; i < size; ++i) {
        h1 = mix64(h1 ^ a[i]);
        h2 = mix64(h2 + a[i] * 0x9e3779b97f4a7c15ULL);
    }
    return {h1, h2};
}

}  // namespace

GroupSummary compact_closure_order(const GeneratedGroup& g, const ReductionMap& map, const GroupCaps& caps)
{
    check_map(g, map);
    if (map.prime >= (1u << 16)) throw InvalidInput("compact closure stores entries in 16 bits");
    ModpSpace space(g.dimension(), map);
    auto gens = reduce_all(g, space);
    const int sz = space.size();
    const std::uint64_t budget = caps.memory_budget_mb << 20;
    FingerprintSet seen(budget);
    std::vector<std::uint16_t> frontier, next;
    auto id = space.identity();
    seen.insert(fingerprint(id.data(), sz));
    frontier.assign(id.begin(), id.end());
    std::uint64_t scalars = 1;
    std::vector<std::uint32_t> cur(sz), prod(sz);
    while (!frontier.empty()) {
        next.clear();
        const std::size_t count = frontier.size() / sz;
        for (std::size_t i = 0; i < count; ++i) {
            for (int k = 0; k < sz; ++k) cur[k] = frontier[i * sz + k];
            for (const auto& s : gens) {
                space.mul(cur.data(), s.data(), prod.data());
                if (!seen.insert(fingerprint(prod.data(), sz))) continue;
                if (seen.size() > caps.compact_max_elements) {
                    throw CapExceeded("compact closure exceeded " + std::to_string(caps.compact_max_elements));
                }
                if (space.scalar_value(prod.data())) ++scalars;
                next.insert(next.end(), prod.begin(), prod.end());
            }
            if (seen.bytes() + (frontier.capacity() + next.capacity()) * 2 > budget) {
                throw BudgetExceeded("compact closure exceeds the memory budget");
            }
        }
        frontier.swap(next);
    }
    GroupSummary out;
    out.order = static_cast<unsigned long>(seen.size());
    out.scalar_order = static_cast<unsigned long>(scalars);
    out.pgl_order = out.order / out.scalar_order;
    out.tier = Tier::compact;
    out.primes = {map.prime};
    return out;
}

GroupSummary schreier_sims_order(const GeneratedGroup& g, const ReductionMap& map, const GroupCaps& caps)
{
    check_map(g, map);
    ModpSpace space(g.dimension(), map);
    BsgsOptions options;
    options.memory_budget_mb = caps.memory_budget_mb;
    options.time_budget_seconds = caps.time_budget_seconds;
    options.seed = caps.seed;
    ModpBsgs bsgs(space, reduce_all(g, space), options);
    GroupSummary out;
    out.order = bsgs.order();
    out.scalar_order = count_scalars_bsgs(bsgs, space, g.root_order());
    out.pgl_order = out.order / out.scalar_order;
    out.tier = Tier::bsgs;
    out.primes = {map.prime};
    return out;
}

GroupSummary group_order(const GeneratedGroup& g, const GroupCaps& caps, Strategy strategy, std::uint32_t first_prime)
{
    ReductionMap first;
    if (first_prime) {
        if (!modp::is_prime(first_prime) || (first_prime - 1) % g.root_order() != 0 || first_prime < 3) {
            throw InvalidInput("prime must be an odd prime = 1 mod " + std::to_string(g.root_order()));
        }
        first = find_reduction_prime(g.root_order(), first_prime);
    } else {
        first = g.reduction_map();
    }
    check_generator_orders(g, first);
    GroupSummary summary;
    switch (strategy) {
    case Strategy::closure:
        summary = closure_order(g, first, caps);
        break;
    case Strategy::bsgs:
        summary = schreier_sims_order(g, first, caps);
        break;
    case Strategy::automatic:
        try {
            summary = closure_order(g, first, caps);
        } catch (const CapExceeded&) {
            summary = caps.allow_compact ? compact_closure_order(g, first, caps) : schreier_sims_order(g, first, caps);
        }
        break;
    }
    const ReductionMap second = g.reduction_map(std::uint64_t{first.prime} + 1);
    GroupSummary check = schreier_sims_order(g, second, caps);
    if (check.order != summary.order || check.scalar_order != summary.scalar_order) {
        throw FaithfulnessSuspect("orders disagree: " + summary.order.get_str() + " mod " + std::to_string(first.prime)
                                  + " vs " + check.order.get_str() + " mod " + std::to_string(second.prime));
    }
    summary.primes.push_back(second.prime);
    return summary;
}

Integer pgl_image_order(const GroupSummary& summary) { return summary.order / summary.scalar_order; }

std::vector<CycloMatrix> exact_elements(const GeneratedGroup& g, const GroupCaps& caps)
{
    const ReductionMap map = g.reduction_map();
    ModpSpace space(g.dimension(), map);
    ModpClosure closure(space, reduce_all(g, space), caps.max_elements);
    std::vector<CycloMatrix> out;
    out.reserve(closure.size());
    out.push_back(identity<Cyclotomic>(g.dimension()));
    for (std::size_t i = 1; i < closure.size(); ++i) {
        out.push_back(multiply(out[closure.parent(i)], g.generators()[closure.generator(i)]));
    }
    return out;
}

namespace {

struct MatrixHash {
    std::size_t operator()(const CycloMatrix& m) const
    {
        std::size_t h = 0;
        for (Eigen::Index i = 0; i < m.size(); ++i) h = mix64(h ^ m.data()[i].hash());
        return h;
    }
};

struct MatrixEqual {
    bool operator()(const CycloMatrix& a, const CycloMatrix& b) const { return equal(a, b); }
};

}  // namespace

std::vector<CycloMatrix> exact_hash_closure(const GeneratedGroup& g, std::uint64_t cap)
{
    std::unordered_map<CycloMatrix, std::size_t, MatrixHash, MatrixEqual> seen;
    std::vector<CycloMatrix> out{identity<Cyclotomic>(g.dimension())};
    seen.emplace(out[0], 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& s : g.generators()) {
            CycloMatrix next = multiply(out[i], s);
            if (seen.count(next)) continue;
            seen.emplace(next, out.size());
            out.push_back(std::move(next));
            if (out.size() > cap) throw CapExceeded("exact closure exceeded " + std::to_string(cap));
        }
    }
    return out;
}

GeneratedGroup derived_subgroup(const GeneratedGroup& g, const GroupCaps& caps)
{
    const auto& gens = g.generators();
    const int n = g.dimension();
    std::vector<CycloMatrix> inv;
    for (const auto& s : gens) inv.push_back(inverse(s));
    const ReductionMap map = g.reduction_map();
    ModpSpace space(n, map);

    std::vector<CycloMatrix> h;
    std::vector<std::vector<std::uint32_t>> hmod;
    auto try_add = [&](const CycloMatrix& c, const ModpClosure* current) {
        auto r = space.reduce(c);
        if (space.is_identity(r.data())) return false;
        if (current && current->contains(r)) return false;
        for (const auto& x : hmod) {
            if (x == r) return false;
        }
        h.push_back(c);
        hmod.push_back(std::move(r));
        return true;
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            try_add(multiply(multiply(inv[i], inv[j]), multiply(gens[i], gens[j])), nullptr);
        }
    }
    if (h.empty()) return GeneratedGroup({identity<Cyclotomic>(n)});
    for (;;) {
        ModpClosure closure(space, hmod, caps.max_elements);
        bool added = false;
        for (std::size_t k = 0; k < h.size() && !added; ++k) {
            for (std::size_t s = 0; s < gens.size() && !added; ++s) {
                added = try_add(multiply(multiply(inv[s], h[k]), gens[s]), &closure);
            }
        }
        if (!added) break;
    }
    return GeneratedGroup(h);
}

namespace {

// Incremental echelon basis over F_p for vectors of a fixed length.
class ModpSpan {
public:
    explicit ModpSpan(std::uint32_t p) : p_(p) {}

    bool add(std::vector<std::uint32_t> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint32_t c = v[pivots_[r]];
            if (!c) continue;
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = modp::sub(v[k], modp::mul(c, rows_[r][k], p_), p_);
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) return false;
        const std::uint32_t s = modp::inv(v[piv], p_);
        for (auto& x : v) x = modp::mul(x, s, p_);
        for (auto& row : rows_) {
            const std::uint32_t c = row[piv];
            if (!c) continue;
            for (std::size_t k = 0; k < v.size(); ++k) row[k] = modp::sub(row[k], modp::mul(c, v[k], p_), p_);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

private:
    std::uint32_t p_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

bool is_irreducible(const GeneratedGroup& g)
{
    const int n = g.dimension();
    const std::size_t full = static_cast<std::size_t>(n) * n;
    {
        const ReductionMap map = g.reduction_map();
        ModpSpace space(n, map);
        auto gens = reduce_all(g, space);
        ModpSpan span(map.prime);
        std::vector<std::vector<std::uint32_t>> basis{space.identity()};
        span.add(basis[0]);
        for (std::size_t i = 0; i < basis.size() && span.rank() < full; ++i) {
            for (const auto& s : gens) {
                auto w = space.mul(basis[i], s);
                if (span.add(w)) basis.push_back(std::move(w));
            }
        }
        if (span.rank() == full) return true;
    }
    // the reduction may have lost rank; decide exactly
    std::vector<CycloMatrix> basis{identity<Cyclotomic>(n)};
    auto flatten = [&](const std::vector<CycloMatrix>& mats) {
        CycloMatrix rows(static_cast<Eigen::Index>(mats.size()), static_cast<Eigen::Index>(full));
        for (std::size_t r = 0; r < mats.size(); ++r) {
            for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(full); ++k) rows(r, k) = mats[r](k / n, k % n);
        }
        return rows;
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto& s : g.generators()) {
            auto candidate = basis;
            candidate.push_back(multiply(basis[i], s));
            if (rank(flatten(candidate)) > static_cast<Eigen::Index>(basis.size())) basis = std::move(candidate);
        }
    }
    return basis.size() == full;
}

std::vector<std::vector<int>> block_permutation_images(const GeneratedGroup& g, const std::vector<int>& block_sizes)
{
    std::vector<int> offset{0};
    for (int b : block_sizes) offset.push_back(offset.back() + b);
    if (offset.back() != g.dimension()) throw DimensionMismatch("block sizes must sum to the dimension");
    const int r = static_cast<int>(block_sizes.size());
    auto block_of = [&](int index) {
        int b = 0;
        while (offset[b + 1] <= index) ++b;
        return b;
    };
    std::vector<std::vector<int>> out;
    for (const auto& m : g.generators()) {
        std::vector<int> perm(r, -1);
        for (int j = 0; j < r; ++j) {
            std::set<int> targets;
            for (int col = offset[j]; col < offset[j + 1]; ++col) {
                for (int row = 0; row < g.dimension(); ++row) {
                    if (!m(row, col).is_zero()) targets.insert(block_of(row));
                }
            }
            if (targets.size() != 1 || block_sizes[*targets.begin()] != block_sizes[j]) {
                throw InvalidInput("generator is not block-monomial for this decomposition");
            }
            perm[j] = *targets.begin();
        }
        if (std::set<int>(perm.begin(), perm.end()).size() != perm.size()) {
            throw InvalidInput("generator does not permute the blocks");
        }
        out.push_back(perm);
    }
    return out;
}

Integer permutation_group_order(const std::vector<std::vector<int>>& perms, int r)
{
    std::vector<int> id(r);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> queue{id};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const auto& p : perms) {
            std::vector<int> next(r);
            for (int i = 0; i < r; ++i) next[i] = p[queue[k][i]];
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return static_cast<unsigned long>(queue.size());
}

}  // namespace autbound
