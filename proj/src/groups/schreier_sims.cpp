#include "autbound/groups/schreier_sims.hpp"

#include "autbound/error.hpp"

#include <algorithm>
#include <string>

namespace autbound {

ModpBsgs::ModpBsgs(const ModpSpace& space, const std::vector<std::vector<std::uint32_t>>& gens,
                   const BsgsOptions& options)
    : space_(space), options_(options), start_(std::chrono::steady_clock::now()), rng_(options.seed)
{
    long double cap = 1;
    for (int i = 0; i < space_.n(); ++i) cap *= space_.prime();
    if (cap >= 9.2e18L) throw InvalidInput("p^N too large for the point encoding");

    std::vector<std::vector<std::uint32_t>> nontrivial;
    for (const auto& g : gens) {
        if (!space_.is_identity(g.data())) nontrivial.push_back(g);
    }
    if (nontrivial.empty()) return;

    // first level from the input generators
    for (const auto& g : nontrivial) {
        strong_.push_back(g);
        strong_inv_.push_back(space_.inverse(g));
    }
    levels_.emplace_back();
    for (std::size_t i = 0; i < strong_.size(); ++i) levels_[0].gens.push_back(i);
    levels_[0].base_point = choose_base_point(0, strong_[0]);
    rebuild(0);

    // product replacement
    std::vector<std::vector<std::uint32_t>> slots;
    while (slots.size() < 10) {
        for (const auto& g : nontrivial) slots.push_back(g);
    }
    auto acc = space_.identity();
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    auto random_element = [&] {
        std::size_t i = pick(rng_), j = pick(rng_);
        while (j == i) j = pick(rng_);
        slots[i] = (rng_() & 1) ? space_.mul(slots[i], slots[j]) : space_.mul(slots[j], slots[i]);
        acc = space_.mul(acc, slots[i]);
        return acc;
    };
    for (int k = 0; k < 50; ++k) random_element();

    int quiet = 0;
    while (quiet < options_.quiet_rounds) {
        check_budget();
        auto g = random_element();
        std::size_t lvl = sift(g, 0);
        if (space_.is_identity(g.data())) {
            ++quiet;
        } else {
            add_strong(g, lvl);
            quiet = 0;
        }
    }

    // deterministic completion: every Schreier generator must sift
    for (;;) {
        bool complete = true;
        for (std::size_t l = levels_.size(); l-- > 0;) {
            if (!verify_level(l)) {
                complete = false;
                break;
            }
        }
        if (complete) break;
    }
}

std::uint64_t ModpBsgs::key(const std::uint32_t* v) const
{
    std::uint64_t k = 0;
    for (int i = space_.n(); i-- > 0;) k = k * space_.prime() + v[i];
    return k;
}

std::size_t ModpBsgs::sift(std::vector<std::uint32_t>& g, std::size_t start) const
{
    const int n = space_.n();
    const std::size_t sz = space_.size();
    std::vector<std::uint32_t> image(n), tmp(sz);
    for (std::size_t i = start; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        space_.apply(g.data(), lv.base_point.data(), image.data());
        auto it = lv.index.find(key(image.data()));
        if (it == lv.index.end()) return i;
        space_.mul(lv.trans_inv.data() + std::size_t(it->second) * sz, g.data(), tmp.data());
        g.swap(tmp);
    }
    return levels_.size();
}

void ModpBsgs::add_strong(const std::vector<std::uint32_t>& g, std::size_t level)
{
    strong_.push_back(g);
    strong_inv_.push_back(space_.inverse(g));
    const std::size_t idx = strong_.size() - 1;
    if (level == levels_.size()) {
        levels_.emplace_back();
        levels_.back().base_point = choose_base_point(level, g);
    }
    for (std::size_t i = 0; i <= level; ++i) levels_[i].gens.push_back(idx);
    for (std::size_t i = 0; i <= level; ++i) rebuild(i);
}

void ModpBsgs::rebuild(std::size_t level)
{
    Level& lv = levels_[level];
    const std::size_t sz = space_.size();
    const int n = space_.n();
    lv.index.clear();
    lv.points.clear();
    lv.trans.clear();
    lv.trans_inv.clear();
    const auto id = space_.identity();
    lv.points.push_back(key(lv.base_point.data()));
    lv.index.emplace(lv.points[0], 0);
    lv.trans = id;
    lv.trans_inv = id;
    std::vector<std::uint32_t> point(n), image(n), u(sz), uinv(sz);
    std::vector<std::vector<std::uint32_t>> vecs{lv.base_point};
    std::uint64_t bytes_other = 0;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        if (l != level) bytes_other += (levels_[l].trans.size() + levels_[l].trans_inv.size()) * 4;
    }
    const std::uint64_t budget = options_.memory_budget_mb << 20;
    for (std::size_t k = 0; k < lv.points.size(); ++k) {
        for (std::size_t s : lv.gens) {
            space_.apply(strong_[s].data(), vecs[k].data(), image.data());
            const std::uint64_t kk = key(image.data());
            if (lv.index.count(kk)) continue;
            const auto idx = static_cast<std::uint32_t>(lv.points.size());
            lv.index.emplace(kk, idx);
            lv.points.push_back(kk);
            vecs.push_back(image);
            space_.mul(strong_[s].data(), lv.trans.data() + k * sz, u.data());
            space_.mul(lv.trans_inv.data() + k * sz, strong_inv_[s].data(), uinv.data());
            lv.trans.insert(lv.trans.end(), u.begin(), u.end());
            lv.trans_inv.insert(lv.trans_inv.end(), uinv.begin(), uinv.end());
            if ((lv.points.size() & 0xfff) == 0) {
                check_budget();
                if (bytes_other + (lv.trans.size() * 2 + vecs.size() * n) * 4 > budget) {
                    throw BudgetExceeded("Schreier-Sims transversals exceed the memory budget");
                }
            }
        }
    }
}

std::size_t ModpBsgs::orbit_size(const std::vector<std::uint32_t>& point, const std::vector<std::size_t>& gens,
                                 std::size_t limit) const
{
    std::unordered_map<std::uint64_t, bool> seen;
    std::vector<std::vector<std::uint32_t>> queue{point};
    seen.emplace(key(point.data()), true);
    std::vector<std::uint32_t> image(space_.n());
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (std::size_t s : gens) {
            space_.apply(strong_[s].data(), queue[k].data(), image.data());
            if (seen.emplace(key(image.data()), true).second) {
                queue.push_back(image);
                if (queue.size() >= limit) return limit;
            }
        }
    }
    return queue.size();
}

std::vector<std::uint32_t> ModpBsgs::choose_base_point(std::size_t level, std::vector<std::uint32_t> moved_by)
{
    const int n = space_.n();
    const std::uint32_t p = space_.prime();
    std::vector<std::vector<std::uint32_t>> candidates;
    auto unit = [&](int i) {
        std::vector<std::uint32_t> v(n, 0);
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < n; ++i) candidates.push_back(unit(i));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto v = unit(i);
            v[j] = 1;
            candidates.push_back(v);
            v[j] = p - 1;
            candidates.push_back(v);
        }
    }
    candidates.emplace_back(n, 1);
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    for (int k = 0; k < options_.base_candidates; ++k) {
        std::vector<std::uint32_t> v(n);
        for (auto& x : v) x = entry(rng_);
        candidates.push_back(v);
    }
    // the level's generators once `moved_by` joins them
    std::vector<std::size_t> gens = level < levels_.size() ? levels_[level].gens : std::vector<std::size_t>{};
    const std::size_t extra = strong_.size();
    strong_.push_back(moved_by);
    gens.push_back(extra);

    std::vector<std::uint32_t> best;
    std::size_t best_size = SIZE_MAX;
    int tried = 0;
    std::vector<std::uint32_t> image(n);
    for (const auto& c : candidates) {
        space_.apply(moved_by.data(), c.data(), image.data());
        if (image == c) continue;
        std::size_t sz = orbit_size(c, gens, best_size);
        if (sz < best_size) {
            best_size = sz;
            best = c;
        }
        if (++tried >= options_.base_candidates) break;
    }
    strong_.pop_back();
    if (best.empty()) throw Error("no base point moved by a nontrivial element");
    return best;
}

bool ModpBsgs::verify_level(std::size_t level)
{
    const std::size_t sz = space_.size();
    const int n = space_.n();
    std::vector<std::uint32_t> image(n), t1(sz), h(sz);
    // copy: the level may be rebuilt while we iterate
    for (std::size_t k = 0; k < levels_[level].points.size(); ++k) {
        const Level& lv = levels_[level];
        std::vector<std::uint32_t> beta(lv.trans.begin() + k * sz, lv.trans.begin() + (k + 1) * sz);
        std::vector<std::uint32_t> bvec(n);
        space_.apply(beta.data(), lv.base_point.data(), bvec.data());
        for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
            const std::size_t s = lv.gens[gi];
            space_.apply(strong_[s].data(), bvec.data(), image.data());
            const std::uint32_t kk = lv.index.at(key(image.data()));
            space_.mul(strong_[s].data(), beta.data(), t1.data());
            space_.mul(lv.trans_inv.data() + std::size_t(kk) * sz, t1.data(), h.data());
            std::size_t stop = sift(h, level + 1);
            if (!space_.is_identity(h.data())) {
                add_strong(h, stop);
                return false;
            }
        }
        if ((k & 0x3ff) == 0) check_budget();
    }
    return true;
}

void ModpBsgs::check_budget() const
{
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > options_.time_budget_seconds) throw BudgetExceeded("Schreier-Sims exceeded the time budget");
}

Integer ModpBsgs::order() const
{
    Integer out = 1;
    for (const auto& lv : levels_) out *= static_cast<unsigned long>(lv.points.size());
    return out;
}

bool ModpBsgs::contains(const std::vector<std::uint32_t>& g) const
{
    auto h = g;
    std::size_t stop = sift(h, 0);
    return stop == levels_.size() && space_.is_identity(h.data());
}

std::vector<std::size_t> ModpBsgs::orbit_sizes() const
{
    std::vector<std::size_t> out;
    for (const auto& lv : levels_) out.push_back(lv.points.size());
    return out;
}

}  // namespace autbound
