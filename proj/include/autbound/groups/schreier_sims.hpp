#pragma once

#include "autbound/exact/rational.hpp"
#include "autbound/groups/modp.hpp"

#include <chrono>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

namespace autbound {

struct BsgsOptions {
    std::uint64_t memory_budget_mb = 3072;
    double time_budget_seconds = 900;
    std::uint64_t seed = 1;
    /// Consecutive trivial random sifts that end the randomized phase.
    int quiet_rounds = 40;
    /// Candidates tried per new base point.
    int base_candidates = 32;
};

/// Base and strong generating set for a matrix group over F_p acting on
/// column vectors of F_p^N. The randomized phase is followed by a full
/// Schreier-generator check, so the result does not depend on luck.
class ModpBsgs {
public:
    /// Throws BudgetExceeded on time or memory exhaustion and InvalidInput when
    /// p^N does not fit the 63-bit point encoding.
    ModpBsgs(const ModpSpace& space, const std::vector<std::vector<std::uint32_t>>& gens, const BsgsOptions& options);

    [[nodiscard]] Integer order() const;
    [[nodiscard]] bool contains(const std::vector<std::uint32_t>& g) const;
    [[nodiscard]] std::vector<std::size_t> orbit_sizes() const;
    [[nodiscard]] std::size_t strong_generator_count() const { return strong_.size(); }

private:
    struct Level {
        std::vector<std::uint32_t> base_point;
        std::vector<std::size_t> gens;
        std::unordered_map<std::uint64_t, std::uint32_t> index;
        std::vector<std::uint64_t> points;
        std::vector<std::uint32_t> trans;
        std::vector<std::uint32_t> trans_inv;
    };

    std::uint64_t key(const std::uint32_t* v) const;
    // Residue of sifting g from `start`; returns the level where it stopped.
    std::size_t sift(std::vector<std::uint32_t>& g, std::size_t start) const;
    void add_strong(const std::vector<std::uint32_t>& g, std::size_t level);
    void rebuild(std::size_t level);
    std::vector<std::uint32_t> choose_base_point(std::size_t level, std::vector<std::uint32_t> moved_by);
    std::size_t orbit_size(const std::vector<std::uint32_t>& point, const std::vector<std::size_t>& gens,
                           std::size_t limit) const;
    bool verify_level(std::size_t level);
    void check_budget() const;

    ModpSpace space_;
    BsgsOptions options_;
    std::vector<std::vector<std::uint32_t>> strong_;
    std::vector<std::vector<std::uint32_t>> strong_inv_;
    std::vector<Level> levels_;
    std::chrono::steady_clock::time_point start_;
    std::mt19937_64 rng_;
};

}  // namespace autbound
