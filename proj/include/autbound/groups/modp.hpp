#pragma once

#include "autbound/exact/reduction.hpp"
#include "autbound/linalg/dense.hpp"

#include <cstdint>
#include <vector>

namespace autbound {

/// Dense N x N matrices over F_p, row-major in flat uint32 buffers.
class ModpSpace {
public:
    ModpSpace(int n, const ReductionMap& map);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int size() const { return n_ * n_; }
    [[nodiscard]] std::uint32_t prime() const { return map_.prime; }
    [[nodiscard]] const ReductionMap& map() const { return map_; }

    /// Throws NonInvertibleDenominator when an entry cannot be reduced.
    [[nodiscard]] std::vector<std::uint32_t> reduce(const CycloMatrix& m) const;
    [[nodiscard]] std::vector<std::uint32_t> identity() const;
    [[nodiscard]] std::vector<std::uint32_t> scalar(std::uint32_t c) const;

    void mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    [[nodiscard]] std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) const;
    /// out = a v for a column vector v.
    void apply(const std::uint32_t* a, const std::uint32_t* v, std::uint32_t* out) const;
    /// Throws DivisionByZero when singular.
    [[nodiscard]] std::vector<std::uint32_t> inverse(const std::vector<std::uint32_t>& a) const;

    [[nodiscard]] bool is_identity(const std::uint32_t* a) const;
    /// Returns the scalar c if a = cI, else 0.
    [[nodiscard]] std::uint32_t scalar_value(const std::uint32_t* a) const;
    [[nodiscard]] std::uint64_t hash(const std::uint32_t* a) const;

    /// Rank over F_p of a list of length-k vectors.
    [[nodiscard]] int rank(std::vector<std::vector<std::uint32_t>> rows) const;

private:
    int n_;
    ReductionMap map_;
    bool small_prime_;
};

/// Mixes a 64-bit value (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace autbound
