#pragma once

// Independent reference computations used to freeze expected values. They
// share no code with the library beyond the GMP number types.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

struct Gauss {
    mpq_class re, im;
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};

inline Gauss gauss_mul(const Gauss& a, const Gauss& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline bool trial_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

inline std::uint64_t smallest_prime_1_mod(std::uint64_t m, std::uint64_t lower)
{
    for (std::uint64_t p = lower;; ++p) {
        if (p % m == 1 % m && trial_prime(p)) return p;
    }
}

}  // namespace oracle

namespace oracle {

// Determinant by permutation expansion; only for tiny integer matrices.
inline long leibniz_det(const std::vector<std::vector<long>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    long total = 0;
    do {
        long term = 1;
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            term *= m[i][perm[i]];
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        total += (inversions % 2 ? -term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace oracle

namespace oracle {

using GaussMatrix = std::array<Gauss, 4>;  // row-major 2x2

inline GaussMatrix gauss_mat_mul(const GaussMatrix& a, const GaussMatrix& b)
{
    auto add = [](const Gauss& x, const Gauss& y) { return Gauss{x.re + y.re, x.im + y.im}; };
    return {add(gauss_mul(a[0], b[0]), gauss_mul(a[1], b[2])), add(gauss_mul(a[0], b[1]), gauss_mul(a[1], b[3])),
            add(gauss_mul(a[2], b[0]), gauss_mul(a[3], b[2])), add(gauss_mul(a[2], b[1]), gauss_mul(a[3], b[3]))};
}

// Molien coefficients of a 2x2 Gaussian-rational group, by brute-force
// closure and the expansion of 1/(1 - tr t + det t^2).
inline std::vector<mpq_class> gauss_molien(const std::vector<GaussMatrix>& gens, int max_degree)
{
    std::vector<GaussMatrix> elems{{Gauss{1, 0}, Gauss{0, 0}, Gauss{0, 0}, Gauss{1, 0}}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            GaussMatrix p = gauss_mat_mul(elems[i], g);
            if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
        }
    }
    std::vector<Gauss> total(max_degree + 1, Gauss{0, 0});
    for (const auto& e : elems) {
        Gauss tr{e[0].re + e[3].re, e[0].im + e[3].im};
        Gauss a = gauss_mul(e[0], e[3]), b = gauss_mul(e[1], e[2]);
        Gauss det{a.re - b.re, a.im - b.im};
        std::vector<Gauss> s(max_degree + 1, Gauss{0, 0});
        s[0] = {1, 0};
        for (int k = 1; k <= max_degree; ++k) {
            Gauss v = gauss_mul(tr, s[k - 1]);
            if (k >= 2) {
                Gauss w = gauss_mul(det, s[k - 2]);
                v = {v.re - w.re, v.im - w.im};
            }
            s[k] = v;
        }
        for (int k = 0; k <= max_degree; ++k) total[k] = {total[k].re + s[k].re, total[k].im + s[k].im};
    }
    std::vector<mpq_class> out;
    for (const auto& t : total) out.push_back(t.re / static_cast<long>(elems.size()));
    return out;
}

}  // namespace oracle
