#include "autbound/exact/reduction.hpp"

#include "autbound/error.hpp"

#include <string>

namespace autbound {

ReductionMap find_reduction_prime(int m, std::uint64_t lower_bound, std::uint64_t search_cap)
{
    if (m < 1) throw InvalidInput("find_reduction_prime: m must be positive");
    const std::uint64_t step = static_cast<std::uint64_t>(m);
    std::uint64_t p = lower_bound < 2 ? 2 : lower_bound;
    // first candidate = 1 mod m at or above p
    std::uint64_t r = (p - 1) % step;
    if (r != 0) p += step - r;
    for (; p < search_cap; p += step) {
        if (!modp::is_prime(p)) continue;
        ReductionMap map;
        map.conductor = m;
        map.prime = static_cast<std::uint32_t>(p);
        const std::uint32_t g = modp::primitive_root(map.prime);
        map.root = modp::pow(g, (p - 1) / step, map.prime);
        for (auto q : modp::prime_factors(step)) {
            if (modp::pow(map.root, step / q, map.prime) == 1) throw Error("root of unity has wrong order");
        }
        map.root_powers.resize(m);
        std::uint32_t acc = 1 % map.prime;
        for (int k = 0; k < m; ++k) {
            map.root_powers[k] = acc;
            acc = modp::mul(acc, map.root, map.prime);
        }
        return map;
    }
    throw BudgetExceeded("no prime = 1 mod " + std::to_string(m) + " below the search cap");
}

ReductionMap next_reduction_prime(const ReductionMap& map)
{
    return find_reduction_prime(map.conductor, std::uint64_t{map.prime} + 1);
}

std::uint32_t reduce(const Cyclotomic& a, const ReductionMap& map)
{
    const int c = a.conductor();
    if (map.conductor % c != 0) {
        throw InvalidInput("reduce: conductor " + std::to_string(c) + " does not divide "
                           + std::to_string(map.conductor));
    }
    const std::uint32_t p = map.prime;
    const unsigned long den = mpz_fdiv_ui(a.denominator().get_mpz_t(), p);
    if (den == 0) throw NonInvertibleDenominator("denominator divisible by " + std::to_string(p));
    const int step = map.conductor / c;
    const auto& num = a.numerators();
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        auto ni = static_cast<std::uint32_t>(mpz_fdiv_ui(num[i].get_mpz_t(), p));
        acc = modp::add(acc, modp::mul(ni, map.root_powers[(i * step) % map.conductor], p), p);
    }
    return modp::mul(acc, modp::inv(static_cast<std::uint32_t>(den), p), p);
}

}  // namespace autbound
