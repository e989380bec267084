#pragma once

#include "autbound/exact/cyclotomic.hpp"
#include "autbound/exact/modular.hpp"

#include <cstdint>
#include <vector>

namespace autbound {

/// Ring homomorphism Q(zeta_m) -> F_p sending zeta_m to an element of exact
/// order m, defined on elements whose denominators are prime to p.
struct ReductionMap {
    int conductor = 1;
    std::uint32_t prime = 2;
    std::uint32_t root = 1;
    /// root^k for 0 <= k < conductor.
    std::vector<std::uint32_t> root_powers;
};

/// Smallest prime p >= lower_bound with p = 1 (mod m), with a verified
/// order-m root. Primes are kept below 2^32. Throws BudgetExceeded when no
/// such prime exists below search_cap.
ReductionMap find_reduction_prime(int m, std::uint64_t lower_bound = 2,
                                  std::uint64_t search_cap = std::uint64_t{1} << 32);

/// The next valid prime strictly above map.prime, for the same conductor.
ReductionMap next_reduction_prime(const ReductionMap& map);

/// Throws NonInvertibleDenominator when p divides the denominator and
/// InvalidInput when the conductor of a does not divide map.conductor.
std::uint32_t reduce(const Cyclotomic& a, const ReductionMap& map);

}  // namespace autbound
