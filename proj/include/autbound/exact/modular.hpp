#pragma once

#include <cstdint>
#include <vector>

namespace autbound::modp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline u32 add(u32 a, u32 b, u32 p)
{
    u64 s = u64(a) + b;
    return static_cast<u32>(s >= p ? s - p : s);
}

inline u32 sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + (p - b); }

inline u32 mul(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }

inline u32 pow(u32 a, u64 e, u32 p)
{
    u64 r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

/// Inverse in F_p; a must be nonzero mod p.
inline u32 inv(u32 a, u32 p) { return pow(a, p - 2, p); }

bool is_prime(u64 n);

/// Distinct prime divisors of n.
std::vector<u64> prime_factors(u64 n);

/// Smallest generator of F_p^*.
u32 primitive_root(u32 p);

}  // namespace autbound::modp
