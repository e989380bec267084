#pragma once

#include "autbound/exact/cyclotomic.hpp"
#include "autbound/exact/rational.hpp"

#include <Eigen/Core>

// Exact scalars inside Eigen containers. Only storage, block access and the
// coefficient-wise loops in linalg/ are used; no Eigen decomposition touches
// these types.

namespace Eigen {

template <>
struct NumTraits<autbound::Cyclotomic> : GenericNumTraits<autbound::Cyclotomic> {
    typedef autbound::Cyclotomic Real;
    typedef autbound::Cyclotomic NonInteger;
    typedef autbound::Cyclotomic Nested;
    typedef autbound::Cyclotomic Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 16
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
