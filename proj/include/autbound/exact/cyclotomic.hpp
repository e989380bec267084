#pragma once

#include "autbound/exact/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace autbound {

namespace detail {
struct CyclotomicField;
const CyclotomicField& cyclotomic_field(int conductor);
}  // namespace detail

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int m);

/// Exact element of Q(zeta_m).
///
/// Stored in the power basis 1, z, ..., z^(phi(m)-1) modulo Phi_m as a vector
/// of integer numerators over one positive common denominator, with the
/// content of (numerators, denominator) divided out. That makes the
/// representation canonical: two elements of the same field are equal iff
/// the numerator vectors and denominators agree. Binary operations between
/// different conductors lift both operands to the lcm first.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(int value);   // NOLINT(google-explicit-constructor)
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Integer& value);   // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// zeta_m^k, for any integer k.
    static Cyclotomic root_of_unity(int m, long k = 1);
    /// Element with the given power-basis coordinates (length phi(m); shorter
    /// vectors are zero-padded).
    static Cyclotomic from_coefficients(int m, const std::vector<Rational>& coeffs);

    [[nodiscard]] int conductor() const;
    [[nodiscard]] int dimension() const;
    [[nodiscard]] Rational coefficient(int k) const;
    [[nodiscard]] std::vector<Rational> coefficients() const;
    [[nodiscard]] const std::vector<Integer>& numerators() const { return num_; }
    [[nodiscard]] const Integer& denominator() const { return den_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_rational() const;
    /// Throws InvalidInput when the element is not rational.
    [[nodiscard]] Rational to_rational() const;

    /// Image in Q(zeta_m) for a multiple m of the conductor.
    [[nodiscard]] Cyclotomic lifted(int m) const;
    /// Inverse of lifted(): coordinates over Q(zeta_m) for a divisor m of the
    /// conductor. Throws InvalidInput when the element is not in Q(zeta_m).
    [[nodiscard]] Cyclotomic restricted(int m) const;

    /// Throws DivisionByZero on zero.
    [[nodiscard]] Cyclotomic inverse() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
    friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) { return lhs * rhs.inverse(); }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
    friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

    /// Hash of the canonical representation. Equal elements hash equally when
    /// they share a conductor or are rational.
    [[nodiscard]] std::size_t hash() const;

private:
    explicit Cyclotomic(const detail::CyclotomicField* field);
    void normalize();

    const detail::CyclotomicField* field_;
    std::vector<Integer> num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

Cyclotomic pow(const Cyclotomic& base, long exponent);

/// sqrt(5) = z5 - z5^2 - z5^3 + z5^4 inside Q(zeta_5).
Cyclotomic sqrt5();
/// sqrt(-7) = z7 + z7^2 + z7^4 - z7^3 - z7^5 - z7^6 inside Q(zeta_7).
Cyclotomic sqrt_minus7();
/// i*sqrt(3) = z3 - z3^2 inside Q(zeta_3).
Cyclotomic i_sqrt3();
/// The golden ratio (1 + sqrt 5)/2.
Cyclotomic golden_ratio();

}  // namespace autbound

template <>
struct std::hash<autbound::Cyclotomic> {
    std::size_t operator()(const autbound::Cyclotomic& c) const noexcept { return c.hash(); }
};
