#pragma once

#include "autbound/exact/cyclotomic.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace autbound {

using Monomial = std::vector<int>;

/// Graded lexicographic order, larger monomials first (x0^d leads).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse homogeneous polynomial with cyclotomic coefficients. Terms with
/// zero coefficient are never stored.
class HomogPoly {
public:
    using Terms = std::map<Monomial, Cyclotomic, GrlexGreater>;

    HomogPoly() = default;
    /// The zero form of the given shape.
    HomogPoly(int nvars, int degree);

    /// Throws InvalidInput when an exponent vector has the wrong length, a
    /// negative entry, or the wrong total degree.
    static HomogPoly from_terms(int nvars, int degree, const std::vector<std::pair<Monomial, Cyclotomic>>& terms);

    /// sum x_i^d.
    static HomogPoly fermat(int nvars, int degree);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Cyclotomic coefficient(const Monomial& m) const;
    /// lcm of the coefficient conductors.
    [[nodiscard]] int conductor() const;

    /// Adds c * x^m; throws InvalidInput on a shape mismatch.
    void add_term(const Monomial& m, const Cyclotomic& c);

    [[nodiscard]] HomogPoly scaled(const Cyclotomic& c) const;

    friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
    friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
    friend bool operator==(const HomogPoly& a, const HomogPoly& b);
    friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

    /// Human-readable, e.g. "x0^3*x1 + (1/2*z^0 + ...)*x2^4".
    [[nodiscard]] std::string to_string() const;

private:
    int nvars_ = 0;
    int degree_ = 0;
    Terms terms_;
};

/// All exponent vectors of total degree k in n variables, graded-lex
/// descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace autbound
