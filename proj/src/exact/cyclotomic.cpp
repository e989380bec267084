#include "autbound/exact/cyclotomic.hpp"

#include "autbound/error.hpp"
#include "autbound/exact/literal.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

namespace autbound {

namespace detail {

struct CyclotomicField {
    int m = 1;
    int phi = 1;
    std::vector<long> poly;
    /// powers[j] = x^j mod Phi_m, for 0 <= j < max(m, 2*phi).
    std::vector<std::vector<long>> powers;
};

namespace {

using Poly = std::vector<long>;

// Exact division by a monic integer polynomial.
Poly divide_monic(const Poly& num, const Poly& den)
{
    Poly rem = num;
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    Poly q(std::max(nn - dn + 1, 1), 0);
    for (int k = nn; k >= dn; --k) {
        long c = rem[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dn; ++i) rem[k - dn + i] -= c * den[i];
    }
    for (int i = 0; i < dn; ++i) {
        if (rem[i] != 0) throw Error("cyclotomic polynomial division left a remainder");
    }
    return q;
}

std::mutex& poly_mutex()
{
    static std::mutex m;
    return m;
}

std::map<int, Poly>& poly_cache()
{
    static std::map<int, Poly> cache;
    return cache;
}

Poly cyclotomic_poly_locked(int m)
{
    auto& cache = poly_cache();
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) p = divide_monic(p, cyclotomic_poly_locked(d));
    }
    cache.emplace(m, p);
    return p;
}

std::unique_ptr<CyclotomicField> build_field(int m)
{
    auto f = std::make_unique<CyclotomicField>();
    f->m = m;
    f->poly = cyclotomic_polynomial(m);
    f->phi = static_cast<int>(f->poly.size()) - 1;
    const int count = std::max(m, 2 * f->phi);
    f->powers.reserve(count);
    std::vector<long> cur(f->phi, 0);
    cur[0] = 1;
    for (int j = 0; j < count; ++j) {
        f->powers.push_back(cur);
        // multiply by x and reduce using x^phi = -sum poly[i] x^i
        long top = cur[f->phi - 1];
        for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (int i = 0; i < f->phi; ++i) cur[i] -= top * f->poly[i];
        }
    }
    return f;
}

}  // namespace

const CyclotomicField& cyclotomic_field(int conductor)
{
    if (conductor < 1) throw InvalidInput("conductor must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard lock(mutex);
    auto it = fields.find(conductor);
    if (it == fields.end()) it = fields.emplace(conductor, build_field(conductor)).first;
    return *it->second;
}

}  // namespace detail

using detail::CyclotomicField;

int euler_phi(int m)
{
    if (m < 1) throw InvalidInput("euler_phi: m must be positive");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> cyclotomic_polynomial(int m)
{
    if (m < 1) throw InvalidInput("cyclotomic_polynomial: m must be positive");
    std::lock_guard lock(detail::poly_mutex());
    return detail::cyclotomic_poly_locked(m);
}

namespace {

void addmul(Integer& acc, const Integer& x, long c)
{
    if (c > 0) {
        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
    } else if (c < 0) {
        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
    }
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic::Cyclotomic(const CyclotomicField* field) : field_(field), num_(field->phi), den_(1) {}

Cyclotomic::Cyclotomic() : Cyclotomic(&detail::cyclotomic_field(1)) {}

Cyclotomic::Cyclotomic(int value) : Cyclotomic(static_cast<long>(value)) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic()
{
    num_[0] = value;
}

Cyclotomic::Cyclotomic(const Integer& value) : Cyclotomic()
{
    num_[0] = value;
}

Cyclotomic::Cyclotomic(const Rational& value) : Cyclotomic()
{
    num_[0] = value.get_num();
    den_ = value.get_den();
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k)
{
    const auto& f = detail::cyclotomic_field(m);
    Cyclotomic out(&f);
    long e = k % m;
    if (e < 0) e += m;
    const auto& row = f.powers[static_cast<std::size_t>(e)];
    for (int i = 0; i < f.phi; ++i) out.num_[i] = row[i];
    return out;
}

Cyclotomic Cyclotomic::from_coefficients(int m, const std::vector<Rational>& coeffs)
{
    const auto& f = detail::cyclotomic_field(m);
    if (static_cast<int>(coeffs.size()) > f.phi) {
        throw InvalidInput("from_coefficients: more than phi(m) coordinates");
    }
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    Cyclotomic out(&f);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    }
    out.den_ = den;
    out.normalize();
    return out;
}

int Cyclotomic::conductor() const { return field_->m; }

int Cyclotomic::dimension() const { return field_->phi; }

Rational Cyclotomic::coefficient(int k) const
{
    if (k < 0 || k >= field_->phi) return Rational(0);
    return make_rational(num_[k], den_);
}

std::vector<Rational> Cyclotomic::coefficients() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& n : num_) out.push_back(make_rational(n, den_));
    return out;
}

bool Cyclotomic::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const Integer& n) { return n == 0; });
}

bool Cyclotomic::is_rational() const
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& n) { return n == 0; });
}

bool Cyclotomic::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

Rational Cyclotomic::to_rational() const
{
    if (!is_rational()) throw InvalidInput("cyclotomic number is not rational");
    return make_rational(num_[0], den_);
}

void Cyclotomic::normalize()
{
    Integer g = den_;
    for (const auto& n : num_) {
        if (g == 1) break;
        if (n != 0) g = gcd(g, n);
    }
    if (den_ < 0) g = -abs(g);
    if (g != 1 && g != 0) {
        for (auto& n : num_) {
            if (n != 0) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (is_zero()) den_ = 1;
}

Cyclotomic Cyclotomic::lifted(int m) const
{
    if (m == field_->m) return *this;
    if (m % field_->m != 0) throw InvalidInput("lifted: target conductor is not a multiple");
    const auto& f = detail::cyclotomic_field(m);
    const int step = m / field_->m;
    Cyclotomic out(&f);
    for (int j = 0; j < field_->phi; ++j) {
        if (num_[j] == 0) continue;
        const auto& row = f.powers[static_cast<std::size_t>(j) * step];
        for (int i = 0; i < f.phi; ++i) addmul(out.num_[i], num_[j], row[i]);
    }
    out.den_ = den_;
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::restricted(int m) const
{
    if (m == field_->m) return *this;
    if (field_->m % m != 0) throw InvalidInput("restricted: target conductor must divide the conductor");
    const auto& big = *field_;
    const auto& small = detail::cyclotomic_field(m);
    const int step = big.m / m;
    // Solve E c = a where column j of E is z_M^(j*step).
    const int rows = big.phi;
    const int cols = small.phi;
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
    for (int j = 0; j < cols; ++j) {
        const auto& col = big.powers[static_cast<std::size_t>(j) * step];
        for (int i = 0; i < rows; ++i) aug[i][j] = col[i];
    }
    for (int i = 0; i < rows; ++i) aug[i][cols] = make_rational(num_[i], den_);
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (aug[i][c] != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[r]);
        Rational inv = 1 / aug[r][c];
        for (int k = c; k <= cols; ++k) aug[r][k] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rational factor = aug[i][c];
            for (int k = c; k <= cols; ++k) aug[i][k] -= factor * aug[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i) {
        if (aug[i][cols] != 0) throw InvalidInput("restricted: element does not lie in the subfield");
    }
    std::vector<Rational> coeffs(cols);
    for (int i = 0; i < r; ++i) coeffs[pivot_col[i]] = aug[i][cols];
    return from_coefficients(m, coeffs);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs)
{
    if (rhs.is_zero()) return *this;
    if (is_zero() && rhs.field_->m % field_->m == 0) return *this = rhs;
    if (rhs.field_ != field_) {
        const int m = lcm_int(field_->m, rhs.field_->m);
        if (m != field_->m) *this = lifted(m);
        if (m != rhs.field_->m) return *this += rhs.lifted(m);
    }
    if (den_ == rhs.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= rhs.den_;
            mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& n : out.num_) n = -n;
    return out;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs)
{
    if (lhs.field_ != rhs.field_) {
        const int m = lcm_int(lhs.field_->m, rhs.field_->m);
        if (lhs.is_rational() || rhs.is_rational()) {
            // scaling needs no common field; keep the larger one
        } else {
            return lhs.lifted(m) * rhs.lifted(m);
        }
    }
    if (lhs.is_rational() || rhs.is_rational()) {
        const Cyclotomic& scalar = lhs.is_rational() ? lhs : rhs;
        const Cyclotomic& other = lhs.is_rational() ? rhs : lhs;
        Cyclotomic out = other;
        for (auto& n : out.num_) n *= scalar.num_[0];
        out.den_ *= scalar.den_;
        out.normalize();
        return out;
    }
    const CyclotomicField& f = *lhs.field_;
    const int phi = f.phi;
    std::vector<Integer> conv(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (lhs.num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (rhs.num_[j] == 0) continue;
            mpz_addmul(conv[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
        }
    }
    Cyclotomic out(&f);
    for (int i = 0; i < phi; ++i) out.num_[i] = std::move(conv[i]);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = f.powers[k];
        for (int i = 0; i < phi; ++i) addmul(out.num_[i], conv[k], row[i]);
    }
    out.den_ = lhs.den_ * rhs.den_;
    out.normalize();
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this * rhs.inverse(); }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs)
{
    if (lhs.field_ == rhs.field_) return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
    const int m = std::lcm(lhs.field_->m, rhs.field_->m);
    return lhs.lifted(m) == rhs.lifted(m);
}

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int degree(const RPoly& p)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] != 0) return i;
    }
    return -1;
}

void divmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r)
{
    r = a;
    const int db = degree(b);
    const int da = degree(a);
    q.assign(std::max(da - db + 1, 1), Rational(0));
    for (int k = da; k >= db; --k) {
        if (r[k] == 0) continue;
        Rational c = r[k] / b[db];
        q[k - db] = c;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
    }
    trim(q);
    trim(r);
}

RPoly sub_mul(const RPoly& a, const RPoly& q, const RPoly& b)
{
    RPoly out(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        Cyclotomic out = *this;
        out.num_[0] = den_;
        out.den_ = num_[0];
        out.normalize();
        return out;
    }
    const auto& f = *field_;
    RPoly r0(f.poly.begin(), f.poly.end());
    RPoly r1(num_.begin(), num_.end());
    trim(r1);
    RPoly s0{Rational(0)};
    RPoly s1{Rational(1)};
    while (degree(r1) > 0) {
        RPoly q, r;
        divmod(r0, r1, q, r);
        RPoly s = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // s1 * a = r1 (constant) mod Phi
    Rational c = r1[0];
    RPoly q, rem;
    RPoly phi_poly(f.poly.begin(), f.poly.end());
    divmod(s1, phi_poly, q, rem);
    std::vector<Rational> coeffs(f.phi, Rational(0));
    for (std::size_t i = 0; i < rem.size() && static_cast<int>(i) < f.phi; ++i) coeffs[i] = rem[i] / c;
    // the stored value is (num/den); we inverted num only
    Cyclotomic out = from_coefficients(f.m, coeffs);
    for (auto& n : out.num_) n *= den_;
    out.normalize();
    return out;
}

std::size_t Cyclotomic::hash() const
{
    // rationals hash the same at every conductor
    std::size_t h = is_rational() ? 0x51ed27ULL : static_cast<std::size_t>(field_->m) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](const Integer& v) {
        std::size_t x = mpz_size(v.get_mpz_t()) ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
        x ^= static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1) << 1;
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(den_);
    if (is_rational()) {
        mix(num_[0]);
        return h;
    }
    for (const auto& n : num_) mix(n);
    return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value)
{
    return os << format_literal(value, value.conductor());
}

Cyclotomic pow(const Cyclotomic& base, long exponent)
{
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Cyclotomic result(1);
    Cyclotomic b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

Cyclotomic sqrt5()
{
    auto z = [](long k) { return Cyclotomic::root_of_unity(5, k); };
    return z(1) - z(2) - z(3) + z(4);
}

Cyclotomic sqrt_minus7()
{
    auto z = [](long k) { return Cyclotomic::root_of_unity(7, k); };
    return z(1) + z(2) + z(4) - z(3) - z(5) - z(6);
}

Cyclotomic i_sqrt3() { return Cyclotomic::root_of_unity(3, 1) - Cyclotomic::root_of_unity(3, 2); }

Cyclotomic golden_ratio() { return (Cyclotomic(1) + sqrt5()) * Cyclotomic(make_rational(1, 2)); }

}  // namespace autbound
