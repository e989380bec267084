#include "autbound/bounds/bound_calculus.hpp"

#include "autbound/error.hpp"

#include <map>

namespace autbound {

Integer xi(int n)
{
    if (n < 1) throw InvalidInput("xi: N must be positive");
    static const std::map<int, Integer> exceptional = {
        {2, Integer(60)},
        {3, Integer(360)},
        {4, Integer(25920)},
        {5, Integer(25920)},
        {6, Integer(6531840)},
        {7, Integer(1451520)},
        {8, Integer(348364800)},
        {9, Integer(4199040)},
        {12, Integer("448345497600")},
    };
    if (n == 1) return 1;
    if (auto it = exceptional.find(n); it != exceptional.end()) return it->second;
    return factorial(static_cast<unsigned>(n + 1));
}

namespace {

// mu_1! ... mu_N! * prod Xi(block), i.e. B(pi,1).
Integer bound_core(const Partition& pi)
{
    Integer out = 1;
    const auto& blocks = pi.blocks();
    for (std::size_t i = 0; i < blocks.size();) {
        std::size_t j = i;
        while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
        out *= factorial(static_cast<unsigned>(j - i));
        out *= ipow(xi(blocks[i]), static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

Integer bound_B(const Partition& pi, int d)
{
    if (d < 3) throw PreconditionViolation("bound_B requires d >= 3");
    return bound_core(pi) * ipow(Integer(d), static_cast<unsigned>(pi.length()));
}

Rational fermat_ratio(const Partition& pi)
{
    return make_rational(bound_B(pi, 3), bound_B(Partition::ones(pi.size()), 3));
}

int max_exceptional_degree(const Partition& pi)
{
    if (pi.is_fermat()) throw InvalidInput("the Fermat partition (1^N) is excluded");
    if (bound_B(pi, 3) < bound_B(Partition::ones(pi.size()), 3)) {
        throw NotExceptional(pi.to_string() + " is not exceptional for degree 3");
    }
    // B(pi,d) >= N! d^N  <=>  d^(N-r) <= B(pi,1) / N!
    Integer c = bound_core(pi) / factorial(static_cast<unsigned>(pi.size()));
    Integer d = integer_root(c, static_cast<unsigned>(pi.size() - pi.length()));
    return static_cast<int>(d.get_si());
}

int max_exceptional_degree_scan(const Partition& pi)
{
    if (pi.is_fermat()) throw InvalidInput("the Fermat partition (1^N) is excluded");
    const Partition fermat = Partition::ones(pi.size());
    int d = 3;
    if (bound_B(pi, d) < bound_B(fermat, d)) throw NotExceptional(pi.to_string() + " is not exceptional");
    while (bound_B(pi, d + 1) >= bound_B(fermat, d + 1)) ++d;
    return d;
}

std::vector<ExceptionalRow> enumerate_exceptional(int n_min, int n_max)
{
    if (n_min < 2 || n_min > n_max) throw InvalidInput("enumerate_exceptional: need 2 <= n_min <= n_max");
    std::vector<ExceptionalRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const Integer fermat = bound_B(Partition::ones(n), 3);
        for (const auto& pi : partitions(n)) {
            if (pi.is_fermat()) continue;
            const Integer b = bound_B(pi, 3);
            if (b < fermat) continue;
            ExceptionalRow row;
            row.index = static_cast<int>(rows.size()) + 1;
            row.n = n;
            row.partition = pi;
            row.max_d = max_exceptional_degree(pi);
            row.ratio = make_rational(b, fermat);
            row.ratio_text = render_sig3(row.ratio);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

HighdimReport verify_no_exceptional(int n)
{
    if (n < 27) throw PreconditionViolation("verify_no_exceptional requires N >= 27");
    HighdimReport report;
    report.n = n;
    const Integer fermat = bound_B(Partition::ones(n), 3);
    Integer best = -1;
    for (const auto& pi : partitions(n)) {
        if (pi.is_fermat()) continue;
        Integer b = bound_B(pi, 3);
        if (b > best) {
            best = b;
            report.best = pi;
        }
    }
    report.best_ratio = make_rational(best, fermat);
    report.holds = best < fermat;
    return report;
}

std::string render_sig3(const Rational& value)
{
    if (sgn(value) <= 0) throw InvalidInput("render_sig3 expects a positive value");
    // find e with 10^e <= value < 10^(e+1)
    int e = static_cast<int>(mpz_sizeinbase(value.get_num().get_mpz_t(), 10))
            - static_cast<int>(mpz_sizeinbase(value.get_den().get_mpz_t(), 10));
    auto pow10 = [](int k) {
        Rational r = 1;
        for (int i = 0; i < std::abs(k); ++i) r *= 10;
        return k >= 0 ? r : Rational(1 / r);
    };
    while (value >= pow10(e + 1)) ++e;
    while (value < pow10(e)) --e;
    auto scaled_round = [&](int exp) {
        Rational s = value * pow10(2 - exp) + Rational(1, 2);
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
        return q;
    };
    Integer q = scaled_round(e);
    if (q >= 1000) {
        ++e;
        q = scaled_round(e);
    }
    std::string digits = q.get_str();  // three digits
    if (e >= 2) return digits + std::string(static_cast<std::size_t>(e - 2), '0');
    if (e >= 0) return digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    return "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
}

namespace {

// Parses a plain decimal into a rational; returns the unit of its last digit.
Rational parse_decimal(const std::string& text, Rational& unit)
{
    auto dot = text.find('.');
    std::string digits = text;
    int decimals = 0;
    if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        decimals = static_cast<int>(text.size() - dot - 1);
    }
    Integer den = 1;
    for (int i = 0; i < decimals; ++i) den *= 10;
    unit = make_rational(Integer(1), den);
    Integer num;
    if (digits.empty() || num.set_str(digits, 10) != 0) throw MalformedInput("bad decimal '" + text + "'");
    return make_rational(num, den);
}

}  // namespace

bool within_one_unit(const std::string& reference, const std::string& rendered)
{
    Rational unit, ignored;
    Rational a = parse_decimal(reference, unit);
    Rational b = parse_decimal(rendered, ignored);
    return abs(a - b) <= unit;
}

}  // namespace autbound
