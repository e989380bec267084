#include "autbound/exact/rational.hpp"

#include "autbound/error.hpp"

#include <cctype>

namespace autbound {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

namespace {

bool parse_integer(std::string_view text, Integer& out)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    }
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return out.set_str(s, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    Integer num, den(1);
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw MalformedInput("bad rational '" + std::string(text) + "'");
    } else {
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den)) {
            throw MalformedInput("bad rational '" + std::string(text) + "'");
        }
        if (den == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer ipow(const Integer& base, unsigned exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer integer_root(const Integer& n, unsigned k)
{
    if (n < 0 || k == 0) throw InvalidInput("integer_root: need n >= 0 and k >= 1");
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::uint64_t to_u64(const Integer& value)
{
    if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
        throw InvalidInput("integer " + value.get_str() + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

}  // namespace autbound
