#include "autbound/exact/literal.hpp"

#include "autbound/error.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace autbound {

namespace {

std::string strip(std::string_view text)
{
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_terms(const std::string& s)
{
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool sep = (c == '+' || c == '-') && i > 0 && s[i - 1] != '*' && s[i - 1] != '^' && s[i - 1] != '/'
                   && s[i - 1] != '+' && s[i - 1] != '-';
        if (sep) {
            terms.push_back(cur);
            cur.clear();
            if (c == '-') cur.push_back('-');
            continue;
        }
        cur.push_back(c);
    }
    terms.push_back(cur);
    return terms;
}

long parse_exponent(const std::string& s, std::string_view whole)
{
    if (s.empty()) throw MalformedInput("missing exponent in '" + std::string(whole) + "'");
    Rational e = parse_rational(s);
    if (e.get_den() != 1 || !e.get_num().fits_slong_p()) {
        throw MalformedInput("bad exponent in '" + std::string(whole) + "'");
    }
    return e.get_num().get_si();
}

Cyclotomic parse_term(std::string term, int m, std::string_view whole)
{
    if (term.empty()) throw MalformedInput("empty term in '" + std::string(whole) + "'");
    if (term[0] == '+') term.erase(0, 1);
    Rational coeff(1);
    std::string zpart;
    auto star = term.find('*');
    if (star != std::string::npos) {
        coeff = parse_rational(term.substr(0, star));
        zpart = term.substr(star + 1);
    } else if (term.find('z') != std::string::npos) {
        if (term[0] == '-') {
            coeff = -1;
            term.erase(0, 1);
        }
        zpart = term;
    } else {
        return Cyclotomic(parse_rational(term));
    }
    long k = 0;
    if (zpart == "z") {
        k = 1;
    } else if (zpart.rfind("z^", 0) == 0) {
        k = parse_exponent(zpart.substr(2), whole);
    } else {
        throw MalformedInput("bad term '" + term + "' in '" + std::string(whole) + "'");
    }
    return Cyclotomic::root_of_unity(m, k) * Cyclotomic(coeff);
}

}  // namespace

Cyclotomic parse_literal(std::string_view text, int conductor)
{
    if (conductor < 1) throw MalformedInput("conductor must be positive");
    std::string s = strip(text);
    if (s.empty()) throw MalformedInput("empty cyclotomic literal");
    Cyclotomic sum = Cyclotomic::from_coefficients(conductor, {});
    for (const auto& term : split_terms(s)) sum += parse_term(term, conductor, text);
    return sum;
}

std::string format_literal(const Cyclotomic& value, int conductor)
{
    if (value.is_zero()) return "0";
    Cyclotomic v = value.lifted(std::lcm(value.conductor(), conductor)).restricted(conductor);
    std::string out;
    for (int k = 0; k < v.dimension(); ++k) {
        Rational c = v.coefficient(k);
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Rational a = abs(c);
        const std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
        if (k == 0) out += to_string(a);
        else if (a == 1) out += power;
        else out += to_string(a) + "*" + power;
    }
    return out;
}

}  // namespace autbound
