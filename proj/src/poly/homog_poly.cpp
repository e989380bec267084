#include "autbound/poly/homog_poly.hpp"

#include "autbound/error.hpp"
#include "autbound/exact/literal.hpp"

#include <numeric>

namespace autbound {

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

HomogPoly::HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree)
{
    if (nvars < 1 || degree < 0) throw InvalidInput("polynomial needs nvars >= 1 and degree >= 0");
}

HomogPoly HomogPoly::from_terms(int nvars, int degree, const std::vector<std::pair<Monomial, Cyclotomic>>& terms)
{
    HomogPoly f(nvars, degree);
    for (const auto& [m, c] : terms) f.add_term(m, c);
    return f;
}

HomogPoly HomogPoly::fermat(int nvars, int degree)
{
    HomogPoly f(nvars, degree);
    for (int i = 0; i < nvars; ++i) {
        Monomial m(nvars, 0);
        m[i] = degree;
        f.add_term(m, Cyclotomic(1));
    }
    return f;
}

Cyclotomic HomogPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

int HomogPoly::conductor() const
{
    int c = 1;
    for (const auto& [m, v] : terms_) {
        if (!v.is_rational()) c = std::lcm(c, v.conductor());
    }
    return c;
}

void HomogPoly::add_term(const Monomial& m, const Cyclotomic& c)
{
    if (static_cast<int>(m.size()) != nvars_) throw InvalidInput("monomial has the wrong number of variables");
    int total = 0;
    for (int e : m) {
        if (e < 0) throw InvalidInput("negative exponent");
        total += e;
    }
    if (total != degree_) throw InvalidInput("monomial degree differs from the polynomial degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomogPoly HomogPoly::scaled(const Cyclotomic& c) const
{
    HomogPoly out(nvars_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b)
{
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_) throw DimensionMismatch("polynomial shapes differ");
    HomogPoly out = a;
    for (const auto& [m, v] : b.terms_) out.add_term(m, v);
    return out;
}

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) { return a + b.scaled(Cyclotomic(-1)); }

bool operator==(const HomogPoly& a, const HomogPoly& b)
{
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second != ib->second) return false;
    }
    return true;
}

std::string HomogPoly::to_string() const
{
    if (terms_.empty()) return "0";
    const int m = conductor();
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff = format_literal(c, m);
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (mono[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (mono[i] > 1) vars += "^" + std::to_string(mono[i]);
        }
        if (vars.empty()) {
            out += "(" + coeff + ")";
        } else if (c.is_one()) {
            out += vars;
        } else {
            out += "(" + coeff + ")*" + vars;
        }
    }
    return out;
}

namespace {

void fill(int var, int remaining, Monomial& cur, std::vector<Monomial>& out)
{
    const int n = static_cast<int>(cur.size());
    if (var == n - 1) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        fill(var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree)
{
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    fill(0, degree, cur, out);
    return out;
}

}  // namespace autbound
