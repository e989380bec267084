#!/usr/bin/env python3
"""Write generator files for the extended profile into data/external.

Sp4(3) and PSp4(3) come from the Weil representation of Sp4(F_3) on
functions on F_3^2 (odd and even parts), 2.S6 from the Weil representation
of SL2(F_9) together with the Frobenius twist, and 2.A7 from the basic spin
representation: even products of (g_i - g_j)/sqrt(2) in a Clifford algebra,
cut down to a 4-dimensional summand with the commutant.

Only the standard library is used. Entries are written as power-basis
literals over the stated conductor.
"""

import argparse
import json
from fractions import Fraction
from math import isqrt
from pathlib import Path


def cyclotomic_poly(m):
    """Integer coefficients of Phi_m, constant term first."""
    def polydiv(num, den):
        num = num[:]
        out = [0] * (len(num) - len(den) + 1)
        for i in range(len(out) - 1, -1, -1):
            c = num[i + len(den) - 1] // den[-1]
            out[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
        return out

    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = polydiv(poly, cyclotomic_poly(d))
    return poly


class Field:
    def __init__(self, m):
        self.m = m
        self.phi = cyclotomic_poly(m)
        self.deg = len(self.phi) - 1

    def reduce(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        for i in range(len(c) - 1, self.deg - 1, -1):
            lead = c[i]
            if lead:
                for j, p in enumerate(self.phi):
                    c[i - self.deg + j] -= lead * p
        c = c[: self.deg] + [Fraction(0)] * max(0, self.deg - len(c))
        return El(self, c)

    def const(self, v):
        return self.reduce([v])

    def zeta(self, k=1):
        k %= self.m
        return self.reduce([0] * k + [1])


class El:
    __slots__ = ("f", "c")

    def __init__(self, f, c):
        self.f = f
        self.c = c

    def __add__(self, o):
        o = self._lift(o)
        return El(self.f, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return El(self.f, [-a for a in self.c])

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        prod = [Fraction(0)] * (2 * self.f.deg)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return self.f.reduce(prod)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def _lift(self, o):
        return o if isinstance(o, El) else self.f.const(o)

    def is_zero(self):
        return not any(self.c)

    def __eq__(self, o):
        return (self - o).is_zero()

    def inverse(self):
        # Solve self * x = 1 through the multiplication matrix.
        n = self.f.deg
        cols = []
        for k in range(n):
            e = [Fraction(0)] * n
            e[k] = Fraction(1)
            cols.append((self * El(self.f, e)).c)
        mat = [[cols[k][r] for k in range(n)] + [Fraction(1 if r == 0 else 0)] for r in range(n)]
        sol = solve_rational(mat, n)
        return El(self.f, sol)

    def literal(self):
        terms = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            mag = abs(a)
            power = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            body = str(mag) if not power else (power if mag == 1 else f"{mag}*{power}")
            if not terms:
                terms.append(("-" if a < 0 else "") + body)
            else:
                terms.append((" - " if a < 0 else " + ") + body)
        return "".join(terms) if terms else "0"


def solve_rational(aug, n):
    rows = [r[:] for r in aug]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


# matrices over a Field: lists of rows of El


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    f = a[0][0].f
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = f.const(0)
            for t in range(k):
                if not a[i][t].is_zero() and not b[t][j].is_zero():
                    s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def identity(f, n):
    return [[f.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_equal(a, b):
    return all(x == y for r, s in zip(a, b) for x, y in zip(r, s))


def rref(rows, ncols):
    """Reduced row echelon form over the field; returns (rows, pivots)."""
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                fct = rows[i][c]
                rows[i] = [x - fct * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(rows, ncols, f):
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [f.const(0) for _ in range(ncols)]
        v[fc] = f.const(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def restrict(mats, basis_cols):
    """Matrices of mats on the span of basis_cols (which must be invariant)."""
    n = len(basis_cols[0])
    k = len(basis_cols)
    bmat = [[basis_cols[j][i] for j in range(k)] for i in range(n)]
    # pick k independent rows of bmat
    red, pivots = rref([[bmat[i][j] for i in range(n)] for j in range(k)], n)
    sub = [[bmat[i][j] for j in range(k)] for i in pivots]
    out = []
    for g in mats:
        gb = mat_mul(g, bmat)
        x_cols = []
        for j in range(k):
            aug = [sub[r] + [gb[pivots[r]][j]] for r in range(k)]
            red2, _ = rref(aug, k)
            x_cols.append([red2[r][k] for r in range(k)])
        x = [[x_cols[j][i] for j in range(k)] for i in range(k)]
        if not mat_equal(mat_mul(bmat, x), gb):
            raise SystemExit("subspace is not invariant")
        out.append(x)
    return out


# Weil representations


def weil_sp4_f3():
    """Operators on functions on F_3^2 (value vectors indexed by 3*x1 + x2)."""
    f = Field(3)
    pts = [(a, b) for a in range(3) for b in range(3)]
    idx = {p: 3 * p[0] + p[1] for p in pts}
    psi = lambda t: f.zeta(t % 3)
    zero = lambda: [[f.const(0) for _ in pts] for _ in pts]
    ops = []
    for bmat in ([[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0, 1], [1, 0]]):
        m = zero()
        for x in pts:
            q = sum(x[i] * bmat[i][j] * x[j] for i in range(2) for j in range(2))
            m[idx[x]][idx[x]] = psi(2 * q)
        ops.append(m)
    for amat in ([[1, 1], [0, 1]], [[0, 1], [1, 0]], [[2, 0], [0, 1]]):
        m = zero()
        for x in pts:
            y = tuple(sum(amat[j][i] * x[j] for j in range(2)) % 3 for i in range(2))
            m[idx[x]][idx[y]] = f.const(1)
        ops.append(m)
    m = zero()
    for x in pts:
        for y in pts:
            m[idx[x]][idx[y]] = psi(x[0] * y[0] + x[1] * y[1]) * Fraction(1, 3)
    ops.append(m)
    neg = {idx[x]: idx[((-x[0]) % 3, (-x[1]) % 3)] for x in pts}
    reps = [idx[p] for p in [(0, 1), (1, 0), (1, 1), (1, 2)]]
    return f, ops, neg, reps, idx[(0, 0)]


def weil_sl2_f9():
    """Operators on functions on F_9 = F_3[s]/(s^2 + 1), indexed by 3a + b for a + b s."""
    f = Field(3)
    els = [(a, b) for a in range(3) for b in range(3)]
    idx = {e: 3 * e[0] + e[1] for e in els}

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    def tr(x):
        return (2 * x[0]) % 3

    psi = lambda t: f.zeta(tr(t))
    zero = lambda: [[f.const(0) for _ in els] for _ in els]
    ops = []
    for b in [(1, 0), (0, 1)]:
        m = zero()
        for x in els:
            m[idx[x]][idx[x]] = psi(mul((2, 0), mul(b, mul(x, x))))
        ops.append(m)
    gen = (1, 1)
    m = zero()
    for x in els:
        m[idx[x]][idx[mul(gen, x)]] = f.const(1)
    ops.append(m)
    m = zero()
    for x in els:
        for y in els:
            m[idx[x]][idx[y]] = psi(mul(x, y)) * Fraction(1, 3)
    ops.append(m)
    frob = zero()
    for x in els:
        frob[idx[x]][idx[mul(x, mul(x, x))]] = f.const(1)
    neg = {idx[x]: idx[((-x[0]) % 3, (-x[1]) % 3)] for x in els}
    reps = [idx[p] for p in [(0, 1), (1, 0), (1, 1), (1, 2)]]
    return f, ops, frob, neg, reps, idx[(0, 0)]


def odd_even_bases(f, n, neg, reps, origin):
    def vec(pairs):
        v = [f.const(0) for _ in range(n)]
        for i, c in pairs:
            v[i] = v[i] + c
        return v

    odd = [vec([(r, 1), (neg[r], -1)]) for r in reps]
    even = [vec([(origin, 1)])] + [vec([(r, 1), (neg[r], 1)]) for r in reps]
    return odd, even


# Clifford construction of 2.A7


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def spin_a7():
    f4 = Field(4)
    i = f4.zeta(1)
    one, zero = f4.const(1), f4.const(0)
    sx = [[zero, one], [one, zero]]
    sy = [[zero, -i], [i, zero]]
    sz = [[one, zero], [zero, -one]]
    e = identity(f4, 2)
    gam = [
        kron(kron(sx, e), e),
        kron(kron(sy, e), e),
        kron(kron(sz, sx), e),
        kron(kron(sz, sy), e),
        kron(kron(sz, sz), sx),
        kron(kron(sz, sz), sy),
        kron(kron(sz, sz), sz),
    ]
    diff = [mat_add(gam[k], mat_scale(gam[k + 1], -1)) for k in range(6)]
    three_cycle = mat_scale(mat_mul(diff[0], diff[1]), Fraction(1, 2))
    seven_cycle = diff[0]
    for d in diff[1:]:
        seven_cycle = mat_mul(seven_cycle, d)
    seven_cycle = mat_scale(seven_cycle, Fraction(1, 8))
    gens = [three_cycle, seven_cycle]

    # commutant over Q(i)
    n = 8
    rows = []
    for g in gens:
        for r in range(n):
            for c in range(n):
                row = [f4.const(0) for _ in range(n * n)]
                for t in range(n):
                    row[r * n + t] = row[r * n + t] + g[t][c]
                    row[t * n + c] = row[t * n + c] - g[r][t]
                rows.append(row)
    basis = nullspace(rows, n * n, f4)
    if len(basis) != 2:
        raise SystemExit(f"commutant has dimension {len(basis)}")
    ident = [x for r in identity(f4, n) for x in r]
    cvec = next(v for v in basis if not all(x == y * v[0] for x, y in zip(v, ident)))
    cmat = [[cvec[r * n + c] for c in range(n)] for r in range(n)]
    # centre it so that C^2 = delta * I
    tr = f4.const(0)
    for k in range(n):
        tr = tr + cmat[k][k]
    cmat = mat_add(cmat, mat_scale(identity(f4, n), -(tr * Fraction(1, n))))
    sq = mat_mul(cmat, cmat)
    delta = sq[0][0]
    if not mat_equal(sq, mat_scale(identity(f4, n), delta)):
        raise SystemExit("commutant element is not quadratic")
    # delta = -7 u^2 with u in Q(i)
    w = delta / f4.const(-7)
    u = sqrt_gaussian(w, f4)

    f28 = Field(28)
    embed = lambda x: f28.const(x.c[0]) + f28.zeta(7) * x.c[1]
    sqrt_m7 = f28.const(0)
    for k in range(1, 7):
        sign = 1 if k in (1, 2, 4) else -1
        sqrt_m7 = sqrt_m7 + f28.zeta(4 * k) * sign
    mu = embed(u) * sqrt_m7
    c28 = [[embed(x) for x in row] for row in cmat]
    proj = mat_scale(mat_add(c28, mat_scale(identity(f28, n), mu)), (mu * 2).inverse())
    cols = [[proj[r][c] for r in range(n)] for c in range(n)]
    span_red, _ = rref(cols, n)
    basis_cols = span_red
    if len(basis_cols) != 4:
        raise SystemExit(f"eigenspace has dimension {len(basis_cols)}")
    gens28 = [[[embed(x) for x in row] for row in g] for g in gens]
    return f28, restrict(gens28, basis_cols)


def sqrt_gaussian(w, f4):
    re, im = w.c[0], w.c[1]

    def qsqrt(q):
        if q < 0:
            return None
        a, b = q.numerator, q.denominator
        ra, rb = isqrt(a), isqrt(b)
        return Fraction(ra, rb) if ra * ra == a and rb * rb == b else None

    candidates = []
    if im == 0:
        p = qsqrt(re)
        if p is not None:
            candidates.append((p, Fraction(0)))
        q = qsqrt(-re)
        if q is not None:
            candidates.append((Fraction(0), q))
    else:
        norm = qsqrt(re * re + im * im)
        if norm is not None:
            p2 = (re + norm) / 2
            p = qsqrt(p2)
            if p is not None and p != 0:
                candidates.append((p, im / (2 * p)))
    for p, q in candidates:
        z = f4.const(p) + f4.zeta(1) * q
        if z * z == w:
            return z
    raise SystemExit("no square root in Q(i)")


def group_json(f, mats, ident, notes, order):
    return {
        "id": ident,
        "provenance": notes,
        "expected_order": order,
        "conductor": f.m,
        "dimension": len(mats[0]),
        "generators": [[[x.literal() for x in row] for row in m] for m in mats],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", nargs="?", default=str(Path(__file__).resolve().parents[1] / "data" / "external"))
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    f, ops, neg, reps, origin = weil_sp4_f3()
    odd, even = odd_even_bases(f, 9, neg, reps, origin)
    sp4 = restrict(ops, odd)
    psp4 = restrict(ops, even)
    files = {
        "sp4_3.json": group_json(f, sp4, "Sp4(3)", "odd part of the Weil representation of Sp4(F_3) on functions on F_3^2; "
                                 "generators: three symmetric unipotents, three Levi elements, the Fourier transform", 51840),
        "psp4_3_dim5.json": group_json(f, psp4, "PSp4(3)-5dim", "even part of the Weil representation of Sp4(F_3) on "
                                       "functions on F_3^2; same generators as sp4_3.json; -1 acts as a scalar, so the group is "
                                       "+-1 x PSp4(3)", 51840),
    }

    f9, ops9, frob, neg9, reps9, origin9 = weil_sl2_f9()
    odd9, _ = odd_even_bases(f9, 9, neg9, reps9, origin9)
    files["2s6.json"] = group_json(f9, restrict(ops9 + [frob], odd9), "2.S6",
                                   "odd part of the Weil representation of SL2(F_9) on functions on F_9, with the "
                                   "Frobenius twist f(x) -> f(x^3); PSigmaL2(9) = S6", 1440)

    f28, a7 = spin_a7()
    files["2a7.json"] = group_json(f28, a7, "2.A7",
                                   "4-dimensional summand of the basic spin representation: (123) and (1234567) as "
                                   "even products of (g_i - g_j)/sqrt(2) in Cl(7), split by the commutant over Q(i, sqrt(-7))", 5040)

    for name, j in files.items():
        (out / name).write_text(json.dumps(j, indent=2) + "\n")
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
