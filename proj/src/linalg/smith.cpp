#include "autbound/linalg/smith.hpp"

#include <algorithm>

namespace autbound {

Integer bareiss_determinant(IntMatrix m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i) {
                if (m(i, k) != 0) {
                    swap = i;
                    break;
                }
            }
            if (swap < 0) return 0;
            m.row(swap).swap(m.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Clear row k and column k outside the pivot by gcd steps.
bool clear_cross(IntMatrix& m, Eigen::Index k)
{
    bool changed = false;
    for (Eigen::Index i = k + 1; i < m.rows(); ++i) {
        if (m(i, k) == 0) continue;
        changed = true;
        if (m(i, k) % m(k, k) == 0) {
            const Integer q = m(i, k) / m(k, k);
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= q * m(k, j);
            continue;
        }
        // the gcd step strictly shrinks |m(k,k)|, so the outer loop terminates
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(k, k).get_mpz_t(), m(i, k).get_mpz_t());
        Integer a = m(k, k) / g, b = m(i, k) / g;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Integer x = m(k, j), y = m(i, j);
            m(k, j) = s * x + t * y;
            m(i, j) = -b * x + a * y;
        }
    }
    for (Eigen::Index j = k + 1; j < m.cols(); ++j) {
        if (m(k, j) == 0) continue;
        changed = true;
        if (m(k, j) % m(k, k) == 0) {
            const Integer q = m(k, j) / m(k, k);
            for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, k);
            continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(k, k).get_mpz_t(), m(k, j).get_mpz_t());
        Integer a = m(k, k) / g, b = m(k, j) / g;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Integer x = m(i, k), y = m(i, j);
            m(i, k) = s * x + t * y;
            m(i, j) = -b * x + a * y;
        }
    }
    return changed;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    const Eigen::Index n = std::min(rows, cols);
    for (Eigen::Index k = 0; k < n; ++k) {
        // bring a nonzero entry of smallest magnitude to (k,k)
        Eigen::Index bi = -1, bj = -1;
        for (Eigen::Index i = k; i < rows; ++i) {
            for (Eigen::Index j = k; j < cols; ++j) {
                if (m(i, j) != 0 && (bi < 0 || abs(m(i, j)) < abs(m(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0) break;
        m.row(bi).swap(m.row(k));
        m.col(bj).swap(m.col(k));
        while (clear_cross(m, k)) {
        }
    }
    SmithForm out;
    std::vector<Integer> diag;
    for (Eigen::Index k = 0; k < n; ++k) diag.push_back(abs(m(k, k)));
    // enforce the divisibility chain on the nonzero entries
    std::vector<Integer> nz;
    for (const auto& d : diag) {
        if (d != 0) nz.push_back(d);
    }
    for (std::size_t i = 0; i < nz.size(); ++i) {
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
            Integer g = gcd(nz[i], nz[j]);
            Integer l = nz[i] / g * nz[j];
            nz[i] = g;
            nz[j] = l;
        }
    }
    out.rank = static_cast<int>(nz.size());
    out.diagonal = nz;
    out.diagonal.resize(n, Integer(0));
    return out;
}

}  // namespace autbound
