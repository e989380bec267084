#include "autbound/groups/matrix.hpp"

#include <numeric>

namespace autbound {

int matrix_conductor(const CycloMatrix& m)
{
    int c = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational()) c = std::lcm(c, m(i, j).conductor());
        }
    }
    return c;
}

CycloMatrix lift_matrix(const CycloMatrix& m, int conductor)
{
    CycloMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto& x = m(i, j);
            int l = std::lcm(x.conductor(), conductor);
            out(i, j) = x.lifted(l).restricted(conductor);
        }
    }
    return out;
}

CycloMatrix permutation_matrix(const std::vector<int>& perm)
{
    const auto n = static_cast<Eigen::Index>(perm.size());
    CycloMatrix out = zeros<Cyclotomic>(n, n);
    for (Eigen::Index j = 0; j < n; ++j) out(perm[j], j) = Cyclotomic(1);
    return out;
}

CycloMatrix diagonal_matrix(const std::vector<Cyclotomic>& diag)
{
    const auto n = static_cast<Eigen::Index>(diag.size());
    CycloMatrix out = zeros<Cyclotomic>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) = diag[i];
    return out;
}

CycloMatrix scalar_matrix(int n, const Cyclotomic& c)
{
    return diagonal_matrix(std::vector<Cyclotomic>(n, c));
}

CycloMatrix block_diagonal(const std::vector<CycloMatrix>& blocks)
{
    Eigen::Index n = 0;
    for (const auto& b : blocks) n += b.rows();
    CycloMatrix out = zeros<Cyclotomic>(n, n);
    Eigen::Index off = 0;
    for (const auto& b : blocks) {
        out.block(off, off, b.rows(), b.cols()) = b;
        off += b.rows();
    }
    return out;
}

CycloMatrix block_permutation_matrix(const std::vector<int>& perm, int block)
{
    const auto r = static_cast<Eigen::Index>(perm.size());
    CycloMatrix out = zeros<Cyclotomic>(r * block, r * block);
    for (Eigen::Index j = 0; j < r; ++j) {
        for (int k = 0; k < block; ++k) out(perm[j] * block + k, j * block + k) = Cyclotomic(1);
    }
    return out;
}

CycloMatrix scale(const CycloMatrix& m, const Cyclotomic& c)
{
    CycloMatrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) out(i, j) = m(i, j) * c;
        }
    }
    return out;
}

bool is_scalar(const CycloMatrix& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j && !m(i, j).is_zero()) return false;
            if (i == j && m(i, i) != m(0, 0)) return false;
        }
    }
    return true;
}

CycloMatrix matrix_power(const CycloMatrix& m, long e)
{
    if (e < 0) return matrix_power(inverse(m), -e);
    CycloMatrix result = identity<Cyclotomic>(m.rows());
    CycloMatrix base = m;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

}  // namespace autbound
