#include "autbound/groups/modp.hpp"

#include "autbound/error.hpp"

namespace autbound {

ModpSpace::ModpSpace(int n, const ReductionMap& map) : n_(n), map_(map), small_prime_(map.prime < (1u << 24)) {}

std::vector<std::uint32_t> ModpSpace::reduce(const CycloMatrix& m) const
{
    if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("reduce: matrix has the wrong size");
    std::vector<std::uint32_t> out(size());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) out[i * n_ + j] = m(i, j).is_zero() ? 0 : autbound::reduce(m(i, j), map_);
    }
    return out;
}

std::vector<std::uint32_t> ModpSpace::identity() const { return scalar(1); }

std::vector<std::uint32_t> ModpSpace::scalar(std::uint32_t c) const
{
    std::vector<std::uint32_t> out(size(), 0);
    for (int i = 0; i < n_; ++i) out[i * n_ + i] = c;
    return out;
}

void ModpSpace::mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const
{
    const std::uint32_t p = map_.prime;
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            if (small_prime_) {
                for (int k = 0; k < n; ++k) acc += std::uint64_t(a[i * n + k]) * b[k * n + j];
                out[i * n + j] = static_cast<std::uint32_t>(acc % p);
            } else {
                for (int k = 0; k < n; ++k) acc = (acc + std::uint64_t(a[i * n + k]) * b[k * n + j]) % p;
                out[i * n + j] = static_cast<std::uint32_t>(acc);
            }
        }
    }
}

std::vector<std::uint32_t> ModpSpace::mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const
{
    std::vector<std::uint32_t> out(size());
    mul(a.data(), b.data(), out.data());
    return out;
}

void ModpSpace::apply(const std::uint32_t* a, const std::uint32_t* v, std::uint32_t* out) const
{
    const std::uint32_t p = map_.prime;
    for (int i = 0; i < n_; ++i) {
        std::uint64_t acc = 0;
        for (int k = 0; k < n_; ++k) acc = (acc + std::uint64_t(a[i * n_ + k]) * v[k]) % p;
        out[i] = static_cast<std::uint32_t>(acc);
    }
}

std::vector<std::uint32_t> ModpSpace::inverse(const std::vector<std::uint32_t>& a) const
{
    const std::uint32_t p = map_.prime;
    const int n = n_;
    std::vector<std::uint32_t> m(a), inv = identity();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r) {
            if (m[r * n + c]) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw DivisionByZero();
        if (piv != c) {
            for (int k = 0; k < n; ++k) {
                std::swap(m[piv * n + k], m[c * n + k]);
                std::swap(inv[piv * n + k], inv[c * n + k]);
            }
        }
        const std::uint32_t s = modp::inv(m[c * n + c], p);
        for (int k = 0; k < n; ++k) {
            m[c * n + k] = modp::mul(m[c * n + k], s, p);
            inv[c * n + k] = modp::mul(inv[c * n + k], s, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r * n + c] == 0) continue;
            const std::uint32_t f = m[r * n + c];
            for (int k = 0; k < n; ++k) {
                m[r * n + k] = modp::sub(m[r * n + k], modp::mul(f, m[c * n + k], p), p);
                inv[r * n + k] = modp::sub(inv[r * n + k], modp::mul(f, inv[c * n + k], p), p);
            }
        }
    }
    return inv;
}

bool ModpSpace::is_identity(const std::uint32_t* a) const { return scalar_value(a) == 1; }

std::uint32_t ModpSpace::scalar_value(const std::uint32_t* a) const
{
    const std::uint32_t c = a[0];
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (a[i * n_ + j] != (i == j ? c : 0)) return 0;
        }
    }
    return c;
}

std::uint64_t ModpSpace::hash(const std::uint32_t* a) const
{
    std::uint64_t h = 0x12345678abcdefULL;
    for (int i = 0; i < size(); ++i) h = mix64(h ^ a[i]);
    return h;
}

int ModpSpace::rank(std::vector<std::vector<std::uint32_t>> rows) const
{
    const std::uint32_t p = map_.prime;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c]) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        const std::uint32_t s = modp::inv(rows[r][c], p);
        for (auto& x : rows[r]) x = modp::mul(x, s, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint32_t f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] = modp::sub(rows[i][k], modp::mul(f, rows[r][k], p), p);
        }
        ++r;
    }
    return r;
}

}  // namespace autbound
