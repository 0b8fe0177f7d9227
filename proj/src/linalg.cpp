#include "bsroots/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bsroots {

namespace mp = boost::multiprecision;

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(to_rational(row));
    return out;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots)
{
    if (pivots) pivots->clear();
    if (m.empty()) return m;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t rank(const RatMatrix& m)
{
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<std::size_t> independent_rows(const RatMatrix& m)
{
    std::vector<std::size_t> chosen;
    RatMatrix basis;  // kept in echelon form against `lead`
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
        RatVector v = m[i];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (v[lead[b]] == 0) continue;
            const Rational f = v[lead[b]] / basis[b][lead[b]];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * basis[b][k];
        }
        std::size_t l = 0;
        while (l < v.size() && v[l] == 0) ++l;
        if (l == v.size()) continue;
        chosen.push_back(i);
        basis.push_back(std::move(v));
        lead.push_back(l);
    }
    return chosen;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs)
{
    if (m.empty()) return RatVector{};
    const std::size_t cols = m[0].size();
    RatMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    std::vector<std::size_t> piv;
    aug = rref(std::move(aug), &piv);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    RatVector x(cols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

std::optional<RatVector> row_space_coefficients(const RatMatrix& m, const RatVector& v)
{
    // solve mᵀ y = v
    const std::size_t rows = m.size();
    if (rows == 0) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return RatVector{};
    }
    RatMatrix t(v.size(), RatVector(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) t[j][i] = m[i][j];
    return solve(t, v);
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    const std::size_t n = m.size();
    RatMatrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    std::vector<std::size_t> piv;
    aug = rref(std::move(aug), &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Integer determinant(IntMatrix m)
{
    // Bareiss
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// g = x·a + y·b with g = gcd(a, b) ≥ 0
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y)
{
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

}  // namespace

ColumnReduction column_reduce(const IntMatrix& m, std::size_t ncols)
{
    IntMatrix w = m;
    IntMatrix u(ncols, IntVector(ncols, Integer(0)));
    for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;

    // new_p = x·col_p + y·col_q ; new_q = -(b/g)·col_p + (a/g)·col_q
    auto combine = [](IntMatrix& mat, std::size_t p, std::size_t q, const Integer& x, const Integer& y,
                      const Integer& bg, const Integer& ag) {
        for (auto& row : mat) {
            const Integer cp = row[p];
            const Integer cq = row[q];
            row[p] = x * cp + y * cq;
            row[q] = ag * cq - bg * cp;
        }
    };

    std::size_t pos = 0;
    for (std::size_t i = 0; i < w.size() && pos < ncols; ++i) {
        for (std::size_t j = pos + 1; j < ncols; ++j) {
            if (w[i][j] == 0) continue;
            if (w[i][pos] == 0) {
                for (auto& row : w) std::swap(row[pos], row[j]);
                for (auto& row : u) std::swap(row[pos], row[j]);
                continue;
            }
            Integer g, x, y;
            extended_gcd(w[i][pos], w[i][j], g, x, y);
            const Integer ag = w[i][pos] / g;
            const Integer bg = w[i][j] / g;
            combine(w, pos, j, x, y, bg, ag);
            combine(u, pos, j, x, y, bg, ag);
        }
        if (w[i][pos] != 0) ++pos;
    }
    return {std::move(u), pos};
}

IntMatrix transpose(const IntMatrix& m, std::size_t ncols)
{
    IntMatrix t(ncols, IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace bsroots
