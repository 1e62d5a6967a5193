#include "cycloset/series.hpp"

#include <utility>

namespace cycloset {

uint32_t PrimeField::inv(uint32_t a) const
{
    uint64_t result = 1, base = a % p;
    uint64_t e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return (uint32_t)result;
}

TruncatedSeries TruncatedSeries::monomial(int e, uint32_t coef, int K, PrimeField f)
{
    TruncatedSeries s(K, f);
    if (e >= 0 && e < K)
        s.c_[e] = coef % f.p;
    return s;
}

bool TruncatedSeries::is_zero() const
{
    for (auto v : c_)
        if (v)
            return false;
    return true;
}

int TruncatedSeries::valuation() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i])
            return (int)i;
    return (int)c_.size();
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = f_.add(c_[i], o.c_[i]);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    TruncatedSeries r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = f_.sub(c_[i], o.c_[i]);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    int K = order();
    TruncatedSeries r(K, f_);
    for (int i = 0; i < K; ++i) {
        if (!c_[i])
            continue;
        for (int j = 0; i + j < K; ++j)
            if (o.c_[j])
                r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const
{
    int K = order();
    TruncatedSeries r(K, f_);
    for (int i = 0; i + k < K; ++i)
        if (i + k >= 0)
            r.c_[i + k] = c_[i];
    return r;
}

int rank_mod_p(std::vector<std::vector<uint32_t>> rows, PrimeField f)
{
    if (rows.empty())
        return 0;
    size_t ncol = rows[0].size();
    size_t rk = 0;
    for (size_t col = 0; col < ncol && rk < rows.size(); ++col) {
        size_t piv = rk;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rk], rows[piv]);
        uint32_t inv = f.inv(rows[rk][col]);
        for (auto& v : rows[rk])
            v = f.mul(v, inv);
        for (size_t i = rk + 1; i < rows.size(); ++i) {
            uint32_t m = rows[i][col];
            if (!m)
                continue;
            for (size_t j = col; j < ncol; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[rk][j]));
        }
        ++rk;
    }
    return (int)rk;
}

} // namespace cycloset
