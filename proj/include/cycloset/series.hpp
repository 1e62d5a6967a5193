#pragma once

#include <cstdint>
#include <vector>

namespace cycloset {

struct PrimeField {
    uint32_t p = 2;

    uint32_t add(uint32_t a, uint32_t b) const { return (uint32_t)(((uint64_t)a + b) % p); }
    uint32_t sub(uint32_t a, uint32_t b) const { return (uint32_t)(((uint64_t)a + p - b) % p); }
    uint32_t mul(uint32_t a, uint32_t b) const { return (uint32_t)(((uint64_t)a * b) % p); }
    uint32_t inv(uint32_t a) const;
    uint32_t reduce(long long v) const { return (uint32_t)(((v % (long long)p) + p) % p); }
};

// Element of GF(p)[[t]] / t^K.
class TruncatedSeries {
public:
    TruncatedSeries(int K, PrimeField f) : c_(K, 0), f_(f) {}

    static TruncatedSeries monomial(int e, uint32_t coef, int K, PrimeField f);

    int order() const { return (int)c_.size(); }
    uint32_t operator[](int i) const { return c_[i]; }
    uint32_t& at(int i) { return c_[i]; }
    const std::vector<uint32_t>& coefficients() const { return c_; }
    bool is_zero() const;
    // lowest degree with a nonzero coefficient, or order() if zero
    int valuation() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries shifted(int k) const;  // multiply by t^k
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    std::vector<uint32_t> c_;
    PrimeField f_;
};

// Rank of a matrix over GF(p); rows are consumed.
int rank_mod_p(std::vector<std::vector<uint32_t>> rows, PrimeField f);

} // namespace cycloset
