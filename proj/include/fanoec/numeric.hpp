#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanoec {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(x.get_num(), x.get_den());
}

inline Int rat_ceil(const Rat& x) {
    return ceil_div(x.get_num(), x.get_den());
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

// gcd of absolute values over a vector; 0 for the zero vector.
inline Int vector_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline bool is_primitive(const std::vector<Int>& v) { return vector_gcd(v) == 1; }

inline long to_long_checked(const Int& x, const char* what) {
    if (!x.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value exceeds machine range");
    return x.get_si();
}

}  // namespace fanoec
