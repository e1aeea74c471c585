#pragma once
// Brute-force reference computations for tests. These deliberately avoid the
// library's running-product and cursor code paths: binomial coefficients come
// from factorials, every probability is formed from scratch, and searches scan
// the whole support.

#include <gmpxx.h>

#include <cmath>
#include <optional>

namespace oracle {

inline mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline mpq_class pow_q(const mpq_class& base, unsigned long e) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

// N! / ((N-n)! n!) * p^n * (1-p)^(N-n)
inline mpq_class pmf(int n, int N, const mpq_class& p) {
    const auto un = static_cast<unsigned long>(n);
    const auto uN = static_cast<unsigned long>(N);
    mpq_class c(factorial(uN), factorial(uN - un) * factorial(un));
    c.canonicalize();
    mpq_class r = c * pow_q(p, un) * pow_q(mpq_class(1 - p), uN - un);
    r.canonicalize();
    return r;
}

inline mpq_class upper_tail(int n, int N, const mpq_class& p) {
    mpq_class sum = 0;
    for (int k = n; k <= N; ++k) sum += pmf(k, N, p);
    sum.canonicalize();
    return sum;
}

// Scan every n in [0, N]; keep the first that is above the mean and at or
// below the cut level.
inline std::optional<int> n_critical(int N, const mpq_class& p, const mpq_class& lambda) {
    for (int n = 0; n <= N; ++n) {
        if (cmp(mpq_class(n), N * p) > 0 && cmp(pmf(n, N, p), lambda) <= 0) return n;
    }
    return std::nullopt;
}

inline std::optional<int> ayre(int N, const mpq_class& alpha) {
    for (int n = 0; n <= N; ++n) {
        if (cmp(upper_tail(n, N, mpq_class(1, 2)), alpha) <= 0) return n;
    }
    return std::nullopt;
}

// |approx / exact - 1| for a positive exact value, without squeezing the exact
// value through a double (it may sit below the double range).
inline long double relative_error(long double approx, const mpq_class& exact) {
    const mpf_class f(exact, 256);
    long exact_exp = 0;
    const double exact_mant = mpf_get_d_2exp(&exact_exp, f.get_mpf_t());
    int approx_exp = 0;
    const long double approx_mant = std::frexp(approx, &approx_exp);
    const long double ratio = (approx_mant / exact_mant) * std::ldexp(1.0L, approx_exp - static_cast<int>(exact_exp));
    return std::fabs(ratio - 1.0L);
}

} // namespace oracle
