#pragma once
// Exact binomial probabilities over arbitrary-precision rationals.
//
// For p = a/b in lowest terms every point mass shares the denominator b^N:
//
//     pmf(n) = C(N, n) * a^n * (b - a)^(N - n) / b^N
//
// so the library mostly works with the integer numerator ("weight") and only
// forms a reduced rational at the edges. Threshold checks against a cut level
// become integer comparisons and never depend on rounding.

#include "bcv/exact_probability.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace bcv {

struct BinomialParams {
    int N = 1;
    ExactProbability p;

    // Throws DomainError unless N >= 1 and 0 < p < 1.
    BinomialParams(int panel_size, ExactProbability success);
};

// C(N, k) by the multiplicative running product; no factorial table.
mpz_class binomial_coefficient(unsigned long N, unsigned long k);

// Incremental walk over the weights C(N, n) a^n (b - a)^(N - n), upward or
// downward one step at a time. Each step is one small multiply and one exact
// division, which keeps N = 10,000 cheap.
class PmfCursor {
public:
    PmfCursor(const BinomialParams& params, int start);

    int position() const noexcept { return n_; }
    const mpz_class& weight() const noexcept { return weight_; }
    const mpz_class& scale() const noexcept { return scale_; } // b^N

    ExactProbability probability() const;

    // weight / scale <= bound, exactly.
    bool at_most(const ExactProbability& bound) const;

    void step_up();   // requires position() < N
    void step_down(); // requires position() > 0

private:
    int N_;
    mpz_class a_;    // numerator of p
    mpz_class rest_; // denominator minus numerator
    mpz_class scale_;
    mpz_class weight_;
    int n_;
};

// C(N,n) p^n (1-p)^(N-n), reduced. Throws DomainError when n is outside [0, N].
ExactProbability pmf(int n, const BinomialParams& params);

// Sum of pmf(k) for k = n..N, exact.
ExactProbability upper_tail(int n, const BinomialParams& params);

// Smallest n with upper_tail(n) <= alpha, or nullopt when even n = N fails.
std::optional<int> min_upper_tail_count(const BinomialParams& params, const ExactProbability& alpha);

// Floating-point pmf. Extended precision keeps the full support of N <= 1000
// representable (e.g. 3^-1000), and large N does not overflow near the mode.
long double pmf_float(int n, const BinomialParams& params);

struct PmfPoint {
    int n = 0;
    ExactProbability probability;
};

// pmf(n) for n = 0..N in order. The entries sum to exactly 1.
std::vector<PmfPoint> pmf_series(const BinomialParams& params);

} // namespace bcv
