#include "bcv/binomial.hpp"

#include "bcv/errors.hpp"

#include <boost/math/distributions/binomial.hpp>

#include <string>
#include <utility>

namespace bcv {

namespace {

void require_in_support(int n, const BinomialParams& params) {
    if (n < 0 || n > params.N) {
        throw DomainError("count " + std::to_string(n) + " outside [0, " + std::to_string(params.N) + "]");
    }
}

ExactProbability reduce(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    return ExactProbability(std::move(q));
}

} // namespace

BinomialParams::BinomialParams(int panel_size, ExactProbability success)
    : N(panel_size), p(std::move(success)) {
    if (N < 1) throw DomainError("panel size must be at least 1, got " + std::to_string(N));
    if (p.is_zero() || p.is_one()) throw DomainError("success probability must lie strictly in (0, 1)");
}

mpz_class binomial_coefficient(unsigned long N, unsigned long k) {
    if (k > N) return 0;
    if (k > N - k) k = N - k;
    mpz_class c = 1;
    // After step i, c == C(N - k + i, i), so every division is exact.
    for (unsigned long i = 1; i <= k; ++i) {
        mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), N - k + i);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
    }
    return c;
}

PmfCursor::PmfCursor(const BinomialParams& params, int start)
    : N_(params.N), a_(params.p.numerator()), rest_(params.p.denominator() - params.p.numerator()), n_(start) {
    require_in_support(start, params);
    const auto N = static_cast<unsigned long>(N_);
    const auto n = static_cast<unsigned long>(start);

    mpz_pow_ui(scale_.get_mpz_t(), params.p.denominator().get_mpz_t(), N);

    mpz_class a_pow;
    mpz_class rest_pow;
    mpz_pow_ui(a_pow.get_mpz_t(), a_.get_mpz_t(), n);
    mpz_pow_ui(rest_pow.get_mpz_t(), rest_.get_mpz_t(), N - n);
    weight_ = binomial_coefficient(N, n) * a_pow * rest_pow;
}

ExactProbability PmfCursor::probability() const {
    return reduce(weight_, scale_);
}

bool PmfCursor::at_most(const ExactProbability& bound) const {
    // weight / scale <= num / den  <=>  weight * den <= num * scale
    const mpz_class lhs = weight_ * bound.denominator();
    const mpz_class rhs = scale_ * bound.numerator();
    return cmp(lhs, rhs) <= 0;
}

void PmfCursor::step_up() {
    if (n_ >= N_) throw DomainError("pmf cursor stepped past N");
    // w(n+1) = w(n) * (N - n) * a / ((n + 1) * (b - a))
    mpz_mul_ui(weight_.get_mpz_t(), weight_.get_mpz_t(), static_cast<unsigned long>(N_ - n_));
    weight_ *= a_;
    mpz_divexact_ui(weight_.get_mpz_t(), weight_.get_mpz_t(), static_cast<unsigned long>(n_ + 1));
    mpz_divexact(weight_.get_mpz_t(), weight_.get_mpz_t(), rest_.get_mpz_t());
    ++n_;
}

void PmfCursor::step_down() {
    if (n_ <= 0) throw DomainError("pmf cursor stepped below 0");
    // w(n-1) = w(n) * n * (b - a) / ((N - n + 1) * a)
    mpz_mul_ui(weight_.get_mpz_t(), weight_.get_mpz_t(), static_cast<unsigned long>(n_));
    weight_ *= rest_;
    mpz_divexact_ui(weight_.get_mpz_t(), weight_.get_mpz_t(), static_cast<unsigned long>(N_ - n_ + 1));
    mpz_divexact(weight_.get_mpz_t(), weight_.get_mpz_t(), a_.get_mpz_t());
    --n_;
}

ExactProbability pmf(int n, const BinomialParams& params) {
    require_in_support(n, params);
    return PmfCursor(params, n).probability();
}

ExactProbability upper_tail(int n, const BinomialParams& params) {
    require_in_support(n, params);
    PmfCursor cursor(params, params.N);
    mpz_class sum = cursor.weight();
    while (cursor.position() > n) {
        cursor.step_down();
        sum += cursor.weight();
    }
    return reduce(sum, cursor.scale());
}

std::optional<int> min_upper_tail_count(const BinomialParams& params, const ExactProbability& alpha) {
    PmfCursor cursor(params, params.N);
    const mpz_class limit = cursor.scale() * alpha.numerator();
    const mpz_class& alpha_den = alpha.denominator();

    mpz_class sum = cursor.weight();
    if (cmp(sum * alpha_den, limit) > 0) return std::nullopt;
    // The tail only grows as n decreases; stop at the first overshoot.
    while (cursor.position() > 0) {
        cursor.step_down();
        sum += cursor.weight();
        if (cmp(sum * alpha_den, limit) > 0) return cursor.position() + 1;
    }
    return 0;
}

long double pmf_float(int n, const BinomialParams& params) {
    require_in_support(n, params);
    const auto p = static_cast<long double>(params.p.value().get_d());
    // get_d truncates; refine p to long double precision from the exact value.
    const mpq_class residual = params.p.value() - mpq_class(static_cast<double>(p));
    const long double p_refined = p + static_cast<long double>(residual.get_d());
    const boost::math::binomial_distribution<long double> dist(static_cast<long double>(params.N), p_refined);
    return boost::math::pdf(dist, static_cast<long double>(n));
}

std::vector<PmfPoint> pmf_series(const BinomialParams& params) {
    std::vector<PmfPoint> series;
    series.reserve(static_cast<std::size_t>(params.N) + 1);
    PmfCursor cursor(params, 0);
    for (;;) {
        series.push_back({cursor.position(), cursor.probability()});
        if (cursor.position() == params.N) break;
        cursor.step_up();
    }
    return series;
}

} // namespace bcv
