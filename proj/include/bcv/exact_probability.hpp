#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace bcv {

// Parses "a/b", an integer, or a plain decimal literal ("0.05") into an exact
// rational. Decimals convert through their literal expansion, so "0.05" is
// exactly 1/20. Throws DomainError on malformed text or a zero denominator.
mpq_class parse_rational(std::string_view text);

// "a/b", or "a" when the denominator is 1.
std::string rational_string(const mpq_class& q);

// An exact probability: a reduced non-negative rational in [0, 1].
class ExactProbability {
public:
    ExactProbability() = default; // zero

    // Throws DomainError if den == 0 or num/den > 1.
    ExactProbability(unsigned long num, unsigned long den);

    // Canonicalizes q and throws DomainError unless 0 <= q <= 1.
    explicit ExactProbability(mpq_class q);

    static ExactProbability parse(std::string_view text);
    static ExactProbability one() { return ExactProbability(1, 1); }

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    // 1 - p.
    ExactProbability complement() const;

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return cmp(value_, 1) == 0; }

    // Nearest double; tiny values may flush to 0.
    double to_double() const { return value_.get_d(); }
    std::string str() const { return rational_string(value_); }

    friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactProbability& a, const ExactProbability& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_{0};
};

} // namespace bcv
