#include "bcv/decimal.hpp"

#include "bcv/errors.hpp"

namespace bcv {

namespace {

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// value * 10^shift for possibly negative shift.
mpq_class scale10(const mpq_class& value, long shift) {
    if (shift >= 0) return value * mpq_class(pow10(shift));
    return value / mpq_class(pow10(-shift));
}

} // namespace

std::string format_significant(const mpq_class& value, int digits) {
    if (digits < 1) throw DomainError("significant digits must be positive");
    if (sgn(value) == 0) return "0";

    const mpq_class magnitude = abs(value);

    // Decimal exponent e with 10^e <= magnitude < 10^(e+1). The digit-count
    // estimate is within one of the answer; fix it up exactly.
    long e = static_cast<long>(mpz_sizeinbase(magnitude.get_num_mpz_t(), 10))
             - static_cast<long>(mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
    while (cmp(scale10(magnitude, -e), 1) < 0) --e;
    while (cmp(scale10(magnitude, -e), 10) >= 0) ++e;

    // Round magnitude * 10^(digits - 1 - e) to an integer, ties to even.
    const mpq_class scaled = scale10(magnitude, digits - 1 - e);
    mpz_class quotient;
    mpz_class remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const int half = cmp(mpz_class(2 * remainder), scaled.get_den());
    if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;
    if (quotient == pow10(digits)) {
        quotient /= 10;
        ++e;
    }

    std::string mantissa = quotient.get_str();
    while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();

    std::string out = sgn(value) < 0 ? "-" : "";
    if (e >= -6 && e < 15) {
        if (e < 0) {
            out += "0.";
            out.append(static_cast<std::size_t>(-e - 1), '0');
            out += mantissa;
        } else {
            const auto int_digits = static_cast<std::size_t>(e + 1);
            if (mantissa.size() <= int_digits) {
                out += mantissa;
                out.append(int_digits - mantissa.size(), '0');
            } else {
                out += mantissa.substr(0, int_digits);
                out += '.';
                out += mantissa.substr(int_digits);
            }
        }
    } else {
        out += mantissa.substr(0, 1);
        if (mantissa.size() > 1) {
            out += '.';
            out += mantissa.substr(1);
        }
        out += 'e';
        out += std::to_string(e);
    }
    return out;
}

} // namespace bcv
