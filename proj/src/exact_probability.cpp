#include "bcv/exact_probability.hpp"

#include "bcv/errors.hpp"

#include <cctype>
#include <string>
#include <utility>

namespace bcv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

mpq_class parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const std::string shown(text);

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = trim(s.substr(0, slash));
        const auto den = trim(s.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den)) {
            throw DomainError("malformed rational '" + shown + "'");
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) throw DomainError("zero denominator in '" + shown + "'");
        mpq_class q(mpz_class(std::string(num), 10), d);
        q.canonicalize();
        return q;
    }

    const auto dot = s.find('.');
    const auto whole = s.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    const bool ok = (all_digits(whole) || (whole.empty() && !frac.empty()))
                    && (frac.empty() || all_digits(frac))
                    && !(dot != std::string_view::npos && frac.empty());
    if (!ok) throw DomainError("malformed number '" + shown + "'");

    std::string digits(whole);
    digits.append(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class q(mpz_class(digits, 10), den);
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactProbability::ExactProbability(unsigned long num, unsigned long den) {
    if (den == 0) throw DomainError("probability with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    if (cmp(q, 1) > 0) throw DomainError("probability " + rational_string(q) + " exceeds 1");
    value_ = std::move(q);
}

ExactProbability::ExactProbability(mpq_class q) {
    q.canonicalize();
    if (sgn(q) < 0 || cmp(q, 1) > 0) {
        throw DomainError("probability " + rational_string(q) + " outside [0, 1]");
    }
    value_ = std::move(q);
}

ExactProbability ExactProbability::parse(std::string_view text) {
    return ExactProbability(parse_rational(text));
}

ExactProbability ExactProbability::complement() const {
    return ExactProbability(mpq_class(1 - value_));
}

} // namespace bcv
