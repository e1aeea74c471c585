#pragma once
// Earlier content-validity methods, kept for side-by-side comparison:
//   - Lawshe's content validity ratio with its published CVR_min lookup,
//   - Wilson et al.'s normal-approximation critical count,
//   - Ayre & Scally's exact one-tailed binomial count at p = 1/2.

#include "bcv/critical_values.hpp"
#include "bcv/exact_probability.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace bcv {

// Content validity ratio, an exact rational in [-1, 1].
struct CvrValue {
    mpq_class value;

    double to_double() const { return value.get_d(); }
};

// (n_essential - N/2) / (N/2). Throws DomainError for N < 1 or n outside [0, N].
CvrValue cvr(int n_essential, int N);

// Lawshe's CVR_min by panel size. Only the published entries are known; there
// is no interpolation.
class LawsheMinTable {
public:
    // {5: .99, 6: .99, 7: .99, 8: .75, 9: .78, 40: .29}
    static LawsheMinTable published();

    explicit LawsheMinTable(std::map<int, mpq_class> entries);

    bool covers(int N) const { return entries_.contains(N); }
    // Throws LookupError when N has no entry.
    const mpq_class& min_cvr(int N) const;
    const std::map<int, mpq_class>& entries() const noexcept { return entries_; }

private:
    std::map<int, mpq_class> entries_;
};

// cvr >= CVR_min(N). Throws LookupError when N is not in the table.
bool lawshe_retain(const mpq_class& cvr, int N, const LawsheMinTable& table);

// One-tailed standard normal quantile z with P(Z > z) = alpha, rounded to four
// decimals (1.6449 at 0.05). Throws DomainError unless 0 < alpha <= 1/2.
double one_tailed_z(const ExactProbability& alpha);

// Nearest integer to N/2 + z(alpha) * sqrt(N/4), ties away from zero.
int wilson_n_critical(int N, const ExactProbability& alpha);

// Smallest n with P(X >= n) <= alpha for X ~ Bin(N, 1/2); nullopt if even n = N fails.
std::optional<int> ayre_n_critical(int N, const ExactProbability& alpha);

struct ComparisonOptions {
    ExactProbability legacy_alpha = ExactProbability(1, 20);
    CriticalOptions bcv;
};

struct ComparisonRow {
    int N = 0;
    CriticalValue three_option_five;
    CriticalValue three_option_one;
    CriticalValue four_option_five;
    CriticalValue four_option_one;
    int wilson = 0;
    std::optional<int> ayre;
};

// BCV at p in {1/3, 1/4} and lambda in {1/20, 1/100}, then Wilson and Ayre.
// Throws DomainError for ranges outside [5, kMaxPanelSize].
std::vector<ComparisonRow> comparison_table(PanelRange range, const ComparisonOptions& options = {});

} // namespace bcv
