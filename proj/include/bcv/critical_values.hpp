#pragma once
// Critical respondent counts: the smallest count above the mean whose point
// probability under random answering is at most the cut level.

#include "bcv/binomial.hpp"
#include "bcv/exact_probability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bcv {

inline constexpr int kMaxPanelSize = 10000;

// Maximum accepted probability that a count arose by chance.
class CutLevel {
public:
    // Throws DomainError unless 0 < lambda < 1.
    explicit CutLevel(ExactProbability lambda);
    static CutLevel parse(std::string_view text) { return CutLevel(ExactProbability::parse(text)); }

    static CutLevel five_percent() { return CutLevel(ExactProbability(1, 20)); }
    static CutLevel one_percent() { return CutLevel(ExactProbability(1, 100)); }

    const ExactProbability& lambda() const noexcept { return lambda_; }
    std::string str() const { return lambda_.str(); }

    friend bool operator==(const CutLevel&, const CutLevel&) = default;

private:
    ExactProbability lambda_;
};

struct CriticalOptions {
    // Forces n_critical >= min_floor. Off by default; 5 reproduces the printed
    // small-panel rows of the reference tables.
    std::optional<int> min_floor;
};

struct CriticalValue {
    int N = 0;
    ExactProbability p;
    CutLevel lambda = CutLevel::five_percent();
    int n_critical = 0; // meaningful only when attainable
    bool attainable = false;

    friend bool operator==(const CriticalValue&, const CriticalValue&) = default;
};

// Smallest n with n > N*p and pmf(n; N, p) <= lambda.
CriticalValue bcv_n_critical(int N, const ExactProbability& p, const CutLevel& lambda,
                             const CriticalOptions& options = {});

// Resolves several cut levels in one upward walk from the mean.
std::vector<CriticalValue> bcv_n_critical_many(int N, const ExactProbability& p,
                                               const std::vector<CutLevel>& lambdas,
                                               const CriticalOptions& options = {});

// Inclusive range of panel sizes.
struct PanelRange {
    int first = 1;
    int last = 1;

    // Parses "a:b" or a single "a".
    static PanelRange parse(std::string_view text);
    int size() const noexcept { return last - first + 1; }
};

struct CriticalTableRow {
    int N = 0;
    std::vector<CriticalValue> cells; // one per cut level, same order as the table's lambdas
};

struct CriticalTable {
    ExactProbability p;
    std::vector<CutLevel> lambdas;
    std::vector<CriticalTableRow> rows; // ascending N
};

// One row per N in range, one column per cut level. Output is independent of
// thread count. Throws DomainError for ranges outside [1, kMaxPanelSize].
CriticalTable generate_table(PanelRange range, const ExactProbability& p, const std::vector<CutLevel>& lambdas,
                             const CriticalOptions& options = {}, unsigned threads = 0);

struct Discrepancy {
    int N = 0;
    CutLevel lambda = CutLevel::five_percent();
    std::optional<int> generated; // nullopt = unattainable
    std::optional<int> reference;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// Cell-by-cell comparison. Throws DomainError if the tables differ in p, cut
// levels or panel sizes.
std::vector<Discrepancy> discrepancy_report(const CriticalTable& generated, const CriticalTable& reference);

} // namespace bcv
