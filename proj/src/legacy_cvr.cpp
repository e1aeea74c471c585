#include "bcv/legacy_cvr.hpp"

#include "bcv/binomial.hpp"
#include "bcv/errors.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <string>

namespace bcv {

CvrValue cvr(int n_essential, int N) {
    if (N < 1) throw DomainError("CVR needs a panel of at least one rater");
    if (n_essential < 0 || n_essential > N) {
        throw DomainError("essential count " + std::to_string(n_essential) + " outside [0, " + std::to_string(N) + "]");
    }
    // (n - N/2) / (N/2) == (2n - N) / N
    mpq_class v(2 * n_essential - N, N);
    v.canonicalize();
    return {v};
}

LawsheMinTable LawsheMinTable::published() {
    return LawsheMinTable({
        {5, mpq_class(99, 100)},
        {6, mpq_class(99, 100)},
        {7, mpq_class(99, 100)},
        {8, mpq_class(75, 100)},
        {9, mpq_class(78, 100)},
        {40, mpq_class(29, 100)},
    });
}

LawsheMinTable::LawsheMinTable(std::map<int, mpq_class> entries) : entries_(std::move(entries)) {
    for (auto& [_, v] : entries_) v.canonicalize();
}

const mpq_class& LawsheMinTable::min_cvr(int N) const {
    const auto it = entries_.find(N);
    if (it == entries_.end()) throw LookupError("no Lawshe CVR_min for panel size " + std::to_string(N));
    return it->second;
}

bool lawshe_retain(const mpq_class& cvr, int N, const LawsheMinTable& table) {
    return cmp(cvr, table.min_cvr(N)) >= 0;
}

double one_tailed_z(const ExactProbability& alpha) {
    if (alpha.is_zero() || cmp(alpha.value(), mpq_class(1, 2)) > 0) {
        throw DomainError("significance must lie in (0, 1/2], got " + alpha.str());
    }
    const boost::math::normal_distribution<double> standard;
    const double z = boost::math::quantile(boost::math::complement(standard, alpha.to_double()));
    return std::round(z * 1e4) / 1e4;
}

int wilson_n_critical(int N, const ExactProbability& alpha) {
    if (N < 1) throw DomainError("panel size must be at least 1");
    const double z = one_tailed_z(alpha);
    const double mean = N / 2.0;
    const double sd = std::sqrt(N / 4.0);
    return static_cast<int>(std::lround(mean + z * sd));
}

std::optional<int> ayre_n_critical(int N, const ExactProbability& alpha) {
    if (alpha.is_zero() || cmp(alpha.value(), mpq_class(1, 2)) > 0) {
        throw DomainError("significance must lie in (0, 1/2], got " + alpha.str());
    }
    return min_upper_tail_count(BinomialParams(N, ExactProbability(1, 2)), alpha);
}

std::vector<ComparisonRow> comparison_table(PanelRange range, const ComparisonOptions& options) {
    if (range.first < 5 || range.last > kMaxPanelSize || range.first > range.last) {
        throw DomainError("comparison range " + std::to_string(range.first) + ":" + std::to_string(range.last)
                          + " outside [5, " + std::to_string(kMaxPanelSize) + "]");
    }
    const std::vector<CutLevel> lambdas{CutLevel::five_percent(), CutLevel::one_percent()};
    const auto three = generate_table(range, ExactProbability(1, 3), lambdas, options.bcv);
    const auto four = generate_table(range, ExactProbability(1, 4), lambdas, options.bcv);

    std::vector<ComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(range.size()));
    for (std::size_t i = 0; i < three.rows.size(); ++i) {
        const int N = three.rows[i].N;
        rows.push_back({N,
                        three.rows[i].cells[0],
                        three.rows[i].cells[1],
                        four.rows[i].cells[0],
                        four.rows[i].cells[1],
                        wilson_n_critical(N, options.legacy_alpha),
                        ayre_n_critical(N, options.legacy_alpha)});
    }
    return rows;
}

} // namespace bcv
