#pragma once
// Four-way item verdict from the "Essential" and "Unnecessary" counts.
//
//                        | not unnecessary | unnecessary
//   ---------------------+-----------------+-----------------
//   essential            | A  retain       | B  strong paradox
//   not essential        | C  weak paradox | D  discard
//
// A side validates when its count lies strictly above the mean N*p and its
// point probability under random answering is at most the cut level. The
// count path (compare with n_critical) must give the same answer as the
// probability path.

#include "bcv/critical_values.hpp"
#include "bcv/legacy_cvr.hpp"
#include "bcv/survey.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcv {

enum class ValidationStatus {
    A_Retain,
    B_StrongParadox,
    C_WeakParadox,
    D_Discard,
    NoData, // no substantive responses (N = 0)
};

// "A", "B", "C", "D", "none".
std::string_view status_code(ValidationStatus status);
// Short recommendation: "retain", "review (strong paradox)", ...
std::string_view recommendation(ValidationStatus status);

ValidationStatus status_from(bool essential_validated, bool unnecessary_validated);

// n_E > N*p and pmf(n_E; N, p) <= lambda. Throws UndecidableError if N = 0.
bool validate_essential(const ItemTally& tally, const ExactProbability& p, const CutLevel& lambda);
// Same test on n_U.
bool validate_unnecessary(const ItemTally& tally, const ExactProbability& p, const CutLevel& lambda);

struct LegacyVerdicts {
    CvrValue cvr;
    std::optional<bool> lawshe_retain;    // only for panel sizes in the Lawshe table
    int wilson_n_critical = 0;
    bool wilson_retain = false;
    std::optional<int> ayre_n_critical;   // nullopt when unattainable
    bool ayre_retain = false;
};

struct ItemDecision {
    std::string item_id;
    ItemTally tally;
    Scale scale = Scale::three_option();
    CutLevel lambda = CutLevel::five_percent();
    ExactProbability p;
    ExactProbability prob_essential;
    ExactProbability prob_unnecessary;
    CriticalValue n_critical;
    bool essential_validated = false;
    bool unnecessary_validated = false;
    ValidationStatus status = ValidationStatus::NoData;
    std::optional<LegacyVerdicts> legacy; // absent when N = 0
};

struct ClassifierOptions {
    std::optional<int> min_floor; // as CriticalOptions::min_floor
    ExactProbability legacy_alpha = ExactProbability(1, 20);
    LawsheMinTable lawshe = LawsheMinTable::published();
};

// Probability path. Items with N = 0 get status NoData.
ItemDecision classify(const ItemTally& tally, const Scale& scale, const CutLevel& lambda,
                      const ClassifierOptions& options = {});

// Count path. Throws ConfigError if critical.N differs from the tally's N,
// UndecidableError if N = 0.
ValidationStatus classify_by_count(const ItemTally& tally, const CriticalValue& critical);

// Every item of the survey, ordered by item id.
std::vector<ItemDecision> classify_survey(const Survey& survey, const CutLevel& lambda,
                                          const ClassifierOptions& options = {});

} // namespace bcv
