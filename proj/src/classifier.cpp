#include "bcv/classifier.hpp"

#include "bcv/binomial.hpp"
#include "bcv/errors.hpp"

namespace bcv {

namespace {

// count > N * p, exactly.
bool above_mean(int count, int N, const ExactProbability& p) {
    return cmp(mpq_class(count), N * p.value()) > 0;
}

bool validate_count(int count, int N, const ExactProbability& p, const CutLevel& lambda) {
    if (N == 0) throw UndecidableError("item has no substantive responses");
    if (!above_mean(count, N, p)) return false;
    return pmf(count, BinomialParams(N, p)) <= lambda.lambda();
}

} // namespace

std::string_view status_code(ValidationStatus status) {
    switch (status) {
    case ValidationStatus::A_Retain: return "A";
    case ValidationStatus::B_StrongParadox: return "B";
    case ValidationStatus::C_WeakParadox: return "C";
    case ValidationStatus::D_Discard: return "D";
    case ValidationStatus::NoData: return "none";
    }
    return "?";
}

std::string_view recommendation(ValidationStatus status) {
    switch (status) {
    case ValidationStatus::A_Retain: return "retain";
    case ValidationStatus::B_StrongParadox: return "review: strong paradox (essential and unnecessary)";
    case ValidationStatus::C_WeakParadox: return "review: weak paradox (neither essential nor unnecessary)";
    case ValidationStatus::D_Discard: return "discard";
    case ValidationStatus::NoData: return "no data";
    }
    return "?";
}

ValidationStatus status_from(bool essential_validated, bool unnecessary_validated) {
    if (essential_validated) {
        return unnecessary_validated ? ValidationStatus::B_StrongParadox : ValidationStatus::A_Retain;
    }
    return unnecessary_validated ? ValidationStatus::D_Discard : ValidationStatus::C_WeakParadox;
}

bool validate_essential(const ItemTally& tally, const ExactProbability& p, const CutLevel& lambda) {
    return validate_count(tally.n_essential, tally.panel_size(), p, lambda);
}

bool validate_unnecessary(const ItemTally& tally, const ExactProbability& p, const CutLevel& lambda) {
    return validate_count(tally.n_unnecessary, tally.panel_size(), p, lambda);
}

ItemDecision classify(const ItemTally& tally, const Scale& scale, const CutLevel& lambda,
                      const ClassifierOptions& options) {
    if (tally.n_not_answered > 0 && !scale.allows_not_answered()) {
        throw ConfigError("item '" + tally.item_id + "' has NA responses on scale " + std::string(scale.name()));
    }
    ItemDecision d;
    d.item_id = tally.item_id;
    d.tally = tally;
    d.scale = scale;
    d.lambda = lambda;
    d.p = scale.p();

    const int N = tally.panel_size();
    if (N == 0) {
        d.n_critical = {0, d.p, lambda, 0, false};
        d.status = ValidationStatus::NoData;
        return d;
    }

    const BinomialParams params(N, d.p);
    d.prob_essential = pmf(tally.n_essential, params);
    d.prob_unnecessary = pmf(tally.n_unnecessary, params);
    d.n_critical = bcv_n_critical(N, d.p, lambda, CriticalOptions{options.min_floor});

    const auto passes_floor = [&](int count) { return !options.min_floor || count >= *options.min_floor; };
    d.essential_validated = above_mean(tally.n_essential, N, d.p) && d.prob_essential <= lambda.lambda()
                            && passes_floor(tally.n_essential);
    d.unnecessary_validated = above_mean(tally.n_unnecessary, N, d.p) && d.prob_unnecessary <= lambda.lambda()
                              && passes_floor(tally.n_unnecessary);
    d.status = status_from(d.essential_validated, d.unnecessary_validated);

    LegacyVerdicts legacy;
    legacy.cvr = cvr(tally.n_essential, N);
    if (options.lawshe.covers(N)) legacy.lawshe_retain = lawshe_retain(legacy.cvr.value, N, options.lawshe);
    legacy.wilson_n_critical = wilson_n_critical(N, options.legacy_alpha);
    legacy.wilson_retain = tally.n_essential >= legacy.wilson_n_critical;
    legacy.ayre_n_critical = ayre_n_critical(N, options.legacy_alpha);
    legacy.ayre_retain = legacy.ayre_n_critical && tally.n_essential >= *legacy.ayre_n_critical;
    d.legacy = std::move(legacy);
    return d;
}

ValidationStatus classify_by_count(const ItemTally& tally, const CriticalValue& critical) {
    const int N = tally.panel_size();
    if (N == 0) throw UndecidableError("item has no substantive responses");
    if (critical.N != N) {
        throw ConfigError("critical value computed for N = " + std::to_string(critical.N) + ", item has N = "
                          + std::to_string(N));
    }
    const auto validated = [&](int count) {
        return critical.attainable && count >= critical.n_critical && above_mean(count, N, critical.p);
    };
    return status_from(validated(tally.n_essential), validated(tally.n_unnecessary));
}

std::vector<ItemDecision> classify_survey(const Survey& survey, const CutLevel& lambda,
                                          const ClassifierOptions& options) {
    std::vector<ItemDecision> out;
    for (const auto& id : survey.items()) out.push_back(classify(tally(survey, id), survey.scale(), lambda, options));
    return out;
}

} // namespace bcv
