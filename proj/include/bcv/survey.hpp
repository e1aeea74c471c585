#pragma once
// Expert-panel responses in long format and per-item tallies.
//
// Input CSV (UTF-8, comma-delimited, no quoting):
//
//     respondent_id,item_id,response
//     r01,q1,E
//     r01,q2,unnecessary
//
// Response tokens are case-insensitive: E/ESSENTIAL, I/IMPORTANT,
// U/UNNECESSARY, NA. NA is accepted only under the four-option scale.

#include "bcv/exact_probability.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcv {

enum class ScaleVariant { S3, S4 };

class Scale {
public:
    static Scale three_option() { return Scale(ScaleVariant::S3); }
    static Scale four_option() { return Scale(ScaleVariant::S4); }
    // Accepts "3", "4", "S3", "S4" (any case). Throws DomainError otherwise.
    static Scale parse(std::string_view text);

    explicit Scale(ScaleVariant v) : variant_(v) {}

    ScaleVariant variant() const noexcept { return variant_; }
    int n_options() const noexcept { return variant_ == ScaleVariant::S3 ? 3 : 4; }
    // Chance of picking any one option at random: 1 / n_options.
    ExactProbability p() const { return ExactProbability(1, static_cast<unsigned long>(n_options())); }
    bool allows_not_answered() const noexcept { return variant_ == ScaleVariant::S4; }
    std::string_view name() const noexcept { return variant_ == ScaleVariant::S3 ? "S3" : "S4"; }

    friend bool operator==(const Scale&, const Scale&) = default;

private:
    ScaleVariant variant_;
};

enum class ResponseOption { Essential, ImportantNotEssential, Unnecessary, NotAnswered };

std::optional<ResponseOption> parse_response_token(std::string_view token);
// Canonical short token: E, I, U, NA.
std::string_view response_token(ResponseOption option);

struct ItemTally {
    std::string item_id;
    int n_essential = 0;
    int n_important = 0;
    int n_unnecessary = 0;
    int n_not_answered = 0;

    // Effective panel size; NotAnswered does not count.
    int panel_size() const noexcept { return n_essential + n_important + n_unnecessary; }

    friend bool operator==(const ItemTally&, const ItemTally&) = default;
};

class Survey {
public:
    explicit Survey(Scale scale) : scale_(scale) {}

    const Scale& scale() const noexcept { return scale_; }

    // Item ids in ascending order.
    std::vector<std::string> items() const;
    bool has_item(std::string_view item_id) const;

    // Registers an item with no responses yet. No-op if already known.
    void declare_item(const std::string& item_id);

    // Throws DuplicateResponseError / ScaleViolationError (line 0).
    void add_response(const std::string& respondent_id, const std::string& item_id, ResponseOption option);

    // Responses recorded for one item. Throws LookupError for an unknown item.
    const std::vector<ResponseOption>& item_responses(std::string_view item_id) const;

    using Key = std::pair<std::string, std::string>; // respondent, item
    const std::map<Key, ResponseOption>& responses() const noexcept { return responses_; }

private:
    friend Survey parse_survey(std::istream& input, Scale scale);
    void add_response_at(std::size_t line, const std::string& respondent_id, const std::string& item_id,
                         ResponseOption option);

    Scale scale_;
    std::map<Key, ResponseOption> responses_;
    std::map<std::string, std::vector<ResponseOption>, std::less<>> by_item_;
};

// Throws ParseError (with line number), DuplicateResponseError or
// ScaleViolationError.
Survey parse_survey(std::istream& input, Scale scale);

// Writes the long-format CSV that parse_survey reads, rows sorted by
// (respondent, item).
void write_survey(std::ostream& out, const Survey& survey);

// Throws LookupError for an unknown item.
ItemTally tally(const Survey& survey, std::string_view item_id);

} // namespace bcv
