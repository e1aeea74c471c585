#include "bcv/survey.hpp"

#include "bcv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

namespace bcv {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

} // namespace

Scale Scale::parse(std::string_view text) {
    const auto t = upper(trim(text));
    if (t == "3" || t == "S3") return three_option();
    if (t == "4" || t == "S4") return four_option();
    throw DomainError("unknown scale '" + std::string(text) + "' (expected 3 or 4)");
}

std::optional<ResponseOption> parse_response_token(std::string_view token) {
    const auto t = upper(trim(token));
    if (t == "E" || t == "ESSENTIAL") return ResponseOption::Essential;
    if (t == "I" || t == "IMPORTANT") return ResponseOption::ImportantNotEssential;
    if (t == "U" || t == "UNNECESSARY") return ResponseOption::Unnecessary;
    if (t == "NA") return ResponseOption::NotAnswered;
    return std::nullopt;
}

std::string_view response_token(ResponseOption option) {
    switch (option) {
    case ResponseOption::Essential: return "E";
    case ResponseOption::ImportantNotEssential: return "I";
    case ResponseOption::Unnecessary: return "U";
    case ResponseOption::NotAnswered: return "NA";
    }
    return "?";
}

std::vector<std::string> Survey::items() const {
    std::vector<std::string> ids;
    ids.reserve(by_item_.size());
    for (const auto& [id, _] : by_item_) ids.push_back(id);
    return ids;
}

bool Survey::has_item(std::string_view item_id) const {
    return by_item_.find(item_id) != by_item_.end();
}

const std::vector<ResponseOption>& Survey::item_responses(std::string_view item_id) const {
    const auto it = by_item_.find(item_id);
    if (it == by_item_.end()) throw LookupError("unknown item '" + std::string(item_id) + "'");
    return it->second;
}

void Survey::declare_item(const std::string& item_id) {
    by_item_.try_emplace(item_id);
}

void Survey::add_response(const std::string& respondent_id, const std::string& item_id, ResponseOption option) {
    add_response_at(0, respondent_id, item_id, option);
}

void Survey::add_response_at(std::size_t line, const std::string& respondent_id, const std::string& item_id,
                             ResponseOption option) {
    if (option == ResponseOption::NotAnswered && !scale_.allows_not_answered()) {
        throw ScaleViolationError(line, "response NA is not allowed on scale " + std::string(scale_.name()));
    }
    if (!responses_.emplace(Key{respondent_id, item_id}, option).second) {
        throw DuplicateResponseError(line, "duplicate response from '" + respondent_id + "' for item '" + item_id + "'");
    }
    by_item_[item_id].push_back(option);
}

Survey parse_survey(std::istream& input, Scale scale) {
    Survey survey(scale);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (std::getline(input, line)) {
        ++line_no;
        std::string_view view(line);
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (trim(view).empty()) continue;

        if (!header_seen) {
            if (view != "respondent_id,item_id,response") {
                throw ParseError(line_no, "expected header 'respondent_id,item_id,response'");
            }
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(view);
        if (fields.size() != 3) {
            throw ParseError(line_no, "expected 3 fields, found " + std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty respondent or item id");
        const auto option = parse_response_token(fields[2]);
        if (!option) throw ParseError(line_no, "unknown response '" + std::string(fields[2]) + "'");

        survey.add_response_at(line_no, std::string(fields[0]), std::string(fields[1]), *option);
    }
    if (input.bad()) throw ParseError(line_no, "read failure");
    if (!header_seen) throw ParseError(0, "missing header 'respondent_id,item_id,response'");
    return survey;
}

void write_survey(std::ostream& out, const Survey& survey) {
    out << "respondent_id,item_id,response\n";
    for (const auto& [key, option] : survey.responses()) {
        out << key.first << ',' << key.second << ',' << response_token(option) << '\n';
    }
}

ItemTally tally(const Survey& survey, std::string_view item_id) {
    const auto& options = survey.item_responses(item_id);
    ItemTally t;
    t.item_id = std::string(item_id);
    for (const auto option : options) {
        switch (option) {
        case ResponseOption::Essential: ++t.n_essential; break;
        case ResponseOption::ImportantNotEssential: ++t.n_important; break;
        case ResponseOption::Unnecessary: ++t.n_unnecessary; break;
        case ResponseOption::NotAnswered: ++t.n_not_answered; break;
        }
    }
    return t;
}

} // namespace bcv
