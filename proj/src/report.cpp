#include "bcv/report.hpp"

#include "bcv/binomial.hpp"
#include "bcv/decimal.hpp"
#include "bcv/errors.hpp"
#include "bcv/legacy_cvr.hpp"
#include "bcv/reference_tables.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace bcv {

namespace {

std::string range_string(PanelRange r) {
    return std::to_string(r.first) + ":" + std::to_string(r.last);
}

std::string lambdas_string(const std::vector<CutLevel>& lambdas) {
    std::string s;
    for (const auto& l : lambdas) {
        if (!s.empty()) s += ',';
        s += l.str();
    }
    return s;
}

std::vector<CutLevel> lambdas_or(const RunConfig& config, std::vector<CutLevel> fallback) {
    return config.lambdas.empty() ? fallback : config.lambdas;
}

Cell optional_count(const std::optional<int>& v) {
    return v ? Cell::integer(*v) : Cell::null();
}

Cell critical_cell(const CriticalValue& cv) {
    return cv.attainable ? Cell::integer(cv.n_critical) : Cell::null();
}

std::string optional_count_text(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("unattainable");
}

// Reference n_critical for (N, lambda) from the bundled table, if printed.
std::optional<int> reference_cell(const std::optional<CriticalTable>& reference, int N, const CutLevel& lambda) {
    if (!reference) return std::nullopt;
    const auto col = std::find(reference->lambdas.begin(), reference->lambdas.end(), lambda);
    if (col == reference->lambdas.end()) return std::nullopt;
    for (const auto& row : reference->rows) {
        if (row.N == N) return row.cells[static_cast<std::size_t>(col - reference->lambdas.begin())].n_critical;
    }
    return std::nullopt;
}

CriticalTable restrict_rows(const CriticalTable& table, PanelRange range) {
    CriticalTable out{table.p, table.lambdas, {}};
    for (const auto& row : table.rows) {
        if (row.N >= range.first && row.N <= range.last) out.rows.push_back(row);
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render_csv(const ReportTable& table, std::ostream& out) {
    bool first = true;
    for (const auto& col : table.columns) {
        if (col.json_only) continue;
        out << (first ? "" : ",") << col.name;
        first = false;
    }
    out << '\n';
    for (const auto& row : table.rows) {
        first = true;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (table.columns[c].json_only) continue;
            out << (first ? "" : ",") << csv_escape(row[c].text);
            first = false;
        }
        out << '\n';
    }
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    switch (cell.kind) {
    case CellKind::Integer: return std::stoll(cell.text);
    case CellKind::Boolean: return cell.text == "true";
    case CellKind::Null: return nullptr;
    case CellKind::Decimal:
    case CellKind::Rational:
    case CellKind::Text: return cell.text;
    }
    return nullptr;
}

void render_json(const ReportTable& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    auto& params = doc["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.parameters) params[k] = v;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c].name] = json_cell(row[c]);
        rows.push_back(std::move(obj));
    }
    doc["notes"] = table.notes;
    out << doc.dump(2) << '\n';
}

std::string markdown_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

void render_markdown(const ReportTable& table, std::ostream& out) {
    out << "# bcv " << table.command << "\n\n";
    for (const auto& [k, v] : table.parameters) out << "- " << k << ": `" << v << "`\n";
    out << '\n';

    std::vector<std::size_t> shown;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (!table.columns[c].json_only) shown.push_back(c);
    }
    out << '|';
    for (auto c : shown) out << ' ' << table.columns[c].name << " |";
    out << "\n|";
    for (auto c : shown) {
        const auto k = table.rows.empty() ? CellKind::Text : table.rows.front()[c].kind;
        const bool numeric = k == CellKind::Integer || k == CellKind::Decimal;
        out << (numeric ? " ---: |" : " --- |");
    }
    out << '\n';
    for (const auto& row : table.rows) {
        out << '|';
        for (auto c : shown) {
            const auto& cell = row[c];
            out << ' ' << (cell.kind == CellKind::Null ? std::string("n/a") : markdown_escape(cell.text)) << " |";
        }
        out << '\n';
    }
    if (!table.notes.empty()) {
        out << "\nNotes:\n\n";
        for (const auto& n : table.notes) out << "- " << n << '\n';
    }
}

} // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "markdown" || text == "md") return OutputFormat::Markdown;
    throw DomainError("unknown output format '" + std::string(text) + "'");
}

void RunConfig::validate() const {
    if (range.first < 1 || range.last > kMaxPanelSize || range.first > range.last) {
        throw DomainError("panel range " + range_string(range) + " outside [1, " + std::to_string(kMaxPanelSize) + "]");
    }
    if (p_override && (p_override->is_zero() || p_override->is_one())) {
        throw DomainError("p must lie strictly in (0, 1)");
    }
    if (min_floor && *min_floor < 1) throw DomainError("minimum floor must be positive");
}

Cell Cell::decimal(const mpq_class& v) {
    return {CellKind::Decimal, format_significant(v, 6)};
}

Cell Cell::rational(const mpq_class& v) {
    return {CellKind::Rational, rational_string(v)};
}

ReportTable tables_report(const RunConfig& config) {
    config.validate();
    const auto lambdas = lambdas_or(config, {CutLevel::five_percent(), CutLevel::one_percent()});
    const auto p = config.p();
    const CriticalOptions options{config.min_floor};
    const auto table = generate_table(config.range, p, lambdas, options, config.threads);

    ReportTable report;
    report.command = "tables";
    report.parameters = {{"p", p.str()}, {"lambda", lambdas_string(lambdas)}, {"range", range_string(config.range)}};
    if (config.min_floor) report.parameters.emplace_back("min_floor", std::to_string(*config.min_floor));
    report.columns = {{"N"}, {"lambda"}, {"p"}, {"n_critical"}, {"attainable"}};

    std::optional<CriticalTable> reference;
    if (config.verify) {
        reference = reference::table_for(p);
        report.columns.push_back({"reference_n_critical"});
        report.columns.push_back({"matches_reference"});
    }

    for (const auto& row : table.rows) {
        for (const auto& cell : row.cells) {
            std::vector<Cell> out{Cell::integer(row.N), Cell::rational(cell.lambda.lambda().value()),
                                  Cell::rational(p.value()), critical_cell(cell), Cell::boolean(cell.attainable)};
            if (config.verify) {
                const auto ref = reference_cell(reference, row.N, cell.lambda);
                out.push_back(optional_count(ref));
                out.push_back(ref ? Cell::boolean(cell.attainable && cell.n_critical == *ref) : Cell::null());
            }
            report.rows.push_back(std::move(out));
        }
    }

    if (config.verify) {
        if (!reference) {
            report.notes.push_back("no bundled reference table for p = " + p.str());
        } else {
            const PanelRange overlap{std::max(config.range.first, reference->rows.front().N),
                                     std::min(config.range.last, reference->rows.back().N)};
            if (overlap.first <= overlap.last) {
                const auto generated = generate_table(overlap, p, reference->lambdas, options, config.threads);
                const auto mismatches = discrepancy_report(generated, restrict_rows(*reference, overlap));
                for (const auto& m : mismatches) {
                    report.notes.push_back("N=" + std::to_string(m.N) + " lambda=" + m.lambda.str() + ": generated "
                                           + optional_count_text(m.generated) + ", reference "
                                           + optional_count_text(m.reference));
                }
                report.notes.push_back(std::to_string(mismatches.size()) + " of "
                                       + std::to_string(2 * overlap.size()) + " reference cells differ");
            }
        }
    }
    return report;
}

ReportTable classify_report(const RunConfig& config, const Survey& survey) {
    const auto lambda = lambdas_or(config, {CutLevel::five_percent()});
    if (lambda.size() != 1) throw DomainError("classify takes exactly one cut level");
    ClassifierOptions options;
    options.min_floor = config.min_floor;
    options.legacy_alpha = config.legacy_alpha;
    const auto decisions = classify_survey(survey, lambda.front(), options);

    ReportTable report;
    report.command = "classify";
    report.parameters = {{"scale", std::string(survey.scale().name())},
                         {"p", survey.scale().p().str()},
                         {"lambda", lambda.front().str()},
                         {"legacy_alpha", config.legacy_alpha.str()}};
    if (config.min_floor) report.parameters.emplace_back("min_floor", std::to_string(*config.min_floor));
    report.columns = {{"item_id"},
                      {"n_E"},
                      {"n_I"},
                      {"n_U"},
                      {"n_NA"},
                      {"N"},
                      {"prob_E"},
                      {"prob_E_exact", true},
                      {"prob_U"},
                      {"prob_U_exact", true},
                      {"n_critical"},
                      {"essential_validated"},
                      {"unnecessary_validated"},
                      {"status"},
                      {"recommendation"},
                      {"cvr"},
                      {"cvr_exact", true},
                      {"lawshe_retain"},
                      {"wilson_n_critical"},
                      {"wilson_retain"},
                      {"ayre_n_critical"},
                      {"ayre_retain"}};

    for (const auto& d : decisions) {
        const auto& t = d.tally;
        std::vector<Cell> row{Cell::string(d.item_id),       Cell::integer(t.n_essential),
                              Cell::integer(t.n_important),  Cell::integer(t.n_unnecessary),
                              Cell::integer(t.n_not_answered), Cell::integer(t.panel_size())};
        if (d.status == ValidationStatus::NoData) {
            row.insert(row.end(), 5, Cell::null());
            row.push_back(Cell::boolean(false));
            row.push_back(Cell::boolean(false));
            row.push_back(Cell::string(std::string(status_code(d.status))));
            row.push_back(Cell::string(std::string(recommendation(d.status))));
            row.insert(row.end(), 7, Cell::null());
        } else {
            const auto& legacy = *d.legacy;
            row.push_back(Cell::decimal(d.prob_essential.value()));
            row.push_back(Cell::rational(d.prob_essential.value()));
            row.push_back(Cell::decimal(d.prob_unnecessary.value()));
            row.push_back(Cell::rational(d.prob_unnecessary.value()));
            row.push_back(critical_cell(d.n_critical));
            row.push_back(Cell::boolean(d.essential_validated));
            row.push_back(Cell::boolean(d.unnecessary_validated));
            row.push_back(Cell::string(std::string(status_code(d.status))));
            row.push_back(Cell::string(std::string(recommendation(d.status))));
            row.push_back(Cell::decimal(legacy.cvr.value));
            row.push_back(Cell::rational(legacy.cvr.value));
            row.push_back(legacy.lawshe_retain ? Cell::boolean(*legacy.lawshe_retain) : Cell::null());
            row.push_back(Cell::integer(legacy.wilson_n_critical));
            row.push_back(Cell::boolean(legacy.wilson_retain));
            row.push_back(optional_count(legacy.ayre_n_critical));
            row.push_back(Cell::boolean(legacy.ayre_retain));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

ReportTable compare_report(const RunConfig& config) {
    config.validate();
    ComparisonOptions options;
    options.legacy_alpha = config.legacy_alpha;
    options.bcv.min_floor = config.min_floor;
    const auto rows = comparison_table(config.range, options);

    ReportTable report;
    report.command = "compare";
    report.parameters = {{"range", range_string(config.range)}, {"legacy_alpha", config.legacy_alpha.str()}};
    if (config.min_floor) report.parameters.emplace_back("min_floor", std::to_string(*config.min_floor));
    report.columns = {{"N"},          {"bcv_p1/3_lambda1/20"}, {"bcv_p1/3_lambda1/100"}, {"bcv_p1/4_lambda1/20"},
                      {"bcv_p1/4_lambda1/100"}, {"wilson"},    {"ayre"}};
    if (config.verify) report.columns.push_back({"matches_reference"});

    const auto printed = reference::comparison_rows();
    std::size_t mismatched = 0;
    std::size_t compared = 0;
    for (const auto& r : rows) {
        std::vector<Cell> out{Cell::integer(r.N),
                              critical_cell(r.three_option_five),
                              critical_cell(r.three_option_one),
                              critical_cell(r.four_option_five),
                              critical_cell(r.four_option_one),
                              Cell::integer(r.wilson),
                              optional_count(r.ayre)};
        if (config.verify) {
            const auto ref = std::find_if(printed.begin(), printed.end(), [&](const auto& p) { return p.N == r.N; });
            if (ref == printed.end()) {
                out.push_back(Cell::null());
            } else {
                const auto value = [](const CriticalValue& cv) { return cv.attainable ? cv.n_critical : -1; };
                const int generated[] = {value(r.three_option_five), value(r.three_option_one),
                                         value(r.four_option_five),  value(r.four_option_one),
                                         r.wilson,                   r.ayre.value_or(-1)};
                const int expected[] = {ref->three_option_five, ref->three_option_one, ref->four_option_five,
                                        ref->four_option_one,   ref->wilson,           ref->ayre};
                static constexpr const char* names[] = {"bcv_p1/3_lambda1/20", "bcv_p1/3_lambda1/100",
                                                        "bcv_p1/4_lambda1/20", "bcv_p1/4_lambda1/100",
                                                        "wilson",              "ayre"};
                bool all = true;
                for (int i = 0; i < 6; ++i) {
                    ++compared;
                    if (generated[i] == expected[i]) continue;
                    all = false;
                    ++mismatched;
                    report.notes.push_back("N=" + std::to_string(r.N) + " " + names[i] + ": generated "
                                           + (generated[i] < 0 ? std::string("unattainable")
                                                               : std::to_string(generated[i]))
                                           + ", reference " + std::to_string(expected[i]));
                }
                out.push_back(Cell::boolean(all));
            }
        }
        report.rows.push_back(std::move(out));
    }
    if (config.verify && compared > 0) {
        report.notes.push_back(std::to_string(mismatched) + " of " + std::to_string(compared)
                               + " reference cells differ");
    }
    return report;
}

ReportTable distribution_report(const RunConfig& config) {
    config.validate();
    if (config.range.first != config.range.last) throw DomainError("distribution needs a single panel size");
    const BinomialParams params(config.range.first, config.p());

    ReportTable report;
    report.command = "distribution";
    report.parameters = {{"N", std::to_string(params.N)}, {"p", params.p.str()}};
    report.columns = {{"n"}, {"probability"}, {"probability_exact"}};
    for (const auto& point : pmf_series(params)) {
        report.rows.push_back({Cell::integer(point.n), Cell::decimal(point.probability.value()),
                               Cell::rational(point.probability.value())});
    }
    return report;
}

void render(const ReportTable& table, OutputFormat format, std::ostream& out) {
    switch (format) {
    case OutputFormat::Csv: render_csv(table, out); break;
    case OutputFormat::Json: render_json(table, out); break;
    case OutputFormat::Markdown: render_markdown(table, out); break;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        ReportTable report;
        switch (config.command) {
        case Command::Tables: report = tables_report(config); break;
        case Command::Compare: report = compare_report(config); break;
        case Command::Distribution: report = distribution_report(config); break;
        case Command::Classify: {
            std::ifstream in(config.input_path, std::ios::binary);
            if (!in) {
                err << "error: cannot open '" << config.input_path << "'\n";
                return kExitIo;
            }
            report = classify_report(config, parse_survey(in, config.scale));
            break;
        }
        }
        render(report, config.format, out);
        out.flush();
        if (!out) {
            err << "error: failed writing output\n";
            return kExitIo;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

} // namespace bcv
