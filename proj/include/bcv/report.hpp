#pragma once
// Command orchestration and rendering for the bcv command-line tool.
//
// Every command builds a ReportTable; the renderers turn the same table into
// CSV, JSON or Markdown so all three carry identical values.

#include "bcv/classifier.hpp"
#include "bcv/critical_values.hpp"
#include "bcv/survey.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitDomain = 4;
inline constexpr int kExitIo = 5;

enum class Command { Tables, Classify, Compare, Distribution };
enum class OutputFormat { Csv, Json, Markdown };

// Throws DomainError for anything other than csv, json, markdown (or md).
OutputFormat parse_format(std::string_view text);

struct RunConfig {
    Command command = Command::Tables;
    Scale scale = Scale::three_option();
    std::vector<CutLevel> lambdas; // empty: command default
    PanelRange range{5, 100};
    std::string input_path;
    OutputFormat format = OutputFormat::Csv;
    std::optional<int> min_floor;
    std::optional<ExactProbability> p_override; // replaces the scale's 1/n_options
    ExactProbability legacy_alpha = ExactProbability(1, 20);
    bool verify = false;
    unsigned threads = 0;

    ExactProbability p() const { return p_override ? *p_override : scale.p(); }
    // Throws DomainError when ranges or cut levels are out of bounds.
    void validate() const;
};

enum class CellKind { Integer, Decimal, Rational, Text, Boolean, Null };

struct Cell {
    CellKind kind = CellKind::Null;
    std::string text;

    static Cell integer(long long v) { return {CellKind::Integer, std::to_string(v)}; }
    static Cell decimal(const mpq_class& v);
    static Cell rational(const mpq_class& v);
    static Cell string(std::string v) { return {CellKind::Text, std::move(v)}; }
    static Cell boolean(bool v) { return {CellKind::Boolean, v ? "true" : "false"}; }
    static Cell null() { return {}; }
};

struct Column {
    std::string name;
    bool json_only = false; // exact sidecars that only the lossless format carries
};

struct ReportTable {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> notes;
};

ReportTable tables_report(const RunConfig& config);
ReportTable classify_report(const RunConfig& config, const Survey& survey);
ReportTable compare_report(const RunConfig& config);
ReportTable distribution_report(const RunConfig& config);

void render(const ReportTable& table, OutputFormat format, std::ostream& out);

// Runs one command end to end. Errors go to `err`; the return value is the
// process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace bcv
