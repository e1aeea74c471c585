// bcv: critical respondent counts and item classification for expert-panel
// content validation.
//
//   bcv tables --scale 3 --range 5:100 --format csv [--verify]
//   bcv classify --input panel.csv --scale 3 --lambda 1/20
//   bcv compare --range 5:40 [--alpha 0.01]
//   bcv distribution --range 20 --scale 3

#include "bcv/errors.hpp"
#include "bcv/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Flags {
    std::string scale = "3";
    std::vector<std::string> lambdas;
    std::string range;
    std::string input;
    std::string format = "csv";
    std::string out;
    std::optional<int> min_floor;
    std::string p;
    std::string alpha = "1/20";
    bool verify = false;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--format", f.format, "Output format: csv, json or markdown")->capture_default_str();
    cmd->add_option("--out", f.out, "Write output to FILE instead of stdout");
}

void add_scale(CLI::App* cmd, Flags& f) {
    cmd->add_option("--scale", f.scale, "Response scale: 3 (S3) or 4 (S4, with NA)")->capture_default_str();
}

void add_floor(CLI::App* cmd, Flags& f) {
    cmd->add_option("--min-floor", f.min_floor, "Force n_critical to be at least this count");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binomial cut-level validity for expert-panel content validation"};
    app.require_subcommand(1);
    Flags f;

    auto* tables = app.add_subcommand("tables", "Critical respondent counts per panel size");
    add_scale(tables, f);
    tables->add_option("--lambda", f.lambdas, "Cut level(s), e.g. 1/20 or 0.01 (default: 1/20 and 1/100)");
    tables->add_option("--range", f.range, "Panel sizes as A:B or N (default 5:100)");
    tables->add_option("--p", f.p, "Override the chance probability (default 1/n_options)");
    tables->add_flag("--verify", f.verify, "Compare against the bundled published tables");
    tables->add_option("--threads", f.threads, "Worker threads (0 = hardware concurrency)");
    add_floor(tables, f);
    add_common(tables, f);

    auto* classify = app.add_subcommand("classify", "Classify survey items from a long-format CSV");
    add_scale(classify, f);
    classify->add_option("--input", f.input, "respondent_id,item_id,response CSV")->required();
    classify->add_option("--lambda", f.lambdas, "Cut level (default 1/20)");
    classify->add_option("--alpha", f.alpha, "Significance for the Wilson and Ayre columns")->capture_default_str();
    add_floor(classify, f);
    add_common(classify, f);

    auto* compare = app.add_subcommand("compare", "BCV against Wilson and Ayre & Scally counts");
    compare->add_option("--range", f.range, "Panel sizes as A:B or N (default 5:40)");
    compare->add_option("--alpha", f.alpha, "Significance for the Wilson and Ayre columns")->capture_default_str();
    compare->add_flag("--verify", f.verify, "Compare against the bundled published table");
    add_floor(compare, f);
    add_common(compare, f);

    auto* distribution = app.add_subcommand("distribution", "Exact point probabilities for n = 0..N");
    add_scale(distribution, f);
    distribution->add_option("--range", f.range, "Panel size N")->required();
    distribution->add_option("--p", f.p, "Override the chance probability (default 1/n_options)");
    add_common(distribution, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bcv::kExitUsage;
    }

    bcv::RunConfig config;
    try {
        if (tables->parsed()) config.command = bcv::Command::Tables;
        if (classify->parsed()) config.command = bcv::Command::Classify;
        if (compare->parsed()) config.command = bcv::Command::Compare;
        if (distribution->parsed()) config.command = bcv::Command::Distribution;

        config.scale = bcv::Scale::parse(f.scale);
        for (const auto& l : f.lambdas) config.lambdas.push_back(bcv::CutLevel::parse(l));
        if (!f.range.empty()) {
            config.range = bcv::PanelRange::parse(f.range);
        } else if (config.command == bcv::Command::Compare) {
            config.range = {5, 40};
        }
        config.input_path = f.input;
        config.format = bcv::parse_format(f.format);
        config.min_floor = f.min_floor;
        if (!f.p.empty()) config.p_override = bcv::ExactProbability::parse(f.p);
        config.legacy_alpha = bcv::ExactProbability::parse(f.alpha);
        config.verify = f.verify;
        config.threads = f.threads;
        config.validate();
    } catch (const bcv::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return bcv::kExitUsage;
    }

    if (f.out.empty()) return bcv::run(config, std::cout, std::cerr);

    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write '" << f.out << "'\n";
        return bcv::kExitIo;
    }
    return bcv::run(config, file, std::cerr);
}
