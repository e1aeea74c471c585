#pragma once
// Published critical-value tables bundled for self-checks. Values are stored
// exactly as printed, including the cells that disagree with the stated rule;
// use discrepancy_report() to surface them.

#include "bcv/critical_values.hpp"

#include <optional>
#include <span>

namespace bcv::reference {

struct PrintedRow {
    int N;
    int at_five_percent;
    int at_one_percent;
};

// Columns: N | BCV p=1/3 at 1/20, 1/100 | BCV p=1/4 at 1/20, 1/100 | Wilson | Ayre & Scally.
struct ComparisonReferenceRow {
    int N;
    int three_option_five;
    int three_option_one;
    int four_option_five;
    int four_option_one;
    int wilson;
    int ayre;
};

// N = 5..100.
std::span<const PrintedRow> three_option_rows();
std::span<const PrintedRow> four_option_rows();

// N = 5..40.
std::span<const ComparisonReferenceRow> comparison_rows();

// As CriticalTables with cut levels {1/20, 1/100}.
CriticalTable three_option_table();
CriticalTable four_option_table();

// The bundled table for p = 1/3 or 1/4, nullopt otherwise.
std::optional<CriticalTable> table_for(const ExactProbability& p);

} // namespace bcv::reference
