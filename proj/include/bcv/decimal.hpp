#pragma once

#include <gmpxx.h>

#include <string>

namespace bcv {

// Decimal rendering of an exact rational to `digits` significant digits,
// rounding half to even. Trailing zeros are dropped. Magnitudes in
// [1e-6, 1e15) print in fixed notation ("0.0246633", "0.5", "1"), others in
// scientific ("3.72486e-478"). Zero prints as "0".
std::string format_significant(const mpq_class& value, int digits = 6);

} // namespace bcv
