#pragma once

#include <string>

namespace netrank {

/// Digits used for every number a report or CSV output carries.
inline constexpr int kReportDigits = 15;

/// printf-style %.{digits}g.
std::string format_significant(double v, int digits = kReportDigits);

/// The double nearest to format_significant(v, digits). Idempotent.
double round_significant(double v, int digits = kReportDigits);

}  // namespace netrank
