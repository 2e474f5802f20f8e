#pragma once

#include <string>

namespace cquant {

/// Shortest decimal that round-trips to the same double ('.' separator,
/// locale independent).
std::string format_real(double value);

}  // namespace cquant
