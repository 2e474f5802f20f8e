#include "cquant/format.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace cquant {

std::string format_real(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return {buf.data(), end};
}

}  // namespace cquant
