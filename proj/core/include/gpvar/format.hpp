#pragma once

#include <charconv>
#include <string>

namespace gpvar {

/// Locale-independent, 17 significant digits.
inline std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

} // namespace gpvar
