#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace lineclip {

/// Shortest text that parses back to the same double.
inline std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

/// Fixed-point with `decimals` digits.
inline std::string format_fixed(double v, int decimals)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return {buf, res.ptr};
}

/// 0x-prefixed, 16 lowercase hex digits.
inline std::string format_hex64(std::uint64_t v)
{
    char buf[19] = "0x";
    static constexpr char digits[] = "0123456789abcdef";
    for (int i = 0; i < 16; ++i)
        buf[2 + i] = digits[(v >> (60 - 4 * i)) & 0xF];
    return {buf, 18};
}

inline std::optional<std::uint64_t> parse_hex64(std::string_view s)
{
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        s.remove_prefix(2);
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

/// Whole-string parse; rejects trailing junk, NaN and infinities.
inline std::optional<double> parse_finite_double(std::string_view s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !(v - v == 0.0))
        return std::nullopt;
    return v;
}

} // namespace lineclip
