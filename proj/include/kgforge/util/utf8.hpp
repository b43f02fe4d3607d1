#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kgforge::utf8 {

/// Appends the UTF-8 encoding of `cp` to `out`. Invalid codepoints
/// (surrogates, > U+10FFFF) return false and append nothing.
bool append(std::uint32_t cp, std::string& out);

/// Decodes the codepoint starting at `pos`, advancing `pos` past it.
/// Returns nullopt on malformed input (pos then advances by one byte).
std::optional<std::uint32_t> next(std::string_view s, std::size_t& pos);

/// True iff the whole string is well-formed UTF-8.
bool valid(std::string_view s);

}  // namespace kgforge::utf8
