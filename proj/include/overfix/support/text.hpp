#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace overfix {

/// 64-bit FNV-1a, rendered as 16 hex digits. Used as the content checksum of
/// source files and as a stable component of problem identifiers.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1aHex(std::string_view data);

std::vector<std::string> splitLines(std::string_view text);
std::string readFile(const std::string& path);
std::string trim(std::string_view s);
bool startsWith(std::string_view s, std::string_view prefix);
std::size_t countNonBlankLines(std::string_view text);

}  // namespace overfix
