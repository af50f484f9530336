#pragma once

namespace e8alg {

inline constexpr const char* kVersion = "1.0.0";

// Bump whenever the basis order, bracket transcription, or table layout
// changes; the on-disk table cache is keyed by this string.
inline constexpr const char* kGeneratorVersion = "e8alg-tables-1";

} // namespace e8alg
