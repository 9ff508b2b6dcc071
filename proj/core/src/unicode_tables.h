#pragma once

#include <cstddef>
#include <utility>

// Character classification backed by tables generated from the Unicode
// character database (see scripts/gen_unicode_tables.py).

namespace alvis::uni {

using CpRange = std::pair<char32_t, char32_t>;  // inclusive
using CpPair = std::pair<char32_t, char32_t>;

// General category L* (Lu, Ll, Lt, Lm, Lo).
bool is_letter(char32_t cp);

// General category Lu.
bool is_upper_letter(char32_t cp);

// Simple one-to-one lowercase mapping; identity when none exists.
char32_t to_lower(char32_t cp);

}  // namespace alvis::uni
