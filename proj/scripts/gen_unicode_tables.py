#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.cpp from the unicodedata module.

Emits three tables:
  - inclusive codepoint ranges with general category L* (letters)
  - inclusive codepoint ranges with general category Lu (uppercase letters)
  - simple one-to-one lowercase mappings (multi-codepoint expansions are
    dropped; those codepoints map to themselves)

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

OUT = "core/src/unicode_tables.cpp"


def ranges(predicate):
    out = []
    start = None
    for cp in range(0x110000):
        if predicate(cp):
            if start is None:
                start = cp
        else:
            if start is not None:
                out.append((start, cp - 1))
                start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def is_letter(cp):
    return unicodedata.category(chr(cp)).startswith("L")


def is_upper(cp):
    return unicodedata.category(chr(cp)) == "Lu"


def lower_pairs():
    pairs = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
    return pairs


def emit(f, name, rows, fmt):
    f.write(f"const std::array<{fmt}, {len(rows)}> {name} = {{{{\n")
    for i in range(0, len(rows), 6):
        chunk = rows[i : i + 6]
        f.write("    " + " ".join("{0x%X, 0x%X}," % r for r in chunk) + "\n")
    f.write("}};\n\n")


def main():
    letters = ranges(is_letter)
    uppers = ranges(is_upper)
    lowers = lower_pairs()
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("// Generated by scripts/gen_unicode_tables.py from Python's\n")
        f.write(f"// unicodedata (Unicode {unicodedata.unidata_version}). Do not edit by hand.\n\n")
        f.write('#include "unicode_tables.h"\n\n')
        f.write("#include <array>\n\nnamespace alvis::uni {\n\nnamespace {\n\n")
        emit(f, "kLetterRanges", letters, "CpRange")
        emit(f, "kUpperRanges", uppers, "CpRange")
        emit(f, "kLowerMap", lowers, "CpPair")
        f.write(
            """template <typename Table>
bool in_ranges(const Table& table, char32_t cp) {
  std::size_t lo = 0, hi = table.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cp < table[mid].first) {
      hi = mid;
    } else if (cp > table[mid].second) {
      lo = mid + 1;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }

bool is_upper_letter(char32_t cp) { return in_ranges(kUpperRanges, cp); }

char32_t to_lower(char32_t cp) {
  std::size_t lo = 0, hi = kLowerMap.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cp < kLowerMap[mid].first) {
      hi = mid;
    } else if (cp > kLowerMap[mid].first) {
      lo = mid + 1;
    } else {
      return kLowerMap[mid].second;
    }
  }
  return cp;
}

}  // namespace alvis::uni
"""
        )
    print(f"wrote {OUT}: {len(letters)} letter ranges, {len(uppers)} upper ranges, {len(lowers)} lower pairs", file=sys.stderr)


if __name__ == "__main__":
    main()
