#!/usr/bin/env python3
"""Regenerate include/streamtag/detail/unicode_tables.inc.

Emits three tables derived from the Python unicodedata database:
  - codepoint ranges whose general category is P* (punctuation)
  - codepoint ranges with the White_Space property (via str.isspace())
  - simple one-to-one lowercase mappings (cp -> lower(cp))

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        else:
            if start is not None:
                out.append((start, cp - 1))
                start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def is_punct(cp):
    return unicodedata.category(chr(cp)).startswith("P")


def is_space(cp):
    return chr(cp).isspace()


def lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            pairs.append((cp, ord(lo)))
    return pairs


def main():
    punct = ranges(is_punct)
    space = ranges(is_space)
    lower = lower_pairs()

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("// clang-format off\n")

    w("static constexpr cp_range kPunctRanges[] = {\n")
    for a, b in punct:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n\n")

    w("static constexpr cp_range kSpaceRanges[] = {\n")
    for a, b in space:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n\n")

    w("static constexpr cp_pair kLowerMap[] = {\n")
    for a, b in lower:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n")
    w("// clang-format on\n")


if __name__ == "__main__":
    main()
