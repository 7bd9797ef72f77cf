#!/usr/bin/env python3
"""Regenerates include/ncdkit/unicode_fold_table.hpp.

Emits (a) codepoints whose canonical decomposition is an ASCII base letter
followed only by combining marks, mapped to that base, and (b) the set of
combining-mark codepoints to strip, over the BMP ranges relevant to
Latin/Greek/Cyrillic text.
"""
import sys
import unicodedata

OUT = sys.argv[1] if len(sys.argv) > 1 else "include/ncdkit/unicode_fold_table.hpp"

folds = []
marks = []
for cp in range(0x80, 0x3000):
    ch = chr(cp)
    cat = unicodedata.category(ch)
    if cat == "Mn":
        marks.append(cp)
        continue
    d = unicodedata.normalize("NFD", ch)
    if len(d) >= 2 and ord(d[0]) < 0x80 and all(
        unicodedata.category(c) == "Mn" for c in d[1:]
    ):
        folds.append((cp, d[0]))

def ranges(points):
    out = []
    for p in points:
        if out and p == out[-1][1] + 1:
            out[-1] = (out[-1][0], p)
        else:
            out.append((p, p))
    return out

with open(OUT, "w") as f:
    f.write("#pragma once\n\n")
    f.write("// Generated by scripts/gen_unicode_fold.py. Do not edit.\n\n")
    f.write("#include <cstdint>\n\nnamespace ncdkit::unicode {\n\n")
    f.write("struct FoldEntry { std::uint32_t cp; char base; };\n\n")
    f.write("inline constexpr FoldEntry kFoldTable[] = {\n")
    for cp, base in folds:
        esc = base.replace("\\", "\\\\").replace("'", "\\'")
        f.write("    {0x%04X, '%s'},\n" % (cp, esc))
    f.write("};\n\n")
    f.write("struct MarkRange { std::uint32_t lo; std::uint32_t hi; };\n\n")
    f.write("inline constexpr MarkRange kCombiningMarks[] = {\n")
    for lo, hi in ranges(marks):
        f.write("    {0x%04X, 0x%04X},\n" % (lo, hi))
    f.write("};\n\n}  // namespace ncdkit::unicode\n")

print("wrote %s: %d folds, %d mark ranges" % (OUT, len(folds), len(ranges(marks))))
