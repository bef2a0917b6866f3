#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.cpp from the Python unicodedata module.

Run from the repository root:  python3 scripts/gen_unicode_tables.py
The output is committed; rerun only when bumping the Unicode version.
"""

import sys
import unicodedata

MAX_CP = 0x110000


def utf8_bytes(s: str) -> bytes:
    return s.encode("utf-8")


def main() -> None:
    nfkc = []  # (cp, replacement string)
    lower = []  # (cp, lowered cp), len-1 simple mappings only
    cf_points = []

    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        cat = unicodedata.category(ch)
        if cat == "Cf":
            cf_points.append(cp)
        norm = unicodedata.normalize("NFKC", ch)
        if norm != ch:
            nfkc.append((cp, norm))
        low = ch.lower()
        if low != ch and len(low) == 1:
            lower.append((cp, ord(low)))

    # Collapse Cf codepoints into inclusive ranges.
    cf_ranges = []
    for cp in cf_points:
        if cf_ranges and cf_ranges[-1][1] + 1 == cp:
            cf_ranges[-1][1] = cp
        else:
            cf_ranges.append([cp, cp])

    pool = bytearray()
    nfkc_entries = []
    for cp, repl in nfkc:
        raw = utf8_bytes(repl)
        nfkc_entries.append((cp, len(pool), len(raw)))
        pool.extend(raw)

    out = []
    w = out.append
    w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit."
      % unicodedata.unidata_version)
    w('#include "stegocanary/unicode_tables.hpp"')
    w("")
    w("namespace stegocanary::uni {")
    w("")
    w("// NFKC singleton expansions: cp -> UTF-8 replacement in kNfkcPool.")
    w("const NfkcEntry kNfkcMap[] = {")
    line = []
    for cp, off, ln in nfkc_entries:
        line.append("{0x%X,%d,%d}" % (cp, off, ln))
        if len(line) == 6:
            w("    " + ",".join(line) + ",")
            line = []
    if line:
        w("    " + ",".join(line) + ",")
    w("};")
    w("const std::size_t kNfkcMapSize = sizeof(kNfkcMap) / sizeof(kNfkcMap[0]);")
    w("")
    chunks = []
    for i in range(0, len(pool), 18):
        chunk = pool[i:i + 18]
        chunks.append('"' + "".join("\\x%02x" % b for b in chunk) + '"')
    w("const char kNfkcPool[] =")
    for c in chunks:
        w("    " + c)
    w(";")
    w("")
    w("// Inclusive codepoint ranges with general category Cf.")
    w("const CpRange kCfRanges[] = {")
    line = []
    for lo, hi in cf_ranges:
        line.append("{0x%X,0x%X}" % (lo, hi))
        if len(line) == 6:
            w("    " + ",".join(line) + ",")
            line = []
    if line:
        w("    " + ",".join(line) + ",")
    w("};")
    w("const std::size_t kCfRangesSize = sizeof(kCfRanges) / sizeof(kCfRanges[0]);")
    w("")
    w("// Simple (single-codepoint) lowercase mappings.")
    w("const LowerEntry kLowerMap[] = {")
    line = []
    for cp, lo in lower:
        line.append("{0x%X,0x%X}" % (cp, lo))
        if len(line) == 8:
            w("    " + ",".join(line) + ",")
            line = []
    if line:
        w("    " + ",".join(line) + ",")
    w("};")
    w("const std::size_t kLowerMapSize = sizeof(kLowerMap) / sizeof(kLowerMap[0]);")
    w("")
    w("}  // namespace stegocanary::uni")
    text = "\n".join(out) + "\n"
    with open("core/src/unicode_tables.cpp", "w", encoding="utf-8") as f:
        f.write(text)
    sys.stderr.write(
        "nfkc=%d lower=%d cf_ranges=%d pool=%dB\n"
        % (len(nfkc_entries), len(lower), len(cf_ranges), len(pool)))


if __name__ == "__main__":
    main()
