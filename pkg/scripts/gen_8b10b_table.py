#!/usr/bin/env python3
"""Generate and validate the 8b10b code-group table shipped with the package.

The table is built from the classic 5b/6b and 3b/4b sub-block tables with
running-disparity threading, then cross-checked structurally (ones count,
disparity closure, decode uniqueness, run lengths, comma placement) before
being written to src/physec/data/code_groups_8b10b.txt.

Run from the repo root:  python3 scripts/gen_8b10b_table.py [--check]
"""

import argparse
import sys
from pathlib import Path

# 5b/6b sub-table, abcdei bit order (a = MSB), column = RD at group start.
# Index is the low 5 bits of the octet (EDCBA).
TABLE_5B6B_NEG = [
    0b100111, 0b011101, 0b101101, 0b110001, 0b110101, 0b101001, 0b011001,
    0b111000, 0b111001, 0b100101, 0b010101, 0b110100, 0b001101, 0b101100,
    0b011100, 0b010111, 0b011011, 0b100011, 0b010011, 0b110010, 0b001011,
    0b101010, 0b011010, 0b111010, 0b110011, 0b100110, 0b010110, 0b110110,
    0b001110, 0b101110, 0b011110, 0b101011,
]

# K28 is the only control 6b code that differs from its data counterpart.
K28_6B_NEG = 0b001111

# 3b/4b sub-table, fghj bit order (f = MSB), column = RD entering the
# 4b sub-block.  Index is the high 3 bits of the octet (HGF).
TABLE_3B4B_NEG = [0b1011, 0b1001, 0b0101, 0b1100, 0b1101, 0b1010, 0b0110, 0b1110]
ALT7_NEG = 0b0111  # alternate x.7 code, replaces the primary to bound runs

# x values where the alternate x.7 must be used, per entering-RD sign
ALT7_WHEN_NEG = {17, 18, 20}
ALT7_WHEN_POS = {11, 13, 14}

CONTROL_OCTETS = (0x1C, 0x3C, 0x5C, 0x7C, 0x9C, 0xBC, 0xDC, 0xF7, 0xFB, 0xFC, 0xFD, 0xFE)

COMMA_POS = 0b0011111
COMMA_NEG = 0b1100000

RD_NEG, RD_POS = 0, 1


def _ones(v, nbits):
    return bin(v & ((1 << nbits) - 1)).count("1")


def _complement(v, nbits):
    return ~v & ((1 << nbits) - 1)


def _sub6(x, rd, is_control):
    if is_control and x == 28:
        code = K28_6B_NEG
    else:
        code = TABLE_5B6B_NEG[x]
    if rd == RD_POS:
        # balanced codes are identical in both columns except the 111000/000111
        # pair, which always sits on the matching side
        if _ones(code, 6) != 3 or code in (0b111000, 0b000111):
            code = _complement(code, 6)
    return code


def _rd_after6(code, rd):
    n = _ones(code, 6)
    if n > 3:
        return RD_POS
    if n < 3:
        return RD_NEG
    if code == 0b000111:
        return RD_POS
    if code == 0b111000:
        return RD_NEG
    return rd


def _sub4(x, y, rd4, is_control):
    use_alt7 = False
    if y == 7:
        if is_control:
            use_alt7 = True
        elif rd4 == RD_NEG and x in ALT7_WHEN_NEG:
            use_alt7 = True
        elif rd4 == RD_POS and x in ALT7_WHEN_POS:
            use_alt7 = True
    code = ALT7_NEG if use_alt7 else TABLE_3B4B_NEG[y]
    flip = is_control or _ones(code, 4) != 2 or code in (0b1100, 0b0011)
    if rd4 == RD_POS and flip:
        code = _complement(code, 4)
    return code


def _rd_after4(code, rd):
    n = _ones(code, 4)
    if n > 2:
        return RD_POS
    if n < 2:
        return RD_NEG
    if code == 0b0011:
        return RD_POS
    if code == 0b1100:
        return RD_NEG
    return rd


def encode_group(octet, is_control, rd):
    """Return (10-bit group, rd_out) for one symbol at the given start RD."""
    x = octet & 0x1F
    y = octet >> 5
    c6 = _sub6(x, rd, is_control)
    rd4 = _rd_after6(c6, rd)
    c4 = _sub4(x, y, rd4, is_control)
    return (c6 << 4) | c4, _rd_after4(c4, rd4)


def symbol_name(octet, is_control):
    return "%s%d.%d" % ("K" if is_control else "D", octet & 0x1F, octet >> 5)


def all_symbols():
    for octet in range(256):
        yield octet, False
    for octet in CONTROL_OCTETS:
        yield octet, True


def build_rows():
    rows = []
    for octet, is_control in all_symbols():
        neg, rd_out_neg = encode_group(octet, is_control, RD_NEG)
        pos, rd_out_pos = encode_group(octet, is_control, RD_POS)
        rows.append((symbol_name(octet, is_control), octet, is_control,
                     neg, pos, rd_out_neg, rd_out_pos))
    return rows


def validate(rows):
    errors = []
    by_pattern = {}
    for name, octet, is_control, neg, pos, rd_on, rd_op in rows:
        for col, grp, rd_out in ((RD_NEG, neg, rd_on), (RD_POS, pos, rd_op)):
            n = _ones(grp, 10)
            if n not in (4, 5, 6):
                errors.append("%s col %d: %d ones" % (name, col, n))
            # disparity closure: unbalanced groups flip RD, balanced keep it
            expect = col if n == 5 else (RD_POS if n == 6 else RD_NEG)
            if rd_out != expect:
                errors.append("%s col %d: rd_out %d vs popcount %d" % (name, col, rd_out, n))
            key = by_pattern.setdefault(grp, (octet, is_control))
            if key != (octet, is_control):
                errors.append("pattern %010b decodes ambiguously" % grp)
        if rd_on == RD_POS and rd_op == RD_NEG or rd_on == RD_NEG and rd_op == RD_POS:
            pass  # consistent flip
        elif rd_on != RD_NEG or rd_op != RD_POS:
            errors.append("%s: inconsistent flip/keep behaviour" % name)

    # run-length and comma checks over every legal two-group concatenation,
    # K28.7 excluded as the line never carries it
    usable = [r for r in rows if not (r[2] and r[1] == 0xFC)]
    for _, o1, c1, *_ in usable:
        for rd in (RD_NEG, RD_POS):
            g1, rdm = encode_group(o1, c1, rd)
            for _, o2, c2, *_ in usable:
                g2, _ = encode_group(o2, c2, rdm)
                bits20 = (g1 << 10) | g2
                s = format(bits20, "020b")
                run = max(len(seg) for seg in s.replace("1", " ").split() + ["0"]) if "0" in s else 0
                run = max(run, max(len(seg) for seg in s.replace("0", " ").split() + [""]))
                if run > 5:
                    errors.append("run %d in %s + %s" % (run, symbol_name(o1, c1), symbol_name(o2, c2)))
                for off in range(14):
                    window = (bits20 >> (13 - off)) & 0x7F
                    if window in (COMMA_POS, COMMA_NEG) and off not in (0, 10):
                        errors.append("comma spans offset %d in %s|%s rd%d"
                                      % (off, symbol_name(o1, c1), symbol_name(o2, c2), rd))
    return errors


def format_table(rows):
    lines = [
        "# 8b10b code groups: name, octet (decimal), RD- group, RD+ group, octet hex",
        "# bit order abcdei fghj, a transmitted first",
    ]
    for name, octet, is_control, neg, pos, _, _ in rows:
        lines.append("%-6s %3d %010b %010b 0x%02X" % (name, octet, neg, pos, octet))
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--check", action="store_true",
                        help="verify the checked-in file instead of rewriting it")
    args = parser.parse_args()

    rows = build_rows()
    errors = validate(rows)
    if errors:
        for e in errors[:40]:
            print("ERROR:", e, file=sys.stderr)
        print("%d validation errors" % len(errors), file=sys.stderr)
        return 1

    out = Path(__file__).resolve().parent.parent / "src" / "physec" / "data" / "code_groups_8b10b.txt"
    text = format_table(rows)
    if args.check:
        if out.read_text() != text:
            print("checked-in table differs from generator output", file=sys.stderr)
            return 1
        print("table OK (%d symbols)" % len(rows))
        return 0
    out.write_text(text)
    print("wrote %s (%d symbols)" % (out, len(rows)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
