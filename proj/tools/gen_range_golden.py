"""Regenerate the stability-range golden tables with exact rational arithmetic."""
import math
import sys
from fractions import Fraction
from pathlib import Path


def fl(num):
    return math.floor(Fraction(num, 3))


def theorem_a(gmax):
    rows = ["g,map1_iso,map2_epi,map2_iso"]
    for g in range(gmax + 1):
        rows.append(f"{g},{fl(2 * g)},{fl(2 * g + 1)},{fl(2 * g - 2)}")
    return "\n".join(rows) + "\n"


def theorem_b(gmax, kmax):
    rows = ["g,k,split,map1_epi,map1_iso,map2_epi,map2_iso"]
    for g in range(gmax + 1):
        for k in range(kmax + 1):
            for split in (0, 1):
                c = k if split else 3 * k
                rows.append(
                    f"{g},{k},{split},{fl(2 * g - c - 2)},{fl(2 * g - c - 5)},"
                    f"{fl(2 * g - c - 1)},{fl(2 * g - c - 4)}"
                )
    return "\n".join(rows) + "\n"


def stab(nmax, kmax):
    rows = ["n,kind,k,N,epi,iso"]
    for n in range(nmax + 1):
        rows.append(f"{n},constant,0,0,{fl(n)},{fl(n - 3)}")
        for kind in ("degree", "split"):
            for k in range(kmax + 1):
                if n <= 0:
                    rows.append(f"{n},{kind},{k},0,invalid,invalid")
                    continue
                c = k if kind == "split" else 3 * k
                rows.append(f"{n},{kind},{k},0,{fl(n - c - 2)},{fl(n - c - 5)}")
    return "\n".join(rows) + "\n"


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    (out / "theorem_A.csv").write_text(theorem_a(12))
    (out / "theorem_B.csv").write_text(theorem_b(12, 3))
    (out / "stab.csv").write_text(stab(24, 3))


if __name__ == "__main__":
    main()
