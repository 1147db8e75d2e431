#!/usr/bin/env python3
"""Smoke test for the repgrowth_py extension module.

Builds nothing itself: run `cargo build -p repgrowth-py` (add --release for
speed) first. The script locates the compiled cdylib under target/, copies it
next to itself under the importable name, and exercises the main surface.
"""

import math
import shutil
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent


def locate_extension():
    candidates = [
        ROOT / "target" / "release" / "librepgrowth_py.so",
        ROOT / "target" / "debug" / "librepgrowth_py.so",
        ROOT / "target" / "release" / "librepgrowth_py.dylib",
        ROOT / "target" / "debug" / "librepgrowth_py.dylib",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("no compiled extension found; run `cargo build -p repgrowth-py` first")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    target = HERE / "repgrowth_py.so"
    if not target.exists() or target.stat().st_mtime < newest.stat().st_mtime:
        shutil.copy2(newest, target)
    return target


locate_extension()
sys.path.insert(0, str(HERE))

import repgrowth_py as rg  # noqa: E402

checks = 0


def check(name, condition):
    global checks
    if not condition:
        sys.exit(f"FAIL {name}")
    checks += 1
    print(f"ok {name}")


# --- SU(2): measures and the Clebsch-Gordan square -------------------------
a1 = rg.RootSystem("A1")
check("A1 rank", a1.rank == 1)
report = a1.growth_report([1])
check("SU(2) measures |χ₁| = 4, |χ₁²| = 10", report.measure == 4 and report.measure_sq == 10)
check("SU(2) exponent ≈ log10/log4", abs(report.exponent - math.log(10) / math.log(4)) < 1e-12)
square = dict((tuple(w), m) for w, m in a1.tensor([3], [3]))
check("χ₃² = χ₀+χ₂+χ₄+χ₆", square == {(0,): 1, (2,): 1, (4,): 1, (6,): 1})
m, msq = rg.su2_closed_form(3)
check("closed form matches the pipeline", m == 16 and msq == sum((2 * i + 1) ** 2 for i in range(4)))

# --- SU(3): the adjoint and the kδ family ----------------------------------
a2 = rg.RootSystem("A2")
check("SU(3) adjoint dimension", a2.dimension([1, 1]) == 8)
adj_sq = a2.tensor([1, 1], [1, 1])
total = sum(mult * int(a2.dimension(list(w))) for w, mult in adj_sq)
check("8⊗8 dimension conservation", total == 64)
dim, expected, fam = rg.weyl_delta_family(3, 4)
check("SU(3) kδ dimension (k+1)³", dim == expected == 125)

# --- G2 and strict growth ---------------------------------------------------
g2 = rg.RootSystem("G2")
check("G2 fundamental dims 7 and 14", g2.dimension([1, 0]) == 7 and g2.dimension([0, 1]) == 14)
check("G2 strict tensor growth", g2.strict_growth_check([1, 0], [1, 0]))

# --- finite groups: PSL₂(5) ≅ A₅ and the extraspecial dichotomy ------------
a5 = rg.CharacterTable.psl2(5)
check("PSL₂(5) degrees", sorted(int(d) for d in a5.degrees()) == [1, 3, 3, 4, 5])
st = [i for i, d in enumerate(a5.degrees()) if d == 5][0]
st_sq = a5.decompose_product([{st: 1}, {st: 1}])
check("St² contains every irreducible of A₅", len(st_sq) == a5.num_classes)
deg3 = [i for i, d in enumerate(a5.degrees()) if d == 3][0]
n = a5.covering_number({deg3: 1}, 8)
check("A₅ covering number of a degree-3 character ≤ 6", n is not None and n <= 6)

es = rg.CharacterTable.extraspecial(3, 1)
big = [i for i, d in enumerate(es.degrees()) if d == 3][0]
sq = es.decompose_product([{big: 1}, {big: 1}])
cube = es.decompose_product([{big: 1}, {big: 1}, {big: 1}])
check(
    "extraspecial dichotomy |χ²| = |χ³| = 9",
    es.plancherel_measure(sq) == 9 and es.plancherel_measure(cube) == 9,
)
check("χ² a single character (3∤2), χ³ all-linear (3|3)", len(sq) == 1 and len(cube) == 9)
check("extraspecial never covers", es.covering_number({big: 1}, 6) is None)

# --- JSON round trip ---------------------------------------------------------
text = a5.to_json()
again = rg.CharacterTable.from_json(text)
check("table JSON round trip is bit-exact", again.to_json() == text)

print(f"\nsmoke test passed ({checks} checks)")
