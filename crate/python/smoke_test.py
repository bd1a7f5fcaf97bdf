#!/usr/bin/env python3
"""Smoke test for the frame48_py extension module.

Builds nothing itself: it locates the compiled cdylib under target/
(release preferred), copies it into a temporary directory under the
importable module name, and exercises the main surfaces. Build first with

    cargo build -p frame48-python            # or --release
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    for profile in ("release", "debug"):
        cand = ROOT / "target" / profile / "libframe48_py.so"
        if cand.exists():
            return cand
    sys.exit("libframe48_py.so not found; run `cargo build -p frame48-python` first")


def main() -> None:
    tmp = tempfile.mkdtemp(prefix="frame48_py_")
    shutil.copy(locate_cdylib(), Path(tmp) / "frame48_py.so")
    sys.path.insert(0, tmp)
    import frame48_py as f48

    # Code pair facts.
    d = f48.Code.moonshine_d()
    c = f48.Code.moonshine_c()
    assert d.dim == 7 and c.dim == 41 and d.length == 48
    assert d.is_self_orthogonal()
    assert c.generated_by_weight4()
    wd = d.weight_distribution()
    assert wd[0] == 1 and wd[16] == 3 and wd[24] == 120 and wd[32] == 3 and wd[48] == 1
    wc = c.weight_distribution()
    assert wc[1] == wc[2] == wc[3] == 0 and wc[4] == 3300
    assert sum(wc) == 2**41

    h8 = f48.Code.hamming8()
    assert h8.dual().basis() == h8.basis()
    assert f48.Code.reed_muller(1, 3).basis() == h8.basis()

    # Module labels: fusion is an elementary abelian group law.
    mods = f48.MoonshineModules()
    assert mods.census() == 16384
    vacuum = mods.label("0" * 48, "0" * 48)
    ones = "1" * 48
    lab = mods.label(ones, "1" + "0" * 47)
    assert mods.fuse(lab, lab) == vacuum
    assert mods.fuse(lab, vacuum) == lab
    assert Fraction(*mods.lowest_weight(lab)) == 3
    assert Fraction(*mods.lowest_weight(vacuum)) == 0
    ch = dict(mods.character(lab, 3))
    assert ch["2"] == 2**17  # multiplicity of the fully twisted sector

    # J-function through q^3, both modular routes agreeing internally.
    j = dict(f48.j_coefficients(3))
    assert j[-1] == 1 and j[0] == 0 and j[1] == 196884 and j[2] == 21493760

    # Ising characters.
    ch0 = dict(f48.ising_character("0", 4))
    assert ch0["-1/48"] == 1
    ch16 = dict(f48.ising_character("1/16", 4))
    assert ch16["1/24"] == 1

    # Hamming weight-2 algebra.
    assert f48.hamming_frames_ok()
    assert f48.s_vector_count() == 16

    # The additive assignment search is provably empty, with certificate.
    result = f48.search_assignments(max_order=0, budget_secs=120)
    assert result["complete"] and result["total_found"] == 0
    assert len(result["certificate"]) >= 3
    parities = sum(p for (_, _, p) in result["certificate"]) % 2
    assert parities == 1

    print("frame48_py smoke test: all assertions passed")


if __name__ == "__main__":
    main()
