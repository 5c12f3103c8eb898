"""Generate the vendored generator files under src/symdesign/data/.

Run from the repository root:  python tools/make_vendored_groups.py

Everything written here is recomputed and re-validated by the test suite
(group orders, transitivity, primitivity, and the designs developed from
the shipped base blocks), so the files are self-certifying.
"""

from __future__ import annotations

import hashlib
import pathlib
import sys
from itertools import product

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from symdesign.algebra import FieldTable, PrimePower
from symdesign.constructions import (
    DifferenceSetSpec,
    cyclic,
    develop_difference_set,
    pg_points,
)
from symdesign.design import is_flag_transitive, orbit_design
from symdesign.perm import Permutation, PermutationGroup

DATA = pathlib.Path(__file__).resolve().parent.parent / "src" / "symdesign" / "data"

SIGMA_GENERATORS = [
    "(1,2,4,5,3)(6,16,43,13,14)(7,39,33,45,26)(8,21,37,32,28)(9,11,25,35,10)"
    "(12,44,24,40,17)(15,30,38,23,19)(18,34,20,31,41)(22,36,27,42,29)",
    "(1,5,2,3,4)(6,10,16,9,43,11,13,25,14,35)(7,40,39,17,33,12,45,44,26,24)"
    "(8,23,21,19,37,15,32,30,28,38)(18,22,34,36,20,27,31,42,41,29)",
    "(2,5,3,4)(6,17,32,20,11,26,23,29)(7,30,42,43,12,21,34,35)"
    "(8,31,10,45,15,22,13,40)(9,39,19,27,14,44,28,18)(16,24,37,41,25,33,38,36)",
    "(2,3)(4,5)(6,32,11,23)(7,42,12,34)(8,10,15,13)(9,19,14,28)(16,37,25,38)"
    "(17,20,26,29)(18,39,27,44)(21,35,30,43)(22,40,31,45)(24,41,33,36)",
    "(1,6,11)(3,40,45)(4,41,36)(5,13,10)(8,35,39)(9,42,38)(14,37,34)"
    "(15,44,43)(17,32,29)(18,30,33)(20,23,26)(21,27,24)",
]


def write_group(filename: str, degree: int, gens: list[Permutation]) -> None:
    text = f"degree {degree}\n" + "".join(g.cycle_string() + "\n" for g in gens)
    (DATA / filename).write_text(text)
    print(f"wrote {filename}: degree {degree}, {len(gens)} generators")


def make_sigma45() -> None:
    gens = [Permutation.from_cycles(s, 45) for s in SIGMA_GENERATORS]
    G = PermutationGroup(gens, 45)
    assert G.order() == 3240, G.order()
    write_group("sigma45.grp", 45, gens)


def make_psl2_7() -> None:
    """GL(3,2) ~ PSL(2,7) acting on the 7 points of PG(2,2)."""
    F = FieldTable(PrimePower(2, 1))
    pts = pg_points(3, F)
    index = {v: i for i, v in enumerate(pts)}

    def mat_perm(m):
        images = []
        for v in pts:
            w = tuple(sum(v[i] * m[i][j] for i in range(3)) % 2 for j in range(3))
            images.append(index[w])
        return Permutation(images)

    a = mat_perm([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    b = mat_perm([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    G = PermutationGroup([a, b], 7)
    assert G.order() == 168, G.order()
    write_group("psl2_7.grp", 7, [a, b])


def make_psl2_11() -> None:
    """PSL(2,11) on 11 points, as the automorphism group of the biplane.

    The full automorphism group of the (11,5,2) design developed from
    {0,1,2,3,5} mod 11 has order 660; a backtracking search enumerates it
    and a deterministic greedy pass picks a small generating set.
    """
    D = develop_difference_set(DifferenceSetSpec(cyclic(11), (1, 3, 4, 5, 9)))
    blocks = [frozenset(b) for b in D.blocks]
    autos: list[Permutation] = []

    def compatible(mapping):
        for blk in blocks:
            img = {mapping[p] for p in blk if mapping[p] is not None}
            if img and not any(img <= b for b in blocks):
                return False
        return True

    def search(mapping, used, level):
        if level == 11:
            autos.append(Permutation(mapping))
            return
        for img in range(11):
            if img not in used:
                mapping[level] = img
                used.add(img)
                if compatible(mapping):
                    search(mapping, used, level + 1)
                mapping[level] = None
                used.discard(img)

    search([None] * 11, set(), 0)
    assert len(autos) == 660, len(autos)
    autos.sort(key=lambda g: g.images)
    gens: list[Permutation] = []
    for g in autos:
        if g.is_identity():
            continue
        if gens and PermutationGroup(gens, 11).order() == 660:
            break
        if not gens or not PermutationGroup(gens, 11).contains(g):
            gens.append(g)
    G = PermutationGroup(gens, 11)
    assert G.order() == 660, G.order()
    assert is_flag_transitive(G, D)
    write_group("psl2_11.grp", 11, gens)


def make_psu4_2() -> None:
    """PSU(4,2) ~ SU(4,2) on the 45 isotropic points of a Hermitian form.

    The form is h(x, y) = sum x_i * conj(y_i) on GF(4)^4 with conj(c) = c^2.
    SU(4,2) is generated by the unitary transvections
    x -> x + h(x, v) * v for isotropic v; scalars act trivially on
    projective points, and the center is trivial here, so the permutation
    group is PSU(4,2) of order 25920.
    """
    F = FieldTable(PrimePower(2, 2))

    def conj(c):
        return F.mul(c, c)

    def h(x, y):
        s = 0
        for xi, yi in zip(x, y):
            s = F.add(s, F.mul(xi, conj(yi)))
        return s

    pts = pg_points(4, F)
    iso = [v for v in pts if h(v, v) == 0]
    assert len(iso) == 45, len(iso)
    index = {v: i for i, v in enumerate(iso)}

    def normalize(v):
        lead = next(c for c in v if c != 0)
        li = F.inv(lead)
        return tuple(F.mul(li, c) for c in v)

    def transvection(v):
        images = []
        for x in iso:
            coef = h(x, v)
            img = tuple(F.add(xi, F.mul(coef, vi)) for xi, vi in zip(x, v))
            images.append(index[normalize(img)])
        return Permutation(images)

    gens: list[Permutation] = []
    order = 1
    for v in iso:
        t = transvection(v)
        if not PermutationGroup(gens or [t], 45).contains(t) or not gens:
            cand = gens + [t]
            new_order = PermutationGroup(cand, 45).order()
            if new_order > order:
                gens, order = cand, new_order
                if order == 25920:
                    break
    G = PermutationGroup(gens, 45)
    assert G.order() == 25920, G.order()
    assert G.is_transitive()
    primitive, _ = G.is_primitive()
    assert primitive

    base_block = frozenset(
        index[b] for b in iso if b != iso[0] and h(iso[0], b) == 0
    )
    assert len(base_block) == 12, len(base_block)
    D = orbit_design(G, base_block)
    params = D.verify_symmetric()
    assert (params.v, params.k, params.lam) == (45, 12, 3)
    assert is_flag_transitive(G, D)
    write_group("psu4_2.grp", 45, gens)
    (DATA / "unitary_45_12_3.block").write_text(
        ",".join(str(p + 1) for p in sorted(base_block)) + "\n"
    )
    print("unitary base block (1-based):", sorted(p + 1 for p in base_block))


def write_checksums() -> None:
    lines = []
    for path in sorted(DATA.iterdir()):
        if path.name == "SHA256SUMS":
            continue
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        lines.append(f"{digest}  {path.name}\n")
    (DATA / "SHA256SUMS").write_text("".join(lines))
    print("wrote SHA256SUMS")


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    make_sigma45()
    make_psl2_7()
    make_psl2_11()
    make_psu4_2()
    write_checksums()
