"""Named design constructions: projective spaces, difference-set
developments, and a small catalog of designs with known automorphism groups.

The catalog groups (PSL2(7) on 7 points, PSL2(11) on 11 points, PSU4(2) on
45 points, and a degree-45 group of order 3240) are shipped as generator
files under data/ and validated by the test suite: group order,
transitivity/primitivity, and the designs they act on are all recomputed
from the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import combinations, product

from .algebra import FieldTable, PrimePower
from .design import IncidenceStructure, orbit_design
from .perm import PermutationGroup, parse_generators


# --- projective spaces -----------------------------------------------------


def pg_points(n: int, F: FieldTable) -> list[tuple[int, ...]]:
    """Normalized representatives of the 1-spaces of GF(q)^n.

    Each point is the vector in its line whose first nonzero coordinate is
    1, listed in lexicographic order of the coordinate tuples.
    """
    pts = []
    for vec in product(F.elements(), repeat=n):
        lead = next((c for c in vec if c != 0), None)
        if lead == 1:
            pts.append(vec)
    return pts


def projective_space(n: int, q) -> IncidenceStructure:
    """Points vs hyperplanes of projective (n-1)-space over GF(q).

    Parameters come out as ((q^n-1)/(q-1), (q^{n-1}-1)/(q-1),
    (q^{n-2}-1)/(q-1)).
    """
    if n < 3:
        raise ValueError("projective_space needs n >= 3")
    if isinstance(q, int):
        q = PrimePower.of(q)
    F = FieldTable(q)
    pts = pg_points(n, F)
    index = {v: i for i, v in enumerate(pts)}

    def dot(a, b):
        s = 0
        for x, y in zip(a, b):
            s = F.add(s, F.mul(x, y))
        return s

    blocks = []
    for a in pts:  # hyperplanes are indexed by normalized coefficient vectors
        blocks.append([index[x] for x in pts if dot(a, x) == 0])
    return IncidenceStructure(len(pts), blocks)


def pg_params(n: int, q: int) -> tuple[int, int, int]:
    return (
        (q**n - 1) // (q - 1),
        (q ** (n - 1) - 1) // (q - 1),
        (q ** (n - 2) - 1) // (q - 1),
    )


# --- finite groups for difference sets -------------------------------------


class AmbientGroup:
    """A small group given by an element list and a multiplication rule.

    Elements are hashable labels; elements[0] is the identity.  The element
    order is fixed so developments get reproducible point labels.
    """

    def __init__(self, name, elements, op, inv):
        self.name = name
        self.elements = list(elements)
        self.op = op
        self.inv = inv
        self.index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)


def cyclic(n: int) -> AmbientGroup:
    return AmbientGroup(
        f"Z{n}", range(n), lambda a, b: (a + b) % n, lambda a: (-a) % n
    )


def elementary_abelian(p: int, a: int) -> AmbientGroup:
    elems = list(product(range(p), repeat=a))
    return AmbientGroup(
        f"Z{p}^{a}",
        elems,
        lambda x, y: tuple((u + w) % p for u, w in zip(x, y)),
        lambda x: tuple((-u) % p for u in x),
    )


def cyclic_product(*orders: int) -> AmbientGroup:
    elems = list(product(*(range(n) for n in orders)))
    return AmbientGroup(
        "x".join(f"Z{n}" for n in orders),
        elems,
        lambda x, y: tuple((u + w) % n for u, w, n in zip(x, y, orders)),
        lambda x: tuple((-u) % n for u, n in zip(x, orders)),
    )


# Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k encoded as
# (unit, sign) with unit in "1ijk" and sign +-1.
_Q8_UNITS = "1ijk"
_Q8_MUL = {
    ("1", "1"): ("1", 1), ("1", "i"): ("i", 1), ("1", "j"): ("j", 1), ("1", "k"): ("k", 1),
    ("i", "1"): ("i", 1), ("i", "i"): ("1", -1), ("i", "j"): ("k", 1), ("i", "k"): ("j", -1),
    ("j", "1"): ("j", 1), ("j", "i"): ("k", -1), ("j", "j"): ("1", -1), ("j", "k"): ("i", 1),
    ("k", "1"): ("k", 1), ("k", "i"): ("j", 1), ("k", "j"): ("i", -1), ("k", "k"): ("1", -1),
}


def quaternion8_x_z2() -> AmbientGroup:
    elems = [(u, s, t) for u in _Q8_UNITS for s in (1, -1) for t in (0, 1)]
    elems.sort(key=lambda e: (e != ("1", 1, 0),))  # identity first, order stable

    def op(x, y):
        unit, sign = _Q8_MUL[(x[0], y[0])]
        return (unit, sign * x[1] * y[1], (x[2] + y[2]) % 2)

    def inv(x):
        # search is fine at order 16
        return next(y for y in elems if op(x, y) == ("1", 1, 0))

    return AmbientGroup("Q8xZ2", elems, op, inv)


_AMBIENTS = {
    "cyclic11": lambda: cyclic(11),
    "cyclic7": lambda: cyclic(7),
    "ea16": lambda: elementary_abelian(2, 4),
    "z2z8": lambda: cyclic_product(2, 8),
    "q8z2": quaternion8_x_z2,
}


@dataclass(frozen=True)
class DifferenceSetSpec:
    ambient: AmbientGroup
    base_set: tuple

    def lam(self) -> int:
        """Verify the difference property and return lambda."""
        n, k = len(self.ambient), len(self.base_set)
        if len(set(self.base_set)) != k:
            raise ValueError("repeated base-set element")
        if (k * (k - 1)) % (n - 1) != 0:
            raise ValueError("k(k-1) not divisible by |G|-1")
        lam = k * (k - 1) // (n - 1)
        counts: dict = {}
        for d1 in self.base_set:
            for d2 in self.base_set:
                if d1 != d2:
                    diff = self.ambient.op(d1, self.ambient.inv(d2))
                    counts[diff] = counts.get(diff, 0) + 1
        for e in self.ambient.elements[1:]:
            if counts.get(e, 0) != lam:
                raise ValueError(
                    f"element {e} occurs {counts.get(e, 0)} times as a"
                    f" difference, expected {lam}"
                )
        return lam


def develop_difference_set(spec: DifferenceSetSpec) -> IncidenceStructure:
    """Design whose blocks are all translates base_set * g."""
    spec.lam()
    amb = spec.ambient
    blocks = []
    for g in amb.elements:
        blocks.append([amb.index[amb.op(d, g)] for d in spec.base_set])
    return IncidenceStructure(len(amb), blocks)


def find_difference_set(ambient: AmbientGroup, k: int, lam: int):
    """Lexicographically first (k, lam) difference set containing identity.

    Exhaustive over k-subsets; intended for |ambient| <= 64.  Returns None
    when no difference set exists.
    """
    if len(ambient) > 64:
        raise ValueError("ambient group too large for exhaustive search")
    n = len(ambient)
    if k * (k - 1) != lam * (n - 1):
        return None
    identity = ambient.elements[0]
    for rest in combinations(range(1, n), k - 1):
        cand = (identity,) + tuple(ambient.elements[i] for i in rest)
        spec = DifferenceSetSpec(ambient, cand)
        try:
            spec.lam()
        except ValueError:
            continue
        return spec
    return None


# --- vendored catalog -------------------------------------------------------


@dataclass(frozen=True)
class NamedInstance:
    name: str
    design: IncidenceStructure
    group: PermutationGroup | None
    expected_params: tuple[int, int, int]
    flag_transitive: bool | None
    point_primitive: bool | None
    note: str = ""


def _data_text(filename: str) -> str:
    return resources.files("symdesign.data").joinpath(filename).read_text()


def load_group(filename: str) -> PermutationGroup:
    """Load a generator file shipped under symdesign/data."""
    lines = _data_text(filename).splitlines()
    header = lines[0].split()
    if len(header) != 2 or header[0] != "degree":
        raise ValueError(f"{filename}: expected 'degree N' header")
    return parse_generators("\n".join(lines[1:]), int(header[1]))


def _block_from_file(filename: str) -> frozenset[int]:
    return frozenset(int(s) - 1 for s in _data_text(filename).split(","))


CATALOG_NAMES = (
    "fano_complement",
    "paley_11_5_2",
    "paley_complement_11_6_3",
    "unitary_45_12_3",
    "imprimitive_45_12_3",
    "biplane16_ea",
    "biplane16_z2z8",
    "biplane16_q8z2",
)


def catalog(name: str) -> NamedInstance:
    if name == "fano_complement":
        return NamedInstance(
            name,
            projective_space(3, 2).complement(),
            load_group("psl2_7.grp"),
            (7, 4, 2),
            True,
            True,
            "complement of the Fano plane, acted on by PSL(2,7) ~ PSL(3,2)",
        )
    if name == "paley_11_5_2":
        # quadratic residues mod 11 form the Paley difference set
        spec = DifferenceSetSpec(cyclic(11), (1, 3, 4, 5, 9))
        return NamedInstance(
            name,
            develop_difference_set(spec),
            load_group("psl2_11.grp"),
            (11, 5, 2),
            True,
            True,
            "development of the quadratic-residue difference set mod 11",
        )
    if name == "paley_complement_11_6_3":
        base = catalog("paley_11_5_2")
        return NamedInstance(
            name, base.design.complement(), base.group, (11, 6, 3), True, True,
            "complement of the (11,5,2) biplane",
        )
    if name == "unitary_45_12_3":
        group = load_group("psu4_2.grp")
        block = _block_from_file("unitary_45_12_3.block")
        return NamedInstance(
            name,
            orbit_design(group, block),
            group,
            (45, 12, 3),
            True,
            True,
            "perp-neighborhood design of the 45 isotropic points of a"
            " Hermitian form on GF(4)^4, group PSU(4,2)",
        )
    if name == "imprimitive_45_12_3":
        group = load_group("sigma45.grp")
        block = frozenset(x - 1 for x in (1, 2, 3, 4, 6, 11, 19, 28, 36, 40, 41, 45))
        return NamedInstance(
            name,
            orbit_design(group, block),
            group,
            (45, 12, 3),
            True,
            False,
            "point-imprimitive design developed from a 12-point base block"
            " under a degree-45 group of order 3240",
        )
    if name in ("biplane16_ea", "biplane16_z2z8", "biplane16_q8z2"):
        ambient = {
            "biplane16_ea": "ea16",
            "biplane16_z2z8": "z2z8",
            "biplane16_q8z2": "q8z2",
        }[name]
        spec = find_difference_set(_AMBIENTS[ambient](), 6, 2)
        if spec is None:  # pragma: no cover - all three groups admit one
            raise AssertionError(f"no (16,6,2) difference set in {ambient}")
        return NamedInstance(
            name, develop_difference_set(spec), None, (16, 6, 2), None, None,
            f"development of a (16,6,2) difference set in {spec.ambient.name}",
        )
    raise KeyError(f"unknown catalog name {name!r}; choose from {CATALOG_NAMES}")
