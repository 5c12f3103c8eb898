"""Arithmetic elimination machinery.

Exact order formulas for the classical simple groups, the flag-transitivity
divisibility/primality constraints on (v, k, lambda), exact-inequality
predicates used as property checks, and a catalog of (v, k-divisor-bound)
rows that a divisor scan shows admit no prime lambda.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .algebra import Factorization, PrimePower, divisors, factorize, is_prime

FAMILIES = ("PSL", "PSU", "PSp", "OmegaOdd", "POmegaPlus", "POmegaMinus")


@dataclass(frozen=True)
class GroupFamilySpec:
    """A classical simple group X: family, ambient dimension n, and q."""

    family: str
    n: int
    q: PrimePower

    def __post_init__(self) -> None:
        f, n, q = self.family, self.n, self.q.q
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        if f == "PSL" and (n < 2 or (n, q) in ((2, 2), (2, 3))):
            raise ValueError("PSL_n(q) needs n >= 2 and (n,q) != (2,2),(2,3)")
        if f == "PSU" and (n < 3 or (n, q) == (3, 2)):
            raise ValueError("PSU_n(q) needs n >= 3 and (n,q) != (3,2)")
        if f == "PSp" and (n < 4 or n % 2 or (n, q) == (4, 2)):
            raise ValueError("PSp_n(q) needs even n >= 4 and (n,q) != (4,2)")
        if f == "OmegaOdd" and (n < 7 or n % 2 == 0 or q % 2 == 0):
            raise ValueError("Omega_n(q) needs odd n >= 7 and odd q")
        if f in ("POmegaPlus", "POmegaMinus") and (n < 8 or n % 2):
            raise ValueError("POmega needs even n >= 8")

    def __str__(self) -> str:
        sym = {
            "PSL": "PSL", "PSU": "PSU", "PSp": "PSp",
            "OmegaOdd": "Omega", "POmegaPlus": "POmega+", "POmegaMinus": "POmega-",
        }[self.family]
        return f"{sym}{self.n}({self.q.q})"


def simple_order(spec: GroupFamilySpec) -> int:
    """Exact order of the simple group."""
    n, q = spec.n, spec.q.q
    if spec.family == "PSL":
        o = q ** (n * (n - 1) // 2)
        for j in range(2, n + 1):
            o *= q**j - 1
        return o // math.gcd(n, q - 1)
    if spec.family == "PSU":
        o = q ** (n * (n - 1) // 2)
        for j in range(2, n + 1):
            o *= q**j - (-1) ** j
        return o // math.gcd(n, q + 1)
    m = n // 2
    if spec.family == "PSp":
        o = q ** (m * m)
        for j in range(1, m + 1):
            o *= q ** (2 * j) - 1
        return o // math.gcd(2, q - 1)
    if spec.family == "OmegaOdd":
        o = q ** (m * m)
        for j in range(1, m + 1):
            o *= q ** (2 * j) - 1
        return o // math.gcd(2, q - 1)
    sign = 1 if spec.family == "POmegaPlus" else -1
    o = q ** (m * (m - 1)) * (q**m - sign)
    for j in range(1, m):
        o *= q ** (2 * j) - 1
    return o // math.gcd(4, q**m - sign)


def out_order(spec: GroupFamilySpec) -> int:
    """Exact |Out(X)| for the linear, unitary, symplectic and odd-dimensional
    orthogonal families; for the even-dimensional orthogonal families only a
    divisibility bound is safe (see out_order_bound)."""
    n, q, a = spec.n, spec.q.q, spec.q.a
    if spec.family == "PSL":
        if n == 2:
            return a * math.gcd(2, q - 1)
        return 2 * a * math.gcd(n, q - 1)
    if spec.family == "PSU":
        return 2 * a * math.gcd(n, q + 1)
    if spec.family == "PSp":
        # graph automorphism only for Sp4 in characteristic 2
        extra = 2 if (n == 4 and q % 2 == 0) else 1
        return extra * a * math.gcd(2, q - 1)
    if spec.family == "OmegaOdd":
        return 2 * a
    raise ValueError(
        f"exact |Out| not modeled for {spec.family}; use out_order_bound"
    )


def out_order_bound(spec: GroupFamilySpec) -> int:
    """An integer that |Out(X)| divides, for every family."""
    a = spec.q.a
    if spec.family == "POmegaPlus":
        return 24 * a if spec.n == 8 else 8 * a
    if spec.family == "POmegaMinus":
        return 8 * a
    return out_order(spec)


@dataclass(frozen=True)
class AdmissiblePair:
    k: int
    lam: int


def admissible(v, k_bound, required_lambda=None, check_tits_p=None):
    """All k dividing k_bound that survive the flag-transitivity arithmetic.

    Constraints: 2 < k < v-1; (v-1) | k(k-1); lambda = k(k-1)/(v-1) prime;
    lambda*v < k^2; lambda equals required_lambda when given.  Returns
    (pairs, tits_ok) where tits_ok reports gcd(check_tits_p, v-1) == 1
    (None when no prime was given).
    """
    if v < 4:
        raise ValueError("admissible needs v >= 4")
    f = k_bound if isinstance(k_bound, Factorization) else factorize(k_bound)
    pairs = []
    hi = min(f.value, v - 2)
    for k in divisors(f, 3, hi):
        if k * (k - 1) % (v - 1):
            continue
        lam = k * (k - 1) // (v - 1)
        if required_lambda is not None and lam != required_lambda:
            continue
        if lam * v >= k * k:
            continue
        if not is_prime(lam):
            continue
        pairs.append(AdmissiblePair(k, lam))
    tits_ok = None
    if check_tits_p is not None:
        tits_ok = math.gcd(check_tits_p, v - 1) == 1
    return pairs, tits_ok


# --- inequality lemmas, evaluated exactly -----------------------------------


def _prod(q: int, lo: int, hi: int, sign_alt: bool = False) -> int:
    out = 1
    for j in range(lo, hi + 1):
        out *= q**j - ((-1) ** j if sign_alt else 1)
    return out


def check_bounds(kind: str, **params) -> bool:
    """Exact evaluation of the bound lemmas; True when the bounds hold."""
    if kind == "psl_order":
        n, q = params["n"], params["q"]
        if n < 2:
            raise ValueError("psl_order needs n >= 2")
        spec = GroupFamilySpec("PSL", n, PrimePower.of(q))
        psl = simple_order(spec)
        sl = psl * math.gcd(n, q - 1)
        upper = Fraction(q**2 - 1, q**2) * q ** (n * n - 1)
        # equality holds at n = 2, where |SL2(q)| = q(q^2 - 1)
        return q ** (n * n - 2) < psl <= sl <= upper
    if kind == "psu_order":
        n, q = params["n"], params["q"]
        if n < 3:
            raise ValueError("psu_order needs n >= 3")
        spec = GroupFamilySpec("PSU", n, PrimePower.of(q))
        psu = simple_order(spec)
        su = psu * math.gcd(n, q + 1)
        lower = Fraction(q - 1, q) * q ** (n * n - 2)
        upper = Fraction(q**2 - 1, q**2) * Fraction(q**3 + 1, q**3) * q ** (n * n - 1)
        # equality holds at n = 3, where |SU3(q)| = q^3 (q^2 - 1)(q^3 + 1)
        return lower < psu <= su <= upper
    if kind == "psp_order":
        n, q = params["n"], params["q"]
        if n < 4 or n % 2:
            raise ValueError("psp_order needs even n >= 4")
        spec = GroupFamilySpec("PSp", n, PrimePower.of(q))
        psp = simple_order(spec)
        sp = psp * math.gcd(2, q - 1)
        beta = math.gcd(2, q - 1)
        e = n * (n + 1) // 2
        lower = Fraction(q**e, 2 * beta)
        upper = Fraction(q**2 - 1, q**2) * Fraction(q**4 - 1, q**4) * q**e
        return lower < psp <= sp <= upper
    if kind == "omega_order":
        n, q = params["n"], params["q"]
        if n < 4:
            raise ValueError("omega_order needs n >= 4")
        if n % 2 == 0 or q % 2 == 0:
            raise ValueError("only odd-dimensional Omega over odd q is modeled")
        spec = GroupFamilySpec("OmegaOdd", n, PrimePower.of(q))
        omega = simple_order(spec)  # = Omega_n(q): trivial center in odd dim
        so = 2 * omega
        e = n * (n - 1) // 2
        lower = Fraction(q**e, 4)
        upper = Fraction(q**2 - 1, q**2) * Fraction(q**4 - 1, q**4) * q**e
        return lower < omega < so <= upper
    if kind == "pomega_order":
        n, q, eps = params["n"], params["q"], params["eps"]
        if n < 6:
            raise ValueError("pomega_order needs n >= 6")
        fam = "POmegaPlus" if eps == 1 else "POmegaMinus"
        spec = GroupFamilySpec(fam, max(n, 8), PrimePower.of(q))
        if n != spec.n:  # n == 6 exists but is excluded by the spec guard
            raise ValueError("pomega_order modeled for n >= 8 only")
        pomega = simple_order(spec)
        m = n // 2
        # q odd: |SO| = gcd(4, q^m - eps) * |POmega|; q even: SO = O ) Omega
        # with index 2 and POmega = Omega, so |SO| = 2 |POmega|
        so = pomega * (math.gcd(4, q**m - eps) if q % 2 else 2)
        delta = math.gcd(2, q)
        e = n * (n - 1) // 2
        lower = Fraction(q**e, 8)
        upper = (
            delta
            * Fraction(q**2 - 1, q**2)
            * Fraction(q**4 - 1, q**4)
            * Fraction(q**m + 1, q**m)
            * q**e
        )
        return lower < pomega < so <= upper
    if kind == "factorial5":
        t = params["t"]
        if t < 5:
            raise ValueError("factorial5 needs t >= 5")
        return math.factorial(t) ** 3 < 5 ** (t * t - 3 * t + 1)
    if kind == "factorial2":
        t = params["t"]
        if t < 4:
            raise ValueError("factorial2 needs t >= 4")
        return math.factorial(t) ** 3 < 2 ** (4 * t * (t - 3))
    if kind == "product":
        n, q = params["n"], params["q"]
        if n < 3:
            raise ValueError("product needs n >= 3")
        plain = _prod(q, 2, n)
        alt = _prod(q, 2, n, sign_alt=True)
        return q ** (n * (n - 1) // 2) < plain < alt < q ** ((n * n + n - 2) // 2)
    if kind == "large":
        return params["x_order"] < params["out_order"] ** 2 * params["h0_order"] ** 3
    raise ValueError(f"unknown bound kind {kind!r}")


# --- polynomial division identities -----------------------------------------


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _g_poly(n: int) -> dict:
    return _poly_add(
        {2 * n - 1: 1, n + 2: 1, n + 1: -1, n: -1, n - 1: -1},
        {5: 1, 4: -1, 3: -1, 1: 1, 0: 1},
    )


_H_R_TABLE = {
    # t: (h as exponent->coeff with `n+c` exponents given via offset, r)
    3: ({"n_off": 2, 5: 2, 4: -1, 3: -1, 2: -1}, {5: 3, 4: -2, 3: -2, 2: -1, 1: 1, 0: 1}),
    4: ({"n_off": 3, 7: 1, 6: 1, 5: -1, 4: -1, 3: -1}, {7: 1, 6: 1, 4: -2, 3: -2, 1: 1, 0: 1}),
    5: ({"n_off": 4, 9: 1, 7: 1, 6: -1, 5: -1, 4: -1}, {9: 1, 7: 1, 6: -1, 4: -2, 3: -1, 1: 1, 0: 1}),
    6: ({"n_off": 5, 11: 1, 8: 1, 7: -1, 6: -1, 5: -1}, {11: 1, 8: 1, 7: -1, 6: -1, 4: -1, 3: -1, 1: 1, 0: 1}),
}


def check_division_identity(n: int, t: int) -> bool:
    """g_n(q) == h_j(q)*(q^j - 1) + r_j(q) with j = n - t, coefficientwise."""
    if t not in _H_R_TABLE:
        raise ValueError("t must be in 3..6")
    j = n - t
    if n < 7 or j < 2:
        raise ValueError("need n >= 7 and j = n - t >= 2")
    h_spec, r = _H_R_TABLE[t]
    h = {n + h_spec["n_off"]: 1}
    h.update({e: c for e, c in h_spec.items() if e != "n_off"})
    rhs = _poly_add(_poly_mul(h, {j: 1, 0: -1}), r)
    return rhs == _g_poly(n)


def corollary_families(lam: int):
    """Imprimitivity parameter families for a prime lambda.

    Returns tuples (v, k, lambda, c, d, l) where c*d = v and every block
    meets a class in 0 or l points.
    """
    if not is_prime(lam):
        raise ValueError("lambda must be prime")
    out = []
    v = lam * lam * (lam + 2)
    k = lam * (lam + 1)
    out.append((v, k, lam, lam * lam, lam + 2, lam))
    out.append((v, k, lam, lam + 2, lam * lam, 2))
    if lam % 6 in (1, 3) and (lam * lam + 4 * lam - 1) % 4 == 0:
        d = (lam * lam + 4 * lam - 1) // 4
        out.append(((lam + 6) * d, lam * (lam + 5) // 2, lam, lam + 6, d, 3))
    return out


# --- the elimination catalog -------------------------------------------------


@dataclass(frozen=True)
class CatalogRow:
    id: str
    x: str
    h0: str
    v: int
    k_bound: int
    required_lambda: int | None
    table: str

    def __post_init__(self) -> None:
        if self.v % 2 == 0 or self.v < 3 or self.k_bound < 1:
            raise ValueError(f"bad catalog row {self.id}")


# rows where the expected scan outcome is a specific nonempty pair list
EXPECTED_PAIRS = {
    "t1-fano": [AdmissiblePair(4, 2)],
    "t1-paley": [AdmissiblePair(5, 2), AdmissiblePair(6, 3)],
    "t1-unitary": [AdmissiblePair(12, 3)],
    "inline-891": [AdmissiblePair(446, 223)],
}

# rows that scan admissibly but are excluded by external classification
EXTERNALLY_EXCLUDED = {"inline-891"}


def load_catalog() -> list[CatalogRow]:
    text = resources.files("symdesign.data").joinpath("catalog.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) not in (5, 6):
            raise ValueError(f"malformed catalog line: {line}")
        lam = int(parts[5]) if len(parts) == 6 and parts[5] else None
        rows.append(
            CatalogRow(
                parts[0], parts[1], parts[2], int(parts[3]), int(parts[4]),
                lam, parts[0].split("-")[0],
            )
        )
    return rows


@dataclass(frozen=True)
class RowReport:
    row: CatalogRow
    pairs: tuple[AdmissiblePair, ...]
    status: str  # PASS / FAIL / INCONCLUSIVE
    note: str = ""


def run_row(row: CatalogRow) -> RowReport:
    try:
        pairs, _ = admissible(row.v, row.k_bound, row.required_lambda)
    except Exception as exc:  # factorization trouble is reported, not raised
        return RowReport(row, (), "INCONCLUSIVE", str(exc))
    expected = EXPECTED_PAIRS.get(row.id, [])
    if pairs == expected:
        note = ""
        if row.id in EXTERNALLY_EXCLUDED:
            note = "arithmetic-consistent; excluded by external classification"
        return RowReport(row, tuple(pairs), "PASS", note)
    return RowReport(
        row, tuple(pairs), "FAIL",
        f"expected {expected or 'EMPTY'}, scan found {pairs or 'EMPTY'}",
    )


def run_catalog(table: str = "all") -> list[RowReport]:
    rows = load_catalog()
    if table != "all":
        rows = [r for r in rows if r.table == table or r.id == table]
        if not rows:
            raise ValueError(f"no catalog rows match {table!r}")
    return [run_row(row) for row in rows]
