"""Level Hilbert functions in two variables.

A sequence h_0..h_d with h_0 = 1 and h_d = t is the Hilbert function of an
artin level algebra of type (t, d) in k[x1, x2] exactly when it is concave:
2 h_i >= h_{i-1} + h_{i+1} for every 0 <= i <= d, reading h as 0 outside
[0, d].  This module owns that test, the e- and q-sequences, the
Hilbert-Burch witness ideal, the bijection with partitions of d - t + 1
with parts at most t + 1, enumeration, and the stratum dimension formula
sum e_i h_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPartitionError, MalformedSequenceError
from .forms import Form


@dataclass(frozen=True)
class HilbertFunction:
    """h_0..h_d with h_0 = 1 and h_d = t >= 1; zero outside by convention."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if not v:
            raise MalformedSequenceError("empty sequence")
        if v[0] != 1:
            raise MalformedSequenceError(f"h_0 must be 1, got {v[0]}")
        if v[-1] < 1:
            raise MalformedSequenceError("h_d must be positive (trailing zeros are stripped)")
        if any(x < 0 for x in v):
            raise MalformedSequenceError("negative entries")

    @staticmethod
    def from_values(values) -> HilbertFunction:
        vals = [int(x) for x in values]
        while vals and vals[-1] == 0:
            vals.pop()
        return HilbertFunction(tuple(vals))

    @staticmethod
    def parse(text: str) -> HilbertFunction:
        try:
            vals = [int(p.strip()) for p in text.split(",") if p.strip() != ""]
        except ValueError as exc:
            raise MalformedSequenceError(f"bad Hilbert function string {text!r}") from exc
        return HilbertFunction.from_values(vals)

    @property
    def d(self) -> int:
        return len(self.values) - 1

    @property
    def t(self) -> int:
        return self.values[-1]

    def __getitem__(self, i: int) -> int:
        if 0 <= i <= self.d:
            return self.values[i]
        return 0

    def format(self) -> str:
        """Comma list with the conventional trailing zero, e.g. 1,2,2,0."""
        return ",".join(str(x) for x in self.values) + ",0"

    def __str__(self) -> str:
        return self.format()


def is_level_sequence(values) -> tuple[bool, int | None]:
    """Concavity test: (True, None) or (False, first failing index).

    Endpoint malformation (h_0 != 1, nonpositive final entry, negative
    entries) raises; a concavity failure is a negative but valid answer.
    """
    vals = [int(x) for x in values]
    while vals and vals[-1] == 0:
        vals.pop()
    if not vals or vals[0] != 1 or any(x < 0 for x in vals):
        raise MalformedSequenceError(f"malformed sequence {list(values)!r}")
    d = len(vals) - 1

    def h(i):
        return vals[i] if 0 <= i <= d else 0

    for i in range(0, d + 1):
        if 2 * h(i) < h(i - 1) + h(i + 1):
            return False, i
    return True, None


def is_level_hf(h: HilbertFunction) -> tuple[bool, int | None]:
    return is_level_sequence(h.values)


def _require_level(h: HilbertFunction):
    ok, idx = is_level_hf(h)
    if not ok:
        raise MalformedSequenceError(
            f"{h.format()} is not a level Hilbert function (fails at i={idx})"
        )


def e_sequence(h: HilbertFunction) -> tuple[int, ...]:
    """Minimal generator counts e_1..e_{d+1}: e_{i+1} = 2h_i - h_{i-1} - h_{i+1}."""
    _require_level(h)
    return tuple(2 * h[i] - h[i - 1] - h[i + 1] for i in range(0, h.d + 1))


def q_sequence(h: HilbertFunction) -> tuple[int, ...]:
    """Generator degrees q_1 <= ... <= q_{t+1}; degree i occurs e_i times."""
    es = e_sequence(h)
    out = []
    for i, e in enumerate(es, start=1):
        out.extend([i] * e)
    return tuple(out)


@dataclass(frozen=True)
class GenProfile:
    """e- and q-sequences of a level Hilbert function."""

    e_seq: tuple[int, ...]  # e_1..e_{d+1}
    q_seq: tuple[int, ...]  # q_1 <= ... <= q_{t+1}

    def __post_init__(self):
        if sum(self.e_seq) != len(self.q_seq):
            raise MalformedSequenceError("e/q sequences of inconsistent size")


def gen_profile(h: HilbertFunction) -> GenProfile:
    return GenProfile(e_sequence(h), q_sequence(h))


@dataclass(frozen=True)
class BurchMatrix:
    """The t x (t+1) Hilbert-Burch matrix of a level Hilbert function.

    Nonzero entries sit on the diagonal (powers of x1) and superdiagonal
    (powers of x2); the maximal minors have degrees q_1..q_{t+1} and
    generate an ideal whose quotient realises the Hilbert function.
    """

    t: int
    d: int
    entries: tuple  # t rows of t+1 entries, each a Form or None (blank)

    def minors(self) -> list[Form]:
        """Maximal minors, one per deleted column, each normalised monic."""
        out = []
        for k in range(self.t + 1):
            sub = [
                [self.entries[i][j] for j in range(self.t + 1) if j != k]
                for i in range(self.t)
            ]
            minor = _poly_det(sub)
            assert minor is not None, "Burch minors are never zero"
            out.append(minor.monic())
        return out


def _poly_det(m: list[list[Form | None]]) -> Form | None:
    """Determinant of a matrix of forms; None encodes the zero polynomial
    (whose degree is unconstrained, as Burch entries are not equigraded)."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return m[0][0]
    total = None
    for i in range(n):
        entry = m[i][0]
        if entry is None or entry.is_zero:
            continue
        sub = [row[1:] for r, row in enumerate(m) if r != i]
        subdet = _poly_det(sub)
        if subdet is None or subdet.is_zero:
            continue
        term = entry * subdet
        if i % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def burch_matrix(h: HilbertFunction) -> BurchMatrix:
    """M_{i,i} = x1^{d+2-q_i}, M_{i,i+1} = x2^{d+2-q_{i+1}}, zero elsewhere."""
    _require_level(h)
    t, d = h.t, h.d
    q = q_sequence(h)
    rows = []
    for i in range(t):
        row = []
        for j in range(t + 1):
            if j == i:
                row.append(Form.monomial(2, "R", (d + 2 - q[i], 0)))
            elif j == i + 1:
                row.append(Form.monomial(2, "R", (0, d + 2 - q[i + 1])))
            else:
                row.append(None)
        rows.append(tuple(row))
    return BurchMatrix(t, d, tuple(rows))


def burch_ideal(h: HilbertFunction) -> tuple[BurchMatrix, list[Form]]:
    """The witness ideal: Burch matrix plus its t+1 maximal minors.

    The minors are returned in column order, so their degrees are the
    q-sequence in nondecreasing order.
    """
    m = burch_matrix(h)
    return m, m.minors()


def partition_from_hf(h: HilbertFunction) -> tuple[int, ...]:
    """mu_i = h_i - h_{i+1} + 1 read from i = d-1 down to 0, zeros dropped."""
    _require_level(h)
    parts = [h[i] - h[i + 1] + 1 for i in range(h.d - 1, -1, -1)]
    assert all(p >= 0 for p in parts), "concavity guarantees nonnegative parts"
    return tuple(p for p in parts if p > 0)


def hf_from_partition(mu, t: int, d: int) -> HilbertFunction:
    """Inverse bijection: partitions of d-t+1 with parts <= t+1 to Hilbert functions."""
    mu = tuple(int(p) for p in mu)
    if any(p < 1 for p in mu):
        raise InvalidPartitionError("parts must be positive")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise InvalidPartitionError("parts must be weakly decreasing")
    if sum(mu) != d - t + 1:
        raise InvalidPartitionError(
            f"partition of {sum(mu)} given; need d - t + 1 = {d - t + 1}"
        )
    if mu and mu[0] > t + 1:
        raise InvalidPartitionError(f"part {mu[0]} exceeds t + 1 = {t + 1}")
    if len(mu) > d:
        raise InvalidPartitionError(f"more than d = {d} parts")
    padded = list(mu) + [0] * (d - len(mu))
    values = [0] * (d + 1)
    values[d] = t
    for i in range(d - 1, -1, -1):
        values[i] = values[i + 1] + padded[d - 1 - i] - 1
    return HilbertFunction(tuple(values))


def enumerate_level_hf(t: int, d: int) -> list[HilbertFunction]:
    """All level Hilbert functions of type (t, d), lexicographically ascending."""
    if not 1 <= t <= d + 1:
        raise MalformedSequenceError(f"need 1 <= t <= d + 1, got (t, d) = ({t}, {d})")
    out = [hf_from_partition(mu, t, d)
           for mu in _partitions_max_part(d - t + 1, t + 1)]
    out.sort(key=lambda h: h.values)
    return out


def count_level_hf(t: int, d: int) -> int:
    """Number of partitions of d - t + 1 with no part exceeding t + 1."""
    return _count_partitions_max_part(d - t + 1, t + 1)


def _partitions_max_part(n: int, k: int):
    """Partitions of n with all parts <= k, parts weakly decreasing."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, k), 0, -1):
        for rest in _partitions_max_part(n - first, first):
            yield (first,) + rest


def _count_partitions_max_part(n: int, k: int) -> int:
    table = [[0] * (k + 1) for _ in range(n + 1)]
    for j in range(k + 1):
        table[0][j] = 1
    for m in range(1, n + 1):
        for j in range(1, k + 1):
            table[m][j] = table[m][j - 1] + (table[m - j][j] if m >= j else 0)
    return table[n][k]


def dim_stratum(h: HilbertFunction) -> int:
    """dim of the locally closed stratum: sum over i = 1..d of e_i h_i."""
    es = e_sequence(h)
    return sum(es[i - 1] * h[i] for i in range(1, h.d + 1))


def grassmannian_dim(t: int, d: int) -> int:
    return t * (d + 1 - t)


def minmax_hf(t: int, d: int) -> tuple[HilbertFunction, HilbertFunction, int]:
    """(minimal h, maximal h, s0) for type (t, d).

    The minimal function is min(i+1, t); the maximal is
    min(i+1, (d-i+1)t); s0 = ceil(t(d+1)/(t+1)) is the least degree in
    which every subspace acquires an apolar form.
    """
    if not 1 <= t <= d + 1:
        raise MalformedSequenceError(f"need 1 <= t <= d + 1, got (t, d) = ({t}, {d})")
    hmin = HilbertFunction(tuple(min(i + 1, t) for i in range(d + 1)))
    hmax = HilbertFunction(tuple(min(i + 1, (d - i + 1) * t) for i in range(d + 1)))
    s0 = -((-t * (d + 1)) // (t + 1))
    return hmin, hmax, s0


def dominates(h1: HilbertFunction, h2: HilbertFunction) -> bool:
    """Componentwise h1 >= h2 (both read as 0 outside their ranges)."""
    top = max(h1.d, h2.d)
    return all(h1[i] >= h2[i] for i in range(top + 1))


def partition_format(mu) -> str:
    return "+".join(str(p) for p in mu) if mu else "0"


def partition_parse(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split("+"))
    except ValueError as exc:
        raise InvalidPartitionError(f"bad partition string {text!r}") from exc
    return parts
