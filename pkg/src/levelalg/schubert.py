"""The cohomology ring of G(t, C^n) in the Schubert basis.

Classes are integer combinations of partitions inside the t x (n-t) box,
printed in the {a,b,...} notation.  Multiplication is by the
Littlewood-Richardson rule with silent truncation to the box, which is the
cup product on the Grassmannian.  Porteous' formula turns Chern classes of
the virtual bundle F - E into fundamental classes of rank-degeneracy loci.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AmbientMismatchError, InvalidPartitionError, LevelAlgError
from .partitions import check_partition, contains


@dataclass(frozen=True)
class SchubertClass:
    """An integer combination of Schubert classes on G(t, C^n)."""

    t: int
    n: int
    coeffs: dict  # partition tuple (trimmed) -> nonzero int

    __hash__ = None

    def __post_init__(self):
        for lam, c in self.coeffs.items():
            if c == 0:
                raise ValueError("zero coefficients must be omitted")
            if len(lam) > self.t or (lam and lam[0] > self.n - self.t):
                raise InvalidPartitionError(
                    f"{lam} does not fit the {self.t} x {self.n - self.t} box"
                )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: SchubertClass) -> SchubertClass:
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return schubert_class(self.t, self.n, out)

    def __sub__(self, other: SchubertClass) -> SchubertClass:
        return self + other.scale(-1)

    def scale(self, k: int) -> SchubertClass:
        if k == 0:
            return schubert_class(self.t, self.n, {})
        return SchubertClass(self.t, self.n, {lam: k * c for lam, c in self.coeffs.items()})

    def __mul__(self, other: SchubertClass) -> SchubertClass:
        return lr_multiply(self, other)

    def coefficient(self, lam) -> int:
        return self.coeffs.get(check_partition(lam), 0)

    def degree_part(self, w: int) -> SchubertClass:
        return schubert_class(
            self.t, self.n, {lam: c for lam, c in self.coeffs.items() if sum(lam) == w}
        )

    def max_degree(self) -> int:
        return max((sum(lam) for lam in self.coeffs), default=0)

    def _check(self, other: SchubertClass):
        if (self.t, self.n) != (other.t, other.n):
            raise AmbientMismatchError(
                f"classes on G({self.t},{self.n}) and G({other.t},{other.n})"
            )

    def __str__(self) -> str:
        return format_class(self)


def schubert_class(t: int, n: int, coeffs: dict) -> SchubertClass:
    clean = {}
    for lam, c in coeffs.items():
        lam = check_partition(lam)
        if c != 0:
            clean[lam] = clean.get(lam, 0) + c
    clean = {lam: c for lam, c in clean.items() if c != 0}
    return SchubertClass(t, n, clean)


def class_one(t: int, n: int) -> SchubertClass:
    return schubert_class(t, n, {(): 1})


def class_of(t: int, n: int, lam, coeff: int = 1) -> SchubertClass:
    return schubert_class(t, n, {tuple(lam): coeff})


def _sort_key(lam):
    return (sum(lam), lam)


def format_class(a: SchubertClass) -> str:
    """Canonical printing, e.g. '10{3,3} + 6{4,2}'; the unit prints as '1'."""
    if a.is_zero:
        return "0"
    parts = []
    for lam in sorted(a.coeffs, key=_sort_key):
        c = a.coeffs[lam]
        body = "{" + ",".join(str(p) for p in lam) + "}" if lam else ""
        mag = abs(c)
        if body == "":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{body}"
        parts.append((c < 0, text))
    out = []
    for k, (neg, text) in enumerate(parts):
        if k == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append(("- " if neg else "+ ") + text)
    return " ".join(out)


def parse_class(text: str, t: int, n: int) -> SchubertClass:
    """Parse '10{3,3} + 6{4,2}' style class strings."""
    text = text.strip()
    if text == "0":
        return schubert_class(t, n, {})
    coeffs: dict = {}
    pos = 0
    sign = 1
    first = True
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        if text[pos] in "+-":
            sign = 1 if text[pos] == "+" else -1
            pos += 1
            while pos < len(text) and text[pos].isspace():
                pos += 1
        elif not first:
            raise LevelAlgError(f"expected '+' or '-' at position {pos} of {text!r}")
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        coeff = int(text[start:pos]) if pos > start else 1
        lam: tuple = ()
        if pos < len(text) and text[pos] == "{":
            end = text.index("}", pos)
            inner = text[pos + 1:end].strip()
            lam = tuple(int(p.strip()) for p in inner.split(",")) if inner else ()
            pos = end + 1
        lam = check_partition(lam)
        coeffs[lam] = coeffs.get(lam, 0) + sign * coeff
        sign = 1
        first = False
    return schubert_class(t, n, coeffs)


@lru_cache(maxsize=None)
def lr_coefficient(lam: tuple, mu: tuple, nu: tuple) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam, mu}.

    Counts semistandard fillings of nu/lam with content mu whose reverse
    reading word is a lattice word.  Cells are filled in reverse reading
    order so the lattice property prunes the search as it goes.
    """
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1
    lam_p = list(lam) + [0] * (len(nu) - len(lam))
    cells = []
    for i in range(len(nu)):
        for j in range(nu[i] - 1, lam_p[i] - 1, -1):
            cells.append((i, j))
    k = len(mu)
    filling: dict = {}
    counts = [0] * (k + 1)
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        left = filling.get((i, j + 1))  # cell to the right, already filled
        above = filling.get((i - 1, j))
        for v in range(1, k + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue  # lattice word violated
            if left is not None and v > left:
                continue  # row must weakly increase left to right
            if above is not None and v <= above:
                continue  # column must strictly increase downward
            filling[(i, j)] = v
            counts[v] += 1
            place(idx + 1)
            counts[v] -= 1
            del filling[(i, j)]

    place(0)
    return total


def lr_multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """Cup product: LR expansion truncated to the box."""
    a._check(b)
    t, n = a.t, a.n
    out: dict = {}
    from .partitions import partitions

    for lam, ca in a.coeffs.items():
        for mu, cb in b.coeffs.items():
            w = sum(lam) + sum(mu)
            if w > t * (n - t):
                continue
            for nu in partitions(w):
                if len(nu) > t or (nu and nu[0] > n - t):
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out[nu] = out.get(nu, 0) + ca * cb * c
    return schubert_class(t, n, out)


def chern_taut(t: int, n: int, i: int) -> SchubertClass:
    """c_i of the tautological subbundle: (-1)^i {1,...,1} (i ones)."""
    if i < 0:
        raise InvalidPartitionError("negative Chern index")
    if i == 0:
        return class_one(t, n)
    if i > t:
        return schubert_class(t, n, {})
    return schubert_class(t, n, {(1,) * i: (-1) ** i})


def chern_taut_total(t: int, n: int) -> SchubertClass:
    total = class_one(t, n)
    for i in range(1, t + 1):
        total = total + chern_taut(t, n, i)
    return total


def class_power(a: SchubertClass, k: int) -> SchubertClass:
    out = class_one(a.t, a.n)
    for _ in range(k):
        out = lr_multiply(out, a)
    return out


def class_inverse(a: SchubertClass) -> SchubertClass:
    """Inverse of a class with unit constant term, as a finite geometric
    series (positive-degree parts are nilpotent in the box)."""
    if a.coefficient(()) != 1:
        raise LevelAlgError("can only invert classes with constant term 1")
    u = a - class_one(a.t, a.n)
    out = class_one(a.t, a.n)
    term = class_one(a.t, a.n)
    while True:
        term = lr_multiply(term, u).scale(-1)
        if term.is_zero:
            break
        out = out + term
    return out


def porteous_class(t: int, d: int, i: int, r: int) -> SchubertClass:
    """Fundamental class of the rank <= r locus of the i-th product map.

    E = (tautological) (x) R_{d-i} has rank e = t(d-i+1) and total Chern
    class c(taut)^{d-i+1}; F is trivial of rank f = i+1.  The class is the
    (e-r) x (e-r) determinant with (row, col) entry c_{f-r+col-row}(F - E),
    valid as a fundamental class when the locus has the expected
    codimension (e-r)(f-r).
    """
    n = d + 1
    e = t * (d - i + 1)
    f = i + 1
    if r < 0 or r > min(e, f):
        raise LevelAlgError(f"rank bound {r} outside 0..min({e},{f})")
    ce = class_power(chern_taut_total(t, n), d - i + 1)
    cinv = class_inverse(ce)  # total Chern class of F - E

    def entry(row: int, col: int) -> SchubertClass:
        k = (f - r) + col - row
        if k < 0:
            return schubert_class(t, n, {})
        return cinv.degree_part(k)

    size = e - r
    if size == 0:
        return class_one(t, n)
    # Laplace expansion along the first remaining row, memoised on the
    # surviving column set
    from functools import lru_cache as _cache

    @_cache(maxsize=None)
    def minor(cols: tuple) -> SchubertClass:
        row = size - len(cols)
        if not cols:
            return class_one(t, n)
        total = schubert_class(t, n, {})
        for pos, c in enumerate(cols):
            ent = entry(row, c)
            if ent.is_zero:
                continue
            sub = minor(tuple(x for x in cols if x != c))
            term = lr_multiply(ent, sub)
            if pos % 2 == 1:
                term = term.scale(-1)
            total = total + term
        return total

    return minor(tuple(range(size)))


def poincare_complement(lam, t: int, n: int) -> tuple[int, ...]:
    """The partition pairing with lam to the class of a point."""
    lam = check_partition(lam)
    b = n - t
    padded = list(lam) + [0] * (t - len(lam))
    return check_partition(tuple(b - padded[t - 1 - i] for i in range(t)))
