"""Homogeneous forms and canonical subspaces.

Two graded rings appear throughout: R = k[x1..xn], acting on S = k[y1..yn]
by differentiation.  A Form carries a ring tag ('R' or 'S') which fixes the
variable letter and which operations accept it.

The monomial order is graded lexicographic, descending, on exponent
vectors.  For n = 2 this lists x1^m, x1^{m-1}*x2, ..., x2^m, i.e. the
coefficient vector is indexed by the x2-exponent j = 0..m.  All canonical
representations (printing, echelon bases, subspace equality) refer to this
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import AmbientMismatchError, FormSyntaxError
from .linalg import QQ, Matrix, Vector, rref

RING_VARS = {"R": "x", "S": "y"}


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given degree, descending graded-lex."""
    if nvars < 1:
        raise ValueError("nvars must be positive")

    def gen(n, d):
        if n == 1:
            yield (d,)
            return
        for e in range(d, -1, -1):
            for rest in gen(n - 1, d - e):
                yield (e,) + rest

    return tuple(gen(nvars, degree))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


def space_dim(nvars: int, degree: int) -> int:
    return len(monomials(nvars, degree))


@dataclass(frozen=True)
class Form:
    """A homogeneous polynomial with exact rational coefficients.

    coeffs maps exponent vectors (summing to degree) to nonzero Fractions;
    the zero form has an empty map.
    """

    nvars: int
    degree: int
    ring: str
    coeffs: dict = field(compare=True)

    def __post_init__(self):
        if self.ring not in RING_VARS:
            raise ValueError(f"unknown ring tag {self.ring!r}")
        for exps, c in self.coeffs.items():
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            if sum(exps) != self.degree:
                raise ValueError(
                    f"exponent vector {exps} does not have degree {self.degree}"
                )
            if c == 0:
                raise ValueError("zero coefficients must be omitted")

    __hash__ = None

    @staticmethod
    def make(nvars: int, degree: int, ring: str, coeffs: dict) -> Form:
        clean = {e: QQ(c) for e, c in coeffs.items() if c != 0}
        return Form(nvars, degree, ring, clean)

    @staticmethod
    def zero(nvars: int, degree: int, ring: str) -> Form:
        return Form(nvars, degree, ring, {})

    @staticmethod
    def monomial(nvars: int, ring: str, exps, coeff=1) -> Form:
        exps = tuple(exps)
        return Form.make(nvars, sum(exps), ring, {exps: QQ(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exps) -> Fraction:
        return self.coeffs.get(tuple(exps), QQ(0))

    def vector(self) -> Vector:
        idx = monomial_index(self.nvars, self.degree)
        v = [QQ(0)] * len(idx)
        for e, c in self.coeffs.items():
            v[idx[e]] = c
        return v

    @staticmethod
    def from_vector(nvars: int, degree: int, ring: str, vec) -> Form:
        mons = monomials(nvars, degree)
        return Form.make(nvars, degree, ring, {mons[i]: QQ(c) for i, c in enumerate(vec) if c != 0})

    def _check_compatible(self, other: Form):
        if (self.nvars, self.degree, self.ring) != (other.nvars, other.degree, other.ring):
            raise AmbientMismatchError(
                f"cannot combine forms in ({self.ring}_{self.degree}, n={self.nvars}) "
                f"and ({other.ring}_{other.degree}, n={other.nvars})"
            )

    def __add__(self, other: Form) -> Form:
        self._check_compatible(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, QQ(0)) + c
        return Form.make(self.nvars, self.degree, self.ring, out)

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __neg__(self) -> Form:
        return Form(self.nvars, self.degree, self.ring, {e: -c for e, c in self.coeffs.items()})

    def scale(self, c) -> Form:
        c = QQ(c)
        if c == 0:
            return Form.zero(self.nvars, self.degree, self.ring)
        return Form(self.nvars, self.degree, self.ring, {e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other: Form) -> Form:
        """Polynomial product of two forms in the same ring."""
        if self.nvars != other.nvars or self.ring != other.ring:
            raise AmbientMismatchError("product of forms in different rings")
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, QQ(0)) + c1 * c2
        return Form.make(self.nvars, self.degree + other.degree, self.ring, out)

    def power(self, k: int) -> Form:
        if k < 0:
            raise ValueError("negative power")
        result = Form.monomial(self.nvars, self.ring, (0,) * self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def leading_monomial(self) -> tuple[int, ...] | None:
        """First monomial (in the fixed order) with a nonzero coefficient."""
        for m in monomials(self.nvars, self.degree):
            if m in self.coeffs:
                return m
        return None

    def monic(self) -> Form:
        lm = self.leading_monomial()
        if lm is None:
            return self
        return self.scale(QQ(1) / self.coeffs[lm])

    def substitute_linear(self, matrix) -> Form:
        """Apply the linear substitution var_i -> sum_j matrix[i][j] * var_j."""
        images = [
            sum(
                (Form.monomial(self.nvars, self.ring, tuple(1 if k == j else 0 for k in range(self.nvars)), matrix[i][j])
                 for j in range(self.nvars)),
                Form.zero(self.nvars, 1, self.ring),
            )
            for i in range(self.nvars)
        ]
        total = Form.zero(self.nvars, self.degree, self.ring)
        for exps, c in self.coeffs.items():
            term = Form.monomial(self.nvars, self.ring, (0,) * self.nvars, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * images[i].power(e)
            total = total + term
        return total

    def __str__(self) -> str:
        return form_print(self)

    def __repr__(self) -> str:
        return f"Form({self.ring}_{self.degree}: {form_print(self)})"


def _print_coeff(c: Fraction) -> str:
    return str(c)


def form_print(f: Form) -> str:
    """Canonical string form; parse(print(f)) == f."""
    if f.is_zero:
        return "0"
    var = RING_VARS[f.ring]
    parts = []
    for m in monomials(f.nvars, f.degree):
        c = f.coeffs.get(m)
        if c is None:
            continue
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f"{var}{i + 1}")
            elif e > 1:
                factors.append(f"{var}{i + 1}^{e}")
        mag = abs(c)
        if not factors:
            body = _print_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _print_coeff(mag) + "*" + "*".join(factors)
        parts.append((c < 0, body))
    out = []
    for k, (neg, body) in enumerate(parts):
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise FormSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.take()
            den = self.integer()
            if den == 0:
                raise FormSyntaxError("zero denominator", self.pos)
            return QQ(num, den)
        return QQ(num)


def form_parse(text: str, nvars: int | None = None, ring: str | None = None) -> Form:
    """Parse the external form grammar.

    Terms are joined by '+'/'-'; a term is an optional rational p/q followed
    by '*'-separated variable powers x<i>^<e> or y<i>^<e>.  One letter class
    per form.  The number of variables is the largest index seen unless
    nvars is given.  Inhomogeneous input is rejected.
    """
    sc = _Scanner(text)
    terms: list[tuple[Fraction, dict[int, int]]] = []
    letter: str | None = None
    max_index = 0

    sign = QQ(1)
    c = sc.peek()
    if c == "-":
        sc.take()
        sign = QQ(-1)
    elif c == "+":
        sc.take()
    while True:
        coeff = QQ(1)
        exps: dict[int, int] = {}
        saw_number = False
        saw_var = False
        c = sc.peek()
        if c.isdigit():
            coeff = sc.rational()
            saw_number = True
            if sc.peek() == "*":
                sc.take()
            elif sc.peek() in ("x", "y"):
                raise FormSyntaxError("missing '*' between coefficient and variable", sc.pos)
        while sc.peek() in ("x", "y"):
            pos = sc.pos
            v = sc.take()
            if letter is None:
                letter = v
            elif v != letter:
                raise FormSyntaxError(f"mixed variable letters {letter!r} and {v!r}", pos)
            idx = sc.integer()
            if idx < 1:
                raise FormSyntaxError("variable indices start at 1", pos)
            e = 1
            if sc.peek() == "^":
                sc.take()
                e = sc.integer()
            exps[idx - 1] = exps.get(idx - 1, 0) + e
            max_index = max(max_index, idx)
            saw_var = True
            if sc.peek() == "*":
                sc.take()
                if sc.peek() not in ("x", "y"):
                    raise FormSyntaxError("expected a variable after '*'", sc.pos)
        if not (saw_number or saw_var):
            raise FormSyntaxError("expected a term", sc.pos)
        terms.append((sign * coeff, exps))
        c = sc.peek()
        if c == "":
            break
        if c == "+":
            sign = QQ(1)
        elif c == "-":
            sign = QQ(-1)
        else:
            raise FormSyntaxError(f"unexpected character {c!r}", sc.pos)
        sc.take()

    if letter is None:
        letter = "x" if ring == "R" else "y"
    inferred_ring = "R" if letter == "x" else "S"
    if ring is not None and ring != inferred_ring:
        raise FormSyntaxError(f"expected a form in ring {ring}", 0)
    n = nvars if nvars is not None else max(max_index, 1)
    if max_index > n:
        raise FormSyntaxError(f"variable index {max_index} exceeds nvars={n}", 0)
    degrees = {sum(e.values()) for _, e in terms}
    if len(degrees) > 1:
        raise FormSyntaxError(f"inhomogeneous input (term degrees {sorted(degrees)})", 0)
    degree = degrees.pop()
    coeffs: dict = {}
    for c, e in terms:
        key = tuple(e.get(i, 0) for i in range(n))
        coeffs[key] = coeffs.get(key, QQ(0)) + c
    return Form.make(n, degree, inferred_ring, coeffs)


@dataclass(frozen=True)
class Subspace:
    """A subspace of degree-d forms in canonical reduced-echelon basis.

    Two subspaces are equal iff their echelon bases are identical; span()
    canonicalizes any spanning set, so equality is equality of spans.
    """

    nvars: int
    degree: int
    ring: str
    basis: tuple[Form, ...]
    pivots: tuple[int, ...]

    __hash__ = None

    @staticmethod
    def span(nvars: int, degree: int, ring: str, forms) -> Subspace:
        rows = []
        for f in forms:
            if (f.nvars, f.degree, f.ring) != (nvars, degree, ring):
                raise AmbientMismatchError(
                    f"form {form_print(f)} not in {ring}_{degree} with n={nvars}"
                )
            if not f.is_zero:
                rows.append(f.vector())
        if not rows:
            return Subspace(nvars, degree, ring, (), ())
        reduced, pivots = rref(rows)
        basis = tuple(
            Form.from_vector(nvars, degree, ring, reduced[k]) for k in range(len(pivots))
        )
        return Subspace(nvars, degree, ring, basis, tuple(pivots))

    @staticmethod
    def full(nvars: int, degree: int, ring: str) -> Subspace:
        forms = [Form.monomial(nvars, ring, m) for m in monomials(nvars, degree)]
        return Subspace.span(nvars, degree, ring, forms)

    @staticmethod
    def zero(nvars: int, degree: int, ring: str) -> Subspace:
        return Subspace(nvars, degree, ring, (), ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return space_dim(self.nvars, self.degree)

    def basis_matrix(self) -> Matrix:
        return [f.vector() for f in self.basis]

    def _check_same_ambient(self, other: Subspace):
        if (self.nvars, self.degree, self.ring) != (other.nvars, other.degree, other.ring):
            raise AmbientMismatchError(
                f"subspaces of ({self.ring}_{self.degree}, n={self.nvars}) and "
                f"({other.ring}_{other.degree}, n={other.nvars}) are not comparable"
            )

    def reduce(self, f: Form) -> Vector:
        """Residual of f against the echelon basis (zero iff f lies in self)."""
        if (f.nvars, f.degree, f.ring) != (self.nvars, self.degree, self.ring):
            raise AmbientMismatchError("form not in the ambient space of the subspace")
        cur = f.vector()
        for k, p in enumerate(self.pivots):
            c = cur[p]
            if c != 0:
                bv = self.basis[k].vector()
                cur = [x - c * y for x, y in zip(cur, bv)]
        return cur

    def contains(self, f: Form) -> bool:
        return all(c == 0 for c in self.reduce(f))

    def contains_subspace(self, other: Subspace) -> bool:
        self._check_same_ambient(other)
        return all(self.contains(f) for f in other.basis)

    def complement_positions(self) -> list[int]:
        """Non-pivot monomial positions: coordinates of the quotient space."""
        pivot_set = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivot_set]


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Canonical echelon basis of a ∩ b."""
    a._check_same_ambient(b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.nvars, a.degree, a.ring)
    if a.basis == b.basis:
        return a
    from .linalg import row_space_intersection

    rows = row_space_intersection(a.basis_matrix(), b.basis_matrix(), a.ambient_dim)
    return Subspace.span(
        a.nvars, a.degree, a.ring,
        [Form.from_vector(a.nvars, a.degree, a.ring, r) for r in rows],
    )


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check_same_ambient(b)
    return Subspace.span(a.nvars, a.degree, a.ring, list(a.basis) + list(b.basis))


def parse_subspace_lines(lines, nvars: int | None = None) -> Subspace:
    """Parse a subspace from text lines, one form per line."""
    forms = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        forms.append(form_parse(line, nvars=nvars))
    if not forms:
        raise FormSyntaxError("no forms supplied", 0)
    n = nvars if nvars is not None else max(f.nvars for f in forms)
    degree = forms[0].degree
    ring = forms[0].ring
    forms = [
        f if f.nvars == n else Form.make(n, f.degree, f.ring,
                                         {e + (0,) * (n - f.nvars): c for e, c in f.coeffs.items()})
        for f in forms
    ]
    return Subspace.span(n, degree, ring, forms)
