"""Integer polynomials in the standard and higher-level factorial bases.

A :class:`Polynomial` is a basis tag plus a dense, trailing-zero-trimmed
tuple of integer coefficients; coefficient ``i`` multiplies the basis
element of degree ``i``:

* ``standard`` -- ``x ** i``
* ``rising:s`` -- ``x (x + 1**s) (x + 2**s) ... (x + (i-1)**s)``
* ``falling:s`` -- ``x (x - 1**s) (x - 2**s) ... (x - (i-1)**s)``

Changes of basis go through :class:`TransitionMatrix`, whose entries are
Stirling numbers with level ``s`` and Lah numbers of order ``s``, signed
where the direction requires it. All six matrices are integer and lower
unitriangular, so conversions never leave the integers.

The module also carries the row polynomials of the Lah families and the
one-step recurrences that build row ``n + 1`` from row ``n`` by formal
differentiation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import ConsistencyError, ParameterError
from .triangles import (
    OLAH,
    STIRLING1,
    STIRLING2,
    check_level,
    lah_higher_level,
    lah_order,
    lr_lah,
    signed_value,
    stirling2_hl,
    value,
)

__all__ = [
    "BasisTag",
    "STANDARD",
    "rising",
    "falling",
    "Polynomial",
    "TransitionMatrix",
    "factorial_poly",
    "evaluate",
    "transition_matrix",
    "convert",
    "derivative",
    "row_poly_hl",
    "row_poly_hl_step",
    "q_poly",
    "q_step",
    "a_poly",
    "lah_order_poly",
    "lah_order_poly_step",
    "b_poly",
    "lr_row_poly",
    "lr_row_poly_step",
]

_BASIS_NAMES = ("standard", "rising", "falling")


@dataclass(frozen=True)
class BasisTag:
    name: str
    s: int | None = None

    def __post_init__(self):
        if self.name not in _BASIS_NAMES:
            raise ParameterError(f"unknown basis {self.name!r}")
        if self.name == "standard":
            if self.s is not None:
                raise ParameterError("the standard basis takes no level")
        else:
            check_level(self.s)

    @classmethod
    def parse(cls, text: str) -> "BasisTag":
        """Parse ``standard``, ``rising:S`` or ``falling:S``."""
        name, sep, level = text.strip().partition(":")
        if name == "standard" and not sep:
            return STANDARD
        if name in ("rising", "falling") and sep:
            try:
                s = int(level)
            except ValueError:
                raise ParameterError(f"bad level in basis {text!r}") from None
            return cls(name, s)
        raise ParameterError(f"bad basis {text!r} (expected standard, rising:S or falling:S)")

    def __str__(self):
        return self.name if self.s is None else f"{self.name}:{self.s}"


STANDARD = BasisTag("standard")


def rising(s: int) -> BasisTag:
    return BasisTag("rising", s)


def falling(s: int) -> BasisTag:
    return BasisTag("falling", s)


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    basis: BasisTag
    coeffs: tuple[int, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ParameterError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def standard(cls, coeffs) -> "Polynomial":
        return cls(STANDARD, tuple(coeffs))

    @classmethod
    def basis_element(cls, basis: BasisTag, degree: int) -> "Polynomial":
        return cls(basis, (0,) * degree + (1,))

    @classmethod
    def zero(cls, basis: BasisTag = STANDARD) -> "Polynomial":
        return cls(basis, ())

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.basis != self.basis:
            raise ParameterError(f"cannot add {self.basis} and {other.basis} polynomials")
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(self.basis, tuple(out))

    def __neg__(self):
        return Polynomial(self.basis, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int) or isinstance(scalar, bool):
            return NotImplemented
        return Polynomial(self.basis, tuple(scalar * c for c in self.coeffs))

    __rmul__ = __mul__

    def _require_standard(self, what):
        if self.basis != STANDARD:
            raise ParameterError(f"{what} needs a standard-basis polynomial, got {self.basis}")

    def shift(self, m: int) -> "Polynomial":
        """Multiply by ``x ** m``."""
        self._require_standard("shift")
        if self.is_zero():
            return self
        return Polynomial(STANDARD, (0,) * m + self.coeffs)

    def divide_by_x_power(self, m: int) -> "Polynomial":
        """Exact division by ``x ** m``; a nonzero remainder is an error."""
        self._require_standard("division by x**m")
        if any(self.coeffs[:m]):
            raise ConsistencyError(f"{self.to_text()} is not divisible by x**{m}")
        return Polynomial(STANDARD, self.coeffs[m:])

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        return f"basis={self.basis} coeffs=[{','.join(str(c) for c in self.coeffs)}]"

    def to_json(self) -> str:
        return json.dumps(
            {"basis": self.basis.name, "level": self.basis.s, "coeffs": [str(c) for c in self.coeffs]},
            separators=(",", ":"),
        )

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        fields = dict(part.partition("=")[::2] for part in text.split())
        if set(fields) != {"basis", "coeffs"}:
            raise ParameterError(f"expected 'basis=... coeffs=[...]', got {text!r}")
        body = fields["coeffs"].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParameterError(f"coeffs must be a bracketed list, got {body!r}")
        body = body[1:-1].strip()
        try:
            coeffs = tuple(int(c) for c in body.split(",")) if body else ()
        except ValueError:
            raise ParameterError(f"coefficients must be decimal integers: {body!r}") from None
        return cls(BasisTag.parse(fields["basis"]), coeffs)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        data = json.loads(text)
        try:
            name, level, raw = data["basis"], data.get("level"), data["coeffs"]
        except (KeyError, TypeError):
            raise ParameterError("polynomial JSON needs 'basis' and 'coeffs'") from None
        if not all(isinstance(c, str) for c in raw):
            raise ParameterError("JSON coefficients must be decimal strings")
        return cls(BasisTag(name, level), tuple(int(c) for c in raw))


def factorial_poly(kind: str, n: int, s: int) -> Polynomial:
    """Standard-basis expansion of the rising or falling factorial with level ``s``.

    >>> factorial_poly("rising", 4, 2).coeffs
    (0, 36, 49, 14, 1)
    """
    check_level(s)
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"n must be a non-negative integer, got {n!r}")
    if kind not in ("rising", "falling"):
        raise ParameterError(f"kind must be 'rising' or 'falling', got {kind!r}")
    sign = 1 if kind == "rising" else -1
    p = Polynomial.standard((1,))
    for i in range(n):
        p = p.shift(1) + sign * i**s * p
    return p


def evaluate(p: Polynomial, x: int) -> int:
    """Exact value at ``x``; factorial bases are evaluated from their product form."""
    if p.basis == STANDARD:
        total = 0
        for c in reversed(p.coeffs):
            total = total * x + c
        return total
    sign = 1 if p.basis.name == "rising" else -1
    s = p.basis.s
    total = 0
    element = 1
    for i, c in enumerate(p.coeffs):
        total += c * element
        element *= x + sign * i**s
    return total


@dataclass(frozen=True)
class TransitionMatrix:
    """Row ``n``, column ``k``: coefficient of target element ``k`` in source element ``n``.

    With this convention a chain of conversions is the ordinary matrix
    product in the order the conversions are applied: ``A->C == (A->B) @ (B->C)``.
    """

    source: BasisTag
    target: BasisTag
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.size != other.size:
            raise ParameterError("matrix sizes differ")
        if self.target != other.source:
            raise ParameterError(f"cannot chain {self.source}->{self.target} with {other.source}->{other.target}")
        n = self.size
        entries = tuple(
            tuple(sum(self.entries[i][j] * other.entries[j][k] for j in range(n)) for k in range(n))
            for i in range(n)
        )
        return TransitionMatrix(self.source, other.target, entries)

    def is_identity(self) -> bool:
        return all(self.entries[i][j] == (i == j) for i in range(self.size) for j in range(self.size))

    def is_lower_unitriangular(self) -> bool:
        e = self.entries
        return all(e[i][i] == 1 for i in range(self.size)) and all(
            e[i][j] == 0 for i in range(self.size) for j in range(i + 1, self.size)
        )


def _matrix_entry(source: BasisTag, target: BasisTag):
    pair = (source.name, target.name)
    if source.name == target.name:
        return lambda n, k, s: int(n == k)
    if pair == ("rising", "standard"):
        return lambda n, k, s: value(STIRLING1, n, k, s)
    if pair == ("standard", "falling"):
        return lambda n, k, s: value(STIRLING2, n, k, s)
    if pair == ("rising", "falling"):
        return lambda n, k, s: value(OLAH, n, k, s)
    if pair == ("falling", "standard"):
        return lambda n, k, s: signed_value(STIRLING1, n, k, s)
    if pair == ("standard", "rising"):
        return lambda n, k, s: signed_value(STIRLING2, n, k, s)
    return lambda n, k, s: signed_value(OLAH, n, k, s)


def transition_matrix(source: BasisTag, target: BasisTag, size: int) -> TransitionMatrix:
    if not isinstance(size, int) or size < 0:
        raise ParameterError(f"size must be a non-negative integer, got {size!r}")
    levels = {b.s for b in (source, target) if b.s is not None}
    if len(levels) > 1:
        raise ParameterError(f"levels differ ({source} -> {target}); convert through standard first")
    s = levels.pop() if levels else 1
    entry = _matrix_entry(source, target)
    entries = tuple(tuple(entry(n, k, s) if k <= n else 0 for k in range(size)) for n in range(size))
    return TransitionMatrix(source, target, entries)


def convert(p: Polynomial, target: BasisTag) -> Polynomial:
    """Re-express ``p`` in ``target``; both factorial levels must agree.

    >>> convert(Polynomial.basis_element(rising(2), 4), falling(2)).coeffs
    (0, 100, 140, 28, 1)
    """
    if p.basis == target:
        return p
    m = transition_matrix(p.basis, target, len(p.coeffs))
    out = [0] * len(p.coeffs)
    for n, c in enumerate(p.coeffs):
        if c:
            row = m.entries[n]
            for k in range(n + 1):
                out[k] += c * row[k]
    return Polynomial(target, tuple(out))


def derivative(p: Polynomial, order: int = 1) -> Polynomial:
    if p.basis != STANDARD:
        raise ParameterError(f"derivative needs a standard-basis polynomial, got {p.basis}; convert first")
    if order < 0:
        raise ParameterError("derivative order must be >= 0")
    coeffs = p.coeffs
    for _ in range(order):
        coeffs = tuple(i * c for i, c in enumerate(coeffs))[1:]
    return Polynomial(STANDARD, coeffs)


def _check_n(n, least=1):
    if not isinstance(n, int) or n < least:
        raise ParameterError(f"n must be an integer >= {least}, got {n!r}")


def _stirling2(j, i):
    return stirling2_hl(j, i, 1)


def _theta_power(p: Polynomial, s: int) -> Polynomial:
    # sum_{i=0}^{s} S(s, i) x^i d^i/dx^i p, with S the ordinary Stirling
    # numbers of the second kind
    out = Polynomial.zero()
    for i in range(s + 1):
        w = _stirling2(s, i)
        if w:
            out = out + w * derivative(p, i).shift(i)
    return out


def row_poly_hl(n: int, s: int) -> Polynomial:
    """Row polynomial ``sum_k lah_higher_level(n, k, s) x**k``."""
    check_level(s)
    _check_n(n)
    return Polynomial.standard(lah_higher_level(n, k, s) for k in range(n + 1))


def row_poly_hl_step(L_n: Polynomial, n: int, s: int) -> Polynomial:
    """Next level-``s`` Lah row polynomial from ``L_n`` alone.

    ``x L_n + sum_{i=1}^{s} S(s, i) x^(i-n) d^i/dx^i (x^n L_n)``; the
    negative powers of ``x`` are exact divisions.
    """
    check_level(s)
    _check_n(n)
    out = L_n.shift(1)
    lifted = L_n.shift(n)
    for i in range(1, s + 1):
        term = derivative(lifted, i)
        term = term.shift(i - n) if i >= n else term.divide_by_x_power(n - i)
        out = out + _stirling2(s, i) * term
    return out


def q_poly(n: int, s: int) -> Polynomial:
    return row_poly_hl(n, s).shift(n)


def q_step(Q_n: Polynomial, n: int, s: int) -> Polynomial:
    """``x^2 Q_n + sum_{i=1}^{s} S(s, i) x^(i+1) d^i/dx^i Q_n``."""
    check_level(s)
    _check_n(n)
    out = Q_n.shift(2)
    for i in range(1, s + 1):
        out = out + _stirling2(s, i) * derivative(Q_n, i).shift(i + 1)
    return out


def _form(form):
    if form not in ("definition", "derivative"):
        raise ParameterError(f"form must be 'definition' or 'derivative', got {form!r}")
    return form


def a_poly(n: int, s: int, form: str = "definition") -> Polynomial:
    check_level(s)
    _check_n(n)
    if _form(form) == "definition":
        coeffs = [0] * (2 * n + 1)
        for k in range(n + 1):
            coeffs[n + k] = (n + k) ** s * lah_higher_level(n, k, s)
        return Polynomial.standard(coeffs)
    return _theta_power(q_poly(n, s), s)


def lah_order_poly(n: int, s: int) -> Polynomial:
    """Row polynomial ``sum_k lah_order(n, k, s) x**k``."""
    check_level(s)
    _check_n(n)
    return Polynomial.standard(lah_order(n, k, s) for k in range(n + 1))


def b_poly(n: int, s: int, form: str = "definition") -> Polynomial:
    check_level(s)
    _check_n(n)
    if _form(form) == "definition":
        return Polynomial.standard(k**s * lah_order(n, k, s) for k in range(n + 1))
    return _theta_power(lah_order_poly(n, s), s)


def lah_order_poly_step(P_n: Polynomial, n: int, s: int) -> Polynomial:
    """``x P_n + n^s P_n + B_n``, with ``B_n`` taken from ``P_n`` by differentiation."""
    check_level(s)
    _check_n(n)
    return P_n.shift(1) + n**s * P_n + _theta_power(P_n, s)


def lr_row_poly(n: int, s: int, r: int) -> Polynomial:
    """Row polynomial ``sum_k lr_lah(n, k, s, r) x**k`` for ``n >= max(r, 1)``."""
    check_level(s)
    _check_n(n, max(r, 1))
    return Polynomial.standard(lr_lah(n, k, s, r) for k in range(n + 1))


def lr_row_poly_step(L_n: Polynomial, n: int, s: int) -> Polynomial:
    """``x L_n + sum_j C(s, j) n^(s-j) sum_i S(j, i) x^i d^i/dx^i L_n``.

    The step does not depend on ``r``; it enters only through the seed row.
    """
    check_level(s)
    _check_n(n)
    out = L_n.shift(1)
    for j in range(s + 1):
        out = out + comb(s, j) * n ** (s - j) * _theta_power(L_n, j)
    return out
