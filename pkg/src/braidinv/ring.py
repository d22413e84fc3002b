"""Exact Laurent polynomials over the integers in one (``t``) and two (``s``, ``t``) variables.

Both types are immutable and canonical: zero coefficients are never stored,
so two values are equal exactly when their coefficient maps are equal.
Units of ``Z[t^±1]`` are ``±t^k`` and units of ``Z[s^±1, t^±1]`` are
``±s^j t^k``; :func:`normalize` and :func:`normalize_bivariate` pick one
representative per unit class.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import _dense
from ._dense import ZZ, ZZ_POLY

__all__ = [
    "LaurentPoly",
    "BiLaurentPoly",
    "PolynomialSyntaxError",
    "ZeroEvaluationPoint",
    "NotDivisible",
    "evaluate",
    "gcd",
    "gcd_many",
    "gcd_bivariate",
    "gcd_bivariate_many",
    "normalize",
    "normalize_bivariate",
    "unit_equal",
    "unit_equal_bivariate",
    "exact_divide",
    "exact_divide_bivariate",
    "divides",
]


class PolynomialSyntaxError(ValueError):
    """Raised when a polynomial string cannot be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroEvaluationPoint(ZeroDivisionError):
    """Evaluation at 0 of a polynomial with negative exponents."""


class NotDivisible(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


# ---------------------------------------------------------------------------
# text form


def _format_term(coeff: int, monomial: str) -> tuple[bool, str]:
    negative = coeff < 0
    c = abs(coeff)
    if not monomial:
        body = str(c)
    elif c == 1:
        body = monomial
    else:
        body = f"{c}*{monomial}"
    return negative, body


def _join_terms(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ["-" + body if neg else body]
    for neg, body in terms[1:]:
        out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class _TermParser:
    # Grammar: poly := ['+'|'-'] term (('+'|'-') term)*
    #          term := [int] ['*'] factor ('*'? factor)* | int
    #          factor := var ['^' (int | '(' int ')')]
    _token = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|([+\-])|(\*)|(\()|(\)))")

    def __init__(self, text: str, variables: str):
        self.text = text
        self.variables = variables
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        while True:
            while self.pos < len(text) and text[self.pos].isspace():
                self.pos += 1
            if self.pos >= len(text):
                break
            m = self._token.match(text, self.pos)
            if m is None:
                raise PolynomialSyntaxError(f"unexpected character {text[self.pos]!r}", self.pos)
            kind = ("int", "var", "^", "sign", "*", "(", ")")[m.lastindex - 1]
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
            self.pos = m.end()
        self.i = 0

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _take(self, kind: str) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None or tok[0] != kind:
            where = tok[2] if tok else len(self.text)
            raise PolynomialSyntaxError(f"expected {kind}", where)
        self.i += 1
        return tok

    def _signed_int(self) -> int:
        tok = self._peek()
        sign = 1
        if tok and tok[0] == "sign":
            self.i += 1
            sign = -1 if tok[1] == "-" else 1
        return sign * int(self._take("int")[1])

    def parse(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        if not self.tokens:
            raise PolynomialSyntaxError("empty polynomial", 0)
        first = True
        while self._peek() is not None:
            tok = self._peek()
            sign = 1
            if tok[0] == "sign":
                sign = -1 if tok[1] == "-" else 1
                self.i += 1
            elif not first:
                raise PolynomialSyntaxError("expected '+' or '-'", tok[2])
            first = False
            coeff, exps = self._term()
            out[exps] = out.get(exps, 0) + sign * coeff
        return {k: v for k, v in out.items() if v != 0}

    def _term(self) -> tuple[int, tuple[int, ...]]:
        exps = [0] * len(self.variables)
        coeff = 1
        tok = self._peek()
        have_factor = False
        if tok and tok[0] == "int":
            coeff = int(tok[1])
            self.i += 1
            have_factor = True
            tok = self._peek()
            if tok and tok[0] == "*":
                self.i += 1
                tok = self._peek()
                if tok is None or tok[0] != "var":
                    raise PolynomialSyntaxError("expected variable after '*'", tok[2] if tok else len(self.text))
        while True:
            tok = self._peek()
            if tok and tok[0] == "*" and have_factor:
                self.i += 1
                tok = self._peek()
                if tok is None or tok[0] != "var":
                    raise PolynomialSyntaxError("expected variable after '*'", tok[2] if tok else len(self.text))
            if tok is None or tok[0] != "var":
                break
            if tok[1] not in self.variables:
                raise PolynomialSyntaxError(f"unknown variable {tok[1]!r}", tok[2])
            self.i += 1
            k = 1
            nxt = self._peek()
            if nxt and nxt[0] == "^":
                self.i += 1
                nxt = self._peek()
                if nxt and nxt[0] == "(":
                    self.i += 1
                    k = self._signed_int()
                    self._take(")")
                else:
                    k = self._signed_int()
            exps[self.variables.index(tok[1])] += k
            have_factor = True
        if not have_factor:
            tok = self._peek()
            raise PolynomialSyntaxError("expected a term", tok[2] if tok else len(self.text))
        return coeff, tuple(exps)


# ---------------------------------------------------------------------------
# univariate


Scalar = Union[int, Fraction]


class LaurentPoly:
    """An element of ``Z[t^±1]`` stored as a map exponent -> nonzero coefficient."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        acc: dict[int, int] = {}
        for k, c in items:
            acc[int(k)] = acc.get(int(k), 0) + int(c)
        self._coeffs = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._hash = None

    # construction

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def t(cls, k: int = 1) -> LaurentPoly:
        return cls({k: 1})

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def coerce(cls, value: LaurentPoly | int) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        terms = _TermParser(text, "t").parse()
        return cls({e[0]: c for e, c in terms.items()})

    @classmethod
    def _from_dense(cls, dense: tuple, shift: int = 0) -> LaurentPoly:
        return cls({i + shift: c for i, c in enumerate(dense)})

    def _to_dense(self) -> tuple[tuple, int]:
        """Return ``(coefficients, valuation)`` with ``self = t^valuation * poly``."""
        if not self._coeffs:
            return (), 0
        v = self.valuation
        out = [0] * (self.degree - v + 1)
        for k, c in self._coeffs.items():
            out[k - v] = c
        return tuple(out), v

    # inspection

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return next(reversed(self._coeffs))

    @property
    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no valuation")
        return next(iter(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {0}

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1 and abs(next(iter(self._coeffs.values()))) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._coeffs.get(0, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # arithmetic

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, int] = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                acc[i + j] = acc.get(i + j, 0) + a * b
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            return self.unit_inverse() ** (-e)
        result = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def unit_inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit of Z[t^±1]")
        (k, c), = self._coeffs.items()
        return LaurentPoly({-k: c})

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``t -> t^-1``."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def __call__(self, value: Scalar) -> Scalar:
        return evaluate(self, value)

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __str__(self) -> str:
        terms = [_format_term(c, _power("t", k)) for k, c in reversed(self._coeffs.items())]
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def evaluate(p: LaurentPoly, value: Scalar) -> Scalar:
    """Exact value of ``p`` at ``t = value``; integral results come back as ``int``."""
    if value == 0:
        if any(k < 0 for k in p._coeffs):
            raise ZeroEvaluationPoint("t = 0 is not allowed for negative exponents")
        return p._coeffs.get(0, 0)
    v = Fraction(value)
    total = sum((c * v**k for k, c in p._coeffs.items()), Fraction(0))
    return int(total) if total.denominator == 1 else total


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Unit-class representative: no negative exponents, nonzero constant term, positive leading coefficient."""
    if p.is_zero():
        return p
    q = p.shift(-p.valuation)
    return -q if q.coefficient(q.degree) < 0 else q


def unit_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    return normalize(LaurentPoly.coerce(p)) == normalize(LaurentPoly.coerce(q))


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Generator of the ideal ``(p, q)`` of ``Z[t^±1]``, normalized; ``gcd(0, 0) == 0``."""
    a, _ = LaurentPoly.coerce(p)._to_dense()
    b, _ = LaurentPoly.coerce(q)._to_dense()
    return normalize(LaurentPoly._from_dense(_dense.gcd(ZZ, a, b)))


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    g = LaurentPoly.zero()
    for p in polys:
        g = gcd(g, p)
        if g == 1:
            break
    return g


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``p == q * r``; raise :class:`NotDivisible` otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero")
    if p.is_zero():
        return p
    a, va = p._to_dense()
    b, vb = q._to_dense()
    r = _dense.exact_div(ZZ, a, b)
    if r is None:
        raise NotDivisible(f"{q} does not divide {p}")
    return LaurentPoly._from_dense(r, va - vb)


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    if q.is_zero():
        return p.is_zero()
    try:
        exact_divide(p, q)
    except NotDivisible:
        return False
    return True


# ---------------------------------------------------------------------------
# bivariate


class BiLaurentPoly:
    """An element of ``Z[s^±1, t^±1]`` as a map ``(s_exp, t_exp)`` -> nonzero coefficient."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + int(c)
        self._coeffs = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._hash = None

    @classmethod
    def zero(cls) -> BiLaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> BiLaurentPoly:
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> BiLaurentPoly:
        return cls({(0, 0): c})

    @classmethod
    def s(cls, k: int = 1) -> BiLaurentPoly:
        return cls({(k, 0): 1})

    @classmethod
    def t(cls, k: int = 1) -> BiLaurentPoly:
        return cls({(0, k): 1})

    @classmethod
    def monomial(cls, c: int, s_exp: int, t_exp: int) -> BiLaurentPoly:
        return cls({(s_exp, t_exp): c})

    @classmethod
    def coerce(cls, value) -> BiLaurentPoly:
        if isinstance(value, BiLaurentPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        if isinstance(value, LaurentPoly):
            return cls({(0, k): c for k, c in value.items()})
        raise TypeError(f"cannot interpret {value!r} as a bivariate Laurent polynomial")

    @classmethod
    def from_univariate_in_st(cls, p: LaurentPoly) -> BiLaurentPoly:
        """Substitute ``t -> s*t`` into a univariate polynomial."""
        return cls({(k, k): c for k, c in p.items()})

    @classmethod
    def parse(cls, text: str) -> BiLaurentPoly:
        return cls(_TermParser(text, "st").parse())

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1 and abs(next(iter(self._coeffs.values()))) == 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other):
        try:
            other = BiLaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return BiLaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> BiLaurentPoly:
        return BiLaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = BiLaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return BiLaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = BiLaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self._coeffs.items():
            for (i2, j2), b in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + a * b
        return BiLaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiLaurentPoly:
        if e < 0:
            return self.unit_inverse() ** (-e)
        result = BiLaurentPoly.one()
        for _ in range(e):
            result = result * self
        return result

    def unit_inverse(self) -> BiLaurentPoly:
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit of Z[s^±1, t^±1]")
        ((i, j), c), = self._coeffs.items()
        return BiLaurentPoly({(-i, -j): c})

    def shift(self, s_exp: int, t_exp: int) -> BiLaurentPoly:
        return BiLaurentPoly({(i + s_exp, j + t_exp): c for (i, j), c in self._coeffs.items()})

    def specialize_s(self, value: int = 1) -> LaurentPoly:
        """Substitute ``s = value`` (an integer; ``±1`` when negative exponents occur)."""
        acc: dict[int, int] = {}
        for (i, j), c in self._coeffs.items():
            if i < 0 and abs(value) != 1:
                raise NotDivisible("s must be a unit when negative s-exponents occur")
            factor = value**i if i >= 0 else value ** (-i)
            acc[j] = acc.get(j, 0) + c * factor
        return LaurentPoly(acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = BiLaurentPoly.coerce(other)
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def _ordered_terms(self):
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)

    def __str__(self) -> str:
        terms = []
        for (i, j), c in self._ordered_terms():
            mono = "*".join(x for x in (_power("s", i), _power("t", j)) if x)
            terms.append(_format_term(c, mono))
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"BiLaurentPoly('{self}')"

    # dense Z[s][t] view, valid after shifting to nonnegative exponents

    def _to_dense(self) -> tuple[tuple, int, int]:
        if not self._coeffs:
            return (), 0, 0
        smin = min(i for i, _ in self._coeffs)
        tmin = min(j for _, j in self._coeffs)
        tdeg = max(j for _, j in self._coeffs) - tmin
        rows: list[dict[int, int]] = [dict() for _ in range(tdeg + 1)]
        for (i, j), c in self._coeffs.items():
            rows[j - tmin][i - smin] = c
        dense = []
        for row in rows:
            if row:
                coeff = [0] * (max(row) + 1)
                for i, c in row.items():
                    coeff[i] = c
                dense.append(tuple(coeff))
            else:
                dense.append(())
        return tuple(dense), smin, tmin

    @classmethod
    def _from_dense(cls, dense: tuple, s_shift: int = 0, t_shift: int = 0) -> BiLaurentPoly:
        return cls(
            {(i + s_shift, j + t_shift): c for j, row in enumerate(dense) for i, c in enumerate(row)}
        )


def normalize_bivariate(p: BiLaurentPoly) -> BiLaurentPoly:
    """Unit-class representative: smallest s- and t-exponents are 0 and the
    term that prints first (largest ``(t_exp, s_exp)``) has a positive coefficient."""
    if p.is_zero():
        return p
    smin = min(i for i, _ in p._coeffs)
    tmin = min(j for _, j in p._coeffs)
    q = p.shift(-smin, -tmin)
    lead = q._ordered_terms()[0][1]
    return -q if lead < 0 else q


def unit_equal_bivariate(p: BiLaurentPoly, q: BiLaurentPoly) -> bool:
    return normalize_bivariate(BiLaurentPoly.coerce(p)) == normalize_bivariate(BiLaurentPoly.coerce(q))


def gcd_bivariate(p: BiLaurentPoly, q: BiLaurentPoly) -> BiLaurentPoly:
    """A gcd in the UFD ``Z[s^±1, t^±1]``, normalized by :func:`normalize_bivariate`."""
    a, _, _ = BiLaurentPoly.coerce(p)._to_dense()
    b, _, _ = BiLaurentPoly.coerce(q)._to_dense()
    return normalize_bivariate(BiLaurentPoly._from_dense(_dense.gcd(ZZ_POLY, a, b)))


def gcd_bivariate_many(polys: Iterable[BiLaurentPoly]) -> BiLaurentPoly:
    g = BiLaurentPoly.zero()
    for p in polys:
        g = gcd_bivariate(g, p)
        if g == 1:
            break
    return g


def exact_divide_bivariate(p: BiLaurentPoly, q: BiLaurentPoly) -> BiLaurentPoly:
    if q.is_zero():
        raise ZeroDivisionError("division by zero")
    if p.is_zero():
        return p
    a, sa, ta = p._to_dense()
    b, sb, tb = q._to_dense()
    r = _dense.exact_div(ZZ_POLY, a, b)
    if r is None:
        raise NotDivisible(f"{q} does not divide {p}")
    return BiLaurentPoly._from_dense(r, sa - sb, ta - tb)


def divides_bivariate(q: BiLaurentPoly, p: BiLaurentPoly) -> bool:
    if q.is_zero():
        return p.is_zero()
    try:
        exact_divide_bivariate(p, q)
    except NotDivisible:
        return False
    return True
