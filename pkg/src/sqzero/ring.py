"""
Exact Laurent polynomials and rational functions in ``u, t1..tn, y``.

A value is tied to a :class:`VariableContext`.  Polynomial arithmetic
(products, gcds, exact quotients, composition) runs on FLINT's sparse
``fmpz_mpoly``; this module owns everything around it: Laurent shifts,
the unique normal form of fractions, the permutation action on the
t-variables, substitution, homogeneous parts, and text/LaTeX/JSON I/O.

Normal forms
------------
``LaurentPoly`` stores ``x^shift * P`` where ``P`` is a FLINT polynomial
not divisible by any variable.  ``RatFunc`` stores ``num/den`` with
``gcd(num, den)`` a unit and the leading coefficient of ``den`` positive
under the canonical order (total degree descending, then lexicographic on
``(u, t1..tn, y)``).  In Laurent contexts monomials are units, so ``den``
never carries a monomial factor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

import flint
from flint.utils.flint_exceptions import DomainError as _FlintDomainError

__all__ = [
    "VariableContext", "LaurentPoly", "RatFunc",
    "ContextMismatch", "NotDivisible", "DenominatorVanishes",
    "add", "mul", "exact_div", "gcd", "act_permutation", "substitute",
    "homogeneous_component", "parse",
]


class ContextMismatch(ValueError):
    """Operands live in different variable contexts."""


class NotDivisible(ArithmeticError):
    """An exact division left a remainder."""


class DenominatorVanishes(ZeroDivisionError):
    """A substitution sent a denominator to zero."""


@dataclass(frozen=True)
class VariableContext:
    """
    The variables ``u, t1..tn, y`` of one computation.

    ``laurent`` allows negative exponents (K-theory); ``t_names`` only
    changes how the t-variables are printed and parsed (``x1``, ``z1``,
    ``γ1``, ...), never their position in the exponent vector.
    """
    n: int
    has_u: bool = True
    has_y: bool = False
    laurent: bool = False
    t_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one t-variable, got n={self.n}")
        if self.t_names is not None and len(self.t_names) != self.n:
            raise ValueError("t_names must name exactly n variables")

    @cached_property
    def names(self) -> tuple[str, ...]:
        ts = self.t_names or tuple(f"t{i}" for i in range(1, self.n + 1))
        return ("u",) * self.has_u + ts + ("y",) * self.has_y

    @property
    def nvars(self) -> int:
        return self.n + self.has_u + self.has_y

    @property
    def u_index(self) -> int | None:
        return 0 if self.has_u else None

    @property
    def y_index(self) -> int | None:
        return self.nvars - 1 if self.has_y else None

    def t_index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"t{i} out of range for n={self.n}")
        return i - 1 + self.has_u

    def index_of(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}; have {self.names}") from None

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {nm: k for k, nm in enumerate(self.names)}

    @cached_property
    def flint(self):
        # FLINT names must be ASCII; printing uses self.names instead.
        return flint.fmpz_mpoly_ctx.get(
            tuple(f"v{k}" for k in range(self.nvars)), "deglex")

    def renamed(self, t_names: Sequence[str] | None) -> "VariableContext":
        return VariableContext(self.n, self.has_u, self.has_y, self.laurent,
                               None if t_names is None else tuple(t_names))


def _check(a: "VariableContext", b: "VariableContext"):
    if a != b:
        raise ContextMismatch(f"{a.names} vs {b.names}")


def _zero_shift(ctx):
    return (0,) * ctx.nvars


def _mono(ctx, exps):
    return ctx.flint.term(1, tuple(exps))


class LaurentPoly:
    """``x^shift * P`` with ``P`` an integer polynomial free of monomial factors."""

    __slots__ = ("ctx", "_p", "_s")

    def __init__(self, ctx: VariableContext, poly=None, shift=None):
        fctx = ctx.flint
        p = fctx.from_dict({}) if poly is None else poly
        s = _zero_shift(ctx) if shift is None else tuple(shift)
        if p.is_zero():
            s = _zero_shift(ctx)
        else:
            e = p.term_content().monoms()[0]
            if any(e):
                p = p / _mono(ctx, e)
                s = tuple(a + b for a, b in zip(s, e))
            if not ctx.laurent and min(s) < 0:
                raise ValueError("negative exponent in a polynomial context")
        self.ctx = ctx
        self._p = p
        self._s = s

    # -- constructors --------------------------------------------------

    @classmethod
    def from_dict(cls, ctx: VariableContext, terms: Mapping[Sequence[int], int]):
        terms = {tuple(e): c for e, c in terms.items() if c}
        if not terms:
            return cls(ctx)
        for e in terms:
            if len(e) != ctx.nvars:
                raise ValueError(f"exponent vector {e} has wrong length")
        low = tuple(min(col) for col in zip(*terms))
        shifted = {tuple(a - b for a, b in zip(e, low)): c for e, c in terms.items()}
        return cls(ctx, ctx.flint.from_dict(shifted), low)

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def constant(cls, ctx, c: int):
        return cls(ctx, ctx.flint.constant(int(c)))

    @classmethod
    def one(cls, ctx):
        return cls.constant(ctx, 1)

    @classmethod
    def monomial(cls, ctx, exps: Sequence[int], coeff: int = 1):
        return cls.from_dict(ctx, {tuple(exps): coeff})

    @classmethod
    def gen(cls, ctx, name: str):
        e = [0] * ctx.nvars
        e[ctx.index_of(name)] = 1
        return cls.monomial(ctx, e)

    @classmethod
    def t(cls, ctx, i: int):
        e = [0] * ctx.nvars
        e[ctx.t_index(i)] = 1
        return cls.monomial(ctx, e)

    @classmethod
    def u(cls, ctx):
        if not ctx.has_u:
            raise KeyError("context has no u")
        return cls.gen(ctx, "u")

    @classmethod
    def y(cls, ctx):
        if not ctx.has_y:
            raise KeyError("context has no y")
        return cls.gen(ctx, "y")

    @classmethod
    def parse(cls, text: str, ctx: VariableContext) -> "LaurentPoly":
        return parse(text, ctx).as_poly()

    # -- inspection ----------------------------------------------------

    def terms(self) -> list[tuple[int, tuple[int, ...]]]:
        """``(coeff, exps)`` pairs in canonical order."""
        s = self._s
        return [(int(c), tuple(int(a) + int(b) for a, b in zip(e, s)))
                for e, c in self._p.terms()]

    def to_dict(self) -> dict[tuple[int, ...], int]:
        return {e: c for c, e in self.terms()}

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.is_constant() and not any(self._s)

    def is_one(self) -> bool:
        return self._p.is_one() and not any(self._s)

    def is_unit(self) -> bool:
        """Invertible in the ring of this context (a monomial with coefficient ±1 in Laurent mode)."""
        if not self._p.is_constant() or abs(int(self._p.leading_coefficient())) != 1:
            return False
        return self.ctx.laurent or not any(self._s)

    def leading_coefficient(self) -> int:
        return int(self._p.leading_coefficient()) if not self.is_zero() else 0

    def total_degree(self) -> int:
        if self.is_zero():
            raise ValueError("degree of the zero polynomial")
        return self._p.total_degree() + sum(self._s)

    def degree_range(self) -> tuple[int, int]:
        degs = [sum(e) for _, e in self.terms()]
        return min(degs), max(degs)

    def degree(self, name: str) -> int:
        k = self.ctx.index_of(name)
        return self._p.degrees()[k] + self._s[k] if not self.is_zero() else 0

    def __len__(self):
        return len(self._p)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            _check(self.ctx, other.ctx)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = tuple(min(a, b) for a, b in zip(self._s, other._s))
        a = self._p * _mono(self.ctx, [x - m for x, m in zip(self._s, low)])
        b = other._p * _mono(self.ctx, [x - m for x, m in zip(other._s, low)])
        return LaurentPoly(self.ctx, a + b, low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ctx, -self._p, self._s)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.ctx, self._p * other, self._s)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly(self.ctx)
        p = LaurentPoly.__new__(LaurentPoly)
        p.ctx = self.ctx
        p._p = self._p * other._p  # product of monomial-free polys is monomial-free
        p._s = tuple(a + b for a, b in zip(self._s, other._s))
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise NotDivisible("negative power of a non-unit")
            c = int(self._p.leading_coefficient())
            return LaurentPoly(self.ctx, self.ctx.flint.constant(c ** (-k)),
                               tuple(k * a for a in self._s))
        return LaurentPoly(self.ctx, self._p ** k, tuple(k * a for a in self._s))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.ctx, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ctx == other.ctx and self._s == other._s and self._p == other._p

    def __hash__(self):
        head = tuple((int(c), e) for e, c in list(self._p.terms())[:4])
        return hash((self.ctx, self._s, len(self._p), head))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return ``q`` with ``self == q * other``; raise :class:`NotDivisible` otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        s = tuple(a - b for a, b in zip(self._s, other._s))
        if not self.ctx.laurent and min(s) < 0:
            raise NotDivisible(f"{other} does not divide {self}")
        try:
            q = self._p / other._p
        except _FlintDomainError:
            raise NotDivisible(f"{other} does not divide {self}") from None
        return LaurentPoly(self.ctx, q, s)

    __floordiv__ = exact_div

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        """Greatest common divisor, positive leading coefficient; monomials are units in Laurent mode."""
        other = self._coerce(other)
        if self.is_zero():
            return other.normalized_sign()
        if other.is_zero():
            return self.normalized_sign()
        g = self._p.gcd(other._p)
        if self.ctx.laurent:
            s = None
        else:
            s = tuple(min(a, b) for a, b in zip(self._s, other._s))
        out = LaurentPoly(self.ctx, g, s)
        return out.normalized_sign()

    def split_unit(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """
        Write ``self = unit * core`` with ``core`` of positive leading
        coefficient; in Laurent mode the monomial part goes into ``unit``.
        """
        if self.is_zero():
            raise ZeroDivisionError("zero has no unit part")
        sign = -1 if self.leading_coefficient() < 0 else 1
        if self.ctx.laurent:
            unit = LaurentPoly(self.ctx, self.ctx.flint.constant(sign), self._s)
            core = LaurentPoly(self.ctx, self._p * sign)
        else:
            unit = LaurentPoly.constant(self.ctx, sign)
            core = self * sign
        return unit, core

    def normalized_sign(self) -> "LaurentPoly":
        return -self if self.leading_coefficient() < 0 else self

    def act(self, sigma) -> "LaurentPoly":
        """Substitute ``t_i -> t_sigma(i)``; ``sigma`` in one-line notation (1-based)."""
        sigma = tuple(getattr(sigma, "one_line", sigma))
        ctx = self.ctx
        if len(sigma) != ctx.n:
            raise ValueError(f"permutation of {len(sigma)} letters acting on n={ctx.n}")
        if self.is_zero():
            return self
        perm = list(range(ctx.nvars))
        for i, si in enumerate(sigma, start=1):
            perm[ctx.t_index(i)] = ctx.t_index(si)
        gens = ctx.flint.gens()
        p = LaurentPoly.__new__(LaurentPoly)
        p.ctx = ctx
        p._p = self._p.compose(*(gens[perm[k]] for k in range(ctx.nvars)))
        s = [0] * ctx.nvars
        for k, e in enumerate(self._s):
            s[perm[k]] = e
        p._s = tuple(s)
        return p

    def homogeneous_component(self, d: int) -> "LaurentPoly":
        return LaurentPoly.from_dict(self.ctx, {e: c for c, e in self.terms() if sum(e) == d})

    def substitute(self, mapping: Mapping[str, object], target: VariableContext | None = None) -> "RatFunc":
        return _substitute_poly(self, mapping, target or self.ctx)

    def as_poly(self) -> "LaurentPoly":
        return self

    # -- rendering -----------------------------------------------------

    def __str__(self):
        return _render(self.terms(), self.ctx.names, latex=False)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_latex(self) -> str:
        return _render(self.terms(), self.ctx.names, latex=True)

    def to_json(self) -> list[dict]:
        ctx = self.ctx
        out = []
        for c, e in self.terms():
            out.append({
                "coeff": str(c),
                "exps": {
                    "u": e[ctx.u_index] if ctx.has_u else 0,
                    "t": [e[ctx.t_index(i)] for i in range(1, ctx.n + 1)],
                    "y": e[ctx.y_index] if ctx.has_y else 0,
                },
            })
        return out


Scalar = Union[int, LaurentPoly, "RatFunc"]


class RatFunc:
    """A fraction ``num/den`` of Laurent polynomials in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("RatFunc(RatFunc, den) is ambiguous; divide instead")
            self.num, self.den = num.num, num.den
            return
        if den is None:
            den = LaurentPoly.one(num.ctx)
        elif isinstance(den, int):
            den = LaurentPoly.constant(num.ctx, den)
        _check(num.ctx, den.ctx)
        self.num, self.den = _normalize(num, den, reduced=False)

    @classmethod
    def _reduced(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        r = cls.__new__(cls)
        r.num, r.den = _normalize(num, den, reduced=True)
        return r

    @classmethod
    def const(cls, ctx, c: int) -> "RatFunc":
        return cls._reduced(LaurentPoly.constant(ctx, c), LaurentPoly.one(ctx))

    @classmethod
    def zero(cls, ctx):
        return cls.const(ctx, 0)

    @classmethod
    def one(cls, ctx):
        return cls.const(ctx, 1)

    @classmethod
    def parse(cls, text: str, ctx: VariableContext) -> "RatFunc":
        return parse(text, ctx)

    @property
    def ctx(self) -> VariableContext:
        return self.num.ctx

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> LaurentPoly:
        """The numerator, when the denominator is trivial; :class:`NotDivisible` otherwise."""
        if not self.den.is_one():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            _check(self.ctx, other.ctx)
            return other
        if isinstance(other, LaurentPoly):
            _check(self.ctx, other.ctx)
            return RatFunc._reduced(other, LaurentPoly.one(self.ctx))
        if isinstance(other, int):
            return RatFunc.const(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFunc(a + c, b)
        g = b.gcd(d)
        if g.is_unit():
            return RatFunc._reduced(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        t = a * d1 + c * b1
        if t.is_zero():
            return RatFunc.zero(self.ctx)
        g2 = t.gcd(g)
        return RatFunc._reduced(t.exact_div(g2), b1 * d.exact_div(g2))

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero(self.ctx)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_unit():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_unit():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFunc._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc._reduced(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._reduced(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def act(self, sigma) -> "RatFunc":
        return RatFunc._reduced(self.num.act(sigma), self.den.act(sigma))

    def substitute(self, mapping: Mapping[str, object], target: VariableContext | None = None) -> "RatFunc":
        target = target or self.ctx
        den = _substitute_poly(self.den, mapping, target)
        if den.is_zero():
            raise DenominatorVanishes(f"denominator {self.den} vanishes under {dict(mapping)}")
        return _substitute_poly(self.num, mapping, target) / den

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_latex(self) -> str:
        if self.den.is_one():
            return self.num.to_latex()
        return rf"\frac{{{self.num.to_latex()}}}{{{self.den.to_latex()}}}"


def _normalize(num: LaurentPoly, den: LaurentPoly, reduced: bool):
    ctx = num.ctx
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return LaurentPoly(ctx), LaurentPoly.one(ctx)
    ns, ds = num._s, den._s
    if ctx.laurent:
        ns = tuple(a - b for a, b in zip(ns, ds))
        ds = _zero_shift(ctx)
    elif any(ds):
        low = tuple(min(a, b) for a, b in zip(ns, ds))
        ns = tuple(a - m for a, m in zip(ns, low))
        ds = tuple(a - m for a, m in zip(ds, low))
    p, q = num._p, den._p
    if not reduced:
        g = p.gcd(q)
        if not g.is_one():
            p, q = p / g, q / g
    if q.leading_coefficient() < 0:
        p, q = -p, -q
    n_out = LaurentPoly.__new__(LaurentPoly)
    n_out.ctx, n_out._p, n_out._s = ctx, p, ns
    d_out = LaurentPoly.__new__(LaurentPoly)
    d_out.ctx, d_out._p, d_out._s = ctx, q, ds
    return n_out, d_out


def _as_ratfunc(value, ctx) -> RatFunc:
    if isinstance(value, RatFunc):
        _check(value.ctx, ctx)
        return value
    if isinstance(value, LaurentPoly):
        _check(value.ctx, ctx)
        return RatFunc._reduced(value, LaurentPoly.one(ctx))
    if isinstance(value, int):
        return RatFunc.const(ctx, value)
    raise TypeError(f"cannot use {value!r} as a substitution image")


def _substitute_poly(p: LaurentPoly, mapping, target: VariableContext) -> RatFunc:
    src = p.ctx
    images: list[RatFunc | None] = []
    for k, name in enumerate(src.names):
        if name in mapping:
            images.append(_as_ratfunc(mapping[name], target))
        elif name in target._name_index:
            images.append(RatFunc._reduced(LaurentPoly.gen(target, name), LaurentPoly.one(target)))
        else:
            images.append(None)
    unknown = set(mapping) - set(src.names)
    if unknown:
        raise KeyError(f"substitution names unknown variables {sorted(unknown)}")
    if p.is_zero():
        return RatFunc.zero(target)
    degs = p._p.degrees()
    for k, img in enumerate(images):
        if img is None and (degs[k] or p._s[k]):
            raise KeyError(f"no image for variable {src.names[k]!r}")

    out = RatFunc.one(target)
    for k, e in enumerate(p._s):
        if e:
            if images[k].is_zero() and e < 0:
                raise DenominatorVanishes(f"{src.names[k]} -> 0 under a negative power")
            out = out * images[k] ** e

    # P(A/B) = sum c prod A^k B^(D-k) / prod B^D, with A, B plain polynomials
    fctx = target.flint
    tops, bots = [], []
    for k, img in enumerate(images):
        if img is None:
            tops.append(fctx.constant(0))
            bots.append(fctx.constant(1))
            continue
        ns, ds = img.num._s, img.den._s
        top = img.num._p * _mono(target, [max(a, 0) for a in ns]) * _mono(target, [max(-a, 0) for a in ds])
        bot = img.den._p * _mono(target, [max(a, 0) for a in ds]) * _mono(target, [max(-a, 0) for a in ns])
        tops.append(top)
        bots.append(bot)
    if all(b.is_one() for b in bots):
        inner = p._p.compose(*tops, ctx=fctx)
        return out * RatFunc(LaurentPoly(target, inner))
    inner = fctx.from_dict({})
    cache_a: dict[tuple[int, int], object] = {}
    cache_b: dict[tuple[int, int], object] = {}

    def power(cache, base, k, e):
        key = (k, e)
        if key not in cache:
            cache[key] = base ** e
        return cache[key]

    for e, c in p._p.terms():
        term = fctx.constant(int(c))
        for k, ek in enumerate(e):
            if degs[k]:
                term = term * power(cache_a, tops[k], k, ek) * power(cache_b, bots[k], k, degs[k] - ek)
        inner = inner + term
    denom = fctx.constant(1)
    for k, d in enumerate(degs):
        if d:
            denom = denom * bots[k] ** d
    if denom.is_zero():
        raise DenominatorVanishes("substitution image has a vanishing denominator")
    return out * RatFunc(LaurentPoly(target, inner), LaurentPoly(target, denom))


# -- module-level operations ---------------------------------------------

def add(a: RatFunc, b: RatFunc) -> RatFunc:
    return a + b


def mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return a * b


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.exact_div(b)


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.gcd(b)


def act_permutation(x, sigma):
    return x.act(sigma)


def substitute(x, mapping, target: VariableContext | None = None) -> RatFunc:
    return x.substitute(mapping, target)


def homogeneous_component(x: LaurentPoly, d: int) -> LaurentPoly:
    return x.homogeneous_component(d)


# -- text rendering --------------------------------------------------------

_GREEK_TEX = {"γ": r"\gamma", "α": r"\alpha", "β": r"\beta", "δ": r"\delta"}
_NAME_RE = re.compile(r"^(\D+?)(\d+)$")


def _tex_name(name: str) -> str:
    m = _NAME_RE.match(name)
    if not m:
        return _GREEK_TEX.get(name, name)
    stem, idx = m.groups()
    return f"{_GREEK_TEX.get(stem, stem)}_{{{idx}}}"


def _render(terms, names, latex: bool) -> str:
    if not terms:
        return "0"
    parts = []
    for c, e in terms:
        factors = []
        for name, k in zip(names, e):
            if k == 0:
                continue
            if latex:
                factors.append(_tex_name(name) + ("" if k == 1 else f"^{{{k}}}"))
            else:
                factors.append(name if k == 1 else f"{name}^{k}")
        body = (" " if latex else "*").join(factors)
        mag = abs(c)
        if not factors:
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = f"{mag}{' ' if latex else '*'}{body}"
        parts.append(("-" if c < 0 else "+", chunk))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, chunk in parts[1:]:
        out += f" {sign} {chunk}"
    return out


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([^\W\d]\w*)|(.))", re.UNICODE)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, ctx: VariableContext):
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"parse error near token {self.i} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "name") or (kind == "op" and val == "(")

    def term(self) -> RatFunc:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                acc = acc / self.factor()
            elif self.starts_factor():
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> RatFunc:
        base = self.primary()
        if self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "("):
                self.take()
                k = self.signed_int()
                self.take("op", ")")
            else:
                k = self.signed_int()
            base = base ** k
        return base

    def signed_int(self) -> int:
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        return sign * int(self.take("num")[1])

    def primary(self) -> RatFunc:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return RatFunc.const(self.ctx, int(val))
        if kind == "name":
            self.take()
            return RatFunc._reduced(LaurentPoly.gen(self.ctx, val), LaurentPoly.one(self.ctx))
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ValueError(f"parse error near token {self.i} in {self.text!r}")


def parse(text: str, ctx: VariableContext) -> RatFunc:
    """Parse ``+ - * / ^``, parentheses, integers and the context's variable names."""
    p = _Parser(text, ctx)
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return out


def product(factors: Iterable[Scalar], ctx: VariableContext):
    """Product of polynomials or fractions; polynomial inputs give a polynomial."""
    acc = LaurentPoly.one(ctx)
    for f in factors:
        acc = acc * f
    return acc
