"""Exact coefficient tower used by every other module.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), on top of
which sit sparse multivariate polynomials, their fraction field, Laurent
polynomials in one distinguished variable, and dual numbers for first-order
derivatives.  All values are immutable and all arithmetic is exact; nothing
in this package ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


class UnsupportedRingError(TypeError):
    """Raised when an operation needs a field but got a mere ring."""


def _is_rat(x) -> bool:
    return isinstance(x, (int, Fraction))


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    # gcd on rationals: gcd of numerators over lcm of denominators
    num = gcd(a.numerator, b.numerator)
    den = (a.denominator * b.denominator) // gcd(a.denominator, b.denominator)
    return Fraction(num, den)


class MultiPoly:
    """Sparse multivariate polynomial over the rationals.

    ``vars`` is a sorted tuple of variable names and ``terms`` maps exponent
    tuples (aligned with ``vars``) to nonzero ``Fraction`` coefficients.
    Construction normalizes: zero coefficients are dropped and variables that
    appear in no term are pruned, so equal polynomials compare equal
    structurally.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[tuple, Rat] | None = None):
        vs = tuple(vars)
        tm = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != len(vs):
                    raise ValueError("exponent/variable length mismatch")
                tm[exp] = tm.get(exp, Fraction(0)) + c
        # prune unused variables and sort the remaining ones
        used = [i for i in range(len(vs)) if any(e[i] for e in tm)]
        if len(used) < len(vs) or list(vs) != sorted(vs):
            names = sorted(vs[i] for i in used)
            order = [vs.index(nm) for nm in names]
            tm = {tuple(e[i] for i in order): c for e, c in tm.items() if c != 0}
            vs = tuple(names)
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", {e: c for e, c in tm.items() if c != 0})

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c: Rat) -> "MultiPoly":
        c = Fraction(c)
        return cls((), {(): c} if c != 0 else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        if self.vars:
            raise ValueError("not a constant polynomial")
        return self.terms.get((), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    # -- alignment of variable sets -------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        names = sorted(set(self.vars) | set(other.vars))

        def remap(p):
            idx = [p.vars.index(nm) if nm in p.vars else None for nm in names]
            out = {}
            for e, c in p.terms.items():
                out[tuple(e[i] if i is not None else 0 for i in idx)] = c
            return out

        return tuple(names), remap(self), remap(other)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if _is_rat(other):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        vs, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if _is_rat(other):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_rat(other):
            if other == 0:
                return MultiPoly(self.vars, {})
            c0 = Fraction(other)
            return MultiPoly(self.vars, {e: c * c0 for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        vs, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(vs, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_rat(other):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def coeff(self, assignment: Mapping[str, int]) -> Fraction:
        """Coefficient of the monomial with the given exponents (others 0)."""
        exp = tuple(assignment.get(nm, 0) for nm in self.vars)
        for nm, e in assignment.items():
            if e and nm not in self.vars:
                return Fraction(0)
        return self.terms.get(exp, Fraction(0))

    def coeffs_in(self, name: str) -> dict:
        """View this polynomial as univariate in ``name``: degree -> MultiPoly."""
        if name not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1 :]
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            re = e[:i] + e[i + 1 :]
            buckets.setdefault(e[i], {})[re] = c
        return {d: MultiPoly(rest, t) for d, t in sorted(buckets.items())}

    def split_linear(self, unknowns: Iterable[str]):
        """Split a polynomial linear in ``unknowns`` as (constant part, {u: coeff}).

        Raises ValueError if any term has total degree >= 2 in the unknowns.
        """
        unk = list(unknowns)
        pos = {nm: self.vars.index(nm) for nm in unk if nm in self.vars}
        const_terms: dict[tuple, Fraction] = {}
        lin: dict[str, dict] = {nm: {} for nm in unk}
        for e, c in self.terms.items():
            deg = sum(e[i] for i in pos.values())
            if deg == 0:
                const_terms[e] = c
            elif deg == 1:
                nm = next(n for n, i in pos.items() if e[i])
                re = tuple(0 if i == pos[nm] else x for i, x in enumerate(e))
                lin[nm][re] = c
            else:
                raise ValueError("polynomial is not linear in the unknowns")
        const = MultiPoly(self.vars, const_terms)
        return const, {nm: MultiPoly(self.vars, t) for nm, t in lin.items()}

    def substitute(self, values: Mapping[str, object]):
        """Substitute ring values for variables; unmentioned variables remain."""
        keep = [nm for nm in self.vars if nm not in values]
        acc = None
        for e, c in self.terms.items():
            term = MultiPoly(tuple(keep), {tuple(e[self.vars.index(nm)] for nm in keep): c})
            for nm, val in values.items():
                if nm in self.vars:
                    k = e[self.vars.index(nm)]
                    if k:
                        term = term * (val ** k if not _is_rat(val) else Fraction(val) ** k)
            acc = term if acc is None else acc + term
        if acc is None:
            return MultiPoly.const(0)
        return acc

    # -- comparison / formatting ---------------------------------------

    def __eq__(self, other):
        if _is_rat(other):
            return (not self.vars) and self.terms.get((), Fraction(0)) == other
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if not self.vars:  # constants hash like their rational value
            return hash(self.terms.get((), Fraction(0)))
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"{nm}^{k}" if k > 1 else nm for nm, k in zip(self.vars, e) if k
            )
            if mono:
                parts.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts)


def as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if _is_rat(x):
        return MultiPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")


class FracElem:
    """Element of the fraction field of the polynomial ring.

    Equality is decided by cross-multiplication; no polynomial GCDs are
    computed.  The only normalization is cheap: zero numerators reset the
    denominator, constant denominators are folded into the numerator, and
    common monomial/content factors are stripped (which keeps powers of a
    single inverted symbol from accumulating).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = as_poly(num)
        den = as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = MultiPoly.const(1)
        elif den.is_constant:
            num = num * (Fraction(1) / den.constant_value())
            den = MultiPoly.const(1)
        else:
            num, den = _strip_common(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("FracElem is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def reciprocal(self) -> "FracElem":
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return FracElem(self.den, self.num)

    def __add__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return FracElem(self.num + other.num, self.den)
        return FracElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FracElem(-self.num, self.den)

    def __sub__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return FracElem(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        return FracElem(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    # cross-multiplied equality admits no cheap hash-compatible invariant
    __hash__ = None

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return f"({self.num})/({self.den})"


def _as_frac(x):
    if isinstance(x, FracElem):
        return x
    if isinstance(x, MultiPoly) or _is_rat(x):
        return FracElem(x)
    return NotImplemented


def _strip_common(num: MultiPoly, den: MultiPoly):
    """Divide out the common monomial and rational content of num and den."""
    vs, a, b = num._aligned(den)
    exps = list(a) + list(b)
    mono = tuple(min(e[i] for e in exps) for i in range(len(vs)))
    coeffs = list(a.values()) + list(b.values())
    content = coeffs[0]
    for c in coeffs[1:]:
        content = _frac_gcd(content, c)
        if content == 1:
            break
    if content == 0:
        content = Fraction(1)
    if not any(mono) and content == 1:
        return num, den
    inv = Fraction(1) / content

    def strip(tm):
        return {tuple(x - m for x, m in zip(e, mono)): c * inv for e, c in tm.items()}

    return MultiPoly(vs, strip(a)), MultiPoly(vs, strip(b))


class LaurentPoly:
    """Laurent polynomial in one distinguished variable.

    Coefficients are ``MultiPoly`` values (other variables ride along in
    them), keyed by possibly negative integer exponents.  Finitely many
    coefficients are nonzero.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Mapping[int, object] | None = None):
        cs = {}
        if coeffs:
            for k, c in coeffs.items():
                c = as_poly(c)
                if not c.is_zero:
                    if var in c.vars:
                        raise ValueError(f"coefficient contains the Laurent variable {var!r}")
                    cs[int(k)] = c
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def const(cls, var: str, c) -> "LaurentPoly":
        return cls(var, {0: c})

    @classmethod
    def term(cls, var: str, exponent: int, coeff=1) -> "LaurentPoly":
        return cls(var, {exponent: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def ord(self) -> int:
        """Minimal exponent with nonzero coefficient."""
        if not self.coeffs:
            raise ValueError("ord of the zero Laurent polynomial is undefined")
        return min(self.coeffs)

    @property
    def is_regular(self) -> bool:
        """No negative exponents (the zero polynomial counts as regular)."""
        return all(k >= 0 for k in self.coeffs)

    def coefficient(self, k: int) -> MultiPoly:
        return self.coeffs.get(k, MultiPoly.const(0))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                if other.is_zero:
                    return LaurentPoly(self.var, {})
                raise ValueError(f"mixed Laurent variables {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, MultiPoly) or _is_rat(other):
            return LaurentPoly(self.var, {0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in o.coeffs.items():
            s = out.get(k, MultiPoly.const(0)) + c
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentPoly(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, MultiPoly] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in o.coeffs.items():
                k = k1 + k2
                s = out.get(k, MultiPoly.const(0)) + c1 * c2
                if s.is_zero:
                    out.pop(k, None)
                else:
                    out[k] = s
        return LaurentPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.const(self.var, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def substitute_power(self, new_var: str, power: int) -> "LaurentPoly":
        """Replace the Laurent variable v by new_var**power (power may be negative)."""
        if power == 0:
            raise ValueError("power must be nonzero")
        return LaurentPoly(new_var, {k * power: c for k, c in self.coeffs.items()})

    def substitute_coeff_var(self, name: str, value) -> "LaurentPoly":
        """Substitute a value for a variable living inside the coefficients."""
        return LaurentPoly(
            self.var, {k: c.substitute({name: value}) for k, c in self.coeffs.items()}
        )

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if set(self.coeffs) <= {0}:  # constants hash like their coefficient
            return hash(self.coeffs.get(0, MultiPoly.const(0)))
        return hash((self.var, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            cs = repr(c) if c.is_constant else f"({c!r})"
            if k == 0:
                parts.append(cs)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(parts)


class Dual:
    """Dual number a + eps*b with eps^2 = 0, over any commutative base ring.

    Multiplying two duals keeps exactly the first-order term, which is how
    derivatives of polynomial maps are extracted without symbolic machinery.
    """

    __slots__ = ("re", "eps")

    def __init__(self, re, eps=0):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "eps", eps)

    def __setattr__(self, *a):
        raise AttributeError("Dual is immutable")

    @property
    def is_zero(self) -> bool:
        def z(x):
            return x == 0 if _is_rat(x) else x.is_zero

        return z(self.re) and z(self.eps)

    def _coerce(self, other):
        if isinstance(other, Dual):
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            return Dual(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Dual(self.re + o.re, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.re, -self.eps)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Dual(self.re - o.re, self.eps - o.eps)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Dual(self.re * o.re, self.re * o.eps + self.eps * o.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.eps == o.eps

    def __repr__(self):
        return f"({self.re!r} + eps*{self.eps!r})"
