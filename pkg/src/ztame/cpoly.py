"""
Commutative polynomials over Q in an indexed family of variables.

Two families exist: ``T`` (t0, t1, t2, ...) for coefficient rings of
Formanek forms, and ``Z`` (z1, z2) for z-Jacobians.  Monomials are exponent
tuples indexed by variable index with trailing zeros trimmed; for the ``Z``
family slot 0 is always zero.

The monomial order is graded lexicographic with t0 < t1 < ... (z1 < z2).
GCDs are computed by recursive content/primitive-part splitting with
subresultant pseudo-remainder sequences in the highest-index variable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Callable, Dict, Iterable, Iterator, Mapping, Set, Tuple

from .errors import (
    BothZeroError,
    FamilyMismatchError,
    NegativeIndexError,
    NotDivisibleError,
    ZeroPolynomialError,
)

T = "T"
ZBAR = "Z"

Exp = Tuple[int, ...]


def _trim(e) -> Exp:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exp(a: Exp, b: Exp) -> Exp:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return tuple(out)


def _divides(a: Exp, b: Exp) -> bool:
    """True iff monomial a divides monomial b."""
    if len(a) > len(b):
        return False
    return all(x <= y for x, y in zip(a, b))


def _sub_exp(b: Exp, a: Exp) -> Exp:
    out = list(b)
    for i, v in enumerate(a):
        out[i] -= v
    return _trim(out)


def glex_key(e: Exp):
    return (sum(e), tuple((i, e[i]) for i in range(len(e) - 1, -1, -1) if e[i]))


class CPoly:
    """Immutable commutative polynomial with rational coefficients."""

    __slots__ = ("_terms", "family", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None, family: str = T):
        if family not in (T, ZBAR):
            raise ValueError(f"unknown family {family!r}")
        clean: Dict[Exp, Fraction] = {}
        for e, c in (terms or {}).items():
            e = _trim(e)
            if any(v < 0 for v in e):
                raise NegativeIndexError("negative exponent")
            if family == ZBAR and (len(e) > 3 or (e and e[0] != 0)):
                raise ValueError("z1,z2 polynomials use indices 1 and 2 only")
            c = Fraction(c)
            if c:
                s = clean.get(e, 0) + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e, None)
        self._terms = clean
        self.family = family
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, Fraction], family: str) -> "CPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.family = family
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, family: str = T) -> "CPoly":
        return cls({(): c}, family)

    @classmethod
    def var(cls, index: int, family: str = T) -> "CPoly":
        if index < 0:
            raise NegativeIndexError(f"variable index {index}")
        e = [0] * (index + 1)
        e[index] = 1
        return cls({tuple(e): 1}, family)

    # -- inspection -------------------------------------------------------------
    @property
    def terms(self) -> Dict[Exp, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exp, Fraction]]:
        """Terms from the graded-lex largest down."""
        for e in sorted(self._terms, key=glex_key, reverse=True):
            yield e, self._terms[e]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == () for e in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def indices(self) -> Set[int]:
        return {i for e in self._terms for i, v in enumerate(e) if v}

    def max_index(self) -> int:
        """Largest variable index present, -1 for constants."""
        return max((len(e) - 1 for e in self._terms), default=-1)

    def degree(self) -> float:
        if not self._terms:
            return float("-inf")
        return max(sum(e) for e in self._terms)

    def degree_in(self, index: int) -> int:
        return max((e[index] if index < len(e) else 0 for e in self._terms), default=0)

    def lead(self) -> Tuple[Exp, Fraction]:
        if not self._terms:
            raise ZeroPolynomialError("leading term of zero")
        e = max(self._terms, key=glex_key)
        return e, self._terms[e]

    def leading_form(self) -> "CPoly":
        """Homogeneous component of top total degree."""
        d = self.degree()
        return CPoly._raw({e: c for e, c in self._terms.items() if sum(e) == d}, self.family)

    def monic(self) -> "CPoly":
        if not self._terms:
            return self
        return self.scale(1 / self.lead()[1])

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.family == other.family and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == CPoly.const(other, self.family)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.family, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic -----------------------------------------------------------------
    def _lift(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            if other.family != self.family:
                raise FamilyMismatchError(f"{self.family} vs {other.family}")
            return other
        if isinstance(other, (int, Fraction)):
            return CPoly.const(other, self.family)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CPoly._raw(out, self.family)

    __radd__ = __add__

    def __neg__(self):
        return CPoly._raw({e: -c for e, c in self._terms.items()}, self.family)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CPoly":
        c = Fraction(c)
        if not c:
            return CPoly._raw({}, self.family)
        return CPoly._raw({e: c * v for e, v in self._terms.items()}, self.family)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: Dict[Exp, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return CPoly._raw({e: c for e, c in out.items() if c}, self.family)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = CPoly.const(1, self.family)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self):
        from .parsing import print_c

        return f"CPoly({print_c(self)!r})"

    def __str__(self):
        from .parsing import print_c

        return print_c(self)

    def rename(self, f: Callable[[int], int]) -> "CPoly":
        """Replace each variable t_i by t_f(i)."""
        out: Dict[Exp, Fraction] = {}
        for e, c in self._terms.items():
            new = {}
            for i, v in enumerate(e):
                if v:
                    j = f(i)
                    if j < 0:
                        raise NegativeIndexError(f"index {i} maps to {j}")
                    new[j] = new.get(j, 0) + v
            ne = [0] * (max(new) + 1 if new else 0)
            for j, v in new.items():
                ne[j] = v
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return CPoly({e: c for e, c in out.items() if c}, self.family)


def c_add(p: CPoly, q: CPoly) -> CPoly:
    return p + q


def c_mul(p: CPoly, q: CPoly) -> CPoly:
    return p * q


def c_scale(c, p: CPoly) -> CPoly:
    return p.scale(c)


def t(i: int) -> CPoly:
    return CPoly.var(i, T)


def zb(i: int) -> CPoly:
    if i not in (1, 2):
        raise ValueError("z-bar variables are z1 and z2")
    return CPoly.var(i, ZBAR)


def shift_indices(p: CPoly, offset: int) -> CPoly:
    """Replace every t_i by t_(i+offset)."""
    if p.indices() and min(p.indices()) + offset < 0:
        raise NegativeIndexError(f"shift by {offset} sends an index below 0")
    return p.rename(lambda i: i + offset)


def spread(p: CPoly, step: int) -> CPoly:
    """Replace t_i by t_(i*step)."""
    return p.rename(lambda i: i * step)


# -- division -------------------------------------------------------------------

def exact_divide(num: CPoly, den: CPoly) -> CPoly:
    """The q with num = q * den; raises NotDivisibleError if none exists."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.family != den.family:
        raise FamilyMismatchError(f"{num.family} vs {den.family}")
    fam = num.family
    lead_e, lead_c = den.lead()
    den_terms = list(den._terms.items())
    rem: Dict[Exp, Fraction] = dict(num._terms)
    quot: Dict[Exp, Fraction] = {}
    # {den} is a Groebner basis of its ideal, so in the divisible case the
    # leading term of every intermediate remainder is a multiple of lt(den)
    while rem:
        e = max(rem, key=glex_key)
        if not _divides(lead_e, e):
            raise NotDivisibleError(f"{num} is not divisible by {den}")
        m = _sub_exp(e, lead_e)
        c = rem[e] / lead_c
        quot[m] = c
        for de, dc in den_terms:
            k = _add_exp(m, de)
            s = rem.get(k, 0) - c * dc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return CPoly._raw(quot, fam)


def divides(den: CPoly, num: CPoly) -> bool:
    try:
        exact_divide(num, den)
    except NotDivisibleError:
        return False
    return True


# -- gcd ----------------------------------------------------------------------------

def _coeffs_in(p: CPoly, v: int) -> Dict[int, CPoly]:
    """View p as a univariate polynomial in t_v: degree -> coefficient."""
    out: Dict[int, Dict[Exp, Fraction]] = {}
    for e, c in p._terms.items():
        d = e[v] if v < len(e) else 0
        if d:
            e = list(e)
            e[v] = 0
            e = _trim(e)
        out.setdefault(d, {})[e] = c
    return {d: CPoly._raw(ts, p.family) for d, ts in out.items()}


def _from_coeffs(coeffs: Dict[int, CPoly], v: int, family: str) -> CPoly:
    out: Dict[Exp, Fraction] = {}
    for d, c in coeffs.items():
        for e, a in c._terms.items():
            if d:
                n = list(e) + [0] * max(0, v + 1 - len(e))
                n[v] += d
                e = tuple(n)
            out[e] = a
    return CPoly._raw(out, family)


def _monomial_gcd(m: CPoly, q: CPoly) -> CPoly:
    (me,) = m._terms
    lo = list(me)
    for e in q._terms:
        lo = [min(a, e[i] if i < len(e) else 0) for i, a in enumerate(lo)]
    return CPoly._raw({_trim(lo): Fraction(1)}, m.family)


def _content(p: CPoly, v: int) -> CPoly:
    coeffs = sorted(_coeffs_in(p, v).values(), key=len)
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    return g


def _prem(A: Dict[int, CPoly], B: Dict[int, CPoly], one: CPoly) -> Dict[int, CPoly]:
    """Pseudo-remainder of A by B as coefficient dicts."""
    db = max(B)
    lb = B[db]
    R = dict(A)
    e = max(A) - db + 1
    while R and max(R) >= db:
        dr = max(R)
        lr = R[dr]
        shift = dr - db
        R = {d: c * lb for d, c in R.items()}
        for d, c in B.items():
            k = d + shift
            s = R.get(k, one * 0) - lr * c
            if s:
                R[k] = s
            else:
                R.pop(k, None)
        e -= 1
    if e > 0:
        f = lb ** e
        R = {d: c * f for d, c in R.items()}
    return R


def _subresultant_gcd(a: CPoly, b: CPoly, v: int) -> CPoly:
    """gcd of two primitive polynomials (w.r.t. t_v), up to a scalar."""
    A = _coeffs_in(a, v)
    B = _coeffs_in(b, v)
    if max(A) < max(B):
        A, B = B, A
    one = CPoly.const(1, a.family)
    g = h = one
    while True:
        delta = max(A) - max(B)
        R = _prem(A, B, one)
        if not R:
            break
        if max(R) == 0:
            return one
        A = B
        div = g * h ** delta
        B = {d: exact_divide(c, div) for d, c in R.items()}
        g = A[max(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exact_divide(g ** delta, h ** (delta - 1))
    res = _from_coeffs(B, v, a.family)
    return exact_divide(res, _content(res, v))


def _gcd(p: CPoly, q: CPoly) -> CPoly:
    # both nonzero; result determined up to a nonzero scalar
    one = CPoly.const(1, p.family)
    if p.is_constant() or q.is_constant():
        return one
    if len(p) == 1:
        return _monomial_gcd(p, q)
    if len(q) == 1:
        return _monomial_gcd(q, p)
    v = max(p.max_index(), q.max_index())
    in_p = p.degree_in(v) > 0
    in_q = q.degree_in(v) > 0
    if not (in_p and in_q):
        if in_q:
            p, q = q, p
        g = q
        for c in sorted(_coeffs_in(p, v).values(), key=len):
            g = _gcd(g, c)
            if g.is_constant():
                return one
        return g
    cp = _content(p, v)
    cq = _content(q, v)
    cont = _gcd(cp, cq)
    prim = _subresultant_gcd(exact_divide(p, cp), exact_divide(q, cq), v)
    return cont * prim


def gcd(p: CPoly, q: CPoly) -> CPoly:
    """Greatest common divisor, normalized to graded-lex-leading coefficient 1."""
    if p.family != q.family:
        raise FamilyMismatchError(f"{p.family} vs {q.family}")
    if p.is_zero() and q.is_zero():
        raise BothZeroError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    return _gcd(p, q).monic()


# -- roots of scalars -----------------------------------------------------------------

def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_root(c, k: int) -> Set[Fraction]:
    """All rational beta with beta**k == c."""
    c = Fraction(c)
    if k < 1:
        raise ValueError("k must be positive")
    if c == 0:
        raise ValueError("c must be nonzero")
    if k % 2 == 0 and c < 0:
        return set()
    num, den = abs(c.numerator), c.denominator
    rn, rd = _iroot(num, k), _iroot(den, k)
    if rn ** k != num or rd ** k != den:
        return set()
    beta = Fraction(rn, rd)
    if k % 2 == 0:
        return {beta, -beta}
    return {beta if c > 0 else -beta}


def c_product(polys: Iterable[CPoly], family: str = T) -> CPoly:
    return reduce(lambda a, b: a * b, polys, CPoly.const(1, family))
