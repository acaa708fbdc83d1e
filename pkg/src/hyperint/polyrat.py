"""Multivariate polynomials and normalized rational functions over a
number field.

MPoly wraps a sympy Poly whose domain is the field's domain (QQ or an
algebraic extension); RFunc keeps a coprime (num, den) pair with the
denominator monic under graded lex, so equality is structural.
"""

from __future__ import annotations

import sympy
from sympy import QQ, Poly, Symbol

from .errors import ComposePoleCollision, DegreeCapExceeded
from .config import DEFAULT
from .numfield import AlgNumber, NumberField, QQ_FIELD

# the shared variable alphabet
X = sympy.symbols('x1:10')
Z = Symbol('z')
T = Symbol('t')


def var_tuple(n: int) -> tuple:
    return X[:n]


def _grlex_key(monom):
    return (sum(monom), monom)


class MPoly:
    """Polynomial in an ordered variable tuple over a NumberField."""

    __slots__ = ('field', 'vars', 'poly')

    def __init__(self, field: NumberField, vars: tuple, poly: Poly):
        self.field = field
        self.vars = tuple(vars)
        self.poly = poly

    # -- construction ------------------------------------------------------

    @classmethod
    def from_dict(cls, terms: dict, vars, field: NumberField) -> 'MPoly':
        dom = field.domain
        rep = {}
        for mon, c in terms.items():
            if isinstance(c, AlgNumber):
                if not c.field == field:
                    if c.is_rational():
                        c = field.from_rational(c.coords[0])
                    else:
                        raise ValueError('coefficient field mismatch')
                dc = field.to_dom(c)
            else:
                dc = dom.convert(QQ.convert(c)) if field.degree == 1 \
                    else field.to_dom(field.from_rational(c))
            if dc:
                rep[tuple(mon)] = dc
        if not rep:
            rep = {(0,) * len(vars): dom.zero}
        return cls(field, tuple(vars), Poly(rep, *vars, domain=dom))

    @classmethod
    def from_expr(cls, expr, vars, field: NumberField = QQ_FIELD) -> 'MPoly':
        expr = sympy.sympify(expr)
        return cls(field, tuple(vars), Poly(expr, *vars, domain=field.domain))

    @classmethod
    def zero(cls, vars, field: NumberField = QQ_FIELD) -> 'MPoly':
        return cls.from_dict({}, vars, field)

    @classmethod
    def const(cls, c, vars, field: NumberField = QQ_FIELD) -> 'MPoly':
        return cls.from_dict({(0,) * len(vars): c}, vars, field)

    # -- views -------------------------------------------------------------

    def _rep_dict(self) -> dict:
        return self.poly.rep.to_dict()

    def terms(self) -> dict:
        """Map exponent vector -> AlgNumber, zero coefficients omitted."""
        return {mon: self.field.from_dom(c)
                for mon, c in self._rep_dict().items()}

    def as_expr(self):
        return self.poly.as_expr()

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def is_constant(self) -> bool:
        return self.poly.total_degree() == 0 or self.poly.is_zero

    def const_coeff(self) -> AlgNumber:
        c = self._rep_dict().get((0,) * len(self.vars))
        return self.field.from_dom(c) if c is not None else self.field.zero()

    def total_degree(self) -> int:
        return self.poly.total_degree()

    def degree(self, v) -> int:
        if self.is_zero():
            return -1
        return self.poly.degree(v)

    def lc_grlex(self) -> AlgNumber:
        if self.is_zero():
            return self.field.zero()
        rep = self._rep_dict()
        mon = max(rep, key=_grlex_key)
        return self.field.from_dom(rep[mon])

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other) -> 'MPoly':
        if isinstance(other, MPoly):
            if other.field == self.field:
                return other
            if other.field.degree == 1:
                return other.to_field(self.field, None)
            raise ValueError('field mismatch in MPoly arithmetic')
        return MPoly.const(other, self.vars, self.field)

    def __add__(self, other):
        o = self._lift(other)
        return MPoly(self.field, self.vars, self.poly.add(o.poly))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return MPoly(self.field, self.vars, self.poly.sub(o.poly))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return MPoly(self.field, self.vars, -self.poly)

    def __mul__(self, other):
        o = self._lift(other)
        return MPoly(self.field, self.vars, self.poly.mul(o.poly))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return MPoly(self.field, self.vars, self.poly ** k)

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.field == other.field
                and self.vars == other.vars and self.poly == other.poly)

    def __hash__(self):
        return hash((self.field, self.vars,
                     tuple((mon, c.coords)
                           for mon, c in sorted(self.terms().items()))))

    def diff(self, v) -> 'MPoly':
        return MPoly(self.field, self.vars, self.poly.diff(v))

    def divides(self, other: 'MPoly') -> bool:
        if self.is_zero():
            return other.is_zero()
        q, r = other.poly.div(self.poly)
        return r.is_zero

    def exact_div(self, other: 'MPoly') -> 'MPoly':
        q, r = self.poly.div(other.poly)
        if not r.is_zero:
            raise ValueError('inexact division')
        return MPoly(self.field, self.vars, q)

    # -- normalization -----------------------------------------------------

    def monic_grlex(self) -> 'MPoly':
        if self.is_zero():
            return self
        return MPoly(self.field, self.vars,
                     self.poly.quo_ground(
                         self.field.to_dom(self.lc_grlex())))

    def primitive_rat(self) -> 'MPoly':
        """Rational-coefficient polys: integer-primitive with positive
        grlex leading coefficient; otherwise grlex-monic."""
        if self.is_zero():
            return self
        if self.field.degree == 1:
            _, pp = self.poly.primitive()
            lc = max(pp.monoms(), key=_grlex_key)
            if pp.coeff_monomial(lc) < 0:
                pp = -pp
            return MPoly(self.field, self.vars, pp)
        return self.monic_grlex()

    def to_field(self, field: NumberField, gen_image) -> 'MPoly':
        """Map coefficients into `field`; gen_image is the image of this
        field's generator (ignored for rational coefficients)."""
        terms = {}
        for mon, c in self.terms().items():
            if self.field.degree == 1:
                terms[mon] = field.from_rational(c.coords[0])
            else:
                terms[mon] = c.eval_at(gen_image)
        return MPoly.from_dict(terms, self.vars, field)

    def to_rational_field(self) -> 'MPoly':
        """Descend to Q coefficients; raises if any coefficient is not
        rational."""
        if self.field.degree == 1:
            return self
        terms = {}
        for mon, c in self.terms().items():
            terms[mon] = c.to_rational()
        return MPoly.from_dict(terms, self.vars, QQ_FIELD)

    def is_rational_coeff(self) -> bool:
        return all(c.is_rational() for c in self.terms().values())

    def galois_apply(self, gen_image: AlgNumber) -> 'MPoly':
        """Apply the automorphism sending the field generator to
        gen_image."""
        return self.to_field(self.field, gen_image)

    def subs_values(self, values: dict):
        """Evaluate at rational values for a subset of variables; returns
        an MPoly in the same vars."""
        e = self.poly.as_expr().subs(values)
        return MPoly.from_expr(e, self.vars, self.field) \
            if self.field.degree == 1 else \
            MPoly(self.field, self.vars, Poly(e, *self.vars,
                                              domain=self.field.domain))

    def extend_vars(self, vars) -> 'MPoly':
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = [vars.index(v) for v in self.vars]
        dom = self.field.domain
        rep = {}
        for mon, c in self._rep_dict().items():
            newmon = [0] * len(vars)
            for p, e in zip(idx, mon):
                newmon[p] = e
            rep[tuple(newmon)] = c
        if not rep:
            rep = {(0,) * len(vars): dom.zero}
        return MPoly(self.field, vars, Poly(rep, *vars, domain=dom))

    def __repr__(self):
        return f'MPoly({self.poly.as_expr()})'


# ---------------------------------------------------------------------------
# polynomial operations (spec surface)


def gcd(p: MPoly, q: MPoly) -> MPoly:
    """Monic-normalized greatest common divisor."""
    if p.is_zero():
        return q.primitive_rat()
    if q.is_zero():
        return p.primitive_rat()
    g = p.poly.gcd(q.poly)
    return MPoly(p.field, p.vars, g).primitive_rat()


def resultant(p: MPoly, q: MPoly, v) -> MPoly:
    """Determinant of the Sylvester matrix in v."""
    if p.is_zero() or q.is_zero():
        raise ValueError('resultant of zero polynomial')
    gens = (v,) + tuple(g for g in p.vars if g != v)
    pp = p.extend_vars(gens) if gens != p.vars else p
    qq = q.extend_vars(gens) if gens != q.vars else q
    r = pp.poly.resultant(qq.poly)
    if isinstance(r, Poly):
        return MPoly(p.field, r.gens, r).extend_vars(p.vars)
    return MPoly.from_dict(
        {(0,) * len(p.vars): p.field.from_dom(p.field.domain.convert(r))},
        p.vars, p.field)


def squarefree_factor(p: MPoly, v=None) -> list[tuple[MPoly, int]]:
    """p = unit * prod f_k^k with f_k pairwise coprime squarefree."""
    if p.is_zero():
        raise ValueError('squarefree decomposition of zero')
    _, factors = p.poly.sqf_list()
    return [(MPoly(p.field, p.vars, f).primitive_rat(), m)
            for f, m in factors]


def factor_irreducible(p: MPoly,
                       settings=DEFAULT) -> list[tuple[MPoly, int]]:
    """Complete factorization into irreducibles over the coefficient
    field."""
    if p.is_zero():
        raise ValueError('factorization of zero')
    if p.total_degree() > settings.factor_size_cap:
        raise DegreeCapExceeded(
            f'factorization of degree {p.total_degree()} exceeds cap')
    _, factors = p.poly.factor_list()
    return [(MPoly(p.field, p.vars, f).primitive_rat(), m)
            for f, m in factors]


# ---------------------------------------------------------------------------
# rational functions


class RFunc:
    """num/den with gcd 1 and den grlex-monic.  Immutable."""

    __slots__ = ('num', 'den')

    def __init__(self, num: MPoly, den: MPoly, normalize=True):
        if den.is_zero():
            raise ZeroDivisionError('rational function with zero denominator')
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- construction ------------------------------------------------------

    @classmethod
    def from_expr(cls, expr, vars, field: NumberField = QQ_FIELD) -> 'RFunc':
        expr = sympy.together(sympy.sympify(expr))
        n, d = sympy.fraction(expr)
        return cls(MPoly.from_expr(n, vars, field),
                   MPoly.from_expr(d, vars, field))

    @classmethod
    def from_mpoly(cls, p: MPoly) -> 'RFunc':
        return cls(p, MPoly.const(1, p.vars, p.field), normalize=False)

    @classmethod
    def const(cls, c, vars, field: NumberField = QQ_FIELD) -> 'RFunc':
        return cls(MPoly.const(c, vars, field),
                   MPoly.const(1, vars, field))

    @classmethod
    def zero(cls, vars, field: NumberField = QQ_FIELD) -> 'RFunc':
        return cls.const(0, vars, field)

    @classmethod
    def var(cls, v, vars, field: NumberField = QQ_FIELD) -> 'RFunc':
        return cls.from_expr(v, vars, field)

    # -- basic views -------------------------------------------------------

    @property
    def field(self) -> NumberField:
        return self.num.field

    @property
    def vars(self) -> tuple:
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def const_value(self) -> AlgNumber:
        if not self.is_constant():
            raise ValueError('not a constant')
        return self.num.const_coeff() / self.den.const_coeff()

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    def degree_pair(self):
        return self.num.total_degree(), self.den.total_degree()

    def var_degree(self) -> int:
        """max over variables of max(deg_v num, deg_v den)."""
        return max(max(self.num.degree(v), self.den.degree(v))
                   for v in self.vars)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other) -> 'RFunc':
        if isinstance(other, RFunc):
            if other.field == self.field:
                return other
            if other.field.degree == 1:
                return other.to_field(self.field, None)
            raise ValueError('field mismatch in RFunc arithmetic')
        if isinstance(other, MPoly):
            return RFunc.from_mpoly(other)
        return RFunc.const(other, self.vars, self.field)

    def __add__(self, other):
        o = self._lift(other)
        return RFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._lift(other)
        return RFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, AlgNumber):
            if other.field.degree > 1 and self.field.degree == 1:
                return self.to_field(other.field, None).__mul__(other)
            return RFunc(self.num * MPoly.const(other, self.vars, self.field),
                         self.den)
        o = self._lift(other)
        return RFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError('division by zero rational function')
        return RFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> 'RFunc':
        if self.is_zero():
            raise ZeroDivisionError('inverse of zero')
        return RFunc(self.den, self.num)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if not isinstance(other, RFunc):
            try:
                other = self._lift(other)
            except (ValueError, TypeError):
                return NotImplemented
        if other.field != self.field:
            if other.field.degree == 1:
                other = other.to_field(self.field, None)
            elif self.field.degree == 1:
                return other.__eq__(self)
            else:
                return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- calculus ----------------------------------------------------------

    def diff(self, v) -> 'RFunc':
        return RFunc(self.num.diff(v) * self.den - self.num * self.den.diff(v),
                     self.den * self.den)

    def subs(self, mapping: dict['Symbol', 'RFunc']) -> 'RFunc':
        """Substitute variables by rational functions (shared target vars)."""
        target = next(iter(mapping.values()))
        num = _poly_subs(self.num, mapping, target.vars)
        den = _poly_subs(self.den, mapping, target.vars)
        if den.is_zero():
            raise ComposePoleCollision('denominator vanished under '
                                       'substitution')
        return num / den

    def to_field(self, field: NumberField, gen_image) -> 'RFunc':
        return RFunc(self.num.to_field(field, gen_image),
                     self.den.to_field(field, gen_image))

    def to_rational_field(self) -> 'RFunc':
        return RFunc(self.num.to_rational_field(),
                     self.den.to_rational_field())

    def is_rational_coeff(self) -> bool:
        return self.num.is_rational_coeff() and self.den.is_rational_coeff()

    def galois_apply(self, gen_image: AlgNumber) -> 'RFunc':
        return RFunc(self.num.galois_apply(gen_image),
                     self.den.galois_apply(gen_image))

    def extend_vars(self, vars) -> 'RFunc':
        return RFunc(self.num.extend_vars(vars), self.den.extend_vars(vars),
                     normalize=False)

    def __repr__(self):
        if self.den.is_constant() and self.den.const_coeff() == 1:
            return f'RFunc({self.num.as_expr()})'
        return f'RFunc(({self.num.as_expr()})/({self.den.as_expr()}))'


def _normalize(num: MPoly, den: MPoly):
    if num.is_zero():
        return num, MPoly.const(1, den.vars, den.field)
    g = num.poly.gcd(den.poly)
    if not g.is_one:
        num = MPoly(num.field, num.vars, num.poly.quo(g))
        den = MPoly(den.field, den.vars, den.poly.quo(g))
    lc = den.lc_grlex()
    if not (lc.is_rational() and lc.coords[0] == QQ.one):
        inv = lc.inverse()
        num = num * MPoly.const(inv, num.vars, num.field)
        den = den * MPoly.const(inv, den.vars, den.field)
    return num, den


def _poly_subs(p: MPoly, mapping: dict, target_vars) -> RFunc:
    """Evaluate polynomial p at the RFunc values given per variable."""
    field = next(iter(mapping.values())).field
    acc = RFunc.zero(target_vars, field)
    for mon, c in p.terms().items():
        term = RFunc.const(c if field == p.field else
                           (c.to_rational() if c.is_rational() else c),
                           target_vars, field)
        for v, e in zip(p.vars, mon):
            if e:
                if v not in mapping:
                    raise ValueError(f'no substitution value for {v}')
                term = term * mapping[v] ** e
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# univariate rational functions in z, composition


def urfunc(expr, field: NumberField = QQ_FIELD) -> RFunc:
    """Univariate rational function in the symbol z."""
    return RFunc.from_expr(expr, (Z,), field)


def compose(u: RFunc, F: RFunc) -> RFunc:
    """u(F) for univariate u in z; exact normalization."""
    if len(u.vars) != 1:
        raise ValueError('outer function must be univariate')
    if u.field != F.field:
        if u.field.degree == 1:
            u = u.to_field(F.field, None)
        elif F.field.degree == 1:
            F = F.to_field(u.field, None)
        else:
            raise ValueError('field mismatch in compose')
    z = u.vars[0]
    num = _poly_subs(u.num, {z: F}, F.vars)
    den = _poly_subs(u.den, {z: F}, F.vars)
    if den.is_zero():
        raise ComposePoleCollision('den(u)(F) vanished identically')
    return num / den


def derivative(r: RFunc, v) -> RFunc:
    return r.diff(v)
