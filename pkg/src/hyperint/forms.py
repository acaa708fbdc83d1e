"""Differential 1-forms with rational-function coefficients.

Closedness tests (plain and twisted by dH/H), logarithmic derivatives of
hyperexponential representations, and rational derivations tangential to
a level set F = h.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstantF, EtaNotClosed
from .numfield import AlgNumber, QQ_FIELD
from .polyrat import MPoly, RFunc


class OneForm:
    """sum_i coeffs[i] dx_i; coefficients share one variable order."""

    __slots__ = ('coeffs', 'vars')

    def __init__(self, coeffs: list[RFunc]):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError('empty 1-form')
        vars = coeffs[0].vars
        if any(c.vars != vars for c in coeffs):
            raise ValueError('coefficients disagree on variables')
        if len(coeffs) != len(vars):
            raise ValueError('need one coefficient per variable')
        self.coeffs = coeffs
        self.vars = vars

    @classmethod
    def zero(cls, vars, field=QQ_FIELD) -> 'OneForm':
        return cls([RFunc.zero(vars, field) for _ in vars])

    @classmethod
    def d(cls, f: RFunc) -> 'OneForm':
        """Exterior derivative of a rational function."""
        return cls([f.diff(v) for v in f.vars])

    @classmethod
    def dlog(cls, f: RFunc) -> 'OneForm':
        """df/f."""
        return cls([f.diff(v) / f for v in f.vars])

    @property
    def field(self):
        return self.coeffs[0].field

    def __add__(self, other: 'OneForm') -> 'OneForm':
        return OneForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: 'OneForm') -> 'OneForm':
        return OneForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> 'OneForm':
        return OneForm([-a for a in self.coeffs])

    def __mul__(self, s) -> 'OneForm':
        return OneForm([a * s for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, OneForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def to_rational_field(self) -> 'OneForm':
        return OneForm([c.to_rational_field() for c in self.coeffs])

    def to_field(self, field, gen_image) -> 'OneForm':
        return OneForm([c.to_field(field, gen_image) for c in self.coeffs])

    def common_denominator(self) -> MPoly:
        den = MPoly.const(1, self.vars, self.field)
        for c in self.coeffs:
            g = den.poly.gcd(c.den.poly)
            den = MPoly(den.field, den.vars, den.poly.mul(c.den.poly.quo(g)))
        return den

    def __repr__(self):
        inner = ', '.join(str(c.as_expr()) for c in self.coeffs)
        return f'form({inner})'


def is_closed(omega: OneForm) -> bool:
    """d(omega) == 0, exactly."""
    n = len(omega.vars)
    for i in range(n):
        for j in range(i + 1, n):
            if omega.coeffs[j].diff(omega.vars[i]) != \
                    omega.coeffs[i].diff(omega.vars[j]):
                return False
    return True


def is_closed_twisted(eta: OneForm, omega: OneForm) -> bool:
    """Closedness of H*omega given eta = dH/H, without constructing H:
    d_i(w_j) + eta_i w_j == d_j(w_i) + eta_j w_i for all i < j."""
    if not is_closed(eta):
        raise EtaNotClosed('eta = dH/H must be closed')
    n = len(omega.vars)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = omega.coeffs[j].diff(omega.vars[i]) + \
                eta.coeffs[i] * omega.coeffs[j]
            rhs = omega.coeffs[i].diff(omega.vars[j]) + \
                eta.coeffs[j] * omega.coeffs[i]
            if lhs != rhs:
                return False
    return True


def log_derivative(rep) -> OneForm:
    """dH/H of a hyperexponential representation
    (F0, A, q, [(lambda_i, F_i)]): dF0 + dA/(qA) + sum lambda_i dF_i/F_i.

    The result must have rational coefficients; the conjugate log terms
    cancel the irrational parts exactly.
    """
    from sympy import Rational
    vars = rep.f0.vars
    out = OneForm.d(rep.f0)
    if not rep.a.is_constant():
        out = out + OneForm.dlog(rep.a) * Rational(1, rep.q)
    if rep.log_terms:
        field = rep.field
        acc = OneForm.zero(vars, field)
        for lam, f in rep.log_terms:
            acc = acc + OneForm.dlog(f) * lam
        out = out + acc.to_rational_field()
    return out


@dataclass(frozen=True)
class TangentialDerivation:
    """w -> p_k * d_i(w) - p_i * d_k(w), the denominator-cleared version of
    d_k(F) d_i - d_i(F) d_k; annihilates every rational function of F."""

    i: int                 # index of the transported variable (0-based)
    k: int                 # index of the eliminated variable (0-based)
    F: RFunc
    p_i: MPoly             # den(F)^2 * dF/dx_i
    p_k: MPoly             # den(F)^2 * dF/dx_k

    def apply(self, w: RFunc) -> RFunc:
        vars = w.vars
        return w.diff(vars[self.i]) * RFunc.from_mpoly(self.p_k) - \
            w.diff(vars[self.k]) * RFunc.from_mpoly(self.p_i)

    def apply_form(self, omega: OneForm) -> RFunc:
        """sum_j D_{i,j} omega_j with D's polynomial coefficient vector."""
        return omega.coeffs[self.i] * RFunc.from_mpoly(self.p_k) - \
            omega.coeffs[self.k] * RFunc.from_mpoly(self.p_i)

    def coeff_vector(self) -> list[MPoly]:
        vars = self.F.vars
        out = [MPoly.zero(vars, self.p_i.field) for _ in vars]
        out[self.i] = self.p_k
        out[self.k] = -self.p_i
        return out


def tangential_derivations(F: RFunc) -> list[TangentialDerivation]:
    """n-1 independent rational derivations annihilating F, with polynomial
    coefficients.  The eliminated variable is the largest-index variable
    on which F depends."""
    if F.is_constant():
        raise ConstantF('tangential derivations need a nonconstant F')
    vars = F.vars
    clear = [F.num.diff(v) * F.den - F.num * F.den.diff(v) for v in vars]
    k = max(i for i, p in enumerate(clear) if not p.is_zero())
    out = []
    for i in range(len(vars)):
        if i == k:
            continue
        out.append(TangentialDerivation(i=i, k=k, F=F,
                                        p_i=clear[i], p_k=clear[k]))
    return out
