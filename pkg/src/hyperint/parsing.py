"""Expression grammar shared by the library and the CLI.

    expr    := term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := '-' factor | power
    power   := atom ('^' exponent)?
    exponent:= ['-'] INT | '(' ['-'] INT ')'
    atom    := INT | NAME | '(' expr ')'
             | 'form' '(' expr (',' expr)* ')'
             | 'alg' '(' expr ';' expr ')'

Variables are x1..x9, z; t is reserved for minimal polynomials inside
alg(...) and `with` declarations.  Rational literals are just integer
division.  Whitespace is insignificant.  Printing is canonical (graded
lex, descending) and round-trips through the parser.
"""

from __future__ import annotations

import re

import sympy
from sympy import QQ

from .errors import ExprSyntaxError, UnknownVariable
from .forms import OneForm
from .numfield import AlgNumber, NumberField, QQ_FIELD
from .polyrat import MPoly, RFunc, T, X, Z, _grlex_key

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))')

_XNAMES = {f'x{i}': X[i - 1] for i in range(1, 10)}


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == m.start():
                break
            if m.group(1):
                self.toks.append(('int', int(m.group(1)), m.start(1)))
            elif m.group(2):
                self.toks.append(('name', m.group(2), m.start(2)))
            else:
                ch = m.group(3)
                if ch not in '+-*/^(),;:':
                    raise ExprSyntaxError(f'unexpected character {ch!r}',
                                          m.start(3))
                self.toks.append((ch, ch, m.start(3)))
            pos = m.end()
        self.toks.append(('end', None, len(text)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprSyntaxError(f'expected {kind!r}, got {tok[1]!r}',
                                  tok[2])
        return tok


# -- AST -------------------------------------------------------------------
# nodes: ('int', n) ('var', name) ('alg', minpoly_ast, coords_ast)
#        ('form', [ast]) (op, l, r) ('neg', e) ('pow', e, k)


def _parse_expr(tk: _Tokens):
    node = _parse_term(tk)
    while tk.peek()[0] in '+-':
        op = tk.next()[0]
        rhs = _parse_term(tk)
        node = ('add' if op == '+' else 'sub', node, rhs)
    return node


def _parse_term(tk: _Tokens):
    node = _parse_factor(tk)
    while tk.peek()[0] in '*/':
        op = tk.next()[0]
        rhs = _parse_factor(tk)
        node = ('mul' if op == '*' else 'div', node, rhs)
    return node


def _parse_factor(tk: _Tokens):
    if tk.peek()[0] == '-':
        tk.next()
        return ('neg', _parse_factor(tk))
    return _parse_power(tk)


def _parse_power(tk: _Tokens):
    base = _parse_atom(tk)
    if tk.peek()[0] == '^':
        tk.next()
        sign = 1
        if tk.peek()[0] == '(':
            tk.next()
            if tk.peek()[0] == '-':
                tk.next()
                sign = -1
            k = tk.expect('int')[1]
            tk.expect(')')
        else:
            if tk.peek()[0] == '-':
                tk.next()
                sign = -1
            k = tk.expect('int')[1]
        return ('pow', base, sign * k)
    return base


def _parse_atom(tk: _Tokens):
    kind, val, pos = tk.next()
    if kind == 'int':
        return ('int', val)
    if kind == 'name':
        if val == 'form':
            tk.expect('(')
            items = [_parse_expr(tk)]
            while tk.peek()[0] == ',':
                tk.next()
                items.append(_parse_expr(tk))
            tk.expect(')')
            return ('form', items)
        if val == 'alg':
            tk.expect('(')
            minp = _parse_expr(tk)
            tk.expect(';')
            coords = _parse_expr(tk)
            tk.expect(')')
            return ('alg', minp, coords)
        return ('var', val)
    if kind == '(':
        node = _parse_expr(tk)
        tk.expect(')')
        return node
    raise ExprSyntaxError(f'unexpected token {val!r}', pos)


def _collect(node, vars_out: set, minpolys: list):
    kind = node[0]
    if kind == 'var':
        vars_out.add(node[1])
    elif kind == 'alg':
        minpolys.append(node[1])
        # inner expressions use only t; checked at evaluation
    elif kind == 'form':
        for item in node[1]:
            _collect(item, vars_out, minpolys)
    elif kind in ('add', 'sub', 'mul', 'div'):
        _collect(node[1], vars_out, minpolys)
        _collect(node[2], vars_out, minpolys)
    elif kind in ('neg',):
        _collect(node[1], vars_out, minpolys)
    elif kind == 'pow':
        _collect(node[1], vars_out, minpolys)


def _eval(node, vars, field, env):
    kind = node[0]
    if kind == 'int':
        return RFunc.const(node[1], vars, field)
    if kind == 'var':
        name = node[1]
        if name in env:
            return RFunc.const(env[name], vars, field)
        sym = _XNAMES.get(name)
        if name == 'z':
            sym = Z
        if name == 't':
            sym = T
        if sym is None or sym not in vars:
            raise UnknownVariable(f'unknown variable {name!r}')
        return RFunc.var(sym, vars, field)
    if kind == 'alg':
        minp = _eval(node[1], (T,), QQ_FIELD, {})
        fld = NumberField(minp.num.poly)
        if field.degree > 1 and fld != field:
            raise ExprSyntaxError(
                'all alg(...) literals must share one minimal polynomial', 0)
        coords = _eval(node[2], (T,), QQ_FIELD, {})
        if not coords.den.is_constant():
            raise ExprSyntaxError('alg coordinates must be polynomial in t', 0)
        cs = [QQ.zero] * fld.degree
        for mon, c in coords.num.terms().items():
            if mon[0] >= fld.degree:
                raise ExprSyntaxError('alg coordinate degree too large', 0)
            cs[mon[0]] = c.to_rational()
        val = fld.new(cs) / fld.from_rational(
            coords.den.const_coeff().to_rational())
        return RFunc.const(val, vars, fld if field.degree == 1 else field)
    if kind == 'neg':
        return -_eval(node[1], vars, field, env)
    if kind == 'pow':
        return _eval(node[1], vars, field, env) ** node[2]
    if kind in ('add', 'sub', 'mul', 'div'):
        a = _eval(node[1], vars, field, env)
        b = _eval(node[2], vars, field, env)
        if kind == 'add':
            return a + b
        if kind == 'sub':
            return a - b
        if kind == 'mul':
            return a * b
        if b.is_zero():
            raise ExprSyntaxError('division by zero', 0)
        return a / b
    raise ExprSyntaxError(f'cannot evaluate node {kind}', 0)  # pragma: no cover


def _ambient_field(minpolys, env):
    field = QQ_FIELD
    for a in env.values():
        if a.field.degree > 1:
            field = a.field
            break
    for mnode in minpolys:
        minp = _eval(mnode, (T,), QQ_FIELD, {})
        fld = NumberField(minp.num.poly)
        if field.degree == 1:
            field = fld
        elif fld != field:
            raise ExprSyntaxError(
                'all alg(...) literals must share one minimal polynomial', 0)
    return field


def _infer_vars(names, nvars=None):
    idx = [int(n[1:]) for n in names if n in _XNAMES]
    n = max(idx) if idx else 0
    if nvars is not None:
        n = max(n, nvars)
    if 'z' in names and n == 0:
        return (Z,)
    return X[:max(n, 1)]


def parse_expr(text: str, env=None, nvars=None):
    """Parse an expression; returns RFunc or OneForm (for form(...))."""
    env = env or {}
    tk = _Tokens(text)
    ast = _parse_expr(tk)
    if tk.peek()[0] != 'end':
        raise ExprSyntaxError(f'trailing input {tk.peek()[1]!r}', tk.peek()[2])
    names, minpolys = set(), []
    _collect(ast, names, minpolys)
    for name in names:
        if name not in _XNAMES and name not in ('z',) and name not in env:
            raise UnknownVariable(f'unknown variable {name!r}')
    field = _ambient_field(minpolys, env)
    if ast[0] == 'form':
        n = len(ast[1])
        if nvars is not None and nvars != n:
            raise ExprSyntaxError(
                f'form has {n} coefficients but --vars={nvars}', 0)
        vars = X[:n]
        return OneForm([_eval(item, vars, field, env) for item in ast[1]])
    vars = _infer_vars(names, nvars)
    return _eval(ast, vars, field, env)


def parse_rfunc(text: str, vars=None, env=None) -> RFunc:
    env = env or {}
    if vars is None:
        out = parse_expr(text, env)
    else:
        tk = _Tokens(text)
        ast = _parse_expr(tk)
        if tk.peek()[0] != 'end':
            raise ExprSyntaxError(f'trailing input {tk.peek()[1]!r}',
                                  tk.peek()[2])
        names, minpolys = set(), []
        _collect(ast, names, minpolys)
        field = _ambient_field(minpolys, env)
        out = _eval(ast, tuple(vars), field, env)
    if isinstance(out, OneForm):
        raise ExprSyntaxError('expected a rational function, got a form', 0)
    return out


def parse_form(text: str, env=None) -> OneForm:
    out = parse_expr(text, env)
    if not isinstance(out, OneForm):
        raise ExprSyntaxError('expected form(...)', 0)
    return out


def parse_document(text: str):
    """Parse `with name: minpoly` declarations followed by one expression.

    Returns (env, value)."""
    env = {}
    lines = [ln for ln in text.splitlines() if ln.strip()]
    expr_lines = []
    for ln in lines:
        s = ln.strip()
        if s.startswith('with ') and not expr_lines:
            head, _, mp = s[5:].partition(':')
            name = head.strip()
            if not re.fullmatch(r'[A-Za-z_][A-Za-z_0-9]*', name):
                raise ExprSyntaxError(f'bad constant name {name!r}', 0)
            minp = parse_rfunc(mp.strip(), vars=(T,))
            fld = NumberField(minp.num.poly)
            env[name] = fld.gen()
        else:
            expr_lines.append(s)
    if not expr_lines:
        raise ExprSyntaxError('no expression in document', 0)
    return env, parse_expr(' '.join(expr_lines), env)


# ---------------------------------------------------------------------------
# canonical printing


def print_rational(c) -> str:
    num, den = c.numerator, c.denominator
    if den == 1:
        return str(num)
    return f'{num}/{den}' if num >= 0 else f'-{-num}/{den}'


def print_alg(a: AlgNumber) -> str:
    if a.is_rational():
        return print_rational(a.coords[0])
    minp = print_mpoly(MPoly.from_expr(a.field.minpoly.as_expr(), (T,)))
    coeffs = MPoly.from_dict(
        {(k,): c for k, c in enumerate(a.coords) if c},
        (T,), QQ_FIELD)
    return f'alg({minp}; {print_mpoly(coeffs)})'


def _print_monomial(mon, vars) -> str:
    parts = []
    for v, e in zip(vars, mon):
        if e == 1:
            parts.append(str(v))
        elif e:
            parts.append(f'{v}^{e}')
    return '*'.join(parts)


def print_mpoly(p: MPoly) -> str:
    if p.is_zero():
        return '0'
    items = sorted(p.terms().items(), key=lambda kv: _grlex_key(kv[0]),
                   reverse=True)
    out = []
    for mon, c in items:
        mstr = _print_monomial(mon, p.vars)
        if c.is_rational():
            r = c.coords[0]
            neg = r < 0
            rs = print_rational(-r if neg else r)
            if not mstr:
                piece = rs
            elif rs == '1':
                piece = mstr
            else:
                piece = f'{rs}*{mstr}'
            sign = ' - ' if neg else ' + '
        else:
            piece = print_alg(c) + (f'*{mstr}' if mstr else '')
            sign = ' + '
        if not out:
            out.append(('-' if sign == ' - ' else '') + piece)
        else:
            out.append(sign + piece)
    return ''.join(out)


def print_rfunc(r: RFunc) -> str:
    num = print_mpoly(r.num)
    if r.den.is_constant():
        c = r.den.const_coeff()
        if c.is_rational() and c.coords[0] == 1:
            return num
    den = print_mpoly(r.den)
    return f'({num})/({den})'


def print_form(w: OneForm) -> str:
    return 'form(' + ', '.join(print_rfunc(c) for c in w.coeffs) + ')'


def to_text(value) -> str:
    if isinstance(value, OneForm):
        return print_form(value)
    if isinstance(value, RFunc):
        return print_rfunc(value)
    if isinstance(value, MPoly):
        return print_mpoly(value)
    if isinstance(value, AlgNumber):
        return print_alg(value)
    return str(value)
