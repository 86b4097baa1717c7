"""
Symbolic expressions for bounds too large to evaluate, and a sound comparator.

An expression is compared exactly when both sides fit EXACT_BITS. Otherwise each
side is reduced to a level form (L, x): the value exp2^L(x), with x an mpmath
interval kept between 64 and 2^64 by moving levels up and down. Forms at
different levels are compared by taking log2 of the lower one. Whenever the
intervals do not separate the two sides, UnknownOrdering is raised.
"""
import re
from dataclasses import dataclass
from typing import Tuple, Union

from mpmath import iv

from combinatorics.budget import GrowthBudget
from combinatorics.errors import BudgetExceeded, UnknownOrdering
from hierarchy.grzegorczyk import eval_E, parse_E_call

EXACT_BITS = 4096
UP = 2 ** 64
DOWN = 64


@dataclass(frozen=True)
class Lit:
    value: int

    def __post_init__(self):
        assert self.value > 0, 'literals must be positive'


@dataclass(frozen=True)
class Add:
    left: 'TowerExpr'
    right: 'TowerExpr'


@dataclass(frozen=True)
class Mul:
    left: 'TowerExpr'
    right: 'TowerExpr'


@dataclass(frozen=True)
class Pow:
    base: 'TowerExpr'
    exponent: 'TowerExpr'


TowerExpr = Union[Lit, Add, Mul, Pow]


def tower_of_twos(height: int, top: int = 2) -> TowerExpr:
    expr = Lit(top)
    for _ in range(height - 1):
        expr = Pow(Lit(2), expr)
    return expr


def gowers(r: int, m: int) -> TowerExpr:
    """2^(2^(r^(2^(2^(m+9)))))"""
    assert r >= 1 and m >= 1, 'gowers(r, m) needs positive parameters'
    inner = Pow(Lit(2), Pow(Lit(2), Lit(m + 9)))
    return Pow(Lit(2), Pow(Lit(2), Pow(Lit(r), inner)))


def tower_build(source, budget: GrowthBudget = GrowthBudget()) -> TowerExpr:
    """gowers:<r>,<m> | shelah24 | tower:<height> | E:<n>,<args> | <integer> | text form."""
    if isinstance(source, int):
        return Lit(source)
    text = str(source).strip()
    if text == 'shelah24':
        return tower_of_twos(24)
    if text.startswith('gowers:'):
        r, m = (int(v) for v in text.split(':', 1)[1].split(','))
        return gowers(r, m)
    if text.startswith('tower:'):
        return tower_of_twos(int(text.split(':', 1)[1]))
    if text[:2].upper() == 'E:':
        n, args = parse_E_call(text)
        return Lit(eval_E(n, args, budget))
    return parse_text(text)


def to_text(expr: TowerExpr) -> str:
    if isinstance(expr, Lit):
        return str(expr.value)
    if isinstance(expr, Add):
        return '({}+{})'.format(to_text(expr.left), to_text(expr.right))
    if isinstance(expr, Mul):
        return '({}*{})'.format(to_text(expr.left), to_text(expr.right))
    base = to_text(expr.base)
    if isinstance(expr.exponent, Lit):
        return '{}^{}'.format(base, expr.exponent.value)
    return '{}^({})'.format(base, to_text(expr.exponent))


_TOKEN = re.compile(r'\s*(\d+|[()+*^])')


def parse_text(text: str) -> TowerExpr:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError('cannot parse tower expression at {!r}'.format(text[pos:]))
        tokens.append(match.group(1))
        pos = match.end()
    expr, rest = _parse_sum(tokens)
    if rest:
        raise ValueError('trailing tokens {}'.format(rest))
    return expr


def _parse_sum(tokens):
    left, tokens = _parse_product(tokens)
    while tokens and tokens[0] == '+':
        right, tokens = _parse_product(tokens[1:])
        left = Add(left, right)
    return left, tokens


def _parse_product(tokens):
    left, tokens = _parse_power(tokens)
    while tokens and tokens[0] == '*':
        right, tokens = _parse_power(tokens[1:])
        left = Mul(left, right)
    return left, tokens


def _parse_power(tokens):
    base, tokens = _parse_atom(tokens)
    if tokens and tokens[0] == '^':
        exponent, tokens = _parse_power(tokens[1:])
        return Pow(base, exponent), tokens
    return base, tokens


def _parse_atom(tokens):
    if not tokens:
        raise ValueError('unexpected end of tower expression')
    head = tokens[0]
    if head == '(':
        expr, tokens = _parse_sum(tokens[1:])
        if not tokens or tokens[0] != ')':
            raise ValueError('unbalanced parenthesis')
        return expr, tokens[1:]
    if head.isdigit():
        return Lit(int(head)), tokens[1:]
    raise ValueError('unexpected token {!r}'.format(head))


def evaluate(expr: TowerExpr, max_bits: int = EXACT_BITS) -> int:
    """Exact value, or BudgetExceeded once an intermediate would pass max_bits."""
    if isinstance(expr, Lit):
        value = expr.value
    elif isinstance(expr, Add):
        value = evaluate(expr.left, max_bits) + evaluate(expr.right, max_bits)
    elif isinstance(expr, Mul):
        value = evaluate(expr.left, max_bits) * evaluate(expr.right, max_bits)
    else:
        base = evaluate(expr.base, max_bits)
        exponent = evaluate(expr.exponent, max_bits)
        if base > 1 and (base.bit_length() - 1) * exponent > max_bits:
            raise BudgetExceeded(0, 'power exceeds {} bits'.format(max_bits))
        value = base ** exponent
    if value.bit_length() > max_bits:
        raise BudgetExceeded(0, 'value exceeds {} bits'.format(max_bits))
    return value


LevelForm = Tuple[int, object]

_LN2 = iv.log(2)


def _log2(x):
    return iv.log(x) / _LN2


def _exp2(x):
    return iv.exp(x * _LN2)


def _normalize(level: int, x) -> LevelForm:
    while True:
        if level >= 1 and (x.b <= DOWN) is True:
            x, level = _exp2(x), level - 1
        elif (x.a > UP) is True:
            x, level = _log2(x), level + 1
        else:
            return level, x


def _lower_tower(level: int, x) -> object:
    """A lower bound for exp2^level(x), capped at 2^64."""
    v = x.a
    for _ in range(level):
        if (v > DOWN) is not False:
            return iv.mpf(UP)
        v = _exp2(v).a
    return v


def _shift(level: int, x, s):
    """x' with exp2^level(x') = exp2^level(x) + s, for s >= 0."""
    if level == 0:
        return x + s
    big = _lower_tower(level, x)
    if (big > 1) is not True:
        raise UnknownOrdering('cannot bound a sum at level {}'.format(level))
    t = _log2(1 + s.b / big)
    return _shift(level - 1, x, iv.mpf([0, t.b]))


def _scale(form: LevelForm, c) -> LevelForm:
    """value * c for an interval c >= 1."""
    level, x = form
    if level == 0:
        return _normalize(0, x * c)
    return _normalize(level, _shift(level - 1, x, _log2(c)))


def _add(fa: LevelForm, fb: LevelForm) -> LevelForm:
    if fa[0] == 0 and fb[0] == 0:
        return _normalize(0, fa[1] + fb[1])
    if fa[0] == 0:
        fa, fb = fb, fa
    if fb[0] != 0:
        raise UnknownOrdering('sum of two towers')
    return _normalize(fa[0], _shift(fa[0], fa[1], fb[1]))


def level_form(expr: TowerExpr) -> LevelForm:
    if isinstance(expr, Lit):
        return _normalize(0, iv.mpf(expr.value))
    if isinstance(expr, Add):
        return _add(level_form(expr.left), level_form(expr.right))
    if isinstance(expr, Mul):
        fa, fb = level_form(expr.left), level_form(expr.right)
        if fa[0] == 0 and fb[0] == 0:
            return _normalize(0, fa[1] * fb[1])
        if fa[0] == 0:
            fa, fb = fb, fa
        if fb[0] == 0:
            if (fb[1] >= 1) is not True:
                raise UnknownOrdering('scaling by a factor below 1')
            return _scale(fa, fb[1])
        # a*b = 2^(log2 a + log2 b)
        low = _add((fa[0] - 1, fa[1]), (fb[0] - 1, fb[1]))
        return _normalize(low[0] + 1, low[1])
    base = level_form(expr.base)
    if base[0] != 0:
        raise UnknownOrdering('tower with a tower as base')
    if (base[1] >= 2) is not True:
        if (base[1] == 1) is True:
            return base
        raise UnknownOrdering('power with base below 2')
    scaled = _scale(level_form(expr.exponent), _log2(base[1]))
    return _normalize(scaled[0] + 1, scaled[1])


def _compare_forms(fa: LevelForm, fb: LevelForm) -> str:
    (la, xa), (lb, xb) = fa, fb
    if la < lb:
        return {'<': '>', '>': '<'}[_compare_forms(fb, fa)]
    while lb < la and (xb.a > 0) is True:
        xb, lb = _log2(xb), lb + 1
    if lb == la:
        if (xa < xb) is True:
            return '<'
        if (xa > xb) is True:
            return '>'
        raise UnknownOrdering('intervals {} and {} overlap at level {}'.format(xa, xb, la))
    # exp2^j(y) > y, so a exceeds exp2^lb(xa.a) at the level where b stalled
    if (xb.b <= xa.a) is True:
        return '>'
    raise UnknownOrdering('cannot separate levels {} and {}'.format(la, lb))


def tower_compare(a: TowerExpr, b: TowerExpr) -> str:
    """'<', '=' or '>' for value(a) against value(b)."""
    if a == b:
        return '='
    try:
        va, vb = evaluate(a), evaluate(b)
    except BudgetExceeded:
        pass
    else:
        return '<' if va < vb else '>' if va > vb else '='
    return _compare_forms(level_form(a), level_form(b))
