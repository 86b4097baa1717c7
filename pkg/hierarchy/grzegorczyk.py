"""
The Grzegorczyk generators

    E_0(x, y)     = x + y
    E_1(x)        = x^2 + 2
    E_{n+2}(0)    = 2
    E_{n+2}(x+1)  = E_{n+1}(E_{n+2}(x))

evaluated exactly under a mandatory GrowthBudget. E_4 and above leave any
budget after a handful of steps.
"""
from typing import Sequence

from combinatorics.budget import GrowthBudget
from combinatorics.errors import BudgetExceeded, InvalidArity


class _Evaluator(object):

    def __init__(self, budget: GrowthBudget):
        self.budget = budget
        self.steps = 0

    def _charge(self, value: int) -> int:
        self.steps += 1
        if self.steps > self.budget.max_steps:
            raise BudgetExceeded(self.steps, 'step budget of {} exhausted'.format(self.budget.max_steps))
        if value.bit_length() > self.budget.max_bits:
            raise BudgetExceeded(self.steps, 'value exceeds {} bits'.format(self.budget.max_bits))
        return value

    def unary(self, n: int, x: int) -> int:
        if n == 1:
            # x^2 has about twice the bits of x; refuse before computing it
            if 2 * x.bit_length() - 1 > self.budget.max_bits:
                raise BudgetExceeded(self.steps + 1, 'value exceeds {} bits'.format(self.budget.max_bits))
            return self._charge(x * x + 2)
        value = self._charge(2)
        for _ in range(x):
            value = self.unary(n - 1, value)
        return value


def eval_E(n: int, args: Sequence[int], budget: GrowthBudget) -> int:
    if n < 0:
        raise InvalidArity('E_n needs n >= 0, got {}'.format(n))
    args = tuple(int(a) for a in args)
    expected = 2 if n == 0 else 1
    if len(args) != expected:
        raise InvalidArity('E_{} takes {} argument(s), got {}'.format(n, expected, len(args)))
    if any(a < 0 for a in args):
        raise ValueError('arguments must be natural numbers')
    evaluator = _Evaluator(budget)
    if n == 0:
        return evaluator._charge(args[0] + args[1])
    return evaluator.unary(n, args[0])


def parse_E_call(text: str):
    """'E:2,3' -> (2, (3,))."""
    head, _, rest = text.partition(':')
    if head.upper() != 'E' or not rest:
        raise ValueError('expected E:<n>,<args>, got ' + text)
    values = [int(v) for v in rest.split(',')]
    return values[0], tuple(values[1:])
