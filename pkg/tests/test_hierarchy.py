import unittest

from combinatorics.budget import GrowthBudget
from combinatorics.errors import BudgetExceeded, InvalidArity, UnknownOrdering
from hierarchy.grzegorczyk import eval_E, parse_E_call
from hierarchy.tower import (Add, Lit, Mul, Pow, evaluate, gowers, level_form, parse_text, to_text, tower_build,
                             tower_compare, tower_of_twos)
from hierarchy.tower import _compare_forms


class GrzegorczykTestCase(unittest.TestCase):

    def setUp(self):
        self.budget = GrowthBudget()

    def test_small_values(self):
        self.assertEqual(eval_E(0, (3, 4), self.budget), 7)
        self.assertEqual(eval_E(1, (3,), self.budget), 11)
        self.assertEqual([eval_E(2, (x,), self.budget) for x in range(4)], [2, 6, 38, 1446])
        self.assertEqual(eval_E(3, (1,), self.budget), 38)

    def test_recurrence(self):
        for n in (2, 3):
            for x in range(1 if n == 3 else 4):
                self.assertEqual(eval_E(n, (x + 1,), self.budget),
                                 eval_E(n - 1, (eval_E(n, (x,), self.budget),), self.budget))

    def test_monotone(self):
        for n in (1, 2):
            values = [eval_E(n, (x,), self.budget) for x in range(4)]
            self.assertEqual(values, sorted(set(values)))

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            eval_E(3, (3,), GrowthBudget(max_bits=64))
        with self.assertRaises(BudgetExceeded) as ctx:
            eval_E(2, (3,), GrowthBudget(max_steps=3))
        self.assertEqual(ctx.exception.steps, 4)
        with self.assertRaises(BudgetExceeded):
            eval_E(5, (2,), self.budget)

    def test_arity(self):
        with self.assertRaises(InvalidArity):
            eval_E(0, (1,), self.budget)
        with self.assertRaises(InvalidArity):
            eval_E(2, (1, 2), self.budget)
        with self.assertRaises(InvalidArity):
            eval_E(-1, (1,), self.budget)

    def test_parse_call(self):
        self.assertEqual(parse_E_call('E:2,3'), (2, (3,)))
        self.assertEqual(parse_E_call('e:0,1,2'), (0, (1, 2)))
        with self.assertRaises(ValueError):
            parse_E_call('F:2,3')


class TowerTextTestCase(unittest.TestCase):

    def test_gowers_text(self):
        self.assertEqual(to_text(gowers(2, 3)), '2^(2^(2^(2^(2^12))))')
        self.assertEqual(to_text(tower_build('gowers:2,3')), '2^(2^(2^(2^(2^12))))')

    def test_parse(self):
        for text in ('2^(2^(2^(2^(2^12))))', '(3+4)', '((2*5)+1)', '2^(3^2)'):
            self.assertEqual(to_text(parse_text(text)), text)
        self.assertEqual(parse_text('2^3^2'), Pow(Lit(2), Pow(Lit(3), Lit(2))))
        self.assertEqual(parse_text('1+2*3'), Add(Lit(1), Mul(Lit(2), Lit(3))))
        with self.assertRaises(ValueError):
            parse_text('2^(3')
        with self.assertRaises(ValueError):
            parse_text('2 ^ x')

    def test_build(self):
        self.assertEqual(tower_build(5), Lit(5))
        self.assertEqual(tower_build('tower:3'), Pow(Lit(2), Pow(Lit(2), Lit(2))))
        self.assertEqual(tower_build('E:2,3'), Lit(1446))
        self.assertEqual(tower_build('shelah24'), tower_of_twos(24))

    def test_evaluate(self):
        self.assertEqual(evaluate(tower_of_twos(4)), 65536)
        self.assertEqual(evaluate(parse_text('(2+3)*7')), 35)
        with self.assertRaises(BudgetExceeded):
            evaluate(tower_of_twos(5))


class TowerCompareTestCase(unittest.TestCase):

    def test_exact(self):
        self.assertEqual(tower_compare(parse_text('2^10'), Lit(1024)), '=')
        self.assertEqual(tower_compare(tower_build('E:2,3'), Lit(1446)), '=')
        self.assertEqual(tower_compare(Lit(3), Lit(4)), '<')

    def test_level_forms_agree_with_exact(self):
        pairs = [('2^10', '3^7'), ('2^(2^5)', '10^9'), ('(2+3)*7', '6^2'), ('2^64', '3^40'),
                 ('2^(2^2)', '3*5'), ('7', '2^3')]
        for a, b in pairs:
            ea, eb = parse_text(a), parse_text(b)
            expected = tower_compare(ea, eb)
            self.assertIn(expected, ('<', '>'))
            self.assertEqual(_compare_forms(level_form(ea), level_form(eb)), expected, '{} vs {}'.format(a, b))

    def test_large_towers(self):
        self.assertEqual(tower_compare(tower_build('shelah24'), tower_build('gowers:2,3')), '>')
        self.assertEqual(tower_compare(tower_build('gowers:2,3'), tower_build('shelah24')), '<')
        self.assertEqual(tower_compare(tower_of_twos(6), tower_of_twos(5)), '>')
        self.assertEqual(tower_compare(gowers(2, 3), gowers(3, 3)), '<')
        self.assertEqual(tower_compare(tower_of_twos(5), Lit(10 ** 30)), '>')
        self.assertEqual(level_form(gowers(2, 3))[0], 4)

    def test_unknown_ordering(self):
        shelah = tower_build('shelah24')
        with self.assertRaises(UnknownOrdering):
            tower_compare(Add(shelah, shelah), shelah)

    def test_identical_towers_above_budget(self):
        self.assertEqual(tower_compare(tower_of_twos(6), tower_of_twos(6)), '=')
        self.assertEqual(tower_compare(tower_build('shelah24'), tower_build('shelah24')), '=')
        self.assertEqual(tower_compare(gowers(2, 3), parse_text(to_text(gowers(2, 3)))), '=')


if __name__ == '__main__':
    unittest.main()
