from hierarchy.grzegorczyk import eval_E, parse_E_call
from hierarchy.tower import (Lit, Add, Mul, Pow, TowerExpr, EXACT_BITS, tower_of_twos, gowers, tower_build,
                             tower_compare, to_text, parse_text, evaluate, level_form)
