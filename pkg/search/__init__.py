from search.engine import SearchOptions, SearchStats, Bad, NoneExists, OverBudget, exists_bad_coloring
from search.number import NumberResult, compute_number
from search.certificate import Certificate
from search.lift import lift_witness_up
