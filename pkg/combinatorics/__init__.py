from combinatorics.errors import *  # noqa: F401,F403
from combinatorics.words import (Alphabet, ColorSet, Word, Profile, rank_word, unrank_word,
                                 letter_counts, e_equiv, cube_words)
from combinatorics.blocks import (BlockSystem, subspace_points, subspace_ranks, enumerate_lines,
                                  enumerate_block_systems, block_profile)
from combinatorics.omega import omega_enumerate, omega_bump, in_omega
from combinatorics.coloring import Ground, Coloring
from combinatorics.budget import GrowthBudget
