from reductions.trace import ReductionTrace
from reductions.grid_flatten import grid_flatten_map, flatten_pullback, grid_lift_witness
from reductions.singleton import singleton_blocks
from reductions.blocks_embed import BlocksEmbedding, blocks_embed, embed_lift_line
from reductions.oplus_gw import OplusSolution, canonical_word, affine_map, solve_oplus_via_gallai_witt
from reductions.pipeline import PipelineOptions, find_monochromatic_line_main
