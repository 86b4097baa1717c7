from witnesses.kinds import (Kind, KindSpec, SubspaceWitness, F13Witness, APWitness, GridWitness,
                             OplusWitness, witness_from_json, parse_kind_spec)
from witnesses.finders import (find_subspace_witness, find_f13_witness, find_ap_witness,
                               find_gallai_witt_witness, find_oplus_witness, find_witness)
from witnesses.verify import verify_witness, refute
