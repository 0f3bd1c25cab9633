"""Crystals of five-vertex ice models and their comparison with tableau crystals."""

from .crystal_graph import (
    CrystalGraph,
    character,
    check_axioms_C1_C6,
    find_highest_weights,
    generate,
    highest_weight_model,
    verify_staircase,
)
from .crystal_ops import Weight, e_op, epsilon, f_op, pairing, phi, reduce_signature, signature, weight
from .ice_model import (
    IceModel,
    Partition,
    Sign,
    VertexConfig,
    boundary_top_minus_columns,
    boxes,
    brute_force_enumerate,
    classify_vertex,
    from_boxes,
    validate,
)
from .stembridge import CartanA, verify_regular
from .tableau_oracle import crystal_isomorphic, dimension, enumerate_ssyt, tableau_crystal

__version__ = "0.1.0"
