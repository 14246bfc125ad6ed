"""Hopf cells, fusion operators, antipodes and the lifting of parametric adjunctions."""
from catkit.hopf.adjoint import (AdjAdjointObject, Equivalence, MndAdjointObject,
                                 adjoint_equivalence, adjoint_object_adj,
                                 adjoint_object_mnd, search_adj_right_adjoint,
                                 search_mnd_right_adjoint)
from catkit.hopf.antipode import Antipode, antipode_adj, antipode_mnd
from catkit.hopf.lifting import Lifting, lift_parametric_adjunction
from catkit.hopf.operators import (OperatorResult, fusion_operator_mnd, hopf_operator_adj,
                                   hopf_operator_mnd, restrict_adj, restrict_mnd)
from catkit.hopf.parametric import (ParametricAdjunction, parametric_right_adjoint,
                                    reindex, validate_parametric_adjunction)
from catkit.hopf.parametric_objects import (AdjHopfAdjointObject, MndHopfAdjointObject,
                                            hopf_adjoint_object_adj,
                                            hopf_adjoint_object_mnd)
from catkit.hopf.transport import (Comparison, compare_hopf_phi, fusion_hopf_equivalence,
                                   split_fork_inverse)
