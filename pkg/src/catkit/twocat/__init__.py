"""Cells between adjunctions and between monads, mates, and the transport 2-functors."""
from catkit.twocat.cells import (AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell,
                                 compose_adj_cells, compose_mnd_cells,
                                 identity_adj_cell, identity_mnd_cell, left_mate,
                                 mate, retype, validate_adj_one_cell,
                                 validate_adj_two_cell, validate_mnd_one_cell,
                                 validate_mnd_two_cell)
from catkit.twocat.transport import (is_em_adjunction, phi_adjunction, phi_one_cell,
                                     phi_two_cell, psi_one_cell, psi_two_cell,
                                     transpose_adj_to_mnd, transpose_mnd_to_adj)
