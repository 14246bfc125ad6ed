"""Finite categories, functors and natural transformations."""
from catkit.core.category import (FinCat, Morphism, ProductCat, op_category,
                                  pair_id, product_category, validate_category)
from catkit.core.functor import (Functor, compose_functors, constant_functor,
                                 fix_left, fix_right, functor_product,
                                 identity_functor, op_functor, pairing, projection,
                                 validate_functor)
from catkit.core.limits import max_morphisms, morphism_limit, set_max_morphisms
from catkit.core.parametric import ParamTrans, validate_param_trans
from catkit.core.report import Check, CheckLog, ValidationReport, Violation
from catkit.core.transformation import (Invertibility, NatTrans, as_nat,
                                        identity_nat, is_invertible, nat_diff,
                                        nat_product, op_nat, validate_nat_trans,
                                        vcomp, vcompose, whisker_left,
                                        whisker_right)
