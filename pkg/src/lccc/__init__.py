from .adjunction import (  # noqa: F401
    AdjunctionWitness,
    CheckCfg,
    LawReport,
    check_chain,
    check_functor_laws,
    check_hom_bijection,
    check_triangle_identities,
    compose_adjunctions,
    currying_adjunction,
    diagonal_product_adjunction,
    shriek_star_adjunction,
    slice_exp_adjunction,
    slice_exp_as_composite,
    star_pi_adjunction,
)
from .category import FINSET, FunctorRepr  # noqa: F401
from .depprod import (  # noqa: F401
    Section,
    dependent_product_fiberwise,
    dependent_product_pullback,
    dependent_sum,
    f_star,
    product_oracle_iso,
    sections_of,
)
from .errors import EnumerationTooLarge, LCCCError  # noqa: F401
from .exponentials import curry, exp, slice_exp, uncurry  # noqa: F401
from .finset import FinMap, FinSetObj, compose, hom_set, identity  # noqa: F401
from .limits import Cospan, base_change, mediator, pullback  # noqa: F401
from .slice import SliceCategory, SliceMor, SliceObj  # noqa: F401
from .version import __version__  # noqa: F401
