"""
hfr: real bordered Heegaard Floer computations over F2

Pointed matched circles, strands algebras, type D / type A structures and
their box tensor products, the real AZ modules of a surface with
involution, and the genus-one satellite pipeline for branched double covers.
"""

__version__ = "0.1.0"

from .errors import HFRError
from .pmc import PointedMatchedCircle, RealPointedMatchedCircle, parse_pmc, realify
from .algebra import AlgebraElement, StrandsAlgebra, StrandsDiagram, torus_algebra, torus_element
from .chain_complex import ChainComplex, homology_dim
from .type_d import Generator, TypeDStructure, check_structure_relation, is_bounded, simplify
from .type_a import (
    TypeAModule,
    TypeDABimodule,
    TypeDDBimodule,
    box_A_DD,
    box_AD,
    box_DA_D,
    check_ainfty,
    mor_to_d,
)
from .az_modules import cfar_az, cfdd_identity, cfdr_az, cfdr_azbar, mult2_reduction, small_model
from .satellites import AlternatingKnotData, hfr_satellite_dim

__all__ = [
    "HFRError",
    "PointedMatchedCircle",
    "RealPointedMatchedCircle",
    "parse_pmc",
    "realify",
    "AlgebraElement",
    "StrandsAlgebra",
    "StrandsDiagram",
    "torus_algebra",
    "torus_element",
    "ChainComplex",
    "homology_dim",
    "Generator",
    "TypeDStructure",
    "check_structure_relation",
    "is_bounded",
    "simplify",
    "TypeAModule",
    "TypeDABimodule",
    "TypeDDBimodule",
    "box_A_DD",
    "box_AD",
    "box_DA_D",
    "check_ainfty",
    "mor_to_d",
    "cfar_az",
    "cfdd_identity",
    "cfdr_az",
    "cfdr_azbar",
    "mult2_reduction",
    "small_model",
    "AlternatingKnotData",
    "hfr_satellite_dim",
]
