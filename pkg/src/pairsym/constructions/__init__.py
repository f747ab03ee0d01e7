"""Constructions of MDS symbol-pair codes and a dispatcher over them."""

from .development import (DevelopmentSeed, SeedCheck, Z6_BASE, dev_8_7_2p, develop,
                          is_development_seed, z6_seed)
from .dispatch import ROUTES, construct
from .extension import embed_classical, extend_by_graph, interleave, mds_nm1, mds_nm2
from .linear import TABLE1, linear_d4, linear_d5, linear_dn, table1_code
from .product import product

__all__ = [
    "DevelopmentSeed", "SeedCheck", "Z6_BASE", "dev_8_7_2p", "develop", "is_development_seed",
    "z6_seed", "ROUTES", "construct", "embed_classical", "extend_by_graph", "interleave",
    "mds_nm1", "mds_nm2", "TABLE1", "linear_d4", "linear_d5", "linear_dn", "table1_code",
    "product",
]
