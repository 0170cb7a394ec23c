"""Cyclic codes over R = Z4 + uZ4 (u^2 = 0) and their binary Gray images."""

from .codes import (
    CanonicalGens,
    CRTProfile,
    CyclicCode,
    canonical_form,
    enumerate_all,
    from_canonical,
    from_crt_profile,
    from_generators,
    min_lee_weight,
    nakayama_count,
    paper_rank,
    residue_code,
    torsion_code,
)
from .gray import gray_map, gray_map_vec, gray_map_vec_inverse, quasi_cyclic_shift, cyclic_shift
from .image import BinaryCodeSet, gray_image, params, search_best, summarize
from .poly import factorize, graeffe_hensel_lift
from .ring import ELEMENTS, IdealLabel, RElem

__version__ = "0.1.0"
