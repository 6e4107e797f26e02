"""Kirby diagrams of 4-dimensional open books built from Heegaard diagrams of their pages."""

__version__ = "0.1.0"

from .errors import InvalidDiagram, MoveError, OpenBookError, ParseError
from .heegaard import (
    AttachingCurve, Cross, HeegaardDiagram, Kink, Pass, canonical_punctured_handlebody,
    euler_char_page, format_hd, lens_diagram, parse_hd, validate,
)
from .monodromy import (
    CocoreImage, Sphere, Torus, TwistWord, cocore_images, isotopy_normalize, parse_twistword,
    spun_lens_twistword,
)
from .kirby import (
    FramedComponent, KirbyDiagram, algorithm1, algorithm2, algorithm3, euler_characteristic,
    from_json, stabilize, to_json,
)
from .moves import cancel_12, cancel_23, crossing_change, normalize_framing, slide
from .braids import Braid, Permutation, braid_permutation, braids_equivalent, closure_is_knot
from .invariants import (
    fundamental_group, homology, intersection_form, invariant_bundle, smith_normal_form,
)
from .reduce import reduce, rolfsen_normalize, spun_lens_equivalent, verify_reduce
