"""Cohomology, cohomology rings and L^2-invariants of NEC groups."""
from .abelian import FinAbGroup, canonical_form, direct_sum, is_isomorphic, uct_cohomology
from .cohomology import (AS_PRINTED, PROOF_DERIVED, cohomology, cohomology_table,
                         homology, homology_table, t_constants, w_constants)
from .errors import (BadPeriod, InvalidSignature, NecError, NonOrientableGenusZero,
                     NotHyperbolic, SignatureSyntaxError)
from .l2 import l2_betti, rational_euler_characteristic
from .presentation import abelianization, build_presentation, relation_matrix
from .ring import cup_product, degree_component, ring_structure
from .signature import (Signature, derived_counts, format_signature,
                        hyperbolic_measure, parse_signature, validate)

__version__ = "0.1.0"
