"""Invariants, definable subgroups and dp-rank of presented ordered abelian groups."""
from .arith import INF
from .core import (ArchimedeanBlock, ConvexSubgroup, DivisibilityProfile, Element, Kind, Lex,
                   OmegaRepeat, Q, Z, ZLocAllPrimes, H_n, H_n_minus, dense, flatten, in_nG, lex,
                   omega, segment_exp, tail)
from .dsl import normalize, parse, to_text
from .errors import InputError, InvariantError, OagError, ParseError
from .ladders import (Ambient, Coset, LadderSubgroup, add, coset_intersect, decompose_crt,
                      index, intersect, membership)
from .lattice import IntegerLattice, embed, lattice_index, lattice_intersect, lattice_sum
from .rank import (ALEPH0, RankReport, Verdict, antiregularity, c_G, dp_rank, dp_rank_reduct,
                   inp_witness, k_p, p_infinity, s_infinity, verdict, verify_family)
from .spines import Spine, bracket, definable_convex_subgroups, spine, spine_class
from .fields import (FieldClass, FieldDescriptor, Tri, ValuedFieldDescriptor, audit_necessary,
                     delta_p, kaplansky_check, standard_decomposition, transfer_verdict)

__version__ = "0.1.0"
