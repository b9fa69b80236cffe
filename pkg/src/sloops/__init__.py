"""Finite quasigroups and loops: isotopes, Smarandache classes, autotopisms."""

from .core import (MAX_ORDER, CellOutOfRange, DegreeMismatch, LatinViolation,
                   LoopError, MulTable, NoIdentity, Perm, format_table,
                   left_inverse, left_translation, parse_table, perm_compose,
                   perm_inverse, read_table, right_inverse, right_translation,
                   validate_table, write_table)
from .identities import Counterexample, PropertyId, check_a_loop, check_identity
from .subalgebra import (LOOSE, STRICT, ClassificationReport, NonTrivialityPolicy,
                         SmarandacheClass, SubsetMask, classify, restrict,
                         subloops, subquasigroups)
from .isotopy import (IsotopismTriple, NotALoopIsotope, SElementOutsideSubloop,
                      WitnessNotFound, apply_isotopism, find_isomorphism,
                      is_g_loop, principal_isotope, random_loop_isotopism,
                      smarandache_principal_isotope, verify_theorem_1_1)
from .autotopism import (AutotopismWitness, BoundExceeded, NotClosedUnderComponents,
                         TheoremTripleId, autotopism_search, automorphisms,
                         build_theorem_triple, is_autotopism)
from .universality import (NotInClass, TheoremReport, UniversalityReport,
                           is_smarandache_universal, is_universal, verify_theorem,
                           verify_theorems)
from .catalog import (CorpusEntry, NotAGroup, SearchSpec, corpus, gen_chein,
                      gen_cyclic, gen_dihedral, gen_klein, gen_quaternion,
                      gen_sym3, search_loops)

__version__ = "0.1.0"
