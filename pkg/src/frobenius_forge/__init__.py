"""Exact Frobenius pushforward decompositions, multiplicity dynamics and
differential-operator diagnostics for invariant rings in characteristic p."""

__version__ = "0.1.0"

from .errors import (BudgetExceeded, EigenCheckFailed, ForgeError, FrontierInconclusive, Inconclusive,
                     InputError, InvariantViolation, NonIntegralMultiplicity, NotFFRT, NotPrimitive,
                     PresentationIncomplete, WindowTooSmall, ZeroDiscriminant)
from .lattice import (Character, GradingGroup, RationalCharacter, WeightSystem, divide_character, in_supp,
                      is_strongly_critical, multiply_character, strongly_critical_certificate)
from .monomial import (CovariantClass, DecompositionReport, canonical_key, class_of_residue, hilbert_basis,
                       iso_test, minimal_generators)
from .diagonal import (ClosureResult, closure_classes, multiplicity_direct, multiplicity_matrix,
                       pushforward_decompose, strongly_critical_classes)
from .dynamics import (MultiplicityMatrix, PerronData, min_findim_sequence, perron, primitivity,
                       semisimple_block_report, sfr_positivity_certificate, wielandt_bound)
from .cyclotomic import Cyclotomic, parse_cyclotomic
from .groupchar import (CharacterTable, ClassFunction, ConjugacyClassData, FiniteGroupAction,
                        decompose_into_irreducibles, frobenius_twist, group_multiplicity_direct,
                        group_multiplicity_matrix, pushforward_multiplicities, truncation_character)
from .diffops import (TruncatedOperator, commutator, frobenius_projection_op, hasse_op, is_rq_linear, mult_op,
                      op_compose, op_sum, operator_order, rq_linear_op)
from .discriminant import RingExtensionPresentation, discriminant, trace_form
from .witness import Witness, dsimplicity_witness_search, replay_witness
from .specfile import RingSpec, parse_spec, parse_spec_text
