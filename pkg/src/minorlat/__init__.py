"""Boolean function minors, Post-class membership, antichain verification,
and cardinality classification of closed intervals of equational classes."""

from .core import (BooleanFunction, ParseError, Point, Polynomial, complement,
                   compose, constant, dual, essential_arity, essential_core,
                   essential_indices, evaluate, format_function, from_zhegalkin,
                   is_idempotent_fn, parse_function, projection, substitute,
                   underline, zhegalkin)
from .minor import (AntichainReport, SearchBudgetExceeded, SubstitutionWitness,
                    canonical_key, equivalent, minimal_elements, minor_leq,
                    verify_antichain)
from .classes import (ClassId, Rank, catalog, difference_sample, dual_class,
                      is_idempotent_class, is_subclass, member, parse_class_id,
                      separating_rank, validate_catalog)
from .families import (FamilySpec, make_G, make_H, make_T, make_f, make_g,
                       make_mu, make_s, make_tu, make_u, parse_family_spec,
                       quasi_monadic_lattice)
from .hypergraph import (HomWitness, Hypergraph, complete_graph,
                         edge_surjective_hom, function_of, hypergraph_of,
                         lemma4_check, parse_hypergraph)
from .assoc import (NonAssocWitness, arity_growth_witness, is_associative,
                    is_quasi_associative, iterate, strict_extension_witness)
from .monoid import (CappedClass, assoc_lemma_check, closure, compose_classes,
                     intersect, is_idempotent_at_cap, projection_class, union)
from .classify import (CrossCheckReport, IntervalVerdict, MinimalInterval,
                       classify_interval, cross_check_thm10, enumerate_between,
                       minimal_interval_table, validate_minimal_intervals)

__version__ = "0.1.0"
