"""Exact representation theory of finite left regular bands under group
symmetry: support lattices, primitive idempotent families, Peirce corners,
Cartan invariants, poset-homology degree characters, derangement modules,
and random-to-top spectra, all over the rationals (idempotents also over
prime fields)."""

from .algebra import (BandAlgebra, Cfpoi, build_cfpoi, cartan_invariants,
                      cartan_orbit_basis_check, comparable_pair_orbits,
                      deletion_isomorphism_check, invariant_idempotents,
                      invariant_peirce_component, orbit_sum_generator_test,
                      peirce_component, peirce_decomposition_check,
                      plain_cartan_matrix, radical_basis, radical_power_basis,
                      saliola_properties_check, theorem_a_report)
from .analysis import (FlagContext, SpectrumReport, SpectrumRow,
                       VirtualCharacter, arrangement_det_vs_deg_check,
                       boolean_derangement_identities, catzero_report,
                       characters_equal, derangement_character,
                       derangement_number, flag_context,
                       interval_derangement_character, paths_layer_check,
                       random_to_top, structure_summary, theorem_c_check,
                       theorem_d_check, theorem_e_checks,
                       transported_character)
from .constructions import (CubeComplexData, CubeLRB, FlagLRB,
                            GeometricLattice, ag_lattice, boolean_lattice,
                            catzero_cube_lrb, cubulated_ngon, flag_permutation,
                            free_lrb, geometric_lattice, geometric_lattice_lrb,
                            lattice_interval, lrb_from_sign_vectors,
                            pg_lattice, rank2_arrangement_faces,
                            word_permutation)
from .fields import QQ, PrimeField, parse_field
from .instances import (VERIFY_CORPUS, Instance, builtin_instance,
                        instance_from_json, resolve_instance,
                        sign_homomorphism)
from .semigroup import (FinitePoset, Semigroup, SupportLattice,
                        check_lrb_axioms, is_connected, is_hereditary_tree,
                        meet_semilattice_lrb, semigroup_order,
                        support_lattice)
from .symmetry import (CharacterTable, ClassFunction, CyclotomicValue,
                       GroupAction, PermGroup, character_table,
                       induce_character, inner_product,
                       isotypic_multiplicities, permutation_character,
                       restrict_character, trivial_character)
from .topology import (contragredient, degree_character,
                       equivariant_homology_characters, h0_tilde_character,
                       interval_homology_character, is_cw_lrb,
                       is_hereditary_homological, mobius, reduced_homology,
                       support_rank)

__version__ = "0.1.0"
