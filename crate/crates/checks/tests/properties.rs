//! Randomized invariants on small polytopes, cones, matrices and corrupted
//! inputs.

use polyhole_checks::props;

const CASES: u32 = 256;

#[test]
fn vertex_facet_round_trip() {
    props::vertex_facet_round_trip(CASES).unwrap();
}

#[test]
fn lattice_points_match_box_scan() {
    props::lattice_points_match_box_scan(CASES).unwrap();
}

#[test]
fn membership_matches_sumset() {
    props::membership_matches_sumset(CASES).unwrap();
}

#[test]
fn holes_propagate_from_the_previous_degree() {
    props::holes_propagate_from_the_previous_degree(CASES).unwrap();
}

#[test]
fn plane_hilbert_basis_matches_brute_force() {
    props::plane_hilbert_basis_matches_brute_force(CASES).unwrap();
}

#[test]
fn hilbert_basis_is_minimal_and_generating() {
    props::hilbert_basis_is_minimal_and_generating(CASES).unwrap();
}

#[test]
fn smith_divisors_are_unimodular_invariants() {
    props::smith_divisors_are_unimodular_invariants(CASES).unwrap();
}

#[test]
fn unimodular_simplex_is_invariant() {
    props::unimodular_simplex_is_invariant(CASES).unwrap();
}

#[test]
fn corrupted_facet_list_is_rejected() {
    props::corrupted_facet_list_is_rejected(CASES).unwrap();
}

#[test]
fn corrupted_binomial_is_rejected() {
    props::corrupted_binomial_is_rejected(CASES).unwrap();
}

#[test]
fn report_rejects_a_corrupted_facet_list() {
    props::report_rejects_a_corrupted_facet_list(CASES).unwrap();
}
