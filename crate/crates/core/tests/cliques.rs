use seidel_core::constructions::build;
use seidel_core::spectra::{certify_spectrum, delete_clique, find_switching_clique, two_ev_submatrix_spectrum};

#[test]
fn clique_deletions_from_hadamard16() {
    let h = build("hadamard16").unwrap().seidel;
    for c in 1..=4 {
        let clique = find_switching_clique(&h, c).unwrap();
        let (predicted, allowed) = two_ev_submatrix_spectrum(-5, 3, 16, 6, c).unwrap();
        assert!(allowed);
        let smaller = delete_clique(&h, &clique).unwrap();
        assert_eq!(smaller.n(), 16 - c);
        certify_spectrum(&smaller, &predicted).unwrap();
    }
    // cliques are at most one more than the larger eigenvalue
    assert!(find_switching_clique(&h, 5).is_none());
    assert!(!two_ev_submatrix_spectrum(-5, 3, 16, 6, 5).unwrap().1);
}

#[test]
fn clique_deletion_from_two_graph_36() {
    let s = build("two-graph-36").unwrap().seidel;
    let clique = find_switching_clique(&s, 8).unwrap();
    let (predicted, _) = two_ev_submatrix_spectrum(-5, 7, 36, 21, 8).unwrap();
    let smaller = delete_clique(&s, &clique).unwrap();
    let spec = certify_spectrum(&smaller, &predicted).unwrap();
    assert_eq!(spec.to_string(), "{[-5]^14,[3]^7,[7]^7}");
}
