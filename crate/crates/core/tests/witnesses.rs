use seidel_core::bounds::{check_rows, check_witness, n5_bounds, n_table, NeumaierV, Witness};

#[test]
fn max_lines_table_witnesses_hold() {
    let rows = n_table(2..=41).unwrap();
    let checks = check_rows(&rows, None).unwrap();
    assert!(!checks.is_empty());
    for c in &checks {
        assert!(c.ok, "{c:?}");
    }
}

#[test]
fn angle_five_witnesses_hold() {
    let rows: Vec<_> = (2..=19).map(|d| n5_bounds(d, NeumaierV::Symbolic).unwrap()).collect();
    let checks = check_rows(&rows, Some(-5)).unwrap();
    // every dimension up to 19 carries a lower witness, and 8 and 9 an upper one
    assert_eq!(checks.len(), 18 + 2);
    for c in &checks {
        assert!(c.ok, "{c:?}");
    }
}

#[test]
fn linear_families_reach_three_halves() {
    for d in [21usize, 22, 31, 40] {
        let name = if d % 2 == 1 { format!("tensor-{d}") } else { format!("dynkin-{d}") };
        let c = check_witness(&Witness::Build { name }, d, (3 * (d as u64 - 1)) / 2, Some(-5)).unwrap();
        assert!(c.ok, "{c:?}");
    }
}
