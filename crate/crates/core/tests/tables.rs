use duadic_core::tables::{run_rows, table1, table2, CheckStatus};
use duadic_core::Budget;

fn assert_rows_pass(rows: &[duadic_core::RowManifest]) {
    for (row, report) in rows.iter().zip(run_rows(rows, &Budget::default())) {
        let report = report.unwrap_or_else(|e| panic!("q={} n={}: {e}", row.q, row.n));
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect();
        assert!(
            failed.is_empty(),
            "q={} n={} m={} {:?}: {failed:?}",
            row.q,
            row.n,
            report.m,
            row.kind
        );
    }
}

#[test]
fn type_i_fixtures_reproduce() {
    assert_rows_pass(&table1());
}

#[test]
fn type_ii_fixtures_reproduce() {
    assert_rows_pass(&table2());
}
