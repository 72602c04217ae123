//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 4 and 9 compare against printed formulas that the engine does
//! not reproduce. They are reported as FAIL, and this target checks that
//! they fail for exactly the documented reason and no other.

use qgroth::verify::{verify_all, CriterionReport, VerifyOptions};

const KNOWN_FAILING: [u8; 2] = [4, 9];

fn report() -> Vec<CriterionReport> {
    let reports = verify_all(&VerifyOptions::default());
    for r in &reports {
        println!("{r}");
    }
    reports
}

fn main() {
    let reports = report();
    assert_eq!(
        reports.iter().map(|r| r.id).collect::<Vec<_>>(),
        (1..=10).collect::<Vec<_>>()
    );

    for r in &reports {
        if KNOWN_FAILING.contains(&r.id) {
            assert!(
                !r.pass,
                "criterion {} unexpectedly passes: {}",
                r.id, r.detail
            );
        } else {
            assert!(r.pass, "criterion {} fails: {}", r.id, r.detail);
        }
    }

    // The printed sl3 term carries z[2,-1]; the engine produces z[2,1].
    let c4 = &reports[3];
    assert!(
        c4.detail.contains("z[2,-1]^1 not produced"),
        "{}",
        c4.detail
    );
    assert!(
        c4.detail.contains("z[1,6]^1 z[1,2]^-1 z[2,1]^1"),
        "{}",
        c4.detail
    );
    assert_eq!(
        c4.detail.matches("not produced").count(),
        1,
        "{}",
        c4.detail
    );

    // Only the printed Casimir fails; the six relations and the exchange
    // form of the Casimir hold.
    let c9 = &reports[8];
    assert_eq!(c9.detail.matches("FAIL").count(), 1, "{}", c9.detail);
    assert!(
        c9.detail.contains("FAIL Casimir EF - t^{1/2}K - t^{1/2}K'"),
        "{}",
        c9.detail
    );
    assert!(
        c9.detail.contains("PASS EF - t^{-1/2}K - t^{1/2}K' = 0"),
        "{}",
        c9.detail
    );

    println!("acceptance: 8 criteria PASS; 4 and 9 FAIL as documented");
}
