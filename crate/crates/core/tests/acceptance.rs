//! Acceptance gate: one test per top-level criterion, each printing a
//! single pass/fail line (run with `--nocapture` to see them).

use std::time::{Duration, Instant};

use confcoh::intrings::FIntRing;
use confcoh::tcs::cup_length_b2;
use confcoh::verify::{
    check_ambient_kernels, check_confluence, check_d4e_expansion, check_displayed_relations_b,
    check_displayed_relations_f, check_exactness, check_mod2_dimension_tables,
    check_oracle_equivalence, check_pinned_products, check_relation_family,
    check_rho_injectivity, check_rho_ring_homomorphism, check_sigma_r_identities,
    check_sq1_squares_to_zero, check_strategy_cases, check_wprime_relations,
};

fn report(name: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("PASS {name}"),
        Err(msg) => println!("FAIL {name}: {msg}"),
    }
    result.unwrap();
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let result = check_oracle_equivalence(1, 30);
    let within_budget = start.elapsed() < Duration::from_secs(60);
    report(
        "criterion 1: additive tables via spectral sequence == closed form, m <= 30, < 60 s",
        result.and(if within_budget {
            Ok(())
        } else {
            Err("time budget of 60 s exceeded".to_string())
        }),
    );
}

#[test]
fn criterion_2_mod2_dimension_tables() {
    report(
        "criterion 2: mod-2 dimension tables and Poincare symmetry, m <= 30",
        check_mod2_dimension_tables(1, 30),
    );
}

#[test]
fn criterion_3_relation_suite() {
    report(
        "criterion 3: presented relations, R-family, sigma identities, w' relations",
        check_displayed_relations_f(3, 25)
            .and(check_displayed_relations_b(3, 25))
            .and(check_relation_family(3, 25))
            .and(check_sigma_r_identities(3, 25))
            .and(check_wprime_relations(1, 29)),
    );
}

#[test]
fn criterion_4_pinned_products() {
    let extra = || -> Result<(), String> {
        let rf = FIntRing::new(5);
        if rf.mul(&rf.w(), &rf.y2()) != rf.monomial(2, 0, 1) {
            return Err("w y2 != x2^2 z3 at m=5".to_string());
        }
        Ok(())
    };
    report(
        "criterion 4: pinned products at m = 3 and m = 5",
        check_pinned_products(1, 25).and(extra()),
    );
}

#[test]
fn criterion_5_tcs_lower_bounds() {
    let result = || -> Result<(), String> {
        for (m, expect) in [(3u32, 5u32), (5, 9), (6, 9)] {
            for eta in [0u8, 2] {
                let cert = cup_length_b2(m, eta);
                if cert.lower_bound != expect {
                    return Err(format!(
                        "lower bound at m={m}, eta={eta} is {}, expected {expect}",
                        cert.lower_bound
                    ));
                }
                if cert.eta_dependent {
                    return Err(format!("bound at m={m} reported as eta-dependent"));
                }
            }
        }
        Ok(())
    }();
    report(
        "criterion 5: tcs lower bounds 5/9/9 at m = 3/5/6, independent of eta",
        result,
    );
}

#[test]
fn criterion_6_strategy_verifier() {
    report(
        "criterion 6: strategy verifier for all cases m <= 25 and the d4*e expansion",
        check_strategy_cases(1, 25)
            .and(check_d4e_expansion(1, 25))
            .and(check_exactness(1, 25)),
    );
}

#[test]
fn criterion_7_mod2_reduction() {
    report(
        "criterion 7: rho is a ring map, injective on torsion, with trivial ambient kernels",
        check_rho_ring_homomorphism(3, 12)
            .and(check_rho_injectivity(1, 20))
            .and(check_ambient_kernels(1, 20)),
    );
}

#[test]
fn criterion_8_robustness_and_cli() {
    let sweeps = check_confluence(3, 12).and(check_sq1_squares_to_zero(1, 20));
    let start = Instant::now();
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_confcoh"))
        .args(["verify", "--m-range", "1..30", "--suite", "all"])
        .output()
        .expect("failed to launch the confcoh binary");
    let elapsed = start.elapsed();
    let cli = if !output.status.success() {
        Err(format!(
            "verify exited with {:?}:\n{}",
            output.status.code(),
            String::from_utf8_lossy(&output.stdout)
        ))
    } else if elapsed >= Duration::from_secs(300) {
        Err(format!("verify took {elapsed:?}, budget is 5 minutes"))
    } else {
        Ok(())
    };
    report(
        "criterion 8: confluence/Sq1 sweeps and `verify --m-range 1..30 --suite all` exits 0 in < 5 min",
        sweeps.and(cli),
    );
}
