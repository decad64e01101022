#[allow(dead_code)]
mod digamma_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/digamma.rs"));
}

#[test]
fn digamma_example_runs() {
    digamma_example::run_example().expect("digamma example should run");
}

#[allow(dead_code)]
mod generalized_gamma_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/generalized_gamma.rs"
    ));
}

#[test]
fn generalized_gamma_example_runs() {
    generalized_gamma_example::run_example().expect("generalized_gamma example should run");
}

#[allow(dead_code)]
mod convergence_table_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/convergence_table.rs"
    ));
}

#[test]
fn convergence_table_example_runs() {
    convergence_table_example::run_example().expect("convergence_table example should run");
}

#[allow(dead_code)]
mod best_constants_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/best_constants.rs"
    ));
}

#[test]
fn best_constants_example_runs() {
    best_constants_example::run_example().expect("best_constants example should run");
}

#[allow(dead_code)]
mod certified_enclosure_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/certified_enclosure.rs"
    ));
}

#[test]
fn certified_enclosure_example_runs() {
    certified_enclosure_example::run_example().expect("certified_enclosure example should run");
}

#[allow(dead_code)]
mod compare_bounds_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/compare_bounds.rs"
    ));
}

#[test]
fn compare_bounds_example_runs() {
    compare_bounds_example::run_example().expect("compare_bounds example should run");
}

#[allow(dead_code)]
mod sharpness_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sharpness.rs"
    ));
}

#[test]
fn sharpness_example_runs() {
    sharpness_example::run_example().expect("sharpness example should run");
}

#[allow(dead_code)]
mod lemma_certificates_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/lemma_certificates.rs"
    ));
}

#[test]
fn lemma_certificates_example_runs() {
    lemma_certificates_example::run_example().expect("lemma_certificates example should run");
}

#[allow(dead_code)]
mod series_remainders_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/series_remainders.rs"
    ));
}

#[test]
fn series_remainders_example_runs() {
    series_remainders_example::run_example().expect("series_remainders example should run");
}

#[allow(dead_code)]
mod accuracy_policy_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/accuracy_policy.rs"
    ));
}

#[test]
fn accuracy_policy_example_runs() {
    accuracy_policy_example::run_example().expect("accuracy_policy example should run");
}

#[allow(dead_code)]
mod cli_report_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cli_report.rs"
    ));
}

#[test]
fn cli_report_example_runs() {
    cli_report_example::run_example().expect("cli_report example should run");
}
