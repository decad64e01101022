// Driving the command-line front end in-process: CSV tables and JSON
// verification reports.

use gamma_sharp::cli::run_with;

fn capture(args: &[&str]) -> Result<(i32, String), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gamma-sharp").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    Ok((code, String::from_utf8(out)?))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (code, csv) = capture(&["compare", "--a", "1", "--n", "10", "--family", "thm13x"])?;
    print!("{csv}");
    assert_eq!(code, 0);

    let (code, json) = capture(&[
        "enclose", "--a", "1", "--n", "10000", "--method", "thm14x", "--format", "json",
    ])?;
    print!("{json}");
    assert_eq!(code, 0);

    let (code, report) = capture(&["verify", "--suite", "chen", "--format", "json"])?;
    let v: serde_json::Value = serde_json::from_str(&report)?;
    println!(
        "chen suite: passed = {}, points = {}",
        v["passed"], v["points_checked"]
    );
    assert_eq!(code, 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
