//! Runs every verification suite against the default corpus: the full
//! census on up to 8 elements plus wheels and whirls up to 7 spokes.
//!
//! Counterexamples, if a statement ever failed, would print below the
//! summary with enough detail to reproduce them.

use matroids::{run_all, Corpus, DEFAULT_KMAX, DEFAULT_NMAX};

fn main() -> matroids::Result<()> {
    let corpus = Corpus::build(DEFAULT_NMAX, DEFAULT_KMAX)?;
    println!("corpus: {} isomorphism classes", corpus.classes.len());

    let mut all_pass = true;
    for out in run_all(&corpus)? {
        println!(
            "{:<12} checked {:>7}  fails {:>3}  [{}]",
            out.report.suite, out.report.checked, out.report.fails, out.report.verdict
        );
        for line in &out.counterexamples {
            println!("    {line}");
        }
        all_pass &= out.report.fails == 0;
    }
    println!("{}", if all_pass { "all statements verified" } else { "FAILURES FOUND" });
    Ok(())
}
