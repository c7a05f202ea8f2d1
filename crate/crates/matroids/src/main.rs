//! Command-line front end: property checks, constructions, the census, the
//! verification suites, and isomorphism testing over matroid text files.
//!
//! Exit codes: 0 = success / property holds / suites pass, 1 = property
//! fails or a suite reports a counterexample, 2 = bad input or usage,
//! 3 = instance exceeds a capacity limit.

use clap::{Parser, Subcommand, ValueEnum};
use matroids::{
    are_isomorphic, canonical_form, census, read_matroid_file, run_suite, serialize_matroid,
    wheel, whirl, CensusFilter, Corpus, Error, Matroid, PropertyFlags, Suite, ALL_SUITES,
    CANONICAL_MAX,
};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "matroids", version, about = "Matroid connectivity toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test one connectivity property of a matroid file.
    Check {
        file: PathBuf,
        /// Connectivity order for connected/minimal/superminimal.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum)]
        prop: Prop,
    },
    /// Print the full property record of a matroid file as one json line.
    Props { file: PathBuf },
    /// Write a wheel, whirl, or uniform matroid as a text file.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Enumerate all isomorphism classes up to a size and print one json
    /// record per class.
    Census {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Keep only classes with this property: 3connected, min3c, sm3c,
        /// sm2c, brittle, or trianglefree.
        #[arg(long)]
        filter: Option<String>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites; reports go to stdout, counterexamples to
    /// stderr.
    Verify {
        /// One suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 7)]
        kmax: usize,
    },
    /// Exit 0 when the two matroid files are isomorphic, 1 otherwise.
    Iso { file_a: PathBuf, file_b: PathBuf },
}

#[derive(Subcommand)]
enum ConstructCmd {
    Wheel {
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Whirl {
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Uniform {
        r: usize,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Prop {
    Connected,
    Minimal,
    Superminimal,
    Brittle,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(match e {
                Error::Input(_) => 2,
                Error::Capacity(_) => 3,
            });
        }
    }
}

fn run(cli: Cli) -> matroids::Result<i32> {
    match cli.cmd {
        Cmd::Check { file, k, prop } => {
            let m = read_matroid_file(&file)?.matroid;
            let value = match prop {
                Prop::Connected => m.is_k_connected(k)?,
                Prop::Minimal => m.is_minimally_k_connected(k)?,
                Prop::Superminimal => m.is_super_minimally_k_connected(k)?,
                Prop::Brittle => m.is_brittle()?,
            };
            let name = match prop {
                Prop::Connected => "connected",
                Prop::Minimal => "minimal",
                Prop::Superminimal => "superminimal",
                Prop::Brittle => "brittle",
            };
            println!("{{\"prop\":\"{name}\",\"k\":{k},\"value\":{value}}}");
            Ok(if value { 0 } else { 1 })
        }
        Cmd::Props { file } => {
            let m = read_matroid_file(&file)?.matroid;
            println!("{}", props_line(&m)?);
            Ok(0)
        }
        Cmd::Construct { what } => {
            let (name, m, output) = match what {
                ConstructCmd::Wheel { k, output } => (format!("wheel{k}"), wheel(k)?.0, output),
                ConstructCmd::Whirl { k, output } => (format!("whirl{k}"), whirl(k)?.0, output),
                ConstructCmd::Uniform { r, n, output } => {
                    (format!("uniform_{r}_{n}"), Matroid::uniform(r, n)?, output)
                }
            };
            emit(output.as_deref(), &serialize_matroid(&name, &m))?;
            Ok(0)
        }
        Cmd::Census { nmax, filter, output } => {
            let filter = filter.map(|f| f.parse::<CensusFilter>()).transpose()?;
            let records = census(nmax, filter)?;
            let mut text = String::new();
            for rec in &records {
                text.push_str(&rec.json_line());
                text.push('\n');
            }
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Cmd::Verify { suite, nmax, kmax } => {
            let suites: Vec<Suite> = if suite == "all" {
                ALL_SUITES.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let corpus = Corpus::build(nmax, kmax)?;
            let mut failed = false;
            for s in suites {
                let out = run_suite(s, &corpus)?;
                println!("{}", serde_json::to_string(&out.report).expect("report serializes"));
                for line in &out.counterexamples {
                    eprintln!("{line}");
                }
                failed |= out.report.fails > 0;
            }
            Ok(if failed { 1 } else { 0 })
        }
        Cmd::Iso { file_a, file_b } => {
            let a = read_matroid_file(&file_a)?.matroid;
            let b = read_matroid_file(&file_b)?.matroid;
            let iso = are_isomorphic(&a, &b);
            println!("{{\"isomorphic\":{iso}}}");
            Ok(if iso { 0 } else { 1 })
        }
    }
}

/// Property record in the census schema; `cf` is null past the canonical
/// form capacity.
fn props_line(m: &Matroid) -> matroids::Result<String> {
    let flags = PropertyFlags::compute(m)?;
    let cf = if m.ground_size() <= CANONICAL_MAX {
        format!("\"{}\"", canonical_form(m)?)
    } else {
        "null".to_string()
    };
    Ok(format!(
        "{{\"cf\":{cf},\"n\":{},\"r\":{},\"3c\":{},\"min3c\":{},\"sm3c\":{},\"brittle\":{},\"triangles\":{},\"triads\":{},\"eit\":{},\"essential\":{}}}",
        m.ground_size(),
        m.full_rank(),
        flags.is_3connected,
        flags.is_min_3connected,
        flags.is_sm_3connected,
        flags.is_brittle,
        flags.triangle_count,
        flags.triad_count,
        flags.elements_in_triads,
        flags.essential_count,
    ))
}

fn emit(path: Option<&std::path::Path>, text: &str) -> matroids::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| {
            Error::Input(format!("cannot write {}: {e}", p.display()))
        }),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Error::Input(format!("cannot write to stdout: {e}")))
        }
    }
}
