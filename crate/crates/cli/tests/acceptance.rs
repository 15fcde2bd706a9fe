//! Acceptance criteria, run in sequence so each wall-clock limit measures one
//! criterion alone. Prints one line per criterion and exits nonzero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use harmonia::suite::{run_suite, Report, RunConfig, Suite};

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<String, String>,
}

fn suite(suite: Suite, properties: &[&str]) -> Result<String, String> {
    let mut parts = Vec::new();
    for &p in properties {
        let report = run_suite(&RunConfig {
            seed: 0,
            suites: vec![suite],
            property: Some(p.to_string()),
            ..RunConfig::default()
        });
        parts.push(check(&report, p)?);
    }
    Ok(parts.join(", "))
}

fn check(report: &Report, property: &str) -> Result<String, String> {
    let p = report
        .property(property)
        .ok_or_else(|| format!("{property} did not run"))?;
    if !p.holds() {
        return Err(format!("{property}: {:?}", p.failures));
    }
    if p.skipped > 0 {
        return Err(format!("{property}: {} instances skipped", p.skipped));
    }
    Ok(format!("{property} {}/{}", p.passed, p.instances))
}

fn determinism() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_harmonia");
    let base = std::env::temp_dir().join(format!("harmonia-acceptance-{}", std::process::id()));
    let run = |dir: &Path| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(["verify", "--suite", "all", "--seed", "7", "--out"])
            .arg(dir)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit status {}", out.status));
        }
        Ok(out.stdout)
    };
    let (a, b) = (base.join("a"), base.join("b"));
    let (sa, sb) = (run(&a)?, run(&b)?);
    if sa != sb {
        return Err("standard output differs".into());
    }
    let files = [
        "report.json",
        "report.txt",
        "square.svg",
        "saddle.json",
        "curve.json",
    ];
    for f in files {
        let (x, y) = (std::fs::read(a.join(f)), std::fs::read(b.join(f)));
        match (x, y) {
            (Ok(x), Ok(y)) if x == y => {}
            (Ok(_), Ok(_)) => return Err(format!("{f} differs")),
            _ => return Err(format!("{f} missing")),
        }
    }
    let _ = std::fs::remove_dir_all(&base);
    Ok(format!("{} files identical", files.len()))
}

fn criteria() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion {
            id: 1,
            name: "harmonic fourth is independent of the auxiliaries",
            limit: secs(5),
            run: || suite(Suite::Harmonicity, &["harmonic-fourth-independence"]),
        },
        Criterion {
            id: 2,
            name: "triangle reflections form the Klein four-group",
            limit: secs(5),
            run: || suite(Suite::Harmonicity, &["klein-four-group"]),
        },
        Criterion {
            id: 3,
            name: "harmonic curve points agree with the conic fit and constructions",
            limit: secs(20),
            run: || suite(Suite::Curves, &["curve-coherence"]),
        },
        Criterion {
            id: 4,
            name: "inscribed square generates the unit circle",
            limit: secs(1),
            run: || suite(Suite::Curves, &["circle-instance"]),
        },
        Criterion {
            id: 5,
            name: "pole reflections preserve the curve",
            limit: secs(20),
            run: || suite(Suite::Polarity, &["polar-reflection"]),
        },
        Criterion {
            id: 6,
            name: "tangential map carries generators and reflections",
            limit: secs(10),
            run: || suite(Suite::Polarity, &["tangential-correspondence"]),
        },
        Criterion {
            id: 7,
            name: "synthetic polar plane matches the quadric",
            limit: secs(30),
            run: || suite(Suite::Ruled, &["space-polarity"]),
        },
        Criterion {
            id: 8,
            name: "lift and section round trip",
            limit: secs(30),
            run: || suite(Suite::Ruled, &["lift-section"]),
        },
        Criterion {
            id: 9,
            name: "Pappus and the equipal property",
            limit: secs(120),
            run: || {
                suite(
                    Suite::PappusEquipal,
                    &[
                        "pappus-random",
                        "pappus-exhaustive-pg2-3",
                        "pappus-exhaustive-pg2-5",
                        "equipal-exhaustive-pg3-3",
                        "pappus-witness",
                        "pappus-witness-negative",
                    ],
                )
            },
        },
        Criterion {
            id: 10,
            name: "finite model axioms and characteristic",
            limit: secs(60),
            run: || {
                suite(
                    Suite::Finite,
                    &[
                        "axioms-pg2-3",
                        "axioms-pg2-5",
                        "axioms-pg3-3",
                        "fano-axiom-5",
                        "characteristic-probe",
                    ],
                )
            },
        },
        Criterion {
            id: 11,
            name: "verify runs are byte-identical",
            limit: None,
            run: determinism,
        },
    ]
}

fn main() {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let limit = c
            .limit
            .map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        let outcome = match (&result, c.limit) {
            (Err(e), _) => Err(e.clone()),
            (Ok(_), Some(l)) if took > l => Err("time limit exceeded".to_string()),
            (Ok(detail), _) => Ok(detail.clone()),
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS {} ({:.2}s, limit {limit}): {detail}",
                c.id,
                c.name,
                took.as_secs_f64()
            ),
            Err(e) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL {} ({:.2}s, limit {limit}): {e}",
                    c.id,
                    c.name,
                    took.as_secs_f64()
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria().len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
