use std::io::{Read, Write};
use std::time::Instant;

use chordless::coloring::{color_graph, PartialEdgeColoring};
use chordless::decomposition::{find_special_split, smaller_splits, Split};
use chordless::format::{parse_coloring, parse_graph, write_coloring, write_graph};
use chordless::generate::generate_chordless;
use chordless::oracle::brute_force_aci_with_limit;
use chordless::structure::{find_chord, find_dense_edge};
use chordless::verify::{extract_linear_forests, verify_acyclic, verify_proper, verify_total};
use chordless::{ColoringError, DecompositionError, Edge, Graph, VerifyError, VertexSet};

use crate::exit;
use crate::{Cli, Command};

/// A command that could not produce its normal output.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Failure {
        fail(exit::SOFTWARE, format!("writing output: {err}"))
    }
}

impl From<ColoringError> for Failure {
    fn from(err: ColoringError) -> Failure {
        let code = match err {
            ColoringError::NotChordless { .. } => exit::NOT_CHORDLESS,
            ColoringError::Internal(_) | ColoringError::Decomposition(_) => exit::SOFTWARE,
            _ => exit::DATA,
        };
        fail(code, err.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(err: VerifyError) -> Failure {
        fail(exit::DATA, err.to_string())
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|err| fail(exit::NO_INPUT, format!("{path}: {err}")))?;
    Ok(text)
}

fn load_graph(path: &str) -> Result<Graph, Failure> {
    parse_graph(&read_input(path)?).map_err(|err| fail(exit::USAGE, format!("{path}: {err}")))
}

fn load_coloring(path: &str) -> Result<PartialEdgeColoring, Failure> {
    parse_coloring(&read_input(path)?).map_err(|err| fail(exit::USAGE, format!("{path}: {err}")))
}

fn pair(e: Edge) -> String {
    format!("{},{}", e.u(), e.v())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(vs: impl IntoIterator<Item = usize>, sep: &str) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Runs one subcommand, writing its report to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let machine = cli.machine;
    match &cli.command {
        Command::Check { graph } => check(&load_graph(graph)?, machine, out),
        Command::Color { graph } => {
            let c = color_graph(&load_graph(graph)?)?;
            out.write_all(write_coloring(&c).as_bytes())?;
            Ok(exit::OK)
        }
        Command::Verify { graph, coloring } => {
            verify(&load_graph(graph)?, &load_coloring(coloring)?, machine, out)
        }
        Command::Arboricity { graph } => arboricity(&load_graph(graph)?, machine, out),
        Command::Oracle {
            graph,
            max_k,
            max_edges,
        } => {
            let report = brute_force_aci_with_limit(&load_graph(graph)?, *max_k, *max_edges)?;
            if machine {
                writeln!(out, "aci={} nodes={}", report.aci, report.nodes_explored)?;
            } else {
                writeln!(out, "aci={}", report.aci)?;
            }
            out.write_all(write_coloring(&report.witness).as_bytes())?;
            Ok(exit::OK)
        }
        Command::Split { graph, slow_checks } => {
            split(&load_graph(graph)?, *slow_checks, machine, out)
        }
        Command::Gen { n, seed } => {
            if *n < 3 {
                return Err(fail(exit::USAGE, "gen needs at least 3 vertices"));
            }
            out.write_all(write_graph(&generate_chordless(*n, *seed)).as_bytes())?;
            Ok(exit::OK)
        }
        Command::Bench { sizes, seed } => bench(sizes, *seed, machine, out),
    }
}

fn check(g: &Graph, machine: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let chord = find_chord(g);
    let dense = find_dense_edge(g);
    if machine {
        write!(out, "chordless={}", yes_no(chord.is_none()))?;
        if let Some(e) = chord {
            write!(out, " chord={}", pair(e))?;
        }
        write!(out, " two_sparse={}", yes_no(dense.is_none()))?;
        if let Some(e) = dense {
            write!(out, " dense_edge={}", pair(e))?;
        }
        writeln!(out)?;
    } else {
        match chord {
            None => writeln!(out, "chordless: yes")?,
            Some(e) => writeln!(out, "chordless: no ({})", pair(e))?,
        }
        match dense {
            None => writeln!(out, "2-sparse: yes")?,
            Some(e) => writeln!(out, "2-sparse: no ({})", pair(e))?,
        }
    }
    Ok(if chord.is_none() {
        exit::OK
    } else {
        exit::NEGATIVE
    })
}

fn verify(
    g: &Graph,
    c: &PartialEdgeColoring,
    machine: bool,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    verify_total(g, c)?;
    let proper = verify_proper(g, c);
    let acyclic = match proper {
        Ok(()) => Some(verify_acyclic(g, c)),
        Err(_) => None,
    };
    if machine {
        write!(out, "proper={}", yes_no(proper.is_ok()))?;
        if let Err(VerifyError::NotProper(e, f)) = &proper {
            write!(out, " clash={}/{}", pair(*e), pair(*f))?;
        }
        match &acyclic {
            None => write!(out, " acyclic=unchecked")?,
            Some(Ok(())) => write!(out, " acyclic=yes")?,
            Some(Err(VerifyError::BichromaticCycle {
                first,
                second,
                cycle,
            })) => write!(
                out,
                " acyclic=no colors={first},{second} cycle={}",
                list(cycle.iter().copied(), "-")
            )?,
            Some(Err(err)) => return Err(err.clone().into()),
        }
        writeln!(out)?;
    } else {
        match &proper {
            Ok(()) => writeln!(out, "proper: yes")?,
            Err(VerifyError::NotProper(e, f)) => writeln!(
                out,
                "proper: no ({} and {} share a color)",
                pair(*e),
                pair(*f)
            )?,
            Err(err) => return Err(err.clone().into()),
        }
        match &acyclic {
            None => writeln!(out, "acyclic: not checked")?,
            Some(Ok(())) => writeln!(out, "acyclic: yes")?,
            Some(Err(VerifyError::BichromaticCycle {
                first,
                second,
                cycle,
            })) => writeln!(
                out,
                "acyclic: no (colors {first} and {second} on cycle {})",
                list(cycle.iter().copied(), "-")
            )?,
            Some(Err(err)) => return Err(err.clone().into()),
        }
    }
    let ok = proper.is_ok() && matches!(acyclic, Some(Ok(())));
    Ok(if ok { exit::OK } else { exit::NEGATIVE })
}

fn arboricity(g: &Graph, machine: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let c = color_graph(g)?;
    let forests =
        extract_linear_forests(g, &c).map_err(|err| fail(exit::SOFTWARE, err.to_string()))?;
    for (i, class) in forests.classes.iter().enumerate() {
        if machine {
            let edges: Vec<String> = class
                .iter()
                .map(|e| format!("{}-{}", e.u(), e.v()))
                .collect();
            writeln!(out, "forest={} edges={}", i + 1, edges.join(","))?;
        } else {
            let edges: Vec<String> = class
                .iter()
                .map(|e| format!("{} {}", e.u(), e.v()))
                .collect();
            writeln!(out, "forest {}: {}", i + 1, edges.join(", "))?;
        }
    }
    Ok(exit::OK)
}

fn split(g: &Graph, slow_checks: bool, machine: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let s = find_special_split(g).map_err(|err| match err {
        DecompositionError::NoSplitFound => fail(exit::SOFTWARE, err.to_string()),
        _ => fail(exit::DATA, err.to_string()),
    })?;
    let set = |x: &VertexSet| list(x.iter(), ",");
    if machine {
        write!(out, "a={} b={} x={} y={}", s.a, s.b, set(&s.x), set(&s.y))?;
    } else {
        writeln!(out, "{s}")?;
    }
    if slow_checks {
        let audit = smaller_splits(g, &s);
        let first: Option<&Split> = audit.as_ref().and_then(|found| found.first());
        match (machine, &audit, first) {
            (true, None, _) => write!(out, " minimal=skipped")?,
            (true, Some(_), None) => write!(out, " minimal=yes")?,
            (true, Some(_), Some(t)) => write!(out, " minimal=no smaller_x={}", set(&t.x))?,
            (false, None, _) => writeln!(out, "minimal: skipped (too many components)")?,
            (false, Some(_), None) => writeln!(out, "minimal: yes")?,
            (false, Some(_), Some(t)) => {
                writeln!(out, "minimal: no (X = {})", list(t.x.iter(), " "))?
            }
        }
    }
    if machine {
        writeln!(out)?;
    }
    Ok(exit::OK)
}

/// Least-squares slope of `ln t` against `ln n`.
fn fitted_exponent(rows: &[(usize, f64)]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|&(n, t)| ((n as f64).ln(), t.max(1e-9).ln()))
        .collect();
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / sxx)
}

fn bench(sizes: &[usize], seed: u64, machine: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(fail(exit::USAGE, "bench sizes must be ascending"));
    }
    if let Some(n) = sizes.iter().find(|&&n| n < 3) {
        return Err(fail(exit::USAGE, format!("bench size {n} is below 3")));
    }
    if !machine && !sizes.is_empty() {
        writeln!(
            out,
            "{:>8} {:>8} {:>12} {:>9}",
            "n", "m", "seconds", "verified"
        )?;
    }
    let mut rows = Vec::new();
    let mut all_ok = true;
    for &n in sizes {
        let g = generate_chordless(n, seed);
        let start = Instant::now();
        let c = color_graph(&g);
        let seconds = start.elapsed().as_secs_f64();
        let ok = c.is_ok_and(|c| verify_total(&g, &c).is_ok() && verify_acyclic(&g, &c).is_ok());
        all_ok &= ok;
        if machine {
            writeln!(
                out,
                "n={} m={} seconds={seconds:.6} verified={}",
                g.n(),
                g.m(),
                yes_no(ok)
            )?;
        } else {
            writeln!(
                out,
                "{:>8} {:>8} {seconds:>12.6} {:>9}",
                g.n(),
                g.m(),
                yes_no(ok)
            )?;
        }
        rows.push((g.n(), seconds));
    }
    if let Some(slope) = fitted_exponent(&rows) {
        if machine {
            writeln!(out, "exponent={slope:.3}")?;
        } else {
            writeln!(out, "fitted exponent: {slope:.3}")?;
        }
    }
    Ok(if all_ok { exit::OK } else { exit::NEGATIVE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_of_a_cubic() {
        let rows: Vec<(usize, f64)> = [100usize, 200, 400]
            .iter()
            .map(|&n| (n, (n as f64).powi(3)))
            .collect();
        assert!((fitted_exponent(&rows).unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(fitted_exponent(&[(5, 1.0)]), None);
        assert_eq!(fitted_exponent(&[]), None);
    }

    #[test]
    fn bench_rejects_unsorted_sizes() {
        let mut sink = Vec::new();
        let err = bench(&[200, 100], 0, false, &mut sink).unwrap_err();
        assert_eq!(err.code, exit::USAGE);
    }

    #[test]
    fn empty_bench_prints_nothing() {
        let mut sink = Vec::new();
        assert_eq!(bench(&[], 0, true, &mut sink).unwrap(), exit::OK);
        assert!(sink.is_empty());
    }

    #[test]
    fn coloring_errors_map_to_exit_codes() {
        let chord = ColoringError::NotChordless {
            witness: Edge::new(0, 1),
        };
        assert_eq!(Failure::from(chord).code, exit::NOT_CHORDLESS);
        assert_eq!(
            Failure::from(ColoringError::Internal("x".into())).code,
            exit::SOFTWARE
        );
    }
}
