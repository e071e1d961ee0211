//! `reproduce`: re-derives the bundled results from scratch and prints the
//! summary table of codes in Hamming graphs.

use std::time::Instant;

use crcodes::constructions::RulePartition;
use crcodes::cr::verify_cr;
use crcodes::feasibility::tau;
use crcodes::fixtures;
use crcodes::search::{search_exact, search_heuristic, HeuristicOptions, SearchTarget};
use crcodes::{CheckMatrix, Code, Graph, IntersectionArray, DEFAULT_BUDGET};

use crate::{Failure, Outcome};

/// Exact search is tried first with this many nodes.
const EXACT_NODES: u64 = 100_000;

#[derive(Clone, Copy)]
enum Source {
    Fixture(&'static str),
    /// The complement of a fixture's graph.
    Complement(&'static str),
}

struct Row {
    array: &'static str,
    source: Source,
    /// Array searched for in the Cayley graph; the row array is `s` times it.
    base: &'static str,
    s: usize,
}

const fn row(array: &'static str, source: Source) -> Row {
    Row { array, source, base: array, s: 1 }
}

const ROWS: &[Row] = &[
    row("{10;8}", Source::Fixture("cr10_8.H")),
    row("{23;4}", Source::Fixture("srg81_24_a.H")),
    row("{22;5}", Source::Fixture("golay11.H")),
    row("{21;6}", Source::Fixture("golay11.H")),
    row("{20;7}", Source::Fixture("golay11.H")),
    row("{19;8}", Source::Fixture("golay11.H")),
    row("{17;10}", Source::Fixture("golay11.H")),
    row("{16;11}", Source::Fixture("golay11.H")),
    row("{15;12}", Source::Fixture("srg81_20.H")),
    row("{14;13}", Source::Fixture("golay11.H")),
    row("{20;16}", Source::Fixture("srg81_30_b.H")),
    Row { array: "{20;16}", source: Source::Fixture("cr10_8.H"), base: "{10;8}", s: 2 },
    row("{28;8}", Source::Fixture("cr28_8_a.H")),
    row("{35;10}", Source::Fixture("cr35_10.H")),
    row("{25;20}", Source::Fixture("cr35_10.H")),
    row("{46;8}", Source::Complement("srg81_30_a.H")),
    Row { array: "{46;8}", source: Source::Fixture("srg81_24_a.H"), base: "{23;4}", s: 2 },
    row("{50;4}", Source::Complement("srg81_30_a.H")),
    row("{21,4;2,21}", Source::Fixture("cr21_4.H")),
];

fn source_matrix(s: Source) -> crcodes::Result<(CheckMatrix, String)> {
    Ok(match s {
        Source::Fixture(name) => (fixtures::matrix(name)?, name.to_string()),
        Source::Complement(name) => {
            let g = Graph::syndrome(&fixtures::matrix(name)?);
            (g.connecting_set().complement().check_matrix()?, format!("complement of {name}"))
        }
    })
}

fn find(g: &Graph, a: &IntersectionArray, seed: u64, budget: u64) -> crcodes::Result<Option<(Code, &'static str)>> {
    let t = SearchTarget::from_array(a, g)?;
    if let Some(f) = search_exact(g, &t, EXACT_NODES)?.found() {
        return Ok(Some((f.code.clone(), "exact")));
    }
    let opts = HeuristicOptions { budget, ..HeuristicOptions::default() };
    Ok(search_heuristic(g, &t, seed, &opts)?.found().map(|f| (f.code.clone(), "tabu")))
}

fn tau_text(a: &IntersectionArray, n: usize) -> String {
    match tau(a, 3, n) {
        Some(t) => format!("{t} ~ {:.3}", *t.numer() as f64 / *t.denom() as f64),
        None => "---".into(),
    }
}

/// Checks with a fixed expected answer, printed before the table.
fn checks() -> crcodes::Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let h = fixtures::matrix("cr21_4.H")?;
    let g = Graph::syndrome(&h);
    let spectrum = g.spectrum().to_string();
    out.push((format!("spectrum of cr21_4.H = {spectrum}"), spectrum == "{22^1,10^2,4^12,1^44,-5^14,-8^8}"));
    let code = fixtures::code("cr21_4.C")?;
    let ok = verify_cr(&g, &code)?.is_some_and(|r| {
        r.array.to_string() == "{21,4;2,21}" && r.quotient.to_string() == "((1,21,0),(2,16,4),(0,21,1))"
    });
    out.push(("cr21_4.C is a {21,4;2,21} code with quotient ((1,21,0),(2,16,4),(0,21,1))".into(), ok));
    for name in fixtures::names().filter(|n| n.starts_with("srg")) {
        let desc = fixtures::description(name)?;
        let expected = desc.find("SRG(").and_then(|i| desc[i..].find(')').map(|j| &desc[i..=i + j]));
        let found = Graph::syndrome(&fixtures::matrix(name)?).srg_parameters().map(|p| p.to_string());
        let shown = found.clone().unwrap_or_else(|| "not strongly regular".into());
        out.push((format!("{name}: {shown}"), expected.is_some() && found.as_deref() == expected));
    }
    Ok(out)
}

pub fn run(samples: u64, seed: u64, budget: u64) -> Outcome {
    let mut failures = 0;
    for (what, ok) in checks()? {
        println!("{} {what}", if ok { "PASS" } else { "FAIL" });
        failures += usize::from(!ok);
    }
    println!();
    println!("{:<14} {:>2} {:>3}  {:<14} {:<28} {:<7} check in H(n,q)", "I.A.", "q", "n", "tau", "graph", "search");
    for r in ROWS {
        let start = Instant::now();
        let array: IntersectionArray = r.array.parse()?;
        let base: IntersectionArray = r.base.parse()?;
        let (h, label) = source_matrix(r.source)?;
        let label = if r.s > 1 { format!("{}x{} in {label}", r.s, r.base) } else { label };
        let g = Graph::syndrome(&h);
        let found = find(&g, &base, seed, budget)?;
        let n = h.n() * r.s;
        let (how, check) = match found {
            None => ("-", "not found within budget".to_string()),
            Some((code, how)) => {
                let confirmed = verify_cr(&g, &code)?.is_some_and(|rep| rep.array == base);
                let mut p = RulePartition::lift(&h, &code)?;
                if r.s > 1 {
                    p = p.inflate(r.s)?;
                }
                let predicted = p.array().as_ref() == Some(&array);
                let v = p.verify(DEFAULT_BUDGET, samples, seed)?;
                let kind = if v.exhaustive { "exhaustive" } else { "sampled" };
                let status = match (confirmed && predicted, &v.failure) {
                    (true, None) => format!("{kind}, {} vertices", v.vertices_checked),
                    (false, _) => "array mismatch".into(),
                    (true, Some(f)) => format!("FAILED: {f}"),
                };
                (how, status)
            }
        };
        let ok = !check.starts_with("FAILED") && check != "array mismatch" && how != "-";
        failures += usize::from(!ok);
        println!("{:<14} {:>2} {:>3}  {:<14} {:<28} {:<7} {check}", r.array, 3, n, tau_text(&array, n), label, how);
        eprintln!("{} in {label}: {:.1}s", r.array, start.elapsed().as_secs_f64());
    }
    if failures > 0 {
        return Err(Failure::Verification(format!("{failures} checks failed")));
    }
    Ok(())
}
