//! Command-line front end: ingest intervals or edge lists, build the
//! resolution, multiply basis elements, apply the contracting homotopy, and
//! run the verification suites.
//!
//! Exit codes: 0 on success or a passing suite, 1 on a verification failure,
//! 2 on input or usage errors.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cointerval::product::{render_degree_pair_table, ProductRow};
use cointerval::*;

#[derive(Parser)]
#[command(
    name = "cointerval",
    version,
    about = "Minimal free resolutions of cointerval edge ideals: differentials, contracting homotopy, products, and exact verification"
)]
struct Cli {
    /// Input file: intervals, one `a b` pair per line (or an edge list with --graph).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Treat the input as a graph file: first line `n`, then one `i j` edge per line.
    #[arg(long, global = true)]
    graph: bool,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis in each degree and every differential.
    Resolve,
    /// Print the Betti table.
    Betti {
        /// Also run the independent subset-complex oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Multiply two basis elements, e.g. --left "[1|4]" --right "[2|3]".
    Multiply {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Apply the contracting homotopy to a vertex, e.g. --element "x1*x4*[2|3]".
    Homotopy {
        #[arg(long)]
        element: String,
    },
    /// Print the multiplication tables for all degree pairs.
    Table {
        /// Largest total degree |e1| + |e2| to include (default: top degree).
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run verification suites on the input graph or an enumerated family.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Degree bound for the product-axiom checks.
        #[arg(long)]
        bound: Option<usize>,
        /// Run over the enumerated family instead: `n,max_endpoint`.
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Dsq,
    Homotopy,
    Exactness,
    Betti,
    Dga,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Resolve => cmd_resolve(cli),
        Command::Betti { oracle } => cmd_betti(cli, *oracle),
        Command::Multiply { left, right } => cmd_multiply(cli, left, right),
        Command::Homotopy { element } => cmd_homotopy(cli, element),
        Command::Table { max_degree } => cmd_table(cli, *max_degree),
        Command::Verify {
            suite,
            bound,
            family,
        } => cmd_verify(cli, *suite, *bound, family.as_deref()),
    }
}

fn load_graph(cli: &Cli) -> Result<CointervalGraph, Error> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Error::BadElement("--input is required for this command".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Error::BadElement(format!("cannot read {}: {e}", path.display())))?;
    if cli.graph {
        let (n, edges) = graph::parse_graph_file(&text)?;
        let g = CointervalGraph::from_edges(n, &edges, RECOGNITION_BOUND)?;
        let input_edges: BTreeSet<(usize, usize)> = edges
            .iter()
            .map(|&(i, j)| (i.min(j), i.max(j)))
            .collect();
        if g.edges() != &input_edges {
            eprintln!("note: vertices were relabeled to the canonical interval order");
        }
        Ok(g)
    } else {
        let rep = IntervalRep::parse(&text)?;
        Ok(CointervalGraph::from_intervals(&rep))
    }
}

fn cmd_resolve(cli: &Cli) -> Result<ExitCode, Error> {
    let g = load_graph(cli)?;
    let export = ResolutionExport::compute(&g);
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&export).expect("export serializes")
        ),
        Format::Text => {
            println!("graph: {}", g.describe());
            println!();
            print!("{}", render_basis_table(&g));
            if !export.differentials.is_empty() {
                println!();
                for (level, chains) in export.differentials.iter().enumerate() {
                    for (e, chain) in export.basis[level + 1].iter().zip(chains) {
                        println!("d{e} = {chain}");
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_betti(cli: &Cli, oracle: bool) -> Result<ExitCode, Error> {
    let g = load_graph(cli)?;
    let table = betti_table(&g);
    let oracle_table = oracle.then(|| taylor_betti_oracle(&g));
    let agrees = oracle_table.as_ref().map(|o| *o == table);
    match cli.format {
        Format::Json => {
            let mut out = json!({ "betti": table.rows() });
            if let Some(o) = &oracle_table {
                out["oracle"] = json!(o.rows());
                out["agrees"] = json!(agrees.unwrap());
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            let totals: Vec<String> = table.totals().iter().map(|t| t.to_string()).collect();
            println!("total: {}", totals.join(", "));
            for row in table.rows() {
                let multidegree = Monomial::from_exponents(row.multidegree.clone());
                println!("beta({}, {}) = {}", row.degree, multidegree, row.rank);
            }
            if let Some(true) = agrees {
                println!("oracle agrees");
            } else if agrees == Some(false) {
                println!("oracle DISAGREES");
            }
        }
    }
    Ok(if agrees == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn parse_basis_element(g: &CointervalGraph, text: &str) -> Result<BasisElement, Error> {
    let e = BasisElement::parse(text)?;
    if !resolution::is_basis_element(g, &e) {
        return Err(Error::BadElement(format!(
            "`{text}` is not a basis element of this graph"
        )));
    }
    Ok(e)
}

fn cmd_multiply(cli: &Cli, left: &str, right: &str) -> Result<ExitCode, Error> {
    let g = load_graph(cli)?;
    let e1 = parse_basis_element(&g, left)?;
    let e2 = parse_basis_element(&g, right)?;
    let product = star(&g, &e1, &e2);
    match cli.format {
        Format::Json => {
            let row = ProductRow {
                left: e1,
                right: e2,
                chain: product.terms().collect(),
            };
            println!("{}", serde_json::to_string_pretty(&row).unwrap());
        }
        Format::Text => println!("{product}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_homotopy(cli: &Cli, element: &str) -> Result<ExitCode, Error> {
    let g = load_graph(cli)?;
    let v = Vertex::parse(element, g.n())?;
    if !resolution::is_basis_element(&g, &v.basis) {
        return Err(Error::BadElement(format!(
            "`{element}` does not name a basis element of this graph"
        )));
    }
    let image = homotopy::homotopy_vertex(&g, &v);
    let sets = match &v.basis {
        BasisElement::Unit => None,
        cell => Some(homotopy_sets(&g, &v.monomial, cell.sigma(), cell.tau())),
    };
    let class = classify_vertex(&g, &v);
    match cli.format {
        Format::Json => {
            let sets_json = sets.as_ref().map(|s| {
                json!({
                    "c1": s.c1, "c2": s.c2, "c3": s.c3,
                    "m1": s.m1, "m2": s.m2, "m3": s.m3,
                })
            });
            let classification = match &class {
                MatchClass::Critical => json!({ "polarity": "critical", "rule": null, "partner": null }),
                MatchClass::Upper { rule, partner } => json!({
                    "polarity": "upper", "rule": rule.to_string(), "partner": partner.to_string(),
                }),
                MatchClass::Lower { rule, partner } => json!({
                    "polarity": "lower", "rule": rule.to_string(), "partner": partner.to_string(),
                }),
            };
            let out = json!({
                "element": v.to_string(),
                "homotopy": image.terms().collect::<Vec<_>>(),
                "sets": sets_json,
                "classification": classification,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!("element: {v}");
            println!("c = {image}");
            if let Some(s) = &sets {
                println!("C1 = {}{}", set_text(&s.c1), extremal_text("m1", s.m1));
                println!("C2 = {}{}", set_text(&s.c2), extremal_text("m2", s.m2));
                println!("C3 = {}{}", set_text(&s.c3), extremal_text("m3", s.m3));
            }
            match &class {
                MatchClass::Critical => println!("class: Critical"),
                MatchClass::Upper { rule, partner } => {
                    println!("class: Upper({rule}), partner {partner}")
                }
                MatchClass::Lower { rule, partner } => {
                    println!("class: Lower({rule}), partner {partner}")
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn set_text(s: &BTreeSet<usize>) -> String {
    let body: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

fn extremal_text(name: &str, value: Option<usize>) -> String {
    match value {
        Some(v) => format!(", {name} = {v}"),
        None => String::new(),
    }
}

fn cmd_table(cli: &Cli, max_degree: Option<usize>) -> Result<ExitCode, Error> {
    let g = load_graph(cli)?;
    let top = all_bases(&g).len() - 1;
    let max_degree = max_degree.unwrap_or(top.max(2));
    match cli.format {
        Format::Json => {
            let table = multiplication_table(&g, max_degree);
            println!("{}", serde_json::to_string_pretty(&table.rows()).unwrap());
        }
        Format::Text => {
            let mut first = true;
            for left in 1..=top {
                for right in left..=top {
                    if left + right > max_degree {
                        continue;
                    }
                    if !first {
                        println!();
                    }
                    first = false;
                    println!("degree {left} x {right}");
                    print!("{}", render_degree_pair_table(&g, left, right));
                }
            }
            if first {
                println!("no products within degree bound {max_degree}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn suite_report(g: &CointervalGraph, suite: Suite, bound: Option<usize>) -> VerificationReport {
    let mut report = VerificationReport::default();
    if matches!(suite, Suite::All | Suite::Dsq) {
        report.extend(verify_d_squared(g));
    }
    if matches!(suite, Suite::All | Suite::Homotopy) {
        report.extend(verify_homotopy(g, bound.unwrap_or(g.n()).min(g.n())));
    }
    if matches!(suite, Suite::All | Suite::Exactness) {
        report.extend(verify_exactness(g));
    }
    if matches!(suite, Suite::All | Suite::Betti) {
        report.extend(verify_betti(g));
    }
    if matches!(suite, Suite::All | Suite::Dga) {
        report.extend(verify_dga(g, bound));
    }
    report
}

fn cmd_verify(
    cli: &Cli,
    suite: Suite,
    bound: Option<usize>,
    family: Option<&str>,
) -> Result<ExitCode, Error> {
    let report = match family {
        Some(arg) => {
            let (n, endpoint) = parse_family(arg)?;
            let graphs = enumerate_test_graphs(n, endpoint);
            eprintln!("family: {} graphs (n <= {n}, endpoints 0..={endpoint})", graphs.len());
            VerificationReport::merge(
                graphs
                    .iter()
                    .map(|g| (g.describe(), suite_report(g, suite, bound)))
                    .collect(),
            )
        }
        None => {
            let g = load_graph(cli)?;
            suite_report(&g, suite, bound)
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Text => print!("{}", report.render_text()),
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_family(arg: &str) -> Result<(usize, i64), Error> {
    let (n, endpoint) = arg
        .split_once(',')
        .ok_or_else(|| Error::BadElement(format!("--family expects `n,max_endpoint`, got `{arg}`")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::BadElement(format!("bad vertex bound `{n}`")))?;
    let endpoint: i64 = endpoint
        .trim()
        .parse()
        .map_err(|_| Error::BadElement(format!("bad endpoint bound `{endpoint}`")))?;
    Ok((n, endpoint))
}
