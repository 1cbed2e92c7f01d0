//! Command-line front end. Every subcommand reads its inputs from files,
//! runs one library operation, and renders the report as JSON (default),
//! text, or CSV. Exit 0 on success, 1 when a checked property is falsified,
//! 2 on input errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::is_lattice;
use crate::construct::{
    boolean, chain, direct_product, gamma, horizontal_sum, mo, random_algebra, standard_corpus,
    strict_square, Cone, GroupIntervalSpec,
};
use crate::error::{Error, Result};
use crate::io::{read_algebra, read_measure, read_table, write_algebra, AlgebraFile};
use crate::measure::{
    glb_oracle, join, jordan_decompose, lub_oracle, meet, total_variation, SignedMeasure,
};
use crate::mv::mv_interval;
use crate::orthogonality::{default_schedule, orthogonality_report};
use crate::rat::{parse_rat, rat_string, Rat};
use crate::riesz::check_hierarchy;
use crate::sampling::sample_interval_pairs;
use crate::state::{
    barycentric_represent, compute_state_space, rdp_implies_simplex_suite, represent_jordan,
    simplex_report, DiscreteMeasure,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "pea", about = "pseudo effect algebras: orders, measures, states")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Epsilon schedule as comma-separated rationals, e.g. 1/2,1/4,1/8
    #[arg(long, global = true, value_delimiter = ',')]
    pub epsilon: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of an addition table
    Validate { table: PathBuf },
    /// Induced order, complements, and lattice structure
    Order { table: PathBuf },
    /// Riesz decomposition hierarchy
    Rdp { table: PathBuf },
    /// State polytope: constraints and extreme states
    States { table: PathBuf },
    /// Choquet and Bauer simplex verdict for the state polytope
    Simplex { table: PathBuf },
    /// Jordan decomposition of a signed measure
    Jordan { table: PathBuf, measure: PathBuf },
    /// Lattice join of two measures, cross-checked against the LP oracle
    Join {
        table: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Lattice meet of two measures, cross-checked against the LP oracle
    Meet {
        table: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Total variation measure
    Variation { table: PathBuf, measure: PathBuf },
    /// Orthogonality report for two states
    Orthogonal {
        table: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Representation over the extreme states: barycentric for states,
    /// signed for other measures
    Represent { table: PathBuf, measure: PathBuf },
    /// MV structure of the interval below a positive unit measure,
    /// verified on sampled pairs
    MvInterval {
        table: PathBuf,
        unit: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Emit a built-in family member as an algebra file
    Generate {
        /// chain | boolean | mo | strict-square | product | hsum | gamma | random
        family: String,
        #[arg(long)]
        n: Option<u32>,
        /// Second operand size for product and hsum
        #[arg(long)]
        m: Option<u32>,
        /// Cone for gamma: product | lex | strict
        #[arg(long)]
        cone: Option<String>,
        /// Unit vector for gamma, comma-separated integers
        #[arg(long, value_delimiter = ',')]
        unit: Vec<i64>,
        #[arg(long, default_value_t = 8)]
        size_bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Batch property suite over the standard corpus
    Suite { name: String },
}

struct Output {
    json: Value,
    text: String,
    csv: Option<String>,
    falsified: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            csv: None,
            falsified: false,
        }
    }

    fn csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    fn falsified(mut self, f: bool) -> Self {
        self.falsified = f;
        self
    }
}

pub fn run(config: RunConfig) -> i32 {
    init_threads();
    match execute(&config) {
        Ok(out) => {
            match config.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Text => println!("{}", out.text),
                Format::Csv => println!("{}", out.csv.unwrap_or(out.text)),
            }
            i32::from(out.falsified)
        }
        Err(err) => {
            match config.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "error": err.to_string() })).unwrap()
                ),
                _ => println!("error: {err}"),
            }
            exit_code(&err)
        }
    }
}

fn init_threads() {
    if let Ok(raw) = std::env::var("PEA_THREADS") {
        if let Ok(n) = raw.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

/// 1 for falsified theorems and internal consistency breaches, 2 for
/// anything wrong with the inputs.
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InconsistentHierarchy(_)
        | Error::VariationMismatch { .. }
        | Error::EquivalenceViolation(_)
        | Error::CancellativityViolation { .. }
        | Error::AntisymmetryViolation { .. }
        | Error::Infeasible
        | Error::Unbounded => 1,
        _ => 2,
    }
}

fn execute(config: &RunConfig) -> Result<Output> {
    match &config.command {
        Command::Validate { table } => cmd_validate(table),
        Command::Order { table } => cmd_order(table),
        Command::Rdp { table } => cmd_rdp(table),
        Command::States { table } => cmd_states(table),
        Command::Simplex { table } => cmd_simplex(table),
        Command::Jordan { table, measure } => cmd_jordan(table, measure),
        Command::Join {
            table,
            first,
            second,
        } => cmd_lattice(table, first, second, true),
        Command::Meet {
            table,
            first,
            second,
        } => cmd_lattice(table, first, second, false),
        Command::Variation { table, measure } => cmd_variation(table, measure),
        Command::Orthogonal {
            table,
            first,
            second,
        } => cmd_orthogonal(table, first, second, &config.epsilon),
        Command::Represent { table, measure } => cmd_represent(table, measure),
        Command::MvInterval {
            table,
            unit,
            samples,
        } => cmd_mv(table, unit, *samples, config.seed),
        Command::Generate {
            family,
            n,
            m,
            cone,
            unit,
            size_bound,
            out,
        } => cmd_generate(family, *n, *m, cone.as_deref(), unit, *size_bound, config.seed, out.as_deref()),
        Command::Suite { name } => cmd_suite(name, config.seed),
    }
}

fn rats(values: &[Rat]) -> Vec<String> {
    values.iter().map(rat_string).collect()
}

fn measure_json(m: &SignedMeasure) -> Value {
    json!(rats(m.values()))
}

fn measure_text(m: &SignedMeasure) -> String {
    rats(m.values()).join(" ")
}

fn discrete_json(d: &DiscreteMeasure) -> Value {
    json!({
        "weights": rats(&d.weights),
        "support": d.support.iter().map(measure_json).collect::<Vec<_>>(),
    })
}

fn cmd_validate(table: &Path) -> Result<Output> {
    let table = read_table(table)?;
    let report = table.validate_axioms();
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "axiom": c.axiom.to_string(),
                "passed": c.passed,
                "witness": c.witness,
            })
        })
        .collect();
    let mut text = String::new();
    for c in &report.checks {
        text.push_str(&match &c.witness {
            Some(w) => format!("{}: fail at {w:?}\n", c.axiom),
            None => format!("{}: pass\n", c.axiom),
        });
    }
    text.push_str(&format!(
        "certified: {}",
        if report.certified() { "yes" } else { "no" }
    ));
    let csv = std::iter::once("axiom,passed".to_string())
        .chain(
            report
                .checks
                .iter()
                .map(|c| format!("{},{}", c.axiom, c.passed)),
        )
        .collect::<Vec<_>>()
        .join("\n");
    Ok(
        Output::new(
            json!({ "certified": report.certified(), "checks": checks }),
            text,
        )
        .csv(csv),
    )
}

fn cmd_order(table: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let n = alg.size();
    let leq: Vec<Vec<u8>> = (0..n)
        .map(|a| (0..n).map(|b| u8::from(alg.leq(a, b))).collect())
        .collect();
    let lneg: Vec<usize> = (0..n).map(|a| alg.lneg(a)).collect();
    let rneg: Vec<usize> = (0..n).map(|a| alg.rneg(a)).collect();
    let lattice = is_lattice(&alg);
    let mut text = String::from("order, 1 marks row <= column:\n");
    for row in &leq {
        let line: Vec<String> = row.iter().map(|b| b.to_string()).collect();
        text.push_str(&line.join(" "));
        text.push('\n');
    }
    text.push_str(&format!(
        "lneg: {lneg:?}\nrneg: {rneg:?}\nlattice: {}",
        if lattice.is_lattice { "yes" } else { "no" }
    ));
    let csv = leq
        .iter()
        .map(|row| {
            row.iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(
        json!({
            "size": n,
            "leq": leq,
            "lneg": lneg,
            "rneg": rneg,
            "is_lattice": lattice.is_lattice,
            "missing_bound": lattice.missing.map(|(a, b, kind)| json!({
                "pair": [a, b],
                "kind": format!("{kind:?}").to_lowercase(),
            })),
        }),
        text,
    )
    .csv(csv))
}

fn cmd_rdp(table: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let reports = check_hierarchy(&alg)?;
    let entries: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "property": r.property.to_string(),
                "holds": r.holds,
                "counterexample": r.counterexample,
                "witnesses": r.witness_table.as_ref().map(|t| t.len()),
            })
        })
        .collect();
    let text = reports
        .iter()
        .map(|r| match &r.counterexample {
            Some(cx) => format!("{}: fails at {cx:?}", r.property),
            None => format!("{}: holds", r.property),
        })
        .collect::<Vec<_>>()
        .join("\n");
    let csv = std::iter::once("property,holds".to_string())
        .chain(reports.iter().map(|r| format!("{},{}", r.property, r.holds)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(json!({ "properties": entries }), text).csv(csv))
}

fn constraints_json(cs: &[crate::state::LinearConstraint]) -> Value {
    json!(cs
        .iter()
        .map(|c| json!({ "coeffs": rats(&c.coeffs), "rhs": rat_string(&c.rhs) }))
        .collect::<Vec<_>>())
}

fn cmd_states(table: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let p = compute_state_space(&alg);
    let text = format!(
        "dim {}, {} extreme states, affinely independent: {}\n{}",
        p.dim(),
        p.vertices.len(),
        if p.affinely_independent { "yes" } else { "no" },
        p.vertices
            .iter()
            .map(|v| format!("vertex: {}", measure_text(v)))
            .collect::<Vec<_>>()
            .join("\n")
    );
    let csv = p
        .vertices
        .iter()
        .map(|v| rats(v.values()).join(","))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(
        json!({
            "ambient_dim": p.ambient_dim,
            "dim": p.dim(),
            "equalities": constraints_json(&p.equalities),
            "inequalities": constraints_json(&p.inequalities),
            "vertices": p.vertices.iter().map(measure_json).collect::<Vec<_>>(),
            "affinely_independent": p.affinely_independent,
        }),
        text,
    )
    .csv(csv))
}

fn cmd_simplex(table: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let p = compute_state_space(&alg);
    let report = simplex_report(&p)?;
    let text = match &report.dependency_witness {
        Some(w) => format!(
            "choquet simplex: no\nbauer: no\ndependency: {}",
            rats(w).join(" ")
        ),
        None => "choquet simplex: yes\nbauer: yes".to_string(),
    };
    Ok(Output::new(
        json!({
            "is_choquet_simplex": report.is_choquet_simplex,
            "is_bauer": report.is_bauer,
            "dependency_witness": report.dependency_witness.as_deref().map(rats),
        }),
        text,
    ))
}

fn cmd_jordan(table: &Path, measure: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let m = read_measure(measure, &alg)?;
    let pair = jordan_decompose(&alg, &m)?;
    let text = format!(
        "positive part: {}\nnegative part: {}\nalpha1: {}\nalpha2: {}",
        measure_text(&pair.positive_part),
        measure_text(&pair.negative_part),
        rat_string(&pair.alpha1),
        rat_string(&pair.alpha2),
    );
    Ok(Output::new(
        json!({
            "positive_part": measure_json(&pair.positive_part),
            "negative_part": measure_json(&pair.negative_part),
            "alpha1": rat_string(&pair.alpha1),
            "alpha2": rat_string(&pair.alpha2),
            "s1": pair.s1.as_ref().map(measure_json),
            "s2": pair.s2.as_ref().map(measure_json),
        }),
        text,
    ))
}

fn cmd_lattice(table: &Path, first: &Path, second: &Path, joining: bool) -> Result<Output> {
    let alg = read_algebra(table)?;
    let m1 = read_measure(first, &alg)?;
    let m2 = read_measure(second, &alg)?;
    let (result, oracle) = if joining {
        (join(&alg, &m1, &m2)?, lub_oracle(&alg, &m1, &m2)?)
    } else {
        (meet(&alg, &m1, &m2)?, glb_oracle(&alg, &m1, &m2)?)
    };
    let agree = result == oracle;
    let name = if joining { "join" } else { "meet" };
    let text = format!(
        "{name}: {}\noracle: {}\nagree: {}",
        measure_text(&result),
        measure_text(&oracle),
        if agree { "yes" } else { "no" }
    );
    Ok(Output::new(
        json!({
            "operation": name,
            "result": measure_json(&result),
            "oracle": measure_json(&oracle),
            "agree": agree,
        }),
        text,
    )
    .falsified(!agree))
}

fn cmd_variation(table: &Path, measure: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let m = read_measure(measure, &alg)?;
    let v = total_variation(&alg, &m)?;
    let text = format!(
        "variation: {}\ntotal: {}",
        measure_text(&v),
        rat_string(v.total(&alg))
    );
    Ok(Output::new(
        json!({
            "variation": measure_json(&v),
            "total": rat_string(v.total(&alg)),
        }),
        text,
    ))
}

fn cmd_orthogonal(table: &Path, first: &Path, second: &Path, epsilon: &[String]) -> Result<Output> {
    let alg = read_algebra(table)?;
    let s1 = read_measure(first, &alg)?;
    let s2 = read_measure(second, &alg)?;
    let schedule = if epsilon.is_empty() {
        default_schedule()
    } else {
        epsilon
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?
    };
    let rep = orthogonality_report(&alg, &s1, &s2, &schedule)?;
    let text = format!(
        "faces disjoint: {}\nmeet zero: {}\njoin is sum: {}\nsplitting: {}\northogonal: {}",
        rep.faces_disjoint,
        rep.meet_is_zero,
        rep.join_is_sum,
        rep.epsilon_schedule
            .iter()
            .zip(&rep.epsilon_outcomes)
            .map(|(e, ok)| format!("{}:{}", rat_string(e), if *ok { "ok" } else { "fail" }))
            .collect::<Vec<_>>()
            .join(" "),
        rep.orthogonal
    );
    Ok(Output::new(
        json!({
            "faces_disjoint": rep.faces_disjoint,
            "meet_is_zero": rep.meet_is_zero,
            "join_is_sum": rep.join_is_sum,
            "epsilon_schedule": rats(&rep.epsilon_schedule),
            "epsilon_outcomes": rep.epsilon_outcomes,
            "failing_epsilon": rep.failing_epsilon.as_ref().map(rat_string),
            "orthogonal": rep.orthogonal,
        }),
        text,
    ))
}

fn cmd_represent(table: &Path, measure: &Path) -> Result<Output> {
    let alg = read_algebra(table)?;
    let m = read_measure(measure, &alg)?;
    let p = compute_state_space(&alg);
    if m.is_state(&alg) {
        let b = barycentric_represent(&p, &m)?;
        let text = format!(
            "barycentric weights: {}\nunique: {}",
            rats(&b.representation.weights).join(" "),
            if b.unique { "yes" } else { "no" }
        );
        Ok(Output::new(
            json!({
                "kind": "barycentric",
                "representation": discrete_json(&b.representation),
                "unique": b.unique,
                "alternative": b.alternative.as_ref().map(discrete_json),
            }),
            text,
        ))
    } else {
        let d = represent_jordan(&alg, &p, &m)?;
        let text = format!("signed weights: {}", rats(&d.weights).join(" "));
        Ok(Output::new(
            json!({ "kind": "signed", "representation": discrete_json(&d) }),
            text,
        ))
    }
}

fn cmd_mv(table: &Path, unit: &Path, samples: usize, seed: u64) -> Result<Output> {
    let alg = read_algebra(table)?;
    let m = read_measure(unit, &alg)?;
    let iv = mv_interval(&alg, &m)?;
    let p = compute_state_space(&alg);
    let pairs = sample_interval_pairs(&alg, &p, &m, samples, seed)?;
    let report = iv.verify_axioms(&pairs)?;
    let text = format!(
        "pairs: {}\ncommutative: {}\nassociative: {}\nzero neutral: {}\ninvolution: {}\nunit absorbing: {}\nexchange: {}\nproduct dual: {}\nholds: {}",
        report.pairs_checked,
        report.commutative,
        report.associative,
        report.zero_neutral,
        report.involution,
        report.unit_absorbing,
        report.lukasiewicz,
        report.product_dual,
        report.holds
    );
    let holds = report.holds;
    Ok(Output::new(serde_json::to_value(&report)?, text).falsified(!holds))
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    family: &str,
    n: Option<u32>,
    m: Option<u32>,
    cone: Option<&str>,
    unit: &[i64],
    size_bound: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<Output> {
    let need_n = || n.ok_or_else(|| Error::InvalidSpec(format!("family {family} needs --n")));
    let alg = match family {
        "chain" => chain(need_n()?)?,
        "boolean" => boolean(need_n()?)?,
        "mo" => mo(need_n()?)?,
        "strict-square" => strict_square(need_n()?)?,
        "product" => {
            let second = m.ok_or_else(|| Error::InvalidSpec("product needs --m".into()))?;
            direct_product(&chain(need_n()?)?, &chain(second)?)?
        }
        "hsum" => {
            let second = m.ok_or_else(|| Error::InvalidSpec("hsum needs --m".into()))?;
            horizontal_sum(&chain(need_n()?)?, &chain(second)?)?
        }
        "gamma" => {
            if unit.is_empty() {
                return Err(Error::InvalidSpec("gamma needs --unit".into()));
            }
            let cone: Cone = cone
                .ok_or_else(|| Error::InvalidSpec("gamma needs --cone".into()))?
                .parse()?;
            gamma(&GroupIntervalSpec::new(cone, unit.to_vec()))?
        }
        "random" => random_algebra(seed, size_bound).ok_or_else(|| {
            Error::InvalidSpec(format!("seed {seed} yields no algebra within {size_bound}"))
        })?,
        other => {
            return Err(Error::InvalidSpec(format!("unknown family {other:?}")));
        }
    };
    let file = AlgebraFile::from_table(alg.table());
    let rendered = serde_json::to_string_pretty(&file)?;
    if let Some(path) = out {
        write_algebra(&alg, path)?;
        let text = format!("wrote {} elements to {}", alg.size(), path.display());
        Ok(Output::new(
            json!({ "written": path.display().to_string(), "size": alg.size() }),
            text,
        ))
    } else {
        Ok(Output::new(serde_json::to_value(&file)?, rendered))
    }
}

fn cmd_suite(name: &str, seed: u64) -> Result<Output> {
    if name != "rdp-simplex" {
        return Err(Error::InvalidSpec(format!("unknown suite {name:?}")));
    }
    let mut corpus = standard_corpus();
    let mut found = 0;
    for offset in 0..40 {
        if found == 3 {
            break;
        }
        if let Some(alg) = random_algebra(seed + offset, 6) {
            corpus.push((format!("random-{}", seed + offset), alg));
            found += 1;
        }
    }
    let report = rdp_implies_simplex_suite(&corpus);
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "rdp": e.rdp,
                "vertex_count": e.vertex_count,
                "applicable": e.applicable,
                "is_simplex": e.is_simplex,
                "passed": e.passed,
            })
        })
        .collect();
    let text = report
        .entries
        .iter()
        .map(|e| {
            format!(
                "{}: rdp={} vertices={} {}",
                e.name,
                e.rdp,
                e.vertex_count,
                if !e.applicable {
                    "skipped"
                } else if e.passed {
                    "pass"
                } else {
                    "FALSIFIED"
                }
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
        + &format!("\nfalsifications: {}", report.falsifications);
    let csv = std::iter::once("name,rdp,vertex_count,applicable,is_simplex,passed".to_string())
        .chain(report.entries.iter().map(|e| {
            format!(
                "{},{},{},{},{},{}",
                e.name, e.rdp, e.vertex_count, e.applicable, e.is_simplex, e.passed
            )
        }))
        .collect::<Vec<_>>()
        .join("\n");
    let falsified = report.falsifications > 0;
    Ok(Output::new(
        json!({
            "suite": name,
            "entries": entries,
            "falsifications": report.falsifications,
        }),
        text,
    )
    .csv(csv)
    .falsified(falsified))
}
