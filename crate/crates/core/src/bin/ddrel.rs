use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ddrel::exactnum::{int, parse_rational, parse_rational_list, Rational};
use ddrel::hypergeom::{Family, FamilySpec};
use ddrel::json::{mrelation_to_json, relation_to_json, report_to_json, spec_to_json};
use ddrel::lemmas::{qp_coeffs, remainder_pair, verify_lemma1, verify_lemma2};
use ddrel::mixed::{catalog, combine_x_m_to_d, entry, validate_entry, EntryStatus};
use ddrel::theorem::{build_relation, Relation, RelationKind};
use ddrel::verify::fixtures::run_fixtures;
use ddrel::verify::sweep::DEFAULT_SEED;
use ddrel::verify::{check_relation, perturb, CheckConfig, CheckReport};
use ddrel::Error;

#[derive(Parser)]
#[command(
    name = "ddrel",
    version,
    about = "Recurrence operators relating x·F_n and F_n' to shifts of hypergeometric families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the X or D relation of a family member.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        relation: RelationKind,
    },
    /// Check relations against series coefficients.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Both kinds when omitted.
        #[arg(long)]
        relation: Option<RelationKind>,
        #[command(flatten)]
        range: RangeArgs,
        /// Add 1 to one coefficient before checking, as `lhs:J` or `rhs:J`.
        #[arg(long)]
        perturb: Option<String>,
    },
    /// Checks on the product of first-order factors.
    Lemma {
        #[arg(value_enum)]
        which: LemmaKind,
        #[arg(long)]
        a: String,
        /// Also compare the remainder modulo `S - (n+1)/(n+b+1)`.
        #[arg(long)]
        b: Option<String>,
    },
    /// The catalog of mixed relations.
    Mixed {
        #[command(subcommand)]
        action: MixedAction,
    },
    /// Derive a D relation from the X relation and a catalog entry.
    DeriveD {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        entry: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Run the worked examples.
    Fixtures,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaKind {
    Lclm,
    Coeffs,
}

#[derive(Subcommand)]
enum MixedAction {
    List,
    Check {
        #[arg(long)]
        entry: String,
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        allow_corrected: bool,
    },
}

#[derive(Args, Clone)]
struct SpecArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, default_value = "")]
    upper: String,
    #[arg(long, default_value = "")]
    lower: String,
}

#[derive(Args, Clone)]
struct RangeArgs {
    #[arg(long)]
    nmin: Option<i64>,
    #[arg(long)]
    nmax: Option<i64>,
    #[arg(long)]
    order: Option<usize>,
}

impl RangeArgs {
    fn config(&self, nmin: i64, nmax: i64, order: usize) -> Result<CheckConfig, Error> {
        CheckConfig::new(
            self.nmin.unwrap_or(nmin),
            self.nmax.unwrap_or(nmax),
            self.order.unwrap_or(order),
        )
    }
}

impl SpecArgs {
    fn build(&self, default_family: Option<Family>, default_m: u32) -> Result<FamilySpec, Error> {
        let family = self
            .family
            .or(default_family)
            .ok_or_else(|| Error::InvalidSpec("--family is required".into()))?;
        let lambda = self
            .lambda
            .as_deref()
            .ok_or_else(|| Error::InvalidSpec("--lambda is required".into()))?;
        FamilySpec::new(
            family,
            self.m.unwrap_or(default_m),
            parse_rational(lambda)?,
            self.mu.as_deref().map(parse_rational).transpose()?,
            parse_rational_list(&self.upper)?,
            parse_rational_list(&self.lower)?,
        )
    }
}

/// Rendered output and whether every check passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn describe(spec: &FamilySpec) -> String {
    let list = |v: &[Rational]| {
        v.iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut s = format!(
        "family {}, m = {}, lambda = {}",
        spec.family(),
        spec.m(),
        spec.lambda()
    );
    if let Some(mu) = spec.mu() {
        let _ = write!(s, ", mu = {mu}");
    }
    let _ = write!(
        s,
        ", upper = [{}], lower = [{}]",
        list(spec.upper()),
        list(spec.lower())
    );
    s
}

fn render_relation(r: &Relation) -> String {
    let mut s = format!("relation {}\ndegenerate: {}\n", r.kind, r.degenerate);
    let input = match r.kind {
        RelationKind::X => "x*F",
        RelationKind::D => "F'",
    };
    for (name, factors, op, on) in [
        ("lhs", &r.factored_lhs, &r.lhs, input),
        ("rhs", &r.factored_rhs, &r.rhs, "F"),
    ] {
        let _ = writeln!(s, "{name} factors (applied to {on}, leftmost first):");
        for f in factors {
            let _ = writeln!(s, "  {f}");
        }
        let _ = writeln!(s, "{name} = {op}");
    }
    s
}

fn render_report(r: &CheckReport) -> String {
    let mut s = r.summary();
    if let Some(w) = r.first_failure() {
        let _ = write!(
            s,
            "\n  witness n = {}, k = {}: lhs = {}, rhs = {}{}",
            w.n,
            w.k,
            w.lhs,
            w.rhs,
            if w.expected_zero {
                " (both sides must vanish)"
            } else {
                ""
            }
        );
    }
    s
}

fn cmd_build(spec: &SpecArgs, kind: RelationKind) -> Result<Outcome, Error> {
    let spec = spec.build(None, 1)?;
    let rel = build_relation(&spec, kind)?;
    Ok(Outcome {
        text: format!("{}\n{}", describe(&spec), render_relation(&rel)),
        json: json!({"spec": spec_to_json(&spec), "relation": relation_to_json(&rel)}),
        ok: true,
    })
}

fn parse_perturbation(s: &str) -> Result<(bool, usize), Error> {
    let bad = || Error::InvalidArgument(format!("--perturb expects lhs:J or rhs:J, got {s:?}"));
    let (side, power) = s.split_once(':').ok_or_else(bad)?;
    let on_rhs = match side {
        "lhs" => false,
        "rhs" => true,
        _ => return Err(bad()),
    };
    Ok((on_rhs, power.parse().map_err(|_| bad())?))
}

fn cmd_verify(
    spec: &SpecArgs,
    kind: Option<RelationKind>,
    range: &RangeArgs,
    perturbation: Option<&str>,
) -> Result<Outcome, Error> {
    let spec = spec.build(None, 1)?;
    let cfg = range.config(0, 10, 20)?;
    let perturbation = perturbation.map(parse_perturbation).transpose()?;
    let kinds = match kind {
        Some(k) => vec![k],
        None => vec![RelationKind::X, RelationKind::D],
    };
    let mut out = Outcome {
        text: describe(&spec) + "\n",
        json: Value::Array(Vec::new()),
        ok: true,
    };
    let mut reports = Vec::new();
    for k in kinds {
        let mut rel = build_relation(&spec, k)?;
        if let Some((on_rhs, power)) = perturbation {
            rel = perturb(&rel, on_rhs, power, &int(1));
        }
        let report = check_relation(&rel, &spec, &cfg)?;
        out.ok &= report.is_pass();
        out.text += &render_report(&report);
        out.text.push('\n');
        reports.push(report_to_json(&report, Some(&rel), Some(&spec)));
    }
    out.json = Value::Array(reports);
    Ok(out)
}

fn cmd_lemma(which: LemmaKind, a: &str, b: Option<&str>) -> Result<Outcome, Error> {
    let a = parse_rational_list(a)?;
    if a.is_empty() {
        return Err(Error::InvalidArgument(
            "--a needs at least one parameter".into(),
        ));
    }
    match which {
        LemmaKind::Lclm => {
            let rep = verify_lemma1(&a)?;
            let mut text = format!(
                "lclm of the {} factors (degree {}):\n  {}\nmonic product:\n  {}\nequal: {}\n",
                a.len(),
                rep.degree,
                rep.lclm,
                rep.product,
                rep.equal
            );
            let mut json = json!({
                "lclm": rep.lclm.to_string(),
                "product": rep.product.to_string(),
                "degree": rep.degree,
                "equal": rep.equal,
            });
            let mut ok = rep.equal;
            if let Some(b) = b {
                let b = parse_rational(b)?;
                let (formula, actual) = remainder_pair(&a, &b)?;
                let same = formula == actual;
                ok &= same;
                let _ = writeln!(
                    text,
                    "remainder modulo S - (n+1)/(n+b+1), b = {b}:\n  closed form {formula}\n  division    {actual}\nequal: {same}"
                );
                json["remainder"] = json!({
                    "b": b.to_string(),
                    "closed_form": formula.to_string(),
                    "division": actual.to_string(),
                    "equal": same,
                });
            }
            Ok(Outcome { text, json, ok })
        }
        LemmaKind::Coeffs => {
            let coeffs = qp_coeffs(&a);
            let ok = verify_lemma2(&a);
            let mut text = String::new();
            for (j, c) in coeffs.iter().enumerate() {
                let _ = writeln!(text, "S^{j}: {c}");
            }
            let _ = writeln!(text, "matches the expanded product: {ok}");
            let json = json!({
                "coeffs": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "equal": ok,
            });
            Ok(Outcome { text, json, ok })
        }
    }
}

fn cmd_mixed_list() -> Outcome {
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in catalog() {
        let fams: Vec<_> = e.families.iter().map(|f| f.to_string()).collect();
        let _ = writeln!(
            text,
            "{:<13} families {:<6} {}",
            e.id,
            fams.join("/"),
            e.note
        );
        rows.push(json!({"id": e.id, "families": fams, "note": e.note}));
    }
    Outcome {
        text,
        json: Value::Array(rows),
        ok: true,
    }
}

fn cmd_mixed_check(
    id: &str,
    spec: &SpecArgs,
    range: &RangeArgs,
    allow_corrected: bool,
) -> Result<Outcome, Error> {
    let e = entry(id)?;
    let spec = spec.build(e.families.first().copied(), e.shape.m.unwrap_or(1))?;
    let cfg = range.config(0, 8, 20)?;
    let v = validate_entry(&e, &spec, &cfg)?;
    let ok = match v.status {
        EntryStatus::Verified => true,
        EntryStatus::Corrected => allow_corrected,
        EntryStatus::Failed => false,
    };
    let edits: Vec<_> = v.edits.iter().map(|e| e.to_string()).collect();
    let mut text = format!(
        "{}\nentry {}: {}\nprinted:   {}\n",
        describe(&spec),
        v.entry,
        v.status,
        v.printed.render()
    );
    if v.status == EntryStatus::Corrected {
        let _ = writeln!(text, "corrected: {}", v.relation.render());
        for e in &edits {
            let _ = writeln!(text, "  edit: {e}");
        }
    }
    if v.status == EntryStatus::Failed {
        let _ = writeln!(text, "validating variants found: {}", v.candidates);
    }
    text += &render_report(&v.report);
    text.push('\n');
    let json = json!({
        "entry": v.entry,
        "status": v.status.to_string(),
        "spec": spec_to_json(&spec),
        "printed": mrelation_to_json(&v.printed),
        "relation": mrelation_to_json(&v.relation),
        "edits": edits,
        "candidates": v.candidates,
        "report": report_to_json(&v.report, None, Some(&spec)),
    });
    Ok(Outcome { text, json, ok })
}

fn cmd_derive_d(spec: &SpecArgs, id: &str, range: &RangeArgs) -> Result<Outcome, Error> {
    let e = entry(id)?;
    let spec = spec.build(e.families.first().copied(), e.shape.m.unwrap_or(1))?;
    let cfg = range.config(0, 8, 20)?;
    let v = validate_entry(&e, &spec, &cfg)?;
    if v.status == EntryStatus::Failed {
        return Ok(Outcome {
            text: format!("entry {id} failed validation; no D relation derived\n"),
            json: json!({"entry": id, "status": "failed"}),
            ok: false,
        });
    }
    let x = build_relation(&spec, RelationKind::X)?;
    let d = combine_x_m_to_d(&x, &v.relation)?;
    let report = check_relation(&d, &spec, &cfg)?;
    let text = format!(
        "{}\nmixed relation ({}): {}\nderived {}{}\n",
        describe(&spec),
        v.status,
        v.relation.render(),
        render_relation(&d),
        render_report(&report)
    );
    let json = json!({
        "entry": id,
        "status": v.status.to_string(),
        "mixed": mrelation_to_json(&v.relation),
        "report": report_to_json(&report, Some(&d), Some(&spec)),
    });
    Ok(Outcome {
        text,
        json,
        ok: report.is_pass(),
    })
}

fn cmd_fixtures(seed: u64) -> Result<Outcome, Error> {
    let results = run_fixtures(seed)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for f in &results {
        let _ = writeln!(
            text,
            "== {} {}",
            f.name,
            if f.pass { "PASS" } else { "FAIL" }
        );
        for l in &f.lines {
            let _ = writeln!(text, "  {l}");
        }
        rows.push(json!({"name": f.name, "pass": f.pass, "lines": f.lines}));
    }
    Ok(Outcome {
        text,
        json: Value::Array(rows),
        ok: results.iter().all(|f| f.pass),
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Build { spec, relation } => cmd_build(spec, *relation),
        Command::Verify {
            spec,
            relation,
            range,
            perturb,
        } => cmd_verify(spec, *relation, range, perturb.as_deref()),
        Command::Lemma { which, a, b } => cmd_lemma(*which, a, b.as_deref()),
        Command::Mixed { action } => match action {
            MixedAction::List => Ok(cmd_mixed_list()),
            MixedAction::Check {
                entry,
                spec,
                range,
                allow_corrected,
            } => cmd_mixed_check(entry, spec, range, *allow_corrected),
        },
        Command::DeriveD { spec, entry, range } => cmd_derive_d(spec, entry, range),
        Command::Fixtures => cmd_fixtures(cli.seed),
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (body, code) = match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
            };
            (body, if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            let body = match cli.format {
                Format::Text => String::new(),
                Format::Json => json!({"error": e.to_string()}).to_string() + "\n",
            };
            (body, 2)
        }
    };
    if let Err(e) = emit(&cli, &body) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
