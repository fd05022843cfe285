//! `hyparr`: command-line front end.
//!
//! Exit codes: 0 success or PASS, 1 verification FAIL, 2 input or usage
//! error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hyparr::algebra::{format_rational, parse_rational};
use hyparr::harness::{
    adapted_vector, lct, multi_nd_check, multi_smc_verify, nd_check, smc_verify, validate_adapted,
    Verdict,
};
use hyparr::io::{
    parse_arrangement, parse_roots, parse_zero_locus, rational_texts, DatumJson, FormJson,
    LatticeJson, Report, VerdictJson,
};
use hyparr::vmono::{
    diag_annihilator, diag_region_samples, diag_s_eigenvalue, diag_vres_member, diag_walls,
};
use hyparr::walls::{
    arrangement_walls, chamber_path, localized_walls, separating_walls, WallInstance, WallSet,
};
use hyparr::zeta::{
    candidate_poles, dense_resolution_data, global_zeta, local_zeta, local_zeta_at,
    multivariate_global_zeta, multivariate_local_zeta, multivariate_local_zeta_at,
};
use hyparr::{fixtures, Arrangement, Error, Rational, ZetaFunction};

#[derive(Parser)]
#[command(name = "hyparr", version, about = "Exact invariants of central hyperplane arrangements")]
struct Cli {
    /// Emit the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Arrangement file (JSON).
    #[arg(required_unless_present = "example", conflicts_with = "example")]
    file: Option<PathBuf>,
    /// Built-in arrangement: veys, threelines, boolean2, pair, line-and-pair.
    #[arg(long)]
    example: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice, dense edges, resolution data, lct and candidate poles.
    Analyze(Input),
    /// Topological zeta function and its poles.
    Zeta {
        #[command(flatten)]
        input: Input,
        /// Global instead of local at the origin.
        #[arg(long)]
        global: bool,
        /// Multivariate in the factors of the arrangement.
        #[arg(long)]
        multi: bool,
        /// Local at this point, e.g. `1,0` or `1/2,0`.
        #[arg(long, value_name = "POINT", conflicts_with = "global")]
        at: Option<String>,
    },
    /// Wall families of the arrangement, walls through a point, or walls
    /// between two points.
    Walls {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "POINT")]
        localize: Option<String>,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        separate: Option<Vec<String>>,
    },
    /// Diagonal-embedding demonstration.
    VmonoDemo,
    /// n/d check at the origin.
    Nd(Input),
    /// Poles of the zeta function against supplied Bernstein–Sato roots.
    Smc {
        #[command(flatten)]
        input: Input,
        /// Roots file `{"roots": [...]}`; optional for `--example veys`.
        #[arg(long, value_name = "FILE")]
        broots: Option<PathBuf>,
        #[arg(long)]
        global: bool,
    },
    /// Multivariate n/d check.
    MultiNd(Input),
    /// Polar hyperplanes of the global multivariate zeta function against a
    /// supplied zero locus.
    MultiSmc {
        #[command(flatten)]
        input: Input,
        /// Zero-locus file `{"zero_locus": [[c1, ..., ck, constant], ...]}`.
        #[arg(long, value_name = "FILE")]
        zero_locus: PathBuf,
    },
    /// An adapted vector for the origin.
    Adapted(Input),
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(String, i32), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<(Arrangement, Option<String>), Failure> {
    match (&input.file, &input.example) {
        (_, Some(name)) => fixtures::example(name)
            .map(|a| (a, Some(name.clone())))
            .ok_or_else(|| {
                Failure::Input(format!(
                    "unknown example {name:?}; expected one of {}",
                    fixtures::EXAMPLE_NAMES.join(", ")
                ))
            }),
        (Some(path), None) => {
            let text = read(path)?;
            parse_arrangement(&text)
                .map(|a| (a, None))
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(Failure::Input("no arrangement given".into())),
    }
}

fn parse_point(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|t| parse_rational(t).map_err(Failure::from))
        .collect()
}

fn rationals_text(values: &[Rational]) -> String {
    format!("({})", rational_texts(values).join(", "))
}

fn edge_text(edge: &[usize]) -> String {
    let names: Vec<String> = edge.iter().map(|i| format!("D{}", i + 1)).collect();
    format!("{{{}}}", names.join(", "))
}

fn verdict_lines(v: &Verdict, out: &mut String) {
    out.push_str(if v.pass { "verdict: PASS\n" } else { "verdict: FAIL\n" });
    for w in &v.witnesses {
        out.push_str(&format!("  witness: {w}\n"));
    }
}

fn exit_for(v: &Verdict) -> i32 {
    if v.pass {
        0
    } else {
        1
    }
}

fn describe(arr: &Arrangement) -> String {
    let name = arr.name().unwrap_or("arrangement");
    format!("{name}: {} forms in dimension {}, degree {}\n", arr.len(), arr.dim(), arr.degree())
}

fn zeta_text(z: &ZetaFunction, label: &str, out: &mut String) {
    out.push_str(&format!("{label} = {z}\n"));
    let poles = z.poles();
    if z.nvars() == 1 {
        let list: Vec<String> = poles
            .univariate
            .iter()
            .map(|(p, m)| format!("{} (order {m})", format_rational(p)))
            .collect();
        out.push_str(&format!("poles: {{{}}}\n", list.join(", ")));
    } else {
        out.push_str("polar hyperplanes:\n");
        for (h, m) in &poles.multivariate {
            out.push_str(&format!("  {h} = 0 (order {m})\n"));
        }
    }
}

fn analyze(arr: &Arrangement, json: bool) -> Outcome {
    let data = dense_resolution_data(arr)?;
    let lattice = LatticeJson::of(arr)?;
    let threshold = if arr.is_central() && !arr.is_empty() { Some(lct(arr)?) } else { None };
    let cands = candidate_poles(arr)?;
    if json {
        let mut r = Report::new("analyze", arr);
        r.lattice = Some(lattice);
        r.resolution = Some(data.iter().map(DatumJson::from).collect());
        r.lct = threshold.as_ref().map(format_rational);
        r.candidate_poles = Some(rational_texts(&cands));
        r.details.insert("central".into(), json!(arr.is_central()));
        r.details.insert("essential".into(), json!(arr.is_essential()));
        r.details.insert("indecomposable".into(), json!(arr.is_indecomposable()?));
        return Ok((r.to_json(), 0));
    }
    let mut out = describe(arr);
    out.push_str(&format!(
        "central: {}, essential: {}, indecomposable: {}\n",
        arr.is_central(),
        arr.is_essential(),
        arr.is_indecomposable()?
    ));
    out.push_str(&format!(
        "lattice: {} flats, rank {}, characteristic polynomial {}\n",
        lattice.flat_count, lattice.rank, lattice.characteristic_polynomial
    ));
    out.push_str("dense edges:\n");
    for d in &data {
        out.push_str(&format!(
            "  {} codim {} N = {} nu = {} candidate {}\n",
            edge_text(d.flat.indices()),
            d.flat.codim(),
            d.order,
            d.nu,
            format_rational(&d.candidate_pole())
        ));
    }
    if let Some(c) = threshold {
        out.push_str(&format!("lct: {}\n", format_rational(&c)));
    }
    out.push_str(&format!(
        "candidate poles: {{{}}}\n",
        rational_texts(&cands).join(", ")
    ));
    Ok((out, 0))
}

fn zeta(arr: &Arrangement, global: bool, multi: bool, at: Option<&str>, json: bool) -> Outcome {
    let point = at.map(parse_point).transpose()?;
    let z = match (multi, global, &point) {
        (false, true, _) => global_zeta(arr)?,
        (true, true, _) => multivariate_global_zeta(arr)?,
        (false, false, Some(p)) => local_zeta_at(arr, p)?,
        (true, false, Some(p)) => multivariate_local_zeta_at(arr, p)?,
        (false, false, None) => local_zeta(arr)?,
        (true, false, None) => multivariate_local_zeta(arr)?,
    };
    if json {
        let mut r = Report::new("zeta", arr).with_zeta(&z);
        r.details.insert("scope".into(), json!(if global { "global" } else { "local" }));
        if let Some(p) = &point {
            r.details.insert("point".into(), json!(rational_texts(p)));
        }
        return Ok((r.to_json(), 0));
    }
    let mut out = describe(arr);
    let label = match (global, &point) {
        (true, _) => "Z_global".to_owned(),
        (false, Some(p)) => format!("Z_local at {}", rationals_text(p)),
        (false, None) => "Z_local".to_owned(),
    };
    zeta_text(&z, &label, &mut out);
    Ok((out, 0))
}

fn instance_json(w: &WallInstance) -> Value {
    json!({
        "normal": w.normal.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "level": format_rational(&w.level),
    })
}

fn instance_text(w: &WallInstance) -> String {
    let terms: Vec<String> = w
        .normal
        .iter()
        .enumerate()
        .filter(|(_, c)| *c != &0.into())
        .map(|(i, c)| {
            if c == &1.into() {
                format!("a{}", i + 1)
            } else {
                format!("{c}a{}", i + 1)
            }
        })
        .collect();
    format!("{} = {}", terms.join(" + "), format_rational(&w.level))
}

fn families_json(ws: &WallSet) -> Value {
    Value::Array(
        ws.families()
            .iter()
            .map(|f| {
                json!({
                    "normal": f.normal().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "offsets": f.offsets().iter().map(format_rational).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn families_text(ws: &WallSet, out: &mut String) {
    for f in ws.families() {
        let probe = WallInstance {
            normal: f.normal().to_vec(),
            level: Rational::from_integer(0.into()),
        };
        let lhs = instance_text(&probe);
        let lhs = lhs.trim_end_matches(" = 0");
        let offsets: Vec<String> = f.offsets().iter().map(format_rational).collect();
        out.push_str(&format!("  {lhs} in {{{}}} + Z\n", offsets.join(", ")));
    }
}

fn walls(arr: &Arrangement, localize: Option<&str>, separate: Option<&[String]>, json: bool) -> Outcome {
    let ws = arrangement_walls(arr)?;
    let local = localize.map(parse_point).transpose()?;
    let between = separate
        .map(|s| Ok::<_, Failure>((parse_point(&s[0])?, parse_point(&s[1])?)))
        .transpose()?;
    let through = local.as_ref().map(|p| localized_walls(&ws, p)).transpose()?;
    let crossing = between
        .as_ref()
        .map(|(a, b)| separating_walls(&ws, a, b))
        .transpose()?;
    let path = match &between {
        Some((a, b)) if a != b => Some(chamber_path(&ws, a, b)?),
        _ => None,
    };
    if json {
        let mut r = Report::new("walls", arr);
        r.details.insert("families".into(), families_json(&ws));
        if let Some(t) = &through {
            r.details.insert("localized".into(), t.iter().map(instance_json).collect());
        }
        if let Some(c) = &crossing {
            r.details.insert("separating".into(), c.iter().map(instance_json).collect());
        }
        if let Some(p) = &path {
            r.details.insert("path".into(), p.walls.iter().map(instance_json).collect());
        }
        return Ok((r.to_json(), 0));
    }
    let mut out = describe(arr);
    out.push_str("wall families:\n");
    families_text(&ws, &mut out);
    if let (Some(p), Some(t)) = (&local, &through) {
        out.push_str(&format!("walls through {}: {}\n", rationals_text(p), t.len()));
        for w in t {
            out.push_str(&format!("  {}\n", instance_text(w)));
        }
    }
    if let (Some((a, b)), Some(c)) = (&between, &crossing) {
        out.push_str(&format!(
            "walls separating {} and {}: {}\n",
            rationals_text(a),
            rationals_text(b),
            c.len()
        ));
        out.push_str(&format!("same chamber: {}\n", c.is_empty()));
        if let Some(p) = &path {
            out.push_str("crossing order:\n");
            for w in &p.walls {
                out.push_str(&format!("  {}\n", instance_text(w)));
            }
        }
    }
    Ok((out, 0))
}

fn vmono_demo(json: bool) -> Outcome {
    let ws = diag_walls();
    let samples = diag_region_samples();
    let half = Rational::new(1.into(), 2.into());
    let three_halves = Rational::new(3.into(), 2.into());
    let alpha = [half.clone(), half];
    let beta = [three_halves.clone(), three_halves];
    let levels = diag_annihilator(&alpha, &beta)?;
    if json {
        let regions: Vec<Value> = samples
            .iter()
            .map(|(a, c)| {
                json!({
                    "point": rational_texts(a),
                    "class": {"m": c.m, "n": c.n, "k": c.k},
                    "member": diag_vres_member(*c, a),
                    "eigenvalue": format_rational(&diag_s_eigenvalue(*c)),
                })
            })
            .collect();
        let v = json!({
            "command": "vmono-demo",
            "families": families_json(&ws),
            "regions": regions,
            "annihilator": {
                "from": rational_texts(&alpha),
                "to": rational_texts(&beta),
                "levels": levels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            },
        });
        return Ok((serde_json::to_string_pretty(&v).expect("serializes"), 0));
    }
    let mut out = String::from("diagonal embedding of the line in the plane\nwall families:\n");
    families_text(&ws, &mut out);
    out.push_str("region generators t1^m t2^n / (t1 - t2)^k:\n");
    for (a, c) in &samples {
        out.push_str(&format!(
            "  at {}: (m, n, k) = ({}, {}, {}), member {}, s1 + s2 eigenvalue {}\n",
            rationals_text(a),
            c.m,
            c.n,
            c.k,
            diag_vres_member(*c, a),
            format_rational(&diag_s_eigenvalue(*c))
        ));
    }
    let factors: Vec<String> = levels.iter().map(|l| format!("(s1 + s2 + {l})")).collect();
    out.push_str(&format!(
        "V^{} / V^{} is annihilated by {}\n",
        rationals_text(&alpha),
        rationals_text(&beta),
        factors.join("")
    ));
    Ok((out, 0))
}

fn nd(arr: &Arrangement, json: bool) -> Outcome {
    let rep = nd_check(arr)?;
    let code = exit_for(&rep.verdict);
    if json {
        let mut r = Report::new("nd", arr);
        r.verdicts.push(VerdictJson::new("nd", &rep.verdict));
        r.details.insert(
            "nd".into(),
            json!({
                "n": rep.n,
                "d": rep.d,
                "value": format_rational(&rep.value),
                "candidate": rep.candidate,
                "pole": rep.pole,
            }),
        );
        return Ok((r.to_json(), code));
    }
    let mut out = describe(arr);
    out.push_str(&format!("n = {}, d = {}, -n/d = {}\n", rep.n, rep.d, format_rational(&rep.value)));
    out.push_str(&format!(
        "candidate pole from the edge {{0}}: {}\n",
        if rep.candidate { "yes" } else { "no" }
    ));
    out.push_str(&format!(
        "pole of the local zeta function: {}\n",
        if rep.pole { "yes" } else { "not a pole" }
    ));
    out.push_str(&format!("predicted Bernstein-Sato root: {}\n", format_rational(&rep.value)));
    verdict_lines(&rep.verdict, &mut out);
    Ok((out, code))
}

fn smc(arr: &Arrangement, example: Option<&str>, broots: Option<&PathBuf>, global: bool, json: bool) -> Outcome {
    let roots = match (broots, example.and_then(fixtures::example_roots)) {
        (Some(path), _) => parse_roots(&read(path)?)?,
        (None, Some(roots)) => roots,
        (None, None) => return Err(Failure::Input("--broots is required for this arrangement".into())),
    };
    let v = smc_verify(arr, &roots, !global)?;
    let z = if global { global_zeta(arr)? } else { local_zeta(arr)? };
    let code = exit_for(&v);
    if json {
        let mut r = Report::new("smc", arr).with_zeta(&z);
        r.verdicts.push(VerdictJson::new("smc", &v));
        r.details.insert("roots".into(), json!(rational_texts(&roots)));
        return Ok((r.to_json(), code));
    }
    let mut out = describe(arr);
    zeta_text(&z, if global { "Z_global" } else { "Z_local" }, &mut out);
    out.push_str(&format!("roots: {{{}}}\n", rational_texts(&roots).join(", ")));
    verdict_lines(&v, &mut out);
    Ok((out, code))
}

fn multi_nd(arr: &Arrangement, json: bool) -> Outcome {
    let rep = multi_nd_check(arr)?;
    let code = exit_for(&rep.verdict);
    if json {
        let mut r = Report::new("multi-nd", arr);
        r.verdicts.push(VerdictJson::new("multi-nd", &rep.verdict));
        r.details.insert(
            "multi_nd".into(),
            json!({
                "hyperplane": serde_json::to_value(FormJson::from(&rep.hyperplane)).expect("serializes"),
                "candidate": rep.candidate,
                "polar": rep.polar,
            }),
        );
        return Ok((r.to_json(), code));
    }
    let mut out = describe(arr);
    out.push_str(&format!("hyperplane: {} = 0\n", rep.hyperplane));
    out.push_str(&format!("candidate from the edge {{0}}: {}\n", if rep.candidate { "yes" } else { "no" }));
    out.push_str(&format!(
        "polar component of the local zeta function: {}\n",
        if rep.polar { "yes" } else { "no" }
    ));
    verdict_lines(&rep.verdict, &mut out);
    Ok((out, code))
}

fn multi_smc(arr: &Arrangement, zero_locus: &PathBuf, json: bool) -> Outcome {
    let locus = parse_zero_locus(&read(zero_locus)?)?;
    let v = multi_smc_verify(arr, &locus)?;
    let z = multivariate_global_zeta(arr)?;
    let code = exit_for(&v);
    if json {
        let mut r = Report::new("multi-smc", arr).with_zeta(&z);
        r.verdicts.push(VerdictJson::new("multi-smc", &v));
        r.details.insert(
            "zero_locus".into(),
            locus
                .iter()
                .map(|f| serde_json::to_value(FormJson::from(f)).expect("serializes"))
                .collect(),
        );
        return Ok((r.to_json(), code));
    }
    let mut out = describe(arr);
    zeta_text(&z, "Z_global", &mut out);
    out.push_str("zero locus:\n");
    for f in &locus {
        out.push_str(&format!("  {f} = 0\n"));
    }
    verdict_lines(&v, &mut out);
    Ok((out, code))
}

fn adapted(arr: &Arrangement, json: bool) -> Outcome {
    let beta = adapted_vector(arr)?;
    let v = validate_adapted(arr, &beta)?;
    let code = exit_for(&v);
    if json {
        let mut r = Report::new("adapted", arr);
        r.verdicts.push(VerdictJson::new("adapted", &v));
        r.details.insert("vector".into(), json!(rational_texts(&beta)));
        return Ok((r.to_json(), code));
    }
    let mut out = describe(arr);
    out.push_str(&format!("adapted vector: {}\n", rationals_text(&beta)));
    verdict_lines(&v, &mut out);
    Ok((out, code))
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Analyze(input) => analyze(&load(input)?.0, json),
        Command::Zeta { input, global, multi, at } => zeta(&load(input)?.0, *global, *multi, at.as_deref(), json),
        Command::Walls { input, localize, separate } => {
            walls(&load(input)?.0, localize.as_deref(), separate.as_deref(), json)
        }
        Command::VmonoDemo => vmono_demo(json),
        Command::Nd(input) => nd(&load(input)?.0, json),
        Command::Smc { input, broots, global } => {
            let (arr, example) = load(input)?;
            smc(&arr, example.as_deref(), broots.as_ref(), *global, json)
        }
        Command::MultiNd(input) => multi_nd(&load(input)?.0, json),
        Command::MultiSmc { input, zero_locus } => multi_smc(&load(input)?.0, zero_locus, json),
        Command::Adapted(input) => adapted(&load(input)?.0, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(code as u8)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
