//! `zz`: command-line frontend for exact double-complex and cdga computations.
//!
//! Exit codes: 0 computed (and, for `check`, the condition holds); 1 the
//! checked condition fails; 2 input error; 3 internal invariant violation.

mod input;
mod render;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zz_core::bicomplex::{self, direct_sum_all, dual, json as bjson, scramble, Arrow, Bicomplex, Bidegree, ZigzagShape};
use zz_core::cdga::{self, compatibility, cohomology_ring, j_minimal_model, obstruction, verify_model, ModelCaps};
use zz_core::conditions::{check_ddc, check_ddc3, j_controlled, les, numeric_report, purity_diagram};
use zz_core::decomposition::{multiplicities, realize, table_to_json};
use zz_core::functors::{cohomology, e1_degenerate, hodge_filtration, purity_defect, spectral_page, star_condition, Functor, Sequence};
use zz_core::gen::{random_complex, ShapeParams};
use zz_core::models::{blowup_model, product_model, projective_bundle_model, surface_model, vaisman_model, VaismanInput};
use zz_core::par::Exec;
use zz_core::Error;

/// A failed command: message and exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn from_core(e: Error) -> Self {
        Failure { code: if e.is_internal() { 3 } else { 2 }, message: e.to_string() }
    }

    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from_core(e)
    }
}

/// What a command produced: text to print and its exit code (0 or 1).
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn verdict(text: String, holds: bool) -> Self {
        Outcome { text, code: if holds { 0 } else { 1 } }
    }
}

type Res = Result<Outcome, Failure>;

#[derive(Parser)]
#[command(name = "zz", version, about = "Exact computations on double complexes and cdgas")]
struct Cli {
    /// Emit machine-readable JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for commands that take several files (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that each file is a valid bicomplex.
    Validate {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Zigzag multiplicities of a bicomplex.
    Decompose { file: Option<String> },
    /// Cohomology dimensions.
    Cohomology {
        /// One of deRham, dolbeault, conj_dolbeault, bott_chern, aeppli,
        /// ker_dc, coim_dc, purity_upper, purity_lower (default: all).
        #[arg(long)]
        functor: Option<String>,
        file: Option<String>,
    },
    /// Hodge filtrations on de Rham cohomology.
    Filtration { file: Option<String> },
    /// One page of a Frölicher-type spectral sequence.
    Pages {
        #[arg(long = "seq", default_value = "column")]
        seq: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
        file: Option<String>,
    },
    /// Purity defect per degree.
    Pdef { file: Option<String> },
    /// The long exact sequence relating Ker d^c, de Rham, d^c and the quotient by Im d^c.
    Les { file: Option<String> },
    /// Test a condition; exit 0 if it holds for every file, 1 otherwise.
    Check(CheckArgs),
    /// The numerical inequality chain.
    Numerics { file: Option<String> },
    /// The purity comparison diagram.
    Purity { file: Option<String> },
    /// Build a bicomplex and print it as JSON.
    #[command(subcommand)]
    Build(Build),
    /// Combine bicomplexes by a geometric construction.
    #[command(subcommand)]
    Combine(Combine),
    /// The dual complex `(p,q) ↦ (n−p, n−q)`.
    Dual {
        #[arg(long)]
        n: i64,
        file: Option<String>,
    },
    /// Apply a random change of basis.
    Scramble {
        #[arg(long)]
        seed: Option<u64>,
        file: Option<String>,
    },
    /// Commutative differential graded algebras.
    #[command(subcommand)]
    Cdga(Cdga),
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    condition: Condition,
    /// Input files (stdin when omitted).
    files: Vec<String>,
}

#[derive(Args)]
#[group(id = "condition", multiple = false)]
struct Condition {
    #[arg(long)]
    ddc: bool,
    /// The default.
    #[arg(long)]
    ddc3: bool,
    #[arg(long)]
    star: bool,
    #[arg(long)]
    e1: bool,
    #[arg(long)]
    pure: bool,
    #[arg(long = "j-controlled", value_name = "J")]
    j_controlled: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Dot,
    Square,
    Zigzag,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArrowArg {
    H,
    V,
}

#[derive(Subcommand)]
enum Build {
    /// Model of a Vaisman manifold from primitive basic harmonic dimensions.
    Vaisman {
        #[arg(long)]
        n: usize,
        /// `"p,q:dim;p,q:dim;..."`.
        #[arg(long)]
        prim: String,
    },
    /// Model of a compact complex surface.
    Surface {
        #[arg(long)]
        b1: usize,
        #[arg(long)]
        h10: usize,
        #[arg(long)]
        h20: usize,
        #[arg(long)]
        b2: usize,
    },
    /// A single indecomposable.
    Shape {
        #[arg(long, value_enum)]
        kind: ShapeArg,
        /// Anchor `"p,q"`.
        #[arg(long, default_value = "0,0")]
        at: String,
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long, value_enum, default_value = "h")]
        arrow: ArrowArg,
    },
    /// A random scrambled bicomplex (seed from --seed, else ZZ_SEED, else 0).
    Random {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 6)]
        parts: usize,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Realize a multiplicity table.
    Table { file: Option<String> },
}

#[derive(Subcommand)]
enum Combine {
    /// Blow-up of M along a submanifold Z of codimension d.
    Blowup {
        m: String,
        z: String,
        #[arg(long)]
        d: usize,
    },
    /// Projective bundle of rank r over M.
    Bundle {
        m: String,
        #[arg(long)]
        r: usize,
    },
    /// Product M × N.
    Product { a: String, b: String },
    /// Direct sum.
    Sum {
        #[arg(required = true)]
        files: Vec<String>,
    },
}

#[derive(Args)]
struct CdgaSource {
    /// A named preset (see `zz cdga presets`).
    #[arg(long)]
    preset: Option<String>,
    /// Presentation JSON (stdin when neither this nor --preset is given).
    file: Option<String>,
}

#[derive(Subcommand)]
enum Cdga {
    /// List preset names.
    Presets,
    /// Print a presentation as canonical JSON.
    Show(CdgaSource),
    /// Check that d² = 0 and degrees are consistent.
    Validate(CdgaSource),
    /// Cohomology ring: Betti numbers, representatives, products.
    Cohomology {
        #[command(flatten)]
        src: CdgaSource,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// The j-minimal model.
    Model {
        #[command(flatten)]
        src: CdgaSource,
        #[arg(long)]
        j: usize,
    },
    /// The obstruction table; `--sum` adds connected-sum summands (presets or files).
    Obstruct {
        #[command(flatten)]
        src: CdgaSource,
        #[arg(long)]
        j: usize,
        #[arg(long = "sum", value_name = "PRESET|FILE")]
        sum: Vec<String>,
    },
    /// Compare the obstruction with a candidate bicomplex.
    Compat {
        #[command(flatten)]
        src: CdgaSource,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        candidate: String,
    },
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn seed_from_env() -> Result<u64, Failure> {
    match std::env::var("ZZ_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::input(format!("ZZ_SEED must be an unsigned integer, found `{s}`"))),
        Err(_) => Ok(0),
    }
}

fn complex_out(a: &Bicomplex) -> Res {
    Ok(Outcome::ok(bjson::to_json_string(a) + "\n"))
}

fn run_per_file<F>(files: &[String], jobs: usize, f: F) -> Vec<(String, Res)>
where
    F: Fn(Option<&str>) -> Res + Sync + Send,
{
    let paths: Vec<Option<String>> = if files.is_empty() { vec![None] } else { files.iter().cloned().map(Some).collect() };
    let names: Vec<String> = paths.iter().map(|p| p.clone().unwrap_or_else(|| "<stdin>".into())).collect();
    let work = |paths: Vec<Option<String>>| Exec::Parallel.map(paths, |p| f(p.as_deref()));
    let results = in_pool(jobs, move || work(paths));
    names.into_iter().zip(results).collect()
}

#[cfg(feature = "parallel")]
fn in_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn in_pool<R: Send>(_jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Merge per-file outcomes: the worst failure wins, otherwise 1 if any condition failed.
fn merge(results: Vec<(String, Res)>, json_mode: bool) -> Res {
    if results.len() == 1 {
        return results.into_iter().next().expect("one result").1;
    }
    let mut text = String::new();
    let mut arr = Vec::new();
    let mut code = 0;
    let mut worst: Option<Failure> = None;
    for (name, r) in results {
        match r {
            Ok(o) => {
                code = code.max(o.code);
                if json_mode {
                    let v: Value = serde_json::from_str(&o.text).unwrap_or(Value::String(o.text.trim_end().into()));
                    arr.push(json!({ "file": name, "result": v }));
                } else {
                    let _ = write!(text, "== {name}\n{}", o.text);
                }
            }
            Err(e) => {
                if json_mode {
                    arr.push(json!({ "file": name, "error": e.message }));
                } else {
                    let _ = writeln!(text, "== {name}\nerror: {}", e.message);
                }
                if worst.as_ref().is_none_or(|w| e.code > w.code) {
                    worst = Some(Failure { code: e.code, message: format!("{name}: {}", e.message) });
                }
            }
        }
    }
    if json_mode {
        text = pretty(&Value::Array(arr));
    }
    if let Some(w) = worst {
        print!("{text}");
        return Err(w);
    }
    Ok(Outcome { text, code })
}

fn cmd_validate(files: &[String], jobs: usize, json_mode: bool) -> Res {
    let results = run_per_file(files, jobs, |p| {
        let a = input::load_bicomplex(p)?;
        let (total, degrees) = (a.total_dim(), a.degree_range());
        if json_mode {
            Ok(Outcome::ok(pretty(&json!({ "valid": true, "dim": total, "degrees": degrees }))))
        } else {
            Ok(Outcome::ok(format!("valid: total dimension {total}\n")))
        }
    });
    merge(results, json_mode)
}

fn cmd_check(c: &CheckArgs, jobs: usize, json_mode: bool) -> Res {
    let results = run_per_file(&c.files, jobs, |p| {
        let a = input::load_bicomplex(p)?;
        check_one(&c.condition, &a, json_mode)
    });
    merge(results, json_mode)
}

fn check_one(c: &Condition, a: &Bicomplex, json_mode: bool) -> Res {
    let (name, holds, detail) = if c.ddc {
        ("ddc", check_ddc(a)?, Value::Null)
    } else if c.star {
        ("star", star_condition(a), Value::Null)
    } else if c.e1 {
        ("e1_degenerate", e1_degenerate(a, &a.total()), Value::Null)
    } else if c.pure {
        let r = purity_diagram(a)?;
        ("pure", r.pdef_zero, r.to_json())
    } else if let Some(j) = c.j_controlled {
        ("j_controlled", j_controlled(a, j)?, json!({ "j": j }))
    } else {
        let r = check_ddc3(a)?;
        ("ddc3", r.holds, r.to_json())
    };
    let text = if json_mode {
        let mut v = json!({ "condition": name, "holds": holds });
        if !detail.is_null() {
            v["report"] = detail;
        }
        pretty(&v)
    } else {
        let mut t = format!("{name}: {}\n", if holds { "holds" } else { "fails" });
        if name == "ddc3" {
            if let Some(w) = detail.get("witness") {
                let _ = writeln!(t, "  witness in degree {}", w["degree"]);
            }
            let _ = writeln!(t, "  pdef {}  E1-degenerate {}", detail["pdef"], render::yes_no(detail["e1_degenerate"] == true));
        }
        t
    };
    Ok(Outcome::verdict(text, holds))
}

fn cmd_decompose(file: Option<&str>, json_mode: bool) -> Res {
    let a = input::load_bicomplex(file)?;
    let t = multiplicities(&a)?;
    Ok(Outcome::ok(if json_mode { pretty(&table_to_json(&t)) } else { render::multiplicity_table(&t) }))
}

fn cmd_cohomology(functor: Option<&str>, file: Option<&str>, json_mode: bool) -> Res {
    let fs: Vec<Functor> = match functor {
        Some(s) => vec![s.parse()?],
        None => Functor::ALL.to_vec(),
    };
    let a = input::load_bicomplex(file)?;
    let tables: Vec<_> = fs.iter().map(|&f| cohomology(&a, f)).collect();
    if json_mode {
        let v = if tables.len() == 1 {
            tables[0].to_json()
        } else {
            Value::Object(tables.iter().map(|t| (t.functor.name().to_string(), t.to_json())).collect())
        };
        return Ok(Outcome::ok(pretty(&v)));
    }
    Ok(Outcome::ok(tables.iter().map(render::cohomology_table).collect::<Vec<_>>().join("\n")))
}

fn cmd_filtration(file: Option<&str>, json_mode: bool) -> Res {
    let a = input::load_bicomplex(file)?;
    let f = hodge_filtration(&a);
    if json_mode {
        return Ok(Outcome::ok(pretty(&f.to_json())));
    }
    let mut out = String::new();
    let degrees: std::collections::BTreeSet<i64> = f.f.keys().map(|&(_, k)| k).collect();
    for k in degrees {
        let _ = writeln!(out, "H^{k}:");
        let row = |m: &std::collections::BTreeMap<(i64, i64), usize>| {
            m.iter().filter(|((_, kk), _)| *kk == k).map(|((p, _), n)| format!("{p}:{n}")).collect::<Vec<_>>().join(" ")
        };
        let _ = writeln!(out, "  dim F^p     {}", row(&f.f));
        let _ = writeln!(out, "  dim Fbar^q  {}", row(&f.fbar));
        let refined = f.refined.iter().filter(|((_, _, kk), _)| *kk == k).map(|((p, q, _), n)| (Bidegree::new(*p, *q), *n)).collect();
        out.push_str(&render::grid(&refined));
    }
    Ok(Outcome::ok(out))
}

fn cmd_pages(seq: &str, r: usize, file: Option<&str>, json_mode: bool) -> Res {
    let which: Sequence = seq.parse()?;
    let a = input::load_bicomplex(file)?;
    let page = spectral_page(&a, which, r)?;
    if json_mode {
        return Ok(Outcome::ok(pretty(&page.to_json())));
    }
    let mut out = format!("E_{r} ({seq}), total {}\n", page.total_dim());
    out.push_str(&render::grid(&page.dims));
    for (pq, n) in &page.d_ranks {
        let _ = writeln!(out, "  rank d_{r} at ({pq}) = {n}");
    }
    Ok(Outcome::ok(out))
}

fn cmd_pdef(file: Option<&str>, json_mode: bool) -> Res {
    let a = input::load_bicomplex(file)?;
    let p = purity_defect(&a);
    if json_mode {
        return Ok(Outcome::ok(pretty(&serde_json::to_value(&p).expect("serializable"))));
    }
    Ok(Outcome::ok(format!("pdef {}\n{}", p.total, render::by_degree(&p.per_degree))))
}

fn cmd_les(file: Option<&str>, json_mode: bool) -> Res {
    let a = input::load_bicomplex(file)?;
    let l = les(&a)?;
    if json_mode {
        return Ok(Outcome::ok(pretty(&l.to_json())));
    }
    let rows: Vec<Vec<String>> = l
        .degrees
        .iter()
        .map(|d| {
            [d.k, d.h_ker_dc as i64, d.h_d as i64, d.h_dc as i64, d.h_coim_dc as i64, d.rank_i_pi as i64, d.rank_p_j as i64, d.rank_delta as i64]
                .iter()
                .map(|x| x.to_string())
                .collect()
        })
        .collect();
    let mut out = render::columns(&["k", "h(Ker dc)", "h_d", "h_dc", "h(A/Im dc)", "rk(i,pi)", "rk(p-j)", "rk delta"], &rows);
    let _ = writeln!(out, "exact: {}  betti identity: {}", render::yes_no(l.exact), render::yes_no(l.betti_identity));
    Ok(Outcome::ok(out))
}

fn cmd_numerics(file: Option<&str>, json_mode: bool) -> Res {
    let a = input::load_bicomplex(file)?;
    let n = numeric_report(&a)?;
    if json_mode {
        return Ok(Outcome::ok(pretty(&n.to_json())));
    }
    let rel = |eq: bool| if eq { "=" } else { ">" };
    let mut out = format!(
        "h_BC + h_A {} {} h(Ker dc) + h(A/Im dc) {} {} h_dbar + h_d {} {} 2 sum b\n",
        n.h_bc + n.h_a,
        rel(n.equalities[0]),
        n.h_ker_dc + n.h_coim_dc,
        rel(n.equalities[1]),
        n.h_dolbeault + n.h_conj_dolbeault,
        rel(n.equalities[2]),
    );
    let _ = writeln!(out, "  = {}", 2 * n.sum_betti);
    let _ = writeln!(out, "slacks {:?}", n.slacks);
    let _ = writeln!(
        out,
        "pdef = 0: {}  zigzags ≤ 3: {}  E1-degenerate: {}",
        render::yes_no(n.structural[0]),
        render::yes_no(n.structural[1]),
        render::yes_no(n.structural[2])
    );
    Ok(Outcome::ok(out))
}

fn cmd_purity(file: Option<&str>, json_mode: bool) -> Res {
    let a = input::load_bicomplex(file)?;
    let p = purity_diagram(&a)?;
    if json_mode {
        return Ok(Outcome::ok(pretty(&p.to_json())));
    }
    let rows: Vec<Vec<String>> = p
        .degrees
        .iter()
        .map(|d| {
            [d.k, d.h_bc as i64, d.h_ker_dc as i64, d.h_coim_dc as i64, d.h_a as i64, d.rank_phi as i64, d.rank_psi as i64, d.h_upper as i64, d.h_lower as i64]
                .iter()
                .map(|x| x.to_string())
                .collect()
        })
        .collect();
    let mut out = render::columns(&["k", "h_BC", "h(Ker dc)", "h(A/Im dc)", "h_A", "rk phi", "rk psi", "h_upper", "h_lower"], &rows);
    let _ = writeln!(out, "pure: {}", render::yes_no(p.pdef_zero));
    Ok(Outcome::ok(out))
}

fn cmd_build(b: &Build) -> Res {
    let a = match b {
        Build::Vaisman { n, prim } => vaisman_model(&VaismanInput::parse(*n, prim)?)?,
        Build::Surface { b1, h10, h20, b2 } => surface_model(*b1, *h10, *h20, *b2)?,
        Build::Shape { kind, at, length, arrow } => {
            let anchor = Bidegree::parse(at)?;
            let s = match kind {
                ShapeArg::Dot => ZigzagShape::dot(anchor),
                ShapeArg::Square => ZigzagShape::square(anchor),
                ShapeArg::Zigzag => {
                    let arrow = match arrow {
                        ArrowArg::H => Arrow::Horizontal,
                        ArrowArg::V => Arrow::Vertical,
                    };
                    ZigzagShape::zigzag(anchor, *length, arrow)?
                }
            };
            bicomplex::make_zigzag(&s)?
        }
        Build::Random { seed, parts, max_len } => {
            let seed = match seed {
                Some(s) => *s,
                None => seed_from_env()?,
            };
            let sp = ShapeParams { max_len: (*max_len).max(1), ..ShapeParams::default() };
            random_complex(seed, *parts, &sp).1
        }
        Build::Table { file } => realize(&input::load_table(file.as_deref())?)?,
    };
    complex_out(&a)
}

fn cmd_combine(c: &Combine) -> Res {
    let load = |p: &str| input::load_bicomplex(Some(p));
    let a = match c {
        Combine::Blowup { m, z, d } => blowup_model(&load(m)?, &load(z)?, *d)?,
        Combine::Bundle { m, r } => projective_bundle_model(&load(m)?, *r)?,
        Combine::Product { a, b } => product_model(&load(a)?, &load(b)?),
        Combine::Sum { files } => {
            let parts = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
            direct_sum_all(&parts.iter().collect::<Vec<_>>())
        }
    };
    complex_out(&a)
}

fn presentation(src: &CdgaSource) -> Result<cdga::CdgaPresentation, Failure> {
    input::load_presentation(src.preset.as_deref(), src.file.as_deref())
}

fn cmd_cdga(c: &Cdga, json_mode: bool) -> Res {
    match c {
        Cdga::Presets => {
            if json_mode {
                return Ok(Outcome::ok(pretty(&json!(cdga::PRESET_NAMES))));
            }
            Ok(Outcome::ok(cdga::PRESET_NAMES.iter().map(|n| format!("{n}\n")).collect()))
        }
        Cdga::Show(src) => Ok(Outcome::ok(presentation(src)?.to_json_string())),
        Cdga::Validate(src) => {
            let p = presentation(src)?;
            let text = if json_mode {
                pretty(&json!({ "valid": true, "generators": p.generator_count(), "minimal": p.is_minimal() }))
            } else {
                format!("valid: {} generators, dimension {}, minimal: {}\n", p.generator_count(), p.dim, render::yes_no(p.is_minimal()))
            };
            Ok(Outcome::ok(text))
        }
        Cdga::Cohomology { src, max_degree } => {
            let p = presentation(src)?;
            let ring = cohomology_ring(&p, max_degree.unwrap_or(p.dim))?;
            if json_mode {
                return Ok(Outcome::ok(pretty(&ring)));
            }
            let mut out = String::new();
            if let Some(b) = ring.get("betti").and_then(Value::as_array) {
                for (k, n) in b.iter().enumerate() {
                    let _ = writeln!(out, "  b{k} = {n}");
                }
            }
            if let Some(reps) = ring.get("representatives").and_then(Value::as_array) {
                for (k, r) in reps.iter().enumerate() {
                    let names: Vec<&str> = r.as_array().map(|a| a.iter().filter_map(Value::as_str).collect()).unwrap_or_default();
                    if !names.is_empty() {
                        let _ = writeln!(out, "  H^{k}: {}", names.join(", "));
                    }
                }
            }
            Ok(Outcome::ok(out))
        }
        Cdga::Model { src, j } => {
            let p = presentation(src)?;
            let mm = j_minimal_model(&p, *j, ModelCaps::for_presentation(&p))?;
            let ok = verify_model(&p, &mm)?;
            if !ok {
                return Err(Failure { code: 3, message: "minimal model failed verification".into() });
            }
            let images: Vec<String> = mm.images.iter().map(|x| x.format(&p.names)).collect();
            if json_mode {
                let v = json!({
                    "j": mm.j,
                    "model": mm.model.to_json(),
                    "images": images,
                    "stabilized": mm.stabilized,
                    "shortcut": mm.shortcut,
                    "added": mm.added,
                });
                return Ok(Outcome::ok(pretty(&v)));
            }
            let mut out = format!("{}-minimal model, {} generators (stabilized: {})\n", mm.j, mm.model.generator_count(), render::yes_no(mm.stabilized));
            for (i, (name, deg)) in mm.model.names.iter().zip(&mm.model.degrees).enumerate() {
                let _ = writeln!(out, "  {name} (deg {deg}): d = {}  ↦ {}", mm.model.d[i].format(&mm.model.names), images[i]);
            }
            Ok(Outcome::ok(out))
        }
        Cdga::Obstruct { src, j, sum } => {
            let p = presentation(src)?;
            let mut report = obstruction(&p, *j)?;
            for other in sum {
                let q = input::load_presentation_ref(other)?;
                report = report.connected_sum(&obstruction(&q, *j)?)?;
            }
            if json_mode {
                return Ok(Outcome::ok(pretty(&report.to_json())));
            }
            let rows: Vec<Vec<String>> = report.rows.iter().map(|r| vec![r.k.to_string(), r.r.to_string(), r.d.to_string(), r.slack.to_string()]).collect();
            let mut out = format!("j = {}, dimension {}\n", report.j, report.dim);
            out.push_str(&render::columns(&["k", "r", "d", "slack"], &rows));
            let _ = writeln!(out, "verdict: {}", report.summary());
            Ok(Outcome::ok(out))
        }
        Cdga::Compat { src, j, candidate } => {
            let p = presentation(src)?;
            let a = input::load_bicomplex(Some(candidate))?;
            let r = compatibility(&p, *j, &a)?;
            let ok = r.compatible();
            if json_mode {
                return Ok(Outcome::verdict(pretty(&r.to_json()), ok));
            }
            let mut out = format!("obstruction: {}\n", r.obstruction.summary());
            let _ = writeln!(out, "betti numbers match: {}", render::yes_no(r.betti_match));
            if ok {
                out.push_str("compatible\n");
            } else {
                let ks: Vec<String> = r.excluded.iter().map(|k| k.to_string()).collect();
                let _ = writeln!(out, "excluded: slack exceeds ℓ in degrees {}", ks.join(", "));
            }
            Ok(Outcome::verdict(out, ok))
        }
    }
}

fn dispatch(cli: &Cli) -> Res {
    let j = cli.json;
    match &cli.command {
        Command::Validate { files } => cmd_validate(files, cli.jobs, j),
        Command::Decompose { file } => cmd_decompose(file.as_deref(), j),
        Command::Cohomology { functor, file } => cmd_cohomology(functor.as_deref(), file.as_deref(), j),
        Command::Filtration { file } => cmd_filtration(file.as_deref(), j),
        Command::Pages { seq, r, file } => cmd_pages(seq, *r, file.as_deref(), j),
        Command::Pdef { file } => cmd_pdef(file.as_deref(), j),
        Command::Les { file } => cmd_les(file.as_deref(), j),
        Command::Check(c) => cmd_check(c, cli.jobs, j),
        Command::Numerics { file } => cmd_numerics(file.as_deref(), j),
        Command::Purity { file } => cmd_purity(file.as_deref(), j),
        Command::Build(b) => cmd_build(b),
        Command::Combine(c) => cmd_combine(c),
        Command::Dual { n, file } => complex_out(&dual(&input::load_bicomplex(file.as_deref())?, *n)),
        Command::Scramble { seed, file } => {
            let seed = match seed {
                Some(s) => *s,
                None => seed_from_env()?,
            };
            complex_out(&scramble(&input::load_bicomplex(file.as_deref())?, seed))
        }
        Command::Cdga(c) => cmd_cdga(c, j),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
