//! Command-line front end: datum files in, check reports and structure constants out.

pub mod datum;
pub mod export;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian::DEFAULT_ENUMERATION_CAP;
use crate::algebra::{basis_vector, build_algebra, check_hopf_axioms, BuildOptions, CheckLevel, CheckResult, HopfAlgebra, PointedHopfAlgebra};
use crate::algebra::StructureTables;
use crate::appendix::appendix_suite;
use crate::cartan::{validate_datum, CartanDatum, RawDatum};
use crate::double::{drinfeld_element_checks, drinfeld_u, quasitriangular_checks, r_matrix, verify_double_relations, DrinfeldDouble, FULL_CHECK_LIMIT};
use crate::hopf::integrals::{integrals, IntegralReport};
use crate::hopf::{dual_build, grouplikes_of_dual, match_dual_datum, verify_dual_relations, DualAlgebra};
use crate::ribbon::{kr_criterion, ribbon_element_search, Verdict};
use crate::Error;

use datum::parse_datum;
use export::{basis_labels, from_json, to_json};

#[derive(Debug, Parser)]
#[command(name = "pointed-hopf", version, about = "Exact pointed Hopf algebras of finite Cartan type, their doubles and ribbon structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Datum file (TOML).
    #[arg(long, global = true)]
    pub datum: Option<PathBuf>,
    /// Directory for report.json (and structure.json for `export`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Tabulate multiplication eagerly up to this dimension.
    #[arg(long, global = true, default_value_t = 1024)]
    pub max_dim: usize,
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub enumeration_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = CheckLevel::Generators)]
    pub check_level: CheckLevel,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Validate the datum and print its root data.
    Validate,
    /// Build A = u(D,0,0) and check the Hopf axioms.
    Build,
    /// Build A* and check it against u of the dual datum.
    Dual,
    /// Build D(A) and check its relations, R and u.
    Double,
    /// Solve the integrals and distinguished grouplikes of A and A*.
    Integrals,
    /// Decide whether D(A) is ribbon and search for a ribbon element.
    Ribbon,
    /// Write the structure constants of A (or A*) as JSON.
    Export {
        /// Export A* instead of A.
        #[arg(long)]
        dual: bool,
    },
    /// The q-identity and braided-adjoint suite (Taft-3 and A2 when no datum is given).
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Build => "build",
            Command::Dual => "dual",
            Command::Double => "double",
            Command::Integrals => "integrals",
            Command::Ribbon => "ribbon",
            Command::Export { .. } => "export",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DatumSummary {
    pub group: Vec<u32>,
    pub g: Vec<Vec<u32>>,
    pub chi: Vec<Vec<u32>>,
    pub cartan: Vec<Vec<i32>>,
    /// `N_i`, the order of `χ_i(g_i)`.
    pub n: Vec<u32>,
    pub positive_roots: usize,
    pub dim: u64,
}

impl DatumSummary {
    pub fn of(d: &CartanDatum) -> Self {
        let roots = d.roots();
        DatumSummary {
            group: d.group.invariants().to_vec(),
            g: d.g.iter().map(|x| x.0.clone()).collect(),
            chi: d.chi.iter().map(|x| x.0.clone()).collect(),
            cartan: d.cartan.rows().to_vec(),
            n: (0..d.rank()).map(|i| d.order_n(i)).collect(),
            positive_roots: roots.len(),
            dim: roots.pbw_dimension() as u64 * d.group.order(),
        }
    }
}

/// Everything a command produced. Serialized deterministically.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub datum: Option<DatumSummary>,
    pub passed: bool,
    pub failures: Vec<String>,
    pub summary: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub data: serde_json::Value,
}

impl Report {
    fn new(command: &str, datum: Option<&CartanDatum>) -> Self {
        Report {
            command: command.to_string(),
            datum: datum.map(DatumSummary::of),
            passed: true,
            failures: Vec::new(),
            summary: Vec::new(),
            checks: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(CheckResult::new(name, passed, 1, detail));
    }

    fn finish(mut self) -> Self {
        self.failures = self.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
        self.passed = self.failures.is_empty();
        self
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "== {} ==", self.command);
        if let Some(d) = &self.datum {
            let _ = writeln!(s, "group Z{:?}, rank {}, N = {:?}, dim = {}", d.group, d.cartan.len(), d.n, d.dim);
        }
        for l in &self.summary {
            let _ = writeln!(s, "{l}");
        }
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {} ({} cases)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.cases);
            if let (false, Some(d)) = (c.passed, &c.detail) {
                let _ = writeln!(s, "       {d}");
            }
        }
        let total = self.checks.len();
        let ok = total - self.failures.len();
        let _ = write!(s, "result: {} ({ok}/{total} checks)", if self.passed { "PASS" } else { "FAIL" });
        s
    }
}

fn options(cli: &Cli) -> BuildOptions {
    BuildOptions { max_dim: cli.max_dim, enumeration_cap: cli.enumeration_cap }
}

fn load(cli: &Cli) -> Result<CartanDatum, Error> {
    let path = cli.datum.as_ref().ok_or_else(|| Error::Parse("--datum is required for this command".into()))?;
    parse_datum(path)
}

fn integral_checks(rep: &mut Report, side: &str, ir: &IntegralReport) {
    rep.check(format!("{side}: a t = ε(a) t has a one-dimensional solution space"), ir.left_space_dim == 1, Some(format!("dim {}", ir.left_space_dim)));
    rep.check(format!("{side}: t a = ε(a) t has a one-dimensional solution space"), ir.right_space_dim == 1, Some(format!("dim {}", ir.right_space_dim)));
    rep.check(format!("{side}: Λ y_top spans the left integrals"), ir.left_formula_matches, None);
    rep.check(format!("{side}: y_top Λ spans the right integrals"), ir.right_formula_matches, None);
    rep.check(format!("{side}: S(t_l) is a multiple of t_r"), ir.antipode_swaps_sides, None);
    rep.check(format!("{side}: distinguished grouplike = ∏ g_β^(N_β-1)"), ir.g_dist_matches(), Some(format!("solved {}, formula {}", ir.g_dist, ir.g_dist_formula)));
    rep.line(format!("{side}: γ = {} (solved from t_l a = γ(a) t_l)", ir.gamma));
    rep.line(format!(
        "{side}: γ vs ∏ χ_β^-(N_β-1) = {}: {}; vs ∏ χ_β^(N_β-1) = {}: {}",
        ir.gamma_inverse_product,
        if ir.gamma_matches_inverse_product() { "equal" } else { "differs" },
        ir.gamma_product,
        if ir.gamma_matches_product() { "equal" } else { "differs" },
    ));
    rep.line(format!("{side}: g = {}, unimodular: {}", ir.g_dist, ir.unimodular));
}

/// Round trip through JSON, compared on random products.
fn export_round_trip(t: &StructureTables, json: &export::TablesJson, samples: usize) -> CheckResult {
    let back = match serde_json::to_string(json).map_err(Error::from).and_then(|s| {
        let j: export::TablesJson = serde_json::from_str(&s)?;
        from_json(&j)
    }) {
        Ok(b) => b,
        Err(e) => return CheckResult::new("export then import reproduces products", false, 0, Some(e.to_string())),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let n = t.dim;
    let mut ok = true;
    for _ in 0..samples {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        ok &= t.mul(&basis_vector(i), &basis_vector(j)) == back.mul(&basis_vector(i), &basis_vector(j));
    }
    ok &= (0..n).all(|k| t.comul_basis(k) == back.comul_basis(k) && t.antipode_basis(k) == back.antipode_basis(k));
    CheckResult::new("export then import reproduces products", ok, samples, None)
}

fn build(cli: &Cli, d: &CartanDatum) -> Result<PointedHopfAlgebra, Error> {
    build_algebra(d, options(cli))
}

fn dual_of(a: &PointedHopfAlgebra) -> DualAlgebra {
    dual_build(a)
}

/// Runs one command. `Ok` carries the report even when checks fail.
pub fn run(cli: &Cli) -> Result<(Report, Option<export::TablesJson>), Error> {
    let level = cli.check_level;
    let full = level == CheckLevel::FullBasis;
    let name = cli.command.name();
    let mut structure = None;
    let rep = match &cli.command {
        Command::Selftest if cli.datum.is_none() => {
            let mut rep = Report::new(name, None);
            let builtin = [
                ("Taft N=3", RawDatum { group: vec![3], g: vec![vec![1]], chi: vec![vec![1]], cartan: vec![vec![2]], lambda: None, mu: None }),
                (
                    "A2 over Z3 x Z3",
                    RawDatum {
                        group: vec![3, 3],
                        g: vec![vec![1, 0], vec![0, 1]],
                        chi: vec![vec![1, 2], vec![0, 1]],
                        cartan: vec![vec![2, -1], vec![-1, 2]],
                        lambda: None,
                        mu: None,
                    },
                ),
            ];
            for (label, raw) in builtin {
                let d = validate_datum(&raw)?;
                let a = build(cli, &d)?;
                let dual = dual_of(&a);
                rep.line(format!("datum: {label}"));
                rep.checks.extend(appendix_suite(&a, Some(&dual)).into_iter().map(|mut c| {
                    c.name = format!("{label}: {}", c.name);
                    c
                }));
            }
            rep
        }
        cmd => {
            let d = load(cli)?;
            let mut rep = Report::new(name, Some(&d));
            match cmd {
                Command::Validate => {
                    let roots = d.roots();
                    for l in d.to_string().lines() {
                        rep.line(l);
                    }
                    rep.line(format!("positive roots: {}, PBW dimension: {}", roots.len(), roots.pbw_dimension()));
                    rep.check("the positive roots are in convex order", roots.is_convex(), None);
                    rep.data = serde_json::to_value(&roots)?;
                }
                Command::Build => {
                    let a = build(cli, &d)?;
                    let expect = a.datum.roots().n.iter().map(|&n| n as usize).product::<usize>() * a.group_elements.len();
                    rep.line(format!("dim = {}", a.dim()));
                    rep.check("dim A = |G| ∏ N_β", a.dim() == expect, Some(format!("{} vs {expect}", a.dim())));
                    rep.checks.extend(check_hopf_axioms(&a, &a.generators(), level, 200, 1));
                }
                Command::Dual => {
                    let a = build(cli, &d)?;
                    let dual = dual_of(&a);
                    rep.line(format!("dim A* = {}", dual.dim()));
                    rep.line(format!("dual datum: chi = {:?}", dual.dual_datum.chi.iter().map(|c| c.0.clone()).collect::<Vec<_>>()));
                    rep.checks.extend(match_dual_datum(&dual, level)?);
                    rep.checks.extend(verify_dual_relations(&a, &dual, full));
                    let n = grouplikes_of_dual(&dual).len();
                    rep.check("|G(A*)| = |G|", n == a.group_elements.len(), Some(format!("{n}")));
                }
                Command::Double => {
                    let a = build(cli, &d)?;
                    let dual = dual_of(&a);
                    let dd = DrinfeldDouble::new(a, dual);
                    let all = dd.dim() <= FULL_CHECK_LIMIT;
                    rep.line(format!("dim D(A) = {}", dd.dim()));
                    if !all {
                        rep.line(format!("dim above {FULL_CHECK_LIMIT}: R and u checked on generators only"));
                    }
                    rep.checks.extend(verify_double_relations(&dd, 200, 7));
                    let r = r_matrix(&dd);
                    rep.checks.extend(quasitriangular_checks(&dd, &r, all));
                    let u = drinfeld_u(&dd, &r);
                    rep.checks.extend(drinfeld_element_checks(&dd, &u, all));
                }
                Command::Integrals => {
                    let a = build(cli, &d)?;
                    let dual = dual_of(&a);
                    let ia = integrals(&a, &dual)?;
                    let id = integrals(&dual, &a)?;
                    integral_checks(&mut rep, "A", &ia);
                    integral_checks(&mut rep, "A*", &id);
                    rep.data = serde_json::json!({ "A": ia, "A*": id });
                }
                Command::Ribbon => {
                    let a = build(cli, &d)?;
                    let dual = dual_of(&a);
                    let ia = integrals(&a, &dual)?;
                    let mut rr = kr_criterion(&a, &dual, &ia)?;
                    rep.check("h (δ ⇀ · ↼ δ^-1) h^-1 is an algebra map", rr.twist_is_algebra_map, None);
                    let roots_exist = !rr.square_roots_h.is_empty() && !rr.square_roots_delta.is_empty();
                    rep.check("RIBBON implies square roots of g and γ exist", rr.verdict != Verdict::Ribbon || roots_exist, None);
                    if let Some(among) = rr.theorem_witness_among_passing {
                        rep.check("the explicit (h, δ) satisfies S² = h (δ ⇀ · ↼ δ^-1) h^-1", among, None);
                    }
                    rep.line(format!("verdict: {}", rr.verdict));
                    rep.line(format!("g = {:?}, γ = {:?}", rr.g_dist.0, rr.gamma.0));
                    rep.line(format!("square roots: {} of g, {} of γ; passing pairs: {}", rr.square_roots_h.len(), rr.square_roots_delta.len(), rr.passing_pairs.len()));
                    if let Some((h, delta)) = &rr.criterion_witness {
                        rep.line(format!("witness: h = {:?}, δ = {:?}", h.0, delta.0));
                    }
                    match &rr.theorem_witness {
                        Ok(w) => rep.line(format!("explicit pair: h = {:?}, δ = {:?}, passes: {}", w.h.0, w.delta.0, w.passes)),
                        Err(why) => rep.line(format!("explicit pair undefined: {why}")),
                    }
                    let dd = DrinfeldDouble::new(a, dual);
                    if rr.verdict == Verdict::Ribbon && dd.dim() <= FULL_CHECK_LIMIT {
                        let r = r_matrix(&dd);
                        let u = drinfeld_u(&dd, &r);
                        ribbon_element_search(&dd, &r, &u, &mut rr);
                        match &rr.ribbon_element {
                            Some(v) => {
                                rep.line(format!(
                                    "ribbon element: v = u (χ g)^-1 with χ = {:?}, g = {:?} ({} candidates)",
                                    v.grouplike_character.0, v.grouplike_element.0, rr.search_candidates
                                ));
                                for t in &v.transcript {
                                    if t.name.contains("literal") {
                                        rep.line(format!("{}: {}", t.name, if t.passed { "holds" } else { "fails" }));
                                    } else {
                                        rep.checks.push(t.clone());
                                    }
                                }
                            }
                            None => rep.line(format!("no ribbon element among {} candidates v = u ℓ^-1", rr.search_candidates)),
                        }
                    } else if rr.verdict == Verdict::Ribbon {
                        rep.line(format!("ribbon element search skipped: dim D(A) = {} above {FULL_CHECK_LIMIT}", dd.dim()));
                    }
                    rep.data = serde_json::to_value(&rr)?;
                }
                Command::Export { dual } => {
                    let a = build(cli, &d)?;
                    let (t, labels) = if *dual {
                        let dd = dual_of(&a);
                        (dd.tables.clone(), basis_labels(&a).into_iter().map(|l| format!("({l})^*")).collect())
                    } else {
                        (StructureTables::from_algebra(&a), basis_labels(&a))
                    };
                    let json = to_json(&t, labels);
                    rep.line(format!("dim = {}, {} nonzero products", t.dim, json.mult.len()));
                    rep.checks.push(export_round_trip(&t, &json, 500));
                    structure = Some(json);
                }
                Command::Selftest => {
                    let a = build(cli, &d)?;
                    let dual = dual_of(&a);
                    rep.checks.extend(appendix_suite(&a, Some(&dual)));
                }
            }
            rep
        }
    };
    Ok((rep.finish(), structure))
}

/// Parses arguments, runs, writes outputs; returns the process exit code
/// (0 all checks pass, 1 some check failed, 2 input or build error).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok((rep, structure)) => {
            if let Err(e) = write_outputs(&cli, &rep, structure.as_ref()) {
                eprintln!("error: {e}");
                return 2;
            }
            if rep.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "command": cli.command.name(), "passed": false, "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            2
        }
    }
}

fn write_outputs(cli: &Cli, rep: &Report, structure: Option<&export::TablesJson>) -> Result<(), Error> {
    let report_json = serde_json::to_string_pretty(rep)?;
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.json"), &report_json)?;
        if let Some(s) = structure {
            std::fs::write(dir.join("structure.json"), serde_json::to_string(s)?)?;
        }
    } else if let Some(s) = structure {
        // Without --out the structure constants are the output.
        println!("{}", serde_json::to_string(s)?);
        eprintln!("{}", rep.to_text());
        return Ok(());
    }
    if cli.json {
        println!("{report_json}");
    } else {
        println!("{}", rep.to_text());
    }
    Ok(())
}
