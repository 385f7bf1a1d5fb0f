//! Command-line front end. [`run`] parses argv, dispatches, and returns the
//! exit code with the text for stdout and stderr, so the binary stays a shim
//! and tests can drive it directly.
//!
//! Exit codes: 0 all assertions pass, 1 some assertion failed, 2 usage or
//! input error, 3 search budget exhausted, 4 search found uniqueness fails.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::constructions::{self, Construction};
use crate::families;
use crate::gaps::{self, SignatureRecipe};
use crate::json::format_rational;
use crate::pell;
use crate::poly::{Polynomial, Signature};
use crate::report::{anchors, Report};
use crate::search::{self, Budget, UniquenessStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_FAILS: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "sharpmap", version, about = "Exact sharp polynomials and monomial sphere maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Members of the sharp families.
    Family {
        #[command(subcommand)]
        which: FamilyCmd,
    },
    /// Inequivalent sharp polynomials built from f_d.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
    },
    /// Solutions of d^2 - lambda k^2 = 1.
    Pell {
        #[arg(long, default_value_t = 12)]
        lambda: u64,
        #[arg(long, default_value_t = 5)]
        count: u32,
    },
    /// Exhaustive search for sharp polynomials of a given degree.
    Search(SearchArgs),
    /// Target dimensions reached by the W/V operators.
    Gaps {
        #[command(subcommand)]
        which: GapsCmd,
    },
    /// Elements of J with a prescribed signature.
    Signature(SignatureArgs),
    /// Re-check a serialized polynomial.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        expect_degree: Option<i64>,
        #[arg(long)]
        expect_terms: Option<usize>,
        /// Only require membership in J, not H.
        #[arg(long)]
        allow_negative: bool,
    },
    /// Numeric sphere check of the monomial map of a serialized polynomial.
    Map {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
}

#[derive(Args, Debug)]
struct PolyOut {
    /// Also write the polynomial JSON to this file.
    #[arg(long)]
    poly_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// f_d.
    F {
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        out: PolyOut,
    },
    /// The k members of degree 2k.
    Even {
        #[arg(long)]
        k: u32,
    },
    /// One even-degree member u(j, l).
    EvenU {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        l: u32,
        /// Replace a pure power of y instead of x.
        #[arg(long)]
        pick_y: bool,
        #[command(flatten)]
        out: PolyOut,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// q_d at a Pell degree.
    Q {
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        out: PolyOut,
    },
    /// h_m, degree 4m - 1.
    H {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: PolyOut,
    },
    /// The two coefficient formulas for h_m.
    HCoefficients {
        #[arg(long)]
        m: u64,
    },
    /// Degree 6k + 1.
    Mod6 {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: PolyOut,
    },
    /// Sites (r, s) with coefficient ratio 4.
    Ratio4Sites {
        #[arg(long, default_value_t = 200)]
        r_max: u64,
    },
    /// The ratio-4 rewrite at a site.
    Ratio4 {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        #[command(flatten)]
        out: PolyOut,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    degree: u32,
    /// Enumerate only this term count instead of deciding uniqueness.
    #[arg(long)]
    terms: Option<usize>,
    /// Defaults to $SHARPMAP_BUDGET_SECONDS, else unlimited.
    #[arg(long)]
    budget_seconds: Option<f64>,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Also search term counts below the degree bound, starting from 2.
    #[arg(long)]
    from_two: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Json,
    Markdown,
}

#[derive(Subcommand, Debug)]
enum GapsCmd {
    /// V^k W^j s with exactly N terms.
    Witness {
        #[arg(long)]
        n: u64,
        #[arg(long = "N")]
        big_n: u64,
    },
    /// Which N in 1..=to are reached.
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

#[derive(Args, Debug)]
struct SignatureArgs {
    /// Catalog tag; see `gaps::RECIPE_TAGS`.
    #[arg(long, required_unless_present = "find")]
    recipe: Option<String>,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Base polynomial for append_negative.
    #[arg(long)]
    base: Option<PathBuf>,
    /// Search two variables for signature "A,B" instead of using a recipe.
    #[arg(long, conflicts_with = "recipe")]
    find: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        }
    }

    fn from_report(r: &Report) -> Self {
        Outcome {
            code: if r.all_pass() { EXIT_OK } else { EXIT_ASSERTION },
            stdout: r.to_json_string(),
            stderr: String::new(),
        }
    }
}

type CmdResult = Result<Outcome, String>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let result = match cli.command {
        Command::Family { which } => family(which),
        Command::Construct { which } => construct(which),
        Command::Pell { lambda, count } => pell_cmd(lambda, count),
        Command::Search(args) => search_cmd(args),
        Command::Gaps { which } => gaps_cmd(which),
        Command::Signature(args) => signature_cmd(args),
        Command::Verify {
            file,
            expect_degree,
            expect_terms,
            allow_negative,
        } => verify(file, expect_degree, expect_terms, allow_negative),
        Command::Map {
            file,
            samples,
            seed,
            tolerance,
        } => map_cmd(file, samples, seed, tolerance),
    };
    result.unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")))
}

fn write_poly(out: &PolyOut, p: &Polynomial) -> Result<(), String> {
    if let Some(path) = &out.poly_out {
        std::fs::write(path, p.to_json_string() + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn read_poly(path: &PathBuf) -> Result<Polynomial, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Polynomial::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn poly_summary(p: &Polynomial) -> Value {
    json!({
        "poly": p.to_json_value(),
        "text": p.to_string(),
        "degree": p.degree(),
        "terms": p.term_count(),
        "signature": p.signature(),
    })
}

/// Membership, degree and term-count checks shared by several commands.
fn check_sharp(r: &mut Report, p: &Polynomial, d: u32, terms: usize, anchor: &str) {
    r.check("in H(2, d)", anchor, p.is_in_h());
    r.check(format!("degree {d}"), anchor, p.degree() == i64::from(d));
    r.check(format!("{terms} terms"), anchor, p.term_count() == terms);
}

fn family(cmd: FamilyCmd) -> CmdResult {
    match cmd {
        FamilyCmd::F { degree, out } => {
            let p = families::f(degree).map_err(|e| e.to_string())?;
            let mut r = Report::new("family f", json!({"degree": degree}));
            r.outputs = poly_summary(&p);
            if degree % 2 == 1 {
                check_sharp(&mut r, &p, degree, (degree as usize + 3) / 2, anchors::ODD_FAMILY);
            } else {
                r.check("identically 1 on x + y = 1", anchors::ODD_FAMILY, p.is_in_j());
            }
            write_poly(&out, &p)?;
            Ok(Outcome::from_report(&r))
        }
        FamilyCmd::Even { k } => {
            let members = families::even_family(k).map_err(|e| e.to_string())?;
            let mut r = Report::new("family even", json!({"k": k}));
            r.outputs = json!({
                "degree": 2 * k,
                "members": members
                    .iter()
                    .map(|m| {
                        let mut v = poly_summary(&m.poly);
                        v["provenance"] = serde_json::to_value(m.provenance).expect("provenance");
                        v
                    })
                    .collect::<Vec<_>>(),
            });
            for m in &members {
                check_sharp(&mut r, &m.poly, 2 * k, k as usize + 2, anchors::EVEN_FAMILY);
            }
            let distinct = members.iter().enumerate().all(|(i, a)| {
                members[..i]
                    .iter()
                    .all(|b| !a.poly.equivalent(&b.poly).expect("two variables"))
            });
            r.check(format!("{k} pairwise inequivalent members"), anchors::EVEN_FAMILY, distinct && members.len() == k as usize);
            Ok(Outcome::from_report(&r))
        }
        FamilyCmd::EvenU { j, l, pick_y, out } => {
            let p = families::even_u(j, l, !pick_y);
            let mut r = Report::new("family even-u", json!({"j": j, "l": l, "pick_y": pick_y}));
            r.outputs = poly_summary(&p);
            let d = 2 * (j + l + 1);
            check_sharp(&mut r, &p, d, (j + l + 3) as usize, anchors::EVEN_FAMILY);
            write_poly(&out, &p)?;
            Ok(Outcome::from_report(&r))
        }
    }
}

fn construction_report(name: &str, inputs: Value, c: &Construction, anchor: &str, out: &PolyOut) -> CmdResult {
    let mut r = Report::new(name, inputs);
    let mut outputs = poly_summary(&c.poly);
    outputs["trace"] = c.trace_json();
    r.outputs = outputs;
    check_sharp(&mut r, &c.poly, c.degree, (c.degree as usize + 3) / 2, anchor);
    let f = families::f(c.degree).map_err(|e| e.to_string())?;
    r.check(
        format!("inequivalent to f_{}", c.degree),
        anchor,
        !c.poly.equivalent(&f).expect("two variables"),
    );
    r.check(
        "each replacement agrees on x + y = 1",
        anchor,
        c.steps.iter().all(|s| s.is_valid()),
    );
    write_poly(out, &c.poly)?;
    Ok(Outcome::from_report(&r))
}

fn construct(cmd: ConstructCmd) -> CmdResult {
    let err = |e: crate::error::ConstructionError| e.to_string();
    match cmd {
        ConstructCmd::Q { degree, out } => {
            let c = constructions::q(degree).map_err(err)?;
            construction_report("construct q", json!({"degree": degree}), &c, anchors::Q_FAMILY, &out)
        }
        ConstructCmd::H { m, out } => {
            let c = constructions::h(m).map_err(err)?;
            construction_report("construct h", json!({"m": m}), &c, anchors::H_FAMILY, &out)
        }
        ConstructCmd::Mod6 { k, out } => {
            let c = constructions::mod6(k).map_err(err)?;
            construction_report("construct mod6", json!({"k": k}), &c, anchors::MOD6, &out)
        }
        ConstructCmd::Ratio4 { r, s, out } => {
            let c = constructions::ratio4_construct(r, s).map_err(err)?;
            construction_report("construct ratio4", json!({"r": r, "s": s}), &c, anchors::RATIO4, &out)
        }
        ConstructCmd::Ratio4Sites { r_max } => {
            let sites = constructions::ratio4_sites(r_max);
            let missing = constructions::ratio4_sites_missing_from_pell(r_max);
            let mut r = Report::new("construct ratio4-sites", json!({"r_max": r_max}));
            let rows: Result<Vec<Value>, String> = sites
                .iter()
                .map(|&(rr, s)| {
                    let k = |t| families::k_coefficient(rr, t).map(|v| v.to_string()).map_err(|e| e.to_string());
                    Ok(json!({"r": rr, "s": s, "degree": 2 * rr + 1, "k": [k(s)?, k(s + 1)?, k(s + 2)?]}))
                })
                .collect();
            r.outputs = json!({ "sites": rows? });
            r.check("every site degree solves a^2 - 8b^2 = -7", anchors::RATIO4, missing.is_empty());
            Ok(Outcome::from_report(&r))
        }
        ConstructCmd::HCoefficients { m } => {
            if m < 2 {
                return Err(format!("m must be >= 2, got {m}"));
            }
            let mut r = Report::new("construct h-coefficients", json!({"m": m}));
            let mut rows = Vec::new();
            let mut agree = true;
            for s in 1..=2 * m - 1 {
                let closed = constructions::c_closed(m, s).map_err(err)?;
                let sum = constructions::c_sum(m, s).map_err(err)?;
                agree &= closed == sum;
                rows.push((s, closed, sum));
            }
            r.check("closed form equals binomial sum for every s", anchors::H_COEFFICIENTS, agree);
            let c = |s: u64| &rows[s as usize - 1].1;
            r.check("C_1 = C_2 = 0", anchors::H_COEFFICIENTS, c(1).is_zero() && c(2).is_zero());
            r.check(
                "C_s > 0 for 3 <= s <= m - 1",
                anchors::H_COEFFICIENTS,
                (3..m).all(|s| c(s).is_positive()),
            );
            r.outputs = json!({
                "coefficients": rows
                    .iter()
                    .map(|(s, a, b)| json!({"s": s, "closed": a.to_string(), "sum": b.to_string()}))
                    .collect::<Vec<_>>(),
            });
            Ok(Outcome::from_report(&r))
        }
    }
}

fn pell_cmd(lambda: u64, count: u32) -> CmdResult {
    let sols = pell::solutions(lambda, count).map_err(|e| e.to_string())?;
    let mut r = Report::new("pell", json!({"lambda": lambda, "count": count}));
    r.outputs = Value::Array(sols.iter().map(pell::PellSolution::to_json_value).collect());
    r.check(
        format!("d^2 - {lambda} k^2 = 1 for every solution"),
        anchors::PELL,
        sols.iter().all(pell::PellSolution::satisfies_equation),
    );
    if lambda == 12 {
        let four = BigInt::from(4);
        let residues_ok = sols.iter().all(|s| {
            let want = if s.index % 2 == 1 { 3 } else { 1 };
            (&s.d % &four) == BigInt::from(want)
        });
        r.check("d = 3 mod 4 for odd m, 1 mod 4 for even m", anchors::PELL_RESIDUE, residues_ok);
        let sites_ok = sols.iter().all(|s| {
            u64::try_from(&s.d).map_or(true, |d| constructions::pell_ratio_site(d).ok().flatten().is_some())
        });
        r.check("each degree has a ratio-2 coefficient pair", anchors::PELL, sites_ok);
    }
    Ok(Outcome::from_report(&r))
}

fn search_cmd(args: SearchArgs) -> CmdResult {
    let budget = args
        .budget_seconds
        .map_or_else(Budget::from_env, Budget::seconds)
        .with_shards(args.shards);
    let inputs = json!({
        "degree": args.degree,
        "terms": args.terms,
        "budget_seconds": budget.time.map(|t| t.as_secs_f64()),
        "shards": budget.shards,
        "from_two": args.from_two,
    });
    let mut r = Report::new("search", inputs);
    if let Some(n) = args.terms {
        let e = search::enumerate_sharp(args.degree, n, &budget).map_err(|e| e.to_string())?;
        r.outputs = json!({
            "degree": e.degree,
            "terms": e.terms,
            "exhaustive": e.exhaustive,
            "polytope": e.has_polytope(),
            "hits": e.hits.iter().map(|h| {
                let p = h.polynomial();
                json!({
                    "status": h.result.status,
                    "freedom": h.result.freedom,
                    "poly": p.to_json_value(),
                    "text": p.to_string(),
                })
            }).collect::<Vec<_>>(),
            "search_stats": e.stats,
        });
        let sound = e.hits.iter().all(|h| {
            let p = h.polynomial();
            p.is_in_h() && p.degree() == i64::from(args.degree) && p.term_count() == n
        });
        r.check("every hit is in H(2, d) with the requested term count", anchors::MEMBERSHIP, sound);
        let mut out = Outcome::from_report(&r);
        if out.code == EXIT_OK && !e.exhaustive {
            out.code = EXIT_UNKNOWN;
        }
        return Ok(out);
    }
    let report = if args.from_two {
        // Confirm the degree bound by searching below it first.
        match search::minimal_terms(args.degree, Some(2), &budget) {
            Err(crate::error::SearchError::BudgetExceeded) => None,
            Err(e) => return Err(e.to_string()),
            Ok(mt) => {
                r.check(
                    format!("no sharp polynomial with fewer than {} terms", mt.n_min),
                    anchors::DEGREE_BOUND,
                    mt.n_min >= search::term_lower_bound(args.degree),
                );
                Some(search::uniqueness_status(args.degree, &budget).map_err(|e| e.to_string())?)
            }
        }
    } else {
        Some(search::uniqueness_status(args.degree, &budget).map_err(|e| e.to_string())?)
    };
    let Some(report) = report else {
        r.outputs = json!({"status": UniquenessStatus::Unknown});
        let mut out = Outcome::from_report(&r);
        out.code = EXIT_UNKNOWN;
        return Ok(out);
    };
    r.outputs = report.to_json_value();
    if let Some(cert) = &report.certificate {
        let sound = cert.representatives.iter().all(|p| {
            p.is_in_h() && p.degree() == i64::from(args.degree) && p.term_count() == cert.min_terms
        });
        r.check("every representative is in H(2, d) with the minimal term count", anchors::UNIQUENESS, sound);
        let pairwise = cert.representatives.iter().enumerate().all(|(i, a)| {
            cert.representatives[..i]
                .iter()
                .all(|b| !a.equivalent(b).expect("two variables"))
        });
        r.check("representatives are pairwise inequivalent", anchors::UNIQUENESS, pairwise);
    }
    let mut out = Outcome::from_report(&r);
    if out.code == EXIT_OK {
        out.code = match report.status {
            UniquenessStatus::Unique | UniquenessStatus::UniqueUpToEquivalence => EXIT_OK,
            UniquenessStatus::Fails => EXIT_FAILS,
            UniquenessStatus::Unknown => EXIT_UNKNOWN,
        };
    }
    Ok(out)
}

fn gaps_cmd(cmd: GapsCmd) -> CmdResult {
    match cmd {
        GapsCmd::Witness { n, big_n } => {
            let g = gaps::gap_witness(n, big_n).map_err(|e| e.to_string())?;
            let mut r = Report::new("gaps witness", json!({"n": n, "N": big_n}));
            r.outputs = g.to_json_value();
            r.check("in H(n)", anchors::NO_GAPS, g.poly.is_in_h());
            r.check(format!("exactly {big_n} terms"), anchors::NO_GAPS, g.poly.term_count() as u64 == big_n);
            let map = g.poly.to_monomial_map().map_err(|e| e.to_string())?;
            r.check(
                "no linear combination of the components is constant",
                anchors::INDEPENDENCE,
                map.components_independent_of_constants(),
            );
            if n >= 2 {
                let f = gaps::frobenius(n, n - 1).map_err(|e| e.to_string())?;
                r.check("T(n) = 1 + F(n, n - 1) + n", anchors::FROBENIUS, 1 + f + n as i64 == gaps::t(n) as i64);
            }
            Ok(Outcome::from_report(&r))
        }
        GapsCmd::Table { n, to, format } => {
            let rows = gaps::gap_table(n, to).map_err(|e| e.to_string())?;
            match format {
                TableFormat::Json => {
                    let mut r = Report::new("gaps table", json!({"n": n, "to": to}));
                    r.outputs = json!({"T": gaps::t(n), "rows": rows});
                    r.check(
                        "every N >= T(n) is reached",
                        anchors::NO_GAPS,
                        rows.iter().all(|row| !row.at_least_t || row.representable),
                    );
                    Ok(Outcome::from_report(&r))
                }
                TableFormat::Markdown => {
                    let mut s = format!("T({n}) = {}\n\n| N | reached | j | k |\n|---|---|---|---|\n", gaps::t(n));
                    for row in &rows {
                        let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
                        s += &format!(
                            "| {} | {} | {} | {} |\n",
                            row.big_n,
                            if row.representable { "yes" } else { "no" },
                            opt(row.j),
                            opt(row.k)
                        );
                    }
                    Ok(Outcome {
                        code: EXIT_OK,
                        stdout: s,
                        stderr: String::new(),
                    })
                }
            }
        }
    }
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B, got '{s}'"))?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("'{v}': {e}"));
    Ok(Signature::new(parse(a)?, parse(b)?))
}

fn signature_cmd(args: SignatureArgs) -> CmdResult {
    if let Some(target) = &args.find {
        let sig = parse_signature(target)?;
        let found = gaps::find_signature_witness(sig, args.max_degree);
        let mut r = Report::new("signature find", json!({"signature": sig, "max_degree": args.max_degree}));
        r.outputs = json!({
            "found": found.is_some(),
            "poly": found.as_ref().map(Polynomial::to_json_value),
            "text": found.as_ref().map(Polynomial::to_string),
        });
        if let Some(p) = &found {
            r.check("witness is in J with the requested signature", anchors::SIGNATURES, p.is_in_j() && p.signature() == sig);
        }
        return Ok(Outcome::from_report(&r));
    }
    let tag = args.recipe.expect("clap enforces recipe or find");
    let base = args.base.as_ref().map(read_poly).transpose()?;
    let recipe = SignatureRecipe::from_tag(&tag, args.n, args.r, base).map_err(|e| e.to_string())?;
    let w = gaps::signature_witness(&recipe).map_err(|e| e.to_string())?;
    let mut r = Report::new("signature", json!({"recipe": tag, "n": args.n, "r": args.r}));
    r.outputs = w.to_json_value();
    r.check("in J", anchors::SIGNATURES, w.poly.is_in_j());
    r.check(format!("signature {}", w.requested), anchors::SIGNATURES, w.poly.signature() == w.requested);
    Ok(Outcome::from_report(&r))
}

fn verify(file: PathBuf, expect_degree: Option<i64>, expect_terms: Option<usize>, allow_negative: bool) -> CmdResult {
    let p = read_poly(&file)?;
    let mut r = Report::new(
        "verify",
        json!({
            "file": file.display().to_string(),
            "expect_degree": expect_degree,
            "expect_terms": expect_terms,
            "allow_negative": allow_negative,
        }),
    );
    let mut outputs = poly_summary(&p);
    outputs["in_j"] = json!(p.is_in_j());
    outputs["in_h"] = json!(p.is_in_h());
    r.outputs = outputs;
    if allow_negative {
        r.check("identically 1 on the hyperplane", anchors::MEMBERSHIP, p.is_in_j());
    } else {
        r.check("in H", anchors::MEMBERSHIP, p.is_in_h());
    }
    if let Some(d) = expect_degree {
        r.check(format!("degree {d}"), anchors::MEMBERSHIP, p.degree() == d);
    }
    if let Some(n) = expect_terms {
        r.check(format!("{n} terms"), anchors::MEMBERSHIP, p.term_count() == n);
    }
    Ok(Outcome::from_report(&r))
}

fn map_cmd(file: PathBuf, samples: usize, seed: u64, tolerance: f64) -> CmdResult {
    if samples == 0 {
        return Err("samples must be >= 1".into());
    }
    let p = read_poly(&file)?;
    let map = p.to_monomial_map().map_err(|e| e.to_string())?;
    let residual = map.check_sphere_numeric(samples, seed);
    let mut r = Report::new(
        "map",
        json!({"file": file.display().to_string(), "samples": samples, "seed": seed, "tolerance": tolerance}),
    );
    r.outputs = json!({
        "map": map.to_json_value(),
        "max_residual": residual,
        "squared_moduli_sum": format_rational(&map.components().iter().map(|(_, c)| c.clone()).sum()),
    });
    r.check(
        format!("| |f(z)|^2 - 1 | <= {tolerance:e} on {samples} sphere samples"),
        anchors::SPHERE,
        residual <= tolerance,
    );
    Ok(Outcome::from_report(&r))
}
