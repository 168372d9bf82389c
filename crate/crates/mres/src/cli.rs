//! Command-line front end: problem files in TOML, one subcommand per
//! computation, reproducible seeded output.
//!
//! Exit codes: 0 success, 2 the resultant is mathematically zero, 3 a
//! hypothesis failed (higher homology, degenerate line, non-surjective
//! evaluation), 64 usage or input error.

use crate::arith::{format_rational, parse_rational, Fp, Ring};
use crate::interp::{
    is_surjective, ist_degree_check, res_estimate_demo, EvalSpec, GroupPoint, InterpError,
};
use crate::koszul::PolySequence;
use crate::modslice::{hilbert_function, hilbert_polynomial, rdim, ModuleSpec, MonomialIdeal};
use crate::mpoly::{parse_mpoly, BlockStructure, MPoly, MultiDegree};
use crate::multiplicity::{check_chardin, MultiplicityError};
use crate::resultant::{mresultant, MResult, ResultantError};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ZERO: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(name = "mres", about = "Exact resultants of multihomogeneous systems", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the resultant of the sequence in the problem file
    Res {
        file: String,
        /// Override the working slice degree, e.g. "4" or "3,3"
        #[arg(long)]
        nu_override: Option<String>,
        /// Machine-readable one-line output
        #[arg(long)]
        machine: bool,
    },
    /// Check p-adic divisibility: ord_p(Res) against the mod-p zero degree
    Ordp {
        file: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        machine: bool,
    },
    /// Directional t-adic order of vanishing along random lines
    Ordt {
        file: String,
        #[arg(long, default_value_t = 3)]
        directions: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        machine: bool,
    },
    /// Hilbert function value or Hilbert polynomial of the module
    Hilbert {
        file: String,
        /// Evaluate the Hilbert function at this multidegree, e.g. "2,3"
        #[arg(long)]
        at: Option<String>,
        /// Print the interpolated Hilbert polynomial instead
        #[arg(long)]
        poly: bool,
        #[arg(long)]
        machine: bool,
    },
    /// Interpolation demo: surjectivity, kernel dims, degree check, and the
    /// order-of-vanishing estimate on sampled triples
    Interp {
        file: String,
        /// Run the full resultant-estimate demo (samples random triples)
        #[arg(long)]
        demo: bool,
        #[arg(long, default_value_t = 2)]
        directions: usize,
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        machine: bool,
    },
}

// ---- problem file ----

#[derive(Deserialize)]
struct ProblemFile {
    shape: ShapeSection,
    #[serde(default)]
    module: Option<ModuleSection>,
    #[serde(default)]
    ring: Option<RingSection>,
    #[serde(default)]
    sequence: Vec<SequenceEntry>,
    #[serde(default)]
    interp: Option<InterpSection>,
}

#[derive(Deserialize)]
struct ShapeSection {
    q: usize,
    n: Vec<usize>,
}

#[derive(Deserialize)]
struct ModuleSection {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default)]
    generators: Vec<String>,
}

#[derive(Deserialize)]
struct RingSection {
    kind: String,
    #[serde(default)]
    p: Option<u64>,
}

#[derive(Deserialize)]
struct SequenceEntry {
    poly: String,
    multidegree: Vec<i64>,
}

#[derive(Deserialize)]
struct InterpSection {
    /// [z, w] pairs as strings parsed as exact rationals
    points: Vec<Vec<String>>,
    #[serde(rename = "T")]
    t: u32,
    degrees: Vec<Vec<i64>>,
}

enum RingKind {
    Z,
    Q,
    Fp(u64),
}

struct Problem {
    module: ModuleSpec,
    ring: RingKind,
    raw_sequence: Vec<SequenceEntry>,
    interp: Option<InterpSection>,
}

fn load_problem(path: &str) -> Result<Problem, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {}", path, e))?;
    let file: ProblemFile = toml::from_str(&text).map_err(|e| format!("parse error: {}", e))?;
    if file.shape.q == 0 || file.shape.n.len() != file.shape.q {
        return Err("shape: n must list one entry per block (q entries)".into());
    }
    let shape = BlockStructure::new(file.shape.n.clone());
    let module = match &file.module {
        None => ModuleSpec::free(shape.clone()),
        Some(m) if m.kind == "free" => ModuleSpec::free(shape.clone()),
        Some(m) if m.kind == "monomial_quotient" => {
            let mut gens = Vec::new();
            for g in &m.generators {
                let p = parse_z(&shape, g)?;
                if p.terms().len() != 1 {
                    return Err(format!("generator `{}` is not a single monomial", g));
                }
                gens.push(p.terms()[0].0.clone());
            }
            ModuleSpec::quotient(shape.clone(), MonomialIdeal::new(gens))
        }
        Some(m) => return Err(format!("unknown module type `{}`", m.kind)),
    };
    let ring = match &file.ring {
        None => RingKind::Z,
        Some(r) => match r.kind.as_str() {
            "Z" => RingKind::Z,
            "Q" => RingKind::Q,
            "Fp" => RingKind::Fp(r.p.ok_or("ring: Fp requires p")?),
            other => return Err(format!("unknown ring kind `{}`", other)),
        },
    };
    Ok(Problem { module, ring, raw_sequence: file.sequence, interp: file.interp })
}

fn parse_z(shape: &BlockStructure, s: &str) -> Result<MPoly<BigInt>, String> {
    parse_mpoly(shape, &BigInt::from(0), |c| c.trim().parse::<BigInt>().ok(), s)
}

fn parse_q(shape: &BlockStructure, s: &str) -> Result<MPoly<BigRational>, String> {
    parse_mpoly(
        shape,
        &BigRational::from(BigInt::from(0)),
        |c| parse_rational(c.trim()),
        s,
    )
}

fn check_declared_degrees<R: Ring>(
    entries: &[SequenceEntry],
    polys: &[MPoly<R>],
    q: usize,
) -> Result<(), String> {
    for (e, p) in entries.iter().zip(polys) {
        if e.multidegree.len() != q {
            return Err(format!("multidegree {:?} has wrong length", e.multidegree));
        }
        let actual = p
            .multidegree()
            .map_err(|_| format!("`{}` is zero or not multihomogeneous", e.poly))?;
        if actual.0 != e.multidegree {
            return Err(format!(
                "`{}` has multidegree {:?}, declared {:?}",
                e.poly, actual.0, e.multidegree
            ));
        }
    }
    Ok(())
}

fn sequence_z(problem: &Problem) -> Result<PolySequence<BigInt>, String> {
    let shape = problem.module.shape();
    let polys: Result<Vec<_>, _> = problem
        .raw_sequence
        .iter()
        .map(|e| parse_z(shape, &e.poly))
        .collect();
    let polys = polys?;
    check_declared_degrees(&problem.raw_sequence, &polys, shape.q())?;
    PolySequence::new(polys).map_err(|e| e.to_string())
}

fn parse_multidegree(s: &str, q: usize) -> Result<MultiDegree, String> {
    let parts: Result<Vec<i64>, _> = s.split(',').map(|v| v.trim().parse::<i64>()).collect();
    let parts = parts.map_err(|_| format!("bad multidegree `{}`", s))?;
    if parts.len() != q {
        return Err(format!("multidegree `{}` must have {} components", s, q));
    }
    Ok(MultiDegree(parts))
}

fn fmt_nu(nu: &MultiDegree) -> String {
    nu.0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

// ---- subcommands ----

fn exit_code_for_resultant_error(e: &ResultantError) -> i32 {
    match e {
        ResultantError::HigherHomologyNonzero(_) | ResultantError::StabilizationFailure => {
            EXIT_HYPOTHESIS
        }
        _ => EXIT_USAGE,
    }
}

fn exit_code_for_multiplicity_error(e: &MultiplicityError) -> i32 {
    match e {
        MultiplicityError::HypothesisNotCertified(_)
        | MultiplicityError::Unstable
        | MultiplicityError::DegenerateLine => EXIT_HYPOTHESIS,
        MultiplicityError::Resultant(r) => exit_code_for_resultant_error(r),
        _ => EXIT_USAGE,
    }
}

fn run_res_generic<R: Ring + std::fmt::Display>(
    module: &ModuleSpec,
    seq: &PolySequence<R>,
    machine: bool,
) -> (String, i32) {
    match mresultant(module, seq) {
        Ok(MResult::Nonzero(r)) => {
            let v = r.value.canonical_assoc();
            let out = if machine {
                format!("res={} nu={} stabilized={}\n", v, fmt_nu(&r.nu), r.stabilized)
            } else {
                format!(
                    "resultant = {} (defined up to sign)\nnu = ({})\nstabilized = {}\n",
                    v,
                    fmt_nu(&r.nu),
                    r.stabilized
                )
            };
            (out, EXIT_OK)
        }
        Ok(MResult::Zero) => {
            let out = if machine { "res=ZERO\n".into() } else { "resultant = ZERO\n".into() };
            (out, EXIT_ZERO)
        }
        Err(e) => (format!("error: {}\n", e), exit_code_for_resultant_error(&e)),
    }
}

fn cmd_res(file: &str, nu_override: Option<String>, machine: bool) -> (String, i32) {
    let problem = match load_problem(file) {
        Ok(p) => p,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    if let Some(nu_s) = &nu_override {
        // direct Cayley determinant at the requested degree, no stabilization
        return cmd_res_at(&problem, nu_s, machine);
    }
    match &problem.ring {
        RingKind::Z => match sequence_z(&problem) {
            Ok(seq) => run_res_generic(&problem.module, &seq, machine),
            Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
        },
        RingKind::Q => {
            let shape = problem.module.shape();
            let polys: Result<Vec<_>, _> = problem
                .raw_sequence
                .iter()
                .map(|e| parse_q(shape, &e.poly))
                .collect();
            match polys
                .and_then(|ps| {
                    check_declared_degrees(&problem.raw_sequence, &ps, shape.q()).map(|_| ps)
                })
                .and_then(|ps| PolySequence::new(ps).map_err(|e| e.to_string()))
            {
                Ok(seq) => run_res_generic(&problem.module, &seq, machine),
                Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
            }
        }
        RingKind::Fp(p) => {
            let p = *p;
            match sequence_z(&problem) {
                Ok(seq) => {
                    if !crate::arith::is_prime_u64(p) {
                        return (format!("error: {} is not prime\n", p), EXIT_USAGE);
                    }
                    let seq_p = seq.map_coeffs(|c| Fp::from_bigint(c, p).expect("prime checked"));
                    match seq_p {
                        Ok(s) => run_res_generic(&problem.module, &s, machine),
                        Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
                    }
                }
                Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
            }
        }
    }
}

fn cmd_res_at(problem: &Problem, nu_s: &str, machine: bool) -> (String, i32) {
    use crate::koszul::build_slice;
    use crate::resultant::cayley_det;
    let q = problem.module.shape().q();
    let nu = match parse_multidegree(nu_s, q) {
        Ok(n) => n,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let seq = match sequence_z(problem) {
        Ok(s) => s,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let slice = build_slice(&problem.module, &seq, &nu);
    match cayley_det(&slice) {
        Ok(v) => {
            let v = v.canonical_assoc();
            let out = if machine {
                format!("res={} nu={} stabilized=false\n", v, fmt_nu(&nu))
            } else {
                format!(
                    "resultant = {} (defined up to sign; nu override, unverified)\nnu = ({})\n",
                    v,
                    fmt_nu(&nu)
                )
            };
            (out, EXIT_OK)
        }
        Err(e) => (format!("error: {}\n", e), exit_code_for_resultant_error(&e)),
    }
}

fn cmd_ordp(file: &str, p: u64, machine: bool) -> (String, i32) {
    let problem = match load_problem(file) {
        Ok(pr) => pr,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let seq = match sequence_z(&problem) {
        Ok(s) => s,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    match check_chardin(&seq, &problem.module, p) {
        Ok(rep) => {
            let ord = rep.ord_p.map(|o| o.to_string()).unwrap_or_else(|| "inf".into());
            let out = if machine {
                format!("N={} ord_p={} pass={}\n", rep.n, ord, rep.pass)
            } else {
                format!("N = {}\nord_{}(Res) = {}\npass = {}\n", rep.n, p, ord, rep.pass)
            };
            (out, if rep.pass { EXIT_OK } else { EXIT_HYPOTHESIS })
        }
        Err(e) => (format!("error: {}\n", e), exit_code_for_multiplicity_error(&e)),
    }
}

fn cmd_ordt(file: &str, directions: usize, seed: u64, machine: bool) -> (String, i32) {
    let problem = match load_problem(file) {
        Ok(pr) => pr,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let seq = match sequence_z(&problem) {
        Ok(s) => s,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    match crate::multiplicity::check_order_bound(&problem.module, &seq, 0, directions, seed) {
        Ok(rep) => {
            let min = rep.orders.iter().min().copied().unwrap_or(0);
            let orders: Vec<String> = rep.orders.iter().map(|o| o.to_string()).collect();
            let out = if machine {
                format!("seed={} orders={} min_order={}\n", seed, orders.join(","), min)
            } else {
                format!(
                    "seed = {}\ndirections = {}\norders = [{}]\nmin order = {}\n",
                    seed,
                    directions,
                    orders.join(", "),
                    min
                )
            };
            (out, EXIT_OK)
        }
        Err(e) => (format!("error: {}\n", e), exit_code_for_multiplicity_error(&e)),
    }
}

fn format_hilbert_poly(hp: &crate::modslice::HilbertPolynomial) -> String {
    // terms as coeff * d1^e1 ... over the multidegree variables
    let mut parts = Vec::new();
    for (e, c) in hp.poly.terms() {
        let mut part = format_rational(c);
        for (i, &exp) in e.iter().enumerate() {
            if exp == 0 {
                continue;
            }
            part.push_str(&format!("*d{}", i + 1));
            if exp > 1 {
                part.push_str(&format!("^{}", exp));
            }
        }
        parts.push(part);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn cmd_hilbert(file: &str, at: Option<String>, poly: bool, machine: bool) -> (String, i32) {
    let problem = match load_problem(file) {
        Ok(pr) => pr,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let q = problem.module.shape().q();
    if let Some(at_s) = at {
        let nu = match parse_multidegree(&at_s, q) {
            Ok(n) => n,
            Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
        };
        let h = hilbert_function(&problem.module, &nu);
        let out = if machine {
            format!("h={}\n", h)
        } else {
            format!("H({}) = {}\n", fmt_nu(&nu), h)
        };
        return (out, EXIT_OK);
    }
    if poly {
        return match hilbert_polynomial(&problem.module) {
            Ok(hp) => {
                let rd = rdim(&problem.module).unwrap_or(-1);
                let out = if machine {
                    format!(
                        "poly={} rdim={} offset={}\n",
                        format_hilbert_poly(&hp),
                        rd,
                        fmt_nu(&hp.verified_offset)
                    )
                } else {
                    format!(
                        "P(d) = {}\nrdim = {}\nverified offset = ({})\n",
                        format_hilbert_poly(&hp),
                        rd,
                        fmt_nu(&hp.verified_offset)
                    )
                };
                (out, EXIT_OK)
            }
            Err(e) => (format!("error: {}\n", e), EXIT_HYPOTHESIS),
        };
    }
    ("error: pass --at <multidegree> or --poly\n".into(), EXIT_USAGE)
}

fn cmd_interp(
    file: &str,
    demo: bool,
    directions: usize,
    samples: usize,
    seed: u64,
    machine: bool,
) -> (String, i32) {
    let problem = match load_problem(file) {
        Ok(pr) => pr,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let section = match &problem.interp {
        Some(s) => s,
        None => return ("error: problem file has no [interp] section\n".into(), EXIT_USAGE),
    };
    let spec = match build_eval_spec(section) {
        Ok(s) => s,
        Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
    };
    let degrees: Vec<MultiDegree> = section
        .degrees
        .iter()
        .map(|d| MultiDegree(d.clone()))
        .collect();
    if degrees.iter().any(|d| d.0.len() != 2) {
        return ("error: interp degrees must be pairs\n".into(), EXIT_USAGE);
    }
    let mut out = String::new();
    for d in &degrees {
        let surj = is_surjective(&spec, d);
        let kdim = crate::interp::interpolation_slice(&spec, d).len();
        if machine {
            out.push_str(&format!(
                "d={} surjective={} kernel_dim={}\n",
                fmt_nu(d),
                surj,
                kdim
            ));
        } else {
            out.push_str(&format!(
                "d = ({}): surjective = {}, kernel dim = {}\n",
                fmt_nu(d),
                surj,
                kdim
            ));
        }
    }
    let deg = ist_degree_check(&spec);
    if machine {
        out.push_str(&format!(
            "expected_degree={} degree_pass={}\n",
            deg.expected, deg.pass
        ));
    } else {
        out.push_str(&format!(
            "interpolation degree = {} (pass = {})\n",
            deg.expected, deg.pass
        ));
    }
    if !demo {
        return (out, EXIT_OK);
    }
    if degrees.len() != 3 {
        return (
            "error: --demo needs exactly three degrees in [interp]\n".into(),
            EXIT_USAGE,
        );
    }
    let darr = [degrees[0].clone(), degrees[1].clone(), degrees[2].clone()];
    match res_estimate_demo(&spec, &darr, samples, directions, seed) {
        Ok(rep) => {
            if machine {
                out.push_str(&format!("seed={} claimed={} ", seed, rep.claimed));
                let per: Vec<String> = rep.samples.iter().map(|s| s.pass.to_string()).collect();
                out.push_str(&format!("sample_pass={} pass={}\n", per.join(","), rep.pass));
            } else {
                out.push_str(&format!(
                    "seed = {}\nclaimed order = {}\n",
                    seed, rep.claimed
                ));
                for (i, s) in rep.samples.iter().enumerate() {
                    let orders: Vec<String> = s.orders.iter().map(|o| o.to_string()).collect();
                    out.push_str(&format!(
                        "sample {}: orders = [{}], pass = {}\n",
                        i,
                        orders.join(", "),
                        s.pass
                    ));
                }
                out.push_str(&format!("overall pass = {}\n", rep.pass));
            }
            (out, if rep.pass { EXIT_OK } else { EXIT_HYPOTHESIS })
        }
        Err(InterpError::HypothesisFailed) => {
            out.push_str("error: evaluation not surjective at a required degree\n");
            (out, EXIT_HYPOTHESIS)
        }
        Err(InterpError::Multiplicity(e)) => {
            out.push_str(&format!("error: {}\n", e));
            (out, exit_code_for_multiplicity_error(&e))
        }
        Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
    }
}

fn build_eval_spec(section: &InterpSection) -> Result<EvalSpec, String> {
    let mut points = Vec::new();
    for p in &section.points {
        if p.len() != 2 {
            return Err("each interp point must be [z, w]".into());
        }
        let z = parse_rational(&p[0]).ok_or_else(|| format!("bad coordinate `{}`", p[0]))?;
        let w = parse_rational(&p[1]).ok_or_else(|| format!("bad coordinate `{}`", p[1]))?;
        points.push(GroupPoint::new(z, w).map_err(|e| e.to_string())?);
    }
    EvalSpec::new(points, section.t).map_err(|e| e.to_string())
}

/// Parses arguments and runs the requested command; returns the process
/// exit code. Output goes to stdout, diagnostics and timing to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let started = std::time::Instant::now();
    let (out, code) = match cli.command {
        Command::Res { file, nu_override, machine } => cmd_res(&file, nu_override, machine),
        Command::Ordp { file, p, machine } => cmd_ordp(&file, p, machine),
        Command::Ordt { file, directions, seed, machine } => {
            cmd_ordt(&file, directions, seed, machine)
        }
        Command::Hilbert { file, at, poly, machine } => cmd_hilbert(&file, at, poly, machine),
        Command::Interp { file, demo, directions, samples, seed, machine } => {
            cmd_interp(&file, demo, directions, samples, seed, machine)
        }
    };
    print!("{}", out);
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    code
}
