//! Command-line driver: runs one identity (or the whole default sweep),
//! streams one report per verification, and exits 0 only if every report
//! passed. Exit code 1 means a verification failed (a mathematical
//! counterexample — should never happen); 2 means a usage or parameter error.

mod args;

use std::process::ExitCode;

use args::{Cli, Command, FormatArg, IdentityArg, ModeArg, RangeSpec, VerifyArgs};
use bident::exact::rat;
use bident::identities::{
    trials, verify_gamma_miki, verify_lemma1_numeric, verify_lemma1_symbolic,
    verify_matiyasevich, verify_miki, verify_pan_sun_poly, verify_pan_sun_poly_numeric,
    verify_sun_pan_numeric, verify_sun_pan_symbolic, verify_theorem1_numeric,
    verify_theorem1_symbolic, verify_theorem2, verify_woodcock, GammaParams, IdentityError,
    PanSunKind,
};
use bident::series::{verify_carlitz_gf_numeric, verify_carlitz_gf_symbolic};
use bident::{IdentityReport, Rat};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify(v) = cli.command;
    let mut emitter = Emitter::new(v.format);
    match run(&v, &mut emitter) {
        Ok(()) if emitter.all_pass => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Emitter {
    format: FormatArg,
    all_pass: bool,
    count: usize,
}

impl Emitter {
    fn new(format: FormatArg) -> Self {
        Self {
            format,
            all_pass: true,
            count: 0,
        }
    }

    fn emit(&mut self, r: &IdentityReport) {
        self.all_pass &= r.pass;
        self.count += 1;
        match self.format {
            FormatArg::Json => println!("{}", serde_json::to_string(r).expect("serialize")),
            FormatArg::Tsv => {
                let flat_params: Vec<String> =
                    r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}",
                    r.identity_id,
                    r.mode,
                    flat_params.join(";"),
                    r.lhs,
                    r.rhs,
                    r.difference,
                    r.pass,
                    r.elapsed.as_secs_f64()
                );
            }
            FormatArg::Text => {
                let flat_params: Vec<String> =
                    r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "{} [{}] {} {}  lhs={} rhs={} diff={} ({:.3}s)",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.mode,
                    r.identity_id,
                    flat_params.join(" "),
                    clip(&r.lhs),
                    clip(&r.rhs),
                    clip(&r.difference),
                    r.elapsed.as_secs_f64()
                );
            }
        }
    }
}

/// Text mode keeps lines readable; JSON/TSV carry the full renderings.
fn clip(s: &str) -> String {
    const LIMIT: usize = 96;
    if s.len() <= LIMIT {
        s.to_string()
    } else {
        format!("{}...[{} chars]", &s[..LIMIT], s.len())
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn run(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    if v.mode == ModeArg::Bigfloat && v.identity != IdentityArg::GammaMiki {
        return Err(usage("--mode bigfloat is only valid for gamma-miki"));
    }
    match v.identity {
        IdentityArg::Miki => run_miki(v, em),
        IdentityArg::Matiyasevich => run_matiyasevich(v, em),
        IdentityArg::PanSun3 => run_pan_sun(PanSunKind::MikiType, v, em),
        IdentityArg::PanSun4 => run_pan_sun(PanSunKind::MatiyasevichType, v, em),
        IdentityArg::Woodcock => run_woodcock(v, em),
        IdentityArg::SunPan => run_sun_pan(v, em),
        IdentityArg::Theorem1 => run_theorem1(v, em),
        IdentityArg::Lemma1 => run_lemma1(v, em),
        IdentityArg::Theorem2 => run_theorem2(v, em),
        IdentityArg::GammaMiki => run_gamma_miki(v, em),
        IdentityArg::CarlitzGf => run_carlitz(v, em),
        IdentityArg::All => run_all(v, em),
    }
}

fn reject_symbolic(v: &VerifyArgs, what: &str) -> Result<(), CliError> {
    if v.mode == ModeArg::Symbolic {
        return Err(usage(format!("{what} is exact-numeric only")));
    }
    Ok(())
}

fn run_miki(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    reject_symbolic(v, "miki")?;
    for n in v.n.unwrap_or(RangeSpec { start: 4, end: 40 }).iter() {
        em.emit(&verify_miki(n)?);
    }
    Ok(())
}

fn run_matiyasevich(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    reject_symbolic(v, "matiyasevich")?;
    for n in v.n.unwrap_or(RangeSpec { start: 4, end: 40 }).iter() {
        em.emit(&verify_matiyasevich(n)?);
    }
    Ok(())
}

fn run_pan_sun(kind: PanSunKind, v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    let default_n = match kind {
        PanSunKind::MikiType => RangeSpec { start: 2, end: 12 },
        PanSunKind::MatiyasevichType => RangeSpec { start: 1, end: 12 },
    };
    let exact = match v.mode {
        ModeArg::Exact => true,
        ModeArg::Symbolic => false,
        _ => v.x.is_some() || v.y.is_some(),
    };
    for n in v.n.unwrap_or(default_n).iter() {
        if exact {
            let x = single(&v.x, "--x")?;
            let y = v.y.clone().ok_or_else(|| usage("exact mode needs --y"))?;
            em.emit(&verify_pan_sun_poly_numeric(kind, n, &x, &y)?);
        } else {
            em.emit(&verify_pan_sun_poly(kind, n)?);
        }
    }
    Ok(())
}

fn run_woodcock(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    if v.mode == ModeArg::Exact {
        return Err(usage("woodcock is a polynomial identity; it runs symbolically"));
    }
    for m in v.m.unwrap_or(RangeSpec { start: 1, end: 8 }).iter() {
        for n in v.n.unwrap_or(RangeSpec { start: 2, end: 8 }).iter() {
            em.emit(&verify_woodcock(m, n)?);
        }
    }
    Ok(())
}

fn run_sun_pan(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    let explicit = v.r.is_some() || v.s.is_some() || v.x.is_some() || v.y.is_some();
    if explicit {
        let r = single(&v.r, "--r")?;
        let s = v.s.clone().ok_or_else(|| usage("explicit sun-pan needs --s"))?;
        let x = single(&v.x, "--x")?;
        let y = v.y.clone().ok_or_else(|| usage("explicit sun-pan needs --y"))?;
        for n in v.n.unwrap_or(RangeSpec { start: 1, end: 6 }).iter() {
            em.emit(&verify_sun_pan_numeric(n, &r, &s, &x, &y));
        }
        return Ok(());
    }
    let want_trials = v.trials.is_some() || v.mode == ModeArg::Exact;
    if want_trials {
        let n_max = v.n.map_or(12, |r| r.end);
        for rep in trials::sun_pan_random_trials(n_max, v.trials.unwrap_or(200), v.seed) {
            em.emit(&rep);
        }
    } else {
        for n in v.n.unwrap_or(RangeSpec { start: 1, end: 6 }).iter() {
            em.emit(&verify_sun_pan_symbolic(n));
        }
    }
    Ok(())
}

fn run_theorem1(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    if let (Some(r), Some(x)) = (&v.r, &v.x) {
        for n in v.n.unwrap_or(RangeSpec { start: 1, end: 6 }).iter() {
            em.emit(&verify_theorem1_numeric(n, r, x)?);
        }
        return Ok(());
    }
    let want_trials = v.trials.is_some() || v.mode == ModeArg::Exact;
    let m_range = v.m.unwrap_or(RangeSpec { start: 2, end: 2 });
    if want_trials {
        let n_max = v.n.map_or(10, |r| r.end);
        for m in m_range.iter() {
            for rep in
                trials::theorem1_random_trials(m as usize, n_max, v.trials.unwrap_or(100), v.seed)?
            {
                em.emit(&rep);
            }
        }
        return Ok(());
    }
    // symbolic (or auto): within caps run symbolically, otherwise fall back
    // to exact trials per instance
    let caps = v.caps;
    let n_range = v.n.unwrap_or(RangeSpec { start: 1, end: caps.n_max });
    for m in m_range.iter() {
        for n in n_range.iter() {
            let within = (m as usize) <= caps.m_max && n <= caps.n_max;
            if v.mode == ModeArg::Symbolic || within {
                em.emit(&verify_theorem1_symbolic(m as usize, n)?);
            } else {
                for rep in trials::theorem1_random_trials(m as usize, n, 100, v.seed)? {
                    em.emit(&rep);
                }
            }
        }
    }
    Ok(())
}

fn run_lemma1(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    let n_list = v.n_list.clone().unwrap_or_else(|| vec![2, 2]);
    if let Some(x) = &v.x {
        em.emit(&verify_lemma1_numeric(&n_list, x)?);
        return Ok(());
    }
    if v.mode == ModeArg::Symbolic {
        em.emit(&verify_lemma1_symbolic(&n_list)?);
        return Ok(());
    }
    for rep in trials::lemma1_random_trials(&n_list, v.trials.unwrap_or(20), v.seed)? {
        em.emit(&rep);
    }
    Ok(())
}

fn run_theorem2(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    reject_symbolic(v, "theorem2 (gamma-quotient normalization)")?;
    if let Some(p) = &v.p {
        for n in v.n.unwrap_or(RangeSpec { start: 1, end: 6 }).iter() {
            let gp = GammaParams::new(n, p.clone())?;
            let x = match &v.x {
                Some(x) => x.clone(),
                None => vec![Rat::from_integer(0.into()); p.len()],
            };
            em.emit(&verify_theorem2(&gp, &x)?);
        }
        return Ok(());
    }
    let m_max = v.m.map_or(3, |r| r.end) as usize;
    let n_max = v.n.map_or(8, |r| r.end);
    for rep in trials::theorem2_random_trials(m_max, n_max, v.trials.unwrap_or(50), v.seed)? {
        em.emit(&rep);
    }
    Ok(())
}

fn run_gamma_miki(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    if v.mode == ModeArg::Symbolic || v.mode == ModeArg::Exact {
        return Err(usage(
            "gamma-miki involves transcendental gamma values; only bigfloat mode is possible",
        ));
    }
    let ps = v
        .p
        .clone()
        .unwrap_or_else(|| vec![rat(1, 2), rat(1, 3), rat(5, 2)]);
    for p in &ps {
        for n in v.n.unwrap_or(RangeSpec { start: 2, end: 8 }).iter() {
            em.emit(&verify_gamma_miki(p, n, v.precision_bits)?);
        }
    }
    Ok(())
}

fn run_carlitz(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    let m = v.m.map_or(2, |r| r.end) as usize;
    if let Some(x) = &v.x {
        if x.len() != m && v.m.is_some() {
            return Err(usage(format!("--x has {} entries but m = {m}", x.len())));
        }
        let degree = v.degree.unwrap_or(6);
        em.emit(&verify_carlitz_gf_numeric(degree, x));
        return Ok(());
    }
    if v.mode == ModeArg::Exact {
        return Err(usage("exact carlitz-gf needs --x with rational entries"));
    }
    let degree = v.degree.unwrap_or(if m <= 2 { 8 } else { 6 });
    em.emit(&verify_carlitz_gf_symbolic(m, degree));
    Ok(())
}

/// The default sweep: one pass over every identity at the documented desk
/// scale (the exhaustive lemma sweep lives in the acceptance test suite).
fn run_all(v: &VerifyArgs, em: &mut Emitter) -> Result<(), CliError> {
    for n in 4..=40 {
        em.emit(&verify_miki(n)?);
        em.emit(&verify_matiyasevich(n)?);
    }
    for n in 2..=12 {
        em.emit(&verify_pan_sun_poly(PanSunKind::MikiType, n)?);
    }
    for n in 1..=12 {
        em.emit(&verify_pan_sun_poly(PanSunKind::MatiyasevichType, n)?);
    }
    for m in 1..=8 {
        for n in 2..=8 {
            em.emit(&verify_woodcock(m, n)?);
        }
    }
    for n in 1..=6 {
        em.emit(&verify_sun_pan_symbolic(n));
    }
    for rep in trials::sun_pan_random_trials(12, 200, v.seed) {
        em.emit(&rep);
    }
    for n in 1..=6 {
        em.emit(&verify_theorem1_symbolic(2, n)?);
    }
    for n in 1..=4 {
        em.emit(&verify_theorem1_symbolic(3, n)?);
    }
    for m in 1..=4 {
        for rep in trials::theorem1_random_trials(m, 10, 100, v.seed)? {
            em.emit(&rep);
        }
    }
    // representative lemma instances: m <= 3, total <= 8, 5 x-vectors each
    for m in 1..=3usize {
        for total in m as u32..=8 {
            for comp in bident::series::compositions(total - m as u32, m) {
                let n_list: Vec<u32> = comp.iter().map(|&k| k + 1).collect();
                for rep in trials::lemma1_random_trials(&n_list, 5, v.seed)? {
                    em.emit(&rep);
                }
            }
        }
    }
    for rep in trials::theorem2_random_trials(3, 8, 50, v.seed)? {
        em.emit(&rep);
    }
    em.emit(&verify_carlitz_gf_symbolic(2, 8));
    em.emit(&verify_carlitz_gf_numeric(6, &[rat(1, 3), rat(-2, 5), rat(7, 4)]));
    for p in [rat(1, 2), rat(1, 3), rat(5, 2)] {
        for n in 2..=8 {
            em.emit(&verify_gamma_miki(&p, n, v.precision_bits)?);
        }
    }
    Ok(())
}

fn single(list: &Option<Vec<Rat>>, flag: &str) -> Result<Rat, CliError> {
    match list {
        Some(v) if v.len() == 1 => Ok(v[0].clone()),
        Some(v) => Err(usage(format!("{flag} expects exactly one value, got {}", v.len()))),
        None => Err(usage(format!("missing {flag}"))),
    }
}
