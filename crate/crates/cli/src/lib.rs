//! The `fracpart` command line. [`run`] does all the work so that tests can
//! drive it without spawning a process.

pub mod args;
pub mod output;
mod render;

use std::fmt;

use fracpart::conjecture::{scan_full_poly_modality, scan_modality, scan_sequence, NumeratorSequence, Verdict, DEFAULT_SUM_BOUND};
use fracpart::even::{
    even_series_partitions_capped, f_e, omega_int, psi_eval, psi_vanishes, solve_crt, solve_relaxed, solve_strict,
    EvenSeries, CRT_LIMIT,
};
use fracpart::odd::{
    bijection_check, closed_form_h2, construct_witness, count_all, count_h, count_table, distinct_sum_counts,
    enumerate, rascal_relation_check, rascal_triangle, shifted_gaussian,
};
use fracpart::omega::{dirichlet_partial, omega_cont, parse_real, tail_bound_for, to_decimal, zeta_ratio, HPComplex};
use fracpart::Error;

use args::{Cli, Command, Format};
use render::{emit, join, json, Records};

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_COUNTEREXAMPLE: u8 = 2;
pub const EXIT_PRECISION: u8 = 3;

/// Largest `t` for which `even-count` also scans for strict solutions.
const SCAN_LIMIT: u64 = 1_000_000;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::PrecisionExhausted { .. }) => EXIT_PRECISION,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Rendered output and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub code: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: EXIT_OK }
    }

    fn check(body: String, holds: bool) -> Self {
        Outcome { body, code: if holds { EXIT_OK } else { EXIT_COUNTEREXAMPLE } }
    }
}

fn is_single_query(cmd: &Command) -> bool {
    !matches!(
        cmd,
        Command::OddTable { .. } | Command::EvenCount { .. } | Command::Omega { .. } | Command::Dirichlet { .. } | Command::Conjecture(_)
    )
}

/// Runs one command inside its own thread pool.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let threads = cli.threads.or_else(|| is_single_query(&cli.command).then_some(1));
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return usage("--threads must be at least 1");
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = cli.format.unwrap_or(Format::Text);
    match &cli.command {
        Command::OddTable { jmax, h } => odd_table(*jmax, *h, cli.format.unwrap_or(Format::Md)),
        Command::OddCount(c) => odd_count(c.j, c.k, c.h, fmt),
        Command::OddEnum(c) => odd_enum(c.j, c.k, c.h, cli.cap, fmt),
        Command::OddWitness(c) => odd_witness(c.j, c.k, fmt),
        Command::ClosedForm(c) => closed_form(c.j, c.k, fmt),
        Command::Rascal { j } => rascal(*j, fmt),
        Command::Gaussian { j, h } => gaussian(*j, *h, fmt),
        Command::BijectionCheck { j, h } => bijection(*j, *h, fmt),
        Command::EvenCount { t } => even_count(t.0, t.1, fmt),
        Command::EvenSolve { t, relaxed } => even_solve(*t, *relaxed, fmt),
        Command::EvenSeries { t, x, y, k } => even_series(*t, *x, *y, *k, cli.cap, fmt),
        Command::Psi { t, x } => psi(*t, *x, fmt),
        Command::Omega { z } => omega(z, cli.precision_bits, fmt),
        Command::Dirichlet { s, t } => dirichlet(s, *t, cli.precision_bits, fmt),
        Command::Conjecture(a) => conjecture(&a.name, a.jmax, fmt),
    }
}

fn odd_table(jmax: u64, h: Option<u64>, fmt: Format) -> Result<Outcome, CliError> {
    if !(3..=200).contains(&jmax) {
        return usage("--jmax must lie in 3..=200");
    }
    let table = count_table((3, jmax), (1, jmax - 1), h)?;
    Ok(Outcome::ok(match fmt {
        Format::Csv => table.to_csv(),
        Format::Json => json(&table),
        Format::Md | Format::Text => table.to_markdown(),
    }))
}

fn label(j: u64, h: Option<u64>) -> String {
    match h {
        Some(h) => format!("j = {j}, h = {h}"),
        None => format!("j = {j}"),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn odd_count(j: u64, k: u64, h: Option<u64>, fmt: Format) -> Result<Outcome, CliError> {
    if j == 0 {
        return usage("--j must be positive");
    }
    let count = match h {
        Some(h) => count_h(j, h, k),
        None => count_all(j, k),
    };
    let out = output::OddCount { j, k, h, count };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["j", "k", "h", "count"]);
            r.push(vec![j.to_string(), k.to_string(), opt(h), out.count.to_string()]);
            r
        },
        || format!("{}, k = {k}: {}\n", label(j, h), out.count),
    );
    Ok(Outcome::ok(body))
}

fn fraction(numerators: &[u64], denominator: u64) -> String {
    format!("({}) / {denominator}", join(numerators, " + "))
}

fn odd_enum(j: u64, k: u64, h: Option<u64>, cap: usize, fmt: Format) -> Result<Outcome, CliError> {
    let found = enumerate(j, k, h, cap)?;
    let out = output::OddEnum { j, k, h, witnesses: found.iter().map(Into::into).collect() };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["k", "parts", "numerators", "denominator"]);
            for w in &out.witnesses {
                r.push(vec![k.to_string(), w.numerators.len().to_string(), join(&w.numerators, " "), j.to_string()]);
            }
            r
        },
        || {
            let mut s = format!("{}, k = {k}: {} witnesses\n", label(j, h), out.witnesses.len());
            for w in &out.witnesses {
                s.push_str(&format!("  {}\n", fraction(&w.numerators, j)));
            }
            s
        },
    );
    Ok(Outcome::ok(body))
}

fn odd_witness(j: u64, k: u64, fmt: Format) -> Result<Outcome, CliError> {
    let w = construct_witness(j, k)?;
    let out = output::OddWitness { j, k, witness: (&w).into() };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["k", "numerators", "denominator"]);
            r.push(vec![k.to_string(), join(&w.numerators, " "), j.to_string()]);
            r
        },
        || format!("{} = {k}\n", fraction(&w.numerators, j)),
    );
    Ok(Outcome::ok(body))
}

fn closed_form(j: u64, k: u64, fmt: Format) -> Result<Outcome, CliError> {
    let cf = closed_form_h2(j, k)?;
    let count = count_h(j, 2, k);
    let agree = cf == count;
    let out = output::ClosedForm { j, k, closed_form: cf, count, agree };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["j", "k", "closed form", "count", "agree"]);
            r.push(vec![j.to_string(), k.to_string(), out.closed_form.to_string(), out.count.to_string(), agree.to_string()]);
            r
        },
        || {
            format!(
                "j = {j}, k = {k}: closed form {}, count {} ({})\n",
                out.closed_form,
                out.count,
                if agree { "agree" } else { "DISAGREE" }
            )
        },
    );
    Ok(Outcome::check(body, agree))
}

fn rascal(j: u64, fmt: Format) -> Result<Outcome, CliError> {
    let rows = rascal_triangle(j as usize)?;
    let holds = rascal_relation_check(j)?;
    let out = output::Rascal { j, rows, distinct_sums: distinct_sum_counts(j), relation_holds: holds };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["row", "entries"]);
            for (i, row) in out.rows.iter().enumerate() {
                r.push(vec![i.to_string(), join(row, " ")]);
            }
            r
        },
        || {
            let mut s = String::new();
            for row in &out.rows {
                s.push_str(&join(row, " "));
                s.push('\n');
            }
            s.push_str(&format!(
                "distinct sums for j = {j}: {} ({})\n",
                join(&out.distinct_sums, " "),
                if holds { "matches row" } else { "DIFFERS from row" }
            ));
            s
        },
    );
    Ok(Outcome::check(body, holds))
}

fn gaussian(j: u64, h: u64, fmt: Format) -> Result<Outcome, CliError> {
    if h > j {
        return usage("--h must not exceed --j");
    }
    let poly = shifted_gaussian(j, h);
    let out = output::Gaussian { j, h, text: poly.to_text("x"), poly };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["exponent", "coefficient"]);
            for (e, c) in out.poly.terms() {
                r.push(vec![e.to_string(), c.to_string()]);
            }
            r
        },
        || format!("{}\n", out.text),
    );
    Ok(Outcome::ok(body))
}

fn bijection(j: u64, h: Option<u64>, fmt: Format) -> Result<Outcome, CliError> {
    let hs: Vec<u64> = match h {
        Some(h) if h > j => return usage("--h must not exceed --j"),
        Some(h) => vec![h],
        None => (0..=j).collect(),
    };
    let out = hs
        .into_iter()
        .map(|h| Ok(output::Bijection { j, h, holds: bijection_check(j, h)? }))
        .collect::<Result<Vec<_>, Error>>()?;
    let all = out.iter().all(|b| b.holds);
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["j", "h", "holds"]);
            for b in &out {
                r.push(vec![b.j.to_string(), b.h.to_string(), b.holds.to_string()]);
            }
            r
        },
        || {
            out.iter()
                .map(|b| format!("j = {}, h = {}: {}\n", b.j, b.h, if b.holds { "bijective" } else { "FAILS" }))
                .collect()
        },
    );
    Ok(Outcome::check(body, all))
}

fn even_count(a: u64, b: u64, fmt: Format) -> Result<Outcome, CliError> {
    if a < 2 {
        return usage("--t must be at least 2");
    }
    let out = (a..=b)
        .map(|t| {
            let count = f_e(t)?;
            let scanned = (t <= SCAN_LIMIT).then(|| solve_strict(t).len() as u64);
            Ok(output::EvenCount { t, omega: omega_int(t), count, scanned })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let agree = out.iter().all(|c| c.scanned.is_none_or(|s| c.count == s.into()));
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["t", "omega", "count", "scanned"]);
            for c in &out {
                r.push(vec![c.t.to_string(), c.omega.to_string(), c.count.to_string(), opt(c.scanned)]);
            }
            r
        },
        || {
            out.iter()
                .map(|c| match c.scanned {
                    Some(s) => format!("t = {}: omega = {}, F_E = {} (scan {s})\n", c.t, c.omega, c.count),
                    None => format!("t = {}: omega = {}, F_E = {}\n", c.t, c.omega, c.count),
                })
                .collect()
        },
    );
    Ok(Outcome::check(body, agree))
}

fn even_solve(t: u64, relaxed: bool, fmt: Format) -> Result<Outcome, CliError> {
    if t < 2 {
        return usage("--t must be at least 2");
    }
    let mut solutions = if t <= SCAN_LIMIT {
        if relaxed {
            solve_relaxed(t)
        } else {
            solve_strict(t)
        }
    } else if t <= CRT_LIMIT {
        solve_crt(t)?
    } else {
        return usage(format!("--t must not exceed {CRT_LIMIT}"));
    };
    if !relaxed {
        solutions.retain(|s| s.is_strict());
    }
    let out = output::EvenSolve { t, relaxed, solutions };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["t", "x", "y"]);
            for s in &out.solutions {
                r.push(vec![s.t.to_string(), s.x.to_string(), s.y.to_string()]);
            }
            r
        },
        || out.solutions.iter().map(|s| format!("x = {}, y = {}\n", s.x, s.y)).collect(),
    );
    Ok(Outcome::ok(body))
}

fn even_series(t: u64, x: u64, y: u64, k: Option<u64>, cap: usize, fmt: Format) -> Result<Outcome, CliError> {
    let series = EvenSeries::new(t, x, y)?;
    let witnesses = even_series_partitions_capped(t, x, y, k, cap)?;
    let out = output::EvenSeries { t, x, y, missing: series.missing(), witnesses };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["k", "numerators", "denominator"]);
            for w in &out.witnesses {
                r.push(vec![w.k.to_string(), join(&w.numerators, " "), w.denominator.to_string()]);
            }
            r
        },
        || {
            let mut s = format!("{t} = {}\n", fraction(&series.numerators(), y));
            let mut last = None;
            for w in &out.witnesses {
                if last != Some(w.k) {
                    s.push_str(&format!("k = {}:\n", w.k));
                    last = Some(w.k);
                }
                s.push_str(&format!("  {}\n", fraction(&w.numerators, w.denominator)));
            }
            if k.is_none() {
                let missing = if out.missing.is_empty() { "none".to_string() } else { join(&out.missing, " ") };
                s.push_str(&format!("unreached k: {missing}\n"));
            }
            s
        },
    );
    Ok(Outcome::ok(body))
}

fn psi(t: u64, x: Option<u64>, fmt: Format) -> Result<Outcome, CliError> {
    if t < 1 {
        return usage("--t must be positive");
    }
    if let Some(x) = x {
        let out = output::PsiValue { t, x, value: psi_eval(t, x)? };
        let body = emit(
            fmt,
            &out,
            || {
                let mut r = Records::new(&["t", "x", "value"]);
                r.push(vec![t.to_string(), x.to_string(), out.value.to_string()]);
                r
            },
            || format!("Psi_{t}({x}) = {}\n", out.value),
        );
        return Ok(Outcome::ok(body));
    }
    let roots: Vec<u64> = (1..=t).filter(|&x| psi_vanishes(t, x)).collect();
    let out = output::PsiRoots { t, roots, two_pow_omega: 1 << omega_int(t) };
    let holds = out.roots.len() as u64 == out.two_pow_omega;
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["t", "roots", "count", "2^omega"]);
            r.push(vec![t.to_string(), join(&out.roots, " "), out.roots.len().to_string(), out.two_pow_omega.to_string()]);
            r
        },
        || {
            format!(
                "roots of Psi_{t} in 1..={t}: {} ({} roots, 2^omega = {})\n",
                join(&out.roots, " "),
                out.roots.len(),
                out.two_pow_omega
            )
        },
    );
    Ok(Outcome::check(body, holds))
}

/// Inputs are read well above the working precision so that decimal
/// literals like `0.1` carry no visible rounding.
fn input_precision(p: usize) -> usize {
    (p * 8).max(1024)
}

fn omega(z: &str, p: usize, fmt: Format) -> Result<Outcome, CliError> {
    if p < fracpart::omega::MIN_PRECISION {
        return usage(format!("--precision-bits must be at least {}", fracpart::omega::MIN_PRECISION));
    }
    let zc = HPComplex::parse(z, input_precision(p))?;
    let v = omega_cont(&zc, p)?.to_value();
    let body = emit(
        fmt,
        &v,
        || {
            let mut r = Records::new(&["z", "re", "im", "err bound", "precision bits"]);
            r.push(vec![z.to_string(), v.re.clone(), v.im.clone(), v.err_bound.clone(), v.precision_bits.to_string()]);
            r
        },
        || {
            format!(
                "omega({z}) = {} {} {}i\nerror bound per component: {}\nprecision: {} bits\n",
                v.re,
                if v.im.starts_with('-') { "-" } else { "+" },
                v.im.trim_start_matches('-'),
                v.err_bound,
                v.precision_bits
            )
        },
    );
    Ok(Outcome::ok(body))
}

fn dirichlet(s: &str, t: u64, p: usize, fmt: Format) -> Result<Outcome, CliError> {
    if p < fracpart::omega::MIN_PRECISION {
        return usage(format!("--precision-bits must be at least {}", fracpart::omega::MIN_PRECISION));
    }
    let sv = parse_real(s, input_precision(p))?;
    let partial = dirichlet_partial(&sv, t, p)?;
    let limit = zeta_ratio(&sv, p)?;
    let gap = limit.sub(&partial, p, fracpart::omega::RM);
    let bound = tail_bound_for(&sv, t);
    let digits = ((p as f64 * std::f64::consts::LOG10_2) as usize).saturating_sub(4).min(40);
    let within = fracpart::omega::to_f64(&gap) <= bound;
    let out = output::Dirichlet {
        s: s.to_string(),
        t,
        partial: to_decimal(&partial, digits),
        limit: to_decimal(&limit, digits),
        gap: to_decimal(&gap, digits),
        tail_bound: format!("{bound:.3e}"),
        within_bound: within,
    };
    let body = emit(
        fmt,
        &out,
        || {
            let mut r = Records::new(&["s", "T", "partial", "limit", "gap", "tail bound"]);
            r.push(vec![
                s.to_string(),
                t.to_string(),
                out.partial.clone(),
                out.limit.clone(),
                out.gap.clone(),
                out.tail_bound.clone(),
            ]);
            r
        },
        || {
            format!(
                "s = {s}, T = {t}\npartial sum:        {}\nzeta(s)^2/zeta(2s): {}\ngap:                {}\ntail bound:         {}\n",
                out.partial, out.limit, out.gap, out.tail_bound
            )
        },
    );
    Ok(Outcome::check(body, within))
}

fn conjecture(name: &str, jmax: u64, fmt: Format) -> Result<Outcome, CliError> {
    if name == "full-poly" {
        let m = scan_full_poly_modality(jmax)?;
        let out = output::FullPoly { j: jmax, modality: m };
        let body = emit(
            fmt,
            &out,
            || {
                let mut r = Records::new(&["j", "peaks", "peak starts", "plateau widths"]);
                r.push(vec![
                    jmax.to_string(),
                    out.modality.peaks.to_string(),
                    join(&out.modality.peak_starts, " "),
                    join(&out.modality.plateau_widths, " "),
                ]);
                r
            },
            || {
                format!(
                    "full polynomial, j = {jmax}: {} peaks at exponents {}\n",
                    out.modality.peaks,
                    join(&out.modality.peak_starts, " ")
                )
            },
        );
        return Ok(Outcome::ok(body));
    }
    if jmax < 3 {
        return usage("--jmax must be at least 3");
    }
    let report = if name == "modality" {
        scan_modality(jmax)?
    } else {
        let seq: NumeratorSequence = name.parse().map_err(|_| CliError::Usage(format!("unknown conjecture or sequence {name:?}")))?;
        scan_sequence(&seq, 3, jmax, DEFAULT_SUM_BOUND)?
    };
    let consistent = report.verdict == Verdict::Consistent;
    let body = emit(
        fmt,
        &report,
        || {
            let mut r = Records::new(&["name", "j", "kind", "value"]);
            for f in &report.failures {
                let (kind, j, v) = match *f {
                    fracpart::conjecture::Failure::MissingK { j, k } => ("missingK", j, k),
                    fracpart::conjecture::Failure::Peaks { j, peaks } => ("peaks", j, peaks as u64),
                };
                r.push(vec![report.name.clone(), j.to_string(), kind.to_string(), v.to_string()]);
            }
            r
        },
        || report.to_text(),
    );
    Ok(Outcome::check(body, consistent))
}
