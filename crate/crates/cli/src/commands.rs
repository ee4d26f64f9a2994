use num_traits::{One, Signed};
use thiserror::Error;

use motivic_core::bun::{bun_closed, bun_colimit, bun_compact, harder_count, BunError};
use motivic_core::curve::{
    counts_from_weil, satisfies_functional_equation, CurveError, CurveSource, CurveSpec,
};
use motivic_core::motive::{
    self, parse, realize_count, realize_series, Atom, MotiveExpr, ParseError, RealizationContext,
    RealizeError, Realized,
};
use motivic_core::oracle::{
    divisor_count, interval_contains, split_bundle_count_p1, ClosedPointCensus, OracleError,
};
use motivic_core::series::{big, fmt_rat, int, parse_rat, q_pow, Rat, TruncSeries};

use crate::table::Table;
use crate::{CurveArgs, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{err}\n  {text}\n  {caret}^", caret = " ".repeat(err.position))]
    Parse { err: ParseError, text: String },
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Bun(#[from] BunError),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Realize(_) | CliError::Bun(_) => 3,
            CliError::Mismatch(_) => 4,
            _ => 1,
        }
    }
}

fn curve_from_file(args: &CurveArgs) -> Result<Option<CurveSpec>, CliError> {
    let Some(path) = &args.curve else {
        return Ok(None);
    };
    let spec = CurveSpec::from_path(path)?;
    if let Some(q) = args.q.filter(|&q| q != spec.q) {
        return Err(CliError::Usage(format!(
            "--q {q} contradicts q = {} in {}",
            spec.q,
            path.display()
        )));
    }
    if let Some(g) = args.genus.filter(|&g| g != spec.genus) {
        return Err(CliError::Usage(format!(
            "--genus {g} contradicts genus = {} in {}",
            spec.genus,
            path.display()
        )));
    }
    Ok(Some(spec))
}

/// The curve for count realizations: `--curve`, or `P¹` over `F_q`.
fn count_curve(args: &CurveArgs) -> Result<CurveSpec, CliError> {
    if let Some(spec) = curve_from_file(args)? {
        return Ok(spec);
    }
    match (args.q, args.genus) {
        (Some(_), Some(g)) if g > 0 => Err(CliError::Usage(format!(
            "a curve of genus {g} needs --curve; --q alone means P¹"
        ))),
        (Some(q), _) => Ok(CurveSpec::p1(q)),
        (None, _) => Err(CliError::Usage(
            "count realization needs --q or --curve".into(),
        )),
    }
}

fn poincare_genus(args: &CurveArgs) -> Result<u32, CliError> {
    Ok(match curve_from_file(args)? {
        Some(spec) => spec.genus,
        None => args.genus.unwrap_or(0),
    })
}

pub fn realize(
    text: &str,
    count: bool,
    curve: &CurveArgs,
    order: usize,
    depth: Option<usize>,
    truncate: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let expr = parse(text).map_err(|err| CliError::Parse {
        err,
        text: text.to_string(),
    })?;
    let mut ctx = if count {
        let data = count_curve(curve)?.resolve()?;
        match truncate {
            Some(j) => RealizationContext::count_truncated(data, j),
            None => RealizationContext::count(data),
        }
    } else {
        RealizationContext::poincare(poincare_genus(curve)?, order)
    };
    if let Some(d) = depth {
        ctx = ctx.with_max_depth(d);
    }
    let value = motive::realize(&expr, &ctx)?;
    match format {
        Format::Tsv => println!("{value}"),
        Format::Pretty => match &value {
            Realized::Series(s) => println!("{expr} = {s} + O(z^{})", s.order() + 1),
            _ => println!("{expr} = {value}"),
        },
    }
    Ok(())
}

pub fn verify_bun(
    n: u32,
    d: i64,
    curve: &CurveArgs,
    order: usize,
    mutate: bool,
    format: Format,
) -> Result<(), CliError> {
    let g = poincare_genus(curve)?;
    let colimit = bun_colimit(n, d, g, order)?;
    let mut closed = realize_series(&bun_closed(n)?, g, order)?;
    if mutate {
        closed = &closed + &TruncSeries::monomial(int(1), order.min(2), order);
    }
    let mut table = Table::default();
    table.row(["degree", "colimit", "closed", "status"]);
    for k in 0..=order {
        let (a, b) = (colimit.coeff(k), closed.coeff(k));
        table.row([
            k.to_string(),
            fmt_rat(a),
            fmt_rat(b),
            if a == b { "ok" } else { "FAIL" }.to_string(),
        ]);
    }
    print!("{}", table.render(format));
    match colimit.first_mismatch(&closed) {
        None => {
            println!("PASS n={n} d={d} g={g} N={order}");
            Ok(())
        }
        Some(k) => {
            println!("FAIL at degree {k}");
            Err(CliError::Mismatch(format!("first mismatch at degree {k}")))
        }
    }
}

pub fn verify_count(
    n: u32,
    curve: &CurveArgs,
    tail_eps: &str,
    mutate: bool,
    format: Format,
) -> Result<(), CliError> {
    let eps = parse_rat(tail_eps)
        .filter(Signed::is_positive)
        .ok_or_else(|| {
            CliError::Usage(format!("--tail-eps {tail_eps} is not a positive rational"))
        })?;
    let data = count_curve(curve)?.resolve()?;
    let (q, g) = (data.q(), data.genus());
    if n == 0 {
        return Err(BunError::ZeroRank.into());
    }
    let shift = (i64::from(n) * i64::from(n) - 1) * (i64::from(g) - 1);
    let mut factors: Vec<(MotiveExpr, Rat)> = vec![
        (Atom::Jac.into(), big(data.jac_count())),
        (
            MotiveExpr::Atom(Atom::BGmC).twist(shift),
            q_pow(q, shift) / (int(q as i64) - int(1)),
        ),
    ];
    for i in 2..=i64::from(n) {
        factors.push((MotiveExpr::ZetaTwist(-i), data.zeta_special_value(i)?));
    }
    let corrupt = mutate.then(|| if n > 1 { factors.len() - 1 } else { 0 });

    let mut table = Table::default();
    table.row(["factor", "motivic", "harder", "status"]);
    let mut first_failure: Option<String> = None;
    let mut product = Rat::one();
    for (idx, (expr, expected)) in factors.iter().enumerate() {
        let mut got = realize_count(expr, &data)?;
        if corrupt == Some(idx) {
            got += int(1);
        }
        let ok = &got == expected;
        if !ok && first_failure.is_none() {
            first_failure = Some(format!("factor {expr}"));
        }
        table.row([
            expr.to_string(),
            fmt_rat(&got),
            fmt_rat(expected),
            status(ok),
        ]);
        product *= got;
    }

    let whole = realize_count(&bun_compact(n, g)?, &data)?;
    let harder = harder_count(n, &data)?;
    let total = if mutate { product } else { whole };
    let ok = total == harder;
    if !ok && first_failure.is_none() {
        first_failure = Some("total".into());
    }
    table.row([
        "total".to_string(),
        fmt_rat(&total),
        fmt_rat(&harder),
        status(ok),
    ]);

    if g == 0 {
        let (low, bound) = split_bundle_count_p1(n, 0, q, &eps)?;
        let high = &low + &bound;
        let ok = interval_contains(&low, &bound, &total);
        if !ok && first_failure.is_none() {
            first_failure = Some("oracle interval".into());
        }
        table.row([
            "oracle".to_string(),
            format!("[{}, {}]", fmt_rat(&low), fmt_rat(&high)),
            fmt_rat(&harder),
            status(ok),
        ]);
    }
    print!("{}", table.render(format));
    match first_failure {
        None => {
            println!("PASS n={n} q={q} g={g}");
            Ok(())
        }
        Some(what) => {
            println!("FAIL at {what}");
            Err(CliError::Mismatch(format!("first mismatch at {what}")))
        }
    }
}

fn status(ok: bool) -> String {
    if ok { "ok" } else { "FAIL" }.to_string()
}

pub fn census(
    curve: &CurveArgs,
    max_degree: u32,
    order: usize,
    format: Format,
) -> Result<(), CliError> {
    let spec = count_curve(curve)?;
    if matches!(spec.source, CurveSource::Weil(_)) {
        return Err(CliError::Usage("census needs an explicit model".into()));
    }
    let data = spec.resolve()?;
    let depth = max_degree.max(order as u32);
    if spec.enumerable_depth(depth) < depth {
        return Err(CurveError::TooLarge {
            size: spec.q.saturating_pow(depth),
        }
        .into());
    }
    let counts = spec.enumerate_counts(depth)?;
    let points = ClosedPointCensus::from_counts(&counts)?;
    let sym = data.sym_counts(order)?;
    let divisors = (0..=order)
        .map(|j| divisor_count(&points, j))
        .collect::<Result<Vec<_>, _>>()?;
    let reproduces = counts_from_weil(data.weil(), data.q(), depth as usize) == counts;
    let fe = satisfies_functional_equation(data.weil(), data.genus(), data.q()) && reproduces;

    let r = max_degree as usize;
    let mut table = Table::default();
    let row = |label: &str, values: Vec<String>| {
        std::iter::once(label.to_string())
            .chain(values)
            .collect::<Vec<_>>()
    };
    table.row(row(
        "p",
        counts.as_slice()[..r]
            .iter()
            .map(ToString::to_string)
            .collect(),
    ));
    table.row(row(
        "a",
        points.as_slice()[..r]
            .iter()
            .map(ToString::to_string)
            .collect(),
    ));
    table.row(row("P", data.weil().coeffs().iter().map(fmt_rat).collect()));
    table.row(row("sym", sym.iter().map(ToString::to_string).collect()));
    table.row(row(
        "divisors",
        divisors.iter().map(ToString::to_string).collect(),
    ));
    let sym_ok = sym == divisors;
    table.row(row(
        "sym_check",
        vec![if sym_ok { "OK" } else { "MISMATCH" }.to_string()],
    ));
    table.row(row(
        "fe_check",
        vec![if fe { "OK" } else { "FAIL" }.to_string()],
    ));
    print!("{}", table.render(format));
    if sym_ok && fe {
        Ok(())
    } else {
        Err(CliError::Mismatch("census columns disagree".into()))
    }
}
