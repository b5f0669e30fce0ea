//! Library side of the `fengrao` binary: argument types, row computation and
//! rendering. `main` only parses arguments, calls [`run`] and maps the outcome
//! to an exit code.

pub mod args;
pub mod render;

use std::fmt;
use std::time::Instant;

use fengrao_core::interval::{interval_feng_rao_number, rho_equality_predicted};
use fengrao_core::{
    brute_force_distance, divisors, divisors_of_set, enumerate_amenable, feng_rao_distance, nu,
    shadow, shadow_representatives, Configuration, Error, Int, IntervalSemigroup,
    NumericalSemigroup,
};

use args::{Cli, Command, Format, MethodArg, RunArgs, SemigroupArg};
use render::{helix, table, AmenableRow, CrossCheckRow, DistanceRow, DivisorRow, GridRow};

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_CAP: u8 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Cap(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SearchSpaceTooLarge { .. } => {
                CliError::Cap(format!("{e}; raise --max-brute or use another method"))
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Rendered output plus the exit code it should be reported with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
    pub warning: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: 0,
            warning: None,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Divisors { semigroup, x } => cmd_divisors(semigroup, *x, cli.format),
        Command::Distance { semigroup, m, run } => cmd_distance(semigroup, *m, run, cli),
        Command::Number { semigroup, run } => cmd_distance(semigroup, None, run, cli),
        Command::Grid { amax, bmax, rmax } => cmd_grid(*amax, *bmax, *rmax, cli.format),
        Command::Amenable {
            semigroup,
            m,
            r,
            shadows,
        } => cmd_amenable(semigroup, *m, *r, *shadows, cli.format),
    }
}

/// The semigroup, together with its interval form when it has one.
pub fn resolve(
    arg: &SemigroupArg,
) -> Result<(NumericalSemigroup, Option<IntervalSemigroup>), CliError> {
    match (&arg.gens, &arg.interval) {
        (Some(gens), None) => {
            let s = NumericalSemigroup::from_generators(gens)?;
            let is = IntervalSemigroup::detect(&s);
            Ok((s, is))
        }
        (None, Some(iv)) => {
            let is = IntervalSemigroup::new(iv.a, iv.b)?;
            Ok((is.semigroup().clone(), Some(is)))
        }
        _ => Err(CliError::Input(
            "give exactly one of --gens and --interval".into(),
        )),
    }
}

/// `m`, defaulting to `2c - 1`. Smaller values are refused.
pub fn base(s: &NumericalSemigroup, m: Option<Int>) -> Result<Int, CliError> {
    let min = s.asymptotic_base();
    let m = m.unwrap_or(min);
    if m < min {
        return Err(CliError::Input(format!(
            "m = {m} is below 2c - 1 = {min}; delta = m + 1 - 2g + E(S, r) only holds from 2c - 1 on"
        )));
    }
    Ok(m)
}

fn cmd_divisors(arg: &SemigroupArg, x: Int, format: Format) -> Result<Output, CliError> {
    let (s, _) = resolve(arg)?;
    let d = divisors(&s, x)?;
    let row = DivisorRow {
        x,
        count: d.len(),
        divisors: d.elements().to_vec(),
    };
    let mut text = table(std::slice::from_ref(&row), format, false);
    if format == Format::Ascii {
        text.push('\n');
        text.push_str(&helix(&s, 0, x, |y| if d.contains(y) { '*' } else { ' ' }));
    }
    Ok(Output::ok(text))
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<f64> {
    timing.then(|| (start.elapsed().as_secs_f64() * 1e6).round() / 1e3)
}

/// `(delta, E)` by the closed form at base `m`.
fn interval_values(
    s: &NumericalSemigroup,
    is: &IntervalSemigroup,
    m: Int,
    r: usize,
) -> Result<(Int, Int), CliError> {
    let e = interval_feng_rao_number(is.a(), is.b(), r as Int)?;
    Ok((m + 1 - 2 * s.genus() + e, e))
}

fn cmd_distance(
    arg: &SemigroupArg,
    m: Option<Int>,
    run: &RunArgs,
    cli: &Cli,
) -> Result<Output, CliError> {
    let (s, is) = resolve(arg)?;
    let m = base(&s, m)?;
    let method = match (run.method, &is) {
        (MethodArg::Auto, Some(_)) => MethodArg::Interval,
        (MethodArg::Auto, None) => MethodArg::Generic,
        (MethodArg::Interval, None) => {
            return Err(CliError::Input(format!(
                "{s} is not generated by an interval"
            )));
        }
        (other, _) => other,
    };
    if method == MethodArg::All {
        return cross_check(&s, is.as_ref(), m, run, cli);
    }

    let mut rows = Vec::new();
    let mut witnesses: Vec<Option<Configuration>> = Vec::new();
    for r in run.r.iter() {
        let start = Instant::now();
        let (delta, e, name, witness) = match method {
            MethodArg::Generic => {
                let res = feng_rao_distance(&s, m, r)?;
                (res.delta, res.e_number, "generic", res.witness)
            }
            MethodArg::Brute => {
                let res = brute_force_distance(&s, m, r, run.max_brute)?;
                (res.delta, res.e_number, "brute", res.witness)
            }
            MethodArg::Interval => {
                let (delta, e) = interval_values(&s, is.as_ref().expect("checked above"), m, r)?;
                (delta, e, "interval", None)
            }
            MethodArg::Auto | MethodArg::All => unreachable!(),
        };
        rows.push(DistanceRow {
            r,
            m,
            delta,
            e,
            method: name.to_string(),
            elapsed_ms: elapsed_ms(start, cli.timing),
        });
        witnesses.push(witness);
    }
    let mut text = table(&rows, cli.format, cli.timing);
    if cli.format == Format::Ascii {
        for (row, w) in rows.iter().zip(&witnesses) {
            if let Some(w) = w {
                text.push_str(&witness_picture(&s, row.r, w));
            }
        }
    }
    Ok(Output::ok(text))
}

fn witness_picture(s: &NumericalSemigroup, r: usize, w: &Configuration) -> String {
    let d = divisors_of_set(s, w.elements()).expect("witness elements lie in S");
    let hi = w.max().unwrap_or(w.base());
    let mut out = format!("\nr = {r}, witness {w} (* chosen, + other divisors)\n");
    out.push_str(&helix(s, w.base(), hi, |x| {
        if w.contains(x) {
            '*'
        } else if d.contains(x) {
            '+'
        } else {
            ' '
        }
    }));
    out
}

fn cross_check(
    s: &NumericalSemigroup,
    is: Option<&IntervalSemigroup>,
    m: Int,
    run: &RunArgs,
    cli: &Cli,
) -> Result<Output, CliError> {
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for r in run.r.iter() {
        let start = Instant::now();
        let generic = feng_rao_distance(s, m, r)?;
        let brute = brute_force_distance(s, m, r, run.max_brute)?;
        let interval = match is {
            Some(is) => Some(interval_values(s, is, m, r)?.1),
            None => None,
        };
        let agree =
            generic.e_number == brute.e_number && interval.is_none_or(|e| e == generic.e_number);
        if !agree {
            bad.push(r);
        }
        rows.push(CrossCheckRow {
            r,
            m,
            delta: generic.delta,
            e: generic.e_number,
            generic: generic.e_number,
            interval,
            brute: brute.e_number,
            agree,
            elapsed_ms: elapsed_ms(start, cli.timing),
        });
    }
    let text = table(&rows, cli.format, cli.timing);
    if bad.is_empty() {
        Ok(Output::ok(text))
    } else {
        Ok(Output {
            text,
            code: EXIT_MISMATCH,
            warning: Some(format!("methods disagree for r in {bad:?}")),
        })
    }
}

/// Rows of the `(a, b, r)` grid, ordered by `a`, then `b`, then `r`.
pub fn grid_rows(amax: Int, bmax: Int, rmax: Int) -> Result<Vec<GridRow>, CliError> {
    if amax < 1 || bmax < 1 || rmax < 1 {
        return Err(CliError::Input(format!(
            "grid bounds must be at least 1, got amax = {amax}, bmax = {bmax}, rmax = {rmax}"
        )));
    }
    let mut rows = Vec::new();
    for a in 2..=amax {
        for b in 1..=bmax.min(a - 1) {
            let is = IntervalSemigroup::new(a, b)?;
            for r in 1..=rmax {
                let e = interval_feng_rao_number(a, b, r)?;
                let rho = is.semigroup().rho(r as usize);
                rows.push(GridRow {
                    a,
                    b,
                    r: r as usize,
                    e,
                    rho,
                    e_equals_rho: e == rho,
                    rho_predicted: rho_equality_predicted(a, b, r)?,
                });
            }
        }
    }
    Ok(rows)
}

fn cmd_grid(amax: Int, bmax: Int, rmax: Int, format: Format) -> Result<Output, CliError> {
    let rows = grid_rows(amax, bmax, rmax)?;
    Ok(Output::ok(table(&rows, format, false)))
}

fn cmd_amenable(
    arg: &SemigroupArg,
    m: Option<Int>,
    r: usize,
    shadows: bool,
    format: Format,
) -> Result<Output, CliError> {
    let (s, _) = resolve(arg)?;
    let m = base(&s, m)?;
    let configs: Vec<Configuration> = if shadows {
        shadow_representatives(&s, m, r)?.collect()
    } else {
        enumerate_amenable(&s, m, r)?.collect()
    };
    let mut rows = Vec::with_capacity(configs.len());
    for (i, c) in configs.iter().enumerate() {
        rows.push(AmenableRow {
            index: i + 1,
            elements: c.elements().to_vec(),
            shadow: shadow(&s, c).elements().to_vec(),
            nu: nu(&s, c.elements())?,
        });
    }
    Ok(Output::ok(table(&rows, format, false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn go(argv: &[&str]) -> Result<Output, CliError> {
        let mut full = vec!["fengrao"];
        full.extend_from_slice(argv);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn divisors_of_sixty() {
        let out = go(&["divisors", "--gens", "9,13,15", "--x", "60"]).unwrap();
        assert_eq!(
            out.text,
            "x,count,divisors\n60,13,0 9 15 18 24 27 30 33 36 42 45 51 60\n"
        );
        let out = go(&["divisors", "--gens", "1", "--x", "5"]).unwrap();
        assert_eq!(out.text, "x,count,divisors\n5,6,0 1 2 3 4 5\n");
        let err = go(&["divisors", "--gens", "9,13,15", "--x", "47"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INPUT);
        let err = go(&["divisors", "--gens", "4,6", "--x", "8"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INPUT);
    }

    #[test]
    fn numbers() {
        let out = go(&[
            "number",
            "--gens",
            "19,20,21,22,23",
            "--r",
            "1",
            "--method",
            "generic",
        ])
        .unwrap();
        assert_eq!(out.text, "r,m,delta,E,method\n1,189,90,0,generic\n");
        let out = go(&["number", "--interval", "5,2", "--r", "3"]).unwrap();
        assert_eq!(out.text, "r,m,delta,E,method\n3,19,14,6,interval\n");
        let auto = go(&[
            "number", "--gens", "5,6,7", "--r", "1..6", "--format", "json",
        ])
        .unwrap();
        let generic = go(&[
            "number", "--gens", "5,6,7", "--r", "1..6", "--format", "json", "--method", "generic",
        ])
        .unwrap();
        let a: Vec<DistanceRow> = serde_json::from_str(&auto.text).unwrap();
        let g: Vec<DistanceRow> = serde_json::from_str(&generic.text).unwrap();
        assert_eq!(
            a.iter().map(|r| (r.delta, r.e)).collect::<Vec<_>>(),
            g.iter().map(|r| (r.delta, r.e)).collect::<Vec<_>>()
        );
        assert!(a.iter().all(|r| r.method == "interval"));
    }

    #[test]
    fn base_is_checked() {
        let err = go(&["distance", "--gens", "4,5", "--m", "22"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INPUT);
        assert!(err.to_string().contains("2c - 1 = 23"));
        let out = go(&["distance", "--gens", "4,5", "--m", "30", "--r", "2"]).unwrap();
        assert_eq!(out.text, "r,m,delta,E,method\n2,30,23,4,interval\n");
    }

    #[test]
    fn interval_method_needs_interval_input() {
        let err = go(&["number", "--gens", "9,13,15", "--method", "interval"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INPUT);
        let err = go(&["number", "--interval", "3,3"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INPUT);
    }

    #[test]
    fn brute_cap() {
        let err = go(&[
            "number",
            "--gens",
            "4,5",
            "--r",
            "6",
            "--method",
            "brute",
            "--max-brute",
            "10",
        ])
        .unwrap_err();
        assert_eq!(err.exit_code(), EXIT_CAP);
        let err = go(&[
            "number",
            "--gens",
            "4,5",
            "--r",
            "6",
            "--method",
            "all",
            "--max-brute",
            "10",
        ])
        .unwrap_err();
        assert_eq!(err.exit_code(), EXIT_CAP);
    }

    #[test]
    fn cross_check_without_interval() {
        let out = go(&[
            "number", "--gens", "9,13,15", "--r", "1..2", "--method", "all",
        ])
        .unwrap();
        assert_eq!(out.code, 0);
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines[0], "r,m,delta,E,generic,interval,brute,agree");
        assert!(lines[1].starts_with("1,95,48,0,0,,0,true"));
    }

    #[test]
    fn grid_rho_flags() {
        let rows = grid_rows(5, 2, 10).unwrap();
        assert_eq!(
            rows[0],
            GridRow {
                a: 2,
                b: 1,
                r: 1,
                e: 0,
                rho: 0,
                e_equals_rho: true,
                rho_predicted: true
            }
        );
        let c41 = rows.iter().find(|g| (g.a, g.b, g.r) == (4, 1, 2)).unwrap();
        assert_eq!(c41.e, 4);
        let flags: Vec<usize> = rows
            .iter()
            .filter(|g| (g.a, g.b) == (5, 2) && g.e_equals_rho)
            .map(|g| g.r)
            .collect();
        assert_eq!(flags, vec![1, 3, 4, 7, 8, 9, 10]);
        assert!(rows.iter().all(|g| g.e_equals_rho == g.rho_predicted));
        assert!(grid_rows(0, 1, 1).is_err());
        assert!(grid_rows(1, 1, 1).unwrap().is_empty());
    }

    #[test]
    fn amenable_listing() {
        let out = go(&["amenable", "--gens", "4,5", "--r", "2"]).unwrap();
        assert_eq!(
            out.text,
            "index,elements,shadow,nu\n1,23 24,23 24,16\n2,23 25,23 25,18\n3,23 26,23 26,18\n4,23 27,23 27,16\n"
        );
        let reps = go(&[
            "amenable",
            "--gens",
            "4,5",
            "--r",
            "3",
            "--shadows",
            "--format",
            "json",
        ])
        .unwrap();
        let rows: Vec<AmenableRow> = serde_json::from_str(&reps.text).unwrap();
        assert!(!rows.is_empty());
    }

    #[test]
    fn ascii_views() {
        let out = go(&["divisors", "--gens", "4,5", "--x", "9", "--format", "ascii"]).unwrap();
        assert!(out.text.ends_with("8  9*\n4* 5* .  .\n0* .  .  .\n"));
        let out = go(&[
            "number", "--gens", "4,5", "--r", "2", "--method", "generic", "--format", "ascii",
        ])
        .unwrap();
        assert!(out.text.contains("witness {23,24}"));
    }
}
