mod args;
mod output;

use std::process::ExitCode;

use clap::Parser;
use dyckgen::cluster::log_genfun_restricted;
use dyckgen::genfun::{continued_fraction, genfun, GenSpec};
use dyckgen::oracle;
use dyckgen::touchdown::{tilde_genfun, tilde_genfun_from_untagged};
use dyckgen::verify::{run_suites, Suite, VerifyParams};
use dyckgen::{Error, Guards, Rat, RatSeries, VERSION};

use args::{Cli, ClusterArgs, Command, Format, GenfunArgs, Method, PathArgs, TableArgs, VerifyArgs};
use output::{ClusterRecord, ClusterTerm, Coeff, Record, SpecEcho, Term};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Why a command stopped early.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonUnitConstantTerm | Error::BadConstantTerm | Error::InexactDivision => {
                Failure::Internal(e.to_string())
            }
            Error::GuardExceeded { .. } | Error::HeightTooLarge { .. } => Failure::Usage(format!(
                "{e} (set {}=1 to lift the limit)",
                dyckgen::guards::GUARD_OVERRIDE_ENV
            )),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Genfun(a) => cmd_genfun(&a),
        Command::Table(a) => cmd_table(&a),
        Command::Cluster(a) => cmd_cluster(&a),
        Command::Verify(a) => return cmd_verify(&a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn gen_spec(p: &PathArgs) -> GenSpec {
    GenSpec::new(p.k.0, p.m, p.n, p.max_len).with_convention(p.convention)
}

fn render(record: &Record, format: Format, touch: bool, counts: bool) -> Result<String, Failure> {
    match format {
        Format::Json => serde_json::to_string_pretty(record)
            .map(|s| s + "\n")
            .map_err(|e| Failure::Internal(e.to_string())),
        Format::Csv => Ok(output::terms_csv(&record.terms, touch, counts)),
    }
}

fn by_method(spec: &GenSpec, method: Method) -> Result<RatSeries, Failure> {
    match method {
        Method::Determinant => Ok(genfun::<Rat>(spec)?.series),
        Method::ContinuedFraction => {
            if spec.m != 0 || spec.n != 0 {
                return Err(Failure::Usage("continued-fraction needs --m 0 --n 0".into()));
            }
            spec.validate()?;
            Ok(continued_fraction::<Rat>(spec.ceiling, spec.order))
        }
        Method::ClusterExp => {
            let log = log_genfun_restricted::<Rat>(spec.ceiling, spec.m, spec.n, spec.order / 2)?;
            Ok(log.to_series(spec.order)?)
        }
    }
}

fn cmd_genfun(a: &GenfunArgs) -> Result<String, Failure> {
    let p = &a.path;
    let spec = gen_spec(p);
    let echo = SpecEcho::new(p.k.0, p.m, p.n, p.max_len, a.touchdown);
    let terms: Vec<Term> = if a.touchdown {
        if a.method != Method::Determinant {
            return Err(Failure::Usage(
                "--touchdown is only available with --method determinant".into(),
            ));
        }
        if p.m > p.n {
            return Err(Failure::Usage("--touchdown needs --m ≤ --n".into()));
        }
        let s = tilde_genfun::<Rat>(&spec)?.series;
        if a.cross_check {
            let alt = tilde_genfun_from_untagged::<Rat>(&spec)?.series;
            if let Some(l) = s.first_difference(&alt) {
                return Err(Failure::Internal(format!("touchdown forms differ at order {l}")));
            }
        }
        output::touch_terms(&s, p.convention)
    } else {
        let s = by_method(&spec, a.method)?;
        if a.cross_check {
            for other in [Method::Determinant, Method::ContinuedFraction, Method::ClusterExp] {
                if other == Method::ContinuedFraction && (p.m != 0 || p.n != 0) {
                    continue;
                }
                if let Some(l) = s.first_difference(&by_method(&spec, other)?) {
                    return Err(Failure::Internal(format!(
                        "{} and {} differ at order {l}",
                        a.method.name(),
                        other.name()
                    )));
                }
            }
        }
        output::series_terms(&s, p.convention)
    };
    let record = Record {
        spec: echo,
        convention: p.convention.name().into(),
        terms,
        method: a.method.name().into(),
        version: VERSION.into(),
    };
    render(&record, p.format, a.touchdown, false)
}

fn cmd_table(a: &TableArgs) -> Result<String, Failure> {
    let p = &a.path;
    let spec = gen_spec(p);
    spec.validate()?;
    let table = oracle::enumerate(spec.effective_k(), p.m, p.n, p.max_len, &Guards::from_env())?;
    let conv = p.convention;
    let term = |l: usize, area: i64, s: Option<u32>, count: String| Term {
        l: conv.exponent(l as i64).into(),
        area: conv.exponent(area).into(),
        s,
        coeff: Coeff {
            num: count,
            den: "1".into(),
        },
    };
    let terms: Vec<Term> = if a.touchdowns {
        table
            .rows()
            .map(|(l, area, s, c)| term(l, area, Some(s), c.to_string()))
            .collect()
    } else {
        table
            .rows_any_touch()
            .into_iter()
            .map(|(l, area, c)| term(l, area, None, c.to_string()))
            .collect()
    };
    let record = Record {
        spec: SpecEcho::new(p.k.0, p.m, p.n, p.max_len, a.touchdowns),
        convention: conv.name().into(),
        terms,
        method: "enumeration".into(),
        version: VERSION.into(),
    };
    render(&record, p.format, a.touchdowns, true)
}

fn cmd_cluster(a: &ClusterArgs) -> Result<String, Failure> {
    let log = log_genfun_restricted::<Rat>(a.k.0, a.m, a.n, a.a_max)?;
    let mut terms = Vec::new();
    for p in &log.p {
        for (e, c) in p.value.terms() {
            terms.push(ClusterTerm {
                a: p.a,
                q: e / 2,
                coeff: c.into(),
            });
        }
    }
    let record = ClusterRecord {
        spec: SpecEcho::new(a.k.0, a.m, a.n, 2 * a.a_max, false),
        prefactor: output::Prefactor {
            zeta: log.prefactor.zeta,
            theta: log.prefactor.theta,
        },
        terms,
        version: VERSION.into(),
    };
    match a.format {
        Format::Json => serde_json::to_string_pretty(&record)
            .map(|s| s + "\n")
            .map_err(|e| Failure::Internal(e.to_string())),
        Format::Csv => Ok(output::cluster_csv(&record.terms)),
    }
}

fn cmd_verify(a: &VerifyArgs) -> ExitCode {
    let Some(suites) = Suite::parse_selection(&a.suite) else {
        eprintln!("error: unknown suite `{}`", a.suite);
        return ExitCode::from(EXIT_USAGE);
    };
    let params = VerifyParams {
        k_max: a.k_max,
        len_max: a.len_max,
        guards: Guards::from_env(),
    };
    let reports = match run_suites(&suites, &params) {
        Ok(r) => r,
        Err(e) => {
            let (code, msg) = match Failure::from(e) {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    let mut ok = true;
    for report in &reports {
        for check in &report.checks {
            if a.verbose || !check.holds() {
                println!("{}: {check}", report.suite);
            }
        }
        let failed = report.failures().count();
        let status = if failed == 0 { "PASS" } else { "FAIL" };
        println!(
            "{status} suite {} ({} checks, {failed} failed)",
            report.suite,
            report.checks.len()
        );
        ok &= failed == 0;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes() {
        assert!(matches!(Failure::from(Error::InexactDivision), Failure::Internal(_)));
        assert!(matches!(
            Failure::from(Error::NonUnitConstantTerm),
            Failure::Internal(_)
        ));
        assert!(matches!(
            Failure::from(Error::SpecOutOfRange { k: 1, m: 2, n: 0 }),
            Failure::Usage(_)
        ));
        let Failure::Usage(msg) = Failure::from(Error::HeightTooLarge { k: 40, max: 32 }) else {
            panic!()
        };
        assert!(msg.contains("DYCKGEN_GUARD_OVERRIDE"));
    }
}
