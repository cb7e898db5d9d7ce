use std::io::Write;

use anyhow::{Context, Result};
use dilogint::clausen::cl2_value;
use dilogint::expr::evaluate;
use dilogint::format::{to_fixed, to_sci};
use dilogint::identities::{verify_many, IdentityId};
use dilogint::integrals::integral_i7_with;
use dilogint::lseries::dirichlet_l;
use dilogint::pslq::{pslq, PslqOutcome, DIGITS_PER_VALUE};
use dilogint::quadrature::QuadratureOptions;
use dilogint::zeta::hurwitz_zeta;
use dilogint::PrecisionContext;

use crate::args::*;
use crate::report::{ReportDocument, RunConfig};

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    VerificationFailed,
    ExecutionError,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::VerificationFailed => 1,
            Outcome::ExecutionError => 2,
        }
    }
}

/// Runs a parsed command line, writing results to `out`. `Err` means a
/// configuration or evaluation error (exit code 2).
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    match &cli.command {
        Command::Eval(a) => eval(a, out),
        Command::Integrate(a) => integrate(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Pslq(a) => run_pslq(a, out),
    }
}

fn context(digits: u32) -> Result<PrecisionContext> {
    Ok(PrecisionContext::new(digits)?)
}

fn eval(a: &EvalArgs, out: &mut dyn Write) -> Result<Outcome> {
    let digits = a.digits.unwrap_or(DEFAULT_EVAL_DIGITS);
    let ctx = context(digits)?;
    let arg =
        |name: &str, src: &str| evaluate(src, &ctx).with_context(|| format!("--{name} {src}"));
    let value = match &a.function {
        EvalFunction::Cl2 { theta } => cl2_value(&arg("theta", theta)?, &ctx)?,
        EvalFunction::Hurwitz { s, a } => hurwitz_zeta(&arg("s", s)?, &arg("a", a)?, &ctx)?,
        EvalFunction::Lseries { d, s } => dirichlet_l(*d, &arg("s", s)?, &ctx)?.value,
    };
    writeln!(out, "{}", to_fixed(&value, digits as usize))?;
    Ok(Outcome::Pass)
}

fn integrate(a: &IntegrateArgs, out: &mut dyn Write) -> Result<Outcome> {
    let digits = a.digits.unwrap_or(DEFAULT_VERIFY_DIGITS);
    let ctx = context(digits)?;
    let r = integral_i7_with(&ctx, QuadratureOptions::with_max_levels(a.max_levels))?;
    writeln!(
        out,
        "value          = {}",
        to_fixed(&r.value, digits as usize)
    )?;
    writeln!(out, "error_estimate = {}", to_sci(&r.error_estimate, 3))?;
    writeln!(out, "levels         = {}", r.levels_used)?;
    writeln!(out, "nodes          = {}", r.nodes_evaluated)?;
    Ok(Outcome::Pass)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let digits = a.digits.unwrap_or(DEFAULT_VERIFY_DIGITS);
    let ctx = context(digits)?;
    let ids: Vec<IdentityId> = if a.all {
        IdentityId::ALL.to_vec()
    } else {
        let mut ids = a
            .identity
            .iter()
            .map(|s| s.parse::<IdentityId>())
            .collect::<dilogint::Result<Vec<_>>>()?;
        // Report order follows the enumeration, not the command line.
        ids.sort();
        ids.dedup();
        ids
    };
    let opts = QuadratureOptions::with_max_levels(a.max_levels);
    let reports = verify_many(&ids, &ctx, a.required, opts, a.jobs as usize)?;
    let config = RunConfig {
        digits,
        guard: ctx.guard(),
        identities: ids,
        required_digits: a.required,
        max_levels: a.max_levels,
        jobs: a.jobs,
    };
    let doc = ReportDocument::new(config, &reports);
    let rendered = match a.format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json(),
    };
    match &a.out {
        Some(path) => {
            std::fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?
        }
        None => out.write_all(rendered.as_bytes())?,
    }
    for e in doc
        .reports
        .iter()
        .filter_map(|e| e.error.as_ref().map(|m| (e.id, m)))
    {
        eprintln!("dilogint: {}: {}", e.0, e.1);
    }
    Ok(match doc.exit_code() {
        0 => Outcome::Pass,
        1 => Outcome::VerificationFailed,
        _ => Outcome::ExecutionError,
    })
}

fn run_pslq(a: &PslqArgs, out: &mut dyn Write) -> Result<Outcome> {
    let n = a.values.len() as u32;
    let digits = a
        .digits
        .unwrap_or(DEFAULT_PSLQ_DIGITS.max(DIGITS_PER_VALUE * n));
    let ctx = context(digits)?;
    let values = a
        .values
        .iter()
        .map(|src| evaluate(src, &ctx).with_context(|| format!("evaluating `{src}`")))
        .collect::<Result<Vec<_>>>()?;
    match pslq(&values, &ctx, a.norm_bound)? {
        PslqOutcome::Found(rel) => {
            let coeffs: Vec<String> = rel.coefficients.iter().map(i64::to_string).collect();
            writeln!(out, "relation: ({})", coeffs.join(", "))?;
            writeln!(out, "residual: {}", to_sci(&rel.residual, 3))?;
        }
        PslqOutcome::Excluded {
            norm_lower_bound,
            iterations,
        } => {
            writeln!(out, "no relation found with max |c| <= {}", a.norm_bound)?;
            writeln!(
                out,
                "norm lower bound: {norm_lower_bound:.6e} after {iterations} iterations"
            )?;
        }
    }
    Ok(Outcome::Pass)
}
