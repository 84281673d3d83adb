pub mod analyze;
pub mod audit;
pub mod canonical;
pub mod classify;
pub mod sample;
pub mod sweep;

use anyhow::anyhow;
use cohere_core::CanonicalThreeQubit;

use crate::args::StateArgs;
use crate::failure::{CmdResult, Failure};

/// Allowed deviation of the sum of squared amplitudes from 1 before the
/// parameters are renormalized.
pub const NORMALIZATION_TOL: f64 = 1e-8;

/// Canonical parameters from the command line, renormalized exactly, with
/// the deviation that was corrected.
pub struct ParsedState {
    pub params: CanonicalThreeQubit,
    pub normalization_deviation: f64,
}

pub fn parse_state(args: &StateArgs) -> CmdResult<ParsedState> {
    let tokens: Vec<&str> = args.lambdas.iter().map(|t| t.trim()).collect();
    let auto_last = tokens.len() == 5 && tokens[4].eq_ignore_ascii_case("auto");
    let complete_last = args.normalize_last || auto_last;
    let given = if auto_last { &tokens[..4] } else { &tokens[..] };
    let expected = if complete_last { 4 } else { 5 };
    if given.len() != expected {
        return Err(Failure::usage(anyhow!(
            "--lambdas needs {expected} values{}, got {}",
            if complete_last {
                " with --normalize-last"
            } else {
                ""
            },
            given.len()
        )));
    }
    let mut lambdas = [0.0; 5];
    for (i, token) in given.iter().enumerate() {
        let value: f64 = token
            .parse()
            .map_err(|_| Failure::usage(anyhow!("lambda{i} = {token:?} is not a number")))?;
        if !value.is_finite() || value < 0.0 {
            return Err(Failure::invalid_input(anyhow!(
                "lambda{i} = {value} must be a finite non-negative real"
            )));
        }
        lambdas[i] = value;
    }
    let partial: f64 = lambdas[..4].iter().map(|l| l * l).sum();
    if complete_last {
        if partial > 1.0 + NORMALIZATION_TOL {
            return Err(Failure::invalid_input(anyhow!(
                "lambda0..lambda3 already exceed unit norm: sum of squares deviates from 1 by {:e}",
                partial - 1.0
            )));
        }
        lambdas[4] = (1.0 - partial).max(0.0).sqrt();
    }
    let norm: f64 = lambdas.iter().map(|l| l * l).sum();
    let deviation = norm - 1.0;
    if deviation.abs() > NORMALIZATION_TOL {
        return Err(Failure::invalid_input(anyhow!(
            "sum of squared lambdas deviates from 1 by {deviation:e} (tolerance {NORMALIZATION_TOL:e})"
        )));
    }
    let scale = norm.sqrt();
    let params = CanonicalThreeQubit::new(lambdas.map(|l| l / scale), args.theta)?;
    Ok(ParsedState {
        params,
        normalization_deviation: deviation,
    })
}

/// Short description of the input for run headers.
pub fn describe_state(p: &CanonicalThreeQubit) -> String {
    let l = p.lambdas();
    format!(
        "canonical(lambdas=[{}, {}, {}, {}, {}], theta={})",
        l[0],
        l[1],
        l[2],
        l[3],
        l[4],
        p.theta()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::failure::{EXIT_INVALID_INPUT, EXIT_USAGE};

    fn state(lambdas: &[&str], normalize_last: bool, theta: f64) -> CmdResult<ParsedState> {
        parse_state(&StateArgs {
            lambdas: lambdas.iter().map(|s| s.to_string()).collect(),
            normalize_last,
            theta,
        })
    }

    #[test]
    fn completes_last_amplitude() {
        let s = state(&["0.6", "0.2", "0.3", "0.5"], true, 0.0).unwrap();
        assert!((s.params.lambda(4) - 0.26f64.sqrt()).abs() < 1e-15);
        let auto = state(&["0.6", "0.2", "0.3", "0.5", "auto"], false, 0.0).unwrap();
        assert_eq!(auto.params, s.params);
    }

    #[test]
    fn accepts_rounded_input_and_renormalizes() {
        let s = state(&["0.70710678", "0", "0", "0", "0.70710678"], false, 0.0).unwrap();
        let norm: f64 = s.params.lambdas().iter().map(|l| l * l).sum();
        assert!((norm - 1.0).abs() < 1e-15);
        assert!(s.normalization_deviation.abs() < 1e-8);
    }

    #[test]
    fn rejects_bad_input() {
        let code = |r: CmdResult<ParsedState>| r.err().map(|f| f.code);
        assert_eq!(
            code(state(&["0.5", "0.5", "0.5", "0.5", "0.5"], false, 0.0)),
            Some(EXIT_INVALID_INPUT)
        );
        assert_eq!(
            code(state(&["0.9", "0.9", "0", "0"], true, 0.0)),
            Some(EXIT_INVALID_INPUT)
        );
        assert_eq!(
            code(state(&["1", "0", "0", "0"], false, 0.0)),
            Some(EXIT_USAGE)
        );
        assert_eq!(
            code(state(&["1", "x", "0", "0", "0"], false, 0.0)),
            Some(EXIT_USAGE)
        );
        assert_eq!(
            code(state(&["-1", "0", "0", "0", "0"], false, 0.0)),
            Some(EXIT_INVALID_INPUT)
        );
        assert_eq!(
            code(state(&["1", "0", "0", "0", "0"], false, 4.0)),
            Some(EXIT_INVALID_INPUT)
        );
    }
}
