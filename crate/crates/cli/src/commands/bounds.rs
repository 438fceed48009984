use cubeideal::bounds::{self, VerifyOptions};
use serde_json::json;

use super::parse_set_system;
use crate::report::{Recorder, Status};
use crate::{input_error, BoundsCmd, CliResult, Common, Output};

/// Published values of γ̂ by λ.
#[allow(clippy::approx_constant)]
const GAMMA_HAT: [(f64, f64); 4] = [(3.0, 0.0566330), (1e2, 0.6371456), (1e6, 0.6931323), (1e12, 0.6931472)];
/// Published values of γ at `ε = 0.1`, `ρ = 3.462` by λ.
const GAMMA_FIXED: [(f64, f64); 2] = [(3.0, 0.0012451), (1e2, 0.0298718)];
const DEFAULT_EPSILON: f64 = 0.1;
const DEFAULT_RHO: f64 = 3.462;
const CONSTANT_TOL: f64 = 1e-6;
const OPTIMUM: f64 = 0.0312814;
const OPTIMUM_TOL: f64 = 1e-4;

fn parse_range(s: &str) -> CliResult<(u64, u64)> {
    let bad = || input_error(format!("--sweep expects `a..b`, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn run(c: &Common, cmd: &BoundsCmd) -> CliResult<Output> {
    let name = match cmd {
        BoundsCmd::Rates { .. } => "bounds rates",
        BoundsCmd::Gamma { .. } => "bounds gamma",
        BoundsCmd::Optimize { .. } => "bounds optimize",
        BoundsCmd::Theta => "bounds theta",
        BoundsCmd::Entropy { .. } => "bounds entropy",
        BoundsCmd::Verify { .. } => "bounds verify",
    };
    match cmd {
        BoundsCmd::Rates { sweep: Some(range) } => {
            let (a, b) = parse_range(range)?;
            let mut out = String::from("# lambda f g h\n");
            for l in a..=b {
                let r = bounds::rates(l)?;
                out.push_str(&format!("{l} {:.9} {:.9} {:.9}\n", r.f, r.g, r.h));
            }
            return Ok(Output::Text(out));
        }
        BoundsCmd::Verify { assume_cube_ideal } => {
            let input = parse_set_system(c)?;
            let report =
                bounds::verify_theorems(&input.value, VerifyOptions { assume_cube_ideal: *assume_cube_ideal })?;
            let mut rec = Recorder::new(name, Some(input.digest));
            rec.info(
                "summary",
                json!({
                    "n": report.n,
                    "size": report.size,
                    "connectivity": report.connectivity,
                    "vc_dimension": report.vc_dimension,
                    "d": report.d,
                    "kappa": report.kappa,
                    "core_size": report.core_size,
                    "cube_ideal": report.cube_ideal,
                    "polyhedral": report.polyhedral,
                }),
            );
            for row in &report.rows {
                let status = if row.asserted { Status::from_bool(row.pass) } else { Status::Info };
                rec.push(&row.theorem, status, serde_json::to_value(row).expect("serializes"), Vec::new());
            }
            return Ok(Output::Report(rec.finish()));
        }
        _ => {}
    }
    let mut rec = Recorder::new(name, None);
    match cmd {
        BoundsCmd::Rates { .. } => {
            let l = c.lambda_int(3)?.unwrap_or(3);
            let r = bounds::rates(l)?;
            rec.info("rates", serde_json::to_value(r).expect("serializes"));
        }
        BoundsCmd::Gamma { epsilon, rho } => match c.lambda {
            Some(l) => {
                let eps = epsilon.unwrap_or(DEFAULT_EPSILON);
                let rho = rho.unwrap_or(DEFAULT_RHO);
                rec.info("gamma-hat", json!({"lambda": l, "gamma_hat": bounds::gamma_hat(l)?}));
                let p = bounds::gamma_at_lambda(l, eps, rho)?;
                rec.info("gamma", serde_json::to_value(p).expect("serializes"));
            }
            None => {
                for (l, expected) in GAMMA_HAT {
                    let v = bounds::gamma_hat(l)?;
                    let err = (v - expected).abs();
                    rec.push(
                        &format!("gamma-hat lambda={l:e}"),
                        Status::from_bool(err <= CONSTANT_TOL),
                        json!({"lambda": l, "value": v, "expected": expected, "error": err}),
                        Vec::new(),
                    );
                }
                for (l, expected) in GAMMA_FIXED {
                    let p = bounds::gamma_at_lambda(l, DEFAULT_EPSILON, DEFAULT_RHO)?;
                    let err = (p.gamma - expected).abs();
                    rec.push(
                        &format!("gamma lambda={l:e}"),
                        Status::from_bool(err <= CONSTANT_TOL && p.valid),
                        json!({"lambda": l, "epsilon": p.epsilon, "rho": p.rho, "value": p.gamma, "expected": expected, "error": err, "valid": p.valid}),
                        Vec::new(),
                    );
                }
            }
        },
        BoundsCmd::Optimize { alpha } => {
            let l = c.lambda.unwrap_or(1e6);
            let alpha = alpha.unwrap_or(1.0);
            let beta = match c.beta {
                Some(b) => b,
                None if l > 2.0 => l / (l - 2.0),
                None => return Err(input_error("--lambda must exceed 2")),
            };
            let p = bounds::optimize_gamma(alpha, beta)?;
            rec.info("optimum", serde_json::to_value(p).expect("serializes"));
            if c.beta.is_none() && alpha == 1.0 && l >= 1e6 {
                let err = (p.gamma - OPTIMUM).abs();
                rec.push(
                    "optimum-reproduction",
                    Status::from_bool(err <= OPTIMUM_TOL),
                    json!({"value": p.gamma, "expected": OPTIMUM, "error": err}),
                    Vec::new(),
                );
            }
            if c.beta.is_none() {
                let hat = bounds::gamma_hat(l)?;
                rec.push(
                    "gamma-hat-dominates",
                    Status::from_bool(hat > 20.0 * p.gamma),
                    json!({"gamma_hat": hat, "twenty_gamma": 20.0 * p.gamma}),
                    Vec::new(),
                );
            }
        }
        BoundsCmd::Theta => {
            let l = c.lambda_int(3)?.unwrap_or(3);
            let beta = c.beta.unwrap_or(1.0 / 3.0);
            let theta = bounds::theta_faces(l, beta)?;
            rec.push(
                "theta",
                Status::from_bool(theta > 0.0),
                json!({"lambda": l, "beta": beta, "theta": theta}),
                Vec::new(),
            );
        }
        BoundsCmd::Entropy { value, inverse } => {
            if *inverse {
                rec.info("entropy-inverse", json!({"y": value, "x": bounds::entropy_inv(*value)?}));
            } else {
                rec.info("entropy", json!({"x": value, "h": bounds::entropy(*value)?}));
            }
            if let Some(l) = c.lambda_int(3)? {
                let r = bounds::rates(l)?;
                rec.info("rates", serde_json::to_value(r).expect("serializes"));
            }
        }
        BoundsCmd::Verify { .. } => unreachable!("handled above"),
    }
    Ok(Output::Report(rec.finish()))
}
