use cubeideal::clutter::{self, Clutter, MAX_GROUND_IDEAL};
use cubeideal::rational::format_vector;
use serde_json::{json, Value};

use super::{one_based, parse_clutter, parse_set_system, zero_based};
use crate::report::{Recorder, Status};
use crate::{CliResult, ClutterCmd, Common, Output};

fn members_json(c: &Clutter) -> Vec<Value> {
    c.members().iter().map(|&m| json!(one_based(m))).collect()
}

pub fn run(c: &Common, cmd: &ClutterCmd) -> CliResult<Output> {
    if let ClutterCmd::Cuboid = cmd {
        let input = parse_set_system(c)?;
        let cub = clutter::cuboid(&input.value)?;
        let mut rec = Recorder::new("clutter cuboid", Some(input.digest));
        rec.info("cuboid", json!({"ground": cub.ground(), "members": cub.len(), "clutter": cub.to_text()}));
        return Ok(Output::Report(rec.finish()));
    }
    let input = parse_clutter(c)?;
    let cl = &input.value;
    let name = match cmd {
        ClutterCmd::Blocker => "clutter blocker",
        ClutterCmd::Tau => "clutter tau",
        ClutterCmd::Ideal => "clutter ideal",
        ClutterCmd::Cuboid => unreachable!("handled above"),
        ClutterCmd::Core => "clutter core",
        ClutterCmd::Minor { .. } => "clutter minor",
        ClutterCmd::Widthlength => "clutter widthlength",
        ClutterCmd::Mu => "clutter mu",
    };
    let mut rec = Recorder::new(name, Some(input.digest.clone()));
    match cmd {
        ClutterCmd::Blocker => {
            let b = clutter::blocker(cl)?;
            let back = clutter::blocker(&b)?;
            rec.push(
                "blocker",
                Status::Info,
                json!({"ground": b.ground(), "members": b.len(), "clutter": b.to_text()}),
                members_json(&b),
            );
            rec.push("blocker-involution", Status::from_bool(&back == cl), json!({}), Vec::new());
        }
        ClutterCmd::Tau => {
            let cm = clutter::is_tau_cover_minimal(cl)?;
            rec.info("covering-number", json!({"tau": cm.tau, "cover_minimal": cm.verdict}));
        }
        ClutterCmd::Ideal => {
            let v = clutter::is_ideal(cl)?;
            let b = clutter::blocker(cl)?;
            let witnesses = v.witness.iter().map(|w| json!(format_vector(w))).collect();
            rec.push(
                "ideal",
                Status::Info,
                json!({"ideal": v.verdict, "witness_is_q_vertex": v.witness_is_q_vertex, "degenerate": v.degenerate}),
                witnesses,
            );
            if !cl.is_degenerate() && b.ground() <= MAX_GROUND_IDEAL {
                let vb = clutter::is_ideal(&b)?;
                rec.push(
                    "blocker-ideal",
                    Status::from_bool(vb.verdict == v.verdict),
                    json!({"ideal": vb.verdict}),
                    Vec::new(),
                );
            }
        }
        ClutterCmd::Cuboid => unreachable!("handled above"),
        ClutterCmd::Core => {
            let core = clutter::core_clutter(cl)?;
            rec.push(
                "core",
                Status::Info,
                json!({"members": core.len(), "clutter": core.to_text()}),
                members_json(&core),
            );
        }
        ClutterCmd::Minor { delete, contract } => {
            let m = clutter::minor(cl, &zero_based(delete)?, &zero_based(contract)?)?;
            rec.push(
                "minor",
                Status::Info,
                json!({"ground": m.ground(), "members": m.len(), "clutter": m.to_text()}),
                members_json(&m),
            );
        }
        ClutterCmd::Widthlength => {
            let rep = clutter::width_length_check(cl, c.trials, c.seed)?;
            // The inequality is a theorem only for ideal clutters.
            let ideal = if cl.ground() <= MAX_GROUND_IDEAL { Some(clutter::is_ideal(cl)?.verdict) } else { None };
            let status = match ideal {
                Some(true) => Status::from_bool(rep.pass),
                _ => Status::Info,
            };
            let witnesses = rep.violation.iter().map(|v| serde_json::to_value(v).expect("serializes")).collect();
            rec.push(
                "width-length",
                status,
                json!({"pass": rep.pass, "trials": rep.trials, "seed": c.seed, "ideal": ideal}),
                witnesses,
            );
        }
        ClutterCmd::Mu => {
            let r = clutter::rainbow_covering_number(cl)?;
            let witnesses = r.cover.iter().map(|&m| json!(one_based(m))).collect();
            rec.push(
                "rainbow-covering-number",
                Status::Info,
                json!({"mu": r.mu, "d": r.d, "labels": r.labels}),
                witnesses,
            );
        }
    }
    Ok(Output::Report(rec.finish()))
}
