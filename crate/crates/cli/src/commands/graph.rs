use cubeideal::bounds::entropy;
use cubeideal::graphapps::{self as ga, MixedGraph};
use cubeideal::polytope::MAX_N_CUBE_IDEAL;
use serde_json::json;

use super::{one_based, parse_bits, parse_graph};
use crate::report::{Recorder, Status};
use crate::{input_error, CliResult, Common, GraphCmd, Output};

/// Slack on every floating-point bound comparison.
const SLACK: f64 = 1e-9;

pub fn run(c: &Common, cmd: &GraphCmd) -> CliResult<Output> {
    if let GraphCmd::Staircase { k } = cmd {
        let g = ga::staircase(*k)?;
        let suite = ga::rgraph_suite(&g, 3)?;
        let mut rec = Recorder::new("graph staircase", None);
        rec.info(
            "staircase",
            json!({
                "k": k,
                "edges": g.edges().len(),
                "is_r_graph": suite.is_r_graph,
                "perfect_matchings": suite.matchings.len(),
                "core_matchings": suite.core_matchings.len(),
                "rank": suite.rank,
                "graph": g.to_text(),
            }),
        );
        return Ok(Output::Report(rec.finish()));
    }
    let input = parse_graph(c)?;
    let g = &input.value;
    let name = match cmd {
        GraphCmd::Scr { .. } => "graph scr",
        GraphCmd::OrientCount => "graph orient-count",
        GraphCmd::Pdg => "graph pdg",
        GraphCmd::Dijoins => "graph dijoins",
        GraphCmd::Rgraph { .. } => "graph rgraph",
        GraphCmd::Staircase { .. } => unreachable!("handled above"),
        GraphCmd::Cyclespace => "graph cyclespace",
        GraphCmd::Ears => "graph ears",
    };
    let mut rec = Recorder::new(name, Some(input.digest.clone()));
    match cmd {
        GraphCmd::Scr { reference } => {
            let r = match reference {
                Some(bits) => parse_bits(bits, g.edges().len(), "--reference")?,
                None => 0,
            };
            let s = ga::scr(g, r)?;
            rec.info("scr", json!({"size": s.len(), "edges": g.edges().len(), "system": s.to_text()}));
            let cross = ga::scr_cross_validate(g, r)?;
            let witnesses = cross.mismatches.iter().map(|&x| json!(one_based(x))).collect();
            rec.push(
                "scr-inequalities",
                Status::from_bool(cross.mismatches.is_empty()),
                json!({"points_checked": cross.points_checked, "inequalities": cross.inequalities}),
                witnesses,
            );
            if g.edges().len() <= MAX_N_CUBE_IDEAL {
                let ok = ga::scr_is_cube_ideal(g, r)?;
                rec.push("scr-cube-ideal", Status::from_bool(ok), json!({}), Vec::new());
            }
        }
        GraphCmd::OrientCount => {
            let count = ga::scr(g, 0)?.len();
            let m = g.edges().len();
            let exponent = m + g.components() - g.vcount();
            let bound = 1u64 << exponent;
            // The ear bound is asserted for undirected graphs only.
            let status = if g.arcs().is_empty() { Status::from_bool(count as u64 >= bound) } else { Status::Info };
            rec.push("orient-count", status, json!({"count": count, "bound": bound, "exponent": exponent}), Vec::new());
            let pdg = ga::two_pseudo_dicut_graph(g)?;
            let h = entropy(pdg.kappa.reciprocal().min(0.5))?;
            let rhs = (1.0 - h) * pdg.d as f64;
            rec.push(
                "orient-count-rainbow-bound",
                Status::from_bool((count as f64).log2() + SLACK >= rhs),
                json!({"scale": "log2", "lhs": (count as f64).log2(), "rhs": rhs, "d": pdg.d, "kappa": pdg.kappa}),
                Vec::new(),
            );
        }
        GraphCmd::Pdg => {
            let p = ga::two_pseudo_dicut_graph(g)?;
            let edges: Vec<[usize; 2]> = p.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            rec.info("pseudo-dicut-graph", json!({"edges": edges, "d": p.d, "labels": p.labels, "kappa": p.kappa}));
        }
        GraphCmd::Dijoins => dijoins(&mut rec, g)?,
        GraphCmd::Rgraph { r } => {
            let r = match r {
                Some(r) => *r,
                None => *g.degrees().first().ok_or_else(|| input_error("graph has no vertices"))?,
            };
            let s = ga::rgraph_suite(g, r)?;
            let v = g.vcount();
            let m = g.edges().len();
            rec.info(
                "rgraph",
                json!({
                    "r": r,
                    "is_r_graph": s.is_r_graph,
                    "min_odd_cuts": s.min_odd_cuts.len(),
                    "perfect_matchings": s.matchings.len(),
                    "core_matchings": s.core_matchings.len(),
                    "rank": s.rank,
                }),
            );
            if s.is_r_graph {
                rec.push(
                    "rank-vertex-bound",
                    Status::from_bool(2 * s.rank + 2 <= 3 * v),
                    json!({"rank": s.rank, "bound": 1.5 * v as f64 - 1.0}),
                    Vec::new(),
                );
                if r >= 3 {
                    let beta = 1.0 - 3.0 / r as f64;
                    let bound = (1.0 - beta) * m as f64;
                    rec.push(
                        "rank-edge-bound",
                        Status::from_bool(s.rank as f64 <= bound + SLACK),
                        json!({"rank": s.rank, "beta": beta, "bound": bound}),
                        Vec::new(),
                    );
                }
            }
        }
        GraphCmd::Staircase { .. } => unreachable!("handled above"),
        GraphCmd::Cyclespace => {
            let s = ga::cycle_space(g)?;
            rec.info("cycle-space", json!({"size": s.len(), "vc_dimension": s.vc_dimension(), "system": s.to_text()}));
        }
        GraphCmd::Ears => {
            let ears = ga::ear_count(g)?;
            let l = ga::edge_connectivity(g)?;
            let mut values = json!({"ear_count": ears, "edge_connectivity": l});
            if l >= 2 {
                let bound = (1.0 - 2.0 / l as f64) * g.edges().len() as f64 + 1.0;
                values["bound"] = json!(bound);
                rec.push("ear-count-bound", Status::from_bool(ears as f64 + SLACK >= bound), values, Vec::new());
            } else {
                rec.info("ear-count", values);
            }
        }
    }
    Ok(Output::Report(rec.finish()))
}

fn dijoins(rec: &mut Recorder, g: &MixedGraph) -> CliResult<()> {
    let d = ga::tight_dijoins(g)?;
    let arcs = g.arcs().len();
    let members = d.members.members().iter().map(|&m| json!(one_based(m))).collect();
    rec.push(
        "tight-dijoins",
        Status::Info,
        json!({
            "tau": d.tau,
            "dicuts": d.dicuts.len(),
            "minimum_dicuts": d.minimum_dicuts.len(),
            "dijoins": d.dijoins.len(),
            "tight_dijoins": d.members.len(),
            "rank": d.rank,
        }),
        members,
    );
    // The rank bound is a consequence of the theorem only for τ ≥ 3.
    let ok = 3 * d.rank <= 2 * arcs;
    let status = if d.tau >= 3 { Status::from_bool(ok) } else { Status::Info };
    rec.push(
        "dicut-rank-bound",
        status,
        json!({"rank": d.rank, "bound": 2.0 * arcs as f64 / 3.0, "holds": ok, "tau": d.tau}),
        Vec::new(),
    );
    Ok(())
}
