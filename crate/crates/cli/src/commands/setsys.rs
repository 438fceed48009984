use cubeideal::gsc;
use cubeideal::setsys::Point;
use serde_json::json;

use super::{bitstrings, parse_bits, parse_set_system, zero_based};
use crate::report::{Recorder, Status};
use crate::{CliResult, Common, Output, SetsysCmd};

pub fn run(c: &Common, cmd: &SetsysCmd) -> CliResult<Output> {
    let input = parse_set_system(c)?;
    let s = &input.value;
    let mut rec = Recorder::new(command_name(cmd), Some(input.digest.clone()));
    match cmd {
        SetsysCmd::Vcdim => {
            let report = cubeideal::bounds::sauer_shelah_check(s)?;
            rec.info("vc-dimension", json!({"n": s.dim(), "size": s.len(), "vc_dimension": report.vc_dimension}));
            rec.push(
                "sauer-shelah",
                Status::from_bool(report.pass),
                serde_json::to_value(&report).expect("report serializes"),
                Vec::new(),
            );
        }
        SetsysCmd::Connectivity => {
            let rows = gsc::minimal_valid_gsc(s)?;
            let lambda = gsc::connectivity(s)?;
            let shortest: Vec<_> =
                rows.iter().filter(|g| Some(g.len()) == lambda.finite()).map(|g| json!(g.to_string())).collect();
            rec.push(
                "connectivity",
                Status::Info,
                json!({"connectivity": lambda, "minimal_valid_gsc": rows.len()}),
                shortest,
            );
        }
        SetsysCmd::Core => {
            let core = gsc::core_points(s)?;
            let points = bitstrings(&core).into_iter().map(|p| json!(p)).collect();
            rec.push("core", Status::Info, json!({"core_size": core.len(), "size": s.len()}), points);
        }
        SetsysCmd::CoverGraph => {
            let g = gsc::cover_graph(s)?;
            let edges: Vec<[usize; 2]> = g.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            rec.info("cover-graph", json!({"n": g.n, "edges": edges, "components": g.components, "labels": g.labels}));
            let twist = gsc::canonical_twist(s);
            if let Ok(t) = twist {
                rec.push(
                    "cover-graph-comparability",
                    Status::from_bool(t.comparability_matches),
                    json!({"twist": t.q.to_bitstring(s.dim())}),
                    Vec::new(),
                );
            }
        }
        SetsysCmd::Twist { point } => {
            let q = parse_bits(point, s.dim(), "--point")?;
            let t = s.twist(Point(q))?;
            rec.info("twist", json!({"point": point, "system": t.to_text()}));
        }
        SetsysCmd::Project { indices } => {
            let t = s.project(&zero_based(indices)?)?;
            rec.info("project", json!({"indices": indices, "system": t.to_text()}));
        }
    }
    Ok(Output::Report(rec.finish()))
}

fn command_name(cmd: &SetsysCmd) -> &'static str {
    match cmd {
        SetsysCmd::Vcdim => "setsys vcdim",
        SetsysCmd::Connectivity => "setsys connectivity",
        SetsysCmd::Core => "setsys core",
        SetsysCmd::CoverGraph => "setsys cover-graph",
        SetsysCmd::Twist { .. } => "setsys twist",
        SetsysCmd::Project { .. } => "setsys project",
    }
}
