use cubeideal::gsc;
use cubeideal::polytope::{self, Description};
use cubeideal::rational::{format_vector, parse_vector};
use serde_json::json;

use super::{bitstrings, parse_set_system};
use crate::report::{Recorder, Status};
use crate::{CliResult, Common, Output, PolyCmd};

pub fn run(c: &Common, cmd: &PolyCmd) -> CliResult<Output> {
    let input = parse_set_system(c)?;
    let s = &input.value;
    let name = match cmd {
        PolyCmd::Check => "poly check",
        PolyCmd::Face { .. } => "poly face",
        PolyCmd::Subcube => "poly subcube",
    };
    let mut rec = Recorder::new(name, Some(input.digest.clone()));
    match cmd {
        PolyCmd::Check => {
            let v = polytope::is_cube_ideal(s)?;
            let lambda = gsc::connectivity(s)?;
            let witnesses = v.witness.iter().map(|w| json!(format_vector(w))).collect();
            rec.push(
                "cube-ideal",
                Status::Info,
                json!({
                    "cube_ideal": v.verdict,
                    "connectivity": lambda,
                    "vertex_count": v.vertex_count,
                    "n": s.dim(),
                    "size": s.len(),
                }),
                witnesses,
            );
            let rows: Vec<String> = polytope::IneqSystem::describe(s)?
                .rows()
                .iter()
                .skip(2 * s.dim())
                .map(polytope::describe_row)
                .collect();
            rec.info("description", json!({"rows": rows}));
        }
        PolyCmd::Face { point } => {
            let x = parse_vector(point)?;
            let d = Description::certify(s)?;
            let f = d.minimal_face(&x)?;
            let tight: Vec<String> = f.tight.iter().map(|&i| polytope::describe_row(&d.system().rows()[i])).collect();
            let points = bitstrings(&f.lattice_points).into_iter().map(|p| json!(p)).collect();
            rec.push(
                "minimal-face",
                Status::Info,
                json!({
                    "point": format_vector(&x),
                    "dim": f.dim,
                    "affine_hull_rank": f.affine_hull_rank,
                    "lattice_points": f.lattice_points.len(),
                    "tight_rows": tight,
                }),
                points,
            );
        }
        PolyCmd::Subcube => {
            let lambda = match c.lambda_int(2)? {
                Some(l) => l,
                None => gsc::connectivity(s)?
                    .finite()
                    .ok_or_else(|| crate::input_error("connectivity is infinite; pass --lambda"))?
                    as u64,
            };
            let d = Description::certify(s)?;
            let (ok, corner) = d.check_subcube(lambda)?;
            let connectivity = gsc::connectivity(s)?;
            // Containment is guaranteed only when λ ≤ connectivity.
            let asserted = lambda >= 3 && cubeideal::Extended::Finite(lambda as usize) <= connectivity;
            let status = if asserted { Status::from_bool(ok) } else { Status::Info };
            rec.push(
                "subcube-containment",
                status,
                json!({"lambda": lambda, "connectivity": connectivity, "contained": ok}),
                corner.iter().map(|w| json!(format_vector(w))).collect(),
            );
        }
    }
    Ok(Output::Report(rec.finish()))
}
