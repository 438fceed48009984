//! Exact polyhedral computations on the capacity-plus-GSC description.
//!
//! Every system lives inside the unit box, so vertex enumeration starts from
//! the box and cuts by the remaining rows.

mod dd;
pub mod hull;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{ensure_cap, Error, Result};
use crate::gsc::{minimal_valid_gsc, GscIneq};
use crate::rational::{self, format_vector, Rational, RationalVector};
use crate::setsys::{Point, SetSystem};

use dd::IntRow;

/// Largest dimension handed to the vertex enumerator.
pub const MAX_N_VERTICES: usize = 12;

/// Largest dimension for deciding cube-idealness of a set-system.
pub const MAX_N_CUBE_IDEAL: usize = 10;

/// Origin of a row in an [`IneqSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    /// `x_k ≥ 0`.
    Lower(usize),
    /// `−x_k ≥ −1`.
    Upper(usize),
    /// A GSC row in the form `Σ_I x − Σ_J x ≥ 1 − |J|`.
    Gsc(GscIneq),
    /// `x(C) ≥ 1` for the member mask `C`.
    Covering(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
    pub kind: RowKind,
}

impl Row {
    fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).filter(|(a, _)| **a != 0).map(|(a, v)| v * BigInt::from(*a)).sum()
    }

    /// `lhs(x) − rhs`.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        self.lhs(x) - BigRational::from_integer(self.rhs.into())
    }

    fn slack_at(&self, p: Point) -> i64 {
        let lhs: i64 = self.coeffs.iter().enumerate().filter(|(k, _)| p.get(*k)).map(|(_, a)| *a).sum();
        lhs - self.rhs
    }
}

/// Rows `a·x ≥ b` over `n` variables; the first `2n` rows are the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqSystem {
    n: usize,
    rows: Vec<Row>,
}

impl IneqSystem {
    /// The unit box `0 ≤ x ≤ 1`.
    pub fn unit_box(n: usize) -> Self {
        let mut rows = Vec::with_capacity(2 * n);
        for k in 0..n {
            let mut lo = vec![0; n];
            lo[k] = 1;
            rows.push(Row { coeffs: lo, rhs: 0, kind: RowKind::Lower(k) });
            let mut hi = vec![0; n];
            hi[k] = -1;
            rows.push(Row { coeffs: hi, rhs: -1, kind: RowKind::Upper(k) });
        }
        IneqSystem { n, rows }
    }

    /// Capacity rows plus the minimal valid GSC inequalities of `S`.
    pub fn describe(s: &SetSystem) -> Result<Self> {
        let mut sys = IneqSystem::unit_box(s.dim());
        for g in minimal_valid_gsc(s)? {
            sys.push_gsc(&g)?;
        }
        Ok(sys)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn push_gsc(&mut self, g: &GscIneq) -> Result<()> {
        let n = self.n;
        if g.support() >> n != 0 {
            return Err(Error::argument(format!("{g} does not fit in dimension {n}")));
        }
        let mut coeffs = vec![0; n];
        for k in g.positive_indices() {
            coeffs[k] = 1;
        }
        for k in g.negative_indices() {
            coeffs[k] = -1;
        }
        self.rows.push(Row { coeffs, rhs: 1 - g.negative().count_ones() as i64, kind: RowKind::Gsc(*g) });
        Ok(())
    }

    pub fn push_covering(&mut self, member: u64) -> Result<()> {
        let n = self.n;
        if member >> n != 0 {
            return Err(Error::argument(format!("member mask {member:#x} exceeds {n} elements")));
        }
        let coeffs = (0..n).map(|k| (member >> k & 1) as i64).collect();
        self.rows.push(Row { coeffs, rhs: 1, kind: RowKind::Covering(member) });
        Ok(())
    }

    fn check_len(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::Dimension { expected: self.n, got: x.len() });
        }
        Ok(())
    }

    pub fn satisfies(&self, x: &[Rational]) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.rows.iter().all(|r| !r.slack(x).is_negative()))
    }

    /// Indices of rows holding at equality.
    pub fn tight_rows(&self, x: &[Rational]) -> Result<Vec<usize>> {
        self.check_len(x)?;
        Ok((0..self.rows.len()).filter(|&i| self.rows[i].slack(x).is_zero()).collect())
    }

    fn extra_rows(&self) -> Vec<IntRow> {
        self.rows[2 * self.n..].iter().map(|r| IntRow { coeffs: r.coeffs.clone(), rhs: r.rhs }).collect()
    }
}

/// All vertices of the system, sorted lexicographically.
pub fn enumerate_vertices(sys: &IneqSystem) -> Result<Vec<RationalVector>> {
    let n = sys.dim();
    ensure_cap("n for vertex enumeration", n, MAX_N_VERTICES)?;
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let raw = dd::enumerate(n, &sys.extra_rows())?;
    let mut out: Vec<RationalVector> = raw
        .into_iter()
        .map(|v| {
            let den = BigInt::from(v.coords[n]);
            v.coords[..n].iter().map(|&c| BigRational::new(BigInt::from(c), den.clone())).collect()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn to_point(v: &[Rational]) -> Option<Point> {
    let mut mask = 0u64;
    for (k, x) in v.iter().enumerate() {
        if x.is_one() {
            mask |= 1 << k;
        } else if !x.is_zero() {
            return None;
        }
    }
    Some(Point(mask))
}

/// Outcome of a cube-idealness decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeIdealVerdict {
    pub verdict: bool,
    /// A fractional vertex of the description when `verdict` is false.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<RationalVector>,
    pub vertex_count: usize,
}

pub(crate) fn serialize_witness<S: serde::Serializer>(
    w: &Option<RationalVector>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(v) => ser.serialize_some(&format_vector(v)),
        None => ser.serialize_none(),
    }
}

/// Decides whether the capacity and minimal valid GSC rows of `S` cut out
/// `conv(S)`.
pub fn is_cube_ideal(s: &SetSystem) -> Result<CubeIdealVerdict> {
    if s.is_empty() {
        return Err(Error::argument("set-system is empty"));
    }
    ensure_cap("n for cube-idealness", s.dim(), MAX_N_CUBE_IDEAL)?;
    let sys = IneqSystem::describe(s)?;
    let vertices = enumerate_vertices(&sys)?;
    let mut integral: Vec<Point> = Vec::new();
    let mut witness = None;
    for v in &vertices {
        match to_point(v) {
            Some(p) => integral.push(p),
            None => {
                if witness.is_none() {
                    witness = Some(v.clone());
                }
            }
        }
    }
    integral.sort();
    if integral != s.points() {
        return Err(Error::internal("integral vertices of the GSC description differ from S"));
    }
    Ok(CubeIdealVerdict { verdict: witness.is_none(), witness, vertex_count: vertices.len() })
}

/// A face of `conv(S)` given by the rows tight at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub tight: Vec<usize>,
    /// `S ∩ F`.
    pub lattice_points: SetSystem,
    pub dim: usize,
    /// Rank of the lattice points lifted by a trailing `1`, i.e. `dim + 1`.
    pub affine_hull_rank: usize,
}

/// The GSC description of a set-system known to equal `conv(S)`.
#[derive(Debug, Clone)]
pub struct Description {
    s: SetSystem,
    system: IneqSystem,
}

impl Description {
    /// Builds the description after deciding cube-idealness; a fractional
    /// vertex is reported as a precondition error.
    pub fn certify(s: &SetSystem) -> Result<Self> {
        let v = is_cube_ideal(s)?;
        if let Some(w) = v.witness {
            return Err(Error::precondition(format!(
                "set-system is not cube-ideal; fractional vertex ({})",
                format_vector(&w)
            )));
        }
        Ok(Description { s: s.clone(), system: IneqSystem::describe(s)? })
    }

    /// Builds the description without vertex enumeration, for systems
    /// cube-ideal by construction.
    pub fn assume_cube_ideal(s: &SetSystem) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::argument("set-system is empty"));
        }
        Ok(Description { s: s.clone(), system: IneqSystem::describe(s)? })
    }

    pub fn set_system(&self) -> &SetSystem {
        &self.s
    }

    pub fn system(&self) -> &IneqSystem {
        &self.system
    }

    pub fn membership(&self, x: &[Rational]) -> Result<bool> {
        self.system.satisfies(x)
    }

    /// Whether `[1/λ, 1 − 1/λ]^n ⊆ conv(S)`. Returns the worst corner of the
    /// first failing row; each row is linear, so its minimum over the
    /// subcube is attained at a corner.
    pub fn check_subcube(&self, lambda: u64) -> Result<(bool, Option<RationalVector>)> {
        if lambda < 2 {
            return Err(Error::argument("λ must be at least 2"));
        }
        let l = lambda as i128;
        for row in self.system.rows() {
            // Scaled by λ the corner coordinates are 1 or λ − 1.
            let mut min: i128 = 0;
            let mut corner = Vec::with_capacity(row.coeffs.len());
            for &a in &row.coeffs {
                let a = a as i128;
                let (value, coord) = if a > 0 { (a, 1) } else { (a * (l - 1), l - 1) };
                min += value;
                corner.push(coord);
            }
            if min < row.rhs as i128 * l {
                let witness = corner.into_iter().map(|c| BigRational::new(BigInt::from(c), BigInt::from(l))).collect();
                return Ok((false, Some(witness)));
            }
        }
        Ok((true, None))
    }

    /// The minimal face containing `x`.
    pub fn minimal_face(&self, x: &[Rational]) -> Result<Face> {
        if !self.membership(x)? {
            return Err(Error::precondition(format!("({}) is not in conv(S)", format_vector(x))));
        }
        let tight = self.system.tight_rows(x)?;
        let rows = self.system.rows();
        let lattice_points = self.s.filter(|p| tight.iter().all(|&i| rows[i].slack_at(p) == 0));
        let vectors = point_vectors(&lattice_points);
        let dim = rational::affine_dimension(&vectors)
            .ok_or_else(|| Error::internal("minimal face has no lattice points"))?;
        if !rational::in_affine_hull(&vectors, x) {
            return Err(Error::internal("point is outside the affine hull of its face"));
        }
        Ok(Face { tight, lattice_points, dim, affine_hull_rank: dim + 1 })
    }
}

/// 0/1 points as rational vectors.
pub fn point_vectors(s: &SetSystem) -> Vec<RationalVector> {
    s.points().iter().map(|p| point_vector(*p, s.dim())).collect()
}

pub fn point_vector(p: Point, n: usize) -> RationalVector {
    (0..n).map(|k| rational::int(p.get(k) as i64)).collect()
}

/// Cube-idealness of `core(S)`.
pub fn core_is_cube_ideal(s: &SetSystem) -> Result<bool> {
    let core = crate::gsc::core_points(s)?;
    Ok(is_cube_ideal(&core)?.verdict)
}

/// A row in the form `+x1 -x3 >= 0`.
pub fn describe_row(row: &Row) -> String {
    let mut terms = Vec::new();
    for (k, &a) in row.coeffs.iter().enumerate() {
        match a {
            0 => {}
            1 => terms.push(format!("+x{}", k + 1)),
            -1 => terms.push(format!("-x{}", k + 1)),
            a => terms.push(format!("{a:+}x{}", k + 1)),
        }
    }
    if terms.is_empty() {
        terms.push("0".into());
    }
    format!("{} >= {}", terms.join(" "), row.rhs)
}
