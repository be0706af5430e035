//! Hyperovals in PG(2,q) and their correspondence with [q+2,3,q] MDS codes.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};
use crate::lincode::{weight_distribution, Budget, GeneratorMatrix};
use crate::opoly::{check_oval_polynomial, OvalPolySpec};

pub type Point = [Fe; 3];

/// Scales `p` so its last nonzero coordinate is 1. `None` for the zero vector.
pub fn normalize_point(ctx: &FieldCtx, p: Point) -> Option<Point> {
    let last = p.iter().rev().find(|x| !x.is_zero())?;
    let s = ctx.inv(*last).expect("nonzero");
    Some(p.map(|x| ctx.mul(x, s)))
}

/// All q^2+q+1 normalized points of PG(2,q). Lines use the same
/// coordinates: `[a,b,c]` is the line `ax + by + cz = 0`.
pub fn projective_points(ctx: &FieldCtx) -> impl Iterator<Item = Point> + '_ {
    let affine = ctx
        .elements()
        .flat_map(move |y| ctx.elements().map(move |x| [x, y, Fe::ONE]));
    let infinite = ctx.elements().map(|x| [x, Fe::ONE, Fe::ZERO]);
    affine
        .chain(infinite)
        .chain(std::iter::once([Fe::ONE, Fe::ZERO, Fe::ZERO]))
}

fn det3(ctx: &FieldCtx, a: Point, b: Point, c: Point) -> Fe {
    let minor = |i: usize, j: usize| ctx.add(ctx.mul(b[i], c[j]), ctx.mul(b[j], c[i]));
    let t = [
        ctx.mul(a[0], minor(1, 2)),
        ctx.mul(a[1], minor(0, 2)),
        ctx.mul(a[2], minor(0, 1)),
    ];
    ctx.add(ctx.add(t[0], t[1]), t[2])
}

fn incident(ctx: &FieldCtx, line: Point, p: Point) -> bool {
    let s = (0..3).fold(Fe::ZERO, |acc, i| ctx.add(acc, ctx.mul(line[i], p[i])));
    s.is_zero()
}

/// A set of q+2 points of PG(2,q), no three collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperoval {
    ctx: Arc<FieldCtx>,
    points: Vec<Point>,
}

impl Hyperoval {
    /// Normalizes and validates the points: q+2 of them, pairwise distinct,
    /// no three collinear.
    pub fn new(ctx: Arc<FieldCtx>, points: Vec<Point>) -> Result<Self> {
        let q = ctx.q() as usize;
        if points.len() != q + 2 {
            return Err(Error::NotHyperoval(format!(
                "{} points, expected q+2 = {}",
                points.len(),
                q + 2
            )));
        }
        let mut normalized = Vec::with_capacity(points.len());
        for p in points {
            for x in p {
                ctx.elem(x.0)?;
            }
            normalized.push(
                normalize_point(&ctx, p)
                    .ok_or_else(|| Error::NotHyperoval("zero vector".into()))?,
            );
        }
        let mut seen = HashSet::new();
        for p in &normalized {
            if !seen.insert(*p) {
                return Err(Error::NotHyperoval(format!(
                    "repeated point {}",
                    fmt_point(p)
                )));
            }
        }
        let n = normalized.len();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    if det3(&ctx, normalized[i], normalized[j], normalized[l]).is_zero() {
                        return Err(Error::NotHyperoval(format!(
                            "collinear points {}, {}, {}",
                            fmt_point(&normalized[i]),
                            fmt_point(&normalized[j]),
                            fmt_point(&normalized[l])
                        )));
                    }
                }
            }
        }
        Ok(Hyperoval {
            ctx,
            points: normalized,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// `profile[i]` is the number of lines meeting the set in exactly `i`
    /// points. For a hyperoval only indices 0 and 2 are nonzero.
    pub fn line_profile(&self) -> Vec<u64> {
        let mut profile = vec![0u64; self.points.len() + 1];
        for line in projective_points(&self.ctx) {
            let hits = self
                .points
                .iter()
                .filter(|&&p| incident(&self.ctx, line, p))
                .count();
            profile[hits] += 1;
        }
        profile
    }

    /// Whether the point sets agree, ignoring order.
    pub fn same_points(&self, other: &Hyperoval) -> bool {
        let a: HashSet<_> = self.points.iter().collect();
        let b: HashSet<_> = other.points.iter().collect();
        self.ctx.same_arithmetic(&other.ctx) && a == b
    }
}

fn fmt_point(p: &Point) -> String {
    format!("({}, {}, {})", p[0], p[1], p[2])
}

/// `{(f(c), c, 1)} ∪ {(1,0,0), (0,1,0)}`, with `c` running over
/// `0, 1, alpha, ..., alpha^(q-2)`.
pub fn build_hyperoval(spec: &OvalPolySpec, ctx: &Arc<FieldCtx>) -> Result<Hyperoval> {
    let table = spec.table(ctx)?;
    check_oval_polynomial(ctx, &table).map_err(|v| Error::NotOvalPolynomial {
        family: spec.to_string(),
        m: ctx.m(),
        violation: v.to_string(),
    })?;
    let mut points = vec![[table.get(Fe::ZERO), Fe::ZERO, Fe::ONE]];
    for i in 0..u64::from(ctx.q() - 1) {
        let c = ctx.alpha_pow(i);
        points.push([table.get(c), c, Fe::ONE]);
    }
    points.push([Fe::ONE, Fe::ZERO, Fe::ZERO]);
    points.push([Fe::ZERO, Fe::ONE, Fe::ZERO]);
    Hyperoval::new(ctx.clone(), points)
}

/// The 3 x (q+2) matrix whose columns are the points.
pub fn code_from_hyperoval(h: &Hyperoval) -> GeneratorMatrix {
    let columns: Vec<Vec<Fe>> = h.points.iter().map(|p| p.to_vec()).collect();
    GeneratorMatrix::from_columns(h.ctx.clone(), &columns).expect("a hyperoval spans the plane")
}

/// Reads the hyperoval off the columns of a [q+2,3,q] MDS code. The MDS
/// property is confirmed by enumeration before any normalization.
pub fn hyperoval_from_mds(g: &GeneratorMatrix, budget: Budget) -> Result<Hyperoval> {
    let q = g.q() as usize;
    if g.k() != 3 || g.n() != q + 2 {
        return Err(Error::NotHyperovalCode(format!(
            "shape {}x{}, expected 3x{}",
            g.k(),
            g.n(),
            q + 2
        )));
    }
    if let Some(j) = g.columns().position(|c| c.iter().all(|x| x.is_zero())) {
        return Err(Error::NotHyperovalCode(format!("column {j} is zero")));
    }
    let d = weight_distribution(g, budget)?.min_distance();
    if d != Some(q) {
        return Err(Error::NotHyperovalCode(format!(
            "minimum distance {d:?}, expected {q}"
        )));
    }
    let points = g.columns().map(|c| [c[0], c[1], c[2]]).collect();
    Hyperoval::new(g.ctx_arc().clone(), points)
}
