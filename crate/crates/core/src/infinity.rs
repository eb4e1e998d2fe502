//! Atypical values at infinity of a plane polynomial, through local pencils at
//! its points at infinity, and the extremal family.

use std::fmt;

use thiserror::Error;

use crate::algebra::{binomials, is_prime, rational_roots, BiPoly, Field, FieldElement, KPoly};
use crate::atypical::{aggregate_report, extremality_flags, report_from_analyses, ExtremalityFlags, PencilReport};
use crate::pencil::{make_pencil, PencilError, SpecialPencil};
use crate::resolver::{resolve, ResolutionTree, ResolveOptions, ResolverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InfinityError {
    #[error("polynomial is constant")]
    Constant,
    #[error("top form has the factor {factor} without roots in the ground field")]
    NonSplitTopForm { factor: String },
    #[error("{0} is not a point at infinity of the curve")]
    NotABasePoint(String),
    #[error("division by {0} is impossible in characteristic {0}")]
    CharacteristicObstruction(u64),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Resolver(#[from] ResolverError),
}

/// A point `[u:v:0]` on the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjPoint {
    /// `[1:lambda:0]`
    Slope(FieldElement),
    /// `[0:1:0]`
    Vertical,
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Slope(l) => write!(f, "[1:{l}:0]"),
            ProjPoint::Vertical => write!(f, "[0:1:0]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoint {
    pub point: ProjPoint,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityJob {
    pub f: BiPoly,
    pub degree: u32,
    pub top_form: BiPoly,
    pub base_points: Vec<BasePoint>,
}

/// Points at infinity as the projective roots of the top form.
pub fn top_form_points(f: &BiPoly) -> Result<InfinityJob, InfinityError> {
    let degree = match f.total_degree() {
        Some(d) if d > 0 => d,
        _ => return Err(InfinityError::Constant),
    };
    let top = f.homogeneous_part(degree);
    let split = rational_roots(&top.dehomogenize_x());
    if split.has_residual() {
        return Err(InfinityError::NonSplitTopForm { factor: split.residual.to_text("y") });
    }
    let mut base_points: Vec<BasePoint> = split
        .roots
        .iter()
        .map(|(l, k)| BasePoint { point: ProjPoint::Slope(l.clone()), multiplicity: *k })
        .collect();
    let xpow = top.x_content();
    if xpow > 0 {
        base_points.push(BasePoint { point: ProjPoint::Vertical, multiplicity: xpow });
    }
    Ok(InfinityJob { f: f.clone(), degree, top_form: top, base_points })
}

/// Local pencil `f_loc - T z^D` at a point at infinity; the local `x` is `z`.
///
/// `[1:lambda:0]` is first moved to `[1:0:0]` by `y <- y + lambda x`.
pub fn localize_at_point(job: &InfinityJob, point: &ProjPoint) -> Result<SpecialPencil, InfinityError> {
    if !job.base_points.iter().any(|b| &b.point == point) {
        return Err(InfinityError::NotABasePoint(point.to_string()));
    }
    let d = job.degree;
    let p = match point {
        ProjPoint::Slope(l) => job.f.shear_y(l).map_exponents(|i, j| (d - i - j, j)),
        ProjPoint::Vertical => job.f.map_exponents(|i, j| (d - i - j, i)),
    };
    let field = job.f.field();
    Ok(make_pencil(&p, d, &BiPoly::one(field))?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointReport {
    pub point: ProjPoint,
    pub multiplicity: u32,
    pub pencil: SpecialPencil,
    pub tree: ResolutionTree,
    pub report: PencilReport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfinityReport {
    pub field: Field,
    pub degree: u32,
    pub points: Vec<PointReport>,
    /// All dicriticals of all points, in point order.
    pub combined: PencilReport,
    /// `None` when some dicritical is inseparable.
    pub extremality: Option<ExtremalityFlags>,
    pub warnings: Vec<String>,
}

impl InfinityReport {
    pub fn nu_inf_gen(&self) -> u64 {
        self.combined.nu_gen
    }

    pub fn bound_sum(&self) -> u64 {
        self.combined.bound_sum
    }

    pub fn atypical_poly(&self) -> &KPoly {
        &self.combined.atypical_union_poly
    }

    pub fn rational_atypical(&self) -> &[FieldElement] {
        &self.combined.rational_atypical_union
    }

    pub fn dicritical_count(&self) -> usize {
        self.combined.analyses.len()
    }

    /// All local flags hold and the atypical sets are pairwise disjoint.
    pub fn bound_attained(&self) -> bool {
        self.extremality.as_ref().is_some_and(|e| e.all())
    }
}

pub fn infinity_report(f: &BiPoly, opts: &ResolveOptions) -> Result<InfinityReport, InfinityError> {
    let job = top_form_points(f)?;
    let mut points = Vec::new();
    let mut warnings = Vec::new();
    for b in &job.base_points {
        let pencil = localize_at_point(&job, &b.point)?;
        let tree = resolve(&pencil, opts)?;
        if tree.has_residuals() {
            warnings.push(format!("{}: some branches have no roots in the ground field", b.point));
        }
        let report = aggregate_report(&tree);
        warnings.extend(report.warnings.iter().map(|w| format!("{}: {w}", b.point)));
        points.push(PointReport { point: b.point.clone(), multiplicity: b.multiplicity, pencil, tree, report });
    }
    let all = points.iter().flat_map(|p| p.report.analyses.iter().cloned()).collect();
    let combined = report_from_analyses(f.field(), all);
    let extremality = extremality_flags(&combined).ok();
    Ok(InfinityReport { field: f.field(), degree: job.degree, points, combined, extremality, warnings })
}

/// Monic `h` of degree `d` with `deg((t+1)^(2d+1) - t h^2) <= d`, solved top-down.
pub fn family_h(d: u32, field: Field) -> Result<KPoly, InfinityError> {
    if d == 0 {
        return Err(InfinityError::ZeroDegree);
    }
    if field.characteristic() == 2 {
        return Err(InfinityError::CharacteristicObstruction(2));
    }
    let binom = binomials(field, 2 * d + 1);
    let half = field.from_i64(2).inv().expect("odd characteristic");
    let du = d as usize;
    let mut c = vec![field.zero(); du + 1];
    c[du] = field.one();
    for r in 1..=du {
        // coefficient of t^(2d-r) in h^2 must equal binom(2d+1, r)
        let k = 2 * du - r;
        let mut s = field.zero();
        for i in (du - r + 1)..=du {
            if k >= i && k - i > du - r && k - i <= du {
                s = s.add(&c[i].mul(&c[k - i]));
            }
        }
        c[du - r] = binom[r].sub(&s).mul(&half);
    }
    Ok(KPoly::from_coeffs(c, field))
}

/// `(y + 1)(x q(xy) + Q(xy))` with `Q = (t+1)^(2d+1)` and `q = h^2`.
pub fn extremal_family(d: u32, field: Field) -> Result<BiPoly, InfinityError> {
    let h = family_h(d, field)?;
    let q = h.mul(&h);
    let big_q = KPoly::from_i64s(&[1, 1], field).pow(2 * d + 1);
    let mut inner = BiPoly::zero(field);
    for (k, c) in q.terms() {
        inner.add_term(k as u32 + 1, k as u32, c);
    }
    for (k, c) in big_q.terms() {
        inner.add_term(k as u32, k as u32, c);
    }
    let y1 = BiPoly::from_i64s(field, &[(0, 1, 1), (0, 0, 1)]);
    Ok(y1.mul(&inner))
}

/// First prime `p > 1000` over which `h` has `d` distinct roots, none `0` or `-1`.
pub fn family_prime(d: u32) -> Option<u64> {
    (1001u64..(1 << 16)).filter(|&p| is_prime(p)).find(|&p| {
        let field = Field::Prime(p);
        let Ok(h) = family_h(d, field) else {
            return false;
        };
        let split = rational_roots(&h);
        let minus_one = field.from_i64(-1);
        !split.has_residual()
            && split.roots.len() == d as usize
            && split.roots.iter().all(|(r, k)| *k == 1 && !r.is_zero() && *r != minus_one)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> FieldElement {
        Field::Rationals.from_rational(&BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn points_of_simple_curves() {
        let f = Field::Rationals;
        let job = top_form_points(&BiPoly::from_i64s(f, &[(0, 2, 1), (1, 0, -1)])).unwrap();
        assert_eq!(job.base_points, vec![BasePoint { point: ProjPoint::Slope(f.zero()), multiplicity: 2 }]);
        let job = top_form_points(&BiPoly::from_i64s(f, &[(1, 1, 1), (0, 0, -1)])).unwrap();
        assert_eq!(job.base_points.len(), 2);
        let s = localize_at_point(&job, &ProjPoint::Slope(f.zero())).unwrap();
        // z^2 f(1/z, y/z) = y - z^2
        assert_eq!(s.numerator(), BiPoly::from_i64s(f, &[(0, 1, 1), (2, 0, -1)]));
        assert_eq!(s.c(), 2);
        let circle = BiPoly::from_i64s(f, &[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        assert!(matches!(top_form_points(&circle), Err(InfinityError::NonSplitTopForm { .. })));
        assert_eq!(top_form_points(&BiPoly::one(f)), Err(InfinityError::Constant));
    }

    #[test]
    fn sheared_point() {
        // (y - 2x)(y + x) + y: points [1:2:0] and [1:-1:0]
        let f = Field::Rationals;
        let poly = BiPoly::from_i64s(f, &[(0, 2, 1), (1, 1, -1), (2, 0, -2), (0, 1, 1)]);
        let job = top_form_points(&poly).unwrap();
        for b in &job.base_points {
            let s = localize_at_point(&job, &b.point).unwrap();
            assert_eq!(s.y_order(), b.multiplicity);
        }
    }

    #[test]
    fn family_h_small() {
        let h = family_h(1, Field::Rationals).unwrap();
        assert_eq!(h, KPoly::from_ratios(&[(3, 2), (1, 1)], Field::Rationals));
        for d in 1..=6 {
            let h = family_h(d, Field::Rationals).unwrap();
            let e = KPoly::from_i64s(&[1, 1], Field::Rationals)
                .pow(2 * d + 1)
                .sub(&h.mul(&h).shift(1));
            assert!(e.deg0() <= d as usize, "d = {d}");
        }
        assert_eq!(family_h(1, Field::Prime(2)), Err(InfinityError::CharacteristicObstruction(2)));
        let e = KPoly::from_i64s(&[1, 1], Field::Rationals).pow(3).sub(&h_sq(1));
        assert_eq!(e, KPoly::from_ratios(&[(1, 1), (3, 4)], Field::Rationals));
        assert_eq!(e.coeff(1), q(3, 4));
    }

    fn h_sq(d: u32) -> KPoly {
        let h = family_h(d, Field::Rationals).unwrap();
        h.mul(&h).shift(1)
    }

    #[test]
    fn y_alone_has_no_atypical_values() {
        let f = Field::Rationals;
        let r = infinity_report(&BiPoly::y(f), &ResolveOptions::default()).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.atypical_poly().deg0(), 0);
    }
}
