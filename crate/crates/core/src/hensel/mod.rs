//! Weighted Hensel lifting and edge-wise factorization of pencils over K(T).

pub mod bezout;
pub mod series;

use thiserror::Error;

use crate::algebra::{RatFunc, Scalar};
use crate::pencil::SpecialPencil;
use crate::polygon::{newton_polygon, Edge, PencilPoly};

pub use bezout::{qh_bezout, BezoutSolver, qh_bezout_dense, qh_coprime, solve_linear};
pub use series::{initial_form, qh_decompose, QHDecomposition, QhForm, Terms, WeightedSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HenselError {
    #[error("initial factors are not coprime")]
    NotCoprime,
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("precision {precision} is below the initial weight {initial}")]
    PrecisionTooLow { precision: u32, initial: u32 },
    #[error("initial form of the series differs from the product of the initial factors")]
    InitialFormMismatch,
}

/// Lifts `in(F) = f_a g_b` to `F = f g` up to weight `precision`.
///
/// `f` is exact through weight `precision - w(g_b)`, `g` through `precision - w(f_a)`.
pub fn hensel_split<S: Scalar>(
    big_f: &WeightedSeries<S>,
    f_a: &QhForm<S>,
    g_b: &QhForm<S>,
    precision: u32,
) -> Result<(WeightedSeries<S>, WeightedSeries<S>), HenselError> {
    let (n, m, field) = (big_f.n, big_f.m, big_f.field);
    if (f_a.n, f_a.m) != (n, m) || (g_b.n, g_b.m) != (n, m) {
        return Err(HenselError::WeightMismatch("factors use a different grading".into()));
    }
    let (a, b) = (f_a.weight, g_b.weight);
    if precision < a + b {
        return Err(HenselError::PrecisionTooLow { precision, initial: a + b });
    }
    if precision > big_f.precision {
        return Err(HenselError::PrecisionTooLow { precision: big_f.precision, initial: precision });
    }
    let solver = BezoutSolver::new(f_a, g_b)?;
    if big_f.order() != Some(a + b) || big_f.component(a + b) != f_a.mul(g_b) {
        return Err(HenselError::InitialFormMismatch);
    }
    let mut f = WeightedSeries::new(field, n, m, precision - b);
    let mut g = WeightedSeries::new(field, n, m, precision - a);
    f.add_form(f_a);
    g.add_form(g_b);
    for w in a + b + 1..=precision {
        let h = big_f.component(w).sub(&product_component(&f, &g, w));
        let (fp, gp) = solver.solve(&h)?;
        f.add_form(&fp);
        g.add_form(&gp);
    }
    Ok((f, g))
}

/// Weight-`w` component of `f g`.
fn product_component<S: Scalar>(f: &WeightedSeries<S>, g: &WeightedSeries<S>, w: u32) -> QhForm<S> {
    let mut terms: Terms<S> = Terms::new();
    for (&(i1, j1), c1) in &f.terms {
        let w1 = f.weight_of(i1, j1);
        if w1 > w {
            continue;
        }
        for (&(i2, j2), c2) in &g.terms {
            if w1 + g.weight_of(i2, j2) != w {
                continue;
            }
            let k = (i1 + i2, j1 + j2);
            let v = c1.times(c2);
            let sum = match terms.remove(&k) {
                Some(old) => old.plus(&v),
                None => v,
            };
            if !sum.is_zero() {
                terms.insert(k, sum);
            }
        }
    }
    QhForm { field: f.field, n: f.n, m: f.m, weight: w, terms }
}

/// The pencil as a series over K(T) in the grading `(n, m)`.
pub fn series_from_pencil(p: &PencilPoly, n: u32, m: u32, precision: u32) -> WeightedSeries<RatFunc> {
    let terms: Terms<RatFunc> = p.terms().iter().map(|(k, c)| (*k, RatFunc::affine(&c.a, &c.b))).collect();
    WeightedSeries::from_terms(p.field(), n, m, precision, &terms)
}

/// One factor of the top-level edge factorization.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFactor {
    pub edge: Edge,
    pub factor: WeightedSeries<RatFunc>,
    /// `f(0, y)` order, equal to the edge height.
    pub y_degree: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFactorization {
    pub factors: Vec<EdgeFactor>,
    /// Last cofactor; its constant term is nonzero.
    pub unit: WeightedSeries<RatFunc>,
    /// Gradings and precisions of the successive splits; the product identity
    /// holds on the intersection of these regions.
    pub regions: Vec<(u32, u32, u32)>,
}

impl EdgeFactorization {
    pub fn in_region(&self, i: u32, j: u32) -> bool {
        self.regions.iter().all(|&(n, m, prec)| n * i + m * j <= prec)
    }

    /// Product of all factors and the unit, restricted to the common region.
    pub fn product(&self) -> Terms<RatFunc> {
        let field = self.unit.field;
        let mut acc: Terms<RatFunc> = Terms::new();
        acc.insert((0, 0), RatFunc::one(field));
        let parts = self.factors.iter().map(|f| &f.factor).chain(std::iter::once(&self.unit));
        for s in parts {
            let mut next: Terms<RatFunc> = Terms::new();
            for (&(i1, j1), c1) in &acc {
                for (&(i2, j2), c2) in &s.terms {
                    let k = (i1 + i2, j1 + j2);
                    if !self.in_region(k.0, k.1) {
                        continue;
                    }
                    let v = c1.times(c2);
                    let sum = match next.remove(&k) {
                        Some(old) => old.plus(&v),
                        None => v,
                    };
                    if !sum.is_zero() {
                        next.insert(k, sum);
                    }
                }
            }
            acc = next;
        }
        acc
    }

    /// Checks `prod(factors) * unit = P` on the common region.
    pub fn verify(&self, p: &PencilPoly) -> bool {
        let target: Terms<RatFunc> = p
            .terms()
            .iter()
            .filter(|(k, _)| self.in_region(k.0, k.1))
            .map(|(k, c)| (*k, RatFunc::affine(&c.a, &c.b)))
            .collect();
        self.product() == target
    }

    pub fn y_degree_sum(&self) -> u32 {
        self.factors.iter().map(|f| f.y_degree).sum()
    }
}

/// Splits `P` into one factor per top-level edge and a unit, from the top edge down.
///
/// `precision` is the weighted precision in the grading of the first edge.
pub fn edge_factorization(s: &SpecialPencil, precision: u32) -> Result<EdgeFactorization, HenselError> {
    let edges = newton_polygon(s.poly());
    let first = edges.first().expect("a special pencil has at least one edge");
    let mut rest = series_from_pencil(s.poly(), first.n, first.m, precision);
    let mut factors = Vec::new();
    let mut regions = Vec::new();
    let mut prec = precision;
    let mut prev: Option<(u32, u32)> = None;
    for e in &edges {
        if let Some((pn, pm)) = prev {
            // region of the new grading inside the known region of the old one
            let np = (prec as u64 * (e.n as u64 * pm as u64).min(e.m as u64 * pn as u64) / (pn as u64 * pm as u64)) as u32;
            rest = rest.reweight(e.n, e.m, np);
            prec = np;
        }
        regions.push((e.n, e.m, prec));
        let init = rest.initial_form().ok_or(HenselError::InitialFormMismatch)?;
        let (i0, j0) = init.monomial_content();
        let f_a = init.divide_monomial(i0, j0);
        let one = RatFunc::one(rest.field);
        let g_b = QhForm::monomial(one, e.n, e.m, i0, j0);
        let (f, g) = hensel_split(&rest, &f_a, &g_b, prec)?;
        let y_degree = f.y_order_at_x0().unwrap_or(0);
        factors.push(EdgeFactor { edge: e.clone(), factor: f, y_degree });
        prec = g.precision;
        rest = g;
        prev = Some((e.n, e.m));
    }
    Ok(EdgeFactorization { factors, unit: rest, regions })
}
