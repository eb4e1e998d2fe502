//! Solving `f_a g' + g_b f' = h` among quasi-homogeneous polynomials.

use crate::algebra::{Scalar, UniPoly};

use super::series::QhForm;
use super::HenselError;

/// Checks that two forms share no factor: neither both divisible by x, nor
/// by y, and coprime univariate images.
pub fn qh_coprime<S: Scalar>(f: &QhForm<S>, g: &QhForm<S>) -> bool {
    if f.is_zero() || g.is_zero() {
        return false;
    }
    if f.divisible_by_x() && g.divisible_by_x() {
        return false;
    }
    f.image().gcd(&g.image()).deg0() == 0
}

/// Returns `(f', g')` with `f_a * g' + g_b * f' = h`, where `f'` has weight
/// `w(h) - w(g_b)` and `g'` has weight `w(h) - w(f_a)`.
///
/// Normal form: the image of `g'` is reduced modulo the image of `g_b`.
/// When that is not admissible the other reduction is tried, then a dense solve.
pub fn qh_bezout<S: Scalar>(
    f_a: &QhForm<S>,
    g_b: &QhForm<S>,
    h: &QhForm<S>,
) -> Result<(QhForm<S>, QhForm<S>), HenselError> {
    BezoutSolver::new(f_a, g_b)?.solve(h)
}

/// `qh_bezout` with the univariate Bezout cofactors computed once.
pub struct BezoutSolver<'a, S: Scalar> {
    f_a: &'a QhForm<S>,
    g_b: &'a QhForm<S>,
    a: UniPoly<S>,
    b: UniPoly<S>,
    u: UniPoly<S>,
    v: UniPoly<S>,
}

impl<'a, S: Scalar> BezoutSolver<'a, S> {
    pub fn new(f_a: &'a QhForm<S>, g_b: &'a QhForm<S>) -> Result<Self, HenselError> {
        if (g_b.n, g_b.m) != (f_a.n, f_a.m) {
            return Err(HenselError::WeightMismatch("forms use different gradings".into()));
        }
        if !qh_coprime(f_a, g_b) {
            return Err(HenselError::NotCoprime);
        }
        let a = f_a.image();
        let b = g_b.image();
        let (_, u, v) = a.ext_gcd(&b);
        Ok(BezoutSolver { f_a, g_b, a, b, u, v })
    }

    pub fn solve(&self, h: &QhForm<S>) -> Result<(QhForm<S>, QhForm<S>), HenselError> {
        let (f_a, g_b) = (self.f_a, self.g_b);
        let (n, m) = (f_a.n, f_a.m);
        if (h.n, h.m) != (n, m) {
            return Err(HenselError::WeightMismatch("forms use different gradings".into()));
        }
        if h.weight < f_a.weight.max(g_b.weight) {
            return Err(HenselError::WeightMismatch(format!(
                "target weight {} below factor weights {} and {}",
                h.weight, f_a.weight, g_b.weight
            )));
        }
        let wf = h.weight - g_b.weight;
        let wg = h.weight - f_a.weight;
        if h.is_zero() {
            return Ok((QhForm::zero(h.field, n, m, wf), QhForm::zero(h.field, n, m, wg)));
        }
        let (a, b) = (&self.a, &self.b);
        let hh = h.image();

        // g' = u h mod b, f' = (h - a g') / b
        let g1 = self.u.mul(&hh).rem(b);
        if let Some(f1) = hh.sub(&a.mul(&g1)).exact_div(b) {
            if let (Some(fp), Some(gp)) = (QhForm::from_image(&f1, n, m, wf), QhForm::from_image(&g1, n, m, wg)) {
                return Ok((fp, gp));
            }
        }
        // f' = v h mod a, g' = (h - b f') / a
        let f2 = self.v.mul(&hh).rem(a);
        if let Some(g2) = hh.sub(&b.mul(&f2)).exact_div(a) {
            if let (Some(fp), Some(gp)) = (QhForm::from_image(&f2, n, m, wf), QhForm::from_image(&g2, n, m, wg)) {
                return Ok((fp, gp));
            }
        }
        qh_bezout_dense(f_a, g_b, h)
    }
}

/// Same equation solved as a linear system over the admissible coefficients.
/// Free unknowns are set to zero.
pub fn qh_bezout_dense<S: Scalar>(
    f_a: &QhForm<S>,
    g_b: &QhForm<S>,
    h: &QhForm<S>,
) -> Result<(QhForm<S>, QhForm<S>), HenselError> {
    let (n, m, field) = (f_a.n, f_a.m, h.field);
    let wf = h.weight - g_b.weight;
    let wg = h.weight - f_a.weight;
    let jf = QhForm::<S>::admissible_j(n, m, wf);
    let jg = QhForm::<S>::admissible_j(n, m, wg);
    let a = f_a.image();
    let b = g_b.image();
    let hh = h.image();
    let rows = [
        hh.deg0(),
        a.deg0() + jg.last().copied().unwrap_or(0) as usize,
        b.deg0() + jf.last().copied().unwrap_or(0) as usize,
    ]
    .into_iter()
    .max()
    .unwrap_or(0)
        + 1;
    let cols = jg.len() + jf.len();
    // Column k < jg.len(): coefficient of s^jg[k] in g'; then f'.
    let mut mat: Vec<Vec<S>> = vec![vec![S::zero(field); cols + 1]; rows];
    for (k, &j) in jg.iter().enumerate() {
        for (e, c) in a.terms() {
            mat[e + j as usize][k] = c.clone();
        }
    }
    for (k, &j) in jf.iter().enumerate() {
        for (e, c) in b.terms() {
            mat[e + j as usize][jg.len() + k] = c.clone();
        }
    }
    for (e, c) in hh.terms() {
        mat[e][cols] = c.clone();
    }
    let sol = solve_linear(mat, cols).ok_or_else(|| {
        HenselError::WeightMismatch(format!("no admissible solution at weight {}", h.weight))
    })?;
    let mut gimg = vec![S::zero(field); jg.last().map_or(0, |j| *j as usize + 1)];
    for (k, &j) in jg.iter().enumerate() {
        gimg[j as usize] = sol[k].clone();
    }
    let mut fimg = vec![S::zero(field); jf.last().map_or(0, |j| *j as usize + 1)];
    for (k, &j) in jf.iter().enumerate() {
        fimg[j as usize] = sol[jg.len() + k].clone();
    }
    let fp = QhForm::from_image(&UniPoly::from_coeffs(fimg, field), n, m, wf).expect("admissible by construction");
    let gp = QhForm::from_image(&UniPoly::from_coeffs(gimg, field), n, m, wg).expect("admissible by construction");
    Ok((fp, gp))
}

/// Gauss-Jordan on an augmented matrix; `None` when inconsistent.
pub fn solve_linear<S: Scalar>(mut mat: Vec<Vec<S>>, cols: usize) -> Option<Vec<S>> {
    let rows = mat.len();
    let field = mat.first().map(|r| r[cols].field())?;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&k| !mat[k][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].inverse().expect("nonzero pivot");
        for x in mat[r][c..=cols].iter_mut() {
            *x = x.times(&inv);
        }
        let pivot_row = mat[r].clone();
        for (k, row) in mat.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, pv) in row[c..=cols].iter_mut().zip(&pivot_row[c..=cols]) {
                *x = x.minus(&pv.times(&f));
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    if mat[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![S::zero(field); cols];
    for (row, c) in pivots {
        sol[c] = mat[row][cols].clone();
    }
    Some(sol)
}
