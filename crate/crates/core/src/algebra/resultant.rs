//! Subresultant resultants over K[t] and the critical-value polynomial.

use super::field::Field;
use super::poly::KPoly;
use super::roots::squarefree_part;
use super::AlgebraError;

/// A polynomial in z whose coefficients are polynomials in t.
type Bivar = Vec<KPoly>;

fn trim(mut a: Bivar) -> Bivar {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn deg(a: &Bivar) -> Option<usize> {
    a.len().checked_sub(1)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Bivar, b: &Bivar) -> Bivar {
    let db = deg(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut steps = (deg(a).unwrap_or(0) + 1).saturating_sub(db);
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let mut next: Bivar = r.iter().map(|c| c.mul(&lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            let idx = dr - db + k;
            next[idx] = next[idx].sub(&lr.mul(bc));
        }
        r = trim(next);
        steps -= 1;
    }
    let scale = lb.pow(steps as u32);
    trim(r.into_iter().map(|c| c.mul(&scale)).collect())
}

fn exact(a: &KPoly, b: &KPoly) -> KPoly {
    a.exact_div(b).expect("subresultant division is exact")
}

/// Resultant in z of two polynomials with coefficients in K[t].
///
/// Subresultant pseudo-remainder sequence; every division is exact in K[t].
pub fn resultant_z(a: &[KPoly], b: &[KPoly], field: Field) -> KPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    let (Some(mut da), Some(mut db)) = (deg(&a), deg(&b)) else {
        return KPoly::zero(field);
    };
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = true;
        }
    }
    if db == 0 {
        let r = b[0].pow(da as u32);
        return if sign_neg { r.neg() } else { r };
    }
    let mut g = KPoly::one(field);
    let mut h = KPoly::one(field);
    loop {
        let da = deg(&a).expect("nonzero");
        let db = deg(&b).expect("nonzero");
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = prem(&a, &b);
        a = b;
        let div = g.mul(&h.pow(delta as u32));
        b = r.iter().map(|c| exact(c, &div)).collect();
        g = a[deg(&a).expect("nonzero")].clone();
        h = if delta == 0 {
            h
        } else {
            exact(&g.pow(delta as u32), &h.pow(delta as u32 - 1))
        };
        match deg(&b) {
            None => return KPoly::zero(field),
            Some(0) => {
                let da = deg(&a).expect("nonzero") as u32;
                let res = if da == 0 {
                    b[0].clone()
                } else {
                    exact(&b[0].pow(da), &h.pow(da - 1))
                };
                return if sign_neg { res.neg() } else { res };
            }
            Some(_) => {}
        }
    }
}

/// Monic squarefree polynomial in t vanishing exactly on `{q(a) : q'(a) = 0}`.
pub fn critical_value_poly(q: &KPoly) -> Result<KPoly, AlgebraError> {
    let field = q.field();
    let dq = q.derivative();
    if dq.is_zero() {
        return Err(AlgebraError::Inseparable);
    }
    if dq.deg0() == 0 {
        return Ok(KPoly::one(field));
    }
    let mut a: Bivar = q.coeffs().iter().map(|c| KPoly::constant(c.clone(), field)).collect();
    a[0] = a[0].sub(&KPoly::var(field));
    let b: Bivar = dq.coeffs().iter().map(|c| KPoly::constant(c.clone(), field)).collect();
    let r = resultant_z(&a, &b, field);
    Ok(squarefree_part(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FieldElement;

    /// Determinant of the Sylvester matrix over K, by Gaussian elimination.
    fn sylvester_det(a: &KPoly, b: &KPoly) -> FieldElement {
        let field = a.field();
        let m = a.deg0();
        let n = b.deg0();
        let size = m + n;
        let mut mat = vec![vec![field.zero(); size]; size];
        for r in 0..n {
            for k in 0..=m {
                mat[r][r + m - k] = a.coeff(k);
            }
        }
        for r in 0..m {
            for k in 0..=n {
                mat[n + r][r + n - k] = b.coeff(k);
            }
        }
        let mut det = field.one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return field.zero();
            };
            if piv != col {
                mat.swap(piv, col);
                det = det.neg();
            }
            det = det.mul(&mat[col][col]);
            let inv = mat[col][col].inv().unwrap();
            let pivot_row = mat[col].clone();
            for row in mat[col + 1..size].iter_mut() {
                let f = row[col].mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for (x, pv) in row[col..size].iter_mut().zip(&pivot_row[col..size]) {
                    *x = x.sub(&pv.mul(&f));
                }
            }
        }
        det
    }

    fn check_against_sylvester(q: &KPoly) {
        let field = q.field();
        let dq = q.derivative();
        let mut a: Bivar = q.coeffs().iter().map(|c| KPoly::constant(c.clone(), field)).collect();
        a[0] = a[0].sub(&KPoly::var(field));
        let b: Bivar = dq.coeffs().iter().map(|c| KPoly::constant(c.clone(), field)).collect();
        let r = resultant_z(&a, &b, field);
        for t in -4..5 {
            let tv = field.from_i64(t);
            let shifted = q.sub(&KPoly::constant(tv.clone(), field));
            assert_eq!(r.eval(&tv), sylvester_det(&shifted, &dq), "q = {q}, t = {t}");
        }
    }

    #[test]
    fn subresultant_matches_sylvester() {
        let f = Field::Rationals;
        for v in [
            vec![0, 1, 1],
            vec![0, 0, 1, 1],
            vec![0, 1, 0, 1],
            vec![0, 0, -2, 0, 1],
            vec![3, -1, 4, 1, -5, 9],
            vec![1, 0, 0, 0, 0, 0, 1],
        ] {
            check_against_sylvester(&KPoly::from_i64s(&v, f));
        }
        let f7 = Field::Prime(7);
        check_against_sylvester(&KPoly::from_i64s(&[2, 3, 0, 5, 1], f7));
    }

    #[test]
    fn resultant_of_plain_polys() {
        let f = Field::Rationals;
        let c = |v: i64| KPoly::constant(f.from_i64(v), f);
        // Res(z^2 - 1, z - 2) = 3
        let r = resultant_z(&[c(-1), c(0), c(1)], &[c(-2), c(1)], f);
        assert_eq!(r, c(3));
    }

    #[test]
    fn critical_values() {
        let f = Field::Rationals;
        let q = KPoly::from_i64s(&[0, 1, 1], f);
        assert_eq!(critical_value_poly(&q).unwrap(), KPoly::from_ratios(&[(1, 4), (1, 1)], f));
        let q = KPoly::from_i64s(&[0, 0, 1, 1], f);
        assert_eq!(
            critical_value_poly(&q).unwrap(),
            KPoly::from_ratios(&[(0, 1), (-4, 27), (1, 1)], f)
        );
        let q = KPoly::from_i64s(&[0, 1], f);
        assert_eq!(critical_value_poly(&q).unwrap(), KPoly::one(f));
        let q = KPoly::from_i64s(&[0, 1, 0, 1], f);
        assert_eq!(
            critical_value_poly(&q).unwrap(),
            KPoly::from_ratios(&[(4, 27), (0, 1), (1, 1)], f)
        );
        let f5 = Field::Prime(5);
        let q = KPoly::from_i64s(&[0, 0, 0, 0, 0, 1], f5);
        assert!(matches!(critical_value_poly(&q), Err(AlgebraError::Inseparable)));
    }
}
