//! Dense univariate polynomials over a `Scalar`.

use std::fmt;

use super::field::{Field, FieldElement, Scalar};

/// Coefficients indexed by exponent, trimmed so the last one is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<S: Scalar> {
    coeffs: Vec<S>,
    field: Field,
}

/// Polynomial over the ground field.
pub type KPoly = UniPoly<FieldElement>;

impl<S: Scalar> UniPoly<S> {
    pub fn zero(field: Field) -> Self {
        UniPoly { coeffs: Vec::new(), field }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(S::one(field), field)
    }

    pub fn constant(c: S, field: Field) -> Self {
        Self::from_coeffs(vec![c], field)
    }

    /// The polynomial `s`.
    pub fn var(field: Field) -> Self {
        Self::from_coeffs(vec![S::zero(field), S::one(field)], field)
    }

    /// `c * s^k`.
    pub fn monomial(c: S, k: usize, field: Field) -> Self {
        let mut v = vec![S::zero(field); k + 1];
        v[k] = c;
        Self::from_coeffs(v, field)
    }

    /// `s - r`.
    pub fn linear_root(r: &S, field: Field) -> Self {
        Self::from_coeffs(vec![r.negated(), S::one(field)], field)
    }

    pub fn from_coeffs(mut coeffs: Vec<S>, field: Field) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, field }
    }

    pub fn from_i64s(vals: &[i64], field: Field) -> Self {
        Self::from_coeffs(vals.iter().map(|v| S::from_i64(field, *v)).collect(), field)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(|| S::zero(self.field))
    }

    pub fn lc(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(|| S::zero(self.field))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).plus(&o.coeff(k))).collect();
        Self::from_coeffs(v, self.field)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).minus(&o.coeff(k))).collect();
        Self::from_coeffs(v, self.field)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.negated()).collect(), self.field)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.field);
        }
        let mut v = vec![S::zero(self.field); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        Self::from_coeffs(v, self.field)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.times(c)).collect(), self.field)
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![S::zero(self.field); k];
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v, self.field)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.field);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// Substitutes `s -> other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Self::constant(c.clone(), self.field));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.times(&S::from_i64(self.field, k as i64)))
            .collect();
        Self::from_coeffs(v, self.field)
    }

    /// Division with remainder. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let inv = d.lc().inverse().expect("leading coefficient invertible");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(self.field), self.clone());
        }
        let mut q = vec![S::zero(self.field); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].times(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].minus(&c.times(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q, self.field), Self::from_coeffs(r, self.field))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u*self + v*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut u0, mut u1) = (Self::one(f), Self::zero(f));
        let (mut v0, mut v1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u2 = u0.sub(&q.mul(&u1));
            let v2 = v0.sub(&q.mul(&v1));
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u2);
            v0 = std::mem::replace(&mut v1, v2);
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let inv = r0.lc().inverse().expect("nonzero");
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficients as (exponent, coefficient) pairs, nonzero only.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl KPoly {
    /// Evaluation-friendly constructor from exact rationals given as `(num, den)`.
    pub fn from_ratios(vals: &[(i64, i64)], field: Field) -> Self {
        let v = vals
            .iter()
            .map(|(n, d)| {
                field
                    .from_rational(&num_rational::BigRational::new((*n).into(), (*d).into()))
                    .expect("denominator invertible")
            })
            .collect();
        Self::from_coeffs(v, field)
    }

    /// Human-readable text in the given variable, highest degree first.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_rational();
            let mag = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("s"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> KPoly {
        KPoly::from_i64s(v, Field::Rationals)
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn ext_gcd_identity() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[2, 1]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, p(&[1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn gcd_common_factor() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn text_form() {
        let f = KPoly::from_ratios(&[(5, 8), (0, 1), (-1, 1)], Field::Rationals);
        assert_eq!(f.to_text("t"), "-t^2 + 5/8");
    }
}
