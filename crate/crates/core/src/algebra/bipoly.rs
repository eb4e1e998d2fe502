//! Sparse bivariate polynomials over K.

use std::collections::BTreeMap;

use super::field::{Field, FieldElement};
use super::poly::KPoly;

/// Terms keyed by `(i, j)` for `x^i y^j`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    field: Field,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl BiPoly {
    pub fn zero(field: Field) -> Self {
        BiPoly { field, terms: BTreeMap::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(field.one(), 0, 0)
    }

    pub fn monomial(c: FieldElement, i: u32, j: u32) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(i, j, &c);
        p
    }

    pub fn x(field: Field) -> Self {
        Self::monomial(field.one(), 1, 0)
    }

    pub fn y(field: Field) -> Self {
        Self::monomial(field.one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), FieldElement)>>(field: Field, it: I) -> Self {
        let mut p = Self::zero(field);
        for ((i, j), c) in it {
            p.add_term(i, j, &c);
        }
        p
    }

    /// Builds from `(i, j, coefficient)` integer triples.
    pub fn from_i64s(field: Field, terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(field, terms.iter().map(|(i, j, c)| ((*i, *j), field.from_i64(*c))))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(|| self.field.zero());
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(i, j), c) in &o.terms {
            r.add_term(i, j, c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(k, c)| (*k, c.neg())))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(k, v)| (*k, v.mul(c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.field);
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &o.terms {
                r.add_term(i1 + i2, j1 + j2, &a.mul(b));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.field);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.field,
            self.terms.iter().filter(|(&(i, j), _)| i + j == d).map(|(k, c)| (*k, c.clone())),
        )
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for (&(i, j), c) in &self.terms {
            acc = acc.add(&c.mul(&x.pow(i as u64)).mul(&y.pow(j as u64)));
        }
        acc
    }

    /// `f(x, y + lambda * x)`.
    pub fn shear_y(&self, lambda: &FieldElement) -> Self {
        if lambda.is_zero() {
            return self.clone();
        }
        let mut r = Self::zero(self.field);
        for (&(i, j), c) in &self.terms {
            for (k, bin) in binomials(self.field, j).into_iter().enumerate() {
                let k = k as u32;
                // C(j,k) y^k (lambda x)^(j-k)
                let coef = c.mul(&bin).mul(&lambda.pow((j - k) as u64));
                r.add_term(i + j - k, k, &coef);
            }
        }
        r
    }

    /// Applies an exponent map to every monomial.
    pub fn map_exponents<F: Fn(u32, u32) -> (u32, u32)>(&self, f: F) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(&(i, j), c)| (f(i, j), c.clone())))
    }

    /// `f(1, y)` as a univariate polynomial in y.
    pub fn dehomogenize_x(&self) -> KPoly {
        let mut v = vec![self.field.zero(); self.terms.keys().map(|k| k.1 as usize + 1).max().unwrap_or(0)];
        for (&(_, j), c) in &self.terms {
            v[j as usize] = v[j as usize].add(c);
        }
        KPoly::from_coeffs(v, self.field)
    }

    /// Largest power of x dividing every term.
    pub fn x_content(&self) -> u32 {
        self.terms.keys().map(|k| k.0).min().unwrap_or(0)
    }
}

/// `C(n, k)` for `k = 0..=n` as field elements.
pub fn binomials(field: Field, n: u32) -> Vec<FieldElement> {
    let mut row = vec![field.one()];
    for _ in 0..n {
        let mut next = vec![field.one()];
        for w in row.windows(2) {
            next.push(w[0].add(&w[1]));
        }
        next.push(field.one());
        row = next;
    }
    row
}
