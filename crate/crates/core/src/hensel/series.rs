//! Truncated series graded by a weight `n*i + m*j`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::{Field, Scalar, UniPoly};

pub type Terms<S> = BTreeMap<(u32, u32), S>;

fn add_into<S: Scalar>(t: &mut Terms<S>, k: (u32, u32), c: &S) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&k) {
        Some(e) => {
            let v = e.plus(c);
            if v.is_zero() {
                t.remove(&k);
            } else {
                *e = v;
            }
        }
        None => {
            t.insert(k, c.clone());
        }
    }
}

/// A quasi-homogeneous polynomial: every term has weight `weight`.
#[derive(Clone, Debug, PartialEq)]
pub struct QhForm<S: Scalar> {
    pub field: Field,
    pub n: u32,
    pub m: u32,
    pub weight: u32,
    pub terms: Terms<S>,
}

impl<S: Scalar> QhForm<S> {
    pub fn zero(field: Field, n: u32, m: u32, weight: u32) -> Self {
        QhForm { field, n, m, weight, terms: Terms::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds from terms, checking every weight.
    pub fn from_terms(field: Field, n: u32, m: u32, weight: u32, terms: Terms<S>) -> Option<Self> {
        terms
            .keys()
            .all(|&(i, j)| n * i + m * j == weight)
            .then_some(QhForm { field, n, m, weight, terms })
    }

    pub fn monomial(c: S, n: u32, m: u32, i: u32, j: u32) -> Self {
        let field = c.field();
        let mut terms = Terms::new();
        add_into(&mut terms, (i, j), &c);
        QhForm { field, n, m, weight: n * i + m * j, terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t = Terms::new();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &o.terms {
                add_into(&mut t, (i1 + i2, j1 + j2), &a.times(b));
            }
        }
        QhForm { field: self.field, n: self.n, m: self.m, weight: self.weight + o.weight, terms: t }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (k, c) in &o.terms {
            add_into(&mut t, *k, c);
        }
        QhForm { terms: t, ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (k, c) in &o.terms {
            add_into(&mut t, *k, &c.negated());
        }
        QhForm { terms: t, ..self.clone() }
    }

    /// Univariate image `x^i y^j -> s^j`; injective on a fixed weight and multiplicative.
    pub fn image(&self) -> UniPoly<S> {
        let top = self.terms.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let mut v = vec![S::zero(self.field); top + 1];
        for (&(_, j), c) in &self.terms {
            v[j as usize] = c.clone();
        }
        UniPoly::from_coeffs(v, self.field)
    }

    /// Exponents j admissible at this weight: `m j <= w` and `n | (w - m j)`.
    pub fn admissible_j(n: u32, m: u32, w: u32) -> Vec<u32> {
        (0..=w / m).filter(|j| (w - m * j).is_multiple_of(n)).collect()
    }

    /// Inverse of `image` at weight `w`; `None` when a term is not admissible.
    pub fn from_image(img: &UniPoly<S>, n: u32, m: u32, w: u32) -> Option<Self> {
        let mut t = Terms::new();
        for (j, c) in img.terms() {
            let j = j as u32;
            if m * j > w || !(w - m * j).is_multiple_of(n) {
                return None;
            }
            add_into(&mut t, ((w - m * j) / n, j), c);
        }
        Some(QhForm { field: img.field(), n, m, weight: w, terms: t })
    }

    pub fn divisible_by_x(&self) -> bool {
        !self.terms.is_empty() && self.terms.keys().all(|k| k.0 > 0)
    }

    pub fn divisible_by_y(&self) -> bool {
        !self.terms.is_empty() && self.terms.keys().all(|k| k.1 > 0)
    }

    /// Minimal exponents over the support.
    pub fn monomial_content(&self) -> (u32, u32) {
        let i = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let j = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (i, j)
    }

    pub fn divide_monomial(&self, a: u32, b: u32) -> Self {
        let terms = self.terms.iter().map(|(&(i, j), c)| ((i - a, j - b), c.clone())).collect();
        QhForm { field: self.field, n: self.n, m: self.m, weight: self.weight - self.n * a - self.m * b, terms }
    }

    pub fn decompose(&self) -> QHDecomposition<S> {
        qh_decompose(self)
    }
}

/// `f = x^e_x y^e_y h(x^m, y^n)` with `h` homogeneous of degree `e`, stored as `h(1, s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QHDecomposition<S: Scalar> {
    pub weight: u32,
    pub e_x: u32,
    pub e_y: u32,
    pub e: u32,
    pub h: UniPoly<S>,
}

/// Unique decomposition with `e_x < m`, `e_y < n`.
pub fn qh_decompose<S: Scalar>(f: &QhForm<S>) -> QHDecomposition<S> {
    let (n, m, w) = (f.n, f.m, f.weight);
    // j is fixed mod n and i mod m across the support.
    let (e_x, e_y) = match f.terms.keys().next() {
        Some(&(i, j)) => (i % m, j % n),
        None => {
            let j = (0..n).find(|j| w >= m * j && (w - m * j) % n == 0).unwrap_or(0);
            let i = (w - m * j) / n;
            (i % m, j)
        }
    };
    let e = (w - n * e_x - m * e_y) / (m * n);
    let mut v = vec![S::zero(f.field); e as usize + 1];
    for (&(_, j), c) in &f.terms {
        v[((j - e_y) / n) as usize] = c.clone();
    }
    QHDecomposition { weight: w, e_x, e_y, e, h: UniPoly::from_coeffs(v, f.field) }
}

/// A series in x, y graded by `n*i + m*j`, known exactly for weights `<= precision`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSeries<S: Scalar> {
    pub field: Field,
    pub n: u32,
    pub m: u32,
    pub precision: u32,
    pub terms: Terms<S>,
}

impl<S: Scalar> WeightedSeries<S> {
    pub fn new(field: Field, n: u32, m: u32, precision: u32) -> Self {
        assert!(n >= 1 && m >= 1 && n.gcd(&m) == 1, "weights must be coprime and positive");
        WeightedSeries { field, n, m, precision, terms: Terms::new() }
    }

    /// Keeps the terms of weight `<= precision`.
    pub fn from_terms(field: Field, n: u32, m: u32, precision: u32, terms: &Terms<S>) -> Self {
        let mut s = Self::new(field, n, m, precision);
        for (&(i, j), c) in terms {
            if n * i + m * j <= precision {
                add_into(&mut s.terms, (i, j), c);
            }
        }
        s
    }

    pub fn weight_of(&self, i: u32, j: u32) -> u32 {
        self.n * i + self.m * j
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn component(&self, w: u32) -> QhForm<S> {
        let terms = self
            .terms
            .iter()
            .filter(|(&(i, j), _)| self.weight_of(i, j) == w)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        QhForm { field: self.field, n: self.n, m: self.m, weight: w, terms }
    }

    /// Lowest weight present.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| self.weight_of(i, j)).min()
    }

    /// Terms of minimal weight.
    pub fn initial_form(&self) -> Option<QhForm<S>> {
        self.order().map(|w| self.component(w))
    }

    pub fn add_form(&mut self, f: &QhForm<S>) {
        for (k, c) in &f.terms {
            if self.weight_of(k.0, k.1) <= self.precision {
                add_into(&mut self.terms, *k, c);
            }
        }
    }

    /// Product truncated at `precision`.
    pub fn mul_truncated(&self, o: &Self, precision: u32) -> Self {
        assert_eq!((self.n, self.m), (o.n, o.m), "weights differ");
        let mut r = Self::new(self.field, self.n, self.m, precision);
        for (&(i1, j1), a) in &self.terms {
            let w1 = self.weight_of(i1, j1);
            if w1 > precision {
                continue;
            }
            for (&(i2, j2), b) in &o.terms {
                if w1 + self.weight_of(i2, j2) <= precision {
                    add_into(&mut r.terms, (i1 + i2, j1 + j2), &a.times(b));
                }
            }
        }
        r
    }

    /// Same terms, regraded; keeps terms whose new weight is `<= precision`.
    pub fn reweight(&self, n: u32, m: u32, precision: u32) -> Self {
        Self::from_terms(self.field, n, m, precision, &self.terms)
    }

    /// Terms restricted to a down-closed set.
    pub fn restrict<F: Fn(u32, u32) -> bool>(&self, keep: F) -> Terms<S> {
        self.terms.iter().filter(|(&(i, j), _)| keep(i, j)).map(|(k, c)| (*k, c.clone())).collect()
    }

    /// `f(0, y)` order: the y-degree of a y-regular factor.
    pub fn y_order_at_x0(&self) -> Option<u32> {
        self.terms.keys().filter(|k| k.0 == 0).map(|k| k.1).min()
    }
}

/// Initial form of a nonzero series.
pub fn initial_form<S: Scalar>(f: &WeightedSeries<S>) -> Option<QhForm<S>> {
    f.initial_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;

    fn series(terms: &[(u32, u32, i64)], n: u32, m: u32, prec: u32) -> WeightedSeries<FieldElement> {
        let f = Field::Rationals;
        let t: Terms<FieldElement> = terms.iter().map(|(i, j, c)| ((*i, *j), f.from_i64(*c))).collect();
        WeightedSeries::from_terms(f, n, m, prec, &t)
    }

    #[test]
    fn initial_forms() {
        let s = series(&[(0, 2, 1), (2, 0, -1), (3, 0, 1)], 1, 1, 10);
        let f = s.initial_form().unwrap();
        assert_eq!(f.weight, 2);
        assert_eq!(f.terms.len(), 2);
        let s = series(&[(0, 4, 1), (3, 2, 1), (7, 1, 1), (12, 0, 1), (6, 0, -1)], 2, 3, 40);
        let f = s.initial_form().unwrap();
        assert_eq!(f.weight, 12);
        let keys: Vec<_> = f.terms.keys().copied().collect();
        assert_eq!(keys, vec![(0, 4), (3, 2), (6, 0)]);
        let s = series(&[(2, 3, 5)], 1, 1, 10);
        assert_eq!(s.initial_form().unwrap().terms.len(), 1);
    }

    #[test]
    fn decomposition_identity() {
        let s = series(&[(4, 1, 1), (1, 3, 2)], 2, 3, 40);
        let f = s.initial_form().unwrap();
        let d = qh_decompose(&f);
        assert_eq!(d.weight, 2 * d.e_x + 3 * d.e_y + d.e * 6);
        assert!(d.e_x < 3 && d.e_y < 2);
        assert_eq!((d.e_x, d.e_y, d.e), (1, 1, 1));
    }

    #[test]
    fn image_roundtrip() {
        let s = series(&[(0, 4, 1), (3, 2, 1), (6, 0, -1)], 2, 3, 40);
        let f = s.initial_form().unwrap();
        let back = QhForm::from_image(&f.image(), 2, 3, 12).unwrap();
        assert_eq!(back, f);
        assert!(QhForm::<FieldElement>::from_image(&f.image(), 2, 3, 13).is_none());
    }
}
