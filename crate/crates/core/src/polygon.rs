//! Pencils with coefficients affine in T, their Newton polygons and edge data.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::{binomials, rational_roots, BiPoly, Field, FieldElement, KPoly};

/// The coefficient `a + b*T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl Affine {
    pub fn new(a: FieldElement, b: FieldElement) -> Self {
        Affine { a, b }
    }

    pub fn zero(field: Field) -> Self {
        Affine { a: field.zero(), b: field.zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Affine) -> Affine {
        Affine { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }

    pub fn scale(&self, c: &FieldElement) -> Affine {
        Affine { a: self.a.mul(c), b: self.b.mul(c) }
    }

    pub fn eval(&self, t: &FieldElement) -> FieldElement {
        self.a.add(&self.b.mul(t))
    }
}

/// `P(x, y, T) = sum A_{i,j} x^i y^j` with `A_{i,j} = a + b*T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilPoly {
    field: Field,
    terms: BTreeMap<(u32, u32), Affine>,
}

impl PencilPoly {
    pub fn zero(field: Field) -> Self {
        PencilPoly { field, terms: BTreeMap::new() }
    }

    /// `p - T*g`.
    pub fn from_parts(p: &BiPoly, g: &BiPoly) -> Self {
        let field = p.field();
        let mut r = Self::zero(field);
        for (&(i, j), c) in p.terms() {
            r.add_term(i, j, &Affine::new(c.clone(), field.zero()));
        }
        for (&(i, j), c) in g.terms() {
            r.add_term(i, j, &Affine::new(field.zero(), c.neg()));
        }
        r
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Affine)>>(field: Field, it: I) -> Self {
        let mut r = Self::zero(field);
        for ((i, j), c) in it {
            r.add_term(i, j, &c);
        }
        r
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Affine> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Affine {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| Affine::zero(self.field))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &Affine) {
        if c.is_zero() {
            return;
        }
        let field = self.field;
        let e = self.terms.entry((i, j)).or_insert_with(|| Affine::zero(field));
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// The T-free part `p = P|_{T=0}`.
    pub fn k_part(&self) -> BiPoly {
        BiPoly::from_terms(self.field, self.terms.iter().map(|(k, c)| (*k, c.a.clone())))
    }

    /// `g = -dP/dT`.
    pub fn t_part(&self) -> BiPoly {
        BiPoly::from_terms(self.field, self.terms.iter().map(|(k, c)| (*k, c.b.neg())))
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement, t: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for (&(i, j), c) in &self.terms {
            acc = acc.add(&c.eval(t).mul(&x.pow(i as u64)).mul(&y.pow(j as u64)));
        }
        acc
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(k, v)| (*k, v.scale(c))))
    }

    /// Product with a polynomial over K.
    pub fn mul_k(&self, o: &BiPoly) -> Self {
        let mut r = Self::zero(self.field);
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in o.terms() {
                r.add_term(i1 + i2, j1 + j2, &a.scale(b));
            }
        }
        r
    }

    pub fn map_exponents<F: Fn(u32, u32) -> (u32, u32)>(&self, f: F) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(&(i, j), c)| (f(i, j), c.clone())))
    }

    /// Minimal exponents `(min i, min j)` over the support.
    pub fn monomial_content(&self) -> (u32, u32) {
        let i = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let j = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (i, j)
    }

    /// Divides by `x^a y^b`; every term must be divisible.
    pub fn divide_monomial(&self, a: u32, b: u32) -> Self {
        self.map_exponents(|i, j| (i - a, j - b))
    }

    /// `P(x, y + alpha * x^m)`; with `m = 0` this is the translation `y -> y + alpha`.
    pub fn substitute_y_plus(&self, alpha: &FieldElement, m: u32) -> Self {
        if alpha.is_zero() {
            return self.clone();
        }
        let mut r = Self::zero(self.field);
        let mut pows = vec![self.field.one()];
        for (&(i, j), c) in &self.terms {
            while pows.len() <= j as usize {
                let next = pows.last().expect("nonempty").mul(alpha);
                pows.push(next);
            }
            for (k, bin) in binomials(self.field, j).into_iter().enumerate() {
                let k = k as u32;
                let coef = c.scale(&bin.mul(&pows[(j - k) as usize]));
                r.add_term(i + m * (j - k), k, &coef);
            }
        }
        r
    }

    /// Smallest j with `A_{0,j}` having nonzero K-part.
    pub fn y_order_of_k_part(&self) -> Option<u32> {
        self.terms
            .iter()
            .filter(|(&(i, _), c)| i == 0 && !c.a.is_zero())
            .map(|(&(_, j), _)| j)
            .min()
    }
}

/// Classification of a polygon edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Dicritical,
    Ordinary,
    Absorbable,
}

impl EdgeKind {
    pub fn name(&self) -> &'static str {
        match self {
            EdgeKind::Dicritical => "dicritical",
            EdgeKind::Ordinary => "ordinary",
            EdgeKind::Absorbable => "absorbable",
        }
    }
}

/// A compact face of the Newton polygon, lying on `n*i + m*j = omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Endpoint with the larger j.
    pub top: (u32, u32),
    pub bottom: (u32, u32),
    pub n: u32,
    pub m: u32,
    pub omega: u32,
    pub u: u32,
    pub v: u32,
    pub d: u32,
    pub kind: EdgeKind,
}

impl Edge {
    fn from_endpoints(top: (u32, u32), bottom: (u32, u32)) -> Edge {
        let dj = top.1 - bottom.1;
        let di = bottom.0 - top.0;
        let d = dj.gcd(&di);
        let n = dj / d;
        let m = di / d;
        Edge {
            top,
            bottom,
            n,
            m,
            omega: n * top.0 + m * top.1,
            u: top.0,
            v: bottom.1,
            d,
            kind: EdgeKind::Ordinary,
        }
    }

    pub fn weight(&self, i: u32, j: u32) -> u32 {
        self.n * i + self.m * j
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        self.weight(i, j) == self.omega && j >= self.bottom.1 && j <= self.top.1
    }
}

/// The edge polynomial split into its T-free part and the coefficient of `-T`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeSupport {
    /// `q0(s) = sum a_{i,j} s^((j - v)/n)` over the edge.
    pub q0: KPoly,
    /// Coefficient of `-T` at the low vertex when it lies on `j = 0`.
    pub gamma: FieldElement,
}

/// Vertices of the lower-left hull of the support, from the y-axis side down.
pub fn hull_vertices(points: &[(u32, u32)]) -> Vec<(u32, u32)> {
    if points.is_empty() {
        return Vec::new();
    }
    let min_i = points.iter().map(|p| p.0).min().expect("nonempty");
    let top = *points.iter().filter(|p| p.0 == min_i).min_by_key(|p| p.1).expect("nonempty");
    let min_j = points.iter().map(|p| p.1).min().expect("nonempty");
    let bottom = *points.iter().filter(|p| p.1 == min_j).min_by_key(|p| p.0).expect("nonempty");
    let mut verts = vec![top];
    let mut cur = top;
    while cur != bottom {
        let mut best: Option<(u64, u64, (u32, u32))> = None;
        for &p in points {
            if p.1 >= cur.1 || p.0 <= cur.0 {
                continue;
            }
            let dj = (cur.1 - p.1) as u64;
            let di = (p.0 - cur.0) as u64;
            best = match best {
                None => Some((dj, di, p)),
                Some((bj, bi, bp)) => {
                    let lhs = dj * bi;
                    let rhs = bj * di;
                    if lhs > rhs || (lhs == rhs && p.0 > bp.0) {
                        Some((dj, di, p))
                    } else {
                        Some((bj, bi, bp))
                    }
                }
            };
        }
        cur = best.expect("hull step exists").2;
        verts.push(cur);
    }
    verts
}

/// Edges of the Newton polygon ordered by decreasing j, classified.
pub fn newton_polygon(p: &PencilPoly) -> Vec<Edge> {
    let pts: Vec<(u32, u32)> = p.terms().keys().copied().collect();
    let verts = hull_vertices(&pts);
    verts
        .windows(2)
        .map(|w| {
            let mut e = Edge::from_endpoints(w[0], w[1]);
            e.kind = classify_edge(p, &e);
            e
        })
        .collect()
}

pub fn edge_data(p: &PencilPoly, e: &Edge) -> EdgeSupport {
    let field = p.field();
    let mut coeffs = vec![field.zero(); e.d as usize + 1];
    for (&(i, j), c) in p.terms() {
        if e.contains(i, j) {
            let k = ((j - e.v) / e.n) as usize;
            coeffs[k] = coeffs[k].add(&c.a);
        }
    }
    let gamma = if e.bottom.1 == 0 {
        p.coeff(e.bottom.0, 0).b.neg()
    } else {
        field.zero()
    };
    let q0 = KPoly::from_coeffs(coeffs, field);
    debug_assert!(!q0.coeff(0).is_zero() || !gamma.is_zero(), "low vertex missing");
    EdgeSupport { q0, gamma }
}

/// Dicritical, absorbable or ordinary.
pub fn classify_edge(p: &PencilPoly, e: &Edge) -> EdgeKind {
    if e.bottom.1 == 0 && !p.coeff(e.bottom.0, 0).b.is_zero() {
        return EdgeKind::Dicritical;
    }
    if absorbable_root(p, e).is_some() {
        EdgeKind::Absorbable
    } else {
        EdgeKind::Ordinary
    }
}

/// The root `A` when the edge support is `c (y - A x^m)^d` spanning from the y-axis to the x-axis.
pub fn absorbable_root(p: &PencilPoly, e: &Edge) -> Option<FieldElement> {
    if e.n != 1 || e.top.0 != 0 || e.bottom.1 != 0 {
        return None;
    }
    if !p.coeff(e.bottom.0, 0).b.is_zero() {
        return None;
    }
    let q0 = edge_data(p, e).q0;
    let split = rational_roots(&q0);
    match split.roots.as_slice() {
        [(root, mult)] if *mult == e.d => Some(root.clone()),
        _ => None,
    }
}
