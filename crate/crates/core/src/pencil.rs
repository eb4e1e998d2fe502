//! Special pencils and the transforms of the toric-Newton process.

use thiserror::Error;

use crate::algebra::{BiPoly, FieldElement};
use crate::polygon::{absorbable_root, Edge, EdgeKind, PencilPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PencilError {
    #[error("not a special pencil: {0}")]
    NotSpecial(String),
    #[error("numerator is a unit at the origin; there is no base point")]
    UnitNumerator,
    #[error("toric step needs a nonzero root")]
    ZeroRoot,
    #[error("edge is not absorbable")]
    NotAbsorbable,
    #[error("edge is not ordinary")]
    NotOrdinary,
    #[error("transform broke an invariant: {0}")]
    Invariant(String),
}

/// `P = p - T x^c U` with `U(0,0) != 0`, `x` not dividing `p`, `p(0,0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPencil {
    poly: PencilPoly,
    c: u32,
    y_order: u32,
}

impl SpecialPencil {
    /// Validates an affine-in-T polynomial as a special pencil.
    pub fn from_poly(poly: PencilPoly) -> Result<Self, PencilError> {
        let g = poly.t_part();
        if g.is_zero() {
            return Err(PencilError::NotSpecial("no T term".into()));
        }
        let c = g.x_content();
        if c < 1 {
            return Err(PencilError::NotSpecial("T part is not divisible by x".into()));
        }
        if g.coeff(c, 0).is_zero() {
            return Err(PencilError::NotSpecial("T part is not x^c times a unit".into()));
        }
        let p = poly.k_part();
        if !p.coeff(0, 0).is_zero() {
            return Err(PencilError::UnitNumerator);
        }
        let Some(y_order) = poly.y_order_of_k_part() else {
            return Err(PencilError::NotSpecial("x divides the T-free part".into()));
        };
        Ok(SpecialPencil { poly, c, y_order })
    }

    pub fn poly(&self) -> &PencilPoly {
        &self.poly
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn y_order(&self) -> u32 {
        self.y_order
    }

    /// `U = g / x^c`.
    pub fn unit(&self) -> BiPoly {
        self.poly.t_part().map_exponents(|i, j| (i - self.c, j))
    }

    pub fn numerator(&self) -> BiPoly {
        self.poly.k_part()
    }
}

/// Assembles `p - T x^c U`.
pub fn make_pencil(p: &BiPoly, c: u32, u: &BiPoly) -> Result<SpecialPencil, PencilError> {
    if c < 1 {
        return Err(PencilError::NotSpecial("c must be positive".into()));
    }
    if u.coeff(0, 0).is_zero() {
        return Err(PencilError::NotSpecial("U(0,0) = 0".into()));
    }
    if p.is_zero() || p.x_content() > 0 {
        return Err(PencilError::NotSpecial("x divides p".into()));
    }
    if !p.coeff(0, 0).is_zero() {
        return Err(PencilError::UnitNumerator);
    }
    SpecialPencil::from_poly(PencilPoly::from_parts(p, &u.shift(c, 0)))
}

/// Smallest positive `a` with `b = (1 + a m) / n` a positive integer.
pub fn bezout_pair(n: u32, m: u32) -> (u32, u32) {
    assert!(n >= 1 && m >= 1, "positive ratios");
    let (n64, m64) = (n as u64, m as u64);
    let mut a = 1u64;
    while !(1 + a * m64).is_multiple_of(n64) {
        a += 1;
        assert!(a <= n64, "n and m must be coprime");
    }
    (a as u32, ((1 + a * m64) / n64) as u32)
}

/// Record of one toric-Newton transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricStep {
    pub edge: Edge,
    pub a: u32,
    pub b: u32,
    pub alpha: FieldElement,
    pub multiplicity: u32,
    pub divided_x_power: u32,
    pub divided_y_power: u32,
}

/// Record of an absorbed edge `y -> y + A x^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorbStep {
    pub edge: Edge,
    pub root: FieldElement,
    pub m: u32,
}

/// Monomial part of the toric map, before translation: returns the divided
/// polynomial and the powers `(omega, v~)` that were removed.
pub fn toric_monomial_map(p: &PencilPoly, n: u32, m: u32, a: u32, b: u32) -> (PencilPoly, u32, u32) {
    let mapped = p.map_exponents(|i, j| (n * i + m * j, a * i + b * j));
    let (ox, oy) = mapped.monomial_content();
    (mapped.divide_monomial(ox, oy), ox, oy)
}

/// Substitutes `x = x1^n (y1+alpha)^a`, `y = x1^m (y1+alpha)^b` and takes the strict transform.
pub fn toric_newton_child(
    s: &SpecialPencil,
    e: &Edge,
    alpha: &FieldElement,
    mult: u32,
) -> Result<(SpecialPencil, ToricStep), PencilError> {
    if e.kind != EdgeKind::Ordinary {
        return Err(PencilError::NotOrdinary);
    }
    if alpha.is_zero() {
        return Err(PencilError::ZeroRoot);
    }
    let (a, b) = bezout_pair(e.n, e.m);
    let (divided, ox, oy) = toric_monomial_map(s.poly(), e.n, e.m, a, b);
    if ox != e.omega {
        return Err(PencilError::Invariant(format!("x1-content {ox} differs from omega {}", e.omega)));
    }
    let child = divided.substitute_y_plus(alpha, 0);
    let child = SpecialPencil::from_poly(child).map_err(|err| PencilError::Invariant(err.to_string()))?;
    let expected_c = e.n * s.c() - e.omega;
    if child.c() != expected_c {
        return Err(PencilError::Invariant(format!("child c = {} but n c - omega = {expected_c}", child.c())));
    }
    if child.y_order() != mult {
        return Err(PencilError::Invariant(format!(
            "child y-order {} differs from root multiplicity {mult}",
            child.y_order()
        )));
    }
    let step = ToricStep {
        edge: e.clone(),
        a,
        b,
        alpha: alpha.clone(),
        multiplicity: mult,
        divided_x_power: ox,
        divided_y_power: oy,
    };
    Ok((child, step))
}

/// Substitutes `y -> y + A x^m` for an absorbable edge.
pub fn absorb_translation(s: &SpecialPencil, e: &Edge) -> Result<(SpecialPencil, AbsorbStep), PencilError> {
    if e.kind != EdgeKind::Absorbable {
        return Err(PencilError::NotAbsorbable);
    }
    let root = absorbable_root(s.poly(), e).ok_or(PencilError::NotAbsorbable)?;
    let moved = s.poly().substitute_y_plus(&root, e.m);
    let child = SpecialPencil::from_poly(moved).map_err(|err| PencilError::Invariant(err.to_string()))?;
    if child.y_order() != s.y_order() {
        return Err(PencilError::Invariant("absorption changed the y-order".into()));
    }
    Ok((child, AbsorbStep { edge: e.clone(), root, m: e.m }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::polygon::newton_polygon;

    #[test]
    fn bezout_pairs() {
        assert_eq!(bezout_pair(3, 5), (1, 2));
        assert_eq!(bezout_pair(2, 3), (1, 2));
        assert_eq!(bezout_pair(1, 1), (1, 2));
        assert_eq!(bezout_pair(5, 11), (4, 9));
    }

    #[test]
    fn make_pencil_checks() {
        let f = Field::Rationals;
        let one = BiPoly::one(f);
        let p = BiPoly::from_i64s(f, &[(0, 2, 1), (3, 0, 1)]);
        let s = make_pencil(&p, 2, &one).unwrap();
        assert_eq!((s.c(), s.y_order()), (2, 2));
        let xy = BiPoly::from_i64s(f, &[(1, 1, 1)]);
        assert!(matches!(make_pencil(&xy, 1, &one), Err(PencilError::NotSpecial(_))));
        let unit = BiPoly::from_i64s(f, &[(0, 0, 1), (0, 1, 1)]);
        assert_eq!(make_pencil(&unit, 1, &one), Err(PencilError::UnitNumerator));
        assert!(make_pencil(&p, 0, &one).is_err());
        assert!(make_pencil(&p, 1, &xy).is_err());
    }

    #[test]
    fn toric_child_of_node() {
        // y^2 - x^2 - T x^3, edge n = m = 1, alpha = 1
        let f = Field::Rationals;
        let p = BiPoly::from_i64s(f, &[(0, 2, 1), (2, 0, -1)]);
        let s = make_pencil(&p, 3, &BiPoly::one(f)).unwrap();
        let e = newton_polygon(s.poly())[0].clone();
        assert_eq!(e.kind, EdgeKind::Ordinary);
        let (child, step) = toric_newton_child(&s, &e, &f.one(), 1).unwrap();
        assert_eq!((step.a, step.b, step.divided_x_power, step.divided_y_power), (1, 2, 2, 2));
        assert_eq!(child.y_order(), 1);
        assert_eq!(child.c(), 1);
        // direct oracle: x = x1 y1, y = x1 y1^2, divide by x1^2 y1^2, then y1 -> y1 + 1
        let oracle_pre = PencilPoly::from_parts(
            &BiPoly::from_i64s(f, &[(0, 2, 1), (0, 0, -1)]),
            &BiPoly::from_i64s(f, &[(1, 1, 1)]),
        );
        assert_eq!(child.poly(), &oracle_pre.substitute_y_plus(&f.one(), 0));
    }

    #[test]
    fn absorb_square() {
        let f = Field::Rationals;
        let p = BiPoly::from_i64s(f, &[(0, 2, 1), (1, 1, -2), (2, 0, 1)]);
        let s = make_pencil(&p, 3, &BiPoly::one(f)).unwrap();
        let e = newton_polygon(s.poly())[0].clone();
        let (child, step) = absorb_translation(&s, &e).unwrap();
        assert_eq!(step.root, f.one());
        let expect = PencilPoly::from_parts(&BiPoly::from_i64s(f, &[(0, 2, 1)]), &BiPoly::from_i64s(f, &[(3, 0, 1)]));
        assert_eq!(child.poly(), &expect);
    }
}
