//! The rational function field K(T).

use std::fmt;

use super::field::{Field, FieldElement, Scalar};
use super::poly::KPoly;

/// Reduced fraction `num / den` with `den` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: KPoly,
    den: KPoly,
}

impl RatFunc {
    pub fn new(num: KPoly, den: KPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let field = num.field();
        if num.is_zero() {
            return RatFunc { num, den: KPoly::one(field) };
        }
        let g = num.gcd(&den);
        let mut n = num.exact_div(&g).expect("gcd divides");
        let mut d = den.exact_div(&g).expect("gcd divides");
        let l = d.lc();
        let inv = l.inv().expect("nonzero");
        n = n.scale(&inv);
        d = d.scale(&inv);
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: KPoly) -> Self {
        let f = p.field();
        RatFunc { num: p, den: KPoly::one(f) }
    }

    /// `a + b*T`.
    pub fn affine(a: &FieldElement, b: &FieldElement) -> Self {
        let f = a.field();
        Self::from_poly(KPoly::from_coeffs(vec![a.clone(), b.clone()], f))
    }

    pub fn num(&self) -> &KPoly {
        &self.num
    }

    pub fn den(&self) -> &KPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.deg0() == 0
    }

    /// Value at `T = t`; `None` at a pole.
    pub fn eval(&self, t: &FieldElement) -> Option<FieldElement> {
        self.num.eval(t).div(&self.den.eval(t))
    }

    pub fn to_text(&self) -> String {
        let n = self.num.to_text("T");
        if self.is_polynomial() {
            n
        } else {
            format!("({n})/({})", self.den.to_text("T"))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Scalar for RatFunc {
    fn zero(field: Field) -> Self {
        Self::from_poly(KPoly::zero(field))
    }
    fn one(field: Field) -> Self {
        Self::from_poly(KPoly::one(field))
    }
    fn from_base(x: &FieldElement) -> Self {
        Self::from_poly(KPoly::constant(x.clone(), x.field()))
    }
    fn field(&self) -> Field {
        self.num.field()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.field());
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn negated(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }
}
