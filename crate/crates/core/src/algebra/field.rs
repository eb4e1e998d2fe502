//! Ground fields: the rationals and prime fields.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Largest modulus accepted by default. Root finding scans every element.
pub const DEFAULT_PRIME_LIMIT: u64 = 1 << 16;

/// The ground field K.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Prime field with the default size limit.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        Field::prime_with_limit(p, DEFAULT_PRIME_LIMIT)
    }

    pub fn prime_with_limit(p: u64, limit: u64) -> Result<Field, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if p >= limit {
            return Err(AlgebraError::PrimeTooLarge { p, limit });
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElement::Prime {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => FieldElement::Prime {
                value: reduce_bigint(v, *p),
                modulus: *p,
            },
        }
    }

    /// Maps a rational into the field. Fails when the denominator vanishes mod p.
    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement, AlgebraError> {
        match self {
            Field::Rationals => Ok(FieldElement::Rational(r.clone())),
            Field::Prime(p) => {
                let den = reduce_bigint(r.denom(), *p);
                if den == 0 {
                    return Err(AlgebraError::DenominatorVanishes {
                        value: r.to_string(),
                        p: *p,
                    });
                }
                let num = reduce_bigint(r.numer(), *p);
                Ok(FieldElement::Prime {
                    value: mul_mod(num, inv_mod(den, *p), *p),
                    modulus: *p,
                })
            }
        }
    }

    /// All elements of a prime field in increasing order; `None` over the rationals.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => {
                let p = *p;
                Some((0..p).map(move |v| FieldElement::Prime { value: v, modulus: p }))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Deterministic trial division; moduli are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// An element of K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Prime { value: a, modulus: p }, FieldElement::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                FieldElement::Prime {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Prime { value: a, modulus: p }, FieldElement::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                FieldElement::Prime {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, o: &FieldElement) -> Option<FieldElement> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        match self {
            FieldElement::Rational(a) => {
                let e = i32::try_from(e).expect("exponent too large");
                FieldElement::Rational(num_traits::pow::Pow::pow(a, e))
            }
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: pow_mod(*value, e, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn scale_int(&self, k: i64) -> FieldElement {
        self.mul(&self.field().from_i64(k))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Canonical order: rationals by value, prime-field elements by representative.
    pub fn canonical_cmp(&self, o: &FieldElement) -> Ordering {
        match (self, o) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a.cmp(b),
            (FieldElement::Prime { value: a, modulus: p }, FieldElement::Prime { value: b, modulus: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            (FieldElement::Rational(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_negative())
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

/// Exact text: `-5/8`, `3`, or the representative in `[0, p)`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Scalars usable as polynomial coefficients: K itself and K(T).
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero(field: Field) -> Self;
    fn one(field: Field) -> Self;
    fn from_base(x: &FieldElement) -> Self;
    fn field(&self) -> Field;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Inverse of a nonzero element.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(field: Field, v: i64) -> Self {
        Self::from_base(&field.from_i64(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one(self.field())
    }
}

impl Scalar for FieldElement {
    fn zero(field: Field) -> Self {
        field.zero()
    }
    fn one(field: Field) -> Self {
        field.one()
    }
    fn from_base(x: &FieldElement) -> Self {
        x.clone()
    }
    fn field(&self) -> Field {
        FieldElement::field(self)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

/// Integer value of a rational with denominator one.
pub fn rational_to_bigint(r: &BigRational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn prime_check() {
        assert!(Field::prime(7).is_ok());
        assert!(matches!(Field::prime(9), Err(AlgebraError::NotPrime(9))));
        assert!(matches!(Field::prime(65537), Err(AlgebraError::PrimeTooLarge { .. })));
        assert!(Field::prime_with_limit(65537, 1 << 20).is_ok());
    }

    #[test]
    fn rational_lowest_terms() {
        let a = q(6, -8);
        assert_eq!(a.to_string(), "-3/4");
        assert_eq!(a.add(&q(3, 4)), q(0, 1));
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        assert_eq!(a.inv().unwrap(), f.from_i64(5));
        assert_eq!(f.from_i64(-1).to_string(), "6");
        let r = f.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(r, f.from_i64(4));
        assert!(f.from_rational(&BigRational::new(1.into(), 7.into())).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![q(1, 2), q(-3, 1), q(0, 1)];
        v.sort();
        assert_eq!(v, vec![q(-3, 1), q(0, 1), q(1, 2)]);
    }
}
