//! Roots in K and squarefree parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{is_prime, Field, FieldElement};
use super::poly::KPoly;

/// Roots in K with multiplicities plus the part without roots in K.
///
/// `input == residual * prod (s - root)^mult` exactly; the residual keeps the
/// leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSplit {
    pub roots: Vec<(FieldElement, u32)>,
    pub residual: KPoly,
}

impl RootSplit {
    pub fn distinct_roots(&self) -> impl Iterator<Item = &FieldElement> {
        self.roots.iter().map(|(r, _)| r)
    }

    /// True when the residual has positive degree.
    pub fn has_residual(&self) -> bool {
        self.residual.deg0() > 0
    }
}

/// Roots of a nonzero polynomial in K, sorted canonically.
pub fn rational_roots(u: &KPoly) -> RootSplit {
    assert!(!u.is_zero(), "roots of the zero polynomial");
    let field = u.field();
    let candidates: Vec<FieldElement> = match field {
        Field::Prime(_) => field
            .elements()
            .expect("prime field")
            .filter(|x| u.eval(x).is_zero())
            .collect(),
        Field::Rationals => rational_candidates(u),
    };
    let mut residual = u.clone();
    let mut roots = Vec::new();
    for r in candidates {
        let lin = KPoly::linear_root(&r, field);
        let mut mult = 0;
        while let Some(q) = residual.exact_div(&lin) {
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RootSplit { roots, residual }
}

/// Monic polynomial with the same distinct roots over the closure, all simple.
pub fn squarefree_part(u: &KPoly) -> KPoly {
    assert!(!u.is_zero(), "squarefree part of the zero polynomial");
    let f = u.monic();
    if f.deg0() == 0 {
        return KPoly::one(u.field());
    }
    match u.field() {
        Field::Rationals => f.exact_div(&f.gcd(&f.derivative())).expect("gcd divides").monic(),
        Field::Prime(p) => radical_char_p(&f, p),
    }
}

fn radical_char_p(f: &KPoly, p: u64) -> KPoly {
    let field = f.field();
    if f.deg0() == 0 {
        return KPoly::one(field);
    }
    let d = f.derivative();
    if d.is_zero() {
        return radical_char_p(&pth_root(f, p), p);
    }
    let g = f.gcd(&d);
    let w = f.exact_div(&g).expect("gcd divides");
    let mut rest = g;
    loop {
        let y = rest.gcd(&w);
        if y.deg0() == 0 {
            break;
        }
        rest = rest.exact_div(&y).expect("gcd divides");
    }
    let tail = if rest.deg0() > 0 {
        radical_char_p(&pth_root(&rest, p), p)
    } else {
        KPoly::one(field)
    };
    w.mul(&tail).monic()
}

/// For `f(s) = g(s^p)` over F_p returns `g`; Frobenius fixes F_p.
fn pth_root(f: &KPoly, p: u64) -> KPoly {
    let p = p as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    KPoly::from_coeffs(coeffs, f.field())
}

/// Number of distinct roots over the closure.
pub fn distinct_root_count(u: &KPoly) -> usize {
    squarefree_part(u).deg0()
}

// ---- rational roots by p-adic lifting ----

fn rational_candidates(u: &KPoly) -> Vec<FieldElement> {
    let mut out = Vec::new();
    let mut f = squarefree_part(u);
    if f.coeff(0).is_zero() {
        out.push(Field::Rationals.zero());
        f = f.exact_div(&KPoly::var(Field::Rationals)).expect("s divides");
    }
    if f.deg0() == 0 {
        return out;
    }
    let g = primitive_integer_poly(&f);
    for (a, b) in integer_poly_rational_roots(&g) {
        out.push(FieldElement::Rational(BigRational::new(a, b)));
    }
    out
}

/// Clears denominators and removes content; the result has positive leading coefficient.
fn primitive_integer_poly(f: &KPoly) -> Vec<BigInt> {
    let rs: Vec<&BigRational> = f.coeffs().iter().map(|c| c.as_rational().expect("rational")).collect();
    let l = rs.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rs.iter().map(|r| (*r * &l).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in ints.iter_mut() {
        *c = &*c / &content;
    }
    if ints.last().expect("nonconstant").is_negative() {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    ints
}

fn eval_int(g: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in g.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn deriv_int(g: &[BigInt]) -> Vec<BigInt> {
    g.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn poly_mod_p(g: &[BigInt], p: u64) -> KPoly {
    let field = Field::Prime(p);
    KPoly::from_coeffs(g.iter().map(|c| field.from_bigint(c)).collect(), field)
}

/// Smallest prime not dividing the leading coefficient for which `g` stays squarefree.
fn good_prime(g: &[BigInt]) -> u64 {
    let lc = g.last().expect("nonempty");
    let mut p = 2u64;
    loop {
        if is_prime(p) && !(lc % BigInt::from(p)).is_zero() {
            let gp = poly_mod_p(g, p);
            if gp.gcd(&gp.derivative()).deg0() == 0 {
                return p;
            }
        }
        p += 1;
    }
}

/// Rational roots `a/b` (b > 0) of a squarefree primitive integer polynomial with `g(0) != 0`.
fn integer_poly_rational_roots(g: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let lc = g.last().expect("nonempty").abs();
    let g0 = g[0].abs();
    let bound = BigInt::from(2) * &g0 * &lc;
    let p = good_prime(g);
    let gp = poly_mod_p(g, p);
    let dg = deriv_int(g);
    let mut found = Vec::new();
    for r in Field::Prime(p).elements().expect("prime field") {
        if !gp.eval(&r).is_zero() {
            continue;
        }
        let FieldElement::Prime { value, .. } = r else { unreachable!() };
        let mut m = BigInt::from(p);
        let mut x = BigInt::from(value);
        while m <= bound {
            m = &m * &m;
            let fx = eval_int(g, &x, &m);
            let dx = eval_int(&dg, &x, &m);
            let inv = inv_mod_big(&dx, &m).expect("simple root mod p");
            x = (&x - fx * inv).mod_floor(&m);
        }
        if let Some((a, b)) = reconstruct(&x, &m, &g0, &lc) {
            if is_root(g, &a, &b) {
                found.push((a, b));
            }
        }
    }
    found
}

/// Finds `a/b` with `|a| <= amax`, `0 < b <= bmax`, `a = b x mod m`.
fn reconstruct(x: &BigInt, m: &BigInt, amax: &BigInt, bmax: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > amax {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    let (a, b) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    (&b <= bmax && a.gcd(&b).is_one()).then_some((a, b))
}

fn is_root(g: &[BigInt], a: &BigInt, b: &BigInt) -> bool {
    // sum g_k a^k b^(n-k) == 0
    let n = g.len() - 1;
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    let bpows: Vec<BigInt> = (0..=n).map(|k| num_traits::pow(b.clone(), k)).collect();
    for (k, c) in g.iter().enumerate() {
        acc += c * &apow * &bpows[n - k];
        apow *= a;
    }
    acc.is_zero()
}
