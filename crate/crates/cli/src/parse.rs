//! Polynomial expressions in `x`, `y` and `T` with exact coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use dicritical_core::algebra::{BiPoly, Field, FieldElement};
use dicritical_core::polygon::{Affine, PencilPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("exponent at {pos} is not a nonnegative integer")]
    NonIntegerExponent { pos: usize },
    #[error("T appears with degree {0}; a pencil is affine in T")]
    TDegreeTooHigh(u32),
    #[error("T is not allowed here")]
    UnexpectedT,
    #[error("unknown variable '{name}' at {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: usize },
    #[error("division by a non-constant at {pos}")]
    NonConstantDivisor { pos: usize },
    #[error("coefficient {value} has a denominator divisible by {p}")]
    DenominatorVanishes { value: String, p: u64 },
    #[error("bad variable mapping '{0}'")]
    BadVarMap(String),
    #[error("bad field '{0}'; use q or fp:<prime>")]
    BadField(String),
}

/// Which input name plays the role of `x`, `y` and `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarMap {
    pub x: String,
    pub y: String,
    pub t: String,
}

impl Default for VarMap {
    fn default() -> Self {
        VarMap { x: "x".into(), y: "y".into(), t: "T".into() }
    }
}

impl VarMap {
    /// Parses `x=z,y=x` style overrides.
    pub fn parse(spec: &str) -> Result<Self, ParseError> {
        let mut m = VarMap::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (role, name) = part.split_once('=').ok_or_else(|| ParseError::BadVarMap(part.into()))?;
            let name = name.trim().to_string();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(ParseError::BadVarMap(part.into()));
            }
            match role.trim() {
                "x" => m.x = name,
                "y" => m.y = name,
                "T" | "t" => m.t = name,
                _ => return Err(ParseError::BadVarMap(part.into())),
            }
        }
        if m.x == m.y || m.x == m.t || m.y == m.t {
            return Err(ParseError::BadVarMap(spec.into()));
        }
        Ok(m)
    }
}

pub fn parse_field(s: &str) -> Result<Field, ParseError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| ParseError::BadField(s.into()))?;
    Field::prime(p).map_err(|_| ParseError::BadField(s.into()))
}

/// Exponents of `x`, `y`, `T`.
type Key = (u32, u32, u32);

/// A polynomial in `x`, `y`, `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly3 {
    field: Field,
    terms: BTreeMap<Key, FieldElement>,
}

impl Poly3 {
    fn zero(field: Field) -> Self {
        Poly3 { field, terms: BTreeMap::new() }
    }

    fn constant(c: FieldElement) -> Self {
        let mut p = Poly3::zero(c.field());
        p.add_term((0, 0, 0), &c);
        p
    }

    fn var(field: Field, k: Key) -> Self {
        let mut p = Poly3::zero(field);
        p.add_term(k, &field.one());
        p
    }

    fn add_term(&mut self, k: Key, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&k) {
            Some(e) => e.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, v);
        }
    }

    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c);
        }
        r
    }

    fn neg(&self) -> Self {
        Poly3 { field: self.field, terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut r = Poly3::zero(self.field);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                r.add_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), &c.mul(d));
            }
        }
        r
    }

    fn pow(&self, e: u32) -> Self {
        let mut r = Poly3::constant(self.field.one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&(0, 0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn t_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.2).max().unwrap_or(0)
    }

    pub fn to_bipoly(&self) -> Result<BiPoly, ParseError> {
        if self.t_degree() > 0 {
            return Err(ParseError::UnexpectedT);
        }
        Ok(BiPoly::from_terms(self.field, self.terms.iter().map(|(k, c)| ((k.0, k.1), c.clone()))))
    }

    pub fn to_pencil(&self) -> Result<PencilPoly, ParseError> {
        let d = self.t_degree();
        if d > 1 {
            return Err(ParseError::TDegreeTooHigh(d));
        }
        let mut out = PencilPoly::zero(self.field);
        for (k, c) in &self.terms {
            let z = self.field.zero();
            let a = if k.2 == 0 { Affine::new(c.clone(), z) } else { Affine::new(z, c.clone()) };
            out.add_term(k.0, k.1, &a);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().map(|p| p.1).collect();
            out.push((Tok::Int(text.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphabetic() {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().map(|p| p.1).collect()), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), pos));
            k += 1;
        } else if c == '\u{2212}' {
            out.push((Tok::Op('-'), pos));
            k += 1;
        } else {
            return Err(ParseError::SyntaxError { pos, msg: format!("unexpected character '{c}'") });
        }
    }
    out.push((Tok::End, s.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    field: Field,
    vars: &'a VarMap,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == &Tok::Op(c) {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::SyntaxError { pos: self.pos(), msg: format!("expected '{c}'") })
        }
    }

    fn expr(&mut self) -> Result<Poly3, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly3, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Op('/') => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    let c = d.as_constant().ok_or(ParseError::NonConstantDivisor { pos })?;
                    let inv = c.inv().ok_or(ParseError::DivisionByZero { pos })?;
                    acc = acc.mul(&Poly3::constant(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly3, ParseError> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly3, ParseError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let e = match self.bump() {
            Tok::Int(n) => n,
            Tok::Op('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                let c = inner.as_constant().ok_or(ParseError::NonIntegerExponent { pos })?;
                let r = c.as_rational().ok_or(ParseError::NonIntegerExponent { pos })?;
                if !r.is_integer() {
                    return Err(ParseError::NonIntegerExponent { pos });
                }
                r.to_integer()
            }
            Tok::Op('-') => return Err(ParseError::NonIntegerExponent { pos }),
            _ => return Err(ParseError::SyntaxError { pos, msg: "expected an exponent".into() }),
        };
        let e: u32 = e.try_into().map_err(|_| ParseError::NonIntegerExponent { pos })?;
        if self.peek() == &Tok::Op('^') {
            return Err(ParseError::SyntaxError { pos: self.pos(), msg: "chained '^' needs parentheses".into() });
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly3, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let r = BigRational::from_integer(n);
                let c = self.field.from_rational(&r).map_err(|_| ParseError::DenominatorVanishes {
                    value: r.to_string(),
                    p: self.field.characteristic(),
                })?;
                Ok(Poly3::constant(c))
            }
            Tok::Ident(name) => {
                let k = if name == self.vars.x {
                    (1, 0, 0)
                } else if name == self.vars.y {
                    (0, 1, 0)
                } else if name == self.vars.t {
                    (0, 0, 1)
                } else {
                    return Err(ParseError::UnknownVariable { name, pos });
                };
                Ok(Poly3::var(self.field, k))
            }
            Tok::Op('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::End => Err(ParseError::SyntaxError { pos, msg: "unexpected end of input".into() }),
            Tok::Op(c) => Err(ParseError::SyntaxError { pos, msg: format!("unexpected '{c}'") }),
        }
    }
}

/// Parses an expression; positions in errors are byte offsets.
pub fn parse_expression(text: &str, field: Field, vars: &VarMap) -> Result<Poly3, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, field, vars };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(ParseError::SyntaxError { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(e)
}

pub fn parse_bipoly(text: &str, field: Field, vars: &VarMap) -> Result<BiPoly, ParseError> {
    parse_expression(text, field, vars)?.to_bipoly()
}

pub fn parse_pencil(text: &str, field: Field, vars: &VarMap) -> Result<PencilPoly, ParseError> {
    parse_expression(text, field, vars)?.to_pencil()
}

fn monomial_text(c: &FieldElement, factors: &[(&str, u32)], first: bool) -> String {
    let vars: Vec<String> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    let neg = c.is_negative_rational();
    let abs = if neg { c.neg() } else { c.clone() };
    let body = if vars.is_empty() {
        abs.to_string()
    } else if abs.is_one() {
        vars.join("*")
    } else {
        format!("{abs}*{}", vars.join("*"))
    };
    match (first, neg) {
        (true, true) => format!("-{body}"),
        (true, false) => body,
        (false, true) => format!(" - {body}"),
        (false, false) => format!(" + {body}"),
    }
}

/// Terms by descending total degree, then descending `y`, then `T`.
fn ordered<'a, I: Iterator<Item = (Key, &'a FieldElement)>>(it: I) -> Vec<(Key, &'a FieldElement)> {
    let mut v: Vec<_> = it.collect();
    v.sort_by(|a, b| {
        let da = a.0 .0 + a.0 .1 + a.0 .2;
        let db = b.0 .0 + b.0 .1 + b.0 .2;
        db.cmp(&da).then(b.0 .1.cmp(&a.0 .1)).then(b.0 .2.cmp(&a.0 .2))
    });
    v
}

fn print_terms(terms: Vec<(Key, &FieldElement)>, vars: &VarMap) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, ((i, j, t), c)) in terms.into_iter().enumerate() {
        out.push_str(&monomial_text(c, &[(&vars.t, t), (&vars.x, i), (&vars.y, j)], k == 0));
    }
    out
}

pub fn print_bipoly(p: &BiPoly, vars: &VarMap) -> String {
    print_terms(ordered(p.terms().iter().map(|(k, c)| ((k.0, k.1, 0), c))), vars)
}

pub fn print_pencil(p: &PencilPoly, vars: &VarMap) -> String {
    let mut flat: Vec<(Key, &FieldElement)> = Vec::new();
    for (k, c) in p.terms() {
        if !c.a.is_zero() {
            flat.push(((k.0, k.1, 0), &c.a));
        }
        if !c.b.is_zero() {
            flat.push(((k.0, k.1, 1), &c.b));
        }
    }
    print_terms(ordered(flat.into_iter()), vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn ratio(n: i64, d: i64) -> FieldElement {
        q().from_rational(&BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn simple_expression() {
        let p = parse_bipoly("y^2 - 2*x*y + 5/8*x^3", q(), &VarMap::default()).unwrap();
        assert_eq!(p.coeff(3, 0), ratio(5, 8));
        assert_eq!(p.coeff(1, 1), ratio(-2, 1));
        assert_eq!(p.terms().len(), 3);
    }

    #[test]
    fn mapped_variables() {
        let vars = VarMap::parse("x=z,y=x").unwrap();
        let text = "(x^3 - z^5)^2 - x^6 + x*(x - z^2)^5 + 5*x*z^7*(x - 3/4*z^2) - T*z^11";
        let p = parse_pencil(text, q(), &vars).unwrap();
        assert_eq!(p.t_part(), BiPoly::from_i64s(q(), &[(11, 0, 1)]));
        assert_eq!(p.coeff(10, 0).a, q().one());
        assert_eq!(p.coeff(9, 1).a, ratio(-15, 4));
    }

    #[test]
    fn errors_carry_positions() {
        let v = VarMap::default();
        assert_eq!(parse_expression("y^(1/2)", q(), &v), Err(ParseError::NonIntegerExponent { pos: 2 }));
        assert!(matches!(parse_expression("y + * x", q(), &v), Err(ParseError::SyntaxError { pos: 4, .. })));
        assert!(matches!(parse_expression("y + w", q(), &v), Err(ParseError::UnknownVariable { pos: 4, .. })));
        assert_eq!(parse_pencil("y - T^2*x", q(), &v), Err(ParseError::TDegreeTooHigh(2)));
        assert!(matches!(parse_expression("x/y", q(), &v), Err(ParseError::NonConstantDivisor { .. })));
        assert!(matches!(parse_expression("x/0", q(), &v), Err(ParseError::DivisionByZero { .. })));
        assert!(matches!(parse_expression("(x", q(), &v), Err(ParseError::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_expression("x 2", q(), &v), Err(ParseError::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_expression("x/5", Field::Prime(5), &v), Err(ParseError::DivisionByZero { .. })));
    }

    #[test]
    fn round_trip() {
        let v = VarMap::default();
        for text in ["y^2 - 2*x*y + 5/8*x^3", "(y - x)^3 - T*x^4*(1 + y)", "-y", "0", "3*T*x - 7/3"] {
            let p = parse_pencil(text, q(), &v).unwrap();
            let back = parse_pencil(&print_pencil(&p, &v), q(), &v).unwrap();
            assert_eq!(p, back, "{text}");
        }
        let f7 = Field::Prime(7);
        let p = parse_bipoly("3*x^2 - y/2", f7, &v).unwrap();
        assert_eq!(parse_bipoly(&print_bipoly(&p, &v), f7, &v).unwrap(), p);
        assert_eq!(print_bipoly(&parse_bipoly("y^2 - 2*x*y + 5/8*x^3", q(), &v).unwrap(), &v), "5/8*x^3 + y^2 - 2*x*y");
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("q").unwrap(), Field::Rationals);
        assert_eq!(parse_field("fp:5").unwrap(), Field::Prime(5));
        assert!(parse_field("fp:6").is_err());
        assert!(parse_field("r").is_err());
    }
}
