#![allow(dead_code)]

use dicritical_core::algebra::{BiPoly, Field, FieldElement};
use dicritical_core::pencil::{make_pencil, SpecialPencil};
use num_rational::BigRational;

pub fn q(n: i64, d: i64) -> FieldElement {
    Field::Rationals.from_rational(&BigRational::new(n.into(), d.into())).unwrap()
}

pub fn poly(field: Field, terms: &[(u32, u32, i64, i64)]) -> BiPoly {
    BiPoly::from_terms(
        field,
        terms.iter().map(|&(i, j, n, d)| {
            ((i, j), field.from_rational(&BigRational::new(n.into(), d.into())).unwrap())
        }),
    )
}

pub fn ints(field: Field, terms: &[(u32, u32, i64)]) -> BiPoly {
    BiPoly::from_i64s(field, terms)
}

/// `p - T x^c`
pub fn local(field: Field, p: &[(u32, u32, i64)], c: u32) -> SpecialPencil {
    make_pencil(&ints(field, p), c, &BiPoly::one(field)).unwrap()
}

/// `(y^3 - x^5)^2 - y^6 + y (y - x^2)^5 + 5 y x^7 (y - 3/4 x^2) - T x^11`
pub fn pencil_six() -> SpecialPencil {
    let f = Field::Rationals;
    let y = BiPoly::y(f);
    let a = ints(f, &[(0, 3, 1), (5, 0, -1)]).pow(2);
    let b = y.mul(&ints(f, &[(0, 1, 1), (2, 0, -1)]).pow(5));
    let c = poly(f, &[(7, 2, 5, 1), (9, 1, -15, 4)]);
    let p = a.sub(&y.pow(6)).add(&b).add(&c);
    make_pencil(&p, 11, &BiPoly::one(f)).unwrap()
}

/// Degree-11 polynomial with two points at infinity.
pub fn cotaep() -> BiPoly {
    poly(
        Field::Rationals,
        &[
            (6, 5, 1, 1),
            (5, 4, -5, 1),
            (4, 3, 10, 1),
            (3, 3, -2, 1),
            (3, 2, -10, 1),
            (2, 2, 5, 1),
            (2, 1, 5, 1),
            (1, 1, -15, 4),
            (1, 0, -1, 1),
            (0, 1, 1, 1),
        ],
    )
}

/// Degree-10 polynomial whose point `[0:1:0]` carries a non-bamboo quartic dicritical.
pub fn bound_sp() -> BiPoly {
    poly(
        Field::Rationals,
        &[
            (8, 2, 1, 1), (6, 3, -4, 1), (6, 2, 4, 1), (6, 1, -17, 4), (6, 0, -25, 4),
            (4, 4, 6, 1), (4, 3, -12, 1), (4, 2, 75, 4), (4, 1, 4, 1), (4, 0, -71, 4),
            (2, 5, -4, 1), (2, 4, 12, 1), (2, 3, -99, 4), (2, 2, 59, 4), (2, 1, 75, 4),
            (2, 0, -25, 2), (0, 6, 1, 1), (0, 5, -4, 1), (0, 4, 41, 4), (0, 3, -25, 2),
            (0, 1, 25, 4),
        ],
    )
}
