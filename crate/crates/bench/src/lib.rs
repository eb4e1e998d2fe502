//! Inputs shared by the benchmarks.

use dicritical_core::algebra::{BiPoly, Field};
use dicritical_core::pencil::{make_pencil, SpecialPencil};

/// `y^4 + y^2 x^3 + y x^7 + x^12 - T x^6`
pub fn quartic_pencil() -> SpecialPencil {
    let f = Field::Rationals;
    let p = BiPoly::from_i64s(f, &[(0, 4, 1), (3, 2, 1), (7, 1, 1), (12, 0, 1)]);
    make_pencil(&p, 6, &BiPoly::one(f)).expect("special")
}

/// `(y^3 - x^5)^2 - y^6 + y (y - x^2)^5 + 5 y x^7 (y - 3/4 x^2) - T x^11`
pub fn sextic_pencil() -> SpecialPencil {
    let f = Field::Rationals;
    let y = BiPoly::y(f);
    let a = BiPoly::from_i64s(f, &[(0, 3, 1), (5, 0, -1)]).pow(2);
    let b = y.mul(&BiPoly::from_i64s(f, &[(0, 1, 1), (2, 0, -1)]).pow(5));
    let c = BiPoly::from_i64s(f, &[(7, 2, 20), (9, 1, -15)]).scale(&f.from_i64(4).inv().expect("unit"));
    let p = a.sub(&y.pow(6)).add(&b).add(&c);
    make_pencil(&p, 11, &BiPoly::one(f)).expect("special")
}

/// Degree-11 polynomial with two points at infinity.
pub fn cotaep() -> BiPoly {
    let f = Field::Rationals;
    let p = BiPoly::from_i64s(
        f,
        &[(6, 5, 4), (5, 4, -20), (4, 3, 40), (3, 3, -8), (3, 2, -40), (2, 2, 20), (2, 1, 20), (1, 1, -15), (1, 0, -4), (0, 1, 4)],
    );
    p.scale(&f.from_i64(4).inv().expect("unit"))
}
