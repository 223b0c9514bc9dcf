//! Dense integer polynomial helpers (ascending coefficients) used for gcd
//! computations behind [`super::RationalFunction`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Dense) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn content(p: &Dense) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

pub(crate) fn primitive_part(p: &Dense) -> Dense {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let db = degree(b).expect("pseudo_rem by zero polynomial");
    let lc = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &lead * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd over `Z[q]`, normalized to a positive leading coefficient.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    trim(&mut x);
    trim(&mut y);
    if degree(&x) < degree(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    if x.last().is_some_and(|c| c.is_negative()) {
        for c in x.iter_mut() {
            *c = -c.clone();
        }
    }
    x
}

/// Exact quotient `a / b` over `Z[q]`; panics if the division is not exact.
pub(crate) fn exact_div(a: &Dense, b: &Dense) -> Dense {
    let db = degree(b).expect("exact_div by zero polynomial");
    let lc = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return Vec::new();
    };
    assert!(da >= db, "exact_div: degree too small");
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let lead = &r[k + db];
        if lead.is_zero() {
            continue;
        }
        let (c, rem) = lead.div_rem(lc);
        assert!(rem.is_zero(), "exact_div: non-integral quotient");
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        quot[k] = c;
    }
    trim(&mut r);
    assert!(r.is_empty(), "exact_div: nonzero remainder");
    trim(&mut quot);
    quot
}
