//! Dense recursive arithmetic in `Z[t][q]` for gcds and exact division.
//!
//! `U` is a polynomial in `t` (index = exponent), `B` a polynomial in `q`
//! with `U` coefficients. Both are kept trimmed: no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) type U = Vec<BigInt>;
pub(crate) type B = Vec<U>;

fn u_trim(mut a: U) -> U {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn u_sub(a: &U, b: &U) -> U {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    u_trim(out)
}

fn u_mul(a: &U, b: &U) -> U {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_scale(a: &U, n: &BigInt) -> U {
    u_trim(a.iter().map(|c| c * n).collect())
}

/// `a * t^k`.
fn u_shift(a: &U, k: usize) -> U {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

fn u_content(a: &U) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub(crate) fn u_exact_div(a: &U, b: &U) -> Option<U> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let mut quot = vec![BigInt::zero(); r.len() - b.len() + 1];
    let lb = b.last().expect("nonzero");
    while r.len() >= b.len() {
        let lr = r.last().expect("nonzero");
        let (c, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let d = r.len() - b.len();
        quot[d] = c.clone();
        r = u_sub(&r, &u_shift(&u_scale(b, &c), d));
    }
    r.is_empty().then(|| u_trim(quot))
}

fn u_prem(a: &U, b: &U) -> U {
    let lb = b.last().expect("nonzero").clone();
    let mut r = a.clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().expect("nonzero").clone();
        let d = r.len() - b.len();
        r = u_sub(&u_scale(&r, &lb), &u_shift(&u_scale(b, &lr), d));
    }
    r
}

fn u_primitive(a: &U) -> U {
    let c = u_content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: U = a.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|x| x.is_negative()) {
        out = out.iter().map(|x| -x).collect();
    }
    out
}

fn u_gcd(a: &U, b: &U) -> U {
    if a.is_empty() {
        return u_primitive(b).into_iter().map(|x| x * u_content(b).abs()).collect();
    }
    if b.is_empty() {
        return u_gcd(b, a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_scale(&u_primitive(&x), &c)
}

fn b_trim(mut a: B) -> B {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn b_sub(a: &B, b: &B) -> B {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), Vec::new());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = u_sub(&out[i], c);
    }
    b_trim(out)
}

fn b_scale(a: &B, c: &U) -> B {
    b_trim(a.iter().map(|x| u_mul(x, c)).collect())
}

fn b_shift(a: &B, k: usize) -> B {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); k];
    out.extend(a.iter().cloned());
    out
}

fn b_content(a: &B) -> U {
    let mut g: U = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0] == BigInt::from(1) {
            break;
        }
    }
    g
}

fn b_div_u(a: &B, c: &U) -> B {
    a.iter()
        .map(|x| u_exact_div(x, c).expect("content divides every coefficient"))
        .collect()
}

/// Exact quotient `a / b` in `Z[t][q]`, or `None` if `b` does not divide `a`.
pub(crate) fn b_exact_div(a: &B, b: &B) -> Option<B> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let mut quot: B = vec![Vec::new(); r.len() - b.len() + 1];
    let lb = b.last().expect("nonzero");
    while r.len() >= b.len() {
        let c = u_exact_div(r.last().expect("nonzero"), lb)?;
        let d = r.len() - b.len();
        r = b_sub(&r, &b_shift(&b_scale(b, &c), d));
        quot[d] = c;
    }
    r.is_empty().then(|| b_trim(quot))
}

fn b_prem(a: &B, b: &B) -> B {
    let lb = b.last().expect("nonzero").clone();
    let mut r = a.clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().expect("nonzero").clone();
        let d = r.len() - b.len();
        r = b_sub(&b_scale(&r, &lb), &b_shift(&b_scale(b, &lr), d));
    }
    r
}

fn b_primitive(a: &B) -> B {
    let c = b_content(a);
    if c.is_empty() {
        return Vec::new();
    }
    b_div_u(a, &c)
}

/// Gcd in `Z[q, t]`, up to sign.
pub(crate) fn b_gcd(a: &B, b: &B) -> B {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = u_gcd(&b_content(a), &b_content(b));
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    b_scale(&b_primitive(&x), &c)
}
