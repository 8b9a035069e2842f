//! Dense univariate polynomials over an exact scalar field, low degree
//! first. Just enough machinery for minimal polynomials and idempotent
//! splitting: division, extended gcd and root extraction.


use crate::scalar::ExactScalar;

pub type Poly<K> = Vec<K>;

pub fn trim<K: ExactScalar>(p: &mut Poly<K>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

pub fn degree<K: ExactScalar>(p: &Poly<K>) -> usize {
    let mut d = p.len();
    while d > 1 && p[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

pub fn is_zero_poly<K: ExactScalar>(p: &Poly<K>) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn eval<K: ExactScalar>(p: &Poly<K>, x: &K) -> K {
    let mut acc = K::zero();
    for c in p.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

pub fn add<K: ExactScalar>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    let n = a.len().max(b.len());
    let mut out = vec![K::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].clone() + c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].clone() + c.clone();
    }
    trim(&mut out);
    out
}

pub fn scale<K: ExactScalar>(a: &Poly<K>, c: &K) -> Poly<K> {
    let mut out: Poly<K> = a.iter().map(|x| x.clone() * c.clone()).collect();
    trim(&mut out);
    out
}

pub fn mul<K: ExactScalar>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    if is_zero_poly(a) || is_zero_poly(b) {
        return vec![K::zero()];
    }
    let mut out = vec![K::zero(); degree(a) + degree(b) + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Quotient and remainder of `a / b`; `b` nonzero.
pub fn divrem<K: ExactScalar>(a: &Poly<K>, b: &Poly<K>) -> (Poly<K>, Poly<K>) {
    assert!(!is_zero_poly(b));
    let db = degree(b);
    let lead_inv = b[db].inverse().expect("nonzero leading coefficient");
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![K::zero(); degree(&rem).saturating_sub(db) + 1];
    while !is_zero_poly(&rem) && degree(&rem) >= db {
        let dr = degree(&rem);
        let factor = rem[dr].clone() * lead_inv.clone();
        quot[dr - db] = factor.clone();
        for j in 0..=db {
            let delta = factor.clone() * b[j].clone();
            rem[dr - db + j] = rem[dr - db + j].clone() - delta;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn monic<K: ExactScalar>(p: &Poly<K>) -> Poly<K> {
    let d = degree(p);
    let inv = p[d].inverse().expect("nonzero polynomial");
    scale(p, &inv)
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g, g monic.
pub fn egcd<K: ExactScalar>(a: &Poly<K>, b: &Poly<K>) -> (Poly<K>, Poly<K>, Poly<K>) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Poly<K> = vec![K::one()];
    let mut s1: Poly<K> = vec![K::zero()];
    let mut t0: Poly<K> = vec![K::zero()];
    let mut t1: Poly<K> = vec![K::one()];
    while !is_zero_poly(&r1) {
        let (q, r) = divrem(&r0, &r1);
        let qs = mul(&q, &s1);
        let qt = mul(&q, &t1);
        let ns = add(&s0, &scale(&qs, &-K::one()));
        let nt = add(&t0, &scale(&qt, &-K::one()));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, ns);
        t0 = std::mem::replace(&mut t1, nt);
    }
    let d = degree(&r0);
    let inv = r0[d].inverse().expect("gcd nonzero");
    (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
}

/// Roots of `p` lying in the field, with multiplicities, found by candidate
/// testing and deflation.
pub fn field_roots<K: ExactScalar>(p: &Poly<K>) -> Vec<(K, usize)> {
    let mut p = p.clone();
    trim(&mut p);
    let mut roots = Vec::new();
    // Zero roots first.
    let mut zero_mult = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((K::zero(), zero_mult));
    }
    if degree(&p) == 0 {
        return roots;
    }
    for cand in K::root_candidates(&p) {
        if cand.is_zero() {
            continue;
        }
        let mut mult = 0;
        while degree(&p) >= 1 && eval(&p, &cand).is_zero() {
            let linear = vec![-cand.clone(), K::one()];
            let (q, r) = divrem(&p, &linear);
            debug_assert!(is_zero_poly(&r));
            p = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
        if degree(&p) == 0 {
            break;
        }
    }
    roots
}

/// True when the polynomial is a pure power of t (nilpotency witness).
pub fn is_power_of_t<K: ExactScalar>(p: &Poly<K>) -> bool {
    let d = degree(p);
    p.iter().take(d).all(|c| c.is_zero())
}

pub fn to_string<K: ExactScalar>(p: &Poly<K>) -> String {
    let d = degree(p);
    let mut parts = Vec::new();
    for i in (0..=d).rev() {
        if p[i].is_zero() {
            continue;
        }
        let coeff = format!("{}", p[i]);
        let part = match i {
            0 => coeff,
            1 if p[i].is_one() => "t".to_string(),
            1 => format!("({})*t", coeff),
            _ if p[i].is_one() => format!("t^{}", i),
            _ => format!("({})*t^{}", coeff, i),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}
