//! Exact coefficient fields: the rationals (modeling the real case) and the
//! Gaussian rationals (modeling the complex case). Every computation in the
//! crate is exact; there is no floating point anywhere.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rationals, the coefficient field for real Clifford superalgebras.
pub type Rat = BigRational;

/// The scalar interface the whole crate is generic over. Implemented by
/// [`Rat`] and [`GaussRat`]; both are canonical-form exact fields, so equality
/// is decidable and bitwise on canonical representations.
pub trait ExactScalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    const FIELD_NAME: &'static str;

    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_rat(r: &Rat) -> Self;

    /// The imaginary unit, when the field has one.
    fn imaginary_unit() -> Option<Self>;

    fn conjugate(&self) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// An exact square root within the field, if one exists.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Candidate roots for a polynomial with these coefficients (low degree
    /// first, nonzero constant and leading terms). Candidates are verified by
    /// the caller; the list only has to contain the roots that actually lie
    /// in the field for the polynomials this crate produces.
    fn root_candidates(coeffs: &[Self]) -> Vec<Self>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.clone() * inv)
    }
}

fn sqrt_biguint(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

fn sqrt_rat(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = sqrt_biguint(r.numer().magnitude())?;
    let den = sqrt_biguint(r.denom().magnitude())?;
    Some(Rat::new(BigInt::from(num), BigInt::from(den)))
}

/// Divisors of `n` obtained by trial division. Factoring stops at a fixed
/// bound; an unfactored cofactor is kept as if prime, so the list may be a
/// subset of all divisors for adversarial inputs. The divisor count is capped.
fn divisors(n: &BigInt, cap: usize) -> Vec<BigInt> {
    let mut m = n.magnitude().clone();
    if m.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, k: u32, factors: &mut Vec<(BigUint, u32)>| {
        if k > 0 {
            factors.push((p, k));
        }
    };
    let mut k = 0u32;
    let two = BigUint::from(2u32);
    while (&m % &two).is_zero() {
        m /= &two;
        k += 1;
    }
    push(two, k, &mut factors);
    let mut p = BigUint::from(3u32);
    let bound = BigUint::from(1_000_000u64);
    while &p * &p <= m && p <= bound {
        let mut k = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            k += 1;
        }
        push(p.clone(), k, &mut factors);
        p += 2u32;
    }
    if !m.is_one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, k) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=k {
                next.push(d * &pk);
                if next.len() >= cap {
                    break;
                }
                pk *= &p;
            }
            if next.len() >= cap {
                break;
            }
        }
        divs = next;
        divs.sort();
        divs.dedup();
        if divs.len() >= cap {
            divs.truncate(cap);
            break;
        }
    }
    divs.into_iter().map(BigInt::from).collect()
}

fn small_rat_candidates() -> Vec<Rat> {
    [
        (1, 1),
        (-1, 1),
        (2, 1),
        (-2, 1),
        (1, 2),
        (-1, 2),
        (3, 1),
        (-3, 1),
        (4, 1),
        (-4, 1),
        (1, 4),
        (-1, 4),
        (3, 2),
        (-3, 2),
    ]
    .iter()
    .map(|&(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
    .collect()
}

fn rat_root_candidates(coeffs: &[Rat]) -> Vec<Rat> {
    let mut out = small_rat_candidates();
    if coeffs.len() < 2 {
        return out;
    }
    // Clear denominators to apply the rational root theorem.
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let c0 = &ints[0];
    let cn = ints.last().unwrap();
    if c0.is_zero() || cn.is_zero() {
        return out;
    }
    let num_divs = divisors(c0, 128);
    let den_divs = divisors(cn, 32);
    for p in &num_divs {
        for q in &den_divs {
            let r = Rat::new(p.clone(), q.clone());
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.sort();
    out.dedup();
    out
}

impl ExactScalar for Rat {
    const FIELD_NAME: &'static str = "rational";

    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sqrt_exact(&self) -> Option<Self> {
        sqrt_rat(self)
    }

    fn root_candidates(coeffs: &[Self]) -> Vec<Self> {
        rat_root_candidates(coeffs)
    }
}

/// Gaussian rationals a + b·i, the coefficient field for complex Clifford
/// superalgebras. Canonical form is inherited from the canonical form of the
/// two rational components.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_re(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &Rat| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if (-im.clone()).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{}*i", im)
            }
        };
        if self.re.is_zero() {
            return im_part(f, &self.im);
        }
        write!(f, "{}", self.re)?;
        if self.im.is_negative() {
            write!(f, "-")?;
            let abs = -self.im.clone();
            if abs.is_one() {
                write!(f, "i")
            } else {
                write!(f, "{}*i", abs)
            }
        } else {
            write!(f, "+")?;
            im_part(f, &self.im)
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: Self) -> Self {
        GaussRat::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: Self) -> Self {
        GaussRat::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: Self) -> Self {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> Self {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::from_re(Rat::one())
    }
}

impl ExactScalar for GaussRat {
    const FIELD_NAME: &'static str = "gaussian-rational";

    fn from_int(n: i64) -> Self {
        GaussRat::from_re(Rat::from_int(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::from_re(Rat::from_ratio(num, den))
    }

    fn from_rat(r: &Rat) -> Self {
        GaussRat::from_re(r.clone())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(GaussRat::i())
    }

    fn conjugate(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(GaussRat::new(&self.re / &n, -self.im.clone() / n))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.im.is_zero() {
            if let Some(s) = sqrt_rat(&self.re) {
                return Some(GaussRat::from_re(s));
            }
            if let Some(s) = sqrt_rat(&(-self.re.clone())) {
                return Some(GaussRat::new(Rat::zero(), s));
            }
            return None;
        }
        // (x + yi)^2 = a + bi  =>  x^2 = (a + |a+bi|)/2, y = b / 2x.
        let r = sqrt_rat(&self.norm())?;
        let two = Rat::from_int(2);
        let x2 = (&self.re + &r) / &two;
        let x = sqrt_rat(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / &(&two * &x);
        Some(GaussRat::new(x, y))
    }

    fn root_candidates(coeffs: &[Self]) -> Vec<Self> {
        let mut out = Vec::new();
        // Small Gaussian grid covers every eigenvalue the Clifford
        // constructions produce (squares are 0 and ±1).
        let small: Vec<Rat> = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)]
            .iter()
            .map(|&(n, d)| Rat::from_ratio(n, d))
            .collect();
        for a in &small {
            for b in &small {
                let c = GaussRat::new(a.clone(), b.clone());
                if !c.is_zero() {
                    out.push(c);
                }
            }
        }
        // When all coefficients are real, reuse the rational machinery for
        // both real and purely imaginary candidates.
        if coeffs.iter().all(|c| c.im.is_zero()) {
            let real: Vec<Rat> = coeffs.iter().map(|c| c.re.clone()).collect();
            for r in rat_root_candidates(&real) {
                out.push(GaussRat::from_re(r.clone()));
                out.push(GaussRat::new(Rat::zero(), r));
            }
        }
        out.dedup();
        out
    }
}
