//! Basis blades as bitsets over the odd generators, with the monomial
//! product law of a Clifford presentation. This is the kernel every monomial
//! algebra multiplies through.

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_GENERATORS: usize = 16;

/// Per-generator squares of a Clifford presentation, in generator order.
/// Constructors from (p, q, r) put the +1 squares first, then −1, then 0,
/// matching the presentation; skew tensor products concatenate squares, so
/// arbitrary orders are representable too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    squares: Vec<i8>,
}

impl Signature {
    pub fn from_squares(squares: Vec<i8>) -> Result<Self> {
        if squares.len() > MAX_GENERATORS {
            return Err(Error::TooLarge(squares.len()));
        }
        assert!(squares.iter().all(|s| (-1..=1).contains(s)));
        Ok(Signature { squares })
    }

    /// Signature of the real Clifford superalgebra with p generators squaring
    /// to +1, q to −1 and r to 0.
    pub fn real(p: usize, q: usize, r: usize) -> Result<Self> {
        let mut squares = vec![1i8; p];
        squares.extend(std::iter::repeat(-1i8).take(q));
        squares.extend(std::iter::repeat(0i8).take(r));
        Signature::from_squares(squares)
    }

    /// Signature of the complex Clifford superalgebra: squares are +1 or 0
    /// only.
    pub fn complex(p: usize, q: usize) -> Result<Self> {
        let mut squares = vec![1i8; p];
        squares.extend(std::iter::repeat(0i8).take(q));
        Signature::from_squares(squares)
    }

    pub fn n(&self) -> usize {
        self.squares.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.squares.len()
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn concat(&self, other: &Signature) -> Result<Signature> {
        let mut squares = self.squares.clone();
        squares.extend_from_slice(&other.squares);
        Signature::from_squares(squares)
    }

    pub fn check_mask(&self, mask: u32) -> Result<()> {
        if (mask as u64) >= (1u64 << self.n()) {
            Err(Error::InvalidBlade { mask, n: self.n() })
        } else {
            Ok(())
        }
    }
}

pub fn degree(mask: u32) -> u32 {
    mask.count_ones()
}

pub fn parity(mask: u32) -> u8 {
    (mask.count_ones() & 1) as u8
}

/// Number of pairs (i in b1, j in b2) with i > j: the adjacent transpositions
/// needed to sort the concatenated generator word.
pub fn transposition_count(b1: u32, b2: u32) -> u32 {
    let mut count = 0;
    let mut rest = b2;
    while rest != 0 {
        let j = rest.trailing_zeros();
        // Generators of b1 strictly above position j.
        count += (b1 >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    count
}

/// Product of two basis blades: the blade is the symmetric difference, the
/// coefficient is the transposition sign times the squares of the repeated
/// generators. Zero iff a repeated generator squares to zero.
pub fn blade_mul(b1: u32, b2: u32, sig: &Signature) -> Result<(i8, u32)> {
    sig.check_mask(b1)?;
    sig.check_mask(b2)?;
    let mut coeff: i8 = if transposition_count(b1, b2) % 2 == 0 {
        1
    } else {
        -1
    };
    let mut common = b1 & b2;
    while common != 0 {
        let i = common.trailing_zeros() as usize;
        coeff *= sig.squares[i];
        if coeff == 0 {
            return Ok((0, 0));
        }
        common &= common - 1;
    }
    Ok((coeff, b1 ^ b2))
}

/// Render a blade as `e1*e3*e4` (ascending indices), `1` for the empty blade.
pub fn blade_name(mask: u32) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros();
        parts.push(format!("e{}", i + 1));
        rest &= rest - 1;
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig111() -> Signature {
        Signature::real(1, 1, 1).unwrap()
    }

    /// Independent sign oracle: multiply generator words symbol by symbol,
    /// rewriting with the anticommutation and square relations.
    fn word_mul_oracle(b1: u32, b2: u32, sig: &Signature) -> (i8, u32) {
        let mut word: Vec<u32> = Vec::new();
        for b in [b1, b2] {
            let mut rest = b;
            while rest != 0 {
                word.push(rest.trailing_zeros());
                rest &= rest - 1;
            }
        }
        let mut sign: i8 = 1;
        // Insertion sort counting strict inversions, then contract equal
        // neighbours with the generator squares.
        loop {
            let mut changed = false;
            let mut k = 0;
            while k + 1 < word.len() {
                if word[k] > word[k + 1] {
                    word.swap(k, k + 1);
                    sign = -sign;
                    changed = true;
                } else if word[k] == word[k + 1] {
                    sign *= sig.squares()[word[k] as usize];
                    if sign == 0 {
                        return (0, 0);
                    }
                    word.drain(k..=k + 1);
                    changed = true;
                } else {
                    k += 1;
                }
            }
            if !changed {
                break;
            }
        }
        let mut mask = 0;
        for g in word {
            mask |= 1 << g;
        }
        (sign, mask)
    }

    #[test]
    fn generator_squares() {
        let sig = sig111();
        assert_eq!(blade_mul(0b001, 0b001, &sig).unwrap(), (1, 0));
        assert_eq!(blade_mul(0b010, 0b010, &sig).unwrap(), (-1, 0));
        assert_eq!(blade_mul(0b100, 0b100, &sig).unwrap(), (0, 0));
    }

    #[test]
    fn anticommutation() {
        let sig = sig111();
        assert_eq!(blade_mul(0b010, 0b001, &sig).unwrap(), (-1, 0b011));
        assert_eq!(blade_mul(0b001, 0b010, &sig).unwrap(), (1, 0b011));
    }

    #[test]
    fn contraction_with_negative_square() {
        // (e1 e2) e2 = -e1 with e2^2 = -1.
        let sig = sig111();
        assert_eq!(blade_mul(0b011, 0b010, &sig).unwrap(), (-1, 0b001));
    }

    #[test]
    fn transposition_counts() {
        assert_eq!(transposition_count(0b10, 0b01), 1);
        assert_eq!(transposition_count(0b01, 0b10), 0);
        // Adjudicated by the word-sorting oracle: sorting e1 e2 e1 e2 takes a
        // single strict inversion.
        let sig = Signature::real(2, 0, 0).unwrap();
        let (sign, mask) = word_mul_oracle(0b11, 0b11, &sig);
        assert_eq!((sign, mask), (-1, 0));
        assert_eq!(transposition_count(0b11, 0b11), 1);
        assert_eq!(blade_mul(0b11, 0b11, &sig).unwrap(), (-1, 0));
    }

    #[test]
    fn agrees_with_word_oracle_up_to_n5() {
        for (p, q, r) in [(5, 0, 0), (0, 5, 0), (2, 2, 1), (1, 1, 3), (3, 1, 1)] {
            let sig = Signature::real(p, q, r).unwrap();
            let dim = sig.dim() as u32;
            for b1 in 0..dim {
                for b2 in 0..dim {
                    let got = blade_mul(b1, b2, &sig).unwrap();
                    assert_eq!(got, word_mul_oracle(b1, b2, &sig), "{b1:b} {b2:b}");
                }
            }
        }
    }

    #[test]
    fn associative_exhaustive_n4() {
        let sig = Signature::real(2, 1, 1).unwrap();
        let dim = sig.dim() as u32;
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let (s1, ab) = blade_mul(a, b, &sig).unwrap();
                    let (s2, abc_l) = blade_mul(ab, c, &sig).unwrap();
                    let (t1, bc) = blade_mul(b, c, &sig).unwrap();
                    let (t2, abc_r) = blade_mul(a, bc, &sig).unwrap();
                    let left = s1 * s2;
                    let right = t1 * t2;
                    assert_eq!(left, right);
                    if left != 0 {
                        assert_eq!(abc_l, abc_r);
                    }
                }
            }
        }
    }

    #[test]
    fn parity_additive_on_nonzero_products() {
        let sig = Signature::real(3, 2, 1).unwrap();
        let dim = sig.dim() as u32;
        for a in 0..dim {
            for b in 0..dim {
                let (s, c) = blade_mul(a, b, &sig).unwrap();
                if s != 0 {
                    assert_eq!(parity(c), (parity(a) + parity(b)) % 2);
                }
            }
        }
    }

    #[test]
    fn mask_out_of_range_rejected() {
        let sig = sig111();
        assert!(matches!(
            blade_mul(0b1000, 0, &sig),
            Err(Error::InvalidBlade { .. })
        ));
    }

    #[test]
    fn blade_names() {
        assert_eq!(blade_name(0), "1");
        assert_eq!(blade_name(0b1101), "e1*e3*e4");
    }
}
