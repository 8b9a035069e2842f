//! Recursive-descent parser and evaluator for Clifford algebra expressions.
//!
//! Grammar (whitespace insensitive):
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := rational | 'i' | 'e'INT | '(' expr ')'

use crate::algebra::{Element, SuperAlgebra};
use crate::blade::Signature;
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Rat};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<ExprAst>),
    Product(Vec<ExprAst>),
    Neg(Box<ExprAst>),
    ScalarLit(Rat),
    GeneratorRef(usize),
    Imag,
    Paren(Box<ExprAst>),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    sig: &'a Signature,
    allow_imag: bool,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut terms = Vec::new();
        let first = if self.eat(b'-') {
            ExprAst::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        terms.push(first);
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                terms.push(ExprAst::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            ExprAst::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            ExprAst::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<ExprAst> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(ExprAst::Paren(Box::new(inner)))
            }
            Some(b'i') => {
                self.pos += 1;
                if self.allow_imag {
                    Ok(ExprAst::Imag)
                } else {
                    self.pos -= 1;
                    self.err("'i' is only valid over the complex field")
                }
            }
            Some(b'e') => {
                self.pos += 1;
                let k = self.integer().map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: "expected generator index after 'e'".to_string(),
                })?;
                let n = self.sig.n();
                let idx: usize = match k.try_into() {
                    Ok(v) => v,
                    Err(_) => usize::MAX,
                };
                if idx == 0 || idx > n {
                    return Err(Error::GeneratorOutOfRange { index: idx, n });
                }
                Ok(ExprAst::GeneratorRef(idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') {
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                Ok(ExprAst::ScalarLit(Rat::new(num, den)))
            }
            Some(_) => self.err("expected a factor"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse an expression against an ambient signature; `allow_imag` permits
/// the imaginary unit literal 'i' (complex field only).
pub fn parse_expr(text: &str, sig: &Signature, allow_imag: bool) -> Result<ExprAst> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        sig,
        allow_imag,
    };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(ast)
}

/// Print an AST in the concrete grammar; reparsing yields an equal AST.
pub fn print_expr(ast: &ExprAst) -> String {
    match ast {
        ExprAst::Sum(terms) => {
            let mut out = String::new();
            for (i, t) in terms.iter().enumerate() {
                if let ExprAst::Neg(inner) = t {
                    out.push_str(if i == 0 { "-" } else { " - " });
                    out.push_str(&print_expr(inner));
                } else {
                    if i > 0 {
                        out.push_str(" + ");
                    }
                    out.push_str(&print_expr(t));
                }
            }
            out
        }
        ExprAst::Product(factors) => factors
            .iter()
            .map(print_expr)
            .collect::<Vec<_>>()
            .join("*"),
        ExprAst::Neg(inner) => format!("-{}", print_expr(inner)),
        ExprAst::ScalarLit(r) => {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        ExprAst::GeneratorRef(k) => format!("e{k}"),
        ExprAst::Imag => "i".to_string(),
        ExprAst::Paren(inner) => format!("({})", print_expr(inner)),
    }
}

/// Evaluate an AST to a canonical element of the given Clifford algebra.
pub fn eval_expr<K: ExactScalar>(ast: &ExprAst, a: &SuperAlgebra<K>) -> Result<Element<K>> {
    match ast {
        ExprAst::Sum(terms) => {
            let mut acc = a.zero();
            for t in terms {
                acc = acc.add(&eval_expr(t, a)?)?;
            }
            Ok(acc)
        }
        ExprAst::Product(factors) => {
            let mut acc = a.unit();
            for f in factors {
                acc = a.mul(&acc, &eval_expr(f, a)?)?;
            }
            Ok(acc)
        }
        ExprAst::Neg(inner) => Ok(eval_expr(inner, a)?.neg()),
        ExprAst::ScalarLit(r) => Ok(a.unit().scale(&K::from_rat(r))),
        ExprAst::GeneratorRef(k) => Ok(a.basis_element(1 << (k - 1))),
        ExprAst::Imag => {
            let i = K::imaginary_unit().ok_or_else(|| {
                Error::Scope("imaginary unit requires the complex field".to_string())
            })?;
            Ok(a.unit().scale(&i))
        }
        ExprAst::Paren(inner) => eval_expr(inner, a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{clifford_complex, clifford_real};
    use crate::scalar::GaussRat;
    use num_traits::One;

    fn sig(p: usize, q: usize, r: usize) -> Signature {
        Signature::real(p, q, r).unwrap()
    }

    #[test]
    fn parses_basic_shapes() {
        let s = sig(2, 1, 0);
        let ast = parse_expr("e1*e2 + 1", &s, false).unwrap();
        assert_eq!(
            ast,
            ExprAst::Sum(vec![
                ExprAst::Product(vec![ExprAst::GeneratorRef(1), ExprAst::GeneratorRef(2)]),
                ExprAst::ScalarLit(Rat::one()),
            ])
        );
        assert!(parse_expr("3/2*e1 - e2*e1", &s, false).is_ok());
        assert!(matches!(
            parse_expr("e9", &s, false),
            Err(Error::GeneratorOutOfRange { index: 9, n: 3 })
        ));
        assert!(matches!(
            parse_expr("e1 +", &s, false),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expr("i", &s, false),
            Err(Error::Parse { .. })
        ));
        assert!(parse_expr("i", &s, true).is_ok());
    }

    #[test]
    fn eval_examples() {
        let a = clifford_real(2, 0, 0).unwrap();
        let ast = parse_expr("(e1*e2+1)*(e1*e2-1)", &sig(2, 0, 0), false).unwrap();
        let v = eval_expr(&ast, &a).unwrap();
        assert_eq!(v, a.unit().scale(&Rat::from_int(-2)));

        let a11 = clifford_real(1, 1, 0).unwrap();
        let one = eval_expr(&parse_expr("e1*e1", &sig(1, 1, 0), false).unwrap(), &a11).unwrap();
        assert_eq!(one, a11.unit());

        let a111 = clifford_real(1, 1, 1).unwrap();
        let z = eval_expr(&parse_expr("e3*e3", &sig(1, 1, 1), false).unwrap(), &a111).unwrap();
        assert!(z.is_zero());

        let c = clifford_complex(1, 0).unwrap();
        let csig = Signature::complex(1, 0).unwrap();
        let iv = eval_expr(&parse_expr("i*i", &csig, true).unwrap(), &c).unwrap();
        assert_eq!(iv, c.unit().scale(&(-GaussRat::one())));
    }

    #[test]
    fn distributivity_random() {
        use rand::{Rng, SeedableRng};
        let a = clifford_real(2, 1, 1).unwrap();
        let s = sig(2, 1, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let atom = |rng: &mut rand_chacha::ChaCha8Rng| -> String {
            match rng.gen_range(0..3) {
                0 => format!("e{}", rng.gen_range(1..=4)),
                1 => format!("{}", rng.gen_range(0..5)),
                _ => format!("{}/{}", rng.gen_range(1..5), rng.gen_range(1..5)),
            }
        };
        for _ in 0..50 {
            let x = atom(&mut rng);
            let y = atom(&mut rng);
            let z = atom(&mut rng);
            let lhs = format!("{x}*({y}+{z})");
            let rhs = format!("{x}*{y}+{x}*{z}");
            let l = eval_expr(&parse_expr(&lhs, &s, false).unwrap(), &a).unwrap();
            let r = eval_expr(&parse_expr(&rhs, &s, false).unwrap(), &a).unwrap();
            assert_eq!(l, r, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn golden_corpus_round_trips() {
        let corpus = include_str!("../tests/data/expressions.txt");
        let s = sig(3, 2, 2);
        let mut count = 0;
        for line in corpus.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let ast = parse_expr(line, &s, true).unwrap();
            let printed = print_expr(&ast);
            let reparsed = parse_expr(&printed, &s, true).unwrap();
            assert_eq!(ast, reparsed, "round trip failed for {line}");
            count += 1;
        }
        assert_eq!(count, 50);
    }
}
