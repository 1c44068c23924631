//! Canonical text forms.
//!
//! Elements of the enveloping algebra print as sums of monomials such as
//! `x[1,0](-2)*x[1,1](-1)` with repeated factors collapsed to `^p` and
//! rational coefficients written `p/q`. The parser accepts the same grammar
//! plus juxtaposition for products and parentheses.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::root_data::{LieData, RootSystemData};
use crate::upbw::{
    is_negative_coeff, multiply, straighten_word, AlgElem, Coeff, LoopGen, Monomial,
};

pub fn format_gen(rs: &RootSystemData, g: LoopGen) -> String {
    let c: Vec<String> = rs.root(g.root).iter().map(|v| v.to_string()).collect();
    format!("x[{}]({})", c.join(","), g.mode)
}

pub fn format_monomial(rs: &RootSystemData, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let f = m.factors();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < f.len() {
        let mut j = i;
        while j < f.len() && f[j] == f[i] {
            j += 1;
        }
        let g = format_gen(rs, f[i]);
        if j - i > 1 {
            parts.push(format!("{g}^{}", j - i));
        } else {
            parts.push(g);
        }
        i = j;
    }
    parts.join("*")
}

pub fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn format_elem(rs: &RootSystemData, a: &AlgElem) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in a.terms().enumerate() {
        let neg = is_negative_coeff(c);
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&format_coeff(&abs));
        } else if abs.is_one() {
            out.push_str(&format_monomial(rs, m));
        } else {
            let _ = write!(out, "{}*{}", format_coeff(&abs), format_monomial(rs, m));
        }
    }
    out
}

/// Parses an element in the canonical grammar.
pub fn parse_elem(lie: &LieData, input: &str) -> Result<AlgElem> {
    let mut p = Parser {
        lie,
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    lie: &'a LieData,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn expr(&mut self) -> Result<AlgElem> {
        let mut acc = AlgElem::zero();
        let mut sign = Coeff::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc.add_scaled(&t, &sign);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Coeff::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Coeff::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AlgElem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = multiply(self.lie, &acc, &f);
                }
                Some(b'x') | Some(b'(') | Some(b'0'..=b'9') => {
                    let f = self.factor()?;
                    acc = multiply(self.lie, &acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<AlgElem> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                e
            }
            Some(b'x') => {
                self.pos += 1;
                let g = self.generator()?;
                straighten_word(self.lie, &[g])
            }
            Some(b'0'..=b'9') => AlgElem::scalar(self.rational()?),
            Some(_) => return Err(self.err("expected a generator, number or '('")),
            None => return Err(self.err("unexpected end of input")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let p = self.unsigned()?;
            let mut acc = AlgElem::one();
            for _ in 0..p {
                acc = multiply(self.lie, &acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn generator(&mut self) -> Result<LoopGen> {
        let start = self.pos;
        self.expect(b'[')?;
        let mut coords = vec![self.integer()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            coords.push(self.integer()?);
        }
        self.expect(b']')?;
        let rs = &self.lie.roots;
        let root = if coords.len() == rs.rank() {
            rs.root_index(&coords)
        } else {
            None
        };
        let Some(root) = root else {
            return Err(Error::Parse {
                pos: start,
                msg: format!("{coords:?} is not a positive root of rank {}", rs.rank()),
            });
        };
        self.expect(b'(')?;
        let mode = self.integer()?;
        self.expect(b')')?;
        Ok(LoopGen::new(root, mode))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let v: i64 = self.digits()?.parse().map_err(|_| Error::Parse {
            pos: at,
            msg: "integer out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn unsigned(&mut self) -> Result<u32> {
        let at = self.pos;
        self.digits()?.parse().map_err(|_| Error::Parse {
            pos: at,
            msg: "exponent out of range".into(),
        })
    }

    fn rational(&mut self) -> Result<Coeff> {
        let num: BigInt = self.digits()?.parse().expect("digits parse");
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digits parse");
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Coeff::new(num, den));
        }
        Ok(Coeff::from_integer(num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_canonically() {
        let lie = LieData::new(2).unwrap();
        let rs = &lie.roots;
        let m = Monomial::from_sorted(vec![LoopGen::new(0, -2), LoopGen::new(2, -1)]);
        assert_eq!(format_monomial(rs, &m), "x[1,0](-2)*x[1,1](-1)");
        let e = parse_elem(&lie, "x[0,1](-1)^3").unwrap();
        assert_eq!(format_elem(rs, &e), "x[0,1](-1)^3");
        let e = parse_elem(&lie, "-3/2 x[1,0](-1) + 2").unwrap();
        assert_eq!(format_elem(rs, &e), "2 - 3/2*x[1,0](-1)");
        assert_eq!(format_elem(rs, &AlgElem::zero()), "0");
    }

    #[test]
    fn parse_straightens_products() {
        let lie = LieData::new(2).unwrap();
        let e = parse_elem(&lie, "x[0,1](-1)*x[1,0](-1)").unwrap();
        let c = lie.structure.get(1, 0);
        let want = parse_elem(
            &lie,
            &format!("x[1,0](-1)*x[0,1](-1) + {c}*x[1,1](-2)").replace("+ -", "- "),
        )
        .unwrap();
        assert_eq!(e, want);
    }

    #[test]
    fn parse_errors_have_positions() {
        let lie = LieData::new(2).unwrap();
        match parse_elem(&lie, "x[1,0](-1) + x[2,0](-1)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 14),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_elem(&lie, "x[1,0](-1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_elem(&lie, "1/0"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_elem(&lie, "x[1,0](-1) )"),
            Err(Error::Parse { .. })
        ));
    }

    type ElemSpec = Vec<(i64, i64, Vec<(usize, i64)>)>;

    fn arb_elem() -> impl Strategy<Value = ElemSpec> {
        prop::collection::vec(
            (
                -5i64..=5,
                1i64..=3,
                prop::collection::vec((0usize..3, -3i64..=2), 0..4),
            ),
            0..5,
        )
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(spec in arb_elem()) {
            let lie = LieData::new(2).unwrap();
            let mut e = AlgElem::zero();
            for (num, den, word) in spec {
                let w: Vec<LoopGen> = word.into_iter().map(|(r, m)| LoopGen::new(r, m)).collect();
                e.add_scaled(&straighten_word(&lie, &w), &Coeff::new(num.into(), den.into()));
            }
            let text = format_elem(&lie.roots, &e);
            let back = parse_elem(&lie, &text).unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
