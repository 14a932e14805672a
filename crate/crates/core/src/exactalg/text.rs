//! Canonical text form: terms by ascending exponent, explicit coefficients,
//! e.g. `1 - 1*t^1 + 1*t^2`. Printing and parsing round-trip exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{SparsePoly, Var};
use super::ratfunc::RatFunc;
use super::scalar::Ring;
use crate::error::{Error, Result};

/// Coefficient types with a canonical text form.
pub trait CanonicalCoeff: Ring {
    /// Sign and magnitude. Types without a meaningful sign report `false`
    /// and print themselves in full.
    fn fmt_term(&self) -> (bool, String);
    fn parse_coeff(cur: &mut Cursor) -> Result<Self>;
}

pub struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub fn new(s: &str) -> Self {
        Cursor { chars: s.chars().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().map_or(false, |c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn error(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in {s:?}", self.pos))
    }
}

impl CanonicalCoeff for BigRational {
    fn fmt_term(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }

    fn parse_coeff(cur: &mut Cursor) -> Result<Self> {
        let n = cur.digits();
        if n.is_empty() {
            return Err(cur.error("expected digits"));
        }
        let num = BigInt::from_str(&n).map_err(|e| cur.error(&e.to_string()))?;
        if cur.eat('/') {
            let d = cur.digits();
            let den = BigInt::from_str(&d).map_err(|e| cur.error(&e.to_string()))?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }
}

impl CanonicalCoeff for RatFunc<BigRational> {
    fn fmt_term(&self) -> (bool, String) {
        (false, format!("({self})"))
    }

    fn parse_coeff(cur: &mut Cursor) -> Result<Self> {
        cur.expect('(')?;
        let r = parse_ratfunc_at(cur, Var::T)?;
        cur.expect(')')?;
        Ok(r)
    }
}

pub fn write_poly<C: CanonicalCoeff>(p: &SparsePoly<C>, f: &mut impl fmt::Write) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let (neg, mag) = c.fmt_term();
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if *e == 0 {
            write!(f, "{mag}")?;
        } else {
            write!(f, "{mag}*{}^{e}", p.var())?;
        }
    }
    Ok(())
}

impl<C: CanonicalCoeff> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self, f)
    }
}

impl fmt::Display for RatFunc<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({})/({})", self.numer(), self.denom())
        }
    }
}

fn parse_poly_at<C: CanonicalCoeff>(cur: &mut Cursor, default_var: Var) -> Result<SparsePoly<C>> {
    cur.skip_ws();
    // the zero polynomial renders as a bare "0" whatever the coefficient form
    let rest = &cur.chars[cur.pos..];
    if rest.first() == Some(&'0') && rest.get(1).map_or(true, |c| !c.is_ascii_digit() && *c != '*' && *c != '/') {
        cur.pos += 1;
        return Ok(SparsePoly::zero(default_var));
    }
    let mut terms: Vec<(i32, C)> = Vec::new();
    let mut var: Option<Var> = None;
    let mut negative = cur.eat('-');
    loop {
        cur.skip_ws();
        let mut c = C::parse_coeff(cur)?;
        if negative {
            c = -c;
        }
        let mut e = 0i32;
        if cur.eat('*') {
            let name = cur.peek().ok_or_else(|| cur.error("expected indeterminate"))?;
            cur.pos += 1;
            match var {
                Some(v) if v.0 != name => return Err(Error::MixedIndeterminates(v.0, name)),
                _ => var = Some(Var(name)),
            }
            cur.expect('^')?;
            let neg_exp = cur.eat('-');
            let d = cur.digits();
            e = d.parse::<i32>().map_err(|_| cur.error("bad exponent"))?;
            if neg_exp {
                e = -e;
            }
        }
        terms.push((e, c));
        let save = cur.pos;
        cur.skip_ws();
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else {
            cur.pos = save;
            break;
        }
    }
    let var = var.unwrap_or(default_var);
    let laurent = terms.iter().any(|(e, _)| *e < 0);
    if terms.windows(2).any(|w| w[0].0 >= w[1].0) || terms.iter().any(|(_, c)| c.is_zero()) && terms.len() > 1 {
        return Err(cur.error("terms not in canonical order"));
    }
    SparsePoly::from_terms(var, laurent, terms)
}

fn parse_ratfunc_at(cur: &mut Cursor, default_var: Var) -> Result<RatFunc<BigRational>> {
    cur.skip_ws();
    if cur.peek() == Some('(') {
        cur.pos += 1;
        let n: SparsePoly<BigRational> = parse_poly_at(cur, default_var)?;
        cur.expect(')')?;
        cur.expect('/')?;
        cur.expect('(')?;
        let d: SparsePoly<BigRational> = parse_poly_at(cur, n.var())?;
        cur.expect(')')?;
        let (n, d) = if n.is_constant() { (n.with_var(d.var()), d) } else { (n, d) };
        RatFunc::normalize(n, d)
    } else {
        let n: SparsePoly<BigRational> = parse_poly_at(cur, default_var)?;
        Ok(RatFunc::from_poly(n))
    }
}

/// Parses canonical polynomial text; constants get the indeterminate `var`.
pub fn parse_poly<C: CanonicalCoeff>(s: &str, var: Var) -> Result<SparsePoly<C>> {
    let mut cur = Cursor::new(s.trim());
    let p = parse_poly_at(&mut cur, var)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(p)
}

pub fn parse_ratfunc(s: &str, var: Var) -> Result<RatFunc<BigRational>> {
    let mut cur = Cursor::new(s.trim());
    let r = parse_ratfunc_at(&mut cur, var)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(r)
}

impl FromStr for SparsePoly<BigRational> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s, Var::T)
    }
}

impl FromStr for RatFunc<BigRational> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s, Var::T)
    }
}
