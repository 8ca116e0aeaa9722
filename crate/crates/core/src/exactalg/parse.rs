//! Recursive-descent parser for expressions in `q`, `t`, `a`, `x1..xn`,
//! integers, `+ - * / ^` and parentheses.

use num_bigint::BigInt;

use super::field::FieldElem;
use super::xpoly::XPolynomial;
use super::ExactError;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Param(usize),
    XVar(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> ExactError {
    ExactError::Parse { pos, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ExactError> {
        let mut lhs = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Expr::Neg(Box::new(self.term()?))
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExactError> {
        let mut lhs = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ExactError> {
        let start = self.pos;
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'(') => {
                self.pos += 1;
                let k = self.exponent()?;
                if self.peek() != Some(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                return Ok(k);
            }
            _ => false,
        };
        let digits = self.digits();
        let k: i64 = digits.parse().map_err(|_| err(start, "expected integer exponent"))?;
        Ok(if neg { -k } else { k })
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr, ExactError> {
        let pos = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(Expr::Int(d.parse().map_err(|_| err(pos, "bad integer"))?))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Expr::Param(0))
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Expr::Param(1))
            }
            Some(b'a') => {
                self.pos += 1;
                Ok(Expr::Param(2))
            }
            Some(b'x') => {
                self.pos += 1;
                let d = self.digits();
                let i: usize = d.parse().map_err(|_| err(self.pos, "expected variable index"))?;
                if i == 0 {
                    return Err(err(pos, "variables are numbered from x1"));
                }
                Ok(Expr::XVar(i - 1))
            }
            Some(c) => Err(err(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, ExactError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(err(p.pos, "trailing input"));
    }
    Ok(e)
}

pub fn eval_field(e: &Expr) -> Result<FieldElem, ExactError> {
    Ok(match e {
        Expr::Int(c) => FieldElem::from_bigint(c.clone()),
        Expr::Param(v) => {
            let mut ex = [0; 3];
            ex[*v] = 1;
            FieldElem::monomial(1, ex)
        }
        Expr::XVar(i) => return Err(err(0, format!("x{} not allowed in a scalar", i + 1))),
        Expr::Neg(a) => -eval_field(a)?,
        Expr::Add(a, b) => eval_field(a)? + eval_field(b)?,
        Expr::Sub(a, b) => eval_field(a)? - eval_field(b)?,
        Expr::Mul(a, b) => eval_field(a)? * eval_field(b)?,
        Expr::Div(a, b) => eval_field(a)?.checked_div(&eval_field(b)?)?,
        Expr::Pow(a, k) => {
            let base = eval_field(a)?;
            if base.is_zero() && *k < 0 {
                return Err(ExactError::DivisionByZero);
            }
            base.pow(*k)
        }
    })
}

pub fn parse_field(s: &str) -> Result<FieldElem, ExactError> {
    eval_field(&parse_expr(s)?)
}

/// Evaluates an expression as a Laurent polynomial in `x_1..x_n`. Division
/// is allowed only by expressions free of `x`.
pub fn eval_xpoly(e: &Expr, n: usize) -> Result<XPolynomial, ExactError> {
    Ok(match e {
        Expr::XVar(i) => {
            if *i >= n {
                return Err(err(0, format!("x{} out of range for n = {}", i + 1, n)));
            }
            XPolynomial::var(n, i + 1)
        }
        Expr::Int(_) | Expr::Param(_) => XPolynomial::constant(n, eval_field(e)?),
        Expr::Neg(a) => eval_xpoly(a, n)?.neg(),
        Expr::Add(a, b) => eval_xpoly(a, n)?.add(&eval_xpoly(b, n)?),
        Expr::Sub(a, b) => eval_xpoly(a, n)?.sub(&eval_xpoly(b, n)?),
        Expr::Mul(a, b) => eval_xpoly(a, n)?.mul(&eval_xpoly(b, n)?),
        Expr::Div(a, b) => {
            let d = eval_xpoly(b, n)?;
            let c = constant_of(&d).ok_or(ExactError::NonConstantDivisor)?;
            eval_xpoly(a, n)?.scale(&c.inv()?)
        }
        Expr::Pow(a, k) => {
            let base = eval_xpoly(a, n)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else if base.nterms() == 1 {
                let (m, c) = base.terms().next().expect("one term");
                let inv: Vec<i32> = m.exps().iter().map(|x| x * (*k as i32)).collect();
                XPolynomial::monomial(n, &inv, c.pow(*k))
            } else {
                return Err(ExactError::NonConstantDivisor);
            }
        }
    })
}

fn constant_of(p: &XPolynomial) -> Option<FieldElem> {
    if p.is_zero() {
        return Some(FieldElem::zero());
    }
    if p.nterms() != 1 {
        return None;
    }
    let (m, c) = p.terms().next()?;
    m.exps().iter().all(|&e| e == 0).then(|| c.clone())
}

pub fn parse_xpoly(s: &str, n: usize) -> Result<XPolynomial, ExactError> {
    eval_xpoly(&parse_expr(s)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_precedence_and_powers() {
        let x = parse_field("1 + 2*q^2 - t^-1").unwrap();
        let y =
            &(&FieldElem::one() + &(&FieldElem::from_int(2) * &FieldElem::qta(2, 0, 0))) - &FieldElem::qta(0, -1, 0);
        assert_eq!(x, y);
        assert_eq!(parse_field("-q^2").unwrap(), FieldElem::monomial(-1, [2, 0, 0]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_field("q +").is_err());
        assert!(parse_field("1/0").is_err());
        assert!(parse_field("x1").is_err());
        assert!(parse_field("q)").is_err());
    }
}
