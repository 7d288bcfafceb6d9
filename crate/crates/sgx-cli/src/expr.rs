//! Expression front end for K(x): a recursive-descent parser over bytes
//! with offset-precise errors, evaluating exactly into `RatFunc`.
//!
//! Grammar:
//!   expr   := term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := base ('^' int)?
//!   base   := int | 'i' | 'x' | '(' expr ')' | '-' base
//!
//! Whitespace is allowed between tokens. Exponents are integer literals
//! (optionally negative). Evaluation enforces a degree cap so adversarial
//! inputs fail cleanly as input errors instead of exhausting memory.

use num_bigint::BigInt;
use sgx_core::gauss::GaussRational;
use sgx_core::ratfunc::RatFunc;
use std::fmt;

/// Combined numerator/denominator degree cap for evaluated expressions.
const MAX_DEGREE: usize = 512;
const MAX_EXPONENT: i64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    ImaginaryUnit,
    Variable,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
}

/// A parse or evaluation failure, with the byte offset and what was
/// expected there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError { offset: self.pos, message: message.into() }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<BigInt>().map_err(|_| self.error("invalid integer literal"))
    }
}

pub fn parse(text: &str) -> Result<ExprAst, ExprError> {
    let mut scanner = Scanner::new(text);
    let ast = parse_expr(&mut scanner)?;
    if scanner.peek().is_some() {
        return Err(scanner.error("expected '+', '-', '*', '/', '^' or end of input"));
    }
    Ok(ast)
}

fn parse_expr(s: &mut Scanner) -> Result<ExprAst, ExprError> {
    let mut acc = parse_term(s)?;
    while let Some(c) = s.peek() {
        match c {
            b'+' => {
                s.bump();
                acc = ExprAst::Add(Box::new(acc), Box::new(parse_term(s)?));
            }
            b'-' => {
                s.bump();
                acc = ExprAst::Sub(Box::new(acc), Box::new(parse_term(s)?));
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_term(s: &mut Scanner) -> Result<ExprAst, ExprError> {
    let mut acc = parse_factor(s)?;
    while let Some(c) = s.peek() {
        match c {
            b'*' => {
                s.bump();
                acc = ExprAst::Mul(Box::new(acc), Box::new(parse_factor(s)?));
            }
            b'/' => {
                s.bump();
                acc = ExprAst::Div(Box::new(acc), Box::new(parse_factor(s)?));
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_factor(s: &mut Scanner) -> Result<ExprAst, ExprError> {
    let base = parse_base(s)?;
    if s.peek() == Some(b'^') {
        s.bump();
        s.skip_ws();
        let negative = if s.bytes.get(s.pos) == Some(&b'-') {
            s.pos += 1;
            true
        } else {
            false
        };
        let digits = s.parse_uint()?;
        let magnitude: i64 = digits
            .try_into()
            .map_err(|_| s.error("exponent too large"))?;
        if magnitude > MAX_EXPONENT {
            return Err(s.error("exponent too large"));
        }
        let exponent = if negative { -magnitude } else { magnitude };
        return Ok(ExprAst::Pow(Box::new(base), exponent));
    }
    Ok(base)
}

fn parse_base(s: &mut Scanner) -> Result<ExprAst, ExprError> {
    match s.peek() {
        Some(b'-') => {
            s.bump();
            Ok(ExprAst::Neg(Box::new(parse_base(s)?)))
        }
        Some(b'(') => {
            s.bump();
            let inner = parse_expr(s)?;
            if s.peek() != Some(b')') {
                return Err(s.error("expected ')'"));
            }
            s.bump();
            Ok(inner)
        }
        Some(b'i') => {
            s.bump();
            Ok(ExprAst::ImaginaryUnit)
        }
        Some(b'x') => {
            s.bump();
            Ok(ExprAst::Variable)
        }
        Some(c) if c.is_ascii_digit() => Ok(ExprAst::Int(s.parse_uint()?)),
        _ => Err(s.error("expected an integer, 'i', 'x', '(' or '-'")),
    }
}

fn check_size(f: &RatFunc) -> Result<(), ExprError> {
    let deg = f.num().degree().unwrap_or(0) + f.den().degree().unwrap_or(0);
    if deg > MAX_DEGREE {
        return Err(ExprError {
            offset: 0,
            message: format!("expression exceeds the supported degree ({MAX_DEGREE})"),
        });
    }
    Ok(())
}

/// Evaluates the AST exactly into a reduced rational function.
pub fn eval(ast: &ExprAst) -> Result<RatFunc, ExprError> {
    let value = match ast {
        ExprAst::Int(n) => RatFunc::constant(GaussRational::from_bigint(n.clone())),
        ExprAst::ImaginaryUnit => RatFunc::constant(GaussRational::i()),
        ExprAst::Variable => RatFunc::x(),
        ExprAst::Neg(inner) => eval(inner)?.neg(),
        ExprAst::Add(l, r) => eval(l)?.add(&eval(r)?),
        ExprAst::Sub(l, r) => eval(l)?.sub(&eval(r)?),
        ExprAst::Mul(l, r) => eval(l)?.mul(&eval(r)?),
        ExprAst::Div(l, r) => {
            let den = eval(r)?;
            eval(l)?
                .div(&den)
                .map_err(|_| ExprError { offset: 0, message: "division by zero".into() })?
        }
        ExprAst::Pow(base, e) => {
            let b = eval(base)?;
            let step = b.num().degree().unwrap_or(0) + b.den().degree().unwrap_or(0);
            if step.saturating_mul(e.unsigned_abs() as usize) > MAX_DEGREE {
                return Err(ExprError {
                    offset: 0,
                    message: format!("expression exceeds the supported degree ({MAX_DEGREE})"),
                });
            }
            let e32: i32 = (*e)
                .try_into()
                .map_err(|_| ExprError { offset: 0, message: "exponent too large".into() })?;
            b.powi(e32)
                .map_err(|_| ExprError { offset: 0, message: "division by zero".into() })?
        }
    };
    check_size(&value)?;
    Ok(value)
}

/// Parses and evaluates in one step.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ExprError> {
    eval(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sgx_core::poly::Poly;

    #[test]
    fn parses_the_log_atom_coefficient() {
        // -1/((x-i)*(x+1-i)) against the hand-built value.
        let parsed = parse_ratfunc("-1/((x-i)*(x+1-i))").unwrap();
        let built = sgx_core::ratfunc::simple_pole(&GaussRational::i())
            .mul(&sgx_core::ratfunc::simple_pole(&GaussRational::from_parts(-1, 1, 1, 1)))
            .neg();
        assert_eq!(parsed, built);
    }

    #[test]
    fn parses_polynomials() {
        let parsed = parse_ratfunc("x^2+1").unwrap();
        assert_eq!(parsed, RatFunc::from_poly(Poly::from_ints(&[1, 0, 1])));
    }

    #[test]
    fn error_offset_reported() {
        let err = parse("1/(x-").unwrap_err();
        assert_eq!(err.offset, 5);
        let err = parse("2 + ").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse("x )").unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(parse_ratfunc("1/(x-x)").is_err());
        assert!(parse_ratfunc("1/0").is_err());
    }

    #[test]
    fn unary_minus_binds_tighter_than_pow() {
        // "-x^2" is (-x)^2 in this grammar.
        assert_eq!(parse_ratfunc("-x^2").unwrap(), parse_ratfunc("x^2").unwrap());
    }

    #[test]
    fn degree_cap_enforced() {
        assert!(parse_ratfunc("x^513").is_err());
        assert!(parse_ratfunc("(x^100)^100").is_err());
        assert!(parse_ratfunc("x^512").is_ok());
    }

    #[test]
    fn negative_exponents_invert() {
        assert_eq!(parse_ratfunc("x^-2").unwrap(), parse_ratfunc("1/x^2").unwrap());
    }

    #[test]
    fn canonical_prints_reparse() {
        for text in ["-1/((x-i)*(x+1-i))", "x^3/(x-1)", "(1+2*i)*x^2 - 1/2", "i/x"] {
            let value = parse_ratfunc(text).unwrap();
            let printed = value.to_string();
            assert_eq!(parse_ratfunc(&printed).unwrap(), value, "print of {text}: {printed}");
            // parse ∘ print is the identity on canonical prints.
            assert_eq!(parse_ratfunc(&printed).unwrap().to_string(), printed);
        }
    }
}
