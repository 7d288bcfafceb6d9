//! The σ-group spec file format shared by `realize --spec` and the `group`
//! subcommands: a JSON object with fields
//!
//! ```json
//! { "n": 1, "family_tag": "constant_points(gm)", "equations": ["s^1(g_11) - g_11"] }
//! ```
//!
//! `family_tag` is one of `custom`, `full_algebraic(NAME)`,
//! `constant_points(NAME)` or `ga_linear(λ0,λ1,...)` with group labels like
//! gm, ga, sl2, gl3, mu6, cyclic4, torus2, u3 and constant λ's in the
//! expression grammar. Tagged specs are rebuilt from the tag (their
//! `equations` are informational); custom specs take their equations from
//! the file, written in the variables `g_jk` and `s^k(g_jk)`, 1-indexed.

use crate::expr;
use num_bigint::BigInt;
use sgx_core::diffpoly::SigmaPolynomial;
use sgx_core::gauss::GaussRational;
use sgx_core::sgroups::{
    constant_points, full_algebraic, ga_linear_subgroup, FamilyTag, GroupName,
    LinearSigmaOperator, SigmaGroupSpec,
};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "spec error: {}", self.0)
    }
}

const MAX_SHIFT: usize = 32;
const MAX_POWER: i64 = 64;

/// Parses a σ-polynomial over the n×n entry variables. Same operator
/// grammar as the expression front end, with atoms int | 'i' | g_jk |
/// s^k(g_jk); division is only by nonzero constants.
pub fn parse_sigma_polynomial(text: &str, n: usize) -> Result<SigmaPolynomial, SpecError> {
    let mut p = SpolyParser { bytes: text.as_bytes(), pos: 0, n };
    let value = p.parse_expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error("expected '+', '-', '*', '/', '^' or end of input"));
    }
    Ok(value)
}

struct SpolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> SpolyParser<'a> {
    fn nbase(&self) -> usize {
        self.n * self.n
    }

    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError(format!("at byte {}: {}", self.pos, message.into()))
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

    fn expect(&mut self, c: u8) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, SpecError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .parse::<BigInt>()
            .map_err(|_| self.error("invalid integer"))
    }

    fn parse_expr(&mut self) -> Result<SigmaPolynomial, SpecError> {
        let mut acc = self.parse_term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<SigmaPolynomial, SpecError> {
        let mut acc = self.parse_factor()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.parse_factor()?);
                }
                b'/' => {
                    self.pos += 1;
                    let divisor = self.parse_factor()?;
                    let c = constant_value(&divisor)
                        .ok_or_else(|| self.error("division only by nonzero constants"))?;
                    let inv = c
                        .inverse()
                        .map_err(|_| self.error("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<SigmaPolynomial, SpecError> {
        let base = self.parse_base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e: i64 = self
                .parse_uint()?
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            if e > MAX_POWER {
                return Err(self.error("exponent too large"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn parse_base(&mut self) -> Result<SigmaPolynomial, SpecError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.parse_base()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(SigmaPolynomial::constant(self.nbase(), GaussRational::i()))
            }
            Some(b'g') => {
                self.pos += 1;
                let (row, col) = self.parse_entry_indices()?;
                Ok(sgx_core::sgroups::entry(self.n, row, col, 0))
            }
            Some(b's') => {
                self.pos += 1;
                self.expect(b'^')?;
                let shift: usize = self
                    .parse_uint()?
                    .try_into()
                    .map_err(|_| self.error("shift too large"))?;
                if shift > MAX_SHIFT {
                    return Err(self.error("shift too large"));
                }
                self.expect(b'(')?;
                self.expect(b'g')?;
                let (row, col) = self.parse_entry_indices()?;
                self.expect(b')')?;
                Ok(sgx_core::sgroups::entry(self.n, row, col, shift))
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.parse_uint()?;
                Ok(SigmaPolynomial::constant(self.nbase(), GaussRational::from_bigint(k)))
            }
            _ => Err(self.error("expected an integer, 'i', 'g_jk', 's^k(g_jk)', '(' or '-'")),
        }
    }

    fn parse_entry_indices(&mut self) -> Result<(usize, usize), SpecError> {
        self.expect(b'_')?;
        let digit = |p: &mut Self| -> Result<usize, SpecError> {
            match p.bytes.get(p.pos) {
                Some(c) if c.is_ascii_digit() => {
                    p.pos += 1;
                    Ok((c - b'0') as usize)
                }
                _ => Err(p.error("expected a digit")),
            }
        };
        let j = digit(self)?;
        let k = digit(self)?;
        if j < 1 || k < 1 || j > self.n || k > self.n {
            return Err(self.error(format!("entry g_{j}{k} outside GL_{}", self.n)));
        }
        Ok((j - 1, k - 1))
    }
}

fn constant_value(p: &SigmaPolynomial) -> Option<GaussRational> {
    if p.is_zero() {
        return Some(GaussRational::zero());
    }
    let mut terms = p.iter_terms();
    let (vars, coeff) = terms.next()?;
    if !vars.is_empty() || terms.next().is_some() {
        return None;
    }
    Some(coeff.clone())
}

fn parse_family_tag(tag: &str) -> Result<FamilyTag, SpecError> {
    if tag == "custom" {
        return Ok(FamilyTag::Custom);
    }
    let (head, rest) = tag
        .split_once('(')
        .ok_or_else(|| SpecError(format!("malformed family tag '{tag}'")))?;
    let inner = rest
        .strip_suffix(')')
        .ok_or_else(|| SpecError(format!("malformed family tag '{tag}'")))?;
    match head {
        "full_algebraic" => Ok(FamilyTag::FullAlgebraic(
            GroupName::parse(inner).map_err(|e| SpecError(e.to_string()))?,
        )),
        "constant_points" => Ok(FamilyTag::ConstantPoints(
            GroupName::parse(inner).map_err(|e| SpecError(e.to_string()))?,
        )),
        "ga_linear" => {
            let mut lambda = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    let value = expr::parse_ratfunc(part.trim())
                        .map_err(|e| SpecError(format!("lambda '{part}': {e}")))?;
                    if !value.is_constant() {
                        return Err(SpecError(format!("lambda '{part}' is not a constant")));
                    }
                    lambda.push(value.num().coeff(0));
                }
            }
            Ok(FamilyTag::GaLinearSubgroup(LinearSigmaOperator::new(lambda)))
        }
        _ => Err(SpecError(format!("unknown family tag '{tag}'"))),
    }
}

fn family_tag_label(tag: &FamilyTag) -> String {
    match tag {
        FamilyTag::Custom => "custom".to_string(),
        FamilyTag::FullAlgebraic(name) => format!("full_algebraic({name})"),
        FamilyTag::ConstantPoints(name) => format!("constant_points({name})"),
        FamilyTag::GaLinearSubgroup(op) => {
            let parts: Vec<String> = op.lambda.iter().map(|l| l.to_string()).collect();
            format!("ga_linear({})", parts.join(","))
        }
    }
}

/// Namer for entry variables: base j·n + k prints as g_{j+1}{k+1}.
pub fn entry_namer(n: usize) -> impl Fn(usize) -> String {
    move |base: usize| format!("g_{}{}", base / n + 1, base % n + 1)
}

/// Reads a spec from its JSON text.
pub fn spec_from_json(text: &str) -> Result<SigmaGroupSpec, SpecError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| SpecError(format!("invalid JSON: {e}")))?;
    let obj = value.as_object().ok_or_else(|| SpecError("expected a JSON object".into()))?;
    let tag_text = obj
        .get("family_tag")
        .and_then(|v| v.as_str())
        .ok_or_else(|| SpecError("missing string field 'family_tag'".into()))?;
    let tag = parse_family_tag(tag_text)?;
    match tag {
        FamilyTag::FullAlgebraic(name) => {
            full_algebraic(name).map_err(|e| SpecError(e.to_string()))
        }
        FamilyTag::ConstantPoints(name) => {
            constant_points(name).map_err(|e| SpecError(e.to_string()))
        }
        FamilyTag::GaLinearSubgroup(op) => Ok(ga_linear_subgroup(&op)),
        FamilyTag::Custom => {
            let n = obj
                .get("n")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| SpecError("custom specs need an integer field 'n'".into()))?
                as usize;
            if n < 1 || n > 9 {
                return Err(SpecError("matrix size n must be between 1 and 9".into()));
            }
            let equations = obj
                .get("equations")
                .and_then(|v| v.as_array())
                .ok_or_else(|| SpecError("custom specs need an array field 'equations'".into()))?;
            let mut defining = Vec::new();
            for eq in equations {
                let text = eq
                    .as_str()
                    .ok_or_else(|| SpecError("equations must be strings".into()))?;
                defining.push(parse_sigma_polynomial(text, n)?);
            }
            Ok(SigmaGroupSpec { n, defining, family: FamilyTag::Custom })
        }
    }
}

/// Serializes a spec to its canonical JSON value (sorted keys, canonical
/// equation strings).
pub fn spec_to_json(spec: &SigmaGroupSpec) -> serde_json::Value {
    let namer = entry_namer(spec.n);
    let equations: Vec<serde_json::Value> = spec
        .defining
        .iter()
        .map(|eq| serde_json::Value::String(eq.display_with(&namer)))
        .collect();
    serde_json::json!({
        "n": spec.n,
        "family_tag": family_tag_label(&spec.family),
        "equations": equations,
    })
}
