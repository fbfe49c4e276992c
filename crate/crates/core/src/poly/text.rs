use std::sync::Arc;

use serde_json::{Map, Value};

use super::{GradedPolynomial, Monomial, RingSpec};
use crate::error::{Error, Result};

pub(crate) fn format_monomial(spec: &RingSpec, m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut out = String::new();
    for (i, &(v, e)) in m.exponents().iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        out.push_str(&spec.variable(v).name);
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

pub(crate) fn format_polynomial(p: &GradedPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .iter()
        .map(|m| format_monomial(p.spec(), m))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn polynomial_to_json(p: &GradedPolynomial) -> Value {
    let terms = p
        .terms()
        .iter()
        .map(|m| {
            let obj: Map<String, Value> = m
                .exponents()
                .iter()
                .map(|&(v, e)| (p.spec().variable(v).name.clone(), Value::from(e)))
                .collect();
            Value::Object(obj)
        })
        .collect();
    let mut root = Map::new();
    root.insert("terms".into(), Value::Array(terms));
    Value::Object(root)
}

pub(crate) fn polynomial_from_json(spec: &Arc<RingSpec>, value: &Value) -> Result<GradedPolynomial> {
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("polynomial JSON needs a `terms` array".into()))?;
    let mut monos = Vec::with_capacity(terms.len());
    for t in terms {
        let obj = t
            .as_object()
            .ok_or_else(|| Error::Json("each term must be a JSON object".into()))?;
        let mut exps = Vec::with_capacity(obj.len());
        for (name, e) in obj {
            let e = e
                .as_i64()
                .ok_or_else(|| Error::Json(format!("exponent of `{name}` is not an integer")))?;
            exps.push((spec.require(name)?, e));
        }
        monos.push(Monomial::from_exponents(spec, exps)?);
    }
    Ok(GradedPolynomial::from_terms(spec, monos))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    spec: &'a Arc<RingSpec>,
}

impl<'a> Parser<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(pos, |nl| pos - nl - 1) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn polynomial(&mut self) -> Result<GradedPolynomial> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.error_at(self.pos, "expected `+`, `*` or end of input"));
        }
        Ok(GradedPolynomial::from_terms(
            self.spec,
            terms.into_iter().flatten(),
        ))
    }

    /// `None` when the term contains the factor `0`.
    fn term(&mut self) -> Result<Option<Monomial>> {
        let mut exps = Vec::new();
        let mut zero = self.factor(&mut exps)?;
        while self.eat('*') {
            zero |= self.factor(&mut exps)?;
        }
        if zero {
            return Ok(None);
        }
        Monomial::from_exponents(self.spec, exps).map(Some)
    }

    fn factor(&mut self, exps: &mut Vec<(u32, i64)>) -> Result<bool> {
        self.skip_ws();
        let start = self.pos;
        let ident: String = self.src[start..]
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '@' || *c == '_')
            .collect();
        if ident.is_empty() {
            return Err(self.error_at(start, "expected a variable, `0` or `1`"));
        }
        self.pos += ident.len();
        let exp = if self.eat('^') { self.exponent()? } else { 1 };
        match ident.as_str() {
            "0" => Ok(true),
            "1" => Ok(false),
            name => {
                let idx = self.spec.require(name)?;
                exps.push((idx, exp));
                Ok(false)
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        let bytes = self.src.as_bytes();
        if end < bytes.len() && bytes[end] == b'-' {
            end += 1;
        }
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        let digits = &self.src[start..end];
        let value = digits
            .parse::<i64>()
            .map_err(|_| self.error_at(start, "expected an integer exponent"))?;
        self.pos = end;
        Ok(value)
    }
}

/// Parse the canonical text form, e.g. `x2*Y3@c1 + e@c1^-2`, and normalize.
pub fn parse_polynomial(spec: &Arc<RingSpec>, s: &str) -> Result<GradedPolynomial> {
    Parser { src: s, pos: 0, spec }.polynomial()
}
