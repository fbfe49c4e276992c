//! The rings `AO_*(G)`, `MO_*[e_V, e_V^-1, Y_{d,V}]` and its e-nonpositive
//! subring, together with the change of generators `Y_{d,V} = X_{d-1,V} e_V^-1`.
//!
//! Degrees: `deg e_V = -1`, `deg e_V^-1 = 1`, `deg Y_{d,V} = d`,
//! `deg X_{i,V} = i`, `deg x_i = i`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{self, Character};
use crate::hopf::Antipode;
use crate::mo;
use crate::poly::{GradedPolynomial, Monomial, RingSpec, Variable};

pub const DEFAULT_D_MAX: u32 = 8;
pub const DEFAULT_MO_MAX: u32 = 12;
pub const MAX_D: u32 = 64;

/// What a variable of the big ring stands for. Character positions index
/// into [`BigRingSpec::characters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Mo(u32),
    Euler(usize),
    Y { d: u32, ch: usize },
    X { i: u32, ch: usize },
}

/// The variable table of `MO_*[e_V, e_V^-1, Y_{d,V}]`, extended by the
/// companion generators `X_{i,V}` of the X-presentation.
///
/// Variable order (which is also the term order's tie-break order): the
/// `x_i` by descending degree, then per character the `Y_{d,V}` by
/// descending `d`, then all `e_V`, then per character the `X_{i,V}` by
/// descending `i`.
pub struct BigRingSpec {
    l: u32,
    d_max: u32,
    mo_max: u32,
    x_max: u32,
    chars: Vec<Character>,
    ring: Arc<RingSpec>,
    kinds: Vec<VarKind>,
    euler: Vec<u32>,
    // y[ch][d - 2], xs[ch][i - 1]
    y: Vec<Vec<u32>>,
    xs: Vec<Vec<u32>>,
    antipode: Antipode,
}

impl fmt::Debug for BigRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BigRingSpec")
            .field("l", &self.l)
            .field("d_max", &self.d_max)
            .field("mo_max", &self.mo_max)
            .field("x_max", &self.x_max)
            .finish()
    }
}

/// Which way [`BigRingSpec::rewrite`] changes generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    XToY,
    YToX,
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x-to-y" | "X-to-Y" => Ok(Direction::XToY),
            "y-to-x" | "Y-to-X" => Ok(Direction::YToX),
            _ => Err(Error::InvalidParameter(format!(
                "direction must be `x-to-y` or `y-to-x`, got `{s}`"
            ))),
        }
    }
}

/// Result of the e-nonpositivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    NotPositive { witness: Monomial },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive)
    }
}

impl BigRingSpec {
    pub fn new(l: u32, d_max: u32, mo_max: u32) -> Result<Self> {
        Self::with_x_max(l, d_max, mo_max, d_max.saturating_sub(1))
    }

    /// Like [`BigRingSpec::new`] but with X-generators `X_{i,V}` for
    /// `1 <= i <= x_max`; `x_max` must be at least `d_max - 1`.
    pub fn with_x_max(l: u32, d_max: u32, mo_max: u32, x_max: u32) -> Result<Self> {
        group::check_rank(l)?;
        if !(2..=MAX_D).contains(&d_max) {
            return Err(Error::InvalidParameter(format!(
                "d_max must satisfy 2 <= d_max <= {MAX_D}, got {d_max}"
            )));
        }
        if x_max + 1 < d_max || x_max > MAX_D {
            return Err(Error::InvalidParameter(format!(
                "X-index bound must satisfy d_max - 1 <= x_max <= {MAX_D}, got {x_max}"
            )));
        }
        let mo_degrees = mo::generator_degrees_up_to(mo_max)?;
        let chars = group::enumerate_characters(l)?;

        let mut vars = Vec::new();
        let mut kinds = Vec::new();
        let mut push = |vars: &mut Vec<Variable>, name: String, degree: i64, laurent, kind| {
            vars.push(Variable { name, degree, laurent });
            kinds.push(kind);
            (vars.len() - 1) as u32
        };
        for &i in mo_degrees.iter().rev() {
            push(&mut vars, mo::generator_name(i), i as i64, false, VarKind::Mo(i));
        }
        let mut y = vec![vec![0; d_max as usize - 1]; chars.len()];
        for (ch, c) in chars.iter().enumerate() {
            for d in (2..=d_max).rev() {
                y[ch][d as usize - 2] =
                    push(&mut vars, y_name(d, c), d as i64, false, VarKind::Y { d, ch });
            }
        }
        let mut euler = Vec::with_capacity(chars.len());
        for (ch, c) in chars.iter().enumerate() {
            euler.push(push(&mut vars, e_name(c), -1, true, VarKind::Euler(ch)));
        }
        let mut xs = vec![vec![0; x_max as usize]; chars.len()];
        for (ch, c) in chars.iter().enumerate() {
            for i in (1..=x_max).rev() {
                xs[ch][i as usize - 1] =
                    push(&mut vars, x_name(i, c), i as i64, false, VarKind::X { i, ch });
            }
        }
        let ring = RingSpec::new(vars)?;
        let antipode = Antipode::new(&ring);
        Ok(BigRingSpec {
            l,
            d_max,
            mo_max,
            x_max,
            chars,
            ring,
            kinds,
            euler,
            y,
            xs,
            antipode,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |k: &str| {
            value
                .get(k)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Json(format!("ring spec needs integer field `{k}`")))
        };
        Self::new(field("l")? as u32, field("dmax")? as u32, field("momax")? as u32)
    }

    pub fn to_json(&self) -> Value {
        json!({"l": self.l, "dmax": self.d_max, "momax": self.mo_max})
    }

    pub fn rank(&self) -> u32 {
        self.l
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    pub fn mo_max(&self) -> u32 {
        self.mo_max
    }

    pub fn x_max(&self) -> u32 {
        self.x_max
    }

    pub fn characters(&self) -> &[Character] {
        &self.chars
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn antipode(&self) -> &Antipode {
        &self.antipode
    }

    pub fn kind(&self, var: u32) -> VarKind {
        self.kinds[var as usize]
    }

    pub fn char_index(&self, c: &Character) -> Result<usize> {
        self.chars
            .binary_search(c)
            .map_err(|_| Error::UnknownCharacter(c.label()))
    }

    pub fn parse_character(&self, label: &str) -> Result<Character> {
        let c = Character::parse_for_rank(label, self.l)?;
        self.char_index(&c)?;
        Ok(c)
    }

    pub fn euler_var(&self, ch: usize) -> u32 {
        self.euler[ch]
    }

    pub fn y_var(&self, d: u32, ch: usize) -> Option<u32> {
        (2..=self.d_max).contains(&d).then(|| self.y[ch][d as usize - 2])
    }

    pub fn x_var(&self, i: u32, ch: usize) -> Option<u32> {
        (1..=self.x_max).contains(&i).then(|| self.xs[ch][i as usize - 1])
    }

    /// Index of `x_i`, if `i` is an admissible degree within `mo_max`.
    pub fn mo_var(&self, i: u32) -> Option<u32> {
        self.ring.lookup(&mo::generator_name(i)).filter(|_| mo::is_admissible(i))
    }

    /// Variables allowed in the Y-presentation, i.e. everything but X's.
    pub fn y_presentation_vars(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.kinds.len() as u32).filter(|&v| !matches!(self.kind(v), VarKind::X { .. }))
    }

    pub fn zero(&self) -> GradedPolynomial {
        GradedPolynomial::zero(&self.ring)
    }

    pub fn one(&self) -> GradedPolynomial {
        GradedPolynomial::one(&self.ring)
    }

    pub fn parse(&self, s: &str) -> Result<GradedPolynomial> {
        GradedPolynomial::parse(&self.ring, s)
    }

    pub fn monomial(&self, exps: impl IntoIterator<Item = (u32, i64)>) -> Result<Monomial> {
        Monomial::from_exponents(&self.ring, exps)
    }

    pub fn var_poly(&self, var: u32, exp: i64) -> Result<GradedPolynomial> {
        Ok(GradedPolynomial::from_monomial(
            &self.ring,
            Monomial::var(&self.ring, var, exp)?,
        ))
    }

    /// `e_V` as an element of the big ring.
    pub fn euler(&self, c: &Character) -> Result<GradedPolynomial> {
        let ch = self.char_index(c)?;
        self.var_poly(self.euler[ch], 1)
    }

    pub(crate) fn check_ring(&self, p: &GradedPolynomial) -> Result<()> {
        if crate::poly::same_ring(p.spec(), &self.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    pub fn has_x_variables(&self, p: &GradedPolynomial) -> bool {
        p.terms().iter().any(|m| {
            m.exponents()
                .iter()
                .any(|&(v, _)| matches!(self.kind(v), VarKind::X { .. }))
        })
    }

    pub fn has_y_variables(&self, p: &GradedPolynomial) -> bool {
        p.terms().iter().any(|m| {
            m.exponents()
                .iter()
                .any(|&(v, _)| matches!(self.kind(v), VarKind::Y { .. }))
        })
    }

    /// `Σ α_V V ↦ Π e_V^{-α_V}`.
    pub fn ao_embed(&self, a: &AoElement) -> Result<GradedPolynomial> {
        let mut exps = Vec::with_capacity(a.exponents.len());
        for (c, &alpha) in &a.exponents {
            let ch = self.char_index(c)?;
            let neg = alpha.checked_neg().ok_or(Error::Overflow("exponent"))?;
            exps.push((self.euler[ch], neg));
        }
        Ok(GradedPolynomial::from_monomial(&self.ring, self.monomial(exps)?))
    }

    /// X-to-Y: `X_{i,V} ↦ Y_{i+1,V} e_V`; Y-to-X: `Y_{d,V} ↦ X_{d-1,V} e_V^-1`.
    /// All other variables are fixed.
    pub fn rewrite(&self, p: &GradedPolynomial, direction: Direction) -> Result<GradedPolynomial> {
        self.check_ring(p)?;
        p.map_variables(&self.ring, |v| match (direction, self.kind(v)) {
            (Direction::XToY, VarKind::X { i, ch }) => {
                let y = self.y_var(i + 1, ch).ok_or_else(|| Error::SpecTooSmall {
                    variable: self.ring.variable(v).name.clone(),
                    needed: i as i64 + 1,
                })?;
                Ok(GradedPolynomial::from_monomial(
                    &self.ring,
                    self.monomial([(y, 1), (self.euler[ch], 1)])?,
                ))
            }
            (Direction::YToX, VarKind::Y { d, ch }) => {
                let x = self.x_var(d - 1, ch).ok_or_else(|| Error::SpecTooSmall {
                    variable: self.ring.variable(v).name.clone(),
                    needed: d as i64,
                })?;
                Ok(GradedPolynomial::from_monomial(
                    &self.ring,
                    self.monomial([(x, 1), (self.euler[ch], -1)])?,
                ))
            }
            _ => self.var_poly(v, 1),
        })
    }

    /// Membership in `MO_*[e_V^-1, Y_{d,V}]`: no monomial has a positive
    /// e-exponent. The witness is the first offending monomial in term order.
    pub fn is_in_positive_part(&self, p: &GradedPolynomial) -> Result<Positivity> {
        self.check_ring(p)?;
        if self.has_x_variables(p) {
            return Err(Error::WrongPresentation(
                "positivity is decided in the Y-presentation; rewrite X-variables first".into(),
            ));
        }
        Ok(p.terms()
            .iter()
            .find(|m| !self.monomial_is_nonpositive(m))
            .map_or(Positivity::Positive, |m| Positivity::NotPositive {
                witness: m.clone(),
            }))
    }

    pub fn monomial_is_nonpositive(&self, m: &Monomial) -> bool {
        m.exponents()
            .iter()
            .all(|&(v, e)| e <= 0 || !matches!(self.kind(v), VarKind::Euler(_)))
    }

    /// `ι`: conjugate the family-wise antipode through `Y_{d,V} = X_{d-1,V} e_V^-1`.
    /// The result is in the Y-presentation.
    pub fn iota(&self, p: &GradedPolynomial) -> Result<GradedPolynomial> {
        let as_x = self.rewrite(p, Direction::YToX)?;
        let flipped = self.antipode.apply_all_families(&as_x)?;
        self.rewrite(&flipped, Direction::XToY)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        crate::poly::format_monomial(&self.ring, m)
    }
}

pub fn e_name(c: &Character) -> String {
    format!("e@{}", c.label())
}

pub fn y_name(d: u32, c: &Character) -> String {
    format!("Y{d}@{}", c.label())
}

pub fn x_name(i: u32, c: &Character) -> String {
    format!("X{i}@{}", c.label())
}

/// An element `Σ α_V V` of `ZJ`, i.e. a unit `Π e_V^{-α_V}` of `AO_*(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AoElement {
    exponents: BTreeMap<Character, i64>,
}

impl AoElement {
    pub fn new(exps: impl IntoIterator<Item = (Character, i64)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (c, a) in exps {
            *exponents.entry(c).or_insert(0) += a;
        }
        exponents.retain(|_, a| *a != 0);
        AoElement { exponents }
    }

    pub fn exponents(&self) -> &BTreeMap<Character, i64> {
        &self.exponents
    }

    /// Group operation of `ZJ`.
    pub fn add(&self, other: &AoElement) -> AoElement {
        AoElement::new(
            self.exponents
                .iter()
                .chain(other.exponents.iter())
                .map(|(c, a)| (*c, *a)),
        )
    }

    /// Degree of the embedded monomial: `e_V^-1` sits in degree `|V| = 1`.
    pub fn degree(&self) -> i64 {
        self.exponents.values().sum()
    }

    pub fn from_json(value: &Value, l: u32) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Json("AO element must be a JSON object".into()))?;
        let mut exps = Vec::new();
        for (k, v) in obj {
            let a = v
                .as_i64()
                .ok_or_else(|| Error::Json(format!("coefficient of `{k}` is not an integer")))?;
            exps.push((Character::parse_for_rank(k, l)?, a));
        }
        Ok(AoElement::new(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec1() -> BigRingSpec {
        BigRingSpec::new(1, 8, 12).unwrap()
    }

    #[test]
    fn variable_table() {
        let s = BigRingSpec::new(2, 4, 6).unwrap();
        let names: Vec<&str> = s.ring().variables().iter().map(|v| v.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "x6", "x5", "x4", "x2", "Y4@c01", "Y3@c01", "Y2@c01", "Y4@c10", "Y3@c10",
                "Y2@c10", "Y4@c11", "Y3@c11", "Y2@c11", "e@c01", "e@c10", "e@c11", "X3@c01",
                "X2@c01", "X1@c01", "X3@c10", "X2@c10", "X1@c10", "X3@c11", "X2@c11",
                "X1@c11"
            ]
        );
        let e = s.ring().lookup("e@c10").unwrap();
        assert_eq!(s.ring().variable(e).degree, -1);
        assert!(s.ring().variable(e).laurent);
        assert_eq!(s.to_json().to_string(), r#"{"l":2,"dmax":4,"momax":6}"#);
        assert_eq!(BigRingSpec::from_json(&s.to_json()).unwrap().ring(), s.ring());
    }

    #[test]
    fn spec_bounds() {
        assert!(BigRingSpec::new(1, 1, 12).is_err());
        assert!(BigRingSpec::new(0, 8, 12).is_err());
        assert!(BigRingSpec::new(1, 8, 300).is_err());
        assert!(BigRingSpec::with_x_max(1, 8, 12, 5).is_err());
    }

    #[test]
    fn ao_embed_examples() {
        let s = BigRingSpec::new(2, 4, 4).unwrap();
        let v = s.parse_character("c01").unwrap();
        let w = s.parse_character("c10").unwrap();
        let a = AoElement::new([(v, 1)]);
        assert_eq!(s.ao_embed(&a).unwrap().to_text(), "e@c01^-1");
        assert!(s.ao_embed(&AoElement::default()).unwrap().is_one());
        let b = AoElement::new([(v, 2), (w, -1)]);
        let img = s.ao_embed(&b).unwrap();
        assert_eq!(img.to_text(), "e@c01^-2*e@c10");
        assert_eq!(img.homogeneous_degree(), Some(b.degree()));
        let foreign = AoElement::new([(Character::parse_label("c1").unwrap(), 1)]);
        assert!(matches!(s.ao_embed(&foreign), Err(Error::UnknownCharacter(_))));
    }

    #[test]
    fn rewrite_examples() {
        let s = spec1();
        let x1 = s.parse("X1@c1").unwrap();
        assert_eq!(s.rewrite(&x1, Direction::XToY).unwrap().to_text(), "Y2@c1*e@c1");
        let y5 = s.parse("Y5@c1").unwrap();
        assert_eq!(s.rewrite(&y5, Direction::YToX).unwrap().to_text(), "e@c1^-1*X4@c1");
        let p = s.parse("x2*X3@c1^2 + X1@c1*e@c1^-2 + x4").unwrap();
        let there = s.rewrite(&p, Direction::XToY).unwrap();
        assert!(!s.has_x_variables(&there));
        assert_eq!(s.rewrite(&there, Direction::YToX).unwrap(), p);
    }

    #[test]
    fn rewrite_overflow() {
        let s = BigRingSpec::with_x_max(1, 3, 4, 5).unwrap();
        let p = s.parse("X4@c1").unwrap();
        assert_eq!(
            s.rewrite(&p, Direction::XToY),
            Err(Error::SpecTooSmall { variable: "X4@c1".into(), needed: 5 })
        );
    }

    #[test]
    fn positivity_examples() {
        let s = spec1();
        let p = s.parse("e@c1^-3*Y2@c1").unwrap();
        assert!(s.is_in_positive_part(&p).unwrap().is_positive());
        let e = s.parse("e@c1").unwrap();
        assert_eq!(
            s.is_in_positive_part(&e).unwrap(),
            Positivity::NotPositive { witness: e.terms()[0].clone() }
        );
        let q = s.parse("Y3@c1 + Y2@c1^2*e@c1").unwrap();
        match s.is_in_positive_part(&q).unwrap() {
            Positivity::NotPositive { witness } => {
                assert_eq!(s.format_monomial(&witness), "Y2@c1^2*e@c1")
            }
            other => panic!("{other:?}"),
        }
        let x = s.parse("X1@c1").unwrap();
        assert!(matches!(s.is_in_positive_part(&x), Err(Error::WrongPresentation(_))));
    }

    #[test]
    fn iota_examples() {
        let s = spec1();
        let e = s.parse("e@c1").unwrap();
        assert_eq!(s.iota(&e).unwrap(), e);
        let y2 = s.parse("Y2@c1").unwrap();
        assert_eq!(s.iota(&y2).unwrap(), y2);
        let y3 = s.parse("Y3@c1").unwrap();
        assert_eq!(s.iota(&y3).unwrap().to_text(), "Y3@c1 + Y2@c1^2*e@c1");
        let x = s.parse("x5*x2").unwrap();
        assert_eq!(s.iota(&x).unwrap(), x);
    }

    #[test]
    fn direction_parse() {
        assert_eq!("x-to-y".parse::<Direction>().unwrap(), Direction::XToY);
        assert_eq!("Y-to-X".parse::<Direction>().unwrap(), Direction::YToX);
        assert!("sideways".parse::<Direction>().is_err());
    }
}
