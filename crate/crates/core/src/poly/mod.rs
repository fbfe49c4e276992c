//! Sparse graded Laurent polynomials over `F_2`.
//!
//! A [`RingSpec`] declares the variables of a ring (name, degree, whether
//! negative powers are allowed). A [`GradedPolynomial`] is a set of
//! [`Monomial`]s over one spec; coefficients are implicit since every
//! coefficient is `1 ∈ F_2`. Terms are kept in canonical order, leading term
//! first: higher total degree first, ties broken lexicographically on the
//! spec's variable order with the larger exponent first.

mod text;

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};

pub use text::parse_polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: i64,
    pub laurent: bool,
}

/// A declared variable table.
#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<Variable>,
    index: HashMap<String, u32>,
}

impl RingSpec {
    pub fn new(vars: impl IntoIterator<Item = Variable>) -> Result<Arc<Self>> {
        let vars: Vec<Variable> = vars.into_iter().collect();
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.name.clone(), i as u32).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "duplicate variable name `{}`",
                    v.name
                )));
            }
        }
        Ok(Arc::new(RingSpec { vars, index }))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn variable(&self, idx: u32) -> &Variable {
        &self.vars[idx as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<u32> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

pub(crate) fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A product of variable powers. Exponents are stored sparsely, sorted by
/// variable index, all nonzero. The total degree is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: i64,
    exps: Vec<(u32, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Build from `(variable index, exponent)` pairs; repeated indices add.
    pub fn from_exponents(
        spec: &RingSpec,
        exps: impl IntoIterator<Item = (u32, i64)>,
    ) -> Result<Self> {
        let mut dense: BTreeMap<u32, i64> = BTreeMap::new();
        for (v, e) in exps {
            if v as usize >= spec.len() {
                return Err(Error::InvalidInput(format!("variable index {v} out of range")));
            }
            let slot = dense.entry(v).or_insert(0);
            *slot = slot.checked_add(e).ok_or(Error::Overflow("exponent"))?;
        }
        let mut degree: i64 = 0;
        let mut out = Vec::with_capacity(dense.len());
        for (v, e) in dense {
            if e == 0 {
                continue;
            }
            let var = spec.variable(v);
            if e < 0 && !var.laurent {
                return Err(Error::NegativeExponent(var.name.clone()));
            }
            degree = e
                .checked_mul(var.degree)
                .and_then(|d| degree.checked_add(d))
                .ok_or(Error::Overflow("degree"))?;
            out.push((v, e));
        }
        Ok(Monomial { degree, exps: out })
    }

    pub fn var(spec: &RingSpec, idx: u32, exp: i64) -> Result<Self> {
        Monomial::from_exponents(spec, [(idx, exp)])
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn exponents(&self) -> &[(u32, i64)] {
        &self.exps
    }

    pub fn exponent(&self, idx: u32) -> i64 {
        match self.exps.binary_search_by_key(&idx, |&(v, _)| v) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Sum of all exponents with multiplicity, restricted to `pred`.
    pub fn count_factors(&self, mut pred: impl FnMut(u32) -> bool) -> i64 {
        self.exps.iter().filter(|(v, _)| pred(*v)).map(|(_, e)| *e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = ea.checked_add(eb).ok_or(Error::Overflow("exponent"))?;
                    if e != 0 {
                        exps.push((va, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::Overflow("degree"))?;
        Ok(Monomial { degree, exps })
    }

    pub fn pow(&self, k: i64) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            exps.push((v, e.checked_mul(k).ok_or(Error::Overflow("exponent"))?));
        }
        if k == 0 {
            exps.clear();
        }
        let degree = self.degree.checked_mul(k).ok_or(Error::Overflow("degree"))?;
        Ok(Monomial { degree, exps })
    }

    /// The inverse monomial; every variable involved must be Laurent.
    pub fn inverse(&self, spec: &RingSpec) -> Result<Monomial> {
        for &(v, _) in &self.exps {
            if !spec.variable(v).laurent {
                return Err(Error::NonInvertibleImage(spec.variable(v).name.clone()));
            }
        }
        self.pow(-1)
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            return match (a.get(i), b.get(j)) {
                (None, None) => Ordering::Equal,
                (Some(&(_, ea)), None) => ea.cmp(&0),
                (None, Some(&(_, eb))) => 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal if ea == eb => {
                        i += 1;
                        j += 1;
                        continue;
                    }
                    Ordering::Equal => ea.cmp(&eb),
                    Ordering::Less => ea.cmp(&0),
                    Ordering::Greater => 0.cmp(&eb),
                },
            };
        }
    }
}

/// Term order: a monomial is greater when it has higher degree, or equal
/// degree and a larger exponent on the first variable where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the `F_2`-algebra described by a [`RingSpec`].
#[derive(Debug, Clone)]
pub struct GradedPolynomial {
    spec: Arc<RingSpec>,
    terms: Vec<Monomial>,
}

impl PartialEq for GradedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.spec, &other.spec) && self.terms == other.terms
    }
}

impl Eq for GradedPolynomial {}

/// Sort descending and cancel equal monomials in pairs.
fn normalize(mut terms: Vec<Monomial>) -> Vec<Monomial> {
    terms.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
    let mut iter = terms.into_iter().peekable();
    while let Some(t) = iter.next() {
        let mut odd = true;
        while iter.peek() == Some(&t) {
            iter.next();
            odd = !odd;
        }
        if odd {
            out.push(t);
        }
    }
    out
}

impl GradedPolynomial {
    pub fn zero(spec: &Arc<RingSpec>) -> Self {
        GradedPolynomial {
            spec: spec.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(spec: &Arc<RingSpec>) -> Self {
        Self::from_monomial(spec, Monomial::one())
    }

    pub fn from_monomial(spec: &Arc<RingSpec>, m: Monomial) -> Self {
        GradedPolynomial {
            spec: spec.clone(),
            terms: vec![m],
        }
    }

    /// Sum of the given monomials, reduced mod 2.
    pub fn from_terms(spec: &Arc<RingSpec>, terms: impl IntoIterator<Item = Monomial>) -> Self {
        GradedPolynomial {
            spec: spec.clone(),
            terms: normalize(terms.into_iter().collect()),
        }
    }

    /// The variable called `name` to the power `exp`.
    pub fn var(spec: &Arc<RingSpec>, name: &str, exp: i64) -> Result<Self> {
        let idx = spec.require(name)?;
        Ok(Self::from_monomial(spec, Monomial::var(spec, idx, exp)?))
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [m] => Some(m),
            _ => None,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(GradedPolynomial {
            spec: self.spec.clone(),
            terms: out,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                out.push(a.mul(b)?);
            }
        }
        Ok(GradedPolynomial {
            spec: self.spec.clone(),
            terms: normalize(out),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.mul(m))
            .collect::<Result<Vec<_>>>()?;
        // multiplying by a monomial preserves the term order
        Ok(GradedPolynomial {
            spec: self.spec.clone(),
            terms,
        })
    }

    /// Squaring is the Frobenius map in characteristic 2.
    pub fn square(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.pow(2))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedPolynomial {
            spec: self.spec.clone(),
            terms,
        })
    }

    pub fn pow(&self, mut k: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.spec);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.square()?;
            }
        }
        Ok(acc)
    }

    /// Homogeneous components keyed by total degree.
    pub fn degree_decompose(&self) -> BTreeMap<i64, GradedPolynomial> {
        let mut out: BTreeMap<i64, GradedPolynomial> = BTreeMap::new();
        for t in &self.terms {
            out.entry(t.degree())
                .or_insert_with(|| Self::zero(&self.spec))
                .terms
                .push(t.clone());
        }
        out
    }

    /// `Some(d)` if every term has degree `d`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let d = self.terms.first()?.degree();
        self.terms.iter().all(|t| t.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// The algebra homomorphism into `target` determined by images of
    /// variables, looked up by name.
    pub fn substitute(
        &self,
        images: &HashMap<String, GradedPolynomial>,
        target: &Arc<RingSpec>,
    ) -> Result<Self> {
        for img in images.values() {
            if !same_ring(img.spec(), target) {
                return Err(Error::IncompatibleRing);
            }
        }
        self.map_variables(target, |idx| {
            let name = &self.spec.variable(idx).name;
            images
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnmappedVariable(name.clone()))
        })
    }

    /// The algebra homomorphism into `target` sending variable `idx` to
    /// `image(idx)`. Each image is requested at most once.
    pub fn map_variables(
        &self,
        target: &Arc<RingSpec>,
        mut image: impl FnMut(u32) -> Result<GradedPolynomial>,
    ) -> Result<Self> {
        let mut images: HashMap<u32, GradedPolynomial> = HashMap::new();
        let mut powers: HashMap<(u32, i64), GradedPolynomial> = HashMap::new();
        let mut out = Vec::new();
        for t in &self.terms {
            let mut acc = GradedPolynomial::one(target);
            for &(v, e) in t.exponents() {
                let power = match powers.entry((v, e)) {
                    Entry::Occupied(o) => o.into_mut(),
                    Entry::Vacant(slot) => {
                        let img = match images.entry(v) {
                            Entry::Occupied(o) => o.into_mut(),
                            Entry::Vacant(s) => {
                                let img = image(v)?;
                                if !same_ring(img.spec(), target) {
                                    return Err(Error::IncompatibleRing);
                                }
                                s.insert(img)
                            }
                        };
                        let p = if e > 0 {
                            img.pow(e as u64)?
                        } else {
                            let name = || Error::NonInvertibleImage(self.spec.variable(v).name.clone());
                            let m = img.as_monomial().ok_or_else(name)?;
                            let inv = m.inverse(target).map_err(|_| name())?;
                            GradedPolynomial::from_monomial(target, inv.pow(-e)?)
                        };
                        slot.insert(p)
                    }
                };
                acc = acc.mul(power)?;
            }
            out.extend(acc.terms);
        }
        Ok(GradedPolynomial::from_terms(target, out))
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        text::format_polynomial(self)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        text::format_monomial(&self.spec, m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        text::polynomial_to_json(self)
    }

    pub fn from_json(spec: &Arc<RingSpec>, value: &serde_json::Value) -> Result<Self> {
        text::polynomial_from_json(spec, value)
    }

    pub fn parse(spec: &Arc<RingSpec>, s: &str) -> Result<Self> {
        parse_polynomial(spec, s)
    }
}

impl std::fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn format_monomial(spec: &RingSpec, m: &Monomial) -> String {
    text::format_monomial(spec, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> Arc<RingSpec> {
        RingSpec::new([
            Variable { name: "x2".into(), degree: 2, laurent: false },
            Variable { name: "Y".into(), degree: 2, laurent: false },
            Variable { name: "a".into(), degree: 1, laurent: false },
            Variable { name: "b".into(), degree: 1, laurent: false },
            Variable { name: "e".into(), degree: -1, laurent: true },
        ])
        .unwrap()
    }

    fn p(s: &Arc<RingSpec>, text: &str) -> GradedPolynomial {
        GradedPolynomial::parse(s, text).unwrap()
    }

    #[test]
    fn addition_examples() {
        let s = spec();
        let q = p(&s, "x2 + Y + a*e");
        assert!(q.add(&q).unwrap().is_zero());
        assert_eq!(q.add(&GradedPolynomial::zero(&s)).unwrap(), q);
        let r = p(&s, "x2 + Y").add(&p(&s, "Y + e^-1")).unwrap();
        assert_eq!(r.to_text(), "x2 + e^-1");
    }

    #[test]
    fn multiplication_examples() {
        let s = spec();
        let ab = p(&s, "a + b");
        assert_eq!(ab.mul(&ab).unwrap(), p(&s, "a^2 + b^2"));
        assert!(p(&s, "e^-1").mul(&p(&s, "e")).unwrap().is_one());
        let y = p(&s, "Y + e^-1");
        assert_eq!(y.mul(&y).unwrap().to_text(), "Y^2 + e^-2");
        assert_eq!(ab.pow(4).unwrap(), p(&s, "a^4 + b^4"));
        assert_eq!(ab.pow(3).unwrap(), p(&s, "a^3 + a^2*b + a*b^2 + b^3"));
    }

    #[test]
    fn odd_multiplicities_survive_cancellation() {
        let s = spec();
        let a = Monomial::var(&s, 2, 1).unwrap();
        let q = GradedPolynomial::from_terms(&s, vec![a.clone(); 3]);
        assert_eq!(q, GradedPolynomial::from_monomial(&s, a.clone()));
        let q = GradedPolynomial::from_terms(&s, vec![a; 4]);
        assert!(q.is_zero());
    }

    #[test]
    fn incompatible_rings() {
        let (s, t) = (spec(), RingSpec::new([]).unwrap());
        let a = GradedPolynomial::one(&s);
        let b = GradedPolynomial::one(&t);
        assert_eq!(a.add(&b), Err(Error::IncompatibleRing));
        assert_eq!(a.mul(&b), Err(Error::IncompatibleRing));
    }

    #[test]
    fn decompose() {
        let s = spec();
        assert!(GradedPolynomial::zero(&s).degree_decompose().is_empty());
        let d = p(&s, "x2 + e^-1").degree_decompose();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&2].to_text(), "x2");
        assert_eq!(d[&1].to_text(), "e^-1");
        assert_eq!(p(&s, "x2 + a*b").degree_decompose().len(), 1);
    }

    #[test]
    fn substitution_examples() {
        let s = spec();
        let mut images = HashMap::new();
        images.insert("a".to_string(), p(&s, "Y*e"));
        assert_eq!(p(&s, "a").substitute(&images, &s).unwrap().to_text(), "Y*e");

        let mut images = HashMap::new();
        images.insert("e".to_string(), p(&s, "e"));
        assert_eq!(p(&s, "e^-2").substitute(&images, &s).unwrap(), p(&s, "e^-2"));

        let mut images = HashMap::new();
        images.insert("a".to_string(), p(&s, "b"));
        images.insert("x2".to_string(), p(&s, "b^2"));
        assert!(p(&s, "a^2 + x2").substitute(&images, &s).unwrap().is_zero());
    }

    #[test]
    fn substitution_errors() {
        let s = spec();
        let images = HashMap::new();
        assert_eq!(
            p(&s, "a").substitute(&images, &s),
            Err(Error::UnmappedVariable("a".into()))
        );
        let mut images = HashMap::new();
        images.insert("e".to_string(), p(&s, "a + b"));
        assert_eq!(
            p(&s, "e^-1").substitute(&images, &s),
            Err(Error::NonInvertibleImage("e".into()))
        );
        images.insert("e".to_string(), p(&s, "a"));
        assert_eq!(
            p(&s, "e^-1").substitute(&images, &s),
            Err(Error::NonInvertibleImage("e".into()))
        );
        // positive powers of a non-monomial image are fine
        assert_eq!(p(&s, "e^2").substitute(&images, &s).unwrap(), p(&s, "a^2"));
    }

    #[test]
    fn term_order() {
        let s = spec();
        // degree first, then larger exponent on the earliest variable
        assert_eq!(p(&s, "e^-1 + a*b + Y + x2").to_text(), "x2 + Y + a*b + e^-1");
        assert_eq!(p(&s, "b^2 + a^2").to_text(), "a^2 + b^2");
    }

    #[test]
    fn negative_exponent_rejected() {
        let s = spec();
        assert_eq!(
            Monomial::var(&s, 2, -1),
            Err(Error::NegativeExponent("a".into()))
        );
    }

    #[test]
    fn overflow_checked() {
        let s = spec();
        let big = Monomial::var(&s, 2, i64::MAX).unwrap();
        assert!(matches!(big.mul(&big), Err(Error::Overflow(_))));
    }
}
