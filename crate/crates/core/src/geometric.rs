//! Symbolic fixed-point data of `G`-manifolds and the maps `φ_N`, `κ_N`,
//! `κ_N^-1`.
//!
//! A manifold enters only through its fixed components `F`: the class
//! `b̄_F ∈ MO_*(B)` of the classifying map of the isotypical pieces of the
//! normal bundle, written in the X-presentation, and the ranks `|E_V|` of
//! those pieces. Both `φ_N` and `κ_N` send such data to
//! `Σ_F b̄_F · Π_V e_V^{-|E_V|}`.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::group::Character;
use crate::poly::GradedPolynomial;
use crate::rings::{BigRingSpec, Direction, VarKind};

/// One fixed component: `b̄_F` and the ranks `|E_V|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub base: GradedPolynomial,
    pub ranks: BTreeMap<Character, u32>,
}

impl FixedPointDatum {
    pub fn new(base: GradedPolynomial, ranks: impl IntoIterator<Item = (Character, u32)>) -> Self {
        let ranks = ranks.into_iter().filter(|(_, r)| *r > 0).collect();
        FixedPointDatum { base, ranks }
    }

    pub fn rank(&self, c: &Character) -> u32 {
        self.ranks.get(c).copied().unwrap_or(0)
    }

    /// Codimension `m = Σ |E_V|` of the component.
    pub fn normal_dim(&self) -> i64 {
        self.ranks.values().map(|&r| r as i64).sum()
    }
}

/// A class given by its fixed-point data. With `boundary_allowed` the data
/// is read as a tubular neighbourhood of the fixed set, i.e. a class in
/// `N_*^G[A, P]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricClass {
    pub ambient_dim: i64,
    pub components: Vec<FixedPointDatum>,
    pub boundary_allowed: bool,
}

impl GeometricClass {
    pub fn new(ambient_dim: i64, components: Vec<FixedPointDatum>, boundary_allowed: bool) -> Self {
        GeometricClass {
            ambient_dim,
            components,
            boundary_allowed,
        }
    }

    /// Same data, read in the other bordism group.
    pub fn with_boundary(mut self, boundary_allowed: bool) -> Self {
        self.boundary_allowed = boundary_allowed;
        self
    }

    /// Disjoint union; both classes must have the same dimension and kind.
    pub fn disjoint_union(&self, other: &GeometricClass) -> Result<GeometricClass> {
        if self.ambient_dim != other.ambient_dim || self.boundary_allowed != other.boundary_allowed {
            return Err(Error::InvalidInput(
                "disjoint union needs classes of equal dimension and kind".into(),
            ));
        }
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Ok(GeometricClass::new(self.ambient_dim, components, self.boundary_allowed))
    }

    /// Cartesian product: fixed components multiply pairwise.
    pub fn product(&self, other: &GeometricClass) -> Result<GeometricClass> {
        let mut components = Vec::with_capacity(self.components.len() * other.components.len());
        for a in &self.components {
            for b in &other.components {
                let mut ranks = a.ranks.clone();
                for (c, r) in &b.ranks {
                    *ranks.entry(*c).or_insert(0) += r;
                }
                components.push(FixedPointDatum {
                    base: a.base.mul(&b.base)?,
                    ranks,
                });
            }
        }
        Ok(GeometricClass::new(
            self.ambient_dim + other.ambient_dim,
            components,
            self.boundary_allowed || other.boundary_allowed,
        ))
    }

    /// Check the rank bound and the dimension count; an empty list means
    /// the class is valid.
    pub fn validate(&self, spec: &BigRingSpec) -> Vec<String> {
        let mut diags = Vec::new();
        for (k, comp) in self.components.iter().enumerate() {
            if spec.check_ring(&comp.base).is_err() {
                diags.push(format!("component {k}: base class lives in a different ring"));
                continue;
            }
            for c in comp.ranks.keys() {
                if spec.char_index(c).is_err() {
                    diags.push(format!("component {k}: unknown character {c}"));
                }
            }
            for m in comp.base.terms() {
                let text = spec.format_monomial(m);
                let mut per_char: BTreeMap<usize, i64> = BTreeMap::new();
                for &(v, e) in m.exponents() {
                    match spec.kind(v) {
                        VarKind::X { ch, .. } => *per_char.entry(ch).or_insert(0) += e,
                        VarKind::Mo(_) => {}
                        VarKind::Y { .. } | VarKind::Euler(_) => diags.push(format!(
                            "component {k}: monomial {text} uses `{}`; base classes are written in X-variables and x_i",
                            spec.ring().variable(v).name
                        )),
                    }
                }
                for (ch, count) in per_char {
                    let c = spec.characters()[ch];
                    let rank = comp.rank(&c) as i64;
                    if count > rank {
                        diags.push(format!(
                            "component {k}: monomial {text} has {count} X-factors for {c} but |E_{c}| = {rank}"
                        ));
                    }
                }
            }
            if !comp.base.is_homogeneous() {
                diags.push(format!(
                    "component {k}: base class {} is not homogeneous",
                    comp.base
                ));
            } else if let Some(d) = comp.base.homogeneous_degree() {
                if d + comp.normal_dim() != self.ambient_dim {
                    diags.push(format!(
                        "component {k}: base degree {d} plus normal rank {} does not equal n = {}",
                        comp.normal_dim(),
                        self.ambient_dim
                    ));
                }
            }
        }
        diags
    }

    pub fn to_json(&self) -> Value {
        let components = self
            .components
            .iter()
            .map(|c| {
                let ranks: Map<String, Value> = c
                    .ranks
                    .iter()
                    .map(|(ch, r)| (ch.label(), Value::from(*r)))
                    .collect();
                let mut obj = Map::new();
                obj.insert("base".into(), c.base.to_json());
                obj.insert("ranks".into(), Value::Object(ranks));
                Value::Object(obj)
            })
            .collect();
        let mut root = Map::new();
        root.insert("n".into(), Value::from(self.ambient_dim));
        root.insert("boundary".into(), Value::from(self.boundary_allowed));
        root.insert("components".into(), Value::Array(components));
        Value::Object(root)
    }

    pub fn from_json(value: &Value, spec: &BigRingSpec) -> Result<Self> {
        let n = value
            .get("n")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Json("geometric class needs integer field `n`".into()))?;
        let boundary = match value.get("boundary") {
            None => false,
            Some(b) => b
                .as_bool()
                .ok_or_else(|| Error::Json("`boundary` must be a boolean".into()))?,
        };
        let comps = value
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("geometric class needs a `components` array".into()))?;
        let mut components = Vec::with_capacity(comps.len());
        for c in comps {
            let base = match c.get("base") {
                Some(b) => GradedPolynomial::from_json(spec.ring(), b)?,
                None => spec.one(),
            };
            let mut ranks = Vec::new();
            if let Some(r) = c.get("ranks") {
                let obj = r
                    .as_object()
                    .ok_or_else(|| Error::Json("`ranks` must be an object".into()))?;
                for (label, v) in obj {
                    let rank = v
                        .as_u64()
                        .and_then(|r| u32::try_from(r).ok())
                        .ok_or_else(|| Error::Json(format!("rank of `{label}` must be a nonnegative integer")))?;
                    ranks.push((spec.parse_character(label)?, rank));
                }
            }
            components.push(FixedPointDatum::new(base, ranks));
        }
        Ok(GeometricClass::new(n, components, boundary))
    }
}

fn fixed_point_sum(g: &GeometricClass, spec: &BigRingSpec) -> Result<GradedPolynomial> {
    let diags = g.validate(spec);
    if !diags.is_empty() {
        return Err(Error::Validation(diags));
    }
    let mut total = spec.zero();
    for comp in &g.components {
        let euler = comp
            .ranks
            .iter()
            .map(|(c, &r)| Ok((spec.euler_var(spec.char_index(c)?), -(r as i64))))
            .collect::<Result<Vec<_>>>()?;
        let twist = spec.monomial(euler)?;
        let b = spec.rewrite(&comp.base, Direction::XToY)?.mul_monomial(&twist)?;
        total = total.add(&b)?;
    }
    Ok(total)
}

/// `φ_N([M]) = Σ_F b̄_F · Π e_V^{-|E_V|}` for a closed `G`-manifold.
pub fn phi_n(g: &GeometricClass, spec: &BigRingSpec) -> Result<GradedPolynomial> {
    if g.boundary_allowed {
        return Err(Error::WrongClassKind(
            "φ_N takes closed classes; use κ_N for classes with boundary".into(),
        ));
    }
    fixed_point_sum(g, spec)
}

/// `κ_N` on `N_*^G[A, P]`, computed on the tubular neighbourhood data.
pub fn kappa_n(g: &GeometricClass, spec: &BigRingSpec) -> Result<GradedPolynomial> {
    if !g.boundary_allowed {
        return Err(Error::WrongClassKind(
            "κ_N takes classes with boundary; use φ_N for closed classes".into(),
        ));
    }
    fixed_point_sum(g, spec)
}

/// `κ_N^-1` on one monomial of `MO_*[e_V^-1, Y_{d,V}]`: `e_V^-1` is the disc
/// of `V` over a point and `Y_{d,V}` the disc bundle of `E_{d-1} ⊗ V`,
/// extended multiplicatively.
pub fn kappa_n_inverse(m: &GradedPolynomial, spec: &BigRingSpec) -> Result<GeometricClass> {
    spec.check_ring(m)?;
    let mono = m.as_monomial().ok_or_else(|| {
        Error::NotInDomain(format!(
            "κ_N^-1 is defined on single monomials; split `{m}` into its terms"
        ))
    })?;
    let mut base_exps = Vec::new();
    let mut ranks: BTreeMap<Character, u32> = BTreeMap::new();
    for &(v, e) in mono.exponents() {
        match spec.kind(v) {
            VarKind::Mo(_) => base_exps.push((v, e)),
            VarKind::Euler(ch) => {
                if e > 0 {
                    return Err(Error::NotInDomain(format!(
                        "`{}` has a positive e-exponent; κ_N^-1 is defined on MO_*[e_V^-1, Y_{{d,V}}]",
                        spec.format_monomial(mono)
                    )));
                }
                *ranks.entry(spec.characters()[ch]).or_insert(0) += (-e) as u32;
            }
            VarKind::Y { d, ch } => {
                let x = spec.x_var(d - 1, ch).ok_or_else(|| Error::SpecTooSmall {
                    variable: spec.ring().variable(v).name.clone(),
                    needed: d as i64,
                })?;
                base_exps.push((x, e));
                *ranks.entry(spec.characters()[ch]).or_insert(0) += e as u32;
            }
            VarKind::X { .. } => {
                return Err(Error::WrongPresentation(
                    "κ_N^-1 expects the Y-presentation".into(),
                ))
            }
        }
    }
    let base = GradedPolynomial::from_monomial(spec.ring(), spec.monomial(base_exps)?);
    Ok(GeometricClass::new(
        mono.degree(),
        vec![FixedPointDatum::new(base, ranks)],
        true,
    ))
}

/// `φ_MO(ε_V) = e_V`.
pub fn euler_image(c: &Character, spec: &BigRingSpec) -> Result<GradedPolynomial> {
    spec.euler(c)
}

/// Standard closed examples.
pub mod examples {
    use super::*;

    /// A point with trivial action.
    pub fn point(spec: &BigRingSpec) -> GeometricClass {
        GeometricClass::new(0, vec![FixedPointDatum::new(spec.one(), [])], false)
    }

    /// `S^1` with the reflection through `V`: two fixed points, each with
    /// normal representation `V`.
    pub fn circle_with_reflection(spec: &BigRingSpec, v: &Character) -> GeometricClass {
        let comp = FixedPointDatum::new(spec.one(), [(*v, 1)]);
        GeometricClass::new(1, vec![comp.clone(), comp], false)
    }

    /// `RP^d = P(R^d ⊕ V)` with the linear action: the fixed set is
    /// `RP^{d-1}` with normal bundle `E_{d-1} ⊗ V`, plus an isolated point
    /// with normal representation `dV`.
    pub fn linear_projective_space(
        spec: &BigRingSpec,
        v: &Character,
        d: u32,
    ) -> Result<GeometricClass> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!(
                "linear RP^d is modelled for d >= 2, got {d}"
            )));
        }
        let ch = spec.char_index(v)?;
        let x = spec.x_var(d - 1, ch).ok_or_else(|| Error::SpecTooSmall {
            variable: format!("X{}@{}", d - 1, v.label()),
            needed: d as i64,
        })?;
        let hyperplane = FixedPointDatum::new(spec.var_poly(x, 1)?, [(*v, 1)]);
        let pole = FixedPointDatum::new(spec.one(), [(*v, d)]);
        Ok(GeometricClass::new(d as i64, vec![hyperplane, pole], false))
    }

    /// The disc `D(V)` over a point, a class with boundary.
    pub fn disc(spec: &BigRingSpec, v: &Character) -> GeometricClass {
        GeometricClass::new(1, vec![FixedPointDatum::new(spec.one(), [(*v, 1)])], true)
    }
}
