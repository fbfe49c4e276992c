//! The Hopf algebra `MO_*(BO) = MO_*[X_1, X_2, ...]` with
//! `Δ(X_n) = Σ_{i+j=n} X_i ⊗ X_j`, and its antipode.
//!
//! One copy of the generators exists per character (`B = BO^{×|J|}`); the
//! antipode acts on each copy independently and fixes `MO_*`, which gives
//! the involution `ν` on `MO_*(B)`. Conjugating `ν ⊗ id` through the
//! X/Y change of generators is `ι`, see [`crate::rings::BigRingSpec::iota`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::group::{self, Character};
use crate::mo;
use crate::poly::{GradedPolynomial, RingSpec, Variable};
use crate::rings::x_name;

pub const MAX_COPRODUCT_DEGREE: u32 = 64;

/// Index pairs `(i, n - i)` of `Δ(X_n) = Σ X_i ⊗ X_{n-i}`, with `X_0 = 1`.
pub fn coproduct(n: u32) -> Result<Vec<(u32, u32)>> {
    if n == 0 || n > MAX_COPRODUCT_DEGREE {
        return Err(Error::BoundExceeded(format!(
            "coproduct is tabulated for 1 <= n <= {MAX_COPRODUCT_DEGREE}, got {n}"
        )));
    }
    Ok((0..=n).map(|i| (i, n - i)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Mo,
    X { family: usize, i: u32 },
    Other,
}

fn classify(name: &str, families: &mut Vec<String>) -> Role {
    if let Some(rest) = name.strip_prefix('x') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Role::Mo;
        }
    }
    if let Some((index, label)) = name.strip_prefix('X').and_then(|r| r.split_once('@')) {
        if let Ok(i) = index.parse::<u32>() {
            if i >= 1 && Character::parse_label(label).is_ok() {
                let family = match families.iter().position(|f| f == label) {
                    Some(f) => f,
                    None => {
                        families.push(label.to_string());
                        families.len() - 1
                    }
                };
                return Role::X { family, i };
            }
        }
    }
    Role::Other
}

/// The antipode `S` on every X-family of one ring, with a per-generator cache.
///
/// Variables named `X{i}@{label}` form the families; `x{i}` are treated as
/// `MO_*` coefficients. `S(X_n)` is obtained from
/// `Σ_{i+j=n} S(X_i) X_j = 0`, i.e. `S(X_n) = Σ_{j=1}^n X_j S(X_{n-j})`.
pub struct Antipode {
    ring: Arc<RingSpec>,
    roles: Vec<Role>,
    // members[family][i - 1]
    members: Vec<Vec<Option<u32>>>,
    labels: Vec<String>,
    cache: Mutex<HashMap<(usize, u32), GradedPolynomial>>,
}

impl Antipode {
    pub fn new(ring: &Arc<RingSpec>) -> Self {
        let mut labels = Vec::new();
        let roles: Vec<Role> = ring
            .variables()
            .iter()
            .map(|v| classify(&v.name, &mut labels))
            .collect();
        let mut members = vec![Vec::new(); labels.len()];
        for (idx, role) in roles.iter().enumerate() {
            if let Role::X { family, i } = *role {
                let slot = &mut members[family];
                if slot.len() < i as usize {
                    slot.resize(i as usize, None);
                }
                slot[i as usize - 1] = Some(idx as u32);
            }
        }
        Antipode {
            ring: ring.clone(),
            roles,
            members,
            labels,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    fn generator(&self, family: usize, i: u32) -> Result<GradedPolynomial> {
        let idx = self.members[family]
            .get(i as usize - 1)
            .copied()
            .flatten()
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "ring lacks X{i}@{} needed by the antipode",
                    self.labels[family]
                ))
            })?;
        GradedPolynomial::var(&self.ring, &self.ring.variable(idx).name, 1)
    }

    /// `S(X_{n})` in the given family; `S(X_0) = 1`.
    fn of_generator(&self, family: usize, n: u32) -> Result<GradedPolynomial> {
        if n == 0 {
            return Ok(GradedPolynomial::one(&self.ring));
        }
        if let Some(hit) = self.cache.lock().unwrap().get(&(family, n)) {
            return Ok(hit.clone());
        }
        let mut acc = GradedPolynomial::zero(&self.ring);
        for j in 1..=n {
            let term = self.generator(family, j)?.mul(&self.of_generator(family, n - j)?)?;
            acc = acc.add(&term)?;
        }
        self.cache
            .lock()
            .unwrap()
            .insert((family, n), acc.clone());
        Ok(acc)
    }

    /// `S(X_n)` for the family of character `label`.
    pub fn of_x(&self, label: &str, n: u32) -> Result<GradedPolynomial> {
        let family = self
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownCharacter(label.to_string()))?;
        self.of_generator(family, n)
    }

    /// The antipode on a polynomial in a single X-family with `MO_*`
    /// coefficients.
    pub fn apply(&self, p: &GradedPolynomial) -> Result<GradedPolynomial> {
        if !crate::poly::same_ring(p.spec(), &self.ring) {
            return Err(Error::IncompatibleRing);
        }
        let mut family = None;
        for m in p.terms() {
            for &(v, _) in m.exponents() {
                match self.roles[v as usize] {
                    Role::Mo => {}
                    Role::X { family: f, .. } => match family {
                        None => family = Some(f),
                        Some(g) if g == f => {}
                        Some(g) => {
                            return Err(Error::InvalidInput(format!(
                                "antipode input mixes X-families of {} and {}",
                                self.labels[g], self.labels[f]
                            )))
                        }
                    },
                    Role::Other => {
                        return Err(Error::InvalidInput(format!(
                            "antipode input may only contain X-variables and MO_* generators, found `{}`",
                            self.ring.variable(v).name
                        )))
                    }
                }
            }
        }
        self.apply_all_families(p)
    }

    /// `S` applied to every X-family at once; all other variables are fixed.
    pub fn apply_all_families(&self, p: &GradedPolynomial) -> Result<GradedPolynomial> {
        if !crate::poly::same_ring(p.spec(), &self.ring) {
            return Err(Error::IncompatibleRing);
        }
        p.map_variables(&self.ring, |v| match self.roles[v as usize] {
            Role::X { family, i } => self.of_generator(family, i),
            _ => GradedPolynomial::var(&self.ring, &self.ring.variable(v).name, 1),
        })
    }
}

/// The ring `MO_*(B) = MO_*[X_{i,V}]` on its own.
pub struct BoSpec {
    chars: Vec<Character>,
    i_max: u32,
    ring: Arc<RingSpec>,
    antipode: Antipode,
}

impl BoSpec {
    pub fn new(l: u32, i_max: u32, mo_max: u32) -> Result<Self> {
        if i_max == 0 || i_max > MAX_COPRODUCT_DEGREE {
            return Err(Error::InvalidParameter(format!(
                "i_max must satisfy 1 <= i_max <= {MAX_COPRODUCT_DEGREE}, got {i_max}"
            )));
        }
        let chars = group::enumerate_characters(l)?;
        let mut vars: Vec<Variable> = mo::generator_degrees_up_to(mo_max)?
            .into_iter()
            .rev()
            .map(|i| Variable {
                name: mo::generator_name(i),
                degree: i as i64,
                laurent: false,
            })
            .collect();
        for c in &chars {
            for i in (1..=i_max).rev() {
                vars.push(Variable {
                    name: x_name(i, c),
                    degree: i as i64,
                    laurent: false,
                });
            }
        }
        let ring = RingSpec::new(vars)?;
        let antipode = Antipode::new(&ring);
        Ok(BoSpec {
            chars,
            i_max,
            ring,
            antipode,
        })
    }

    pub fn characters(&self) -> &[Character] {
        &self.chars
    }

    pub fn i_max(&self) -> u32 {
        self.i_max
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn antipode(&self) -> &Antipode {
        &self.antipode
    }

    /// `X_{i,V}` as a polynomial.
    pub fn x(&self, i: u32, c: &Character) -> Result<GradedPolynomial> {
        GradedPolynomial::var(&self.ring, &x_name(i, c), 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(1).unwrap(), [(0, 1), (1, 0)]);
        assert_eq!(coproduct(2).unwrap(), [(0, 2), (1, 1), (2, 0)]);
        assert_eq!(coproduct(3).unwrap().len(), 4);
        assert!(coproduct(0).is_err());
        assert!(coproduct(65).is_err());
    }

    #[test]
    fn antipode_low_degrees() {
        let bo = BoSpec::new(1, 6, 4).unwrap();
        let s = bo.antipode();
        assert_eq!(s.of_x("c1", 1).unwrap().to_text(), "X1@c1");
        assert_eq!(s.of_x("c1", 2).unwrap().to_text(), "X2@c1 + X1@c1^2");
        assert_eq!(s.of_x("c1", 3).unwrap().to_text(), "X3@c1 + X1@c1^3");
    }

    #[test]
    fn antipode_is_mo_linear_and_multiplicative() {
        let bo = BoSpec::new(1, 6, 4).unwrap();
        let p = GradedPolynomial::parse(bo.ring(), "x2*X2@c1*X1@c1 + x4").unwrap();
        let expected = GradedPolynomial::parse(bo.ring(), "x2*X2@c1*X1@c1 + x2*X1@c1^3 + x4").unwrap();
        assert_eq!(bo.antipode().apply(&p).unwrap(), expected);
        assert_eq!(bo.antipode().apply(&expected).unwrap(), p);
    }

    #[test]
    fn antipode_rejects_mixed_families() {
        let bo = BoSpec::new(2, 3, 4).unwrap();
        let p = GradedPolynomial::parse(bo.ring(), "X1@c01*X1@c10").unwrap();
        assert!(matches!(bo.antipode().apply(&p), Err(Error::InvalidInput(_))));
        // all-family version accepts it
        assert_eq!(bo.antipode().apply_all_families(&p).unwrap(), p);
    }

    #[test]
    fn antipode_missing_generator() {
        let bo = BoSpec::new(1, 2, 4).unwrap();
        let err = bo.antipode().of_x("c1", 3).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn cache_is_transparent() {
        let bo = BoSpec::new(1, 8, 4).unwrap();
        let first = bo.antipode().of_x("c1", 8).unwrap();
        let fresh = BoSpec::new(1, 8, 4).unwrap();
        assert_eq!(fresh.antipode().of_x("c1", 8).unwrap().to_text(), first.to_text());
        assert_eq!(bo.antipode().of_x("c1", 8).unwrap(), first);
    }
}
