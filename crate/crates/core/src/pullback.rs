//! Truncated graded linear algebra over `F_2` for the pullback description
//! `N_*^G ≅ ι∘φ_MO(MO_*^G) ∩ MO_*[e_V^-1, Y_{d,V}]`.
//!
//! The graded pieces of the big ring are infinite-dimensional (`e_V` has
//! negative degree), so everything here happens inside a
//! [`TruncationWindow`]: one degree, a bound on e-exponents, and a bound on
//! the number of generator factors. Verdicts are relative to that window.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{GradedPolynomial, Monomial, RingSpec};
use crate::rings::{BigRingSpec, Positivity, VarKind};

pub const DEFAULT_FRAME_CAP: u128 = 1_000_000;
pub const DEFAULT_WORD_LENGTH: u32 = 6;
/// Bound on the number of e-exponent vectors scanned while building a frame.
const MAX_E_VECTORS: u128 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationWindow {
    pub degree: i64,
    pub max_word_length: u32,
    /// Every e-exponent of a frame monomial lies in `[-e_range, e_range]`.
    pub e_range: u32,
    pub frame_cap: u128,
}

impl TruncationWindow {
    pub fn new(degree: i64, max_word_length: u32, e_range: u32) -> Self {
        TruncationWindow {
            degree,
            max_word_length,
            e_range,
            frame_cap: DEFAULT_FRAME_CAP,
        }
    }

    /// `B = |degree| + d_max`, words of length up to 6.
    pub fn default_for(degree: i64, spec: &BigRingSpec) -> Self {
        let b = degree.unsigned_abs() as u32 + spec.d_max();
        Self::new(degree, DEFAULT_WORD_LENGTH, b)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "max_word_length": self.max_word_length,
            "e_range": self.e_range,
        })
    }
}

impl fmt::Display for TruncationWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {}, words of length <= {}, e-exponents in [-{}, {}]",
            self.degree, self.max_word_length, self.e_range, self.e_range
        )
    }
}

/// A dense bit-vector packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &BitRow) -> BitRow {
        BitRow {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// A product of generators (by index, with repetition) times an `MO_*`
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub generators: Vec<usize>,
    pub coefficient: Monomial,
}

impl Word {
    /// Tokens `g1`, `g2`, ... (1-based) followed by `MO_*` factors, one token
    /// per factor.
    pub fn tokens(&self, ring: &RingSpec) -> Vec<String> {
        let mut out: Vec<String> = self.generators.iter().map(|g| format!("g{}", g + 1)).collect();
        for &(v, e) in self.coefficient.exponents() {
            for _ in 0..e {
                out.push(ring.variable(v).name.clone());
            }
        }
        out
    }

    pub fn describe(&self, ring: &RingSpec) -> String {
        let t = self.tokens(ring);
        if t.is_empty() {
            "1".into()
        } else {
            t.join("*")
        }
    }

    pub fn expand(&self, gens: &[GradedPolynomial], ring: &Arc<RingSpec>) -> Result<GradedPolynomial> {
        let mut acc = GradedPolynomial::from_monomial(ring, self.coefficient.clone());
        for &g in &self.generators {
            acc = acc.mul(&gens[g])?;
        }
        Ok(acc)
    }
}

/// Sum of the given words, expanded through the polynomial engine.
pub fn expand_combination(
    words: &[Word],
    gens: &[GradedPolynomial],
    spec: &BigRingSpec,
) -> Result<GradedPolynomial> {
    let mut acc = spec.zero();
    for w in words {
        acc = acc.add(&w.expand(gens, spec.ring())?)?;
    }
    Ok(acc)
}

fn positive_part_vars(spec: &BigRingSpec) -> Vec<(u32, i64)> {
    spec.y_presentation_vars()
        .filter(|&v| matches!(spec.kind(v), VarKind::Mo(_) | VarKind::Y { .. }))
        .map(|v| (v, spec.ring().variable(v).degree))
        .collect()
}

fn mo_vars(spec: &BigRingSpec) -> Vec<(u32, i64)> {
    spec.y_presentation_vars()
        .filter(|&v| matches!(spec.kind(v), VarKind::Mo(_)))
        .map(|v| (v, spec.ring().variable(v).degree))
        .collect()
}

/// Number of monomials of each degree `0..=max` in the given positive-degree
/// variables (saturating).
fn monomial_counts(vars: &[(u32, i64)], max: usize) -> Vec<u128> {
    let mut ways = vec![0u128; max + 1];
    ways[0] = 1;
    for &(_, d) in vars {
        let d = d as usize;
        for total in d..=max {
            ways[total] = ways[total].saturating_add(ways[total - d]);
        }
    }
    ways
}

/// All exponent vectors over `vars` of total degree `target`, appended to
/// `out` as sparse `(var, exp)` lists.
fn monomials_of_degree(vars: &[(u32, i64)], target: i64, out: &mut Vec<Vec<(u32, i64)>>) {
    fn go(
        vars: &[(u32, i64)],
        pos: usize,
        rest: i64,
        cur: &mut Vec<(u32, i64)>,
        out: &mut Vec<Vec<(u32, i64)>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if pos == vars.len() {
            return;
        }
        let (v, d) = vars[pos];
        let mut k = 0;
        while k * d <= rest {
            if k > 0 {
                cur.push((v, k));
            }
            go(vars, pos + 1, rest - k * d, cur, out);
            if k > 0 {
                cur.pop();
            }
            k += 1;
        }
    }
    if target >= 0 {
        go(vars, 0, target, &mut Vec::new(), out);
    }
}

/// Number of monomials [`monomial_frame`] would produce.
pub fn frame_size(spec: &BigRingSpec, w: &TruncationWindow) -> u128 {
    let j = spec.characters().len();
    let b = w.e_range as i64;
    // distribution of the e-exponent sum over [-b, b]^j
    let mut sums: HashMap<i64, u128> = HashMap::from([(0, 1)]);
    for _ in 0..j {
        let mut next: HashMap<i64, u128> = HashMap::new();
        for (&s, &c) in &sums {
            for k in -b..=b {
                let slot = next.entry(s + k).or_insert(0);
                *slot = slot.saturating_add(c);
            }
        }
        sums = next;
    }
    let max_d = (w.degree + j as i64 * b).max(0) as usize;
    let ways = monomial_counts(&positive_part_vars(spec), max_d);
    sums.iter()
        .filter_map(|(&s, &c)| {
            let d = w.degree + s;
            (d >= 0).then(|| c.saturating_mul(ways[d as usize]))
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// All monomials in `x_i`, `Y_{d,V}`, `e_V^{±1}` of degree `w.degree` with
/// e-exponents in `[-B, B]`, in canonical (descending) order.
pub fn monomial_frame(spec: &BigRingSpec, w: &TruncationWindow) -> Result<Vec<Monomial>> {
    let count = frame_size(spec, w);
    if count > w.frame_cap {
        return Err(Error::WindowTooLarge {
            count,
            cap: w.frame_cap,
        });
    }
    let j = spec.characters().len();
    let b = w.e_range as i64;
    let e_vectors = (2 * b as u128 + 1).checked_pow(j as u32).unwrap_or(u128::MAX);
    if e_vectors > MAX_E_VECTORS {
        return Err(Error::WindowTooLarge {
            count: e_vectors,
            cap: MAX_E_VECTORS,
        });
    }
    let pos_vars = positive_part_vars(spec);
    let mut by_degree: HashMap<i64, Vec<Vec<(u32, i64)>>> = HashMap::new();
    let mut frame = Vec::with_capacity(count as usize);
    let mut evec = vec![-b; j];
    loop {
        let s: i64 = evec.iter().sum();
        let d = w.degree + s;
        if d >= 0 {
            let pos = by_degree.entry(d).or_insert_with(|| {
                let mut v = Vec::new();
                monomials_of_degree(&pos_vars, d, &mut v);
                v
            });
            for p in pos.iter() {
                let exps = p.iter().copied().chain(
                    evec.iter()
                        .enumerate()
                        .filter(|(_, e)| **e != 0)
                        .map(|(ch, &e)| (spec.euler_var(ch), e)),
                );
                frame.push(spec.monomial(exps)?);
            }
        }
        // odometer over [-b, b]^j
        let mut k = 0;
        while k < j {
            if evec[k] < b {
                evec[k] += 1;
                break;
            }
            evec[k] = -b;
            k += 1;
        }
        if k == j {
            break;
        }
    }
    frame.sort_unstable_by(|a, b| b.cmp(a));
    Ok(frame)
}

/// A subspace of one window's coordinate space in reduced row-echelon form.
/// Each row remembers which generator words it is the sum of.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    pub window: TruncationWindow,
    pub monomials: Vec<Monomial>,
    pub vectors: Vec<BitRow>,
    ring: Arc<RingSpec>,
    index: HashMap<Monomial, usize>,
    words: Vec<Word>,
    combos: Vec<BitRow>,
}

impl GradedBasis {
    fn empty(spec: &BigRingSpec, window: TruncationWindow, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        GradedBasis {
            window,
            monomials,
            vectors: Vec::new(),
            ring: spec.ring().clone(),
            index,
            words: Vec::new(),
            combos: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.vectors.iter().map(|v| v.first_one().unwrap()).collect()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn to_polynomial(&self, v: &BitRow) -> GradedPolynomial {
        GradedPolynomial::from_terms(&self.ring, v.ones().map(|i| self.monomials[i].clone()))
    }

    pub fn polynomials(&self) -> Vec<GradedPolynomial> {
        self.vectors.iter().map(|v| self.to_polynomial(v)).collect()
    }

    /// Coordinates of `p` in the frame, or the first term outside it.
    pub fn coordinates(&self, p: &GradedPolynomial) -> std::result::Result<BitRow, Monomial> {
        let mut row = BitRow::zeros(self.monomials.len());
        for t in p.terms() {
            match self.index.get(t) {
                Some(&i) => row.set(i),
                None => return Err(t.clone()),
            }
        }
        Ok(row)
    }

    /// Words whose sum is row `i`.
    pub fn combination_of(&self, i: usize) -> Vec<Word> {
        self.combos[i].ones().map(|k| self.words[k].clone()).collect()
    }

    fn combo_width(&self) -> usize {
        self.words.len()
    }

    /// Reduce `v` against the basis; returns the residual and the words
    /// used.
    pub fn reduce(&self, v: &BitRow) -> (BitRow, BitRow) {
        let mut v = v.clone();
        let mut combo = BitRow::zeros(self.combo_width());
        for (row, c) in self.vectors.iter().zip(&self.combos) {
            if v.get(row.first_one().unwrap()) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (v, combo)
    }

    /// Insert keeping reduced row-echelon form. Returns false when `v` was
    /// already in the span.
    fn insert(&mut self, v: BitRow, mut combo: BitRow) -> bool {
        let (v, used) = self.reduce(&v);
        combo.xor_assign(&used);
        let Some(pivot) = v.first_one() else {
            return false;
        };
        for (row, c) in self.vectors.iter_mut().zip(self.combos.iter_mut()) {
            if row.get(pivot) {
                row.xor_assign(&v);
                c.xor_assign(&combo);
            }
        }
        let at = self
            .vectors
            .partition_point(|r| r.first_one().unwrap() < pivot);
        self.vectors.insert(at, v);
        self.combos.insert(at, combo);
        true
    }

    /// Re-reduce every row; the identity on a basis already in normal form.
    pub fn rereduce(&self) -> GradedBasis {
        let mut out = self.clone();
        out.vectors.clear();
        out.combos.clear();
        for (v, c) in self.vectors.iter().zip(&self.combos) {
            out.insert(v.clone(), c.clone());
        }
        out
    }

    /// True when rows are independent with strictly increasing pivots and
    /// each pivot column is clear in all other rows.
    pub fn is_reduced(&self) -> bool {
        let pivots: Vec<Option<usize>> = self.vectors.iter().map(BitRow::first_one).collect();
        if pivots.iter().any(Option::is_none) {
            return false;
        }
        let pivots: Vec<usize> = pivots.into_iter().flatten().collect();
        pivots.windows(2).all(|w| w[0] < w[1])
            && self.vectors.iter().enumerate().all(|(i, row)| {
                pivots
                    .iter()
                    .enumerate()
                    .all(|(k, &p)| k == i || !row.get(p))
            })
    }
}

fn check_generators(gens: &[GradedPolynomial], spec: &BigRingSpec) -> Result<()> {
    for (k, g) in gens.iter().enumerate() {
        spec.check_ring(g)?;
        if spec.has_x_variables(g) {
            return Err(Error::WrongPresentation(format!(
                "generator g{} uses X-variables; pass it in the Y-presentation",
                k + 1
            )));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("generator g{} = {g}", k + 1)));
        }
    }
    Ok(())
}

/// The `F_2`-span, in degree `w.degree`, of all products of at most
/// `w.max_word_length` generators times `MO_*` monomials.
pub fn subalgebra_span(
    gens: &[GradedPolynomial],
    spec: &BigRingSpec,
    w: &TruncationWindow,
) -> Result<GradedBasis> {
    check_generators(gens, spec)?;
    let frame = monomial_frame(spec, w)?;
    let mut basis = GradedBasis::empty(spec, *w, frame);

    let live: Vec<(usize, i64)> = gens
        .iter()
        .enumerate()
        .filter_map(|(k, g)| g.homogeneous_degree().map(|d| (k, d)))
        .collect();
    let mo = mo_vars(spec);
    let mut mo_by_degree: HashMap<i64, Vec<Monomial>> = HashMap::new();

    // words as nondecreasing index sequences, with running products
    let mut products: Vec<(Word, GradedPolynomial)> = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize, i64, GradedPolynomial)> =
        vec![(Vec::new(), 0, 0, spec.one())];
    while let Some((word, start, deg, prod)) = stack.pop() {
        let rest = w.degree - deg;
        if rest >= 0 {
            let coeffs = mo_by_degree.entry(rest).or_insert_with(|| {
                let mut v = Vec::new();
                monomials_of_degree(&mo, rest, &mut v);
                v.into_iter()
                    .map(|e| spec.monomial(e).expect("admissible MO monomial"))
                    .collect()
            });
            for c in coeffs.iter() {
                products.push((
                    Word {
                        generators: word.clone(),
                        coefficient: c.clone(),
                    },
                    prod.mul_monomial(c)?,
                ));
            }
        }
        if word.len() < w.max_word_length as usize {
            for (pos, &(k, d)) in live.iter().enumerate().skip(start).rev() {
                let mut next = word.clone();
                next.push(k);
                stack.push((next, pos, deg + d, prod.mul(&gens[k])?));
            }
        }
    }
    // deterministic order independent of stack discipline
    products.sort_by(|a, b| {
        (a.0.generators.len(), &a.0.generators)
            .cmp(&(b.0.generators.len(), &b.0.generators))
            .then_with(|| b.0.coefficient.cmp(&a.0.coefficient))
    });

    let n = products.len();
    basis.words = products.iter().map(|(w, _)| w.clone()).collect();
    for (k, (word, p)) in products.iter().enumerate() {
        let row = basis.coordinates(p).map_err(|t| Error::WindowEscape {
            product: word.describe(spec.ring()),
            term: spec.format_monomial(&t),
        })?;
        let mut combo = BitRow::zeros(n);
        combo.set(k);
        basis.insert(row, combo);
    }
    Ok(basis)
}

/// The subspace of `basis` supported on e-nonpositive monomials.
pub fn intersect_positive(basis: &GradedBasis, spec: &BigRingSpec) -> GradedBasis {
    let mut mask = BitRow::zeros(basis.monomials.len());
    for (i, m) in basis.monomials.iter().enumerate() {
        if !spec.monomial_is_nonpositive(m) {
            mask.set(i);
        }
    }
    // eliminate on the e-positive coordinates only
    let mut pivots: Vec<(usize, BitRow, BitRow, BitRow)> = Vec::new();
    let mut kernel: Vec<(BitRow, BitRow)> = Vec::new();
    for (v, c) in basis.vectors.iter().zip(&basis.combos) {
        let (mut part, mut full, mut combo) = (v.and(&mask), v.clone(), c.clone());
        for (p, ppart, pfull, pcombo) in &pivots {
            if part.get(*p) {
                part.xor_assign(ppart);
                full.xor_assign(pfull);
                combo.xor_assign(pcombo);
            }
        }
        match part.first_one() {
            None => kernel.push((full, combo)),
            Some(p) => {
                for (_, qpart, qfull, qcombo) in pivots.iter_mut() {
                    if qpart.get(p) {
                        qpart.xor_assign(&part);
                        qfull.xor_assign(&full);
                        qcombo.xor_assign(&combo);
                    }
                }
                pivots.push((p, part, full, combo));
            }
        }
    }
    let mut out = basis.clone();
    out.vectors.clear();
    out.combos.clear();
    for (v, c) in kernel {
        out.insert(v, c);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonMemberReason {
    NotInSpan,
    NotENonpositive,
}

impl NonMemberReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NonMemberReason::NotInSpan => "not-in-span",
            NonMemberReason::NotENonpositive => "not-e-nonpositive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Member {
        combination: Vec<Word>,
    },
    NonMember {
        reason: NonMemberReason,
        witness: Option<Monomial>,
    },
}

#[derive(Debug, Clone)]
pub struct PullbackReport {
    pub verdict: Verdict,
    pub window: TruncationWindow,
    ring: Arc<RingSpec>,
}

impl PullbackReport {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, Verdict::Member { .. })
    }

    pub fn caveat(&self) -> Option<String> {
        match self.verdict {
            Verdict::Member { .. } => None,
            Verdict::NonMember { .. } => Some(format!(
                "verdict is relative to the truncated span ({}), not the full subalgebra",
                self.window
            )),
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.verdict {
            Verdict::Member { combination } => json!({
                "verdict": "member",
                "combination": combination.iter().map(|w| w.tokens(&self.ring)).collect::<Vec<_>>(),
                "window": self.window.to_json(),
            }),
            Verdict::NonMember { reason, witness } => {
                let mut v = json!({
                    "verdict": "non-member",
                    "reason": reason.as_str(),
                });
                if let Some(m) = witness {
                    v["witness"] = Value::from(crate::poly::format_monomial(&self.ring, m));
                }
                v["caveat"] = Value::from(self.caveat().unwrap_or_default());
                v["window"] = self.window.to_json();
                v
            }
        }
    }

    pub fn to_text(&self) -> String {
        match &self.verdict {
            Verdict::Member { combination } => {
                let words: Vec<String> = combination.iter().map(|w| w.describe(&self.ring)).collect();
                let sum = if words.is_empty() { "0".to_string() } else { words.join(" + ") };
                format!("member\ncombination: {sum}")
            }
            Verdict::NonMember { reason, witness } => {
                let mut s = format!("non-member: {}", reason.as_str());
                if let Some(m) = witness {
                    s.push_str(&format!("\nwitness: {}", crate::poly::format_monomial(&self.ring, m)));
                }
                s.push_str(&format!("\nnote: {}", self.caveat().unwrap_or_default()));
                s
            }
        }
    }
}

/// Decide `x ∈ span(gens) ∩ MO_*[e_V^-1, Y_{d,V}]` inside the window.
pub fn pullback_report(
    x: &GradedPolynomial,
    gens: &[GradedPolynomial],
    spec: &BigRingSpec,
    w: &TruncationWindow,
) -> Result<PullbackReport> {
    spec.check_ring(x)?;
    if let Some(d) = x.homogeneous_degree() {
        if d != w.degree {
            return Err(Error::NotHomogeneous(format!(
                "query has degree {d} but the window is in degree {}",
                w.degree
            )));
        }
    } else if !x.is_zero() {
        return Err(Error::NotHomogeneous(format!("query {x}")));
    }
    let report = |verdict| PullbackReport {
        verdict,
        window: *w,
        ring: spec.ring().clone(),
    };
    if let Positivity::NotPositive { witness } = spec.is_in_positive_part(x)? {
        return Ok(report(Verdict::NonMember {
            reason: NonMemberReason::NotENonpositive,
            witness: Some(witness),
        }));
    }
    let basis = subalgebra_span(gens, spec, w)?;
    let coords = match basis.coordinates(x) {
        Ok(c) => c,
        Err(outside) => {
            return Ok(report(Verdict::NonMember {
                reason: NonMemberReason::NotInSpan,
                witness: Some(outside),
            }))
        }
    };
    let (residual, combo) = basis.reduce(&coords);
    if !residual.is_zero() {
        return Ok(report(Verdict::NonMember {
            reason: NonMemberReason::NotInSpan,
            witness: None,
        }));
    }
    let combination: Vec<Word> = combo.ones().map(|k| basis.words[k].clone()).collect();
    debug_assert_eq!(&expand_combination(&combination, gens, spec)?, x);
    Ok(report(Verdict::Member { combination }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d_max: u32) -> BigRingSpec {
        BigRingSpec::new(1, d_max, 4).unwrap()
    }

    fn texts(frame: &[Monomial], s: &BigRingSpec) -> Vec<String> {
        frame.iter().map(|m| s.format_monomial(m)).collect()
    }

    #[test]
    fn bitrow_basics() {
        let mut r = BitRow::zeros(130);
        assert!(r.is_zero() && r.first_one().is_none());
        r.set(129);
        r.set(3);
        assert_eq!(r.first_one(), Some(3));
        assert_eq!(r.ones().collect::<Vec<_>>(), [3, 129]);
        r.flip(3);
        assert_eq!(r.first_one(), Some(129));
    }

    #[test]
    fn frame_degree_zero_contains_one() {
        let s = spec(2);
        let w = TruncationWindow::new(0, 2, 1);
        let f = monomial_frame(&s, &w).unwrap();
        assert!(f.iter().any(Monomial::is_one));
    }

    #[test]
    fn frame_degree_one() {
        let s = BigRingSpec::new(1, 2, 2).unwrap();
        let w = TruncationWindow::new(1, 2, 1);
        let f = texts(&monomial_frame(&s, &w).unwrap(), &s);
        assert_eq!(f, ["x2*e@c1", "Y2@c1*e@c1", "e@c1^-1"]);
    }

    #[test]
    fn frame_cap() {
        let s = BigRingSpec::new(2, 8, 12).unwrap();
        let mut w = TruncationWindow::new(5, 6, 13);
        w.frame_cap = 1000;
        assert!(matches!(monomial_frame(&s, &w), Err(Error::WindowTooLarge { .. })));
    }

    #[test]
    fn span_of_powers() {
        let s = spec(3);
        let e = s.parse("e@c1").unwrap();
        let b = subalgebra_span(std::slice::from_ref(&e), &s, &TruncationWindow::new(-2, 2, 2)).unwrap();
        assert_eq!(b.dimension(), 1);
        assert_eq!(b.polynomials()[0].to_text(), "e@c1^2");
        assert!(b.is_reduced());
    }

    #[test]
    fn empty_generators_give_mo_multiples() {
        let s = spec(3);
        for (deg, dim) in [(0, 1), (1, 0), (2, 1), (3, 0), (4, 2)] {
            let b = subalgebra_span(&[], &s, &TruncationWindow::new(deg, 0, 1)).unwrap();
            assert_eq!(b.dimension(), dim, "degree {deg}");
        }
    }

    #[test]
    fn intersection_examples() {
        let s = spec(4);
        let w = TruncationWindow::new(-1, 1, 2);
        let b = subalgebra_span(&[s.parse("e@c1").unwrap()], &s, &w).unwrap();
        assert_eq!(b.dimension(), 1);
        assert_eq!(intersect_positive(&b, &s).dimension(), 0);

        let w = TruncationWindow::new(3, 1, 4);
        let g = s.parse("Y3@c1 + e@c1^-3").unwrap();
        let b = subalgebra_span(std::slice::from_ref(&g), &s, &TruncationWindow { max_word_length: 1, ..w })
            .unwrap();
        let inter = intersect_positive(&b, &s);
        assert!(inter.polynomials().contains(&g));

        let gens = [
            s.parse("Y3@c1 + Y2@c1^2*e@c1").unwrap(),
            s.parse("Y2@c1^2*e@c1").unwrap(),
        ];
        let b = subalgebra_span(&gens, &s, &TruncationWindow::new(3, 1, 4)).unwrap();
        assert_eq!(b.dimension(), 2);
        let inter = intersect_positive(&b, &s);
        assert_eq!(inter.dimension(), 1);
        assert_eq!(inter.polynomials()[0].to_text(), "Y3@c1");
        assert_eq!(inter.combination_of(0).len(), 2);
    }

    #[test]
    fn report_examples() {
        let s = spec(4);
        let e = s.parse("e@c1").unwrap();
        let r = pullback_report(&e, std::slice::from_ref(&e), &s, &TruncationWindow::new(-1, 2, 3)).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::NonMember {
                reason: NonMemberReason::NotENonpositive,
                witness: Some(e.terms()[0].clone())
            }
        );
        assert!(r.caveat().is_some());

        let gens = [
            s.parse("Y3@c1 + Y2@c1^2*e@c1").unwrap(),
            s.parse("Y2@c1^2*e@c1").unwrap(),
        ];
        let y3 = s.parse("Y3@c1").unwrap();
        let r = pullback_report(&y3, &gens, &s, &TruncationWindow::new(3, 1, 4)).unwrap();
        let Verdict::Member { combination } = &r.verdict else {
            panic!("{:?}", r.verdict)
        };
        assert_eq!(expand_combination(combination, &gens, &s).unwrap(), y3);
        assert_eq!(
            r.to_json()["combination"],
            serde_json::json!([["g1"], ["g2"]])
        );

        let r = pullback_report(&s.parse("Y2@c1").unwrap(), &gens, &s, &TruncationWindow::new(2, 1, 4))
            .unwrap();
        assert!(!r.is_member());
    }

    #[test]
    fn window_escape() {
        let s = spec(4);
        let g = s.parse("Y2@c1 + e@c1^-2").unwrap();
        let err = subalgebra_span(&[g], &s, &TruncationWindow::new(4, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::WindowEscape { .. }), "{err:?}");
    }

    #[test]
    fn report_rejects_wrong_degree() {
        let s = spec(4);
        let y = s.parse("Y3@c1").unwrap();
        assert!(matches!(
            pullback_report(&y, &[], &s, &TruncationWindow::new(2, 1, 2)),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
