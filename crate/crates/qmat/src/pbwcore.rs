//! Generic engine for presented algebras with ordered PBW bases.
//!
//! A [`Presentation`] is a finite ordered list of generators together with one
//! q-commutation rewrite rule per unordered pair, each rule of the form
//! `high*low = swap * low*high + corrections` with homogeneous, already-ordered
//! correction monomials. Elements are linear combinations of ordered monomials
//! with [`LaurentInt`] coefficients; [`Presentation::multiply`] and
//! [`Presentation::normal_form`] rewrite arbitrary words into that basis.
//!
//! Quotients by admissible generator sets, localization at q-normal
//! generators, tensor products and generator-image homomorphisms are all
//! expressed as operations producing new presentations or elements.

use crate::error::{Error, Result};
use crate::qcoeff::LaurentInt;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

pub type GenId = usize;

/// Display label of a generator: a family name plus a 1-based matrix position,
/// rendered as e.g. `X[1,2]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GenLabel {
    pub family: String,
    pub row: u32,
    pub col: u32,
}

impl GenLabel {
    pub fn new(family: &str, row: u32, col: u32) -> Self {
        GenLabel {
            family: family.to_string(),
            row,
            col,
        }
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.family, self.row, self.col)
    }
}

/// Multidegree under the standard torus grading; coordinates are signed so
/// that inverted generators can contribute negatively.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(rank: usize) -> Self {
        DegreeVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        DegreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        DegreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scaled(&self, k: i64) -> Self {
        DegreeVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|a| *a >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| *a == 0)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorInfo {
    pub label: GenLabel,
    pub invertible: bool,
    pub degree: DegreeVector,
}

/// Ordered monomial: exponent list sorted by generator position, zero
/// exponents never stored. Negative exponents are legal only on invertible
/// generators (enforced where words enter the engine).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<(GenId, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn gen(g: GenId) -> Self {
        Monomial { exps: vec![(g, 1)] }
    }

    pub fn gen_pow(g: GenId, e: i64) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial { exps: vec![(g, e)] }
        }
    }

    /// Canonicalize an arbitrary exponent list (sort, merge, drop zeros).
    pub fn from_exps(exps: impl IntoIterator<Item = (GenId, i64)>) -> Self {
        let mut map: BTreeMap<GenId, i64> = BTreeMap::new();
        for (g, e) in exps {
            *map.entry(g).or_insert(0) += e;
        }
        Monomial {
            exps: map.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    pub fn exps(&self) -> &[(GenId, i64)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent_of(&self, g: GenId) -> i64 {
        self.exps
            .iter()
            .find(|(h, _)| *h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Sum of absolute exponents (letter count).
    pub fn length(&self) -> i64 {
        self.exps.iter().map(|(_, e)| e.abs()).sum()
    }

    pub fn contains_any(&self, set: &BTreeSet<GenId>) -> bool {
        self.exps.iter().any(|(g, _)| set.contains(g))
    }

    fn remapped(&self, map: impl Fn(GenId) -> GenId) -> Self {
        Monomial::from_exps(self.exps.iter().map(|(g, e)| (map(*g), *e)))
    }
}

impl Ord for Monomial {
    /// Position-lexicographic order on dense exponent vectors: at the first
    /// generator position where the exponents differ, the larger exponent
    /// wins. This is the order used for canonical descending serialization.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut i = 0;
        let mut j = 0;
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(&(g, e)), None) => {
                    // other has exponent 0 at position g
                    let _ = g;
                    return e.cmp(&0);
                }
                (None, Some(&(h, f))) => {
                    let _ = h;
                    return 0.cmp(&f);
                }
                (Some(&(g, e)), Some(&(h, f))) => {
                    if g < h {
                        // other is 0 at position g
                        match e.cmp(&0) {
                            std::cmp::Ordering::Equal => i += 1,
                            ord => return ord,
                        }
                    } else if h < g {
                        match 0.cmp(&f) {
                            std::cmp::Ordering::Equal => j += 1,
                            ord => return ord,
                        }
                    } else {
                        match e.cmp(&f) {
                            std::cmp::Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            ord => return ord,
                        }
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite linear combination of ordered monomials; the universal value type.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, LaurentInt>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::scalar(LaurentInt::one())
    }

    pub fn scalar(c: LaurentInt) -> Self {
        Element::term(c, Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Element::term(LaurentInt::one(), m)
    }

    pub fn term(c: LaurentInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &LaurentInt)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (canonical serialization order).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Monomial, &LaurentInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> LaurentInt {
        self.terms.get(m).cloned().unwrap_or_else(LaurentInt::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, c: &LaurentInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(m)
            .or_insert_with(LaurentInt::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            // re-borrow to remove; key no longer available, so scan
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c, m.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    fn remapped(&self, map: impl Fn(GenId) -> GenId + Copy) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remapped(map), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[")?;
        for (i, (m, c)) in self.iter_desc().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){:?}", c, m.exps())?;
        }
        write!(f, "]")
    }
}

/// One rewrite rule per unordered generator pair `{low, high}` with
/// `low < high` in the generator order:
/// `high*low = swap * low*high + sum corrections`.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub swap: LaurentInt,
    pub corrections: Vec<(LaurentInt, Monomial)>,
}

impl RewriteRule {
    pub fn commuting() -> Self {
        RewriteRule {
            swap: LaurentInt::one(),
            corrections: Vec::new(),
        }
    }

    pub fn scalar(swap: LaurentInt) -> Self {
        RewriteRule {
            swap,
            corrections: Vec::new(),
        }
    }
}

/// Reduction strategy used when picking which out-of-order adjacent pair to
/// rewrite next. Normal forms are strategy-independent (the confluence suite
/// checks this); the engine default is [`Strategy::RightmostDescent`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    LeftmostDescent,
    RightmostDescent,
}

type Letter = (GenId, i8);

#[derive(Clone)]
pub struct Presentation {
    gens: Vec<GeneratorInfo>,
    /// Triangular pair index: rule for (lo, hi), lo < hi, at hi*(hi-1)/2 + lo.
    rules: Vec<RewriteRule>,
    grading_rank: usize,
}

fn pair_index(lo: GenId, hi: GenId) -> usize {
    debug_assert!(lo < hi);
    hi * (hi - 1) / 2 + lo
}

impl Presentation {
    /// Build a presentation, checking that every rule is homogeneous and that
    /// correction monomials are ordered words of length at most 2.
    pub fn new(
        gens: Vec<GeneratorInfo>,
        grading_rank: usize,
        mut rule_for: impl FnMut(GenId, GenId) -> RewriteRule,
    ) -> Result<Self> {
        let n = gens.len();
        let mut rules = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for hi in 0..n {
            for lo in 0..hi {
                rules.push(rule_for(lo, hi));
            }
        }
        let p = Presentation {
            gens,
            rules,
            grading_rank,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        for g in &self.gens {
            assert_eq!(
                g.degree.rank(),
                self.grading_rank,
                "generator degree rank mismatch"
            );
        }
        for hi in 0..self.gens.len() {
            for lo in 0..hi {
                let rule = &self.rules[pair_index(lo, hi)];
                let lhs_deg = self.gens[lo].degree.add(&self.gens[hi].degree);
                for (_, m) in &rule.corrections {
                    assert!(m.length() <= 2, "correction word longer than 2");
                    assert!(
                        m.exps().iter().all(|(_, e)| *e > 0),
                        "correction with non-positive exponent"
                    );
                    if self.monomial_degree(m) != lhs_deg {
                        return Err(Error::NotHomogeneous);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_info(&self, g: GenId) -> &GeneratorInfo {
        &self.gens[g]
    }

    pub fn gens(&self) -> &[GeneratorInfo] {
        &self.gens
    }

    pub fn grading_rank(&self) -> usize {
        self.grading_rank
    }

    pub fn rule(&self, lo: GenId, hi: GenId) -> &RewriteRule {
        &self.rules[pair_index(lo, hi)]
    }

    pub fn find_gen(&self, label: &GenLabel) -> Option<GenId> {
        self.gens.iter().position(|g| g.label == *label)
    }

    pub fn find_gen_named(&self, family: &str, row: u32, col: u32) -> Option<GenId> {
        self.find_gen(&GenLabel::new(family, row, col))
    }

    pub fn has_invertible(&self) -> bool {
        self.gens.iter().any(|g| g.invertible)
    }

    pub fn has_corrections(&self) -> Option<(GenId, GenId)> {
        for hi in 0..self.gens.len() {
            for lo in 0..hi {
                if !self.rules[pair_index(lo, hi)].corrections.is_empty() {
                    return Some((lo, hi));
                }
            }
        }
        None
    }

    fn label(&self, g: GenId) -> String {
        self.gens[g].label.to_string()
    }

    // ---- normal forms -------------------------------------------------

    fn expand_into(&self, letters: &mut Vec<Letter>, g: GenId, e: i64) {
        let sign: i8 = if e >= 0 { 1 } else { -1 };
        for _ in 0..e.abs() {
            letters.push((g, sign));
        }
    }

    fn letters_of_monomial(&self, m: &Monomial) -> Vec<Letter> {
        let mut out = Vec::with_capacity(m.length() as usize);
        for (g, e) in m.exps() {
            self.expand_into(&mut out, *g, *e);
        }
        out
    }

    fn letters_of_word(&self, word: &[(GenId, i64)]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for (g, e) in word {
            if *g >= self.gens.len() {
                return Err(Error::UnknownGenerator(format!("#{}", g)));
            }
            if *e < 0 && !self.gens[*g].invertible {
                return Err(Error::NegativePowerOfNonInvertible(self.label(*g)));
            }
            self.expand_into(&mut out, *g, *e);
        }
        Ok(out)
    }

    fn find_descent(&self, w: &[Letter], strategy: Strategy) -> Option<usize> {
        let scan = |i: usize| w[i].0 > w[i + 1].0;
        if w.len() < 2 {
            return None;
        }
        match strategy {
            Strategy::LeftmostDescent => (0..w.len() - 1).find(|&i| scan(i)),
            Strategy::RightmostDescent => (0..w.len() - 1).rev().find(|&i| scan(i)),
        }
    }

    fn reduce_letters(
        &self,
        coeff: LaurentInt,
        letters: Vec<Letter>,
        strategy: Strategy,
        acc: &mut Element,
    ) {
        let mut stack: Vec<(LaurentInt, Vec<Letter>)> = vec![(coeff, letters)];
        while let Some((c, w)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            match self.find_descent(&w, strategy) {
                None => {
                    // canonical: merge adjacent equal generators
                    let m = Monomial::from_exps(
                        w.iter().map(|(g, s)| (*g, *s as i64)),
                    );
                    acc.add_term(&c, m);
                }
                Some(i) => {
                    let (g_hi, s1) = w[i];
                    let (g_lo, s2) = w[i + 1];
                    let rule = self.rule(g_lo, g_hi);
                    let swap = if s1 == s2 {
                        rule.swap.clone()
                    } else {
                        rule.swap.try_unit_inverse().expect(
                            "rule touching an invertible generator must have unit swap scalar",
                        )
                    };
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    stack.push((c.mul(&swap), swapped));
                    if s1 > 0 && s2 > 0 {
                        for (ck, mono) in &rule.corrections {
                            let mut neww = Vec::with_capacity(w.len());
                            neww.extend_from_slice(&w[..i]);
                            neww.extend(self.letters_of_monomial(mono));
                            neww.extend_from_slice(&w[i + 2..]);
                            stack.push((c.mul(ck), neww));
                        }
                    } else {
                        debug_assert!(
                            rule.corrections.is_empty(),
                            "inverse letter met a rule with corrections"
                        );
                    }
                }
            }
        }
    }

    /// Normal form of a formal linear combination of words.
    pub fn normal_form(
        &self,
        words: &[(LaurentInt, Vec<(GenId, i64)>)],
    ) -> Result<Element> {
        self.normal_form_with_strategy(words, Strategy::RightmostDescent)
    }

    pub fn normal_form_with_strategy(
        &self,
        words: &[(LaurentInt, Vec<(GenId, i64)>)],
        strategy: Strategy,
    ) -> Result<Element> {
        let mut acc = Element::zero();
        for (c, word) in words {
            let letters = self.letters_of_word(word)?;
            self.reduce_letters(c.clone(), letters, strategy, &mut acc);
        }
        Ok(acc)
    }

    /// Product of elements already in normal form.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut acc = Element::zero();
        for (m1, c1) in a.iter() {
            for (m2, c2) in b.iter() {
                let mut letters = self.letters_of_monomial(m1);
                letters.extend(self.letters_of_monomial(m2));
                self.reduce_letters(c1.mul(c2), letters, Strategy::RightmostDescent, &mut acc);
            }
        }
        acc
    }

    pub fn multiply_all(&self, factors: &[Element]) -> Element {
        let mut acc = Element::one();
        for f in factors {
            acc = self.multiply(&acc, f);
        }
        acc
    }

    /// Commutator check helper: `a*b == b*a`.
    pub fn commutes(&self, a: &Element, b: &Element) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    // ---- grading -------------------------------------------------------

    pub fn monomial_degree(&self, m: &Monomial) -> DegreeVector {
        let mut d = DegreeVector::zero(self.grading_rank);
        for (g, e) in m.exps() {
            d = d.add(&self.gens[*g].degree.scaled(*e));
        }
        d
    }

    /// Common multidegree of all terms, `Zero` for the zero element, or
    /// `Inhomogeneous` when two terms disagree.
    pub fn multidegree(&self, x: &Element) -> Homogeneity {
        let mut it = x.iter();
        let first = match it.next() {
            None => return Homogeneity::Zero,
            Some((m, _)) => self.monomial_degree(m),
        };
        for (m, _) in it {
            if self.monomial_degree(m) != first {
                return Homogeneity::Inhomogeneous;
            }
        }
        Homogeneity::Homogeneous(first)
    }

    // ---- quotients, localization, tensor -------------------------------

    /// Quotient by the two-sided ideal generated by a set of generators.
    /// Succeeds only for admissible kill sets: in every rule with a killed
    /// member, each correction monomial must contain a killed generator, so
    /// that the surviving ordered monomials form a basis of the quotient.
    /// Returns the survivor presentation and the old-to-new id map.
    pub fn quotient(
        &self,
        kill: &BTreeSet<GenId>,
    ) -> Result<(Presentation, Vec<Option<GenId>>)> {
        for &g in kill {
            if self.gens[g].invertible {
                return Err(Error::KillInvertible(self.label(g)));
            }
        }
        for hi in 0..self.gens.len() {
            for lo in 0..hi {
                if !(kill.contains(&lo) || kill.contains(&hi)) {
                    continue;
                }
                let rule = self.rule(lo, hi);
                for (_, m) in &rule.corrections {
                    if !m.contains_any(kill) {
                        return Err(Error::NonAdmissibleKillSet {
                            low: self.label(lo),
                            high: self.label(hi),
                            correction: m
                                .exps()
                                .iter()
                                .map(|(g, e)| {
                                    if *e == 1 {
                                        self.label(*g)
                                    } else {
                                        format!("{}^{}", self.label(*g), e)
                                    }
                                })
                                .collect::<Vec<_>>()
                                .join("*"),
                        });
                    }
                }
            }
        }
        let mut map: Vec<Option<GenId>> = vec![None; self.gens.len()];
        let mut survivors = Vec::new();
        for (old, info) in self.gens.iter().enumerate() {
            if !kill.contains(&old) {
                map[old] = Some(survivors.len());
                survivors.push(info.clone());
            }
        }
        let old_ids: Vec<GenId> = (0..self.gens.len())
            .filter(|g| !kill.contains(g))
            .collect();
        let remap = |g: GenId| map[g].expect("correction referencing killed generator");
        let p = Presentation::new(survivors, self.grading_rank, |lo, hi| {
            let (olo, ohi) = (old_ids[lo], old_ids[hi]);
            let rule = self.rule(olo, ohi);
            RewriteRule {
                swap: rule.swap.clone(),
                corrections: rule
                    .corrections
                    .iter()
                    .filter(|(_, m)| !m.contains_any(kill))
                    .map(|(c, m)| (c.clone(), m.remapped(remap)))
                    .collect(),
            }
        })?;
        Ok((p, map))
    }

    /// Mark generators invertible after verifying q-normality: every rule
    /// touching them must be correction-free with a unit swap scalar.
    pub fn localize(&self, invert: &BTreeSet<GenId>) -> Result<Presentation> {
        for &g in invert {
            for other in 0..self.gens.len() {
                if other == g {
                    continue;
                }
                let (lo, hi) = if other < g { (other, g) } else { (g, other) };
                let rule = self.rule(lo, hi);
                if !rule.corrections.is_empty() {
                    return Err(Error::NotQNormal {
                        generator: self.label(g),
                        other: self.label(other),
                        reason: "has correction terms".into(),
                    });
                }
                if rule.swap.try_unit_inverse().is_none() {
                    return Err(Error::NotQNormal {
                        generator: self.label(g),
                        other: self.label(other),
                        reason: "has a non-unit swap scalar".into(),
                    });
                }
            }
        }
        let mut p = self.clone();
        for &g in invert {
            p.gens[g].invertible = true;
        }
        Ok(p)
    }

    /// Relabel generators (pure renaming, no structural change).
    pub fn relabeled(&self, f: impl Fn(&GenLabel) -> GenLabel) -> Presentation {
        let mut p = self.clone();
        for g in &mut p.gens {
            g.label = f(&g.label);
        }
        p
    }

    /// Tensor product: left generators first, then right; cross pairs commute
    /// exactly; grading ranks add. On a label collision the left copies get
    /// family suffix `l` and the right copies `r`.
    pub fn tensor(&self, right: &Presentation) -> Presentation {
        let collide = self.gens.iter().any(|a| {
            right
                .gens
                .iter()
                .any(|b| a.label == b.label)
        });
        let rank = self.grading_rank + right.grading_rank;
        let mut gens = Vec::with_capacity(self.gens.len() + right.gens.len());
        for g in &self.gens {
            let mut label = g.label.clone();
            if collide {
                label.family = format!("{}l", label.family);
            }
            let mut deg = g.degree.0.clone();
            deg.extend(std::iter::repeat(0).take(right.grading_rank));
            gens.push(GeneratorInfo {
                label,
                invertible: g.invertible,
                degree: DegreeVector(deg),
            });
        }
        for g in &right.gens {
            let mut label = g.label.clone();
            if collide {
                label.family = format!("{}r", label.family);
            }
            let mut deg = vec![0; self.grading_rank];
            deg.extend(g.degree.0.iter().copied());
            gens.push(GeneratorInfo {
                label,
                invertible: g.invertible,
                degree: DegreeVector(deg),
            });
        }
        let off = self.gens.len();
        Presentation::new(gens, rank, |lo, hi| {
            if hi < off {
                self.rule(lo, hi).clone()
            } else if lo >= off {
                let rule = right.rule(lo - off, hi - off);
                RewriteRule {
                    swap: rule.swap.clone(),
                    corrections: rule
                        .corrections
                        .iter()
                        .map(|(c, m)| (c.clone(), m.remapped(|g| g + off)))
                        .collect(),
                }
            } else {
                RewriteRule::commuting()
            }
        })
        .expect("tensor of homogeneous presentations is homogeneous")
    }

    /// Embed an element of the left factor into the tensor (identity on ids).
    pub fn embed_left(&self, x: &Element) -> Element {
        x.clone()
    }

    /// Embed an element of the right factor into a tensor whose left factor
    /// has `left_count` generators.
    pub fn embed_right(x: &Element, left_count: usize) -> Element {
        x.remapped(|g| g + left_count)
    }

    // ---- homomorphisms --------------------------------------------------

    fn invert_unit_element(dst: &Presentation, x: &Element, who: &GenLabel) -> Result<Element> {
        if x.num_terms() != 1 {
            return Err(Error::NonUnitImage(who.to_string()));
        }
        let (m, c) = x.iter().next().unwrap();
        let cinv = c
            .try_unit_inverse()
            .ok_or_else(|| Error::NonUnitImage(who.to_string()))?;
        if m.exps().iter().any(|(g, _)| !dst.gens()[*g].invertible) {
            return Err(Error::NonUnitImage(who.to_string()));
        }
        let minv = Monomial::from_exps(m.exps().iter().map(|(g, e)| (*g, -e)));
        Ok(Element::term(cinv, minv))
    }

    /// Multiplicative extension of a generator-image map, evaluated in `dst`
    /// and normalized. Images are required for every generator appearing in
    /// `x`; a negative exponent requires its generator's image to be a unit
    /// monomial.
    pub fn apply_hom(
        &self,
        dst: &Presentation,
        images: &HashMap<GenId, Element>,
        x: &Element,
    ) -> Result<Element> {
        let mut out = Element::zero();
        for (m, c) in x.iter() {
            let mut prod = Element::scalar(c.clone());
            for (g, e) in m.exps() {
                let img = images
                    .get(g)
                    .ok_or_else(|| Error::MissingImage(self.label(*g)))?;
                let factor = if *e >= 0 {
                    img.clone()
                } else {
                    Self::invert_unit_element(dst, img, &self.gens[*g].label)?
                };
                for _ in 0..e.abs() {
                    prod = dst.multiply(&prod, &factor);
                }
            }
            out = out.add(&prod);
        }
        Ok(out)
    }

    /// Validation mode: check that the images satisfy every defining rule of
    /// this presentation (normal forms of both sides agree in `dst`).
    pub fn validate_hom(
        &self,
        dst: &Presentation,
        images: &HashMap<GenId, Element>,
    ) -> Result<()> {
        for hi in 0..self.gens.len() {
            for lo in 0..hi {
                let rule = self.rule(lo, hi);
                let img_lo = images
                    .get(&lo)
                    .ok_or_else(|| Error::MissingImage(self.label(lo)))?;
                let img_hi = images
                    .get(&hi)
                    .ok_or_else(|| Error::MissingImage(self.label(hi)))?;
                let lhs = dst.multiply(img_hi, img_lo);
                let mut rhs = dst.multiply(img_lo, img_hi).scale(&rule.swap);
                for (c, m) in &rule.corrections {
                    let img_m = self.apply_hom(dst, images, &Element::monomial(m.clone()))?;
                    rhs = rhs.add(&img_m.scale(c));
                }
                if lhs != rhs {
                    return Err(Error::RelationViolated(self.label(lo), self.label(hi)));
                }
            }
        }
        Ok(())
    }

    // ---- canonical text -------------------------------------------------

    pub fn monomial_text(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.exps()
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    self.label(*g)
                } else {
                    format!("{}^{}", self.label(*g), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical text form: terms sorted descending by monomial order, each
    /// as `coef*mono` with multi-term coefficients parenthesized, e.g.
    /// `X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]`.
    pub fn element_text(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in x.iter_desc().enumerate() {
            // decide sign and magnitude text
            let (neg, mag) = if c.num_terms() > 1 {
                if c.leading_sign() < 0 {
                    (true, format!("({})", c.neg()))
                } else {
                    (false, format!("({})", c))
                }
            } else if c.leading_sign() < 0 {
                (true, c.neg().to_string())
            } else {
                (false, c.to_string())
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&self.monomial_text(m));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&self.monomial_text(m));
            }
        }
        out
    }
}

/// Outcome of a multidegree computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Zero,
    Homogeneous(DegreeVector),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn homogeneous(self) -> Option<DegreeVector> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::{oqm_presentation, xgen};

    fn elem(p: &Presentation, word: &[(GenId, i64)]) -> Element {
        p.normal_form(&[(LaurentInt::one(), word.to_vec())]).unwrap()
    }

    #[test]
    fn nf_same_column_swap() {
        let n = 2;
        let p = oqm_presentation(n);
        // X21*X11 -> q^{-1} X11 X21
        let got = elem(&p, &[(xgen(n, 2, 1), 1), (xgen(n, 1, 1), 1)]);
        let want = Element::term(
            LaurentInt::q_pow(-1),
            Monomial::from_exps([(xgen(n, 1, 1), 1), (xgen(n, 2, 1), 1)]),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn nf_diagonal_swap_with_correction() {
        let n = 2;
        let p = oqm_presentation(n);
        // X22*X11 -> X11 X22 - (q - q^-1) X12 X21
        let got = elem(&p, &[(xgen(n, 2, 2), 1), (xgen(n, 1, 1), 1)]);
        let mut want = Element::monomial(Monomial::from_exps([
            (xgen(n, 1, 1), 1),
            (xgen(n, 2, 2), 1),
        ]));
        want = want.add(&Element::term(
            LaurentInt::q_hat().neg(),
            Monomial::from_exps([(xgen(n, 1, 2), 1), (xgen(n, 2, 1), 1)]),
        ));
        assert_eq!(got, want);
        assert_eq!(
            p.element_text(&got),
            "X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]"
        );
    }

    #[test]
    fn nf_antidiagonal_commutes() {
        let n = 2;
        let p = oqm_presentation(n);
        let got = elem(&p, &[(xgen(n, 2, 1), 1), (xgen(n, 1, 2), 1)]);
        let want = Element::monomial(Monomial::from_exps([
            (xgen(n, 1, 2), 1),
            (xgen(n, 2, 1), 1),
        ]));
        assert_eq!(got, want);
    }

    #[test]
    fn multiply_unit_laws() {
        let n = 2;
        let p = oqm_presentation(n);
        let x = elem(&p, &[(xgen(n, 2, 2), 1), (xgen(n, 1, 1), 1)]);
        assert_eq!(p.multiply(&Element::one(), &x), x);
        assert!(p.multiply(&x, &Element::zero()).is_zero());
    }

    #[test]
    fn multiply_associative_spot() {
        let n = 2;
        let p = oqm_presentation(n);
        let a = elem(&p, &[(xgen(n, 2, 1), 1)]);
        let b = elem(&p, &[(xgen(n, 1, 2), 1)]);
        let c = elem(&p, &[(xgen(n, 2, 2), 2), (xgen(n, 1, 1), 1)]);
        assert_eq!(
            p.multiply(&p.multiply(&a, &b), &c),
            p.multiply(&a, &p.multiply(&b, &c))
        );
    }

    #[test]
    fn quotient_stairstep_is_admissible() {
        let n = 2;
        let p = oqm_presentation(n);
        let kill: BTreeSet<GenId> = [xgen(n, 1, 2), xgen(n, 2, 2)].into_iter().collect();
        let (q, map) = p.quotient(&kill).unwrap();
        assert_eq!(q.num_gens(), 2);
        let x11 = map[xgen(n, 1, 1)].unwrap();
        let x21 = map[xgen(n, 2, 1)].unwrap();
        let got = q
            .normal_form(&[(LaurentInt::one(), vec![(x21, 1), (x11, 1)])])
            .unwrap();
        let want = Element::term(
            LaurentInt::q_pow(-1),
            Monomial::from_exps([(x11, 1), (x21, 1)]),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn quotient_rejects_non_admissible() {
        let n = 2;
        let p = oqm_presentation(n);
        let kill: BTreeSet<GenId> = [xgen(n, 1, 1)].into_iter().collect();
        match p.quotient(&kill) {
            Err(Error::NonAdmissibleKillSet { .. }) => {}
            other => panic!("expected NonAdmissibleKillSet, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn quotient_empty_kill_is_identity() {
        let n = 2;
        let p = oqm_presentation(n);
        let (q, _) = p.quotient(&BTreeSet::new()).unwrap();
        assert_eq!(q.num_gens(), p.num_gens());
    }

    #[test]
    fn localize_rejects_non_q_normal() {
        let n = 2;
        let p = oqm_presentation(n);
        let invert: BTreeSet<GenId> = [xgen(n, 1, 1)].into_iter().collect();
        match p.localize(&invert) {
            Err(Error::NotQNormal { .. }) => {}
            other => panic!("expected NotQNormal, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn localize_empty_is_identity() {
        let n = 2;
        let p = oqm_presentation(n);
        let q = p.localize(&BTreeSet::new()).unwrap();
        assert_eq!(q.num_gens(), p.num_gens());
        assert!(!q.has_invertible());
    }

    #[test]
    fn inverse_letters_reduce() {
        // quotient to the n=2 single-column step pattern, then invert the pivot
        let n = 2;
        let p = oqm_presentation(n);
        let kill: BTreeSet<GenId> = [xgen(n, 1, 2), xgen(n, 2, 2)].into_iter().collect();
        let (q, map) = p.quotient(&kill).unwrap();
        let y11 = map[xgen(n, 1, 1)].unwrap();
        let y21 = map[xgen(n, 2, 1)].unwrap();
        let loc = q.localize(&[y11].into_iter().collect()).unwrap();
        // Y21 * Y11^{-1} = q * Y11^{-1} * Y21  (from Y11 Y21 = q Y21 Y11)
        let got = loc
            .normal_form(&[(LaurentInt::one(), vec![(y21, 1), (y11, -1)])])
            .unwrap();
        let want = Element::term(
            LaurentInt::q(),
            Monomial::from_exps([(y11, -1), (y21, 1)]),
        );
        assert_eq!(got, want);
        // and Y11^{-1} Y11 = 1
        let unit = loc
            .normal_form(&[(LaurentInt::one(), vec![(y11, -1), (y11, 1)])])
            .unwrap();
        assert!(unit.is_one());
    }

    #[test]
    fn tensor_cross_commutes_and_grades() {
        let n = 2;
        let p = oqm_presentation(n);
        let t = p.tensor(&p);
        assert_eq!(t.grading_rank(), 2 * p.grading_rank());
        assert_eq!(t.num_gens(), 2 * p.num_gens());
        // collision renamed families
        assert!(t.find_gen_named("Xl", 1, 1).is_some());
        assert!(t.find_gen_named("Xr", 2, 2).is_some());
        // (g(x)1)(1(x)h) is the ordered monomial, and the unit is 1(x)1
        let l = t.find_gen_named("Xl", 1, 1).unwrap();
        let r = t.find_gen_named("Xr", 1, 2).unwrap();
        let prod = t
            .normal_form(&[(LaurentInt::one(), vec![(r, 1), (l, 1)])])
            .unwrap();
        assert_eq!(
            prod,
            Element::monomial(Monomial::from_exps([(l, 1), (r, 1)]))
        );
    }

    #[test]
    fn multidegree_examples() {
        let n = 2;
        let p = oqm_presentation(n);
        let x12 = Element::monomial(Monomial::gen(xgen(n, 1, 2)));
        assert_eq!(
            p.multidegree(&x12),
            Homogeneity::Homogeneous(DegreeVector(vec![1, 0, 0, 1]))
        );
        let m = Element::monomial(Monomial::from_exps([
            (xgen(n, 1, 1), 1),
            (xgen(n, 2, 2), 1),
        ]));
        assert_eq!(
            p.multidegree(&m),
            Homogeneity::Homogeneous(DegreeVector(vec![1, 1, 1, 1]))
        );
        let mixed = m.add(&x12);
        assert_eq!(p.multidegree(&mixed), Homogeneity::Inhomogeneous);
        assert_eq!(p.multidegree(&Element::zero()), Homogeneity::Zero);
    }

    #[test]
    fn apply_hom_identity_and_missing() {
        let n = 2;
        let p = oqm_presentation(n);
        let x = elem(&p, &[(xgen(n, 2, 2), 1), (xgen(n, 1, 1), 1)]);
        let images: HashMap<GenId, Element> = (0..p.num_gens())
            .map(|g| (g, Element::monomial(Monomial::gen(g))))
            .collect();
        assert_eq!(p.apply_hom(&p, &images, &x).unwrap(), x);
        let empty = HashMap::new();
        assert!(matches!(
            p.apply_hom(&p, &empty, &x),
            Err(Error::MissingImage(_))
        ));
    }

    #[test]
    fn element_text_round_corners() {
        let n = 2;
        let p = oqm_presentation(n);
        assert_eq!(p.element_text(&Element::zero()), "0");
        assert_eq!(p.element_text(&Element::one()), "1");
        let e = Element::term(
            LaurentInt::q_pow(-1).neg(),
            Monomial::gen_pow(xgen(n, 1, 2), 2),
        );
        assert_eq!(p.element_text(&e), "-q^-1*X[1,2]^2");
    }
}
