//! Torus-invariant stratification machinery: stratum index pairs, stratum
//! ideals and their distinguished nested minors, step-triangular factor
//! algebras and their localizations, the comultiplication-based maps into
//! tensor products, stratum search from a minor-membership oracle,
//! counting of torus-invariant primes, and the full 2x2 catalog.

use crate::error::{Error, Result};
use crate::gradedideal::{homogeneous_component_basis, GradedIdeal, RowReducer};
use crate::pbwcore::{DegreeVector, Element, GenId, Monomial, Presentation};
use crate::qcoeff::LaurentInt;
use crate::qmatrix::{
    index_subsets, oqm_presentation, quantum_minor, xgen, IndexSet, MinorKey,
};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

/// A pair of strictly increasing index sequences of equal length `t`
/// (`t = 0` allowed); indexes the strata.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct StepPair {
    pub r: IndexSet,
    pub c: IndexSet,
}

impl StepPair {
    pub fn new(r: IndexSet, c: IndexSet) -> Result<Self> {
        if r.len() != c.len() {
            return Err(Error::SizeMismatch);
        }
        Ok(StepPair { r, c })
    }

    pub fn t(&self) -> usize {
        self.r.len()
    }
}

impl fmt::Display for StepPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={};c={}", self.r, self.c)
    }
}

/// All `C(n,t)^2` pairs in lexicographic order.
pub fn enumerate_rc(n: u32, t: usize) -> Vec<StepPair> {
    let sets = index_subsets(n, t);
    let mut out = Vec::with_capacity(sets.len() * sets.len());
    for r in &sets {
        for c in &sets {
            out.push(StepPair {
                r: r.clone(),
                c: c.clone(),
            });
        }
    }
    out
}

/// Minor keys of the printed generating set of the stratum ideal: all minors
/// of size `t+1`, plus for each `l <= t` every `[I|J]` whose row set fails
/// `I >= (r_1..r_l)` and every one whose column set fails `J >= (c_1..c_l)`.
/// (Minors of size larger than `t+1` lie in the ideal of `(t+1)`-minors by
/// column expansion, so they are omitted from the list.)
pub fn krc_generator_keys(n: u32, pair: &StepPair) -> Vec<MinorKey> {
    let t = pair.t();
    let mut keys: BTreeSet<MinorKey> = BTreeSet::new();
    if t + 1 <= n as usize {
        for rows in index_subsets(n, t + 1) {
            for cols in index_subsets(n, t + 1) {
                keys.insert(MinorKey::new(rows.clone(), cols).unwrap());
            }
        }
    }
    for l in 1..=t {
        let r_prefix = IndexSet::new(pair.r.elements()[..l].to_vec()).unwrap();
        let c_prefix = IndexSet::new(pair.c.elements()[..l].to_vec()).unwrap();
        for rows in index_subsets(n, l) {
            let row_bad = !r_prefix.leq(&rows).unwrap();
            for cols in index_subsets(n, l) {
                let col_bad = !c_prefix.leq(&cols).unwrap();
                if row_bad || col_bad {
                    keys.insert(MinorKey::new(rows.clone(), cols).unwrap());
                }
            }
        }
    }
    keys.into_iter().collect()
}

/// The stratum ideal as a graded ideal of the quantum matrix algebra.
pub fn krc_generators(n: u32, pair: &StepPair) -> GradedIdeal {
    let gens = krc_generator_keys(n, pair)
        .iter()
        .map(|k| quantum_minor(n as usize, k))
        .collect();
    GradedIdeal::new(oqm_presentation(n as usize), gens)
        .expect("stratum ideal generators are homogeneous")
}

/// The nested distinguished minor `d_l = [r_1..r_l | c_1..c_l]`; `d_0 = 1`.
pub fn drc(n: u32, pair: &StepPair, l: usize) -> Element {
    assert!(l <= pair.t());
    let key = MinorKey::new(
        IndexSet::new(pair.r.elements()[..l].to_vec()).unwrap(),
        IndexSet::new(pair.c.elements()[..l].to_vec()).unwrap(),
    )
    .unwrap();
    quantum_minor(n as usize, &key)
}

/// A step-triangular factor algebra together with its bookkeeping: which
/// matrix positions survive and where the localization pivots sit.
#[derive(Clone)]
pub struct StepAlgebra {
    pub pres: Arc<Presentation>,
    /// matrix position (1-based) -> generator id in `pres`
    pub gen_at: BTreeMap<(u32, u32), GenId>,
    /// localization pivots in step order
    pub pivots: Vec<GenId>,
    pub localized: bool,
}

impl StepAlgebra {
    pub fn gen(&self, i: u32, j: u32) -> GenId {
        self.gen_at[&(i, j)]
    }

    pub fn has(&self, i: u32, j: u32) -> bool {
        self.gen_at.contains_key(&(i, j))
    }
}

fn build_step(
    n: u32,
    seq: &IndexSet,
    plus: bool,
    localized: bool,
) -> Result<StepAlgebra> {
    let t = seq.len();
    let a = oqm_presentation(n as usize);
    let mut kill: BTreeSet<GenId> = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            let killed = if plus {
                j as usize > t || i < seq.get(j as usize - 1)
            } else {
                i as usize > t || j < seq.get(i as usize - 1)
            };
            if killed {
                kill.insert(xgen(n as usize, i, j));
            }
        }
    }
    let (q, map) = a.quotient(&kill)?;
    let family = if plus { "Y" } else { "Z" };
    let q = q.relabeled(|l| {
        let mut l = l.clone();
        l.family = family.to_string();
        l
    });
    let mut gen_at = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if let Some(new) = map[xgen(n as usize, i, j)] {
                gen_at.insert((i, j), new);
            }
        }
    }
    let pivots: Vec<GenId> = (1..=t)
        .map(|s| {
            let (i, j) = if plus {
                (seq.get(s - 1), s as u32)
            } else {
                (s as u32, seq.get(s - 1))
            };
            gen_at[&(i, j)]
        })
        .collect();
    let pres = if localized {
        Arc::new(q.localize(&pivots.iter().copied().collect())?)
    } else {
        Arc::new(q)
    };
    Ok(StepAlgebra {
        pres,
        gen_at,
        pivots,
        localized,
    })
}

/// Row step algebra: quotient by `{X_ij : j > t or i < r_j}` (survivors
/// relabeled `Y`), optionally localized at the stairstep pivots `Y[r_s,s]`.
pub fn step_algebra_plus(n: u32, r: &IndexSet, localized: bool) -> Result<StepAlgebra> {
    build_step(n, r, true, localized)
}

/// Column step algebra: quotient by `{X_ij : i > t or j < c_i}` (survivors
/// relabeled `Z`), optionally localized at the pivots `Z[s,c_s]`.
pub fn step_algebra_minus(n: u32, c: &IndexSet, localized: bool) -> Result<StepAlgebra> {
    build_step(n, c, false, localized)
}

/// The composite of comultiplication with both step quotients, landing in
/// the tensor product of the localized step algebras.
pub struct Beta {
    pub n: u32,
    pub pair: StepPair,
    pub plus: StepAlgebra,
    pub minus: StepAlgebra,
    pub tensor: Arc<Presentation>,
    pub right_offset: usize,
    pub images: HashMap<GenId, Element>,
}

impl Beta {
    /// Tensor id of `Y[i,l]` in the left factor.
    pub fn ygen(&self, i: u32, l: u32) -> GenId {
        self.plus.gen(i, l)
    }

    /// Tensor id of `Z[l,j]` in the right factor.
    pub fn zgen(&self, l: u32, j: u32) -> GenId {
        self.right_offset + self.minus.gen(l, j)
    }

    pub fn apply(&self, x: &Element) -> Element {
        oqm_presentation(self.n as usize)
            .apply_hom(&self.tensor, &self.images, x)
            .expect("images are total")
    }

    pub fn vanishes(&self, x: &Element) -> bool {
        self.apply(x).is_zero()
    }
}

/// Build the map for a pair, validating that the generator images satisfy
/// every defining relation (this must never fail).
pub fn beta_map(n: u32, pair: &StepPair) -> Result<Beta> {
    let plus = step_algebra_plus(n, &pair.r, true)?;
    let minus = step_algebra_minus(n, &pair.c, true)?;
    let tensor = Arc::new(plus.pres.tensor(&minus.pres));
    let right_offset = plus.pres.num_gens();
    let t = pair.t();
    let mut images = HashMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut img = Element::zero();
            for l in 1..=t {
                let (rl, cl) = (pair.r.get(l - 1), pair.c.get(l - 1));
                if rl <= i && cl <= j {
                    let y = plus.gen(i, l as u32);
                    let z = right_offset + minus.gen(l as u32, j);
                    img.add_term(
                        &LaurentInt::one(),
                        Monomial::from_exps([(y, 1), (z, 1)]),
                    );
                }
            }
            images.insert(xgen(n as usize, i, j), img);
        }
    }
    let a = oqm_presentation(n as usize);
    a.validate_hom(&tensor, &images)?;
    Ok(Beta {
        n,
        pair: pair.clone(),
        plus,
        minus,
        tensor,
        right_offset,
        images,
    })
}

/// The named element families attached to a pair: the normalized step
/// generators `y_ij`, `z_lm`, the transfer minors `u_ij`, `w_lm`, and the
/// pivot products equal to the images of the nested minors.
pub struct BrcFamilies {
    /// `(i, j, Y_ij Y_{r_j j}^{-1})` in the localized row step algebra
    pub ys: Vec<(u32, u32, Element)>,
    /// `(l, m, Z_lm Z_{l c_l}^{-1})` in the localized column step algebra
    pub zs: Vec<(u32, u32, Element)>,
    /// `(i, j, [r_1..r_{j-1} i | c_1..c_j])` in the quantum matrix algebra
    pub us: Vec<(u32, u32, Element)>,
    /// `(l, m, [r_1..r_l | c_1..c_{l-1} m])` in the quantum matrix algebra
    pub ws: Vec<(u32, u32, Element)>,
    /// index `l`: the product `(Y_{r_1 1}(x)Z_{1 c_1}) .. (Y_{r_l l}(x)Z_{l c_l})`,
    /// with the empty product 1 at `l = 0`
    pub pivot_products: Vec<Element>,
}

/// `u_ij = [r_1..r_{j-1} i | c_1..c_j]` for `j <= t`, `i >= r_j`.
pub fn u_minor(n: u32, pair: &StepPair, i: u32, j: usize) -> Element {
    let mut rows: Vec<u32> = pair.r.elements()[..j - 1].to_vec();
    rows.push(i);
    let rows = IndexSet::from_sorted(rows);
    let cols = IndexSet::new(pair.c.elements()[..j].to_vec()).unwrap();
    quantum_minor(n as usize, &MinorKey::new(rows, cols).unwrap())
}

/// `w_lm = [r_1..r_l | c_1..c_{l-1} m]` for `l <= t`, `m >= c_l`.
pub fn w_minor(n: u32, pair: &StepPair, l: usize, m: u32) -> Element {
    let rows = IndexSet::new(pair.r.elements()[..l].to_vec()).unwrap();
    let mut cols: Vec<u32> = pair.c.elements()[..l - 1].to_vec();
    cols.push(m);
    let cols = IndexSet::from_sorted(cols);
    quantum_minor(n as usize, &MinorKey::new(rows, cols).unwrap())
}

pub fn brc_elements(n: u32, pair: &StepPair, beta: &Beta) -> BrcFamilies {
    let t = pair.t();
    let mut ys = Vec::new();
    for j in 1..=t {
        let rj = pair.r.get(j - 1);
        for i in (rj + 1)..=n {
            let y = beta
                .plus
                .pres
                .normal_form(&[(
                    LaurentInt::one(),
                    vec![
                        (beta.plus.gen(i, j as u32), 1),
                        (beta.plus.gen(rj, j as u32), -1),
                    ],
                )])
                .expect("pivots are invertible");
            ys.push((i, j as u32, y));
        }
    }
    let mut zs = Vec::new();
    for l in 1..=t {
        let cl = pair.c.get(l - 1);
        for m in (cl + 1)..=n {
            let z = beta
                .minus
                .pres
                .normal_form(&[(
                    LaurentInt::one(),
                    vec![
                        (beta.minus.gen(l as u32, m), 1),
                        (beta.minus.gen(l as u32, cl), -1),
                    ],
                )])
                .expect("pivots are invertible");
            zs.push((l as u32, m, z));
        }
    }
    let mut us = Vec::new();
    let mut ws = Vec::new();
    for j in 1..=t {
        for i in pair.r.get(j - 1)..=n {
            us.push((i, j as u32, u_minor(n, pair, i, j)));
        }
    }
    for l in 1..=t {
        for m in pair.c.get(l - 1)..=n {
            ws.push((l as u32, m, w_minor(n, pair, l, m)));
        }
    }
    let mut pivot_products = vec![Element::one()];
    let mut acc = Element::one();
    for l in 1..=t {
        let pivot = Element::monomial(Monomial::from_exps([
            (beta.ygen(pair.r.get(l - 1), l as u32), 1),
            (beta.zgen(l as u32, pair.c.get(l - 1)), 1),
        ]));
        acc = beta.tensor.multiply(&acc, &pivot);
        pivot_products.push(acc.clone());
    }
    BrcFamilies {
        ys,
        zs,
        us,
        ws,
        pivot_products,
    }
}

/// Coordinates of a torus-invariant prime: a stratum pair plus kill sets
/// (matrix positions) naming invariant primes of the two step algebras, and
/// an optional known generating set in the quantum matrix algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPrimeSpec {
    pub pair: StepPair,
    pub q_plus_kill: Vec<(u32, u32)>,
    pub q_minus_kill: Vec<(u32, u32)>,
    pub known_generators: Option<Vec<Element>>,
}

/// The composite of [`beta_map`] with the quotients by the two kill sets;
/// its kernel is the invariant prime named by the spec, membership being
/// decided by image-equals-zero.
pub struct Kappa {
    pub beta: Beta,
    pub pres: Arc<Presentation>,
    pub images: HashMap<GenId, Element>,
}

impl Kappa {
    pub fn apply(&self, x: &Element) -> Element {
        oqm_presentation(self.beta.n as usize)
            .apply_hom(&self.pres, &self.images, x)
            .expect("images are total")
    }

    pub fn vanishes(&self, x: &Element) -> bool {
        self.apply(x).is_zero()
    }

    /// Minor-membership oracle for the associated prime.
    pub fn minor_oracle(&self) -> impl Fn(&MinorKey) -> bool + '_ {
        let n = self.beta.n as usize;
        move |key: &MinorKey| self.vanishes(&quantum_minor(n, key))
    }
}

pub fn kappa_map(n: u32, spec: &HPrimeSpec) -> Result<Kappa> {
    let beta = beta_map(n, &spec.pair)?;
    let mut kill: BTreeSet<GenId> = BTreeSet::new();
    for (i, j) in &spec.q_plus_kill {
        kill.insert(beta.plus.gen(*i, *j));
    }
    for (l, m) in &spec.q_minus_kill {
        kill.insert(beta.right_offset + beta.minus.gen(*l, *m));
    }
    let (quotient, map) = beta.tensor.quotient(&kill)?;
    let quotient = Arc::new(quotient);
    let images = beta
        .images
        .iter()
        .map(|(g, img)| {
            let mut out = Element::zero();
            for (m, c) in img.iter() {
                if m.contains_any(&kill) {
                    continue;
                }
                out.add_term(
                    &c.clone(),
                    Monomial::from_exps(
                        m.exps().iter().map(|(g, e)| (map[*g].unwrap(), *e)),
                    ),
                );
            }
            (*g, out)
        })
        .collect();
    Ok(Kappa {
        beta,
        pres: quotient,
        images,
    })
}

/// Stratum search: given a membership oracle for the quantum minors of a
/// completely prime proper ideal, return the unique pair whose stratum ideal
/// is contained in it and whose distinguished minors avoid it.
pub fn stratum_of(n: u32, oracle: impl Fn(&MinorKey) -> bool) -> Result<StepPair> {
    let mut t = 0usize;
    'size: for s in (1..=n as usize).rev() {
        for rows in index_subsets(n, s) {
            for cols in index_subsets(n, s) {
                if !oracle(&MinorKey::new(rows.clone(), cols).unwrap()) {
                    t = s;
                    break 'size;
                }
            }
        }
    }
    let minimal_witness = |row_side: bool| -> Result<IndexSet> {
        if t == 0 {
            return Ok(IndexSet::empty());
        }
        let candidates: Vec<IndexSet> = index_subsets(n, t)
            .into_iter()
            .filter(|set| {
                index_subsets(n, t).iter().any(|other| {
                    let key = if row_side {
                        MinorKey::new(set.clone(), other.clone())
                    } else {
                        MinorKey::new(other.clone(), set.clone())
                    }
                    .unwrap();
                    !oracle(&key)
                })
            })
            .collect();
        debug_assert!(!candidates.is_empty());
        let mut mins = vec![u32::MAX; t];
        for cand in &candidates {
            for (s, v) in cand.iter().enumerate() {
                mins[s] = mins[s].min(v);
            }
        }
        let minimum = IndexSet::new(mins).map_err(|_| {
            Error::InconsistentOracle(
                "componentwise minimum of witness sets is not strictly increasing".into(),
            )
        })?;
        if !candidates.contains(&minimum) {
            return Err(Error::InconsistentOracle(format!(
                "witness {} sets of size {} have no unique minimum",
                if row_side { "row" } else { "column" },
                t
            )));
        }
        Ok(minimum)
    };
    let r = minimal_witness(true)?;
    let c = minimal_witness(false)?;
    let pair = StepPair::new(r, c)?;
    // re-check the defining properties of the stratum against the oracle
    for key in krc_generator_keys(n, &pair) {
        if !oracle(&key) {
            return Err(Error::InconsistentOracle(format!(
                "stratum ideal generator {} is outside the ideal",
                key
            )));
        }
    }
    for l in 1..=pair.t() {
        let key = MinorKey::new(
            IndexSet::new(pair.r.elements()[..l].to_vec()).unwrap(),
            IndexSet::new(pair.c.elements()[..l].to_vec()).unwrap(),
        )
        .unwrap();
        if oracle(&key) {
            return Err(Error::InconsistentOracle(format!(
                "distinguished minor {} lies in the ideal",
                key
            )));
        }
    }
    Ok(pair)
}

/// Invariant primes of a pure q-commutation presentation (no correction
/// terms): all subsets of the non-invertible generators, each naming the
/// ideal it generates. Returned as kill sets in ascending bitmask order.
pub fn hspec_qaffine(p: &Presentation) -> Result<Vec<Vec<GenId>>> {
    if let Some((lo, hi)) = p.has_corrections() {
        return Err(Error::HasCorrections(
            p.gen_info(lo).label.to_string(),
            p.gen_info(hi).label.to_string(),
        ));
    }
    let free: Vec<GenId> = (0..p.num_gens())
        .filter(|g| !p.gen_info(*g).invertible)
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        out.push(
            free.iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, g)| *g)
                .collect(),
        );
    }
    Ok(out)
}

/// Count of torus-invariant primes at stratum size `t`, when computable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HspecCount {
    Known(u64),
    Unknown,
}

/// `(sum over r of |H-spec of the row step algebra|)^2` whenever every step
/// algebra at this `t` is in the pure q-commutation class; `Unknown`
/// otherwise (those step algebras carry correction terms and their invariant
/// spectra are outside this kernel's scope).
pub fn hspec_count(n: u32, t: usize) -> HspecCount {
    let mut sum: u64 = 0;
    for r in index_subsets(n, t) {
        let step = step_algebra_plus(n, &r, true).expect("step pattern is admissible");
        match hspec_qaffine(&step.pres) {
            Ok(list) => sum += list.len() as u64,
            Err(_) => return HspecCount::Unknown,
        }
    }
    HspecCount::Known(sum * sum)
}

fn pair2(r: &[u32], c: &[u32]) -> StepPair {
    StepPair::new(
        IndexSet::new(r.to_vec()).unwrap(),
        IndexSet::new(c.to_vec()).unwrap(),
    )
    .unwrap()
}

fn x2(i: u32, j: u32) -> Element {
    Element::monomial(Monomial::gen(xgen(2, i, j)))
}

fn det2() -> Element {
    quantum_minor(
        2,
        &MinorKey::new(
            IndexSet::new(vec![1, 2]).unwrap(),
            IndexSet::new(vec![1, 2]).unwrap(),
        )
        .unwrap(),
    )
}

/// The full catalog of the 14 torus-invariant primes of the 2x2 algebra:
/// one at `t = 0`, nine at `t = 1`, four at `t = 2`. Generating sets are
/// attached only where unambiguous (the augmentation ideal, the quantum
/// determinant, and the `t = 2` block); the rest carry coordinates only and
/// their generating sets are computed, not transcribed.
pub fn hspec_m2_catalog() -> Vec<HPrimeSpec> {
    let mut out = Vec::with_capacity(14);
    out.push(HPrimeSpec {
        pair: pair2(&[], &[]),
        q_plus_kill: vec![],
        q_minus_kill: vec![],
        known_generators: Some(vec![x2(1, 1), x2(1, 2), x2(2, 1), x2(2, 2)]),
    });
    // t = 1: kill-set choices per step algebra
    let plus_opts = |r1: u32| -> Vec<Vec<(u32, u32)>> {
        if r1 == 1 {
            vec![vec![], vec![(2, 1)]]
        } else {
            vec![vec![]]
        }
    };
    let minus_opts = |c1: u32| -> Vec<Vec<(u32, u32)>> {
        if c1 == 1 {
            vec![vec![], vec![(1, 2)]]
        } else {
            vec![vec![]]
        }
    };
    for r1 in 1..=2u32 {
        for c1 in 1..=2u32 {
            for qp in plus_opts(r1) {
                for qm in minus_opts(c1) {
                    let known = if r1 == 1 && c1 == 1 && qp.is_empty() && qm.is_empty() {
                        Some(vec![det2()])
                    } else {
                        None
                    };
                    out.push(HPrimeSpec {
                        pair: pair2(&[r1], &[c1]),
                        q_plus_kill: qp.clone(),
                        q_minus_kill: qm.clone(),
                        known_generators: known,
                    });
                }
            }
        }
    }
    // t = 2
    for qp in [vec![], vec![(2, 1)]] {
        for qm in [vec![], vec![(1, 2)]] {
            let mut gens = Vec::new();
            if !qm.is_empty() {
                gens.push(x2(1, 2));
            }
            if !qp.is_empty() {
                gens.push(x2(2, 1));
            }
            out.push(HPrimeSpec {
                pair: pair2(&[1, 2], &[1, 2]),
                q_plus_kill: qp.clone(),
                q_minus_kill: qm,
                known_generators: Some(gens),
            });
        }
    }
    out
}

/// Normalize a kernel element: strip content and make the coefficient of the
/// leading monomial have a positive leading integer coefficient.
fn normalize_generator(f: &Element) -> Element {
    let content = f
        .iter()
        .fold(None::<(num_bigint::BigInt, i64)>, |acc, (_, c)| {
            use num_integer::Integer;
            let (g, e) = c.content().unwrap();
            Some(match acc {
                None => (g, e),
                Some((ag, ae)) => (ag.gcd(&g), ae.min(e)),
            })
        });
    let mut out = f.clone();
    if let Some((g, e)) = content {
        if !g.is_zero() && (!g.is_one() || e != 0) {
            out = Element::zero();
            for (m, c) in f.iter() {
                out.add_term(&c.div_term_exact(&g, e), m.clone());
            }
        }
    }
    let flip = out
        .leading_monomial()
        .map(|m| out.coefficient_of(m).leading_sign() < 0)
        .unwrap_or(false);
    if flip {
        out.neg()
    } else {
        out
    }
}

use num_traits::One as _;
use num_traits::Zero as _;

/// Homogeneous generators, up to the given total degree, of the kernel of a
/// kappa map: for each multidegree the exact kernel of the image map is
/// computed by fraction-free elimination, and elements already generated by
/// lower-degree output are dropped via graded ideal membership. A bounded
/// computation — evidence about the kernel, not a completeness proof.
pub fn kappa_kernel_generators(n: u32, kappa: &Kappa, total_degree_bound: usize) -> Vec<Element> {
    let a = oqm_presentation(n as usize);
    let mut found: Vec<Element> = Vec::new();
    for total in 1..=total_degree_bound {
        // all multidegrees with row block and column block each summing to `total`
        let mut degs: Vec<DegreeVector> = Vec::new();
        let rows = compositions(n as usize, total);
        let cols = compositions(n as usize, total);
        for rv in &rows {
            for cv in &cols {
                let mut d = rv.clone();
                d.extend(cv.iter().copied());
                degs.push(DegreeVector(d));
            }
        }
        degs.sort_by(|a, b| a.0.cmp(&b.0));
        for d in degs {
            let basis = homogeneous_component_basis(&a, &d);
            if basis.is_empty() {
                continue;
            }
            // coordinates of kappa images
            let mut target_index: HashMap<Monomial, usize> = HashMap::new();
            let mut images: Vec<Element> = Vec::with_capacity(basis.len());
            for m in &basis {
                let img = kappa.apply(&Element::monomial(m.clone()));
                for (tm, _) in img.iter() {
                    let next = target_index.len();
                    target_index.entry(tm.clone()).or_insert(next);
                }
                images.push(img);
            }
            let dim = target_index.len().max(1);
            let mut reducer = RowReducer::new(dim);
            for (row_id, img) in images.iter().enumerate() {
                let mut v = vec![LaurentInt::zero(); dim];
                for (tm, c) in img.iter() {
                    v[target_index[tm]] = c.clone();
                }
                if let Some(red) = reducer.offer(v) {
                    // mult * m_{row_id} - sum comb * m_j maps to zero
                    let mut f = Element::term(red.mult, basis[row_id].clone());
                    for (j, c) in red.comb {
                        f.add_term(&c.neg(), basis[j].clone());
                    }
                    if f.is_zero() {
                        continue;
                    }
                    let in_found = if found.is_empty() {
                        false
                    } else {
                        GradedIdeal::new(a.clone(), found.clone())
                            .expect("kernel elements are homogeneous")
                            .contains(&f)
                            .expect("kernel elements are homogeneous")
                    };
                    if !in_found {
                        found.push(normalize_generator(&f));
                    }
                }
            }
        }
    }
    found
}

/// All length-`k` vectors of nonnegative integers summing to `total`.
fn compositions(k: usize, total: usize) -> Vec<Vec<i64>> {
    fn rec(k: usize, total: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 1 {
            let mut v = acc.clone();
            v.push(total);
            out.push(v);
            return;
        }
        for x in 0..=total {
            acc.push(x);
            rec(k - 1, total - x, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, total as i64, &mut Vec::new(), &mut out);
    out
}
