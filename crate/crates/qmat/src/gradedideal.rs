//! Exact membership testing for two-sided ideals generated by homogeneous
//! elements of a graded PBW presentation.
//!
//! Membership of a homogeneous `f` at multidegree `d` is decided by
//! assembling the finite spanning set `{m1 * g * m2}` of the ideal's
//! degree-`d` component (normal forms of monomial multiples of the
//! generators) and running fraction-free elimination over [`LaurentInt`].
//! A verdict of `true` means membership over the fraction field: some
//! nonzero Laurent polynomial multiple of `f` lies in the integral span,
//! and the optional certificate records that combination exactly.

use crate::error::{Error, Result};
use crate::pbwcore::{DegreeVector, Element, Homogeneity, Monomial, Presentation};
use crate::qcoeff::LaurentInt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// All ordered monomials of multidegree exactly `d` (empty for impossible
/// degrees; `[1]` for the zero degree).
pub fn homogeneous_component_basis(p: &Presentation, d: &DegreeVector) -> Vec<Monomial> {
    assert!(d.is_nonneg(), "component basis requires a nonnegative degree");
    fn rec(
        p: &Presentation,
        g: usize,
        rem: &DegreeVector,
        acc: &mut Vec<(usize, i64)>,
        out: &mut Vec<Monomial>,
    ) {
        if g == p.num_gens() {
            if rem.is_zero() {
                out.push(Monomial::from_exps(acc.iter().copied()));
            }
            return;
        }
        let dg = &p.gen_info(g).degree;
        debug_assert!(dg.is_nonneg() && !dg.is_zero());
        let mut left = rem.clone();
        let mut e = 0i64;
        loop {
            if e == 0 {
                rec(p, g + 1, &left, acc, out);
            } else {
                acc.push((g, e));
                rec(p, g + 1, &left, acc, out);
                acc.pop();
            }
            left = left.sub(dg);
            if !left.is_nonneg() {
                break;
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(p, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Sparse combination over row ids.
type Comb = BTreeMap<usize, LaurentInt>;

fn comb_scale(c: &Comb, s: &LaurentInt) -> Comb {
    c.iter().map(|(k, v)| (*k, v.mul(s))).collect()
}

fn comb_add_scaled(into: &mut Comb, other: &Comb, s: &LaurentInt) {
    for (k, v) in other {
        let entry = into.entry(*k).or_insert_with(LaurentInt::zero);
        *entry = entry.add(&v.mul(s));
    }
    into.retain(|_, v| !v.is_zero());
}

fn vec_scale(v: &[LaurentInt], s: &LaurentInt) -> Vec<LaurentInt> {
    v.iter().map(|x| x.mul(s)).collect()
}

fn vec_sub_scaled(a: &[LaurentInt], b: &[LaurentInt], s: &LaurentInt) -> Vec<LaurentInt> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.sub(&y.mul(s)))
        .collect()
}

/// Joint content of a family of Laurent polynomials: positive gcd of all
/// integer coefficients plus the common minimal power of `q`.
fn joint_content<'a>(polys: impl Iterator<Item = &'a LaurentInt>) -> Option<(BigInt, i64)> {
    let mut g = BigInt::zero();
    let mut min_exp: Option<i64> = None;
    for p in polys {
        if let Some((pg, pe)) = p.content() {
            g = g.gcd(&pg);
            min_exp = Some(min_exp.map_or(pe, |m: i64| m.min(pe)));
        }
    }
    min_exp.map(|e| (g, e))
}

struct EchRow {
    pivot: usize,
    v: Vec<LaurentInt>,
    /// `self_mult * (offered row) = v + sum comb * (earlier offered rows)`.
    self_mult: LaurentInt,
    self_id: usize,
    comb: Comb,
}

/// Incremental fraction-free row reducer with provenance over the offered
/// rows. Pivots are chosen fewest-terms-first, then lowest exponent spread,
/// then lowest column index, to control coefficient growth.
pub struct RowReducer {
    dim: usize,
    rows: Vec<EchRow>,
    pivot_of_col: HashMap<usize, usize>,
    offered: usize,
}

/// Result of reducing a vector against the current echelon:
/// `mult * original = residual + sum comb * (offered rows)`.
pub struct Reduction {
    pub residual: Vec<LaurentInt>,
    pub mult: LaurentInt,
    pub comb: Comb,
}

impl RowReducer {
    pub fn new(dim: usize) -> Self {
        RowReducer {
            dim,
            rows: Vec::new(),
            pivot_of_col: HashMap::new(),
            offered: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn strip(residual: &mut [LaurentInt], mult: &mut LaurentInt, comb: &mut Comb) {
        let content = joint_content(
            residual
                .iter()
                .chain(std::iter::once(&*mult))
                .chain(comb.values()),
        );
        if let Some((g, e)) = content {
            if (!g.is_one() && !g.is_zero()) || e != 0 {
                for x in residual.iter_mut() {
                    *x = x.div_term_exact(&g, e);
                }
                *mult = mult.div_term_exact(&g, e);
                for v in comb.values_mut() {
                    *v = v.div_term_exact(&g, e);
                }
            }
        }
    }

    fn reduce_inner(&self, row: Vec<LaurentInt>) -> Reduction {
        let mut residual = row;
        let mut mult = LaurentInt::one();
        let mut comb: Comb = Comb::new();
        loop {
            let mut hit = None;
            for (idx, e) in self.rows.iter().enumerate() {
                if !residual[e.pivot].is_zero() {
                    hit = Some(idx);
                    break;
                }
            }
            let Some(idx) = hit else { break };
            let e = &self.rows[idx];
            let a = e.v[e.pivot].clone();
            let b = residual[e.pivot].clone();
            // residual <- a*residual - b*e.v ; expand e.v over offered rows
            residual = vec_sub_scaled(&vec_scale(&residual, &a), &e.v, &b);
            mult = mult.mul(&a);
            comb = comb_scale(&comb, &a);
            // e.v = self_mult * r_{self_id} - sum e.comb * r_j
            let entry = comb.entry(e.self_id).or_insert_with(LaurentInt::zero);
            *entry = entry.add(&b.mul(&e.self_mult));
            if entry.is_zero() {
                comb.remove(&e.self_id);
            }
            comb_add_scaled(&mut comb, &e.comb, &b.neg());
            Self::strip(&mut residual, &mut mult, &mut comb);
        }
        Reduction {
            residual,
            mult,
            comb,
        }
    }

    /// Reduce without inserting.
    pub fn reduce(&self, row: Vec<LaurentInt>) -> Reduction {
        self.reduce_inner(row)
    }

    /// Offer a row. Returns `Some(reduction)` when the row is dependent on
    /// earlier offered rows (`mult*row = sum comb * earlier`); inserts it into
    /// the echelon otherwise. Either way the row consumes one offered id.
    pub fn offer(&mut self, row: Vec<LaurentInt>) -> Option<Reduction> {
        let id = self.offered;
        self.offered += 1;
        let red = self.reduce_inner(row);
        if red.residual.iter().all(|x| x.is_zero()) {
            return Some(red);
        }
        // pick pivot column: fewest terms, then smallest spread, then index
        let pivot = (0..self.dim)
            .filter(|c| !red.residual[*c].is_zero())
            .min_by_key(|c| {
                let x = &red.residual[*c];
                (x.num_terms(), x.exp_spread(), *c)
            })
            .expect("nonzero residual has a pivot");
        debug_assert!(!self.pivot_of_col.contains_key(&pivot));
        self.pivot_of_col.insert(pivot, self.rows.len());
        // comb here satisfies mult*r_id = residual + sum comb r_j, i.e.
        // residual = mult*r_id - sum comb r_j: store in EchRow convention.
        self.rows.push(EchRow {
            pivot,
            v: red.residual,
            self_mult: red.mult,
            self_id: id,
            comb: red.comb,
        });
        None
    }
}

/// One certified summand: `coeff * left * (generator #gen_index) * right`.
#[derive(Clone, Debug)]
pub struct CertTerm {
    pub gen_index: usize,
    pub left: Monomial,
    pub right: Monomial,
    pub coeff: LaurentInt,
}

/// Exact combination witnessing membership:
/// `denominator * f = sum_k coeff_k * left_k * g_k * right_k`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub denominator: LaurentInt,
    pub terms: Vec<CertTerm>,
}

#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub certificate: Option<Certificate>,
}

/// Two-sided ideal generated by multidegree-homogeneous elements in a graded
/// presentation without invertible generators.
#[derive(Clone)]
pub struct GradedIdeal {
    ambient: Arc<Presentation>,
    gens: Vec<(Element, DegreeVector)>,
}

impl GradedIdeal {
    pub fn new(ambient: Arc<Presentation>, generators: Vec<Element>) -> Result<Self> {
        if ambient.has_invertible() {
            return Err(Error::LocalizedAmbient);
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                continue;
            }
            match ambient.multidegree(&g) {
                Homogeneity::Homogeneous(d) if d.is_nonneg() => gens.push((g, d)),
                _ => return Err(Error::NotHomogeneous),
            }
        }
        Ok(GradedIdeal { ambient, gens })
    }

    pub fn ambient(&self) -> &Arc<Presentation> {
        &self.ambient
    }

    pub fn generators(&self) -> &[(Element, DegreeVector)] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership of a homogeneous element, with an optional combination
    /// certificate. Exact at the queried multidegree: the ideal's component
    /// there equals the assembled span because rules and generators are
    /// homogeneous.
    pub fn membership(&self, f: &Element, want_certificate: bool) -> Result<Membership> {
        let d = match self.ambient.multidegree(f) {
            Homogeneity::Zero => {
                return Ok(Membership {
                    member: true,
                    certificate: want_certificate.then(|| Certificate {
                        denominator: LaurentInt::one(),
                        terms: Vec::new(),
                    }),
                })
            }
            Homogeneity::Homogeneous(d) => d,
            Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
        };
        if !d.is_nonneg() {
            return Err(Error::NotHomogeneous);
        }
        let basis = homogeneous_component_basis(&self.ambient, &d);
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_vec = |e: &Element| -> Vec<LaurentInt> {
            let mut v = vec![LaurentInt::zero(); basis.len()];
            for (m, c) in e.iter() {
                v[*index.get(m).expect("monomial outside component basis")] = c.clone();
            }
            v
        };
        let f_vec = to_vec(f);

        let mut reducer = RowReducer::new(basis.len());
        let mut provenance: Vec<(usize, Monomial, Monomial)> = Vec::new();
        let mut f_red: Option<Reduction> = None;

        // component bases per degree, cached
        let mut basis_cache: HashMap<DegreeVector, Vec<Monomial>> = HashMap::new();
        let mut basis_of = |deg: &DegreeVector| -> Vec<Monomial> {
            basis_cache
                .entry(deg.clone())
                .or_insert_with(|| homogeneous_component_basis(&self.ambient, deg))
                .clone()
        };

        'outer: for (gen_idx, (g, dg)) in self.gens.iter().enumerate() {
            if !dg.le(&d) {
                // grading pruning: this generator cannot contribute at degree d
                continue;
            }
            let rem = d.sub(dg);
            // enumerate splits rem = d1 + d2 by ascending total degree of d1
            let mut splits: Vec<DegreeVector> = enumerate_subdegrees(&rem);
            splits.sort_by_key(|d1| (d1.total(), d1.0.clone()));
            for d1 in splits {
                let d2 = rem.sub(&d1);
                let left_basis = basis_of(&d1);
                let right_basis = basis_of(&d2);
                for m1 in &left_basis {
                    let lg = self
                        .ambient
                        .multiply(&Element::monomial(m1.clone()), g);
                    for m2 in &right_basis {
                        let prod = self
                            .ambient
                            .multiply(&lg, &Element::monomial(m2.clone()));
                        let row = to_vec(&prod);
                        let inserted = reducer.offer(row).is_none();
                        provenance.push((gen_idx, m1.clone(), m2.clone()));
                        if inserted {
                            let red = reducer.reduce(f_vec.clone());
                            let done = red.residual.iter().all(|x| x.is_zero());
                            f_red = Some(red);
                            if done {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        let red = match f_red {
            Some(r) => r,
            None => reducer.reduce(f_vec.clone()),
        };
        let member = red.residual.iter().all(|x| x.is_zero());
        let certificate = if member && want_certificate {
            Some(Certificate {
                denominator: red.mult,
                terms: red
                    .comb
                    .into_iter()
                    .map(|(rid, coeff)| {
                        let (gen_index, left, right) = provenance[rid].clone();
                        CertTerm {
                            gen_index,
                            left,
                            right,
                            coeff,
                        }
                    })
                    .collect(),
            })
        } else {
            None
        };
        Ok(Membership {
            member,
            certificate,
        })
    }

    pub fn contains(&self, f: &Element) -> Result<bool> {
        Ok(self.membership(f, false)?.member)
    }

    /// Recompute the certificate combination and compare against
    /// `denominator * f`.
    pub fn verify_certificate(&self, f: &Element, cert: &Certificate) -> bool {
        let mut acc = Element::zero();
        for t in &cert.terms {
            let g = &self.gens[t.gen_index].0;
            let prod = self.ambient.multiply(
                &Element::monomial(t.left.clone()),
                &self.ambient.multiply(g, &Element::monomial(t.right.clone())),
            );
            acc = acc.add(&prod.scale(&t.coeff));
        }
        acc == f.scale(&cert.denominator)
    }
}

/// All degree vectors `0 <= d1 <= rem` componentwise.
fn enumerate_subdegrees(rem: &DegreeVector) -> Vec<DegreeVector> {
    let mut out = vec![Vec::new()];
    for &cap in &rem.0 {
        let mut next = Vec::with_capacity(out.len() * (cap as usize + 1));
        for prefix in &out {
            for v in 0..=cap {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(DegreeVector).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbwcore::Monomial;
    use crate::qmatrix::{oqm_presentation, quantum_minor, xgen, IndexSet, MinorKey};

    fn minor(n: usize, rows: &[u32], cols: &[u32]) -> Element {
        quantum_minor(
            n,
            &MinorKey::new(
                IndexSet::new(rows.to_vec()).unwrap(),
                IndexSet::new(cols.to_vec()).unwrap(),
            )
            .unwrap(),
        )
    }

    fn gen_elem(n: usize, i: u32, j: u32) -> Element {
        Element::monomial(Monomial::gen(xgen(n, i, j)))
    }

    #[test]
    fn component_basis_examples() {
        let p = oqm_presentation(2);
        let b = homogeneous_component_basis(&p, &DegreeVector(vec![1, 1, 1, 1]));
        assert_eq!(b.len(), 2); // X11X22 and X12X21
        let b2 = homogeneous_component_basis(&p, &DegreeVector(vec![1, 0, 0, 1]));
        assert_eq!(b2, vec![Monomial::gen(xgen(2, 1, 2))]);
        let b0 = homogeneous_component_basis(&p, &DegreeVector(vec![0, 0, 0, 0]));
        assert_eq!(b0, vec![Monomial::one()]);
    }

    #[test]
    fn component_basis_counts_n2_degree2() {
        // all monomials of total word length 2 in 4 generators: C(5,2) = 10,
        // partitioned across multidegrees
        let p = oqm_presentation(2);
        let mut count = 0;
        for a in 0..=2i64 {
            for b in 0..=2 - a {
                for c in 0..=2i64 {
                    let dvec = DegreeVector(vec![a, b, c, 2 - c]);
                    if dvec.0.iter().any(|x| *x < 0) || a + b != 2 {
                        continue;
                    }
                    count += homogeneous_component_basis(&p, &dvec).len();
                }
            }
        }
        assert_eq!(count, 10);
    }

    #[test]
    fn determinant_in_column_ideal() {
        let p = oqm_presentation(2);
        let ideal =
            GradedIdeal::new(p.clone(), vec![gen_elem(2, 2, 1), gen_elem(2, 2, 2)]).unwrap();
        let d = minor(2, &[1, 2], &[1, 2]);
        let m = ideal.membership(&d, true).unwrap();
        assert!(m.member);
        let cert = m.certificate.unwrap();
        assert!(ideal.verify_certificate(&d, &cert));
    }

    #[test]
    fn non_membership() {
        let p = oqm_presentation(2);
        let ideal = GradedIdeal::new(p.clone(), vec![gen_elem(2, 1, 2)]).unwrap();
        assert!(!ideal.contains(&gen_elem(2, 1, 1)).unwrap());
    }

    #[test]
    fn commutation_congruence_instance() {
        // n=2, I=J={2}, r=c=1: [2|2]X11 - q^2 X11[2|2] lies in <X11,X12,X21>
        let n = 2;
        let p = oqm_presentation(n);
        let ideal = GradedIdeal::new(
            p.clone(),
            vec![gen_elem(n, 1, 1), gen_elem(n, 1, 2), gen_elem(n, 2, 1)],
        )
        .unwrap();
        let x22 = gen_elem(n, 2, 2);
        let x11 = gen_elem(n, 1, 1);
        let f = p
            .multiply(&x22, &x11)
            .sub(&p.multiply(&x11, &x22).scale(&LaurentInt::q_pow(2)));
        let m = ideal.membership(&f, true).unwrap();
        assert!(m.member);
        assert!(ideal.verify_certificate(&f, &m.certificate.unwrap()));
    }

    #[test]
    fn rejects_inhomogeneous_and_localized() {
        let p = oqm_presentation(2);
        let mixed = gen_elem(2, 1, 1).add(&Element::one());
        assert!(matches!(
            GradedIdeal::new(p.clone(), vec![mixed.clone()]),
            Err(Error::NotHomogeneous)
        ));
        let ideal = GradedIdeal::new(p.clone(), vec![gen_elem(2, 1, 2)]).unwrap();
        assert!(matches!(
            ideal.membership(&mixed, false),
            Err(Error::NotHomogeneous)
        ));
        let loc = p
            .localize(&[xgen(2, 2, 1)].into_iter().collect())
            .unwrap();
        assert!(matches!(
            GradedIdeal::new(Arc::new(loc), vec![]),
            Err(Error::LocalizedAmbient)
        ));
    }

    #[test]
    fn monotonicity_spot_check() {
        let n = 2;
        let p = oqm_presentation(n);
        let ideal = GradedIdeal::new(p.clone(), vec![gen_elem(n, 2, 1)]).unwrap();
        let f = gen_elem(n, 2, 1);
        let x = minor(n, &[1, 2], &[1, 2]);
        let y = gen_elem(n, 1, 2);
        let prod = p.multiply(&x, &p.multiply(&f, &y));
        assert!(ideal.contains(&prod).unwrap());
    }

    #[test]
    fn pruning_oversized_generator_has_no_effect() {
        let n = 2;
        let p = oqm_presentation(n);
        // generator of degree too large to matter at degree of X12
        let big = minor(n, &[1, 2], &[1, 2]);
        let with_big =
            GradedIdeal::new(p.clone(), vec![gen_elem(n, 1, 2), big.clone()]).unwrap();
        let without =
            GradedIdeal::new(p.clone(), vec![gen_elem(n, 1, 2)]).unwrap();
        let f = gen_elem(n, 1, 2);
        assert_eq!(
            with_big.contains(&f).unwrap(),
            without.contains(&f).unwrap()
        );
    }

    #[test]
    fn larger_minors_lie_in_smaller_minor_ideal() {
        // consequence used to trim stratum ideal generator lists: a 3x3 minor
        // lies in the ideal of all 2x2 minors
        let n = 3;
        let p = oqm_presentation(n);
        let mut gens = Vec::new();
        for rows in crate::qmatrix::index_subsets(3, 2) {
            for cols in crate::qmatrix::index_subsets(3, 2) {
                gens.push(quantum_minor(n, &MinorKey::new(rows.clone(), cols).unwrap()));
            }
        }
        let ideal = GradedIdeal::new(p.clone(), gens).unwrap();
        let d3 = minor(n, &[1, 2, 3], &[1, 2, 3]);
        assert!(ideal.contains(&d3).unwrap());
    }

    #[test]
    fn zero_is_member_with_empty_certificate() {
        let p = oqm_presentation(2);
        let ideal = GradedIdeal::new(p, vec![gen_elem(2, 1, 2)]).unwrap();
        let m = ideal.membership(&Element::zero(), true).unwrap();
        assert!(m.member);
        assert!(m.certificate.unwrap().terms.is_empty());
    }
}
