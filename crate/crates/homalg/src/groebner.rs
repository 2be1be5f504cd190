//! Buchberger's algorithm for submodules of graded free modules, normal
//! forms, and syzygy computation.
//!
//! Everything here runs over the ambient polynomial ring. Submodules of free
//! modules over a quotient ring `R = P/I` are handled by appending
//! `f * e_i` for every defining generator `f` and unit vector `e_i` to the
//! generator list and computing over `P`; the quotient-level wrappers at the
//! bottom of the module package that convention up.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Ambient, Polynomial, Term};
use crate::ring::QuotientRing;

/// An element of a free module: one polynomial per generator.
pub type VectorElem<F> = Vec<Polynomial<F>>;

/// Extension of a monomial order to free-module terms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleOrder {
    /// Compare monomials first, break ties by position (lower index wins).
    TermOverPosition,
    /// Compare positions first (lower index wins), then monomials. Lower
    /// positions dominate completely, which gives the elimination property
    /// used for syzygy extraction.
    PositionOverTerm,
}

pub fn cmp_vec_term(
    order: MonomialOrder,
    morder: ModuleOrder,
    a: (&Monomial, usize),
    b: (&Monomial, usize),
) -> Ordering {
    match morder {
        ModuleOrder::TermOverPosition => order
            .cmp_mon(a.0, b.0)
            .then_with(|| b.1.cmp(&a.1)),
        ModuleOrder::PositionOverTerm => b
            .1
            .cmp(&a.1)
            .then_with(|| order.cmp_mon(a.0, b.0)),
    }
}

pub fn vec_zero<F: Field>(rank: usize) -> VectorElem<F> {
    vec![Polynomial::zero(); rank]
}

pub fn vec_is_zero<F: Field>(v: &[Polynomial<F>]) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn vec_add<F: Field>(amb: &Ambient, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> VectorElem<F> {
    a.iter().zip(b).map(|(x, y)| amb.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(amb: &Ambient, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> VectorElem<F> {
    a.iter().zip(b).map(|(x, y)| amb.sub(x, y)).collect()
}

pub fn vec_term_mul<F: Field>(
    amb: &Ambient,
    coef: &F,
    mon: &Monomial,
    v: &[Polynomial<F>],
) -> VectorElem<F> {
    v.iter().map(|p| amb.term_mul(coef, mon, p)).collect()
}

pub fn vec_scalar_mul<F: Field>(amb: &Ambient, c: &F, v: &[Polynomial<F>]) -> VectorElem<F> {
    v.iter().map(|p| amb.scalar_mul(c, p)).collect()
}

pub fn vec_poly_mul<F: Field>(amb: &Ambient, f: &Polynomial<F>, v: &[Polynomial<F>]) -> VectorElem<F> {
    v.iter().map(|p| amb.mul(f, p)).collect()
}

/// The lead term of a vector under the given module order.
pub fn vec_lead<'a, F: Field>(
    order: MonomialOrder,
    morder: ModuleOrder,
    v: &'a [Polynomial<F>],
) -> Option<(usize, &'a Term<F>)> {
    let mut best: Option<(usize, &'a Term<F>)> = None;
    for (pos, p) in v.iter().enumerate() {
        if let Some(t) = p.lead() {
            best = match best {
                None => Some((pos, t)),
                Some((bp, bt)) => {
                    if cmp_vec_term(order, morder, (&t.mon, pos), (&bt.mon, bp))
                        == Ordering::Greater
                    {
                        Some((pos, t))
                    } else {
                        Some((bp, bt))
                    }
                }
            };
        }
    }
    best
}

/// Degree of a homogeneous vector (component degree plus twist, constant
/// across nonzero components). `Ok(None)` for the zero vector.
pub fn vec_degree<F: Field>(
    amb: &Ambient,
    twists: &[i64],
    v: &[Polynomial<F>],
) -> Result<Option<i64>> {
    let mut deg: Option<i64> = None;
    for (pos, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        amb.require_homogeneous(p, "module element component")?;
        let d = p.degree().unwrap() as i64 + twists[pos];
        match deg {
            None => deg = Some(d),
            Some(existing) if existing == d => {}
            Some(existing) => {
                return Err(EngineError::NonHomogeneous(format!(
                    "module element mixes degrees {} and {}",
                    existing, d
                )))
            }
        }
    }
    Ok(deg)
}

pub fn vec_render<F: Field>(amb: &Ambient, v: &[Polynomial<F>]) -> String {
    let parts: Vec<String> = v.iter().map(|p| amb.render(p)).collect();
    format!("({})", parts.join(", "))
}

/// A verified, auto-reduced Groebner basis of a submodule of a graded free
/// module over the ambient polynomial ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    amb: Ambient,
    morder: ModuleOrder,
    twists: Vec<i64>,
    elements: Vec<VectorElem<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn elements(&self) -> &[VectorElem<F>] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn normal_form(&self, v: &[Polynomial<F>]) -> Result<VectorElem<F>> {
        if v.len() != self.rank() {
            return Err(EngineError::AmbientMismatch(format!(
                "vector of rank {} against basis of rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(normal_form_list(
            &self.amb,
            self.morder,
            &self.elements,
            v,
        ))
    }

    pub fn contains(&self, v: &[Polynomial<F>]) -> Result<bool> {
        Ok(vec_is_zero(&self.normal_form(v)?))
    }

    /// Re-check the Buchberger criterion pair by pair and emit one line per
    /// S-vector. Used by tests to audit stored bases.
    pub fn certificate(&self) -> Result<String> {
        let mut out = String::new();
        let order = self.amb.order();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let (pi, ti) = vec_lead(order, self.morder, &self.elements[i]).unwrap();
                let (pj, tj) = vec_lead(order, self.morder, &self.elements[j]).unwrap();
                if pi != pj {
                    continue;
                }
                let s = s_vector(
                    &self.amb,
                    &self.elements[i],
                    (pi, ti),
                    &self.elements[j],
                    (pj, tj),
                );
                let r = normal_form_list(&self.amb, self.morder, &self.elements, &s);
                if !vec_is_zero(&r) {
                    return Err(EngineError::Internal(format!(
                        "S-vector of elements {} and {} does not reduce to zero",
                        i, j
                    )));
                }
                out.push_str(&format!("S({},{}) -> 0\n", i, j));
            }
        }
        Ok(out)
    }
}

fn s_vector<F: Field>(
    amb: &Ambient,
    gi: &[Polynomial<F>],
    (pi, ti): (usize, &Term<F>),
    gj: &[Polynomial<F>],
    (_pj, tj): (usize, &Term<F>),
) -> VectorElem<F> {
    let _ = pi;
    let l = ti.mon.lcm(&tj.mon);
    let mi = ti.mon.checked_div(&l).unwrap();
    let mj = tj.mon.checked_div(&l).unwrap();
    // basis elements are monic, but keep the general formula
    let ci = ti.coef.inv().expect("nonzero lead");
    let cj = tj.coef.inv().expect("nonzero lead");
    vec_sub(
        amb,
        &vec_term_mul(amb, &ci, &mi, gi),
        &vec_term_mul(amb, &cj, &mj, gj),
    )
}

/// Full normal form against an arbitrary list of reducers (not necessarily a
/// Groebner basis); public entry point for reduction by stored bases.
pub fn normal_form_vectors<F: Field>(
    amb: &Ambient,
    morder: ModuleOrder,
    basis: &[VectorElem<F>],
    v: &[Polynomial<F>],
) -> VectorElem<F> {
    normal_form_list(amb, morder, basis, v)
}

/// Full normal form of `v` against a list of monic reducers; the reducer is
/// always the first one in list order whose lead term divides.
fn normal_form_list<F: Field>(
    amb: &Ambient,
    morder: ModuleOrder,
    basis: &[VectorElem<F>],
    v: &[Polynomial<F>],
) -> VectorElem<F> {
    let order = amb.order();
    let reducers: Vec<(&VectorElem<F>, (usize, Term<F>))> = basis
        .iter()
        .filter_map(|g| {
            vec_lead(order, morder, g).map(|(p, t)| (g, (p, t.clone())))
        })
        .collect();
    let rank = v.len();
    let mut work: VectorElem<F> = v.to_vec();
    let mut out: Vec<Vec<Term<F>>> = vec![Vec::new(); rank];
    'outer: loop {
        let (pos, lt) = match vec_lead(order, morder, &work) {
            None => break,
            Some((p, t)) => (p, t.clone()),
        };
        for (g, (gpos, glead)) in &reducers {
            if *gpos == pos && glead.mon.divides(&lt.mon) {
                let m = glead.mon.checked_div(&lt.mon).unwrap();
                let c = lt.coef.div(&glead.coef).expect("nonzero lead");
                work = vec_sub(amb, &work, &vec_term_mul(amb, &c, &m, g));
                continue 'outer;
            }
        }
        out[pos].push(lt);
        work[pos] = work[pos].tail();
    }
    out.into_iter()
        .map(Polynomial::from_sorted_terms)
        .collect()
}

/// Incremental Buchberger state with Gebauer-Moeller pair elimination.
pub(crate) struct BuchState<F: Field> {
    amb: Ambient,
    morder: ModuleOrder,
    twists: Vec<i64>,
    basis: Vec<VectorElem<F>>,
    leads: Vec<(usize, Term<F>)>,
    // (pair degree, i, j) with i < j; processed in ascending order
    pairs: BTreeSet<(i64, usize, usize)>,
}

impl<F: Field> BuchState<F> {
    pub(crate) fn new(amb: Ambient, morder: ModuleOrder, twists: Vec<i64>) -> Self {
        BuchState {
            amb,
            morder,
            twists,
            basis: Vec::new(),
            leads: Vec::new(),
            pairs: BTreeSet::new(),
        }
    }

    pub(crate) fn normal_form(&self, v: &[Polynomial<F>]) -> VectorElem<F> {
        normal_form_list(&self.amb, self.morder, &self.basis, v)
    }

    fn pair_degree(&self, i: usize, j: usize) -> i64 {
        let (p, ti) = &self.leads[i];
        let (_, tj) = &self.leads[j];
        ti.mon.lcm(&tj.mon).degree() as i64 + self.twists[*p]
    }

    /// Reduce and, if nonzero, insert into the basis updating the pair queue.
    /// Returns true when the basis grew.
    pub(crate) fn add(&mut self, v: &[Polynomial<F>]) -> bool {
        let r = self.normal_form(v);
        if vec_is_zero(&r) {
            return false;
        }
        let (pos, lead) = {
            let (p, t) = vec_lead(self.amb.order(), self.morder, &r).unwrap();
            (p, t.clone())
        };
        let inv = lead.coef.inv().expect("nonzero lead");
        let monic = vec_scalar_mul(&self.amb, &inv, &r);
        let t = self.basis.len();
        self.basis.push(monic);
        self.leads.push((pos, Term { coef: F::one(), mon: lead.mon.clone() }));
        self.update_pairs(t, pos, &lead.mon);
        true
    }

    /// Gebauer-Moeller update on inserting element `t`.
    fn update_pairs(&mut self, t: usize, pos: usize, lm_t: &Monomial) {
        // candidate new pairs with their lcms
        let mut cands: Vec<(Monomial, usize)> = Vec::new();
        for i in 0..t {
            if self.leads[i].0 == pos {
                cands.push((self.leads[i].1.mon.lcm(lm_t), i));
            }
        }
        // B criterion: prune old pairs whose lcm the new lead term divides
        // strictly on both sides
        let old: Vec<(i64, usize, usize)> = self.pairs.iter().copied().collect();
        for (d, i, j) in old {
            if self.leads[i].0 != pos {
                continue;
            }
            let lcm_ij = self.leads[i].1.mon.lcm(&self.leads[j].1.mon);
            if lm_t.divides(&lcm_ij)
                && self.leads[i].1.mon.lcm(lm_t) != lcm_ij
                && self.leads[j].1.mon.lcm(lm_t) != lcm_ij
            {
                self.pairs.remove(&(d, i, j));
            }
        }
        // M and F criteria: process candidates in a canonical order and keep
        // one representative per divisibility class
        cands.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.exps().cmp(b.0.exps()))
                .then_with(|| a.1.cmp(&b.1))
        });
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        'cand: for (lcm, i) in cands {
            for (klcm, _) in &kept {
                if klcm.divides(&lcm) {
                    continue 'cand;
                }
            }
            kept.push((lcm, i));
        }
        // product criterion is only sound for ideals (rank one)
        let rank_one = self.twists.len() == 1;
        for (lcm, i) in kept {
            if rank_one && self.leads[i].1.mon.is_coprime(lm_t) {
                continue;
            }
            let _ = lcm;
            let d = self.pair_degree(i, t);
            self.pairs.insert((d, i, t));
        }
    }

    /// Process the pair queue to completion.
    pub(crate) fn complete(&mut self) {
        while let Some(&(d, i, j)) = self.pairs.iter().next() {
            self.pairs.remove(&(d, i, j));
            let (pi, ti) = (self.leads[i].0, self.leads[i].1.clone());
            let (pj, tj) = (self.leads[j].0, self.leads[j].1.clone());
            let s = s_vector(
                &self.amb,
                &self.basis[i],
                (pi, &ti),
                &self.basis[j],
                (pj, &tj),
            );
            self.add(&s);
        }
    }

    /// Interreduce to the unique reduced basis and sort canonically.
    pub(crate) fn finish(self) -> GroebnerBasis<F> {
        let order = self.amb.order();
        let morder = self.morder;
        // phase 1: drop elements whose lead another kept lead divides
        let mut idx: Vec<usize> = (0..self.basis.len()).collect();
        idx.sort_by(|&a, &b| {
            let (pa, ta) = &self.leads[a];
            let (pb, tb) = &self.leads[b];
            cmp_vec_term(order, morder, (&ta.mon, *pa), (&tb.mon, *pb)).then(a.cmp(&b))
        });
        let mut kept: Vec<usize> = Vec::new();
        'el: for &i in &idx {
            let (pi, ti) = &self.leads[i];
            for &k in &kept {
                let (pk, tk) = &self.leads[k];
                if pk == pi && tk.mon.divides(&ti.mon) {
                    continue 'el;
                }
            }
            kept.push(i);
        }
        // phase 2: tail-reduce each kept element against the others
        let mut elems: Vec<VectorElem<F>> = Vec::with_capacity(kept.len());
        for (n, &i) in kept.iter().enumerate() {
            let others: Vec<VectorElem<F>> = kept
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != n)
                .map(|(_, &k)| self.basis[k].clone())
                .collect();
            let mut red = normal_form_list(&self.amb, morder, &others, &self.basis[i]);
            if let Some((_, t)) = vec_lead(order, morder, &red) {
                let inv = t.coef.inv().expect("nonzero lead");
                red = vec_scalar_mul(&self.amb, &inv, &red);
            }
            elems.push(red);
        }
        GroebnerBasis {
            amb: self.amb,
            morder,
            twists: self.twists,
            elements: elems,
        }
    }
}

fn validate_gens<F: Field>(
    amb: &Ambient,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<()> {
    for g in gens {
        if g.len() != twists.len() {
            return Err(EngineError::AmbientMismatch(format!(
                "generator of rank {} in a free module of rank {}",
                g.len(),
                twists.len()
            )));
        }
        vec_degree(amb, twists, g)?;
    }
    Ok(())
}

/// Buchberger's algorithm over the ambient polynomial ring. Deterministic:
/// the result is the unique reduced basis for the given order.
pub fn buchberger<F: Field>(
    amb: &Ambient,
    morder: ModuleOrder,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<GroebnerBasis<F>> {
    validate_gens(amb, twists, gens)?;
    let mut st = BuchState::new(amb.clone(), morder, twists.to_vec());
    for g in gens {
        st.add(g);
        st.complete();
    }
    Ok(st.finish())
}

/// Syzygies of `gens` over the ambient ring, by the cover-module trick: track
/// each generator with a fresh unit vector, run Buchberger under an order
/// that eliminates the original block, and read syzygies off the elements
/// supported entirely in the tracking block.
pub fn syzygies_ambient<F: Field>(
    amb: &Ambient,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<Vec<VectorElem<F>>> {
    validate_gens(amb, twists, gens)?;
    let r = twists.len();
    let s = gens.len();
    if s == 0 {
        return Ok(Vec::new());
    }
    let mut cover_twists = twists.to_vec();
    for g in gens {
        let d = vec_degree(amb, twists, g)?.unwrap_or(0);
        cover_twists.push(d);
    }
    let mut cover_gens: Vec<VectorElem<F>> = Vec::with_capacity(s);
    for (i, g) in gens.iter().enumerate() {
        let mut v = g.clone();
        v.extend(vec_zero::<F>(s));
        v[r + i] = amb.one();
        cover_gens.push(v);
    }
    let gb = buchberger(amb, ModuleOrder::PositionOverTerm, &cover_twists, &cover_gens)?;
    let mut out = Vec::new();
    for e in gb.elements() {
        if e[..r].iter().all(|p| p.is_zero()) {
            out.push(e[r..].to_vec());
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Quotient-ring wrappers
// ---------------------------------------------------------------------------

/// Append `f * e_i` for every minimal defining generator `f` to `gens`.
fn augment<F: Field>(
    ring: &QuotientRing<F>,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> (Vec<VectorElem<F>>, usize) {
    let r = twists.len();
    let mut all = gens.to_vec();
    for f in ring.min_defining() {
        for i in 0..r {
            let mut v = vec_zero::<F>(r);
            v[i] = f.clone();
            all.push(v);
        }
    }
    let s = gens.len();
    (all, s)
}

/// Groebner basis data for a submodule of a graded free module over `R`,
/// supporting canonical normal forms and membership.
#[derive(Clone, Debug)]
pub struct SubmoduleGB<F: Field> {
    ring: Arc<QuotientRing<F>>,
    inner: GroebnerBasis<F>,
}

impl<F: Field> SubmoduleGB<F> {
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn basis(&self) -> &GroebnerBasis<F> {
        &self.inner
    }

    /// Canonical representative of `v` modulo the submodule (and the
    /// defining ideal).
    pub fn normal_form(&self, v: &[Polynomial<F>]) -> Result<VectorElem<F>> {
        self.inner.normal_form(v)
    }

    pub fn contains(&self, v: &[Polynomial<F>]) -> Result<bool> {
        self.inner.contains(v)
    }
}

/// Groebner basis of the submodule of `R^rank` generated by `gens`.
pub fn submodule_gb<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<SubmoduleGB<F>> {
    let (all, _) = augment(ring, twists, gens);
    let inner = buchberger(ring.ambient(), ModuleOrder::TermOverPosition, twists, &all)?;
    Ok(SubmoduleGB { ring: ring.clone(), inner })
}

/// Generators of the full syzygy module over `R` of the given generators.
/// Coordinates come back as canonical representatives.
pub fn syzygies_over_ring<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<Vec<VectorElem<F>>> {
    let (all, s) = augment(ring, twists, gens);
    let raw = syzygies_ambient(ring.ambient(), twists, &all)?;
    let mut out = Vec::new();
    for v in raw {
        let proj: VectorElem<F> = v[..s].iter().map(|p| ring.reduce(p)).collect();
        if !vec_is_zero(&proj) {
            out.push(proj);
        }
    }
    Ok(out)
}

fn minimal_indices_with_context<F: Field>(
    amb: &Ambient,
    twists: &[i64],
    context: &[VectorElem<F>],
    gens: &[VectorElem<F>],
) -> Result<Vec<usize>> {
    validate_gens(amb, twists, gens)?;
    let mut order: Vec<usize> = (0..gens.len()).collect();
    let degs: Vec<i64> = gens
        .iter()
        .map(|g| vec_degree(amb, twists, g).map(|d| d.unwrap_or(i64::MIN)))
        .collect::<Result<_>>()?;
    order.sort_by_key(|&i| degs[i]);
    let mut st = BuchState::new(
        amb.clone(),
        ModuleOrder::TermOverPosition,
        twists.to_vec(),
    );
    for c in context {
        st.add(c);
        st.complete();
    }
    let mut kept = Vec::new();
    for &i in &order {
        if vec_is_zero(&gens[i]) {
            continue;
        }
        if st.add(&gens[i]) {
            st.complete();
            kept.push(i);
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Indices of a minimal generating subset over the ambient ring.
pub fn minimal_indices_ambient<F: Field>(
    amb: &Ambient,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<Vec<usize>> {
    minimal_indices_with_context(amb, twists, &[], gens)
}

/// Indices of a minimal generating subset, processing candidates in weakly
/// increasing degree and keeping the ones not already generated. For
/// homogeneous generators over a graded ring this yields a minimal
/// generating set by the graded Nakayama lemma.
pub fn minimal_generator_indices<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
) -> Result<Vec<usize>> {
    let mut context = Vec::new();
    for f in ring.min_defining() {
        for i in 0..twists.len() {
            let mut v = vec_zero::<F>(twists.len());
            v[i] = f.clone();
            context.push(v);
        }
    }
    minimal_indices_with_context(ring.ambient(), twists, &context, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf32003;
    use crate::monomial::MonomialOrder;
    use crate::oracle;

    type R = Arc<QuotientRing<Gf32003>>;

    fn poly_ring(vars: &[&str]) -> R {
        QuotientRing::new(vars, MonomialOrder::GrevLex, &[], true).unwrap()
    }

    fn hypersurface() -> R {
        QuotientRing::new(&["x", "y", "z", "w"], MonomialOrder::GrevLex, &["x*y"], false)
            .unwrap()
    }

    fn vecs(ring: &R, items: &[&[&str]]) -> Vec<VectorElem<Gf32003>> {
        items
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s).unwrap()).collect())
            .collect()
    }

    /// Mutual containment of two generating sets over the ring.
    fn same_submodule(ring: &R, twists: &[i64], a: &[VectorElem<Gf32003>], b: &[VectorElem<Gf32003>]) -> bool {
        let ga = submodule_gb(ring, twists, a).unwrap();
        let gb = submodule_gb(ring, twists, b).unwrap();
        a.iter().all(|v| gb.contains(v).unwrap()) && b.iter().all(|v| ga.contains(v).unwrap())
    }

    #[test]
    fn principal_ideal_basis() {
        let r = poly_ring(&["x", "y", "z", "w"]);
        let gens = vecs(&r, &[&["x*y"]]);
        let gb = buchberger(r.ambient(), ModuleOrder::TermOverPosition, &[0], &gens).unwrap();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(r.render(&gb.elements()[0][0]), "x*y");
        assert!(gb.certificate().is_ok());
    }

    #[test]
    fn quotient_basis_captures_defining_relation() {
        // generators {y, z, w} over k[x,y,z,w]/(xy): the augmented ambient
        // computation reduces to {y, z, w}, and x*y lies in the submodule
        let r = hypersurface();
        let gens = vecs(&r, &[&["y"], &["z"], &["w"]]);
        let sub = submodule_gb(&r, &[0], &gens).unwrap();
        assert_eq!(sub.basis().elements().len(), 3);
        assert!(sub.contains(&vecs(&r, &[&["x*y"]])[0]).unwrap());
        assert!(sub.contains(&vecs(&r, &[&["z^2"]])[0]).unwrap());
        assert!(!sub.contains(&vecs(&r, &[&["x^2"]])[0]).unwrap());
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = poly_ring(&["x", "y", "z"]);
        let gens = vecs(&r, &[&["x^2"], &["x*y"], &["y^2"]]);
        let gb = buchberger(r.ambient(), ModuleOrder::TermOverPosition, &[0], &gens).unwrap();
        assert_eq!(gb.elements().len(), 3);
        gb.certificate().unwrap();
    }

    #[test]
    fn normal_form_examples() {
        let r = poly_ring(&["x", "y", "z", "w"]);
        let gens = vecs(&r, &[&["x*y"]]);
        let gb = buchberger(r.ambient(), ModuleOrder::TermOverPosition, &[0], &gens).unwrap();
        assert!(gb.contains(&vecs(&r, &[&["x^2*y"]])[0]).unwrap());
        let nf = gb
            .normal_form(&vecs(&r, &[&["x^2 + x*y"]])[0])
            .unwrap();
        assert_eq!(r.render(&nf[0]), "x^2");
    }

    #[test]
    fn syzygy_of_zerodivisor() {
        // relations on {x} over k[x,y,z,w]/(xy): exactly (y)
        let r = hypersurface();
        let gens = vecs(&r, &[&["x"]]);
        let syz = syzygies_over_ring(&r, &[0], &gens).unwrap();
        let expect = vecs(&r, &[&["y"]]);
        assert!(same_submodule(&r, &[1], &syz, &expect));
    }

    #[test]
    fn syzygy_of_nonzerodivisor_over_domain() {
        let r = poly_ring(&["x", "y"]);
        let gens = vecs(&r, &[&["x"]]);
        assert!(syzygies_over_ring(&r, &[0], &gens).unwrap().is_empty());
    }

    #[test]
    fn syzygies_of_prime_ideal_generators() {
        // relations on {y, z, w} over k[x,y,z,w]/(xy): the Koszul relations
        // plus (x, 0, 0), minimally four generators
        let r = hypersurface();
        let gens = vecs(&r, &[&["y"], &["z"], &["w"]]);
        let syz = syzygies_over_ring(&r, &[0], &gens).unwrap();
        let expect = vecs(
            &r,
            &[
                &["z", "-y", "0"],
                &["w", "0", "-y"],
                &["0", "w", "-z"],
                &["x", "0", "0"],
            ],
        );
        let twists = [1i64, 1, 1];
        assert!(same_submodule(&r, &twists, &syz, &expect));
        let min = minimal_generator_indices(&r, &twists, &syz).unwrap();
        assert_eq!(min.len(), 4);
        // every syzygy pairs to zero against the generators
        for v in &syz {
            let mut acc = r.ambient().zero::<Gf32003>();
            for (c, g) in v.iter().zip(&gens) {
                acc = r.add(&acc, &r.mul(c, &g[0]));
            }
            assert!(r.reduce(&acc).is_zero());
        }
    }

    #[test]
    fn syzygies_contain_every_oracle_relation() {
        let r = hypersurface();
        let gens = vecs(&r, &[&["y"], &["z"], &["w"]]);
        let syz = syzygies_over_ring(&r, &[0], &gens).unwrap();
        let twists = [1i64, 1, 1];
        let sub = submodule_gb(&r, &twists, &syz).unwrap();
        for d in 0..=6 {
            for rel in oracle::relation_basis(&r, &[0], &gens, d) {
                assert!(sub.contains(&rel).unwrap(), "missing relation in degree {}", d);
            }
        }
    }

    #[test]
    fn membership_agrees_with_oracle() {
        let r = hypersurface();
        let gens = vecs(&r, &[&["y*z + w^2"], &["x*z"]]);
        let sub = submodule_gb(&r, &[0], &gens).unwrap();
        let probes = vecs(
            &r,
            &[
                &["y*z^2 + w^2*z"],
                &["x*z*w"],
                &["w^3"],
                &["x^2*z + y^2*z"],
                &["y^2*z + y*w^2"],
            ],
        );
        let oracle_says = oracle::membership(&r, &[0], &gens, &probes);
        for (p, expect) in probes.iter().zip(oracle_says) {
            assert_eq!(sub.contains(p).unwrap(), expect);
        }
    }

    #[test]
    fn deterministic_output() {
        let r = hypersurface();
        let gens = vecs(&r, &[&["y + z"], &["z^2 - w^2"], &["x*w"]]);
        let a = submodule_gb(&r, &[0], &gens).unwrap();
        let b = submodule_gb(&r, &[0], &gens).unwrap();
        let ra: Vec<String> = a.basis().elements().iter().map(|v| r.render(&v[0])).collect();
        let rb: Vec<String> = b.basis().elements().iter().map(|v| r.render(&v[0])).collect();
        assert_eq!(ra, rb);
    }
}
