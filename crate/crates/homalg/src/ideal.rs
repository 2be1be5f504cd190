//! Homogeneous ideals of a quotient ring and their arithmetic: membership,
//! sums, products, colon ideals, intersections, and capped radical
//! membership. Everything reduces to rank-one Groebner and syzygy
//! computations.

use std::sync::Arc;

use crate::error::Result;
use crate::field::Field;
use crate::groebner::{self, SubmoduleGB, VectorElem};
use crate::poly::Polynomial;
use crate::ring::{same_ring, QuotientRing};

/// A homogeneous ideal, stored by canonical nonzero generators in user
/// order. The zero ideal has an empty generator list.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<QuotientRing<F>>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<QuotientRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            let g = ring.reduce(&g);
            if g.is_zero() {
                continue;
            }
            ring.ambient().require_homogeneous(&g, "ideal generator")?;
            out.push(g);
        }
        Ok(Ideal { ring: ring.clone(), gens: out })
    }

    pub fn parse(ring: &Arc<QuotientRing<F>>, gens: &[&str]) -> Result<Self> {
        let polys: Vec<Polynomial<F>> = gens
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<_>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Arc<QuotientRing<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    /// The irrelevant maximal ideal generated by the variable classes.
    pub fn irrelevant(ring: &Arc<QuotientRing<F>>) -> Self {
        let gens = (0..ring.nvars())
            .map(|i| ring.reduce(&ring.ambient().var_poly(i)))
            .filter(|p| !p.is_zero())
            .collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gb(&self) -> Result<SubmoduleGB<F>> {
        let vecs: Vec<VectorElem<F>> = self.gens.iter().map(|g| vec![g.clone()]).collect();
        groebner::submodule_gb(&self.ring, &[0], &vecs)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb()?.contains(&[self.ring.reduce(f)])
    }

    /// Does the ideal contain the unit, i.e. is it all of `R`?
    pub fn is_unit(&self) -> Result<bool> {
        self.contains(&self.ring.ambient().one())
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        same_ring(&self.ring, &other.ring)?;
        let gb = self.gb()?;
        for g in &other.gens {
            if !gb.contains(std::slice::from_ref(g))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        same_ring(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        same_ring(&self.ring, &other.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(self.ring.mul(a, b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(self : g)` for a single element, read off the first coordinates of
    /// the syzygies of `[g, gens(self)]`.
    fn colon_single(&self, g: &Polynomial<F>) -> Result<Ideal<F>> {
        let g = self.ring.reduce(g);
        if g.is_zero() {
            // (I : 0) = R
            return Ideal::new(&self.ring, vec![self.ring.ambient().one()]);
        }
        let mut list: Vec<VectorElem<F>> = vec![vec![g]];
        list.extend(self.gens.iter().map(|f| vec![f.clone()]));
        let syz = groebner::syzygies_over_ring(&self.ring, &[0], &list)?;
        let gens: Vec<Polynomial<F>> = syz.into_iter().map(|mut v| v.remove(0)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// Ideal quotient `(self : other)`.
    pub fn colon(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        same_ring(&self.ring, &other.ring)?;
        if other.is_zero() {
            return Ideal::new(&self.ring, vec![self.ring.ambient().one()]);
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let c = self.colon_single(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Intersection via syzygies of the concatenated generator lists: a
    /// syzygy `(a, b)` of `[f's, g's]` witnesses the common element
    /// `sum a_i f_i`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        same_ring(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let mut list: Vec<VectorElem<F>> =
            self.gens.iter().map(|f| vec![f.clone()]).collect();
        list.extend(other.gens.iter().map(|g| vec![g.clone()]));
        let syz = groebner::syzygies_over_ring(&self.ring, &[0], &list)?;
        let m = self.gens.len();
        let mut gens = Vec::new();
        for v in syz {
            let mut h = Polynomial::zero();
            for (c, f) in v[..m].iter().zip(&self.gens) {
                h = self.ring.add(&h, &self.ring.mul(c, f));
            }
            gens.push(h);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Minimal generating subset (degree order, first kept).
    pub fn minimalized(&self) -> Result<Ideal<F>> {
        let vecs: Vec<VectorElem<F>> = self.gens.iter().map(|g| vec![g.clone()]).collect();
        let idx = groebner::minimal_generator_indices(&self.ring, &[0], &vecs)?;
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: idx.iter().map(|&i| self.gens[i].clone()).collect(),
        })
    }

    pub fn num_min_gens(&self) -> Result<usize> {
        Ok(self.minimalized()?.gens.len())
    }

    /// Smallest `e <= cap` with `f^e` in the ideal; `None` when no such
    /// power exists within the cap (radical membership is only certified,
    /// never refuted).
    pub fn radical_contains(&self, f: &Polynomial<F>, cap: u32) -> Result<Option<u32>> {
        let gb = self.gb()?;
        let amb = self.ring.ambient();
        let mut pow = self.ring.reduce(f);
        for e in 1..=cap {
            if gb.contains(&[pow.clone()])? {
                return Ok(Some(e));
            }
            pow = self.ring.reduce(&amb.mul(&pow, f));
        }
        Ok(None)
    }

    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.render(g)).collect();
        format!("({})", parts.join(", "))
    }
}
