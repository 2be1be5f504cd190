//! Graded quotient-ring contexts `R = k[x_1..x_n]/I`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::groebner::{self, ModuleOrder, VectorElem};
use crate::hilbert;
use crate::homology::Resolution;
use crate::monomial::MonomialOrder;
use crate::parse::parse_polynomial_ambient;
use crate::poly::{Ambient, Polynomial};

/// A standard graded polynomial ring over an exact field modulo a
/// homogeneous ideal. Immutable after construction; intended to be shared
/// behind an `Arc`.
///
/// The structure flags are verified, not trusted: `is_complete_intersection`
/// is set from a codimension count, Cohen-Macaulayness and Gorensteinness
/// are computed on demand from depth and type, and only equidimensionality
/// can be declared by the caller (it is implied when the ring is a complete
/// intersection).
pub struct QuotientRing<F: Field> {
    ambient: Ambient,
    defining_ideal: Vec<Polynomial<F>>,
    defining_gb: Vec<Polynomial<F>>,
    min_defining: Vec<Polynomial<F>>,
    dim: u32,
    ci: bool,
    equidim_declared: bool,
    cm: OnceLock<bool>,
    gorenstein: OnceLock<bool>,
    // minimal resolutions already computed over this ring, keyed by a
    // fingerprint of the minimal presentation; concurrent readers, exclusive
    // writer
    pub(crate) res_memo: Mutex<HashMap<String, Arc<Resolution<F>>>>,
}

impl<F: Field> fmt::Debug for QuotientRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientRing({})", self.describe())
    }
}

impl<F: Field> PartialEq for QuotientRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.defining_ideal == other.defining_ideal
    }
}

impl<F: Field> QuotientRing<F> {
    /// Build a quotient ring from variable names, a monomial order, and
    /// homogeneous defining polynomials (text form).
    pub fn new(
        vars: &[&str],
        order: MonomialOrder,
        defining: &[&str],
        equidimensional: bool,
    ) -> Result<Arc<Self>> {
        let ambient = Ambient::new(vars.iter().map(|s| s.to_string()).collect(), order);
        let polys: Vec<Polynomial<F>> = defining
            .iter()
            .map(|s| parse_polynomial_ambient(&ambient, s))
            .collect::<Result<_>>()?;
        Self::from_polynomials(ambient, polys, equidimensional)
    }

    pub fn from_polynomials(
        ambient: Ambient,
        defining: Vec<Polynomial<F>>,
        equidimensional: bool,
    ) -> Result<Arc<Self>> {
        let mut ideal_gens = Vec::new();
        for p in defining {
            if p.is_zero() {
                continue;
            }
            ambient.require_homogeneous(&p, "defining polynomial")?;
            if p.degree() == Some(0) {
                return Err(EngineError::UnsupportedRing(
                    "defining ideal contains a unit".into(),
                ));
            }
            ideal_gens.push(p);
        }
        let gens_as_vecs: Vec<VectorElem<F>> =
            ideal_gens.iter().map(|p| vec![p.clone()]).collect();
        let gb = groebner::buchberger(
            &ambient,
            ModuleOrder::TermOverPosition,
            &[0],
            &gens_as_vecs,
        )?;
        let defining_gb: Vec<Polynomial<F>> =
            gb.elements().iter().map(|v| v[0].clone()).collect();

        // Krull dimension from the lead-term ideal
        let leads: Vec<_> = defining_gb
            .iter()
            .map(|p| p.lead().unwrap().mon.clone())
            .collect();
        let numer = hilbert::lead_ideal_numerator(&leads);
        let dim = hilbert::dimension_from_numerator(ambient.nvars(), &numer)
            .ok_or_else(|| EngineError::UnsupportedRing("defining ideal is the unit ideal".into()))?;

        // minimal generators of the defining ideal, for the codimension test
        // and for quotient-level augmentation
        let min_idx =
            groebner::minimal_indices_ambient(&ambient, &[0], &gens_as_vecs)?;
        let min_defining: Vec<Polynomial<F>> =
            min_idx.iter().map(|&i| ideal_gens[i].clone()).collect();

        let codim = ambient.nvars() as u32 - dim;
        let ci = codim as usize == min_defining.len();

        let ring = QuotientRing {
            ambient,
            defining_ideal: ideal_gens,
            defining_gb,
            min_defining,
            dim,
            ci,
            equidim_declared: equidimensional,
            cm: OnceLock::new(),
            gorenstein: OnceLock::new(),
            res_memo: Mutex::new(HashMap::new()),
        };
        if ci {
            // complete intersections are Gorenstein, Cohen-Macaulay and
            // equidimensional
            let _ = ring.cm.set(true);
            let _ = ring.gorenstein.set(true);
        }
        Ok(Arc::new(ring))
    }

    /// The ambient polynomial ring `k[x_1..x_n]`.
    pub fn polynomial_ring(
        vars: &[&str],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        Self::new(vars, order, &[], true)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn order(&self) -> MonomialOrder {
        self.ambient.order()
    }

    pub fn defining_ideal(&self) -> &[Polynomial<F>] {
        &self.defining_ideal
    }

    pub fn defining_gb(&self) -> &[Polynomial<F>] {
        &self.defining_gb
    }

    pub(crate) fn min_defining(&self) -> &[Polynomial<F>] {
        &self.min_defining
    }

    pub fn is_proper_quotient(&self) -> bool {
        !self.defining_ideal.is_empty()
    }

    /// Krull dimension of `R`.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn codim(&self) -> u32 {
        self.ambient.nvars() as u32 - self.dim
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.ci
    }

    pub fn is_equidimensional(&self) -> bool {
        self.ci || self.equidim_declared
    }

    pub(crate) fn cm_cell(&self) -> &OnceLock<bool> {
        &self.cm
    }

    pub(crate) fn gorenstein_cell(&self) -> &OnceLock<bool> {
        &self.gorenstein
    }

    /// Canonical representative modulo the defining ideal.
    pub fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        if self.defining_gb.is_empty() {
            return p.clone();
        }
        let v = vec![p.clone()];
        let gb_vecs: Vec<VectorElem<F>> =
            self.defining_gb.iter().map(|g| vec![g.clone()]).collect();
        groebner::normal_form_vectors(&self.ambient, ModuleOrder::TermOverPosition, &gb_vecs, &v)
            .remove(0)
    }

    /// Parse text into a canonical ring element.
    pub fn parse(&self, src: &str) -> Result<Polynomial<F>> {
        let p = parse_polynomial_ambient(&self.ambient, src)?;
        Ok(self.reduce(&p))
    }

    pub fn render(&self, p: &Polynomial<F>) -> String {
        self.ambient.render(p)
    }

    /// Ring arithmetic: operate in the ambient ring, then reduce.
    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.ambient.add(a, b)
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.ambient.sub(a, b)
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        self.ambient.neg(a)
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.reduce(&self.ambient.mul(a, b))
    }

    pub fn scalar_mul(&self, c: &F, a: &Polynomial<F>) -> Polynomial<F> {
        self.ambient.scalar_mul(c, a)
    }

    pub fn describe(&self) -> String {
        let vars = self.ambient.vars().join(",");
        if self.defining_ideal.is_empty() {
            format!("k[{}]", vars)
        } else {
            let gens: Vec<String> = self
                .defining_ideal
                .iter()
                .map(|p| self.ambient.render(p))
                .collect();
            format!("k[{}]/({})", vars, gens.join(", "))
        }
    }

    /// Check the stored basis invariant: the defining generators and the
    /// stored basis reduce to zero against each other. Cheap; used in tests.
    pub fn verify_defining_gb(&self) -> Result<()> {
        let gb_vecs: Vec<VectorElem<F>> =
            self.defining_gb.iter().map(|g| vec![g.clone()]).collect();
        for p in &self.defining_ideal {
            let nf = groebner::normal_form_vectors(
                &self.ambient,
                ModuleOrder::TermOverPosition,
                &gb_vecs,
                std::slice::from_ref(p),
            );
            if !nf[0].is_zero() {
                return Err(EngineError::Internal(
                    "defining generator does not reduce to zero against the stored basis".into(),
                ));
            }
        }
        let gen_gb = groebner::buchberger(
            &self.ambient,
            ModuleOrder::TermOverPosition,
            &[0],
            &self
                .defining_ideal
                .iter()
                .map(|p| vec![p.clone()])
                .collect::<Vec<_>>(),
        )?;
        for e in &self.defining_gb {
            if !gen_gb.contains(std::slice::from_ref(e))? {
                return Err(EngineError::Internal(
                    "stored basis element is not in the defining ideal".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Two modules (or other values) must live over literally the same ring.
pub fn same_ring<F: Field>(a: &Arc<QuotientRing<F>>, b: &Arc<QuotientRing<F>>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(EngineError::RingMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf32003;

    fn hypersurface() -> Arc<QuotientRing<Gf32003>> {
        QuotientRing::new(&["x", "y", "z", "w"], MonomialOrder::GrevLex, &["x*y"], false)
            .unwrap()
    }

    #[test]
    fn parse_reduces_to_normal_form() {
        let r = hypersurface();
        assert!(r.parse("x*y").unwrap().is_zero());
        assert!(r.parse("x^2*y - x*(x*y)").unwrap().is_zero());
        let p = r.parse("x*y + z^2").unwrap();
        assert_eq!(r.render(&p), "z^2");
    }

    #[test]
    fn quotient_arithmetic() {
        let r2: Arc<QuotientRing<Gf32003>> =
            QuotientRing::new(&["x", "y"], MonomialOrder::GrevLex, &["x*y"], false).unwrap();
        let s = r2.parse("x + y").unwrap();
        let sq = r2.mul(&s, &s);
        assert_eq!(r2.render(&sq), "x^2 + y^2");
        let r = hypersurface();
        assert!(r.mul(&r.parse("x").unwrap(), &r.parse("y").unwrap()).is_zero());
        let half = Gf32003::from_fraction(1, 2).unwrap();
        let scaled = r.scalar_mul(&half, &r.parse("2*z").unwrap());
        assert_eq!(r.render(&scaled), "z");
    }

    #[test]
    fn construction_invariants() {
        let r = hypersurface();
        r.verify_defining_gb().unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.codim(), 1);
        assert!(r.is_complete_intersection());
        assert_eq!(r.describe(), "k[x,y,z,w]/(x*y)");
        // redundant generators do not fool the codimension count
        let padded: Arc<QuotientRing<Gf32003>> = QuotientRing::new(
            &["x", "y", "z", "w"],
            MonomialOrder::GrevLex,
            &["x*y", "x^2*y"],
            false,
        )
        .unwrap();
        assert!(padded.is_complete_intersection());
        // a unit in the defining ideal is rejected
        let unit = QuotientRing::<Gf32003>::new(
            &["x", "y"],
            MonomialOrder::GrevLex,
            &["x - x + 1"],
            false,
        );
        assert!(matches!(unit, Err(EngineError::UnsupportedRing(_))));
        // inhomogeneous defining polynomials are rejected
        let inhom = QuotientRing::<Gf32003>::new(
            &["x", "y"],
            MonomialOrder::GrevLex,
            &["x^2 + y"],
            false,
        );
        assert!(matches!(inhom, Err(EngineError::NonHomogeneous(_))));
    }

    #[test]
    fn ring_mismatch_detected() {
        let a = hypersurface();
        let b: Arc<QuotientRing<Gf32003>> =
            QuotientRing::new(&["x", "y", "z", "w"], MonomialOrder::GrevLex, &["x*z"], false)
                .unwrap();
        assert_eq!(same_ring(&a, &b), Err(EngineError::RingMismatch));
        let a2 = hypersurface();
        assert!(same_ring(&a, &a2).is_ok());
    }
}
