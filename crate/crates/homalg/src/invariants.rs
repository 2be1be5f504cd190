//! Module-level predicates built on the homological core: dimension, height
//! and support, torsion, Serre conditions via the transpose, rank, local
//! freeness through Fitting ideals, the depth formula, and Tor-rigidity
//! violation witnesses.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::fpmod::FPModule;
use crate::homology::{self, DepthValue, PdResult};
use crate::ideal::Ideal;
use crate::ring::{same_ring, QuotientRing};

/// Krull dimension of a module; errors on the zero module.
pub fn dim_module<F: Field>(m: &FPModule<F>) -> Result<u32> {
    m.dimension()?
        .ok_or_else(|| EngineError::ZeroModule("dimension".into()))
}

/// Height of an ideal, via `height(p) = dim R - dim R/p`. Sound when the
/// ring is Cohen-Macaulay and equidimensional, so those flags are gated.
pub fn height<F: Field>(p: &Ideal<F>) -> Result<u32> {
    let ring = p.ring();
    if !ring_is_cohen_macaulay(ring)? || !ring.is_equidimensional() {
        return Err(EngineError::UnsupportedRing(
            "height requires a Cohen-Macaulay, equidimensional ring".into(),
        ));
    }
    if p.is_unit()? {
        return Err(EngineError::UnsupportedRing(
            "height of the unit ideal is undefined".into(),
        ));
    }
    let quotient = FPModule::cyclic(p)?;
    let dim_quot = quotient
        .dimension()?
        .expect("proper ideal has a nonzero quotient");
    Ok(ring.dim() - dim_quot)
}

/// Verified Cohen-Macaulay test: `depth R = dim R`. Memoized on the ring.
pub fn ring_is_cohen_macaulay<F: Field>(ring: &Arc<QuotientRing<F>>) -> Result<bool> {
    if let Some(&v) = ring.cm_cell().get() {
        return Ok(v);
    }
    let r_mod = FPModule::ring_module(ring);
    let d = match homology::depth(&r_mod)? {
        DepthValue::Finite(d) => d,
        DepthValue::Infinite => return Err(EngineError::Internal("depth(R) infinite".into())),
    };
    let v = d == ring.dim();
    let _ = ring.cm_cell().set(v);
    Ok(v)
}

/// Verified Gorenstein test: complete intersections qualify outright, and
/// otherwise the ring must be Cohen-Macaulay of type one.
pub fn ring_is_gorenstein<F: Field>(ring: &Arc<QuotientRing<F>>) -> Result<bool> {
    if let Some(&v) = ring.gorenstein_cell().get() {
        return Ok(v);
    }
    let cm = ring_is_cohen_macaulay(ring)?;
    let v = if !cm {
        false
    } else {
        let r_mod = FPModule::ring_module(ring);
        let d = match homology::depth(&r_mod)? {
            DepthValue::Finite(d) => d as usize,
            DepthValue::Infinite => unreachable!("ring module is nonzero"),
        };
        let k = FPModule::residue_field(ring)?;
        let top = homology::ext(&k, &r_mod, d, ring.dim() as usize + 2)?;
        // the type is the vector-space dimension of Ext^depth(k, R)
        let hf = top.hilbert_function(top.default_degree_bound())?;
        let total: u64 = hf.values.iter().sum();
        total == 1
    };
    let _ = ring.gorenstein_cell().set(v);
    Ok(v)
}

/// Does `Supp(M)` contain the prime `p`? Equivalent to `ann(M)` being
/// contained in `p`.
pub fn support_contains<F: Field>(m: &FPModule<F>, p: &Ideal<F>) -> Result<bool> {
    same_ring(m.ring(), p.ring())?;
    let ann = m.annihilator()?;
    p.contains_ideal(&ann)
}

/// A module is torsion when its annihilator contains a nonzerodivisor,
/// i.e. `grade(ann M, R) >= 1`.
pub fn is_torsion<F: Field>(m: &FPModule<F>) -> Result<bool> {
    let ann = m.annihilator()?;
    homology::grade_at_least(&ann, &FPModule::ring_module(m.ring()), 1)
}

/// Certificate for the Serre condition test through the transpose: the
/// vanishing pattern of `Ext^i(Tr M, R)` for `i = 1..n`.
#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    pub n: u32,
    pub holds: bool,
    /// `(i, vanished)` for each `1 <= i <= n` actually inspected; the scan
    /// stops at the first nonvanishing group.
    pub certificate: Vec<(u32, bool)>,
}

fn n_torsionfree_report<F: Field>(m: &FPModule<F>, n: u32) -> Result<SerreReport> {
    let ring = m.ring();
    let tr = homology::transpose(m)?;
    let r_mod = FPModule::ring_module(ring);
    let mut certificate = Vec::new();
    let mut holds = true;
    for i in 1..=n {
        let e = homology::ext(&tr, &r_mod, i as usize, (n + 2) as usize)?;
        let vanished = e.is_zero();
        certificate.push((i, vanished));
        if !vanished {
            holds = false;
            break;
        }
    }
    Ok(SerreReport { n, holds, certificate })
}

/// Serre condition `(S_n)` via `n`-torsionfreeness. For `n >= 1` the
/// identification requires a Gorenstein ring, which is verified and
/// otherwise reported as an unsupported-ring error naming the gate.
pub fn serre<F: Field>(m: &FPModule<F>, n: u32) -> Result<SerreReport> {
    if n == 0 {
        return Ok(SerreReport { n: 0, holds: true, certificate: vec![] });
    }
    if !ring_is_gorenstein(m.ring())? {
        return Err(EngineError::UnsupportedRing(format!(
            "serre({}) requires a Gorenstein ring (n-torsionfree gate)",
            n
        )));
    }
    n_torsionfree_report(m, n)
}

/// Torsionless = 1-torsionfree; valid over any ring.
pub fn is_torsionless<F: Field>(m: &FPModule<F>) -> Result<bool> {
    Ok(n_torsionfree_report(m, 1)?.holds)
}

/// Reflexive = 2-torsionfree; valid over any ring.
pub fn is_reflexive<F: Field>(m: &FPModule<F>) -> Result<bool> {
    Ok(n_torsionfree_report(m, 2)?.holds)
}

/// Rank through a finite free resolution: the alternating sum of the free
/// ranks. Only certified when the projective dimension is finite within the
/// bound.
pub fn rank<F: Field>(m: &FPModule<F>, bound: usize) -> Result<i64> {
    let res = homology::resolve(m, bound)?;
    if !res.terminated() {
        return Err(EngineError::RankUndefined(format!(
            "projective dimension not finite within bound {}",
            bound
        )));
    }
    let mut acc: i64 = 0;
    for i in 0..=res.len() {
        let r = res.rank(i) as i64;
        acc += if i % 2 == 0 { r } else { -r };
    }
    Ok(acc)
}

/// Rank estimate from Hilbert multiplicities: zero for lower-dimensional
/// modules, otherwise `mult(M)/mult(R)` when that ratio is an integer.
pub fn hs_rank<F: Field>(m: &FPModule<F>) -> Result<i64> {
    let ring = m.ring();
    let dim_m = match m.dimension()? {
        None => return Ok(0),
        Some(d) => d,
    };
    if dim_m < ring.dim() {
        return Ok(0);
    }
    let mult_m = m.multiplicity()?;
    let mult_r = FPModule::ring_module(ring).multiplicity()?;
    if mult_r == 0 || mult_m % mult_r != 0 {
        return Err(EngineError::RankUndefined(format!(
            "multiplicity ratio {}/{} is not an integer",
            mult_m, mult_r
        )));
    }
    Ok(mult_m / mult_r)
}

/// Local freeness at a declared prime, decided by Fitting ideals: with `j`
/// minimal such that `Fitt_j` is not contained in `p`, the module is free at
/// `p` exactly when `Fitt_{j-1}` localizes to zero there.
pub fn is_locally_free_at<F: Field>(m: &FPModule<F>, p: &Ideal<F>) -> Result<bool> {
    same_ring(m.ring(), p.ring())?;
    if p.is_unit()? {
        return Err(EngineError::UnsupportedRing(
            "localization at the unit ideal is undefined".into(),
        ));
    }
    let stripped = m.strip_units();
    let r0 = stripped.target().rank() as i64;
    let mut j = 0i64;
    loop {
        let fj = stripped.fitting_ideal(j)?;
        if !p.contains_ideal(&fj)? {
            break;
        }
        j += 1;
        debug_assert!(j <= r0, "Fitting chain ends at the unit ideal");
    }
    if j == 0 {
        return Ok(true);
    }
    let prev = stripped.fitting_ideal(j - 1)?;
    if prev.is_zero() {
        return Ok(true);
    }
    // Fitt_{j-1} localizes to zero at p iff its annihilator escapes p
    let annihilator = Ideal::zero(m.ring()).colon(&prev)?;
    Ok(!p.contains_ideal(&annihilator)?)
}

/// One non-free-locus component for the Fitting certificate of local
/// freeness away from a prime.
#[derive(Clone, Debug, Serialize)]
pub struct LocusCheck {
    pub j: i64,
    /// The component was certified empty or inside V(p).
    pub contained: bool,
    /// Power used in the capped radical-membership certificates, per
    /// generator of p (when needed).
    pub note: String,
}

/// Certify that the non-free locus of `m` lies inside `V(p)`: for each `j`,
/// `V(Fitt_{j-1} + ann Fitt_{j-1})` must be contained in `V(p)`, checked by
/// capped radical membership of the generators of `p`.
pub fn nonfree_locus_within<F: Field>(
    m: &FPModule<F>,
    p: &Ideal<F>,
    power_cap: u32,
) -> Result<(bool, Vec<LocusCheck>)> {
    same_ring(m.ring(), p.ring())?;
    let stripped = m.strip_units();
    let r0 = stripped.target().rank() as i64;
    let mut checks = Vec::new();
    let mut all = true;
    for j in 1..=r0 {
        let prev = stripped.fitting_ideal(j - 1)?;
        if prev.is_zero() {
            checks.push(LocusCheck { j, contained: true, note: "Fitting ideal is zero".into() });
            continue;
        }
        let ann = Ideal::zero(m.ring()).colon(&prev)?;
        let locus = prev.sum(&ann)?;
        if locus.is_unit()? {
            checks.push(LocusCheck { j, contained: true, note: "locus is empty".into() });
            continue;
        }
        let mut ok = true;
        let mut powers = Vec::new();
        for g in p.gens() {
            match locus.radical_contains(g, power_cap)? {
                Some(e) => powers.push(e),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            checks.push(LocusCheck {
                j,
                contained: true,
                note: format!("radical membership at powers {:?}", powers),
            });
        } else {
            all = false;
            checks.push(LocusCheck {
                j,
                contained: false,
                note: format!("not certified within power cap {}", power_cap),
            });
        }
    }
    Ok((all, checks))
}

/// Certified Tor-independence: finite projective dimension of one argument
/// plus vanishing of `Tor_1..Tor_pd`. `None` when neither side certifies.
pub fn tor_independent<F: Field>(
    m: &FPModule<F>,
    n: &FPModule<F>,
    bound: usize,
) -> Result<Option<bool>> {
    same_ring(m.ring(), n.ring())?;
    let sides = [(m, n), (n, m)];
    for (a, b) in sides {
        if let PdResult::Finite(d) = homology::pd(a, bound)? {
            for i in 1..=d {
                if !homology::tor(a, b, i, bound)?.is_zero() {
                    return Ok(Some(false));
                }
            }
            return Ok(Some(true));
        }
    }
    Ok(None)
}

/// Outcome of the depth-formula check
/// `depth M + depth N = depth R + depth(M (x) N)`.
#[derive(Clone, Debug)]
pub struct DepthFormulaReport {
    pub depth_m: DepthValue,
    pub depth_n: DepthValue,
    pub depth_ring: DepthValue,
    pub depth_tensor: DepthValue,
    /// Tor-independence was certified through a finite-pd argument. When
    /// false the whole report is advisory.
    pub certified: bool,
    /// The hypotheses failed outright (not Tor-independent, or a zero
    /// module): the formula is not asserted.
    pub applicable: bool,
    /// Some operand was infinite, making the equality vacuous.
    pub vacuous: bool,
    pub holds: Option<bool>,
}

impl DepthFormulaReport {
    pub fn summary(&self) -> String {
        format!(
            "depth(M)={} depth(N)={} depth(R)={} depth(MxN)={} certified={} holds={}",
            self.depth_m,
            self.depth_n,
            self.depth_ring,
            self.depth_tensor,
            self.certified,
            match self.holds {
                None => "n/a".to_string(),
                Some(b) => b.to_string(),
            }
        )
    }
}

pub fn check_depth_formula<F: Field>(
    m: &FPModule<F>,
    n: &FPModule<F>,
    bound: usize,
) -> Result<DepthFormulaReport> {
    same_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    let depth_m = homology::depth(m)?;
    let depth_n = homology::depth(n)?;
    let depth_ring = homology::depth(&FPModule::ring_module(ring))?;
    let tensor = m.tensor(n)?;
    let depth_tensor = homology::depth(&tensor)?;
    let indep = tor_independent(m, n, bound)?;
    let certified = indep == Some(true);
    let applicable = indep != Some(false) && !m.is_zero() && !n.is_zero();
    let vacuous = depth_m.is_infinite()
        || depth_n.is_infinite()
        || depth_ring.is_infinite()
        || depth_tensor.is_infinite();
    let holds = if !applicable {
        None
    } else if vacuous {
        Some(true)
    } else {
        Some(depth_m.add(depth_n) == depth_ring.add(depth_tensor))
    };
    Ok(DepthFormulaReport {
        depth_m,
        depth_n,
        depth_ring,
        depth_tensor,
        certified,
        applicable,
        vacuous,
        holds,
    })
}

/// A Tor-rigidity violation witness `Y = Tr(Omega^n(Tr N))` with
/// `Tor_1(Y, M) = 0` and `Tor_2(Y, M) != 0`.
#[derive(Clone, Debug)]
pub struct RigidityWitness<F: Field> {
    pub n: u32,
    pub witness: FPModule<F>,
    pub tor1_zero: bool,
    pub tor2_nonzero: bool,
}

/// Search `n = 1, 2` for a rigidity-violating witness against `m`.
pub fn rigidity_witness<F: Field>(
    m: &FPModule<F>,
    n_mod: &FPModule<F>,
    bound: usize,
) -> Result<Option<RigidityWitness<F>>> {
    same_ring(m.ring(), n_mod.ring())?;
    let tr_n = homology::transpose(n_mod)?;
    for n in 1u32..=2 {
        let omega = homology::syzygy_module(&tr_n, n as usize)?;
        let y = homology::transpose(&omega)?;
        if y.is_zero() {
            continue;
        }
        let tor1_zero = homology::tor(&y, m, 1, bound)?.is_zero();
        let tor2_nonzero = !homology::tor(&y, m, 2, bound)?.is_zero();
        if tor1_zero && tor2_nonzero {
            return Ok(Some(RigidityWitness { n, witness: y, tor1_zero, tor2_nonzero }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf32003;
    use crate::monomial::MonomialOrder;

    type R = Arc<QuotientRing<Gf32003>>;
    type M = FPModule<Gf32003>;

    fn hypersurface4() -> R {
        QuotientRing::new(&["x", "y", "z", "w"], MonomialOrder::GrevLex, &["x*y"], false)
            .unwrap()
    }

    fn vasconcelos_ring() -> R {
        QuotientRing::new(
            &["x", "y", "z"],
            MonomialOrder::GrevLex,
            &["x^2", "x*y", "y^2"],
            false,
        )
        .unwrap()
    }

    fn cyc(r: &R, gens: &[&str]) -> M {
        FPModule::cyclic(&Ideal::parse(r, gens).unwrap()).unwrap()
    }

    fn tr_rp(r: &R, gens: &[&str]) -> M {
        homology::transpose(&cyc(r, gens)).unwrap()
    }

    #[test]
    fn ring_flags() {
        let r = hypersurface4();
        assert!(r.is_complete_intersection());
        assert!(ring_is_cohen_macaulay(&r).unwrap());
        assert!(ring_is_gorenstein(&r).unwrap());
        assert!(r.is_equidimensional());
        let v = vasconcelos_ring();
        assert!(!v.is_complete_intersection());
        assert!(ring_is_cohen_macaulay(&v).unwrap());
        assert!(!ring_is_gorenstein(&v).unwrap());
    }

    #[test]
    fn dimension_height_support() {
        let r = hypersurface4();
        assert_eq!(dim_module(&FPModule::ring_module(&r)).unwrap(), 3);
        let p = Ideal::parse(&r, &["y", "z", "w"]).unwrap();
        assert_eq!(height(&p).unwrap(), 2);
        // ann(R/(x)) = (x) is not inside p
        assert!(!support_contains(&cyc(&r, &["x"]), &p).unwrap());
        assert!(support_contains(&cyc(&r, &["y"]), &p).unwrap());
        // the gate: a ring without verified flags rejects height
        let v = vasconcelos_ring();
        let q = Ideal::parse(&v, &["x", "y"]).unwrap();
        assert!(matches!(
            height(&q),
            Err(EngineError::UnsupportedRing(_))
        ));
    }

    #[test]
    fn torsion_detection() {
        let r = hypersurface4();
        assert!(is_torsion(&cyc(&r, &["y", "z", "w"])).unwrap());
        assert!(!is_torsion(&FPModule::free(&r, vec![0])).unwrap());
        assert!(is_torsion(&FPModule::zero_module(&r)).unwrap());
        // R/(x) is killed only by (x), which consists of zerodivisors
        assert!(!is_torsion(&cyc(&r, &["x"])).unwrap());
    }

    #[test]
    fn serre_conditions_for_counterexample_modules() {
        let r = hypersurface4();
        let m = cyc(&r, &["x"]);
        let n = tr_rp(&r, &["y", "z", "w"]);
        assert!(serre(&m, 2).unwrap().holds);
        assert!(serre(&m, 3).unwrap().holds);
        let tensor = m.tensor(&n).unwrap();
        assert!(serre(&tensor, 2).unwrap().holds);
        let s1 = serre(&n, 1).unwrap();
        assert!(s1.holds);
        assert_eq!(s1.certificate, vec![(1, true)]);
        let s2 = serre(&n, 2).unwrap();
        assert!(!s2.holds);
        assert_eq!(s2.certificate, vec![(1, true), (2, false)]);
        // free modules satisfy every condition
        for nn in 0..=3 {
            assert!(serre(&FPModule::ring_module(&r), nn).unwrap().holds);
        }
    }

    #[test]
    fn gorenstein_gate_and_ungated_predicates() {
        let v = vasconcelos_ring();
        let m = cyc(&v, &["x"]);
        assert!(matches!(
            serre(&m, 1),
            Err(EngineError::UnsupportedRing(_))
        ));
        // torsionless/reflexive do not need the gate; R/(x) here is the
        // classical torsion-free-but-not-torsionless module
        assert!(!is_torsionless(&m).unwrap());
        assert!(!is_reflexive(&m).unwrap());
    }

    #[test]
    fn rank_of_transpose_modules() {
        let r = hypersurface4();
        let n = tr_rp(&r, &["y", "z", "w"]);
        assert_eq!(rank(&n, 8).unwrap(), 2);
        assert_eq!(rank(&FPModule::free(&r, vec![0, 1, 5]), 8).unwrap(), 3);
        // infinite projective dimension refuses a rank
        assert!(matches!(
            rank(&cyc(&r, &["x"]), 8),
            Err(EngineError::RankUndefined(_))
        ));
        // the five-variable sibling example
        let r5: R = QuotientRing::new(
            &["x", "y", "z", "w", "u"],
            MonomialOrder::GrevLex,
            &["x*y"],
            false,
        )
        .unwrap();
        let n5 = tr_rp(&r5, &["x", "z", "w"]);
        assert_eq!(rank(&n5, 8).unwrap(), 2);
    }

    #[test]
    fn multiplicity_rank_of_dual() {
        // the dual of Tr(R/p) behaves like a rank-two module
        let r = hypersurface4();
        let n = tr_rp(&r, &["y", "z", "w"]);
        let dual = n.dual().unwrap();
        assert_eq!(hs_rank(&dual).unwrap(), 2);
        assert_eq!(hs_rank(&tr_rp(&r, &["y", "z", "w"])).unwrap(), 2);
        // torsion modules report rank zero
        assert_eq!(hs_rank(&cyc(&r, &["y", "z", "w"])).unwrap(), 0);
    }

    #[test]
    fn local_freeness_by_fitting_ideals() {
        let r = hypersurface4();
        let x_mod = cyc(&r, &["y", "z", "w"]);
        let p = Ideal::parse(&r, &["y", "z", "w"]).unwrap();
        let q = Ideal::parse(&r, &["x"]).unwrap();
        assert!(!is_locally_free_at(&x_mod, &p).unwrap());
        assert!(is_locally_free_at(&x_mod, &q).unwrap());
        assert!(is_locally_free_at(&FPModule::free(&r, vec![0, 1]), &p).unwrap());
        // the non-free locus of R/p sits inside V(p)
        let (ok, checks) = nonfree_locus_within(&x_mod, &p, 8).unwrap();
        assert!(ok, "checks: {:?}", checks);
    }

    #[test]
    fn depth_formula_on_counterexample_pair() {
        let r = hypersurface4();
        let m = cyc(&r, &["x"]);
        let n = tr_rp(&r, &["y", "z", "w"]);
        let report = check_depth_formula(&m, &n, 8).unwrap();
        assert!(report.certified);
        assert_eq!(report.depth_m, DepthValue::Finite(3));
        assert_eq!(report.depth_n, DepthValue::Finite(2));
        assert_eq!(report.depth_ring, DepthValue::Finite(3));
        assert_eq!(report.depth_tensor, DepthValue::Finite(2));
        assert_eq!(report.holds, Some(true));
        // trivial balance with a free module
        let trivial = check_depth_formula(&FPModule::ring_module(&r), &n, 8).unwrap();
        assert_eq!(trivial.holds, Some(true));
    }

    #[test]
    fn tor_independence_certificates() {
        let r = hypersurface4();
        let m = cyc(&r, &["x"]);
        let n = tr_rp(&r, &["y", "z", "w"]);
        assert_eq!(tor_independent(&m, &n, 8).unwrap(), Some(true));
        // R/(x) against R/(y): Tor_2 survives, and pd(R/(y)) is infinite,
        // so certification rides on the finite side if any; neither side
        // has finite pd here, so the answer is advisory
        let ny = cyc(&r, &["y"]);
        assert_eq!(tor_independent(&m, &ny, 4).unwrap(), None);
    }

    #[test]
    fn tensor_serre_descent_on_certified_instances() {
        // consequence check: with Tor-independence certified, M satisfying
        // (S_n) for n = depth(M), and the tensor satisfying (S_n), the
        // second factor satisfies (S_n). Instances failing a hypothesis are
        // vacuous and skipped; at least one instance must be exercised.
        let r = hypersurface4();
        let n_tr = tr_rp(&r, &["y", "z", "w"]);
        let instances: Vec<(M, M)> = vec![
            (cyc(&r, &["x"]), FPModule::free(&r, vec![2])),
            (FPModule::ring_module(&r), FPModule::free(&r, vec![0, 1])),
            // hypotheses fail here (the tensor is not (S_3)); kept to show
            // the filter is honest
            (cyc(&r, &["x"]), n_tr),
        ];
        let mut exercised = 0;
        for (m, n) in instances {
            if tor_independent(&m, &n, 8).unwrap() != Some(true) {
                continue;
            }
            let depth_m = match homology::depth(&m).unwrap() {
                DepthValue::Finite(d) => d,
                DepthValue::Infinite => continue,
            };
            if depth_m == 0 {
                continue;
            }
            let tensor = m.tensor(&n).unwrap();
            if !serre(&m, depth_m).unwrap().holds || !serre(&tensor, depth_m).unwrap().holds {
                continue;
            }
            exercised += 1;
            assert!(
                serre(&n, depth_m).unwrap().holds,
                "descent failed at n = {}",
                depth_m
            );
        }
        assert!(exercised >= 2);
    }

    #[test]
    fn second_rigidity_consistency() {
        // over a hypersurface, a reflexive tensor with a finite-rank factor
        // forces Tor-independence; the counterexample pair meets the
        // hypotheses and the certificate goes through
        let r = hypersurface4();
        assert!(r.is_complete_intersection() && r.codim() == 1);
        let n = tr_rp(&r, &["y", "z", "w"]);
        let m = cyc(&r, &["x"]);
        assert_eq!(rank(&n, 8).unwrap(), 2);
        assert!(is_reflexive(&m.tensor(&n).unwrap()).unwrap());
        assert_eq!(tor_independent(&m, &n, 8).unwrap(), Some(true));
        // contrast: with a non-reflexive tensor nothing is claimed, and
        // indeed Tor_2(R/(x), R/(y)) survives
        let ny = cyc(&r, &["y"]);
        assert!(!is_reflexive(&m.tensor(&ny).unwrap()).unwrap());
        assert!(!homology::tor(&m, &ny, 2, 8).unwrap().is_zero());
    }

    #[test]
    fn gate_consistency_on_gorenstein_rings() {
        let r = hypersurface4();
        let samples: Vec<M> = vec![
            cyc(&r, &["x"]),
            tr_rp(&r, &["y", "z", "w"]),
            FPModule::ring_module(&r),
            cyc(&r, &["y", "z", "w"]),
        ];
        for m in samples {
            assert_eq!(serre(&m, 1).unwrap().holds, is_torsionless(&m).unwrap());
            assert_eq!(serre(&m, 2).unwrap().holds, is_reflexive(&m).unwrap());
        }
    }

    #[test]
    fn grade_equals_height_for_scenario_primes() {
        let r4 = hypersurface4();
        let r5: R = QuotientRing::new(
            &["x", "y", "z", "w", "u"],
            MonomialOrder::GrevLex,
            &["x*y"],
            false,
        )
        .unwrap();
        let cases: Vec<(R, Vec<&str>)> = vec![
            (r4.clone(), vec!["y", "z", "w"]),
            (r4.clone(), vec!["x"]),
            (r5.clone(), vec!["x", "z", "w"]),
        ];
        for (ring, gens) in cases {
            let p = Ideal::parse(&ring, &gens).unwrap();
            let h = height(&p).unwrap();
            let g = homology::grade(&p, &FPModule::ring_module(&ring)).unwrap();
            assert_eq!(g, DepthValue::Finite(h), "grade/height split on {:?}", gens);
            let quot = FPModule::cyclic(&p).unwrap();
            assert_eq!(
                h + dim_module(&quot).unwrap(),
                ring.dim(),
                "height + dim(R/p) != dim R for {:?}",
                gens
            );
        }
    }

    #[test]
    fn rigidity_witness_for_counterexample_pair() {
        let r = hypersurface4();
        let m = cyc(&r, &["x"]);
        let n = tr_rp(&r, &["y", "z", "w"]);
        let w = rigidity_witness(&m, &n, 8).unwrap().expect("witness exists");
        assert!(w.tor1_zero && w.tor2_nonzero);
        // frozen after the first verified run
        assert_eq!(w.n, 2);
        // no witness against free modules or with a free partner
        assert!(rigidity_witness(&FPModule::ring_module(&r), &n, 8)
            .unwrap()
            .is_none());
        assert!(rigidity_witness(&m, &FPModule::free(&r, vec![0]), 8)
            .unwrap()
            .is_none());
    }
}
