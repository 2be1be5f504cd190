//! Minimal free resolutions, Betti tables, syzygy modules, the transpose
//! construction, Tor and Ext, projective dimension, depth and grade.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::fpmod::{present_subquotient, FPModule, FreeModule};
use crate::groebner::{self, VectorElem};
use crate::ideal::Ideal;
use crate::matrix::{self, Matrix};
use crate::ring::QuotientRing;

/// One step of a resolution: the differential `d_i : F_i -> F_{i-1}` stored
/// with its source.
#[derive(Clone, Debug)]
pub struct ResStep<F: Field> {
    pub source: FreeModule,
    pub matrix: Matrix<F>,
}

/// A minimal graded free resolution computed up to a length bound. The
/// differential entries all lie in the irrelevant maximal ideal and
/// consecutive differentials compose to zero exactly.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    f0: FreeModule,
    steps: Vec<ResStep<F>>,
    terminated: bool,
}

impl<F: Field> Resolution<F> {
    pub fn f0(&self) -> &FreeModule {
        &self.f0
    }

    /// Number of computed differentials.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// True when the last computed syzygy module is zero, so the resolution
    /// is complete.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    pub fn free_module(&self, i: usize) -> Option<&FreeModule> {
        if i == 0 {
            Some(&self.f0)
        } else {
            self.steps.get(i - 1).map(|s| &s.source)
        }
    }

    pub fn rank(&self, i: usize) -> usize {
        self.free_module(i).map(|f| f.rank()).unwrap_or(0)
    }

    /// The differential `d_i : F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Option<&ResStep<F>> {
        if i == 0 {
            None
        } else {
            self.steps.get(i - 1)
        }
    }

    pub fn betti_numbers(&self, upto: usize) -> Vec<usize> {
        (0..=upto).map(|i| self.rank(i)).collect()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries: BTreeMap<(usize, i64), usize> = BTreeMap::new();
        for i in 0..=self.len() {
            if let Some(f) = self.free_module(i) {
                for &j in &f.twists {
                    *entries.entry((i, j)).or_insert(0) += 1;
                }
            }
        }
        BettiTable { entries: entries.into_iter().map(|((i, j), c)| (i, j, c)).collect() }
    }
}

/// Graded Betti numbers `(homological index, internal degree) -> count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub entries: Vec<(usize, i64, usize)>,
}

impl BettiTable {
    pub fn entry(&self, i: usize, j: i64) -> usize {
        self.entries
            .iter()
            .find(|(a, b, _)| *a == i && *b == j)
            .map(|(_, _, c)| *c)
            .unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|(a, _, _)| *a == i)
            .map(|(_, _, c)| c)
            .sum()
    }

    pub fn max_index(&self) -> usize {
        self.entries.iter().map(|(i, _, _)| *i).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for BettiTable {
    /// Conventional staircase layout: row `r` holds the counts in degree
    /// `i + r` for each column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero)");
        }
        let maxi = self.max_index();
        let rmin = self
            .entries
            .iter()
            .map(|(i, j, _)| j - *i as i64)
            .min()
            .unwrap();
        let rmax = self
            .entries
            .iter()
            .map(|(i, j, _)| j - *i as i64)
            .max()
            .unwrap();
        write!(f, "{:>7}:", "")?;
        for i in 0..=maxi {
            write!(f, "{:>5}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>7}:", "total")?;
        for i in 0..=maxi {
            write!(f, "{:>5}", self.total(i))?;
        }
        writeln!(f)?;
        for r in rmin..=rmax {
            write!(f, "{:>7}:", r)?;
            for i in 0..=maxi {
                let c = self.entry(i, r + i as i64);
                if c == 0 {
                    write!(f, "{:>5}", ".")?;
                } else {
                    write!(f, "{:>5}", c)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compute (or extend, via the per-ring memo) the minimal free resolution of
/// `m` out to `len` differentials, stopping early on termination.
pub fn resolve<F: Field>(m: &FPModule<F>, len: usize) -> Result<Arc<Resolution<F>>> {
    let ring = m.ring().clone();
    let m0 = m.minimalize()?;
    let key = m0.fingerprint();
    {
        let memo = ring.res_memo.lock().expect("memo lock");
        if let Some(res) = memo.get(&key) {
            if res.terminated || res.steps.len() >= len {
                return Ok(res.clone());
            }
        }
    }
    // build or extend outside the lock, then install
    let (mut f0, mut steps, mut terminated) = {
        let memo = ring.res_memo.lock().expect("memo lock");
        match memo.get(&key) {
            Some(res) => (res.f0.clone(), res.steps.clone(), res.terminated),
            None => (m0.target().clone(), Vec::new(), false),
        }
    };
    if steps.is_empty() && !terminated {
        if m0.source().rank() == 0 {
            terminated = true;
        } else {
            steps.push(ResStep { source: m0.source().clone(), matrix: m0.matrix().clone() });
        }
        f0 = m0.target().clone();
    }
    while !terminated && steps.len() < len {
        let ambient_twists: Vec<i64> = if steps.len() == 1 {
            f0.twists.clone()
        } else {
            steps[steps.len() - 2].source.twists.clone()
        };
        let last = steps.last().unwrap();
        let gens = matrix::columns(&last.matrix, last.source.rank());
        let syz = groebner::syzygies_over_ring(&ring, &ambient_twists, &gens)?;
        let cur_twists = last.source.twists.clone();
        let idx = groebner::minimal_generator_indices(&ring, &cur_twists, &syz)?;
        if idx.is_empty() {
            terminated = true;
            break;
        }
        let kept: Vec<VectorElem<F>> = idx.iter().map(|&i| syz[i].clone()).collect();
        let amb = ring.ambient();
        let mut next_twists = Vec::with_capacity(kept.len());
        for v in &kept {
            next_twists.push(groebner::vec_degree(amb, &cur_twists, v)?.unwrap());
        }
        let mat = matrix::from_columns(cur_twists.len(), &kept);
        steps.push(ResStep { source: FreeModule::new(next_twists), matrix: mat });
    }
    let res = Arc::new(Resolution { f0, steps, terminated });
    let mut memo = ring.res_memo.lock().expect("memo lock");
    let entry = memo.entry(key).or_insert_with(|| res.clone());
    if res.steps.len() > entry.steps.len() || (res.terminated && !entry.terminated) {
        *entry = res.clone();
    }
    Ok(entry.clone())
}

/// Check `d o d = 0` and minimality for every computed differential.
pub fn verify_resolution<F: Field>(res: &Resolution<F>, ring: &Arc<QuotientRing<F>>) -> Result<()> {
    for i in 1..=res.len() {
        let d = res.differential(i).unwrap();
        for row in &d.matrix {
            for e in row {
                if e.as_unit().is_some() {
                    return Err(EngineError::Internal(format!(
                        "differential {} has a unit entry",
                        i
                    )));
                }
            }
        }
        if let Some(dn) = res.differential(i + 1) {
            let rows = res.rank(i - 1);
            let prod = matrix::mat_mul(ring, &d.matrix, &dn.matrix, rows, res.rank(i), res.rank(i + 1));
            if !matrix::is_zero_matrix(&prod) {
                return Err(EngineError::Internal(format!(
                    "d_{} o d_{} is nonzero",
                    i,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

/// Exactness probe at homological position `i >= 1`: syzygies of the columns
/// of `d_i` modulo the columns of `d_{i+1}`.
pub fn resolution_exact_at<F: Field>(
    res: &Resolution<F>,
    ring: &Arc<QuotientRing<F>>,
    i: usize,
) -> Result<bool> {
    let d = match res.differential(i) {
        None => return Ok(true),
        Some(d) => d,
    };
    let ambient_twists = res.free_module(i - 1).unwrap().twists.clone();
    let gens = matrix::columns(&d.matrix, d.source.rank());
    let syz = groebner::syzygies_over_ring(ring, &ambient_twists, &gens)?;
    let denoms = match res.differential(i + 1) {
        None => Vec::new(),
        Some(dn) => matrix::columns(&dn.matrix, dn.source.rank()),
    };
    if syz.is_empty() {
        return Ok(true);
    }
    let h = present_subquotient(ring, &d.source.twists, &syz, &denoms)?;
    Ok(h.is_zero())
}

/// The transpose construction: the cokernel of the dualized minimal
/// presentation `F0* -> F1*`. Free modules transpose to zero.
pub fn transpose<F: Field>(m: &FPModule<F>) -> Result<FPModule<F>> {
    let mp = m.minimalize()?;
    let target = mp.source().dual();
    let source = mp.target().dual();
    let mat = matrix::transpose(mp.matrix(), mp.target().rank(), mp.source().rank());
    FPModule::new(m.ring(), target, source, mat)
}

/// The syzygy module `Omega^n(M)`, presented as the cokernel of `d_{n+1}`.
pub fn syzygy_module<F: Field>(m: &FPModule<F>, n: usize) -> Result<FPModule<F>> {
    if n == 0 {
        return m.minimalize();
    }
    let res = resolve(m, n + 1)?;
    let fn_rank = res.rank(n);
    if fn_rank == 0 {
        return Ok(FPModule::zero_module(m.ring()));
    }
    let target = res.free_module(n).unwrap().clone();
    match res.differential(n + 1) {
        Some(d) => FPModule::new(m.ring(), target, d.source.clone(), d.matrix.clone()),
        None => Ok(FPModule::free(m.ring(), target.twists)),
    }
}

/// Projective dimension detection up to a bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PdResult {
    Finite(usize),
    AtLeast(usize),
}

impl PdResult {
    pub fn render(&self) -> String {
        match self {
            PdResult::Finite(n) => format!("finite({})", n),
            PdResult::AtLeast(n) => format!("atleast({})", n),
        }
    }
}

impl fmt::Display for PdResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

pub fn pd<F: Field>(m: &FPModule<F>, bound: usize) -> Result<PdResult> {
    let res = resolve(m, bound)?;
    if res.terminated() && res.len() <= bound {
        Ok(PdResult::Finite(res.len()))
    } else {
        Ok(PdResult::AtLeast(bound))
    }
}

/// `F (x) N` for a free module `F`: one shifted copy of `N` per generator.
fn free_tensor<F: Field>(n: &FPModule<F>, free: &FreeModule) -> FPModule<F> {
    let (tn, sn) = (n.target().rank(), n.source().rank());
    let mut tgt = Vec::with_capacity(free.rank() * tn);
    let mut src = Vec::with_capacity(free.rank() * sn);
    for c in &free.twists {
        for t in &n.target().twists {
            tgt.push(t + c);
        }
        for s in &n.source().twists {
            src.push(s + c);
        }
    }
    let mut mat = matrix::zero_matrix(free.rank() * tn, free.rank() * sn);
    for g in 0..free.rank() {
        for i in 0..tn {
            for j in 0..sn {
                mat[g * tn + i][g * sn + j] = n.matrix()[i][j].clone();
            }
        }
    }
    FPModule::new(n.ring(), FreeModule::new(tgt), FreeModule::new(src), mat)
        .expect("free tensor is degree-consistent")
}

/// `d (x) id_N` on the free covers: block-scalar matrix.
fn tensor_map<F: Field>(d: &Matrix<F>, rows: usize, cols: usize, tn: usize) -> Matrix<F> {
    let mut out = matrix::zero_matrix(rows * tn, cols * tn);
    for i in 0..rows {
        for g in 0..cols {
            if d[i][g].is_zero() {
                continue;
            }
            for k in 0..tn {
                out[i * tn + k][g * tn + k] = d[i][g].clone();
            }
        }
    }
    out
}

/// `Hom(d, N)`: for `d : F_{i+1} -> F_i` the induced map
/// `Hom(F_i, N) -> Hom(F_{i+1}, N)` is the transposed block-scalar matrix.
fn hom_map<F: Field>(d: &Matrix<F>, rows_d: usize, cols_d: usize, tn: usize) -> Matrix<F> {
    let mut out = matrix::zero_matrix(cols_d * tn, rows_d * tn);
    for g in 0..rows_d {
        for j in 0..cols_d {
            if d[g][j].is_zero() {
                continue;
            }
            for k in 0..tn {
                out[j * tn + k][g * tn + k] = d[g][j].clone();
            }
        }
    }
    out
}

/// Homology `ker(g) / im(f)` at a module `y` in a complex
/// `x --f--> y --g--> z`, where the maps are given on the free covers.
/// Either side may be absent (treated as the zero module).
fn homology_at<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    y: &FPModule<F>,
    g_to_z: Option<(&FPModule<F>, &Matrix<F>)>,
    f_cols: Vec<VectorElem<F>>,
) -> Result<FPModule<F>> {
    let ry = y.target().rank();
    // generators of the preimage of the relations of z under g
    let kernel_gens: Vec<VectorElem<F>> = match g_to_z {
        None => unit_vectors(ring, ry),
        Some((z, _)) if z.target().rank() == 0 => unit_vectors(ring, ry),
        Some((z, gmat)) => {
            let mut list = matrix::columns(gmat, ry);
            let ncols = list.len();
            list.extend(z.columns());
            groebner::syzygies_over_ring(ring, &z.target().twists, &list)?
                .into_iter()
                .map(|v| v[..ncols].to_vec())
                .filter(|v| !groebner::vec_is_zero(v))
                .collect()
        }
    };
    let mut denoms = f_cols;
    denoms.extend(y.columns());
    let h = present_subquotient(ring, &y.target().twists, &kernel_gens, &denoms)?;
    h.minimalize()
}

fn unit_vectors<F: Field>(ring: &Arc<QuotientRing<F>>, rank: usize) -> Vec<VectorElem<F>> {
    (0..rank)
        .map(|i| {
            let mut e = groebner::vec_zero::<F>(rank);
            e[i] = ring.ambient().one();
            e
        })
        .collect()
}

/// Resolve `m` far enough to read homological degree `i`, respecting the
/// resolution bound: beyond the bound only a terminated resolution may be
/// used, otherwise the computation is refused rather than silently truncated.
fn resolve_for_index<F: Field>(
    m: &FPModule<F>,
    i: usize,
    bound: usize,
    what: &str,
) -> Result<Arc<Resolution<F>>> {
    let want = i + 1;
    if want <= bound {
        resolve(m, want)
    } else {
        let res = resolve(m, bound)?;
        if res.terminated() {
            Ok(res)
        } else {
            Err(EngineError::BoundExceeded { what: what.to_string(), bound })
        }
    }
}

/// `Tor_i(M, N)`: homology of `resolve(M) (x) N` at position `i`, returned
/// minimalized.
pub fn tor<F: Field>(
    m: &FPModule<F>,
    n: &FPModule<F>,
    i: usize,
    bound: usize,
) -> Result<FPModule<F>> {
    crate::ring::same_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    if i == 0 {
        return m.tensor(n)?.minimalize();
    }
    let res = resolve_for_index(m, i, bound, &format!("Tor_{}", i))?;
    if res.rank(i) == 0 {
        return Ok(FPModule::zero_module(ring));
    }
    let tn = n.target().rank();
    let fi = res.free_module(i).unwrap();
    let y = free_tensor(n, fi);
    let d_i = res.differential(i).unwrap();
    let z = free_tensor(n, res.free_module(i - 1).unwrap());
    let gmat = tensor_map(&d_i.matrix, res.rank(i - 1), res.rank(i), tn);
    let f_cols = match res.differential(i + 1) {
        None => Vec::new(),
        Some(dn) => {
            let fmat = tensor_map(&dn.matrix, res.rank(i), res.rank(i + 1), tn);
            matrix::columns(&fmat, res.rank(i + 1) * tn)
        }
    };
    homology_at(ring, &y, Some((&z, &gmat)), f_cols)
}

/// `Ext^i(M, N)`: cohomology of `Hom(resolve(M), N)` at position `i`,
/// returned minimalized.
pub fn ext<F: Field>(
    m: &FPModule<F>,
    n: &FPModule<F>,
    i: usize,
    bound: usize,
) -> Result<FPModule<F>> {
    crate::ring::same_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    let res = resolve_for_index(m, i, bound, &format!("Ext^{}", i))?;
    if res.rank(i) == 0 {
        return Ok(FPModule::zero_module(ring));
    }
    let tn = n.target().rank();
    let fi = res.free_module(i).unwrap();
    let w_i = n.hom_from_free(fi);
    // outgoing map to Hom(F_{i+1}, N)
    let out_map = res.differential(i + 1).map(|dn| {
        let w_next = n.hom_from_free(&dn.source);
        let psi = hom_map(&dn.matrix, res.rank(i), res.rank(i + 1), tn);
        (w_next, psi)
    });
    // incoming map from Hom(F_{i-1}, N)
    let f_cols = if i >= 1 {
        let d_i = res.differential(i).unwrap();
        let psi_prev = hom_map(&d_i.matrix, res.rank(i - 1), res.rank(i), tn);
        matrix::columns(&psi_prev, res.rank(i - 1) * tn)
    } else {
        Vec::new()
    };
    match &out_map {
        Some((w_next, psi)) => homology_at(ring, &w_i, Some((w_next, psi)), f_cols),
        None => homology_at(ring, &w_i, None, f_cols),
    }
}

/// Depth and grade values, with the absorbing convention `depth(0) = inf`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DepthValue {
    Finite(u32),
    Infinite,
}

impl DepthValue {
    pub fn add(self, other: DepthValue) -> DepthValue {
        match (self, other) {
            (DepthValue::Finite(a), DepthValue::Finite(b)) => DepthValue::Finite(a + b),
            _ => DepthValue::Infinite,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, DepthValue::Infinite)
    }

    pub fn render(&self) -> String {
        match self {
            DepthValue::Finite(n) => n.to_string(),
            DepthValue::Infinite => "infinity".to_string(),
        }
    }
}

impl fmt::Display for DepthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `depth(M) = min { i : Ext^i(k, M) != 0 }` with `k` the residue field at
/// the irrelevant maximal ideal; `depth(0) = inf`. The search stops at
/// `dim R + 1`, which is always enough for a nonzero module.
pub fn depth<F: Field>(m: &FPModule<F>) -> Result<DepthValue> {
    if m.is_zero() {
        return Ok(DepthValue::Infinite);
    }
    let ring = m.ring();
    let k = FPModule::residue_field(ring)?;
    let limit = ring.dim() + 1;
    for i in 0..=limit {
        let e = ext(&k, m, i as usize, (limit + 1) as usize)?;
        if !e.is_zero() {
            return Ok(DepthValue::Finite(i));
        }
    }
    Err(EngineError::Internal(
        "depth search exhausted dim R + 1 for a nonzero module".into(),
    ))
}

/// `grade(I, M) = min { i : Ext^i(R/I, M) != 0 }`; infinity exactly when the
/// search up to `dim R + 1` finds nothing (e.g. `M = 0` or `I = R`).
pub fn grade<F: Field>(ideal: &Ideal<F>, m: &FPModule<F>) -> Result<DepthValue> {
    if m.is_zero() {
        return Ok(DepthValue::Infinite);
    }
    let ring = m.ring();
    let cyc = FPModule::cyclic(ideal)?;
    if cyc.is_zero() {
        return Ok(DepthValue::Infinite);
    }
    let limit = ring.dim() + 1;
    for i in 0..=limit {
        let e = ext(&cyc, m, i as usize, (limit + 1) as usize)?;
        if !e.is_zero() {
            return Ok(DepthValue::Finite(i));
        }
    }
    Ok(DepthValue::Infinite)
}

/// Early-exit variant: is `grade(I, M) >= t`?
pub fn grade_at_least<F: Field>(ideal: &Ideal<F>, m: &FPModule<F>, t: u32) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let cyc = FPModule::cyclic(ideal)?;
    if cyc.is_zero() {
        return Ok(true);
    }
    let limit = m.ring().dim() + 2;
    for i in 0..t {
        let e = ext(&cyc, m, i as usize, limit as usize)?;
        if !e.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
