//! Finitely presented graded modules `M = coker(matrix : F1 -> F0)` and the
//! constructions on them: minimal presentations, tensor, Hom and duals,
//! kernels/images/cokernels of maps, Fitting ideals, and Hilbert data.
//!
//! Modules are always cokernels. Kernels and subquotients are re-presented
//! through syzygy computations, so every operation returns another
//! presentation.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::groebner::{self, SubmoduleGB, VectorElem};
use crate::hilbert::{self, HilbertFunction, HilbertSeries};
use crate::ideal::Ideal;
use crate::matrix::{self, Matrix};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, QuotientRing};

/// A graded free module, described by its generator degrees: the module is
/// the direct sum of `R(-twists[i])`, so generator `i` sits in degree
/// `twists[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModule {
    pub twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        FreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn dual(&self) -> FreeModule {
        FreeModule { twists: self.twists.iter().map(|a| -a).collect() }
    }

    pub fn shift(&self, e: i64) -> FreeModule {
        FreeModule { twists: self.twists.iter().map(|a| a + e).collect() }
    }
}

/// A finitely presented graded module: the cokernel of a homogeneous matrix
/// between twisted free modules. Entry `(i, j)` is homogeneous of degree
/// `source.twists[j] - target.twists[i]`.
#[derive(Clone, Debug)]
pub struct FPModule<F: Field> {
    ring: Arc<QuotientRing<F>>,
    target: FreeModule,
    source: FreeModule,
    matrix: Matrix<F>,
}

impl<F: Field> FPModule<F> {
    pub fn new(
        ring: &Arc<QuotientRing<F>>,
        target: FreeModule,
        source: FreeModule,
        matrix: Matrix<F>,
    ) -> Result<Self> {
        if matrix.len() != target.rank() {
            return Err(EngineError::DegreeMismatch(format!(
                "presentation has {} rows for a target of rank {}",
                matrix.len(),
                target.rank()
            )));
        }
        let mut reduced = matrix;
        for (i, row) in reduced.iter_mut().enumerate() {
            if row.len() != source.rank() {
                return Err(EngineError::DegreeMismatch(format!(
                    "presentation row {} has {} columns for a source of rank {}",
                    i,
                    row.len(),
                    source.rank()
                )));
            }
            for (j, e) in row.iter_mut().enumerate() {
                *e = ring.reduce(e);
                if e.is_zero() {
                    continue;
                }
                ring.ambient().require_homogeneous(e, "presentation entry")?;
                let want = source.twists[j] - target.twists[i];
                if e.degree().unwrap() as i64 != want {
                    return Err(EngineError::DegreeMismatch(format!(
                        "entry ({}, {}) has degree {}, expected {}",
                        i,
                        j,
                        e.degree().unwrap(),
                        want
                    )));
                }
            }
        }
        Ok(FPModule { ring: ring.clone(), target, source, matrix: reduced })
    }

    /// Build from explicit column vectors living in the given target.
    pub fn from_columns(
        ring: &Arc<QuotientRing<F>>,
        target: FreeModule,
        cols: &[VectorElem<F>],
    ) -> Result<Self> {
        let amb = ring.ambient();
        let mut twists = Vec::with_capacity(cols.len());
        for c in cols {
            let d = groebner::vec_degree(amb, &target.twists, c)?.ok_or_else(|| {
                EngineError::DegreeMismatch("zero column in a presentation".into())
            })?;
            twists.push(d);
        }
        let matrix = matrix::from_columns(target.rank(), cols);
        FPModule::new(ring, target, FreeModule::new(twists), matrix)
    }

    /// The zero module, canonically presented on no generators.
    pub fn zero_module(ring: &Arc<QuotientRing<F>>) -> Self {
        FPModule {
            ring: ring.clone(),
            target: FreeModule::new(vec![]),
            source: FreeModule::new(vec![]),
            matrix: vec![],
        }
    }

    /// A twisted free module with no relations.
    pub fn free(ring: &Arc<QuotientRing<F>>, twists: Vec<i64>) -> Self {
        let rank = twists.len();
        FPModule {
            ring: ring.clone(),
            target: FreeModule::new(twists),
            source: FreeModule::new(vec![]),
            matrix: vec![vec![]; rank],
        }
    }

    /// The ring itself as a module.
    pub fn ring_module(ring: &Arc<QuotientRing<F>>) -> Self {
        Self::free(ring, vec![0])
    }

    /// The cyclic module `R/I`.
    pub fn cyclic(ideal: &Ideal<F>) -> Result<Self> {
        let ring = ideal.ring();
        let gens = ideal.gens();
        let twists: Vec<i64> = gens
            .iter()
            .map(|g| g.degree().expect("ideal generators are nonzero") as i64)
            .collect();
        let matrix = vec![gens.to_vec()];
        FPModule::new(ring, FreeModule::new(vec![0]), FreeModule::new(twists), matrix)
    }

    /// The residue field `k = R/m` as a module.
    pub fn residue_field(ring: &Arc<QuotientRing<F>>) -> Result<Self> {
        Self::cyclic(&Ideal::irrelevant(ring))
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn columns(&self) -> Vec<VectorElem<F>> {
        matrix::columns(&self.matrix, self.source.rank())
    }

    /// Shift the grading: `M(-e)` adds `e` to every generator degree.
    pub fn twist(&self, e: i64) -> FPModule<F> {
        FPModule {
            ring: self.ring.clone(),
            target: self.target.shift(e),
            source: self.source.shift(e),
            matrix: self.matrix.clone(),
        }
    }

    /// Groebner basis of the column module inside the target (with the
    /// defining ideal folded in).
    pub fn presentation_gb(&self) -> Result<SubmoduleGB<F>> {
        groebner::submodule_gb(&self.ring, &self.target.twists, &self.columns())
    }

    /// Strip unit entries by row/column cancellation; the result presents an
    /// isomorphic module on a minimal generating set. Pivots are chosen
    /// row-major, first unit found.
    pub fn strip_units(&self) -> FPModule<F> {
        let amb = self.ring.ambient();
        let mut mat = self.matrix.clone();
        let mut tgt = self.target.twists.clone();
        let mut src = self.source.twists.clone();
        loop {
            let mut pivot: Option<(usize, usize, F)> = None;
            'scan: for i in 0..tgt.len() {
                for j in 0..src.len() {
                    if let Some(u) = mat[i][j].as_unit() {
                        pivot = Some((i, j, u.clone()));
                        break 'scan;
                    }
                }
            }
            let (pi, pj, u) = match pivot {
                None => break,
                Some(p) => p,
            };
            let uinv = u.inv().expect("unit entry");
            // clear row pi by column operations, then drop row pi / col pj
            let pivot_col: Vec<Polynomial<F>> =
                (0..tgt.len()).map(|i| mat[i][pj].clone()).collect();
            for j in 0..src.len() {
                if j == pj || mat[pi][j].is_zero() {
                    continue;
                }
                let mult = amb.scalar_mul(&uinv, &mat[pi][j]);
                for (i, pc) in pivot_col.iter().enumerate() {
                    if pc.is_zero() {
                        continue;
                    }
                    let delta = self.ring.reduce(&amb.mul(&mult, pc));
                    mat[i][j] = self.ring.sub(&mat[i][j], &delta);
                }
            }
            mat.remove(pi);
            tgt.remove(pi);
            for row in mat.iter_mut() {
                row.remove(pj);
            }
            src.remove(pj);
        }
        // drop zero columns
        let keep: Vec<usize> = (0..src.len())
            .filter(|&j| mat.iter().any(|row| !row[j].is_zero()))
            .collect();
        let src_kept: Vec<i64> = keep.iter().map(|&j| src[j]).collect();
        let mat_kept: Matrix<F> = mat
            .iter()
            .map(|row| keep.iter().map(|&j| row[j].clone()).collect())
            .collect();
        FPModule {
            ring: self.ring.clone(),
            target: FreeModule::new(tgt),
            source: FreeModule::new(src_kept),
            matrix: mat_kept,
        }
    }

    /// Minimal presentation: minimal generators (no unit entries) and a
    /// minimal generating set of relation columns. This is the first step of
    /// the minimal free resolution.
    pub fn minimalize(&self) -> Result<FPModule<F>> {
        let stripped = self.strip_units();
        if stripped.source.rank() == 0 {
            return Ok(stripped);
        }
        let cols = stripped.columns();
        let idx = groebner::minimal_generator_indices(
            &self.ring,
            &stripped.target.twists,
            &cols,
        )?;
        let kept: Vec<VectorElem<F>> = idx.iter().map(|&j| cols[j].clone()).collect();
        let src = FreeModule::new(idx.iter().map(|&j| stripped.source.twists[j]).collect());
        let mat = matrix::from_columns(stripped.target.rank(), &kept);
        Ok(FPModule {
            ring: self.ring.clone(),
            target: stripped.target,
            source: src,
            matrix: mat,
        })
    }

    /// Zero test via minimalization: a graded module vanishes exactly when
    /// its minimal generating set is empty.
    pub fn is_zero(&self) -> bool {
        self.strip_units().target.rank() == 0
    }

    /// Minimal number of generators.
    pub fn min_gens(&self) -> usize {
        self.strip_units().target.rank()
    }

    pub fn direct_sum(&self, other: &FPModule<F>) -> Result<FPModule<F>> {
        same_ring(&self.ring, &other.ring)?;
        let mut tgt = self.target.twists.clone();
        tgt.extend(&other.target.twists);
        let mut src = self.source.twists.clone();
        src.extend(&other.source.twists);
        let (r1, c1) = (self.target.rank(), self.source.rank());
        let (r2, c2) = (other.target.rank(), other.source.rank());
        let mut mat = matrix::zero_matrix(r1 + r2, c1 + c2);
        for i in 0..r1 {
            for j in 0..c1 {
                mat[i][j] = self.matrix[i][j].clone();
            }
        }
        for i in 0..r2 {
            for j in 0..c2 {
                mat[r1 + i][c1 + j] = other.matrix[i][j].clone();
            }
        }
        FPModule::new(&self.ring, FreeModule::new(tgt), FreeModule::new(src), mat)
    }

    /// Tensor product: target `F0(M) (x) F0(N)`, source
    /// `F1(M) (x) F0(N) + F0(M) (x) F1(N)`, block matrix `(A (x) I | I (x) B)`.
    pub fn tensor(&self, other: &FPModule<F>) -> Result<FPModule<F>> {
        same_ring(&self.ring, &other.ring)?;
        let (ra, ca) = (self.target.rank(), self.source.rank());
        let (rb, cb) = (other.target.rank(), other.source.rank());
        let mut tgt = Vec::with_capacity(ra * rb);
        for a in &self.target.twists {
            for b in &other.target.twists {
                tgt.push(a + b);
            }
        }
        let mut src = Vec::with_capacity(ca * rb + ra * cb);
        for a in &self.source.twists {
            for b in &other.target.twists {
                src.push(a + b);
            }
        }
        for a in &self.target.twists {
            for b in &other.source.twists {
                src.push(a + b);
            }
        }
        let mut mat = matrix::zero_matrix(ra * rb, ca * rb + ra * cb);
        // A (x) I block
        for i in 0..ra {
            for j in 0..ca {
                if self.matrix[i][j].is_zero() {
                    continue;
                }
                for k in 0..rb {
                    mat[i * rb + k][j * rb + k] = self.matrix[i][j].clone();
                }
            }
        }
        // I (x) B block
        for k in 0..rb {
            for l in 0..cb {
                if other.matrix[k][l].is_zero() {
                    continue;
                }
                for i in 0..ra {
                    mat[i * rb + k][ca * rb + i * cb + l] = other.matrix[k][l].clone();
                }
            }
        }
        FPModule::new(&self.ring, FreeModule::new(tgt), FreeModule::new(src), mat)
    }

    /// `Hom(F, self)` for a free module `F`: a direct sum of shifted copies,
    /// one block per generator of `F`.
    pub fn hom_from_free(&self, free: &FreeModule) -> FPModule<F> {
        let (rt, rs) = (self.target.rank(), self.source.rank());
        let mut tgt = Vec::with_capacity(free.rank() * rt);
        let mut src = Vec::with_capacity(free.rank() * rs);
        for c in &free.twists {
            for t in &self.target.twists {
                tgt.push(t - c);
            }
            for s in &self.source.twists {
                src.push(s - c);
            }
        }
        let mut mat = matrix::zero_matrix(free.rank() * rt, free.rank() * rs);
        for g in 0..free.rank() {
            for i in 0..rt {
                for j in 0..rs {
                    mat[g * rt + i][g * rs + j] = self.matrix[i][j].clone();
                }
            }
        }
        FPModule {
            ring: self.ring.clone(),
            target: FreeModule::new(tgt),
            source: FreeModule::new(src),
            matrix: mat,
        }
    }

    /// `Hom(M, N)` as the kernel of the induced map
    /// `Hom(F0(M), N) -> Hom(F1(M), N)`.
    pub fn hom(&self, other: &FPModule<F>) -> Result<FPModule<F>> {
        same_ring(&self.ring, &other.ring)?;
        let x = other.hom_from_free(&self.target);
        let y = other.hom_from_free(&self.source);
        let rt = other.target.rank();
        let mut phi = matrix::zero_matrix(self.source.rank() * rt, self.target.rank() * rt);
        for i in 0..self.target.rank() {
            for j in 0..self.source.rank() {
                if self.matrix[i][j].is_zero() {
                    continue;
                }
                for k in 0..rt {
                    phi[j * rt + k][i * rt + k] = self.matrix[i][j].clone();
                }
            }
        }
        let map = ModuleMap::new_unchecked(x, y, phi);
        map.kernel()
    }

    /// `dual(M) = Hom(M, R)`.
    pub fn dual(&self) -> Result<FPModule<F>> {
        self.hom(&FPModule::ring_module(&self.ring))
    }

    /// Fitting ideal `Fitt_j`: the ideal of `(rank F0 - j)`-minors of the
    /// presentation matrix. Presentation-independent.
    pub fn fitting_ideal(&self, j: i64) -> Result<Ideal<F>> {
        let r0 = self.target.rank() as i64;
        let k = r0 - j;
        if k <= 0 {
            return Ideal::new(&self.ring, vec![self.ring.ambient().one()]);
        }
        if k > r0 || k > self.source.rank() as i64 {
            return Ok(Ideal::zero(&self.ring));
        }
        let k = k as usize;
        let rows: Vec<usize> = (0..self.target.rank()).collect();
        let cols: Vec<usize> = (0..self.source.rank()).collect();
        let mut gens = Vec::new();
        for rs in combinations(&rows, k) {
            for cs in combinations(&cols, k) {
                let d = self.minor(&rs, &cs);
                if !d.is_zero() {
                    gens.push(d);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        // Laplace expansion along the first row of the selection
        fn det_rec<F: Field>(
            m: &FPModule<F>,
            rows: &[usize],
            cols: &[usize],
        ) -> Polynomial<F> {
            let amb = m.ring.ambient();
            if rows.len() == 1 {
                return m.matrix[rows[0]][cols[0]].clone();
            }
            let mut acc = Polynomial::zero();
            for (t, &c) in cols.iter().enumerate() {
                let e = &m.matrix[rows[0]][c];
                if e.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != t)
                    .map(|(_, &c)| c)
                    .collect();
                let sub = det_rec(m, &rows[1..], &sub_cols);
                let term = amb.mul(e, &sub);
                acc = if t % 2 == 0 {
                    amb.add(&acc, &term)
                } else {
                    amb.sub(&acc, &term)
                };
            }
            acc
        }
        let d = det_rec(self, rows, cols);
        self.ring.reduce(&d)
    }

    /// Annihilator of the module: the intersection over target generators of
    /// the colon modules `(column span : e_i)`.
    pub fn annihilator(&self) -> Result<Ideal<F>> {
        let r = self.target.rank();
        if r == 0 {
            return Ideal::new(&self.ring, vec![self.ring.ambient().one()]);
        }
        let cols = self.columns();
        let mut acc: Option<Ideal<F>> = None;
        for i in 0..r {
            // (U : e_i) from first coordinates of syzygies of [e_i, U]
            let mut e = groebner::vec_zero::<F>(r);
            e[i] = self.ring.ambient().one();
            // e_i is homogeneous of degree twists[i], so shift it into the
            // syzygy computation as-is
            let mut list: Vec<VectorElem<F>> = vec![e];
            list.extend(cols.iter().cloned());
            let syz = groebner::syzygies_over_ring(&self.ring, &self.target.twists, &list)?;
            let gens: Vec<Polynomial<F>> =
                syz.into_iter().map(|mut v| v.remove(0)).collect();
            let coln = Ideal::new(&self.ring, gens)?;
            acc = Some(match acc {
                None => coln,
                Some(prev) => prev.intersect(&coln)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Hilbert series from the lead-term module of the presentation.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let r = self.target.rank();
        if r == 0 {
            return Ok(HilbertSeries::new(
                self.ring.nvars(),
                hilbert::IntLaurent::zero(),
            ));
        }
        let gb = self.presentation_gb()?;
        let order = self.ring.order();
        let mut components: Vec<Vec<Monomial>> = vec![Vec::new(); r];
        for e in gb.basis().elements() {
            let (pos, t) = groebner::vec_lead(
                order,
                groebner::ModuleOrder::TermOverPosition,
                e,
            )
            .expect("basis elements nonzero");
            components[pos].push(t.mon.clone());
        }
        let numer = hilbert::module_numerator(&self.target.twists, &components);
        Ok(HilbertSeries::new(self.ring.nvars(), numer))
    }

    /// Default degree bound for Hilbert windows: max generator degree + 10.
    pub fn default_degree_bound(&self) -> i64 {
        self.target.twists.iter().copied().max().unwrap_or(0) + 10
    }

    pub fn min_twist(&self) -> i64 {
        self.target.twists.iter().copied().min().unwrap_or(0)
    }

    /// Hilbert function tabulated from the minimal generator degree up to
    /// `bound`.
    pub fn hilbert_function(&self, bound: i64) -> Result<HilbertFunction> {
        let series = self.hilbert_series()?;
        Ok(HilbertFunction::tabulate(&series, self.min_twist(), bound))
    }

    /// Krull dimension; `None` for the zero module.
    pub fn dimension(&self) -> Result<Option<u32>> {
        Ok(self.hilbert_series()?.dimension())
    }

    pub fn multiplicity(&self) -> Result<i64> {
        Ok(self.hilbert_series()?.multiplicity())
    }

    /// Restriction of scalars along a surjection `R -> S` of quotients of
    /// the same ambient ring (`S` a further quotient of `R`): re-present an
    /// `S`-module over `R` by augmenting the lifted presentation with the
    /// defining generators of `S` times each unit vector.
    pub fn restrict_to(&self, onto: &Arc<QuotientRing<F>>) -> Result<FPModule<F>> {
        if self.ring.ambient() != onto.ambient() {
            return Err(EngineError::AmbientMismatch(
                "restriction requires the same ambient variables and order".into(),
            ));
        }
        for g in onto.defining_ideal() {
            if !self.ring.reduce(g).is_zero() {
                return Err(EngineError::UnsupportedRing(
                    "restriction target is not an intermediate quotient".into(),
                ));
            }
        }
        let rank = self.target.rank();
        let mut cols: Vec<VectorElem<F>> = Vec::new();
        for c in self.columns() {
            let lifted: VectorElem<F> = c.iter().map(|p| onto.reduce(p)).collect();
            if !groebner::vec_is_zero(&lifted) {
                cols.push(lifted);
            }
        }
        for f in self.ring.defining_ideal() {
            let f_over_r = onto.reduce(f);
            if f_over_r.is_zero() {
                continue;
            }
            for i in 0..rank {
                let mut v = groebner::vec_zero::<F>(rank);
                v[i] = f_over_r.clone();
                cols.push(v);
            }
        }
        FPModule::from_columns(onto, self.target.clone(), &cols)
    }

    /// Canonical fingerprint of the presentation, used as a memo key.
    pub fn fingerprint(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "t{:?};s{:?};", self.target.twists, self.source.twists);
        for row in &self.matrix {
            for e in row {
                let _ = write!(s, "{},", self.ring.render(e));
            }
            s.push(';');
        }
        s
    }

    pub fn render(&self) -> String {
        format!(
            "coker({} x {} over {})",
            self.target.rank(),
            self.source.rank(),
            self.ring.describe()
        )
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// A homogeneous map of presented modules, given by a matrix between the
/// target free modules.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub src: FPModule<F>,
    pub dst: FPModule<F>,
    pub matrix: Matrix<F>, // dst.target.rank() rows x src.target.rank() cols
}

impl<F: Field> ModuleMap<F> {
    /// Construct and verify that the matrix is homogeneous of degree zero
    /// and induces a well-defined map: each relation of the source must land
    /// in the relation module of the destination.
    pub fn new(src: FPModule<F>, dst: FPModule<F>, mat: Matrix<F>) -> Result<Self> {
        same_ring(src.ring(), dst.ring())?;
        let ring = src.ring().clone();
        if mat.len() != dst.target().rank() {
            return Err(EngineError::DegreeMismatch(format!(
                "map matrix has {} rows for a destination of rank {}",
                mat.len(),
                dst.target().rank()
            )));
        }
        let mut reduced = mat;
        for (i, row) in reduced.iter_mut().enumerate() {
            if row.len() != src.target().rank() {
                return Err(EngineError::DegreeMismatch(format!(
                    "map matrix row {} has {} columns for a source of rank {}",
                    i,
                    row.len(),
                    src.target().rank()
                )));
            }
            for (j, e) in row.iter_mut().enumerate() {
                *e = ring.reduce(e);
                if e.is_zero() {
                    continue;
                }
                ring.ambient().require_homogeneous(e, "map entry")?;
                let want = src.target().twists[j] - dst.target().twists[i];
                if e.degree().unwrap() as i64 != want {
                    return Err(EngineError::DegreeMismatch(format!(
                        "map entry ({}, {}) has degree {}, expected {}",
                        i,
                        j,
                        e.degree().unwrap(),
                        want
                    )));
                }
            }
        }
        let m = ModuleMap::new_unchecked(src, dst, reduced);
        m.check_well_defined()?;
        Ok(m)
    }

    pub fn new_unchecked(src: FPModule<F>, dst: FPModule<F>, matrix: Matrix<F>) -> Self {
        ModuleMap { src, dst, matrix }
    }

    pub fn check_well_defined(&self) -> Result<()> {
        let ring = self.src.ring();
        let image_of_relations = matrix::mat_mul(
            ring,
            &self.matrix,
            self.src.matrix(),
            self.dst.target().rank(),
            self.src.target().rank(),
            self.src.source().rank(),
        );
        let gb = self.dst.presentation_gb()?;
        for j in 0..self.src.source().rank() {
            let col = matrix::column(&image_of_relations, j);
            if !gb.contains(&col)? {
                return Err(EngineError::MapNotWellDefined);
            }
        }
        Ok(())
    }

    /// Columns of the map matrix: images of the source generators.
    pub fn image_columns(&self) -> Vec<VectorElem<F>> {
        matrix::columns(&self.matrix, self.src.target().rank())
    }

    /// Kernel, presented on generators of the preimage of the destination's
    /// relation module.
    pub fn kernel(&self) -> Result<FPModule<F>> {
        let ring = self.src.ring();
        let rsrc = self.src.target().rank();
        // syzygies of [ Phi columns | P_dst columns ] in F0(dst)
        let mut list = self.image_columns();
        let ncols_phi = list.len();
        list.extend(self.dst.columns());
        let syz = if self.dst.target().rank() == 0 {
            // everything maps to zero: the preimage is all of F0(src)
            let mut units = Vec::new();
            for i in 0..rsrc {
                let mut e = groebner::vec_zero::<F>(rsrc);
                e[i] = ring.ambient().one();
                units.push(e);
            }
            units
        } else {
            groebner::syzygies_over_ring(ring, &self.dst.target().twists, &list)?
                .into_iter()
                .map(|v| v[..ncols_phi].to_vec())
                .collect()
        };
        let mut gens: Vec<VectorElem<F>> = Vec::new();
        for v in syz {
            if !groebner::vec_is_zero(&v) {
                gens.push(v);
            }
        }
        present_subquotient(
            ring,
            &self.src.target().twists,
            &gens,
            &self.src.columns(),
        )
    }

    /// Image, presented as a submodule of the destination on the images of
    /// the source generators.
    pub fn image(&self) -> Result<FPModule<F>> {
        let ring = self.src.ring();
        let gens: Vec<VectorElem<F>> = self
            .image_columns()
            .into_iter()
            .filter(|v| !groebner::vec_is_zero(v))
            .collect();
        present_subquotient(ring, &self.dst.target().twists, &gens, &self.dst.columns())
    }

    /// Cokernel: the destination modulo the image.
    pub fn cokernel(&self) -> Result<FPModule<F>> {
        let ring = self.src.ring();
        let mut cols = self.dst.columns();
        cols.extend(self.image_columns());
        let mut src_twists = self.dst.source().twists.clone();
        src_twists.extend(self.src.target().twists.iter().copied());
        FPModule::new(
            ring,
            self.dst.target().clone(),
            FreeModule::new(src_twists),
            matrix::from_columns(self.dst.target().rank(), &cols),
        )
    }
}

/// Present `(<gens> + <denoms>) / <denoms>` on the given generators: the
/// relations are the syzygies of the concatenated list, projected to the
/// generator coordinates.
pub fn present_subquotient<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    ambient_twists: &[i64],
    gens: &[VectorElem<F>],
    denoms: &[VectorElem<F>],
) -> Result<FPModule<F>> {
    let amb = ring.ambient();
    let mut target_twists = Vec::with_capacity(gens.len());
    for g in gens {
        let d = groebner::vec_degree(amb, ambient_twists, g)?.ok_or_else(|| {
            EngineError::DegreeMismatch("zero generator in subquotient".into())
        })?;
        target_twists.push(d);
    }
    let mut list = gens.to_vec();
    list.extend(denoms.iter().cloned());
    let syz = groebner::syzygies_over_ring(ring, ambient_twists, &list)?;
    let mut rel_cols: Vec<VectorElem<F>> = Vec::new();
    for v in syz {
        let proj = v[..gens.len()].to_vec();
        if !groebner::vec_is_zero(&proj) {
            rel_cols.push(proj);
        }
    }
    let mut src_twists = Vec::with_capacity(rel_cols.len());
    for c in &rel_cols {
        let d = groebner::vec_degree(amb, &target_twists, c)?.unwrap();
        src_twists.push(d);
    }
    FPModule::new(
        ring,
        FreeModule::new(target_twists),
        FreeModule::new(src_twists),
        matrix::from_columns(gens.len(), &rel_cols),
    )
}
