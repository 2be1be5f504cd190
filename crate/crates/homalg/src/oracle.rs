//! Degree-truncated linear-algebra oracle.
//!
//! Everything here answers graded questions (membership, graded dimensions,
//! homology dimensions) by exact row reduction on the finite-dimensional
//! graded pieces, using only polynomial arithmetic. It deliberately shares
//! no code with the Groebner machinery so the two routes can check each
//! other.

use std::collections::HashMap;
use std::sync::Arc;

use crate::field::Field;
use crate::groebner::VectorElem;
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;

/// All monomials of the given total degree, in a fixed deterministic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(nvars: usize, i: usize, rem: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            exps[i] = rem;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=rem).rev() {
            exps[i] = e;
            rec(nvars, i + 1, rem - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(nvars, 0, d, &mut exps, &mut out);
    out
}

/// Coordinate basis of the degree-`d` piece of a twisted free module over
/// the ambient ring.
pub struct PieceBasis {
    index: HashMap<(usize, Vec<u32>), usize>,
    pub dim: usize,
}

impl PieceBasis {
    pub fn new(nvars: usize, twists: &[i64], d: i64) -> Self {
        let mut index = HashMap::new();
        let mut dim = 0;
        for (pos, &a) in twists.iter().enumerate() {
            let e = d - a;
            if e < 0 {
                continue;
            }
            for m in monomials_of_degree(nvars, e as u32) {
                index.insert((pos, m.exps().to_vec()), dim);
                dim += 1;
            }
        }
        PieceBasis { index, dim }
    }

    /// Dense coordinates of a vector whose components land in this piece;
    /// terms of other degrees are ignored by construction of the callers.
    pub fn coords<F: Field>(&self, v: &[Polynomial<F>]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (pos, p) in v.iter().enumerate() {
            for t in p.terms() {
                if let Some(&i) = self.index.get(&(pos, t.mon.exps().to_vec())) {
                    out[i] = out[i].add(&t.coef);
                }
            }
        }
        out
    }
}

/// Incremental exact row reduction.
pub struct RowReducer<F: Field> {
    rows: Vec<(usize, Vec<F>)>, // (pivot index, normalized row)
}

impl<F: Field> RowReducer<F> {
    pub fn new() -> Self {
        RowReducer { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a = a.sub(&c.mul(b));
                }
            }
        }
        v
    }

    /// Insert if independent; returns true when the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(piv) => {
                let inv = r[piv].inv().expect("nonzero pivot");
                let row: Vec<F> = r.iter().map(|c| c.mul(&inv)).collect();
                self.rows.push((piv, row));
                true
            }
        }
    }

    pub fn contains(&self, v: Vec<F>) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }
}

impl<F: Field> Default for RowReducer<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// The generators of the degree-`d` piece of `<gens> + I*F` inside the free
/// module: all monomial multiples of the generators and of the defining
/// generators times unit vectors.
fn piece_spanning_set<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
    d: i64,
) -> Vec<VectorElem<F>> {
    let amb = ring.ambient();
    let nvars = ring.nvars();
    let mut span: Vec<VectorElem<F>> = Vec::new();
    let push_multiples = |v: &VectorElem<F>, vdeg: i64, span: &mut Vec<VectorElem<F>>| {
        let e = d - vdeg;
        if e < 0 {
            return;
        }
        for m in monomials_of_degree(nvars, e as u32) {
            span.push(
                v.iter()
                    .map(|p| amb.term_mul(&F::one(), &m, p))
                    .collect(),
            );
        }
    };
    for g in gens {
        if let Some(vdeg) = vec_degree_loose(twists, g) {
            push_multiples(g, vdeg, &mut span);
        }
    }
    for f in ring.defining_ideal() {
        let fdeg = f.degree().unwrap() as i64;
        for (pos, &a) in twists.iter().enumerate() {
            let mut v = vec![Polynomial::zero(); twists.len()];
            v[pos] = f.clone();
            push_multiples(&v, fdeg + a, &mut span);
        }
    }
    span
}

// degree of a homogeneous vector without error plumbing; None for zero
fn vec_degree_loose<F: Field>(twists: &[i64], v: &[Polynomial<F>]) -> Option<i64> {
    for (pos, p) in v.iter().enumerate() {
        if let Some(t) = p.terms().first() {
            return Some(t.mon.degree() as i64 + twists[pos]);
        }
    }
    None
}

/// Rank of the degree-`d` piece of the submodule (with the defining ideal
/// folded in).
pub fn image_piece_rank<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
    d: i64,
) -> usize {
    let basis = PieceBasis::new(ring.nvars(), twists, d);
    let mut red = RowReducer::new();
    for v in piece_spanning_set(ring, twists, gens, d) {
        red.insert(basis.coords(&v));
    }
    red.rank()
}

/// Membership of a homogeneous element in the submodule generated by `gens`
/// over the quotient ring, decided purely by row reduction in its degree.
pub fn membership<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
    v: &[VectorElem<F>],
) -> Vec<bool> {
    let mut out = Vec::with_capacity(v.len());
    for elem in v {
        let d = match vec_degree_loose(twists, elem) {
            None => {
                out.push(true);
                continue;
            }
            Some(d) => d,
        };
        let basis = PieceBasis::new(ring.nvars(), twists, d);
        let mut red = RowReducer::new();
        for s in piece_spanning_set(ring, twists, gens, d) {
            red.insert(basis.coords(&s));
        }
        out.push(red.contains(basis.coords(elem)));
    }
    out
}

/// Graded dimension of `coker(cols : F1 -> F0)` over the quotient ring in
/// degree `d`, by counting: dim of the free piece minus the rank of the
/// image piece.
pub fn hf_of_presentation<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    cols: &[VectorElem<F>],
    d: i64,
) -> u64 {
    let basis = PieceBasis::new(ring.nvars(), twists, d);
    let rank = image_piece_rank(ring, twists, cols, d);
    (basis.dim - rank) as u64
}

/// Basis of the degree-`d` relation space of `gens` over the quotient ring:
/// coefficient tuples `(a_1..a_s)` with `sum a_i g_i = 0` in `R^r`. Each
/// result is reported as polynomials.
pub fn relation_basis<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    twists: &[i64],
    gens: &[VectorElem<F>],
    d: i64,
) -> Vec<Vec<Polynomial<F>>> {
    let amb = ring.ambient();
    let nvars = ring.nvars();
    let target = PieceBasis::new(nvars, twists, d);
    // unknown layout: per generator, monomials of complementary degree; then
    // per defining generator and position likewise
    struct Block {
        mons: Vec<Monomial>,
    }
    let mut blocks: Vec<Block> = Vec::new();
    let mut images: Vec<Vec<F>> = Vec::new();
    let gdegs: Vec<Option<i64>> = gens.iter().map(|g| vec_degree_loose(twists, g)).collect();
    for (g, gdeg) in gens.iter().zip(&gdegs) {
        let e = match gdeg {
            None => {
                blocks.push(Block { mons: vec![] });
                continue;
            }
            Some(gd) => d - gd,
        };
        let mons = if e < 0 {
            vec![]
        } else {
            monomials_of_degree(nvars, e as u32)
        };
        for m in &mons {
            let mult: VectorElem<F> =
                g.iter().map(|p| amb.term_mul(&F::one(), m, p)).collect();
            images.push(target.coords(&mult));
        }
        blocks.push(Block { mons });
    }
    let num_gen_unknowns = images.len();
    for f in ring.defining_ideal() {
        let fdeg = f.degree().unwrap() as i64;
        for (pos, &a) in twists.iter().enumerate() {
            let e = d - fdeg - a;
            if e < 0 {
                continue;
            }
            for m in monomials_of_degree(nvars, e as u32) {
                let mut v = vec![Polynomial::zero(); twists.len()];
                v[pos] = amb.term_mul(&F::one(), &m, f);
                images.push(target.coords(&v));
            }
        }
    }
    // nullspace of the linear map (unknowns) -> target piece: Gaussian
    // elimination on the unknowns' images, tracking combinations
    let ncols = images.len();
    let mut kernel: Vec<Vec<F>> = Vec::new();
    let mut track_rows: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new(); // (pivot, residual, combination)
    for u in 0..ncols {
        let mut resid = images[u].clone();
        let mut combo = vec![F::zero(); ncols];
        combo[u] = F::one();
        for (piv, prow, pcombo) in &track_rows {
            if !resid[*piv].is_zero() {
                let c = resid[*piv].clone();
                for (a, b) in resid.iter_mut().zip(prow) {
                    *a = a.sub(&c.mul(b));
                }
                for (a, b) in combo.iter_mut().zip(pcombo) {
                    *a = a.sub(&c.mul(b));
                }
            }
        }
        match resid.iter().position(|c| !c.is_zero()) {
            None => kernel.push(combo),
            Some(piv) => {
                let inv = resid[piv].inv().expect("nonzero pivot");
                let resid: Vec<F> = resid.iter().map(|c| c.mul(&inv)).collect();
                let combo: Vec<F> = combo.iter().map(|c| c.mul(&inv)).collect();
                track_rows.push((piv, resid, combo));
            }
        }
    }
    // assemble polynomial tuples from the generator-block unknowns
    let mut out = Vec::new();
    for combo in kernel {
        let mut tuple: Vec<Polynomial<F>> = Vec::with_capacity(gens.len());
        let mut offset = 0usize;
        for b in &blocks {
            let mut terms = Vec::new();
            for (k, m) in b.mons.iter().enumerate() {
                let c = combo[offset + k].clone();
                if !c.is_zero() {
                    terms.push(crate::poly::Term { coef: c, mon: m.clone() });
                }
            }
            offset += b.mons.len();
            tuple.push(amb.normalize(terms));
        }
        debug_assert_eq!(offset, num_gen_unknowns);
        if tuple.iter().any(|p| !p.is_zero()) {
            out.push(tuple);
        }
    }
    out
}

/// Graded dimension of the homology `ker(g)/im(f)` at `Y` in degree `d`,
/// where `Y` and `Z` are given by presentations and the maps by matrices on
/// the free covers. Computes `dim ker(Y_d -> Z_d/U_Z) - rank(im f_d + U_Y)`.
#[allow(clippy::too_many_arguments)]
pub fn hf_of_homology<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    y_twists: &[i64],
    y_rels: &[VectorElem<F>],
    z: Option<(&[i64], &[VectorElem<F>], &Matrix<F>)>,
    f_cols: &[VectorElem<F>],
    d: i64,
) -> u64 {
    let nvars = ring.nvars();
    let amb = ring.ambient();
    let y_basis = PieceBasis::new(nvars, y_twists, d);
    // kernel dimension of the induced map into Z_d / (U_Z)_d
    let kernel_dim = match z {
        None => y_basis.dim,
        Some((z_twists, z_rels, gmat)) => {
            let z_basis = PieceBasis::new(nvars, z_twists, d);
            let mut uz: RowReducer<F> = RowReducer::new();
            for v in piece_spanning_set(ring, z_twists, z_rels, d) {
                uz.insert(z_basis.coords(&v));
            }
            // rank of the composite Y_d -> Z_d -> Z_d/U_Z
            let mut rank_map = 0usize;
            let mut image_red: RowReducer<F> = RowReducer::new();
            // enumerate the basis of Y_d explicitly
            for (pos, &a) in y_twists.iter().enumerate() {
                let e = d - a;
                if e < 0 {
                    continue;
                }
                for m in monomials_of_degree(nvars, e as u32) {
                    // image of m*e_pos under g: column pos of gmat times m
                    let img: VectorElem<F> = gmat
                        .iter()
                        .map(|row| amb.term_mul(&F::one(), &m, &row[pos]))
                        .collect();
                    let coords = uz.reduce(z_basis.coords(&img));
                    if image_red.insert(coords) {
                        rank_map += 1;
                    }
                }
            }
            y_basis.dim - rank_map
        }
    };
    // rank of im(f)_d + (U_Y)_d inside Y_d
    let mut denom: RowReducer<F> = RowReducer::new();
    let mut denom_rank = 0usize;
    let mut spanning = piece_spanning_set(ring, y_twists, y_rels, d);
    // monomial multiples of the f-columns
    for c in f_cols {
        if let Some(cd) = vec_degree_loose(y_twists, c) {
            let e = d - cd;
            if e >= 0 {
                for m in monomials_of_degree(nvars, e as u32) {
                    spanning.push(c.iter().map(|p| amb.term_mul(&F::one(), &m, p)).collect());
                }
            }
        }
    }
    for v in spanning {
        if denom.insert(y_basis.coords(&v)) {
            denom_rank += 1;
        }
    }
    (kernel_dim - denom_rank) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf32003;
    use crate::monomial::MonomialOrder;

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
    }

    #[test]
    fn membership_matches_hand_examples() {
        let r: Arc<QuotientRing<Gf32003>> =
            QuotientRing::new(&["x", "y", "z", "w"], MonomialOrder::GrevLex, &["x*y"], false)
                .unwrap();
        let gens = vec![vec![r.parse("y").unwrap()], vec![r.parse("z").unwrap()]];
        let probe = vec![
            vec![r.parse("x*y").unwrap()],  // zero in the ring
            vec![r.parse("z^2").unwrap()],  // in (y, z)
            vec![r.parse("w^2").unwrap()],  // not in (y, z)
        ];
        assert_eq!(membership(&r, &[0], &gens, &probe), vec![true, true, false]);
    }

    #[test]
    fn hf_matches_hand_count() {
        // R = k[x,y]/(xy) as coker of the empty presentation
        let r: Arc<QuotientRing<Gf32003>> =
            QuotientRing::new(&["x", "y"], MonomialOrder::GrevLex, &["x*y"], false).unwrap();
        assert_eq!(hf_of_presentation(&r, &[0], &[], 0), 1);
        assert_eq!(hf_of_presentation(&r, &[0], &[], 3), 2);
    }
}
