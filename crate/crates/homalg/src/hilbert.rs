//! Hilbert functions and series of graded modules, computed from lead-term
//! modules by the colon recursion on monomial ideals.
//!
//! The series of a module presented over `R = P/I` with `n` ambient
//! variables is stored as `numerator / (1 - t)^n`; the pole order of the
//! reduced form at `t = 1` is the Krull dimension and the reduced numerator
//! evaluated at 1 is the multiplicity.

use std::fmt;

use serde::Serialize;

use crate::monomial::Monomial;

/// Integer Laurent polynomial in one variable `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntLaurent {
    offset: i64,
    coeffs: Vec<i64>, // coefficient of t^(offset + i); first and last nonzero
}

impl IntLaurent {
    pub fn zero() -> Self {
        IntLaurent { offset: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntLaurent { offset: 0, coeffs: vec![1] }
    }

    pub fn monomial(e: i64) -> Self {
        IntLaurent { offset: e, coeffs: vec![1] }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.offset += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        if e < self.offset {
            return 0;
        }
        let i = (e - self.offset) as usize;
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn max_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.offset - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.offset - lo) as usize + i] += c;
        }
        IntLaurent { offset: lo, coeffs }.trim()
    }

    pub fn neg(&self) -> Self {
        IntLaurent {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        IntLaurent { offset: self.offset + e, coeffs: self.coeffs.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntLaurent { offset: self.offset + other.offset, coeffs }.trim()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `(1 - t)`; `None` when not divisible.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.eval_at_one() != 0 {
            return None;
        }
        // (1 - t) * (q_0 + q_1 t + ...) : q_i = c_i + q_{i-1}
        let mut q = vec![0i64; self.coeffs.len() - 1];
        let mut carry = 0i64;
        for i in 0..self.coeffs.len() - 1 {
            carry += self.coeffs[i];
            q[i] = carry;
        }
        Some(IntLaurent { offset: self.offset, coeffs: q }.trim())
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.offset + i as i64;
            let term = match (c, e) {
                (c, 0) => format!("{}", c),
                (1, 1) => "t".to_string(),
                (-1, 1) => "-t".to_string(),
                (1, e) => format!("t^{}", e),
                (-1, e) => format!("-t^{}", e),
                (c, 1) => format!("{}*t", c),
                (c, e) => format!("{}*t^{}", c, e),
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Remove monomials divisible by another in the list; sorted canonically.
fn minimalize_monomials(mons: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = mons.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    'outer: for m in sorted {
        for k in &kept {
            if k.divides(&m) {
                continue 'outer;
            }
        }
        kept.push(m);
    }
    kept
}

/// Numerator of the Hilbert series of `P/(mons)` over `(1 - t)^n`.
pub fn lead_ideal_numerator(mons: &[Monomial]) -> IntLaurent {
    let min = minimalize_monomials(mons);
    numerator_rec(&min)
}

fn numerator_rec(min: &[Monomial]) -> IntLaurent {
    if min.is_empty() {
        return IntLaurent::one();
    }
    if min.iter().any(|m| m.is_one()) {
        return IntLaurent::zero();
    }
    // pairwise coprime generators contribute a clean product
    let coprime = min
        .iter()
        .enumerate()
        .all(|(i, a)| min[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = IntLaurent::one();
        for m in min {
            let factor = IntLaurent::one().sub(&IntLaurent::monomial(m.degree() as i64));
            acc = acc.mul(&factor);
        }
        return acc;
    }
    let (pivot, rest) = min.split_last().unwrap();
    let rest_num = numerator_rec(&minimalize_monomials(rest));
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| g.gcd(pivot).checked_div(g).unwrap())
        .collect();
    let colon_num = numerator_rec(&minimalize_monomials(&colon));
    rest_num.sub(&colon_num.shift(pivot.degree() as i64))
}

/// Numerator for a graded free-module quotient: component `i` sits in
/// degrees shifted by `twists[i]` and is cut down by the monomial ideal
/// `components[i]`.
pub fn module_numerator(twists: &[i64], components: &[Vec<Monomial>]) -> IntLaurent {
    let mut acc = IntLaurent::zero();
    for (a, mons) in twists.iter().zip(components) {
        acc = acc.add(&lead_ideal_numerator(mons).shift(*a));
    }
    acc
}

/// Krull dimension read off a numerator over `(1 - t)^n`: `n` minus the
/// multiplicity of the root `t = 1`. `None` for the zero module.
pub fn dimension_from_numerator(nvars: usize, numer: &IntLaurent) -> Option<u32> {
    if numer.is_zero() {
        return None;
    }
    let mut cur = numer.clone();
    let mut cancelled = 0usize;
    while let Some(next) = cur.div_one_minus_t() {
        if next.is_zero() {
            break;
        }
        cur = next;
        cancelled += 1;
        if cancelled > nvars {
            break;
        }
    }
    debug_assert!(cancelled <= nvars);
    Some((nvars - cancelled) as u32)
}

fn binom_i128(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Hilbert series of a graded module with `n` ambient variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSeries {
    nvars: usize,
    numer: IntLaurent,
    reduced: IntLaurent,
    pole_order: u32,
}

impl HilbertSeries {
    pub fn new(nvars: usize, numer: IntLaurent) -> Self {
        let mut reduced = numer.clone();
        let mut cancelled = 0usize;
        while !reduced.is_zero() {
            match reduced.div_one_minus_t() {
                Some(next) => {
                    reduced = next;
                    cancelled += 1;
                }
                None => break,
            }
        }
        let pole_order = if numer.is_zero() {
            0
        } else {
            (nvars - cancelled.min(nvars)) as u32
        };
        HilbertSeries { nvars, numer, reduced, pole_order }
    }

    pub fn numerator(&self) -> &IntLaurent {
        &self.numer
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Krull dimension; `None` for the zero module.
    pub fn dimension(&self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.pole_order)
        }
    }

    /// Leading coefficient at the top-dimensional pole.
    pub fn multiplicity(&self) -> i64 {
        self.reduced.eval_at_one()
    }

    /// Coefficient extraction: the dimension of the degree-`d` piece.
    pub fn value(&self, d: i64) -> u64 {
        let n = self.nvars as i64;
        let mut acc: i128 = 0;
        if let (Some(lo), Some(hi)) = (self.numer.min_degree(), self.numer.max_degree()) {
            for e in lo..=hi.min(d) {
                let c = self.numer.coeff(e);
                if c != 0 {
                    acc += c as i128 * binom_i128(n - 1 + d - e, n - 1);
                }
            }
        }
        debug_assert!(acc >= 0, "negative graded dimension");
        acc.max(0) as u64
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        format!("({}) / (1 - t)^{}", self.reduced.render(), self.pole_order)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Degree-indexed dimensions of graded pieces, tabulated over a window up to
/// the reported bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HilbertFunction {
    pub lo: i64,
    pub bound: i64,
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn tabulate(series: &HilbertSeries, lo: i64, bound: i64) -> Self {
        let values = (lo..=bound).map(|d| series.value(d)).collect();
        HilbertFunction { lo, bound, values }
    }

    pub fn value(&self, d: i64) -> u64 {
        if d < self.lo {
            return 0;
        }
        let i = (d - self.lo) as usize;
        self.values.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{}:{}", self.lo + i as i64, v))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn laurent_division() {
        // 1 - t^2 = (1 - t)(1 + t)
        let p = IntLaurent::one().sub(&IntLaurent::monomial(2));
        let q = p.div_one_minus_t().unwrap();
        assert_eq!(q, IntLaurent { offset: 0, coeffs: vec![1, 1] });
        assert!(q.div_one_minus_t().is_none());
    }

    #[test]
    fn principal_ideal_series() {
        // k[x,y]/(xy): series (1+t)/(1-t), dimension 1, HF 1,2,2,2,...
        let numer = lead_ideal_numerator(&[m(&[1, 1])]);
        let hs = HilbertSeries::new(2, numer);
        assert_eq!(hs.dimension(), Some(1));
        assert_eq!(hs.multiplicity(), 2);
        let hf: Vec<u64> = (0..5).map(|d| hs.value(d)).collect();
        assert_eq!(hf, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn artinian_monomial_ideal() {
        // k[x,y]/(x^2, xy, y^2): dimensions 1, 2, 0, 0, ...
        let numer = lead_ideal_numerator(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let hs = HilbertSeries::new(2, numer);
        assert_eq!(hs.dimension(), Some(0));
        assert_eq!(
            (0..4).map(|d| hs.value(d)).collect::<Vec<_>>(),
            vec![1, 2, 0, 0]
        );
    }

    #[test]
    fn dimension_of_polynomial_ring() {
        let numer = lead_ideal_numerator(&[]);
        assert_eq!(dimension_from_numerator(3, &numer), Some(3));
        let hs = HilbertSeries::new(3, numer);
        assert_eq!(hs.value(2), 6);
    }

    #[test]
    fn twisted_free_module() {
        // R(-1) over k[x,y]: HF(d) = d for d >= 1
        let numer = module_numerator(&[1], &[vec![]]);
        let hs = HilbertSeries::new(2, numer);
        assert_eq!(hs.value(0), 0);
        assert_eq!(hs.value(3), 3);
    }
}
