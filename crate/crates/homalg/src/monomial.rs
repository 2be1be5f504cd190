use std::cmp::Ordering;

use serde::Serialize;

/// A monomial in the ambient polynomial ring: one exponent per variable.
/// Total degree is the exponent sum (standard grading, all weights 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders on the ambient ring. Both are total, multiplicative and
/// have 1 as the smallest monomial, so they are well-orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: total degree first, ties broken at the
    /// last differing exponent with the smaller exponent winning.
    GrevLex,
    /// Pure lexicographic on the exponent vector.
    Lex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::GrevLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    pub fn cmp_mon(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::GrevLex => {
                let da = a.degree();
                let db = b.degree();
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..a.exps.len()).rev() {
                    if a.exps[i] != b.exps[i] {
                        // smaller trailing exponent means larger monomial
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..a.exps.len() {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        // x^2 y vs x y z in three variables
        assert_eq!(
            MonomialOrder::GrevLex.cmp_mon(&m(&[2, 1, 0]), &m(&[1, 1, 1])),
            Ordering::Greater
        );
        // degree dominates
        assert_eq!(
            MonomialOrder::GrevLex.cmp_mon(&m(&[0, 0, 3]), &m(&[2, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::GrevLex.cmp_mon(&m(&[1, 1, 1]), &m(&[1, 1, 1])),
            Ordering::Equal
        );
    }

    #[test]
    fn lex_examples() {
        // x vs y^2
        assert_eq!(
            MonomialOrder::Lex.cmp_mon(&m(&[1, 0]), &m(&[0, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert_eq!(m(&[1, 0]).checked_div(&m(&[2, 1])), Some(m(&[1, 1])));
        assert_eq!(m(&[0, 2]).checked_div(&m(&[2, 1])), None);
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])), m(&[2, 1]));
    }
}
