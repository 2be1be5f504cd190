use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// One nonzero term of a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term<F: Field> {
    pub coef: F,
    pub mon: Monomial,
}

/// A multivariate polynomial in canonical form: nonzero coefficients only,
/// no duplicate monomials, terms strictly descending in the ambient order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    /// Total degree (maximum over terms); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mon.degree();
                self.terms.iter().all(|t| t.mon.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one()
    }

    /// A degree-zero homogeneous polynomial is a unit scalar.
    pub fn as_unit(&self) -> Option<&F> {
        if self.is_constant() {
            Some(&self.terms[0].coef)
        } else {
            None
        }
    }

    /// Everything after the lead term.
    pub fn tail(&self) -> Polynomial<F> {
        Polynomial { terms: self.terms.get(1..).unwrap_or(&[]).to_vec() }
    }

    /// Build from a term list already in strictly descending canonical order.
    pub(crate) fn from_sorted_terms(terms: Vec<Term<F>>) -> Polynomial<F> {
        Polynomial { terms }
    }
}

/// The ambient polynomial ring context: named variables and a monomial order.
/// All polynomial values are interpreted relative to one of these.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ambient {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl Ambient {
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Self {
        Ambient { vars, order }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero<F: Field>(&self) -> Polynomial<F> {
        Polynomial::zero()
    }

    pub fn constant<F: Field>(&self, c: F) -> Polynomial<F> {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![Term { coef: c, mon: Monomial::one(self.nvars()) }],
            }
        }
    }

    pub fn one<F: Field>(&self) -> Polynomial<F> {
        self.constant(F::one())
    }

    pub fn var_poly<F: Field>(&self, i: usize) -> Polynomial<F> {
        Polynomial {
            terms: vec![Term { coef: F::one(), mon: Monomial::var(self.nvars(), i) }],
        }
    }

    pub fn monomial_poly<F: Field>(&self, coef: F, mon: Monomial) -> Polynomial<F> {
        debug_assert_eq!(mon.nvars(), self.nvars());
        if coef.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { coef, mon }] }
        }
    }

    /// Canonicalize an arbitrary term list: sort descending, merge duplicate
    /// monomials, drop zeros.
    pub fn normalize<F: Field>(&self, mut terms: Vec<Term<F>>) -> Polynomial<F> {
        let order = self.order;
        terms.sort_by(|a, b| order.cmp_mon(&b.mon, &a.mon));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mon == t.mon {
                    last.coef = last.coef.add(&t.coef);
                    if last.coef.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !t.coef.is_zero() {
                out.push(t);
            }
        }
        Polynomial { terms: out }
    }

    pub fn add<F: Field>(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        // merge two sorted term lists
        let order = self.order;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match order.cmp_mon(&a.terms[i].mon, &b.terms[j].mon) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.terms[i].coef.add(&b.terms[j].coef);
                    if !c.is_zero() {
                        out.push(Term { coef: c, mon: a.terms[i].mon.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg<F: Field>(&self, a: &Polynomial<F>) -> Polynomial<F> {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term { coef: t.coef.neg(), mon: t.mon.clone() })
                .collect(),
        }
    }

    pub fn sub<F: Field>(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.add(a, &self.neg(b))
    }

    pub fn scalar_mul<F: Field>(&self, c: &F, a: &Polynomial<F>) -> Polynomial<F> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term { coef: c.mul(&t.coef), mon: t.mon.clone() })
                .collect(),
        }
    }

    /// Multiply by a single term (coefficient times monomial).
    pub fn term_mul<F: Field>(&self, coef: &F, mon: &Monomial, a: &Polynomial<F>) -> Polynomial<F> {
        if coef.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term { coef: coef.mul(&t.coef), mon: mon.mul(&t.mon) })
                .collect(),
        }
    }

    pub fn mul<F: Field>(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for t in &a.terms {
            acc = self.add(&acc, &self.term_mul(&t.coef, &t.mon, b));
        }
        acc
    }

    pub fn pow<F: Field>(&self, a: &Polynomial<F>, e: u32) -> Polynomial<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Make the lead coefficient 1; zero stays zero.
    pub fn monic<F: Field>(&self, a: &Polynomial<F>) -> Result<Polynomial<F>> {
        match a.lead() {
            None => Ok(Polynomial::zero()),
            Some(l) => {
                let inv = l.coef.inv()?;
                Ok(self.scalar_mul(&inv, a))
            }
        }
    }

    /// Canonical text form; parses back to the same polynomial.
    pub fn render<F: Field>(&self, a: &Polynomial<F>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, t) in a.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let coef = t.coef.to_string();
            if t.mon.is_one() {
                s.push_str(&coef);
            } else {
                if !t.coef.is_one() {
                    let _ = write!(s, "{}*", coef);
                }
                let mut first = true;
                for (i, &e) in t.mon.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        s.push('*');
                    }
                    first = false;
                    s.push_str(&self.vars[i]);
                    if e > 1 {
                        let _ = write!(s, "^{}", e);
                    }
                }
            }
        }
        s
    }

    pub fn require_homogeneous<F: Field>(&self, a: &Polynomial<F>, what: &str) -> Result<()> {
        if a.is_homogeneous() {
            Ok(())
        } else {
            Err(EngineError::NonHomogeneous(format!(
                "{}: {}",
                what,
                self.render(a)
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf32003;
    use crate::parse::parse_polynomial_ambient;

    fn amb() -> Ambient {
        Ambient::new(
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
    }

    fn p(a: &Ambient, s: &str) -> Polynomial<Gf32003> {
        parse_polynomial_ambient(a, s).unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        let a = amb();
        let lhs = a.mul(&p(&a, "x + y"), &p(&a, "x - y"));
        assert_eq!(lhs, p(&a, "x^2 - y^2"));
    }

    #[test]
    fn canonical_form_merges_terms() {
        let a = amb();
        assert!(p(&a, "x*y - y*x").is_zero());
        assert_eq!(p(&a, "x + x"), p(&a, "2*x"));
    }

    #[test]
    fn degree_and_homogeneity() {
        let a = amb();
        let q = p(&a, "x^2 + x*y");
        assert_eq!(q.degree(), Some(2));
        assert!(q.is_homogeneous());
        assert!(!p(&a, "x^2 + y").is_homogeneous());
    }
}
