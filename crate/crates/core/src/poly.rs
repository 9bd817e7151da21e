//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored strictly descending under graded reverse lexicographic
//! order, which makes structural equality canonical regardless of the order
//! a computation happens to use. Orders other than grevlex are supplied as
//! context where they matter (leading terms, display, Groebner bases).

use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::Coefficient;

const STORAGE_ORDER: MonomialOrder = MonomialOrder::GrevLex;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    arity: usize,
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(arity);
        }
        Polynomial {
            arity,
            terms: vec![(Monomial::one(arity), c)],
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, C::one())
    }

    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index out of range");
        Polynomial {
            arity,
            terms: vec![(Monomial::var(arity, index), C::one())],
        }
    }

    pub fn term(arity: usize, c: C, m: Monomial) -> Self {
        assert_eq!(m.arity(), arity);
        if c.is_zero() {
            return Self::zero(arity);
        }
        Polynomial {
            arity,
            terms: vec![(m, c)],
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs: duplicates are
    /// combined, zero coefficients dropped, terms sorted.
    pub fn from_terms(arity: usize, terms: Vec<(Monomial, C)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), arity);
            match out.last_mut() {
                Some((last, acc)) if *last == m => {
                    *acc = std::mem::replace(acc, C::zero()) + c;
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                }
            }
        }
        Polynomial { arity, terms: out }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage (grevlex-descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// True when some term uses variable `index`.
    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(index) > 0)
    }

    /// The maximal term under `ord`, or `None` for the zero polynomial.
    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&C, &Monomial)> {
        if ord == STORAGE_ORDER {
            return self.terms.first().map(|(m, c)| (c, m));
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (c, m))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(_, m)| m)
    }

    /// Terms cloned and sorted strictly descending under `ord`.
    pub fn terms_desc(&self, ord: MonomialOrder) -> Vec<(Monomial, C)> {
        let mut v = self.terms.clone();
        if ord != STORAGE_ORDER {
            v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        v
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::RingMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, _)), Some((mb, _))) => match STORAGE_ORDER.cmp(ma, mb) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => out.push(b.next().unwrap().clone()),
                    std::cmp::Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca.clone() + cb.clone();
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        Ok(Polynomial {
            arity: self.arity,
            terms: out,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.clone().negate())
    }

    pub fn negate(mut self) -> Self {
        for (_, c) in &mut self.terms {
            *c = -std::mem::replace(c, C::zero());
        }
        self
    }

    /// Multiply by the single term `c * m`.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(c, &Monomial::one(self.arity))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut acc: Vec<(Monomial, C)> = Vec::new();
        for (m, c) in &self.terms {
            acc.extend(
                other
                    .terms
                    .iter()
                    .map(|(tm, tc)| (tm.mul(m), tc.clone() * c.clone())),
            );
        }
        Ok(Self::from_terms(self.arity, acc))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.arity);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.try_mul(&base).unwrap();
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base).unwrap();
            }
        }
        result
    }

    /// Divide by the leading coefficient under `ord`; zero stays zero.
    pub fn monic(&self, ord: MonomialOrder) -> Self {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((lc, _)) => {
                let inv = C::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Substitute `images[i]` for variable `i`; the images live in a ring
    /// of `target_arity` variables.
    pub fn substitute(&self, images: &[Polynomial<C>], target_arity: usize) -> Result<Self> {
        assert_eq!(images.len(), self.arity, "one image per variable required");
        let mut acc = Polynomial::zero(target_arity);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target_arity, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    term = term.try_mul(&img.pow(e))?;
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Reinterpret in a ring of `new_arity` variables, variable `k` of the
    /// source landing at `positions[k]`.
    pub fn embed(&self, new_arity: usize, positions: &[usize]) -> Self {
        Polynomial {
            arity: new_arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.embed(new_arity, positions), c.clone()))
                .collect(),
        }
        .resort()
    }

    /// Keep only the variables listed in `keep` (which must include every
    /// variable actually used), renumbering them in the given order.
    pub fn select_vars(&self, keep: &[usize]) -> Self {
        Polynomial {
            arity: keep.len(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.select(keep), c.clone()))
                .collect(),
        }
        .resort()
    }

    fn resort(mut self) -> Self {
        self.terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
        self
    }

    /// Deterministic total order on polynomials of one ring, used only for
    /// tie-breaking when sorting generator lists.
    pub fn cmp_structural(&self, other: &Self) -> std::cmp::Ordering {
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    match STORAGE_ORDER.cmp(ma, mb).then_with(|| ca.cmp(cb)) {
                        std::cmp::Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.negate()
    }
}
