//! Buchberger's algorithm, normal forms, and reduced Groebner bases.
//!
//! The reduced basis of an ideal under a fixed order is unique, so it serves
//! as the canonical representative everywhere an ideal needs an equality
//! test. Pair selection follows the normal strategy (minimal lcm degree,
//! ties by lexicographic lcm comparison, then by pair index), with the
//! coprime-lcm and chain criteria pruning useless pairs; both leave the
//! reduced result unchanged, so outputs are deterministic.

use std::collections::{BTreeSet, HashSet};


use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::Coefficient;

/// A (possibly reduced) Groebner basis together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<C> {
    generators: Vec<Polynomial<C>>,
    order: MonomialOrder,
    reduced: bool,
}

impl<C: Coefficient> GroebnerBasis<C> {
    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn into_generators(self) -> Vec<Polynomial<C>> {
        self.generators
    }

    /// Ideal membership: true iff the normal form of `f` is zero.
    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool> {
        Ok(normal_form(f, &self.generators, self.order)?.is_zero())
    }
}

// Working form: terms strictly descending under the active order.
type Terms<C> = Vec<(Monomial, C)>;

// a - c * x^shift * b, all term lists descending under `ord`.
fn sub_scaled<C: Coefficient>(
    a: &Terms<C>,
    b: &Terms<C>,
    c: &C,
    shift: &Monomial,
    ord: MonomialOrder,
) -> Terms<C> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(shift);
        match ord.cmp(&a[i].0, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm, -(b[j].1.clone() * c.clone())));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = a[i].1.clone() - b[j].1.clone() * c.clone();
                if !coeff.is_zero() {
                    out.push((a[i].0.clone(), coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, coeff) in &b[j..] {
        out.push((m.mul(shift), -(coeff.clone() * c.clone())));
    }
    out
}

struct Reducer<C> {
    lc: C,
    lm: Monomial,
    terms: Terms<C>,
}

fn reducers<C: Coefficient>(dividers: &[Polynomial<C>], ord: MonomialOrder) -> Vec<Reducer<C>> {
    dividers
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let terms = g.terms_desc(ord);
            let (lm, lc) = terms[0].clone();
            Reducer { lc, lm, terms }
        })
        .collect()
}

fn normal_form_terms<C: Coefficient>(
    mut work: Terms<C>,
    reds: &[Reducer<C>],
    ord: MonomialOrder,
) -> Terms<C> {
    let mut remainder: Terms<C> = Vec::new();
    'outer: while !work.is_empty() {
        let (m, c) = work[0].clone();
        // Divisors tried in sequence order; the head is always the leftmost
        // (largest) not-yet-settled term.
        for red in reds {
            if red.lm.divides(&m) {
                let shift = red.lm.div_into(&m).expect("divisibility checked");
                let factor = c / red.lc.clone();
                work = sub_scaled(&work, &red.terms, &factor, &shift, ord);
                continue 'outer;
            }
        }
        remainder.push((m, c));
        work.remove(0);
    }
    remainder
}

/// Remainder of `f` on division by `dividers`: `f - r` lies in the ideal
/// they generate and no term of `r` is divisible by any leading monomial.
pub fn normal_form<C: Coefficient>(
    f: &Polynomial<C>,
    dividers: &[Polynomial<C>],
    ord: MonomialOrder,
) -> Result<Polynomial<C>> {
    for g in dividers {
        if g.arity() != f.arity() {
            return Err(Error::RingMismatch {
                left: f.arity(),
                right: g.arity(),
            });
        }
    }
    let reds = reducers(dividers, ord);
    let r = normal_form_terms(f.terms_desc(ord), &reds, ord);
    Ok(Polynomial::from_terms(f.arity(), r))
}

/// S(f, g) = (lcm/lt f) f - (lcm/lt g) g for the leading terms under `ord`.
pub fn s_polynomial<C: Coefficient>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    ord: MonomialOrder,
) -> Result<Polynomial<C>> {
    let (fc, fm) = f.leading_term(ord).ok_or(Error::ZeroPolynomial)?;
    let (gc, gm) = g.leading_term(ord).ok_or(Error::ZeroPolynomial)?;
    if f.arity() != g.arity() {
        return Err(Error::RingMismatch {
            left: f.arity(),
            right: g.arity(),
        });
    }
    let lcm = fm.lcm(gm);
    let lhs = f.mul_term(
        &(C::one() / fc.clone()),
        &fm.div_into(&lcm).expect("lm divides lcm"),
    );
    let rhs = g.mul_term(
        &(C::one() / gc.clone()),
        &gm.div_into(&lcm).expect("lm divides lcm"),
    );
    lhs.try_sub(&rhs)
}

// Normal-strategy queue key: lcm degree, then lcm lexicographically, then
// the pair indices.
type PairKey = (u64, Vec<u32>, usize, usize);

fn pair_key(lms: &[Monomial], i: usize, j: usize) -> PairKey {
    let lcm = lms[i].lcm(&lms[j]);
    (lcm.total_degree(), lcm.exponents().to_vec(), i, j)
}

/// Buchberger's algorithm: a Groebner basis of the ideal generated by
/// `gens`, every S-polynomial of which reduces to zero.
pub fn buchberger<C: Coefficient>(
    gens: &[Polynomial<C>],
    ord: MonomialOrder,
) -> Result<GroebnerBasis<C>> {
    let arity = gens.iter().map(|g| g.arity()).next();
    for g in gens {
        if g.arity() != arity.unwrap() {
            return Err(Error::RingMismatch {
                left: arity.unwrap(),
                right: g.arity(),
            });
        }
    }
    let mut basis: Vec<Polynomial<C>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).expect("nonzero").clone())
        .collect();

    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert(pair_key(&lms, i, j));
            pending.insert((i, j));
        }
    }

    while let Some(key) = queue.iter().next().cloned() {
        queue.remove(&key);
        let (_, _, i, j) = key;
        pending.remove(&(i, j));

        // Coprime-lcm criterion.
        if lms[i].coprime(&lms[j]) {
            continue;
        }
        // Chain criterion: some k already settled against both i and j whose
        // leading monomial divides this pair's lcm.
        let lcm = lms[i].lcm(&lms[j]);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let r = normal_form(&s, &basis, ord)?;
        if !r.is_zero() {
            let new = basis.len();
            lms.push(r.leading_monomial(ord).expect("nonzero").clone());
            basis.push(r);
            for k in 0..new {
                queue.insert(pair_key(&lms, k, new));
                pending.insert((k, new));
            }
        }
    }

    Ok(GroebnerBasis {
        generators: basis,
        order: ord,
        reduced: false,
    })
}

/// The unique reduced Groebner basis of the same ideal: monic generators,
/// no term of any generator divisible by another's leading monomial,
/// sorted descending by leading monomial. Idempotent.
pub fn reduced_basis<C: Coefficient>(basis: &GroebnerBasis<C>) -> GroebnerBasis<C> {
    let ord = basis.order;
    let mut gens: Vec<Polynomial<C>> = basis
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    // Ascending by leading monomial so a divisor is kept before anything it
    // eliminates; structural tiebreak keeps the pass deterministic.
    gens.sort_by(|a, b| {
        ord.cmp(
            a.leading_monomial(ord).expect("nonzero"),
            b.leading_monomial(ord).expect("nonzero"),
        )
        .then_with(|| a.cmp_structural(b))
    });
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for g in gens {
        let lm = g.leading_monomial(ord).expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial(ord).expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }

    // Tail-reduce to the fixpoint.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial<C>> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&minimal[i], &others, ord).expect("one ring");
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut out: Vec<Polynomial<C>> = minimal.iter().map(|g| g.monic(ord)).collect();
    out.sort_by(|a, b| {
        ord.cmp(
            b.leading_monomial(ord).expect("nonzero"),
            a.leading_monomial(ord).expect("nonzero"),
        )
    });
    GroebnerBasis {
        generators: out,
        order: ord,
        reduced: true,
    }
}

/// Buchberger followed by reduction: the canonical form of the ideal.
pub fn reduced_groebner_basis<C: Coefficient>(
    gens: &[Polynomial<C>],
    ord: MonomialOrder,
) -> Result<GroebnerBasis<C>> {
    Ok(reduced_basis(&buchberger(gens, ord)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use crate::text::parse_polynomial;

    type P = Polynomial<Rational>;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn p(text: &str, names: &[&str]) -> P {
        parse_polynomial(text, &vars(names)).unwrap()
    }

    #[test]
    fn division_example() {
        // x^2 y = x (x y - 1) + x
        let f = p("x^2*y", &["x", "y"]);
        let g = p("x*y - 1", &["x", "y"]);
        let r = normal_form(&f, &[g], MonomialOrder::Lex).unwrap();
        assert_eq!(r, p("x", &["x", "y"]));
    }

    #[test]
    fn division_by_self_and_no_op() {
        let f = p("x^2 - y", &["x", "y"]);
        assert!(normal_form(&f, &[f.clone()], MonomialOrder::Lex)
            .unwrap()
            .is_zero());
        let y = p("y", &["x", "y"]);
        let x = p("x", &["x", "y"]);
        assert_eq!(normal_form(&y, &[x], MonomialOrder::Lex).unwrap(), y);
    }

    #[test]
    fn s_polynomial_examples() {
        let f = p("x^2 - y", &["x", "y", "z"]);
        let g = p("x*y - z", &["x", "y", "z"]);
        let s = s_polynomial(&f, &g, MonomialOrder::Lex).unwrap();
        assert_eq!(s, p("x*z - y^2", &["x", "y", "z"]));

        assert!(s_polynomial(&f, &f, MonomialOrder::Lex).unwrap().is_zero());

        let x = p("x", &["x", "y", "z"]);
        let y = p("y", &["x", "y", "z"]);
        assert!(s_polynomial(&x, &y, MonomialOrder::Lex).unwrap().is_zero());

        assert_eq!(
            s_polynomial(&P::zero(3), &x, MonomialOrder::Lex).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn twisted_cubic_basis() {
        let names = ["x", "y", "z"];
        let gens = vec![p("x^2 - y", &names), p("x^3 - z", &names)];
        let gb = reduced_groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        let expected = vec![
            p("x^2 - y", &names),
            p("x*y - z", &names),
            p("x*z - y^2", &names),
            p("y^3 - z^2", &names),
        ];
        assert_eq!(gb.generators(), expected.as_slice());
    }

    #[test]
    fn already_groebner() {
        let names = ["x", "y"];
        let gens = vec![p("x", &names), p("y", &names)];
        let gb = reduced_groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        assert_eq!(gb.generators(), &[p("x", &names), p("y", &names)]);
    }

    #[test]
    fn redundant_generator_dropped() {
        let names = ["x"];
        let gens = vec![p("x^2", &names), p("x", &names)];
        let gb = reduced_groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        assert_eq!(gb.generators(), &[p("x", &names)]);
    }

    #[test]
    fn reduction_examples() {
        let names = ["x", "y"];
        let gb = reduced_groebner_basis(
            &[p("x + y", &names), p("y", &names)],
            MonomialOrder::Lex,
        )
        .unwrap();
        assert_eq!(gb.generators(), &[p("x", &names), p("y", &names)]);

        let gb = reduced_groebner_basis(&[p("2*x", &["x"])], MonomialOrder::Lex).unwrap();
        assert_eq!(gb.generators(), &[p("x", &["x"])]);

        // Idempotency.
        let again = reduced_basis(&gb);
        assert_eq!(again, gb);
    }

    #[test]
    fn membership() {
        let names = ["x", "y"];
        let gb = reduced_groebner_basis(&[p("x*y", &names)], MonomialOrder::GrevLex).unwrap();
        assert!(gb.contains(&p("x^2*y^3", &names)).unwrap());

        let gb = reduced_groebner_basis(
            &[p("x - 1", &names), p("x", &names)],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        assert!(gb.contains(&P::one(2)).unwrap());

        let gb = reduced_groebner_basis(&[p("x^2", &["x"])], MonomialOrder::Lex).unwrap();
        assert!(!gb.contains(&p("x", &["x"])).unwrap());
    }

    #[test]
    fn empty_and_zero_generators() {
        let gb = reduced_groebner_basis(&[P::zero(2)], MonomialOrder::Lex).unwrap();
        assert!(gb.generators().is_empty());
    }
}
