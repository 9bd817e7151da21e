//! Monomials and total monomial orders.

use std::cmp::Ordering;

/// A power product in a ring of fixed arity, stored as an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in a ring of the given arity.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    /// The single variable `x_index`.
    pub fn var(arity: usize, index: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * n).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when no variable occurs in both monomials.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reindex the exponents: entry `k` of the result is the exponent of
    /// variable `perm[k]`.
    pub fn select(&self, perm: &[usize]) -> Monomial {
        Monomial {
            exps: perm.iter().map(|&i| self.exps[i]).collect(),
        }
    }

    /// Embed into a larger ring, sending variable `k` to `positions[k]`.
    pub fn embed(&self, new_arity: usize, positions: &[usize]) -> Monomial {
        let mut exps = vec![0; new_arity];
        for (k, &e) in self.exps.iter().enumerate() {
            exps[positions[k]] = e;
        }
        Monomial { exps }
    }
}

/// A total, multiplicative well-order on the monomials of a fixed arity.
///
/// `Block(k)` compares the first `k` variables lexicographically and breaks
/// ties by graded reverse lexicographic order on the rest; it is an
/// elimination order for the first block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => cmp_lex(a.exponents(), b.exponents()),
            MonomialOrder::GrevLex => cmp_grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.arity());
                cmp_lex(&a.exponents()[..k], &b.exponents()[..k])
                    .then_with(|| cmp_grevlex(&a.exponents()[k..], &b.exponents()[k..]))
            }
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Same degree: the monomial whose last differing exponent is smaller
    // is the larger one.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_compares_first_variable_first() {
        // x y^2 vs y^5 with x > y
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 2]), &m(&[0, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_prefers_total_degree() {
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 2]), &m(&[0, 5])),
            Ordering::Less
        );
        // Same degree: x > y under grevlex too.
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0]), &m(&[0, 1])),
            Ordering::Greater
        );
        // x z vs y^2 in x,y,z: same degree, last difference at z.
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_dominates_on_first_block() {
        // t x^5 vs x^0..: any monomial containing t beats any t-free one.
        let ord = MonomialOrder::Block(1);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 1]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 1]).divides(&m(&[0, 3])));
        assert_eq!(m(&[1, 1]).div_into(&m(&[2, 3])), Some(m(&[1, 2])));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])), m(&[2, 1]));
        assert!(m(&[2, 0]).coprime(&m(&[0, 3])));
        assert!(!m(&[1, 1]).coprime(&m(&[0, 3])));
    }
}
