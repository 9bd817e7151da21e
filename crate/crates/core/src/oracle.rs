//! Independent oracles: closed subschemes of Spec Z, ideals of Z/n, and
//! univariate Euclidean arithmetic.
//!
//! These paths use dedicated integer and Euclidean arithmetic rather than
//! the Groebner machinery, precisely so they can cross-check it. On Spec Z
//! the subscheme `(m)` multiplies by gcd and adds by lcm, and a prime
//! power tower `(p), (p^2), ...` gives infinitely many pairwise distinct
//! subscheme structures on one point. The divisors of `n` enumerate all
//! ideals of `Z/n`, which makes every monoid law exhaustively checkable.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::report::Report;
use crate::scalar::Rational;
use crate::Poly;

/// A closed subscheme of Spec Z: the ideal `(m)`, with `m = 0` the whole
/// scheme and `m = 1` the empty subscheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegerSubscheme {
    m: u64,
}

impl IntegerSubscheme {
    pub fn new(m: u64) -> Self {
        IntegerSubscheme { m }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Scheme-theoretic intersection: `(m1) + (m2) = (gcd)`.
    pub fn mul(&self, other: &Self) -> Self {
        IntegerSubscheme {
            m: self.m.gcd(&other.m),
        }
    }

    /// Scheme-theoretic union: `(m1) ∩ (m2) = (lcm)`, with `lcm(m, 0) = 0`.
    pub fn add(&self, other: &Self) -> Self {
        IntegerSubscheme {
            m: self.m.lcm(&other.m),
        }
    }

    pub fn whole() -> Self {
        IntegerSubscheme { m: 0 }
    }

    pub fn empty() -> Self {
        IntegerSubscheme { m: 1 }
    }

    /// The set of primes dividing `m` (the support of the subscheme).
    pub fn support(&self) -> Vec<u64> {
        let mut m = self.m;
        let mut primes = Vec::new();
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                primes.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        primes
    }
}

/// An ideal `(d)` of `Z/n`, encoded by a positive divisor `d | n`;
/// `d = n` is the zero ideal (the whole scheme), `d = 1` the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicRingSubscheme {
    n: u64,
    d: u64,
}

impl CyclicRingSubscheme {
    pub fn new(n: u64, d: u64) -> Result<Self> {
        if n == 0 || d == 0 || n % d != 0 {
            return Err(Error::BadPresentation(format!(
                "{d} is not a positive divisor of {n}"
            )));
        }
        Ok(CyclicRingSubscheme { n, d })
    }

    pub fn divisor(&self) -> u64 {
        self.d
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        CyclicRingSubscheme {
            n: self.n,
            d: self.d.gcd(&other.d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        CyclicRingSubscheme {
            n: self.n,
            d: self.d.lcm(&other.d),
        }
    }

    /// Extension along `Z/n -> Z/m` for `m | n`: `(d)` generates
    /// `(gcd(d, m))`.
    pub fn extend_to(&self, m: u64) -> Self {
        debug_assert_eq!(self.n % m, 0);
        CyclicRingSubscheme {
            n: m,
            d: self.d.gcd(&m),
        }
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Exhaustively verify both monoid structures on the ideal lattice of
/// `Z/n`, together with the extension maps to every quotient `Z/m`.
pub fn cyc_laws(n: u64) -> Report {
    let mut report = Report::new();
    if n == 0 {
        report.fail("modulus must be at least 1");
        return report;
    }
    let divs = divisors(n);
    let subs: Vec<CyclicRingSubscheme> = divs
        .iter()
        .map(|&d| CyclicRingSubscheme::new(n, d).expect("divisor"))
        .collect();

    let mut commutative = true;
    let mut associative = true;
    let mut idempotent = true;
    let mut identities = true;
    let mut absorption = true;
    for a in &subs {
        idempotent &= a.mul(a) == *a && a.add(a) == *a;
        // d = n is the zero ideal (whole scheme), d = 1 the unit ideal (empty).
        let whole = CyclicRingSubscheme::new(n, n).expect("divisor");
        let empty = CyclicRingSubscheme::new(n, 1).expect("divisor");
        identities &= a.mul(&whole) == *a && a.add(&empty) == *a;
        for b in &subs {
            commutative &= a.mul(b) == b.mul(a) && a.add(b) == b.add(a);
            absorption &= a.add(&a.mul(b)) == *a && a.mul(&a.add(b)) == *a;
            for c in &subs {
                associative &= a.mul(&b.mul(c)) == a.mul(b).mul(c)
                    && a.add(&b.add(c)) == a.add(b).add(c);
            }
        }
    }
    let pairs = divs.len() * divs.len();
    report.check(
        commutative,
        format!("Z/{n}: multiplication and addition commutative ({pairs} pairs)"),
    );
    report.check(
        associative,
        format!(
            "Z/{n}: multiplication and addition associative ({} triples)",
            divs.len() * pairs
        ),
    );
    report.check(idempotent, format!("Z/{n}: both operations idempotent"));
    report.check(
        identities,
        format!("Z/{n}: zero ideal and unit ideal are the identities"),
    );
    report.check(absorption, format!("Z/{n}: absorption laws hold"));

    let mut mul_hom = true;
    let mut add_hom = true;
    for &m in &divs {
        for a in &subs {
            for b in &subs {
                mul_hom &= a.mul(b).extend_to(m) == a.extend_to(m).mul(&b.extend_to(m));
                add_hom &= a.add(b).extend_to(m) == a.extend_to(m).add(&b.extend_to(m));
            }
        }
    }
    report.check(
        mul_hom,
        format!("Z/{n}: extension to every quotient preserves multiplication"),
    );
    report.check(
        add_hom,
        format!("Z/{n}: extension to every quotient preserves addition"),
    );
    report
}

fn require_univariate(f: &Poly) -> Result<()> {
    if f.arity() != 1 {
        return Err(Error::RingMismatch {
            left: 1,
            right: f.arity(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

fn uni_divrem(f: &Poly, g: &Poly) -> (Poly, Poly) {
    let ord = MonomialOrder::Lex;
    let (gc, gm) = g.leading_term(ord).expect("nonzero divisor");
    let (gc, gm) = (gc.clone(), gm.clone());
    let mut quotient = Poly::zero(1);
    let mut rem = f.clone();
    while let Some((rc, rm)) = rem.leading_term(ord) {
        match gm.div_into(rm) {
            Some(shift) => {
                let factor = rc.clone() / gc.clone();
                let step = Poly::term(1, factor, shift);
                quotient = &quotient + &step;
                rem = &rem - &(&step * g);
            }
            None => break,
        }
    }
    (quotient, rem)
}

/// Monic gcd of univariate polynomials by the Euclidean algorithm.
pub fn uni_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    require_univariate(f)?;
    require_univariate(g)?;
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = uni_divrem(&a, &b);
        a = b;
        b = r;
    }
    Ok(a.monic(MonomialOrder::Lex))
}

/// Monic lcm: `f * g / gcd(f, g)`. Independent oracle for the Groebner
/// computation of `(f) ∩ (g)` in one variable.
pub fn uni_intersect_oracle(f: &Poly, g: &Poly) -> Result<Poly> {
    let gcd = uni_gcd(f, g)?;
    let product = f * g;
    let (q, r) = uni_divrem(&product, &gcd);
    debug_assert!(r.is_zero());
    let _ = r;
    Ok(q.monic(MonomialOrder::Lex))
}

/// Reproduce the Spec Z picture: exhaustive pairwise law checks, a bounded
/// exhaustive associativity sweep, and the prime-power tower, which gives
/// pairwise distinct subscheme structures with identical support.
pub fn integer_laws(pair_bound: u64, triple_bound: u64) -> Report {
    let mut report = Report::new();
    let mut commutative = true;
    let mut idempotent = true;
    let mut identities = true;
    let mut absorption = true;
    for m1 in 0..=pair_bound {
        let a = IntegerSubscheme::new(m1);
        idempotent &= a.mul(&a) == a && a.add(&a) == a;
        identities &= a.mul(&IntegerSubscheme::whole()) == a
            && a.add(&IntegerSubscheme::empty()) == a;
        for m2 in 0..=pair_bound {
            let b = IntegerSubscheme::new(m2);
            commutative &= a.mul(&b) == b.mul(&a) && a.add(&b) == b.add(&a);
            absorption &= a.add(&a.mul(&b)) == a && a.mul(&a.add(&b)) == a;
        }
    }
    report.check(
        commutative,
        format!("Spec Z: operations commutative for all m <= {pair_bound}"),
    );
    report.check(
        idempotent,
        format!("Spec Z: operations idempotent for all m <= {pair_bound}"),
    );
    report.check(
        identities,
        format!("Spec Z: (0) and (1) are the identities for all m <= {pair_bound}"),
    );
    report.check(
        absorption,
        format!("Spec Z: absorption laws for all m <= {pair_bound}"),
    );

    let mut associative = true;
    for m1 in 0..=triple_bound {
        let a = IntegerSubscheme::new(m1);
        for m2 in 0..=triple_bound {
            let b = IntegerSubscheme::new(m2);
            for m3 in 0..=triple_bound {
                let c = IntegerSubscheme::new(m3);
                associative &= a.mul(&b.mul(&c)) == a.mul(&b).mul(&c)
                    && a.add(&b.add(&c)) == a.add(&b).add(&c);
            }
        }
    }
    report.check(
        associative,
        format!("Spec Z: operations associative for all m <= {triple_bound}"),
    );

    for p in [2u64, 3, 5] {
        let tower: Vec<IntegerSubscheme> =
            (1..=20).map(|a| IntegerSubscheme::new(p.pow(a))).collect();
        let distinct = tower
            .iter()
            .enumerate()
            .all(|(i, a)| tower[i + 1..].iter().all(|b| a != b));
        let same_support = tower.iter().all(|a| a.support() == vec![p]);
        report.check(
            distinct && same_support,
            format!("Spec Z: (p^a) for a = 1..20 pairwise distinct with support {{{p}}}"),
        );
    }
    report
}

/// A deterministic univariate polynomial that is a product of up to four
/// linear factors with integer roots in [-3, 3]; used by the oracle
/// equivalence suites.
pub fn product_of_linear_factors(roots: &[i64]) -> Poly {
    let x = Poly::var(1, 0);
    let mut f = Poly::one(1);
    for &r in roots {
        let factor = &x - &Poly::constant(1, Rational::from_integer(r.into()));
        f = &f * &factor;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn up(text: &str) -> Poly {
        parse_polynomial(text, &["x".to_string()]).unwrap()
    }

    #[test]
    fn integer_operations() {
        let four = IntegerSubscheme::new(4);
        let six = IntegerSubscheme::new(6);
        assert_eq!(four.mul(&six), IntegerSubscheme::new(2));
        assert_eq!(four.add(&six), IntegerSubscheme::new(12));
        let m = IntegerSubscheme::new(35);
        assert_eq!(m.mul(&IntegerSubscheme::whole()), m);
        assert_eq!(m.add(&IntegerSubscheme::empty()), m);
        assert_eq!(m.mul(&m), m);
        assert_eq!(m.add(&IntegerSubscheme::whole()), IntegerSubscheme::whole());
    }

    #[test]
    fn prime_tower_distinct() {
        let tower: Vec<_> = (1..=20u32).map(|a| IntegerSubscheme::new(2u64.pow(a))).collect();
        for (i, a) in tower.iter().enumerate() {
            assert_eq!(a.support(), vec![2]);
            for b in &tower[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn cyclic_laws_small() {
        assert!(cyc_laws(12).is_ok());
        assert!(cyc_laws(1).is_ok());
        assert!(cyc_laws(36).is_ok());
    }

    #[test]
    fn cyclic_extension_example() {
        // In Z/36, extension to Z/6 of (4) and (9): the additive law holds.
        let a = CyclicRingSubscheme::new(36, 4).unwrap();
        let b = CyclicRingSubscheme::new(36, 9).unwrap();
        let lhs = a.add(&b).extend_to(6);
        let rhs = a.extend_to(6).add(&b.extend_to(6));
        assert_eq!(lhs.divisor(), 6);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn euclidean_oracle() {
        // f = x^2 (x - 1), g = x (x - 1)^2: lcm = x^2 (x - 1)^2.
        let f = up("x^3 - x^2");
        let g = up("x^3 - 2*x^2 + x");
        let lcm = uni_intersect_oracle(&f, &g).unwrap();
        assert_eq!(lcm, up("x^4 - 2*x^3 + x^2"));
        assert_eq!(uni_gcd(&f, &g).unwrap(), up("x^2 - x"));

        // f = g: monic f.
        let h = up("2*x^2 - 2");
        assert_eq!(uni_intersect_oracle(&h, &h).unwrap(), up("x^2 - 1"));

        // Coprime linear factors.
        let a = up("x");
        let b = up("x - 1");
        assert_eq!(uni_intersect_oracle(&a, &b).unwrap(), up("x^2 - x"));
        assert!(uni_gcd(&a, &b).unwrap().is_one());

        assert_eq!(
            uni_intersect_oracle(&Poly::zero(1), &a).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn factor_products() {
        assert_eq!(product_of_linear_factors(&[0, 1]), up("x^2 - x"));
        assert!(product_of_linear_factors(&[]).is_one());
    }
}
