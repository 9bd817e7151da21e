//! Finitely presented algebras over the rationals, ideals in them, and
//! ring homomorphisms.
//!
//! A quotient ring is carried as its list of relations: an ideal of
//! `QQ[vars]/Q` is identified with an ideal of `QQ[vars]` containing `Q`,
//! so every [`Ideal`] silently includes the relations and its canonical
//! form is the reduced Groebner basis of (generators ∪ relations). All
//! ideal-returning operations canonicalize, which turns ideal equality
//! into structural equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{normal_form, reduced_groebner_basis};
use crate::monomial::MonomialOrder;
use crate::text::{format_polynomial, parse_polynomial};
use crate::Poly;

/// Prefix reserved for internally generated variables.
pub const RESERVED_PREFIX: char = '#';

/// A finitely presented algebra `QQ[vars] / (relations)` with a fixed
/// canonical monomial order. Relations are stored as their reduced
/// Groebner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineAlgebra {
    vars: Vec<String>,
    relations: Vec<Poly>,
    order: MonomialOrder,
}

impl AffineAlgebra {
    /// A polynomial ring with no relations.
    pub fn free<S: Into<String>>(vars: Vec<S>, order: MonomialOrder) -> Result<Self> {
        Self::new(vars, Vec::new(), order)
    }

    pub fn new<S: Into<String>>(
        vars: Vec<S>,
        relation_gens: Vec<Poly>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for name in &vars {
            if !is_identifier(name) {
                return Err(Error::BadPresentation(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
        }
        Self::with_reserved(vars, relation_gens, order)
    }

    /// Constructor that admits `#`-prefixed auxiliary names; how fresh
    /// variables produced by localization and elimination get built.
    pub(crate) fn with_reserved(
        vars: Vec<String>,
        relation_gens: Vec<Poly>,
        order: MonomialOrder,
    ) -> Result<Self> {
        for (k, name) in vars.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::BadPresentation("empty variable name".into()));
            }
            if vars[..k].contains(name) {
                return Err(Error::BadPresentation(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        for f in &relation_gens {
            if f.arity() != vars.len() {
                return Err(Error::RingMismatch {
                    left: vars.len(),
                    right: f.arity(),
                });
            }
        }
        let relations = reduced_groebner_basis(&relation_gens, order)?.into_generators();
        Ok(AffineAlgebra {
            vars,
            relations,
            order,
        })
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The defining relations, as a reduced Groebner basis.
    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// True for the zero ring, i.e. when the relations generate the unit
    /// ideal.
    pub fn is_zero_ring(&self) -> bool {
        self.relations.len() == 1 && self.relations[0].is_one()
    }

    /// The canonical residue representative of `f` modulo the relations.
    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        self.check_member(f)?;
        normal_form(f, &self.relations, self.order)
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Ok(parse_polynomial(text, &self.vars)?)
    }

    pub fn format(&self, f: &Poly) -> String {
        format_polynomial(f, &self.vars, self.order)
    }

    fn check_member(&self, f: &Poly) -> Result<()> {
        if f.arity() != self.arity() {
            return Err(Error::RingMismatch {
                left: self.arity(),
                right: f.arity(),
            });
        }
        Ok(())
    }

    /// A fresh auxiliary name `#0`, `#1`, ... not yet used by this algebra.
    pub(crate) fn fresh_name(&self) -> String {
        let mut k = 0usize;
        loop {
            let candidate = format!("{RESERVED_PREFIX}{k}");
            if !self.vars.contains(&candidate) {
                return candidate;
            }
            k += 1;
        }
    }

    /// The multiplicative inverse of `w` in this algebra, if one exists.
    ///
    /// Solves `z*w = 1` by eliminating `z` from the graph ideal and
    /// verifies the candidate, so nilpotents and zero divisors come back
    /// as `None`.
    pub fn inverse_of(&self, w: &Poly) -> Result<Option<Poly>> {
        self.check_member(w)?;
        let n = self.arity();
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Poly> = self
            .relations
            .iter()
            .map(|f| f.embed(n + 1, &shift))
            .collect();
        let z = Poly::var(n + 1, 0);
        gens.push(&(&z * &w.embed(n + 1, &shift)) - &Poly::one(n + 1));
        let gb = reduced_groebner_basis(&gens, MonomialOrder::Block(1))?;
        let nf = normal_form(&z, gb.generators(), MonomialOrder::Block(1))?;
        if nf.uses_var(0) {
            return Ok(None);
        }
        let candidate = nf.select_vars(&shift);
        let check = self.reduce(&(&(&candidate * w) - &Poly::one(n)))?;
        Ok(if check.is_zero() { Some(candidate) } else { None })
    }
}

impl fmt::Display for AffineAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| self.format(r)).collect();
            write!(f, " / ({})", rels.join(", "))?;
        }
        Ok(())
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Eliminate the variables listed in `elim` from the ideal generated by
/// `gens` in a free ring of the given arity: the returned polynomials
/// generate the contraction to the remaining variables (in their original
/// relative order) and form a reduced Groebner basis under grevlex.
pub(crate) fn eliminate_raw(gens: &[Poly], arity: usize, elim: &[usize]) -> Result<Vec<Poly>> {
    debug_assert!(elim.windows(2).all(|w| w[0] < w[1]));
    let keep: Vec<usize> = (0..arity).filter(|i| !elim.contains(i)).collect();
    let mut perm = elim.to_vec();
    perm.extend_from_slice(&keep);
    let permuted: Vec<Poly> = gens.iter().map(|f| f.select_vars(&perm)).collect();
    let gb = reduced_groebner_basis(&permuted, MonomialOrder::Block(elim.len()))?;
    let kept_range: Vec<usize> = (elim.len()..arity).collect();
    Ok(gb
        .generators()
        .iter()
        .filter(|f| (0..elim.len()).all(|i| !f.uses_var(i)))
        .map(|f| f.select_vars(&kept_range))
        .collect())
}

/// A finitely generated ideal of an [`AffineAlgebra`], kept in canonical
/// form: the reduced Groebner basis of (generators ∪ relations) under the
/// algebra's canonical order. Structural equality is ideal equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    algebra: AffineAlgebra,
    basis: Vec<Poly>,
}

impl Ideal {
    pub fn new(algebra: &AffineAlgebra, gens: Vec<Poly>) -> Result<Self> {
        for f in &gens {
            algebra.check_member(f)?;
        }
        let mut all = gens;
        all.extend_from_slice(&algebra.relations);
        let basis = reduced_groebner_basis(&all, algebra.order)?.into_generators();
        Ok(Ideal {
            algebra: algebra.clone(),
            basis,
        })
    }

    pub fn parse(algebra: &AffineAlgebra, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|t| algebra.parse(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, gens)
    }

    pub fn zero(algebra: &AffineAlgebra) -> Self {
        Ideal {
            algebra: algebra.clone(),
            basis: algebra.relations.to_vec(),
        }
    }

    pub fn unit(algebra: &AffineAlgebra) -> Self {
        Ideal::new(algebra, vec![Poly::one(algebra.arity())]).expect("one ring")
    }

    pub fn algebra(&self) -> &AffineAlgebra {
        &self.algebra
    }

    /// The canonical generators: a reduced Groebner basis containing the
    /// relation ideal.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// True iff the canonical form is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// True iff this is the zero ideal of the algebra (only the relations).
    pub fn is_zero_ideal(&self) -> bool {
        self.basis == self.algebra.relations
    }

    fn check_same_algebra(&self, other: &Ideal) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        self.algebra.check_member(f)?;
        Ok(normal_form(f, &self.basis, self.algebra.order)?.is_zero())
    }

    /// Ideal equality with an algebra-mismatch check; equal canonical
    /// forms are term-for-term identical.
    pub fn eq_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_same_algebra(other)?;
        Ok(self.basis == other.basis)
    }

    /// `I + J`: concatenate generators and reduce.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_algebra(other)?;
        let mut gens = self.basis.clone();
        gens.extend_from_slice(&other.basis);
        Ideal::new(&self.algebra, gens)
    }

    /// `I ∩ J`, computed by eliminating a fresh variable `t` from
    /// `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_algebra(other)?;
        let n = self.algebra.arity();
        let shift: Vec<usize> = (1..=n).collect();
        let t = Poly::var(n + 1, 0);
        let one_minus_t = &Poly::one(n + 1) - &t;
        let mut gens: Vec<Poly> = Vec::with_capacity(self.basis.len() + other.basis.len());
        for f in &self.basis {
            gens.push(&t * &f.embed(n + 1, &shift));
        }
        for g in &other.basis {
            gens.push(&one_minus_t * &g.embed(n + 1, &shift));
        }
        Ideal::new(&self.algebra, eliminate_raw(&gens, n + 1, &[0])?)
    }

    /// The saturation `(I : f^∞)`, computed by eliminating a fresh `s`
    /// from `I + (1 - s f)`.
    pub fn saturate(&self, f: &Poly) -> Result<Ideal> {
        self.algebra.check_member(f)?;
        let n = self.algebra.arity();
        let shift: Vec<usize> = (1..=n).collect();
        let s = Poly::var(n + 1, 0);
        let mut gens: Vec<Poly> = self.basis.iter().map(|g| g.embed(n + 1, &shift)).collect();
        gens.push(&Poly::one(n + 1) - &(&s * &f.embed(n + 1, &shift)));
        Ideal::new(&self.algebra, eliminate_raw(&gens, n + 1, &[0])?)
    }

    /// Contract to the subring on all but the first `k` variables.
    ///
    /// The result lives in the algebra presented by the remaining
    /// variables with the contracted relation ideal.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        let n = self.algebra.arity();
        assert!(k <= n, "cannot eliminate more variables than the ring has");
        let elim: Vec<usize> = (0..k).collect();
        let gens = eliminate_raw(&self.basis, n, &elim)?;
        let relations = eliminate_raw(&self.algebra.relations, n, &elim)?;
        let target = AffineAlgebra::with_reserved(
            self.algebra.vars[k..].to_vec(),
            relations,
            self.algebra.order,
        )?;
        Ideal::new(&target, gens)
    }

    /// The canonical surjection `A -> A/I`, identity on variables.
    pub fn quotient_map(&self) -> RingMap {
        let target = AffineAlgebra {
            vars: self.algebra.vars.clone(),
            relations: self.basis.clone(),
            order: self.algebra.order,
        };
        let images = (0..self.algebra.arity())
            .map(|i| Poly::var(self.algebra.arity(), i))
            .collect();
        RingMap::new(&self.algebra, &target, images).expect("identity images are well-formed")
    }

    /// Render the canonical generators as `(g1, g2, ...)`; the zero ideal
    /// of a free algebra prints as `(0)`.
    pub fn display_string(&self) -> String {
        if self.basis.is_empty() {
            return "(0)".to_string();
        }
        let gens: Vec<String> = self.basis.iter().map(|g| self.algebra.format(g)).collect();
        format!("({})", gens.join(", "))
    }
}

/// A homomorphism of affine algebras, given by one target polynomial per
/// source variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    source: AffineAlgebra,
    target: AffineAlgebra,
    images: Vec<Poly>,
}

impl RingMap {
    pub fn new(source: &AffineAlgebra, target: &AffineAlgebra, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.arity() {
            return Err(Error::BadPresentation(format!(
                "expected {} variable images, got {}",
                source.arity(),
                images.len()
            )));
        }
        for img in &images {
            target.check_member(img)?;
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(algebra: &AffineAlgebra) -> Self {
        let images = (0..algebra.arity())
            .map(|i| Poly::var(algebra.arity(), i))
            .collect();
        RingMap {
            source: algebra.clone(),
            target: algebra.clone(),
            images,
        }
    }

    pub fn source(&self) -> &AffineAlgebra {
        &self.source
    }

    pub fn target(&self) -> &AffineAlgebra {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// True iff every source relation maps to zero in the target, i.e.
    /// the map descends to the quotients.
    pub fn is_well_defined(&self) -> Result<bool> {
        for r in self.source.relations() {
            if !self.apply(r)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn require_well_defined(&self) -> Result<()> {
        for r in self.source.relations() {
            if !self.apply(r)?.is_zero() {
                return Err(Error::IllDefinedMap(self.source.format(r)));
            }
        }
        Ok(())
    }

    /// Apply to a source element: substitute images and reduce modulo the
    /// target relations.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        self.source.check_member(f)?;
        let substituted = f.substitute(&self.images, self.target.arity())?;
        self.target.reduce(&substituted)
    }

    /// `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &RingMap) -> Result<RingMap> {
        if inner.target != self.source {
            return Err(Error::AlgebraMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(&inner.source, &self.target, images)
    }

    // Reduced basis of the graph ideal (target relations + x_i - image_i)
    // in QQ[target vars renamed to auxiliaries, source vars], under the
    // order eliminating the target block.
    fn graph_basis(&self) -> Result<Vec<Poly>> {
        let m = self.target.arity();
        let n = self.source.arity();
        let target_pos: Vec<usize> = (0..m).collect();
        let mut gens: Vec<Poly> = self
            .target
            .relations()
            .iter()
            .map(|f| f.embed(m + n, &target_pos))
            .collect();
        for (i, img) in self.images.iter().enumerate() {
            gens.push(&Poly::var(m + n, m + i) - &img.embed(m + n, &target_pos));
        }
        Ok(reduced_groebner_basis(&gens, MonomialOrder::Block(m))?.into_generators())
    }

    /// The kernel, as an ideal of the source: eliminate the target
    /// variables from the graph ideal and add the source relations.
    pub fn kernel(&self) -> Result<Ideal> {
        self.require_well_defined()?;
        let m = self.target.arity();
        let n = self.source.arity();
        let graph = self.graph_basis()?;
        let source_range: Vec<usize> = (m..m + n).collect();
        let gens: Vec<Poly> = graph
            .iter()
            .filter(|f| (0..m).all(|i| !f.uses_var(i)))
            .map(|f| f.select_vars(&source_range))
            .collect();
        Ideal::new(&self.source, gens)
    }

    /// Preimages of the target variables under this map, when every one
    /// exists: the normal form of each target variable against the graph
    /// ideal, accepted only if it involves source variables alone.
    pub fn preimages(&self) -> Result<Option<Vec<Poly>>> {
        let m = self.target.arity();
        let n = self.source.arity();
        let graph = self.graph_basis()?;
        let source_range: Vec<usize> = (m..m + n).collect();
        let mut out = Vec::with_capacity(m);
        for j in 0..m {
            let nf = normal_form(&Poly::var(m + n, j), &graph, MonomialOrder::Block(m))?;
            if (0..m).any(|i| nf.uses_var(i)) {
                return Ok(None);
            }
            out.push(nf.select_vars(&source_range));
        }
        Ok(Some(out))
    }

    /// True iff every target variable has a preimage, i.e. the map is
    /// surjective onto the target.
    pub fn is_surjective(&self) -> Result<bool> {
        self.require_well_defined()?;
        Ok(self.preimages()?.is_some())
    }

    /// The extension of a source ideal: the target ideal generated by the
    /// images of its generators.
    pub fn extend(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.algebra != self.source {
            return Err(Error::AlgebraMismatch);
        }
        let gens = ideal
            .basis
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.target, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(names: &[&str]) -> AffineAlgebra {
        AffineAlgebra::free(names.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(a: &AffineAlgebra, gens: &[&str]) -> Ideal {
        Ideal::parse(a, gens).unwrap()
    }

    #[test]
    fn sum_examples() {
        let a = qq(&["x", "y"]);
        let vx = ideal(&a, &["x"]);
        let vy = ideal(&a, &["y"]);
        assert_eq!(vx.sum(&vy).unwrap(), ideal(&a, &["x", "y"]));
        assert_eq!(vx.sum(&Ideal::zero(&a)).unwrap(), vx);
        assert_eq!(
            ideal(&a, &["x^2"]).sum(&vx).unwrap(),
            vx
        );
    }

    #[test]
    fn intersect_examples() {
        let a = qq(&["x", "y"]);
        let vx = ideal(&a, &["x"]);
        let vy = ideal(&a, &["y"]);
        assert_eq!(vx.intersect(&vy).unwrap(), ideal(&a, &["x*y"]));
        assert_eq!(vx.intersect(&vx).unwrap(), vx);
        assert_eq!(
            ideal(&a, &["x^2"]).intersect(&ideal(&a, &["x*y"])).unwrap(),
            ideal(&a, &["x^2*y"])
        );
    }

    #[test]
    fn eliminate_examples() {
        let a = qq(&["t", "x", "y"]);
        let i = ideal(&a, &["t*x - 1", "t*y - 1"]);
        let contracted = i.eliminate(1).unwrap();
        let xy = qq(&["x", "y"]);
        assert_eq!(contracted, ideal(&xy, &["x - y"]));

        let no_t = ideal(&a, &["x", "y"]).eliminate(1).unwrap();
        assert_eq!(no_t, ideal(&xy, &["x", "y"]));

        let just_t = ideal(&a, &["t"]).eliminate(1).unwrap();
        assert_eq!(just_t, Ideal::zero(&xy));
    }

    #[test]
    fn saturation_examples() {
        let a = qq(&["x", "y"]);
        let i = ideal(&a, &["x^2*y"]);
        let x = a.parse("x").unwrap();
        assert_eq!(i.saturate(&x).unwrap(), ideal(&a, &["y"]));

        let j = ideal(&a, &["x^2 - y^2", "x*y"]);
        assert_eq!(j.saturate(&Poly::one(2)).unwrap(), j);

        let vx = ideal(&a, &["x"]);
        assert!(vx.saturate(&x).unwrap().is_unit());
    }

    #[test]
    fn equality_and_units() {
        let a = qq(&["x", "y"]);
        assert_eq!(ideal(&a, &["x", "y"]), ideal(&a, &["x + y", "y"]));
        assert_ne!(ideal(&a, &["x"]), ideal(&a, &["x^2"]));
        assert_eq!(ideal(&a, &["1"]), ideal(&a, &["2"]));

        assert!(ideal(&a, &["1 - x", "x"]).is_unit());
        let line = qq(&["x"]);
        assert!(!ideal(&line, &["x"]).is_unit());

        // Zero ring: the zero ideal is the unit ideal.
        let zero_ring =
            AffineAlgebra::new(vec!["x"], vec![Poly::one(1)], MonomialOrder::GrevLex).unwrap();
        assert!(zero_ring.is_zero_ring());
        assert!(Ideal::zero(&zero_ring).is_unit());
    }

    #[test]
    fn map_well_definedness() {
        let src = AffineAlgebra::new(
            vec!["x"],
            vec![qq(&["x"]).parse("x^2").unwrap()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let tgt = AffineAlgebra::new(
            vec!["t"],
            vec![qq(&["t"]).parse("t^2").unwrap()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let ok = RingMap::new(&src, &tgt, vec![Poly::var(1, 0)]).unwrap();
        assert!(ok.is_well_defined().unwrap());

        let free_t = qq(&["t"]);
        let bad = RingMap::new(&src, &free_t, vec![Poly::one(1)]).unwrap();
        assert!(!bad.is_well_defined().unwrap());

        let free_map = RingMap::new(&qq(&["x"]), &free_t, vec![free_t.parse("t^3").unwrap()]).unwrap();
        assert!(free_map.is_well_defined().unwrap());
    }

    #[test]
    fn map_application_and_composition() {
        let xy = qq(&["x", "y"]);
        let t = qq(&["t"]);
        let param = RingMap::new(
            &xy,
            &t,
            vec![t.parse("t^2").unwrap(), t.parse("t^3").unwrap()],
        )
        .unwrap();
        assert!(param.apply(&xy.parse("x^3 - y^2").unwrap()).unwrap().is_zero());

        let id = RingMap::identity(&xy);
        let f = xy.parse("x^2 - 2/3*y").unwrap();
        assert_eq!(id.apply(&f).unwrap(), f);
        assert_eq!(
            param.apply(&xy.parse("7").unwrap()).unwrap(),
            t.parse("7").unwrap()
        );

        // x -> t then t -> s^2 composes to x -> s^2.
        let s = qq(&["s"]);
        let first = RingMap::new(&qq(&["x"]), &t, vec![t.parse("t").unwrap()]).unwrap();
        let second = RingMap::new(&t, &s, vec![s.parse("s^2").unwrap()]).unwrap();
        let composed = second.compose(&first).unwrap();
        assert_eq!(composed.images(), &[s.parse("s^2").unwrap()]);
        assert_eq!(second.compose(&RingMap::identity(&t)).unwrap(), second);
        let g = t.parse("t^2 + 1").unwrap();
        let via = RingMap::new(&t, &s, vec![s.parse("s - 1").unwrap()]).unwrap();
        assert_eq!(
            via.compose(&RingMap::identity(&t)).unwrap().apply(&g).unwrap(),
            via.apply(&g).unwrap()
        );
    }

    #[test]
    fn kernel_examples() {
        let xy = qq(&["x", "y"]);
        let t = qq(&["t"]);
        let param = RingMap::new(
            &xy,
            &t,
            vec![t.parse("t^2").unwrap(), t.parse("t^3").unwrap()],
        )
        .unwrap();
        assert_eq!(param.kernel().unwrap(), ideal(&xy, &["x^3 - y^2"]));

        let id = RingMap::identity(&xy);
        assert!(id.kernel().unwrap().is_zero_ideal());

        let x = qq(&["x"]);
        let point = AffineAlgebra::free(Vec::<String>::new(), MonomialOrder::GrevLex).unwrap();
        let eval0 = RingMap::new(&x, &point, vec![Poly::zero(0)]).unwrap();
        assert_eq!(eval0.kernel().unwrap(), ideal(&x, &["x"]));
    }

    #[test]
    fn surjectivity_examples() {
        let xy = qq(&["x", "y"]);
        let t = qq(&["t"]);
        let param = RingMap::new(
            &xy,
            &t,
            vec![t.parse("t^2").unwrap(), t.parse("t^3").unwrap()],
        )
        .unwrap();
        assert!(!param.is_surjective().unwrap());

        let i = ideal(&xy, &["x^2 - y"]);
        assert!(i.quotient_map().is_surjective().unwrap());

        let iso = RingMap::new(&qq(&["x"]), &t, vec![t.parse("t").unwrap()]).unwrap();
        assert!(iso.is_surjective().unwrap());
    }

    #[test]
    fn extension_examples() {
        let xy = qq(&["x", "y"]);
        let t = qq(&["t"]);
        let diag = RingMap::new(
            &xy,
            &t,
            vec![t.parse("t").unwrap(), t.parse("t").unwrap()],
        )
        .unwrap();
        assert!(diag.extend(&ideal(&xy, &["x - y"])).unwrap().is_zero_ideal());
        assert_eq!(
            diag.extend(&ideal(&xy, &["x*y"])).unwrap(),
            ideal(&t, &["t^2"])
        );
        assert!(diag.extend(&Ideal::unit(&xy)).unwrap().is_unit());
    }

    #[test]
    fn kernel_round_trip_through_quotient() {
        let xyz = qq(&["x", "y", "z"]);
        let i = ideal(&xyz, &["x*y - z^2", "x^2 - y"]);
        assert_eq!(i.quotient_map().kernel().unwrap(), i);
    }

    #[test]
    fn inverse_of_elements() {
        // In QQ[v, s]/(s v - 1) the inverse of s^2 is v^2.
        let loc = AffineAlgebra::new(
            vec!["v", "s"],
            vec![qq(&["v", "s"]).parse("s*v - 1").unwrap()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let s2 = loc.parse("s^2").unwrap();
        assert_eq!(
            loc.inverse_of(&s2).unwrap(),
            Some(loc.parse("v^2").unwrap())
        );
        // v + 1 is not a unit there.
        assert_eq!(loc.inverse_of(&loc.parse("v + 1").unwrap()).unwrap(), None);
        // Nilpotents are not units.
        let dual = AffineAlgebra::new(
            vec!["e"],
            vec![qq(&["e"]).parse("e^2").unwrap()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        assert_eq!(dual.inverse_of(&dual.parse("e").unwrap()).unwrap(), None);
        // Constants are units.
        let free = qq(&["x"]);
        assert_eq!(
            free.inverse_of(&free.parse("2").unwrap()).unwrap(),
            Some(free.parse("1/2").unwrap())
        );
    }

    #[test]
    fn reserved_names_rejected_in_public_constructor() {
        assert!(AffineAlgebra::free(vec!["#0"], MonomialOrder::GrevLex).is_err());
        assert!(AffineAlgebra::free(vec!["x", "x"], MonomialOrder::GrevLex).is_err());
    }
}
