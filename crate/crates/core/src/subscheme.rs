//! Closed subschemes of a glued scheme, as compatible ideal families.
//!
//! A closed subscheme is stored as one canonical ideal per patch.
//! Compatibility on an overlap compares the transported patch-`i` ideal
//! with the saturation of the patch-`j` ideal at the glueing element, so
//! non-saturated data like `(x^2)` on a single chart stays legal while the
//! comparison itself happens in the localization. Multiplication is the
//! scheme-theoretic intersection (per-patch ideal sum), addition the
//! scheme-theoretic union (per-patch ideal intersection); both are
//! commutative idempotent monoids with the whole and empty subschemes as
//! identities, and pullback along a morphism is per-patch ideal extension.
//!
//! Pullback preserves multiplication but does not preserve addition
//! (extension does not commute with ideal intersection); see the crate
//! README for the diagonal witness. The addition law is therefore exposed
//! as a reported check rather than an invariant.

use std::sync::Arc;

use crate::algebra::{Ideal, RingMap};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scheme::{GluedScheme, SchemeMorphism};
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSubscheme {
    scheme: Arc<GluedScheme>,
    ideals: Vec<Ideal>,
}

impl ClosedSubscheme {
    /// Build from one generator list per patch; every patch ideal is put
    /// in canonical form.
    pub fn new(scheme: &Arc<GluedScheme>, patch_gens: Vec<Vec<Poly>>) -> Result<Self> {
        if patch_gens.len() != scheme.patches().len() {
            return Err(Error::BadPresentation(format!(
                "expected one generator list per patch ({}), got {}",
                scheme.patches().len(),
                patch_gens.len()
            )));
        }
        let ideals = scheme
            .patches()
            .iter()
            .zip(patch_gens)
            .map(|(patch, gens)| Ideal::new(patch, gens))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme {
            scheme: Arc::clone(scheme),
            ideals,
        })
    }

    pub fn from_ideals(scheme: &Arc<GluedScheme>, ideals: Vec<Ideal>) -> Result<Self> {
        let gens = ideals.iter().map(|i| i.basis().to_vec()).collect();
        let built = Self::new(scheme, gens)?;
        for (given, rebuilt) in ideals.iter().zip(&built.ideals) {
            if given.algebra() != rebuilt.algebra() {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(built)
    }

    /// The whole scheme as a subscheme of itself: zero ideal on every patch.
    pub fn whole(scheme: &Arc<GluedScheme>) -> Self {
        ClosedSubscheme {
            scheme: Arc::clone(scheme),
            ideals: scheme.patches().iter().map(Ideal::zero).collect(),
        }
    }

    /// The empty subscheme: unit ideal on every patch.
    pub fn empty(scheme: &Arc<GluedScheme>) -> Self {
        ClosedSubscheme {
            scheme: Arc::clone(scheme),
            ideals: scheme.patches().iter().map(Ideal::unit).collect(),
        }
    }

    pub fn scheme(&self) -> &Arc<GluedScheme> {
        &self.scheme
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, patch: usize) -> &Ideal {
        &self.ideals[patch]
    }

    /// Re-canonicalize every patch ideal. Construction already does this,
    /// so `canon` is idempotent and `canon(z) == z`.
    pub fn canon(&self) -> Self {
        let ideals = self
            .ideals
            .iter()
            .map(|i| Ideal::new(i.algebra(), i.basis().to_vec()).expect("already canonical"))
            .collect();
        ClosedSubscheme {
            scheme: Arc::clone(&self.scheme),
            ideals,
        }
    }

    fn check_same_scheme(&self, other: &Self) -> Result<()> {
        if self.scheme.as_ref() != other.scheme.as_ref() {
            return Err(Error::SchemeMismatch);
        }
        Ok(())
    }

    /// Equality of closed subschemes: identical canonical ideal families.
    pub fn eq_subscheme(&self, other: &Self) -> Result<bool> {
        self.check_same_scheme(other)?;
        Ok(self.ideals == other.ideals)
    }

    /// Check overlap compatibility: for every glue record `(i, j)` the
    /// transported patch-`i` ideal must equal the patch-`j` ideal
    /// saturated at the glueing element.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        for rec in self.scheme.glue() {
            let tag = format!("patch ideals over glue({},{})", rec.i, rec.j);
            let transported = match self.scheme.transport(rec.i, rec.j, &self.ideals[rec.i]) {
                Ok(t) => t,
                Err(e) => {
                    report.fail(format!("{tag}: {e}"));
                    continue;
                }
            };
            let saturated = match self.ideals[rec.j].saturate(&rec.f_ji) {
                Ok(s) => s,
                Err(e) => {
                    report.fail(format!("{tag}: {e}"));
                    continue;
                }
            };
            report.check(transported == saturated, format!("{tag}: compatible"));
        }
        report
    }

    /// Scheme-theoretic intersection: per-patch ideal sum.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_scheme(other)?;
        let ideals = self
            .ideals
            .iter()
            .zip(&other.ideals)
            .map(|(a, b)| a.sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme {
            scheme: Arc::clone(&self.scheme),
            ideals,
        })
    }

    /// Scheme-theoretic union: per-patch ideal intersection.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_scheme(other)?;
        let ideals = self
            .ideals
            .iter()
            .zip(&other.ideals)
            .map(|(a, b)| a.intersect(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme {
            scheme: Arc::clone(&self.scheme),
            ideals,
        })
    }

    /// Pullback along a morphism `f: X -> Y` of a subscheme of `Y`: on
    /// each `X`-patch, the extension of the assigned target patch's ideal.
    pub fn pullback(f: &SchemeMorphism, z: &ClosedSubscheme) -> Result<ClosedSubscheme> {
        if f.target().as_ref() != z.scheme.as_ref() {
            return Err(Error::SchemeMismatch);
        }
        for pm in f.patch_maps() {
            if !pm.map.is_well_defined()? {
                return Err(Error::InvalidMorphism(
                    "patch map is not well-defined".into(),
                ));
            }
        }
        let ideals = f
            .patch_maps()
            .iter()
            .map(|pm| pm.map.extend(&z.ideals[pm.target_patch]))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSubscheme {
            scheme: Arc::clone(f.source()),
            ideals,
        })
    }

    /// The closed subscheme of the single-patch scheme `Spec A` presented
    /// by a surjection out of `A`: its ideal is the kernel, the unique
    /// ideal realizing the map as `A -> A/I`.
    pub fn from_surjection(phi: &RingMap) -> Result<ClosedSubscheme> {
        if !phi.is_surjective()? {
            return Err(Error::NotSurjective);
        }
        let scheme = Arc::new(GluedScheme::affine(phi.source().clone()));
        let kernel = phi.kernel()?;
        ClosedSubscheme::from_ideals(&scheme, vec![kernel])
    }

    /// Render the family as `[ (…) ; (…) ]` in patch order.
    pub fn display_string(&self) -> String {
        let parts: Vec<String> = self.ideals.iter().map(|i| i.display_string()).collect();
        format!("[ {} ]", parts.join(" ; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AffineAlgebra;
    use crate::monomial::MonomialOrder;
    use crate::scheme::PatchMap;

    fn qq(names: &[&str]) -> AffineAlgebra {
        AffineAlgebra::free(names.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn p1() -> Arc<GluedScheme> {
        let mut x = GluedScheme::new(vec![qq(&["u"]), qq(&["v"])], Vec::new()).unwrap();
        let u = x.patches()[0].parse("u").unwrap();
        let v = x.patches()[1].parse("v").unwrap();
        x.glue_symmetric(0, 1, u, v, vec![Poly::var(2, 1)], None)
            .unwrap();
        Arc::new(x)
    }

    fn sub(scheme: &Arc<GluedScheme>, gens: &[&[&str]]) -> ClosedSubscheme {
        let patch_gens = gens
            .iter()
            .zip(scheme.patches())
            .map(|(list, patch)| {
                list.iter()
                    .map(|t| patch.parse(t).unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
        ClosedSubscheme::new(scheme, patch_gens).unwrap()
    }

    #[test]
    fn point_family_is_compatible() {
        let x = p1();
        let z = sub(&x, &[&["u - 2"], &["2*v - 1"]]);
        assert!(z.validate().is_ok());
    }

    #[test]
    fn incompatible_family_detected() {
        let x = p1();
        let z = sub(&x, &[&["u - 2"], &["v - 1"]]);
        assert!(!z.validate().is_ok());
    }

    #[test]
    fn single_patch_families_always_compatible() {
        let a = Arc::new(GluedScheme::affine(qq(&["x", "y"])));
        let z = sub(&a, &[&["x^2", "x*y"]]);
        assert!(z.validate().is_ok());
    }

    #[test]
    fn canonicalization_and_equality() {
        let a = Arc::new(GluedScheme::affine(qq(&["x", "y"])));
        let z = sub(&a, &[&["x + y", "y"]]);
        let w = sub(&a, &[&["x", "y"]]);
        assert!(z.eq_subscheme(&w).unwrap());
        assert_eq!(z.canon(), z);
        // Generator permutation gives the same canonical value.
        let p = sub(&a, &[&["y", "x + y"]]);
        assert_eq!(p, z);

        let x = p1();
        let z1 = sub(&x, &[&["u - 2"], &["2*v - 1"]]);
        let z2 = sub(&x, &[&["2*u - 4"], &["v - 1/2"]]);
        assert!(z1.eq_subscheme(&z2).unwrap());

        assert!(!ClosedSubscheme::whole(&x)
            .eq_subscheme(&ClosedSubscheme::empty(&x))
            .unwrap());
    }

    #[test]
    fn identities() {
        let x = p1();
        let z = sub(&x, &[&["u - 2"], &["2*v - 1"]]);
        let whole = ClosedSubscheme::whole(&x);
        let empty = ClosedSubscheme::empty(&x);
        assert_eq!(z.mul(&whole).unwrap(), z);
        assert_eq!(z.add(&empty).unwrap(), z);
        assert_eq!(z.mul(&empty).unwrap(), empty);
        assert_eq!(z.add(&whole).unwrap(), whole);
        // Idempotency.
        assert_eq!(z.mul(&z).unwrap(), z);
        assert_eq!(z.add(&z).unwrap(), z);
    }

    #[test]
    fn plane_axes() {
        let a = Arc::new(GluedScheme::affine(qq(&["x", "y"])));
        let vx = sub(&a, &[&["x"]]);
        let vy = sub(&a, &[&["y"]]);
        assert_eq!(vx.mul(&vy).unwrap(), sub(&a, &[&["x", "y"]]));
        assert_eq!(vx.add(&vy).unwrap(), sub(&a, &[&["x*y"]]));
    }

    #[test]
    fn pullback_examples() {
        // Diagonal: Spec QQ[t] -> Spec QQ[x,y], x -> t, y -> t.
        let plane = Arc::new(GluedScheme::affine(qq(&["x", "y"])));
        let line = Arc::new(GluedScheme::affine(qq(&["t"])));
        let t = line.patches()[0].parse("t").unwrap();
        let diag = SchemeMorphism::new(
            Arc::clone(&line),
            Arc::clone(&plane),
            vec![PatchMap {
                target_patch: 0,
                map: RingMap::new(&plane.patches()[0], &line.patches()[0], vec![t.clone(), t])
                    .unwrap(),
            }],
        )
        .unwrap();

        let v_xy = sub(&plane, &[&["x*y"]]);
        let pulled = ClosedSubscheme::pullback(&diag, &v_xy).unwrap();
        assert_eq!(pulled, sub(&line, &[&["t^2"]]));

        let id = SchemeMorphism::identity(&plane);
        assert_eq!(ClosedSubscheme::pullback(&id, &v_xy).unwrap(), v_xy);

        assert_eq!(
            ClosedSubscheme::pullback(&diag, &ClosedSubscheme::whole(&plane)).unwrap(),
            ClosedSubscheme::whole(&line)
        );
    }

    #[test]
    fn pullback_addition_fails_on_the_diagonal() {
        let plane = Arc::new(GluedScheme::affine(qq(&["x", "y"])));
        let line = Arc::new(GluedScheme::affine(qq(&["t"])));
        let t = line.patches()[0].parse("t").unwrap();
        let diag = SchemeMorphism::new(
            Arc::clone(&line),
            Arc::clone(&plane),
            vec![PatchMap {
                target_patch: 0,
                map: RingMap::new(&plane.patches()[0], &line.patches()[0], vec![t.clone(), t])
                    .unwrap(),
            }],
        )
        .unwrap();
        let vx = sub(&plane, &[&["x"]]);
        let vy = sub(&plane, &[&["y"]]);
        let union_then_pull =
            ClosedSubscheme::pullback(&diag, &vx.add(&vy).unwrap()).unwrap();
        let pull_then_union = ClosedSubscheme::pullback(&diag, &vx)
            .unwrap()
            .add(&ClosedSubscheme::pullback(&diag, &vy).unwrap())
            .unwrap();
        assert_eq!(union_then_pull, sub(&line, &[&["t^2"]]));
        assert_eq!(pull_then_union, sub(&line, &[&["t"]]));
        assert_ne!(union_then_pull, pull_then_union);
    }

    #[test]
    fn from_surjection_examples() {
        let a = qq(&["x"]);
        let scheme = Arc::new(GluedScheme::affine(a.clone()));
        let mut seen = Vec::new();
        for n in 1..=5 {
            let i = Ideal::parse(&a, &[&format!("x^{n}")]).unwrap();
            let z = ClosedSubscheme::from_surjection(&i.quotient_map()).unwrap();
            let direct = ClosedSubscheme::from_ideals(&scheme, vec![i]).unwrap();
            assert!(z.eq_subscheme(&direct).unwrap());
            assert!(!seen.contains(&z));
            seen.push(z);
        }

        let id = RingMap::identity(&a);
        let whole = ClosedSubscheme::from_surjection(&id).unwrap();
        assert!(whole
            .eq_subscheme(&ClosedSubscheme::whole(&scheme))
            .unwrap());

        let xy = qq(&["x", "y"]);
        let tline = qq(&["t"]);
        let param = RingMap::new(
            &xy,
            &tline,
            vec![tline.parse("t^2").unwrap(), tline.parse("t^3").unwrap()],
        )
        .unwrap();
        assert_eq!(
            ClosedSubscheme::from_surjection(&param).unwrap_err(),
            Error::NotSurjective
        );
    }

    #[test]
    fn whole_of_a_zero_ring_patch_is_the_unit_ideal() {
        let zero_ring = AffineAlgebra::new(
            vec!["x"],
            vec![Poly::one(1)],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let x = Arc::new(GluedScheme::affine(zero_ring));
        let whole = ClosedSubscheme::whole(&x);
        assert!(whole.ideal(0).is_unit());
        // On the empty patch the whole and empty subschemes coincide.
        assert!(whole.eq_subscheme(&ClosedSubscheme::empty(&x)).unwrap());
    }

    #[test]
    fn operations_preserve_compatibility() {
        let x = p1();
        let z = sub(&x, &[&["u - 2"], &["2*v - 1"]]);
        let w = sub(&x, &[&["u - 3"], &["3*v - 1"]]);
        let product = z.mul(&w).unwrap();
        let union = z.add(&w).unwrap();
        assert!(product.validate().is_ok());
        assert!(union.validate().is_ok());
        assert_eq!(
            union.ideal(0),
            &Ideal::parse(&x.patches()[0], &["(u - 2)*(u - 3)"]).unwrap()
        );
    }
}
