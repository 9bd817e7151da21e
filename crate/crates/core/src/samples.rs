//! Ready-made schemes and morphisms used by the law suites and tests.

use std::sync::Arc;

use crate::algebra::{AffineAlgebra, RingMap};
use crate::monomial::MonomialOrder;
use crate::scheme::{GluedScheme, PatchMap, SchemeMorphism};
use crate::Poly;

fn free(names: &[&str]) -> AffineAlgebra {
    AffineAlgebra::free(names.to_vec(), MonomialOrder::GrevLex).expect("valid names")
}

/// Spec QQ[t].
pub fn affine_line() -> Arc<GluedScheme> {
    Arc::new(GluedScheme::affine(free(&["t"])))
}

/// Spec QQ[x, y].
pub fn affine_plane() -> Arc<GluedScheme> {
    Arc::new(GluedScheme::affine(free(&["x", "y"])))
}

/// The projective line: patches QQ[u] and QQ[v] glued along D(u) ≅ D(v),
/// with u mapping to the inverse of v.
pub fn projective_line() -> Arc<GluedScheme> {
    let mut x = GluedScheme::new(vec![free(&["u"]), free(&["v"])], Vec::new()).expect("patches");
    let u = x.patches()[0].parse("u").expect("parse");
    let v = x.patches()[1].parse("v").expect("parse");
    x.glue_symmetric(0, 1, u, v, vec![Poly::var(2, 1)], None)
        .expect("invertible glueing");
    Arc::new(x)
}

/// The affine line glued to itself along D(u): the line with doubled
/// origin, a valid glueing that is not separated.
pub fn doubled_origin_line() -> Arc<GluedScheme> {
    let mut x = GluedScheme::new(vec![free(&["u"]), free(&["t"])], Vec::new()).expect("patches");
    let u = x.patches()[0].parse("u").expect("parse");
    let t = x.patches()[1].parse("t").expect("parse");
    x.glue_symmetric(0, 1, u, t, vec![Poly::var(2, 0)], None)
        .expect("invertible glueing");
    Arc::new(x)
}

/// The projective plane in its three standard charts
/// QQ[a,b], QQ[c,d], QQ[e,g]; exercises the triple-overlap cocycle.
pub fn projective_plane() -> Arc<GluedScheme> {
    let mut x = GluedScheme::new(
        vec![free(&["a", "b"]), free(&["c", "d"]), free(&["e", "g"])],
        Vec::new(),
    )
    .expect("patches");
    // Localized charts have arity 3 with the inverse variable last.
    let s = Poly::var(3, 2);
    let d = Poly::var(3, 1);
    let g = Poly::var(3, 1);
    let e = Poly::var(3, 0);
    let a = x.patches()[0].parse("a").expect("parse");
    let b = x.patches()[0].parse("b").expect("parse");
    let c = x.patches()[1].parse("c").expect("parse");
    let dd = x.patches()[1].parse("d").expect("parse");
    let ee = x.patches()[2].parse("e").expect("parse");
    let gg = x.patches()[2].parse("g").expect("parse");
    // On D(a) ≅ D(c): a -> 1/c, b -> d/c.
    x.glue_symmetric(0, 1, a, c, vec![s.clone(), &d * &s], None)
        .expect("invertible glueing");
    // On D(b) ≅ D(e): a -> g/e, b -> 1/e.
    x.glue_symmetric(0, 2, b, ee, vec![&g * &s, s.clone()], None)
        .expect("invertible glueing");
    // On D(d) ≅ D(g): c -> e/g, d -> 1/g.
    x.glue_symmetric(1, 2, dd, gg, vec![&e * &s, s], None)
        .expect("invertible glueing");
    Arc::new(x)
}

/// The squaring endomorphism of the projective line: u -> u^2, v -> v^2.
pub fn squaring_on_projective_line(p1: &Arc<GluedScheme>) -> SchemeMorphism {
    let u2 = p1.patches()[0].parse("u^2").expect("parse");
    let v2 = p1.patches()[1].parse("v^2").expect("parse");
    SchemeMorphism::new(
        Arc::clone(p1),
        Arc::clone(p1),
        vec![
            PatchMap {
                target_patch: 0,
                map: RingMap::new(&p1.patches()[0], &p1.patches()[0], vec![u2]).expect("map"),
            },
            PatchMap {
                target_patch: 1,
                map: RingMap::new(&p1.patches()[1], &p1.patches()[1], vec![v2]).expect("map"),
            },
        ],
    )
    .expect("morphism")
}

/// The diagonal Spec QQ[t] -> Spec QQ[x, y], x -> t, y -> t.
pub fn diagonal_morphism(line: &Arc<GluedScheme>, plane: &Arc<GluedScheme>) -> SchemeMorphism {
    let t = line.patches()[0].parse("t").expect("parse");
    SchemeMorphism::new(
        Arc::clone(line),
        Arc::clone(plane),
        vec![PatchMap {
            target_patch: 0,
            map: RingMap::new(&plane.patches()[0], &line.patches()[0], vec![t.clone(), t])
                .expect("map"),
        }],
    )
    .expect("morphism")
}

/// A morphism of single-patch schemes given by variable substitutions.
pub fn substitution_morphism(
    source: &Arc<GluedScheme>,
    target: &Arc<GluedScheme>,
    images: Vec<Poly>,
) -> SchemeMorphism {
    SchemeMorphism::new(
        Arc::clone(source),
        Arc::clone(target),
        vec![PatchMap {
            target_patch: 0,
            map: RingMap::new(&target.patches()[0], &source.patches()[0], images).expect("map"),
        }],
    )
    .expect("morphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_satisfies_cocycles() {
        let p2 = projective_plane();
        let report = p2.validate(true);
        assert!(report.is_ok(), "{report}");
        // All six ordered triples actually got checked.
        let cocycle_lines = report
            .entries()
            .iter()
            .filter(|e| e.message.starts_with("cocycle"))
            .count();
        assert_eq!(cocycle_lines, 6);
    }

    #[test]
    fn fixtures_validate() {
        assert!(projective_line().validate(true).is_ok());
        assert!(doubled_origin_line().validate(true).is_ok());
        let p1 = projective_line();
        assert!(squaring_on_projective_line(&p1).validate().is_ok());
        let line = affine_line();
        let plane = affine_plane();
        assert!(diagonal_morphism(&line, &plane).validate().is_ok());
    }
}
