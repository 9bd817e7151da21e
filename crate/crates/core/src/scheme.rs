//! Schemes glued from affine patches along principal opens, and morphisms
//! between them.
//!
//! Every overlap is the principal open of a patch, so its coordinate ring
//! is the finitely presented localization `A[s]/(s f - 1)`. A glue record
//! carries the transition isomorphism between the two localized pictures;
//! ideals move across it with [`GluedScheme::transport`], which is how the
//! per-patch data of a closed subscheme is compared on overlaps.

use std::sync::Arc;

use crate::algebra::{eliminate_raw, AffineAlgebra, Ideal, RingMap};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::Poly;

/// The localization `A_f = A[s]/(s f - 1)` together with the canonical map
/// `A -> A_f`. The inverse variable gets a fresh reserved name and sits at
/// the last index.
pub fn localize(algebra: &AffineAlgebra, f: &Poly) -> Result<(AffineAlgebra, RingMap)> {
    let n = algebra.arity();
    if f.arity() != n {
        return Err(Error::RingMismatch {
            left: n,
            right: f.arity(),
        });
    }
    let mut vars = algebra.vars().to_vec();
    vars.push(algebra.fresh_name());
    let embed: Vec<usize> = (0..n).collect();
    let mut relations: Vec<Poly> = algebra
        .relations()
        .iter()
        .map(|r| r.embed(n + 1, &embed))
        .collect();
    let s = Poly::var(n + 1, n);
    relations.push(&(&s * &f.embed(n + 1, &embed)) - &Poly::one(n + 1));
    let localized = AffineAlgebra::with_reserved(vars, relations, algebra.order())?;
    let images = (0..n).map(|i| Poly::var(n + 1, i)).collect();
    let inclusion = RingMap::new(algebra, &localized, images)?;
    Ok((localized, inclusion))
}

/// One direction of a glueing: the transition isomorphism from
/// `(patch i)_{f_ij}` to `(patch j)_{f_ji}`. A well-formed scheme carries
/// the mirror record for `(j, i)` as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueRecord {
    pub i: usize,
    pub j: usize,
    pub f_ij: Poly,
    pub f_ji: Poly,
    pub theta: RingMap,
}

/// A scheme presented as affine patches glued along principal opens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedScheme {
    patches: Vec<AffineAlgebra>,
    glue: Vec<GlueRecord>,
}

impl GluedScheme {
    /// A single affine patch, no glue.
    pub fn affine(patch: AffineAlgebra) -> Self {
        GluedScheme {
            patches: vec![patch],
            glue: Vec::new(),
        }
    }

    /// Assemble from explicit records. Structural requirements (indices in
    /// range, glueing elements in the right rings, transition maps between
    /// exactly the two localizations, one record per ordered pair) are
    /// errors here; the semantic conditions are [`GluedScheme::validate`]'s
    /// job.
    pub fn new(patches: Vec<AffineAlgebra>, glue: Vec<GlueRecord>) -> Result<Self> {
        for (k, rec) in glue.iter().enumerate() {
            for idx in [rec.i, rec.j] {
                if idx >= patches.len() {
                    return Err(Error::PatchOutOfRange {
                        index: idx,
                        patches: patches.len(),
                    });
                }
            }
            if glue[..k].iter().any(|r| r.i == rec.i && r.j == rec.j) {
                return Err(Error::BadPresentation(format!(
                    "duplicate glue record for patches ({}, {})",
                    rec.i, rec.j
                )));
            }
            let (loc_i, _) = localize(&patches[rec.i], &rec.f_ij)?;
            let (loc_j, _) = localize(&patches[rec.j], &rec.f_ji)?;
            if rec.theta.source() != &loc_i || rec.theta.target() != &loc_j {
                return Err(Error::BadPresentation(format!(
                    "transition map of glue ({}, {}) does not connect the two localizations",
                    rec.i, rec.j
                )));
            }
        }
        Ok(GluedScheme { patches, glue })
    }

    pub fn patches(&self) -> &[AffineAlgebra] {
        &self.patches
    }

    pub fn patch(&self, i: usize) -> Result<&AffineAlgebra> {
        self.patches.get(i).ok_or(Error::PatchOutOfRange {
            index: i,
            patches: self.patches.len(),
        })
    }

    pub fn glue(&self) -> &[GlueRecord] {
        &self.glue
    }

    pub fn record(&self, i: usize, j: usize) -> Option<&GlueRecord> {
        self.glue.iter().find(|r| r.i == i && r.j == j)
    }

    /// Glue patches `i` and `j` along `D(f_ij) ≅ D(f_ji)`, giving the
    /// images of patch-`i` variables in the localized patch-`j` algebra.
    /// The image of the inverse variable is derived when not supplied, and
    /// the mirror transition map is derived by solving for preimages; both
    /// derivations fail on non-invertible data.
    pub fn glue_symmetric(
        &mut self,
        i: usize,
        j: usize,
        f_ij: Poly,
        f_ji: Poly,
        var_images: Vec<Poly>,
        inverse_image: Option<Poly>,
    ) -> Result<()> {
        let a_i = self.patch(i)?.clone();
        let a_j = self.patch(j)?.clone();
        if self.record(i, j).is_some() || self.record(j, i).is_some() {
            return Err(Error::BadPresentation(format!(
                "patches ({i}, {j}) are already glued"
            )));
        }
        let (loc_i, _) = localize(&a_i, &f_ij)?;
        let (loc_j, _) = localize(&a_j, &f_ji)?;
        if var_images.len() != a_i.arity() {
            return Err(Error::BadPresentation(format!(
                "expected {} variable images in glue ({i}, {j})",
                a_i.arity()
            )));
        }
        let image_of_f = loc_j.reduce(&f_ij.substitute(&var_images, loc_j.arity())?)?;
        let inv_image = match inverse_image {
            Some(p) => p,
            None => loc_j
                .inverse_of(&image_of_f)?
                .ok_or_else(|| Error::NotInvertible(loc_j.format(&image_of_f)))?,
        };
        let mut images = var_images;
        images.push(inv_image);
        let theta = RingMap::new(&loc_i, &loc_j, images)?;
        let back_images = theta
            .preimages()?
            .ok_or_else(|| Error::NotInvertible(format!("transition map of glue ({i}, {j})")))?;
        let theta_inv = RingMap::new(&loc_j, &loc_i, back_images)?;
        self.glue.push(GlueRecord {
            i,
            j,
            f_ij: f_ij.clone(),
            f_ji: f_ji.clone(),
            theta,
        });
        self.glue.push(GlueRecord {
            i: j,
            j: i,
            f_ij: f_ji,
            f_ji: f_ij,
            theta: theta_inv,
        });
        Ok(())
    }

    /// Move an ideal on patch `i` across the glueing to patch `j`: extend
    /// into the localization, across the transition map, then contract by
    /// eliminating the inverse variable. The result is saturated at
    /// `f_ji` by construction.
    pub fn transport(&self, i: usize, j: usize, ideal: &Ideal) -> Result<Ideal> {
        let rec = self.record(i, j).ok_or(Error::MissingGlue { i, j })?;
        if ideal.algebra() != &self.patches[i] {
            return Err(Error::AlgebraMismatch);
        }
        let (_, inclusion) = localize(&self.patches[i], &rec.f_ij)?;
        let extended = rec.theta.extend(&inclusion.extend(ideal)?)?;
        let n_j = self.patches[j].arity();
        let gens = eliminate_raw(extended.basis(), n_j + 1, &[n_j])?;
        Ideal::new(&self.patches[j], gens)
    }

    /// Check the glueing data: a mirror record for every record, both
    /// transition maps well-defined, and the two compositions acting as
    /// the identity on the localized variables. With `cocycle` set, also
    /// check the triple-overlap condition in double localizations for
    /// every ordered triple of pairwise glued patches.
    pub fn validate(&self, cocycle: bool) -> Report {
        let mut report = Report::new();
        for rec in &self.glue {
            let tag = format!("glue({},{})", rec.i, rec.j);
            let mirror = match self.record(rec.j, rec.i) {
                Some(m) => m,
                None => {
                    report.fail(format!("{tag}: missing mirror record"));
                    continue;
                }
            };
            if mirror.f_ij != rec.f_ji || mirror.f_ji != rec.f_ij {
                report.fail(format!("{tag}: mirror record uses different glueing elements"));
                continue;
            }
            let well = match rec.theta.is_well_defined() {
                Ok(w) => w,
                Err(e) => {
                    report.fail(format!("{tag}: {e}"));
                    continue;
                }
            };
            report.check(well, format!("{tag}: transition map well-defined"));
            if !well {
                continue;
            }
            match mirror.theta.compose(&rec.theta) {
                Ok(round) => {
                    let loc_i = rec.theta.source();
                    let identity_ok = (0..loc_i.arity()).all(|k| {
                        let v = Poly::var(loc_i.arity(), k);
                        match (round.apply(&v), loc_i.reduce(&v)) {
                            (Ok(a), Ok(b)) => a == b,
                            _ => false,
                        }
                    });
                    report.check(
                        identity_ok,
                        format!("{tag}: composition with mirror is the identity"),
                    );
                }
                Err(e) => report.fail(format!("{tag}: cannot compose with mirror: {e}")),
            }
        }
        if cocycle {
            self.validate_cocycles(&mut report);
        }
        report
    }

    fn validate_cocycles(&self, report: &mut Report) {
        let n = self.patches.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let (r_ij, r_jk, r_ik) =
                        match (self.record(i, j), self.record(j, k), self.record(i, k)) {
                            (Some(a), Some(b), Some(c)) => (a, b, c),
                            _ => continue,
                        };
                    let tag = format!("cocycle({i},{j},{k})");
                    match self.check_cocycle(r_ij, r_jk, r_ik) {
                        Ok(true) => report.pass(format!("{tag}: transition maps compose")),
                        Ok(false) => report.fail(format!("{tag}: transition maps do not compose")),
                        Err(e) => report.fail(format!("{tag}: {e}")),
                    }
                }
            }
        }
    }

    // Double localization A[s1, s2]/(s1 f1 - 1, s2 f2 - 1).
    fn localize_twice(&self, patch: usize, f1: &Poly, f2: &Poly) -> Result<AffineAlgebra> {
        let (once, _) = localize(&self.patches[patch], f1)?;
        let n = once.arity();
        let embed: Vec<usize> = (0..n - 1).collect();
        let (twice, _) = localize(&once, &f2.embed(n, &embed))?;
        Ok(twice)
    }

    // Lift theta: (A_i)_{f} -> (A_j)_{g} to the double localizations. The
    // source double also inverts `extra` (an element of A_i) whose inverse
    // variable sits at index `extra_slot`; its image is derived by
    // inverting the image of `extra`. `theta_slot` is the index in the
    // target double of the inverse variable theta's own target inverts.
    fn lift_to_double(
        &self,
        rec: &GlueRecord,
        extra: &Poly,
        extra_slot: usize,
        source_double: &AffineAlgebra,
        target_double: &AffineAlgebra,
        theta_slot: usize,
    ) -> Result<RingMap> {
        let n_i = self.patches[rec.i].arity();
        let n_j = self.patches[rec.j].arity();
        // Patch-j variables keep their indices; the localization's inverse
        // variable lands at `theta_slot` of the double localization.
        let mut embed: Vec<usize> = (0..n_j).collect();
        embed.push(theta_slot);
        let mut images: Vec<Poly> = Vec::with_capacity(n_i + 2);
        for idx in 0..=n_i {
            let img = rec.theta.images()[idx].embed(target_double.arity(), &embed);
            images.push(target_double.reduce(&img)?);
        }
        let base_images: Vec<Poly> = images[..n_i].to_vec();
        let extra_image =
            target_double.reduce(&extra.substitute(&base_images, target_double.arity())?)?;
        let inv = target_double
            .inverse_of(&extra_image)?
            .ok_or_else(|| Error::NotInvertible(target_double.format(&extra_image)))?;
        images.insert(extra_slot, inv);
        RingMap::new(source_double, target_double, images)
    }

    fn check_cocycle(&self, r_ij: &GlueRecord, r_jk: &GlueRecord, r_ik: &GlueRecord) -> Result<bool> {
        // D_i inverts (f_ij, f_ik), D_j inverts (f_ji, f_jk), D_k inverts
        // (f_ki, f_kj), each pair in that variable order.
        let d_i = self.localize_twice(r_ij.i, &r_ij.f_ij, &r_ik.f_ij)?;
        let d_j = self.localize_twice(r_ij.j, &r_ij.f_ji, &r_jk.f_ij)?;
        let d_k = self.localize_twice(r_jk.j, &r_ik.f_ji, &r_jk.f_ji)?;
        let n_i = self.patches[r_ij.i].arity();
        let n_j = self.patches[r_ij.j].arity();
        let n_k = self.patches[r_jk.j].arity();
        let mu_ij = self.lift_to_double(r_ij, &r_ik.f_ij, n_i + 1, &d_i, &d_j, n_j)?;
        let mu_ik = self.lift_to_double(r_ik, &r_ij.f_ij, n_i, &d_i, &d_k, n_k)?;
        let mu_jk = self.lift_to_double(r_jk, &r_ij.f_ji, n_j, &d_j, &d_k, n_k + 1)?;
        let left = mu_jk.compose(&mu_ij)?;
        for idx in 0..d_i.arity() {
            let v = Poly::var(d_i.arity(), idx);
            if left.apply(&v)? != mu_ik.apply(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A morphism of glued schemes: each source patch maps wholly into one
/// target patch, presented by the ring map from that target patch's
/// algebra into the source patch's algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchMap {
    pub target_patch: usize,
    pub map: RingMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeMorphism {
    source: Arc<GluedScheme>,
    target: Arc<GluedScheme>,
    patch_maps: Vec<PatchMap>,
}

impl SchemeMorphism {
    pub fn new(
        source: Arc<GluedScheme>,
        target: Arc<GluedScheme>,
        patch_maps: Vec<PatchMap>,
    ) -> Result<Self> {
        if patch_maps.len() != source.patches().len() {
            return Err(Error::InvalidMorphism(format!(
                "expected one patch assignment per source patch ({}), got {}",
                source.patches().len(),
                patch_maps.len()
            )));
        }
        for (i, pm) in patch_maps.iter().enumerate() {
            let tgt = target.patch(pm.target_patch)?;
            if pm.map.source() != tgt {
                return Err(Error::InvalidMorphism(format!(
                    "patch {i}: ring map does not start at target patch {}",
                    pm.target_patch
                )));
            }
            if pm.map.target() != source.patch(i)? {
                return Err(Error::InvalidMorphism(format!(
                    "patch {i}: ring map does not land in the source patch algebra"
                )));
            }
        }
        Ok(SchemeMorphism {
            source,
            target,
            patch_maps,
        })
    }

    pub fn identity(scheme: &Arc<GluedScheme>) -> Self {
        let patch_maps = scheme
            .patches()
            .iter()
            .enumerate()
            .map(|(i, a)| PatchMap {
                target_patch: i,
                map: RingMap::identity(a),
            })
            .collect();
        SchemeMorphism {
            source: Arc::clone(scheme),
            target: Arc::clone(scheme),
            patch_maps,
        }
    }

    pub fn source(&self) -> &Arc<GluedScheme> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GluedScheme> {
        &self.target
    }

    pub fn patch_maps(&self) -> &[PatchMap] {
        &self.patch_maps
    }

    /// `self ∘ inner`, for `inner: X -> Y` and `self: Y -> Z`.
    pub fn compose(&self, inner: &SchemeMorphism) -> Result<SchemeMorphism> {
        if inner.target.as_ref() != self.source.as_ref() {
            return Err(Error::SchemeMismatch);
        }
        let patch_maps = inner
            .patch_maps
            .iter()
            .map(|pm| {
                let next = &self.patch_maps[pm.target_patch];
                Ok(PatchMap {
                    target_patch: next.target_patch,
                    map: pm.map.compose(&next.map)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SchemeMorphism::new(Arc::clone(&inner.source), Arc::clone(&self.target), patch_maps)
    }

    /// Check that every patch map is well-defined and that the maps agree
    /// on the localized overlap of every glued pair of source patches
    /// (routing through the target's transition map when the two patches
    /// land in different target patches). Pairwise-checked only; triple
    /// overlaps of the source never enter.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        for (i, pm) in self.patch_maps.iter().enumerate() {
            match pm.map.is_well_defined() {
                Ok(ok) => report.check(
                    ok,
                    format!("patch {i} -> {}: ring map well-defined", pm.target_patch),
                ),
                Err(e) => report.fail(format!("patch {i}: {e}")),
            }
        }
        if !report.is_ok() {
            return report;
        }
        for rec in self.source.glue() {
            let tag = format!("overlap({},{})", rec.i, rec.j);
            match self.overlap_agrees(rec) {
                Ok(true) => report.pass(format!("{tag}: patch maps agree")),
                Ok(false) => report.fail(format!("{tag}: patch maps disagree")),
                Err(e) => report.fail(format!("{tag}: {e}")),
            }
        }
        report
    }

    // Compare the two maps into the localized overlap (A_j)_{f_ji}.
    fn overlap_agrees(&self, rec: &GlueRecord) -> Result<bool> {
        let si = self.patch_maps[rec.i].target_patch;
        let sj = self.patch_maps[rec.j].target_patch;
        let rho_i = &self.patch_maps[rec.i].map;
        let rho_j = &self.patch_maps[rec.j].map;
        let (_, inc_i) = localize(self.source.patch(rec.i)?, &rec.f_ij)?;
        let (loc_j, inc_j) = localize(self.source.patch(rec.j)?, &rec.f_ji)?;
        // lambda: B_{si} -> (A_j)_{f_ji}, through patch i and the glueing.
        let lambda = rec.theta.compose(&inc_i.compose(rho_i)?)?;
        let direct = inc_j.compose(rho_j)?;
        if si == sj {
            let b = self.target.patch(si)?;
            for k in 0..b.arity() {
                let y = Poly::var(b.arity(), k);
                if lambda.apply(&y)? != direct.apply(&y)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        // Different target patches: route through the target glue record
        // from sj to si.
        let rec_y = match self.target.record(sj, si) {
            Some(r) => r,
            None => {
                // Vacuous when the overlap is empty.
                return if loc_j.is_zero_ring() {
                    Ok(true)
                } else {
                    Err(Error::InvalidMorphism(format!(
                        "target patches {sj} and {si} are not glued"
                    )))
                };
            }
        };
        // rec_y.f_ji lives on the si side; its lambda-image must become a
        // unit on the overlap.
        let g_image = lambda.apply(&rec_y.f_ji)?;
        let inv = match loc_j.inverse_of(&g_image)? {
            Some(p) => p,
            None => return Ok(false),
        };
        // Extend lambda to the localization (B_{si})_{g}.
        let b_si = self.target.patch(si)?;
        let mut lambda_images: Vec<Poly> = (0..b_si.arity())
            .map(|k| lambda.apply(&Poly::var(b_si.arity(), k)))
            .collect::<Result<Vec<_>>>()?;
        lambda_images.push(inv);
        let lambda_ext = RingMap::new(rec_y.theta.target(), &loc_j, lambda_images)?;
        // Compare on every variable of B_{sj}.
        let b_sj = self.target.patch(sj)?;
        let (_, inc_sj) = localize(b_sj, &rec_y.f_ij)?;
        for k in 0..b_sj.arity() {
            let y = Poly::var(b_sj.arity(), k);
            let via = lambda_ext.apply(&rec_y.theta.apply(&inc_sj.apply(&y)?)?)?;
            if via != direct.apply(&y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
