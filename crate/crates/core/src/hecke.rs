//! Closed idempotents, the monoidal subcategory an idempotent arrow cuts
//! out, duality on that subcategory, and extraction of a (subcategory,
//! dual-of-e, comparison morphism) triple from a category whose unit is
//! dualizing.

use crate::cat::{FinCategory, MorId, ObjId};
use crate::gv::{canonical_unit_isos, find_dualizing, quasi_inverse, GvData};
use crate::monoidal::MonoidalData;
use crate::report::{EngineError, Result};

/// An idempotent arrow π: 𝟙 → e: both whiskerings 𝟙⊗e → e⊗e and
/// e⊗𝟙 → e⊗e are isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdempotentArrow {
    pub e: ObjId,
    pub pi: MorId,
}

/// The two unitor-normalized routes e → e⊗e defined by an idempotent arrow.
fn idempotent_routes(m: &MonoidalData, e: ObjId, pi: MorId) -> Result<(MorId, MorId)> {
    let cat = &m.cat;
    let lunit_inv = cat
        .inverse(m.lunit_at(e))
        .ok_or_else(|| EngineError::Precondition("left unitor not invertible".into()))?;
    let runit_inv = cat
        .inverse(m.runit_at(e))
        .ok_or_else(|| EngineError::Precondition("right unitor not invertible".into()))?;
    let left = cat.compose(m.tensor_left(pi, e), lunit_inv)?;
    let right = cat.compose(m.tensor_right(e, pi), runit_inv)?;
    Ok((left, right))
}

pub fn is_idempotent_arrow(m: &MonoidalData, e: ObjId, pi: MorId) -> Result<bool> {
    let (left, right) = idempotent_routes(m, e, pi)?;
    Ok(m.cat.is_iso(left) && m.cat.is_iso(right))
}

/// Exhaustive scan for idempotent arrows. For every hit the two routes
/// e → e⊗e must coincide, and for any two arrows into the same object there
/// must be exactly one automorphism intertwining them; both are guaranteed
/// facts, so failures are theorem violations.
pub fn find_idempotent_arrows(m: &MonoidalData) -> Result<Vec<IdempotentArrow>> {
    let cat = &m.cat;
    let mut found = Vec::new();
    for e in cat.object_ids() {
        for pi in cat.hom(m.unit, e) {
            if is_idempotent_arrow(m, e, pi)? {
                let (left, right) = idempotent_routes(m, e, pi)?;
                if left != right {
                    return Err(EngineError::TheoremViolation(format!(
                        "the two routes {0} → {0}⊗{0} differ for an idempotent arrow",
                        cat.object_label(e)
                    )));
                }
                found.push(IdempotentArrow { e, pi });
            }
        }
    }
    // Any two idempotent arrows into the same object are intertwined by a
    // unique automorphism.
    for a in &found {
        for b in &found {
            if a.e != b.e {
                continue;
            }
            let mut matches = 0usize;
            for h in cat.hom(a.e, a.e) {
                if cat.is_iso(h) && cat.compose(h, b.pi)? == a.pi {
                    matches += 1;
                }
            }
            if matches != 1 {
                return Err(EngineError::TheoremViolation(format!(
                    "{} automorphisms intertwine two idempotent arrows into {}",
                    matches,
                    cat.object_label(a.e)
                )));
            }
        }
    }
    Ok(found)
}

/// A full monoidal subcategory presented with its own object indexing plus
/// the embedding back into the ambient category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcategory {
    pub data: MonoidalData,
    /// obj_embed[new index] = ambient object.
    pub obj_embed: Vec<ObjId>,
}

impl Subcategory {
    pub fn ambient_obj(&self, x: ObjId) -> ObjId {
        self.obj_embed[x.0]
    }

    pub fn new_index_of(&self, ambient: ObjId) -> Option<ObjId> {
        self.obj_embed.iter().position(|&o| o == ambient).map(ObjId)
    }

    /// Translate a subcategory morphism to the ambient category (hom lists
    /// are copied verbatim, so indices agree).
    pub fn ambient_mor(&self, m: MorId) -> MorId {
        MorId::new(self.ambient_obj(m.src), self.ambient_obj(m.dst), m.index)
    }

    pub fn sub_mor(&self, m: MorId) -> Option<MorId> {
        let src = self.new_index_of(m.src)?;
        let dst = self.new_index_of(m.dst)?;
        Some(MorId::new(src, dst, m.index))
    }
}

/// The full monoidal subcategory on the objects isomorphic to e⊗Y⊗e
/// (left-normalized), with unit e and unitors derived from the idempotent
/// arrow: λ_X = lunit_X ∘ (π⊗id_X)⁻¹ and ρ_X = runit_X ∘ (id_X⊗π)⁻¹.
pub fn hecke_subcategory(m: &MonoidalData, ia: &IdempotentArrow) -> Result<Subcategory> {
    let cat = &m.cat;
    if !is_idempotent_arrow(m, ia.e, ia.pi)? {
        return Err(EngineError::Precondition(
            "the given arrow is not an idempotent arrow".into(),
        ));
    }

    let mut member = vec![false; cat.object_count()];
    for o in cat.object_ids() {
        'seek: for y in cat.object_ids() {
            let eye = m.tensor(m.tensor(ia.e, y), ia.e);
            if cat.isomorphic(o, eye) {
                member[o.0] = true;
                break 'seek;
            }
        }
    }
    if !member[ia.e.0] {
        return Err(EngineError::TheoremViolation(
            "the idempotent object does not belong to its own subcategory".into(),
        ));
    }
    let obj_embed: Vec<ObjId> = cat.object_ids().filter(|o| member[o.0]).collect();
    let new_of = |ambient: ObjId| -> Result<ObjId> {
        obj_embed
            .iter()
            .position(|&o| o == ambient)
            .map(ObjId)
            .ok_or_else(|| {
                EngineError::TheoremViolation(format!(
                    "subcategory is not closed under tensor at {}",
                    cat.object_label(ambient)
                ))
            })
    };

    let labels: Vec<String> = obj_embed
        .iter()
        .map(|&o| cat.object_label(o).to_string())
        .collect();
    let sub_cat = FinCategory::from_fn(
        format!("{}[{}]", cat.name, cat.object_label(ia.e)),
        labels,
        |s, d| cat.hom_labels(obj_embed[s.0], obj_embed[d.0]).to_vec(),
        |g, f| {
            let ga = MorId::new(obj_embed[g.src.0], obj_embed[g.dst.0], g.index);
            let fa = MorId::new(obj_embed[f.src.0], obj_embed[f.dst.0], f.index);
            cat.compose(ga, fa).expect("composable in ambient").index
        },
        |x| cat.identity(obj_embed[x.0]).index,
    )?;

    let k = obj_embed.len();
    let mut tensor_obj = vec![vec![0usize; k]; k];
    for x in 0..k {
        for y in 0..k {
            tensor_obj[x][y] = new_of(m.tensor(obj_embed[x], obj_embed[y]))?.0;
        }
    }
    let sub_for_closure = Subcategory {
        data: MonoidalData {
            cat: sub_cat.clone(),
            unit: new_of(ia.e)?,
            tensor_obj: tensor_obj.clone(),
            tensor_mor: Vec::new(),
            assoc: Vec::new(),
            lunit: Vec::new(),
            runit: Vec::new(),
        },
        obj_embed: obj_embed.clone(),
    };
    let tensor_mor = MonoidalData::build_tensor_mor(&sub_cat, |f, g| {
        let t = m.tensor_mor(sub_for_closure.ambient_mor(f), sub_for_closure.ambient_mor(g));
        sub_for_closure
            .sub_mor(t)
            .expect("tensor of members is a member")
    });

    let mut assoc = vec![vec![vec![MorId::new(ObjId(0), ObjId(0), 0); k]; k]; k];
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let a = m.assoc_at(obj_embed[x], obj_embed[y], obj_embed[z]);
                assoc[x][y][z] = sub_for_closure.sub_mor(a).ok_or_else(|| {
                    EngineError::TheoremViolation("associator leaves the subcategory".into())
                })?;
            }
        }
    }

    let mut lunit = Vec::with_capacity(k);
    let mut runit = Vec::with_capacity(k);
    for x in 0..k {
        let xo = obj_embed[x];
        let pi_x = m.tensor_left(ia.pi, xo);
        let pi_x_inv = cat.inverse(pi_x).ok_or_else(|| {
            EngineError::TheoremViolation(format!(
                "π⊗id is not invertible at member {}",
                cat.object_label(xo)
            ))
        })?;
        let l = cat.compose(m.lunit_at(xo), pi_x_inv)?;
        lunit.push(sub_for_closure.sub_mor(l).ok_or_else(|| {
            EngineError::TheoremViolation("derived left unitor leaves the subcategory".into())
        })?);

        let x_pi = m.tensor_right(xo, ia.pi);
        let x_pi_inv = cat.inverse(x_pi).ok_or_else(|| {
            EngineError::TheoremViolation(format!(
                "id⊗π is not invertible at member {}",
                cat.object_label(xo)
            ))
        })?;
        let r = cat.compose(m.runit_at(xo), x_pi_inv)?;
        runit.push(sub_for_closure.sub_mor(r).ok_or_else(|| {
            EngineError::TheoremViolation("derived right unitor leaves the subcategory".into())
        })?);
    }

    Ok(Subcategory {
        data: MonoidalData {
            cat: sub_cat,
            unit: new_of(ia.e)?,
            tensor_obj,
            tensor_mor,
            assoc,
            lunit,
            runit,
        },
        obj_embed,
    })
}

/// Duality data on a Hecke subcategory, re-derived from scratch by the
/// representability search inside the subcategory with the dual of e as the
/// dualizing object. Requires D²e ≅ e; fails with a hypothesis error
/// otherwise. The derived duality functor is checked to agree with the
/// restriction of the ambient one up to natural isomorphism.
pub fn hecke_gv(gv: &GvData, ia: &IdempotentArrow) -> Result<(Subcategory, GvData)> {
    let cat = gv.cat();
    let d2e = gv.d_obj(gv.d_obj(ia.e));
    if !cat.isomorphic(d2e, ia.e) {
        return Err(EngineError::Hypothesis(format!(
            "D²{0} is not isomorphic to {0}",
            cat.object_label(ia.e)
        )));
    }
    let sub = hecke_subcategory(&gv.m, ia)?;
    let de = gv.d_obj(ia.e);
    let k_new = sub.new_index_of(de).ok_or_else(|| {
        EngineError::TheoremViolation(format!(
            "the dual {} of the idempotent object lies outside the subcategory",
            cat.object_label(de)
        ))
    })?;

    let all = find_dualizing(&sub.data);
    let gv_sub = all
        .into_iter()
        .find(|g| g.k == k_new)
        .ok_or_else(|| {
            EngineError::TheoremViolation(
                "the dual of the idempotent object is not dualizing in the subcategory".into(),
            )
        })?;

    // The derived duality functor agrees with the restriction of D up to
    // natural isomorphism.
    let restricted = restricted_duality(gv, &sub)?;
    let isos = crate::cat::enumerate_nat_isos(&gv_sub.d, &restricted, &sub.data.cat)?;
    if isos.is_empty() {
        return Err(EngineError::TheoremViolation(
            "subcategory duality is not isomorphic to the restriction of D".into(),
        ));
    }

    Ok((sub, gv_sub))
}

/// The ambient duality functor restricted to a D-stable subcategory.
fn restricted_duality(gv: &GvData, sub: &Subcategory) -> Result<crate::cat::FunctorData> {
    let k = sub.obj_embed.len();
    let mut obj_map = Vec::with_capacity(k);
    for x in 0..k {
        let image = gv.d_obj(sub.obj_embed[x]);
        obj_map.push(sub.new_index_of(image).ok_or_else(|| {
            EngineError::TheoremViolation("subcategory is not D-stable on objects".into())
        })?);
    }
    let mut mor_map = vec![vec![Vec::new(); k]; k];
    for x in 0..k {
        for y in 0..k {
            let mut images = Vec::new();
            for i in 0..sub.data.cat.hom_size(ObjId(x), ObjId(y)) {
                let ambient = MorId::new(sub.obj_embed[x], sub.obj_embed[y], i);
                let im = gv.d_mor(ambient);
                images.push(sub.sub_mor(im).ok_or_else(|| {
                    EngineError::TheoremViolation(
                        "subcategory is not D-stable on morphisms".into(),
                    )
                })?);
            }
            mor_map[x][y] = images;
        }
    }
    Ok(crate::cat::FunctorData {
        variance: crate::cat::Variance::Contravariant,
        obj_map,
        mor_map,
    })
}

/// The extracted triple: the Hecke subcategory with its duality data, plus
/// the comparison morphism f: De → e inside the subcategory.
#[derive(Debug, Clone)]
pub struct ExtractedTriple {
    pub sub: Subcategory,
    pub gv: GvData,
    /// f: K' → 𝟙' in subcategory indexing.
    pub f: MorId,
}

/// From a category whose unit is the dualizing object and an idempotent
/// arrow with D²e ≅ e, extract the triple (subcategory, De, f = π∘Dπ).
/// Along the way: D²π (transported along the canonical 𝟙 ≅ D²𝟙) is checked
/// to be an idempotent arrow with a unique comparison isomorphism φ
/// satisfying φ∘D²π = π, and the two hom-set transplants
/// Hom(e, X) ≅ Hom(𝟙, X) and Hom(X, De) ≅ Hom(X, 𝟙) are verified bijective.
pub fn extract_triple(gv: &GvData, ia: &IdempotentArrow) -> Result<ExtractedTriple> {
    if !gv.is_r_category() {
        return Err(EngineError::Precondition(
            "triple extraction needs the unit to be the dualizing object".into(),
        ));
    }
    let cat = gv.cat();
    let m = &gv.m;
    let qi = quasi_inverse(gv)?;
    let isos = canonical_unit_isos(gv, &qi)?;
    let d2 = gv.d2();

    let d2e = d2.apply_obj(ia.e);
    if !cat.isomorphic(d2e, ia.e) {
        return Err(EngineError::Hypothesis(format!(
            "D²{0} is not isomorphic to {0}",
            cat.object_label(ia.e)
        )));
    }

    // π̃ = D²(π) ∘ dd1: 𝟙 → D²𝟙 → D²e is an idempotent arrow.
    let pi_tilde = cat.compose(d2.apply_mor(ia.pi), isos.dd1)?;
    if !is_idempotent_arrow(m, d2e, pi_tilde)? {
        return Err(EngineError::TheoremViolation(
            "D²π transported along 𝟙 ≅ D²𝟙 is not an idempotent arrow".into(),
        ));
    }
    // Unique isomorphism φ: D²e → e with φ ∘ π̃ = π.
    let mut phis = Vec::new();
    for h in cat.hom(d2e, ia.e) {
        if cat.is_iso(h) && cat.compose(h, pi_tilde)? == ia.pi {
            phis.push(h);
        }
    }
    if phis.len() != 1 {
        return Err(EngineError::TheoremViolation(format!(
            "{} comparison isomorphisms D²e → e intertwine the idempotent arrows",
            phis.len()
        )));
    }

    let (sub, gv_sub) = hecke_gv(gv, ia)?;

    // f = π ∘ d1 ∘ Dπ: De → D𝟙 → 𝟙 → e, then reindexed into the subcategory.
    let d_pi = gv.d_mor(ia.pi);
    let f_ambient = cat.compose_chain(&[d_pi, isos.d1, ia.pi])?;
    let f_sub = sub.sub_mor(f_ambient).ok_or_else(|| {
        EngineError::TheoremViolation("comparison morphism leaves the subcategory".into())
    })?;

    // Hom(e, X) ≅ Hom(𝟙, X) via g ↦ g∘π, for every member X.
    for &x in &sub.obj_embed {
        let from = cat.hom_size(ia.e, x);
        let to = cat.hom_size(m.unit, x);
        if from != to {
            return Err(EngineError::TheoremViolation(format!(
                "|Hom(e, {0})| ≠ |Hom(𝟙, {0})|",
                cat.object_label(x)
            )));
        }
        let mut seen = vec![false; to];
        for g in cat.hom(ia.e, x) {
            let image = cat.compose(g, ia.pi)?;
            if seen[image.index] {
                return Err(EngineError::TheoremViolation(format!(
                    "g ↦ g∘π is not injective into Hom(𝟙, {})",
                    cat.object_label(x)
                )));
            }
            seen[image.index] = true;
        }
    }
    // Hom(X, De) ≅ Hom(X, 𝟙) via h ↦ (d1∘Dπ)∘h.
    let de = gv.d_obj(ia.e);
    let to_unit = cat.compose(isos.d1, d_pi)?;
    for &x in &sub.obj_embed {
        let from = cat.hom_size(x, de);
        let to = cat.hom_size(x, m.unit);
        if from != to {
            return Err(EngineError::TheoremViolation(format!(
                "|Hom({0}, De)| ≠ |Hom({0}, 𝟙)|",
                cat.object_label(x)
            )));
        }
        let mut seen = vec![false; to];
        for h in cat.hom(x, de) {
            let image = cat.compose(to_unit, h)?;
            if seen[image.index] {
                return Err(EngineError::TheoremViolation(format!(
                    "h ↦ Dπ∘h is not injective into Hom({}, 𝟙)",
                    cat.object_label(x)
                )));
            }
            seen[image.index] = true;
        }
    }

    // The comparison morphism is self-dual inside the subcategory.
    let f_dual = crate::extension::dual_of_unit_morphism(&gv_sub, f_sub)?;
    if f_dual != f_sub {
        return Err(EngineError::TheoremViolation(
            "extracted comparison morphism is not self-dual".into(),
        ));
    }

    Ok(ExtractedTriple { sub, gv: gv_sub, f: f_sub })
}
