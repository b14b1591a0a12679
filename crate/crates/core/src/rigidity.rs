//! Rigid duals, invertibility, the second tensor product, and the
//! comparison morphisms that measure how far a category whose unit is
//! dualizing is from being rigid.
//!
//! The rigid-pair test runs two independent routes: an exhaustive scan for a
//! coevaluation that satisfies the first zigzag plus an injectivity check
//! (which together are sound and complete), and a direct verification of
//! both zigzag identities on the found witness. Disagreement between the
//! routes is a theorem violation.

use crate::cat::{MorId, ObjId};
use crate::gv::{GvData, QuasiInverse};
use crate::monoidal::{InvertibleWitness, MonoidalData};
use crate::report::{EngineError, Result};

pub use crate::monoidal::check_invertible;

/// Evaluation/coevaluation pair certifying that (B, eps) is a right rigid
/// dual of A (equivalently (A, eps) is a left rigid dual of B).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidWitness {
    pub a: ObjId,
    pub b: ObjId,
    /// A⊗B → 𝟙.
    pub eps: MorId,
    /// 𝟙 → B⊗A.
    pub coeval: MorId,
}

/// First zigzag: A → A⊗𝟙 → A⊗(B⊗A) → (A⊗B)⊗A → 𝟙⊗A → A.
fn zigzag_a(m: &MonoidalData, a: ObjId, b: ObjId, eps: MorId, c: MorId) -> Result<MorId> {
    let cat = &m.cat;
    let runit_inv = cat
        .inverse(m.runit_at(a))
        .ok_or_else(|| EngineError::Precondition("right unitor not invertible".into()))?;
    let assoc_inv = cat
        .inverse(m.assoc_at(a, b, a))
        .ok_or_else(|| EngineError::Precondition("associator not invertible".into()))?;
    cat.compose_chain(&[
        runit_inv,
        m.tensor_right(a, c),
        assoc_inv,
        m.tensor_left(eps, a),
        m.lunit_at(a),
    ])
}

/// Second zigzag: B → 𝟙⊗B → (B⊗A)⊗B → B⊗(A⊗B) → B⊗𝟙 → B.
fn zigzag_b(m: &MonoidalData, a: ObjId, b: ObjId, eps: MorId, c: MorId) -> Result<MorId> {
    let cat = &m.cat;
    let lunit_inv = cat
        .inverse(m.lunit_at(b))
        .ok_or_else(|| EngineError::Precondition("left unitor not invertible".into()))?;
    cat.compose_chain(&[
        lunit_inv,
        m.tensor_left(c, b),
        m.assoc_at(b, a, b),
        m.tensor_right(b, eps),
        m.runit_at(b),
    ])
}

/// The hom-map Hom(Z, B⊗Y) → Hom(A⊗Z, Y) induced by eps:
/// f ↦ lunit_Y ∘ (eps⊗id_Y) ∘ assoc⁻¹_{A,B,Y} ∘ (id_A⊗f).
fn eps_induced_map(
    m: &MonoidalData,
    a: ObjId,
    b: ObjId,
    eps: MorId,
    y: ObjId,
    f: MorId,
) -> Result<MorId> {
    let cat = &m.cat;
    let assoc_inv = cat
        .inverse(m.assoc_at(a, b, y))
        .ok_or_else(|| EngineError::Precondition("associator not invertible".into()))?;
    cat.compose_chain(&[
        m.tensor_right(a, f),
        assoc_inv,
        m.tensor_left(eps, y),
        m.lunit_at(y),
    ])
}

/// Decide whether (B, eps) is a right rigid dual of A.
///
/// Route one: search Hom(𝟙, B⊗A) for a coevaluation whose first zigzag is
/// id_A, and check injectivity of the eps-induced map at (Y=𝟙, Z=B); both
/// together are equivalent to rigidity. Route two: check the second zigzag
/// on every candidate. The routes must agree.
pub fn check_rigid_pair(
    m: &MonoidalData,
    a: ObjId,
    b: ObjId,
    eps: MorId,
) -> Result<Option<RigidWitness>> {
    let cat = &m.cat;
    if (eps.src, eps.dst) != (m.tensor(a, b), m.unit) {
        return Err(EngineError::Precondition(format!(
            "eps must be a morphism {}⊗{} → unit",
            cat.object_label(a),
            cat.object_label(b)
        )));
    }

    let candidates: Vec<MorId> = cat
        .hom(m.unit, m.tensor(b, a))
        .filter(|&c| match zigzag_a(m, a, b, eps, c) {
            Ok(z) => cat.is_identity(z),
            Err(_) => false,
        })
        .collect();

    // Injectivity of Hom(B, B⊗𝟙) → Hom(A⊗B, 𝟙).
    let mut seen = vec![false; cat.hom_size(m.tensor(a, b), m.unit)];
    let mut injective = true;
    for f in cat.hom(b, m.tensor(b, m.unit)) {
        let image = eps_induced_map(m, a, b, eps, m.unit, f)?;
        if seen[image.index] {
            injective = false;
            break;
        }
        seen[image.index] = true;
    }

    if !injective || candidates.is_empty() {
        // Route two must agree that no candidate closes both zigzags.
        for &c in &candidates {
            let z2 = zigzag_b(m, a, b, eps, c)?;
            if cat.is_identity(z2) {
                return Err(EngineError::TheoremViolation(format!(
                    "coevaluation criterion and zigzag verdicts disagree at ({}, {})",
                    cat.object_label(a),
                    cat.object_label(b)
                )));
            }
        }
        return Ok(None);
    }

    // Injectivity plus the first zigzag force the second; verify.
    for &c in &candidates {
        let z2 = zigzag_b(m, a, b, eps, c)?;
        if !cat.is_identity(z2) {
            return Err(EngineError::TheoremViolation(format!(
                "second zigzag fails for a certified coevaluation at ({}, {})",
                cat.object_label(a),
                cat.object_label(b)
            )));
        }
    }
    if candidates.len() != 1 {
        return Err(EngineError::TheoremViolation(format!(
            "coevaluation is not unique at ({}, {})",
            cat.object_label(a),
            cat.object_label(b)
        )));
    }
    Ok(Some(RigidWitness { a, b, eps, coeval: candidates[0] }))
}

/// Left rigid dual of X: the first (A, eps: A⊗X → 𝟙) certified by
/// [`check_rigid_pair`], scanning objects then hom elements in order.
pub fn find_left_dual(m: &MonoidalData, x: ObjId) -> Result<Option<RigidWitness>> {
    for a in m.cat.object_ids() {
        for eps in m.cat.hom(m.tensor(a, x), m.unit) {
            if let Some(w) = check_rigid_pair(m, a, x, eps)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Right rigid dual of X: the first (B, eps: X⊗B → 𝟙) that works.
pub fn find_right_dual(m: &MonoidalData, x: ObjId) -> Result<Option<RigidWitness>> {
    for b in m.cat.object_ids() {
        for eps in m.cat.hom(m.tensor(x, b), m.unit) {
            if let Some(w) = check_rigid_pair(m, x, b, eps)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// The second tensor product X⊙Y = D⁻¹(DY⊗DX), computed pointwise.
pub fn second_tensor(gv: &GvData, qi: &QuasiInverse, x: ObjId, y: ObjId) -> ObjId {
    qi.dinv
        .apply_obj(gv.m.tensor(gv.d_obj(y), gv.d_obj(x)))
}

fn require_r_category(gv: &GvData) -> Result<()> {
    if !gv.is_r_category() {
        return Err(EngineError::Precondition(
            "operation needs the unit to be the dualizing object".into(),
        ));
    }
    Ok(())
}

/// The canonical comparison X⊗Y → X⊙Y in a category whose unit is the
/// dualizing object. Chase, left-normalized:
///   core: (DY⊗DX)⊗X → DY⊗(DX⊗X) → DY⊗𝟙 → DY            (assoc, ev_X, runit)
///   big:  (DY⊗DX)⊗(X⊗Y) → ((DY⊗DX)⊗X)⊗Y → DY⊗Y → 𝟙     (assoc⁻¹, core⊗id, ev_Y)
/// and the comparison is the mate of `big` under Hom(A⊗B,𝟙) ≅ Hom(B, D⁻¹A).
pub fn canonical_comparison(
    gv: &GvData,
    qi: &QuasiInverse,
    x: ObjId,
    y: ObjId,
) -> Result<MorId> {
    require_r_category(gv)?;
    let cat = gv.cat();
    let m = &gv.m;
    let (dx, dy) = (gv.d_obj(x), gv.d_obj(y));
    let dydx = m.tensor(dy, dx);

    let core = cat.compose_chain(&[
        m.assoc_at(dy, dx, x),
        m.tensor_right(dy, gv.ev_at(x)),
        m.runit_at(dy),
    ])?;
    let assoc_inv = cat
        .inverse(m.assoc_at(dydx, x, y))
        .ok_or_else(|| EngineError::Precondition("associator not invertible".into()))?;
    let big = cat.compose_chain(&[assoc_inv, m.tensor_left(core, y), gv.ev_at(y)])?;
    Ok(gv.copair(qi, big, dydx, m.tensor(x, y)))
}

/// Rigidity verdict for one object.
#[derive(Debug, Clone)]
pub struct ObjectRigidity {
    pub object: ObjId,
    pub left_dual: Option<RigidWitness>,
    pub right_dual: Option<RigidWitness>,
}

impl ObjectRigidity {
    pub fn rigid(&self) -> bool {
        self.left_dual.is_some() && self.right_dual.is_some()
    }
}

/// Category-wide rigidity report for a category whose unit is dualizing.
#[derive(Debug, Clone)]
pub struct RigidityReport {
    pub objects: Vec<ObjectRigidity>,
    /// (i): every object is rigid.
    pub all_rigid: bool,
    /// (ii): the comparison X⊗Y → X⊙Y is an isomorphism for all pairs.
    pub comparison_iso_everywhere: bool,
    /// (iii): the comparison X⊗DX → X⊙DX is an isomorphism for all X.
    pub comparison_iso_diagonal: bool,
}

/// Per-object rigid duals plus the three equivalent category-level rigidity
/// criteria. Every equivalence the theory guarantees is asserted along the
/// way; a failure is reported as a theorem violation.
pub fn rigidity_report(gv: &GvData, qi: &QuasiInverse) -> Result<RigidityReport> {
    require_r_category(gv)?;
    let cat = gv.cat();
    let m = &gv.m;

    let mut objects = Vec::new();
    for x in cat.object_ids() {
        let left = find_left_dual(m, x)?;
        let right = find_right_dual(m, x)?;
        if left.is_some() != right.is_some() {
            // With a dualizing unit each side determines the other.
            return Err(EngineError::TheoremViolation(format!(
                "object {} has only a one-sided dual",
                cat.object_label(x)
            )));
        }
        if let Some(w) = &left {
            // Left dual must be isomorphic to DX.
            if !cat.isomorphic(w.a, gv.d_obj(x)) {
                return Err(EngineError::TheoremViolation(format!(
                    "left dual of {} is not D{}",
                    cat.object_label(x),
                    cat.object_label(x)
                )));
            }
        }
        if let Some(w) = &right {
            if !cat.isomorphic(w.b, qi.dinv.apply_obj(x)) {
                return Err(EngineError::TheoremViolation(format!(
                    "right dual of {} is not D⁻¹{}",
                    cat.object_label(x),
                    cat.object_label(x)
                )));
            }
        }
        objects.push(ObjectRigidity { object: x, left_dual: left, right_dual: right });
    }

    // Pairwise criterion: for every eps: X⊗B → 𝟙, the rigid-pair verdict
    // matches [eps induces B ≅ D⁻¹X] ∧ [comparison B⊗X → B⊙X iso].
    for x in cat.object_ids() {
        for b in cat.object_ids() {
            for eps in cat.hom(m.tensor(x, b), m.unit) {
                let verdict = check_rigid_pair(m, x, b, eps)?.is_some();
                let mate = gv.copair(qi, eps, x, b);
                let mate_iso = cat.is_iso(mate);
                let cmp = canonical_comparison(gv, qi, b, x)?;
                let cmp_iso = cat.is_iso(cmp);
                if verdict != (mate_iso && cmp_iso) {
                    return Err(EngineError::TheoremViolation(format!(
                        "rigid-pair criterion mismatch at ({}, {}, eps #{})",
                        cat.object_label(x),
                        cat.object_label(b),
                        eps.index
                    )));
                }
                if verdict {
                    // Then the comparisons against every Y are isomorphisms.
                    for yy in cat.object_ids() {
                        let c1 = canonical_comparison(gv, qi, b, yy)?;
                        let c2 = canonical_comparison(gv, qi, yy, x)?;
                        if !cat.is_iso(c1) || !cat.is_iso(c2) {
                            return Err(EngineError::TheoremViolation(format!(
                                "rigid pair ({}, {}) fails comparison at {}",
                                cat.object_label(x),
                                cat.object_label(b),
                                cat.object_label(yy)
                            )));
                        }
                    }
                }
            }
        }
    }

    let all_rigid = objects.iter().all(ObjectRigidity::rigid);
    let mut comparison_iso_everywhere = true;
    for x in cat.object_ids() {
        for y in cat.object_ids() {
            if !cat.is_iso(canonical_comparison(gv, qi, x, y)?) {
                comparison_iso_everywhere = false;
            }
        }
    }
    let mut comparison_iso_diagonal = true;
    for x in cat.object_ids() {
        if !cat.is_iso(canonical_comparison(gv, qi, x, gv.d_obj(x))?) {
            comparison_iso_diagonal = false;
        }
    }

    if all_rigid != comparison_iso_everywhere || all_rigid != comparison_iso_diagonal {
        return Err(EngineError::TheoremViolation(format!(
            "rigidity criteria disagree: rigid={all_rigid} everywhere={comparison_iso_everywhere} diagonal={comparison_iso_diagonal}"
        )));
    }

    // Per-object sharpening: X rigid iff both diagonal comparisons at X are isos.
    for entry in &objects {
        let x = entry.object;
        let c1 = canonical_comparison(gv, qi, x, gv.d_obj(x))?;
        let dinv_x = qi.dinv.apply_obj(x);
        let c2 = canonical_comparison(gv, qi, dinv_x, x)?;
        let via_comparison = cat.is_iso(c1) && cat.is_iso(c2);
        if entry.rigid() != via_comparison {
            return Err(EngineError::TheoremViolation(format!(
                "object-level rigidity criterion mismatch at {}",
                cat.object_label(x)
            )));
        }
    }

    Ok(RigidityReport {
        objects,
        all_rigid,
        comparison_iso_everywhere,
        comparison_iso_diagonal,
    })
}

/// Invertibility and rigidity of the dualizing object, computed by two
/// independent routes that must agree, together with the internal-hom
/// comparison isomorphisms used to relate them.
#[derive(Debug, Clone)]
pub struct DualizingRigidity {
    pub invertible: Option<InvertibleWitness>,
    pub rigid: bool,
}

pub fn denis_check(gv: &GvData) -> Result<DualizingRigidity> {
    let cat = gv.cat();
    let m = &gv.m;
    let k = gv.k;

    let invertible = check_invertible(m, k);
    let left = find_left_dual(m, k)?;
    let right = find_right_dual(m, k)?;
    let rigid = left.is_some() && right.is_some();
    if left.is_some() != right.is_some() {
        return Err(EngineError::TheoremViolation(
            "dualizing object has only a one-sided rigid dual".into(),
        ));
    }
    if invertible.is_some() != rigid {
        return Err(EngineError::TheoremViolation(format!(
            "invertibility ({}) and rigidity ({}) of {} disagree",
            invertible.is_some(),
            rigid,
            cat.object_label(k)
        )));
    }

    // The comparisons 𝟙 → hom(K,K) and 𝟙 → hom'(K,K) must be isomorphisms.
    let qi = crate::gv::quasi_inverse(gv)?;
    crate::gv::hom_kk_isos(gv, &qi)?;

    Ok(DualizingRigidity { invertible, rigid })
}
