//! Dualizing objects and duality functors.
//!
//! The stored primitive is the universal element ev_Y: DY⊗Y → K. The hom-set
//! bijection Hom(X⊗Y, K) ≅ Hom(X, DY) and the action of D on morphisms are
//! both derived from it, so there is a single source of truth.
//!
//! Unitor and associator insertions in every element chase follow one fixed
//! convention: multi-fold tensor products are read left-normalized, and each
//! chase documents the exact composite it builds.

use crate::cat::{FinCategory, FunctorData, MorId, NatFamily, ObjId, Variance};
use crate::monoidal::{
    check_invertible, MonoidalData, MonoidalFunctorData, StructureDirection,
};
use crate::report::{EngineError, Result, ValidationReport};

/// A monoidal category with a dualizing object K and the derived duality data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvData {
    pub m: MonoidalData,
    pub k: ObjId,
    /// The contravariant duality functor.
    pub d: FunctorData,
    /// ev[y]: DY⊗Y → K, the universal element representing Hom(−⊗Y, K).
    pub ev: Vec<MorId>,
}

/// A chosen quasi-inverse for D with the comparison isomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiInverse {
    pub dinv: FunctorData,
    /// unit: Id ≅ D∘D⁻¹, component at Z is Z → D(D⁻¹Z).
    pub unit: NatFamily,
    /// counit: Id ≅ D⁻¹∘D, component at X is X → D⁻¹(DX).
    pub counit: NatFamily,
}

/// An explicit bijection between two hom-sets, with its inverse table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomBijection {
    pub from: (ObjId, ObjId),
    pub to: (ObjId, ObjId),
    pub fwd: Vec<usize>,
    pub inv: Vec<usize>,
}

impl HomBijection {
    pub fn from_map(
        cat: &FinCategory,
        from: (ObjId, ObjId),
        to: (ObjId, ObjId),
        map: impl Fn(MorId) -> MorId,
    ) -> Result<Self> {
        let size = cat.hom_size(from.0, from.1);
        let to_size = cat.hom_size(to.0, to.1);
        if size != to_size {
            return Err(EngineError::TheoremViolation(format!(
                "hom-set sizes differ: {} vs {}",
                size, to_size
            )));
        }
        let mut fwd = vec![usize::MAX; size];
        let mut inv = vec![usize::MAX; size];
        for i in 0..size {
            let image = map(MorId::new(from.0, from.1, i));
            if (image.src, image.dst) != to {
                return Err(EngineError::TheoremViolation(format!(
                    "bijection image has wrong signature at element {i}"
                )));
            }
            fwd[i] = image.index;
            if inv[image.index] != usize::MAX {
                return Err(EngineError::TheoremViolation(format!(
                    "map is not injective at element {i}"
                )));
            }
            inv[image.index] = i;
        }
        Ok(HomBijection { from, to, fwd, inv })
    }

    pub fn apply(&self, m: MorId) -> MorId {
        debug_assert_eq!((m.src, m.dst), self.from);
        MorId::new(self.to.0, self.to.1, self.fwd[m.index])
    }

    pub fn apply_inv(&self, m: MorId) -> MorId {
        debug_assert_eq!((m.src, m.dst), self.to);
        MorId::new(self.from.0, self.from.1, self.inv[m.index])
    }
}

impl GvData {
    pub fn cat(&self) -> &FinCategory {
        &self.m.cat
    }

    pub fn d_obj(&self, y: ObjId) -> ObjId {
        self.d.apply_obj(y)
    }

    pub fn d_mor(&self, m: MorId) -> MorId {
        self.d.apply_mor(m)
    }

    pub fn d2(&self) -> FunctorData {
        self.d.compose(&self.d)
    }

    pub fn ev_at(&self, y: ObjId) -> MorId {
        self.ev[y.0]
    }

    /// Hom(X, DY) → Hom(X⊗Y, K): h ↦ ev_Y ∘ (h ⊗ id_Y).
    pub fn pair(&self, h: MorId, y: ObjId) -> MorId {
        let cat = self.cat();
        cat.compose(self.ev_at(y), self.m.tensor_left(h, y))
            .expect("pairing composite")
    }

    /// Inverse of [`GvData::pair`]: Hom(X⊗Y, K) → Hom(X, DY).
    pub fn unpair(&self, phi: MorId, x: ObjId, y: ObjId) -> MorId {
        let dy = self.d_obj(y);
        for h in self.cat().hom(x, dy) {
            if self.pair(h, y) == phi {
                return h;
            }
        }
        // Pairing is bijective for valid data; reaching this means the
        // GvData was built by hand and is corrupt.
        panic!(
            "pairing not surjective at Hom({}, {}) — corrupt duality data",
            x, y
        );
    }

    /// The bijection Hom(X⊗Y, K) ≅ Hom(X, DY) as explicit tables.
    pub fn pairing(&self, x: ObjId, y: ObjId) -> Result<HomBijection> {
        let xy = self.m.tensor(x, y);
        HomBijection::from_map(
            self.cat(),
            (xy, self.k),
            (x, self.d_obj(y)),
            |phi| self.unpair(phi, x, y),
        )
    }

    /// Hom(X⊗Y, K) → Hom(Y, D⁻¹X): the mate through the antiequivalence,
    /// φ ↦ D⁻¹(unpair φ) ∘ counit_Y.
    pub fn copair(&self, qi: &QuasiInverse, phi: MorId, x: ObjId, y: ObjId) -> MorId {
        let cat = self.cat();
        let h = self.unpair(phi, x, y);
        cat.compose(qi.dinv.apply_mor(h), qi.counit.at(y))
            .expect("copairing composite")
    }

    /// Inverse of [`GvData::copair`]: ψ: Y → D⁻¹X ↦ ev_Y ∘ ((D ψ ∘ unit_X) ⊗ id_Y).
    pub fn copair_inv(&self, qi: &QuasiInverse, psi: MorId, x: ObjId, y: ObjId) -> MorId {
        let cat = self.cat();
        let h = cat
            .compose(self.d_mor(psi), qi.unit.at(x))
            .expect("copairing mate");
        self.pair(h, y)
    }

    /// The bijection Hom(X⊗Y, K) ≅ Hom(Y, D⁻¹X) as explicit tables.
    pub fn copairing(&self, qi: &QuasiInverse, x: ObjId, y: ObjId) -> Result<HomBijection> {
        let xy = self.m.tensor(x, y);
        HomBijection::from_map(
            self.cat(),
            (xy, self.k),
            (y, qi.dinv.apply_obj(x)),
            |phi| self.copair(qi, phi, x, y),
        )
    }

    /// The twist of the pairing: Hom(X⊗Y, K) → Hom(D²Y⊗X, K),
    /// φ ↦ pair(D(unpair φ)). Both squares of its defining diagram commute
    /// by construction.
    pub fn g_map(&self, phi: MorId, x: ObjId, y: ObjId) -> MorId {
        let h = self.unpair(phi, x, y);
        self.pair(self.d_mor(h), x)
    }

    pub fn g_inv(&self, psi: MorId, x: ObjId, y: ObjId) -> MorId {
        let d2y = self.d_obj(self.d_obj(y));
        let h2 = self.unpair(psi, d2y, x);
        // h2 = D(h) for a unique h: X → DY; recover h by full faithfulness.
        let h = self
            .d
            .hom_preimage(self.cat(), h2, x, self.d_obj(y))
            .expect("duality functor is full");
        self.pair(h, y)
    }

    /// The bijection Hom(X⊗Y, K) ≅ Hom(D²Y⊗X, K) as explicit tables.
    pub fn g_iso(&self, x: ObjId, y: ObjId) -> Result<HomBijection> {
        let xy = self.m.tensor(x, y);
        let d2y = self.d_obj(self.d_obj(y));
        HomBijection::from_map(
            self.cat(),
            (xy, self.k),
            (self.m.tensor(d2y, x), self.k),
            |phi| self.g_map(phi, x, y),
        )
    }

    /// Whether the unit object itself is dualizing data here (K = 𝟙).
    pub fn is_r_category(&self) -> bool {
        self.k == self.m.unit
    }
}

/// Try to realize `k` as a dualizing object: for every Y find, by exhaustive
/// search in object order, a representing object DY and a universal element
/// ev_Y, then derive D on morphisms and insist it is an antiequivalence.
fn try_dualizing(m: &MonoidalData, k: ObjId) -> Option<GvData> {
    let cat = &m.cat;
    let n = cat.object_count();
    let mut d_obj = Vec::with_capacity(n);
    let mut ev = Vec::with_capacity(n);
    'per_y: for y in cat.object_ids() {
        for dy in cat.object_ids() {
            'per_ev: for cand in cat.hom(m.tensor(dy, y), k) {
                // cand is universal iff h ↦ cand ∘ (h⊗id_Y) is a bijection
                // Hom(X, DY) → Hom(X⊗Y, K) for every X.
                for x in cat.object_ids() {
                    let from = cat.hom_size(x, dy);
                    let to = cat.hom_size(m.tensor(x, y), k);
                    if from != to {
                        continue 'per_ev;
                    }
                    let mut seen = vec![false; to];
                    for h in cat.hom(x, dy) {
                        let phi = cat
                            .compose(cand, m.tensor_left(h, y))
                            .expect("pairing composite");
                        if seen[phi.index] {
                            continue 'per_ev;
                        }
                        seen[phi.index] = true;
                    }
                }
                d_obj.push(dy);
                ev.push(cand);
                continue 'per_y;
            }
        }
        return None; // some Y has no representing object
    }

    // Derive D on morphisms: D(m₀): DY' → DY is the unique h with
    // ev_Y ∘ (h ⊗ id_Y) = ev_{Y'} ∘ (id_{DY'} ⊗ m₀) for m₀: Y → Y'.
    let mut mor_map = vec![vec![Vec::new(); n]; n];
    for y in cat.object_ids() {
        for y2 in cat.object_ids() {
            let mut images = Vec::with_capacity(cat.hom_size(y, y2));
            for m0 in cat.hom(y, y2) {
                let rhs = cat
                    .compose(ev[y2.0], m.tensor_right(d_obj[y2.0], m0))
                    .expect("duality action composite");
                let dy = d_obj[y.0];
                let dy2 = d_obj[y2.0];
                let mut found = None;
                for h in cat.hom(dy2, dy) {
                    let lhs = cat
                        .compose(ev[y.0], m.tensor_left(h, y))
                        .expect("pairing composite");
                    if lhs == rhs {
                        found = Some(h);
                        break;
                    }
                }
                images.push(found?);
            }
            mor_map[y.0][y2.0] = images;
        }
    }
    let d = FunctorData { variance: Variance::Contravariant, obj_map: d_obj, mor_map };
    if !crate::cat::validate_functor(&d, cat, cat).is_valid() {
        return None;
    }
    if !(d.is_fully_faithful(cat, cat) && d.is_essentially_surjective(cat, cat)) {
        return None;
    }
    Some(GvData { m: m.clone(), k, d, ev })
}

/// All dualizing objects of the monoidal category, one [`GvData`] each, in
/// object order. Representing objects and universal elements are tie-broken
/// by lowest index.
pub fn find_dualizing(m: &MonoidalData) -> Vec<GvData> {
    m.cat.object_ids().filter_map(|k| try_dualizing(m, k)).collect()
}

/// Full validation of duality data: functor validity, antiequivalence,
/// universal-element signatures, pairing bijectivity everywhere, and
/// naturality of the pairing in both slots.
pub fn validate_gv(gv: &GvData) -> ValidationReport {
    let mut report = ValidationReport::new("duality data");
    let cat = gv.cat();
    let m = &gv.m;

    let d_report = crate::cat::validate_functor(&gv.d, cat, cat);
    if !d_report.is_valid() {
        report.absorb(d_report);
        return report;
    }
    if gv.d.variance != Variance::Contravariant {
        report.structural("duality functor must be contravariant");
        return report;
    }
    if !gv.d.is_fully_faithful(cat, cat) {
        report.axiom("duality fully faithful", String::new());
    }
    if !gv.d.is_essentially_surjective(cat, cat) {
        report.axiom("duality essentially surjective", String::new());
    }
    for y in cat.object_ids() {
        let e = gv.ev_at(y);
        let want_src = m.tensor(gv.d_obj(y), y);
        if (e.src, e.dst) != (want_src, gv.k) {
            report.structural(format!(
                "universal element at {} has wrong signature",
                cat.object_label(y)
            ));
            return report;
        }
    }

    for x in cat.object_ids() {
        for y in cat.object_ids() {
            let from = cat.hom_size(x, gv.d_obj(y));
            let to = cat.hom_size(m.tensor(x, y), gv.k);
            if from != to {
                report.axiom(
                    "pairing bijective",
                    format!("sizes at ({}, {})", cat.object_label(x), cat.object_label(y)),
                );
                continue;
            }
            let mut seen = vec![false; to];
            for h in cat.hom(x, gv.d_obj(y)) {
                let phi = gv.pair(h, y);
                if seen[phi.index] {
                    report.axiom(
                        "pairing bijective",
                        format!(
                            "collision at ({}, {})",
                            cat.object_label(x),
                            cat.object_label(y)
                        ),
                    );
                    break;
                }
                seen[phi.index] = true;
            }
        }
    }
    if !report.is_valid() {
        return report;
    }

    // Naturality in the second slot: for m₀: Y → Y' and h: X → DY',
    // pair(D(m₀)∘h, Y) = pair(h, Y') ∘ (id_X ⊗ m₀).
    for &m0 in &cat.morphisms() {
        let (y, y2) = (m0.src, m0.dst);
        for x in cat.object_ids() {
            for h in cat.hom(x, gv.d_obj(y2)) {
                let lhs = gv.pair(
                    cat.compose(gv.d_mor(m0), h).expect("composable"),
                    y,
                );
                let rhs = cat
                    .compose(gv.pair(h, y2), m.tensor_right(x, m0))
                    .expect("composable");
                if lhs != rhs {
                    report.axiom(
                        "pairing naturality (second slot)",
                        format!("at {} with {}", cat.mor_label(m0), cat.mor_label(h)),
                    );
                }
            }
        }
    }

    // Naturality in the first slot: for a: X' → X and h: X → DY,
    // pair(h∘a, Y) = pair(h, Y) ∘ (a ⊗ id_Y).
    for &a in &cat.morphisms() {
        for y in cat.object_ids() {
            for h in cat.hom(a.dst, gv.d_obj(y)) {
                let lhs = gv.pair(cat.compose(h, a).expect("composable"), y);
                let rhs = cat
                    .compose(gv.pair(h, y), m.tensor_left(a, y))
                    .expect("composable");
                if lhs != rhs {
                    report.axiom(
                        "pairing naturality (first slot)",
                        format!("at {} with {}", cat.mor_label(a), cat.mor_label(h)),
                    );
                }
            }
        }
    }

    report
}

/// Choose a quasi-inverse for D: exact preimages when D is bijective on
/// objects (then the comparison isomorphisms are identities), lowest-index
/// isomorphic preimages otherwise. The second adjoint-equivalence triangle
/// and all naturality squares are verified and must hold.
pub fn quasi_inverse(gv: &GvData) -> Result<QuasiInverse> {
    let cat = gv.cat();
    let n = cat.object_count();

    let mut dinv_obj = Vec::with_capacity(n);
    let mut unit_components = Vec::with_capacity(n);
    for z in cat.object_ids() {
        // Prefer an exact preimage; fall back to the first isomorphic one.
        let exact = cat.object_ids().find(|&y| gv.d_obj(y) == z);
        let chosen = match exact {
            Some(y) => y,
            None => cat
                .object_ids()
                .find(|&y| cat.isomorphic(gv.d_obj(y), z))
                .ok_or_else(|| {
                    EngineError::Precondition(format!(
                        "no preimage for {} — duality not essentially surjective",
                        cat.object_label(z)
                    ))
                })?,
        };
        let sigma = if gv.d_obj(chosen) == z {
            cat.identity(z)
        } else {
            cat.find_iso(z, gv.d_obj(chosen)).expect("isomorphic preimage")
        };
        dinv_obj.push(chosen);
        unit_components.push(sigma);
    }

    // D⁻¹ on morphisms: D⁻¹(m₀) is the D-preimage of σ_{Z'} ∘ m₀ ∘ σ_Z⁻¹.
    let mut mor_map = vec![vec![Vec::new(); n]; n];
    for z in cat.object_ids() {
        for z2 in cat.object_ids() {
            let mut images = Vec::with_capacity(cat.hom_size(z, z2));
            for m0 in cat.hom(z, z2) {
                let sig_z_inv = cat.inverse(unit_components[z.0]).ok_or_else(|| {
                    EngineError::TheoremViolation("unit component not invertible".into())
                })?;
                let conj = cat.compose_chain(&[sig_z_inv, m0, unit_components[z2.0]])?;
                let pre = gv
                    .d
                    .hom_preimage(cat, conj, dinv_obj[z2.0], dinv_obj[z.0])
                    .ok_or_else(|| {
                        EngineError::TheoremViolation(
                            "duality not full on quasi-inverse image".into(),
                        )
                    })?;
                images.push(pre);
            }
            mor_map[z.0][z2.0] = images;
        }
    }
    let dinv = FunctorData {
        variance: Variance::Contravariant,
        obj_map: dinv_obj.clone(),
        mor_map,
    };
    let f_report = crate::cat::validate_functor(&dinv, cat, cat);
    if !f_report.is_valid() {
        return Err(EngineError::TheoremViolation(format!(
            "derived quasi-inverse is not a functor: {f_report}"
        )));
    }

    let id = FunctorData::identity(cat);
    let unit = NatFamily::new(id.clone(), gv.d.compose(&dinv), unit_components);
    let unit_report = crate::cat::check_naturality(&unit, cat);
    if !unit_report.is_valid() {
        return Err(EngineError::TheoremViolation(format!(
            "quasi-inverse unit not natural: {unit_report}"
        )));
    }

    // counit_X: X → D⁻¹(DX) is the D-preimage of unit_{DX}⁻¹.
    let mut counit_components = Vec::with_capacity(n);
    for x in cat.object_ids() {
        let dx = gv.d_obj(x);
        let sig_inv = cat.inverse(unit.at(dx)).ok_or_else(|| {
            EngineError::TheoremViolation("unit component not invertible".into())
        })?;
        let tau = gv
            .d
            .hom_preimage(cat, sig_inv, x, dinv.apply_obj(dx))
            .ok_or_else(|| EngineError::TheoremViolation("counit preimage missing".into()))?;
        counit_components.push(tau);
    }
    let counit = NatFamily::new(id, dinv.compose(&gv.d), counit_components);
    let counit_report = crate::cat::check_naturality(&counit, cat);
    if !counit_report.is_valid() {
        return Err(EngineError::TheoremViolation(format!(
            "quasi-inverse counit not natural: {counit_report}"
        )));
    }

    let qi = QuasiInverse { dinv, unit, counit };

    // Triangle identities: D(counit_X) ∘ unit_{DX} = id and
    // D⁻¹(unit_Z) ∘ counit_{D⁻¹Z} = id.
    for x in cat.object_ids() {
        let t1 = cat.compose(gv.d_mor(qi.counit.at(x)), qi.unit.at(gv.d_obj(x)))?;
        if !cat.is_identity(t1) {
            return Err(EngineError::TheoremViolation(format!(
                "first triangle identity fails at {}",
                cat.object_label(x)
            )));
        }
    }
    for z in cat.object_ids() {
        let t2 = cat.compose(
            qi.dinv.apply_mor(qi.unit.at(z)),
            qi.counit.at(qi.dinv.apply_obj(z)),
        )?;
        if !cat.is_identity(t2) {
            return Err(EngineError::TheoremViolation(format!(
                "second triangle identity fails at {}",
                cat.object_label(z)
            )));
        }
    }

    Ok(qi)
}

/// A hom-set family Hom(Z1⊗X, K) → Hom(Z2⊗X, K), one map per object X,
/// stored as index tables.
#[derive(Debug, Clone)]
pub struct HomFamily {
    pub z1: ObjId,
    pub z2: ObjId,
    /// maps[x][i] = index in Hom(Z2⊗X, K) of the image of element i of
    /// Hom(Z1⊗X, K).
    pub maps: Vec<Vec<usize>>,
}

impl HomFamily {
    pub fn from_fn(
        gv: &GvData,
        z1: ObjId,
        z2: ObjId,
        f: impl Fn(ObjId, MorId) -> MorId,
    ) -> Self {
        let cat = gv.cat();
        let maps = cat
            .object_ids()
            .map(|x| {
                let src = gv.m.tensor(z1, x);
                cat.hom(src, gv.k)
                    .map(|phi| {
                        let image = f(x, phi);
                        debug_assert_eq!(image.src, gv.m.tensor(z2, x));
                        debug_assert_eq!(image.dst, gv.k);
                        image.index
                    })
                    .collect()
            })
            .collect();
        HomFamily { z1, z2, maps }
    }

    pub fn apply(&self, gv: &GvData, x: ObjId, phi: MorId) -> MorId {
        MorId::new(gv.m.tensor(self.z2, x), gv.k, self.maps[x.0][phi.index])
    }
}

/// Solve for the unique w: Z2 → Z1 inducing the given natural family by
/// φ ↦ φ ∘ (w ⊗ id_X). Naturality of the family is checked first; the scan
/// continues past the first hit so that uniqueness is verified, not assumed.
pub fn yoneda_solve(gv: &GvData, family: &HomFamily) -> Result<MorId> {
    let cat = gv.cat();
    let m = &gv.m;
    let (z1, z2) = (family.z1, family.z2);

    for x in cat.object_ids() {
        if family.maps[x.0].len() != cat.hom_size(m.tensor(z1, x), gv.k) {
            return Err(EngineError::Structural(format!(
                "family at {} has wrong arity",
                cat.object_label(x)
            )));
        }
        if family.maps[x.0]
            .iter()
            .any(|&i| i >= cat.hom_size(m.tensor(z2, x), gv.k))
        {
            return Err(EngineError::Structural(format!(
                "family at {} has out-of-range image",
                cat.object_label(x)
            )));
        }
    }

    // Naturality in X: for m₀: X → X' the square with (id_{Zi} ⊗ m₀)* commutes.
    for &m0 in &cat.morphisms() {
        let (x, x2) = (m0.src, m0.dst);
        for phi in cat.hom(m.tensor(z1, x2), gv.k) {
            let pulled = cat
                .compose(phi, m.tensor_right(z1, m0))
                .expect("pullback composite");
            let lhs = family.apply(gv, x, pulled);
            let rhs = cat
                .compose(family.apply(gv, x2, phi), m.tensor_right(z2, m0))
                .expect("pullback composite");
            if lhs != rhs {
                return Err(EngineError::Precondition(format!(
                    "family is not natural at {}",
                    cat.mor_label(m0)
                )));
            }
        }
    }

    let mut solutions = Vec::new();
    for w in cat.hom(z2, z1) {
        let mut works = true;
        'outer: for x in cat.object_ids() {
            for phi in cat.hom(m.tensor(z1, x), gv.k) {
                let induced = cat
                    .compose(phi, m.tensor_left(w, x))
                    .expect("induced composite");
                if induced != family.apply(gv, x, phi) {
                    works = false;
                    break 'outer;
                }
            }
        }
        if works {
            solutions.push(w);
        }
    }
    match solutions.len() {
        1 => Ok(solutions[0]),
        0 => Err(EngineError::Precondition(
            "no solution — family not induced by any morphism (corrupt data?)".into(),
        )),
        _ => Err(EngineError::Precondition(
            "non-unique solution — duality data corrupt".into(),
        )),
    }
}

/// The four canonical comparison isomorphisms around the unit and K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalUnitIsos {
    /// D𝟙 → K.
    pub d1: MorId,
    /// D⁻¹𝟙 → K.
    pub dinv1: MorId,
    /// 𝟙 → D²𝟙.
    pub dd1: MorId,
    /// K → D²K.
    pub ddk: MorId,
    /// DK → 𝟙, the auxiliary comparison used to build dd1.
    pub dk: MorId,
}

/// Element chases for the canonical isomorphisms:
///   d1    := ev_𝟙 ∘ runit⁻¹ : D𝟙 → K,
///   dinv1 := inverse of copair(lunit_K)  : D⁻¹𝟙 → K,
///   dk    := unit_𝟙⁻¹ ∘ D(dinv1)         : DK → 𝟙,
///   dd1   := D(d1) ∘ dk⁻¹                : 𝟙 → D²𝟙,
///   ddk   := D²(dinv1) ∘ D(unit_𝟙⁻¹) ∘ d1⁻¹ : K → D𝟙 → D²D⁻¹𝟙 → D²K.
/// The final cross-check recomputes ddk⁻¹ as the g-image of the left unitor
/// of K and insists the two routes agree.
pub fn canonical_unit_isos(gv: &GvData, qi: &QuasiInverse) -> Result<CanonicalUnitIsos> {
    let cat = gv.cat();
    let m = &gv.m;
    let one = m.unit;

    let runit_inv = cat.inverse(m.runit_at(gv.d_obj(one))).ok_or_else(|| {
        EngineError::Precondition("right unitor not invertible".into())
    })?;
    let d1 = cat.compose(gv.ev_at(one), runit_inv)?;
    let d1_inv = cat.inverse(d1).ok_or_else(|| {
        EngineError::TheoremViolation("canonical D𝟙 → K is not invertible".into())
    })?;

    let k_to_dinv1 = gv.copair(qi, m.lunit_at(gv.k), one, gv.k);
    let dinv1 = cat.inverse(k_to_dinv1).ok_or_else(|| {
        EngineError::TheoremViolation("canonical D⁻¹𝟙 → K is not invertible".into())
    })?;

    let unit_one_inv = cat.inverse(qi.unit.at(one)).ok_or_else(|| {
        EngineError::TheoremViolation("quasi-inverse unit not invertible".into())
    })?;
    let dk = cat.compose(unit_one_inv, gv.d_mor(dinv1))?;
    let dk_inv = cat.inverse(dk).ok_or_else(|| {
        EngineError::TheoremViolation("canonical DK → 𝟙 is not invertible".into())
    })?;
    let dd1 = cat.compose(gv.d_mor(d1), dk_inv)?;

    let d2 = gv.d2();
    let ddk = cat.compose_chain(&[d1_inv, gv.d_mor(unit_one_inv), d2.apply_mor(dinv1)])?;
    if !cat.is_iso(ddk) {
        return Err(EngineError::TheoremViolation(
            "canonical K → D²K is not invertible".into(),
        ));
    }

    // Cross-check: the inverse of ddk equals the g-image of the left unitor
    // 𝟙⊗K → K, read back along runit.
    let via_g = cat.compose(
        gv.g_map(m.lunit_at(gv.k), one, gv.k),
        cat.inverse(m.runit_at(d2.apply_obj(gv.k)))
            .ok_or_else(|| EngineError::Precondition("right unitor not invertible".into()))?,
    )?;
    let ddk_inv = cat.inverse(ddk).expect("checked invertible");
    if via_g != ddk_inv {
        return Err(EngineError::TheoremViolation(
            "the two routes to D²K → K disagree — unitor convention broken".into(),
        ));
    }

    Ok(CanonicalUnitIsos { d1, dinv1, dd1, ddk, dk })
}

/// Right internal hom D⁻¹(DZ⊗X) plus the materialized adjunction bijections
/// Hom(X⊗Y, Z) ≅ Hom(Y, hom(X, Z)), one per Y, each verified bijective.
pub struct InternalHomResult {
    pub object: ObjId,
    /// adjunction[y] maps Hom(X⊗Y, Z) index → Hom(Y, object) index.
    pub adjunction: Vec<HomBijection>,
}

/// Chase for the right internal hom, left-normalized:
/// Hom(X⊗Y,Z) → Hom(DZ⊗(X⊗Y),K) → Hom((DZ⊗X)⊗Y,K) → Hom(Y, D⁻¹(DZ⊗X)).
pub fn internal_hom(gv: &GvData, qi: &QuasiInverse, x: ObjId, z: ObjId) -> Result<InternalHomResult> {
    let cat = gv.cat();
    let m = &gv.m;
    let dz = gv.d_obj(z);
    let object = qi.dinv.apply_obj(m.tensor(dz, x));

    let mut adjunction = Vec::new();
    for y in cat.object_ids() {
        let from = (m.tensor(x, y), z);
        let to = (y, object);
        let built = HomBijection::from_map(cat, from, to, |phi| {
            // φ: X⊗Y → Z  ↦  counit-free mate in Hom(DZ⊗(X⊗Y), K):
            let psi = cat
                .compose(qi.counit.at(z), phi)
                .expect("counit post-composition");
            let big = gv.copair_inv(qi, psi, dz, m.tensor(x, y));
            // reassociate and take the D⁻¹-mate at (DZ⊗X, Y):
            let reassoc = cat
                .compose(big, m.assoc_at(dz, x, y))
                .expect("associator pullback");
            gv.copair(qi, reassoc, m.tensor(dz, x), y)
        })?;
        adjunction.push(built);
    }
    Ok(InternalHomResult { object, adjunction })
}

/// Left internal hom D(Y⊗D⁻¹Z) with its adjunction
/// Hom(X⊗Y, Z) ≅ Hom(X, hom'(Y, Z)), one bijection per X.
pub fn internal_hom_prime(
    gv: &GvData,
    qi: &QuasiInverse,
    y: ObjId,
    z: ObjId,
) -> Result<InternalHomResult> {
    let cat = gv.cat();
    let m = &gv.m;
    let dinv_z = qi.dinv.apply_obj(z);
    let object = gv.d_obj(m.tensor(y, dinv_z));

    let mut adjunction = Vec::new();
    for x in cat.object_ids() {
        let from = (m.tensor(x, y), z);
        let to = (x, object);
        let built = HomBijection::from_map(cat, from, to, |phi| {
            // φ: X⊗Y → Z ↦ unit_Z∘φ: X⊗Y → D(D⁻¹Z) ↦ pairing mate in
            // Hom((X⊗Y)⊗D⁻¹Z, K) ↦ reassociate ↦ unpair at (X, Y⊗D⁻¹Z).
            let h = cat.compose(qi.unit.at(z), phi).expect("unit post-composition");
            let big = gv.pair(h, dinv_z);
            let assoc_inv = cat
                .inverse(m.assoc_at(x, y, dinv_z))
                .expect("associator invertible");
            let reassoc = cat.compose(big, assoc_inv).expect("associator pullback");
            gv.unpair(reassoc, x, m.tensor(y, dinv_z))
        })?;
        adjunction.push(built);
    }
    Ok(InternalHomResult { object, adjunction })
}

/// The canonical comparisons 𝟙 → hom(K, K) and 𝟙 → hom'(K, K); both must be
/// isomorphisms in any valid duality data.
pub fn hom_kk_isos(gv: &GvData, qi: &QuasiInverse) -> Result<(MorId, MorId)> {
    let cat = gv.cat();
    let m = &gv.m;
    let k = gv.k;
    let ih = internal_hom(gv, qi, k, k)?;
    let to_ih = ih.adjunction[m.unit.0].apply(m.runit_at(k));
    let ihp = internal_hom_prime(gv, qi, k, k)?;
    let to_ihp = ihp.adjunction[m.unit.0].apply(m.lunit_at(k));
    if !cat.is_iso(to_ih) {
        return Err(EngineError::TheoremViolation(
            "canonical 𝟙 → hom(K,K) is not an isomorphism".into(),
        ));
    }
    if !cat.is_iso(to_ihp) {
        return Err(EngineError::TheoremViolation(
            "canonical 𝟙 → hom'(K,K) is not an isomorphism".into(),
        ));
    }
    Ok((to_ih, to_ihp))
}

/// The monoidal structure on D². For each pair the structure map is solved
/// for via the Yoneda solver from the family
///   Hom(D²(Y1⊗Y2)⊗X, K) → Hom((D²Y1⊗D²Y2)⊗X, K)
/// obtained by unrolling one application of the pairing twist against two,
/// with left-normalized associator insertions. Components are stored in the
/// direction D²(Y1⊗Y2) → D²Y1 ⊗ D²Y2; the unit comparison is the canonical
/// 𝟙 → D²𝟙.
pub fn d_squared_monoidal(gv: &GvData) -> Result<MonoidalFunctorData> {
    let cat = gv.cat();
    let m = &gv.m;
    let qi = quasi_inverse(gv)?;
    let isos = canonical_unit_isos(gv, &qi)?;
    let d2 = gv.d2();
    let n = cat.object_count();

    let mut structure = vec![vec![MorId::new(ObjId(0), ObjId(0), 0); n]; n];
    for y1 in cat.object_ids() {
        for y2 in cat.object_ids() {
            let y12 = m.tensor(y1, y2);
            let d2y1 = d2.apply_obj(y1);
            let d2y2 = d2.apply_obj(y2);
            let z1 = d2.apply_obj(y12);
            let z2 = m.tensor(d2y1, d2y2);
            let family = HomFamily::from_fn(gv, z1, z2, |x, phi| {
                // Hom(D²(Y1⊗Y2)⊗X, K) → Hom(X⊗(Y1⊗Y2), K)
                let s1 = gv.g_inv(phi, x, y12);
                // → Hom((X⊗Y1)⊗Y2, K)
                let s2 = cat
                    .compose(s1, m.assoc_at(x, y1, y2))
                    .expect("associator pullback");
                // → Hom(D²Y2⊗(X⊗Y1), K)
                let s3 = gv.g_map(s2, m.tensor(x, y1), y2);
                // → Hom((D²Y2⊗X)⊗Y1, K)
                let s4 = cat
                    .compose(s3, m.assoc_at(d2y2, x, y1))
                    .expect("associator pullback");
                // → Hom(D²Y1⊗(D²Y2⊗X), K)
                let s5 = gv.g_map(s4, m.tensor(d2y2, x), y1);
                // → Hom((D²Y1⊗D²Y2)⊗X, K)
                cat.compose(s5, m.assoc_at(d2y1, d2y2, x))
                    .expect("associator pullback")
            });
            let mu = yoneda_solve(gv, &family).map_err(|e| match e {
                EngineError::Precondition(msg) => EngineError::TheoremViolation(format!(
                    "structure map solve failed for ({}, {}): {msg}",
                    cat.object_label(y1),
                    cat.object_label(y2)
                )),
                other => other,
            })?;
            // mu: D²Y1⊗D²Y2 → D²(Y1⊗Y2); store the inverse direction.
            structure[y1.0][y2.0] = cat.inverse(mu).ok_or_else(|| {
                EngineError::TheoremViolation(format!(
                    "structure map at ({}, {}) is not invertible",
                    cat.object_label(y1),
                    cat.object_label(y2)
                ))
            })?;
        }
    }

    Ok(MonoidalFunctorData {
        functor: d2,
        direction: StructureDirection::Oplax,
        structure,
        unit_iso: isos.dd1,
    })
}

/// Check a claimed monoidal structure on D² against the defining property:
/// pulling back along each structure component must implement the canonical
/// hom-set chain. Coherence alone cannot see a corruption by a central
/// scalar, but the defining family pins every component uniquely, so this
/// validator rejects any deviation from the canonical structure.
pub fn validate_d_squared_structure(
    gv: &GvData,
    mf: &MonoidalFunctorData,
) -> Result<ValidationReport> {
    let canonical = d_squared_monoidal(gv)?;
    let mut report = ValidationReport::new("squared-duality structure");
    let cat = gv.cat();
    if mf.functor != canonical.functor {
        report.structural("underlying functor is not the squared duality");
        return Ok(report);
    }
    for y1 in cat.object_ids() {
        for y2 in cat.object_ids() {
            let claimed = mf.oplax_at(cat, y1, y2)?;
            let expect = canonical.oplax_at(cat, y1, y2)?;
            if claimed != expect {
                report.axiom(
                    "canonical structure",
                    format!("component at ({}, {})", cat.object_label(y1), cat.object_label(y2)),
                );
            }
        }
    }
    if mf.unit_iso != canonical.unit_iso {
        report.axiom("canonical structure", "unit comparison".into());
    }
    Ok(report)
}

/// Classification of dualizing objects against the invertible objects:
/// the dualizing objects are exactly the K⊗L⁻¹ (equivalently L⁻¹⊗K) for
/// invertible L, and D² of an invertible object is invertible with
/// K⊗L⁻¹ ≅ (D²L)⁻¹⊗K.
#[derive(Debug, Clone)]
pub struct DualizingClassification {
    pub invertibles: Vec<ObjId>,
    pub dualizing: Vec<ObjId>,
}

pub fn classify_dualizing(gv: &GvData) -> Result<DualizingClassification> {
    let cat = gv.cat();
    let m = &gv.m;
    let invertibles: Vec<_> = cat
        .object_ids()
        .filter_map(|x| check_invertible(m, x).map(|w| (x, w.inverse)))
        .collect();
    let dualizing: Vec<ObjId> = find_dualizing(m).into_iter().map(|g| g.k).collect();

    let mut from_right: Vec<bool> = vec![false; cat.object_count()];
    let mut from_left: Vec<bool> = vec![false; cat.object_count()];
    for &(_, linv) in &invertibles {
        let right = m.tensor(gv.k, linv);
        let left = m.tensor(linv, gv.k);
        for o in cat.object_ids() {
            if cat.isomorphic(o, right) {
                from_right[o.0] = true;
            }
            if cat.isomorphic(o, left) {
                from_left[o.0] = true;
            }
        }
    }
    let dual_set: Vec<bool> = cat
        .object_ids()
        .map(|o| dualizing.contains(&o))
        .collect();
    if dual_set != from_right || dual_set != from_left {
        return Err(EngineError::TheoremViolation(
            "dualizing objects do not match K ⊗ (invertible)⁻¹".into(),
        ));
    }

    let d2 = gv.d2();
    for &(l, linv) in &invertibles {
        let d2l = d2.apply_obj(l);
        let w = check_invertible(m, d2l).ok_or_else(|| {
            EngineError::TheoremViolation(format!(
                "D² of invertible {} is not invertible",
                cat.object_label(l)
            ))
        })?;
        let lhs = m.tensor(gv.k, linv);
        let rhs = m.tensor(w.inverse, gv.k);
        if !cat.isomorphic(lhs, rhs) {
            return Err(EngineError::TheoremViolation(format!(
                "K⊗L⁻¹ ≇ (D²L)⁻¹⊗K for L = {}",
                cat.object_label(l)
            )));
        }
    }

    Ok(DualizingClassification {
        invertibles: invertibles.into_iter().map(|(l, _)| l).collect(),
        dualizing,
    })
}
