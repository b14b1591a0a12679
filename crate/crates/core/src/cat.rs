//! Finite categories given by explicit tables, functors of both variances,
//! natural families, and exhaustive enumeration of natural isomorphisms.
//!
//! Everything is positional: objects are indices into the object list,
//! morphisms are (src, dst, index) triples into finite hom-sets. Labels are
//! carried for I/O only and never participate in equality. All collections
//! are ordered, so identical inputs produce identical outputs.

use crate::report::{EngineError, Result, ValidationReport};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An object, addressed by its position in the category's object list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ObjId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A morphism, addressed by source, destination, and position in Hom(src, dst).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MorId {
    pub src: ObjId,
    pub dst: ObjId,
    pub index: usize,
}

impl MorId {
    pub fn new(src: ObjId, dst: ObjId, index: usize) -> Self {
        MorId { src, dst, index }
    }

    pub fn is_endo(&self) -> bool {
        self.src == self.dst
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}[{}]", self.src, self.dst, self.index)
    }
}

/// A finite category: labelled objects, labelled finite hom-sets, a full
/// composition table, and chosen identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub name: String,
    pub objects: Vec<String>,
    /// homs[src][dst] = labels of Hom(src, dst), in order.
    homs: Vec<Vec<Vec<String>>>,
    /// comp[src][mid][dst][g.index][f.index] = index of g∘f in Hom(src, dst),
    /// for f: src→mid and g: mid→dst.
    comp: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
    /// ids[x] = index of id_x within Hom(x, x).
    ids: Vec<usize>,
}

impl FinCategory {
    /// Build a category from raw tables. Only shape is checked here; run
    /// [`validate_category`] for the axioms.
    pub fn from_tables(
        name: impl Into<String>,
        objects: Vec<String>,
        homs: Vec<Vec<Vec<String>>>,
        comp: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
        ids: Vec<usize>,
    ) -> Result<Self> {
        let n = objects.len();
        if homs.len() != n || comp.len() != n || ids.len() != n {
            return Err(EngineError::Structural(format!(
                "table arity mismatch: {} objects, homs {}, comp {}, ids {}",
                n,
                homs.len(),
                comp.len(),
                ids.len()
            )));
        }
        for (x, row) in homs.iter().enumerate() {
            if row.len() != n {
                return Err(EngineError::Structural(format!("homs row {x} has wrong arity")));
            }
        }
        let cat = FinCategory { name: name.into(), objects, homs, comp, ids };
        cat.check_shape()?;
        Ok(cat)
    }

    /// Build a category from hom labels plus closures for composition and
    /// identities. `compose(g, f)` receives f: x→m, g: m→d and must return
    /// the index of g∘f within Hom(x, d).
    pub fn from_fn(
        name: impl Into<String>,
        objects: Vec<String>,
        hom_labels: impl Fn(ObjId, ObjId) -> Vec<String>,
        compose: impl Fn(MorId, MorId) -> usize,
        identity: impl Fn(ObjId) -> usize,
    ) -> Result<Self> {
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for d in 0..n {
                homs[s][d] = hom_labels(ObjId(s), ObjId(d));
            }
        }
        let mut comp = vec![vec![vec![Vec::new(); n]; n]; n];
        for x in 0..n {
            for m in 0..n {
                for d in 0..n {
                    let gs = homs[m][d].len();
                    let fs = homs[x][m].len();
                    let mut table = vec![vec![0usize; fs]; gs];
                    for (g, row) in table.iter_mut().enumerate() {
                        for (f, entry) in row.iter_mut().enumerate() {
                            *entry = compose(
                                MorId::new(ObjId(m), ObjId(d), g),
                                MorId::new(ObjId(x), ObjId(m), f),
                            );
                        }
                    }
                    comp[x][m][d] = table;
                }
            }
        }
        let ids = (0..n).map(|x| identity(ObjId(x))).collect();
        FinCategory::from_tables(name, objects, homs, comp, ids)
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.objects.len();
        for x in 0..n {
            if self.ids[x] >= self.homs[x][x].len() {
                return Err(EngineError::Structural(format!(
                    "identity index {} out of range for Hom({x},{x})",
                    self.ids[x]
                )));
            }
            for m in 0..n {
                if self.comp[x][m].len() != n {
                    return Err(EngineError::Structural(format!(
                        "comp[{x}][{m}] has wrong arity"
                    )));
                }
                for d in 0..n {
                    let table = &self.comp[x][m][d];
                    if table.len() != self.homs[m][d].len() {
                        return Err(EngineError::Structural(format!(
                            "comp[{x}][{m}][{d}] has {} rows, expected {}",
                            table.len(),
                            self.homs[m][d].len()
                        )));
                    }
                    for (g, row) in table.iter().enumerate() {
                        if row.len() != self.homs[x][m].len() {
                            return Err(EngineError::Structural(format!(
                                "comp[{x}][{m}][{d}][{g}] has {} cols, expected {}",
                                row.len(),
                                self.homs[x][m].len()
                            )));
                        }
                        for (f, &r) in row.iter().enumerate() {
                            if r >= self.homs[x][d].len() {
                                return Err(EngineError::Structural(format!(
                                    "comp entry ({x},{m},{d})[g={g}][f={f}] = {r} out of range"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn object_label(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn hom_size(&self, src: ObjId, dst: ObjId) -> usize {
        self.homs[src.0][dst.0].len()
    }

    pub fn hom(&self, src: ObjId, dst: ObjId) -> impl Iterator<Item = MorId> {
        (0..self.hom_size(src, dst)).map(move |i| MorId::new(src, dst, i))
    }

    pub fn hom_labels(&self, src: ObjId, dst: ObjId) -> &[String] {
        &self.homs[src.0][dst.0]
    }

    pub fn mor_label(&self, m: MorId) -> &str {
        &self.homs[m.src.0][m.dst.0][m.index]
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        MorId::new(x, x, self.ids[x.0])
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        m.is_endo() && self.ids[m.src.0] == m.index
    }

    /// All morphisms in canonical order: by source, then destination, then index.
    pub fn morphisms(&self) -> Vec<MorId> {
        let mut out = Vec::new();
        for s in self.object_ids() {
            for d in self.object_ids() {
                out.extend(self.hom(s, d));
            }
        }
        out
    }

    pub fn mor_count(&self) -> usize {
        let n = self.object_count();
        (0..n)
            .map(|s| (0..n).map(|d| self.homs[s][d].len()).sum::<usize>())
            .sum()
    }

    /// Global index of a morphism in the canonical order.
    pub fn mor_global_index(&self, m: MorId) -> usize {
        let mut offset = 0;
        for s in 0..m.src.0 {
            for d in 0..self.object_count() {
                offset += self.homs[s][d].len();
            }
        }
        for d in 0..m.dst.0 {
            offset += self.homs[m.src.0][d].len();
        }
        offset + m.index
    }

    /// Composite g∘f for f: X→Y, g: Y→Z.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        if f.dst != g.src {
            return Err(EngineError::Precondition(format!(
                "non-composable pair: {} then {}",
                f, g
            )));
        }
        let idx = self.comp[f.src.0][f.dst.0][g.dst.0][g.index][f.index];
        Ok(MorId::new(f.src, g.dst, idx))
    }

    /// Composite of a chain listed source-to-target order: chain[0] first.
    pub fn compose_chain(&self, chain: &[MorId]) -> Result<MorId> {
        let mut acc = *chain.first().ok_or_else(|| {
            EngineError::Precondition("empty composition chain".into())
        })?;
        for m in &chain[1..] {
            acc = self.compose(*m, acc)?;
        }
        Ok(acc)
    }

    /// Two-sided inverse of `m` if one exists. The inverse of an invertible
    /// morphism is unique, so the first hit is the answer.
    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        for cand in self.hom(m.dst, m.src) {
            let left = self.compose(cand, m).ok()?;
            let right = self.compose(m, cand).ok()?;
            if self.is_identity(left) && self.is_identity(right) {
                return Some(cand);
            }
        }
        None
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverse(m).is_some()
    }

    /// First isomorphism X→Y in hom order, if any.
    pub fn find_iso(&self, x: ObjId, y: ObjId) -> Option<MorId> {
        self.hom(x, y).find(|&m| self.is_iso(m))
    }

    pub fn isomorphic(&self, x: ObjId, y: ObjId) -> bool {
        self.find_iso(x, y).is_some()
    }

    /// Replace one composition entry; used by the mutation harness.
    pub fn with_comp_entry(&self, f: MorId, g: MorId, result_index: usize) -> Self {
        let mut out = self.clone();
        out.comp[f.src.0][f.dst.0][g.dst.0][g.index][f.index] = result_index;
        out
    }

    pub fn comp_entry(&self, f: MorId, g: MorId) -> usize {
        self.comp[f.src.0][f.dst.0][g.dst.0][g.index][f.index]
    }

    /// The opposite category: hom-sets transposed, composition reversed.
    pub fn opposite(&self) -> FinCategory {
        let n = self.object_count();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for d in 0..n {
                homs[s][d] = self.homs[d][s].clone();
            }
        }
        // comp_op[x][m][d][g][f]: f: x→m and g: m→d in the opposite, i.e.
        // f: m→x and g: d→m originally, composing to d→x there.
        let mut comp = vec![vec![vec![Vec::new(); n]; n]; n];
        for x in 0..n {
            for m in 0..n {
                for d in 0..n {
                    let gs = homs[m][d].len();
                    let fs = homs[x][m].len();
                    let mut table = vec![vec![0usize; fs]; gs];
                    for (g, row) in table.iter_mut().enumerate() {
                        for (f, entry) in row.iter_mut().enumerate() {
                            // original: g: d→m composed after nothing; we need
                            // f_orig: m→x, g_orig: d→m, f_orig∘g_orig: d→x.
                            *entry = self.comp[d][m][x][f][g];
                        }
                    }
                    comp[x][m][d] = table;
                }
            }
        }
        // Toggle the suffix so that opposite() is a bit-exact involution.
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        FinCategory { name, objects: self.objects.clone(), homs, comp, ids: self.ids.clone() }
    }
}

/// Exhaustive check of the category axioms: identities and associativity.
/// Structural problems (already excluded by construction) would be reported
/// distinctly from axiom failures.
pub fn validate_category(cat: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::new(format!("category {}", cat.name));
    let morphisms = cat.morphisms();

    for &f in &morphisms {
        let id_dst = cat.identity(f.dst);
        let id_src = cat.identity(f.src);
        match cat.compose(id_dst, f) {
            Ok(r) if r == f => {}
            _ => report.axiom(
                "left identity",
                format!("id_{} ∘ {} ≠ {}", cat.object_label(f.dst), cat.mor_label(f), cat.mor_label(f)),
            ),
        }
        match cat.compose(f, id_src) {
            Ok(r) if r == f => {}
            _ => report.axiom(
                "right identity",
                format!("{} ∘ id_{} ≠ {}", cat.mor_label(f), cat.object_label(f.src), cat.mor_label(f)),
            ),
        }
    }

    // Associativity over all composable triples h∘(g∘f) = (h∘g)∘f.
    use rayon::prelude::*;
    let triples: Vec<(MorId, MorId, MorId)> = {
        let mut v = Vec::new();
        for &f in &morphisms {
            for g in cat.hom_iter_from(f.dst) {
                for h in cat.hom_iter_from(g.dst) {
                    v.push((h, g, f));
                }
            }
        }
        v
    };
    let mut assoc_issues: Vec<String> = triples
        .par_iter()
        .filter_map(|&(h, g, f)| {
            let gf = cat.compose(g, f).ok()?;
            let hg = cat.compose(h, g).ok()?;
            let lhs = cat.compose(h, gf).ok()?;
            let rhs = cat.compose(hg, f).ok()?;
            if lhs != rhs {
                Some(format!(
                    "({} ∘ {}) ∘ {} vs {} ∘ ({} ∘ {})",
                    cat.mor_label(h),
                    cat.mor_label(g),
                    cat.mor_label(f),
                    cat.mor_label(h),
                    cat.mor_label(g),
                    cat.mor_label(f)
                ))
            } else {
                None
            }
        })
        .collect();
    assoc_issues.sort();
    for w in assoc_issues {
        report.axiom("associativity", w);
    }
    report
}

impl FinCategory {
    /// All morphisms whose source is `x`, canonical order.
    fn hom_iter_from(&self, x: ObjId) -> Vec<MorId> {
        let mut v = Vec::new();
        for d in self.object_ids() {
            v.extend(self.hom(x, d));
        }
        v
    }
}

/// Variance of a functor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// An endofunctor given by explicit object and morphism tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub variance: Variance,
    pub obj_map: Vec<ObjId>,
    /// mor_map[src][dst][index] = image morphism.
    pub mor_map: Vec<Vec<Vec<MorId>>>,
}

impl FunctorData {
    pub fn identity(cat: &FinCategory) -> Self {
        let n = cat.object_count();
        let obj_map = (0..n).map(ObjId).collect();
        let mor_map = (0..n)
            .map(|s| {
                (0..n)
                    .map(|d| {
                        cat.hom(ObjId(s), ObjId(d)).collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect();
        FunctorData { variance: Variance::Covariant, obj_map, mor_map }
    }

    pub fn apply_obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn apply_mor(&self, m: MorId) -> MorId {
        self.mor_map[m.src.0][m.dst.0][m.index]
    }

    /// Composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &FunctorData) -> FunctorData {
        let variance = match (self.variance, other.variance) {
            (Variance::Covariant, v) => v,
            (Variance::Contravariant, Variance::Covariant) => Variance::Contravariant,
            (Variance::Contravariant, Variance::Contravariant) => Variance::Covariant,
        };
        let obj_map = other.obj_map.iter().map(|&x| self.apply_obj(x)).collect();
        let mor_map = other
            .mor_map
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.iter().map(|&m| self.apply_mor(m)).collect())
                    .collect()
            })
            .collect();
        FunctorData { variance, obj_map, mor_map }
    }

    /// Expected (src, dst) of the image of a morphism X→Y under this functor.
    pub fn image_signature(&self, m: MorId) -> (ObjId, ObjId) {
        match self.variance {
            Variance::Covariant => (self.apply_obj(m.src), self.apply_obj(m.dst)),
            Variance::Contravariant => (self.apply_obj(m.dst), self.apply_obj(m.src)),
        }
    }

    /// Whether hom-wise action Hom(X,Y) → Hom(FX,FY) (or reversed) is bijective
    /// for every pair; with essential surjectivity this makes an (anti)equivalence.
    pub fn is_fully_faithful(&self, src: &FinCategory, dst: &FinCategory) -> bool {
        for x in src.object_ids() {
            for y in src.object_ids() {
                let (fx, fy) = match self.variance {
                    Variance::Covariant => (self.apply_obj(x), self.apply_obj(y)),
                    Variance::Contravariant => (self.apply_obj(y), self.apply_obj(x)),
                };
                if src.hom_size(x, y) != dst.hom_size(fx, fy) {
                    return false;
                }
                let mut seen = vec![false; dst.hom_size(fx, fy)];
                for m in src.hom(x, y) {
                    let im = self.apply_mor(m);
                    if (im.src, im.dst) != (fx, fy) || seen[im.index] {
                        return false;
                    }
                    seen[im.index] = true;
                }
            }
        }
        true
    }

    pub fn is_essentially_surjective(&self, src: &FinCategory, dst: &FinCategory) -> bool {
        dst.object_ids().all(|z| {
            src.object_ids().any(|y| dst.isomorphic(self.apply_obj(y), z))
        })
    }

    /// Preimage of `m` under the hom-wise action; defined when fully faithful.
    pub fn hom_preimage(&self, cat: &FinCategory, m: MorId, x: ObjId, y: ObjId) -> Option<MorId> {
        cat.hom(x, y).find(|&cand| self.apply_mor(cand) == m)
    }
}

/// Functoriality check per variance: identities, sources/destinations, and
/// the (anti)homomorphism law on every composable pair.
pub fn validate_functor(f: &FunctorData, src: &FinCategory, dst: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::new("functor");
    let n = src.object_count();
    if f.obj_map.len() != n || f.mor_map.len() != n {
        report.structural(format!(
            "functor tables sized {}/{} for a category with {} objects",
            f.obj_map.len(),
            f.mor_map.len(),
            n
        ));
        return report;
    }
    for &o in &f.obj_map {
        if o.0 >= dst.object_count() {
            report.structural(format!("object image {o} out of range"));
            return report;
        }
    }
    for x in src.object_ids() {
        for y in src.object_ids() {
            if f.mor_map[x.0][y.0].len() != src.hom_size(x, y) {
                report.structural(format!(
                    "morphism table for Hom({},{}) has wrong size",
                    src.object_label(x),
                    src.object_label(y)
                ));
                return report;
            }
        }
    }

    for x in src.object_ids() {
        for y in src.object_ids() {
            for m in src.hom(x, y) {
                let im = f.apply_mor(m);
                let (es, ed) = f.image_signature(m);
                if (im.src, im.dst) != (es, ed) {
                    report.structural(format!(
                        "image of {} has signature {}->{}, expected {}->{}",
                        src.mor_label(m),
                        im.src,
                        im.dst,
                        es,
                        ed
                    ));
                } else if im.index >= dst.hom_size(es, ed) {
                    report.structural(format!("image of {} out of range", src.mor_label(m)));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }

    for x in src.object_ids() {
        let id_im = f.apply_mor(src.identity(x));
        if !dst.is_identity(id_im) {
            report.axiom(
                "identity preservation",
                format!("F(id_{}) is not an identity", src.object_label(x)),
            );
        }
    }

    for &fm in &src.morphisms() {
        for gm in src.hom_iter_from(fm.dst) {
            let gf = src.compose(gm, fm).expect("composable");
            let lhs = f.apply_mor(gf);
            let rhs = match f.variance {
                Variance::Covariant => dst.compose(f.apply_mor(gm), f.apply_mor(fm)),
                Variance::Contravariant => dst.compose(f.apply_mor(fm), f.apply_mor(gm)),
            };
            match rhs {
                Ok(r) if r == lhs => {}
                _ => report.axiom(
                    "functoriality",
                    format!("F({} ∘ {})", src.mor_label(gm), src.mor_label(fm)),
                ),
            }
        }
    }
    report
}

/// An object-indexed family of morphisms between two parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatFamily {
    pub source: FunctorData,
    pub target: FunctorData,
    /// components[x] lies in Hom(source(x), target(x)).
    pub components: Vec<MorId>,
}

impl NatFamily {
    pub fn new(source: FunctorData, target: FunctorData, components: Vec<MorId>) -> Self {
        NatFamily { source, target, components }
    }

    pub fn at(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    /// Componentwise inverse; components must all be isomorphisms.
    pub fn inverted(&self, cat: &FinCategory) -> Result<NatFamily> {
        let components = self
            .components
            .iter()
            .map(|&c| {
                cat.inverse(c).ok_or_else(|| {
                    EngineError::Precondition(format!("component {c} is not invertible"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatFamily {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }
}

/// Naturality check; the contravariant case reverses the square. Reports the
/// first 10 violating morphisms.
pub fn check_naturality(family: &NatFamily, cat: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::new("natural family");
    if family.source.variance != family.target.variance {
        report.structural("source and target functors have different variance");
        return report;
    }
    if family.components.len() != cat.object_count() {
        report.structural("component count differs from object count");
        return report;
    }
    for x in cat.object_ids() {
        let c = family.at(x);
        let want_src = family.source.apply_obj(x);
        let want_dst = family.target.apply_obj(x);
        if (c.src, c.dst) != (want_src, want_dst) || c.index >= cat.hom_size(c.src, c.dst) {
            report.structural(format!(
                "component at {} has signature {}->{}, expected {}->{}",
                cat.object_label(x),
                c.src,
                c.dst,
                want_src,
                want_dst
            ));
        }
    }
    if !report.is_valid() {
        return report;
    }

    let mut shown = 0usize;
    for m in cat.morphisms() {
        let ok = match family.source.variance {
            // target(m) ∘ α_X = α_Y ∘ source(m) for m: X→Y
            Variance::Covariant => {
                let lhs = cat.compose(family.target.apply_mor(m), family.at(m.src));
                let rhs = cat.compose(family.at(m.dst), family.source.apply_mor(m));
                lhs.is_ok() && lhs == rhs
            }
            // α_X ∘ source(m) = target(m) ∘ α_Y for m: X→Y (images go Y→X)
            Variance::Contravariant => {
                let lhs = cat.compose(family.at(m.src), family.source.apply_mor(m));
                let rhs = cat.compose(family.target.apply_mor(m), family.at(m.dst));
                lhs.is_ok() && lhs == rhs
            }
        };
        if !ok {
            if shown < 10 {
                report.axiom("naturality", format!("square at {}", cat.mor_label(m)));
            }
            shown += 1;
        }
    }
    if shown > 10 {
        report.axiom("naturality", format!("... and {} more squares", shown - 10));
    }
    report
}

/// Complete list of natural isomorphisms F ≅ G, in lexicographic order of
/// component indices. Components are fixed object by object; a partial
/// assignment is abandoned as soon as any naturality square between already
/// fixed components fails.
pub fn enumerate_nat_isos(
    f: &FunctorData,
    g: &FunctorData,
    cat: &FinCategory,
) -> Result<Vec<NatFamily>> {
    if f.variance != g.variance {
        return Err(EngineError::Precondition(
            "functors of different variance".into(),
        ));
    }
    let n = cat.object_count();
    // Candidate components at each object: isomorphisms F(X) → G(X).
    let mut candidates: Vec<Vec<MorId>> = Vec::with_capacity(n);
    for x in cat.object_ids() {
        let fx = f.apply_obj(x);
        let gx = g.apply_obj(x);
        candidates.push(cat.hom(fx, gx).filter(|&m| cat.is_iso(m)).collect());
    }

    // Morphism squares to check once both endpoint components are fixed.
    // squares_at[k] = morphisms whose latest endpoint is object k.
    let mut squares_at: Vec<Vec<MorId>> = vec![Vec::new(); n];
    for m in cat.morphisms() {
        let hi = m.src.0.max(m.dst.0);
        squares_at[hi].push(m);
    }

    let square_ok = |picked: &[MorId], m: MorId| -> bool {
        match f.variance {
            Variance::Covariant => {
                let lhs = cat.compose(g.apply_mor(m), picked[m.src.0]);
                let rhs = cat.compose(picked[m.dst.0], f.apply_mor(m));
                lhs.is_ok() && lhs == rhs
            }
            Variance::Contravariant => {
                let lhs = cat.compose(picked[m.src.0], f.apply_mor(m));
                let rhs = cat.compose(g.apply_mor(m), picked[m.dst.0]);
                lhs.is_ok() && lhs == rhs
            }
        }
    };

    let mut out = Vec::new();
    let mut picked: Vec<MorId> = Vec::with_capacity(n);
    fn rec(
        k: usize,
        n: usize,
        candidates: &[Vec<MorId>],
        squares_at: &[Vec<MorId>],
        square_ok: &dyn Fn(&[MorId], MorId) -> bool,
        picked: &mut Vec<MorId>,
        out: &mut Vec<Vec<MorId>>,
    ) {
        if k == n {
            out.push(picked.clone());
            return;
        }
        for &c in &candidates[k] {
            picked.push(c);
            if squares_at[k].iter().all(|&m| square_ok(picked, m)) {
                rec(k + 1, n, candidates, squares_at, square_ok, picked, out);
            }
            picked.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, n, &candidates, &squares_at, &square_ok, &mut picked, &mut raw);
    for components in raw {
        out.push(NatFamily::new(f.clone(), g.clone(), components));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One object, one morphism.
    pub fn terminal() -> FinCategory {
        FinCategory::from_tables(
            "terminal",
            vec!["*".into()],
            vec![vec![vec!["id".into()]]],
            vec![vec![vec![vec![vec![0]]]]],
            vec![0],
        )
        .unwrap()
    }

    #[test]
    fn terminal_is_valid() {
        assert!(validate_category(&terminal()).is_valid());
    }

    #[test]
    fn identity_laws_via_compose() {
        let cat = terminal();
        let id = cat.identity(ObjId(0));
        assert_eq!(cat.compose(id, id).unwrap(), id);
    }

    #[test]
    fn opposite_of_terminal_is_terminal() {
        let cat = terminal();
        let op = cat.opposite();
        assert_eq!(op.objects, cat.objects);
        assert_eq!(op.hom_size(ObjId(0), ObjId(0)), 1);
    }

    #[test]
    fn identity_functor_is_valid_and_identity_family_natural() {
        let cat = terminal();
        let f = FunctorData::identity(&cat);
        assert!(validate_functor(&f, &cat, &cat).is_valid());
        let fam = NatFamily::new(f.clone(), f.clone(), vec![cat.identity(ObjId(0))]);
        assert!(check_naturality(&fam, &cat).is_valid());
    }

    #[test]
    fn terminal_has_exactly_one_nat_iso_id_to_id() {
        let cat = terminal();
        let f = FunctorData::identity(&cat);
        let isos = enumerate_nat_isos(&f, &f, &cat).unwrap();
        assert_eq!(isos.len(), 1);
    }

    #[test]
    fn non_composable_pair_is_an_error() {
        // Two objects, no cross morphisms.
        let cat = FinCategory::from_tables(
            "pair",
            vec!["a".into(), "b".into()],
            vec![
                vec![vec!["ida".into()], vec![]],
                vec![vec![], vec!["idb".into()]],
            ],
            vec![
                vec![
                    // src = a: mid = a (f: a→a), then mid = b (f: a→b, none)
                    vec![vec![vec![0]], vec![]],
                    vec![vec![], vec![vec![]]],
                ],
                vec![
                    vec![vec![vec![]], vec![]],
                    vec![vec![], vec![vec![0]]],
                ],
            ],
            vec![0, 0],
        )
        .unwrap();
        let ida = cat.identity(ObjId(0));
        let idb = cat.identity(ObjId(1));
        assert!(cat.compose(idb, ida).is_err());
    }
}
