//! The textual category description format, version 1.
//!
//! A file is a sequence of whitespace-separated token lines; `#` starts a
//! comment. Objects and morphisms are referred to by label; labels are
//! globally unique tokens. Sections:
//!
//! ```text
//! gvcat 1
//! category <name>
//! object <label>
//! hom <src> <dst> = <m1> <m2> ...
//! id <obj> <morphism>
//! compose <g> <f> = <h>          # h = g∘f
//! monoidal
//! unit <obj>
//! tensor <x> <y> = <z>
//! tensor_mor <f> <g> = <h>       # h = f⊗g
//! assoc <x> <y> <z> = <m>
//! lunit <x> = <m>
//! runit <x> = <m>
//! braiding
//! beta <x> <y> = <m>
//! gv
//! dualizing <obj>
//! dual <x> = <y>
//! dual_mor <f> = <g>
//! ev <y> = <m>
//! ```
//!
//! Parsing is two-pass and order-insensitive within each concern;
//! serialization always emits the canonical order above, so serializing a
//! parsed file canonicalizes whitespace, comments, and line order.

use crate::cat::{FinCategory, FunctorData, MorId, ObjId, Variance};
use crate::gv::GvData;
use crate::monoidal::{BraidingData, MonoidalData};
use crate::report::{EngineError, Result};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub const FORMAT_VERSION: u32 = 1;

/// Monoidal tables by index, without the category they sit over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalTables {
    pub unit: ObjId,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: Vec<Vec<MorId>>,
    pub assoc: Vec<Vec<Vec<MorId>>>,
    pub lunit: Vec<MorId>,
    pub runit: Vec<MorId>,
}

/// Duality tables by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvTables {
    pub k: ObjId,
    pub d_obj: Vec<ObjId>,
    pub d_mor: Vec<Vec<Vec<MorId>>>,
    pub ev: Vec<MorId>,
}

/// The full content of a category file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryFile {
    pub format_version: u32,
    pub category: FinCategory,
    pub monoidal: Option<MonoidalTables>,
    pub braiding: Option<Vec<Vec<MorId>>>,
    pub gv: Option<GvTables>,
}

impl CategoryFile {
    pub fn from_category(cat: &FinCategory) -> Self {
        CategoryFile {
            format_version: FORMAT_VERSION,
            category: cat.clone(),
            monoidal: None,
            braiding: None,
            gv: None,
        }
    }

    pub fn from_monoidal(m: &MonoidalData) -> Self {
        let mut cf = Self::from_category(&m.cat);
        cf.monoidal = Some(MonoidalTables {
            unit: m.unit,
            tensor_obj: m.tensor_obj.clone(),
            tensor_mor: m.tensor_mor.clone(),
            assoc: m.assoc.clone(),
            lunit: m.lunit.clone(),
            runit: m.runit.clone(),
        });
        cf
    }

    pub fn from_braided(b: &BraidingData) -> Self {
        let mut cf = Self::from_monoidal(&b.base);
        cf.braiding = Some(b.beta.clone());
        cf
    }

    pub fn with_gv(mut self, gv: &GvData) -> Self {
        self.gv = Some(GvTables {
            k: gv.k,
            d_obj: gv.d.obj_map.clone(),
            d_mor: gv.d.mor_map.clone(),
            ev: gv.ev.clone(),
        });
        self
    }

    pub fn to_monoidal(&self) -> Result<MonoidalData> {
        let t = self.monoidal.as_ref().ok_or_else(|| {
            EngineError::Precondition("file carries no monoidal block".into())
        })?;
        Ok(MonoidalData {
            cat: self.category.clone(),
            unit: t.unit,
            tensor_obj: t.tensor_obj.clone(),
            tensor_mor: t.tensor_mor.clone(),
            assoc: t.assoc.clone(),
            lunit: t.lunit.clone(),
            runit: t.runit.clone(),
        })
    }

    pub fn to_braided(&self) -> Result<BraidingData> {
        let beta = self.braiding.as_ref().ok_or_else(|| {
            EngineError::Precondition("file carries no braiding block".into())
        })?;
        Ok(BraidingData { base: self.to_monoidal()?, beta: beta.clone() })
    }

    pub fn to_gv(&self) -> Result<GvData> {
        let t = self.gv.as_ref().ok_or_else(|| {
            EngineError::Precondition("file carries no duality block".into())
        })?;
        Ok(GvData {
            m: self.to_monoidal()?,
            k: t.k,
            d: FunctorData {
                variance: Variance::Contravariant,
                obj_map: t.d_obj.clone(),
                mor_map: t.d_mor.clone(),
            },
            ev: t.ev.clone(),
        })
    }
}

/// A parse failure with its line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Tokens<'a> {
    line: usize,
    items: Vec<&'a str>,
}

fn fail<T>(line: usize, message: impl Into<String>) -> std::result::Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn tokenize(text: &str) -> Vec<Tokens<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let items: Vec<&str> = stripped.split_whitespace().collect();
            if items.is_empty() {
                None
            } else {
                Some(Tokens { line: i + 1, items })
            }
        })
        .collect()
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains(['#', '=']) && !s.chars().any(char::is_whitespace)
}

/// Parse a category file. Reference errors name the offending label and
/// line; missing table entries are reported with the table they belong to.
pub fn parse(text: &str) -> std::result::Result<CategoryFile, ParseError> {
    let lines = tokenize(text);
    if lines.is_empty() {
        return fail(0, "empty input");
    }
    let header = &lines[0];
    if header.items.len() != 2 || header.items[0] != "gvcat" {
        return fail(header.line, "expected header `gvcat <version>`");
    }
    let version: u32 = header.items[1]
        .parse()
        .map_err(|_| ParseError { line: header.line, message: "bad version number".into() })?;
    if version != FORMAT_VERSION {
        return fail(header.line, format!("unsupported format version {version}"));
    }

    let mut name = String::new();
    let mut objects: Vec<String> = Vec::new();
    let mut obj_index: BTreeMap<String, usize> = BTreeMap::new();

    // Pass 1: name and objects.
    for t in &lines[1..] {
        match t.items[0] {
            "category" => {
                if t.items.len() != 2 {
                    return fail(t.line, "expected `category <name>`");
                }
                name = t.items[1].to_string();
            }
            "object" => {
                if t.items.len() != 2 || !valid_label(t.items[1]) {
                    return fail(t.line, "expected `object <label>`");
                }
                if obj_index.contains_key(t.items[1]) {
                    return fail(t.line, format!("duplicate object label `{}`", t.items[1]));
                }
                obj_index.insert(t.items[1].to_string(), objects.len());
                objects.push(t.items[1].to_string());
            }
            _ => {}
        }
    }
    let n = objects.len();
    let obj = |tok: &str, line: usize| -> std::result::Result<ObjId, ParseError> {
        obj_index
            .get(tok)
            .map(|&i| ObjId(i))
            .ok_or_else(|| ParseError { line, message: format!("unknown object label `{tok}`") })
    };

    // Pass 2: hom-sets and the global morphism label map.
    let mut homs: Vec<Vec<Option<Vec<String>>>> = vec![vec![None; n]; n];
    let mut mor_index: BTreeMap<String, MorId> = BTreeMap::new();
    for t in &lines[1..] {
        if t.items[0] != "hom" {
            continue;
        }
        if t.items.len() < 4 || t.items[3] != "=" {
            return fail(t.line, "expected `hom <src> <dst> = <labels...>`");
        }
        let s = obj(t.items[1], t.line)?;
        let d = obj(t.items[2], t.line)?;
        if homs[s.0][d.0].is_some() {
            return fail(t.line, format!("duplicate hom declaration for {} {}", t.items[1], t.items[2]));
        }
        let labels: Vec<String> = t.items[4..].iter().map(|s| s.to_string()).collect();
        for (i, l) in labels.iter().enumerate() {
            if !valid_label(l) {
                return fail(t.line, format!("bad morphism label `{l}`"));
            }
            if mor_index.contains_key(l) {
                return fail(t.line, format!("duplicate morphism label `{l}`"));
            }
            mor_index.insert(l.clone(), MorId::new(s, d, i));
        }
        homs[s.0][d.0] = Some(labels);
    }
    let homs: Vec<Vec<Vec<String>>> = homs
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.unwrap_or_default()).collect())
        .collect();
    let mor = |tok: &str, line: usize| -> std::result::Result<MorId, ParseError> {
        mor_index
            .get(tok)
            .copied()
            .ok_or_else(|| ParseError { line, message: format!("unknown morphism label `{tok}`") })
    };

    // Pass 3: identities, composition, and the optional blocks.
    let mut ids: Vec<Option<usize>> = vec![None; n];
    let mut comp: Vec<Vec<Vec<Vec<Vec<Option<usize>>>>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|m| {
                    (0..n)
                        .map(|d| vec![vec![None; homs[x][m].len()]; homs[m][d].len()])
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut unit: Option<ObjId> = None;
    let mut tensor_obj: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    let mut saw_monoidal = false;
    let mut tensor_mor_entries: Vec<(usize, MorId, MorId, MorId)> = Vec::new();
    let mut assoc: Vec<Vec<Vec<Option<MorId>>>> = vec![vec![vec![None; n]; n]; n];
    let mut lunit: Vec<Option<MorId>> = vec![None; n];
    let mut runit: Vec<Option<MorId>> = vec![None; n];
    let mut saw_braiding = false;
    let mut beta: Vec<Vec<Option<MorId>>> = vec![vec![None; n]; n];
    let mut saw_gv = false;
    let mut dualizing: Option<ObjId> = None;
    let mut d_obj: Vec<Option<ObjId>> = vec![None; n];
    let mut d_mor_entries: Vec<(usize, MorId, MorId)> = Vec::new();
    let mut ev: Vec<Option<MorId>> = vec![None; n];

    for t in &lines[1..] {
        let line = t.line;
        match t.items[0] {
            "category" | "object" | "hom" => {}
            "id" => {
                if t.items.len() != 3 {
                    return fail(line, "expected `id <obj> <morphism>`");
                }
                let x = obj(t.items[1], line)?;
                let m = mor(t.items[2], line)?;
                if (m.src, m.dst) != (x, x) {
                    return fail(line, format!("identity of {} must be an endomorphism", t.items[1]));
                }
                ids[x.0] = Some(m.index);
            }
            "compose" => {
                if t.items.len() != 5 || t.items[3] != "=" {
                    return fail(line, "expected `compose <g> <f> = <h>`");
                }
                let g = mor(t.items[1], line)?;
                let f = mor(t.items[2], line)?;
                let h = mor(t.items[4], line)?;
                if f.dst != g.src {
                    return fail(line, format!("`{}` and `{}` are not composable", t.items[1], t.items[2]));
                }
                if (h.src, h.dst) != (f.src, g.dst) {
                    return fail(line, format!("composite `{}` has the wrong signature", t.items[4]));
                }
                let slot = &mut comp[f.src.0][f.dst.0][g.dst.0][g.index][f.index];
                if slot.is_some() {
                    return fail(line, "duplicate composition entry");
                }
                *slot = Some(h.index);
            }
            "monoidal" => saw_monoidal = true,
            "unit" => {
                if t.items.len() != 2 {
                    return fail(line, "expected `unit <obj>`");
                }
                unit = Some(obj(t.items[1], line)?);
            }
            "tensor" => {
                if t.items.len() != 5 || t.items[3] != "=" {
                    return fail(line, "expected `tensor <x> <y> = <z>`");
                }
                let x = obj(t.items[1], line)?;
                let y = obj(t.items[2], line)?;
                let z = obj(t.items[4], line)?;
                tensor_obj[x.0][y.0] = Some(z.0);
            }
            "tensor_mor" => {
                if t.items.len() != 5 || t.items[3] != "=" {
                    return fail(line, "expected `tensor_mor <f> <g> = <h>`");
                }
                let f = mor(t.items[1], line)?;
                let g = mor(t.items[2], line)?;
                let h = mor(t.items[4], line)?;
                tensor_mor_entries.push((line, f, g, h));
            }
            "assoc" => {
                if t.items.len() != 6 || t.items[4] != "=" {
                    return fail(line, "expected `assoc <x> <y> <z> = <m>`");
                }
                let x = obj(t.items[1], line)?;
                let y = obj(t.items[2], line)?;
                let z = obj(t.items[3], line)?;
                assoc[x.0][y.0][z.0] = Some(mor(t.items[5], line)?);
            }
            "lunit" => {
                if t.items.len() != 4 || t.items[2] != "=" {
                    return fail(line, "expected `lunit <x> = <m>`");
                }
                let x = obj(t.items[1], line)?;
                lunit[x.0] = Some(mor(t.items[3], line)?);
            }
            "runit" => {
                if t.items.len() != 4 || t.items[2] != "=" {
                    return fail(line, "expected `runit <x> = <m>`");
                }
                let x = obj(t.items[1], line)?;
                runit[x.0] = Some(mor(t.items[3], line)?);
            }
            "braiding" => saw_braiding = true,
            "beta" => {
                if t.items.len() != 5 || t.items[3] != "=" {
                    return fail(line, "expected `beta <x> <y> = <m>`");
                }
                let x = obj(t.items[1], line)?;
                let y = obj(t.items[2], line)?;
                beta[x.0][y.0] = Some(mor(t.items[4], line)?);
            }
            "gv" => saw_gv = true,
            "dualizing" => {
                if t.items.len() != 2 {
                    return fail(line, "expected `dualizing <obj>`");
                }
                dualizing = Some(obj(t.items[1], line)?);
            }
            "dual" => {
                if t.items.len() != 4 || t.items[2] != "=" {
                    return fail(line, "expected `dual <x> = <y>`");
                }
                let x = obj(t.items[1], line)?;
                d_obj[x.0] = Some(obj(t.items[3], line)?);
            }
            "dual_mor" => {
                if t.items.len() != 4 || t.items[2] != "=" {
                    return fail(line, "expected `dual_mor <f> = <g>`");
                }
                let f = mor(t.items[1], line)?;
                let g = mor(t.items[3], line)?;
                d_mor_entries.push((line, f, g));
            }
            "ev" => {
                if t.items.len() != 4 || t.items[2] != "=" {
                    return fail(line, "expected `ev <y> = <m>`");
                }
                let y = obj(t.items[1], line)?;
                ev[y.0] = Some(mor(t.items[3], line)?);
            }
            other => return fail(line, format!("unknown directive `{other}`")),
        }
    }

    // Assemble and check completeness.
    let mut ids_full = Vec::with_capacity(n);
    for x in 0..n {
        match ids[x] {
            Some(i) => ids_full.push(i),
            None => return fail(0, format!("missing identity for object `{}`", objects[x])),
        }
    }
    let mut comp_full = vec![vec![vec![Vec::new(); n]; n]; n];
    for x in 0..n {
        for m in 0..n {
            for d in 0..n {
                let table = &comp[x][m][d];
                let mut rows = Vec::with_capacity(table.len());
                for (gi, row) in table.iter().enumerate() {
                    let mut cells = Vec::with_capacity(row.len());
                    for (fi, cell) in row.iter().enumerate() {
                        match cell {
                            Some(v) => cells.push(*v),
                            None => {
                                return fail(
                                    0,
                                    format!(
                                        "missing composition `{}` ∘ `{}`",
                                        homs[m][d][gi], homs[x][m][fi]
                                    ),
                                )
                            }
                        }
                    }
                    rows.push(cells);
                }
                comp_full[x][m][d] = rows;
            }
        }
    }
    let category =
        FinCategory::from_tables(name, objects.clone(), homs.clone(), comp_full, ids_full)
            .map_err(|e| ParseError { line: 0, message: e.to_string() })?;

    let monoidal = if saw_monoidal {
        let unit = unit.ok_or_else(|| ParseError { line: 0, message: "monoidal block without `unit`".into() })?;
        let mut tob = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                tob[x][y] = tensor_obj[x][y].ok_or_else(|| ParseError {
                    line: 0,
                    message: format!("missing tensor `{}` `{}`", objects[x], objects[y]),
                })?;
            }
        }
        let morphisms = category.morphisms();
        let mut tmor =
            vec![vec![None; morphisms.len()]; morphisms.len()];
        for (line, f, g, h) in &tensor_mor_entries {
            let fi = category.mor_global_index(*f);
            let gi = category.mor_global_index(*g);
            if tmor[fi][gi].is_some() {
                return fail(*line, "duplicate tensor_mor entry");
            }
            tmor[fi][gi] = Some(*h);
        }
        let mut tmor_full = Vec::with_capacity(morphisms.len());
        for (fi, &f) in morphisms.iter().enumerate() {
            let mut row = Vec::with_capacity(morphisms.len());
            for (gi, &g) in morphisms.iter().enumerate() {
                row.push(tmor[fi][gi].ok_or_else(|| ParseError {
                    line: 0,
                    message: format!(
                        "missing tensor_mor `{}` `{}`",
                        category.mor_label(f),
                        category.mor_label(g)
                    ),
                })?);
            }
            tmor_full.push(row);
        }
        let mut assoc_full = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for y in 0..n {
                let mut row = Vec::with_capacity(n);
                for (z, slot) in assoc[x][y].iter().enumerate() {
                    row.push(slot.ok_or_else(|| ParseError {
                        line: 0,
                        message: format!(
                            "missing assoc `{}` `{}` `{}`",
                            objects[x], objects[y], objects[z]
                        ),
                    })?);
                }
                assoc_full[x][y] = row;
            }
        }
        let unwrap_units = |v: &[Option<MorId>], what: &str| -> std::result::Result<Vec<MorId>, ParseError> {
            v.iter()
                .enumerate()
                .map(|(x, slot)|ize_slot(slot, what, &objects[x]))
                .collect()
        };
        Some(MonoidalTables {
            unit,
            tensor_obj: tob,
            tensor_mor: tmor_full,
            assoc: assoc_full,
            lunit: unwrap_units(&lunit, "lunit")?,
            runit: unwrap_units(&runit, "runit")?,
        })
    } else {
        None
    };

    let braiding = if saw_braiding {
        let mut full = vec![Vec::new(); n];
        for (x, row) in beta.iter().enumerate() {
            let mut out_row = Vec::with_capacity(n);
            for (y, slot) in row.iter().enumerate() {
                out_row.push(slot.ok_or_else(|| ParseError {
                    line: 0,
                    message: format!("missing beta `{}` `{}`", objects[x], objects[y]),
                })?);
            }
            full[x] = out_row;
        }
        Some(full)
    } else {
        None
    };

    let gv = if saw_gv {
        let k = dualizing
            .ok_or_else(|| ParseError { line: 0, message: "gv block without `dualizing`".into() })?;
        let mut dob = Vec::with_capacity(n);
        for (x, slot) in d_obj.iter().enumerate() {
            dob.push(slot.ok_or_else(|| ParseError {
                line: 0,
                message: format!("missing dual `{}`", objects[x]),
            })?);
        }
        let mut dmor: Vec<Vec<Vec<Option<MorId>>>> = (0..n)
            .map(|x| (0..n).map(|y| vec![None; homs[x][y].len()]).collect())
            .collect();
        for (line, f, g) in &d_mor_entries {
            let slot = &mut dmor[f.src.0][f.dst.0][f.index];
            if slot.is_some() {
                return fail(*line, "duplicate dual_mor entry");
            }
            *slot = Some(*g);
        }
        let mut dmor_full = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for y in 0..n {
                let mut cells = Vec::with_capacity(homs[x][y].len());
                for (i, slot) in dmor[x][y].iter().enumerate() {
                    cells.push(slot.ok_or_else(|| ParseError {
                        line: 0,
                        message: format!("missing dual_mor `{}`", homs[x][y][i]),
                    })?);
                }
                dmor_full[x][y] = cells;
            }
        }
        let mut ev_full = Vec::with_capacity(n);
        for (y, slot) in ev.iter().enumerate() {
            ev_full.push(slot.ok_or_else(|| ParseError {
                line: 0,
                message: format!("missing ev `{}`", objects[y]),
            })?);
        }
        Some(GvTables { k, d_obj: dob, d_mor: dmor_full, ev: ev_full })
    } else {
        None
    };

    Ok(CategoryFile { format_version: version, category, monoidal, braiding, gv })
}

fn ize_slot(
    slot: &Option<MorId>,
    what: &str,
    obj: &str,
) -> std::result::Result<MorId, ParseError> {
    slot.ok_or_else(|| ParseError { line: 0, message: format!("missing {what} `{obj}`") })
}

/// Serialize in canonical order with canonical whitespace.
pub fn serialize(cf: &CategoryFile) -> String {
    let cat = &cf.category;
    let mut out = String::new();
    let _ = writeln!(out, "gvcat {}", cf.format_version);
    let _ = writeln!(out, "category {}", cat.name);
    for x in cat.object_ids() {
        let _ = writeln!(out, "object {}", cat.object_label(x));
    }
    for s in cat.object_ids() {
        for d in cat.object_ids() {
            let mut line = format!("hom {} {} =", cat.object_label(s), cat.object_label(d));
            for l in cat.hom_labels(s, d) {
                line.push(' ');
                line.push_str(l);
            }
            out.push_str(&line);
            out.push('\n');
        }
    }
    for x in cat.object_ids() {
        let _ = writeln!(out, "id {} {}", cat.object_label(x), cat.mor_label(cat.identity(x)));
    }
    for f in cat.morphisms() {
        for d in cat.object_ids() {
            for g in cat.hom(f.dst, d) {
                let h = cat.compose(g, f).expect("composable");
                let _ = writeln!(
                    out,
                    "compose {} {} = {}",
                    cat.mor_label(g),
                    cat.mor_label(f),
                    cat.mor_label(h)
                );
            }
        }
    }
    if let Some(t) = &cf.monoidal {
        out.push_str("monoidal\n");
        let _ = writeln!(out, "unit {}", cat.object_label(t.unit));
        for x in cat.object_ids() {
            for y in cat.object_ids() {
                let _ = writeln!(
                    out,
                    "tensor {} {} = {}",
                    cat.object_label(x),
                    cat.object_label(y),
                    cat.object_label(ObjId(t.tensor_obj[x.0][y.0]))
                );
            }
        }
        let morphisms = cat.morphisms();
        for (fi, &f) in morphisms.iter().enumerate() {
            for (gi, &g) in morphisms.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "tensor_mor {} {} = {}",
                    cat.mor_label(f),
                    cat.mor_label(g),
                    cat.mor_label(t.tensor_mor[fi][gi])
                );
            }
        }
        for x in cat.object_ids() {
            for y in cat.object_ids() {
                for z in cat.object_ids() {
                    let _ = writeln!(
                        out,
                        "assoc {} {} {} = {}",
                        cat.object_label(x),
                        cat.object_label(y),
                        cat.object_label(z),
                        cat.mor_label(t.assoc[x.0][y.0][z.0])
                    );
                }
            }
        }
        for x in cat.object_ids() {
            let _ = writeln!(out, "lunit {} = {}", cat.object_label(x), cat.mor_label(t.lunit[x.0]));
        }
        for x in cat.object_ids() {
            let _ = writeln!(out, "runit {} = {}", cat.object_label(x), cat.mor_label(t.runit[x.0]));
        }
    }
    if let Some(beta) = &cf.braiding {
        out.push_str("braiding\n");
        for x in cat.object_ids() {
            for y in cat.object_ids() {
                let _ = writeln!(
                    out,
                    "beta {} {} = {}",
                    cat.object_label(x),
                    cat.object_label(y),
                    cat.mor_label(beta[x.0][y.0])
                );
            }
        }
    }
    if let Some(t) = &cf.gv {
        out.push_str("gv\n");
        let _ = writeln!(out, "dualizing {}", cat.object_label(t.k));
        for x in cat.object_ids() {
            let _ = writeln!(
                out,
                "dual {} = {}",
                cat.object_label(x),
                cat.object_label(t.d_obj[x.0])
            );
        }
        for s in cat.object_ids() {
            for d in cat.object_ids() {
                for (i, img) in t.d_mor[s.0][d.0].iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "dual_mor {} = {}",
                        cat.hom_labels(s, d)[i],
                        cat.mor_label(*img)
                    );
                }
            }
        }
        for y in cat.object_ids() {
            let _ = writeln!(out, "ev {} = {}", cat.object_label(y), cat.mor_label(t.ev[y.0]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{build_graded_lines, build_three_object_gv, build_trivial};

    #[test]
    fn round_trip_through_text_is_exact() {
        for cf in [
            CategoryFile::from_monoidal(&build_trivial()),
            CategoryFile::from_monoidal(&build_three_object_gv(5)),
            CategoryFile::from_braided(&build_graded_lines(2)),
        ] {
            let text = serialize(&cf);
            let parsed = parse(&text).expect("canonical text parses");
            assert_eq!(parsed, cf);
            assert_eq!(serialize(&parsed), text);
        }
    }

    #[test]
    fn undefined_morphism_label_is_reported_with_line() {
        let text = "gvcat 1\ncategory t\nobject a\nhom a a = ida\nid a ida\ncompose ida nope = ida\n";
        let err = parse(text).unwrap_err();
        assert_eq!(err.line, 6);
        assert!(err.message.contains("nope"));
    }

    #[test]
    fn empty_category_is_valid() {
        let text = "gvcat 1\ncategory empty\n";
        let cf = parse(text).expect("empty category parses");
        assert_eq!(cf.category.object_count(), 0);
    }

    #[test]
    fn gv_block_round_trips() {
        let m = build_three_object_gv(5);
        let gv = crate::gv::find_dualizing(&m).into_iter().next().unwrap();
        let cf = CategoryFile::from_monoidal(&m).with_gv(&gv);
        let text = serialize(&cf);
        let parsed = parse(&text).unwrap();
        let gv2 = parsed.to_gv().unwrap();
        assert_eq!(gv2, gv);
    }
}
