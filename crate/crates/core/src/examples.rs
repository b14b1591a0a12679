//! Deterministic builders for the bundled desk-scale categories.
//!
//! Two invocations of any builder produce identical tables, entry for entry,
//! so golden files and cross-run comparisons are exact.

use crate::cat::{FinCategory, MorId, ObjId};
use crate::monoidal::{BraidingData, MonoidalData};

/// One object, one morphism, trivial tensor.
pub fn build_trivial() -> MonoidalData {
    let cat = FinCategory::from_fn(
        "trivial",
        vec!["*".into()],
        |_, _| vec!["id".into()],
        |_, _| 0,
        |_| 0,
    )
    .expect("trivial category tables");
    let tensor_mor = MonoidalData::build_tensor_mor(&cat, |_, _| MorId::new(ObjId(0), ObjId(0), 0));
    MonoidalData {
        unit: ObjId(0),
        tensor_obj: vec![vec![0]],
        tensor_mor,
        assoc: vec![vec![vec![cat.identity(ObjId(0))]]],
        lunit: vec![cat.identity(ObjId(0))],
        runit: vec![cat.identity(ObjId(0))],
        cat,
    }
}

/// The terminal category with its only (identity) braiding.
pub fn build_trivial_braiding() -> BraidingData {
    let base = build_trivial();
    let beta = vec![vec![base.cat.identity(ObjId(0))]];
    BraidingData { base, beta }
}

const E1_ZERO: usize = 0;
const E1_UNIT: usize = 1;
const E1_K: usize = 2;

fn e1_scalar_value(x: ObjId, y: ObjId, index: usize) -> u64 {
    // Endomorphisms of unit and K carry their index as a scalar; every
    // other morphism is zero-valued.
    if x == y && (x.0 == E1_UNIT || x.0 == E1_K) {
        index as u64
    } else {
        0
    }
}

/// The three-object category with objects 0, 𝟙, K over ℤ/n: scalars on 𝟙
/// and K, zero morphisms everywhere else, K⊗K = 0, tensor of morphisms
/// given by multiplication mod n. Known in the literature as the minimal
/// example of a dualizing object that is not the unit.
pub fn build_three_object_gv(n: u64) -> MonoidalData {
    assert!(n >= 2, "modulus must be at least 2");
    let objects = vec!["zero".to_string(), "unit".to_string(), "K".to_string()];
    let hom_labels = |s: ObjId, d: ObjId| -> Vec<String> {
        if s == d && s.0 == E1_UNIT {
            (0..n).map(|v| format!("u{v}")).collect()
        } else if s == d && s.0 == E1_K {
            (0..n).map(|v| format!("k{v}")).collect()
        } else if s == d {
            vec!["z".to_string()]
        } else {
            let tag = |o: usize| ["0", "u", "K"][o];
            vec![format!("z_{}{}", tag(s.0), tag(d.0))]
        }
    };
    let compose = |g: MorId, f: MorId| -> usize {
        // Scalars multiply; any path with a zero-valued leg is zero.
        let gv = e1_scalar_value(g.src, g.dst, g.index);
        let fv = e1_scalar_value(f.src, f.dst, f.index);
        let is_scalar_hom =
            f.src == g.dst && (f.src.0 == E1_UNIT || f.src.0 == E1_K) && f.src == f.dst;
        if is_scalar_hom {
            ((gv * fv) % n) as usize
        } else {
            0
        }
    };
    let cat = FinCategory::from_fn("three-object-gv", objects, hom_labels, compose, |x| {
        if x.0 == E1_UNIT || x.0 == E1_K {
            1
        } else {
            0
        }
    })
    .expect("three-object tables");

    let tensor_obj_fn = |x: usize, y: usize| -> usize {
        match (x, y) {
            (E1_ZERO, _) | (_, E1_ZERO) => E1_ZERO,
            (E1_UNIT, o) | (o, E1_UNIT) => o,
            (E1_K, E1_K) => E1_ZERO,
            _ => unreachable!(),
        }
    };
    let tensor_obj: Vec<Vec<usize>> =
        (0..3).map(|x| (0..3).map(|y| tensor_obj_fn(x, y)).collect()).collect();

    let tensor_mor = MonoidalData::build_tensor_mor(&cat, |f, g| {
        let src = ObjId(tensor_obj_fn(f.src.0, g.src.0));
        let dst = ObjId(tensor_obj_fn(f.dst.0, g.dst.0));
        let value =
            e1_scalar_value(f.src, f.dst, f.index) * e1_scalar_value(g.src, g.dst, g.index);
        let index = if src == dst && (src.0 == E1_UNIT || src.0 == E1_K) {
            (value % n) as usize
        } else {
            0
        };
        MorId::new(src, dst, index)
    });

    let assoc = (0..3)
        .map(|x| {
            (0..3)
                .map(|y| {
                    (0..3)
                        .map(|z| {
                            let o = tensor_obj_fn(tensor_obj_fn(x, y), z);
                            cat.identity(ObjId(o))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let lunit = (0..3).map(|x| cat.identity(ObjId(x))).collect();
    let runit = (0..3).map(|x| cat.identity(ObjId(x))).collect();

    MonoidalData {
        unit: ObjId(E1_UNIT),
        tensor_obj,
        tensor_mor,
        assoc,
        lunit,
        runit,
        cat,
    }
}

/// Skeletal category of ℤ/2-graded lines over ℤ/3: objects are the group
/// elements, endomorphism sets are ℤ/3 under multiplication, tensor is
/// group addition, and the braiding is the bicharacter with β_{1,1} = sign.
/// `sign` is taken mod 3 and must be a unit (1 or 2 ≡ −1).
pub fn build_graded_lines(sign: u64) -> BraidingData {
    let modulus = 3u64;
    let sign = sign % modulus;
    assert!(sign == 1 || sign == 2, "sign must be ±1 mod 3");
    let objects = vec!["g0".to_string(), "g1".to_string()];
    let hom_labels = |s: ObjId, d: ObjId| -> Vec<String> {
        if s == d {
            (0..modulus).map(|v| format!("s{}_{v}", s.0)).collect()
        } else {
            vec![format!("z{}{}", s.0, d.0)]
        }
    };
    let value = |m: MorId| -> u64 {
        if m.src == m.dst {
            m.index as u64
        } else {
            0
        }
    };
    let compose = |g: MorId, f: MorId| -> usize {
        if f.src == g.dst {
            ((value(g) * value(f)) % modulus) as usize
        } else {
            0
        }
    };
    let cat = FinCategory::from_fn("graded-lines", objects, hom_labels, compose, |_| 1)
        .expect("graded-lines tables");

    let tensor_obj_fn = |x: usize, y: usize| (x + y) % 2;
    let tensor_obj: Vec<Vec<usize>> =
        (0..2).map(|x| (0..2).map(|y| tensor_obj_fn(x, y)).collect()).collect();
    let tensor_mor = MonoidalData::build_tensor_mor(&cat, |f, g| {
        let src = ObjId(tensor_obj_fn(f.src.0, g.src.0));
        let dst = ObjId(tensor_obj_fn(f.dst.0, g.dst.0));
        let index = if src == dst {
            ((value(f) * value(g)) % modulus) as usize
        } else {
            0
        };
        MorId::new(src, dst, index)
    });
    let assoc = (0..2)
        .map(|x| {
            (0..2)
                .map(|y| {
                    (0..2)
                        .map(|z| cat.identity(ObjId((x + y + z) % 2)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let lunit = (0..2).map(|x| cat.identity(ObjId(x))).collect();
    let runit = (0..2).map(|x| cat.identity(ObjId(x))).collect();
    let base = MonoidalData {
        unit: ObjId(0),
        tensor_obj,
        tensor_mor,
        assoc,
        lunit,
        runit,
        cat,
    };

    let beta = (0..2)
        .map(|x| {
            (0..2)
                .map(|y| {
                    let v = if x == 1 && y == 1 { sign } else { 1 };
                    MorId::new(ObjId((x + y) % 2), ObjId((x + y) % 2), v as usize)
                })
                .collect()
        })
        .collect();
    BraidingData { base, beta }
}

/// The bundled extension specimen: the three-object category over ℤ/5
/// embedded into a four-object category whose unit is dualizing, via the
/// self-dual morphism f = 0. This is the stock example of a non-rigid
/// category whose unit is dualizing.
pub fn build_extension_specimen() -> crate::extension::ExtensionData {
    let m = build_three_object_gv(5);
    let gv = crate::gv::find_dualizing(&m)
        .into_iter()
        .next()
        .expect("three-object category has a dualizing object");
    let f_zero = MorId::new(ObjId(E1_K), ObjId(E1_UNIT), 0);
    crate::extension::monoidal_extension(&gv, f_zero).expect("extension with f = 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::validate_category;
    use crate::monoidal::{validate_braiding, validate_monoidal};

    #[test]
    fn trivial_passes_validators() {
        let m = build_trivial();
        assert!(validate_category(&m.cat).is_valid());
        assert!(validate_monoidal(&m).is_valid());
    }

    #[test]
    fn three_object_category_is_valid() {
        let m = build_three_object_gv(5);
        assert!(validate_category(&m.cat).is_valid());
        assert!(validate_monoidal(&m).is_valid());
    }

    #[test]
    fn three_object_scalar_composition_is_modular() {
        // 2 ∘ 3 = 6 ≡ 1 mod 5 on the unit object.
        let m = build_three_object_gv(5);
        let u = ObjId(E1_UNIT);
        let two = MorId::new(u, u, 2);
        let three = MorId::new(u, u, 3);
        assert_eq!(m.cat.compose(two, three).unwrap(), MorId::new(u, u, 1));
    }

    #[test]
    fn three_object_tensor_of_k_identities_is_zero_identity() {
        let m = build_three_object_gv(5);
        let id_k = m.cat.identity(ObjId(E1_K));
        let t = m.tensor_mor(id_k, id_k);
        assert_eq!(t, m.cat.identity(ObjId(E1_ZERO)));
    }

    #[test]
    fn graded_lines_valid_for_both_signs() {
        for sign in [1, 2] {
            let b = build_graded_lines(sign);
            assert!(validate_category(&b.base.cat).is_valid());
            assert!(validate_monoidal(&b.base).is_valid());
            let br = validate_braiding(&b);
            assert!(br.report.is_valid(), "{}", br.report);
            assert!(br.symmetric, "sign braiding squares to identity");
        }
    }

    #[test]
    fn graded_lines_tensor_multiplies_scalars() {
        let b = build_graded_lines(2);
        let m = &b.base;
        let a = MorId::new(ObjId(0), ObjId(0), 2);
        let c = MorId::new(ObjId(1), ObjId(1), 2);
        // 2·2 = 4 ≡ 1 mod 3 on object 0+1 = 1.
        assert_eq!(m.tensor_mor(a, c), MorId::new(ObjId(1), ObjId(1), 1));
    }

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(build_three_object_gv(5), build_three_object_gv(5));
        assert_eq!(build_graded_lines(2), build_graded_lines(2));
    }

    #[test]
    fn double_opposite_is_identity() {
        for cat in [
            build_trivial().cat,
            build_three_object_gv(5).cat,
            build_graded_lines(2).base.cat,
        ] {
            assert_eq!(cat.opposite().opposite(), cat);
        }
    }

    #[test]
    fn opposite_transposes_homs() {
        let m = build_three_object_gv(5);
        let op = m.cat.opposite();
        assert_eq!(op.hom_size(ObjId(E1_UNIT), ObjId(E1_K)), 1);
        assert_eq!(op.hom_size(ObjId(E1_K), ObjId(E1_K)), 5);
        assert!(validate_category(&op).is_valid());
    }
}
