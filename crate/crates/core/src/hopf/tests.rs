use super::*;
use crate::exact::{Echelon, SVec, Scalar};

fn all_builtins() -> Vec<HopfAlgebra> {
    ["group:Z2", "group:Z3", "group:Z4", "group:S3", "sweedler", "taft:3", "taft:4"]
        .iter()
        .map(|n| builtin(n).unwrap())
        .collect()
}

fn idx(h: &HopfAlgebra, label: &str) -> usize {
    h.basis.iter().position(|b| b == label).unwrap()
}

#[test]
fn builtins_satisfy_axioms() {
    for h in all_builtins() {
        h.check_axioms().unwrap_or_else(|e| panic!("{}: {e}", h.name));
        h.dual()
            .check_axioms()
            .unwrap_or_else(|e| panic!("dual of {}: {e}", h.name));
    }
    let z12 = cyclic_group(12).unwrap();
    z12.check_axioms().unwrap();
}

#[test]
fn broken_structure_is_reported() {
    let h = builtin("sweedler").unwrap();
    let mut j = h.to_json();
    // flip the sign of S(y)
    let y = idx(&h, "y");
    for row in j.antipode.iter_mut() {
        if let Coef::Int(v) = &mut row[y] {
            *v = -*v;
        }
    }
    let bad = HopfAlgebra::from_json(&j).unwrap();
    assert!(matches!(bad.check_axioms(), Err(HopfError::Axiom(_))));
    assert!(group_algebra("bad", &[vec![0, 0], vec![1, 1]], vec!["a".into(), "b".into()], h.field.clone()).is_err());
}

#[test]
fn group_algebra_antipodes() {
    let z2 = builtin("group:Z2").unwrap();
    assert!(z2.antipode_matrix().is_identity());
    let s3 = builtin("group:S3").unwrap();
    let s = s3.antipode_matrix();
    assert!(s.mul(s).is_identity());
    assert!(!s.is_identity());
}

#[test]
fn sweedler_antipode() {
    let h = builtin("sweedler").unwrap();
    let (y, hh, yh) = (idx(&h, "y"), idx(&h, "h"), idx(&h, "yh"));
    let sy = h.antipode(&SVec::unit(y));
    assert_eq!(sy, SVec::unit(yh).scale(&Scalar::from_int(-1)));
    assert_eq!(sy, h.mul(&SVec::unit(hh), &SVec::unit(y)));
    let s2y = h.antipode(&sy);
    assert_eq!(s2y, SVec::unit(y).scale(&Scalar::from_int(-1)));
    assert_eq!(h.antipode(&h.antipode(&SVec::unit(hh))), SVec::unit(hh));
}

#[test]
fn taft3_antipode_order_six() {
    let h = builtin("taft:3").unwrap();
    let s = h.antipode_matrix().to_dense();
    assert_eq!(s.pow(6), crate::exact::Matrix::identity(9));
    assert_ne!(s.pow(2), crate::exact::Matrix::identity(9));
    assert_ne!(s.pow(3), crate::exact::Matrix::identity(9));
}

/// Oracle: characters of kZ_n are determined by χ(g), an n-th root of unity.
#[test]
fn cyclic_characters_match_enumeration() {
    for n in [2usize, 3, 4, 6] {
        let h = cyclic_group(n).unwrap();
        let chars = characters(&h);
        assert_eq!(chars.len(), n, "Z{n}");
        let mut expected: Vec<Vec<Scalar>> = (0..n)
            .map(|k| (0..n).map(|j| Scalar::zeta_pow(n as u32, (j * k) as i64)).collect())
            .collect();
        for c in &chars {
            let pos = expected.iter().position(|e| *e == c.values).expect("unexpected character");
            expected.remove(pos);
        }
        assert!(chars[0].is_counit(&h));
    }
}

#[test]
fn group_likes_of_group_algebras_are_group_elements() {
    for name in ["group:Z2", "group:Z4", "group:S3"] {
        let h = builtin(name).unwrap();
        let g = group_likes(&h);
        assert_eq!(g.len(), h.dim());
        assert!(g[0].is_one(&h));
        for x in &g {
            assert_eq!(x.element.nnz(), 1);
        }
    }
    let s3 = builtin("group:S3").unwrap();
    let chars = characters(&s3);
    assert_eq!(chars.len(), 2);
    assert_eq!(chars[1].values[idx(&s3, "(12)")], Scalar::from_int(-1));
}

#[test]
fn taft_group_likes_and_characters() {
    let h = builtin("sweedler").unwrap();
    let g = group_likes(&h);
    assert_eq!(g.len(), 2);
    assert_eq!(g[1].element, SVec::unit(idx(&h, "h")));
    let chars = characters(&h);
    assert_eq!(chars.len(), 2);
    let alpha = &chars[1];
    assert_eq!(alpha.values[idx(&h, "h")], Scalar::from_int(-1));
    assert!(alpha.values[idx(&h, "y")].is_zero());

    let t3 = builtin("taft:3").unwrap();
    let g3 = group_likes(&t3);
    assert_eq!(g3.len(), 3);
    // oracle: Δ(h^j) = h^j ⊗ h^j and ε(h^j) = 1 by direct computation
    for j in ["1", "h", "h^2"] {
        let x = SVec::unit(idx(&t3, j));
        let n = t3.dim();
        let xx = SVec::from_pairs(x.iter().flat_map(|(a, u)| x.iter().map(move |(b, v)| (a * n + b, u * v))));
        assert_eq!(t3.comul(&x), xx);
        assert!(g3.iter().any(|g| g.element == x));
    }
    assert_eq!(characters(&t3).len(), 3);
}

#[test]
fn characters_form_a_group() {
    for h in all_builtins() {
        let chars = characters(&h);
        let eps = Character::counit(&h);
        for c in &chars {
            assert_eq!(c.inverse(&h).convolve(c, &h), eps, "{}", h.name);
            assert_eq!(c.convolve(&c.inverse(&h), &h), eps);
        }
        // group-likes are linearly independent and invertible with inverse S(g)
        let gl = group_likes(&h);
        let e = Echelon::from_vectors(h.dim(), gl.iter().map(|g| &g.element));
        assert_eq!(e.rank(), gl.len());
        for g in &gl {
            assert_eq!(h.mul(&g.element, &g.inverse(&h).element), *h.one());
        }
    }
}

#[test]
fn integrals() {
    let z2 = builtin("group:Z2").unwrap();
    let d = distinguished(&z2).unwrap();
    assert_eq!(d.integral.nnz(), 2);
    assert!(d.alpha.is_counit(&z2));
    assert!(d.a.is_one(&z2));
    assert!(is_semisimple(&z2).unwrap());

    let sw = builtin("sweedler").unwrap();
    assert_eq!(left_integrals(&sw).len(), 1);
    let d = distinguished(&sw).unwrap();
    assert_eq!(d.alpha.values[idx(&sw, "h")], Scalar::from_int(-1));
    for i in 0..sw.dim() {
        let x = SVec::unit(i);
        assert_eq!(sw.mul(&x, &d.integral), d.integral.scale(sw.counit_basis(i)));
        assert_eq!(sw.mul(&d.integral, &x), d.integral.scale(&d.alpha.values[i]));
    }
    assert_eq!(d.a.element, SVec::unit(idx(&sw, "h")));
    assert!(!is_semisimple(&sw).unwrap());
    assert!(!is_cosemisimple(&sw).unwrap());
}

#[test]
fn s4_formula() {
    for h in all_builtins() {
        assert!(check_s4(&h).unwrap(), "{}", h.name);
    }
}

#[test]
fn sweedler_pairs() {
    let h = builtin("sweedler").unwrap();
    let pairs = pairs_in_involution(&h);
    assert_eq!(pairs.len(), 2);
    let hh = SVec::unit(idx(&h, "h"));
    let one = h.one().clone();
    let has = |p: &SVec, counit: bool| {
        pairs
            .iter()
            .any(|x| x.p.element == *p && x.chi.is_counit(&h) == counit && x.modular)
    };
    assert!(has(&hh, true));
    assert!(has(&one, false));
}

#[test]
fn group_pairs_are_central_elements() {
    let z2 = builtin("group:Z2").unwrap();
    let pairs = pairs_in_involution(&z2);
    assert_eq!(pairs.len(), 4);
    let nonmodular: Vec<_> = pairs.iter().filter(|p| !p.modular).collect();
    assert_eq!(nonmodular.len(), 1);
    // χ(p) = −1 has no square root in Q
    assert!(nonmodular[0].zeta.is_none());
    assert!(nonmodular[0].diagnostic().is_some());

    let s3 = builtin("group:S3").unwrap();
    let pairs = pairs_in_involution(&s3);
    assert_eq!(pairs.len(), 2);
    assert!(pairs.iter().all(|p| p.p.is_one(&s3)));

    let z4 = builtin("group:Z4").unwrap();
    let pairs = pairs_in_involution(&z4);
    assert_eq!(pairs.len(), 16);
    // χ(p) = ±i has no square root in Q(i); that happens when both exponents are odd
    assert_eq!(pairs.iter().filter(|p| p.zeta.is_none()).count(), 4);
    for p in pairs.iter().filter(|p| p.zeta.is_some()) {
        let z = p.zeta.clone().unwrap();
        assert_eq!(&z * &z, p.chi.eval(&p.p.element));
    }
}

#[test]
fn ad_is_an_automorphism_for_pairs() {
    for h in all_builtins() {
        for p in pairs_in_involution(&h) {
            assert!(ad_is_hopf_automorphism(&h, &p.p, &p.chi), "{}", h.name);
        }
    }
}

#[test]
fn duals() {
    let s3 = builtin("group:S3").unwrap();
    let d = s3.dual();
    let n = d.dim();
    let mut commutative = true;
    let mut cocommutative = true;
    for i in 0..n {
        for j in 0..n {
            commutative &= d.mul_basis(i, j) == d.mul_basis(j, i);
        }
        let c = d.comul(&SVec::unit(i));
        let flipped = SVec::from_pairs(c.iter().map(|(p, v)| ((p % n) * n + p / n, v.clone())));
        cocommutative &= c == flipped;
    }
    assert!(commutative && !cocommutative);
    let z2 = builtin("group:Z2").unwrap();
    assert_eq!(characters(&z2.dual()).len(), 2);
    assert_eq!(group_likes(&z2.dual()).len(), 2);
    let sw = builtin("sweedler").unwrap();
    assert_eq!(group_likes(&sw.dual()).len(), 2);
    // double dual has the original structure constants
    let dd = sw.dual().dual();
    for i in 0..sw.dim() {
        for j in 0..sw.dim() {
            assert_eq!(dd.mul_basis(i, j), sw.mul_basis(i, j));
        }
    }
}

#[test]
fn json_round_trip() {
    for h in all_builtins() {
        let text = serde_json::to_string(&h.to_json()).unwrap();
        let back = HopfAlgebra::parse_json(&text).unwrap();
        back.check_axioms().unwrap();
        assert_eq!(back.antipode_matrix(), h.antipode_matrix());
        for i in 0..h.dim() {
            assert_eq!(back.comul_basis(i), h.comul_basis(i));
        }
    }
    // the unit can be omitted
    let mut j = builtin("group:Z3").unwrap().to_json();
    j.unit = None;
    let h = HopfAlgebra::from_json(&j).unwrap();
    assert_eq!(*h.one(), SVec::unit(0));
    assert!(builtin("group:Q8").is_err());
    assert!(taft_algebra(1).is_err());
}
