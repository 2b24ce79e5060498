use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exact::{SVec, Scalar, SparseMat};
use crate::graphs::{apply_slide, reduce_to_standard, scramble, standard_graph, valid_slides, Move, Permutation};
use crate::hopf::{builtin, pairs_in_involution, HopfAlgebra, PairInInvolution};
use crate::reps::induced_bimodule;

fn pair_where(h: &HopfAlgebra, p_label: &str, counit: bool) -> PairInInvolution {
    let p = h.basis.iter().position(|b| b == p_label).unwrap();
    pairs_in_involution(h)
        .into_iter()
        .find(|x| x.p.element == SVec::unit(p) && x.chi.is_counit(h) == counit)
        .unwrap()
}

fn space_for(name: &str, pair: impl Fn(&HopfAlgebra) -> PairInInvolution, g: u32, a: u32) -> ExtendedSpace {
    let h = builtin(name).unwrap();
    let m = induced_bimodule(&h, &pair(&h)).unwrap();
    ExtendedSpace::new(standard_graph(g, a).unwrap(), Rc::new(h), Rc::new(m)).unwrap()
}

fn sweedler(g: u32, a: u32) -> ExtendedSpace {
    space_for("sweedler", |h| pair_where(h, "h", true), g, a)
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> SVec {
    SVec::from_pairs((0..n).map(|i| (i, Scalar::from_int(rng.gen_range(-2..3)))))
}

#[test]
fn legs_follow_the_sources() {
    let s = sweedler(1, 1);
    assert_eq!(s.edge_order(), &[1, 3, 5, 7]);
    assert_eq!(s.total_dim(), 256);
    assert_eq!(s.leg_of(6).unwrap(), 2);
    assert_eq!(s.leg_of(9), Err(LatticeError::NotAHalfEdge(9)));
    assert_eq!(s.index_of(&s.digits(201)), 201);
    assert_eq!(s.digits(1), vec![0, 0, 0, 1]);
}

#[test]
fn unit_and_counit_act_trivially() {
    let s = sweedler(1, 0);
    let h = s.hopf();
    let eps = SVec::from_pairs((0..h.dim()).map(|k| (k, h.counit_basis(k).clone())));
    for x in s.graph().half_edges() {
        assert!(s.l_operator(x, h.one()).unwrap().is_identity());
        assert!(s.t_operator(x, &eps).unwrap().is_identity());
    }
    assert!(s.vertex_action(1, h.one()).unwrap().is_identity());
    assert!(matches!(s.vertex_action(2, h.one()), Err(LatticeError::NotACilium(2))));
}

#[test]
fn grouplike_on_a_source_is_a_signed_permutation() {
    // with χ = ε the right action is right multiplication, and S(h) = h
    let s = sweedler(1, 0);
    let h = s.hopf();
    let g = SVec::unit(h.basis.iter().position(|b| b == "h").unwrap());
    let op = s.l_operator(1, &g).unwrap();
    let expected = SparseMat::from_fn(16, 16, |i| {
        let (x, y) = (i / 4, i % 4);
        h.mul(&SVec::unit(x), &g).iter().map(|(z, c)| (z * 4 + y, c.clone())).collect::<Vec<_>>().into_iter().collect::<SVecPairs>().0
    });
    assert_eq!(op, expected);
    for col in op.columns() {
        assert_eq!(col.nnz(), 1);
        let v = &col.iter().next().unwrap().1;
        assert!(v.is_one() || (-v.clone()).is_one());
    }
}

struct SVecPairs(SVec);

impl FromIterator<(usize, Scalar)> for SVecPairs {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        SVecPairs(SVec::from_pairs(iter))
    }
}

#[test]
fn operators_are_algebra_maps() {
    let s = sweedler(1, 1);
    let h = s.hopf();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for x in [1, 2, 6, 7] {
        let a = random_element(&mut rng, 4);
        let b = random_element(&mut rng, 4);
        let la = s.l_operator(x, &a).unwrap();
        let lb = s.l_operator(x, &b).unwrap();
        assert_eq!(la.mul(&lb), s.l_operator(x, &h.mul(&a, &b)).unwrap());
        // T_x(α)T_x(β) = T_x(βα), the product of H* being dual to Δ
        let (alpha, beta) = (random_element(&mut rng, 4), random_element(&mut rng, 4));
        let dual = h.dual();
        let ba = dual.mul(&beta, &alpha);
        let ta = s.t_operator(x, &alpha).unwrap();
        let tb = s.t_operator(x, &beta).unwrap();
        assert_eq!(ta.mul(&tb), s.t_operator(x, &ba).unwrap());
    }
    let a = random_element(&mut rng, 4);
    let b = random_element(&mut rng, 4);
    let va = s.vertex_action(1, &a).unwrap();
    let vb = s.vertex_action(1, &b).unwrap();
    assert_eq!(va.mul(&vb), s.vertex_action(1, &h.mul(&a, &b)).unwrap());
}

#[test]
fn toric_code_on_the_torus() {
    let s = space_for("group:Z2", |h| pair_where(h, "1", true), 1, 0);
    let g = SVec::unit(1);
    // each edge meets the only vertex twice, once at each end: g m g⁻¹ = m
    assert!(s.vertex_action(1, &g).unwrap().is_identity());
    // each edge is traversed twice around the only face, with opposite gradings
    let c = s.face_coaction(1).unwrap();
    assert!(c[0].is_identity());
    assert!(c[1].is_zero());
}

#[test]
fn plaquette_grading_on_the_annulus() {
    // on Φ_{0,1} over Z3 the outer face reads 1, 4, 2: edge 1 is traversed both ways,
    // edge 2 once from its target
    let s = space_for("group:Z3", |h| pair_where(h, "1", true), 0, 1);
    assert_eq!(s.face_of(1).unwrap().len() + s.face_of(3).unwrap().len(), 4);
    for c in s.cilia() {
        let comps = s.face_coaction(c).unwrap();
        for index in 0..s.total_dim() {
            let digits = s.digits(index);
            let face = s.face_of(c).unwrap();
            let mut grade = 0i64;
            for x in face {
                let leg = s.leg_of(x).unwrap() as i64;
                let value = digits[leg as usize] as i64;
                grade += if x % 2 == 1 { value } else { -value };
            }
            let expected = grade.rem_euclid(3) as usize;
            for (y, comp) in comps.iter().enumerate() {
                let hit = comp.column(index);
                if y == expected {
                    assert_eq!(*hit, SVec::unit(index));
                } else {
                    assert!(hit.is_zero());
                }
            }
        }
    }
}

#[test]
fn face_coaction_is_counital() {
    let s = sweedler(1, 1);
    let h = s.hopf();
    for c in s.cilia() {
        let comps = s.face_coaction(c).unwrap();
        let mut total = SparseMat::zero(s.total_dim(), s.total_dim());
        for (k, m) in comps.iter().enumerate() {
            total = total.add_scaled(h.counit_basis(k), m);
        }
        assert!(total.is_identity());
    }
}

#[test]
fn extended_space_is_yetter_drinfeld() {
    let r = sweedler(1, 0).verify_extended_yd().unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    for counit in [true, false] {
        let s = space_for("group:S3", |h| pair_where(h, "e", counit), 0, 1);
        let r = s.verify_extended_yd().unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checks > 3 * 2);
    }
    let r = sweedler(0, 2).verify_extended_yd().unwrap();
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn global_module_over_the_tensor_power() {
    let s = sweedler(0, 1);
    let (hg, m) = s.global_module().unwrap();
    assert_eq!(hg.dim(), 16);
    assert!(hg.check_axioms().is_ok());
    assert!(m.check_module(&hg).is_ok());
    assert!(m.check_comodule(&hg).is_ok());
    assert!(m.verify_yd(&hg));
}

#[test]
fn flipped_orientation_is_detected() {
    // the face coaction reads every edge against its orientation; on the torus every
    // edge meets the vertex at both ends, so the annulus is used
    let mut s = space_for("group:S3", |h| pair_where(h, "e", true), 0, 1);
    assert!(s.verify_extended_yd().unwrap().passed());
    let ops = &*s.local;
    s.local = Rc::new(LocalOps {
        l_source: ops.l_source.clone(),
        l_target: ops.l_target.clone(),
        t_source: ops.t_target.clone(),
        t_target: ops.t_source.clone(),
    });
    let r = s.verify_extended_yd().unwrap();
    assert!(!r.passed());
    assert!(r.failures.iter().any(|f| f.starts_with("cilium 3")), "{:?}", r.failures);
}

#[test]
fn interchange_relations() {
    for s in [
        sweedler(1, 1),
        space_for("taft:3", |h| pair_where(h, "h", true), 1, 0),
        space_for("group:S3", |h| pair_where(h, "e", false), 0, 1),
    ] {
        let r = s.check_interchange();
        assert!(r.passed(), "{}: {:?}", s.hopf().name, r.failures);
    }
}

#[test]
fn trivial_psi_gives_identity_reversals() {
    let s = space_for("group:Z2", |h| pair_where(h, "1", true), 1, 0);
    let t = s.mu_reversal(1).unwrap();
    assert!(t.matrix.is_identity());
    assert_eq!(t.cilium_map[&1], 2);
}

#[test]
fn reversals_are_involutive_and_intertwine() {
    let s = sweedler(1, 1);
    for i in 1..=4 {
        let t = s.mu_reversal(i).unwrap();
        assert!(s.check_intertwining(&t).unwrap().passed());
        let back = t.space.mu_reversal(i).unwrap();
        assert!(back.matrix.mul(&t.matrix).is_identity());
        assert_eq!(back.space.graph(), s.graph());
    }
}

#[test]
fn permutations_intertwine() {
    let s = sweedler(1, 1);
    for i in 1..=3 {
        let t = s.mu_move(Move::EdgePermutation(i)).unwrap();
        let r = s.check_intertwining(&t).unwrap();
        assert!(r.passed(), "{i}: {:?}", r.failures);
    }
}

#[test]
fn slides_are_involutive_and_intertwine() {
    for s in [
        sweedler(1, 1),
        space_for("sweedler", |h| pair_where(h, "1", false), 0, 2),
        space_for("group:S3", |h| pair_where(h, "e", false), 0, 2),
    ] {
        let slides = valid_slides(s.graph());
        assert!(!slides.is_empty());
        for (a, b) in slides {
            let t = s.mu_slide(a, b).unwrap();
            assert!(!t.matrix.is_identity());
            let r = s.check_intertwining(&t).unwrap();
            assert!(r.passed(), "slide ({a}, {b}): {:?}", r.failures);
            let back = t.space.mu_slide(a, b).unwrap();
            assert_eq!(back.space.graph(), s.graph());
            assert!(back.matrix.mul(&t.matrix).is_identity(), "slide ({a}, {b}) is not involutive");
        }
    }
}

#[test]
fn invalid_slides_are_identities() {
    let s = sweedler(1, 0);
    let t = s.mu_slide(1, 1).unwrap();
    assert!(t.matrix.is_identity());
    assert_eq!(t.space.graph(), s.graph());
}

#[test]
fn reorderings_and_slides_commute_up_to_relabeling() {
    let s = sweedler(1, 1);
    let sigma = Move::EdgePermutation(2).reordering().unwrap();
    for (a, b) in valid_slides(s.graph()) {
        let left = s.mu_slide(a, b).unwrap().then(s.mu_slide(a, b).unwrap().space.mu_reordering(&sigma).unwrap());
        let first = s.mu_reordering(&sigma).unwrap();
        let right = first.clone().then(first.space.mu_slide(sigma.apply(a), sigma.apply(b)).unwrap());
        assert_eq!(left.space.graph(), right.space.graph());
        assert_eq!(left.matrix, right.matrix, "slide ({a}, {b})");
    }
}

#[test]
fn words_and_their_inverses() {
    let s = sweedler(1, 1);
    assert!(s.mu_word(&[]).unwrap().matrix.is_identity());
    let (_, word) = scramble(s.graph(), 12, 3).unwrap();
    let t = s.mu_word(&word).unwrap();
    let inverse: Vec<Move> = word.iter().rev().copied().collect();
    let back = t.space.mu_word(&inverse).unwrap();
    assert_eq!(back.space.graph(), s.graph());
    assert!(back.matrix.mul(&t.matrix).is_identity());
    let err = s.mu_word(&[Move::EdgeReversal(1), Move::EdgeReversal(0)]).unwrap_err();
    assert!(matches!(err, LatticeError::InvalidMove { position: 1, .. }));
}

#[test]
fn reduction_word_is_an_isomorphism_of_yetter_drinfeld_structures() {
    let s = sweedler(1, 0);
    let (scrambled, _) = scramble(s.graph(), 10, 11).unwrap();
    let start = s.rebuild(scrambled).unwrap();
    let (target, word) = reduce_to_standard(start.graph()).unwrap();
    let t = start.mu_word(&word).unwrap();
    assert_eq!(t.space.graph(), &target);
    assert_eq!(t.matrix.rank(), 16);
    let r = start.check_intertwining(&t).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn slide_moves_the_cilium_it_passes() {
    // a cilium equal to κ(a) or b is relabelled by (κa b)
    let s = sweedler(0, 2);
    for (a, b) in valid_slides(s.graph()) {
        let t = s.mu_slide(a, b).unwrap();
        let tau = Permutation::transposition(crate::graphs::kappa(a), b);
        assert_eq!(t.space.graph(), &apply_slide(s.graph(), a, b));
        for (c, d) in &t.cilium_map {
            assert_eq!(*d, tau.apply(*c));
        }
    }
}

