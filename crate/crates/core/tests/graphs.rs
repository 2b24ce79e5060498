use std::collections::BTreeSet;

use kitaev::graphs::{
    apply_word, connected_sum, kappa, reduce_to_standard, scramble, standard_graph, KitaevGraph,
    Permutation,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random valid graph on `n` edges. Well-ciliated graphs have as many faces as vertices,
/// so the Euler characteristic `2|V| − n` forces `n` to be even. The vertex permutation
/// is random; cilia are chosen by backtracking so that they also mark every face once.
fn random_graph(rng: &mut ChaCha8Rng, n: u32) -> KitaevGraph {
    loop {
        let mut labels: Vec<u32> = (1..=2 * n).collect();
        labels.shuffle(rng);
        let mut cycles = Vec::new();
        let mut rest = &labels[..];
        while !rest.is_empty() {
            let k = rng.gen_range(1..=rest.len());
            cycles.push(rest[..k].to_vec());
            rest = &rest[k..];
        }
        let rho = Permutation::from_cycles(&cycles).unwrap();
        let rho_inv = rho.inverse();
        let face_of = |h: u32| -> u32 {
            // canonical face representative: minimum of the ρ⁻¹κ orbit
            let mut m = h;
            let mut x = rho_inv.apply(kappa(h));
            while x != h {
                m = m.min(x);
                x = rho_inv.apply(kappa(x));
            }
            m
        };
        let mut choices: Vec<Vec<u32>> = cycles.clone();
        for c in choices.iter_mut() {
            c.shuffle(rng);
        }
        let mut picked = Vec::new();
        let mut used = BTreeSet::new();
        if assign(&choices, 0, &mut picked, &mut used, &|c| face_of(rho_inv.apply(c))) {
            let pt = *picked.choose(rng).unwrap();
            let g = KitaevGraph::new(rho.clone(), picked, pt);
            if g.is_valid() {
                return g;
            }
        }
    }
}

fn assign(
    choices: &[Vec<u32>],
    i: usize,
    picked: &mut Vec<u32>,
    used: &mut BTreeSet<u32>,
    face: &dyn Fn(u32) -> u32,
) -> bool {
    if i == choices.len() {
        return true;
    }
    for &c in &choices[i] {
        let f = face(c);
        if used.insert(f) {
            picked.push(c);
            if assign(choices, i + 1, picked, used, face) {
                return true;
            }
            picked.pop();
            used.remove(&f);
        }
    }
    false
}

#[test]
fn random_graphs_reduce_to_their_standard_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = BTreeSet::new();
    for _ in 0..300 {
        let n = 2 * rng.gen_range(1..=4);
        let g = random_graph(&mut rng, n);
        let (ga, aa) = g.genus_and_annuli().unwrap();
        let (s, w) = reduce_to_standard(&g).unwrap_or_else(|e| panic!("{e} on {:?}", g.to_json()));
        assert_eq!(s, standard_graph(ga, aa).unwrap());
        assert_eq!(apply_word(&g, &w).unwrap(), s);
        seen.insert((ga, aa));
    }
    assert!(seen.len() >= 6, "too little variety: {seen:?}");
}

#[test]
fn hundred_scrambles_of_phi_2_1() {
    let base = standard_graph(2, 1).unwrap();
    for seed in 0..100 {
        let (x, _) = scramble(&base, 5, seed).unwrap();
        let (s, w) = reduce_to_standard(&x).unwrap();
        assert_eq!(s, base);
        assert_eq!(apply_word(&x, &w).unwrap(), base);
    }
}

#[test]
fn graphs_with_equal_type_are_connected_by_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    while found < 40 {
        let g1 = random_graph(&mut rng, 4);
        let g2 = random_graph(&mut rng, 4);
        if g1.genus_and_annuli().unwrap() != g2.genus_and_annuli().unwrap() {
            continue;
        }
        found += 1;
        let (_, w1) = reduce_to_standard(&g1).unwrap();
        let (_, w2) = reduce_to_standard(&g2).unwrap();
        let mut w = w1.clone();
        w.extend(w2.iter().rev());
        assert_eq!(apply_word(&g1, &w).unwrap(), g2);
    }
}

#[test]
fn connected_sums_reduce_to_sums_of_types() {
    let t = standard_graph(1, 0).unwrap();
    let a = standard_graph(0, 1).unwrap();
    let ta = connected_sum(&t, &a).unwrap().graph;
    assert_eq!(reduce_to_standard(&ta).unwrap().0, standard_graph(1, 1).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let x = random_graph(&mut rng, 4);
        let y = random_graph(&mut rng, 4);
        let (gx, ax) = x.genus_and_annuli().unwrap();
        let (gy, ay) = y.genus_and_annuli().unwrap();
        let sum = connected_sum(&x, &y).unwrap().graph;
        assert!(sum.is_valid());
        assert_eq!(sum.genus_and_annuli().unwrap(), (gx + gy, ax + ay));
        let (s, _) = reduce_to_standard(&sum).unwrap();
        assert_eq!(s, standard_graph(gx + gy, ax + ay).unwrap());
    }
}

#[test]
fn reordering_rejects_non_edge_preserving_maps() {
    let t = standard_graph(1, 0).unwrap();
    let bad = Permutation::cycle(&[1, 3]);
    assert!(kitaev::graphs::apply_reordering(&t, &bad).is_err());
}
