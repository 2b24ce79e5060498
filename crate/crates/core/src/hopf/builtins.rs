use crate::exact::{make_field, FieldSpec, SVec, Scalar, SparseMat};

use super::algebra::HopfAlgebra;
use super::HopfError;

/// Group algebra `kG` from a multiplication table of indices.
pub fn group_algebra(
    name: &str,
    table: &[Vec<usize>],
    labels: Vec<String>,
    field: FieldSpec,
) -> Result<HopfAlgebra, HopfError> {
    let n = table.len();
    let bad = |m: &str| Err(HopfError::NotAGroup(m.to_string()));
    if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return bad("table is not square with entries in range");
    }
    if labels.len() != n {
        return bad("wrong number of labels");
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return bad("not associative");
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
        return bad("no identity element");
    };
    let mut inverse = vec![0; n];
    for g in 0..n {
        match (0..n).find(|&h| table[g][h] == e && table[h][g] == e) {
            Some(h) => inverse[g] = h,
            None => return bad("element without inverse"),
        }
    }
    let mul = (0..n * n)
        .map(|p| SVec::unit(table[p / n][p % n]))
        .collect();
    let comul = (0..n).map(|g| vec![(g, g, Scalar::one())]).collect();
    let counit = vec![Scalar::one(); n];
    let antipode = SparseMat::permutation(&inverse);
    HopfAlgebra::from_parts(name, field, labels, mul, SVec::unit(e), comul, counit, antipode)
}

/// `k[Z_n]` over `Q(ζ_n)` with basis `1, g, …, g^{n−1}`.
pub fn cyclic_group(n: usize) -> Result<HopfAlgebra, HopfError> {
    if n == 0 {
        return Err(HopfError::NotAGroup("Z_0".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| power_label("g", i)).collect();
    group_algebra(&format!("group:Z{n}"), &table, labels, make_field(n as u32))
}

/// `k[S_3]` over `Q`; elements are listed as `e, (12), (13), (23), (123), (132)` and
/// compose right to left.
pub fn symmetric_group_3() -> Result<HopfAlgebra, HopfError> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect();
    group_algebra("group:S3", &table, labels, HopfAlgebra::rational_field())
}

fn power_label(x: &str, i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => x.into(),
        _ => format!("{x}^{i}"),
    }
}

/// Taft algebra of order `N` over `Q(ζ_N)`: generated by `h, y` with `h^N = 1`,
/// `y^N = 0`, `hy = q yh` for `q = ζ_N`, `Δ(h) = h⊗h`, `Δ(y) = 1⊗y + y⊗h`.
/// The basis element `y^i h^j` has index `i·N + j`.
pub fn taft_algebra(big_n: usize) -> Result<HopfAlgebra, HopfError> {
    if big_n < 2 {
        return Err(HopfError::Format("Taft algebras need N ≥ 2".into()));
    }
    let nn = big_n;
    let ord = nn as u32;
    let dim = nn * nn;
    let idx = |i: usize, j: usize| i * nn + j;
    let q = |e: usize| Scalar::zeta_pow(ord, e as i64);
    let mut mul = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        let (i, j) = (a / nn, a % nn);
        for b in 0..dim {
            let (k, l) = (b / nn, b % nn);
            // (y^i h^j)(y^k h^l) = q^{jk} y^{i+k} h^{j+l}
            if i + k >= nn {
                mul.push(SVec::new());
            } else {
                mul.push(SVec::from_pairs([(idx(i + k, (j + l) % nn), q(j * k))]));
            }
        }
    }
    let labels: Vec<String> = (0..dim)
        .map(|a| {
            let (i, j) = (a / nn, a % nn);
            match (i, j) {
                (0, 0) => "1".into(),
                (0, _) => power_label("h", j),
                (_, 0) => power_label("y", i),
                _ => format!("{}{}", power_label("y", i), power_label("h", j)),
            }
        })
        .collect();
    let counit: Vec<Scalar> = (0..dim)
        .map(|a| if a / nn == 0 { Scalar::one() } else { Scalar::zero() })
        .collect();
    // Build an algebra with placeholder coalgebra data to use its product, then fill Δ and S
    // multiplicatively.
    let field = make_field(ord);
    let unit = SVec::unit(0);
    let scaffold = HopfAlgebra::from_parts(
        "scaffold",
        field.clone(),
        labels.clone(),
        mul.clone(),
        unit.clone(),
        vec![Vec::new(); dim],
        counit.clone(),
        SparseMat::identity(dim),
    )?;
    let h = SVec::unit(idx(0, 1));
    let y = SVec::unit(idx(1, 0));
    let d = dim;
    let dh = SVec::unit(idx(0, 1) * d + idx(0, 1));
    let dy = SVec::from_pairs([
        (idx(0, 0) * d + idx(1, 0), Scalar::one()),
        (idx(1, 0) * d + idx(0, 1), Scalar::one()),
    ]);
    let one2 = SVec::unit(0);
    let tpow = |x: &SVec, e: usize| (0..e).fold(one2.clone(), |acc, _| scaffold.mul_tensor(&acc, x));
    let mut comul = Vec::with_capacity(dim);
    let mut s_cols = Vec::with_capacity(dim);
    let s_h = scaffold.pow(&h, (nn - 1) as u32);
    let s_y = scaffold.mul(&y, &s_h).scale(&-Scalar::one());
    for a in 0..dim {
        let (i, j) = (a / nn, a % nn);
        let delta = scaffold.mul_tensor(&tpow(&dy, i), &tpow(&dh, j));
        comul.push(delta.iter().map(|(p, c)| (p / d, p % d, c.clone())).collect());
        // S is an anti-homomorphism: S(y^i h^j) = S(h)^j S(y)^i
        s_cols.push(scaffold.mul(&scaffold.pow(&s_h, j as u32), &scaffold.pow(&s_y, i as u32)));
    }
    let name = if nn == 2 { "sweedler".to_string() } else { format!("taft:{nn}") };
    HopfAlgebra::from_parts(
        name,
        field,
        labels,
        mul,
        unit,
        comul,
        counit,
        SparseMat::from_columns(dim, s_cols),
    )
}

/// Built-in algebras: `sweedler`, `taft:N`, `group:Zn`, `group:S3`.
pub fn builtin(name: &str) -> Result<HopfAlgebra, HopfError> {
    let unknown = || HopfError::Format(format!("unknown built-in algebra {name:?}"));
    if name == "sweedler" {
        return taft_algebra(2);
    }
    if let Some(n) = name.strip_prefix("taft:") {
        return taft_algebra(n.parse().map_err(|_| unknown())?);
    }
    if name == "group:S3" {
        return symmetric_group_3();
    }
    if let Some(n) = name.strip_prefix("group:Z") {
        return cyclic_group(n.parse().map_err(|_| unknown())?);
    }
    Err(unknown())
}
