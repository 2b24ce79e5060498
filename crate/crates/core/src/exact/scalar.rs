use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::cyclo;
use super::ExactError;

/// An element of Q(ζ_N), stored as a coefficient vector in powers of ζ_N.
///
/// Values lying in Q are stored field-agnostically with `order == 0` so they combine
/// with elements of any cyclotomic field. The representation is canonical, which
/// makes structural equality and hashing exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            order: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_zero() {
            Scalar::zero()
        } else {
            Scalar {
                order: 0,
                coeffs: vec![r],
            }
        }
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        match n {
            0 | 1 => Scalar::one(),
            2 => {
                if k.rem_euclid(2) == 0 {
                    Scalar::one()
                } else {
                    Scalar::from_int(-1)
                }
            }
            _ => {
                let k = k.rem_euclid(n as i64) as usize;
                let z = Scalar::from_coeffs(
                    n,
                    vec![BigRational::zero(), BigRational::one()],
                );
                let mut acc = Scalar::one();
                for _ in 0..k {
                    acc = &acc * &z;
                }
                acc
            }
        }
    }

    /// Builds an element of Q(ζ_n) from coefficients of 1, ζ, ζ², … (any length).
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Self {
        if n <= 2 {
            // Q(ζ_1) = Q(ζ_2) = Q; fold powers of ζ_2 = -1.
            let mut r = BigRational::zero();
            for (k, c) in coeffs.into_iter().enumerate() {
                if n == 2 && k % 2 == 1 {
                    r -= c;
                } else {
                    r += c;
                }
            }
            return Scalar::from_rational(r);
        }
        let cy = cyclo(n);
        let d = cy.degree;
        // Fold with ζ^n = 1, then divide by the monic Φ_n from the top.
        let mut folded: Vec<BigRational> = vec![BigRational::zero(); (n as usize).max(d)];
        for (k, c) in coeffs.into_iter().enumerate() {
            folded[k % n as usize] += c;
        }
        for k in (d..folded.len()).rev() {
            let c = std::mem::replace(&mut folded[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (i, p) in cy.phi[..d].iter().enumerate() {
                if !p.is_zero() {
                    folded[k - d + i] -= &c * BigRational::from_integer(p.clone());
                }
            }
        }
        folded.truncate(d);
        let out = folded;
        Scalar::canonical(n, out)
    }

    fn canonical(n: u32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let order = if coeffs.len() <= 1 { 0 } else { n };
        Scalar { order, coeffs }
    }

    /// Cyclotomic order of the field this element needs (0 for rationals).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.order == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.order, self.coeffs.len()) {
            (0, 0) => Some(BigRational::zero()),
            (0, 1) => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn join_order(a: &Scalar, b: &Scalar) -> u32 {
        match (a.order, b.order) {
            (0, o) | (o, 0) => o,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing elements of Q(ζ_{x}) and Q(ζ_{y})"),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if self.order == 0 {
            return Some(Scalar::from_rational(self.coeffs[0].recip()));
        }
        // Solve (multiplication by self) · c = 1 in the power basis.
        let n = self.order;
        let d = cyclo(n).degree;
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        for k in 0..d {
            let e = Scalar::from_coeffs(n, unit_vec(k));
            let p = self * &e;
            let mut col = p.coeffs.clone();
            col.resize(d, BigRational::zero());
            cols.push(col);
        }
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let sol = solve_small(cols, rhs)?;
        Some(Scalar::from_coeffs(n, sol))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Square root inside the field, searched among ±ζ^k · q for rational q.
    pub fn sqrt_in_field(&self, field_order: u32) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let n = field_order.max(1);
        for k in 0..(2 * n as i64) {
            let z = Scalar::zeta_pow(n, k);
            let zz = &z * &z;
            let ratio = self * &zz.inv()?;
            if let Some(q) = ratio.as_rational() {
                if let Some(r) = rational_sqrt(&q) {
                    let cand = &Scalar::from_rational(r) * &z;
                    if &(&cand * &cand) == self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }

    /// Parses sums of terms `q`, `q*z^e`, `z^e`, `-z` with rational `q`.
    pub fn parse(s: &str, n: u32) -> Result<Scalar, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = Scalar::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest.to_string()),
                None => (1, t.trim_start_matches('+').to_string()),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef_str, pow_str) = match body.find('z') {
                None => (body.as_str(), None),
                Some(pos) => {
                    let coef = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let p = if rest.is_empty() {
                        "1"
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?
                    };
                    (coef, Some(p))
                }
            };
            let coef = if coef_str.is_empty() {
                BigRational::one()
            } else {
                BigRational::from_str(coef_str).map_err(|_| bad())?
            };
            let power: i64 = match pow_str {
                None => 0,
                Some(p) => p.parse().map_err(|_| bad())?,
            };
            let term = &Scalar::from_rational(coef) * &Scalar::zeta_pow(n, power);
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
        }
        Ok(acc)
    }
}

fn unit_vec(k: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); k + 1];
    v[k] = BigRational::one();
    v
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Gaussian elimination on a tiny dense system given by columns.
fn solve_small(cols: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let d = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[d].clone()).collect())
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let n = Scalar::join_order(self, rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let v = match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Scalar::canonical(n, out)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.order == 0 && rhs.order == 0 {
            return Scalar::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        if self.order == 0 || rhs.order == 0 {
            let (r, p) = if self.order == 0 { (self, rhs) } else { (rhs, self) };
            let c = &r.coeffs[0];
            return Scalar {
                order: p.order,
                coeffs: p.coeffs.iter().map(|x| x * c).collect(),
            };
        }
        let n = Scalar::join_order(self, rhs);
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::from_coeffs(n, prod)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                self.$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if self.order == 0 && rhs.order == 0 {
            self.coeffs[0] += &rhs.coeffs[0];
            if self.coeffs[0].is_zero() {
                self.coeffs.clear();
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &(-rhs);
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Scalar {
        Scalar::zeta_pow(n, k)
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=12u32 {
            let zeta = z(n, 1);
            assert!(zeta.pow(n as u64).is_one(), "n = {n}");
            for k in 1..n {
                assert!(!zeta.pow(k as u64).is_one(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn zeta_is_a_root_of_its_minimal_polynomial() {
        for n in 2..=12u32 {
            let f = super::super::make_field(n);
            let zeta = f.zeta();
            let mut acc = Scalar::zero();
            for (k, c) in f.minimal_poly.iter().enumerate() {
                acc = &acc + &(&Scalar::from_rational(c.clone()) * &zeta.pow(k as u64));
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-1/2", "z", "-z^2", "3/4*z + 1", "1 - 2*z"] {
            let x = Scalar::parse(s, 5).unwrap();
            let y = Scalar::parse(&x.to_string(), 5).unwrap();
            assert_eq!(x, y, "{s}");
        }
        assert_eq!(Scalar::parse("z^3", 3).unwrap(), Scalar::one());
        assert_eq!(Scalar::parse("z^2 + z + 1", 3).unwrap(), Scalar::zero());
        assert!(Scalar::parse("z^", 3).is_err());
        assert!(Scalar::parse("", 3).is_err());
    }

    #[test]
    fn rationals_collapse_to_order_zero() {
        let x = &z(4, 1) * &z(4, 1);
        assert_eq!(x, Scalar::from_int(-1));
        assert_eq!(x.order(), 0);
        assert_eq!(z(2, 1), Scalar::from_int(-1));
    }

    #[test]
    fn square_roots() {
        let m1 = Scalar::from_int(-1);
        assert!(m1.sqrt_in_field(1).is_none());
        let r = m1.sqrt_in_field(4).unwrap();
        assert_eq!(&r * &r, m1);
        let w = z(3, 1);
        let r = w.sqrt_in_field(3).unwrap();
        assert_eq!(&r * &r, w);
        assert_eq!(Scalar::from_frac(9, 4).sqrt_in_field(1), Some(Scalar::from_frac(3, 2)));
    }

    fn elem(n: u32) -> impl Strategy<Value = Scalar> {
        let d = super::super::field::totient(n) as usize;
        proptest::collection::vec((-6i64..=6, 1i64..=4), d).prop_map(move |cs| {
            let coeffs = cs
                .into_iter()
                .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
                .collect();
            Scalar::from_coeffs(n, coeffs)
        })
    }

    fn field_axioms(a: Scalar, b: Scalar, c: Scalar) -> Result<(), TestCaseError> {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &(-a.clone()), Scalar::zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn field_axioms_q_zeta3(a in elem(3), b in elem(3), c in elem(3)) {
            field_axioms(a, b, c)?;
        }
        #[test]
        fn field_axioms_q_zeta5(a in elem(5), b in elem(5), c in elem(5)) {
            field_axioms(a, b, c)?;
        }
        #[test]
        fn field_axioms_q_zeta12(a in elem(12), b in elem(12), c in elem(12)) {
            field_axioms(a, b, c)?;
        }
        #[test]
        fn field_axioms_q(a in elem(1), b in elem(1), c in elem(1)) {
            field_axioms(a, b, c)?;
        }
    }
}
