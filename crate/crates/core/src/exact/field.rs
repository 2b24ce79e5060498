use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Scalar;

/// The cyclotomic field Q(ζ_N), described by the minimal polynomial of ζ_N.
///
/// For `N = 1` the field is Q itself and `minimal_poly` holds the placeholder `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
    /// Coefficients of Φ_N, constant term first.
    pub minimal_poly: Vec<BigRational>,
}

impl FieldSpec {
    pub fn degree(&self) -> usize {
        if self.cyclotomic_order == 1 {
            1
        } else {
            self.minimal_poly.len() - 1
        }
    }

    pub fn zeta(&self) -> Scalar {
        Scalar::zeta_pow(self.cyclotomic_order, 1)
    }

    /// All elements of the form ±ζ^k, i.e. the roots of unity of the field.
    pub fn roots_of_unity(&self) -> Vec<Scalar> {
        let n = self.cyclotomic_order.max(1);
        let mut out: Vec<Scalar> = Vec::new();
        for k in 0..n {
            for s in [Scalar::one(), -Scalar::one()] {
                let z = &s * &Scalar::zeta_pow(n, k as i64);
                if !out.contains(&z) {
                    out.push(z);
                }
            }
        }
        out
    }
}

/// Builds Q(ζ_N); Φ_N comes from dividing x^N − 1 by every Φ_d with d | N, d < N.
pub fn make_field(n: u32) -> FieldSpec {
    assert!(n >= 1, "cyclotomic order must be positive");
    let minimal_poly = if n == 1 {
        vec![BigRational::zero(), BigRational::one()]
    } else {
        cyclotomic_poly(n)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    FieldSpec {
        cyclotomic_order: n,
        minimal_poly,
    }
}

/// Integer coefficients of Φ_n, constant term first.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = poly_divmod_int(&num, &cyclotomic_poly(d));
            debug_assert!(r.iter().all(|c| c.is_zero()));
            num = q;
        }
    }
    num
}

/// Division of integer polynomials by a monic divisor.
fn poly_divmod_int(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if num.len() <= dd {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            rem[k - dd + i] -= &c * dc;
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Cached Φ_N data for arithmetic modulo Φ_N.
pub(crate) struct Cyclo {
    pub degree: usize,
    pub phi: Vec<BigInt>,
}

thread_local! {
    static CYCLO_CACHE: RefCell<HashMap<u32, Rc<Cyclo>>> = RefCell::new(HashMap::new());
}

pub(crate) fn cyclo(n: u32) -> Rc<Cyclo> {
    CYCLO_CACHE.with(|cache| {
        if let Some(c) = cache.borrow().get(&n) {
            return c.clone();
        }
        let phi = cyclotomic_poly(n);
        let c = Rc::new(Cyclo {
            degree: phi.len() - 1,
            phi,
        });
        cache.borrow_mut().insert(n, c.clone());
        c
    })
}

/// Euler's totient, used to validate minimal polynomial degrees.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u32
}
