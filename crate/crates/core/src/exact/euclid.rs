use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Bezout coefficients for a whole list: returns `z` with `Σ z_i · values_i = 1`.
///
/// Coefficients are accumulated left to right, so the output depends on the
/// input order. For `(3, 2)` this gives `(1, -1)`.
pub fn extended_euclid_set(values: &[BigInt]) -> Result<Vec<BigInt>, ExactError> {
    let Some(first) = values.first() else {
        return Err(ExactError::GcdNotOne { gcd: BigInt::zero() });
    };
    let mut g = first.clone();
    let mut coeffs = vec![BigInt::one()];
    for v in &values[1..] {
        let (d, s, t) = ext_gcd(&g, v);
        for c in coeffs.iter_mut() {
            *c *= &s;
        }
        coeffs.push(t);
        g = d;
    }
    if g.is_negative() {
        g = -g;
        coeffs.iter_mut().for_each(|c| *c = -c.clone());
    }
    if !g.is_one() {
        return Err(ExactError::GcdNotOne { gcd: g });
    }
    Ok(coeffs)
}

// (gcd, s, t) with s*a + t*b = gcd
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    (old_r, old_s, old_t)
}

pub fn lcm<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v))
}

/// Largest divisor of `n` prime to `p`.
pub fn p_free_part(n: &BigInt, p: u64) -> BigInt {
    let p = BigInt::from(p);
    let mut n = n.abs();
    if n.is_zero() {
        return n;
    }
    while (&n % &p).is_zero() {
        n /= &p;
    }
    n
}

/// Prime divisors in ascending order (trial division; inputs are group orders).
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn bezout_holds(values: &[BigInt], z: &[BigInt]) -> bool {
        values.iter().zip(z).map(|(v, c)| v * c).sum::<BigInt>().is_one()
    }

    #[test]
    fn three_two() {
        let z = extended_euclid_set(&big(&[3, 2])).unwrap();
        assert_eq!(z, big(&[1, -1]));
        // brute force agrees that (1, -1) is among the small solutions
        let mut found = vec![];
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                if 3 * a + 2 * b == 1 {
                    found.push((a, b));
                }
            }
        }
        assert!(found.contains(&(1, -1)));
    }

    #[test]
    fn singleton_and_failure() {
        assert_eq!(extended_euclid_set(&big(&[1])).unwrap(), big(&[1]));
        assert_eq!(
            extended_euclid_set(&big(&[4, 6])),
            Err(ExactError::GcdNotOne { gcd: BigInt::from(2) })
        );
    }

    #[test]
    fn many_values() {
        let v = big(&[6, 10, 15]);
        let z = extended_euclid_set(&v).unwrap();
        assert!(bezout_holds(&v, &z));
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_free_part(&BigInt::from(24), 2), BigInt::from(3));
        assert_eq!(p_free_part(&BigInt::from(24), 3), BigInt::from(8));
        assert_eq!(p_free_part(&BigInt::from(24), 5), BigInt::from(24));
        assert_eq!(prime_divisors(24), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(97), vec![97]);
    }

    proptest::proptest! {
        #[test]
        fn bezout_identity(vals in proptest::collection::vec(1i64..500, 1..5)) {
            let v = big(&vals);
            let g = v.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
            match extended_euclid_set(&v) {
                Ok(z) => { proptest::prop_assert!(g.is_one()); proptest::prop_assert!(bezout_holds(&v, &z)); }
                Err(_) => proptest::prop_assert!(!g.is_one()),
            }
        }
    }
}
