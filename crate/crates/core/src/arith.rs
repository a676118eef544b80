//! Small exact-integer helpers: gcd/lcm re-exports, trial-division
//! factorization and primality for the group orders this crate handles.

pub use num_integer::{gcd, lcm};

/// Prime factorization by trial division, as (prime, multiplicity) pairs in
/// ascending prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct primes dividing `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut part = 1;
    let mut m = n;
    while m % p == 0 {
        part *= p;
        m /= p;
    }
    part
}

/// True iff `n` is `p^k` for some `k >= 0`.
pub fn is_power_of(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// The unique prime `p` with `n = p^k`, `k >= 1`, if any.
pub fn prime_power_base(n: u64) -> Option<u64> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(1092), vec![(2, 2), (3, 1), (7, 1), (13, 1)]);
        assert_eq!(prime_divisors(72), vec![2, 3]);
    }

    #[test]
    fn primality_and_parts() {
        assert!(is_prime(2));
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(p_part(72, 2), 8);
        assert_eq!(p_part(72, 3), 9);
        assert_eq!(p_part(72, 5), 1);
        assert!(is_power_of(8, 2));
        assert!(!is_power_of(12, 2));
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(1), None);
    }
}
