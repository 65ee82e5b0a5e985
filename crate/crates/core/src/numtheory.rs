//! Small integer helpers.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as ascending `(p, exponent)` pairs.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The largest divisor of `n` that is a power of `p`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut m = n;
    let mut r = 1;
    while m > 0 && m % p == 0 {
        m /= p;
        r *= p;
    }
    r
}

pub fn odd_part(n: u64) -> u64 {
    n / p_part(n, 2)
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

pub fn totient(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    prime_factors(n).iter().map(|&(p, _)| p).product()
}

pub fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorisations() {
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_factors(1), vec![]);
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(odd_part(48), 3);
        assert_eq!(radical(72), 6);
        assert!(is_power_of(27, 3));
        assert!(is_power_of(1, 2));
        assert!(!is_power_of(12, 2));
    }

    #[test]
    fn totient_matches_gcd_count() {
        for n in 1..200u64 {
            let count = (1..=n).filter(|&u| gcd(u, n) == 1).count() as u64;
            assert_eq!(totient(n), count, "n = {n}");
        }
    }
}
