//! Small integer helpers.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
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

/// Exponent of `p` in `n`.
pub fn valuation(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

pub fn is_prime_power(n: usize) -> bool {
    prime_divisors(n).len() == 1
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i64 % m as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_valuations() {
        assert_eq!(prime_divisors(294), vec![2, 3, 7]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
        assert_eq!(valuation(384, 2), 7);
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
        assert!(is_prime_power(64) && !is_prime_power(12) && !is_prime_power(1));
        assert_eq!(mod_inverse(5, 8), Some(5));
        assert_eq!(mod_inverse(2, 5), Some(3));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(lcm(4, 6), 12);
    }
}
