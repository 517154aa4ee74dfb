use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)`, exact. Zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n - k + i, i) after each step, so the division is exact.
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `n!`, exact.
pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)` in machine arithmetic, or `None` on overflow.
pub(crate) fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc.checked_mul(n as u128 - k as u128 + i)? / i;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
        let mut t: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for r in 1..=rows {
            let prev = &t[r - 1];
            let mut row = vec![BigUint::one(); r + 1];
            for k in 1..r {
                row[k] = &prev[k - 1] + &prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::default());
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigUint::one());
        }
    }

    #[test]
    fn agrees_with_pascal_recurrence() {
        let t = pascal(70);
        assert_eq!(binomial(30, 15), t[30][15]);
        assert_eq!(t[30][15], BigUint::from(155_117_520u64));
        for n in 0..=70u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), t[n as usize][k as usize]);
            }
        }
    }

    #[test]
    fn exceeds_machine_words() {
        // C(68, 34) is past u64::MAX
        let b = binomial(68, 34);
        assert!(b > BigUint::from(u64::MAX));
        assert_eq!(b, pascal(68)[68][34]);
        assert_eq!(binomial_u128(68, 34).map(BigUint::from), Some(b));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(21), "51090942171709440000".parse().unwrap());
    }
}
