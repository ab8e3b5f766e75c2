//! Closed-form counts used to label enumerations with their expected sizes.

/// `binomial(n, k)`, exact for every value that fits in a `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// The `n`-th Catalan number `binomial(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> u128 {
    binomial(2 * n, n) / u128::from(n + 1)
}

/// Number of order-preserving self-maps of an `n`-chain, `binomial(2n - 1, n - 1)`.
pub fn order_preserving_count(n: u64) -> u128 {
    if n == 0 {
        return 1;
    }
    binomial(2 * n - 1, n - 1)
}
