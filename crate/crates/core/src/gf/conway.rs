//! Default moduli: Conway polynomials.
//!
//! Extension-field entries are listed constant term first. Prime fields use
//! `x - r` with `r` the least primitive root, which is the degree-one Conway
//! polynomial. Sizes missing from the table fall back to [`search`], which
//! applies the defining rule directly (least compatible primitive polynomial
//! under the alternating-sign lexicographic order).

use super::poly::prime_factors;

pub(crate) const TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 15, &[1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (3, 9, &[1, 1, 2, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (5, 5, &[3, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 0, 1, 4, 1, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
    (7, 5, &[4, 1, 0, 0, 0, 1]),
    (11, 2, &[2, 7, 1]),
    (11, 3, &[9, 2, 0, 1]),
    (11, 4, &[2, 10, 8, 0, 1]),
    (13, 2, &[2, 12, 1]),
    (13, 3, &[11, 2, 0, 1]),
    (13, 4, &[2, 12, 3, 0, 1]),
    (17, 2, &[3, 16, 1]),
    (17, 3, &[14, 1, 0, 1]),
    (19, 2, &[2, 18, 1]),
    (19, 3, &[17, 4, 0, 1]),
    (23, 2, &[5, 21, 1]),
    (23, 3, &[18, 2, 0, 1]),
    (29, 2, &[2, 24, 1]),
    (29, 3, &[27, 2, 0, 1]),
    (31, 2, &[3, 29, 1]),
    (31, 3, &[28, 1, 0, 1]),
    (37, 2, &[2, 33, 1]),
    (37, 3, &[35, 6, 0, 1]),
    (41, 2, &[6, 38, 1]),
    (43, 2, &[3, 42, 1]),
    (47, 2, &[5, 45, 1]),
    (53, 2, &[2, 49, 1]),
    (59, 2, &[2, 58, 1]),
    (61, 2, &[2, 60, 1]),
    (67, 2, &[2, 63, 1]),
    (71, 2, &[7, 69, 1]),
    (73, 2, &[5, 70, 1]),
    (79, 2, &[3, 78, 1]),
    (83, 2, &[2, 82, 1]),
    (89, 2, &[3, 82, 1]),
    (97, 2, &[5, 96, 1]),
    (101, 2, &[2, 97, 1]),
    (103, 2, &[5, 102, 1]),
    (107, 2, &[2, 103, 1]),
    (109, 2, &[6, 108, 1]),
    (113, 2, &[3, 101, 1]),
    (127, 2, &[3, 126, 1]),
    (131, 2, &[2, 127, 1]),
    (137, 2, &[3, 131, 1]),
    (139, 2, &[2, 138, 1]),
    (149, 2, &[2, 145, 1]),
    (151, 2, &[6, 149, 1]),
    (157, 2, &[5, 152, 1]),
    (163, 2, &[2, 159, 1]),
    (167, 2, &[5, 166, 1]),
    (173, 2, &[2, 169, 1]),
    (179, 2, &[2, 172, 1]),
    (181, 2, &[2, 177, 1]),
    (191, 2, &[19, 190, 1]),
    (193, 2, &[5, 192, 1]),
    (197, 2, &[2, 192, 1]),
    (199, 2, &[3, 193, 1]),
    (211, 2, &[2, 207, 1]),
    (223, 2, &[3, 221, 1]),
    (227, 2, &[2, 220, 1]),
    (229, 2, &[6, 228, 1]),
    (233, 2, &[3, 232, 1]),
    (239, 2, &[7, 237, 1]),
    (241, 2, &[7, 238, 1]),
    (251, 2, &[6, 242, 1]),
];

/// Conway polynomial for GF(p^m), from the table or by direct search.
pub(crate) fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        let r = least_primitive_root(p);
        return vec![(p - r) % p, 1];
    }
    if let Some((_, _, c)) = TABLE.iter().find(|(tp, tm, _)| *tp == p && *tm == m) {
        return c.to_vec();
    }
    search(p, m)
}

pub(crate) fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p as u64 - 1);
    (1..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| pow_mod_u(g as u64, (p as u64 - 1) / r, p as u64) != 1)
        })
        .expect("every prime field has a primitive root")
}

fn pow_mod_u(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Exp/log tables of the residue class of `x` modulo a monic `modulus`.
///
/// Returns `None` unless `x` has multiplicative order exactly `p^m - 1`, which
/// holds iff the modulus is primitive (and therefore irreducible).
pub(crate) fn cycle_tables(p: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let m = modulus.len() - 1;
    let q = (p as u64).pow(m as u32) as usize;
    let order = q - 1;
    let mut exp = Vec::with_capacity(order);
    let mut log = vec![u32::MAX; q];
    let mut cur = 1u32;
    for i in 0..order {
        if cur == 0 || log[cur as usize] != u32::MAX {
            return None;
        }
        log[cur as usize] = i as u32;
        exp.push(cur);
        cur = times_x(cur, p, modulus);
    }
    if cur != 1 {
        return None;
    }
    Some((exp, log))
}

fn times_x(a: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len() - 1;
    if p == 2 {
        let mut mask = 0u32;
        for (j, &c) in modulus.iter().enumerate() {
            mask |= c << j;
        }
        let shifted = a << 1;
        return if shifted >> m & 1 == 1 { shifted ^ mask } else { shifted };
    }
    let mut digits = [0u32; 17];
    let mut v = a;
    for d in digits.iter_mut().take(m) {
        *d = v % p;
        v /= p;
    }
    let top = digits[m - 1];
    for j in (1..m).rev() {
        digits[j] = digits[j - 1];
    }
    digits[0] = 0;
    if top != 0 {
        for (j, d) in digits.iter_mut().enumerate().take(m) {
            let sub = (top as u64 * modulus[j] as u64 % p as u64) as u32;
            *d = (*d + p - sub) % p;
        }
    }
    digits[..m].iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn add_enc(a: u32, b: u32, p: u32, m: usize) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut scale = 1u32;
    for _ in 0..m {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

/// Least primitive polynomial of degree `m` compatible with the Conway
/// polynomials of every proper subfield.
pub(crate) fn search(p: u32, m: u32) -> Vec<u32> {
    let mu = m as usize;
    let q = (p as u64).pow(m) as u64;
    let lower: Vec<(u64, Vec<u32>)> = (1..m)
        .filter(|d| m % d == 0)
        .map(|d| ((q - 1) / ((p as u64).pow(d) - 1), default_modulus(p, d)))
        .collect();
    let total = (p as u64).pow(m);
    for idx in 0..total {
        // idx enumerates (b_{m-1}, ..., b_0) lexicographically, b_{m-1} most significant.
        let mut b = vec![0u32; mu];
        let mut v = idx;
        for i in 0..mu {
            b[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        if b[0] == 0 {
            continue;
        }
        let f: Vec<u32> = (0..mu)
            .map(|i| if (mu - i) % 2 == 0 { b[i] } else { (p - b[i]) % p })
            .chain(std::iter::once(1))
            .collect();
        let Some((exp, log)) = cycle_tables(p, &f) else {
            continue;
        };
        let order = (q - 1) as usize;
        let compatible = lower.iter().all(|(e, c)| {
            let beta = exp[(*e as usize) % order];
            // Horner evaluation of c at beta inside the candidate field.
            let mut acc = 0u32;
            for &coef in c.iter().rev() {
                acc = if acc == 0 || beta == 0 {
                    0
                } else {
                    exp[(log[acc as usize] as usize + log[beta as usize] as usize) % order]
                };
                acc = add_enc(acc, coef, p, mu);
            }
            acc == 0
        });
        if compatible {
            return f;
        }
    }
    unreachable!("a Conway polynomial exists for every prime power")
}
