#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use trs_hull::code::LinearCode;
use trs_hull::gf::{Elem, Field};
use trs_hull::linalg::Matrix;
use trs_hull::trs;

/// Small fields used by the randomized checks.
pub const SMALL_FIELDS: [(u32, u32); 8] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)];

/// Every prime power q ≤ 256 as (p, m).
pub fn prime_powers_upto(limit: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in 2..=limit {
        if (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            continue;
        }
        let mut q = p;
        let mut m = 1;
        while q <= limit {
            out.push((p, m));
            q *= p;
            m += 1;
        }
    }
    out.sort_by_key(|&(p, m)| p.pow(m));
    out
}

pub fn random_elem(f: &Field, rng: &mut ChaCha8Rng) -> Elem {
    f.element(rng.gen_range(0..f.order())).unwrap()
}

pub fn random_nonzero(f: &Field, rng: &mut ChaCha8Rng) -> Elem {
    f.element(rng.gen_range(1..f.order())).unwrap()
}

pub fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| random_elem(f, rng)).collect();
    Matrix::new(f, rows, cols, data).unwrap()
}

/// Random full-rank k×n generator.
pub fn random_code(f: &Field, k: usize, n: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        if let Ok(c) = LinearCode::new(random_matrix(f, k, n, rng)) {
            return c;
        }
    }
}

/// n distinct random points of the field.
pub fn distinct_points(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    let mut all: Vec<Elem> = f.elements().collect();
    for i in 0..n {
        let j = rng.gen_range(i..all.len());
        all.swap(i, j);
    }
    all.truncate(n);
    all
}

pub fn random_grs(f: &Field, k: usize, n: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    let alpha = distinct_points(f, n, rng);
    let v: Vec<Elem> = (0..n).map(|_| random_nonzero(f, rng)).collect();
    LinearCode::new(trs::grs_generator(f, &alpha, &v, k).unwrap()).unwrap()
}

/// Weight of a vector.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Row vector times matrix.
pub fn encode(f: &Field, msg: &[Elem], g: &Matrix) -> Vec<Elem> {
    (0..g.cols()).map(|c| f.sum(msg.iter().enumerate().map(|(r, &m)| f.mul(m, g.get(r, c))))).collect()
}
