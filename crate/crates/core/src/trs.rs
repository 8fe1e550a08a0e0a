//! Generalized and twisted Reed-Solomon generator matrices, and the two
//! families of twisted codes with one-dimensional hull.
//!
//! Both families evaluate on `α = (α_1..α_k, β·α_1..β·α_k)` where the `α_i`
//! are the k-th roots of unity and `β` is a primitive element of the field the
//! points live in. With `n = 2k`:
//!
//! * even characteristic: dimension `k`, generator `[C_1 : C_β]`;
//! * odd characteristic: dimension `k − 1`, generator `[H_1 : H_β]`.
//!
//! Each block is the Vandermonde block of the scaled points with one hooked
//! row `x^h + η·x^(dim−1+t)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, LinearCode, ReportParams};
use crate::gf::{Elem, Field, GfError};
use crate::linalg::{LinalgError, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrsError {
    #[error("parameter violation: {0}")]
    ParamViolation(String),
    #[error("evaluation points {0} and {1} coincide")]
    RepeatedPoint(usize, usize),
    #[error("column multiplier {0} is zero")]
    ZeroMultiplier(usize),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("{k} does not divide {order}")]
    NotADivisor { k: usize, order: u64 },
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

fn violation(cond: impl Into<String>) -> TrsError {
    TrsError::ParamViolation(format!("{} fails", cond.into()))
}

/// Which one-dimensional-hull family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Even q, `[2k, k]`.
    Lemma31,
    /// Odd q, `[2k, k−1]`.
    Lemma32,
}

impl Family {
    /// Dimension of the constructed code for block size `k`.
    pub fn code_dimension(self, k: usize) -> usize {
        match self {
            Family::Lemma31 => k,
            Family::Lemma32 => k - 1,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Lemma31 => "lemma31",
            Family::Lemma32 => "lemma32",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = TrsError;
    fn from_str(s: &str) -> Result<Self, TrsError> {
        match s {
            "lemma31" => Ok(Family::Lemma31),
            "lemma32" => Ok(Family::Lemma32),
            other => Err(TrsError::ParamViolation(format!("unknown family {other:?}"))),
        }
    }
}

/// Parameters of the twisted code `{(f(α_1), ..., f(α_n))}` with
/// `f = Σ_{i<k} a_i x^i + η a_h x^(k−1+t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedRsParams {
    alpha: Vec<Elem>,
    k: usize,
    t: usize,
    h: usize,
    eta: Elem,
}

impl TwistedRsParams {
    /// Checks `η ≠ 0`, `0 ≤ h < k ≤ q`, `k < n`, `0 < t ≤ n − k` and distinct points.
    pub fn new(field: &Field, alpha: Vec<Elem>, k: usize, t: usize, h: usize, eta: Elem) -> Result<Self, TrsError> {
        let n = alpha.len();
        if eta.is_zero() {
            return Err(violation("η ≠ 0"));
        }
        if h >= k {
            return Err(violation("h < k"));
        }
        if k > field.order() as usize {
            return Err(violation("k ≤ q"));
        }
        if k >= n {
            return Err(violation("k < n"));
        }
        if t == 0 {
            return Err(violation("0 < t"));
        }
        if t > n - k {
            return Err(violation("t ≤ n − k"));
        }
        if let Some((i, j)) = first_repeat(&alpha) {
            return Err(violation(format!("distinct evaluation points (positions {i} and {j})")));
        }
        Ok(TwistedRsParams { alpha, k, t, h, eta })
    }

    pub fn alpha(&self) -> &[Elem] {
        &self.alpha
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn eta(&self) -> Elem {
        self.eta
    }

    pub fn length(&self) -> usize {
        self.alpha.len()
    }

    /// Degree of the twist monomial, `k − 1 + t`.
    pub fn twist_degree(&self) -> usize {
        self.k - 1 + self.t
    }

    /// Evaluates `Σ a_i x^i + η a_h x^(k−1+t)` at every point.
    pub fn evaluate(&self, field: &Field, coeffs: &[Elem]) -> Vec<Elem> {
        assert_eq!(coeffs.len(), self.k, "one coefficient per message symbol");
        let twist = field.mul(self.eta, coeffs[self.h]);
        self.alpha
            .iter()
            .map(|&x| {
                let plain = field.sum(coeffs.iter().enumerate().map(|(i, &a)| field.mul(a, field.pow(x, i as u64))));
                field.add(plain, field.mul(twist, field.pow(x, self.twist_degree() as u64)))
            })
            .collect()
    }

    pub fn report_params(&self) -> ReportParams {
        ReportParams { t: self.t, h: self.h, eta: self.eta, alpha: self.alpha.clone() }
    }
}

fn first_repeat(alpha: &[Elem]) -> Option<(usize, usize)> {
    for j in 0..alpha.len() {
        for i in 0..j {
            if alpha[i] == alpha[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// k×n generator with rows `v_j α_j^i`, i = 0..k−1.
pub fn grs_generator(field: &Field, alpha: &[Elem], v: &[Elem], k: usize) -> Result<Matrix, TrsError> {
    let n = alpha.len();
    if v.len() != n {
        return Err(TrsError::BadDimension(format!("{} multipliers for {n} points", v.len())));
    }
    if k == 0 || k > n {
        return Err(TrsError::BadDimension(format!("need 1 ≤ k ≤ n, got k = {k}, n = {n}")));
    }
    if let Some((i, j)) = first_repeat(alpha) {
        return Err(TrsError::RepeatedPoint(i, j));
    }
    if let Some(j) = v.iter().position(|x| x.is_zero()) {
        return Err(TrsError::ZeroMultiplier(j));
    }
    let mut g = Matrix::zeros(field, k, n);
    for (j, (&a, &vj)) in alpha.iter().zip(v).enumerate() {
        let mut pw = vj;
        for i in 0..k {
            g.set(i, j, pw);
            pw = field.mul(pw, a);
        }
    }
    Ok(g)
}

/// Twisted generator: row i is α^i except row h, which is α^h + η·α^(k−1+t).
pub fn trs_generator(field: &Field, params: &TwistedRsParams) -> Matrix {
    let (k, n) = (params.k, params.length());
    let mut g = Matrix::zeros(field, k, n);
    for (j, &a) in params.alpha.iter().enumerate() {
        for i in 0..k {
            let mut v = field.pow(a, i as u64);
            if i == params.h {
                let twist = field.mul(params.eta, field.pow(a, params.twist_degree() as u64));
                v = field.add(v, twist);
            }
            g.set(i, j, v);
        }
    }
    g
}

/// The k-th roots of unity `α_i = γ^((q−1)/k · i)`, i = 1..k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootsOfUnityBlock {
    field: Field,
    k: usize,
    points: Vec<Elem>,
}

impl RootsOfUnityBlock {
    pub fn new(field: &Field, k: usize) -> Result<Self, TrsError> {
        let order = field.order() as u64 - 1;
        if k == 0 || order % k as u64 != 0 {
            return Err(TrsError::NotADivisor { k, order });
        }
        let step = (order / k as u64) as i64;
        let points = (1..=k as i64).map(|i| field.gamma_pow(step * i)).collect();
        Ok(RootsOfUnityBlock { field: field.clone(), k, points })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[Elem] {
        &self.points
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The points scaled by `beta`.
    pub fn scaled(&self, beta: Elem) -> Vec<Elem> {
        self.points.iter().map(|&a| self.field.mul(beta, a)).collect()
    }
}

/// Shorthand for [`RootsOfUnityBlock::new`].
pub fn roots_of_unity_points(field: &Field, k: usize) -> Result<RootsOfUnityBlock, TrsError> {
    RootsOfUnityBlock::new(field, k)
}

/// `θ_f = Σ α_i^f`: k (as a field element) when k | f, else 0.
pub fn power_sum(block: &RootsOfUnityBlock, f: u64) -> Elem {
    let field = &block.field;
    let closed = if f % block.k as u64 == 0 { field.from_int(block.k as i64) } else { Elem::ZERO };
    debug_assert_eq!(
        closed,
        field.sum(block.points.iter().map(|&a| field.pow(a, f))),
        "closed-form power sum disagrees with direct summation (k = {}, f = {f})",
        block.k
    );
    closed
}

/// One block `C_β` (or `H_β`): rows `(βα_i)^j` for j < `dim`, with row `h`
/// hooked by `η·(βα_i)^(dim−1+t)`.
pub fn hooked_block(block: &RootsOfUnityBlock, beta: Elem, dim: usize, t: usize, h: usize, eta: Elem) -> Matrix {
    let f = &block.field;
    let pts = block.scaled(beta);
    let mut m = Matrix::zeros(f, dim, pts.len());
    for (c, &x) in pts.iter().enumerate() {
        for r in 0..dim {
            let mut v = f.pow(x, r as u64);
            if r == h {
                v = f.add(v, f.mul(eta, f.pow(x, (dim - 1 + t) as u64)));
            }
            m.set(r, c, v);
        }
    }
    m
}

/// A one-hull family member: the code plus the twisted parameters it was built from.
#[derive(Debug, Clone)]
pub struct OneHullCode {
    pub family: Family,
    pub params: TwistedRsParams,
    pub code: LinearCode,
}

/// Checks the family hypotheses against the field the points live in (order `s`).
pub(crate) fn check_family(family: Family, s: u64, sym: &str, k: usize, t: usize, h: usize, eta: Elem) -> Result<(), TrsError> {
    let order = s - 1;
    let divides = k > 0 && order % k as u64 == 0;
    match family {
        Family::Lemma31 => {
            if s % 2 != 0 {
                return Err(violation(format!("{sym} even")));
            }
            if !divides {
                return Err(violation(format!("k | {sym}−1")));
            }
            if k as u64 >= order {
                return Err(violation(format!("k < {sym}−1")));
            }
            if h == 0 {
                return Err(violation("h > 0"));
            }
            if h >= k {
                return Err(violation("h < k"));
            }
            if t == 0 {
                return Err(violation("0 < t"));
            }
            if t > k {
                return Err(violation("t ≤ n − k"));
            }
        }
        Family::Lemma32 => {
            if s % 2 == 0 {
                return Err(violation(format!("{sym} odd")));
            }
            if !divides {
                return Err(violation(format!("k | {sym}−1")));
            }
            if k <= 2 {
                return Err(violation("2 < k"));
            }
            if 2 * k as u64 >= order {
                return Err(violation(format!("k < ({sym}−1)/2")));
            }
            if h <= 1 {
                return Err(violation("h > 1"));
            }
            if h >= k - 1 {
                return Err(violation("h < k−1"));
            }
            if t == 0 {
                return Err(violation("0 < t"));
            }
            if t > k + 1 {
                return Err(violation("t ≤ n − (k−1)"));
            }
        }
    }
    if eta.is_zero() {
        return Err(violation("η ≠ 0"));
    }
    Ok(())
}

/// Builds a family member whose evaluation points lie in the subfield of
/// order `s` (s = q for the plain construction); η may be any nonzero
/// element of the full field.
pub fn construct_one_hull(
    family: Family,
    field: &Field,
    s: u64,
    k: usize,
    t: usize,
    h: usize,
    eta: Elem,
) -> Result<OneHullCode, TrsError> {
    let sym = if s == field.order() as u64 { "q" } else { "s" };
    check_family(family, s, sym, k, t, h, eta)?;
    let beta = field.subfield_generator(s)?;
    let block = RootsOfUnityBlock::new(field, k)?;
    let dim = family.code_dimension(k);
    let g = hooked_block(&block, Elem::ONE, dim, t, h, eta).hstack(&hooked_block(&block, beta, dim, t, h, eta))?;
    let mut alpha = block.points().to_vec();
    alpha.extend(block.scaled(beta));
    let params = TwistedRsParams::new(field, alpha, dim, t, h, eta)?;
    debug_assert_eq!(g, trs_generator(field, &params), "block layout disagrees with the twisted generator");
    let code = LinearCode::new(g)?;
    Ok(OneHullCode { family, params, code })
}

/// `[2k, k]` code over even q with generator `[C_1 : C_γ]`.
pub fn construct_lemma31(field: &Field, k: usize, t: usize, h: usize, eta: Elem) -> Result<LinearCode, TrsError> {
    Ok(construct_one_hull(Family::Lemma31, field, field.order() as u64, k, t, h, eta)?.code)
}

/// `[2k, k−1]` code over odd q with generator `[H_1 : H_γ]`.
pub fn construct_lemma32(field: &Field, k: usize, t: usize, h: usize, eta: Elem) -> Result<LinearCode, TrsError> {
    Ok(construct_one_hull(Family::Lemma32, field, field.order() as u64, k, t, h, eta)?.code)
}
