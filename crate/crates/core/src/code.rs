//! Linear codes given by a full-rank generator matrix, and the checks run on
//! them: dual, hull, MDS, minimum distance, Schur square and the one-sided
//! non-GRS certificate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Elem, Field, FieldSpec};
use crate::linalg::{LinalgError, Matrix};

/// Largest `q^k` that [`LinearCode::min_distance_bruteforce`] will enumerate.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// Largest `q^k` enumerated automatically by [`analyze`] in [`DistanceMode::Auto`].
pub const AUTO_ENUMERATION_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator has {rows} rows but rank {rank}")]
    RankDeficient { rows: usize, rank: usize },
    #[error("q^k = {q}^{k} codewords exceeds the enumeration limit 2^24")]
    TooLargeToEnumerate { q: u32, k: usize },
    #[error("the zero code has no minimum distance")]
    EmptyCode,
    #[error("invalid monomial transform: {0}")]
    BadTransform(String),
    #[error("transform of length {transform} applied to a code of length {code}")]
    LengthMismatch { transform: usize, code: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An `[n, k]` code over a field, stored by a k×n generator of rank k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<LinearCode, CodeError> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(CodeError::RankDeficient { rows: generator.rows(), rank });
        }
        Ok(LinearCode { generator })
    }

    /// The code spanned by the rows of `m`, whatever their rank.
    pub fn from_spanning(m: &Matrix) -> LinearCode {
        LinearCode { generator: m.row_basis() }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { generator: Matrix::zeros(field, 0, n) }
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Whether both codes have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.length() == other.length()
            && self.generator.row_basis() == other.generator.row_basis()
    }

    /// The `[n, n-k]` dual code.
    pub fn dual(&self) -> LinearCode {
        LinearCode { generator: self.generator.null_space() }
    }

    /// `k - rank(G G^T)`.
    ///
    /// Debug builds also compute the hull directly and assert agreement.
    pub fn hull_dimension(&self) -> usize {
        let dim = self.hull_dimension_by_rank();
        debug_assert_eq!(dim, self.hull_basis().rows(), "rank formula disagrees with C ∩ C⊥");
        dim
    }

    /// The rank formula alone, without the debug cross-check.
    pub fn hull_dimension_by_rank(&self) -> usize {
        let g = &self.generator;
        let ggt = g.mul(&g.transpose()).expect("G and G^T are conformable");
        self.dimension() - ggt.rank()
    }

    /// Basis of C ∩ C⊥ computed as a row-space intersection.
    pub fn hull_basis(&self) -> Matrix {
        self.generator
            .row_space_intersection(self.dual().generator())
            .expect("a code and its dual share length and field")
    }

    /// True iff every k×k minor of the generator is nonzero.
    pub fn is_mds(&self) -> bool {
        let (k, n) = self.generator.shape();
        if k == 0 || k == n {
            return true;
        }
        let mut cols: Vec<usize> = (0..k).collect();
        loop {
            let minor = self.generator.select_columns(&cols);
            if minor.det().expect("square minor").is_zero() {
                return false;
            }
            if !next_combination(&mut cols, n) {
                return true;
            }
        }
    }

    fn enumeration_guard(&self) -> Result<(), CodeError> {
        let q = self.field().order();
        let k = self.dimension();
        let size = (q as u64).checked_pow(k as u32);
        match size {
            Some(s) if s <= ENUMERATION_LIMIT => Ok(()),
            _ => Err(CodeError::TooLargeToEnumerate { q, k }),
        }
    }

    /// Minimum weight over all nonzero codewords, by enumeration.
    ///
    /// Only messages whose first nonzero coordinate is 1 are visited, since
    /// scalar multiples share a weight.
    pub fn min_distance_bruteforce(&self) -> Result<usize, CodeError> {
        self.enumeration_guard()?;
        if self.dimension() == 0 {
            return Err(CodeError::EmptyCode);
        }
        let mut best = usize::MAX;
        self.for_each_codeword(true, |w| {
            let wt = w.iter().filter(|x| !x.is_zero()).count();
            best = best.min(wt);
        });
        Ok(best)
    }

    /// Number of codewords of each weight 0..=n, by full enumeration.
    pub fn weight_distribution(&self) -> Result<Vec<u64>, CodeError> {
        self.enumeration_guard()?;
        let mut dist = vec![0u64; self.length() + 1];
        dist[0] = 1;
        if self.dimension() > 0 {
            self.for_each_codeword(false, |w| {
                dist[w.iter().filter(|x| !x.is_zero()).count()] += 1;
            });
        }
        Ok(dist)
    }

    /// Visits nonzero codewords: all of them, or one per projective class.
    fn for_each_codeword(&self, projective: bool, mut visit: impl FnMut(&[Elem])) {
        let f = self.field();
        let q = f.order() as usize;
        let (k, n) = self.generator.shape();
        let elems: Vec<Elem> = f.elements().collect();
        // scaled[j][c] = elems[c] * row_j
        let scaled: Vec<Vec<Vec<Elem>>> = (0..k)
            .map(|j| {
                let row = self.generator.row(j);
                elems.iter().map(|&c| row.iter().map(|&x| f.mul(c, x)).collect()).collect()
            })
            .collect();
        // stack[d] holds the partial sum once the lead row and d free rows are added.
        let mut stack = vec![vec![Elem::ZERO; n]; k + 1];
        for lead in 0..k {
            let free = k - lead - 1;
            let lead_coeffs = if projective { 1..2 } else { 1..q };
            for lc in lead_coeffs {
                stack[0].clone_from(&scaled[lead][lc]);
                let mut digits = vec![0usize; free];
                let mut dirty = 0;
                loop {
                    for d in dirty..free {
                        let (lo, hi) = stack.split_at_mut(d + 1);
                        let row = &scaled[lead + 1 + d][digits[d]];
                        for ((o, &a), &b) in hi[0].iter_mut().zip(&lo[d]).zip(row) {
                            *o = f.add(a, b);
                        }
                    }
                    visit(&stack[free]);
                    let mut pos = free;
                    let done = loop {
                        if pos == 0 {
                            break true;
                        }
                        pos -= 1;
                        digits[pos] += 1;
                        if digits[pos] < q {
                            break false;
                        }
                        digits[pos] = 0;
                    };
                    if done {
                        break;
                    }
                    dirty = pos;
                }
            }
        }
    }

    /// Span of all componentwise products of pairs of generator rows.
    pub fn schur_square(&self) -> LinearCode {
        let f = self.field();
        let (k, n) = self.generator.shape();
        let mut products = Vec::with_capacity(k * (k + 1) / 2);
        for i in 0..k {
            for j in i..k {
                let (a, b) = (self.generator.row(i), self.generator.row(j));
                products.push(a.iter().zip(b).map(|(&x, &y)| f.mul(x, y)).collect::<Vec<_>>());
            }
        }
        if products.is_empty() {
            return LinearCode::zero(f, n);
        }
        LinearCode::from_spanning(&Matrix::from_rows(f, &products).expect("rows share length"))
    }

    /// `CertifiedNonGRS` iff dim(C∗C) > 2k − 1, checked only when 2k − 1 ≤ n.
    pub fn non_rs_certificate(&self) -> NonRsCertificate {
        let (k, n) = self.generator.shape();
        if k == 0 || 2 * k - 1 > n {
            return NonRsCertificate::Inconclusive;
        }
        certificate_from_schur(k, n, self.schur_square().dimension())
    }

    /// The code generated by `G·M`.
    pub fn apply_monomial(&self, m: &MonomialTransform) -> Result<LinearCode, CodeError> {
        let (k, n) = self.generator.shape();
        if m.len() != n {
            return Err(CodeError::LengthMismatch { transform: m.len(), code: n });
        }
        let f = self.field();
        let mut out = Matrix::zeros(f, k, n);
        for r in 0..k {
            for c in 0..n {
                out.set(r, m.permutation[c], f.mul(m.scales[c], self.generator.get(r, c)));
            }
        }
        Ok(LinearCode { generator: out })
    }
}

fn certificate_from_schur(k: usize, n: usize, schur: usize) -> NonRsCertificate {
    if k > 0 && 2 * k - 1 <= n && schur > 2 * k - 1 {
        NonRsCertificate::CertifiedNonGRS
    } else {
        NonRsCertificate::Inconclusive
    }
}

/// Advances `cols` to the next k-subset of 0..n in lexicographic order.
pub(crate) fn next_combination(cols: &mut [usize], n: usize) -> bool {
    let k = cols.len();
    let Some(i) = (0..k).rev().find(|&i| cols[i] < n - k + i) else {
        return false;
    };
    cols[i] += 1;
    for j in i + 1..k {
        cols[j] = cols[j - 1] + 1;
    }
    true
}

/// Column `i` of the generator moves to position `permutation[i]`, scaled by `scales[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTransform {
    permutation: Vec<usize>,
    scales: Vec<Elem>,
}

impl MonomialTransform {
    pub fn new(permutation: Vec<usize>, scales: Vec<Elem>) -> Result<MonomialTransform, CodeError> {
        let n = permutation.len();
        if scales.len() != n {
            return Err(CodeError::BadTransform(format!(
                "{} scales for {n} positions",
                scales.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &permutation {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(CodeError::BadTransform("permutation is not a bijection".into()));
            }
        }
        if scales.iter().any(|s| s.is_zero()) {
            return Err(CodeError::BadTransform("zero scale factor".into()));
        }
        Ok(MonomialTransform { permutation, scales })
    }

    pub fn identity(n: usize) -> MonomialTransform {
        MonomialTransform { permutation: (0..n).collect(), scales: vec![Elem::ONE; n] }
    }

    pub fn scaling(scales: Vec<Elem>) -> Result<MonomialTransform, CodeError> {
        MonomialTransform::new((0..scales.len()).collect(), scales)
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    /// The n×n monomial matrix M with `M[i][permutation[i]] = scales[i]`.
    pub fn to_matrix(&self, field: &Field) -> Matrix {
        let n = self.len();
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, self.permutation[i], self.scales[i]);
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NonRsCertificate {
    CertifiedNonGRS,
    Inconclusive,
}

impl std::fmt::Display for NonRsCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NonRsCertificate::CertifiedNonGRS => "CertifiedNonGRS",
            NonRsCertificate::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceSource {
    /// d = n − k + 1 read off the all-minors MDS certificate.
    MdsCertificate,
    Enumeration,
}

/// Construction parameters echoed into a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub t: usize,
    pub h: usize,
    pub eta: Elem,
    pub alpha: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    pub hull_dimension: usize,
    pub is_mds: bool,
    pub min_distance: Option<usize>,
    pub min_distance_source: Option<DistanceSource>,
    pub schur_dimension: usize,
    pub non_rs_certificate: NonRsCertificate,
    pub params: Option<ReportParams>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistanceMode {
    /// Only the MDS certificate can supply a distance.
    Skip,
    /// MDS certificate, else enumeration when q^k ≤ 2^20.
    #[default]
    Auto,
    /// Always enumerate; fails when q^k > 2^24.
    Force,
}

pub fn analyze(code: &LinearCode, mode: DistanceMode, params: Option<ReportParams>) -> Result<CodeReport, CodeError> {
    let (n, k) = (code.length(), code.dimension());
    let is_mds = code.is_mds();
    let q = code.field().order() as u64;
    let enumerable = k > 0 && q.checked_pow(k as u32).is_some_and(|s| s <= AUTO_ENUMERATION_LIMIT);
    let (min_distance, source) = match mode {
        DistanceMode::Force => (Some(code.min_distance_bruteforce()?), Some(DistanceSource::Enumeration)),
        _ if is_mds && k > 0 => (Some(n - k + 1), Some(DistanceSource::MdsCertificate)),
        DistanceMode::Auto if enumerable => {
            (Some(code.min_distance_bruteforce()?), Some(DistanceSource::Enumeration))
        }
        _ => (None, None),
    };
    let schur = code.schur_square().dimension();
    let certificate = certificate_from_schur(k, n, schur);
    Ok(CodeReport {
        field: code.field().spec(),
        n,
        k,
        hull_dimension: code.hull_dimension(),
        is_mds,
        min_distance,
        min_distance_source: source,
        schur_dimension: schur,
        non_rs_certificate: certificate,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(field: &Field, rows: usize, cols: usize, vals: &[u32]) -> LinearCode {
        LinearCode::new(Matrix::from_values(field, rows, cols, vals).unwrap()).unwrap()
    }

    #[test]
    fn rank_deficient_generator_is_rejected() {
        let f = Field::gf(2, 1).unwrap();
        let m = Matrix::from_values(&f, 2, 2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(LinearCode::new(m.clone()).unwrap_err(), CodeError::RankDeficient { rows: 2, rank: 1 });
        assert_eq!(LinearCode::from_spanning(&m).dimension(), 1);
    }

    #[test]
    fn duals_of_toy_codes() {
        let f = Field::gf(2, 1).unwrap();
        let whole = code(&f, 2, 2, &[1, 0, 0, 1]);
        assert_eq!(whole.dual().dimension(), 0);
        let rep = code(&f, 1, 2, &[1, 1]);
        assert!(rep.dual().same_code(&rep));
        assert!(rep.dual().dual().same_code(&rep));
    }

    #[test]
    fn hull_of_toy_codes() {
        let f = Field::gf(2, 1).unwrap();
        let lcd = code(&f, 1, 2, &[1, 0]);
        assert_eq!(lcd.hull_dimension(), 0);
        assert_eq!(lcd.hull_basis().rows(), 0);
        let sd = code(&f, 1, 2, &[1, 1]);
        assert_eq!(sd.hull_dimension(), 1);
        assert!(LinearCode::from_spanning(&sd.hull_basis()).same_code(&sd));
    }

    #[test]
    fn mds_and_distance_of_toy_codes() {
        let f = Field::gf(2, 2).unwrap();
        let whole = LinearCode::new(Matrix::identity(&f, 3)).unwrap();
        assert!(whole.is_mds());
        assert_eq!(whole.min_distance_bruteforce().unwrap(), 1);
        let rep = code(&f, 1, 5, &[1, 1, 1, 1, 1]);
        assert_eq!(rep.min_distance_bruteforce().unwrap(), 5);
        assert!(rep.is_mds());
        let not_mds = code(&f, 2, 3, &[1, 0, 1, 0, 1, 0]);
        assert!(!not_mds.is_mds());
        assert_eq!(not_mds.min_distance_bruteforce().unwrap(), 1);
        assert_eq!(LinearCode::zero(&f, 3).min_distance_bruteforce().unwrap_err(), CodeError::EmptyCode);
    }

    #[test]
    fn enumeration_guard() {
        let f = Field::gf(2, 8).unwrap();
        let g = Matrix::identity(&f, 4).hstack(&Matrix::identity(&f, 4)).unwrap();
        let c = LinearCode::new(g).unwrap();
        assert_eq!(c.min_distance_bruteforce().unwrap_err(), CodeError::TooLargeToEnumerate { q: 256, k: 4 });
        assert!(analyze(&c, DistanceMode::Force, None).is_err());
        let r = analyze(&c, DistanceMode::Auto, None).unwrap();
        assert_eq!(r.min_distance, None);
    }

    #[test]
    fn weight_distribution_counts_every_word() {
        let f = Field::gf(3, 1).unwrap();
        let c = code(&f, 2, 4, &[1, 0, 1, 1, 0, 1, 1, 2]);
        let d = c.weight_distribution().unwrap();
        assert_eq!(d.iter().sum::<u64>(), 9);
        // Ternary tetracode: every nonzero word has weight 3.
        assert_eq!(d, vec![1, 0, 0, 8, 0]);
    }

    #[test]
    fn schur_square_of_one_dimensional_code() {
        let f = Field::gf(2, 4).unwrap();
        let c = code(&f, 1, 4, &[3, 5, 7, 9]);
        assert_eq!(c.schur_square().dimension(), 1);
        // k = n short-circuits to Inconclusive.
        let whole = LinearCode::new(Matrix::identity(&f, 3)).unwrap();
        assert_eq!(whole.non_rs_certificate(), NonRsCertificate::Inconclusive);
    }

    #[test]
    fn monomial_transform_validation() {
        let f = Field::gf(3, 1).unwrap();
        assert!(MonomialTransform::new(vec![0, 0], vec![Elem::ONE; 2]).is_err());
        assert!(MonomialTransform::new(vec![0, 2], vec![Elem::ONE; 2]).is_err());
        assert!(MonomialTransform::new(vec![1, 0], vec![Elem::ONE, Elem::ZERO]).is_err());
        assert!(MonomialTransform::new(vec![1, 0], vec![Elem::ONE]).is_err());
        let c = code(&f, 1, 3, &[1, 2, 0]);
        let t = MonomialTransform::identity(2);
        assert_eq!(c.apply_monomial(&t).unwrap_err(), CodeError::LengthMismatch { transform: 2, code: 3 });
        let t = MonomialTransform::new(vec![2, 0, 1], vec![f.from_int(2), Elem::ONE, f.from_int(2)]).unwrap();
        let moved = c.apply_monomial(&t).unwrap();
        let via_matrix = c.generator().mul(&t.to_matrix(&f)).unwrap();
        assert_eq!(moved.generator(), &via_matrix);
        assert!(c.apply_monomial(&MonomialTransform::identity(3)).unwrap().same_code(&c));
    }

    #[test]
    fn combinations_enumerate_binomial_count() {
        let mut cols = vec![0, 1, 2];
        let mut count = 1;
        while next_combination(&mut cols, 6) {
            count += 1;
        }
        assert_eq!(count, 20);
    }
}
