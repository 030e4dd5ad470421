//! One-column multipartition combinatorics: residues, dominant tableaux,
//! tableau enumeration by residue sequence, the degree statistic and graded
//! cell dimensions.
//!
//! A standard tableau of one-column shape is completely described by its
//! component word `c(1), ..., c(n)`: the k-th entry goes to the bottom of
//! column `c(k)`. Every word in `{1..l}^n` is standard, so shapes, prefix
//! shapes and residues all read off running column heights.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Quantum characteristic, level and multicharge.
///
/// The multicharge is kept as increasing canonical representatives
/// `0 <= kappa_1 < ... < kappa_l < e` with cyclic gaps of at least two
/// (adjacency-free), which forces `e >= 2l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlobParams {
    e: i64,
    kappa: Vec<i64>,
}

impl BlobParams {
    pub fn new(e: i64, kappa: Vec<i64>) -> Result<Self> {
        let l = kappa.len();
        if l < 2 {
            return Err(Error::InvalidParams("level must be at least 2".into()));
        }
        if e < 2 * l as i64 {
            return Err(Error::InvalidParams(format!(
                "e = {e} is too small: adjacency-free multicharges need e >= 2l = {}",
                2 * l
            )));
        }
        for &k in &kappa {
            if !(0..e).contains(&k) {
                return Err(Error::InvalidParams(format!(
                    "kappa entry {k} is not a canonical residue in 0..{e}"
                )));
            }
        }
        for w in kappa.windows(2) {
            if w[1] - w[0] < 2 {
                return Err(Error::InvalidParams(format!(
                    "multicharge {kappa:?} is not increasing adjacency-free: gap {} -> {}",
                    w[0], w[1]
                )));
            }
        }
        if kappa[0] + e - kappa[l - 1] < 2 {
            return Err(Error::InvalidParams(format!(
                "multicharge {kappa:?} violates the cyclic adjacency-free gap mod {e}"
            )));
        }
        Ok(Self { e, kappa })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    pub fn kappa(&self) -> &[i64] {
        &self.kappa
    }

    /// Residue of the box in row `r` of component `m` (both 1-based):
    /// `kappa_m + 1 - r` mod `e`.
    pub fn residue(&self, r: usize, m: usize) -> i64 {
        debug_assert!(r >= 1 && (1..=self.level()).contains(&m));
        (self.kappa[m - 1] + 1 - r as i64).rem_euclid(self.e)
    }
}

/// An l-tuple of column heights summing to `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneColMultipartition {
    heights: Vec<usize>,
}

impl OneColMultipartition {
    pub fn new(heights: Vec<usize>) -> Self {
        Self { heights }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn level(&self) -> usize {
        self.heights.len()
    }

    pub fn size(&self) -> usize {
        self.heights.iter().sum()
    }

    /// Dominance order by box counting: `self <= other` when, walking all
    /// box slots in lexicographic (row-major) order, `other` has filled at
    /// least as many of them as `self` at every point.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        if self.level() != other.level() {
            return Err(Error::LevelMismatch { expected: self.level(), got: other.level() });
        }
        let max_row = self
            .heights
            .iter()
            .chain(other.heights.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let (mut c_self, mut c_other) = (0usize, 0usize);
        for r in 1..=max_row {
            for m in 0..self.level() {
                c_self += usize::from(self.heights[m] >= r);
                c_other += usize::from(other.heights[m] >= r);
                if c_other < c_self {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for OneColMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.heights.iter().map(|h| format!("1^{h}")).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Debug for OneColMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.heights)
    }
}

/// Standard one-column tableau as its component word (1-based components).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnTableau {
    level: usize,
    word: Vec<usize>,
}

impl ColumnTableau {
    pub fn new(level: usize, word: Vec<usize>) -> Result<Self> {
        for &c in &word {
            if c < 1 || c > level {
                return Err(Error::InvalidParams(format!(
                    "component {c} out of range 1..={level}"
                )));
            }
        }
        Ok(Self { level, word })
    }

    pub fn empty(level: usize) -> Self {
        Self { level, word: Vec::new() }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn shape(&self) -> OneColMultipartition {
        let mut heights = vec![0usize; self.level];
        for &c in &self.word {
            heights[c - 1] += 1;
        }
        OneColMultipartition::new(heights)
    }
}

impl fmt::Display for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.word.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("")
        )
    }
}

impl fmt::Debug for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}", self.word)
    }
}

/// The dominant tableau: entries fill the boxes in lexicographic
/// (row-major) dominance order.
pub fn dominant_tableau(lambda: &OneColMultipartition) -> ColumnTableau {
    let l = lambda.level();
    let max_row = lambda.heights().iter().copied().max().unwrap_or(0);
    let mut word = Vec::with_capacity(lambda.size());
    for r in 1..=max_row {
        for m in 1..=l {
            if lambda.heights()[m - 1] >= r {
                word.push(m);
            }
        }
    }
    ColumnTableau { level: l, word }
}

/// Residues of the boxes receiving `1, ..., n` in order.
pub fn residue_sequence(t: &ColumnTableau, params: &BlobParams) -> Vec<i64> {
    let mut heights = vec![0usize; t.level()];
    let mut out = Vec::with_capacity(t.size());
    for &m in t.word() {
        heights[m - 1] += 1;
        out.push(params.residue(heights[m - 1], m));
    }
    out
}

/// Degree of a standard tableau: for each `k`, count addable minus removable
/// boxes of the prefix shape that carry the residue of `k`'s box and are
/// strictly dominated by it.
pub fn tableau_degree(t: &ColumnTableau, params: &BlobParams) -> i64 {
    let l = t.level();
    let mut heights = vec![0usize; l];
    let mut deg = 0i64;
    for &m in t.word() {
        heights[m - 1] += 1;
        let row = heights[m - 1];
        let res = params.residue(row, m);
        for c in 1..=l {
            let h = heights[c - 1];
            // addable box (h+1, c)
            if params.residue(h + 1, c) == res && dominates((row, m), (h + 1, c)) {
                deg += 1;
            }
            // removable box (h, c)
            if h >= 1 && params.residue(h, c) == res && dominates((row, m), (h, c)) {
                deg -= 1;
            }
        }
    }
    deg
}

/// Strict box dominance: lexicographically smaller means more dominant.
fn dominates(a: (usize, usize), b: (usize, usize)) -> bool {
    a < b
}

pub const DEFAULT_ENUM_CAP: u128 = 1 << 20;

/// All standard tableaux whose residue sequence equals the dominant one of
/// `lambda`, in lexicographic order of component words. Branches explore
/// components in increasing order; the result always contains the dominant
/// tableau itself.
pub fn enumerate_std_same_residue(
    lambda: &OneColMultipartition,
    params: &BlobParams,
    cap: u128,
) -> Result<Vec<ColumnTableau>> {
    let target = residue_sequence(&dominant_tableau(lambda), params);
    let l = lambda.level();
    let n = lambda.size();
    let mut out = Vec::new();
    // explicit stack of (next position k, heights); branch components pushed
    // in decreasing order so lexicographically smaller words pop first
    let mut stack: Vec<(usize, Vec<usize>, Vec<usize>)> =
        vec![(0, vec![0; l], Vec::with_capacity(n))];
    while let Some((k, heights, word)) = stack.pop() {
        if k == n {
            out.push(ColumnTableau { level: l, word });
            if out.len() as u128 > cap {
                return Err(Error::CapExceeded { needed: out.len() as u128, cap });
            }
            continue;
        }
        let res = target[k];
        for m in (1..=l).rev() {
            if params.residue(heights[m - 1] + 1, m) == res {
                let mut h2 = heights.clone();
                h2[m - 1] += 1;
                let mut w2 = word.clone();
                w2.push(m);
                stack.push((k + 1, h2, w2));
            }
        }
    }
    Ok(out)
}

/// Graded dimension of one cell of the idempotent truncation at `lambda`:
/// the sum of `v^{deg t}` over tableaux of shape `mu` with the dominant
/// residue sequence. Zero polynomial when no such tableau exists.
pub fn graded_cell_dim(
    lambda: &OneColMultipartition,
    mu: &OneColMultipartition,
    params: &BlobParams,
    cap: u128,
) -> Result<LaurentPoly> {
    Ok(graded_cell_dims_all(lambda, params, cap)?
        .remove(mu)
        .unwrap_or_default())
}

/// Graded cell dimensions for every shape reached by the enumeration,
/// from a single pass.
pub fn graded_cell_dims_all(
    lambda: &OneColMultipartition,
    params: &BlobParams,
    cap: u128,
) -> Result<BTreeMap<OneColMultipartition, LaurentPoly>> {
    let mut out: BTreeMap<OneColMultipartition, LaurentPoly> = BTreeMap::new();
    for t in enumerate_std_same_residue(lambda, params, cap)? {
        let deg = tableau_degree(&t, params);
        out.entry(t.shape())
            .or_default()
            .add_term(deg, &num_bigint::BigInt::from(1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_params() -> BlobParams {
        BlobParams::new(8, vec![0, 2, 4, 6]).unwrap()
    }

    pub(crate) fn example_lambda() -> OneColMultipartition {
        OneColMultipartition::new(vec![1, 13, 1, 8])
    }

    #[test]
    fn params_validation() {
        assert!(BlobParams::new(8, vec![0, 2, 4, 6]).is_ok());
        assert!(BlobParams::new(5, vec![1, 4]).is_ok());
        assert!(BlobParams::new(4, vec![0, 3]).is_err()); // cyclic gap 1
        assert!(BlobParams::new(8, vec![0, 1, 4, 6]).is_err()); // adjacent
        assert!(BlobParams::new(5, vec![0, 2, 4]).is_err()); // e < 2l
        assert!(BlobParams::new(8, vec![2, 0, 4, 6]).is_err()); // not increasing
    }

    #[test]
    fn residue_formula() {
        let p = example_params();
        assert_eq!(p.residue(1, 1), 0);
        assert_eq!(p.residue(2, 2), 1);
        let q = BlobParams::new(5, vec![1, 4]).unwrap();
        assert_eq!(q.residue(3, 2), 2);
    }

    #[test]
    fn dominant_tableau_fills_by_dominance() {
        let t = dominant_tableau(&example_lambda());
        // row 1 left to right, then 5 in component 2, 6 in component 4, ...
        assert_eq!(&t.word()[..6], &[1, 2, 3, 4, 2, 4]);
        let counts = t.shape();
        assert_eq!(counts.heights(), &[1, 13, 1, 8]);

        let empty = dominant_tableau(&OneColMultipartition::new(vec![0, 0]));
        assert_eq!(empty.size(), 0);

        let two = dominant_tableau(&OneColMultipartition::new(vec![4, 8]));
        assert_eq!(two.word(), &[1, 2, 1, 2, 1, 2, 1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn residue_sequences_of_worked_example() {
        let p = example_params();
        let i_lambda = residue_sequence(&dominant_tableau(&example_lambda()), &p);
        assert_eq!(
            i_lambda,
            vec![0, 2, 4, 6, 1, 5, 0, 4, 7, 3, 6, 2, 5, 1, 4, 0, 3, 7, 2, 1, 0, 7, 6]
        );
        let mu = OneColMultipartition::new(vec![5, 5, 6, 7]);
        let i_mu = residue_sequence(&dominant_tableau(&mu), &p);
        assert_eq!(
            i_mu,
            vec![0, 2, 4, 6, 7, 1, 3, 5, 6, 0, 2, 4, 5, 7, 1, 3, 4, 6, 0, 2, 7, 1, 0]
        );
        assert!(residue_sequence(&ColumnTableau::empty(4), &p).is_empty());
    }

    /// The tableau displayed alongside the worked example: shape (5,5,6,7),
    /// same residue sequence as lambda, degree six.
    pub(crate) fn example_degree_six_tableau() -> ColumnTableau {
        ColumnTableau::new(
            4,
            vec![1, 2, 3, 4, 2, 4, 2, 4, 1, 3, 1, 3, 1, 3, 1, 3, 4, 2, 4, 4, 4, 3, 2],
        )
        .unwrap()
    }

    #[test]
    fn degree_of_worked_example_tableau() {
        let p = example_params();
        let t = example_degree_six_tableau();
        assert_eq!(
            residue_sequence(&t, &p),
            residue_sequence(&dominant_tableau(&example_lambda()), &p)
        );
        assert_eq!(tableau_degree(&t, &p), 6);
    }

    #[test]
    fn dominant_tableaux_have_degree_zero() {
        let p = example_params();
        for heights in [vec![1, 13, 1, 8], vec![5, 5, 6, 7], vec![0, 3, 0, 1], vec![2, 2, 2, 2]] {
            let lam = OneColMultipartition::new(heights);
            assert_eq!(tableau_degree(&dominant_tableau(&lam), &p), 0, "{lam}");
        }
        assert_eq!(tableau_degree(&ColumnTableau::empty(4), &p), 0);
    }

    #[test]
    fn enumeration_of_worked_example() {
        let p = example_params();
        let lam = example_lambda();
        let all = enumerate_std_same_residue(&lam, &p, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all.len(), 64);
        let target = residue_sequence(&dominant_tableau(&lam), &p);
        for t in &all {
            assert_eq!(residue_sequence(t, &p), target);
        }
        assert!(all.contains(&dominant_tableau(&lam)));
        // deterministic lexicographic order
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        // the branch at k = 9 offers the boxes (2,1) and (4,2): component 1
        // at height 1 and component 2 at height 3 both carry residue 7
        let heights_at_8 = [1usize, 3, 1, 3];
        assert_eq!(p.residue(heights_at_8[0] + 1, 1), 7);
        assert_eq!(p.residue(heights_at_8[1] + 1, 2), 7);
        assert_eq!(target[8], 7);
    }

    #[test]
    fn fundamental_alcove_shape_has_single_tableau() {
        let p = example_params();
        let lam = OneColMultipartition::new(vec![1, 1, 1, 1]);
        let all = enumerate_std_same_residue(&lam, &p, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all, vec![dominant_tableau(&lam)]);
    }

    #[test]
    fn enumeration_cap() {
        let p = example_params();
        let lam = example_lambda();
        assert!(matches!(
            enumerate_std_same_residue(&lam, &p, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cell_dim_examples() {
        let p = example_params();
        let lam = example_lambda();
        assert_eq!(
            graded_cell_dim(&lam, &lam, &p, DEFAULT_ENUM_CAP).unwrap(),
            LaurentPoly::one()
        );
        // shape not reached at all
        let far = OneColMultipartition::new(vec![23, 0, 0, 0]);
        assert!(graded_cell_dim(&lam, &far, &p, DEFAULT_ENUM_CAP).unwrap().is_zero());
        // bucketed dimensions sum to the enumeration size at v = 1
        let dims = graded_cell_dims_all(&lam, &p, DEFAULT_ENUM_CAP).unwrap();
        let total: num_bigint::BigInt = dims.values().map(|d| d.eval_at_one()).sum();
        assert_eq!(total, num_bigint::BigInt::from(64));
    }

    #[test]
    fn cell_dim_degree_zero_count() {
        // kappa = (1,4), e = 5, lambda = (1^2, 1^28): the shape whose alcove
        // element has length one is reached by exactly two degree-zero
        // tableaux.
        let p = BlobParams::new(5, vec![1, 4]).unwrap();
        let lam = OneColMultipartition::new(vec![2, 28]);
        let nu = OneColMultipartition::new(vec![12, 18]);
        let dim = graded_cell_dim(&lam, &nu, &p, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(dim.eval_at_zero(), num_bigint::BigInt::from(2));
    }

    #[test]
    fn dominance_order() {
        let lam = example_lambda();
        assert!(lam.dominance_leq(&lam).unwrap());
        let mu = OneColMultipartition::new(vec![5, 5, 6, 7]);
        // lambda has the same residue sequence reachable shapes above it
        assert!(lam.dominance_leq(&mu).unwrap());
        assert!(!mu.dominance_leq(&lam).unwrap());
        // size mismatch is an error
        let small = OneColMultipartition::new(vec![1, 1, 1, 1]);
        assert!(lam.dominance_leq(&small).is_err());
    }

    #[test]
    fn dominance_incomparable_pair() {
        // (1,4,1) fills slot (1,2) before (3,0,3) does, but falls behind at
        // slot (3,1); the two shapes are incomparable
        let a = OneColMultipartition::new(vec![1, 4, 1]);
        let b = OneColMultipartition::new(vec![3, 0, 3]);
        let ab = a.dominance_leq(&b).unwrap();
        let ba = b.dominance_leq(&a).unwrap();
        assert!(!ab && !ba, "expected incomparable, got {ab}/{ba}");
    }

    #[test]
    fn dominance_brute_force_antisymmetry() {
        // over all of P^3_1(6): dominance is reflexive and antisymmetric
        let mut shapes = Vec::new();
        for a in 0..=6usize {
            for b in 0..=(6 - a) {
                shapes.push(OneColMultipartition::new(vec![a, b, 6 - a - b]));
            }
        }
        for x in &shapes {
            assert!(x.dominance_leq(x).unwrap());
            for y in &shapes {
                if x != y {
                    assert!(
                        !(x.dominance_leq(y).unwrap() && y.dominance_leq(x).unwrap()),
                        "{x} and {y} mutually dominate"
                    );
                }
            }
        }
    }
}
