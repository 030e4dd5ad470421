//! The level-2 specialization: tableaux as paths in the Pascal triangle.
//!
//! A one-column bipartition tableau walks right (component 1) or left
//! (component 2) one step per entry; hyperplanes become the vertical lines
//! at weights `kappa_1 - kappa_2 + m e`. The walls of the fundamental
//! alcove carry the generators: `s` on the left wall, `t` on the right, so
//! alcoves to the left of the fundamental one are labelled `sts...`.
//!
//! This picture gives a linear-time degree formula, the hook algorithm for
//! `d_t`, the bijection from degree-zero cells to two-column partitions,
//! and the graded-decomposition-number recursion seeded by Temperley-Lieb
//! decomposition numbers.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::alcove::{hyperplane_sequence, is_regular, same_orbit, w_of};
use crate::error::{Error, Result};
use crate::hecke::{f_p, is_prime};
use crate::laurent::LaurentPoly;
use crate::tableaux::{
    dominant_tableau, enumerate_std_same_residue, graded_cell_dims_all, residue_sequence,
    tableau_degree, BlobParams, ColumnTableau, OneColMultipartition,
};
use crate::weyl::DihedralForm;

/// Steps of the path of a level-2 tableau: `+1` right, `-1` left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PascalPath {
    steps: Vec<i8>,
}

impl PascalPath {
    pub fn from_tableau(t: &ColumnTableau) -> Result<Self> {
        if t.level() != 2 {
            return Err(Error::LevelMismatch { expected: 2, got: t.level() });
        }
        Ok(Self {
            steps: t.word().iter().map(|&c| if c == 1 { 1 } else { -1 }).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    /// Weight of the vertex at level `k` (`0 <= k <= n`).
    pub fn weight_at(&self, k: usize) -> i64 {
        self.steps[..k].iter().map(|&s| s as i64).sum()
    }

    /// All vertex weights, levels `0..=n`.
    pub fn weights(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut w = 0i64;
        out.push(w);
        for &s in &self.steps {
            w += s as i64;
            out.push(w);
        }
        out
    }
}

fn check_level2(params: &BlobParams) -> Result<()> {
    if params.level() != 2 {
        return Err(Error::LevelMismatch { expected: 2, got: params.level() });
    }
    Ok(())
}

/// Left wall position of the fundamental alcove: `kappa_1 - kappa_2`.
fn left_wall(params: &BlobParams) -> i64 {
    params.kappa()[0] - params.kappa()[1]
}

/// The dihedral form of `w_lambda`.
pub fn w_dihedral(lambda: &OneColMultipartition, params: &BlobParams) -> Result<DihedralForm> {
    check_level2(params)?;
    w_of(lambda, params)?.dihedral_form()
}

/// First level at which the dominant path touches a hyperplane:
/// `2 m - (kappa_1 - kappa_2)` when the first column is the short one, and
/// `2 m + (kappa_1 - kappa_2) + e` otherwise.
pub fn f_lambda(lambda: &OneColMultipartition, params: &BlobParams) -> Result<usize> {
    check_level2(params)?;
    if !is_regular(lambda, params)? {
        return Err(Error::NotRegular(format!("{lambda} lies on a hyperplane")));
    }
    if w_of(lambda, params)?.is_identity() {
        return Err(Error::NotApplicable(format!(
            "{lambda} lies in the fundamental alcove; its path never touches a hyperplane"
        )));
    }
    let (a1, a2) = (lambda.heights()[0] as i64, lambda.heights()[1] as i64);
    let m = a1.min(a2);
    let f = if m == a1 {
        2 * m - left_wall(params)
    } else {
        2 * m + left_wall(params) + params.e()
    };
    debug_assert!(f >= 1);
    Ok(f as usize)
}

/// Checks the three path conditions equivalent to `i^t = i^lambda`:
/// coincide with the dominant path up to its first wall contact, then make
/// exactly the same number of wall-to-wall steps, then finish in a straight
/// line.
pub fn wall_to_wall_check(
    t: &ColumnTableau,
    lambda: &OneColMultipartition,
    params: &BlobParams,
) -> Result<bool> {
    check_level2(params)?;
    if t.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: t.size(), right: lambda.size() });
    }
    let r = hyperplane_sequence(lambda, params)?.len();
    let dom = dominant_tableau(lambda);
    if r == 0 {
        return Ok(t == &dom);
    }
    let f = f_lambda(lambda, params)?;
    let e = params.e() as usize;
    let path = PascalPath::from_tableau(t)?;
    let dom_path = PascalPath::from_tableau(&dom)?;
    let steps = path.steps();
    // (1) coincide before the first contact
    if steps[..f] != dom_path.steps()[..f] {
        return Ok(false);
    }
    // (2) r - 1 straight runs of length e, wall to wall
    for b in 0..r.saturating_sub(1) {
        let run = &steps[f + b * e..f + (b + 1) * e];
        if run.iter().any(|&s| s != run[0]) {
            return Ok(false);
        }
    }
    // (3) straight line after the last contact
    let tail = &steps[f + (r - 1) * e..];
    debug_assert!(!tail.is_empty(), "regular shapes end strictly inside an alcove");
    Ok(tail.iter().all(|&s| s == tail[0]))
}

/// Which hook to pick when several reduce the area.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookStrategy {
    HighestFirst,
    LowestFirst,
}

/// Reduced word for the permutation `d_t` with `d_t . t^shape = t`, found
/// by morphing the path of `t` into the dominant path of its shape through
/// area-reducing hooks. Letters are transposition indices in the symmetric
/// group on the entries.
pub fn d_tableau_word(
    t: &ColumnTableau,
    lambda: &OneColMultipartition,
    params: &BlobParams,
    strategy: HookStrategy,
) -> Result<Vec<usize>> {
    check_level2(params)?;
    if t.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: t.size(), right: lambda.size() });
    }
    if !same_orbit(&t.shape(), lambda, params)? {
        return Err(Error::ShapeMismatch(format!(
            "shape {} of the tableau is not in the orbit of {lambda}",
            t.shape()
        )));
    }
    let n = t.size();
    let dom = PascalPath::from_tableau(&dominant_tableau(&t.shape()))?;
    let target = dom.weights();
    let mut steps = PascalPath::from_tableau(t)?.steps().to_vec();
    let mut weights = PascalPath { steps: steps.clone() }.weights();
    let mut word = Vec::new();
    loop {
        // hooks at level k: steps k, k+1 differ and flipping moves the
        // vertex toward the dominant path
        let mut candidates = (1..n).filter(|&k| {
            steps[k - 1] != steps[k] && {
                let flipped = weights[k] - 2 * steps[k - 1] as i64;
                (flipped - target[k]).abs() < (weights[k] - target[k]).abs()
            }
        });
        let pick = match strategy {
            HookStrategy::HighestFirst => candidates.next_back(),
            HookStrategy::LowestFirst => candidates.next(),
        };
        let Some(k) = pick else { break };
        steps.swap(k - 1, k);
        weights[k] = weights[k - 1] + steps[k - 1] as i64;
        word.push(k);
    }
    if weights != target {
        return Err(Error::Decomposition(format!(
            "hook morphing stalled before reaching the dominant path of {}",
            t.shape()
        )));
    }
    // the word must be reduced and must actually map the dominant tableau
    // of the shape to t
    let perm = permutation_of_word(n, &word);
    let inversions = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions != word.len() {
        return Err(Error::Decomposition("hook word is not reduced".into()));
    }
    let dom_word = dominant_tableau(&t.shape());
    for (idx, &c) in dom_word.word().iter().enumerate() {
        if t.word()[perm[idx] - 1] != c {
            return Err(Error::Decomposition(
                "hook word does not map the dominant tableau to the input".into(),
            ));
        }
    }
    Ok(word)
}

/// The permutation `s_{k_1} s_{k_2} ... s_{k_r}` as images of `1..=n`
/// (1-based), built by right multiplication.
pub fn permutation_of_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for &k in word {
        perm.swap(k - 1, k);
    }
    perm
}

/// Degree through the path picture: the number of wall-to-wall runs
/// crossing the fundamental alcove, plus one when the final straight
/// segment points back toward the symmetry edge.
pub fn fast_degree(
    t: &ColumnTableau,
    lambda: &OneColMultipartition,
    params: &BlobParams,
) -> Result<i64> {
    check_level2(params)?;
    if residue_sequence(t, params) != residue_sequence(&dominant_tableau(lambda), params) {
        return Err(Error::ResidueMismatch);
    }
    let r = hyperplane_sequence(lambda, params)?.len();
    if r == 0 {
        return Ok(0);
    }
    let f = f_lambda(lambda, params)?;
    let e = params.e() as usize;
    let path = PascalPath::from_tableau(t)?;
    let weights = path.weights();
    let (l_wall, r_wall) = (left_wall(params), left_wall(params) + params.e());
    let mut crossings = 0i64;
    for b in 1..r {
        let (from, to) = (weights[f + (b - 1) * e], weights[f + b * e]);
        if (from == l_wall && to == r_wall) || (from == r_wall && to == l_wall) {
            crossings += 1;
        }
    }
    let last_contact = f + (r - 1) * e;
    let wall = weights[last_contact];
    let dir = path.steps()[last_contact] as i64;
    let towards = dir == -wall.signum();
    Ok(crossings + i64::from(towards))
}

/// Two-column partition `(2^j, 1^{rest})`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TwoColPartition {
    pub n: usize,
    pub j: usize,
}

impl TwoColPartition {
    pub fn new(n: usize, j: usize) -> Result<Self> {
        if 2 * j > n {
            return Err(Error::InvalidParams(format!(
                "(2^{j}, 1^..) does not fit inside a partition of {n}"
            )));
        }
        Ok(Self { n, j })
    }

    pub fn column_heights(&self) -> (usize, usize) {
        (self.n - self.j, self.j)
    }

    /// Number of standard tableaux of this shape, by the two-column
    /// lattice-path recursion.
    pub fn std_count(&self) -> u128 {
        fn count(c1: usize, c2: usize, memo: &mut HashMap<(usize, usize), u128>) -> u128 {
            if c1 == 0 && c2 == 0 {
                return 1;
            }
            if let Some(&v) = memo.get(&(c1, c2)) {
                return v;
            }
            let mut total = 0;
            if c1 > c2 {
                total += count(c1 - 1, c2, memo);
            }
            if c2 > 0 {
                total += count(c1, c2 - 1, memo);
            }
            memo.insert((c1, c2), total);
            total
        }
        let (c1, c2) = self.column_heights();
        count(c1, c2, &mut HashMap::new())
    }
}

impl fmt::Display for TwoColPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(2^{},1^{})", self.j, self.n - 2 * self.j)
    }
}

pub fn catalan(m: usize) -> u128 {
    let mut c = vec![0u128; m + 1];
    c[0] = 1;
    for i in 1..=m {
        c[i] = (0..i).map(|k| c[k] * c[i - 1 - k]).sum();
    }
    c[m]
}

/// One degree-zero cell: the shape, its alcove element, the two-column
/// partition it maps to, the tableaux, and their images (sets of entries in
/// the second column).
#[derive(Clone, Debug)]
pub struct DegreeZeroCell {
    pub mu: OneColMultipartition,
    pub w_mu: DihedralForm,
    pub two_col: TwoColPartition,
    pub tableaux: Vec<ColumnTableau>,
    pub images: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct DegreeZeroReport {
    pub w_lambda: DihedralForm,
    pub cells: Vec<DegreeZeroCell>,
}

impl DegreeZeroReport {
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.tableaux.len()).collect()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.counts().iter().map(|&c| (c as u128) * (c as u128)).sum()
    }
}

/// Degree-zero tableaux grouped by shape, with the bijection onto standard
/// two-column tableaux: entry `j` sits in the second column exactly when
/// the j-th wall-to-wall run points toward the symmetry edge.
pub fn degree_zero_cells(
    lambda: &OneColMultipartition,
    params: &BlobParams,
    cap: u128,
) -> Result<DegreeZeroReport> {
    check_level2(params)?;
    if !is_regular(lambda, params)? {
        return Err(Error::NotRegular(format!("{lambda} lies on a hyperplane")));
    }
    let w_lambda = w_dihedral(lambda, params)?;
    let k = w_lambda.k;
    if k == 0 {
        return Err(Error::TooShort(
            "the shape lies in the fundamental alcove; its only cell is itself".into(),
        ));
    }
    let f = f_lambda(lambda, params)?;
    let e = params.e() as usize;

    let mut by_shape: BTreeMap<OneColMultipartition, Vec<ColumnTableau>> = BTreeMap::new();
    for t in enumerate_std_same_residue(lambda, params, cap)? {
        if tableau_degree(&t, params) == 0 {
            by_shape.entry(t.shape()).or_default().push(t);
        }
    }

    let mut cells = Vec::new();
    for (mu, tableaux) in by_shape {
        let w_mu = w_dihedral(&mu, params)?;
        if w_mu.side != w_lambda.side || !(k - w_mu.k).is_multiple_of(2) {
            return Err(Error::Decomposition(format!(
                "degree-zero cell {mu} has element {w_mu}, outside the expected family"
            )));
        }
        let j = (k - w_mu.k) / 2;
        let two_col = TwoColPartition::new(k - 1, j)?;
        let mut images = Vec::with_capacity(tableaux.len());
        for t in &tableaux {
            let path = PascalPath::from_tableau(t)?;
            let weights = path.weights();
            let mut col2 = Vec::new();
            for step in 1..k {
                let (from, to) = (weights[f + (step - 1) * e], weights[f + step * e]);
                let towards = (to - from).signum() == -from.signum();
                if towards {
                    col2.push(step);
                }
            }
            if col2.len() != j {
                return Err(Error::Decomposition(format!(
                    "image of a degree-zero tableau of {mu} has {} second-column entries, \
                     expected {j}",
                    col2.len()
                )));
            }
            images.push(col2);
        }
        // the map must be injective onto standard fillings
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != images.len() || images.len() as u128 != two_col.std_count() {
            return Err(Error::Decomposition(format!(
                "degree-zero cell {mu} has {} tableaux but {} standard two-column fillings",
                images.len(),
                two_col.std_count()
            )));
        }
        cells.push(DegreeZeroCell { mu, w_mu, two_col, tableaux, images });
    }
    cells.sort_by_key(|c| Reverse(c.w_mu.k));
    Ok(DegreeZeroReport { w_lambda, cells })
}

/// Decomposition numbers of the Temperley-Lieb algebra at `+-1` over a
/// field of characteristic `p`, indexed by two-column partitions:
/// `d[(2^j,..), (2^k,..)] = f_p(n - 2k, j - k)`, zero when `j < k`.
#[derive(Clone, Debug)]
pub struct TlDecompTable {
    pub n: usize,
    pub p: u64,
    entries: BTreeMap<(usize, usize), u8>,
}

impl TlDecompTable {
    pub fn get(&self, lambda: &TwoColPartition, mu: &TwoColPartition) -> u8 {
        self.entries.get(&(lambda.j, mu.j)).copied().unwrap_or(0)
    }

    pub fn shapes(&self) -> Vec<TwoColPartition> {
        (0..=self.n / 2).map(|j| TwoColPartition { n: self.n, j }).collect()
    }
}

pub fn tl_decomposition(n: usize, p: u64) -> Result<TlDecompTable> {
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("p = {p} is not prime")));
    }
    let mut entries = BTreeMap::new();
    for j in 0..=n / 2 {
        for k in 0..=n / 2 {
            let d = if j < k { 0 } else { f_p((n - 2 * k) as u64, (j - k) as u64, p) };
            entries.insert((j, k), d);
        }
    }
    Ok(TlDecompTable { n, p, entries })
}

/// Graded decomposition data of the idempotent truncation at `lambda`:
/// the column `d_{mu, lambda}`, the graded simple dimensions
/// `gdim L_lambda(mu)`, the cell dimensions, and the full triangular table
/// `d_{mu, nu}` over the truncation poset.
#[derive(Clone, Debug)]
pub struct BlobDecompTable {
    pub lambda: OneColMultipartition,
    pub p: u64,
    pub w_lambda: DihedralForm,
    /// Truncation poset, sorted by decreasing length of the alcove element.
    pub mus: Vec<(OneColMultipartition, DihedralForm)>,
    pub cell_dims: BTreeMap<OneColMultipartition, LaurentPoly>,
    pub d_column: BTreeMap<OneColMultipartition, LaurentPoly>,
    pub gdim_simple: BTreeMap<OneColMultipartition, LaurentPoly>,
    pub d_full: BTreeMap<(OneColMultipartition, OneColMultipartition), LaurentPoly>,
}

impl BlobDecompTable {
    /// `d_{mu, nu}` with the convention that absent pairs are zero and the
    /// diagonal is one.
    pub fn d(&self, mu: &OneColMultipartition, nu: &OneColMultipartition) -> LaurentPoly {
        if mu == nu {
            return LaurentPoly::one();
        }
        self.d_full.get(&(mu.clone(), nu.clone())).cloned().unwrap_or_default()
    }

    /// Re-substitution: summing `d_{mu, nu} gdim L_lambda(nu)` over the
    /// interval must reproduce every graded cell dimension exactly.
    pub fn resubstitution_holds(&self) -> bool {
        for (mu, _) in &self.mus {
            let mut total = LaurentPoly::zero();
            for (nu, _) in &self.mus {
                let d = self.d(mu, nu);
                if !d.is_zero() {
                    total = total.add(&d.mul(&self.gdim_simple[nu]));
                }
            }
            if &total != self.cell_dims.get(mu).unwrap_or(&LaurentPoly::zero()) {
                return false;
            }
        }
        true
    }
}

/// Memoizes per-truncation columns keyed by the truncation shape; shared
/// across the recursive calls for one parameter set.
pub struct BlobContext<'a> {
    params: &'a BlobParams,
    p: u64,
    cap: u128,
    cache: RwLock<HashMap<OneColMultipartition, Arc<ColumnData>>>,
}

/// One truncation's worth of data: `d_{mu, nu}` for the truncation at `nu`
/// plus its simple dimensions and cell dimensions.
struct ColumnData {
    poset: Vec<(OneColMultipartition, DihedralForm)>,
    cells: BTreeMap<OneColMultipartition, LaurentPoly>,
    d: BTreeMap<OneColMultipartition, LaurentPoly>,
    gdim_simple: BTreeMap<OneColMultipartition, LaurentPoly>,
}

impl<'a> BlobContext<'a> {
    pub fn new(params: &'a BlobParams, p: u64, cap: u128) -> Result<Self> {
        check_level2(params)?;
        if !is_prime(p) && p != 0 {
            return Err(Error::InvalidParams(format!("p = {p} is neither zero nor prime")));
        }
        Ok(Self { params, p, cap, cache: RwLock::new(HashMap::new()) })
    }

    /// All valid shapes in the orbit of `nu` whose element is Bruhat-below,
    /// sorted by decreasing length (the reverse of the dominance refinement).
    fn truncation_poset(
        &self,
        nu: &OneColMultipartition,
    ) -> Result<Vec<(OneColMultipartition, DihedralForm)>> {
        let n = nu.size();
        let w_nu = w_of(nu, self.params)?;
        let mut out = Vec::new();
        for a in 0..=n {
            let mu = OneColMultipartition::new(vec![a, n - a]);
            if !same_orbit(&mu, nu, self.params)? {
                continue;
            }
            let w_mu = w_of(&mu, self.params)?;
            if w_mu.bruhat_leq(&w_nu) {
                out.push((mu, w_mu.dihedral_form()?));
            }
        }
        out.sort_by_key(|(_, d)| Reverse(d.k));
        Ok(out)
    }

    /// Seed `d_{mu, nu}(0)`: the Temperley-Lieb decomposition number, which
    /// is `f_p(k - 1, j)` for same-side elements at even distance `2j` and
    /// zero otherwise.
    fn seed(&self, w_mu: &DihedralForm, w_nu: &DihedralForm) -> u8 {
        if w_mu.side != w_nu.side || !(w_nu.k - w_mu.k).is_multiple_of(2) {
            return 0;
        }
        f_p(w_nu.k as u64 - 1, ((w_nu.k - w_mu.k) / 2) as u64, self.p)
    }

    fn column(&self, nu: &OneColMultipartition) -> Result<Arc<ColumnData>> {
        if let Some(c) = self.cache.read().expect("cache lock").get(nu) {
            return Ok(c.clone());
        }
        let data = Arc::new(self.compute_column(nu)?);
        self.cache.write().expect("cache lock").insert(nu.clone(), data.clone());
        Ok(data)
    }

    fn compute_column(&self, nu: &OneColMultipartition) -> Result<ColumnData> {
        let poset = self.truncation_poset(nu)?;
        let w_nu = poset.first().expect("poset contains nu itself").1;
        let cells = graded_cell_dims_all(nu, self.params, self.cap)?;
        let mut d = BTreeMap::new();
        let mut gdim_simple = BTreeMap::new();
        for (mu, w_mu) in &poset {
            if mu == nu {
                d.insert(mu.clone(), LaurentPoly::one());
                gdim_simple.insert(mu.clone(), LaurentPoly::one());
                continue;
            }
            let mut acc = cells.get(mu).cloned().unwrap_or_default();
            for (tau, w_tau) in &poset {
                if w_tau.k <= w_mu.k || w_tau.k >= w_nu.k {
                    continue;
                }
                if !w_mu.element().bruhat_leq(&w_tau.element()) {
                    continue;
                }
                let d_mu_tau = self.column(tau)?.d.get(mu).cloned().unwrap_or_default();
                if !d_mu_tau.is_zero() {
                    acc = acc.sub(&d_mu_tau.mul(&gdim_simple[tau]));
                }
            }
            let (g, h) = if self.p == 0 {
                acc.split_selfdual_strict()
            } else {
                acc.split_selfdual_seeded(&BigInt::from(self.seed(w_mu, &w_nu)))
            }
            .map_err(|e| {
                Error::Decomposition(format!(
                    "splitting the cell {mu} of the truncation at {nu} (p = {}): {e}",
                    self.p
                ))
            })?;
            if !g.has_nonnegative_coeffs() {
                return Err(Error::Decomposition(format!(
                    "graded simple dimension at {mu} under {nu} has a negative coefficient: {g}"
                )));
            }
            d.insert(mu.clone(), h);
            gdim_simple.insert(mu.clone(), g);
        }
        Ok(ColumnData { poset, cells, d, gdim_simple })
    }
}

/// Runs the graded-decomposition recursion for the truncation at `lambda`
/// over characteristic `p` (a prime, or zero), assembling the full
/// triangular table over the truncation poset.
pub fn blob_graded_decomposition(
    lambda: &OneColMultipartition,
    params: &BlobParams,
    p: u64,
    cap: u128,
) -> Result<BlobDecompTable> {
    if !is_regular(lambda, params)? {
        return Err(Error::NotRegular(format!("{lambda} lies on a hyperplane")));
    }
    let ctx = BlobContext::new(params, p, cap)?;
    let top = ctx.column(lambda)?;
    let mut d_full = BTreeMap::new();
    for (nu, _) in &top.poset {
        let col = ctx.column(nu)?;
        for (mu, poly) in &col.d {
            if mu != nu && !poly.is_zero() {
                d_full.insert((mu.clone(), nu.clone()), poly.clone());
            }
        }
    }
    Ok(BlobDecompTable {
        lambda: lambda.clone(),
        p,
        w_lambda: w_dihedral(lambda, params)?,
        mus: top.poset.clone(),
        cell_dims: top.cells.clone(),
        d_column: top.d.clone(),
        gdim_simple: top.gdim_simple.clone(),
        d_full,
    })
}

/// Per-shape comparison of the blob column against the p-canonical table.
#[derive(Clone, Debug)]
pub struct SoergelComparison {
    pub mu: OneColMultipartition,
    pub w_mu: DihedralForm,
    pub blob: LaurentPoly,
    pub hecke: LaurentPoly,
    pub equal: bool,
}

/// Compares `d_{mu, lambda}` against the p-canonical polynomial of
/// `(w_mu, w_lambda)`, entry for entry over the truncation poset.
pub fn cross_check_soergel(table: &BlobDecompTable) -> Result<Vec<SoergelComparison>> {
    if table.p == 0 {
        return Err(Error::InvalidParams("cross-check needs a positive characteristic".into()));
    }
    let kl = crate::hecke::pkl_dihedral(&table.w_lambda, table.p)?;
    let mut out = Vec::new();
    for (mu, w_mu) in &table.mus {
        let blob = table.d(mu, &table.lambda);
        let hecke = kl.rows.get(&w_mu.element()).cloned().unwrap_or_default();
        out.push(SoergelComparison {
            mu: mu.clone(),
            w_mu: *w_mu,
            equal: blob == hecke,
            blob,
            hecke,
        });
    }
    Ok(out)
}
