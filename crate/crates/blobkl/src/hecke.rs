//! Hecke-algebra computations in the standard basis `{H_x}`.
//!
//! The quadratic relation `(H_s + v)(H_s - v^{-1}) = 0` gives the product
//! rules used everywhere here. Writing `Hb_s = H_s + v`, the expansion of a
//! product `Hb_{s_1} ... Hb_{s_r}` over the standard basis has coefficients
//! with nonnegative integer coefficients; extracting the self-dual part of
//! suitable combinations of them, by decreasing length, yields the
//! Kazhdan-Lusztig polynomials (and, for the infinite dihedral group with
//! seeds from the base-p containment function, their p-analogues).

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{AffineElement, DihedralForm, Side, Word};

/// Finitely supported map `AffineElement -> LaurentPoly`; no zero values.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    level: usize,
    support: BTreeMap<AffineElement, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(level: usize) -> Self {
        Self { level, support: BTreeMap::new() }
    }

    /// The basis element `H_e`.
    pub fn unit(level: usize) -> Self {
        let mut h = Self::zero(level);
        h.add_term(AffineElement::identity(level), LaurentPoly::one());
        h
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeff(&self, x: &AffineElement) -> LaurentPoly {
        self.support.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, &LaurentPoly)> {
        self.support.iter()
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn add_term(&mut self, x: AffineElement, c: LaurentPoly) {
        assert_eq!(x.level(), self.level, "level mismatch in Hecke element");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.support.entry(x) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Right multiplication by the standard generator `H_{s_i}`:
    /// `H_x H_s = H_{xs}` if `xs > x`, else `H_{xs} + (v^{-1} - v) H_x`.
    pub fn mult_right_standard(&self, i: usize) -> Self {
        let vinv_minus_v = LaurentPoly::from_pairs([(-1, 1), (1, -1)]);
        let mut out = Self::zero(self.level);
        for (x, c) in self.terms() {
            let xs = x.right_mul_simple(i);
            if xs.length() > x.length() {
                out.add_term(xs, c.clone());
            } else {
                out.add_term(xs, c.clone());
                out.add_term(x.clone(), c.mul(&vinv_minus_v));
            }
        }
        out
    }

    /// Right multiplication by `Hb_s = H_{s_i} + v`, so
    /// `H_x Hb_s = H_{xs} + v H_x` if `xs > x`, else `H_{xs} + v^{-1} H_x`.
    pub fn mult_right_barred(&self, i: usize) -> Self {
        let mut out = Self::zero(self.level);
        for (x, c) in self.terms() {
            let xs = x.right_mul_simple(i);
            let exp = if xs.length() > x.length() { 1 } else { -1 };
            out.add_term(xs, c.clone());
            out.add_term(x.clone(), c.shift(exp));
        }
        out
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(x, c)| format!("({}) H[{}]", c, x))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Expansion of the product `Hb_{s_1} ... Hb_{s_r}` over the word's letters.
/// The word need not be reduced.
pub fn bott_samelson(word: &Word) -> HeckeElement {
    let mut h = HeckeElement::unit(word.level());
    for &i in word.letters() {
        h = h.mult_right_barred(i);
    }
    h
}

/// Reference evaluation of the same product by enumerating all `2^r`
/// 01-sequences: each subsequence walks a Bruhat stroll and contributes
/// `v^{(#up-unused) - (#down-unused)}` to the coefficient of its endpoint.
/// Exponential; used to cross-check `bott_samelson`.
pub fn bott_samelson_subsequence_sum(word: &Word) -> HeckeElement {
    let r = word.len();
    assert!(r < 28, "subsequence enumeration is exponential; word too long");
    let mut out = HeckeElement::zero(word.level());
    for mask in 0u64..(1 << r) {
        let mut x = AffineElement::identity(word.level());
        let mut exp = 0i64;
        for (pos, &i) in word.letters().iter().enumerate() {
            let xs = x.right_mul_simple(i);
            let up = xs.length() > x.length();
            if mask & (1 << pos) != 0 {
                x = xs;
            } else if up {
                exp += 1;
            } else {
                exp -= 1;
            }
        }
        out.add_term(x, LaurentPoly::monomial(exp, 1));
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Base-p containment: 1 iff `a + 1` contains `b` to base `p`, meaning the
/// p-adic digits satisfy `b_i = 0` or `b_i = (a+1)_i` for all `i`, and `b`
/// has strictly fewer digits than `a + 1`.
///
/// `b = 0` is outside the digit condition; by convention it is contained
/// (the j = 0 case corresponds to the leading polynomial, whose constant
/// term is 1). Use [`f_p_with_zero_convention`] to flip that reading.
pub fn f_p(a: u64, b: u64, p: u64) -> u8 {
    f_p_with_zero_convention(a, b, p, true)
}

pub fn f_p_with_zero_convention(a: u64, b: u64, p: u64, zero_contained: bool) -> u8 {
    assert!(p >= 2, "base must be at least 2");
    if b == 0 {
        return zero_contained as u8;
    }
    let digits = |mut x: u64| {
        let mut ds = Vec::new();
        while x > 0 {
            ds.push(x % p);
            x /= p;
        }
        ds
    };
    let da = digits(a + 1);
    let db = digits(b);
    if db.len() >= da.len() {
        return 0;
    }
    for (i, &bi) in db.iter().enumerate() {
        if bi != 0 && bi != da[i] {
            return 0;
        }
    }
    1
}

/// Constant terms of the p-analogue polynomials into `w = k_s` (or `k_t`):
/// for `x = (k-2j)` on the same side, `0 <= j <= ceil((k-2)/2)`, the value is
/// `f_p(k-1, j)`; every other element has constant term zero and is omitted.
pub fn pkl_constant_terms(w: &DihedralForm, p: u64) -> Result<BTreeMap<DihedralForm, u8>> {
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("p = {p} is not prime")));
    }
    let k = w.k;
    if k == 0 || w.side == Side::Identity {
        return Err(Error::InvalidParams("constant terms need k >= 1".into()));
    }
    let mut out = BTreeMap::new();
    let j_max = (k - 1) / 2; // = ceil((k-2)/2) for k >= 1
    for j in 0..=j_max {
        let x = DihedralForm::new(w.side, k - 2 * j).expect("k - 2j >= 1");
        out.insert(x, f_p(k as u64 - 1, j as u64, p));
    }
    Ok(out)
}

/// One row-and-complement table: `rows[x]` is the coefficient of `H_x` in
/// the canonical (or p-canonical) basis element indexed by `w`, and `aux[y]`
/// is the self-dual complement extracted alongside it, i.e. the graded
/// multiplicity of the indecomposable labelled `y` inside the Bott-Samelson
/// object of the stored reduced word.
#[derive(Clone, Debug)]
pub struct KlTable {
    pub w: AffineElement,
    pub p: u64,
    pub word: Word,
    pub rows: BTreeMap<AffineElement, LaurentPoly>,
    pub aux: BTreeMap<AffineElement, LaurentPoly>,
}

/// Memoizes tables by `(w, p)`. Reads are concurrent; a finished table is
/// inserted atomically behind the lock.
#[derive(Default)]
pub struct KlContext {
    cache: RwLock<HashMap<(AffineElement, u64), Arc<KlTable>>>,
}

impl KlContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// Characteristic-zero Kazhdan-Lusztig table for any element.
    pub fn kl_char0(&self, w: &AffineElement) -> Result<Arc<KlTable>> {
        self.table(w, 0)
    }

    /// p-canonical table; only the level-2 (infinite dihedral) case has
    /// known seeds.
    pub fn pkl_dihedral(&self, w: &DihedralForm, p: u64) -> Result<Arc<KlTable>> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("p = {p} is not prime")));
        }
        self.table(&w.element(), p)
    }

    pub fn table(&self, w: &AffineElement, p: u64) -> Result<Arc<KlTable>> {
        if p > 0 && w.level() != 2 {
            return Err(Error::Unsupported(format!(
                "no seed formula for p-canonical bases at level {} (only level 2)",
                w.level()
            )));
        }
        let key = (w.clone(), p);
        if let Some(t) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(t.clone());
        }
        let table = Arc::new(self.compute(w, &w.reduced_word(), p)?);
        self.cache.write().expect("cache lock").insert(key, table.clone());
        Ok(table)
    }

    /// Runs the extraction over an explicitly chosen reduced word. The rows
    /// do not depend on the word; the complements do.
    pub fn table_with_word(&self, word: &Word, p: u64) -> Result<KlTable> {
        let w = word.evaluate();
        if word.len() != w.length() {
            return Err(Error::InvalidParams(format!("word {word} is not reduced")));
        }
        self.compute(&w, word, p)
    }

    fn compute(&self, w: &AffineElement, word: &Word, p: u64) -> Result<KlTable> {
        let word = word.clone();
        let bs = bott_samelson(&word);
        let seeds: BTreeMap<AffineElement, u8> = if p > 0 && !w.is_identity() {
            pkl_constant_terms(&w.dihedral_form()?, p)?
                .into_iter()
                .map(|(d, c)| (d.element(), c))
                .collect()
        } else {
            BTreeMap::new()
        };

        let mut elems: Vec<AffineElement> = bs.terms().map(|(x, _)| x.clone()).collect();
        elems.sort_by_key(|x| Reverse(x.length()));

        let mut rows: BTreeMap<AffineElement, LaurentPoly> = BTreeMap::new();
        let mut aux: BTreeMap<AffineElement, LaurentPoly> = BTreeMap::new();

        for x in &elems {
            if x == w {
                if bs.coeff(x) != LaurentPoly::one() {
                    return Err(Error::Decomposition(format!(
                        "top coefficient of the expansion at {w} is {}, expected 1",
                        bs.coeff(x)
                    )));
                }
                rows.insert(x.clone(), LaurentPoly::one());
                aux.insert(x.clone(), LaurentPoly::one());
                continue;
            }
            let mut lhs = bs.coeff(x);
            for y in &elems {
                if y == w || y == x || !x.bruhat_leq(y) {
                    continue;
                }
                let grk = aux.get(y).expect("longer elements processed first");
                if grk.is_zero() {
                    continue;
                }
                let table_y = self.table(y, p)?;
                let h_xy = table_y.rows.get(x).cloned().unwrap_or_default();
                lhs = lhs.sub(&grk.mul(&h_xy));
            }
            let (g, h) = if p == 0 {
                lhs.split_selfdual_strict()
            } else {
                let seed = seeds.get(x).copied().unwrap_or(0);
                lhs.split_selfdual_seeded(&BigInt::from(seed))
            }
            .map_err(|e| {
                Error::Decomposition(format!(
                    "while extracting the row of {x} in the table of {w} at p = {p}: {e}"
                ))
            })?;
            if !g.has_nonnegative_coeffs() {
                return Err(Error::Decomposition(format!(
                    "self-dual complement at {x} in the table of {w} (p = {p}) has a negative \
                     coefficient: {g}"
                )));
            }
            rows.insert(x.clone(), h);
            aux.insert(x.clone(), g);
        }

        Ok(KlTable { w: w.clone(), p, word, rows, aux })
    }

    /// Checks the defining identity of a table: for every `x`, summing
    /// `aux[y] * rows_y[x]` over `x <= y <= w` must reproduce the
    /// Bott-Samelson coefficient of `H_x` exactly.
    pub fn resubstitution_holds(&self, table: &KlTable) -> Result<bool> {
        let bs = bott_samelson(&table.word);
        for (x, _) in bs.terms() {
            let mut total = LaurentPoly::zero();
            for (y, grk) in &table.aux {
                if grk.is_zero() || !x.bruhat_leq(y) {
                    continue;
                }
                let h_xy = if y == &table.w {
                    table.rows.get(x).cloned().unwrap_or_default()
                } else {
                    self.table(y, table.p)?.rows.get(x).cloned().unwrap_or_default()
                };
                total = total.add(&grk.mul(&h_xy));
            }
            if total != bs.coeff(x) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One-shot character-zero table.
pub fn kl_char0(w: &AffineElement) -> Result<KlTable> {
    let ctx = KlContext::new();
    let t = ctx.kl_char0(w)?;
    Ok((*t).clone())
}

/// One-shot p-canonical dihedral table.
pub fn pkl_dihedral(w: &DihedralForm, p: u64) -> Result<KlTable> {
    let ctx = KlContext::new();
    let t = ctx.pkl_dihedral(w, p)?;
    Ok((*t).clone())
}
