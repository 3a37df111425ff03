//! Weight-graded normal forms for the positive part (and, mirrored, the
//! negative part) of the quantum group.
//!
//! Words in the generators are reduced modulo the two-sided ideal generated
//! by the q-Serre elements. Each graded piece of the ideal is computed by
//! exact linear algebra and echelonized with pivots on the greatest words,
//! so the surviving (non-pivot) words form the normal-form basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::cartan::{CartanDatum, SerreMode, MAX_RANK};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::qfield::{qfact, LaurentPoly, RatFunc};

/// Default bound on word length.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Environment variable naming a directory for persisting ideal bases.
pub const CACHE_DIR_ENV: &str = "IQUANTUM_CACHE_DIR";

/// A monomial `X_{i1} X_{i2} ... X_{ik}` in one family of generators,
/// stored as 0-based indices.
///
/// Ordered degree-lexicographically: shorter words first, then by letters
/// in index order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 12]>);

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: &[usize]) -> Self {
        Self(letters.iter().map(|&l| l as u8).collect())
    }

    pub fn letter(i: usize) -> Self {
        Self::from_letters(&[i])
    }

    pub fn repeat(i: usize, n: usize) -> Self {
        Self(std::iter::repeat_n(i as u8, n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn get(&self, pos: usize) -> usize {
        self.0[pos] as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word with the letter at `pos` removed.
    pub fn without(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(pos);
        Word(v)
    }

    /// Prefix of length `len`.
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].into())
    }

    pub fn suffix_from(&self, pos: usize) -> Word {
        Word(self.0[pos..].into())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn weight(&self) -> WeightVector {
        let mut w = WeightVector::zero();
        for l in self.letters() {
            w.0[l] += 1;
        }
        w
    }

    /// Prints the word as `X1*X2*...` with the given generator symbol.
    pub fn render(&self, symbol: &str) -> String {
        self.letters()
            .map(|l| format!("{symbol}{}", l + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters().map(|l| (l + 1).to_string()).collect();
        write!(f, "Word[{}]", s.join(","))
    }
}

/// Multiplicity of each generator index in a word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct WeightVector(pub [u16; MAX_RANK]);

impl WeightVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_slice(parts: &[u16]) -> Self {
        let mut w = Self::zero();
        w.0[..parts.len()].copy_from_slice(parts);
        w
    }

    pub fn unit(i: usize) -> Self {
        let mut w = Self::zero();
        w.0[i] = 1;
        w
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut w = *self;
        for k in 0..MAX_RANK {
            w.0[k] += other.0[k];
        }
        w
    }

    /// `self - other` when componentwise nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut w = *self;
        for k in 0..MAX_RANK {
            w.0[k] = self.0[k].checked_sub(other.0[k])?;
        }
        Some(w)
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&c| c > 0).count()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c > 0).unwrap_or(0);
        let parts: Vec<String> = self.0[..=last].iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A homogeneous linear combination of words of one weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedVector {
    pub weight: WeightVector,
    coords: BTreeMap<Word, RatFunc>,
}

impl GradedVector {
    pub fn zero(weight: WeightVector) -> Self {
        Self {
            weight,
            coords: BTreeMap::new(),
        }
    }

    pub fn unit(word: Word) -> Self {
        let weight = word.weight();
        let mut coords = BTreeMap::new();
        coords.insert(word, RatFunc::one());
        Self { weight, coords }
    }

    /// Adds `c * word`; the word must have this vector's weight.
    pub fn add_term(&mut self, word: Word, c: &RatFunc) {
        debug_assert_eq!(word.weight(), self.weight);
        if c.is_zero() {
            return;
        }
        match self.coords.get_mut(&word) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.coords.remove(&word);
                } else {
                    *v = s;
                }
            }
            None => {
                self.coords.insert(word, c.clone());
            }
        }
    }

    pub fn get(&self, word: &Word) -> Option<&RatFunc> {
        self.coords.get(word)
    }

    pub fn coords(&self) -> &BTreeMap<Word, RatFunc> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Greatest word with a nonzero coordinate.
    pub fn pivot(&self) -> Option<&Word> {
        self.coords.keys().next_back()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.weight);
        }
        Self {
            weight: self.weight,
            coords: self.coords.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &RatFunc, other: &GradedVector) -> Self {
        let mut out = self.clone();
        for (w, v) in &other.coords {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    /// `left * self * right` with words concatenated.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        Self {
            weight: self.weight.add(&left.weight()).add(&right.weight()),
            coords: self
                .coords
                .iter()
                .map(|(w, v)| (left.concat(w).concat(right), v.clone()))
                .collect(),
        }
    }
}

/// An echelonized spanning set of one graded piece of the Serre ideal.
///
/// Every row has pivot coefficient one and no row mentions the pivot word
/// of another row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub weight: WeightVector,
    rows: Vec<GradedVector>,
}

impl IdealBasis {
    pub fn rows(&self) -> &[GradedVector] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> {
        self.rows.iter().map(|r| r.pivot().expect("nonzero row"))
    }
}

/// Word enumeration, Serre ideal pieces and reduction for one datum.
pub struct Pbw {
    datum: CartanDatum,
    mode: SerreMode,
    cap: usize,
    cache_dir: Option<PathBuf>,
    bases: Memo<(SerreMode, WeightVector), Result<Arc<IdealBasis>>>,
    reduced: Memo<Word, Result<Arc<GradedVector>>>,
}

impl Pbw {
    pub fn new(datum: CartanDatum, mode: SerreMode, cap: usize) -> Self {
        let cache_dir = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from);
        Self {
            datum,
            mode,
            cap,
            cache_dir,
            bases: Memo::new(),
            reduced: Memo::new(),
        }
    }

    /// Overrides the persistence directory (taken from the environment by default).
    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn mode(&self) -> SerreMode {
        self.mode
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, len: usize) -> Result<()> {
        if len > self.cap {
            Err(Error::CapExceeded {
                cap: self.cap,
                needed: len,
            })
        } else {
            Ok(())
        }
    }

    /// All words of the given weight in increasing (lexicographic) order.
    pub fn enumerate_words(&self, weight: &WeightVector) -> Result<Vec<Word>> {
        self.check_cap(weight.total())?;
        let rank = self.datum.rank();
        if weight.0[rank..].iter().any(|&c| c > 0) {
            return Err(Error::UnknownIndex {
                index: weight.0.iter().rposition(|&c| c > 0).unwrap(),
                rank,
            });
        }
        let mut out = Vec::new();
        let mut remaining = *weight;
        let mut current = Vec::with_capacity(weight.total());
        fn rec(rank: usize, remaining: &mut WeightVector, current: &mut Vec<usize>, out: &mut Vec<Word>) {
            if remaining.total() == 0 {
                out.push(Word::from_letters(current));
                return;
            }
            for l in 0..rank {
                if remaining.0[l] > 0 {
                    remaining.0[l] -= 1;
                    current.push(l);
                    rec(rank, remaining, current, out);
                    current.pop();
                    remaining.0[l] += 1;
                }
            }
        }
        rec(rank, &mut remaining, &mut current, &mut out);
        Ok(out)
    }

    /// Weight `(1 - a_ij) e_i + e_j` of the Serre element for `(i, j)`.
    pub fn serre_weight(&self, i: usize, j: usize) -> WeightVector {
        let mut w = WeightVector::zero();
        w.0[i] = (1 - self.datum.a(i, j)) as u16;
        w.0[j] += 1;
        w
    }

    /// `sum_{r+s=1-a_ij} (-1)^r X_i^{(r)} X_j X_i^{(s)}` in the word basis.
    pub fn serre_element(&self, i: usize, j: usize) -> Result<GradedVector> {
        self.datum.check_index(i)?;
        self.datum.check_index(j)?;
        if i == j {
            return Err(Error::InvalidParameter("Serre element needs distinct indices".into()));
        }
        let top = 1 - self.datum.a(i, j);
        let eps = self.datum.eps(i);
        let mut v = GradedVector::zero(self.serre_weight(i, j));
        for r in 0..=top {
            let s = top - r;
            let sign = if r % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
            let c = sign.div(&(&qfact(r, eps)? * &qfact(s, eps)?))?;
            let word = Word::repeat(i, r as usize)
                .concat(&Word::letter(j))
                .concat(&Word::repeat(i, s as usize));
            v.add_term(word, &c);
        }
        Ok(v)
    }

    fn serre_pairs_below(&self, weight: &WeightVector) -> Vec<(usize, usize)> {
        let rank = self.datum.rank();
        let mut out = Vec::new();
        for i in 0..rank {
            for j in 0..rank {
                if i != j && weight.checked_sub(&self.serre_weight(i, j)).is_some() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The echelonized ideal piece at `weight` (empty when the Serre
    /// relations are switched off).
    pub fn ideal_basis(&self, weight: &WeightVector) -> Result<Arc<IdealBasis>> {
        self.check_cap(weight.total())?;
        if self.mode == SerreMode::Off || weight.support_size() < 2 || self.serre_pairs_below(weight).is_empty() {
            return Ok(Arc::new(IdealBasis {
                weight: *weight,
                rows: Vec::new(),
            }));
        }
        self.bases.get_or_compute(&(self.mode, *weight), || {
            if let Some(b) = self.load_cached(weight) {
                return Ok(Arc::new(b));
            }
            let b = self.compute_ideal_basis(weight)?;
            self.store_cached(&b);
            Ok(Arc::new(b))
        })
    }

    fn compute_ideal_basis(&self, weight: &WeightVector) -> Result<IdealBasis> {
        let words = self.enumerate_words(weight)?;
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut ech = FractionFreeEchelon::new(words.len());

        // I_nu = sum_k X_k I_{nu - e_k} + span{ S_ij w : w a word }
        for k in 0..self.datum.rank() {
            let Some(sub) = weight.checked_sub(&WeightVector::unit(k)) else {
                continue;
            };
            let sub_basis = self.ideal_basis(&sub)?;
            for row in sub_basis.rows() {
                ech.insert(&row.sandwich(&Word::letter(k), &Word::empty()), &index);
            }
        }
        for (i, j) in self.serre_pairs_below(weight) {
            let s = self.serre_element(i, j)?;
            let rest = weight.checked_sub(&s.weight).unwrap();
            for w in self.enumerate_words(&rest)? {
                ech.insert(&s.sandwich(&Word::empty(), &w), &index);
            }
        }
        Ok(IdealBasis {
            weight: *weight,
            rows: ech.into_reduced_rows(&words, *weight),
        })
    }

    /// The residue of `v` after eliminating every pivot word of its weight.
    pub fn reduce(&self, v: &GradedVector) -> Result<GradedVector> {
        let basis = self.ideal_basis(&v.weight)?;
        let mut out = v.clone();
        for row in basis.rows() {
            let p = row.pivot().unwrap();
            if let Some(c) = out.get(p).cloned() {
                out = out.axpy(&-c, row);
            }
        }
        Ok(out)
    }

    /// Normal form of a single word, memoized.
    pub fn reduce_word(&self, word: &Word) -> Result<Arc<GradedVector>> {
        self.check_cap(word.len())?;
        let weight = word.weight();
        if self.mode == SerreMode::Off || weight.support_size() < 2 {
            return Ok(Arc::new(GradedVector::unit(word.clone())));
        }
        self.reduced.get_or_compute(word, || {
            let basis = self.ideal_basis(&weight)?;
            if basis.is_empty() {
                return Ok(Arc::new(GradedVector::unit(word.clone())));
            }
            Ok(Arc::new(self.reduce(&GradedVector::unit(word.clone()))?))
        })
    }

    /// True when the word survives as a basis element of the quotient.
    pub fn is_normal_word(&self, word: &Word) -> Result<bool> {
        let basis = self.ideal_basis(&word.weight())?;
        let found = basis.pivots().any(|p| p == word);
        Ok(!found)
    }

    /// The non-pivot words of a weight: a basis of the quotient piece.
    pub fn normal_words(&self, weight: &WeightVector) -> Result<Vec<Word>> {
        let basis = self.ideal_basis(weight)?;
        let pivots: std::collections::HashSet<&Word> = basis.pivots().collect();
        Ok(self
            .enumerate_words(weight)?
            .into_iter()
            .filter(|w| !pivots.contains(w))
            .collect())
    }

    /// Dimension of the quotient piece at `weight`.
    pub fn quotient_dim(&self, weight: &WeightVector) -> Result<usize> {
        let n = self.enumerate_words(weight)?.len();
        Ok(n - self.ideal_basis(weight)?.rank())
    }

    fn cache_path(&self, weight: &WeightVector) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let pairing: Vec<String> = self
            .datum
            .pairing_matrix()
            .iter()
            .flatten()
            .map(i64::to_string)
            .collect();
        let w: Vec<String> = weight.0.iter().map(u16::to_string).collect();
        Some(dir.join(format!("ideal_{}_{}_{}.txt", pairing.join("."), self.mode, w.join("."))))
    }

    fn load_cached(&self, weight: &WeightVector) -> Option<IdealBasis> {
        let text = std::fs::read_to_string(self.cache_path(weight)?).ok()?;
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut row = GradedVector::zero(*weight);
            for entry in line.split(';') {
                let (w, c) = entry.split_once(':')?;
                let letters: Vec<usize> = w
                    .split('.')
                    .map(|x| x.parse::<usize>().ok().filter(|&l| l >= 1).map(|l| l - 1))
                    .collect::<Option<_>>()?;
                let word = Word::from_letters(&letters);
                if word.weight() != *weight {
                    return None;
                }
                row.add_term(word, &c.parse().ok()?);
            }
            rows.push(row);
        }
        Some(IdealBasis { weight: *weight, rows })
    }

    fn store_cached(&self, basis: &IdealBasis) {
        let Some(path) = self.cache_path(&basis.weight) else {
            return;
        };
        let mut text = String::new();
        for row in basis.rows() {
            let entries: Vec<String> = row
                .coords()
                .iter()
                .map(|(w, c)| {
                    let letters: Vec<String> = w.letters().map(|l| (l + 1).to_string()).collect();
                    format!("{}:{}", letters.join("."), c)
                })
                .collect();
            text.push_str(&entries.join(";"));
            text.push('\n');
        }
        // best effort: a failed write only costs a recomputation later
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
    }
}

/// Fraction-free row echelonization over `Q[q, q^-1]`.
///
/// Rows are kept with polynomial entries; elimination cross-multiplies and
/// then divides out the polynomial content of the row.
struct FractionFreeEchelon {
    width: usize,
    by_pivot: BTreeMap<usize, Vec<LaurentPoly>>,
}

impl FractionFreeEchelon {
    fn new(width: usize) -> Self {
        Self {
            width,
            by_pivot: BTreeMap::new(),
        }
    }

    fn insert(&mut self, v: &GradedVector, index: &HashMap<&Word, usize>) {
        if v.is_zero() {
            return;
        }
        // clear denominators
        let mut lcm = LaurentPoly::one();
        for c in v.coords().values() {
            let g = lcm.gcd(c.den());
            lcm = &lcm * &c.den().div_exact(&g);
        }
        let mut row = vec![LaurentPoly::zero(); self.width];
        for (w, c) in v.coords() {
            row[index[w]] = c.num() * &lcm.div_exact(c.den());
        }
        make_primitive(&mut row);

        while let Some(p) = row.iter().rposition(|c| !c.is_zero()) {
            let Some(b) = self.by_pivot.get(&p) else {
                self.by_pivot.insert(p, row);
                return;
            };
            let (bp, rp) = (b[p].clone(), row[p].clone());
            for k in 0..=p {
                if row[k].is_zero() && b[k].is_zero() {
                    continue;
                }
                row[k] = &(&bp * &row[k]) - &(&rp * &b[k]);
            }
            make_primitive(&mut row);
        }
    }

    /// Rows normalized to pivot one and fully back-substituted.
    fn into_reduced_rows(self, words: &[Word], weight: WeightVector) -> Vec<GradedVector> {
        let mut done: Vec<(usize, Vec<RatFunc>)> = Vec::with_capacity(self.by_pivot.len());
        for (p, row) in self.by_pivot {
            let piv = RatFunc::from(row[p].clone());
            let mut r: Vec<RatFunc> = row
                .into_iter()
                .map(|c| {
                    if c.is_zero() {
                        RatFunc::zero()
                    } else {
                        RatFunc::from(c).div(&piv).expect("nonzero pivot")
                    }
                })
                .collect();
            // earlier rows have smaller pivots and are already reduced
            for (sp, srow) in &done {
                let c = r[*sp].clone();
                if c.is_zero() {
                    continue;
                }
                for k in 0..=*sp {
                    if !srow[k].is_zero() {
                        r[k] = &r[k] - &(&c * &srow[k]);
                    }
                }
            }
            done.push((p, r));
        }
        done.into_iter()
            .map(|(_, r)| {
                let mut g = GradedVector::zero(weight);
                for (k, c) in r.into_iter().enumerate() {
                    if !c.is_zero() {
                        g.coords.insert(words[k].clone(), c);
                    }
                }
                g
            })
            .collect()
    }
}

fn make_primitive(row: &mut [LaurentPoly]) {
    let mut g = LaurentPoly::zero();
    for c in row.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    // also strip the common power of q and a common scalar
    let low = row.iter().filter_map(|c| c.low()).min().unwrap_or(0);
    let lead = row.iter().rev().find(|c| !c.is_zero()).map(|c| c.lead()).unwrap();
    let scale = lead.recip();
    for c in row.iter_mut() {
        if c.is_zero() {
            continue;
        }
        let d = if g.is_one() { c.clone() } else { c.div_exact(&g) };
        *c = d.shift(-low).scale(&scale);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::qint;

    fn pbw(name: &str) -> Pbw {
        Pbw::new(CartanDatum::of_type(name).unwrap(), SerreMode::On, DEFAULT_DEGREE_CAP).with_cache_dir(None)
    }

    fn w(letters: &[usize]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn word_counts() {
        let p = pbw("A2");
        let ws = p.enumerate_words(&WeightVector::from_slice(&[1, 1])).unwrap();
        assert_eq!(ws, vec![w(&[0, 1]), w(&[1, 0])]);
        assert_eq!(p.enumerate_words(&WeightVector::from_slice(&[2, 1])).unwrap().len(), 3);
        assert_eq!(p.enumerate_words(&WeightVector::from_slice(&[2, 2])).unwrap().len(), 6);
        assert!(matches!(
            p.enumerate_words(&WeightVector::from_slice(&[7, 6])),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn deglex_order() {
        assert!(w(&[1]) < w(&[0, 0]));
        assert!(w(&[0, 1, 0]) < w(&[1, 0, 0]));
    }

    #[test]
    fn serre_elements() {
        let p = pbw("A2");
        let s = p.serre_element(0, 1).unwrap();
        let half = qint(2, 1).inv().unwrap();
        assert_eq!(s.get(&w(&[0, 0, 1])), Some(&half));
        assert_eq!(s.get(&w(&[0, 1, 0])), Some(&-RatFunc::one()));
        assert_eq!(s.get(&w(&[1, 0, 0])), Some(&half));
        assert!(p.serre_element(0, 0).is_err());

        let p = pbw("A1xA1");
        let s = p.serre_element(0, 1).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.get(&w(&[1, 0])), Some(&RatFunc::one()));
        assert_eq!(s.get(&w(&[0, 1])), Some(&-RatFunc::one()));

        let p = pbw("B2");
        let s = p.serre_element(0, 1).unwrap();
        let half = qint(2, 2).inv().unwrap();
        assert_eq!(s.get(&w(&[0, 0, 1])), Some(&half));
        assert_eq!(half, "1/(q^2+q^-2)".parse().unwrap());
    }

    #[test]
    fn ideal_pieces_a2() {
        let p = pbw("A2");
        assert!(p.ideal_basis(&WeightVector::from_slice(&[1, 1])).unwrap().is_empty());
        assert_eq!(p.ideal_basis(&WeightVector::from_slice(&[2, 1])).unwrap().rank(), 1);
        // Kostant count for (2,2) in A2 is 3 so the ideal has rank 6 - 3
        assert_eq!(p.ideal_basis(&WeightVector::from_slice(&[2, 2])).unwrap().rank(), 3);
    }

    #[test]
    fn reduce_examples() {
        let p = pbw("A2");
        let s = p.serre_element(0, 1).unwrap();
        let c: RatFunc = "(q^3+2)/(q-7)".parse().unwrap();
        assert!(p.reduce(&s.scale(&c)).unwrap().is_zero());

        let e12 = GradedVector::unit(w(&[0, 1]));
        assert_eq!(p.reduce(&e12).unwrap(), e12);

        let e112 = GradedVector::unit(w(&[0, 0, 1]));
        assert_eq!(p.reduce(&e112).unwrap(), e112);
        let r = p.reduce(&GradedVector::unit(w(&[1, 0, 0]))).unwrap();
        // the pivot E2E1E1 is rewritten in the two smaller words
        assert_eq!(r.len(), 2);
        assert!(r.get(&w(&[1, 0, 0])).is_none());
    }

    #[test]
    fn basis_rows_are_reduced() {
        let p = pbw("G2");
        let b = p.ideal_basis(&WeightVector::from_slice(&[4, 2])).unwrap();
        let pivots: Vec<&Word> = b.pivots().collect();
        for row in b.rows() {
            assert!(row.get(row.pivot().unwrap()).unwrap().is_one());
            for p in &pivots {
                if *p != row.pivot().unwrap() {
                    assert!(row.get(p).is_none());
                }
            }
        }
    }

    #[test]
    fn serre_off_is_identity() {
        let p = Pbw::new(CartanDatum::of_type("A2").unwrap(), SerreMode::Off, 12);
        let v = GradedVector::unit(w(&[1, 0, 0]));
        assert_eq!(p.reduce(&v).unwrap(), v);
        assert!(p.ideal_basis(&WeightVector::from_slice(&[2, 1])).unwrap().is_empty());
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let datum = CartanDatum::of_type("B2").unwrap();
        let weight = WeightVector::from_slice(&[2, 3]);
        let fresh = Pbw::new(datum.clone(), SerreMode::On, 12).with_cache_dir(Some(dir.path().into()));
        let a = fresh.ideal_basis(&weight).unwrap();
        let reread = Pbw::new(datum, SerreMode::On, 12).with_cache_dir(Some(dir.path().into()));
        assert!(reread.load_cached(&weight).is_some());
        assert_eq!(*reread.ideal_basis(&weight).unwrap(), *a);
    }
}
