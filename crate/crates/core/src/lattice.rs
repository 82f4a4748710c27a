//! The E8 root system, the extended (8,4) Hamming code, Construction A and
//! the Hadamard-row/codeword correspondence.
//!
//! Lattice vectors are stored with doubled integer coordinates so the
//! half-integer roots stay in `i32`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::constants::{build_cm_e8, build_hadamard, build_sr_e8, sr_e8_twice};
use crate::error::{Error, Result};
use crate::field::{rat, GoldenExt, GoldenScalar, Rational};
use crate::identities::{Checks, IdentityReport};
use crate::matrix::ExactMatrix;
use crate::roots::{enumerate, EnumerationRule, PairingMode};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    twice: [i32; 8],
}

impl LatticeVector {
    pub fn from_twice(twice: [i32; 8]) -> Self {
        Self { twice }
    }

    pub fn twice(&self) -> [i32; 8] {
        self.twice
    }

    pub fn coords(&self) -> [Rational; 8] {
        self.twice.map(|c| rat(i64::from(c), 2))
    }

    /// `4⟨a, b⟩`, exact.
    fn dot4(&self, other: &Self) -> i64 {
        self.twice
            .iter()
            .zip(&other.twice)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum()
    }

    pub fn inner(&self, other: &Self) -> Rational {
        rat(self.dot4(other), 4)
    }

    pub fn norm2(&self) -> Rational {
        self.inner(self)
    }

    pub fn neg(&self) -> Self {
        Self::from_twice(self.twice.map(|c| -c))
    }

    pub fn is_e8_root(&self) -> bool {
        let all_int = self.twice.iter().all(|c| c % 2 == 0);
        let all_half = self.twice.iter().all(|c| c % 2 != 0);
        let sum: i32 = self.twice.iter().sum();
        (all_int || all_half) && sum % 4 == 0 && self.dot4(self) == 8
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords().iter().map(ToString::to_string))
    }
}

/// The 240 roots: `±eᵢ ± eⱼ` and `½(±1, …, ±1)` with an even number of
/// minus signs. Sorted.
pub fn gen_e8_roots() -> Vec<LatticeVector> {
    let mut out = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut t = [0; 8];
                t[i] = si;
                t[j] = sj;
                out.push(LatticeVector::from_twice(t));
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let t = std::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 });
            out.push(LatticeVector::from_twice(t));
        }
    }
    out.sort();
    out
}

/// Unordered pairs at squared distance 2, i.e. inner product 1.
pub fn edge_pair_count(roots: &[LatticeVector]) -> usize {
    let mut n = 0;
    for (i, a) in roots.iter().enumerate() {
        n += roots[i + 1..].iter().filter(|b| a.dot4(b) == 4).count();
    }
    n
}

/// Inner products over unordered pairs of distinct vectors.
pub fn inner_product_histogram(vs: &[LatticeVector]) -> BTreeMap<String, usize> {
    let mut by_dot: BTreeMap<i64, usize> = BTreeMap::new();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            *by_dot.entry(a.dot4(b)).or_insert(0) += 1;
        }
    }
    by_dot
        .into_iter()
        .map(|(d, c)| (rat(d, 4).to_string(), c))
        .collect()
}

/// Closure under negation, a coordinate swap, a cyclic shift and a sign
/// change on two coordinates.
pub fn symmetry_closed(vs: &[LatticeVector]) -> bool {
    let set: BTreeSet<_> = vs.iter().copied().collect();
    let maps: [fn([i32; 8]) -> [i32; 8]; 4] = [
        |t| t.map(|c| -c),
        |t| {
            let mut u = t;
            u.swap(0, 1);
            u
        },
        |t| std::array::from_fn(|k| t[(k + 1) % 8]),
        |t| {
            let mut u = t;
            u[0] = -u[0];
            u[5] = -u[5];
            u
        },
    ];
    maps.iter()
        .all(|m| vs.iter().all(|v| set.contains(&LatticeVector::from_twice(m(v.twice)))))
}

/// `±coeffs·srE8` over the positive roots enumerated from cmE8.
pub fn e8_vertex_coords() -> Result<Vec<LatticeVector>> {
    let sys = enumerate(&build_cm_e8(), EnumerationRule::new(PairingMode::Normalized, 30))?;
    let sr = sr_e8_twice();
    let mut out = Vec::with_capacity(2 * sys.len());
    for r in &sys.roots {
        let t: [i32; 8] = std::array::from_fn(|k| {
            r.coeffs
                .iter()
                .zip(&sr)
                .map(|(&c, row)| i64::from(c) * row[k])
                .sum::<i64>() as i32
        });
        let v = LatticeVector::from_twice(t);
        out.push(v);
        out.push(v.neg());
    }
    out.sort();
    Ok(out)
}

/// Height distribution of the positive roots, obtained by writing each of
/// the 240 generated roots in the simple-root basis of `srE8`.
pub fn e8_height_histogram() -> Result<BTreeMap<u32, usize>> {
    let inv = build_sr_e8().inverse()?;
    let mut hist = BTreeMap::new();
    for v in gen_e8_roots() {
        let row: Vec<GoldenExt> = v
            .coords()
            .into_iter()
            .map(|c| GoldenExt::from_scalar(GoldenScalar::from_rational(c)))
            .collect();
        let coeffs: Vec<Rational> = (0..8)
            .map(|j| {
                let s = row
                    .iter()
                    .enumerate()
                    .fold(GoldenExt::zero(), |acc, (i, x)| &acc + &(x * inv.get(i, j)));
                s.as_scalar().expect("rational").a().clone()
            })
            .collect();
        if coeffs.iter().all(|c| !c.is_negative()) {
            let h: Rational = coeffs.iter().sum();
            if !h.is_integer() {
                return Err(Error::InvalidArgument(format!("non-integral root coordinates for {v}")));
            }
            let h = h.to_integer().try_into().unwrap_or(u32::MAX);
            *hist.entry(h).or_insert(0) += 1;
        }
    }
    Ok(hist)
}

#[derive(Clone, Debug, Serialize)]
pub struct RootsCheck {
    pub count: usize,
    pub all_norm_two: bool,
    pub all_in_e8: bool,
    pub edge_pairs: usize,
    pub symmetry_closed: bool,
    pub inner_products: BTreeMap<String, usize>,
    pub cartan_gram: IdentityReport,
    pub vertex_coords: IdentityReport,
    pub holds: bool,
}

pub fn check_roots() -> RootsCheck {
    let roots = gen_e8_roots();
    let two = rat(2, 1);
    let all_norm_two = roots.iter().all(|r| r.norm2() == two);
    let all_in_e8 = roots.iter().all(LatticeVector::is_e8_root);
    let edge_pairs = edge_pair_count(&roots);
    let closed = symmetry_closed(&roots);
    let inner_products = inner_product_histogram(&roots);

    let sr = build_sr_e8();
    let mut c = Checks::default();
    if let Ok(g) = sr.mul(&sr.transpose()) {
        c.matrix("cmE8 = srE8.srE8^T", &build_cm_e8(), &g);
    }
    let cartan_gram = c.into_report("cmE8 = srE8.srE8^T");

    let mut c = Checks::default();
    match e8_vertex_coords() {
        Ok(vs) => {
            c.value("vertex count", 240, vs.len());
            c.truth("all squared norms 2", vs.iter().all(|v| v.norm2() == two));
            c.value(
                "inner-product histogram",
                format!("{:?}", inner_products),
                format!("{:?}", inner_product_histogram(&vs)),
            );
            c.truth("vertex set equals generated roots", vs == roots);
        }
        Err(e) => c.fail_with("enumerate cmE8", &e),
    }
    let vertex_coords = c.into_report("+-E8roots.srE8 = E8 roots");

    let holds = roots.len() == 240
        && all_norm_two
        && all_in_e8
        && edge_pairs == 6720
        && closed
        && cartan_gram.holds
        && vertex_coords.holds;
    RootsCheck {
        count: roots.len(),
        all_norm_two,
        all_in_e8,
        edge_pairs,
        symmetry_closed: closed,
        inner_products,
        cartan_gram,
        vertex_coords,
        holds,
    }
}

/// Binary linear code of length `n ≤ 16`; bit `i` of a word is coordinate `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    generator: Vec<u16>,
}

pub fn word_string(w: u16, n: usize) -> String {
    (0..n).map(|i| if w >> i & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn parse_word(s: &str) -> Result<u16> {
    if s.len() > 16 {
        return Err(Error::Parse(format!("codeword {s:?} longer than 16")));
    }
    s.chars().enumerate().try_fold(0u16, |w, (i, ch)| match ch {
        '0' => Ok(w),
        '1' => Ok(w | 1 << i),
        _ => Err(Error::Parse(format!("bad bit {ch:?} in {s:?}"))),
    })
}

/// Row-reduce over GF(2); returns the nonzero reduced rows and their pivots.
fn rref(rows: &[u16], n: usize) -> Vec<(u16, usize)> {
    let mut rows = rows.to_vec();
    let mut out: Vec<(u16, usize)> = Vec::new();
    for col in 0..n {
        let bit = 1u16 << col;
        let Some(p) = rows.iter().position(|r| r & bit != 0) else {
            continue;
        };
        let pivot = rows.remove(p);
        for r in rows.iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
        for (r, _) in out.iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
        out.push((pivot, col));
    }
    out
}

impl BinaryCode {
    pub fn new(n: usize, generator: Vec<u16>) -> Result<Self> {
        if n == 0 || n > 16 {
            return Err(Error::InvalidArgument(format!("code length {n} outside 1..=16")));
        }
        if generator.iter().any(|&g| n < 16 && g >> n != 0) {
            return Err(Error::InvalidArgument("generator row longer than n".into()));
        }
        if rref(&generator, n).len() != generator.len() {
            return Err(Error::InvalidArgument("generator rows are dependent over GF(2)".into()));
        }
        Ok(Self { n, generator })
    }

    pub fn from_strings(rows: &[&str]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("generator rows differ in length".into()));
        }
        Self::new(n, rows.iter().map(|r| parse_word(r)).collect::<Result<_>>()?)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[u16] {
        &self.generator
    }

    /// All `2^k` codewords, sorted.
    pub fn codewords(&self) -> Vec<u16> {
        let k = self.generator.len();
        let mut out: Vec<u16> = (0u32..1 << k)
            .map(|m| {
                self.generator
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .fold(0, |acc, (_, g)| acc ^ g)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Count of codewords of each weight `0..=n`.
    pub fn weight_enumerator(&self) -> Vec<usize> {
        let mut w = vec![0; self.n + 1];
        for c in self.codewords() {
            w[c.count_ones() as usize] += 1;
        }
        w
    }

    pub fn min_distance(&self) -> Option<u32> {
        self.codewords().into_iter().filter(|&c| c != 0).map(u16::count_ones).min()
    }

    /// Words orthogonal to every generator row, by exhaustion.
    pub fn dual_codewords(&self) -> Vec<u16> {
        (0u32..1 << self.n)
            .map(|w| w as u16)
            .filter(|w| self.generator.iter().all(|g| (w & g).count_ones() % 2 == 0))
            .collect()
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual_codewords() == self.codewords()
    }

    pub fn is_doubly_even(&self) -> bool {
        self.codewords().iter().all(|c| c.count_ones() % 4 == 0)
    }
}

/// Extended Hamming code of length 8.
pub fn hamming84() -> BinaryCode {
    BinaryCode::from_strings(&["11110000", "00111100", "00001111", "01010101"]).expect("independent rows")
}

#[derive(Clone, Debug, Serialize)]
pub struct HammingCheck {
    pub generator: Vec<String>,
    pub codewords: Vec<String>,
    pub weight_enumerator: Vec<usize>,
    pub min_distance: Option<u32>,
    pub self_dual: bool,
    pub doubly_even: bool,
    pub holds: bool,
}

pub fn check_hamming() -> HammingCheck {
    let code = hamming84();
    let weight_enumerator = code.weight_enumerator();
    let min_distance = code.min_distance();
    let self_dual = code.is_self_dual();
    let doubly_even = code.is_doubly_even();
    let mut expected = vec![0; 9];
    expected[0] = 1;
    expected[4] = 14;
    expected[8] = 1;
    HammingCheck {
        generator: code.generator().iter().map(|&g| word_string(g, 8)).collect(),
        codewords: code.codewords().iter().map(|&c| word_string(c, 8)).collect(),
        holds: code.codewords().len() == 16
            && weight_enumerator == expected
            && min_distance == Some(4)
            && self_dual
            && doubly_even,
        weight_enumerator,
        min_distance,
        self_dual,
        doubly_even,
    }
}

/// Construction A of a binary code: `L = {x ∈ ℤⁿ : x mod 2 ∈ C} / √2`.
///
/// `basis` holds the integer rows before the `1/√2` scale; `gram` is
/// `B·Bᵀ/2`.
#[derive(Clone, Debug)]
pub struct ConstructionA {
    code: BinaryCode,
    pub basis: Vec<Vec<i64>>,
    pub gram: ExactMatrix,
}

pub fn construction_a(code: &BinaryCode) -> Result<ConstructionA> {
    if code.length() != 8 || code.dimension() != 4 {
        return Err(Error::InvalidArgument(format!(
            "construction A expects an (8,4) code, got ({},{})",
            code.length(),
            code.dimension()
        )));
    }
    let n = code.length();
    let reduced = rref(code.generator(), n);
    let pivots: Vec<usize> = reduced.iter().map(|&(_, p)| p).collect();
    let mut basis: Vec<Vec<i64>> = reduced
        .iter()
        .map(|&(r, _)| (0..n).map(|i| i64::from(r >> i & 1)).collect())
        .collect();
    for k in (0..n).filter(|k| !pivots.contains(k)) {
        let mut row = vec![0; n];
        row[k] = 2;
        basis.push(row);
    }
    let gram = ExactMatrix::from_fn(n, |i, j| {
        let dot: i64 = basis[i].iter().zip(&basis[j]).map(|(a, b)| a * b).sum();
        GoldenExt::from_scalar(GoldenScalar::from_rational(rat(dot, 2)))
    });
    Ok(ConstructionA {
        code: code.clone(),
        basis,
        gram,
    })
}

fn rational_entry(x: &GoldenExt) -> Rational {
    x.as_scalar().map(|s| s.a().clone()).unwrap_or_default()
}

impl ConstructionA {
    pub fn determinant(&self) -> Rational {
        rational_entry(&self.gram.det())
    }

    pub fn is_integral(&self) -> bool {
        self.gram.entries().iter().all(|x| rational_entry(x).is_integer())
    }

    pub fn is_even(&self) -> bool {
        self.is_integral()
            && (0..self.gram.dim()).all(|i| {
                let d = rational_entry(self.gram.get(i, i));
                (d.to_integer() % 2u8).is_zero()
            })
    }

    pub fn leading_minors(&self) -> Vec<Rational> {
        (1..=self.gram.dim())
            .map(|k| {
                let sub = ExactMatrix::from_fn(k, |i, j| self.gram.get(i, j).clone());
                rational_entry(&sub.det())
            })
            .collect()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.gram.is_symmetric() && self.leading_minors().iter().all(Signed::is_positive)
    }

    /// Lattice vectors of squared norm 2 (after scaling), found by checking
    /// every `x` with `|xᵢ| ≤ 2`. A coordinate of 3 or more already gives
    /// `Σxᵢ² ≥ 9 > 4`.
    pub fn minimal_vectors(&self) -> Vec<[i8; 8]> {
        let words: BTreeSet<u16> = self.code.codewords().into_iter().collect();
        let mut out = Vec::new();
        let mut x = [-2i8; 8];
        loop {
            let norm: i32 = x.iter().map(|&c| i32::from(c) * i32::from(c)).sum();
            if norm == 4 {
                let parity = x
                    .iter()
                    .enumerate()
                    .fold(0u16, |w, (i, &c)| if c % 2 != 0 { w | 1 << i } else { w });
                if words.contains(&parity) {
                    out.push(x);
                }
            }
            let mut k = 0;
            loop {
                if k == 8 {
                    return out;
                }
                if x[k] < 2 {
                    x[k] += 1;
                    break;
                }
                x[k] = -2;
                k += 1;
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionACheck {
    pub basis: Vec<Vec<i64>>,
    pub gram: Vec<Vec<String>>,
    pub symmetric: bool,
    pub even: bool,
    pub determinant: String,
    pub leading_minors: Vec<String>,
    pub positive_definite: bool,
    pub minimal_vectors: usize,
    pub holds: bool,
}

pub fn check_construction_a() -> Result<ConstructionACheck> {
    let ca = construction_a(&hamming84())?;
    let det = ca.determinant();
    let even = ca.is_even();
    let pd = ca.is_positive_definite();
    let minimal = ca.minimal_vectors().len();
    Ok(ConstructionACheck {
        basis: ca.basis.clone(),
        gram: ca
            .gram
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
        symmetric: ca.gram.is_symmetric(),
        even,
        determinant: det.to_string(),
        leading_minors: ca.leading_minors().iter().map(ToString::to_string).collect(),
        positive_definite: pd,
        minimal_vectors: minimal,
        holds: even && pd && det == rat(1, 1) && minimal == 240,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MappedRow {
    pub source: String,
    pub bits: String,
    pub codeword: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HadamardMap {
    /// `permutation[i]` is the codeword coordinate receiving column `i`.
    pub permutation: Vec<usize>,
    pub rows: Vec<MappedRow>,
    pub report: IdentityReport,
}

fn permute(w: u16, perm: &[usize]) -> u16 {
    perm.iter()
        .enumerate()
        .fold(0, |acc, (i, &p)| if w >> i & 1 == 1 { acc | 1 << p } else { acc })
}

/// Multiset of `w` restricted to the given coordinates, packed in order.
fn projection(words: &[u16], coords: &[usize]) -> Vec<u16> {
    let mut out: Vec<u16> = words
        .iter()
        .map(|w| {
            coords
                .iter()
                .enumerate()
                .fold(0, |acc, (k, &c)| acc | ((w >> c & 1) << k))
        })
        .collect();
    out.sort_unstable();
    out
}

/// First permutation (lexicographic) carrying `source` onto `target`,
/// pruned by matching projections onto the coordinates assigned so far.
fn find_permutation(source: &[u16], target: &[u16], n: usize) -> Option<Vec<usize>> {
    fn go(
        source: &[u16],
        target: &[u16],
        n: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let m = perm.len();
        if m == n {
            let mut mapped: Vec<u16> = source.iter().map(|&w| permute(w, perm)).collect();
            mapped.sort_unstable();
            return mapped == target;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            perm.push(c);
            let src: Vec<usize> = (0..=m).collect();
            if projection(source, &src) == projection(target, perm) {
                used[c] = true;
                if go(source, target, n, perm, used) {
                    return true;
                }
                used[c] = false;
            }
            perm.pop();
        }
        false
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    go(source, target, n, &mut perm, &mut used).then_some(perm)
}

/// Maps each row `r` of the unnormalized 3-qubit Hadamard matrix, and
/// `−r`, to bits `(1 − sign)/2`, and looks for one column permutation
/// carrying these 16 words onto the codewords of [`hamming84`].
pub fn hadamard_code_correspondence() -> HadamardMap {
    hadamard_code_correspondence_for(&hamming84())
}

/// As [`hadamard_code_correspondence`], against any length-8 code.
pub fn hadamard_code_correspondence_for(code: &BinaryCode) -> HadamardMap {
    let h = build_hadamard(3).expect("3 qubits");
    let signs = h.signs();
    let mut labelled: Vec<(String, u16)> = Vec::with_capacity(16);
    for (i, row) in signs.iter().enumerate() {
        let bits = row
            .iter()
            .enumerate()
            .fold(0u16, |w, (k, &s)| if s < 0 { w | 1 << k } else { w });
        labelled.push((format!("H[{i}]"), bits));
        labelled.push((format!("-H[{i}]"), !bits & 0xff));
    }
    let mut source: Vec<u16> = labelled.iter().map(|&(_, b)| b).collect();
    source.sort_unstable();
    let target = code.codewords();

    let mut c = Checks::default();
    let mut src_weights: Vec<u32> = source.iter().map(|w| w.count_ones()).collect();
    let mut tgt_weights: Vec<u32> = target.iter().map(|w| w.count_ones()).collect();
    src_weights.sort_unstable();
    tgt_weights.sort_unstable();
    c.value("weight distribution", format!("{tgt_weights:?}"), format!("{src_weights:?}"));
    let distinct: BTreeSet<u16> = source.iter().copied().collect();
    c.value("distinct mapped words", 16, distinct.len());

    let perm = find_permutation(&source, &target, 8);
    let permutation = match &perm {
        Some(p) => {
            c.note(format!("column permutation {p:?}"));
            p.clone()
        }
        None => {
            c.truth("column permutation exists", false);
            Vec::new()
        }
    };
    let rows = labelled
        .iter()
        .map(|(name, bits)| MappedRow {
            source: name.clone(),
            bits: word_string(*bits, 8),
            codeword: if permutation.is_empty() {
                String::new()
            } else {
                word_string(permute(*bits, &permutation), 8)
            },
        })
        .collect();
    HadamardMap {
        permutation,
        rows,
        report: c.into_report("Hadamard rows and negations = (8,4) Hamming codewords"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let roots = gen_e8_roots();
        assert_eq!(roots.len(), 240);
        assert_eq!(roots.iter().filter(|r| r.twice[0] % 2 == 0).count(), 112);
        assert_eq!(edge_pair_count(&roots), 6720);
        assert!(symmetry_closed(&roots));
    }

    #[test]
    fn inner_products_of_e8() {
        let h = inner_product_histogram(&gen_e8_roots());
        // per root: 56 at 1, 126 at 0, 56 at -1, 1 at -2
        assert_eq!(h["1"], 240 * 56 / 2);
        assert_eq!(h["0"], 240 * 126 / 2);
        assert_eq!(h["-1"], 240 * 56 / 2);
        assert_eq!(h["-2"], 120);
    }

    #[test]
    fn hamming_code() {
        let code = hamming84();
        assert_eq!(code.codewords().len(), 16);
        assert_eq!(code.weight_enumerator(), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(code.min_distance(), Some(4));
        assert!(code.is_self_dual());
        assert!(check_hamming().holds);
    }

    #[test]
    fn dependent_generator_rejected() {
        assert!(BinaryCode::from_strings(&["1100", "0011", "1111"]).is_err());
    }

    #[test]
    fn construction_a_gives_e8() {
        let r = check_construction_a().unwrap();
        assert!(r.even && r.positive_definite, "{r:?}");
        assert_eq!(r.determinant, "1");
        assert_eq!(r.minimal_vectors, 240);
    }

    #[test]
    fn construction_a_rejects_other_shapes() {
        let code = BinaryCode::from_strings(&["1111", "0011"]).unwrap();
        assert!(construction_a(&code).is_err());
    }

    #[test]
    fn hadamard_rows_map_onto_codewords() {
        let m = hadamard_code_correspondence();
        assert!(m.report.holds, "{:?}", m.report);
        assert_eq!(m.rows[0].bits, "00000000");
        assert_eq!(m.rows[1].bits, "11111111");
        let mut seen: Vec<&str> = m.rows.iter().map(|r| r.codeword.as_str()).collect();
        seen.sort_unstable();
        let mut want: Vec<String> = hamming84().codewords().iter().map(|&w| word_string(w, 8)).collect();
        want.sort();
        assert_eq!(seen, want.iter().map(String::as_str).collect::<Vec<_>>());
    }

    #[test]
    fn permutation_found_for_scrambled_code() {
        let scramble = [3, 7, 0, 5, 1, 6, 2, 4];
        let gen: Vec<u16> = hamming84().generator().iter().map(|&g| permute(g, &scramble)).collect();
        let code = BinaryCode::new(8, gen).unwrap();
        let m = hadamard_code_correspondence_for(&code);
        assert!(m.report.holds, "{:?}", m.report);
        assert_ne!(m.permutation, (0..8).collect::<Vec<_>>());
        let mut mapped: Vec<u16> = m.rows.iter().map(|r| parse_word(&r.codeword).unwrap()).collect();
        mapped.sort_unstable();
        assert_eq!(mapped, code.codewords());

        let odd = BinaryCode::from_strings(&["11100000", "00011100", "00000011", "10010010"]).unwrap();
        assert!(!hadamard_code_correspondence_for(&odd).report.holds);
    }

    #[test]
    fn vertex_coords_are_the_roots() {
        assert_eq!(e8_vertex_coords().unwrap(), gen_e8_roots());
        assert!(check_roots().holds);
    }

    #[test]
    fn height_histogram_oracle() {
        let h = e8_height_histogram().unwrap();
        assert_eq!(h.values().sum::<usize>(), 120);
        assert_eq!(h.keys().max(), Some(&29));
        assert_eq!(h[&1], 8);
    }
}
