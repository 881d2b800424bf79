//! Permutations, partitions, standard tableaux and Clifton's construction of
//! the irreducible representation matrices of S_n.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{ModMatrix, Modulus, RatMatrix};

/// A permutation of {0, .., n-1}; `images[i]` is the image of `i`.
///
/// Text and JSON forms are one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?}")));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// The transposition of `i` and `j` (zero-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// +1 for even, -1 for odd permutations.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.n()];
        let mut transpositions = 0;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of degree n in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.iter().map(|&x| x as u8).collect(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts one-based image lists such as `[2,1,3]`, `2,1,3` or `213`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images: Vec<usize> = if t.contains(',') || t.contains(' ') {
            t.split([',', ' '])
                .filter(|x| !x.is_empty())
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPermutation(s.to_string()))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::InvalidPermutation(s.to_string()))?
        };
        Permutation::from_one_based(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// Standard next-permutation step; returns false after the last arrangement.
/// Works on multisets, producing each distinct arrangement once.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> usize {
        let n = self.n();
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for (c, &height) in conj.iter().enumerate().take(len) {
                hooks *= ((len - c - 1) + (height - r - 1) + 1) as u128;
            }
        }
        ((1..=n as u128).product::<u128>() / hooks) as usize
    }

    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.parts[0];
        (0..width)
            .map(|c| self.parts.iter().filter(|&&l| l > c).count())
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p < 10) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `421`, `4,2,1` or `[4,2,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Option<Vec<usize>> = if t.contains(',') {
            t.split(',').map(|x| x.trim().parse().ok()).collect()
        } else {
            t.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        Partition::new(parts.ok_or_else(|| Error::InvalidPartition(s.to_string()))?)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of n, lexicographically decreasing.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

// ---------------------------------------------------------------------------

/// A standard tableau; rows of zero-based entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// One-based entries row by row.
    pub fn one_based_rows(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| x as usize + 1).collect())
            .collect()
    }

    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.concat()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        rows_ok && cols_ok
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .one_based_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based_rows().serialize(s)
    }
}

/// All standard tableaux of the frame, sorted by row reading word.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    let n = lambda.n();
    let shape = lambda.parts().to_vec();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|_| Vec::new()).collect();
    // Place 0..n in increasing order; a number may go at the end of row r if
    // the row is not full and the row above is strictly longer.
    fn rec(k: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<u8>>, out: &mut Vec<StandardTableau>) {
        if k == n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k as u8);
                rec(k + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(0, n, &shape, &mut rows, &mut out);
    out.sort_by_key(|a| a.reading_word());
    out
}

// ---------------------------------------------------------------------------

/// Precomputed tableau data for Clifton matrices in one partition.
#[derive(Debug)]
pub struct Clifton {
    partition: Partition,
    tableaux: Vec<StandardTableau>,
    /// Per tableau: entries grouped by column, top to bottom.
    columns: Vec<Vec<Vec<u8>>>,
    /// Per tableau: row index of each entry.
    row_of: Vec<Vec<u8>>,
}

impl Clifton {
    pub fn new(partition: &Partition) -> Self {
        let tableaux = standard_tableaux(partition);
        let conj = partition.conjugate();
        let n = partition.n();
        let columns = tableaux
            .iter()
            .map(|t| {
                (0..conj.len())
                    .map(|c| (0..conj[c]).map(|r| t.rows[r][c]).collect())
                    .collect()
            })
            .collect();
        let row_of = tableaux
            .iter()
            .map(|t| {
                let mut v = vec![0u8; n];
                for (r, row) in t.rows.iter().enumerate() {
                    for &x in row {
                        v[x as usize] = r as u8;
                    }
                }
                v
            })
            .collect();
        Clifton {
            partition: partition.clone(),
            tableaux,
            columns,
            row_of,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Visit every nonzero entry `(i, j, ±1)` of the raw matrix R^λ_π.
    ///
    /// Entry (i, j) vanishes when two numbers share a column of T_i and a row
    /// of πT_j; otherwise it is the sign of the column-preserving permutation
    /// of T_i that moves each number into its row in πT_j.
    pub fn for_each_raw(&self, perm: &Permutation, mut visit: impl FnMut(usize, usize, i8)) {
        let n = self.partition.n();
        assert_eq!(perm.n(), n, "permutation degree");
        let inv = perm.inverse();
        let d = self.dim();
        let mut target = vec![0u8; n];
        for j in 0..d {
            // row of y in πT_j is the row of π^{-1}(y) in T_j
            for (y, t) in target.iter_mut().enumerate() {
                *t = self.row_of[j][inv.apply(y)];
            }
            'tableau: for i in 0..d {
                let mut sign = 1i8;
                for col in &self.columns[i] {
                    let mut seen = 0u32;
                    for (k, &x) in col.iter().enumerate() {
                        let r = target[x as usize];
                        let bit = 1u32 << r;
                        if seen & bit != 0 {
                            continue 'tableau;
                        }
                        seen |= bit;
                        // count earlier entries of the column headed to a lower row
                        for &y in &col[..k] {
                            if target[y as usize] > r {
                                sign = -sign;
                            }
                        }
                    }
                }
                visit(i, j, sign);
            }
        }
    }

    /// R^λ_π with integer entries, row-major.
    pub fn raw(&self, perm: &Permutation) -> Vec<i8> {
        let d = self.dim();
        let mut out = vec![0i8; d * d];
        self.for_each_raw(perm, |i, j, s| out[i * d + j] = s);
        out
    }

    pub fn raw_rational(&self, perm: &Permutation) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        self.for_each_raw(perm, |i, j, s| m.set(i, j, BigRational::from_integer((s as i64).into())));
        m
    }

    /// `acc += coeff * R^λ_π` over F_p.
    pub fn accumulate_raw(&self, perm: &Permutation, coeff: u32, acc: &mut ModMatrix) {
        let m = acc.modulus();
        let neg = m.neg(coeff);
        self.for_each_raw(perm, |i, j, s| acc.add_at(i, j, if s > 0 { coeff } else { neg }));
    }
}

/// Clifton matrix R^λ_π over the rationals.
pub fn clifton_raw(lambda: &Partition, perm: &Permutation) -> Result<RatMatrix> {
    if perm.n() != lambda.n() {
        return Err(Error::DegreeMismatch(perm.n(), lambda.n()));
    }
    Ok(Clifton::new(lambda).raw_rational(perm))
}

/// Representation ρ_λ over the rationals, ρ_λ(π) = (R^λ_id)^{-1} R^λ_π,
/// memoized per permutation.
#[derive(Debug)]
pub struct Representation {
    clifton: Clifton,
    rid_inv: RatMatrix,
    cache: RwLock<HashMap<Permutation, Arc<RatMatrix>>>,
}

impl Representation {
    pub fn new(lambda: &Partition) -> Self {
        let clifton = Clifton::new(lambda);
        let rid = clifton.raw_rational(&Permutation::identity(lambda.n()));
        let rid_inv = rid.inverse().expect("R^λ_id is invertible");
        Representation {
            clifton,
            rid_inv,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.clifton.dim()
    }

    pub fn clifton(&self) -> &Clifton {
        &self.clifton
    }

    pub fn matrix(&self, perm: &Permutation) -> Result<Arc<RatMatrix>> {
        if perm.n() != self.clifton.partition.n() {
            return Err(Error::DegreeMismatch(perm.n(), self.clifton.partition.n()));
        }
        if let Some(m) = self.cache.read().unwrap().get(perm) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.rid_inv.mul(&self.clifton.raw_rational(perm))?);
        self.cache.write().unwrap().insert(perm.clone(), m.clone());
        Ok(m)
    }

    pub fn of_element(&self, g: &GroupAlgebraElement) -> Result<RatMatrix> {
        if g.n != self.clifton.partition.n() {
            return Err(Error::DegreeMismatch(g.n, self.clifton.partition.n()));
        }
        // ρ is linear, so sum raw matrices first and invert once.
        let d = self.dim();
        let mut raw = RatMatrix::zeros(d, d);
        for (perm, c) in &g.terms {
            self.clifton.for_each_raw(perm, |i, j, s| {
                if s > 0 {
                    raw.add_at(i, j, c)
                } else {
                    raw.add_at(i, j, &-c.clone())
                }
            });
        }
        self.rid_inv.mul(&raw)
    }
}

pub fn rep_matrix(lambda: &Partition, perm: &Permutation) -> Result<RatMatrix> {
    Ok((*Representation::new(lambda).matrix(perm)?).clone())
}

pub fn rep_of_element(lambda: &Partition, g: &GroupAlgebraElement) -> Result<RatMatrix> {
    Representation::new(lambda).of_element(g)
}

/// ρ_λ over F_p, using the same formula.
#[derive(Debug)]
pub struct ModRepresentation {
    clifton: Clifton,
    rid: ModMatrix,
    rid_inv: ModMatrix,
}

impl ModRepresentation {
    pub fn new(lambda: &Partition, modulus: Modulus) -> Result<Self> {
        let modulus = Modulus::for_degree(modulus.value(), lambda.n())?;
        let clifton = Clifton::new(lambda);
        let d = clifton.dim();
        let mut rid = ModMatrix::zeros(modulus, d, d);
        clifton.accumulate_raw(&Permutation::identity(lambda.n()), 1, &mut rid);
        let rid_inv = rid
            .inverse()
            .ok_or_else(|| Error::Invalid(format!("R_id singular mod {modulus} for {lambda}")))?;
        Ok(ModRepresentation { clifton, rid, rid_inv })
    }

    pub fn modulus(&self) -> Modulus {
        self.rid.modulus()
    }

    pub fn dim(&self) -> usize {
        self.clifton.dim()
    }

    pub fn clifton(&self) -> &Clifton {
        &self.clifton
    }

    pub fn raw_identity(&self) -> &ModMatrix {
        &self.rid
    }

    pub fn raw(&self, perm: &Permutation) -> ModMatrix {
        let d = self.dim();
        let mut m = ModMatrix::zeros(self.modulus(), d, d);
        self.clifton.accumulate_raw(perm, 1, &mut m);
        m
    }

    pub fn matrix(&self, perm: &Permutation) -> ModMatrix {
        self.rid_inv.mul(&self.raw(perm)).expect("square")
    }

    /// Left-multiply a sum of raw matrices by (R^λ_id)^{-1}.
    pub fn from_raw(&self, raw: &ModMatrix) -> ModMatrix {
        self.rid_inv.mul(raw).expect("square")
    }

    pub fn of_element(&self, g: &GroupAlgebraElement) -> Result<ModMatrix> {
        let d = self.dim();
        let m = self.modulus();
        let mut raw = ModMatrix::zeros(m, d, d);
        for (perm, c) in &g.terms {
            self.clifton.accumulate_raw(perm, m.from_rational(c)?, &mut raw);
        }
        Ok(self.from_raw(&raw))
    }
}

// ---------------------------------------------------------------------------

/// Element of the group algebra Q S_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_perm(perm: Permutation, c: BigRational) -> Self {
        let mut g = Self::zero(perm.n());
        g.add_term(perm, c).expect("same degree");
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, perm: Permutation, c: BigRational) -> Result<()> {
        if perm.n() != self.n {
            return Err(Error::DegreeMismatch(perm.n(), self.n));
        }
        let e = self.terms.entry(perm).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Left action: π · Σ c_σ σ = Σ c_σ (π∘σ).
    pub fn act(&self, perm: &Permutation) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(perm.compose(p)?, c.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q)?, a * b)?;
            }
        }
        Ok(out)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n), BigRational::one())
    }
}
