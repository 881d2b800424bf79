//! Dense exact linear algebra over the rationals and over prime fields.
//!
//! Both matrix types expose the same services: reduced row echelon form
//! (leading ones, zero rows last, first-nonzero pivoting), rank, and a
//! canonical nullspace basis. The reduced row echelon form of a matrix is
//! unique, so the mod-p path is free to build it incrementally row by row.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime for bulk computations.
pub const DEFAULT_PRIME: u32 = 101;

/// An odd prime below 2^16 used as the scalar field F_p.
///
/// The bound keeps every product of two reduced residues inside `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Modulus {
    p: u32,
    barrett: u64,
}

impl Modulus {
    pub fn new(p: u32) -> Result<Self> {
        if !(3..=65521).contains(&p) || !is_prime(p as u64) {
            return Err(Error::BadModulus { p: p as u64, n: 2 });
        }
        Ok(Modulus {
            p,
            barrett: u64::MAX / p as u64,
        })
    }

    /// A modulus valid for S_n-module computations, i.e. with p > n.
    pub fn for_degree(p: u32, n: usize) -> Result<Self> {
        let m = Modulus::new(p).map_err(|_| Error::BadModulus { p: p as u64, n })?;
        if (p as usize) <= n {
            return Err(Error::BadModulus { p: p as u64, n });
        }
        Ok(m)
    }

    #[inline]
    pub fn value(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p as u64;
        if r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn from_rational(&self, x: &BigRational) -> Result<u32> {
        let p = BigInt::from(self.p);
        let num = x.numer().mod_floor(&p).to_u32().unwrap();
        let den = x.denom().mod_floor(&p).to_u32().unwrap();
        if den == 0 {
            return Err(Error::Invalid(format!(
                "denominator of {x} vanishes mod {}",
                self.p
            )));
        }
        Ok(self.mul(num, self.inv(den)))
    }

    /// Symmetric lift into (-p/2, p/2).
    pub fn lift(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// `row[k] += f * src[k]` over the listed columns.
    #[inline]
    fn axpy_at(&self, row: &mut [u32], f: u32, src: &[u32], cols: &[usize]) {
        for &k in cols {
            let s = src[k];
            if s != 0 {
                row[k] = self.reduce(row[k] as u64 + f as u64 * s as u64);
            }
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Scalar domain selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" | "q" | "rational" => Ok(Field::Rational),
            _ => {
                let p: u32 = s
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad modulus {s:?}")))?;
                Modulus::new(p)?;
                Ok(Field::Prime(p))
            }
        }
    }
}

/// Reduced row echelon form: only the nonzero rows are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub nrows: usize,
    pub ncols: usize,
}

impl<T> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

fn content_normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
    v
}

// ---------------------------------------------------------------------------
// Rational matrices

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, BigRational::from_integer(x.into()));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &BigRational) {
        let e = &mut self.data[i * self.cols + j];
        *e = &*e + x;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &RatMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Invalid("matrix shape mismatch".into()));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Invalid("matrix shape mismatch".into()));
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rref(&self) -> Rref<BigRational> {
        let mut rows: Vec<Vec<BigRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, k);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = rows[r].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Rref {
            rows,
            pivots,
            nrows: self.rows,
            ncols: self.cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// One integral vector per free column, content 1, first nonzero entry positive.
    pub fn nullspace_basis(&self) -> Vec<Vec<BigInt>> {
        let rref = self.rref();
        rref.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &pc) in rref.rows.iter().zip(&rref.pivots) {
                    v[pc] = -row[f].clone();
                }
                let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                let ints = v.iter().map(|x| (x * &l).to_integer()).collect();
                content_normalize(ints)
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRational::one());
        }
        let rref = aug.rref();
        if rref.rank() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = RatMatrix::zeros(n, n);
        for (i, row) in rref.rows.iter().enumerate() {
            for j in 0..n {
                inv.set(i, j, row[n + j].clone());
            }
        }
        Some(inv)
    }

    pub fn to_mod(&self, m: Modulus) -> Result<ModMatrix> {
        let mut out = ModMatrix::zeros(m, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, m.from_rational(self.get(i, j))?);
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Matrices over F_p

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl ModMatrix {
    pub fn zeros(modulus: Modulus, rows: usize, cols: usize) -> Self {
        ModMatrix {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(modulus: Modulus, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_i64_rows(modulus: Modulus, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(modulus, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, modulus.from_i64(x));
            }
        }
        m
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, x: u32) {
        let e = &mut self.data[i * self.cols + j];
        *e = self.modulus.add(*e, x);
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Entries as symmetric lifts, row-major.
    pub fn lifted_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| self.modulus.lift(x)).collect())
            .collect()
    }

    /// Copy `block` into the submatrix starting at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &ModMatrix) {
        for i in 0..block.rows {
            let src = block.row(i);
            let start = (r0 + i) * self.cols + c0;
            self.data[start..start + block.cols].copy_from_slice(src);
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> ModMatrix {
        let mut out = ModMatrix::zeros(self.modulus, rows.len(), cols.len());
        for (oi, i) in rows.enumerate() {
            let src = &self.row(i)[cols.clone()];
            out.row_mut(oi).copy_from_slice(src);
        }
        out
    }

    pub fn mul(&self, other: &ModMatrix) -> Result<ModMatrix> {
        if self.cols != other.rows || self.modulus != other.modulus {
            return Err(Error::Invalid("matrix shape mismatch".into()));
        }
        let m = self.modulus;
        let mut out = ModMatrix::zeros(m, self.rows, other.cols);
        // Accumulate in u64 and reduce once per row; (p-1)^2 * k stays far below 2^64.
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (x, &b) in acc.iter_mut().zip(other.row(k)) {
                    *x += a * b as u64;
                }
            }
            for (o, &x) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = m.reduce(x);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ModMatrix) -> Result<ModMatrix> {
        if self.rows != other.rows || self.cols != other.cols || self.modulus != other.modulus {
            return Err(Error::Invalid("matrix shape mismatch".into()));
        }
        let m = self.modulus;
        Ok(ModMatrix {
            modulus: m,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| m.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: u32) -> ModMatrix {
        let m = self.modulus;
        ModMatrix {
            modulus: m,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| m.mul(a, c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rref(&self) -> Rref<u32> {
        let mut basis = EchelonBasis::new(self.modulus, self.cols);
        for i in 0..self.rows {
            basis.insert(self.row(i));
        }
        let mut rref = basis.into_rref();
        rref.nrows = self.rows;
        rref
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.modulus, self.cols);
        for i in 0..self.rows {
            basis.insert(self.row(i));
            if basis.rank() == self.cols {
                break;
            }
        }
        basis.rank()
    }

    /// Canonical nullspace basis, symmetrically lifted to integers.
    pub fn nullspace_basis(&self) -> Vec<Vec<i64>> {
        nullspace_from_rref(self.modulus, &self.rref())
    }

    pub fn inverse(&self) -> Option<ModMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = ModMatrix::zeros(self.modulus, n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, 1);
        }
        let rref = aug.rref();
        if rref.rank() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ModMatrix::zeros(self.modulus, n, n);
        for (i, row) in rref.rows.iter().enumerate() {
            inv.row_mut(i).copy_from_slice(&row[n..]);
        }
        Some(inv)
    }
}

pub fn nullspace_from_rref(m: Modulus, rref: &Rref<u32>) -> Vec<Vec<i64>> {
    rref.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![0u32; rref.ncols];
            v[f] = 1;
            for (row, &pc) in rref.rows.iter().zip(&rref.pivots) {
                v[pc] = m.neg(row[f]);
            }
            let ints = v.iter().map(|&x| BigInt::from(m.lift(x))).collect();
            content_normalize(ints)
                .into_iter()
                .map(|x| x.to_i64().expect("lifted entries fit in i64"))
                .collect()
        })
        .collect()
}

/// A fully reduced echelon basis of a growing row space over F_p.
///
/// Every stored row has a leading one, and is zero in the pivot columns of
/// all other stored rows. Inserting a row therefore costs one pass over the
/// pivot entries of the incoming row plus, when the rank grows, one update
/// of each stored row restricted to the currently free columns.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    modulus: Modulus,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
    free: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(modulus: Modulus, cols: usize) -> Self {
        EchelonBasis {
            modulus,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; cols],
            free: (0..cols).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Columns that currently carry no pivot, ascending.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Reduce `row` in place modulo the stored row space.
    pub fn reduce(&self, row: &mut [u32]) {
        let m = self.modulus;
        let hits: Vec<(usize, u32)> = row
            .iter()
            .enumerate()
            .filter_map(|(c, &x)| match (x, self.pivot_row[c]) {
                (0, _) | (_, None) => None,
                (x, Some(r)) => Some((r, x)),
            })
            .collect();
        for (r, x) in hits {
            let pc = self.pivots[r];
            row[pc] = 0;
            m.axpy_at(row, m.neg(x), &self.rows[r], &self.free);
        }
    }

    /// Insert a row; returns true when the rank grows.
    pub fn insert(&mut self, row: &[u32]) -> bool {
        let mut row = row.to_vec();
        self.reduce(&mut row);
        self.insert_reduced(row)
    }

    /// Insert a row given as signed integers.
    pub fn insert_i64(&mut self, row: &[i64]) -> bool {
        let m = self.modulus;
        let row: Vec<u32> = row.iter().map(|&x| m.from_i64(x)).collect();
        self.insert(&row)
    }

    fn insert_reduced(&mut self, mut row: Vec<u32>) -> bool {
        let m = self.modulus;
        let Some(pos) = self.free.iter().position(|&c| row[c] != 0) else {
            return false;
        };
        let c = self.free[pos];
        let inv = m.inv(row[c]);
        if inv != 1 {
            for &k in &self.free[pos..] {
                row[k] = m.mul(row[k], inv);
            }
        }
        self.free.remove(pos);
        row[c] = 1;
        let free = &self.free[pos.min(self.free.len())..];
        // Entries left of the new pivot are zero, so only free columns right of it move.
        let support: Vec<usize> = free.iter().copied().filter(|&k| row[k] != 0).collect();
        for other in self.rows.iter_mut() {
            let f = other[c];
            if f != 0 {
                other[c] = 0;
                m.axpy_at(other, m.neg(f), &row, &support);
            }
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.pivots.push(c);
        self.rows.push(row);
        true
    }

    pub fn into_rref(self) -> Rref<u32> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivots[r]);
        let mut rows = self.rows;
        let pivots: Vec<usize> = order.iter().map(|&r| self.pivots[r]).collect();
        let mut sorted = Vec::with_capacity(rows.len());
        for &r in &order {
            sorted.push(std::mem::take(&mut rows[r]));
        }
        Rref {
            rows: sorted,
            pivots,
            nrows: 0,
            ncols: self.cols,
        }
    }
}

/// A matrix over one of the two supported scalar domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactMatrix {
    Rational(RatMatrix),
    Modular(ModMatrix),
}

impl ExactMatrix {
    pub fn nrows(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.nrows(),
            ExactMatrix::Modular(m) => m.nrows(),
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.ncols(),
            ExactMatrix::Modular(m) => m.ncols(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.rank(),
            ExactMatrix::Modular(m) => m.rank(),
        }
    }

    /// Canonical nullspace basis as integers (symmetric lift in the modular case).
    pub fn nullspace_basis(&self) -> Vec<Vec<BigInt>> {
        match self {
            ExactMatrix::Rational(m) => m.nullspace_basis(),
            ExactMatrix::Modular(m) => m
                .nullspace_basis()
                .into_iter()
                .map(|v| v.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m101() -> Modulus {
        Modulus::new(101).unwrap()
    }

    #[test]
    fn modulus_rejects_composites_and_small_primes() {
        assert!(Modulus::new(100).is_err());
        assert!(Modulus::new(2).is_err());
        assert!(Modulus::for_degree(7, 7).is_err());
        assert!(Modulus::for_degree(11, 9).is_ok());
        assert!(Modulus::new(65521).is_ok());
    }

    #[test]
    fn barrett_reduction_matches_remainder() {
        for p in [3u32, 101, 103, 65521] {
            let m = Modulus::new(p).unwrap();
            for x in [0u64, 1, p as u64 - 1, p as u64, (p as u64 - 1) * (p as u64 - 1), 4294967295, 123456789] {
                assert_eq!(m.reduce(x) as u64, x % p as u64, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn identity_rref_is_itself() {
        let id = RatMatrix::identity(4);
        let r = id.rref();
        assert_eq!(r.rank(), 4);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
        let idm = ModMatrix::identity(m101(), 4);
        assert_eq!(idm.rref().rows, (0..4).map(|i| idm.row(i).to_vec()).collect::<Vec<_>>());
    }

    #[test]
    fn zero_matrix_nullspace_is_standard_basis() {
        let z = RatMatrix::zeros(3, 4);
        let ns = z.nullspace_basis();
        assert_eq!(ns.len(), 4);
        for (i, v) in ns.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, BigInt::from((i == j) as i64));
            }
        }
        let zm = ModMatrix::zeros(m101(), 3, 4);
        assert_eq!(zm.nullspace_basis().len(), 4);
    }

    #[test]
    fn nullspace_is_content_one_and_positive() {
        // x + 2y - 4z = 0 has nullspace spanned by (-2,1,0) -> (2,-1,0) and (4,0,1)
        let a = RatMatrix::from_i64_rows(&[vec![1, 2, -4]]);
        let ns = a.nullspace_basis();
        let as_i: Vec<Vec<i64>> = ns.iter().map(|v| v.iter().map(|x| x.to_i64().unwrap()).collect()).collect();
        assert_eq!(as_i, vec![vec![2, -1, 0], vec![4, 0, 1]]);
        let am = ModMatrix::from_i64_rows(m101(), &[vec![1, 2, -4]]);
        assert_eq!(am.nullspace_basis(), as_i);
        // fractional solutions get cleared
        let b = RatMatrix::from_i64_rows(&[vec![2, 1]]);
        let v: Vec<i64> = b.nullspace_basis()[0].iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(v, vec![1, -2]);
    }

    #[test]
    fn rref_is_idempotent_and_matches_modular() {
        let rows = vec![
            vec![0, 2, 4, 1, 3],
            vec![1, 1, 1, 1, 1],
            vec![1, 3, 5, 2, 4],
            vec![2, 0, -2, 5, 1],
        ];
        let q = RatMatrix::from_i64_rows(&rows);
        let r = q.rref();
        let mut again = RatMatrix::zeros(r.rank(), 5);
        for (i, row) in r.rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                again.set(i, j, x.clone());
            }
        }
        assert_eq!(again.rref().rows, r.rows);
        let m = ModMatrix::from_i64_rows(m101(), &rows);
        let rm = m.rref();
        assert_eq!(rm.pivots, r.pivots);
        for (qr, mr) in r.rows.iter().zip(&rm.rows) {
            for (x, &y) in qr.iter().zip(mr) {
                assert_eq!(m101().from_rational(x).unwrap(), y);
            }
        }
    }

    #[test]
    fn inverses() {
        let a = RatMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert!(RatMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
        let am = a.to_mod(m101()).unwrap();
        assert_eq!(am.mul(&am.inverse().unwrap()).unwrap(), ModMatrix::identity(m101(), 2));
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let rows = vec![vec![1, -1, 0, 2, 0], vec![0, 0, 1, -1, 3], vec![1, -1, 1, 1, 3]];
        let q = RatMatrix::from_i64_rows(&rows);
        for v in q.nullspace_basis() {
            for r in &rows {
                let s: BigInt = r.iter().zip(&v).map(|(&a, b)| BigInt::from(a) * b).sum();
                assert!(s.is_zero());
            }
        }
    }
}
