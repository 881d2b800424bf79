//! Ranks of identities in each irreducible representation of S_n.
//!
//! A multilinear identity of degree n splits by association type into t
//! elements of the group algebra; in partition λ it becomes a d × td block
//! row. Left-multiplying a block row by the invertible R_id does not change
//! its row space, so the rank computations here sum raw Clifton matrices and
//! never form ρ_λ(π) = R_id⁻¹ R_π explicitly. The ρ versions are kept for
//! display and for cross-checks.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{EchelonBasis, ModMatrix, Modulus, DEFAULT_PRIME};
use crate::identities::{identity_r, identity_s, lift_to_degree9, TernaryPolynomial, TrilinearOp};
use crate::symgroup::{partitions_of, Clifton, ModRepresentation, Partition, Permutation};
use crate::ternary::{skew_identities, type_table, Monomial, TypeTable};

/// Group-algebra terms of a multilinear polynomial: (type, permutation, coefficient mod p).
fn group_terms(p: &TernaryPolynomial, table: &TypeTable, m: Modulus) -> Result<Vec<(usize, Permutation, u32)>> {
    if p.degree() != table.degree() {
        return Err(Error::DegreeMismatch(table.degree(), p.degree()));
    }
    p.terms()
        .iter()
        .map(|(mono, c)| {
            let k = table
                .type_of(mono)
                .ok_or_else(|| Error::Invalid(format!("{mono} is not a partially alternating type")))?;
            Ok((k, monomial_permutation(mono)?, m.from_rational(c)?))
        })
        .collect()
}

/// The label sequence of a multilinear monomial read as a permutation.
pub fn monomial_permutation(m: &Monomial) -> Result<Permutation> {
    Permutation::from_images(m.labels().into_iter().map(usize::from).collect())
        .map_err(|_| Error::Invalid(format!("{m} is not multilinear in the first n letters")))
}

fn add_raw(c: &Clifton, perm: &Permutation, coeff: u32, acc: &mut ModMatrix, r0: usize, c0: usize) {
    let m = acc.modulus();
    let neg = m.neg(coeff);
    c.for_each_raw(perm, |i, j, s| acc.add_at(r0 + i, c0 + j, if s > 0 { coeff } else { neg }));
}

/// Block row Σ_k [Σ c R_σ]_k of raw Clifton sums, d × td.
pub fn raw_block_row(c: &Clifton, table: &TypeTable, p: &TernaryPolynomial, m: Modulus) -> Result<ModMatrix> {
    let d = c.dim();
    let mut row = ModMatrix::zeros(m, d, table.len() * d);
    for (k, perm, coeff) in group_terms(p, table, m)? {
        add_raw(c, &perm, coeff, &mut row, 0, k * d);
    }
    Ok(row)
}

/// The d × td matrix whose block k is ρ_λ(I_k).
pub fn identity_block_row(rep: &ModRepresentation, p: &TernaryPolynomial) -> Result<ModMatrix> {
    let table = type_table(p.degree())?;
    let raw = raw_block_row(rep.clifton(), &table, p, rep.modulus())?;
    let d = rep.dim();
    let mut out = ModMatrix::zeros(rep.modulus(), d, raw.ncols());
    for k in 0..table.len() {
        out.set_block(0, k * d, &rep.from_raw(&raw.submatrix(0..d, k * d..(k + 1) * d)));
    }
    Ok(out)
}

fn rank_of_rows(m: Modulus, cols: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> usize {
    let mut basis = EchelonBasis::new(m, cols);
    for r in rows {
        if basis.rank() == cols {
            break;
        }
        basis.insert(&r);
    }
    basis.rank()
}

/// Row spaces of the skew-symmetries, one per association type.
///
/// Every skew-symmetry involves a single type, so the matrix M_λ is block
/// diagonal and its rank is the sum of the per-type ranks.
pub struct SkewSpaces {
    pub per_type: Vec<EchelonBasis>,
}

impl SkewSpaces {
    pub fn new(c: &Clifton, n: usize, m: Modulus) -> Result<Self> {
        let table = type_table(n)?;
        let d = c.dim();
        let id = Permutation::identity(n);
        let mut per_type: Vec<EchelonBasis> = (0..table.len()).map(|_| EchelonBasis::new(m, d)).collect();
        for s in skew_identities(n)? {
            let mut block = ModMatrix::zeros(m, d, d);
            add_raw(c, &id, 1, &mut block, 0, 0);
            add_raw(c, &s.perm, 1, &mut block, 0, 0);
            for i in 0..d {
                per_type[s.type_index].insert(block.row(i));
            }
        }
        Ok(SkewSpaces { per_type })
    }

    pub fn rank(&self) -> usize {
        self.per_type.iter().map(|b| b.rank()).sum()
    }
}

/// Rank of the skew-symmetries of the degree-n types in partition λ.
pub fn symrank(lambda: &Partition, m: Modulus) -> Result<usize> {
    let c = Clifton::new(lambda);
    Ok(SkewSpaces::new(&c, lambda.n(), Modulus::for_degree(m.value(), lambda.n())?)?.rank())
}

/// M_λ as defined, with ρ_λ blocks: one d × td block row per skew-symmetry.
pub fn build_m_lambda(lambda: &Partition, m: Modulus) -> Result<ModMatrix> {
    let n = lambda.n();
    let rep = ModRepresentation::new(lambda, m)?;
    let table = type_table(n)?;
    let d = rep.dim();
    let skews = skew_identities(n)?;
    let mut out = ModMatrix::zeros(rep.modulus(), skews.len() * d, table.len() * d);
    let id = ModMatrix::identity(rep.modulus(), d);
    for (r, s) in skews.iter().enumerate() {
        let block = id.add(&rep.matrix(&s.perm))?;
        out.set_block(r * d, s.type_index * d, &block);
    }
    Ok(out)
}

/// Left side of X_λ built from raw Clifton sums: block (i, j) is the raw sum
/// over the words of E^i with center in position j.
fn raw_expansion_blocks(c: &Clifton, n: usize, m: Modulus) -> Result<ModMatrix> {
    let table = type_table(n)?;
    let d = c.dim();
    let t = table.len();
    let op = TrilinearOp::pats();
    let mut left = ModMatrix::zeros(m, t * d, n * d);
    for (i, ty) in table.types().iter().enumerate() {
        for (coeff, letters, center) in op.expand_raw(&ty.template) {
            let perm = Permutation::from_images(letters.into_iter().map(usize::from).collect())?;
            add_raw(c, &perm, m.from_i64(coeff), &mut left, i * d, center * d);
        }
    }
    Ok(left)
}

/// X_λ: left block (i, j) = ρ_λ(E^i_j), right block (i, n+i) = −I_d.
pub fn build_x_lambda(lambda: &Partition, m: Modulus) -> Result<ModMatrix> {
    let n = lambda.n();
    let rep = ModRepresentation::new(lambda, m)?;
    let m = rep.modulus();
    let t = type_table(n)?.len();
    let d = rep.dim();
    let raw = raw_expansion_blocks(rep.clifton(), n, m)?;
    let mut x = ModMatrix::zeros(m, t * d, (n + t) * d);
    let minus_one = m.neg(1);
    for i in 0..t {
        for j in 0..n {
            let block = raw.submatrix(i * d..(i + 1) * d, j * d..(j + 1) * d);
            x.set_block(i * d, j * d, &rep.from_raw(&block));
        }
        for r in 0..d {
            x.set(i * d + r, (n + i) * d + r, minus_one);
        }
    }
    Ok(x)
}

/// Rows of rref(X_λ) whose leading one lies in the right side.
pub fn exprank_of_x(x: &ModMatrix, n: usize, d: usize) -> usize {
    x.rref().pivots.iter().filter(|&&p| p >= n * d).count()
}

/// Rank of the identities satisfied by the expansions in partition λ.
///
/// X_λ has full row rank td because of the −I blocks, so the count of
/// right-side leading ones is td minus the rank of the left side; the left
/// side may use raw Clifton sums since each block row only changes by R_id.
pub fn exprank(lambda: &Partition, m: Modulus) -> Result<usize> {
    let n = lambda.n();
    let m = Modulus::for_degree(m.value(), n)?;
    let c = Clifton::new(lambda);
    let left = raw_expansion_blocks(&c, n, m)?;
    let rank = rank_of_rows(m, left.ncols(), (0..left.nrows()).map(|i| left.row(i).to_vec()));
    Ok(left.nrows() - rank)
}

/// The 20 degree-9 consequences of R and S.
pub fn degree9_consequences() -> &'static [TernaryPolynomial] {
    static LIFTS: OnceLock<Vec<TernaryPolynomial>> = OnceLock::new();
    LIFTS.get_or_init(|| {
        let mut v = lift_to_degree9(&identity_r()).expect("degree 7");
        v.extend(lift_to_degree9(&identity_s()).expect("degree 7"));
        v
    })
}

/// Rank of the skew-symmetries together with the given identities.
///
/// The identity rows are reduced block by block modulo the skew row space
/// of each type; what remains lives on the free columns of the skew spaces.
pub fn rank_with_identities(
    c: &Clifton,
    skews: &SkewSpaces,
    identities: &[TernaryPolynomial],
    m: Modulus,
) -> Result<usize> {
    let n = c.partition().n();
    let table = type_table(n)?;
    let d = c.dim();
    let free: Vec<Vec<usize>> = skews.per_type.iter().map(|b| b.free_columns().to_vec()).collect();
    let width: usize = free.iter().map(Vec::len).sum();
    let mut rest = EchelonBasis::new(m, width);
    for p in identities {
        let row = raw_block_row(c, &table, p, m)?;
        for r in 0..d {
            if rest.rank() == width {
                break;
            }
            let mut reduced = Vec::with_capacity(width);
            for (k, basis) in skews.per_type.iter().enumerate() {
                let mut block = row.row(r)[k * d..(k + 1) * d].to_vec();
                basis.reduce(&mut block);
                reduced.extend(free[k].iter().map(|&f| block[f]));
            }
            rest.insert(&reduced);
        }
    }
    Ok(skews.rank() + rest.rank())
}

/// Rank in degree 9 of the skew-symmetries and the consequences of R and S.
pub fn symlifrank(lambda: &Partition, m: Modulus) -> Result<usize> {
    if lambda.n() != 9 {
        return Err(Error::UnsupportedDegree(lambda.n(), "lifted identities live in degree 9".into()));
    }
    let m = Modulus::for_degree(m.value(), 9)?;
    let c = Clifton::new(lambda);
    let skews = SkewSpaces::new(&c, 9, m)?;
    rank_with_identities(&c, &skews, degree9_consequences(), m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub partition: Partition,
    pub dimension: usize,
    pub symrank: usize,
    pub exprank: usize,
    pub newrank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub symlifrank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub degree: usize,
    pub modulus: u32,
    pub rows: Vec<RankRow>,
}

impl RankTable {
    /// Σ newrank · dimension: the dimension of the new multilinear identities.
    pub fn checksum(&self) -> usize {
        self.rows.iter().map(|r| r.newrank * r.dimension).sum()
    }
}

/// All ranks for one partition; `with_lifts` adds symlifrank (degree 9).
pub fn rank_row(lambda: &Partition, m: Modulus, with_lifts: bool) -> Result<RankRow> {
    let n = lambda.n();
    let m = Modulus::for_degree(m.value(), n)?;
    let c = Clifton::new(lambda);
    let skews = SkewSpaces::new(&c, n, m)?;
    let symrank = skews.rank();
    let exprank = exprank(lambda, m)?;
    let symlifrank = if with_lifts {
        Some(rank_with_identities(&c, &skews, degree9_consequences(), m)?)
    } else {
        None
    };
    if exprank < symrank {
        return Err(Error::Invalid(format!(
            "exprank {exprank} below symrank {symrank} in {lambda}"
        )));
    }
    Ok(RankRow {
        partition: lambda.clone(),
        dimension: c.dim(),
        symrank,
        exprank,
        newrank: exprank - symrank,
        symlifrank,
    })
}

/// Rank table over the given partitions of n (all of them by default), in
/// the standard partition order. Degree 9 includes symlifrank.
pub fn rank_table(n: usize, m: Modulus, only: Option<&[Partition]>) -> Result<RankTable> {
    let parts: Vec<Partition> = match only {
        None => partitions_of(n),
        Some(sel) => {
            if let Some(bad) = sel.iter().find(|p| p.n() != n) {
                return Err(Error::InvalidPartition(format!("{bad} is not a partition of {n}")));
            }
            partitions_of(n).into_iter().filter(|p| sel.contains(p)).collect()
        }
    };
    let with_lifts = n == 9;
    let rows = parts
        .par_iter()
        .map(|p| rank_row(p, m, with_lifts))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankTable {
        degree: n,
        modulus: m.value(),
        rows,
    })
}

pub fn default_modulus() -> Modulus {
    Modulus::new(DEFAULT_PRIME).expect("prime")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::identity_q;
    use crate::ternary::Level;

    fn p101() -> Modulus {
        default_modulus()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn single_monomial_block_is_identity() {
        let lambda = part("421");
        let rep = ModRepresentation::new(&lambda, p101()).unwrap();
        let table = type_table(7).unwrap();
        for k in 0..table.len() {
            let mut p = TernaryPolynomial::zero(7, Level::PQ);
            p.add_monomial(&num_rational::BigRational::from_integer(1.into()), &table.types()[k].template).unwrap();
            let row = identity_block_row(&rep, &p).unwrap();
            let d = rep.dim();
            for b in 0..table.len() {
                let block = row.submatrix(0..d, b * d..(b + 1) * d);
                if b == k {
                    assert_eq!(block, ModMatrix::identity(p101(), d));
                } else {
                    assert!(block.is_zero());
                }
            }
        }
    }

    #[test]
    fn symrank_matches_definition() {
        for lambda in partitions_of(7) {
            let direct = build_m_lambda(&lambda, p101()).unwrap().rank();
            assert_eq!(symrank(&lambda, p101()).unwrap(), direct, "{lambda}");
        }
    }

    #[test]
    fn exprank_matches_definition() {
        for lambda in partitions_of(7) {
            let d = lambda.dimension();
            let x = build_x_lambda(&lambda, p101()).unwrap();
            assert_eq!((x.nrows(), x.ncols()), (5 * d, 12 * d));
            assert_eq!(exprank(&lambda, p101()).unwrap(), exprank_of_x(&x, 7, d), "{lambda}");
        }
    }

    #[test]
    fn exprank_independent_of_prime() {
        for lambda in partitions_of(7) {
            let a = exprank(&lambda, p101()).unwrap();
            let b = exprank(&lambda, Modulus::new(103).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn ranks_of_r_and_s_add_up_to_orbit_dimensions() {
        // rank added to the skew-symmetries, weighted by dimension, is the orbit dimension
        let (r, s) = (identity_r(), identity_s());
        let cases = [(vec![r.clone()], 7), (vec![s.clone()], 42), (vec![r, s], 49)];
        let parts = partitions_of(7);
        let mut newranks = vec![0; parts.len()];
        for (polys, dim) in &cases {
            let mut total = 0;
            for (k, lambda) in parts.iter().enumerate() {
                let c = Clifton::new(lambda);
                let skews = SkewSpaces::new(&c, 7, p101()).unwrap();
                let extra = rank_with_identities(&c, &skews, polys, p101()).unwrap() - skews.rank();
                total += lambda.dimension() * extra;
                newranks[k] = extra;
            }
            assert_eq!(total, *dim);
        }
        for (k, lambda) in parts.iter().enumerate() {
            assert_eq!(newranks[k], rank_row(lambda, p101(), false).unwrap().newrank, "{lambda}");
        }
    }

    #[test]
    fn quotient_rank_matches_stacked_rank() {
        // symlifrank through per-type quotients equals the rank of the full stack
        let m = p101();
        for lambda in ["9", "81", "711", "63"] {
            let lambda = part(lambda);
            let c = Clifton::new(&lambda);
            let table = type_table(9).unwrap();
            let skews = SkewSpaces::new(&c, 9, m).unwrap();
            let fast = rank_with_identities(&c, &skews, degree9_consequences(), m).unwrap();
            let d = c.dim();
            let mut rows = Vec::new();
            let id = Permutation::identity(9);
            for s in skew_identities(9).unwrap() {
                let mut r = ModMatrix::zeros(m, d, table.len() * d);
                add_raw(&c, &id, 1, &mut r, 0, s.type_index * d);
                add_raw(&c, &s.perm, 1, &mut r, 0, s.type_index * d);
                rows.extend((0..d).map(|i| r.row(i).to_vec()));
            }
            for p in degree9_consequences() {
                let r = raw_block_row(&c, &table, p, m).unwrap();
                rows.extend((0..d).map(|i| r.row(i).to_vec()));
            }
            assert_eq!(fast, rank_of_rows(m, table.len() * d, rows), "{lambda}");
        }
    }

    #[test]
    fn degree_five_ranks() {
        // Q accounts for everything new in degree 5 once P is built into the types
        let table = type_table(5).unwrap();
        let mut q = TernaryPolynomial::zero(5, Level::PQ);
        for (mono, c) in identity_q().terms() {
            q.add_monomial(c, mono).unwrap();
        }
        assert!(q.is_zero());
        let t = rank_table(5, p101(), None).unwrap();
        assert_eq!(t.checksum(), 0);
        assert_eq!(table.len(), 2);
    }

    #[test]
    fn modulus_must_exceed_degree() {
        assert!(exprank(&part("7"), Modulus::new(7).unwrap()).is_err());
        assert!(symlifrank(&part("7"), p101()).is_err());
    }
}
