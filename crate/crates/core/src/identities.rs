//! Expansion of ternary monomials into the free dialgebra, expansion
//! matrices, identity discovery by nullspace, and the named identities.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dialgebra::{all_words, kp_transform, ats_terms, DialgebraPolynomial, DialgebraWord, Letter};
use crate::error::{Error, Result};
use crate::exactla::{nullspace_from_rref, EchelonBasis, Field, Modulus, RatMatrix, Rref};
use crate::symgroup::{next_permutation, Permutation};
use crate::ternary::{enumerate_monomials, straighten_at, type_table, Level, Monomial, SignedMonomial};

// ---------------------------------------------------------------------------
// Trilinear operations and expansion

/// A trilinear dialgebra operation `[x,y,z]`, given as signed normal-form
/// words in the three arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrilinearOp {
    /// (coefficient, argument order, index of the argument carrying the center)
    terms: Vec<(i64, [usize; 3], usize)>,
}

impl TrilinearOp {
    /// x̂yz − x̂zy − yx̂z + zx̂y + yzx̂ − zyx̂
    pub fn pats() -> Self {
        TrilinearOp {
            terms: vec![
                (1, [0, 1, 2], 0),
                (-1, [0, 2, 1], 0),
                (-1, [1, 0, 2], 0),
                (1, [2, 0, 1], 0),
                (1, [1, 2, 0], 0),
                (-1, [2, 1, 0], 0),
            ],
        }
    }

    /// Read an operation off a dialgebra polynomial in the letters `a, b, c`.
    pub fn from_polynomial(p: &DialgebraPolynomial) -> Result<Self> {
        let mut terms = Vec::new();
        for (w, c) in p.terms() {
            let order: Vec<usize> = w.letters().iter().map(|&l| l as usize).collect();
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != [0, 1, 2] {
                return Err(Error::Invalid(format!("{w} is not a multilinear word in a, b, c")));
            }
            if !c.is_integer() {
                return Err(Error::Invalid(format!("non-integral coefficient {c}")));
            }
            let c = c.to_integer().try_into().map_err(|_| Error::Invalid("coefficient overflow".into()))?;
            terms.push((c, [order[0], order[1], order[2]], w.center_letter() as usize));
        }
        Ok(TrilinearOp { terms })
    }

    /// The dialgebra operation obtained from the alternating ternary sum by
    /// making `center` the center of every term.
    pub fn kp_ats(center: Letter) -> Result<Self> {
        Self::from_polynomial(&kp_transform(&ats_terms(), center)?.evaluate())
    }

    /// Signed words of the expansion of `m`, in no particular order and
    /// without collecting like terms.
    pub fn expand_raw(&self, m: &Monomial) -> Vec<(i64, Vec<Letter>, usize)> {
        match m {
            Monomial::Leaf(l) => vec![(1, vec![*l], 0)],
            Monomial::Node(ch) => {
                let ex: Vec<_> = ch.iter().map(|c| self.expand_raw(c)).collect();
                let len: usize = m.degree();
                let mut out = Vec::with_capacity(self.terms.len() * ex.iter().map(Vec::len).product::<usize>());
                for &(c, order, carg) in &self.terms {
                    let offset: usize = order.iter().take_while(|&&k| k != carg).map(|&k| ex[k][0].1.len()).sum();
                    for (c0, w0, z0) in &ex[order[0]] {
                        for (c1, w1, z1) in &ex[order[1]] {
                            for (c2, w2, z2) in &ex[order[2]] {
                                let mut letters = Vec::with_capacity(len);
                                letters.extend_from_slice(w0);
                                letters.extend_from_slice(w1);
                                letters.extend_from_slice(w2);
                                let inner = [z0, z1, z2][order.iter().position(|&k| k == carg).unwrap()];
                                out.push((c * c0 * c1 * c2, letters, offset + inner));
                            }
                        }
                    }
                }
                out
            }
        }
    }

    /// Expansion with like terms collected.
    pub fn expand(&self, m: &Monomial) -> Vec<(DialgebraWord, i64)> {
        let mut acc: BTreeMap<DialgebraWord, i64> = BTreeMap::new();
        for (c, letters, z) in self.expand_raw(m) {
            let w = DialgebraWord::new(letters, z).expect("center inside word");
            *acc.entry(w).or_insert(0) += c;
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }
}

/// PATS expansion of a ternary monomial.
pub fn expand_pats(m: &Monomial) -> DialgebraPolynomial {
    let mut p = DialgebraPolynomial::zero();
    for (w, c) in TrilinearOp::pats().expand(m) {
        p.add_term(w, BigRational::from_integer(c.into()));
    }
    p
}

// ---------------------------------------------------------------------------
// Ternary polynomials

/// Linear combination of straightened ternary monomials of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryPolynomial {
    degree: usize,
    level: Level,
    terms: BTreeMap<Monomial, BigRational>,
}

impl TernaryPolynomial {
    pub fn zero(degree: usize, level: Level) -> Self {
        TernaryPolynomial {
            degree,
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Add `c · m`, straightening `m` first.
    pub fn add_monomial(&mut self, c: &BigRational, m: &Monomial) -> Result<()> {
        if m.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, m.degree()));
        }
        if let SignedMonomial::Term(s, m) = straighten_at(self.level, m) {
            let c = if s < 0 { -c.clone() } else { c.clone() };
            self.add_straight(m, c);
        }
        Ok(())
    }

    fn add_straight(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &TernaryPolynomial, scale: &BigRational) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        for (m, c) in &other.terms {
            if other.level == self.level {
                self.add_straight(m.clone(), c * scale);
            } else {
                self.add_monomial(&(c * scale), m)?;
            }
        }
        Ok(())
    }

    pub fn scaled(&self, c: &BigRational) -> TernaryPolynomial {
        let mut out = TernaryPolynomial::zero(self.degree, self.level);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        }
        out
    }

    /// Positive multiple with coprime integer coefficients.
    pub fn primitive(&self) -> TernaryPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.terms.values().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let gcd = self
            .terms
            .values()
            .fold(BigInt::zero(), |a, c| a.gcd(&(c.numer() * (&lcm / c.denom()))));
        self.scaled(&BigRational::new(lcm, gcd))
    }

    /// Apply `map` to every leaf letter and straighten again.
    pub fn map_letters(&self, map: impl Fn(Letter) -> Letter) -> Result<TernaryPolynomial> {
        let mut out = TernaryPolynomial::zero(self.degree, self.level);
        for (m, c) in &self.terms {
            out.add_monomial(c, &m.map_letters(&map))?;
        }
        Ok(out)
    }

    /// Left action of S_n on the variables: letter `l` becomes `perm(l)`.
    pub fn permuted(&self, perm: &Permutation) -> Result<TernaryPolynomial> {
        let n = perm.n();
        if let Some(bad) = self.terms.keys().flat_map(|m| m.labels()).find(|&l| l as usize >= n) {
            return Err(Error::InvalidPermutation(format!(
                "letter {} outside the permuted range",
                crate::dialgebra::letter_char(bad)
            )));
        }
        self.map_letters(|l| perm.apply(l as usize) as Letter)
    }

    /// Terms ordered by association type and then by label sequence.
    pub fn sorted_terms(&self) -> Vec<(Option<usize>, &Monomial, &BigRational)> {
        let table = if self.degree % 2 == 1 { type_table(self.degree).ok() } else { None };
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (table.as_ref().and_then(|t| t.type_of(m)), m, c))
            .collect();
        v.sort_by(|a, b| {
            let ka = (a.0.unwrap_or(usize::MAX), a.1.labels());
            let kb = (b.0.unwrap_or(usize::MAX), b.1.labels());
            ka.cmp(&kb).then_with(|| a.1.cmp(b.1))
        });
        v
    }

    /// Distinct association types touched (zero-based indices).
    pub fn types(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.sorted_terms().iter().filter_map(|t| t.0).collect();
        set.into_iter().collect()
    }

    /// Distinct coefficients, ascending.
    pub fn coefficient_set(&self) -> Vec<BigRational> {
        let set: BTreeSet<BigRational> = self.terms.values().cloned().collect();
        set.into_iter().collect()
    }

    /// Sorted multiset of leaf letters when every term uses the same one.
    pub fn variables(&self) -> Option<Vec<Letter>> {
        let mut it = self.terms.keys().map(|m| {
            let mut l = m.labels();
            l.sort_unstable();
            l
        });
        let first = it.next()?;
        it.all(|l| l == first).then_some(first)
    }

    /// Sum of PATS expansions of the terms.
    pub fn expand(&self) -> DialgebraPolynomial {
        let op = TrilinearOp::pats();
        let mut acc: HashMap<DialgebraWord, BigRational> = HashMap::new();
        for (m, c) in &self.terms {
            for (sign, letters, z) in op.expand_raw(m) {
                let w = DialgebraWord::new(letters, z).expect("center inside word");
                *acc.entry(w).or_insert_with(BigRational::zero) += c * BigRational::from_integer(sign.into());
            }
        }
        let mut p = DialgebraPolynomial::zero();
        for (w, c) in acc {
            p.add_term(w, c);
        }
        p
    }
}

impl fmt::Display for TernaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (_, m, c)) in self.sorted_terms().into_iter().enumerate() {
            crate::dialgebra::write_signed_term(f, k == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    degree: usize,
    level: Level,
    terms: Vec<(String, String)>,
}

impl Serialize for TernaryPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            degree: self.degree,
            level: self.level,
            terms: self.sorted_terms().into_iter().map(|(_, m, c)| (c.to_string(), m.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TernaryPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolynomialJson::deserialize(d)?;
        let mut p = TernaryPolynomial::zero(j.degree, j.level);
        for (c, m) in j.terms {
            let c: BigRational = c.parse().map_err(|e| D::Error::custom(format!("coefficient {c:?}: {e}")))?;
            let m: Monomial = m.parse().map_err(D::Error::custom)?;
            p.add_monomial(&c, &m).map_err(D::Error::custom)?;
        }
        Ok(p)
    }
}

/// True when the PATS expansion of `p` vanishes.
pub fn is_identity(p: &TernaryPolynomial) -> bool {
    p.expand().is_zero()
}

// ---------------------------------------------------------------------------
// Expansion matrices

/// Expansion matrix: rows are dialgebra words, columns straightened ternary
/// monomials. Stored by column since each column has few nonzero entries.
#[derive(Debug, Clone)]
pub struct ExpansionMatrix {
    pub degree: usize,
    pub vars: Vec<Letter>,
    pub level: Level,
    pub words: Vec<DialgebraWord>,
    pub monomials: Vec<(usize, Monomial)>,
    /// Per column: (row, entry), row ascending.
    pub columns: Vec<Vec<(usize, i64)>>,
}

/// Expansion matrix over the arrangements of `vars`, using the identities
/// known below degree n to pick the columns.
pub fn build_expansion_matrix(vars: &[Letter]) -> Result<ExpansionMatrix> {
    build_expansion_matrix_at(vars, Level::for_discovery(vars.len()))
}

pub fn build_expansion_matrix_at(vars: &[Letter], level: Level) -> Result<ExpansionMatrix> {
    let n = vars.len();
    let monomials = enumerate_monomials(n, vars, level)?;
    let words = all_words(vars);
    let index: HashMap<&DialgebraWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let op = TrilinearOp::pats();
    let columns = monomials
        .par_iter()
        .map(|(_, m)| {
            let mut col: Vec<(usize, i64)> = op.expand(m).into_iter().map(|(w, c)| (index[&w], c)).collect();
            col.sort_unstable();
            col
        })
        .collect();
    Ok(ExpansionMatrix {
        degree: n,
        vars: vars.to_vec(),
        level,
        words,
        monomials,
        columns,
    })
}

impl ExpansionMatrix {
    pub fn nrows(&self) -> usize {
        self.words.len()
    }

    pub fn ncols(&self) -> usize {
        self.monomials.len()
    }

    /// Sparse rows: (column, entry), column ascending.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.nrows()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                rows[i].push((j, c));
            }
        }
        rows
    }

    pub fn dense_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; self.ncols()]; self.nrows()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                rows[i][j] = c;
            }
        }
        rows
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_i64_rows(&self.dense_rows())
    }

    /// Row canonical form over F_p, streaming the sparse rows.
    pub fn rref_mod(&self, m: Modulus) -> Rref<u32> {
        let ncols = self.ncols();
        let mut basis = EchelonBasis::new(m, ncols);
        let mut dense = vec![0u32; ncols];
        for row in self.sparse_rows() {
            if basis.rank() == ncols {
                break;
            }
            if row.is_empty() {
                continue;
            }
            dense.iter_mut().for_each(|x| *x = 0);
            for &(j, c) in &row {
                dense[j] = m.from_i64(c);
            }
            basis.insert(&dense);
        }
        let mut r = basis.into_rref();
        r.nrows = self.nrows();
        r
    }

    pub fn rank(&self, field: Field) -> Result<usize> {
        Ok(match field {
            Field::Rational => self.to_rational().rank(),
            Field::Prime(p) => self.rref_mod(Modulus::new(p)?).rank(),
        })
    }

    /// Pivot columns of the row canonical form (zero-based).
    pub fn pivot_columns(&self, field: Field) -> Result<Vec<usize>> {
        Ok(match field {
            Field::Rational => self.to_rational().rref().pivots,
            Field::Prime(p) => self.rref_mod(Modulus::new(p)?).pivots,
        })
    }

    /// Canonical integral nullspace basis: one vector per free column, with
    /// content 1 and positive leading entry.
    pub fn nullspace(&self, field: Field) -> Result<Vec<Vec<BigInt>>> {
        Ok(match field {
            Field::Rational => self.to_rational().nullspace_basis(),
            Field::Prime(p) => {
                let m = Modulus::new(p)?;
                nullspace_from_rref(m, &self.rref_mod(m))
                    .into_iter()
                    .map(|v| v.into_iter().map(BigInt::from).collect())
                    .collect()
            }
        })
    }

    /// Polynomial with the given coefficient vector over the columns.
    pub fn polynomial(&self, v: &[BigInt]) -> TernaryPolynomial {
        let mut p = TernaryPolynomial::zero(self.degree, self.level);
        for ((_, m), c) in self.monomials.iter().zip(v) {
            if !c.is_zero() {
                p.add_straight(m.clone(), BigRational::from_integer(c.clone()));
            }
        }
        p
    }
}

/// A discovered identity together with summary data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub polynomial: TernaryPolynomial,
    pub term_count: usize,
    /// Distinct coefficients, as strings, ascending.
    pub coefficients: Vec<String>,
    /// Association types touched, one-based.
    pub types: Vec<usize>,
}

impl IdentityRecord {
    pub fn new(polynomial: TernaryPolynomial) -> Self {
        IdentityRecord {
            term_count: polynomial.len(),
            coefficients: polynomial.coefficient_set().iter().map(|c| c.to_string()).collect(),
            types: polynomial.types().into_iter().map(|t| t + 1).collect(),
            polynomial,
        }
    }
}

/// Nullspace of the expansion matrix as identities, sorted by number of
/// terms and then by free column.
pub fn find_identities(vars: &[Letter], field: Field) -> Result<Vec<IdentityRecord>> {
    let e = build_expansion_matrix(vars)?;
    identities_from_matrix(&e, field)
}

pub fn identities_from_matrix(e: &ExpansionMatrix, field: Field) -> Result<Vec<IdentityRecord>> {
    let mut basis = e.nullspace(field)?;
    // stable: equal term counts keep the free-column order of the canonical basis
    basis.sort_by_key(|v| v.iter().filter(|x| !x.is_zero()).count());
    let records: Vec<IdentityRecord> = basis.iter().map(|v| IdentityRecord::new(e.polynomial(v))).collect();
    if let Field::Prime(p) = field {
        // lifted vectors are only meaningful if they are identities over Q
        if let Some(bad) = records.par_iter().position_first(|r| !is_identity(&r.polynomial)) {
            return Err(Error::Invalid(format!(
                "nullspace vector {} does not lift from F_{p} to an identity",
                bad + 1
            )));
        }
    }
    Ok(records)
}

// ---------------------------------------------------------------------------
// Named identities

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Template whose uppercase leaves are permuted by σ; lowercase leaves are
/// fixed. `(((a,B,C),D,g),E,F)` stands for (((a b^σ c^σ) d^σ g) e^σ f^σ).
pub fn parse_marked(s: &str) -> Result<(Monomial, Vec<bool>)> {
    let m: Monomial = s.to_lowercase().parse()?;
    let marks = s.chars().filter(|c| c.is_ascii_alphabetic()).map(|c| c.is_ascii_uppercase()).collect();
    Ok((m, marks))
}

/// Add `coef · Σ_σ ε(σ) template^σ` where σ runs over the permutations of
/// `letters` and acts on the marked leaves.
pub fn add_signed_sum(p: &mut TernaryPolynomial, coef: &BigRational, template: &str, letters: &[Letter]) -> Result<()> {
    let (m, marks) = parse_marked(template)?;
    let labels = m.labels();
    let k = letters.len();
    let pos_of = |l: Letter| letters.iter().position(|&x| x == l);
    for l in labels.iter().zip(&marks).filter(|(_, &mk)| mk).map(|(l, _)| *l) {
        if pos_of(l).is_none() {
            return Err(Error::Invalid(format!(
                "marked letter {} is not permuted",
                crate::dialgebra::letter_char(l)
            )));
        }
    }
    let neg = -coef.clone();
    for sigma in Permutation::all(k) {
        let relabelled: Vec<Letter> = labels
            .iter()
            .zip(&marks)
            .map(|(&l, &mk)| if mk { letters[sigma.apply(pos_of(l).unwrap())] } else { l })
            .collect();
        let c = if sigma.sign() < 0 { &neg } else { coef };
        p.add_monomial(c, &m.relabel(&relabelled))?;
    }
    Ok(())
}

fn sum_of(degree: usize, level: Level, parts: &[(i64, i64, &str)], letters: &[Letter]) -> Result<TernaryPolynomial> {
    let mut p = TernaryPolynomial::zero(degree, level);
    for &(n, d, t) in parts {
        add_signed_sum(&mut p, &rat(n, d), t, letters)?;
    }
    Ok(p)
}

fn literal(degree: usize, level: Level, terms: &[(i64, &str)]) -> Result<TernaryPolynomial> {
    let mut p = TernaryPolynomial::zero(degree, level);
    for &(c, t) in terms {
        p.add_monomial(&rat(c, 1), &t.parse()?)?;
    }
    Ok(p)
}

pub fn identity_p() -> TernaryPolynomial {
    literal(3, Level::Free, &[(1, "(a,b,c)"), (1, "(a,c,b)")]).expect("valid")
}

pub fn identity_q() -> TernaryPolynomial {
    literal(5, Level::P, &[(1, "(a,(b,c,d),e)"), (1, "(a,(c,b,d),e)")]).expect("valid")
}

pub fn identity_r() -> TernaryPolynomial {
    sum_of(
        7,
        Level::PQ,
        &[(1, 12, "((a,(B,C,D),E),F,G)"), (-1, 12, "((a,B,C),(D,E,F),G)")],
        &[1, 2, 3, 4, 5, 6],
    )
    .expect("valid")
}

/// The two readings of the last sum of S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SixthSum {
    /// `b` fixed, σ on `c..g`, exactly as printed.
    Literal,
    /// `g` fixed, σ on `b..f`, like the other five sums.
    Uniform,
}

pub fn identity_s_reading(reading: SixthSum) -> TernaryPolynomial {
    let bf: &[Letter] = &[1, 2, 3, 4, 5];
    let mut p = sum_of(
        7,
        Level::PQ,
        &[
            (1, 4, "(((a,B,C),D,g),E,F)"),
            (-1, 6, "((a,(B,C,D),E),F,g)"),
            (1, 4, "((a,(B,C,g),D),E,F)"),
            (1, 12, "((a,B,C),(D,E,F),g)"),
            (-1, 6, "(a,((B,C,D),E,g),F)"),
        ],
        bf,
    )
    .expect("valid");
    let (template, letters): (&str, &[Letter]) = match reading {
        SixthSum::Literal => ("(a,(b,C,D),(E,F,G))", &[2, 3, 4, 5, 6]),
        SixthSum::Uniform => ("(a,(B,C,D),(E,F,g))", bf),
    };
    add_signed_sum(&mut p, &rat(-1, 12), template, letters).expect("valid");
    p
}

/// The reading of S whose expansion vanishes, preferring the printed one.
pub fn identity_s_resolved() -> (SixthSum, TernaryPolynomial) {
    for r in [SixthSum::Literal, SixthSum::Uniform] {
        let p = identity_s_reading(r);
        if is_identity(&p) {
            return (r, p);
        }
    }
    (SixthSum::Literal, identity_s_reading(SixthSum::Literal))
}

pub fn identity_s() -> TernaryPolynomial {
    identity_s_resolved().1
}

pub fn builtin_identity(name: &str) -> Result<TernaryPolynomial> {
    match name.to_ascii_uppercase().as_str() {
        "P" => Ok(identity_p()),
        "Q" => Ok(identity_q()),
        "R" => Ok(identity_r()),
        "S" => Ok(identity_s()),
        _ => Err(Error::UnknownIdentity(name.to_string())),
    }
}

/// The printed nonlinear identities in partitions 31111, 22111 and 211111,
/// named `31111`, `22111-1`, `22111-2`, `211111-1` .. `211111-5`.
pub fn nonlinear_identity(name: &str) -> Result<TernaryPolynomial> {
    let coefs = [(1, 4), (-1, 12), (-1, 12), (-1, 6)];
    let build = |templates: [&str; 4], letters: &[Letter]| -> Result<TernaryPolynomial> {
        let parts: Vec<(i64, i64, &str)> = coefs.iter().zip(templates).map(|(&(n, d), t)| (n, d, t)).collect();
        Ok(sum_of(7, Level::PQ, &parts, letters)?.primitive())
    };
    let ae: &[Letter] = &[0, 1, 2, 3, 4];
    let i22111 = || {
        build(
            ["(((a,A,B),b,C),D,E)", "((a,(A,B,C),b),D,E)", "((a,A,B),(C,D,E),b)", "(a,((A,B,C),b,D),E)"],
            ae,
        )
    };
    let i211111 = || {
        build(
            ["(((b,A,C),a,D),E,F)", "((b,(A,C,D),a),E,F)", "((b,A,C),(D,E,F),a)", "(b,((A,C,D),a,E),F)"],
            &[0, 2, 3, 4, 5],
        )
    };
    let swap = |p: TernaryPolynomial, x: Letter, y: Letter| {
        p.map_letters(|l| if l == x { y } else if l == y { x } else { l })
    };
    match name {
        "31111" => build(
            ["(((a,A,B),a,C),D,E)", "((a,(A,B,C),a),D,E)", "((a,A,B),(C,D,E),a)", "(a,((B,C,D),a,E),A)"],
            ae,
        ),
        "22111-1" => i22111(),
        "22111-2" => swap(i22111()?, 0, 1),
        "211111-1" => i211111(),
        "211111-2" => swap(i211111()?, 1, 2),
        "211111-3" => swap(i211111()?, 1, 3),
        "211111-4" => swap(i211111()?, 1, 4),
        "211111-5" => swap(i211111()?, 1, 5),
        _ => Err(Error::UnknownIdentity(name.to_string())),
    }
}

pub const NONLINEAR_NAMES: [&str; 8] = [
    "31111", "22111-1", "22111-2", "211111-1", "211111-2", "211111-3", "211111-4", "211111-5",
];

// ---------------------------------------------------------------------------
// Spans and orbits

/// Rank of the span of a set of polynomials of one degree and level.
pub fn span_rank(polys: &[TernaryPolynomial], field: Field) -> Result<usize> {
    let mut index: HashMap<&Monomial, usize> = HashMap::new();
    for p in polys {
        for m in p.terms.keys() {
            let k = index.len();
            index.entry(m).or_insert(k);
        }
    }
    let ncols = index.len();
    match field {
        Field::Rational => {
            let mut mat = RatMatrix::zeros(polys.len(), ncols);
            for (i, p) in polys.iter().enumerate() {
                for (m, c) in &p.terms {
                    mat.set(i, index[m], c.clone());
                }
            }
            Ok(mat.rank())
        }
        Field::Prime(q) => {
            let md = Modulus::new(q)?;
            let mut basis = EchelonBasis::new(md, ncols);
            let mut row = vec![0u32; ncols];
            for p in polys {
                row.iter_mut().for_each(|x| *x = 0);
                for (m, c) in &p.terms {
                    row[index[m]] = md.from_rational(c)?;
                }
                basis.insert(&row);
            }
            Ok(basis.rank())
        }
    }
}

/// All n! variable permutations of a multilinear polynomial.
pub fn orbit(p: &TernaryPolynomial) -> Result<Vec<TernaryPolynomial>> {
    let n = p.degree;
    if p.variables().as_deref() != Some(&(0..n as Letter).collect::<Vec<_>>()[..]) && !p.is_zero() {
        return Err(Error::Invalid("orbit needs a multilinear polynomial in the first n letters".into()));
    }
    Permutation::all(n).par_iter().map(|s| p.permuted(s)).collect()
}

/// Dimension of the span of the S_n-orbit of a multilinear polynomial.
pub fn orbit_dimension(p: &TernaryPolynomial, field: Field) -> Result<usize> {
    span_rank(&orbit(p)?, field)
}

// ---------------------------------------------------------------------------
// Degree 9

/// Consequences in degree 9 of a multilinear identity T of degree 7:
/// T with x_k replaced by (x_k,h,i) for each k, then (T,h,i), (h,T,i), (h,i,T).
pub fn lift_to_degree9(t: &TernaryPolynomial) -> Result<Vec<TernaryPolynomial>> {
    if t.degree != 7 {
        return Err(Error::DegreeMismatch(7, t.degree));
    }
    let (h, i) = (7 as Letter, 8 as Letter);
    let leaf = Monomial::Leaf;
    let mut out = Vec::with_capacity(10);
    for k in 0..7 as Letter {
        let mut p = TernaryPolynomial::zero(9, Level::PQ);
        for (m, c) in &t.terms {
            let s = m.substitute(&|l| if l == k { Monomial::node(leaf(k), leaf(h), leaf(i)) } else { leaf(l) });
            p.add_monomial(c, &s)?;
        }
        out.push(p);
    }
    let embeds: [fn(Monomial, Monomial, Monomial) -> Monomial; 3] = [
        |t, h, i| Monomial::node(t, h, i),
        |t, h, i| Monomial::node(h, t, i),
        |t, h, i| Monomial::node(h, i, t),
    ];
    for e in embeds {
        let mut p = TernaryPolynomial::zero(9, Level::PQ);
        for (m, c) in &t.terms {
            p.add_monomial(c, &e(m.clone(), leaf(h), leaf(i)))?;
        }
        out.push(p);
    }
    Ok(out)
}

/// All distinct arrangements of a multiset of letters, ascending.
pub fn arrangements(vars: &[Letter]) -> Vec<Vec<Letter>> {
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(sorted.clone());
        if !next_permutation(&mut sorted) {
            break;
        }
    }
    out
}

/// Letters of a variable multiset such as `aaabcde`.
pub fn parse_vars(s: &str) -> Result<Vec<Letter>> {
    crate::dialgebra::parse_letters(s)
}

/// The multiset with multiplicities given by a partition: 31111 → aaabcde.
pub fn partition_vars(parts: &[usize]) -> Vec<Letter> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat_n(k as Letter, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary::Monomial;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn word_set(p: &DialgebraPolynomial) -> BTreeMap<String, i64> {
        p.terms().iter().map(|(w, c)| (w.to_string(), c.to_integer().try_into().unwrap())).collect()
    }

    /// Parse a printed expansion like `^abc - ^acb - b^ac`.
    fn printed(s: &str) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        let mut sign = 1;
        for tok in s.split_whitespace() {
            match tok {
                "+" => sign = 1,
                "-" => sign = -1,
                w => {
                    let w: DialgebraWord = w.parse().unwrap();
                    out.insert(w.to_string(), sign);
                    sign = 1;
                }
            }
        }
        out
    }

    #[test]
    fn degree_three_expansion() {
        let e = expand_pats(&m("(a,b,c)"));
        assert_eq!(word_set(&e), printed("^abc - ^acb - b^ac + c^ab + bc^a - cb^a"));
    }

    #[test]
    fn degree_five_expansions_term_for_term() {
        let first = printed(
            "^abcde - ^abced - ^acbde + ^acbed - b^acde + b^aced + c^abde - c^abed - d^abce \
             + d^acbe + e^abcd - e^acbd + bc^ade - bc^aed - cb^ade + cb^aed + db^ace - dc^abe \
             + de^abc - de^acb - eb^acd + ec^abd - ed^abc + ed^acb - dbc^ae + dcb^ae - deb^ac \
             + dec^ab + ebc^ad - ecb^ad + edb^ac - edc^ab + debc^a - decb^a - edbc^a + edcb^a",
        );
        let second = printed(
            "^abcde - ^abdce - ^acbde + ^acdbe + ^adbce - ^adcbe - ^aebcd + ^aebdc + ^aecbd \
             - ^aecdb - ^aedbc + ^aedcb + e^abcd - e^abdc - e^acbd + e^acdb + e^adbc - e^adcb \
             - bcd^ae + bdc^ae + cbd^ae - cdb^ae - dbc^ae + dcb^ae + bcde^a - bdce^a - cbde^a \
             + cdbe^a + dbce^a - dcbe^a - ebcd^a + ebdc^a + ecbd^a - ecdb^a - edbc^a + edcb^a",
        );
        assert_eq!(first.len(), 36);
        assert_eq!(second.len(), 36);
        assert_eq!(word_set(&expand_pats(&m("((a,b,c),d,e)"))), first);
        assert_eq!(word_set(&expand_pats(&m("(a,(b,c,d),e)"))), second);
    }

    #[test]
    fn expansion_sizes_have_no_collisions() {
        for n in [3usize, 5, 7] {
            let vars: Vec<Letter> = (0..n as Letter).collect();
            let expected = 6usize.pow((n as u32 - 1) / 2);
            for t in type_table(n).unwrap().types() {
                let raw = TrilinearOp::pats().expand_raw(&t.template.relabel(&vars));
                assert_eq!(raw.len(), expected);
                assert_eq!(expand_pats(&t.template).len(), expected);
            }
        }
    }

    #[test]
    fn kp_of_ats_with_center_a_is_pats() {
        assert_eq!(TrilinearOp::kp_ats(0).unwrap(), TrilinearOp::pats());
    }

    #[test]
    fn kp_variants_have_isomorphic_degree_three_identities() {
        // with center b or c the identities are those of the PATS after relabelling
        for c in [1u8, 2] {
            let op = TrilinearOp::kp_ats(c).unwrap();
            let words = all_words(&[0, 1, 2]);
            let index: HashMap<&DialgebraWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mons = enumerate_monomials(3, &[0, 1, 2], Level::Free).unwrap();
            let mut rows = vec![vec![0i64; 6]; 18];
            for (j, (_, x)) in mons.iter().enumerate() {
                for (w, k) in op.expand(x) {
                    rows[index[&w]][j] = k;
                }
            }
            assert_eq!(RatMatrix::from_i64_rows(&rows).rank(), 3);
        }
    }

    #[test]
    fn table_one() {
        let e = build_expansion_matrix(&[0, 1, 2]).unwrap();
        assert_eq!((e.nrows(), e.ncols()), (18, 6));
        let t: Vec<Vec<i64>> = (0..6)
            .map(|j| (0..18).map(|i| e.dense_rows()[i][j]).collect())
            .collect();
        let expected: [[i64; 18]; 6] = [
            [1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, -1],
            [-1, 1, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 1],
            [0, 0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0],
            [0, 0, -1, 1, 0, 0, 1, 0, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, -1, 0, -1, 0, 1, 0, 0, 1, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, -1, 1, 0, 1, 0, -1, 0, 0, -1, 0, 1, 0, 0, 0],
        ];
        for j in 0..6 {
            assert_eq!(t[j], expected[j]);
        }
        let ids = identities_from_matrix(&e, Field::Rational).unwrap();
        let text: Vec<String> = ids.iter().map(|r| r.polynomial.to_string()).collect();
        assert_eq!(text, vec!["(a,b,c) + (a,c,b)", "(b,a,c) + (b,c,a)", "(c,a,b) + (c,b,a)"]);
    }

    #[test]
    fn degree_five() {
        let e = build_expansion_matrix(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((e.nrows(), e.ncols()), (600, 90));
        assert_eq!(e.rank(Field::Rational).unwrap(), 50);
        assert_eq!(e.rank(Field::Prime(101)).unwrap(), 50);
        let mut expected: Vec<usize> = (1..=33).collect();
        expected.extend([36, 43, 44, 45, 48, 55, 56, 57, 60, 67, 68, 69, 72, 79, 80, 81, 84]);
        let pivots: Vec<usize> = e.pivot_columns(Field::Rational).unwrap().iter().map(|c| c + 1).collect();
        assert_eq!(pivots, expected);
        let q = e.nullspace(Field::Rational).unwrap();
        let p = e.nullspace(Field::Prime(101)).unwrap();
        assert_eq!(q, p);
        let ids = identities_from_matrix(&e, Field::Rational).unwrap();
        assert_eq!(ids.len(), 40);
        assert!(ids.iter().all(|r| r.term_count == 2 && r.types == vec![2]));
        assert!(ids.iter().all(|r| is_identity(&r.polynomial)));
        // the nullspace is spanned by permutations of Q
        assert_eq!(orbit_dimension(&identity_q(), Field::Rational).unwrap(), 40);
        let mut all = orbit(&identity_q()).unwrap();
        all.extend(ids.iter().map(|r| r.polynomial.clone()));
        assert_eq!(span_rank(&all, Field::Rational).unwrap(), 40);
    }

    #[test]
    fn p_and_q() {
        assert_eq!(identity_p().to_string(), "(a,b,c) + (a,c,b)");
        assert_eq!(identity_q().to_string(), "(a,(b,c,d),e) + (a,(c,b,d),e)");
        assert!(is_identity(&identity_p()));
        assert!(is_identity(&identity_q()));
        assert!(!is_identity(&literal(3, Level::Free, &[(1, "(a,b,c)")]).unwrap()));
        assert_eq!(orbit_dimension(&identity_p(), Field::Rational).unwrap(), 3);
        assert!(builtin_identity("T").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let p = literal(3, Level::Free, &[(4, "(a,b,c)"), (-6, "(a,c,b)")]).unwrap();
        assert_eq!(p.primitive().to_string(), "2 (a,b,c) - 3 (a,c,b)");
        let h = p.scaled(&rat(1, 8)).primitive();
        assert_eq!(h.to_string(), "2 (a,b,c) - 3 (a,c,b)");
    }

    #[test]
    fn json_round_trip() {
        let p = identity_q();
        let s = serde_json::to_string(&p).unwrap();
        let back: TernaryPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn lifts_of_p_shape() {
        let r = identity_r();
        let lifts = lift_to_degree9(&r).unwrap();
        assert_eq!(lifts.len(), 10);
        let neg = lifts[8].scaled(&rat(-1, 1));
        assert_eq!(lifts[9], neg);
        assert!(lift_to_degree9(&identity_q()).is_err());
    }
}
