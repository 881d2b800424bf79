//! The free associative dialgebra on the letters `a..z`.
//!
//! Every monomial equals a unique normal-form word
//! `(a_1 ⊢ .. ⊢ a_{i-1}) ⊢ a_i ⊣ (a_{i+1} ⊣ .. ⊣ a_n)`, written with a `^`
//! before the center letter: `bc^ade`. Words are stored only in normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Index of a letter, `0` for `a`.
pub type Letter = u8;

pub fn letter_char(l: Letter) -> char {
    (b'a' + l) as char
}

pub fn char_letter(c: char) -> Option<Letter> {
    c.is_ascii_lowercase().then(|| c as u8 - b'a')
}

/// Parse a run of letters such as `aaabcde`.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| {
            char_letter(c).ok_or(Error::Parse {
                pos: i,
                msg: format!("expected a letter a..z, found {c:?}"),
            })
        })
        .collect()
}

pub fn format_letters(ls: &[Letter]) -> String {
    ls.iter().map(|&l| letter_char(l)).collect()
}

/// A normal-form dialgebra word. Ordered by center position, then by letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DialgebraWord {
    letters: Vec<Letter>,
    center: usize,
}

impl DialgebraWord {
    /// `center` is zero-based.
    pub fn new(letters: Vec<Letter>, center: usize) -> Result<Self> {
        if center >= letters.len() {
            return Err(Error::Invalid(format!(
                "center {center} outside word of length {}",
                letters.len()
            )));
        }
        Ok(DialgebraWord { letters, center })
    }

    pub fn letter(l: Letter) -> Self {
        DialgebraWord {
            letters: vec![l],
            center: 0,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn center_letter(&self) -> Letter {
        self.letters[self.center]
    }
}

impl Ord for DialgebraWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.center
            .cmp(&other.center)
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for DialgebraWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DialgebraWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &l) in self.letters.iter().enumerate() {
            if i == self.center {
                f.write_str("^")?;
            }
            write!(f, "{}", letter_char(l))?;
        }
        Ok(())
    }
}

impl FromStr for DialgebraWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut center = None;
        let mut hat = false;
        for (i, c) in s.chars().enumerate() {
            if c == '^' {
                if center.is_some() || hat {
                    return Err(Error::Parse {
                        pos: i,
                        msg: "more than one center".into(),
                    });
                }
                hat = true;
                continue;
            }
            let l = char_letter(c).ok_or(Error::Parse {
                pos: i,
                msg: format!("unexpected {c:?}"),
            })?;
            if hat {
                center = Some(letters.len());
                hat = false;
            }
            letters.push(l);
        }
        match center {
            Some(c) => Ok(DialgebraWord { letters, center: c }),
            None => Err(Error::Parse {
                pos: s.len(),
                msg: "a word needs exactly one '^' before a letter".into(),
            }),
        }
    }
}

/// `x ⊣ y`: concatenate, keeping the center of `x`.
pub fn left_product(x: &DialgebraWord, y: &DialgebraWord) -> DialgebraWord {
    let mut letters = x.letters.clone();
    letters.extend_from_slice(&y.letters);
    DialgebraWord {
        letters,
        center: x.center,
    }
}

/// `x ⊢ y`: concatenate, keeping the center of `y`.
pub fn right_product(x: &DialgebraWord, y: &DialgebraWord) -> DialgebraWord {
    let mut letters = x.letters.clone();
    letters.extend_from_slice(&y.letters);
    DialgebraWord {
        letters,
        center: x.len() + y.center,
    }
}

/// All words over an arrangement multiset: distinct letter orders times
/// centers, in word order (center, then letters).
pub fn all_words(vars: &[Letter]) -> Vec<DialgebraWord> {
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    let mut arrangements = Vec::new();
    loop {
        arrangements.push(sorted.clone());
        if !crate::symgroup::next_permutation(&mut sorted) {
            break;
        }
    }
    let mut out = Vec::with_capacity(arrangements.len() * vars.len());
    for center in 0..vars.len() {
        for a in &arrangements {
            out.push(DialgebraWord {
                letters: a.clone(),
                center,
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------

/// A finite linear combination of normal-form words with rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DialgebraPolynomial {
    terms: BTreeMap<DialgebraWord, BigRational>,
}

impl DialgebraPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: DialgebraWord) -> Self {
        let mut p = Self::zero();
        p.add_term(w, BigRational::one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<DialgebraWord, BigRational> {
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

    pub fn coefficient(&self, w: &DialgebraWord) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: DialgebraWord, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &Self, scale: &BigRational) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * scale);
        }
    }

    fn product(&self, other: &Self, op: fn(&DialgebraWord, &DialgebraWord) -> DialgebraWord) -> Self {
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.add_term(op(x, y), a * b);
            }
        }
        out
    }

    pub fn left_product(&self, other: &Self) -> Self {
        self.product(other, left_product)
    }

    pub fn right_product(&self, other: &Self) -> Self {
        self.product(other, right_product)
    }
}

impl fmt::Display for DialgebraPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            write_signed_term(f, k == 0, c, &w.to_string())?;
        }
        Ok(())
    }
}

pub(crate) fn write_signed_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigRational, body: &str) -> fmt::Result {
    let neg = c < &BigRational::zero();
    let abs = if neg { -c.clone() } else { c.clone() };
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if !abs.is_one() {
        write!(f, "{abs} ")?;
    }
    f.write_str(body)
}

// ---------------------------------------------------------------------------

/// An operation tree used as input to the Kolesnikov–Pozhidaev transform:
/// internal nodes carry a binary or ternary product, leaves carry letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpTree {
    Leaf(Letter),
    Node(Vec<OpTree>),
}

impl OpTree {
    pub fn leaf(c: char) -> Self {
        OpTree::Leaf(char_letter(c).expect("letter"))
    }

    pub fn binary(x: OpTree, y: OpTree) -> Self {
        OpTree::Node(vec![x, y])
    }

    pub fn ternary(x: OpTree, y: OpTree, z: OpTree) -> Self {
        OpTree::Node(vec![x, y, z])
    }

    pub fn leaves(&self) -> Vec<Letter> {
        match self {
            OpTree::Leaf(l) => vec![*l],
            OpTree::Node(ch) => ch.iter().flat_map(|c| c.leaves()).collect(),
        }
    }

    fn contains(&self, l: Letter) -> bool {
        match self {
            OpTree::Leaf(x) => *x == l,
            OpTree::Node(ch) => ch.iter().any(|c| c.contains(l)),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            OpTree::Leaf(_) => Ok(()),
            OpTree::Node(ch) if ch.len() == 2 || ch.len() == 3 => ch.iter().try_for_each(|c| c.validate()),
            OpTree::Node(ch) => Err(Error::Invalid(format!("node of arity {}", ch.len()))),
        }
    }
}

/// The two dialgebra products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiOp {
    /// `⊣`, written `-|`
    Left,
    /// `⊢`, written `|-`
    Right,
}

/// A parenthesized dialgebra monomial with explicit operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiMonomial {
    Leaf(Letter),
    Product(DiOp, Box<DiMonomial>, Box<DiMonomial>),
}

impl DiMonomial {
    pub fn product(op: DiOp, x: DiMonomial, y: DiMonomial) -> Self {
        DiMonomial::Product(op, Box::new(x), Box::new(y))
    }

    /// Evaluate in the free dialgebra.
    pub fn normal_form(&self) -> DialgebraWord {
        match self {
            DiMonomial::Leaf(l) => DialgebraWord::letter(*l),
            DiMonomial::Product(DiOp::Left, x, y) => left_product(&x.normal_form(), &y.normal_form()),
            DiMonomial::Product(DiOp::Right, x, y) => right_product(&x.normal_form(), &y.normal_form()),
        }
    }
}

impl fmt::Display for DiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(m: &DiMonomial, top: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match m {
                DiMonomial::Leaf(l) => write!(f, "{}", letter_char(*l)),
                DiMonomial::Product(op, x, y) => {
                    if !top {
                        f.write_str("(")?;
                    }
                    go(x, false, f)?;
                    f.write_str(match op {
                        DiOp::Left => " -| ",
                        DiOp::Right => " |- ",
                    })?;
                    go(y, false, f)?;
                    if !top {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, true, f)
    }
}

/// A linear combination of parenthesized dialgebra monomials: the output of
/// the Kolesnikov–Pozhidaev transform before evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiTemplate {
    pub terms: Vec<(BigRational, DiMonomial)>,
}

impl DiTemplate {
    pub fn evaluate(&self) -> DialgebraPolynomial {
        let mut out = DialgebraPolynomial::zero();
        for (c, m) in &self.terms {
            out.add_term(m.normal_form(), c.clone());
        }
        out
    }
}

impl fmt::Display for DiTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, m)) in self.terms.iter().enumerate() {
            write_signed_term(f, k == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

/// Make `center` the center of a multilinear operation tree.
///
/// A binary node becomes `⊣` when the center lies in its left child and `⊢`
/// otherwise. A ternary node `xyz` becomes `(x ? y) ? z` with `⊢` left of the
/// child holding the center and `⊣` right of it.
pub fn kp_monomial(tree: &OpTree, center: Letter) -> Result<DiMonomial> {
    tree.validate()?;
    let leaves = tree.leaves();
    let mut sorted = leaves.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != leaves.len() {
        return Err(Error::Invalid("operation tree is not multilinear".into()));
    }
    if !tree.contains(center) {
        return Err(Error::MissingLeaf(letter_char(center)));
    }
    Ok(kp_rec(tree, Side::Center(center)))
}

#[derive(Clone, Copy)]
enum Side {
    Center(Letter),
    LeftOfCenter,
    RightOfCenter,
}

fn kp_rec(tree: &OpTree, side: Side) -> DiMonomial {
    match tree {
        OpTree::Leaf(l) => DiMonomial::Leaf(*l),
        OpTree::Node(ch) => {
            // Off the center path the operations are interchangeable by the bar
            // properties; use the normal-form choice (⊢ left of the center, ⊣ right).
            let pos = match side {
                Side::Center(c) => ch.iter().position(|t| t.contains(c)).expect("center in subtree"),
                Side::LeftOfCenter => ch.len() - 1,
                Side::RightOfCenter => 0,
            };
            let sub: Vec<DiMonomial> = ch
                .iter()
                .enumerate()
                .map(|(k, t)| {
                    let s = if k == pos {
                        side
                    } else if k < pos {
                        Side::LeftOfCenter
                    } else {
                        Side::RightOfCenter
                    };
                    kp_rec(t, s)
                })
                .collect();
            let mut it = sub.into_iter();
            let mut acc = it.next().expect("nonempty node");
            for (k, next) in it.enumerate() {
                // joining children 0..=k with child k+1
                let op = if k < pos { DiOp::Right } else { DiOp::Left };
                acc = DiMonomial::product(op, acc, next);
            }
            acc
        }
    }
}

/// Apply the transform term by term to a linear combination of operation trees.
pub fn kp_transform(terms: &[(BigRational, OpTree)], center: Letter) -> Result<DiTemplate> {
    Ok(DiTemplate {
        terms: terms
            .iter()
            .map(|(c, t)| Ok((c.clone(), kp_monomial(t, center)?)))
            .collect::<Result<_>>()?,
    })
}

/// The alternating ternary sum `abc - acb - bac + bca + cab - cba` as ternary trees.
pub fn ats_terms() -> Vec<(BigRational, OpTree)> {
    let t = |s: &str, c: i64| {
        let ch: Vec<OpTree> = s.chars().map(OpTree::leaf).collect();
        (BigRational::from_integer(c.into()), OpTree::Node(ch))
    };
    vec![
        t("abc", 1),
        t("acb", -1),
        t("bac", -1),
        t("bca", 1),
        t("cab", 1),
        t("cba", -1),
    ]
}
