//! Ternary monomials, association types for completely (CA) and partially
//! (PA) alternating products, and straightening.
//!
//! A PA type has a spine of first arguments starting at the root; every
//! other node is completely alternating. Straightening sorts the alternating
//! arguments of each node (degree descending, then by [`strictly_precedes`])
//! and tracks the sign, returning zero when two alternating arguments agree.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::dialgebra::{char_letter, letter_char, Letter};
use crate::error::{Error, Result};
use crate::symgroup::{next_permutation, Permutation};

/// A ternary monomial: leaves carry letters, internal nodes have three children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Leaf(Letter),
    Node(Box<[Monomial; 3]>),
}

impl Monomial {
    pub fn node(x: Monomial, y: Monomial, z: Monomial) -> Self {
        Monomial::Node(Box::new([x, y, z]))
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 1,
            Monomial::Node(ch) => ch.iter().map(|c| c.degree()).sum(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Monomial::Leaf(_))
    }

    pub fn children(&self) -> Option<&[Monomial; 3]> {
        match self {
            Monomial::Leaf(_) => None,
            Monomial::Node(ch) => Some(ch),
        }
    }

    /// Leaf labels, left to right.
    pub fn labels(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<Letter>) {
        match self {
            Monomial::Leaf(l) => out.push(*l),
            Monomial::Node(ch) => ch.iter().for_each(|c| c.collect_labels(out)),
        }
    }

    /// Same tree with the given labels assigned to the leaves left to right.
    pub fn relabel(&self, labels: &[Letter]) -> Monomial {
        assert_eq!(labels.len(), self.degree(), "label count");
        let mut it = labels.iter().copied();
        self.relabel_iter(&mut it)
    }

    fn relabel_iter(&self, it: &mut impl Iterator<Item = Letter>) -> Monomial {
        match self {
            Monomial::Leaf(_) => Monomial::Leaf(it.next().expect("enough labels")),
            Monomial::Node(ch) => Monomial::node(ch[0].relabel_iter(it), ch[1].relabel_iter(it), ch[2].relabel_iter(it)),
        }
    }

    /// Replace every leaf label `l` by `map(l)`.
    pub fn map_letters(&self, map: &impl Fn(Letter) -> Letter) -> Monomial {
        match self {
            Monomial::Leaf(l) => Monomial::Leaf(map(*l)),
            Monomial::Node(ch) => Monomial::node(ch[0].map_letters(map), ch[1].map_letters(map), ch[2].map_letters(map)),
        }
    }

    /// Replace each leaf `l` by `subst(l)` (a whole monomial).
    pub fn substitute(&self, subst: &impl Fn(Letter) -> Monomial) -> Monomial {
        match self {
            Monomial::Leaf(l) => subst(*l),
            Monomial::Node(ch) => Monomial::node(ch[0].substitute(subst), ch[1].substitute(subst), ch[2].substitute(subst)),
        }
    }

    /// The bare shape, with every leaf labelled `a`.
    pub fn shape(&self) -> Monomial {
        match self {
            Monomial::Leaf(_) => Monomial::Leaf(0),
            Monomial::Node(ch) => Monomial::node(ch[0].shape(), ch[1].shape(), ch[2].shape()),
        }
    }

    pub fn same_shape(&self, other: &Monomial) -> bool {
        match (self, other) {
            (Monomial::Leaf(_), Monomial::Leaf(_)) => true,
            (Monomial::Node(a), Monomial::Node(b)) => a.iter().zip(b.iter()).all(|(x, y)| x.same_shape(y)),
            _ => false,
        }
    }

    /// The shape labelled `a, b, c, ..` left to right.
    pub fn with_identity_labels(&self) -> Monomial {
        let labels: Vec<Letter> = (0..self.degree() as u8).collect();
        self.relabel(&labels)
    }

    /// Text without commas, e.g. `((abc)de)`.
    pub fn compact(&self) -> String {
        match self {
            Monomial::Leaf(l) => letter_char(*l).to_string(),
            Monomial::Node(ch) => format!("({}{}{})", ch[0].compact(), ch[1].compact(), ch[2].compact()),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Leaf(l) => write!(f, "{}", letter_char(*l)),
            Monomial::Node(ch) => write!(f, "({},{},{})", ch[0], ch[1], ch[2]),
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Grammar `m := letter | '(' m ','? m ','? m ')'`; square brackets are
    /// accepted in place of parentheses and whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let m = parse_monomial(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Parse {
                pos: toks[pos].0,
                msg: "trailing input".into(),
            });
        }
        Ok(m)
    }
}

fn parse_monomial(toks: &[(usize, char)], pos: &mut usize) -> Result<Monomial> {
    let end = toks.last().map_or(0, |t| t.0 + 1);
    let Some(&(at, c)) = toks.get(*pos) else {
        return Err(Error::Parse {
            pos: end,
            msg: "unexpected end of input".into(),
        });
    };
    if let Some(l) = char_letter(c) {
        *pos += 1;
        return Ok(Monomial::Leaf(l));
    }
    if c != '(' && c != '[' {
        return Err(Error::Parse {
            pos: at,
            msg: format!("expected a letter or '(', found {c:?}"),
        });
    }
    *pos += 1;
    let mut ch = Vec::with_capacity(3);
    for k in 0..3 {
        if k > 0 && toks.get(*pos).map(|t| t.1) == Some(',') {
            *pos += 1;
        }
        ch.push(parse_monomial(toks, pos)?);
    }
    match toks.get(*pos) {
        Some(&(_, ')')) | Some(&(_, ']')) => *pos += 1,
        Some(&(p, c)) => {
            return Err(Error::Parse {
                pos: p,
                msg: format!("expected ')' after three arguments, found {c:?}"),
            })
        }
        None => {
            return Err(Error::Parse {
                pos: end,
                msg: "missing ')'".into(),
            })
        }
    }
    let z = ch.pop().unwrap();
    let y = ch.pop().unwrap();
    let x = ch.pop().unwrap();
    Ok(Monomial::node(x, y, z))
}

/// First compare degrees (smaller precedes); for equal degrees compare the
/// first differing children recursively; leaves compare alphabetically.
pub fn strictly_precedes(x: &Monomial, y: &Monomial) -> bool {
    let (dx, dy) = (x.degree(), y.degree());
    if dx != dy {
        return dx < dy;
    }
    match (x, y) {
        (Monomial::Leaf(a), Monomial::Leaf(b)) => a < b,
        (Monomial::Node(a), Monomial::Node(b)) => match a.iter().zip(b.iter()).find(|(p, q)| p != q) {
            Some((p, q)) => strictly_precedes(p, q),
            None => false,
        },
        _ => unreachable!("equal degree > 1 means both are nodes"),
    }
}

/// Canonical order of alternating arguments: larger degree first, then
/// [`strictly_precedes`].
pub fn argument_order(x: &Monomial, y: &Monomial) -> Ordering {
    match y.degree().cmp(&x.degree()) {
        Ordering::Equal => {
            if strictly_precedes(x, y) {
                Ordering::Less
            } else if strictly_precedes(y, x) {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
        o => o,
    }
}

// ---------------------------------------------------------------------------
// Straightening

/// A monomial with a sign, or zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedMonomial {
    Zero,
    Term(i32, Monomial),
}

impl SignedMonomial {
    pub fn sign(&self) -> i32 {
        match self {
            SignedMonomial::Zero => 0,
            SignedMonomial::Term(s, _) => *s,
        }
    }

    pub fn monomial(&self) -> Option<&Monomial> {
        match self {
            SignedMonomial::Zero => None,
            SignedMonomial::Term(_, m) => Some(m),
        }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedMonomial::Zero => f.write_str("0"),
            SignedMonomial::Term(s, m) if *s < 0 => write!(f, "-{m}"),
            SignedMonomial::Term(_, m) => write!(f, "{m}"),
        }
    }
}

/// Which identities straightening may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    /// No identities: every monomial is its own normal form.
    Free,
    /// Skew-symmetry in the last two arguments of every node.
    P,
    /// Partially alternating: skew-symmetry at the spine, complete
    /// alternation everywhere else.
    PQ,
}

impl Level {
    /// The identities known below degree n: none in degree 3, P in degree 5,
    /// P and Q from degree 7 on.
    pub fn for_discovery(n: usize) -> Level {
        match n {
            0..=3 => Level::Free,
            4..=5 => Level::P,
            _ => Level::PQ,
        }
    }

    /// Largest degree whose monomials all reduce to the PA types at this level.
    fn max_degree(self) -> usize {
        match self {
            Level::Free => 3,
            Level::P => 5,
            Level::PQ => usize::MAX,
        }
    }
}

/// Straighten modulo P and Q.
pub fn straighten(x: &Monomial) -> SignedMonomial {
    straighten_at(Level::PQ, x)
}

pub fn straighten_at(level: Level, x: &Monomial) -> SignedMonomial {
    let r = match level {
        Level::Free => Some((1, x.clone())),
        Level::P => skew_straighten(x),
        Level::PQ => partial_straighten(x),
    };
    match r {
        Some((s, m)) => SignedMonomial::Term(s, m),
        None => SignedMonomial::Zero,
    }
}

fn order_pair(s: i32, y: Monomial, z: Monomial) -> Option<(i32, Monomial, Monomial)> {
    match argument_order(&y, &z) {
        Ordering::Equal => None,
        Ordering::Less => Some((s, y, z)),
        Ordering::Greater => Some((-s, z, y)),
    }
}

fn skew_straighten(x: &Monomial) -> Option<(i32, Monomial)> {
    match x {
        Monomial::Leaf(_) => Some((1, x.clone())),
        Monomial::Node(ch) => {
            let (s1, a) = skew_straighten(&ch[0])?;
            let (s2, b) = skew_straighten(&ch[1])?;
            let (s3, c) = skew_straighten(&ch[2])?;
            let (s, b, c) = order_pair(s1 * s2 * s3, b, c)?;
            Some((s, Monomial::node(a, b, c)))
        }
    }
}

fn partial_straighten(x: &Monomial) -> Option<(i32, Monomial)> {
    match x {
        Monomial::Leaf(_) => Some((1, x.clone())),
        Monomial::Node(ch) => {
            let (s1, a) = partial_straighten(&ch[0])?;
            let (s2, b) = complete_straighten(&ch[1])?;
            let (s3, c) = complete_straighten(&ch[2])?;
            let (s, b, c) = order_pair(s1 * s2 * s3, b, c)?;
            Some((s, Monomial::node(a, b, c)))
        }
    }
}

fn complete_straighten(x: &Monomial) -> Option<(i32, Monomial)> {
    match x {
        Monomial::Leaf(_) => Some((1, x.clone())),
        Monomial::Node(ch) => {
            let (s1, a) = complete_straighten(&ch[0])?;
            let (s2, b) = complete_straighten(&ch[1])?;
            let (s3, c) = complete_straighten(&ch[2])?;
            let mut args = [a, b, c];
            let mut sign = s1 * s2 * s3;
            // insertion sort on three elements, one sign flip per swap
            for i in 1..3 {
                let mut j = i;
                while j > 0 {
                    match argument_order(&args[j - 1], &args[j]) {
                        Ordering::Equal => return None,
                        Ordering::Greater => {
                            args.swap(j - 1, j);
                            sign = -sign;
                            j -= 1;
                        }
                        Ordering::Less => break,
                    }
                }
            }
            if argument_order(&args[0], &args[1]) == Ordering::Equal
                || argument_order(&args[1], &args[2]) == Ordering::Equal
            {
                return None;
            }
            let [a, b, c] = args;
            Some((sign, Monomial::node(a, b, c)))
        }
    }
}

// ---------------------------------------------------------------------------
// Association types

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    CA,
    PA,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssocType {
    pub kind: Kind,
    /// The shape with identity labels `a, b, c, ..`.
    pub template: Monomial,
}

impl AssocType {
    pub fn degree(&self) -> usize {
        self.template.degree()
    }
}

impl fmt::Display for AssocType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.template)
    }
}

#[derive(Debug, Clone, Default)]
pub struct TypeLists {
    pub ca: Vec<AssocType>,
    pub pa: Vec<AssocType>,
}

fn odd_triples(n: usize) -> Vec<(usize, usize, usize)> {
    // i descending, then j descending, with j >= k
    let mut out = Vec::new();
    let mut i = n.saturating_sub(2);
    loop {
        if i % 2 == 1 {
            let rest = n - i;
            let mut j = rest.saturating_sub(1);
            while j >= 1 {
                let k = rest - j;
                if j % 2 == 1 && k % 2 == 1 && k >= 1 && j >= k {
                    out.push((i, j, k));
                }
                j -= 1;
            }
        }
        if i <= 1 {
            break;
        }
        i -= 1;
    }
    out
}

/// CA and PA association types of odd degree n, in their canonical order.
pub fn generate_types(n: usize) -> Result<TypeLists> {
    if n.is_multiple_of(2) || n == 0 {
        return Err(Error::UnsupportedDegree(n, "ternary monomials have odd degree".into()));
    }
    Ok((*types_upto(n)[n]).clone())
}

fn types_upto(n: usize) -> Vec<Arc<TypeLists>> {
    let mut lists: Vec<TypeLists> = vec![TypeLists::default(); n + 1];
    let leaf = Monomial::Leaf(0);
    lists[1] = TypeLists {
        ca: vec![AssocType {
            kind: Kind::CA,
            template: leaf.clone(),
        }],
        pa: vec![AssocType {
            kind: Kind::PA,
            template: leaf,
        }],
    };
    let mk = |x: &AssocType, y: &AssocType, z: &AssocType, kind| AssocType {
        kind,
        template: Monomial::node(x.template.shape(), y.template.shape(), z.template.shape()).with_identity_labels(),
    };
    let mut deg = 3;
    while deg <= n {
        let mut ca = Vec::new();
        let mut pa = Vec::new();
        for (i, j, k) in odd_triples(deg) {
            if i >= j && j >= k {
                let (ti, tj, tk) = (&lists[i].ca, &lists[j].ca, &lists[k].ca);
                for (a, t) in ti.iter().enumerate() {
                    for (b, u) in tj.iter().enumerate() {
                        for (c, v) in tk.iter().enumerate() {
                            let ok = (i > j || a <= b) && (j > k || b <= c);
                            if ok {
                                ca.push(mk(t, u, v, Kind::CA));
                            }
                        }
                    }
                }
            }
            let (ti, tj, tk) = (&lists[i].pa, &lists[j].ca, &lists[k].ca);
            for t in ti {
                for (b, u) in tj.iter().enumerate() {
                    for (c, v) in tk.iter().enumerate() {
                        if j > k || b <= c {
                            pa.push(mk(t, u, v, Kind::PA));
                        }
                    }
                }
            }
        }
        lists[deg] = TypeLists { ca, pa };
        deg += 2;
    }
    lists.into_iter().map(Arc::new).collect()
}

/// Order of the skew-symmetry group of a type.
pub fn countsymmetry(t: &AssocType) -> u64 {
    fn rec(x: &Monomial, complete: bool, d: &mut u64) {
        let Some(ch) = x.children() else { return };
        if complete {
            ch.iter().for_each(|c| rec(c, true, d));
            let s01 = ch[0].same_shape(&ch[1]);
            let s12 = ch[1].same_shape(&ch[2]);
            let s02 = ch[0].same_shape(&ch[2]);
            if s01 && s12 {
                *d *= 6;
            } else if s01 || s12 || s02 {
                *d *= 2;
            }
        } else {
            rec(&ch[0], false, d);
            rec(&ch[1], true, d);
            rec(&ch[2], true, d);
            if ch[1].same_shape(&ch[2]) {
                *d *= 2;
            }
        }
    }
    let mut d = 1;
    rec(&t.template, t.kind == Kind::CA, &mut d);
    d
}

/// PA types of one degree with shape lookup.
#[derive(Debug)]
pub struct TypeTable {
    degree: usize,
    types: Vec<AssocType>,
    index: HashMap<Monomial, usize>,
}

impl TypeTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn types(&self) -> &[AssocType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Index of the PA type with the monomial's shape.
    pub fn type_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(&m.shape()).copied()
    }
}

/// Shared PA type table for degree n.
pub fn type_table(n: usize) -> Result<Arc<TypeTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TypeTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let types = generate_types(n)?.pa;
    let index = types.iter().enumerate().map(|(i, t)| (t.template.shape(), i)).collect();
    let table = Arc::new(TypeTable {
        degree: n,
        types,
        index,
    });
    cache.lock().unwrap().insert(n, table.clone());
    Ok(table)
}

/// Straightened monomials over the PA types of degree n whose labels are an
/// arrangement of `vars`, ordered by type and then by label sequence.
pub fn enumerate_monomials(n: usize, vars: &[Letter], level: Level) -> Result<Vec<(usize, Monomial)>> {
    if vars.len() != n {
        return Err(Error::Invalid(format!("{} variables for degree {n}", vars.len())));
    }
    if n > level.max_degree() {
        return Err(Error::UnsupportedDegree(n, format!("{level:?} straightening does not reduce to the PA types")));
    }
    let table = type_table(n)?;
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    let mut arrangements = Vec::new();
    loop {
        arrangements.push(sorted.clone());
        if !next_permutation(&mut sorted) {
            break;
        }
    }
    let mut out = Vec::new();
    for (k, t) in table.types().iter().enumerate() {
        for a in &arrangements {
            let m = t.template.relabel(a);
            if let SignedMonomial::Term(1, s) = straighten_at(level, &m) {
                if s == m {
                    out.push((k, m));
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Skew-symmetry identities

/// The identity `m + m^π ≡ 0` where `m` is the PA type with identity labels
/// and `m^π` carries the label sequence `perm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewIdentity {
    pub type_index: usize,
    pub perm: Permutation,
}

impl SkewIdentity {
    pub fn permuted(&self, template: &Monomial) -> Monomial {
        let labels: Vec<Letter> = self.perm.images().iter().map(|&x| x as Letter).collect();
        template.relabel(&labels)
    }
}

/// Generators of the skew-symmetries of every PA type of degree n.
///
/// At each node the alternating positions are 1..3 in a CA context and 2..3
/// on the PA spine. Each adjacent pair of equal-shape alternating arguments
/// gives one swap (of leaves or of whole blocks); only the first argument of
/// each run of equal shapes is searched for further generators.
pub fn skew_identities(n: usize) -> Result<Vec<SkewIdentity>> {
    let table = type_table(n)?;
    let mut out = Vec::new();
    for (k, t) in table.types().iter().enumerate() {
        let mut swaps = Vec::new();
        skew_rec(&t.template, 0, false, &mut swaps);
        for (s1, s2, len) in swaps {
            let mut images: Vec<usize> = (0..n).collect();
            for o in 0..len {
                images.swap(s1 + o, s2 + o);
            }
            out.push(SkewIdentity {
                type_index: k,
                perm: Permutation::from_images(images).expect("swap is a permutation"),
            });
        }
    }
    Ok(out)
}

fn skew_rec(x: &Monomial, offset: usize, complete: bool, out: &mut Vec<(usize, usize, usize)>) {
    let Some(ch) = x.children() else { return };
    let mut starts = [offset; 3];
    starts[1] = offset + ch[0].degree();
    starts[2] = starts[1] + ch[1].degree();
    let first_alt = if complete { 0 } else { 1 };
    if !complete {
        skew_rec(&ch[0], starts[0], false, out);
    }
    for k in first_alt..3 {
        let repeats_previous = k > first_alt && ch[k - 1].same_shape(&ch[k]);
        if !repeats_previous {
            skew_rec(&ch[k], starts[k], true, out);
        }
    }
    for k in first_alt..2 {
        if ch[k].same_shape(&ch[k + 1]) {
            out.push((starts[k], starts[k + 1], ch[k].degree()));
        }
    }
}

/// Size of the group generated by a set of permutations (brute-force closure).
pub fn group_order(gens: &[Permutation], n: usize) -> usize {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p).expect("same degree");
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        for s in ["a", "(a,b,c)", "((a,b,c),d,e)", "(a,(b,c,d),(e,f,g))"] {
            assert_eq!(m(s).to_string(), s);
        }
        assert_eq!(m("((abc)de)"), m("((a,b,c),d,e)"));
        assert_eq!(m("[[a b c] d e]"), m("((a,b,c),d,e)"));
        assert!("(a,b)".parse::<Monomial>().is_err());
        assert!("(a,b,c".parse::<Monomial>().is_err());
        assert!("(a,b,c))".parse::<Monomial>().is_err());
        assert!("(a,B,c)".parse::<Monomial>().is_err());
    }

    #[test]
    fn precedence() {
        assert!(strictly_precedes(&m("a"), &m("b")));
        assert!(!strictly_precedes(&m("(a,b,c)"), &m("a")));
        assert!(!strictly_precedes(&m("((a,b,c),d,e)"), &m("(a,(b,c,d),e)")));
        assert!(strictly_precedes(&m("(a,(b,c,d),e)"), &m("((a,b,c),d,e)")));
        assert!(!strictly_precedes(&m("a"), &m("a")));
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&m("(a,c,b)")).to_string(), "-(a,b,c)");
        assert_eq!(straighten(&m("(a,(c,b,d),e)")).to_string(), "-(a,(b,c,d),e)");
        assert_eq!(straighten(&m("(a,b,(c,d,e))")).to_string(), "-(a,(c,d,e),b)");
        assert_eq!(straighten(&m("(a,(b,b,c),d)")), SignedMonomial::Zero);
        assert_eq!(straighten(&m("(a,b,b)")), SignedMonomial::Zero);
        // nested complete alternation: (d,c,b) -> -(b,c,d)... twice
        assert_eq!(straighten(&m("(a,((d,c,b),f,e),g)")).to_string(), "(a,((b,c,d),e,f),g)");
        assert_eq!(straighten_at(Level::P, &m("(a,(c,b,d),e)")).to_string(), "(a,(c,b,d),e)");
        assert_eq!(straighten_at(Level::P, &m("(a,(b,d,c),e)")).to_string(), "-(a,(b,c,d),e)");
        assert_eq!(straighten_at(Level::Free, &m("(a,c,b)")).to_string(), "(a,c,b)");
    }

    #[test]
    fn table_two() {
        let expect_pa: [&[&str]; 5] = [
            &["a"],
            &["(a,b,c)"],
            &["((a,b,c),d,e)", "(a,(b,c,d),e)"],
            &[
                "(((a,b,c),d,e),f,g)",
                "((a,(b,c,d),e),f,g)",
                "((a,b,c),(d,e,f),g)",
                "(a,((b,c,d),e,f),g)",
                "(a,(b,c,d),(e,f,g))",
            ],
            &[
                "((((a,b,c),d,e),f,g),h,i)",
                "(((a,(b,c,d),e),f,g),h,i)",
                "(((a,b,c),(d,e,f),g),h,i)",
                "((a,((b,c,d),e,f),g),h,i)",
                "((a,(b,c,d),(e,f,g)),h,i)",
                "(((a,b,c),d,e),(f,g,h),i)",
                "((a,(b,c,d),e),(f,g,h),i)",
                "((a,b,c),((d,e,f),g,h),i)",
                "((a,b,c),(d,e,f),(g,h,i))",
                "(a,(((b,c,d),e,f),g,h),i)",
                "(a,((b,c,d),(e,f,g),h),i)",
                "(a,((b,c,d),e,f),(g,h,i))",
            ],
        ];
        let expect_ca: [&[&str]; 5] = [
            &["a"],
            &["(a,b,c)"],
            &["((a,b,c),d,e)"],
            &["(((a,b,c),d,e),f,g)", "((a,b,c),(d,e,f),g)"],
            &[
                "((((a,b,c),d,e),f,g),h,i)",
                "(((a,b,c),(d,e,f),g),h,i)",
                "(((a,b,c),d,e),(f,g,h),i)",
                "((a,b,c),(d,e,f),(g,h,i))",
            ],
        ];
        for (k, n) in [1usize, 3, 5, 7, 9].into_iter().enumerate() {
            let t = generate_types(n).unwrap();
            let pa: Vec<String> = t.pa.iter().map(|x| x.to_string()).collect();
            let ca: Vec<String> = t.ca.iter().map(|x| x.to_string()).collect();
            assert_eq!(pa, expect_pa[k]);
            assert_eq!(ca, expect_ca[k]);
        }
        assert!(generate_types(4).is_err());
    }

    #[test]
    fn countsymmetry_values() {
        let t7 = generate_types(7).unwrap().pa;
        let d: Vec<u64> = t7.iter().map(countsymmetry).collect();
        assert_eq!(d, vec![8, 12, 12, 12, 72]);
        let t3 = generate_types(3).unwrap().pa;
        assert_eq!(countsymmetry(&t3[0]), 2);
        let t5 = generate_types(5).unwrap().pa;
        assert_eq!(t5.iter().map(countsymmetry).collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(countsymmetry(&generate_types(3).unwrap().ca[0]), 6);
    }

    #[test]
    fn enumeration_counts() {
        let count_by_type = |n: usize, vars: &[u8], level| {
            let ms = enumerate_monomials(n, vars, level).unwrap();
            let t = type_table(n).unwrap().len();
            (0..t).map(|k| ms.iter().filter(|(i, _)| *i == k).count()).collect::<Vec<_>>()
        };
        assert_eq!(count_by_type(3, &[0, 1, 2], Level::Free), vec![6]);
        assert_eq!(count_by_type(3, &[0, 1, 2], Level::PQ), vec![3]);
        assert_eq!(count_by_type(5, &[0, 1, 2, 3, 4], Level::P), vec![30, 60]);
        assert_eq!(count_by_type(5, &[0, 1, 2, 3, 4], Level::PQ), vec![30, 20]);
        assert_eq!(count_by_type(7, &[0, 1, 2, 3, 4, 5, 6], Level::PQ), vec![630, 420, 420, 420, 70]);
        assert_eq!(count_by_type(7, &[0, 0, 0, 1, 2, 3, 4], Level::PQ), vec![60, 34, 34, 34, 3]);
        assert!(enumerate_monomials(7, &[0, 1, 2, 3, 4, 5, 6], Level::P).is_err());
    }

    #[test]
    fn enumeration_order() {
        let ms = enumerate_monomials(3, &[0, 1, 2], Level::Free).unwrap();
        let text: Vec<String> = ms.iter().map(|(_, m)| m.to_string()).collect();
        assert_eq!(text, vec!["(a,b,c)", "(a,c,b)", "(b,a,c)", "(b,c,a)", "(c,a,b)", "(c,b,a)"]);
    }

    #[test]
    fn table_five() {
        let s = skew_identities(7).unwrap();
        let table = type_table(7).unwrap();
        let text: Vec<String> = s
            .iter()
            .map(|x| {
                let t = &table.types()[x.type_index].template;
                format!("{} + {}", t.compact(), x.permuted(t).compact())
            })
            .collect();
        assert_eq!(
            text,
            vec![
                "(((abc)de)fg) + (((acb)de)fg)",
                "(((abc)de)fg) + (((abc)ed)fg)",
                "(((abc)de)fg) + (((abc)de)gf)",
                "((a(bcd)e)fg) + ((a(cbd)e)fg)",
                "((a(bcd)e)fg) + ((a(bdc)e)fg)",
                "((a(bcd)e)fg) + ((a(bcd)e)gf)",
                "((abc)(def)g) + ((acb)(def)g)",
                "((abc)(def)g) + ((abc)(edf)g)",
                "((abc)(def)g) + ((abc)(dfe)g)",
                "(a((bcd)ef)g) + (a((cbd)ef)g)",
                "(a((bcd)ef)g) + (a((bdc)ef)g)",
                "(a((bcd)ef)g) + (a((bcd)fe)g)",
                "(a(bcd)(efg)) + (a(cbd)(efg))",
                "(a(bcd)(efg)) + (a(bdc)(efg))",
                "(a(bcd)(efg)) + (a(efg)(bcd))",
            ]
        );
        assert_eq!(skew_identities(3).unwrap().len(), 1);
        assert_eq!(skew_identities(5).unwrap().len(), 4);
    }

    #[test]
    fn skew_groups_have_countsymmetry_order() {
        for n in [3usize, 5, 7, 9] {
            let table = type_table(n).unwrap();
            let skews = skew_identities(n).unwrap();
            for (k, t) in table.types().iter().enumerate() {
                let gens: Vec<Permutation> =
                    skews.iter().filter(|s| s.type_index == k).map(|s| s.perm.clone()).collect();
                assert_eq!(group_order(&gens, n) as u64, countsymmetry(t), "{t}");
            }
        }
    }

    #[test]
    fn skew_identities_straighten_to_negatives() {
        for n in [3usize, 5, 7, 9] {
            let table = type_table(n).unwrap();
            for s in skew_identities(n).unwrap() {
                let t = &table.types()[s.type_index].template;
                assert_eq!(straighten(&s.permuted(t)), SignedMonomial::Term(-1, t.clone()));
            }
        }
    }
}
