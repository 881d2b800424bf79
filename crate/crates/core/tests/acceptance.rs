//! Acceptance checks, one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use num_rational::BigRational;
use pats_core::dialgebra::{left_product, right_product, DialgebraWord};
use pats_core::exactla::{Field, Modulus};
use pats_core::identities::*;
use pats_core::repanalysis::{rank_row, rank_table};
use pats_core::symgroup::{partitions_of, ModRepresentation, Permutation};
use pats_core::ternary::{generate_types, straighten, straighten_at, Level, SignedMonomial};
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, Box<dyn std::error::Error>>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

fn p101() -> Modulus {
    Modulus::new(101).unwrap()
}

fn degree7() -> &'static (ExpansionMatrix, Vec<IdentityRecord>) {
    static D7: OnceLock<(ExpansionMatrix, Vec<IdentityRecord>)> = OnceLock::new();
    D7.get_or_init(|| {
        let e = build_expansion_matrix(&[0, 1, 2, 3, 4, 5, 6]).unwrap();
        let ids = identities_from_matrix(&e, Field::Prime(101)).unwrap();
        (e, ids)
    })
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn degree_three() -> Outcome {
    let e = build_expansion_matrix(&[0, 1, 2])?;
    check!((e.nrows(), e.ncols()) == (18, 6), "shape {}x{}", e.nrows(), e.ncols());
    // transpose of the printed matrix
    let printed: [[i64; 18]; 6] = [
        [1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, -1],
        [-1, 1, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 1],
        [0, 0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0],
        [0, 0, -1, 1, 0, 0, 1, 0, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, -1, 0, -1, 0, 1, 0, 0, 1, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, -1, 1, 0, 1, 0, -1, 0, 0, -1, 0, 1, 0, 0, 0],
    ];
    let rows = e.dense_rows();
    for (j, col) in printed.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            check!(rows[i][j] == x, "entry ({}, {}) is {} not {x}", i + 1, j + 1, rows[i][j]);
        }
    }
    let ids = identities_from_matrix(&e, Field::Rational)?;
    let got: Vec<String> = ids.iter().map(|r| r.polynomial.to_string()).collect();
    let want = ["(a,b,c) + (a,c,b)", "(b,a,c) + (b,c,a)", "(c,a,b) + (c,b,a)"];
    check!(got == want, "basis {got:?}");
    Ok("18x6 matches the printed transpose, nullity 3, basis = permutations of P".into())
}

fn degree_five() -> Outcome {
    let e = build_expansion_matrix(&[0, 1, 2, 3, 4])?;
    let by_type = |k| e.monomials.iter().filter(|(t, _)| *t == k).count();
    check!(e.ncols() == 90 && by_type(0) == 30 && by_type(1) == 60, "monomials {}", e.ncols());
    check!(e.nrows() == 600, "rows {}", e.nrows());
    let rq = e.rank(Field::Rational)?;
    let rp = e.rank(Field::Prime(101))?;
    check!(rq == 50 && rp == 50, "rank Q {rq}, mod 101 {rp}");
    let ids = identities_from_matrix(&e, Field::Rational)?;
    check!(ids.len() == 40, "nullity {}", ids.len());
    let first = "^abcde - ^abced - ^acbde + ^acbed - b^acde + b^aced + c^abde - c^abed - d^abce \
        + d^acbe + e^abcd - e^acbd + bc^ade - bc^aed - cb^ade + cb^aed + db^ace - dc^abe \
        + de^abc - de^acb - eb^acd + ec^abd - ed^abc + ed^acb - dbc^ae + dcb^ae - deb^ac \
        + dec^ab + ebc^ad - ecb^ad + edb^ac - edc^ab + debc^a - decb^a - edbc^a + edcb^a";
    let second = "^abcde - ^abdce - ^acbde + ^acdbe + ^adbce - ^adcbe - ^aebcd + ^aebdc + ^aecbd \
        - ^aecdb - ^aedbc + ^aedcb + e^abcd - e^abdc - e^acbd + e^acdb + e^adbc - e^adcb \
        - bcd^ae + bdc^ae + cbd^ae - cdb^ae - dbc^ae + dcb^ae + bcde^a - bdce^a - cbde^a \
        + cdbe^a + dbce^a - dcbe^a - ebcd^a + ebdc^a + ecbd^a - ecdb^a - edbc^a + edcb^a";
    for (mono, text) in [("((a,b,c),d,e)", first), ("(a,(b,c,d),e)", second)] {
        let mut want = BTreeSet::new();
        let mut sign = 1;
        for tok in text.split_whitespace() {
            match tok {
                "+" => sign = 1,
                "-" => sign = -1,
                w => {
                    want.insert((w.parse::<DialgebraWord>()?.to_string(), sign));
                }
            }
        }
        let got: BTreeSet<(String, i64)> = expand_pats(&mono.parse()?)
            .terms()
            .iter()
            .map(|(w, c)| (w.to_string(), if *c > rat(0) { 1 } else { -1 }))
            .collect();
        check!(want.len() == 36 && got == want, "expansion of {mono} differs");
    }
    Ok("90 = 30+60 monomials, 600x90, rank 50 over Q and F_101, nullity 40, both 36-term expansions".into())
}

fn degree_seven() -> Outcome {
    let (e, ids) = degree7();
    let counts: Vec<usize> = (0..5).map(|k| e.monomials.iter().filter(|(t, _)| *t == k).count()).collect();
    check!(counts == [630, 420, 420, 420, 70], "monomials by type {counts:?}");
    check!((e.nrows(), e.ncols()) == (35280, 1960), "shape {}x{}", e.nrows(), e.ncols());
    let rank = e.ncols() - ids.len();
    check!(rank == 1911 && ids.len() == 49, "rank {rank}, nullity {}", ids.len());
    let pm1 = vec!["-1".to_string(), "1".to_string()];
    let pm2 = vec!["-2".to_string(), "-1".to_string(), "1".to_string(), "2".to_string()];
    let groups: [(usize, usize, Vec<usize>, &Vec<String>); 4] = [
        (7, 120, vec![2, 3], &pm1),
        (28, 120, vec![1, 2, 3, 4], &pm1),
        (7, 120, vec![1, 2, 3, 4, 5], &pm1),
        (7, 180, vec![1, 2, 3, 4], &pm2),
    ];
    let mut k = 0;
    for (count, terms, types, coefs) in groups {
        for r in &ids[k..k + count] {
            check!(
                r.term_count == terms && r.types == types && &r.coefficients == coefs,
                "identity {}: {} terms, types {:?}, coefficients {:?}",
                k + 1,
                r.term_count,
                r.types,
                r.coefficients
            );
        }
        k += count;
    }
    Ok("1960 = 630/420/420/420/70, 35280x1960, rank 1911, nullity 49, profile 7/28/7/7".into())
}

fn r_and_s() -> Outcome {
    let (r, (reading, s)) = (identity_r(), identity_s_resolved());
    for (name, p) in [("R", &r), ("S", &s)] {
        let coefs: Vec<String> = p.coefficient_set().iter().map(|c| c.to_string()).collect();
        check!(p.len() == 120 && coefs == ["-1", "1"], "{name}: {} terms, coefficients {coefs:?}", p.len());
        check!(is_identity(p), "{name} does not vanish");
    }
    let f = Field::Prime(101);
    let (or, os) = (orbit(&r)?, orbit(&s)?);
    let dr = span_rank(&or, f)?;
    let ds = span_rank(&os, f)?;
    let both: Vec<_> = or.iter().chain(&os).cloned().collect();
    let sum = span_rank(&both, f)?;
    check!(dr == 7 && ds == 42, "orbit dimensions {dr}, {ds}");
    check!(sum == 49, "sum of orbits has rank {sum}");
    let (_, ids) = degree7();
    let mut with_null = both;
    with_null.extend(ids.iter().map(|r| r.polynomial.clone()));
    let total = span_rank(&with_null, f)?;
    check!(total == 49, "orbits do not span the nullspace ({total})");
    check!(ids[0].polynomial == r && ids[35].polynomial == s, "R, S differ from basis elements 1 and 36");
    Ok(format!(
        "120 terms each, ±1, identities; orbits 7 + 42 = 49 with zero intersection; S uses the {reading:?} last sum"
    ))
}

fn table_four() -> Outcome {
    let printed: [(&str, usize, usize, usize, usize); 15] = [
        ("7", 1, 5, 5, 0),
        ("61", 6, 30, 30, 0),
        ("52", 14, 70, 70, 0),
        ("511", 15, 75, 75, 0),
        ("43", 14, 69, 69, 0),
        ("421", 35, 170, 170, 0),
        ("4111", 20, 96, 96, 0),
        ("331", 21, 99, 99, 0),
        ("322", 21, 96, 96, 0),
        ("3211", 35, 156, 156, 0),
        ("31111", 15, 63, 64, 1),
        ("2221", 14, 56, 56, 0),
        ("22111", 14, 52, 53, 1),
        ("211111", 6, 17, 20, 3),
        ("1111111", 1, 0, 2, 2),
    ];
    let t = rank_table(7, p101(), None)?;
    check!(t.rows.len() == 15, "{} rows", t.rows.len());
    for (row, want) in t.rows.iter().zip(printed) {
        let got = (row.partition.to_string(), row.dimension, row.symrank, row.exprank, row.newrank);
        let want = (want.0.to_string(), want.1, want.2, want.3, want.4);
        check!(got == want, "row {got:?}, expected {want:?}");
    }
    check!(t.checksum() == 49, "checksum {}", t.checksum());
    Ok("15 rows equal, checksum 49".into())
}

fn nonlinear() -> Outcome {
    let f = Field::Prime(101);
    let e = build_expansion_matrix(&parse_vars("aaabcde")?)?;
    let ids = identities_from_matrix(&e, f)?;
    let rank = e.rank(f)?;
    check!(e.ncols() == 165 && rank == 164, "aaabcde: {} monomials, rank {rank}", e.ncols());
    check!(ids.len() == 1 && ids[0].term_count == 60, "aaabcde: {} identities", ids.len());
    let n2 = find_identities(&parse_vars("aabbcde")?, f)?.len();
    check!(n2 == 2, "aabbcde nullity {n2}");
    let ids3 = find_identities(&parse_vars("aabcdef")?, f)?;
    let short = ids3.iter().filter(|r| r.term_count == 60).count();
    check!(ids3.len() == 12 && short == 5, "aabcdef: nullity {}, {short} of 60 terms", ids3.len());
    for name in NONLINEAR_NAMES {
        let p = nonlinear_identity(name)?;
        check!(!p.is_zero() && is_identity(&p), "printed identity {name} fails");
    }
    Ok("165 monomials, rank 164, one 60-term identity; nullity 2; nullity 12 with five 60-term; 8 printed identities vanish".into())
}

fn degree_nine() -> Outcome {
    let types = generate_types(9)?;
    check!(types.ca.len() == 4 && types.pa.len() == 12, "types {} CA, {} PA", types.ca.len(), types.pa.len());
    let mut worst = 0f64;
    for lambda in partitions_of(9) {
        let t = Instant::now();
        let row = rank_row(&lambda, p101(), true)?;
        worst = worst.max(t.elapsed().as_secs_f64());
        let lif = row.symlifrank.unwrap();
        check!(row.symrank <= lif && lif <= row.exprank, "{lambda}: {} {lif} {}", row.symrank, row.exprank);
        check!(lif == row.exprank, "{lambda}: symlifrank {lif} != exprank {}", row.exprank);
    }
    Ok(format!("4 CA / 12 PA types; symlifrank = exprank in all 30 partitions (slowest {worst:.1}s)"))
}

fn properties() -> Outcome {
        // dialgebra axioms
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let w = common::word;
    runner
        .run(&(w(), w(), w()), |(a, b, c)| {
            let (l, r) = (left_product, right_product);
            proptest::prop_assert_eq!(l(&l(&a, &b), &c), l(&a, &l(&b, &c)));
            proptest::prop_assert_eq!(r(&r(&a, &b), &c), r(&a, &r(&b, &c)));
            proptest::prop_assert_eq!(l(&r(&a, &b), &c), r(&a, &l(&b, &c)));
            proptest::prop_assert_eq!(r(&l(&a, &b), &c), r(&r(&a, &b), &c));
            proptest::prop_assert_eq!(l(&a, &l(&b, &c)), l(&a, &r(&b, &c)));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    // straightening is idempotent
    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&common::monomial(), |m| {
            for level in [Level::P, Level::PQ] {
                let once = straighten_at(level, &m);
                if let SignedMonomial::Term(s, x) = &once {
                    let twice = straighten_at(level, x);
                    proptest::prop_assert_eq!(twice, SignedMonomial::Term(1, x.clone()));
                    proptest::prop_assert!(s.abs() == 1);
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    // straightening preserves expansions, exhaustively up to degree 7
    let mut checked = 0usize;
    for n in [1usize, 3, 5, 7] {
        let labels: Vec<u8> = (0..n as u8).collect();
        for shape in common::all_shapes(n) {
            for sigma in Permutation::all(n) {
                let lab: Vec<u8> = sigma.images().iter().map(|&x| labels[x]).collect();
                let m = shape.relabel(&lab);
                for level in [Level::P, Level::PQ] {
                    let lhs = common::expansion(&m, 1);
                    let rhs = match straighten_at(level, &m) {
                        SignedMonomial::Zero => vec![],
                        SignedMonomial::Term(s, x) => common::expansion(&x, s as i64),
                    };
                    check!(lhs == rhs, "expansion changes when straightening {m} at {level:?}");
                }
                checked += 1;
            }
        }
    }
    check!(straighten(&"(a,b,b)".parse()?) == SignedMonomial::Zero, "zero case");
    // ρ is a homomorphism
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            let rep = ModRepresentation::new(&lambda, p101())?;
            for _ in 0..100 {
                let mut a: Vec<usize> = (0..n).collect();
                let mut b = a.clone();
                shuffle(&mut rng, &mut a);
                shuffle(&mut rng, &mut b);
                let (a, b) = (Permutation::from_images(a)?, Permutation::from_images(b)?);
                let lhs = rep.matrix(&a.compose(&b)?);
                let rhs = rep.matrix(&a).mul(&rep.matrix(&b))?;
                check!(lhs == rhs, "ρ({a}∘{b}) differs in {lambda}");
                pairs += 1;
            }
        }
    }
    // Σ d² = n!
    for n in [3usize, 5, 7, 9] {
        let s: usize = partitions_of(n).iter().map(|p| p.dimension().pow(2)).sum();
        let f: usize = (1..=n).product();
        check!(s == f, "sum of squared dimensions for n = {n}: {s}");
    }
    // ranks over Q and F_p agree in degrees 3 and 5
    let mut mats = 0;
    for n in [3usize, 5] {
        for lambda in partitions_of(n) {
            let vars: Vec<u8> = lambda
                .parts()
                .iter()
                .enumerate()
                .flat_map(|(k, &m)| std::iter::repeat_n(k as u8, m))
                .collect();
            let e = build_expansion_matrix(&vars)?;
            let (q, p) = (e.rank(Field::Rational)?, e.rank(Field::Prime(101))?);
            check!(q == p, "rank over Q {q} vs F_101 {p} for {lambda}");
            mats += 1;
        }
    }
    Ok(format!(
        "1000 axiom triples, 10^4 idempotence cases, {checked} monomials sound, {pairs} ρ pairs, Σd²=n!, {mats} matrices Q=F_p"
    ))
}

fn shuffle(rng: &mut ChaCha8Rng, v: &mut [usize]) {
    for i in (1..v.len()).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("degree 3 expansion matrix and identities", degree_three),
        ("degree 5 monomials, rank and expansions", degree_five),
        ("degree 7 multilinear nullspace", degree_seven),
        ("identities R and S", r_and_s),
        ("rank table in degree 7", table_four),
        ("nonlinear identities in degree 7", nonlinear),
        ("no new identities in degree 9", degree_nine),
        ("property suites", properties),
    ];
    // optional criterion numbers select a subset
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (mut passed, mut failed) = (0, 0);
    for (k, (name, f)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(k + 1)) {
            continue;
        }
        let t = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let why = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(why.into())
        });
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(detail) => {
                passed += 1;
                println!("criterion {} PASS  {name}: {detail} [{secs:.1}s]", k + 1)
            }
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{secs:.1}s]", k + 1)
            }
        }
    }
    println!("acceptance: {passed} passed, {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
