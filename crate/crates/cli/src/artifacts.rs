//! `reproduce`: recompute a published table or result and compare it with the
//! golden copy bundled into the binary.

use std::path::Path;

use pats_core::exactla::{Field, Modulus, DEFAULT_PRIME};
use pats_core::identities::{
    build_expansion_matrix, identities_from_matrix, identity_r, identity_s_resolved, is_identity, nonlinear_identity,
    orbit, partition_vars, span_rank, IdentityRecord, TernaryPolynomial,
};
use pats_core::symgroup::Partition;
use pats_core::ternary::generate_types;
use serde_json::{json, Value};

use crate::report::{Report, Table};
use crate::{degree9_report, degree9_rows, identity_rows, ranks, Artifact, Failure, Outcome};

pub const GOLDEN_VERSION: u64 = 1;

impl Artifact {
    pub fn name(self) -> &'static str {
        match self {
            Artifact::Table1 => "table1",
            Artifact::Table2 => "table2",
            Artifact::Table4 => "table4",
            Artifact::Thm64 => "thm6.4",
            Artifact::Thm76 => "thm7.6",
            Artifact::Thm77 => "thm7.7",
            Artifact::Thm78 => "thm7.8",
            Artifact::Degree9 => "degree9",
        }
    }

    pub fn golden(self) -> &'static str {
        match self {
            Artifact::Table1 => include_str!("../golden/table1.json"),
            Artifact::Table2 => include_str!("../golden/table2.json"),
            Artifact::Table4 => include_str!("../golden/table4.json"),
            Artifact::Thm64 => include_str!("../golden/thm6.4.json"),
            Artifact::Thm76 => include_str!("../golden/thm7.6.json"),
            Artifact::Thm77 => include_str!("../golden/thm7.7.json"),
            Artifact::Thm78 => include_str!("../golden/thm7.8.json"),
            Artifact::Degree9 => include_str!("../golden/degree9.json"),
        }
    }
}

fn modulus() -> Modulus {
    Modulus::new(DEFAULT_PRIME).expect("prime")
}

/// The artifact as a report; its JSON is what the golden file stores.
pub fn compute(a: Artifact, only: &[Partition]) -> Result<Report, Failure> {
    let mut r = match a {
        Artifact::Table1 => degree3_matrix()?,
        Artifact::Table2 => type_lists()?,
        Artifact::Table4 => ranks(7, &[], modulus(), false)?,
        Artifact::Thm64 => degree7_nullspace()?,
        Artifact::Thm76 => nonlinear(&[3, 1, 1, 1, 1], &["31111"])?,
        Artifact::Thm77 => nonlinear(&[2, 2, 1, 1, 1], &["22111-1", "22111-2"])?,
        Artifact::Thm78 => nonlinear(
            &[2, 1, 1, 1, 1, 1],
            &["211111-1", "211111-2", "211111-3", "211111-4", "211111-5"],
        )?,
        Artifact::Degree9 => {
            let types = generate_types(9)?;
            let t = degree9_rows(only, modulus(), None)?;
            let mut r = degree9_report(&t, "reproduce")?;
            r.json["ca_types"] = json!(types.ca.len());
            r.json["pa_types"] = json!(types.pa.len());
            r.text = format!("{} CA and {} PA types\n", types.ca.len(), types.pa.len()) + &r.text;
            r
        }
    };
    r.json["command"] = json!("reproduce");
    r.json["artifact"] = json!(a.name());
    Ok(r)
}

pub fn reproduce(a: Artifact, only: &[Partition], bless: Option<&Path>) -> Result<Report, Outcome> {
    if !only.is_empty() && a != Artifact::Degree9 {
        return Err(Failure::Usage("--partition applies to degree9 only".into()).into());
    }
    let report = compute(a, only)?;
    if let Some(path) = bless {
        let g = json!({"artifact": a.name(), "version": GOLDEN_VERSION, "data": report.json});
        std::fs::write(path, serde_json::to_string_pretty(&g).expect("json") + "\n").map_err(Failure::from)?;
        return Ok(report);
    }
    check(a, a.golden(), only, report)
}

/// Compare a computed artifact with golden text; mismatches keep the report.
pub fn check(a: Artifact, golden_text: &str, only: &[Partition], mut report: Report) -> Result<Report, Outcome> {
    let golden: Value = serde_json::from_str(golden_text)
        .map_err(|e| Failure::Usage(format!("golden file for {} is unreadable: {e}", a.name())))?;
    let mut want = golden["data"].clone();
    let mut got = report.json.clone();
    if !only.is_empty() {
        // a partial run is compared row by row
        let sel: Vec<Value> = want["rows"]
            .as_array()
            .into_iter()
            .flatten()
            .filter(|row| only.iter().any(|p| row["partition"] == json!(p.to_string())))
            .cloned()
            .collect();
        want = Value::Array(sel);
        got = got["rows"].clone();
    }
    let mut diffs = Vec::new();
    diff("", &want, &got, &mut diffs);
    let version = golden["version"].as_u64().unwrap_or(0);
    if diffs.is_empty() {
        report.text += &format!("golden {} v{version}: match\n", a.name());
        Ok(report)
    } else {
        let shown: Vec<String> = diffs.iter().take(20).cloned().collect();
        let more = diffs.len().saturating_sub(shown.len());
        let mut msg = format!("{} differs from golden v{version} in {} places\n  ", a.name(), diffs.len());
        msg += &shown.join("\n  ");
        if more > 0 {
            msg += &format!("\n  ... and {more} more");
        }
        report.text += &format!("golden {} v{version}: MISMATCH\n", a.name());
        Err(Outcome::Reported(report, Failure::Mismatch(msg)))
    }
}

/// Paths where `want` and `got` disagree.
pub fn diff(path: &str, want: &Value, got: &Value, out: &mut Vec<String>) {
    match (want, got) {
        (Value::Object(a), Value::Object(b)) => {
            let keys: std::collections::BTreeSet<&String> = a.keys().chain(b.keys()).collect();
            for k in keys {
                let null = Value::Null;
                diff(&format!("{path}/{k}"), a.get(k).unwrap_or(&null), b.get(k).unwrap_or(&null), out);
            }
        }
        (Value::Array(a), Value::Array(b)) => {
            if a.len() != b.len() {
                out.push(format!("{path}: golden has {} entries, computed {}", a.len(), b.len()));
            }
            for (k, (x, y)) in a.iter().zip(b).enumerate() {
                diff(&format!("{path}/{k}"), x, y, out);
            }
        }
        _ if want != got => out.push(format!("{path}: golden {want}, computed {got}")),
        _ => {}
    }
}

fn degree3_matrix() -> Result<Report, Failure> {
    let e = build_expansion_matrix(&[0, 1, 2])?;
    let records = identities_from_matrix(&e, Field::Rational)?;
    let dense = e.dense_rows();
    let transpose: Vec<Vec<i64>> = (0..e.ncols()).map(|j| dense.iter().map(|r| r[j]).collect()).collect();
    let mut text = format!("transpose of the {}x{} expansion matrix\n", e.nrows(), e.ncols());
    for row in &transpose {
        let cells: Vec<String> = row.iter().map(|&x| if x == 0 { ".".into() } else { x.to_string() }).collect();
        text += &cells.iter().map(|c| format!("{c:>2}")).collect::<Vec<_>>().join(" ");
        text.push('\n');
    }
    text += "nullspace basis\n";
    for r in &records {
        text += &format!("  {}\n", r.polynomial);
    }
    let json = json!({
        "words": e.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "monomials": e.monomials.iter().map(|(_, m)| m.to_string()).collect::<Vec<_>>(),
        "transpose": transpose,
        "rank": e.ncols() - records.len(),
        "nullity": records.len(),
        "basis": records.iter().map(|r| r.polynomial.to_string()).collect::<Vec<_>>(),
    });
    Ok(Report::plain(json, text))
}

fn type_lists() -> Result<Report, Failure> {
    let mut t = Table::new(&["degree", "kind", "index", "type"]);
    for n in [1, 3, 5, 7, 9] {
        let lists = generate_types(n)?;
        for (kind, list) in [("CA", &lists.ca), ("PA", &lists.pa)] {
            for (k, ty) in list.iter().enumerate() {
                t.push(vec![json!(n), json!(kind), json!(k + 1), json!(ty.to_string())]);
            }
        }
    }
    Report::tabular(json!({}), &t, None)
}

/// Consecutive runs of identities with equal term count, types and
/// coefficient set.
fn profile(records: &[IdentityRecord]) -> Vec<Value> {
    let mut out: Vec<Value> = Vec::new();
    for r in records {
        let key = json!({"terms": r.term_count, "types": r.types, "coefficients": r.coefficients});
        match out.last_mut() {
            Some(last) if last["key"] == key => {
                last["count"] = json!(last["count"].as_u64().unwrap_or(0) + 1);
            }
            _ => out.push(json!({"key": key, "count": 1})),
        }
    }
    out.into_iter()
        .map(|v| {
            let mut k = v["key"].clone();
            k["count"] = v["count"].clone();
            k
        })
        .collect()
}

fn degree7_nullspace() -> Result<Report, Failure> {
    let f = Field::Prime(DEFAULT_PRIME);
    let e = build_expansion_matrix(&[0, 1, 2, 3, 4, 5, 6])?;
    let records = identities_from_matrix(&e, f)?;
    let by_type: Vec<usize> = (0..5).map(|k| e.monomials.iter().filter(|(t, _)| *t == k).count()).collect();
    let r = identity_r();
    let (reading, s) = identity_s_resolved();
    let (or, os) = (orbit(&r)?, orbit(&s)?);
    let dr = span_rank(&or, f)?;
    let ds = span_rank(&os, f)?;
    let mut both: Vec<TernaryPolynomial> = or.into_iter().chain(os).collect();
    let dsum = span_rank(&both, f)?;
    both.extend(records.iter().map(|x| x.polynomial.clone()));
    let dall = span_rank(&both, f)?;
    let prof = profile(&records);
    let json = json!({
        "monomials": e.ncols(),
        "monomials_by_type": by_type,
        "rows_of_matrix": e.nrows(),
        "rank": e.ncols() - records.len(),
        "nullity": records.len(),
        "profile": prof,
        "r_terms": r.len(),
        "s_terms": s.len(),
        "r_is_identity": is_identity(&r),
        "s_is_identity": is_identity(&s),
        "s_last_sum": format!("{reading:?}").to_lowercase(),
        "orbit_r": dr,
        "orbit_s": ds,
        "orbit_sum": dsum,
        "orbits_span_nullspace": dall == dsum && dsum == records.len(),
        "r_is_basis_element_1": records.first().map(|x| x.polynomial == r),
        "s_is_basis_element_36": records.get(35).map(|x| x.polynomial == s),
    });
    let mut text = format!(
        "degree 7: {} monomials {:?}, {}x{} matrix, rank {}, nullity {}\n",
        e.ncols(),
        by_type,
        e.nrows(),
        e.ncols(),
        e.ncols() - records.len(),
        records.len()
    );
    for p in &prof {
        text += &format!(
            "  {} identities of {} terms, types {}, coefficients {}\n",
            p["count"], p["terms"], p["types"], p["coefficients"]
        );
    }
    text += &format!(
        "R: {} terms, orbit {dr}; S: {} terms, orbit {ds}; sum {dsum}\n",
        r.len(),
        s.len()
    );
    Ok(Report::plain(json, text))
}

fn nonlinear(parts: &[usize], printed: &[&str]) -> Result<Report, Failure> {
    let f = Field::Prime(DEFAULT_PRIME);
    let vars = partition_vars(parts);
    let e = build_expansion_matrix(&vars)?;
    let records = identities_from_matrix(&e, f)?;
    let mut polys: Vec<TernaryPolynomial> = records.iter().map(|r| r.polynomial.clone()).collect();
    let mut printed_rows = Vec::new();
    for name in printed {
        let p = nonlinear_identity(name)?;
        printed_rows.push(json!({"name": name, "terms": p.len(), "is_identity": is_identity(&p)}));
        polys.push(p);
    }
    let in_span = span_rank(&polys, f)? == records.len();
    let word: String = vars.iter().map(|&l| pats_core::dialgebra::letter_char(l)).collect();
    let t = identity_rows(&records);
    let meta = json!({
        "vars": word,
        "monomials": e.ncols(),
        "rows_of_matrix": e.nrows(),
        "rank": e.ncols() - records.len(),
        "nullity": records.len(),
        "term_counts": records.iter().map(|r| r.term_count).collect::<Vec<_>>(),
        "printed": printed_rows,
        "printed_in_nullspace": in_span,
    });
    let heading = format!(
        "{word}: {} monomials, rank {}, nullity {}; printed identities in the nullspace: {in_span}",
        e.ncols(),
        e.ncols() - records.len(),
        records.len()
    );
    Report::tabular(meta, &t, Some(heading))
}
