//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use schubert_core::connectivity::{check_cor73, check_th71, check_th81, check_th84, Variety};
use schubert_core::{
    lr_oracle, multiply, nonzero_pair, nonzero_special_product, support_admissible, BigInt,
    BiSchubertClass, BoxedPartition, ClassJson, MultiDegree, MultiProjClass, PartitionBox,
    ProductSpace, SchubertClass, Witness,
};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Every box with at most `cells` cells.
fn boxes(cells: u32) -> Vec<PartitionBox> {
    let mut out = Vec::new();
    for rows in 1..=cells {
        for w in 1..=cells / rows {
            out.push(PartitionBox::new(rows - 1, w));
        }
    }
    out
}

/// Non-increasing lists of parts in `1..=max_part` with sum at most `max_sum`.
fn sorted_lists(max_part: u32, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(cap: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(p, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_part, max_sum, &mut Vec::new(), &mut out);
    out
}

fn basis(p: &BoxedPartition) -> SchubertClass {
    SchubertClass::basis(p.clone())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture_dir() -> PathBuf {
    workspace_root().join("fixtures")
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    for f in boxes(12) {
        let all = f.partitions(None);
        for a in &all {
            for b in &all {
                let fast = multiply(&basis(a), &basis(b)).map_err(err)?;
                let slow = lr_oracle(a, b).map_err(err)?;
                if fast != slow {
                    return Err(format!("{a} * {b} in {f}: {fast:?} vs {slow:?}"));
                }
                pairs += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 30.0 {
        return Err(format!("{pairs} pairs agree but took {secs:.1}s"));
    }
    Ok(format!("{pairs} pairs in {} boxes, {secs:.2}s", boxes(12).len()))
}

fn pair_nonvanishing() -> Outcome {
    let mut pairs = 0usize;
    for f in boxes(12) {
        let all = f.partitions(None);
        for a in &all {
            for b in &all {
                let predicted = nonzero_pair(a, b).map_err(err)?;
                let actual = !multiply(&basis(a), &basis(b)).map_err(err)?.is_zero();
                if predicted != actual {
                    return Err(format!("{a}, {b} in {f}: predicted {predicted}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn special_product_nonvanishing() -> Outcome {
    let mut cases = 0usize;
    for f in boxes(12) {
        let lists = sorted_lists(f.width(), f.cells());
        let full = f.full();
        for lambda in f.partitions(None) {
            let start = basis(&lambda.complement());
            for ell in &lists {
                let mut prod = start.clone();
                for &l in ell {
                    prod = prod.pieri(l).map_err(err)?;
                }
                let predicted = nonzero_special_product(&lambda, ell).map_err(err)?;
                if predicted != !prod.is_zero() {
                    return Err(format!("{lambda}, ell {ell:?} in {f}: predicted {predicted}"));
                }
                if lambda == full && !predicted {
                    return Err(format!("full box with ell {ell:?} in {f} predicted zero"));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (lambda, ell) cases"))
}

fn duality() -> Outcome {
    let mut count = 0usize;
    for f in boxes(12) {
        let point = SchubertClass::basis(f.full());
        for lambda in f.partitions(None) {
            let prod = multiply(&basis(&lambda), &basis(&lambda.complement())).map_err(err)?;
            if prod != point {
                return Err(format!("{lambda} in {f}: {prod:?}"));
            }
            count += 1;
        }
    }
    let f = PartitionBox::grassmannian(1, 3).map_err(err)?;
    let s1 = basis(&BoxedPartition::new(f, &[1]).map_err(err)?);
    let fourth = [&s1, &s1, &s1]
        .iter()
        .try_fold(s1.clone(), |acc, c| multiply(&acc, c))
        .map_err(err)?;
    let expected = SchubertClass::basis(BoxedPartition::new(f, &[2, 2]).map_err(err)?)
        .scale(&BigInt::from(2));
    if fourth != expected {
        return Err(format!("sigma_1^4 = {fourth:?}"));
    }
    Ok(format!("{count} complementary pairs; sigma_1^4 = 2 sigma_22 in G(1,P^3)"))
}

fn grass_variety(doc: &Value, key: &str) -> Result<Variety<SchubertClass>, String> {
    let raw = doc
        .pointer(&format!("/inputs/{key}"))
        .ok_or_else(|| format!("missing inputs.{key}"))?;
    let json: ClassJson = serde_json::from_value(raw.clone()).map_err(err)?;
    Variety::new(json.to_class().map_err(err)?).map_err(err)
}

fn hansen_fixtures() -> Outcome {
    let names = [
        "ex51.json",
        "ex51-n4-d1.json",
        "ex51-n4-d2.json",
        "ex52-d1-r2.json",
        "ex52-d2-r2.json",
    ];
    for name in names {
        let text = std::fs::read_to_string(fixture_dir().join(name)).map_err(err)?;
        let doc: Value = serde_json::from_str(&text).map_err(err)?;
        let x = grass_variety(&doc, "x")?;
        let y = grass_variety(&doc, "y")?;
        let cor73 = check_cor73(&x, &y).map_err(err)?;
        let tensor = BiSchubertClass::tensor(&x.class, &y.class).map_err(err)?;
        let th71 = check_th71(&Variety::new(tensor).map_err(err)?).map_err(err)?;
        if cor73.holds || th71.holds {
            return Err(format!(
                "{name}: cor7.3 holds={}, th7.1 holds={}",
                cor73.holds, th71.holds
            ));
        }
    }
    Ok(format!("{} fixtures give false under both checkers", names.len()))
}

fn trimmed(parts: &[u32]) -> Vec<u32> {
    let len = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
    parts[..len].to_vec()
}

fn mu_j_set(d: u32, n: u32, mu: &[u32]) -> Result<BTreeSet<Vec<u32>>, String> {
    let f = PartitionBox::grassmannian(d, n).map_err(err)?;
    let mu = BoxedPartition::new(f, mu).map_err(err)?;
    mu.descent_set()
        .into_iter()
        .map(|j| mu.mu_j(j).map(|p| trimmed(p.parts())).map_err(err))
        .collect()
}

/// Dual conditions read off the witnesses of the checker run on `(F*, μ*)`.
fn dual_set(d: u32, n: u32, mu: &[u32]) -> Result<BTreeSet<Vec<u32>>, String> {
    let f = PartitionBox::grassmannian(d, n).map_err(err)?;
    let mu = BoxedPartition::new(f, mu).map_err(err)?;
    let unit = Variety::new(SchubertClass::unit(f)).map_err(err)?;
    let star = Variety::new(unit.class.conjugate().map_err(err)?).map_err(err)?;
    let mu_star = mu.conjugate().map_err(err)?;
    let cert = check_th81(&star, &mu_star).map_err(err)?;
    let dual_box = mu_star.frame();
    cert.witnesses
        .iter()
        .filter_map(|w| match w {
            Witness::Descent { partition, .. } => Some(partition),
            _ => None,
        })
        .map(|p| {
            let back = BoxedPartition::new(dual_box, p)
                .and_then(|q| q.conjugate())
                .map_err(err)?;
            Ok(trimmed(back.parts()))
        })
        .collect()
}

fn set(items: &[&[u32]]) -> BTreeSet<Vec<u32>> {
    items.iter().map(|p| p.to_vec()).collect()
}

fn descent_examples() -> Outcome {
    let checks = [
        (
            "mu^(j), n-d=6",
            mu_j_set(3, 9, &[5, 2, 2, 1])?,
            set(&[&[2, 2, 2, 2], &[3, 3, 3, 1], &[6, 2, 2, 1]]),
        ),
        (
            "mu^(j), n-d=5",
            mu_j_set(3, 8, &[5, 2, 2, 1])?,
            set(&[&[2, 2, 2, 2], &[3, 3, 3, 1], &[5, 5, 2, 1]]),
        ),
        (
            "dual, d=4",
            dual_set(4, 10, &[5, 2, 2, 1])?,
            set(&[&[5, 5], &[5, 2, 2, 2], &[5, 2, 2, 1, 1]]),
        ),
        (
            "dual, d=5",
            dual_set(5, 11, &[5, 2, 2, 1])?,
            set(&[&[5, 5], &[5, 2, 2, 2], &[5, 2, 2, 1, 1]]),
        ),
        (
            "dual, d=3",
            dual_set(3, 9, &[5, 2, 2, 1])?,
            set(&[&[5, 5], &[5, 2, 2, 2]]),
        ),
    ];
    for (label, got, want) in &checks {
        if got != want {
            return Err(format!("{label}: got {got:?}, want {want:?}"));
        }
    }
    Ok(format!("{} descent sets reproduced", checks.len()))
}

fn delta_table() -> Outcome {
    let mut checked = 0usize;
    for f in boxes(12) {
        let (d, w) = (f.d(), f.width());
        for mu in f.partitions(None) {
            let p = mu.parts();
            if p[d as usize] == w {
                continue;
            }
            let strict = p.windows(2).all(|x| x[0] > x[1]) && p[0] < w;
            let constant = p.iter().all(|&x| x == p[0]) && p[0] > 0;
            let row = p[0] == w && p[1..].iter().all(|&x| x == 0);
            let expected = if strict {
                Some(0)
            } else if constant {
                Some(d as i64)
            } else if row {
                Some(w as i64 - 1)
            } else {
                None
            };
            if let Some(e) = expected {
                if mu.delta() != e {
                    return Err(format!("delta({mu}) in {f} = {}, want {e}", mu.delta()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} table entries"))
}

fn th84_routes() -> Outcome {
    let mut cases = 0usize;
    for f in boxes(12) {
        let lists = sorted_lists(f.width(), f.cells() + f.width());
        for alpha in f.partitions(None) {
            let v = Variety::new(basis(&alpha)).map_err(err)?;
            for ell in &lists {
                check_th84(&v, ell).map_err(|e| format!("{alpha} in {f}, ell {ell:?}: {e}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (F, ell) cases, both routes agree"))
}

fn kunneth_convexity() -> Outcome {
    let mut supports = 0usize;
    for a in 1..=5u32 {
        for b in 1..=6 - a {
            let sp = ProductSpace::new(vec![a, b]).map_err(err)?;
            for k in 0..=a + b {
                let slab = sp.slab(k);
                for mask in 1u32..(1 << slab.len()) {
                    let chosen: Vec<&MultiDegree> = slab
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, m)| m)
                        .collect();
                    let class = MultiProjClass::from_terms(
                        sp.clone(),
                        chosen.iter().map(|m| ((*m).clone(), BigInt::from(1))),
                    )
                    .map_err(err)?;
                    if !support_admissible(&class).map_err(err)?.holds {
                        continue;
                    }
                    supports += 1;
                    let present: BTreeSet<&Vec<u32>> = chosen.iter().map(|m| &m.0).collect();
                    for p in &chosen {
                        for q in &chosen {
                            let sum: Vec<u32> = p.0.iter().zip(&q.0).map(|(x, y)| x + y).collect();
                            if sum.iter().any(|s| s % 2 == 1) {
                                continue;
                            }
                            let mid: Vec<u32> = sum.iter().map(|s| s / 2).collect();
                            if !present.contains(&mid) {
                                return Err(format!(
                                    "P^{a}xP^{b}: midpoint {mid:?} of {:?}, {:?} missing",
                                    p.0, q.0
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{supports} admissible supports are midpoint convex"))
}

fn run_bin(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .map_err(err)?;
    let mut bytes = out.status.code().unwrap_or(-1).to_string().into_bytes();
    bytes.extend(out.stdout);
    Ok(bytes)
}

/// Every command the fixture suite exercises, in a fixed order.
fn fixture_suite_output() -> Result<Vec<u8>, String> {
    let mut bytes = run_bin(&["fixtures", "--dir", "fixtures"])?;
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .map_err(err)?
        .map(|e| e.map(|e| e.path()).map_err(err))
        .collect::<Result<_, _>>()?;
    files.sort();
    for path in files {
        let text = std::fs::read_to_string(&path).map_err(err)?;
        let doc: Value = serde_json::from_str(&text).map_err(err)?;
        let Some(checks) = doc.get("checks").and_then(Value::as_array) else {
            continue;
        };
        let rel = format!("fixtures/{}", path.file_name().unwrap().to_string_lossy());
        for c in checks {
            let crit = c["criterion"].as_str().ok_or("criterion must be a string")?;
            bytes.extend(run_bin(&["check", "--criterion", crit, "--inputs", &rel])?);
        }
    }
    Ok(bytes)
}

fn determinism() -> Outcome {
    let first = fixture_suite_output()?;
    let second = fixture_suite_output()?;
    if first.is_empty() || first != second {
        return Err("outputs differ between runs".into());
    }
    let report = run_bin(&["fixtures", "--dir", "fixtures"])?;
    if !report.starts_with(b"0") {
        return Err("fixture replay reported a mismatch".into());
    }
    Ok(format!("{} identical bytes across two runs", first.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("pair nonvanishing", pair_nonvanishing),
        ("special product nonvanishing", special_product_nonvanishing),
        ("duality", duality),
        ("Hansen-type fixtures", hansen_fixtures),
        ("descent conditions for (5,2,2,1)", descent_examples),
        ("delta table", delta_table),
        ("th8.4 route agreement", th84_routes),
        ("Kunneth support convexity", kunneth_convexity),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    let mut stdout = std::io::stdout().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                format!("FAIL {:>2} {name}: {detail}", i + 1)
            }
        };
        writeln!(stdout, "{line}").unwrap();
    }
    writeln!(stdout, "{} passed, {failed} failed", criteria.len() - failed).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
