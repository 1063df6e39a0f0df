//! Acceptance suite: ten criteria, one pass/fail line each. Exits nonzero if
//! any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use mosaic_core::catalog::{enumerate_lattices, enumerate_ortholattices, named};
use mosaic_core::equivalence::{
    enumerate_dualizable_pairs, functor_e, generated_polygroup_check, is_orthomodular_mosaic, morphism_transfer_with,
    reconstruct_lattice, OrthoPair,
};
use mosaic_core::hyper::{is_associative, is_lmosaic, verify_mosaic};
use mosaic_core::io::{diff_tables, parse_table, parse_table_lenient, Anomaly, CellDiff, TableFile};
use mosaic_core::lattice::{check_om_equivalences, is_orthomodular, FiniteBoundedLattice};
use mosaic_core::nakano::{additive_nakano, multiplicative_nakano, verify_nakano, NakanoEquivalence};
use mosaic_core::ElemSet;

const PENTAGON_TABLE_BUDGET: Duration = Duration::from_secs(1);
const EQUIVALENCE_BUDGET: Duration = Duration::from_secs(60);
const NAKANO_CORPUS: usize = 6;
const ORTHO_CORPUS: usize = 8;
const MORPHISM_CORPUS: usize = 4;
const SEARCH_CORPUS: usize = 4;

type Outcome = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(l: &FiniteBoundedLattice, labels: &[&str]) -> ElemSet {
    labels.iter().map(|s| l.index_of(s).unwrap()).collect()
}

fn label_set(l: &FiniteBoundedLattice, s: ElemSet) -> String {
    format!("{{{}}}", s.iter().map(|x| l.name(x)).collect::<Vec<_>>().join(","))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_mosaic-lab"))
        .args(["table", "pentagon", "--additive", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let ours = parse_table(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
    let printed = parse_table(&read("printed_table1.json")).map_err(|e| e.to_string())?;
    let diffs = diff_tables(&ours, &printed).map_err(|e| e.to_string())?;
    let n = ours.elements.len();
    ensure(n == 5 && diffs.is_empty(), || format!("{} of {} cells differ", diffs.len(), n * n))?;
    ensure(elapsed < PENTAGON_TABLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("25/25 cells equal, {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let p = FiniteBoundedLattice::pentagon();
    let m = additive_nakano(&p);
    let r = is_associative(m.op());
    ensure(!r.holds, || "associativity holds".into())?;
    let w = r.witness_elements().ok_or("no witness")?;
    let (x, y, z) = (w[0], w[1], w[2]);
    let left = m.op().left(x, m.get(y, z));
    let right = m.op().right(m.get(x, y), z);
    let names = [p.name(x), p.name(y), p.name(z)];
    ensure(names == ["a", "b", "c"], || format!("witness {names:?}"))?;
    ensure(left == set(&p, &["c", "1"]) && right == set(&p, &["1"]), || {
        format!("{} vs {}", label_set(&p, left), label_set(&p, right))
    })?;
    Ok(format!("a+(b+c) = {} != {} = (a+b)+c", label_set(&p, left), label_set(&p, right)))
}

fn criterion_3() -> Outcome {
    let h = named("hexagon").unwrap();
    let (l, pi) = (h.lattice, h.ortho.unwrap());
    let lattice = is_orthomodular(&l, &pi).map_err(|e| e.to_string())?;
    let op = OrthoPair::new(l.clone(), pi.clone()).map_err(|e| e.to_string())?;
    let mosaic = is_orthomodular_mosaic(&functor_e(&op));
    ensure(!lattice.holds && !mosaic.holds, || "a side holds".into())?;
    for r in [&lattice, &mosaic] {
        let w = r.witness_elements().ok_or("no witness")?;
        let (x, y) = (w[0], w[1]);
        let value = l.join(x, l.meet(pi.apply(x), y));
        ensure(l.name(x) == "b" && l.name(y) == "a" && l.name(value) == "b", || {
            format!("{}: witness ({}, {}) gives {}", r.axiom, l.name(x), l.name(y), l.name(value))
        })?;
    }
    Ok("both sides fail at (b, a); b v (b' ^ a) = b".into())
}

fn corpus(max: usize) -> Vec<FiniteBoundedLattice> {
    (1..=max).flat_map(|n| enumerate_lattices(n).unwrap()).collect()
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let lattices = corpus(NAKANO_CORPUS);
    let mut modular = 0;
    for l in &lattices {
        let e = NakanoEquivalence::evaluate(l);
        ensure(e.agree(), || format!("exception: {e:?} on {:?}", l.covers()))?;
        modular += e.modular as usize;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < EQUIVALENCE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} lattices ({modular} modular), 0 exceptions, {elapsed:.2?}", lattices.len()))
}

fn criterion_5() -> Outcome {
    let lattices = corpus(NAKANO_CORPUS);
    for l in &lattices {
        for m in [additive_nakano(l), multiplicative_nakano(l)] {
            let reports = verify_nakano(&m);
            if let Some(r) = reports.iter().find(|r| !r.holds) {
                return Err(format!("{:?} mosaic of {:?}: {}", m.flavor(), l.covers(), r.describe(l.names())));
            }
        }
    }
    Ok(format!("{} mosaics pass", 2 * lattices.len()))
}

fn ortho_corpus(max: usize) -> Vec<OrthoPair> {
    (1..=max).flat_map(|n| enumerate_ortholattices(n).unwrap()).collect()
}

fn criterion_6() -> Outcome {
    let pairs = ortho_corpus(ORTHO_CORPUS);
    for op in &pairs {
        let e = functor_e(op);
        let back = reconstruct_lattice(&e).map_err(|err| err.to_string())?;
        let (a, b) = (op.lattice(), back.lattice());
        ensure(
            a.leq_matrix() == b.leq_matrix()
                && a.join_table() == b.join_table()
                && a.meet_table() == b.meet_table()
                && op.pi() == back.pi(),
            || format!("round trip differs on {:?}", a.covers()),
        )?;
        ensure(functor_e(&back) == e, || format!("E(reconstruct) differs on {:?}", a.covers()))?;
    }
    let found: Vec<_> = (1..=SEARCH_CORPUS).flat_map(enumerate_dualizable_pairs).collect();
    for p in &found {
        let back = reconstruct_lattice(p).map_err(|e| e.to_string())?;
        ensure(functor_e(&back).mosaic() == p.mosaic(), || "searched pair not reproduced".into())?;
    }
    Ok(format!("{} ortholattices and {} searched mosaics round-trip", pairs.len(), found.len()))
}

fn criterion_7() -> Outcome {
    let pairs = ortho_corpus(ORTHO_CORPUS);
    let mut om = 0;
    for op in &pairs {
        let mut verdicts: Vec<bool> = check_om_equivalences(op.lattice(), op.pi())
            .map_err(|e| e.to_string())?
            .iter()
            .map(|r| r.holds)
            .collect();
        verdicts.push(is_orthomodular_mosaic(&functor_e(op)).holds);
        ensure(verdicts.iter().all(|&v| v == verdicts[0]), || {
            format!("OM1..OM4, mosaic = {verdicts:?} on {:?}", op.lattice().covers())
        })?;
        om += verdicts[0] as usize;
    }
    Ok(format!("{} ortholattices ({om} orthomodular), 0 exceptions", pairs.len()))
}

fn criterion_8() -> Outcome {
    let pairs = ortho_corpus(MORPHISM_CORPUS);
    let mosaics: Vec<_> = pairs.iter().map(|op| additive_nakano(op.lattice()).mosaic().clone()).collect();
    let (mut maps, mut arrows) = (0, 0);
    for (i, src) in pairs.iter().enumerate() {
        for (j, dst) in pairs.iter().enumerate() {
            let (n, k) = (src.lattice().size(), dst.lattice().size());
            for code in 0..k.pow(n as u32) {
                let f: Vec<usize> = (0..n).map(|x| code / k.pow(x as u32) % k).collect();
                let t = morphism_transfer_with(&f, src, dst, &mosaics[i], &mosaics[j]);
                ensure(t.ort_arrow() == t.lmosaic_arrow(), || format!("map {f:?}: {t:?}"))?;
                maps += 1;
                arrows += t.ort_arrow() as usize;
            }
        }
    }
    Ok(format!("{maps} maps between {} ortholattices, {arrows} arrows on both sides", pairs.len()))
}

#[derive(serde::Deserialize)]
struct FrozenDiff {
    recomputed: String,
    printed: String,
    anomalies: Vec<Anomaly>,
    diffs: Vec<CellDiff>,
    printed_failures: Vec<String>,
}

fn criterion_9() -> Outcome {
    let cases: [(&str, TableFile); 3] = [
        ("diff_table1.json", table_of("pentagon", false)),
        ("diff_table2.json", table_of("pentagon", true)),
        ("diff_table3.json", table_of("hexagon", false)),
    ];
    let mut total = 0;
    for (file, ours) in cases {
        let frozen: FrozenDiff = serde_json::from_str(&read(file)).map_err(|e| e.to_string())?;
        let golden = parse_table(&read(&frozen.recomputed)).map_err(|e| e.to_string())?;
        ensure(golden.op == ours.op && golden.elements == ours.elements, || format!("{} is stale", frozen.recomputed))?;
        let v = verify_mosaic(&ours.op);
        ensure(v.holds() && v.mosaic.as_ref().is_some_and(is_lmosaic), || format!("{file}: recomputed fails"))?;
        let (printed, anomalies) = parse_table_lenient(&read(&frozen.printed)).map_err(|e| e.to_string())?;
        let diffs = diff_tables(&ours, &printed).map_err(|e| e.to_string())?;
        ensure(diffs == frozen.diffs, || format!("{file}: diff set changed"))?;
        ensure(anomalies == frozen.anomalies, || format!("{file}: anomalies changed"))?;
        let failing: Vec<String> =
            verify_mosaic(&printed.op).reports.into_iter().filter(|r| !r.holds).map(|r| r.axiom).collect();
        ensure(failing == frozen.printed_failures, || format!("{file}: printed table fails {failing:?}"))?;
        total += diffs.len();
    }
    Ok(format!("pentagon additive exact; {total} frozen discrepancies reproduced"))
}

fn table_of(name: &str, multiplicative: bool) -> TableFile {
    let l = named(name).unwrap().lattice;
    let m = if multiplicative { multiplicative_nakano(&l) } else { additive_nakano(&l) };
    TableFile::new(name, l.names().to_vec(), m.mosaic().neutral(), m.op().clone())
}

fn criterion_10() -> Outcome {
    let mut entries = ortho_corpus(ORTHO_CORPUS);
    for name in ["boolean_3", "MO_2", "MO_3", "chain_2"] {
        let e = named(name).unwrap();
        entries.push(OrthoPair::new(e.lattice, e.ortho.unwrap()).unwrap());
    }
    let (mut structures, mut checked) = (0, 0);
    for op in &entries {
        let e = functor_e(op);
        if !is_orthomodular_mosaic(&e).holds {
            continue;
        }
        structures += 1;
        let n = op.lattice().size();
        for x in 0..n {
            for y in 0..n {
                let g = generated_polygroup_check(&e, x, y).map_err(|err| err.to_string())?;
                ensure(g.holds(), || format!("({x}, {y}) on {:?}: {}", op.lattice().covers(), g.report()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{structures} orthomodular structures, {checked} pairs: modular and associative"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("pentagon additive table", criterion_1),
        ("non-associativity witness", criterion_2),
        ("hexagon non-orthomodularity", criterion_3),
        ("Nakano equivalence", criterion_4),
        ("Nakano mosaics are L-mosaics", criterion_5),
        ("round trip", criterion_6),
        ("OM equivalences", criterion_7),
        ("morphism transfer", criterion_8),
        ("printed table diffs", criterion_9),
        ("generated polygroups", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
