use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use mosaic_core::catalog::{self, enumerate_lattices};
use mosaic_core::equivalence::{functor_e, is_orthomodular_mosaic, reconstruct_lattice, top_consistency, OrthoPair};
use mosaic_core::hyper::{is_associative, is_reproductive, verify_lmosaic, verify_mosaic};
use mosaic_core::io::{
    diff_tables, lattice_to_json, parse_lattice, parse_table_lenient, render_ascii, table_to_json, LatticeFile,
    TableFile,
};
use mosaic_core::lattice::{
    is_modular, is_orthomodular, orthocomplementation_reports, orthocomplementations, FiniteBoundedLattice,
    Involution,
};
use mosaic_core::nakano::{
    additive_nakano, multiplicative_nakano, nakano_properties, NakanoEquivalence, NakanoMosaic,
};
use mosaic_core::report::{all_hold, AxiomReport};

use crate::Format;

pub const OK: u8 = 0;
pub const CHECK_FAILED: u8 = 1;
pub const INPUT_ERROR: u8 = 3;
pub const MISSING_ORTHO: u8 = 4;
pub const DIFF_FOUND: u8 = 5;

pub struct CommandResult {
    pub exit_code: u8,
    pub text: String,
    pub json: Option<String>,
    pub error: Option<String>,
}

impl CommandResult {
    fn done(exit_code: u8, text: String, json: Value) -> Self {
        CommandResult { exit_code, text, json: Some(json.to_string()), error: None }
    }

    fn fail(exit_code: u8, error: impl Into<String>) -> Self {
        let error = error.into();
        CommandResult {
            exit_code,
            text: String::new(),
            json: Some(json!({ "error": error, "exit_code": exit_code }).to_string()),
            error: Some(error),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    All,
    Mosaic,
    Lmosaic,
    Polygroup,
    Modular,
    Ortholattice,
    Orthomodular,
    Roundtrip,
    NakanoProps,
}

impl CheckKind {
    const EACH: [CheckKind; 8] = [
        CheckKind::Mosaic,
        CheckKind::Lmosaic,
        CheckKind::Polygroup,
        CheckKind::Modular,
        CheckKind::Ortholattice,
        CheckKind::Orthomodular,
        CheckKind::Roundtrip,
        CheckKind::NakanoProps,
    ];

    fn label(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default()
    }
}

fn load(input: &str) -> Result<LatticeFile, CommandResult> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CommandResult::fail(INPUT_ERROR, format!("{input}: {e}")))?;
        return parse_lattice(&text).map_err(|e| CommandResult::fail(INPUT_ERROR, format!("{input}: {e}")));
    }
    catalog::named(input)
        .map(LatticeFile::from)
        .map_err(|_| CommandResult::fail(INPUT_ERROR, format!("`{input}` is neither a file nor a catalog name")))
}

/// The ortho block of the file, else the first orthocomplementation found.
fn resolve_ortho(file: &LatticeFile) -> Result<Option<OrthoPair>, CommandResult> {
    match &file.ortho {
        Some(pi) => OrthoPair::new(file.lattice.clone(), pi.clone())
            .map(Some)
            .map_err(|e| CommandResult::fail(INPUT_ERROR, format!("ortho block: {e}"))),
        None => Ok(orthocomplementations(&file.lattice)
            .into_iter()
            .next()
            .map(|pi| OrthoPair::new(file.lattice.clone(), pi).expect("search returns orthocomplementations"))),
    }
}

fn pairs(l: &FiniteBoundedLattice, pi: &Involution) -> Vec<(String, String)> {
    l.elements()
        .filter(|&x| x <= pi.apply(x))
        .map(|x| (l.name(x).to_owned(), l.name(pi.apply(x)).to_owned()))
        .collect()
}

fn pairs_text(l: &FiniteBoundedLattice, pi: &Involution) -> String {
    pairs(l, pi).iter().map(|(a, b)| format!("{a}<->{b}")).collect::<Vec<_>>().join(", ")
}

fn report_json(r: &AxiomReport, names: &[String]) -> Value {
    json!({
        "axiom": r.axiom,
        "holds": r.holds,
        "witness": r.witness.as_ref().map(|w| json!({
            "elements": w.elements.iter().map(|&x| names[x].clone()).collect::<Vec<_>>(),
            "reason": w.reason,
        })),
    })
}

fn report_lines(out: &mut String, reports: &[AxiomReport], names: &[String]) {
    for r in reports {
        let tag = if r.holds { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "  {tag} {}", r.describe(names));
    }
}

pub fn validate(input: &str) -> CommandResult {
    let file = match load(input) {
        Ok(f) => f,
        Err(e) => return e,
    };
    let l = &file.lattice;
    let names = l.names();
    let mut text = format!(
        "{}: bounded lattice with {} elements, bottom {}, top {}\n",
        file.name,
        l.size(),
        l.name(l.bottom()),
        l.name(l.top())
    );
    let reports = file.ortho.as_ref().map(|pi| orthocomplementation_reports(l, pi)).unwrap_or_default();
    if !reports.is_empty() {
        text.push_str("ortho block:\n");
        report_lines(&mut text, &reports, names);
    }
    let holds = all_hold(&reports);
    let json = json!({
        "name": file.name,
        "elements": names,
        "valid": holds,
        "ortho": reports.iter().map(|r| report_json(r, names)).collect::<Vec<_>>(),
    });
    CommandResult::done(if holds { OK } else { CHECK_FAILED }, text, json)
}

fn build_table(l: &FiniteBoundedLattice, multiplicative: bool) -> NakanoMosaic {
    if multiplicative {
        multiplicative_nakano(l)
    } else {
        additive_nakano(l)
    }
}

/// Elements order, with the bounds exchanged for the multiplicative table so
/// that the neutral element comes first.
fn display_order(l: &FiniteBoundedLattice, multiplicative: bool) -> Vec<usize> {
    l.elements()
        .map(|x| match x {
            x if multiplicative && x == l.bottom() => l.top(),
            x if multiplicative && x == l.top() => l.bottom(),
            x => x,
        })
        .collect()
}

pub fn table(
    input: &str,
    multiplicative: bool,
    diff: Option<&Path>,
    golden: Option<&Path>,
    format: Format,
) -> CommandResult {
    let file = match load(input) {
        Ok(f) => f,
        Err(e) => return e,
    };
    let l = &file.lattice;
    let m = build_table(l, multiplicative);
    let flavor = if multiplicative { "multiplicative" } else { "additive" };
    let table = TableFile::new(format!("{} {flavor}", file.name), l.names().to_vec(), m.mosaic().neutral(), m.op().clone());
    let json = table_to_json(&table);
    if let Some(path) = golden {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            return CommandResult::fail(INPUT_ERROR, format!("{}: {e}", path.display()));
        }
    }
    let grid = render_ascii(m.op(), l.names(), &display_order(l, multiplicative), m.flavor().symbol());
    let Some(path) = diff else {
        return CommandResult { exit_code: OK, text: grid, json: Some(json), error: None };
    };

    let other = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return CommandResult::fail(INPUT_ERROR, format!("{}: {e}", path.display())),
    };
    let (printed, anomalies) = match parse_table_lenient(&other) {
        Ok(p) => p,
        Err(e) => return CommandResult::fail(INPUT_ERROR, format!("{}: {e}", path.display())),
    };
    let diffs = match diff_tables(&table, &printed) {
        Ok(d) => d,
        Err(e) => return CommandResult::fail(INPUT_ERROR, format!("{}: {e}", path.display())),
    };
    let axioms = verify_mosaic(&printed.op).reports;
    let mut text = if format == Format::Ascii { grid } else { String::new() };
    let _ = writeln!(text, "diff against {}: {} cell(s) differ", path.display(), diffs.len());
    for a in &anomalies {
        let _ = writeln!(text, "  note ({}, {}): {:?} `{}`", a.row, a.column, a.kind, a.label);
    }
    for d in &diffs {
        let _ = writeln!(text, "  ({}, {}): expected {{{}}}, found {{{}}}", d.row, d.column, d.expected.join(","), d.actual.join(","));
    }
    text.push_str("compared table:\n");
    report_lines(&mut text, &axioms, &printed.elements);
    let code = if diffs.is_empty() && anomalies.is_empty() { OK } else { DIFF_FOUND };
    let json = json!({
        "table": table.name,
        "compared": printed.name,
        "anomalies": anomalies,
        "diffs": diffs,
        "compared_axioms": axioms.iter().map(|r| report_json(r, &printed.elements)).collect::<Vec<_>>(),
    });
    CommandResult::done(code, text, json)
}

pub fn check(input: &str, kinds: &[CheckKind]) -> CommandResult {
    let file = match load(input) {
        Ok(f) => f,
        Err(e) => return e,
    };
    let l = &file.lattice;
    let names = l.names();
    let explicit = !kinds.contains(&CheckKind::All);
    let kinds: Vec<CheckKind> = if explicit { kinds.to_vec() } else { CheckKind::EACH.to_vec() };
    let ortho = match resolve_ortho(&file) {
        Ok(o) => o,
        Err(e) => return e,
    };
    let add = additive_nakano(l);
    let mul = multiplicative_nakano(l);

    let mut text = String::new();
    let mut groups = Vec::new();
    let mut holds = true;
    for kind in kinds {
        let needs_ortho = matches!(kind, CheckKind::Orthomodular | CheckKind::Roundtrip);
        let reports: Vec<AxiomReport> = match (kind, &ortho) {
            (_, None) if needs_ortho && explicit => {
                return CommandResult::fail(MISSING_ORTHO, format!("{}: no ortho block and no orthocomplementation", kind.label()));
            }
            (_, None) if needs_ortho => {
                let _ = writeln!(text, "[{}] skipped: no orthocomplementation", kind.label());
                groups.push(json!({ "check": kind.label(), "skipped": true, "reports": [] }));
                continue;
            }
            (CheckKind::Mosaic, _) => {
                let mut r = tag(verify_mosaic(add.op()).reports, "+");
                r.extend(tag(verify_mosaic(mul.op()).reports, "."));
                r
            }
            (CheckKind::Lmosaic, _) => {
                let mut r = tag(verify_lmosaic(add.mosaic()), "+");
                r.push(tag(vec![is_reproductive(add.op())], "+").remove(0));
                r.extend(tag(verify_lmosaic(mul.mosaic()), "."));
                r.push(tag(vec![is_reproductive(mul.op())], ".").remove(0));
                r
            }
            (CheckKind::Polygroup, _) => {
                tag(vec![is_associative(add.op())], "+").into_iter().chain(tag(vec![is_associative(mul.op())], ".")).collect()
            }
            (CheckKind::Modular, _) => vec![is_modular(l)],
            (CheckKind::Ortholattice, Some(op)) => orthocomplementation_reports(l, op.pi()),
            (CheckKind::Ortholattice, None) => vec![AxiomReport::fail("orthocomplementation", vec![], "none exists")],
            (CheckKind::Orthomodular, Some(op)) => {
                let e = functor_e(op);
                vec![
                    is_orthomodular(l, op.pi()).expect("validated orthocomplementation"),
                    is_orthomodular_mosaic(&e),
                    top_consistency(&e),
                ]
            }
            (CheckKind::Roundtrip, Some(op)) => roundtrip_reports(op),
            (CheckKind::NakanoProps, _) => {
                let mut r = tag(nakano_properties(&add), "+");
                r.extend(tag(nakano_properties(&mul), "."));
                r.push(NakanoEquivalence::evaluate(l).report());
                r
            }
            (CheckKind::All, _) | (CheckKind::Orthomodular | CheckKind::Roundtrip, None) => unreachable!(),
        };
        let ok = all_hold(&reports);
        holds &= ok;
        let _ = writeln!(text, "[{}] {}", kind.label(), if ok { "pass" } else { "FAIL" });
        report_lines(&mut text, &reports, names);
        groups.push(json!({
            "check": kind.label(),
            "holds": ok,
            "reports": reports.iter().map(|r| report_json(r, names)).collect::<Vec<_>>(),
        }));
    }
    if let Some(op) = &ortho {
        if file.ortho.is_none() {
            let _ = writeln!(text, "(using discovered orthocomplementation {})", pairs_text(l, op.pi()));
        }
    }
    let json = json!({ "name": file.name, "holds": holds, "checks": groups });
    CommandResult::done(if holds { OK } else { CHECK_FAILED }, text, json)
}

fn tag(reports: Vec<AxiomReport>, symbol: &str) -> Vec<AxiomReport> {
    reports.into_iter().map(|r| AxiomReport { axiom: format!("{} ({symbol})", r.axiom), ..r }).collect()
}

fn roundtrip_reports(op: &OrthoPair) -> Vec<AxiomReport> {
    let e = functor_e(op);
    let back = match reconstruct_lattice(&e) {
        Ok(b) => b,
        Err(err) => return vec![AxiomReport::fail("reconstruction", vec![], err.to_string())],
    };
    let (l, m) = (op.lattice(), back.lattice());
    let same = |name: &str, eq: bool| {
        if eq {
            AxiomReport::pass(name)
        } else {
            AxiomReport::fail(name, vec![], "tables differ")
        }
    };
    vec![
        AxiomReport::pass("reconstruction"),
        same("same order", l.leq_matrix() == m.leq_matrix()),
        same("same join", l.join_table() == m.join_table()),
        same("same meet", l.meet_table() == m.meet_table()),
        same("same pi", op.pi() == back.pi()),
        same("mosaic reproduced", functor_e(&back).mosaic() == e.mosaic()),
    ]
}

pub fn orthocomplements(input: &str) -> CommandResult {
    let file = match load(input) {
        Ok(f) => f,
        Err(e) => return e,
    };
    let l = &file.lattice;
    let all = orthocomplementations(l);
    let mut text = format!("{}: {} orthocomplementation(s)\n", file.name, all.len());
    for pi in &all {
        let om = is_orthomodular(l, pi).map(|r| r.holds).unwrap_or(false);
        let _ = writeln!(text, "  {}{}", pairs_text(l, pi), if om { "  (orthomodular)" } else { "" });
    }
    let json = json!({
        "name": file.name,
        "orthocomplementations": all.iter().map(|pi| json!({
            "pairs": pairs(l, pi),
            "orthomodular": is_orthomodular(l, pi).map(|r| r.holds).unwrap_or(false),
        })).collect::<Vec<_>>(),
    });
    CommandResult::done(if all.is_empty() { CHECK_FAILED } else { OK }, text, json)
}

pub fn roundtrip(input: &str) -> CommandResult {
    let file = match load(input) {
        Ok(f) => f,
        Err(e) => return e,
    };
    let op = match resolve_ortho(&file) {
        Ok(Some(op)) => op,
        Ok(None) => return CommandResult::fail(MISSING_ORTHO, "no ortho block and no orthocomplementation"),
        Err(e) => return e,
    };
    let reports = roundtrip_reports(&op);
    let names = op.lattice().names();
    let mut text = format!("{} with pi = {}\n", file.name, pairs_text(op.lattice(), op.pi()));
    report_lines(&mut text, &reports, names);
    let holds = all_hold(&reports);
    let json = json!({
        "name": file.name,
        "holds": holds,
        "reports": reports.iter().map(|r| report_json(r, names)).collect::<Vec<_>>(),
    });
    CommandResult::done(if holds { OK } else { CHECK_FAILED }, text, json)
}

pub fn export(name: &str, out: Option<&Path>) -> CommandResult {
    let entry = match catalog::named(name) {
        Ok(e) => e,
        Err(e) => return CommandResult::fail(INPUT_ERROR, e.to_string()),
    };
    let json = lattice_to_json(&LatticeFile::from(entry));
    match out {
        Some(path) => match std::fs::write(path, format!("{json}\n")) {
            Ok(()) => CommandResult {
                exit_code: OK,
                text: format!("wrote {}\n", path.display()),
                json: Some(json!({ "written": path.display().to_string() }).to_string()),
                error: None,
            },
            Err(e) => CommandResult::fail(INPUT_ERROR, format!("{}: {e}", path.display())),
        },
        None => CommandResult { exit_code: OK, text: format!("{json}\n"), json: Some(json), error: None },
    }
}

pub fn census(n: usize) -> CommandResult {
    let lattices = match enumerate_lattices(n) {
        Ok(l) => l,
        Err(e) => return CommandResult::fail(INPUT_ERROR, e.to_string()),
    };
    let mut rows = Vec::new();
    let mut text = format!("{:>3}  {:<8} {:<7} {:<8} covers\n", "#", "modular", "ortho", "orthomod");
    let (mut modular, mut ortho, mut om) = (0, 0, 0);
    for (i, l) in lattices.iter().enumerate() {
        let pis = orthocomplementations(l);
        let is_mod = is_modular(l).holds;
        let is_om = pis.iter().any(|pi| is_orthomodular(l, pi).map(|r| r.holds).unwrap_or(false));
        modular += is_mod as usize;
        ortho += !pis.is_empty() as usize;
        om += is_om as usize;
        let covers: Vec<(String, String)> =
            l.covers().into_iter().map(|(a, b)| (l.name(a).to_owned(), l.name(b).to_owned())).collect();
        let cover_text = covers.iter().map(|(a, b)| format!("{a}<{b}")).collect::<Vec<_>>().join(" ");
        let _ = writeln!(text, "{:>3}  {:<8} {:<7} {:<8} {cover_text}", i + 1, is_mod, pis.len(), is_om);
        rows.push(json!({
            "index": i + 1,
            "elements": l.names(),
            "covers": covers,
            "modular": is_mod,
            "orthocomplementations": pis.len(),
            "orthomodular": is_om,
        }));
    }
    let _ = writeln!(
        text,
        "{} lattice(s) with {n} elements: {modular} modular, {ortho} with an orthocomplementation, {om} orthomodular",
        lattices.len()
    );
    let json = json!({
        "n": n,
        "count": lattices.len(),
        "modular": modular,
        "ortholattices": ortho,
        "orthomodular": om,
        "lattices": rows,
    });
    CommandResult::done(OK, text, json)
}
