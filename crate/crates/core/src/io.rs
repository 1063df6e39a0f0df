//! JSON file formats for lattices and multioperation tables, a lenient reader
//! for hand-transcribed tables, cell-level diffs and the ASCII grid renderer.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::hyper::Multioperation;
use crate::lattice::{FiniteBoundedLattice, Involution, LatticeError};
use crate::set::ElemSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Invalid { line: Option<usize>, message: String },
}

impl IoError {
    fn invalid(text: &str, needle: Option<&str>, message: impl Into<String>) -> Self {
        let line = needle.and_then(|label| locate(text, label));
        IoError::Invalid { line, message: message.into() }
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

/// 1-based line of the first quoted occurrence of `label`.
fn locate(text: &str, label: &str) -> Option<usize> {
    let quoted = serde_json::to_string(label).ok()?;
    text.lines().position(|l| l.contains(&quoted)).map(|i| i + 1)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeJson {
    name: String,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ortho: Option<Vec<(String, String)>>,
}

/// A lattice file: a named lattice with an optional involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFile {
    pub name: String,
    pub lattice: FiniteBoundedLattice,
    pub ortho: Option<Involution>,
}

impl From<CatalogEntry> for LatticeFile {
    fn from(e: CatalogEntry) -> Self {
        LatticeFile { name: e.name, lattice: e.lattice, ortho: e.ortho }
    }
}

pub fn parse_lattice(text: &str) -> Result<LatticeFile, IoError> {
    let raw: LatticeJson = serde_json::from_str(text)?;
    let lattice = FiniteBoundedLattice::build_from_covers(&raw.elements, &raw.covers).map_err(|e| {
        let needle = match &e {
            LatticeError::UnknownLabel(l) | LatticeError::DuplicateLabel(l) => Some(l.clone()),
            LatticeError::CyclicCovers(a, _) | LatticeError::NotALattice(a, _, _) => Some(a.clone()),
            _ => None,
        };
        IoError::invalid(text, needle.as_deref(), e.to_string())
    })?;
    let ortho = match raw.ortho {
        None => None,
        Some(pairs) => Some(parse_involution(text, &lattice, &pairs)?),
    };
    Ok(LatticeFile { name: raw.name, lattice, ortho })
}

fn parse_involution(
    text: &str,
    l: &FiniteBoundedLattice,
    pairs: &[(String, String)],
) -> Result<Involution, IoError> {
    let mut map = vec![None; l.size()];
    for (a, b) in pairs {
        let idx = |label: &String| {
            l.index_of(label)
                .ok_or_else(|| IoError::invalid(text, Some(label), format!("unknown element `{label}` in ortho")))
        };
        let (x, y) = (idx(a)?, idx(b)?);
        for (u, v) in [(x, y), (y, x)] {
            match map[u] {
                Some(w) if w != v => {
                    return Err(IoError::invalid(text, Some(a), format!("ortho assigns `{}` twice", l.name(u))))
                }
                _ => map[u] = Some(v),
            }
        }
    }
    let map: Option<Vec<usize>> = map.into_iter().collect();
    let map = map.ok_or_else(|| IoError::invalid(text, None, "ortho does not cover every element"))?;
    Involution::new(map).map_err(|e| IoError::invalid(text, None, e.to_string()))
}

pub fn lattice_to_json(file: &LatticeFile) -> String {
    let l = &file.lattice;
    let raw = LatticeJson {
        name: file.name.clone(),
        elements: l.names().to_vec(),
        covers: l.covers().into_iter().map(|(a, b)| (l.name(a).to_owned(), l.name(b).to_owned())).collect(),
        ortho: file.ortho.as_ref().map(|pi| {
            l.elements()
                .filter(|&x| x <= pi.apply(x))
                .map(|x| (l.name(x).to_owned(), l.name(pi.apply(x)).to_owned()))
                .collect()
        }),
    };
    serde_json::to_string_pretty(&raw).expect("lattice serializes")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
    elements: Vec<String>,
    neutral: String,
    /// Row and column label order of `table`; default is `elements`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    columns: Option<Vec<String>>,
    table: Vec<Vec<Vec<String>>>,
}

/// A named multioperation table over labeled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub name: String,
    pub provenance: Option<String>,
    pub elements: Vec<String>,
    pub neutral: usize,
    pub op: Multioperation,
}

impl TableFile {
    pub fn new(name: impl Into<String>, elements: Vec<String>, neutral: usize, op: Multioperation) -> Self {
        TableFile { name: name.into(), provenance: None, elements, neutral, op }
    }
}

/// Something the lenient reader had to repair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    pub row: String,
    pub column: String,
    pub kind: AnomalyKind,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    /// A label that is not an element; dropped.
    UnknownLabel,
    /// A label listed twice in one cell; merged.
    DuplicateLabel,
}

/// Strict reader: every label must be an element and cells may not repeat labels.
pub fn parse_table(text: &str) -> Result<TableFile, IoError> {
    let (file, anomalies) = read_table(text)?;
    match anomalies.first() {
        None => Ok(file),
        Some(a) => Err(IoError::invalid(
            text,
            Some(&a.label),
            match a.kind {
                AnomalyKind::UnknownLabel => format!("unknown element `{}` in cell ({}, {})", a.label, a.row, a.column),
                AnomalyKind::DuplicateLabel => format!("`{}` repeated in cell ({}, {})", a.label, a.row, a.column),
            },
        )),
    }
}

/// Lenient reader for transcriptions: unknown labels are dropped and repeated
/// labels merged, and each repair is reported.
pub fn parse_table_lenient(text: &str) -> Result<(TableFile, Vec<Anomaly>), IoError> {
    read_table(text)
}

fn read_table(text: &str) -> Result<(TableFile, Vec<Anomaly>), IoError> {
    let raw: TableJson = serde_json::from_str(text)?;
    let n = raw.elements.len();
    if n == 0 || n > crate::set::MAX_ELEMENTS {
        return Err(IoError::invalid(text, None, format!("{n} elements is out of range")));
    }
    let mut index = HashMap::new();
    for (i, e) in raw.elements.iter().enumerate() {
        if index.insert(e.as_str(), i).is_some() {
            return Err(IoError::invalid(text, Some(e), format!("duplicate element `{e}`")));
        }
    }
    let lookup = |label: &str| {
        index.get(label).copied().ok_or_else(|| IoError::invalid(text, Some(label), format!("unknown element `{label}`")))
    };
    let order = |labels: &Option<Vec<String>>, what: &str| -> Result<Vec<usize>, IoError> {
        let Some(labels) = labels else { return Ok((0..n).collect()) };
        let idx = labels.iter().map(|l| lookup(l)).collect::<Result<Vec<_>, _>>()?;
        if idx.iter().collect::<BTreeSet<_>>().len() != n || idx.len() != n {
            return Err(IoError::invalid(text, None, format!("{what} must list every element once")));
        }
        Ok(idx)
    };
    let rows = order(&raw.rows, "rows")?;
    let cols = order(&raw.columns, "columns")?;
    let neutral = lookup(&raw.neutral)?;
    if raw.table.len() != n || raw.table.iter().any(|r| r.len() != n) {
        return Err(IoError::invalid(text, None, format!("table must be {n} by {n}")));
    }
    let mut op = Multioperation::from_fn(n, |_, _| ElemSet::EMPTY);
    let mut anomalies = Vec::new();
    for (i, row) in raw.table.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let (x, y) = (rows[i], cols[j]);
            let mut set = ElemSet::EMPTY;
            for label in cell {
                let anomaly = |kind| Anomaly {
                    row: raw.elements[x].clone(),
                    column: raw.elements[y].clone(),
                    kind,
                    label: label.clone(),
                };
                match index.get(label.as_str()) {
                    None => anomalies.push(anomaly(AnomalyKind::UnknownLabel)),
                    Some(&z) if set.contains(z) => anomalies.push(anomaly(AnomalyKind::DuplicateLabel)),
                    Some(&z) => set.insert(z),
                }
            }
            op.set(x, y, set);
        }
    }
    let file = TableFile { name: raw.name, provenance: raw.provenance, elements: raw.elements, neutral, op };
    Ok((file, anomalies))
}

pub fn table_to_json(file: &TableFile) -> String {
    let names = &file.elements;
    let n = names.len();
    let raw = TableJson {
        name: file.name.clone(),
        provenance: file.provenance.clone(),
        elements: names.clone(),
        neutral: names[file.neutral].clone(),
        rows: None,
        columns: None,
        table: (0..n)
            .map(|x| (0..n).map(|y| file.op.get(x, y).iter().map(|z| names[z].clone()).collect()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("table serializes")
}

/// One cell where two tables over the same labels disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDiff {
    pub row: String,
    pub column: String,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
}

/// Cells of `actual` that differ from `expected`, in `expected`'s row-major
/// order. Both tables must have the same element labels.
pub fn diff_tables(expected: &TableFile, actual: &TableFile) -> Result<Vec<CellDiff>, IoError> {
    let a_index: HashMap<&str, usize> = actual.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    let same = expected.elements.len() == actual.elements.len()
        && expected.elements.iter().all(|e| a_index.contains_key(e.as_str()));
    if !same {
        return Err(IoError::Invalid { line: None, message: "tables have different elements".into() });
    }
    let to_actual: Vec<usize> = expected.elements.iter().map(|e| a_index[e.as_str()]).collect();
    let mut from_actual = vec![0; to_actual.len()];
    for (x, &ax) in to_actual.iter().enumerate() {
        from_actual[ax] = x;
    }
    let labels = |set: ElemSet, names: &[String]| set.iter().map(|z| names[z].clone()).collect::<Vec<_>>();
    let n = expected.elements.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let e = expected.op.get(x, y);
            let a_mapped = actual.op.get(to_actual[x], to_actual[y]).map(|z| from_actual[z]);
            if e != a_mapped {
                out.push(CellDiff {
                    row: expected.elements[x].clone(),
                    column: expected.elements[y].clone(),
                    expected: labels(e, &expected.elements),
                    actual: labels(a_mapped, &expected.elements),
                });
            }
        }
    }
    Ok(out)
}

/// Grid with a corner symbol, a header row and one row per element, rows and
/// columns (and the members of each cell) listed in `order`.
pub fn render_ascii(op: &Multioperation, names: &[String], order: &[usize], symbol: &str) -> String {
    let position: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let cell = |x: usize, y: usize| {
        let mut members: Vec<usize> = op.get(x, y).iter().collect();
        members.sort_by_key(|z| position[z]);
        format!("{{{}}}", members.iter().map(|&z| names[z].as_str()).collect::<Vec<_>>().join(","))
    };
    let mut grid: Vec<Vec<String>> = vec![std::iter::once(symbol.to_owned())
        .chain(order.iter().map(|&y| names[y].clone()))
        .collect()];
    for &x in order {
        grid.push(std::iter::once(names[x].clone()).chain(order.iter().map(|&y| cell(x, y))).collect());
    }
    let widths: Vec<usize> = (0..=order.len())
        .map(|j| grid.iter().map(|row| row[j].chars().count()).max().unwrap_or(0))
        .collect();
    let rule = format!("+{}+\n", widths.iter().map(|w| "-".repeat(w + 2)).collect::<Vec<_>>().join("+"));
    let mut out = rule.clone();
    for (i, row) in grid.iter().enumerate() {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!(" {c:<w$} ")).collect();
        out.push_str(&format!("|{}|\n", cells.join("|")));
        if i == 0 {
            out.push_str(&rule);
        }
    }
    out.push_str(&rule);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;
    use crate::nakano::additive_nakano;

    const PENTAGON: &str = r#"{
  "name": "pentagon",
  "elements": ["0", "a", "b", "c", "1"],
  "covers": [["0", "b"], ["b", "a"], ["a", "1"], ["0", "c"], ["c", "1"]]
}"#;

    #[test]
    fn lattice_round_trip() {
        let f = parse_lattice(PENTAGON).unwrap();
        assert_eq!(f.lattice, FiniteBoundedLattice::pentagon());
        assert_eq!(parse_lattice(&lattice_to_json(&f)).unwrap(), f);
        for name in ["hexagon", "boolean_3", "MO_2", "chain_1", "diamond_M3"] {
            let f = LatticeFile::from(named(name).unwrap());
            assert_eq!(parse_lattice(&lattice_to_json(&f)).unwrap(), f, "{name}");
        }
    }

    #[test]
    fn lattice_errors_carry_lines() {
        let bad = PENTAGON.replace(r#"["c", "1"]"#, r#"["c", "z"]"#);
        match parse_lattice(&bad) {
            Err(IoError::Invalid { line: Some(4), message }) => assert!(message.contains('z'), "{message}"),
            other => panic!("{other:?}"),
        }
        let syntax = PENTAGON.replace("\"covers\"", "covers");
        assert!(matches!(parse_lattice(&syntax), Err(IoError::Syntax { line: 4, .. })));
        let extra = PENTAGON.replace("\"name\"", "\"nmae\"");
        assert!(matches!(parse_lattice(&extra), Err(IoError::Syntax { .. })));
    }

    #[test]
    fn ortho_blocks() {
        let h = LatticeFile::from(named("hexagon").unwrap());
        let text = lattice_to_json(&h);
        assert!(text.contains("\"ortho\""));
        let conflicting = text.replacen("\"b'\"\n    ]", "\"a'\"\n    ]", 1);
        assert_ne!(conflicting, text);
        assert!(parse_lattice(&conflicting).is_err());
        let partial = r#"{"name": "c2", "elements": ["0", "1"], "covers": [["0", "1"]], "ortho": [["0", "0"]]}"#;
        assert!(parse_lattice(partial).is_err());
    }

    #[test]
    fn table_round_trip_and_reorder() {
        let p = named("pentagon").unwrap().lattice;
        let m = additive_nakano(&p);
        let f = TableFile::new("P+", p.names().to_vec(), 0, m.op().clone());
        let text = table_to_json(&f);
        assert_eq!(parse_table(&text).unwrap(), f);
        // Same table given with rows and columns listed in reverse.
        let rev = r#"{"name": "c2", "elements": ["0", "1"], "neutral": "0",
            "rows": ["1", "0"], "columns": ["1", "0"],
            "table": [[["0", "1"], ["1"]], [["1"], ["0"]]]}"#;
        let c2 = parse_table(rev).unwrap();
        assert_eq!(c2.op.get(1, 1), ElemSet::from_bits(0b11));
        assert_eq!(c2.op.get(0, 1), ElemSet::singleton(1));
    }

    #[test]
    fn lenient_reader_and_diff() {
        let text = r#"{"name": "t", "elements": ["0", "1"], "neutral": "0",
            "table": [[["0"], ["1"]], [["1"], ["0", "c", "0"]]]}"#;
        assert!(parse_table(text).is_err());
        let (t, anomalies) = parse_table_lenient(text).unwrap();
        assert_eq!(anomalies.len(), 2);
        assert_eq!(anomalies[0].kind, AnomalyKind::UnknownLabel);
        assert_eq!(anomalies[1].kind, AnomalyKind::DuplicateLabel);
        let c2 = named("chain_2").unwrap().lattice;
        let good = TableFile::new("c2", c2.names().to_vec(), 0, additive_nakano(&c2).op().clone());
        let d = diff_tables(&good, &t).unwrap();
        assert_eq!(
            d,
            vec![CellDiff { row: "1".into(), column: "1".into(), expected: vec!["0".into(), "1".into()], actual: vec!["0".into()] }]
        );
        assert!(diff_tables(&good, &good).unwrap().is_empty());
    }

    #[test]
    fn ascii_grid() {
        let c2 = named("chain_2").unwrap().lattice;
        let grid = render_ascii(additive_nakano(&c2).op(), c2.names(), &[0, 1], "+");
        let expected = "\
+---+-----+-------+
| + | 0   | 1     |
+---+-----+-------+
| 0 | {0} | {1}   |
| 1 | {1} | {0,1} |
+---+-----+-------+
";
        assert_eq!(grid, expected);
    }
}
