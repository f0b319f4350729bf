//! JSON and ASCII renderings of the core types, with JSON parse-back.
//!
//! JSON shapes:
//!
//! * permutation: the text form as a string, `"8 9 5 4 6 7 2 3 10 1"`;
//! * partition: an array of parts, `[7,7,4]`;
//! * path: `{"n":…, "steps":"UUD…", "w":[…], "returns":…}`;
//! * diagram: `{"n":…, "cells":[[i,j],…], "ranks":{"i,j":r,…}, "essential":[[i,j],…]}`;
//! * table: `{"counts":{"value":count,…}, "total":…}`.

use std::collections::BTreeMap;

use permdiag_core::enumeration::{IdentityOutcome, StatisticTable};
use permdiag_core::{
    Cell, Diagram, DyckPath, Error, Partition, Permutation, RankedDiagram, Result,
};
use serde_json::{json, Map, Value};

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON {what}"))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(what))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

pub fn permutation_to_json(p: &Permutation) -> Value {
    Value::String(p.to_string())
}

pub fn permutation_from_json(v: &Value) -> Result<Permutation> {
    v.as_str().ok_or_else(|| bad("permutation"))?.parse()
}

pub fn partition_to_json(lam: &Partition) -> Value {
    json!(lam.parts())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let parts = v
        .as_array()
        .ok_or_else(|| bad("partition"))?
        .iter()
        .map(|x| as_usize(x, "partition part"))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

pub fn path_to_json(path: &DyckPath) -> Value {
    let h = path.heights();
    json!({
        "n": path.n(),
        "steps": path.to_string(),
        "w": h.w,
        "returns": h.returns,
    })
}

/// Reads a path back from its `steps` field; the derived fields are checked.
pub fn path_from_json(v: &Value) -> Result<DyckPath> {
    let path: DyckPath = field(v, "steps")?
        .as_str()
        .ok_or_else(|| bad("steps"))?
        .parse()?;
    if v.get("n")
        .is_some_and(|n| n.as_u64() != Some(path.n() as u64))
    {
        return Err(bad("path: n disagrees with steps"));
    }
    Ok(path)
}

fn cell_json(c: &Cell) -> Value {
    json!([c.row, c.col])
}

fn cell_from_json(v: &Value) -> Result<Cell> {
    match v.as_array().map(Vec::as_slice) {
        Some([i, j]) => Ok(Cell::new(
            as_usize(i, "cell row")?,
            as_usize(j, "cell column")?,
        )),
        _ => Err(bad("cell")),
    }
}

pub fn diagram_to_json(r: &RankedDiagram) -> Value {
    let ranks: Map<String, Value> = r
        .ranked_cells()
        .map(|(c, rank)| (format!("{},{}", c.row, c.col), json!(rank)))
        .collect();
    json!({
        "n": r.base.n(),
        "cells": r.base.cells().iter().map(cell_json).collect::<Vec<_>>(),
        "ranks": ranks,
        "essential": r.essential.iter().map(cell_json).collect::<Vec<_>>(),
    })
}

/// A diagram read back from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramData {
    pub diagram: Diagram,
    pub ranks: BTreeMap<Cell, usize>,
    pub essential: Vec<Cell>,
}

impl DiagramData {
    /// Whether this is exactly the data of `r`.
    pub fn matches(&self, r: &RankedDiagram) -> bool {
        self.diagram == r.base
            && self.essential == r.essential
            && self.ranks.len() == r.base.len()
            && r.ranked_cells()
                .all(|(c, k)| self.ranks.get(&c) == Some(&k))
    }
}

pub fn diagram_from_json(v: &Value) -> Result<DiagramData> {
    let n = as_usize(field(v, "n")?, "n")?;
    let cells = field(v, "cells")?
        .as_array()
        .ok_or_else(|| bad("cells"))?
        .iter()
        .map(cell_from_json)
        .collect::<Result<Vec<_>>>()?;
    let essential = field(v, "essential")?
        .as_array()
        .ok_or_else(|| bad("essential"))?
        .iter()
        .map(cell_from_json)
        .collect::<Result<Vec<_>>>()?;
    let mut ranks = BTreeMap::new();
    if let Some(map) = v.get("ranks").and_then(Value::as_object) {
        for (key, r) in map {
            let (i, j) = key.split_once(',').ok_or_else(|| bad("rank key"))?;
            let i = i.parse().map_err(|_| bad("rank key"))?;
            let j = j.parse().map_err(|_| bad("rank key"))?;
            ranks.insert(Cell::new(i, j), as_usize(r, "rank")?);
        }
    }
    Ok(DiagramData {
        diagram: Diagram::from_cells(n, &cells),
        ranks,
        essential,
    })
}

pub fn table_to_json(t: &StatisticTable) -> Value {
    let counts: Map<String, Value> = t.iter().map(|(v, c)| (v.to_string(), json!(c))).collect();
    json!({ "counts": counts, "total": t.total() })
}

pub fn table_from_json(v: &Value) -> Result<StatisticTable> {
    let counts = field(v, "counts")?
        .as_object()
        .ok_or_else(|| bad("counts"))?;
    let pairs = counts
        .iter()
        .map(|(k, c)| {
            let k = k.parse().map_err(|_| bad("statistic value"))?;
            Ok((k, c.as_u64().ok_or_else(|| bad("count"))?))
        })
        .collect::<Result<Vec<_>>>()?;
    let t = StatisticTable::from_counts(pairs);
    if v.get("total")
        .is_some_and(|x| x.as_u64() != Some(t.total()))
    {
        return Err(bad("table: total disagrees with counts"));
    }
    Ok(t)
}

pub fn outcome_to_json(o: &IdentityOutcome) -> Value {
    json!({
        "name": o.name,
        "n": o.n,
        "expected": o.expected,
        "got": o.got,
        "pass": o.passed(),
    })
}

/// One line per row: `o` on the dot, `#` on diagram cells (or their rank
/// when `ranks` is set), `.` on shaded squares.
pub fn ascii_diagram(p: &Permutation, r: &RankedDiagram, ranks: bool) -> String {
    let n = p.len();
    let mut out = String::with_capacity(n * (n + 1));
    for i in 1..=n {
        for j in 1..=n {
            let ch = if p.at(i) == j {
                'o'
            } else if let Some(k) = r.rank(i, j) {
                if ranks {
                    char::from_digit(k as u32, 36).unwrap_or('+')
                } else {
                    '#'
                }
            } else {
                '.'
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}
