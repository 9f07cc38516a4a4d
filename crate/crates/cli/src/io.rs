//! JSON instance files.
//!
//! ```json
//! { "k": 2, "items": [{"id": 1, "cost": 1}, {"id": 2, "cost": 2}], "budget": 3,
//!   "oracle": { "type": "coverage",
//!               "elements": [{"id": "e1", "weight": 1}],
//!               "covers": [{"item": 1, "dim": 1, "elements": ["e1"]}] } }
//! ```
//!
//! `separable_sum` takes `"dims": [{"cap": c, "masses": [m_1, ..., m_n]}]`
//! with one entry per dimension. `tabular` takes `"values": {"key": v}` with
//! one entry per assignment, where character `j` of the key is the dimension
//! of item `j+1` (`0` for unassigned). Weights may be JSON numbers or
//! decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use ksub_core::{AnyOracle, Coverage, Dim, Instance, ItemId, Oracle, OracleSpec, Scalar, SeparableSum, Tabular};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub k: usize,
    pub items: Vec<ItemEntry>,
    pub budget: u64,
    pub oracle: OraclePayload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ItemEntry {
    pub id: u32,
    pub cost: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OraclePayload {
    Coverage { elements: Vec<ElementEntry>, covers: Vec<CoverEntry> },
    SeparableSum { dims: Vec<DimEntry> },
    Tabular { values: BTreeMap<String, Number> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementEntry {
    pub id: String,
    pub weight: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverEntry {
    pub item: u32,
    pub dim: u16,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimEntry {
    pub cap: Number,
    pub masses: Vec<Number>,
}

/// A JSON number, or a decimal string such as `"0.1"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Float(f64),
    Text(String),
}

impl Number {
    fn value(&self, what: &str) -> Result<f64> {
        let v = match self {
            Number::Float(v) => *v,
            Number::Text(s) => f64::parse_decimal(s).ok_or_else(|| CliError::Input(format!("{what}: {s:?} is not a decimal number")))?,
        };
        if !v.is_finite() {
            return Err(CliError::Input(format!("{what}: {v} is not finite")));
        }
        Ok(v)
    }
}

/// A parsed instance together with its oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub instance: Instance,
    pub oracle: AnyOracle,
}

impl From<ksub_core::generate::Generated> for Problem {
    fn from(g: ksub_core::generate::Generated) -> Self {
        Self { instance: g.instance, oracle: g.oracle }
    }
}

impl InstanceFile {
    pub fn from_problem(problem: &Problem) -> Self {
        let inst = &problem.instance;
        let items = inst.items().map(|a| ItemEntry { id: a.0, cost: inst.item_cost(a) }).collect();
        let oracle = match &problem.oracle {
            OracleSpec::Coverage(o) => coverage_payload(o),
            OracleSpec::SeparableSum(o) => OraclePayload::SeparableSum {
                dims: o
                    .masses()
                    .iter()
                    .zip(o.caps())
                    .map(|(row, cap)| DimEntry {
                        cap: Number::Float(*cap),
                        masses: row.iter().map(|&m| Number::Float(m)).collect(),
                    })
                    .collect(),
            },
            OracleSpec::Tabular(o) => {
                let offset = *o.offset();
                let values = o
                    .entries()
                    .map(|(key, v)| (key, Number::Float(if offset == 0.0 { *v } else { v + offset })))
                    .collect();
                OraclePayload::Tabular { values }
            }
        };
        Self { k: inst.k(), items, budget: inst.budget(), oracle }
    }

    pub fn into_problem(self) -> Result<Problem> {
        let n = self.items.len();
        let mut costs = vec![None; n];
        for item in &self.items {
            let slot = (item.id as usize)
                .checked_sub(1)
                .and_then(|idx| costs.get_mut(idx))
                .ok_or_else(|| CliError::Input(format!("item id {} outside 1..={n}", item.id)))?;
            if slot.replace(item.cost).is_some() {
                return Err(CliError::Input(format!("item id {} listed twice", item.id)));
            }
        }
        // Every slot is filled: n distinct ids in 1..=n.
        let costs: Vec<u64> = costs.into_iter().flatten().collect();
        let instance = Instance::new(self.k, costs, self.budget)?;
        let k = self.k;
        let oracle: AnyOracle = match self.oracle {
            OraclePayload::Coverage { elements, covers } => {
                let elements = elements
                    .into_iter()
                    .map(|e| {
                        let w = e.weight.value(&format!("weight of element {:?}", e.id))?;
                        Ok((e.id, w))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let covers = covers.into_iter().map(|c| ((ItemId(c.item), Dim(c.dim)), c.elements)).collect();
                Coverage::new(n, k, elements, covers)?.into()
            }
            OraclePayload::SeparableSum { dims } => {
                if dims.len() != k {
                    return Err(CliError::Input(format!("separable_sum lists {} dims, expected k = {k}", dims.len())));
                }
                let mut masses = Vec::with_capacity(k);
                let mut caps = Vec::with_capacity(k);
                for (i, d) in dims.into_iter().enumerate() {
                    caps.push(d.cap.value(&format!("cap of dim {}", i + 1))?);
                    masses.push(
                        d.masses
                            .iter()
                            .enumerate()
                            .map(|(a, m)| m.value(&format!("mass of item {} in dim {}", a + 1, i + 1)))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                SeparableSum::new(n, masses, caps)?.into()
            }
            OraclePayload::Tabular { values } => {
                let entries = values
                    .into_iter()
                    .map(|(key, v)| {
                        let x = v.value(&format!("table entry {key:?}"))?;
                        Ok((key, x))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Tabular::from_keyed(n, k, entries)?.into()
            }
        };
        if oracle.n() != n || oracle.k() != k {
            return Err(CliError::Input("oracle dimensions do not match the item list".into()));
        }
        Ok(Problem { instance, oracle })
    }
}

fn coverage_payload(o: &Coverage) -> OraclePayload {
    let names = o.elements();
    let elements = names.iter().map(|(id, w)| ElementEntry { id: id.clone(), weight: Number::Float(*w) }).collect();
    let mut covers = Vec::with_capacity(o.n() * o.k());
    for a in 0..o.n() {
        for i in Dim::all(o.k()) {
            let item = ItemId::from_index(a);
            let elements = o.covered_by(item, i).into_iter().map(|e| names[e].0.clone()).collect();
            covers.push(CoverEntry { item: item.0, dim: i.0, elements });
        }
    }
    OraclePayload::Coverage { elements, covers }
}

/// Parses instance JSON; `origin` labels diagnostics.
pub fn parse_instance(text: &str, origin: &str) -> Result<Problem> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_problem()
}

pub fn read_instance(path: &Path) -> Result<Problem> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_instance(&text, &path.display().to_string())
}

pub fn instance_json(problem: &Problem) -> String {
    let mut s = serde_json::to_string_pretty(&InstanceFile::from_problem(problem)).expect("instance serializes");
    s.push('\n');
    s
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}
