//! Fixed table emission with byte-stable output.

use gentab_core::bruhat::{build_instance, solve_signs, ClassTag};
use gentab_core::classfun::indicator;
use gentab_core::sigma;
use gentab_core::symbols::Case;
use gentab_core::{Error, Result};
use serde_json::json;

pub const TABLE_IDS: &[&str] = &["table1", "table2", "cuspidal2x3", "table3", "table4", "d4"];

/// A table ready for rendering: stringified values, fixed ordering.
pub struct EmittedTable {
    pub id: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
    pub meta: serde_json::Value,
}

fn from_basis(id: &str, basis: &sigma::BasisTable, meta: serde_json::Value) -> EmittedTable {
    EmittedTable {
        id: id.to_string(),
        columns: basis.columns.clone(),
        rows: basis
            .rows
            .iter()
            .map(|(name, vals)| (name.clone(), vals.iter().map(|p| p.to_string()).collect()))
            .collect(),
        meta,
    }
}

pub fn emit_table(id: &str) -> Result<EmittedTable> {
    match id {
        "table1" => {
            let (columns, rows) = sigma::table1();
            Ok(EmittedTable {
                id: id.to_string(),
                columns,
                rows: rows
                    .into_iter()
                    .map(|(name, vals)| (name, vals.iter().map(|v| v.to_string()).collect()))
                    .collect(),
                meta: json!({
                    "description": "linear characters of the component group nontrivial on the distinguished C3"
                }),
            })
        }
        "table2" => {
            // three-class basis: indicator plus the two cuspidal rows
            let desc = sigma::SigmaDescriptor::e6(false, "emit");
            let split = desc.split_classes();
            let table = desc.class_table()?;
            let labels: Vec<&str> = split.labels.iter().map(|s| s.as_str()).collect();
            let chi0 = indicator(&table, &labels)?;
            let two = sigma::cuspidal_two_by_three()?;
            let mut rows = vec![(
                "chi0".to_string(),
                chi0.values().iter().map(|p| p.to_string()).collect(),
            )];
            for (name, vals) in &two.rows {
                rows.push((name.clone(), vals.iter().map(|p| p.to_string()).collect()));
            }
            Ok(EmittedTable {
                id: id.to_string(),
                columns: two.columns,
                rows,
                meta: json!({
                    "description": "basis of the sigma-class functions when the splitting has three classes"
                }),
            })
        }
        "cuspidal2x3" => {
            let two = sigma::cuspidal_two_by_three()?;
            Ok(from_basis(
                id,
                &two,
                json!({
                    "description": "cuspidal characteristic functions on the three-class splitting"
                }),
            ))
        }
        "table3" => {
            let rep = sigma::e6_scenario(4, false)?;
            Ok(from_basis(
                id,
                &rep.basis,
                json!({
                    "description": "basis of the sigma-class functions on the nine-class splitting",
                    "generation": "coset averaging, checked against the direct block construction"
                }),
            ))
        }
        "table4" => {
            let instances = vec![
                build_instance(Case::D5Split, ClassTag::Reg82)?,
                build_instance(Case::D5Split, ClassTag::Sub6211)?,
            ];
            let out = solve_signs(&instances)?;
            Ok(from_basis(
                id,
                &out.table4,
                json!({
                    "description": "values of f1 and f2 on the unipotent support classes",
                    "applies_to": ["D5-split", "D5-twisted"],
                    "notes": out.notes,
                }),
            ))
        }
        "d4" => {
            let (table, basis) = sigma::d4_two_class_table()?;
            Ok(from_basis(
                id,
                &basis,
                json!({
                    "description": "two-class regular unipotent table with the cuspidal row",
                    "centralizers": table
                        .classes()
                        .iter()
                        .map(|c| c.centralizer.to_string())
                        .collect::<Vec<_>>(),
                }),
            ))
        }
        other => Err(Error::WrongCase(format!(
            "unknown table id {} (expected one of {})",
            other,
            TABLE_IDS.join(", ")
        ))),
    }
}

impl EmittedTable {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "columns": self.columns,
            "rows": self.rows.iter().map(|(name, vals)| json!({
                "name": name,
                "values": vals,
            })).collect::<Vec<_>>(),
            "meta": self.meta,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("name,");
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for (name, vals) in &self.rows {
            out.push_str(name);
            for v in vals {
                out.push(',');
                // quote values containing commas or quotes
                if v.contains(',') || v.contains('"') {
                    out.push('"');
                    out.push_str(&v.replace('"', "\"\""));
                    out.push('"');
                } else {
                    out.push_str(v);
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = Vec::new();
        let name_w = self
            .rows
            .iter()
            .map(|(n, _)| n.len())
            .chain([4])
            .max()
            .unwrap();
        for (i, col) in self.columns.iter().enumerate() {
            let w = self
                .rows
                .iter()
                .map(|(_, vals)| vals[i].len())
                .chain([col.len()])
                .max()
                .unwrap();
            widths.push(w);
        }
        let mut out = String::new();
        out.push_str(&format!("{:name_w$}", ""));
        for (col, w) in self.columns.iter().zip(&widths) {
            out.push_str(&format!("  {:>w$}", col, w = w));
        }
        out.push('\n');
        for (name, vals) in &self.rows {
            out.push_str(&format!("{:name_w$}", name));
            for (v, w) in vals.iter().zip(&widths) {
                out.push_str(&format!("  {:>w$}", v, w = w));
            }
            out.push('\n');
        }
        out
    }
}
