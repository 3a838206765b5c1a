//! Class-function spaces over a labelled finite class table.
//!
//! A table stores one record per conjugacy class: label, centralizer order
//! (a polynomial in q), and optional coset / semisimple-part tags. The inner
//! product of two functions is computed classwise,
//!
//!   <f, f'> = sum_C f(C) conj(f'(C)) / centralizer(C),
//!
//! exactly over rational functions in q. Tags are data supplied by the
//! caller, not derived here; the coset-averaging operator uses them to
//! assert its projection property classwise.
//!
//! JSON schema: `{classes:[{label, centralizer, coset, ss_part}], values:[...]}`
//! with canonical PolQ strings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactnum::{parse_pol, CycQ, PolQ, RatQ};
use crate::{Error, Result};

/// One conjugacy class record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub label: String,
    pub centralizer: PolQ,
    pub coset: Option<String>,
    pub ss_part: Option<String>,
}

impl ClassRecord {
    pub fn new(label: impl Into<String>, centralizer: PolQ) -> Self {
        ClassRecord {
            label: label.into(),
            centralizer,
            coset: None,
            ss_part: None,
        }
    }

    pub fn with_tags(mut self, coset: &str, ss_part: &str) -> Self {
        self.coset = Some(coset.to_string());
        self.ss_part = Some(ss_part.to_string());
        self
    }
}

/// A labelled finite set of conjugacy classes.
#[derive(Debug, PartialEq, Eq)]
pub struct ClassTable {
    classes: Vec<ClassRecord>,
}

impl ClassTable {
    pub fn new(classes: Vec<ClassRecord>) -> Result<Arc<ClassTable>> {
        for (i, c) in classes.iter().enumerate() {
            if c.centralizer.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            if classes[..i].iter().any(|d| d.label == c.label) {
                return Err(Error::UnknownClass(format!("duplicate label {}", c.label)));
            }
        }
        Ok(Arc::new(ClassTable { classes }))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ClassRecord] {
        &self.classes
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::UnknownClass(label.to_string()))
    }
}

/// A vector of exact values over a class table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    table: Arc<ClassTable>,
    values: Vec<PolQ>,
}

impl ClassFunction {
    pub fn new(table: Arc<ClassTable>, values: Vec<PolQ>) -> Result<Self> {
        if values.len() != table.len() {
            return Err(Error::SizeMismatch(format!(
                "{} values over {} classes",
                values.len(),
                table.len()
            )));
        }
        Ok(ClassFunction { table, values })
    }

    pub fn zero(table: Arc<ClassTable>) -> Self {
        let n = table.len();
        ClassFunction {
            table,
            values: vec![PolQ::zero(); n],
        }
    }

    pub fn table(&self) -> &Arc<ClassTable> {
        &self.table
    }

    pub fn values(&self) -> &[PolQ] {
        &self.values
    }

    pub fn value(&self, label: &str) -> Result<&PolQ> {
        Ok(&self.values[self.table.index_of(label)?])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(PolQ::is_zero)
    }

    fn same_table(&self, other: &ClassFunction) -> Result<()> {
        if self.table == other.table {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn scalar_mul(&self, c: &CycQ) -> ClassFunction {
        ClassFunction {
            table: self.table.clone(),
            values: self.values.iter().map(|v| v.scalar_mul(c)).collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_table(other)?;
        Ok(ClassFunction {
            table: self.table.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Hermitian inner product sum_C f(C) conj(g(C)) / centralizer(C).
    pub fn inner_product(&self, other: &ClassFunction) -> Result<RatQ> {
        self.same_table(other)?;
        let mut acc = RatQ::zero();
        for ((a, b), rec) in self
            .values
            .iter()
            .zip(&other.values)
            .zip(self.table.classes())
        {
            let num = a * &b.conj();
            let term = RatQ::new(num, rec.centralizer.clone())?;
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Classwise product.
    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_table(other)?;
        Ok(ClassFunction {
            table: self.table.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// The averaging operator f^(s) = d^{-1} sum_k lambda_k(s)^{-1} lambda_k . f.
    ///
    /// `lambdas` must be constant on coset tags; `values_at_s` lists
    /// lambda_k(s). The projection property is asserted classwise: the
    /// result must agree with f on classes whose ss_part tag is `s_tag`
    /// and vanish elsewhere.
    pub fn coset_average(
        &self,
        s_tag: &str,
        lambdas: &[ClassFunction],
        values_at_s: &[CycQ],
    ) -> Result<ClassFunction> {
        if lambdas.is_empty() || lambdas.len() != values_at_s.len() {
            return Err(Error::SizeMismatch(format!(
                "{} characters vs {} values at s",
                lambdas.len(),
                values_at_s.len()
            )));
        }
        for lam in lambdas {
            self.same_table(lam)?;
            // constant on coset tags
            let mut seen: Vec<(&str, &PolQ)> = Vec::new();
            for (rec, v) in self.table.classes().iter().zip(&lam.values) {
                let tag = rec.coset.as_deref().unwrap_or(&rec.label);
                match seen.iter().find(|(t, _)| *t == tag) {
                    Some((_, prev)) if *prev != v => return Err(Error::NotCosetConstant),
                    Some(_) => {}
                    None => seen.push((tag, v)),
                }
            }
        }
        let d_inv = CycQ::from_ratio(1, lambdas.len() as i64);
        let mut out = ClassFunction::zero(self.table.clone());
        for (lam, at_s) in lambdas.iter().zip(values_at_s) {
            let inv = at_s.inv().ok_or(Error::ZeroDenominator)?;
            let term = lam.pointwise_mul(self)?.scalar_mul(&inv);
            out = out.add(&term)?;
        }
        out = out.scalar_mul(&d_inv);
        // assert the projection property classwise
        for ((rec, got), expected) in self
            .table
            .classes()
            .iter()
            .zip(&out.values)
            .zip(&self.values)
        {
            let on_block = rec.ss_part.as_deref() == Some(s_tag);
            let ok = if on_block {
                got == expected
            } else {
                got.is_zero()
            };
            if !ok {
                return Err(Error::InconsistentInstance(format!(
                    "coset average not a projection at class {}",
                    rec.label
                )));
            }
        }
        Ok(out)
    }

    /// Exact coefficients of `self` in the span of `basis`, via a Gram
    /// solve over rational functions. Errors: singular Gram matrix, or a
    /// nonzero reconstruction residual (not in span).
    pub fn express_in_span(&self, basis: &[ClassFunction]) -> Result<Vec<RatQ>> {
        for b in basis {
            self.same_table(b)?;
        }
        let n = basis.len();
        if n == 0 {
            return if self.is_zero() {
                Ok(Vec::new())
            } else {
                Err(Error::NotInSpan)
            };
        }
        // solve sum_j <b_j, b_i> c_j = <f, b_i>
        let mut mat = vec![vec![RatQ::zero(); n + 1]; n];
        for i in 0..n {
            for j in 0..n {
                mat[i][j] = basis[j].inner_product(&basis[i])?;
            }
            mat[i][n] = self.inner_product(&basis[i])?;
        }
        let coeffs = solve_linear(&mut mat)?;
        // reconstruction residual must vanish classwise
        for (k, f_val) in self.values.iter().enumerate() {
            let mut acc = RatQ::zero();
            for (c, b) in coeffs.iter().zip(basis) {
                acc = &acc + &(c * &RatQ::from_pol(b.values[k].clone()));
            }
            if acc != RatQ::from_pol(f_val.clone()) {
                return Err(Error::NotInSpan);
            }
        }
        Ok(coeffs)
    }
}

/// Gaussian elimination on an n x (n+1) augmented system over RatQ.
fn solve_linear(mat: &mut [Vec<RatQ>]) -> Result<Vec<RatQ>> {
    let n = mat.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !mat[r][col].is_zero())
            .ok_or(Error::SingularGram)?;
        mat.swap(col, pivot);
        let inv = mat[col][col].inv().expect("nonzero pivot");
        for k in col..=n {
            mat[col][k] = &mat[col][k] * &inv;
        }
        for r in 0..n {
            if r == col || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for k in col..=n {
                let sub = &factor * &mat[col][k];
                mat[r][k] = &mat[r][k] - &sub;
            }
        }
    }
    Ok((0..n).map(|i| mat[i][n].clone()).collect())
}

/// Indicator function of a set of class labels.
pub fn indicator(table: &Arc<ClassTable>, labels: &[&str]) -> Result<ClassFunction> {
    let mut values = vec![PolQ::zero(); table.len()];
    for label in labels {
        values[table.index_of(label)?] = PolQ::one();
    }
    ClassFunction::new(table.clone(), values)
}

// ---- JSON schema ----

#[derive(Serialize, Deserialize)]
pub struct ClassDto {
    pub label: String,
    pub centralizer: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ss_part: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct FunctionDto {
    pub classes: Vec<ClassDto>,
    pub values: Vec<String>,
}

pub fn table_to_dto(table: &ClassTable) -> Vec<ClassDto> {
    table
        .classes()
        .iter()
        .map(|c| ClassDto {
            label: c.label.clone(),
            centralizer: c.centralizer.to_string(),
            coset: c.coset.clone(),
            ss_part: c.ss_part.clone(),
        })
        .collect()
}

pub fn table_from_dto(classes: &[ClassDto]) -> Result<Arc<ClassTable>> {
    let records = classes
        .iter()
        .map(|c| {
            Ok(ClassRecord {
                label: c.label.clone(),
                centralizer: parse_pol(&c.centralizer)?,
                coset: c.coset.clone(),
                ss_part: c.ss_part.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ClassTable::new(records)
}

pub fn function_to_dto(f: &ClassFunction) -> FunctionDto {
    FunctionDto {
        classes: table_to_dto(f.table()),
        values: f.values().iter().map(|v| v.to_string()).collect(),
    }
}

pub fn function_from_dto(dto: &FunctionDto) -> Result<ClassFunction> {
    let table = table_from_dto(&dto.classes)?;
    let values = dto
        .values
        .iter()
        .map(|s| parse_pol(s))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(table, values)
}
