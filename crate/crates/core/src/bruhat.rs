//! The Bruhat-cell counting identity as an exact evaluator.
//!
//! For a unipotent class tag (the regular class `82` or the subregular
//! class `6211`, both splitting into two classes of the finite group), the
//! right-hand side of the counting identity is
//!
//!   sum_phi phi_q(T_w) * ( f_unif(phi)(u) + a1(phi) f1(u) + a2(phi) f2(u) )
//!
//! with Hecke values from the hecke module, stored uniform values, and
//! coefficients a_i read off the f-vectors through the beta-set map. The
//! support values come from the X/Y expansion
//!
//!   f1 = q^2 Y_82 + q^3 Y_6211,      f2 = q^4 Y_6211,
//!
//! where Y_tag = gamma_tag * Y0 and Y0 is +-1 on the two classes of the
//! tag. Realness of the left-hand side forces gamma in {+1, -1}; the +1
//! convention then pins the class labelled u_(tag) as the one meeting the
//! Bruhat cell of the word.

use crate::exactnum::{CycQ, PolQ};
use crate::hecke::{bipartitions, HeckeSpec, Letter};
use crate::sigma::BasisTable;
use crate::symbols::{
    bipartition_to_symbol, f_coefficient, family_count, Bipartition, Case, Symbol,
};
use crate::{Error, Result};

/// Unipotent class tag: Jordan type of the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassTag {
    Reg82,
    Sub6211,
}

impl ClassTag {
    pub fn parse(s: &str) -> Result<ClassTag> {
        match s {
            "82" => Ok(ClassTag::Reg82),
            "6211" => Ok(ClassTag::Sub6211),
            other => Err(Error::WrongCase(format!("unknown class tag {}", other))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Reg82 => "82",
            ClassTag::Sub6211 => "6211",
        }
    }
}

/// Sign state of the two Y-normalizations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignState {
    pub gamma_82: Option<i8>,
    pub gamma_6211: Option<i8>,
}

impl SignState {
    pub fn both_plus() -> Self {
        SignState {
            gamma_82: Some(1),
            gamma_6211: Some(1),
        }
    }

    fn get(&self, tag: ClassTag) -> Result<i8> {
        let v = match tag {
            ClassTag::Reg82 => self.gamma_82,
            ClassTag::Sub6211 => self.gamma_6211,
        };
        v.ok_or(Error::SignsUnset)
    }
}

/// Values (f1(u), f2(u)) for u in the positive (y0 = +1) or negative
/// (y0 = -1) class of the tag.
pub fn xy_expand(tag: ClassTag, signs: &SignState, y0: i8) -> Result<(PolQ, PolQ)> {
    let gamma = signs.get(tag)?;
    let scale = CycQ::from_int((gamma * y0) as i64);
    Ok(match tag {
        ClassTag::Reg82 => (PolQ::q_pow(2).scalar_mul(&scale), PolQ::zero()),
        ClassTag::Sub6211 => (
            PolQ::q_pow(3).scalar_mul(&scale),
            PolQ::q_pow(4).scalar_mul(&scale),
        ),
    })
}

/// One per-character record of an instance.
#[derive(Clone, Debug)]
pub struct PhiRecord {
    pub label: Bipartition,
    pub hecke: PolQ,
    pub f_unif: PolQ,
    pub a1: CycQ,
    pub a2: CycQ,
}

/// All data needed to evaluate the counting identity for one (case, tag).
#[derive(Clone, Debug)]
pub struct StarInstance {
    pub case: Case,
    pub tag: ClassTag,
    /// Display form of the chosen word.
    pub word: String,
    pub records: Vec<PhiRecord>,
    /// Neutral data note attached to the instance (label conventions).
    pub note: Option<String>,
}

fn require_d5(case: Case) -> Result<()> {
    match case {
        Case::D5Split | Case::D5Twisted => Ok(()),
        other => Err(Error::WrongCase(format!(
            "counting instances exist for the rank-5 cases, not {}",
            other
        ))),
    }
}

/// The Hecke algebra of the case: D5(q) for split, B4(Q = q^2) for the
/// twisted group (the fused fork node carries weight 2).
pub fn hecke_spec(case: Case) -> Result<HeckeSpec> {
    require_d5(case)?;
    if case.is_twisted() {
        HeckeSpec::b(4, PolQ::q_pow(2))
    } else {
        HeckeSpec::d(5)
    }
}

/// The evaluation word of a tag: the full Coxeter word for the regular
/// class, its length-4 prefix for the subregular class. In the twisted
/// case the fused fork pair contributes the single generator t.
pub fn word_for(case: Case, tag: ClassTag) -> Result<(String, Vec<Letter>)> {
    require_d5(case)?;
    let spec = hecke_spec(case)?;
    let (display, letters) = match (case.is_twisted(), tag) {
        (false, ClassTag::Reg82) => ("s1*s2*s3*s4*s5", "1,2,3,4,5"),
        (false, ClassTag::Sub6211) => ("s1*s2*s3*s4", "1,2,3,4"),
        (true, ClassTag::Reg82) => ("t*u1*u2*u3", "t,1,2,3"),
        (true, ClassTag::Sub6211) => ("t*u1*u2", "t,1,2"),
    };
    Ok((display.to_string(), spec.parse_word(letters)?))
}

/// Stored uniform values f_unif(phi)(u) for the in-scope (case, tag) pairs.
pub fn f_unif_values(case: Case, tag: ClassTag) -> Result<Vec<(Bipartition, PolQ)>> {
    require_d5(case)?;
    let bp = |s: &str| Bipartition::parse(s).unwrap();
    Ok(match (case.is_twisted(), tag) {
        (false, ClassTag::Reg82) => vec![(bp("5."), PolQ::one())],
        (false, ClassTag::Sub6211) => vec![
            (bp("5."), PolQ::one()),
            (bp("1.4"), PolQ::q()),
            (bp(".41"), PolQ::q_pow(2)),
        ],
        (true, ClassTag::Reg82) => vec![(bp("4."), PolQ::one())],
        (true, ClassTag::Sub6211) => vec![
            (bp("4."), PolQ::one()),
            (bp("31."), PolQ::q()),
            (bp("3.1"), PolQ::q_pow(2)),
        ],
    })
}

/// Principal-series label of a symbol: the bipartition mapping onto it
/// under the beta-set map, if any.
pub fn principal_series_label(case: Case, sym: &Symbol) -> Option<Bipartition> {
    let n = if case.is_twisted() {
        case.rank() - 1
    } else {
        case.rank()
    };
    bipartitions(n)
        .into_iter()
        .find(|bp| matches!(bipartition_to_symbol(bp, case), Ok(s) if &s == sym))
}

/// Build the instance for (case, tag): Hecke values at the tag's word for
/// every character carrying a uniform value or an f-coefficient.
pub fn build_instance(case: Case, tag: ClassTag) -> Result<StarInstance> {
    require_d5(case)?;
    let spec = hecke_spec(case)?;
    let (display, word) = word_for(case, tag)?;
    let mut labels: Vec<Bipartition> = Vec::new();
    for (bp, _) in f_unif_values(case, tag)? {
        if !labels.contains(&bp) {
            labels.push(bp);
        }
    }
    for which in 1..=family_count(case) {
        let fam = crate::symbols::family_fourier(case, which)?;
        for member in &fam.members {
            if let Some(bp) = principal_series_label(case, member) {
                if !labels.contains(&bp) {
                    labels.push(bp);
                }
            }
        }
    }
    let unif = f_unif_values(case, tag)?;
    let records = labels
        .into_iter()
        .map(|label| {
            let hecke = spec.char_value(&label, &word)?;
            let f_unif = unif
                .iter()
                .find(|(b, _)| b == &label)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(PolQ::zero);
            let sym = bipartition_to_symbol(&label, case)?;
            let a1 = f_coefficient(case, 1, &sym)?;
            let a2 = if family_count(case) >= 2 {
                f_coefficient(case, 2, &sym)?
            } else {
                CycQ::zero()
            };
            Ok(PhiRecord {
                label,
                hecke,
                f_unif,
                a1,
                a2,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let note = (case == Case::D5Split && tag == ClassTag::Sub6211).then(|| {
        "label (.221) is the unique size-5 bipartition completing the second family; \
         the size-4 string (.211) is not a valid label here"
            .to_string()
    });
    Ok(StarInstance {
        case,
        tag,
        word: display,
        records,
        note,
    })
}

impl StarInstance {
    /// Consistency of the stored records against the symbol combinatorics
    /// and a recomputation of the Hecke values.
    pub fn validate(&self) -> Result<()> {
        let spec = hecke_spec(self.case)?;
        let (_, word) = word_for(self.case, self.tag)?;
        let unif = f_unif_values(self.case, self.tag)?;
        for (bp, _) in &unif {
            if !self.records.iter().any(|r| &r.label == bp) {
                return Err(Error::MissingRecord(bp.to_string()));
            }
        }
        for rec in &self.records {
            let sym = bipartition_to_symbol(&rec.label, self.case)?;
            let a1 = f_coefficient(self.case, 1, &sym)?;
            let a2 = if family_count(self.case) >= 2 {
                f_coefficient(self.case, 2, &sym)?
            } else {
                CycQ::zero()
            };
            if a1 != rec.a1 || a2 != rec.a2 {
                return Err(Error::InconsistentInstance(format!(
                    "coefficients of {} disagree with the f-vectors",
                    rec.label
                )));
            }
            let expected_unif = unif
                .iter()
                .find(|(b, _)| b == &rec.label)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(PolQ::zero);
            if expected_unif != rec.f_unif {
                return Err(Error::InconsistentInstance(format!(
                    "uniform value of {} disagrees with the stored data",
                    rec.label
                )));
            }
            if spec.char_value(&rec.label, &word)? != rec.hecke {
                return Err(Error::InconsistentInstance(format!(
                    "hecke value of {} does not recompute",
                    rec.label
                )));
            }
        }
        Ok(())
    }

    /// The uniform part U = sum_phi phi_q(T_w) f_unif(phi)(u).
    pub fn uniform_part(&self) -> PolQ {
        self.records
            .iter()
            .fold(PolQ::zero(), |acc, r| &acc + &(&r.hecke * &r.f_unif))
    }

    /// The coefficient V of gamma*y0 in the right-hand side.
    pub fn y_coefficient(&self) -> PolQ {
        let a1_sum = self
            .records
            .iter()
            .fold(PolQ::zero(), |acc, r| &acc + &r.hecke.scalar_mul(&r.a1));
        let a2_sum = self
            .records
            .iter()
            .fold(PolQ::zero(), |acc, r| &acc + &r.hecke.scalar_mul(&r.a2));
        match self.tag {
            ClassTag::Reg82 => &PolQ::q_pow(2) * &a1_sum,
            ClassTag::Sub6211 => &(&PolQ::q_pow(3) * &a1_sum) + &(&PolQ::q_pow(4) * &a2_sum),
        }
    }
}

/// Evaluate the right-hand side of the counting identity at an element of
/// the y0-class of the instance's tag.
pub fn rhs_star(instance: &StarInstance, signs: &SignState, y0: i8) -> Result<PolQ> {
    let (f1, f2) = xy_expand(instance.tag, signs, y0)?;
    let mut acc = PolQ::zero();
    for r in &instance.records {
        let mut term = r.f_unif.clone();
        term = &term + &f1.scalar_mul(&r.a1);
        term = &term + &f2.scalar_mul(&r.a2);
        acc = &acc + &(&r.hecke * &term);
    }
    Ok(acc)
}

/// Audit data for one tag after solving.
#[derive(Clone, Debug)]
pub struct TagAudit {
    pub tag: ClassTag,
    pub word: String,
    pub uniform_part: PolQ,
    pub y_coefficient: PolQ,
    pub rhs_positive_class: PolQ,
    pub rhs_negative_class: PolQ,
    pub surviving_gammas: Vec<CycQ>,
}

/// Outcome of the sign pipeline for one case.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub case: Case,
    pub signs: SignState,
    pub table4: BasisTable,
    pub audits: Vec<TagAudit>,
    pub notes: Vec<String>,
}

/// Derive the signs from the realness constraint, adopt the +1 convention,
/// and emit the support-value table.
pub fn solve_signs(instances: &[StarInstance]) -> Result<SolveOutcome> {
    let case = instances
        .first()
        .map(|i| i.case)
        .ok_or_else(|| Error::MissingRecord("no instances".to_string()))?;
    require_d5(case)?;
    if instances.iter().any(|i| i.case != case) {
        return Err(Error::InconsistentInstance(
            "instances from different cases".to_string(),
        ));
    }
    let find = |tag: ClassTag| -> Result<&StarInstance> {
        instances
            .iter()
            .find(|i| i.tag == tag)
            .ok_or_else(|| Error::MissingRecord(format!("class tag {}", tag.name())))
    };
    let mut audits = Vec::new();
    let mut notes = Vec::new();
    for tag in [ClassTag::Reg82, ClassTag::Sub6211] {
        let inst = find(tag)?;
        inst.validate()?;
        let u = inst.uniform_part();
        let v = inst.y_coefficient();
        if u != u.conj() {
            return Err(Error::InconsistentInstance(
                "uniform part is not real".to_string(),
            ));
        }
        if v != u {
            return Err(Error::InconsistentInstance(format!(
                "rhs does not factor as (uniform part)*(1 + gamma*y0) for tag {}",
                tag.name()
            )));
        }
        // realness of U + gamma*V for both classes forces gamma real
        let sixth_roots = [
            CycQ::one(),
            -&CycQ::one(),
            CycQ::theta(),
            -&CycQ::theta(),
            CycQ::theta_sq(),
            -&CycQ::theta_sq(),
        ];
        let surviving: Vec<CycQ> = sixth_roots
            .into_iter()
            .filter(|g| {
                let scaled = v.scalar_mul(g);
                scaled == scaled.conj()
            })
            .collect();
        if surviving.len() != 2 {
            return Err(Error::Unsatisfiable(format!(
                "realness does not force the sign for tag {} ({} candidates remain)",
                tag.name(),
                surviving.len()
            )));
        }
        if !surviving.contains(&CycQ::one()) || !surviving.iter().any(|g| g == &-&CycQ::one()) {
            return Err(Error::Unsatisfiable(format!(
                "surviving candidates for tag {} are not +-1",
                tag.name()
            )));
        }
        let plus = SignState::both_plus();
        let audit = TagAudit {
            tag,
            word: inst.word.clone(),
            uniform_part: u,
            y_coefficient: v,
            rhs_positive_class: rhs_star(inst, &plus, 1)?,
            rhs_negative_class: rhs_star(inst, &plus, -1)?,
            surviving_gammas: surviving,
        };
        notes.push(format!(
            "u_({}) is the class meeting the double coset of the word {}",
            tag.name(),
            inst.word
        ));
        if let Some(n) = &inst.note {
            notes.push(n.clone());
        }
        audits.push(audit);
    }
    let signs = SignState::both_plus();
    let columns = vec![
        "u_(82)".to_string(),
        "u'_(82)".to_string(),
        "u_(6211)".to_string(),
        "u'_(6211)".to_string(),
        "other".to_string(),
    ];
    let mut f1_row = Vec::new();
    let mut f2_row = Vec::new();
    for (tag, y0) in [
        (ClassTag::Reg82, 1),
        (ClassTag::Reg82, -1),
        (ClassTag::Sub6211, 1),
        (ClassTag::Sub6211, -1),
    ] {
        let (f1, f2) = xy_expand(tag, &signs, y0)?;
        f1_row.push(f1);
        f2_row.push(f2);
    }
    f1_row.push(PolQ::zero());
    f2_row.push(PolQ::zero());
    let table4 = BasisTable {
        columns,
        rows: vec![("f1".to_string(), f1_row), ("f2".to_string(), f2_row)],
    };
    Ok(SolveOutcome {
        case,
        signs,
        table4,
        audits,
        notes,
    })
}
