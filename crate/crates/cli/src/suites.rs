//! The named verification suites.

use gentab_core::bruhat::{build_instance, rhs_star, solve_signs, ClassTag, SignState};
use gentab_core::classfun::ClassFunction;
use gentab_core::coxeter::{CoxeterDatum, CoxeterGroup, DiagramAut};
use gentab_core::exactnum::CycQ;
use gentab_core::hecke::HeckeSpec;
use gentab_core::sigma;
use gentab_core::symbols::{self, Case, RowRole};
use gentab_core::Result;

use crate::report::{Checker, SuiteReport};

pub const SUITE_NAMES: &[&str] = &[
    "appendix-d5-split",
    "appendix-d5-twisted",
    "e6-tables",
    "d4-tables",
    "fourier",
    "coxeter-counts",
];

pub fn run_suite(name: &str, q: Option<u64>) -> Result<SuiteReport> {
    match name {
        "appendix-d5-split" => appendix_suite(Case::D5Split),
        "appendix-d5-twisted" => appendix_suite(Case::D5Twisted),
        "e6-tables" => e6_tables(q),
        "d4-tables" => d4_tables(),
        "fourier" => fourier(),
        "coxeter-counts" => coxeter_counts(),
        other => Err(gentab_core::Error::WrongCase(format!(
            "unknown suite {} (expected one of {})",
            other,
            SUITE_NAMES.join(", ")
        ))),
    }
}

/// Golden Hecke values quoted for the rank-5 cases, plus the sign pipeline.
fn appendix_suite(case: Case) -> Result<SuiteReport> {
    let mut c = Checker::new();
    let spec = gentab_core::bruhat::hecke_spec(case)?;

    let coxeter_word;
    let sub_word;
    let coxeter_values: &[(&str, &str)];
    let sub_values: &[(&str, &str)];
    match case {
        Case::D5Split => {
            coxeter_word = "1,2,3,4,5";
            sub_word = "1,2,3,4";
            coxeter_values = &[
                ("5.", "q^5"),
                ("1.31", "q^3"),
                (".32", "-q^3"),
                ("11.3", "0"),
            ];
            sub_values = &[
                ("5.", "q^4"),
                (".41", "q^4"),
                ("1.4", "q^4 - q^3"),
                ("1.31", "-q^3 + q^2"),
                ("11.3", "-q^3"),
                (".32", "-q^2"),
                ("1.211", "q^2 - q"),
                ("111.2", "-q"),
                (".221", "-q^2"),
            ];
        }
        Case::D5Twisted => {
            coxeter_word = "t,1,2,3";
            sub_word = "t,1,2";
            coxeter_values = &[
                ("4.", "q^5"),
                ("211.", "q^3"),
                (".4", "-q^3"),
                ("2.2", "0"),
                ("21.1", "0"),
            ];
            sub_values = &[
                ("4.", "q^4"),
                ("31.", "q^4 - q^3"),
                ("3.1", "q^4"),
                ("2.2", "0"),
                (".4", "-q^2"),
                ("21.1", "-q^3"),
                ("211.", "-q^3 + q^2"),
                ("1.21", "q"),
                (".31", "-q^2 + q"),
                ("11.11", "0"),
                ("1111.", "q^2"),
            ];
        }
        other => {
            return Err(gentab_core::Error::WrongCase(format!(
                "appendix suite needs a rank-5 case, not {}",
                other
            )))
        }
    }

    for (word, values, stem) in [
        (coxeter_word, coxeter_values, "coxeter-word"),
        (sub_word, sub_values, "length-4-word"),
    ] {
        let letters = spec.parse_word(word)?;
        for (label, expected) in values {
            let id = format!("{}/{}", stem, label);
            match symbols::Bipartition::parse(label).and_then(|bp| spec.char_value(&bp, &letters)) {
                Ok(v) => c.eq(&id, expected.to_string(), v.to_string()),
                Err(e) => c.error(&id, e.to_string()),
            }
        }
    }

    // sign pipeline: realness forces +-1, the +1 convention gives the table
    let instances = vec![
        build_instance(case, ClassTag::Reg82)?,
        build_instance(case, ClassTag::Sub6211)?,
    ];
    let plus = SignState::both_plus();
    c.eq(
        "rhs/82/positive",
        "2*q^5".to_string(),
        rhs_star(&instances[0], &plus, 1)?.to_string(),
    );
    c.eq(
        "rhs/82/negative",
        "0".to_string(),
        rhs_star(&instances[0], &plus, -1)?.to_string(),
    );
    c.eq(
        "rhs/6211/positive",
        "2*q^6 + 2*q^5".to_string(),
        rhs_star(&instances[1], &plus, 1)?.to_string(),
    );
    c.eq(
        "rhs/6211/negative",
        "0".to_string(),
        rhs_star(&instances[1], &plus, -1)?.to_string(),
    );
    match solve_signs(&instances) {
        Ok(out) => {
            c.eq(
                "signs",
                "gamma_82=+1 gamma_6211=+1".to_string(),
                format!(
                    "gamma_82={:+} gamma_6211={:+}",
                    out.signs.gamma_82.unwrap(),
                    out.signs.gamma_6211.unwrap()
                ),
            );
            let f1: Vec<String> = out.table4.rows[0].1.iter().map(|p| p.to_string()).collect();
            let f2: Vec<String> = out.table4.rows[1].1.iter().map(|p| p.to_string()).collect();
            c.eq(
                "table4/f1",
                "q^2, -q^2, q^3, -q^3, 0".to_string(),
                f1.join(", "),
            );
            c.eq("table4/f2", "0, 0, q^4, -q^4, 0".to_string(), f2.join(", "));
        }
        Err(e) => c.error("solve-signs", e.to_string()),
    }

    Ok(c.finish(&format!("appendix-{}", case)))
}

/// Expected rows of the 6 x 9 linear-character table.
const TABLE1_EXPECTED: [[&str; 9]; 6] = [
    ["1", "t", "t^2", "1", "t", "t^2", "1", "t", "t^2"],
    ["1", "t^2", "t", "1", "t^2", "t", "1", "t^2", "t"],
    ["1", "t", "t^2", "t", "t^2", "1", "t^2", "1", "t"],
    ["1", "t^2", "t", "t^2", "t", "1", "t", "1", "t^2"],
    ["1", "t", "t^2", "t^2", "1", "t", "t", "t^2", "1"],
    ["1", "t^2", "t", "t", "1", "t^2", "t^2", "t", "1"],
];

/// Expected rows of the 9 x 9 basis table (three blocks of three classes).
fn table3_expected() -> Vec<Vec<String>> {
    let zero = ["0", "0", "0"];
    let chi0 = ["1", "1", "1"];
    let chi1 = ["q^3", "q^3*t", "q^3*t^2"];
    let chi2 = ["q^3", "q^3*t^2", "q^3*t"];
    let mut rows = Vec::new();
    for block in 0..3 {
        for pattern in [chi0, chi1, chi2] {
            let mut row = Vec::new();
            for b in 0..3 {
                row.extend(
                    (if b == block { pattern } else { zero })
                        .iter()
                        .map(|s| s.to_string()),
                );
            }
            rows.push(row);
        }
    }
    rows
}

fn e6_tables(q: Option<u64>) -> Result<SuiteReport> {
    let mut c = Checker::new();

    // Table 1, entry for entry
    let (columns, rows) = sigma::table1();
    c.eq(
        "table1/shape",
        "6x9".to_string(),
        format!("{}x{}", rows.len(), columns.len()),
    );
    for (row, expected) in rows.iter().zip(TABLE1_EXPECTED.iter()) {
        let got: Vec<String> = row.1.iter().map(|v| v.to_string()).collect();
        let want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        c.eq(
            &format!("table1/{}", row.0),
            want.join(", "),
            got.join(", "),
        );
    }

    // the 2 x 3 cuspidal block on the 3-class splitting
    let two = sigma::cuspidal_two_by_three()?;
    c.eq(
        "cuspidal2x3/chi1",
        "q^3, q^3*t, q^3*t^2".to_string(),
        two.rows[0]
            .1
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    c.eq(
        "cuspidal2x3/chi2",
        "q^3, q^3*t^2, q^3*t".to_string(),
        two.rows[1]
            .1
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    c.eq(
        "cuspidal2x3/columns",
        "C_1, C_g0, C_g0^2".to_string(),
        two.columns.join(", "),
    );

    // the 9 x 9 basis table; the scenario generator itself asserts that the
    // averaging route and the direct block construction agree
    match sigma::e6_scenario(4, false) {
        Ok(rep) => {
            c.eq(
                "table3/shape",
                "9x9".to_string(),
                format!("{}x{}", rep.basis.rows.len(), rep.basis.columns.len()),
            );
            for (row, expected) in rep.basis.rows.iter().zip(table3_expected()) {
                let got: Vec<String> = row.1.iter().map(|p| p.to_string()).collect();
                c.eq(
                    &format!("table3/{}", row.0),
                    expected.join(", "),
                    got.join(", "),
                );
            }
            c.ok(
                "table3/coset-average-agrees",
                true,
                "scenario generation asserts both construction paths",
            );
        }
        Err(e) => c.error("table3", e.to_string()),
    }

    // twist eigenvalues: theta for the odd-indexed rows, theta^2 for their
    // conjugates
    let desc = sigma::SigmaDescriptor::e6(true, "eigenvalues");
    let psis = desc.linear_characters_nontrivial_on_c3()?;
    for (i, psi) in psis.iter().enumerate() {
        let expected = if i % 2 == 0 {
            CycQ::theta()
        } else {
            CycQ::theta_sq()
        };
        match desc.twist_eigenvalue(psi) {
            Ok(lam) => c.eq(
                &format!("twist-eigenvalue/{}", psi.name),
                expected.to_string(),
                lam.to_string(),
            ),
            Err(e) => c.error(&format!("twist-eigenvalue/{}", psi.name), e.to_string()),
        }
    }

    // gamma action: involution fixing the g0-powers, swapping a and a^2
    match desc.gamma_action() {
        Ok(gamma) => {
            let split = desc.split_classes();
            let fixed = (0..3).all(|i| gamma[i] == i);
            c.ok("gamma/fixes-g0-coset", fixed, "classes C_1, C_g0, C_g0^2");
            let involution = (0..9).all(|i| gamma[gamma[i]] == i);
            c.ok("gamma/involution", involution, "gamma^2 = id");
            let a_pos = split.labels.iter().position(|l| l == "C_a").unwrap();
            let a2_pos = split.labels.iter().position(|l| l == "C_a^2").unwrap();
            c.ok(
                "gamma/swaps-a-cosets",
                gamma[a_pos] == a2_pos,
                "C_a <-> C_a^2",
            );
            let chi1 = desc.characteristic_function(&psis[0])?;
            let invariant = (0..9).all(|i| chi1.values()[i] == chi1.values()[gamma[i]]);
            c.ok("gamma/chi1-invariant", invariant, "chi1 o gamma = chi1");
        }
        Err(e) => c.error("gamma", e.to_string()),
    }

    // optional concrete-q scenario checks
    if let Some(q) = q {
        for twisted in [false, true] {
            let id = format!(
                "scenario/q={}/{}",
                q,
                if twisted { "twisted" } else { "split" }
            );
            match sigma::e6_scenario(q, twisted) {
                Ok(rep) => {
                    let criterion = if twisted {
                        (q + 1) % 3 == 0
                    } else {
                        (q - 1) % 3 == 0
                    };
                    c.eq(
                        &format!("{}/trivial", id),
                        criterion.to_string(),
                        rep.k_action_trivial.to_string(),
                    );
                    c.eq(
                        &format!("{}/classes", id),
                        if criterion { "9" } else { "3" }.to_string(),
                        rep.class_count.to_string(),
                    );
                }
                Err(e) => c.error(&id, e.to_string()),
            }
        }
    }

    Ok(c.finish("e6-tables"))
}

fn d4_tables() -> Result<SuiteReport> {
    let mut c = Checker::new();
    let (table, basis) = sigma::d4_two_class_table()?;
    c.eq("classes", "C_1, C_a".to_string(), basis.columns.join(", "));
    c.eq(
        "centralizers",
        "2*q^4, 2*q^4".to_string(),
        table
            .classes()
            .iter()
            .map(|r| r.centralizer.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    c.eq(
        "chi",
        "q^2, -q^2".to_string(),
        basis.rows[1]
            .1
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    // norm 1 identically in q
    let chi = ClassFunction::new(table.clone(), basis.rows[1].1.clone())?;
    c.eq(
        "norm",
        "1".to_string(),
        chi.inner_product(&chi)?.to_string(),
    );
    let desc = sigma::SigmaDescriptor::d4("suite");
    c.eq(
        "split-count",
        "2".to_string(),
        desc.split_classes().reps.len().to_string(),
    );
    c.eq(
        "fixed-points",
        "2".to_string(),
        desc.fixed_point_count().to_string(),
    );
    Ok(c.finish("d4-tables"))
}

fn fourier() -> Result<SuiteReport> {
    let mut c = Checker::new();
    let cases = [
        Case::D4Split,
        Case::D4Twisted,
        Case::D5Split,
        Case::D5Twisted,
    ];
    let expected_counts = [14usize, 10, 20, 20];
    for (case, expected) in cases.iter().zip(expected_counts) {
        let basis = symbols::enumerate_unipotent(*case);
        c.eq(
            &format!("labels/{}", case),
            expected.to_string(),
            basis.labels.len().to_string(),
        );
    }
    for case in cases {
        let fs = symbols::f_basis(case);
        for which in 1..=symbols::family_count(case) {
            let fam = symbols::family_fourier(case, which)?;
            let id = |part: &str| format!("{}/{}/{}", case, fam.name, part);
            let m = &fam.matrix;
            let symmetric = (0..4).all(|i| (0..4).all(|j| m[i][j] == m[j][i]));
            c.ok(&id("symmetric"), symmetric, "M = M^T");
            let mut involutive = true;
            let mut orthonormal = true;
            for i in 0..4 {
                for j in 0..4 {
                    let dot = (0..4).fold(CycQ::zero(), |acc, k| &acc + &(&m[i][k] * &m[k][j]));
                    if dot.is_one() != (i == j) || (!dot.is_zero() && i != j) {
                        involutive = false;
                    }
                    let row_dot =
                        (0..4).fold(CycQ::zero(), |acc, k| &acc + &(&m[i][k] * &m[j][k].conj()));
                    if row_dot.is_one() != (i == j) || (!row_dot.is_zero() && i != j) {
                        orthonormal = false;
                    }
                }
            }
            c.ok(&id("involutive"), involutive, "M^2 = I");
            c.ok(&id("orthonormal-rows"), orthonormal, "rows orthonormal");
            // f-vector: unit norm, orthogonal to every uniform-span row
            let norm = fam
                .f_signs
                .iter()
                .fold(CycQ::zero(), |acc, v| &acc + &(v * v));
            c.ok(&id("f-unit-norm"), norm.is_one(), "sum of squares = 1");
            let mut orth = true;
            for (row, role) in m.iter().zip(&fam.row_roles) {
                if *role == RowRole::NonUniform {
                    continue;
                }
                let dot = row
                    .iter()
                    .zip(&fam.f_signs)
                    .fold(CycQ::zero(), |acc, (a, b)| &acc + &(a * b));
                if !dot.is_zero() {
                    orth = false;
                }
            }
            c.ok(&id("f-orthogonal-to-uniform-span"), orth, "f . row = 0");
        }
        // disjoint supports give <f1, f2> = 0 over the unipotent basis
        if fs.len() == 2 {
            let dot = fs[0]
                .coeffs
                .iter()
                .zip(&fs[1].coeffs)
                .fold(CycQ::zero(), |acc, (a, b)| &acc + &(a * &b.conj()));
            c.ok(
                &format!("{}/f1-f2-orthogonal", case),
                dot.is_zero(),
                "<f1,f2> = 0",
            );
        }
    }
    Ok(c.finish("fourier"))
}

fn coxeter_counts() -> Result<SuiteReport> {
    let mut c = Checker::new();
    let d4 = CoxeterGroup::new(CoxeterDatum::d(4, DiagramAut::Identity)?)?;
    let d5 = CoxeterGroup::new(CoxeterDatum::d(5, DiagramAut::Identity)?)?;
    let b4 = CoxeterGroup::new(CoxeterDatum::b(4)?)?;
    c.eq("order/D4", 192usize, d4.order());
    c.eq("order/D5", 1920usize, d5.order());
    c.eq("order/B4", 384usize, b4.order());
    let d4_twisted = CoxeterGroup::new(CoxeterDatum::d(4, DiagramAut::DForkSwap)?)?;
    c.eq(
        "f-classes/D4-twisted",
        9usize,
        d4_twisted.f_conjugacy_classes().len(),
    );
    for (name, group) in [("D4", &d4), ("B4", &b4)] {
        let via_f = group.f_conjugacy_classes();
        let brute = group.conjugacy_classes_bruteforce();
        c.eq(
            &format!("f-classes-vs-bruteforce/{}", name),
            brute.len(),
            via_f.len(),
        );
        c.ok(
            &format!("f-classes-partition/{}", name),
            via_f == brute,
            "identical partitions",
        );
    }
    // the trivial-character sanity anchors for the word conventions
    let d5_spec = HeckeSpec::d(5)?;
    let w = d5_spec.parse_word("1,2,3,4,5")?;
    let trivial = symbols::Bipartition::parse("5.")?;
    c.eq(
        "word-length-anchor",
        "q^5".to_string(),
        d5_spec.char_value(&trivial, &w)?.to_string(),
    );
    Ok(c.finish("coxeter-counts"))
}
