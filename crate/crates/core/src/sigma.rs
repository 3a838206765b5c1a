//! F-stable class splitting via abelian component groups.
//!
//! An F-stable class Sigma is modelled by its component group A (a product
//! of cyclic factors), the Frobenius action on A, the distinguished image
//! g0bar, and the codimension datum (dim G - dim Sigma)/2. The classes into
//! which Sigma^F splits are the twisted-conjugacy classes of A, i.e. the
//! cosets of the image of a -> a^{-1} F(a); the class count is |A^F|.
//!
//! Characteristic functions of cuspidal character sheaves take the value
//! q^half_codim * psi(a) on the class C_a; the twisting operator sends C_a
//! to C_{g0bar * a} and has eigenvalue psi(g0bar) on such a function.
//! Centralizer orders follow the |A^F| * q^(2*half_codim) pattern of the
//! regular-element cases in scope.

use std::sync::Arc;

use crate::classfun::{indicator, ClassFunction, ClassRecord, ClassTable};
use crate::exactnum::{CycQ, PolQ};
use crate::{Error, Result};

/// Element of a product of cyclic groups, written additively.
pub type Elem = Vec<u32>;

/// An abelian component group with a Frobenius endomorphism and marked data.
#[derive(Clone, Debug)]
pub struct CompGroup {
    /// Cyclic factor orders, e.g. [3, 3] or [2].
    pub orders: Vec<u32>,
    /// Printable generator names, one per factor.
    pub gen_names: Vec<String>,
    /// Endomorphism matrix: image of e_j is sum_i frob[i][j] e_i.
    pub frob: Vec<Vec<u32>>,
    /// Distinguished image of g0; must be F-fixed.
    pub g0bar: Elem,
    /// Marked element generating the complement (the E6 cases).
    pub marked_a: Option<Elem>,
}

impl CompGroup {
    pub fn new(
        orders: Vec<u32>,
        gen_names: Vec<String>,
        frob: Vec<Vec<u32>>,
        g0bar: Elem,
        marked_a: Option<Elem>,
    ) -> Result<Self> {
        if orders.is_empty() || orders.len() != gen_names.len() {
            return Err(Error::SizeMismatch("orders vs generator names".to_string()));
        }
        let g = CompGroup {
            orders,
            gen_names,
            frob,
            g0bar,
            marked_a,
        };
        // F must be an automorphism fixing g0bar
        let elems = g.elements();
        let mut images: Vec<Elem> = elems.iter().map(|e| g.apply_frob(e)).collect();
        images.sort();
        images.dedup();
        if images.len() != elems.len() {
            return Err(Error::Unsatisfiable(
                "frobenius is not bijective".to_string(),
            ));
        }
        if g.apply_frob(&g.g0bar) != g.g0bar {
            return Err(Error::Unsatisfiable("g0bar must be F-fixed".to_string()));
        }
        if let Some(a) = &g.marked_a {
            // a must lie outside <g0bar> and together they must span
            let span_g0: Vec<Elem> = (0..g.order_of(&g.g0bar))
                .map(|k| g.scalar(&g.g0bar, k))
                .collect();
            if span_g0.contains(a) {
                return Err(Error::Unsatisfiable(
                    "marked element lies in <g0bar>".to_string(),
                ));
            }
            let mut span = Vec::new();
            for i in 0..g.order_of(&g.g0bar) {
                for j in 0..g.order_of(a) {
                    span.push(g.add(&g.scalar(&g.g0bar, i), &g.scalar(a, j)));
                }
            }
            span.sort();
            span.dedup();
            if span.len() != elems.len() {
                return Err(Error::Unsatisfiable(
                    "<g0bar> x <a> does not span the group".to_string(),
                ));
            }
        }
        Ok(g)
    }

    /// The E6 component group C3 x C3' with g0bar = (1,0) and a = (0,1);
    /// F is the identity or inverts the second factor.
    pub fn e6(f_trivial: bool) -> CompGroup {
        let frob = if f_trivial {
            vec![vec![1, 0], vec![0, 1]]
        } else {
            vec![vec![1, 0], vec![0, 2]]
        };
        CompGroup::new(
            vec![3, 3],
            vec!["g0".to_string(), "a".to_string()],
            frob,
            vec![1, 0],
            Some(vec![0, 1]),
        )
        .expect("valid E6 component group")
    }

    /// The order-2 component group of the D4 regular unipotent class.
    /// The image of the base point is taken to be the nontrivial element.
    pub fn d4() -> CompGroup {
        CompGroup::new(vec![2], vec!["a".to_string()], vec![vec![1]], vec![1], None)
            .expect("valid D4 component group")
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product::<u32>() as usize
    }

    /// All elements as a mixed-radix counter with the first coordinate
    /// fastest: 1, g0, g0^2, a, g0 a, g0^2 a, a^2, ...
    pub fn elements(&self) -> Vec<Elem> {
        let total = self.size();
        let mut res = Vec::with_capacity(total);
        for mut k in 0..total as u32 {
            let mut e = Vec::with_capacity(self.orders.len());
            for &ord in &self.orders {
                e.push(k % ord);
                k /= ord;
            }
            res.push(e);
        }
        res
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.orders.len()]
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((a, b), &o)| (a + b) % o)
            .collect()
    }

    pub fn neg(&self, x: &Elem) -> Elem {
        x.iter()
            .zip(&self.orders)
            .map(|(a, &o)| (o - a) % o)
            .collect()
    }

    pub fn scalar(&self, x: &Elem, k: u32) -> Elem {
        x.iter()
            .zip(&self.orders)
            .map(|(a, &o)| (a * k) % o)
            .collect()
    }

    fn order_of(&self, x: &Elem) -> u32 {
        let mut acc = self.zero();
        for k in 1..=self.size() as u32 {
            acc = self.add(&acc, x);
            if acc == self.zero() {
                return k;
            }
        }
        unreachable!("element order divides the group order")
    }

    pub fn apply_frob(&self, x: &Elem) -> Elem {
        let n = self.orders.len();
        (0..n)
            .map(|i| {
                let mut acc = 0u32;
                for j in 0..n {
                    acc = (acc + self.frob[i][j] * x[j]) % self.orders[i];
                }
                acc
            })
            .collect()
    }

    /// Printable element name like `1`, `g0^2*a`.
    pub fn element_name(&self, x: &Elem) -> String {
        let mut parts = Vec::new();
        for ((coord, name), _) in x.iter().zip(&self.gen_names).zip(&self.orders) {
            match coord {
                0 => {}
                1 => parts.push(name.clone()),
                k => parts.push(format!("{}^{}", name, k)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A linear character of a CompGroup, as exponents against fixed primitive
/// roots per factor (order 1, 2 or 3 supported inside Q(t)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChar {
    pub name: String,
    pub exps: Vec<u32>,
}

impl LinearChar {
    pub fn value(&self, group: &CompGroup, x: &Elem) -> CycQ {
        let mut acc = CycQ::one();
        for ((e, coord), &ord) in self.exps.iter().zip(x).zip(&group.orders) {
            let root = match ord {
                1 => CycQ::one(),
                2 => CycQ::from_int(-1),
                3 => CycQ::theta(),
                _ => unreachable!("only factor orders 1, 2, 3 occur in scope"),
            };
            acc = &acc * &root.pow(e * coord);
        }
        acc
    }
}

/// The split classes of Sigma^F: ordered labels with representatives.
#[derive(Clone, Debug)]
pub struct SplitClasses {
    pub reps: Vec<Elem>,
    pub labels: Vec<String>,
    /// class index of each element, aligned with `CompGroup::elements()`.
    pub class_of: Vec<usize>,
}

/// An F-stable class model: component group, codimension, case metadata.
#[derive(Clone, Debug)]
pub struct SigmaDescriptor {
    pub comp: CompGroup,
    pub half_codim: u32,
    pub meta: String,
}

impl SigmaDescriptor {
    pub fn e6(f_trivial: bool, meta: impl Into<String>) -> Self {
        SigmaDescriptor {
            comp: CompGroup::e6(f_trivial),
            half_codim: 3,
            meta: meta.into(),
        }
    }

    pub fn d4(meta: impl Into<String>) -> Self {
        SigmaDescriptor {
            comp: CompGroup::d4(),
            half_codim: 2,
            meta: meta.into(),
        }
    }

    /// Twisted-conjugacy classes of A: cosets of the image of
    /// a -> -a + F(a), labelled C_<rep> in element order.
    pub fn split_classes(&self) -> SplitClasses {
        let g = &self.comp;
        let elems = g.elements();
        let mut image: Vec<Elem> = elems
            .iter()
            .map(|x| g.add(&g.neg(x), &g.apply_frob(x)))
            .collect();
        image.sort();
        image.dedup();
        let mut reps: Vec<Elem> = Vec::new();
        let mut class_of = vec![usize::MAX; elems.len()];
        for (i, e) in elems.iter().enumerate() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let cid = reps.len();
            for delta in &image {
                let member = g.add(e, delta);
                let j = elems.iter().position(|x| x == &member).unwrap();
                class_of[j] = cid;
            }
            reps.push(e.clone());
        }
        let labels = reps
            .iter()
            .map(|r| format!("C_{}", g.element_name(r)))
            .collect();
        SplitClasses {
            reps,
            labels,
            class_of,
        }
    }

    /// Count of F-fixed points |A^F| (equals the class count).
    pub fn fixed_point_count(&self) -> usize {
        self.comp
            .elements()
            .iter()
            .filter(|e| &self.comp.apply_frob(e) == *e)
            .count()
    }

    /// The class table of the splitting. Centralizer orders are
    /// |A^F| * q^(2*half_codim); in the marked E6 case classes carry
    /// coset and semisimple-part tags s0/s1/s2 by the a-exponent.
    pub fn class_table(&self) -> Result<Arc<ClassTable>> {
        let split = self.split_classes();
        let count = split.reps.len();
        let z = PolQ::q_pow(2 * self.half_codim as usize).scalar_mul(&CycQ::from_int(count as i64));
        let tagged = self.comp.marked_a.is_some() && count == self.comp.size();
        let records = split
            .reps
            .iter()
            .zip(&split.labels)
            .map(|(rep, label)| {
                let rec = ClassRecord::new(label.clone(), z.clone());
                if tagged {
                    let tag = format!("s{}", rep[1]);
                    rec.with_tags(&tag, &tag)
                } else {
                    rec
                }
            })
            .collect();
        ClassTable::new(records)
    }

    /// The twisting operator on class labels: C_a -> C_{g0bar + a}.
    pub fn twist(&self, split: &SplitClasses, class: usize) -> usize {
        let g = &self.comp;
        let moved = g.add(&g.g0bar, &split.reps[class]);
        let elems = g.elements();
        let idx = elems.iter().position(|x| x == &moved).unwrap();
        split.class_of[idx]
    }

    /// Linear characters that are nontrivial on <g0bar> (the E6 shape):
    /// psi1..psi6 ordered as in the fixed table, with conjugate pairs
    /// (psi1,psi2), (psi3,psi4), (psi5,psi6).
    pub fn linear_characters_nontrivial_on_c3(&self) -> Result<Vec<LinearChar>> {
        if self.comp.orders != vec![3, 3] || self.comp.g0bar != vec![1, 0] {
            return Err(Error::Unsatisfiable(
                "nontrivial-on-C3 characters need the C3 x C3 shape".to_string(),
            ));
        }
        let pairs = [(1, 0), (2, 0), (1, 1), (2, 2), (1, 2), (2, 1)];
        Ok(pairs
            .iter()
            .enumerate()
            .map(|(i, &(j, k))| LinearChar {
                name: format!("psi{}", i + 1),
                exps: vec![j, k],
            })
            .collect())
    }

    fn check_f_class_constant(&self, psi: &LinearChar, split: &SplitClasses) -> Result<()> {
        let elems = self.comp.elements();
        for cid in 0..split.reps.len() {
            let rep_val = psi.value(&self.comp, &split.reps[cid]);
            for (e, &c) in elems.iter().zip(&split.class_of) {
                if c == cid && psi.value(&self.comp, e) != rep_val {
                    return Err(Error::NotFClassConstant);
                }
            }
        }
        Ok(())
    }

    /// Characteristic function: value q^half_codim * psi(a) on C_a.
    /// Errors if psi is not constant on the F-conjugacy classes.
    pub fn characteristic_function(&self, psi: &LinearChar) -> Result<ClassFunction> {
        let split = self.split_classes();
        self.check_f_class_constant(psi, &split)?;
        let table = self.class_table()?;
        let values = split
            .reps
            .iter()
            .map(|rep| {
                PolQ::q_pow(self.half_codim as usize).scalar_mul(&psi.value(&self.comp, rep))
            })
            .collect();
        ClassFunction::new(table, values)
    }

    /// The twist eigenvalue psi(g0bar); asserts chi(t1(C)) = lambda chi(C)
    /// classwise before returning it.
    pub fn twist_eigenvalue(&self, psi: &LinearChar) -> Result<CycQ> {
        let split = self.split_classes();
        self.check_f_class_constant(psi, &split)?;
        let chi = self.characteristic_function(psi)?;
        let lambda = psi.value(&self.comp, &self.comp.g0bar);
        for cid in 0..split.reps.len() {
            let moved = self.twist(&split, cid);
            let lhs = &chi.values()[moved];
            let rhs = chi.values()[cid].scalar_mul(&lambda);
            if *lhs != rhs {
                return Err(Error::InconsistentInstance(format!(
                    "twist eigenvalue fails at class {}",
                    split.labels[cid]
                )));
            }
        }
        Ok(lambda)
    }

    /// The graph-automorphism action on class labels for the marked
    /// E6 case with trivial F: fixes C_{g0^i}, swaps the a and a^2 cosets.
    pub fn gamma_action(&self) -> Result<Vec<usize>> {
        let g = &self.comp;
        if g.orders != vec![3, 3] || g.marked_a.is_none() {
            return Err(Error::WrongCase(
                "gamma action needs the marked E6 shape".to_string(),
            ));
        }
        let split = self.split_classes();
        if split.reps.len() != 9 {
            return Err(Error::WrongCase(
                "gamma action needs the 9-class splitting".to_string(),
            ));
        }
        let elems = g.elements();
        let perm: Vec<usize> = split
            .reps
            .iter()
            .map(|rep| {
                let image = vec![rep[0], (2 * rep[1]) % 3];
                let idx = elems.iter().position(|x| x == &image).unwrap();
                split.class_of[idx]
            })
            .collect();
        for (i, &j) in perm.iter().enumerate() {
            if perm[j] != i {
                return Err(Error::InconsistentInstance(
                    "gamma action is not an involution".to_string(),
                ));
            }
        }
        Ok(perm)
    }
}

/// Number of unipotent characters of the adjoint E6 groups (a stored
/// scenario constant).
pub const E6_UNIPOTENT_CHARACTER_COUNT: usize = 30;

/// A named table of rows over labelled columns.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisTable {
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<PolQ>)>,
}

/// Report of the E6 scenario logic for a concrete q.
#[derive(Clone, Debug)]
pub struct ScenarioReport {
    pub q: u64,
    pub twisted: bool,
    pub k_action_trivial: bool,
    pub class_count: usize,
    pub dim_cf: usize,
    pub f_invariant_cuspidal_count: usize,
    pub basis: BasisTable,
}

fn is_prime_power_not_three(q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::InvalidQ(format!("{} is not a prime power", q)));
    }
    if q.is_multiple_of(3) {
        return Err(Error::InvalidQ(format!("{} is divisible by 3", q)));
    }
    let mut p = 0u64;
    let mut m = q;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            p = d;
            while m.is_multiple_of(d) {
                m /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        p = q; // q itself is prime
        m = 1;
    }
    if m != 1 {
        return Err(Error::InvalidQ(format!("{} is not a prime power", q)));
    }
    Ok(p)
}

/// Linear characters lambda_0, lambda_1, lambda_2 of the coset group as
/// class functions over the 9-class table, plus their values at s_i.
fn coset_characters(table: &Arc<ClassTable>) -> Result<(Vec<ClassFunction>, Vec<Vec<CycQ>>)> {
    let mut lams = Vec::new();
    for i in 0..3i64 {
        let values = table
            .classes()
            .iter()
            .map(|rec| {
                let tag = rec.coset.as_deref().expect("tagged table");
                let block: i64 = tag[1..].parse().expect("sX tag");
                // lambda_i(s_1) = theta^i, lambda_i(s_2) = theta^{-i}
                let exp = match block {
                    0 => 0,
                    1 => i,
                    _ => -i,
                };
                PolQ::constant(CycQ::theta_pow(exp))
            })
            .collect();
        lams.push(ClassFunction::new(table.clone(), values)?);
    }
    let values_at: Vec<Vec<CycQ>> = (0..3i64)
        .map(|block| {
            (0..3i64)
                .map(|i| {
                    CycQ::theta_pow(match block {
                        0 => 0,
                        1 => i,
                        _ => -i,
                    })
                })
                .collect()
        })
        .collect();
    Ok((lams, values_at))
}

/// The scenario generator: K-action triviality, class counts, the basis
/// table (3-class or 9-class), and the F-invariant cuspidal-sheaf count.
pub fn e6_scenario(q: u64, twisted: bool) -> Result<ScenarioReport> {
    is_prime_power_not_three(q)?;
    let trivial = if twisted {
        (q + 1).is_multiple_of(3)
    } else {
        (q - 1).is_multiple_of(3)
    };
    let meta = format!(
        "e6 {} q={} (mod 3 = {})",
        if twisted { "twisted" } else { "split" },
        q,
        q % 3
    );
    let desc = SigmaDescriptor::e6(trivial, meta);
    let split = desc.split_classes();
    let table = desc.class_table()?;
    let psis = desc.linear_characters_nontrivial_on_c3()?;
    let f_invariant = psis
        .iter()
        .filter(|psi| desc.check_f_class_constant(psi, &split).is_ok())
        .count();

    let basis = if trivial {
        // nine classes: generate chi_k^{(s_i)} via coset averaging from the
        // full-support rows, and independently by direct block construction
        let chi0_full = indicator(
            &table,
            &split.labels.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        )?;
        let chi1_full = desc.characteristic_function(&psis[0])?;
        let chi2_full = desc.characteristic_function(&psis[1])?;
        let (lams, values_at) = coset_characters(&table)?;
        let mut rows = Vec::new();
        for (i, vals) in values_at.iter().enumerate() {
            let s_tag = format!("s{}", i);
            for (name, full) in [
                (format!("chi0^(s{})", i), &chi0_full),
                (format!("chi1^(s{})", i), &chi1_full),
                (format!("chi2^(s{})", i), &chi2_full),
            ] {
                let averaged = full.coset_average(&s_tag, &lams, vals)?;
                // direct construction: restrict the full row to the block
                let direct: Vec<PolQ> = table
                    .classes()
                    .iter()
                    .zip(full.values())
                    .map(|(rec, v)| {
                        if rec.coset.as_deref() == Some(s_tag.as_str()) {
                            v.clone()
                        } else {
                            PolQ::zero()
                        }
                    })
                    .collect();
                let direct = ClassFunction::new(table.clone(), direct)?;
                if averaged != direct {
                    return Err(Error::InconsistentInstance(format!(
                        "averaging and direct construction disagree for {}",
                        name
                    )));
                }
                rows.push((name, averaged.values().to_vec()));
            }
        }
        BasisTable {
            columns: split.labels.clone(),
            rows,
        }
    } else {
        // three classes: chi0 = indicator, chi1, chi2 the two F-invariant
        // characteristic functions
        let chi0 = indicator(
            &table,
            &split.labels.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        )?;
        let chi1 = desc.characteristic_function(&psis[0])?;
        let chi2 = desc.characteristic_function(&psis[1])?;
        BasisTable {
            columns: split.labels.clone(),
            rows: vec![
                ("chi0".to_string(), chi0.values().to_vec()),
                ("chi1".to_string(), chi1.values().to_vec()),
                ("chi2".to_string(), chi2.values().to_vec()),
            ],
        }
    };

    Ok(ScenarioReport {
        q,
        twisted,
        k_action_trivial: trivial,
        class_count: split.reps.len(),
        dim_cf: split.reps.len(),
        f_invariant_cuspidal_count: f_invariant,
        basis,
    })
}

/// The 6 x 9 table of linear-character values (columns in element order
/// 1, g0, g0^2, a, g0 a, g0^2 a, a^2, g0 a^2, g0^2 a^2).
pub fn table1() -> (Vec<String>, Vec<(String, Vec<CycQ>)>) {
    let desc = SigmaDescriptor::e6(true, "table1");
    let elems = desc.comp.elements();
    let columns = elems.iter().map(|e| desc.comp.element_name(e)).collect();
    let psis = desc.linear_characters_nontrivial_on_c3().unwrap();
    let rows = psis
        .iter()
        .map(|psi| {
            (
                psi.name.clone(),
                elems.iter().map(|e| psi.value(&desc.comp, e)).collect(),
            )
        })
        .collect();
    (columns, rows)
}

/// The 2 x 3 table of cuspidal characteristic functions on the 3-class
/// splitting (rows chi1, chi2).
pub fn cuspidal_two_by_three() -> Result<BasisTable> {
    let desc = SigmaDescriptor::e6(false, "3-class cuspidal block");
    let split = desc.split_classes();
    let psis = desc.linear_characters_nontrivial_on_c3()?;
    let chi1 = desc.characteristic_function(&psis[0])?;
    let chi2 = desc.characteristic_function(&psis[1])?;
    Ok(BasisTable {
        columns: split.labels,
        rows: vec![
            ("chi1".to_string(), chi1.values().to_vec()),
            ("chi2".to_string(), chi2.values().to_vec()),
        ],
    })
}

/// The two-class D4 regular-unipotent table: indicator and the cuspidal
/// characteristic function (q^2, -q^2), centralizer orders 2q^4.
pub fn d4_two_class_table() -> Result<(Arc<ClassTable>, BasisTable)> {
    let desc = SigmaDescriptor::d4("d4 regular unipotent");
    let split = desc.split_classes();
    let table = desc.class_table()?;
    let sign = LinearChar {
        name: "sign".to_string(),
        exps: vec![1],
    };
    let chi = desc.characteristic_function(&sign)?;
    let eps = indicator(
        &table,
        &split.labels.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
    )?;
    Ok((
        table,
        BasisTable {
            columns: split.labels,
            rows: vec![
                ("eps".to_string(), eps.values().to_vec()),
                ("chi".to_string(), chi.values().to_vec()),
            ],
        },
    ))
}
