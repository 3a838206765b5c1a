//! Iwahori-Hecke algebra character values for types B_n (two parameters)
//! and D_n (equal parameters), via seminormal matrix representations on
//! standard bitableaux.
//!
//! Type B_n has generators t, u_1, ..., u_{n-1} with quadratic relations
//! (T_t - Q)(T_t + 1) = 0 and (T_u - q)(T_u + 1) = 0. The irreducible
//! representation attached to an ordered bipartition (lambda, mu) acts on
//! standard bitableaux; the entry holding k carries the content Q*q^(c-r)
//! (first component) or -q^(c-r) (second component), and
//!
//!   T_i v = (q-1)b/(b-a) v + (q b - a)/(b - a) v'    (a, b the contents of
//!                                                     i, i+1; v' the swap)
//!
//! off the trivial same-row (eigenvalue q) and same-column (eigenvalue -1)
//! cases. Type D_n is realized inside B_n with Q = 1: the negated
//! transposition generator s2 maps to T_t T_{u1} T_t and the chain to the
//! u_i; a D-character is the restriction of a B-character with unordered
//! label {lambda, mu}, lambda != mu.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational};

use crate::coxeter::{CoxeterDatum, CoxeterGroup, DiagramAut, WFamily};
use crate::exactnum::{CycQ, PolQ, RatQ};
use crate::symbols::Bipartition;
use crate::{Error, Result};

/// Hecke algebra family: two-parameter B, or equal-parameter D.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeFamily {
    B,
    D,
}

/// An algebra specification: family, rank, and the parameter of the
/// distinguished generator (q^2 encodes the twisted weight on a fused node;
/// 1 encodes the D-restriction device and is set automatically for D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSpec {
    pub family: HeckeFamily,
    pub rank: usize,
    pub big_q: PolQ,
}

impl HeckeSpec {
    pub fn b(rank: usize, big_q: PolQ) -> Result<Self> {
        if !(1..=6).contains(&rank) {
            return Err(Error::UnsupportedRank(format!("B{}", rank)));
        }
        Ok(HeckeSpec {
            family: HeckeFamily::B,
            rank,
            big_q,
        })
    }

    pub fn d(rank: usize) -> Result<Self> {
        if !(2..=6).contains(&rank) {
            return Err(Error::UnsupportedRank(format!("D{}", rank)));
        }
        Ok(HeckeSpec {
            family: HeckeFamily::D,
            rank,
            big_q: PolQ::one(),
        })
    }

    /// Parse a comma-separated generator word: `t,1,2,3` for type B
    /// (`t` then chain indices), `1,2,3,4,5` for type D (diagram labels).
    pub fn parse_word(&self, input: &str) -> Result<Vec<Letter>> {
        let input = input.trim();
        if input.is_empty() {
            return Ok(Vec::new());
        }
        input
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match self.family {
                    HeckeFamily::B => {
                        if tok == "t" {
                            Ok(Letter::T)
                        } else {
                            let i: usize = tok
                                .parse()
                                .map_err(|_| Error::InvalidLabel(tok.to_string()))?;
                            if (1..self.rank).contains(&i) {
                                Ok(Letter::U(i))
                            } else {
                                Err(Error::InvalidLabel(tok.to_string()))
                            }
                        }
                    }
                    HeckeFamily::D => {
                        let i: usize = tok
                            .parse()
                            .map_err(|_| Error::InvalidLabel(tok.to_string()))?;
                        if (1..=self.rank).contains(&i) {
                            Ok(Letter::S(i))
                        } else {
                            Err(Error::InvalidLabel(tok.to_string()))
                        }
                    }
                }
            })
            .collect()
    }

    /// Exact character value: trace of the word product in the seminormal
    /// representation. The result is asserted to be a polynomial.
    pub fn char_value(&self, label: &Bipartition, word: &[Letter]) -> Result<PolQ> {
        let expected: u32 = self.rank as u32;
        if label.size() != expected {
            return Err(Error::SizeMismatch(format!(
                "|{}| = {} but rank is {}",
                label,
                label.size(),
                self.rank
            )));
        }
        match self.family {
            HeckeFamily::B => {
                let rep = seminormal_rep(self.rank, &self.big_q, label)?;
                let m = rep.word_matrix_b(word)?;
                trace_polynomial(&m, label)
            }
            HeckeFamily::D => {
                if label.lambda() == label.mu() {
                    return Err(Error::DegenerateDLabel(label.to_string()));
                }
                let rep = seminormal_rep(self.rank, &PolQ::one(), label)?;
                let m = rep.word_matrix_d(word)?;
                trace_polynomial(&m, label)
            }
        }
    }

    /// q=1 specialization of the trace, checked against the Weyl group
    /// character computed independently by border-strip recursion over the
    /// signed cycle type.
    pub fn q1_specialize_check(&self, label: &Bipartition, word: &[Letter]) -> Result<CycQ> {
        let trace = self.char_value(label, word)?;
        let one = BigRational::from_integer(BigInt::from(1));
        let specialized = trace.eval_rational(&one);

        let datum = match self.family {
            HeckeFamily::B => CoxeterDatum::new(WFamily::B, self.rank, DiagramAut::Identity)?,
            HeckeFamily::D => CoxeterDatum::new(WFamily::D, self.rank, DiagramAut::Identity)?,
        };
        let group = CoxeterGroup::new(datum)?;
        let indices: Vec<usize> = word
            .iter()
            .map(|l| match (self.family, l) {
                (HeckeFamily::B, Letter::T) => Ok(0),
                (HeckeFamily::B, Letter::U(i)) => Ok(*i),
                (HeckeFamily::D, Letter::S(i)) => Ok(*i - 1),
                _ => Err(Error::InvalidLabel(format!("{:?}", l))),
            })
            .collect::<Result<_>>()?;
        let w = group.word_to_element(&indices)?;
        let (pos, neg) = w.cycle_type();
        let expected = mn_character_value(label.lambda(), label.mu(), &pos, &neg);
        let expected = CycQ::from_rational(BigRational::from_integer(expected));
        if specialized != expected {
            return Err(Error::SpecializationMismatch(format!(
                "label {} word {:?}: trace(1) = {} vs group character {}",
                label, word, specialized, expected
            )));
        }
        Ok(specialized)
    }
}

/// One generator letter of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    /// Distinguished type-B generator.
    T,
    /// Chain transposition u_i = (i, i+1), type B.
    U(usize),
    /// Type-D diagram generator s_i.
    S(usize),
}

type Matrix = Vec<Vec<RatQ>>;

fn mat_identity(n: usize) -> Matrix {
    let mut m = vec![vec![RatQ::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = RatQ::one();
    }
    m
}

fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    let n = x.len();
    let mut out = vec![vec![RatQ::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &(&x[i][k] * &y[k][j]);
            }
        }
    }
    out
}

fn mat_trace(m: &Matrix) -> RatQ {
    (0..m.len()).fold(RatQ::zero(), |acc, i| &acc + &m[i][i])
}

fn trace_polynomial(m: &Matrix, label: &Bipartition) -> Result<PolQ> {
    let tr = mat_trace(m);
    tr.as_polynomial()
        .cloned()
        .ok_or_else(|| Error::NonPolynomialTrace(format!("label {}: trace {}", label, tr)))
}

/// Cell position of an entry: (component, row, column), all 0-based.
type Cell = (usize, usize, usize);

/// A standard bitableau, stored as the cell of each entry 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct BiTableau {
    cells: Vec<Cell>,
}

impl BiTableau {
    fn cell(&self, entry: usize) -> Cell {
        self.cells[entry - 1]
    }
}

/// All standard bitableaux of shape (lambda, mu), in a fixed recursion order.
fn standard_bitableaux(lambda: &[u32], mu: &[u32], n: usize) -> Vec<BiTableau> {
    let shape = [lambda.to_vec(), mu.to_vec()];
    let mut filled = [vec![0u32; lambda.len()], vec![0u32; mu.len()]];
    let mut cells = Vec::with_capacity(n);
    let mut out = Vec::new();
    fill(&shape, &mut filled, &mut cells, n, &mut out);
    out
}

fn fill(
    shape: &[Vec<u32>; 2],
    filled: &mut [Vec<u32>; 2],
    cells: &mut Vec<Cell>,
    n: usize,
    out: &mut Vec<BiTableau>,
) {
    if cells.len() == n {
        out.push(BiTableau {
            cells: cells.clone(),
        });
        return;
    }
    for comp in 0..2 {
        for row in 0..shape[comp].len() {
            let col = filled[comp][row];
            if col >= shape[comp][row] {
                continue;
            }
            if row > 0 && filled[comp][row - 1] <= col {
                continue;
            }
            filled[comp][row] += 1;
            cells.push((comp, row, col as usize));
            fill(shape, filled, cells, n, out);
            cells.pop();
            filled[comp][row] -= 1;
        }
    }
}

/// A seminormal representation: one matrix per type-B generator.
pub struct SeminormalRep {
    pub rank: usize,
    pub big_q: PolQ,
    pub label: Bipartition,
    tableaux: Vec<BiTableau>,
    /// index 0: T_t; index i >= 1: T_{u_i}.
    matrices: Vec<Matrix>,
}

/// Content of a cell: Q*q^(col-row) in component 1, -q^(col-row) in
/// component 2, as a rational function.
fn content(big_q: &PolQ, cell: Cell) -> RatQ {
    let (comp, row, col) = cell;
    let base = if comp == 0 {
        big_q.clone()
    } else {
        -PolQ::one()
    };
    let e = col as i64 - row as i64;
    if e >= 0 {
        RatQ::from_pol(&base * &PolQ::q_pow(e as usize))
    } else {
        RatQ::new(base, PolQ::q_pow((-e) as usize)).expect("q power nonzero")
    }
}

impl SeminormalRep {
    pub fn build(rank: usize, big_q: &PolQ, label: &Bipartition) -> Result<Arc<Self>> {
        if label.size() != rank as u32 {
            return Err(Error::SizeMismatch(format!(
                "|{}| = {} but rank is {}",
                label,
                label.size(),
                rank
            )));
        }
        let tableaux = standard_bitableaux(label.lambda(), label.mu(), rank);
        let dim = tableaux.len();
        let index: HashMap<&BiTableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let q = RatQ::from_pol(PolQ::q());
        let one = RatQ::one();

        let mut matrices = Vec::with_capacity(rank);
        // T_t: diagonal, eigenvalue = content of the cell holding 1
        let mut m_t = vec![vec![RatQ::zero(); dim]; dim];
        for (a, tab) in tableaux.iter().enumerate() {
            m_t[a][a] = content(big_q, tab.cell(1));
        }
        matrices.push(m_t);

        for i in 1..rank {
            let mut m = vec![vec![RatQ::zero(); dim]; dim];
            for (a, tab) in tableaux.iter().enumerate() {
                let (c1, r1, k1) = tab.cell(i);
                let (c2, r2, k2) = tab.cell(i + 1);
                if c1 == c2 && r1 == r2 {
                    m[a][a] = q.clone();
                    continue;
                }
                if c1 == c2 && k1 == k2 {
                    m[a][a] = -&one;
                    continue;
                }
                let mut swapped = tab.clone();
                swapped.cells.swap(i - 1, i);
                let b = *index.get(&swapped).expect("swap of a standard bitableau");
                let alpha = content(big_q, tab.cell(i));
                let beta = content(big_q, tab.cell(i + 1));
                let denom = (&beta - &alpha)
                    .inv()
                    .expect("distinct contents in a standard bitableau");
                m[a][a] = &(&(&q - &one) * &beta) * &denom;
                m[b][a] = &(&(&q * &beta) - &alpha) * &denom;
            }
            matrices.push(m);
        }
        Ok(Arc::new(SeminormalRep {
            rank,
            big_q: big_q.clone(),
            label: label.clone(),
            tableaux,
            matrices,
        }))
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Generator matrix: index 0 = T_t, index i = T_{u_i}.
    pub fn generator_matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    fn word_matrix_b(&self, word: &[Letter]) -> Result<Matrix> {
        let mut acc = mat_identity(self.dim());
        for l in word {
            let m = match l {
                Letter::T => &self.matrices[0],
                Letter::U(i) if (1..self.rank).contains(i) => &self.matrices[*i],
                other => return Err(Error::InvalidLabel(format!("{:?}", other))),
            };
            acc = mat_mul(&acc, m);
        }
        Ok(acc)
    }

    /// Word product for the D_n embedding: s1 -> u1, s2 -> t u1 t,
    /// s_i -> u_{i-1} for i >= 3. Requires big_q = 1.
    fn word_matrix_d(&self, word: &[Letter]) -> Result<Matrix> {
        assert!(self.big_q.is_one(), "type D uses the Q = 1 embedding");
        let mut acc = mat_identity(self.dim());
        for l in word {
            match l {
                Letter::S(1) => acc = mat_mul(&acc, &self.matrices[1]),
                Letter::S(2) => {
                    acc = mat_mul(&acc, &self.matrices[0]);
                    acc = mat_mul(&acc, &self.matrices[1]);
                    acc = mat_mul(&acc, &self.matrices[0]);
                }
                Letter::S(i) if (3..=self.rank).contains(i) => {
                    acc = mat_mul(&acc, &self.matrices[i - 1]);
                }
                other => return Err(Error::InvalidLabel(format!("{:?}", other))),
            }
        }
        Ok(acc)
    }

    /// Symbolic verification of the quadratic, braid and commutation
    /// relations of the two-parameter type-B presentation.
    pub fn verify_relations(&self) -> Result<()> {
        let dim = self.dim();
        let zero = vec![vec![RatQ::zero(); dim]; dim];
        let q = RatQ::from_pol(PolQ::q());
        let bq = RatQ::from_pol(self.big_q.clone());

        let fail = |what: &str| {
            Err(Error::InconsistentInstance(format!(
                "relation {} fails for label {}",
                what, self.label
            )))
        };

        // quadratic relations
        for (i, m) in self.matrices.iter().enumerate() {
            let param = if i == 0 { &bq } else { &q };
            let mut shifted = m.clone();
            for d in 0..dim {
                shifted[d][d] = &shifted[d][d] - param;
            }
            let mut plus_one = m.clone();
            for d in 0..dim {
                plus_one[d][d] = &plus_one[d][d] + &RatQ::one();
            }
            if mat_mul(&shifted, &plus_one) != zero {
                return fail(&format!("quadratic({})", i));
            }
        }
        // braid relations
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                let a = &self.matrices[i];
                let b = &self.matrices[j];
                let (lhs, rhs) = if i == 0 && j == 1 {
                    // order 4
                    let ab = mat_mul(a, b);
                    let ba = mat_mul(b, a);
                    (mat_mul(&ab, &ab), mat_mul(&ba, &ba))
                } else if j == i + 1 && i >= 1 {
                    // order 3
                    (mat_mul(&mat_mul(a, b), a), mat_mul(&mat_mul(b, a), b))
                } else {
                    // commuting pair
                    (mat_mul(a, b), mat_mul(b, a))
                };
                if lhs != rhs {
                    return fail(&format!("braid({},{})", i, j));
                }
            }
        }
        Ok(())
    }
}

type RepKey = (usize, String, String);

fn rep_cache() -> &'static Mutex<HashMap<RepKey, Arc<SeminormalRep>>> {
    static CACHE: OnceLock<Mutex<HashMap<RepKey, Arc<SeminormalRep>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Build-or-fetch the representation for (rank, Q, label).
pub fn seminormal_rep(
    rank: usize,
    big_q: &PolQ,
    label: &Bipartition,
) -> Result<Arc<SeminormalRep>> {
    let key = (rank, big_q.to_string(), label.to_string());
    if let Some(hit) = rep_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let rep = SeminormalRep::build(rank, big_q, label)?;
    rep_cache().lock().unwrap().insert(key, rep.clone());
    Ok(rep)
}

/// All partitions of n, parts weakly decreasing.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = max.min(n);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All ordered bipartitions of n.
pub fn bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in 0..=n {
        for lambda in partitions(a) {
            for mu in partitions(n - a) {
                out.push(Bipartition::new(lambda.clone(), mu).unwrap());
            }
        }
    }
    out
}

// ---- Border-strip oracle over the signed cycle type ----

/// Border-strip removals of the given size: (new partition, height sign).
fn strip_removals(partition: &[u32], strip: u32) -> Vec<(Vec<u32>, i64)> {
    let m = partition.len();
    // beta numbers: partition[i] + (m - 1 - i), strictly decreasing
    let beta: Vec<u32> = partition
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for (pos, &b) in beta.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut newbeta = beta.clone();
        newbeta[pos] = target;
        newbeta.sort_unstable_by(|a, b| b.cmp(a));
        let mut newpart: Vec<u32> = newbeta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (m - 1 - i) as u32)
            .collect();
        while newpart.last() == Some(&0) {
            newpart.pop();
        }
        out.push((newpart, if height % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Character of the hyperoctahedral group at a signed cycle type, by
/// removing one border strip per cycle. A cycle's strip comes off either
/// component; removals from the second component pick up a factor of -1
/// for negative cycles.
pub fn mn_character_value(lambda: &[u32], mu: &[u32], pos: &[u32], neg: &[u32]) -> BigInt {
    fn rec(lambda: &[u32], mu: &[u32], cycles: &[(u32, bool)]) -> BigInt {
        match cycles.split_first() {
            None => {
                if lambda.is_empty() && mu.is_empty() {
                    BigInt::from(1)
                } else {
                    BigInt::from(0)
                }
            }
            Some((&(len, negative), rest)) => {
                let mut total = BigInt::from(0);
                for (nl, sign) in strip_removals(lambda, len) {
                    total += BigInt::from(sign) * rec(&nl, mu, rest);
                }
                let mu_factor: i64 = if negative { -1 } else { 1 };
                for (nm, sign) in strip_removals(mu, len) {
                    total += BigInt::from(sign * mu_factor) * rec(lambda, &nm, rest);
                }
                total
            }
        }
    }
    let mut cycles: Vec<(u32, bool)> = Vec::new();
    cycles.extend(pos.iter().map(|&l| (l, false)));
    cycles.extend(neg.iter().map(|&l| (l, true)));
    rec(lambda, mu, &cycles)
}
