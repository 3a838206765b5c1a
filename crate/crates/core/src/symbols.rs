//! Symbol combinatorics for unipotent characters of D_n / twisted D_n.
//!
//! A symbol is an unordered pair (S, T) of finite subsets of the nonnegative
//! integers; rank and defect are shift-invariant, and the reduced form (not
//! both sides containing 0) is the preferred representative. Families are
//! co-reduction classes (equal entry multisets after aligning shifts); the
//! six 4-element families in scope carry the order-4 Hadamard-type Fourier
//! matrix with entries 1/2.
//!
//! String codec: `(02,14)` means S = {0,2}, T = {1,4}; `-` is the empty set;
//! all in-scope entries are single digits.

use std::fmt;

use crate::exactnum::CycQ;
use crate::{Error, Result};

/// The four group cases covered by the symbol machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    D4Split,
    D4Twisted,
    D5Split,
    D5Twisted,
}

impl Case {
    pub fn rank(self) -> u32 {
        match self {
            Case::D4Split | Case::D4Twisted => 4,
            Case::D5Split | Case::D5Twisted => 5,
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(self, Case::D4Twisted | Case::D5Twisted)
    }

    /// Defect residue mod 4 of the parametrizing symbols.
    pub fn defect_mod4(self) -> u32 {
        if self.is_twisted() {
            2
        } else {
            0
        }
    }

    pub fn parse(s: &str) -> Result<Case> {
        match s {
            "D4-split" => Ok(Case::D4Split),
            "D4-twisted" => Ok(Case::D4Twisted),
            "D5-split" => Ok(Case::D5Split),
            "D5-twisted" => Ok(Case::D5Twisted),
            other => Err(Error::WrongCase(other.to_string())),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::D4Split => "D4-split",
            Case::D4Twisted => "D4-twisted",
            Case::D5Split => "D5-split",
            Case::D5Twisted => "D5-twisted",
        };
        write!(f, "{}", s)
    }
}

/// An unordered pair of finite subsets of Z>=0, stored in canonical
/// orientation: larger side first, ties broken lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    s: Vec<u32>,
    t: Vec<u32>,
}

impl Symbol {
    pub fn new(mut s: Vec<u32>, mut t: Vec<u32>) -> Result<Symbol> {
        s.sort_unstable();
        t.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) || t.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!(
                "repeated symbol entry in {:?} {:?}",
                s, t
            )));
        }
        let swap = match s.len().cmp(&t.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => s > t,
            std::cmp::Ordering::Greater => false,
        };
        if swap {
            std::mem::swap(&mut s, &mut t);
        }
        Ok(Symbol { s, t })
    }

    pub fn rows(&self) -> (&[u32], &[u32]) {
        (&self.s, &self.t)
    }

    /// S == T (such labels are doubled in the split even-rank cases).
    pub fn is_degenerate(&self) -> bool {
        self.s == self.t
    }

    pub fn defect(&self) -> u32 {
        (self.s.len() as i64 - self.t.len() as i64).unsigned_abs() as u32
    }

    /// Rank via the fixed formula: sum of entries minus floor((|S|+|T|-1)^2/4).
    pub fn rank(&self) -> u32 {
        let total: u32 = self.s.iter().sum::<u32>() + self.t.iter().sum::<u32>();
        let k = (self.s.len() + self.t.len()) as u32;
        let corr = if k == 0 { 0 } else { (k - 1) * (k - 1) / 4 };
        total - corr
    }

    pub fn rank_defect(&self) -> (u32, u32) {
        (self.rank(), self.defect())
    }

    pub fn is_reduced(&self) -> bool {
        !(self.s.contains(&0) && self.t.contains(&0))
    }

    /// Remove a shared 0 and shift down, repeatedly.
    pub fn reduce(&self) -> Symbol {
        let mut cur = self.clone();
        while !cur.is_reduced() {
            let strip =
                |v: &[u32]| -> Vec<u32> { v.iter().filter(|&&x| x != 0).map(|&x| x - 1).collect() };
            cur = Symbol {
                s: strip(&cur.s),
                t: strip(&cur.t),
            };
        }
        cur
    }

    /// Inverse of one reduction step: shift everything up and adjoin 0 to both.
    pub fn expand(&self) -> Symbol {
        let grow = |v: &[u32]| -> Vec<u32> {
            let mut out = Vec::with_capacity(v.len() + 1);
            out.push(0);
            out.extend(v.iter().map(|&x| x + 1));
            out
        };
        Symbol {
            s: grow(&self.s),
            t: grow(&self.t),
        }
    }

    /// Sorted entry multiset after expanding to the requested total size.
    /// Symbols in one family agree on this key.
    pub fn entry_multiset_at(&self, total: usize) -> Result<Vec<u32>> {
        let mut cur = self.clone();
        loop {
            let k = cur.s.len() + cur.t.len();
            if k == total {
                let mut all: Vec<u32> = cur.s.iter().chain(cur.t.iter()).copied().collect();
                all.sort_unstable();
                return Ok(all);
            }
            if k > total {
                return Err(Error::SizeMismatch(format!(
                    "cannot align {} to total size {}",
                    self, total
                )));
            }
            cur = cur.expand();
        }
    }

    pub fn parse(input: &str) -> Result<Symbol> {
        let inner = input
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("symbol must be parenthesized: {}", input)))?;
        let mut halves = inner.split(',');
        let (a, b) = match (halves.next(), halves.next(), halves.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(Error::Parse(format!("symbol needs two rows: {}", input))),
        };
        let row = |txt: &str| -> Result<Vec<u32>> {
            let txt = txt.trim();
            if txt == "-" {
                return Ok(Vec::new());
            }
            txt.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad symbol digit '{}'", c)))
                })
                .collect()
        };
        Symbol::new(row(a)?, row(b)?)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| -> String {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|x| x.to_string()).collect()
            }
        };
        write!(f, "({},{})", row(&self.s), row(&self.t))
    }
}

/// A bipartition (pair of partitions); labels Irr(W) for types B and D.
///
/// Codec: `lambda.mu` with single-digit parts and an empty side printed as
/// nothing, e.g. `.32`, `211.`, `1111.`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    lambda: Vec<u32>,
    mu: Vec<u32>,
}

impl Bipartition {
    pub fn new(lambda: Vec<u32>, mu: Vec<u32>) -> Result<Bipartition> {
        for side in [&lambda, &mu] {
            if side.windows(2).any(|w| w[0] < w[1]) || side.contains(&0) {
                return Err(Error::BadBipartition(format!("{:?}.{:?}", lambda, mu)));
            }
        }
        Ok(Bipartition { lambda, mu })
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn size(&self) -> u32 {
        self.lambda.iter().sum::<u32>() + self.mu.iter().sum::<u32>()
    }

    /// The unordered pair {lambda, mu}, for type-D label identification.
    pub fn unordered_key(&self) -> (Vec<u32>, Vec<u32>) {
        let a = self.lambda.clone();
        let b = self.mu.clone();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            lambda: self.mu.clone(),
            mu: self.lambda.clone(),
        }
    }

    pub fn parse(input: &str) -> Result<Bipartition> {
        let input = input.trim();
        let dot = input
            .find('.')
            .ok_or_else(|| Error::BadBipartition(format!("missing '.': {}", input)))?;
        let (a, b) = input.split_at(dot);
        let b = &b[1..];
        let side = |txt: &str| -> Result<Vec<u32>> {
            txt.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::BadBipartition(format!("bad part '{}'", c)))
                })
                .collect()
        };
        Bipartition::new(side(a)?, side(b)?)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[u32]| -> String { v.iter().map(|x| x.to_string()).collect() };
        write!(f, "{}.{}", side(&self.lambda), side(&self.mu))
    }
}

/// One unipotent-character label: a symbol, with a copy marker for the
/// doubled (S,S) labels of the split even-rank case.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnipLabel {
    pub symbol: Symbol,
    pub copy: Option<u8>,
}

impl fmt::Display for UnipLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.copy {
            None => write!(f, "{}", self.symbol),
            Some(1) => write!(f, "{}'", self.symbol),
            Some(_) => write!(f, "{}''", self.symbol),
        }
    }
}

/// The full ordered list of unipotent-character labels for a case.
#[derive(Clone, Debug)]
pub struct UnipBasis {
    pub case: Case,
    pub labels: Vec<UnipLabel>,
}

impl UnipBasis {
    pub fn position_of_symbol(&self, sym: &Symbol) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| l.copy.is_none() && &l.symbol == sym)
    }
}

/// All reduced symbols of the given rank and defect.
fn symbols_with(rank: u32, defect: u32) -> Vec<Symbol> {
    let mut out = Vec::new();
    // sizes |T| = t, |S| = t + defect
    for t in 0..=6usize {
        let m = t + defect as usize;
        let k = (m + t) as u32;
        if k == 0 {
            if rank == 0 {
                out.push(Symbol::new(vec![], vec![]).unwrap());
            }
            continue;
        }
        let total = rank + (k - 1) * (k - 1) / 4;
        let min_s = (m.saturating_sub(1) * m / 2) as u32;
        let min_t = (t.saturating_sub(1) * t / 2) as u32;
        if min_s + min_t > total {
            break;
        }
        let max_entry = total.min(16);
        for s_sum in min_s..=(total - min_t) {
            let mut s_sets = Vec::new();
            subsets_with_sum(m, s_sum, max_entry, &mut Vec::new(), &mut s_sets);
            if s_sets.is_empty() {
                continue;
            }
            let mut t_sets = Vec::new();
            subsets_with_sum(t, total - s_sum, max_entry, &mut Vec::new(), &mut t_sets);
            for s in &s_sets {
                for tt in &t_sets {
                    let sym = match Symbol::new(s.clone(), tt.clone()) {
                        Ok(sym) => sym,
                        Err(_) => continue,
                    };
                    if !sym.is_reduced() || sym.rank() != rank || sym.defect() != defect {
                        continue;
                    }
                    if !out.contains(&sym) {
                        out.push(sym);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All strictly increasing sequences of the given length with the given sum.
fn subsets_with_sum(
    len: usize,
    sum: u32,
    max_entry: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if len == 0 {
        if sum == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let lo = prefix.last().map_or(0, |&x| x + 1);
    for next in lo..=max_entry.min(sum) {
        // remaining entries are strictly larger; lower-bound the rest
        let rest_min: u32 = (1..len as u32).map(|i| next + i).sum();
        if next + rest_min > sum {
            break;
        }
        prefix.push(next);
        subsets_with_sum(len - 1, sum - next, max_entry, prefix, out);
        prefix.pop();
    }
}

/// Complete, duplicate-free list of unipotent-character labels.
pub fn enumerate_unipotent(case: Case) -> UnipBasis {
    let rank = case.rank();
    let d0 = case.defect_mod4();
    let mut labels = Vec::new();
    let mut defect = d0;
    loop {
        let syms = symbols_with(rank, defect);
        if syms.is_empty() && defect > 2 * rank {
            break;
        }
        for sym in syms {
            if sym.is_degenerate() {
                labels.push(UnipLabel {
                    symbol: sym.clone(),
                    copy: Some(1),
                });
                labels.push(UnipLabel {
                    symbol: sym,
                    copy: Some(2),
                });
            } else {
                labels.push(UnipLabel {
                    symbol: sym,
                    copy: None,
                });
            }
        }
        defect += 4;
        if defect > 2 * rank + 2 {
            break;
        }
    }
    UnipBasis { case, labels }
}

/// The beta-set map from Irr(W) labels to principal-series symbols.
///
/// Split: both rows padded to a common length; twisted: the first-listed
/// partition maps to the larger row (|S| = |T| + 2).
pub fn bipartition_to_symbol(bp: &Bipartition, case: Case) -> Result<Symbol> {
    let expected = if case.is_twisted() {
        case.rank() - 1
    } else {
        case.rank()
    };
    if bp.size() != expected {
        return Err(Error::SizeMismatch(format!(
            "|{}| = {} but case {} needs {}",
            bp,
            bp.size(),
            case,
            expected
        )));
    }
    let beta = |parts: &[u32], len: usize| -> Vec<u32> {
        let pad = len - parts.len();
        let mut asc: Vec<u32> = vec![0; pad];
        asc.extend(parts.iter().rev());
        asc.iter().enumerate().map(|(i, &p)| p + i as u32).collect()
    };
    let (s, t) = if case.is_twisted() {
        let t_len = bp.mu().len().max(bp.lambda().len().saturating_sub(2));
        let s_len = t_len + 2;
        (beta(bp.lambda(), s_len), beta(bp.mu(), t_len))
    } else {
        let len = bp.lambda().len().max(bp.mu().len());
        (beta(bp.lambda(), len), beta(bp.mu(), len))
    };
    let sym = Symbol::new(s, t)?;
    debug_assert!(sym.is_reduced());
    Ok(sym)
}

/// Role of a Fourier-matrix row relative to the uniform subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowRole {
    UniformSpan,
    NonUniform,
}

/// A 4-element family with its Fourier matrix and row roles.
#[derive(Clone, Debug)]
pub struct Family {
    pub case: Case,
    pub name: String,
    /// Members in print order.
    pub members: Vec<Symbol>,
    /// Signs of the attached f-vector over the members, each +-1/2.
    pub f_signs: Vec<CycQ>,
    pub matrix: Vec<Vec<CycQ>>,
    pub row_roles: Vec<RowRole>,
}

fn half_signed(sign: i64) -> CycQ {
    if sign >= 0 {
        CycQ::half()
    } else {
        &CycQ::zero() - &CycQ::half()
    }
}

/// The order-4 Hadamard-type matrix with entries +-1/2.
fn hadamard4() -> Vec<Vec<CycQ>> {
    let signs = [
        [1i64, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ];
    signs
        .iter()
        .map(|row| row.iter().map(|&s| half_signed(s)).collect())
        .collect()
}

struct FamilyData {
    name: &'static str,
    members: [&'static str; 4],
    signs: [i64; 4],
}

fn family_data(case: Case) -> Vec<FamilyData> {
    match case {
        Case::D4Split => vec![FamilyData {
            name: "f0",
            members: ["(13,02)", "(23,01)", "(12,03)", "(0123,-)"],
            signs: [1, -1, -1, 1],
        }],
        Case::D4Twisted => vec![FamilyData {
            name: "f0",
            members: ["(123,0)", "(012,3)", "(013,2)", "(023,1)"],
            signs: [1, -1, 1, -1],
        }],
        Case::D5Split => vec![
            FamilyData {
                name: "f1",
                members: ["(02,14)", "(12,04)", "(01,24)", "(0124,-)"],
                signs: [1, -1, -1, 1],
            },
            FamilyData {
                name: "f2",
                members: ["(013,124)", "(123,014)", "(012,134)", "(01234,1)"],
                signs: [1, -1, -1, 1],
            },
        ],
        Case::D5Twisted => vec![
            FamilyData {
                name: "f1",
                members: ["(014,2)", "(012,4)", "(024,1)", "(124,0)"],
                signs: [1, -1, -1, 1],
            },
            FamilyData {
                name: "f2",
                members: ["(0124,13)", "(0123,14)", "(0134,12)", "(1234,01)"],
                signs: [1, -1, -1, 1],
            },
        ],
    }
}

/// Number of f-hosting families in a case (1 for D4, 2 for D5).
pub fn family_count(case: Case) -> usize {
    family_data(case).len()
}

/// The requested 4-element family (1-based index in {f0} / {f1, f2} order).
pub fn family_fourier(case: Case, which: usize) -> Result<Family> {
    let data = family_data(case);
    let fd = data
        .get(which.wrapping_sub(1))
        .ok_or(Error::UnknownFamily(which))?;
    let members: Vec<Symbol> = fd
        .members
        .iter()
        .map(|m| Symbol::parse(m))
        .collect::<Result<_>>()?;
    let matrix = hadamard4();
    let f_signs: Vec<CycQ> = fd.signs.iter().map(|&s| half_signed(s)).collect();
    // the designated non-uniform row is the matrix row equal to the f-vector
    let f_row = matrix
        .iter()
        .position(|row| row == &f_signs)
        .expect("the printed sign pattern is a row of the matrix");
    let row_roles = (0..4)
        .map(|i| {
            if i == f_row {
                RowRole::NonUniform
            } else {
                RowRole::UniformSpan
            }
        })
        .collect();
    Ok(Family {
        case,
        name: fd.name.to_string(),
        members,
        f_signs,
        matrix,
        row_roles,
    })
}

/// A named coefficient vector over the unipotent basis.
#[derive(Clone, Debug)]
pub struct FVector {
    pub name: String,
    pub coeffs: Vec<CycQ>,
}

/// The f-vectors of the case (f0, or f1 and f2) over [`enumerate_unipotent`].
pub fn f_basis(case: Case) -> Vec<FVector> {
    let basis = enumerate_unipotent(case);
    let mut out = Vec::new();
    for which in 1..=family_count(case) {
        let fam = family_fourier(case, which).expect("valid family index");
        let mut coeffs = vec![CycQ::zero(); basis.labels.len()];
        for (member, sign) in fam.members.iter().zip(&fam.f_signs) {
            let pos = basis
                .position_of_symbol(member)
                .expect("family member occurs in the basis");
            coeffs[pos] = sign.clone();
        }
        out.push(FVector {
            name: fam.name.clone(),
            coeffs,
        });
    }
    out
}

/// Coefficient of `sym` in the k-th f-vector (k is 1-based), zero if absent.
pub fn f_coefficient(case: Case, which: usize, sym: &Symbol) -> Result<CycQ> {
    let fam = family_fourier(case, which)?;
    Ok(fam
        .members
        .iter()
        .position(|m| m == sym)
        .map(|i| fam.f_signs[i].clone())
        .unwrap_or_else(CycQ::zero))
}

/// Partition of the basis indices into families (co-reduction classes).
pub fn families_of_basis(basis: &UnipBasis) -> Vec<Vec<usize>> {
    let total = basis
        .labels
        .iter()
        .map(|l| {
            let (s, t) = l.symbol.rows();
            s.len() + t.len()
        })
        .max()
        .unwrap_or(0);
    let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
    for (i, label) in basis.labels.iter().enumerate() {
        let key = label
            .symbol
            .entry_multiset_at(total)
            .expect("parity within a basis is uniform");
        match groups.iter_mut().find(|(k, _)| k == &key) {
            Some((_, v)) => v.push(i),
            None => groups.push((key, vec![i])),
        }
    }
    groups.into_iter().map(|(_, v)| v).collect()
}
