//! Weyl groups of types B_n and D_n as signed permutation groups.
//!
//! Model: an element is a bijection of {1..n} with signs; type D keeps the
//! even-sign-count subgroup. Generators follow the D_n diagram with the two
//! fork nodes labelled 1 and 2:
//!
//! - type B: `t` = sign flip at position 1, `u_i` = transposition (i, i+1);
//! - type D: `s1` = (1,2), `s2` = negated (1,2) (= t*u1*t),
//!   `s_i` = (i-1, i) for i >= 3.
//!
//! Length is the number of positive roots sent to negative roots. The only
//! nontrivial diagram automorphism supported is the order-2 fork swap of
//! type D, realized on elements as conjugation by `t`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::{Error, Result};

/// Weyl group family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WFamily {
    B,
    D,
}

/// Diagram automorphism (identity, or the D-type fork swap).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramAut {
    Identity,
    DForkSwap,
}

/// Descriptor of a Weyl group: family, rank and diagram automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDatum {
    pub family: WFamily,
    pub rank: usize,
    pub automorphism: DiagramAut,
}

impl CoxeterDatum {
    pub fn new(family: WFamily, rank: usize, automorphism: DiagramAut) -> Result<Self> {
        let ok = match family {
            WFamily::B => (1..=7).contains(&rank),
            WFamily::D => (2..=7).contains(&rank),
        };
        if !ok {
            return Err(Error::UnsupportedRank(format!("{:?}{}", family, rank)));
        }
        if automorphism == DiagramAut::DForkSwap && family != WFamily::D {
            return Err(Error::InvalidLabel(
                "fork swap automorphism needs type D".to_string(),
            ));
        }
        Ok(CoxeterDatum {
            family,
            rank,
            automorphism,
        })
    }

    pub fn b(rank: usize) -> Result<Self> {
        CoxeterDatum::new(WFamily::B, rank, DiagramAut::Identity)
    }

    pub fn d(rank: usize, automorphism: DiagramAut) -> Result<Self> {
        CoxeterDatum::new(WFamily::D, rank, automorphism)
    }

    /// Printable generator labels in diagram order.
    pub fn generator_labels(&self) -> Vec<String> {
        match self.family {
            WFamily::B => {
                let mut v = vec!["t".to_string()];
                v.extend((1..self.rank).map(|i| format!("u{}", i)));
                v
            }
            WFamily::D => (1..=self.rank).map(|i| format!("s{}", i)).collect(),
        }
    }

    /// Coxeter matrix entries m(i, j) in generator order.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank;
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        match self.family {
            WFamily::B => {
                // t - u1 double bond, then a simply laced chain
                if n >= 2 {
                    m[0][1] = 4;
                    m[1][0] = 4;
                }
                for i in 1..n.saturating_sub(1) {
                    m[i][i + 1] = 3;
                    m[i + 1][i] = 3;
                }
            }
            WFamily::D => {
                // fork nodes 1, 2 both attach to node 3; chain from node 3 on
                if n >= 3 {
                    m[0][2] = 3;
                    m[2][0] = 3;
                    m[1][2] = 3;
                    m[2][1] = 3;
                }
                if n == 2 {
                    // D2 = A1 x A1, nothing to add
                }
                for i in 2..n.saturating_sub(1) {
                    m[i][i + 1] = 3;
                    m[i + 1][i] = 3;
                }
            }
        }
        m
    }

    /// Images of the generator indices under the diagram automorphism.
    pub fn automorphism_on_generators(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.rank).collect();
        if self.automorphism == DiagramAut::DForkSwap {
            perm.swap(0, 1);
        }
        perm
    }
}

/// A signed permutation of {1..n}: `images[i-1] = w(i)` with sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElement {
    images: Vec<i32>,
}

impl WElement {
    pub fn identity(n: usize) -> Self {
        WElement {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidLabel(format!(
                    "bad signed images {:?}",
                    images
                )));
            }
            seen[a - 1] = true;
        }
        Ok(WElement { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Signed image of a signed point.
    pub fn apply(&self, x: i32) -> i32 {
        let a = x.unsigned_abs() as usize;
        let y = self.images[a - 1];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    /// Composition (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &WElement) -> WElement {
        WElement {
            images: (1..=self.images.len() as i32)
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> WElement {
        let n = self.images.len();
        let mut images = vec![0i32; n];
        for (i, &y) in self.images.iter().enumerate() {
            let a = y.unsigned_abs() as usize;
            images[a - 1] = if y < 0 {
                -((i + 1) as i32)
            } else {
                (i + 1) as i32
            };
        }
        WElement { images }
    }

    pub fn negative_sign_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Cycle type of the signed permutation: lists of cycle lengths for
    /// positive and for negative cycles (sign = product of signs on a cycle).
    pub fn cycle_type(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0u32;
            let mut sign = 1i32;
            let mut cur = start;
            loop {
                seen[cur - 1] = true;
                len += 1;
                let img = self.images[cur - 1];
                if img < 0 {
                    sign = -sign;
                }
                cur = img.unsigned_abs() as usize;
                if cur == start {
                    break;
                }
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        (pos, neg)
    }
}

/// A fully enumerated Weyl group with its conjugation machinery.
pub struct CoxeterGroup {
    datum: CoxeterDatum,
    generators: Vec<WElement>,
    elements: Vec<WElement>,
    index: HashMap<WElement, usize>,
}

/// Upper bound on the group order accepted by [`CoxeterGroup::new`].
pub const MAX_GROUP_ORDER: usize = 100_000;

impl CoxeterGroup {
    /// Build generators, enumerate the group and index the elements.
    pub fn new(datum: CoxeterDatum) -> Result<Self> {
        let generators = Self::build_generators(&datum)?;
        let n = datum.rank;
        let mut elements: Vec<WElement> = Vec::new();
        let mut seen: HashSet<WElement> = HashSet::new();
        let mut queue = VecDeque::new();
        let id = WElement::identity(n);
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(w) = queue.pop_front() {
            elements.push(w.clone());
            if elements.len() > MAX_GROUP_ORDER {
                return Err(Error::SizeBound(elements.len()));
            }
            for s in &generators {
                let next = s.compose(&w);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        elements.sort();
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Ok(CoxeterGroup {
            datum,
            generators,
            elements,
            index,
        })
    }

    fn build_generators(datum: &CoxeterDatum) -> Result<Vec<WElement>> {
        let n = datum.rank;
        let id = WElement::identity(n);
        let transposition = |i: usize| {
            let mut images = id.images.clone();
            images.swap(i - 1, i);
            WElement { images }
        };
        match datum.family {
            WFamily::B => {
                let mut gens = Vec::with_capacity(n);
                let mut t = id.images.clone();
                t[0] = -1;
                gens.push(WElement { images: t });
                for i in 1..n {
                    gens.push(transposition(i));
                }
                Ok(gens)
            }
            WFamily::D => {
                let mut gens = Vec::with_capacity(n);
                gens.push(transposition(1));
                let mut s2 = id.images.clone();
                s2[0] = -2;
                s2[1] = -1;
                gens.push(WElement { images: s2 });
                for i in 3..=n {
                    gens.push(transposition(i - 1));
                }
                Ok(gens)
            }
        }
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn generators(&self) -> &[WElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WElement] {
        &self.elements
    }

    pub fn element_index(&self, w: &WElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Product of generators in word order; entries are 0-based generator indices.
    pub fn word_to_element(&self, word: &[usize]) -> Result<WElement> {
        let mut w = WElement::identity(self.datum.rank);
        for &g in word {
            let s = self
                .generators
                .get(g)
                .ok_or_else(|| Error::InvalidLabel(format!("generator index {}", g)))?;
            w = w.compose(s);
        }
        Ok(w)
    }

    /// 0-based generator index from a printable label (`t`, `u2`, `s3`, `3`).
    pub fn gen_index_from_label(&self, label: &str) -> Result<usize> {
        let labels = self.datum.generator_labels();
        if let Some(i) = labels.iter().position(|l| l == label) {
            return Ok(i);
        }
        // bare integers: diagram position for D, chain index for B
        if let Ok(k) = label.parse::<usize>() {
            match self.datum.family {
                WFamily::D if (1..=self.datum.rank).contains(&k) => return Ok(k - 1),
                WFamily::B if (1..self.datum.rank).contains(&k) => return Ok(k),
                _ => {}
            }
        }
        Err(Error::InvalidLabel(label.to_string()))
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn length(&self, w: &WElement) -> usize {
        let n = self.datum.rank;
        let mut count = 0usize;
        if self.datum.family == WFamily::B {
            for i in 1..=n {
                if w.apply(i as i32) < 0 {
                    count += 1;
                }
            }
        }
        for i in 1..n {
            for j in (i + 1)..=n {
                // e_j - e_i and e_j + e_i; image positive iff the
                // coefficient of the higher-index axis is +1
                for sign in [-1i32, 1] {
                    // root e_j + sign*e_i; its image is negative iff the
                    // coefficient on the higher-index axis is -1
                    let a = w.apply(sign * i as i32);
                    let b = w.apply(j as i32);
                    let hi = if b.unsigned_abs() > a.unsigned_abs() {
                        b
                    } else {
                        a
                    };
                    if hi < 0 {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// A reduced word for `w` (0-based generator indices), by greedy descent.
    pub fn reduced_word(&self, w: &WElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let mut progressed = false;
            for (i, s) in self.generators.iter().enumerate() {
                let next = s.compose(&cur);
                let nl = self.length(&next);
                if nl < len {
                    word.push(i);
                    cur = next;
                    len = nl;
                    progressed = true;
                    break;
                }
            }
            assert!(progressed, "no descent found for a non-identity element");
        }
        word
    }

    /// Printable reduced word, e.g. `s1*s3*s4`; the identity prints as `e`.
    pub fn element_to_string(&self, w: &WElement) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        let labels = self.datum.generator_labels();
        word.iter()
            .map(|&i| labels[i].clone())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// The diagram automorphism on elements (conjugation by `t` for the fork swap).
    pub fn apply_automorphism(&self, w: &WElement) -> WElement {
        match self.datum.automorphism {
            DiagramAut::Identity => w.clone(),
            DiagramAut::DForkSwap => {
                let mut images = w.images.clone();
                // t w t: flip the sign of coordinate 1 on both sides
                for x in images.iter_mut() {
                    if x.unsigned_abs() == 1 {
                        *x = -*x;
                    }
                }
                images[0] = -images[0];
                WElement { images }
            }
        }
    }

    /// Orbits of the twisted conjugation x ~ b x F(b)^{-1}, as sorted index
    /// lists, ordered by smallest member.
    pub fn f_conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![usize::MAX; self.elements.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.elements.len() {
            if assigned[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = Vec::new();
            let mut queue = VecDeque::new();
            assigned[start] = cid;
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                members.push(i);
                let x = &self.elements[i];
                for s in &self.generators {
                    let fs_inv = self.apply_automorphism(s).inverse();
                    let y = s.compose(x).compose(&fs_inv);
                    let j = self.index[&y];
                    if assigned[j] == usize::MAX {
                        assigned[j] = cid;
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Ordinary conjugacy classes by sweeping over the whole group.
    /// Independent of [`Self::f_conjugacy_classes`]; used as an oracle.
    pub fn conjugacy_classes_bruteforce(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.elements.len()];
        let mut classes = Vec::new();
        for start in 0..self.elements.len() {
            if assigned[start] {
                continue;
            }
            let x = &self.elements[start];
            let mut members = HashSet::new();
            for g in &self.elements {
                let y = g.compose(x).compose(&g.inverse());
                members.insert(self.index[&y]);
            }
            let mut members: Vec<usize> = members.into_iter().collect();
            members.sort_unstable();
            for &m in &members {
                assigned[m] = true;
            }
            classes.push(members);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(family: WFamily, rank: usize, aut: DiagramAut) -> CoxeterGroup {
        CoxeterGroup::new(CoxeterDatum::new(family, rank, aut).unwrap()).unwrap()
    }

    #[test]
    fn generator_relations_match_coxeter_matrix() {
        for (family, rank) in [
            (WFamily::B, 4),
            (WFamily::B, 5),
            (WFamily::D, 4),
            (WFamily::D, 5),
        ] {
            let g = group(family, rank, DiagramAut::Identity);
            let m = g.datum().coxeter_matrix();
            let id = WElement::identity(rank);
            for i in 0..rank {
                for j in 0..rank {
                    let mut prod = WElement::identity(rank);
                    for _ in 0..m[i][j] {
                        prod = prod.compose(&g.generators()[i]).compose(&g.generators()[j]);
                    }
                    assert_eq!(
                        prod, id,
                        "(s{} s{})^{} != e in {:?}{}",
                        i, j, m[i][j], family, rank
                    );
                }
            }
        }
    }

    #[test]
    fn fork_nodes_commute_and_double_bond_has_order_four() {
        let d5 = group(WFamily::D, 5, DiagramAut::Identity);
        assert_eq!(d5.generators().len(), 5);
        let s1 = &d5.generators()[0];
        let s2 = &d5.generators()[1];
        assert_eq!(s1.compose(s2), s2.compose(s1));

        let b4 = group(WFamily::B, 4, DiagramAut::Identity);
        assert_eq!(b4.generators().len(), 4);
        let t = &b4.generators()[0];
        let u1 = &b4.generators()[1];
        let tu = t.compose(u1);
        let mut p = WElement::identity(4);
        for _ in 0..4 {
            p = p.compose(&tu);
        }
        assert_eq!(p, WElement::identity(4));
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(WFamily::D, 4, DiagramAut::Identity).order(), 192);
        assert_eq!(group(WFamily::D, 5, DiagramAut::Identity).order(), 1920);
        assert_eq!(group(WFamily::B, 4, DiagramAut::Identity).order(), 384);
    }

    #[test]
    fn f_conjugacy_class_counts() {
        assert_eq!(
            group(WFamily::D, 4, DiagramAut::DForkSwap)
                .f_conjugacy_classes()
                .len(),
            9
        );
        assert_eq!(
            group(WFamily::D, 4, DiagramAut::Identity)
                .f_conjugacy_classes()
                .len(),
            13
        );
        assert_eq!(
            group(WFamily::B, 4, DiagramAut::Identity)
                .f_conjugacy_classes()
                .len(),
            20
        );
    }

    #[test]
    fn identity_automorphism_matches_bruteforce_conjugacy() {
        for (family, rank) in [(WFamily::D, 4), (WFamily::B, 4)] {
            let g = group(family, rank, DiagramAut::Identity);
            let a = g.f_conjugacy_classes();
            let b = g.conjugacy_classes_bruteforce();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn words_and_lengths() {
        let d5 = group(WFamily::D, 5, DiagramAut::Identity);
        let w = d5.word_to_element(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(d5.length(&w), 5);
        let e = d5.word_to_element(&[]).unwrap();
        assert_eq!(e, WElement::identity(5));
        assert_eq!(d5.length(&e), 0);
        let squared = d5.word_to_element(&[2, 2]).unwrap();
        assert_eq!(squared, WElement::identity(5));
    }

    #[test]
    fn length_changes_by_one_under_generators() {
        let d4 = group(WFamily::D, 4, DiagramAut::Identity);
        for w in d4.elements().iter().step_by(7) {
            let l = d4.length(w);
            for s in d4.generators() {
                let l2 = d4.length(&s.compose(w));
                assert_eq!((l as i64 - l2 as i64).abs(), 1);
            }
        }
    }

    #[test]
    fn fork_swap_is_an_involution_and_permutes_generators() {
        let d4 = group(WFamily::D, 4, DiagramAut::DForkSwap);
        // the generator permutation preserves the Coxeter matrix
        let m = d4.datum().coxeter_matrix();
        let perm = d4.datum().automorphism_on_generators();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[perm[i]][perm[j]], m[i][j]);
            }
        }
        let s = d4.generators();
        assert_eq!(d4.apply_automorphism(&s[0]), s[1]);
        assert_eq!(d4.apply_automorphism(&s[1]), s[0]);
        assert_eq!(d4.apply_automorphism(&s[2]), s[2]);
        assert_eq!(d4.apply_automorphism(&s[3]), s[3]);
        for w in d4.elements() {
            assert_eq!(&d4.apply_automorphism(&d4.apply_automorphism(w)), w);
        }
    }

    #[test]
    fn reduced_words_round_trip() {
        let d5 = group(WFamily::D, 5, DiagramAut::Identity);
        for w in d5.elements().iter().step_by(31) {
            let word = d5.reduced_word(w);
            assert_eq!(word.len(), d5.length(w));
            assert_eq!(&d5.word_to_element(&word).unwrap(), w);
        }
    }

    #[test]
    fn element_printing() {
        let d5 = group(WFamily::D, 5, DiagramAut::Identity);
        assert_eq!(d5.element_to_string(&WElement::identity(5)), "e");
        let w = d5.word_to_element(&[0, 2, 3]).unwrap();
        assert_eq!(d5.element_to_string(&w), "s1*s3*s4");
        let b4 = group(WFamily::B, 4, DiagramAut::Identity);
        let w = b4.word_to_element(&[0, 1]).unwrap();
        assert_eq!(b4.element_to_string(&w), "t*u1");
    }

    #[test]
    fn d_elements_have_even_sign_count() {
        let d4 = group(WFamily::D, 4, DiagramAut::Identity);
        assert!(d4
            .elements()
            .iter()
            .all(|w| w.negative_sign_count() % 2 == 0));
    }

    #[test]
    fn unsupported_rank_rejected() {
        assert!(CoxeterDatum::new(WFamily::B, 9, DiagramAut::Identity).is_err());
        assert!(CoxeterDatum::new(WFamily::B, 2, DiagramAut::DForkSwap).is_err());
    }

    #[test]
    fn enumeration_size_bound_enforced() {
        // |W(B7)| = 645120 exceeds the bound; the datum is fine but the
        // enumeration must refuse
        let datum = CoxeterDatum::new(WFamily::B, 7, DiagramAut::Identity).unwrap();
        assert!(matches!(
            CoxeterGroup::new(datum),
            Err(crate::Error::SizeBound(_))
        ));
    }

    #[test]
    fn label_parsing() {
        let d5 = group(WFamily::D, 5, DiagramAut::Identity);
        assert_eq!(d5.gen_index_from_label("s3").unwrap(), 2);
        assert_eq!(d5.gen_index_from_label("3").unwrap(), 2);
        let b4 = group(WFamily::B, 4, DiagramAut::Identity);
        assert_eq!(b4.gen_index_from_label("t").unwrap(), 0);
        assert_eq!(b4.gen_index_from_label("u2").unwrap(), 2);
        assert_eq!(b4.gen_index_from_label("2").unwrap(), 2);
        assert!(b4.gen_index_from_label("x").is_err());
    }
}
