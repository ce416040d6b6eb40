//! Finite groups stored as multiplication tables.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::perm::Perm;
use super::{FamilyInfo, Group};
use crate::error::{Error, Result};

/// Upper bound on the order of a tabulated group.
pub const MAX_TABLE_ORDER: usize = 4096;

/// A finite group with elements `0..n`, identity `0`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Vec<String>,
    by_label: HashMap<String, u32>,
    gens: Vec<u32>,
    info: OnceLock<FamilyInfo>,
}

/// On-disk multiplication table: `table[i][j]` is the index of `i * j`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    pub table: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `gens` inside some ambient
    /// structure with product `mul`, by breadth-first closure from `one`.
    pub fn generate<T, M, L>(name: impl Into<String>, one: T, gens: &[T], mul: M, label: L) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let name = name.into();
        let mut elems = vec![one.clone()];
        let mut index: HashMap<T, u32> = HashMap::from([(one, 0)]);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                let y = mul(&x, g);
                if !index.contains_key(&y) {
                    if elems.len() >= MAX_TABLE_ORDER {
                        return Err(Error::BudgetExhausted(format!("{name}: more than {MAX_TABLE_ORDER} elements")));
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[&mul(&elems[i], &elems[j])];
            }
        }
        let labels: Vec<String> = elems.iter().map(label).collect();
        let gens: Vec<u32> = gens.iter().map(|g| index[g]).collect();
        Self::from_parts(name, n, table, Some(labels), gens)
    }

    /// Permutation group generated by `gens`; elements are labelled in cycle
    /// notation.
    pub fn from_perms(name: impl Into<String>, gens: &[Perm]) -> Result<Self> {
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(0);
        let gens: Vec<Perm> = gens.iter().map(|g| g.extended(degree)).collect();
        Self::generate(name, Perm::identity(degree), &gens, |a, b| a.then(b), |p| p.to_string())
    }

    /// Parses permutation generators, one per line in cycle notation; `#`
    /// starts a comment.
    pub fn from_perm_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let gens: Vec<Perm> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| Perm::parse_cycles(l, 0))
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            return Err(Error::Malformed("no permutation generators".into()));
        }
        Self::from_perms(name, &gens)
    }

    /// Validates and loads a multiplication table. The identity need not be
    /// element 0 in the input; elements are relabelled so that it is.
    pub fn from_table(name: impl Into<String>, tj: &TableJson) -> Result<Self> {
        let n = tj.order;
        if n == 0 || tj.table.len() != n || tj.table.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("table must be order x order".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::BudgetExhausted(format!("table order {n}")));
        }
        for row in &tj.table {
            let mut seen = vec![false; n];
            for &x in row {
                if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::Malformed("rows must be permutations (Latin square)".into()));
                }
            }
        }
        let e = (0..n)
            .find(|&i| (0..n).all(|j| tj.table[i][j] as usize == j && tj.table[j][i] as usize == j))
            .ok_or_else(|| Error::Malformed("no identity element".into()))?;
        // Move the identity to slot 0.
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, e);
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = perm[tj.table[perm[i]][perm[j]] as usize] as u32;
            }
        }
        let labels = tj.labels.as_ref().map(|ls| (0..n).map(|i| ls[perm[i]].clone()).collect::<Vec<_>>());
        if let Some(ls) = &labels {
            if ls.len() != n {
                return Err(Error::Malformed("labels length differs from order".into()));
            }
        }
        let g = Self::from_parts(name.into(), n, table, labels, Vec::new())?;
        g.check_associativity()?;
        let gens = g.small_generating_set();
        Ok(Self { gens, ..g })
    }

    fn from_parts(
        name: String,
        n: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        gens: Vec<u32>,
    ) -> Result<Self> {
        let mut inverse = vec![u32::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inverse[i] = j as u32;
                    break;
                }
            }
            if inverse[i] == u32::MAX {
                return Err(Error::Malformed(format!("element {i} has no inverse")));
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("#{i}")).collect());
        let by_label = labels.iter().enumerate().map(|(i, l)| (l.clone(), i as u32)).collect();
        Ok(FiniteGroup { name, n, table, inverse, labels, by_label, gens, info: OnceLock::new() })
    }

    fn compute_info(&self) -> FamilyInfo {
        let abelian = (0..self.n as u32).all(|a| (0..self.n as u32).all(|b| self.m(a, b) == self.m(b, a)));
        let dicyclic = super::structure::generalized_dicyclic_witness(self).is_some();
        let dihedral = super::structure::generalized_dihedral_witness(self).is_some();
        FamilyInfo {
            finite: true,
            abelian: Some(abelian),
            virtually_abelian: Some(true),
            torsion: Some(true),
            generalized_dicyclic: Some(dicyclic),
            generalized_dihedral: Some(dihedral),
        }
    }

    /// Exhaustive for small orders, 10^5 random triples otherwise.
    fn check_associativity(&self) -> Result<()> {
        let n = self.n as u32;
        let bad = || Error::Malformed(format!("{}: table is not associative", self.name));
        if self.n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.m(self.m(a, b), c) != self.m(a, self.m(b, c)) {
                            return Err(bad());
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0067_7272);
            for _ in 0..100_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.m(self.m(a, b), c) != self.m(a, self.m(b, c)) {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    /// Greedy generating set: repeatedly adds the first element outside the
    /// subgroup generated so far.
    pub fn small_generating_set(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[0] = true;
        let mut count = 1;
        while count < self.n {
            let next = (0..self.n).find(|&i| !span[i]).unwrap() as u32;
            gens.push(next);
            let sub = self.subgroup(&gens);
            span = vec![false; self.n];
            for &x in &sub {
                span[x as usize] = true;
            }
            count = sub.len();
        }
        gens
    }

    /// Elements of the subgroup generated by `gens`, identity first.
    pub fn subgroup(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.m(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
        }
        out
    }

    #[inline]
    pub fn m(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn i(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, a: u32) -> &str {
        &self.labels[a as usize]
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replaces the declared generators.
    pub fn with_generators(mut self, gens: Vec<u32>) -> Self {
        self.gens = gens;
        self
    }

    pub fn to_table_json(&self) -> TableJson {
        TableJson {
            order: self.n,
            table: (0..self.n).map(|i| self.table[i * self.n..(i + 1) * self.n].to_vec()).collect(),
            labels: Some(self.labels.clone()),
        }
    }

    /// Direct product; elements are labelled `(x,y)`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        if n > MAX_TABLE_ORDER {
            return Err(Error::BudgetExhausted(format!("product order {n}")));
        }
        let enc = |a: u32, b: u32| a * n2 as u32 + b;
        let mut table = vec![0u32; n * n];
        for x in 0..n as u32 {
            let (a1, b1) = (x / n2 as u32, x % n2 as u32);
            for y in 0..n as u32 {
                let (a2, b2) = (y / n2 as u32, y % n2 as u32);
                table[(x as usize) * n + y as usize] = enc(self.m(a1, a2), other.m(b1, b2));
            }
        }
        let labels =
            (0..n as u32).map(|x| format!("({},{})", self.label(x / n2 as u32), other.label(x % n2 as u32))).collect();
        let mut gens: Vec<u32> = self.gens.iter().map(|&g| enc(g, 0)).collect();
        gens.extend(other.gens.iter().map(|&h| enc(0, h)));
        Self::from_parts(format!("{}x{}", self.name, other.name), n, table, Some(labels), gens)
    }
}

impl Group for FiniteGroup {
    type Elem = u32;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.m(*a, *b)
    }

    fn inv(&self, a: &u32) -> u32 {
        self.i(*a)
    }

    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }

    fn info(&self) -> FamilyInfo {
        *self.info.get_or_init(|| self.compute_info())
    }

    fn order(&self) -> Option<usize> {
        Some(self.n)
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.n as u32).collect())
    }

    fn format(&self, e: &u32) -> String {
        self.labels[*e as usize].clone()
    }

    fn parse(&self, text: &str) -> Result<u32> {
        let t = text.trim();
        if let Some(&i) = self.by_label.get(t) {
            return Ok(i);
        }
        if let Some(idx) = t.strip_prefix('#') {
            if let Ok(i) = idx.parse::<usize>() {
                if i < self.n {
                    return Ok(i as u32);
                }
            }
        }
        // Permutation groups also accept any spelling of a cycle decomposition.
        if t.starts_with('(') {
            if let Ok(p) = Perm::parse_cycles(t, 0) {
                if let Some(&i) = self.by_label.get(&p.to_string()) {
                    return Ok(i);
                }
            }
        }
        Err(Error::ParseElement {
            group: self.name.clone(),
            text: text.to_string(),
            reason: "no element with this label".into(),
        })
    }

    fn has_infinite_order(&self, _e: &u32) -> Option<bool> {
        Some(false)
    }

    fn element_order(&self, e: &u32, _limit: u64) -> Option<u64> {
        let mut x = *e;
        let mut k = 1;
        while x != 0 {
            x = self.m(x, *e);
            k += 1;
        }
        Some(k)
    }
}
