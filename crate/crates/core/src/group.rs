//! Finitely generated permutation groups with a fully materialised element
//! list, and the index-based group interface the exhaustive algorithms use.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::perm::Permutation;
use crate::{Budget, Error, Result};

/// A finite group whose elements are addressed by index `0..order`, with the
/// identity at index 0.
pub trait GroupOps {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    fn identity(&self) -> usize {
        0
    }

    fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// Multiplication table of a small group.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl CayleyTable {
    fn build(elements: &[Permutation]) -> Self {
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        let mut inverse = alloc::vec![0u32; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let k = elements.binary_search(&a.then(b)).expect("group is closed");
                table.push(k as u32);
                if k == 0 {
                    inverse[i] = j as u32;
                }
            }
        }
        CayleyTable { n, table, inverse }
    }
}

/// A permutation group on `{1, …, degree}` together with its sorted element
/// list. Element indices refer to positions in that list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    table: Option<CayleyTable>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::closure(degree, generators, &Budget::default())
    }

    /// Breadth-first product closure of the generators.
    pub fn closure(degree: usize, generators: Vec<Permutation>, budget: &Budget) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(alloc::format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
        let identity = Permutation::identity(degree);
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= budget.max_elements {
                        return Err(Error::Budget {
                            what: "group closure elements",
                            requested: seen.len() as u128 + 1,
                            limit: budget.max_elements as u128,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Permutation> = seen.into_iter().collect();
        Ok(Self::assemble(degree, generators, elements, budget))
    }

    fn assemble(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
        budget: &Budget,
    ) -> Self {
        let table = (elements.len() <= budget.max_table).then(|| CayleyTable::build(&elements));
        PermGroup {
            degree,
            generators,
            elements,
            table,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::assemble(
            degree,
            Vec::new(),
            alloc::vec![Permutation::identity(degree)],
            &Budget::default(),
        )
    }

    /// The group whose elements are exactly `elements` (which must already
    /// be closed). A small generating set is chosen greedily.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>, budget: &Budget) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: BTreeSet<Permutation> = BTreeSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            generators.push(e.clone());
            span = Self::closure(degree, generators.clone(), budget)?
                .elements
                .into_iter()
                .collect();
        }
        if span.len() != elements.len() || !span.iter().eq(elements.iter()) {
            return Err(Error::InvalidInput("element list is not a group".into()));
        }
        Ok(Self::assemble(degree, generators, elements, budget))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    /// Indices of the stored generators, identity generators dropped.
    pub fn generator_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index_of(g).expect("generator lies in group"))
            .filter(|&i| i != 0)
            .collect();
        out.dedup();
        out
    }

    /// Orbits on the 0-based points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = alloc::vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Orbits restricted to the 0-based points in `domain`, which must be a
    /// union of orbits.
    pub fn orbits_on(&self, domain: &[usize]) -> Result<Vec<Vec<usize>>> {
        let inside: BTreeSet<usize> = domain.iter().copied().collect();
        let orbits: Vec<Vec<usize>> = self
            .orbits()
            .into_iter()
            .filter(|o| inside.contains(&o[0]))
            .collect();
        if orbits.iter().map(Vec::len).sum::<usize>() != inside.len()
            || orbits.iter().flatten().any(|x| !inside.contains(x))
        {
            return Err(Error::InvalidInput("domain is not invariant".into()));
        }
        Ok(orbits)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Indices of the elements fixing the 0-based point `omega`.
    pub fn stabilizer_set(&self, omega: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.size());
        for (i, e) in self.elements.iter().enumerate() {
            if e.apply(omega) == omega {
                bits.insert(i);
            }
        }
        bits
    }

    pub fn point_stabilizer(&self, omega: usize, budget: &Budget) -> Result<PermGroup> {
        if omega >= self.degree {
            return Err(Error::InvalidInput(alloc::format!(
                "point {} outside 1..={}",
                omega + 1,
                self.degree
            )));
        }
        let elements = self
            .stabilizer_set(omega)
            .ones()
            .map(|i| self.elements[i].clone())
            .collect();
        PermGroup::from_elements(self.degree, elements, budget)
    }

    /// The subgroup on the given element indices as a standalone group.
    pub fn subgroup_group(&self, bits: &FixedBitSet, budget: &Budget) -> Result<PermGroup> {
        let elements = bits.ones().map(|i| self.elements[i].clone()).collect();
        PermGroup::from_elements(self.degree, elements, budget)
    }
}

impl GroupOps for PermGroup {
    fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t.table[a * t.n + b] as usize,
            None => self
                .index_of(&self.elements[a].then(&self.elements[b]))
                .expect("group is closed"),
        }
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        match &self.table {
            Some(t) => t.inverse[a] as usize,
            None => self
                .index_of(&self.elements[a].inverse())
                .expect("group is closed"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use alloc::vec;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        let gens = gens.iter().map(|g| parse_permutation(g, degree).unwrap()).collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(group(3, &["(1 2)", "(1 2 3)"]).size(), 6);
        assert_eq!(group(4, &["(1 2 3 4)", "(1 2)"]).size(), 24);
        assert_eq!(group(3, &[]).size(), 1);
    }

    #[test]
    fn closure_budget() {
        let budget = Budget {
            max_elements: 10,
            ..Budget::default()
        };
        let gens = vec![parse_permutation("(1 2 3 4)", 4).unwrap(), parse_permutation("(1 2)", 4).unwrap()];
        assert!(matches!(PermGroup::closure(4, gens, &budget), Err(Error::Budget { .. })));
    }

    #[test]
    fn table_and_permutation_paths_agree() {
        let small = group(4, &["(1 2 3 4)", "(1 2)"]);
        let gens = small.generators().to_vec();
        let no_table = PermGroup::closure(4, gens, &Budget { max_table: 0, ..Budget::default() }).unwrap();
        assert!(small.has_table() && !no_table.has_table());
        for a in 0..24 {
            assert_eq!(small.inv(a), no_table.inv(a));
            for b in 0..24 {
                assert_eq!(small.mul(a, b), no_table.mul(a, b));
            }
        }
    }

    #[test]
    fn orbit_stabilizer() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.orbits(), vec![vec![0, 1, 2]]);
        assert_eq!(s3.point_stabilizer(0, &Budget::default()).unwrap().size(), 2);
        assert_eq!(group(2, &[]).orbits().len(), 2);
        assert_eq!(group(4, &["(1 2)(3 4)"]).orbits(), vec![vec![0, 1], vec![2, 3]]);
        assert!(s3.point_stabilizer(3, &Budget::default()).is_err());
    }

    #[test]
    fn from_elements_rejects_non_groups() {
        let p = parse_permutation("(1 2 3)", 3).unwrap();
        let elements = vec![Permutation::identity(3), p];
        assert!(PermGroup::from_elements(3, elements, &Budget::default()).is_err());
    }

    #[test]
    fn element_orders() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let four = s4.index_of(&parse_permutation("(1 2 3 4)", 4).unwrap()).unwrap();
        assert_eq!(s4.element_order(four), 4);
        assert_eq!(s4.pow(four, 4), 0);
        assert_eq!(s4.element_order(0), 1);
    }
}
