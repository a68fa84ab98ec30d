//! Subgroups as element-index bitsets: generation, the full subgroup
//! lattice, normal structure, Frattini subgroups and quotients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::group::{GroupOps, PermGroup};
use crate::perm::Permutation;
use crate::{Budget, Error, Result};

/// A subgroup of an indexed group, with the generators it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: FixedBitSet,
    pub order: usize,
    pub gens: Vec<usize>,
}

impl Subgroup {
    pub fn trivial<G: GroupOps + ?Sized>(g: &G) -> Self {
        let mut elements = FixedBitSet::with_capacity(g.order());
        elements.insert(g.identity());
        Subgroup {
            elements,
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole<G: GroupOps + ?Sized>(g: &G) -> Self {
        let mut elements = FixedBitSet::with_capacity(g.order());
        elements.insert_range(..);
        let gens = whole_generators(g);
        Subgroup {
            elements,
            order: g.order(),
            gens,
        }
    }

    /// Greedy generators for a set already known to be a subgroup.
    pub fn from_bits<G: GroupOps + ?Sized>(g: &G, bits: &FixedBitSet) -> Self {
        let mut sub = Subgroup::trivial(g);
        for x in bits.ones() {
            if !sub.contains(x) {
                sub = extend(g, &sub, x);
            }
        }
        debug_assert_eq!(&sub.elements, bits);
        sub
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.ones()
    }
}

fn whole_generators<G: GroupOps + ?Sized>(g: &G) -> Vec<usize> {
    let mut sub = Subgroup {
        elements: {
            let mut b = FixedBitSet::with_capacity(g.order());
            b.insert(g.identity());
            b
        },
        order: 1,
        gens: Vec::new(),
    };
    for x in 0..g.order() {
        if !sub.contains(x) {
            sub = extend(g, &sub, x);
        }
    }
    sub.gens
}

/// Closes `start` (a set containing the identity) under right
/// multiplication by `gens`.
fn close<G: GroupOps + ?Sized>(g: &G, mut bits: FixedBitSet, gens: &[usize]) -> (FixedBitSet, usize) {
    let mut queue: Vec<usize> = bits.ones().collect();
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for &s in gens {
            let y = g.mul(x, s);
            if !bits.put(y) {
                queue.push(y);
            }
        }
        k += 1;
    }
    (bits, queue.len())
}

pub fn generate<G: GroupOps + ?Sized>(g: &G, gens: &[usize]) -> Subgroup {
    let mut bits = FixedBitSet::with_capacity(g.order());
    bits.insert(g.identity());
    let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != g.identity()).collect();
    let (elements, order) = close(g, bits, &gens);
    Subgroup {
        elements,
        order,
        gens,
    }
}

/// `⟨H, x⟩`.
pub fn extend<G: GroupOps + ?Sized>(g: &G, h: &Subgroup, x: usize) -> Subgroup {
    if h.contains(x) {
        return h.clone();
    }
    let mut gens = h.gens.clone();
    gens.push(x);
    let (elements, order) = close(g, h.elements.clone(), &gens);
    Subgroup {
        elements,
        order,
        gens,
    }
}

/// `⟨H, K⟩`.
pub fn join<G: GroupOps + ?Sized>(g: &G, h: &Subgroup, k: &Subgroup) -> Subgroup {
    k.gens.iter().fold(h.clone(), |acc, &x| extend(g, &acc, x))
}

/// Element-set intersection (always a subgroup).
pub fn intersection_bits(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut out = a.clone();
    out.intersect_with(b);
    out
}

/// Distinct cyclic subgroups, the trivial one first, then by order and
/// element set.
pub fn cyclic_subgroups<G: GroupOps + ?Sized>(g: &G) -> Vec<Subgroup> {
    let mut seen: BTreeMap<FixedBitSet, usize> = BTreeMap::new();
    let mut out = Vec::new();
    let mut covered = FixedBitSet::with_capacity(g.order());
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        let c = generate(g, &[x]);
        // every generator of ⟨x⟩ yields the same subgroup
        for y in c.indices() {
            if g.element_order(y) as usize == c.order {
                covered.insert(y);
            }
        }
        if !seen.contains_key(&c.elements) {
            seen.insert(c.elements.clone(), out.len());
            out.push(c);
        }
    }
    out.sort_by(|a, b| (a.order, &a.elements).cmp(&(b.order, &b.elements)));
    out
}

/// Conjugacy class label of each subgroup in `subs` under conjugation by
/// the group generators. Labels are the index of the class's first member.
pub fn conjugacy_labels<G: GroupOps + ?Sized>(g: &G, subs: &[Subgroup], group_gens: &[usize]) -> Vec<usize> {
    let index: BTreeMap<&FixedBitSet, usize> =
        subs.iter().enumerate().map(|(i, s)| (&s.elements, i)).collect();
    let mut label = alloc::vec![usize::MAX; subs.len()];
    for start in 0..subs.len() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = start;
        let mut stack = alloc::vec![start];
        while let Some(i) = stack.pop() {
            for &s in group_gens {
                let conj = conjugate(g, &subs[i], s);
                let j = *index.get(&conj).expect("conjugate subgroup is listed");
                if label[j] == usize::MAX {
                    label[j] = start;
                    stack.push(j);
                }
            }
        }
    }
    label
}

/// Element set of `s⁻¹ H s`.
pub fn conjugate<G: GroupOps + ?Sized>(g: &G, h: &Subgroup, s: usize) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(g.order());
    for x in h.indices() {
        out.insert(g.conj(x, s));
    }
    out
}

pub fn is_normal<G: GroupOps + ?Sized>(g: &G, h: &Subgroup, group_gens: &[usize]) -> bool {
    group_gens
        .iter()
        .all(|&s| h.gens.iter().all(|&x| h.contains(g.conj(x, s))))
}

/// Smallest subgroup containing `seeds` and normalised by `within`.
pub fn normal_closure<G: GroupOps + ?Sized>(g: &G, seeds: &[usize], within: &[usize]) -> Subgroup {
    let mut n = generate(g, seeds);
    loop {
        let mut grown = false;
        let gens = n.gens.clone();
        for &x in &gens {
            for &s in within {
                let c = g.conj(x, s);
                if !n.contains(c) {
                    n = extend(g, &n, c);
                    grown = true;
                }
            }
        }
        if !grown {
            return n;
        }
    }
}

/// `[H, H]`.
pub fn derived_subgroup<G: GroupOps + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let mut seeds = Vec::new();
    for (i, &a) in h.gens.iter().enumerate() {
        for &b in &h.gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    normal_closure(g, &seeds, &h.gens)
}

/// `[N, G]` for `N` normal in `G = ⟨group_gens⟩`.
pub fn commutator_with<G: GroupOps + ?Sized>(g: &G, n: &Subgroup, group_gens: &[usize]) -> Subgroup {
    let mut seeds = Vec::new();
    for &a in &n.gens {
        for &b in group_gens {
            seeds.push(g.commutator(a, b));
        }
    }
    normal_closure(g, &seeds, group_gens)
}

/// `G^p [G, G]`, which is the Frattini subgroup when `G` is a `p`-group.
pub fn burnside_frattini<G: GroupOps + ?Sized>(g: &G, p: u64, group_gens: &[usize]) -> Subgroup {
    let whole = generate(g, group_gens);
    let mut seeds: Vec<usize> = (0..g.order()).map(|x| g.pow(x, p)).collect();
    seeds.sort_unstable();
    seeds.dedup();
    let derived = derived_subgroup(g, &whole);
    seeds.extend(derived.gens.iter().copied());
    let mut sub = Subgroup::trivial(g);
    for x in seeds {
        sub = extend(g, &sub, x);
    }
    sub
}

pub fn is_soluble<G: GroupOps + ?Sized>(g: &G, group_gens: &[usize]) -> bool {
    let mut h = generate(g, group_gens);
    loop {
        if h.is_trivial() {
            return true;
        }
        let d = derived_subgroup(g, &h);
        if d.order == h.order {
            return false;
        }
        h = d;
    }
}

pub fn is_nilpotent<G: GroupOps + ?Sized>(g: &G, group_gens: &[usize]) -> bool {
    let mut h = generate(g, group_gens);
    loop {
        if h.is_trivial() {
            return true;
        }
        let next = commutator_with(g, &h, group_gens);
        if next.order == h.order {
            return false;
        }
        h = next;
    }
}

/// Every subgroup of a group, sorted by order and then element set.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
}

impl SubgroupLattice {
    /// Seeds with every cyclic subgroup and closes under joins until no new
    /// subgroup appears. Joining with cyclic subgroups suffices, since any
    /// join is an iterated join with the cyclic subgroups of one side.
    pub fn build(group: &PermGroup, budget: &Budget) -> Result<Self> {
        if group.size() > budget.max_lattice {
            return Err(Error::Budget {
                what: "subgroup lattice group order",
                requested: group.size() as u128,
                limit: budget.max_lattice as u128,
            });
        }
        Ok(Self::build_unchecked(group))
    }

    pub(crate) fn build_unchecked<G: GroupOps + ?Sized>(g: &G) -> Self {
        let cyclics = cyclic_subgroups(g);
        let mut known: BTreeMap<FixedBitSet, ()> = BTreeMap::new();
        let mut subgroups: Vec<Subgroup> = Vec::new();
        for c in &cyclics {
            known.insert(c.elements.clone(), ());
            subgroups.push(c.clone());
        }
        let mut k = 0;
        while k < subgroups.len() {
            let h = subgroups[k].clone();
            for c in &cyclics[1..] {
                let x = c.gens[0];
                if h.contains(x) {
                    continue;
                }
                let joined = extend(g, &h, x);
                if !known.contains_key(&joined.elements) {
                    known.insert(joined.elements.clone(), ());
                    subgroups.push(joined);
                }
            }
            k += 1;
        }
        subgroups.sort_by(|a, b| (a.order, &a.elements).cmp(&(b.order, &b.elements)));
        SubgroupLattice { subgroups }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().expect("lattice contains the group")
    }

    /// Position of a subgroup with exactly these elements.
    pub fn position(&self, bits: &FixedBitSet) -> Option<usize> {
        self.subgroups.iter().position(|s| &s.elements == bits)
    }

    /// Index `j` is listed in `contains(i)` when subgroup `j` ≤ subgroup `i`.
    pub fn contained_in(&self, i: usize) -> Vec<usize> {
        let top = &self.subgroups[i];
        (0..self.subgroups.len())
            .filter(|&j| self.subgroups[j].is_subgroup_of(top))
            .collect()
    }

    /// Proper subgroups contained in no other proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<usize> {
        let n = self.subgroups.len();
        let whole = n - 1;
        (0..whole)
            .filter(|&i| {
                let s = &self.subgroups[i];
                !(i + 1..whole).any(|j| {
                    let t = &self.subgroups[j];
                    t.order > s.order && s.is_subgroup_of(t)
                })
            })
            .collect()
    }

    /// Intersection of all maximal subgroups (the whole group if there are
    /// none).
    pub fn frattini_bits(&self) -> FixedBitSet {
        let mut bits = self.whole().elements.clone();
        for i in self.maximal_subgroups() {
            bits.intersect_with(&self.subgroups[i].elements);
        }
        bits
    }

    pub fn normal_subgroups<G: GroupOps + ?Sized>(&self, g: &G, group_gens: &[usize]) -> Vec<usize> {
        (0..self.subgroups.len())
            .filter(|&i| is_normal(g, &self.subgroups[i], group_gens))
            .collect()
    }

    /// Nontrivial normal subgroups containing no smaller nontrivial normal
    /// subgroup.
    pub fn minimal_normal_subgroups<G: GroupOps + ?Sized>(&self, g: &G, group_gens: &[usize]) -> Vec<usize> {
        let normal: Vec<usize> = self
            .normal_subgroups(g, group_gens)
            .into_iter()
            .filter(|&i| !self.subgroups[i].is_trivial())
            .collect();
        normal
            .iter()
            .copied()
            .filter(|&i| {
                let s = &self.subgroups[i];
                !normal.iter().any(|&j| {
                    let t = &self.subgroups[j];
                    t.order < s.order && t.is_subgroup_of(s)
                })
            })
            .collect()
    }
}

/// `G/N` acting on the right cosets `Nx` by right multiplication.
pub fn quotient_group(group: &PermGroup, n: &Subgroup, budget: &Budget) -> Result<PermGroup> {
    let gens = group.generator_indices();
    if !is_normal(group, n, &gens) {
        return Err(Error::InvalidInput("subgroup is not normal".into()));
    }
    let order = group.size();
    let mut coset = alloc::vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in n.indices() {
            coset[group.mul(m, x)] = id;
        }
    }
    let index = reps.len();
    let mut action = Vec::with_capacity(gens.len());
    for &s in &gens {
        let images: Vec<u32> = reps.iter().map(|&r| coset[group.mul(r, s)] as u32).collect();
        action.push(Permutation::from_images(images)?);
    }
    PermGroup::closure(index, action, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        let gens = gens.iter().map(|g| parse_permutation(g, degree).unwrap()).collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }

    fn lattice(g: &PermGroup) -> SubgroupLattice {
        SubgroupLattice::build(g, &Budget::default()).unwrap()
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(lattice(&group(3, &["(1 2)", "(1 2 3)"])).len(), 6);
        assert_eq!(lattice(&group(4, &["(1 2 3 4)", "(1 2)"])).len(), 30);
        assert_eq!(lattice(&group(5, &["(1 2 3 4 5)"])).len(), 2);
        // C2 x C2 x C2: 1 + 7 + 7 + 1
        assert_eq!(lattice(&group(6, &["(1 2)", "(3 4)", "(5 6)"])).len(), 16);
        // A5 has 59 subgroups, S5 has 156
        assert_eq!(lattice(&group(5, &["(1 2 3)", "(1 2 3 4 5)"])).len(), 59);
        assert_eq!(lattice(&group(5, &["(1 2)", "(1 2 3 4 5)"])).len(), 156);
    }

    #[test]
    fn lattice_is_join_closed_and_lagrange() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let l = lattice(&s4);
        for a in l.subgroups() {
            assert_eq!(24 % a.order, 0);
            for b in l.subgroups() {
                let j = join(&s4, a, b);
                assert!(l.position(&j.elements).is_some());
            }
        }
    }

    #[test]
    fn minimal_normal_examples() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let l = lattice(&s4);
        let mins = l.minimal_normal_subgroups(&s4, &s4.generator_indices());
        assert_eq!(mins.len(), 1);
        assert_eq!(l.subgroups()[mins[0]].order, 4);

        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let l = lattice(&s3);
        let mins = l.minimal_normal_subgroups(&s3, &s3.generator_indices());
        assert_eq!(mins.len(), 1);
        assert_eq!(l.subgroups()[mins[0]].order, 3);

        let v4 = group(4, &["(1 2)", "(3 4)"]);
        let l = lattice(&v4);
        let mins = l.minimal_normal_subgroups(&v4, &v4.generator_indices());
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|&i| l.subgroups()[i].order == 2));
    }

    #[test]
    fn frattini_examples() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        assert_eq!(lattice(&s4).frattini_bits().count_ones(..), 1);
        let c4 = group(4, &["(1 2 3 4)"]);
        assert_eq!(lattice(&c4).frattini_bits().count_ones(..), 2);
        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        let phi = lattice(&d8).frattini_bits();
        assert_eq!(phi.count_ones(..), 2);
        let burnside = burnside_frattini(&d8, 2, &d8.generator_indices());
        assert_eq!(burnside.elements, phi);
        // center of D8 is <(1 3)(2 4)>
        let z = d8.index_of(&parse_permutation("(1 3)(2 4)", 4).unwrap()).unwrap();
        assert!(phi.contains(z));
    }

    #[test]
    fn quotient_examples() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let l = lattice(&s4);
        let v4 = &l.subgroups()[l.minimal_normal_subgroups(&s4, &s4.generator_indices())[0]];
        let q = quotient_group(&s4, v4, &Budget::default()).unwrap();
        assert_eq!(q.size(), 6);
        assert!(!is_nilpotent(&q, &q.generator_indices()));
        let whole = Subgroup::whole(&s4);
        assert_eq!(quotient_group(&s4, &whole, &Budget::default()).unwrap().size(), 1);
        let one = Subgroup::trivial(&s4);
        let regular = quotient_group(&s4, &one, &Budget::default()).unwrap();
        assert_eq!((regular.size(), regular.degree()), (24, 24));
        let s3 = generate(&s4, &[s4.index_of(&parse_permutation("(1 2)", 4).unwrap()).unwrap(), s4.index_of(&parse_permutation("(1 2 3)", 4).unwrap()).unwrap()]);
        assert!(quotient_group(&s4, &s3, &Budget::default()).is_err());
    }

    #[test]
    fn solubility() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        assert!(is_soluble(&s4, &s4.generator_indices()));
        assert!(!is_nilpotent(&s4, &s4.generator_indices()));
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(!is_soluble(&a5, &a5.generator_indices()));
        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        assert!(is_nilpotent(&d8, &d8.generator_indices()));
    }

    #[test]
    fn cyclic_subgroup_classes() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let cyc = cyclic_subgroups(&s3);
        assert_eq!(cyc.len(), 5);
        let labels = conjugacy_labels(&s3, &cyc, &s3.generator_indices());
        let mut distinct = labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        // trivial, the three transpositions, A3
        assert_eq!(distinct.len(), 3);
    }
}
