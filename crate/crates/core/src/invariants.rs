//! Generating-set invariants of concrete groups: `d(G)`, `m(G)`, Sylow
//! ranks `d_p(G)`, `δ(G)`, chief series with complemented factors, and the
//! checks relating them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith;
use crate::group::{GroupOps, PermGroup};
use crate::lattice::{self, Subgroup, SubgroupLattice};
use crate::perm::Permutation;
use crate::{Budget, Error, Interrupt, Result};

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// `log_p n` for an exact power `n` of `p`.
fn exact_log(mut n: usize, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p as usize, 0);
        n /= p as usize;
        k += 1;
    }
    k
}

pub fn order_primes(g: &PermGroup) -> Vec<u64> {
    arith::prime_divisors_u64(g.size() as u64)
}

/// The prime `p` if `|G| = p^k` with `k ≥ 1`.
pub fn p_group_prime(g: &PermGroup) -> Option<u64> {
    arith::prime_power(g.size() as u64).map(|(p, _)| p)
}

fn check_interrupt(interrupt: &dyn Interrupt) -> Result<()> {
    if interrupt.should_stop() {
        Err(Error::Interrupted)
    } else {
        Ok(())
    }
}

/// Nontrivial cyclic subgroups in canonical order, and for each the label
/// of its conjugacy class (the index of the first class member).
fn cyclic_classes(g: &PermGroup) -> (Vec<Subgroup>, Vec<usize>) {
    let cyc: Vec<Subgroup> = lattice::cyclic_subgroups(g)
        .into_iter()
        .filter(|c| !c.is_trivial())
        .collect();
    let labels = lattice::conjugacy_labels(g, &cyc, &g.generator_indices());
    (cyc, labels)
}

/// `log_p [G : G'G^p]`, the rank of the largest elementary abelian
/// `p`-quotient. A lower bound for `d(G)`, and equal to it for `p`-groups.
pub fn elementary_quotient_rank(g: &PermGroup, p: u64) -> u32 {
    let phi = lattice::burnside_frattini(g, p, &g.generator_indices());
    exact_log(g.size() / phi.order, p)
}

/// A generating set of least size, as element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// `d(G)`. The search runs over increasing `k`, starting from the largest
/// elementary abelian quotient rank, which no generating set can undercut.
pub fn min_generators(g: &PermGroup, budget: &Budget, interrupt: &dyn Interrupt) -> Result<GeneratingSet> {
    let lower = order_primes(g)
        .into_iter()
        .map(|p| elementary_quotient_rank(g, p) as usize)
        .max()
        .unwrap_or(0);
    min_generators_from(g, lower, budget, interrupt)
}

/// `d(G)` searched from `k = 0` with no lower bound.
pub fn min_generators_exhaustive(g: &PermGroup, budget: &Budget, interrupt: &dyn Interrupt) -> Result<GeneratingSet> {
    min_generators_from(g, 0, budget, interrupt)
}

fn min_generators_from(g: &PermGroup, start: usize, budget: &Budget, interrupt: &dyn Interrupt) -> Result<GeneratingSet> {
    if g.size() > budget.max_search {
        return Err(Error::Budget {
            what: "generator search group order",
            requested: g.size() as u128,
            limit: budget.max_search as u128,
        });
    }
    if g.is_trivial() {
        return Ok(GeneratingSet {
            size: 0,
            witness: Vec::new(),
        });
    }
    let (mut cyc, labels) = cyclic_classes(g);
    let mut reps: Vec<usize> = (0..cyc.len()).filter(|&i| labels[i] == i).collect();
    // large cyclic subgroups first: generating sets turn up sooner
    let mut by_order: Vec<usize> = (0..cyc.len()).collect();
    by_order.sort_by(|&a, &b| cyc[b].order.cmp(&cyc[a].order).then(a.cmp(&b)));
    let mut rank = alloc::vec![0; cyc.len()];
    for (r, &i) in by_order.iter().enumerate() {
        rank[i] = r;
    }
    reps.sort_by_key(|&i| rank[i]);
    let gens: Vec<usize> = by_order.iter().map(|&i| cyc[i].gens[0]).collect();
    let reps: Vec<usize> = reps.iter().map(|&i| rank[i]).collect();
    cyc.clear();

    for k in start.max(1).. {
        let mut path = Vec::with_capacity(k);
        let trivial = Subgroup::trivial(g);
        for &r in &reps {
            check_interrupt(interrupt)?;
            path.push(r);
            let h = lattice::extend(g, &trivial, gens[r]);
            if generating_dfs(g, &gens, &h, k, 0, &mut path, interrupt)? {
                let witness = path.iter().map(|&i| gens[i]).collect();
                return Ok(GeneratingSet { size: k, witness });
            }
            path.pop();
        }
    }
    unreachable!("the whole group generates itself")
}

fn generating_dfs(
    g: &PermGroup,
    gens: &[usize],
    h: &Subgroup,
    k: usize,
    start: usize,
    path: &mut Vec<usize>,
    interrupt: &dyn Interrupt,
) -> Result<bool> {
    if h.order == g.size() {
        return Ok(true);
    }
    if path.len() == k {
        return Ok(false);
    }
    check_interrupt(interrupt)?;
    for i in start..gens.len() {
        if h.contains(gens[i]) {
            continue;
        }
        let next = lattice::extend(g, h, gens[i]);
        path.push(i);
        if generating_dfs(g, gens, &next, k, i + 1, path, interrupt)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Whether `set` generates `G` and no member lies in the subgroup generated
/// by the others.
pub fn is_independent_generating(g: &PermGroup, set: &[usize]) -> bool {
    if lattice::generate(g, set).order != g.size() {
        return false;
    }
    (0..set.len()).all(|i| {
        let others: Vec<usize> = set
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        !lattice::generate(g, &others).contains(set[i])
    })
}

/// A largest independent generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    pub m: usize,
    pub witness: Vec<Permutation>,
    /// Search nodes visited.
    pub nodes: u64,
}

/// `m(G)` by depth-first search over independent sets of cyclic subgroups.
///
/// Only the subgroup `⟨x⟩` matters for independence, so the search runs over
/// nontrivial cyclic subgroups. The first member ranges over conjugacy class
/// representatives and later members are taken in increasing order. A set
/// with a redundant member stays redundant when enlarged, so such branches
/// are cut at once; a generating set cannot be extended. With `H = ⟨X⟩`
/// every further member strictly enlarges the generated subgroup, so at most
/// `Ω([G:H])` more can be added.
pub fn max_independent_generating_set(
    g: &PermGroup,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<IndependentSet> {
    if g.size() > budget.max_lattice {
        return Err(Error::Budget {
            what: "independent set search group order",
            requested: g.size() as u128,
            limit: budget.max_lattice as u128,
        });
    }
    if g.is_trivial() {
        return Ok(IndependentSet {
            m: 0,
            witness: Vec::new(),
            nodes: 0,
        });
    }
    let (cyc, labels) = cyclic_classes(g);
    let mut search = MSearch {
        g,
        gens: cyc.iter().map(|c| c.gens[0]).collect(),
        best: Vec::new(),
        nodes: 0,
        interrupt,
    };
    let trivial = Subgroup::trivial(g);
    for r in (0..cyc.len()).filter(|&i| labels[i] == i) {
        let h = cyc[r].clone();
        // with one member, the subgroup of the others is trivial
        let mut state = alloc::vec![(r, trivial.clone())];
        search.dfs(&mut state, &h, 0)?;
    }
    let witness_idx = search.best.clone();
    if !is_independent_generating(g, &witness_idx) {
        return Err(Error::Violation("independent set witness failed revalidation".into()));
    }
    Ok(IndependentSet {
        m: witness_idx.len(),
        witness: witness_idx.iter().map(|&i| g.element(i).clone()).collect(),
        nodes: search.nodes,
    })
}

struct MSearch<'a> {
    g: &'a PermGroup,
    gens: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    interrupt: &'a dyn Interrupt,
}

impl MSearch<'_> {
    /// `state` holds each chosen cyclic subgroup with the subgroup generated
    /// by the other chosen ones; `h` is generated by all of them.
    fn dfs(&mut self, state: &mut [(usize, Subgroup)], h: &Subgroup, start: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            check_interrupt(self.interrupt)?;
        }
        let order = self.g.size();
        if h.order == order {
            if state.len() > self.best.len() {
                self.best = state.iter().map(|(i, _)| self.gens[*i]).collect();
            }
            return Ok(());
        }
        let headroom = arith::big_omega((order / h.order) as u64) as usize;
        if state.len() + headroom <= self.best.len() {
            return Ok(());
        }
        for i in start..self.gens.len() {
            let y = self.gens[i];
            if h.contains(y) {
                continue;
            }
            let mut next_state = Vec::with_capacity(state.len() + 1);
            let mut independent = true;
            for (j, others) in state.iter() {
                let grown = lattice::extend(self.g, others, y);
                if grown.contains(self.gens[*j]) {
                    independent = false;
                    break;
                }
                next_state.push((*j, grown));
            }
            if !independent {
                continue;
            }
            next_state.push((i, h.clone()));
            let next_h = lattice::extend(self.g, h, y);
            self.dfs(&mut next_state, &next_h, i + 1)?;
            if state.len() + headroom <= self.best.len() {
                break;
            }
        }
        Ok(())
    }
}

pub fn frattini_subgroup(g: &PermGroup, lattice: &SubgroupLattice) -> Subgroup {
    Subgroup::from_bits(g, &lattice.frattini_bits())
}

/// A Sylow `p`-subgroup: the first of the right order in the lattice when
/// one is given, otherwise grown one normalising `p`-element at a time.
pub fn sylow_subgroup(g: &PermGroup, p: u64, lattice: Option<&SubgroupLattice>) -> Result<Subgroup> {
    if !arith::is_prime(p as u128) {
        return Err(Error::InvalidInput(alloc::format!("{p} is not prime")));
    }
    let target = p_part(g.size(), p);
    match lattice {
        Some(l) => Ok(l
            .subgroups()
            .iter()
            .find(|s| s.order == target)
            .expect("Sylow subgroups exist")
            .clone()),
        None => Ok(sylow_by_growth(g, p)),
    }
}

/// Repeatedly adjoins the least `p`-element that normalises the current
/// `p`-subgroup `H` without lying in it. While `p` divides `[G:H]` it also
/// divides `[N_G(H):H]`, so such an element exists until `H` is Sylow.
pub fn sylow_by_growth(g: &PermGroup, p: u64) -> Subgroup {
    let target = p_part(g.size(), p);
    let p_elements: Vec<usize> = (1..g.size())
        .filter(|&x| arith::prime_power(g.element_order(x)).map(|(q, _)| q) == Some(p))
        .collect();
    let mut h = Subgroup::trivial(g);
    while h.order < target {
        let x = *p_elements
            .iter()
            .find(|&&x| !h.contains(x) && h.gens.iter().all(|&s| h.contains(g.conj(s, x))))
            .expect("a normalising p-element exists below Sylow order");
        h = lattice::extend(g, &h, x);
    }
    h
}

/// Rank of a Sylow subgroup computed along every available route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowRank {
    pub p: u64,
    pub sylow_order: usize,
    /// `d(P)` by generator search.
    pub search: u32,
    /// `log_p [P : Φ(P)]` with `Φ(P)` the intersection of maximal subgroups;
    /// absent when `P` exceeds the lattice budget.
    pub lattice_frattini: Option<u32>,
    /// `log_p [P : P^p P']`.
    pub burnside: u32,
}

impl SylowRank {
    pub fn consistent(&self) -> bool {
        self.search == self.burnside && self.lattice_frattini.is_none_or(|r| r == self.search)
    }
}

/// Rank of a `p`-group along the three routes.
pub fn p_group_rank(p_group: &PermGroup, p: u64, budget: &Budget, interrupt: &dyn Interrupt) -> Result<SylowRank> {
    let search = min_generators(p_group, budget, interrupt)?.size as u32;
    let lattice_frattini = if p_group.size() <= budget.max_lattice {
        let l = SubgroupLattice::build(p_group, budget)?;
        let phi = l.frattini_bits().count_ones(..);
        Some(exact_log(p_group.size() / phi, p))
    } else {
        None
    };
    Ok(SylowRank {
        p,
        sylow_order: p_group.size(),
        search,
        lattice_frattini,
        burnside: elementary_quotient_rank(p_group, p),
    })
}

pub fn sylow_rank(
    g: &PermGroup,
    p: u64,
    lattice: Option<&SubgroupLattice>,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<SylowRank> {
    let sylow = sylow_subgroup(g, p, lattice)?;
    let group = g.subgroup_group(&sylow.elements, budget)?;
    p_group_rank(&group, p, budget, interrupt)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaRecord {
    pub d_p: BTreeMap<u64, u32>,
    pub delta: u32,
    pub ranks: Vec<SylowRank>,
}

impl DeltaRecord {
    pub fn consistent(&self) -> bool {
        self.ranks.iter().all(SylowRank::consistent)
    }
}

/// `δ(G) = Σ_p d_p(G)`. Sylow subgroups come from `lattice` when given.
pub fn delta_of_group(
    g: &PermGroup,
    lattice: Option<&SubgroupLattice>,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<DeltaRecord> {
    let mut ranks = Vec::new();
    for p in order_primes(g) {
        ranks.push(sylow_rank(g, p, lattice, budget, interrupt)?);
    }
    let d_p: BTreeMap<u64, u32> = ranks.iter().map(|r| (r.p, r.search)).collect();
    Ok(DeltaRecord {
        delta: d_p.values().sum(),
        d_p,
        ranks,
    })
}

/// Which minimal normal subgroup a chief series picks at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesChoice {
    First,
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefFactor {
    pub order: usize,
    /// The prime when the factor has prime-power order.
    pub prime: Option<u64>,
    pub complemented: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefSeriesRecord {
    /// Lattice indices of `1 = N_0 < N_1 < … < N_r = G`.
    pub terms: Vec<usize>,
    pub factors: Vec<ChiefFactor>,
}

impl ChiefSeriesRecord {
    /// Complemented factors of `p`-power order, per prime of `|G|`.
    pub fn alpha(&self, primes: &[u64]) -> BTreeMap<u64, u32> {
        let mut out: BTreeMap<u64, u32> = primes.iter().map(|&p| (p, 0)).collect();
        for f in &self.factors {
            if let (Some(p), true) = (f.prime, f.complemented) {
                *out.entry(p).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn complemented_count(&self) -> usize {
        self.factors.iter().filter(|f| f.complemented).count()
    }
}

/// A chief series built bottom-up: each step moves from `N` to a normal
/// subgroup `M` of `G` that is minimal among those strictly above `N`. The
/// factor `M/N` is complemented when some `H ≥ N` has `H ∩ M = N` and
/// `HM = G`.
pub fn chief_series(g: &PermGroup, lattice: &SubgroupLattice, choice: SeriesChoice) -> ChiefSeriesRecord {
    let subs = lattice.subgroups();
    let normal = lattice.normal_subgroups(g, &g.generator_indices());
    let mut current = 0usize;
    let mut terms = alloc::vec![current];
    let mut factors = Vec::new();
    while subs[current].order < g.size() {
        let n = &subs[current];
        let above: Vec<usize> = normal
            .iter()
            .copied()
            .filter(|&i| subs[i].order > n.order && n.is_subgroup_of(&subs[i]))
            .collect();
        let minimal: Vec<usize> = above
            .iter()
            .copied()
            .filter(|&i| {
                !above
                    .iter()
                    .any(|&j| subs[j].order < subs[i].order && subs[j].is_subgroup_of(&subs[i]))
            })
            .collect();
        let next = match choice {
            SeriesChoice::First => minimal[0],
            SeriesChoice::Last => *minimal.last().expect("G is above N"),
        };
        let m = &subs[next];
        let complemented = subs.iter().any(|h| {
            n.is_subgroup_of(h)
                && lattice::intersection_bits(&h.elements, &m.elements).count_ones(..) == n.order
                && h.order * m.order / n.order == g.size()
        });
        let order = m.order / n.order;
        factors.push(ChiefFactor {
            order,
            prime: arith::prime_power(order as u64).map(|(p, _)| p),
            complemented,
        });
        terms.push(next);
        current = next;
    }
    ChiefSeriesRecord { terms, factors }
}

/// `m(G, N) = m(G) − m(G/N)` for a normal subgroup `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MRelative {
    pub m_group: usize,
    pub m_quotient: usize,
    pub value: i64,
    pub abelian: bool,
    pub in_frattini: bool,
}

impl MRelative {
    /// For abelian `N`: the value is 0 when `N ≤ Φ(G)` and 1 otherwise.
    /// Vacuous for non-abelian `N`.
    pub fn dichotomy_holds(&self) -> bool {
        !self.abelian || self.value == if self.in_frattini { 0 } else { 1 }
    }
}

pub fn is_abelian<G: GroupOps + ?Sized>(g: &G, h: &Subgroup) -> bool {
    h.gens
        .iter()
        .enumerate()
        .all(|(i, &a)| h.gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn m_relative(
    g: &PermGroup,
    lattice: &SubgroupLattice,
    n: &Subgroup,
    m_group: Option<usize>,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<MRelative> {
    let m_group = match m_group {
        Some(m) => m,
        None => max_independent_generating_set(g, budget, interrupt)?.m,
    };
    let quotient = lattice::quotient_group(g, n, budget)?;
    let m_quotient = max_independent_generating_set(&quotient, budget, interrupt)?.m;
    let phi = lattice.frattini_bits();
    Ok(MRelative {
        m_group,
        m_quotient,
        value: m_group as i64 - m_quotient as i64,
        abelian: is_abelian(g, n),
        in_frattini: n.elements.is_subset(&phi),
    })
}

/// One minimal normal subgroup and the checks made on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalNormalCheck {
    pub order: usize,
    pub in_frattini: bool,
    pub delta_group: u32,
    pub delta_quotient: u32,
    pub primes: usize,
    pub relative: MRelative,
}

impl MinimalNormalCheck {
    /// `δ(G) ≥ δ(G/N) + |π(N)|`, required only when `N ⊄ Φ(G)`.
    pub fn delta_bound_holds(&self) -> bool {
        self.in_frattini || self.delta_group >= self.delta_quotient + self.primes as u32
    }
}

pub fn check_minimal_normals(
    g: &PermGroup,
    lattice: &SubgroupLattice,
    delta_group: u32,
    m_group: usize,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<Vec<MinimalNormalCheck>> {
    let mut out = Vec::new();
    let phi = lattice.frattini_bits();
    for i in lattice.minimal_normal_subgroups(g, &g.generator_indices()) {
        let n = &lattice.subgroups()[i];
        let quotient = lattice::quotient_group(g, n, budget)?;
        let q_lattice = SubgroupLattice::build(&quotient, budget)?;
        let delta_quotient = delta_of_group(&quotient, Some(&q_lattice), budget, interrupt)?.delta;
        out.push(MinimalNormalCheck {
            order: n.order,
            in_frattini: n.elements.is_subset(&phi),
            delta_group,
            delta_quotient,
            primes: arith::prime_divisors_u64(n.order as u64).len(),
            relative: m_relative(g, lattice, n, Some(m_group), budget, interrupt)?,
        });
    }
    Ok(out)
}

/// The invariants of one group and every check made on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupProfile {
    pub order: usize,
    pub soluble: bool,
    pub nilpotent: bool,
    pub d: usize,
    pub m: usize,
    pub m_witness: Vec<Permutation>,
    pub d_p: BTreeMap<u64, u32>,
    pub delta: u32,
    /// Only for soluble groups.
    pub alpha_p: Option<BTreeMap<u64, u32>>,
    /// Complemented-factor counts of the second chief series, when one with a
    /// different choice of minimal normal subgroup exists.
    pub alpha_p_alternative: Option<BTreeMap<u64, u32>>,
    pub series: ChiefSeriesRecord,
    pub sylow_ranks: Vec<SylowRank>,
    pub minimal_normals: Vec<MinimalNormalCheck>,
}

impl GroupProfile {
    /// `m ≤ δ`.
    pub fn dennis_holds(&self) -> bool {
        self.m as u32 <= self.delta
    }

    /// For soluble groups, `m = Σ α_p`.
    pub fn alpha_identity_holds(&self) -> Option<bool> {
        self.alpha_p
            .as_ref()
            .map(|a| a.values().sum::<u32>() as usize == self.m)
    }

    pub fn alpha_series_agree(&self) -> Option<bool> {
        match (&self.alpha_p, &self.alpha_p_alternative) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        }
    }

    pub fn nilpotent_equality_holds(&self) -> bool {
        !self.nilpotent || self.m as u32 == self.delta
    }

    pub fn ranks_consistent(&self) -> bool {
        self.d <= self.m && self.sylow_ranks.iter().all(SylowRank::consistent)
    }

    pub fn delta_quotient_lemma_holds(&self) -> bool {
        self.minimal_normals.iter().all(MinimalNormalCheck::delta_bound_holds)
    }

    pub fn frattini_dichotomy_holds(&self) -> bool {
        self.minimal_normals.iter().all(|c| c.relative.dichotomy_holds())
    }

    /// Every identity that must hold for this group. A non-soluble `m > δ`
    /// is not counted here; see [`GroupProfile::dennis_holds`].
    pub fn identities_hold(&self) -> bool {
        (!self.soluble || self.dennis_holds())
            && self.alpha_identity_holds().unwrap_or(true)
            && self.alpha_series_agree().unwrap_or(true)
            && self.nilpotent_equality_holds()
            && self.ranks_consistent()
            && self.delta_quotient_lemma_holds()
            && self.frattini_dichotomy_holds()
    }
}

pub fn profile(g: &PermGroup, budget: &Budget, interrupt: &dyn Interrupt) -> Result<GroupProfile> {
    let lattice = SubgroupLattice::build(g, budget)?;
    let gens = g.generator_indices();
    let soluble = lattice::is_soluble(g, &gens);
    let nilpotent = lattice::is_nilpotent(g, &gens);
    let d = min_generators(g, budget, interrupt)?.size;
    let independent = max_independent_generating_set(g, budget, interrupt)?;
    let delta = delta_of_group(g, Some(&lattice), budget, interrupt)?;
    let primes = order_primes(g);
    let series = chief_series(g, &lattice, SeriesChoice::First);
    let alternative = chief_series(g, &lattice, SeriesChoice::Last);
    let (alpha_p, alpha_p_alternative) = if soluble {
        let alt = (alternative.terms != series.terms).then(|| alternative.alpha(&primes));
        (Some(series.alpha(&primes)), alt)
    } else {
        (None, None)
    };
    let minimal_normals = check_minimal_normals(g, &lattice, delta.delta, independent.m, budget, interrupt)?;
    Ok(GroupProfile {
        order: g.size(),
        soluble,
        nilpotent,
        d,
        m: independent.m,
        m_witness: independent.witness,
        d_p: delta.d_p,
        delta: delta.delta,
        alpha_p,
        alpha_p_alternative,
        series,
        sylow_ranks: delta.ranks,
        minimal_normals,
    })
}

/// `m ≤ δ`, and for soluble groups `m = Σ α_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DennisReport {
    pub m: usize,
    pub delta: u32,
    pub holds: bool,
    pub soluble: bool,
    pub alpha_sum: Option<u32>,
    pub alpha_identity: Option<bool>,
}

impl From<&GroupProfile> for DennisReport {
    fn from(p: &GroupProfile) -> Self {
        DennisReport {
            m: p.m,
            delta: p.delta,
            holds: p.dennis_holds(),
            soluble: p.soluble,
            alpha_sum: p.alpha_p.as_ref().map(|a| a.values().sum()),
            alpha_identity: p.alpha_identity_holds(),
        }
    }
}

pub fn check_dennis(g: &PermGroup, budget: &Budget, interrupt: &dyn Interrupt) -> Result<DennisReport> {
    Ok(DennisReport::from(&profile(g, budget, interrupt)?))
}

pub fn check_delta_quotient_lemma(
    g: &PermGroup,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<Vec<MinimalNormalCheck>> {
    let lattice = SubgroupLattice::build(g, budget)?;
    let delta = delta_of_group(g, Some(&lattice), budget, interrupt)?.delta;
    let m = max_independent_generating_set(g, budget, interrupt)?.m;
    check_minimal_normals(g, &lattice, delta, m, budget, interrupt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use crate::NeverInterrupt;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        let gens = gens.iter().map(|g| parse_permutation(g, degree).unwrap()).collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }

    fn s(n: usize) -> PermGroup {
        let cycle: alloc::string::String = {
            let pts: Vec<alloc::string::String> = (1..=n).map(|i| alloc::format!("{i}")).collect();
            alloc::format!("({})", pts.join(" "))
        };
        if n == 1 {
            return PermGroup::trivial(1);
        }
        group(n, &[&cycle, "(1 2)"])
    }

    const B: Budget = Budget {
        max_elements: 200_000,
        max_table: 2_500,
        max_lattice: 2_000,
        max_search: 20_000,
    };

    #[test]
    fn d_examples() {
        assert_eq!(min_generators(&s(4), &B, &NeverInterrupt).unwrap().size, 2);
        let v4 = group(4, &["(1 2)", "(3 4)"]);
        assert_eq!(min_generators(&v4, &B, &NeverInterrupt).unwrap().size, 2);
        let q8 = group(8, &["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"]);
        assert_eq!(q8.size(), 8);
        assert_eq!(min_generators(&q8, &B, &NeverInterrupt).unwrap().size, 2);
        assert_eq!(min_generators(&PermGroup::trivial(3), &B, &NeverInterrupt).unwrap().size, 0);
    }

    #[test]
    fn d_lower_bound_matches_exhaustive() {
        let groups = [
            s(3),
            s(4),
            s(5),
            group(4, &["(1 2 3 4)"]),
            group(6, &["(1 2)", "(3 4)", "(5 6)"]),
            group(5, &["(1 2 3)", "(1 2 3 4 5)"]),
            group(6, &["(1 2 3)(4 5)"]),
        ];
        for g in &groups {
            let fast = min_generators(g, &B, &NeverInterrupt).unwrap();
            let slow = min_generators_exhaustive(g, &B, &NeverInterrupt).unwrap();
            assert_eq!(fast.size, slow.size);
            assert_eq!(lattice::generate(g, &fast.witness).order, g.size());
        }
    }

    #[test]
    fn m_examples() {
        let m = |g: &PermGroup| max_independent_generating_set(g, &B, &NeverInterrupt).unwrap().m;
        assert_eq!(m(&s(2)), 1);
        assert_eq!(m(&s(3)), 2);
        assert_eq!(m(&s(4)), 3);
        assert_eq!(m(&group(6, &["(1 2)", "(3 4)", "(5 6)"])), 3);
        assert_eq!(m(&group(4, &["(1 2 3 4)"])), 1);
        assert_eq!(m(&PermGroup::trivial(2)), 0);
        // C6 = C2 x C3 has the independent set {x^3, x^2}
        assert_eq!(m(&group(5, &["(1 2)(3 4 5)"])), 2);
    }

    #[test]
    fn m_witness_is_independent() {
        let g = s(4);
        let r = max_independent_generating_set(&g, &B, &NeverInterrupt).unwrap();
        let idx: Vec<usize> = r.witness.iter().map(|p| g.index_of(p).unwrap()).collect();
        assert!(is_independent_generating(&g, &idx));
        assert!(!is_independent_generating(&g, &[idx[0], idx[1]]));
    }

    #[test]
    fn sylow_examples() {
        let s4 = s(4);
        let l = SubgroupLattice::build(&s4, &B).unwrap();
        let p2 = sylow_subgroup(&s4, 2, Some(&l)).unwrap();
        assert_eq!(p2.order, 8);
        let p2g = s4.subgroup_group(&p2.elements, &B).unwrap();
        assert!(!is_abelian(&p2g, &Subgroup::whole(&p2g)));
        let s3 = s(3);
        let p3 = sylow_subgroup(&s3, 3, None).unwrap();
        assert!(p3.contains(s3.index_of(&parse_permutation("(1 2 3)", 3).unwrap()).unwrap()));
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert_eq!(sylow_subgroup(&a5, 5, None).unwrap().order, 5);
        assert_eq!(sylow_by_growth(&a5, 2).order, 4);
        assert_eq!(sylow_by_growth(&s4, 2).order, 8);
    }

    #[test]
    fn delta_examples() {
        let r = delta_of_group(&s(4), None, &B, &NeverInterrupt).unwrap();
        assert_eq!(r.d_p, BTreeMap::from([(2, 2), (3, 1)]));
        assert_eq!(r.delta, 3);
        assert!(r.consistent());
        let c30 = group(10, &["(1 2)(3 4 5)(6 7 8 9 10)"]);
        assert_eq!(delta_of_group(&c30, None, &B, &NeverInterrupt).unwrap().delta, 3);
    }

    #[test]
    fn chief_series_examples() {
        let s4 = s(4);
        let l = SubgroupLattice::build(&s4, &B).unwrap();
        let cs = chief_series(&s4, &l, SeriesChoice::First);
        let orders: Vec<usize> = cs.factors.iter().map(|f| f.order).collect();
        assert_eq!(orders, [4, 3, 2]);
        assert!(cs.factors.iter().all(|f| f.complemented));
        assert_eq!(cs.alpha(&[2, 3]), BTreeMap::from([(2, 2), (3, 1)]));

        let c4 = group(4, &["(1 2 3 4)"]);
        let l = SubgroupLattice::build(&c4, &B).unwrap();
        let cs = chief_series(&c4, &l, SeriesChoice::First);
        assert_eq!(cs.factors.len(), 2);
        assert!(!cs.factors[0].complemented);
        assert!(cs.factors[1].complemented);
        assert_eq!(cs.alpha(&[2]), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn relative_m_examples() {
        let s4 = s(4);
        let l = SubgroupLattice::build(&s4, &B).unwrap();
        let v4 = &l.subgroups()[l.minimal_normal_subgroups(&s4, &s4.generator_indices())[0]];
        let r = m_relative(&s4, &l, v4, None, &B, &NeverInterrupt).unwrap();
        assert_eq!((r.m_group, r.m_quotient, r.value), (3, 2, 1));
        assert!(!r.in_frattini && r.dichotomy_holds());

        let c4 = group(4, &["(1 2 3 4)"]);
        let l = SubgroupLattice::build(&c4, &B).unwrap();
        let phi = frattini_subgroup(&c4, &l);
        let r = m_relative(&c4, &l, &phi, None, &B, &NeverInterrupt).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.in_frattini && r.dichotomy_holds());

        let trivial = Subgroup::trivial(&s4);
        let l = SubgroupLattice::build(&s4, &B).unwrap();
        assert_eq!(m_relative(&s4, &l, &trivial, None, &B, &NeverInterrupt).unwrap().value, 0);
    }

    #[test]
    fn profile_s4() {
        let p = profile(&s(4), &B, &NeverInterrupt).unwrap();
        assert_eq!((p.order, p.d, p.m, p.delta), (24, 2, 3, 3));
        assert!(p.soluble && !p.nilpotent);
        assert_eq!(p.alpha_p, Some(BTreeMap::from([(2, 2), (3, 1)])));
        assert!(p.identities_hold());
        let s3 = profile(&s(3), &B, &NeverInterrupt).unwrap();
        let a3 = &s3.minimal_normals[0];
        assert_eq!((a3.delta_group, a3.delta_quotient, a3.primes), (2, 1, 1));
        assert!(a3.delta_bound_holds());
    }

    #[test]
    fn nilpotent_equality() {
        let v4 = group(4, &["(1 2)", "(3 4)"]);
        let p = profile(&v4, &B, &NeverInterrupt).unwrap();
        assert!(p.nilpotent);
        assert_eq!((p.m, p.delta), (2, 2));
        assert!(p.identities_hold());
    }

    #[test]
    fn budget_errors() {
        let tiny = Budget {
            max_lattice: 10,
            max_search: 10,
            ..B
        };
        assert!(matches!(
            max_independent_generating_set(&s(4), &tiny, &NeverInterrupt),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(min_generators(&s(4), &tiny, &NeverInterrupt), Err(Error::Budget { .. })));
        let stop = || true;
        assert!(matches!(min_generators(&s(4), &B, &stop), Err(Error::Interrupted)));
    }
}
