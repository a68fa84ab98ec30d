//! Imprimitive wreath products `Q wr_Δ P`, their ranks, the independence
//! number `t_Ω(K)` of a transitive group, and the Sylow-rank inequality for
//! `S wr_Ω K` with `S` non-abelian simple.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::group::PermGroup;
use crate::invariants::{self, p_group_prime};
use crate::lattice::{self, Subgroup, SubgroupLattice};
use crate::perm::Permutation;
use crate::{arith, Budget, Error, Interrupt, Result};

fn cyclic_regular(n: usize) -> PermGroup {
    let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let c = Permutation::from_images(images).expect("a cycle");
    PermGroup::from_generators(n, alloc::vec![c]).expect("cyclic group")
}

/// The base and top groups of the standard rank test matrix: each base
/// group `Q` among `C2, C3, C4, C2×C2, D8, C9` against a trivial top group
/// on two points, `C_p` regular, and `C_p` on `p` points plus a fixed point.
pub fn rank_test_matrix() -> Vec<(String, WreathSpec)> {
    let perm = |degree: usize, cycles: &[&[u32]]| {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).expect("valid cycles")
    };
    let v4 = PermGroup::from_generators(4, alloc::vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])])
        .expect("Klein four-group");
    let d8 = PermGroup::from_generators(4, alloc::vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])])
        .expect("dihedral group");
    let bases: [(&str, PermGroup, u64); 6] = [
        ("C2", cyclic_regular(2), 2),
        ("C3", cyclic_regular(3), 3),
        ("C4", cyclic_regular(4), 2),
        ("C2xC2", v4, 2),
        ("D8", d8, 2),
        ("C9", cyclic_regular(9), 3),
    ];
    let mut out = Vec::new();
    for (name, q, p) in bases {
        let p = p as usize;
        let cp = cyclic_regular(p);
        let padded = PermGroup::from_generators(p + 1, cp.generators().iter().map(|g| g.extend_to(p + 1)).collect())
            .expect("padded cyclic group");
        let tops = [
            (String::from("1 on 2 points"), PermGroup::trivial(2)),
            (alloc::format!("C{p} regular"), cp),
            (alloc::format!("C{p} on {} points", p + 1), padded),
        ];
        for (top, pg) in tops {
            out.push((alloc::format!("{name} wr {top}"), WreathSpec::new(q.clone(), pg)));
        }
    }
    out
}

/// `Q` acting on `Γ` and `P` acting on `Δ`.
#[derive(Debug, Clone)]
pub struct WreathSpec {
    pub q: PermGroup,
    pub p: PermGroup,
}

impl WreathSpec {
    pub fn new(q: PermGroup, p: PermGroup) -> Self {
        WreathSpec { q, p }
    }

    /// `|Q|^|Δ| · |P|`, or `None` on overflow.
    pub fn product_order(&self) -> Option<u128> {
        (self.q.size() as u128)
            .checked_pow(self.p.degree() as u32)?
            .checked_mul(self.p.size() as u128)
    }

    /// 0-based point of `Γ × Δ` for 0-based `γ` and `δ`. Fibres are
    /// contiguous blocks of length `|Γ|`.
    #[inline]
    pub fn point(&self, gamma: usize, delta: usize) -> usize {
        delta * self.q.degree() + gamma
    }

    /// Generators of the wreath product: every generator of `Q` placed on
    /// each fibre, and every generator of `P` permuting whole fibres.
    pub fn generators(&self) -> Vec<Permutation> {
        let (ng, nd) = (self.q.degree(), self.p.degree());
        let degree = ng * nd;
        let mut out = Vec::new();
        for q in self.q.generators() {
            for fibre in 0..nd {
                let mut images: Vec<u32> = (0..degree as u32).collect();
                for gamma in 0..ng {
                    images[self.point(gamma, fibre)] = self.point(q.apply(gamma), fibre) as u32;
                }
                out.push(Permutation::from_images(images).expect("bijection on a fibre"));
            }
        }
        for p in self.p.generators() {
            let images = (0..nd)
                .flat_map(|delta| (0..ng).map(move |gamma| (gamma, delta)))
                .map(|(gamma, delta)| self.point(gamma, p.apply(delta)) as u32)
                .collect();
            out.push(Permutation::from_images(images).expect("fibres are permuted"));
        }
        out.retain(|g| !g.is_identity());
        out
    }
}

/// `Q wr_Δ P` on `Γ × Δ`.
pub fn wreath_product(spec: &WreathSpec, budget: &Budget) -> Result<PermGroup> {
    let order = spec.product_order().unwrap_or(u128::MAX);
    if order > budget.max_elements as u128 {
        return Err(Error::Budget {
            what: "wreath product order",
            requested: order,
            limit: budget.max_elements as u128,
        });
    }
    let degree = spec.q.degree() * spec.p.degree();
    let g = PermGroup::closure(degree, spec.generators(), budget)?;
    if g.size() as u128 != order {
        return Err(Error::Violation(alloc::format!(
            "wreath product has order {} instead of {order}",
            g.size()
        )));
    }
    Ok(g)
}

/// Both sides of `d(Q wr_Δ P) = d(P) + n_Δ(P)·d(Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathRankReport {
    pub prime: u64,
    pub order: usize,
    pub rank: usize,
    pub d_top: usize,
    pub top_orbits: usize,
    pub d_base: usize,
}

impl WreathRankReport {
    pub fn formula(&self) -> usize {
        self.d_top + self.top_orbits * self.d_base
    }

    pub fn holds(&self) -> bool {
        self.rank == self.formula()
    }
}

/// Constructs the product and compares its searched rank with the formula.
/// `Q` must be a nontrivial `p`-group and `P` a `p`-group (possibly trivial)
/// for the same `p`.
pub fn verify_wreath_rank(spec: &WreathSpec, budget: &Budget, interrupt: &dyn Interrupt) -> Result<WreathRankReport> {
    let prime = p_group_prime(&spec.q)
        .ok_or_else(|| Error::InvalidInput("base group is not a nontrivial p-group".into()))?;
    if !spec.p.is_trivial() && p_group_prime(&spec.p) != Some(prime) {
        return Err(Error::InvalidInput(alloc::format!(
            "top group is not a {prime}-group"
        )));
    }
    let w = wreath_product(spec, budget)?;
    Ok(WreathRankReport {
        prime,
        order: w.size(),
        rank: invariants::min_generators(&w, budget, interrupt)?.size,
        d_top: invariants::min_generators(&spec.p, budget, interrupt)?.size,
        top_orbits: spec.p.orbits().len(),
        d_base: invariants::min_generators(&spec.q, budget, interrupt)?.size,
    })
}

/// Subgroups `U_1, …, U_t` of `K` meeting exactly in the point stabiliser
/// `K_ω`, no proper subfamily doing so.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceCertificate {
    /// 0-based point.
    pub omega: usize,
    pub stabilizer: FixedBitSet,
    pub subgroups: Vec<FixedBitSet>,
    pub t: usize,
}

impl IndependenceCertificate {
    /// Rechecks the defining conditions from the element sets over every
    /// subfamily.
    pub fn validate(&self, k: &PermGroup) -> bool {
        let whole = {
            let mut b = FixedBitSet::with_capacity(k.size());
            b.insert_range(..);
            b
        };
        let t = self.subgroups.len();
        if t != self.t || t == 0 || t >= usize::BITS as usize {
            return false;
        }
        if self.stabilizer != k.stabilizer_set(self.omega) {
            return false;
        }
        if !self.subgroups.iter().all(|u| self.stabilizer.is_subset(u)) {
            return false;
        }
        (0..1usize << t).all(|mask| {
            let meet = (0..t)
                .filter(|i| mask >> i & 1 == 1)
                .fold(whole.clone(), |acc, i| lattice::intersection_bits(&acc, &self.subgroups[i]));
            let full = mask == (1 << t) - 1;
            (meet == self.stabilizer) == full
        })
    }
}

/// `t_Ω(K)` for transitive `K`, with a witnessing family. Candidates are the
/// subgroups strictly between `K_ω` and `K`; ties go to the family found
/// first in canonical subgroup order.
pub fn t_omega(k: &PermGroup, omega: usize, budget: &Budget, interrupt: &dyn Interrupt) -> Result<IndependenceCertificate> {
    if omega >= k.degree() {
        return Err(Error::InvalidInput(alloc::format!("point {} outside the domain", omega + 1)));
    }
    if !k.is_transitive() {
        return Err(Error::InvalidInput("t_omega needs a transitive group".into()));
    }
    let stabilizer = k.stabilizer_set(omega);
    let lattice = SubgroupLattice::build(k, budget)?;
    let stab_order = stabilizer.count_ones(..);
    if stab_order == k.size() {
        // a single point: K_ω = K and the one-member family {K} is the only one
        return Ok(IndependenceCertificate {
            omega,
            stabilizer: stabilizer.clone(),
            subgroups: alloc::vec![stabilizer],
            t: 1,
        });
    }
    let interval: Vec<&Subgroup> = lattice
        .subgroups()
        .iter()
        .filter(|u| u.order > stab_order && u.order < k.size() && stabilizer.is_subset(&u.elements))
        .collect();
    let mut search = FamilySearch {
        interval: &interval,
        target: stab_order,
        best: alloc::vec![stabilizer.clone()],
        interrupt,
        nodes: 0,
    };
    let whole = lattice.whole().elements.clone();
    search.dfs(&mut Vec::new(), &whole, 0)?;
    let cert = IndependenceCertificate {
        omega,
        t: search.best.len(),
        subgroups: search.best,
        stabilizer,
    };
    if !cert.validate(k) {
        return Err(Error::Violation("independence certificate failed revalidation".into()));
    }
    Ok(cert)
}

struct FamilySearch<'a> {
    interval: &'a [&'a Subgroup],
    target: usize,
    best: Vec<FixedBitSet>,
    interrupt: &'a dyn Interrupt,
    nodes: u64,
}

impl FamilySearch<'_> {
    /// `state` holds each chosen member with the intersection of the others;
    /// `meet` is the intersection of all of them.
    fn dfs(&mut self, state: &mut [(usize, FixedBitSet)], meet: &FixedBitSet, start: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.interrupt.should_stop() {
            return Err(Error::Interrupted);
        }
        let meet_order = meet.count_ones(..);
        if meet_order == self.target {
            if state.len() > self.best.len() {
                self.best = state.iter().map(|(i, _)| self.interval[*i].elements.clone()).collect();
            }
            return Ok(());
        }
        // each further member strictly shrinks the intersection
        let headroom = arith::big_omega((meet_order / self.target) as u64) as usize;
        if state.len() + headroom <= self.best.len() {
            return Ok(());
        }
        for i in start..self.interval.len() {
            let u = &self.interval[i].elements;
            if meet.is_subset(u) {
                continue;
            }
            let mut next = Vec::with_capacity(state.len() + 1);
            let mut independent = true;
            for (j, others) in state.iter() {
                let shrunk = lattice::intersection_bits(others, u);
                if shrunk.is_subset(&self.interval[*j].elements) {
                    independent = false;
                    break;
                }
                next.push((*j, shrunk));
            }
            if !independent {
                continue;
            }
            next.push((i, meet.clone()));
            let next_meet = lattice::intersection_bits(meet, u);
            self.dfs(&mut next, &next_meet, i + 1)?;
            if state.len() + headroom <= self.best.len() {
                break;
            }
        }
        Ok(())
    }
}

/// One prime of the Sylow-rank inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTerm {
    pub p: u64,
    /// `d(P_K)` for a Sylow `p`-subgroup `P_K` of `K`.
    pub d_top: usize,
    /// Orbits of `P_K` on `Ω`.
    pub top_orbits: usize,
    /// `d(Π_p)` for a Sylow `p`-subgroup `Π_p` of `S`.
    pub d_base: usize,
    /// Searched rank of `Π_p wr_Ω P_K`, when it fits the budget.
    pub constructed_rank: Option<usize>,
}

impl PrimeTerm {
    pub fn value(&self) -> usize {
        self.d_top + self.top_orbits * self.d_base
    }

    pub fn matches_construction(&self) -> bool {
        self.constructed_rank.is_none_or(|r| r == self.value())
    }
}

/// `Σ_{p ∈ π*(S)} d_p(S wr_Ω K)` against `t_Ω(K)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowSumReport {
    pub terms: Vec<PrimeTerm>,
    pub sum: usize,
    pub t: usize,
    pub certificate: IndependenceCertificate,
}

impl SylowSumReport {
    pub fn strict(&self) -> bool {
        self.sum > self.t
    }

    pub fn holds(&self) -> bool {
        self.strict() && self.terms.iter().all(PrimeTerm::matches_construction)
    }

    pub fn by_prime(&self) -> BTreeMap<u64, usize> {
        self.terms.iter().map(|t| (t.p, t.value())).collect()
    }
}

/// For `G = S wr_Ω K`, a Sylow `p`-subgroup is `Π_p wr_Ω P_K`, so
/// `d_p(G) = d(P_K) + n_Ω(P_K)·d(Π_p)`. Each term is also checked against
/// the searched rank of the constructed Sylow wreath product when it fits.
pub fn sylow_sum_check(
    s: &PermGroup,
    pi_star: &[u64],
    k: &PermGroup,
    budget: &Budget,
    interrupt: &dyn Interrupt,
) -> Result<SylowSumReport> {
    let whole = Subgroup::whole(s);
    if s.is_trivial() || lattice::derived_subgroup(s, &whole).order != s.size() {
        return Err(Error::InvalidInput("S must be a nontrivial perfect group".into()));
    }
    if !k.is_transitive() {
        return Err(Error::InvalidInput("K must be transitive".into()));
    }
    let mut terms = Vec::new();
    for &p in pi_star {
        if !s.size().is_multiple_of(p as usize) {
            return Err(Error::InvalidInput(alloc::format!("{p} does not divide |S|")));
        }
        let base = s.subgroup_group(&invariants::sylow_subgroup(s, p, None)?.elements, budget)?;
        let top = k.subgroup_group(&invariants::sylow_subgroup(k, p, None)?.elements, budget)?;
        let spec = WreathSpec::new(base, top);
        let constructed_rank = match spec.product_order() {
            Some(order) if order <= budget.max_search as u128 => {
                let w = wreath_product(&spec, budget)?;
                Some(invariants::min_generators(&w, budget, interrupt)?.size)
            }
            _ => None,
        };
        terms.push(PrimeTerm {
            p,
            d_top: invariants::min_generators(&spec.p, budget, interrupt)?.size,
            top_orbits: spec.p.orbits().len(),
            d_base: invariants::min_generators(&spec.q, budget, interrupt)?.size,
            constructed_rank,
        });
    }
    let certificate = t_omega(k, 0, budget, interrupt)?;
    Ok(SylowSumReport {
        sum: terms.iter().map(PrimeTerm::value).sum(),
        t: certificate.t,
        terms,
        certificate,
    })
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

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn construction_examples() {
        let c2 = group(2, &["(1 2)"]);
        let w = wreath_product(&WreathSpec::new(c2.clone(), c2.clone()), &b()).unwrap();
        assert_eq!((w.size(), w.degree()), (8, 4));
        let w = wreath_product(&WreathSpec::new(c2.clone(), PermGroup::trivial(2)), &b()).unwrap();
        assert_eq!(w.size(), 4);
        let c3 = group(3, &["(1 2 3)"]);
        let w = wreath_product(&WreathSpec::new(c3.clone(), c3), &b()).unwrap();
        assert_eq!(w.size(), 81);
    }

    #[test]
    fn fibres_are_blocks() {
        let c3 = group(3, &["(1 2 3)"]);
        let c2 = group(2, &["(1 2)"]);
        let spec = WreathSpec::new(c3, c2);
        assert_eq!(spec.point(2, 1), 5);
        let w = wreath_product(&spec, &b()).unwrap();
        for e in w.elements() {
            let block = e.apply(0) / 3;
            assert!((0..3).all(|gamma| e.apply(gamma) / 3 == block));
        }
    }

    #[test]
    fn rank_examples() {
        let c2 = group(2, &["(1 2)"]);
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        for (q, p, expected) in [
            (c2.clone(), c2.clone(), 2),
            (c2.clone(), PermGroup::trivial(2), 2),
            (v4, c2, 3),
        ] {
            let r = verify_wreath_rank(&WreathSpec::new(q, p), &b(), &NeverInterrupt).unwrap();
            assert_eq!(r.rank, expected);
            assert!(r.holds());
        }
    }

    #[test]
    fn rank_rejects_mixed_primes() {
        let c2 = group(2, &["(1 2)"]);
        let c3 = group(3, &["(1 2 3)"]);
        assert!(verify_wreath_rank(&WreathSpec::new(c2.clone(), c3.clone()), &b(), &NeverInterrupt).is_err());
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert!(verify_wreath_rank(&WreathSpec::new(s3, c2), &b(), &NeverInterrupt).is_err());
    }

    #[test]
    fn t_omega_examples() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(t_omega(&s3, 0, &b(), &NeverInterrupt).unwrap().t, 1);
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let cert = t_omega(&v4, 0, &b(), &NeverInterrupt).unwrap();
        assert_eq!(cert.t, 2);
        assert!(cert.validate(&v4));
        let c5 = group(5, &["(1 2 3 4 5)"]);
        assert_eq!(t_omega(&c5, 0, &b(), &NeverInterrupt).unwrap().t, 1);
        let intransitive = group(4, &["(1 2)"]);
        assert!(t_omega(&intransitive, 0, &b(), &NeverInterrupt).is_err());
    }

    #[test]
    fn tampered_certificate_fails() {
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let mut cert = t_omega(&v4, 0, &b(), &NeverInterrupt).unwrap();
        let extra = cert.subgroups[0].clone();
        cert.subgroups.push(extra);
        cert.t += 1;
        assert!(!cert.validate(&v4));
    }

    #[test]
    fn sylow_sum_examples() {
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let cases = [
            (group(2, &["(1 2)"]), 4, 1),
            (group(3, &["(1 2 3)"]), 5, 1),
            (group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]), 8, 2),
        ];
        for (k, sum, t) in cases {
            let r = sylow_sum_check(&a5, &[3, 5], &k, &b(), &NeverInterrupt).unwrap();
            assert_eq!((r.sum, r.t), (sum, t));
            assert!(r.holds());
        }
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert!(sylow_sum_check(&s3, &[3], &s3, &b(), &NeverInterrupt).is_err());
    }
}
