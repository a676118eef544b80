//! Structural group theory over materialized permutation groups:
//! commutator and derived machinery, nilpotency and solubility tests,
//! Sylow subgroups, cores, the Fitting series, towers and radicals.
//!
//! Everything here is computed exhaustively over element lists; the
//! intended scale is desk-size groups (order in the hundreds or low
//! thousands).

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::Perm;

/// `[A,B]`: the subgroup generated by all commutators `[a,b]` with
/// `a ∈ A`, `b ∈ B`.
pub fn commutator_subgroup(g: &PermGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seeds = BTreeSet::new();
    for &x in a.member_indices() {
        for &y in b.member_indices() {
            seeds.insert(g.comm_idx(x, y));
        }
    }
    let seeds: Vec<u32> = seeds.into_iter().collect();
    g.subgroup_from_indices(&seeds)
}

/// The derived subgroup `G' = [G,G]`.
pub fn derived_subgroup(g: &PermGroup) -> Subgroup {
    let whole = g.whole_subgroup();
    commutator_subgroup(g, &whole, &whole)
}

/// Lower central series `γ1 = G, γ{i+1} = [γi, G]`, listed until it
/// stabilizes; the last entry is the stable term.
pub fn lower_central_series(g: &PermGroup) -> Vec<Subgroup> {
    let whole = g.whole_subgroup();
    let mut series = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap(), &whole);
        if next.same_members(series.last().unwrap()) {
            break;
        }
        series.push(next);
    }
    series
}

/// Derived series `G ⊇ G' ⊇ G'' ⊇ …`, listed until it stabilizes.
pub fn derived_series(g: &PermGroup) -> Vec<Subgroup> {
    let mut series = vec![g.whole_subgroup()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if next.same_members(last) {
            break;
        }
        series.push(next);
    }
    series
}

/// Nilpotent iff the lower central series reaches the trivial subgroup.
pub fn is_nilpotent(g: &PermGroup) -> bool {
    lower_central_series(g).last().unwrap().is_trivial()
}

/// Nilpotency class, or `None` for non-nilpotent groups. The trivial
/// group has class 0.
pub fn nilpotency_class(g: &PermGroup) -> Option<u32> {
    let series = lower_central_series(g);
    if series.last().unwrap().is_trivial() {
        Some(series.len() as u32 - 1)
    } else {
        None
    }
}

/// Soluble iff the derived series reaches the trivial subgroup.
pub fn is_soluble(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

/// The independent nilpotency route: every Sylow subgroup is normal.
/// Agrees with [`is_nilpotent`] on every finite group.
pub fn is_nilpotent_by_sylow(g: &PermGroup) -> bool {
    arith::prime_divisors(g.order())
        .into_iter()
        .all(|p| g.is_normal(&sylow_subgroup(g, p)).expect("own subgroup"))
}

/// A Sylow `p`-subgroup, built by greedy growth: starting from the trivial
/// subgroup, repeatedly adjoin the first `p`-element of the normalizer of
/// the current subgroup (canonical element order makes this deterministic).
/// Any `p`-element of the normalizer extends the current `p`-subgroup to a
/// larger `p`-subgroup, and the normalizer of a non-full `p`-subgroup
/// always contains one, so the growth never gets stuck.
///
/// Returns the trivial subgroup when `p` does not divide `|G|`.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Subgroup {
    assert!(arith::is_prime(p), "sylow_subgroup needs a prime");
    let target = arith::p_part(g.order(), p);
    let mut current = g.trivial_subgroup();
    while current.order() < target {
        let normalizer = g.normalizer(&current).expect("own subgroup");
        let next = normalizer
            .member_indices()
            .iter()
            .copied()
            .find(|&x| {
                !current.contains_idx(x) && arith::is_power_of(g.order_of(x), p) && x != 0
            })
            .expect("normalizer of a non-full p-subgroup contains a p-element outside it");
        let mut seeds: Vec<u32> = current.generator_indices().to_vec();
        seeds.push(next);
        let grown = g.subgroup_from_indices(&seeds);
        debug_assert!(arith::is_power_of(grown.order(), p));
        debug_assert!(grown.order() > current.order());
        current = grown;
    }
    current
}

/// `O_p(G)`: the intersection of all conjugates of one Sylow `p`-subgroup.
pub fn p_core(g: &PermGroup, p: u64) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    let n = g.order() as usize;
    let mut core = vec![false; n];
    for &m in sylow.member_indices() {
        core[m as usize] = true;
    }
    for h in 0..n as u32 {
        let mut conj = vec![false; n];
        for &m in sylow.member_indices() {
            conj[g.conj_idx(m, h) as usize] = true;
        }
        for i in 0..n {
            core[i] &= conj[i];
        }
    }
    let members: Vec<u32> = (0..n as u32).filter(|&i| core[i as usize]).collect();
    Subgroup::from_members(g, members.clone(), members)
}

/// `O_{p'}(G)`: the largest normal subgroup of order coprime to `p`.
///
/// Computed as a fixpoint: starting from the trivial subgroup, absorb any
/// conjugacy class of `p'`-elements whose join with the current subgroup
/// still has `p'`-order. Joins of normal `p'`-subgroups are normal
/// `p'`-subgroups, so the fixpoint is the unique maximum; subgroups
/// generated by whole conjugacy classes are automatically normal.
pub fn p_prime_core(g: &PermGroup, p: u64) -> Subgroup {
    assert!(arith::is_prime(p), "p_prime_core needs a prime");
    normal_fixpoint_core(g, |candidate| candidate.order() % p != 0, |order| order % p != 0)
}

/// The soluble radical: the largest normal soluble subgroup, by the same
/// conjugacy-class fixpoint as [`p_prime_core`] with solubility in place
/// of `p'`-order.
pub fn soluble_radical(g: &PermGroup) -> Subgroup {
    normal_fixpoint_core(
        g,
        |candidate| is_soluble(&candidate.to_group("candidate")),
        |_| true,
    )
}

fn normal_fixpoint_core(
    g: &PermGroup,
    accept: impl Fn(&Subgroup) -> bool,
    class_filter: impl Fn(u64) -> bool,
) -> Subgroup {
    let classes: Vec<Vec<u32>> = g
        .conjugacy_classes()
        .into_iter()
        .filter(|c| class_filter(g.order_of(c[0])))
        .collect();
    let mut current = g.trivial_subgroup();
    loop {
        let mut changed = false;
        for class in &classes {
            if class.iter().all(|&x| current.contains_idx(x)) {
                continue;
            }
            let mut seeds: Vec<u32> = current.member_indices().to_vec();
            seeds.extend_from_slice(class);
            let candidate = g.subgroup_from_indices(&seeds);
            if accept(&candidate) {
                debug_assert!(g.is_normal(&candidate).expect("own subgroup"));
                current = candidate;
                changed = true;
            }
        }
        if !changed {
            return current;
        }
    }
}

/// The Fitting subgroup `F(G)`: the join of `O_p(G)` over the primes
/// dividing `|G|`; the largest normal nilpotent subgroup.
pub fn fitting_subgroup(g: &PermGroup) -> Subgroup {
    let mut seeds = Vec::new();
    for p in arith::prime_divisors(g.order()) {
        seeds.extend_from_slice(p_core(g, p).member_indices());
    }
    seeds.sort_unstable();
    seeds.dedup();
    let fitting = g.subgroup_from_indices(&seeds);
    assert!(
        is_nilpotent(&fitting.to_group("fitting")),
        "Fitting subgroup must be nilpotent"
    );
    fitting
}

/// The iterated Fitting series of a soluble group:
/// `F_0 = 1`, `F_{i+1}/F_i = F(G/F_i)`, with the height `h` the first
/// index reaching `G`.
#[derive(Clone, Debug)]
pub struct FittingData {
    /// `F_0 = 1 ≤ F_1 ≤ … ≤ F_h = G`.
    pub series: Vec<Subgroup>,
    pub height: u32,
}

/// Computes the Fitting series by realizing each quotient `G/F_i` as a
/// permutation group on the cosets of `F_i` and pulling the Fitting
/// subgroup of the quotient back along the projection.
pub fn fitting_series(g: &PermGroup) -> Result<FittingData> {
    if !is_soluble(g) {
        return Err(Error::NotSoluble);
    }
    let mut series = vec![g.trivial_subgroup()];
    while !series.last().unwrap().is_whole_group() {
        let current = series.last().unwrap();
        let quotient = coset_action(g, current)?;
        let fq = fitting_subgroup(&quotient.group);
        let members: Vec<u32> = (0..g.order() as u32)
            .filter(|&i| fq.contains_idx(quotient.projection[i as usize]))
            .collect();
        debug_assert!(members.len() > current.member_indices().len());
        let next = Subgroup::from_members(g, members.clone(), members);
        series.push(next);
    }
    let height = series.len() as u32 - 1;
    Ok(FittingData { series, height })
}

/// A quotient `G/N` realized as a permutation group on the right cosets of
/// `N`, together with the projection sending each element index of `G` to
/// its image index in the quotient.
pub struct Quotient {
    pub group: PermGroup,
    pub projection: Vec<u32>,
}

/// Realizes `G/N` by the right-multiplication action on the cosets of a
/// normal subgroup `N`; the kernel of that action is exactly `N`.
pub fn coset_action(g: &PermGroup, n_sub: &Subgroup) -> Result<Quotient> {
    n_sub.check_parent(g)?;
    if !g.is_normal(n_sub)? {
        return Err(Error::Precondition(
            "coset action quotient needs a normal subgroup".into(),
        ));
    }
    let n = g.order() as usize;
    let m = n / n_sub.member_indices().len();

    // Number cosets by their smallest member; ascending scan makes the
    // numbering canonical.
    let mut coset_of = vec![u32::MAX; n];
    let mut reps: Vec<u32> = Vec::with_capacity(m);
    for i in 0..n as u32 {
        if coset_of[i as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(i);
        for &nn in n_sub.member_indices() {
            coset_of[g.mul_idx(nn, i) as usize] = c;
        }
    }
    debug_assert_eq!(reps.len(), m);

    let action_of = |x: u32| -> Perm {
        let images: Vec<u32> = reps
            .iter()
            .map(|&r| coset_of[g.mul_idx(r, x) as usize])
            .collect();
        Perm::from_images(images).expect("coset action is a permutation")
    };

    let mut distinct: BTreeSet<Perm> = BTreeSet::new();
    let mut images: Vec<Perm> = Vec::with_capacity(n);
    for x in 0..n as u32 {
        let p = action_of(x);
        distinct.insert(p.clone());
        images.push(p);
    }
    let elements: Vec<Perm> = distinct.into_iter().collect();
    debug_assert_eq!(elements.len(), m);
    let projection: Vec<u32> = images
        .iter()
        .map(|p| elements.binary_search(p).expect("image in quotient") as u32)
        .collect();
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|p| images[g.index_of(p).expect("generator in group") as usize].clone())
        .collect();
    let label = format!("{}/(order {})", g.label(), n_sub.order());
    let group = PermGroup::from_closed_elements(label, m, gens, elements);
    Ok(Quotient { group, projection })
}

/// A tower: levels `(p_i, P_i)` with `P_i` a nontrivial `p_i`-group,
/// `P_i` normalizing `P_j` for `i < j`, and `[P_i, P_{i-1}] = P_i` for
/// `i ≥ 2`.
#[derive(Clone)]
pub struct Tower {
    pub levels: Vec<(u64, Subgroup)>,
}

impl Tower {
    pub fn height(&self) -> u32 {
        self.levels.len() as u32
    }
}

/// Verifies the three tower conditions. Levels must be nontrivial
/// subgroups of `g` (a trivial level would satisfy every condition
/// vacuously and inflate the height).
pub fn tower_verify(g: &PermGroup, tower: &Tower) -> Result<bool> {
    for (_, sub) in &tower.levels {
        sub.check_parent(g)?;
    }
    // (1) each level is a nontrivial p-group for its prime
    for (p, sub) in &tower.levels {
        if !arith::is_prime(*p) || sub.order() <= 1 || !arith::is_power_of(sub.order(), *p) {
            return Ok(false);
        }
    }
    // (2) earlier levels normalize later ones
    for i in 0..tower.levels.len() {
        for j in i + 1..tower.levels.len() {
            let (_, pi) = &tower.levels[i];
            let (_, pj) = &tower.levels[j];
            for &x in pi.member_indices() {
                for &y in pj.member_indices() {
                    if !pj.contains_idx(g.conj_idx(y, x)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    // (3) [P_i, P_{i-1}] = P_i
    for i in 1..tower.levels.len() {
        let (_, prev) = &tower.levels[i - 1];
        let (_, cur) = &tower.levels[i];
        let comm = commutator_subgroup(g, cur, prev);
        if !comm.same_members(cur) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bounded tower search: looks for a tower of the requested height whose
/// levels are generated by at most two elements. Intended for test use on
/// small groups (order ≤ 24 or so); the search is exhaustive over that
/// restricted shape and deterministic.
pub fn find_tower_bounded(g: &PermGroup, height: u32) -> Option<Tower> {
    let n = g.order() as u32;
    // candidate levels: nontrivial p-subgroups generated by <= 2 elements
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut candidates: Vec<(u64, Subgroup)> = Vec::new();
    let mut prime_power_elems: Vec<(u64, u32)> = Vec::new();
    for x in 1..n {
        if let Some(p) = arith::prime_power_base(g.order_of(x)) {
            prime_power_elems.push((p, x));
        }
    }
    for &(p, x) in &prime_power_elems {
        let sub = g.subgroup_from_indices(&[x]);
        if seen.insert(sub.member_indices().to_vec()) {
            candidates.push((p, sub));
        }
    }
    for &(p, x) in &prime_power_elems {
        for &(q, y) in &prime_power_elems {
            if p != q || y <= x {
                continue;
            }
            let sub = g.subgroup_from_indices(&[x, y]);
            if arith::is_power_of(sub.order(), p) && seen.insert(sub.member_indices().to_vec()) {
                candidates.push((p, sub));
            }
        }
    }
    candidates.sort_by(|a, b| a.1.member_indices().cmp(b.1.member_indices()));

    fn extend(
        g: &PermGroup,
        candidates: &[(u64, Subgroup)],
        levels: &mut Vec<(u64, Subgroup)>,
        height: u32,
    ) -> bool {
        if levels.len() == height as usize {
            return true;
        }
        'next: for (p, cand) in candidates {
            if let Some((last_p, last)) = levels.last() {
                if p == last_p {
                    continue;
                }
                let comm = commutator_subgroup(g, cand, last);
                if !comm.same_members(cand) {
                    continue;
                }
            }
            for (_, earlier) in levels.iter() {
                for &x in earlier.member_indices() {
                    for &y in cand.member_indices() {
                        if !cand.contains_idx(g.conj_idx(y, x)) {
                            continue 'next;
                        }
                    }
                }
            }
            levels.push((*p, cand.clone()));
            if extend(g, candidates, levels, height) {
                return true;
            }
            levels.pop();
        }
        false
    }

    let mut levels = Vec::new();
    if extend(g, &candidates, &mut levels, height) {
        let tower = Tower { levels };
        debug_assert_eq!(tower_verify(g, &tower).ok(), Some(true));
        Some(tower)
    } else {
        None
    }
}

/// `[X, n y]`: iterate `X ← ⟨x⁻¹·x^y : x ∈ X⟩` n times. `y` must
/// normalize `X`, which keeps every iterate inside `X`.
pub fn iterated_commutator_set(x: &Subgroup, y: &Perm, n: u32) -> Result<Subgroup> {
    let g = x.parent().clone();
    let y_idx = g.index_of(y).ok_or(Error::NotInGroup)?;
    if !x
        .member_indices()
        .iter()
        .all(|&m| x.contains_idx(g.conj_idx(m, y_idx)))
    {
        return Err(Error::DoesNotNormalize);
    }
    let mut current = x.clone();
    for _ in 0..n {
        let seeds: BTreeSet<u32> = current
            .member_indices()
            .iter()
            .map(|&m| g.mul_idx(g.inv_idx(m), g.conj_idx(m, y_idx)))
            .collect();
        let seeds: Vec<u32> = seeds.into_iter().collect();
        current = g.subgroup_from_indices(&seeds);
    }
    Ok(current)
}

/// Simple iff nontrivial and every nontrivial conjugacy class generates
/// the whole group (subgroups generated by whole classes are normal).
pub fn is_simple(g: &PermGroup) -> bool {
    if g.order() <= 1 {
        return false;
    }
    g.conjugacy_classes()
        .iter()
        .skip(1) // the identity class
        .all(|class| g.subgroup_from_indices(class).is_whole_group())
}

/// Exhaustive subgroup lattice, for small groups: every subgroup, found by
/// closing each known subgroup with each element until the lattice is
/// stable. Ordered by (order, member list) for determinism.
pub fn all_subgroups(g: &PermGroup) -> Vec<Subgroup> {
    let n = g.order() as u32;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    let trivial = vec![0u32];
    seen.insert(trivial.clone());
    queue.push_back(trivial);
    while let Some(members) = queue.pop_front() {
        for x in 1..n {
            if members.binary_search(&x).is_ok() {
                continue;
            }
            let mut seeds = members.clone();
            seeds.push(x);
            let bigger = g.close_indices(&seeds);
            if seen.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    let mut lists: Vec<Vec<u32>> = seen.into_iter().collect();
    lists.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    lists
        .into_iter()
        .map(|members| Subgroup::from_members(g, members.clone(), members))
        .collect()
}

/// Every normal subgroup, via [`all_subgroups`]; small groups only.
pub fn normal_subgroups(g: &PermGroup) -> Vec<Subgroup> {
    all_subgroups(g)
        .into_iter()
        .filter(|h| g.is_normal(h).expect("own subgroup"))
        .collect()
}
