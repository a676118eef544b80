//! Generated permutation groups with materialized element sets.
//!
//! A [`PermGroup`] owns the full, canonically sorted element list of the
//! group it was generated from; every structural question in this crate is
//! answered by exhaustive computation over that list. Elements are
//! addressed by their index in the sorted list (the identity is always
//! index 0), and hot paths run entirely in index space: multiplication goes
//! through a lazily built Cayley table when the group is small enough, and
//! falls back to composing image tables otherwise.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default ceiling on the number of elements `generate` will materialize.
pub const DEFAULT_CAP: usize = 200_000;

/// Largest group order for which the full Cayley table is cached.
const CAYLEY_LIMIT: usize = 2048;

struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    /// Sorted lexicographically by image table; identity at index 0.
    elements: Vec<Perm>,
    inverses: Vec<u32>,
    orders: Vec<u64>,
    cayley: OnceLock<Option<Vec<u32>>>,
}

/// A finite permutation group with materialized elements.
///
/// Cloning is cheap (the element data is shared); the label travels with
/// the handle and can be replaced without touching the shared data.
#[derive(Clone)]
pub struct PermGroup {
    label: String,
    data: Arc<GroupData>,
}

impl PermGroup {
    /// Generates `⟨gens⟩` by breadth-first closure under right
    /// multiplication by the generators. Fails with [`Error::CapExceeded`]
    /// if the group would have more than `cap` elements.
    pub fn generate(gens: Vec<Perm>, cap: usize) -> Result<PermGroup> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let degree = gens[0].degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let mut queue: VecDeque<Perm> = VecDeque::new();
        let identity = Perm::identity(degree);
        seen.insert(identity.clone(), ());
        queue.push_back(identity);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = p.compose(g);
                if !seen.contains_key(&q) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(q.clone(), ());
                    queue.push_back(q);
                }
            }
        }

        let mut elements: Vec<Perm> = seen.into_keys().collect();
        elements.sort_unstable();
        Ok(Self::from_sorted_elements(String::new(), degree, gens, elements))
    }

    /// Wraps an already-closed element set. `elements` must be closed under
    /// composition and inverse and contain the identity; used internally by
    /// quotient construction and `Subgroup::to_group`.
    pub(crate) fn from_closed_elements(
        label: String,
        degree: usize,
        generators: Vec<Perm>,
        mut elements: Vec<Perm>,
    ) -> PermGroup {
        elements.sort_unstable();
        elements.dedup();
        Self::from_sorted_elements(label, degree, generators, elements)
    }

    fn from_sorted_elements(
        label: String,
        degree: usize,
        generators: Vec<Perm>,
        elements: Vec<Perm>,
    ) -> PermGroup {
        debug_assert!(elements[0].is_identity());
        let inverses = elements
            .iter()
            .map(|p| {
                let inv = p.inverse();
                elements.binary_search(&inv).expect("closed under inverse") as u32
            })
            .collect();
        let orders = elements.iter().map(|p| p.order()).collect();
        let label = if label.is_empty() {
            format!("group(degree {degree}, order {})", elements.len())
        } else {
            label
        };
        PermGroup {
            label,
            data: Arc::new(GroupData {
                degree,
                generators,
                elements,
                inverses,
                orders,
                cayley: OnceLock::new(),
            }),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn order(&self) -> u64 {
        self.data.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.data.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.data.elements
    }

    pub fn element(&self, idx: u32) -> &Perm {
        &self.data.elements[idx as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.data.elements.binary_search(p).ok().map(|i| i as u32)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    /// Index of the identity; the canonical ordering puts it first.
    pub fn identity_index(&self) -> u32 {
        0
    }

    /// True when `other` shares this group's element data.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }

    fn cayley(&self) -> Option<&[u32]> {
        self.data
            .cayley
            .get_or_init(|| {
                let n = self.data.elements.len();
                if n > CAYLEY_LIMIT {
                    return None;
                }
                let mut table = vec![0u32; n * n];
                for (i, p) in self.data.elements.iter().enumerate() {
                    for (j, q) in self.data.elements.iter().enumerate() {
                        let r = p.compose(q);
                        table[i * n + j] = self
                            .data
                            .elements
                            .binary_search(&r)
                            .expect("closed under composition")
                            as u32;
                    }
                }
                Some(table)
            })
            .as_deref()
    }

    /// Product of elements by index: `a` acts first, then `b`.
    #[inline]
    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        match self.cayley() {
            Some(table) => table[a as usize * self.data.elements.len() + b as usize],
            None => {
                let r = self.data.elements[a as usize].compose(&self.data.elements[b as usize]);
                self.data
                    .elements
                    .binary_search(&r)
                    .expect("closed under composition") as u32
            }
        }
    }

    #[inline]
    pub fn inv_idx(&self, a: u32) -> u32 {
        self.data.inverses[a as usize]
    }

    /// `a^g = g⁻¹·a·g` by index.
    #[inline]
    pub fn conj_idx(&self, a: u32, g: u32) -> u32 {
        self.mul_idx(self.mul_idx(self.inv_idx(g), a), g)
    }

    /// `[a,b] = a⁻¹·b⁻¹·a·b` by index.
    #[inline]
    pub fn comm_idx(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul_idx(self.inv_idx(a), self.inv_idx(b));
        self.mul_idx(self.mul_idx(ab, a), b)
    }

    /// `a^k` by index.
    pub fn pow_idx(&self, a: u32, k: i64) -> u32 {
        let mut base = if k < 0 { self.inv_idx(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    /// Order of the element at index `a`.
    #[inline]
    pub fn order_of(&self, a: u32) -> u64 {
        self.data.orders[a as usize]
    }

    /// Closure of `seeds` inside this group, as a sorted index list.
    /// An empty seed list yields the trivial subgroup.
    pub fn close_indices(&self, seeds: &[u32]) -> Vec<u32> {
        let n = self.data.elements.len();
        let mut member = vec![false; n];
        member[0] = true;
        let mut queue: VecDeque<u32> = VecDeque::new();
        queue.push_back(0);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul_idx(x, s);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..n as u32).filter(|&i| member[i as usize]).collect()
    }

    /// Subgroup generated by elements of this group.
    pub fn subgroup_generated(&self, seeds: &[Perm]) -> Result<Subgroup> {
        let mut seed_idx = Vec::with_capacity(seeds.len());
        for s in seeds {
            seed_idx.push(self.index_of(s).ok_or(Error::NotInGroup)?);
        }
        Ok(self.subgroup_from_indices(&seed_idx))
    }

    /// Subgroup generated by element indices.
    pub fn subgroup_from_indices(&self, seeds: &[u32]) -> Subgroup {
        let members = self.close_indices(seeds);
        let mut generators: Vec<u32> = seeds.to_vec();
        generators.sort_unstable();
        generators.dedup();
        Subgroup {
            parent: self.clone(),
            members,
            generators,
        }
    }

    /// The trivial subgroup.
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            members: vec![0],
            generators: Vec::new(),
        }
    }

    /// The whole group as a subgroup of itself.
    pub fn whole_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            members: (0..self.order() as u32).collect(),
            generators: self
                .data
                .generators
                .iter()
                .map(|g| self.index_of(g).expect("generator in group"))
                .collect(),
        }
    }

    /// Conjugacy classes as sorted index lists, ordered by their smallest
    /// member; classes partition the element list.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let n = self.data.elements.len();
        let gen_idx: Vec<u32> = self
            .data
            .generators
            .iter()
            .map(|g| self.index_of(g).expect("generator in group"))
            .collect();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut members = vec![start];
            class_of[start as usize] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in &gen_idx {
                    let y = self.conj_idx(x, g);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Centralizer of a set of elements, given by indices.
    pub fn centralizer_of_indices(&self, set: &[u32]) -> Subgroup {
        let members: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| set.iter().all(|&s| self.mul_idx(g, s) == self.mul_idx(s, g)))
            .collect();
        Subgroup {
            parent: self.clone(),
            generators: members.clone(),
            members,
        }
    }

    /// Centralizer of a set of elements of the group.
    pub fn centralizer(&self, set: &[Perm]) -> Result<Subgroup> {
        let mut idx = Vec::with_capacity(set.len());
        for p in set {
            idx.push(self.index_of(p).ok_or(Error::NotInGroup)?);
        }
        Ok(self.centralizer_of_indices(&idx))
    }

    /// Normalizer of a subgroup.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        h.check_parent(self)?;
        let members: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| h.members.iter().all(|&m| h.contains_idx(self.conj_idx(m, g))))
            .collect();
        Ok(Subgroup {
            parent: self.clone(),
            generators: members.clone(),
            members,
        })
    }

    /// True iff `H` is normal in the group; conjugation by the generators
    /// suffices since conjugation by a product factors through them.
    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        h.check_parent(self)?;
        let gen_idx: Vec<u32> = self
            .data
            .generators
            .iter()
            .map(|g| self.index_of(g).expect("generator in group"))
            .collect();
        Ok(h.members
            .iter()
            .all(|&m| gen_idx.iter().all(|&g| h.contains_idx(self.conj_idx(m, g)))))
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup({}, degree {}, order {})",
            self.label,
            self.degree(),
            self.order()
        )
    }
}

/// A subgroup of a materialized [`PermGroup`], stored as a sorted list of
/// element indices into the parent, together with the generating witnesses
/// it was built from.
#[derive(Clone)]
pub struct Subgroup {
    parent: PermGroup,
    members: Vec<u32>,
    generators: Vec<u32>,
}

impl Subgroup {
    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.members.len() == self.parent.elements().len()
    }

    /// Sorted element indices into the parent group.
    pub fn member_indices(&self) -> &[u32] {
        &self.members
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains_idx(&self, idx: u32) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        match self.parent.index_of(p) {
            Some(i) => self.contains_idx(i),
            None => false,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> + '_ {
        self.members.iter().map(move |&i| self.parent.element(i))
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators
            .iter()
            .map(|&i| self.parent.element(i).clone())
            .collect()
    }

    /// True iff `other` is the same element set of the same parent.
    pub fn same_members(&self, other: &Subgroup) -> bool {
        self.parent.same_group(&other.parent) && self.members == other.members
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent.same_group(&other.parent)
            && self.members.iter().all(|&m| other.contains_idx(m))
    }

    pub(crate) fn check_parent(&self, g: &PermGroup) -> Result<()> {
        if self.parent.same_group(g) {
            Ok(())
        } else {
            Err(Error::NotInParent)
        }
    }

    pub(crate) fn from_members(parent: &PermGroup, members: Vec<u32>, generators: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            parent: parent.clone(),
            members,
            generators,
        }
    }

    /// Materializes this subgroup as a standalone group (same degree); the
    /// element set is already closed, so no re-generation happens.
    pub fn to_group(&self, label: impl Into<String>) -> PermGroup {
        let gens = if self.generators.is_empty() {
            vec![Perm::identity(self.parent.degree())]
        } else {
            self.generator_perms()
        };
        PermGroup::from_closed_elements(
            label.into(),
            self.parent.degree(),
            gens,
            self.elements().cloned().collect(),
        )
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.order(),
            self.parent.label()
        )
    }
}
