//! Finite permutation groups: element enumeration, subgroups, cosets.
//!
//! A [`PermGroup`] caches all of its elements in canonical order (sorted by
//! image tuple) plus full multiplication and inverse tables, so everything
//! downstream works with small element indices. Subgroups are bitsets over
//! that canonical order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Bitset over a group's canonical element order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MemberMask {
    bits: Vec<u64>,
    len: usize,
}

impl MemberMask {
    pub fn empty(len: usize) -> Self {
        MemberMask {
            bits: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = MemberMask::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.bits[i / 64] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &MemberMask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &MemberMask) -> MemberMask {
        debug_assert_eq!(self.len, other.len);
        MemberMask {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    pub fn iter_members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    /// Canonical set order: compare sorted member sequences lexicographically.
    /// Equivalently, the set owning the smallest non-shared member is smaller.
    pub fn cmp_members(&self, other: &MemberMask) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter().zip(&other.bits) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if a >> bit & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for MemberMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter_members()).finish()
    }
}

/// A finite permutation group with cached element list and product tables.
pub struct PermGroup {
    degree: usize,
    name: Option<String>,
    generators: Vec<Permutation>,
    gen_indices: Vec<u16>,
    elements: Vec<Permutation>,
    mult: Vec<u16>, // row-major order*order
    inv: Vec<u16>,
}

impl PermGroup {
    /// Enumerates the closure of `generators` under composition.
    ///
    /// The element order is canonical (sorted by image tuple), so two runs on
    /// the same input produce identical tables. Fails with
    /// [`Error::OrderCapExceeded`] if the closure grows past `caps.max_order`.
    pub fn from_generators(
        generators: Vec<Permutation>,
        degree: usize,
        caps: &Caps,
        name: Option<String>,
    ) -> Result<Arc<PermGroup>> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        if caps.max_order > u16::MAX as u64 {
            return Err(Error::Parse(format!(
                "max order {} above {} is not supported",
                caps.max_order,
                u16::MAX
            )));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match {}",
                    g.degree(),
                    degree
                )));
            }
        }

        // Finite closure under right multiplication by generators is already a
        // group (finiteness supplies inverses).
        let mut elements = vec![Permutation::identity(degree)];
        let mut seen: std::collections::HashSet<Permutation> =
            elements.iter().cloned().collect();
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for g in &generators {
                let next = current.compose(g);
                if seen.insert(next.clone()) {
                    if elements.len() as u64 >= caps.max_order {
                        return Err(Error::OrderCapExceeded { cap: caps.max_order });
                    }
                    elements.push(next);
                }
            }
        }
        elements.sort();
        debug_assert!(elements[0].is_identity());

        let order = elements.len();
        let index_of = |p: &Permutation| -> u16 {
            elements.binary_search(p).expect("closure is closed") as u16
        };
        let mut mult = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                mult[i * order + j] = index_of(&elements[i].compose(&elements[j]));
            }
        }
        let mut inv = vec![0u16; order];
        for i in 0..order {
            let target = elements[i].inverse();
            inv[i] = index_of(&target);
        }
        let gen_indices = generators.iter().map(index_of).collect();

        Ok(Arc::new(PermGroup {
            degree,
            name,
            generators,
            gen_indices,
            elements,
            mult,
            inv,
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Display name, falling back to a structural description.
    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("group of order {} on {} points", self.order(), self.degree))
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[u16] {
        &self.gen_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u16) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u16> {
        self.elements.binary_search(p).ok().map(|i| i as u16)
    }

    #[inline]
    pub fn mul_idx(&self, i: u16, j: u16) -> u16 {
        self.mult[i as usize * self.elements.len() + j as usize]
    }

    #[inline]
    pub fn inv_idx(&self, i: u16) -> u16 {
        self.inv[i as usize]
    }

    /// Index of `g h g^{-1}`.
    #[inline]
    pub fn conj_idx(&self, g: u16, h: u16) -> u16 {
        self.mul_idx(self.mul_idx(g, h), self.inv_idx(g))
    }

    /// Structural equality: same degree and same canonical element list.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup({}, order {})", self.display_name(), self.order())
    }
}

/// A subgroup, as a validated member bitset over the parent's element order.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    mask: MemberMask,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.parent.same_group(&other.parent)
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// Validates closure and identity membership (finiteness gives inverses).
    pub fn from_mask(parent: Arc<PermGroup>, mask: MemberMask) -> Result<Self> {
        if mask.len() != parent.order() || !mask.contains(0) {
            return Err(Error::NotASubgroup);
        }
        let members: Vec<u16> = mask.iter_members().map(|i| i as u16).collect();
        for &a in &members {
            for &b in &members {
                if !mask.contains(parent.mul_idx(a, b) as usize) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        // Lagrange
        debug_assert_eq!(parent.order() % members.len(), 0);
        Ok(Subgroup { parent, mask })
    }

    /// Closure of the given element indices. Every word in the generators is
    /// reachable by right multiplication from the identity, and a finite set
    /// closed under products is a subgroup.
    pub fn generated(parent: Arc<PermGroup>, gens: &[u16]) -> Subgroup {
        let order = parent.order();
        let mut mask = MemberMask::empty(order);
        mask.insert(0);
        let mut members = vec![0u16];
        let mut frontier = 0;
        while frontier < members.len() {
            let current = members[frontier];
            frontier += 1;
            for &g in gens {
                let next = parent.mul_idx(current, g);
                if !mask.contains(next as usize) {
                    mask.insert(next as usize);
                    members.push(next);
                }
            }
        }
        Subgroup { parent, mask }
    }

    pub fn trivial(parent: Arc<PermGroup>) -> Subgroup {
        let mut mask = MemberMask::empty(parent.order());
        mask.insert(0);
        Subgroup { parent, mask }
    }

    pub fn full(parent: Arc<PermGroup>) -> Subgroup {
        let mask = MemberMask::full(parent.order());
        Subgroup { parent, mask }
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn mask(&self) -> &MemberMask {
        &self.mask
    }

    pub fn order(&self) -> usize {
        self.mask.count()
    }

    /// The index `[G:H]`.
    pub fn index(&self) -> u64 {
        (self.parent.order() / self.order()) as u64
    }

    pub fn contains_idx(&self, i: u16) -> bool {
        self.mask.contains(i as usize)
    }

    pub fn member_indices(&self) -> Vec<u16> {
        self.mask.iter_members().map(|i| i as u16).collect()
    }

    /// A small generating set, picked greedily over the canonical order.
    pub fn generating_set(&self) -> Vec<u16> {
        let mut gens = Vec::new();
        let mut have = Subgroup::trivial(self.parent.clone());
        for i in self.mask.iter_members() {
            if !have.mask.contains(i) {
                gens.push(i as u16);
                have = Subgroup::generated(self.parent.clone(), &gens);
                if have.order() == self.order() {
                    break;
                }
            }
        }
        debug_assert_eq!(have.mask, self.mask);
        gens
    }

    /// The conjugate `g H g^{-1}`.
    pub fn conjugate(&self, g: u16) -> Result<Subgroup> {
        if g as usize >= self.parent.order() {
            return Err(Error::ElementNotInGroup);
        }
        let mut mask = MemberMask::empty(self.parent.order());
        for h in self.mask.iter_members() {
            mask.insert(self.parent.conj_idx(g, h as u16) as usize);
        }
        Ok(Subgroup {
            parent: self.parent.clone(),
            mask,
        })
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn normalizer(&self) -> Subgroup {
        let mut mask = MemberMask::empty(self.parent.order());
        for g in 0..self.parent.order() as u16 {
            let conj = self.conjugate(g).expect("index in range");
            if conj.mask == self.mask {
                mask.insert(g as usize);
            }
        }
        Subgroup {
            parent: self.parent.clone(),
            mask,
        }
    }

    /// Left cosets `gH`, each block sorted, blocks ordered by least member.
    pub fn left_cosets(&self) -> Vec<Vec<u16>> {
        self.cosets(false)
    }

    /// Right cosets `Hg`, same ordering conventions.
    pub fn right_cosets(&self) -> Vec<Vec<u16>> {
        self.cosets(true)
    }

    fn cosets(&self, right: bool) -> Vec<Vec<u16>> {
        let order = self.parent.order();
        let members = self.member_indices();
        let mut assigned = vec![false; order];
        let mut blocks = Vec::with_capacity(order / members.len());
        for g in 0..order as u16 {
            if assigned[g as usize] {
                continue;
            }
            let mut block: Vec<u16> = members
                .iter()
                .map(|&h| {
                    if right {
                        self.parent.mul_idx(h, g)
                    } else {
                        self.parent.mul_idx(g, h)
                    }
                })
                .collect();
            block.sort_unstable();
            for &x in &block {
                assigned[x as usize] = true;
            }
            blocks.push(block);
        }
        blocks
    }

    /// Least-member representatives of the left cosets.
    pub fn left_transversal(&self) -> Vec<u16> {
        self.left_cosets().into_iter().map(|b| b[0]).collect()
    }

    pub fn right_transversal(&self) -> Vec<u16> {
        self.right_cosets().into_iter().map(|b| b[0]).collect()
    }

    /// Left cosets of `self` inside a larger subgroup `k` (requires `self ⊆ k`).
    pub fn left_cosets_within(&self, k: &Subgroup) -> Result<Vec<Vec<u16>>> {
        if !self.is_subset_of(k) {
            return Err(Error::LevelMismatch);
        }
        let members = self.member_indices();
        let mut assigned = MemberMask::empty(self.parent.order());
        let mut blocks = Vec::new();
        for g in k.mask.iter_members() {
            if assigned.contains(g) {
                continue;
            }
            let mut block: Vec<u16> = members
                .iter()
                .map(|&h| self.parent.mul_idx(g as u16, h))
                .collect();
            block.sort_unstable();
            for &x in &block {
                assigned.insert(x as usize);
            }
            blocks.push(block);
        }
        Ok(blocks)
    }

    /// Views the subgroup as a group in its own right (same degree), with the
    /// index translation back into the parent.
    pub fn embed(&self) -> GroupEmbedding {
        let perms: Vec<Permutation> = self
            .mask
            .iter_members()
            .map(|i| self.parent.element(i as u16).clone())
            .collect();
        let caps = Caps::default().with_max_order(self.parent.order() as u64);
        let sub = PermGroup::from_generators(perms, self.parent.degree(), &caps, None)
            .expect("members of an enumerated group stay under its cap");
        debug_assert_eq!(sub.order(), self.order());
        let to_parent: Vec<u16> = sub
            .elements()
            .iter()
            .map(|p| self.parent.index_of(p).expect("member of parent"))
            .collect();
        GroupEmbedding {
            sub,
            parent: self.parent.clone(),
            to_parent,
            subgroup: self.clone(),
        }
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.mask)
    }
}

/// A subgroup re-enumerated as a standalone [`PermGroup`], plus the element
/// index translation into the parent group.
#[derive(Clone)]
pub struct GroupEmbedding {
    pub sub: Arc<PermGroup>,
    pub parent: Arc<PermGroup>,
    /// `to_parent[i]` is the parent index of `sub.element(i)`. Monotone, since
    /// both element lists are sorted by the same key.
    pub to_parent: Vec<u16>,
    pub subgroup: Subgroup,
}

impl GroupEmbedding {
    pub fn parent_to_sub(&self, parent_idx: u16) -> Option<u16> {
        self.to_parent
            .binary_search(&parent_idx)
            .ok()
            .map(|i| i as u16)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn closure_of_transposition_has_order_two() {
        let caps = Caps::default();
        let g = PermGroup::from_generators(
            vec![Permutation::parse_cycles("(1 2)", 2).unwrap()],
            2,
            &caps,
            None,
        )
        .unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn s3_from_generators() {
        let caps = Caps::default();
        let g = PermGroup::from_generators(
            vec![
                Permutation::parse_cycles("(1 2)", 3).unwrap(),
                Permutation::parse_cycles("(1 2 3)", 3).unwrap(),
            ],
            3,
            &caps,
            None,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn empty_generating_set_is_trivial_group() {
        let caps = Caps::default();
        let g = PermGroup::from_generators(vec![], 1, &caps, None).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn order_cap_is_enforced() {
        let caps = Caps::default().with_max_order(5);
        let err = PermGroup::from_generators(
            vec![
                Permutation::parse_cycles("(1 2)", 3).unwrap(),
                Permutation::parse_cycles("(1 2 3)", 3).unwrap(),
            ],
            3,
            &caps,
            None,
        );
        assert!(matches!(err, Err(Error::OrderCapExceeded { cap: 5 })));
    }

    #[test]
    fn left_cosets_partition_s3() {
        let g = families::symmetric(3, &Caps::default()).unwrap();
        let h_gen = g
            .index_of(&Permutation::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let h = Subgroup::generated(g.clone(), &[h_gen]);
        let blocks = h.left_cosets();
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().all(|b| b.len() == 2));
        let mut all: Vec<u16> = blocks.concat();
        all.sort_unstable();
        assert_eq!(all, (0..6).collect::<Vec<u16>>());

        // index-1 and index-|G| edges
        assert_eq!(Subgroup::full(g.clone()).left_cosets().len(), 1);
        assert_eq!(Subgroup::trivial(g.clone()).left_cosets().len(), 6);
    }

    #[test]
    fn coset_blocks_are_left_equivalence_classes() {
        let g = families::symmetric(3, &Caps::default()).unwrap();
        let h_gen = g
            .index_of(&Permutation::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let h = Subgroup::generated(g.clone(), &[h_gen]);
        let blocks = h.left_cosets();
        for a in 0..g.order() as u16 {
            for b in 0..g.order() as u16 {
                let same_block = blocks
                    .iter()
                    .any(|blk| blk.contains(&a) && blk.contains(&b));
                let related = h.contains_idx(g.mul_idx(g.inv_idx(a), b));
                assert_eq!(same_block, related, "{a} {b}");
            }
        }
    }

    #[test]
    fn conjugation_moves_transposition_subgroups() {
        let g = families::symmetric(3, &Caps::default()).unwrap();
        let swap01 = g
            .index_of(&Permutation::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let cycle = g
            .index_of(&Permutation::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let h = Subgroup::generated(g.clone(), &[swap01]);
        let conj = h.conjugate(cycle).unwrap();
        let expected_gen = g
            .index_of(&Permutation::parse_cycles("(2 3)", 3).unwrap())
            .unwrap();
        let expected = Subgroup::generated(g.clone(), &[expected_gen]);
        assert_eq!(conj, expected);

        // identity conjugation fixes everything
        assert_eq!(h.conjugate(0).unwrap(), h);

        // a normal subgroup is fixed by every conjugation
        let c3 = Subgroup::generated(g.clone(), &[cycle]);
        for x in 0..g.order() as u16 {
            assert_eq!(c3.conjugate(x).unwrap(), c3);
        }
    }

    #[test]
    fn lagrange_on_every_subgroup_of_d4() {
        let g = families::dihedral(4, &Caps::default()).unwrap();
        let lattice = crate::lattice::SubgroupLattice::new(g.clone());
        for i in 0..lattice.subgroup_count() {
            let h = lattice.subgroup(i);
            assert_eq!(h.order() as u64 * h.index(), g.order() as u64);
        }
    }

    #[test]
    fn embedding_roundtrips_indices() {
        let g = families::symmetric(4, &Caps::default()).unwrap();
        let a3 = Subgroup::generated(
            g.clone(),
            &[g.index_of(&Permutation::parse_cycles("(1 2 3)", 4).unwrap()).unwrap()],
        );
        let emb = a3.embed();
        assert_eq!(emb.sub.order(), 3);
        for i in 0..emb.sub.order() as u16 {
            let p = emb.to_parent[i as usize];
            assert_eq!(emb.parent_to_sub(p), Some(i));
            assert_eq!(g.element(p), emb.sub.element(i));
        }
    }
}
