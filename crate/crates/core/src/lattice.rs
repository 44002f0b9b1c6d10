//! The full subgroup lattice of a small group, organized by conjugacy class.
//!
//! Enumeration is bottom-up: seed with every cyclic subgroup, then repeatedly
//! extend each known subgroup by each outside element and close. Every
//! subgroup is a chain of single-generator extensions above a cyclic one, so
//! the sweep is complete (including perfect subgroups, which a
//! normalizer-restricted extension would miss).

use std::collections::HashMap;
use std::sync::Arc;

use crate::group::{MemberMask, PermGroup, Subgroup};

/// All subgroups of a group, their conjugacy classes, and the subconjugacy
/// order on classes.
///
/// Classes are sorted by (subgroup order ascending, then least member mask of
/// the class representative), which puts the trivial class first, the full
/// class last, and makes the table of marks upper triangular.
pub struct SubgroupLattice {
    group: Arc<PermGroup>,
    subgroups: Vec<Subgroup>,
    mask_to_subgroup: HashMap<MemberMask, usize>,
    class_of_subgroup: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_reps: Vec<usize>,
    subconj: Vec<bool>,
    labels: Vec<String>,
}

impl SubgroupLattice {
    pub fn new(group: Arc<PermGroup>) -> Arc<SubgroupLattice> {
        let masks = enumerate_subgroup_masks(&group);
        let mut subgroups: Vec<Subgroup> = masks
            .into_iter()
            .map(|mask| Subgroup::from_mask(group.clone(), mask).expect("closure is a subgroup"))
            .collect();
        subgroups.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.mask().cmp_members(b.mask()))
        });

        let mask_to_subgroup: HashMap<MemberMask, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.mask().clone(), i))
            .collect();

        // conjugation orbits; scanning in canonical order makes class order
        // (order asc, least rep mask) automatic
        let mut class_of_subgroup = vec![usize::MAX; subgroups.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_reps = Vec::new();
        for i in 0..subgroups.len() {
            if class_of_subgroup[i] != usize::MAX {
                continue;
            }
            let class_idx = classes.len();
            let mut members = Vec::new();
            for g in 0..group.order() as u16 {
                let conj = subgroups[i].conjugate(g).expect("element in range");
                let j = mask_to_subgroup[conj.mask()];
                if class_of_subgroup[j] == usize::MAX {
                    class_of_subgroup[j] = class_idx;
                    members.push(j);
                }
            }
            members.sort_unstable();
            debug_assert_eq!(members[0], i);
            class_reps.push(i);
            classes.push(members);
        }
        debug_assert_eq!(subgroups[class_reps[0]].order(), 1);
        debug_assert_eq!(
            subgroups[*class_reps.last().unwrap()].order(),
            group.order()
        );

        let c = classes.len();
        let mut subconj = vec![false; c * c];
        for (ci, members) in classes.iter().enumerate() {
            for cj in 0..c {
                let rep = &subgroups[class_reps[cj]];
                let hit = members
                    .iter()
                    .any(|&s| subgroups[s].mask().is_subset(rep.mask()));
                subconj[ci * c + cj] = hit;
            }
        }

        let labels = make_labels(&subgroups, &class_reps);

        Arc::new(SubgroupLattice {
            group,
            subgroups,
            mask_to_subgroup,
            class_of_subgroup,
            classes,
            class_reps,
            subconj,
            labels,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn subgroup_count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn class_of(&self, subgroup_idx: usize) -> usize {
        self.class_of_subgroup[subgroup_idx]
    }

    /// Subgroup indices of one conjugacy class, ascending.
    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    pub fn class_rep(&self, class: usize) -> &Subgroup {
        &self.subgroups[self.class_reps[class]]
    }

    pub fn class_rep_index(&self, class: usize) -> usize {
        self.class_reps[class]
    }

    /// `"2a"`-style label: subgroup order plus a letter within equal orders.
    pub fn class_label(&self, class: usize) -> &str {
        &self.labels[class]
    }

    pub fn class_labels(&self) -> Vec<String> {
        self.labels.clone()
    }

    /// Whether some conjugate of a class-`i` subgroup lies in a class-`j` one.
    pub fn is_subconjugate(&self, i: usize, j: usize) -> bool {
        self.subconj[i * self.classes.len() + j]
    }

    /// `[G:H]` for the class of `H`.
    pub fn index_of_class(&self, class: usize) -> u64 {
        self.class_rep(class).index()
    }

    pub fn class_order(&self, class: usize) -> u64 {
        self.class_rep(class).order() as u64
    }

    pub fn subgroup_index_of_mask(&self, mask: &MemberMask) -> Option<usize> {
        self.mask_to_subgroup.get(mask).copied()
    }

    /// Class of the subgroup with exactly this member mask.
    pub fn class_of_mask(&self, mask: &MemberMask) -> Option<usize> {
        self.subgroup_index_of_mask(mask)
            .map(|i| self.class_of_subgroup[i])
    }

    /// Index of the trivial subgroup (always the least subgroup and level 0).
    pub fn trivial_subgroup_index(&self) -> usize {
        0
    }

    pub fn full_subgroup_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Structural equality, independent of which run built the lattice.
    pub fn same_lattice(&self, other: &SubgroupLattice) -> bool {
        self.group.same_group(&other.group)
            && self.class_reps.len() == other.class_reps.len()
            && self
                .class_reps
                .iter()
                .zip(&other.class_reps)
                .all(|(&a, &b)| self.subgroups[a].mask() == other.subgroups[b].mask())
    }
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupLattice({}, {} subgroups in {} classes)",
            self.group.display_name(),
            self.subgroups.len(),
            self.classes.len()
        )
    }
}

fn enumerate_subgroup_masks(group: &Arc<PermGroup>) -> Vec<MemberMask> {
    let order = group.order() as u16;
    let mut known: std::collections::HashSet<MemberMask> = std::collections::HashSet::new();
    let mut queue: Vec<Subgroup> = Vec::new();

    let trivial = Subgroup::trivial(group.clone());
    known.insert(trivial.mask().clone());
    queue.push(trivial);
    for g in 1..order {
        let cyc = Subgroup::generated(group.clone(), &[g]);
        if known.insert(cyc.mask().clone()) {
            queue.push(cyc);
        }
    }

    let mut frontier = 0;
    while frontier < queue.len() {
        let current = queue[frontier].clone();
        frontier += 1;
        if current.order() == order as usize {
            continue;
        }
        let mut gens = current.generating_set();
        for g in 0..order {
            if current.contains_idx(g) {
                continue;
            }
            gens.push(g);
            let extended = Subgroup::generated(group.clone(), &gens);
            gens.pop();
            if known.insert(extended.mask().clone()) {
                queue.push(extended);
            }
        }
    }

    queue.into_iter().map(|s| s.mask().clone()).collect()
}

fn make_labels(subgroups: &[Subgroup], class_reps: &[usize]) -> Vec<String> {
    let mut labels = Vec::with_capacity(class_reps.len());
    let mut rank_within_order = 0usize;
    let mut last_order = 0usize;
    for &rep in class_reps {
        let order = subgroups[rep].order();
        if order != last_order {
            last_order = order;
            rank_within_order = 0;
        } else {
            rank_within_order += 1;
        }
        labels.push(format!("{order}{}", letters(rank_within_order)));
    }
    labels
}

fn letters(mut rank: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (rank % 26) as u8) as char);
        rank /= 26;
        if rank == 0 {
            break;
        }
        rank -= 1;
    }
    s
}
