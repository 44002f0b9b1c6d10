//! Finite G-sets with explicit actions: orbits, fixed points, products,
//! coset sets, function sets, and induction between subgroup levels.
//!
//! Small sets store a full `act[element][point]` table. Function sets and
//! multiplicatively induced sets can be huge (the default cap is 2e7 points),
//! so they are kept in a positional form: a point is a tuple of digits, and
//! each group element permutes positions and maps digits through a small
//! table. Orbit and fixed-point scans stream over points without ever
//! materializing the action.

use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{GroupEmbedding, MemberMask, PermGroup, Subgroup};
use crate::lattice::SubgroupLattice;

#[derive(Clone, Copy, Debug)]
struct PosMove {
    src: u32,
    map: u32,
}

#[derive(Clone)]
struct PowerAction {
    base: u64,
    positions: usize,
    /// base^i for i in 0..=positions (saturating once past the point count).
    pow: Vec<u64>,
    /// Set when base is a power of two: (bits per digit, digit mask).
    shift: Option<(u32, u64)>,
    /// moves[element][output position] = (source position, digit map).
    moves: Vec<Vec<PosMove>>,
    /// digit_maps[m][d] is the image of digit d under map m; map 0 need not
    /// be the identity (maps index the inner action for induced sets).
    digit_maps: Vec<Vec<u32>>,
}

impl PowerAction {
    #[inline]
    fn digit(&self, point: u64, pos: usize) -> u64 {
        match self.shift {
            Some((bits, mask)) => point >> (bits * pos as u32) & mask,
            None => point / self.pow[pos] % self.base,
        }
    }

    #[inline]
    fn apply(&self, elem: u16, point: u64) -> u64 {
        let moves = &self.moves[elem as usize];
        let mut out = 0u64;
        match self.shift {
            Some((bits, mask)) => {
                for (j, mv) in moves.iter().enumerate() {
                    let d = point >> (bits * mv.src) & mask;
                    let d = self.digit_maps[mv.map as usize][d as usize] as u64;
                    out |= d << (bits * j as u32);
                }
            }
            None => {
                for (j, mv) in moves.iter().enumerate() {
                    let d = point / self.pow[mv.src as usize] % self.base;
                    let d = self.digit_maps[mv.map as usize][d as usize] as u64;
                    out += d * self.pow[j];
                }
            }
        }
        out
    }

    /// Digit-by-digit fixedness test with early exit.
    #[inline]
    fn fixes(&self, elem: u16, point: u64) -> bool {
        let moves = &self.moves[elem as usize];
        for (j, mv) in moves.iter().enumerate() {
            let d = self.digit(point, mv.src as usize);
            let mapped = self.digit_maps[mv.map as usize][d as usize] as u64;
            if mapped != self.digit(point, j) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone)]
enum ActionRepr {
    Table(Vec<Vec<u32>>),
    Power(PowerAction),
}

/// A finite set with an explicit action of a fixed group.
#[derive(Clone)]
pub struct GSet {
    group: Arc<PermGroup>,
    size: u64,
    action: ActionRepr,
    labels: Option<Vec<String>>,
}

/// One orbit of a G-set: least point, length, and the exact stabilizer of the
/// representative.
pub struct Orbit {
    pub rep: u64,
    pub len: u64,
    pub stabilizer: Subgroup,
}

impl GSet {
    /// Builds a G-set from a full action table (rows in canonical element
    /// order).
    pub fn from_table(
        group: Arc<PermGroup>,
        table: Vec<Vec<u32>>,
        labels: Option<Vec<String>>,
    ) -> GSet {
        assert_eq!(table.len(), group.order());
        let size = table.first().map_or(0, |r| r.len()) as u64;
        let gs = GSet {
            group,
            size,
            action: ActionRepr::Table(table),
            labels,
        };
        gs.debug_validate();
        gs
    }

    /// The one-point G-set.
    pub fn point(group: Arc<PermGroup>) -> GSet {
        GSet::trivial_points(group, 1)
    }

    /// `k` points, every element acting as the identity.
    pub fn trivial_points(group: Arc<PermGroup>, k: u64) -> GSet {
        let row: Vec<u32> = (0..k as u32).collect();
        let table = vec![row; group.order()];
        GSet {
            group,
            size: k,
            action: ActionRepr::Table(table),
            labels: None,
        }
    }

    pub fn empty(group: Arc<PermGroup>) -> GSet {
        GSet::trivial_points(group, 0)
    }

    /// The transitive G-set of left cosets `G/H` under left translation.
    pub fn coset_gset(sub: &Subgroup) -> GSet {
        let group = sub.parent().clone();
        let blocks = sub.left_cosets();
        let mut coset_of = vec![0u32; group.order()];
        for (b, block) in blocks.iter().enumerate() {
            for &g in block {
                coset_of[g as usize] = b as u32;
            }
        }
        let reps: Vec<u16> = blocks.iter().map(|b| b[0]).collect();
        let table: Vec<Vec<u32>> = (0..group.order() as u16)
            .map(|g| {
                reps.iter()
                    .map(|&r| coset_of[group.mul_idx(g, r) as usize])
                    .collect()
            })
            .collect();
        let labels = reps
            .iter()
            .map(|&r| format!("{}H", group.element(r).cycle_string()))
            .collect();
        let gs = GSet {
            group,
            size: blocks.len() as u64,
            action: ActionRepr::Table(table),
            labels: Some(labels),
        };
        gs.debug_validate();
        gs
    }

    /// The G-set of all functions from the group to a `k`-letter alphabet,
    /// acted on through right translation of the argument.
    pub fn function_gset(group: Arc<PermGroup>, k: u64, caps: &Caps) -> Result<GSet> {
        let order = group.order();
        let size = checked_pow(k, order, caps)?;
        let moves: Vec<Vec<PosMove>> = (0..order as u16)
            .map(|g| {
                (0..order as u16)
                    .map(|j| PosMove {
                        src: group.mul_idx(j, g) as u32,
                        map: 0,
                    })
                    .collect()
            })
            .collect();
        let digit_maps = vec![(0..k as u32).collect()];
        let gs = GSet {
            group,
            size,
            action: ActionRepr::Power(PowerAction {
                base: k,
                positions: order,
                pow: pow_table(k, order),
                shift: shift_for(k),
                moves,
                digit_maps,
            }),
            labels: None,
        };
        gs.debug_validate();
        Ok(gs)
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn label(&self, point: u64) -> String {
        match &self.labels {
            Some(l) => l[point as usize].clone(),
            None => point.to_string(),
        }
    }

    /// Image of a point under the group element with this canonical index.
    #[inline]
    pub fn apply(&self, elem: u16, point: u64) -> u64 {
        match &self.action {
            ActionRepr::Table(t) => t[elem as usize][point as usize] as u64,
            ActionRepr::Power(p) => p.apply(elem, point),
        }
    }

    #[inline]
    fn fixes(&self, elem: u16, point: u64) -> bool {
        match &self.action {
            ActionRepr::Table(t) => t[elem as usize][point as usize] as u64 == point,
            ActionRepr::Power(p) => p.fixes(elem, point),
        }
    }

    /// Disjoint union, self's points first.
    pub fn disjoint_union(&self, other: &GSet, caps: &Caps) -> Result<GSet> {
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let size = self.size + other.size;
        if size > caps.max_points {
            return Err(Error::EnumerationCapExceeded {
                needed: size as u128,
                cap: caps.max_points,
            });
        }
        let a = self.table_rows(caps)?;
        let b = other.table_rows(caps)?;
        let table: Vec<Vec<u32>> = (0..self.group.order())
            .map(|g| {
                a[g].iter()
                    .copied()
                    .chain(b[g].iter().map(|&p| p + self.size as u32))
                    .collect()
            })
            .collect();
        Ok(GSet::from_table(self.group.clone(), table, None))
    }

    /// Cartesian product with the diagonal action.
    pub fn product(&self, other: &GSet, caps: &Caps) -> Result<GSet> {
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let size = self.size as u128 * other.size as u128;
        if size > caps.max_points as u128 {
            return Err(Error::EnumerationCapExceeded {
                needed: size,
                cap: caps.max_points,
            });
        }
        let a = self.table_rows(caps)?;
        let b = other.table_rows(caps)?;
        let w = other.size as u32;
        let table: Vec<Vec<u32>> = (0..self.group.order())
            .map(|g| {
                let mut row = Vec::with_capacity(size as usize);
                for x in &a[g] {
                    for y in &b[g] {
                        row.push(x * w + y);
                    }
                }
                row
            })
            .collect();
        Ok(GSet::from_table(self.group.clone(), table, None))
    }

    /// The same points as an H-set, for H a subgroup of the acting group.
    pub fn restrict(&self, emb: &GroupEmbedding) -> Result<GSet> {
        if !self.group.same_group(&emb.parent) {
            return Err(Error::NotASubgroup);
        }
        let action = match &self.action {
            ActionRepr::Table(t) => ActionRepr::Table(
                emb.to_parent.iter().map(|&p| t[p as usize].clone()).collect(),
            ),
            ActionRepr::Power(p) => ActionRepr::Power(PowerAction {
                moves: emb
                    .to_parent
                    .iter()
                    .map(|&q| p.moves[q as usize].clone())
                    .collect(),
                ..p.clone()
            }),
        };
        Ok(GSet {
            group: emb.sub.clone(),
            size: self.size,
            action,
            labels: self.labels.clone(),
        })
    }

    /// Additive induction `K ×_H X` along `H ≤ K`.
    pub fn induce(&self, emb: &GroupEmbedding, caps: &Caps) -> Result<GSet> {
        if !self.group.same_group(&emb.sub) {
            return Err(Error::NotASubgroup);
        }
        let parent = &emb.parent;
        let x = self.table_rows(caps)?;
        let x_size = self.size as u32;
        let blocks = emb.subgroup.left_cosets();
        let mut coset_of = vec![0u32; parent.order()];
        for (b, block) in blocks.iter().enumerate() {
            for &g in block {
                coset_of[g as usize] = b as u32;
            }
        }
        let reps: Vec<u16> = blocks.iter().map(|b| b[0]).collect();
        let size = blocks.len() as u64 * self.size;
        if size > caps.max_points {
            return Err(Error::EnumerationCapExceeded {
                needed: size as u128,
                cap: caps.max_points,
            });
        }
        let table: Vec<Vec<u32>> = (0..parent.order() as u16)
            .map(|g| {
                let mut row = Vec::with_capacity(size as usize);
                for &t in &reps {
                    let u = parent.mul_idx(g, t);
                    let j = coset_of[u as usize];
                    let h = parent.mul_idx(parent.inv_idx(reps[j as usize]), u);
                    let h_sub = emb.parent_to_sub(h).expect("coset arithmetic stays in H");
                    for p in 0..x_size {
                        row.push(j * x_size + x[h_sub as usize][p as usize]);
                    }
                }
                row
            })
            .collect();
        Ok(GSet::from_table(parent.clone(), table, None))
    }

    /// Multiplicative induction along `H ≤ K`: the K-set of H-equivariant
    /// maps `K -> X`, with K acting by right translation of the argument.
    pub fn coinduce(&self, emb: &GroupEmbedding, caps: &Caps) -> Result<GSet> {
        if !self.group.same_group(&emb.sub) {
            return Err(Error::NotASubgroup);
        }
        let parent = &emb.parent;
        let x = self.table_rows(caps)?;
        if emb.subgroup.order() == parent.order() {
            // H = K: an equivariant map is determined by its value at the
            // identity, naturally isomorphic to X itself
            let table: Vec<Vec<u32>> = (0..parent.order() as u16)
                .map(|p| x[emb.parent_to_sub(p).expect("full subgroup") as usize].clone())
                .collect();
            return Ok(GSet::from_table(parent.clone(), table, self.labels.clone()));
        }
        let blocks = emb.subgroup.right_cosets();
        let positions = blocks.len();
        let mut coset_of = vec![0u32; parent.order()];
        for (b, block) in blocks.iter().enumerate() {
            for &g in block {
                coset_of[g as usize] = b as u32;
            }
        }
        let reps: Vec<u16> = blocks.iter().map(|b| b[0]).collect();
        let size = checked_pow(self.size, positions, caps)?;
        let moves: Vec<Vec<PosMove>> = (0..parent.order() as u16)
            .map(|g| {
                reps.iter()
                    .map(|&t| {
                        let u = parent.mul_idx(t, g);
                        let j2 = coset_of[u as usize];
                        let h = parent.mul_idx(u, parent.inv_idx(reps[j2 as usize]));
                        let h_sub =
                            emb.parent_to_sub(h).expect("coset arithmetic stays in H");
                        PosMove {
                            src: j2,
                            map: h_sub as u32,
                        }
                    })
                    .collect()
            })
            .collect();
        let gs = GSet {
            group: parent.clone(),
            size,
            action: ActionRepr::Power(PowerAction {
                base: self.size,
                positions,
                pow: pow_table(self.size, positions),
                shift: shift_for(self.size),
                moves,
                digit_maps: x,
            }),
            labels: None,
        };
        gs.debug_validate();
        Ok(gs)
    }

    /// Orbits in deterministic order (ascending representatives), with exact
    /// stabilizers. Meant for small sets; use [`GSet::orbit_class_counts`]
    /// for large ones.
    pub fn orbits(&self) -> Vec<Orbit> {
        let mut out = Vec::new();
        self.scan_orbits(|rep, len, mask| {
            let stabilizer = Subgroup::from_mask(self.group.clone(), mask)
                .expect("stabilizers are subgroups");
            out.push(Orbit {
                rep,
                len,
                stabilizer,
            });
        });
        out
    }

    /// Number of orbits whose stabilizer lies in each conjugacy class.
    pub fn orbit_class_counts(&self, lattice: &SubgroupLattice) -> Result<Vec<u64>> {
        if !self.group.same_group(lattice.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut counts = vec![0u64; lattice.class_count()];
        self.scan_orbits(|_, _, mask| {
            let class = lattice
                .class_of_mask(&mask)
                .expect("stabilizer is in the lattice");
            counts[class] += 1;
        });
        Ok(counts)
    }

    fn scan_orbits(&self, mut emit: impl FnMut(u64, u64, MemberMask)) {
        let n = self.size as usize;
        let order = self.group.order() as u16;
        let gens: Vec<u16> = self.group.generator_indices().to_vec();
        let words = n.div_ceil(64);
        let mut visited = vec![0u64; words];
        // mark the slack bits of the last word as done
        for b in n..words * 64 {
            visited[b / 64] |= 1 << (b % 64);
        }
        let mut queue: Vec<u64> = Vec::new();
        for w in 0..words {
            while visited[w] != u64::MAX {
                let start = (w * 64 + visited[w].trailing_ones() as usize) as u64;
                visited[start as usize / 64] |= 1 << (start % 64);
                queue.clear();
                queue.push(start);
                let mut len = 0u64;
                let mut head = 0;
                while head < queue.len() {
                    let p = queue[head];
                    head += 1;
                    len += 1;
                    for &g in &gens {
                        let q = self.apply(g, p);
                        let (wq, bq) = (q as usize / 64, q % 64);
                        if visited[wq] >> bq & 1 == 0 {
                            visited[wq] |= 1 << bq;
                            queue.push(q);
                        }
                    }
                }
                let mut mask = MemberMask::empty(order as usize);
                for g in 0..order {
                    if self.fixes(g, start) {
                        mask.insert(g as usize);
                    }
                }
                emit(start, len, mask);
            }
        }
    }

    /// Number of points fixed by every element of the subgroup.
    pub fn fixed_count(&self, sub: &Subgroup) -> Result<u64> {
        let gens = self.fixing_gens(sub)?;
        let mut count = 0u64;
        for p in 0..self.size {
            if gens.iter().all(|&g| self.fixes(g, p)) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// The fixed points themselves, ascending. Materializes the subset, so
    /// only sensible for small sets or large subgroups.
    pub fn fixed_set(&self, sub: &Subgroup) -> Result<Vec<u64>> {
        let gens = self.fixing_gens(sub)?;
        Ok((0..self.size)
            .filter(|&p| gens.iter().all(|&g| self.fixes(g, p)))
            .collect())
    }

    fn fixing_gens(&self, sub: &Subgroup) -> Result<Vec<u16>> {
        if !sub.parent().same_group(&self.group) {
            return Err(Error::NotASubgroup);
        }
        // fixed by a generating set means fixed by the subgroup
        Ok(sub.generating_set())
    }

    /// Isomorphism test by comparing multisets of orbit stabilizer classes.
    pub fn is_isomorphic(&self, other: &GSet, lattice: &SubgroupLattice) -> Result<bool> {
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.orbit_class_counts(lattice)? == other.orbit_class_counts(lattice)?)
    }

    /// Checks that the table is an action: identity row plus the
    /// homomorphism law, exhaustively while `|G| * size` stays within
    /// `budget` and on 10^4 seeded samples above that.
    pub fn validate_action(&self, budget: u64) -> Result<()> {
        for p in 0..self.size {
            if self.apply(0, p) != p {
                return Err(Error::InvalidAction(format!(
                    "identity moves point {p}"
                )));
            }
        }
        let order = self.group.order() as u16;
        let exhaustive = (order as u64) * self.size <= budget;
        let mut check = |g: u16, h: u16, p: u64| -> Result<()> {
            let gh = self.group.mul_idx(g, h);
            if self.apply(gh, p) != self.apply(g, self.apply(h, p)) {
                return Err(Error::InvalidAction(format!(
                    "act[{g}*{h}] != act[{g}] . act[{h}] at point {p}"
                )));
            }
            Ok(())
        };
        if exhaustive {
            for g in 0..order {
                for h in 0..order {
                    for p in 0..self.size {
                        check(g, h, p)?;
                    }
                }
            }
        } else if self.size > 0 {
            let mut state = 0x9E3779B97F4A7C15u64;
            for _ in 0..10_000 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let g = (state >> 33) as u16 % order;
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let h = (state >> 33) as u16 % order;
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let p = (state >> 1) % self.size;
                check(g, h, p)?;
            }
        }
        Ok(())
    }

    /// Plain-text action grid for golden tests. Small sets only.
    pub fn dump_table(&self) -> String {
        assert!(self.size <= 10_000, "dump_table is for small sets");
        let mut out = String::new();
        out.push_str("point:");
        for p in 0..self.size {
            out.push_str(&format!(" {p}"));
        }
        out.push('\n');
        for g in 0..self.group.order() as u16 {
            out.push_str(&format!("{}:", self.group.element(g).cycle_string()));
            for p in 0..self.size {
                out.push_str(&format!(" {}", self.apply(g, p)));
            }
            out.push('\n');
        }
        out
    }

    fn table_rows(&self, caps: &Caps) -> Result<Vec<Vec<u32>>> {
        match &self.action {
            ActionRepr::Table(t) => Ok(t.clone()),
            ActionRepr::Power(_) => {
                let entries = self.group.order() as u128 * self.size as u128;
                if self.size > caps.max_points || entries > 200_000_000 {
                    return Err(Error::EnumerationCapExceeded {
                        needed: entries,
                        cap: caps.max_points,
                    });
                }
                Ok((0..self.group.order() as u16)
                    .map(|g| (0..self.size).map(|p| self.apply(g, p) as u32).collect())
                    .collect())
            }
        }
    }

    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let quick = 10_000 / (self.group.order() as u64).max(1);
            for p in 0..self.size.min(quick.max(16)) {
                debug_assert_eq!(self.apply(0, p), p, "identity must fix point {p}");
            }
            let _ = self.validate_action(2_000).is_ok();
        }
    }
}

fn pow_table(base: u64, positions: usize) -> Vec<u64> {
    let mut pow = Vec::with_capacity(positions + 1);
    let mut acc = 1u64;
    pow.push(acc);
    for _ in 0..positions {
        acc = acc.saturating_mul(base);
        pow.push(acc);
    }
    pow
}

fn shift_for(base: u64) -> Option<(u32, u64)> {
    if base >= 2 && base.is_power_of_two() {
        Some((base.trailing_zeros(), base - 1))
    } else {
        None
    }
}

fn checked_pow(base: u64, exp: usize, caps: &Caps) -> Result<u64> {
    let mut acc = 1u128;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > caps.max_points as u128 {
            return Err(Error::EnumerationCapExceeded {
                needed: acc,
                cap: caps.max_points,
            });
        }
    }
    Ok(acc as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn s3() -> Arc<PermGroup> {
        families::symmetric(3, &Caps::default()).unwrap()
    }

    fn c2() -> Arc<PermGroup> {
        families::cyclic(2, &Caps::default()).unwrap()
    }

    fn subgroup_by_cycles(g: &Arc<PermGroup>, cycles: &[&str]) -> Subgroup {
        let idxs: Vec<u16> = cycles
            .iter()
            .map(|c| {
                g.index_of(&crate::perm::Permutation::parse_cycles(c, g.degree()).unwrap())
                    .unwrap()
            })
            .collect();
        Subgroup::generated(g.clone(), &idxs)
    }

    #[test]
    fn coset_set_shapes() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        assert_eq!(GSet::coset_gset(&full).size(), 1);

        let trivial = Subgroup::trivial(g.clone());
        let regular = GSet::coset_gset(&trivial);
        assert_eq!(regular.size(), 6);

        let c3 = subgroup_by_cycles(&g, &["(1 2 3)"]);
        let two = GSet::coset_gset(&c3);
        assert_eq!(two.size(), 2);
        // rotations act trivially, transpositions swap the two cosets
        let rot = g
            .index_of(&crate::perm::Permutation::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let swap = g
            .index_of(&crate::perm::Permutation::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        assert_eq!(two.apply(rot, 0), 0);
        assert_eq!(two.apply(rot, 1), 1);
        assert_eq!(two.apply(swap, 0), 1);
        assert_eq!(two.apply(swap, 1), 0);
    }

    #[test]
    fn fixed_points_basics() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        let trivial = Subgroup::trivial(g.clone());
        let point = GSet::coset_gset(&full);
        let regular = GSet::coset_gset(&trivial);
        let c2sub = subgroup_by_cycles(&g, &["(1 2)"]);

        assert_eq!(point.fixed_count(&full).unwrap(), 1);
        assert_eq!(point.fixed_count(&c2sub).unwrap(), 1);
        assert_eq!(regular.fixed_count(&c2sub).unwrap(), 0);
        assert_eq!(regular.fixed_count(&full).unwrap(), 0);
        assert_eq!(regular.fixed_count(&trivial).unwrap(), 6);
    }

    #[test]
    fn function_set_over_c2() {
        let g = c2();
        let x = GSet::function_gset(g.clone(), 2, &Caps::default()).unwrap();
        assert_eq!(x.size(), 4);
        let full = Subgroup::full(g.clone());
        // the two constant functions
        assert_eq!(x.fixed_count(&full).unwrap(), 2);
        let orbits = x.orbits();
        let mut lens: Vec<u64> = orbits.iter().map(|o| o.len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 1, 2]);
    }

    #[test]
    fn function_set_degenerate_alphabets() {
        let g = s3();
        let one = GSet::function_gset(g.clone(), 1, &Caps::default()).unwrap();
        assert_eq!(one.size(), 1);
        assert_eq!(one.fixed_count(&Subgroup::full(g.clone())).unwrap(), 1);
        let zero = GSet::function_gset(g.clone(), 0, &Caps::default()).unwrap();
        assert_eq!(zero.size(), 0);
        assert_eq!(zero.orbits().len(), 0);
    }

    #[test]
    fn function_set_cap() {
        let g = s3();
        let r = GSet::function_gset(g, 10, &Caps::default().with_max_points(1000));
        assert!(matches!(r, Err(Error::EnumerationCapExceeded { .. })));
    }

    #[test]
    fn union_and_product_laws() {
        let caps = Caps::default();
        let g = s3();
        let regular = GSet::coset_gset(&Subgroup::trivial(g.clone()));
        let point = GSet::point(g.clone());
        let empty = GSet::empty(g.clone());
        let lattice = crate::lattice::SubgroupLattice::new(g.clone());

        let u = regular.disjoint_union(&empty, &caps).unwrap();
        assert!(u.is_isomorphic(&regular, &lattice).unwrap());
        let p = regular.product(&point, &caps).unwrap();
        assert!(p.is_isomorphic(&regular, &lattice).unwrap());

        let both = regular.disjoint_union(&point, &caps).unwrap();
        let orbits = both.orbits();
        assert_eq!(orbits.len(), 2);
        let mut lens: Vec<u64> = orbits.iter().map(|o| o.len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 6]);
    }

    #[test]
    fn product_of_free_orbits_over_c2() {
        let caps = Caps::default();
        let g = c2();
        let regular = GSet::coset_gset(&Subgroup::trivial(g.clone()));
        let p = regular.product(&regular, &caps).unwrap();
        assert_eq!(p.size(), 4);
        let orbits = p.orbits();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len == 2));
        assert!(orbits.iter().all(|o| o.stabilizer.order() == 1));
    }

    #[test]
    fn fixed_counts_add_and_multiply() {
        let caps = Caps::default();
        let g = s3();
        let lattice = crate::lattice::SubgroupLattice::new(g.clone());
        let a = GSet::coset_gset(lattice.class_rep(1));
        let b = GSet::coset_gset(lattice.class_rep(2));
        for c in 0..lattice.class_count() {
            let h = lattice.class_rep(c);
            let fa = a.fixed_count(h).unwrap();
            let fb = b.fixed_count(h).unwrap();
            assert_eq!(
                a.disjoint_union(&b, &caps).unwrap().fixed_count(h).unwrap(),
                fa + fb
            );
            assert_eq!(a.product(&b, &caps).unwrap().fixed_count(h).unwrap(), fa * fb);
        }
    }

    #[test]
    fn orbit_of_coset_set_has_conjugate_stabilizer() {
        let g = s3();
        let lattice = crate::lattice::SubgroupLattice::new(g.clone());
        for c in 0..lattice.class_count() {
            let h = lattice.class_rep(c);
            let x = GSet::coset_gset(h);
            let orbits = x.orbits();
            assert_eq!(orbits.len(), 1);
            assert_eq!(orbits[0].len, x.size());
            assert_eq!(
                lattice.class_of_mask(orbits[0].stabilizer.mask()).unwrap(),
                c
            );
        }
    }

    #[test]
    fn restriction_shapes() {
        let caps = Caps::default();
        let c4 = families::cyclic(4, &caps).unwrap();
        let lattice = crate::lattice::SubgroupLattice::new(c4.clone());
        let c2_in = lattice.class_rep(1).clone();
        assert_eq!(c2_in.order(), 2);
        let emb = c2_in.embed();
        let regular = GSet::coset_gset(&Subgroup::trivial(c4.clone()));
        let restricted = regular.restrict(&emb).unwrap();
        assert_eq!(restricted.size(), 4);
        let orbits = restricted.orbits();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len == 2 && o.stabilizer.order() == 1));

        // restricting along the full subgroup is the identity
        let full_emb = Subgroup::full(c4.clone()).embed();
        let same = regular.restrict(&full_emb).unwrap();
        assert_eq!(same.size(), regular.size());
        for g in 0..c4.order() as u16 {
            for p in 0..same.size() {
                assert_eq!(same.apply(g, p), regular.apply(g, p));
            }
        }
    }

    #[test]
    fn induce_shapes() {
        let caps = Caps::default();
        let c4 = families::cyclic(4, &caps).unwrap();
        let lattice = crate::lattice::SubgroupLattice::new(c4.clone());
        let c2_in = lattice.class_rep(1).clone();
        let emb = c2_in.embed();

        // a point induces to the coset set, and the trivial subgroup's point
        // induces to the regular set
        let point = GSet::point(emb.sub.clone());
        let induced = point.induce(&emb, &caps).unwrap();
        assert_eq!(induced.size(), 2);

        let triv_emb = Subgroup::trivial(c4.clone()).embed();
        let free = GSet::point(triv_emb.sub.clone()).induce(&triv_emb, &caps).unwrap();
        assert_eq!(free.size(), 4);
        assert_eq!(free.orbits().len(), 1);
        assert_eq!(free.orbits()[0].stabilizer.order(), 1);

        // restrict the regular C4-set to C2, then induce back: 2 * 4 points
        let regular = GSet::coset_gset(&Subgroup::trivial(c4.clone()));
        let back = regular.restrict(&emb).unwrap().induce(&emb, &caps).unwrap();
        assert_eq!(back.size(), 8);

        // inducing along the full subgroup is the identity up to isomorphism
        let full_emb = Subgroup::full(c4.clone()).embed();
        let same = regular.restrict(&full_emb).unwrap().induce(&full_emb, &caps).unwrap();
        assert!(same.is_isomorphic(&regular, &lattice).unwrap());
    }

    #[test]
    fn coinduce_matches_function_set() {
        let caps = Caps::default();
        for g in [c2(), families::cyclic(3, &caps).unwrap(), s3()] {
            let lattice = crate::lattice::SubgroupLattice::new(g.clone());
            for k in 0..=2u64 {
                let emb = Subgroup::trivial(g.clone()).embed();
                let x = GSet::trivial_points(emb.sub.clone(), k);
                let coinduced = x.coinduce(&emb, &caps).unwrap();
                let functions = GSet::function_gset(g.clone(), k, &caps).unwrap();
                assert_eq!(coinduced.size(), functions.size());
                // pointwise identical actions, not just isomorphic
                for e in 0..g.order() as u16 {
                    for p in 0..functions.size() {
                        assert_eq!(coinduced.apply(e, p), functions.apply(e, p));
                    }
                }
                assert!(coinduced.is_isomorphic(&functions, &lattice).unwrap());
            }
        }
    }

    #[test]
    fn coinduce_identity_and_fixed_point_count() {
        let caps = Caps::default();
        let g = s3();
        let lattice = crate::lattice::SubgroupLattice::new(g.clone());
        for c in 0..lattice.class_count() {
            let h = lattice.class_rep(c).clone();
            let emb = h.embed();
            // H = K edge
            let full_emb = Subgroup::full(emb.sub.clone()).embed();
            let x = GSet::coset_gset(&Subgroup::trivial(emb.sub.clone()));
            let same = x.coinduce(&full_emb, &caps).unwrap();
            assert_eq!(same.size(), x.size());

            // |coinduce(X)^K| == |X^H|
            let coind = x.coinduce(&emb, &caps).unwrap();
            let full_h_in_sub = Subgroup::full(emb.sub.clone());
            assert_eq!(
                coind.fixed_count(&Subgroup::full(g.clone())).unwrap(),
                x.fixed_count(&full_h_in_sub).unwrap(),
                "class {c}"
            );
        }
    }

    #[test]
    fn action_validity_within_budget() {
        let caps = Caps::default();
        let g = s3();
        let sets = vec![
            GSet::coset_gset(&Subgroup::trivial(g.clone())),
            GSet::function_gset(g.clone(), 2, &caps).unwrap(),
            GSet::function_gset(g.clone(), 3, &caps).unwrap(),
        ];
        for x in sets {
            x.validate_action(1_000_000).unwrap();
        }
    }

    #[test]
    fn dump_table_golden_for_s3_mod_c2() {
        let g = s3();
        let h = subgroup_by_cycles(&g, &["(1 2)"]);
        let x = GSet::coset_gset(&h);
        // derived by hand: cosets {e,(12)}, {(23),(132)}, {(123),(13)}
        let expected = "\
point: 0 1 2
(): 0 1 2
(2 3): 1 0 2
(1 2): 0 2 1
(1 2 3): 2 0 1
(1 3 2): 1 2 0
(1 3): 2 1 0
";
        assert_eq!(x.dump_table(), expected);
    }

    #[test]
    fn group_mismatch_is_rejected() {
        let caps = Caps::default();
        let a = GSet::point(s3());
        let b = GSet::point(c2());
        assert!(matches!(
            a.disjoint_union(&b, &caps),
            Err(Error::GroupMismatch)
        ));
        let h = Subgroup::full(c2());
        assert!(matches!(a.fixed_count(&h), Err(Error::NotASubgroup)));
    }
}
