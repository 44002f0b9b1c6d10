//! Constructors for the standard small-group families.

use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Cyclic group of order `n`, acting on `n` points.
pub fn cyclic(n: usize, caps: &Caps) -> Result<Arc<PermGroup>> {
    if n == 0 {
        return Err(Error::Parse("C0 does not exist".into()));
    }
    let gens = if n == 1 {
        vec![]
    } else {
        vec![rotation(n)]
    };
    PermGroup::from_generators(gens, n, caps, Some(format!("C{n}")))
}

/// Dihedral group of order `2n`.
///
/// `D1` is cyclic of order 2 and `D2` is the Klein four-group; for `n >= 3`
/// the group acts on the `n` vertices of a regular polygon.
pub fn dihedral(n: usize, caps: &Caps) -> Result<Arc<PermGroup>> {
    let name = Some(format!("D{n}"));
    match n {
        0 => Err(Error::Parse("D0 does not exist".into())),
        1 => PermGroup::from_generators(
            vec![Permutation::parse_cycles("(1 2)", 2)?],
            2,
            caps,
            name,
        ),
        2 => PermGroup::from_generators(
            vec![
                Permutation::parse_cycles("(1 2)", 4)?,
                Permutation::parse_cycles("(3 4)", 4)?,
            ],
            4,
            caps,
            name,
        ),
        _ => {
            let reflection: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            PermGroup::from_generators(
                vec![rotation(n), Permutation::from_images(reflection)?],
                n,
                caps,
                name,
            )
        }
    }
}

/// Symmetric group on `n` points.
pub fn symmetric(n: usize, caps: &Caps) -> Result<Arc<PermGroup>> {
    if n == 0 {
        return Err(Error::Parse("S0 does not exist".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::parse_cycles("(1 2)", n)?);
    }
    if n >= 3 {
        gens.push(rotation(n));
    }
    PermGroup::from_generators(gens, n, caps, Some(format!("S{n}")))
}

/// Alternating group on `n` points.
pub fn alternating(n: usize, caps: &Caps) -> Result<Arc<PermGroup>> {
    if n == 0 {
        return Err(Error::Parse("A0 does not exist".into()));
    }
    let name = Some(format!("A{n}"));
    if n <= 2 {
        return PermGroup::from_generators(vec![], n, caps, name);
    }
    let mut gens = vec![Permutation::parse_cycles("(1 2 3)", n)?];
    if n > 3 {
        if n % 2 == 1 {
            gens.push(rotation(n));
        } else {
            // cycle on points 2..n is even only together with a 3-cycle
            let mut images: Vec<u32> = (0..n as u32).collect();
            for i in 1..n {
                images[i] = if i + 1 < n { i as u32 + 1 } else { 1 };
            }
            gens.push(Permutation::from_images(images)?);
        }
    }
    PermGroup::from_generators(gens, n, caps, name)
}

/// The quaternion group of order 8 in its regular representation on the
/// units `{1, -1, i, -i, j, -j, k, -k}`.
pub fn quaternion8(caps: &Caps) -> Result<Arc<PermGroup>> {
    // left multiplication by i and by j, points ordered as above
    let mul_i = Permutation::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4])?;
    let mul_j = Permutation::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3])?;
    PermGroup::from_generators(vec![mul_i, mul_j], 8, caps, Some("Q8".into()))
}

/// Klein four-group as double transpositions on 4 points.
pub fn klein4(caps: &Caps) -> Result<Arc<PermGroup>> {
    PermGroup::from_generators(
        vec![
            Permutation::parse_cycles("(1 2)", 4)?,
            Permutation::parse_cycles("(3 4)", 4)?,
        ],
        4,
        caps,
        Some("V4".into()),
    )
}

fn rotation(n: usize) -> Permutation {
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    Permutation::from_images(images).expect("rotation is a bijection")
}
