//! Permutations on a fixed point domain, with cycle-notation parsing.
//!
//! Points are 0-based internally and 1-based in cycle notation, which is the
//! only user-facing form. Juxtaposed cycles compose left to right: in
//! `"(1 2)(1 3)"` the cycle `(1 2)` is applied first.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored by its image tuple.
///
/// The derived `Ord` (lexicographic on images) is the canonical element order
/// used everywhere; the identity is always the least element of its degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image tuple, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if (img as usize) >= n || seen[img as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "images {:?} are not a bijection of 0..{}",
                    images, n
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img as usize == i)
    }

    /// Group product `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Parses cycle notation like `"(1 2)(3 4)"` on 1-based points.
    ///
    /// Whitespace separates points inside parentheses; whitespace between
    /// cycles is allowed; the empty string and `"()"` are the identity.
    pub fn parse_cycles(input: &str, degree: usize) -> Result<Self> {
        let mut result = Permutation::identity(degree);
        let mut chars = input.chars().peekable();
        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => {
                    return Err(Error::InvalidPermutation(format!(
                        "expected '(' in cycle notation, found {c:?}"
                    )))
                }
            }
            let mut body = String::new();
            loop {
                match chars.next() {
                    Some(')') => break,
                    Some(c) => body.push(c),
                    None => {
                        return Err(Error::InvalidPermutation(
                            "unterminated cycle".to_string(),
                        ))
                    }
                }
            }
            let mut cycle = Vec::new();
            for token in body.split_whitespace() {
                let point: u64 = token.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point {token:?}"))
                })?;
                if point == 0 || point > degree as u64 {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} outside 1..={degree}"
                    )));
                }
                let p = (point - 1) as u32;
                if cycle.contains(&p) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} repeated inside a cycle"
                    )));
                }
                cycle.push(p);
            }
            if cycle.len() < 2 {
                continue; // fixed point or empty cycle
            }
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for w in 0..cycle.len() {
                images[cycle[w] as usize] = cycle[(w + 1) % cycle.len()];
            }
            let cycle_perm = Permutation { images };
            // reading order applies earlier cycles first
            result = cycle_perm.compose(&result);
        }
        Ok(result)
    }

    /// Cycle decomposition on 1-based points, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p] as usize;
            }
            out.push('(');
            for (i, q) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(q + 1).to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let p = Permutation::parse_cycles("(1 2)(3 4)", 5).unwrap();
        assert_eq!(p.cycle_string(), "(1 2)(3 4)");
        assert_eq!(p.image(0), 1);
        assert_eq!(p.image(4), 4);
    }

    #[test]
    fn identity_forms() {
        assert!(Permutation::parse_cycles("", 3).unwrap().is_identity());
        assert!(Permutation::parse_cycles("()", 3).unwrap().is_identity());
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
    }

    #[test]
    fn juxtaposed_cycles_apply_left_to_right() {
        // (1 2) first, then (1 3): 1 -> 2, 2 -> 1 -> 3, 3 -> 1
        let p = Permutation::parse_cycles("(1 2)(1 3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
        assert_eq!(p.cycle_string(), "(1 2 3)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("1 2", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn inverse_and_compose() {
        let p = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    proptest! {
        #[test]
        fn roundtrip_random_perm(seed in 0u64..10_000) {
            let n = 7usize;
            // Fisher-Yates from a simple LCG for reproducibility
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            let mut images: Vec<u32> = (0..n as u32).collect();
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                images.swap(i, j);
            }
            let p = Permutation::from_images(images).unwrap();
            let s = p.cycle_string();
            let q = Permutation::parse_cycles(&s, n).unwrap();
            prop_assert_eq!(p, q);
        }

        #[test]
        fn compose_is_associative(a in 0u64..500, b in 0u64..500, c in 0u64..500) {
            let mk = |seed: u64| {
                let n = 6usize;
                let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
                let mut images: Vec<u32> = (0..n as u32).collect();
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let j = (state >> 33) as usize % (i + 1);
                    images.swap(i, j);
                }
                Permutation::from_images(images).unwrap()
            };
            let (x, y, z) = (mk(a), mk(b), mk(c));
            prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        }
    }
}
