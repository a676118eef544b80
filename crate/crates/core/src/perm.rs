//! Exact permutation arithmetic on the points `0..n`.
//!
//! Composition convention, fixed for the whole crate: the **left operand
//! acts first**, `(p.compose(&q))(i) = q(p(i))`. Products written left to
//! right are applied left to right. Conjugation and commutators read
//! against this convention: `a^g = g⁻¹·a·g` and `[a,b] = a⁻¹·b⁻¹·a·b`.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// A bijection on the points `0..degree`, stored as its image table:
/// `images[i]` is the image of point `i`.
///
/// Ordering is lexicographic on the image table; this is the canonical
/// element order used everywhere (the identity sorts first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// The identity on `0..degree`.
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n {
                return Err(Error::PointOutOfRange {
                    point: img as u64,
                    degree: n,
                });
            }
            if seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} appears twice"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    /// `self` followed by `then`: `(self.compose(then))(i) = then(self(i))`.
    ///
    /// Panics if the degrees differ; public entry points validate degrees
    /// when permutations are parsed.
    pub fn compose(&self, then: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            then.degree(),
            "degree mismatch in composition"
        );
        Perm {
            images: self.images.iter().map(|&i| then.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Perm { images }
    }

    /// Conjugate `self^g = g⁻¹·self·g` under the left-acts-first convention.
    pub fn conjugated_by(&self, g: &Perm) -> Perm {
        assert_eq!(self.degree(), g.degree(), "degree mismatch in conjugation");
        // (g⁻¹·p·g)(i) = g(p(g⁻¹(i))): build directly through g's tables.
        let mut images = vec![0u32; self.images.len()];
        for (i, &gi) in g.images.iter().enumerate() {
            images[gi as usize] = g.images[self.images[i] as usize];
        }
        Perm { images }
    }

    /// `self^k`, with `self^0` the identity and negative powers through the
    /// inverse.
    pub fn pow(&self, k: i64) -> Perm {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle decomposition: nontrivial cycles, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the element: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| arith::lcm(acc, c.len() as u64))
    }

    /// Sign of the permutation: `+1` for even, `-1` for odd.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Canonical cycle-notation string; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.cycle_string())
    }
}

/// `[a,b] = a⁻¹·b⁻¹·a·b` under the left-acts-first convention.
pub fn commutator(a: &Perm, b: &Perm) -> Perm {
    a.inverse()
        .compose(&b.inverse())
        .compose(a)
        .compose(b)
}

/// Parses disjoint-cycle notation over 0-based points, e.g. `(0 1 2)(3 4)`.
/// `()` denotes the identity. Points must lie in `0..degree` and may not
/// repeat across cycles.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut chars = text.char_indices().peekable();
    let mut any_cycle = false;

    loop {
        // skip whitespace between cycles
        while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some((_, '(')) => {
                any_cycle = true;
                let mut cycle: Vec<u32> = Vec::new();
                loop {
                    while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
                        chars.next();
                    }
                    match chars.peek() {
                        Some(&(_, ')')) => {
                            chars.next();
                            break;
                        }
                        Some(&(_, c)) if c.is_ascii_digit() => {
                            let mut value: u64 = 0;
                            while matches!(chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
                                let (_, c) = chars.next().unwrap();
                                value = value * 10 + (c as u64 - '0' as u64);
                                if value > u32::MAX as u64 {
                                    return Err(Error::CycleSyntax(
                                        "point value too large".into(),
                                    ));
                                }
                            }
                            if value as usize >= degree {
                                return Err(Error::PointOutOfRange {
                                    point: value,
                                    degree,
                                });
                            }
                            if used[value as usize] {
                                return Err(Error::CycleSyntax(format!(
                                    "point {value} appears twice"
                                )));
                            }
                            used[value as usize] = true;
                            cycle.push(value as u32);
                        }
                        Some(&(i, c)) => {
                            return Err(Error::CycleSyntax(format!(
                                "unexpected character `{c}` at byte {i}"
                            )));
                        }
                        None => {
                            return Err(Error::CycleSyntax("unclosed cycle".into()));
                        }
                    }
                }
                for (k, &p) in cycle.iter().enumerate() {
                    images[p as usize] = cycle[(k + 1) % cycle.len()];
                }
            }
            Some((i, c)) => {
                return Err(Error::CycleSyntax(format!(
                    "expected `(` at byte {i}, found `{c}`"
                )));
            }
        }
    }

    if !any_cycle {
        return Err(Error::CycleSyntax("no cycles found".into()));
    }
    Ok(Perm { images })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn composition_convention() {
        // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1.
        // Evaluated by hand against the left-acts-first convention.
        let a = p(3, "(0 1)");
        let b = p(3, "(1 2)");
        let c = a.compose(&b);
        assert_eq!(c.images(), &[2, 0, 1]);
        assert_eq!(c.apply(0), 2);
        assert_eq!(c.cycle_string(), "(0 2 1)");
        assert_eq!(c.order(), 3);
    }

    #[test]
    fn identity_and_inverse() {
        let a = p(3, "(0 1 2)");
        assert_eq!(a.compose(&Perm::identity(3)), a);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(Perm::identity(5).order(), 1);
        assert_eq!(p(5, "(0 1 2 3 4)").order(), 5);
        assert_eq!(p(5, "(0 1 2)(3 4)").order(), 6);
    }

    #[test]
    fn commutator_degenerate_cases() {
        let a = p(4, "(0 1 2 3)");
        assert!(commutator(&a, &a).is_identity());
        assert!(commutator(&a, &Perm::identity(4)).is_identity());
        assert!(commutator(&Perm::identity(4), &a).is_identity());
    }

    #[test]
    fn commutator_of_cycle_and_transposition() {
        // Oracle: the unique subgroup of order 3 in S3, enumerated directly.
        let order3: Vec<Perm> = vec![
            Perm::identity(3),
            p(3, "(0 1 2)"),
            p(3, "(0 2 1)"),
        ];
        let c = commutator(&p(3, "(0 1 2)"), &p(3, "(0 1)"));
        assert_eq!(c.order(), 3);
        assert!(order3.contains(&c));
    }

    #[test]
    fn commutator_inverse_swaps_arguments() {
        let a = p(5, "(0 1 2 3 4)");
        let b = p(5, "(0 1)(2 3)");
        assert_eq!(commutator(&a, &b).inverse(), commutator(&b, &a));
    }

    #[test]
    fn conjugation_matches_definition() {
        let a = p(5, "(0 1 2)");
        let g = p(5, "(0 3)(1 4)");
        let direct = a.conjugated_by(&g);
        let by_products = g.inverse().compose(&a).compose(&g);
        assert_eq!(direct, by_products);
    }

    #[test]
    fn powers() {
        let a = p(6, "(0 1 2 3 4 5)");
        assert!(a.pow(0).is_identity());
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(4), a.compose(&a).compose(&a).compose(&a));
        assert!(a.pow(6).is_identity());
    }

    #[test]
    fn sign_parity() {
        assert_eq!(Perm::identity(4).sign(), 1);
        assert_eq!(p(4, "(0 1)").sign(), -1);
        assert_eq!(p(4, "(0 1 2)").sign(), 1);
        assert_eq!(p(4, "(0 1)(2 3)").sign(), 1);
        assert_eq!(p(4, "(0 1 2 3)").sign(), -1);
    }

    #[test]
    fn cycle_parsing_round_trip() {
        let a = p(6, "(0 1 2)(3 4)");
        assert_eq!(parse_cycles(6, &a.cycle_string()).unwrap(), a);
        assert_eq!(parse_cycles(6, "()").unwrap(), Perm::identity(6));
        assert_eq!(Perm::identity(6).cycle_string(), "()");
    }

    #[test]
    fn cycle_parsing_errors() {
        assert!(matches!(
            parse_cycles(3, "(0 5)"),
            Err(Error::PointOutOfRange { point: 5, .. })
        ));
        assert!(matches!(
            parse_cycles(3, "(0 1)(1 2)"),
            Err(Error::CycleSyntax(_))
        ));
        assert!(matches!(parse_cycles(3, "0 1 2"), Err(Error::CycleSyntax(_))));
        assert!(matches!(parse_cycles(3, "(0 1"), Err(Error::CycleSyntax(_))));
        assert!(matches!(parse_cycles(3, ""), Err(Error::CycleSyntax(_))));
    }

    #[test]
    fn from_images_validation() {
        assert!(Perm::from_images(vec![1, 2, 0]).is_ok());
        assert!(matches!(
            Perm::from_images(vec![1, 1, 0]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            Perm::from_images(vec![1, 3, 0]),
            Err(Error::PointOutOfRange { .. })
        ));
    }
}
