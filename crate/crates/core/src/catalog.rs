//! Constructors for the concrete groups used throughout: symmetric and
//! alternating groups, cyclic and dihedral groups, the quaternion group,
//! elementary abelian groups, direct products, the C2 wreath construction,
//! PSL(2,p) on the projective line, and a hand-editable text format for
//! user-supplied generator lists.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_CAP};
use crate::perm::{parse_cycles, Perm};

/// Description of a catalog group; `Display` renders the canonical label,
/// and `FromStr` parses the same syntax, e.g.
/// `direct_product(symmetric(3), cyclic(4))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    Symmetric(u32),
    Alternating(u32),
    Cyclic(u32),
    Dihedral(u32),
    Quaternion8,
    ElementaryAbelian { p: u32, k: u32 },
    DirectProduct(Box<GroupDescriptor>, Box<GroupDescriptor>),
    WreathC2(Box<GroupDescriptor>),
    Psl2Prime(u32),
    FromFile(PathBuf),
}

impl GroupDescriptor {
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// The closed-form order of the construction; `None` for file input.
    pub fn closed_form_order(&self) -> Option<u128> {
        match self {
            GroupDescriptor::Symmetric(n) => factorial(*n),
            GroupDescriptor::Alternating(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupDescriptor::Cyclic(n) => Some(*n as u128),
            GroupDescriptor::Dihedral(n) => Some(2 * *n as u128),
            GroupDescriptor::Quaternion8 => Some(8),
            GroupDescriptor::ElementaryAbelian { p, k } => {
                (*p as u128).checked_pow(*k)
            }
            GroupDescriptor::DirectProduct(a, b) => {
                Some(a.closed_form_order()? * b.closed_form_order()?)
            }
            GroupDescriptor::WreathC2(base) => {
                let b = base.closed_form_order()?;
                Some(2 * b * b)
            }
            GroupDescriptor::Psl2Prime(p) => {
                let p = *p as u128;
                Some(p * (p * p - 1) / 2)
            }
            GroupDescriptor::FromFile(_) => None,
        }
    }
}

fn factorial(n: u32) -> Option<u128> {
    if n > 34 {
        return None; // beyond u128 and far beyond any enumeration cap
    }
    Some((1..=n as u128).product())
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupDescriptor::Alternating(n) => write!(f, "alternating({n})"),
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupDescriptor::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupDescriptor::Quaternion8 => write!(f, "quaternion8"),
            GroupDescriptor::ElementaryAbelian { p, k } => {
                write!(f, "elementary_abelian({p}, {k})")
            }
            GroupDescriptor::DirectProduct(a, b) => write!(f, "direct_product({a}, {b})"),
            GroupDescriptor::WreathC2(base) => write!(f, "wreath_c2({base})"),
            GroupDescriptor::Psl2Prime(p) => write!(f, "psl2_prime({p})"),
            GroupDescriptor::FromFile(path) => write!(f, "from_file({})", path.display()),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cursor = Cursor { s: s.as_bytes(), i: 0 };
        let d = cursor.descriptor()?;
        cursor.skip_ws();
        if cursor.i != s.len() {
            return Err(bad_spec(s, "trailing input"));
        }
        Ok(d)
    }
}

fn bad_spec(s: &str, why: &str) -> Error {
    Error::UnsupportedParameter(format!("group spec `{s}`: {why}"))
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn ident(&mut self) -> String {
        let start = self.i;
        while self.i < self.s.len()
            && ((self.s[self.i] as char).is_ascii_alphanumeric() || self.s[self.i] == b'_')
        {
            self.i += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.i]).into_owned()
    }

    fn expect(&mut self, c: u8, what: &str) -> Result<()> {
        self.skip_ws();
        if self.i < self.s.len() && self.s[self.i] == c {
            self.i += 1;
            Ok(())
        } else {
            Err(Error::UnsupportedParameter(format!(
                "group spec: expected `{what}` at byte {}",
                self.i
            )))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(Error::UnsupportedParameter(format!(
                "group spec: expected a number at byte {start}"
            )));
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| Error::UnsupportedParameter("group spec: number too large".into()))
    }

    fn path_arg(&mut self) -> String {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i] != b')' {
            self.i += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.i])
            .trim()
            .to_string()
    }

    fn descriptor(&mut self) -> Result<GroupDescriptor> {
        self.skip_ws();
        let name = self.ident();
        match name.as_str() {
            "quaternion8" => Ok(GroupDescriptor::Quaternion8),
            "symmetric" | "alternating" | "cyclic" | "dihedral" | "psl2_prime" => {
                self.expect(b'(', "(")?;
                let n = self.number()?;
                self.expect(b')', ")")?;
                Ok(match name.as_str() {
                    "symmetric" => GroupDescriptor::Symmetric(n),
                    "alternating" => GroupDescriptor::Alternating(n),
                    "cyclic" => GroupDescriptor::Cyclic(n),
                    "dihedral" => GroupDescriptor::Dihedral(n),
                    _ => GroupDescriptor::Psl2Prime(n),
                })
            }
            "elementary_abelian" => {
                self.expect(b'(', "(")?;
                let p = self.number()?;
                self.expect(b',', ",")?;
                let k = self.number()?;
                self.expect(b')', ")")?;
                Ok(GroupDescriptor::ElementaryAbelian { p, k })
            }
            "direct_product" => {
                self.expect(b'(', "(")?;
                let a = self.descriptor()?;
                self.expect(b',', ",")?;
                let b = self.descriptor()?;
                self.expect(b')', ")")?;
                Ok(GroupDescriptor::DirectProduct(Box::new(a), Box::new(b)))
            }
            "wreath_c2" => {
                self.expect(b'(', "(")?;
                let base = self.descriptor()?;
                self.expect(b')', ")")?;
                Ok(GroupDescriptor::WreathC2(Box::new(base)))
            }
            "from_file" => {
                self.expect(b'(', "(")?;
                let path = self.path_arg();
                self.expect(b')', ")")?;
                if path.is_empty() {
                    return Err(Error::UnsupportedParameter(
                        "group spec: from_file needs a path".into(),
                    ));
                }
                Ok(GroupDescriptor::FromFile(PathBuf::from(path)))
            }
            other => Err(Error::UnsupportedParameter(format!(
                "unknown group construction `{other}`"
            ))),
        }
    }
}

/// Builds the group with the default generation cap.
pub fn build(d: &GroupDescriptor) -> Result<PermGroup> {
    build_with_cap(d, DEFAULT_CAP)
}

/// Builds the group; the constructed order is checked against the closed
/// form of the construction.
pub fn build_with_cap(d: &GroupDescriptor, cap: usize) -> Result<PermGroup> {
    let g = match d {
        GroupDescriptor::Symmetric(n) => {
            let n = degree_at_least_one(*n);
            let mut gens = vec![cycle_perm(n, &(0..2.min(n) as u32).collect::<Vec<_>>())];
            if n > 2 {
                gens.push(cycle_perm(n, &(0..n as u32).collect::<Vec<_>>()));
            }
            PermGroup::generate(gens, cap)?
        }
        GroupDescriptor::Alternating(n) => {
            let n = degree_at_least_one(*n);
            let gens = if n < 3 {
                vec![Perm::identity(n)]
            } else if n == 3 {
                vec![cycle_perm(3, &[0, 1, 2])]
            } else if n % 2 == 1 {
                vec![
                    cycle_perm(n, &[0, 1, 2]),
                    cycle_perm(n, &(0..n as u32).collect::<Vec<_>>()),
                ]
            } else {
                vec![
                    cycle_perm(n, &[0, 1, 2]),
                    cycle_perm(n, &(1..n as u32).collect::<Vec<_>>()),
                ]
            };
            PermGroup::generate(gens, cap)?
        }
        GroupDescriptor::Cyclic(n) => {
            let n = degree_at_least_one(*n);
            PermGroup::generate(vec![cycle_perm(n, &(0..n as u32).collect::<Vec<_>>())], cap)?
        }
        GroupDescriptor::Dihedral(n) => build_dihedral(*n, cap)?,
        GroupDescriptor::Quaternion8 => build_quaternion8(cap)?,
        GroupDescriptor::ElementaryAbelian { p, k } => {
            if !arith::is_prime(*p as u64) {
                return Err(Error::UnsupportedParameter(format!(
                    "elementary_abelian needs a prime, got {p}"
                )));
            }
            if *k == 0 {
                return Err(Error::UnsupportedParameter(
                    "elementary_abelian needs k >= 1".into(),
                ));
            }
            let (p, k) = (*p as usize, *k as usize);
            let degree = p * k;
            let gens: Vec<Perm> = (0..k)
                .map(|i| {
                    let block: Vec<u32> = (i * p..(i + 1) * p).map(|x| x as u32).collect();
                    cycle_perm(degree, &block)
                })
                .collect();
            PermGroup::generate(gens, cap)?
        }
        GroupDescriptor::DirectProduct(da, db) => {
            let a = build_with_cap(da, cap)?;
            let b = build_with_cap(db, cap)?;
            build_direct_product(&a, &b, cap)?
        }
        GroupDescriptor::WreathC2(base) => {
            let b = build_with_cap(base, cap)?;
            build_wreath_c2(&b, cap)?
        }
        GroupDescriptor::Psl2Prime(p) => build_psl2(*p, cap)?,
        GroupDescriptor::FromFile(path) => load_group(path)?,
    };
    if let Some(expected) = d.closed_form_order() {
        assert_eq!(
            g.order() as u128,
            expected,
            "construction {d} produced the wrong order"
        );
    }
    Ok(g.with_label(d.label()))
}

fn degree_at_least_one(n: u32) -> usize {
    (n as usize).max(1)
}

/// A single cycle on the given points, as a permutation of `0..degree`.
fn cycle_perm(degree: usize, points: &[u32]) -> Perm {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    if points.len() > 1 {
        for (k, &p) in points.iter().enumerate() {
            images[p as usize] = points[(k + 1) % points.len()];
        }
    }
    Perm::from_images(images).expect("cycle is a permutation")
}

fn build_dihedral(n: u32, cap: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::UnsupportedParameter("dihedral needs n >= 1".into())),
        1 => PermGroup::generate(vec![cycle_perm(2, &[0, 1])], cap),
        2 => PermGroup::generate(vec![cycle_perm(4, &[0, 1]), cycle_perm(4, &[2, 3])], cap),
        n => {
            let n = n as usize;
            let rotation = cycle_perm(n, &(0..n as u32).collect::<Vec<_>>());
            let reflection = Perm::from_images(
                (0..n as u32).map(|i| ((n as u32) - i) % n as u32).collect(),
            )
            .expect("reflection is a permutation");
            PermGroup::generate(vec![rotation, reflection], cap)
        }
    }
}

/// Q8 through its right regular action on the eight unit quaternions
/// ordered `1, -1, i, -i, j, -j, k, -k`.
fn build_quaternion8(cap: usize) -> Result<PermGroup> {
    // (sign, axis) with axes 0=1, 1=i, 2=j, 3=k
    fn mul(a: (i8, u8), b: (i8, u8)) -> (i8, u8) {
        let sign = a.0 * b.0;
        match (a.1, b.1) {
            (0, ax) | (ax, 0) => (sign, ax),
            (x, y) if x == y => (-sign, 0),
            (1, 2) => (sign, 3),
            (2, 3) => (sign, 1),
            (3, 1) => (sign, 2),
            (2, 1) => (-sign, 3),
            (3, 2) => (-sign, 1),
            (1, 3) => (-sign, 2),
            _ => unreachable!(),
        }
    }
    fn idx(q: (i8, u8)) -> u32 {
        q.1 as u32 * 2 + if q.0 < 0 { 1 } else { 0 }
    }
    fn unit(i: u32) -> (i8, u8) {
        (if i % 2 == 0 { 1 } else { -1 }, (i / 2) as u8)
    }
    let right_mul = |g: (i8, u8)| -> Perm {
        Perm::from_images((0..8).map(|h| idx(mul(unit(h), g))).collect())
            .expect("regular action is a permutation")
    };
    PermGroup::generate(vec![right_mul((1, 1)), right_mul((1, 2))], cap)
}

/// Direct product acting on the disjoint union of the factors' points.
fn build_direct_product(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<PermGroup> {
    let (da, db) = (a.degree(), b.degree());
    let degree = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(da as u32..degree as u32);
        gens.push(Perm::from_images(images).expect("embedded generator"));
    }
    for g in b.generators() {
        let mut images: Vec<u32> = (0..da as u32).collect();
        images.extend(g.images().iter().map(|&i| i + da as u32));
        gens.push(Perm::from_images(images).expect("embedded generator"));
    }
    PermGroup::generate(gens, cap)
}

/// `(B × B) ⋊ C2` with the swap exchanging the two copies of the base's
/// points: the base generators act on each block, and the extra generator
/// is `(0 m)(1 m+1)…(m-1 2m-1)`.
fn build_wreath_c2(base: &PermGroup, cap: usize) -> Result<PermGroup> {
    let m = base.degree();
    let degree = 2 * m;
    let mut gens = Vec::new();
    for g in base.generators() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(m as u32..degree as u32);
        gens.push(Perm::from_images(images).expect("left copy"));
        let mut images: Vec<u32> = (0..m as u32).collect();
        images.extend(g.images().iter().map(|&i| i + m as u32));
        gens.push(Perm::from_images(images).expect("right copy"));
    }
    let swap = Perm::from_images(
        (0..degree as u32)
            .map(|i| if (i as usize) < m { i + m as u32 } else { i - m as u32 })
            .collect(),
    )
    .expect("swap");
    gens.push(swap);
    PermGroup::generate(gens, cap)
}

/// PSL(2,p) on the projective line over the prime field: points
/// `0..p` are the field elements and point `p` is infinity. Generators:
/// the translation `z ↦ z+1` and the inversion `z ↦ -1/z`, whose matrices
/// generate SL(2,p).
fn build_psl2(p: u32, cap: usize) -> Result<PermGroup> {
    if !(5..=13).contains(&p) || !arith::is_prime(p as u64) {
        return Err(Error::UnsupportedParameter(format!(
            "psl2_prime supports primes 5 <= p <= 13, got {p}"
        )));
    }
    let p = p as u64;
    let degree = p as usize + 1;
    let infinity = p as u32;

    let translation = Perm::from_images(
        (0..=p)
            .map(|z| if z == p { infinity } else { ((z + 1) % p) as u32 })
            .collect(),
    )
    .expect("translation");

    let modpow = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc = 1u64;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let inversion = Perm::from_images(
        (0..=p)
            .map(|z| {
                if z == p {
                    0
                } else if z == 0 {
                    infinity
                } else {
                    ((p - modpow(z, p - 2)) % p) as u32
                }
            })
            .collect(),
    )
    .expect("inversion");

    debug_assert_eq!(degree, infinity as usize + 1);
    PermGroup::generate(vec![translation, inversion], cap)
}

/// Parses the group file format:
///
/// ```text
/// # comment
/// degree 5
/// (0 1 2 3 4)
/// (0 1 2)
/// ```
///
/// Line 1 (after comments/blank lines) declares the degree; every further
/// nonempty line is one generator in disjoint-cycle notation over 0-based
/// points. `()` denotes the identity.
pub fn parse_group_text(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Perm> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match degree {
            None => {
                let mut parts = content.split_whitespace();
                match (parts.next(), parts.next(), parts.next()) {
                    (Some("degree"), Some(n), None) => {
                        let n: usize = n.parse().map_err(|_| Error::FileFormat {
                            line,
                            message: format!("bad degree value `{n}`"),
                        })?;
                        if n == 0 {
                            return Err(Error::FileFormat {
                                line,
                                message: "degree must be positive".into(),
                            });
                        }
                        degree = Some(n);
                    }
                    _ => {
                        return Err(Error::FileFormat {
                            line,
                            message: format!("expected `degree N`, found `{content}`"),
                        })
                    }
                }
            }
            Some(n) => {
                let p = parse_cycles(n, content).map_err(|e| Error::FileFormat {
                    line,
                    message: e.to_string(),
                })?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or(Error::FileFormat {
        line: 1,
        message: "missing `degree N` line".into(),
    })?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok((degree, gens))
}

pub fn load_group(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    let (_, gens) = parse_group_text(&text)?;
    Ok(PermGroup::generate(gens, DEFAULT_CAP)?
        .with_label(format!("from_file({})", path.display())))
}

/// Writes the format read by [`load_group`]; generators are saved in the
/// order they are held by the group.
pub fn save_group(g: &PermGroup, path: &Path) -> Result<()> {
    let mut out = format!("degree {}\n", g.degree());
    for gen in g.generators() {
        out.push_str(&gen.cycle_string());
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;
    use std::collections::BTreeMap;

    fn build_spec(s: &str) -> PermGroup {
        build(&s.parse::<GroupDescriptor>().unwrap()).unwrap()
    }

    fn order_profile(g: &PermGroup) -> BTreeMap<u64, usize> {
        let mut profile = BTreeMap::new();
        for e in g.elements() {
            *profile.entry(e.order()).or_insert(0) += 1;
        }
        profile
    }

    #[test]
    fn closed_form_orders() {
        for (spec, order) in [
            ("symmetric(1)", 1),
            ("symmetric(2)", 2),
            ("symmetric(4)", 24),
            ("alternating(3)", 3),
            ("alternating(4)", 12),
            ("alternating(5)", 60),
            ("cyclic(12)", 12),
            ("dihedral(1)", 2),
            ("dihedral(2)", 4),
            ("dihedral(4)", 8),
            ("dihedral(6)", 12),
            ("quaternion8", 8),
            ("elementary_abelian(2, 3)", 8),
            ("elementary_abelian(3, 2)", 9),
            ("direct_product(symmetric(3), cyclic(4))", 24),
            ("direct_product(alternating(4), cyclic(2))", 24),
            ("wreath_c2(symmetric(3))", 72),
            ("psl2_prime(5)", 60),
            ("psl2_prime(7)", 168),
        ] {
            let g = build_spec(spec);
            assert_eq!(g.order(), order, "{spec}");
            assert_eq!(g.label(), spec);
        }
    }

    #[test]
    fn descriptor_round_trip() {
        for spec in [
            "symmetric(3)",
            "wreath_c2(symmetric(3))",
            "direct_product(direct_product(cyclic(2), cyclic(3)), symmetric(4))",
            "elementary_abelian(5, 2)",
            "from_file(groups/a5.grp)",
        ] {
            let d: GroupDescriptor = spec.parse().unwrap();
            assert_eq!(d.to_string(), spec);
        }
        assert!("symmetric(3) junk".parse::<GroupDescriptor>().is_err());
        assert!("frobnicate(3)".parse::<GroupDescriptor>().is_err());
        assert!("symmetric".parse::<GroupDescriptor>().is_err());
    }

    #[test]
    fn unsupported_parameters() {
        assert!(build(&GroupDescriptor::Psl2Prime(4)).is_err());
        assert!(build(&GroupDescriptor::Psl2Prime(17)).is_err());
        assert!(build(&GroupDescriptor::ElementaryAbelian { p: 4, k: 2 }).is_err());
        assert!(build(&GroupDescriptor::ElementaryAbelian { p: 2, k: 0 }).is_err());
        assert!(build(&GroupDescriptor::Dihedral(0)).is_err());
    }

    #[test]
    fn alternating_groups_are_even() {
        for n in [3, 4, 5, 6] {
            let g = build(&GroupDescriptor::Alternating(n)).unwrap();
            assert!(g.elements().iter().all(|e| e.sign() == 1), "A{n}");
        }
    }

    #[test]
    fn quaternion_group_shape() {
        let g = build(&GroupDescriptor::Quaternion8).unwrap();
        assert_eq!(g.degree(), 8);
        let profile = order_profile(&g);
        // 1, the unique involution -1, and six elements of order 4
        assert_eq!(profile.get(&1), Some(&1));
        assert_eq!(profile.get(&2), Some(&1));
        assert_eq!(profile.get(&4), Some(&6));
        assert_eq!(structure::nilpotency_class(&g), Some(2));
    }

    #[test]
    fn wreath_c2_of_s3() {
        let g = build_spec("wreath_c2(symmetric(3))");
        assert_eq!(g.degree(), 6);
        assert_eq!(g.order(), 72);
        // the swap generator exchanges the blocks
        let block_preserving = g
            .elements()
            .iter()
            .filter(|e| (0..3).all(|i| e.apply(i) < 3))
            .count();
        assert_eq!(block_preserving, 36);
    }

    #[test]
    fn psl2_7_is_simple() {
        let g = build_spec("psl2_prime(7)");
        assert_eq!(g.order(), 168);
        assert!(structure::is_simple(&g));
        assert!(structure::soluble_radical(&g).is_trivial());
    }

    #[test]
    fn psl2_5_matches_a5_profile() {
        let psl = build_spec("psl2_prime(5)");
        let a5 = build_spec("alternating(5)");
        assert_eq!(psl.order(), a5.order());
        assert!(structure::is_simple(&psl));
        assert!(structure::is_simple(&a5));
        assert_eq!(order_profile(&psl), order_profile(&a5));
    }

    #[test]
    fn direct_product_projections_recover_factors() {
        let g = build_spec("direct_product(symmetric(3), cyclic(4))");
        // projecting the element set to each block of points recovers
        // factor groups of the right orders
        let mut left: Vec<Vec<u32>> = g
            .elements()
            .iter()
            .map(|e| e.images()[..3].to_vec())
            .collect();
        left.sort_unstable();
        left.dedup();
        assert_eq!(left.len(), 6);
        let mut right: Vec<Vec<u32>> = g
            .elements()
            .iter()
            .map(|e| e.images()[3..].to_vec())
            .collect();
        right.sort_unstable();
        right.dedup();
        assert_eq!(right.len(), 4);
    }

    #[test]
    fn group_file_round_trip() {
        let dir = std::env::temp_dir().join("verba-core-test-io");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("a5.grp");
        let g = build_spec("alternating(5)");
        save_group(&g, &path).unwrap();
        let loaded = load_group(&path).unwrap();
        assert_eq!(loaded.order(), 60);
        assert_eq!(loaded.elements(), g.elements());
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn group_file_parsing() {
        let (degree, gens) = parse_group_text("# S3\ndegree 3\n(0 1)\n(0 1 2)\n").unwrap();
        assert_eq!(degree, 3);
        assert_eq!(gens.len(), 2);
        let g = PermGroup::generate(gens, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);

        // trivial group via the identity generator
        let (_, gens) = parse_group_text("degree 3\n()\n").unwrap();
        let g = PermGroup::generate(gens, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn group_file_errors_carry_line_numbers() {
        assert!(matches!(
            parse_group_text("degree 3\n"),
            Err(Error::EmptyGenerators)
        ));
        match parse_group_text("degree 3\n(0 5)\n") {
            Err(Error::FileFormat { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected file error, got {other:?}"),
        }
        match parse_group_text("order 3\n(0 1)\n") {
            Err(Error::FileFormat { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected file error, got {other:?}"),
        }
        match parse_group_text("degree 0\n(0 1)\n") {
            Err(Error::FileFormat { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected file error, got {other:?}"),
        }
    }
}
