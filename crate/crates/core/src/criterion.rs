//! Executable checks around the coprime-order nilpotency criterion: the
//! pairwise `|ab| = |a||b|` condition over w-value sets, the equivalence
//! with nilpotency of the verbal subgroup for eligible simple commutator
//! words, and instance checks for the supporting lemmas.

use serde::Serialize;

use crate::arith;
use crate::catalog::{self, GroupDescriptor};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::structure;
use crate::words::{self, Word};

/// A violating pair for the coprime-order condition: `a, b` are w-values of
/// coprime orders with `|ab| ≠ |a||b|`.
#[derive(Clone, Debug)]
pub struct CoprimeWitness {
    pub a: Perm,
    pub b: Perm,
    pub order_a: u64,
    pub order_b: u64,
    pub order_ab: u64,
}

/// Outcome of the coprime-order scan over ordered pairs of w-values.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub holds: bool,
    pub witness: Option<CoprimeWitness>,
}

/// Serializable form of a witness, with elements in cycle notation so the
/// pair can be re-checked by hand.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessReport {
    pub a: String,
    pub b: String,
    pub order_a: u64,
    pub order_b: u64,
    pub order_ab: u64,
}

/// Combined report for one (group, word) instance: the coprime-order
/// condition, the verbal subgroup side, and the equivalence flag.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub group: String,
    pub word: String,
    /// Index pattern of the simple commutator word; absent when the word
    /// is not simple.
    pub indices: Option<Vec<u32>>,
    pub eligible: bool,
    pub condition_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    pub verbal_order: u64,
    pub verbal_nilpotent: bool,
    pub equivalent: bool,
}

/// Scans all ordered pairs of w-values (equal elements included; a pair is
/// only inspected when the orders are coprime) and reports the first
/// violation in canonical order.
pub fn coprime_condition(g: &PermGroup, word: &Word, budget: u64) -> Result<CriterionReport> {
    let values = words::w_value_indices(g, word, budget)?;
    Ok(coprime_scan(g, &values))
}

fn coprime_scan(g: &PermGroup, values: &[u32]) -> CriterionReport {
    for &a in values {
        let order_a = g.order_of(a);
        for &b in values {
            let order_b = g.order_of(b);
            if arith::gcd(order_a, order_b) != 1 {
                continue;
            }
            let order_ab = g.order_of(g.mul_idx(a, b));
            if order_ab != order_a * order_b {
                return CriterionReport {
                    holds: false,
                    witness: Some(CoprimeWitness {
                        a: g.element(a).clone(),
                        b: g.element(b).clone(),
                        order_a,
                        order_b,
                        order_ab,
                    }),
                };
            }
        }
    }
    CriterionReport {
        holds: true,
        witness: None,
    }
}

/// Builds the full instance report without requiring the word to be
/// simple; used for the counterexample fixtures and batch scans.
pub fn instance_report(g: &PermGroup, word: &Word, budget: u64) -> Result<TheoremReport> {
    let spec = word.classify();
    let values = words::w_value_indices(g, word, budget)?;
    let condition = coprime_scan(g, &values);
    let verbal = g.subgroup_from_indices(&values);
    assert!(
        g.is_normal(&verbal).expect("own subgroup"),
        "verbal subgroup must be normal"
    );
    let verbal_nilpotent = structure::is_nilpotent(&verbal.to_group("verbal"));
    let equivalent = condition.holds == verbal_nilpotent;
    Ok(TheoremReport {
        group: g.label().to_string(),
        word: word.text(),
        indices: spec.as_ref().map(|s| s.indices.clone()),
        eligible: spec.map(|s| s.eligible).unwrap_or(false),
        condition_holds: condition.holds,
        witness: condition.witness.map(|w| WitnessReport {
            a: w.a.cycle_string(),
            b: w.b.cycle_string(),
            order_a: w.order_a,
            order_b: w.order_b,
            order_ab: w.order_ab,
        }),
        verbal_order: verbal.order(),
        verbal_nilpotent,
        equivalent,
    })
}

/// The criterion check proper: the word must classify as a simple
/// commutator word (use [`instance_report`] or [`counterexample_runner`]
/// for the §-style non-simple fixtures).
pub fn theorem_check(g: &PermGroup, word: &Word, budget: u64) -> Result<TheoremReport> {
    if word.classify().is_none() {
        return Err(Error::NotSimpleWord);
    }
    instance_report(g, word, budget)
}

/// The two fixed counterexample fixtures for non-simple words:
/// `[x,y]^3` on the order-72 wreath group and `[x, y^10 * 3]` on the
/// alternating group of degree 5. For both, the coprime-order condition
/// holds while the verbal subgroup is not nilpotent, so `equivalent` is
/// false and the word is flagged ineligible.
pub fn counterexample_runner() -> Result<Vec<TheoremReport>> {
    let fixtures = [
        ("wreath_c2(symmetric(3))", "[x,y]^3"),
        ("alternating(5)", "[x, y^10 * 3]"),
    ];
    let mut reports = Vec::new();
    for (group_spec, word_text) in fixtures {
        let descriptor: GroupDescriptor = group_spec.parse()?;
        let g = catalog::build(&descriptor)?;
        let word = Word::parse(word_text)?;
        reports.push(instance_report(&g, &word, words::DEFAULT_BUDGET)?);
    }
    Ok(reports)
}

fn require_eligible(word: &Word) -> Result<()> {
    match word.classify() {
        Some(spec) if spec.eligible => Ok(()),
        Some(_) => Err(Error::Precondition(
            "word must be eligible: the first variable may not recur".into(),
        )),
        None => Err(Error::NotSimpleWord),
    }
}

/// Checks the implication "coprime-order condition ⇒ soluble" on one
/// group. Returns `Ok(true)` when the implication is witnessed
/// substantively (condition holds and the group is soluble), `Ok(false)`
/// when it is vacuous (the condition fails), and an error if the
/// implication itself is falsified.
pub fn solubility_consequence(g: &PermGroup, word: &Word, budget: u64) -> Result<bool> {
    require_eligible(word)?;
    let condition = coprime_condition(g, word, budget)?;
    if !condition.holds {
        return Ok(false);
    }
    if structure::is_soluble(g) {
        Ok(true)
    } else {
        Err(Error::Falsified(format!(
            "coprime-order condition holds for {} on the insoluble group {}",
            word.text(),
            g.label()
        )))
    }
}

/// For every prime `p` dividing `|G|`, every Sylow `p`-subgroup `P` (and
/// its subgroups generated by at most two elements), and every w-value `x`
/// of `p'`-order normalizing `P`: checks `[P, x] = 1`. Preconditions: the
/// word is eligible and the coprime-order condition holds.
pub fn lemma_bbb_check(g: &PermGroup, word: &Word, budget: u64) -> Result<bool> {
    require_eligible(word)?;
    let values = words::w_value_indices(g, word, budget)?;
    if !coprime_scan(g, &values).holds {
        return Err(Error::Precondition(
            "coprime-order condition must hold for this check".into(),
        ));
    }
    for p in arith::prime_divisors(g.order()) {
        let sylow = structure::sylow_subgroup(g, p);
        let mut subs = two_generated_subgroups(g, sylow.member_indices());
        subs.push(sylow);
        for sub in &subs {
            for &x in &values {
                if arith::gcd(g.order_of(x), p) != 1 {
                    continue;
                }
                let normalizes = sub
                    .member_indices()
                    .iter()
                    .all(|&m| sub.contains_idx(g.conj_idx(m, x)));
                if !normalizes {
                    continue;
                }
                let bracket =
                    structure::iterated_commutator_set(sub, g.element(x), 1)?;
                if !bracket.is_trivial() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn two_generated_subgroups(g: &PermGroup, members: &[u32]) -> Vec<crate::group::Subgroup> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &a in members {
        if a == 0 {
            continue;
        }
        for &b in members {
            if b < a {
                continue;
            }
            let sub = if a == b {
                g.subgroup_from_indices(&[a])
            } else {
                g.subgroup_from_indices(&[a, b])
            };
            if seen.insert(sub.member_indices().to_vec()) {
                out.push(sub);
            }
        }
    }
    out
}

/// For a perfect group and a prime `q` dividing `|G|`: the w-values whose
/// order is a power of a single prime `p ≠ q` must generate the whole
/// group.
pub fn lemma_generators_check(g: &PermGroup, word: &Word, q: u64, budget: u64) -> Result<bool> {
    require_eligible(word)?;
    if !arith::is_prime(q) || g.order() % q != 0 {
        return Err(Error::Precondition(format!(
            "q = {q} must be a prime dividing the group order"
        )));
    }
    if !structure::derived_subgroup(g).is_whole_group() {
        return Err(Error::NotPerfect);
    }
    let values = words::w_value_indices(g, word, budget)?;
    let seeds: Vec<u32> = values
        .into_iter()
        .filter(|&x| matches!(arith::prime_power_base(g.order_of(x)), Some(p) if p != q))
        .collect();
    Ok(g.subgroup_from_indices(&seeds).is_whole_group())
}

/// For an involution `x` of a non-abelian simple group: the first `h` in
/// canonical order such that `[x,h]` has odd prime order. The underlying
/// fact guarantees a witness exists; exhausting the group is reported as
/// an error.
pub fn baer_suzuki_witness(g: &PermGroup, x: &Perm) -> Result<Perm> {
    let x_idx = g.index_of(x).ok_or(Error::NotInGroup)?;
    if g.order_of(x_idx) != 2 {
        return Err(Error::Precondition("element must be an involution".into()));
    }
    if !structure::is_simple(g) || is_abelian(g) {
        return Err(Error::Precondition(
            "group must be non-abelian simple".into(),
        ));
    }
    for h in 0..g.order() as u32 {
        let order = g.order_of(g.comm_idx(x_idx, h));
        if order % 2 == 1 && arith::is_prime(order) {
            return Ok(g.element(h).clone());
        }
    }
    Err(Error::NoWitness(format!(
        "no h in {} with [x,h] of odd prime order",
        g.label()
    )))
}

fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)))
}

/// Verifies the semidirect witness `A ⋊ T` inside `g`: `A = ⟨a_gens⟩`
/// nontrivial elementary abelian 2-group, `T = ⟨t_gens⟩` of odd order
/// normalizing `A` with trivial `C_A(T)`, and `[A,T] = A`.
pub fn minimal_simple_witness(
    g: &PermGroup,
    a_gens: &[Perm],
    t_gens: &[Perm],
) -> Result<bool> {
    let a = g.subgroup_generated(a_gens)?;
    let t = g.subgroup_generated(t_gens)?;

    if a.is_trivial() {
        return Ok(false);
    }
    let elementary_abelian_2 = a.member_indices().iter().all(|&x| g.order_of(x) <= 2)
        && a.member_indices().iter().all(|&x| {
            a.member_indices()
                .iter()
                .all(|&y| g.mul_idx(x, y) == g.mul_idx(y, x))
        });
    if !elementary_abelian_2 {
        return Ok(false);
    }
    if t.order() % 2 == 0 {
        return Ok(false);
    }
    let normalizes = t
        .member_indices()
        .iter()
        .all(|&x| a.member_indices().iter().all(|&m| a.contains_idx(g.conj_idx(m, x))));
    if !normalizes {
        return Ok(false);
    }
    let fixed_points = a
        .member_indices()
        .iter()
        .filter(|&&m| t.member_indices().iter().all(|&x| g.comm_idx(m, x) == 0))
        .count();
    if fixed_points != 1 {
        return Ok(false); // only the identity may centralize T
    }
    let bracket = structure::commutator_subgroup(g, &a, &t);
    Ok(bracket.same_members(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use crate::perm::parse_cycles;
    use crate::words::DEFAULT_BUDGET;

    fn p(degree: usize, s: &str) -> Perm {
        parse_cycles(degree, s).unwrap()
    }

    fn build(spec: &str) -> PermGroup {
        catalog::build(&spec.parse().unwrap()).unwrap()
    }

    fn word(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    #[test]
    fn condition_holds_on_nilpotent_group() {
        let g = build("dihedral(4)");
        let report = coprime_condition(&g, &word("[x,y]"), DEFAULT_BUDGET).unwrap();
        assert!(report.holds);
        assert!(report.witness.is_none());
    }

    #[test]
    fn condition_fails_on_a5_with_valid_witness() {
        let g = build("alternating(5)");
        let report = coprime_condition(&g, &word("[x,y]"), DEFAULT_BUDGET).unwrap();
        assert!(!report.holds);
        let w = report.witness.expect("witness present iff fails");
        assert_eq!(arith::gcd(w.order_a, w.order_b), 1);
        assert_ne!(w.order_ab, w.order_a * w.order_b);
        // re-verify the witness from scratch
        assert_eq!(w.a.order(), w.order_a);
        assert_eq!(w.b.order(), w.order_b);
        assert_eq!(w.a.compose(&w.b).order(), w.order_ab);
    }

    #[test]
    fn theorem_holds_on_s3_and_s4() {
        let g = build("symmetric(3)");
        let r = theorem_check(&g, &word("[x,y]"), DEFAULT_BUDGET).unwrap();
        assert!(r.condition_holds);
        assert!(r.verbal_nilpotent);
        assert_eq!(r.verbal_order, 3);
        assert!(r.equivalent);
        assert!(r.eligible);

        let g = build("symmetric(4)");
        let r = theorem_check(&g, &word("[x,y]"), DEFAULT_BUDGET).unwrap();
        assert!(!r.condition_holds);
        assert!(!r.verbal_nilpotent);
        assert_eq!(r.verbal_order, 12);
        assert!(r.equivalent);
        let w = r.witness.unwrap();
        assert_ne!(w.order_ab, w.order_a * w.order_b);
    }

    #[test]
    fn theorem_check_rejects_non_simple_words() {
        let g = build("symmetric(3)");
        assert!(matches!(
            theorem_check(&g, &word("[x,y]^3"), DEFAULT_BUDGET),
            Err(Error::NotSimpleWord)
        ));
    }

    #[test]
    fn counterexamples_have_necessary_hypothesis() {
        let reports = counterexample_runner().unwrap();
        assert_eq!(reports.len(), 2);

        let ex1 = &reports[0];
        assert_eq!(ex1.group, "wreath_c2(symmetric(3))");
        assert!(ex1.condition_holds);
        assert!(!ex1.verbal_nilpotent);
        assert!(!ex1.equivalent);
        assert!(!ex1.eligible);
        assert!(ex1.indices.is_none());
        assert_eq!(ex1.verbal_order, 36);

        let ex2 = &reports[1];
        assert_eq!(ex2.group, "alternating(5)");
        assert!(ex2.condition_holds);
        assert!(!ex2.verbal_nilpotent);
        assert!(!ex2.equivalent);
        assert!(!ex2.eligible);
        assert_eq!(ex2.verbal_order, 60);
    }

    #[test]
    fn sanity_plain_commutator_is_equivalent_on_fixture_groups() {
        for spec in ["wreath_c2(symmetric(3))", "alternating(5)"] {
            let g = build(spec);
            let r = theorem_check(&g, &word("[x,y]"), DEFAULT_BUDGET).unwrap();
            assert!(r.equivalent, "{spec}");
        }
    }

    #[test]
    fn solubility_consequences() {
        let s4 = build("symmetric(4)");
        assert_eq!(
            solubility_consequence(&s4, &word("[x,y]"), DEFAULT_BUDGET).unwrap(),
            true
        );
        let a5 = build("alternating(5)");
        assert_eq!(
            solubility_consequence(&a5, &word("[x,y]"), DEFAULT_BUDGET).unwrap(),
            false
        );
        assert!(matches!(
            solubility_consequence(&a5, &word("[x,y,x]"), DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lemma_bbb_instances() {
        let s3 = build("symmetric(3)");
        assert!(lemma_bbb_check(&s3, &word("[x,y]"), DEFAULT_BUDGET).unwrap());
        let d8 = build("dihedral(4)");
        assert!(lemma_bbb_check(&d8, &word("[x,y]"), DEFAULT_BUDGET).unwrap());
        // precondition: the condition must hold
        let a5 = build("alternating(5)");
        assert!(matches!(
            lemma_bbb_check(&a5, &word("[x,y]"), DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
        // precondition: the word must be eligible
        let wreath = build("wreath_c2(symmetric(3))");
        assert!(matches!(
            lemma_bbb_check(&wreath, &word("[x,y]^3"), DEFAULT_BUDGET),
            Err(Error::NotSimpleWord)
        ));
    }

    #[test]
    fn lemma_generators_on_a5() {
        let a5 = build("alternating(5)");
        for q in [2, 3, 5] {
            assert!(
                lemma_generators_check(&a5, &word("[x,y]"), q, DEFAULT_BUDGET).unwrap(),
                "q = {q}"
            );
        }
        assert!(lemma_generators_check(&a5, &word("[x,y,y]"), 3, DEFAULT_BUDGET).unwrap());
        let s4 = build("symmetric(4)");
        assert!(matches!(
            lemma_generators_check(&s4, &word("[x,y]"), 2, DEFAULT_BUDGET),
            Err(Error::NotPerfect)
        ));
        assert!(matches!(
            lemma_generators_check(&a5, &word("[x,y]"), 7, DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn baer_suzuki_on_a5() {
        let a5 = build("alternating(5)");
        let x = p(5, "(0 1)(2 3)");
        let h = baer_suzuki_witness(&a5, &x).unwrap();
        let order = crate::perm::commutator(&x, &h).order();
        assert!(order % 2 == 1 && arith::is_prime(order), "order {order}");
        // not simple -> rejected
        let s3 = build("symmetric(3)");
        assert!(matches!(
            baer_suzuki_witness(&s3, &p(3, "(0 1)")),
            Err(Error::Precondition(_))
        ));
        // not an involution -> rejected
        assert!(matches!(
            baer_suzuki_witness(&a5, &p(5, "(0 1 2)")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn minimal_simple_witness_on_a5() {
        let a5 = build("alternating(5)");
        let a_gens = [p(5, "(0 1)(2 3)"), p(5, "(0 2)(1 3)")];
        let t_gens = [p(5, "(0 1 2)")];
        assert!(minimal_simple_witness(&a5, &a_gens, &t_gens).unwrap());
        // a 5-cycle does not normalize the Klein subgroup
        let t_bad = [p(5, "(0 1 2 3 4)")];
        assert!(!minimal_simple_witness(&a5, &a_gens, &t_bad).unwrap());
        // trivial A is rejected by the explicit nontriviality requirement
        let a_trivial = [Perm::identity(5)];
        assert!(!minimal_simple_witness(&a5, &a_trivial, &t_gens).unwrap());
    }
}
