//! The group-word sublanguage: parsing, classification, evaluation,
//! exhaustive w-value enumeration and verbal subgroups.
//!
//! A word is evaluated under the crate-wide left-acts-first convention;
//! `Commutator` nodes are left-normed: `[u1,…,uk] = [...[[u1,u2],u3],…,uk]`.

mod parse;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::{commutator, Perm};

/// Default ceiling on `|G|^v` assignment enumerations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Abstract syntax of a group word. Variable indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordExpr {
    Var(u32),
    Power(Box<WordExpr>, i64),
    Product(Vec<WordExpr>),
    Commutator(Vec<WordExpr>),
}

/// A parsed word: the normalized AST plus the printable variable names
/// (`names[i]` names variable `i + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    expr: WordExpr,
    names: Vec<String>,
}

/// The index sequence `(i1,…,ik)` of a simple commutator word
/// `[x_{i1},…,x_{ik}]`, renumbered canonically by first occurrence, plus
/// the eligibility flag: `eligible` iff the first index never recurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCommutatorSpec {
    pub indices: Vec<u32>,
    pub eligible: bool,
}

impl Word {
    /// Parses the word grammar; see [`parse::parse_word`] for the syntax.
    pub fn parse(text: &str) -> Result<Word> {
        parse::parse_word(text)
    }

    pub fn new(expr: WordExpr, names: Vec<String>) -> Word {
        Word {
            expr: normalize(expr),
            names,
        }
    }

    pub fn expr(&self) -> &WordExpr {
        &self.expr
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    /// Printable name of variable `idx` (1-based).
    pub fn var_name(&self, idx: u32) -> String {
        self.names
            .get(idx as usize - 1)
            .cloned()
            .unwrap_or_else(|| format!("x{idx}"))
    }

    /// Sorted distinct variable indices of the normalized word.
    pub fn distinct_vars(&self) -> Vec<u32> {
        distinct_vars(&self.expr)
    }

    pub fn classify(&self) -> Option<SimpleCommutatorSpec> {
        classify(&self.expr)
    }

    /// Canonical text; reparsing it classifies identically.
    pub fn text(&self) -> String {
        self.to_string()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_word(f, &self.expr, &self.names)
    }
}

/// The n-Engel word `[x, y, …, y]` with `n` trailing `y`s.
pub fn engel_word(n: u32) -> Word {
    assert!(n >= 1, "Engel words need n >= 1");
    let mut children = vec![WordExpr::Var(1)];
    children.extend(std::iter::repeat_n(WordExpr::Var(2), n as usize));
    Word::new(
        WordExpr::Commutator(children),
        vec!["x".to_string(), "y".to_string()],
    )
}

/// Normalizes an AST: repetition sugar is already expanded by the parser;
/// here zero powers erase, unit powers collapse, nested products flatten,
/// and a commutator whose first entry is itself a commutator splices into
/// the left-normed sequence.
pub(crate) fn normalize(expr: WordExpr) -> WordExpr {
    match expr {
        WordExpr::Var(i) => WordExpr::Var(i),
        WordExpr::Power(inner, k) => {
            let inner = normalize(*inner);
            if k == 0 || matches!(&inner, WordExpr::Product(ch) if ch.is_empty()) {
                return WordExpr::Product(Vec::new());
            }
            if k == 1 {
                return inner;
            }
            if let WordExpr::Power(base, k2) = inner {
                if let Some(merged) = k.checked_mul(k2) {
                    return WordExpr::Power(base, merged);
                }
                return WordExpr::Power(Box::new(WordExpr::Power(base, k2)), k);
            }
            WordExpr::Power(Box::new(inner), k)
        }
        WordExpr::Product(children) => {
            let mut flat = Vec::with_capacity(children.len());
            for c in children {
                match normalize(c) {
                    WordExpr::Product(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            if flat.len() == 1 {
                flat.pop().unwrap()
            } else {
                WordExpr::Product(flat)
            }
        }
        WordExpr::Commutator(children) => {
            let mut children: Vec<WordExpr> = children.into_iter().map(normalize).collect();
            if let Some(WordExpr::Commutator(_)) = children.first() {
                // [[u1,…,uj], v, …] is the left-normed [u1,…,uj,v,…]
                let WordExpr::Commutator(inner) = children.remove(0) else {
                    unreachable!()
                };
                let mut spliced = inner;
                spliced.extend(children);
                children = spliced;
            }
            WordExpr::Commutator(children)
        }
    }
}

/// Sorted distinct variable indices appearing in the expression.
pub fn distinct_vars(expr: &WordExpr) -> Vec<u32> {
    fn walk(e: &WordExpr, out: &mut Vec<u32>) {
        match e {
            WordExpr::Var(i) => out.push(*i),
            WordExpr::Power(inner, _) => walk(inner, out),
            WordExpr::Product(ch) | WordExpr::Commutator(ch) => {
                for c in ch {
                    walk(c, out);
                }
            }
        }
    }
    let mut vars = Vec::new();
    walk(expr, &mut vars);
    vars.sort_unstable();
    vars.dedup();
    vars
}

/// Recognizes a left-normed commutator of plain variables. Returns the
/// index pattern (canonically renumbered by first occurrence) when the word
/// is simple (`k ≥ 2`, first two indices distinct); `None` otherwise.
pub fn classify(expr: &WordExpr) -> Option<SimpleCommutatorSpec> {
    let WordExpr::Commutator(children) = expr else {
        return None;
    };
    if children.len() < 2 {
        return None;
    }
    let mut raw = Vec::with_capacity(children.len());
    for c in children {
        match c {
            WordExpr::Var(i) => raw.push(*i),
            _ => return None,
        }
    }
    let mut renumber: HashMap<u32, u32> = HashMap::new();
    let mut indices = Vec::with_capacity(raw.len());
    for i in raw {
        let next = renumber.len() as u32 + 1;
        indices.push(*renumber.entry(i).or_insert(next));
    }
    if indices[0] == indices[1] {
        return None;
    }
    let eligible = !indices[1..].contains(&indices[0]);
    Some(SimpleCommutatorSpec { indices, eligible })
}

/// Evaluates a word at an assignment. `values[i]` is the value of variable
/// `i + 1`; every variable of the (normalized) word must be assigned and
/// every used value must lie in `g`.
pub fn evaluate(g: &PermGroup, word: &Word, values: &[Perm]) -> Result<Perm> {
    for v in word.distinct_vars() {
        let value = values
            .get(v as usize - 1)
            .ok_or_else(|| Error::UnassignedVariable {
                name: word.var_name(v),
            })?;
        if !g.contains(value) {
            return Err(Error::NotInGroup);
        }
    }
    Ok(eval_expr(&word.expr, values, g.degree()))
}

fn eval_expr(expr: &WordExpr, values: &[Perm], degree: usize) -> Perm {
    match expr {
        WordExpr::Var(i) => values[*i as usize - 1].clone(),
        WordExpr::Power(inner, k) => eval_expr(inner, values, degree).pow(*k),
        WordExpr::Product(children) => children.iter().fold(Perm::identity(degree), |acc, c| {
            acc.compose(&eval_expr(c, values, degree))
        }),
        WordExpr::Commutator(children) => {
            let mut acc = eval_expr(&children[0], values, degree);
            for c in &children[1..] {
                acc = commutator(&acc, &eval_expr(c, values, degree));
            }
            acc
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration over assignments.
//
// The word is lowered once into a flat DAG of index-space operations, each
// tagged with the number of leading variables it depends on. During the
// nested enumeration loops an operation is re-evaluated only when the
// deepest variable it reads changes, so shared prefixes of the assignment
// space are computed once.
// ---------------------------------------------------------------------------

enum PlanOp {
    Identity,
    Slot(usize),
    Inv(u32),
    Mul(u32, u32),
    Pow(u32, i64),
}

struct EvalPlan {
    ops: Vec<PlanOp>,
    root: u32,
    /// `schedule[d]` lists ops ready once the first `d` variables are bound.
    schedule: Vec<Vec<u32>>,
    var_count: usize,
}

struct PlanBuilder {
    slot_of: HashMap<u32, usize>,
    ops: Vec<PlanOp>,
    depths: Vec<usize>,
}

impl PlanBuilder {
    fn push(&mut self, op: PlanOp, depth: usize) -> (u32, usize) {
        self.ops.push(op);
        self.depths.push(depth);
        ((self.ops.len() - 1) as u32, depth)
    }

    fn lower(&mut self, e: &WordExpr) -> (u32, usize) {
        match e {
            WordExpr::Var(i) => {
                let s = self.slot_of[i];
                self.push(PlanOp::Slot(s), s + 1)
            }
            WordExpr::Power(inner, k) => {
                let (c, d) = self.lower(inner);
                self.push(PlanOp::Pow(c, *k), d)
            }
            WordExpr::Product(children) => {
                if children.is_empty() {
                    return self.push(PlanOp::Identity, 0);
                }
                let (mut acc, mut d) = self.lower(&children[0]);
                for c in &children[1..] {
                    let (rhs, dr) = self.lower(c);
                    d = d.max(dr);
                    (acc, _) = self.push(PlanOp::Mul(acc, rhs), d);
                }
                (acc, d)
            }
            WordExpr::Commutator(children) => {
                let (mut acc, mut d) = self.lower(&children[0]);
                for c in &children[1..] {
                    let (rhs, dr) = self.lower(c);
                    d = d.max(dr);
                    let (ia, _) = self.push(PlanOp::Inv(acc), d);
                    let (ib, _) = self.push(PlanOp::Inv(rhs), d);
                    let (m1, _) = self.push(PlanOp::Mul(ia, ib), d);
                    let (m2, _) = self.push(PlanOp::Mul(m1, acc), d);
                    (acc, _) = self.push(PlanOp::Mul(m2, rhs), d);
                }
                (acc, d)
            }
        }
    }
}

impl EvalPlan {
    fn build(expr: &WordExpr) -> EvalPlan {
        let vars = distinct_vars(expr);
        let mut builder = PlanBuilder {
            slot_of: vars.iter().enumerate().map(|(s, &v)| (v, s)).collect(),
            ops: Vec::new(),
            depths: Vec::new(),
        };
        let (root, _) = builder.lower(expr);
        let mut schedule = vec![Vec::new(); vars.len() + 1];
        for (id, &d) in builder.depths.iter().enumerate() {
            schedule[d].push(id as u32);
        }
        EvalPlan {
            ops: builder.ops,
            root,
            schedule,
            var_count: vars.len(),
        }
    }

    #[inline]
    fn exec(&self, g: &PermGroup, depth: usize, slots: &[u32], vals: &mut [u32]) {
        for &id in &self.schedule[depth] {
            vals[id as usize] = match self.ops[id as usize] {
                PlanOp::Identity => 0,
                PlanOp::Slot(s) => slots[s],
                PlanOp::Inv(a) => g.inv_idx(vals[a as usize]),
                PlanOp::Mul(a, b) => g.mul_idx(vals[a as usize], vals[b as usize]),
                PlanOp::Pow(a, k) => g.pow_idx(vals[a as usize], k),
            };
        }
    }
}

/// Checks the enumeration budget: the exact number of assignments is
/// `|G|^v` over the `v` distinct variables.
fn check_budget(g: &PermGroup, expr: &WordExpr, budget: u64) -> Result<()> {
    let v = distinct_vars(expr).len() as u32;
    let required = (g.order() as u128)
        .checked_pow(v)
        .unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Runs `visit` on the value (as an element index) of every assignment, in
/// row-major order over canonically ordered elements. `visit` returns
/// `false` to stop early; the return value reports whether enumeration ran
/// to completion.
fn enumerate_values(
    g: &PermGroup,
    expr: &WordExpr,
    budget: u64,
    mut visit: impl FnMut(u32) -> bool,
) -> Result<bool> {
    check_budget(g, expr, budget)?;
    let plan = EvalPlan::build(expr);
    let n = g.order() as u32;
    let mut slots = vec![0u32; plan.var_count];
    let mut vals = vec![0u32; plan.ops.len()];
    plan.exec(g, 0, &slots, &mut vals);

    fn rec(
        g: &PermGroup,
        plan: &EvalPlan,
        n: u32,
        level: usize,
        slots: &mut [u32],
        vals: &mut [u32],
        visit: &mut impl FnMut(u32) -> bool,
    ) -> bool {
        if level == plan.var_count {
            return visit(vals[plan.root as usize]);
        }
        for e in 0..n {
            slots[level] = e;
            plan.exec(g, level + 1, slots, vals);
            if !rec(g, plan, n, level + 1, slots, vals, visit) {
                return false;
            }
        }
        true
    }

    Ok(rec(g, &plan, n, 0, &mut slots, &mut vals, &mut visit))
}

/// The exact w-value set `{w(g1,…,gv)}` as sorted element indices into `g`.
pub fn w_value_indices(g: &PermGroup, word: &Word, budget: u64) -> Result<Vec<u32>> {
    let mut seen = vec![false; g.order() as usize];
    enumerate_values(g, &word.expr, budget, |idx| {
        seen[idx as usize] = true;
        true
    })?;
    Ok((0..g.order() as u32)
        .filter(|&i| seen[i as usize])
        .collect())
}

/// The exact w-value set as sorted permutations.
pub fn w_values(g: &PermGroup, word: &Word, budget: u64) -> Result<Vec<Perm>> {
    Ok(w_value_indices(g, word, budget)?
        .into_iter()
        .map(|i| g.element(i).clone())
        .collect())
}

/// The verbal subgroup `w(G) = ⟨G_w⟩`. `G_w` is closed under conjugation
/// (a conjugate of a w-value is the w-value of the conjugated assignment),
/// so the result is normal; this is asserted.
pub fn verbal_subgroup(g: &PermGroup, word: &Word, budget: u64) -> Result<Subgroup> {
    let values = w_value_indices(g, word, budget)?;
    let sub = g.subgroup_from_indices(&values);
    assert!(
        g.is_normal(&sub).expect("subgroup of its own parent"),
        "verbal subgroup must be normal"
    );
    Ok(sub)
}

/// True iff every w-value is the identity.
pub fn is_law(g: &PermGroup, word: &Word, budget: u64) -> Result<bool> {
    enumerate_values(g, &word.expr, budget, |idx| idx == 0)
}

/// True iff the n-Engel word `[x, y,…,y]` is a law in `g`.
pub fn is_n_engel(g: &PermGroup, n: u32, budget: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("Engel check needs n >= 1".into()));
    }
    is_law(g, &engel_word(n), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use crate::perm::parse_cycles;

    fn p(degree: usize, s: &str) -> Perm {
        parse_cycles(degree, s).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::generate(gens.iter().map(|s| p(degree, s)).collect(), DEFAULT_CAP).unwrap()
    }

    fn s3() -> PermGroup {
        group(3, &["(0 1)", "(0 1 2)"])
    }

    #[test]
    fn classify_examples() {
        let w = Word::parse("[x,y,z,y]").unwrap();
        let spec = w.classify().unwrap();
        assert_eq!(spec.indices, vec![1, 2, 3, 2]);
        assert!(spec.eligible);

        let w = Word::parse("[x,y,x]").unwrap();
        let spec = w.classify().unwrap();
        assert_eq!(spec.indices, vec![1, 2, 1]);
        assert!(!spec.eligible);

        assert!(Word::parse("[x,y]^3").unwrap().classify().is_none());
        assert!(Word::parse("[x,x,y]").unwrap().classify().is_none());
        assert!(Word::parse("[x, y x]").unwrap().classify().is_none());
    }

    #[test]
    fn classify_flattens_left_nesting() {
        let nested = Word::parse("[[x,y],z]").unwrap();
        let flat = Word::parse("[x,y,z]").unwrap();
        assert_eq!(nested.classify(), flat.classify());
        assert_eq!(nested.expr(), flat.expr());
        // right nesting is not a simple commutator word
        assert!(Word::parse("[x,[y,z]]").unwrap().classify().is_none());
    }

    #[test]
    fn classify_is_pattern_canonical() {
        let a = Word::parse("[x3,x5,x3]").unwrap();
        assert_eq!(a.classify().unwrap().indices, vec![1, 2, 1]);
    }

    #[test]
    fn evaluate_identity_assignment() {
        let g = s3();
        let w = Word::parse("[x, y, y]").unwrap();
        let id = Perm::identity(3);
        let v = evaluate(&g, &w, &[id.clone(), id]).unwrap();
        assert!(v.is_identity());
    }

    #[test]
    fn evaluate_commuting_assignment() {
        let g = s3();
        let w = Word::parse("[x,y]").unwrap();
        let r = p(3, "(0 1 2)");
        let v = evaluate(&g, &w, &[r.clone(), r.compose(&r)]).unwrap();
        assert!(v.is_identity());
    }

    #[test]
    fn evaluate_matches_direct_computation() {
        let g = s3();
        let w = Word::parse("[x,y]").unwrap();
        let a = p(3, "(0 1 2)");
        let b = p(3, "(0 1)");
        let v = evaluate(&g, &w, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(v, commutator(&a, &b));
    }

    #[test]
    fn evaluate_errors() {
        let g = s3();
        let w = Word::parse("[x,y]").unwrap();
        assert!(matches!(
            evaluate(&g, &w, &[p(3, "(0 1)")]),
            Err(Error::UnassignedVariable { .. })
        ));
        assert!(matches!(
            evaluate(&g, &w, &[p(4, "(0 1)"), p(4, "(2 3)")]),
            Err(Error::NotInGroup)
        ));
    }

    #[test]
    fn w_values_of_commutator_word_in_abelian_group() {
        let g = group(4, &["(0 1 2 3)"]);
        let w = Word::parse("[x,y]").unwrap();
        let vals = w_value_indices(&g, &w, DEFAULT_BUDGET).unwrap();
        assert_eq!(vals, vec![0]);
        assert!(is_law(&g, &w, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn w_values_of_s3_commutator() {
        // Commutator values of S3: the identity and both 3-cycles.
        let g = s3();
        let w = Word::parse("[x,y]").unwrap();
        let vals = w_values(&g, &w, DEFAULT_BUDGET).unwrap();
        assert_eq!(vals.len(), 3);
        assert!(vals.iter().all(|v| v.order() == 1 || v.order() == 3));
    }

    #[test]
    fn verbal_subgroup_is_derived_for_commutator_word() {
        let g = s3();
        let w = Word::parse("[x,y]").unwrap();
        let v = verbal_subgroup(&g, &w, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.order(), 3);
    }

    #[test]
    fn budget_is_enforced_with_exact_requirement() {
        let g = s3();
        let w = Word::parse("[x,y,z]").unwrap();
        match w_value_indices(&g, &w, 100) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, 216);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        // repeated variables do not inflate the requirement
        let w = Word::parse("[x,y,y,y]").unwrap();
        assert!(w_value_indices(&g, &w, 36).is_ok());
    }

    #[test]
    fn engel_words_and_laws() {
        let q8_like = group(4, &["(0 1 2 3)"]); // cyclic: every commutator word is a law
        assert!(is_n_engel(&q8_like, 2, DEFAULT_BUDGET).unwrap());
        let g = s3();
        assert!(!is_n_engel(&g, 2, DEFAULT_BUDGET).unwrap());
        assert_eq!(engel_word(3).text(), "[x, y, y, y]");
        assert!(is_n_engel(&g, 0, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn enumeration_agrees_with_pointwise_evaluation() {
        let g = s3();
        let w = Word::parse("[x, y^2, y]").unwrap();
        let vals = w_value_indices(&g, &w, DEFAULT_BUDGET).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let v = evaluate(&g, &w, &[a.clone(), b.clone()]).unwrap();
                let idx = g.index_of(&v).unwrap();
                assert!(vals.binary_search(&idx).is_ok());
            }
        }
    }
}
