//! Budgeted shortest decompositions into reduced almost-palindromes.
//!
//! The generating set is every `reduce(p)` for an m-almost-palindrome `p` of
//! at most `gen_len` letters. Lengths are found by breadth-first search over
//! the Cayley graph of that set. With `max_c >= 4` the search meets in the
//! middle: a forward ball from the identity (shared across queries) and a
//! backward ball from the query.
//!
//! Certificates are the lexicographically least factor sequence of minimal
//! length, comparing factors in shortlex order. The forward levels are kept
//! in the order of their least prefixes; backward suffixes are chosen
//! greedily against the backward distances.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{lower_bound_reduced, OracleError};
use crate::almost_pal::{enumerate_aps, is_m_almost_palindrome, ApConfig};
use crate::words::{reduce, ReducedWord, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthBudget {
    /// Longest almost-palindrome (in letters) admitted as a generator.
    pub gen_len: usize,
    /// Most factors searched.
    pub max_c: usize,
    /// Most group elements held across both balls.
    pub ball_cap: usize,
}

impl Default for WidthBudget {
    fn default() -> Self {
        WidthBudget {
            gen_len: 4,
            max_c: 3,
            ball_cap: 2_000_000,
        }
    }
}

/// The budgeted generating set, sorted in shortlex order. Each element keeps
/// the shortest, then lexicographically least, almost-palindrome reducing
/// to it.
#[derive(Debug, Clone)]
pub struct ApGenerators {
    m: usize,
    rank: u32,
    gen_len: usize,
    elements: Vec<ReducedWord>,
    representatives: Vec<Word>,
}

impl ApGenerators {
    pub fn elements(&self) -> &[ReducedWord] {
        &self.elements
    }

    /// An m-almost-palindrome reducing to `elements()[i]`.
    pub fn representative(&self, i: usize) -> &Word {
        &self.representatives[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &ReducedWord) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn gen_len(&self) -> usize {
        self.gen_len
    }
}

/// Reductions of all m-almost-palindromes of `1..=gen_len` letters, minus the
/// identity, closed under inversion.
pub fn ap_generators(m: usize, rank: u32, gen_len: usize) -> Result<ApGenerators, OracleError> {
    let cfg = ApConfig::new(rank, m, gen_len)?;
    enumerate_aps(&cfg, gen_len)?;
    let mut found: BTreeMap<ReducedWord, Word> = BTreeMap::new();
    for len in 1..=gen_len {
        for p in enumerate_aps(&cfg, len)? {
            let g = reduce(&p);
            if !g.is_identity() {
                found.entry(g).or_insert(p);
            }
        }
    }
    // The inverse of an m-almost-palindrome is one too, so this adds nothing
    // in practice; it pins the closure the search relies on.
    let missing: Vec<(ReducedWord, Word)> = found
        .iter()
        .map(|(g, p)| (g.inverse(), p.invert()))
        .filter(|(g, _)| !found.contains_key(g))
        .collect();
    debug_assert!(
        missing.is_empty(),
        "generating set not closed under inverses"
    );
    found.extend(missing);

    let (elements, representatives) = found.into_iter().unzip();
    Ok(ApGenerators {
        m,
        rank,
        gen_len,
        elements,
        representatives,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetLimit {
    /// No decomposition with at most `max_c` factors exists in the budgeted set.
    MaxFactors,
    /// The search ran out of room before settling the question.
    BallCap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WidthKind {
    Found { c: usize, certificate: Vec<Word> },
    NotFoundWithinBudget { limit: BudgetLimit },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthAnswer {
    pub query: ReducedWord,
    pub m: usize,
    #[serde(flatten)]
    pub kind: WidthKind,
    pub lower_bound: u64,
}

impl WidthAnswer {
    pub fn found_c(&self) -> Option<usize> {
        match self.kind {
            WidthKind::Found { c, .. } => Some(c),
            WidthKind::NotFoundWithinBudget { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&[Word]> {
        match &self.kind {
            WidthKind::Found { certificate, .. } => Some(certificate),
            WidthKind::NotFoundWithinBudget { .. } => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("answer serializes")
    }
}

/// Every factor is an m-almost-palindrome of at most `gen_len` letters and
/// the reduced product is `query`.
pub fn certificate_is_sound(
    query: &ReducedWord,
    m: usize,
    gen_len: usize,
    factors: &[Word],
) -> bool {
    let shape_ok = factors
        .iter()
        .all(|p| p.len() <= gen_len && is_m_almost_palindrome(p, m));
    let product = factors
        .iter()
        .try_fold(ReducedWord::identity(), |acc, p| acc.group_mul(&reduce(p)));
    shape_ok && product.as_ref() == Ok(query)
}

#[derive(Debug, Clone, Copy)]
struct Node {
    depth: u32,
    pos: u32,
}

#[derive(Debug, Default)]
struct ForwardBall {
    index: HashMap<ReducedWord, Node>,
    levels: Vec<Vec<ReducedWord>>,
    // parents[d][p]: (position in level d - 1, generator index)
    parents: Vec<Vec<(u32, u32)>>,
    capped: bool,
}

struct CapHit;

/// A reusable search over one budgeted generating set. The forward ball is
/// cached between queries.
pub struct WidthSearch {
    generators: ApGenerators,
    budget: WidthBudget,
    forward: ForwardBall,
}

impl WidthSearch {
    pub fn new(m: usize, rank: u32, budget: WidthBudget) -> Result<Self, OracleError> {
        let generators = ap_generators(m, rank, budget.gen_len)?;
        let mut forward = ForwardBall::default();
        forward
            .index
            .insert(ReducedWord::identity(), Node { depth: 0, pos: 0 });
        forward.levels.push(vec![ReducedWord::identity()]);
        forward.parents.push(vec![(0, 0)]);
        Ok(WidthSearch {
            generators,
            budget,
            forward,
        })
    }

    pub fn generators(&self) -> &ApGenerators {
        &self.generators
    }

    pub fn budget(&self) -> WidthBudget {
        self.budget
    }

    fn forward_radius(&self) -> usize {
        if self.budget.max_c >= 4 {
            self.budget.max_c.div_ceil(2)
        } else {
            self.budget.max_c
        }
    }

    fn expand(&self, level: &[ReducedWord]) -> Vec<Vec<ReducedWord>> {
        let gens = &self.generators.elements;
        level
            .par_iter()
            .map(|e| {
                gens.iter()
                    .map(|x| e.group_mul(x).expect("budgeted exponents are small"))
                    .collect()
            })
            .collect()
    }

    fn grow_forward(&mut self, depth: usize) -> Result<(), CapHit> {
        while self.forward.levels.len() <= depth {
            if self.forward.capped {
                return Err(CapHit);
            }
            let d = self.forward.levels.len();
            let products = self.expand(&self.forward.levels[d - 1]);
            let mut level = Vec::new();
            let mut parents = Vec::new();
            for (parent, row) in products.into_iter().enumerate() {
                for (gi, e) in row.into_iter().enumerate() {
                    if self.forward.index.contains_key(&e) {
                        continue;
                    }
                    if self.forward.index.len() >= self.budget.ball_cap {
                        self.forward.capped = true;
                        return Err(CapHit);
                    }
                    let node = Node {
                        depth: d as u32,
                        pos: level.len() as u32,
                    };
                    self.forward.index.insert(e.clone(), node);
                    level.push(e);
                    parents.push((parent as u32, gi as u32));
                }
            }
            self.forward.levels.push(level);
            self.forward.parents.push(parents);
        }
        Ok(())
    }

    fn forward_path(&self, node: Node) -> Vec<usize> {
        let mut path = Vec::with_capacity(node.depth as usize);
        let (mut depth, mut pos) = (node.depth as usize, node.pos as usize);
        while depth > 0 {
            let (parent, gi) = self.forward.parents[depth][pos];
            path.push(gi as usize);
            pos = parent as usize;
            depth -= 1;
        }
        path.reverse();
        path
    }

    fn answer(&self, query: ReducedWord, lower_bound: u64, kind: WidthKind) -> WidthAnswer {
        WidthAnswer {
            query,
            m: self.generators.m,
            kind,
            lower_bound,
        }
    }

    fn found(&self, query: ReducedWord, lower_bound: u64, path: Vec<usize>) -> WidthAnswer {
        let certificate: Vec<Word> = path
            .iter()
            .map(|&i| self.generators.representatives[i].clone())
            .collect();
        assert!(
            certificate_is_sound(
                &query,
                self.generators.m,
                self.generators.gen_len,
                &certificate
            ),
            "unsound certificate for {query}"
        );
        assert!(
            certificate.len() as u64 >= lower_bound,
            "decomposition of {query} into {} factors beats the lower bound {lower_bound}",
            certificate.len()
        );
        let c = certificate.len();
        self.answer(query, lower_bound, WidthKind::Found { c, certificate })
    }

    /// Shortest decomposition of `target` within the budget.
    pub fn search(&mut self, target: &ReducedWord) -> WidthAnswer {
        let m = self.generators.m;
        let lower_bound = lower_bound_reduced(target, m);
        let query = target.clone();
        let not_found = |limit| WidthKind::NotFoundWithinBudget { limit };

        if target.is_identity() {
            return self.found(query, lower_bound, Vec::new());
        }
        let reach = (self.budget.max_c as u64).saturating_mul(self.budget.gen_len as u64);
        if target.len() > reach || lower_bound > self.budget.max_c as u64 {
            return self.answer(query, lower_bound, not_found(BudgetLimit::MaxFactors));
        }

        let radius = self.forward_radius();
        let mut backward: HashMap<ReducedWord, u32> = HashMap::new();
        let mut backward_levels: Vec<Vec<ReducedWord>> = vec![vec![target.clone()]];
        backward.insert(target.clone(), 0);

        for c in 1..=self.budget.max_c {
            let a = c.min(radius);
            let b = c - a;
            if self.grow_forward(a).is_err() {
                return self.answer(query, lower_bound, not_found(BudgetLimit::BallCap));
            }
            if b == 0 {
                // the cached ball may already reach deeper than c
                let hit = self
                    .forward
                    .index
                    .get(target)
                    .filter(|n| n.depth as usize == c);
                if let Some(&node) = hit {
                    return self.found(query, lower_bound, self.forward_path(node));
                }
                continue;
            }

            while backward_levels.len() <= b {
                let d = backward_levels.len() as u32;
                let products = self.expand(backward_levels.last().expect("nonempty"));
                let mut level = Vec::new();
                for e in products.into_iter().flatten() {
                    if backward.contains_key(&e) {
                        continue;
                    }
                    if self.forward.index.len() + backward.len() >= self.budget.ball_cap {
                        return self.answer(query, lower_bound, not_found(BudgetLimit::BallCap));
                    }
                    backward.insert(e.clone(), d);
                    level.push(e);
                }
                backward_levels.push(level);
            }

            let meet = self.forward.levels[a]
                .iter()
                .position(|e| backward.get(e) == Some(&(b as u32)));
            if let Some(pos) = meet {
                let node = Node {
                    depth: a as u32,
                    pos: pos as u32,
                };
                let mut path = self.forward_path(node);
                let mut current = self.forward.levels[a][pos].clone();
                for remaining in (0..b as u32).rev() {
                    let (gi, next) = self
                        .generators
                        .elements
                        .iter()
                        .enumerate()
                        .map(|(gi, x)| (gi, current.group_mul(x).expect("small exponents")))
                        .find(|(_, next)| backward.get(next) == Some(&remaining))
                        .expect("backward distances are consistent");
                    path.push(gi);
                    current = next;
                }
                return self.found(query, lower_bound, path);
            }
        }
        self.answer(query, lower_bound, not_found(BudgetLimit::MaxFactors))
    }
}

/// Upper bound on the m-almost-palindromic length of `g` over `rank`
/// generators, exact relative to `budget`.
pub fn ap_length_upper(
    g: &Word,
    m: usize,
    rank: u32,
    budget: WidthBudget,
) -> Result<WidthAnswer, OracleError> {
    let mut search = WidthSearch::new(m, rank, budget)?;
    Ok(search.search(&reduce(g)))
}
