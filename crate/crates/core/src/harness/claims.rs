//! The claim registry and the single-tree checker.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::survey::{measure_open_problem, OpenProblemRecord};
use crate::bonding::{bond_law_violation, split_at, BondLaw};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Tree, VertexId, VertexSet};
use crate::independence::{
    alpha, core, extend_pendant_set, for_each_stable_set,
    is_strong_unique_by_definition, is_strong_unique_independent, max_stable_set_avoiding, mu,
};

/// Default ceiling on `n` for claims that scan every stable set of a tree.
pub const DEFAULT_SCAN_CEILING: usize = 20;

/// Statements checked by the harness.
///
/// | id   | statement |
/// |------|-----------|
/// | C1   | a stable set with `2|S| >= n` contains a pendant vertex |
/// | C2   | such a set with a non-pendant member has a pendant member at distance 2 from another member |
/// | C3   | every maximum stable set contains a pendant vertex |
/// | C4   | `alpha = n/2` gives two pendant vertices at odd distance |
/// | C5   | strong unique independence, all pendants on one side, and pairwise-even pendant distances coincide |
/// | C6   | a stable set larger than the smaller side hits `pend` and has a pendant member at distance 2 from another member |
/// | C7   | `alpha > n/2` iff `xi >= 2`, and `alpha = n/2` iff `xi = 0` |
/// | C8   | every stable set of pendant vertices extends to a maximum stable set |
/// | C9   | bonding laws at every vertex split |
/// | C10  | `alpha > n/2` gives `|core ∩ pend| >= 2` |
/// | C11  | `alpha > n/2` and a core vertex of degree `>= 2k` give `|core ∩ pend| >= 2k` |
/// | C12a | `alpha > n/2` gives two members of `core ∩ pend` at even distance |
/// | C12b | `alpha > n/2` and `|core ∩ pend| = 2` give a distance other than 4 |
/// | C13  | `xi >= 1 + alpha - mu` (recorded, never asserted) |
/// | E1   | pendants in the intersection of all maximal stable sets of size `k` (measurement) |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12a,
    C12b,
    C13,
    E1,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
        ClaimId::C12a,
        ClaimId::C12b,
        ClaimId::C13,
        ClaimId::E1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::C1 => "C1",
            ClaimId::C2 => "C2",
            ClaimId::C3 => "C3",
            ClaimId::C4 => "C4",
            ClaimId::C5 => "C5",
            ClaimId::C6 => "C6",
            ClaimId::C7 => "C7",
            ClaimId::C8 => "C8",
            ClaimId::C9 => "C9",
            ClaimId::C10 => "C10",
            ClaimId::C11 => "C11",
            ClaimId::C12a => "C12a",
            ClaimId::C12b => "C12b",
            ClaimId::C13 => "C13",
            ClaimId::E1 => "E1",
        }
    }

    /// Whether a refutation counts against the statement. C13 and E1 are
    /// only recorded.
    pub fn is_asserted(self) -> bool {
        !matches!(self, ClaimId::C13 | ClaimId::E1)
    }

    /// Whether checking needs a scan over every stable set.
    pub fn needs_scan(self) -> bool {
        matches!(self, ClaimId::C1 | ClaimId::C2 | ClaimId::C6)
    }

    /// Parses `all` or a comma-separated list; `C12` selects both parts.
    pub fn parse_list(text: &str) -> Result<Vec<ClaimId>> {
        if text.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::ALL.to_vec());
        }
        let mut claims = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item.eq_ignore_ascii_case("C12") {
                claims.extend([ClaimId::C12a, ClaimId::C12b]);
            } else {
                claims.push(item.parse()?);
            }
        }
        claims.sort();
        claims.dedup();
        Ok(claims)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Refuted,
    NotApplicable,
}

/// Evidence attached to a result. Refutations always carry one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A stable set breaking C1, C2, C3 or C6.
    StableSet { set: VertexSet },
    /// All pendants on one side although `alpha = n/2` (C4).
    PendantSides { pendants: VertexSet, a: VertexSet, b: VertexSet },
    /// The three C5 conditions disagree.
    Equivalence { strong_unique: bool, one_side: bool, even_distances: bool },
    /// Stability numbers breaking C7 or C13.
    Numbers { n: usize, alpha: usize, mu: usize, xi: usize },
    /// A pendant set whose extension failed (C8).
    Extension { pendants: VertexSet, result: Option<VertexSet> },
    /// A vertex split breaking a bonding law (C9).
    Bond { vertex: VertexId, side: VertexSet, law: BondLaw },
    /// `core ∩ pend` too small or without an even pair (C10, C12a).
    CorePendants { core_pendants: VertexSet },
    /// A high-degree core vertex with too few core pendants (C11).
    HighDegree { vertex: VertexId, degree: usize, k: usize, core_pendants: VertexSet },
    /// The two core pendants and their distance (C12b).
    PendantPair { u: VertexId, v: VertexId, distance: usize },
    /// E1 measurements for this tree.
    Measurement(OpenProblemRecord),
}

/// Outcome of one claim on one tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: ClaimId,
    /// The tree in edge-list text.
    pub tree: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Lazily computed quantities shared by all claims on one tree.
pub struct TreeFacts<'a> {
    pub tree: &'a Tree,
    alpha: OnceCell<usize>,
    mu: OnceCell<usize>,
    core: OnceCell<VertexSet>,
    pendants: OnceCell<VertexSet>,
    sides: OnceCell<Bipartition>,
    distances: OnceCell<Vec<Vec<usize>>>,
}

impl<'a> TreeFacts<'a> {
    pub fn new(tree: &'a Tree) -> Self {
        Self {
            tree,
            alpha: OnceCell::new(),
            mu: OnceCell::new(),
            core: OnceCell::new(),
            pendants: OnceCell::new(),
            sides: OnceCell::new(),
            distances: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn alpha(&self) -> usize {
        *self.alpha.get_or_init(|| alpha(self.tree))
    }

    pub fn mu(&self) -> usize {
        *self.mu.get_or_init(|| mu(self.tree))
    }

    pub fn core(&self) -> &VertexSet {
        self.core.get_or_init(|| core(self.tree))
    }

    pub fn pendants(&self) -> &VertexSet {
        self.pendants.get_or_init(|| self.tree.pendant_vertices())
    }

    pub fn sides(&self) -> &Bipartition {
        self.sides.get_or_init(|| self.tree.bipartition())
    }

    pub fn core_pendants(&self) -> VertexSet {
        self.core().intersection(self.pendants())
    }

    /// `2 alpha > n`, i.e. no perfect matching.
    pub fn alpha_above_half(&self) -> bool {
        2 * self.alpha() > self.n()
    }

    /// All-pairs distances; only used below the scan ceiling.
    fn distance_matrix(&self) -> &Vec<Vec<usize>> {
        self.distances.get_or_init(|| {
            (0..self.n()).map(|v| self.tree.distances_from(v).expect("in range")).collect()
        })
    }

    /// First pair of distinct members of `set` whose distance satisfies `want`.
    fn find_pair(&self, set: &VertexSet, want: impl Fn(usize) -> bool) -> Option<(VertexId, VertexId, usize)> {
        let members = set.to_vec();
        for (i, &u) in members.iter().enumerate() {
            let dist = self.tree.distances_from(u).expect("in range");
            if let Some(&v) = members[i + 1..].iter().find(|&&v| want(dist[v])) {
                return Some((u, v, dist[v]));
            }
        }
        None
    }
}

/// Checks one claim on one tree with the default scan ceiling.
pub fn check_tree(claim: ClaimId, tree: &Tree) -> Result<ClaimResult> {
    check_tree_with(claim, &TreeFacts::new(tree), DEFAULT_SCAN_CEILING)
}

/// Checks one claim against shared per-tree facts.
pub fn check_tree_with(claim: ClaimId, facts: &TreeFacts<'_>, scan_ceiling: usize) -> Result<ClaimResult> {
    if claim.needs_scan() && facts.n() > scan_ceiling {
        return Err(Error::ScaleExceeded { n: facts.n(), ceiling: scan_ceiling });
    }
    let (status, witness) = match claim {
        ClaimId::C1 | ClaimId::C2 | ClaimId::C6 => scan_claim(claim, facts)?,
        ClaimId::C3 => check_c3(facts),
        ClaimId::C4 => check_c4(facts),
        ClaimId::C5 => check_c5(facts),
        ClaimId::C7 => check_c7(facts),
        ClaimId::C8 => check_c8(facts),
        ClaimId::C9 => check_c9(facts)?,
        ClaimId::C10 => check_c10(facts),
        ClaimId::C11 => check_c11(facts),
        ClaimId::C12a => check_c12a(facts),
        ClaimId::C12b => check_c12b(facts),
        ClaimId::C13 => check_c13(facts),
        ClaimId::E1 => check_e1(facts)?,
    };
    debug_assert!(status != ClaimStatus::Refuted || witness.is_some());
    Ok(ClaimResult { claim, tree: facts.tree.to_edge_list(), status, witness })
}

type Outcome = (ClaimStatus, Option<Witness>);

fn holds_if(ok: bool, witness: impl FnOnce() -> Witness) -> Outcome {
    if ok {
        (ClaimStatus::Holds, None)
    } else {
        (ClaimStatus::Refuted, Some(witness()))
    }
}

const NOT_APPLICABLE: Outcome = (ClaimStatus::NotApplicable, None);

fn mask_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_mask(n, mask)
}

/// C1, C2 and C6 quantify over every stable set; the first violating set in
/// scan order is the witness.
fn scan_claim(claim: ClaimId, facts: &TreeFacts<'_>) -> Result<Outcome> {
    let n = facts.n();
    let pend = facts.pendants().to_mask();
    let smaller_side = facts.sides().smaller_side_len();
    // at_two[v]: vertices at distance exactly 2 from v
    let at_two: Vec<u64> = facts
        .distance_matrix()
        .iter()
        .map(|row| row.iter().enumerate().filter(|&(_, &d)| d == 2).fold(0u64, |m, (w, _)| m | 1 << w))
        .collect();
    let has_pendant_pair_at_two = |s: u64| {
        let mut hits = s & pend;
        while hits != 0 {
            let v = hits.trailing_zeros() as usize;
            hits &= hits - 1;
            if at_two[v] & s != 0 {
                return true;
            }
        }
        false
    };
    let mut applicable = false;
    let mut violation: Option<u64> = None;
    for_each_stable_set(facts.tree, |s| {
        if violation.is_some() {
            return;
        }
        let size = s.count_ones() as usize;
        let ok = match claim {
            ClaimId::C1 if 2 * size >= n => {
                applicable = true;
                s & pend != 0
            }
            ClaimId::C2 if 2 * size >= n && s & !pend != 0 => {
                applicable = true;
                has_pendant_pair_at_two(s)
            }
            ClaimId::C6 if size > smaller_side => {
                applicable = true;
                s & pend != 0 && has_pendant_pair_at_two(s)
            }
            _ => true,
        };
        if !ok {
            violation = Some(s);
        }
    })?;
    Ok(match violation {
        Some(s) => (ClaimStatus::Refuted, Some(Witness::StableSet { set: mask_set(n, s) })),
        None if applicable => (ClaimStatus::Holds, None),
        None => NOT_APPLICABLE,
    })
}

fn check_c3(facts: &TreeFacts<'_>) -> Outcome {
    let (best_avoiding, set) = max_stable_set_avoiding(facts.tree, facts.pendants());
    holds_if(best_avoiding < facts.alpha(), || Witness::StableSet { set })
}

fn check_c4(facts: &TreeFacts<'_>) -> Outcome {
    if 2 * facts.alpha() != facts.n() {
        return NOT_APPLICABLE;
    }
    let odd_pair = facts.find_pair(facts.pendants(), |d| d % 2 == 1);
    holds_if(odd_pair.is_some(), || {
        let sides = facts.sides();
        Witness::PendantSides { pendants: facts.pendants().clone(), a: sides.a.clone(), b: sides.b.clone() }
    })
}

fn check_c5(facts: &TreeFacts<'_>) -> Outcome {
    let strong_unique = is_strong_unique_by_definition(facts.tree);
    let one_side = is_strong_unique_independent(facts.tree);
    let even_distances = facts.find_pair(facts.pendants(), |d| d % 2 == 1).is_none();
    holds_if(strong_unique == one_side && one_side == even_distances, || Witness::Equivalence {
        strong_unique,
        one_side,
        even_distances,
    })
}

fn numbers(facts: &TreeFacts<'_>) -> Witness {
    Witness::Numbers { n: facts.n(), alpha: facts.alpha(), mu: facts.mu(), xi: facts.core().len() }
}

fn check_c7(facts: &TreeFacts<'_>) -> Outcome {
    let (n, a, xi) = (facts.n(), facts.alpha(), facts.core().len());
    let part_one = (2 * a > n) == (xi >= 2);
    let part_two = (2 * a == n) == (xi == 0);
    holds_if(part_one && part_two, || numbers(facts))
}

/// Pendant subsets are all tried when there are few pendants; otherwise the
/// inclusion-maximal stable ones are, which covers every subset.
fn check_c8(facts: &TreeFacts<'_>) -> Outcome {
    let n = facts.n();
    let pendants = facts.pendants().to_vec();
    let candidates: Vec<VertexSet> = if pendants.len() <= 12 {
        (1u64..1 << pendants.len())
            .map(|bits| {
                VertexSet::from_members(
                    n,
                    pendants.iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).map(|(_, &v)| v),
                )
            })
            .filter(|s| facts.tree.is_stable(s))
            .collect()
    } else {
        // n > 2 here, so the whole pendant set is stable
        vec![facts.pendants().clone()]
    };
    for a in candidates {
        let result = extend_pendant_set(facts.tree, &a).ok();
        let ok = result.as_ref().is_some_and(|s| {
            a.is_subset(s) && facts.tree.is_stable(s) && s.len() == facts.alpha()
        });
        if !ok {
            return (ClaimStatus::Refuted, Some(Witness::Extension { pendants: a, result }));
        }
    }
    (ClaimStatus::Holds, None)
}

/// Neighbor splits tried at a vertex: every split when the degree is small,
/// otherwise the first neighbor alone and the first half.
fn split_sides(tree: &Tree, v: VertexId) -> Vec<VertexSet> {
    let n = tree.n();
    let nbrs = tree.neighbors(v);
    let d = nbrs.len();
    if d < 2 {
        return Vec::new();
    }
    if d <= 5 {
        // sides containing the first neighbor, so each split appears once
        (0u64..1 << (d - 1))
            .map(|bits| bits << 1 | 1)
            .filter(|&bits| bits != (1 << d) - 1)
            .map(|bits| {
                VertexSet::from_members(n, (0..d).filter(|&i| bits >> i & 1 == 1).map(|i| nbrs[i]))
            })
            .collect()
    } else {
        vec![
            VertexSet::from_members(n, [nbrs[0]]),
            VertexSet::from_members(n, nbrs[..d / 2].iter().copied()),
        ]
    }
}

fn check_c9(facts: &TreeFacts<'_>) -> Result<Outcome> {
    let tree = facts.tree;
    let mut applicable = false;
    for v in 0..tree.n() {
        for side in split_sides(tree, v) {
            applicable = true;
            let split = split_at(tree, v, &side)?;
            let broken = bond_law_violation(&split.left, split.left_vertex, &split.right, split.right_vertex)?;
            if let Some(law) = broken {
                return Ok((ClaimStatus::Refuted, Some(Witness::Bond { vertex: v, side, law })));
            }
        }
    }
    Ok(if applicable { (ClaimStatus::Holds, None) } else { NOT_APPLICABLE })
}

fn check_c10(facts: &TreeFacts<'_>) -> Outcome {
    if !facts.alpha_above_half() {
        return NOT_APPLICABLE;
    }
    let core_pendants = facts.core_pendants();
    holds_if(core_pendants.len() >= 2, || Witness::CorePendants { core_pendants })
}

fn check_c11(facts: &TreeFacts<'_>) -> Outcome {
    if !facts.alpha_above_half() {
        return NOT_APPLICABLE;
    }
    let Some((vertex, degree)) = facts
        .core()
        .iter()
        .map(|v| (v, facts.tree.degree(v)))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
    else {
        return NOT_APPLICABLE;
    };
    if degree < 4 {
        return NOT_APPLICABLE;
    }
    let core_pendants = facts.core_pendants();
    for k in 2..=degree / 2 {
        if core_pendants.len() < 2 * k {
            return (
                ClaimStatus::Refuted,
                Some(Witness::HighDegree { vertex, degree, k, core_pendants }),
            );
        }
    }
    (ClaimStatus::Holds, None)
}

fn check_c12a(facts: &TreeFacts<'_>) -> Outcome {
    if !facts.alpha_above_half() {
        return NOT_APPLICABLE;
    }
    let core_pendants = facts.core_pendants();
    let even = facts.find_pair(&core_pendants, |d| d % 2 == 0);
    holds_if(even.is_some(), || Witness::CorePendants { core_pendants })
}

fn check_c12b(facts: &TreeFacts<'_>) -> Outcome {
    if !facts.alpha_above_half() {
        return NOT_APPLICABLE;
    }
    let core_pendants = facts.core_pendants().to_vec();
    let [u, v] = core_pendants[..] else {
        return NOT_APPLICABLE;
    };
    let distance = facts.tree.distance(u, v).expect("in range");
    holds_if(distance != 4, || Witness::PendantPair { u, v, distance })
}

fn check_c13(facts: &TreeFacts<'_>) -> Outcome {
    let lhs = facts.core().len() as i64;
    let rhs = 1 + facts.alpha() as i64 - facts.mu() as i64;
    holds_if(lhs >= rhs, || numbers(facts))
}

fn check_e1(facts: &TreeFacts<'_>) -> Result<Outcome> {
    let record = measure_open_problem(facts.tree)?;
    let status = record.status();
    Ok((status, Some(Witness::Measurement(record))))
}
