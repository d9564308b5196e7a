//! Crossingless oriented matchings between two sign words.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::sign_words::SignWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Bottom,
    Top,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Bottom => "bottom",
            Side::Top => "top",
        }
    }
}

/// Boundary point; `index` is 0-based, left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub side: Side,
    pub index: usize,
}

impl Endpoint {
    pub fn bottom(index: usize) -> Self {
        Endpoint { side: Side::Bottom, index }
    }

    pub fn top(index: usize) -> Self {
        Endpoint { side: Side::Top, index }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.side == Side::Bottom { "b" } else { "t" }, self.index + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("endpoint {0} is used by more than one arc or does not exist")]
    BadEndpoint(Endpoint),
    #[error("endpoint {0} is not covered by any arc")]
    Uncovered(Endpoint),
    #[error("arcs {0}-{1} and {2}-{3} cross")]
    Crossing(Endpoint, Endpoint, Endpoint, Endpoint),
    #[error("arc {0}-{1} does not respect the strand orientation")]
    Orientation(Endpoint, Endpoint),
    #[error("cannot stack: top word {lower} differs from bottom word {upper}")]
    Interface { lower: SignWord, upper: SignWord },
}

/// A reduced, planar, orientation-consistent pairing of the boundary points.
///
/// Arcs are stored with the smaller endpoint first and sorted, so the derived
/// ordering is lexicographic on sorted arc endpoint lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    bottom: SignWord,
    top: SignWord,
    arcs: Vec<(Endpoint, Endpoint)>,
}

impl Matching {
    pub fn new(bottom: SignWord, top: SignWord, arcs: Vec<(Endpoint, Endpoint)>) -> Result<Self, MatchingError> {
        let mut arcs: Vec<_> = arcs.into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
        arcs.sort();
        let m = Matching { bottom, top, arcs };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(w: &SignWord) -> Self {
        Matching {
            bottom: w.clone(),
            top: w.clone(),
            arcs: (0..w.len()).map(|i| (Endpoint::bottom(i), Endpoint::top(i))).collect(),
        }
    }

    pub fn empty() -> Self {
        Matching { bottom: SignWord::empty(), top: SignWord::empty(), arcs: Vec::new() }
    }

    pub fn bottom(&self) -> &SignWord {
        &self.bottom
    }

    pub fn top(&self) -> &SignWord {
        &self.top
    }

    pub fn arcs(&self) -> &[(Endpoint, Endpoint)] {
        &self.arcs
    }

    pub fn sign_at(&self, e: Endpoint) -> Option<crate::sign_words::Sign> {
        match e.side {
            Side::Bottom => self.bottom.get(e.index),
            Side::Top => self.top.get(e.index),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    pub fn through_count(&self) -> usize {
        self.arcs.iter().filter(|(a, b)| a.side != b.side).count()
    }

    /// Position on the boundary circle: bottom left to right, then top right to left.
    fn circle_position(&self, e: Endpoint) -> usize {
        match e.side {
            Side::Bottom => e.index,
            Side::Top => self.bottom.len() + self.top.len() - 1 - e.index,
        }
    }

    fn orientation_ok(&self, a: Endpoint, b: Endpoint) -> bool {
        match (self.sign_at(a), self.sign_at(b)) {
            (Some(sa), Some(sb)) => (a.side != b.side) == (sa == sb),
            _ => false,
        }
    }

    fn validate(&self) -> Result<(), MatchingError> {
        let total = self.bottom.len() + self.top.len();
        let mut seen = vec![false; total];
        for &(a, b) in &self.arcs {
            for e in [a, b] {
                if self.sign_at(e).is_none() {
                    return Err(MatchingError::BadEndpoint(e));
                }
                let p = self.circle_position(e);
                if std::mem::replace(&mut seen[p], true) {
                    return Err(MatchingError::BadEndpoint(e));
                }
            }
            if !self.orientation_ok(a, b) {
                return Err(MatchingError::Orientation(a, b));
            }
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            let e = if p < self.bottom.len() {
                Endpoint::bottom(p)
            } else {
                Endpoint::top(total - 1 - p)
            };
            return Err(MatchingError::Uncovered(e));
        }
        let chords: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.circle_position(a), self.circle_position(b));
                (x.min(y), x.max(y))
            })
            .collect();
        for (i, &(a, b)) in chords.iter().enumerate() {
            for (j, &(c, d)) in chords.iter().enumerate().skip(i + 1) {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    let (p, q) = self.arcs[i];
                    let (r, s) = self.arcs[j];
                    return Err(MatchingError::Crossing(p, q, r, s));
                }
            }
        }
        Ok(())
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, right: &Matching) -> Matching {
        let shift = |e: Endpoint| match e.side {
            Side::Bottom => Endpoint::bottom(e.index + self.bottom.len()),
            Side::Top => Endpoint::top(e.index + self.top.len()),
        };
        let mut arcs = self.arcs.clone();
        arcs.extend(right.arcs.iter().map(|&(a, b)| (shift(a), shift(b))));
        arcs.sort();
        Matching { bottom: self.bottom.concat(&right.bottom), top: self.top.concat(&right.top), arcs }
    }

    /// Stacks `upper` on top of `self`, tracing out the middle points.
    ///
    /// Returns the composite and the closed loops it produced, each loop given as
    /// the sorted list of middle-word positions it passes through.
    pub fn compose(&self, upper: &Matching) -> Result<(Matching, Vec<Vec<usize>>), MatchingError> {
        if self.top != upper.bottom {
            return Err(MatchingError::Interface { lower: self.top.clone(), upper: upper.bottom.clone() });
        }
        let nb = self.bottom.len();
        let nm = self.top.len();
        let nt = upper.top.len();
        let node_lower = |e: Endpoint| if e.side == Side::Bottom { e.index } else { nb + e.index };
        let node_upper = |e: Endpoint| if e.side == Side::Bottom { nb + e.index } else { nb + nm + e.index };
        let total = nb + nm + nt;
        let mut via_lower = vec![usize::MAX; total];
        let mut via_upper = vec![usize::MAX; total];
        for &(a, b) in &self.arcs {
            let (x, y) = (node_lower(a), node_lower(b));
            via_lower[x] = y;
            via_lower[y] = x;
        }
        for &(a, b) in &upper.arcs {
            let (x, y) = (node_upper(a), node_upper(b));
            via_upper[x] = y;
            via_upper[y] = x;
        }
        let is_mid = |x: usize| (nb..nb + nm).contains(&x);
        let endpoint_of = |x: usize| {
            if x < nb {
                Endpoint::bottom(x)
            } else {
                Endpoint::top(x - nb - nm)
            }
        };

        let mut visited = vec![false; total];
        let mut arcs = Vec::new();
        for start in (0..nb).chain(nb + nm..total) {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut use_lower = start < nb;
            let mut cur = start;
            loop {
                cur = if use_lower { via_lower[cur] } else { via_upper[cur] };
                visited[cur] = true;
                if !is_mid(cur) {
                    break;
                }
                use_lower = !use_lower;
            }
            arcs.push((endpoint_of(start), endpoint_of(cur)));
        }

        let mut loops = Vec::new();
        for start in nb..nb + nm {
            if visited[start] {
                continue;
            }
            let mut points = Vec::new();
            let mut cur = start;
            let mut use_lower = true;
            loop {
                visited[cur] = true;
                points.push(cur - nb);
                cur = if use_lower { via_lower[cur] } else { via_upper[cur] };
                use_lower = !use_lower;
                if cur == start {
                    break;
                }
            }
            points.sort_unstable();
            loops.push(points);
        }

        let composite = Matching::new(self.bottom.clone(), upper.top.clone(), arcs)
            .expect("composition of planar oriented matchings is planar and oriented");
        Ok((composite, loops))
    }

    /// Canonical representative between two words: the rightmost strands run
    /// straight through, the surplus on the longer side is closed off by
    /// adjacent U-turns starting from the left.
    pub fn canonical(bottom: &SignWord, top: &SignWord) -> Option<Matching> {
        let (m, k) = (bottom.len(), top.len());
        let through = m.min(k);
        if bottom.signs()[m - through..] != top.signs()[k - through..] {
            return None;
        }
        let surplus = m.max(k) - through;
        if surplus % 2 != 0 {
            return None;
        }
        let mut arcs: Vec<_> = (0..through)
            .map(|r| (Endpoint::bottom(m - through + r), Endpoint::top(k - through + r)))
            .collect();
        let side = if m > k { Side::Bottom } else { Side::Top };
        for p in (0..surplus).step_by(2) {
            arcs.push((Endpoint { side, index: p }, Endpoint { side, index: p + 1 }));
        }
        Matching::new(bottom.clone(), top.clone(), arcs).ok()
    }

    /// The other non-crossing pairing of the endpoints of arcs `i` and `j`, if it
    /// is a valid matching (the arcs must face each other across one region).
    pub fn saddle(&self, i: usize, j: usize) -> Option<Matching> {
        let (p1, p2) = self.arcs[i];
        let (q1, q2) = self.arcs[j];
        [[(p1, q1), (p2, q2)], [(p1, q2), (p2, q1)]].into_iter().find_map(|pair| {
            let mut arcs: Vec<_> = self
                .arcs
                .iter()
                .enumerate()
                .filter(|&(idx, _)| idx != i && idx != j)
                .map(|(_, &a)| a)
                .collect();
            arcs.extend(pair);
            Matching::new(self.bottom.clone(), self.top.clone(), arcs).ok()
        })
    }

    /// Every planar orientation-consistent matching between the two words.
    pub fn enumerate(bottom: &SignWord, top: &SignWord) -> Vec<Matching> {
        let m = bottom.len();
        let total = m + top.len();
        if !total.is_multiple_of(2) {
            return Vec::new();
        }
        let template = Matching { bottom: bottom.clone(), top: top.clone(), arcs: Vec::new() };
        let at = |p: usize| if p < m { Endpoint::bottom(p) } else { Endpoint::top(total - 1 - p) };
        let mut memo = HashMap::new();
        let pairings = pairings_on(0, total, &|a, b| template.orientation_ok(at(a), at(b)), &mut memo);
        pairings
            .into_iter()
            .map(|chords| {
                let mut arcs: Vec<_> = chords
                    .into_iter()
                    .map(|(a, b)| {
                        let (x, y) = (at(a), at(b));
                        if x <= y {
                            (x, y)
                        } else {
                            (y, x)
                        }
                    })
                    .collect();
                arcs.sort();
                Matching { bottom: bottom.clone(), top: top.clone(), arcs }
            })
            .collect()
    }
}

type Chords = Vec<(usize, usize)>;

fn pairings_on(
    lo: usize,
    hi: usize,
    allowed: &dyn Fn(usize, usize) -> bool,
    memo: &mut HashMap<(usize, usize), Vec<Chords>>,
) -> Vec<Chords> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    if let Some(hit) = memo.get(&(lo, hi)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for j in (lo + 1..hi).step_by(2) {
        if !allowed(lo, j) {
            continue;
        }
        let inner = pairings_on(lo + 1, j, allowed, memo);
        if inner.is_empty() {
            continue;
        }
        let outer = pairings_on(j + 1, hi, allowed, memo);
        for a in &inner {
            for b in &outer {
                let mut chords = Vec::with_capacity(a.len() + b.len() + 1);
                chords.push((lo, j));
                chords.extend_from_slice(a);
                chords.extend_from_slice(b);
                out.push(chords);
            }
        }
    }
    memo.insert((lo, hi), out.clone());
    out
}
