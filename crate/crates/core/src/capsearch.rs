//! Caps: piles with no set (in Z_3^n) or no quad (in Z_2^6).
//!
//! The search is a depth-first branch and bound over points in ascending code
//! order. Every cap can be translated to contain the origin, and the origin is
//! the smallest code, so the first card is fixed to 0. A pile plus its
//! remaining candidates has to beat the best pile so far or the branch is cut.
//! Found caps are greedily saturated before being certified, so a certificate
//! is always non-extendable even when the budget ran out mid-search.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Card, Space};
use crate::analysis::{count_quads, count_sets};
use crate::error::{out_of_range, Error, Result};
use crate::rng::DeckRng;

/// Which structure a cap avoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CapKind {
    Set,
    Quad,
}

impl CapKind {
    pub fn name(self) -> &'static str {
        match self {
            CapKind::Set => "set",
            CapKind::Quad => "quad",
        }
    }
}

/// Known maximum cap sizes in Z_3^n for n = 1..=4. Used only to stop the
/// dimension-4 search early; no larger cap exists, so nothing is lost.
const MAX_CAP: [usize; 4] = [2, 4, 9, 20];
/// No 10 cards of Z_2^6 are quad-free.
pub const MAX_NOQUAD: usize = 9;

/// Number of sets (for `CapKind::Set`) or quads inside a pile.
pub fn count_internal(pile: &[Card], kind: CapKind) -> u64 {
    match kind {
        CapKind::Set => count_sets(pile),
        CapKind::Quad => count_quads(pile),
    }
}

/// Count of sets in a pile of an arbitrary Z_3^n, n <= 4.
fn count_lines(space: Space, pile: &[Card]) -> u64 {
    if space == Space::SET {
        return count_sets(pile);
    }
    let mut count = 0;
    for (i, &a) in pile.iter().enumerate() {
        for (j, &b) in pile.iter().enumerate().skip(i + 1) {
            let c = space.neg(space.add(a, b));
            if pile[j + 1..].contains(&c) {
                count += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub code: Card,
    pub creates: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapCertificate {
    pub kind: CapKind,
    pub space: Space,
    pub pile: Vec<Card>,
    pub internal_count: u64,
    pub extensions: Vec<Extension>,
    pub extension_blocked: bool,
    pub elapsed_ms: u64,
    /// True when the search space was exhausted, so the pile is a maximum.
    pub exhaustive: bool,
}

impl CapCertificate {
    fn build(kind: CapKind, space: Space, mut pile: Vec<Card>, elapsed: Duration, exhaustive: bool) -> Self {
        pile.sort_unstable();
        let internal_count = internal(kind, space, &pile);
        let extensions = extension_report(kind, space, &pile);
        let extension_blocked = extensions.iter().all(|e| e.creates);
        CapCertificate {
            kind,
            space,
            pile,
            internal_count,
            extensions,
            extension_blocked,
            elapsed_ms: elapsed.as_millis() as u64,
            exhaustive,
        }
    }

    pub fn size(&self) -> usize {
        self.pile.len()
    }

    /// Recomputes every claim from the pile alone.
    pub fn verify(&self) -> bool {
        let mut sorted = self.pile.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.pile.len()
            && self.pile.iter().all(|&c| self.space.contains(c))
            && internal(self.kind, self.space, &self.pile) == 0
            && self.internal_count == 0
            && extension_report(self.kind, self.space, &self.pile) == self.extensions
            && self.extensions.len() + self.pile.len() == self.space.size() as usize
            && self.extension_blocked == self.extensions.iter().all(|e| e.creates)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn internal(kind: CapKind, space: Space, pile: &[Card]) -> u64 {
    match kind {
        CapKind::Set => count_lines(space, pile),
        CapKind::Quad => count_quads(pile),
    }
}

fn extension_report(kind: CapKind, space: Space, pile: &[Card]) -> Vec<Extension> {
    let mut with = pile.to_vec();
    (0..space.size())
        .map(Card)
        .filter(|c| !pile.contains(c))
        .map(|code| {
            with.push(code);
            let creates = internal(kind, space, &with) > 0;
            with.pop();
            Extension { code, creates }
        })
        .collect()
}

/// Bitset search over at most 128 points.
struct Search {
    points: u32,
    kind: CapKind,
    /// `third[a * points + b]` completes the line through `a` and `b`.
    third: Vec<u8>,
    pile: Vec<u32>,
    best: Vec<u32>,
    stop_at: usize,
    deadline: Instant,
    nodes: u64,
    timed_out: bool,
}

impl Search {
    fn new(kind: CapKind, space: Space, budget: Duration, stop_at: usize) -> Search {
        let points = space.size();
        let third = match kind {
            CapKind::Set => {
                let mut t = Vec::with_capacity((points * points) as usize);
                for a in 0..points {
                    for b in 0..points {
                        t.push(space.neg(space.add(Card(a), Card(b))).0 as u8);
                    }
                }
                t
            }
            CapKind::Quad => Vec::new(),
        };
        Search {
            points,
            kind,
            third,
            pile: Vec::new(),
            best: Vec::new(),
            stop_at,
            deadline: Instant::now() + budget,
            nodes: 0,
            timed_out: false,
        }
    }

    /// Points that may no longer join the pile once `c` is added.
    fn blocked_by(&self, c: u32) -> u128 {
        let mut mask = 1u128 << c;
        match self.kind {
            CapKind::Set => {
                for &x in &self.pile {
                    mask |= 1u128 << self.third[(c * self.points + x) as usize];
                }
            }
            CapKind::Quad => {
                for (i, &a) in self.pile.iter().enumerate() {
                    for &b in &self.pile[i + 1..] {
                        mask |= 1u128 << (a ^ b ^ c);
                    }
                }
            }
        }
        mask
    }

    fn done(&mut self) -> bool {
        if self.timed_out || self.best.len() >= self.stop_at {
            return true;
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        self.timed_out
    }

    fn dfs(&mut self, allowed: u128, next: u32) {
        if self.pile.len() > self.best.len() {
            self.best = self.pile.clone();
        }
        if self.done() {
            return;
        }
        let mut cand = allowed & !((1u128 << next) - 1);
        while cand != 0 {
            if self.pile.len() + cand.count_ones() as usize <= self.best.len() {
                return;
            }
            let c = cand.trailing_zeros();
            cand &= cand - 1;
            let block = self.blocked_by(c);
            self.pile.push(c);
            self.dfs(allowed & !block, c + 1);
            self.pile.pop();
            if self.timed_out || self.best.len() >= self.stop_at {
                return;
            }
        }
    }

    /// Runs from the origin and returns the best pile and whether the search
    /// space was exhausted.
    fn run(mut self) -> (Vec<u32>, bool) {
        let full = if self.points == 128 { u128::MAX } else { (1u128 << self.points) - 1 };
        let block = self.blocked_by(0);
        self.pile.push(0);
        self.dfs(full & !block, 1);
        let exhaustive = !self.timed_out;
        // saturate: keep adding the smallest point that leaves a cap
        let best = std::mem::take(&mut self.best);
        self.pile.clear();
        let mut allowed = full;
        for c in best {
            allowed &= !self.blocked_by(c);
            self.pile.push(c);
        }
        while allowed != 0 {
            let c = allowed.trailing_zeros();
            allowed &= !self.blocked_by(c);
            self.pile.push(c);
        }
        (self.pile, exhaustive)
    }
}

fn check_budget(budget: Duration) -> Result<()> {
    if budget.is_zero() {
        return Err(out_of_range("budget", 0, "> 0"));
    }
    Ok(())
}

/// Largest cap (set-free pile) of Z_3^dim found within the budget.
pub fn find_max_cap(dim: u32, budget: Duration) -> Result<CapCertificate> {
    if !(1..=4).contains(&dim) {
        return Err(out_of_range("dim", dim, "1..=4"));
    }
    check_budget(budget)?;
    let space = Space::new(3, dim);
    let start = Instant::now();
    let stop_at = if dim == 4 { MAX_CAP[3] } else { usize::MAX };
    let (pile, exhaustive) = Search::new(CapKind::Set, space, budget, stop_at).run();
    if pile.len() < dim as usize + 1 {
        return Err(Error::BudgetTooSmall(dim as usize + 1));
    }
    let exhaustive = exhaustive || pile.len() == MAX_CAP[dim as usize - 1];
    let pile = pile.into_iter().map(Card).collect();
    Ok(CapCertificate::build(CapKind::Set, space, pile, start.elapsed(), exhaustive))
}

/// A quad-free pile of nine EvenQuads cards with its extension report.
pub fn find_noquad(budget: Duration) -> Result<CapCertificate> {
    check_budget(budget)?;
    let space = Space::BINARY6;
    let start = Instant::now();
    let (pile, _) = Search::new(CapKind::Quad, space, budget, MAX_NOQUAD).run();
    if pile.len() < MAX_NOQUAD {
        return Err(Error::BudgetTooSmall(MAX_NOQUAD));
    }
    let pile = pile.into_iter().map(Card).collect();
    Ok(CapCertificate::build(CapKind::Quad, space, pile, start.elapsed(), true))
}

/// Unpruned search: tries every subset of Z_3^dim, for cross-checking.
pub fn brute_force_max_cap(dim: u32) -> usize {
    let space = Space::new(3, dim);
    let n = space.size();
    assert!(n <= 27, "brute force is limited to dim <= 3");
    let mut best = 0;
    let mut pile = Vec::new();
    fn rec(space: Space, n: u32, next: u32, pile: &mut Vec<Card>, best: &mut usize) {
        if count_lines(space, pile) > 0 {
            return;
        }
        *best = (*best).max(pile.len());
        for c in next..n {
            pile.push(Card(c));
            rec(space, n, c + 1, pile, best);
            pile.pop();
        }
    }
    rec(space, n, 0, &mut pile, &mut best);
    best
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub pile_size: usize,
    pub samples: u64,
    pub hits: u64,
    pub fraction: f64,
    pub std_error: f64,
}

const CHUNK: u64 = 1 << 16;

/// Distinct pairwise XORs is equivalent to quad-free: `a^b = c^d` with
/// distinct cards means `{a, b, c, d}` is a quad.
fn quad_free(pile: &[u32]) -> bool {
    let mut seen = 0u64;
    for (i, &a) in pile.iter().enumerate() {
        for &b in &pile[i + 1..] {
            let bit = 1u64 << (a ^ b);
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
    }
    true
}

fn sample_chunk(rng: &mut DeckRng, pile_size: usize, samples: u64) -> u64 {
    let mut deck: [u32; 64] = std::array::from_fn(|i| i as u32);
    let mut hits = 0;
    for _ in 0..samples {
        // partial Fisher-Yates: the first pile_size slots are a uniform pile
        for i in 0..pile_size {
            let j = i + rng.below((64 - i) as u64) as usize;
            deck.swap(i, j);
        }
        if quad_free(&deck[..pile_size]) {
            hits += 1;
        }
    }
    hits
}

/// Monte Carlo estimate of the probability that `pile_size` random EvenQuads
/// cards contain no quad. Samples are split into fixed chunks of 65536, chunk
/// `i` drawing from the seed's stream jumped `i` times, so the result does not
/// depend on the thread count.
pub fn noquad_probability_estimate(pile_size: usize, samples: u64, seed: u64) -> Result<Estimate> {
    if pile_size > 64 {
        return Err(out_of_range("pile_size", pile_size, "0..=64"));
    }
    if samples < 10_000 {
        return Err(out_of_range("samples", samples, ">= 10000"));
    }
    let chunks = samples.div_ceil(CHUNK);
    let mut streams = Vec::with_capacity(chunks as usize);
    let mut rng = DeckRng::new(seed);
    for _ in 0..chunks {
        streams.push(rng.clone());
        rng.jump();
    }
    let hits: u64 = streams
        .into_par_iter()
        .enumerate()
        .map(|(i, mut rng)| {
            let n = CHUNK.min(samples - i as u64 * CHUNK);
            sample_chunk(&mut rng, pile_size, n)
        })
        .sum();
    let fraction = hits as f64 / samples as f64;
    let std_error = (fraction * (1.0 - fraction) / samples as f64).sqrt();
    Ok(Estimate {
        pile_size,
        samples,
        hits,
        fraction,
        std_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decks::{build_deck, DeckKind};
    use itertools::Itertools;

    const SECOND: Duration = Duration::from_secs(1);

    #[test]
    fn small_dimensions_are_exhaustive() {
        for (dim, want) in [(1, 2), (2, 4), (3, 9)] {
            let cert = find_max_cap(dim, Duration::from_secs(30)).unwrap();
            assert_eq!(cert.size(), want, "dim {dim}");
            assert!(cert.exhaustive);
            assert!(cert.verify());
            assert!(cert.extension_blocked);
        }
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for dim in 1..=2 {
            let cert = find_max_cap(dim, SECOND).unwrap();
            assert_eq!(cert.size(), brute_force_max_cap(dim));
        }
    }

    #[test]
    fn noquad_certificate() {
        let cert = find_noquad(Duration::from_secs(10)).unwrap();
        assert_eq!(cert.size(), 9);
        assert_eq!(cert.internal_count, 0);
        assert_eq!(cert.extensions.len(), 55);
        assert!(cert.extension_blocked);
        assert!(cert.verify());
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut cert = find_noquad(Duration::from_secs(10)).unwrap();
        cert.pile[8] = cert.extensions[0].code;
        assert!(!cert.verify());
        let mut cert = find_max_cap(2, SECOND).unwrap();
        cert.extensions.pop();
        assert!(!cert.verify());
    }

    #[test]
    fn count_internal_full_quads_deck() {
        let deck = build_deck(DeckKind::Quads).unwrap();
        assert_eq!(count_internal(&deck.cards, CapKind::Quad), 10416);
        let deck = build_deck(DeckKind::Set).unwrap();
        assert_eq!(count_internal(&deck.cards, CapKind::Set), 1080);
    }

    #[test]
    fn count_internal_matches_scan() {
        let mut rng = DeckRng::new(5);
        for _ in 0..50 {
            let mut deck: Vec<Card> = (0..64).map(Card).collect();
            rng.shuffle(&mut deck);
            let pile = &deck[..9];
            let scan = pile.iter().combinations(4).filter(|q| (q[0].0 ^ q[1].0 ^ q[2].0 ^ q[3].0) == 0).count();
            assert_eq!(count_internal(pile, CapKind::Quad), scan as u64);
            assert_eq!(quad_free(&pile.iter().map(|c| c.0).collect::<Vec<_>>()), scan == 0);
        }
    }

    #[test]
    fn estimate_edges() {
        assert_eq!(noquad_probability_estimate(3, 10_000, 1).unwrap().fraction, 1.0);
        assert_eq!(noquad_probability_estimate(10, 10_000, 1).unwrap().fraction, 0.0);
        assert!(noquad_probability_estimate(9, 9_999, 1).is_err());
        assert!(noquad_probability_estimate(65, 10_000, 1).is_err());
    }

    #[test]
    fn estimate_is_reproducible() {
        let a = noquad_probability_estimate(9, 200_000, 11).unwrap();
        let b = noquad_probability_estimate(9, 200_000, 11).unwrap();
        assert_eq!(a, b);
        assert!((a.fraction - 0.036).abs() < 0.005, "{}", a.fraction);
    }

    #[test]
    fn bad_arguments() {
        assert!(find_max_cap(0, SECOND).is_err());
        assert!(find_max_cap(5, SECOND).is_err());
        assert!(find_max_cap(2, Duration::ZERO).is_err());
        assert!(find_noquad(Duration::ZERO).is_err());
    }
}
