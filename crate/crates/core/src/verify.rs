//! Self-checks: every structural property the engine relies on, recomputed
//! from scratch. Random samples use fixed seeds so reports are reproducible.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::algebra::{binomial, xor_all, Card, Rational, Space};
use crate::analysis::{
    complementary_identity, count_quads, count_sets, match_probability_closed, subset_sum_counts, subset_sum_counts_in,
    ProbabilityTable,
};
use crate::capsearch::{brute_force_max_cap, find_max_cap, find_noquad, noquad_probability_estimate};
use crate::decks::{
    build_deck, card_label, card_to_grid, grid_to_card, label_to_code, parse_label, DeckKind,
};
use crate::error::{Error, Result};
use crate::projective::{build_projective_plane, build_spotit_deck, fano_socks_correspondence, verify_plane};
use crate::rng::DeckRng;
use crate::rules::{
    complete_quad, complete_set, construct_minimal_match, is_match, is_minimal_match, splits_into_two_matched_triples,
};
use crate::sim::{claim_is_legal, simulate, Event, Game, GameConfig, GameLog, Variant};
use crate::xmap::{correspond, enumerate_table3, is_socks_match, partition_values, seven_card_subspace, Origin};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Decks,
    Rules,
    Probability,
    Caps,
    Planes,
    Correspondence,
    Sim,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Algebra,
        Suite::Decks,
        Suite::Rules,
        Suite::Probability,
        Suite::Caps,
        Suite::Planes,
        Suite::Correspondence,
        Suite::Sim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Decks => "decks",
            Suite::Rules => "rules",
            Suite::Probability => "probability",
            Suite::Caps => "caps",
            Suite::Planes => "planes",
            Suite::Correspondence => "correspondence",
            Suite::Sim => "sim",
        }
    }

    pub fn run(self) -> Vec<Check> {
        let checks: Vec<fn() -> Check> = match self {
            Suite::Algebra => vec![group_laws, encoding_round_trip, rational_oracle],
            Suite::Decks => vec![socks_is_quads_minus_zero, grid_bijection, label_round_trip],
            Suite::Rules => vec![
                completion_never_returns_input,
                quads_are_coplanar,
                blue_sock_parity,
                minimal_match_sizes,
            ],
            Suite::Probability => vec![
                table_one,
                closed_form_matches_recursion,
                recursion_matches_subset_counts,
                table_symmetry,
                anchor_odd,
                anchor_every_n,
                complementary_piles,
                sign_pattern,
                quad_census,
            ],
            Suite::Caps => vec![cap_certificates, pruned_matches_brute_force, estimate_reproducible],
            Suite::Planes => vec![planes_pass, plane_duality, plane_minus_a_card, fano_lines],
            Suite::Correspondence => vec![
                partition_iff_zero_xor,
                identity_origin,
                origin_covariance,
                table3,
                correspondence_examples,
            ],
            Suite::Sim => vec![
                replay_reproduces,
                claims_are_legal,
                extended_socks_end_state,
                official_socks_claims,
                spotit_turns,
            ],
        };
        checks
            .into_iter()
            .map(|f| {
                let mut c = f();
                c.suite = self.name();
                c
            })
            .collect()
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark}  {}/{}: {}", self.suite, self.name, self.detail)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        suite: "",
        name,
        passed,
        detail: detail.into(),
    }
}

pub fn run_all() -> Vec<Check> {
    Suite::ALL.into_iter().flat_map(Suite::run).collect()
}

fn random_subset(rng: &mut DeckRng, pool: &[Card], k: usize) -> Vec<Card> {
    let mut v = pool.to_vec();
    rng.shuffle(&mut v);
    v.truncate(k);
    v
}

// algebra

fn group_laws() -> Check {
    let mut bad = 0;
    for space in [Space::BINARY6, Space::SET] {
        let n = space.size() as usize;
        let t = space.addition_table();
        for a in 0..n {
            if t[a * n + space.neg(Card(a as u32)).0 as usize] != 0 {
                bad += 1;
            }
            for b in 0..n {
                let ab = t[a * n + b] as usize;
                if ab != t[b * n + a] as usize {
                    bad += 1;
                }
                for c in 0..n {
                    if t[ab * n + c] != t[a * n + t[b * n + c] as usize] {
                        bad += 1;
                    }
                }
            }
        }
    }
    check("group_laws", bad == 0, format!("associativity, commutativity, inverses over F_2^6 and F_3^4: {bad} violations"))
}

fn encoding_round_trip() -> Check {
    let ok = [Space::BINARY6, Space::SET, Space::new(3, 2), Space::new(5, 3)].iter().all(|s| {
        (0..s.size()).all(|c| s.decode(Card(c)).and_then(|v| s.encode(&v)) == Ok(Card(c)))
    });
    check("encoding_round_trip", ok, "decode then encode is the identity on every code")
}

fn rational_oracle() -> Check {
    let mut rng = DeckRng::new(1);
    let draw = |rng: &mut DeckRng| (rng.below(2_000_001) as i64 - 1_000_000, rng.below(1_000_000) as i64 + 1);
    let mut bad = 0;
    for _ in 0..1000 {
        let (a, b) = draw(&mut rng);
        let (c, d) = draw(&mut rng);
        let x = Rational::ratio(a, b);
        let y = Rational::ratio(c, d);
        let same = |r: &Rational, n: BigInt, m: BigInt| r.numer() * &m == n * r.denom();
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        let sum = same(&(&x + &y), &a * &d + &c * &b, &b * &d);
        let diff = same(&(&x - &y), &a * &d - &c * &b, &b * &d);
        let prod = same(&(&x * &y), &a * &c, &b * &d);
        let quot = c == BigInt::from(0) || same(&x.checked_div(&y).unwrap(), &a * &d, &b * &c);
        if !(sum && diff && prod && quot) {
            bad += 1;
        }
    }
    check("rational_oracle", bad == 0, format!("1000 random pairs against cross-multiplication: {bad} mismatches"))
}

// decks

fn socks_is_quads_minus_zero() -> Check {
    let socks = build_deck(DeckKind::Socks).unwrap().cards;
    let mut quads = build_deck(DeckKind::Quads).unwrap().cards;
    quads.retain(|&c| c != Card::ZERO);
    check("socks_is_quads_minus_zero", socks == quads, format!("{} Socks cards", socks.len()))
}

fn grid_bijection() -> Check {
    let cells: std::collections::BTreeSet<_> = (0..64).filter_map(|c| card_to_grid(Card(c)).ok()).collect();
    let back = (0..64).all(|c| card_to_grid(Card(c)).and_then(|(r, col)| grid_to_card(r, col)) == Ok(Card(c)));
    check("grid_bijection", cells.len() == 64 && back, "64 codes onto 64 cells and back")
}

fn label_round_trip() -> Check {
    let mut bad = Vec::new();
    for kind in [DeckKind::Set, DeckKind::Socks, DeckKind::Quads, DeckKind::SpotIt(7), DeckKind::SpotIt(2)] {
        for card in build_deck(kind).unwrap().cards {
            let ok = card_label(kind, card)
                .and_then(|l| parse_label(kind, &l.to_string()))
                .and_then(|l| label_to_code(kind, &l));
            if ok != Ok(card) {
                bad.push(format!("{kind}:{}", card.0));
            }
        }
    }
    check("label_round_trip", bad.is_empty(), format!("all codes of all kinds, failures {bad:?}"))
}

// rules

fn completion_never_returns_input() -> Check {
    let mut bad = 0;
    for a in 0..81 {
        for b in a + 1..81 {
            let c = complete_set(Card(a), Card(b)).unwrap();
            bad += usize::from(c == Card(a) || c == Card(b));
        }
    }
    for t in (0..64).map(Card).combinations(3) {
        let d = complete_quad(t[0], t[1], t[2]);
        bad += usize::from(d.map_or(true, |d| t.contains(&d)));
    }
    check("completion_never_returns_input", bad == 0, "all SET pairs and all EvenQuads triples")
}

fn quads_are_coplanar() -> Check {
    let cards: Vec<Card> = (0..64).map(Card).collect();
    let mut quads = 0;
    let mut bad = 0;
    for t in cards.iter().combinations(3) {
        let (a, b, c) = (*t[0], *t[1], *t[2]);
        let d = a ^ b ^ c;
        if d > c {
            quads += 1;
            bad += usize::from(d ^ a != (b ^ a) ^ (c ^ a));
        }
    }
    check("quads_are_coplanar", quads == 10416 && bad == 0, format!("{quads} quads, d-a = (b-a)+(c-a) fails {bad}"))
}

fn blue_sock_parity() -> Check {
    let blue: Vec<Card> = (1..64).map(Card).filter(|c| c.0 & 0b010000 != 0).collect();
    let mut rng = DeckRng::new(2);
    let splits = (0..1000)
        .filter(|_| {
            let pile = random_subset(&mut rng, &blue, 6);
            splits_into_two_matched_triples(&pile.try_into().unwrap())
        })
        .count();
    check("blue_sock_parity", splits == 0, format!("1000 six-card blue piles, {splits} split into two matched triples"))
}

fn minimal_match_sizes() -> Check {
    let mut rng = DeckRng::new(3);
    let socks = build_deck(DeckKind::Socks).unwrap().cards;
    let mut sizes = std::collections::BTreeSet::new();
    let mut piles = 0;
    while piles < 200 {
        let k = 6 + rng.below(5) as usize;
        let mut pile = random_subset(&mut rng, &socks, k);
        let x = xor_all(&pile);
        if x == Card::ZERO || pile.contains(&x) {
            continue;
        }
        pile.push(x);
        piles += 1;
        for mask in 1u32..1 << pile.len() {
            let sub: Vec<Card> = (0..pile.len()).filter(|i| mask >> i & 1 == 1).map(|i| pile[i]).collect();
            if sub.len() >= 3 && is_minimal_match(&sub) == Ok(true) {
                sizes.insert(sub.len());
            }
        }
    }
    let constructed = (3..=7).all(|n| construct_minimal_match(n).is_ok_and(|m| m.len() == n && is_minimal_match(&m) == Ok(true)));
    let ok = sizes.iter().all(|s| (3..=7).contains(s)) && constructed;
    check("minimal_match_sizes", ok, format!("minimal sub-matches of 200 random matches have sizes {sizes:?}; every size 3..=7 constructible"))
}

// probability

pub const TABLE_ONE: [(u32, &str); 16] = [
    (1, "0"),
    (3, "1/61"),
    (5, "56/3599"),
    (7, "1069/68381"),
    (9, "11752/752191"),
    (11, "56629/3624193"),
    (13, "962672/61611281"),
    (15, "6738743/431278967"),
    (17, "18630608/1192359497"),
    (19, "980559/62755763"),
    (21, "6023432/385499687"),
    (23, "246960751/15805487167"),
    (25, "246960728/15805487167"),
    (27, "9137547511/584803025179"),
    (29, "63962829472/4093621176253"),
    (31, "703591154207/45029832938783"),
];

fn table_one() -> Check {
    let table = ProbabilityTable::build();
    let bad: Vec<u32> = TABLE_ONE
        .iter()
        .filter(|(n, v)| table.get(*n as usize).map(|r| r.to_string()) != Some(v.to_string()))
        .map(|(n, _)| *n)
        .collect();
    check("table_one", bad.is_empty(), format!("16 odd rows up to 31, mismatches {bad:?}"))
}

fn closed_form_matches_recursion() -> Check {
    let table = ProbabilityTable::build();
    let bad: Vec<u32> = (1..=61)
        .step_by(2)
        .filter(|&n| match_probability_closed(n).ok().as_ref() != table.get(n as usize))
        .collect();
    check("closed_form_matches_recursion", bad.is_empty(), format!("odd n in 1..=61, mismatches {bad:?}"))
}

fn recursion_matches_subset_counts() -> Check {
    let table = ProbabilityTable::build();
    let counts = subset_sum_counts(&build_deck(DeckKind::Socks).unwrap(), 63).unwrap();
    let bad: Vec<usize> = (0..=63)
        .filter(|&n| counts.probability(n, Card::ZERO).ok().as_ref() != table.get(n))
        .collect();
    check("recursion_matches_subset_counts", bad.is_empty(), format!("n in 0..=63, mismatches {bad:?}"))
}

fn table_symmetry() -> Check {
    let t = ProbabilityTable::build();
    let v = t.values();
    let mirror = (0..=63).all(|n| v[n] == v[63 - n]);
    let pairs = (1..=31).all(|n| v[2 * n] == v[2 * n - 1]);
    check("table_symmetry", mirror && pairs, "P(n) = P(63-n) and P(2n) = P(2n-1)")
}

/// Fractions of n-subsets of all 64 codes (zero included) summing to zero.
fn anchor_failures(ns: impl Iterator<Item = usize>) -> Vec<usize> {
    let cards: Vec<Card> = (0..64).map(Card).collect();
    let counts = subset_sum_counts_in(Space::BINARY6, &cards, 64).unwrap();
    let sixty_fourth = Rational::ratio(1, 64);
    ns.filter(|&n| counts.probability(n, Card::ZERO).ok() != Some(sixty_fourth.clone())).collect()
}

fn anchor_odd() -> Check {
    let bad = anchor_failures((1..=63).step_by(2));
    check("anchor_odd", bad.is_empty(), format!("with the empty card, odd n-subsets match with probability 1/64; failures {bad:?}"))
}

fn anchor_every_n() -> Check {
    let bad = anchor_failures(1..=64);
    check(
        "anchor_every_n",
        bad.is_empty(),
        format!("with the empty card, n-subsets match with probability 1/64 for every n in 1..=64; failures {bad:?}"),
    )
}

fn complementary_piles() -> Check {
    let deck = build_deck(DeckKind::Set).unwrap().cards;
    let mut rng = DeckRng::new(4);
    let mut bad = 0;
    for i in 0..200 {
        let a_size = [10, 20, 27, 40][i % 4];
        let mut shuffled = deck.clone();
        rng.shuffle(&mut shuffled);
        let (a, b) = shuffled.split_at(a_size);
        let product = (2160 - a_size * (81 - a_size)) as u64 / 2;
        let want = complementary_identity(a_size as u32).unwrap();
        bad += usize::from(count_sets(a) + count_sets(b) != want || want != product);
    }
    // the 27 cards with first coordinate 0
    let sub: Vec<Card> = deck.iter().copied().filter(|c| c.0 < 27).collect();
    let rest: Vec<Card> = deck.iter().copied().filter(|c| c.0 >= 27).collect();
    let (sa, sb) = (count_sets(&sub), count_sets(&rest));
    check(
        "complementary_piles",
        bad == 0 && sa == 117 && sb == 234,
        format!("200 random partitions, {bad} mismatches; coordinate subdeck S_A = {sa}, S_B = {sb}"),
    )
}

fn sign_pattern() -> Check {
    let t = ProbabilityTable::build();
    let sixty_fourth = Rational::ratio(1, 64);
    let ok = (1..=61).step_by(2).enumerate().all(|(k, n)| {
        let q = t.get(n).unwrap() - &sixty_fourth;
        !q.is_zero() && q.is_negative() == (k % 2 == 0)
    });
    check("sign_pattern", ok, "P(n) - 1/64 alternates in sign over odd n, starting negative")
}

fn quad_census() -> Check {
    let full = count_quads(&(0..64).map(Card).collect::<Vec<_>>());
    let small = count_quads(&(0..16).map(Card).collect::<Vec<_>>());
    let dp = subset_sum_counts(&build_deck(DeckKind::Quads).unwrap(), 4).unwrap().count(4, Card::ZERO);
    let ok = full == 10416 && small == 140 && dp == BigUint::from(10416u32) && binomial(64, 4) == BigUint::from(635376u32);
    check("quad_census", ok, format!("{full} quads in 64 cards, {small} in 16, subset counts agree"))
}

// caps

fn cap_certificates() -> Check {
    let budget = Duration::from_secs(20);
    let mut parts = Vec::new();
    let mut ok = true;
    for dim in 1..=4 {
        match find_max_cap(dim, budget) {
            Ok(c) => {
                ok &= c.verify() && c.extension_blocked;
                parts.push(format!("Z_3^{dim}: {}", c.size()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("Z_3^{dim}: {e}"));
            }
        }
    }
    match find_noquad(budget) {
        Ok(c) => {
            ok &= c.verify() && c.extension_blocked && c.size() == 9 && c.extensions.len() == 55;
            parts.push(format!("noquad: {}", c.size()));
        }
        Err(e) => {
            ok = false;
            parts.push(format!("noquad: {e}"));
        }
    }
    check("cap_certificates", ok, format!("certificates re-verify, non-extendable ({})", parts.join(", ")))
}

fn pruned_matches_brute_force() -> Check {
    let sizes: Vec<(usize, usize)> = (1..=2)
        .map(|d| (find_max_cap(d, Duration::from_secs(5)).map_or(0, |c| c.size()), brute_force_max_cap(d)))
        .collect();
    check("pruned_matches_brute_force", sizes.iter().all(|(a, b)| a == b), format!("(search, brute force) for Z_3^1, Z_3^2: {sizes:?}"))
}

fn estimate_reproducible() -> Check {
    let a = noquad_probability_estimate(9, 100_000, 7);
    let b = noquad_probability_estimate(9, 100_000, 7);
    let ok = a.is_ok() && a == b;
    let frac = a.map(|e| e.fraction).unwrap_or(f64::NAN);
    check("estimate_reproducible", ok, format!("two runs with seed 7 agree bit for bit ({frac})"))
}

// planes

fn planes_pass() -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for q in [2, 3, 5, 7] {
        let deck = build_spotit_deck(q).unwrap();
        let r = verify_plane(&deck);
        ok &= r.passes();
        parts.push(format!("q={q}: {} cards x {}", r.card_count, deck.cards[0].len()));
    }
    check("planes_pass", ok, parts.join(", "))
}

fn plane_duality() -> Check {
    let ok = [2, 3, 5, 7].iter().all(|&q| {
        let deck = build_spotit_deck(q).unwrap();
        let plane = build_projective_plane(q).unwrap();
        verify_plane(&deck.transpose()).passes() && plane.lines_through_points().iter().all(|l| l.len() == q as usize + 1)
    });
    check("plane_duality", ok, "transposed decks pass for q = 2, 3, 5, 7")
}

fn plane_minus_a_card() -> Check {
    let deck = build_spotit_deck(7).unwrap();
    let ok = (0..deck.cards.len()).all(|i| verify_plane(&deck.without_card(i)).pair_property_holds());
    let mut dup = deck.clone();
    dup.cards.push(dup.cards[0].clone());
    let r = verify_plane(&dup);
    let caught = r.pair_failures.iter().any(|f| f.error() == Error::MultipleCommonSymbols(0, 57));
    check("plane_minus_a_card", ok && caught, "removing any card keeps the pair property; a duplicate is caught")
}

fn fano_lines() -> Check {
    let f = fano_socks_correspondence();
    let triples = f.line_of_triple.len();
    let lines: std::collections::BTreeSet<u32> = f.line_of_triple.iter().map(|(_, l)| *l).collect();
    let ok = triples == 7 && lines.len() == 7 && f.line_of_triple.iter().all(|(t, _)| xor_all(t) == Card::ZERO);
    check("fano_lines", ok, format!("{triples} Baby Socks matched triples onto {} distinct Fano lines", lines.len()))
}

// correspondence

fn partition_iff_zero_xor() -> Check {
    let mut bad = 0;
    let mut tried = 0;
    for len in 0..=7u32 {
        for idx in 0..4u32.pow(len) {
            let values: Vec<u32> = (0..len).map(|i| idx >> (2 * i) & 3).collect();
            let xor = values.iter().fold(0, |a, v| a ^ v);
            bad += usize::from(partition_values(&values).is_some() != (xor == 0));
            tried += 1;
        }
    }
    check("partition_iff_zero_xor", bad == 0, format!("{tried} value sequences up to length 7, {bad} disagreements"))
}

fn identity_origin() -> Check {
    let mut rng = DeckRng::new(5);
    let socks = build_deck(DeckKind::Socks).unwrap().cards;
    let bad = (0..2000)
        .filter(|_| {
            let k = 3 + rng.below(6) as usize;
            let pile = random_subset(&mut rng, &socks, k);
            is_socks_match(&pile, Origin::default()).map(|m| m.matched) != is_match(&pile)
        })
        .count();
    check("identity_origin", bad == 0, format!("2000 random piles, origin 000000 agrees with is_match: {bad} disagreements"))
}

fn origin_covariance() -> Check {
    let mut rng = DeckRng::new(6);
    let all: Vec<Card> = (0..64).map(Card).collect();
    let mut bad = 0;
    let mut matched = 0;
    for _ in 0..2000 {
        let origin = Card(rng.below(64) as u32);
        let pool: Vec<Card> = all.iter().copied().filter(|&c| c != origin).collect();
        let k = 3 + rng.below(5) as usize;
        let mut pile = random_subset(&mut rng, &pool, k - 1);
        // force roughly half the samples to be matches
        let last = xor_all(&pile) ^ if rng.below(2) == 0 { origin } else { Card::ZERO };
        if last != origin && !pile.contains(&last) {
            pile.push(last);
        }
        let shifted: Vec<Card> = pile.iter().map(|&c| c ^ origin).collect();
        let m = is_socks_match(&pile, Origin(origin)).unwrap();
        matched += usize::from(m.matched);
        bad += usize::from(Ok(m.matched) != is_match(&shifted));
        if let Some(rows) = m.distribution {
            let table = enumerate_table3(pile.len() as u32).unwrap();
            bad += rows.iter().filter(|r| !table.contains(r)).count();
        }
    }
    check("origin_covariance", bad == 0, format!("2000 piles with random origins ({matched} matched), {bad} disagreements"))
}

fn table3() -> Check {
    let rows: Vec<_> = (3..=7).flat_map(|n| enumerate_table3(n).unwrap().into_iter().map(move |r| (n, r))).collect();
    let ok = rows.len() == 10
        && rows.iter().all(|(n, r)| r.cards() == *n && r.single_zero <= 1 && r.triple_diff <= 1);
    check("table3", ok, format!("{} rows, each with s + 2d + 3t = n", rows.len()))
}

fn correspondence_examples() -> Check {
    let r = correspond(Card(0b011010), Origin::default()).unwrap();
    let seven = seven_card_subspace();
    let m = is_socks_match(&seven, Origin::default()).unwrap();
    let quads = seven.iter().combinations(4).filter(|q| q[0].0 ^ q[1].0 ^ q[2].0 ^ q[3].0 == 0).count();
    let ok = r.quads == "2 Yellow Circles" && r.socks == "blue, green, purple" && m.matched && quads == 7;
    check("correspondence_examples", ok, format!("011010 = {} / {}; 7-card subspace matched with {quads} quads", r.quads, r.socks))
}

// sim

fn all_variants(seed: u64) -> Vec<GameConfig> {
    vec![
        GameConfig::new(Game::Set, seed),
        GameConfig::new(Game::Socks, seed),
        GameConfig::new(Game::Socks, seed).with_variant(Variant::Official),
        GameConfig::new(Game::Quads, seed),
        GameConfig::new(Game::SpotIt, seed).with_players(3),
        GameConfig::new(Game::SpotIt, seed).with_variant(Variant::Well).with_players(4),
    ]
}

fn replay_reproduces() -> Check {
    let mut bad = 0;
    for seed in 0..20 {
        for c in all_variants(seed) {
            let log = simulate(&c).unwrap();
            let again = GameLog::from_json(&log.to_json());
            let ok = again.as_ref().is_ok_and(|l| *l == log)
                && again.and_then(|l| l.replay()).is_ok_and(|r| r.final_table == log.final_table && r.scores == log.scores)
                && simulate(&c).unwrap().to_json() == log.to_json();
            bad += usize::from(!ok);
        }
    }
    check("replay_reproduces", bad == 0, format!("120 games serialized, replayed and rerun: {bad} mismatches"))
}

fn claims_are_legal() -> Check {
    let mut claims = 0;
    let mut bad = 0;
    for seed in 100..150 {
        for c in all_variants(seed) {
            for claim in simulate(&c).unwrap().claims() {
                claims += 1;
                bad += usize::from(!claim_is_legal(&c, claim));
            }
        }
    }
    check("claims_are_legal", bad == 0, format!("{claims} claims re-checked, {bad} illegal"))
}

fn extended_socks_end_state() -> Check {
    let mut bad = 0;
    for seed in 0..1000 {
        let log = simulate(&GameConfig::new(Game::Socks, seed)).unwrap();
        let at_end = log.replay().ok().and_then(|r| r.table_at_deck_end);
        let ok = xor_all(&log.final_table) == Card::ZERO && at_end.is_some_and(|t| xor_all(&t) == Card::ZERO);
        bad += usize::from(!ok);
    }
    check("extended_socks_end_state", bad == 0, format!("1000 games, table matched when the deck ran out and at the end: {bad} failures"))
}

fn official_socks_claims() -> Check {
    let mut bad = 0;
    let mut claims = 0;
    for seed in 0..200 {
        let log = simulate(&GameConfig::new(Game::Socks, seed).with_variant(Variant::Official)).unwrap();
        for claim in log.claims() {
            claims += 1;
            let pairs = (0..6).all(|bit| matches!(claim.iter().filter(|c| c.0 >> bit & 1 == 1).count(), 0 | 2));
            bad += usize::from(claim.len() != 3 || !pairs);
        }
    }
    check("official_socks_claims", bad == 0, format!("{claims} triples, every sock color 0 or 2 times: {bad} failures"))
}

fn spotit_turns() -> Check {
    let mut turns = 0;
    let mut bad = 0;
    for seed in 0..100 {
        for c in all_variants(seed).into_iter().filter(|c| c.game == Game::SpotIt) {
            let log = simulate(&c).unwrap();
            let deck = build_spotit_deck(7).unwrap();
            for e in &log.events {
                if let Event::Turn { center, matches, .. } = e {
                    for m in matches {
                        turns += 1;
                        let shared: Vec<u32> = deck.cards[m.card.0 as usize]
                            .iter()
                            .filter(|s| deck.cards[center.0 as usize].contains(s))
                            .copied()
                            .collect();
                        bad += usize::from(shared != [m.symbol]);
                    }
                }
            }
        }
    }
    check("spotit_turns", bad == 0, format!("{turns} player-card comparisons, each exactly one common symbol: {bad} failures"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn fast_suites_pass() {
        for suite in [Suite::Decks, Suite::Planes, Suite::Correspondence] {
            for c in suite.run() {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn anchor_holds_for_odd_n_only() {
        assert!(anchor_odd().passed);
        let every = anchor_every_n();
        assert!(!every.passed);
        assert!(every.detail.contains("[2, 4, 6"), "{}", every.detail);
    }
}
