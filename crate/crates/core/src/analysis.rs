//! Exact probabilities and counts.
//!
//! `P(n)` is the probability that `n` distinct random Socks cards form a
//! matched set. It is computed three ways that are checked against each other:
//! the recursion `P(n+1) = (1 - P(n) - n P(n-1)) / (63 - n)`, the double
//! factorial closed form for odd `n`, and a subset-sum dynamic program over
//! the group Z_2^6 that counts subsets directly.
//!
//! The table starts from `P(0) = 1`: the empty pile has an even number of every
//! sock. The recursion then yields `P(1) = P(2) = 0`, and the table is
//! symmetric under `n -> 63 - n` at every index including the ends.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{binomial, double_factorial, Card, Rational, Space};
use crate::decks::Deck;
use crate::error::{out_of_range, Error, Result};

pub const SOCKS_DECK_SIZE: u32 = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityTable {
    values: Vec<Rational>,
}

impl ProbabilityTable {
    pub fn build() -> ProbabilityTable {
        let mut values: Vec<Rational> = Vec::with_capacity(64);
        values.push(Rational::one());
        for n in 0..=30u32 {
            let prev = if n == 0 {
                Rational::zero()
            } else {
                &Rational::integer(n as i64) * &values[n as usize - 1]
            };
            let numer = Rational::one() - values[n as usize].clone() - prev;
            let next = numer
                .checked_div(&Rational::integer((SOCKS_DECK_SIZE - n) as i64))
                .expect("63 - n is positive");
            values.push(next);
        }
        for n in 32..=63usize {
            values.push(values[63 - n].clone());
        }
        ProbabilityTable { values }
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

pub fn match_probability(n: u32) -> Result<Rational> {
    if n > SOCKS_DECK_SIZE {
        return Err(out_of_range("n", n, "0..=63"));
    }
    Ok(ProbabilityTable::build().values[n as usize].clone())
}

/// `P(2k+1) = 1/64 - (-1)^k (2k+1)!! (61-2k)!! / (64 * 61!!)`.
pub fn match_probability_closed(n: u32) -> Result<Rational> {
    if n % 2 == 0 {
        return Err(Error::EvenIndex(n));
    }
    if !(1..=61).contains(&n) {
        return Err(out_of_range("n", n, "odd 1..=61"));
    }
    let k = (n - 1) / 2;
    let term = Rational::from_big(
        double_factorial(n as i64) * double_factorial(61 - 2 * k as i64),
        BigUint::from(64u32) * double_factorial(61),
    )?;
    let base = Rational::ratio(1, 64);
    Ok(if k % 2 == 0 { base - term } else { base + term })
}

/// One row of the classic table: exact value, an 11-place decimal and the
/// deviation from 1/64.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub exact: Rational,
    pub decimal: String,
    pub minus_one_64th: String,
}

/// Rows for odd `n` up to `max` (or every `n` when `all` is set). With
/// `closed_form` the exact column comes from the closed form instead of the
/// recursion.
pub fn probability_rows(max: u32, all: bool, closed_form: bool) -> Result<Vec<TableRow>> {
    if max > SOCKS_DECK_SIZE {
        return Err(out_of_range("max", max, "0..=63"));
    }
    let table = ProbabilityTable::build();
    let anchor = Rational::ratio(1, 64);
    let mut rows = Vec::new();
    for n in 0..=max {
        if !all && n % 2 == 0 {
            continue;
        }
        let exact = if closed_form && n % 2 == 1 && n <= 61 {
            match_probability_closed(n)?
        } else {
            table.values[n as usize].clone()
        };
        rows.push(TableRow {
            n,
            decimal: exact.to_decimal(11),
            minus_one_64th: (&exact - &anchor).to_decimal(11),
            exact,
        });
    }
    Ok(rows)
}

/// Counts of k-subsets of a deck by their group sum.
#[derive(Debug, Clone)]
pub struct SubsetSumCounts {
    pub space: Space,
    pub deck_size: usize,
    /// `counts[k][g]`: number of k-subsets summing to the element with code g.
    counts: Vec<Vec<BigUint>>,
}

impl SubsetSumCounts {
    pub fn max_k(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, k: usize, target: Card) -> BigUint {
        self.counts
            .get(k)
            .and_then(|row| row.get(target.0 as usize))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self, k: usize) -> BigUint {
        self.counts.get(k).map(|row| row.iter().sum()).unwrap_or_else(BigUint::zero)
    }

    /// `count(k, target) / C(deck_size, k)`.
    pub fn probability(&self, k: usize, target: Card) -> Result<Rational> {
        Rational::from_big(self.count(k, target), binomial(self.deck_size as u64, k as u64))
    }
}

/// Dynamic program over cards and group elements: after processing a card
/// `c`, every k-subset either skips `c` or extends a (k-1)-subset by it.
pub fn subset_sum_counts(deck: &Deck, max_k: usize) -> Result<SubsetSumCounts> {
    let space = deck
        .kind
        .space()
        .ok_or_else(|| Error::UnsupportedDeck(deck.kind.to_string()))?;
    subset_sum_counts_in(space, &deck.cards, max_k)
}

/// Same as [`subset_sum_counts`] for an arbitrary pile in a given space.
pub fn subset_sum_counts_in(space: Space, cards: &[Card], max_k: usize) -> Result<SubsetSumCounts> {
    if let Some(c) = cards.iter().find(|c| !space.contains(**c)) {
        return Err(Error::InvalidCode(c.0));
    }
    let size = space.size() as usize;
    let max_k = max_k.min(cards.len());
    let add = space.addition_table();
    let mut counts = vec![vec![BigUint::zero(); size]; max_k + 1];
    counts[0][0] = BigUint::one();
    for (i, &card) in cards.iter().enumerate() {
        let c = card.0 as usize;
        for k in (1..=max_k.min(i + 1)).rev() {
            let (lower, upper) = counts.split_at_mut(k);
            let (from, to) = (&lower[k - 1], &mut upper[0]);
            for (g, n) in from.iter().enumerate() {
                if !n.is_zero() {
                    to[add[g * size + c] as usize] += n;
                }
            }
        }
    }
    Ok(SubsetSumCounts {
        space,
        deck_size: cards.len(),
        counts,
    })
}

fn membership(pile: &[Card], universe: usize) -> (Vec<Card>, Vec<bool>) {
    let mut sorted: Vec<Card> = pile.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut present = vec![false; universe];
    for c in &sorted {
        if let Some(slot) = present.get_mut(c.0 as usize) {
            *slot = true;
        }
    }
    (sorted, present)
}

/// Number of sets inside a pile of SET cards: each set is counted once, from
/// its two smallest cards.
pub fn count_sets(pile: &[Card]) -> u64 {
    let s = Space::SET;
    let (sorted, present) = membership(pile, 81);
    let mut count = 0;
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            let c = s.neg(s.add(a, b));
            if c > b && present[c.0 as usize] {
                count += 1;
            }
        }
    }
    count
}

/// Number of quads (four cards XOR-ing to zero) inside a pile of binary codes.
pub fn count_quads(pile: &[Card]) -> u64 {
    let universe = pile.iter().map(|c| c.0 as usize + 1).max().unwrap_or(0).next_power_of_two();
    let (sorted, present) = membership(pile, universe);
    let mut count = 0;
    for (i, &a) in sorted.iter().enumerate() {
        for (j, &b) in sorted.iter().enumerate().skip(i + 1) {
            for &c in &sorted[j + 1..] {
                let d = a ^ b ^ c;
                if d > c && present.get(d.0 as usize).copied().unwrap_or(false) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// `S_A + S_B` for complementary piles of the SET deck,
/// `(|A|^2 - 81|A| + 2160) / 2`.
pub fn complementary_identity(size_a: u32) -> Result<u64> {
    if size_a > 81 {
        return Err(out_of_range("|A|", size_a, "0..=81"));
    }
    let a = size_a as i64;
    Ok(((a * a - 81 * a + 2160) / 2) as u64)
}

/// The same sum in the symmetric form `(2160 - |A| |B|) / 2`.
pub fn complementary_identity_product(size_a: u32) -> Result<u64> {
    if size_a > 81 {
        return Err(out_of_range("|A|", size_a, "0..=81"));
    }
    let (a, b) = (size_a as u64, 81 - size_a as u64);
    Ok((2160 - a * b) / 2)
}

/// Probability that four random cards of the `m`-attribute EvenQuads deck
/// form a quad, `1 / (4^m - 3)`.
pub fn quad_probability(m: u32) -> Result<Rational> {
    let size = quad_deck_size(m)?;
    Rational::from_big(BigUint::one(), BigUint::from(size - 3))
}

/// Number of quads in the `m`-attribute deck, `C(4^m, 4) / (4^m - 3)`.
pub fn total_quads(m: u32) -> Result<BigUint> {
    let size = quad_deck_size(m)?;
    Ok(binomial(size, 4) / BigUint::from(size - 3))
}

fn quad_deck_size(m: u32) -> Result<u64> {
    if !(1..=31).contains(&m) {
        return Err(out_of_range("m", m, "1..=31"));
    }
    Ok(4u64.pow(m))
}

/// Two SET cards leave 79, exactly one of which completes the set.
pub fn set_probability() -> Rational {
    Rational::ratio(1, 81 - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decks::{build_deck, DeckKind};
    use itertools::Itertools;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(match_probability(3).unwrap(), r("1/61"));
        assert_eq!(match_probability(4).unwrap(), r("1/61"));
        assert_eq!(match_probability(5).unwrap(), r("56/3599"));
        assert_eq!(match_probability(31).unwrap(), r("703591154207/45029832938783"));
        assert_eq!(match_probability(1).unwrap(), Rational::zero());
        assert_eq!(match_probability(2).unwrap(), Rational::zero());
        assert_eq!(match_probability(63).unwrap(), Rational::one());
        assert!(match_probability(64).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(match_probability_closed(1).unwrap(), Rational::zero());
        assert_eq!(match_probability_closed(3).unwrap(), r("1/61"));
        assert_eq!(match_probability_closed(29).unwrap(), r("63962829472/4093621176253"));
        assert_eq!(match_probability_closed(4), Err(Error::EvenIndex(4)));
        assert!(match_probability_closed(63).is_err());
    }

    #[test]
    fn closed_form_agrees_with_recursion() {
        let table = ProbabilityTable::build();
        for n in (1..=61).step_by(2) {
            assert_eq!(&match_probability_closed(n).unwrap(), table.get(n as usize).unwrap(), "n={n}");
        }
    }

    #[test]
    fn table_symmetries() {
        let t = ProbabilityTable::build();
        for n in 0..=63 {
            assert_eq!(t.get(n), t.get(63 - n));
        }
        for n in 1..=31 {
            assert_eq!(t.get(2 * n), t.get(2 * n - 1));
        }
    }

    #[test]
    fn deviation_signs_alternate() {
        let t = ProbabilityTable::build();
        let anchor = Rational::ratio(1, 64);
        for k in 0..=30usize {
            let dev = t.get(2 * k + 1).unwrap() - &anchor;
            assert_eq!(dev.is_negative(), k % 2 == 0, "n={}", 2 * k + 1);
        }
    }

    #[test]
    fn table_rows_format() {
        let rows = probability_rows(31, false, false).unwrap();
        assert_eq!(rows.len(), 16);
        assert_eq!(rows[1].decimal, "0.01639344262");
        assert_eq!(rows[1].minus_one_64th, "0.00076844262");
        assert_eq!(rows[0].minus_one_64th, "-0.01562500000");
        assert_eq!(rows[2].minus_one_64th, "-0.00006512226");
        let closed = probability_rows(31, false, true).unwrap();
        assert_eq!(rows, closed);
    }

    #[test]
    fn subset_counts_examples() {
        let socks = build_deck(DeckKind::Socks).unwrap();
        let counts = subset_sum_counts(&socks, 63).unwrap();
        assert_eq!(counts.count(3, Card::ZERO), BigUint::from(651u32));
        assert_eq!(counts.probability(3, Card::ZERO).unwrap(), r("1/61"));
        assert_eq!(counts.count(2, Card::ZERO), BigUint::zero());
        for k in 0..=63 {
            assert_eq!(counts.total(k), binomial(63, k as u64));
        }
        let quads = build_deck(DeckKind::Quads).unwrap();
        let counts = subset_sum_counts(&quads, 4).unwrap();
        assert_eq!(counts.count(4, Card::ZERO), BigUint::from(10416u32));
        let spotit = build_deck(DeckKind::SpotIt(2)).unwrap();
        assert!(matches!(subset_sum_counts(&spotit, 3), Err(Error::UnsupportedDeck(_))));
    }

    #[test]
    fn subset_counts_match_brute_force_on_small_space() {
        let space = Space::new(3, 2);
        let cards: Vec<Card> = (0..9).map(Card).collect();
        let counts = subset_sum_counts_in(space, &cards, 9).unwrap();
        for k in 0..=9 {
            for g in 0..9 {
                let brute = cards
                    .iter()
                    .combinations(k)
                    .filter(|s| space.sum_codes(s.iter().copied()) == Card(g))
                    .count();
                assert_eq!(counts.count(k, Card(g)), BigUint::from(brute), "k={k} g={g}");
            }
        }
    }

    #[test]
    fn set_counts() {
        let deck = build_deck(DeckKind::Set).unwrap();
        assert_eq!(count_sets(&deck.cards), 1080);
        let sub: Vec<Card> = deck.cards.iter().copied().filter(|c| c.0 % 3 == 0).collect();
        assert_eq!(sub.len(), 27);
        assert_eq!(count_sets(&sub), 117);
        assert_eq!(count_sets(&[Card(0), Card(1)]), 0);
        assert_eq!(count_sets(&[]), 0);
    }

    #[test]
    fn set_probability_cross_checks() {
        assert_eq!(set_probability(), r("1/79"));
        let total = Rational::from_big(BigUint::from(1080u32), binomial(81, 3)).unwrap();
        assert_eq!(total, set_probability());
        let through_zero = count_sets_through(Card(0));
        assert_eq!(through_zero, 40);
        // a random pair of the other 80 cards is a set with the fixed card
        let p = Rational::from_big(BigUint::from(through_zero), binomial(80, 2)).unwrap();
        assert_eq!(p, r("1/79"));
        // every set has three cards, each on 40 sets
        assert_eq!(81 * through_zero / 3, 1080);
    }

    fn count_sets_through(card: Card) -> u64 {
        let deck = build_deck(DeckKind::Set).unwrap();
        deck.cards
            .iter()
            .copied()
            .tuple_combinations()
            .filter(|&(a, b)| a != card && b != card && crate::rules::is_set(card, a, b).unwrap())
            .count() as u64
    }

    #[test]
    fn complementary_examples() {
        assert_eq!(complementary_identity(27).unwrap(), 351);
        assert_eq!(complementary_identity(27).unwrap() - 117, 234);
        assert_eq!(complementary_identity(20).unwrap(), 470);
        assert_eq!(complementary_identity(0).unwrap(), 1080);
        for a in 0..=81 {
            assert_eq!(complementary_identity(a), complementary_identity_product(a));
        }
        assert!(complementary_identity(82).is_err());
    }

    #[test]
    fn quad_formulas() {
        assert_eq!(quad_probability(3).unwrap(), r("1/61"));
        assert_eq!(total_quads(3).unwrap(), BigUint::from(10416u32));
        assert_eq!(quad_probability(1).unwrap(), Rational::one());
        assert_eq!(total_quads(1).unwrap(), BigUint::one());
        assert_eq!(quad_probability(2).unwrap(), r("1/13"));
        assert_eq!(total_quads(2).unwrap(), BigUint::from(140u32));
        assert!(quad_probability(0).is_err());
    }

    #[test]
    fn quad_counts_by_enumeration() {
        let small: Vec<Card> = (0..16).map(Card).collect();
        let brute = small
            .iter()
            .tuple_combinations()
            .filter(|(a, b, c, d)| (**a ^ **b ^ **c ^ **d) == Card::ZERO)
            .count();
        assert_eq!(brute, 140);
        assert_eq!(count_quads(&small), 140);
        let full: Vec<Card> = (0..64).map(Card).collect();
        assert_eq!(count_quads(&full), 10416);
        let tiny: Vec<Card> = (0..4).map(Card).collect();
        assert_eq!(count_quads(&tiny), 1);
    }
}
