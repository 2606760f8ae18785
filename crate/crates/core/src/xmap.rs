//! Socks and EvenQuads share Z_2^6: a Socks card is an EvenQuads card read
//! through an origin card. The card `c` carries the socks `c ^ origin`, and
//! the origin itself is the empty card, which is not in the Socks deck.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{xor_all, Card};
use crate::decks::{card_label, quad_attribute, DeckKind};
use crate::error::{out_of_range, Error, Result};
use crate::rules::is_minimal_match;

/// The EvenQuads card whose socks reading is empty.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Origin(pub Card);

fn check_code(card: Card) -> Result<()> {
    if card.0 >= 64 {
        return Err(Error::InvalidCode(card.0));
    }
    Ok(())
}

/// EvenQuads card holding a Socks card.
pub fn socks_to_quads(sock: Card, origin: Origin) -> Result<Card> {
    check_code(sock)?;
    check_code(origin.0)?;
    if sock == Card::ZERO {
        return Err(Error::ZeroCard);
    }
    Ok(sock ^ origin.0)
}

/// Socks card read off an EvenQuads card. The origin card has no socks.
pub fn quads_to_socks(quad: Card, origin: Origin) -> Result<Card> {
    check_code(quad)?;
    check_code(origin.0)?;
    if quad == origin.0 {
        return Err(Error::ZeroCard);
    }
    Ok(quad ^ origin.0)
}

/// Both readings of one EvenQuads card.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reading {
    pub code: Card,
    pub bits: String,
    pub quads: String,
    pub socks_code: Card,
    pub socks: String,
}

pub fn correspond(code: Card, origin: Origin) -> Result<Reading> {
    check_code(code)?;
    check_code(origin.0)?;
    let socks_code = code ^ origin.0;
    Ok(Reading {
        code,
        bits: code.bits(6),
        quads: card_label(DeckKind::Quads, code)?.to_string(),
        socks_code,
        socks: card_label(DeckKind::Socks, socks_code)?.to_string(),
    })
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  {}  socks: {}", self.bits, self.quads, self.socks)
    }
}

/// One attribute of a pile split into single-zero, double-same and
/// triple-diff-nonzero groups, with two single-zeros merged into a
/// double-same so that at most one single-zero and one triple remain.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupPartition {
    pub single_zero: u32,
    pub double_same: u32,
    pub triple_diff: u32,
}

impl GroupPartition {
    pub fn new(single_zero: u32, double_same: u32, triple_diff: u32) -> GroupPartition {
        GroupPartition {
            single_zero,
            double_same,
            triple_diff,
        }
    }

    pub fn cards(&self) -> u32 {
        self.single_zero + 2 * self.double_same + 3 * self.triple_diff
    }
}

impl fmt::Display for GroupPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.single_zero, self.double_same, self.triple_diff)
    }
}

/// Greedy split of two-bit attribute values: zeros first, then equal pairs,
/// and whatever is left must be exactly one each of 1, 2 and 3.
pub fn partition_values(values: &[u32]) -> Option<GroupPartition> {
    let mut counts = [0u32; 4];
    for &v in values {
        counts[(v & 3) as usize] += 1;
    }
    let zeros = counts[0];
    let pairs: u32 = counts[1..].iter().map(|c| c / 2).sum();
    let left: Vec<u32> = counts[1..].iter().map(|c| c % 2).collect();
    if left[0] != left[1] || left[1] != left[2] {
        return None;
    }
    Some(GroupPartition::new(zeros % 2, pairs + zeros / 2, left[0]))
}

/// Partition of one attribute (0 = number, 1 = color, 2 = shape).
pub fn classify_attribute(cards: &[Card], attribute: usize) -> Result<Option<GroupPartition>> {
    if attribute > 2 {
        return Err(out_of_range("attribute", attribute, "0..=2"));
    }
    for &c in cards {
        check_code(c)?;
    }
    let values: Vec<u32> = cards.iter().map(|&c| quad_attribute(c, attribute)).collect();
    Ok(partition_values(&values))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocksMatch {
    pub matched: bool,
    pub minimal: bool,
    /// Per-attribute distribution (number, color, shape), reported for
    /// matched sets of 3 to 7 cards.
    pub distribution: Option<[GroupPartition; 3]>,
}

/// Whether EvenQuads cards, read through `origin`, hold a matched set of socks.
pub fn is_socks_match(cards: &[Card], origin: Origin) -> Result<SocksMatch> {
    check_code(origin.0)?;
    let mut seen = [false; 64];
    for &c in cards {
        check_code(c)?;
        if c == origin.0 {
            return Err(Error::OriginInSet(c));
        }
        if std::mem::replace(&mut seen[c.0 as usize], true) {
            return Err(Error::DuplicateCards(c));
        }
    }
    let translated: Vec<Card> = cards.iter().map(|&c| c ^ origin.0).collect();
    let matched = !cards.is_empty() && xor_all(&translated) == Card::ZERO;
    if !matched {
        return Ok(SocksMatch {
            matched,
            minimal: false,
            distribution: None,
        });
    }
    let minimal = is_minimal_match(&translated)?;
    let distribution = if (3..=7).contains(&cards.len()) {
        let mut rows = [GroupPartition::default(); 3];
        for (attr, row) in rows.iter_mut().enumerate() {
            *row = classify_attribute(&translated, attr)?.expect("a zero XOR always partitions");
        }
        Some(rows)
    } else {
        None
    };
    Ok(SocksMatch {
        matched,
        minimal,
        distribution,
    })
}

/// All normalized distributions of `n` cards, sorted.
pub fn enumerate_table3(n: u32) -> Result<Vec<GroupPartition>> {
    if !(3..=7).contains(&n) {
        return Err(out_of_range("n", n, "3..=7"));
    }
    let mut rows = Vec::new();
    for s in 0..=1 {
        for t in 0..=1 {
            let rest = n as i64 - s as i64 - 3 * t as i64;
            if rest >= 0 && rest % 2 == 0 {
                rows.push(GroupPartition::new(s, rest as u32 / 2, t));
            }
        }
    }
    rows.sort();
    Ok(rows)
}

/// The seven nonzero points of the subspace spanned by 010000, 000100 and
/// 000001: every attribute takes only the values 0 and 1.
pub fn seven_card_subspace() -> Vec<Card> {
    let basis = [0b010000, 0b000100, 0b000001];
    (1u32..8)
        .map(|mask| Card((0..3).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc ^ basis[i])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::count_quads;
    use crate::rules::is_match;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn bits(s: &str) -> Card {
        Card::from_bits(s).unwrap()
    }

    #[test]
    fn readings() {
        let r = correspond(bits("011010"), Origin::default()).unwrap();
        assert_eq!(r.quads, "2 Yellow Circles");
        assert_eq!(r.socks, "blue, green, purple");
        let r = correspond(Card::ZERO, Origin::default()).unwrap();
        assert_eq!(r.quads, "1 Red Square");
        assert_eq!(r.socks, "empty");
        let r = correspond(bits("111111"), Origin::default()).unwrap();
        assert_eq!(r.quads, "4 Blue Spirals");
        assert_eq!(r.socks, "red, blue, green, pink, purple, yellow");
    }

    #[test]
    fn translation_round_trip() {
        for o in 0..64 {
            let origin = Origin(Card(o));
            for s in 1..64 {
                let q = socks_to_quads(Card(s), origin).unwrap();
                assert_eq!(quads_to_socks(q, origin).unwrap(), Card(s));
            }
            assert_eq!(quads_to_socks(Card(o), origin), Err(Error::ZeroCard));
        }
        assert_eq!(socks_to_quads(Card::ZERO, Origin::default()), Err(Error::ZeroCard));
        assert!(socks_to_quads(Card(64), Origin::default()).is_err());
    }

    #[test]
    fn partitions() {
        let p = partition_values(&[0, 0, 1, 1]).unwrap();
        assert_eq!(p, GroupPartition::new(0, 2, 0));
        assert_eq!(partition_values(&[1, 2, 3]).unwrap(), GroupPartition::new(0, 0, 1));
        assert_eq!(partition_values(&[0, 1, 2]), None);
        // two triples normalize to three pairs
        assert_eq!(partition_values(&[1, 2, 3, 1, 2, 3]).unwrap(), GroupPartition::new(0, 3, 0));
        assert!(classify_attribute(&[Card(1)], 3).is_err());
    }

    #[test]
    fn table3_rows() {
        let rows = |n| enumerate_table3(n).unwrap();
        let g = GroupPartition::new;
        assert_eq!(rows(3), vec![g(0, 0, 1), g(1, 1, 0)]);
        assert_eq!(rows(4), vec![g(0, 2, 0), g(1, 0, 1)]);
        assert_eq!(rows(5), vec![g(0, 1, 1), g(1, 2, 0)]);
        assert_eq!(rows(6), vec![g(0, 3, 0), g(1, 1, 1)]);
        assert_eq!(rows(7), vec![g(0, 2, 1), g(1, 3, 0)]);
        assert_eq!((3..=7).map(|n| rows(n).len()).sum::<usize>(), 10);
        assert!(enumerate_table3(2).is_err());
        assert!(enumerate_table3(8).is_err());
    }

    #[test]
    fn every_quad_is_a_socks_match() {
        let origin = Origin(bits("100110"));
        let cards: Vec<Card> = (0..64).map(Card).filter(|&c| c != origin.0).collect();
        for q in cards.iter().combinations(4).step_by(97) {
            let q: Vec<Card> = q.into_iter().copied().collect();
            let quad = xor_all(&q) == Card::ZERO;
            assert_eq!(is_socks_match(&q, origin).unwrap().matched, quad);
        }
    }

    #[test]
    fn three_cards_completed_by_origin() {
        let origin = Origin(bits("011010"));
        let (a, b, c) = (bits("000001"), bits("110000"), bits("000111"));
        let d = a ^ b ^ c;
        let m = is_socks_match(&[a, b, c], Origin(d)).unwrap();
        assert!(m.matched && m.minimal);
        assert!(!is_socks_match(&[a, b, c], origin).unwrap().matched);
        assert_eq!(is_socks_match(&[a, origin.0], origin), Err(Error::OriginInSet(origin.0)));
    }

    #[test]
    fn seven_card_subspace_has_seven_quads() {
        let cards = seven_card_subspace();
        assert_eq!(cards.len(), 7);
        let m = is_socks_match(&cards, Origin::default()).unwrap();
        assert!(m.matched);
        assert_eq!(m.distribution, Some([GroupPartition::new(1, 3, 0); 3]));
        let brute = cards.iter().combinations(4).filter(|q| q[0].0 ^ q[1].0 ^ q[2].0 ^ q[3].0 == 0).count();
        assert_eq!(brute, 7);
        assert_eq!(count_quads(&cards), 7);
    }

    proptest! {
        #[test]
        fn partition_iff_xor_zero(values in prop::collection::vec(0u32..4, 0..=7)) {
            let xor = values.iter().fold(0, |a, v| a ^ v);
            let p = partition_values(&values);
            prop_assert_eq!(p.is_some(), xor == 0);
            if let Some(p) = p {
                prop_assert_eq!(p.cards() as usize, values.len());
                prop_assert!(p.single_zero <= 1 && p.triple_diff <= 1);
            }
        }

        #[test]
        fn origin_covariance(
            set in prop::collection::btree_set(1u32..64, 3..=7),
            origin in 0u32..64,
        ) {
            let cards: Vec<Card> = set.into_iter().map(Card).collect();
            prop_assume!(!cards.contains(&Card(origin)));
            let m = is_socks_match(&cards, Origin(Card(origin))).unwrap();
            let shifted: Vec<Card> = cards.iter().map(|&c| c ^ Card(origin)).collect();
            prop_assert_eq!(m.matched, is_match(&shifted).unwrap());
            if origin == 0 {
                prop_assert_eq!(m.matched, is_match(&cards).unwrap());
            }
            if let Some(rows) = m.distribution {
                let table = enumerate_table3(cards.len() as u32).unwrap();
                for row in rows {
                    prop_assert!(table.contains(&row));
                }
            }
        }
    }
}
