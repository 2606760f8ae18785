//! Game predicates and completions.
//!
//! All four games reduce to "the codes sum to zero" in their group: three SET
//! cards in F_3^4, any number of Socks cards or four EvenQuads cards under XOR
//! in F_2^6. Spot It! is the odd one out and is handled through shared symbols.
//!
//! Inputs with repeated cards are rejected with [`Error::DuplicateCards`].

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::{xor_all, Card, Space};
use crate::decks::{quad_attribute, DeckKind};
use crate::error::{out_of_range, Error, Result};
use crate::projective::{shared_symbols, SpotItDeck};

fn check_cards(kind: DeckKind, cards: &[Card]) -> Result<()> {
    for &c in cards {
        if !kind.is_valid_code(c) {
            return Err(if kind == DeckKind::Socks && c == Card::ZERO {
                Error::ZeroCard
            } else {
                Error::InvalidCode(c.0)
            });
        }
    }
    let mut sorted = cards.to_vec();
    sorted.sort_unstable();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::DuplicateCards(w[0])),
        None => Ok(()),
    }
}

pub fn is_set(a: Card, b: Card, c: Card) -> Result<bool> {
    check_cards(DeckKind::Set, &[a, b, c])?;
    Ok(Space::SET.sum_codes(&[a, b, c]) == Card::ZERO)
}

/// The unique third card of the set through `a` and `b`, namely `-(a + b)`.
pub fn complete_set(a: Card, b: Card) -> Result<Card> {
    check_cards(DeckKind::Set, &[a, b])?;
    let s = Space::SET;
    Ok(s.neg(s.add(a, b)))
}

/// A Socks match: at least three distinct nonzero cards whose XOR is zero.
pub fn is_match(cards: &[Card]) -> Result<bool> {
    check_cards(DeckKind::Socks, cards)?;
    Ok(cards.len() >= 3 && xor_all(cards) == Card::ZERO)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompletionResult {
    /// Adding this card (absent from the input) makes a match.
    Add(Card),
    /// Removing this card (present in the input) leaves a match.
    Remove(Card),
    AlreadyMatched,
}

pub fn complete_match(cards: &[Card]) -> Result<CompletionResult> {
    check_cards(DeckKind::Socks, cards)?;
    let x = xor_all(cards);
    Ok(if x == Card::ZERO {
        CompletionResult::AlreadyMatched
    } else if cards.contains(&x) {
        CompletionResult::Remove(x)
    } else {
        CompletionResult::Add(x)
    })
}

/// Rank of a set of Z_2^6 codes over F_2.
pub fn gf2_rank(cards: &[Card]) -> usize {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for &c in cards {
        let mut v = c.0;
        while v != 0 {
            let top = 31 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

/// A match is minimal when no proper subset is itself a match. Over F_2 the
/// only dependency among the cards of a minimal match is the whole set, which
/// is the same as the cards having rank one less than their count.
pub fn is_minimal_match(cards: &[Card]) -> Result<bool> {
    if !is_match(cards)? {
        return Err(Error::NotAMatch);
    }
    Ok(gf2_rank(cards) + 1 == cards.len())
}

/// `n - 1` single-sock cards followed by the card carrying all of their socks.
pub fn construct_minimal_match(n: usize) -> Result<Vec<Card>> {
    if !(3..=7).contains(&n) {
        return Err(out_of_range("minimal match size", n, "3..=7"));
    }
    let mut cards: Vec<Card> = (0..n - 1).map(|i| Card(1 << (5 - i))).collect();
    cards.push(xor_all(&cards));
    Ok(cards)
}

pub fn is_quad(a: Card, b: Card, c: Card, d: Card) -> Result<bool> {
    check_cards(DeckKind::Quads, &[a, b, c, d])?;
    Ok(a ^ b ^ c ^ d == Card::ZERO)
}

/// The fourth card `a ^ b ^ c`. It can never equal an input: `a ^ b ^ c = a`
/// would force `b = c`.
pub fn complete_quad(a: Card, b: Card, c: Card) -> Result<Card> {
    check_cards(DeckKind::Quads, &[a, b, c])?;
    Ok(a ^ b ^ c)
}

/// How an attribute behaves across the four cards of a quad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QuadLetter {
    /// all the same
    S,
    /// two values, twice each
    H,
    /// all different
    D,
}

/// Sorted per-attribute letters of a quad, e.g. `SHD`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuadType(pub [QuadLetter; 3]);

impl QuadType {
    /// The eight achievable types. SSS and SSH would need repeated cards;
    /// every other multiset of letters occurs, HDD included.
    pub fn all() -> Vec<QuadType> {
        ["SSD", "SHH", "SHD", "SDD", "HHH", "HHD", "HDD", "DDD"]
            .iter()
            .map(|s| s.parse().expect("static quad type"))
            .collect()
    }
}

impl fmt::Display for QuadType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.0 {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for QuadType {
    type Err = Error;

    fn from_str(s: &str) -> Result<QuadType> {
        let letters: Vec<QuadLetter> = s
            .chars()
            .map(|ch| match ch {
                'S' => Ok(QuadLetter::S),
                'H' => Ok(QuadLetter::H),
                'D' => Ok(QuadLetter::D),
                _ => Err(Error::InvalidLabel(s.to_string())),
            })
            .collect::<Result<_>>()?;
        let mut arr: [QuadLetter; 3] = letters.try_into().map_err(|_| Error::InvalidLabel(s.to_string()))?;
        arr.sort();
        Ok(QuadType(arr))
    }
}

pub fn quad_type(quad: [Card; 4]) -> Result<QuadType> {
    if !is_quad(quad[0], quad[1], quad[2], quad[3])? {
        return Err(Error::NotAQuad);
    }
    let mut letters = [QuadLetter::S; 3];
    for (attr, letter) in letters.iter_mut().enumerate() {
        let distinct = quad.iter().map(|&c| quad_attribute(c, attr)).unique().count();
        *letter = match distinct {
            1 => QuadLetter::S,
            2 => QuadLetter::H,
            4 => QuadLetter::D,
            // three distinct values cannot XOR to zero with a fourth
            _ => unreachable!("quad attribute with three distinct values"),
        };
    }
    letters.sort();
    Ok(QuadType(letters))
}

/// The single symbol shared by cards `i` and `j` of a Spot It! deck.
pub fn common_symbol(deck: &SpotItDeck, i: usize, j: usize) -> Result<u32> {
    let c1 = deck.cards.get(i).ok_or(Error::InvalidCode(i as u32))?;
    let c2 = deck.cards.get(j).ok_or(Error::InvalidCode(j as u32))?;
    if i == j {
        return Err(Error::DuplicateCards(Card(i as u32)));
    }
    match shared_symbols(c1, c2).as_slice() {
        [s] => Ok(*s),
        [] => Err(Error::NoCommonSymbol(i, j)),
        _ => Err(Error::MultipleCommonSymbols(i, j)),
    }
}

/// Lexicographically first set `a < b < c` on a table of SET cards.
pub fn first_set(table: &[Card]) -> Option<[Card; 3]> {
    let mut sorted = table.to_vec();
    sorted.sort_unstable();
    let s = Space::SET;
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            let c = s.neg(s.add(a, b));
            if c > b && sorted.binary_search(&c).is_ok() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Lexicographically first quad `a < b < c < d`.
pub fn first_quad(table: &[Card]) -> Option<[Card; 4]> {
    let mut sorted = table.to_vec();
    sorted.sort_unstable();
    for (i, &a) in sorted.iter().enumerate() {
        for (j, &b) in sorted.iter().enumerate().skip(i + 1) {
            for &c in &sorted[j + 1..] {
                let d = a ^ b ^ c;
                if d > c && sorted.binary_search(&d).is_ok() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Lexicographically first matched triple `a < b < a ^ b`.
pub fn first_matched_triple(table: &[Card]) -> Option<[Card; 3]> {
    let mut sorted = table.to_vec();
    sorted.sort_unstable();
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            let c = a ^ b;
            if c > b && sorted.binary_search(&c).is_ok() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Smallest match on the table, sizes 3 through 7, lexicographically first
/// among those of the smallest size. Because no smaller match exists when a
/// size is reached, the result is always a minimal match.
pub fn first_minimal_match(table: &[Card]) -> Option<Vec<Card>> {
    let mut sorted = table.to_vec();
    sorted.sort_unstable();
    for size in 3..=7.min(sorted.len()) {
        for head in sorted.iter().copied().combinations(size - 1) {
            let last = xor_all(&head);
            if last > *head.last().expect("size >= 3") && sorted.binary_search(&last).is_ok() {
                let mut found = head;
                found.push(last);
                return Some(found);
            }
        }
    }
    None
}

/// Whether six cards split into two matched triples (brute force over the ten
/// splits).
pub fn splits_into_two_matched_triples(cards: &[Card; 6]) -> bool {
    (1..6).combinations(2).any(|rest| {
        let first = [cards[0], cards[rest[0]], cards[rest[1]]];
        let second: Vec<Card> = (1..6).filter(|i| !rest.contains(i)).map(|i| cards[i]).collect();
        xor_all(&first) == Card::ZERO && xor_all(&second) == Card::ZERO
    })
}
