//! Full mathematical decks, human-readable card labels, the 8x8 grid layout
//! of Z_2^6 and the 27-card Q-SET / S-Quads subdecks.
//!
//! Digit assignments for SET (attribute order number, color, shading, shape):
//!
//! | digit | number | color  | shading | shape    |
//! |-------|--------|--------|---------|----------|
//! | 0     | 1      | Green  | Empty   | Oval     |
//! | 1     | 2      | Red    | Striped | Diamond  |
//! | 2     | 3      | Purple | Solid   | Squiggle |
//!
//! EvenQuads uses two bits per attribute (number, color, shape), and Socks
//! uses one bit per sock color in the order red, blue, green, pink, purple,
//! yellow, red being the most significant bit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Card, Space};
use crate::error::{Error, Result};
use crate::projective::{self, is_prime, plane_size};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeckKind {
    Set,
    Socks,
    Quads,
    SpotIt(u32),
}

impl DeckKind {
    pub fn name(&self) -> &'static str {
        match self {
            DeckKind::Set => "set",
            DeckKind::Socks => "socks",
            DeckKind::Quads => "quads",
            DeckKind::SpotIt(_) => "spotit",
        }
    }

    /// Vector space underlying the deck, if it has one.
    pub fn space(&self) -> Option<Space> {
        match self {
            DeckKind::Set => Some(Space::SET),
            DeckKind::Socks | DeckKind::Quads => Some(Space::BINARY6),
            DeckKind::SpotIt(_) => None,
        }
    }

    pub fn deck_size(&self) -> usize {
        match self {
            DeckKind::Set => 81,
            DeckKind::Socks => 63,
            DeckKind::Quads => 64,
            DeckKind::SpotIt(q) => plane_size(*q),
        }
    }

    pub fn is_valid_code(&self, card: Card) -> bool {
        match self {
            DeckKind::Socks => card.0 >= 1 && card.0 < 64,
            _ => (card.0 as usize) < self.deck_size(),
        }
    }
}

impl fmt::Display for DeckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeckKind::SpotIt(q) => write!(f, "spotit(q={q})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Geometry {
    Vector { p: u32, n: u32 },
    Plane { q: u32, points: usize, per_line: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deck {
    pub kind: DeckKind,
    pub geometry: Geometry,
    /// Ascending canonical codes. Spot It! cards are line ids.
    pub cards: Vec<Card>,
    /// Symbols of each Spot It! card, indexed like `cards`.
    pub symbols: Option<Vec<Vec<u32>>>,
}

impl Deck {
    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn contains(&self, card: Card) -> bool {
        self.cards.binary_search(&card).is_ok()
    }
}

pub fn build_deck(kind: DeckKind) -> Result<Deck> {
    match kind {
        DeckKind::SpotIt(q) => {
            if !is_prime(q) {
                return Err(Error::UnsupportedOrder(q));
            }
            let spotit = projective::build_spotit_deck(q)?;
            Ok(Deck {
                kind,
                geometry: Geometry::Plane {
                    q,
                    points: plane_size(q),
                    per_line: q + 1,
                },
                cards: (0..spotit.cards.len() as u32).map(Card).collect(),
                symbols: Some(spotit.cards),
            })
        }
        _ => {
            let space = kind.space().expect("vector deck");
            let start = if kind == DeckKind::Socks { 1 } else { 0 };
            Ok(Deck {
                kind,
                geometry: Geometry::Vector { p: space.p, n: space.n },
                cards: (start..space.size()).map(Card).collect(),
                symbols: None,
            })
        }
    }
}

pub const SET_NUMBERS: [&str; 3] = ["1", "2", "3"];
pub const SET_COLORS: [&str; 3] = ["Green", "Red", "Purple"];
pub const SET_SHADINGS: [&str; 3] = ["Empty", "Striped", "Solid"];
pub const SET_SHAPES: [&str; 3] = ["Oval", "Diamond", "Squiggle"];
const SET_SHAPES_PLURAL: [&str; 3] = ["Ovals", "Diamonds", "Squiggles"];

pub const QUAD_COLORS: [&str; 4] = ["Red", "Green", "Yellow", "Blue"];
pub const QUAD_SHAPES: [&str; 4] = ["Square", "Icosahedron", "Circle", "Spiral"];
const QUAD_SHAPES_PLURAL: [&str; 4] = ["Squares", "Icosahedrons", "Circles", "Spirals"];

pub const SOCK_COLORS: [&str; 6] = ["red", "blue", "green", "pink", "purple", "yellow"];

/// Human reading of a card. Numbers are the printed symbol counts (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CardLabel {
    Set {
        number: u32,
        color: &'static str,
        shading: &'static str,
        shape: &'static str,
    },
    Socks {
        socks: Vec<&'static str>,
    },
    Quads {
        number: u32,
        color: &'static str,
        shape: &'static str,
    },
    SpotIt {
        symbols: Vec<u32>,
    },
}

fn index_of(table: &[&str], word: &str) -> Option<usize> {
    table.iter().position(|t| t.eq_ignore_ascii_case(word))
}

impl fmt::Display for CardLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardLabel::Set {
                number,
                color,
                shading,
                shape,
            } => {
                let i = index_of(&SET_SHAPES, shape).unwrap_or(0);
                let shape = if *number == 1 { SET_SHAPES[i] } else { SET_SHAPES_PLURAL[i] };
                write!(f, "{number} {color} {shading} {shape}")
            }
            CardLabel::Socks { socks } if socks.is_empty() => f.write_str("empty"),
            CardLabel::Socks { socks } => f.write_str(&socks.join(", ")),
            CardLabel::Quads { number, color, shape } => {
                let i = index_of(&QUAD_SHAPES, shape).unwrap_or(0);
                let shape = if *number == 1 { QUAD_SHAPES[i] } else { QUAD_SHAPES_PLURAL[i] };
                write!(f, "{number} {color} {shape}")
            }
            CardLabel::SpotIt { symbols } => {
                let parts: Vec<String> = symbols.iter().map(u32::to_string).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Label for a code. The empty Socks card (code 0) is accepted here and
/// reads as `empty`; it is not part of the Socks deck itself.
pub fn card_label(kind: DeckKind, card: Card) -> Result<CardLabel> {
    match kind {
        DeckKind::Set => {
            let space = Space::SET;
            if !space.contains(card) {
                return Err(Error::InvalidCode(card.0));
            }
            let d = space.digits(card);
            Ok(CardLabel::Set {
                number: d[0] + 1,
                color: SET_COLORS[d[1] as usize],
                shading: SET_SHADINGS[d[2] as usize],
                shape: SET_SHAPES[d[3] as usize],
            })
        }
        DeckKind::Socks => {
            if card.0 >= 64 {
                return Err(Error::InvalidCode(card.0));
            }
            let socks = (0..6)
                .filter(|i| card.0 >> (5 - i) & 1 == 1)
                .map(|i| SOCK_COLORS[i])
                .collect();
            Ok(CardLabel::Socks { socks })
        }
        DeckKind::Quads => {
            if card.0 >= 64 {
                return Err(Error::InvalidCode(card.0));
            }
            Ok(CardLabel::Quads {
                number: quad_attribute(card, 0) + 1,
                color: QUAD_COLORS[quad_attribute(card, 1) as usize],
                shape: QUAD_SHAPES[quad_attribute(card, 2) as usize],
            })
        }
        DeckKind::SpotIt(q) => {
            let deck = projective::build_spotit_deck(q)?;
            let symbols = deck
                .cards
                .get(card.0 as usize)
                .ok_or(Error::InvalidCode(card.0))?
                .clone();
            Ok(CardLabel::SpotIt { symbols })
        }
    }
}

/// Inverse of [`card_label`].
pub fn label_to_code(kind: DeckKind, label: &CardLabel) -> Result<Card> {
    let bad = || Error::InvalidLabel(label.to_string());
    match (kind, label) {
        (
            DeckKind::Set,
            CardLabel::Set {
                number,
                color,
                shading,
                shape,
            },
        ) => {
            let digits = [
                number.checked_sub(1).filter(|&n| n < 3).ok_or_else(bad)? as usize,
                index_of(&SET_COLORS, color).ok_or_else(bad)?,
                index_of(&SET_SHADINGS, shading).ok_or_else(bad)?,
                index_of(&SET_SHAPES, shape).ok_or_else(bad)?,
            ];
            Ok(Card(digits.iter().fold(0, |acc, &d| acc * 3 + d as u32)))
        }
        (DeckKind::Socks, CardLabel::Socks { socks }) => {
            let mut code = 0;
            for sock in socks {
                let i = index_of(&SOCK_COLORS, sock).ok_or_else(bad)?;
                let bit = 1 << (5 - i);
                if code & bit != 0 {
                    return Err(bad());
                }
                code |= bit;
            }
            Ok(Card(code))
        }
        (DeckKind::Quads, CardLabel::Quads { number, color, shape }) => {
            let number = number.checked_sub(1).filter(|&n| n < 4).ok_or_else(bad)?;
            let color = index_of(&QUAD_COLORS, color).ok_or_else(bad)? as u32;
            let shape = index_of(&QUAD_SHAPES, shape).ok_or_else(bad)? as u32;
            Ok(Card(number << 4 | color << 2 | shape))
        }
        (DeckKind::SpotIt(q), CardLabel::SpotIt { symbols }) => {
            let mut wanted = symbols.clone();
            wanted.sort_unstable();
            let deck = projective::build_spotit_deck(q)?;
            deck.cards
                .iter()
                .position(|c| *c == wanted)
                .map(|i| Card(i as u32))
                .ok_or_else(bad)
        }
        _ => Err(bad()),
    }
}

/// Parses the text form produced by `Display` for [`CardLabel`], e.g.
/// `2 Yellow Circles`, `1 Green Empty Oval`, `blue, green, purple`.
pub fn parse_label(kind: DeckKind, text: &str) -> Result<CardLabel> {
    let bad = || Error::InvalidLabel(text.to_string());
    let words: Vec<&str> = text.split_whitespace().collect();
    let singular = |word: &str, singular: &[&'static str], plural: &[&'static str]| {
        index_of(singular, word)
            .or_else(|| index_of(plural, word))
            .map(|i| singular[i])
    };
    match kind {
        DeckKind::Set => match words.as_slice() {
            [n, color, shading, shape] => Ok(CardLabel::Set {
                number: n.parse().map_err(|_| bad())?,
                color: SET_COLORS[index_of(&SET_COLORS, color).ok_or_else(bad)?],
                shading: SET_SHADINGS[index_of(&SET_SHADINGS, shading).ok_or_else(bad)?],
                shape: singular(shape, &SET_SHAPES, &SET_SHAPES_PLURAL).ok_or_else(bad)?,
            }),
            _ => Err(bad()),
        },
        DeckKind::Quads => match words.as_slice() {
            [n, color, shape] => Ok(CardLabel::Quads {
                number: n.parse().map_err(|_| bad())?,
                color: QUAD_COLORS[index_of(&QUAD_COLORS, color).ok_or_else(bad)?],
                shape: singular(shape, &QUAD_SHAPES, &QUAD_SHAPES_PLURAL).ok_or_else(bad)?,
            }),
            _ => Err(bad()),
        },
        DeckKind::Socks => {
            if text.trim() == "empty" {
                return Ok(CardLabel::Socks { socks: Vec::new() });
            }
            let socks = text
                .split(',')
                .map(|s| index_of(&SOCK_COLORS, s.trim()).map(|i| SOCK_COLORS[i]))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(bad)?;
            Ok(CardLabel::Socks { socks })
        }
        DeckKind::SpotIt(_) => {
            let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
            let symbols = inner
                .split(',')
                .map(|s| u32::from_str(s.trim()))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            Ok(CardLabel::SpotIt { symbols })
        }
    }
}

/// Two-bit value of an EvenQuads attribute: 0 = number, 1 = color, 2 = shape.
pub fn quad_attribute(card: Card, attribute: usize) -> u32 {
    card.0 >> (4 - 2 * attribute) & 0b11
}

/// Position of a Z_2^6 code in the 8x8 grid. The code `b1..b6` picks a
/// quadrant at three scales: `(b1, b2)` for the 4x4 blocks, `(b3, b4)` for the
/// 2x2 blocks, `(b5, b6)` for the cell, with the first bit of each pair
/// selecting the bottom half and the second the right half.
pub fn card_to_grid(card: Card) -> Result<(u32, u32)> {
    if card.0 >= 64 {
        return Err(Error::InvalidCode(card.0));
    }
    let bit = |i: u32| card.0 >> (6 - i) & 1;
    Ok((4 * bit(1) + 2 * bit(3) + bit(5), 4 * bit(2) + 2 * bit(4) + bit(6)))
}

pub fn grid_to_card(row: u32, col: u32) -> Result<Card> {
    if row >= 8 || col >= 8 {
        return Err(Error::InvalidCode(row * 8 + col));
    }
    let mut code = 0;
    for level in 0..3 {
        let r = row >> (2 - level) & 1;
        let c = col >> (2 - level) & 1;
        code = code << 2 | r << 1 | c;
    }
    Ok(Card(code))
}

/// Q-SET (the red SET cards) and S-Quads (EvenQuads without red cards,
/// icosahedrons or four-symbol cards), matched attribute by attribute.
#[derive(Debug, Clone)]
pub struct SubdeckIsomorphism {
    pub qset: Vec<Card>,
    pub squads: Vec<Card>,
    forward: BTreeMap<Card, Card>,
    backward: BTreeMap<Card, Card>,
}

/// Remaining EvenQuads values per attribute, in the order they pair with SET
/// digits 0, 1, 2.
const SQUADS_NUMBER: [u32; 3] = [0, 1, 2];
const SQUADS_COLOR: [u32; 3] = [1, 2, 3];
const SQUADS_SHAPE: [u32; 3] = [0, 2, 3];
const QSET_COLOR: u32 = 1;

impl SubdeckIsomorphism {
    pub fn to_squads(&self, card: Card) -> Option<Card> {
        self.forward.get(&card).copied()
    }

    pub fn to_qset(&self, card: Card) -> Option<Card> {
        self.backward.get(&card).copied()
    }
}

pub fn subdeck_isomorphism() -> SubdeckIsomorphism {
    let space = Space::SET;
    let qset: Vec<Card> = (0..81)
        .map(Card)
        .filter(|&c| space.digits(c)[1] == QSET_COLOR)
        .collect();
    let mut forward = BTreeMap::new();
    for &c in &qset {
        let d = space.digits(c);
        let image = Card(
            SQUADS_NUMBER[d[0] as usize] << 4 | SQUADS_COLOR[d[2] as usize] << 2 | SQUADS_SHAPE[d[3] as usize],
        );
        forward.insert(c, image);
    }
    let backward: BTreeMap<Card, Card> = forward.iter().map(|(&a, &b)| (b, a)).collect();
    let squads: Vec<Card> = (0..64)
        .map(Card)
        .filter(|&c| quad_attribute(c, 1) != 0 && quad_attribute(c, 2) != 1 && quad_attribute(c, 0) != 3)
        .collect();
    SubdeckIsomorphism {
        qset,
        squads,
        forward,
        backward,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CardRecord {
    pub code: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bits: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbols: Option<Vec<u32>>,
    pub label: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeckExport {
    pub kind: String,
    pub geometry: Geometry,
    pub cards: Vec<CardRecord>,
}

/// Digit string of a code in its deck's space (`0121` for SET, `011010` for
/// the binary decks).
pub fn digit_string(space: Space, card: Card) -> String {
    space.digits(card).iter().map(u32::to_string).collect()
}

/// Export records for a deck. `names` optionally renames Spot It! symbols in
/// the label column.
pub fn export_deck(deck: &Deck, names: Option<&BTreeMap<u32, String>>) -> Result<DeckExport> {
    let mut cards = Vec::with_capacity(deck.len());
    for (i, &card) in deck.cards.iter().enumerate() {
        let record = match (&deck.symbols, deck.kind.space()) {
            (Some(symbols), _) => {
                let syms = symbols[i].clone();
                let label = match names {
                    Some(names) => syms
                        .iter()
                        .map(|s| names.get(s).cloned().unwrap_or_else(|| s.to_string()))
                        .collect::<Vec<_>>()
                        .join(", "),
                    None => CardLabel::SpotIt { symbols: syms.clone() }.to_string(),
                };
                CardRecord {
                    code: card.0,
                    bits: None,
                    symbols: Some(syms),
                    label,
                }
            }
            (None, Some(space)) => CardRecord {
                code: card.0,
                bits: Some(digit_string(space, card)),
                symbols: None,
                label: card_label(deck.kind, card)?.to_string(),
            },
            (None, None) => return Err(Error::UnsupportedDeck(deck.kind.to_string())),
        };
        cards.push(record);
    }
    Ok(DeckExport {
        kind: deck.kind.name().to_string(),
        geometry: deck.geometry,
        cards,
    })
}

impl DeckExport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("deck export is plain data")
    }

    /// CSV with columns `code,bits,label` (`code,symbols,label` for Spot It!).
    pub fn to_csv(&self) -> String {
        let mut out = Vec::new();
        {
            let mut w = csv::Writer::from_writer(&mut out);
            let spotit = self.cards.first().is_some_and(|c| c.symbols.is_some());
            let middle = if spotit { "symbols" } else { "bits" };
            w.write_record(["code", middle, "label"]).expect("in-memory write");
            for c in &self.cards {
                let mid = match (&c.bits, &c.symbols) {
                    (Some(b), _) => b.clone(),
                    (None, Some(s)) => s.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
                    (None, None) => String::new(),
                };
                w.write_record([c.code.to_string(), mid, c.label.clone()])
                    .expect("in-memory write");
            }
            w.flush().expect("in-memory write");
        }
        String::from_utf8(out).expect("csv output is utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cards {
            let mid = match (&c.bits, &c.symbols) {
                (Some(b), _) => b.clone(),
                _ => String::new(),
            };
            if mid.is_empty() {
                out.push_str(&format!("{:>3}  {}\n", c.code, c.label));
            } else {
                out.push_str(&format!("{:>3}  {}  {}\n", c.code, mid, c.label));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Card {
        Card::from_bits(s).unwrap()
    }

    #[test]
    fn deck_sizes() {
        assert_eq!(build_deck(DeckKind::Set).unwrap().len(), 81);
        assert_eq!(build_deck(DeckKind::Socks).unwrap().len(), 63);
        assert_eq!(build_deck(DeckKind::Quads).unwrap().len(), 64);
        assert_eq!(build_deck(DeckKind::SpotIt(7)).unwrap().len(), 57);
        assert_eq!(build_deck(DeckKind::SpotIt(5)).unwrap().len(), 31);
        assert_eq!(build_deck(DeckKind::SpotIt(9)), Err(Error::UnsupportedOrder(9)));
    }

    #[test]
    fn each_sock_color_on_32_cards() {
        let deck = build_deck(DeckKind::Socks).unwrap();
        assert!(!deck.contains(Card::ZERO));
        for bit in 0..6 {
            let n = deck.cards.iter().filter(|c| c.0 >> bit & 1 == 1).count();
            assert_eq!(n, 32);
        }
    }

    #[test]
    fn socks_is_quads_minus_zero() {
        let socks = build_deck(DeckKind::Socks).unwrap();
        let quads = build_deck(DeckKind::Quads).unwrap();
        let expected: Vec<Card> = quads.cards.into_iter().filter(|&c| c != Card::ZERO).collect();
        assert_eq!(socks.cards, expected);
    }

    #[test]
    fn quads_labels() {
        let q = DeckKind::Quads;
        assert_eq!(card_label(q, bits("011010")).unwrap().to_string(), "2 Yellow Circles");
        assert_eq!(card_label(q, bits("000000")).unwrap().to_string(), "1 Red Square");
        assert_eq!(card_label(q, bits("111111")).unwrap().to_string(), "4 Blue Spirals");
        assert_eq!(card_label(q, Card(64)), Err(Error::InvalidCode(64)));
    }

    #[test]
    fn socks_labels() {
        let label = card_label(DeckKind::Socks, bits("011010")).unwrap();
        assert_eq!(label.to_string(), "blue, green, purple");
        assert_eq!(card_label(DeckKind::Socks, bits("100000")).unwrap().to_string(), "red");
    }

    #[test]
    fn set_labels() {
        let label = card_label(DeckKind::Set, Card(0)).unwrap();
        assert_eq!(label.to_string(), "1 Green Empty Oval");
        let label = card_label(DeckKind::Set, Card(80)).unwrap();
        assert_eq!(label.to_string(), "3 Purple Solid Squiggles");
    }

    #[test]
    fn labels_round_trip_for_all_kinds() {
        for kind in [DeckKind::Set, DeckKind::Socks, DeckKind::Quads, DeckKind::SpotIt(5)] {
            for &c in &build_deck(kind).unwrap().cards {
                let label = card_label(kind, c).unwrap();
                assert_eq!(label_to_code(kind, &label).unwrap(), c);
                let parsed = parse_label(kind, &label.to_string()).unwrap();
                assert_eq!(label_to_code(kind, &parsed).unwrap(), c, "{kind} {label}");
            }
        }
    }

    #[test]
    fn invalid_labels() {
        assert!(parse_label(DeckKind::Quads, "5 Red Squares")
            .and_then(|l| label_to_code(DeckKind::Quads, &l))
            .is_err());
        assert!(parse_label(DeckKind::Socks, "red, mauve").is_err());
        assert!(label_to_code(DeckKind::Socks, &CardLabel::Socks { socks: vec!["red", "red"] }).is_err());
    }

    #[test]
    fn grid_examples() {
        assert_eq!(card_to_grid(bits("000000")).unwrap(), (0, 0));
        assert_eq!(card_to_grid(bits("011100")).unwrap(), (2, 6));
        assert_eq!(card_to_grid(bits("111111")).unwrap(), (7, 7));
        assert_eq!(card_to_grid(bits("010000")).unwrap(), (0, 4));
        assert_eq!(card_to_grid(bits("100000")).unwrap(), (4, 0));
        assert!(card_to_grid(Card(64)).is_err());
        assert!(grid_to_card(8, 0).is_err());
    }

    #[test]
    fn grid_is_a_bijection() {
        let mut seen = [[false; 8]; 8];
        for code in 0..64 {
            let (r, c) = card_to_grid(Card(code)).unwrap();
            assert!(!seen[r as usize][c as usize]);
            seen[r as usize][c as usize] = true;
            assert_eq!(grid_to_card(r, c).unwrap(), Card(code));
        }
    }

    #[test]
    fn subdecks() {
        let iso = subdeck_isomorphism();
        assert_eq!(iso.qset.len(), 27);
        assert_eq!(iso.squads.len(), 27);
        for &c in &iso.qset {
            let image = iso.to_squads(c).unwrap();
            assert!(iso.squads.contains(&image));
            assert_eq!(iso.to_qset(image), Some(c));
            assert_eq!(card_label(DeckKind::Set, c).unwrap().to_string().split(' ').nth(1), Some("Red"));
        }
        for &c in &iso.squads {
            let label = card_label(DeckKind::Quads, c).unwrap().to_string();
            assert!(!label.contains("Red") && !label.contains("Icosahedron") && !label.starts_with('4'));
        }
    }

    #[test]
    fn json_export_shape() {
        let deck = build_deck(DeckKind::Quads).unwrap();
        let export = export_deck(&deck, None).unwrap();
        let v: serde_json::Value = serde_json::from_str(&export.to_json()).unwrap();
        assert_eq!(v["kind"], "quads");
        assert_eq!(v["geometry"]["p"], 2);
        assert_eq!(v["cards"].as_array().unwrap().len(), 64);
        assert_eq!(v["cards"][26]["bits"], "011010");
        assert_eq!(v["cards"][26]["label"], "2 Yellow Circles");
    }

    #[test]
    fn csv_quotes_sock_lists() {
        let deck = build_deck(DeckKind::Socks).unwrap();
        let csv = export_deck(&deck, None).unwrap().to_csv();
        assert!(csv.starts_with("code,bits,label\n"));
        assert!(csv.contains("26,011010,\"blue, green, purple\""));
    }

    #[test]
    fn spotit_export_uses_symbol_names() {
        let deck = build_deck(DeckKind::SpotIt(2)).unwrap();
        let names: BTreeMap<u32, String> = (0..7).map(|i| (i, format!("s{i}"))).collect();
        let export = export_deck(&deck, Some(&names)).unwrap();
        assert_eq!(export.cards.len(), 7);
        assert!(export.cards[0].label.starts_with('s'));
        assert_eq!(export.cards[0].symbols.as_ref().unwrap().len(), 3);
    }
}
