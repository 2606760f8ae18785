//! Projective planes PG(2, q) over prime fields and the Spot It! decks built
//! from them.
//!
//! Points and lines are both projective classes of nonzero vectors in F_q^3,
//! each stored by its canonical representative (first nonzero coordinate equal
//! to 1). Ids are assigned in lexicographic order of the representatives, so
//! `(0,0,1)` is always id 0. A point lies on a line when their dot product
//! vanishes mod q.
//!
//! Commercial decks drop cards (55 of 57 for q = 7, 30 of 31 for q = 5); the
//! decks here are always complete.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Card;
use crate::error::{Error, Result};

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Number of points (and of lines) of a plane of order q.
pub fn plane_size(q: u32) -> usize {
    (q * q + q + 1) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidencePlane {
    pub q: u32,
    /// Canonical representatives of the points.
    pub points: Vec<[u32; 3]>,
    /// Canonical representatives of the line normals.
    pub lines: Vec<[u32; 3]>,
    /// For each line, the sorted ids of its q + 1 points.
    pub incidence: Vec<Vec<u32>>,
}

fn canonical_representatives(q: u32) -> Vec<[u32; 3]> {
    let mut reps = Vec::with_capacity(plane_size(q));
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    reps.push(v);
                }
            }
        }
    }
    reps
}

fn dot(a: &[u32; 3], b: &[u32; 3], q: u32) -> u32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<u32>() % q
}

pub fn build_projective_plane(q: u32) -> Result<IncidencePlane> {
    if !is_prime(q) {
        return Err(Error::UnsupportedOrder(q));
    }
    let points = canonical_representatives(q);
    let lines = points.clone();
    let incidence = lines
        .iter()
        .map(|l| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| dot(l, p, q) == 0)
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    Ok(IncidencePlane {
        q,
        points,
        lines,
        incidence,
    })
}

impl IncidencePlane {
    pub fn point_id(&self, rep: [u32; 3]) -> Option<u32> {
        self.points.iter().position(|p| *p == rep).map(|i| i as u32)
    }

    /// Ids of the lines through each point.
    pub fn lines_through_points(&self) -> Vec<Vec<u32>> {
        let mut through = vec![Vec::new(); self.points.len()];
        for (line, pts) in self.incidence.iter().enumerate() {
            for &p in pts {
                through[p as usize].push(line as u32);
            }
        }
        through
    }

    pub fn line_through(&self, a: u32, b: u32) -> Option<u32> {
        self.incidence
            .iter()
            .position(|pts| pts.contains(&a) && pts.contains(&b))
            .map(|i| i as u32)
    }
}

/// A Spot It! deck: one card per line, carrying the ids of its points as
/// symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotItDeck {
    pub q: u32,
    pub cards: Vec<Vec<u32>>,
}

impl SpotItDeck {
    pub fn symbol_universe(&self) -> usize {
        plane_size(self.q)
    }

    /// Swaps the roles of cards and symbols.
    pub fn transpose(&self) -> SpotItDeck {
        let mut cards = vec![Vec::new(); self.symbol_universe()];
        for (i, card) in self.cards.iter().enumerate() {
            for &s in card {
                if let Some(slot) = cards.get_mut(s as usize) {
                    slot.push(i as u32);
                }
            }
        }
        SpotItDeck { q: self.q, cards }
    }

    pub fn without_card(&self, index: usize) -> SpotItDeck {
        let mut cards = self.cards.clone();
        cards.remove(index);
        SpotItDeck { q: self.q, cards }
    }
}

pub fn build_spotit_deck(q: u32) -> Result<SpotItDeck> {
    let plane = build_projective_plane(q)?;
    Ok(SpotItDeck {
        q,
        cards: plane.incidence,
    })
}

/// Symbols present on both cards.
pub fn shared_symbols(c1: &[u32], c2: &[u32]) -> Vec<u32> {
    c1.iter().filter(|s| c2.contains(s)).copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairFailure {
    pub first: usize,
    pub second: usize,
    pub shared: usize,
}

impl PairFailure {
    pub fn error(&self) -> Error {
        if self.shared == 0 {
            Error::NoCommonSymbol(self.first, self.second)
        } else {
            Error::MultipleCommonSymbols(self.first, self.second)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneReport {
    pub q: u32,
    pub card_count: usize,
    pub expected_count: usize,
    pub pairs_checked: usize,
    pub pair_failures: Vec<PairFailure>,
    /// Cards whose size differs from q + 1.
    pub bad_card_sizes: Vec<usize>,
    /// Symbols (including unused or out-of-range ones) whose card count
    /// differs from q + 1.
    pub bad_multiplicities: Vec<(u32, usize)>,
}

impl PlaneReport {
    pub fn pair_property_holds(&self) -> bool {
        self.pair_failures.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.pair_property_holds()
            && self.card_count == self.expected_count
            && self.bad_card_sizes.is_empty()
            && self.bad_multiplicities.is_empty()
    }
}

pub fn verify_plane(deck: &SpotItDeck) -> PlaneReport {
    let per_line = deck.q as usize + 1;
    let mut pair_failures = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..deck.cards.len() {
        for j in i + 1..deck.cards.len() {
            pairs_checked += 1;
            let shared = shared_symbols(&deck.cards[i], &deck.cards[j]).len();
            if shared != 1 {
                pair_failures.push(PairFailure {
                    first: i,
                    second: j,
                    shared,
                });
            }
        }
    }
    let bad_card_sizes = deck
        .cards
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() != per_line)
        .map(|(i, _)| i)
        .collect();
    let mut counts: BTreeMap<u32, usize> = (0..deck.symbol_universe() as u32).map(|s| (s, 0)).collect();
    for card in &deck.cards {
        for &s in card {
            *counts.entry(s).or_default() += 1;
        }
    }
    let bad_multiplicities = counts.into_iter().filter(|&(_, n)| n != per_line).collect();
    PlaneReport {
        q: deck.q,
        card_count: deck.cards.len(),
        expected_count: deck.symbol_universe(),
        pairs_checked,
        pair_failures,
        bad_card_sizes,
        bad_multiplicities,
    }
}

/// Baby Socks (nonzero codes of Z_2^3) laid onto the Fano plane.
#[derive(Debug, Clone, Serialize)]
pub struct FanoCorrespondence {
    pub plane: IncidencePlane,
    /// Baby Socks card → Fano point id.
    pub point_of_card: BTreeMap<Card, u32>,
    /// Each matched triple `{a, b, a ^ b}` (ascending) with the line it spans.
    pub line_of_triple: Vec<([Card; 3], u32)>,
}

impl FanoCorrespondence {
    pub fn card_of_point(&self, point: u32) -> Option<Card> {
        self.point_of_card.iter().find(|(_, &p)| p == point).map(|(&c, _)| c)
    }
}

/// Maps 3-bit code `xyz` to the Fano point with coordinates `(x, y, z)`.
/// Over F_2 every nonzero vector is already its own canonical representative.
pub fn fano_socks_correspondence() -> FanoCorrespondence {
    let plane = build_projective_plane(2).expect("2 is prime");
    let point_of_card: BTreeMap<Card, u32> = (1..8u32)
        .map(|code| {
            let rep = [code >> 2 & 1, code >> 1 & 1, code & 1];
            (Card(code), plane.point_id(rep).expect("nonzero F_2 vector is canonical"))
        })
        .collect();
    let mut line_of_triple = Vec::new();
    for a in 1..8u32 {
        for b in a + 1..8 {
            let c = a ^ b;
            if c > b {
                let mut pts: Vec<u32> = [a, b, c].iter().map(|&x| point_of_card[&Card(x)]).collect();
                pts.sort_unstable();
                let line = plane
                    .incidence
                    .iter()
                    .position(|l| *l == pts)
                    .expect("a 2-dimensional subspace is a projective line") as u32;
                line_of_triple.push(([Card(a), Card(b), Card(c)], line));
            }
        }
    }
    FanoCorrespondence {
        plane,
        point_of_card,
        line_of_triple,
    }
}

/// Parses a plain `id: name` table, one entry per line. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_symbol_names(text: &str) -> Result<BTreeMap<u32, String>> {
    let mut names = BTreeMap::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (id, name) = line
            .split_once(':')
            .ok_or_else(|| Error::InvalidLabel(line.to_string()))?;
        let id: u32 = id.trim().parse().map_err(|_| Error::InvalidLabel(line.to_string()))?;
        names.insert(id, name.trim().to_string());
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_sizes() {
        for (q, n, k) in [(2, 7, 3), (3, 13, 4), (5, 31, 6), (7, 57, 8)] {
            let plane = build_projective_plane(q).unwrap();
            assert_eq!(plane.points.len(), n);
            assert_eq!(plane.lines.len(), n);
            assert!(plane.incidence.iter().all(|l| l.len() == k));
            assert!(plane.lines_through_points().iter().all(|l| l.len() == k));
        }
    }

    #[test]
    fn non_prime_orders_rejected() {
        for q in [0, 1, 4, 6, 8, 9] {
            assert_eq!(build_projective_plane(q), Err(Error::UnsupportedOrder(q)));
        }
    }

    #[test]
    fn two_points_one_line() {
        let plane = build_projective_plane(5).unwrap();
        let n = plane.points.len() as u32;
        for a in 0..n {
            for b in a + 1..n {
                let count = plane
                    .incidence
                    .iter()
                    .filter(|l| l.contains(&a) && l.contains(&b))
                    .count();
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn first_point_is_canonical_zero_zero_one() {
        let plane = build_projective_plane(3).unwrap();
        assert_eq!(plane.points[0], [0, 0, 1]);
        assert!(plane.points.iter().all(|p| p.iter().find(|&&c| c != 0) == Some(&1)));
    }

    #[test]
    fn generated_decks_verify() {
        for q in [2, 3, 5, 7] {
            let deck = build_spotit_deck(q).unwrap();
            let report = verify_plane(&deck);
            assert!(report.passes(), "q={q}: {report:?}");
            assert!(verify_plane(&deck.transpose()).passes());
        }
        assert_eq!(verify_plane(&build_spotit_deck(7).unwrap()).pairs_checked, 1596);
    }

    #[test]
    fn removing_cards_keeps_pair_property() {
        let deck = build_spotit_deck(7).unwrap().without_card(3).without_card(10);
        let report = verify_plane(&deck);
        assert!(report.pair_property_holds());
        assert!(!report.passes());
    }

    #[test]
    fn duplicated_card_fails_on_that_pair() {
        let mut deck = build_spotit_deck(2).unwrap();
        deck.cards.push(deck.cards[4].clone());
        let report = verify_plane(&deck);
        assert_eq!(report.pair_failures.len(), 1);
        let f = &report.pair_failures[0];
        assert_eq!((f.first, f.second), (4, 7));
        assert_eq!(f.error(), Error::MultipleCommonSymbols(4, 7));
    }

    #[test]
    fn fano_correspondence() {
        let fano = fano_socks_correspondence();
        assert_eq!(fano.point_of_card.len(), 7);
        assert_eq!(fano.line_of_triple.len(), 7);
        let mut lines: Vec<u32> = fano.line_of_triple.iter().map(|(_, l)| *l).collect();
        lines.sort_unstable();
        assert_eq!(lines, (0..7).collect::<Vec<_>>());
        for code in 1..8 {
            let n = fano
                .line_of_triple
                .iter()
                .filter(|(t, _)| t.contains(&Card(code)))
                .count();
            assert_eq!(n, 3);
        }
        assert!(fano
            .line_of_triple
            .iter()
            .any(|(t, _)| *t == [Card(0b001), Card(0b010), Card(0b011)]));
    }

    #[test]
    fn symbol_names() {
        let names = parse_symbol_names("# names\n0: anchor\n 12 : sun \n\n").unwrap();
        assert_eq!(names[&0], "anchor");
        assert_eq!(names[&12], "sun");
        assert!(parse_symbol_names("oops").is_err());
    }
}
