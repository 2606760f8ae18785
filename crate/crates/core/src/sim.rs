//! Seeded play of all four games with greedy machine players.
//!
//! Every turn the first valid group in canonical order (lexicographic by
//! code) is claimed, and the player credited with it is drawn from the same
//! random stream that shuffled the deck. A game is fully determined by its
//! config, so a log can be replayed and checked event by event.
//!
//! Dealing rules: after a claim the table is topped up to its base size
//! (12 for SET and official Socks, 9 for extended Socks, `x` for EvenQuads).
//! When no group is on the table the dealer adds 3 cards (SET, Socks) or 1
//! card (EvenQuads). Scores count cards taken, or for Spot It! cards won
//! (tower) and cards played (well).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{xor_all, Card};
use crate::decks::{build_deck, DeckKind};
use crate::error::{Error, Result};
use crate::projective::{build_spotit_deck, shared_symbols, SpotItDeck};
use crate::rng::DeckRng;
use crate::rules::{self, common_symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Game {
    Set,
    Socks,
    Quads,
    SpotIt,
}

impl std::str::FromStr for Game {
    type Err = Error;
    fn from_str(s: &str) -> Result<Game> {
        match s.to_ascii_lowercase().as_str() {
            "set" => Ok(Game::Set),
            "socks" => Ok(Game::Socks),
            "quads" | "evenquads" => Ok(Game::Quads),
            "spotit" => Ok(Game::SpotIt),
            _ => Err(Error::InvalidConfig(format!("unknown game {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Standard,
    /// Socks: claims are matched triples, 12 cards on the table.
    Official,
    /// Socks: claims are matches of any size, 9 cards on the table.
    Extended,
    Tower,
    Well,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(Variant::Standard),
            "official" => Ok(Variant::Official),
            "extended" => Ok(Variant::Extended),
            "tower" => Ok(Variant::Tower),
            "well" => Ok(Variant::Well),
            _ => Err(Error::InvalidConfig(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameConfig {
    pub game: Game,
    pub variant: Variant,
    pub players: u32,
    pub seed: u64,
    /// EvenQuads layout size `x`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_size: Option<usize>,
    /// Spot It! plane order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
}

pub const DEFAULT_QUADS_TABLE: usize = 8;
pub const DEFAULT_SPOTIT_ORDER: u32 = 7;

impl GameConfig {
    /// Two players and the default variant of `game`.
    pub fn new(game: Game, seed: u64) -> GameConfig {
        let variant = match game {
            Game::Set | Game::Quads => Variant::Standard,
            Game::Socks => Variant::Extended,
            Game::SpotIt => Variant::Tower,
        };
        GameConfig {
            game,
            variant,
            players: 2,
            seed,
            table_size: None,
            q: None,
        }
    }

    pub fn with_variant(mut self, variant: Variant) -> GameConfig {
        self.variant = variant;
        self
    }

    pub fn with_players(mut self, players: u32) -> GameConfig {
        self.players = players;
        self
    }

    fn deck_kind(&self) -> DeckKind {
        match self.game {
            Game::Set => DeckKind::Set,
            Game::Socks => DeckKind::Socks,
            Game::Quads => DeckKind::Quads,
            Game::SpotIt => DeckKind::SpotIt(self.q.unwrap_or(DEFAULT_SPOTIT_ORDER)),
        }
    }

    fn base_table(&self) -> usize {
        match (self.game, self.variant) {
            (Game::Socks, Variant::Extended) => 9,
            (Game::Quads, _) => self.table_size.unwrap_or(DEFAULT_QUADS_TABLE),
            _ => 12,
        }
    }

    fn extra_cards(&self) -> usize {
        if self.game == Game::Quads {
            1
        } else {
            3
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        let ok = matches!(
            (self.game, self.variant),
            (Game::Set | Game::Quads, Variant::Standard)
                | (Game::Socks, Variant::Official | Variant::Extended)
                | (Game::SpotIt, Variant::Tower | Variant::Well)
        );
        if !ok {
            return bad(format!("variant {:?} does not apply to {:?}", self.variant, self.game));
        }
        if self.table_size.is_some() && self.game != Game::Quads {
            return bad("table size applies to EvenQuads only".into());
        }
        if self.q.is_some() && self.game != Game::SpotIt {
            return bad("plane order applies to Spot It! only".into());
        }
        if let Some(x) = self.table_size {
            if !(6..=9).contains(&x) {
                return bad(format!("EvenQuads table size {x} is outside 6..=9"));
            }
        }
        let max_players = match self.game {
            Game::SpotIt => self.deck_kind().deck_size() as u32 - 1,
            _ => 64,
        };
        if self.players == 0 || self.players > max_players {
            return bad(format!("{} players, expected 1..={max_players}", self.players));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolMatch {
    pub player: u32,
    pub card: Card,
    pub symbol: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Event {
    Deal { cards: Vec<Card> },
    Claim { player: u32, cards: Vec<Card> },
    Refill { cards: Vec<Card> },
    Extra { cards: Vec<Card> },
    /// Spot It!: each player's face-down cards (top first) and the center pile.
    Hands { hands: Vec<Vec<Card>>, center: Vec<Card> },
    /// Spot It!: the center card, every player's match against it, and who
    /// was fastest.
    Turn { center: Card, matches: Vec<SymbolMatch>, winner: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameLog {
    pub config: GameConfig,
    pub shuffle: Vec<Card>,
    pub events: Vec<Event>,
    pub final_table: Vec<Card>,
    pub scores: BTreeMap<u32, u32>,
}

impl GameLog {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("log serializes")
    }

    pub fn from_json(text: &str) -> Result<GameLog> {
        serde_json::from_str(text).map_err(|e| Error::InvalidLog(e.to_string()))
    }

    pub fn claims(&self) -> impl Iterator<Item = &[Card]> {
        self.events.iter().filter_map(|e| match e {
            Event::Claim { cards, .. } => Some(cards.as_slice()),
            _ => None,
        })
    }

    /// Re-applies the events from the shuffle, checking every deal, claim and
    /// Spot It! match, and that the recorded end state is what the events
    /// produce.
    pub fn replay(&self) -> Result<Replay> {
        self.config.validate()?;
        let mut expected = build_deck(self.config.deck_kind())?.cards;
        expected.sort_unstable();
        let mut sorted = self.shuffle.clone();
        sorted.sort_unstable();
        if sorted != expected {
            return Err(invalid("shuffle is not a permutation of the deck"));
        }
        match self.config.game {
            Game::SpotIt => replay_spotit(self),
            _ => replay_table(self),
        }
    }
}

/// State reconstructed by [`GameLog::replay`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub final_table: Vec<Card>,
    pub scores: BTreeMap<u32, u32>,
    /// The table right after the last card left the deck.
    pub table_at_deck_end: Option<Vec<Card>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidLog(msg.into())
}

/// Shuffled deck for a config; the same stream then picks claimers.
fn shuffled(config: &GameConfig) -> Result<(Vec<Card>, DeckRng)> {
    let mut cards = build_deck(config.deck_kind())?.cards;
    let mut rng = DeckRng::new(config.seed);
    rng.shuffle(&mut cards);
    Ok((cards, rng))
}

fn find_claim(config: &GameConfig, table: &[Card]) -> Option<Vec<Card>> {
    match (config.game, config.variant) {
        (Game::Set, _) => rules::first_set(table).map(|g| g.to_vec()),
        (Game::Quads, _) => rules::first_quad(table).map(|g| g.to_vec()),
        (Game::Socks, Variant::Official) => rules::first_matched_triple(table).map(|g| g.to_vec()),
        (Game::Socks, _) => rules::first_minimal_match(table),
        (Game::SpotIt, _) => None,
    }
}

/// Checks a claim against the game's rule directly, without the scanners.
pub fn claim_is_legal(config: &GameConfig, cards: &[Card]) -> bool {
    match (config.game, config.variant) {
        (Game::Set, _) => cards.len() == 3 && rules::is_set(cards[0], cards[1], cards[2]).unwrap_or(false),
        (Game::Quads, _) => cards.len() == 4 && rules::is_quad(cards[0], cards[1], cards[2], cards[3]).unwrap_or(false),
        (Game::Socks, Variant::Official) => {
            cards.len() == 3
                && rules::is_match(cards).unwrap_or(false)
                && (0..6).all(|bit| {
                    let n = cards.iter().filter(|c| c.0 >> bit & 1 == 1).count();
                    n == 0 || n == 2
                })
        }
        (Game::Socks, _) => rules::is_minimal_match(cards).unwrap_or(false),
        (Game::SpotIt, _) => false,
    }
}

pub fn simulate(config: &GameConfig) -> Result<GameLog> {
    config.validate()?;
    match config.game {
        Game::SpotIt => simulate_spotit(config),
        _ => simulate_table(config),
    }
}

fn simulate_table(config: &GameConfig) -> Result<GameLog> {
    let (shuffle, mut rng) = shuffled(config)?;
    let base = config.base_table();
    let mut scores: BTreeMap<u32, u32> = (0..config.players).map(|p| (p, 0)).collect();
    let mut pos = base.min(shuffle.len());
    let mut table = shuffle[..pos].to_vec();
    let mut events = vec![Event::Deal { cards: table.clone() }];
    loop {
        if let Some(claim) = find_claim(config, &table) {
            let player = rng.below(config.players as u64) as u32;
            table.retain(|c| !claim.contains(c));
            *scores.entry(player).or_default() += claim.len() as u32;
            events.push(Event::Claim { player, cards: claim });
            let n = base.saturating_sub(table.len()).min(shuffle.len() - pos);
            if n > 0 {
                let cards = shuffle[pos..pos + n].to_vec();
                pos += n;
                table.extend(&cards);
                events.push(Event::Refill { cards });
            }
        } else if pos < shuffle.len() {
            let n = config.extra_cards().min(shuffle.len() - pos);
            let cards = shuffle[pos..pos + n].to_vec();
            pos += n;
            table.extend(&cards);
            events.push(Event::Extra { cards });
        } else {
            break;
        }
    }
    Ok(GameLog {
        config: config.clone(),
        shuffle,
        events,
        final_table: table,
        scores,
    })
}

fn replay_table(log: &GameLog) -> Result<Replay> {
    let config = &log.config;
    let mut pos = 0;
    let mut table: Vec<Card> = Vec::new();
    let mut scores: BTreeMap<u32, u32> = (0..config.players).map(|p| (p, 0)).collect();
    let mut table_at_deck_end = None;
    for (i, event) in log.events.iter().enumerate() {
        match event {
            Event::Deal { cards } | Event::Refill { cards } | Event::Extra { cards } => {
                if matches!(event, Event::Deal { .. }) != (i == 0) {
                    return Err(invalid(format!("event {i}: the initial deal must come first, once")));
                }
                if log.shuffle.get(pos..pos + cards.len()) != Some(cards.as_slice()) {
                    return Err(invalid(format!("event {i}: cards dealt out of shuffle order")));
                }
                pos += cards.len();
                table.extend(cards);
            }
            Event::Claim { player, cards } => {
                if *player >= config.players {
                    return Err(invalid(format!("event {i}: no player {player}")));
                }
                if !cards.iter().all(|c| table.contains(c)) {
                    return Err(invalid(format!("event {i}: claimed cards are not on the table")));
                }
                if !claim_is_legal(config, cards) {
                    return Err(invalid(format!("event {i}: illegal claim {cards:?}")));
                }
                table.retain(|c| !cards.contains(c));
                *scores.entry(*player).or_default() += cards.len() as u32;
            }
            Event::Hands { .. } | Event::Turn { .. } => {
                return Err(invalid(format!("event {i}: Spot It! event in a table game")));
            }
        }
        if pos == log.shuffle.len() && table_at_deck_end.is_none() {
            table_at_deck_end = Some(table.clone());
        }
    }
    if pos != log.shuffle.len() {
        return Err(invalid("game ended with cards left in the deck"));
    }
    if find_claim(config, &table).is_some() {
        return Err(invalid("game ended with a claim still on the table"));
    }
    if table != log.final_table || scores != log.scores {
        return Err(invalid("recorded end state differs from the replayed one"));
    }
    Ok(Replay {
        final_table: table,
        scores,
        table_at_deck_end,
    })
}

fn turn(deck: &SpotItDeck, center: Card, tops: &[(u32, Card)]) -> Result<Vec<SymbolMatch>> {
    tops.iter()
        .map(|&(player, card)| {
            let symbol = common_symbol(deck, card.0 as usize, center.0 as usize)?;
            Ok(SymbolMatch { player, card, symbol })
        })
        .collect()
}

fn simulate_spotit(config: &GameConfig) -> Result<GameLog> {
    let deck = build_spotit_deck(config.q.unwrap_or(DEFAULT_SPOTIT_ORDER))?;
    let (shuffle, mut rng) = shuffled(config)?;
    let players = config.players as usize;
    let mut scores: BTreeMap<u32, u32> = (0..config.players).map(|p| (p, 0)).collect();
    let mut events = Vec::new();
    let final_table;
    if config.variant == Variant::Tower {
        let hands: Vec<Vec<Card>> = shuffle[..players].iter().map(|&c| vec![c]).collect();
        let center = shuffle[players..].to_vec();
        events.push(Event::Hands {
            hands: hands.clone(),
            center: center.clone(),
        });
        let mut tops: Vec<(u32, Card)> = hands.iter().enumerate().map(|(p, h)| (p as u32, h[0])).collect();
        for &card in &center {
            let matches = turn(&deck, card, &tops)?;
            let winner = rng.below(players as u64) as u32;
            tops[winner as usize].1 = card;
            *scores.entry(winner).or_default() += 1;
            events.push(Event::Turn {
                center: card,
                matches,
                winner,
            });
        }
        final_table = Vec::new();
    } else {
        let mut hands = vec![Vec::new(); players];
        for (i, &c) in shuffle[1..].iter().enumerate() {
            hands[i % players].push(c);
        }
        events.push(Event::Hands {
            hands: hands.clone(),
            center: vec![shuffle[0]],
        });
        let mut pile = vec![shuffle[0]];
        let mut next = vec![0usize; players];
        while (0..players).all(|p| next[p] < hands[p].len()) {
            let center = *pile.last().expect("center pile starts with one card");
            let tops: Vec<(u32, Card)> = (0..players).map(|p| (p as u32, hands[p][next[p]])).collect();
            let matches = turn(&deck, center, &tops)?;
            let winner = rng.below(players as u64) as u32;
            pile.push(hands[winner as usize][next[winner as usize]]);
            next[winner as usize] += 1;
            *scores.entry(winner).or_default() += 1;
            events.push(Event::Turn { center, matches, winner });
        }
        final_table = pile;
    }
    Ok(GameLog {
        config: config.clone(),
        shuffle,
        events,
        final_table,
        scores,
    })
}

fn replay_spotit(log: &GameLog) -> Result<Replay> {
    let config = &log.config;
    let deck = build_spotit_deck(config.q.unwrap_or(DEFAULT_SPOTIT_ORDER))?;
    let players = config.players as usize;
    let Some((Event::Hands { hands, center }, turns)) = log.events.split_first() else {
        return Err(invalid("Spot It! log must start with the hands"));
    };
    let dealt: Vec<Card> = match config.variant {
        Variant::Tower => hands.iter().flatten().chain(center).copied().collect(),
        _ => {
            let mut d = center.clone();
            let longest = hands.iter().map(Vec::len).max().unwrap_or(0);
            for round in 0..longest {
                d.extend(hands.iter().filter_map(|h| h.get(round)));
            }
            d
        }
    };
    if hands.len() != players || dealt != log.shuffle {
        return Err(invalid("hands do not match the shuffle"));
    }
    let mut scores: BTreeMap<u32, u32> = (0..config.players).map(|p| (p, 0)).collect();
    let tower = config.variant == Variant::Tower;
    let mut tops: Vec<Card> = hands.iter().map(|h| h[0]).collect();
    let mut next = vec![0usize; players];
    let mut pile = center.clone();
    for (i, event) in turns.iter().enumerate() {
        let Event::Turn { center: shown, matches, winner } = event else {
            return Err(invalid(format!("turn {i}: expected a Spot It! turn")));
        };
        let expected = if tower { center.get(i) } else { pile.last() };
        if expected != Some(shown) || *winner as usize >= players || matches.len() != players {
            return Err(invalid(format!("turn {i}: wrong center card or players")));
        }
        for (p, m) in matches.iter().enumerate() {
            let top = if tower { tops[p] } else { hands[p][next[p]] };
            let shared = shared_symbols(&deck.cards[m.card.0 as usize], &deck.cards[shown.0 as usize]);
            if m.player as usize != p || m.card != top || shared != [m.symbol] {
                return Err(invalid(format!("turn {i}: player {p} does not share exactly symbol {}", m.symbol)));
            }
        }
        let w = *winner as usize;
        if tower {
            tops[w] = *shown;
        } else {
            pile.push(hands[w][next[w]]);
            next[w] += 1;
        }
        *scores.entry(*winner).or_default() += 1;
    }
    let finished = if tower {
        turns.len() == center.len()
    } else {
        (0..players).any(|p| next[p] == hands[p].len())
    };
    let final_table = if tower { Vec::new() } else { pile };
    if !finished || final_table != log.final_table || scores != log.scores {
        return Err(invalid("recorded end state differs from the replayed one"));
    }
    Ok(Replay {
        final_table,
        scores,
        table_at_deck_end: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchSummary {
    pub config: GameConfig,
    pub runs: u64,
    pub total_claims: u64,
    pub mean_claims: f64,
    pub mean_leftover: f64,
    pub max_leftover: usize,
    /// Runs that ended with cards on the table.
    pub stranded_runs: u64,
    pub stranded_frequency: f64,
    /// Runs whose final table is a matched set (binary decks only).
    pub final_table_matched: u64,
    pub leftover_histogram: BTreeMap<usize, u64>,
}

/// Runs seeds `seed, seed + 1, ...` in parallel and merges in seed order.
pub fn simulate_batch(config: &GameConfig, runs: u64) -> Result<BatchSummary> {
    if runs == 0 {
        return Err(Error::InvalidConfig("runs must be at least 1".into()));
    }
    config.validate()?;
    let logs: Vec<GameLog> = (0..runs)
        .into_par_iter()
        .map(|i| {
            let mut c = config.clone();
            c.seed = config.seed.wrapping_add(i);
            simulate(&c)
        })
        .collect::<Result<_>>()?;
    let binary = matches!(config.game, Game::Socks | Game::Quads);
    let mut summary = BatchSummary {
        config: config.clone(),
        runs,
        total_claims: 0,
        mean_claims: 0.0,
        mean_leftover: 0.0,
        max_leftover: 0,
        stranded_runs: 0,
        stranded_frequency: 0.0,
        final_table_matched: 0,
        leftover_histogram: BTreeMap::new(),
    };
    let mut leftover_total = 0;
    for log in &logs {
        let claims = match config.game {
            Game::SpotIt => log.events.len() as u64 - 1,
            _ => log.claims().count() as u64,
        };
        summary.total_claims += claims;
        let left = if config.game == Game::SpotIt { 0 } else { log.final_table.len() };
        leftover_total += left;
        summary.max_leftover = summary.max_leftover.max(left);
        *summary.leftover_histogram.entry(left).or_default() += 1;
        if left > 0 {
            summary.stranded_runs += 1;
        }
        if binary && xor_all(&log.final_table) == Card::ZERO {
            summary.final_table_matched += 1;
        }
    }
    summary.mean_claims = summary.total_claims as f64 / runs as f64;
    summary.mean_leftover = leftover_total as f64 / runs as f64;
    summary.stranded_frequency = summary.stranded_runs as f64 / runs as f64;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        for game in [Game::Set, Game::Socks, Game::Quads, Game::SpotIt] {
            let c = GameConfig::new(game, 42);
            assert_eq!(simulate(&c).unwrap().to_json(), simulate(&c).unwrap().to_json());
        }
        let a = simulate(&GameConfig::new(Game::Set, 1)).unwrap();
        let b = simulate(&GameConfig::new(Game::Set, 2)).unwrap();
        assert_ne!(a.shuffle, b.shuffle);
    }

    #[test]
    fn every_variant_replays() {
        let configs = [
            GameConfig::new(Game::Set, 3),
            GameConfig::new(Game::Socks, 3),
            GameConfig::new(Game::Socks, 3).with_variant(Variant::Official),
            GameConfig::new(Game::Quads, 3),
            GameConfig::new(Game::SpotIt, 3).with_players(4),
            GameConfig::new(Game::SpotIt, 3).with_variant(Variant::Well).with_players(5),
        ];
        for c in configs {
            let log = simulate(&c).unwrap();
            let round = GameLog::from_json(&log.to_json()).unwrap();
            assert_eq!(round, log);
            let r = round.replay().unwrap();
            assert_eq!(r.final_table, log.final_table, "{c:?}");
            for claim in log.claims() {
                assert!(claim_is_legal(&c, claim));
            }
        }
    }

    #[test]
    fn tampered_logs_fail() {
        let log = simulate(&GameConfig::new(Game::Set, 8)).unwrap();
        let mut bad = log.clone();
        for e in bad.events.iter_mut() {
            if let Event::Claim { cards, .. } = e {
                cards.swap(0, 1);
                cards[2] = Card((cards[2].0 + 1) % 81);
                break;
            }
        }
        assert!(bad.replay().is_err());
        let mut bad = log.clone();
        bad.final_table.push(Card(0));
        assert!(bad.replay().is_err());
        let mut bad = log;
        bad.shuffle.swap(0, 1);
        assert!(bad.replay().is_err());

        let log = simulate(&GameConfig::new(Game::SpotIt, 8)).unwrap();
        let mut bad = log.clone();
        if let Event::Turn { matches, .. } = &mut bad.events[1] {
            matches[0].symbol += 1;
        }
        assert!(bad.replay().is_err());
    }

    #[test]
    fn extended_socks_table_is_matched_when_deck_runs_out() {
        for seed in 0..50 {
            let log = simulate(&GameConfig::new(Game::Socks, seed)).unwrap();
            let r = log.replay().unwrap();
            let at_end = r.table_at_deck_end.unwrap();
            assert_eq!(xor_all(&at_end), Card::ZERO);
            assert_eq!(xor_all(&log.final_table), Card::ZERO);
        }
    }

    #[test]
    fn quads_with_each_table_size() {
        for x in 6..=9 {
            let mut c = GameConfig::new(Game::Quads, 5);
            c.table_size = Some(x);
            let log = simulate(&c).unwrap();
            log.replay().unwrap();
            assert_eq!(log.claims().count() * 4 + log.final_table.len(), 64);
        }
    }

    #[test]
    fn invalid_configs() {
        let mut c = GameConfig::new(Game::Quads, 1);
        c.table_size = Some(10);
        assert!(simulate(&c).is_err());
        assert!(simulate(&GameConfig::new(Game::Set, 1).with_variant(Variant::Tower)).is_err());
        assert!(simulate(&GameConfig::new(Game::Set, 1).with_players(0)).is_err());
        assert!(simulate(&GameConfig::new(Game::SpotIt, 1).with_players(57)).is_err());
        assert!(simulate_batch(&GameConfig::new(Game::Set, 1), 0).is_err());
    }

    #[test]
    fn batch_is_merged_in_seed_order() {
        let c = GameConfig::new(Game::Socks, 100).with_variant(Variant::Official);
        let a = simulate_batch(&c, 40).unwrap();
        let b = simulate_batch(&c, 40).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.runs, 40);
        assert_eq!(a.leftover_histogram.values().sum::<u64>(), 40);
        let sum: u64 = (0..40)
            .map(|i| simulate(&GameConfig { seed: 100 + i, ..c.clone() }).unwrap().claims().count() as u64)
            .sum();
        assert_eq!(a.total_claims, sum);
    }
}
