use std::fmt;

use serde::{Deserialize, Serialize};

use super::domain::Domain;
use super::individual::{individual_distance, Individual};

/// An archived frontier pair and the generation in which it entered.
pub struct ArchiveEntry<D: Domain> {
    pub individual: Individual<D>,
    pub generation: usize,
}

impl<D: Domain> Clone for ArchiveEntry<D> {
    fn clone(&self) -> Self {
        Self { individual: self.individual.clone(), generation: self.generation }
    }
}

impl<D: Domain> fmt::Debug for ArchiveEntry<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArchiveEntry")
            .field("generation", &self.generation)
            .field("individual", &self.individual)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Insert,
    Replace,
    Discard,
}

/// One archive decision about a frontier candidate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchiveEvent {
    pub generation: usize,
    pub kind: EventKind,
    pub candidate: u64,
    /// Nearest archive entry before the decision, if any.
    pub nearest: Option<u64>,
    pub nearest_distance: Option<f64>,
    pub threshold: f64,
    pub candidate_spread: f64,
    pub nearest_spread: Option<f64>,
}

impl fmt::Display for ArchiveEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            EventKind::Insert => "insert",
            EventKind::Replace => "replace",
            EventKind::Discard => "discard",
        };
        write!(f, "gen={} {kind} candidate={} spread={}", self.generation, self.candidate, self.candidate_spread)?;
        match (self.nearest, self.nearest_distance, self.nearest_spread) {
            (Some(id), Some(d), Some(s)) => {
                write!(f, " nearest={id} distance={d} threshold={} nearest_spread={s}", self.threshold)
            }
            _ => write!(f, " nearest=none threshold={}", self.threshold),
        }
    }
}

/// Frontier pairs kept apart by at least the threshold, with a log of every decision.
pub struct Archive<D: Domain> {
    entries: Vec<ArchiveEntry<D>>,
    threshold: f64,
    events: Vec<ArchiveEvent>,
}

impl<D: Domain> Clone for Archive<D> {
    fn clone(&self) -> Self {
        Self { entries: self.entries.clone(), threshold: self.threshold, events: self.events.clone() }
    }
}

impl<D: Domain> fmt::Debug for Archive<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Archive")
            .field("threshold", &self.threshold)
            .field("entries", &self.entries)
            .field("events", &self.events.len())
            .finish()
    }
}

impl<D: Domain> Archive<D> {
    pub fn new(threshold: f64) -> Self {
        Self { entries: Vec::new(), threshold, events: Vec::new() }
    }

    /// Rebuilds an archive from stored entries without replaying the insertion rules.
    pub fn from_entries(threshold: f64, entries: Vec<ArchiveEntry<D>>) -> Self {
        Self { entries, threshold, events: Vec::new() }
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn entries(&self) -> &[ArchiveEntry<D>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn events(&self) -> &[ArchiveEvent] {
        &self.events
    }

    pub fn event_log(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }

    pub fn has_seed(&self, seed_id: usize) -> bool {
        self.entries.iter().any(|e| e.individual.seed_id == seed_id)
    }

    /// Offers an evaluated candidate. Returns the event, or `None` when the candidate is not a
    /// frontier pair and the archive ignores it.
    pub fn offer(&mut self, domain: &D, candidate: &Individual<D>, generation: usize) -> Option<EventKind> {
        if !candidate.is_frontier() {
            return None;
        }
        let mut candidate = candidate.clone();
        candidate.canonicalize();
        let spread = candidate.spread(domain);

        let distances: Vec<f64> =
            self.entries.iter().map(|e| individual_distance(domain, &candidate, &e.individual)).collect();
        let nearest = distances.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).map(|(i, &d)| (i, d));

        let mut event = ArchiveEvent {
            generation,
            kind: EventKind::Insert,
            candidate: candidate.id,
            nearest: None,
            nearest_distance: None,
            threshold: self.threshold,
            candidate_spread: spread,
            nearest_spread: None,
        };
        match nearest {
            None => self.entries.push(ArchiveEntry { individual: candidate, generation }),
            Some((i, d)) => {
                let incumbent = &self.entries[i].individual;
                let incumbent_spread = incumbent.spread(domain);
                event.nearest = Some(incumbent.id);
                event.nearest_distance = Some(d);
                event.nearest_spread = Some(incumbent_spread);
                if d > self.threshold {
                    self.entries.push(ArchiveEntry { individual: candidate, generation });
                } else if spread < incumbent_spread && distances.iter().enumerate().all(|(j, &dj)| j == i || dj > 0.0) {
                    event.kind = EventKind::Replace;
                    self.entries[i] = ArchiveEntry { individual: candidate, generation };
                } else {
                    event.kind = EventKind::Discard;
                }
            }
        }
        let kind = event.kind;
        self.events.push(event);
        Some(kind)
    }
}
