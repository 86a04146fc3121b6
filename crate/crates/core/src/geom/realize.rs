//! Flat-virtual words from crossing lists.
//!
//! Strands are kept in a linear order, initially by index. For a crossing
//! of the strands at positions `a < b`, virtual crossings bring them
//! together with the NE strand on the right, the crossing letter swaps
//! them, and virtual crossings take the moved strand back. At the end the
//! order is sorted back to the identity with virtual crossings. Different
//! detours give the same flat-virtual braid.

use alloc::vec::Vec;

use super::psi::{Event, EventClass};
use crate::error::{Error, Result};
use crate::word::{Family, GroupId, Letter, Word};

/// Where the virtual detours go.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RoutingScheme {
    /// The strand at `b` travels down to `a + 1` and back.
    #[default]
    RouteAndReturn,
    /// The strand at `a` travels up to `b - 1` and back.
    SwapInPlace,
}

struct Builder {
    order: Vec<usize>,
    letters: Vec<Letter>,
}

impl Builder {
    /// Swaps positions `q` and `q + 1` (0-based) with `letter`.
    fn swap(&mut self, q: usize, letter: fn(usize) -> Letter) {
        self.order.swap(q, q + 1);
        self.letters.push(letter(q + 1));
    }

    fn virtual_swap(&mut self, q: usize) {
        self.swap(q, Letter::tau);
    }

    fn position(&self, strand: usize) -> usize {
        self.order.iter().position(|&s| s == strand).unwrap()
    }

    /// The crossing of the strands at positions `q`, `q + 1`; returns the
    /// generator index.
    fn cross(&mut self, q: usize, e: &Event) -> usize {
        if self.order[q + 1] != e.ne_strand {
            self.virtual_swap(q);
        }
        let letter = match e.over() {
            Some(over) => Letter::sigma(q + 1, if over == e.ne_strand { 1 } else { -1 }),
            None if e.class == EventClass::Flat => Letter::pi(q + 1),
            None => Letter::tau(q + 1),
        };
        self.order.swap(q, q + 1);
        self.letters.push(letter);
        q + 1
    }
}

/// The word of the events in `group`, a flat-virtual braid group.
pub fn realize_flat_virtual(events: &[Event], group: GroupId, scheme: RoutingScheme) -> Result<Word> {
    realize_with_slots(events, group, scheme).map(|r| r.0)
}

/// As [`realize_flat_virtual`], also returning the events with the
/// generator index of their crossing letter.
pub fn realize_with_slots(events: &[Event], group: GroupId, scheme: RoutingScheme) -> Result<(Word, Vec<Event>)> {
    if group.family() != Family::FVB {
        return Err(Error::InvalidGroup(alloc::format!(
            "crossings are realized in FVB, not {group}"
        )));
    }
    let m = group.strands();
    let mut b = Builder {
        order: (0..m).collect(),
        letters: Vec::new(),
    };
    let mut slotted = Vec::with_capacity(events.len());
    for e in events {
        let (i, j) = e.pair;
        if i >= m || j >= m || i == j || (e.ne_strand != i && e.ne_strand != j) {
            return Err(Error::InvalidParameter(alloc::format!(
                "event on strands ({}, {}) does not fit {group}",
                i + 1,
                j + 1
            )));
        }
        let (pi, pj) = (b.position(i), b.position(j));
        let (lo, hi) = (pi.min(pj), pi.max(pj));
        let slot = match scheme {
            RoutingScheme::RouteAndReturn => {
                for q in (lo + 1..hi).rev() {
                    b.virtual_swap(q);
                }
                let slot = b.cross(lo, e);
                for q in lo + 1..hi {
                    b.virtual_swap(q);
                }
                slot
            }
            RoutingScheme::SwapInPlace => {
                for q in lo..hi - 1 {
                    b.virtual_swap(q);
                }
                let slot = b.cross(hi - 1, e);
                for q in (lo..hi - 1).rev() {
                    b.virtual_swap(q);
                }
                slot
            }
        };
        slotted.push(Event {
            slot_index: Some(slot),
            ..*e
        });
    }
    // bubble sort back to the identity
    for end in (1..m).rev() {
        for q in 0..end {
            if b.order[q] > b.order[q + 1] {
                b.virtual_swap(q);
            }
        }
    }
    Ok((Word::new(group, b.letters)?, slotted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::rho_tilde;
    use alloc::string::ToString;

    fn event(pair: (usize, usize), class: EventClass, ne: usize) -> Event {
        Event {
            time: 0.5,
            pair,
            class,
            ne_strand: ne,
            slot_index: None,
        }
    }

    fn fvb(m: usize) -> GroupId {
        GroupId::flat_virtual(m, false).unwrap()
    }

    #[test]
    fn adjacent_events() {
        let over = [event((0, 1), EventClass::ClassicalOver, 1)];
        let w = realize_flat_virtual(&over, fvb(3), RoutingScheme::default()).unwrap();
        assert_eq!(w.to_string(), "s1 t1");
        let under = [event((0, 1), EventClass::ClassicalUnder, 1)];
        let w = realize_flat_virtual(&under, fvb(3), RoutingScheme::default()).unwrap();
        assert_eq!(w.to_string(), "s1^-1 t1");
        let flat = [event((1, 2), EventClass::Flat, 2)];
        let w = realize_flat_virtual(&flat, fvb(3), RoutingScheme::default()).unwrap();
        assert_eq!(w.to_string(), "p2 t2");
    }

    #[test]
    fn ne_on_the_left_is_routed_virtually() {
        let e = [event((0, 1), EventClass::ClassicalOver, 0)];
        let (w, slotted) = realize_with_slots(&e, fvb(2), RoutingScheme::default()).unwrap();
        assert_eq!(w.to_string(), "t1 s1^-1");
        assert_eq!(slotted[0].slot_index, Some(1));
    }

    #[test]
    fn schemes_agree_under_rho_tilde() {
        let events = [
            event((0, 3), EventClass::ClassicalOver, 0),
            event((1, 3), EventClass::Flat, 3),
            event((0, 2), EventClass::ClassicalUnder, 2),
            event((0, 3), EventClass::ClassicalUnder, 3),
            event((1, 3), EventClass::Flat, 1),
        ];
        let a = realize_flat_virtual(&events, fvb(4), RoutingScheme::RouteAndReturn).unwrap();
        let b = realize_flat_virtual(&events, fvb(4), RoutingScheme::SwapInPlace).unwrap();
        assert_ne!(a, b);
        assert_eq!(rho_tilde(&a).unwrap(), rho_tilde(&b).unwrap());
    }

    #[test]
    fn rejects_foreign_strands() {
        let e = [event((0, 5), EventClass::Flat, 0)];
        assert!(realize_flat_virtual(&e, fvb(3), RoutingScheme::default()).is_err());
        assert!(realize_flat_virtual(&[], GroupId::braid(3).unwrap(), RoutingScheme::default()).is_err());
    }
}
