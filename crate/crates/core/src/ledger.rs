//! Charged-work accounting.
//!
//! Every algorithm on a pc-list takes a `&mut WorkLedger` and charges one unit
//! for each step its cost argument attributes to a vertex or to a stored list
//! element. Work bounds then become plain assertions on the totals.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Charge {
    /// Discovering, dequeuing, labeling or merging a vertex.
    Vertex,
    /// Inspecting, marking, unmarking or unlinking one stored list element.
    Element,
    /// Queue and stack operations not already covered by a vertex charge.
    Queue,
    /// Per-run setup and other bookkeeping.
    Misc,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WorkLedger {
    pub vertex_charge: u64,
    pub pclist_element_charge: u64,
    pub queue_op: u64,
    pub ledger_misc: u64,
}

impl WorkLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    #[inline]
    pub fn charge(&mut self, c: Charge) {
        self.charge_n(c, 1);
    }

    #[inline]
    pub fn charge_n(&mut self, c: Charge, k: u64) {
        match c {
            Charge::Vertex => self.vertex_charge += k,
            Charge::Element => self.pclist_element_charge += k,
            Charge::Queue => self.queue_op += k,
            Charge::Misc => self.ledger_misc += k,
        }
    }

    pub fn snapshot(&self) -> WorkLedger {
        *self
    }

    pub fn get(&self, c: Charge) -> u64 {
        match c {
            Charge::Vertex => self.vertex_charge,
            Charge::Element => self.pclist_element_charge,
            Charge::Queue => self.queue_op,
            Charge::Misc => self.ledger_misc,
        }
    }

    pub fn total(&self) -> u64 {
        self.vertex_charge + self.pclist_element_charge + self.queue_op + self.ledger_misc
    }

    /// Adds another ledger's counts into this one.
    pub fn absorb(&mut self, other: &WorkLedger) {
        self.vertex_charge += other.vertex_charge;
        self.pclist_element_charge += other.pclist_element_charge;
        self.queue_op += other.queue_op;
        self.ledger_misc += other.ledger_misc;
    }

    /// Counts accumulated since `earlier`.
    pub fn since(&self, earlier: &WorkLedger) -> WorkLedger {
        WorkLedger {
            vertex_charge: self.vertex_charge - earlier.vertex_charge,
            pclist_element_charge: self.pclist_element_charge - earlier.pclist_element_charge,
            queue_op: self.queue_op - earlier.queue_op,
            ledger_misc: self.ledger_misc - earlier.ledger_misc,
        }
    }
}
