//! The projection from a strand and the power map, read off trajectories.
//!
//! Seen from strand `k`, every other strand has a direction
//! `w_l = beta_l - beta_k`. Slots are the clockwise order of directions
//! starting at the cut ray. Two strands cross when their directions agree;
//! the one farther from `k` passes over (by default). A strand crossing the
//! cut moves from the last slot to the first or back, which is `z^±1`.
//!
//! For the power map the directions are raised to the power `d`. Preimage
//! crossings stay classical with their sign; new coincidences
//! `arg w_a - arg w_b = 2 pi p / d`, `p != 0`, become virtual. The explicit
//! formula for `f_d` assumes the starting directions are bunched together,
//! so the trajectories are framed by a prologue that contracts the
//! directions towards the interior direction and an epilogue that spreads
//! them back out; neither changes the cylinder braid.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::poly::{roots_in_unit, ComplexPoly, Degenerate, RootKind};
use super::{strand_index, Conventions, CutRay, GeomBraid, GENERIC_TOL};
use crate::error::{Error, Result};
use crate::word::{GroupId, Letter, Word};

/// Samples in the prologue and in the epilogue.
const FRAME_STEPS: usize = 64;
/// The outward cut is turned clockwise by this angle. It stays in the empty
/// sector, and chords of a regular polygon then never lie along a preimage
/// of the cut.
const CUT_TILT: f64 = 0.1;
/// Relative tolerance for "this value is zero" in event polynomials.
const ZERO_REL: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CylinderEventKind {
    /// A classical crossing; strand labels are 0-based indices of the braid.
    Crossing {
        over: usize,
        under: usize,
    },
    Virtual {
        pair: (usize, usize),
    },
    Cut {
        strand: usize,
    },
}

/// One letter of the extracted word with the moment that produced it.
/// Times in `[-1, 0)` and `(1, 2]` belong to the prologue and epilogue of
/// the power map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CylinderEvent {
    pub time: f64,
    pub kind: CylinderEventKind,
    pub letter: Letter,
}

/// The cylinder braid `p_k(g)` as a word in `CPB_{n-1}` (`k` is 1-based).
pub fn project_pk(g: &GeomBraid, k: usize, conv: &Conventions) -> Result<Word> {
    let events = cylinder_events(g, k, 1, conv)?;
    word_of(&events, GroupId::cylinder(g.n() - 1)?)
}

/// The virtual cylinder braid `f_d(p_k(g))` as a word in `VCB_{n-1}`.
pub fn power_map_extract(g: &GeomBraid, k: usize, d: u32, conv: &Conventions) -> Result<Word> {
    let events = cylinder_events(g, k, d, conv)?;
    word_of(&events, GroupId::virtual_cylinder(g.n() - 1)?)
}

fn word_of(events: &[CylinderEvent], group: GroupId) -> Result<Word> {
    Word::new(group, events.iter().map(|e| e.letter).collect())
}

/// The events of `f_d(p_k(g))` in time order.
pub fn cylinder_events(g: &GeomBraid, k: usize, d: u32, conv: &Conventions) -> Result<Vec<CylinderEvent>> {
    let k = strand_index(g, k)?;
    if g.n() < 3 {
        return Err(Error::InvalidParameter("projection needs at least 3 strands".into()));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("degree d must be positive".into()));
    }
    let frame = Frame::new(g, k, d, conv);
    let mut raw = frame.raw_events(d)?;
    raw.sort_by(|x, y| x.time.total_cmp(&y.time));
    check_separated(&raw, &frame.labels)?;
    frame.run(&raw, d, conv)
}

/// Directions from the projection strand on a common time grid.
struct Frame {
    times: Vec<f64>,
    /// Braid index of each tracked strand.
    labels: Vec<usize>,
    /// `pts[i][l]`: direction vector of tracked strand `l` at `times[i]`.
    pts: Vec<Vec<Complex64>>,
    /// Interior direction; the cut ray points the opposite way.
    interior: f64,
}

#[derive(Clone, Copy, Debug)]
enum RawKind {
    Pair {
        a: usize,
        b: usize,
        p: u32,
        /// `arg w_b - arg w_a` increasing through the event.
        b_gains: bool,
        a_farther: bool,
    },
    Cut {
        l: usize,
        ccw: bool,
    },
}

#[derive(Clone, Copy, Debug)]
struct Raw {
    time: f64,
    kind: RawKind,
}

impl Raw {
    fn strands(&self) -> (usize, usize) {
        match self.kind {
            RawKind::Pair { a, b, .. } => (a, b),
            RawKind::Cut { l, .. } => (l, l),
        }
    }
}

impl Frame {
    fn new(g: &GeomBraid, k: usize, d: u32, conv: &Conventions) -> Frame {
        let labels: Vec<usize> = (0..g.n()).filter(|&l| l != k).collect();
        let rel = |t: f64| -> Vec<Complex64> {
            let base = g.position(k, t);
            labels.iter().map(|&l| g.position(l, t) - base).collect()
        };
        let cut = match conv.cut {
            CutRay::Angle(a) => a,
            CutRay::Outward => {
                let start = g.configuration(0.0);
                let centroid = start.iter().sum::<Complex64>() / start.len() as f64;
                let away = start[k] - centroid;
                let base = if away.norm() > 1e-12 { away.arg() } else { -PI / 2.0 };
                base - CUT_TILT
            }
        };
        let interior = cut + PI;
        let mut times = Vec::new();
        let mut pts = Vec::new();
        let main = g.merged_times();
        if d > 1 {
            let first = rel(0.0);
            for step in 0..FRAME_STEPS {
                times.push(-1.0 + step as f64 / FRAME_STEPS as f64);
                pts.push(contract(&first, interior, step, d));
            }
        }
        for &t in &main {
            times.push(t);
            pts.push(rel(t));
        }
        if d > 1 {
            let last = rel(1.0);
            for step in (0..FRAME_STEPS).rev() {
                times.push(1.0 + (FRAME_STEPS - step) as f64 / FRAME_STEPS as f64);
                pts.push(contract(&last, interior, step, d));
            }
        }
        Frame {
            times,
            labels,
            pts,
            interior,
        }
    }

    fn m(&self) -> usize {
        self.labels.len()
    }

    fn raw_events(&self, d: u32) -> Result<Vec<Raw>> {
        let mut out = Vec::new();
        let m = self.m();
        let df = d as f64;
        for seg in 0..self.times.len() - 1 {
            let (t0, t1) = (self.times[seg], self.times[seg + 1]);
            let time = |s: f64| t0 + s * (t1 - t0);
            let line = |l: usize| {
                let z0 = self.pts[seg][l];
                ComplexPoly::linear(z0, self.pts[seg + 1][l] - z0)
            };
            for a in 0..m {
                let wa = line(a);
                for b in a + 1..m {
                    let wb = line(b);
                    let prod = wa.mul(&wb.conj());
                    for p in 0..d {
                        let rot = Complex64::from_polar(1.0, -2.0 * PI * p as f64 / df);
                        let f = prod.scale(rot);
                        let tol = ZERO_REL * wa.magnitude() * wb.magnitude();
                        let roots = match roots_in_unit(&f.im(), tol) {
                            Ok(r) => r,
                            Err(Degenerate) => {
                                if f.eval(0.5).re > 0.0 {
                                    return Err(self.non_generic(
                                        time(0.5),
                                        a,
                                        b,
                                        "persistent alignment of directions",
                                    ));
                                }
                                continue;
                            }
                        };
                        for r in roots {
                            if f.eval(r.s).re <= 0.0 {
                                continue;
                            }
                            if r.kind != RootKind::Crossing {
                                return Err(self.non_generic(time(r.s), a, b, "tangential or breakpoint alignment"));
                            }
                            let slope = f.im().derivative().eval(r.s);
                            out.push(Raw {
                                time: time(r.s),
                                kind: RawKind::Pair {
                                    a,
                                    b,
                                    p,
                                    b_gains: slope < 0.0,
                                    a_farther: wa.eval(r.s).norm() > wb.eval(r.s).norm(),
                                },
                            });
                        }
                    }
                }
            }
            for l in 0..m {
                let wl = line(l);
                for p in 0..d {
                    // preimages of the image cut `d * interior + pi`
                    let ray = self.interior + (PI + 2.0 * PI * p as f64) / df;
                    let f = wl.scale(Complex64::from_polar(1.0, -ray));
                    let tol = ZERO_REL * wl.magnitude();
                    let roots = match roots_in_unit(&f.im(), tol) {
                        Ok(r) => r,
                        Err(Degenerate) => {
                            if f.eval(0.5).re > 0.0 {
                                return Err(self.non_generic(time(0.5), l, l, "strand stays on the cut"));
                            }
                            continue;
                        }
                    };
                    for r in roots {
                        if f.eval(r.s).re <= 0.0 {
                            continue;
                        }
                        if r.kind != RootKind::Crossing {
                            return Err(self.non_generic(time(r.s), l, l, "strand touches the cut"));
                        }
                        out.push(Raw {
                            time: time(r.s),
                            kind: RawKind::Cut {
                                l,
                                ccw: f.im().derivative().eval(r.s) > 0.0,
                            },
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Slot order (tracked indices, first slot first) at grid index `i`.
    fn slot_order(&self, i: usize, d: u32) -> Vec<usize> {
        let cut = d as f64 * self.interior + PI;
        let key = |l: usize| wrap(cut - d as f64 * self.pts[i][l].arg());
        let mut order: Vec<usize> = (0..self.m()).collect();
        order.sort_by(|&x, &y| key(x).total_cmp(&key(y)));
        order
    }

    fn run(&self, raw: &[Raw], d: u32, conv: &Conventions) -> Result<Vec<CylinderEvent>> {
        let m = self.m();
        let mut order = self.slot_order(0, d);
        let mut out = Vec::with_capacity(raw.len());
        for ev in raw {
            let slot_of = |order: &[usize], l: usize| order.iter().position(|&x| x == l).unwrap();
            match ev.kind {
                RawKind::Pair {
                    a,
                    b,
                    p,
                    b_gains,
                    a_farther,
                } => {
                    // the strand whose image direction gains on the other
                    // moves one slot down
                    let (mover, other) = if b_gains { (b, a) } else { (a, b) };
                    let lower = slot_of(&order, other);
                    if slot_of(&order, mover) != lower + 1 {
                        return Err(self.non_generic(ev.time, a, b, "crossing out of slot order"));
                    }
                    let j = lower + 1;
                    let (letter, kind) = if p == 0 {
                        let farther = if a_farther { a } else { b };
                        let nearer = if a_farther { b } else { a };
                        let (over, under) = if conv.over_is_farther {
                            (farther, nearer)
                        } else {
                            (nearer, farther)
                        };
                        let sign = if over == mover { 1 } else { -1 };
                        (
                            Letter::sigma(j, sign),
                            CylinderEventKind::Crossing {
                                over: self.labels[over],
                                under: self.labels[under],
                            },
                        )
                    } else {
                        (
                            Letter::tau(j),
                            CylinderEventKind::Virtual {
                                pair: (self.labels[a], self.labels[b]),
                            },
                        )
                    };
                    order.swap(lower, lower + 1);
                    out.push(CylinderEvent {
                        time: ev.time,
                        kind,
                        letter,
                    });
                }
                RawKind::Cut { l, ccw } => {
                    // counterclockwise through the cut: first slot to last
                    let (expected, power) = if ccw { (0, -1) } else { (m - 1, 1) };
                    if order[expected] != l {
                        return Err(self.non_generic(ev.time, l, l, "cut passage out of slot order"));
                    }
                    if ccw {
                        order.rotate_left(1);
                    } else {
                        order.rotate_right(1);
                    }
                    out.push(CylinderEvent {
                        time: ev.time,
                        kind: CylinderEventKind::Cut { strand: self.labels[l] },
                        letter: Letter::zeta(power),
                    });
                }
            }
        }
        if order != self.slot_order(self.times.len() - 1, d) {
            return Err(Error::NonGenericInput {
                time: self.times[self.times.len() - 1],
                pair: (self.labels[0], self.labels[0]),
                reason: "events do not account for the final slot order",
            });
        }
        Ok(out)
    }

    fn non_generic(&self, time: f64, a: usize, b: usize, reason: &'static str) -> Error {
        Error::NonGenericInput {
            time,
            pair: (self.labels[a], self.labels[b]),
            reason,
        }
    }
}

/// Directions `first` with their angles about `interior` scaled down; step
/// `0` is the most contracted and step `FRAME_STEPS` would be `first`.
fn contract(first: &[Complex64], interior: f64, step: usize, d: u32) -> Vec<Complex64> {
    // contracted spread stays well inside one sector of the d-fold cover
    let lambda0 = 0.25 / d as f64;
    let lambda = libm::pow(lambda0, 1.0 - step as f64 / FRAME_STEPS as f64);
    let axis = Complex64::from_polar(1.0, interior);
    first
        .iter()
        .map(|w| {
            let rel = (w / axis).arg();
            Complex64::from_polar(w.norm(), interior + lambda * rel)
        })
        .collect()
}

pub(crate) fn wrap(x: f64) -> f64 {
    let tau = 2.0 * PI;
    x - tau * libm::floor(x / tau)
}

fn check_separated(raw: &[Raw], labels: &[usize]) -> Result<()> {
    for (i, e) in raw.iter().enumerate() {
        let (a, b) = e.strands();
        for f in raw[i + 1..].iter().take_while(|f| f.time - e.time < GENERIC_TOL) {
            let (c, d) = f.strands();
            if a == c || a == d || b == c || b == d {
                return Err(Error::NonGenericInput {
                    time: e.time,
                    pair: (labels[a], labels[b]),
                    reason: "simultaneous events on one strand",
                });
            }
        }
    }
    Ok(())
}
