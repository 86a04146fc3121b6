//! Braids in the thrice-punctured sphere and their flat-virtual crossings.
//!
//! [`q_kl`] normalizes strands `k` and `l` to the punctures `0` and `1` and
//! drops them. A crossing of strands `i < j` happens when `0, 1, gamma_i,
//! gamma_j` are concyclic. After the Moebius map fixing `0, 1` and sending
//! `gamma_i` to `1/2`, `gamma_j` lies on the real line at `x`: it passes
//! over `i` for `x` in `[1/2, 1]`, under for `x` in `[0, 1/2]`, and the
//! crossing is flat otherwise. The NE strand is `j` iff the normalized
//! `gamma_j` moves downwards.
//!
//! With `k -> 0` and `l -> infinity` instead ([`zero_infinity_frame`]) the
//! same moments are those where `v_i / v_j` is real; [`psi_d_events`] adds
//! flat crossings where its argument is a nonzero multiple of `2 pi / d`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::poly::{roots_in_unit, ComplexPoly, Degenerate, RootKind};
use super::realize::{realize_flat_virtual, RoutingScheme};
use super::{linking_number, strand_index, Breakpoint, Conventions, GeomBraid, NeRule, GENERIC_TOL, SEPARATION_TOL};
use crate::error::{Error, Result};
use crate::laurent::Matrix;
use crate::rep::rho_tilde;
use crate::word::{GroupId, Word};

/// Relative tolerance for "this value is zero" in event polynomials.
const ZERO_REL: f64 = 1e-13;
/// Chords may stray from the true trajectory by this fraction of the
/// distance to the nearest puncture or other strand.
const CHORD_FRACTION: f64 = 0.25;
/// Bound on the number of halvings of one input segment.
const MAX_DEPTH: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EventClass {
    /// Strand `j` passes over strand `i`.
    ClassicalOver,
    /// Strand `j` passes under strand `i`.
    ClassicalUnder,
    Flat,
    Virtual,
}

/// One crossing of the flat-virtual braid. Strands are 0-based indices of
/// the punctured braid and `pair.0 < pair.1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event {
    pub time: f64,
    pub pair: (usize, usize),
    pub class: EventClass,
    pub ne_strand: usize,
    /// Generator index of the crossing letter, once realized.
    pub slot_index: Option<usize>,
}

impl Event {
    /// The strand passing over, for classical crossings.
    pub fn over(&self) -> Option<usize> {
        match self.class {
            EventClass::ClassicalOver => Some(self.pair.1),
            EventClass::ClassicalUnder => Some(self.pair.0),
            _ => None,
        }
    }
}

/// How concyclicity moments are located.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Detection {
    /// Zeros of the imaginary part of the cross-ratio `cr(0, 1, gamma_i, gamma_j)`.
    #[default]
    CrossRatio,
    /// Zeros of the imaginary part of `gamma_j` after the normalizing Moebius map.
    Mobius,
}

/// Strands `i != k, l` of a pure braid with pairwise linking numbers zero,
/// mapped by `z -> (z - beta_k) / (beta_l - beta_k)`. `k`, `l` are 1-based.
pub fn q_kl(g: &GeomBraid, k: usize, l: usize) -> Result<GeomBraid> {
    let (k, l) = normalization_strands(g, k, l)?;
    let f = |z: Complex64, zk: Complex64, zl: Complex64| (z - zk) / (zl - zk);
    mobius_image(g, k, l, f, &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
}

/// Like [`q_kl`] with `beta_l` sent to infinity: `z -> (z - beta_k) / (z - beta_l)`.
pub fn zero_infinity_frame(g: &GeomBraid, k: usize, l: usize) -> Result<GeomBraid> {
    let (k, l) = normalization_strands(g, k, l)?;
    let f = |z: Complex64, zk: Complex64, zl: Complex64| (z - zk) / (z - zl);
    mobius_image(g, k, l, f, &[Complex64::new(0.0, 0.0)])
}

fn normalization_strands(g: &GeomBraid, k: usize, l: usize) -> Result<(usize, usize)> {
    let (k0, l0) = (strand_index(g, k)?, strand_index(g, l)?);
    if k0 == l0 {
        return Err(Error::InvalidParameter(
            "normalization needs two distinct strands".into(),
        ));
    }
    if g.n() < 4 {
        return Err(Error::InvalidParameter(
            "the punctured braid needs at least 2 strands, so n >= 4".into(),
        ));
    }
    if !g.is_pure() {
        return Err(Error::NotPure);
    }
    for a in 1..=g.n() {
        for b in a + 1..=g.n() {
            let linking = linking_number(g, a, b)?;
            if linking != 0 {
                return Err(Error::NonZeroLinking {
                    pair: (a - 1, b - 1),
                    linking,
                });
            }
        }
    }
    Ok((k0, l0))
}

/// Samples `f(beta_i, beta_k, beta_l)` for `i != k, l` on a common grid,
/// halving each input segment until every chord stays close to the curve
/// relative to its clearance from the punctures and the other strands.
fn mobius_image<F>(g: &GeomBraid, k: usize, l: usize, f: F, punctures: &[Complex64]) -> Result<GeomBraid>
where
    F: Fn(Complex64, Complex64, Complex64) -> Complex64,
{
    let keep: Vec<usize> = (0..g.n()).filter(|&i| i != k && i != l).collect();
    let at = |t: f64| -> Vec<Complex64> {
        let (zk, zl) = (g.position(k, t), g.position(l, t));
        keep.iter().map(|&i| f(g.position(i, t), zk, zl)).collect()
    };
    let clearance = |pts: &[Complex64], i: usize| -> f64 {
        let to_punctures = punctures.iter().map(|p| (pts[i] - p).norm());
        let to_strands = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, z)| (pts[i] - z).norm());
        to_punctures.chain(to_strands).fold(f64::INFINITY, f64::min)
    };
    let mut times = vec![0.0];
    let mut pts = vec![at(0.0)];
    let main = g.merged_times();
    for w in main.windows(2) {
        // stack of pending pieces, leftmost on top
        let mut stack = vec![(w[1], 0u32)];
        let mut left = w[0];
        while let Some(&(right, depth)) = stack.last() {
            let (a, b) = (at(left), at(right));
            let fine = [0.25, 0.5, 0.75].iter().all(|&u| {
                let mid = at(left + u * (right - left));
                (0..keep.len()).all(|i| {
                    let chord = a[i] + (b[i] - a[i]) * u;
                    (mid[i] - chord).norm() <= CHORD_FRACTION * clearance(&mid, i)
                })
            });
            if fine {
                stack.pop();
                times.push(right);
                pts.push(b);
                left = right;
            } else if depth >= MAX_DEPTH {
                let (i, _) = (0..keep.len())
                    .map(|i| (i, clearance(&a, i)))
                    .fold((0, f64::INFINITY), |best, c| if c.1 < best.1 { c } else { best });
                return Err(Error::PunctureCollision {
                    strand: keep[i],
                    time: left,
                });
            } else {
                stack.pop();
                let mid = 0.5 * (left + right);
                stack.push((right, depth + 1));
                stack.push((mid, depth + 1));
            }
        }
    }
    for (s, w) in times.windows(2).enumerate() {
        for i in 0..keep.len() {
            for p in punctures {
                let (_, dist) = super::closest_on_segment(pts[s][i] - p, pts[s + 1][i] - p);
                if dist < SEPARATION_TOL {
                    return Err(Error::PunctureCollision {
                        strand: keep[i],
                        time: w[0],
                    });
                }
            }
        }
    }
    let strands = (0..keep.len())
        .map(|i| times.iter().zip(&pts).map(|(&t, p)| Breakpoint::new(t, p[i])).collect())
        .collect();
    GeomBraid::new(strands, g.is_pure())
}

/// The crossings of `psi(g)` for a braid in the plane punctured at `0, 1`.
pub fn psi_events(g: &GeomBraid, conv: &Conventions) -> Result<Vec<Event>> {
    psi_events_with(g, conv, Detection::CrossRatio)
}

pub fn psi_events_with(g: &GeomBraid, conv: &Conventions, detection: Detection) -> Result<Vec<Event>> {
    let mut out = Vec::new();
    each_pair_segment(g, |time, i, j, gi, gj| {
        let (f, g_im) = concyclic_polys(gi, gj);
        let detector = match detection {
            Detection::CrossRatio => &f,
            Detection::Mobius => &g_im,
        };
        let tol = ZERO_REL * detector.magnitude();
        let roots = roots_in_unit(&detector.im(), tol)
            .map_err(|Degenerate| non_generic(time(0.5), i, j, "strands stay concyclic with the punctures"))?;
        for r in roots {
            if r.kind != RootKind::Crossing {
                return Err(non_generic(time(r.s), i, j, "tangential or breakpoint concyclicity"));
            }
            let (zi, zj) = (gi.eval(r.s), gj.eval(r.s));
            let x = normalize(zi, zj).re;
            let class = if (0.5..=1.0).contains(&x) {
                EventClass::ClassicalOver
            } else if (0.0..=0.5).contains(&x) {
                EventClass::ClassicalUnder
            } else {
                EventClass::Flat
            };
            let falling = g_im.im().derivative().eval(r.s) < 0.0;
            out.push(Event {
                time: time(r.s),
                pair: (i, j),
                class,
                ne_strand: ne(conv, falling, i, j),
                slot_index: None,
            });
        }
        Ok(())
    })?;
    finish(out)
}

/// The crossings of `psi_d(g)` for a braid in the plane punctured at `0`
/// (with the second puncture at infinity). Classical crossings happen when
/// `v_i / v_j` is positive, the strand farther from `0` passing over; flat
/// ones when its argument is `2 pi p / d`, `0 < p < d`.
pub fn psi_d_events(g: &GeomBraid, d: u32, conv: &Conventions) -> Result<Vec<Event>> {
    if d < 2 {
        return Err(Error::InvalidParameter("psi_d needs d >= 2".into()));
    }
    let mut out = Vec::new();
    each_pair_segment(g, |time, i, j, vi, vj| {
        let prod = vi.mul(&vj.conj());
        for p in 0..d {
            let h = prod.scale(Complex64::from_polar(1.0, -2.0 * PI * p as f64 / d as f64));
            let tol = ZERO_REL * vi.magnitude() * vj.magnitude();
            let roots = match roots_in_unit(&h.im(), tol) {
                Ok(r) => r,
                Err(Degenerate) => {
                    if h.eval(0.5).re > 0.0 {
                        return Err(non_generic(time(0.5), i, j, "ratio stays on a crossing ray"));
                    }
                    continue;
                }
            };
            for r in roots {
                if h.eval(r.s).re <= 0.0 {
                    continue;
                }
                if r.kind != RootKind::Crossing {
                    return Err(non_generic(time(r.s), i, j, "tangential or breakpoint crossing ray"));
                }
                // the argument of v_i / v_j increases through the ray
                let turning = h.im().derivative().eval(r.s) > 0.0;
                let (class, falling) = if p == 0 {
                    let j_farther = vj.eval(r.s).norm() > vi.eval(r.s).norm();
                    let class = if j_farther {
                        EventClass::ClassicalOver
                    } else {
                        EventClass::ClassicalUnder
                    };
                    (class, turning)
                } else {
                    (EventClass::Flat, !turning)
                };
                out.push(Event {
                    time: time(r.s),
                    pair: (i, j),
                    class,
                    ne_strand: ne(conv, falling, i, j),
                    slot_index: None,
                });
            }
        }
        Ok(())
    })?;
    finish(out)
}

/// Calls `visit(time, i, j, line_i, line_j)` for every pair `i < j` on
/// every segment of the merged time grid.
fn each_pair_segment<V>(g: &GeomBraid, mut visit: V) -> Result<()>
where
    V: FnMut(&dyn Fn(f64) -> f64, usize, usize, &ComplexPoly, &ComplexPoly) -> Result<()>,
{
    let times = g.merged_times();
    for w in times.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        let time = move |s: f64| t0 + s * (t1 - t0);
        let lines: Vec<ComplexPoly> = (0..g.n())
            .map(|i| {
                let a = g.position(i, t0);
                ComplexPoly::linear(a, g.position(i, t1) - a)
            })
            .collect();
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                visit(&time, i, j, &lines[i], &lines[j])?;
            }
        }
    }
    Ok(())
}

/// The cross-ratio numerator times the conjugate denominator, and the same
/// for `gamma_j` after the normalizing Moebius map. Both have real values
/// exactly at the concyclic moments.
fn concyclic_polys(gi: &ComplexPoly, gj: &ComplexPoly) -> (ComplexPoly, ComplexPoly) {
    let one = Complex64::new(1.0, 0.0);
    let gi1 = gi.add_constant(-one);
    let gj1 = gj.add_constant(-one);
    let cross = gi.mul(&gj1).mul(&gi1.mul(gj).conj());
    let num = gj.mul(&gi1);
    let den = gi.scale(Complex64::new(2.0, 0.0)).add_constant(-one).mul(gj).sub(gi);
    (cross, num.mul(&den.conj()))
}

/// The Moebius map fixing `0` and `1` and sending `g` to `1/2`, applied to `z`.
pub fn normalize(g: Complex64, z: Complex64) -> Complex64 {
    z * (g - 1.0) / ((2.0 * g - 1.0) * z - g)
}

fn ne(conv: &Conventions, falling: bool, i: usize, j: usize) -> usize {
    let j_is_ne = match conv.ne_rule {
        NeRule::NegativeImaginary => falling,
        NeRule::PositiveImaginary => !falling,
    };
    if j_is_ne {
        j
    } else {
        i
    }
}

fn non_generic(time: f64, i: usize, j: usize, reason: &'static str) -> Error {
    Error::NonGenericInput {
        time,
        pair: (i, j),
        reason,
    }
}

/// Sorts by time and refuses simultaneous events on a common strand.
fn finish(mut events: Vec<Event>) -> Result<Vec<Event>> {
    events.sort_by(|x, y| x.time.total_cmp(&y.time));
    for (n, e) in events.iter().enumerate() {
        for f in events[n + 1..].iter().take_while(|f| f.time - e.time < GENERIC_TOL) {
            let (a, b) = e.pair;
            if [a, b].contains(&f.pair.0) || [a, b].contains(&f.pair.1) {
                return Err(non_generic(e.time, a, b, "simultaneous events on one strand"));
            }
        }
    }
    Ok(events)
}

/// Which flat-virtual image of a pure braid to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiVariant {
    /// Punctures at `0` and `1`.
    Psi,
    /// Punctures at `0` and infinity, flat crossings at the `d`-th roots of unity.
    PsiD(u32),
}

/// The flat-virtual word `psi(q_kl(g))` or `psi_d(...)`; the flat braid
/// relation is part of the group for `d > 2`.
pub fn psi_word(
    g: &GeomBraid,
    k: usize,
    l: usize,
    variant: PsiVariant,
    conv: &Conventions,
    scheme: RoutingScheme,
) -> Result<Word> {
    let m = g.n().saturating_sub(2);
    let (events, group) = match variant {
        PsiVariant::Psi => (psi_events(&q_kl(g, k, l)?, conv)?, GroupId::flat_virtual(m, false)?),
        PsiVariant::PsiD(d) => (
            psi_d_events(&zero_infinity_frame(g, k, l)?, d, conv)?,
            GroupId::flat_virtual(m, d > 2)?,
        ),
    };
    realize_flat_virtual(&events, group, scheme)
}

/// `rho_tilde(psi(q_kl(g)))`.
pub fn psi_matrix(
    g: &GeomBraid,
    k: usize,
    l: usize,
    variant: PsiVariant,
    conv: &Conventions,
    scheme: RoutingScheme,
) -> Result<Matrix> {
    rho_tilde(&psi_word(g, k, l, variant, conv, scheme)?)
}
