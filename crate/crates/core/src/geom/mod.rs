//! Braids as piecewise-linear trajectories in the plane.
//!
//! A [`GeomBraid`] is an independent route to the word-level maps: the
//! projection from one strand and the power map are read off the moments at
//! which directions coincide ([`cylinder`]), and the two-puncture pipeline is
//! read off the moments at which two strands are concyclic with two fixed
//! punctures ([`psi`], [`realize`]).
//!
//! All event conditions are polynomial on a linear segment, so detection is
//! exact up to floating-point root refinement. Configurations that are not
//! generic (coincident events, tangencies, persistent alignments) are
//! refused with [`Error::NonGenericInput`] rather than guessed at.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::sample;
use crate::word::{Family, Word};

pub mod cylinder;
mod poly;
pub mod psi;
pub mod realize;

pub use cylinder::{cylinder_events, power_map_extract, project_pk, CylinderEvent, CylinderEventKind};
pub use psi::{
    normalize, psi_d_events, psi_events, psi_events_with, psi_matrix, psi_word, q_kl, zero_infinity_frame, Detection,
    Event, EventClass, PsiVariant,
};
pub use realize::{realize_flat_virtual, realize_with_slots, RoutingScheme};

/// Bisection width for event times.
pub const ROOT_TOL: f64 = 1e-12;
/// Two events closer than this that share a strand make the input non-generic.
pub const GENERIC_TOL: f64 = 1e-9;
/// Minimum distance between strands at all times.
pub const SEPARATION_TOL: f64 = 1e-8;
/// Winding numbers must be this close to an integer.
pub const WINDING_TOL: f64 = 1e-6;
/// Segments of the polyline approximating one half-turn. Odd and prime, so
/// that symmetric moments of the circle configuration fall between
/// breakpoints.
pub const HALF_TURN_STEPS: usize = 17;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Breakpoint {
    pub t: f64,
    pub z: Complex64,
}

impl Breakpoint {
    pub fn new(t: f64, z: Complex64) -> Self {
        Breakpoint { t, z }
    }
}

/// Direction of the half-turn that realizes `s_i^{+1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Rotation {
    #[default]
    Counterclockwise,
    Clockwise,
}

/// Where the cylinder is cut open, seen from the projection strand.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum CutRay {
    /// Pointing away from the centroid of the starting configuration, turned
    /// slightly clockwise. For points on a circle this lies in the empty
    /// sector facing outwards; it is (nearly) straight down when the
    /// projection strand starts at the bottom.
    #[default]
    Outward,
    /// A fixed direction, in radians.
    Angle(f64),
}

/// Which sign of the normalized vertical velocity marks the NE strand.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NeRule {
    #[default]
    NegativeImaginary,
    PositiveImaginary,
}

/// The pictorial choices that the word-level maps depend on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Conventions {
    pub positive_sigma: Rotation,
    /// In the projection from a strand, the strand farther from it passes over.
    pub over_is_farther: bool,
    pub cut: CutRay,
    pub ne_rule: NeRule,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            positive_sigma: Rotation::Counterclockwise,
            over_is_farther: true,
            cut: CutRay::Outward,
            ne_rule: NeRule::NegativeImaginary,
        }
    }
}

/// Piecewise-linear strands `[0, 1] -> C`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeomBraid {
    strands: Vec<Vec<Breakpoint>>,
    pure: bool,
}

impl GeomBraid {
    /// Validates time stamps, endpoint agreement for pure braids and strand
    /// separation.
    pub fn new(strands: Vec<Vec<Breakpoint>>, pure: bool) -> Result<Self> {
        if strands.is_empty() {
            return Err(Error::InvalidBraid("no strands".into()));
        }
        for (l, s) in strands.iter().enumerate() {
            let ok = s.len() >= 2
                && s[0].t == 0.0
                && s[s.len() - 1].t == 1.0
                && s.windows(2).all(|w| w[0].t < w[1].t)
                && s.iter().all(|b| b.z.re.is_finite() && b.z.im.is_finite());
            if !ok {
                return Err(Error::InvalidBraid(format!(
                    "strand {} needs finite points with times increasing from 0 to 1",
                    l + 1
                )));
            }
        }
        let g = GeomBraid { strands, pure };
        if pure {
            let (start, end) = (g.configuration(0.0), g.configuration(1.0));
            for (l, (a, b)) in start.iter().zip(&end).enumerate() {
                if (a - b).norm() > GENERIC_TOL {
                    return Err(Error::InvalidBraid(format!(
                        "declared pure but strand {} does not return",
                        l + 1
                    )));
                }
            }
        }
        if let Some((pair, time)) = g
            .closest_approach()
            .filter(|c| c.2 < SEPARATION_TOL)
            .map(|c| (c.0, c.1))
        {
            return Err(Error::InvalidBraid(format!(
                "strands {} and {} meet near t = {time:.12}",
                pair.0 + 1,
                pair.1 + 1
            )));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.strands.len()
    }

    pub fn strands(&self) -> &[Vec<Breakpoint>] {
        &self.strands
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    /// Position of strand `l` (0-based) at time `t`.
    pub fn position(&self, l: usize, t: f64) -> Complex64 {
        let s = &self.strands[l];
        let i = s.partition_point(|b| b.t <= t);
        if i == 0 {
            return s[0].z;
        }
        if i == s.len() {
            return s[s.len() - 1].z;
        }
        let (a, b) = (s[i - 1], s[i]);
        let u = (t - a.t) / (b.t - a.t);
        a.z + (b.z - a.z) * u
    }

    pub fn configuration(&self, t: f64) -> Vec<Complex64> {
        (0..self.n()).map(|l| self.position(l, t)).collect()
    }

    /// Union of all breakpoint times; every strand is linear between
    /// consecutive entries.
    pub fn merged_times(&self) -> Vec<f64> {
        let mut times: Vec<f64> = self.strands.iter().flatten().map(|b| b.t).collect();
        times.sort_by(f64::total_cmp);
        times.dedup();
        times
    }

    /// The pair of strands that come closest, with the time and distance.
    fn closest_approach(&self) -> Option<((usize, usize), f64, f64)> {
        let times = self.merged_times();
        let configs: Vec<Vec<Complex64>> = times.iter().map(|&t| self.configuration(t)).collect();
        let mut best: Option<((usize, usize), f64, f64)> = None;
        for seg in 0..times.len() - 1 {
            for i in 0..self.n() {
                for j in i + 1..self.n() {
                    let d0 = configs[seg][i] - configs[seg][j];
                    let d1 = configs[seg + 1][i] - configs[seg + 1][j];
                    let (s, dist) = closest_on_segment(d0, d1);
                    if best.is_none_or(|b| dist < b.2) {
                        let t = times[seg] + s * (times[seg + 1] - times[seg]);
                        best = Some(((i, j), t, dist));
                    }
                }
            }
        }
        best
    }

    /// Smallest distance between two strands over the whole braid.
    pub fn min_separation(&self) -> f64 {
        self.closest_approach().map_or(f64::INFINITY, |c| c.2)
    }

    /// Where each strand ends, as an index into the starting configuration;
    /// `None` if some endpoint is not a starting point.
    pub fn endpoint_permutation(&self) -> Option<Vec<usize>> {
        let start = self.configuration(0.0);
        let end = self.configuration(1.0);
        end.iter()
            .map(|e| start.iter().position(|s| (s - e).norm() <= GENERIC_TOL))
            .collect()
    }

    /// Inserts `factor - 1` evenly spaced breakpoints into every segment.
    /// The trajectories are unchanged.
    pub fn resample(&self, factor: usize) -> GeomBraid {
        let factor = factor.max(1);
        let strands = self
            .strands
            .iter()
            .map(|s| {
                let mut out = vec![s[0]];
                for w in s.windows(2) {
                    for q in 1..factor {
                        let u = q as f64 / factor as f64;
                        out.push(Breakpoint::new(
                            w[0].t + u * (w[1].t - w[0].t),
                            w[0].z + (w[1].z - w[0].z) * u,
                        ));
                    }
                    out.push(w[1]);
                }
                out
            })
            .collect();
        GeomBraid {
            strands,
            pure: self.pure,
        }
    }

    /// `self` on `[0, 1/2]` followed by `other` on `[1/2, 1]`.
    pub fn concat(&self, other: &GeomBraid) -> Result<GeomBraid> {
        if self.n() != other.n() {
            return Err(Error::DimMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut strands = Vec::with_capacity(self.n());
        for (a, b) in self.strands.iter().zip(&other.strands) {
            if (a[a.len() - 1].z - b[0].z).norm() > GENERIC_TOL {
                return Err(Error::InvalidBraid(
                    "second braid does not start where the first ends".into(),
                ));
            }
            let mut s: Vec<Breakpoint> = a.iter().map(|p| Breakpoint::new(0.5 * p.t, p.z)).collect();
            s.extend(b.iter().skip(1).map(|p| Breakpoint::new(0.5 + 0.5 * p.t, p.z)));
            strands.push(s);
        }
        GeomBraid::new(strands, self.pure && other.pure)
    }
}

pub(crate) fn closest_on_segment(d0: Complex64, d1: Complex64) -> (f64, f64) {
    let dd = d1 - d0;
    let len2 = dd.norm_sqr();
    let s = if len2 == 0.0 {
        0.0
    } else {
        (-(d0.re * dd.re + d0.im * dd.im) / len2).clamp(0.0, 1.0)
    };
    (s, (d0 + dd * s).norm())
}

/// `n` points equally spaced on the unit circle, counterclockwise, with
/// point 1 at the bottom.
pub fn circle_configuration(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::from_polar(1.0, -PI / 2.0 + 2.0 * PI * j as f64 / n as f64))
        .collect()
}

/// Trajectories realizing a word in `B_n` from the circle configuration.
pub fn artin_dynamics(w: &Word, conv: &Conventions) -> Result<GeomBraid> {
    artin_dynamics_from(&circle_configuration(w.group().strands()), w, conv)
}

/// Trajectories realizing `w` from the given starting points: each letter
/// `s_i^±1` swaps the points in positions `i, i+1` by a half-turn about
/// their midpoint, one letter per equal time slice.
pub fn artin_dynamics_from(start: &[Complex64], w: &Word, conv: &Conventions) -> Result<GeomBraid> {
    if w.group().family() != Family::B {
        return Err(Error::InvalidGroup(format!(
            "dynamics need a word in B_n, got {}",
            w.group()
        )));
    }
    let n = w.group().strands();
    if start.len() != n {
        return Err(Error::DimMismatch {
            left: start.len(),
            right: n,
        });
    }
    let letters: Vec<_> = w.unit_letters().collect();
    let slices = letters.len().max(1) as f64;
    // strand sitting at each position, and the point of each position
    let mut strand_at: Vec<usize> = (0..n).collect();
    let points = start.to_vec();
    let mut strands: Vec<Vec<Breakpoint>> = start.iter().map(|&z| vec![Breakpoint::new(0.0, z)]).collect();
    for (q, l) in letters.iter().enumerate() {
        let t0 = q as f64 / slices;
        let t1 = (q + 1) as f64 / slices;
        let (a, b) = (l.index - 1, l.index);
        let mid = (points[a] + points[b]) * 0.5;
        let ccw = (l.power > 0) == (conv.positive_sigma == Rotation::Counterclockwise);
        let turn = if ccw { PI } else { -PI };
        for (from, to) in [(a, b), (b, a)] {
            let s = &mut strands[strand_at[from]];
            if s[s.len() - 1].t < t0 {
                s.push(Breakpoint::new(t0, points[from]));
            }
            for step in 1..HALF_TURN_STEPS {
                let u = step as f64 / HALF_TURN_STEPS as f64;
                let z = mid + (points[from] - mid) * Complex64::from_polar(1.0, turn * u);
                s.push(Breakpoint::new(t0 + u * (t1 - t0), z));
            }
            s.push(Breakpoint::new(t1, points[to]));
        }
        strand_at.swap(a, b);
    }
    for (pos, &l) in strand_at.iter().enumerate() {
        let s = &mut strands[l];
        if s[s.len() - 1].t < 1.0 {
            s.push(Breakpoint::new(1.0, points[pos]));
        }
    }
    GeomBraid::new(strands, w.is_pure())
}

/// Moves every interior breakpoint by at most `magnitude`, deterministically
/// in `seed`. Endpoints stay fixed.
pub fn perturb(g: &GeomBraid, seed: u64, magnitude: f64) -> Result<GeomBraid> {
    if magnitude == 0.0 {
        return Ok(g.clone());
    }
    // each strand moves by at most `magnitude`, so distances shrink by at
    // most twice that
    if magnitude.is_nan() || magnitude <= 0.0 || 2.0 * magnitude >= g.min_separation() - SEPARATION_TOL {
        return Err(Error::SeparationViolated);
    }
    let mut rng = sample::rng(seed);
    let strands = g
        .strands
        .iter()
        .map(|s| {
            let last = s.len() - 1;
            s.iter()
                .enumerate()
                .map(|(i, b)| {
                    if i == 0 || i == last {
                        return *b;
                    }
                    let r = magnitude * libm::sqrt(rng.gen::<f64>());
                    let phi = 2.0 * PI * rng.gen::<f64>();
                    Breakpoint::new(b.t, b.z + Complex64::from_polar(r, phi))
                })
                .collect()
        })
        .collect();
    GeomBraid::new(strands, g.pure).map_err(|_| Error::SeparationViolated)
}

/// Total winding of `beta_i - beta_j` in full turns (strands 1-based).
pub fn linking_number(g: &GeomBraid, i: usize, j: usize) -> Result<i64> {
    let (a, b) = (strand_index(g, i)?, strand_index(g, j)?);
    if a == b {
        return Err(Error::InvalidParameter("linking number needs two strands".into()));
    }
    let times = g.merged_times();
    let mut angle = 0.0;
    let mut prev = g.position(a, times[0]) - g.position(b, times[0]);
    for &t in &times[1..] {
        let cur = g.position(a, t) - g.position(b, t);
        // a segment avoiding the origin turns by less than a half-turn
        angle += (cur / prev).arg();
        prev = cur;
    }
    let turns = angle / (2.0 * PI);
    let rounded = libm::round(turns);
    if (turns - rounded).abs() > WINDING_TOL {
        return Err(Error::NonIntegerWinding { pair: (a, b), turns });
    }
    Ok(rounded as i64)
}

/// Checks a 1-based strand index.
pub(crate) fn strand_index(g: &GeomBraid, k: usize) -> Result<usize> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("strand {k} outside 1..{}", g.n())));
    }
    Ok(k - 1)
}

/// Starting points near the unit circle with seeded radial and angular
/// jitter, so that no four of them (or two of them with the punctures of a
/// normalization) are concyclic.
pub fn jittered_circle<R: Rng>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let step = 2.0 * PI / n as f64;
    (0..n)
        .map(|j| {
            let r = 1.0 + 0.15 * (rng.gen::<f64>() - 0.5);
            let a = -PI / 2.0 + step * (j as f64 + 0.2 * (rng.gen::<f64>() - 0.5));
            Complex64::from_polar(r, a)
        })
        .collect()
}

/// A seeded pure braid on `n` strands in which every pair of strands has
/// linking number zero: the dynamics of `commutators` random commutators of
/// pure generators from a jittered circle.
pub fn random_zero_linking_braid(n: usize, commutators: usize, seed: u64) -> Result<(Word, GeomBraid)> {
    let mut rng = sample::rng(seed);
    let group = crate::word::GroupId::braid(n)?;
    let w = sample::random_zero_linking_word(group, commutators, &mut rng)?;
    let start = jittered_circle(n, &mut rng);
    let g = artin_dynamics_from(&start, &w, &Conventions::default())?;
    Ok((w, g))
}
