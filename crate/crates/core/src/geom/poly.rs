//! Real polynomials of low degree on the unit interval.
//!
//! Events along a polyline segment are the zeros of `Im` of a product of
//! linear complex functions, so at most degree four. Roots are isolated by
//! splitting at the roots of the derivative (found recursively) and then
//! refined by bisection.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

/// Bisection stops once the bracket is narrower than this (in the segment
/// parameter, which is never longer than the time axis).
pub(crate) const BISECTION_WIDTH: f64 = 1e-13;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RealPoly {
    /// `coef[i]` multiplies `s^i`.
    coef: Vec<f64>,
}

/// How a zero of a polynomial was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RootKind {
    /// A sign change inside the interval.
    Crossing,
    /// An extremum whose value is within tolerance of zero.
    Touch,
    /// An end of the interval with value within tolerance of zero.
    Endpoint,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Root {
    pub s: f64,
    pub kind: RootKind,
}

/// The polynomial is within tolerance of zero on the whole interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Degenerate;

impl RealPoly {
    pub fn new(mut coef: Vec<f64>) -> Self {
        while coef.len() > 1 && coef.last() == Some(&0.0) {
            coef.pop();
        }
        if coef.is_empty() {
            coef.push(0.0);
        }
        RealPoly { coef }
    }

    pub fn degree(&self) -> usize {
        self.coef.len() - 1
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.coef.iter().rev().fold(0.0, |acc, &c| acc * s + c)
    }

    pub fn derivative(&self) -> RealPoly {
        if self.coef.len() == 1 {
            return RealPoly::new(vec![0.0]);
        }
        RealPoly::new(
            self.coef
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    fn max_abs(&self) -> f64 {
        self.coef.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Complex polynomial with the same coefficient layout; only used to build
/// the real and imaginary parts of products.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct ComplexPoly {
    pub coef: Vec<Complex64>,
}

impl ComplexPoly {
    /// `a + b s`.
    pub fn linear(a: Complex64, b: Complex64) -> Self {
        ComplexPoly { coef: vec![a, b] }
    }

    pub fn mul(&self, other: &ComplexPoly) -> ComplexPoly {
        let mut coef = vec![Complex64::new(0.0, 0.0); self.coef.len() + other.coef.len() - 1];
        for (i, a) in self.coef.iter().enumerate() {
            for (j, b) in other.coef.iter().enumerate() {
                coef[i + j] += a * b;
            }
        }
        ComplexPoly { coef }
    }

    pub fn conj(&self) -> ComplexPoly {
        ComplexPoly {
            coef: self.coef.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn scale(&self, k: Complex64) -> ComplexPoly {
        ComplexPoly {
            coef: self.coef.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add_constant(&self, k: Complex64) -> ComplexPoly {
        let mut coef = self.coef.clone();
        coef[0] += k;
        ComplexPoly { coef }
    }

    pub fn sub(&self, other: &ComplexPoly) -> ComplexPoly {
        let len = self.coef.len().max(other.coef.len());
        let at = |c: &[Complex64], i: usize| c.get(i).copied().unwrap_or_default();
        ComplexPoly {
            coef: (0..len).map(|i| at(&self.coef, i) - at(&other.coef, i)).collect(),
        }
    }

    pub fn eval(&self, s: f64) -> Complex64 {
        self.coef
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * s + c)
    }

    pub fn im(&self) -> RealPoly {
        RealPoly::new(self.coef.iter().map(|c| c.im).collect())
    }

    /// Sum of coefficient moduli, an upper bound for `|p(s)|` on `[0, 1]`.
    pub fn magnitude(&self) -> f64 {
        self.coef.iter().map(|c| c.norm()).sum()
    }
}

/// Zeros of `p` in `[0, 1]`, in increasing order.
///
/// Values with modulus at most `zero_tol` count as zero: extrema and
/// endpoints that small are returned as [`RootKind::Touch`] and
/// [`RootKind::Endpoint`] so that the caller can decide whether they matter.
pub(crate) fn roots_in_unit(p: &RealPoly, zero_tol: f64) -> Result<Vec<Root>, Degenerate> {
    if p.max_abs() <= zero_tol {
        return Err(Degenerate);
    }
    let mut out = Vec::new();
    let mut cuts = vec![0.0];
    if p.degree() >= 2 {
        for c in sign_changes(&p.derivative(), 0.0, 1.0) {
            if p.eval(c).abs() <= zero_tol {
                out.push(Root {
                    s: c,
                    kind: RootKind::Touch,
                });
            }
            cuts.push(c);
        }
    }
    cuts.push(1.0);
    out.extend(bracketed_roots(p, &cuts).into_iter().map(|s| Root {
        s,
        kind: RootKind::Crossing,
    }));
    for s in [0.0, 1.0] {
        if p.eval(s).abs() <= zero_tol {
            out.push(Root {
                s,
                kind: RootKind::Endpoint,
            });
        }
    }
    // a crossing found exactly at a flagged point sorts after it and is dropped
    out.sort_by(|x, y| {
        x.s.total_cmp(&y.s)
            .then((x.kind == RootKind::Crossing).cmp(&(y.kind == RootKind::Crossing)))
    });
    out.dedup_by(|later, earlier| later.s == earlier.s && later.kind == RootKind::Crossing);
    Ok(out)
}

/// Zeros of `p` with a sign change inside `(lo, hi)`, without any tolerance
/// checks; used for the critical points.
fn sign_changes(p: &RealPoly, lo: f64, hi: f64) -> Vec<f64> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let mut cuts = vec![lo];
    if p.degree() >= 2 {
        cuts.extend(sign_changes(&p.derivative(), lo, hi));
    }
    cuts.push(hi);
    bracketed_roots(p, &cuts)
}

fn bracketed_roots(p: &RealPoly, cuts: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (p.eval(a), p.eval(b));
        if fa == 0.0 {
            if out.last() != Some(&a) {
                out.push(a);
            }
            continue;
        }
        if fa * fb < 0.0 {
            out.push(bisect(p, a, b, fa));
        }
    }
    out
}

fn bisect(p: &RealPoly, mut a: f64, mut b: f64, fa: f64) -> f64 {
    let positive_at_a = fa > 0.0;
    for _ in 0..200 {
        if b - a <= BISECTION_WIDTH {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = p.eval(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == positive_at_a {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(roots: &[f64]) -> RealPoly {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, &x) in c.iter().enumerate() {
                next[i] -= r * x;
                next[i + 1] += x;
            }
            c = next;
        }
        RealPoly::new(c)
    }

    fn crossings(p: &RealPoly) -> Vec<f64> {
        roots_in_unit(p, 1e-14)
            .unwrap()
            .into_iter()
            .filter(|r| r.kind == RootKind::Crossing)
            .map(|r| r.s)
            .collect()
    }

    #[test]
    fn isolates_simple_roots() {
        let r = crossings(&from_roots(&[0.1, 0.35, 0.6, 0.9]));
        assert_eq!(r.len(), 4);
        for (x, y) in r.iter().zip([0.1, 0.35, 0.6, 0.9]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(crossings(&from_roots(&[-0.5, 1.5])).is_empty());
    }

    #[test]
    fn flags_degenerate_cases() {
        assert_eq!(roots_in_unit(&RealPoly::new(vec![1e-20, 0.0]), 1e-12), Err(Degenerate));
        let touch = roots_in_unit(&from_roots(&[0.5, 0.5]), 1e-12).unwrap();
        assert!(touch.iter().any(|r| r.kind == RootKind::Touch));
        let end = roots_in_unit(&from_roots(&[0.0, 0.5]), 1e-12).unwrap();
        assert_eq!(
            end[0],
            Root {
                s: 0.0,
                kind: RootKind::Endpoint
            }
        );
    }

    #[test]
    fn complex_products() {
        let a = ComplexPoly::linear(Complex64::new(1.0, -1.0), Complex64::new(0.0, 2.0));
        let p = a.mul(&a.conj());
        for s in [0.0, 0.3, 1.0] {
            let v = a.eval(s);
            assert!((p.eval(s).re - v.norm_sqr()).abs() < 1e-12);
            assert!(p.im().eval(s).abs() < 1e-12);
        }
    }
}
