//! The projection `p_k: PB_n -> CPB_{n-1}`, the power map
//! `f_d: CPB_m -> VCB_m`, and their composition with `rho`.
//!
//! Place the `n` strands of a braid at the vertices of a circle, numbered
//! counterclockwise, and watch the others from strand `k`. Seen from
//! position `pos`, the strand at position `j` occupies cylinder slot
//! `(pos - j) mod n`; slots are counted clockwise from the cut, which sits
//! in the empty angular sector facing away from the circle. Generators that
//! do not touch the projection strand become a single cylinder crossing;
//! the two that move it either sweep the partner through every other
//! strand (`Dc^±1`) or across the cut (`z^±1`):
//!
//! | letter             | image          | `pos` after |
//! |--------------------|----------------|-------------|
//! | `s_i^e`, other `i` | `s_{pos-i-1}^e`| `pos`       |
//! | `s_{pos-1}`        | `z^-1`         | `pos - 1`   |
//! | `s_{pos-1}^-1`     | `Dc`           | `pos - 1`   |
//! | `s_pos`            | `Dc^-1`        | `pos + 1`   |
//! | `s_pos^-1`         | `z`            | `pos + 1`   |
//!
//! The translation is a cocycle: it depends on where the projection strand
//! currently is, and it multiplies correctly once that strand returns home,
//! in particular on pure words.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::Matrix;
use crate::rep;
use crate::word::{delta_c, delta_v, Family, GroupId, Letter, LetterKind, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PipelineConfig {
    n: usize,
    k: usize,
    d: u32,
}

impl PipelineConfig {
    pub fn new(n: usize, k: usize, d: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(alloc::format!(
                "pipeline needs n >= 3 strands, got {n}"
            )));
        }
        if !(1..=n).contains(&k) {
            return Err(Error::InvalidParameter(alloc::format!(
                "projection strand k = {k} outside 1..{n}"
            )));
        }
        if d == 0 {
            return Err(Error::InvalidParameter("degree d must be positive".into()));
        }
        Ok(PipelineConfig { n, k, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// Whether `p_k` insists on a pure input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Purity {
    #[default]
    Require,
    /// Letter-level evaluation of non-pure words (unit tests, calibration).
    Bypass,
}

/// `p_k(w)` as a word in `CPB_{n-1}`.
pub fn project(w: &Word, k: usize, purity: Purity) -> Result<Word> {
    let group = w.group();
    if group.family() != Family::B {
        return Err(Error::InvalidGroup(alloc::format!(
            "p_k takes a word in B_n, got {group}"
        )));
    }
    let n = group.strands();
    if n < 3 {
        return Err(Error::InvalidParameter("p_k needs n >= 3".into()));
    }
    if !(1..=n).contains(&k) {
        return Err(Error::IndexOutOfRange {
            kind: LetterKind::Sigma,
            index: k as i64,
            group,
        });
    }
    if purity == Purity::Require && !w.is_pure() {
        return Err(Error::NotPure);
    }
    let (out, end) = project_from(w, k)?;
    if purity == Purity::Require {
        debug_assert_eq!(end, k);
    }
    Ok(out)
}

/// Translates `w` letter by letter with the projection strand starting at
/// position `start`; returns the cylinder word and the final position.
pub fn project_from(w: &Word, start: usize) -> Result<(Word, usize)> {
    let n = w.group().strands();
    let cyl = GroupId::cylinder(n - 1)?;
    let dc = delta_c(cyl)?;
    let dc_inv = dc.invert();
    let mut pos = start;
    let mut out: Vec<Letter> = Vec::new();
    for l in w.unit_letters() {
        let i = l.index;
        let e = l.power;
        if i + 1 == pos {
            if e > 0 {
                out.push(Letter::zeta(-1));
            } else {
                out.extend_from_slice(dc.letters());
            }
            pos -= 1;
        } else if i == pos {
            if e > 0 {
                out.extend_from_slice(dc_inv.letters());
            } else {
                out.push(Letter::zeta(1));
            }
            pos += 1;
        } else {
            let slot = (pos as i64 - i as i64 - 1).rem_euclid(n as i64) as usize;
            debug_assert!((1..n - 1).contains(&slot));
            out.push(Letter::sigma(slot, e));
        }
    }
    Ok((Word::new(cyl, out)?, pos))
}

/// `f_d(z) = z (Dv z)^(d-1)` as a word in `VCB_m`.
pub fn power_of_zeta(m: usize, d: u32) -> Result<Word> {
    let vcb = GroupId::virtual_cylinder(m)?;
    let z = Word::new(vcb, alloc::vec![Letter::zeta(1)])?;
    let tail = delta_v(vcb)?.concat(&z)?.pow(d as i64 - 1);
    z.concat(&tail)
}

/// `f_d(w)` for a cylinder word: classical letters are kept, `z^±1` becomes
/// `f_d(z)^±1`, and the wrap letter `s_m^e` becomes `f_d(z) s_1^e f_d(z)^-1`
/// (because `z s_1 z^-1 = s_m` in the cylinder).
pub fn power_map(w: &Word, d: u32) -> Result<Word> {
    let group = w.group();
    if group.family() != Family::CPB {
        return Err(Error::InvalidGroup(alloc::format!(
            "f_d takes a word in CPB_m, got {group}"
        )));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("degree d must be positive".into()));
    }
    let m = group.strands();
    let fz = power_of_zeta(m, d)?;
    let fz_inv = fz.invert();
    let mut out: Vec<Letter> = Vec::new();
    for l in w.letters() {
        match l.kind {
            LetterKind::Zeta => {
                let block = if l.power > 0 { &fz } else { &fz_inv };
                for _ in 0..l.power.unsigned_abs() {
                    out.extend_from_slice(block.letters());
                }
            }
            LetterKind::Sigma if l.index == m => {
                out.extend_from_slice(fz.letters());
                out.push(Letter::sigma(1, l.power));
                out.extend_from_slice(fz_inv.letters());
            }
            _ => out.push(*l),
        }
    }
    Word::new(GroupId::virtual_cylinder(m)?, out)
}

/// `f_d(p_k(w))` in `VCB_{n-1}`.
pub fn pipeline_word(w: &Word, cfg: &PipelineConfig, purity: Purity) -> Result<Word> {
    check_source(w, cfg)?;
    let cyl = project(w, cfg.k, purity)?;
    power_map(&cyl, cfg.d)
}

/// `rho(f_d(p_k(w)))`, a matrix of dimension `n - 1` over `Z[t^±1, s^±1]`.
pub fn pipeline_matrix(w: &Word, cfg: &PipelineConfig) -> Result<Matrix> {
    rep::rho(&pipeline_word(w, cfg, Purity::Require)?)
}

fn check_source(w: &Word, cfg: &PipelineConfig) -> Result<()> {
    let g = w.group();
    if g.family() != Family::B || g.strands() != cfg.n {
        return Err(Error::InvalidGroup(alloc::format!(
            "pipeline configured for B{} but word is in {g}",
            cfg.n
        )));
    }
    Ok(())
}
