//! Matrix representations.
//!
//! * `rho` on virtual cylinder braids: `s_k` acts by the block
//!   `(1-t, t; 1, 0)` on rows and columns `k, k+1 (mod n)`, `t_k` by
//!   `(0, s; s^-1, 0)`, and `z` by the cyclic permutation matrix with ones
//!   at `(j, j+1)`.
//! * `rho_tilde` on flat-virtual braids: `s_i` as above, `p_i` by
//!   `(0, s; s^-1, 0)`, `t_i` by `(0, r; r^-1, 0)`, no wrap-around.
//! * The unreduced and reduced Burau representations of `B_n`.
//!
//! A word `l_1 l_2 ... l_q` maps to the product `M(l_1) M(l_2) ... M(l_q)`.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Matrix, Var};
use crate::word::{Family, GroupId, Letter, LetterKind, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepKind {
    Rho,
    RhoTilde,
    BurauUnreduced,
    BurauReduced,
}

impl RepKind {
    pub fn name(self) -> &'static str {
        match self {
            RepKind::Rho => "rho",
            RepKind::RhoTilde => "rhoTilde",
            RepKind::BurauUnreduced => "burauUnreduced",
            RepKind::BurauReduced => "burauReduced",
        }
    }

    /// The group family the representation is defined on.
    pub fn family(self) -> Family {
        match self {
            RepKind::Rho => Family::VCB,
            RepKind::RhoTilde => Family::FVB,
            RepKind::BurauUnreduced | RepKind::BurauReduced => Family::B,
        }
    }

    pub fn accepts(self, group: GroupId) -> bool {
        match self {
            // CPB is the classical part of VCB
            RepKind::Rho => matches!(group.family(), Family::VCB | Family::CPB),
            _ => group.family() == self.family(),
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho" => Ok(RepKind::Rho),
            "rhoTilde" | "rho-tilde" => Ok(RepKind::RhoTilde),
            "burauUnreduced" | "burau-unreduced" => Ok(RepKind::BurauUnreduced),
            "burauReduced" | "burau-reduced" => Ok(RepKind::BurauReduced),
            other => Err(Error::InvalidParameter(format!("unknown representation `{other}`"))),
        }
    }
}

/// A representation together with its matrix dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RepId {
    pub which: RepKind,
    pub dim: usize,
}

impl RepId {
    pub fn for_group(which: RepKind, group: GroupId) -> Result<Self> {
        if !which.accepts(group) {
            return Err(incompatible(which, group));
        }
        let n = group.strands();
        let dim = match which {
            RepKind::BurauReduced => n - 1,
            _ => n,
        };
        Ok(RepId { which, dim })
    }
}

fn incompatible(which: RepKind, group: GroupId) -> Error {
    Error::IncompatibleRepGroup {
        rep: which.name().to_string(),
        group,
    }
}

type Block = [[LaurentPoly; 2]; 2];

/// The 2x2 blocks shared by every generator image.
struct Blocks {
    sigma: Block,
    sigma_inv: Block,
    swap_s: Block,
    swap_r: Block,
}

impl Blocks {
    fn new() -> Self {
        let one = LaurentPoly::one();
        let zero = LaurentPoly::zero;
        let t = LaurentPoly::t();
        let t_inv = LaurentPoly::var_pow(Var::T, -1);
        let swap = |v: Var| {
            [
                [zero(), LaurentPoly::var_pow(v, 1)],
                [LaurentPoly::var_pow(v, -1), zero()],
            ]
        };
        Blocks {
            sigma: [[&one - &t, t], [one.clone(), zero()]],
            sigma_inv: [[zero(), one.clone()], [t_inv.clone(), &one - &t_inv]],
            swap_s: swap(Var::S),
            swap_r: swap(Var::R),
        }
    }
}

#[derive(Clone, Copy)]
enum Flavor {
    Rho,
    RhoTilde,
    Burau,
}

fn apply_letter(m: &mut Matrix, l: &Letter, group: GroupId, blocks: &Blocks, flavor: Flavor) {
    if l.kind == LetterKind::Zeta {
        m.mul_cyclic_right(l.power);
        return;
    }
    let (a, b) = group.positions(l.index);
    let block = match (l.kind, flavor) {
        (LetterKind::Sigma, _) if l.power > 0 => &blocks.sigma,
        (LetterKind::Sigma, _) => &blocks.sigma_inv,
        (LetterKind::Tau, Flavor::Rho) | (LetterKind::Pi, Flavor::RhoTilde) => &blocks.swap_s,
        (LetterKind::Tau, Flavor::RhoTilde) => &blocks.swap_r,
        _ => unreachable!("letter validated against group"),
    };
    // swap blocks square to the identity
    let reps = if l.kind.is_involution() {
        l.power.rem_euclid(2) as u64
    } else {
        l.power.unsigned_abs()
    };
    for _ in 0..reps {
        m.mul_block_right(a, b, block);
    }
}

fn product(w: &Word, flavor: Flavor) -> Matrix {
    let blocks = Blocks::new();
    let group = w.group();
    let mut m = Matrix::identity(group.strands());
    for l in w.letters() {
        apply_letter(&mut m, l, group, &blocks, flavor);
    }
    m
}

/// Image of a single letter under `rho` in dimension `n` (cyclic indices).
pub fn rho_letter(l: &Letter, n: usize) -> Result<Matrix> {
    let group = GroupId::virtual_cylinder(n)?;
    let w = Word::new(group, alloc::vec![*l])?;
    rho(&w)
}

/// `rho(w)` for a word in `VCB_n` (or its classical part `CPB_n`).
pub fn rho(w: &Word) -> Result<Matrix> {
    if !RepKind::Rho.accepts(w.group()) {
        return Err(incompatible(RepKind::Rho, w.group()));
    }
    Ok(product(w, Flavor::Rho))
}

/// `rho_tilde(w)` for a word in `FVB_m`.
pub fn rho_tilde(w: &Word) -> Result<Matrix> {
    if !RepKind::RhoTilde.accepts(w.group()) {
        return Err(incompatible(RepKind::RhoTilde, w.group()));
    }
    Ok(product(w, Flavor::RhoTilde))
}

/// Unreduced Burau: the `s` block of `rho` without wrap-around.
pub fn burau_unreduced(w: &Word) -> Result<Matrix> {
    if !RepKind::BurauUnreduced.accepts(w.group()) {
        return Err(incompatible(RepKind::BurauUnreduced, w.group()));
    }
    Ok(product(w, Flavor::Burau))
}

/// Reduced Burau: the unreduced action on the quotient by the fixed vector
/// `(1, ..., 1)`, in the basis `e_1, ..., e_{n-1}`. Entry `(i, j)` is
/// `U_ij - U_nj`.
pub fn burau_reduced(w: &Word) -> Result<Matrix> {
    if !RepKind::BurauReduced.accepts(w.group()) {
        return Err(incompatible(RepKind::BurauReduced, w.group()));
    }
    let u = product(w, Flavor::Burau);
    Ok(reduce_by_fixed_vector(&u))
}

fn reduce_by_fixed_vector(u: &Matrix) -> Matrix {
    let n = u.dim();
    let mut r = Matrix::zero(n - 1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            r.set(i, j, u.get(i, j) - u.get(n - 1, j));
        }
    }
    r
}

/// Dispatches on `which`, checking that it acts on the word's group.
pub fn represent(which: RepKind, w: &Word) -> Result<Matrix> {
    match which {
        RepKind::Rho => rho(w),
        RepKind::RhoTilde => rho_tilde(w),
        RepKind::BurauUnreduced => burau_unreduced(w),
        RepKind::BurauReduced => burau_reduced(w),
    }
}
