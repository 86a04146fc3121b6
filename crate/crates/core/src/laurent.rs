//! Laurent polynomials in `t, s, r` over the integers, and square matrices
//! over them.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The three ring variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    S,
    R,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::T, Var::S, Var::R];

    fn slot(self) -> usize {
        match self {
            Var::T => 0,
            Var::S => 1,
            Var::R => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::S => "s",
            Var::R => "r",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent triple `(e_t, e_s, e_r)` of a monomial `t^e_t s^e_s r^e_r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [i32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var, exp: i32) -> Self {
        let mut e = [0; 3];
        e[v.slot()] = exp;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0[v.slot()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn inverse(&self) -> Self {
        Monomial([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

/// An element of `Z[t^±1, s^±1, r^±1]`.
///
/// Stored as a map from monomial to coefficient; zero coefficients are never
/// stored, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    /// `v^exp`.
    pub fn var_pow(v: Var, exp: i32) -> Self {
        Self::monomial(1, Monomial::var(v, exp))
    }

    pub fn t() -> Self {
        Self::var_pow(Var::T, 1)
    }

    pub fn s() -> Self {
        Self::var_pow(Var::S, 1)
    }

    pub fn r() -> Self {
        Self::var_pow(Var::R, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// `Some((c, m))` if the polynomial is a single term `c * m`.
    pub fn as_term(&self) -> Option<(&BigInt, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// True for `±` a monomial, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.as_term().is_some_and(|(c, _)| c.abs().is_one())
    }

    /// Multiplies by `c * m` in place.
    pub fn mul_term(&self, c: &BigInt, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes the assignment. Exact.
    pub fn eval(&self, a: &Assignment) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for var in Var::ALL {
                let e = m.exponent(var);
                if e != 0 {
                    v *= num_traits::Pow::pow(a.get(var), e);
                }
            }
            acc += v;
        }
        acc
    }

    /// Largest absolute exponent of `v` across all terms.
    pub fn spread(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v).abs()).max().unwrap_or(0)
    }

    /// True when no term carries a nonzero power of `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exponent(v) == 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// `c*t^a*s^b*r^c` terms joined by ` + ` / ` - `; unit exponents and
    /// unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut wrote = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str("*")?;
                }
                f.write_str(v.name())?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

/// Nonzero rational values for `t`, `s`, `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: [BigRational; 3],
}

impl Assignment {
    pub fn new(t: BigRational, s: BigRational, r: BigRational) -> Result<Self> {
        let values = [t, s, r];
        for v in Var::ALL {
            if values[v.slot()].is_zero() {
                return Err(Error::ZeroAssignment(v));
            }
        }
        Ok(Assignment { values })
    }

    pub fn from_integers(t: i64, s: i64, r: i64) -> Result<Self> {
        Self::new(
            BigRational::from_integer(t.into()),
            BigRational::from_integer(s.into()),
            BigRational::from_integer(r.into()),
        )
    }

    pub fn get(&self, v: Var) -> &BigRational {
        &self.values[v.slot()]
    }
}

impl Default for Assignment {
    fn default() -> Self {
        let one = BigRational::one();
        Assignment {
            values: [one.clone(), one.clone(), one],
        }
    }
}

impl FromStr for Assignment {
    type Err = Error;

    /// `t=-1,s=1` or `t=2/3, r=-1`; unassigned variables default to 1.
    fn from_str(text: &str) -> Result<Self> {
        let mut values: [BigRational; 3] = Assignment::default().values;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part.split_once('=').ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: alloc::format!("expected `var=value`, got `{part}`"),
            })?;
            let var = match name.trim() {
                "t" => Var::T,
                "s" => Var::S,
                "r" => Var::R,
                other => {
                    return Err(Error::Syntax {
                        pos: 0,
                        msg: alloc::format!("unknown variable `{other}`"),
                    })
                }
            };
            values[var.slot()] = parse_rational(value.trim())?;
        }
        let [t, s, r] = values;
        Assignment::new(t, s, r)
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Syntax {
        pos: 0,
        msg: alloc::format!("not a rational number: `{text}`"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Square matrix over [`LaurentPoly`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = LaurentPoly::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Matrix {
            dim,
            entries: alloc::vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("empty matrix".to_string()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_identity(&self) -> bool {
        self.rows().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
        })
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Right multiplication by a matrix that is the identity outside rows and
    /// columns `a`, `b`, where it equals `block` (`[[m_aa, m_ab], [m_ba, m_bb]]`).
    pub fn mul_block_right(&mut self, a: usize, b: usize, block: &[[LaurentPoly; 2]; 2]) {
        let n = self.dim;
        for row in 0..n {
            let x = &self.entries[row * n + a];
            let y = &self.entries[row * n + b];
            if x.is_zero() && y.is_zero() {
                continue;
            }
            let mut new_a = x * &block[0][0];
            new_a += &(y * &block[1][0]);
            let mut new_b = x * &block[0][1];
            new_b += &(y * &block[1][1]);
            self.entries[row * n + a] = new_a;
            self.entries[row * n + b] = new_b;
        }
    }

    /// Right multiplication by the cyclic permutation matrix with ones at
    /// `(j, j+1)` and `(n, 1)`, raised to `power`.
    pub fn mul_cyclic_right(&mut self, power: i64) {
        let n = self.dim;
        let shift = power.rem_euclid(n as i64) as usize;
        if shift == 0 {
            return;
        }
        // column c of M Z^p is column c - p of M
        for row in self.entries.chunks_mut(n) {
            row.rotate_right(shift);
        }
    }

    pub fn eval(&self, a: &Assignment) -> RationalMatrix {
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.eval(a)).collect(),
        }
    }

    /// Determinant by Laplace expansion along the first row. Intended for the
    /// small dimensions used here.
    pub fn determinant(&self) -> LaurentPoly {
        let idx: Vec<usize> = (0..self.dim).collect();
        det_minor(self, 0, &idx)
    }
}

fn det_minor(m: &Matrix, row: usize, cols: &[usize]) -> LaurentPoly {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = LaurentPoly::zero();
    for (n, &c) in cols.iter().enumerate() {
        let e = m.get(row, c);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e * &det_minor(m, row + 1, &rest);
        if n % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

impl fmt::Display for Matrix {
    /// One row per line, entries separated by `, `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Square matrix over `Q`, the result of evaluating a [`Matrix`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = alloc::vec![BigRational::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigRational::one();
        }
        RationalMatrix { dim, entries }
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            entries.extend(row.iter().map(|&x| BigRational::from_integer(x.into())));
        }
        Ok(RationalMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Entries as integers, if all are integral.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        self.rows()
            .map(|row| row.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut entries = alloc::vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(RationalMatrix { dim: n, entries })
    }

    pub fn sub(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        })
    }

    /// Row echelon form by Gaussian elimination; returns the reduced rows and
    /// the sign/scale accumulated determinant.
    fn eliminate(&self) -> (Vec<Vec<BigRational>>, usize, BigRational) {
        let n = self.dim;
        let mut rows: Vec<Vec<BigRational>> = self.rows().map(|r| r.to_vec()).collect();
        let mut det = BigRational::one();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                det = BigRational::zero();
                continue;
            };
            if p != rank {
                rows.swap(p, rank);
                det = -det;
            }
            let pivot = rows[rank][col].clone();
            det *= &pivot;
            let (top, below) = rows.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in below.iter_mut().filter(|row| !row[col].is_zero()) {
                let f = &row[col] / &pivot;
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
            rank += 1;
        }
        (rows, rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1
    }

    pub fn determinant(&self) -> BigRational {
        self.eliminate().2
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}
