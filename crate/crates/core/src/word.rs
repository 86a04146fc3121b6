//! Group alphabets, braid words, the word grammar and relation suites.
//!
//! Four families of groups share one letter type:
//!
//! | family | letters          | index range           |
//! |--------|------------------|-----------------------|
//! | `B`    | `s`              | `1..n-1`              |
//! | `CPB`  | `s`, `z`         | `1..m`, cyclic        |
//! | `VCB`  | `s`, `t`, `z`    | `1..m`, cyclic        |
//! | `FVB`  | `s`, `p`, `t`    | `1..m-1`              |
//!
//! In the cylinder families the generator `s_m` acts on strands `m` and `1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Artin braid group.
    B,
    /// Braids in the cylinder.
    CPB,
    /// Virtual braids in the cylinder.
    VCB,
    /// Flat-virtual braids.
    FVB,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::B => "B",
            Family::CPB => "CPB",
            Family::VCB => "VCB",
            Family::FVB => "FVB",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupId {
    family: Family,
    strands: usize,
    flat_braid_relation: bool,
}

impl GroupId {
    pub fn new(family: Family, strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidGroup(format!(
                "{}{strands}: need at least 2 strands",
                family.name()
            )));
        }
        Ok(GroupId {
            family,
            strands,
            flat_braid_relation: false,
        })
    }

    /// Adds the flat third Reidemeister move to an `FVB` group.
    pub fn with_flat_braid_relation(mut self, on: bool) -> Result<Self> {
        if on && self.family != Family::FVB {
            return Err(Error::InvalidGroup(format!(
                "flat braid relation only applies to FVB, not {}",
                self.family.name()
            )));
        }
        self.flat_braid_relation = on;
        Ok(self)
    }

    pub fn braid(n: usize) -> Result<Self> {
        Self::new(Family::B, n)
    }

    pub fn cylinder(m: usize) -> Result<Self> {
        Self::new(Family::CPB, m)
    }

    pub fn virtual_cylinder(m: usize) -> Result<Self> {
        Self::new(Family::VCB, m)
    }

    pub fn flat_virtual(m: usize, flat_braid_relation: bool) -> Result<Self> {
        Self::new(Family::FVB, m)?.with_flat_braid_relation(flat_braid_relation)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn flat_braid_relation(&self) -> bool {
        self.flat_braid_relation
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.family, Family::CPB | Family::VCB)
    }

    pub fn allows(&self, kind: LetterKind) -> bool {
        use LetterKind::*;
        match self.family {
            Family::B => kind == Sigma,
            Family::CPB => matches!(kind, Sigma | Zeta),
            Family::VCB => matches!(kind, Sigma | Tau | Zeta),
            Family::FVB => matches!(kind, Sigma | Pi | Tau),
        }
    }

    /// Largest admissible generator index.
    pub fn max_index(&self) -> usize {
        if self.is_cyclic() {
            self.strands
        } else {
            self.strands - 1
        }
    }

    /// The two zero-based strand positions a generator with this index acts on.
    pub fn positions(&self, index: usize) -> (usize, usize) {
        (index - 1, index % self.strands)
    }

    fn check(&self, letter: &Letter) -> Result<()> {
        if !self.allows(letter.kind) {
            return Err(Error::KindNotInGroup {
                kind: letter.kind,
                group: *self,
            });
        }
        if letter.kind != LetterKind::Zeta && !(1..=self.max_index()).contains(&letter.index) {
            return Err(Error::IndexOutOfRange {
                kind: letter.kind,
                index: letter.index as i64,
                group: *self,
            });
        }
        if letter.power == 0 {
            return Err(Error::InvalidParameter("letter with zero power".to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.name(), self.strands)?;
        if self.flat_braid_relation {
            f.write_str("+flat")?;
        }
        Ok(())
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// `B5`, `CPB4`, `VCB4`, `FVB4`, `FVB4+flat`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (body, flat) = match text.strip_suffix("+flat") {
            Some(b) => (b, true),
            None => (text, false),
        };
        let split = body
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::InvalidGroup(format!("`{text}`: missing strand count")))?;
        let family = match &body[..split] {
            "B" => Family::B,
            "CPB" => Family::CPB,
            "VCB" => Family::VCB,
            "FVB" => Family::FVB,
            other => return Err(Error::InvalidGroup(format!("unknown family `{other}`"))),
        };
        let strands: usize = body[split..]
            .parse()
            .map_err(|_| Error::InvalidGroup(format!("`{text}`: bad strand count")))?;
        GroupId::new(family, strands)?.with_flat_braid_relation(flat)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterKind {
    /// Classical crossing.
    Sigma,
    /// Virtual crossing.
    Tau,
    /// Flat crossing.
    Pi,
    /// Rotation of the cylinder by one slot.
    Zeta,
}

impl LetterKind {
    pub fn symbol(self) -> char {
        match self {
            LetterKind::Sigma => 's',
            LetterKind::Tau => 't',
            LetterKind::Pi => 'p',
            LetterKind::Zeta => 'z',
        }
    }

    /// Virtual and flat crossings are involutions.
    pub fn is_involution(self) -> bool {
        matches!(self, LetterKind::Tau | LetterKind::Pi)
    }
}

impl fmt::Display for LetterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LetterKind::Sigma => "sigma",
            LetterKind::Tau => "tau",
            LetterKind::Pi => "pi",
            LetterKind::Zeta => "zeta",
        };
        f.write_str(name)
    }
}

/// A generator raised to a nonzero power. `index` is 0 for `zeta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
    pub power: i64,
}

impl Letter {
    pub fn sigma(index: usize, power: i64) -> Self {
        Letter {
            kind: LetterKind::Sigma,
            index,
            power,
        }
    }

    pub fn tau(index: usize) -> Self {
        Letter {
            kind: LetterKind::Tau,
            index,
            power: 1,
        }
    }

    pub fn pi(index: usize) -> Self {
        Letter {
            kind: LetterKind::Pi,
            index,
            power: 1,
        }
    }

    pub fn zeta(power: i64) -> Self {
        Letter {
            kind: LetterKind::Zeta,
            index: 0,
            power,
        }
    }

    pub fn inverse(self) -> Self {
        let power = if self.kind.is_involution() {
            self.power.abs()
        } else {
            -self.power
        };
        Letter { power, ..self }
    }

    fn same_generator(&self, other: &Letter) -> bool {
        self.kind == other.kind && self.index == other.index
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.symbol())?;
        if self.kind != LetterKind::Zeta {
            write!(f, "{}", self.index)?;
        }
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// A word over the alphabet of `group`. Letters are stored as given; use
/// [`Word::free_reduce`] for the reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    group: GroupId,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(group: GroupId, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            group.check(l)?;
        }
        Ok(Word { group, letters })
    }

    pub fn empty(group: GroupId) -> Self {
        Word {
            group,
            letters: Vec::new(),
        }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters read in another group, revalidated.
    pub fn retarget(&self, group: GroupId) -> Result<Word> {
        Word::new(group, self.letters.clone())
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        self.group.check(&letter)?;
        self.letters.push(letter);
        Ok(())
    }

    /// Concatenation `self · other`; both words must live in the same group.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.group != other.group {
            return Err(Error::InvalidGroup(format!(
                "cannot concatenate words of {} and {}",
                self.group, other.group
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            group: self.group,
            letters,
        })
    }

    /// `self^p` for any integer `p`.
    pub fn pow(&self, p: i64) -> Word {
        let base = if p < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * p.unsigned_abs() as usize);
        for _ in 0..p.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word {
            group: self.group,
            letters,
        }
    }

    pub fn invert(&self) -> Word {
        Word {
            group: self.group,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Every letter rewritten as repeated `±1` letters.
    pub fn unit_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().flat_map(|l| {
            let unit = Letter {
                power: l.power.signum(),
                ..*l
            };
            core::iter::repeat_n(unit, l.power.unsigned_abs() as usize)
        })
    }

    /// Merges adjacent powers of the same generator, drops zero powers and
    /// reduces `tau`/`pi` powers mod 2.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let mut l = *l;
            if l.kind.is_involution() {
                l.power = l.power.rem_euclid(2);
            }
            if l.power == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.same_generator(&l) => {
                    top.power += l.power;
                    if top.kind.is_involution() {
                        top.power = top.power.rem_euclid(2);
                    }
                    if top.power == 0 {
                        out.pop();
                    }
                }
                _ => out.push(l),
            }
        }
        Word {
            group: self.group,
            letters: out,
        }
    }

    /// `result[s]` is the zero-based position where strand `s` ends.
    ///
    /// Each `s`, `t`, `p` letter of odd power swaps the two positions it acts
    /// on; `z` moves the strand at position `j` to position `j+1` (cyclically).
    pub fn underlying_permutation(&self) -> Vec<usize> {
        let n = self.group.strands;
        let mut at: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            match l.kind {
                LetterKind::Zeta => {
                    let shift = l.power.rem_euclid(n as i64) as usize;
                    at.rotate_right(shift);
                }
                _ => {
                    if l.power % 2 != 0 {
                        let (a, b) = self.group.positions(l.index);
                        at.swap(a, b);
                    }
                }
            }
        }
        let mut result = vec![0; n];
        for (pos, strand) in at.into_iter().enumerate() {
            result[strand] = pos;
        }
        result
    }

    pub fn is_pure(&self) -> bool {
        self.underlying_permutation().iter().enumerate().all(|(i, &p)| i == p)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Which of the two commutator conventions `comm(x; y)` and `BIGELOW5` use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CommutatorConvention {
    /// `x y x^-1 y^-1`; reproduces the published Bigelow-element matrix.
    #[default]
    InverseLast,
    /// `x^-1 y^-1 x y`.
    InverseFirst,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub commutator: CommutatorConvention,
}

pub fn commutator(x: &Word, y: &Word, conv: CommutatorConvention) -> Result<Word> {
    match conv {
        CommutatorConvention::InverseLast => x.concat(y)?.concat(&x.invert())?.concat(&y.invert()),
        CommutatorConvention::InverseFirst => x.invert().concat(&y.invert())?.concat(x)?.concat(y),
    }
}

/// `s_1 s_2 ... s_{m-1}` in a group on `m` strands.
pub fn delta_c(group: GroupId) -> Result<Word> {
    let m = group.strands();
    Word::new(group, (1..m).map(|i| Letter::sigma(i, 1)).collect())
}

/// `t_1 t_2 ... t_{m-1}` in a group on `m` strands.
pub fn delta_v(group: GroupId) -> Result<Word> {
    let m = group.strands();
    Word::new(group, (1..m).map(Letter::tau).collect())
}

/// The standard pure braid generator
/// `A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)`, `i < j`.
pub fn pure_generator(group: GroupId, i: usize, j: usize) -> Result<Word> {
    if i == 0 || i >= j {
        return Err(Error::IndexOutOfRange {
            kind: LetterKind::Sigma,
            index: i as i64,
            group,
        });
    }
    if j > group.strands() {
        return Err(Error::IndexOutOfRange {
            kind: LetterKind::Sigma,
            index: j as i64,
            group,
        });
    }
    let mut letters: Vec<Letter> = (i + 1..j).rev().map(|k| Letter::sigma(k, 1)).collect();
    letters.push(Letter::sigma(i, 2));
    letters.extend((i + 1..j).map(|k| Letter::sigma(k, -1)));
    Word::new(group, letters)
}

/// Bigelow's 5-strand element of the Burau kernel, `[a, b]` with
/// `a = psi1^-1 s4 psi1`, `b = psi2^-1 s4 s3 s2 s1^2 s2 s3 s4 psi2`.
pub fn bigelow5(group: GroupId, conv: CommutatorConvention) -> Result<Word> {
    let s = |i: usize, p: i64| Letter::sigma(i, p);
    let psi1 = Word::new(
        group,
        vec![s(3, -1), s(2, 1), s(1, 2), s(2, 1), s(4, 3), s(3, 1), s(2, 1)],
    )?;
    let psi2 = Word::new(
        group,
        vec![
            s(4, -1),
            s(3, 1),
            s(2, 1),
            s(1, -2),
            s(2, 1),
            s(1, 2),
            s(2, 2),
            s(1, 1),
            s(4, 5),
        ],
    )?;
    let a = psi1.invert().concat(&Word::new(group, vec![s(4, 1)])?)?.concat(&psi1)?;
    let middle = Word::new(
        group,
        vec![s(4, 1), s(3, 1), s(2, 1), s(1, 2), s(2, 1), s(3, 1), s(4, 1)],
    )?;
    let b = psi2.invert().concat(&middle)?.concat(&psi2)?;
    commutator(&a, &b, conv)
}

/// Expands a single macro (`Dc`, `Dv`, `A[i,j]`, `BIGELOW5`, `comm(x; y)`)
/// without free reduction.
pub fn expand_macro(name: &str, group: GroupId, opts: &ParseOptions) -> Result<Word> {
    let mut p = Parser::new(name, group, opts);
    p.skip_ws();
    let w = p
        .macro_term()?
        .ok_or_else(|| Error::UnknownMacro(name.trim().to_string()))?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("trailing input after macro"));
    }
    Ok(w)
}

/// Parses the word grammar and returns the freely reduced word.
///
/// ```text
/// word  := term*
/// term  := atom ('^' int)?
/// atom  := gen | '(' word ')' | macro
/// gen   := ('s'|'t'|'p') int | 'z'
/// macro := 'Dc' | 'Dv' | 'A[' int ',' int ']' | 'comm(' word ';' word ')' | 'BIGELOW5'
/// ```
pub fn parse_word(text: &str, group: GroupId) -> Result<Word> {
    parse_word_with(text, group, &ParseOptions::default())
}

pub fn parse_word_with(text: &str, group: GroupId, opts: &ParseOptions) -> Result<Word> {
    let mut p = Parser::new(text, group, opts);
    let w = p.word()?;
    if !p.at_end() {
        return Err(p.syntax("unexpected character"));
    }
    Ok(w.free_reduce())
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    group: GroupId,
    opts: &'a ParseOptions,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, group: GroupId, opts: &'a ParseOptions) -> Self {
        Parser {
            src,
            pos: 0,
            group,
            opts,
        }
    }

    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        self.skip_ws();
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected `{s}`")))
        }
    }

    fn uint(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.syntax("number too large"))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat("-");
        if !neg {
            self.eat("+");
        }
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    /// Parses terms until end of input, `)` or `;`.
    fn word(&mut self) -> Result<Word> {
        let mut out = Word::empty(self.group);
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') | Some(b';') => return Ok(out),
                _ => {
                    let t = self.term()?;
                    out.letters.extend(t.letters);
                }
            }
        }
    }

    fn term(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.eat("^") {
            let p = self.int()?;
            return Ok(match atom {
                Atom::Letter(mut l) => {
                    l.power *= p;
                    if l.power == 0 {
                        Word::empty(self.group)
                    } else {
                        Word::new(self.group, vec![l])?
                    }
                }
                Atom::Word(w) => w.pow(p),
            });
        }
        Ok(match atom {
            Atom::Letter(l) => Word::new(self.group, vec![l])?,
            Atom::Word(w) => w,
        })
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.eat("(") {
            let w = self.word()?;
            self.expect(")")?;
            return Ok(Atom::Word(w));
        }
        if let Some(w) = self.macro_term()? {
            return Ok(Atom::Word(w));
        }
        let start = self.pos;
        let kind = match self.peek() {
            Some(b's') => LetterKind::Sigma,
            Some(b't') => LetterKind::Tau,
            Some(b'p') => LetterKind::Pi,
            Some(b'z') => LetterKind::Zeta,
            Some(c) if c.is_ascii_uppercase() => {
                let name: String = self.rest().chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
                return Err(Error::UnknownMacro(name));
            }
            _ => return Err(self.syntax("expected a generator, `(` or a macro")),
        };
        self.pos += 1;
        let letter = if kind == LetterKind::Zeta {
            Letter::zeta(1)
        } else {
            let index = self.uint().map_err(|_| Error::Syntax {
                pos: start,
                msg: "generator needs an index".to_string(),
            })?;
            Letter { kind, index, power: 1 }
        };
        if self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            return Err(self.syntax("unexpected character after generator"));
        }
        self.group.check(&letter)?;
        Ok(Atom::Letter(letter))
    }

    fn macro_term(&mut self) -> Result<Option<Word>> {
        let g = self.group;
        if self.eat("BIGELOW5") {
            return bigelow5(g, self.opts.commutator).map(Some);
        }
        if self.eat("Dc") {
            return delta_c(g).map(Some);
        }
        if self.eat("Dv") {
            return delta_v(g).map(Some);
        }
        if self.eat("A[") {
            self.skip_ws();
            let i = self.uint()?;
            self.expect(",")?;
            self.skip_ws();
            let j = self.uint()?;
            self.expect("]")?;
            return pure_generator(g, i, j).map(Some);
        }
        if self.eat("comm(") {
            let x = self.word()?;
            self.expect(";")?;
            let y = self.word()?;
            self.expect(")")?;
            return commutator(&x, &y, self.opts.commutator).map(Some);
        }
        Ok(None)
    }
}

enum Atom {
    Letter(Letter),
    Word(Word),
}

/// Defining relations of `group` as pairs `(lhs, rhs)`.
///
/// Far commutativity, braid relations, involutivity of `t`/`p`, mixed
/// relations where a virtual strand passes a classical or flat crossing or a
/// flat strand passes a classical crossing, and for the cylinder families
/// the rotation relations `z x_i z^-1 = x_{i-1}`. The `p` braid relation is
/// included only when the group carries the flat braid flag.
pub fn relation_suite(group: GroupId) -> Vec<(Word, Word)> {
    use LetterKind::*;
    let m = group.strands();
    let cyclic = group.is_cyclic();
    let top = group.max_index();
    let w = |letters: Vec<Letter>| Word { group, letters };
    let gen = |kind: LetterKind, i: usize| Letter {
        kind,
        index: i,
        power: 1,
    };
    let next = |i: usize| if cyclic { i % m + 1 } else { i + 1 };
    let distance = |i: usize, j: usize| {
        let d = i.abs_diff(j);
        if cyclic {
            d.min(m - d)
        } else {
            d
        }
    };
    let kinds: Vec<LetterKind> = [Sigma, Pi, Tau].into_iter().filter(|k| group.allows(*k)).collect();
    // adjacent ordered pairs (i, next(i)); the cylinder needs 3 strands
    // for the wrap pair to be distinct from (1, 2)
    let adjacent: Vec<(usize, usize)> = (1..=top)
        .filter(|&i| next(i) <= top && (!cyclic || m >= 3) && next(i) != i)
        .map(|i| (i, next(i)))
        .collect();

    let mut out = Vec::new();

    for (a, &x) in kinds.iter().enumerate() {
        for &y in &kinds[a..] {
            for i in 1..=top {
                for j in 1..=top {
                    if distance(i, j) <= 1 || (x == y && j <= i) {
                        continue;
                    }
                    out.push((w(vec![gen(x, i), gen(y, j)]), w(vec![gen(y, j), gen(x, i)])));
                }
            }
        }
    }

    let mut braided = vec![Sigma];
    if group.allows(Tau) {
        braided.push(Tau);
    }
    if group.flat_braid_relation() {
        braided.push(Pi);
    }
    for &x in &braided {
        for &(i, j) in &adjacent {
            out.push((
                w(vec![gen(x, i), gen(x, j), gen(x, i)]),
                w(vec![gen(x, j), gen(x, i), gen(x, j)]),
            ));
        }
    }

    for x in [Tau, Pi] {
        if group.allows(x) {
            for i in 1..=top {
                out.push((w(vec![gen(x, i), gen(x, i)]), w(Vec::new())));
            }
        }
    }

    let mixed: &[(LetterKind, LetterKind)] = match group.family() {
        Family::VCB => &[(Tau, Sigma)],
        Family::FVB => &[(Tau, Sigma), (Tau, Pi), (Pi, Sigma)],
        _ => &[],
    };
    for &(x, y) in mixed {
        for &(i, j) in &adjacent {
            for (a, b) in [(i, j), (j, i)] {
                out.push((
                    w(vec![gen(x, a), gen(x, b), gen(y, a)]),
                    w(vec![gen(y, b), gen(x, a), gen(x, b)]),
                ));
            }
        }
    }

    if cyclic {
        for &x in &kinds {
            for i in 1..=m {
                let prev = if i == 1 { m } else { i - 1 };
                out.push((
                    w(vec![Letter::zeta(1), gen(x, i), Letter::zeta(-1)]),
                    w(vec![gen(x, prev)]),
                ));
            }
        }
    }

    out
}
