//! Verification of representations against defining relations, and of the
//! projection cocycle at the matrix level.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{self, Conventions};
use crate::homs::{pipeline_matrix, power_map, project_from, PipelineConfig};
use crate::laurent::Matrix;
use crate::rep::{self, represent, RepId, RepKind};
use crate::sample;
use crate::word::{relation_suite, GroupId, Letter, Word};

/// Two words that should have the same image, and the images they got.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub label: String,
    pub left: Word,
    pub right: Word,
    pub left_matrix: Matrix,
    pub right_matrix: Matrix,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checked: usize,
    /// Sorted by label, then by the two words.
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Builds a report from independent checks in any order.
    pub fn from_outcomes<I>(outcomes: I) -> Report
    where
        I: IntoIterator<Item = Option<Failure>>,
    {
        let mut report = Report::default();
        for o in outcomes {
            report.checked += 1;
            report.failures.extend(o);
        }
        report.sort();
        report
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.sort();
    }

    fn sort(&mut self) {
        self.failures
            .sort_by_cached_key(|f| (f.label.clone(), f.left.to_string(), f.right.to_string()));
    }
}

fn compare(label: String, left: &Word, right: &Word, lm: Matrix, rm: Matrix) -> Option<Failure> {
    (lm != rm).then(|| Failure {
        label,
        left: left.clone(),
        right: right.clone(),
        left_matrix: lm,
        right_matrix: rm,
    })
}

/// Compares the images of one relation pair.
pub fn check_relation(which: RepKind, left: &Word, right: &Word) -> Result<Option<Failure>> {
    let lm = represent(which, left)?;
    let rm = represent(which, right)?;
    Ok(compare(format!("{which} {}", left.group()), left, right, lm, rm))
}

/// Every relation of `relation_suite(group)` under `which`, symbolically.
pub fn verify_relations(which: RepKind, group: GroupId) -> Result<Report> {
    RepId::for_group(which, group)?;
    let outcomes = relation_suite(group)
        .iter()
        .map(|(l, r)| check_relation(which, l, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_outcomes(outcomes))
}

/// Options for [`verify_pk_cocycle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CocycleOptions {
    /// Random pairs `(u, v)` for the multiplicativity check.
    pub pairs: usize,
    /// Pure generators per random word.
    pub factors: usize,
    pub seed: u64,
}

impl Default for CocycleOptions {
    fn default() -> Self {
        CocycleOptions {
            pairs: 10,
            factors: 8,
            seed: 0,
        }
    }
}

/// `rho(f_d(.))` of the projection of `w` from starting position `start`,
/// with the final position.
fn translated_image(w: &Word, start: usize, d: u32) -> Result<(Matrix, usize)> {
    let (cyl, end) = project_from(w, start)?;
    Ok((rep::rho(&power_map(&cyl, d)?)?, end))
}

/// The relations of `B_n` (and free cancellation `s_i^±1 s_i^∓1 = 1`),
/// translated from every starting position of the projection strand, have
/// equal images under `rho o f_d`; so does `p_k` on random pure products.
pub fn verify_pk_cocycle(cfg: &PipelineConfig, opts: &CocycleOptions) -> Result<Report> {
    let n = cfg.n();
    let group = GroupId::braid(n)?;
    let mut pairs = relation_suite(group);
    for i in 1..n {
        for e in [1, -1] {
            pairs.push((
                Word::new(group, vec![Letter::sigma(i, e), Letter::sigma(i, -e)])?,
                Word::empty(group),
            ));
        }
    }
    let mut outcomes = Vec::new();
    for (l, r) in &pairs {
        for start in 1..=n {
            let (lm, lend) = translated_image(l, start, cfg.d())?;
            let (rm, rend) = translated_image(r, start, cfg.d())?;
            let label = format!("cocycle n={n} d={} from {start}", cfg.d());
            if lend != rend {
                return Err(Error::InvalidParameter(format!(
                    "{label}: relation sides move the projection strand differently"
                )));
            }
            outcomes.push(compare(label, l, r, lm, rm));
        }
    }
    let mut report = Report::from_outcomes(outcomes);
    report.merge(verify_multiplicativity(cfg, opts)?);
    Ok(report)
}

/// `pipeline(u v) = pipeline(u) pipeline(v)` for seeded random pure words.
pub fn verify_multiplicativity(cfg: &PipelineConfig, opts: &CocycleOptions) -> Result<Report> {
    let group = GroupId::braid(cfg.n())?;
    let mut rng = sample::rng(opts.seed);
    let mut outcomes = Vec::with_capacity(opts.pairs);
    for _ in 0..opts.pairs {
        let u = sample::random_pure_word(group, opts.factors, &mut rng)?;
        let v = sample::random_pure_word(group, opts.factors, &mut rng)?;
        let uv = u.concat(&v)?;
        let whole = pipeline_matrix(&uv, cfg)?;
        let product = pipeline_matrix(&u, cfg)?.mul(&pipeline_matrix(&v, cfg)?)?;
        let label = format!("multiplicativity n={} k={} d={}", cfg.n(), cfg.k(), cfg.d());
        // the right-hand word is recorded as `u v` too; the matrices differ
        outcomes.push(compare(label, &uv, &uv, whole, product));
    }
    Ok(Report::from_outcomes(outcomes))
}

/// For each word, the image of the geometrically extracted virtual cylinder
/// braid equals the algebraic pipeline matrix.
pub fn verify_oracle_agreement(words: &[Word], cfg: &PipelineConfig, conv: &Conventions) -> Result<Report> {
    let outcomes = words
        .iter()
        .map(|w| oracle_outcome(w, cfg, conv))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_outcomes(outcomes))
}

/// One word of [`verify_oracle_agreement`].
pub fn oracle_outcome(w: &Word, cfg: &PipelineConfig, conv: &Conventions) -> Result<Option<Failure>> {
    let algebraic = pipeline_matrix(w, cfg)?;
    let g = geom::artin_dynamics(w, conv)?;
    let extracted = geom::power_map_extract(&g, cfg.k(), cfg.d(), conv)?;
    let geometric = rep::rho(&extracted)?;
    let label = format!("oracle n={} k={} d={}", cfg.n(), cfg.k(), cfg.d());
    Ok(compare(label, w, &extracted, algebraic, geometric))
}
