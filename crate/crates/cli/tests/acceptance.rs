//! One PASS/FAIL line per acceptance criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use braidrep_core::geom::{
    artin_dynamics, artin_dynamics_from, perturb, psi_d_events, psi_events, psi_events_with, psi_matrix, q_kl,
    random_zero_linking_braid, realize_flat_virtual, Breakpoint, Conventions, Detection, Event, EventClass, GeomBraid,
    PsiVariant, RoutingScheme,
};
use braidrep_core::homs::{pipeline_matrix, PipelineConfig};
use braidrep_core::relcheck::{
    verify_multiplicativity, verify_oracle_agreement, verify_pk_cocycle, CocycleOptions, Report,
};
use braidrep_core::rep::{burau_reduced, rho, rho_tilde, RepKind};
use braidrep_core::word::{bigelow5, parse_word, CommutatorConvention};
use braidrep_core::{relcheck, sample, Assignment, GroupId, Letter, LetterKind, Matrix, RationalMatrix, Word};
use num_complex::Complex64;
use rand::Rng;

const EXAMPLE_ROWS: [[i64; 4]; 4] = [
    [481, -880, 800, -400],
    [480, -879, 800, -400],
    [480, -880, 801, -400],
    [480, -880, 800, -399],
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &Report, what: &str) -> Result<(), String> {
    ensure(r.passed(), || {
        let f = &r.failures[0];
        format!(
            "{what}: {} failures, first {}: {} = {}",
            r.failures.len(),
            f.label,
            f.left,
            f.right
        )
    })
}

fn integer_matrix(rows: &[[i64; 4]; 4]) -> RationalMatrix {
    let rows: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    RationalMatrix::from_integer_rows(&rows).unwrap()
}

fn example_matrix() -> Result<Matrix, String> {
    let w = bigelow5(GroupId::braid(5).unwrap(), CommutatorConvention::InverseLast).map_err(|e| e.to_string())?;
    pipeline_matrix(&w, &PipelineConfig::new(5, 1, 2).unwrap()).map_err(|e| e.to_string())
}

fn example_at_minus_one() -> Result<RationalMatrix, String> {
    Ok(example_matrix()?.eval(&"t=-1,s=1".parse::<Assignment>().unwrap()))
}

fn example_reproduction() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_braidrep"))
        .args([
            "rep",
            "--pipeline",
            "pk-fd",
            "--n",
            "5",
            "--k",
            "1",
            "--d",
            "2",
            "--eval",
            "t=-1,s=1",
            "BIGELOW5",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let text = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(|l| l.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("non-integer entry: {e}"))?;
    ensure(rows == EXAMPLE_ROWS.map(|r| r.to_vec()), || format!("got {rows:?}"))?;
    ensure(example_at_minus_one()? == integer_matrix(&EXAMPLE_ROWS), || {
        "library result differs from the command output".into()
    })?;
    Ok("exact integer rows".into())
}

fn burau_contrast() -> Outcome {
    let w = bigelow5(GroupId::braid(5).unwrap(), CommutatorConvention::InverseLast).unwrap();
    let b = burau_reduced(&w).map_err(|e| e.to_string())?;
    ensure(b.is_identity(), || "reduced Burau image is not the identity".into())?;
    ensure(!example_matrix()?.is_identity(), || {
        "symbolic pipeline image is the identity".into()
    })?;
    ensure(!example_at_minus_one()?.is_identity(), || {
        "evaluated pipeline image is the identity".into()
    })?;
    Ok("Burau = I, pipeline != I".into())
}

fn structural_sanity() -> Outcome {
    let m = example_at_minus_one()?;
    let d = m.sub(&RationalMatrix::identity(4)).unwrap();
    ensure(d.rank() == 1, || format!("rank(M - I) = {}", d.rank()))?;
    let row = integer_matrix(&[[480, -880, 800, -400]; 4]);
    ensure(d == row, || "rows of M - I differ from (480, -880, 800, -400)".into())?;
    let sum = (1..4).fold(d.get(0, 0).clone(), |acc, j| acc + d.get(0, j));
    ensure(sum.numer() == &0.into(), || format!("row sum {sum}"))?;
    let det = m.determinant();
    ensure(det.is_integer() && *det.numer() == 1.into(), || {
        format!("det M = {det}")
    })?;
    Ok("rank 1, row sum 0, det 1".into())
}

fn relation_suites() -> Outcome {
    let mut checked = 0;
    for n in 3..=6 {
        let r = relcheck::verify_relations(RepKind::Rho, GroupId::virtual_cylinder(n).unwrap())
            .map_err(|e| e.to_string())?;
        passed(&r, &format!("rho on VCB{n}"))?;
        checked += r.checked;
        for flat in [false, true] {
            let g = GroupId::flat_virtual(n, flat).unwrap();
            let r = relcheck::verify_relations(RepKind::RhoTilde, g).map_err(|e| e.to_string())?;
            passed(&r, &format!("rho_tilde on {g}"))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} relations"))
}

fn cocycle() -> Outcome {
    let mut checked = 0;
    for n in 3..=5 {
        for k in 1..=n {
            for d in 1..=3 {
                let cfg = PipelineConfig::new(n, k, d).unwrap();
                let r = verify_pk_cocycle(&cfg, &CocycleOptions::default()).map_err(|e| e.to_string())?;
                passed(&r, &format!("n={n} k={k} d={d}"))?;
                checked += r.checked;
            }
        }
    }
    let opts = CocycleOptions {
        pairs: 100,
        factors: 6,
        seed: 2024,
    };
    let r = verify_multiplicativity(&PipelineConfig::new(5, 1, 2).unwrap(), &opts).map_err(|e| e.to_string())?;
    passed(&r, "multiplicativity in B5")?;
    Ok(format!("{checked} cocycle checks, {} products", r.checked))
}

fn oracle() -> Outcome {
    let conv = Conventions::default();
    let mut checked = 0;
    for n in [4, 5] {
        let g = GroupId::braid(n).unwrap();
        for i in 1..n {
            for e in [1, -1] {
                let w = Word::new(g, vec![Letter::sigma(i, e)]).unwrap();
                let geo = artin_dynamics(&w, &conv).map_err(|e| e.to_string())?;
                for k in 1..=n {
                    for d in 1..=2 {
                        let cfg = PipelineConfig::new(n, k, d).unwrap();
                        let alg = braidrep_core::homs::pipeline_word(&w, &cfg, braidrep_core::homs::Purity::Bypass)
                            .map_err(|e| e.to_string())?;
                        let x = braidrep_core::geom::power_map_extract(&geo, k, d, &conv).map_err(|e| e.to_string())?;
                        ensure(rho(&x).unwrap() == rho(&alg).unwrap(), || {
                            format!("s{i}^{e} n={n} k={k} d={d}")
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    let b5 = GroupId::braid(5).unwrap();
    let mut rng = sample::rng(25);
    let words: Vec<Word> = (0..25)
        .map(|_| sample::random_pure_word(b5, 4, &mut rng).unwrap())
        .collect();
    for k in 1..=5 {
        for d in 1..=2 {
            let r = verify_oracle_agreement(&words, &PipelineConfig::new(5, k, d).unwrap(), &conv)
                .map_err(|e| e.to_string())?;
            passed(&r, &format!("random words k={k} d={d}"))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} comparisons"))
}

fn psi_invariance() -> Outcome {
    let conv = Conventions::default();
    let rr = RoutingScheme::RouteAndReturn;
    let pairs = [(1, 2), (3, 5), (5, 1), (2, 4), (4, 3)];
    let mut compared = 0;
    for seed in 0..10u64 {
        let (k, l) = pairs[seed as usize % pairs.len()];
        let (_, g) = random_zero_linking_braid(5, 2, seed).map_err(|e| e.to_string())?;
        let image = |g: &GeomBraid, scheme| {
            let events = psi_events(&q_kl(g, k, l)?, &conv)?;
            rho_tilde(&realize_flat_virtual(
                &events,
                GroupId::flat_virtual(3, false)?,
                scheme,
            )?)
        };
        let m = image(&g, rr).map_err(|e| e.to_string())?;
        let p = perturb(&g, seed + 1000, 1e-6).map_err(|e| e.to_string())?;
        ensure(image(&p, rr).map_err(|e| e.to_string())? == m, || {
            format!("seed {seed}: perturbation")
        })?;
        ensure(image(&g.resample(2), rr).map_err(|e| e.to_string())? == m, || {
            format!("seed {seed}: resampling")
        })?;
        let swapped = image(&g, RoutingScheme::SwapInPlace).map_err(|e| e.to_string())?;
        ensure(swapped == m, || format!("seed {seed}: routing scheme"))?;
        let (v, _) = random_zero_linking_braid(5, 1, seed + 500).map_err(|e| e.to_string())?;
        let h = artin_dynamics_from(&g.configuration(0.0), &v, &conv).map_err(|e| e.to_string())?;
        let whole = image(&g.concat(&h).map_err(|e| e.to_string())?, rr).map_err(|e| e.to_string())?;
        let product = m.mul(&image(&h, rr).map_err(|e| e.to_string())?).unwrap();
        ensure(whole == product, || format!("seed {seed}: concatenation"))?;
        ensure(
            psi_matrix(&g, k, l, PsiVariant::Psi, &conv, rr).map_err(|e| e.to_string())? == m,
            || format!("seed {seed}: psi_matrix disagrees with the explicit chain"),
        )?;
        compared += 4;
    }
    Ok(format!("{compared} comparisons on 10 braids"))
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn two_strands(a: [Complex64; 2], b: [Complex64; 2]) -> Result<GeomBraid, String> {
    let s = |p: [Complex64; 2]| vec![Breakpoint::new(0.0, p[0]), Breakpoint::new(1.0, p[1])];
    GeomBraid::new(vec![s(a), s(b)], false).map_err(|e| e.to_string())
}

fn single_event(events: &[Event]) -> Result<Event, String> {
    ensure(events.len() == 1, || format!("{} events instead of one", events.len()))?;
    Ok(events[0])
}

fn classification() -> Outcome {
    let conv = Conventions::default();
    let half = [c(0.5, 0.0), c(0.5, 0.0)];
    let falling = |x: f64| two_strands(half, [c(x, 0.5), c(x, -0.5)]);
    let table = [
        (0.75, EventClass::ClassicalOver, Some(1)),
        (0.25, EventClass::ClassicalUnder, Some(0)),
        (2.0, EventClass::Flat, None),
    ];
    for (x, class, over) in table {
        let e = single_event(&psi_events(&falling(x)?, &conv).map_err(|e| e.to_string())?)?;
        ensure(e.class == class && e.over() == over, || {
            format!("crossing at {x}: {:?}", e.class)
        })?;
        ensure((e.time - 0.5).abs() < 1e-12, || {
            format!("crossing at {x}: time {}", e.time)
        })?;
    }
    let e = single_event(&psi_events(&falling(0.75)?, &conv).map_err(|e| e.to_string())?)?;
    ensure(e.ne_strand == 1, || "the falling strand is not NE".into())?;

    // psi_d rays: v_i / v_j crosses the positive axis, the negative axis, arg 2 pi / 3
    let fixed = [c(1.0, 0.0), c(1.0, 0.0)];
    let ray = |theta: f64, d: u32| -> Result<Event, String> {
        let dir = Complex64::from_polar(1.0, -theta);
        let g = two_strands(fixed, [dir * c(2.0, 0.3), dir * c(2.0, -0.3)])?;
        single_event(&psi_d_events(&g, d, &conv).map_err(|e| e.to_string())?)
    };
    ensure(ray(0.0, 2)?.over().is_some(), || {
        "positive ratio is not classical".into()
    })?;
    let neg = psi_d_events(&two_strands(fixed, [c(-2.0, 0.3), c(-2.0, -0.3)])?, 2, &conv).map_err(|e| e.to_string())?;
    ensure(single_event(&neg)?.class == EventClass::Flat, || {
        "negative ratio is not flat".into()
    })?;
    ensure(
        ray(2.0 * std::f64::consts::PI / 3.0, 3)?.class == EventClass::Flat,
        || "ratio at 2 pi / 3 is not flat for d = 3".into(),
    )?;

    // cross-ratio detection against explicit normalization
    let mut rng = sample::rng(8);
    let (mut events, mut refused) = (0, 0);
    while events < 1000 {
        let mut point = || c(rng.gen_range(-1.5..2.5), rng.gen_range(-1.5..1.5));
        let Ok(g) = two_strands([point(), point()], [point(), point()]) else {
            continue;
        };
        let a = psi_events_with(&g, &conv, Detection::CrossRatio);
        let b = psi_events_with(&g, &conv, Detection::Mobius);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                ensure(a.len() == b.len(), || format!("{} vs {} events", a.len(), b.len()))?;
                for (x, y) in a.iter().zip(&b) {
                    ensure(
                        (x.time - y.time).abs() < 1e-9
                            && (x.pair, x.class, x.ne_strand) == (y.pair, y.class, y.ne_strand),
                        || format!("{x:?} vs {y:?}"),
                    )?;
                }
                events += a.len();
            }
            (Err(x), Err(y)) => {
                ensure(std::mem::discriminant(&x) == std::mem::discriminant(&y), || {
                    format!("{x} vs {y}")
                })?;
                refused += 1;
            }
            (a, b) => return Err(format!("only one method refused: {a:?} / {b:?}")),
        }
    }
    Ok(format!(
        "table, NE and rays; {events} random events agree ({refused} inputs refused by both)"
    ))
}

fn ring_and_parser() -> Outcome {
    let mut rng = sample::rng(9);
    for case in 0..1000 {
        let (a, b, x) = (
            sample::random_poly(5, &mut rng),
            sample::random_poly(5, &mut rng),
            sample::random_poly(5, &mut rng),
        );
        let one = braidrep_core::LaurentPoly::one();
        let zero = braidrep_core::LaurentPoly::zero();
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &x == &a + &(&b + &x)
            && &(&a * &b) * &x == &a * &(&b * &x)
            && &a * &(&b + &x) == &(&a * &b) + &(&a * &x)
            && &a * &one == a
            && &a + &zero == a
            && &(&a + &b) - &b == a
            && a.terms().all(|(_, c)| *c != 0.into());
        ensure(ok, || format!("ring axioms, case {case}: a = {a}, b = {b}, c = {x}"))?;
    }
    for case in 0..1000 {
        let (a, b) = (sample::random_poly(5, &mut rng), sample::random_poly(5, &mut rng));
        let at = sample::random_assignment(&mut rng);
        let ok = (&a + &b).eval(&at) == a.eval(&at) + b.eval(&at) && (&a * &b).eval(&at) == a.eval(&at) * b.eval(&at);
        ensure(ok, || format!("eval homomorphism, case {case}: a = {a}, b = {b}"))?;
    }
    let groups = ["B6", "CPB5", "VCB5", "FVB5", "FVB5+flat"].map(|g| g.parse::<GroupId>().unwrap());
    for case in 0..1000 {
        let g = groups[case % groups.len()];
        let w = sample::random_word(g, rng.gen_range(0..12), &mut rng);
        let back = parse_word(&w.to_string(), g).map_err(|e| format!("case {case}: {e}"))?;
        ensure(back == w.free_reduce(), || format!("word round-trip, case {case}: {w}"))?;
    }
    let involutive = ["VCB5", "FVB5", "FVB5+flat"].map(|g| g.parse::<GroupId>().unwrap());
    for case in 0..1000 {
        let g = involutive[case % involutive.len()];
        let w = sample::random_word(g, rng.gen_range(0..10), &mut rng);
        let kind = if g.allows(LetterKind::Pi) && rng.gen_bool(0.5) {
            LetterKind::Pi
        } else {
            LetterKind::Tau
        };
        let i = rng.gen_range(1..=g.max_index());
        let square = Word::new(
            g,
            vec![Letter {
                kind,
                index: i,
                power: 2 * rng.gen_range(1..=3),
            }],
        )
        .unwrap();
        let at = rng.gen_range(0..=w.len());
        let (head, tail) = w.letters().split_at(at);
        let padded = Word::new(g, [head, square.letters(), tail].concat()).unwrap();
        let image = |w: &Word| if g.allows(LetterKind::Pi) { rho_tilde(w) } else { rho(w) };
        ensure(
            padded.free_reduce() == w.free_reduce() && image(&padded).unwrap() == image(&w).unwrap(),
            || format!("involution, case {case}: {padded} vs {w}"),
        )?;
    }
    Ok("4 x 1000 cases".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "example matrix reproduction",
            Duration::from_secs(1),
            example_reproduction,
        ),
        ("Burau kernel contrast", Duration::from_secs(10), burau_contrast),
        (
            "structure of the example matrix",
            Duration::from_secs(1),
            structural_sanity,
        ),
        (
            "relation suites for rho and rho_tilde",
            Duration::from_secs(5),
            relation_suites,
        ),
        (
            "projection cocycle and multiplicativity",
            Duration::from_secs(60),
            cocycle,
        ),
        ("geometric oracle equals the algebra", Duration::from_secs(30), oracle),
        (
            "two-puncture pipeline invariance",
            Duration::from_secs(60),
            psi_invariance,
        ),
        (
            "event classification and dual detection",
            Duration::from_secs(10),
            classification,
        ),
        ("ring and parser properties", Duration::from_secs(30), ring_and_parser),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (verdict, detail) = match &outcome {
            Ok(detail) => ("PASS", detail.clone()),
            Err(why) => ("FAIL", why.clone()),
        };
        let timing = if elapsed > *budget { " over budget" } else { "" };
        println!(
            "{verdict} {}: {name} ({detail}; {:.2} s of {} s{timing})",
            i + 1,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
