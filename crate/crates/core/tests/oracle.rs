use braidrep_core::geom::{artin_dynamics, power_map_extract, Conventions};
use braidrep_core::homs::{pipeline_word, PipelineConfig, Purity};
use braidrep_core::relcheck::verify_oracle_agreement;
use braidrep_core::rep::rho;
use braidrep_core::sample;
use braidrep_core::word::{bigelow5, CommutatorConvention};
use braidrep_core::{GroupId, Letter, Word};

#[test]
fn single_generators_match_the_algebra() {
    let conv = Conventions::default();
    for n in [4, 5] {
        let g = GroupId::braid(n).unwrap();
        for i in 1..n {
            for e in [1, -1] {
                let w = Word::new(g, vec![Letter::sigma(i, e)]).unwrap();
                let geo = artin_dynamics(&w, &conv).unwrap();
                for k in 1..=n {
                    for d in 1..=3 {
                        let cfg = PipelineConfig::new(n, k, d).unwrap();
                        let alg = pipeline_word(&w, &cfg, Purity::Bypass).unwrap();
                        let x = power_map_extract(&geo, k, d, &conv).unwrap();
                        assert_eq!(rho(&x).unwrap(), rho(&alg).unwrap(), "s{i}^{e} n={n} k={k} d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn random_pure_words_match_the_algebra() {
    let conv = Conventions::default();
    let mut rng = sample::rng(7);
    for n in [4, 5] {
        let g = GroupId::braid(n).unwrap();
        let words: Vec<Word> = (0..4)
            .map(|_| sample::random_pure_word(g, 3, &mut rng).unwrap())
            .collect();
        for k in 1..=n {
            for d in 1..=2 {
                let cfg = PipelineConfig::new(n, k, d).unwrap();
                let report = verify_oracle_agreement(&words, &cfg, &conv).unwrap();
                assert!(
                    report.passed(),
                    "n={n} k={k} d={d}: {:?}",
                    report.failures.first().map(|f| f.left.to_string())
                );
            }
        }
    }
}

#[test]
fn bigelow_word_matches_the_algebra() {
    let conv = Conventions::default();
    let g = GroupId::braid(5).unwrap();
    let w = bigelow5(g, CommutatorConvention::InverseLast).unwrap();
    for k in [1, 3] {
        let cfg = PipelineConfig::new(5, k, 2).unwrap();
        assert!(
            verify_oracle_agreement(std::slice::from_ref(&w), &cfg, &conv)
                .unwrap()
                .passed(),
            "k={k}"
        );
    }
}
