use braidrep_core::geom::{
    artin_dynamics_from, perturb, psi_d_events, psi_events, psi_matrix, q_kl, random_zero_linking_braid,
    realize_flat_virtual, zero_infinity_frame, Conventions, PsiVariant, RoutingScheme,
};
use braidrep_core::word::parse_word;
use braidrep_core::GroupId;

const RR: RoutingScheme = RoutingScheme::RouteAndReturn;

/// Pairs of words for the same braid with different trajectories.
const ISOTOPIC: [(&str, &str); 5] = [
    ("s1 s2 s1 s2^-1 s1^-1 s2^-1", ""),
    ("s3 s4 s3 s4^-1 s3^-1 s4^-1", ""),
    ("s1 s3 s1^-1 s3^-1", ""),
    ("s2 s1 s1 s2^-1 s1^-1 s2^-1 s2^-1 s1 s4 s4 s4^-1 s4^-1", ""),
    (
        "A[1,3] A[2,5] A[1,3]^-1 A[2,5]^-1",
        "s1^-1 s2 s2 s1 A[2,5] s2 s1^-2 s2^-1 A[2,5]^-1",
    ),
];

#[test]
fn isotopic_braids_have_equal_images() {
    let conv = Conventions::default();
    let b5 = GroupId::braid(5).unwrap();
    for seed in 0..3 {
        let (w, g) = random_zero_linking_braid(5, 1, seed).unwrap();
        let start = g.configuration(0.0);
        for (a, b) in ISOTOPIC {
            let wa = w.concat(&parse_word(a, b5).unwrap()).unwrap();
            let wb = w.concat(&parse_word(b, b5).unwrap()).unwrap();
            let ga = artin_dynamics_from(&start, &wa, &conv).unwrap();
            let gb = artin_dynamics_from(&start, &wb, &conv).unwrap();
            for (k, l) in [(1, 2), (3, 5), (5, 1)] {
                for variant in [PsiVariant::Psi, PsiVariant::PsiD(3)] {
                    let ma = psi_matrix(&ga, k, l, variant, &conv, RR).unwrap();
                    let mb = psi_matrix(&gb, k, l, variant, &conv, RR).unwrap();
                    assert_eq!(ma, mb, "seed {seed}, {a} vs {b}, k={k} l={l} {variant:?}");
                }
            }
        }
    }
}

#[test]
fn psi_two_agrees_with_psi_crossing_by_crossing() {
    let conv = Conventions::default();
    for seed in 0..5 {
        let (_, g) = random_zero_linking_braid(5, 2, seed).unwrap();
        let a = psi_events(&q_kl(&g, 2, 4).unwrap(), &conv).unwrap();
        let b = psi_d_events(&zero_infinity_frame(&g, 2, 4).unwrap(), 2, &conv).unwrap();
        assert_eq!(a.len(), b.len(), "seed {seed}");
        for (x, y) in a.iter().zip(&b) {
            // the two frames are sampled separately, so times agree only roughly
            assert!((x.time - y.time).abs() < 1e-3, "seed {seed}");
            assert_eq!(
                (x.pair, x.class, x.ne_strand),
                (y.pair, y.class, y.ne_strand),
                "seed {seed}"
            );
        }
        let fvb = GroupId::flat_virtual(3, false).unwrap();
        assert_eq!(
            realize_flat_virtual(&a, fvb, RR).unwrap(),
            realize_flat_virtual(&b, fvb, RR).unwrap()
        );
    }
}

#[test]
fn images_survive_perturbation_resampling_and_detours() {
    let conv = Conventions::default();
    for seed in 0..3 {
        let (_, g) = random_zero_linking_braid(5, 2, seed).unwrap();
        for variant in [PsiVariant::Psi, PsiVariant::PsiD(2), PsiVariant::PsiD(4)] {
            let m = psi_matrix(&g, 1, 3, variant, &conv, RR).unwrap();
            let p = perturb(&g, seed + 100, 1e-6).unwrap();
            assert_eq!(psi_matrix(&p, 1, 3, variant, &conv, RR).unwrap(), m);
            assert_eq!(psi_matrix(&g.resample(2), 1, 3, variant, &conv, RR).unwrap(), m);
            assert_eq!(
                psi_matrix(&g, 1, 3, variant, &conv, RoutingScheme::SwapInPlace).unwrap(),
                m
            );
        }
    }
}

#[test]
fn images_multiply_under_concatenation() {
    let conv = Conventions::default();
    let (_, g) = random_zero_linking_braid(5, 1, 11).unwrap();
    let (v, _) = random_zero_linking_braid(5, 1, 12).unwrap();
    let h = artin_dynamics_from(&g.configuration(0.0), &v, &conv).unwrap();
    let whole = psi_matrix(&g.concat(&h).unwrap(), 2, 5, PsiVariant::Psi, &conv, RR).unwrap();
    let product = psi_matrix(&g, 2, 5, PsiVariant::Psi, &conv, RR)
        .unwrap()
        .mul(&psi_matrix(&h, 2, 5, PsiVariant::Psi, &conv, RR).unwrap())
        .unwrap();
    assert_eq!(whole, product);
}
