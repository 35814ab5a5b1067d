use g2kit_core::decomp::{membership_14, membership_27, pq_decompose, G2Projectors, G2Type};
use g2kit_core::g2forms::{Convention, StructurePackage};
use g2kit_core::random;
use proptest::prelude::*;

fn projectors(c: Convention) -> G2Projectors {
    G2Projectors::new(&StructurePackage::build(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn components_recombine_and_are_stable(seed: u64, degree in 2usize..=5, opposite: bool) {
        let c = if opposite { Convention::Opposite } else { Convention::CdFirst };
        let proj = projectors(c);
        let f = random::gaussian_form(&mut random::trial_rng(seed, 0), degree);
        let d = proj.project(&f).unwrap();
        prop_assert_eq!(d.recombine(), f);
        for (t, piece) in &d.components {
            let again = proj.project(piece).unwrap();
            prop_assert_eq!(again.get(*t), piece.clone());
        }
    }

    #[test]
    fn bidegree_pieces_recombine(seed: u64, degree in 2usize..=3) {
        let f = random::gaussian_form(&mut random::trial_rng(seed, 1), degree);
        prop_assert_eq!(pq_decompose(&f).unwrap().recombine(), f);
    }

    #[test]
    fn equations_agree_with_projectors(seed: u64) {
        let proj = projectors(Convention::CdFirst);
        let mut rng = random::trial_rng(seed, 2);
        let h = random::gaussian_form(&mut rng, 3);
        let h27 = proj.project(&h).unwrap().get(G2Type::TwentySeven);
        prop_assert!(membership_27(&h27).unwrap().holds);
        if !proj.project(&h).unwrap().pure_type().is_some_and(|t| t == G2Type::TwentySeven) && !h.is_empty() {
            prop_assert!(!membership_27(&h).unwrap().holds);
        }
        let b = random::gaussian_form(&mut rng, 2);
        let b14 = proj.project(&b).unwrap().get(G2Type::Fourteen);
        prop_assert!(membership_14(&b14).unwrap().holds);
    }
}
