use bihook::crystal::{e_tilde, f_tilde, is_regular, mullineux};
use bihook::tableaux::{count_standard, graded_dimension};
use bihook::{Bipartition, Partition, QuantumCharacteristic};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..5, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        Partition::new(v).unwrap()
    })
}

fn bipartition() -> impl Strategy<Value = Bipartition> {
    (partition(), partition()).prop_map(|(a, b)| Bipartition::new(a, b))
}

proptest! {
    #[test]
    fn text_form_round_trips(la in bipartition()) {
        let back: Bipartition = la.to_string().parse().unwrap();
        prop_assert_eq!(back, la);
    }

    #[test]
    fn graded_dimension_specializes(la in bipartition(), e in 2u32..5) {
        let e = QuantumCharacteristic::new(e).unwrap();
        let d = graded_dimension(&la, e);
        prop_assert_eq!(d.eval_one(), BigInt::from(count_standard(&la)));
    }

    #[test]
    fn crystal_operators_invert(la in bipartition(), e in 2u32..5, i in 0u32..4) {
        let e = QuantumCharacteristic::new(e).unwrap();
        let i = i % e.get();
        if let Some(up) = f_tilde(&la, i, e) {
            prop_assert_eq!(e_tilde(&up, i, e), Some(la.clone()));
        }
        if let Some(down) = e_tilde(&la, i, e) {
            prop_assert_eq!(f_tilde(&down, i, e), Some(la));
        }
    }

    #[test]
    fn mullineux_is_an_involution(la in bipartition(), e in 2u32..5) {
        let e = QuantumCharacteristic::new(e).unwrap();
        if is_regular(&la, e) {
            let m = mullineux(&la, e).unwrap();
            prop_assert!(is_regular(&m, e));
            prop_assert_eq!(m.size(), la.size());
            prop_assert_eq!(mullineux(&m, e).unwrap(), la);
        } else {
            prop_assert!(mullineux(&la, e).is_err());
        }
    }
}
