use schubert_core::curves_flags::{
    exp_translate_flag, flags_equal, gram_matrix, in_lie_algebra, is_isotropic_flag, osculating_flag,
    principal_nilpotent, GroupKind,
};
use schubert_core::exact_linalg::{exp_nilpotent, int, rat, Rational};

fn t_sample() -> Vec<Rational> {
    vec![int(0), int(1), int(-1), int(2), int(-2), rat(1, 2), rat(-3, 5)]
}

fn curve_kinds_up_to(dim: usize) -> Vec<GroupKind> {
    let mut kinds: Vec<GroupKind> = (2..=dim).map(|m| GroupKind::Sl { m }).collect();
    kinds.extend((1..=dim / 2).map(|n| GroupKind::Sp { n }));
    kinds.extend((1..=(dim - 1) / 2).map(|n| GroupKind::SoOdd { n }));
    kinds
}

#[test]
fn exp_translate_is_osculating() {
    for kind in curve_kinds_up_to(6) {
        for t in t_sample() {
            let a = exp_translate_flag(kind, &t).unwrap();
            let b = osculating_flag(kind, &t).unwrap();
            assert!(flags_equal(&a, &b).unwrap(), "{kind} at {t}");
        }
    }
}

#[test]
fn osculating_flags_are_isotropic() {
    for n in 1..=5 {
        for kind in [GroupKind::Sp { n }, GroupKind::SoOdd { n }] {
            let form = gram_matrix(kind).unwrap();
            for t in t_sample() {
                assert!(is_isotropic_flag(&osculating_flag(kind, &t).unwrap(), &form).unwrap(), "{kind} at {t}");
            }
        }
    }
}

#[test]
fn translation_property() {
    for kind in curve_kinds_up_to(6) {
        let eta = principal_nilpotent(kind).unwrap();
        for s in [int(1), rat(-1, 2), int(3)] {
            let g = exp_nilpotent(&eta, &s).unwrap();
            for t in [int(0), int(2), rat(-3, 5)] {
                let moved = osculating_flag(kind, &t).unwrap().translate(&g).unwrap();
                let target = osculating_flag(kind, &(s.clone() + t.clone())).unwrap();
                assert!(flags_equal(&moved, &target).unwrap(), "{kind}, s={s}, t={t}");
            }
        }
    }
}

#[test]
fn nilpotents_lie_in_their_algebras() {
    for n in 1..=5 {
        for kind in [GroupKind::Sp { n }, GroupKind::SoOdd { n }] {
            let form = gram_matrix(kind).unwrap();
            assert!(in_lie_algebra(&principal_nilpotent(kind).unwrap(), &form), "{kind}");
        }
    }
}
