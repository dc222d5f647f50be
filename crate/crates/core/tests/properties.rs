use proptest::prelude::*;
use rrcodes::code::{spec_at, CodeFamily, CodeSpec, Family};
use rrcodes::distance::{distance_exact, min_pt_at_least, pt_weight};
use rrcodes::field::{make_field, FieldElement};
use rrcodes::poly::Poly;

fn family(p: u64, s: u32) -> Family {
    CodeFamily::new(&make_field(p, 1).unwrap(), s).unwrap()
}

fn families() -> Vec<Family> {
    vec![
        family(7, 2),
        family(19, 1),
        family(11, 1),
        CodeFamily::new(&make_field(7, 2).unwrap(), 1).unwrap(),
    ]
}

proptest! {
    #[test]
    fn field_inverse_and_associativity(a in 1u32..121, b in 0u32..121, c in 0u32..121) {
        let f = make_field(11, 2).unwrap();
        let el = |v: u32| f.element(&[v % 11, v / 11]).unwrap();
        let (a, b, c) = (el(a), el(b), el(c));
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
    }

    #[test]
    fn divrem_reconstructs(num in prop::collection::vec(0u32..13, 0..12), den in prop::collection::vec(0u32..13, 1..6)) {
        let f = make_field(13, 1).unwrap();
        let to_poly = |v: &[u32]| Poly::from_coeffs(&f, v.iter().map(|&c| FieldElement::from_packed(c)).collect());
        let (a, b) = (to_poly(&num), to_poly(&den));
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn dual_is_an_involution(which in 0usize..4, idx in any::<u64>()) {
        let fam = &families()[which];
        let c = spec_at(fam, idx % fam.spec_count().unwrap());
        prop_assert_eq!(c.dual_code().dual_code(), c.clone());
        prop_assert_eq!(c.dual_code().dimension(), c.generator_degree());
        prop_assert_eq!(c.is_dual_containing(), c.dual_containing_by_division());
    }

    #[test]
    fn distance_shrinks_as_the_code_grows(which in 0usize..4, idx in any::<u64>(), cut in any::<u64>()) {
        let fam = &families()[which];
        let c = spec_at(fam, idx % fam.spec_count().unwrap());
        let bigger: Vec<u64> = c.exps().iter().map(|&e| if e == 0 { 0 } else { e - 1 - cut % e }).collect();
        let big = CodeSpec::new(fam, bigger).unwrap();
        prop_assert!(c.is_subcode(&big).unwrap());
        let (d_small, d_big) = (distance_exact(&c).distance, distance_exact(&big).distance);
        if !c.is_zero_code() {
            prop_assert!(d_big.value() <= d_small.value());
        }
        if let Some(d) = d_small.finite() {
            prop_assert!(d as usize + c.dimension() as usize <= c.n() + 1);
        }
    }

    #[test]
    fn threshold_minimum_is_attained(l in 0u64..2401) {
        let m = min_pt_at_least(l, 7, 4).unwrap();
        prop_assert!(m <= pt_weight(l, 7, 4).unwrap().p_t);
        prop_assert!((l..2401).any(|t| pt_weight(t, 7, 4).unwrap().p_t == m));
    }
}
