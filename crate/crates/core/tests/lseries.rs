use dilogint::digits::digits_agreed;
use dilogint::identities::{closed_form_coffey, closed_form_new};
use dilogint::integrals::integral_i7;
use dilogint::lseries::{dirichlet_l, l_minus7_clausen, l_minus7_direct, Representation};
use dilogint::PrecisionContext;
use rug::Float;

/// Computed independently at 60 places.
const L7_REFERENCE: &str = "1.15192547054449104710169239732054996479782140468656691408397";

#[test]
fn three_representations_agree() {
    for p in [32u32, 64, 128, 256] {
        let c = PrecisionContext::new(p).unwrap();
        let two = c.real(2);
        let direct = l_minus7_direct(&two, &c).unwrap();
        let hurwitz = dirichlet_l(-7, &two, &c).unwrap();
        let clausen = l_minus7_clausen(&c).unwrap();
        assert_eq!(direct.representation, Representation::DirectSeries);
        assert_eq!(hurwitz.representation, Representation::HurwitzSum);
        assert_eq!(clausen.representation, Representation::ClausenForm);
        assert!(
            digits_agreed(&direct.value, &hurwitz.value, &c) >= p - 5,
            "P = {p}"
        );
        assert!(
            digits_agreed(&direct.value, &clausen.value, &c) >= p - 5,
            "P = {p}"
        );
        assert!(
            digits_agreed(&hurwitz.value, &clausen.value, &c) >= p - 5,
            "P = {p}"
        );
    }
}

#[test]
fn reference_digits() {
    let c = PrecisionContext::new(55).unwrap();
    let oracle = Float::with_val(c.prec(), Float::parse(L7_REFERENCE).unwrap());
    let l = dirichlet_l(-7, &c.real(2), &c).unwrap().value;
    assert!(digits_agreed(&l, &oracle, &c) >= 55);
}

#[test]
fn other_exponents() {
    let c = PrecisionContext::new(40).unwrap();
    for s in [1.5, 3.0, 4.25] {
        let s = c.real(s);
        let a = l_minus7_direct(&s, &c).unwrap().value;
        let b = dirichlet_l(-7, &s, &c).unwrap().value;
        assert!(digits_agreed(&a, &b, &c) >= 35);
    }
}

#[test]
fn integral_and_closed_forms_match_reference() {
    let c = PrecisionContext::new(55).unwrap();
    let oracle = Float::with_val(c.prec(), Float::parse(L7_REFERENCE).unwrap());
    let i7 = integral_i7(&c).unwrap().value;
    assert!(digits_agreed(&i7, &oracle, &c) >= 50);
    assert!(digits_agreed(&closed_form_coffey(&c).unwrap(), &oracle, &c) >= 53);
    assert!(digits_agreed(&closed_form_new(&c).unwrap(), &oracle, &c) >= 53);
}

#[test]
fn deterministic_across_calls() {
    let c = PrecisionContext::new(80).unwrap();
    let a = dirichlet_l(-7, &c.real(2), &c).unwrap().value;
    let b = dirichlet_l(-7, &c.real(2), &c).unwrap().value;
    assert_eq!(a, b);
}
