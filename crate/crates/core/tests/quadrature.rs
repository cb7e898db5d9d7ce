use dilogint::digits::digits_agreed;
use dilogint::integrals::integral_i7_with;
use dilogint::quadrature::{integrate_split, tanh_sinh, Integrand, Node, QuadratureOptions};
use dilogint::PrecisionContext;
use proptest::prelude::*;
use rug::Float;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(40).unwrap()
}

/// `ln(x) cos(x)`, singular at 0.
fn log_cos(n: &Node) -> Float {
    let x = &n.x;
    Float::with_val(x.prec(), x.ln_ref()) * Float::with_val(x.prec(), x.cos_ref())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn interval_additivity(mid in 0.2f64..1.8) {
        let c = ctx();
        let f = Integrand::new(log_cos);
        let (a, m, b) = (c.zero(), c.real(mid), c.real(2));
        let opts = QuadratureOptions::default();
        let whole = tanh_sinh(&f, &a, &b, &c, opts).unwrap().value;
        let left = tanh_sinh(&f, &a, &m, &c, opts).unwrap().value;
        let right = tanh_sinh(&f, &m, &b, &c, opts).unwrap().value;
        prop_assert!(digits_agreed(&whole, &(left + right), &c) >= 36);
    }
}

#[test]
fn closed_form_integrals() {
    let c = ctx();
    let opts = QuadratureOptions::default();
    let (zero, one) = (c.zero(), c.real(1));
    let ln = Integrand::new(|n: &Node| Float::with_val(n.x.prec(), n.x.ln_ref()));
    let v = tanh_sinh(&ln, &zero, &one, &c, opts).unwrap().value;
    assert!(digits_agreed(&v, &c.real(-1), &c) >= 38);
    // int_0^1 sqrt(x) ln x dx = -4/9
    let root_log = Integrand::new(|n: &Node| {
        Float::with_val(n.x.prec(), n.x.sqrt_ref()) * Float::with_val(n.x.prec(), n.x.ln_ref())
    });
    let v = tanh_sinh(&root_log, &zero, &one, &c, opts).unwrap().value;
    assert!(digits_agreed(&v, &(c.real(-4) / 9u32), &c) >= 38);
}

#[test]
fn split_at_interior_log_singularity() {
    // int_0^2 ln|x - 1| dx = -2
    let c = ctx();
    let one = c.real(1);
    let f = Integrand::new(|n: &Node| {
        let d = n.offset_from(&c.real(1));
        Float::with_val(d.prec(), d.abs_ref()).ln()
    })
    .singular_at(one);
    let r = integrate_split(&f, &c.zero(), &c.real(2), &c, QuadratureOptions::default()).unwrap();
    assert!(digits_agreed(&r.value, &c.real(-2), &c) >= 38);
}

#[test]
fn level_differences_shrink() {
    let c = PrecisionContext::new(64).unwrap();
    let f = Integrand::new(log_cos);
    let r = tanh_sinh(&f, &c.zero(), &c.real(2), &c, QuadratureOptions::default()).unwrap();
    let d = &r.level_differences;
    assert!(d.len() >= 3);
    let tail = &d[d.len() - 3..];
    assert!(tail[0] > tail[1] && tail[1] > tail[2] || tail[2] <= c.tolerance());
    assert!(r.error_estimate <= c.tolerance());
}

#[test]
fn parallel_and_sequential_agree_bitwise() {
    let c = PrecisionContext::new(48).unwrap();
    let par = integral_i7_with(&c, QuadratureOptions::default()).unwrap();
    let seq = integral_i7_with(&c, QuadratureOptions::default().sequential()).unwrap();
    assert_eq!(par.value, seq.value);
    assert_eq!(par.nodes_evaluated, seq.nodes_evaluated);
    let again = integral_i7_with(&c, QuadratureOptions::default()).unwrap();
    assert_eq!(par.value, again.value);
}
