use primdec::arith::is_prime;
use primdec::samples::weil_instance;
use primdec::{PrimeField, Sampler};

#[test]
fn weil_bound_on_random_admissible_instances() {
    let fields: Vec<PrimeField> = (3..=200u64)
        .filter(|&p| is_prime(p))
        .map(|p| PrimeField::new(p).unwrap())
        .collect();
    let mut rng = Sampler::new(2024);
    let mut checked = 0;
    for _ in 0..1500 {
        let field = rng.pick(&fields);
        let inst = weil_instance(field, &mut rng, 4);
        let c = inst.check(field).unwrap();
        assert!(
            c.ok,
            "p = {}, {:?}: |sum| = {} > {}",
            field.p(),
            inst,
            c.sum.norm(),
            c.bound
        );
        assert!(c.distinct_roots >= 1 && c.distinct_roots <= 4);
        checked += 1;
    }
    assert!(checked >= 1000);
}

#[test]
fn distinct_roots_match_root_counting_for_split_polynomials() {
    // Products of linear factors: distinct roots are visible in F_p itself.
    let mut rng = Sampler::new(9);
    for p in [5u32, 7, 11, 13] {
        for _ in 0..100 {
            let n = 1 + rng.below(4) as usize;
            let roots: Vec<u32> = (0..n).map(|_| rng.below(p as u64) as u32).collect();
            let poly = roots
                .iter()
                .fold(primdec::characters::PolynomialOverFp::one(p), |acc, &r| {
                    acc.mul(&primdec::characters::PolynomialOverFp::linear(p, r))
                });
            let mut distinct = roots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            assert_eq!(
                poly.distinct_root_count(),
                distinct.len(),
                "p = {p}, roots {roots:?}"
            );
            let on_field = (0..p).filter(|&x| poly.evaluate(x) == 0).count();
            assert_eq!(on_field, distinct.len());
        }
    }
}
