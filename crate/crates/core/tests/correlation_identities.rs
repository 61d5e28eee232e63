use primdec::arith::is_prime;
use primdec::correlation::{
    check_inner_identity, check_quadruple_bound, check_shkredov_identity, FpFunction,
};
use primdec::samples::{complex_function, int_function};
use primdec::{Complex64, PrimeField, Sampler};

fn naive_circ(f: &[i64], g: &[i64]) -> Vec<i64> {
    let p = f.len();
    (0..p)
        .map(|x| (0..p).map(|y| f[y] * g[(x + y) % p]).sum())
        .collect()
}

fn naive_tensor_pairing(f: &[i64], g: &[i64], k: usize) -> i64 {
    let p = f.len();
    let corr = |h: &[i64], pt: &[usize]| -> i64 {
        (0..p)
            .map(|x| pt.iter().fold(h[x], |acc, &s| acc * h[(x + s) % p]))
            .sum()
    };
    let mut total = 0;
    for idx in 0..p.pow(k as u32) {
        let pt: Vec<usize> = (0..k).map(|i| idx / p.pow(i as u32) % p).collect();
        total += corr(f, &pt) * corr(g, &pt);
    }
    total
}

#[test]
fn shkredov_identity_is_exact_for_integer_functions() {
    let mut rng = Sampler::new(31);
    for p in [5u64, 7, 11, 13] {
        let field = PrimeField::new(p).unwrap();
        for k in 1..=3 {
            for trial in 0..200 {
                let f = int_function(&field, &mut rng, -3, 3);
                let g = int_function(&field, &mut rng, -3, 3);
                let c = check_shkredov_identity(&f, &g, k).unwrap();
                assert!(c.ok && c.lhs == c.rhs, "p = {p}, k = {k}, trial {trial}");
                // Spot-check against brute force on a few trials.
                if trial < 3 {
                    let fg = naive_circ(f.values(), g.values());
                    let lhs: i64 = fg.iter().map(|v| v.pow(k as u32 + 1)).sum();
                    assert_eq!(c.lhs, lhs);
                    assert_eq!(c.rhs, naive_tensor_pairing(f.values(), g.values(), k));
                }
            }
        }
    }
}

#[test]
fn shkredov_identity_over_reals_and_complex() {
    let field = PrimeField::new(11).unwrap();
    let mut rng = Sampler::new(5);
    for _ in 0..20 {
        let f = FpFunction::<f64>::from_fn(&field, |_| 2.0 * rng.unit() - 1.0);
        let g = FpFunction::<f64>::from_fn(&field, |_| 2.0 * rng.unit() - 1.0);
        assert!(check_shkredov_identity(&f, &g, 2).unwrap().ok);
        let f = complex_function(&field, &mut rng);
        let g = complex_function(&field, &mut rng);
        let c = check_shkredov_identity(&f, &g, 2).unwrap();
        assert!(c.relative_error() <= 1e-9);
    }
}

#[test]
fn inner_identity_for_complex_functions() {
    let mut rng = Sampler::new(77);
    for p in [5u64, 7, 11, 13, 17, 19] {
        let field = PrimeField::new(p).unwrap();
        let chi: Vec<f64> = (0..p as u32)
            .map(|x| field.quadratic_character(x) as f64)
            .collect();
        for trial in 0..200 {
            let f = complex_function(&field, &mut rng);
            let g = complex_function(&field, &mut rng);
            let c = check_inner_identity(&field, &f, &g).unwrap();
            assert!(c.ok && c.relative_error() <= 1e-9, "p = {p}, trial {trial}");
            if trial < 3 {
                let n = p as usize;
                let fc: Vec<Complex64> = (0..n)
                    .map(|x| (0..n).map(|y| f.values()[y] * chi[(x + y) % n]).sum())
                    .collect();
                let gc: Vec<Complex64> = (0..n)
                    .map(|x| (0..n).map(|y| g.values()[y] * chi[(x + y) % n]).sum())
                    .collect();
                let lhs: Complex64 = fc.iter().zip(&gc).map(|(a, b)| a * b.conj()).sum();
                assert!((lhs - c.lhs).norm() < 1e-9 * (1.0 + lhs.norm()));
            }
        }
    }
}

#[test]
fn inner_identity_is_exact_for_integers() {
    let field = PrimeField::new(13).unwrap();
    let mut rng = Sampler::new(8);
    for _ in 0..200 {
        let f = int_function(&field, &mut rng, -5, 5);
        let g = int_function(&field, &mut rng, -5, 5);
        let c = check_inner_identity(&field, &f, &g).unwrap();
        assert_eq!(c.lhs, c.rhs);
    }
}

#[test]
fn quadruple_bound_exhaustive_to_43() {
    for p in (5..=43u64).filter(|&p| is_prime(p)) {
        let field = PrimeField::new(p).unwrap();
        let n = p as u32;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = check_quadruple_bound(&field, [a, b, c, d]).unwrap();
                        assert!(q.ok, "p = {p}, shifts {:?}: {}", [a, b, c, d], q.sum);
                    }
                }
            }
        }
    }
}
