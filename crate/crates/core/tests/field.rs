mod common;

use common::poly_mul_mod;
use mobius_lattice::gfq::FqField;
use mobius_lattice::Error;

const SMALL: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];
const UP_TO_27: [u32; 15] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

#[test]
fn axioms_exhaustive_up_to_9() {
    for q in SMALL {
        let f = FqField::of_order(q).unwrap();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)), "q={q}");
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)), "q={q}");
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)), "q={q}");
                }
            }
        }
    }
}

#[test]
fn inverses_and_cyclic_group_up_to_27() {
    for q in UP_TO_27 {
        let f = FqField::of_order(q).unwrap();
        assert_eq!(f.inv(0), None);
        for a in 1..q {
            let b = f.inv(a).unwrap();
            assert_eq!(f.mul(a, b), 1, "q={q} a={a}");
        }
        // powers of the primitive element hit every nonzero element once
        let g = f.primitive_element();
        let mut seen = vec![false; q as usize];
        let mut x = 1;
        for _ in 0..q - 1 {
            assert!(!seen[x as usize], "q={q}: power repeats early");
            seen[x as usize] = true;
            x = f.mul(x, g);
        }
        assert_eq!(x, 1);
        assert!(seen[1..].iter().all(|&s| s));
        assert_eq!(f.multiplicative_order(g), Some(q - 1));
        assert_eq!(f.pow(g, u64::from(q - 1)), 1);
    }
}

#[test]
fn extension_products_match_polynomial_arithmetic() {
    for q in [4, 8, 9, 16, 25, 27] {
        let f = FqField::of_order(q).unwrap();
        let p = f.characteristic();
        let modulus = f.modulus().to_vec();
        for a in 0..q {
            for b in 0..q {
                let want = poly_mul_mod(p, &modulus, &f.coefficients(a), &f.coefficients(b));
                assert_eq!(f.coefficients(f.mul(a, b)), want, "q={q} a={a} b={b}");
            }
        }
    }
}

#[test]
fn user_modulus_and_rejections() {
    // x^2 + x + 2 is irreducible over GF(3)
    let f = FqField::new(3, 2, Some(&[2, 1, 1])).unwrap();
    assert_eq!(f.order(), 9);
    for a in 1..9 {
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }
    // x^2 + 1 = (x + 1)^2 over GF(2)
    assert!(matches!(
        FqField::new(2, 2, Some(&[1, 0, 1])),
        Err(Error::ReducibleModulus(..))
    ));
    assert!(matches!(FqField::prime(6), Err(Error::NonPrimeCharacteristic(6))));
    assert!(FqField::of_order(12).is_err());
}

#[test]
fn checked_element_api() {
    let f4 = FqField::of_order(4).unwrap();
    let f2 = FqField::prime(2).unwrap();
    let a = f4.element(2).unwrap();
    let one = f4.one();
    assert_eq!(a.mul(&a).unwrap().value(), f4.add(2, 1));
    assert_eq!(a.div(&a).unwrap(), one);
    assert_eq!(f4.zero().inv().unwrap_err(), Error::DivisionByZero);
    assert_eq!(one.add(&f2.one()).unwrap_err(), Error::MixedFields);
    assert_eq!(f4.element(4).unwrap_err(), Error::NotAnElement(4));
}
