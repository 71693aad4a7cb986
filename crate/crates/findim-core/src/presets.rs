//! Named example algebras used throughout the tests and the CLI.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{path_algebra_monomial, quotient_algebra, ARef, Algebra, Bimodule};
use crate::linalg::Mat;

/// The ground field as an algebra of dimension 1.
pub fn ground_field() -> ARef {
    Algebra::new(
        vec!["e1".to_string()],
        vec![Mat::identity(1)],
        Mat::identity(1),
        vec![Mat::identity(1)],
    )
    .unwrap()
}

/// Path algebra of the quiver 1 -> 2.  Basis e1, e2, a.
pub fn a2() -> ARef {
    path_algebra_monomial(2, &[(0, 1)], &["a"], &[], 8).unwrap()
}

/// Dual numbers k[x]/(x^2).  Basis e1, x.
pub fn dual_numbers() -> ARef {
    path_algebra_monomial(1, &[(0, 0)], &["x"], &[vec![0, 0]], 8).unwrap()
}

/// Truncated polynomial ring k[x]/(x^3).  Basis e1, x, xx.
pub fn nak3() -> ARef {
    path_algebra_monomial(1, &[(0, 0)], &["x"], &[vec![0, 0, 0]], 8).unwrap()
}

/// Upper triangular 2x2 matrices, basis e11, e22, e12 with
/// e12 = e22 * e12 * e11 (an arrow from the first idempotent to the second).
pub fn ut2() -> ARef {
    let p = path_algebra_monomial(2, &[(0, 1)], &["e12"], &[], 8).unwrap();
    relabel(&p, &["e11", "e22", "e12"])
}

/// Kronecker quiver 1 => 2 (two parallel arrows), which is already
/// finite-dimensional; the name records that no extra truncation is needed.
pub fn kronecker_trunc() -> ARef {
    path_algebra_monomial(2, &[(0, 1), (0, 1)], &["a", "b"], &[], 8).unwrap()
}

fn relabel(a: &ARef, labels: &[&str]) -> ARef {
    assert_eq!(labels.len(), a.dim());
    let mult = (0..a.dim()).map(|i| a.left_mult_operator(&a.basis_elem(i))).collect();
    Algebra::new(
        labels.iter().map(|s| s.to_string()).collect(),
        mult,
        a.unit(),
        a.idempotents().to_vec(),
    )
    .unwrap()
}

/// Look up a preset by its CLI name.
pub fn by_name(name: &str) -> Option<ARef> {
    match name {
        "k" => Some(ground_field()),
        "a2" | "A2" => Some(a2()),
        "dual" => Some(dual_numbers()),
        "nak3" => Some(nak3()),
        "ut2" => Some(ut2()),
        "kronecker-trunc" => Some(kronecker_trunc()),
        _ => None,
    }
}

pub fn names() -> Vec<&'static str> {
    vec!["k", "A2", "dual", "nak3", "ut2", "kronecker-trunc"]
}

pub fn all() -> Vec<ARef> {
    names().into_iter().map(|n| by_name(n).unwrap()).collect()
}

/// One-dimensional S-T-bimodule through the augmentations of two local
/// split algebras (each acts by the scalar its element reduces to mod rad).
pub fn one_dim_bimodule(s: &ARef, t: &ARef) -> Bimodule {
    let aug = |a: &ARef| -> Vec<Mat> {
        let (q, pi) = quotient_algebra(a, &a.radical()).expect("radical is a proper ideal");
        assert_eq!(q.dim(), 1, "algebra must be local for the augmentation action");
        (0..a.dim()).map(|i| pi.apply(&a.basis_elem(i))).collect()
    };
    Bimodule::new(s.clone(), t.clone(), 1, aug(s), aug(t)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    #[test]
    fn preset_dimensions() {
        let dims: Vec<(String, usize)> = names()
            .into_iter()
            .map(|n| (n.to_string(), by_name(n).unwrap().dim()))
            .collect();
        let expect = [("k", 1), ("A2", 3), ("dual", 2), ("nak3", 3), ("ut2", 3), ("kronecker-trunc", 4)];
        for ((name, dim), (ename, edim)) in dims.iter().zip(expect.iter()) {
            assert_eq!(name, ename);
            assert_eq!(dim, edim, "dimension of {name}");
        }
    }

    #[test]
    fn all_presets_split_basic() {
        for a in all() {
            assert!(a.is_split_basic(), "{a:?}");
        }
    }

    #[test]
    fn ut2_products_match_matrix_units() {
        let b = ut2();
        let e11 = b.basis_elem(0);
        let e22 = b.basis_elem(1);
        let e12 = b.basis_elem(2);
        assert_eq!(b.mul(&e22, &e12), e12);
        assert_eq!(b.mul(&e12, &e11), e12);
        assert!(b.mul(&e12, &e22).is_zero());
        assert!(b.mul(&e11, &e12).is_zero());
        assert!(b.mul(&e12, &e12).is_zero());
    }

    #[test]
    fn kronecker_not_uniserial() {
        let a = kronecker_trunc();
        // rad(A e1) is 2-dimensional, so A e1 is not uniserial
        let e1 = a.idempotents()[0].clone();
        let p1 = a.right_mult_operator(&e1).row_basis();
        assert_eq!(p1.rows(), 3);
        let rad = a.radical();
        assert_eq!(rad.rows(), 2);
    }
}
