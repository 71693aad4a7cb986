//! Balanced tensor products, Tor and Ext dimensions.
//!
//! `M tensor_A N` for a right module M and left module N is the quotient of
//! the plain tensor space by the rows `m a tensor n - m tensor a n`.  The
//! derived functors are computed from a minimal resolution of the resolved
//! argument; the complex `M tensor P` is assembled chunk-wise through
//! `M tensor A e  =  M e`, and `Hom(A e, N) = e N`, so each differential is
//! a matrix of right (respectively left) actions of algebra elements.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::AlgebraHom;
use crate::linalg::{solve_left, Mat};
use crate::module::{resolution_steps, Module, ProjectiveModule, ResStep, Side};

/// Row basis of the balancing relations inside the plain tensor space.
///
/// `right_acts[k]` is the action of the k-th algebra basis element on the
/// right module (dimension `dm`), `left_acts[k]` on the left module (`dn`).
pub fn balancing_relations(right_acts: &[Mat], left_acts: &[Mat], dm: usize, dn: usize) -> Mat {
    assert_eq!(right_acts.len(), left_acts.len());
    let mut rows: Vec<Vec<crate::Rat>> = Vec::new();
    for k in 0..right_acts.len() {
        for i in 0..dm {
            let ma = &Mat::unit_row(dm, i) * &right_acts[k];
            for j in 0..dn {
                let an = &Mat::unit_row(dn, j) * &left_acts[k];
                let mut row = Mat::zeros(1, dm * dn);
                for u in 0..dm {
                    if !ma[(0, u)].is_zero() {
                        row[(0, u * dn + j)] = ma[(0, u)].clone();
                    }
                }
                for v in 0..dn {
                    if !an[(0, v)].is_zero() {
                        row[(0, i * dn + v)] = &row[(0, i * dn + v)] - &an[(0, v)];
                    }
                }
                if !row.is_zero() {
                    rows.push(row.row(0).to_vec());
                }
            }
        }
    }
    if rows.is_empty() {
        Mat::zeros(0, dm * dn)
    } else {
        Mat::from_rows(rows).row_basis()
    }
}

/// Dimension of the balanced tensor product from raw action matrices.
pub fn balanced_tensor_dim(right_acts: &[Mat], left_acts: &[Mat], dm: usize, dn: usize) -> usize {
    dm * dn - balancing_relations(right_acts, left_acts, dm, dn).rows()
}

/// dim(M tensor_A N) for a right module M and a left module N.
pub fn tensor_over_algebra(m: &Module, n: &Module) -> usize {
    assert!(*m.algebra == *n.algebra);
    assert!(m.side == Side::Right && n.side == Side::Left);
    let d = m.algebra.dim();
    let right_acts: Vec<Mat> = (0..d).map(|k| m.action(k).clone()).collect();
    let left_acts: Vec<Mat> = (0..d).map(|k| n.action(k).clone()).collect();
    balanced_tensor_dim(&right_acts, &left_acts, m.dim(), n.dim())
}

/// dim(S tensor_R S) where S carries the R-actions through f: R -> S.
pub fn tensor_dim_over(f: &AlgebraHom) -> usize {
    let s = &f.target;
    let r = &f.source;
    let right_acts: Vec<Mat> =
        (0..r.dim()).map(|k| s.right_mult_operator(&f.apply(&r.basis_elem(k)))).collect();
    let left_acts: Vec<Mat> =
        (0..r.dim()).map(|k| s.left_mult_operator(&f.apply(&r.basis_elem(k)))).collect();
    balanced_tensor_dim(&right_acts, &left_acts, s.dim(), s.dim())
}

/// Chunk data of `M tensor P` or `Hom(P, N)` for a projective P: one
/// subspace of the module per projective summand.
struct Chunks {
    /// row basis of M e_i (or e_i N) per summand
    bases: Vec<Mat>,
    offsets: Vec<usize>,
    total: usize,
}

fn chunks_for(m: &Module, p: &ProjectiveModule, left_weight: bool) -> Chunks {
    let a = &m.algebra;
    let mut bases = Vec::new();
    let mut offsets = Vec::new();
    let mut total = 0;
    for &i in &p.summands {
        let e = &a.idempotents()[i];
        // for a right module M the operator of e is the right action (M e);
        // for a left module N it is the left action (e N)
        let basis = m.operator(e).row_basis();
        let _ = left_weight;
        offsets.push(total);
        total += basis.rows();
        bases.push(basis);
    }
    Chunks { bases, offsets, total }
}

/// Differentials of the complex `M tensor P_bullet` for a right module M
/// over the resolution steps of a left module.  Entry t is the map
/// `M tensor P^t -> M tensor P^{t-1}`; index 0 is absent (maps to M tensor N
/// are not needed for dimensions).
fn tensor_complex(m: &Module, steps: &[ResStep]) -> (Vec<usize>, Vec<Mat>) {
    let chunk_list: Vec<Chunks> = steps.iter().map(|s| chunks_for(m, &s.projective, false)).collect();
    let dims: Vec<usize> = chunk_list.iter().map(|c| c.total).collect();
    let mut diffs = Vec::new();
    for t in 1..steps.len() {
        let (src, dst) = (&chunk_list[t], &chunk_list[t - 1]);
        let pt = &steps[t].projective;
        let pprev = &steps[t - 1].projective;
        let mut d = Mat::zeros(src.total, dst.total);
        for (c, src_basis) in src.bases.iter().enumerate() {
            // generator image of summand c inside P^{t-1}
            let gen_img = &pt.generator_row(c) * &steps[t].to_prev;
            for (cp, dst_basis) in dst.bases.iter().enumerate() {
                let x = pprev.block_element(&gen_img, cp);
                if x.is_zero() {
                    continue;
                }
                let op = m.operator(&x);
                let img = src_basis * &op;
                let coords = solve_left(dst_basis, &img)
                    .expect("M e_c . x lands in the target chunk M e_c'");
                for r in 0..coords.rows() {
                    for k in 0..coords.cols() {
                        if !coords[(r, k)].is_zero() {
                            d[(src.offsets[c] + r, dst.offsets[cp] + k)] =
                                &d[(src.offsets[c] + r, dst.offsets[cp] + k)] + &coords[(r, k)];
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    (dims, diffs)
}

/// Dimensions of Tor_i(M, N) for i = 0..=max_i, right module M, left N.
pub fn tor_dims(m: &Module, n: &Module, max_i: usize, _seed: u64) -> Vec<usize> {
    assert!(*m.algebra == *n.algebra);
    assert!(m.side == Side::Right && n.side == Side::Left);
    let steps = resolution_steps(n, max_i + 2);
    let (dims, diffs) = tensor_complex(m, &steps);
    // diffs[t-1]: D_t -> D_{t-1}; complexes are exactness-checked
    for t in 1..diffs.len() {
        assert!((&diffs[t] * &diffs[t - 1]).is_zero(), "tensor complex must be a complex");
    }
    let dim_at = |t: usize| -> usize { dims.get(t).copied().unwrap_or(0) };
    let rank_at = |t: usize| -> usize {
        if t == 0 || t > diffs.len() {
            0
        } else {
            diffs[t - 1].rank()
        }
    };
    (0..=max_i)
        .map(|i| dim_at(i) - rank_at(i) - rank_at(i + 1))
        .collect()
}

/// Cochain maps of `Hom(P_bullet, N)` for left modules M (resolved) and N.
fn hom_complex(n: &Module, steps: &[ResStep]) -> (Vec<usize>, Vec<Mat>) {
    let chunk_list: Vec<Chunks> = steps.iter().map(|s| chunks_for(n, &s.projective, true)).collect();
    let dims: Vec<usize> = chunk_list.iter().map(|c| c.total).collect();
    let mut diffs = Vec::new();
    for t in 1..steps.len() {
        // delta^{t-1}: Hom(P^{t-1}, N) -> Hom(P^t, N)
        let (src, dst) = (&chunk_list[t - 1], &chunk_list[t]);
        let pt = &steps[t].projective;
        let pprev = &steps[t - 1].projective;
        let mut d = Mat::zeros(src.total, dst.total);
        for (cp, dst_basis) in dst.bases.iter().enumerate() {
            let gen_img = &pt.generator_row(cp) * &steps[t].to_prev;
            for (c, src_basis) in src.bases.iter().enumerate() {
                let x = pprev.block_element(&gen_img, c);
                if x.is_zero() {
                    continue;
                }
                let op = n.operator(&x);
                let img = src_basis * &op;
                let coords = solve_left(dst_basis, &img)
                    .expect("x . (e_c N) lands in the target chunk e_c' N");
                for r in 0..coords.rows() {
                    for k in 0..coords.cols() {
                        if !coords[(r, k)].is_zero() {
                            d[(src.offsets[c] + r, dst.offsets[cp] + k)] =
                                &d[(src.offsets[c] + r, dst.offsets[cp] + k)] + &coords[(r, k)];
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    (dims, diffs)
}

/// Dimensions of Ext^i(M, N) for i = 0..=max_i, left modules M and N.
pub fn ext_dims(m: &Module, n: &Module, max_i: usize, _seed: u64) -> Vec<usize> {
    assert!(*m.algebra == *n.algebra);
    assert_eq!(m.side, n.side);
    let steps = resolution_steps(m, max_i + 2);
    let (dims, diffs) = hom_complex(n, &steps);
    for t in 1..diffs.len() {
        assert!((&diffs[t - 1] * &diffs[t]).is_zero(), "hom complex must be a complex");
    }
    let dim_at = |t: usize| -> usize { dims.get(t).copied().unwrap_or(0) };
    let rank_at = |t: usize| -> usize {
        // rank of delta^t: E_t -> E_{t+1}
        if t >= diffs.len() {
            0
        } else {
            diffs[t].rank()
        }
    };
    (0..=max_i)
        .map(|i| {
            let out = rank_at(i);
            let inn = if i == 0 { 0 } else { rank_at(i - 1) };
            dim_at(i) - out - inn
        })
        .collect()
}

/// Transport a module to the opposite algebra: a left A-module is the same
/// data as a right A^op-module, and vice versa.
pub fn transport_to_opposite(m: &Module, aop: &crate::algebra::ARef) -> Module {
    assert!(*m.algebra.opposite() == **aop, "target must be the opposite algebra");
    Module::new(
        aop.clone(),
        m.side.flip(),
        m.dim(),
        (0..m.algebra.dim()).map(|i| m.action(i).clone()).collect(),
    )
    .expect("opposite transport preserves the module axioms")
}
