//! Endomorphism algebras of modules, primitive idempotent decomposition, and
//! the covariant-morphism test.
//!
//! The multiplication of an endomorphism algebra is function composition:
//! the table entry for (i, j) is "apply map j, then map i".  With maps acting
//! on coefficient rows this makes End of the regular left module isomorphic
//! to the opposite algebra.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::algebra::{corner, quotient_algebra, ARef, Algebra, AlgebraError, AlgebraHom};
use crate::linalg::{rat_int, solve_left, solve_linear, Mat, Rat};
use crate::module::{hom_space, module_iso_search, Module, ModuleError, ModuleHom, Side};
use crate::seeded_rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoError {
    ZeroModule,
    /// The semisimple quotient has a block that is not a matrix algebra over
    /// the rationals (or the bounded split search missed one; see the docs of
    /// [`decompose_idempotents`]).
    NonSplit,
    Algebra(AlgebraError),
    Module(ModuleError),
}

impl core::fmt::Display for EndoError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EndoError::ZeroModule => write!(f, "endomorphisms of the zero module"),
            EndoError::NonSplit => write!(f, "non-split; extend scalars out of scope"),
            EndoError::Algebra(e) => write!(f, "{e}"),
            EndoError::Module(e) => write!(f, "{e}"),
        }
    }
}

impl From<AlgebraError> for EndoError {
    fn from(e: AlgebraError) -> Self {
        EndoError::Algebra(e)
    }
}

impl From<ModuleError> for EndoError {
    fn from(e: ModuleError) -> Self {
        EndoError::Module(e)
    }
}

/// Endomorphism algebra of a module together with the matrices realizing
/// each basis element and the split-basic flag.  When the flag is false the
/// dimension machinery must not be pointed at `algebra` directly; reduce with
/// [`basic_algebra`] first.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: ARef,
    /// Endomorphism matrix realizing each algebra basis element, aligned
    /// with the basis order of `algebra`.
    pub maps: Vec<Mat>,
    pub split_basic: bool,
}

impl EndAlgebra {
    /// Coordinates of an endomorphism matrix in the hom basis.
    pub fn coords_of(&self, f: &Mat) -> Option<Mat> {
        solve_left(&stack_flat(&self.maps), &flatten(f))
    }
}

fn flatten(m: &Mat) -> Mat {
    let mut out = Mat::zeros(1, m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out[(0, r * m.cols() + c)] = m[(r, c)].clone();
        }
    }
    out
}

fn stack_flat(mats: &[Mat]) -> Mat {
    let cols = if mats.is_empty() { 0 } else { mats[0].rows() * mats[0].cols() };
    let mut out = Mat::zeros(0, cols);
    for m in mats {
        out = out.vstack(&flatten(m));
    }
    out
}

/// End(m) as a based algebra.  The declared idempotent system is refined by
/// [`decompose_idempotents`]; the raw variant below keeps just the unit.
pub fn endomorphism_algebra(m: &Module) -> Result<EndAlgebra, EndoError> {
    let (raw, maps) = endomorphism_algebra_raw(m)?;
    let idems = decompose_idempotents(&raw)?;
    let alg = Algebra::new(
        raw.labels().to_vec(),
        (0..raw.dim()).map(|i| raw.left_mult_operator(&raw.basis_elem(i))).collect(),
        raw.unit(),
        idems,
    )?;
    let split_basic = alg.is_split_basic();
    Ok(EndAlgebra { algebra: alg, maps, split_basic })
}

/// End(m) with only the unit declared as idempotent.
pub fn endomorphism_algebra_raw(m: &Module) -> Result<(ARef, Vec<Mat>), EndoError> {
    if m.is_zero() {
        return Err(EndoError::ZeroModule);
    }
    let homs = hom_space(m, m);
    let h = homs.len();
    let basis = stack_flat(&homs);
    let coords = |f: &Mat| -> Mat {
        solve_left(&basis, &flatten(f)).expect("composite of endomorphisms is an endomorphism")
    };
    let unit = coords(&Mat::identity(m.dim()));
    // b_i * b_j = homs[i] composed after homs[j]
    let mult = (0..h)
        .map(|i| {
            Mat::from_rows(
                (0..h).map(|j| coords(&(&homs[j] * &homs[i])).row(0).to_vec()).collect(),
            )
        })
        .collect();
    let labels = (0..h).map(|i| format!("f{i}")).collect();
    let alg = Algebra::new(labels, mult, unit.clone(), vec![unit])?;
    Ok((alg, homs))
}

/// A complete list of orthogonal primitive idempotents, found by splitting
/// corners of the semisimple quotient and Newton-lifting (e <- 3e^2 - 2e^3)
/// through the radical.  Ignores the declared idempotents of the input.
///
/// The split search over a simple block is bounded: candidates are the
/// block's center, its basis, pairwise products, and seeded small random
/// combinations, each probed for a rational eigenvalue.  A genuinely split
/// block arising from a hom-space basis always yields one in practice, but
/// the error can in principle also fire on an unlucky split input.
pub fn decompose_idempotents(a: &ARef) -> Result<Vec<Mat>, EndoError> {
    let (q, pi) = quotient_algebra(a, &a.radical())?;
    // section of the projection, used to pull idempotents back before lifting
    let section = solve_left(&pi.matrix, &Mat::identity(q.dim()))
        .expect("quotient projection is surjective");
    let mut pending = vec![a.unit()];
    let mut done: Vec<Mat> = Vec::new();
    while let Some(e) = pending.pop() {
        let ebar = pi.apply(&e);
        let proj = &q.left_mult_operator(&ebar) * &q.right_mult_operator(&ebar);
        let cbasis = proj.row_basis();
        if cbasis.rows() <= 1 {
            done.push(e);
            continue;
        }
        let c = subalgebra_with_unit(&q, &cbasis, &ebar);
        let fbar_c = match find_semisimple_split(&c) {
            Some(f) => f,
            None => return Err(EndoError::NonSplit),
        };
        // back to q coordinates, then to a representative in a, then into eAe
        let fbar_q = &fbar_c * &cbasis;
        let rep = &fbar_q * &section;
        let mut z = a.mul(&a.mul(&e, &rep), &e);
        let mut steps = 0;
        while a.mul(&z, &z) != z {
            let z2 = a.mul(&z, &z);
            let z3 = a.mul(&z2, &z);
            z = &z2.scale(&rat_int(3)) - &z3.scale(&rat_int(2));
            steps += 1;
            assert!(steps <= 24, "idempotent lifting must converge");
        }
        let f = z;
        let g = &e - &f;
        assert!(!f.is_zero() && !g.is_zero(), "split must be proper");
        assert!(a.mul(&f, &g).is_zero() && a.mul(&g, &f).is_zero());
        pending.push(g);
        pending.push(f);
    }
    Ok(done)
}

/// Build e-corner-e of `a` on an explicit row basis, declaring only the unit.
fn subalgebra_with_unit(a: &ARef, basis: &Mat, unit: &Mat) -> ARef {
    let k = basis.rows();
    let coords = |v: &Mat| -> Mat {
        Algebra::coords_in(basis, v).expect("subalgebra basis is multiplicatively closed")
    };
    let mult = (0..k)
        .map(|i| {
            let bi = basis.row_mat(i);
            Mat::from_rows(
                (0..k)
                    .map(|j| coords(&a.mul(&bi, &basis.row_mat(j))).row(0).to_vec())
                    .collect(),
            )
        })
        .collect();
    let u = coords(unit);
    let labels = (0..k).map(|i| format!("c{i}")).collect();
    Algebra::new(labels, mult, u.clone(), vec![u]).expect("corner of a valid algebra is valid")
}

/// A proper idempotent of a semisimple algebra of dimension >= 2, or None
/// when no candidate element exhibits a rational eigenvalue (non-split
/// evidence).  Strategy: a rational eigenvalue of a non-scalar x makes
/// y = x - t a zero divisor; the left ideal it generates is a module direct
/// summand, and the projection onto it is right multiplication by the
/// idempotent we want.
fn find_semisimple_split(c: &ARef) -> Option<Mat> {
    let d = c.dim();
    let unit = c.unit();
    let mut candidates: Vec<Mat> = Vec::new();
    // center first: in a split semisimple algebra with several blocks every
    // central element has rational spectrum
    let mut comm = Mat::zeros(d, 0);
    for i in 0..d {
        let b = c.basis_elem(i);
        comm = comm.hstack(&(&c.right_mult_operator(&b) - &c.left_mult_operator(&b)));
    }
    let center = comm.transpose().kernel_basis();
    for r in 0..center.rows() {
        candidates.push(center.row_mat(r));
    }
    for i in 0..d {
        candidates.push(c.basis_elem(i));
    }
    for i in 0..d {
        for j in 0..d {
            candidates.push(c.mul(&c.basis_elem(i), &c.basis_elem(j)));
        }
    }
    let mut rng = seeded_rng(0x5eed_1de3);
    for _ in 0..64 {
        let mut v = Mat::zeros(1, d);
        for i in 0..d {
            v[(0, i)] = rat_int(rng.gen_range(-2..=2));
        }
        candidates.push(v);
    }
    for x in candidates {
        if x.is_zero() || unit.row_basis().row_span_contains(&x) {
            continue;
        }
        let m = min_poly(c, &x);
        for lam in rational_roots(&m) {
            let y = &x - &unit.scale(&lam);
            if y.is_zero() {
                continue;
            }
            // left ideal generated by the zero divisor
            let mut rows = Mat::zeros(0, d);
            for i in 0..d {
                rows = rows.vstack(&c.mul(&c.basis_elem(i), &y));
            }
            let rows = rows.row_basis();
            if rows.rows() == 0 || rows.rows() == d {
                continue;
            }
            if let Some(f) = left_ideal_idempotent(c, &rows) {
                if !f.is_zero() && f != unit {
                    return Some(f);
                }
            }
        }
    }
    None
}

/// Idempotent generating a left ideal that is a left-module direct summand:
/// a left-linear projection of the regular module onto the ideal is right
/// multiplication by it.
fn left_ideal_idempotent(c: &ARef, ideal_rows: &Mat) -> Option<Mat> {
    let reg = Module::regular(c, Side::Left);
    let (lmod, _incl) = reg.submodule(ideal_rows).expect("left ideal is invariant");
    let homs = hom_space(&reg, &lmod);
    let l = lmod.dim();
    // combo with  ideal_rows * H = identity on the ideal
    let mut sys = Mat::zeros(0, l * l);
    for h in &homs {
        sys = sys.vstack(&flatten(&(ideal_rows * h)));
    }
    let target = flatten(&Mat::identity(l));
    let combo = solve_left(&sys, &target)?;
    let mut h = Mat::zeros(c.dim(), l);
    for (i, hom) in homs.iter().enumerate() {
        h = &h + &hom.scale(&combo[(0, i)]);
    }
    let f = &(&c.unit() * &h) * ideal_rows;
    assert_eq!(c.mul(&f, &f), f, "projection image of the unit is idempotent");
    Some(f)
}

/// Monic minimal polynomial of an element, coefficients low to high.
fn min_poly(c: &ARef, x: &Mat) -> Vec<Rat> {
    let mut rows = c.unit();
    let mut pw = c.unit();
    loop {
        let next = c.mul(&pw, x);
        if let Some(coeffs) = solve_left(&rows, &next) {
            let k = rows.rows();
            let mut p = vec![Rat::zero(); k + 1];
            for i in 0..k {
                p[i] = -coeffs[(0, i)].clone();
            }
            p[k] = Rat::one();
            return p;
        }
        rows = rows.vstack(&next);
        pw = next;
    }
}

fn poly_eval(p: &[Rat], at: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &(&acc * at) + c;
    }
    acc
}

fn divisors_u64(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots of a nonzero polynomial.  Complete when the integer
/// content fits in u64; otherwise only a fixed list of small values is
/// probed.
fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let mut p: Vec<Rat> = p.to_vec();
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    assert!(p.len() >= 2, "roots of a constant requested");
    let mut roots: Vec<Rat> = Vec::new();
    let push = |r: Rat, roots: &mut Vec<Rat>| {
        if !roots.contains(&r) {
            roots.push(r);
        }
    };
    if p[0].is_zero() {
        push(Rat::zero(), &mut roots);
        while p[0].is_zero() {
            p.remove(0);
        }
        if p.len() < 2 {
            return roots;
        }
    }
    for (n, d) in [(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)] {
        let cand = Rat::new(n.into(), d.into());
        if poly_eval(&p, &cand).is_zero() {
            push(cand, &mut roots);
        }
    }
    // clear denominators; rational roots n/d of an integer polynomial have
    // n | constant term and d | leading coefficient
    let mut lcm = num_bigint::BigInt::one();
    for c in &p {
        let den = c.denom();
        let g = num_integer::Integer::gcd(&lcm, den);
        lcm = &lcm * &(den / g);
    }
    let ints: Vec<num_bigint::BigInt> =
        p.iter().map(|c| (c * &Rat::from(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].abs();
    let al = ints[ints.len() - 1].abs();
    if let (Some(a0), Some(al)) = (a0.to_u64(), al.to_u64()) {
        if a0 > 0 && a0 <= 1_000_000_000_000 && al <= 1_000_000_000_000 {
            for n in divisors_u64(a0) {
                for d in divisors_u64(al) {
                    for sign in [1i64, -1] {
                        let cand = Rat::new((sign * n as i64).into(), (d as i64).into());
                        if poly_eval(&p, &cand).is_zero() {
                            push(cand, &mut roots);
                        }
                    }
                }
            }
        }
    }
    roots
}

/// Corner of `a` at one representative per isomorphism class of the
/// indecomposable projectives attached to the declared idempotents.  The
/// result is Morita equivalent to `a`: finitistic and global dimension
/// questions transfer unchanged.  Returns the corner and the chosen
/// representative indices.
pub fn basic_algebra(a: &ARef, seed: u64) -> Result<(ARef, Vec<usize>), EndoError> {
    let n = a.idempotents().len();
    let projs: Vec<Module> = (0..n)
        .map(|i| crate::module::ProjectiveModule::indecomposable(a, Side::Left, i).module)
        .collect();
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        let fresh = reps
            .iter()
            .all(|&r| module_iso_search(&projs[i], &projs[r], seed).is_none());
        if fresh {
            reps.push(i);
        }
    }
    let mut e = Mat::zeros(1, a.dim());
    for &r in &reps {
        e = &e + &a.idempotents()[r];
    }
    let (c, _basis) = corner(a, &e)?;
    Ok((c, reps))
}

/// Basis (in End(x) coordinates) of the endomorphisms of x that factor
/// through a direct sum of copies of y, together with the End(x) data the
/// rows refer to.
pub struct FactorIdeal {
    pub end: ARef,
    pub maps: Vec<Mat>,
    pub ideal_rows: Mat,
}

pub fn factor_through_ideal(x: &Module, y: &Module) -> Result<FactorIdeal, EndoError> {
    let (end, maps) = endomorphism_algebra_raw(x)?;
    let basis = stack_flat(&maps);
    let mut rows = Mat::zeros(0, end.dim());
    if !y.is_zero() {
        let hxy = hom_space(x, y);
        let hyx = hom_space(y, x);
        for h in &hxy {
            for g in &hyx {
                let comp = h * g;
                let coords = solve_left(&basis, &flatten(&comp))
                    .expect("a composite through y is an endomorphism of x");
                rows = rows.vstack(&coords);
            }
        }
    }
    let ideal_rows = rows.row_basis();
    assert!(
        end.is_two_sided_ideal(&ideal_rows),
        "maps factoring through y form a two-sided ideal"
    );
    Ok(FactorIdeal { end, maps, ideal_rows })
}

/// Witness data for the covariance test of a morphism f: Y -> X.
#[derive(Clone, Debug)]
pub struct CovariantReport {
    /// Hom(X,Y) -> Hom(X,X), u |-> u then f, is injective.
    pub hom_into_injective: bool,
    /// Section of Hom(Y,Y) -> Hom(Y,X) (u |-> u then f) as an End(Y)-map;
    /// rows are Hom(Y,X)-coordinates, columns End(Y)-coordinates.
    pub section: Option<Mat>,
}

impl CovariantReport {
    pub fn holds(&self) -> bool {
        self.hom_into_injective && self.section.is_some()
    }
}

/// Both covariance conditions for f: Y -> X, solved exactly.
pub fn is_covariant_morphism(f: &ModuleHom) -> CovariantReport {
    let y = &f.source;
    let x = &f.target;
    let fm = &f.matrix;
    // (i) compositions u |-> u*f for u: X -> Y stay independent
    let hxy = hom_space(x, y);
    let mut images = Mat::zeros(0, x.dim() * x.dim());
    for u in &hxy {
        images = images.vstack(&flatten(&(u * fm)));
    }
    let hom_into_injective = images.rank() == hxy.len();

    // (ii) section of End(Y) -> Hom(Y,X) that intertwines precomposition
    let ey = hom_space(y, y);
    let hyx = hom_space(y, x);
    let hy = ey.len();
    let hx = hyx.len();
    let hyx_basis = stack_flat(&hyx);
    let ey_basis = stack_flat(&ey);
    let coords_yx = |m: &Mat| solve_left(&hyx_basis, &flatten(m)).expect("lies in Hom(Y,X)");
    let coords_yy = |m: &Mat| solve_left(&ey_basis, &flatten(m)).expect("lies in End(Y)");
    // Phi: End(Y) -> Hom(Y,X)
    let mut phi = Mat::zeros(0, hx);
    for e in &ey {
        phi = phi.vstack(&coords_yx(&(e * fm)));
    }
    // per-generator action matrices: L_k on End(Y), P_k on Hom(Y,X)
    let mut lk = Vec::with_capacity(hy);
    let mut pk = Vec::with_capacity(hy);
    for e in &ey {
        let mut l = Mat::zeros(0, hy);
        for b in &ey {
            l = l.vstack(&coords_yy(&(e * b)));
        }
        lk.push(l);
        let mut p = Mat::zeros(0, hx);
        for v in &hyx {
            p = p.vstack(&coords_yx(&(e * v)));
        }
        pk.push(p);
    }
    // unknown S (hx x hy): S*Phi = I and P_k*S = S*L_k for all k
    let unknowns = hx * hy;
    let mut sys = Mat::zeros(0, unknowns);
    let mut rhs = Mat::zeros(0, 1);
    for i in 0..hx {
        for j in 0..hx {
            let mut row = Mat::zeros(1, unknowns);
            for b in 0..hy {
                row[(0, i * hy + b)] = phi[(b, j)].clone();
            }
            sys = sys.vstack(&row);
            rhs = rhs.vstack(&Mat::row_vec(vec![if i == j { Rat::one() } else { Rat::zero() }]));
        }
    }
    for k in 0..hy {
        for i in 0..hx {
            for b2 in 0..hy {
                let mut row = Mat::zeros(1, unknowns);
                for m in 0..hx {
                    row[(0, m * hy + b2)] = &row[(0, m * hy + b2)] + &pk[k][(i, m)];
                }
                for b in 0..hy {
                    row[(0, i * hy + b)] = &row[(0, i * hy + b)] - &lk[k][(b, b2)];
                }
                sys = sys.vstack(&row);
                rhs = rhs.vstack(&Mat::zeros(1, 1));
            }
        }
    }
    let section = solve_linear(&sys, &rhs).map(|sol| {
        let mut s = Mat::zeros(hx, hy);
        for i in 0..hx {
            for b in 0..hy {
                s[(i, b)] = sol[(i * hy + b, 0)].clone();
            }
        }
        // exact check of the split identity
        let mut check = Mat::zeros(0, hx);
        for i in 0..hx {
            let mut comp = Mat::zeros(y.dim(), x.dim());
            for b in 0..hy {
                comp = &comp + &(&ey[b] * fm).scale(&s[(i, b)]);
            }
            check = check.vstack(&coords_yx(&comp));
        }
        assert_eq!(check, Mat::identity(hx), "section must split the map exactly");
        s
    });
    CovariantReport { hom_into_injective, section }
}

/// Relative endomorphism quotient End(x) / { maps factoring through y }.
pub fn relative_end_quotient(x: &Module, y: &Module) -> Result<(ARef, AlgebraHom), EndoError> {
    let data = factor_through_ideal(x, y)?;
    let (q, pi) = quotient_algebra(&data.end, &data.ideal_rows)?;
    Ok((q, pi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::algebra::algebra_iso_search;
    use crate::module::{simple, ProjectiveModule};
    use crate::presets;

    #[test]
    fn end_of_indecomposable_projectives_matches_corners() {
        for a in presets::all() {
            for (i, e) in a.idempotents().to_vec().iter().enumerate() {
                let p = ProjectiveModule::indecomposable(&a, Side::Left, i).module;
                let end = endomorphism_algebra(&p).unwrap();
                let (c, _) = corner(&a, e).unwrap();
                assert_eq!(end.algebra.dim(), c.dim(), "End(Ae) vs eAe over {:?}", a.labels());
                assert!(end.split_basic);
            }
        }
    }

    #[test]
    fn end_of_regular_is_opposite() {
        for name in ["A2", "ut2", "dual", "nak3"] {
            let a = presets::by_name(name).unwrap();
            let reg = Module::regular(&a, Side::Left);
            let end = endomorphism_algebra(&reg).unwrap();
            assert_eq!(end.algebra.dim(), a.dim());
            assert_eq!(end.algebra.idempotents().len(), a.idempotents().len());
            let iso = algebra_iso_search(&end.algebra, &a.opposite(), 7);
            assert!(iso.is_some(), "End of the regular module vs opposite of {name}");
        }
    }

    #[test]
    fn end_of_simple_square_is_matrix_algebra() {
        let a = presets::a2();
        let s = simple(&a, Side::Left, 1).unwrap();
        let m = s.direct_sum(&s);
        let end = endomorphism_algebra(&m).unwrap();
        assert_eq!(end.algebra.dim(), 4);
        assert!(!end.split_basic, "2x2 matrix block is not basic");
        assert_eq!(end.algebra.idempotents().len(), 2);
    }

    #[test]
    fn decompose_on_product_of_fields() {
        let one = rat_int(1);
        let zero = rat_int(0);
        let mult = vec![
            Mat::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero.clone(), zero.clone()]]),
            Mat::from_rows(vec![vec![zero.clone(), zero.clone()], vec![zero.clone(), one.clone()]]),
        ];
        let unit = Mat::row_vec(vec![one.clone(), one.clone()]);
        let a = Algebra::new(
            vec!["u".to_string(), "v".to_string()],
            mult,
            unit.clone(),
            vec![unit],
        )
        .unwrap();
        let idems = decompose_idempotents(&a).unwrap();
        assert_eq!(idems.len(), 2);
        let expect_u = Mat::from_int_rows(&[&[1, 0]]);
        let expect_v = Mat::from_int_rows(&[&[0, 1]]);
        assert!(idems.contains(&expect_u) && idems.contains(&expect_v));
    }

    #[test]
    fn end_of_simple_plus_projective_has_two_primitives() {
        let a = presets::a2();
        let s1 = simple(&a, Side::Left, 0).unwrap();
        let p1 = ProjectiveModule::indecomposable(&a, Side::Left, 0).module;
        let m = s1.direct_sum(&p1);
        let end = endomorphism_algebra(&m).unwrap();
        assert_eq!(end.algebra.dim(), 3);
        assert_eq!(end.algebra.idempotents().len(), 2);
        assert!(end.split_basic);
    }

    #[test]
    fn non_split_endomorphism_ring_is_detected() {
        // module over the truncated Kronecker algebra whose endomorphisms
        // form the field adjoining a square root of 2
        let a = presets::kronecker_trunc();
        let d = 4;
        // basis: two copies of the source vertex space, two of the target;
        // first arrow acts as the identity, second as the companion of t^2-2
        let weight = |i: usize| if i < 2 { 0 } else { 1 };
        let mut action = Vec::new();
        for b in 0..a.dim() {
            let mut m = Mat::zeros(d, d);
            match b {
                0 => {
                    for i in 0..d {
                        if weight(i) == 0 {
                            m[(i, i)] = rat_int(1);
                        }
                    }
                }
                1 => {
                    for i in 0..d {
                        if weight(i) == 1 {
                            m[(i, i)] = rat_int(1);
                        }
                    }
                }
                2 => {
                    m[(0, 2)] = rat_int(1);
                    m[(1, 3)] = rat_int(1);
                }
                3 => {
                    m[(0, 3)] = rat_int(1);
                    m[(1, 2)] = rat_int(2);
                }
                _ => unreachable!(),
            }
            action.push(m);
        }
        let m = Module::new(a, Side::Left, d, action).unwrap();
        let err = endomorphism_algebra(&m).unwrap_err();
        assert_eq!(err, EndoError::NonSplit);
        assert_eq!(err.to_string(), "non-split; extend scalars out of scope");
    }

    #[test]
    fn covariance_of_the_trace_ideal_inclusion() {
        let a = presets::ut2();
        let e = a.idempotents()[1].clone();
        let ideal = a.ideal_closure(&e);
        let reg = Module::regular(&a, Side::Left);
        let (_imod, incl) = reg.submodule(&ideal).unwrap();
        let report = is_covariant_morphism(&incl);
        assert!(report.holds(), "BeB into B is covariant");

        let zero = ModuleHom::new(
            incl.source.clone(),
            reg.clone(),
            Mat::zeros(incl.source.dim(), reg.dim()),
        )
        .unwrap();
        let z = is_covariant_morphism(&zero);
        assert!(!z.hom_into_injective);
        assert!(!z.holds());

        let id = ModuleHom::new(reg.clone(), reg.clone(), Mat::identity(reg.dim())).unwrap();
        assert!(is_covariant_morphism(&id).holds());
    }

    #[test]
    fn factor_ideal_extremes_and_trace_case() {
        let a = presets::ut2();
        let reg = Module::regular(&a, Side::Left);
        let zero = Module::zero(a.clone(), Side::Left);
        assert_eq!(factor_through_ideal(&reg, &zero).unwrap().ideal_rows.rows(), 0);
        assert_eq!(factor_through_ideal(&reg, &reg).unwrap().ideal_rows.rows(), a.dim());

        let e = a.idempotents()[1].clone();
        let ideal = a.ideal_closure(&e);
        let (imod, _incl) = reg.submodule(&ideal).unwrap();
        let data = factor_through_ideal(&reg, &imod).unwrap();
        assert_eq!(data.ideal_rows.rows(), 2);
        let (q, _pi) = relative_end_quotient(&reg, &imod).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn basic_reduction_of_endomorphism_algebras() {
        let a = presets::a2();
        let s2 = simple(&a, Side::Left, 1).unwrap();
        let end = endomorphism_algebra(&s2.direct_sum(&s2)).unwrap();
        let (basic, reps) = basic_algebra(&end.algebra, 0).unwrap();
        assert_eq!(basic.dim(), 1);
        assert_eq!(reps.len(), 1);

        let b = presets::ut2();
        let e = b.idempotents()[1].clone();
        let reg = Module::regular(&b, Side::Left);
        let (imod, _) = reg.submodule(&b.ideal_closure(&e)).unwrap();
        let end2 = endomorphism_algebra(&reg.direct_sum(&imod)).unwrap();
        assert_eq!(end2.algebra.idempotents().len(), 4);
        let (basic2, reps2) = basic_algebra(&end2.algebra, 0).unwrap();
        assert_eq!(basic2.dim(), 3);
        assert_eq!(reps2.len(), 2);
        assert!(basic2.is_split_basic());
        let hit = algebra_iso_search(&basic2, &presets::a2(), 3).is_some()
            || algebra_iso_search(&basic2, &presets::a2().opposite(), 3).is_some();
        assert!(hit, "basic endomorphism algebra of B + BeB is the arrow algebra");
    }
}
