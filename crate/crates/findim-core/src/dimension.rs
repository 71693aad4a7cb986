//! Extended natural numbers and certified intervals for homological
//! dimensions.
//!
//! Computations that stop at a cap return `Unknown { at_least }` rather than
//! a wrong finite answer.  `Bracket` propagates such partial knowledge
//! through bound formulas: every formula evaluated on brackets is monotone
//! in each argument, so interval arithmetic stays sound.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::ARef;
use crate::linalg::Mat;
use crate::module::{
    projective_dimension, random_module, simple, Module, ProjectiveModule, Side,
};
use crate::seeded_rng;

/// A homological dimension: finite, certified infinite, or only bounded
/// below (the computation hit its cap at `at_least`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtNat {
    Finite(usize),
    Infinite,
    Unknown { at_least: usize },
}

impl ExtNat {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ExtNat::Finite(n) => Some(*n),
            _ => None,
        }
    }

    /// Lower bound that certainly holds.
    pub fn floor(&self) -> usize {
        match self {
            ExtNat::Finite(n) => *n,
            ExtNat::Infinite => usize::MAX,
            ExtNat::Unknown { at_least } => *at_least,
        }
    }

    /// Addition: unknowns absorb, infinity dominates.
    pub fn add(self, other: ExtNat) -> ExtNat {
        use ExtNat::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Finite(a), Finite(b)) => Finite(a + b),
            (Unknown { at_least: a }, Finite(b)) | (Finite(b), Unknown { at_least: a }) => {
                Unknown { at_least: a + b }
            }
            (Unknown { at_least: a }, Unknown { at_least: b }) => Unknown { at_least: a + b },
        }
    }

    pub fn add_usize(self, n: usize) -> ExtNat {
        self.add(ExtNat::Finite(n))
    }

    /// Saturating subtraction of a constant; infinity stays infinite.
    pub fn saturating_sub(self, n: usize) -> ExtNat {
        match self {
            ExtNat::Finite(a) => ExtNat::Finite(a.saturating_sub(n)),
            ExtNat::Infinite => ExtNat::Infinite,
            ExtNat::Unknown { at_least } => ExtNat::Unknown { at_least: at_least.saturating_sub(n) },
        }
    }

    /// Maximum.  An unknown operand keeps the result unknown unless the
    /// other operand is infinite.
    pub fn max(self, other: ExtNat) -> ExtNat {
        use ExtNat::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (Unknown { at_least: a }, Finite(b)) | (Finite(b), Unknown { at_least: a }) => {
                Unknown { at_least: a.max(b) }
            }
            (Unknown { at_least: a }, Unknown { at_least: b }) => Unknown { at_least: a.max(b) },
        }
    }
}

/// Total order used for comparisons of certain values; `Unknown` has no
/// place here, so ordering is only defined on certain variants.
impl ExtNat {
    fn cmp_certain(a: &ExtNat, b: &ExtNat) -> Option<Ordering> {
        use ExtNat::*;
        match (a, b) {
            (Finite(x), Finite(y)) => Some(x.cmp(y)),
            (Infinite, Infinite) => Some(Ordering::Equal),
            (Finite(_), Infinite) => Some(Ordering::Less),
            (Infinite, Finite(_)) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => write!(f, "infinity"),
            ExtNat::Unknown { at_least } => write!(f, ">={at_least} (undetermined)"),
        }
    }
}

/// Certified interval [lo, hi] containing a true dimension value.
///
/// `lo` and `hi` are certain bounds: the value is >= lo and <= hi, where an
/// `Unknown { at_least: k }` lower end means ">= k, could be anything above"
/// and pairs with `hi = Infinite` as the trivial upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub lo: ExtNat,
    pub hi: ExtNat,
}

impl Bracket {
    pub fn exact(v: ExtNat) -> Bracket {
        match v {
            ExtNat::Finite(n) => Bracket { lo: ExtNat::Finite(n), hi: ExtNat::Finite(n) },
            ExtNat::Infinite => Bracket { lo: ExtNat::Infinite, hi: ExtNat::Infinite },
            ExtNat::Unknown { at_least } => {
                Bracket { lo: ExtNat::Finite(at_least), hi: ExtNat::Infinite }
            }
        }
    }

    pub fn finite(n: usize) -> Bracket {
        Bracket::exact(ExtNat::Finite(n))
    }

    pub fn is_exact(&self) -> bool {
        ExtNat::cmp_certain(&self.lo, &self.hi) == Some(Ordering::Equal)
    }

    pub fn add(self, other: Bracket) -> Bracket {
        Bracket { lo: self.lo.add(other.lo), hi: self.hi.add(other.hi) }
    }

    pub fn add_usize(self, n: usize) -> Bracket {
        Bracket { lo: self.lo.add_usize(n), hi: self.hi.add_usize(n) }
    }

    pub fn max(self, other: Bracket) -> Bracket {
        Bracket { lo: self.lo.max(other.lo), hi: self.hi.max(other.hi) }
    }

    /// Does `self <= other` certainly hold?
    pub fn certainly_le(&self, other: &Bracket) -> bool {
        matches!(
            ExtNat::cmp_certain(&self.hi, &other.lo),
            Some(Ordering::Less) | Some(Ordering::Equal)
        )
    }

    /// Does `self <= other` certainly fail?
    pub fn certainly_gt(&self, other: &Bracket) -> bool {
        ExtNat::cmp_certain(&self.lo, &other.hi) == Some(Ordering::Greater)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            match (&self.lo, &self.hi) {
                (ExtNat::Finite(a), ExtNat::Finite(b)) => write!(f, "[{a}, {b}]"),
                (ExtNat::Finite(a), ExtNat::Infinite) => write!(f, "[{a}, infinity]"),
                (lo, hi) => write!(f, "[{lo}, {hi}]"),
            }
        }
    }
}

/// Status of a verified inequality between two brackets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerificationStatus {
    Verified,
    Violated,
    Undetermined,
}

impl fmt::Display for VerificationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationStatus::Verified => write!(f, "verified"),
            VerificationStatus::Violated => write!(f, "violated"),
            VerificationStatus::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// Verdict for "lhs <= rhs" given certified brackets for both sides.
pub fn verify_inequality(lhs: &Bracket, rhs: &Bracket) -> VerificationStatus {
    if lhs.certainly_le(rhs) {
        VerificationStatus::Verified
    } else if lhs.certainly_gt(rhs) {
        VerificationStatus::Violated
    } else {
        VerificationStatus::Undetermined
    }
}

/// How a reported dimension was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionMethod {
    /// Maximum over a complete list of indecomposables.
    ExactList,
    /// Sampled lower bound; no completeness claim.
    Search,
    /// Closed-form fact (e.g. local algebras).
    Formula,
}

impl fmt::Display for DimensionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionMethod::ExactList => write!(f, "exact-list"),
            DimensionMethod::Search => write!(f, "search"),
            DimensionMethod::Formula => write!(f, "formula"),
        }
    }
}

/// A dimension value together with the evidence that produced it.  When the
/// method is `ExactList` the first witness line names a module achieving the
/// value.
#[derive(Clone, Debug)]
pub struct DimensionReport {
    pub value: ExtNat,
    pub witnesses: Vec<String>,
    pub method: DimensionMethod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionError {
    /// Some indecomposable projective or injective is not uniserial, so the
    /// uniserial classification of indecomposables does not apply.
    NotNakayama,
    UnknownBound(String),
    MissingInputs { bound: String, required: Vec<String> },
}

impl fmt::Display for DimensionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionError::NotNakayama => {
                write!(f, "not a Nakayama algebra: some projective or injective is not uniserial")
            }
            DimensionError::UnknownBound(id) => write!(f, "unknown bound id `{id}`"),
            DimensionError::MissingInputs { bound, required } => {
                write!(f, "bound `{bound}` needs inputs: {}", required.join(", "))
            }
        }
    }
}

/// Rows (in `m`'s coordinates) of rad^t·m for t = 1, 2, ... until zero.
fn radical_filtration(m: &Module) -> Vec<Mat> {
    let rad = m.algebra.radical();
    let mut powers = Vec::new();
    let mut cur = Mat::identity(m.dim());
    loop {
        let mut rows = Mat::zeros(0, m.dim());
        for t in 0..rad.rows() {
            rows = rows.vstack(&(&cur * &m.operator(&rad.row_mat(t))));
        }
        let next = rows.row_basis();
        if next.rows() == 0 {
            break;
        }
        cur = next.clone();
        powers.push(next);
    }
    powers
}

/// A module is uniserial when every radical layer has dimension at most one,
/// i.e. its submodule lattice is a chain.
fn is_uniserial(m: &Module) -> bool {
    let powers = radical_filtration(m);
    let mut prev = m.dim();
    for p in &powers {
        if prev - p.rows() > 1 {
            return false;
        }
        prev = p.rows();
    }
    prev <= 1
}

/// Complete list of indecomposable left modules over a Nakayama algebra: the
/// radical quotients P_i/rad^t P_i of the indecomposable projectives.  Errors
/// unless every P_i and every dual of an indecomposable right projective is
/// uniserial.
pub fn nakayama_indecomposables(a: &ARef) -> Result<Vec<Module>, DimensionError> {
    if !a.is_split_basic() {
        return Err(DimensionError::NotNakayama);
    }
    let r = a.idempotents().len();
    for i in 0..r {
        let p = ProjectiveModule::build(a, Side::Left, vec![i]).module;
        let q = ProjectiveModule::build(a, Side::Right, vec![i]).module.dual();
        if !is_uniserial(&p) || !is_uniserial(&q) {
            return Err(DimensionError::NotNakayama);
        }
    }
    let mut out = Vec::new();
    for i in 0..r {
        let p = ProjectiveModule::build(a, Side::Left, vec![i]).module;
        for rows in &radical_filtration(&p) {
            let (quot, _) = p.quotient(rows).expect("radical powers are submodules");
            out.push(quot);
        }
        // t = Loewy length: the projective itself
        out.push(p);
    }
    Ok(out)
}

/// Finitistic dimension as the maximum finite projective dimension over an
/// explicitly given module list.  Sound as an exact value only when the list
/// exhausts the indecomposables (e.g. from [`nakayama_indecomposables`]).
pub fn findim_from_module_list(modules: &[Module], cap: usize, seed: u64) -> DimensionReport {
    let mut best = 0usize;
    let mut best_line = String::from("zero module: pd 0");
    let mut capped = false;
    let mut detail = Vec::new();
    for (i, m) in modules.iter().enumerate() {
        let pd = projective_dimension(m, cap, seed).value;
        detail.push(format!("module {i} (dim {}): pd {pd}", m.dim()));
        match pd {
            ExtNat::Finite(p) => {
                if p >= best {
                    best = p;
                    best_line = format!("module {i} (dim {}): pd {p}", m.dim());
                }
            }
            ExtNat::Infinite => {}
            ExtNat::Unknown { .. } => capped = true,
        }
    }
    let value = if capped { ExtNat::Unknown { at_least: best } } else { ExtNat::Finite(best) };
    let mut witnesses = vec![best_line];
    witnesses.extend(detail);
    DimensionReport { value, witnesses, method: DimensionMethod::ExactList }
}

/// Sampled lower bound for the finitistic dimension: the best finite
/// projective dimension seen among `budget` random left modules.
pub fn findim_search_lower_bound(
    a: &ARef,
    budget: usize,
    size_cap: usize,
    seed: u64,
) -> DimensionReport {
    let mut rng = seeded_rng(seed);
    let mut best = 0usize;
    let mut witness = String::from("every algebra has a projective module: pd 0");
    for k in 0..budget {
        let m = random_module(a, Side::Left, &mut rng, size_cap);
        if m.is_zero() {
            continue;
        }
        if let ExtNat::Finite(p) = projective_dimension(&m, RESOLUTION_CAP, seed).value {
            if p > best {
                best = p;
                witness = format!("sample {k} (dim {}): pd {p}", m.dim());
            }
        }
    }
    DimensionReport {
        value: ExtNat::Finite(best),
        witnesses: vec![witness],
        method: DimensionMethod::Search,
    }
}

/// Default syzygy cap for internal resolutions.  Periodicity detection fires
/// long before this on the small algebras in scope.
const RESOLUTION_CAP: usize = 24;

/// Global dimension as the maximum projective dimension of the vertex
/// simples.  Requires a split basic algebra so the simples are available.
pub fn global_dimension(a: &ARef, cap: usize, seed: u64) -> ExtNat {
    assert!(a.is_split_basic(), "global dimension via simples needs a split basic algebra");
    let mut out = ExtNat::Finite(0);
    for i in 0..a.idempotents().len() {
        let s = simple(a, Side::Left, i).expect("split basic algebras have vertex simples");
        out = out.max(projective_dimension(&s, cap, seed).value);
    }
    out
}

/// Finitistic dimension with an honest interval.
#[derive(Clone, Debug)]
pub struct FindimReport {
    pub bracket: Bracket,
    pub method: DimensionMethod,
    pub notes: Vec<String>,
}

/// Certified interval for the finitistic dimension of `a`.
///
/// Exact cases: local algebras (finite projective dimension forces
/// projectivity, so the value is 0) and Nakayama algebras (max over the
/// complete uniserial list).  Otherwise: sampled lower bound, with the global
/// dimension as upper bound when it is certified finite.
pub fn finitistic_dimension(a: &ARef, cap: usize, seed: u64) -> FindimReport {
    if a.dim() - a.radical().rows() == 1 {
        return FindimReport {
            bracket: Bracket::finite(0),
            method: DimensionMethod::Formula,
            notes: vec![String::from("local algebra: modules of finite pd are projective")],
        };
    }
    if let Ok(list) = nakayama_indecomposables(a) {
        let rep = findim_from_module_list(&list, cap, seed);
        let mut notes = vec![format!("complete list of {} uniserial indecomposables", list.len())];
        notes.extend(rep.witnesses.into_iter().take(1));
        return FindimReport {
            bracket: Bracket::exact(rep.value),
            method: DimensionMethod::ExactList,
            notes,
        };
    }
    let lower = findim_search_lower_bound(a, 30, 8, seed);
    let hi = if a.is_split_basic() {
        match global_dimension(a, cap, seed) {
            ExtNat::Finite(g) => ExtNat::Finite(g),
            _ => ExtNat::Infinite,
        }
    } else {
        ExtNat::Infinite
    };
    let mut notes =
        vec![String::from("sampled lower bound; global dimension as upper bound when finite")];
    notes.extend(lower.witnesses);
    FindimReport {
        bracket: Bracket { lo: lower.value, hi },
        method: DimensionMethod::Search,
        notes,
    }
}

/// Catalog of upper-bound formulas for finitistic and global dimensions of
/// algebras assembled from smaller pieces (triangular matrix rings,
/// recollements, ring extensions, Milnor squares, trivial extensions,
/// idealized subalgebras).  Each entry lists the named inputs its formula
/// consumes; `evaluate_bound` is a pure function of those inputs.
const BOUNDS: &[(&str, &[&str])] = &[
    ("triangular", &["fd_S", "fd_T"]),
    ("stratifying", &["fd_eRe", "fd_quotient", "pd_quotient"]),
    ("main_2b", &["fd_R1", "fd_R3", "w_i", "w_j"]),
    ("finitistic_b", &["fd_R1", "fd_R3", "w_i", "w_j"]),
    ("finitistic_2a", &["fd_R2", "w_istar"]),
    ("finitistic_1", &["fd_R2", "cw_jshriek"]),
    ("homdim_1", &["fd_S", "fd_T", "fld_T"]),
    ("homdim_2a", &["fd_S", "fd_T"]),
    ("homdim_2b", &["fd_R", "fd_box", "pd_S"]),
    ("ringext_1", &["fd_R", "fd_Rprime", "fld_quot", "fld_hom"]),
    ("ringext_2b", &["fd_S", "fd_box"]),
    ("mod1b_a", &["fd_S", "fd_RM"]),
    ("mod1b_b", &["fd_R", "fd_SM"]),
    ("mod1a_1", &["fd_R_mod_I1", "fd_R_mod_I2", "fld_R_mod_I2"]),
    ("mod1a_2a", &["fd_R_mod_I1", "fd_R_mod_I2"]),
    ("mod1a_2b", &["fd_R", "fd_R_sum", "pd_R_mod_I1"]),
    ("ars_1", &["fd_end_I", "fd_R_mod_I"]),
    ("covariant", &["fd_end_Y", "fd_rel_end"]),
    ("f3_0", &["w_F"]),
    ("homo_ring", &["fd_R"]),
    ("star", &["fd_Gamma", "neg_s"]),
    ("gldim_2", &["gd_R1", "gd_R3", "w_i", "w_j"]),
    ("lemma_add_cor_a", &["fd_S", "fd_R_mod_I", "fld_R_mod_I"]),
    ("lemma_add_cor_b", &["fd_R", "fd_S_mod_J", "pd_S"]),
];

pub fn bound_ids() -> Vec<&'static str> {
    BOUNDS.iter().map(|(id, _)| *id).collect()
}

pub fn bound_inputs(bound_id: &str) -> Result<&'static [&'static str], DimensionError> {
    BOUNDS
        .iter()
        .find(|(id, _)| *id == bound_id)
        .map(|(_, inputs)| *inputs)
        .ok_or_else(|| DimensionError::UnknownBound(String::from(bound_id)))
}

/// Evaluate the named bound formula on the given inputs.  Every formula is
/// monotone in each argument, so evaluating at interval endpoints is sound.
pub fn evaluate_bound(
    bound_id: &str,
    inputs: &BTreeMap<String, ExtNat>,
) -> Result<ExtNat, DimensionError> {
    let required = bound_inputs(bound_id)?;
    let missing: Vec<String> =
        required.iter().filter(|k| !inputs.contains_key(**k)).map(|k| String::from(*k)).collect();
    if !missing.is_empty() {
        return Err(DimensionError::MissingInputs {
            bound: String::from(bound_id),
            required: required.iter().map(|k| String::from(*k)).collect(),
        });
    }
    let v = |name: &str| inputs[name];
    let one = ExtNat::Finite(1);
    let fin = ExtNat::Finite;
    let value = match bound_id {
        "triangular" => v("fd_S").add(v("fd_T")).add(one),
        "stratifying" => v("fd_eRe").add(v("fd_quotient")).add(v("pd_quotient")).add(one),
        "main_2b" | "finitistic_b" => {
            v("fd_R1").add(v("fd_R3")).add(v("w_i")).add(v("w_j")).add(one)
        }
        "finitistic_2a" => v("fd_R2").add(v("w_istar")),
        "finitistic_1" => v("fd_R2").add(v("cw_jshriek")),
        "homdim_1" => v("fd_S").add(v("fd_T")).add(one.max(v("fld_T"))).add(one),
        "homdim_2a" => v("fd_S").add(v("fd_T")).add(one),
        "homdim_2b" => v("fd_R").add(v("fd_box")).add(one.max(v("pd_S"))).add(fin(3)),
        "ringext_1" => v("fd_R")
            .add(v("fd_Rprime"))
            .add(one.max(v("fld_quot")).max(v("fld_hom")))
            .add(one),
        "ringext_2b" => v("fd_S").add(v("fd_box")).add(fin(4)),
        "mod1b_a" => v("fd_S").add(v("fd_RM")).add(one),
        "mod1b_b" => v("fd_R").add(v("fd_SM")),
        "mod1a_1" => v("fd_R_mod_I1")
            .add(v("fd_R_mod_I2"))
            .add(one.max(v("fld_R_mod_I2")))
            .add(one),
        "mod1a_2a" => v("fd_R_mod_I1").add(v("fd_R_mod_I2")).add(one),
        "mod1a_2b" => v("fd_R").add(v("fd_R_sum")).add(one.max(v("pd_R_mod_I1"))).add(fin(3)),
        "ars_1" => v("fd_end_I").add(v("fd_R_mod_I")).add(fin(2)),
        "covariant" => v("fd_end_Y").add(v("fd_rel_end")).add(fin(2)),
        "f3_0" => v("w_F"),
        "homo_ring" => v("fd_R"),
        "star" => v("fd_Gamma").add(v("neg_s")),
        "gldim_2" => v("gd_R1").add(v("gd_R3")).add(v("w_i")).add(v("w_j")).add(one),
        "lemma_add_cor_a" => {
            v("fd_S").add(v("fd_R_mod_I")).add(one.max(v("fld_R_mod_I"))).add(one)
        }
        "lemma_add_cor_b" => v("fd_R").add(v("fd_S_mod_J")).add(one.max(v("pd_S"))).add(fin(3)),
        _ => unreachable!("bound_inputs validated the id"),
    };
    Ok(value)
}
