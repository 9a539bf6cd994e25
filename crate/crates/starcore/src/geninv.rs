//! Generalized inverses with defining-equation certificates.
//!
//! Five kinds are computed, all exactly and all through full-rank
//! factorizations:
//!
//! * group inverse `a^#`: the unique `x` with `xa^2 = a`, `ax^2 = x`,
//!   `ax = xa`; exists iff `rank(A) = rank(A^2)`, computed as
//!   `F (GF)^-2 G` from `A = FG`.
//! * Drazin inverse `a^D`: the unique `x` with `x a^{k+1} = a^k`,
//!   `ax^2 = x`, `ax = xa`; always exists, computed by Cline's recursive
//!   factorization (factor, swap, repeat until the core is invertible or
//!   zero), which terminates in at most `n` steps.
//! * Moore-Penrose inverse `a^+`: the unique solution of the four Penrose
//!   equations, `G* (G G*)^-1 (F* F)^-1 F*`; the Gram matrices are
//!   invertible over the Gaussian rationals because the involution is
//!   positive definite.
//! * (1,3)-inverse: any `x` with `axa = a`, `(ax)* = ax`; canonically the
//!   Moore-Penrose inverse here.
//! * core inverse: the unique `x` with `xa^2 = a`, `ax^2 = x`,
//!   `(ax)* = ax`; exists iff the group inverse does, computed as
//!   `a^# a a^{(1,3)}`.
//!
//! Every returned inverse carries a certificate listing the defining
//! equations that were verified; a certificate failure is a hard internal
//! error, never a warning.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenInvError {
    #[error("no group inverse: rank(A^2) < rank(A)")]
    NoGroupInverse,
    #[error("matrix must be square")]
    NotSquare,
    #[error("not triangular with respect to p: {0}")]
    NotTriangular(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseKind {
    Group,
    Drazin,
    MoorePenrose,
    OneThree,
    Core,
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            InverseKind::Group => "group",
            InverseKind::Drazin => "drazin",
            InverseKind::MoorePenrose => "moore-penrose",
            InverseKind::OneThree => "one-three",
            InverseKind::Core => "core",
        };
        write!(f, "{name}")
    }
}

/// A computed inverse together with the defining equations that were
/// verified exactly for the pair `(A, inverse)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenInverse {
    pub kind: InverseKind,
    pub inverse: Matrix,
    /// Drazin index; `1` for every other kind.
    pub index: usize,
    pub certificate: Vec<String>,
}

/// Spectral idempotent data: `a^pi = 1 - a a^D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralData {
    pub a_pi: Matrix,
    pub aa_d: Matrix,
    pub index: usize,
}

fn certify(checks: &[(&str, bool)]) -> Vec<String> {
    let mut cert = Vec::with_capacity(checks.len());
    for (equation, holds) in checks {
        assert!(*holds, "certificate equation failed: {equation}");
        cert.push((*equation).to_string());
    }
    cert
}

/// Drazin index: the smallest `j` with `rank(A^j) = rank(A^{j+1})`, with
/// invertible matrices reported as index 1.
pub fn index(a: &Matrix) -> usize {
    assert!(a.is_square(), "index requires a square matrix");
    let n = a.rows();
    let mut prev = n; // rank(A^0)
    let mut power = a.clone();
    for j in 1..=n + 1 {
        let r = power.rank();
        if r == prev {
            return (j - 1).max(1);
        }
        prev = r;
        power = power.mul(a);
    }
    unreachable!("rank chain stabilizes within n steps")
}

/// Group inverse `F (GF)^-2 G`; the single rank computation on `GF` decides
/// existence, since `GF` is invertible iff `rank(A^2) = rank(A)`.
pub fn group_inverse(a: &Matrix) -> Result<GenInverse, GenInvError> {
    if !a.is_square() {
        return Err(GenInvError::NotSquare);
    }
    let frf = a.full_rank_factorize();
    let gf = frf.g.mul(&frf.f);
    let gf_inv = gf.inverse().ok_or(GenInvError::NoGroupInverse)?;
    let x = frf.f.mul(&gf_inv).mul(&gf_inv).mul(&frf.g);
    let certificate = certify(&[
        ("x a^2 = a", x.mul(a).mul(a) == *a),
        ("a x^2 = x", a.mul(&x).mul(&x) == x),
        ("a x = x a", a.mul(&x) == x.mul(a)),
    ]);
    Ok(GenInverse { kind: InverseKind::Group, inverse: x, index: 1, certificate })
}

fn drazin_matrix(a: &Matrix) -> Matrix {
    if let Some(inv) = a.inverse() {
        return inv;
    }
    let frf = a.full_rank_factorize();
    if frf.rank == 0 {
        return Matrix::zeros(a.rows(), a.cols());
    }
    // Cline: (FG)^D = F ((GF)^D)^2 G, and GF is strictly smaller here
    // because A is singular.
    let core = frf.g.mul(&frf.f);
    let d = drazin_matrix(&core);
    frf.f.mul(&d).mul(&d).mul(&frf.g)
}

pub fn drazin_inverse(a: &Matrix) -> Result<GenInverse, GenInvError> {
    if !a.is_square() {
        return Err(GenInvError::NotSquare);
    }
    let k = index(a);
    let x = drazin_matrix(a);
    let eq_power = format!("x a^{} = a^{}", k + 1, k);
    let certificate = certify(&[
        (eq_power.as_str(), x.mul(&a.pow(k + 1)) == a.pow(k)),
        ("a x^2 = x", a.mul(&x).mul(&x) == x),
        ("a x = x a", a.mul(&x) == x.mul(a)),
    ]);
    Ok(GenInverse { kind: InverseKind::Drazin, inverse: x, index: k, certificate })
}

pub fn moore_penrose(a: &Matrix) -> GenInverse {
    let frf = a.full_rank_factorize();
    let g_star = frf.g.star();
    let f_star = frf.f.star();
    let ggs_inv = frf
        .g
        .mul(&g_star)
        .inverse()
        .expect("G G* is invertible for a full row rank G");
    let fsf_inv = f_star
        .mul(&frf.f)
        .inverse()
        .expect("F* F is invertible for a full column rank F");
    let x = g_star.mul(&ggs_inv).mul(&fsf_inv).mul(&f_star);
    let ax = a.mul(&x);
    let xa = x.mul(a);
    let certificate = certify(&[
        ("a x a = a", ax.mul(a) == *a),
        ("x a x = x", xa.mul(&x) == x),
        ("(a x)* = a x", ax.star() == ax),
        ("(x a)* = x a", xa.star() == xa),
    ]);
    GenInverse { kind: InverseKind::MoorePenrose, inverse: x, index: 1, certificate }
}

/// A (1,3)-inverse of `a`; canonically the Moore-Penrose inverse, which
/// always exists here. Any (1,3)-inverse produces the same core inverse.
pub fn one_three_inverse(a: &Matrix) -> GenInverse {
    let x = moore_penrose(a).inverse;
    let ax = a.mul(&x);
    let certificate = certify(&[
        ("a x a = a", ax.mul(a) == *a),
        ("(a x)* = a x", ax.star() == ax),
    ]);
    GenInverse { kind: InverseKind::OneThree, inverse: x, index: 1, certificate }
}

/// Core inverse `a^# a a^{(1,3)}`; exists iff the group inverse does (the
/// (1,3) part always exists over this field).
///
/// With `a = FG` and the Moore-Penrose inverse as the (1,3)-inverse, the
/// composite collapses exactly: `a^# a = F (GF)^-1 G` and
/// `G a^+ = (F* F)^-1 F*`, so `x = F (GF)^-1 (F* F)^-1 F*` from a single
/// factorization.
pub fn core_inverse(a: &Matrix) -> Result<GenInverse, GenInvError> {
    if !a.is_square() {
        return Err(GenInvError::NotSquare);
    }
    let frf = a.full_rank_factorize();
    let gf_inv = frf.g.mul(&frf.f).inverse().ok_or(GenInvError::NoGroupInverse)?;
    let f_star = frf.f.star();
    let fsf_inv = f_star
        .mul(&frf.f)
        .inverse()
        .expect("F* F is invertible for a full column rank F");
    let x = frf.f.mul(&gf_inv).mul(&fsf_inv).mul(&f_star);
    let certificate = core_certificate(a, &x);
    Ok(GenInverse { kind: InverseKind::Core, inverse: x, index: 1, certificate })
}

fn core_certificate(a: &Matrix, x: &Matrix) -> Vec<String> {
    let ax = a.mul(x);
    certify(&[
        ("x a^2 = a", x.mul(a).mul(a) == *a),
        ("a x^2 = x", ax.mul(x) == *x),
        ("(a x)* = a x", ax.star() == ax),
        ("a x a = a", ax.mul(a) == *a),
        ("x a x = x", x.mul(a).mul(x) == *x),
    ])
}

/// `a^pi = 1 - a a^D` and friends.
pub fn spectral_idempotent(a: &Matrix) -> Result<SpectralData, GenInvError> {
    let drazin = drazin_inverse(a)?;
    let aa_d = a.mul(&drazin.inverse);
    let a_pi = &Matrix::identity(a.rows()) - &aa_d;
    Ok(SpectralData { a_pi, aa_d, index: drazin.index })
}

/// EP test: index at most 1 and `A A^+ = A^+ A`. For EP matrices the core
/// and group inverses coincide, which is asserted as a consistency check.
pub fn is_ep(a: &Matrix) -> bool {
    assert!(a.is_square(), "is_ep requires a square matrix");
    if index(a) > 1 {
        return false;
    }
    let mp = moore_penrose(a);
    let ep = a.mul(&mp.inverse) == mp.inverse.mul(a);
    if ep {
        let core = core_inverse(a).expect("index <= 1");
        let group = group_inverse(a).expect("index <= 1");
        assert_eq!(
            core.inverse, group.inverse,
            "EP consistency: core inverse must equal group inverse"
        );
    }
    ep
}

fn check_triangular(p: &Matrix, x: &Matrix) -> Result<Matrix, GenInvError> {
    if !p.is_square() || !x.is_square() || p.rows() != x.rows() {
        return Err(GenInvError::NotTriangular(
            "p and x must be square with matching dimensions".into(),
        ));
    }
    if !p.is_projection() {
        return Err(GenInvError::NotTriangular("p is not a projection".into()));
    }
    let q = &Matrix::identity(p.rows()) - p;
    if !p.mul(x).mul(&q).is_zero() {
        return Err(GenInvError::NotTriangular("p x (1-p) != 0".into()));
    }
    Ok(q)
}

/// Group inverse of a matrix that is lower triangular with respect to a
/// projection `p`, assembled corner by corner:
/// `x^# = a^# + z + d^#` with `a = pxp`, `b = (1-p)xp`, `d = (1-p)x(1-p)` and
/// `z = (d^#)^2 b a^pi + d^pi b (a^#)^2 - d^# b a^#`.
///
/// Requires `a` group invertible; succeeds iff `d` is group invertible and
/// `d^pi b a^pi = 0`, in which case the result equals `group_inverse(x)`
/// (asserted). When the hypothesis fails, `x` has no group inverse, which is
/// cross-checked.
pub fn group_inverse_triangular(p: &Matrix, x: &Matrix) -> Result<GenInverse, GenInvError> {
    let q = check_triangular(p, x)?;
    let a = p.mul(x).mul(p);
    let b = q.mul(x).mul(p);
    let d = q.mul(x).mul(&q);
    let a_gi = group_inverse(&a)
        .map_err(|_| GenInvError::HypothesisFailed("p x p has no group inverse".into()))?;
    let identity = Matrix::identity(x.rows());
    let a_pi = &identity - &a.mul(&a_gi.inverse);
    let d_gi = match group_inverse(&d) {
        Ok(g) => g,
        Err(_) => {
            assert!(
                group_inverse(x).is_err(),
                "d has no group inverse, so x must not have one either"
            );
            return Err(GenInvError::HypothesisFailed(
                "(1-p) x (1-p) has no group inverse".into(),
            ));
        }
    };
    let d_pi = &identity - &d.mul(&d_gi.inverse);
    if !d_pi.mul(&b).mul(&a_pi).is_zero() {
        assert!(
            group_inverse(x).is_err(),
            "d^pi b a^pi != 0, so x must not have a group inverse"
        );
        return Err(GenInvError::HypothesisFailed("d^pi b a^pi != 0".into()));
    }
    let ag = &a_gi.inverse;
    let dg = &d_gi.inverse;
    let term1 = &(dg * dg) * &(&b * &a_pi);
    let term2 = &(&d_pi * &b) * &(ag * ag);
    let term3 = dg * &(&b * ag);
    let z = &(&term1 + &term2) - &term3;
    let assembled = &(ag + &z) + dg;
    let general = group_inverse(x).expect("hypotheses hold, so x has a group inverse");
    assert_eq!(
        assembled, general.inverse,
        "triangular assembly must match the general group inverse"
    );
    let certificate = certify(&[
        ("x a^2 = a", assembled.mul(x).mul(x) == *x),
        ("a x^2 = x", x.mul(&assembled).mul(&assembled) == assembled),
        ("a x = x a", x.mul(&assembled) == assembled.mul(x)),
    ]);
    Ok(GenInverse { kind: InverseKind::Group, inverse: assembled, index: 1, certificate })
}

/// Core inverse of a matrix that is lower triangular with respect to a
/// projection `p`, built from the corner core inverses: with
/// `x = (pap)^co + (ap^pi)^co - (ap^pi)^co (p^pi a p) (pap)^co`
/// the core inverse is `a^# a x`. Requires `pap` and `ap^pi` core invertible
/// and `(ap^pi)^pi p^pi a p = 0`; asserts `p a^co p^pi = 0` and agreement
/// with `core_inverse(a)`.
pub fn core_inverse_triangular(p: &Matrix, a: &Matrix) -> Result<GenInverse, GenInvError> {
    let q = check_triangular(p, a)?;
    let pap = p.mul(a).mul(p);
    let apq = a.mul(&q);
    let pap_core = core_inverse(&pap)
        .map_err(|_| GenInvError::HypothesisFailed("p a p has no core inverse".into()))?;
    let apq_core = core_inverse(&apq)
        .map_err(|_| GenInvError::HypothesisFailed("a p^pi has no core inverse".into()))?;
    let apq_gi = group_inverse(&apq).expect("core invertible implies group invertible");
    let apq_pi = &Matrix::identity(a.rows()) - &apq.mul(&apq_gi.inverse);
    let qap = q.mul(a).mul(p);
    if !apq_pi.mul(&qap).is_zero() {
        return Err(GenInvError::HypothesisFailed("(a p^pi)^pi p^pi a p != 0".into()));
    }
    let x = &(&pap_core.inverse + &apq_core.inverse)
        - &apq_core.inverse.mul(&qap).mul(&pap_core.inverse);
    let a_gi = group_inverse(a).expect("triangular hypotheses imply a has a group inverse");
    let w = a_gi.inverse.mul(a).mul(&x);
    assert!(
        p.mul(&w).mul(&q).is_zero(),
        "core inverse of a p-triangular matrix must be p-triangular"
    );
    let general = core_inverse(a).expect("hypotheses hold, so a has a core inverse");
    assert_eq!(
        w, general.inverse,
        "triangular construction must match the general core inverse"
    );
    let certificate = core_certificate(a, &w);
    Ok(GenInverse { kind: InverseKind::Core, inverse: w, index: 1, certificate })
}

/// Core inverse of `a + b` for EP `a`, via the triangular construction
/// relative to the projection `p = a a^#`. Hypotheses, in order: `a` EP,
/// `b` core invertible, `a b a^pi = 0`, `a (1 + a^# b)` core invertible,
/// `b^pi a^pi b = 0`. Asserts `a (a+b)^co a^pi = 0` and agreement with
/// `core_inverse(a + b)`.
pub fn core_inverse_ep_sum(a: &Matrix, b: &Matrix) -> Result<GenInverse, GenInvError> {
    if !a.is_square() || !b.is_square() {
        return Err(GenInvError::NotSquare);
    }
    if a.rows() != b.rows() {
        return Err(GenInvError::HypothesisFailed("a and b must have equal dimensions".into()));
    }
    if !is_ep(a) {
        return Err(GenInvError::HypothesisFailed("a is EP".into()));
    }
    let b_gi = group_inverse(b)
        .map_err(|_| GenInvError::HypothesisFailed("b has core inverse".into()))?;
    let a_gi = group_inverse(a).expect("EP implies group invertible");
    let identity = Matrix::identity(a.rows());
    let p = a.mul(&a_gi.inverse);
    let a_pi = &identity - &p;
    if !a.mul(b).mul(&a_pi).is_zero() {
        return Err(GenInvError::HypothesisFailed("a b a^pi = 0".into()));
    }
    let w = a.mul(&(&identity + &a_gi.inverse.mul(b)));
    if index(&w) > 1 {
        return Err(GenInvError::HypothesisFailed(
            "a (1 + a^# b) has core inverse".into(),
        ));
    }
    let b_pi = &identity - &b.mul(&b_gi.inverse);
    if !b_pi.mul(&a_pi).mul(b).is_zero() {
        return Err(GenInvError::HypothesisFailed("b^pi a^pi b = 0".into()));
    }
    // a is EP, so p = a a^# is a projection and a + b is p-triangular.
    let sum = a + b;
    let result = core_inverse_triangular(&p, &sum)
        .expect("the triangular construction succeeds under these hypotheses");
    assert!(
        a.mul(&result.inverse).mul(&a_pi).is_zero(),
        "a (a+b)^co a^pi must vanish"
    );
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Gr;

    fn ms(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
    }

    fn nilpotent2() -> Matrix {
        Matrix::from_int_rows(&[&[0, 1], &[0, 0]])
    }

    #[test]
    fn group_inverse_of_identity() {
        let g = group_inverse(&Matrix::identity(3)).unwrap();
        assert_eq!(g.inverse, Matrix::identity(3));
        assert_eq!(g.index, 1);
        assert_eq!(g.certificate.len(), 3);
    }

    #[test]
    fn group_inverse_rejects_nilpotent() {
        assert_eq!(group_inverse(&nilpotent2()), Err(GenInvError::NoGroupInverse));
    }

    #[test]
    fn group_inverse_of_idempotent_is_itself() {
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        assert_eq!(group_inverse(&a).unwrap().inverse, a);
    }

    #[test]
    fn group_inverse_diagonal() {
        let a = Matrix::from_int_rows(&[&[2, 0], &[0, 0]]);
        assert_eq!(group_inverse(&a).unwrap().inverse, ms(&[&["1/2", "0"], &["0", "0"]]));
    }

    #[test]
    fn drazin_of_nilpotent_is_zero() {
        let d = drazin_inverse(&nilpotent2()).unwrap();
        assert!(d.inverse.is_zero());
        assert_eq!(d.index, 2);
    }

    #[test]
    fn drazin_of_diagonal() {
        let d = drazin_inverse(&Matrix::from_int_rows(&[&[2, 0], &[0, 0]])).unwrap();
        assert_eq!(d.inverse, ms(&[&["1/2", "0"], &["0", "0"]]));
        assert_eq!(d.index, 1);
    }

    #[test]
    fn drazin_of_jordan_block_has_full_index() {
        let j = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let d = drazin_inverse(&j).unwrap();
        assert!(d.inverse.is_zero());
        assert_eq!(d.index, 3);
    }

    #[test]
    fn drazin_of_invertible_is_inverse_with_index_one() {
        let a = ms(&[&["1", "i"], &["0", "2"]]);
        let d = drazin_inverse(&a).unwrap();
        assert_eq!(d.index, 1);
        assert_eq!(d.inverse, a.inverse().unwrap());
    }

    #[test]
    fn moore_penrose_of_zero_and_diag() {
        assert!(moore_penrose(&Matrix::zeros(2, 3)).inverse.is_zero());
        assert_eq!(moore_penrose(&Matrix::zeros(2, 3)).inverse.rows(), 3);
        let d = Matrix::from_int_rows(&[&[2, 0], &[0, 0]]);
        assert_eq!(moore_penrose(&d).inverse, ms(&[&["1/2", "0"], &["0", "0"]]));
    }

    #[test]
    fn moore_penrose_of_rank_one_idempotent() {
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let expected = ms(&[&["1/2", "0"], &["1/2", "0"]]);
        // Oracle first: the frozen value satisfies all four Penrose equations.
        let ax = a.mul(&expected);
        let xa = expected.mul(&a);
        assert_eq!(ax.mul(&a), a);
        assert_eq!(xa.mul(&expected), expected);
        assert_eq!(ax.star(), ax);
        assert_eq!(xa.star(), xa);
        assert_eq!(moore_penrose(&a).inverse, expected);
    }

    #[test]
    fn one_three_inverse_examples() {
        assert_eq!(one_three_inverse(&Matrix::identity(2)).inverse, Matrix::identity(2));
        assert!(one_three_inverse(&Matrix::zeros(2, 2)).inverse.is_zero());
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let x = one_three_inverse(&a);
        assert_eq!(x.inverse, ms(&[&["1/2", "0"], &["1/2", "0"]]));
        assert_eq!(x.certificate, vec!["a x a = a", "(a x)* = a x"]);
    }

    #[test]
    fn core_inverse_examples() {
        assert_eq!(core_inverse(&Matrix::identity(2)).unwrap().inverse, Matrix::identity(2));
        assert_eq!(core_inverse(&nilpotent2()), Err(GenInvError::NoGroupInverse));
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let expected = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        // Oracle first: xa^2 = a, ax^2 = x, (ax)* = ax for the frozen pair.
        let ax = a.mul(&expected);
        assert_eq!(expected.mul(&a).mul(&a), a);
        assert_eq!(ax.mul(&expected), expected);
        assert_eq!(ax.star(), ax);
        assert_eq!(core_inverse(&a).unwrap().inverse, expected);
        let d = Matrix::from_int_rows(&[&[2, 0], &[0, 0]]);
        assert_eq!(core_inverse(&d).unwrap().inverse, ms(&[&["1/2", "0"], &["0", "0"]]));
    }

    #[test]
    fn spectral_idempotent_examples() {
        let invertible = ms(&[&["1", "i"], &["0", "2"]]);
        assert!(spectral_idempotent(&invertible).unwrap().a_pi.is_zero());
        let nil = nilpotent2();
        assert_eq!(spectral_idempotent(&nil).unwrap().a_pi, Matrix::identity(2));
        let d = Matrix::from_int_rows(&[&[2, 0], &[0, 0]]);
        let data = spectral_idempotent(&d).unwrap();
        assert_eq!(data.a_pi, Matrix::from_int_rows(&[&[0, 0], &[0, 1]]));
        assert_eq!(data.a_pi.mul(&d), d.mul(&data.a_pi));
        assert!(data.a_pi.is_idempotent());
    }

    #[test]
    fn spectral_idempotent_invariants_on_random_matrices() {
        use crate::theorems::generate::{random_matrix, SeededRng};
        let mut rng = SeededRng::new(41);
        for _ in 0..40 {
            let n = 1 + (rng.next_u64() % 5) as usize;
            let a = random_matrix(n, n, &mut rng);
            let data = spectral_idempotent(&a).unwrap();
            assert_eq!(data.a_pi, &Matrix::identity(n) - &data.aa_d);
            assert!(data.a_pi.is_idempotent());
            assert_eq!(data.a_pi.mul(&a), a.mul(&data.a_pi));
            assert_eq!(data.index, index(&a));
        }
    }

    #[test]
    fn is_ep_examples() {
        assert!(is_ep(&Matrix::from_int_rows(&[&[1, 0], &[0, 0]])));
        assert!(is_ep(&ms(&[&["1", "i"], &["0", "2"]]))); // invertible => EP
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        assert!(!is_ep(&a));
        // Derived check: core and group inverses differ for this one.
        assert_ne!(
            core_inverse(&a).unwrap().inverse,
            group_inverse(&a).unwrap().inverse
        );
        assert!(!is_ep(&nilpotent2()));
        assert!(is_ep(&Matrix::zeros(3, 3)));
    }

    #[test]
    fn ep_is_star_symmetric() {
        for a in [
            Matrix::from_int_rows(&[&[1, 1], &[0, 0]]),
            ms(&[&["1", "i"], &["0", "2"]]),
            Matrix::from_int_rows(&[&[1, 0], &[0, 0]]),
            nilpotent2(),
        ] {
            assert_eq!(is_ep(&a), is_ep(&a.star()));
        }
    }

    #[test]
    fn theorem_1_1_projection_route() {
        // For core invertible A: p = 1 - A A^(1,3) is a projection, pA = 0,
        // and A + p is invertible. For index >= 2 the sum is singular.
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let x = one_three_inverse(&a).inverse;
        let p = &Matrix::identity(2) - &a.mul(&x);
        assert!(p.is_projection());
        assert!(p.mul(&a).is_zero());
        assert!((&a + &p).inverse().is_some());

        let nil = nilpotent2();
        let x = one_three_inverse(&nil).inverse;
        let p = &Matrix::identity(2) - &nil.mul(&x);
        assert!(p.is_projection());
        assert!((&nil + &p).inverse().is_none());
    }

    #[test]
    fn theorem_1_1_row_space_route() {
        // For core invertible A, some S solves S (A* A) = A.
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let s = a.star().mul(&a).solve_right(&a).expect("Ra = Ra*a");
        assert_eq!(s.mul(&a.star().mul(&a)), a);
    }

    #[test]
    fn drazin_matches_inner_inverse_oracle() {
        // A^D = A^k X A^k for any inner inverse X of A^{2k+1}.
        for a in [
            Matrix::from_int_rows(&[&[2, 1], &[0, 0]]),
            Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
            ms(&[&["1", "i"], &["0", "2"]]),
            Matrix::from_int_rows(&[&[1, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
        ] {
            let d = drazin_inverse(&a).unwrap();
            let k = d.index;
            let x = moore_penrose(&a.pow(2 * k + 1)).inverse;
            assert_eq!(a.pow(k).mul(&x).mul(&a.pow(k)), d.inverse);
        }
    }

    #[test]
    fn lemma_2_1_identity_holds() {
        // (a p^pi)(a p^pi)^# = (a a^#) p^pi for idempotent p, group
        // invertible a with p a p^pi = 0 and a p^pi group invertible.
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let a = Matrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        let q = &Matrix::identity(2) - &p;
        assert!(p.mul(&a).mul(&q).is_zero());
        let apq = a.mul(&q);
        let lhs = apq.mul(&group_inverse(&apq).unwrap().inverse);
        let rhs = a.mul(&group_inverse(&a).unwrap().inverse).mul(&q);
        assert_eq!(lhs, rhs);

        // p = 1: both sides vanish.
        let p = Matrix::identity(2);
        let q = &Matrix::identity(2) - &p;
        let apq = a.mul(&q);
        let lhs = apq.mul(&group_inverse(&apq).unwrap().inverse);
        assert!(lhs.is_zero());
        assert!(a.mul(&group_inverse(&a).unwrap().inverse).mul(&q).is_zero());
    }

    #[test]
    fn triangular_group_inverse_diagonal_case() {
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let x = Matrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        let got = group_inverse_triangular(&p, &x).unwrap();
        assert_eq!(got.inverse, ms(&[&["1/2", "0"], &["0", "1/3"]]));
    }

    #[test]
    fn triangular_group_inverse_reduces_when_p_is_identity() {
        let x = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let got = group_inverse_triangular(&Matrix::identity(2), &x).unwrap();
        assert_eq!(got.inverse, group_inverse(&x).unwrap().inverse);
    }

    #[test]
    fn triangular_group_inverse_matches_oracle() {
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let x = Matrix::from_int_rows(&[&[1, 0], &[1, 1]]);
        let got = group_inverse_triangular(&p, &x).unwrap();
        assert_eq!(got.inverse, group_inverse(&x).unwrap().inverse);
        assert_eq!(got.inverse, Matrix::from_int_rows(&[&[1, 0], &[-1, 1]]));
    }

    #[test]
    fn triangular_group_inverse_rejects_upper_corner() {
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let x = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            group_inverse_triangular(&p, &x),
            Err(GenInvError::NotTriangular(_))
        ));
    }

    #[test]
    fn triangular_group_inverse_reports_failed_hypothesis() {
        let p = Matrix::diag(&[Gr::one(), Gr::zero(), Gr::zero()]);
        // In p-coordinates the d corner is a 2x2 nilpotent, so the d
        // hypothesis fails and x itself has no group inverse.
        let x = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[1, 0, 0]]);
        let err = group_inverse_triangular(&p, &x).unwrap_err();
        assert!(matches!(err, GenInvError::HypothesisFailed(_)));
        assert!(group_inverse(&x).is_err());
    }

    #[test]
    fn triangular_core_inverse_examples() {
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let a = Matrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        let got = core_inverse_triangular(&p, &a).unwrap();
        assert_eq!(got.inverse, ms(&[&["1/2", "0"], &["0", "1/3"]]));

        let a = Matrix::from_int_rows(&[&[1, 0], &[1, 1]]);
        let got = core_inverse_triangular(&p, &a).unwrap();
        assert_eq!(got.inverse, core_inverse(&a).unwrap().inverse);

        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        let got = core_inverse_triangular(&Matrix::identity(2), &a).unwrap();
        assert_eq!(got.inverse, core_inverse(&a).unwrap().inverse);
    }

    #[test]
    fn triangular_core_inverse_reports_zero_condition() {
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let a = Matrix::from_int_rows(&[&[1, 0], &[1, 0]]);
        let err = core_inverse_triangular(&p, &a).unwrap_err();
        assert_eq!(
            err,
            GenInvError::HypothesisFailed("(a p^pi)^pi p^pi a p != 0".into())
        );
    }

    #[test]
    fn ep_sum_examples() {
        let a = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let b = Matrix::from_int_rows(&[&[0, 0], &[0, 1]]);
        assert_eq!(core_inverse_ep_sum(&a, &b).unwrap().inverse, Matrix::identity(2));

        let id = Matrix::identity(2);
        let half = ms(&[&["1/2", "0"], &["0", "1/2"]]);
        assert_eq!(core_inverse_ep_sum(&id, &id).unwrap().inverse, half);

        let a = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let b = Matrix::from_int_rows(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, 0]]);
        let expected = ms(&[&["1", "0", "0"], &["0", "1/2", "0"], &["0", "0", "0"]]);
        assert_eq!(core_inverse_ep_sum(&a, &b).unwrap().inverse, expected);
        assert_eq!(
            core_inverse_ep_sum(&a, &b).unwrap().inverse,
            core_inverse(&(&a + &b)).unwrap().inverse
        );
    }

    #[test]
    fn ep_sum_reports_first_failed_hypothesis() {
        let nil = nilpotent2();
        let err = core_inverse_ep_sum(&nil, &Matrix::identity(2)).unwrap_err();
        assert_eq!(err, GenInvError::HypothesisFailed("a is EP".into()));
    }

    #[test]
    fn uniqueness_across_routes() {
        // Core inverse via a^# a a^+ and via the triangular construction
        // agree; similarly the group inverse via the z-formula.
        let p = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        for x in [
            Matrix::from_int_rows(&[&[1, 0], &[1, 1]]),
            Matrix::from_int_rows(&[&[3, 0], &[5, 2]]),
            Matrix::from_int_rows(&[&[1, 0], &[0, 0]]),
        ] {
            let tri = core_inverse_triangular(&p, &x).unwrap();
            assert_eq!(tri.inverse, core_inverse(&x).unwrap().inverse);
            let tri = group_inverse_triangular(&p, &x).unwrap();
            assert_eq!(tri.inverse, group_inverse(&x).unwrap().inverse);
        }
    }

    #[test]
    fn certificates_are_fully_populated() {
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        assert_eq!(group_inverse(&a).unwrap().certificate.len(), 3);
        assert_eq!(drazin_inverse(&a).unwrap().certificate.len(), 3);
        assert_eq!(moore_penrose(&a).certificate.len(), 4);
        assert_eq!(one_three_inverse(&a).certificate.len(), 2);
        assert_eq!(core_inverse(&a).unwrap().certificate.len(), 5);
    }
}
