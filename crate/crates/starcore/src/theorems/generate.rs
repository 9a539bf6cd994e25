//! Seeded, deterministic instance generators.
//!
//! Every family resamples until the target checker's hypotheses pass, with a
//! bounded retry count, so emitted instances are always hypothesis-satisfying.
//! Determinism contract: the same seed produces bit-identical instances, and
//! suite trials draw from independent streams keyed by (seed, theorem, trial)
//! so results do not depend on scheduling.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geninv;
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Rational};

use super::{check, LabError, TheoremId, TheoremReport, Verdict};

/// Retry cap per emitted instance.
pub const RETRY_LIMIT: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("instance generation exhausted after {limit} attempts for {target}")]
    Exhausted { target: String, limit: usize },
}

/// SplitMix64; tiny, portable, and stable across platforms and releases,
/// which keeps the byte-identical-output contract independent of any
/// external RNG crate.
#[derive(Debug, Clone)]
pub struct SeededRng {
    state: u64,
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { state: mix64(seed ^ 0x9e37_79b9_7f4a_7c15) }
    }

    /// Independent stream for one suite trial.
    pub fn for_trial(seed: u64, stream: u64, trial: u64) -> Self {
        let key = (stream << 48) ^ trial ^ 0xd1b5_4a32_d192_ed03;
        SeededRng { state: mix64(seed).wrapping_add(mix64(key)) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        mix64(self.state)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

fn small_rational(rng: &mut SeededRng) -> Rational {
    Rational::new(rng.range(-4, 4).into(), rng.range(1, 3).into())
}

/// Small scalar, imaginary part present about a third of the time.
pub fn random_scalar(rng: &mut SeededRng) -> GaussianRational {
    let re = small_rational(rng);
    let im = if rng.chance(1, 3) { small_rational(rng) } else { Rational::new(0.into(), 1.into()) };
    GaussianRational::new(re, im)
}

fn nonzero_scalar(rng: &mut SeededRng) -> GaussianRational {
    for _ in 0..64 {
        let z = random_scalar(rng);
        if !z.is_zero() {
            return z;
        }
    }
    GaussianRational::one()
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut SeededRng) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| random_scalar(rng))
}

/// Entries with numerators bounded by `num_bound` and denominators by
/// `den_bound`; imaginary parts appear about a third of the time.
pub fn random_matrix_bounded(
    rows: usize,
    cols: usize,
    num_bound: i64,
    den_bound: i64,
    rng: &mut SeededRng,
) -> Matrix {
    let part = |rng: &mut SeededRng| {
        Rational::new(rng.range(-num_bound, num_bound).into(), rng.range(1, den_bound).into())
    };
    Matrix::from_fn(rows, cols, |_, _| {
        let re = part(rng);
        let im = if rng.chance(1, 3) { part(rng) } else { Rational::new(0.into(), 1.into()) };
        GaussianRational::new(re, im)
    })
}

pub fn random_invertible(n: usize, rng: &mut SeededRng) -> Option<Matrix> {
    for _ in 0..40 {
        let m = random_matrix(n, n, rng);
        if m.inverse().is_some() {
            return Some(m);
        }
    }
    None
}

/// `J diag(K, 0) J^-1` with invertible `K` of size `rank`: a random matrix
/// of index at most 1 (hence group and core invertible).
pub fn random_index_le1(n: usize, rank: usize, rng: &mut SeededRng) -> Option<Matrix> {
    assert!(rank <= n);
    let j = random_invertible(n, rng)?;
    let k = random_invertible(rank, rng)?;
    let mut core = Matrix::zeros(n, n);
    for i in 0..rank {
        for jj in 0..rank {
            core[(i, jj)] = k[(i, jj)].clone();
        }
    }
    Some(j.mul(&core).mul(&j.inverse().expect("invertible by construction")))
}

// Pythagorean triples a^2 + b^2 = c^2; both the real rotation blocks
// [[a, -b], [b, a]] / c and the unit phases (a + b i) / c are exactly
// unitary over the Gaussian rationals.
const TRIPLES: [(i64, i64, i64); 6] =
    [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (9, 40, 41)];

fn unit_phase(rng: &mut SeededRng) -> GaussianRational {
    match rng.below(4) {
        0 => -GaussianRational::one(),
        1 => GaussianRational::i(),
        2 => -GaussianRational::i(),
        _ => {
            let (a, b, c) = TRIPLES[rng.below(TRIPLES.len() as u64) as usize];
            let (a, b) = if rng.chance(1, 2) { (a, b) } else { (a, -b) };
            GaussianRational::new(Rational::new(a.into(), c.into()), Rational::new(b.into(), c.into()))
        }
    }
}

/// Exact unitary built from Pythagorean-triple rotations, unit phases and
/// row swaps; `U* U = I` holds exactly.
pub fn rational_unitary(n: usize, rng: &mut SeededRng) -> Matrix {
    let mut u = Matrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..2 * n + 2 {
        match rng.below(3) {
            0 if n >= 2 => {
                let i = rng.below(n as u64) as usize;
                let mut j = rng.below(n as u64 - 1) as usize;
                if j >= i {
                    j += 1;
                }
                let (a, b, c) = TRIPLES[rng.below(TRIPLES.len() as u64) as usize];
                let cos = GaussianRational::from_ratio(a, c);
                let sin = GaussianRational::from_ratio(b, c);
                for col in 0..n {
                    let top = u[(i, col)].clone();
                    let bottom = u[(j, col)].clone();
                    u[(i, col)] = &(&cos * &top) - &(&sin * &bottom);
                    u[(j, col)] = &(&sin * &top) + &(&cos * &bottom);
                }
            }
            1 => {
                let i = rng.below(n as u64) as usize;
                let phase = unit_phase(rng);
                for col in 0..n {
                    u[(i, col)] = &u[(i, col)] * &phase;
                }
            }
            _ => {
                let i = rng.below(n as u64) as usize;
                let j = rng.below(n as u64) as usize;
                if i != j {
                    for col in 0..n {
                        let tmp = u[(i, col)].clone();
                        u[(i, col)] = u[(j, col)].clone();
                        u[(j, col)] = tmp;
                    }
                }
            }
        }
    }
    u
}

fn pad_top_left(m: &Matrix, rows: usize, cols: usize) -> Matrix {
    assert!(m.rows() <= rows && m.cols() <= cols);
    Matrix::from_fn(rows, cols, |i, j| {
        if i < m.rows() && j < m.cols() {
            m[(i, j)].clone()
        } else {
            GaussianRational::zero()
        }
    })
}

fn diag_embed(top: &Matrix, n: usize) -> Matrix {
    pad_top_left(top, n, n)
}

/// `Q S Q*` with `Q` of full column rank `rank` and `S` invertible: an EP
/// matrix of exactly that rank. `rank = 0` yields the zero matrix.
pub fn gen_ep(n: usize, rank: usize, rng: &mut SeededRng) -> Option<Matrix> {
    assert!(rank <= n);
    let mut q = None;
    for _ in 0..40 {
        let cand = random_matrix(n, rank, rng);
        if cand.rank() == rank {
            q = Some(cand);
            break;
        }
    }
    let q = q?;
    let s = random_invertible(rank, rng)?;
    Some(q.mul(&s).mul(&q.star()))
}

/// Commuting EP pair `a = U Da U*`, `b = U Db U*` with diagonal `Da`, `Db`.
/// With `matched`, diagonal values agree wherever both are nonzero, so
/// `a gi(a) b = b gi(b) a` holds by construction.
pub fn gen_commuting_ep_pair(n: usize, matched: bool, rng: &mut SeededRng) -> (Matrix, Matrix) {
    let u = rational_unitary(n, rng);
    let mut da = Vec::with_capacity(n);
    let mut db = Vec::with_capacity(n);
    for _ in 0..n {
        if matched {
            match rng.below(4) {
                0 => {
                    da.push(GaussianRational::zero());
                    db.push(GaussianRational::zero());
                }
                1 => {
                    da.push(nonzero_scalar(rng));
                    db.push(GaussianRational::zero());
                }
                2 => {
                    da.push(GaussianRational::zero());
                    db.push(nonzero_scalar(rng));
                }
                _ => {
                    let v = nonzero_scalar(rng);
                    da.push(v.clone());
                    db.push(v);
                }
            }
        } else {
            da.push(if rng.chance(1, 3) { GaussianRational::zero() } else { nonzero_scalar(rng) });
            db.push(if rng.chance(1, 3) { GaussianRational::zero() } else { nonzero_scalar(rng) });
        }
    }
    let a = u.mul(&Matrix::diag(&da)).mul(&u.star());
    let b = u.mul(&Matrix::diag(&db)).mul(&u.star());
    (a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularMode {
    /// Corners chosen so the full matrix is group invertible.
    GroupReady,
    /// Corners chosen so the core-inverse corner construction applies
    /// (`(a p^pi)^pi p^pi a p = 0`).
    CoreReady,
    /// Free `d` and `b` corners; sides of the group-inverse equivalence may
    /// come out false-false.
    Free,
}

/// A `p`-lower-triangular instance `(p, x)` in the coordinates of a random
/// basis: unitary (so `p` is a projection) or merely invertible (so `p` is
/// just an idempotent).
pub fn gen_triangular(
    n: usize,
    mode: TriangularMode,
    unitary: bool,
    rng: &mut SeededRng,
) -> Option<(Matrix, Matrix)> {
    let r = rng.below(n as u64 + 1) as usize;
    let s = n - r;
    let (basis, basis_inv) = if unitary {
        let u = rational_unitary(n, rng);
        let ustar = u.star();
        (u, ustar)
    } else {
        let j = random_invertible(n, rng)?;
        let jinv = j.inverse().expect("invertible");
        (j, jinv)
    };
    let p = basis.mul(&diag_embed(&Matrix::identity(r), n)).mul(&basis_inv);

    let a11 = random_index_le1(r, rng.below(r as u64 + 1) as usize, rng)?;
    let (a21, a22) = match mode {
        TriangularMode::GroupReady => {
            let a22 = random_index_le1(s, rng.below(s as u64 + 1) as usize, rng)?;
            let w = random_matrix(s, r, rng);
            let v = random_matrix(s, r, rng);
            // a22^pi a21 a11^pi = 0 because a22^pi a22 = 0 and a11 a11^pi = 0.
            let a21 = &a22.mul(&w) + &v.mul(&a11);
            (a21, a22)
        }
        TriangularMode::CoreReady => {
            let a22 = random_index_le1(s, rng.below(s as u64 + 1) as usize, rng)?;
            let w = random_matrix(s, r, rng);
            let a21 = a22.mul(&w);
            (a21, a22)
        }
        TriangularMode::Free => (random_matrix(s, r, rng), random_matrix(s, s, rng)),
    };
    let t = Matrix::block_2x2(&a11, &Matrix::zeros(r, s), &a21, &a22);
    let x = basis.mul(&t).mul(&basis_inv);
    Some((p, x))
}

/// EP `a` plus a `p`-lower-triangular `b` (relative to `p = a a^#`), so
/// `a b a^pi = 0` holds by construction. One mode cancels the leading
/// corner of `a + b` to a nilpotent, exercising false-false equivalences.
fn gen_ep_sum_pair(n: usize, rng: &mut SeededRng) -> Option<(Matrix, Matrix)> {
    let r = rng.below(n as u64 + 1) as usize;
    let s = n - r;
    let u = rational_unitary(n, rng);
    let a1 = random_invertible(r, rng)?;
    let a = u.mul(&diag_embed(&a1, n)).mul(&u.star());

    let b1 = match rng.below(3) {
        0 => random_matrix(r, r, rng),
        1 => {
            // a1 + b1 strictly upper triangular: the aa^# corner of a + b
            // becomes nilpotent.
            let mut nil = Matrix::zeros(r, r);
            for i in 0..r {
                for j in i + 1..r {
                    nil[(i, j)] = random_scalar(rng);
                }
            }
            &nil - &a1
        }
        _ => random_invertible(r, rng)?,
    };
    let (b3, b4) = if rng.chance(2, 3) {
        let b4 = random_index_le1(s, rng.below(s as u64 + 1) as usize, rng)?;
        let w = random_matrix(s, r, rng);
        let v = random_matrix(s, r, rng);
        (&b4.mul(&w) + &v.mul(&b1), b4)
    } else {
        (random_matrix(s, r, rng), random_invertible(s, rng)?)
    };
    let tb = Matrix::block_2x2(&b1, &Matrix::zeros(r, s), &b3, &b4);
    let b = u.mul(&tb).mul(&u.star());
    Some((a, b))
}

fn gen_lower_block(size: usize, rng: &mut SeededRng) -> Option<(Matrix, Matrix, Matrix)> {
    let m = 1 + rng.below(size as u64) as usize;
    let n = 1 + rng.below(size as u64) as usize;
    let a = random_index_le1(m, rng.below(m as u64 + 1) as usize, rng)?;
    let d = random_index_le1(n, rng.below(n as u64 + 1) as usize, rng)?;
    // D^pi C = D^pi D W = 0.
    let c = d.mul(&random_matrix(n, m, rng));
    Some((a, c, d))
}

/// Anticommuting EP pair built from 2x2 cells `diag(v, -v)` and
/// antidiagonal `[[0, w], [z, 0]]`, conjugated by one unitary.
fn gen_anticommuting_pair(n: usize, rng: &mut SeededRng) -> (Matrix, Matrix) {
    let mut a = Matrix::zeros(n, n);
    let mut b = Matrix::zeros(n, n);
    let mut i = 0;
    while i + 1 < n {
        let v = if rng.chance(1, 4) { GaussianRational::zero() } else { nonzero_scalar(rng) };
        a[(i, i)] = v.clone();
        a[(i + 1, i + 1)] = -&v;
        if rng.chance(3, 4) {
            b[(i, i + 1)] = nonzero_scalar(rng);
            b[(i + 1, i)] = nonzero_scalar(rng);
        }
        i += 2;
    }
    if i < n {
        // Leftover 1x1 cell: anticommuting forces one of the two to vanish.
        if rng.chance(1, 2) {
            a[(i, i)] = nonzero_scalar(rng);
        } else {
            b[(i, i)] = nonzero_scalar(rng);
        }
    }
    let u = rational_unitary(n, rng);
    (u.mul(&a).mul(&u.star()), u.mul(&b).mul(&u.star()))
}

fn gen_scaled_pair(size: usize, rng: &mut SeededRng) -> Option<(Matrix, Matrix, GaussianRational)> {
    let n = 1 + rng.below(size as u64) as usize;
    if rng.chance(1, 2) {
        let (a, b) = gen_commuting_ep_pair(n, false, rng);
        Some((a, b, GaussianRational::one()))
    } else {
        let (a, b) = gen_anticommuting_pair(n, rng);
        Some((a, b, GaussianRational::from_int(-1)))
    }
}

/// Core block quartet with `B C` invertible (square blocks): `A = U Da U*`,
/// `E = U De U*` invertible, `B = t Bu` for a unitary `Bu`, `C = B^-1 E`,
/// `D = lambda^-1 Bu* A Bu`. All six scaled-commutation conditions then
/// hold exactly for `lambda` in `{1, -1}`.
fn gen_block_invertible(
    k: usize,
    lambda: &GaussianRational,
    rng: &mut SeededRng,
) -> Option<(Matrix, Matrix, Matrix, Matrix)> {
    let u = rational_unitary(k, rng);
    let da: Vec<GaussianRational> = (0..k)
        .map(|_| if rng.chance(1, 4) { GaussianRational::zero() } else { nonzero_scalar(rng) })
        .collect();
    let de: Vec<GaussianRational> = (0..k).map(|_| nonzero_scalar(rng)).collect();
    let a = u.mul(&Matrix::diag(&da)).mul(&u.star());
    let e = u.mul(&Matrix::diag(&de)).mul(&u.star());
    let bu = rational_unitary(k, rng);
    let t = nonzero_scalar(rng);
    let b = bu.scale(&t);
    let c = bu.star().mul(&e).scale(&t.inv().expect("nonzero"));
    // lambda is a unit in {1, -1}, so lambda^-1 = lambda.
    let d = bu.star().mul(&a).mul(&bu).scale(lambda);
    Some((a, b, c, d))
}

fn gen_block(
    size: usize,
    allow_singular: bool,
    rng: &mut SeededRng,
) -> Option<(Matrix, Matrix, Matrix, Matrix, GaussianRational)> {
    let lambda = if rng.chance(1, 2) {
        GaussianRational::one()
    } else {
        GaussianRational::from_int(-1)
    };
    let k = 1 + rng.below(size as u64) as usize;
    let (a, b, c, d) = gen_block_invertible(k, &lambda, rng)?;
    if allow_singular && rng.chance(1, 3) {
        // Padded singular-BC variant: zero tails in every block keep all
        // four pi-conditions satisfied.
        let m = k + rng.below((size - k + 1) as u64) as usize;
        let n = k + rng.below((size - k + 1) as u64) as usize;
        return Some((
            diag_embed(&a, m),
            pad_top_left(&b, m, n),
            pad_top_left(&c, n, m),
            diag_embed(&d, n),
            lambda,
        ));
    }
    Some((a, b, c, d, lambda))
}

/// One generated problem instance; field names match the checker argument
/// roles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Instance {
    Block { a: Matrix, b: Matrix, c: Matrix, d: Matrix, lambda: GaussianRational },
    ScaledPair { a: Matrix, b: Matrix, lambda: GaussianRational },
    LowerBlock { a: Matrix, c: Matrix, d: Matrix },
    Projected { p: Matrix, x: Matrix },
    Pair { a: Matrix, b: Matrix },
    Single { a: Matrix },
}

/// Dispatches an instance to its checker. Panics on a shape mismatch, which
/// cannot happen for generated instances.
pub fn run_checker(theorem: TheoremId, instance: &Instance) -> Result<TheoremReport, LabError> {
    match (theorem, instance) {
        (TheoremId::L21, Instance::Projected { p, x }) => check::check_lemma_2_1(p, x),
        (TheoremId::L22, Instance::Projected { p, x }) => check::check_lemma_2_2(p, x),
        (TheoremId::L23, Instance::Projected { p, x }) => check::check_lemma_2_3(p, x),
        (TheoremId::L24, Instance::Pair { a, b }) => check::check_lemma_2_4(a, b),
        (TheoremId::T31, Instance::Pair { a, b }) => check::check_theorem_3_1(a, b),
        (TheoremId::C32, Instance::Pair { a, b }) => check::check_corollary_3_2(a, b),
        (TheoremId::C33, Instance::Pair { a, b }) => check::check_corollary_3_3(a, b),
        (TheoremId::L41, Instance::LowerBlock { a, c, d }) => check::check_lemma_4_1(a, c, d),
        (TheoremId::L42, Instance::ScaledPair { a, b, lambda }) => {
            check::check_lemma_4_2(a, b, lambda)
        }
        (TheoremId::T43, Instance::Block { a, b, c, d, lambda }) => {
            check::check_theorem_4_3(a, b, c, d, lambda)
        }
        (TheoremId::C44, Instance::Block { a, b, c, d, lambda }) => {
            check::check_corollary_4_4(a, b, c, d, lambda)
        }
        _ => panic!("instance shape does not fit {theorem}"),
    }
}

fn candidate(theorem: TheoremId, size: usize, rng: &mut SeededRng) -> Option<Instance> {
    let n = 1 + rng.below(size as u64) as usize;
    match theorem {
        TheoremId::L21 => {
            let unitary = rng.chance(1, 2);
            let (p, x) = gen_triangular(n, TriangularMode::GroupReady, unitary, rng)?;
            Some(Instance::Projected { p, x })
        }
        TheoremId::L22 => {
            let mode =
                if rng.chance(1, 2) { TriangularMode::GroupReady } else { TriangularMode::Free };
            let (p, x) = gen_triangular(n, mode, true, rng)?;
            Some(Instance::Projected { p, x })
        }
        TheoremId::L23 => {
            let (p, x) = gen_triangular(n, TriangularMode::CoreReady, true, rng)?;
            Some(Instance::Projected { p, x })
        }
        TheoremId::L24 => {
            let (a, b) = gen_ep_sum_pair(n, rng)?;
            Some(Instance::Pair { a, b })
        }
        TheoremId::T31 | TheoremId::C33 => {
            let (a, b) = gen_commuting_ep_pair(n, false, rng);
            Some(Instance::Pair { a, b })
        }
        TheoremId::C32 => {
            let (a, b) = gen_commuting_ep_pair(n, true, rng);
            Some(Instance::Pair { a, b })
        }
        TheoremId::L41 => {
            let (a, c, d) = gen_lower_block(size, rng)?;
            Some(Instance::LowerBlock { a, c, d })
        }
        TheoremId::L42 => {
            let (a, b, lambda) = gen_scaled_pair(size, rng)?;
            Some(Instance::ScaledPair { a, b, lambda })
        }
        TheoremId::T43 => {
            let (a, b, c, d, lambda) = gen_block(size, true, rng)?;
            Some(Instance::Block { a, b, c, d, lambda })
        }
        TheoremId::C44 => {
            let (a, b, c, d, lambda) = gen_block(size, false, rng)?;
            Some(Instance::Block { a, b, c, d, lambda })
        }
    }
}

/// Generates one hypothesis-satisfying instance for `theorem` and returns it
/// with its report, resampling up to [`RETRY_LIMIT`] times.
pub fn generate_for_theorem(
    theorem: TheoremId,
    size: usize,
    rng: &mut SeededRng,
) -> Result<(Instance, TheoremReport), GenError> {
    assert!(size >= 1, "size bound must be at least 1");
    for _ in 0..RETRY_LIMIT {
        let Some(instance) = candidate(theorem, size, rng) else {
            continue;
        };
        let report = run_checker(theorem, &instance)
            .expect("generated instances always have consistent dimensions");
        if report.verdict != Verdict::HypothesisFailed {
            return Ok((instance, report));
        }
    }
    Err(GenError::Exhausted { target: theorem.to_string(), limit: RETRY_LIMIT })
}

/// The CLI-facing instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Ep,
    CommutingEpPair,
    Triangular,
    Block4x4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ep => "ep",
            Family::CommutingEpPair => "commuting-ep-pair",
            Family::Triangular => "triangular",
            Family::Block4x4 => "block-4x4",
        }
    }

    pub fn uses_rank(self) -> bool {
        matches!(self, Family::Ep | Family::Triangular)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ep" => Ok(Family::Ep),
            "commuting-ep-pair" => Ok(Family::CommutingEpPair),
            "triangular" => Ok(Family::Triangular),
            "block-4x4" => Ok(Family::Block4x4),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// Generates one family instance, resampling until the family's home
/// hypothesis check passes: `ep` instances are EP of the requested rank,
/// pairs pass the commuting-EP hypotheses, triangular instances pass the
/// triangular group-inverse hypotheses, and block quartets pass the
/// block-matrix hypotheses.
pub fn generate_family(
    family: Family,
    n: usize,
    rank: Option<usize>,
    rng: &mut SeededRng,
) -> Result<Instance, GenError> {
    let exhausted =
        || GenError::Exhausted { target: family.name().to_string(), limit: RETRY_LIMIT };
    for _ in 0..RETRY_LIMIT {
        match family {
            Family::Ep => {
                let r = rank.unwrap_or_else(|| rng.below(n as u64 + 1) as usize);
                let Some(a) = gen_ep(n, r, rng) else { continue };
                if a.rank() == r && geninv::is_ep(&a) {
                    return Ok(Instance::Single { a });
                }
            }
            Family::CommutingEpPair => {
                let (a, b) = gen_commuting_ep_pair(n, false, rng);
                let report = check::check_corollary_3_3(&a, &b).expect("square");
                if report.verdict != Verdict::HypothesisFailed {
                    return Ok(Instance::Pair { a, b });
                }
            }
            Family::Triangular => {
                let Some((p, x)) = gen_triangular_ranked(n, rank, rng) else { continue };
                let report = check::check_lemma_2_2(&p, &x).expect("square");
                if report.verdict != Verdict::HypothesisFailed {
                    return Ok(Instance::Projected { p, x });
                }
            }
            Family::Block4x4 => {
                let Some((a, b, c, d, lambda)) = gen_block(n.max(1), true, rng) else { continue };
                let report = check::check_theorem_4_3(&a, &b, &c, &d, &lambda).expect("square");
                if report.verdict != Verdict::HypothesisFailed {
                    return Ok(Instance::Block { a, b, c, d, lambda });
                }
            }
        }
    }
    Err(exhausted())
}

fn gen_triangular_ranked(
    n: usize,
    rank: Option<usize>,
    rng: &mut SeededRng,
) -> Option<(Matrix, Matrix)> {
    match rank {
        None => gen_triangular(n, TriangularMode::GroupReady, true, rng),
        Some(r) => {
            assert!(r <= n);
            let s = n - r;
            let u = rational_unitary(n, rng);
            let p = u.mul(&diag_embed(&Matrix::identity(r), n)).mul(&u.star());
            let a11 = random_index_le1(r, rng.below(r as u64 + 1) as usize, rng)?;
            let a22 = random_index_le1(s, rng.below(s as u64 + 1) as usize, rng)?;
            let w = random_matrix(s, r, rng);
            let v = random_matrix(s, r, rng);
            let a21 = &a22.mul(&w) + &v.mul(&a11);
            let t = Matrix::block_2x2(&a11, &Matrix::zeros(r, s), &a21, &a22);
            Some((p, u.mul(&t).mul(&u.star())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rng_is_deterministic() {
        let mut a = SeededRng::new(7);
        let mut b = SeededRng::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SeededRng::new(8);
        assert_ne!(a.next_u64(), c.next_u64());
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let r1: Vec<u64> = (0..4)
            .map(|t| SeededRng::for_trial(42, 3, t).next_u64())
            .collect();
        let r2: Vec<u64> = [2u64, 0, 3, 1]
            .iter()
            .map(|&t| SeededRng::for_trial(42, 3, t).next_u64())
            .collect();
        assert_eq!(r1[0], r2[1]);
        assert_eq!(r1[2], r2[0]);
        assert_eq!(r1[3], r2[2]);
        assert_eq!(r1[1], r2[3]);
    }

    #[test]
    fn unitaries_are_exactly_unitary() {
        for seed in 0..10u64 {
            let mut rng = SeededRng::new(seed);
            let n = 1 + (seed % 5) as usize;
            let u = rational_unitary(n, &mut rng);
            assert_eq!(u.star().mul(&u), Matrix::identity(n));
            assert_eq!(u.mul(&u.star()), Matrix::identity(n));
        }
    }

    #[test]
    fn ep_family_has_requested_rank() {
        let mut rng = SeededRng::new(7);
        let a = gen_ep(3, 1, &mut rng).unwrap();
        assert_eq!(a.rank(), 1);
        assert!(geninv::is_ep(&a));
        // rank 0 is the zero matrix, which is EP.
        let z = gen_ep(3, 0, &mut rng).unwrap();
        assert!(z.is_zero());
        assert!(geninv::is_ep(&z));
    }

    #[test]
    fn family_generation_is_deterministic() {
        for family in [Family::Ep, Family::CommutingEpPair, Family::Triangular, Family::Block4x4] {
            let one = generate_family(family, 3, None, &mut SeededRng::new(11)).unwrap();
            let two = generate_family(family, 3, None, &mut SeededRng::new(11)).unwrap();
            assert_eq!(one, two, "{family:?}");
        }
    }

    #[test]
    fn commuting_pair_passes_c33_hypotheses() {
        let mut rng = SeededRng::new(1);
        let (a, b) = gen_commuting_ep_pair(2, false, &mut rng);
        let report = check::check_corollary_3_3(&a, &b).unwrap();
        assert_ne!(report.verdict, Verdict::HypothesisFailed);
    }

    #[test]
    fn every_theorem_generates_passing_instances() {
        for theorem in TheoremId::ALL {
            for trial in 0..3 {
                let mut rng = SeededRng::for_trial(5, 99, trial);
                let (_, report) = generate_for_theorem(theorem, 3, &mut rng)
                    .unwrap_or_else(|e| panic!("{theorem}: {e}"));
                assert_eq!(
                    report.verdict,
                    Verdict::EquivalenceHolds,
                    "{theorem} trial {trial}: {report:?}"
                );
            }
        }
    }

    #[test]
    fn instance_serialization_is_flat() {
        let instance = Instance::Pair {
            a: Matrix::identity(1),
            b: Matrix::zeros(1, 1),
        };
        let json = serde_json::to_value(&instance).unwrap();
        assert!(json.get("a").is_some());
        assert!(json.get("b").is_some());
        let back: Instance = serde_json::from_value(json).unwrap();
        assert_eq!(back, instance);
    }
}
