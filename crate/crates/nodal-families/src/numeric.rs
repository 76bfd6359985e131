//! Independent numeric oracle: Newton search for the singular points of a
//! homogeneous quartic surface, restricted to each of the four affine
//! charts. Converged solutions are deduplicated, snapped to nearby
//! rationals and re-verified exactly when the snap succeeds.
//!
//! Runs are deterministic for a fixed seed: every Newton start derives its
//! own generator from (seed, chart, start index), so the outcome does not
//! depend on thread scheduling.

use crate::poly::MultiPoly;
use crate::scalar::{snap_to_rational, to_f64, Scalar};
use crate::singular::{
    hessian, normalize_numeric, verify_singular, NodeClass, PointCoords, Provenance,
    SingularPointRecord,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub starts_per_chart: usize,
    pub tol: f64,
    pub max_iter: usize,
    pub seed: u64,
    /// Largest denominator tried when snapping a numeric solution to exact
    /// rational coordinates.
    pub snap_denominator: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            starts_per_chart: 2000,
            tol: 1e-8,
            max_iter: 50,
            seed: 0,
            snap_denominator: 1_000_000,
        }
    }
}

/// Compiled form of a polynomial for fast repeated f64 evaluation.
struct Compiled {
    terms: Vec<(f64, [u32; 4])>,
}

impl Compiled {
    fn new(p: &MultiPoly) -> Self {
        assert_eq!(p.vars().len(), 4);
        Compiled {
            terms: p
                .terms()
                .map(|(e, c)| (to_f64(c), [e[0], e[1], e[2], e[3]]))
                .collect(),
        }
    }

    fn eval(&self, x: &[f64; 4]) -> f64 {
        let mut acc = 0.0;
        for (c, e) in &self.terms {
            let mut t = *c;
            for i in 0..4 {
                for _ in 0..e[i] {
                    t *= x[i];
                }
            }
            acc += t;
        }
        acc
    }
}

fn solve3(j: &[[f64; 3]; 3], r: &[f64; 3]) -> Option<[f64; 3]> {
    // Gaussian elimination with partial pivoting
    let mut a = [[0.0f64; 4]; 3];
    for i in 0..3 {
        for k in 0..3 {
            a[i][k] = j[i][k];
        }
        a[i][3] = r[i];
    }
    for col in 0..3 {
        let piv = (col..3).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            for k in col..4 {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    let mut x = [0.0f64; 3];
    for i in (0..3).rev() {
        let mut s = a[i][3];
        for k in i + 1..3 {
            s -= a[i][k] * x[k];
        }
        x[i] = s / a[i][i];
    }
    Some(x)
}

/// Newton search on grad F = 0 in every affine chart. Returns the
/// deduplicated records, sorted canonically; exact records first.
pub fn numeric_singular_search(f: &MultiPoly, cfg: &SearchConfig) -> Vec<SingularPointRecord> {
    assert_eq!(f.vars().len(), 4, "expects a quartic in x0..x3");
    let grads: Vec<MultiPoly> = f.gradient();
    let grads_c: Vec<Compiled> = grads.iter().map(Compiled::new).collect();
    let hess = hessian(f);
    let hess_c: Vec<Vec<Compiled>> = hess
        .iter()
        .map(|row| row.iter().map(Compiled::new).collect())
        .collect();

    let jobs: Vec<(usize, usize)> = (0..4)
        .flat_map(|chart| (0..cfg.starts_per_chart).map(move |s| (chart, s)))
        .collect();

    let run_job = |&(chart, start): &(usize, usize)| -> Option<[f64; 4]> {
        let mut rng = ChaCha8Rng::seed_from_u64(
            cfg.seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add((chart as u64) << 48)
                .wrapping_add(start as u64),
        );
        let scale = if start % 3 == 2 { 10.0 } else { 3.0 };
        let free: Vec<usize> = (0..4).filter(|&i| i != chart).collect();
        let mut x = [0.0f64; 4];
        x[chart] = 1.0;
        for &i in &free {
            x[i] = rng.gen_range(-scale..scale);
        }
        for _ in 0..cfg.max_iter {
            let g = [
                grads_c[free[0]].eval(&x),
                grads_c[free[1]].eval(&x),
                grads_c[free[2]].eval(&x),
            ];
            if g.iter().all(|v| v.abs() < 1e-13) {
                break;
            }
            let mut j = [[0.0f64; 3]; 3];
            for (r, &gi) in free.iter().enumerate() {
                for (c, &xi) in free.iter().enumerate() {
                    j[r][c] = hess_c[gi][xi].eval(&x);
                }
            }
            let step = solve3(&j, &g)?;
            for (c, &xi) in free.iter().enumerate() {
                x[xi] -= step[c];
            }
            if x.iter().any(|v| !v.is_finite() || v.abs() > 1e7) {
                return None;
            }
        }
        // converged? all four projective partials must be small
        let norm = x.iter().fold(0.0f64, |a, b| a.max(b.abs())).powi(3);
        let res = grads_c.iter().map(|g| g.eval(&x).abs()).fold(0.0, f64::max);
        if res < cfg.tol * norm.max(1.0) {
            Some(x)
        } else {
            None
        }
    };

    let raw: Vec<[f64; 4]> = match workers_from_env() {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("worker pool");
            pool.install(|| jobs.par_iter().filter_map(run_job).collect())
        }
        None => jobs.par_iter().filter_map(run_job).collect(),
    };

    // deterministic dedup: sort normalized points, merge within tol
    let mut normalized: Vec<Vec<f64>> = raw.iter().map(|x| normalize_numeric(&x[..])).collect();
    normalized.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut reps: Vec<Vec<f64>> = vec![];
    for p in normalized {
        if !reps
            .iter()
            .any(|q| q.iter().zip(&p).all(|(a, b)| (a - b).abs() < cfg.tol * 10.0))
        {
            reps.push(p);
        }
    }

    let mut out: Vec<SingularPointRecord> = vec![];
    for p in reps {
        // try to snap to a rational point and re-verify exactly
        let snapped: Option<Vec<Scalar>> = p
            .iter()
            .map(|&c| snap_to_rational(c, cfg.snap_denominator, 1e-7))
            .collect();
        if let Some(sp) = snapped {
            if sp.iter().any(|c| !c.is_zero()) {
                let exact_grad_zero = grads
                    .iter()
                    .all(|g| g.evaluate(&sp).unwrap().is_zero());
                if exact_grad_zero {
                    let mut rec = verify_singular(f, &sp);
                    rec.provenance = Provenance::Numeric;
                    out.push(rec);
                    continue;
                }
            }
        }
        // keep as numeric record with numeric rank
        let xarr = [p[0], p[1], p[2], p[3]];
        let mut hm = [[0.0f64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                hm[i][j] = hess_c[i][j].eval(&xarr);
            }
        }
        let rank = numeric_rank4(&hm, 1e-7);
        let res = grads_c.iter().map(|g| g.eval(&xarr).abs()).fold(0.0, f64::max);
        out.push(SingularPointRecord {
            point: PointCoords::Numeric(p),
            gradient_residual: res,
            hessian_rank: rank,
            classification: if rank == 3 {
                NodeClass::A1Node
            } else {
                NodeClass::HigherOrDegenerate
            },
            conjugate_pair: false,
            provenance: Provenance::Numeric,
        });
    }
    out
}

fn workers_from_env() -> Option<usize> {
    std::env::var("NODAL_FAMILIES_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Rank of a 4x4 matrix by pivoted elimination with a relative threshold.
pub fn numeric_rank4(m: &[[f64; 4]; 4], rel_tol: f64) -> usize {
    let mut a = *m;
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, &x| acc.max(x.abs()))
        .max(1e-300);
    let mut rank = 0;
    for col in 0..4 {
        let piv = (rank..4).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()));
        let Some(p) = piv else { break };
        if a[p][col].abs() <= rel_tol * scale {
            continue;
        }
        a.swap(rank, p);
        for row in 0..4 {
            if row != rank {
                let f = a[row][col] / a[rank][col];
                for k in 0..4 {
                    a[row][k] -= f * a[rank][k];
                }
            }
        }
        rank += 1;
        if rank == 4 {
            break;
        }
    }
    rank
}

/// True when every structural record has a numeric twin within `tol` (in
/// normalized coordinates) and, when `exclusive`, the numeric census has no
/// extra isolated A1 points beyond the structural list.
pub fn censuses_agree(
    structural: &[SingularPointRecord],
    numeric: &[SingularPointRecord],
    tol: f64,
    exclusive: bool,
) -> bool {
    let num_pts: Vec<Vec<f64>> = numeric
        .iter()
        .filter_map(|r| r.point.as_f64())
        .map(|p| normalize_numeric(&p))
        .collect();
    let str_pts: Vec<Vec<f64>> = structural
        .iter()
        .filter_map(|r| r.point.as_f64())
        .map(|p| normalize_numeric(&p))
        .collect();
    let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol);
    let all_found = str_pts
        .iter()
        .all(|s| num_pts.iter().any(|n| close(s, n)));
    if !all_found {
        return false;
    }
    if exclusive {
        let no_extra = num_pts
            .iter()
            .all(|n| str_pts.iter().any(|s| close(s, n)));
        if !no_extra {
            return false;
        }
    }
    true
}
