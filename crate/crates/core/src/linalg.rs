//! Dense linear-algebra primitives: validated design matrices, pseudo-inverses
//! and the hat-matrix / auxiliary diagonals that every sampling-score formula
//! consumes.
//!
//! The n×n hat matrix H = X X† is never materialized. With the thin SVD
//! X = U S Vᵀ cached at construction, its diagonal and the related diagonals
//! come straight from U and S:
//!
//!   h_l = (X X†)_{l,l}            = Σ_j U_{l,j}²
//!   g_l = (X (XᵀX)⁻² Xᵀ)_{l,l}    = Σ_j U_{l,j}² / s_j²
//!   r_l = (X Xᵀ)_{l,l}            = Σ_j X_{l,j}²

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// A validated n×p design matrix with full column rank and a cached thin SVD.
#[derive(Debug, Clone)]
pub struct DesignMatrix {
    entries: DMatrix<f64>,
    u: DMatrix<f64>,
    v_t: DMatrix<f64>,
    singular_values: DVector<f64>,
    rank: usize,
}

/// The p×n Moore-Penrose pseudo-inverse X† = (XᵀX)⁻¹Xᵀ of a full-rank design.
#[derive(Debug, Clone)]
pub struct PseudoInverse {
    entries: DMatrix<f64>,
}

/// Row-wise diagonals of a design matrix: leverages `h`, the estimator-score
/// diagonal `g`, and squared row norms `r`.
#[derive(Debug, Clone)]
pub struct LeverageProfile {
    pub h: Vec<f64>,
    pub g: Vec<f64>,
    pub r: Vec<f64>,
}

/// Validate entries and build a [`DesignMatrix`], caching the factorization
/// used by every downstream operation.
///
/// A singular value counts as zero below `max(n,p) · eps · s_max`; anything
/// short of full column rank is rejected.
pub fn build_design(entries: DMatrix<f64>) -> Result<DesignMatrix> {
    let (n, p) = entries.shape();
    if p < 1 || n < p {
        return Err(Error::InvalidValue {
            what: "design shape",
            detail: format!("need n >= p >= 1, got n={n}, p={p}"),
        });
    }
    for (idx, &value) in entries.iter().enumerate() {
        if !value.is_finite() {
            // nalgebra stores column-major
            return Err(Error::InvalidEntry {
                row: idx % n,
                col: idx / n,
                value,
            });
        }
    }

    let svd = entries.clone().svd(true, true);
    let u = svd.u.expect("svd requested u");
    let v_t = svd.v_t.expect("svd requested v_t");
    let s = svd.singular_values;

    let s_max = s.iter().cloned().fold(0.0f64, f64::max);
    let tol = (n.max(p) as f64) * f64::EPSILON * s_max;
    let rank = s.iter().filter(|&&sv| sv > tol).count();
    if rank < p {
        return Err(Error::RankDeficient { rank, cols: p });
    }

    Ok(DesignMatrix {
        entries,
        u,
        v_t,
        singular_values: s,
        rank,
    })
}

impl DesignMatrix {
    /// Build from dense row-major values.
    pub fn from_rows(n: usize, p: usize, row_major: &[f64]) -> Result<Self> {
        if row_major.len() != n * p {
            return Err(Error::DimensionMismatch {
                context: "row-major design data",
                expected: n * p,
                actual: row_major.len(),
            });
        }
        build_design(DMatrix::from_row_slice(n, p, row_major))
    }

    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    pub fn p(&self) -> usize {
        self.entries.ncols()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// X v for a length-p vector.
    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.entries * v
    }
}

/// X† = V S⁻¹ Uᵀ from the cached factorization. The normal-equations inverse
/// (XᵀX)⁻¹ is never formed; heavy-tailed designs make it ill-conditioned.
pub fn pseudo_inverse(x: &DesignMatrix) -> PseudoInverse {
    let p = x.p();
    let mut v_s_inv = x.v_t.transpose();
    for j in 0..p {
        let inv = 1.0 / x.singular_values[j];
        for i in 0..p {
            v_s_inv[(i, j)] *= inv;
        }
    }
    PseudoInverse {
        entries: v_s_inv * x.u.transpose(),
    }
}

impl PseudoInverse {
    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// Output dimension p.
    pub fn p(&self) -> usize {
        self.entries.nrows()
    }

    /// Input dimension n.
    pub fn n(&self) -> usize {
        self.entries.ncols()
    }

    /// X† y.
    pub fn apply(&self, y: &DVector<f64>) -> DVector<f64> {
        &self.entries * y
    }

    /// Column l of X†, scaled; accumulated into `out`. This is the O(p)
    /// kernel behind the sampled-projection estimator.
    pub fn accumulate_scaled_column(&self, col: usize, scale: f64, out: &mut DVector<f64>) {
        let column = self.entries.column(col);
        for i in 0..self.entries.nrows() {
            out[i] += scale * column[i];
        }
    }

    /// Σ_i (X†)²_{i,l} for column l.
    pub fn column_squared_norm(&self, col: usize) -> f64 {
        self.entries.column(col).norm_squared()
    }
}

/// Hat-matrix diagonal and friends, computed from the cached factorization.
///
/// Exactly-zero rows of X are forced to h = g = 0: a zero row contributes
/// nothing to any estimator, and the score modules key their zero-probability
/// rule off `h_l == 0`.
pub fn leverage_profile(x: &DesignMatrix) -> LeverageProfile {
    let n = x.n();
    let p = x.p();
    let mut h = vec![0.0; n];
    let mut g = vec![0.0; n];
    let mut r = vec![0.0; n];

    for l in 0..n {
        let mut row_sq = 0.0;
        for j in 0..p {
            let e = x.entries[(l, j)];
            row_sq += e * e;
        }
        r[l] = row_sq;
        if row_sq == 0.0 {
            continue;
        }
        let mut hl = 0.0;
        let mut gl = 0.0;
        for j in 0..p {
            let uij = x.u[(l, j)];
            let s = x.singular_values[j];
            hl += uij * uij;
            gl += (uij * uij) / (s * s);
        }
        h[l] = hl;
        g[l] = gl;
    }

    LeverageProfile { h, g, r }
}

impl LeverageProfile {
    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    /// Σ_l h_l; equals p for a full-rank design up to roundoff.
    pub fn leverage_sum(&self) -> f64 {
        self.h.iter().sum()
    }
}
