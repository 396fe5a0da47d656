//! Sturm-sequence bisection for symmetric tridiagonal matrices.
//!
//! The eigenvalue count below a shift comes from the signs of the LDL^T
//! pivots; each eigenvalue is then bracketed by bisection inside the
//! Gershgorin interval. Guaranteed bracketing is what the decay-rate bound
//! checks need, and the matrices here are small, so this beats QR iteration.

use crate::num::{r, Real};

/// Number of eigenvalues strictly less than `shift`.
///
/// Counts negative pivots of the LDL^T factorization of `T - shift I`. A
/// vanishing pivot is replaced by `-pivot_min` (counted negative), the usual
/// convention.
pub fn sturm_count<F: Real>(diag: &[F], off: &[F], shift: F, pivot_min: F) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let mut count = 0usize;
    let mut q = diag[0] - shift;
    if q < F::zero() {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < pivot_min { -pivot_min } else { q };
        q = (diag[i] - shift) - off[i - 1] * off[i - 1] / q_safe;
        if q < F::zero() {
            count += 1;
        }
    }
    count
}

/// Gershgorin bounds (lo, hi) enclosing the whole spectrum.
pub fn gershgorin<F: Real>(diag: &[F], off: &[F]) -> (F, F) {
    let n = diag.len();
    let mut lo = F::infinity();
    let mut hi = F::neg_infinity();
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { F::zero() };
        let right = if i + 1 < n { off[i].abs() } else { F::zero() };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

fn matrix_scale<F: Real>(diag: &[F], off: &[F]) -> F {
    let mut s = F::one();
    for d in diag {
        s = s.max(d.abs());
    }
    for e in off {
        s = s.max(e.abs());
    }
    s
}

/// All eigenvalues in ascending order, each bracketed to relative tolerance
/// `rel_tol`.
pub fn eigenvalues<F: Real>(diag: &[F], off: &[F], rel_tol: F) -> Vec<F> {
    let n = diag.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![diag[0]];
    }
    let scale = matrix_scale(diag, off);
    let pivot_min = (F::epsilon() * scale).powi(2).max(F::min_positive_value());
    let (mut glo, mut ghi) = gershgorin(diag, off);
    glo = glo - F::one();
    ghi = ghi + F::one();

    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        // invariant: count(a) <= k < count(b)
        let mut a = glo;
        let mut b = ghi;
        for _ in 0..200 {
            let mid = r::<F>(0.5) * (a + b);
            let width = b - a;
            if width <= rel_tol * mid.abs().max(F::one()) {
                break;
            }
            if sturm_count(diag, off, mid, pivot_min) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(r::<F>(0.5) * (a + b));
    }
    out
}

/// Eigenvector of a symmetric tridiagonal matrix for a computed eigenvalue,
/// by the three-term recurrence, normalized to unit length.
///
/// Adequate for the small, well-separated spectra used here; not a general
/// replacement for inverse iteration.
pub fn eigenvector<F: Real>(diag: &[F], off: &[F], lambda: F) -> Vec<F> {
    let n = diag.len();
    let mut w = vec![F::zero(); n];
    w[0] = F::one();
    if n > 1 {
        w[1] = (lambda - diag[0]) / off[0];
        for k in 1..n - 1 {
            w[k + 1] = ((lambda - diag[k]) * w[k] - off[k - 1] * w[k - 1]) / off[k];
        }
    }
    let norm = w.iter().map(|x| *x * *x).sum::<F>().sqrt();
    for x in w.iter_mut() {
        *x = *x / norm;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_brackets_a_2x2() {
        // [[-2, s2], [s2, -2]] has eigenvalues -2 -+ sqrt(2)
        let s2 = 2.0f64.sqrt();
        let diag = [-2.0, -2.0];
        let off = [s2];
        let evs = eigenvalues(&diag, &off, 1e-14);
        assert!((evs[0] - (-2.0 - s2)).abs() < 1e-12);
        assert!((evs[1] - (-2.0 + s2)).abs() < 1e-12);
        let (lo, hi) = gershgorin(&diag, &off);
        assert_eq!(sturm_count(&diag, &off, lo - 1.0, 1e-30), 0);
        assert_eq!(sturm_count(&diag, &off, hi + 1.0, 1e-30), 2);
    }

    #[test]
    fn eigenvector_satisfies_the_recurrence() {
        let s2 = 2.0f64.sqrt();
        let diag = [-2.0, -2.0];
        let off = [s2];
        let lam = -2.0 + s2;
        let w = eigenvector(&diag, &off, lam);
        // T w = lam w
        let t0 = diag[0] * w[0] + off[0] * w[1];
        let t1 = off[0] * w[0] + diag[1] * w[1];
        assert!((t0 - lam * w[0]).abs() < 1e-12);
        assert!((t1 - lam * w[1]).abs() < 1e-12);
    }

    #[test]
    fn works_in_f32_too() {
        let diag = [-2.0f32, -2.0];
        let off = [std::f32::consts::SQRT_2];
        let evs = eigenvalues(&diag, &off, 1e-6);
        assert!((evs[1] - (-2.0 + std::f32::consts::SQRT_2)).abs() < 1e-5);
    }
}
