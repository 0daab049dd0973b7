//! Floating-point spectral analysis.
//!
//! The nonzero eigenvalues of a group inverse are the reciprocals of the
//! nonzero eigenvalues of the original matrix; for positively weighted
//! trees whose non-pendant vertices all have pendant neighbours, the
//! smallest positive eigenvalue is simple and has an eigenvector with no
//! zero entry. This module checks those claims numerically with a cyclic
//! Jacobi eigensolver; exact rationals are rounded to the nearest float
//! once, on entry.

use crate::error::{Error, Result};
use crate::groupinv;
use crate::matrix::ExactMatrix;
use crate::tree::WeightedTree;

/// Default tolerance for residual and simplicity checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Jacobi sweep convergence threshold (scaled by the matrix norm).
const JACOBI_EPS: f64 = 1e-12;

/// Relative cutoff below which an eigenvalue counts as zero.
const ZERO_CUTOFF_FACTOR: f64 = 1e-10;

/// Eigenvalues (ascending) with matching eigenvectors of a symmetric
/// matrix, from cyclic Jacobi rotations.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`; its largest
    /// component is made positive for determinism.
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi eigensolver for a symmetric matrix given as rows.
#[allow(clippy::needless_range_loop)] // index pairs mirror the rotation algebra
pub fn symmetric_eigen(rows: &[Vec<f64>]) -> SymmetricEigen {
    let n = rows.len();
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let scale: f64 = rows
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    let eps = JACOBI_EPS * scale.max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() <= eps {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() <= eps * 1e-3 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let values: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| {
            let mut vec: Vec<f64> = (0..n).map(|row| v[row][col]).collect();
            let norm = vec.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                for x in vec.iter_mut() {
                    *x /= norm;
                }
            }
            let lead = vec
                .iter()
                .cloned()
                .fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
            if lead < 0.0 {
                for x in vec.iter_mut() {
                    *x = -*x;
                }
            }
            vec
        })
        .collect();
    SymmetricEigen { values, vectors }
}

fn eigenvalues_of_exact(m: &ExactMatrix) -> SymmetricEigen {
    symmetric_eigen(&m.to_f64_rows())
}

fn zero_cutoff(m: &ExactMatrix) -> f64 {
    ZERO_CUTOFF_FACTOR * m.max_abs_f64().max(1.0)
}

/// Max difference between the sorted reciprocals of the nonzero
/// eigenvalues of `a` and the sorted nonzero eigenvalues of `sharp`.
fn reciprocity_residual_of(a: &ExactMatrix, sharp: &ExactMatrix) -> f64 {
    let cutoff_a = zero_cutoff(a);
    let cutoff_s = zero_cutoff(sharp);
    let mut recip: Vec<f64> = eigenvalues_of_exact(a)
        .values
        .into_iter()
        .filter(|x| x.abs() > cutoff_a)
        .map(|x| 1.0 / x)
        .collect();
    let mut nonzero_sharp: Vec<f64> = eigenvalues_of_exact(sharp)
        .values
        .into_iter()
        .filter(|x| x.abs() > cutoff_s)
        .collect();
    recip.sort_by(|x, y| x.total_cmp(y));
    nonzero_sharp.sort_by(|x, y| x.total_cmp(y));
    if recip.len() != nonzero_sharp.len() {
        return f64::INFINITY;
    }
    recip
        .iter()
        .zip(&nonzero_sharp)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Outcome of the reciprocity comparison at a given tolerance.
#[derive(Debug, Clone, Copy)]
pub struct ReciprocityCheck {
    pub residual: f64,
    pub within_tol: bool,
}

/// Compare the nonzero spectrum of the group inverse against the
/// reciprocals of the tree's nonzero spectrum.
pub fn reciprocity_check(tree: &WeightedTree, tol: f64) -> Result<ReciprocityCheck> {
    let a = tree.adjacency_matrix();
    let sharp = groupinv::sharp_factorization(&a)?;
    let residual = reciprocity_residual_of(&a, &sharp);
    Ok(ReciprocityCheck {
        residual,
        within_tol: residual <= tol,
    })
}

/// Spectral summary of a tree and its group inverse.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    /// Eigenvalues of the adjacency matrix, ascending.
    pub eigenvalues_a: Vec<f64>,
    /// Eigenvalues of the group inverse, ascending.
    pub eigenvalues_sharp: Vec<f64>,
    /// Smallest positive eigenvalue of the adjacency matrix.
    pub tau: f64,
    /// Spectral radius of the group inverse.
    pub rho_sharp: f64,
    /// True when no other eigenvalue lies within `tolerance` of `tau`.
    pub tau_simple: bool,
    /// Distance from `tau` to the nearest other eigenvalue.
    pub tau_gap: f64,
    /// Unit eigenvector for `tau`.
    pub eigenvector_tau: Vec<f64>,
    /// Smallest absolute entry of that eigenvector.
    pub min_abs_entry: f64,
    /// Max mismatch between reciprocal nonzero spectra.
    pub reciprocity_residual: f64,
    pub tolerance: f64,
}

/// Full spectral report at tolerance `tol`.
///
/// Errors with `NoPositiveEigenvalue` for the zero matrix (the
/// single-vertex tree) and `ToleranceTooTight` when the reciprocity
/// residual exceeds `tol`.
pub fn spectral_report(tree: &WeightedTree, tol: f64) -> Result<SpectralReport> {
    let a = tree.adjacency_matrix();
    let sharp = groupinv::sharp_factorization(&a)?;
    let eig_a = eigenvalues_of_exact(&a);
    let eig_sharp = eigenvalues_of_exact(&sharp);
    let cutoff = zero_cutoff(&a);
    let tau_idx = eig_a
        .values
        .iter()
        .position(|&x| x > cutoff)
        .ok_or(Error::NoPositiveEigenvalue)?;
    let tau = eig_a.values[tau_idx];
    let tau_gap = eig_a
        .values
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != tau_idx)
        .map(|(_, &x)| (x - tau).abs())
        .fold(f64::INFINITY, f64::min);
    let tau_simple = tau_gap > tol;
    let eigenvector_tau = eig_a.vectors[tau_idx].clone();
    let min_abs_entry = eigenvector_tau
        .iter()
        .map(|x| x.abs())
        .fold(f64::INFINITY, f64::min);
    let rho_sharp = eig_sharp.values.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let reciprocity_residual = reciprocity_residual_of(&a, &sharp);
    if reciprocity_residual > tol {
        return Err(Error::ToleranceTooTight {
            residual: reciprocity_residual,
            tol,
        });
    }
    Ok(SpectralReport {
        eigenvalues_a: eig_a.values,
        eigenvalues_sharp: eig_sharp.values,
        tau,
        rho_sharp,
        tau_simple,
        tau_gap,
        eigenvector_tau,
        min_abs_entry,
        reciprocity_residual,
        tolerance: tol,
    })
}

/// True iff the nonzero pattern of a symmetric matrix is connected as a
/// graph (equivalently, the matrix is irreducible).
pub fn irreducibility_check(m: &ExactMatrix) -> bool {
    assert!(m.is_square(), "irreducibility needs a square matrix");
    let n = m.order();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if !seen[w]
                && (!num_traits::Zero::is_zero(&m[(v, w)])
                    || !num_traits::Zero::is_zero(&m[(w, v)]))
            {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tree::WeightedTree;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn p5_spectrum_is_two_cosines() {
        let r = spectral_report(&fixtures::p5(), DEFAULT_TOL).unwrap();
        let sqrt3 = 3.0f64.sqrt();
        let expect = [-sqrt3, -1.0, 0.0, 1.0, sqrt3];
        for (got, want) in r.eigenvalues_a.iter().zip(expect) {
            assert!(close(*got, want, 1e-10), "{got} vs {want}");
        }
        assert!(close(r.tau, 1.0, 1e-10));
        assert!(close(r.rho_sharp, 1.0, 1e-10));
        assert!(r.reciprocity_residual <= 1e-9);
    }

    #[test]
    fn star_spectrum_is_plus_minus_sqrt5() {
        let r = spectral_report(&fixtures::star12(), DEFAULT_TOL).unwrap();
        let sqrt5 = 5.0f64.sqrt();
        assert!(close(r.tau, sqrt5, 1e-10));
        assert!(close(r.rho_sharp, 1.0 / sqrt5, 1e-10));
        assert!(r.tau_simple);
        assert!(r.min_abs_entry > 1e-8);
    }

    #[test]
    fn t1_tau_simple_with_nonvanishing_eigenvector() {
        let r = spectral_report(&fixtures::t1(), DEFAULT_TOL).unwrap();
        assert!(r.tau_simple);
        assert!(r.tau_gap > 1e-8);
        assert!(r.min_abs_entry > 1e-8);
    }

    #[test]
    fn reciprocity_on_fixtures() {
        for t in [fixtures::p5(), fixtures::t6(), fixtures::t1()] {
            let c = reciprocity_check(&t, 1e-9).unwrap();
            assert!(c.within_tol, "residual {}", c.residual);
        }
        let k2 = WeightedTree::parse("1 2 5").unwrap();
        let c = reciprocity_check(&k2, 1e-12).unwrap();
        assert!(c.residual <= 1e-12);
    }

    #[test]
    fn no_positive_eigenvalue_for_single_vertex() {
        let t = WeightedTree::new(vec!["a".into()], vec![]).unwrap();
        assert!(matches!(
            spectral_report(&t, DEFAULT_TOL),
            Err(Error::NoPositiveEigenvalue)
        ));
    }

    #[test]
    fn irreducibility_of_fixtures_and_blocks() {
        for t in [fixtures::p5(), fixtures::t1()] {
            let a = t.adjacency_matrix();
            let sharp = groupinv::sharp_factorization(&a).unwrap();
            assert!(irreducibility_check(&a));
            assert!(irreducibility_check(&sharp));
        }
        let block = ExactMatrix::from_int_rows(&[
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 2],
            &[0, 0, 2, 0],
        ]);
        assert!(!irreducibility_check(&block));
    }

    #[test]
    fn signature_similarity_preserves_spectra() {
        let t = fixtures::t6();
        let sharp = groupinv::sharp_factorization(&t.adjacency_matrix()).unwrap();
        let sig = crate::signature::SignatureVector {
            root: 0,
            n_values: Vec::new(),
            signs: vec![1, -1, 1, -1, 1, -1],
        };
        let signed = crate::signature::apply_signature(&sharp, &sig).unwrap();
        let e1 = symmetric_eigen(&sharp.to_f64_rows()).values;
        let e2 = symmetric_eigen(&signed.to_f64_rows()).values;
        for (a, b) in e1.iter().zip(&e2) {
            assert!(close(*a, *b, 1e-10));
        }
    }

    #[test]
    fn jacobi_handles_known_matrix() {
        // Eigenvalues of [[2,1],[1,2]] are 1 and 3.
        let e = symmetric_eigen(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!(close(e.values[0], 1.0, 1e-12));
        assert!(close(e.values[1], 3.0, 1e-12));
        // Eigenvector for 3 is (1,1)/sqrt(2).
        let v = &e.vectors[1];
        assert!(close(v[0], v[1], 1e-12));
    }
}
