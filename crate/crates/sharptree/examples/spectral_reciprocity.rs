//! The nonzero eigenvalues of a group inverse are the reciprocals of the
//! original nonzero eigenvalues, so the spectral radius of the inverse
//! pins down the smallest positive eigenvalue of the tree.
//!
//! Run with: cargo run --example spectral_reciprocity

use sharptree::{fixtures, groupinv, spectral, Result};

fn main() -> Result<()> {
    let tree = fixtures::t1();
    let report = spectral::spectral_report(&tree, 1e-9)?;

    println!("adjacency eigenvalues: {:?}", report.eigenvalues_a);
    println!("sharp eigenvalues:     {:?}", report.eigenvalues_sharp);
    println!(
        "smallest positive eigenvalue tau = {:.12} (gap {:.3e}, simple: {})",
        report.tau, report.tau_gap, report.tau_simple
    );
    println!(
        "spectral radius of the sharp = {:.12}; tau * rho = {:.12}",
        report.rho_sharp,
        report.tau * report.rho_sharp
    );
    println!(
        "reciprocity residual = {:.3e} at tolerance {:.0e}",
        report.reciprocity_residual, report.tolerance
    );
    println!(
        "tau eigenvector min |entry| = {:.6} (no zero entries)",
        report.min_abs_entry
    );
    assert!(report.tau_simple);
    assert!((report.tau * report.rho_sharp - 1.0).abs() < 1e-9);

    // Irreducibility transfers between a matrix and its group inverse.
    let a = tree.adjacency_matrix();
    let sharp = groupinv::sharp_factorization(&a)?;
    assert_eq!(
        spectral::irreducibility_check(&a),
        spectral::irreducibility_check(&sharp)
    );
    println!("adjacency and sharp are both irreducible");

    // The star with weights 1 and 2 has tau = sqrt(5).
    let star = spectral::spectral_report(&fixtures::star12(), 1e-9)?;
    println!(
        "star tau = {:.12}, sqrt(5) = {:.12}",
        star.tau,
        5.0f64.sqrt()
    );
    Ok(())
}
