use ballq_algebra::{PrimeField, VariableFrame};
use ballq_grouprep::*;
use ballq_surface::PaperDataset;

fn main() {
    let ds = PaperDataset::load().unwrap();
    let field = PrimeField::default_field();

    // y-side
    let frame_y = VariableFrame::numbered("y", 7);
    let gy_rep = ds.g_xy.restrict_block(6..13, frame_y.clone()).unwrap();
    let t0 = std::time::Instant::now();
    let gy = FiniteGroupClosure::compute(&gy_rep, 7000).unwrap();
    println!("y closure {} in {:?}", gy.order(), t0.elapsed());
    let action_y3 = InducedAction::new(frame_y.clone(), 3);
    let inv_y3 = invariant_subspace(&gy, &action_y3, &field).unwrap();
    println!("invariant cubics on y: {} (bound {})", inv_y3.polynomials.len(), inv_y3.modular_bound);

    // transport tuples
    let t0 = std::time::Instant::now();
    let gxyz = FiniteGroupClosure::compute(&ds.g_xyz, 7000).unwrap();
    println!("xyz closure {} in {:?}", gxyz.order(), t0.elapsed());
    let action2 = InducedAction::new(ds.frame_xyz.clone(), 2);
    for (name, off) in [("xz", 0usize), ("yz", 6)] {
        for a in 0..2 {
            for b in 0..2 {
                let m = ballq_algebra::Monomial::var(27, off + a)
                    .mul(&ballq_algebra::Monomial::var(27, 13 + b));
                let idx = action2.index_of(&m).unwrap();
                let mut w = vec![ballq_algebra::GaussianRational::zero(); action2.dim()];
                w[idx] = ballq_algebra::GaussianRational::one();
                let t0 = std::time::Instant::now();
                let tuple = transport_tuple(&gxyz, &action2, 0..6, 0, &w).unwrap();
                let nonzero = tuple
                    .iter()
                    .filter(|v| v.iter().any(|c| !c.is_zero()))
                    .count();
                println!("{name} seed ({a},{b}): {nonzero}/6 nonzero in {:?}", t0.elapsed());
            }
        }
    }

    // u basis
    let g21 = FiniteGroupClosure::compute(&ds.g21_xyz, 100).unwrap();
    let inv_u = invariant_subspace(&g21, &action2, &field).unwrap();
    println!("u basis: {} (bound {})", inv_u.polynomials.len(), inv_u.modular_bound);
}
