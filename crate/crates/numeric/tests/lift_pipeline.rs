//! End-to-end exercise of the lift pipeline against the embedded data.
//! Expensive, so the heavy paths run only when asked for explicitly; the
//! budgeted verification command drives them in production.

use ballq_algebra::GaussianRational;
use ballq_numeric::{find_lambda, lift_to_z, CplxF, LiftContext};
use ballq_surface::PaperDataset;

#[test]
#[ignore]
fn lambda_and_lift_on_exact_line_point() {
    let ds = PaperDataset::load().unwrap();
    let t0 = std::time::Instant::now();
    let ctx = LiftContext::build(&ds).unwrap();
    println!("context built in {:?}", t0.elapsed());
    println!(
        "z quadrics: {}, u split {:?}",
        ctx.z_quadrics.len(),
        ctx.u_split
    );

    // exact point on the seed line at (u : v) = (2+i : 1)
    let u = GaussianRational::from_parts(2, 1, 1);
    let v = GaussianRational::from_parts(1, 0, 1);
    let point: Vec<GaussianRational> = ds
        .line_u
        .iter()
        .zip(&ds.line_v)
        .map(|(a, b)| &(&u * a) + &(&v * b))
        .collect();

    let t0 = std::time::Instant::now();
    let report = find_lambda(&ctx, &point, creation_seed(), 256).unwrap();
    println!(
        "lambda found in {:?} after {} refined starts: {:?}, residual {}",
        t0.elapsed(),
        report.starts_used,
        report.lambda.to_f64_pair(),
        report.residual.describe()
    );
    if let Some(ref q) = report.recognized {
        println!("recognized lambda = {q}");
    }

    // lift the same point numerically on both branches
    let base: Vec<CplxF> = point
        .iter()
        .map(|q| CplxF::from_gaussian_rational(q, 256))
        .collect();
    for sign in [1, -1] {
        let t0 = std::time::Instant::now();
        match lift_to_z(&ctx, &base, &report.lambda, sign, 7, 256) {
            Ok(pt) => println!(
                "sign {sign}: lifted in {:?}, residual {}",
                t0.elapsed(),
                pt.residual.describe()
            ),
            Err(e) => println!("sign {sign}: {e}"),
        }
    }
}

fn creation_seed() -> u64 {
    11
}
