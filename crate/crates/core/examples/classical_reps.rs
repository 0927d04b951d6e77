//! The t = 0 case: V-representations of dimension r on which h acts as the
//! scalar beta.
//!
//! ```text
//! cargo run --example classical_reps
//! ```

use std::sync::Arc;

use cherednik::reps::{build_v, build_w, classification_value, verify_relations};
use cherednik::{make_field, AlgebraParams, Planck};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(make_field(7, 1)?);
    let c = vec![ctx.from_int(1), ctx.from_int(3)];
    let params = AlgebraParams::new(ctx.clone(), 3, Planck::Zero, c)?;
    println!("epsilon = {}", ctx.format(params.epsilon()));

    for beta in [0, 2, 5].map(|v| ctx.from_int(v)) {
        let ab = classification_value(&params, beta);
        if ab.is_zero() {
            println!("beta = {}: ab = 0, use the W family", ctx.format(beta));
            continue;
        }
        let v = build_v(&params, beta, ctx.one(), ab)?;
        let report = verify_relations(&v);
        println!("{} with (a, b) = (1, {}):", v.label(), ctx.format(ab));
        for check in &report.checks {
            println!("  {:<26} {}", check.name, if check.passed { "ok" } else { "FAILED" });
        }
    }

    for m in 0..params.r() {
        println!("W_{m}: dim {}", build_w(&params, m).dim());
    }
    Ok(())
}
