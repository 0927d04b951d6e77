//! The t = 1 families: a V-representation with its h-spectrum, and the
//! nilpotent W-representations.
//!
//! ```text
//! cargo run --example quantum_reps
//! ```

use std::sync::Arc;

use cherednik::reps::{build_v, build_w, classification_value, h_spectrum, is_irreducible, verify_relations};
use cherednik::{make_field, AlgebraParams, Planck};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(make_field(3, 2)?);
    let params = AlgebraParams::new(ctx.clone(), 2, Planck::One, vec![ctx.one()])?;

    let beta = ctx.parse("0,1")?;
    let a = ctx.one();
    let b = classification_value(&params, beta); // ab must equal this
    let v = build_v(&params, beta, a, b)?;
    println!("{}: dim {}, relations ok: {}", v.label(), v.dim(), verify_relations(&v).all_passed());
    println!("irreducible: {}", is_irreducible(&v));
    for (lambda, mult) in h_spectrum(&v)?.eigenvalues {
        println!("  h eigenvalue {} with multiplicity {mult}", ctx.format(lambda));
    }

    for m in 0..params.r() {
        let w = build_w(&params, m);
        let mu: Vec<String> = w.mu().iter().map(|&e| ctx.format(e)).collect();
        println!("W_{m}: dim {}, mu = {mu:?}", w.dim());
    }
    Ok(())
}
